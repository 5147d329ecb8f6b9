use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod bc;
mod commands;

#[derive(Parser, Debug)]
#[command(name = "qbost", version, about = "Witt vectors, zeta functions and q-deformed Bost–Connes algebras")]
#[command(arg_required_else_help = true)]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Big Witt vectors with rational entries.
    #[command(subcommand)]
    Witt(WittCmd),
    /// q-deformed Witt vectors and the q-deformed Grothendieck ring.
    #[command(subcommand)]
    Qwitt(QwittCmd),
    /// Graded W_0 rings of the geometric deformations.
    #[command(subcommand)]
    Geodef(GeodefCmd),
    /// Zeta functions of varieties over finite fields.
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Bost–Connes algebras.
    #[command(subcommand)]
    Bc(BcCmd),
    /// Quantum statistical mechanics.
    #[command(subcommand)]
    Qsm(QsmCmd),
}

#[derive(Args, Debug)]
struct Pair {
    /// JSON array of rationals, e.g. '["1","1/2"]'.
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
}

#[derive(Subcommand, Debug)]
enum WittCmd {
    Add(Pair),
    Mul(Pair),
    /// Ghost components of a Witt vector.
    Ghost {
        #[arg(long)]
        x: String,
    },
    /// Witt vector with the given ghost components.
    Unghost {
        #[arg(long)]
        g: String,
    },
    Frob {
        #[arg(long)]
        x: String,
        #[arg(long)]
        n: usize,
    },
    Versch {
        #[arg(long)]
        x: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum QwittCmd {
    /// q-ghost components.
    Ghost {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        x: String,
    },
    /// Product of q-Witt vectors.
    Mul {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// The deformed product on series `{"order", "coeffs"}`.
    #[command(name = "star_q")]
    StarQ {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Checks the ghost, Frobenius and Verschiebung squares for a W_0 element.
    Diagram {
        #[arg(long)]
        w0: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Raw and rescaled divisor of the deformed characteristic series.
    Rescale {
        #[arg(long)]
        w0: String,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Subcommand, Debug)]
enum GeodefCmd {
    /// Places a W_0 element in a grade.
    Omega {
        #[arg(long)]
        w0: String,
        #[arg(long)]
        grade: String,
        #[arg(long)]
        kind: String,
    },
    Mul {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    Frob {
        #[arg(long)]
        x: String,
        #[arg(long)]
        n: u64,
    },
    Versch {
        #[arg(long)]
        x: String,
        #[arg(long)]
        n: u64,
    },
    Divisor {
        #[arg(long)]
        x: String,
    },
}

#[derive(Subcommand, Debug)]
enum ZetaCmd {
    /// Z(A^l).
    Affine {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Z(P^n).
    Projective {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Z(X x Y).
    Product {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Z(X disjoint-union Y).
    Union {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Z(X x A^l).
    Shift {
        #[arg(long)]
        x: String,
        #[arg(long)]
        l: u64,
    },
    /// Necklace numbers M(q, r) for r = 1..order.
    Necklace {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
}

#[derive(Args, Debug)]
struct RingArg {
    /// Z, Q, R (q-deformed) or habiro:N,D.
    #[arg(long, default_value = "Z")]
    ring: String,
}

#[derive(Subcommand, Debug)]
enum BcCmd {
    /// Normal form of a word such as '[{"mustar":2},{"mu":2}]'.
    Normalize {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        word: String,
    },
    /// Product of two normal forms.
    Mul {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Dirichlet,
    Euler,
}

#[derive(Subcommand, Debug)]
enum QsmCmd {
    /// zeta_q(s).
    Zeta {
        #[arg(long)]
        q: f64,
        #[arg(long)]
        s: f64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Method::Dirichlet)]
        method: Method,
    },
    /// Partition function of the weighted system, sum_n zeta_q(n beta) n^(-beta).
    Partition {
        #[arg(long)]
        q: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 40)]
        terms: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Time-evolution covariance on sampled basis vectors.
    Check {
        #[arg(long)]
        system: String,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(v) => {
            let out = match cli.format {
                Format::Json => v.to_string(),
                Format::Pretty => serde_json::to_string_pretty(&v).expect("values serialize"),
            };
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", serde_json::json!({"error": e.to_string()}));
            ExitCode::from(1)
        }
    }
}
