//! Hamiltonians, time evolutions and their covariance in the representations.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::ring::to_f64;
use crate::exact::{int, rat, QmodZ, Rational};
use crate::qsm::brackets::log_curly;
use crate::qsm::rep::{apply, apply_word, BasisKind, Embedding, Op, StateVector, WeightSpec};

/// Deviation below which a check passes.
pub const COVARIANCE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SystemKind {
    /// `H epsilon_m = log(m) epsilon_m`.
    Classic,
    /// `H epsilon_m = log({m}_q) epsilon_m`.
    QClassic,
    /// `H epsilon_(m, lambda) = (log(m) - m log h(lambda)) epsilon_(m, lambda)`.
    Weighted,
}

impl SystemKind {
    pub fn name(&self) -> &'static str {
        match self {
            SystemKind::Classic => "classic",
            SystemKind::QClassic => "qclassic",
            SystemKind::Weighted => "weighted",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "classic" => Ok(SystemKind::Classic),
            "qclassic" => Ok(SystemKind::QClassic),
            "weighted" => Ok(SystemKind::Weighted),
            _ => Err(Error::Parse(format!("unknown system {s:?}"))),
        }
    }

    pub fn basis_kind(&self) -> BasisKind {
        match self {
            SystemKind::Weighted => BasisKind::Deformed,
            _ => BasisKind::Natural,
        }
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct QsmSystem {
    pub kind: SystemKind,
    pub q: f64,
    pub weights: WeightSpec,
    pub embedding: Embedding,
}

impl QsmSystem {
    pub fn new(kind: SystemKind, q: f64) -> Self {
        QsmSystem {
            kind,
            q,
            weights: WeightSpec::standard(q),
            embedding: Embedding::default(),
        }
    }

    pub fn energy(&self, m: u64, r: &Rational) -> f64 {
        hamiltonian_eig(self.kind, m, r, self.q, &self.weights)
    }

    /// `e^(itH) v`.
    pub fn evolve(&self, v: &StateVector, t: f64) -> StateVector {
        let mut out = StateVector::zero(v.kind());
        for (m, r, c) in v.terms() {
            out.add_term(m, r.clone(), c * Complex64::from_polar(1.0, t * self.energy(m, r)));
        }
        out
    }

    /// `sigma_t(op)` as a scalar times a word.
    pub fn sigma_t(&self, op: &Op, t: f64) -> (Complex64, Vec<Op>) {
        let it = |x: f64| Complex64::from_polar(1.0, t * x);
        let n_factor = |n: u64| match self.kind {
            SystemKind::QClassic => log_curly(n, self.q),
            _ => (n as f64).ln(),
        };
        let one = Complex64::new(1.0, 0.0);
        match op {
            Op::Mu(n) => (it(n_factor(*n)), vec![op.clone()]),
            Op::MuStar(n) => (it(-n_factor(*n)), vec![op.clone()]),
            Op::E { r, .. } if self.kind == SystemKind::Weighted => (
                one,
                vec![
                    Op::Omega {
                        z: Complex64::new(0.0, -t),
                        lambda: r.clone(),
                    },
                    op.clone(),
                ],
            ),
            _ => (one, vec![op.clone()]),
        }
    }

    /// Generators used by [`QsmSystem::check`].
    pub fn generators(&self) -> Vec<Op> {
        let mut ops = Vec::new();
        for n in [2, 3, 4, 6] {
            ops.push(Op::Mu(n));
            ops.push(Op::MuStar(n));
        }
        for (a, b) in [(1, 2), (1, 3), (2, 5), (5, 12)] {
            ops.push(Op::E {
                r: int(0),
                torsion: QmodZ::new(a, b),
            });
        }
        if self.kind == SystemKind::Weighted {
            for (r, (a, b)) in [(rat(1, 2), (0, 1)), (int(1), (1, 3)), (rat(3, 4), (1, 4))] {
                ops.push(Op::E {
                    r,
                    torsion: QmodZ::new(a, b),
                });
            }
            ops.push(Op::Omega {
                z: Complex64::new(0.3, 0.2),
                lambda: rat(1, 2),
            });
            ops.push(Op::Omega {
                z: Complex64::new(0.0, -0.5),
                lambda: int(2),
            });
        }
        ops
    }

    /// Max deviation of `e^(itH) pi(op) e^(-itH) = pi(sigma_t(op))` over `samples`.
    pub fn covariance(&self, op: &Op, t: f64, samples: &[StateVector]) -> Result<f64> {
        let w = Some(&self.weights);
        let emb = &self.embedding;
        let (scalar, word) = self.sigma_t(op, t);
        let mut dev = 0.0f64;
        for v in samples {
            let lhs = self.evolve(&apply(op, &self.evolve(v, -t), emb, w)?, t);
            let rhs = apply_word(&word, v, emb, w)?.scale(scalar);
            dev = dev.max(lhs.distance(&rhs));
        }
        Ok(dev)
    }

    /// Covariance for every generator, plus `mu_n^* mu_n = 1` and the range projection of `mu_n mu_n^*`.
    pub fn check(&self, t: f64, samples: &[StateVector]) -> Result<Vec<CheckReport>> {
        for v in samples {
            if v.kind() != self.kind.basis_kind() {
                return Err(Error::KindMismatch(format!("sample vector for the {} system", self.kind)));
            }
        }
        let mut out = Vec::new();
        for op in self.generators() {
            let d = self.covariance(&op, t, samples)?;
            out.push(CheckReport::new(format!("sigma_t({op})"), d));
        }
        let w = Some(&self.weights);
        let emb = &self.embedding;
        for n in [2u64, 3, 5] {
            let mut iso = 0.0f64;
            let mut proj = 0.0f64;
            for v in samples {
                let back = apply_word(&[Op::MuStar(n), Op::Mu(n)], v, emb, w)?;
                iso = iso.max(back.distance(v));
                let p = apply_word(&[Op::Mu(n), Op::MuStar(n)], v, emb, w)?;
                let mut expect = StateVector::zero(v.kind());
                for (m, r, c) in v.terms() {
                    if m % n == 0 {
                        expect.add_term(m, r.clone(), c);
                    }
                }
                proj = proj.max(p.distance(&expect));
            }
            out.push(CheckReport::new(format!("mu_{n}^* mu_{n} = 1"), iso));
            out.push(CheckReport::new(format!("mu_{n} mu_{n}^* kills n not dividing m"), proj));
        }
        Ok(out)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct CheckReport {
    pub name: String,
    pub max_deviation: f64,
    pub pass: bool,
}

impl CheckReport {
    fn new(name: String, max_deviation: f64) -> Self {
        CheckReport {
            name,
            pass: max_deviation < COVARIANCE_TOL,
            max_deviation,
        }
    }
}

/// Eigenvalue of the Hamiltonian on `epsilon_(m, q^r)`.
pub fn hamiltonian_eig(kind: SystemKind, m: u64, r: &Rational, q: f64, weights: &WeightSpec) -> f64 {
    match kind {
        SystemKind::Classic => (m as f64).ln(),
        SystemKind::QClassic => log_curly(m, q),
        SystemKind::Weighted => (m as f64).ln() - m as f64 * weights.log_h(r),
    }
}

/// A deterministic spread of basis vectors: `m = 1..=count` and small rational exponents.
pub fn sample_basis(kind: BasisKind, count: usize) -> Vec<StateVector> {
    (0..count)
        .map(|i| {
            let m = i as u64 + 1;
            match kind {
                BasisKind::Natural => StateVector::basis(m),
                BasisKind::Deformed => StateVector::basis_deformed(m, rat((i % 5) as i64, (1 + i % 3) as i64)),
            }
        })
        .collect()
}

pub fn covariance_check(kind: SystemKind, q: f64, t: f64, samples: usize) -> Result<Vec<CheckReport>> {
    let sys = QsmSystem::new(kind, q);
    sys.check(t, &sample_basis(kind.basis_kind(), samples))
}

/// Float image of an exact exponent, for reporting.
pub fn exponent_f64(r: &Rational) -> f64 {
    to_f64(r)
}
