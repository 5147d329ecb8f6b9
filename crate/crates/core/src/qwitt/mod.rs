//! q-deformed Witt vectors, `Lambda^q`, `A^q[t]`, and the compatibility checks for `L^q`.

pub mod aqt;
pub mod diagram;
pub mod lambda_q;
pub mod qvector;
pub mod rescale;

pub use aqt::{iota_q, AqtSeries};
pub use diagram::{diagram_checks, Square, SquareReport};
pub use lambda_q::{eta, eta_inv, lq, lq_factors, star_q, star_q_one, LambdaQElem};
pub use qvector::{from_qghost_components, qghost_components, QWittVector};
pub use rescale::{delta_q_rescale, raw_divisor, RescaledDivisor};
