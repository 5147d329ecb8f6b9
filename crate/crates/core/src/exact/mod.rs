//! Exact arithmetic: rationals, Q/Z, `q`-exponent polynomials, group rings and truncated series.

pub mod arith;
pub mod group_ring;
pub mod qexp;
pub mod qmodz;
pub mod ring;
pub mod series;

pub use group_ring::{
    DeformedGenerator, DeformedGroupRing, DeformedRatGroupRing, GroupKey, GroupRingElem, IntGroupRing,
    RatGroupRing,
};
pub use qexp::QExpPoly;
pub use qmodz::QmodZ;
pub use ring::{int, parse_rational, rat, Dilate, QAlgebra, Rational, Ring};
pub use series::TruncSeries;
