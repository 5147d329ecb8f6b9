//! Ring operations on `Lambda(A) = 1 + tA[[t]]` and the operators `F_n`, `V_n`.

use crate::exact::{QAlgebra, Ring, TruncSeries};

/// Witt addition is multiplication of series.
pub fn witt_add<C: Ring>(a: &TruncSeries<C>, b: &TruncSeries<C>) -> TruncSeries<C> {
    a.mul(b)
}

/// Additive inverse in `W(A)`.
pub fn witt_neg<C: Ring>(a: &TruncSeries<C>) -> TruncSeries<C> {
    a.inverse()
}

/// Witt product: componentwise product of ghost coordinates.
pub fn witt_mul<C: QAlgebra>(a: &TruncSeries<C>, b: &TruncSeries<C>) -> TruncSeries<C> {
    let ga = a.ghost_components();
    let gb = b.ghost_components();
    let g: Vec<C> = ga.iter().zip(&gb).map(|(x, y)| x.mul(y)).collect();
    TruncSeries::from_ghost(&g)
}

/// The Witt unit `[1] = (1 - t)^(-1)`.
pub fn witt_one<C: Ring>(order: usize) -> TruncSeries<C> {
    TruncSeries::geometric(&C::one(), 1, order)
}

/// `[a] = (1 - a t)^(-1)`.
pub fn teichmuller<C: Ring>(a: &C, order: usize) -> TruncSeries<C> {
    TruncSeries::geometric(a, 1, order)
}

/// `F_n`: ghost coordinates `g_m -> g_(nm)`; the output has order `floor(N/n)`.
pub fn frobenius<C: QAlgebra>(f: &TruncSeries<C>, n: usize) -> TruncSeries<C> {
    assert!(n >= 1);
    let g = f.ghost_components();
    let m = f.order() / n;
    let h: Vec<C> = (1..=m).map(|k| g[k * n - 1].clone()).collect();
    TruncSeries::from_ghost(&h)
}

/// `V_n`: `t -> t^n`; the output has order `nN`.
pub fn verschiebung<C: Ring>(f: &TruncSeries<C>, n: usize) -> TruncSeries<C> {
    f.substitute_power(n)
}
