//! Truncations of the Habiro ring: `Z[u]/((u)_N)` on the lattice `u = q^(1/D)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::arith::lcm;
use crate::exact::{Dilate, Ring};

/// `(u)_N = (1 - u)(1 - u^2)...(1 - u^N)`, ascending coefficients.
pub fn pochhammer(n: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for k in 1..=n as usize {
        let mut next = vec![BigInt::zero(); p.len() + k];
        for (i, c) in p.iter().enumerate() {
            next[i] += c;
            next[i + k] -= c;
        }
        p = next;
    }
    p
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder of `p` modulo a polynomial whose leading coefficient is `+-1`.
fn poly_rem(p: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    let mut r = p.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead = &m[dm];
    while r.len() > dm {
        let top = r.len() - 1;
        let c = &r[top] * lead;
        let shift = top - dm;
        for (i, mc) in m.iter().enumerate() {
            r[shift + i] -= &c * mc;
        }
        trim(&mut r);
    }
    r
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(&mut out);
    out
}

/// `p(u^n)`.
fn substitute_power(p: &[BigInt], n: usize) -> Vec<BigInt> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); (p.len() - 1) * n + 1];
    for (i, c) in p.iter().enumerate() {
        out[i * n] = c.clone();
    }
    out
}

fn min_level(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// A polynomial in `u = q^(1/depth)`, reduced modulo `(u)_level`; `level = None` means unreduced.
#[derive(Clone, Debug)]
pub struct HabiroElem {
    level: Option<u32>,
    depth: u64,
    poly: Vec<BigInt>,
}

impl HabiroElem {
    pub fn new(poly: Vec<BigInt>, level: Option<u32>, depth: u64) -> Result<Self> {
        if level == Some(0) {
            return Err(Error::InvalidArgument("Habiro level must be positive".into()));
        }
        if depth == 0 {
            return Err(Error::InvalidArgument("Habiro depth must be positive".into()));
        }
        Ok(Self::reduced(poly, level, depth))
    }

    fn reduced(mut poly: Vec<BigInt>, level: Option<u32>, depth: u64) -> Self {
        trim(&mut poly);
        if let Some(n) = level {
            poly = poly_rem(&poly, &pochhammer(n));
        }
        HabiroElem { level, depth, poly }
    }

    /// `q^(k/depth)` at the given level.
    pub fn monomial(k: usize, level: Option<u32>, depth: u64) -> Result<Self> {
        let mut p = vec![BigInt::zero(); k + 1];
        p[k] = BigInt::one();
        Self::new(p, level, depth)
    }

    pub fn level(&self) -> Option<u32> {
        self.level
    }

    pub fn depth(&self) -> u64 {
        self.depth
    }

    pub fn poly(&self) -> &[BigInt] {
        &self.poly
    }

    /// Re-expresses on the finer lattice of depth `d`, a multiple of the current depth.
    fn at_depth(&self, d: u64) -> Vec<BigInt> {
        substitute_power(&self.poly, (d / self.depth) as usize)
    }

    fn align(&self, other: &Self) -> (Vec<BigInt>, Vec<BigInt>, Option<u32>, u64) {
        let d = lcm(self.depth, other.depth);
        (self.at_depth(d), other.at_depth(d), min_level(self.level, other.level), d)
    }

    /// Reduces further to a lower level.
    pub fn at_level(&self, n: u32) -> Result<Self> {
        if self.level.is_some_and(|l| l < n) {
            return Err(Error::InvalidArgument(format!(
                "cannot lift from level {} to level {n}",
                self.level.unwrap()
            )));
        }
        Self::new(self.poly.clone(), Some(n), self.depth)
    }
}

/// Reduces an integer polynomial in `q` modulo `(q)_N`.
pub fn habiro_reduce(poly: &[BigInt], n: u32) -> Result<HabiroElem> {
    HabiroElem::new(poly.to_vec(), Some(n), 1)
}

/// `sigma_n: q -> q^n` from level `nN` to level `N`.
pub fn habiro_sigma(x: &HabiroElem, n: u32) -> Result<HabiroElem> {
    if n == 0 {
        return Err(Error::InvalidArgument("sigma index must be positive".into()));
    }
    let level = match x.level {
        Some(l) if l % n == 0 => Some(l / n),
        Some(l) => {
            return Err(Error::InvalidArgument(format!(
                "level {l} is not a multiple of {n}"
            )))
        }
        None => None,
    };
    HabiroElem::new(substitute_power(&x.poly, n as usize), level, x.depth)
}

impl PartialEq for HabiroElem {
    /// Equality in the coarser of the two truncations.
    fn eq(&self, other: &Self) -> bool {
        let (a, b, level, d) = self.align(other);
        let diff = poly_add(&a, &b.iter().map(|c| -c).collect::<Vec<_>>());
        HabiroElem::reduced(diff, level, d).poly.is_empty()
    }
}

impl Ring for HabiroElem {
    fn zero() -> Self {
        HabiroElem {
            level: None,
            depth: 1,
            poly: Vec::new(),
        }
    }
    fn one() -> Self {
        Self::from_bigint(&BigInt::one())
    }
    fn is_zero(&self) -> bool {
        self.poly.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let (a, b, level, d) = self.align(other);
        HabiroElem::reduced(poly_add(&a, &b), level, d)
    }
    fn neg(&self) -> Self {
        HabiroElem {
            poly: self.poly.iter().map(|c| -c).collect(),
            ..self.clone()
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let (a, b, level, d) = self.align(other);
        HabiroElem::reduced(poly_mul(&a, &b), level, d)
    }
    fn from_bigint(n: &BigInt) -> Self {
        HabiroElem::reduced(vec![n.clone()], None, 1)
    }
}

impl Dilate for HabiroElem {
    /// `q^r -> q^(nr)` at the same level.
    fn sigma(&self, n: u64) -> Self {
        HabiroElem::reduced(substitute_power(&self.poly, n as usize), self.level, self.depth)
    }
    /// `q^r -> q^(r/n)`: the same polynomial read on the lattice `q^(1/(nD))`.
    fn rho(&self, n: u64) -> Self {
        HabiroElem {
            depth: self.depth * n,
            ..self.clone()
        }
    }
}

impl fmt::Display for HabiroElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, self.depth) {
                (0, _) => write!(f, "{c}")?,
                (_, 1) => write!(f, "{c}*q^{i}")?,
                (_, d) => {
                    let g = (i as u64).gcd(&d);
                    write!(f, "{c}*q^({}/{})", i as u64 / g, d / g)?
                }
            }
        }
        Ok(())
    }
}
