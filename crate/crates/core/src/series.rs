//! Truncated power series in `t` over an exact coefficient ring, and the
//! generating-function identities checked against the closed forms.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;

use crate::cubes::cube_counts;
use crate::error::{Error, Result};
use crate::graph::PCubeGraph;
use crate::poly::{
    cube_coeff_closed, cube_poly_closed, dist_cube_poly_closed, weight_poly, BivarPoly, Polynomial,
};
use crate::sequences::{binomial, PFibTable};

/// Exact commutative ring operations needed by the series engine.
pub trait Coefficient: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

macro_rules! impl_poly_coefficient {
    ($t:ty) => {
        impl Coefficient for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn one() -> Self {
                <$t>::one()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
        }
    };
}

impl_poly_coefficient!(Polynomial);
impl_poly_coefficient!(BivarPoly);

/// Power series `Σ_{n ≤ N} a_n t^n`; always stores exactly `N + 1` terms.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Coefficient> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, R::one(), order)
    }

    /// `c t^e`, or zero if `e > order`.
    pub fn monomial(e: usize, c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Pads with zeros or truncates to the given order.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "truncation orders differ: {} vs {}",
                self.order(),
                other.order()
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect() })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| acc.mul(self).expect("same order"))
    }

    /// Multiplicative inverse; the constant term must be exactly one.
    ///
    /// `b_0 = 1`, `b_n = -Σ_{i=1}^{n} a_i b_{n-i}`.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0] != R::one() {
            return Err(Error::Domain(format!(
                "constant term {} is not the unit",
                self.coeffs[0]
            )));
        }
        let n = self.order();
        let mut b: Vec<R> = Vec::with_capacity(n + 1);
        b.push(R::one());
        for m in 1..=n {
            let mut acc = R::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&b[m - i]));
                }
            }
            b.push(R::zero().sub(&acc));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Multiplies by `t^shift`, dropping terms pushed past the order.
    pub fn shift_up(&self, shift: usize) -> Self {
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + shift <= n {
                out[i + shift] = c.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Index and both values at the first differing coefficient.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch> {
        self.coeffs.iter().zip(&other.coeffs).enumerate().find(|(_, (a, b))| a != b).map(
            |(index, (a, b))| Mismatch { index, expected: b.to_string(), got: a.to_string() },
        )
    }
}

/// First disagreeing coefficient of two series (or sequences).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub expected: String,
    pub got: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "coefficient of t^{}: expected {}, got {}", self.index, self.expected, self.got)
    }
}

/// `1 - t - y t^{p+1}`.
fn denominator<R: Coefficient>(p: usize, y: &R, order: usize) -> TruncatedSeries<R> {
    let mut d = TruncatedSeries::<R>::one(order);
    if order >= 1 {
        d.coeffs[1] = d.coeffs[1].sub(&R::one());
    }
    if p + 1 <= order {
        d.coeffs[p + 1] = d.coeffs[p + 1].sub(y);
    }
    d
}

/// `(1 + y t + ... + y t^p) / (1 - t - y t^{p+1})` to order `N`.
pub fn rational_gf<R: Coefficient>(p: usize, y: &R, order: usize) -> Result<TruncatedSeries<R>> {
    let mut num = TruncatedSeries::one(order);
    for i in 1..=p.min(order) {
        num.coeffs[i] = y.clone();
    }
    num.mul(&denominator(p, y, order).inverse()?)
}

/// Which specialization of the rational generating function to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfKind {
    /// `y = 1 + x`: the cube polynomials.
    Cube,
    /// `y = x`: the weight enumerators.
    Weight,
    /// `y = q + x`: the distance cube polynomials.
    Distance,
}

pub fn cube_gf(p: usize, order: usize) -> TruncatedSeries<Polynomial> {
    rational_gf(p, &Polynomial::linear(1), order).expect("unit constant term")
}

pub fn weight_gf(p: usize, order: usize) -> TruncatedSeries<Polynomial> {
    rational_gf(p, &Polynomial::x(), order).expect("unit constant term")
}

pub fn distance_gf(p: usize, order: usize) -> TruncatedSeries<BivarPoly> {
    let y = &BivarPoly::q() + &BivarPoly::x();
    rational_gf(p, &y, order).expect("unit constant term")
}

/// `t / (1 - t - t^{p+1})`.
pub fn pfib_gf(p: usize, order: usize) -> TruncatedSeries<BigInt> {
    let inv = denominator(p, &BigInt::from(1), order).inverse().expect("unit constant term");
    inv.shift_up(1)
}

fn to_bigint_series(values: &[num_bigint::BigUint], order: usize) -> TruncatedSeries<BigInt> {
    TruncatedSeries::from_coeffs(values.iter().cloned().map(BigInt::from).collect(), order)
}

/// Checks the p-number generating function two ways: the series against the
/// recursion table, and `(Σ F_n t^n)(1 - t - t^{p+1}) = t`.
pub fn check_pfib_gf(p: usize, order: usize) -> std::result::Result<(), Mismatch> {
    let series = pfib_gf(p, order);
    let table = to_bigint_series(&PFibTable::new(p).prefix(order), order);
    if let Some(m) = series.first_mismatch(&table) {
        return Err(m);
    }
    let product = table.mul(&denominator(p, &BigInt::from(1), order)).expect("same order");
    product.first_mismatch(&TruncatedSeries::monomial(1, BigInt::from(1), order)).map_or(Ok(()), Err)
}

/// Compares one rational generating function against its closed-form
/// polynomials for every `n ≤ order`.
pub fn check_rational_gf(p: usize, kind: GfKind, order: usize) -> std::result::Result<(), Mismatch> {
    match kind {
        GfKind::Cube => {
            let closed = (0..=order).map(|n| cube_poly_closed(p, n)).collect();
            cube_gf(p, order).first_mismatch(&TruncatedSeries::from_coeffs(closed, order))
        }
        GfKind::Weight => {
            let closed = (0..=order).map(|n| weight_poly(p, n)).collect();
            weight_gf(p, order).first_mismatch(&TruncatedSeries::from_coeffs(closed, order))
        }
        GfKind::Distance => {
            let closed = (0..=order).map(|n| dist_cube_poly_closed(p, n)).collect();
            distance_gf(p, order).first_mismatch(&TruncatedSeries::from_coeffs(closed, order))
        }
    }
    .map_or(Ok(()), Err)
}

/// `t^p A(y,t) = 1/(1 - t - y t^{p+1}) - 1 - t - ... - t^{p-1}` to order `N`,
/// plus the expansion `[y^a t^n] A = C(n - ap + p, a)`.
pub fn check_a_identity(p: usize, order: usize) -> std::result::Result<(), Mismatch> {
    let y = Polynomial::x();
    let a = rational_gf(p, &y, order).expect("unit constant term");
    let lhs = a.shift_up(p);
    let mut rhs = denominator(p, &y, order).inverse().expect("unit constant term");
    for i in 0..p.min(order + 1) {
        rhs.coeffs[i] = &rhs.coeffs[i] - &Polynomial::one();
    }
    if let Some(m) = lhs.first_mismatch(&rhs) {
        return Err(m);
    }
    let expansion: Vec<Polynomial> = (0..=order)
        .map(|n| {
            Polynomial::new(
                (0..=n)
                    .map(|k| BigInt::from(binomial((n + p) as i64 - (k * p) as i64, k as i64)))
                    .collect(),
            )
        })
        .collect();
    a.first_mismatch(&TruncatedSeries::from_coeffs(expansion, order)).map_or(Ok(()), Err)
}

pub fn verify_a_identity(p: usize, order: usize) -> bool {
    check_a_identity(p, order).is_ok()
}

/// Coefficients of `t^{kp-p+k} / (1 - t - t^{p+1})^{k+1}` for `n = 0..=order`.
///
/// The exponent is negative for `k = 0`, `p ≥ 1`; the shift is then applied
/// as a Laurent shift, which is exact because the result has no negative
/// powers.
pub fn ck_gf_coefficients(p: usize, k: usize, order: usize) -> Vec<BigInt> {
    let exponent = (k * p + k) as i64 - p as i64;
    let inner_order = order + p;
    let base = denominator(p, &BigInt::from(1), inner_order).inverse().expect("unit constant term");
    let series = base.pow(k + 1);
    (0..=order as i64)
        .map(|n| {
            let idx = n - exponent;
            if idx < 0 {
                BigInt::from(0)
            } else {
                series.coeff(idx as usize).clone()
            }
        })
        .collect()
}

/// The `c_k` generating function against the closed form for `n ≤ order`
/// and against brute-force cube counts for `n ≤ oracle_max_n`.
pub fn check_ck_gf(p: usize, k: usize, order: usize, oracle_max_n: usize) -> std::result::Result<(), Mismatch> {
    let gf = ck_gf_coefficients(p, k, order);
    for (n, coeff) in gf.iter().enumerate() {
        let closed = BigInt::from(cube_coeff_closed(p, n, k));
        if *coeff != closed {
            return Err(Mismatch { index: n, expected: closed.to_string(), got: coeff.to_string() });
        }
        if n <= oracle_max_n {
            let g = PCubeGraph::build(p, n).map_err(|e| Mismatch {
                index: n,
                expected: "materializable graph".into(),
                got: e.to_string(),
            })?;
            let oracle = cube_counts(&g).get(k).cloned().map(BigInt::from).unwrap_or_default();
            if *coeff != oracle {
                return Err(Mismatch { index: n, expected: oracle.to_string(), got: coeff.to_string() });
            }
        }
    }
    if k == 0 {
        // c_0 is the vertex count F^p_{n+p+1}
        let mut f = PFibTable::new(p);
        for (n, coeff) in gf.iter().enumerate() {
            let v = BigInt::from(f.get(n + p + 1).clone());
            if *coeff != v {
                return Err(Mismatch { index: n, expected: v.to_string(), got: coeff.to_string() });
            }
        }
    }
    Ok(())
}

pub fn ck_gf_check(p: usize, k: usize, order: usize, oracle_max_n: usize) -> bool {
    check_ck_gf(p, k, order, oracle_max_n).is_ok()
}
