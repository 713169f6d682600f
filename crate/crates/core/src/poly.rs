//! Exact univariate and bivariate integer polynomials, and the closed forms
//! of the cube, weight and distance cube polynomials of `Γ_n^p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::{binomial, kfold_convolution};
use crate::strings::{count_by_weight, max_weight};

/// Dense polynomial in `x` with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_unsigned(coeffs: &[BigUint]) -> Self {
        Polynomial::new(coeffs.iter().cloned().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Polynomial::from_i64s(&[0, 1])
    }

    /// `x + c`.
    pub fn linear(c: i64) -> Self {
        Polynomial::from_i64s(&[c, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: i64) -> Polynomial {
        self.compose(&Polynomial::linear(c))
    }

    /// `f(g(x))` by Horner's rule.
    pub fn compose(&self, g: &Polynomial) -> Polynomial {
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, c| &(&acc * g) + &Polynomial::constant(c.clone()))
    }

    /// `f(g(x, q))` for a bivariate `g`.
    pub fn compose_bivar(&self, g: &BivarPoly) -> BivarPoly {
        self.coeffs.iter().rev().fold(BivarPoly::zero(), |acc, c| {
            &(&acc * g) + &BivarPoly::constant(c.clone())
        })
    }

    /// `f(x + q)`.
    pub fn substitute_x_plus_q(&self) -> BivarPoly {
        self.compose_bivar(&(&BivarPoly::x() + &BivarPoly::q()))
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson { coeffs: self.coeffs.iter().map(ToString::to_string).collect() }
    }

    /// Parses `{"coeffs": ["5", "5", "1"]}`; bare JSON integers are accepted too.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawPolynomialJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let coeffs = raw.coeffs.iter().map(parse_bigint).collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Writes `coef * mono` in canonical sign-aware form. `first` suppresses the
/// leading ` + `.
fn write_term(f: &mut fmt::Formatter<'_>, coef: &BigInt, mono: &str, first: bool) -> fmt::Result {
    let abs = coef.abs();
    match (first, coef.is_negative()) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if mono.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        f.write_str(mono)
    } else {
        write!(f, "{abs}*{mono}")
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for Polynomial {
    /// Ascending degree, e.g. `5 + 5*x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            write_term(f, c, &power("x", k), first)?;
            first = false;
        }
        Ok(())
    }
}

/// Sparse polynomial in `x` and `q`; keys are `(deg_x, deg_q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        BivarPoly::monomial(0, 0, c)
    }

    pub fn monomial(k: usize, d: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((k, d), c);
        }
        BivarPoly { terms }
    }

    pub fn x() -> Self {
        BivarPoly::monomial(1, 0, BigInt::one())
    }

    pub fn q() -> Self {
        BivarPoly::monomial(0, 1, BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), BigInt)>>(terms: I) -> Self {
        let mut out = BivarPoly::zero();
        for (key, c) in terms {
            out.add_term(key, c);
        }
        out
    }

    fn add_term(&mut self, key: (usize, usize), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^k q^d`.
    pub fn coeff(&self, k: usize, d: usize) -> BigInt {
        self.terms.get(&(k, d)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    /// `D(q, x)`.
    pub fn swap_variables(&self) -> Self {
        BivarPoly { terms: self.terms.iter().map(|(&(k, d), c)| ((d, k), c.clone())).collect() }
    }

    /// Embeds a polynomial in `x`.
    pub fn from_x(p: &Polynomial) -> Self {
        BivarPoly::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| ((k, 0), c.clone())))
    }

    /// `D(x, 0)` as a polynomial in `x`.
    pub fn at_q_zero(&self) -> Polynomial {
        let deg = self.terms.keys().map(|&(k, _)| k).max().map_or(0, |k| k + 1);
        Polynomial::new((0..deg).map(|k| self.coeff(k, 0)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(BivarPoly::one(), |acc, _| &acc * self)
    }

    pub fn to_json(&self) -> Vec<BivarTermJson> {
        self.terms
            .iter()
            .map(|(&(k, d), c)| BivarTermJson {
                k: k.to_string(),
                d: d.to_string(),
                value: c.to_string(),
            })
            .collect()
    }

    /// Parses a list of `{"k", "d", "value"}` objects. Repeated keys add up.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<RawBivarTerm> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = BivarPoly::zero();
        for t in raw {
            let key = (parse_exponent(&t.k)?, parse_exponent(&t.d)?);
            out.add_term(key, parse_bigint(&t.value)?);
        }
        Ok(out)
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.add_term(key, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        self + &(-rhs)
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly { terms: self.terms.iter().map(|(&key, c)| (key, -c)).collect() }
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(k1, d1), a) in &self.terms {
            for (&(k2, d2), b) in &rhs.terms {
                out.add_term((k1 + k2, d1 + d2), a * b);
            }
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    /// Ordered by total degree, then by decreasing power of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(k, d)| (k + d, std::cmp::Reverse(k)));
        for (idx, key) in keys.into_iter().enumerate() {
            let mono = [power("x", key.0), power("q", key.1)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join("*");
            write_term(f, &self.terms[&key], &mono, idx == 0)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivarTermJson {
    pub k: String,
    pub d: String,
    pub value: String,
}

/// Either a decimal string or a JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawNumber {
    Text(String),
    Int(i64),
}

#[derive(Deserialize)]
struct RawPolynomialJson {
    coeffs: Vec<RawNumber>,
}

#[derive(Deserialize)]
struct RawBivarTerm {
    k: RawNumber,
    d: RawNumber,
    value: RawNumber,
}

/// Bound on parsed exponents; keeps hostile input from requesting huge
/// dense expansions downstream.
pub const MAX_PARSED_EXPONENT: usize = 1 << 16;

fn parse_bigint(raw: &RawNumber) -> Result<BigInt> {
    match raw {
        RawNumber::Int(v) => Ok(BigInt::from(*v)),
        RawNumber::Text(s) => {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("not a decimal integer: {s:?}")));
            }
            s.parse().map_err(|_| Error::Parse(format!("not a decimal integer: {s:?}")))
        }
    }
}

fn parse_exponent(raw: &RawNumber) -> Result<usize> {
    let v = parse_bigint(raw)?;
    usize::try_from(&v)
        .ok()
        .filter(|&e| e <= MAX_PARSED_EXPONENT)
        .ok_or_else(|| Error::Parse(format!("exponent {v} out of range")))
}

fn signed(v: BigUint) -> BigInt {
    BigInt::from(v)
}

/// `C_{Γ_n^p}(x) = Σ_a C(n - ap + p, a) (1 + x)^a`, with `(1 + x)^a`
/// expanded by repeated multiplication.
pub fn cube_poly_closed(p: usize, n: usize) -> Polynomial {
    let one_plus_x = Polynomial::linear(1);
    let mut power = Polynomial::one();
    let mut acc = Polynomial::zero();
    for a in 0..=max_weight(p, n) {
        let c = Polynomial::constant(signed(count_by_weight(p, n, a)));
        acc = &acc + &(&c * &power);
        power = &power * &one_plus_x;
    }
    acc
}

/// `c_k(Γ_n^p) = Σ_{i ≥ k} C(n - ip + p, i) C(i, k)`.
pub fn cube_coeff_closed(p: usize, n: usize, k: usize) -> BigUint {
    (k..=max_weight(p, n))
        .map(|i| count_by_weight(p, n, i) * binomial(i as i64, k as i64))
        .sum()
}

/// `c_k(Γ_n^p)` as the `k`-fold self-convolution of the p-numbers at
/// `n - kp + p + 1`.
pub fn cube_coeff_convolution(p: usize, n: usize, k: usize) -> BigUint {
    let m = n as i64 - (k * p) as i64 + p as i64 + 1;
    kfold_convolution(p, k, m)
}

/// Weight enumerator `W_{Γ_n^p}(x) = Σ_w C(n - wp + p, w) x^w`.
pub fn weight_poly(p: usize, n: usize) -> Polynomial {
    Polynomial::new((0..=max_weight(p, n)).map(|w| signed(count_by_weight(p, n, w))).collect())
}

/// `D_{Γ_n^p}(x, q) = Σ_a C(n - ap + p, a) (q + x)^a`.
pub fn dist_cube_poly_closed(p: usize, n: usize) -> BivarPoly {
    let q_plus_x = &BivarPoly::x() + &BivarPoly::q();
    let mut power = BivarPoly::one();
    let mut acc = BivarPoly::zero();
    for a in 0..=max_weight(p, n) {
        let c = BivarPoly::constant(signed(count_by_weight(p, n, a)));
        acc = &acc + &(&c * &power);
        power = &power * &q_plus_x;
    }
    acc
}

/// `c_{k,d}(Γ_n^p) = C(n - (k+d)p + p, k + d) C(k + d, k)`.
pub fn dist_coeff_closed(p: usize, n: usize, k: usize, d: usize) -> BigUint {
    let s = (k + d) as i64;
    binomial(n as i64 - s * p as i64 + p as i64, s) * binomial(s, k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(poly(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(poly(&[0, 0]).degree(), None);
        assert_eq!(poly(&[3]).degree(), Some(0));
        assert_eq!(&poly(&[1, 1]) - &poly(&[1, 1]), Polynomial::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(&[5, 5, 1]).to_string(), "5 + 5*x + x^2");
        assert_eq!(poly(&[0, -1, 0, 3]).to_string(), "-x + 3*x^3");
        assert_eq!(poly(&[-2, 0, -1]).to_string(), "-2 - x^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let d = dist_cube_poly_closed(1, 3);
        assert_eq!(d.to_string(), "1 + 3*x + 3*q + x^2 + 2*x*q + q^2");
    }

    #[test]
    fn cube_poly_examples() {
        assert_eq!(cube_poly_closed(1, 3), poly(&[5, 5, 1]));
        for p in 0..4 {
            assert_eq!(cube_poly_closed(p, 0), Polynomial::one());
        }
        for n in 0..=10 {
            assert_eq!(cube_poly_closed(0, n), poly(&[2, 1]).pow(n));
        }
    }

    #[test]
    fn weight_poly_examples() {
        assert_eq!(weight_poly(2, 4), poly(&[1, 4, 1]));
        assert_eq!(weight_poly(1, 2), poly(&[1, 2]));
        assert_eq!(weight_poly(3, 0), Polynomial::one());
    }

    #[test]
    fn dist_poly_examples() {
        assert_eq!(dist_cube_poly_closed(1, 3).coeff(1, 1), BigInt::from(2));
        let x_plus_q = &BivarPoly::x() + &BivarPoly::q();
        let expected = &(&BivarPoly::constant(1.into())
            + &(&BivarPoly::constant(4.into()) * &x_plus_q))
            + &x_plus_q.pow(2);
        assert_eq!(dist_cube_poly_closed(2, 4), expected);
        for p in 0..4 {
            for n in 0..10 {
                let at_zero = dist_cube_poly_closed(p, n).at_q_zero();
                for k in 0..=n {
                    assert_eq!(at_zero.coeff(k), signed(binomial((n + p) as i64 - (k * p) as i64, k as i64)));
                }
            }
        }
    }

    #[test]
    fn substitutions() {
        assert_eq!(weight_poly(1, 3).shift(1), cube_poly_closed(1, 3));
        let f = poly(&[3, -1, 4, 1]);
        assert_eq!(f.shift(0), f);
        assert_eq!(weight_poly(2, 4).substitute_x_plus_q(), dist_cube_poly_closed(2, 4));
        assert_eq!(f.shift(2).shift(-2), f);
    }

    #[test]
    fn closed_form_routes_agree() {
        for p in 0..=4 {
            for n in 0..=16 {
                let c = cube_poly_closed(p, n);
                assert_eq!(c.degree(), Some(max_weight(p, n)));
                for k in 0..=n + 1 {
                    let binom = cube_coeff_closed(p, n, k);
                    assert_eq!(c.coeff(k), signed(binom.clone()), "p={p} n={n} k={k}");
                    assert_eq!(cube_coeff_convolution(p, n, k), binom, "p={p} n={n} k={k}");
                }
                let d = dist_cube_poly_closed(p, n);
                assert_eq!(d, d.swap_variables());
                assert_eq!(d, weight_poly(p, n).substitute_x_plus_q());
                let x_plus_q_minus_1 =
                    &(&BivarPoly::x() + &BivarPoly::q()) - &BivarPoly::one();
                assert_eq!(d, c.compose_bivar(&x_plus_q_minus_1));
                for (&(k, dd), v) in d.terms() {
                    assert_eq!(*v, signed(dist_coeff_closed(p, n, k, dd)));
                }
            }
        }
    }

    #[test]
    fn json_round_trip_and_errors() {
        let c = cube_poly_closed(2, 9);
        let text = serde_json::to_string(&c.to_json()).unwrap();
        assert_eq!(Polynomial::from_json(&text).unwrap(), c);
        assert_eq!(Polynomial::from_json(r#"{"coeffs":[1,"-2",0]}"#).unwrap(), poly(&[1, -2]));
        assert!(Polynomial::from_json(r#"{"coeffs":["1.5"]}"#).is_err());
        assert!(Polynomial::from_json(r#"{"coeffs":["+1"]}"#).is_err());
        assert!(Polynomial::from_json("[").is_err());

        let d = dist_cube_poly_closed(1, 7);
        let text = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(BivarPoly::from_json(&text).unwrap(), d);
        assert!(BivarPoly::from_json(r#"[{"k":"-1","d":"0","value":"1"}]"#).is_err());
        assert!(BivarPoly::from_json(r#"[{"k":"99999999","d":"0","value":"1"}]"#).is_err());
    }
}
