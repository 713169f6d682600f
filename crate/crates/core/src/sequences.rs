//! Fibonacci p-numbers, binomial coefficients and k-fold convolutions.
//!
//! Every closed form in the crate bottoms out here. All values are exact
//! [`BigUint`]s.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Append-only table of the Fibonacci p-numbers for one fixed `p`.
///
/// `F_0 = 0`, `F_i = 1` for `i` in `1..=p`, and `F_n = F_{n-1} + F_{n-p-1}`
/// afterwards. For `p = 0` the recursion would collapse `F_1` to zero, so
/// `F_1 = 1` is seeded explicitly and the table becomes `0, 1, 2, 4, 8, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PFibTable {
    p: usize,
    values: Vec<BigUint>,
}

impl PFibTable {
    pub fn new(p: usize) -> Self {
        let mut table = PFibTable { p, values: vec![BigUint::zero()] };
        table.extend_to(p.max(1));
        table
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Grows the table so that index `n` is available.
    pub fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let i = self.values.len();
            let next = if i <= self.p.max(1) {
                BigUint::one()
            } else {
                &self.values[i - 1] + &self.values[i - self.p - 1]
            };
            self.values.push(next);
        }
    }

    /// Returns `F^p_n`, extending the table if needed.
    pub fn get(&mut self, n: usize) -> &BigUint {
        self.extend_to(n);
        &self.values[n]
    }

    /// Read-only view of the values computed so far.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// Returns `F^p_0 ..= F^p_n` as an owned vector.
    pub fn prefix(&mut self, n: usize) -> Vec<BigUint> {
        self.extend_to(n);
        self.values[..=n].to_vec()
    }
}

/// `F^p_n`.
pub fn pfib(p: usize, n: usize) -> BigUint {
    PFibTable::new(p).get(n).clone()
}

/// Binomial coefficient with `C(n, k) = 0` whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i+1) after the division
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Sum over `(k+1)`-tuples of non-negative indices summing to `m` of the
/// product `F^p_{i_0} ... F^p_{i_k}`.
///
/// Computed by convolving the sequence with itself `k` times.
pub fn kfold_convolution(p: usize, k: usize, m: i64) -> BigUint {
    if m < 0 {
        return BigUint::zero();
    }
    let m = m as usize;
    let base = PFibTable::new(p).prefix(m);
    let mut acc = base.clone();
    for _ in 0..k {
        acc = convolve_prefix(&acc, &base, m);
    }
    acc.swap_remove(m)
}

/// Cauchy product of two sequences, truncated to indices `0..=m`.
fn convolve_prefix(a: &[BigUint], b: &[BigUint], m: usize) -> Vec<BigUint> {
    (0..=m)
        .map(|s| {
            (0..=s)
                .filter(|&i| !a[i].is_zero() && !b[s - i].is_zero())
                .map(|i| &a[i] * &b[s - i])
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn pfib_examples() {
        assert_eq!(pfib(1, 7), u(13));
        assert_eq!(pfib(2, 5), u(3));
        assert_eq!(pfib(0, 6), u(32));
        assert_eq!(pfib(3, 0), u(0));
    }

    #[test]
    fn table_invariants() {
        for p in 0..=6 {
            let mut t = PFibTable::new(p);
            let vals = t.prefix(40);
            assert!(vals[0].is_zero());
            for i in 1..=p {
                assert_eq!(vals[i], u(1));
            }
            for n in (p + 1).max(2)..=40 {
                assert_eq!(vals[n], &vals[n - 1] + &vals[n - p - 1]);
            }
            assert!(vals[1..].windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn linear_window() {
        for p in 1..=6usize {
            for n in p + 1..=2 * p + 2 {
                assert_eq!(pfib(p, n), u((n - p) as u64), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn classical_fibonacci() {
        let (mut a, mut b) = (0u64, 1u64);
        for n in 0..=30 {
            assert_eq!(pfib(1, n), u(a));
            (a, b) = (b, a + b);
        }
    }

    #[test]
    fn hypercube_degeneration() {
        for n in 1..=20u32 {
            assert_eq!(pfib(0, n as usize), u(1) << (n - 1));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), u(6));
        assert_eq!(binomial(2, 3), u(0));
        assert_eq!(binomial(0, 0), u(1));
        assert_eq!(binomial(-1, 0), u(0));
        assert_eq!(binomial(5, -1), u(0));
        assert_eq!(binomial(60, 30), u(118264581564861424));
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(kfold_convolution(1, 1, 4), u(5));
        assert_eq!(kfold_convolution(2, 1, 5), u(6));
        assert_eq!(kfold_convolution(3, 2, -1), u(0));
        for p in 0..4 {
            for m in 0..15 {
                assert_eq!(kfold_convolution(p, 0, m), pfib(p, m as usize));
            }
        }
    }

    fn tuples_oracle(p: usize, k: usize, m: usize) -> BigUint {
        // recursive enumeration of (k+1)-tuples summing to m
        fn go(f: &[BigUint], slots: usize, rest: usize) -> BigUint {
            if slots == 1 {
                return f[rest].clone();
            }
            (0..=rest).map(|i| &f[i] * go(f, slots - 1, rest - i)).sum()
        }
        let f = PFibTable::new(p).prefix(m);
        go(&f, k + 1, m)
    }

    #[test]
    fn convolution_matches_tuple_enumeration() {
        for p in 0..=3 {
            for k in 0..=3 {
                for m in 0..=12 {
                    assert_eq!(
                        kfold_convolution(p, k, m as i64),
                        tuples_oracle(p, k, m),
                        "p={p} k={k} m={m}"
                    );
                }
            }
        }
    }
}
