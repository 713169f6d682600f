//! Fibonacci p-strings: binary strings whose 1s are separated by at least
//! `p` zeros.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::sequences::binomial;
use crate::Caps;

/// Longest string a [`PString`] can hold.
pub const MAX_LEN: usize = 64;

/// A binary string of length at most 64 packed into a machine word.
///
/// Coordinate 1 is the leftmost character and lives in the most significant
/// used bit, so numeric order on `bits` is lexicographic order on strings of
/// equal length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PString {
    len: u8,
    bits: u64,
}

impl PString {
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::Domain(format!("string length {len} exceeds {MAX_LEN}")));
        }
        if len < MAX_LEN && bits >> len != 0 {
            return Err(Error::Domain(format!("bits {bits:#x} do not fit in length {len}")));
        }
        Ok(PString { len: len as u8, bits })
    }

    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!(len <= MAX_LEN);
        PString { len: len as u8, bits }
    }

    pub fn zeros(len: usize) -> Self {
        PString::from_raw(0, len)
    }

    pub fn empty() -> Self {
        PString::zeros(0)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    fn mask(i: usize, len: usize) -> u64 {
        1u64 << (len - i)
    }

    /// Coordinate `i`, 1-based from the left.
    pub fn bit(&self, i: usize) -> bool {
        assert!((1..=self.len()).contains(&i), "coordinate {i} out of range");
        self.bits & Self::mask(i, self.len()) != 0
    }

    /// `u + δ_i`: the string with coordinate `i` flipped.
    pub fn flip(&self, i: usize) -> Self {
        assert!((1..=self.len()).contains(&i), "coordinate {i} out of range");
        PString::from_raw(self.bits ^ Self::mask(i, self.len()), self.len())
    }

    pub fn set(&self, i: usize, value: bool) -> Self {
        if self.bit(i) == value {
            *self
        } else {
            self.flip(i)
        }
    }

    /// 1-based positions of the 1s, left to right.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(move |&i| self.bit(i))
    }

    pub fn hamming(&self, other: &PString) -> usize {
        debug_assert_eq!(self.len, other.len);
        (self.bits ^ other.bits).count_ones() as usize
    }

    /// Coordinatewise order `self <= other`.
    pub fn is_below(&self, other: &PString) -> bool {
        self.len == other.len && self.bits & !other.bits == 0
    }

    pub fn concat(&self, other: &PString) -> Result<Self> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::Domain(format!("concatenation length {len} exceeds {MAX_LEN}")));
        }
        let head = if other.len() == MAX_LEN { 0 } else { self.bits << other.len() };
        Ok(PString::from_raw(head | other.bits, len))
    }

    /// Drops coordinates `from..=to` (1-based, inclusive).
    pub fn remove_range(&self, from: usize, to: usize) -> Self {
        assert!(1 <= from && from <= to && to <= self.len());
        let kept: Vec<bool> = (1..=self.len())
            .filter(|i| !(from..=to).contains(i))
            .map(|i| self.bit(i))
            .collect();
        PString::from_bools(&kept)
    }

    /// Inserts `count` zeros so that they occupy positions `at..at+count`.
    pub fn insert_zeros(&self, at: usize, count: usize) -> Self {
        assert!(1 <= at && at <= self.len() + 1 && self.len() + count <= MAX_LEN);
        let mut out: Vec<bool> = (1..at).map(|i| self.bit(i)).collect();
        out.extend(std::iter::repeat(false).take(count));
        out.extend((at..=self.len()).map(|i| self.bit(i)));
        PString::from_bools(&out)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        assert!(bits.len() <= MAX_LEN);
        let packed = bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        PString::from_raw(packed, bits.len())
    }
}

impl fmt::Display for PString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for PString {
    type Err = Error;

    /// Parses a string of `0`/`1` characters; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_LEN {
            return Err(Error::Parse(format!("binary string longer than {MAX_LEN}")));
        }
        let mut bools = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bools.push(false),
                '1' => bools.push(true),
                other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
            }
        }
        Ok(PString::from_bools(&bools))
    }
}

/// True iff every two 1s of `u` are separated by at least `p` zeros.
pub fn is_pvalid(u: &PString, p: usize) -> bool {
    let b = u.bits();
    (1..=p.min(MAX_LEN - 1)).all(|s| b & (b >> s) == 0)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n >= cap || n > MAX_LEN {
        Err(Error::SizeLimit { what: "string enumeration", n, cap: cap.min(MAX_LEN + 1) })
    } else {
        Ok(())
    }
}

/// All Fibonacci p-strings of length `n` in lexicographic order, using the
/// default caps.
pub fn enumerate_pstrings(p: usize, n: usize) -> Result<Vec<PString>> {
    enumerate_pstrings_capped(p, n, &Caps::default())
}

pub fn enumerate_pstrings_capped(p: usize, n: usize, caps: &Caps) -> Result<Vec<PString>> {
    check_cap(n, caps.strings)?;
    let mut out = Vec::new();
    // depth-first with 0 before 1 yields lexicographic order
    fn walk(p: usize, n: usize, pos: usize, bits: u64, gap: usize, out: &mut Vec<PString>) {
        if pos == n {
            out.push(PString::from_raw(bits, n));
            return;
        }
        walk(p, n, pos + 1, bits << 1, gap.saturating_add(1), out);
        if gap >= p {
            walk(p, n, pos + 1, (bits << 1) | 1, 0, out);
        }
    }
    walk(p, n, 0, 0, usize::MAX, &mut out);
    Ok(out)
}

/// Number of p-strings of length `n` and weight `w`: `C(n - wp + p, w)`.
pub fn count_by_weight(p: usize, n: usize, w: usize) -> BigUint {
    let (p, n, w) = (p as i64, n as i64, w as i64);
    binomial(n - w * p + p, w)
}

/// Largest weight of a p-string of length `n`: `floor((n + p) / (p + 1))`.
pub fn max_weight(p: usize, n: usize) -> usize {
    (n + p) / (p + 1)
}

/// Appends `0^p` to `u` and collapses each `10^p` block into a single star,
/// encoded as a 1 bit. The result has length `n + p - w p` and exactly `w`
/// stars.
pub fn theta(u: &PString, p: usize) -> Result<PString> {
    if !is_pvalid(u, p) {
        return Err(Error::Precondition(format!("{u} is not a Fibonacci {p}-string")));
    }
    let n = u.len();
    let mut out = Vec::with_capacity(n + p);
    let mut i = 1;
    while i <= n + p {
        if i <= n && u.bit(i) {
            out.push(true);
            i += p + 1;
        } else {
            out.push(false);
            i += 1;
        }
    }
    if out.len() > MAX_LEN {
        return Err(Error::Domain(format!("image length {} exceeds {MAX_LEN}", out.len())));
    }
    Ok(PString::from_bools(&out))
}

/// p-strings of length `n` that do not end in `10^r` with `r < p`.
pub fn enumerate_reduced(p: usize, n: usize) -> Result<Vec<PString>> {
    enumerate_reduced_capped(p, n, &Caps::default())
}

pub fn enumerate_reduced_capped(p: usize, n: usize, caps: &Caps) -> Result<Vec<PString>> {
    let tail = p.min(n);
    let tail_mask = if tail == MAX_LEN { u64::MAX } else { (1u64 << tail) - 1 };
    Ok(enumerate_pstrings_capped(p, n, caps)?
        .into_iter()
        .filter(|u| u.bits() & tail_mask == 0)
        .collect())
}

/// Letters of the free monoid generated by `{0, 10^p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Zero,
    OneThenZeros,
}

/// Greedy left-to-right factorization of `s` over `{0, 10^p}`.
///
/// Returns `None` when `s` is not a product of these letters.
pub fn factor_over_monoid(s: &PString, p: usize) -> Option<Vec<Letter>> {
    let n = s.len();
    let mut letters = Vec::new();
    let mut i = 1;
    while i <= n {
        if s.bit(i) {
            if i + p > n || (i + 1..=i + p).any(|j| s.bit(j)) {
                return None;
            }
            letters.push(Letter::OneThenZeros);
            i += p + 1;
        } else {
            letters.push(Letter::Zero);
            i += 1;
        }
    }
    Some(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::pfib;

    fn ps(s: &str) -> PString {
        s.parse().unwrap()
    }

    fn brute(p: usize, n: usize) -> Vec<PString> {
        (0..1u64 << n)
            .map(|b| PString::from_raw(b, n))
            .filter(|u| {
                let ones: Vec<usize> = u.ones().collect();
                ones.windows(2).all(|w| w[1] - w[0] > p)
            })
            .collect()
    }

    #[test]
    fn validity_examples() {
        assert!(is_pvalid(&ps("1001"), 2));
        assert!(!is_pvalid(&ps("1010"), 2));
        assert!(is_pvalid(&ps("0000"), 5));
        assert!(is_pvalid(&ps("11"), 0));
        assert!(!is_pvalid(&ps("11"), 1));
    }

    #[test]
    fn enumeration_examples() {
        let v = enumerate_pstrings(2, 4).unwrap();
        let got: Vec<String> = v.iter().map(|u| u.to_string()).collect();
        assert_eq!(got, ["0000", "0001", "0010", "0100", "1000", "1001"]);
        assert_eq!(enumerate_pstrings(1, 3).unwrap().len(), 5);
        assert_eq!(enumerate_pstrings(3, 0).unwrap(), vec![PString::empty()]);
        assert_eq!(enumerate_pstrings(0, 4).unwrap().len(), 16);
    }

    #[test]
    fn enumeration_matches_brute_force_and_order() {
        for p in 0..=4 {
            for n in 0..=14 {
                let v = enumerate_pstrings(p, n).unwrap();
                assert_eq!(v, brute(p, n), "p={p} n={n}");
                assert_eq!(BigUint::from(v.len()), pfib(p, n + p + 1));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps { strings: 10, ..Caps::default() };
        assert!(matches!(
            enumerate_pstrings_capped(1, 10, &caps),
            Err(Error::SizeLimit { .. })
        ));
        assert!(enumerate_pstrings_capped(1, 9, &caps).is_ok());
    }

    #[test]
    fn weight_counts() {
        assert_eq!(count_by_weight(1, 4, 2), BigUint::from(3u32));
        assert_eq!(count_by_weight(2, 4, 2), BigUint::from(1u32));
        assert_eq!(count_by_weight(3, 7, 0), BigUint::from(1u32));
        assert_eq!(max_weight(2, 4), 2);
        assert_eq!(max_weight(1, 5), 3);
        assert_eq!(max_weight(4, 0), 0);
        for p in 1..=3 {
            for n in 0..=14 {
                let v = enumerate_pstrings(p, n).unwrap();
                for w in 0..=n + 1 {
                    let direct = v.iter().filter(|u| u.weight() == w).count();
                    assert_eq!(count_by_weight(p, n, w), BigUint::from(direct), "p={p} n={n} w={w}");
                }
                assert_eq!(v.iter().map(PString::weight).max().unwrap(), max_weight(p, n));
                assert!(count_by_weight(p, n, max_weight(p, n) + 1) == BigUint::from(0u8));
            }
        }
    }

    #[test]
    fn weight_classes_partition() {
        for p in 0..=4 {
            for n in 0..=16 {
                let total: BigUint = (0..=n).map(|w| count_by_weight(p, n, w)).sum();
                assert_eq!(total, pfib(p, n + p + 1));
            }
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&ps("101"), 1).unwrap(), ps("11"));
        assert_eq!(theta(&ps("0000"), 2).unwrap(), ps("000000"));
        assert_eq!(theta(&ps("1001"), 2).unwrap(), ps("11"));
        assert_eq!(theta(&ps("0100"), 2).unwrap(), ps("0100"));
        assert!(matches!(theta(&ps("1010"), 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn theta_is_a_weight_preserving_injection() {
        use std::collections::{HashMap, HashSet};
        for p in 1..=3 {
            for n in 0..=12 {
                let mut seen = HashSet::new();
                let mut per_weight: HashMap<usize, usize> = HashMap::new();
                for u in enumerate_pstrings(p, n).unwrap() {
                    let img = theta(&u, p).unwrap();
                    let w = u.weight();
                    assert_eq!(img.len(), n + p - w * p);
                    assert_eq!(img.weight(), w);
                    assert!(seen.insert(img));
                    *per_weight.entry(w).or_default() += 1;
                }
                for (w, count) in per_weight {
                    assert_eq!(BigUint::from(count), binomial((n + p) as i64 - (w * p) as i64, w as i64));
                }
            }
        }
    }

    #[test]
    fn reduced_examples() {
        let r: Vec<String> = enumerate_reduced(2, 3).unwrap().iter().map(|u| u.to_string()).collect();
        assert_eq!(r, ["000", "100"]);
        for p in 1..=4 {
            for m in 0..p {
                assert_eq!(enumerate_reduced(p, m).unwrap(), vec![PString::zeros(m)]);
            }
        }
        let r: Vec<String> = enumerate_reduced(1, 2).unwrap().iter().map(|u| u.to_string()).collect();
        assert_eq!(r, ["00", "10"]);
    }

    #[test]
    fn reduced_is_padded_pstrings() {
        for p in 1..=3 {
            for n in 0..=14 {
                let reduced = enumerate_reduced(p, n).unwrap();
                assert_eq!(BigUint::from(reduced.len()), pfib(p, n + 1));
                if n >= p {
                    let padded: Vec<PString> = enumerate_pstrings(p, n - p)
                        .unwrap()
                        .iter()
                        .map(|v| v.concat(&PString::zeros(p)).unwrap())
                        .collect();
                    assert_eq!(reduced, padded);
                }
            }
        }
    }

    #[test]
    fn extended_strings_factor_uniquely() {
        for p in 1..=3 {
            for n in 0..=12 {
                for v in enumerate_pstrings(p, n).unwrap() {
                    let ext = v.concat(&PString::zeros(p)).unwrap();
                    let letters = factor_over_monoid(&ext, p).expect("factorizable");
                    let stars = letters.iter().filter(|&&l| l == Letter::OneThenZeros).count();
                    assert_eq!(stars, v.weight());
                    assert_eq!(letters.len(), n + p - p * v.weight());
                }
            }
        }
        assert!(factor_over_monoid(&ps("101"), 1).is_none());
        assert!(factor_over_monoid(&ps("1"), 1).is_none());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(ps("0110").to_string(), "0110");
        assert_eq!(ps("").len(), 0);
        assert!("012".parse::<PString>().is_err());
        assert!("0".repeat(65).parse::<PString>().is_err());
        assert_eq!(ps(&"1".repeat(64)).weight(), 64);
    }

    #[test]
    fn remove_and_insert() {
        let x = ps("10010");
        assert_eq!(x.remove_range(2, 3), ps("110"));
        assert_eq!(ps("110").insert_zeros(2, 2), x);
    }
}
