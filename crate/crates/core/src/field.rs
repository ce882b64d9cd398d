//! Arithmetic in the prime field GF(p).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// A prime characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// The residue of `v`.
    pub fn elem(self, v: i64) -> FieldElem {
        FieldElem { value: v.rem_euclid(self.0 as i64) as u32, prime: self }
    }

    pub fn zero(self) -> FieldElem {
        FieldElem { value: 0, prime: self }
    }

    pub fn one(self) -> FieldElem {
        FieldElem { value: 1, prime: self }
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Prime> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0 as u64
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of GF(p), stored as its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u32,
    prime: Prime,
}

#[inline]
pub(crate) fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn addmod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (if s >= p as u64 { s - p as u64 } else { s }) as u32
}

pub(crate) fn powmod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

impl FieldElem {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn prime(self) -> Prime {
        self.prime
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, e: u64) -> FieldElem {
        FieldElem { value: powmod(self.value, e, self.prime.0), prime: self.prime }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self) -> Option<FieldElem> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.prime.0 as u64 - 2))
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, o: FieldElem) -> FieldElem {
        debug_assert_eq!(self.prime, o.prime);
        FieldElem { value: addmod(self.value, o.value, self.prime.0), prime: self.prime }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, o: FieldElem) -> FieldElem {
        self + (-o)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let v = if self.value == 0 { 0 } else { self.prime.0 - self.value };
        FieldElem { value: v, prime: self.prime }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, o: FieldElem) -> FieldElem {
        debug_assert_eq!(self.prime, o.prime);
        FieldElem { value: mulmod(self.value, o.value, self.prime.0), prime: self.prime }
    }
}

impl AddAssign for FieldElem {
    fn add_assign(&mut self, o: FieldElem) {
        *self = *self + o;
    }
}

impl SubAssign for FieldElem {
    fn sub_assign(&mut self, o: FieldElem) {
        *self = *self - o;
    }
}

impl MulAssign for FieldElem {
    fn mul_assign(&mut self, o: FieldElem) {
        *self = *self * o;
    }
}

fn small_binom(a: u64, b: u64, p: Prime) -> FieldElem {
    // a, b < p, so every factor below is a unit
    if b > a {
        return p.zero();
    }
    let mut num = p.one();
    let mut den = p.one();
    for k in 0..b {
        num *= p.elem((a - k) as i64);
        den *= p.elem((k + 1) as i64);
    }
    num * den.inv().expect("unit")
}

/// Binomial coefficient C(a, b) mod p by Lucas' theorem.
///
/// `binom_mod_p(-1, 0, p)` is 1, matching the convention used for the
/// gamma polynomials; any other negative entry gives 0.
pub fn binom_mod_p(a: i64, b: i64, p: Prime) -> FieldElem {
    if b == 0 {
        return p.one();
    }
    if a < 0 || b < 0 || b > a {
        return p.zero();
    }
    let (mut a, mut b) = (a as u64, b as u64);
    let q = p.0 as u64;
    let mut acc = p.one();
    while b > 0 {
        acc *= small_binom(a % q, b % q, p);
        if acc.is_zero() {
            return acc;
        }
        a /= q;
        b /= q;
    }
    acc
}

/// Number of distinct rearrangements of `lambda`, reduced mod p.
pub fn orbit_size_mod_p(lambda: &[u64], p: Prime) -> FieldElem {
    let mut counts: Vec<u64> = Vec::new();
    let mut sorted = lambda.to_vec();
    sorted.sort_unstable();
    for chunk in sorted.chunk_by(|a, b| a == b) {
        counts.push(chunk.len() as u64);
    }
    let mut remaining = lambda.len() as i64;
    let mut acc = p.one();
    for c in counts {
        acc *= binom_mod_p(remaining, c as i64, p);
        remaining -= c as i64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_composites() {
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(0).is_err());
        assert_eq!(Prime::new(7).unwrap().get(), 7);
    }

    #[test]
    fn lucas_small_cases() {
        let p3 = Prime::new(3).unwrap();
        assert_eq!(binom_mod_p(5, 2, p3).value(), 1);
        assert_eq!(binom_mod_p(-1, 0, p3).value(), 1);
        assert_eq!(binom_mod_p(-1, 1, p3).value(), 0);
        assert_eq!(binom_mod_p(3, 1, p3).value(), 0);
        let p2 = Prime::new(2).unwrap();
        assert_eq!(binom_mod_p(6, 2, p2).value(), 1);
        assert_eq!(binom_mod_p(5, 2, p2).value(), 0);
    }

    #[test]
    fn orbit_sizes() {
        let p = Prime::new(3).unwrap();
        assert_eq!(orbit_size_mod_p(&[0, 0, 0], p).value(), 1);
        assert_eq!(orbit_size_mod_p(&[1, 0, 0], p).value(), 0);
        assert_eq!(orbit_size_mod_p(&[2, 1, 0], p).value(), 0);
        let p5 = Prime::new(5).unwrap();
        assert_eq!(orbit_size_mod_p(&[1, 1, 0], p5).value(), 3);
    }

    fn exact_binom(a: u64, b: u64) -> u128 {
        if b > a {
            return 0;
        }
        let mut acc: u128 = 1;
        for k in 0..b as u128 {
            acc = acc * (a as u128 - k) / (k + 1);
        }
        acc
    }

    proptest! {
        #[test]
        fn lucas_agrees_with_exact(a in 0u64..60, b in 0u64..60, pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            let q = Prime::new(p).unwrap();
            prop_assert_eq!(binom_mod_p(a as i64, b as i64, q).value() as u128, exact_binom(a, b) % p as u128);
        }

        #[test]
        fn pascal_rule(a in 1i64..200, b in 1i64..200, pi in 0usize..4) {
            let q = Prime::new([2u64, 3, 5, 7][pi]).unwrap();
            prop_assert_eq!(binom_mod_p(a, b, q), binom_mod_p(a - 1, b, q) + binom_mod_p(a - 1, b - 1, q));
        }

        #[test]
        fn inverse_is_inverse(v in 1i64..10_000) {
            let q = Prime::new(10007).unwrap();
            let x = q.elem(v);
            prop_assert_eq!(x * x.inv().unwrap(), q.one());
        }
    }
}
