//! Prime field arithmetic.
//!
//! Coefficients are stored as bare `u32` residues inside polynomials and
//! matrices; [`PrimeField`] carries the modulus and does the arithmetic.
//! [`FieldElem`] is the self-describing value type used at API boundaries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Default characteristic.
pub const DEFAULT_PRIME: u32 = 32003;

/// The prime field `Z/p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds `Z/p`, rejecting composite moduli and `p > 2^31`.
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=(1u32 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::Input(format!("field characteristic {p} is not a prime <= 2^31")));
        }
        Ok(PrimeField { p })
    }

    pub fn char(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.reduce_i64(t0))
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn elem(self, v: u32) -> FieldElem {
        FieldElem { value: v % self.p, modulus: self.p }
    }

    /// Signed representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub value: u32,
    pub modulus: u32,
}

impl FieldElem {
    pub fn new(value: i64, field: PrimeField) -> Self {
        FieldElem { value: field.reduce_i64(value), modulus: field.char() }
    }

    fn field(self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Self> {
        Ok(FieldElem { value: self.field().inv(self.value)?, modulus: self.modulus })
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        FieldElem { value: self.field().add(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        FieldElem { value: self.field().sub(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        FieldElem { value: self.field().mul(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> Self {
        FieldElem { value: self.field().neg(self.value), modulus: self.modulus }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext_euclid_inverse(a: i64, p: i64) -> i64 {
        // brute force is fine at this size
        (1..p).find(|x| (a * x) % p == 1).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let f = PrimeField::new(32003).unwrap();
        assert_eq!((f.elem(1) + f.elem(32002)).value, 0);
    }

    #[test]
    fn inverse_of_two() {
        let f = PrimeField::new(32003).unwrap();
        let oracle = ext_euclid_inverse(2, 32003);
        assert_eq!(oracle, 16002);
        assert_eq!(f.elem(2).inv().unwrap().value, 16002);
        assert_eq!(f.mul(2, 16002), 1);
    }

    #[test]
    fn small_field_product() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!((f.elem(3) * f.elem(4)).value, 2);
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = PrimeField::new(7).unwrap();
        assert!(matches!(f.elem(0).inv(), Err(Error::DivisionByZero)));
        assert_eq!(Error::DivisionByZero.to_string(), "division by zero");
    }

    #[test]
    fn rejects_composite_and_huge() {
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(2147483659).is_err());
    }

    #[test]
    fn every_unit_inverts() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }
}
