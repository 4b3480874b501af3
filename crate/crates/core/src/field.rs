//! Arithmetic in the prime field F_p.
//!
//! [`PrimeField`] is a validated modulus that performs arithmetic on raw
//! `u32` residues; the rest of the crate stores vectors and polynomial
//! coefficients as plain `u32` and goes through it. [`FieldElement`] is the
//! self-describing scalar for callers that want modulus checks on every op.

use std::fmt;

use crate::error::{Error, Result};

/// Largest accepted modulus (the largest prime below 2^16).
pub const MAX_PRIME: u32 = 65521;

/// A prime modulus p, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
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

    /// Multiplicative inverse by the extended Euclidean algorithm on integers.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::ZeroDivisor(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(s0))
    }

    pub fn div(self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element(self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            modulus: self.p,
        }
    }

    /// Dot product of two equal-length vectors.
    pub fn dot(self, a: &[u32], b: &[u32]) -> u32 {
        let p = self.p as u64;
        let s = a
            .iter()
            .zip(b)
            .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % p);
        s as u32
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A residue together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: u32,
}

/// The operations accepted by [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    /// Raise `a` to the given exponent. Exponents are integers, not field
    /// elements, so they are carried by the op itself.
    Pow(u64),
}

impl FieldElement {
    pub fn new(field: PrimeField, value: i64) -> Self {
        field.element(value)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    fn same_field(self, other: Self) -> Result<PrimeField> {
        if self.modulus != other.modulus {
            return Err(Error::FieldMismatch(self.modulus, other.modulus));
        }
        Ok(self.field())
    }

    fn with(self, value: u32) -> Self {
        Self {
            value,
            modulus: self.modulus,
        }
    }

    pub fn add(self, rhs: Self) -> Result<Self> {
        let f = self.same_field(rhs)?;
        Ok(self.with(f.add(self.value, rhs.value)))
    }

    pub fn sub(self, rhs: Self) -> Result<Self> {
        let f = self.same_field(rhs)?;
        Ok(self.with(f.sub(self.value, rhs.value)))
    }

    pub fn mul(self, rhs: Self) -> Result<Self> {
        let f = self.same_field(rhs)?;
        Ok(self.with(f.mul(self.value, rhs.value)))
    }

    pub fn div(self, rhs: Self) -> Result<Self> {
        let f = self.same_field(rhs)?;
        Ok(self.with(f.div(self.value, rhs.value)?))
    }

    pub fn neg(self) -> Self {
        self.with(self.field().neg(self.value))
    }

    pub fn inv(self) -> Result<Self> {
        Ok(self.with(self.field().inv(self.value)?))
    }

    pub fn pow(self, e: u64) -> Self {
        self.with(self.field().pow(self.value, e))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Applies `op` to `a` (and `b` for binary ops). Unary ops ignore `b` apart
/// from the modulus check.
pub fn field_arith(a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
    a.same_field(b)?;
    match op {
        FieldOp::Add => a.add(b),
        FieldOp::Sub => a.sub(b),
        FieldOp::Mul => a.mul(b),
        FieldOp::Div => a.div(b),
        FieldOp::Neg => Ok(a.neg()),
        FieldOp::Inv => a.inv(),
        FieldOp::Pow(e) => Ok(a.pow(e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(p: u32, v: i64) -> FieldElement {
        PrimeField::new(p).unwrap().element(v)
    }

    #[test]
    fn rejects_composites_and_large() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(MAX_PRIME).is_ok());
        assert!(PrimeField::new(65537).is_err());
    }

    #[test]
    fn small_inverses() {
        assert_eq!(fe(5, 1).inv().unwrap().value(), 1);
        assert_eq!(fe(5, 2).inv().unwrap().value(), 3);
        assert_eq!(fe(5, 0).inv(), Err(Error::ZeroDivisor(5)));
    }

    #[test]
    fn pow_of_two_mod_three() {
        // 2^1 = 2, 2^2 = 1, 2^3 = 2, 2^4 = 1
        let expect = [1, 2, 1, 2, 1];
        for (e, &want) in expect.iter().enumerate() {
            let got = field_arith(fe(3, 2), fe(3, 0), FieldOp::Pow(e as u64)).unwrap();
            assert_eq!(got.value(), want, "2^{e}");
        }
    }

    #[test]
    fn mismatched_moduli() {
        assert_eq!(fe(3, 1).add(fe(5, 1)), Err(Error::FieldMismatch(3, 5)));
        assert_eq!(
            field_arith(fe(2, 1), fe(3, 1), FieldOp::Neg),
            Err(Error::FieldMismatch(2, 3))
        );
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u32, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for a in 0..p {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in 0..p {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in 0..p {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_large_prime() {
        let f = PrimeField::new(MAX_PRIME).unwrap();
        for a in [1u32, 2, 12345, MAX_PRIME - 1] {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }
}
