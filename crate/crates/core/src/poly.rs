//! The polynomial ring F_p[Y], its quotient rings, and factorization.
//!
//! Polynomials are dense, lowest coefficient first, with trailing zeros
//! trimmed so that equality is structural. The text form is a sum of terms
//! `c`, `Y`, `Y^k`, `cY^k` in ascending degree, e.g. `1+2Y+Y^3`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: i64) -> Self {
        Self::from_coeffs(field, vec![field.reduce(c)])
    }

    /// `c * Y^deg`.
    pub fn monomial(field: PrimeField, c: i64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = field.reduce(c);
        Self::from_coeffs(field, coeffs)
    }

    pub fn y(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    /// `Y^m - 1`.
    pub fn y_pow_minus_one(field: PrimeField, m: usize) -> Self {
        let mut coeffs = vec![0; m + 1];
        coeffs[m] = 1;
        coeffs[0] = field.sub(coeffs[0], 1);
        Self::from_coeffs(field, coeffs)
    }

    /// Builds a polynomial from residues already in `[0, p)`.
    pub fn from_coeffs(field: PrimeField, coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.p()));
        let mut poly = Self { field, coeffs };
        poly.trim();
        poly
    }

    /// Builds a polynomial from arbitrary integers, reducing mod p.
    pub fn from_ints(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    /// Coefficient of `Y^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Dense coefficient vector padded or truncated to `len` entries.
    pub fn coeff_vec(&self, len: usize) -> Vec<u32> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; callers use this only
    /// where zero has been excluded or does not matter.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn leading_element(&self) -> FieldElement {
        self.field.element(self.leading() as i64)
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.field, other.field,
            "polynomials over different fields"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_field(other);
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_coeffs(f, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_field(other);
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_coeffs(f, coeffs)
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::from_coeffs(self.field, acc.into_iter().map(|c| c as u32).collect())
    }

    /// Multiplication by `Y^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_coeffs(self.field, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, (i as u64 % f.p() as u64) as u32))
            .collect();
        Self::from_coeffs(f, coeffs)
    }

    /// Quotient and remainder; errors when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor);
        let f = self.field;
        let dd = divisor.degree().ok_or(Error::ZeroDivisor(f.p()))?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = f.mul(c, lead_inv);
            quot[i - dd] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = f.sub(rem[idx], f.mul(q, dc));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(f, quot), Self::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// True iff `self` divides `other` (zero divides only zero).
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self
            .field
            .inv(self.leading())
            .expect("leading coefficient is nonzero");
        self.scale(inv)
    }

    /// Monic reciprocal `Y^deg f * f(1/Y)`, normalized.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeff(0) == 0 {
            return Err(Error::NotInvertibleAtZero);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Self::from_coeffs(self.field, coeffs).monic())
    }

    /// Whether the monic normalization equals its own reciprocal.
    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal()
            .map(|r| r == self.monic())
            .unwrap_or(false)
    }

    /// Irreducibility by trial division over monic polynomials of degree
    /// up to half the degree.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        for k in 1..=d / 2 {
            for cand in MonicPolys::new(self.field, k) {
                if cand.divides(self) {
                    return false;
                }
            }
        }
        true
    }

    /// Factors into monic irreducibles with multiplicities.
    ///
    /// Candidates are enumerated in degree order and divided out
    /// completely, so every candidate that divides the running cofactor is
    /// irreducible. The leading coefficient is dropped; see
    /// [`Poly::leading_element`].
    pub fn factor(&self) -> Result<Vec<(Poly, usize)>> {
        match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            _ => {}
        }
        let mut rest = self.monic();
        let mut out = Vec::new();
        let mut k = 1;
        while 2 * k <= rest.deg() {
            for cand in MonicPolys::new(self.field, k) {
                let mut mult = 0;
                loop {
                    let (q, r) = rest.div_rem(&cand)?;
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    out.push((cand, mult));
                }
                if 2 * k > rest.deg() {
                    break;
                }
            }
            k += 1;
        }
        if rest.deg() >= 1 {
            out.push((rest, 1));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }
}

/// Degree first, then coefficients from the top down: the order in which
/// [`MonicPolys`] enumerates candidates.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .p()
            .cmp(&other.field.p())
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monic polynomials of a fixed degree, constant term varying fastest.
pub struct MonicPolys {
    field: PrimeField,
    digits: Vec<u32>,
    done: bool,
}

impl MonicPolys {
    pub fn new(field: PrimeField, degree: usize) -> Self {
        Self {
            field,
            digits: vec![0; degree],
            done: false,
        }
    }
}

impl Iterator for MonicPolys {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        if self.done {
            return None;
        }
        let mut coeffs = self.digits.clone();
        coeffs.push(1);
        let poly = Poly::from_coeffs(self.field, coeffs);
        let p = self.field.p();
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < p {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(poly)
    }
}

/// Monic gcd. Errors when both inputs are zero.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let r = r0.rem(&r1)?;
        r0 = r1;
        r1 = r;
    }
    Ok(r0.monic())
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn poly_ext_gcd(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let field = a.field();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
    let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        r0 = std::mem::replace(&mut r1, r);
        let s = s0.sub(&q.mul(&s1));
        s0 = std::mem::replace(&mut s1, s);
        let t = t0.sub(&q.mul(&t1));
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = field.inv(r0.leading())?;
    Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
}

/// Monic least common multiple of a nonempty list of nonzero polynomials.
pub fn poly_lcm(polys: &[Poly]) -> Result<Poly> {
    let (first, rest) = polys.split_first().ok_or(Error::EmptyInput)?;
    if polys.iter().any(Poly::is_zero) {
        return Err(Error::ZeroDivisor(first.field().p()));
    }
    let mut acc = first.monic();
    for p in rest {
        let g = poly_gcd(&acc, p)?;
        acc = acc.mul(&p.exact_div(&g)).monic();
    }
    Ok(acc)
}

/// Parses the polynomial text grammar; coefficients are reduced mod p.
pub fn parse_poly(field: PrimeField, text: &str) -> Result<Poly> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut acc: Vec<i64> = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut first = true;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if !first {
            return Err(Error::Parse(format!("expected '+' in {text:?}")));
        }
        first = false;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef = if i > start {
            s[start..i]
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad coefficient in {text:?}: {e}")))?
        } else {
            1
        };
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        let mut exp = 0usize;
        if i < bytes.len() && bytes[i] == b'Y' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(Error::Parse(format!("missing exponent in {text:?}")));
                }
                exp = s[es..i]
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad exponent in {text:?}: {e}")))?;
            }
        } else if i == start {
            return Err(Error::Parse(format!("empty term in {text:?}")));
        }
        if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            return Err(Error::Parse(format!(
                "unexpected {:?} in {text:?}",
                bytes[i] as char
            )));
        }
        if acc.len() <= exp {
            acc.resize(exp + 1, 0);
        }
        acc[exp] = (acc[exp] + sign * (coef % field.p() as i64)).rem_euclid(field.p() as i64);
    }
    Ok(Poly::from_ints(field, &acc))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "Y")?,
                (1, c) => write!(f, "{c}Y")?,
                (i, 1) => write!(f, "Y^{i}")?,
                (i, c) => write!(f, "{c}Y^{i}")?,
            }
        }
        Ok(())
    }
}

/// An element of F_p[Y]/(modulus), held by its reduced representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    rep: Poly,
    modulus: Poly,
}

impl Residue {
    /// Reduces `rep` modulo `modulus`, which must be monic of degree >= 1.
    pub fn new(rep: Poly, modulus: Poly) -> Self {
        assert!(
            modulus.is_monic() && modulus.deg() >= 1,
            "residue modulus must be monic of positive degree"
        );
        let rep = rep.rem(&modulus).expect("modulus is nonzero");
        Self { rep, modulus }
    }

    pub fn zero(modulus: Poly) -> Self {
        Self::new(Poly::zero(modulus.field()), modulus)
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn field(&self) -> PrimeField {
        self.rep.field()
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Coefficient vector of length `deg(modulus)`.
    pub fn to_vec(&self) -> Vec<u32> {
        self.rep.coeff_vec(self.modulus.deg())
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            rep: self.rep.add(&other.rep),
            modulus: self.modulus.clone(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            rep: self.rep.sub(&other.rep),
            modulus: self.modulus.clone(),
        })
    }

    /// Product of two classes in the same quotient ring.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_poly(&other.rep))
    }

    /// The module action of F_p[Y] on the quotient ring.
    pub fn mul_poly(&self, h: &Poly) -> Self {
        Self::new(self.rep.mul(h), self.modulus.clone())
    }

    pub fn scale(&self, c: u32) -> Self {
        Self {
            rep: self.rep.scale(c),
            modulus: self.modulus.clone(),
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// Free-function form of [`Residue::mul`].
pub fn poly_mul_mod(a: &Residue, b: &Residue) -> Result<Residue> {
    a.mul(b)
}

/// Free-function form of [`Poly::factor`].
pub fn poly_factor(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    f.factor()
}

/// Factorization of `Y^m - 1` split into self-reciprocal irreducibles and
/// reciprocal pairs `(h, h*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub self_reciprocal: Vec<(Poly, usize)>,
    pub reciprocal_pairs: Vec<(Poly, Poly, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> Poly {
        let field = self.unit.field();
        let mut acc = Poly::constant(field, self.unit.value() as i64);
        for (g, e) in &self.self_reciprocal {
            acc = acc.mul(&g.pow(*e as u64));
        }
        for (h, hs, e) in &self.reciprocal_pairs {
            acc = acc.mul(&h.mul(hs).pow(*e as u64));
        }
        acc
    }
}

/// Factors `Y^(p^a * m_dot) - 1` over F_p, where `gcd(p, m_dot) = 1`.
///
/// Each irreducible factor of `Y^m_dot - 1` appears with multiplicity
/// `p^a`. Pairs are reported with the smaller member (in [`Poly`] order)
/// first.
pub fn classify_cyclotomic(m_dot: usize, p: u32, a: u32) -> Result<Factorization> {
    let field = PrimeField::new(p)?;
    if m_dot == 0 || m_dot.is_multiple_of(p as usize) {
        return Err(Error::NotCoprime { p, m: m_dot });
    }
    let mult = (p as usize).pow(a);
    let base = Poly::y_pow_minus_one(field, m_dot);
    let factors = base.factor()?;
    let mut self_reciprocal = Vec::new();
    let mut reciprocal_pairs = Vec::new();
    for (f, e) in &factors {
        debug_assert_eq!(*e, 1, "Y^m - 1 is squarefree when p does not divide m");
        let r = f.reciprocal()?;
        if &r == f {
            self_reciprocal.push((f.clone(), mult));
        } else if f < &r {
            reciprocal_pairs.push((f.clone(), r, mult));
        }
    }
    Ok(Factorization {
        unit: field.element(base.leading() as i64),
        self_reciprocal,
        reciprocal_pairs,
    })
}

/// Splits `m` as `p^a * m_dot` with `p` not dividing `m_dot`.
pub fn split_p_part(m: usize, p: u32) -> (u32, usize) {
    let p = p as usize;
    let (mut a, mut rest) = (0u32, m);
    while rest > 0 && rest % p == 0 {
        rest /= p;
        a += 1;
    }
    (a, rest)
}
