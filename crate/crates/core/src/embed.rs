//! Embedding of a σ-code into a quasi-cyclic code of length `m' k`, where
//! `m'` is the order of σ and `k` its number of cycles.
//!
//! [`lambda1`] repeats each cycle block until it has length `m'`,
//! [`lambda2`] interleaves the blocks, and [`mu`] is the polynomial form of
//! the result in `(F_p[Y]/(Y^{m'} - 1))^k`.
//!
//! The replication weights block `i` by `n_i = m'/m_i` in every inner
//! product taken after embedding. When those weights differ modulo p the
//! orthogonality statements below do not transfer from the original code,
//! so the checked entry points report the disagreement as an error and the
//! `*_verdicts` functions expose the raw booleans.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lincode::LinearCode;
use crate::perm::Permutation;
use crate::poly::{Poly, Residue};
use crate::sigma::SigmaCode;

/// A tuple of `k` residues, all modulo `Y^{m'} - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeModuleElement {
    parts: Vec<Residue>,
}

impl PrimeModuleElement {
    pub fn new(parts: Vec<Residue>) -> Result<Self> {
        if let Some(first) = parts.first() {
            if parts.iter().any(|r| r.modulus() != first.modulus()) {
                return Err(Error::ShapeMismatch);
            }
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[Residue] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// The exponent `m'` of the common modulus.
    pub fn m_prime(&self) -> usize {
        self.parts.first().map_or(0, |r| r.modulus().deg())
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Residue::is_zero)
    }
}

impl fmt::Display for PrimeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

fn check_len(sigma: &Permutation, a: &[u32]) -> Result<()> {
    if a.len() != sigma.n() {
        return Err(Error::Dimension {
            expected: sigma.n(),
            got: a.len(),
        });
    }
    Ok(())
}

/// Each cycle block of `a`, read in cycle order, repeated up to length `m'`;
/// blocks are concatenated.
pub fn lambda1(sigma: &Permutation, a: &[u32]) -> Result<Vec<u32>> {
    check_len(sigma, a)?;
    let m_prime = sigma.order();
    let mut out = Vec::with_capacity(m_prime * sigma.num_cycles());
    for cyc in sigma.cycles() {
        out.extend((0..m_prime).map(|t| a[cyc[t % cyc.len()] - 1]));
    }
    Ok(out)
}

/// Interleaves `k` consecutive blocks of length `m'`: output position
/// `j k + i` holds entry `j` of block `i`.
pub fn lambda2(blocks: &[u32], k: usize, m_prime: usize) -> Result<Vec<u32>> {
    if blocks.len() != k * m_prime {
        return Err(Error::Dimension {
            expected: k * m_prime,
            got: blocks.len(),
        });
    }
    let mut out = vec![0u32; blocks.len()];
    for i in 0..k {
        for j in 0..m_prime {
            out[j * k + i] = blocks[i * m_prime + j];
        }
    }
    Ok(out)
}

pub fn lambda(sigma: &Permutation, a: &[u32]) -> Result<Vec<u32>> {
    lambda2(&lambda1(sigma, a)?, sigma.num_cycles(), sigma.order())
}

/// `Σ_{j < n_i} Y^{j m_i}` with `n_i = m'/m_i`.
pub fn replicator(field: PrimeField, m_i: usize, m_prime: usize) -> Poly {
    let mut coeffs = vec![0u32; m_prime];
    for j in (0..m_prime).step_by(m_i) {
        coeffs[j] = 1;
    }
    Poly::from_coeffs(field, coeffs)
}

/// Polynomial form of [`lambda`]: part `i` is the replicated block `i`.
pub fn mu(field: PrimeField, sigma: &Permutation, a: &[u32]) -> Result<PrimeModuleElement> {
    let m_prime = sigma.order();
    let blocks = lambda1(sigma, a)?;
    let modulus = Poly::y_pow_minus_one(field, m_prime);
    let parts = blocks
        .chunks(m_prime)
        .map(|b| {
            let coeffs = b.iter().map(|&x| x % field.p()).collect();
            Residue::new(Poly::from_coeffs(field, coeffs), modulus.clone())
        })
        .collect();
    Ok(PrimeModuleElement { parts })
}

fn check_cyclic_modulus(r: &Residue) -> Result<usize> {
    let m = r.modulus().deg();
    if r.modulus() != &Poly::y_pow_minus_one(r.field(), m) {
        return Err(Error::WrongModulus);
    }
    Ok(m)
}

/// The involution `Y -> Y^{m'-1}` on `F_p[Y]/(Y^{m'} - 1)`.
pub fn conjugate(r: &Residue) -> Result<Residue> {
    let m = check_cyclic_modulus(r)?;
    let v = r.to_vec();
    let coeffs = (0..m).map(|j| v[(m - j) % m]).collect();
    Ok(Residue::new(
        Poly::from_coeffs(r.field(), coeffs),
        r.modulus().clone(),
    ))
}

/// `Σ a_i * conj(b_i)`.
pub fn hermitian_inner(a: &PrimeModuleElement, b: &PrimeModuleElement) -> Result<Residue> {
    if a.k() != b.k() || a.k() == 0 || a.parts[0].modulus() != b.parts[0].modulus() {
        return Err(Error::ShapeMismatch);
    }
    let mut acc = Residue::zero(a.parts[0].modulus().clone());
    for (x, y) in a.parts.iter().zip(&b.parts) {
        acc = acc.add(&x.mul(&conjugate(y)?)?)?;
    }
    Ok(acc)
}

/// Both sides of the orthogonality correspondence, computed independently:
/// whether `T_σ^j(a) · b = 0` for all `j < m'`, and whether
/// `<μ(a), μ(b)> = 0`.
pub fn orthogonality_verdicts(
    field: PrimeField,
    sigma: &Permutation,
    a: &[u32],
    b: &[u32],
) -> Result<(bool, bool)> {
    check_len(sigma, a)?;
    check_len(sigma, b)?;
    let mut cur = a.to_vec();
    let mut orbit = true;
    for _ in 0..sigma.order() {
        if field.dot(&cur, b) != 0 {
            orbit = false;
            break;
        }
        cur = sigma.apply(&cur)?;
    }
    let herm = hermitian_inner(&mu(field, sigma, a)?, &mu(field, sigma, b)?)?.is_zero();
    Ok((orbit, herm))
}

/// Checked form of [`orthogonality_verdicts`]: disagreement is an error.
pub fn orthogonality_equiv(
    field: PrimeField,
    sigma: &Permutation,
    a: &[u32],
    b: &[u32],
) -> Result<(bool, bool)> {
    let (orbit, hermitian) = orthogonality_verdicts(field, sigma, a, b)?;
    if orbit != hermitian {
        return Err(Error::EquivalenceViolation { orbit, hermitian });
    }
    Ok((orbit, hermitian))
}

/// The image `λ(F_p^n)` as a code of length `m' k`.
pub fn lambda_space(field: PrimeField, sigma: &Permutation) -> LinearCode {
    let n = sigma.n();
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|j| {
            let mut e = vec![0u32; n];
            e[j] = 1;
            lambda(sigma, &e).expect("length n")
        })
        .collect();
    LinearCode::span(field, sigma.order() * sigma.num_cycles(), &rows).expect("lengths agree")
}

/// `λ(C)` as a code of length `m' k`.
pub fn lambda_code(sigma: &Permutation, code: &LinearCode) -> LinearCode {
    let rows: Vec<Vec<u32>> = code
        .basis()
        .iter()
        .map(|b| lambda(sigma, b).expect("length n"))
        .collect();
    LinearCode::span(code.field(), sigma.order() * sigma.num_cycles(), &rows)
        .expect("lengths agree")
}

/// Whether `{c' in λ(F_p^n) : c' · λ(c) = 0 for all c in C}` equals
/// `λ(dual(C))`.
pub fn lambda_dual_check(sc: &SigmaCode) -> bool {
    let sigma = sc.sigma();
    let c1 = lambda_space(sc.field(), sigma)
        .intersect(&lambda_code(sigma, sc.code()).dual())
        .expect("lengths agree");
    c1 == lambda_code(sigma, &sc.code().dual())
}

/// Euclidean and Hermitian self-duality verdicts for a σ-code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelfDuality {
    pub euclidean: bool,
    pub hermitian: bool,
}

/// Both verdicts without cross-checking them.
pub fn self_dual_verdicts(sc: &SigmaCode) -> SelfDuality {
    let euclidean = sc.code() == &sc.code().dual();
    let images: Vec<PrimeModuleElement> = sc
        .code()
        .basis()
        .iter()
        .map(|b| mu(sc.field(), sc.sigma(), b).expect("length n"))
        .collect();
    let isotropic = images.iter().all(|x| {
        images
            .iter()
            .all(|y| hermitian_inner(x, y).expect("same shape").is_zero())
    });
    SelfDuality {
        euclidean,
        hermitian: isotropic && 2 * sc.dim() == sc.n(),
    }
}

/// Self-duality verdicts, which must agree.
pub fn is_self_dual(sc: &SigmaCode) -> Result<SelfDuality> {
    let v = self_dual_verdicts(sc);
    if v.euclidean != v.hermitian {
        return Err(Error::CorollaryViolation {
            euclidean: v.euclidean,
            hermitian: v.hermitian,
        });
    }
    Ok(v)
}

/// `T^k` on a length `m' k` vector: a right rotation by `k` places.
pub fn qc_shift(v: &[u32], k: usize) -> Vec<u32> {
    let mut out = v.to_vec();
    if !out.is_empty() {
        out.rotate_right(k % v.len());
    }
    out
}
