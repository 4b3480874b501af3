//! σ-codes: linear codes invariant under a coordinate permutation, and the
//! correspondence with submodules of `R_1 x ... x R_k`, `R_i = F_p[Y]/(Y^{m_i} - 1)`.
//!
//! Under [`phi`] the coordinates of cycle `i` become the coefficients of the
//! `i`-th part, in the order the cycle is written. Applying `T_σ` to a vector
//! is then multiplication by `Y` in every part.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lincode::LinearCode;
use crate::perm::{parse_permutation, Permutation};
use crate::poly::{parse_poly, Poly, Residue};

/// A tuple of residues, part `i` living in `F_p[Y]/(Y^{m_i} - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    parts: Vec<Residue>,
}

impl ModuleElement {
    pub fn new(parts: Vec<Residue>) -> Self {
        Self { parts }
    }

    pub fn zero(field: PrimeField, sigma: &Permutation) -> Self {
        Self {
            parts: sigma
                .cycle_lengths()
                .into_iter()
                .map(|m| Residue::zero(Poly::y_pow_minus_one(field, m)))
                .collect(),
        }
    }

    /// Reduces one polynomial per cycle into the matching quotient ring.
    pub fn from_polys(sigma: &Permutation, polys: Vec<Poly>) -> Result<Self> {
        if polys.len() != sigma.num_cycles() {
            return Err(Error::CycleTypeMismatch);
        }
        let parts = polys
            .into_iter()
            .zip(sigma.cycle_lengths())
            .map(|(p, m)| {
                let modulus = Poly::y_pow_minus_one(p.field(), m);
                Residue::new(p, modulus)
            })
            .collect();
        Ok(Self { parts })
    }

    /// Parses comma-separated polynomials, one per cycle of `sigma`.
    pub fn parse(field: PrimeField, sigma: &Permutation, text: &str) -> Result<Self> {
        let text = text.trim();
        let text = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(text);
        let polys = text
            .split(',')
            .map(|s| parse_poly(field, s))
            .collect::<Result<Vec<_>>>()?;
        Self::from_polys(sigma, polys)
    }

    pub fn parts(&self) -> &[Residue] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Residue::is_zero)
    }

    /// Whether the part count and moduli fit the cycle type of `sigma`.
    pub fn matches(&self, sigma: &Permutation) -> bool {
        self.parts.len() == sigma.num_cycles()
            && self
                .parts
                .iter()
                .zip(sigma.cycle_lengths())
                .all(|(r, m)| r.modulus() == &Poly::y_pow_minus_one(r.field(), m))
    }

    /// The module action of `h` on every part.
    pub fn mul_poly(&self, h: &Poly) -> Self {
        Self {
            parts: self.parts.iter().map(|r| r.mul_poly(h)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.parts.len() != other.parts.len() {
            return Err(Error::ShapeMismatch);
        }
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { parts })
    }
}

impl fmt::Display for ModuleElement {
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

/// The map `c -> (c_1(Y), ..., c_k(Y))` with `c_i(Y) = Σ_j c_{σ^j(t_i)} Y^j`.
pub fn phi(field: PrimeField, sigma: &Permutation, c: &[u32]) -> Result<ModuleElement> {
    if c.len() != sigma.n() {
        return Err(Error::Dimension {
            expected: sigma.n(),
            got: c.len(),
        });
    }
    let parts = sigma
        .cycles()
        .iter()
        .map(|cyc| {
            let coeffs = cyc.iter().map(|&pt| c[pt - 1] % field.p()).collect();
            Residue::new(
                Poly::from_coeffs(field, coeffs),
                Poly::y_pow_minus_one(field, cyc.len()),
            )
        })
        .collect();
    Ok(ModuleElement { parts })
}

/// Inverse of [`phi`].
pub fn phi_inv(sigma: &Permutation, m: &ModuleElement) -> Result<Vec<u32>> {
    if !m.matches(sigma) {
        return Err(Error::CycleTypeMismatch);
    }
    let mut out = vec![0u32; sigma.n()];
    for (cyc, part) in sigma.cycles().iter().zip(m.parts()) {
        for (j, &pt) in cyc.iter().enumerate() {
            out[pt - 1] = part.rep().coeff(j);
        }
    }
    Ok(out)
}

/// A linear code together with a permutation it is invariant under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCode {
    sigma: Permutation,
    code: LinearCode,
    module_generators: Vec<ModuleElement>,
}

impl SigmaCode {
    /// Wraps an existing code after checking invariance.
    pub fn from_code(sigma: Permutation, code: LinearCode) -> Result<Self> {
        if !is_sigma_code(&sigma, &code)? {
            return Err(Error::InvarianceViolation);
        }
        Ok(Self {
            sigma,
            code,
            module_generators: Vec::new(),
        })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn field(&self) -> PrimeField {
        self.code.field()
    }

    pub fn module_generators(&self) -> &[ModuleElement] {
        &self.module_generators
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn dim(&self) -> usize {
        self.code.dim()
    }

    /// [`phi`] of every RREF basis row.
    pub fn module_basis(&self) -> Vec<ModuleElement> {
        self.code
            .basis()
            .iter()
            .map(|b| phi(self.field(), &self.sigma, b).expect("basis rows have length n"))
            .collect()
    }

    /// Text record: `p=`, `n=`, `sigma=` and one `gen=` line per module
    /// generator.
    pub fn to_record(&self) -> String {
        let mut s = format!(
            "p={}\nn={}\nsigma={}\n",
            self.field().p(),
            self.n(),
            self.sigma
        );
        for g in &self.module_generators {
            s.push_str(&format!("gen={g}\n"));
        }
        s
    }
}

impl fmt::Display for SigmaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_record())
    }
}

/// Parses the record written by [`SigmaCode::to_record`] and rebuilds the
/// code from its generators.
impl FromStr for SigmaCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut p, mut n, mut sigma_text) = (None, None, None);
        let mut gens = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {line:?}")))?;
            let value = value.trim();
            match key.trim() {
                "p" => {
                    p = Some(value.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?)
                }
                "n" => {
                    n = Some(value.parse::<usize>().map_err(|e| Error::Parse(e.to_string()))?)
                }
                "sigma" => sigma_text = Some(value.to_string()),
                "gen" => gens.push(value.to_string()),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        let missing = |k: &str| Error::Parse(format!("record lacks {k}"));
        let field = PrimeField::new(p.ok_or_else(|| missing("p"))?)?;
        let sigma = parse_permutation(
            &sigma_text.ok_or_else(|| missing("sigma"))?,
            n.ok_or_else(|| missing("n"))?,
        )?;
        let gens = gens
            .iter()
            .map(|g| ModuleElement::parse(field, &sigma, g))
            .collect::<Result<Vec<_>>>()?;
        code_from_generators(field, &sigma, &gens)
    }
}

/// The σ-code whose module image is generated by `gens`: the F_p-span of
/// `Y^j g` for every generator and `0 <= j < order(σ)`, pulled back.
pub fn code_from_generators(
    field: PrimeField,
    sigma: &Permutation,
    gens: &[ModuleElement],
) -> Result<SigmaCode> {
    let order = sigma.order();
    let y = Poly::y(field);
    let mut vectors = Vec::with_capacity(gens.len() * order);
    for g in gens {
        if !g.matches(sigma) || g.parts().iter().any(|r| r.field() != field) {
            return Err(Error::CycleTypeMismatch);
        }
        let mut cur = g.clone();
        for _ in 0..order {
            vectors.push(phi_inv(sigma, &cur)?);
            cur = cur.mul_poly(&y);
        }
    }
    let code = LinearCode::span(field, sigma.n(), &vectors)?;
    Ok(SigmaCode {
        sigma: sigma.clone(),
        code,
        module_generators: gens.to_vec(),
    })
}

/// Invariance test on the basis rows (sufficient by linearity).
pub fn is_sigma_code(sigma: &Permutation, code: &LinearCode) -> Result<bool> {
    if code.n() != sigma.n() {
        return Err(Error::Dimension {
            expected: sigma.n(),
            got: code.n(),
        });
    }
    for b in code.basis() {
        if !code.contains(&sigma.apply(b)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The orbit code of `a`: the span of `T_σ^j(a)` for `0 <= j < order(σ)`.
///
/// Each cycle block of `a` (read in cycle order) must have linearly
/// independent cyclic shifts; otherwise the offending 0-based cycle index
/// is reported.
pub fn algorithm1(field: PrimeField, sigma: &Permutation, a: &[u32]) -> Result<SigmaCode> {
    if a.len() != sigma.n() {
        return Err(Error::Dimension {
            expected: sigma.n(),
            got: a.len(),
        });
    }
    if let Some(cycle) = dependent_block(field, sigma, a) {
        return Err(Error::BlockDependence { cycle });
    }
    let mut vectors = Vec::with_capacity(sigma.order());
    let mut cur: Vec<u32> = a.iter().map(|&x| x % field.p()).collect();
    for _ in 0..sigma.order() {
        let next = sigma.apply(&cur)?;
        vectors.push(cur);
        cur = next;
    }
    let code = LinearCode::span(field, sigma.n(), &vectors)?;
    Ok(SigmaCode {
        sigma: sigma.clone(),
        code,
        module_generators: vec![phi(field, sigma, a)?],
    })
}

/// First cycle whose block has linearly dependent cyclic shifts.
pub fn dependent_block(field: PrimeField, sigma: &Permutation, a: &[u32]) -> Option<usize> {
    sigma.cycles().iter().position(|cyc| {
        let m = cyc.len();
        let mut block: Vec<u32> = cyc.iter().map(|&pt| a[pt - 1] % field.p()).collect();
        let mut shifts = Vec::with_capacity(m);
        for _ in 0..m {
            shifts.push(block.clone());
            block = crate::perm::cyclic_shift(&block);
        }
        crate::lincode::rank(field, &shifts, m) < m
    })
}

/// The Euclidean dual with the same permutation. Invariance is re-checked
/// rather than assumed.
pub fn sigma_dual(sc: &SigmaCode) -> Result<SigmaCode> {
    let dual = sc.code.dual();
    if !is_sigma_code(&sc.sigma, &dual)? {
        return Err(Error::InvarianceViolation);
    }
    Ok(SigmaCode {
        sigma: sc.sigma.clone(),
        code: dual,
        module_generators: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincode::DEFAULT_BUDGET;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn sig(s: &str, n: usize) -> Permutation {
        parse_permutation(s, n).unwrap()
    }

    fn gen(p: u32, sigma: &Permutation, text: &str) -> ModuleElement {
        ModuleElement::parse(PrimeField::new(p).unwrap(), sigma, text).unwrap()
    }

    #[test]
    fn phi_examples() {
        let s = sig("(1 2 3)(4 5)", 5);
        assert_eq!(phi(f2(), &s, &[1, 1, 0, 1, 1]).unwrap(), gen(2, &s, "1+Y, 1+Y"));
        assert_eq!(
            phi(f2(), &s, &[0, 1, 1, 1, 1]).unwrap(),
            gen(2, &s, "Y+Y^2, 1+Y")
        );
        assert!(phi(f2(), &s, &[0; 5]).unwrap().is_zero());
        assert!(phi(f2(), &s, &[0; 4]).is_err());
    }

    #[test]
    fn phi_inv_examples() {
        let s = sig("(1 2 3)(4 5)", 5);
        assert_eq!(phi_inv(&s, &gen(2, &s, "1+Y^2, 1+Y")).unwrap(), vec![1, 0, 1, 1, 1]);
        assert_eq!(phi_inv(&s, &gen(2, &s, "1+Y, 1+Y")).unwrap(), vec![1, 1, 0, 1, 1]);
        assert_eq!(
            phi_inv(&s, &ModuleElement::zero(f2(), &s)).unwrap(),
            vec![0; 5]
        );
        let other = sig("(1 2)(3 4 5)", 5);
        assert_eq!(
            phi_inv(&other, &gen(2, &s, "1, 1")),
            Err(Error::CycleTypeMismatch)
        );
    }

    #[test]
    fn phi_follows_written_cycle_order() {
        let s = sig("(1 5)(2 4)(3)", 5);
        let m = gen(3, &s, "2Y, Y, 2");
        assert_eq!(phi_inv(&s, &m).unwrap(), vec![0, 0, 2, 1, 2]);
    }

    #[test]
    fn generator_examples() {
        let s = sig("(1 2 3)(4 5)", 5);
        let sc = code_from_generators(f2(), &s, &[gen(2, &s, "1+Y, 1+Y")]).unwrap();
        assert_eq!(sc.dim(), 3);
        assert_eq!(sc.code().min_distance(DEFAULT_BUDGET).unwrap(), Some(2));

        let s = sig("(1 2)(3 4)(5)", 5);
        let sc = code_from_generators(f2(), &s, &[gen(2, &s, "1, 1, 1")]).unwrap();
        assert_eq!(sc.dim(), 2);
        assert_eq!(sc.code().min_distance(DEFAULT_BUDGET).unwrap(), Some(3));

        let s = sig("(1 2 3)(4 5 6)", 6);
        let sc = code_from_generators(f2(), &s, &[gen(2, &s, "1, 1+Y^2")]).unwrap();
        assert_eq!(sc.dim(), 3);
        assert_eq!(sc.code().min_distance(DEFAULT_BUDGET).unwrap(), Some(3));

        let wrong = sig("(1 2)(3 4 5 6)", 6);
        assert_eq!(
            code_from_generators(f2(), &wrong, &[gen(2, &s, "1, 1")]),
            Err(Error::CycleTypeMismatch)
        );
    }

    #[test]
    fn invariance_examples() {
        let s = sig("(1 2 3)(4 5)", 5);
        let sc = code_from_generators(f2(), &s, &[gen(2, &s, "1+Y, 1+Y")]).unwrap();
        assert!(is_sigma_code(&s, sc.code()).unwrap());
        assert!(is_sigma_code(&s, &LinearCode::full(f2(), 5)).unwrap());
        let e1 = LinearCode::span(f2(), 5, &[vec![1, 0, 0, 0, 0]]).unwrap();
        assert!(!is_sigma_code(&s, &e1).unwrap());
        assert_eq!(
            SigmaCode::from_code(s.clone(), e1),
            Err(Error::InvarianceViolation)
        );
        assert!(is_sigma_code(&s, &LinearCode::full(f2(), 4)).is_err());
    }

    #[test]
    fn algorithm1_examples() {
        let s = sig("(1 2)(3 4)(5)", 5);
        let sc = algorithm1(f2(), &s, &[1, 0, 1, 0, 1]).unwrap();
        assert_eq!(sc.dim(), 2);
        assert!(sc.code().contains(&[0, 1, 0, 1, 1]).unwrap());
        assert_eq!(sc.code().min_distance(DEFAULT_BUDGET).unwrap(), Some(3));

        let s = Permutation::full_cycle(3);
        let sc = algorithm1(f2(), &s, &[1, 0, 0]).unwrap();
        assert_eq!(sc.code(), &LinearCode::full(f2(), 3));
        assert_eq!(sc.code().min_distance(DEFAULT_BUDGET).unwrap(), Some(1));

        let s = sig("(1 2)(3 4)", 4);
        assert_eq!(
            algorithm1(f2(), &s, &[1, 1, 1, 1]),
            Err(Error::BlockDependence { cycle: 0 })
        );
    }

    #[test]
    fn dual_examples() {
        let s = sig("(1 2)(3 4)(5)", 5);
        let sc = code_from_generators(f2(), &s, &[gen(2, &s, "1, 1, 1")]).unwrap();
        let d = sigma_dual(&sc).unwrap();
        assert_eq!((d.n(), d.dim()), (5, 3));

        let full = SigmaCode::from_code(s.clone(), LinearCode::full(f2(), 5)).unwrap();
        assert_eq!(sigma_dual(&full).unwrap().dim(), 0);

        let s = sig("(1 2 3)(4 5)", 5);
        let sc = code_from_generators(f2(), &s, &[gen(2, &s, "1+Y, 1+Y")]).unwrap();
        assert_eq!(sigma_dual(&sc).unwrap().dim(), 2);
    }

    #[test]
    fn record_roundtrip() {
        let s = sig("(1 5)(2 4)(3)", 5);
        let f3 = PrimeField::new(3).unwrap();
        let sc = code_from_generators(f3, &s, &[gen(3, &s, "2Y, Y, 2")]).unwrap();
        let text = sc.to_record();
        assert_eq!(text, "p=3\nn=5\nsigma=(1 5)(2 4)(3)\ngen=2Y, Y, 2\n");
        let back: SigmaCode = text.parse().unwrap();
        assert_eq!(back, sc);
        assert!("p=3\nn=5\n".parse::<SigmaCode>().is_err());
    }
}
