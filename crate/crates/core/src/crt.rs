//! Chinese-remainder decomposition of `(F_p[Y]/(Y^{m'} - 1))^k`.
//!
//! With `m' = p^a m_dot`, `Y^{m'} - 1` is the product of `f^{p^a}` over the
//! irreducible factors `f` of `Y^{m_dot} - 1`. Each factor power gives one
//! component ring. Self-reciprocal factors are closed under the
//! conjugation `Y -> Y^{-1}`; the remaining factors come in pairs `(h, h*)`
//! that conjugation swaps.
//!
//! The constituent of a code in a component is its image there. Components
//! are listed in increasing factor order.

use std::fmt;

use crate::embed::{mu, replicator, PrimeModuleElement};
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::lincode::LinearCode;
use crate::perm::lcm;
use crate::poly::{classify_cyclotomic, poly_ext_gcd, poly_gcd, split_p_part, Poly, Residue};
use crate::sigma::SigmaCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    SelfReciprocal,
    Pair,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentKind::SelfReciprocal => "self-reciprocal",
            ComponentKind::Pair => "pair",
        })
    }
}

/// One factor power `F = f^{p^a}` of `Y^{m'} - 1` and the constituent living
/// in `(F_p[Y]/F)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub factor: Poly,
    pub multiplicity: usize,
    pub modulus: Poly,
    pub kind: ComponentKind,
    /// Index of the reciprocal partner for pairs, the component itself
    /// otherwise.
    pub partner: usize,
    /// Every generator reduced part-wise modulo `modulus`.
    pub generators: Vec<Vec<Residue>>,
    /// F_p-span of the generators, flattened to length `k deg F`.
    pub span: LinearCode,
    /// The constituent of the whole of `μ(F_p^n)`, flattened likewise.
    pub ambient: LinearCode,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    fn width(&self) -> usize {
        self.modulus.deg()
    }
}

/// The decomposition of a submodule of `(F_p[Y]/(Y^{m'} - 1))^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtDecomposition {
    field: PrimeField,
    cycle_lengths: Vec<usize>,
    m_prime: usize,
    /// The unit in front of the factorization; 1 since `Y^{m'} - 1` is monic.
    pub unit: FieldElement,
    pub components: Vec<Component>,
    idempotents: Vec<Poly>,
    /// Direct Euclidean self-duality of the source code, when known.
    euclidean_self_dual: Option<bool>,
}

/// Substitutes `Y -> Y^{m'-1}` in `rep` and reduces modulo `target`.
fn conj_into(rep: &Poly, target: &Poly, m_prime: usize) -> Residue {
    let field = rep.field();
    let mut coeffs = vec![0u32; m_prime];
    for (j, &c) in rep.coeffs().iter().enumerate() {
        let e = (m_prime - j % m_prime) % m_prime;
        coeffs[e] = field.add(coeffs[e], c);
    }
    Residue::new(Poly::from_coeffs(field, coeffs), target.clone())
}

fn flatten(parts: &[Residue]) -> Vec<u32> {
    parts.iter().flat_map(Residue::to_vec).collect()
}

fn unflatten(field: PrimeField, v: &[u32], modulus: &Poly) -> Vec<Residue> {
    v.chunks(modulus.deg())
        .map(|c| Residue::new(Poly::from_coeffs(field, c.to_vec()), modulus.clone()))
        .collect()
}

impl CrtDecomposition {
    /// Decomposes the module generated (over F_p) by `elements`, where the
    /// ambient code has the given cycle lengths.
    pub fn from_elements(
        field: PrimeField,
        cycle_lengths: &[usize],
        elements: &[PrimeModuleElement],
    ) -> Result<Self> {
        if cycle_lengths.is_empty() {
            return Err(Error::EmptyInput);
        }
        let k = cycle_lengths.len();
        let m_prime = cycle_lengths.iter().fold(1, |acc, &m| lcm(acc, m));
        let big = Poly::y_pow_minus_one(field, m_prime);
        for e in elements {
            if e.k() != k || e.parts().iter().any(|r| r.modulus() != &big) {
                return Err(Error::ShapeMismatch);
            }
        }
        let (a, m_dot) = split_p_part(m_prime, field.p());
        let fact = classify_cyclotomic(m_dot, field.p(), a)?;

        let mut factors: Vec<(Poly, usize, ComponentKind, Option<Poly>)> = Vec::new();
        for (g, e) in &fact.self_reciprocal {
            factors.push((g.clone(), *e, ComponentKind::SelfReciprocal, None));
        }
        for (h, hs, e) in &fact.reciprocal_pairs {
            factors.push((h.clone(), *e, ComponentKind::Pair, Some(hs.clone())));
            factors.push((hs.clone(), *e, ComponentKind::Pair, Some(h.clone())));
        }
        factors.sort_by(|x, y| x.0.cmp(&y.0));

        // μ(e_j) for every coordinate: part i = Y^s b_i.
        let ambient_gens: Vec<Vec<Poly>> = cycle_lengths
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| {
                let b = replicator(field, m, m_prime);
                (0..m).map(move |s| {
                    let mut parts = vec![Poly::zero(field); k];
                    parts[i] = b.shift(s);
                    parts
                })
            })
            .collect();

        let mut components = Vec::with_capacity(factors.len());
        let mut idempotents = Vec::with_capacity(factors.len());
        for (f, e, kind, partner) in &factors {
            let modulus = f.pow(*e as u64);
            let width = k * modulus.deg();
            let generators: Vec<Vec<Residue>> = elements
                .iter()
                .map(|el| {
                    el.parts()
                        .iter()
                        .map(|r| Residue::new(r.rep().clone(), modulus.clone()))
                        .collect()
                })
                .collect();
            let rows: Vec<Vec<u32>> = generators.iter().map(|g| flatten(g)).collect();
            let span = LinearCode::span(field, width, &rows)?;
            let amb_rows: Vec<Vec<u32>> = ambient_gens
                .iter()
                .map(|parts| {
                    let rs: Vec<Residue> = parts
                        .iter()
                        .map(|p| Residue::new(p.clone(), modulus.clone()))
                        .collect();
                    flatten(&rs)
                })
                .collect();
            let ambient = LinearCode::span(field, width, &amb_rows)?;

            let cofactor = big.exact_div(&modulus);
            let (g, s, _) = poly_ext_gcd(&cofactor.rem(&modulus)?, &modulus)?;
            debug_assert!(g.deg() == 0, "factor powers are coprime");
            idempotents.push(cofactor.mul(&s).rem(&big)?);

            let partner_idx = match partner {
                Some(hs) => factors
                    .iter()
                    .position(|x| &x.0 == hs)
                    .expect("pairs are listed together"),
                None => components.len(),
            };
            components.push(Component {
                factor: f.clone(),
                multiplicity: *e,
                modulus,
                kind: *kind,
                partner: partner_idx,
                generators,
                span,
                ambient,
            });
        }
        Ok(Self {
            field,
            cycle_lengths: cycle_lengths.to_vec(),
            m_prime,
            unit: fact.unit,
            components,
            idempotents,
            euclidean_self_dual: None,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn m_prime(&self) -> usize {
        self.m_prime
    }

    pub fn k(&self) -> usize {
        self.cycle_lengths.len()
    }

    /// Total F_p-dimension of the constituents.
    pub fn dim(&self) -> usize {
        self.components.iter().map(Component::dim).sum()
    }

    /// Reduces a residue modulo `Y^{m'} - 1` into every component.
    pub fn split(&self, r: &Residue) -> Result<Vec<Residue>> {
        if r.modulus() != &Poly::y_pow_minus_one(self.field, self.m_prime) {
            return Err(Error::WrongModulus);
        }
        Ok(self
            .components
            .iter()
            .map(|c| Residue::new(r.rep().clone(), c.modulus.clone()))
            .collect())
    }

    /// Inverse of [`split`](Self::split).
    pub fn combine(&self, parts: &[Residue]) -> Result<Residue> {
        if parts.len() != self.components.len()
            || parts
                .iter()
                .zip(&self.components)
                .any(|(r, c)| r.modulus() != &c.modulus)
        {
            return Err(Error::ShapeMismatch);
        }
        let big = Poly::y_pow_minus_one(self.field, self.m_prime);
        let mut acc = Poly::zero(self.field);
        for (r, e) in parts.iter().zip(&self.idempotents) {
            acc = acc.add(&r.rep().mul(e));
        }
        Ok(Residue::new(acc, big))
    }

    /// Lifts every constituent basis vector back to `(F_p[Y]/(Y^{m'}-1))^k`
    /// and returns their span, flattened to length `k m'`.
    pub fn recombine(&self) -> LinearCode {
        let k = self.k();
        let big = Poly::y_pow_minus_one(self.field, self.m_prime);
        let mut rows = Vec::new();
        for (c, e) in self.components.iter().zip(&self.idempotents) {
            for v in c.span.basis() {
                let parts: Vec<Residue> = unflatten(self.field, v, &c.modulus)
                    .iter()
                    .map(|r| Residue::new(r.rep().mul(e), big.clone()))
                    .collect();
                rows.push(flatten(&parts));
            }
        }
        LinearCode::span(self.field, k * self.m_prime, &rows).expect("lengths agree")
    }

    /// Whether the `l`-th coordinate of every generator lies in the ideal
    /// generated by `b_l mod F` in every component.
    pub fn constituent_form_check(&self) -> bool {
        self.components.iter().all(|c| {
            let ideal_gens: Vec<Poly> = self
                .cycle_lengths
                .iter()
                .map(|&m| {
                    let b = replicator(self.field, m, self.m_prime)
                        .rem(&c.modulus)
                        .expect("nonzero modulus");
                    poly_gcd(&b, &c.modulus).expect("modulus is nonzero")
                })
                .collect();
            c.generators.iter().all(|g| {
                g.iter()
                    .zip(&ideal_gens)
                    .all(|(x, d)| d.divides(x.rep()))
            })
        })
    }

    /// Vectors of `(F_p[Y]/F_c)^k` orthogonal to every element of
    /// `other` (a subspace of the partner component) under the pairing
    /// `Σ x_i conj(y_i)`.
    fn orthogonal_in(&self, c: usize, other: &LinearCode, other_mod: &Poly) -> LinearCode {
        let comp = &self.components[c];
        let d = comp.width();
        let k = self.k();
        let mut rows = Vec::new();
        for y in other.basis() {
            let conj: Vec<Residue> = unflatten(self.field, y, other_mod)
                .iter()
                .map(|r| conj_into(r.rep(), &comp.modulus, self.m_prime))
                .collect();
            // Row t: coefficient t of Σ x_i conj(y_i) as a functional of x.
            let mut block = vec![vec![0u32; k * d]; d];
            for (i, cy) in conj.iter().enumerate() {
                for s in 0..d {
                    let prod = cy.mul_poly(&Poly::monomial(self.field, 1, s)).to_vec();
                    for (t, &v) in prod.iter().enumerate() {
                        block[t][i * d + s] = v;
                    }
                }
            }
            rows.extend(block);
        }
        LinearCode::span(self.field, k * d, &rows)
            .expect("lengths agree")
            .dual()
    }

    /// Per-component self-duality relative to the image of `μ`: each
    /// constituent must equal the orthogonal of its partner constituent
    /// within the ambient constituent.
    pub fn structural_verdicts(&self) -> Vec<bool> {
        (0..self.components.len())
            .map(|c| {
                let comp = &self.components[c];
                let partner = &self.components[comp.partner];
                let orth = self.orthogonal_in(c, &partner.span, &partner.modulus);
                let expected = orth.intersect(&comp.ambient).expect("same length");
                expected == comp.span
            })
            .collect()
    }

    /// Structural self-duality, checked against the direct Euclidean
    /// verdict when the decomposition came from a code.
    pub fn self_dual_structure_check(&self) -> Result<StructuralSelfDuality> {
        let witness = self.structural_verdicts();
        let verdict = witness.iter().all(|&b| b);
        if let Some(direct) = self.euclidean_self_dual {
            if direct != verdict {
                return Err(Error::TheoremViolation {
                    structural: verdict,
                    direct,
                });
            }
        }
        Ok(StructuralSelfDuality {
            is_self_dual_structured: verdict,
            witness,
        })
    }
}

impl fmt::Display for CrtDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.components {
            writeln!(
                f,
                "factor=({})^{} type={} dim={}",
                c.factor,
                c.multiplicity,
                c.kind,
                c.dim()
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralSelfDuality {
    pub is_self_dual_structured: bool,
    /// One verdict per component, in component order.
    pub witness: Vec<bool>,
}

/// `μ` of every basis row of the code, decomposed.
pub fn decompose(sc: &SigmaCode) -> Result<CrtDecomposition> {
    let field = sc.field();
    let sigma = sc.sigma();
    let images = sc
        .code()
        .basis()
        .iter()
        .map(|b| mu(field, sigma, b))
        .collect::<Result<Vec<_>>>()?;
    let mut d = CrtDecomposition::from_elements(field, &sigma.cycle_lengths(), &images)?;
    d.euclidean_self_dual = Some(sc.code() == &sc.code().dual());
    Ok(d)
}

/// `μ(C)` flattened to length `k m'`, for comparison with
/// [`CrtDecomposition::recombine`].
pub fn mu_code(sc: &SigmaCode) -> LinearCode {
    let sigma = sc.sigma();
    let rows: Vec<Vec<u32>> = sc
        .code()
        .basis()
        .iter()
        .map(|b| flatten(mu(sc.field(), sigma, b).expect("length n").parts()))
        .collect();
    LinearCode::span(sc.field(), sigma.num_cycles() * sigma.order(), &rows).expect("lengths agree")
}
