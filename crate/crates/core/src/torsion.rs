//! Torsion structure of a σ-code viewed as an `F_p[Y]`-module: the order of
//! the ambient module, the annihilator of the code and its elementary
//! divisors.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::perm::Permutation;
use crate::poly::{poly_gcd, poly_lcm, Poly};
use crate::sigma::{ModuleElement, SigmaCode};

/// The structure of a nonzero σ-code as a torsion module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    /// Order of the ambient module, `lcm(Y^{m_i} - 1)`.
    pub o_m: Poly,
    /// Monic generator of the annihilator of the code.
    pub o_c: Poly,
    /// Invariant factors `d_1 | d_2 | ...`, units dropped.
    pub invariant_factors: Vec<Poly>,
    /// Per irreducible factor, the exponents of its elementary divisors in
    /// non-increasing order. Sorted by factor.
    pub elementary_divisors: Vec<(Poly, Vec<usize>)>,
    /// Irreducible factors of `o_c`.
    pub r_c: Vec<Poly>,
}

impl TorsionReport {
    /// `Σ e * deg f` over all elementary divisors.
    pub fn divisor_degree(&self) -> usize {
        self.elementary_divisors
            .iter()
            .map(|(f, es)| f.deg() * es.iter().sum::<usize>())
            .sum()
    }

    /// Number of cyclic summands in the invariant-factor decomposition.
    pub fn cyclic_summands(&self) -> usize {
        self.invariant_factors.len()
    }
}

impl fmt::Display for TorsionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o(C) = {}; divisors: ", self.o_c)?;
        let mut first = true;
        for (p, es) in &self.elementary_divisors {
            for e in es {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "({p})^{e}")?;
            }
        }
        Ok(())
    }
}

/// Outcome of comparing `deg o(C)` with the dimension of C.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionVerdict {
    Holds,
    Fails { deg_oc: usize, actual_k: usize },
}

/// `lcm(Y^{m_1} - 1, ..., Y^{m_k} - 1)`.
pub fn order_of_module(field: PrimeField, sigma: &Permutation) -> Poly {
    let mut lengths = sigma.cycle_lengths();
    lengths.sort_unstable();
    lengths.dedup();
    let polys: Vec<Poly> = lengths
        .into_iter()
        .map(|m| Poly::y_pow_minus_one(field, m))
        .collect();
    poly_lcm(&polys).expect("a permutation has at least one cycle")
}

/// Monic generator of the annihilator of a single module element.
pub fn element_annihilator(x: &ModuleElement) -> Poly {
    let field = x.parts()[0].field();
    x.parts().iter().fold(Poly::one(field), |acc, r| {
        let g = poly_gcd(r.rep(), r.modulus()).expect("modulus is nonzero");
        let ann = r.modulus().exact_div(&g);
        poly_lcm(&[acc, ann]).expect("nonempty")
    })
}

/// Minimal monic `h` with `h * x = 0` for every element of the code.
pub fn annihilator(sc: &SigmaCode) -> Result<Poly> {
    if sc.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let anns: Vec<Poly> = sc.module_basis().iter().map(element_annihilator).collect();
    poly_lcm(&anns)
}

type PolyMatrix = Vec<Vec<Poly>>;

/// Row-reduces the stacked generators and relations into an upper
/// triangular `k x k` basis of the lifted module (Hermite form).
fn hermite_basis(field: PrimeField, mut rows: PolyMatrix, k: usize) -> PolyMatrix {
    let mut basis = Vec::with_capacity(k);
    for col in 0..k {
        loop {
            let nonzero: Vec<usize> = (0..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .collect();
            let pivot = *nonzero
                .iter()
                .min_by_key(|&&r| (rows[r][col].deg(), r))
                .expect("relations keep the lifted module of full rank");
            if nonzero.len() == 1 {
                let mut row = rows.swap_remove(pivot);
                let lead = field.inv(row[col].leading()).expect("nonzero leading");
                for e in row.iter_mut() {
                    *e = e.scale(lead);
                }
                basis.push(row);
                break;
            }
            for &r in &nonzero {
                if r == pivot {
                    continue;
                }
                let (q, _) = rows[r][col].div_rem(&rows[pivot][col]).expect("nonzero");
                let sub: Vec<Poly> = rows[pivot].iter().map(|e| e.mul(&q)).collect();
                for (e, s) in rows[r].iter_mut().zip(sub) {
                    *e = e.sub(&s);
                }
            }
        }
    }
    // Keep entries above the diagonal small.
    for col in 1..k {
        for r in 0..col {
            let (q, _) = basis[r][col].div_rem(&basis[col][col]).expect("nonzero");
            if q.is_zero() {
                continue;
            }
            let sub: Vec<Poly> = basis[col].iter().map(|e| e.mul(&q)).collect();
            for (e, s) in basis[r].iter_mut().zip(sub) {
                *e = e.sub(&s);
            }
        }
    }
    basis
}

/// Solves `X * B = D` for the diagonal relation matrix `D` and upper
/// triangular `B`.
fn relations_in_basis(field: PrimeField, basis: &PolyMatrix, diag: &[Poly]) -> PolyMatrix {
    let k = diag.len();
    let mut x = vec![vec![Poly::zero(field); k]; k];
    for (i, d) in diag.iter().enumerate() {
        for j in 0..k {
            let mut rhs = if i == j { d.clone() } else { Poly::zero(field) };
            for l in 0..j {
                rhs = rhs.sub(&x[i][l].mul(&basis[l][j]));
            }
            let (q, r) = rhs.div_rem(&basis[j][j]).expect("nonzero diagonal");
            debug_assert!(r.is_zero(), "relations lie in the lifted module");
            x[i][j] = q;
        }
    }
    x
}

/// Diagonalizes a square polynomial matrix by row and column operations and
/// returns the monic diagonal, which forms a divisibility chain.
fn smith_diagonal(mut a: PolyMatrix) -> Vec<Poly> {
    let k = a.len();
    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for i in t..k {
                for j in t..k {
                    if !a[i][j].is_zero() {
                        let key = (a[i][j].deg(), i, j);
                        if best.is_none_or(|b| key < b) {
                            best = Some(key);
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                return (0..k).map(|i| a[i][i].clone()).map(|d| monic_or_zero(&d)).collect();
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..k {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].div_rem(&a[t][t]).expect("nonzero pivot");
                let sub: Vec<Poly> = a[t].iter().map(|e| e.mul(&q)).collect();
                for (e, s) in a[i].iter_mut().zip(sub) {
                    *e = e.sub(&s);
                }
                clean &= r.is_zero();
            }
            for j in t + 1..k {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].div_rem(&a[t][t]).expect("nonzero pivot");
                for row in a.iter_mut() {
                    let s = row[t].mul(&q);
                    row[j] = row[j].sub(&s);
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any row with an entry the pivot misses into row t.
            let bad = (t + 1..k).find(|&i| (t + 1..k).any(|j| !a[t][t].divides(&a[i][j])));
            match bad {
                Some(i) => {
                    let src = a[i].clone();
                    for (e, s) in a[t].iter_mut().zip(src) {
                        *e = e.add(&s);
                    }
                }
                None => break,
            }
        }
    }
    a.iter()
        .enumerate()
        .map(|(i, row)| monic_or_zero(&row[i]))
        .collect()
}

fn monic_or_zero(p: &Poly) -> Poly {
    if p.is_zero() {
        p.clone()
    } else {
        p.monic()
    }
}

/// Invariant factors of the module generated by `gens` inside
/// `⊕ F_p[Y]/(Y^{m_i} - 1)`, from the diagonal form of a presentation
/// matrix. Units are dropped; the result is a divisibility chain.
pub fn module_invariant_factors(
    field: PrimeField,
    sigma: &Permutation,
    gens: &[ModuleElement],
) -> Vec<Poly> {
    let k = sigma.num_cycles();
    let diag: Vec<Poly> = sigma
        .cycle_lengths()
        .into_iter()
        .map(|m| Poly::y_pow_minus_one(field, m))
        .collect();
    let mut rows: PolyMatrix = gens
        .iter()
        .map(|g| g.parts().iter().map(|r| r.rep().clone()).collect())
        .collect();
    for (i, d) in diag.iter().enumerate() {
        let mut row = vec![Poly::zero(field); k];
        row[i] = d.clone();
        rows.push(row);
    }
    let basis = hermite_basis(field, rows, k);
    let x = relations_in_basis(field, &basis, &diag);
    smith_diagonal(x)
        .into_iter()
        .filter(|d| d.deg() > 0)
        .collect()
}

/// Full torsion report for a nonzero σ-code.
pub fn invariant_factors(sc: &SigmaCode) -> Result<TorsionReport> {
    if sc.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let field = sc.field();
    let gens = if sc.module_generators().is_empty() {
        sc.module_basis()
    } else {
        sc.module_generators().to_vec()
    };
    let inv = module_invariant_factors(field, sc.sigma(), &gens);
    let mut grouped: BTreeMap<Poly, Vec<usize>> = BTreeMap::new();
    for d in &inv {
        for (f, e) in d.factor()? {
            grouped.entry(f).or_default().push(e);
        }
    }
    let elementary_divisors: Vec<(Poly, Vec<usize>)> = grouped
        .into_iter()
        .map(|(f, mut es)| {
            es.sort_unstable_by(|a, b| b.cmp(a));
            (f, es)
        })
        .collect();
    let o_c = annihilator(sc)?;
    let r_c = o_c.factor()?.into_iter().map(|(f, _)| f).collect();
    Ok(TorsionReport {
        o_m: order_of_module(field, sc.sigma()),
        o_c,
        invariant_factors: inv,
        elementary_divisors,
        r_c,
    })
}

/// Compares `deg o(C)` with the dimension of the code. Never asserts.
pub fn dimension_formula_check(sc: &SigmaCode) -> Result<DimensionVerdict> {
    let deg_oc = annihilator(sc)?.deg();
    let actual_k = sc.dim();
    Ok(if deg_oc == actual_k {
        DimensionVerdict::Holds
    } else {
        DimensionVerdict::Fails { deg_oc, actual_k }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincode::{rank, LinearCode};
    use crate::perm::parse_permutation;
    use crate::poly::MonicPolys;
    use crate::sigma::{code_from_generators, phi};

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn code(p: u32, sigma: &str, n: usize, gens: &[&str]) -> SigmaCode {
        let s = parse_permutation(sigma, n).unwrap();
        let gens: Vec<_> = gens
            .iter()
            .map(|g| ModuleElement::parse(f(p), &s, g).unwrap())
            .collect();
        code_from_generators(f(p), &s, &gens).unwrap()
    }

    fn full(p: u32, sigma: &str, n: usize) -> SigmaCode {
        let s = parse_permutation(sigma, n).unwrap();
        SigmaCode::from_code(s, LinearCode::full(f(p), n)).unwrap()
    }

    fn poly(p: u32, s: &str) -> Poly {
        crate::poly::parse_poly(f(p), s).unwrap()
    }

    /// Smallest monic divisor of o(M) killing every basis row, found by
    /// enumerating all divisors.
    fn annihilator_oracle(sc: &SigmaCode) -> Poly {
        let om = order_of_module(sc.field(), sc.sigma());
        let basis = sc.module_basis();
        let mut best: Option<Poly> = None;
        for d in 0..=om.deg() {
            for h in MonicPolys::new(sc.field(), d) {
                if !h.divides(&om) {
                    continue;
                }
                if basis.iter().all(|b| b.mul_poly(&h).is_zero()) {
                    best = Some(h);
                    break;
                }
            }
            if best.is_some() {
                break;
            }
        }
        best.unwrap()
    }

    /// Exponent multiset of `f` read off the ranks of `f^j C`.
    fn exponents_oracle(sc: &SigmaCode, f: &Poly) -> Vec<usize> {
        let field = sc.field();
        let n = sc.n();
        let basis = sc.module_basis();
        let dim_of = |j: u64| {
            let h = f.pow(j);
            let rows: Vec<Vec<u32>> = basis
                .iter()
                .map(|b| crate::sigma::phi_inv(sc.sigma(), &b.mul_poly(&h)).unwrap())
                .collect();
            rank(field, &rows, n)
        };
        let mut dims = vec![dim_of(0)];
        loop {
            let next = dim_of(dims.len() as u64);
            if next == *dims.last().unwrap() {
                break;
            }
            dims.push(next);
        }
        // count[j] = number of exponents >= j+1
        let counts: Vec<usize> = dims.windows(2).map(|w| (w[0] - w[1]) / f.deg()).collect();
        let mut out = Vec::new();
        for (j, &c) in counts.iter().enumerate() {
            let next = counts.get(j + 1).copied().unwrap_or(0);
            out.extend(std::iter::repeat_n(j + 1, c - next));
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn check_against_oracles(sc: &SigmaCode) {
        let rep = invariant_factors(sc).unwrap();
        assert_eq!(rep.o_c, annihilator_oracle(sc));
        assert!(rep.o_c.divides(&rep.o_m));
        assert_eq!(rep.divisor_degree(), sc.dim());
        assert_eq!(rep.invariant_factors.last(), Some(&rep.o_c));
        for (f, es) in &rep.elementary_divisors {
            assert_eq!(es, &exponents_oracle(sc, f), "factor {f}");
        }
        for w in rep.invariant_factors.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
    }

    #[test]
    fn module_order_examples() {
        let s = parse_permutation("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(order_of_module(f(2), &s), poly(2, "1+Y+Y^3+Y^4"));
        assert_eq!(order_of_module(f(3), &Permutation::full_cycle(7)), poly(3, "Y^7-1"));
        let s = parse_permutation("(1 2 3)(4 5 6)(7 8 9)", 9).unwrap();
        assert_eq!(order_of_module(f(5), &s), poly(5, "Y^3-1"));
    }

    #[test]
    fn annihilator_examples() {
        let ex1 = code(2, "(1 2 3)(4 5)", 5, &["1+Y, 1+Y"]);
        assert_eq!(annihilator(&ex1).unwrap(), poly(2, "Y^3+1"));
        assert_eq!(annihilator_oracle(&ex1), poly(2, "Y^3+1"));

        let m = full(2, "(1 2 3)(4 5)", 5);
        assert_eq!(annihilator(&m).unwrap(), poly(2, "Y^4+Y^3+Y+1"));

        let row1 = code(2, "(1 2)(3 4)(5)", 5, &["1, 1, 1"]);
        assert_eq!(annihilator(&row1).unwrap(), poly(2, "Y^2+1"));

        let s = parse_permutation("(1 2)", 2).unwrap();
        let zero = SigmaCode::from_code(s, LinearCode::zero(f(2), 2)).unwrap();
        assert_eq!(annihilator(&zero), Err(Error::ZeroCode));
        assert_eq!(invariant_factors(&zero), Err(Error::ZeroCode));
    }

    #[test]
    fn invariant_factor_examples() {
        let ex1 = code(2, "(1 2 3)(4 5)", 5, &["1+Y, 1+Y"]);
        let rep = invariant_factors(&ex1).unwrap();
        assert_eq!(
            rep.elementary_divisors,
            vec![(poly(2, "Y+1"), vec![1]), (poly(2, "Y^2+Y+1"), vec![1])]
        );
        assert_eq!(rep.cyclic_summands(), 1);
        assert_eq!(rep.to_string(), "o(C) = 1+Y^3; divisors: (1+Y)^1, (1+Y+Y^2)^1");

        let m = full(2, "(1 2)(3 4)", 4);
        let rep = invariant_factors(&m).unwrap();
        assert_eq!(rep.elementary_divisors, vec![(poly(2, "Y+1"), vec![2, 2])]);
        assert_eq!(rep.divisor_degree(), 4);
    }

    #[test]
    fn generating_set_does_not_matter() {
        let a = code(2, "(1 2 3)(4 5 6)(7)", 7, &["1+Y, 1, 1", "0, 1+Y+Y^2, 0"]);
        let b = SigmaCode::from_code(a.sigma().clone(), a.code().clone()).unwrap();
        assert_eq!(
            invariant_factors(&a).unwrap().elementary_divisors,
            invariant_factors(&b).unwrap().elementary_divisors
        );
        check_against_oracles(&a);
        check_against_oracles(&b);
    }

    #[test]
    fn assorted_codes_match_oracles() {
        let cases: &[(u32, &str, usize, &[&str])] = &[
            (2, "(1 2 3 4)(5 6)(7)", 7, &["1+Y, 1, 1"]),
            (2, "(1 2)(3 4)(5 6)(7 8)", 8, &["Y, 1, 1+Y, 1", "1, 0, 0, 1"]),
            (3, "(1 2 3)(4 5 6)(7 8 9)", 9, &["1, 1, 0", "0, 1+Y, 2"]),
            (3, "(1 2 3 4 5 6)(7 8 9)", 9, &["1+2Y+2Y^2+Y^4+2Y^5, 1+2Y+2Y^2"]),
            (5, "(1 2 3 4 5)(6 7 8 9 10)", 10, &["1+Y+Y^3, 1+3Y+Y^2+Y^3"]),
            (2, "(1 2 3 4)(5 6 7 8)", 8, &["1+Y^2, 0", "0, 1+Y", "1, 1"]),
        ];
        for &(p, s, n, gens) in cases {
            check_against_oracles(&code(p, s, n, gens));
        }
        check_against_oracles(&full(2, "(1 2 3 4)(5 6)(7 8)", 8));
        check_against_oracles(&full(3, "(1 2 3)(4 5 6)(7 8 9)", 9));
    }

    #[test]
    fn dimension_formula_examples() {
        let ex1 = code(2, "(1 2 3)(4 5)", 5, &["1+Y, 1+Y"]);
        assert_eq!(dimension_formula_check(&ex1).unwrap(), DimensionVerdict::Holds);
        let m = full(2, "(1 2)(3 4)", 4);
        assert_eq!(
            dimension_formula_check(&m).unwrap(),
            DimensionVerdict::Fails { deg_oc: 2, actual_k: 4 }
        );
    }

    #[test]
    fn module_order_kills_everything() {
        let s = parse_permutation("(1 2 3)(4 5)(6)", 6).unwrap();
        let om = order_of_module(f(3), &s);
        for v in 0..3u32.pow(6) {
            let c: Vec<u32> = (0..6).map(|i| (v / 3u32.pow(i)) % 3).collect();
            assert!(phi(f(3), &s, &c).unwrap().mul_poly(&om).is_zero());
        }
    }
}
