//! Exhaustive search over orbit codes of a fixed permutation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lincode::{LinearCode, DEFAULT_BUDGET};
use crate::perm::Permutation;
use crate::sigma::{dependent_block, phi};

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Keep only codes of this dimension.
    pub target_k: Option<usize>,
    /// Maximum number of candidate vectors examined.
    pub budget: u128,
    /// Skip candidates whose cycle blocks have dependent shifts.
    pub block_filter: bool,
    /// Codeword budget for each minimum-distance computation.
    pub distance_budget: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            target_k: None,
            budget: u128::MAX,
            block_filter: true,
            distance_budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub k: usize,
    pub d: usize,
    pub a: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    field: PrimeField,
    sigma: Permutation,
    /// Candidates drawn from the enumeration.
    pub examined: u128,
    /// Candidates dropped by the block filter.
    pub filtered: u128,
    /// Best code per dimension; ties keep the first found.
    pub best: BTreeMap<usize, Found>,
}

impl fmt::Display for SearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "examined={} filtered={}",
            self.examined, self.filtered
        )?;
        for found in self.best.values() {
            let a: Vec<String> = found.a.iter().map(u32::to_string).collect();
            let gen = phi(self.field, &self.sigma, &found.a).map_err(|_| fmt::Error)?;
            writeln!(
                f,
                "k={} d={} a=({}) gen={}",
                found.k,
                found.d,
                a.join(","),
                gen
            )?;
        }
        Ok(())
    }
}

/// Next vector in lexicographic order with coordinate 1 most significant.
fn increment(a: &mut [u32], p: u32) -> bool {
    for x in a.iter_mut().rev() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}

/// Walks nonzero vectors `a` in lexicographic order, builds the orbit code
/// of each and keeps the largest minimum distance seen for every dimension.
pub fn search(field: PrimeField, sigma: &Permutation, opts: &SearchOptions) -> Result<SearchResult> {
    let n = sigma.n();
    let mut result = SearchResult {
        field,
        sigma: sigma.clone(),
        examined: 0,
        filtered: 0,
        best: BTreeMap::new(),
    };
    let mut a = vec![0u32; n];
    while result.examined < opts.budget && increment(&mut a, field.p()) {
        result.examined += 1;
        if opts.block_filter && dependent_block(field, sigma, &a).is_some() {
            result.filtered += 1;
            continue;
        }
        let mut orbit = Vec::with_capacity(sigma.order());
        let mut cur = a.clone();
        for _ in 0..sigma.order() {
            let next = sigma.apply(&cur)?;
            orbit.push(cur);
            cur = next;
        }
        let code = LinearCode::span(field, n, &orbit)?;
        let k = code.dim();
        if opts.target_k.is_some_and(|t| t != k) {
            continue;
        }
        let d = code
            .min_distance(opts.distance_budget)?
            .ok_or(Error::ZeroCode)?;
        let better = result.best.get(&k).is_none_or(|f| d > f.d);
        if better {
            result.best.insert(k, Found { k, d, a: a.clone() });
        }
    }
    Ok(result)
}
