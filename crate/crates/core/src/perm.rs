//! Permutations in cycle form and the coordinate action they induce.
//!
//! Points are 1-based in the public API, matching cycle notation. The cycle
//! order and the first point of each cycle are kept exactly as written
//! because they fix the coordinate order of the module map.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    n: usize,
    cycles: Vec<Vec<usize>>,
    /// `image[i] = σ(i+1) - 1`.
    image: Vec<usize>,
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl Permutation {
    /// Builds a permutation of `{1..n}` from disjoint cycles. Points not
    /// mentioned become fixed points, appended in ascending order.
    pub fn from_cycles(n: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for &pt in cycles.iter().flatten() {
            if pt == 0 || pt > n {
                return Err(Error::OutOfRange { point: pt, n });
            }
            if seen[pt - 1] {
                return Err(Error::NotAPermutation(pt));
            }
            seen[pt - 1] = true;
        }
        let mut cycles: Vec<Vec<usize>> = cycles.into_iter().filter(|c| !c.is_empty()).collect();
        cycles.extend((1..=n).filter(|&i| !seen[i - 1]).map(|i| vec![i]));
        let mut image = vec![0; n];
        for cyc in &cycles {
            for (j, &pt) in cyc.iter().enumerate() {
                image[pt - 1] = cyc[(j + 1) % cyc.len()] - 1;
            }
        }
        Ok(Self { n, cycles, image })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_cycles(n, Vec::new()).expect("identity is valid")
    }

    /// Builds a permutation from its 0-based image table; cycles are listed
    /// by their smallest point.
    pub fn from_images(image: &[usize]) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = *image.get(i).ok_or(Error::OutOfRange { point: i + 1, n })?;
                if i >= n {
                    return Err(Error::OutOfRange { point: i + 1, n });
                }
            }
            if i != start {
                return Err(Error::NotAPermutation(i + 1));
            }
            cycles.push(cyc);
        }
        Self::from_cycles(n, cycles)
    }

    /// Product of `d` disjoint `l`-cycles `(s, s+d, ..., s+(l-1)d)` for
    /// `s = 1..=d`: the permutation under which quasi-cyclic codes of index
    /// `d` and length `l*d` are invariant.
    pub fn qc_sigma(l: usize, d: usize) -> Self {
        let cycles = (1..=d)
            .map(|s| (0..l).map(|j| s + j * d).collect())
            .collect();
        Self::from_cycles(l * d, cycles).expect("quasi-cyclic cycles are disjoint")
    }

    /// The single cycle `(1 2 ... n)`.
    pub fn full_cycle(n: usize) -> Self {
        Self::from_cycles(n, vec![(1..=n).collect()]).expect("valid cycle")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Number of cycles, fixed points included.
    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// First written point of cycle `i` (1-based point).
    pub fn cycle_start(&self, i: usize) -> usize {
        self.cycles[i][0]
    }

    /// Order of the permutation: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles.iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// σ(point) for a 1-based point.
    pub fn map(&self, point: usize) -> usize {
        self.image[point - 1] + 1
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The coordinate action: output position `σ(j)` receives `c[j]`, i.e.
    /// `T_σ(c)_i = c_{σ^{-1}(i)}`.
    pub fn apply<T: Clone>(&self, c: &[T]) -> Result<Vec<T>> {
        if c.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: c.len(),
            });
        }
        let mut out = c.to_vec();
        for (j, x) in c.iter().enumerate() {
            out[self.image[j]] = x.clone();
        }
        Ok(out)
    }

    /// `T_σ^power(c)`.
    pub fn apply_power<T: Clone>(&self, c: &[T], power: usize) -> Result<Vec<T>> {
        let mut v = c.to_vec();
        let power = power % self.order().max(1);
        for _ in 0..power {
            v = self.apply(&v)?;
        }
        Ok(v)
    }

    /// Rotates each cycle so its smallest point comes first and sorts the
    /// cycles by that point.
    pub fn canonical(&self) -> Self {
        let mut cycles: Vec<Vec<usize>> = self
            .cycles
            .iter()
            .map(|c| {
                let pos = c
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &v)| v)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                let mut r = c.clone();
                r.rotate_left(pos);
                r
            })
            .collect();
        cycles.sort_by_key(|c| c[0]);
        Self::from_cycles(self.n, cycles).expect("rotation preserves validity")
    }
}

/// Parses cycle notation such as `(1 2 3)(4 5)` or `(1,2)(3,4)` over
/// `{1..n}`.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    Permutation::from_cycles(n, parse_cycles(text)?)
}

/// Parses cycle notation, taking `n` as the largest point mentioned.
pub fn parse_permutation_auto(text: &str) -> Result<Permutation> {
    let cycles = parse_cycles(text)?;
    let n = cycles.iter().flatten().copied().max().unwrap_or(0);
    Permutation::from_cycles(n, cycles)
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::Parse(format!("nested '(' in {text:?}")));
        }
        let cyc = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if cyc.is_empty() {
            return Err(Error::Parse(format!("empty cycle in {text:?}")));
        }
        cycles.push(cyc);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Right rotation by one: `(a_1, ..., a_m) -> (a_m, a_1, ..., a_{m-1})`.
pub fn cyclic_shift<T: Clone>(a: &[T]) -> Vec<T> {
    let mut v = a.to_vec();
    if !v.is_empty() {
        v.rotate_right(1);
    }
    v
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cyc in &self.cycles {
            write!(f, "(")?;
            for (i, pt) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
