//! Linear codes over F_p held in reduced row echelon form.
//!
//! Everything above this layer compares subspaces through these canonical
//! bases, so two codes are equal exactly when their RREF bases are.

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Default cap on the number of codewords `min_distance` will enumerate.
pub const DEFAULT_BUDGET: u128 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCode {
    field: PrimeField,
    n: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

/// Row-reduces `rows` in place (each of length `n`) and returns the pivot
/// columns; zero rows are dropped.
pub fn rref(field: PrimeField, rows: &mut Vec<Vec<u32>>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of a list of vectors.
pub fn rank(field: PrimeField, rows: &[Vec<u32>], n: usize) -> usize {
    let mut rows = rows.to_vec();
    rref(field, &mut rows, n).len()
}

impl LinearCode {
    /// The span of `vectors`, each of length `n`.
    pub fn span(field: PrimeField, n: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: v.len(),
                });
            }
            rows.push(v.iter().map(|&x| x % field.p()).collect());
        }
        let pivots = rref(field, &mut rows, n);
        Ok(Self {
            field,
            n,
            basis: rows,
            pivots,
        })
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        Self {
            field,
            n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect::<Vec<_>>();
        Self::span(field, n, &rows).expect("identity rows have length n")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the code.
    pub fn residual(&self, v: &[u32]) -> Result<Vec<u32>> {
        self.check_len(v)?;
        let f = self.field;
        let mut r: Vec<u32> = v.iter().map(|&x| x % f.p()).collect();
        for (row, &col) in self.basis.iter().zip(&self.pivots) {
            let c = r[col];
            if c == 0 {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        Ok(self.residual(v)?.iter().all(|&x| x == 0))
    }

    /// Whether every basis row of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The Euclidean dual, read off the RREF: one vector per free column.
    pub fn dual(&self) -> LinearCode {
        let f = self.field;
        let mut is_pivot = vec![false; self.n];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let rows: Vec<Vec<u32>> = (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.n];
                v[free] = 1;
                for (row, &pc) in self.basis.iter().zip(&self.pivots) {
                    v[pc] = f.neg(row[free]);
                }
                v
            })
            .collect();
        LinearCode::span(f, self.n, &rows).expect("rows have length n")
    }

    /// Sum of two codes of the same length.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: other.n,
            });
        }
        let rows: Vec<Vec<u32>> = self.basis.iter().chain(&other.basis).cloned().collect();
        LinearCode::span(self.field, self.n, &rows)
    }

    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Codeword for the message `msg` (coefficients on the basis rows).
    pub fn encode(&self, msg: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.n];
        for (&m, row) in msg.iter().zip(&self.basis) {
            if m == 0 {
                continue;
            }
            for (x, &y) in out.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(m, y));
            }
        }
        out
    }

    /// Number of codewords, saturating.
    pub fn size(&self) -> u128 {
        (self.field.p() as u128).saturating_pow(self.dim() as u32)
    }

    /// Minimum Hamming weight over all nonzero codewords, by enumerating
    /// every message. `Ok(None)` for the zero code.
    pub fn min_distance(&self, budget: u128) -> Result<Option<usize>> {
        if self.dim() == 0 {
            return Ok(None);
        }
        let needed = self.size();
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        if self.field.p() == 2 && self.n <= 64 {
            return Ok(Some(self.min_distance_binary()));
        }
        Ok(Some(self.min_distance_generic()))
    }

    /// Binary codes: basis rows packed into words, messages walked in
    /// reflected Gray-code order so each step is one XOR.
    fn min_distance_binary(&self) -> usize {
        let rows: Vec<u64> = self
            .basis
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i))
            })
            .collect();
        let k = rows.len();
        let mut cw = 0u64;
        let mut best = self.n;
        for step in 1u64..(1u64 << k) {
            cw ^= rows[step.trailing_zeros() as usize];
            best = best.min(cw.count_ones() as usize);
            if best == 1 {
                break;
            }
        }
        best
    }

    /// General p: a mixed-radix counter over messages. Incrementing digit
    /// `i` adds row `i`; a carry out of digit `i` also adds row `i` once
    /// (p copies sum to zero), so each step costs amortized O(n).
    fn min_distance_generic(&self) -> usize {
        let f = self.field;
        let p = f.p();
        let k = self.dim();
        let mut digits = vec![0u32; k];
        let mut cw = vec![0u32; self.n];
        let mut best = self.n;
        loop {
            let mut i = 0;
            loop {
                if i == k {
                    return best;
                }
                for (x, &y) in cw.iter_mut().zip(&self.basis[i]) {
                    *x = f.add(*x, y);
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            let w = cw.iter().filter(|&&x| x != 0).count();
            best = best.min(w);
            if best == 1 {
                return best;
            }
        }
    }

    /// One codeword per line, symbols as decimal digits. Only fields with
    /// p <= 10 are representable.
    pub fn to_matrix_text(&self) -> Result<String> {
        if self.field.p() > 10 {
            return Err(Error::Parse(format!(
                "digit format needs p <= 10, got {}",
                self.field.p()
            )));
        }
        let mut s = String::new();
        for row in &self.basis {
            for &x in row {
                s.push(char::from_digit(x, 10).expect("digit"));
            }
            s.push('\n');
        }
        Ok(s)
    }

    /// Inverse of [`LinearCode::to_matrix_text`]; the rows need not be
    /// reduced. An empty text yields the zero code of length `n`.
    pub fn from_matrix_text(field: PrimeField, n: usize, text: &str) -> Result<LinearCode> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .filter(|&d| d < field.p())
                            .ok_or_else(|| Error::Parse(format!("bad symbol {c:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        LinearCode::span(field, n, &rows)
    }
}
