//! Machine-readable code tables and their recomputation.
//!
//! The bundled file lists one code per line, tab-separated:
//! `table n p sigma gen k d original note`. `sigma` and `gen` are already in
//! the crate's grammars; `original` keeps the text as first printed and
//! `note` explains any normalization. Lines starting with `#` are comments.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::perm::parse_permutation;
use crate::sigma::{code_from_generators, ModuleElement, SigmaCode};

/// The bundled transcription of the binary, ternary and 5-ary tables.
pub const BUNDLED_TABLES: &str = include_str!("../data/tables.tsv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub table: u32,
    pub n: usize,
    pub p: u32,
    pub sigma: String,
    pub generator: String,
    pub claimed_k: usize,
    pub claimed_d: usize,
    pub original: String,
    pub note: String,
}

impl TableRow {
    /// Rows carrying a normalization note.
    pub fn is_flagged(&self) -> bool {
        !self.note.is_empty()
    }

    /// Builds the code the row describes.
    pub fn build(&self) -> Result<SigmaCode> {
        let field = PrimeField::new(self.p)?;
        let sigma = parse_permutation(&self.sigma, self.n)?;
        let gen = ModuleElement::parse(field, &sigma, &self.generator)?;
        code_from_generators(field, &sigma, &[gen])
    }
}

fn parse_field<T: std::str::FromStr>(value: &str, name: &str, line: usize) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("line {line}: bad {name} {value:?}")))
}

/// Parses the tab-separated table format.
pub fn parse_tables(text: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() < 7 {
            return Err(Error::Parse(format!(
                "line {lineno}: expected at least 7 tab-separated fields, got {}",
                cols.len()
            )));
        }
        let col = |i: usize| cols.get(i).map_or("", |s| s.trim()).to_string();
        rows.push(TableRow {
            table: parse_field(cols[0], "table", lineno)?,
            n: parse_field(cols[1], "n", lineno)?,
            p: parse_field(cols[2], "p", lineno)?,
            sigma: col(3),
            generator: col(4),
            claimed_k: parse_field(cols[5], "k", lineno)?,
            claimed_d: parse_field(cols[6], "d", lineno)?,
            original: col(7),
            note: col(8),
        });
    }
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    Unparseable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Unparseable => "unparseable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowOutcome {
    pub row: TableRow,
    pub computed_k: Option<usize>,
    pub computed_d: Option<usize>,
    pub verdict: Verdict,
    /// Parse diagnostic for unparseable rows.
    pub error: Option<String>,
}

impl RowOutcome {
    fn note(&self) -> String {
        let mut parts = Vec::new();
        if !self.row.note.is_empty() {
            parts.push(self.row.note.clone());
        }
        if let Some(e) = &self.error {
            parts.push(e.clone());
        }
        if (self.verdict != Verdict::Match || self.row.is_flagged()) && !self.row.original.is_empty()
        {
            parts.push(format!("printed: {}", self.row.original));
        }
        parts.join("; ")
    }
}

impl fmt::Display for RowOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.row.n,
            self.row.p,
            self.row.sigma,
            self.row.generator,
            self.row.claimed_k,
            self.row.claimed_d,
            opt(self.computed_k),
            opt(self.computed_d),
            self.verdict,
            self.note()
        )
    }
}

/// Recomputes one row. Only a blown distance budget is an error; parse
/// failures become [`Verdict::Unparseable`].
pub fn verify_row(row: &TableRow, budget: u128) -> Result<RowOutcome> {
    let sc = match row.build() {
        Ok(sc) => sc,
        Err(e) => {
            return Ok(RowOutcome {
                row: row.clone(),
                computed_k: None,
                computed_d: None,
                verdict: Verdict::Unparseable,
                error: Some(e.to_string()),
            })
        }
    };
    let k = sc.dim();
    let d = sc.code().min_distance(budget)?.unwrap_or(0);
    let verdict = if k == row.claimed_k && d == row.claimed_d {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    Ok(RowOutcome {
        row: row.clone(),
        computed_k: Some(k),
        computed_d: Some(d),
        verdict,
        error: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub outcomes: Vec<RowOutcome>,
}

impl VerificationReport {
    pub fn count(&self, table: Option<u32>, verdict: Verdict) -> usize {
        self.outcomes
            .iter()
            .filter(|o| table.is_none_or(|t| o.row.table == t) && o.verdict == verdict)
            .count()
    }

    /// True when every row without a normalization note matches.
    pub fn unflagged_all_match(&self) -> bool {
        self.outcomes
            .iter()
            .all(|o| o.row.is_flagged() || o.verdict == Verdict::Match)
    }

    /// Per-table counts, one line each.
    pub fn summary(&self) -> String {
        let mut tables: Vec<u32> = self.outcomes.iter().map(|o| o.row.table).collect();
        tables.dedup();
        let mut s = String::new();
        for t in tables {
            s.push_str(&format!(
                "table {t}: {} match, {} mismatch, {} unparseable\n",
                self.count(Some(t), Verdict::Match),
                self.count(Some(t), Verdict::Mismatch),
                self.count(Some(t), Verdict::Unparseable),
            ));
        }
        s
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# n\tp\tsigma\tgen\tk_claimed\td_claimed\tk_computed\td_computed\tverdict\tnote"
        )?;
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        Ok(())
    }
}

/// Recomputes every row, using `jobs` worker threads (0 picks the rayon
/// default). Output order follows input order.
pub fn verify_rows(rows: &[TableRow], budget: u128, jobs: usize) -> Result<VerificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let outcomes = pool.install(|| {
        rows.par_iter()
            .map(|r| verify_row(r, budget))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(VerificationReport { outcomes })
}
