//! Lower bounds on generalized Hamming weights of one-point codes `C_m`.
//!
//! Two bounds are compared row by row:
//!
//! * GFR: `m + 2 - 2g + E(S, r)`, i.e. `δ_FR^r(m + 1) >= (m + 1) + 1 - 2g + E(S, r)`;
//! * GOB (Griesmer order bound): `Σ_{i=0}^{r-1} ⌈δ_FR(m + 1) / q^i⌉`.
//!
//! Tables are written as CSV, Markdown (m across the top) or JSON, with
//! integer output only.

use std::fmt::Write as _;

use serde::Serialize;

use crate::dim2::Dim2Semigroup;
use crate::error::{Error, Result};
use crate::fengrao::{classical_fr, classical_fr_two_gen, feng_rao_number, Budget};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Winner {
    Gfr,
    Gob,
    Tie,
}

impl Winner {
    fn of(gfr: i64, gob: i64) -> Self {
        match gfr.cmp(&gob) {
            std::cmp::Ordering::Greater => Winner::Gfr,
            std::cmp::Ordering::Less => Winner::Gob,
            std::cmp::Ordering::Equal => Winner::Tie,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Winner::Gfr => "GFR",
            Winner::Gob => "GOB",
            Winner::Tie => "TIE",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub m: i64,
    pub k_m: Option<i64>,
    pub gfr: i64,
    pub gob: i64,
    pub winner: Winner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableParams {
    pub gens: Vec<i64>,
    pub r: usize,
    pub q: i64,
    pub n: Option<i64>,
    pub range: [i64; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub params: TableParams,
    pub rows: Vec<BoundRow>,
    /// Values of `m` in range that are gaps and therefore have no row.
    #[serde(skip)]
    pub skipped: Vec<i64>,
}

/// `δ_FR(m + 1)` for `m + 1 >= c`, via the min-formula when `S = <a, b>`.
fn order_bound(s: &NumericalSemigroup, two_gen: Option<&Dim2Semigroup>, m: i64) -> Result<i64> {
    if m + 1 < s.conductor() {
        return Err(Error::BelowConductor { m, conductor: s.conductor() });
    }
    match two_gen {
        Some(s2) if m >= s.conductor() => classical_fr_two_gen(s2, m),
        _ => Ok(classical_fr(s, m + 1)?.value as i64),
    }
}

fn check_row(s: &NumericalSemigroup, m: i64) -> Result<()> {
    if m + 1 < s.conductor() {
        return Err(Error::BelowConductor { m, conductor: s.conductor() });
    }
    if !s.contains(m) {
        return Err(Error::NotInSemigroup(m));
    }
    Ok(())
}

/// `m + 2 - 2g + E(S, r)`.
pub fn gfr_bound(s: &NumericalSemigroup, m: i64, r: usize, budget: &Budget) -> Result<i64> {
    check_row(s, m)?;
    let e = feng_rao_number(s, r, budget)?.value;
    Ok(m + 2 - 2 * s.genus() + e)
}

/// `δ_FR(m + 1) + ρ_r` as a bound, flagged when it exceeds what the
/// underlying inequality `δ_FR^r(m+1) >= m + 2 - 2g + ρ_r` supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LiteralBound {
    pub value: i64,
    /// `δ_FR(m + 1) > m + 2 - 2g`: the value is above the proven GFR bound.
    pub caveat: bool,
}

pub fn thm_final_literal_bound(s: &NumericalSemigroup, m: i64, r: usize) -> Result<LiteralBound> {
    let s2 = Dim2Semigroup::from_semigroup(s)?;
    check_row(s, m)?;
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let d = classical_fr(s, m + 1)?.value as i64;
    Ok(LiteralBound { value: d + s2.base().rho(r), caveat: d > m + 2 - 2 * s.genus() })
}

fn griesmer_sum(d: i64, r: usize, q: i64) -> i64 {
    let mut total = 0;
    let mut power: i64 = 1;
    for _ in 0..r {
        total += d / power + i64::from(d % power != 0);
        // Once q^i exceeds d every further term is 1.
        power = power.saturating_mul(q);
    }
    total
}

/// `Σ_{i=0}^{r-1} ⌈δ_FR(m + 1) / q^i⌉`.
pub fn griesmer_order_bound(s: &NumericalSemigroup, m: i64, r: usize, q: i64) -> Result<i64> {
    if q < 2 {
        return Err(Error::BadField(q));
    }
    check_row(s, m)?;
    let s2 = Dim2Semigroup::from_semigroup(s).ok();
    Ok(griesmer_sum(order_bound(s, s2.as_ref(), m)?, r, q))
}

/// `k_m = n - m + g - 1` for `2g - 2 < m < n`, `m` in `S`.
pub fn code_dimension(s: &NumericalSemigroup, m: i64, n: i64) -> Result<i64> {
    let g = s.genus();
    if !(2 * g - 2 < m && m < n) {
        return Err(Error::OutOfRange(format!("code dimension needs 2g - 2 < m < n, got m = {m}, n = {n}, g = {g}")));
    }
    if !s.contains(m) {
        return Err(Error::NotInSemigroup(m));
    }
    Ok(n - m + g - 1)
}

/// GFR and GOB rows for every member `m` in `[lo, hi]`.
pub fn hierarchy_table(
    s: &NumericalSemigroup,
    r: usize,
    q: i64,
    range: (i64, i64),
    n: Option<i64>,
    budget: &Budget,
) -> Result<BoundTable> {
    let (lo, hi) = range;
    if q < 2 {
        return Err(Error::BadField(q));
    }
    if lo + 1 < s.conductor() {
        return Err(Error::BelowConductor { m: lo, conductor: s.conductor() });
    }
    if hi < lo {
        return Err(Error::InvalidArgument(format!("empty range {lo}:{hi}")));
    }
    let e = feng_rao_number(s, r, budget)?.value;
    let s2 = Dim2Semigroup::from_semigroup(s).ok();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for m in lo..=hi {
        if !s.contains(m) {
            skipped.push(m);
            continue;
        }
        let gfr = m + 2 - 2 * s.genus() + e;
        let gob = griesmer_sum(order_bound(s, s2.as_ref(), m)?, r, q);
        let k_m = n.map(|n| code_dimension(s, m, n)).transpose()?;
        rows.push(BoundRow { m, k_m, gfr, gob, winner: Winner::of(gfr, gob) });
    }
    Ok(BoundTable { params: TableParams { gens: s.generators().to_vec(), r, q, n, range: [lo, hi] }, rows, skipped })
}

impl BoundTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,k_m,gfr,gob,winner\n");
        for row in &self.rows {
            let k = row.k_m.map(|k| k.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{},{},{},{},{}", row.m, k, row.gfr, row.gob, row.winner.as_str());
        }
        if !self.skipped.is_empty() {
            let gaps: Vec<String> = self.skipped.iter().map(|m| m.to_string()).collect();
            let _ = writeln!(out, "# skipped gaps: {}", gaps.join(" "));
        }
        out
    }

    /// One column per `m`, rows `m`, `k_m` (when known), `GFR`, `GOB`.
    ///
    /// `label_offset` is subtracted from the printed `m` labels only.
    pub fn to_markdown(&self, label_offset: i64) -> String {
        let mut out = String::new();
        let line = |out: &mut String, head: &str, cells: Vec<String>| {
            let _ = writeln!(out, "| {} | {} |", head, cells.join(" | "));
        };
        line(&mut out, "m", self.rows.iter().map(|r| (r.m - label_offset).to_string()).collect());
        line(&mut out, "---", self.rows.iter().map(|_| "---".to_string()).collect());
        if self.params.n.is_some() {
            line(&mut out, "k_m", self.rows.iter().map(|r| r.k_m.map(|k| k.to_string()).unwrap_or_default()).collect());
        }
        line(&mut out, "GFR", self.rows.iter().map(|r| r.gfr.to_string()).collect());
        line(&mut out, "GOB", self.rows.iter().map(|r| r.gob.to_string()).collect());
        out
    }

    pub fn gfr_row(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.gfr).collect()
    }

    pub fn gob_row(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.gob).collect()
    }
}
