//! Divisor sets `D(x) = S ∩ (x - S)` and their unions.
//!
//! Three independent routes to the new divisors `D(mbar + n) \ D(mbar)` live
//! here: the set difference itself, the Apéry bijection `s -> mbar + n - s`,
//! and, for symmetric semigroups, the shift `Ap(S, n) + mbar - F`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Divisors of one target or of a set of targets, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorSet {
    targets: Vec<i64>,
    elements: Vec<i64>,
}

impl DivisorSet {
    pub fn targets(&self) -> &[i64] {
        &self.targets
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn into_elements(self) -> Vec<i64> {
        self.elements
    }
}

/// Divisors of a single `x`; empty for negative `x`.
pub fn divisors_of(s: &NumericalSemigroup, x: i64) -> Vec<i64> {
    (0..=x.max(-1)).filter(|&d| s.contains(d) && s.contains(x - d)).collect()
}

pub fn div_set(s: &NumericalSemigroup, x: i64) -> DivisorSet {
    DivisorSet { targets: vec![x], elements: divisors_of(s, x) }
}

/// `D(M)`, the union of `D(m)` over `m` in `targets`.
pub fn div_set_multi(s: &NumericalSemigroup, targets: &[i64]) -> Result<DivisorSet> {
    if targets.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut sorted = targets.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(DivisorSet { elements: union_of(s, &sorted), targets: sorted })
}

/// Sorted union of the divisor sets of `targets` (may be empty).
pub(crate) fn union_of(s: &NumericalSemigroup, targets: &[i64]) -> Vec<i64> {
    let top = match targets.iter().copied().max() {
        Some(t) if t >= 0 => t as usize,
        _ => return Vec::new(),
    };
    let mut hit = vec![false; top + 1];
    for &x in targets.iter().filter(|&&x| x >= 0) {
        for d in 0..=x {
            if !hit[d as usize] && s.contains(d) && s.contains(x - d) {
                hit[d as usize] = true;
            }
        }
    }
    hit.iter().enumerate().filter(|(_, &h)| h).map(|(d, _)| d as i64).collect()
}

/// Sorted `a \ b` for sorted inputs.
pub(crate) fn difference(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

pub(crate) fn check_mbar(s: &NumericalSemigroup, mbar: i64) -> Result<()> {
    let min = s.stable_threshold();
    if mbar < min {
        return Err(Error::MbarTooSmall { mbar, min });
    }
    Ok(())
}

fn check_shift(n: i64) -> Result<()> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("n = {n} must be nonnegative")));
    }
    Ok(())
}

/// `D(mbar + n) \ D(mbar)` as the image of `Ap(S, n)` under `s -> mbar + n - s`.
///
/// Valid for every numerical semigroup once `mbar >= 2c - 1`.
pub fn new_divisors_via_apery(s: &NumericalSemigroup, mbar: i64, n: i64) -> Result<Vec<i64>> {
    check_mbar(s, mbar)?;
    check_shift(n)?;
    let mut out: Vec<i64> = s.apery(n).into_iter().map(|a| mbar + n - a).collect();
    out.sort_unstable();
    Ok(out)
}

/// `D(mbar + n) \ D(mbar)` as `Ap(S, n) + mbar - F`, symmetric semigroups only.
pub fn symmetric_shift_divisors(s: &NumericalSemigroup, mbar: i64, n: i64) -> Result<Vec<i64>> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    check_mbar(s, mbar)?;
    check_shift(n)?;
    let shift = mbar - s.frobenius();
    Ok(s.apery(n).into_iter().map(|a| a + shift).collect())
}
