//! Brute-force reference computations for numerical semigroups.
//!
//! Everything here is recomputed straight from the definitions: membership is
//! an exhaustive search over nonnegative combinations of the generators, Apéry
//! sets and divisor sets are plain scans, and generalized Feng-Rao distances
//! are minima over every `r`-subset of a window. Nothing is shared with the
//! optimized `sgp-core` paths, so the two can be checked against each other.
//!
//! The code is slow on purpose. Keep inputs at desk scale.

use std::collections::BTreeSet;
use std::fmt;

/// Memoized membership oracle for the semigroup generated by `gens`.
///
/// Membership of `x` is decided by trying every generator `g` and asking
/// whether `x - g` is a member, with `0` as the only base case. There is no
/// conductor shortcut: every queried value is searched.
#[derive(Debug, Clone)]
pub struct NaiveSemigroup {
    gens: Vec<i64>,
    memo: Vec<Option<bool>>,
}

impl NaiveSemigroup {
    pub fn new(gens: &[i64]) -> Self {
        let mut gens: Vec<i64> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        assert!(!gens.is_empty(), "need at least one generator");
        assert!(gens[0] >= 1, "generators must be positive");
        NaiveSemigroup { gens, memo: Vec::new() }
    }

    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    pub fn contains(&mut self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x == 0 {
            return true;
        }
        let idx = x as usize;
        if self.memo.len() <= idx {
            self.memo.resize(idx + 1, None);
        }
        if let Some(known) = self.memo[idx] {
            return known;
        }
        // Fill bottom-up so deep queries do not recurse.
        for y in 1..=idx {
            if self.memo[y].is_some() {
                continue;
            }
            let yi = y as i64;
            let mut member = false;
            for &g in &self.gens {
                let rest = yi - g;
                if rest == 0 || (rest > 0 && self.memo[rest as usize] == Some(true)) {
                    member = true;
                    break;
                }
            }
            self.memo[y] = Some(member);
        }
        self.memo[idx].unwrap()
    }

    /// An upper bound for the conductor, `(min - 1) * (max - 1)`.
    ///
    /// This is the classical Schur bound; it holds whenever the generators are
    /// coprime. Used only to make scans finite.
    pub fn conductor_bound(&self) -> i64 {
        let lo = self.gens[0];
        let hi = *self.gens.last().unwrap();
        (lo - 1) * (hi - 1)
    }

    /// Genus counted by scanning up to the Schur bound.
    pub fn genus(&mut self) -> i64 {
        let bound = self.conductor_bound();
        (1..bound).filter(|&x| !self.contains(x)).count() as i64
    }

    /// Conductor: one past the largest non-member below the Schur bound.
    pub fn conductor(&mut self) -> i64 {
        let bound = self.conductor_bound();
        (0..bound).rev().find(|&x| !self.contains(x)).map_or(0, |f| f + 1)
    }
}

/// Membership by exhaustive search.
pub fn naive_contains(gens: &[i64], x: i64) -> bool {
    NaiveSemigroup::new(gens).contains(x)
}

/// `Ap(S, n) = {s in S : s - n not in S}`, by direct scan.
pub fn naive_apery(gens: &[i64], n: i64) -> Vec<i64> {
    let mut s = NaiveSemigroup::new(gens);
    naive_apery_in(&mut s, n)
}

/// Same as [`naive_apery`] but reusing a memoized oracle.
pub fn naive_apery_in(sg: &mut NaiveSemigroup, n: i64) -> Vec<i64> {
    // s - n must be a non-member, so s - n < conductor <= bound.
    let end = sg.conductor_bound() + n;
    (0..end.max(0)).filter(|&s| sg.contains(s) && !sg.contains(s - n)).collect()
}

/// `D(x_1, ..., x_k)`: every member `s` with `x_i - s` a member for some `i`.
pub fn naive_divisors(gens: &[i64], targets: &[i64]) -> Vec<i64> {
    let mut s = NaiveSemigroup::new(gens);
    naive_divisors_in(&mut s, targets)
}

/// Same as [`naive_divisors`] but reusing a memoized oracle.
pub fn naive_divisors_in(sg: &mut NaiveSemigroup, targets: &[i64]) -> Vec<i64> {
    let mut out = BTreeSet::new();
    for &x in targets {
        for s in 0..=x.max(-1) {
            if sg.contains(s) && sg.contains(x - s) {
                out.insert(s);
            }
        }
    }
    out.into_iter().collect()
}

/// Result of an exhaustive generalized Feng-Rao minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveFr {
    pub value: usize,
    /// Lexicographically smallest minimizing configuration.
    pub witness: Vec<i64>,
}

/// The window was too small to certify that no larger configuration does better.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowTooSmall {
    /// Best value found inside the window (an upper bound only).
    pub uncertified: Option<NaiveFr>,
    /// Smallest window that would certify it.
    pub needed: i64,
}

impl fmt::Display for WindowTooSmall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.uncertified {
            Some(fr) => write!(f, "window too small: best {} is uncertified, need window >= {}", fr.value, self.needed),
            None => write!(f, "window contains no configuration, need window >= {}", self.needed),
        }
    }
}

impl std::error::Error for WindowTooSmall {}

/// `min |D(m_1, ..., m_r)|` over all `m <= m_1 < ... < m_r <= window`, members only.
///
/// The answer is certified when `window >= best + 2g - 1` and `window + 1`
/// reaches the conductor: any configuration reaching past the window then has
/// at least `best + 1` divisors.
pub fn naive_generalized_fr(gens: &[i64], m: i64, r: usize, window: i64) -> Result<NaiveFr, WindowTooSmall> {
    assert!(r >= 1, "r must be positive");
    let mut sg = NaiveSemigroup::new(gens);
    let genus = sg.genus();
    let conductor = sg.conductor();
    let pool: Vec<i64> = (m.max(0)..=window).filter(|&x| sg.contains(x)).collect();
    let divs: Vec<Vec<i64>> = pool.iter().map(|&x| naive_divisors_in(&mut sg, &[x])).collect();

    let mut best: Option<NaiveFr> = None;
    let mut picks: Vec<usize> = (0..r).collect();
    if pool.len() >= r {
        loop {
            let mut union = BTreeSet::new();
            for &p in &picks {
                union.extend(divs[p].iter().copied());
            }
            let value = union.len();
            if best.as_ref().is_none_or(|b| value < b.value) {
                best = Some(NaiveFr { value, witness: picks.iter().map(|&p| pool[p]).collect() });
            }
            if !next_combination(&mut picks, pool.len()) {
                break;
            }
        }
    }

    match best {
        Some(fr) => {
            let needed = (fr.value as i64 + 2 * genus - 1).max(conductor - 1);
            if window >= needed {
                Ok(fr)
            } else {
                Err(WindowTooSmall { uncertified: Some(fr), needed })
            }
        }
        None => Err(WindowTooSmall { uncertified: None, needed: window + 1 }),
    }
}

/// Advance `picks` (strictly increasing indices below `n`) to the next combination.
fn next_combination(picks: &mut [usize], n: usize) -> bool {
    let k = picks.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if picks[i] < n - k + i {
            picks[i] += 1;
            for j in i + 1..k {
                picks[j] = picks[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
