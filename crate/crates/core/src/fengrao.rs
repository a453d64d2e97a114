//! Classical and generalized Feng-Rao distances and Feng-Rao numbers.
//!
//! `δ_FR^r(m)` is the least `|D(m_1, ..., m_r)|` over members
//! `m <= m_1 < ... < m_r`. It is computed here by an exact branch-and-bound
//! over strictly increasing tuples. Two facts keep the search finite:
//!
//! * adding a larger element `y` to a tuple always adds `y` itself as a new
//!   divisor, so a partial tuple of length `d` with `k` divisors ends with at
//!   least `k + r - d` divisors;
//! * for `x >= c`, `|D(x)| >= x + 1 - 2g`, so a tuple whose last element is
//!   past `best + 2g - 1` cannot beat `best`.
//!
//! Ties are resolved towards the lexicographically smallest witness, after the
//! search, so the answer does not depend on thread scheduling.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use serde::{Serialize, Serializer};

use crate::dim2::Dim2Semigroup;
use crate::divisors::{check_mbar, divisors_of, union_of};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Default cap on explored search nodes.
pub const DEFAULT_MAX_NODES: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Search,
}

/// A finite set of members `m <= m_1 < ... < m_r` together with `|D(m_1, ..., m_r)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub m: i64,
    pub elements: Vec<i64>,
    pub divisor_count: usize,
}

impl Configuration {
    pub fn new(s: &NumericalSemigroup, m: i64, elements: &[i64]) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("configuration elements must be strictly increasing".into()));
        }
        if let Some(&x) = elements.iter().find(|&&x| x < m || !s.contains(x)) {
            return Err(Error::InvalidArgument(format!("{x} is not a member of the semigroup at least {m}")));
        }
        Ok(Configuration { m, elements: elements.to_vec(), divisor_count: union_of(s, elements).len() })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn witness_elements<S: Serializer>(c: &Configuration, ser: S) -> std::result::Result<S::Ok, S::Error> {
    c.elements.serialize(ser)
}

/// Serializes as `{m, r, value, witness, method}` with `witness` the element list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FengRaoResult {
    pub m: i64,
    pub r: usize,
    pub value: usize,
    #[serde(serialize_with = "witness_elements")]
    pub witness: Configuration,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FengRaoNumber {
    pub r: usize,
    pub value: i64,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Optimality {
    /// Proven optimal (two-generator semigroups).
    Optimal,
    /// Only an upper bound for `δ_FR^r(mbar)`.
    UpperBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AmenableConfiguration {
    pub configuration: Configuration,
    pub optimality: Optimality,
}

/// `δ_FR^r(m)` at `m = 2g - 1 + x`, exact when `x` is a nonzero member and a
/// lower bound when `x` is a gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoroFinal {
    pub m: i64,
    pub r: usize,
    pub value: i64,
    pub exact: bool,
}

/// Limits for the generalized Feng-Rao search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    /// Hard cap on the largest configuration element examined. When it cuts
    /// below what the pruning rule needs, the result is reported uncertified.
    pub max_element: Option<i64>,
    pub threads: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: DEFAULT_MAX_NODES, max_element: None, threads: 1 }
    }
}

impl Budget {
    pub fn with_max_nodes(max_nodes: u64) -> Self {
        Budget { max_nodes, ..Budget::default() }
    }
}

fn require_member(s: &NumericalSemigroup, m: i64) -> Result<()> {
    if !s.contains(m) {
        return Err(Error::NotInSemigroup(m));
    }
    Ok(())
}

fn require_r(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    Ok(())
}

/// `δ_FR(m) = min |D(m_1)|` over members `m_1 >= m`.
pub fn classical_fr(s: &NumericalSemigroup, m: i64) -> Result<FengRaoResult> {
    require_member(s, m)?;
    // Past 2c - 1, |D(x)| = x + 1 - 2g grows strictly, so larger x never win.
    let cap = m.max(s.stable_threshold());
    let (value, best) =
        s.members_in(m, cap).map(|x| (divisors_of(s, x).len(), x)).min().expect("m itself is a candidate");
    Ok(FengRaoResult {
        m,
        r: 1,
        value,
        witness: Configuration { m, elements: vec![best], divisor_count: value },
        method: Method::Search,
    })
}

/// `δ_FR(m + 1) = min{ρ_k : ρ_k >= m + 2 - 2g}` for `m >= c`.
pub fn classical_fr_two_gen(s2: &Dim2Semigroup, m: i64) -> Result<i64> {
    let s = s2.base();
    if m < s.conductor() {
        return Err(Error::BelowConductor { m, conductor: s.conductor() });
    }
    Ok(s.next_member(m + 2 - 2 * s.genus()))
}

/// `min{ρ_r + ρ_k : ρ_k >= m + 1 - 2g}`, the formula that fails in general.
pub fn rho_sum_formula(s: &NumericalSemigroup, m: i64, r: usize) -> Result<i64> {
    require_r(r)?;
    Ok(s.rho(r) + s.next_member(m + 1 - 2 * s.genus()))
}

#[derive(Debug, Clone)]
struct Best {
    value: usize,
    witness: Vec<i64>,
}

impl Best {
    fn improves_on(&self, other: &Best) -> bool {
        (self.value, &self.witness) < (other.value, &other.witness)
    }
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    abort: AtomicBool,
}

struct Search<'a> {
    r: usize,
    conductor: i64,
    two_g: i64,
    max_nodes: u64,
    pool: &'a [i64],
    divs: &'a [Vec<usize>],
    shared: &'a Shared,
}

struct Worker {
    count: Vec<u32>,
    distinct: usize,
    chosen: Vec<usize>,
    best: Best,
}

impl Search<'_> {
    /// Exact lower bound for any completion whose last element is `pool[idx]`.
    fn tail_bound(&self, idx: usize) -> usize {
        let x = self.pool[idx];
        if x >= self.conductor {
            (x + 1 - self.two_g).max(0) as usize
        } else {
            0
        }
    }

    fn push(&self, w: &mut Worker, j: usize) {
        for &d in &self.divs[j] {
            if w.count[d] == 0 {
                w.distinct += 1;
            }
            w.count[d] += 1;
        }
        w.chosen.push(j);
    }

    fn pop(&self, w: &mut Worker) {
        let j = w.chosen.pop().unwrap();
        for &d in &self.divs[j] {
            w.count[d] -= 1;
            if w.count[d] == 0 {
                w.distinct -= 1;
            }
        }
    }

    fn leaf(&self, w: &mut Worker) {
        let cand = Best { value: w.distinct, witness: w.chosen.iter().map(|&j| self.pool[j]).collect() };
        if cand.improves_on(&w.best) {
            w.best = cand;
            self.shared.best.fetch_min(w.best.value, Ordering::Relaxed);
        }
    }

    /// Tries `pool[j]` as the next element. Returns false once no larger `j` can help.
    fn visit(&self, w: &mut Worker, j: usize) -> bool {
        if self.shared.abort.load(Ordering::Relaxed) {
            return false;
        }
        if self.shared.nodes.fetch_add(1, Ordering::Relaxed) >= self.max_nodes {
            self.shared.abort.store(true, Ordering::Relaxed);
            return false;
        }
        let remaining = self.r - w.chosen.len();
        let best = self.shared.best.load(Ordering::Relaxed);
        if self.tail_bound(j + remaining - 1) > best {
            return false;
        }
        self.push(w, j);
        if remaining == 1 {
            self.leaf(w);
        } else if w.distinct + remaining - 1 <= best {
            self.descend(w, j + 1);
        }
        self.pop(w);
        true
    }

    fn descend(&self, w: &mut Worker, start: usize) {
        let remaining = self.r - w.chosen.len();
        let last = self.pool.len() - remaining;
        for j in start..=last {
            if !self.visit(w, j) {
                break;
            }
        }
    }
}

/// `δ_FR^r(m)` by exact branch-and-bound.
///
/// Fails with [`Error::BudgetExceeded`] (carrying the best configuration found)
/// when the node budget runs out or `budget.max_element` cuts the window short.
pub fn generalized_fr(s: &NumericalSemigroup, m: i64, r: usize, budget: &Budget) -> Result<FengRaoResult> {
    require_member(s, m)?;
    require_r(r)?;
    let c = s.conductor();
    let two_g = 2 * s.genus();

    // Seed: the first r members from m, and for m >= c the triangle
    // D(m + ρ_r) ∩ [m, ∞), which has exactly r elements there.
    let greedy: Vec<i64> = s.members_in(m, i64::MAX).take(r).collect();
    let mut seed = Best { value: union_of(s, &greedy).len(), witness: greedy };
    if m >= c {
        let tri: Vec<i64> = divisors_of(s, m + s.rho(r)).into_iter().filter(|&x| x >= m).collect();
        debug_assert_eq!(tri.len(), r);
        let cand = Best { value: union_of(s, &tri).len(), witness: tri };
        if cand.improves_on(&seed) {
            seed = cand;
        }
    }

    let needed = (seed.value as i64 + two_g - 1).max(c - 1);
    let window = match budget.max_element {
        Some(cap) => needed.min(cap),
        None => needed,
    };
    let pool: Vec<i64> = s.members_in(m, window).collect();
    let truncated = window < needed;
    if pool.len() < r {
        return Err(Error::BudgetExceeded { best_bound: seed.value, witness: seed.witness, explored: 0 });
    }
    let top = *pool.last().unwrap() as usize;
    let divs: Vec<Vec<usize>> =
        pool.iter().map(|&x| divisors_of(s, x).into_iter().map(|d| d as usize).collect()).collect();
    let shared = Shared { best: AtomicUsize::new(seed.value), nodes: AtomicU64::new(0), abort: AtomicBool::new(false) };
    let search =
        Search { r, conductor: c, two_g, max_nodes: budget.max_nodes, pool: &pool, divs: &divs, shared: &shared };
    let new_worker =
        || Worker { count: vec![0; top + 1], distinct: 0, chosen: Vec::with_capacity(r), best: seed.clone() };

    let threads = budget.threads.max(1);
    let first_choices = pool.len() - r + 1;
    let best = if threads == 1 {
        let mut w = new_worker();
        search.descend(&mut w, 0);
        w.best
    } else {
        let results: Vec<Best> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let search = &search;
                    scope.spawn(move || {
                        let mut w = new_worker();
                        // Round-robin over the first element; no early break
                        // here since other threads own the skipped indices.
                        for j in (t..first_choices).step_by(threads) {
                            if search.shared.abort.load(Ordering::Relaxed) {
                                break;
                            }
                            search.visit(&mut w, j);
                        }
                        w.best
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        results.into_iter().reduce(|x, y| if y.improves_on(&x) { y } else { x }).unwrap()
    };

    let explored = shared.nodes.load(Ordering::Relaxed);
    if shared.abort.load(Ordering::Relaxed) || truncated {
        return Err(Error::BudgetExceeded { best_bound: best.value, witness: best.witness, explored });
    }
    Ok(FengRaoResult {
        m,
        r,
        value: best.value,
        witness: Configuration { m, elements: best.witness, divisor_count: best.value },
        method: Method::Search,
    })
}

/// Whether `set` contains `mbar` and is closed under division above `mbar`.
pub fn is_amenable(s: &NumericalSemigroup, mbar: i64, set: &[i64]) -> Result<bool> {
    check_mbar(s, mbar)?;
    if let Some(&x) = set.iter().find(|&&x| x < mbar || !s.contains(x)) {
        return Err(Error::InvalidArgument(format!("{x} is not a member of the semigroup at least {mbar}")));
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.binary_search(&mbar).is_err() {
        return Ok(false);
    }
    Ok(sorted
        .iter()
        .all(|&x| divisors_of(s, x).into_iter().filter(|&d| d >= mbar).all(|d| sorted.binary_search(&d).is_ok())))
}

/// `D(mbar + ρ_r) ∩ [mbar, ∞)`, an amenable set with exactly `r` elements.
pub fn optimal_amenable(s: &NumericalSemigroup, mbar: i64, r: usize) -> Result<AmenableConfiguration> {
    check_mbar(s, mbar)?;
    require_r(r)?;
    let elements: Vec<i64> = divisors_of(s, mbar + s.rho(r)).into_iter().filter(|&x| x >= mbar).collect();
    let optimality = if s.embedding_dimension() == 2 { Optimality::Optimal } else { Optimality::UpperBound };
    Ok(AmenableConfiguration { configuration: Configuration::new(s, mbar, &elements)?, optimality })
}

/// Every amenable set of exactly `r` elements above `mbar`, each sorted.
///
/// Built by adding larger elements one at a time: removing the maximum of an
/// amenable set leaves an amenable set, so this reaches all of them. An
/// element `mbar + t` has `#{s in S : s <= t}` divisors above `mbar`, so only
/// `t < ρ_{r+1}` can appear.
pub fn amenable_sets(s: &NumericalSemigroup, mbar: i64, r: usize) -> Result<Vec<Vec<i64>>> {
    check_mbar(s, mbar)?;
    require_r(r)?;
    let limit = mbar + s.rho(r + 1);
    let above: Vec<(i64, Vec<i64>)> =
        (mbar..limit).map(|x| (x, divisors_of(s, x).into_iter().filter(|&d| d >= mbar).collect())).collect();

    fn grow(above: &[(i64, Vec<i64>)], start: usize, cur: &mut Vec<i64>, r: usize, out: &mut Vec<Vec<i64>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for (k, (x, ds)) in above.iter().enumerate().skip(start) {
            if ds.iter().all(|d| d == x || cur.binary_search(d).is_ok()) {
                cur.push(*x);
                grow(above, k + 1, cur, r, out);
                cur.pop();
            }
        }
    }

    let mut out = Vec::new();
    let mut cur = vec![mbar];
    grow(&above, 1, &mut cur, r, &mut out);
    Ok(out)
}

/// Least `|D(M)|` over amenable `M` with `r` elements, and the lexicographically first minimizer.
pub fn amenable_minimum(s: &NumericalSemigroup, mbar: i64, r: usize) -> Result<Configuration> {
    let sets = amenable_sets(s, mbar, r)?;
    let (count, set) = sets
        .into_iter()
        .map(|m| (union_of(s, &m).len(), m))
        .min()
        .expect("D(mbar + rho_r) above mbar is always amenable");
    Ok(Configuration { m: mbar, elements: set, divisor_count: count })
}

/// `E(S, r)`, using a closed form where one is known and the search otherwise.
pub fn feng_rao_number(s: &NumericalSemigroup, r: usize, budget: &Budget) -> Result<FengRaoNumber> {
    require_r(r)?;
    let formula = |value| Ok(FengRaoNumber { r, value, method: Method::Formula });
    if s.embedding_dimension() == 2 {
        return formula(s.rho(r));
    }
    if s.genus() == 0 {
        return formula(r as i64 - 1);
    }
    if r as i64 >= s.conductor() {
        return formula(r as i64 + s.genus() - 1);
    }
    feng_rao_number_search(s, r, budget)
}

/// `E(S, r) = δ_FR^r(mbar) - (mbar + 1 - 2g)` at `mbar = 2c - 1`, always by search.
pub fn feng_rao_number_search(s: &NumericalSemigroup, r: usize, budget: &Budget) -> Result<FengRaoNumber> {
    let mbar = s.stable_threshold().max(0);
    let fr = generalized_fr(s, mbar, r, budget)?;
    Ok(FengRaoNumber { r, value: fr.value as i64 - (mbar + 1 - 2 * s.genus()), method: Method::Search })
}

/// `δ_FR^r(2g - 1 + ρ_k) = ρ_r + ρ_k` for `k >= 2`.
pub fn coro_final_value(s2: &Dim2Semigroup, r: usize, k: usize) -> Result<CoroFinal> {
    require_r(r)?;
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2".into()));
    }
    let s = s2.base();
    Ok(CoroFinal { m: 2 * s.genus() - 1 + s.rho(k), r, value: s.rho(r) + s.rho(k), exact: true })
}

/// Lower bound `δ_FR^r(2g - 1 + ℓ) >= ρ_r + ℓ` for a gap `ℓ`.
pub fn coro_final_gap_bound(s2: &Dim2Semigroup, r: usize, gap: i64) -> Result<CoroFinal> {
    require_r(r)?;
    let s = s2.base();
    if gap <= 0 || s.contains(gap) {
        return Err(Error::InvalidArgument(format!("{gap} is not a gap")));
    }
    Ok(CoroFinal { m: 2 * s.genus() - 1 + gap, r, value: s.rho(r) + gap, exact: false })
}
