//! Closed forms for two-generator semigroups `S = <a, b>`.
//!
//! Every integer has a unique representation `n = u*a + v*b` with
//! `0 <= u < b`, and `n` is a member exactly when `v >= 0`. Apéry sets,
//! new-divisor sets and the ground/triangle geometry above `mbar >= 2c - 1`
//! are all rectangles in these coordinates.
//!
//! The ground is the window `[mbar, mbar + b)`. Its elements are indexed by
//! `i` in `[0, b)` through `mbar ⊕ i = mbar + (i*a mod b)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::divisors::{check_mbar, difference, union_of};
use crate::error::{Error, Result};
use crate::semigroup::{gcd, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dim2Semigroup {
    a: i64,
    b: i64,
    a_inv: i64,
    base: NumericalSemigroup,
}

/// `n = u*a + v*b` with `0 <= u < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UVRep {
    pub u: i64,
    pub v: i64,
}

/// `n = (i*a mod b) + h*a` with `i*a mod b < a`, for `n >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IHRep {
    pub i: i64,
    pub h: i64,
}

/// The ground elements `mbar ⊕ i, ..., mbar ⊕ (i + h)`, indices taken mod `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroundInterval {
    pub i: i64,
    pub h: i64,
}

/// Which single-triangle change [`Dim2Semigroup::delta_divisors`] measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Change {
    /// Insert a middle triangle with upper vertex `n2`.
    Middle(i64),
    /// Replace `n1` by `n1 + k*a`.
    Extend(i64),
    /// Replace `n1` by `k*a`.
    Multiple(i64),
}

/// Divisor counts before and after exchanging the middle triangle `n2` for
/// `n1 + (h2 + 1) a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExchangeCounts {
    /// `|D(mbar+n1, mbar+n2, mbar+n3) ∩ [mbar, ∞)|`
    pub upper_before: usize,
    /// `|D(mbar+n1+(h2+1)a, mbar+n3) ∩ [mbar, ∞)|`
    pub upper_after: usize,
    /// New divisors of the middle triangle below `mbar`.
    pub lower_before: usize,
    /// New divisors of the moved triangle below `mbar`.
    pub lower_after: usize,
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m)
}

impl GroundInterval {
    pub fn is_whole_ground(&self, b: i64) -> bool {
        self.h >= b - 1
    }

    /// Ground indices covered, in interval order.
    pub fn indices(&self, b: i64) -> Vec<i64> {
        let len = (self.h + 1).min(b);
        (0..len).map(|t| (self.i + t).rem_euclid(b)).collect()
    }

    /// Whether `mbar = mbar ⊕ 0` lies in the interval.
    pub fn contains_mbar(&self, b: i64) -> bool {
        self.i == 0 || self.i + self.h >= b
    }
}

impl Dim2Semigroup {
    /// `<a, b>` with `2 <= a < b` coprime.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < 2 || b <= a {
            return Err(Error::InvalidArgument(format!("need 2 <= a < b, got a = {a}, b = {b}")));
        }
        if gcd(a, b) != 1 {
            return Err(Error::GcdNotOne(gcd(a, b)));
        }
        let base = NumericalSemigroup::from_generators(&[a, b])?;
        Ok(Dim2Semigroup { a, b, a_inv: mod_inverse(a, b), base })
    }

    /// The two-generator view of `s`, if it has embedding dimension two.
    pub fn from_semigroup(s: &NumericalSemigroup) -> Result<Self> {
        match s.minimal_generators() {
            &[a, b] => Self::new(a, b),
            _ => Err(Error::NotDim2),
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// Inverse of `a` modulo `b`, in `[1, b)`.
    pub fn a_inv(&self) -> i64 {
        self.a_inv
    }

    /// Sylvester: `ab - a - b + 1`.
    pub fn conductor(&self) -> i64 {
        self.a * self.b - self.a - self.b + 1
    }

    pub fn genus(&self) -> i64 {
        (self.a - 1) * (self.b - 1) / 2
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn uv_rep(&self, n: i64) -> UVRep {
        let u = (n.rem_euclid(self.b) * self.a_inv).rem_euclid(self.b);
        let v = (n - u * self.a) / self.b;
        UVRep { u, v }
    }

    pub fn ih_rep(&self, n: i64) -> Result<IHRep> {
        if n < 0 {
            return Err(Error::InvalidArgument(format!("n = {n} must be nonnegative")));
        }
        Ok(IHRep { i: (n % self.a) * self.a_inv % self.b, h: n / self.a })
    }

    pub fn contains_uv(&self, n: i64) -> bool {
        self.uv_rep(n).v >= 0
    }

    /// `{alpha*a + beta*b}` over the given half-open ranges, unsorted.
    fn lattice_box(&self, alpha: (i64, i64), beta: (i64, i64), out: &mut Vec<i64>) {
        for al in alpha.0..alpha.1 {
            for be in beta.0..beta.1 {
                out.push(al * self.a + be * self.b);
            }
        }
    }

    /// `Ap(S, n)` from the rectangle description.
    pub fn apery_closed(&self, n: i64) -> Vec<i64> {
        let UVRep { u, v } = self.uv_rep(n);
        let a = self.a;
        let mut out = Vec::new();
        if v >= 0 {
            self.lattice_box((u, self.b), (0, v), &mut out);
            self.lattice_box((0, u), (0, a + v), &mut out);
        } else if v >= -a {
            self.lattice_box((0, u), (0, a + v), &mut out);
        }
        out.sort_unstable();
        out
    }

    /// `{mbar + x*a + y*b : x_lo < x <= x_hi, y_lo < y <= y_hi}`, unsorted.
    fn rect(&self, mbar: i64, x: (i64, i64), y: (i64, i64), out: &mut Vec<i64>) {
        for xx in x.0 + 1..=x.1 {
            for yy in y.0 + 1..=y.1 {
                out.push(mbar + xx * self.a + yy * self.b);
            }
        }
    }

    fn sorted(mut v: Vec<i64>) -> Vec<i64> {
        v.sort_unstable();
        v.dedup();
        v
    }

    fn check_nonnegative(n: i64) -> Result<()> {
        if n < 0 {
            return Err(Error::InvalidArgument(format!("n = {n} must be nonnegative")));
        }
        Ok(())
    }

    /// `D(mbar + n) \ D(mbar)` from the rectangle description.
    pub fn new_divisors(&self, mbar: i64, n: i64) -> Result<Vec<i64>> {
        check_mbar(&self.base, mbar)?;
        Self::check_nonnegative(n)?;
        let UVRep { u, v } = self.uv_rep(n);
        let a = self.a;
        let mut out = Vec::new();
        if v < 0 {
            self.rect(mbar, (0, u), (-a, v), &mut out);
        } else {
            self.rect(mbar, (u, self.b), (-a, v - a), &mut out);
            self.rect(mbar, (0, u), (-a, v), &mut out);
        }
        Ok(Self::sorted(out))
    }

    /// `mbar ⊕ i = mbar + (i*a mod b)`.
    pub fn ground_elem(&self, mbar: i64, i: i64) -> i64 {
        mbar + (i * self.a).rem_euclid(self.b)
    }

    /// The index `i` in `[0, b)` with `mbar ⊕ i == x`, if `x` is in the ground.
    pub fn ground_index(&self, mbar: i64, x: i64) -> Option<i64> {
        let off = x - mbar;
        if (0..self.b).contains(&off) {
            Some(off * self.a_inv % self.b)
        } else {
            None
        }
    }

    /// `D(mbar ⊕ i) \ D(mbar)`.
    pub fn ground_divisors(&self, mbar: i64, i: i64) -> Result<Vec<i64>> {
        check_mbar(&self.base, mbar)?;
        if !(0..self.b).contains(&i) {
            return Err(Error::OutOfRange(format!("ground index {i} not in [0, {})", self.b)));
        }
        let mut out = Vec::new();
        self.rect(mbar, (0, i), (-self.a, -(i * self.a / self.b)), &mut out);
        Ok(Self::sorted(out))
    }

    /// Base `D(mbar + n) ∩ [mbar, mbar + b)` of the triangle with upper vertex `n`.
    pub fn triangle_base(&self, mbar: i64, n: i64) -> Result<GroundInterval> {
        check_mbar(&self.base, mbar)?;
        let IHRep { i, h } = self.ih_rep(n)?;
        Ok(GroundInterval { i, h: h.min(self.b - 1) })
    }

    /// Ground elements of an interval, ascending.
    pub fn interval_elements(&self, mbar: i64, l: &GroundInterval) -> Vec<i64> {
        Self::sorted(l.indices(self.b).into_iter().map(|j| self.ground_elem(mbar, j)).collect())
    }

    /// Whether the interval starting at ground index `i` is amenable.
    pub fn is_amenable_start(&self, i: i64) -> bool {
        (i * self.a).rem_euclid(self.b) < self.a
    }

    /// Whether a set of ground indices forms an amenable interval.
    pub fn is_amenable_interval(&self, indices: &BTreeSet<i64>) -> bool {
        let b = self.b;
        if indices.len() as i64 == b {
            return true;
        }
        let starts: Vec<i64> = indices.iter().copied().filter(|&j| !indices.contains(&(j - 1).rem_euclid(b))).collect();
        starts.len() == 1 && self.is_amenable_start(starts[0])
    }

    /// `n' <=_S n`, decided by comparing triangle bases.
    pub fn divides_via_bases(&self, mbar: i64, n_prime: i64, n: i64) -> Result<bool> {
        let base_n = self.triangle_base(mbar, n)?;
        if base_n.is_whole_ground(self.b) {
            return Err(Error::BaseIsWholeGround(n));
        }
        let base_p = self.triangle_base(mbar, n_prime)?;
        let big: BTreeSet<i64> = base_n.indices(self.b).into_iter().collect();
        Ok(base_p.indices(self.b).iter().all(|j| big.contains(j)))
    }

    /// The ordering `L ≺ L'` on amenable intervals of the ground.
    pub fn precedes(&self, l: &GroundInterval, l2: &GroundInterval) -> bool {
        let b = self.b;
        let first: BTreeSet<i64> = l.indices(b).into_iter().collect();
        let second: BTreeSet<i64> = l2.indices(b).into_iter().collect();
        let union: BTreeSet<i64> = first.union(&second).copied().collect();
        if self.is_amenable_interval(&union) {
            return false;
        }
        if first.contains(&0) {
            return true;
        }
        if second.contains(&0) {
            return false;
        }
        first.iter().max() < second.iter().min()
    }

    fn require(ok: bool, what: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::HypothesisViolated(what.to_string()))
        }
    }

    /// Divisors gained by one triangle change, from the closed forms.
    ///
    /// The configuration before the change is `{mbar + n1, mbar + n3}` (or just
    /// `{mbar + n1}` when `n3` is absent). Hypotheses:
    ///
    /// * `Middle(n2)`: `mbar ∈ L1 ≺ L2 ≺ L3`; the result is what `mbar + n2` adds.
    /// * `Extend(k)`: `mbar ∈ L1 ≺ L3` and `base(n1 + k a) ≺ L3`; the result is
    ///   what `mbar + n1 + k a` has beyond the old configuration.
    /// * `Multiple(k)`: `mbar ∈ L1 ≺ L3`, `base(k a) ≺ L3` and `k >= u1`; the
    ///   result is what `mbar + k a` has beyond the old configuration.
    ///
    /// Without `n3`, the lower edge `v3` becomes `v1 - a`, and `Extend` and
    /// `Multiple` additionally need `k < b`.
    pub fn delta_divisors(&self, mbar: i64, n1: i64, n3: Option<i64>, change: Change) -> Result<Vec<i64>> {
        check_mbar(&self.base, mbar)?;
        Self::check_nonnegative(n1)?;
        let (a, b) = (self.a, self.b);
        let l1 = self.triangle_base(mbar, n1)?;
        Self::require(l1.contains_mbar(b), "mbar ∈ L1")?;
        let r1 = self.uv_rep(n1);
        let l3 = match n3 {
            Some(n3) => Some(self.triangle_base(mbar, n3)?),
            None => None,
        };
        let v3 = match n3 {
            Some(n3) => self.uv_rep(n3).v,
            None => r1.v - a,
        };
        let precedes_l3 = |l: &GroundInterval| l3.is_none_or(|l3| self.precedes(l, &l3));

        let mut out = Vec::new();
        match change {
            Change::Middle(n2) => {
                Self::check_nonnegative(n2)?;
                let l2 = self.triangle_base(mbar, n2)?;
                Self::require(self.precedes(&l1, &l2), "L1 ≺ L2")?;
                Self::require(precedes_l3(&l2), "L2 ≺ L3")?;
                let r2 = self.uv_rep(n2);
                self.rect(mbar, (r1.u, r2.u), (v3, r2.v), &mut out);
            }
            Change::Extend(k) => {
                Self::require(k >= 0, "k >= 0")?;
                Self::require(precedes_l3(&l1), "L1 ≺ L3")?;
                if n3.is_some() {
                    let moved = self.triangle_base(mbar, n1 + k * a)?;
                    Self::require(precedes_l3(&moved), "base(n1 + k a) ≺ L3")?;
                } else {
                    Self::require(k < b, "k < b")?;
                }
                self.rect(mbar, (r1.u, r1.u + k), (v3, r1.v), &mut out);
            }
            Change::Multiple(k) => {
                Self::require(k >= r1.u, "k >= u1")?;
                Self::require(precedes_l3(&l1), "L1 ≺ L3")?;
                if n3.is_some() {
                    let moved = self.triangle_base(mbar, k * a)?;
                    Self::require(precedes_l3(&moved), "base(k a) ≺ L3")?;
                } else {
                    Self::require(k < b, "k < b")?;
                }
                self.rect(mbar, (r1.u, k), (v3, 0), &mut out);
            }
        }
        Ok(Self::sorted(out))
    }

    /// Divisor counts on both sides of `mbar` before and after moving the
    /// middle triangle `n2` onto `n1` as `n1 + (h2 + 1) a`.
    ///
    /// Requires `mbar ∈ L1 ≺ L2` and, when `n3` is given, `L2 ≺ L3`.
    pub fn exchange_counts(&self, mbar: i64, n1: i64, n2: i64, n3: Option<i64>) -> Result<ExchangeCounts> {
        check_mbar(&self.base, mbar)?;
        let b = self.b;
        let l1 = self.triangle_base(mbar, n1)?;
        let l2 = self.triangle_base(mbar, n2)?;
        Self::require(l1.contains_mbar(b), "mbar ∈ L1")?;
        Self::require(self.precedes(&l1, &l2), "L1 ≺ L2")?;
        if let Some(n3) = n3 {
            let l3 = self.triangle_base(mbar, n3)?;
            Self::require(self.precedes(&l2, &l3), "L2 ≺ L3")?;
        }
        let h2 = self.ih_rep(n2)?.h;
        let moved = n1 + (h2 + 1) * self.a;
        let rest: Vec<i64> = n3.into_iter().map(|n| mbar + n).collect();

        let with = |xs: &[i64]| -> Vec<i64> {
            let mut t: Vec<i64> = xs.iter().map(|&n| mbar + n).collect();
            t.extend(&rest);
            union_of(&self.base, &t)
        };
        let old = with(&[n1]);
        let before = with(&[n1, n2]);
        let after = with(&[moved]);
        let above = |d: &[i64]| d.iter().filter(|&&x| x >= mbar).count();
        let below = |d: &[i64]| d.iter().filter(|&&x| x < mbar).count();
        Ok(ExchangeCounts {
            upper_before: above(&before),
            upper_after: above(&after),
            lower_before: below(&difference(&before, &old)),
            lower_after: below(&difference(&after, &old)),
        })
    }
}
