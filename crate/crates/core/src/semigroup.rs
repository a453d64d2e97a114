//! Finitely generated numerical semigroups.
//!
//! A [`NumericalSemigroup`] is built once from a list of generators and then
//! answers membership in O(1) from a dense table covering
//! `[0, conductor + max generator)`. Everything past the table is a member.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `min generator * max generator` accepted by [`NumericalSemigroup::from_generators`].
pub const MAX_SCALE: i64 = 1_000_000;

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    minimal_generators: Vec<i64>,
    genus: i64,
    conductor: i64,
    multiplicity: i64,
    /// `member[x]` for `x` in `[0, conductor + max generator)`.
    member: Vec<bool>,
    /// Members below the conductor, ascending; `small[k - 1]` is the k-th element.
    small: Vec<i64>,
}

/// Serializable summary of a semigroup, as printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDescriptor {
    pub generators: Vec<i64>,
    pub minimal_generators: Vec<i64>,
    pub genus: i64,
    pub conductor: i64,
    pub frobenius: i64,
    pub multiplicity: i64,
    pub gaps: Vec<i64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`.
    ///
    /// Duplicates are ignored. Fails if the list is empty, contains a
    /// non-positive value, has gcd other than 1, or exceeds [`MAX_SCALE`].
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();

        let d = generators.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        let lo = generators[0];
        let hi = *generators.last().unwrap();
        if lo.saturating_mul(hi) > MAX_SCALE {
            return Err(Error::TooLarge(format!(
                "smallest * largest generator = {} exceeds {}",
                lo.saturating_mul(hi),
                MAX_SCALE
            )));
        }

        // Sieve until `hi` consecutive members appear; from there on every
        // integer is a member, and the run start is the conductor.
        let width = hi as usize;
        let mut member: Vec<bool> = vec![true];
        let mut run = 1usize;
        let mut conductor = 0usize;
        while run < width {
            let x = member.len();
            let is_member = generators.iter().any(|&g| (g as usize) <= x && member[x - g as usize]);
            member.push(is_member);
            if is_member {
                run += 1;
            } else {
                run = 0;
                conductor = x + 1;
            }
        }
        member.resize(conductor + width, true);

        let genus = member[..conductor].iter().filter(|&&m| !m).count() as i64;
        let small: Vec<i64> = (0..conductor).filter(|&x| member[x]).map(|x| x as i64).collect();
        let conductor = conductor as i64;

        let contains = |x: i64| x >= 0 && (x >= conductor || member[x as usize]);
        // A generator is reducible iff it is a sum of two nonzero members.
        let minimal_generators: Vec<i64> =
            generators.iter().copied().filter(|&g| !(1..g).any(|y| contains(y) && contains(g - y))).collect();
        let multiplicity = minimal_generators[0];

        Ok(NumericalSemigroup { generators, minimal_generators, genus, conductor, multiplicity, member, small })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Largest gap, `-1` for the trivial semigroup.
    pub fn frobenius(&self) -> i64 {
        self.conductor - 1
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// `2c - 1`, the least admissible `mbar`.
    pub fn stable_threshold(&self) -> i64 {
        2 * self.conductor - 1
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x >= self.conductor {
            true
        } else {
            self.member[x as usize]
        }
    }

    /// The k-th smallest element, with `rho(1) == 0`.
    ///
    /// # Panics
    ///
    /// If `k == 0`.
    pub fn rho(&self, k: usize) -> i64 {
        assert!(k >= 1, "rho is indexed from 1");
        match self.small.get(k - 1) {
            Some(&x) => x,
            // Past the conductor the k-th element is k + g - 1.
            None => k as i64 + self.genus - 1,
        }
    }

    /// Number of members in `[0, x]`.
    pub fn count_up_to(&self, x: i64) -> usize {
        if x < 0 {
            0
        } else if x >= self.conductor {
            (x + 1 - self.genus) as usize
        } else {
            self.small.partition_point(|&s| s <= x)
        }
    }

    /// Smallest member `>= x`.
    pub fn next_member(&self, x: i64) -> i64 {
        if x <= 0 {
            return 0;
        }
        (x..).find(|&y| self.contains(y)).unwrap()
    }

    /// Members in `[lo, hi]`, ascending.
    pub fn members_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(0)..=hi).filter(move |&x| self.contains(x))
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    /// `Ap(S, n) = {s in S : s - n not in S}` for any integer `n`.
    pub fn apery(&self, n: i64) -> Vec<i64> {
        // If s >= c and s - n >= c then s - n is a member, so s is not in the
        // Apéry set. Hence every element is below max(c, c + n) <= max(c, c - n) + |n|.
        let end = self.conductor.max(self.conductor - n) + n.abs();
        (0..=end).filter(|&s| self.contains(s) && !self.contains(s - n)).collect()
    }

    /// `r in S` exactly when `c - 1 - r` is not, for every `r` in `[0, c - 1]`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        (0..self.conductor).all(|r| self.contains(r) != self.contains(f - r))
    }

    pub fn descriptor(&self) -> SemigroupDescriptor {
        SemigroupDescriptor {
            generators: self.generators.clone(),
            minimal_generators: self.minimal_generators.clone(),
            genus: self.genus,
            conductor: self.conductor,
            frobenius: self.frobenius(),
            multiplicity: self.multiplicity,
            gaps: self.gaps(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn seven_eleven() {
        let s = sg(&[7, 11]);
        assert_eq!(s.genus(), 30);
        assert_eq!(s.conductor(), 60);
        assert_eq!(s.frobenius(), 59);
        assert!(s.is_symmetric());
        assert_eq!(s.minimal_generators(), &[7, 11]);
    }

    #[test]
    fn trivial_semigroup() {
        let s = sg(&[1]);
        assert_eq!((s.genus(), s.conductor(), s.frobenius()), (0, 0, -1));
        assert!(s.gaps().is_empty());
        assert!(s.is_symmetric());
        assert_eq!(s.rho(5), 4);
        assert_eq!(s.multiplicity(), 1);
    }

    #[test]
    fn non_symmetric_example() {
        let s = sg(&[6, 13, 14, 15, 16, 17]);
        // 12 = 6 + 6 is a member, so the conductor is 12, not 13.
        assert_eq!((s.genus(), s.conductor(), s.multiplicity()), (10, 12, 6));
        assert_eq!(s.gaps(), vec![1, 2, 3, 4, 5, 7, 8, 9, 10, 11]);
        assert!(!s.is_symmetric());
    }

    #[test]
    fn membership() {
        let s = sg(&[3, 5]);
        assert!(!s.contains(7));
        assert!(s.contains(0));
        assert!(s.contains(1000));
        assert!(!s.contains(-3));
    }

    #[test]
    fn rho_values() {
        assert_eq!(sg(&[7, 11]).rho(10), 29);
        assert_eq!(sg(&[2, 5]).rho(3), 4);
        assert_eq!(sg(&[4, 5]).rho(1), 0);
        // Past the conductor: rho_{m+1-g} = m.
        let s = sg(&[3, 5]);
        for m in 8..40 {
            assert_eq!(s.rho((m + 1 - s.genus()) as usize), m);
        }
    }

    #[test]
    #[should_panic]
    fn rho_zero_panics() {
        sg(&[3, 5]).rho(0);
    }

    #[test]
    fn gap_lists() {
        assert_eq!(sg(&[3, 5]).gaps(), vec![1, 2, 4, 7]);
        assert_eq!(sg(&[2, 5]).gaps(), vec![1, 3]);
    }

    #[test]
    fn apery_sets() {
        let s = sg(&[3, 5]);
        assert_eq!(s.apery(5), vec![0, 3, 6, 9, 12]);
        assert_eq!(s.apery(4), vec![0, 3, 5, 6, 8, 11]);
        assert!(s.apery(-16).is_empty());
        assert!(s.apery(0).is_empty());
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(sg(&[4, 5, 13]).minimal_generators(), &[4, 5]);
        assert_eq!(sg(&[2, 4, 5]).minimal_generators(), &[2, 5]);
        assert_eq!(sg(&[5, 4, 4]).generators(), &[4, 5]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyInput));
        assert_eq!(NumericalSemigroup::from_generators(&[4, 6]), Err(Error::GcdNotOne(2)));
        assert_eq!(NumericalSemigroup::from_generators(&[0, 3]), Err(Error::NonPositiveGenerator(0)));
        assert!(matches!(NumericalSemigroup::from_generators(&[1001, 1002]), Err(Error::TooLarge(_))));
    }

    #[test]
    fn two_generator_formulas() {
        for a in 2..=30i64 {
            for b in a + 1..=30 {
                if gcd(a, b) != 1 {
                    continue;
                }
                let s = sg(&[a, b]);
                assert_eq!(s.genus(), (a - 1) * (b - 1) / 2, "<{a},{b}>");
                assert_eq!(s.conductor(), a * b - a - b + 1, "<{a},{b}>");
                assert!(s.is_symmetric());
                assert_eq!(s.conductor(), 2 * s.genus());
            }
        }
    }

    #[test]
    fn descriptor_json_fields() {
        let d = sg(&[3, 5]).descriptor();
        assert_eq!(d.frobenius, 7);
        assert_eq!(d.gaps, vec![1, 2, 4, 7]);
    }
}
