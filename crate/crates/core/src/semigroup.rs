//! Numerical semigroups: cofinite additive submonoids of the nonnegative
//! integers, stored as a membership bitmap below a sieve bound.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<usize>,
    membership: Vec<bool>,
    conductor: usize,
    multiplicity: usize,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// Builds `<gens>` by an additive sieve up to `2 * max(gens)^2 + 1`.
    ///
    /// The Frobenius number of any numerical semigroup is below
    /// `(min - 1)(max - 1)`, so the sieve window always contains the
    /// conductor.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut generators: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().fold(0u64, |acc, &x| gcd(acc, x as u64));
        if g != 1 {
            return Err(Error::NonCofinite(g));
        }

        let max = *generators.last().unwrap();
        let bound = 2 * max * max + 1;
        let mut membership = vec![false; bound];
        membership[0] = true;
        for n in 1..bound {
            membership[n] = generators
                .iter()
                .any(|&g| g <= n && membership[n - g]);
        }
        let conductor = match membership.iter().rposition(|&m| !m) {
            Some(last_gap) => last_gap + 1,
            None => 0,
        };
        debug_assert!(conductor + max <= bound);
        let multiplicity = generators[0];
        Ok(NumericalSemigroup {
            generators,
            membership,
            conductor,
            multiplicity,
        })
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as usize;
        n >= self.conductor || self.membership[n]
    }

    /// Unsigned shorthand for [`contains`](Self::contains).
    #[inline]
    pub fn has(&self, n: usize) -> bool {
        n >= self.conductor || self.membership[n]
    }

    /// Smallest `m` such that every integer `>= m` lies in the semigroup.
    pub fn conductor_exponent(&self) -> usize {
        self.conductor
    }

    /// Largest gap, or `-1` when the semigroup is all of N_0.
    pub fn frobenius_number(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn gaps(&self) -> Vec<usize> {
        (0..self.conductor).filter(|&n| !self.membership[n]).collect()
    }

    /// Elements of the semigroup in `[0, bound)`.
    pub fn elements_below(&self, bound: usize) -> impl Iterator<Item = usize> + '_ {
        (0..bound).filter(move |&n| self.has(n))
    }

    pub fn sieve_bound(&self) -> usize {
        self.membership.len()
    }

    /// True for the semigroup N_0, whose ring k[[t]] is a DVR.
    pub fn is_dvr(&self) -> bool {
        self.conductor == 0
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{:?}", self.generators)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(","))
    }
}
