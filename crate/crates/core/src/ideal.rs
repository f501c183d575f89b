//! Monomial ideals of the semigroup ring k[[t^S]].
//!
//! An ideal is determined by its set of exponents, which is closed under
//! adding elements of `S` and contains every integer past
//! `min_element + conductor_exponent`. All arithmetic here is exponent
//! combinatorics; the coefficient field never appears.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone)]
pub struct SemigroupIdeal {
    ring: Arc<NumericalSemigroup>,
    // membership of [0, threshold); everything at or above threshold is in.
    members: Vec<bool>,
    threshold: usize,
    min_element: Option<usize>,
}

impl SemigroupIdeal {
    /// Builds an ideal from a membership predicate on `[0, window)`, with
    /// every exponent `>= window` a member. `window` must be at least the
    /// conductor exponent so the tail is inside the ring.
    pub(crate) fn from_window(
        ring: &Arc<NumericalSemigroup>,
        window: usize,
        pred: impl Fn(usize) -> bool,
    ) -> Self {
        debug_assert!(window >= ring.conductor_exponent());
        let inside = |b: usize| b >= window || (ring.has(b) && pred(b));
        let min = (0..=window).find(|&b| inside(b)).unwrap();
        let threshold = min + ring.conductor_exponent();
        let members = (0..threshold).map(inside).collect();
        SemigroupIdeal {
            ring: Arc::clone(ring),
            members,
            threshold,
            min_element: Some(min),
        }
    }

    pub fn zero(ring: &Arc<NumericalSemigroup>) -> Self {
        SemigroupIdeal {
            ring: Arc::clone(ring),
            members: Vec::new(),
            threshold: 0,
            min_element: None,
        }
    }

    pub fn unit(ring: &Arc<NumericalSemigroup>) -> Self {
        Self::from_window(ring, ring.conductor_exponent(), |_| true)
    }

    /// The maximal ideal: all positive exponents of `S`.
    pub fn maximal(ring: &Arc<NumericalSemigroup>) -> Self {
        Self::from_window(ring, ring.conductor_exponent().max(1), |b| b > 0)
    }

    /// `{b in S : b >= min}`, the valuation cut at `min`.
    pub fn cut(ring: &Arc<NumericalSemigroup>, min: usize) -> Self {
        Self::from_window(ring, min + ring.conductor_exponent(), |b| b >= min)
    }

    pub fn from_generators(ring: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&g| !ring.contains(g)) {
            return Err(Error::GeneratorNotInRing(bad));
        }
        let gens: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
        Ok(Self::generated_by(ring, &gens))
    }

    fn generated_by(ring: &Arc<NumericalSemigroup>, gens: &[usize]) -> Self {
        let Some(&min) = gens.iter().min() else {
            return Self::zero(ring);
        };
        Self::from_window(ring, min + ring.conductor_exponent(), |b| {
            gens.iter().any(|&g| b >= g && ring.has(b - g))
        })
    }

    pub fn ring(&self) -> &Arc<NumericalSemigroup> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.min_element.is_none()
    }

    pub fn is_unit(&self) -> bool {
        self.min_element == Some(0)
    }

    /// Nonzero and proper; in dimension one these are the m-primary ideals.
    pub fn is_m_primary(&self) -> bool {
        matches!(self.min_element, Some(m) if m > 0)
    }

    pub fn min_element(&self) -> Option<usize> {
        self.min_element
    }

    /// Every exponent at or above the threshold is a member.
    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn contains(&self, b: usize) -> bool {
        match self.min_element {
            None => false,
            Some(_) => b >= self.threshold || self.members[b],
        }
    }

    /// Members in `[0, bound)`.
    pub fn members_below(&self, bound: usize) -> Vec<usize> {
        (0..bound).filter(|&b| self.contains(b)).collect()
    }

    pub fn minimal_generators(&self) -> Result<Vec<usize>> {
        let min = self.min_element.ok_or(Error::ZeroIdeal)?;
        let top = self.threshold.max(min + 1);
        Ok((min..top)
            .filter(|&b| self.contains(b))
            .filter(|&b| !(min..b).any(|a| self.contains(a) && self.ring.has(b - a)))
            .collect())
    }

    /// Minimal generators, or an empty list for the zero ideal.
    pub fn generators_or_empty(&self) -> Vec<usize> {
        self.minimal_generators().unwrap_or_default()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        match (self.min_element, other.min_element) {
            (None, _) => Ok(other.clone()),
            (_, None) => Ok(self.clone()),
            _ => {
                let window = self.threshold.min(other.threshold);
                Ok(Self::from_window(&self.ring, window, |b| {
                    self.contains(b) || other.contains(b)
                }))
            }
        }
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let a = self.minimal_generators()?;
        let b = other.minimal_generators()?;
        let sums: Vec<usize> = a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect();
        Ok(Self::generated_by(&self.ring, &sums))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let window = self.threshold.max(other.threshold);
        Ok(Self::from_window(&self.ring, window, |b| {
            self.contains(b) && other.contains(b)
        }))
    }

    /// `(self : other) = {b in S : b + g in self for every generator g of other}`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let jmin = other.min_element.ok_or(Error::ColonByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let gens = other.minimal_generators()?;
        let window = self
            .ring
            .conductor_exponent()
            .max(self.threshold.saturating_sub(jmin));
        Ok(Self::from_window(&self.ring, window, |b| {
            gens.iter().all(|&g| self.contains(b + g))
        }))
    }

    /// Frobenius power `I^[q]`, generated by `q`-multiples of the generators.
    pub fn frobenius_power(&self, q: usize) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParameter("q must be positive".into()));
        }
        let gens = self.minimal_generators()?;
        let scaled: Vec<usize> = gens.iter().map(|g| g * q).collect();
        Ok(Self::generated_by(&self.ring, &scaled))
    }

    /// Integral closure. In dimension one the monomial minimal reduction is
    /// `(t^min)`, whose closure is the valuation cut at `min`.
    pub fn integral_closure(&self) -> Result<Self> {
        let min = self.min_element.ok_or(Error::ZeroIdeal)?;
        Ok(Self::cut(&self.ring, min))
    }

    /// Tight closure. Agrees with the integral closure of the principal
    /// minimal reduction `(t^min)`.
    pub fn tight_closure(&self) -> Result<Self> {
        if self.is_unit() {
            return Ok(self.clone());
        }
        self.integral_closure()
    }

    /// `(T I : T)`.
    pub fn t_basically_full_closure(&self, t: &Self) -> Result<Self> {
        t.product(self)?.colon(t)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        match (self.min_element, other.min_element) {
            (None, _) => true,
            (Some(_), None) => false,
            _ => {
                let top = self.threshold.max(other.threshold);
                (0..top).all(|b| !self.contains(b) || other.contains(b))
            }
        }
    }

    fn require_m_primary(&self) -> Result<()> {
        if self.is_m_primary() {
            Ok(())
        } else {
            Err(Error::NotMPrimary)
        }
    }

    /// `(m I : m) = I`.
    pub fn is_basically_full(&self) -> Result<bool> {
        self.require_m_primary()?;
        let m = Self::maximal(&self.ring);
        Ok(self.t_basically_full_closure(&m)? == *self)
    }

    /// `(T I : T) = I^*`.
    pub fn is_star_t_basically_full(&self, t: &Self) -> Result<bool> {
        self.require_m_primary()?;
        Ok(self.t_basically_full_closure(t)? == self.tight_closure()?)
    }

    /// `(m I : m) = I^*`.
    pub fn is_star_basically_full(&self) -> Result<bool> {
        self.is_star_t_basically_full(&Self::maximal(&self.ring))
    }
}

/// The test ideal of k[[t^S]], which in dimension one is the conductor
/// `<t^c, t^{c+1}, ...>`.
pub fn test_ideal(ring: &Arc<NumericalSemigroup>) -> SemigroupIdeal {
    SemigroupIdeal::cut(ring, ring.conductor_exponent())
}

impl PartialEq for SemigroupIdeal {
    fn eq(&self, other: &Self) -> bool {
        // thresholds are canonical (min + conductor), so the bitmaps line up
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.min_element == other.min_element
            && self.members == other.members
    }
}

impl Eq for SemigroupIdeal {}

impl PartialOrd for SemigroupIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on minimal generators; the zero ideal sorts first.
impl Ord for SemigroupIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generators_or_empty().cmp(&other.generators_or_empty())
    }
}

impl fmt::Debug for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "(0)")
        } else {
            write!(f, "(t^{:?})", self.generators_or_empty())
        }
    }
}

impl fmt::Display for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self
            .generators_or_empty()
            .iter()
            .map(|g| format!("t^{g}"))
            .collect();
        write!(f, "({})", gens.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    fn ideal(r: &Arc<NumericalSemigroup>, gens: &[i64]) -> SemigroupIdeal {
        SemigroupIdeal::from_generators(r, gens).unwrap()
    }

    #[test]
    fn principal_ideal_members() {
        let r = ring(&[2, 5]);
        let i = ideal(&r, &[4]);
        assert_eq!(i.members_below(12), vec![4, 6, 8, 9, 10, 11]);
        assert_eq!(i.minimal_generators().unwrap(), vec![4]);
        assert_eq!(ideal(&r, &[4, 5]).members_below(9), vec![4, 5, 6, 7, 8]);
        assert!(ideal(&r, &[0]).is_unit());
    }

    #[test]
    fn generator_must_lie_in_ring() {
        let r = ring(&[2, 5]);
        assert_eq!(
            SemigroupIdeal::from_generators(&r, &[3]).unwrap_err(),
            Error::GeneratorNotInRing(3)
        );
    }

    #[test]
    fn minimal_generators_examples() {
        let r = ring(&[2, 5]);
        assert_eq!(test_ideal(&r).minimal_generators().unwrap(), vec![4, 5]);
        let r23 = ring(&[2, 3]);
        assert_eq!(
            SemigroupIdeal::maximal(&r23).minimal_generators().unwrap(),
            vec![2, 3]
        );
        assert_eq!(
            SemigroupIdeal::unit(&r23).minimal_generators().unwrap(),
            vec![0]
        );
        assert_eq!(
            SemigroupIdeal::zero(&r23).minimal_generators(),
            Err(Error::ZeroIdeal)
        );
        let n = ring(&[1]);
        assert_eq!(ideal(&n, &[3, 5]).minimal_generators().unwrap(), vec![3]);
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(&[2, 5]);
        let m = SemigroupIdeal::maximal(&r);
        let t4 = ideal(&r, &[4]);
        let prod = m.product(&t4).unwrap();
        assert_eq!(prod.members_below(12), vec![6, 8, 9, 10, 11]);
        let zero = SemigroupIdeal::zero(&r);
        assert_eq!(t4.sum(&zero).unwrap(), t4);
        assert_eq!(t4.intersect(&SemigroupIdeal::unit(&r)).unwrap(), t4);
        assert!(m.product(&zero).unwrap().is_zero());
    }

    #[test]
    fn colon_examples() {
        let r = ring(&[2, 5]);
        let m = SemigroupIdeal::maximal(&r);
        let t4 = ideal(&r, &[4]);
        let bf = m.product(&t4).unwrap().colon(&m).unwrap();
        assert_eq!(bf.minimal_generators().unwrap(), vec![4, 7]);
        assert_eq!(t4.colon(&SemigroupIdeal::unit(&r)).unwrap(), t4);
        assert_eq!(
            t4.colon(&SemigroupIdeal::zero(&r)).unwrap_err(),
            Error::ColonByZero
        );
        for n in (6..=20).step_by(2) {
            let tn = ideal(&r, &[n]);
            let bf = tn.t_basically_full_closure(&m).unwrap();
            assert_eq!(bf.minimal_generators().unwrap(), vec![n as usize, n as usize + 3]);
        }
    }

    #[test]
    fn mismatched_rings() {
        let a = ideal(&ring(&[2, 5]), &[4]);
        let b = ideal(&ring(&[2, 3]), &[4]);
        assert_eq!(a.sum(&b).unwrap_err(), Error::RingMismatch);
        assert_eq!(a.colon(&b).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn frobenius_power_scales_generators() {
        let r = ring(&[2, 5]);
        let tau = test_ideal(&r);
        assert_eq!(
            tau.frobenius_power(3).unwrap().minimal_generators().unwrap(),
            vec![12, 15]
        );
        assert_eq!(tau.frobenius_power(1).unwrap(), tau);
        let r23 = ring(&[2, 3]);
        assert_eq!(
            ideal(&r23, &[2]).frobenius_power(2).unwrap(),
            ideal(&r23, &[4])
        );
    }

    #[test]
    fn closures_and_predicates() {
        let r = ring(&[2, 5]);
        let t4 = ideal(&r, &[4]);
        assert_eq!(t4.tight_closure().unwrap().minimal_generators().unwrap(), vec![4, 5]);
        assert_eq!(t4.integral_closure().unwrap(), t4.tight_closure().unwrap());
        assert!(!t4.is_star_basically_full().unwrap());

        let r23 = ring(&[2, 3]);
        let t2 = ideal(&r23, &[2]);
        assert!(t2.is_star_basically_full().unwrap());
        assert!(!t2.is_basically_full().unwrap());
        assert_eq!(
            t2.t_basically_full_closure(&SemigroupIdeal::maximal(&r23)).unwrap(),
            SemigroupIdeal::maximal(&r23)
        );

        assert_eq!(
            SemigroupIdeal::unit(&r23).is_basically_full(),
            Err(Error::NotMPrimary)
        );
        assert_eq!(
            SemigroupIdeal::zero(&r23).tight_closure(),
            Err(Error::ZeroIdeal)
        );
        assert!(SemigroupIdeal::unit(&r23).tight_closure().unwrap().is_unit());
    }

    #[test]
    fn test_ideal_examples() {
        assert_eq!(
            test_ideal(&ring(&[2, 3])),
            SemigroupIdeal::maximal(&ring(&[2, 3]))
        );
        assert!(test_ideal(&ring(&[1])).is_unit());
    }
}
