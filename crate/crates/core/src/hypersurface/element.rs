use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::HyperRing;
use crate::laurent::LaurentPoly;

/// Exponents `(a, b, c)` of `x^a y^b z^c`.
pub type Mono = [u32; 3];

/// A normal-form element: Laurent coefficients on monomials whose
/// eliminated-variable exponent is below `p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperElement {
    ring: HyperRing,
    terms: BTreeMap<Mono, LaurentPoly>,
}

impl HyperElement {
    pub(crate) fn zero(ring: HyperRing) -> Self {
        HyperElement {
            ring,
            terms: BTreeMap::new(),
        }
    }

    /// Adds a term already in normal form.
    pub(crate) fn add_raw(&mut self, m: Mono, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m[self.ring.eliminated().index()] < self.ring.characteristic());
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> HyperRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Mono) -> Option<&LaurentPoly> {
        self.terms.get(m)
    }

    /// Total degree if every term has the same one; `None` for zero or
    /// inhomogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m[0] + m[1] + m[2]);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.ring);
        for (m, x) in &self.terms {
            out.add_raw(*m, x * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "elements of different rings");
    }
}

impl Add<&HyperElement> for &HyperElement {
    type Output = HyperElement;

    fn add(self, rhs: &HyperElement) -> HyperElement {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_raw(*m, c.clone());
        }
        out
    }
}

impl Neg for &HyperElement {
    type Output = HyperElement;

    fn neg(self) -> HyperElement {
        self.scale(&LaurentPoly::constant(self.ring.characteristic(), -1))
    }
}

impl Sub<&HyperElement> for &HyperElement {
    type Output = HyperElement;

    fn sub(self, rhs: &HyperElement) -> HyperElement {
        self + &(-rhs)
    }
}

impl Mul<&HyperElement> for &HyperElement {
    type Output = HyperElement;

    fn mul(self, rhs: &HyperElement) -> HyperElement {
        self.check_ring(rhs);
        let mut out = HyperElement::zero(self.ring);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let m = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                let t = self.ring.term(ca * cb, m);
                for (mm, c) in t.terms {
                    out.add_raw(mm, c);
                }
            }
        }
        out
    }
}

impl fmt::Display for HyperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = (0..3)
                    .filter(|&i| m[i] > 0)
                    .map(|i| {
                        let name = ["x", "y", "z"][i];
                        if m[i] == 1 {
                            name.to_string()
                        } else {
                            format!("{name}^{}", m[i])
                        }
                    })
                    .collect();
                match (c.is_one(), vars.is_empty()) {
                    (_, true) => format!("({c})"),
                    (true, false) => vars.join("*"),
                    (false, false) => format!("({c})*{}", vars.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HyperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
