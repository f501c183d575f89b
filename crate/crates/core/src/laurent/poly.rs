use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exponent of `u^i v^j w^k`.
pub type Exp = [i32; 3];

const NAMES: [&str; 3] = ["u", "v", "w"];

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat; p is prime
    pow_mod(a, p - 2, p)
}

fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let (mut base, mut acc) = (a as u64 % p as u64, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn reduce(c: i64, p: u32) -> u32 {
    c.rem_euclid(p as i64) as u32
}

/// An element of `F_p[u^±1, v^±1, w^±1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    p: u32,
    terms: BTreeMap<Exp, u32>,
}

impl LaurentPoly {
    pub fn zero(p: u32) -> Self {
        LaurentPoly {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u32, c: i64) -> Self {
        Self::monomial(p, c, [0, 0, 0])
    }

    pub fn one(p: u32) -> Self {
        Self::constant(p, 1)
    }

    pub fn monomial(p: u32, coeff: i64, exp: Exp) -> Self {
        let mut terms = BTreeMap::new();
        let c = reduce(coeff, p);
        if c != 0 {
            terms.insert(exp, c);
        }
        LaurentPoly { p, terms }
    }

    pub fn u(p: u32) -> Self {
        Self::monomial(p, 1, [1, 0, 0])
    }

    pub fn v(p: u32) -> Self {
        Self::monomial(p, 1, [0, 1, 0])
    }

    pub fn w(p: u32) -> Self {
        Self::monomial(p, 1, [0, 0, 1])
    }

    pub fn from_terms(p: u32, terms: impl IntoIterator<Item = (Exp, i64)>) -> Self {
        let mut out = Self::zero(p);
        for (e, c) in terms {
            out.add_term(e, reduce(c, p));
        }
        out
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]) == Some(&1)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &u32)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exp, c: u32) {
        if c == 0 {
            return;
        }
        let p = self.p;
        let entry = self.terms.entry(e).or_insert(0);
        *entry = (*entry + c) % p;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_char(other)?;
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_char(other)?;
        let p = self.p as u64;
        let mut out = Self::zero(self.p);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                out.add_term(e, (ca as u64 * cb as u64 % p) as u32);
            }
        }
        Ok(out)
    }

    fn same_char(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::CharacteristicMismatch(self.p, other.p))
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = reduce(c, self.p) as u64;
        let p = self.p as u64;
        let terms = self
            .terms
            .iter()
            .filter_map(|(&e, &x)| {
                let y = (x as u64 * c % p) as u32;
                (y != 0).then_some((e, y))
            })
            .collect();
        LaurentPoly { p: self.p, terms }
    }

    /// Multiplies by the monomial `u^e0 v^e1 w^e2`.
    pub fn shift(&self, by: Exp) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| ([e[0] + by[0], e[1] + by[1], e[2] + by[2]], c))
            .collect();
        LaurentPoly { p: self.p, terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.p);
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

    /// Single-term elements are exactly the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, &c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::monomial(
            self.p,
            inv_mod(c, self.p) as i64,
            [-e[0], -e[1], -e[2]],
        ))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    ///
    /// Leading terms are peeled off in lexicographic order. The quotient's
    /// exponents are confined to the box `[min(a) - min(b), max(a) - max(b)]`
    /// coordinatewise, so a quotient term outside it proves inexactness.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.p, divisor.p, "characteristic mismatch");
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.p));
        }
        if let Some(inv) = divisor.unit_inverse() {
            return Some(self * &inv);
        }
        let (lo_a, hi_a) = self.exponent_box();
        let (lo_b, hi_b) = divisor.exponent_box();
        let (lead_b, &lead_c) = divisor.terms.iter().next_back().unwrap();
        let lead_inv = inv_mod(lead_c, self.p) as u64;
        let p = self.p as u64;

        let mut rem = self.clone();
        let mut quot = Self::zero(self.p);
        while let Some((&e, &c)) = rem.terms.iter().next_back() {
            let qe = [e[0] - lead_b[0], e[1] - lead_b[1], e[2] - lead_b[2]];
            let inside = (0..3).all(|i| qe[i] >= lo_a[i] - lo_b[i] && qe[i] <= hi_a[i] - hi_b[i]);
            if !inside {
                return None;
            }
            let qc = (c as u64 * lead_inv % p) as u32;
            quot.add_term(qe, qc);
            let neg = p - qc as u64;
            for (d, &dc) in &divisor.terms {
                let e = [qe[0] + d[0], qe[1] + d[1], qe[2] + d[2]];
                rem.add_term(e, (neg * dc as u64 % p) as u32);
            }
        }
        Some(quot)
    }

    fn exponent_box(&self) -> (Exp, Exp) {
        let mut lo = [i32::MAX; 3];
        let mut hi = [i32::MIN; 3];
        for e in self.terms.keys() {
            for i in 0..3 {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    /// Symmetric representative of a coefficient, in `(-p/2, p/2]`.
    fn signed(&self, c: u32) -> i64 {
        let c = c as i64;
        let p = self.p as i64;
        if 2 * c > p {
            c - p
        } else {
            c
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;

            /// Panics on a characteristic mismatch; use the `checked_*`
            /// methods to get an error instead.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("characteristic mismatch")
            }
        }

        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl fmt::Display for LaurentPoly {
    /// Terms from the lexicographically largest exponent down, e.g.
    /// `-u^3*w^-3 - 3*u^2*v*w^-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, &c)) in self.terms.iter().rev().enumerate() {
            let c = self.signed(c);
            let mono: Vec<String> = (0..3)
                .filter(|&i| e[i] != 0)
                .map(|i| match e[i] {
                    1 => NAMES[i].to_string(),
                    k => format!("{}^{}", NAMES[i], k),
                })
                .collect();
            let mag = c.abs();
            let body = match (mag, mono.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => mono.join("*"),
                (_, false) => format!("{}*{}", mag, mono.join("*")),
            };
            match (n, c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] (mod {})", self, self.p)
    }
}
