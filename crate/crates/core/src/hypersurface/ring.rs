use std::fmt;

use serde::Serialize;

use super::element::{HyperElement, Mono};
use crate::error::{Error, Result};
use crate::laurent::{is_prime, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Exponent triple of the Laurent coefficient `u`, `v` or `w` paired
    /// with this variable in `ux^p + vy^p + wz^p`.
    fn coefficient_exp(self) -> [i32; 3] {
        let mut e = [0; 3];
        e[self.index()] = 1;
        e
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z"][self.index()]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `F_p(u,v,w)[[x,y,z]]/(ux^p + vy^p + wz^p)`, with elements kept in normal
/// form: the exponent of `eliminated` stays below `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperRing {
    p: u32,
    eliminated: Var,
}

fn binom_small(n: u32, k: u32, p: u32) -> u32 {
    if k > n {
        return 0;
    }
    let p64 = p as u64;
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k as u64 {
        num = num * ((n as u64 - i) % p64) % p64;
        den = den * ((i + 1) % p64) % p64;
    }
    // den is a unit since n, k < p
    let mut inv = 1u64;
    let mut base = den;
    let mut e = p64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    (num * inv % p64) as u32
}

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn binom_mod(mut n: u32, mut k: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let b = binom_small(n % p, k % p, p);
        if b == 0 {
            return 0;
        }
        acc = acc * b as u64 % p as u64;
        n /= p;
        k /= p;
    }
    acc as u32
}

impl HyperRing {
    pub fn new(p: u32, eliminated: Var) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(HyperRing { p, eliminated })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn eliminated(&self) -> Var {
        self.eliminated
    }

    /// The two variables other than the eliminated one, in `x, y, z` order.
    fn others(&self) -> (Var, Var) {
        let mut it = Var::ALL.into_iter().filter(|&v| v != self.eliminated);
        (it.next().unwrap(), it.next().unwrap())
    }

    pub fn zero(&self) -> HyperElement {
        HyperElement::zero(*self)
    }

    pub fn one(&self) -> HyperElement {
        self.monomial([0, 0, 0])
    }

    pub fn var(&self, v: Var) -> HyperElement {
        let mut m = [0; 3];
        m[v.index()] = 1;
        self.monomial(m)
    }

    pub fn laurent(&self, coeff: LaurentPoly) -> HyperElement {
        self.term(coeff, [0, 0, 0])
    }

    pub fn monomial(&self, m: Mono) -> HyperElement {
        self.term(LaurentPoly::one(self.p), m)
    }

    /// Normal form of `coeff * x^a y^b z^c`.
    pub fn term(&self, coeff: LaurentPoly, m: Mono) -> HyperElement {
        if coeff.is_zero() {
            return self.zero();
        }
        let e = self.eliminated.index();
        let k = m[e] / self.p;
        let mut rest = m;
        rest[e] %= self.p;
        let mut out = self.zero();
        for (c, mono) in self.power_expansion(k) {
            let full = [mono[0] + rest[0], mono[1] + rest[1], mono[2] + rest[2]];
            out.add_raw(full, &coeff * &c);
        }
        out
    }

    /// Terms of `(eliminated)^{kp}`:
    /// `(-1)^k c_e^{-k} sum_i binom(k,i) c_a^i c_b^{k-i} a^{ip} b^{(k-i)p}`,
    /// where `a < b` are the remaining variables and `c_*` their relation
    /// coefficients.
    fn power_expansion(&self, k: u32) -> Vec<(LaurentPoly, Mono)> {
        let p = self.p;
        let (a, b) = self.others();
        let ce = self.eliminated.coefficient_exp();
        let (ca, cb) = (a.coefficient_exp(), b.coefficient_exp());
        let sign: i64 = if k.is_multiple_of(2) { 1 } else { -1 };
        (0..=k)
            .rev()
            .filter_map(|i| {
                let bin = binom_mod(k, i, p);
                if bin == 0 {
                    return None;
                }
                let k = k as i32;
                let i32_ = i as i32;
                let exp = [
                    -k * ce[0] + i32_ * ca[0] + (k - i32_) * cb[0],
                    -k * ce[1] + i32_ * ca[1] + (k - i32_) * cb[1],
                    -k * ce[2] + i32_ * ca[2] + (k - i32_) * cb[2],
                ];
                let coeff = LaurentPoly::monomial(p, sign * bin as i64, exp);
                let mut mono = [0; 3];
                mono[a.index()] = i * p;
                mono[b.index()] = (k as u32 - i) * p;
                Some((coeff, mono))
            })
            .collect()
    }

    /// Normal form of `(eliminated variable)^{kp}`.
    pub fn normal_form_power(&self, k: u32) -> HyperElement {
        let mut m = [0; 3];
        m[self.eliminated.index()] = k * self.p;
        self.monomial(m)
    }

    /// `u x^p + v y^p + w z^p`, which normal-forms to zero.
    pub fn defining_relation(&self) -> HyperElement {
        let p = self.p;
        Var::ALL
            .into_iter()
            .map(|v| {
                let mut m = [0; 3];
                m[v.index()] = p;
                self.term(LaurentPoly::monomial(p, 1, v.coefficient_exp()), m)
            })
            .fold(self.zero(), |acc, t| &acc + &t)
    }

    /// All monomials of total degree `l`, normal-formed: generators of `m^l`.
    pub fn maximal_power_gens(&self, l: u32) -> Vec<HyperElement> {
        let mut out: Vec<HyperElement> = all_monomials(l).into_iter().map(|m| self.monomial(m)).collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Every `(a, b, c)` with `a + b + c = d`, lexicographic.
pub fn all_monomials(d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out.reverse();
    out
}
