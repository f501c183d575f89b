//! Scripted checks of the tight-closure computations in
//! `F_p(u,v,w)[[x,y,z]]/(ux^p+vy^p+wz^p)`: the closure of `(y^t, z^t)`, the
//! colon chain that identifies the test ideal as `m^{p-1}`, and the
//! explicit ideals that fail to be star-tau-basically full.

use std::collections::BTreeMap;

use serde::Serialize;

use super::element::{HyperElement, Mono};
use super::graded::{
    colon_first_difference, first_difference, frobenius_closure_member, is_member,
    GradedComponentBasis,
};
use super::ring::{HyperRing, Var};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub parameters: BTreeMap<String, i64>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl SubCheck {
    fn new(name: &str, params: &[(&str, i64)], verdict: bool, witness: Option<String>) -> Self {
        SubCheck {
            name: name.to_string(),
            parameters: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            verdict,
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub p: u32,
    pub checks: Vec<SubCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SubCheck> {
        self.checks.iter().filter(|c| !c.verdict)
    }
}

fn ring_x(p: u32) -> Result<HyperRing> {
    HyperRing::new(p, Var::X)
}

fn ytzt(ring: HyperRing, t: u32) -> Vec<HyperElement> {
    vec![ring.monomial([0, t, 0]), ring.monomial([0, 0, t])]
}

fn with_power(ring: HyperRing, base: &[HyperElement], l: u32) -> Vec<HyperElement> {
    let mut gens = base.to_vec();
    gens.extend(ring.maximal_power_gens(l));
    gens
}

/// Closed form for `x^k y^r z^s ∈ (y^t, z^t)^*` with `k < p`.
pub fn star_ytzt_closed_form(k: u32, r: u32, s: u32, t: u32) -> bool {
    r >= t || s >= t || k as i64 >= 2 * t as i64 - r as i64 - s as i64 - 1
}

/// Whether `x^k y^r z^s` lies in `(y^t, z^t)^*`, decided by expanding
/// `(x^k y^r z^s)^p` with the relation and testing each surviving term for
/// membership in `(y^{tp}, z^{tp})` of the regular ring `k[[y, z]]`.
pub fn star_ytzt_member(p: u32, k: u32, r: u32, s: u32, t: u32) -> Result<bool> {
    if k >= p {
        return Err(Error::ExponentOutOfRange { k, p });
    }
    let ring = ring_x(p)?;
    let expansion = ring.monomial([k * p, r * p, s * p]);
    let member = expansion.terms().all(|(m, _)| {
        debug_assert_eq!(m[0], 0);
        m[1] >= t * p || m[2] >= t * p
    });
    debug_assert_eq!(member, star_ytzt_closed_form(k, r, s, t));
    Ok(member)
}

/// Membership of a monomial in a monomial ideal of a polynomial ring.
pub fn monomial_divisible(m: &[u32], gens: &[Vec<u32>]) -> bool {
    gens.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b))
}

fn check_params(p: u32, t_range: &[u32], bound: u32) -> Result<()> {
    if ![3, 5, 7].contains(&p) {
        return Err(Error::UnsupportedPrime(p));
    }
    if t_range.is_empty() || t_range.iter().any(|&t| t < p || t > p + 3) {
        return Err(Error::InvalidParameter(format!(
            "t values must lie in [{p}, {}]",
            p + 3
        )));
    }
    let tmax = *t_range.iter().max().unwrap();
    if bound < 3 * tmax {
        return Err(Error::InvalidParameter(format!(
            "degree bound {bound} is below 3 * max t = {}",
            3 * tmax
        )));
    }
    Ok(())
}

/// Combinatorial half of the closure computation: the expansion criterion
/// agrees with `(y^t, z^t) + m^{2t-1}` on every monomial `x^k y^r z^s`.
pub fn check_star_set(p: u32, t: u32) -> Result<SubCheck> {
    let mut witness = None;
    'outer: for k in 0..p {
        for r in 0..=2 * t {
            for s in 0..=2 * t {
                let by_expansion = star_ytzt_member(p, k, r, s, t)?;
                let in_ideal = r >= t || s >= t || k + r + s >= 2 * t - 1;
                if by_expansion != in_ideal {
                    witness = Some(format!("x^{k}*y^{r}*z^{s}"));
                    break 'outer;
                }
            }
        }
    }
    Ok(SubCheck::new(
        "star_ytzt_equals_m_power",
        &[("p", p as i64), ("t", t as i64)],
        witness.is_none(),
        witness,
    ))
}

/// `(y^t, z^t) + m^{2t-1} = (y^t, z^t) : m^{p-1}` in every degree up to `bound`.
pub fn check_star_equals_colon(p: u32, t: u32, bound: u32) -> Result<SubCheck> {
    let ring = ring_x(p)?;
    let base = ytzt(ring, t);
    let star = with_power(ring, &base, 2 * t - 1);
    let diff = colon_first_difference(ring, &base, &ring.maximal_power_gens(p - 1), &star, bound)?;
    Ok(SubCheck::new(
        "star_equals_colon_m_p_minus_1",
        &[("p", p as i64), ("t", t as i64), ("bound", bound as i64)],
        diff.is_none(),
        diff.map(|d| format!("degree {d}")),
    ))
}

/// `(y^t, z^t) : m^l = (y^t, z^t) + m^{2t+p-2-l}` up to `bound`.
pub fn check_colon_chain(p: u32, t: u32, l: u32, bound: u32) -> Result<SubCheck> {
    let ring = ring_x(p)?;
    let base = ytzt(ring, t);
    let expected = with_power(ring, &base, 2 * t + p - 2 - l);
    let diff = colon_first_difference(ring, &base, &ring.maximal_power_gens(l), &expected, bound)?;
    Ok(SubCheck::new(
        "colon_chain",
        &[("p", p as i64), ("t", t as i64), ("l", l as i64), ("bound", bound as i64)],
        diff.is_none(),
        diff.map(|d| format!("p={p} t={t} l={l} d={d}")),
    ))
}

/// Runs the closure identity, the colon identity and the full colon chain
/// for each `t`, then the counterexample suite.
pub fn verify_ytzt_closure(p: u32, t_range: &[u32], bound: u32) -> Result<VerificationReport> {
    check_params(p, t_range, bound)?;
    let mut checks = Vec::new();
    for &t in t_range {
        checks.push(check_star_set(p, t)?);
        checks.push(check_star_equals_colon(p, t, bound)?);
        for l in 1..2 * t {
            checks.push(check_colon_chain(p, t, l, bound)?);
        }
    }
    checks.extend(verify_counterexample(p)?.checks);
    Ok(VerificationReport {
        suite: "ytzt_closure".to_string(),
        p,
        checks,
    })
}

fn lp(p: u32, c: i64, e: [i32; 3]) -> LaurentPoly {
    LaurentPoly::monomial(p, c, e)
}

/// Every `r * mu` with `mu` of degree `l` lies in `m^l I`.
fn in_power_colon(ring: HyperRing, r: &HyperElement, ideal: &[HyperElement], l: u32) -> Result<Option<Mono>> {
    let mut prod_gens = Vec::new();
    for mu in ring.maximal_power_gens(l) {
        for g in ideal {
            prod_gens.push(&mu * g);
        }
    }
    for &mu in GradedComponentBasis::new(ring, l).monomials() {
        if !is_member(&(r * &ring.monomial(mu)), &prod_gens)? {
            return Ok(Some(mu));
        }
    }
    Ok(None)
}

fn mono_str(m: Mono) -> String {
    format!("x^{}*y^{}*z^{}", m[0], m[1], m[2])
}

/// The ideals witnessing that not every m-primary ideal is
/// star-tau-basically full: `I = (x^3,y^3,z^3), r = xy^2` for `p >= 5`;
/// `I = (x^4,y^4,z^4), r = xy^3` for `p = 3`.
pub fn verify_counterexample(p: u32) -> Result<VerificationReport> {
    if ![3, 5, 7].contains(&p) {
        return Err(Error::UnsupportedPrime(p));
    }
    let ring = ring_x(p)?;
    let pp = [("p", p as i64)];
    let mut checks = Vec::new();

    if p >= 5 {
        let zring = HyperRing::new(p, Var::Z)?;
        let q = p;
        let expected = [
            (lp(p, -1, [3, 0, -3]), [3 * q, 0, 0]),
            (lp(p, -3, [2, 1, -3]), [2 * q, q, 0]),
            (lp(p, -3, [1, 2, -3]), [q, 2 * q, 0]),
            (lp(p, -1, [0, 3, -3]), [0, 3 * q, 0]),
        ]
        .into_iter()
        .fold(zring.zero(), |acc, (c, m)| &acc + &zring.term(c, m));
        let got = zring.normal_form_power(3);
        checks.push(SubCheck::new(
            "z_3p_expansion",
            &pp,
            got == expected,
            Some(got.to_string()),
        ));

        // (x^3p, y^3p, z^3p) = (x^3p, y^3p, u^2v x^2p y^p + uv^2 x^p y^2p)
        let frob = vec![
            zring.monomial([3 * q, 0, 0]),
            zring.monomial([0, 3 * q, 0]),
            zring.monomial([0, 0, 3 * q]),
        ];
        let rewritten = vec![
            zring.monomial([3 * q, 0, 0]),
            zring.monomial([0, 3 * q, 0]),
            &zring.term(lp(p, 1, [2, 1, 0]), [2 * q, q, 0]) + &zring.term(lp(p, 1, [1, 2, 0]), [q, 2 * q, 0]),
        ];
        let diff = first_difference(zring, &frob, &rewritten, 3 * q)?;
        checks.push(SubCheck::new(
            "frobenius_power_rewrite",
            &pp,
            diff.is_none(),
            diff.map(|d| format!("degree {d}")),
        ));

        let ideal = vec![ring.monomial([3, 0, 0]), ring.monomial([0, 3, 0]), ring.monomial([0, 0, 3])];
        let r = ring.monomial([1, 2, 0]);
        checks.push(SubCheck::new("r_not_in_ideal", &pp, !is_member(&r, &ideal)?, None));
        let bad = in_power_colon(ring, &r, &ideal, p - 1)?;
        checks.push(SubCheck::new(
            "r_in_tau_colon",
            &pp,
            bad.is_none(),
            bad.map(mono_str),
        ));
        let target = [q, 2 * q];
        let gens = vec![vec![3 * q, 0], vec![0, 3 * q], vec![2 * q, q]];
        checks.push(SubCheck::new(
            "regular_ring_non_membership",
            &pp,
            !monomial_divisible(&target, &gens),
            Some(format!("x^{}*y^{} vs (x^{},y^{},x^{}*y^{})", q, 2 * q, 3 * q, 3 * q, 2 * q, q)),
        ));
    } else {
        let lhs = ring.monomial([3, 3, 0]);
        let rhs = [
            (lp(p, 1, [1, -1, 0]), [6, 0, 0]),
            (lp(p, 1, [-1, 1, 0]), [0, 6, 0]),
            (lp(p, 2, [-1, -1, 2]), [0, 0, 6]),
        ]
        .into_iter()
        .fold(ring.zero(), |acc, (c, m)| &acc + &ring.term(c, m));
        checks.push(SubCheck::new(
            "x3y3_identity",
            &pp,
            lhs == rhs,
            Some(lhs.to_string()),
        ));
        let ideal = vec![ring.monomial([4, 0, 0]), ring.monomial([0, 4, 0]), ring.monomial([0, 0, 4])];
        checks.push(SubCheck::new("x3y3_in_ideal", &pp, is_member(&lhs, &ideal)?, None));
        let r = ring.monomial([1, 3, 0]);
        checks.push(SubCheck::new("r_not_in_ideal", &pp, !is_member(&r, &ideal)?, None));
        let bad = in_power_colon(ring, &r, &ideal, 2)?;
        checks.push(SubCheck::new(
            "r_in_tau_colon",
            &pp,
            bad.is_none(),
            bad.map(mono_str),
        ));
        let gens = vec![vec![4, 0], vec![0, 4], vec![3, 1]];
        checks.push(SubCheck::new(
            "regular_ring_non_membership",
            &pp,
            !monomial_divisible(&[1, 3], &gens),
            Some("x*y^3 vs (x^4,y^4,x^3*y)".to_string()),
        ));
    }
    Ok(VerificationReport {
        suite: "counterexample".to_string(),
        p,
        checks,
    })
}

/// Frobenius-closure memberships in `(I, y)` and `(I, x + a y)` with
/// `I = (xy, x^2, y^2, z)`, sampled at `a` in `{1, u, w}`, plus the
/// degree-one fact that `x, y` are outside `I`.
pub fn verify_frobenius_closure(p: u32) -> Result<VerificationReport> {
    let ring = ring_x(p)?;
    let (x, y, z) = (ring.var(Var::X), ring.var(Var::Y), ring.var(Var::Z));
    let base = vec![ring.monomial([2, 0, 0]), ring.monomial([0, 2, 0]), z.clone()];
    let pp = [("p", p as i64)];
    let mut checks = Vec::new();

    let mut with_y = base.clone();
    with_y.push(y.clone());
    let q = frobenius_closure_member(&x, &with_y, 1)?;
    checks.push(SubCheck::new(
        "x_in_frobenius_closure_of_i_plus_y",
        &pp,
        q == Some(p),
        Some(format!("q={}", q.map_or(0, |q| q as i64))),
    ));

    let samples = [
        ("1", LaurentPoly::one(p)),
        ("u", LaurentPoly::u(p)),
        ("w", LaurentPoly::w(p)),
    ];
    for (label, a) in samples {
        let mut gens = base.clone();
        gens.push(&x + &y.scale(&a));
        let q = frobenius_closure_member(&y, &gens, 1)?;
        checks.push(SubCheck::new(
            "y_in_frobenius_closure_of_i_plus_x_ay",
            &pp,
            q == Some(p),
            Some(format!("a={label} q={}", q.map_or(0, |q| q as i64))),
        ));
    }

    let i_gens = vec![ring.monomial([1, 1, 0]), ring.monomial([2, 0, 0]), ring.monomial([0, 2, 0]), z];
    for (label, e) in [("x", &x), ("y", &y)] {
        checks.push(SubCheck::new(
            "degree_one_non_member",
            &pp,
            !is_member(e, &i_gens)?,
            Some(label.to_string()),
        ));
    }
    Ok(VerificationReport {
        suite: "frobenius_closure".to_string(),
        p,
        checks,
    })
}
