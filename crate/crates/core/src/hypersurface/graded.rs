//! Degree-by-degree ideal arithmetic.
//!
//! The defining relation is homogeneous, so the ring is graded by total
//! degree and each question about homogeneous elements (membership, colon,
//! equality of ideals) is decided inside one finite-dimensional component
//! over `F_p(u,v,w)`.

use std::collections::{BTreeMap, HashMap};

use super::element::{HyperElement, Mono};
use super::ring::{all_monomials, HyperRing};
use crate::error::{Error, Result};
use crate::laurent::sparse::{
    dot, orthogonal_complement, same_span, sparse_in_span, SparseVec,
};

/// Normal-form monomials of one degree, lexicographic.
#[derive(Debug, Clone)]
pub struct GradedComponentBasis {
    degree: u32,
    monomials: Vec<Mono>,
    index: HashMap<Mono, usize>,
}

impl GradedComponentBasis {
    pub fn new(ring: HyperRing, degree: u32) -> Self {
        let e = ring.eliminated().index();
        let p = ring.characteristic();
        let monomials: Vec<Mono> = all_monomials(degree)
            .into_iter()
            .filter(|m| m[e] < p)
            .collect();
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        GradedComponentBasis {
            degree,
            monomials,
            index,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Mono] {
        &self.monomials
    }

    /// Coordinates of a homogeneous element of this degree.
    pub fn coordinates(&self, e: &HyperElement) -> SparseVec {
        e.terms()
            .map(|(m, c)| {
                let i = *self
                    .index
                    .get(m)
                    .unwrap_or_else(|| panic!("monomial {m:?} is not in degree {}", self.degree));
                (i, c.clone())
            })
            .collect()
    }

    pub fn element(&self, ring: HyperRing, v: &SparseVec) -> HyperElement {
        v.iter().fold(ring.zero(), |acc, (&i, c)| {
            &acc + &ring.term(c.clone(), self.monomials[i])
        })
    }
}

fn check_homogeneous(gens: &[HyperElement]) -> Result<()> {
    if gens.iter().all(|g| g.is_homogeneous()) {
        Ok(())
    } else {
        Err(Error::InhomogeneousGenerator)
    }
}

/// Spanning vectors of the degree-`d` piece of the ideal generated by
/// `gens`: every `g * mu` with `mu` a basis monomial of degree
/// `d - deg(g)`. Generators of degree above `d` contribute nothing.
pub fn ideal_component(ring: HyperRing, gens: &[HyperElement], d: u32) -> Result<Vec<SparseVec>> {
    check_homogeneous(gens)?;
    let target = GradedComponentBasis::new(ring, d);
    let mut out = Vec::new();
    for g in gens {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        let multipliers = GradedComponentBasis::new(ring, d - e);
        for &mu in multipliers.monomials() {
            let prod = g * &ring.monomial(mu);
            if !prod.is_zero() {
                out.push(target.coordinates(&prod));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn is_member(e: &HyperElement, gens: &[HyperElement]) -> Result<bool> {
    if e.is_zero() {
        return Ok(true);
    }
    let d = e.degree().ok_or(Error::InhomogeneousGenerator)?;
    let ring = e.ring();
    let component = ideal_component(ring, gens, d)?;
    let target = GradedComponentBasis::new(ring, d).coordinates(e);
    Ok(sparse_in_span(ring.characteristic(), &component, &target))
}

/// Basis of the degree-`d` component of `(I : J)`, i.e. of
/// `{v in R_d : v g in I for every generator g of J}`.
///
/// For each degree `e` occurring in `J`, the annihilator `W` of `I_{d+e}`
/// is computed once; `v` lies in the colon iff `w . (g v) = 0` for every
/// `w` in `W` and every `g` of that degree. The stacked constraints are
/// then solved for their kernel.
pub fn colon_component(
    ring: HyperRing,
    gens_i: &[HyperElement],
    gens_j: &[HyperElement],
    d: u32,
) -> Result<Vec<HyperElement>> {
    check_homogeneous(gens_i)?;
    check_homogeneous(gens_j)?;
    let p = ring.characteristic();
    let source = GradedComponentBasis::new(ring, d);

    let mut by_degree: BTreeMap<u32, Vec<&HyperElement>> = BTreeMap::new();
    for g in gens_j {
        if let Some(e) = g.degree() {
            by_degree.entry(e).or_default().push(g);
        }
    }

    let mut constraints: Vec<SparseVec> = Vec::new();
    for (e, gs) in by_degree {
        let target = GradedComponentBasis::new(ring, d + e);
        let component = ideal_component(ring, gens_i, d + e)?;
        let annihilator = orthogonal_complement(p, target.len(), &component);
        if annihilator.is_empty() {
            continue;
        }
        for g in gs {
            let images: Vec<SparseVec> = source
                .monomials()
                .iter()
                .map(|&mu| target.coordinates(&(g * &ring.monomial(mu))))
                .collect();
            for w in &annihilator {
                let row: SparseVec = images
                    .iter()
                    .enumerate()
                    .map(|(j, img)| (j, dot(w, img, p)))
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
                if !row.is_empty() {
                    constraints.push(row);
                }
            }
        }
    }
    constraints.sort();
    constraints.dedup();
    Ok(orthogonal_complement(p, source.len(), &constraints)
        .iter()
        .map(|v| source.element(ring, v))
        .collect())
}

/// Whether the spans of two families of degree-`d` elements agree.
pub fn same_component(ring: HyperRing, d: u32, a: &[HyperElement], b: &[HyperElement]) -> bool {
    let basis = GradedComponentBasis::new(ring, d);
    let va: Vec<SparseVec> = a.iter().filter(|e| !e.is_zero()).map(|e| basis.coordinates(e)).collect();
    let vb: Vec<SparseVec> = b.iter().filter(|e| !e.is_zero()).map(|e| basis.coordinates(e)).collect();
    same_span(ring.characteristic(), &va, &vb)
}

/// Componentwise equality of two ideals in every degree `<= bound`;
/// returns the first degree where they differ.
pub fn first_difference(
    ring: HyperRing,
    gens_a: &[HyperElement],
    gens_b: &[HyperElement],
    bound: u32,
) -> Result<Option<u32>> {
    let p = ring.characteristic();
    for d in 0..=bound {
        let a = ideal_component(ring, gens_a, d)?;
        let b = ideal_component(ring, gens_b, d)?;
        if !same_span(p, &a, &b) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

pub fn ideals_equal_up_to(
    ring: HyperRing,
    gens_a: &[HyperElement],
    gens_b: &[HyperElement],
    bound: u32,
) -> Result<bool> {
    Ok(first_difference(ring, gens_a, gens_b, bound)?.is_none())
}

/// First degree `<= bound` where `(I : J)` differs from the ideal generated
/// by `gens_k`.
pub fn colon_first_difference(
    ring: HyperRing,
    gens_i: &[HyperElement],
    gens_j: &[HyperElement],
    gens_k: &[HyperElement],
    bound: u32,
) -> Result<Option<u32>> {
    let p = ring.characteristic();
    for d in 0..=bound {
        let basis = GradedComponentBasis::new(ring, d);
        let colon: Vec<SparseVec> = colon_component(ring, gens_i, gens_j, d)?
            .iter()
            .map(|e| basis.coordinates(e))
            .collect();
        let k = ideal_component(ring, gens_k, d)?;
        if !same_span(p, &colon, &k) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

pub fn frobenius_power_gens(gens: &[HyperElement], q: u32) -> Vec<HyperElement> {
    gens.iter().map(|g| g.pow(q)).collect()
}

/// Smallest `q = p^j` with `j <= max_exponent` and `e^q` in `I^[q]`.
pub fn frobenius_closure_member(
    e: &HyperElement,
    gens: &[HyperElement],
    max_exponent: u32,
) -> Result<Option<u32>> {
    let p = e.ring().characteristic();
    let mut q = 1;
    for _ in 0..=max_exponent {
        if is_member(&e.pow(q), &frobenius_power_gens(gens, q))? {
            return Ok(Some(q));
        }
        q *= p;
    }
    Ok(None)
}
