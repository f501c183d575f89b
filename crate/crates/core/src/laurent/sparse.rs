//! Sparse front end to the dense solver.
//!
//! Vectors arising from graded components are mostly single monomials.
//! Any vector with one nonzero coordinate puts that basis vector in the span
//! (every nonzero Laurent polynomial is a unit of the fraction field), so
//! the coordinate can be projected away from everything else. What remains
//! splits into independent blocks by shared support, each solved densely.

use std::collections::{BTreeMap, BTreeSet};

use super::matrix::{solve_in_span, PolyMatrix};
use super::poly::LaurentPoly;

pub type SparseVec = BTreeMap<usize, LaurentPoly>;

pub fn sparse_from_dense(v: &[LaurentPoly]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

struct Reduced {
    covered: BTreeSet<usize>,
    blocks: Vec<Block>,
}

struct Block {
    coords: Vec<usize>,
    vectors: Vec<SparseVec>,
}

fn reduce(vectors: &[SparseVec]) -> Reduced {
    let mut covered = BTreeSet::new();
    let mut live: Vec<SparseVec> = vectors.iter().filter(|v| !v.is_empty()).cloned().collect();
    loop {
        let fresh: BTreeSet<usize> = live
            .iter()
            .filter(|v| v.len() == 1)
            .map(|v| *v.keys().next().unwrap())
            .collect();
        if fresh.is_empty() {
            break;
        }
        for v in &mut live {
            v.retain(|k, _| !fresh.contains(k));
        }
        live.retain(|v| !v.is_empty());
        live.sort();
        live.dedup();
        covered.extend(fresh);
    }

    // union-find over coordinates that share a residual vector
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
        let px = *parent.entry(x).or_insert(x);
        if px == x {
            return x;
        }
        let root = find(parent, px);
        parent.insert(x, root);
        root
    }
    for v in &live {
        let mut keys = v.keys();
        let first = *keys.next().unwrap();
        let ra = find(&mut parent, first);
        for &k in keys {
            let rb = find(&mut parent, k);
            if ra != rb {
                parent.insert(rb, ra);
            }
        }
    }
    let mut by_root: BTreeMap<usize, Block> = BTreeMap::new();
    let coords: Vec<usize> = parent.keys().copied().collect();
    for c in coords {
        let root = find(&mut parent, c);
        by_root
            .entry(root)
            .or_insert_with(|| Block {
                coords: Vec::new(),
                vectors: Vec::new(),
            })
            .coords
            .push(c);
    }
    for v in live {
        let root = find(&mut parent, *v.keys().next().unwrap());
        by_root.get_mut(&root).unwrap().vectors.push(v);
    }
    Reduced {
        covered,
        blocks: by_root.into_values().collect(),
    }
}

impl Block {
    fn dense(&self, v: &SparseVec, p: u32) -> Vec<LaurentPoly> {
        self.coords
            .iter()
            .map(|c| v.get(c).cloned().unwrap_or_else(|| LaurentPoly::zero(p)))
            .collect()
    }
}

/// Rank of a family of sparse vectors over the fraction field.
pub fn sparse_rank(p: u32, vectors: &[SparseVec]) -> usize {
    let red = reduce(vectors);
    red.covered.len()
        + red
            .blocks
            .iter()
            .map(|b| {
                let rows: Vec<Vec<LaurentPoly>> = b.vectors.iter().map(|v| b.dense(v, p)).collect();
                PolyMatrix::from_rows(p, b.coords.len(), rows).unwrap().rank()
            })
            .sum::<usize>()
}

/// Whether `target` lies in the span of `vectors`.
pub fn sparse_in_span(p: u32, vectors: &[SparseVec], target: &SparseVec) -> bool {
    let red = reduce(vectors);
    let mut rest: SparseVec = target
        .iter()
        .filter(|(k, x)| !red.covered.contains(k) && !x.is_zero())
        .map(|(k, x)| (*k, x.clone()))
        .collect();
    for b in &red.blocks {
        if !b.coords.iter().any(|c| rest.contains_key(c)) {
            continue;
        }
        let t = b.dense(&rest, p);
        let cols: Vec<Vec<LaurentPoly>> = b.vectors.iter().map(|v| b.dense(v, p)).collect();
        if !solve_in_span(p, &cols, &t).unwrap().is_member() {
            return false;
        }
        for c in &b.coords {
            rest.remove(c);
        }
    }
    rest.is_empty()
}

/// Basis of `{w in F^dim : sum_i w_i s_i = 0 for every s in vectors}`.
///
/// Used both for annihilators of subspaces and, reading `vectors` as matrix
/// rows, for kernels.
pub fn orthogonal_complement(p: u32, dim: usize, vectors: &[SparseVec]) -> Vec<SparseVec> {
    let red = reduce(vectors);
    let in_block: BTreeSet<usize> = red.blocks.iter().flat_map(|b| b.coords.iter().copied()).collect();
    let mut out: Vec<SparseVec> = (0..dim)
        .filter(|c| !red.covered.contains(c) && !in_block.contains(c))
        .map(|c| SparseVec::from([(c, LaurentPoly::one(p))]))
        .collect();
    for b in &red.blocks {
        let rows: Vec<Vec<LaurentPoly>> = b.vectors.iter().map(|v| b.dense(v, p)).collect();
        let m = PolyMatrix::from_rows(p, b.coords.len(), rows).unwrap();
        for k in m.solution_space() {
            out.push(
                b.coords
                    .iter()
                    .zip(k)
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (*c, x))
                    .collect(),
            );
        }
    }
    out
}

/// Whether two families span the same subspace.
pub fn same_span(p: u32, a: &[SparseVec], b: &[SparseVec]) -> bool {
    let ra = sparse_rank(p, a);
    if ra != sparse_rank(p, b) {
        return false;
    }
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    sparse_rank(p, &both) == ra
}

pub fn dot(a: &SparseVec, b: &SparseVec, p: u32) -> LaurentPoly {
    a.iter()
        .filter_map(|(k, x)| b.get(k).map(|y| x * y))
        .fold(LaurentPoly::zero(p), |acc, t| &acc + &t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, LaurentPoly)]) -> SparseVec {
        entries.iter().cloned().collect()
    }

    #[test]
    fn unit_reduction_and_blocks() {
        let p = 5;
        let (u, v, w) = (LaurentPoly::u(p), LaurentPoly::v(p), LaurentPoly::w(p));
        let vecs = vec![
            sv(&[(0, u.clone())]),
            sv(&[(0, v.clone()), (1, w.clone()), (2, u.clone())]),
            sv(&[(3, u.clone()), (4, v.clone())]),
        ];
        assert_eq!(sparse_rank(p, &vecs), 3);
        assert!(sparse_in_span(p, &vecs, &sv(&[(0, w.clone())])));
        assert!(sparse_in_span(p, &vecs, &sv(&[(1, &w * &v), (2, &u * &v), (0, u.clone())])));
        assert!(!sparse_in_span(p, &vecs, &sv(&[(1, w.clone())])));
        assert!(!sparse_in_span(p, &vecs, &sv(&[(5, w.clone())])));

        let comp = orthogonal_complement(p, 6, &vecs);
        assert_eq!(comp.len(), 3);
        for c in &comp {
            for s in &vecs {
                assert!(dot(c, s, p).is_zero());
            }
        }
    }

    #[test]
    fn same_span_detects_difference() {
        let p = 3;
        let one = LaurentPoly::one(p);
        let a = vec![sv(&[(0, one.clone()), (1, one.clone())])];
        let b = vec![sv(&[(0, LaurentPoly::u(p)), (1, LaurentPoly::u(p))])];
        let c = vec![sv(&[(0, one.clone())])];
        assert!(same_span(p, &a, &b));
        assert!(!same_span(p, &a, &c));
    }
}
