//! Determinantal rank: the largest `k` with a nonzero `k x k` minor.
//!
//! Minors are expanded along rows with memoisation over column subsets, so
//! only ring multiplication and addition of `LaurentPoly` are used. No
//! elimination, division or pivoting is involved, which keeps this oracle
//! independent of the solver under test.

use std::collections::HashMap;

use tbf_core::laurent::LaurentPoly;

/// All `k x k` minors on the given rows (`k = rows.len()`), keyed by column
/// bitmask; stops early once a nonzero minor is seen.
fn any_nonzero_minor(a: &[Vec<LaurentPoly>], rows: &[usize], cols: usize) -> bool {
    let p = a[0][0].characteristic();
    let mut level: HashMap<u32, LaurentPoly> = HashMap::from([(0, LaurentPoly::one(p))]);
    for (i, &r) in rows.iter().enumerate() {
        let mut next: HashMap<u32, LaurentPoly> = HashMap::new();
        for (&mask, det) in &level {
            if det.is_zero() {
                continue;
            }
            for c in (0..cols).filter(|c| mask & (1 << c) == 0) {
                if a[r][c].is_zero() {
                    continue;
                }
                let grown = mask | (1 << c);
                // sign of c's position within the grown column set
                let pos = (grown & ((1 << c) - 1)).count_ones();
                let mut term = &a[r][c] * det;
                if (i as u32 + pos) % 2 == 1 {
                    term = -&term;
                }
                let e = next.entry(grown).or_insert_with(|| LaurentPoly::zero(p));
                *e = &*e + &term;
            }
        }
        level = next;
    }
    level.values().any(|d| !d.is_zero())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

pub fn rank(a: &[Vec<LaurentPoly>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    for k in (1..=rows.min(cols)).rev() {
        if subsets(rows, k).iter().any(|rs| any_nonzero_minor(a, rs, cols)) {
            return k;
        }
    }
    0
}

/// Whether `target` is a combination of the columns of `a`.
pub fn in_column_span(a: &[Vec<LaurentPoly>], target: &[LaurentPoly]) -> bool {
    let augmented: Vec<Vec<LaurentPoly>> = a
        .iter()
        .zip(target)
        .map(|(r, t)| {
            let mut r = r.clone();
            r.push(t.clone());
            r
        })
        .collect();
    rank(&augmented) == rank(a)
}

pub fn kernel_dimension(a: &[Vec<LaurentPoly>]) -> usize {
    a.first().map_or(0, |r| r.len()) - rank(a)
}
