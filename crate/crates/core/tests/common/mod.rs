#![allow(dead_code)]

pub mod minors;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tbf_core::laurent::LaurentPoly;

/// Sparse small entry: zero with probability 0.4, else one or two terms
/// with exponents in `[-2, 2]`.
pub fn random_entry(rng: &mut ChaCha8Rng, p: u32) -> LaurentPoly {
    if rng.gen_bool(0.4) {
        return LaurentPoly::zero(p);
    }
    let n = rng.gen_range(1..=2);
    LaurentPoly::from_terms(
        p,
        (0..n).map(|_| {
            let e = [rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2)];
            (e, rng.gen_range(1..p as i64))
        }),
    )
}

pub fn random_unit(rng: &mut ChaCha8Rng, p: u32) -> LaurentPoly {
    let e = [rng.gen_range(-1..=1), rng.gen_range(-1..=1), rng.gen_range(-1..=1)];
    LaurentPoly::monomial(p, rng.gen_range(1..p as i64), e)
}

/// Random `rows x cols` matrix; with probability one half the last row is
/// replaced by a combination of two earlier rows with unit coefficients, so
/// rank deficiency is common.
pub fn random_matrix(rng: &mut ChaCha8Rng, p: u32, rows: usize, cols: usize) -> Vec<Vec<LaurentPoly>> {
    let mut m: Vec<Vec<LaurentPoly>> = (0..rows)
        .map(|_| (0..cols).map(|_| random_entry(rng, p)).collect())
        .collect();
    if rows >= 3 && rng.gen_bool(0.5) {
        let (a, b) = (random_unit(rng, p), random_unit(rng, p));
        m[rows - 1] = (0..cols).map(|j| &(&a * &m[0][j]) + &(&b * &m[1][j])).collect();
    }
    m
}

/// Target vector for span tests: a unit combination of two columns half the
/// time, otherwise random.
pub fn random_target(rng: &mut ChaCha8Rng, p: u32, m: &[Vec<LaurentPoly>]) -> Vec<LaurentPoly> {
    let cols = m[0].len();
    if rng.gen_bool(0.5) {
        let (i, j) = (rng.gen_range(0..cols), rng.gen_range(0..cols));
        let (a, b) = (random_unit(rng, p), random_unit(rng, p));
        m.iter().map(|r| &(&a * &r[i]) + &(&b * &r[j])).collect()
    } else {
        (0..m.len()).map(|_| random_entry(rng, p)).collect()
    }
}
