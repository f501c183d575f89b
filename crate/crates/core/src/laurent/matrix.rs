//! Dense matrices over `F_p[u^±1, v^±1, w^±1]` and fraction-free
//! (Bareiss) elimination. Rank, kernels and span membership are decided
//! over the fraction field without ever forming a fraction.

use std::fmt;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            p,
            rows,
            cols,
            data: vec![LaurentPoly::zero(p); rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(p));
        }
        m
    }

    /// `cols` is needed to give shape to an empty row list.
    pub fn from_rows(p: u32, cols: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for x in row {
                if x.characteristic() != p {
                    return Err(Error::CharacteristicMismatch(p, x.characteristic()));
                }
                data.push(x);
            }
        }
        Ok(PolyMatrix {
            p,
            rows: n,
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(p: u32, dim: usize, columns: &[Vec<LaurentPoly>]) -> Result<Self> {
        let mut m = Self::zeros(p, dim, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: LaurentPoly) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn mul_vec(&self, x: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(LaurentPoly::zero(self.p), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Fraction-free row echelon form.
    ///
    /// Columns are scanned left to right; the pivot is the topmost nonzero
    /// entry at or below the current row. Each update
    /// `a_ij <- (piv * a_ij - a_ic * a_rj) / prev_piv` divides exactly.
    pub fn echelon(&self) -> Echelon {
        let mut a = self.clone();
        let mut prev = LaurentPoly::one(self.p);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(i) = (r..self.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(i, r);
            let piv = a.get(r, c).clone();
            for i in r + 1..self.rows {
                let lead = a.get(i, c).clone();
                for j in c + 1..self.cols {
                    let mut x = &piv * a.get(i, j);
                    if !lead.is_zero() {
                        x = &x - &(&lead * a.get(r, j));
                    }
                    let x = x
                        .exact_div(&prev)
                        .expect("fraction-free elimination: inexact division");
                    a.set(i, j, x);
                }
                a.set(i, c, LaurentPoly::zero(self.p));
            }
            prev = piv;
            pivots.push((r, c));
            r += 1;
        }
        Echelon { matrix: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of `{x : A x = 0}` over the fraction field, with polynomial
    /// entries. Its size is `cols - rank`.
    pub fn solution_space(&self) -> Vec<Vec<LaurentPoly>> {
        let ech = self.echelon();
        ech.free_columns()
            .into_iter()
            .map(|f| ech.back_substitute(f).0)
            .collect()
    }
}

pub struct Echelon {
    pub matrix: PolyMatrix,
    /// `(row, column)` of each pivot, in order.
    pub pivots: Vec<(usize, usize)>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot_column(&self, c: usize) -> bool {
        self.pivots.iter().any(|&(_, pc)| pc == c)
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.matrix.cols)
            .filter(|&c| !self.is_pivot_column(c))
            .collect()
    }

    /// Kernel vector with free column `f` set and other free columns zero,
    /// returned with its denominator.
    ///
    /// The free coordinate is set to the last pivot `D`, which is the
    /// determinant of the pivot minor; by Cramer's rule every other
    /// coordinate is then a polynomial and each back-substitution step
    /// divides exactly. Should a division fail, the vector is rescaled by
    /// the pivot instead.
    fn back_substitute(&self, f: usize) -> (Vec<LaurentPoly>, LaurentPoly) {
        let p = self.matrix.p;
        let e = &self.matrix;
        let mut x = vec![LaurentPoly::zero(p); e.cols];
        let mut denom = match self.pivots.last() {
            Some(&(r, c)) => e.get(r, c).clone(),
            None => LaurentPoly::one(p),
        };
        x[f] = denom.clone();
        for &(r, c) in self.pivots.iter().rev() {
            let s = (c + 1..e.cols)
                .filter(|&j| !x[j].is_zero() && !e.get(r, j).is_zero())
                .fold(LaurentPoly::zero(p), |acc, j| &acc + &(e.get(r, j) * &x[j]));
            if s.is_zero() {
                continue;
            }
            let piv = e.get(r, c);
            match s.exact_div(piv) {
                Some(q) => x[c] = -q,
                None => {
                    for xi in x.iter_mut().filter(|xi| !xi.is_zero()) {
                        *xi = &*xi * piv;
                    }
                    denom = &denom * piv;
                    x[c] = -s;
                }
            }
        }
        (x, denom)
    }
}

/// Witness that `sum coefficients[i] * vectors[i] = denominator * target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub coefficients: Vec<LaurentPoly>,
    pub denominator: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanVerdict {
    InSpan(Certificate),
    NotInSpan,
}

impl SpanVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, SpanVerdict::InSpan(_))
    }
}

/// Decides whether `target` lies in the span of `vectors` over the fraction
/// field, with a certificate when it does.
pub fn solve_in_span(
    p: u32,
    vectors: &[Vec<LaurentPoly>],
    target: &[LaurentPoly],
) -> Result<SpanVerdict> {
    let dim = target.len();
    let mut cols = vectors.to_vec();
    cols.push(target.to_vec());
    let m = PolyMatrix::from_columns(p, dim, &cols)?;
    let n = vectors.len();
    let ech = m.echelon();
    if ech.is_pivot_column(n) {
        return Ok(SpanVerdict::NotInSpan);
    }
    // kernel vector with last coordinate set: V x + d t = 0
    let (x, _) = ech.back_substitute(n);
    let mut denominator = x[n].clone();
    let mut coefficients: Vec<LaurentPoly> = x[..n].iter().map(|c| -c).collect();
    if !denominator.is_one() {
        if let Some(reduced) = coefficients
            .iter()
            .map(|c| c.exact_div(&denominator))
            .collect::<Option<Vec<_>>>()
        {
            coefficients = reduced;
            denominator = LaurentPoly::one(p);
        }
    }
    Ok(SpanVerdict::InSpan(Certificate {
        coefficients,
        denominator,
    }))
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
