//! Exact arithmetic in `F_p[u^±1, v^±1, w^±1]` and linear algebra over its
//! fraction field.

mod matrix;
mod poly;
pub mod sparse;

pub use matrix::{solve_in_span, Certificate, Echelon, PolyMatrix, SpanVerdict};
pub use poly::{is_prime, Exp, LaurentPoly};
