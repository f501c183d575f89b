//! Closure operations of commutative algebra in characteristic `p`, computed
//! exactly in two families of rings:
//!
//! * semigroup rings `k[[t^S]]` of numerical semigroups, where ideals are
//!   exponent sets and every closure (tight, integral, `(TI:T)`) reduces to
//!   exponent combinatorics ([`semigroup`], [`ideal`], [`closure`],
//!   [`survey`]);
//! * the hypersurface `F_p(u,v,w)[[x,y,z]]/(ux^p+vy^p+wz^p)`, handled one
//!   graded component at a time with exact linear algebra over
//!   `F_p(u,v,w)` ([`laurent`], [`hypersurface`]).

pub mod closure;
pub mod error;
pub mod hypersurface;
pub mod ideal;
pub mod laurent;
pub mod semigroup;
pub mod survey;

pub use closure::{ClosureContext, ClosureOperation, ClosureRegistry, TBasicallyFull};
pub use error::{Error, Result};
pub use ideal::{test_ideal, SemigroupIdeal};
pub use semigroup::NumericalSemigroup;
