//! Closure operations on semigroup-ring ideals behind a common trait, and a
//! registry that builds them by name.
//!
//! Registered names:
//!
//! | name       | operation                     |
//! |------------|-------------------------------|
//! | `integral` | integral closure              |
//! | `star`     | tight closure                 |
//! | `bf`       | basically full closure `(mI:m)` |
//! | `tau-bf`   | `(tau I : tau)` with tau the test ideal |
//! | `tbf`      | `(TI : T)` for a caller-supplied `T` |

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{test_ideal, SemigroupIdeal};
use crate::semigroup::NumericalSemigroup;

pub trait ClosureOperation: Send + Sync {
    fn name(&self) -> &'static str;

    fn close(&self, ideal: &SemigroupIdeal) -> Result<SemigroupIdeal>;
}

pub struct IntegralClosure;

impl ClosureOperation for IntegralClosure {
    fn name(&self) -> &'static str {
        "integral"
    }

    fn close(&self, ideal: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        ideal.integral_closure()
    }
}

pub struct TightClosure;

impl ClosureOperation for TightClosure {
    fn name(&self) -> &'static str {
        "star"
    }

    fn close(&self, ideal: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        ideal.tight_closure()
    }
}

/// `I -> (TI : T)`.
pub struct TBasicallyFull {
    name: &'static str,
    t: SemigroupIdeal,
}

impl TBasicallyFull {
    pub fn new(t: SemigroupIdeal) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::ColonByZero);
        }
        Ok(TBasicallyFull { name: "tbf", t })
    }

    pub fn basically_full(ring: &Arc<NumericalSemigroup>) -> Self {
        TBasicallyFull {
            name: "bf",
            t: SemigroupIdeal::maximal(ring),
        }
    }

    pub fn tau(ring: &Arc<NumericalSemigroup>) -> Self {
        TBasicallyFull {
            name: "tau-bf",
            t: test_ideal(ring),
        }
    }

    pub fn t(&self) -> &SemigroupIdeal {
        &self.t
    }
}

impl ClosureOperation for TBasicallyFull {
    fn name(&self) -> &'static str {
        self.name
    }

    fn close(&self, ideal: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        ideal.t_basically_full_closure(&self.t)
    }
}

/// What a factory may use to build its closure.
pub struct ClosureContext<'a> {
    pub ring: &'a Arc<NumericalSemigroup>,
    pub t: Option<&'a SemigroupIdeal>,
}

type Factory = fn(&ClosureContext<'_>) -> Result<Box<dyn ClosureOperation>>;

pub struct ClosureRegistry {
    factories: BTreeMap<&'static str, Factory>,
}

impl ClosureRegistry {
    pub fn empty() -> Self {
        ClosureRegistry {
            factories: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, name: &'static str, factory: Factory) {
        self.factories.insert(name, factory);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.factories.keys().copied()
    }

    pub fn build(&self, name: &str, ctx: &ClosureContext<'_>) -> Result<Box<dyn ClosureOperation>> {
        let factory = self
            .factories
            .get(name)
            .ok_or_else(|| Error::UnknownClosure(name.to_string()))?;
        factory(ctx)
    }

    /// Builds every registered closure. Closures that need a `T` are skipped
    /// when the context has none.
    pub fn build_all(&self, ctx: &ClosureContext<'_>) -> Result<Vec<Box<dyn ClosureOperation>>> {
        let mut out = Vec::new();
        for name in self.names() {
            match self.build(name, ctx) {
                Ok(op) => out.push(op),
                Err(Error::MissingTIdeal(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }
}

impl Default for ClosureRegistry {
    fn default() -> Self {
        let mut reg = ClosureRegistry::empty();
        reg.register("integral", |_| Ok(Box::new(IntegralClosure)));
        reg.register("star", |_| Ok(Box::new(TightClosure)));
        reg.register("bf", |ctx| Ok(Box::new(TBasicallyFull::basically_full(ctx.ring))));
        reg.register("tau-bf", |ctx| Ok(Box::new(TBasicallyFull::tau(ctx.ring))));
        reg.register("tbf", |ctx| {
            let t = ctx.t.ok_or(Error::MissingTIdeal("tbf"))?;
            Ok(Box::new(TBasicallyFull::new(t.clone())?))
        });
        reg
    }
}
