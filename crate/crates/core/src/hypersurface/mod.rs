//! Exact graded computation in `R_p = F_p(u,v,w)[[x,y,z]]/(ux^p+vy^p+wz^p)`.

mod element;
mod graded;
mod ring;
mod verify;

pub use element::{HyperElement, Mono};
pub use graded::{
    colon_component, colon_first_difference, first_difference, frobenius_closure_member,
    frobenius_power_gens, ideal_component, ideals_equal_up_to, is_member, same_component,
    GradedComponentBasis,
};
pub use ring::{all_monomials, binom_mod, HyperRing, Var};
pub use verify::{
    check_colon_chain, check_star_equals_colon, check_star_set, monomial_divisible,
    star_ytzt_closed_form, star_ytzt_member, verify_counterexample, verify_frobenius_closure,
    verify_ytzt_closure, SubCheck,
    VerificationReport,
};
