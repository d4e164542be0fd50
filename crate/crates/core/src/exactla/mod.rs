//! Exact rational scalars, dense matrices, linear solving and an exact
//! simplex for strict-positivity feasibility.

mod matrix;
mod rational;
mod simplex;
mod solve;

pub use matrix::{dot, ints, vec_add, vec_scale, vec_sub, RatMatrix};
pub use rational::{
    format_rational, int, is_positive, one, parse_rational, pow_i, rat, zero, Rational,
};
pub use simplex::{
    maximize, positive_solution, positivity_lp, LpOutcome, PositivityLp, PositivityStatus,
};
pub use solve::{in_span, nullspace, rref, solve_affine, AffineSolutionSet, SparseEchelon};
