//! Exact rational linear algebra: ranks, collinearity, strict separation by
//! functionals and positive-combination witnesses.
//!
//! Everything here is generic over [`Scalar`](crate::scalar::Scalar) and
//! pure. Feasibility questions are answered by a phase-one simplex with
//! Bland's rule, and every answer comes with a certificate that can be
//! re-checked by evaluation.

mod gauss;
mod separate;
mod simplex;
mod vector;

pub use gauss::{are_collinear, int_collinear, int_rank, solve_independent, span_rank};
pub use separate::{
    generic_separator, positive_combination_witness, separate, strict_separator, Combination,
    Separation,
};
pub use simplex::feasible_point;
pub use vector::{sign, Vector};
