//! Independent computation of `dim_k Hom_S(I, S/J)` by linear algebra over
//! a prime field, used to cross-check the combinatorial tangent engine.

mod hom;
mod matrix;

pub use hom::{
    hom_dim, hom_dim_graded, taylor_presentation, two_var_length_identity_check,
    TaylorPresentation, DEFAULT_PRIME,
};
pub use matrix::{is_prime, FiniteFieldMatrix, MAX_ENTRIES};
