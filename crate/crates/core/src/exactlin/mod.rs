//! Exact dense linear algebra over a [`Field`].

mod field;
mod matrix;

pub use field::{Field, PrimeField, DEFAULT_PRIME};
pub use matrix::{nullspace_basis, nullspace_with_free_columns, rank, rref, solve, Matrix};
