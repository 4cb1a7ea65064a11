//! Exact rational scalars, dense matrices and subspaces over ℚ.
//!
//! This is the kernel every other module builds on: rank, nullspace and
//! solving by exact Gaussian elimination with deterministic pivoting (first
//! nonzero entry in column order), and subspace arithmetic in canonical
//! reduced echelon form so that equal subspaces have identical stored bases.

mod matrix;
mod rational;
mod subspace;

pub use matrix::Matrix;
pub use rational::Rational;
pub use subspace::Subspace;
