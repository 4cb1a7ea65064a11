//! Exact-arithmetic computations with finite-dimensional Lie and ℤ₂-graded
//! Lie algebras presented by structure constants.
//!
//! Everything is computed over ℚ with arbitrary-precision rationals, so every
//! result is exact and bit-reproducible. The main entry points:
//!
//! * [`algebra::StructureTable`] — a (graded) algebra given by its structure
//!   constants, with axiom validation, products, `ad` operators, centers and
//!   a set of builtin algebras (`sl(k)`, `gl(k)`, `o(k)`, abelian, CCR, CAR).
//! * [`derivations`] — the (graded) derivation algebra as the nullspace of
//!   Leibniz constraints, inner derivations, and closed-form derivation
//!   families of the CCR/CAR algebras.
//! * [`diffops`] — the order filtration of differential operators generated
//!   by compositions of first-order ones, with the bracket/composition order
//!   checks.
//! * [`modules`] — finite-dimensional representations and the corresponding
//!   operator filtration on module endomorphisms.
//! * [`cohomology`] — Chevalley–Eilenberg cochains over the derivation
//!   algebra, coboundary matrices, cohomology dimensions, and the graded
//!   degree-0/1 coboundaries.
//! * [`realizations`] — the CCR algebra acting on polynomials by `d/dx` and
//!   `x·`, the CAR algebra acting on the rank-one Grassmann algebra, and the
//!   first-order intertwining identities for both.
//! * [`acceptance`] — the self-check suite behind `liediff verify-paper`.
//!
//! With the default `parallel` feature, independent inner loops (composition
//! closures, coboundary column assembly, batch residual checks) run on rayon;
//! results are identical to the sequential fallback.

pub mod acceptance;
pub mod algebra;
pub mod cohomology;
pub mod derivations;
pub mod diffops;
pub mod error;
pub mod linalg;
pub mod modules;
pub(crate) mod par;
pub mod poly;
pub mod realizations;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
