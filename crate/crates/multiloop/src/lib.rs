//! Exact computational machinery for multiloop Lie algebras.
//!
//! Everything here works over cyclotomic number fields with arbitrary-precision
//! rational coefficients; there is no floating point anywhere. The crate builds
//! up in layers:
//!
//! * [`cyclo`] — scalars: roots of unity, cyclotomic fields, exact field ops.
//! * [`linalg`] — exact matrices, kernels, characteristic polynomials, and
//!   integer Smith normal form.
//! * [`lie`] — finite-dimensional Lie algebras given by structure constants,
//!   with constructors for the classical split simple algebras.
//! * [`aut`] — finite-order automorphisms and tuples of commuting ones.
//! * [`roots`] — Cartan subalgebras and root decompositions relative to a
//!   fixed-point Cartan, with classification of the (possibly non-reduced)
//!   root system.
//! * [`mloop`] — the multiloop algebra of a commuting tuple: eigenspace
//!   gradings, supports, central grading lattice, admissible base changes.
//! * [`torus`] — the Lie-torus conditions and the constructive twist that
//!   repairs a multiloop algebra into a Lie torus.
//! * [`certify`] — support-isomorphism certificates: verification, the
//!   regrade chain they induce, and a bounded search.
//! * [`eala`] — extended affine Lie algebra frames built on top of a
//!   multiloop core: derivations, the graded dual, the 2-cocycle bracket,
//!   and window-checked axioms.

pub mod aut;
pub mod certify;
pub mod cyclo;
pub mod eala;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod mloop;
pub mod roots;
pub mod torus;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
