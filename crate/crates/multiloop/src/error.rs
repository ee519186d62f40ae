//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong across the crate.
///
/// Operations fail loudly and exactly: there is no approximation fallback, so
/// an error always means the requested object does not exist, is outside the
/// supported family, or the configured search/size bounds were exhausted.
#[derive(Debug, Clone, Error)]
pub enum Error {
    // ---- scalars ----
    #[error("order {small} does not divide {big}; cannot embed the smaller cyclotomic field")]
    NotDivisible { small: u64, big: u64 },
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("scalar of order {order} has {got} coordinates, expected {want}")]
    BadCoordinateLength { order: u64, got: usize, want: usize },
    #[error("eigenvalue lies outside the cyclotomic field of order {order} (or outside the rational-times-root-of-unity family searched)")]
    FieldTooSmall { order: u64 },

    // ---- linear algebra ----
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("operator is not diagonalizable over the working field: eigenspace dimensions sum to {found} of {dim}")]
    NotDiagonalizable { found: usize, dim: usize },

    // ---- Lie algebras ----
    #[error("structure constants are not antisymmetric at basis pair ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("Jacobi identity fails at basis triple ({i}, {j}, {k})")]
    JacobiFails { i: usize, j: usize, k: usize },
    #[error("unsupported construction: {0}")]
    Unsupported(String),

    // ---- automorphisms ----
    #[error("map does not preserve the bracket at basis pair ({i}, {j})")]
    NotBracketPreserving { i: usize, j: usize },
    #[error("order of automorphism exceeds the bound {cap}")]
    OrderBoundExceeded { cap: u64 },
    #[error("automorphisms at positions {i} and {j} do not commute")]
    NotCommuting { i: usize, j: usize },
    #[error("automorphism at position {i} does not satisfy sigma^m = id for m = {m}")]
    PeriodMismatch { i: usize, m: u64 },
    #[error("integer matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: i128 },
    #[error("element is not ad-nilpotent; exponential does not terminate")]
    NotNilpotent,

    // ---- gradings and root data ----
    #[error("element does not lie in the declared graded component")]
    GradeViolation,
    #[error("no Cartan subalgebra found after {retries} seeded attempts")]
    CartanSearchFailed { retries: u32 },
    #[error("root has isotropic length: (alpha|alpha) = 0")]
    IsotropicRoot,
    #[error("restriction of the invariant form to the Cartan subalgebra is degenerate")]
    DegenerateCartanForm,
    #[error("graded component for the requested (root, class) pair is zero")]
    EmptyComponent,
    #[error("pairing <beta, h_alpha> is not an integer")]
    NonIntegralPairing,
    #[error("root system does not match any supported type")]
    UnclassifiedType,

    // ---- torus / toralization ----
    #[error("fixed-point subalgebra is zero; no toral structure exists")]
    ZeroFixedAlgebra,
    #[error("search exhausted within bound {bound}: {what}")]
    SearchExhausted { what: String, bound: i64 },

    // ---- certificates ----
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("algebras have mismatched shapes: {0}")]
    DomainMismatch(String),

    // ---- EALA frames ----
    #[error("frame precondition violated ({axiom}): {detail}")]
    FrameViolation { axiom: String, detail: String },
    #[error("cocycle table is invalid: {0}")]
    CocycleInvalid(String),
    #[error("degree-zero evaluation map is not injective; grading axioms cannot hold")]
    EvNotInjective,

    // ---- input handling ----
    #[error("parse error: {0}")]
    Parse(String),
}
