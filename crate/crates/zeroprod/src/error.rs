//! Crate-wide error type.

use crate::algebra::IdealSide;

/// Errors surfaced by the library.
///
/// Dimension or modulus mismatches between values that are combined
/// arithmetically are programming errors and panic instead; the variants here
/// are the data-dependent failures a caller can meaningfully react to.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The requested modulus is not a prime number.
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    /// An element-exhaustive sweep would visit more than the allowed number
    /// of elements.
    #[error("element budget exceeded: sweep needs {needed} elements, budget is {budget}")]
    ElementBudget { needed: u128, budget: u64 },

    /// A subspace enumeration would visit more than the allowed number of
    /// subspaces.
    #[error("subspace budget exceeded: enumeration needs {count} subspaces, budget is {budget}")]
    SubspaceBudget { count: u128, budget: u64 },

    /// A classification hypothesis does not hold for the input algebra.
    #[error("hypothesis failed: {0}")]
    Hypothesis(&'static str),

    /// The Lie cross-check requires characteristic at least 5.
    #[error(
        "characteristic {0} is excluded: the Lie corollary requires characteristic not 2 or 3"
    )]
    Characteristic(u64),

    /// An argument was expected to be an ideal of the named side.
    #[error("argument is not a {0} ideal")]
    SideViolation(IdealSide),

    /// The two subspaces do not form an orthogonal pair.
    #[error("not an orthogonal pair: need nonzero R, L with L·R = 0 and R a right ideal")]
    NotOrthogonal,

    /// The argument is not a nonzero regular inner ideal.
    #[error("argument is not a nonzero regular inner ideal")]
    NotRegularInner,

    /// An algebra description failed structural validation.
    #[error("invalid algebra: {0}")]
    Validation(String),

    /// Malformed JSON input.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
