//! Exact computer algebra for symplectic characters and their separation of
//! variables.
//!
//! The crate is organised in four layers:
//!
//! - [`algebra`]: the arithmetic substrate — big rationals, multivariate
//!   Laurent polynomials with exact rational coefficients, truncated
//!   epsilon-series, univariate rational functions, and determinants of
//!   polynomial matrices.
//! - [`characters`]: partitions, the antisymmetric determinants `a_mu` and
//!   their truncations, the symplectic character `chi_lambda = a_mu / a_delta`,
//!   the `phi` and `q` polynomials, product-formula identities, and expansion
//!   of Weyl-invariant Laurent polynomials in the character basis.
//! - [`operators`]: the differential-operator layer — Euler operators, the
//!   commuting Hamiltonians and their eigenvalues, the operator determinants
//!   realising the inverse separating operators, the annihilator of `q`, and
//!   factorised Hamiltonians.
//! - [`integral`]: the formal integration calculus (P-functional, dlog
//!   integrals, delta kernels, w-integral) together with the executable
//!   verification of the Q-operator and A-operator identities and the
//!   basis-level separation operators.
//!
//! [`verify`] drives sweep-style verification of every identity and is shared
//! by the CLI and the acceptance test suite.
//!
//! All values are immutable after construction and every operation is pure,
//! so everything here is safe to share across threads.

pub mod algebra;
pub mod characters;
pub mod integral;
pub mod operators;
pub mod verify;

/// Errors surfaced by operations whose failure carries meaning: a failed
/// exact division signals a broken identity upstream, a constant term in a
/// formal integrand signals a violated exponent assumption, and so on.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable sets differ: [{0}] vs [{1}]")]
    VarSetMismatch(String, String),
    #[error("not divisible: exact division left a nonzero remainder")]
    NotDivisible,
    #[error("substitution image must be a single term with nonzero coefficient")]
    NotMonomial,
    #[error("{op}: constant term in `{var}` (coefficient of {var}^0 must vanish)")]
    ConstantTerm { op: &'static str, var: String },
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("weights must sum to 1, got {0}")]
    BadWeights(String),
    #[error("input is not invariant under the hyperoctahedral action")]
    NotWeylInvariant,
    #[error("character-basis reconstruction does not reproduce the input")]
    ReconstructionMismatch,
    #[error("invalid {what}: {why}")]
    Invalid { what: &'static str, why: String },
}

pub type Result<T> = std::result::Result<T, Error>;
