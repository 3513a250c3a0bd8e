//! The formal integration calculus and the integral operators built on it.
//!
//! Integrands are [`LaurentPoly`](crate::algebra::LaurentPoly) values (or
//! eps-series of them) over an extended variable set; an
//! [`IntegrationPlan`] eliminates each integration variable exactly once.

pub mod akop;
pub mod basis;
pub mod calculus;
pub mod kprop;
pub mod qop;

pub use akop::{a_k_integral_verify, AkVerification};
pub use basis::{
    a_k_basis_apply, q_basis_apply, separating_operator_apply,
    separating_operator_apply_stepwise,
};
pub use calculus::{
    dlog_integral, dlog_integral_eps, p_functional, substitute_monomial_eps, w_integral,
    IntegrationPlan, IntegrationStep,
};
pub use kprop::{kprop_inductive_verify, kprop_limit_verify, KpropVerification};
pub use qop::{q_operator_full_apply, q_operator_integral_apply, q_reduction_expected, QVars};
