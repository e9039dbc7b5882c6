//! From eigenvalue to guarantee: each published spectral condition as a
//! checkable rule, the exact case analysis behind the refined cut-edge
//! threshold, and a per-graph certificate engine that evaluates every
//! rule against exact connectivity.

mod certify;
mod rho;
mod rules;
mod thm32;

pub use certify::{certify, Certificate, RuleOutcome, RuleStatus};
pub use rho::{
    case3_quotient_lambda2, check_case, check_case_outcome, rho, rho_exceeds, rho_prime,
    theorem42_q, theorem42_q_prime, CaseId, CaseOutcome,
};
pub use rules::{
    evaluate_bound, pi, BoundRule, Comparison, ConnectivityKind, GraphClass, RuleId, Threshold,
    FIRING_TOL,
};
pub use thm32::{lambda2_at_optimal_m2, optimal_m2, thm32_quotient_lambda2};

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum BoundsError {
    /// The rule's applicability predicate rejects these parameters.
    #[error("rule {rule} is not applicable: {reason}")]
    Inapplicable { rule: RuleId, reason: String },
    /// A quotient-formula helper was called outside its domain.
    #[error("invalid parameters for {what}: {reason}")]
    InvalidParameters { what: &'static str, reason: String },
    #[error("unknown rule id `{0}`")]
    UnknownRule(String),
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
}
