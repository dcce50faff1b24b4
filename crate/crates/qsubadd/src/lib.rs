//! # qsubadd
//!
//! Schatten q-norms and Tsallis q-entropies of finite-dimensional bipartite
//! quantum states, together with executable checks of the inequality chain
//! that links them:
//!
//! - the vector bound `Σ_{i,j} ((x_i + y_j − 1)_+)^q ≤ 1` for ℓ_q-normalized
//!   non-negative vectors ([`ineq::lemma_sum`]),
//! - its matrix form `‖(X⊗1 + 1⊗Y − 1)_+‖_q ≤ 1` for unit-q-norm PSD
//!   matrices ([`ineq::corollary_check`]),
//! - the norm inequality `1 + ‖ρ‖_q ≥ ‖Tr₁ρ‖_q + ‖Tr₂ρ‖_q` for q > 1, both
//!   checked directly and replayed constructively through Hölder-optimal
//!   dual witnesses and a completed positive part ([`ineq::theorem1_check`],
//!   [`ineq::witness_chain`]),
//! - the weak-majorization step `1 + ‖ρ‖_q^q ≥ ‖ρ₁‖_q^q + ‖ρ₂‖_q^q`
//!   ([`ineq::kyfan_power_check`]), and
//! - subadditivity of the q-entropies, `S_q(ρ) ≤ S_q(ρ₁) + S_q(ρ₂)` for
//!   q > 1 ([`ineq::theorem2_check`]).
//!
//! [`search`] adds seeded Monte Carlo campaigns over random density matrices
//! and counterexample hunting in the q < 1 regime, where neither
//! subadditivity nor superadditivity holds in general.
//!
//! All randomness is driven by explicit 64-bit seeds; identical seeds produce
//! bit-identical results, sequentially or in parallel.

#![forbid(unsafe_code)]

pub mod bipartite;
pub mod hermitian;
pub mod ineq;
pub mod qfunc;
pub mod search;
pub mod tol;

pub use bipartite::{
    derive_trial_seed, partial_trace_1, partial_trace_2, product_state, sample_density,
    sample_state, BipartiteState, DensityMatrix, SamplingMeasure,
};
pub use hermitian::{EigenSystem, HermitianMatrix, Spectrum};
pub use ineq::{
    corollary_check, convex_profile, kyfan_power_check, lemma_sum, theorem1_check,
    theorem2_check, weak_majorization_check, witness_chain, z_witness, InequalityId,
    MajorizationPair, Theorem1Mode, VerificationRecord, WitnessChain,
};
pub use qfunc::{dual_witness, lq_norm, q_entropy, schatten_norm, von_neumann, QExponent};
pub use search::{
    equality_probe, find_violation, run_campaign, run_campaign_with, CampaignConfig,
    CampaignSummary, Counterexample, Direction, EqualityHit, SearchOutcome, SummaryCell,
};

use thiserror::Error;

/// Errors for state validation, spectral computations, and inequality checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: symmetrization moved an entry by {residual:.3e} (tolerance {tol:.0e})")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("matrix dimension {dim} outside the supported range 1..={max}")]
    DimensionOutOfRange { dim: usize, max: usize },

    #[error("entry count {got} does not match a {dim}x{dim} matrix ({expected} required)")]
    EntryCount { dim: usize, got: usize, expected: usize },

    #[error("non-finite value encountered in {context}")]
    NonFinite { context: &'static str },

    #[error("eigensolver did not converge for a {dim}x{dim} matrix within {max_iter} iterations")]
    EigenFailure { dim: usize, max_iter: usize },

    #[error("matrix is not positive semi-definite: eigenvalue {eigenvalue:.6e} below -{tol:.0e}")]
    NotPsd { eigenvalue: f64, tol: f64 },

    #[error("matrix violates the unit-trace invariant: trace {trace:.12} (tolerance {tol:.0e})")]
    NotUnitTrace { trace: f64, tol: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix dimension {dim} is not the product of factor dimensions {d1} x {d2}")]
    FactorDimensions { dim: usize, d1: usize, d2: usize },

    #[error("entropic order must be a positive finite real, got {q}")]
    InvalidExponent { q: f64 },

    #[error("{what} requires q > 1, got q = {q}")]
    ExponentNotAboveOne { q: f64, what: &'static str },

    #[error("counterexample search requires 0 < q < 1, got q = {q}")]
    ExponentNotBelowOne { q: f64 },

    #[error("matrix power requires a positive finite exponent, got {value}")]
    NonPositiveExponent { value: f64 },

    #[error("negative entry {value:.6e} at index {index} in a non-negative vector")]
    NegativeEntry { index: usize, value: f64 },

    #[error("{side} is not l_q-normalized at q = {q}: norm {norm:.12} (tolerance {tol:.0e})")]
    NotNormalized {
        side: &'static str,
        q: f64,
        norm: f64,
        tol: f64,
    },

    #[error("the zero matrix is not a valid input here")]
    ZeroMatrix,

    #[error("spectrum must contain at least one value")]
    EmptySpectrum,

    #[error("profile argument a = {a} outside [0, 1]")]
    ProfileArgument { a: f64 },

    #[error("norm-completion bisection stalled after {iterations} iterations (residual {residual:.3e})")]
    Bisection { iterations: usize, residual: f64 },

    #[error("witness chain violated: {check} off by {residual:.3e}")]
    WitnessChain { check: &'static str, residual: f64 },

    #[error("invalid sampling measure: {reason}")]
    InvalidMeasure { reason: String },

    #[error("invalid campaign configuration: {reason}")]
    InvalidCampaign { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
pub(crate) mod testutil;
