use thiserror::Error;

use crate::spectrum::QuantumState;

/// Errors produced by the solvers and evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument `{name}` out of domain: {value} ({reason})")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("potential has no interior minimum (log argument {log_argument} <= 1)")]
    NoInteriorMinimum { log_argument: f64 },

    #[error("coefficient system is singular (determinant {determinant:e})")]
    DegenerateSystem { determinant: f64 },

    #[error("state {state} is not bound (epsilon' = {epsilon_prime}, critical coupling A_c = {critical_coupling})")]
    Unbound {
        state: QuantumState,
        epsilon_prime: f64,
        critical_coupling: f64,
    },

    #[error("grid must be non-empty, positive and strictly increasing")]
    InvalidGrid,

    #[error("quadrature did not converge: estimate {estimate:e}, error {error_estimate:e} after {intervals} intervals")]
    Quadrature {
        estimate: f64,
        error_estimate: f64,
        intervals: usize,
    },

    #[error("numeric overflow: {0}")]
    Overflow(&'static str),

    #[error("energy bracket [{low}, {high}] does not contain the level with {target} nodes (counts {count_low}, {count_high})")]
    NoEigenvalueInBracket {
        low: f64,
        high: f64,
        target: u32,
        count_low: u32,
        count_high: u32,
    },

    #[error("eigenvalue search did not converge after {iterations} iterations (bracket width {width:e})")]
    NotConverged { iterations: usize, width: f64 },

    #[error("invalid solver configuration: {0}")]
    Config(&'static str),

    #[error("unknown molecule `{0}`")]
    UnknownMolecule(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid state label `{0}`")]
    StateLabel(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain {
            name,
            value,
            reason: "must be finite",
        })
    }
}

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain {
            name,
            value,
            reason: "must be finite and > 0",
        })
    }
}
