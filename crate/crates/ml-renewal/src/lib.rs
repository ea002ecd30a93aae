//! Renewal processes driven by Mittag-Leffler waiting times.
//!
//! This crate implements the distribution theory of the fractional renewal
//! process `N̂_α(t)` (the time-fractional Poisson process observed at every
//! second event), together with
//!
//! * numerically robust Mittag-Leffler / Wright / Bessel evaluation
//!   ([`mlfunc`]),
//! * closed-form pmf/pgf/moments/interarrival laws ([`analytics`]),
//! * exact-law samplers for stable, inverse-stable, gamma, tempered-stable
//!   and inverse-Gaussian subordinators ([`samplers`]),
//! * Monte Carlo simulation engines with reproducible parallel streams
//!   ([`engine`]),
//! * the compound process and ruin theory built on it ([`risk`]),
//! * analytic laws of the process under Lévy and inverse-subordinator time
//!   changes ([`timechange`]).
//!
//! Every analytic formula is cross-validated against simulation; see the
//! `examples/` directory for runnable demonstrations and `tests/acceptance.rs`
//! for the verification suite.

pub mod analytics;
pub mod cli;
mod dd;
pub mod engine;
pub mod gamma;
pub mod mlfunc;
pub mod quad;
pub mod risk;
pub mod samplers;
pub mod timechange;

use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Neither the series nor the asymptotic regime reached the target
    /// tolerance. Reported, never silently degraded.
    #[error("accuracy target not met: {0}")]
    Accuracy(String),

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature tolerance not met: {0}")]
    Quadrature(String),

    /// A moment series tripped the alternating-growth guard.
    #[error("series divergence guard tripped: {0}")]
    SeriesDivergence(String),

    /// A rejection sampler exceeded its proposal budget.
    #[error("rejection budget exceeded: {0}")]
    RejectionBudget(String),

    /// A path-based computation ran past its horizon.
    #[error("horizon exceeded: {0}")]
    Horizon(String),

    /// Invalid run configuration (CLI or config file).
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
