//! Desk-scale experiments on shadowing variants of discrete dynamical systems.
//!
//! The crate provides:
//!
//! - [`density`]: exact arithmetic on finite index sets standing in for
//!   subsets of the naturals (densities, syndeticity, Markov-type bounds);
//! - [`spaces`]: a catalog of concrete compact metric systems (interval
//!   isometry, doubling circle, full shifts, a two-circle swap-and-double
//!   map) plus product / power / conjugate combinators;
//! - [`pseudo_orbit`]: generators for approximate orbits, from plain
//!   delta-pseudo orbits to ergodic chain concatenations and the
//!   interleaving constructions used by power and proximality arguments;
//! - [`verify`]: tracing-point verifiers for every shadowing criterion
//!   (pointwise, average, mean-ergodic, lower-density) and net-based
//!   tracer search with constructive accelerators;
//! - [`dynprops`]: finite-resolution probes for transitivity, chain
//!   transitivity via transition graphs, syndetic return times, and
//!   proximal / asymptotic pair classification.
//!
//! All limit notions (lim sup, lim inf, Cesàro means) are replaced by
//! declared finite-horizon estimators; every randomized generator is
//! seeded and replayable bit for bit.

pub mod density;
pub mod dynprops;
pub mod exact;
pub mod pseudo_orbit;
pub mod spaces;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A value fell outside its documented range.
    #[error("out of range: {0}")]
    Range(String),

    /// A parameter violated an operation's precondition.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Input violated a metric-space constraint (e.g. error above diameter).
    #[error("domain violation: {0}")]
    Domain(String),

    /// A discretization would exceed the declared budget.
    #[error("resource budget exceeded: {what} needs {required} points, budget {budget}")]
    Resource {
        what: &'static str,
        required: usize,
        budget: usize,
    },

    /// A construction-time validation check failed.
    #[error("construction check failed: {0}")]
    Construction(String),

    /// Malformed serialized data.
    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
