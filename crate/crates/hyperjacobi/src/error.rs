//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A gamma-function ratio or Pochhammer denominator hit a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// Parameters fall outside the guarded domain of an operation.
    #[error("domain violation: {0}")]
    DomainViolation(String),

    /// The requested identity id is not in the catalog.
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),

    /// The requested order n is outside the entry's [min_n, max_n] range.
    #[error("order {n} out of range [{min_n}, {max_n}] for {id}")]
    OrderOutOfRange { id: String, n: u32, min_n: u32, max_n: u32 },

    /// Series diverges for the requested parameters/argument.
    #[error("divergent series: {0}")]
    Divergent(String),

    /// The tail criterion was not reached within the term budget.
    #[error("no convergence within {max_terms} terms (last bound {last_bound:e})")]
    NoConvergence { max_terms: usize, last_bound: f64 },

    /// Index out of bounds, e.g. a coefficient index m > n.
    #[error("index error: {0}")]
    Index(String),

    /// The rejection sampler could not find parameters passing the guard.
    #[error("unsatisfiable domain for {id} after {rejections} rejections")]
    UnsatisfiableDomain { id: String, rejections: u64 },

    /// CLI / input parse failure.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
