//! Special-functions library around Pochhammer-symbol identities, Jacobi
//! polynomials in two normalizations, orthogonal expansions of generalized
//! hypergeometric functions, and closed-form Beta-weighted integrals.
//!
//! Two evaluation regimes coexist and are kept strictly apart:
//!
//! - exact: arbitrary-precision rationals, zero-tolerance verdicts, used for
//!   every finite identity (`exact`, `registry`, `jacobi`, most of `beta`);
//! - floating: f64 with explicit truncation-error bounds, used for infinite
//!   series and gamma-ratio closed forms (`hypergeom`, `expansions`, the
//!   integral identities in `beta`).
//!
//! The `verify` module packages both regimes into deterministic, seeded
//! check suites consumed by the `hyperjacobi` command-line tool.

pub mod error;
pub mod exact;
pub mod gamma;
pub mod hypergeom;
pub mod beta;
pub mod jacobi;

pub use error::{Error, Result};
pub use exact::Rational;
pub use hypergeom::{PfqSpec, SeriesValue};
