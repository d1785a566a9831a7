//! Exact truncated power series ("jets") and weighted-homogeneous bookkeeping.
//!
//! A [`Jet`] of order `N` stores the coefficients `c0..=cN`. Everything is
//! generic over [`Scalar`], implemented for `f64` and for arbitrary-precision
//! rationals ([`Rational`]); in rational mode no operation rounds.

mod error;
mod jet;
mod norm_eq;
mod scalar;
pub mod weighted;

pub use error::JetError;
pub use jet::Jet;
pub use norm_eq::{solve_norm_equation, Branch};
pub use scalar::{rat, Rational, Scalar};

/// Truncation order large enough for the `r^14` terms.
pub const DEFAULT_ORDER: usize = 16;
