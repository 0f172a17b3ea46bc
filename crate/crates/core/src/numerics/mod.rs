//! Shared numerical routines: error functions, adaptive quadrature,
//! bracketed root finding and ordinary least squares.
//!
//! Everything here is a pure function of its arguments and safe to call
//! concurrently.

mod erf;
mod fit;
mod quad;
mod root;

pub use erf::{erf, erfc_scaled};
pub use fit::{fit_line, LineFit};
pub use quad::{quad_adaptive, MAX_SUBDIVISION_DEPTH};
pub use root::{find_root_monotone, Interval};

use thiserror::Error;

/// Errors from the numerical routines in this module.
#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid interval: lo = {lo}, hi = {hi} (need lo < hi, both finite)")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error(
        "adaptive quadrature failed to converge on [{a}, {b}] within depth {max_depth}"
    )]
    QuadratureNonConvergence { a: f64, b: f64, max_depth: u32 },

    #[error("no sign change over bracket: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange { f_lo: f64, f_hi: f64 },

    #[error("degenerate least-squares fit: {0}")]
    DegenerateFit(String),
}
