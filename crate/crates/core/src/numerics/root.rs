//! Bracketed root finding for monotone functions.

use super::NumericsError;

/// A nonempty open interval used as a root bracket.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self, NumericsError> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(NumericsError::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

const MAX_ITER: u32 = 2000;

/// Find the root of a continuous, strictly monotone `f` inside `bracket`.
///
/// Hybrid scheme: a secant step is tried each iteration, but a bisection is
/// forced whenever the bracket has not halved over the two preceding
/// iterations, so convergence is guaranteed. Returns the bracket midpoint
/// once its width is at most `tol`.
pub fn find_root_monotone<F>(f: F, bracket: Interval, tol: f64) -> Result<f64, NumericsError>
where
    F: Fn(f64) -> f64,
{
    if !(tol > 0.0) {
        return Err(NumericsError::Domain(format!(
            "root tolerance must be positive, got {tol}"
        )));
    }
    let mut lo = bracket.lo();
    let mut hi = bracket.hi();
    let mut f_lo = f(lo);
    let mut f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(NumericsError::NoSignChange { f_lo, f_hi });
    }

    let mut width_two_ago = f64::INFINITY;
    for _ in 0..MAX_ITER {
        let width = hi - lo;
        if width <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let x = {
            // Secant (false position) candidate, rejected when it crowds an
            // endpoint or when progress has stalled.
            let s = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
            let margin = 1e-3 * width;
            if width > 0.5 * width_two_ago || !(s > lo + margin && s < hi - margin) {
                mid
            } else {
                s
            }
        };
        if x <= lo || x >= hi {
            break; // bracket exhausted at floating-point resolution
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        width_two_ago = width;
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
    }
    Ok(0.5 * (lo + hi))
}
