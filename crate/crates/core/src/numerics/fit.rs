//! Ordinary least squares for a straight line.
//!
//! Callers pass already-transformed coordinates (ln K, M^2, ...); the fitter
//! itself is deliberately generic.

use super::NumericsError;

/// Result of an ordinary least-squares line fit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Fit `y = slope * x + intercept` by ordinary least squares.
pub fn fit_line(points: &[(f64, f64)]) -> Result<LineFit, NumericsError> {
    if points.len() < 2 {
        return Err(NumericsError::DegenerateFit(format!(
            "need at least 2 points, got {}",
            points.len()
        )));
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for &(x, y) in points {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if sxx <= 0.0 {
        return Err(NumericsError::DegenerateFit(
            "x values have no spread".to_string(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let mut ss_tot = 0.0;
    let mut ss_res = 0.0;
    for &(x, y) in points {
        ss_tot += (y - mean_y) * (y - mean_y);
        let r = y - (slope * x + intercept);
        ss_res += r * r;
    }
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).max(0.0)
    };
    Ok(LineFit {
        slope,
        intercept,
        r_squared,
    })
}
