//! Adaptive Simpson quadrature with a bounded subdivision budget.

use super::NumericsError;

/// Maximum bisection depth before the routine gives up.
pub const MAX_SUBDIVISION_DEPTH: u32 = 60;

/// Integrate `f` over `[a, b]` to the requested relative tolerance.
///
/// Intended for smooth integrands; subdivision stops when the local
/// Richardson error estimate is met, and the call fails explicitly if
/// the depth budget is exhausted anywhere.
pub fn quad_adaptive<F>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64, NumericsError>
where
    F: Fn(f64) -> f64,
{
    if !a.is_finite() || !b.is_finite() || a > b {
        return Err(NumericsError::Domain(format!(
            "invalid integration bounds [{a}, {b}]"
        )));
    }
    if !(rel_tol >= 1e-13) {
        return Err(NumericsError::Domain(format!(
            "rel_tol {rel_tol} below supported minimum 1e-13"
        )));
    }
    if a == b {
        return Ok(0.0);
    }

    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);

    // The absolute tolerance depends on the integral's magnitude, which the
    // coarse estimate can badly overstate for sharply peaked integrands.
    // Re-run with the refined value as scale until it is consistent.
    let mut scale = whole.abs().max(f64::MIN_POSITIVE);
    for _ in 0..4 {
        let result = adapt(
            &f,
            a,
            fa,
            m,
            fm,
            b,
            fb,
            whole,
            rel_tol * scale,
            MAX_SUBDIVISION_DEPTH,
        )?;
        if result == 0.0 || result.abs() >= 0.5 * scale {
            return Ok(result);
        }
        scale = result.abs();
    }
    Err(NumericsError::QuadratureNonConvergence {
        a,
        b,
        max_depth: MAX_SUBDIVISION_DEPTH,
    })
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F>(
    f: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64, NumericsError>
where
    F: Fn(f64) -> f64,
{
    let lm = 0.5 * (a + m);
    let flm = f(lm);
    let rm = 0.5 * (m + b);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(NumericsError::QuadratureNonConvergence {
            a,
            b,
            max_depth: MAX_SUBDIVISION_DEPTH,
        });
    }
    let l = adapt(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1)?;
    let r = adapt(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1)?;
    Ok(l + r)
}
