//! The averaged decay kernel U2, the spectral width equation and its
//! steady state.

use super::{
    cluster_size, initial_profile, ClusterTrajectory, ModelError, ModelParams, TrajectoryPoint,
    K_ST_COEFF,
};
use crate::numerics::{erfc_scaled, find_root_monotone, quad_adaptive, Interval};

/// Below this reduced order the closed form of U2 is abandoned for direct
/// quadrature: `exp(1/4m^2)` overflows near m ~ 0.019 and loses accuracy
/// well before that.
pub const U2_SMALL_M_DEFAULT: f64 = 0.05;

const SQRT_PI: f64 = 1.772453850905516;

/// Averaged decay kernel
/// `U2(y, m) = int_0^y e^{-x} e^{-(mx)^2} dx`.
///
/// Evaluated through the erf closed form, rewritten in terms of the scaled
/// complementary error function so that no intermediate overflows or
/// cancels:
///
/// ```text
/// U2 = sqrt(pi)/(2m) [ erfcx(1/2m) - e^{-y-(ym)^2} erfcx(ym + 1/2m) ]
/// ```
///
/// Uses the default small-m quadrature threshold [`U2_SMALL_M_DEFAULT`].
pub fn u2(y: f64, m: f64) -> f64 {
    u2_with_threshold(y, m, U2_SMALL_M_DEFAULT)
}

/// [`u2`] with an explicit small-m threshold.
pub fn u2_with_threshold(y: f64, m: f64, small_m_threshold: f64) -> f64 {
    assert!(y >= 0.0 && m >= 0.0, "u2 requires y >= 0 and m >= 0");
    if y == 0.0 {
        return 0.0;
    }
    if m == 0.0 {
        return -(-y).exp_m1();
    }
    if m < small_m_threshold {
        return quad_adaptive(|x| (-x - (m * x) * (m * x)).exp(), 0.0, y, 1e-12)
            .expect("quadrature of the smooth bounded U2 integrand cannot fail");
    }
    let a = 1.0 / (2.0 * m);
    let b = y * m + a;
    let sa = erfc_scaled(a).expect("argument is positive");
    let sb = erfc_scaled(b).expect("argument is positive");
    // b^2 - a^2 = (ym)^2 + y
    let damp = (-y - (y * m) * (y * m)).exp();
    SQRT_PI / (2.0 * m) * (sa - damp * sb)
}

/// Time-averaged decay of an order-m coherence:
/// `<Gamma(y, m)> = U2(y, m) / (1 - e^{-y})`.
pub fn averaged_decay(y: f64, m: f64) -> Result<f64, ModelError> {
    if !(y > 0.0) {
        return Err(ModelError::InvalidInput(format!(
            "averaged_decay requires y > 0 (0/0 at y = 0), got y = {y}"
        )));
    }
    if !(m >= 0.0) {
        return Err(ModelError::InvalidInput(format!(
            "averaged_decay requires m >= 0, got m = {m}"
        )));
    }
    Ok(u2(y, m) / -(-y).exp_m1())
}

/// Model MQ spectrum at coherence order `order` and preparation time
/// `prep_time_us`: initial profile times the averaged decay. Even in the
/// order by construction.
pub fn spectrum(order: i64, prep_time_us: f64, params: &ModelParams) -> Result<f64, ModelError> {
    if !(prep_time_us > 0.0) {
        return Err(ModelError::InvalidInput(format!(
            "spectrum requires T > 0, got {prep_time_us} us"
        )));
    }
    let a_p = params.growth_exponent();
    let y = a_p * prep_time_us;
    let k = cluster_size(a_p, prep_time_us)?;
    let g = initial_profile(order, k, params.lambda);
    let m = order.unsigned_abs() as f64 * params.order_decay_ratio();
    Ok(g * averaged_decay(y, m)?)
}

/// Solve the width equation for the effective order M_e at which the
/// spectrum has dropped to 1/e:
///
/// ```text
/// exp{-(M_e^2/K)^(lambda/2)} U2(y, M_e r) / (1 - e^{-y}) = 1/e,   K = e^y
/// ```
///
/// with `r = A p / a_p`. The left-hand side is 1 at M_e = 0 and strictly
/// decreasing, so the root is unique; the r = 0 root `e^{y/2}` bounds it
/// from above and the bracket [0, e^{y/2}] never needs expansion.
pub fn solve_effective_order(y: f64, r: f64, lambda: f64) -> Result<f64, ModelError> {
    if !(y > 0.0) || !(r >= 0.0) || !(lambda > 0.0) {
        return Err(ModelError::InvalidInput(format!(
            "solve_effective_order requires y > 0, r >= 0, lambda > 0; got y = {y}, r = {r}, lambda = {lambda}"
        )));
    }
    let upper = (0.5 * y).exp();
    if r == 0.0 {
        // decay factor is identically 1; the profile condition gives M_e^2 = K
        return Ok(upper);
    }
    let ln_denom = (-(-y).exp_m1()).ln();
    // log form of the residual: ln(LHS) + 1. Keeps the profile term finite
    // even where the spectrum itself underflows.
    let f = |me: f64| {
        let profile_exp = if me == 0.0 {
            0.0
        } else {
            (0.5 * lambda * (2.0 * me.ln() - y)).exp()
        };
        -profile_exp + u2(y, me * r).ln() - ln_denom + 1.0
    };
    let tol = (upper * 1e-14).max(1e-300);
    let bracket = Interval::new(0.0, upper)?;
    find_root_monotone(f, bracket, tol).map_err(|source| ModelError::EffectiveOrderSolve {
        y,
        r,
        lambda,
        source,
    })
}

/// Two-term small-y expansion of the effective order:
/// `M_e ~ e^{y/2} { 1 - (1/3 lambda) (y r e^{y/2})^2 }`.
pub fn small_y_effective_order(y: f64, r: f64, lambda: f64) -> f64 {
    let half = (0.5 * y).exp();
    let w = y * r * half;
    half * (1.0 - w * w / (3.0 * lambda))
}

/// Steady-state effective cluster size `K_st = 3.2 a_p^2 / (A^2 p^2)`.
pub fn steady_state_size(params: &ModelParams) -> Result<f64, ModelError> {
    if params.p <= 0.0 || params.a2 <= 0.0 {
        return Err(ModelError::NoSteadyState);
    }
    let a_p = params.growth_exponent();
    Ok(K_ST_COEFF * a_p * a_p / (params.a2 * params.p * params.p))
}

/// The dimensionless steady-state constant, derived rather than quoted:
/// solves `U2(inf, m_e) = 1/e` and returns `m_e^2` (~3.27; the quoted
/// rounded value is 3.2).
pub fn steady_state_constant() -> f64 {
    // U2(inf, m) = sqrt(pi)/(2m) erfcx(1/2m), strictly decreasing in m
    let f = |m: f64| {
        SQRT_PI / (2.0 * m) * erfc_scaled(1.0 / (2.0 * m)).expect("positive argument")
            - (-1.0f64).exp()
    };
    let root = find_root_monotone(f, Interval::new(0.5, 5.0).expect("valid bracket"), 1e-13)
        .expect("the bracket [0.5, 5] is known to contain the crossing");
    root * root
}

/// Effective cluster size `K_eff(y) = M_e(y)^2` on a reduced-time grid.
pub fn k_eff_trajectory(params: &ModelParams, y_grid: &[f64]) -> Result<ClusterTrajectory, ModelError> {
    if y_grid.is_empty() {
        return Err(ModelError::InvalidInput("empty y grid".to_string()));
    }
    if y_grid[0] <= 0.0 || y_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ModelError::InvalidInput(
            "y grid must be strictly increasing with all values > 0".to_string(),
        ));
    }
    let r = params.order_decay_ratio();
    let points = y_grid
        .iter()
        .map(|&y| {
            let me = solve_effective_order(y, r, params.lambda)?;
            Ok(TrajectoryPoint { y, k_eff: me * me })
        })
        .collect::<Result<Vec<_>, ModelError>>()?;
    Ok(ClusterTrajectory { points })
}
