//! Decay of coherences when preparation and degradation are separate
//! stages of the experiment.

use super::{cluster_size, ModelError, ModelParams};

/// Two-channel decay factor `exp{-A^2 M^2 t^2} exp{-K b^2 t^2 / 2}`.
pub fn decay_separate(order: i64, t_us: f64, k: f64, params: &ModelParams) -> f64 {
    debug_assert!(t_us >= 0.0 && k >= 1.0);
    let m2 = (order * order) as f64;
    let t2 = t_us * t_us;
    (-params.a2 * m2 * t2 - 0.5 * k * params.b2 * t2).exp()
}

/// Full separate-stage profile: normalization prefactor `2/sqrt(pi K)`,
/// Gaussian order profile and both decay channels.
pub fn profile_separate(
    order: i64,
    prep_time_us: f64,
    t_us: f64,
    params: &ModelParams,
) -> Result<f64, ModelError> {
    if !(t_us >= 0.0) {
        return Err(ModelError::InvalidInput(format!(
            "decay time must be nonnegative, got {t_us} us"
        )));
    }
    let k = cluster_size(params.growth_exponent(), prep_time_us)?;
    let m2 = (order * order) as f64;
    let prefactor = 2.0 / (std::f64::consts::PI * k).sqrt();
    Ok(prefactor * (-m2 / k).exp() * decay_separate(order, t_us, k, params))
}

/// Effective cluster size after decay time `t`:
/// `K_eff = 1 / (1/K + A^2 t^2)`.
pub fn k_eff_separate(k: f64, a2: f64, t_us: f64) -> f64 {
    debug_assert!(k >= 1.0 && t_us >= 0.0);
    1.0 / (1.0 / k + a2 * t_us * t_us)
}

/// Squared inverse decay time implied by the two decay channels at the
/// 1/e level: `A^2 M^2 + K b^2 / 2`. Linear in M^2 with slope A^2.
pub fn decoherence_rate_sq(order: i64, k: f64, params: &ModelParams) -> f64 {
    debug_assert!(k >= 1.0);
    let m2 = (order * order) as f64;
    params.a2 * m2 + 0.5 * k * params.b2
}
