//! Cluster growth and the coherence-emergence density.

use super::ModelError;

/// Largest growth exponent before exp overflows f64.
const MAX_EXPONENT: f64 = 700.0;

/// Effective cluster size K = exp(a_p T).
pub fn cluster_size(a_p: f64, t_us: f64) -> Result<f64, ModelError> {
    if !(t_us >= 0.0) {
        return Err(ModelError::InvalidInput(format!(
            "preparation time must be nonnegative, got {t_us} us"
        )));
    }
    let exponent = a_p * t_us;
    if exponent > MAX_EXPONENT {
        return Err(ModelError::Overflow { exponent });
    }
    Ok(exponent.exp())
}

/// Initial coherence profile `exp{-(M^2/K)^(lambda/2)}`.
///
/// lambda = 2 is the Gaussian shape, lambda = 1 the exponential one.
pub fn initial_profile(order: i64, k: f64, lambda: f64) -> f64 {
    debug_assert!(k >= 1.0 && lambda > 0.0);
    let m2 = (order * order) as f64;
    (-(m2 / k).powf(0.5 * lambda)).exp()
}

/// Probability density of a coherence emerging at time `t` during a
/// preparation interval of length `t_prep`: `R(t) = a_p e^{a_p t} / D`
/// with `D = e^{a_p T} - 1`. Normalized to 1 on [0, T] by construction.
pub fn emergence_density(t_us: f64, a_p: f64, t_prep_us: f64) -> Result<f64, ModelError> {
    if t_prep_us <= 0.0 {
        return Err(ModelError::DegenerateTime);
    }
    if !(a_p * t_prep_us > 0.0) {
        return Err(ModelError::InvalidInput(format!(
            "need a_p * T > 0, got a_p = {a_p}, T = {t_prep_us}"
        )));
    }
    if !(0.0..=t_prep_us).contains(&t_us) {
        return Err(ModelError::InvalidInput(format!(
            "emergence time {t_us} outside [0, {t_prep_us}]"
        )));
    }
    let d = (a_p * t_prep_us).exp_m1();
    Ok(a_p * (a_p * t_us).exp() / d)
}
