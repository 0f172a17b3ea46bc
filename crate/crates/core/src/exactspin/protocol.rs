//! Phase-cycled time-reversal protocol and the trace it observes.
//!
//! The observed signal per phase angle is
//!
//! ```text
//! Gamma_phi = Tr{ U0+ U_phi U_p S_z U_p+ U_phi+ U0 S_z } / Tr{S_z^2}
//! ```
//!
//! with `U_p = exp(-i T H_eff)` the preparation propagator,
//! `U0 = exp(-i T_rev H_0)` the reversal propagator and
//! `U_phi = exp(i phi S_z)` a collective z rotation. Order-M coherences
//! pick up phase `M phi`, so a discrete Fourier transform over equally
//! spaced phases separates them.

use super::coherence::CoherenceSpectrum;
use super::evolve::propagator;
use super::hamiltonian::{build_double_quantum, build_effective};
use super::operator::{total_sz, OperatorMatrix};
use super::system::SpinSystem;
use super::SpinError;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Parameters of one phase-cycled preparation/reversal run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProtocolSpec {
    /// Perturbation strength p = tau_1 / tau_c.
    pub p: f64,
    /// Preparation interval T = N tau_c, us.
    pub prep_time_us: f64,
    /// Reversal interval N tau_0, us.
    pub reverse_time_us: f64,
    /// Number of equally spaced phase angles (must exceed the Nyquist
    /// minimum 2n+1 for orders up to n).
    pub phase_count: usize,
}

impl ProtocolSpec {
    pub fn new(
        p: f64,
        prep_time_us: f64,
        reverse_time_us: f64,
        phase_count: usize,
    ) -> Result<Self, SpinError> {
        if !(0.0..1.0).contains(&p) {
            return Err(SpinError::InvalidInput(format!(
                "perturbation strength must satisfy 0 <= p < 1, got {p}"
            )));
        }
        if !(prep_time_us >= 0.0 && reverse_time_us >= 0.0) {
            return Err(SpinError::InvalidInput(
                "protocol times must be nonnegative".to_string(),
            ));
        }
        Ok(Self {
            p,
            prep_time_us,
            reverse_time_us,
            phase_count,
        })
    }

    /// Default phase count for an n-spin system: 2n+2 (even, above Nyquist).
    pub fn default_phase_count(n: usize) -> usize {
        2 * n + 2
    }
}

struct ProtocolOperators {
    prepared: DMatrix<Complex64>, // U_p S_z U_p+
    reversed: DMatrix<Complex64>, // U0 S_z U0+
    norm: f64,
}

fn protocol_operators(
    spec: &ProtocolSpec,
    system: &SpinSystem,
) -> Result<ProtocolOperators, SpinError> {
    let heff = build_effective(system, spec.p)?;
    let h0 = build_double_quantum(system);
    let sz = total_sz(system);
    let u_p = propagator(&heff, spec.prep_time_us)?;
    let u_0 = propagator(&h0, spec.reverse_time_us)?;
    let prepared = u_p.inner() * sz.inner() * u_p.inner().adjoint();
    let reversed = u_0.inner() * sz.inner() * u_0.inner().adjoint();
    Ok(ProtocolOperators {
        prepared,
        reversed,
        norm: system.sz_trace_sq(),
    })
}

/// Run the phase cycle and extract coherence intensities as Fourier
/// harmonics of the signal.
///
/// When the reversal matches the preparation (ideal time reversal) the
/// result equals [`super::coherence_decompose`] of the prepared state.
pub fn phase_cycle_signal(
    spec: &ProtocolSpec,
    system: &SpinSystem,
) -> Result<CoherenceSpectrum, SpinError> {
    let n = system.n();
    let need = 2 * n + 1;
    if spec.phase_count < need {
        return Err(SpinError::PhaseCount {
            got: spec.phase_count,
            need,
        });
    }
    let ops = protocol_operators(spec, system)?;
    let dim = system.dim();
    let count = spec.phase_count;

    // Gamma at each phase angle
    let mut signal = Vec::with_capacity(count);
    for k in 0..count {
        let phi = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
        let mut gamma = Complex64::new(0.0, 0.0);
        for r in 0..dim {
            let mr = system.sz_eigenvalue(r);
            for c in 0..dim {
                let mc = system.sz_eigenvalue(c);
                let rotation = Complex64::from_polar(1.0, phi * (mr - mc));
                gamma += rotation * ops.prepared[(r, c)] * ops.reversed[(c, r)];
            }
        }
        signal.push(gamma / ops.norm);
    }

    // M-th harmonic of the Fourier series
    let mut intensities = vec![0.0; 2 * n + 1];
    for (idx, g) in intensities.iter_mut().enumerate() {
        let m = idx as i32 - n as i32;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, s) in signal.iter().enumerate() {
            let phi = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
            acc += s * Complex64::from_polar(1.0, -f64::from(m) * phi);
        }
        *g = (acc / count as f64).re;
    }
    Ok(CoherenceSpectrum::from_intensities(n, intensities))
}

/// Evaluate the protocol trace in the printed operator order and after
/// every cyclic permutation of the operators inside the trace; returns the
/// largest absolute difference (exactly zero up to roundoff, since the
/// trace is cyclic).
pub fn cyclic_permutation_check(
    spec: &ProtocolSpec,
    system: &SpinSystem,
) -> Result<f64, SpinError> {
    let heff = build_effective(system, spec.p)?;
    let h0 = build_double_quantum(system);
    let sz = total_sz(system);
    let u_p = propagator(&heff, spec.prep_time_us)?;
    let u_0 = propagator(&h0, spec.reverse_time_us)?;
    let dim = system.dim();

    let mut worst: f64 = 0.0;
    for phi in [0.0, std::f64::consts::PI / 3.0, std::f64::consts::PI] {
        let mut u_phi = DMatrix::<Complex64>::zeros(dim, dim);
        for s in 0..dim {
            u_phi[(s, s)] = Complex64::from_polar(1.0, phi * system.sz_eigenvalue(s));
        }
        let u_phi = OperatorMatrix::new(u_phi);
        let ops = [
            u_0.adjoint(),
            u_phi.clone(),
            u_p.clone(),
            sz.clone(),
            u_p.adjoint(),
            u_phi.adjoint(),
            u_0.clone(),
            sz.clone(),
        ];
        let trace_from = |start: usize| -> Complex64 {
            let mut acc = ops[start].inner().clone();
            for offset in 1..ops.len() {
                acc *= ops[(start + offset) % ops.len()].inner();
            }
            acc.trace() / Complex64::new(system.sz_trace_sq(), 0.0)
        };
        let reference = trace_from(0);
        for start in 1..ops.len() {
            worst = worst.max((trace_from(start) - reference).norm());
        }
    }
    Ok(worst)
}
