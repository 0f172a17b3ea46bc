//! Coherence-order decomposition of density operators.

use super::operator::OperatorMatrix;
use super::system::SpinSystem;

/// Normalized coherence-order intensities g_M for M in -n..=n.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceSpectrum {
    n: usize,
    intensities: Vec<f64>,
}

impl CoherenceSpectrum {
    pub(crate) fn from_intensities(n: usize, intensities: Vec<f64>) -> Self {
        assert_eq!(intensities.len(), 2 * n + 1);
        Self { n, intensities }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All orders, -n..=n.
    pub fn orders(&self) -> impl Iterator<Item = i32> + '_ {
        -(self.n as i32)..=self.n as i32
    }

    /// Intensity of order `m`; zero outside -n..=n.
    pub fn intensity(&self, m: i32) -> f64 {
        let idx = m + self.n as i32;
        if idx < 0 || idx as usize >= self.intensities.len() {
            0.0
        } else {
            self.intensities[idx as usize]
        }
    }

    /// Sum of all intensities (1 for a unitarily evolved S_z state).
    pub fn total(&self) -> f64 {
        self.intensities.iter().sum()
    }

    /// The cluster-size estimator `K = 2 <<M^2>> = 2 sum_M M^2 g_M`.
    pub fn second_moment(&self) -> f64 {
        second_moment(self)
    }
}

/// The cluster-size estimator `2 sum_M M^2 g_M`.
pub fn second_moment(spectrum: &CoherenceSpectrum) -> f64 {
    spectrum
        .orders()
        .map(|m| 2.0 * (m as f64) * (m as f64) * spectrum.intensity(m))
        .sum()
}

/// Partition `rho` into coherence orders by the difference of total
/// magnetic quantum numbers between bra and ket basis states;
/// `g_M = Tr(rho_M rho_M^dagger) / Tr(S_z^2)`.
pub fn coherence_decompose(rho: &OperatorMatrix, system: &SpinSystem) -> CoherenceSpectrum {
    let n = system.n();
    assert_eq!(rho.dim(), system.dim(), "rho must live on the system basis");
    let mut intensities = vec![0.0; 2 * n + 1];
    for r in 0..system.dim() {
        for c in 0..system.dim() {
            let m = r.count_ones() as i32 - c.count_ones() as i32;
            intensities[(m + n as i32) as usize] += rho.inner()[(r, c)].norm_sqr();
        }
    }
    let norm = system.sz_trace_sq();
    for g in &mut intensities {
        *g /= norm;
    }
    CoherenceSpectrum::from_intensities(n, intensities)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactspin::{
        build_dipolar, build_double_quantum, evolve, total_sz, SpinSystem,
    };

    #[test]
    fn sz_is_pure_zero_order() {
        let sys = SpinSystem::all_to_all(4, 1.0).unwrap();
        let g = coherence_decompose(&total_sz(&sys), &sys);
        assert!((g.intensity(0) - 1.0).abs() < 1e-14);
        for m in g.orders() {
            if m != 0 {
                assert_eq!(g.intensity(m), 0.0);
            }
        }
    }

    #[test]
    fn secular_evolution_stays_zero_order() {
        let sys = SpinSystem::chain(4, 1.2).unwrap();
        let hd = build_dipolar(&sys);
        let rho = evolve(&total_sz(&sys), &hd, 7.3).unwrap();
        let g = coherence_decompose(&rho, &sys);
        assert!((g.intensity(0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn double_quantum_populates_even_orders_only() {
        let sys = SpinSystem::all_to_all(4, 1.0).unwrap();
        let h0 = build_double_quantum(&sys);
        for t in [0.4, 1.1, 2.9] {
            let rho = evolve(&total_sz(&sys), &h0, t).unwrap();
            let g = coherence_decompose(&rho, &sys);
            for m in g.orders() {
                if m.rem_euclid(2) == 1 {
                    assert!(g.intensity(m) <= 1e-13, "odd order {m} populated at t={t}");
                }
            }
        }
    }

    #[test]
    fn second_moment_two_line_spectrum() {
        let g = CoherenceSpectrum::from_intensities(2, vec![0.5, 0.0, 0.0, 0.0, 0.5]);
        assert_eq!(second_moment(&g), 8.0);
    }

    #[test]
    fn second_moment_zero_for_uncorrelated_state() {
        let sys = SpinSystem::all_to_all(4, 1.0).unwrap();
        let g = coherence_decompose(&total_sz(&sys), &sys);
        assert_eq!(second_moment(&g), 0.0);
    }
}
