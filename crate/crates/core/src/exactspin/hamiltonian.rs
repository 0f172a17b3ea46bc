//! Secular dipolar, double-quantum and mixed effective Hamiltonians.
//!
//! The pair sums run over ordered pairs (i, j), i != j, so each unordered
//! pair is counted twice; the 1/2 and 1/4 prefactors assume exactly this
//! convention.

use super::operator::OperatorMatrix;
use super::system::SpinSystem;
use nalgebra::DMatrix;

/// Secular dipolar Hamiltonian
/// `H_d = sum_{i!=j} b_ij S_zi S_zj - (1/2) sum_{i!=j} b_ij S_+i S_-j`.
///
/// Commutes with total S_z (conserves coherence order).
pub fn build_dipolar(system: &SpinSystem) -> OperatorMatrix {
    let n = system.n();
    let dim = system.dim();
    let mut mat: DMatrix<f64> = DMatrix::zeros(dim, dim);
    for s in 0..dim {
        // Ising part: S_z eigenvalues are +-1/2
        let mut diag = 0.0;
        for i in 0..n {
            let szi = if s >> i & 1 == 1 { 0.5 } else { -0.5 };
            for j in 0..n {
                if i != j {
                    let szj = if s >> j & 1 == 1 { 0.5 } else { -0.5 };
                    diag += system.coupling(i, j) * szi * szj;
                }
            }
        }
        mat[(s, s)] = diag;
        // flip-flop part: S_+i S_-j needs spin i down, spin j up
        for i in 0..n {
            if s >> i & 1 == 1 {
                continue;
            }
            for j in 0..n {
                if i == j || s >> j & 1 == 0 {
                    continue;
                }
                let target = s ^ (1 << i) ^ (1 << j);
                mat[(target, s)] += -0.5 * system.coupling(i, j);
            }
        }
    }
    OperatorMatrix::from_real(&mat)
}

/// Double-quantum Hamiltonian
/// `H_0 = -(1/4) sum_{i!=j} b_ij (S_+i S_+j + S_-i S_-j)`.
///
/// Connects only basis states whose total S_z differs by exactly 2;
/// real-symmetric in the product basis.
pub fn build_double_quantum(system: &SpinSystem) -> OperatorMatrix {
    let n = system.n();
    let dim = system.dim();
    let mut mat: DMatrix<f64> = DMatrix::zeros(dim, dim);
    for s in 0..dim {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let bi = s >> i & 1;
                let bj = s >> j & 1;
                if bi == 0 && bj == 0 {
                    // S_+i S_+j raises both
                    let target = s | (1 << i) | (1 << j);
                    mat[(target, s)] += -0.25 * system.coupling(i, j);
                } else if bi == 1 && bj == 1 {
                    // S_-i S_-j lowers both
                    let target = s & !(1 << i) & !(1 << j);
                    mat[(target, s)] += -0.25 * system.coupling(i, j);
                }
            }
        }
    }
    OperatorMatrix::from_real(&mat)
}

/// Mixed effective Hamiltonian `H_eff = (1-p) H_0 + p H_d`.
pub fn build_effective(system: &SpinSystem, p: f64) -> Result<OperatorMatrix, super::SpinError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(super::SpinError::InvalidInput(format!(
            "perturbation strength must satisfy 0 <= p <= 1, got {p}"
        )));
    }
    let h0 = build_double_quantum(system).scale(1.0 - p);
    let hd = build_dipolar(system).scale(p);
    Ok(&h0 + &hd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactspin::total_sz;

    fn two_spin(b: f64) -> SpinSystem {
        SpinSystem::all_to_all(2, b).unwrap()
    }

    #[test]
    fn dipolar_flip_flop_element() {
        // basis: 0 = dd, 1 = ud (spin0 up), 2 = du, 3 = uu.
        // Only one ordered pair can flip |du> into |ud> (S_+0 S_-1), so the
        // element is -(1/2) b_01 = -b/2.
        let b = 1.7;
        let h = build_dipolar(&two_spin(b));
        let el = h.inner()[(1, 2)];
        assert!((el.re + 0.5 * b).abs() < 1e-15);
        assert_eq!(el.im, 0.0);
        // diagonal Ising part
        assert!((h.inner()[(3, 3)].re - 0.5 * b).abs() < 1e-15);
        assert!((h.inner()[(1, 1)].re + 0.5 * b).abs() < 1e-15);
    }

    #[test]
    fn dipolar_commutes_with_sz() {
        let sys = SpinSystem::chain(4, 1.3).unwrap();
        let h = build_dipolar(&sys);
        let sz = total_sz(&sys);
        let comm = (h.inner() * sz.inner()) - (sz.inner() * h.inner());
        assert!(comm.norm() < 1e-13);
    }

    #[test]
    fn dipolar_zero_couplings() {
        let sys = SpinSystem::all_to_all(3, 0.0).unwrap();
        assert_eq!(build_dipolar(&sys).frobenius_norm(), 0.0);
    }

    #[test]
    fn double_quantum_pair_element() {
        let b = 2.0;
        let h = build_double_quantum(&two_spin(b));
        // <uu|H0|dd> = -b/2 (both ordered pairs contribute -b/4)
        assert!((h.inner()[(3, 0)].re + 0.5 * b).abs() < 1e-15);
    }

    #[test]
    fn double_quantum_selection_rule() {
        let sys = SpinSystem::all_to_all(4, 1.0).unwrap();
        let h = build_double_quantum(&sys);
        for r in 0..sys.dim() {
            for c in 0..sys.dim() {
                let dm = r.count_ones() as i32 - c.count_ones() as i32;
                if dm.abs() != 2 {
                    assert_eq!(h.inner()[(r, c)], num_complex::Complex64::new(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn double_quantum_real_symmetric() {
        let sys = SpinSystem::chain(5, 0.8).unwrap();
        let h = build_double_quantum(&sys);
        assert!(h.hermiticity_deviation() < 1e-15);
        assert!(h.inner().iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn effective_endpoints_and_midpoint() {
        let sys = SpinSystem::all_to_all(3, 1.1).unwrap();
        let h0 = build_double_quantum(&sys);
        let hd = build_dipolar(&sys);
        assert_eq!(build_effective(&sys, 0.0).unwrap(), h0);
        assert_eq!(build_effective(&sys, 1.0).unwrap(), hd);
        let mid = build_effective(&sys, 0.5).unwrap();
        let mean = &h0.scale(0.5) + &hd.scale(0.5);
        assert!((mid.inner() - mean.inner()).norm() < 1e-15);
    }
}
