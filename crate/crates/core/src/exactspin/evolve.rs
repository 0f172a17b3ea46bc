//! Unitary evolution by exact Hermitian eigendecomposition.

use super::operator::OperatorMatrix;
use super::SpinError;
use nalgebra::linalg::SymmetricEigen;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

const HERMITICITY_TOL: f64 = 1e-12;
const EIGEN_MAX_ITER: usize = 10_000;

fn eigendecompose(h: &OperatorMatrix) -> Result<(DVector<f64>, DMatrix<Complex64>), SpinError> {
    let scale = h.inner().iter().map(|z| z.norm()).fold(0.0, f64::max);
    let dev = h.hermiticity_deviation();
    if dev > HERMITICITY_TOL * scale.max(1.0) {
        return Err(SpinError::NotHermitian { deviation: dev });
    }
    let eig = SymmetricEigen::try_new(h.inner().clone(), f64::EPSILON, EIGEN_MAX_ITER)
        .ok_or(SpinError::EigenFailure)?;
    Ok((eig.eigenvalues, eig.eigenvectors))
}

/// Conjugate `rho` by the propagator of `h` over time `t_us`:
/// `rho(T) = e^{+iHT} rho e^{-iHT}`.
pub fn evolve(
    rho: &OperatorMatrix,
    h: &OperatorMatrix,
    t_us: f64,
) -> Result<OperatorMatrix, SpinError> {
    if !(t_us >= 0.0) {
        return Err(SpinError::InvalidInput(format!(
            "evolution time must be nonnegative, got {t_us} us"
        )));
    }
    if rho.dim() != h.dim() {
        return Err(SpinError::InvalidInput(format!(
            "dimension mismatch: rho is {}, H is {}",
            rho.dim(),
            h.dim()
        )));
    }
    if t_us == 0.0 {
        return Ok(rho.clone());
    }
    let (vals, vecs) = eigendecompose(h)?;
    // In the eigenbasis the conjugation is an elementwise phase.
    let mut w = vecs.adjoint() * rho.inner() * &vecs;
    for j in 0..w.nrows() {
        for k in 0..w.ncols() {
            let phase = Complex64::from_polar(1.0, (vals[j] - vals[k]) * t_us);
            w[(j, k)] *= phase;
        }
    }
    Ok(OperatorMatrix::new(&vecs * w * vecs.adjoint()))
}

/// Propagator `U = e^{-iHt}`.
pub fn propagator(h: &OperatorMatrix, t_us: f64) -> Result<OperatorMatrix, SpinError> {
    let (vals, vecs) = eigendecompose(h)?;
    let phases = DVector::from_iterator(
        vals.len(),
        vals.iter().map(|&l| Complex64::from_polar(1.0, -l * t_us)),
    );
    let mut scaled = vecs.clone();
    for (mut col, phase) in scaled.column_iter_mut().zip(phases.iter()) {
        col *= *phase;
    }
    Ok(OperatorMatrix::new(scaled * vecs.adjoint()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactspin::{build_double_quantum, total_sz, SpinSystem};

    #[test]
    fn zero_time_is_identity_map() {
        let sys = SpinSystem::all_to_all(3, 1.0).unwrap();
        let rho = total_sz(&sys);
        let h = build_double_quantum(&sys);
        let out = evolve(&rho, &h, 0.0).unwrap();
        assert_eq!(out, rho);
    }

    #[test]
    fn zero_hamiltonian_is_identity_map() {
        let sys = SpinSystem::all_to_all(3, 1.0).unwrap();
        let rho = total_sz(&sys);
        let h = OperatorMatrix::zeros(sys.dim());
        let out = evolve(&rho, &h, 5.0).unwrap();
        assert!((out.inner() - rho.inner()).norm() < 1e-12);
    }

    #[test]
    fn preserves_trace_and_norm() {
        let sys = SpinSystem::chain(4, 1.4).unwrap();
        let rho = total_sz(&sys);
        let h = build_double_quantum(&sys);
        let out = evolve(&rho, &h, 2.7).unwrap();
        assert!((out.trace() - rho.trace()).norm() < 1e-10);
        assert!((out.frobenius_norm() - rho.frobenius_norm()).abs() < 1e-10);
    }

    #[test]
    fn propagator_is_unitary() {
        let sys = SpinSystem::all_to_all(3, 0.9).unwrap();
        let h = build_double_quantum(&sys);
        let u = propagator(&h, 1.3).unwrap();
        let prod = u.inner() * u.inner().adjoint();
        let eye = nalgebra::DMatrix::<Complex64>::identity(sys.dim(), sys.dim());
        assert!((prod - eye).norm() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = nalgebra::DMatrix::<Complex64>::zeros(2, 2);
        m[(0, 1)] = Complex64::new(1.0, 0.0);
        let h = OperatorMatrix::new(m);
        let rho = OperatorMatrix::zeros(2);
        assert!(matches!(
            evolve(&rho, &h, 1.0),
            Err(SpinError::NotHermitian { .. })
        ));
    }
}
