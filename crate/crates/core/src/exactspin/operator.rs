//! Dense operators on the 2^n-dimensional product basis.

use super::system::SpinSystem;
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::ops::{Add, Mul};

/// A dense complex operator (Hamiltonian, density operator, propagator).
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    mat: DMatrix<Complex64>,
}

impl OperatorMatrix {
    pub fn new(mat: DMatrix<Complex64>) -> Self {
        assert_eq!(mat.nrows(), mat.ncols(), "operators must be square");
        Self { mat }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(DMatrix::zeros(dim, dim))
    }

    pub fn from_real(mat: &DMatrix<f64>) -> Self {
        Self::new(mat.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn inner(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn into_inner(self) -> DMatrix<Complex64> {
        self.mat
    }

    pub fn adjoint(&self) -> Self {
        Self::new(self.mat.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.norm()
    }

    /// Max elementwise |H - H^dagger|.
    pub fn hermiticity_deviation(&self) -> f64 {
        let adj = self.mat.adjoint();
        (&self.mat - adj).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::new(&self.mat * Complex64::new(factor, 0.0))
    }
}

impl Add for &OperatorMatrix {
    type Output = OperatorMatrix;

    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        OperatorMatrix::new(&self.mat + &rhs.mat)
    }
}

impl Mul for &OperatorMatrix {
    type Output = OperatorMatrix;

    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        OperatorMatrix::new(&self.mat * &rhs.mat)
    }
}

/// Total S_z, diagonal in the product basis. Doubles as the initial
/// (high-temperature deviation) density operator.
pub fn total_sz(system: &SpinSystem) -> OperatorMatrix {
    let dim = system.dim();
    let mut mat = DMatrix::zeros(dim, dim);
    for s in 0..dim {
        mat[(s, s)] = Complex64::new(system.sz_eigenvalue(s), 0.0);
    }
    OperatorMatrix::new(mat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sz_is_diagonal_with_expected_trace() {
        let sys = SpinSystem::all_to_all(3, 1.0).unwrap();
        let sz = total_sz(&sys);
        assert_eq!(sz.trace(), Complex64::new(0.0, 0.0));
        let sq = (sz.inner() * sz.inner()).trace().re;
        assert_eq!(sq, sys.sz_trace_sq());
    }

    #[test]
    fn hermiticity_deviation_detects_asymmetry() {
        let mut m = DMatrix::zeros(2, 2);
        m[(0, 1)] = Complex64::new(1.0, 0.0);
        let op = OperatorMatrix::new(m);
        assert!(op.hermiticity_deviation() > 0.9);
    }
}
