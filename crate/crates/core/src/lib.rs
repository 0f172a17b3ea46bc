//! Growth and decoherence of multiple-quantum NMR coherences.
//!
//! Three layers:
//!
//! * [`numerics`] — special functions, adaptive quadrature, bracketed
//!   root finding and ordinary least squares used everywhere else.
//! * [`phenomodel`] — the phenomenological model of cluster growth,
//!   order-dependent decay, the averaged decay kernel `U2` and the
//!   numerically solved effective-order (spectral width) equation.
//! * [`exactspin`] — exact density-matrix dynamics for small spin-1/2
//!   clusters (dipolar and double-quantum Hamiltonians, phase cycling),
//!   used as a first-principles cross-check of the model.

pub mod exactspin;
pub mod numerics;
pub mod phenomodel;

pub use exactspin::{CoherenceSpectrum, OperatorMatrix, ProtocolSpec, SpinSystem};
pub use numerics::{Interval, LineFit};
pub use phenomodel::{ClusterTrajectory, CoherenceProfile, ModelParams, ReducedCoords};
