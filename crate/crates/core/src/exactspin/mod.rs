//! Exact density-matrix dynamics for small spin-1/2 clusters.
//!
//! Basis convention: product states indexed by bitmask; bit `i` set means
//! spin `i` up, so a basis state's total magnetic quantum number is
//! `popcount - n/2`. The initial state is the high-temperature deviation
//! density operator, proportional to total S_z and normalized so that
//! `Tr(rho0 S_z) / Tr(S_z^2) = 1`.

mod coherence;
mod evolve;
mod hamiltonian;
mod operator;
mod protocol;
mod system;

pub use coherence::{coherence_decompose, second_moment, CoherenceSpectrum};
pub use evolve::{evolve, propagator};
pub use hamiltonian::{build_dipolar, build_double_quantum, build_effective};
pub use operator::{total_sz, OperatorMatrix};
pub use protocol::{cyclic_permutation_check, phase_cycle_signal, ProtocolSpec};
pub use system::{SpinSystem, MAX_SPINS};

use thiserror::Error;

/// Errors from the exact spin simulator.
#[derive(Debug, Error)]
pub enum SpinError {
    #[error("invalid spin system: {0}")]
    InvalidSystem(String),

    #[error("spin count {n} outside supported range 2..={max}")]
    SizeCap { n: usize, max: usize },

    #[error("coupling table line {line}: {msg}")]
    CouplingParse { line: usize, msg: String },

    #[error("phase_count {got} below the Nyquist minimum {need} for this system")]
    PhaseCount { got: usize, need: usize },

    #[error("operator is not Hermitian (max elementwise deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Hermitian eigendecomposition failed to converge")]
    EigenFailure,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
