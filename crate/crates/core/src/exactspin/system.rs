//! Spin systems: size, coupling table, basis bookkeeping.

use super::SpinError;
use nalgebra::DMatrix;
use std::path::Path;

/// Largest supported cluster (dim 4096 keeps exact diagonalization cheap).
pub const MAX_SPINS: usize = 12;

/// A cluster of `n` spins-1/2 with a symmetric coupling table `b_ij` (1/us).
#[derive(Clone, Debug, PartialEq)]
pub struct SpinSystem {
    n: usize,
    couplings: DMatrix<f64>,
}

impl SpinSystem {
    pub fn new(n: usize, couplings: DMatrix<f64>) -> Result<Self, SpinError> {
        if !(2..=MAX_SPINS).contains(&n) {
            return Err(SpinError::SizeCap { n, max: MAX_SPINS });
        }
        if couplings.nrows() != n || couplings.ncols() != n {
            return Err(SpinError::InvalidSystem(format!(
                "coupling table is {}x{}, expected {n}x{n}",
                couplings.nrows(),
                couplings.ncols()
            )));
        }
        for i in 0..n {
            if couplings[(i, i)] != 0.0 {
                return Err(SpinError::InvalidSystem(format!(
                    "diagonal coupling b_{i}{i} must be zero, got {}",
                    couplings[(i, i)]
                )));
            }
            for j in 0..i {
                if couplings[(i, j)] != couplings[(j, i)] {
                    return Err(SpinError::InvalidSystem(format!(
                        "coupling table not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { n, couplings })
    }

    /// Equal coupling `b` between every pair.
    pub fn all_to_all(n: usize, b: f64) -> Result<Self, SpinError> {
        let mut c = DMatrix::zeros(n.max(1), n.max(1));
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    c[(i, j)] = b;
                }
            }
        }
        Self::new(n, c)
    }

    /// Nearest-neighbor chain with coupling `b`.
    pub fn chain(n: usize, b: f64) -> Result<Self, SpinError> {
        let mut c = DMatrix::zeros(n.max(1), n.max(1));
        for i in 0..n.saturating_sub(1) {
            c[(i, i + 1)] = b;
            c[(i + 1, i)] = b;
        }
        Self::new(n, c)
    }

    /// Build from explicit unordered pairs `(i, j, b_ij)`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize, f64)]) -> Result<Self, SpinError> {
        let mut c = DMatrix::zeros(n.max(1), n.max(1));
        for &(i, j, b) in pairs {
            if i >= n || j >= n {
                return Err(SpinError::InvalidSystem(format!(
                    "pair ({i}, {j}) out of range for n = {n}"
                )));
            }
            if i == j {
                return Err(SpinError::InvalidSystem(format!(
                    "self-coupling at spin {i}"
                )));
            }
            c[(i, j)] = b;
            c[(j, i)] = b;
        }
        Self::new(n, c)
    }

    /// Parse a plain-text coupling table: one `i j b_ij` triple per line
    /// (0-based indices, b in 1/us), `#` starts a comment.
    pub fn parse_couplings(n: usize, text: &str) -> Result<Self, SpinError> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(SpinError::CouplingParse {
                    line,
                    msg: format!("expected 'i j b_ij', got {} fields", fields.len()),
                });
            }
            let i: usize = fields[0].parse().map_err(|e| SpinError::CouplingParse {
                line,
                msg: format!("bad spin index '{}': {e}", fields[0]),
            })?;
            let j: usize = fields[1].parse().map_err(|e| SpinError::CouplingParse {
                line,
                msg: format!("bad spin index '{}': {e}", fields[1]),
            })?;
            let b: f64 = fields[2].parse().map_err(|e| SpinError::CouplingParse {
                line,
                msg: format!("bad coupling '{}': {e}", fields[2]),
            })?;
            pairs.push((i, j, b));
        }
        Self::from_pairs(n, &pairs)
    }

    /// Read a coupling table file (see [`Self::parse_couplings`]).
    pub fn from_coupling_file(n: usize, path: impl AsRef<Path>) -> Result<Self, SpinError> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_couplings(n, &text)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Hilbert-space dimension 2^n.
    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn coupling(&self, i: usize, j: usize) -> f64 {
        self.couplings[(i, j)]
    }

    /// Total S_z eigenvalue of a basis state (spin up = +1/2).
    pub fn sz_eigenvalue(&self, state: usize) -> f64 {
        state.count_ones() as f64 - 0.5 * self.n as f64
    }

    /// Tr S_z^2 = n 2^(n-2), the spectrum normalization.
    pub fn sz_trace_sq(&self) -> f64 {
        (self.n as f64) * (1u64 << (self.n - 2)) as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_cap_enforced() {
        assert!(matches!(
            SpinSystem::all_to_all(13, 1.0),
            Err(SpinError::SizeCap { n: 13, max: 12 })
        ));
        assert!(SpinSystem::all_to_all(1, 1.0).is_err());
    }

    #[test]
    fn symmetry_enforced() {
        let mut c = DMatrix::zeros(2, 2);
        c[(0, 1)] = 1.0;
        assert!(SpinSystem::new(2, c).is_err());
    }

    #[test]
    fn sz_trace_sq_matches_direct_sum() {
        for n in [2usize, 4, 6] {
            let sys = SpinSystem::all_to_all(n, 1.0).unwrap();
            let direct: f64 = (0..sys.dim())
                .map(|s| sys.sz_eigenvalue(s).powi(2))
                .sum();
            assert_eq!(sys.sz_trace_sq(), direct);
        }
    }

    #[test]
    fn parses_coupling_table_with_comments() {
        let text = "# pair list\n0 1 2.5\n1 2 -0.5  # chain link\n\n";
        let sys = SpinSystem::parse_couplings(3, text).unwrap();
        assert_eq!(sys.coupling(0, 1), 2.5);
        assert_eq!(sys.coupling(1, 0), 2.5);
        assert_eq!(sys.coupling(2, 1), -0.5);
        assert_eq!(sys.coupling(0, 2), 0.0);
    }

    #[test]
    fn parse_error_carries_line_number() {
        let text = "0 1 2.5\n0 oops 1.0\n";
        match SpinSystem::parse_couplings(3, text) {
            Err(SpinError::CouplingParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
