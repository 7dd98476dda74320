//! Quantum-state plumbing: density matrices over spin-1/2 registers,
//! partial traces, von Neumann entropy, and Gibbs / ground-state
//! construction from a Hamiltonian.

pub mod eigen;
pub mod matrix;

use num_complex::Complex64 as C64;
use thiserror::Error;

pub use eigen::{eig_hermitian, Spectrum, HERMITICITY_TOL};
pub use matrix::{kron, pauli_x, pauli_y, pauli_z, site_operator, spin_half_ops, ComplexMatrix};

/// Validation tolerances for density matrices.
pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum QcoreError {
    #[error("matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("trace {trace} is not 1 within {TRACE_TOL:.0e}")]
    BadTrace { trace: f64 },
    #[error("not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },
    #[error("dimension {dim} does not match 2^{n_sites} sites")]
    DimensionMismatch { dim: usize, n_sites: usize },
    #[error("bad site selection {sites:?} for {n_sites} sites")]
    BadSiteIndex { sites: Vec<usize>, n_sites: usize },
    #[error("beta must be finite and non-negative, got {0}")]
    BadBeta(f64),
}

/// A validated quantum state of `n_sites` spin-1/2 sites: Hermitian,
/// unit trace, positive semidefinite (within the module tolerances).
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    n_sites: usize,
}

impl DensityMatrix {
    /// Validates and wraps a matrix. Checks hermiticity (1e-12), unit trace
    /// (1e-12) and positivity (eigenvalues ≥ -1e-10).
    pub fn new(matrix: ComplexMatrix, n_sites: usize) -> Result<Self, QcoreError> {
        if matrix.dim() != 1usize << n_sites {
            return Err(QcoreError::DimensionMismatch { dim: matrix.dim(), n_sites });
        }
        let dev = matrix.hermiticity_deviation();
        if dev > HERMITIAN_TOL {
            return Err(QcoreError::NotHermitian { deviation: dev });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(QcoreError::BadTrace { trace: tr.re });
        }
        let spectrum = eig_hermitian(&matrix)?;
        let min = spectrum.min_value();
        if min < -PSD_TOL {
            return Err(QcoreError::NotPositive { min_eigenvalue: min });
        }
        Ok(Self { matrix, n_sites })
    }

    /// Pure state |ψ⟩⟨ψ| from (not necessarily normalized) amplitudes in the
    /// standard basis, site 0 leftmost, single-site order (↑, ↓).
    pub fn pure(amplitudes: &[C64], n_sites: usize) -> Result<Self, QcoreError> {
        if amplitudes.len() != 1usize << n_sites {
            return Err(QcoreError::DimensionMismatch { dim: amplitudes.len(), n_sites });
        }
        Self::new(ComplexMatrix::outer(amplitudes), n_sites)
    }

    /// Maximally mixed state I/2^n.
    pub fn maximally_mixed(n_sites: usize) -> Self {
        let dim = 1usize << n_sites;
        let m = ComplexMatrix::identity(dim).scale(1.0 / dim as f64);
        Self { matrix: m, n_sites }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Reduced state on an ordered subset of sites; `keep` must be strictly
/// increasing. The kept sites become the tensor factors of the output in the
/// order given.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix, QcoreError> {
    let n = rho.n_sites();
    let bad = keep.is_empty()
        || keep.len() > n
        || keep.iter().any(|&s| s >= n)
        || keep.windows(2).any(|w| w[0] >= w[1]);
    if bad {
        return Err(QcoreError::BadSiteIndex { sites: keep.to_vec(), n_sites: n });
    }
    let dim = rho.dim();
    let kept = keep.len();
    let out_dim = 1usize << kept;
    // Spin of site s in basis index x: bit (n-1-s), site 0 leftmost.
    let bit = |x: usize, s: usize| (x >> (n - 1 - s)) & 1;
    let mut out = ComplexMatrix::zeros(out_dim);
    for x in 0..dim {
        for y in 0..dim {
            let matches = (0..n)
                .filter(|s| !keep.contains(s))
                .all(|s| bit(x, s) == bit(y, s));
            if !matches {
                continue;
            }
            let row = keep.iter().fold(0, |acc, &s| (acc << 1) | bit(x, s));
            let col = keep.iter().fold(0, |acc, &s| (acc << 1) | bit(y, s));
            out[(row, col)] += rho.matrix()[(x, y)];
        }
    }
    DensityMatrix::new(out, kept)
}

/// Two-site reduced density matrix on sites `(keep_i, keep_j)` in the basis
/// {↑↑, ↑↓, ↓↑, ↓↓}, with `keep_i` as the left (first) qubit.
pub fn partial_trace_pair(
    rho: &DensityMatrix,
    keep_i: usize,
    keep_j: usize,
) -> Result<DensityMatrix, QcoreError> {
    if keep_i >= keep_j {
        return Err(QcoreError::BadSiteIndex {
            sites: vec![keep_i, keep_j],
            n_sites: rho.n_sites(),
        });
    }
    partial_trace(rho, &[keep_i, keep_j])
}

/// Von Neumann entropy S(ρ) = -Σ λ log₂ λ in bits, with 0·log₂0 ≡ 0.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    let spectrum = eig_hermitian(rho.matrix()).expect("density matrix is Hermitian");
    shannon_bits(&spectrum.values)
}

/// -Σ p log₂ p over the positive entries.
pub fn shannon_bits(probabilities: &[f64]) -> f64 {
    probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

/// Gibbs state e^{-βH}/Z. Energies are shifted by the ground level before
/// exponentiation so large β cannot overflow.
pub fn thermal_state(h: &ComplexMatrix, beta: f64) -> Result<DensityMatrix, QcoreError> {
    if !beta.is_finite() || beta < 0.0 {
        return Err(QcoreError::BadBeta(beta));
    }
    let spectrum = eig_hermitian(h)?;
    let e0 = spectrum.min_value();
    let weights: Vec<f64> = spectrum.values.iter().map(|e| (-beta * (e - e0)).exp()).collect();
    let z: f64 = weights.iter().sum();
    mixture_from_spectrum(&spectrum, &weights.iter().map(|w| w / z).collect::<Vec<_>>())
}

/// Equal-weight mixture over the ground manifold: eigenvectors with
/// E ≤ E_min + tol. `degeneracy_tol = None` uses 1e-9·max|H|.
pub fn ground_state_mixture(
    h: &ComplexMatrix,
    degeneracy_tol: Option<f64>,
) -> Result<DensityMatrix, QcoreError> {
    let spectrum = eig_hermitian(h)?;
    let tol = degeneracy_tol.unwrap_or(1e-9 * h.max_abs());
    let ground = spectrum.ground_indices(tol);
    let g = ground.len() as f64;
    let mut weights = vec![0.0; spectrum.values.len()];
    for k in ground {
        weights[k] = 1.0 / g;
    }
    mixture_from_spectrum(&spectrum, &weights)
}

fn mixture_from_spectrum(spectrum: &Spectrum, weights: &[f64]) -> Result<DensityMatrix, QcoreError> {
    let n = spectrum.vectors.dim();
    let mut m = ComplexMatrix::zeros(n);
    for (k, &w) in weights.iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] += spectrum.vectors[(i, k)] * spectrum.vectors[(j, k)].conj() * w;
            }
        }
    }
    // Force exact hermiticity; the accumulation already is up to roundoff.
    let sym = ComplexMatrix::from_fn(n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let n_sites = n.trailing_zeros() as usize;
    DensityMatrix::new(sym, n_sites)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn product_abc() -> DensityMatrix {
        // rho_A ⊗ rho_B ⊗ rho_C with distinct diagonal factors.
        let a = ComplexMatrix::diagonal(&[0.7, 0.3]);
        let b = ComplexMatrix::diagonal(&[0.6, 0.4]);
        let c = ComplexMatrix::diagonal(&[0.9, 0.1]);
        DensityMatrix::new(kron(&kron(&a, &b), &c), 3).unwrap()
    }

    #[test]
    fn partial_trace_of_product_state() {
        let rho = product_abc();
        let ab = partial_trace_pair(&rho, 0, 1).unwrap();
        let want = kron(
            &ComplexMatrix::diagonal(&[0.7, 0.3]),
            &ComplexMatrix::diagonal(&[0.6, 0.4]),
        );
        assert!((ab.matrix() - &want).max_abs() < 1e-14);
        // Tracing out the complement of one factor returns it exactly.
        let c = partial_trace(&rho, &[2]).unwrap();
        assert!((c.matrix() - &ComplexMatrix::diagonal(&[0.9, 0.1])).max_abs() < 1e-14);
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let rho = product_abc();
        let red = partial_trace_pair(&rho, 1, 2).unwrap();
        assert_abs_diff_eq!(red.matrix().trace().re, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn partial_trace_rejects_bad_sites() {
        let rho = product_abc();
        assert!(partial_trace_pair(&rho, 1, 1).is_err());
        assert!(partial_trace_pair(&rho, 2, 1).is_err());
        assert!(partial_trace_pair(&rho, 0, 3).is_err());
    }

    #[test]
    fn entropy_of_pure_state_is_zero() {
        let one = C64::new(1.0, 0.0);
        let psi = [one, C64::new(0.0, 0.0)];
        let rho = DensityMatrix::pure(&psi, 1).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&rho), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn entropy_of_maximally_mixed() {
        let rho = DensityMatrix::maximally_mixed(2);
        assert_abs_diff_eq!(von_neumann_entropy(&rho), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn thermal_state_at_beta_zero_is_maximally_mixed() {
        let h = ComplexMatrix::diagonal(&[1.0, -2.0, 0.5, 3.0]);
        let rho = thermal_state(&h, 0.0).unwrap();
        let want = ComplexMatrix::identity(4).scale(0.25);
        assert!((rho.matrix() - &want).max_abs() < 1e-14);
        assert_abs_diff_eq!(von_neumann_entropy(&rho), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn thermal_state_commutes_with_hamiltonian() {
        let mut h = ComplexMatrix::diagonal(&[1.0, -1.0, 0.0, 0.5]);
        h[(0, 3)] = C64::new(0.2, 0.1);
        h[(3, 0)] = C64::new(0.2, -0.1);
        h[(1, 2)] = C64::new(-0.3, 0.0);
        h[(2, 1)] = C64::new(-0.3, 0.0);
        let rho = thermal_state(&h, 1.7).unwrap();
        let comm = &(rho.matrix() * &h) - &(&h * rho.matrix());
        assert!(comm.max_abs() < 1e-10);
    }

    #[test]
    fn thermal_state_rejects_bad_beta() {
        let h = ComplexMatrix::identity(2);
        assert!(thermal_state(&h, -1.0).is_err());
        assert!(thermal_state(&h, f64::INFINITY).is_err());
    }

    #[test]
    fn ground_state_mixture_of_gapped_spectrum_is_pure() {
        let h = ComplexMatrix::diagonal(&[3.0, -1.0, 0.0, 2.0]);
        let rho = ground_state_mixture(&h, None).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&rho), 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(rho.matrix()[(1, 1)].re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn large_beta_matches_ground_mixture() {
        let h = ComplexMatrix::diagonal(&[0.0, 0.0, 1.0, 2.0]);
        let cold = thermal_state(&h, 1e4).unwrap();
        let ground = ground_state_mixture(&h, None).unwrap();
        assert!((cold.matrix() - ground.matrix()).max_abs() < 1e-8);
    }

    #[test]
    fn density_matrix_validation() {
        // Non-Hermitian.
        let mut m = ComplexMatrix::identity(2).scale(0.5);
        m[(0, 1)] = C64::new(0.1, 0.0);
        assert!(matches!(
            DensityMatrix::new(m, 1),
            Err(QcoreError::NotHermitian { .. })
        ));
        // Wrong trace.
        let m = ComplexMatrix::identity(2);
        assert!(matches!(DensityMatrix::new(m, 1), Err(QcoreError::BadTrace { .. })));
        // Not PSD.
        let m = ComplexMatrix::diagonal(&[1.5, -0.5]);
        assert!(matches!(
            DensityMatrix::new(m, 1),
            Err(QcoreError::NotPositive { .. })
        ));
        // Dimension mismatch.
        let m = ComplexMatrix::identity(4).scale(0.25);
        assert!(matches!(
            DensityMatrix::new(m, 1),
            Err(QcoreError::DimensionMismatch { .. })
        ));
    }
}
