//! Hermitian eigendecomposition via cyclic Jacobi rotations.
//!
//! At the dimensions used here (≤ 16) the cyclic sweep converges in a
//! handful of passes and needs no pivot search, which keeps the sweep
//! ordering — and therefore the output — fully deterministic.

use num_complex::Complex64 as C64;

use super::matrix::ComplexMatrix;
use super::QcoreError;

/// Eigenvalues (ascending) with column-orthonormal eigenvectors:
/// `h * vectors = vectors * diag(values)`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl Spectrum {
    /// Smallest eigenvalue.
    pub fn min_value(&self) -> f64 {
        self.values[0]
    }

    /// Indices of all levels within `tol` of the minimum.
    pub fn ground_indices(&self, tol: f64) -> Vec<usize> {
        let e0 = self.min_value();
        (0..self.values.len()).filter(|&k| self.values[k] <= e0 + tol).collect()
    }
}

/// Relative hermiticity tolerance accepted by [`eig_hermitian`].
pub const HERMITICITY_TOL: f64 = 1e-10;

const OFF_DIAG_TARGET: f64 = 1e-14;
const MAX_SWEEPS: usize = 60;

/// Diagonalizes a Hermitian matrix. Eigenvalues come out ascending; the
/// eigenvector columns are orthonormal. Sweep order is fixed, so the result
/// is deterministic for a fixed input.
pub fn eig_hermitian(h: &ComplexMatrix) -> Result<Spectrum, QcoreError> {
    let dev = h.hermiticity_deviation();
    if dev > HERMITICITY_TOL * h.max_abs().max(1.0) {
        return Err(QcoreError::NotHermitian { deviation: dev });
    }
    let n = h.dim();
    // Work on the Hermitian average so roundoff asymmetry cannot leak in.
    let mut a = ComplexMatrix::from_fn(n, |i, j| (h[(i, j)] + h[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm();
    if scale > 0.0 {
        let target = OFF_DIAG_TARGET * scale;
        let mut converged = false;
        for _ in 0..MAX_SWEEPS {
            if off_diagonal_norm(&a) <= target {
                converged = true;
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
        if !converged && off_diagonal_norm(&a) > target {
            // Quadratic convergence makes this unreachable for Hermitian input.
            panic!("Jacobi diagonalization failed to converge in {MAX_SWEEPS} sweeps");
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(Spectrum { values, vectors })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One complex Jacobi rotation zeroing a[(p,q)]. For the 2x2 pivot block
/// [[α, β], [β̄, δ]] with β = |β|e^{iφ}, the unitary
///   U = [[c, -s e^{iφ}], [s e^{-iφ}, c]]
/// diagonalizes the block when t = s/c solves t² - 2τt - 1 = 0,
/// τ = (δ-α)/(2|β|).
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let beta = a[(p, q)];
    let babs = beta.norm();
    if babs <= f64::MIN_POSITIVE {
        return;
    }
    let phase = beta / babs;
    let alpha = a[(p, p)].re;
    let delta = a[(q, q)].re;
    let tau = (delta - alpha) / (2.0 * babs);
    // Smaller-magnitude root of t² - 2τt - 1 = 0 keeps the rotation angle
    // below π/4 for stability.
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = a.dim();
    let new_pp = alpha * c * c + 2.0 * babs * s * c + delta * s * s;
    let new_qq = alpha * s * s - 2.0 * babs * s * c + delta * c * c;

    // Columns p and q of A <- A U.
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c + akq * s * phase.conj();
        a[(k, q)] = akq * c - akp * s * phase;
    }
    // Rows p and q of A <- U† A.
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c + aqk * s * phase;
        a[(q, k)] = aqk * c - apk * s * phase.conj();
    }
    a[(p, p)] = C64::new(new_pp, 0.0);
    a[(q, q)] = C64::new(new_qq, 0.0);
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);

    // Accumulate V <- V U.
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * s * phase.conj();
        v[(k, q)] = vkq * c - vkp * s * phase;
    }
}
