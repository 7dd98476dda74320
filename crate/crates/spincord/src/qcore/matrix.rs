//! Dense complex matrices and the tensor-product plumbing used everywhere
//! else in the crate. Everything here targets dimensions ≤ 16, so storage is
//! a plain row-major `Vec` and products are the naive triple loop.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64 as C64;

/// Square complex matrix, row-major storage.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self { dim, data: vec![C64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from real entries in row-major order.
    pub fn from_real(dim: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), dim * dim, "need dim^2 entries");
        Self {
            dim,
            data: entries.iter().map(|&x| C64::new(x, 0.0)).collect(),
        }
    }

    pub fn diagonal(entries: &[f64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = C64::new(x, 0.0);
        }
        m
    }

    /// Projector |v⟩⟨v| onto a (not necessarily normalized) vector.
    pub fn outer(v: &[C64]) -> Self {
        let n2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj() / n2)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    /// Entry-wise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(i, j)].conj())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(self.dim, |i, j| self[(i, j)] * s)
    }

    /// Largest entry magnitude, max_{ij} |a_ij|.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// max_{ij} |a_ij - conj(a_ji)|, zero for an exactly Hermitian matrix.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol * self.max_abs().max(1.0)
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }
}

/// Tensor product with row-major block convention:
/// `out[(i*db+k, j*db+l)] = a[(i,j)] * b[(k,l)]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim(), b.dim());
    ComplexMatrix::from_fn(da * db, |r, c| a[(r / db, c / db)] * b[(r % db, c % db)])
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix sum");
        ComplexMatrix::from_fn(self.dim, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix difference");
        ComplexMatrix::from_fn(self.dim, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0])
}

pub fn pauli_y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = C64::new(0.0, -1.0);
    m[(1, 0)] = C64::new(0.0, 1.0);
    m
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0])
}

/// Spin-1/2 operators (Sx, Sy, Sz) = σ/2.
pub fn spin_half_ops() -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
    (pauli_x().scale(0.5), pauli_y().scale(0.5), pauli_z().scale(0.5))
}

/// Embeds a single-site operator at `site` in an `n_sites` register,
/// site 0 being the leftmost tensor factor.
pub fn site_operator(op: &ComplexMatrix, site: usize, n_sites: usize) -> ComplexMatrix {
    assert!(site < n_sites, "site index out of range");
    let mut out = ComplexMatrix::identity(1);
    for s in 0..n_sites {
        out = if s == site {
            kron(&out, op)
        } else {
            kron(&out, &ComplexMatrix::identity(2))
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_of_projectors() {
        let p = ComplexMatrix::diagonal(&[1.0, 0.0]);
        let got = kron(&p, &p);
        assert_eq!(got, ComplexMatrix::diagonal(&[1.0, 0.0, 0.0, 0.0]));
    }

    #[test]
    fn kron_of_sz_halves() {
        let (_, _, sz) = spin_half_ops();
        let got = kron(&sz, &sz);
        let want = [0.25, -0.25, -0.25, 0.25];
        for (i, w) in want.iter().enumerate() {
            assert_abs_diff_eq!(got[(i, i)].re, w, epsilon = 1e-15);
            assert_abs_diff_eq!(got[(i, i)].im, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn kron_block_convention() {
        // result[(i*db+k),(j*db+l)] = a[i,j] * b[k,l]
        let a = ComplexMatrix::from_real(2, &[1.0, 2.0, 3.0, 4.0]);
        let b = ComplexMatrix::from_real(2, &[0.0, 5.0, 6.0, 7.0]);
        let k = kron(&a, &b);
        assert_abs_diff_eq!(k[(0, 1)].re, 5.0);
        assert_abs_diff_eq!(k[(2, 1)].re, 3.0 * 5.0);
        assert_abs_diff_eq!(k[(3, 3)].re, 4.0 * 7.0);
    }

    #[test]
    fn adjoint_and_trace() {
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = C64::new(1.0, 2.0);
        m[(1, 1)] = C64::new(3.0, 0.0);
        let a = m.adjoint();
        assert_eq!(a[(1, 0)], C64::new(1.0, -2.0));
        assert_eq!(m.trace(), C64::new(3.0, 0.0));
    }

    #[test]
    fn site_operator_places_factor() {
        let (_, _, sz) = spin_half_ops();
        let s0 = site_operator(&sz, 0, 2);
        // site 0 is the leftmost factor: diag(1/2, 1/2, -1/2, -1/2)
        assert_abs_diff_eq!(s0[(0, 0)].re, 0.5);
        assert_abs_diff_eq!(s0[(1, 1)].re, 0.5);
        assert_abs_diff_eq!(s0[(2, 2)].re, -0.5);
        let s1 = site_operator(&sz, 1, 2);
        assert_abs_diff_eq!(s1[(1, 1)].re, -0.5);
        assert_abs_diff_eq!(s1[(2, 2)].re, 0.5);
    }

    #[test]
    fn pauli_y_is_hermitian() {
        assert!(pauli_y().is_hermitian(1e-15));
        assert_abs_diff_eq!(pauli_y().hermiticity_deviation(), 0.0);
    }
}
