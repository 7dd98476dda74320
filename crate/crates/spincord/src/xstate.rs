//! Correlation measures on two-qubit states.
//!
//! For X-form states (nonzero entries only on the diagonal and
//! anti-diagonal in the standard basis) the classical correlation and the
//! discord of symmetric states (`a = d`, `b1 = b2`) have closed forms; the
//! general case goes through a numerical maximization over von Neumann
//! measurements on one qubit. Both routes are kept — they cross-check each
//! other on the symmetric family.

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::qcore::{
    eig_hermitian, kron, pauli_x, pauli_y, pauli_z, shannon_bits, von_neumann_entropy,
    ComplexMatrix, DensityMatrix, QcoreError,
};

/// Default tolerance for off-pattern elements in [`XState::from_matrix`].
pub const X_FORM_TOL: f64 = 1e-10;
/// |c4|, |c5| bound for the analytic (symmetric) formulas.
pub const SYMMETRY_TOL: f64 = 1e-9;
/// Default tolerance for the vanishing-discord element conditions.
pub const ZERO_DISCORD_TOL: f64 = 1e-9;

const POPULATION_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-10;
const COHERENCE_SLACK: f64 = 1e-10;
/// Discord values in [-NEGATIVE_CLAMP, 0) are treated as roundoff and
/// reported as 0; anything below that is an internal inconsistency.
const NEGATIVE_CLAMP: f64 = 1e-9;
/// Measurement branches with probability below this contribute nothing.
const BRANCH_EPS: f64 = 1e-14;

#[derive(Debug, Error)]
pub enum XStateError {
    #[error("element ({row},{col}) with magnitude {magnitude:.3e} breaks the X pattern")]
    NotXForm { row: usize, col: usize, magnitude: f64 },
    #[error("coherence has imaginary part {magnitude:.3e} beyond tolerance")]
    ComplexCoherence { magnitude: f64 },
    #[error("analytic form needs c4 = c5 = 0, got c4 = {c4:.3e}, c5 = {c5:.3e}")]
    NotSymmetric { c4: f64, c5: f64 },
    #[error("populations sum to {0}, not 1")]
    BadNormalization(f64),
    #[error("negative population {0}")]
    NegativePopulation(f64),
    #[error("coherence {coherence} exceeds the positivity bound {bound}")]
    CoherenceTooLarge { coherence: f64, bound: f64 },
    #[error(transparent)]
    Core(#[from] QcoreError),
}

/// Two-qubit X state in the basis {↑↑, ↑↓, ↓↑, ↓↓}:
///
/// ```text
///     ⎛ a   0   0   f  ⎞
///     ⎜ 0   b1  z   0  ⎟
///     ⎜ 0   z   b2  0  ⎟
///     ⎝ f   0   0   d  ⎠
/// ```
///
/// with real coherences `z` (inner) and `f` (outer).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XState {
    a: f64,
    b1: f64,
    b2: f64,
    d: f64,
    z: f64,
    f: f64,
}

/// The correlation-function combinations entering the closed forms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coefficients {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    pub c5: f64,
}

impl XState {
    pub fn new(a: f64, b1: f64, b2: f64, d: f64, z: f64, f: f64) -> Result<Self, XStateError> {
        for &p in &[a, b1, b2, d] {
            if p < -POPULATION_TOL {
                return Err(XStateError::NegativePopulation(p));
            }
        }
        let sum = a + b1 + b2 + d;
        if (sum - 1.0).abs() > TRACE_TOL {
            return Err(XStateError::BadNormalization(sum));
        }
        let inner_bound = (b1.max(0.0) * b2.max(0.0)).sqrt() + COHERENCE_SLACK;
        if z.abs() > inner_bound {
            return Err(XStateError::CoherenceTooLarge { coherence: z, bound: inner_bound });
        }
        let outer_bound = (a.max(0.0) * d.max(0.0)).sqrt() + COHERENCE_SLACK;
        if f.abs() > outer_bound {
            return Err(XStateError::CoherenceTooLarge { coherence: f, bound: outer_bound });
        }
        Ok(Self { a, b1, b2, d, z, f })
    }

    /// Extracts the X elements from a two-qubit state. Every off-pattern
    /// element and every coherence imaginary part must be within `tol`
    /// ([`X_FORM_TOL`] is the usual choice).
    pub fn from_matrix(rho: &DensityMatrix, tol: f64) -> Result<Self, XStateError> {
        assert_eq!(rho.n_sites(), 2, "X form is a two-qubit notion");
        let m = rho.matrix();
        const X_SLOTS: [(usize, usize); 8] =
            [(0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (3, 0), (1, 2), (2, 1)];
        for row in 0..4 {
            for col in 0..4 {
                if X_SLOTS.contains(&(row, col)) {
                    continue;
                }
                let magnitude = m[(row, col)].norm();
                if magnitude > tol {
                    return Err(XStateError::NotXForm { row, col, magnitude });
                }
            }
        }
        let z = m[(1, 2)];
        let f = m[(0, 3)];
        if z.im.abs() > tol {
            return Err(XStateError::ComplexCoherence { magnitude: z.im.abs() });
        }
        if f.im.abs() > tol {
            return Err(XStateError::ComplexCoherence { magnitude: f.im.abs() });
        }
        Self::new(m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re, z.re, f.re)
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b1(&self) -> f64 {
        self.b1
    }
    pub fn b2(&self) -> f64 {
        self.b2
    }
    pub fn d(&self) -> f64 {
        self.d
    }
    pub fn z(&self) -> f64 {
        self.z
    }
    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn coefficients(&self) -> Coefficients {
        Coefficients {
            c1: 2.0 * self.z + 2.0 * self.f,
            c2: 2.0 * self.z - 2.0 * self.f,
            c3: self.a + self.d - self.b1 - self.b2,
            c4: self.a - self.d - self.b1 + self.b2,
            c5: self.a - self.d + self.b1 - self.b2,
        }
    }

    /// Rebuilds the 4x4 density matrix.
    pub fn to_density(&self) -> Result<DensityMatrix, XStateError> {
        let mut m = ComplexMatrix::zeros(4);
        m[(0, 0)] = C64::new(self.a, 0.0);
        m[(1, 1)] = C64::new(self.b1, 0.0);
        m[(2, 2)] = C64::new(self.b2, 0.0);
        m[(3, 3)] = C64::new(self.d, 0.0);
        m[(1, 2)] = C64::new(self.z, 0.0);
        m[(2, 1)] = C64::new(self.z, 0.0);
        m[(0, 3)] = C64::new(self.f, 0.0);
        m[(3, 0)] = C64::new(self.f, 0.0);
        Ok(DensityMatrix::new(m, 2)?)
    }
}

/// x·log₂x with the 0·log₂0 ≡ 0 convention (also absorbs tiny negative
/// arguments coming from roundoff).
fn flog2(x: f64) -> f64 {
    if x > 0.0 {
        x * x.log2()
    } else {
        0.0
    }
}

fn binary_entropy(p: f64) -> f64 {
    -flog2(p) - flog2(1.0 - p)
}

/// Eigenvalues λ₀..λ₃ of the X matrix from the coefficient combinations.
pub fn xstate_eigenvalues(x: &XState) -> [f64; 4] {
    let co = x.coefficients();
    let outer = ((co.c4 + co.c5).powi(2) + (co.c1 - co.c2).powi(2)).sqrt();
    let inner = ((co.c4 - co.c5).powi(2) + (co.c1 + co.c2).powi(2)).sqrt();
    [
        0.25 * (1.0 + co.c3 + outer),
        0.25 * (1.0 + co.c3 - outer),
        0.25 * (1.0 - co.c3 + inner),
        0.25 * (1.0 - co.c3 - inner),
    ]
}

/// Total correlation I = S(ρ_A) + S(ρ_B) + Σ λ log₂ λ in bits.
pub fn mutual_information(x: &XState) -> f64 {
    let co = x.coefficients();
    let s_a = binary_entropy(0.5 * (1.0 + co.c5));
    let s_b = binary_entropy(0.5 * (1.0 + co.c4));
    let lambda_term: f64 = xstate_eigenvalues(x).iter().map(|&l| flog2(l)).sum();
    s_a + s_b + lambda_term
}

/// Closed-form classical correlation for symmetric X states
/// (valid when c4 = c5 = 0):
/// C = (1-c)/2·log₂(1-c) + (1+c)/2·log₂(1+c), c = max(|c1|,|c2|,|c3|).
pub fn classical_correlation_symmetric(x: &XState) -> Result<f64, XStateError> {
    let co = require_symmetric(x)?;
    let c = co.c1.abs().max(co.c2.abs()).max(co.c3.abs());
    Ok(0.5 * flog2(1.0 - c) + 0.5 * flog2(1.0 + c))
}

/// Closed-form discord for symmetric X states:
/// Q = ¼ Σ (1 ± cᵢ ± cⱼ) log₂(1 ± cᵢ ± cⱼ) minus the classical term.
pub fn discord_symmetric(x: &XState) -> Result<f64, XStateError> {
    let co = require_symmetric(x)?;
    let total = 0.25
        * (flog2(1.0 - co.c1 - co.c2 - co.c3)
            + flog2(1.0 - co.c1 + co.c2 + co.c3)
            + flog2(1.0 + co.c1 - co.c2 + co.c3)
            + flog2(1.0 + co.c1 + co.c2 - co.c3));
    let classical = classical_correlation_symmetric(x)?;
    Ok(clamp_discord(total - classical))
}

fn require_symmetric(x: &XState) -> Result<Coefficients, XStateError> {
    let co = x.coefficients();
    if co.c4.abs() > SYMMETRY_TOL || co.c5.abs() > SYMMETRY_TOL {
        return Err(XStateError::NotSymmetric { c4: co.c4, c5: co.c5 });
    }
    Ok(co)
}

fn clamp_discord(q: f64) -> f64 {
    if q >= 0.0 {
        q
    } else if q >= -NEGATIVE_CLAMP {
        0.0
    } else {
        panic!("discord computed as {q}, beyond the roundoff clamp — internal inconsistency");
    }
}

/// Concurrence of an X state:
/// CN = 2·max(0, |z| - √(a·d), |f| - √(b1·b2)).
pub fn concurrence(x: &XState) -> f64 {
    let inner = x.z.abs() - (x.a.max(0.0) * x.d.max(0.0)).sqrt();
    let outer = x.f.abs() - (x.b1.max(0.0) * x.b2.max(0.0)).sqrt();
    2.0 * inner.max(outer).max(0.0)
}

/// Wootters concurrence from the full definition: the decreasing square
/// roots s_i of the eigenvalues of ρ·(σy⊗σy)ρ*(σy⊗σy) give
/// CN = max(0, s₁ - s₂ - s₃ - s₄). Works for any two-qubit state, X or not.
pub fn wootters_concurrence(rho: &DensityMatrix) -> f64 {
    assert_eq!(rho.n_sites(), 2, "concurrence is a two-qubit measure");
    let yy = kron(&pauli_y(), &pauli_y());
    let rho_tilde = &(&yy * &rho.matrix().conj()) * &yy;
    // spec(ρ ρ̃) equals spec(√ρ ρ̃ √ρ), and the latter is Hermitian PSD.
    let sqrt_rho = matrix_sqrt_psd(rho.matrix());
    let m = &(&sqrt_rho * &rho_tilde) * &sqrt_rho;
    let spectrum = eig_hermitian(&m).expect("√ρ·ρ̃·√ρ is Hermitian");
    let s: Vec<f64> = spectrum.values.iter().map(|&v| v.max(0.0).sqrt()).collect();
    (s[3] - s[2] - s[1] - s[0]).max(0.0)
}

fn matrix_sqrt_psd(m: &ComplexMatrix) -> ComplexMatrix {
    let spectrum = eig_hermitian(m).expect("PSD input is Hermitian");
    let n = m.dim();
    let mut out = ComplexMatrix::zeros(n);
    for (k, &v) in spectrum.values.iter().enumerate() {
        let root = v.max(0.0).sqrt();
        if root == 0.0 {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] +=
                    spectrum.vectors[(i, k)] * spectrum.vectors[(j, k)].conj() * root;
            }
        }
    }
    out
}

/// Element conditions under which the X state carries no discord:
/// |f| = |z|, a = b₂ and d = b₁, each within `tol`.
///
/// With the basis convention used here the conditions certify that the
/// *first* qubit can be measured without disturbance; for the symmetric
/// cluster states (a = d, b1 = b2) they apply to either side.
pub fn is_zero_discord(x: &XState, tol: f64) -> bool {
    (x.f.abs() - x.z.abs()).abs() <= tol
        && (x.a - x.b2).abs() <= tol
        && (x.d - x.b1).abs() <= tol
}

/// A von Neumann measurement direction on the Bloch sphere. The projector
/// pair is Π_± = (I ± n̂·σ)/2 with n̂ = (sinθcosφ, sinθsinφ, cosθ).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Measurement {
    pub theta: f64,
    pub phi: f64,
}

impl Measurement {
    /// Returns (Π₊, Π₋) with Π₋ = I - Π₊ exactly.
    pub fn projectors(&self) -> (ComplexMatrix, ComplexMatrix) {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        let n = [st * cp, st * sp, ct];
        let half = |m: ComplexMatrix, w: f64| m.scale(0.5 * w);
        let plus = &(&half(ComplexMatrix::identity(2), 1.0)
            + &half(pauli_x(), n[0]))
            + &(&half(pauli_y(), n[1]) + &half(pauli_z(), n[2]));
        let minus = &ComplexMatrix::identity(2) - &plus;
        (plus, minus)
    }
}

/// Which qubit the projective measurement acts on. The paper's convention is
/// B, the second tensor factor; A is exposed for asymmetric states where the
/// choice matters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasuredQubit {
    A,
    B,
}

/// Search knobs for the measurement maximization: exhaustive (θ, φ) grid
/// followed by alternating golden-section refinement around the best cell.
#[derive(Clone, Copy, Debug)]
pub struct MeasurementSearch {
    pub grid_theta: usize,
    pub grid_phi: usize,
    pub refine_iters: usize,
    pub measured: MeasuredQubit,
}

impl Default for MeasurementSearch {
    fn default() -> Self {
        Self { grid_theta: 64, grid_phi: 128, refine_iters: 40, measured: MeasuredQubit::B }
    }
}

/// How a [`CorrelationReport`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    AnalyticSymmetric,
    NumericProjective,
}

/// The (I, C, Q) triple plus concurrence for one state.
#[derive(Clone, Copy, Debug)]
pub struct CorrelationReport {
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub discord: f64,
    pub concurrence: f64,
    pub method: Method,
}

/// Full analytic report for a symmetric X state.
pub fn report_symmetric(x: &XState) -> Result<CorrelationReport, XStateError> {
    Ok(CorrelationReport {
        mutual_information: mutual_information(x),
        classical_correlation: classical_correlation_symmetric(x)?,
        discord: discord_symmetric(x)?,
        concurrence: concurrence(x),
        method: Method::AnalyticSymmetric,
    })
}

/// Single-qubit marginals of a two-qubit matrix (A = first factor).
fn marginal_a(m: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(2, |i, j| m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)])
}

fn marginal_b(m: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(2, |i, j| m[(i, j)] + m[(2 + i, 2 + j)])
}

/// Entropy of a 2x2 Hermitian matrix from its closed-form eigenvalues.
fn entropy2(m: &ComplexMatrix) -> f64 {
    let tr = (m[(0, 0)].re + m[(1, 1)].re) * 0.5;
    let det = m[(0, 0)].re * m[(1, 1)].re - m[(0, 1)].norm_sqr();
    let gap = (tr * tr - det).max(0.0).sqrt();
    shannon_bits(&[tr + gap, tr - gap])
}

/// Reorders a two-qubit matrix so the second qubit becomes the first.
fn swap_qubits(m: &ComplexMatrix) -> ComplexMatrix {
    let perm = [0usize, 2, 1, 3];
    ComplexMatrix::from_fn(4, |i, j| m[(perm[i], perm[j])])
}

/// Measured conditional entropy Σᵢ pᵢ S(ρᵢ) for projectors on qubit B of
/// `m` (4x4, B = second factor). Branches with pᵢ ≈ 0 contribute zero.
fn conditional_entropy(m: &ComplexMatrix, meas: &Measurement) -> f64 {
    let (plus, minus) = meas.projectors();
    let mut acc = 0.0;
    for proj in [plus, minus] {
        let full = kron(&ComplexMatrix::identity(2), &proj);
        let branch = &(&full * m) * &full;
        let p = branch.trace().re;
        if p > BRANCH_EPS {
            acc += p * entropy2(&marginal_a(&branch).scale(1.0 / p));
        }
    }
    acc
}

/// Classical correlation by direct maximization of
/// J = S(ρ_A) - Σᵢ pᵢ S(ρᵢ) over projective measurements on one qubit.
/// Ties on the scan grid resolve to the smallest θ, then the smallest φ.
pub fn classical_correlation_numeric(
    rho: &DensityMatrix,
    search: &MeasurementSearch,
) -> (f64, Measurement) {
    assert_eq!(rho.n_sites(), 2, "need a two-qubit state");
    assert!(search.grid_theta >= 16 && search.grid_phi >= 16, "scan grids must be >= 16");
    let m = match search.measured {
        MeasuredQubit::B => rho.matrix().clone(),
        MeasuredQubit::A => swap_qubits(rho.matrix()),
    };
    let s_a = entropy2(&marginal_a(&m));
    let objective = |theta: f64, phi: f64| s_a - conditional_entropy(&m, &Measurement { theta, phi });

    let d_theta = std::f64::consts::PI / (search.grid_theta - 1) as f64;
    let d_phi = 2.0 * std::f64::consts::PI / search.grid_phi as f64;
    let mut best = f64::NEG_INFINITY;
    let mut arg = Measurement { theta: 0.0, phi: 0.0 };
    for k in 0..search.grid_theta {
        let theta = k as f64 * d_theta;
        for l in 0..search.grid_phi {
            let phi = l as f64 * d_phi;
            let value = objective(theta, phi);
            if value > best {
                best = value;
                arg = Measurement { theta, phi };
            }
        }
    }

    if search.refine_iters > 0 {
        let mut theta = arg.theta;
        let mut phi = arg.phi;
        for _ in 0..3 {
            let (t, vt) = golden_max(
                |t| objective(t, phi),
                (theta - d_theta).max(0.0),
                (theta + d_theta).min(std::f64::consts::PI),
                search.refine_iters,
            );
            if vt > best {
                best = vt;
                theta = t;
                arg = Measurement { theta, phi };
            }
            let (p, vp) = golden_max(|p| objective(theta, p), phi - d_phi, phi + d_phi,
                search.refine_iters);
            if vp > best {
                best = vp;
                phi = p;
                arg = Measurement { theta, phi };
            }
        }
    }
    (best.max(0.0), arg)
}

/// Golden-section maximization of a smooth 1-D slice; returns the best
/// sampled (argument, value).
fn golden_max(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, iters: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Numeric discord Q = I - C with I from the entropies of ρ_A, ρ_B, ρ_AB
/// (valid beyond the X form) and C from [`classical_correlation_numeric`].
pub fn discord_numeric(rho: &DensityMatrix, search: &MeasurementSearch) -> CorrelationReport {
    let m = rho.matrix();
    let info = entropy2(&marginal_a(m)) + entropy2(&marginal_b(m)) - von_neumann_entropy(rho);
    let (classical, _) = classical_correlation_numeric(rho, search);
    let discord = clamp_discord(info - classical);
    CorrelationReport {
        mutual_information: info,
        classical_correlation: classical,
        discord,
        concurrence: wootters_concurrence(rho),
        method: Method::NumericProjective,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn afm_trimer_pair() -> XState {
        XState::new(1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0, -1.0 / 6.0, 0.0).unwrap()
    }

    fn fm_trimer_pair() -> XState {
        XState::new(1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0, 1.0 / 6.0, 0.0).unwrap()
    }

    fn singlet() -> XState {
        XState::new(0.0, 0.5, 0.5, 0.0, -0.5, 0.0).unwrap()
    }

    #[test]
    fn from_matrix_roundtrip_and_fixtures() {
        let rho = afm_trimer_pair().to_density().unwrap();
        let x = XState::from_matrix(&rho, X_FORM_TOL).unwrap();
        assert_abs_diff_eq!(x.a(), 1.0 / 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(x.b1(), 1.0 / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(x.z(), -1.0 / 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(x.f(), 0.0, epsilon = 1e-14);

        let mixed = XState::from_matrix(&DensityMatrix::maximally_mixed(2), X_FORM_TOL).unwrap();
        assert_eq!(mixed, XState::new(0.25, 0.25, 0.25, 0.25, 0.0, 0.0).unwrap());
    }

    #[test]
    fn from_matrix_rejects_off_pattern() {
        let mut m = ComplexMatrix::diagonal(&[0.25, 0.25, 0.25, 0.25]);
        m[(0, 1)] = C64::new(0.05, 0.0);
        m[(1, 0)] = C64::new(0.05, 0.0);
        let rho = DensityMatrix::new(m, 2).unwrap();
        assert!(matches!(
            XState::from_matrix(&rho, X_FORM_TOL),
            Err(XStateError::NotXForm { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn from_matrix_rejects_complex_coherence() {
        let mut m = ComplexMatrix::diagonal(&[0.25, 0.25, 0.25, 0.25]);
        m[(1, 2)] = C64::new(0.0, 0.1);
        m[(2, 1)] = C64::new(0.0, -0.1);
        let rho = DensityMatrix::new(m, 2).unwrap();
        assert!(matches!(
            XState::from_matrix(&rho, X_FORM_TOL),
            Err(XStateError::ComplexCoherence { .. })
        ));
    }

    #[test]
    fn invalid_states_rejected() {
        assert!(matches!(
            XState::new(0.5, 0.5, 0.25, -0.25, 0.0, 0.0),
            Err(XStateError::NegativePopulation(_))
        ));
        assert!(matches!(
            XState::new(0.3, 0.3, 0.3, 0.3, 0.0, 0.0),
            Err(XStateError::BadNormalization(_))
        ));
        assert!(matches!(
            XState::new(0.25, 0.25, 0.25, 0.25, 0.4, 0.0),
            Err(XStateError::CoherenceTooLarge { .. })
        ));
    }

    #[test]
    fn eigenvalues_of_paper_states() {
        let mut l = xstate_eigenvalues(&afm_trimer_pair());
        l.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for k in 0..3 {
            assert_abs_diff_eq!(l[k], 1.0 / 6.0, epsilon = 1e-14);
        }
        assert_abs_diff_eq!(l[3], 0.5, epsilon = 1e-14);

        let mut l = xstate_eigenvalues(&fm_trimer_pair());
        l.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_abs_diff_eq!(l[0], 0.0, epsilon = 1e-14);
        for k in 1..4 {
            assert_abs_diff_eq!(l[k], 1.0 / 3.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn eigenvalues_match_dense_solver() {
        let x = XState::new(0.1, 0.35, 0.3, 0.25, -0.2, 0.05).unwrap();
        let mut analytic = xstate_eigenvalues(&x);
        analytic.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let dense = eig_hermitian(x.to_density().unwrap().matrix()).unwrap();
        for k in 0..4 {
            assert_abs_diff_eq!(analytic[k], dense.values[k], epsilon = 1e-12);
        }
        let sum: f64 = analytic.iter().sum();
        assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn mutual_information_fixtures() {
        assert_abs_diff_eq!(mutual_information(&afm_trimer_pair()), 0.2075, epsilon = 1e-4);
        assert_abs_diff_eq!(mutual_information(&fm_trimer_pair()), 0.4150, epsilon = 1e-4);
        let uncorrelated = XState::new(0.25, 0.25, 0.25, 0.25, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(mutual_information(&uncorrelated), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn classical_correlation_fixtures() {
        assert_abs_diff_eq!(
            classical_correlation_symmetric(&afm_trimer_pair()).unwrap(),
            0.0817,
            epsilon = 1e-4
        );
        // Tetramer n.n. ground pair for J1 > J2 has c = 2/3.
        let nn = XState::new(1.0 / 12.0, 5.0 / 12.0, 5.0 / 12.0, 1.0 / 12.0, -1.0 / 3.0, 0.0)
            .unwrap();
        assert_abs_diff_eq!(classical_correlation_symmetric(&nn).unwrap(), 0.3500, epsilon = 1e-4);
        let c_zero = XState::new(0.25, 0.25, 0.25, 0.25, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(classical_correlation_symmetric(&c_zero).unwrap(), 0.0);
    }

    #[test]
    fn discord_fixtures() {
        assert_abs_diff_eq!(discord_symmetric(&afm_trimer_pair()).unwrap(), 0.125815, epsilon = 1e-5);
        assert_abs_diff_eq!(discord_symmetric(&fm_trimer_pair()).unwrap(), 1.0 / 3.0, epsilon = 1e-4);
        let nn = XState::new(1.0 / 12.0, 5.0 / 12.0, 5.0 / 12.0, 1.0 / 12.0, -1.0 / 3.0, 0.0)
            .unwrap();
        assert_abs_diff_eq!(discord_symmetric(&nn).unwrap(), 0.4425, epsilon = 1e-4);
        assert_abs_diff_eq!(discord_symmetric(&singlet()).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn asymmetric_state_rejected_by_closed_form() {
        let x = XState::new(0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, -1.0 / 6.0, 0.0).unwrap();
        assert!(matches!(
            discord_symmetric(&x),
            Err(XStateError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn numeric_matches_analytic_on_symmetric_state() {
        let rho = afm_trimer_pair().to_density().unwrap();
        let search = MeasurementSearch::default();
        let (c, _) = classical_correlation_numeric(&rho, &search);
        assert_abs_diff_eq!(
            c,
            classical_correlation_symmetric(&afm_trimer_pair()).unwrap(),
            epsilon = 1e-6
        );
        let report = discord_numeric(&rho, &search);
        assert_abs_diff_eq!(
            report.discord,
            discord_symmetric(&afm_trimer_pair()).unwrap(),
            epsilon = 1e-6
        );
    }

    #[test]
    fn numeric_discord_of_in_field_ground_state() {
        // a = 0, d = 1/3, b1 = b2 = 1/3, z = -1/6.
        let x = XState::new(0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, -1.0 / 6.0, 0.0).unwrap();
        let report = discord_numeric(&x.to_density().unwrap(), &MeasurementSearch::default());
        assert_abs_diff_eq!(report.discord, 0.125815, epsilon = 1e-5);
    }

    #[test]
    fn numeric_discord_of_field_qpt_state() {
        let x = XState::new(0.0, 2.0 / 9.0, 2.0 / 9.0, 5.0 / 9.0, -1.0 / 9.0, 0.0).unwrap();
        let report = discord_numeric(&x.to_density().unwrap(), &MeasurementSearch::default());
        assert_abs_diff_eq!(report.discord, 0.0838764, epsilon = 1e-5);
    }

    #[test]
    fn product_state_has_no_correlations() {
        let a = ComplexMatrix::diagonal(&[0.7, 0.3]);
        let b = ComplexMatrix::diagonal(&[0.2, 0.8]);
        let rho = DensityMatrix::new(kron(&a, &b), 2).unwrap();
        let search = MeasurementSearch::default();
        let (c, _) = classical_correlation_numeric(&rho, &search);
        assert_abs_diff_eq!(c, 0.0, epsilon = 1e-12);
        let report = discord_numeric(&rho, &search);
        assert_abs_diff_eq!(report.discord, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn all_down_product_state_has_zero_discord() {
        let mut amp = [C64::new(0.0, 0.0); 4];
        amp[3] = C64::new(1.0, 0.0);
        let rho = DensityMatrix::pure(&amp, 2).unwrap();
        let report = discord_numeric(&rho, &MeasurementSearch::default());
        assert_abs_diff_eq!(report.discord, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn concurrence_fixtures() {
        assert_abs_diff_eq!(concurrence(&singlet()), 1.0);
        assert_abs_diff_eq!(concurrence(&afm_trimer_pair()), 0.0);
        // Werner α = 2/3 before dephasing.
        let w = XState::new(1.0 / 12.0, 5.0 / 12.0, 5.0 / 12.0, 1.0 / 12.0, -1.0 / 3.0, 0.0)
            .unwrap();
        assert_abs_diff_eq!(concurrence(&w), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(
            wootters_concurrence(&w.to_density().unwrap()),
            0.5,
            epsilon = 1e-10
        );
    }

    #[test]
    fn zero_discord_conditions() {
        let mixed = XState::new(0.25, 0.25, 0.25, 0.25, 0.0, 0.0).unwrap();
        assert!(is_zero_discord(&mixed, ZERO_DISCORD_TOL));
        assert!(!is_zero_discord(&afm_trimer_pair(), ZERO_DISCORD_TOL));
    }

    #[test]
    fn zero_discord_state_has_zero_discord_on_classical_side() {
        // a = b2, d = b1, f = z with b1 != b2: classical on qubit A.
        let (b1, b2) = (0.1, 0.4);
        let x = XState::new(b2, b1, b2, b1, 0.1, 0.1).unwrap();
        assert!(is_zero_discord(&x, ZERO_DISCORD_TOL));
        let rho = x.to_density().unwrap();
        let search = MeasurementSearch { measured: MeasuredQubit::A, ..Default::default() };
        let report = discord_numeric(&rho, &search);
        assert!(report.discord <= 1e-5, "discord on A side = {}", report.discord);
    }

    #[test]
    fn report_symmetric_is_consistent() {
        let report = report_symmetric(&afm_trimer_pair()).unwrap();
        let residual = report.mutual_information
            - (report.classical_correlation + report.discord);
        assert!(residual.abs() <= 1e-9);
        assert_eq!(report.method, Method::AnalyticSymmetric);
    }
}
