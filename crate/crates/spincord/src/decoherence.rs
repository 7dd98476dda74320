//! Local dephasing dynamics on two-qubit Werner states: Kraus-operator
//! evolution, the closed-form concurrence and discord trajectories, and the
//! sudden-death versus asymptotic-decay comparison between them.

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::qcore::{kron, ComplexMatrix, DensityMatrix, QcoreError};

#[derive(Debug, Error)]
pub enum DecoherenceError {
    #[error("alpha must lie in [0, 1], got {0}")]
    BadAlpha(f64),
    #[error("gamma must lie in [0, 1], got {0}")]
    BadGamma(f64),
    #[error("trajectory needs at least 2 gamma steps")]
    BadSteps,
    #[error(transparent)]
    Core(#[from] QcoreError),
}

/// Werner mixing weight α ∈ [0, 1].
#[derive(Clone, Copy, Debug)]
pub struct WernerParams {
    alpha: f64,
}

impl WernerParams {
    pub fn new(alpha: f64) -> Result<Self, DecoherenceError> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(DecoherenceError::BadAlpha(alpha));
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// Dephasing strength γ = 1 - e^{-Γt} ∈ [0, 1].
#[derive(Clone, Copy, Debug)]
pub struct ChannelParams {
    gamma: f64,
}

impl ChannelParams {
    pub fn from_gamma(gamma: f64) -> Result<Self, DecoherenceError> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(DecoherenceError::BadGamma(gamma));
        }
        Ok(Self { gamma })
    }

    /// Time parameterization: decay rate Γ ≥ 0 and time t ≥ 0; t → ∞ maps
    /// to γ → 1.
    pub fn from_rate_time(rate: f64, t: f64) -> Result<Self, DecoherenceError> {
        if rate < 0.0 || t < 0.0 || rate.is_nan() || t.is_nan() {
            return Err(DecoherenceError::BadGamma(f64::NAN));
        }
        Ok(Self { gamma: 1.0 - (-rate * t).exp() })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Werner state (1-α)·I/4 + α|ψ⁻⟩⟨ψ⁻|. In X-form language:
/// a = d = (1-α)/4, b1 = b2 = (1+α)/4, z = -α/2, f = 0.
pub fn werner(p: &WernerParams) -> DensityMatrix {
    let alpha = p.alpha;
    let mut m = ComplexMatrix::zeros(4);
    let corner = (1.0 - alpha) / 4.0;
    let center = (1.0 + alpha) / 4.0;
    m[(0, 0)] = C64::new(corner, 0.0);
    m[(3, 3)] = C64::new(corner, 0.0);
    m[(1, 1)] = C64::new(center, 0.0);
    m[(2, 2)] = C64::new(center, 0.0);
    m[(1, 2)] = C64::new(-alpha / 2.0, 0.0);
    m[(2, 1)] = C64::new(-alpha / 2.0, 0.0);
    DensityMatrix::new(m, 2).expect("Werner state is valid for alpha in [0, 1]")
}

/// Single-qubit dephasing Kraus pair E₀ = diag(1, √(1-γ)), E₁ = diag(0, √γ).
pub fn kraus_operators(gamma: f64) -> (ComplexMatrix, ComplexMatrix) {
    (
        ComplexMatrix::diagonal(&[1.0, (1.0 - gamma).sqrt()]),
        ComplexMatrix::diagonal(&[0.0, gamma.sqrt()]),
    )
}

/// Applies the local dephasing channel with identical strength γ on both
/// qubits: ρ' = Σ_{μν} (E_μ⊗E_ν) ρ (E_μ⊗E_ν)†. Populations are untouched
/// and the inner coherence picks up the factor (1-γ).
pub fn apply_dephasing(rho: &DensityMatrix, gamma: f64) -> Result<DensityMatrix, DecoherenceError> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(DecoherenceError::BadGamma(gamma));
    }
    assert_eq!(rho.n_sites(), 2, "the channel acts on two qubits");
    let (e0, e1) = kraus_operators(gamma);
    let mut out = ComplexMatrix::zeros(4);
    let mut completeness = ComplexMatrix::zeros(4);
    for left in [&e0, &e1] {
        for right in [&e0, &e1] {
            let k = kron(left, right);
            out = &out + &(&(&k * rho.matrix()) * &k.adjoint());
            completeness = &completeness + &(&k.adjoint() * &k);
        }
    }
    let defect = (&completeness - &ComplexMatrix::identity(4)).max_abs();
    assert!(defect <= 1e-14, "Kraus completeness defect {defect}");
    Ok(DensityMatrix::new(out, 2)?)
}

/// Closed-form concurrence of the dephased Werner state,
/// CN = max(0, α(3/2 - γ) - 1/2). The raw expression goes negative past the
/// sudden-death point and is clamped at zero there.
pub fn concurrence_closed(alpha: f64, gamma: f64) -> f64 {
    assert!((0.0..=1.0).contains(&alpha) && (0.0..=1.0).contains(&gamma));
    (alpha * (1.5 - gamma) - 0.5).max(0.0)
}

/// Closed-form discord of the dephased Werner state:
/// Q = ¼{F(a+b) + F(a-b)} - F(a)/2 with F(x) = x·log₂x, a = 1+α,
/// b = 2α(1-γ).
pub fn discord_closed(alpha: f64, gamma: f64) -> f64 {
    assert!((0.0..=1.0).contains(&alpha) && (0.0..=1.0).contains(&gamma));
    let flog2 = |x: f64| if x > 0.0 { x * x.log2() } else { 0.0 };
    let a = 1.0 + alpha;
    let b = 2.0 * alpha * (1.0 - gamma);
    let q = 0.25 * (flog2(a + b) + flog2(a - b)) - 0.5 * flog2(a);
    debug_assert!(q >= -1e-12);
    q.max(0.0)
}

/// One sampled point of a dephasing trajectory.
#[derive(Clone, Copy, Debug)]
pub struct TrajectoryRow {
    pub gamma: f64,
    pub concurrence: f64,
    pub discord: f64,
}

/// (γ, CN, Q) rows on a uniform γ grid over [0, 1], both endpoints included.
#[derive(Clone, Debug)]
pub struct DephasingTrajectory {
    pub rows: Vec<TrajectoryRow>,
}

/// Samples the closed-form trajectories on `gamma_steps` uniform points.
pub fn trajectory(alpha: f64, gamma_steps: usize) -> Result<DephasingTrajectory, DecoherenceError> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(DecoherenceError::BadAlpha(alpha));
    }
    if gamma_steps < 2 {
        return Err(DecoherenceError::BadSteps);
    }
    let rows = (0..gamma_steps)
        .map(|k| {
            let gamma = k as f64 / (gamma_steps - 1) as f64;
            TrajectoryRow {
                gamma,
                concurrence: concurrence_closed(alpha, gamma),
                discord: discord_closed(alpha, gamma),
            }
        })
        .collect();
    Ok(DephasingTrajectory { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xstate::{wootters_concurrence, XState, X_FORM_TOL};
    use approx::assert_abs_diff_eq;

    #[test]
    fn werner_limits_and_cluster_states() {
        let mixed = werner(&WernerParams::new(0.0).unwrap());
        assert!((mixed.matrix() - DensityMatrix::maximally_mixed(2).matrix()).max_abs() < 1e-15);
        // α = 1/3 is the AFM trimer ground pair state.
        let x = XState::from_matrix(&werner(&WernerParams::new(1.0 / 3.0).unwrap()), X_FORM_TOL)
            .unwrap();
        assert_abs_diff_eq!(x.a(), 1.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x.b1(), 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x.z(), -1.0 / 6.0, epsilon = 1e-15);
        // α = 2/3 is the tetramer n.n. ground pair state for J1 > J2.
        let x = XState::from_matrix(&werner(&WernerParams::new(2.0 / 3.0).unwrap()), X_FORM_TOL)
            .unwrap();
        assert_abs_diff_eq!(x.a(), 1.0 / 12.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x.b1(), 5.0 / 12.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x.z(), -1.0 / 3.0, epsilon = 1e-15);
        assert!(WernerParams::new(1.2).is_err());
    }

    #[test]
    fn channel_params_from_rate_and_time() {
        let ch = ChannelParams::from_rate_time(2.0, 0.0).unwrap();
        assert_abs_diff_eq!(ch.gamma(), 0.0);
        let ch = ChannelParams::from_rate_time(1.0, f64::INFINITY).unwrap();
        assert_abs_diff_eq!(ch.gamma(), 1.0);
        assert!(ChannelParams::from_gamma(1.5).is_err());
        assert!(ChannelParams::from_rate_time(-1.0, 1.0).is_err());
    }

    #[test]
    fn dephasing_identity_and_full_limits() {
        let rho = werner(&WernerParams::new(2.0 / 3.0).unwrap());
        let same = apply_dephasing(&rho, 0.0).unwrap();
        assert!((same.matrix() - rho.matrix()).max_abs() < 1e-15);
        let dead = apply_dephasing(&rho, 1.0).unwrap();
        assert_abs_diff_eq!(dead.matrix()[(1, 2)].norm(), 0.0, epsilon = 1e-15);
        for i in 0..4 {
            assert_abs_diff_eq!(
                dead.matrix()[(i, i)].re,
                rho.matrix()[(i, i)].re,
                epsilon = 1e-15
            );
        }
        assert!(apply_dephasing(&rho, 1.1).is_err());
    }

    #[test]
    fn dephasing_scales_inner_coherence() {
        let rho = werner(&WernerParams::new(2.0 / 3.0).unwrap());
        let out = apply_dephasing(&rho, 0.5).unwrap();
        assert_abs_diff_eq!(out.matrix()[(1, 2)].re, -1.0 / 6.0, epsilon = 1e-15);
    }

    #[test]
    fn closed_concurrence_fixtures() {
        for gamma in [0.0, 0.4, 0.9] {
            assert_abs_diff_eq!(concurrence_closed(1.0 / 3.0, gamma), 0.0);
        }
        assert_abs_diff_eq!(concurrence_closed(2.0 / 3.0, 0.0), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(concurrence_closed(2.0 / 3.0, 0.75), 0.0, epsilon = 1e-15);
        // Against the full Wootters pipeline.
        let rho = apply_dephasing(&werner(&WernerParams::new(2.0 / 3.0).unwrap()), 0.3).unwrap();
        assert_abs_diff_eq!(
            concurrence_closed(2.0 / 3.0, 0.3),
            wootters_concurrence(&rho),
            epsilon = 1e-10
        );
    }

    #[test]
    fn closed_discord_fixtures() {
        assert_abs_diff_eq!(discord_closed(1.0 / 3.0, 0.0), 0.125815, epsilon = 1e-5);
        assert_abs_diff_eq!(discord_closed(0.7, 1.0), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(discord_closed(0.0, 0.4), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn trajectory_shapes() {
        let traj = trajectory(2.0 / 3.0, 101).unwrap();
        for w in traj.rows.windows(2) {
            assert!(w[1].gamma > w[0].gamma);
        }
        for row in &traj.rows {
            if row.gamma >= 0.75 {
                assert_abs_diff_eq!(row.concurrence, 0.0);
            }
            if row.gamma < 1.0 {
                assert!(row.discord > 0.0);
            }
        }
        assert_abs_diff_eq!(traj.rows.last().unwrap().discord, 0.0, epsilon = 1e-12);

        let traj = trajectory(1.0 / 3.0, 101).unwrap();
        assert!(traj.rows.iter().all(|r| r.concurrence == 0.0));
        assert!(trajectory(0.5, 1).is_err());
    }
}
