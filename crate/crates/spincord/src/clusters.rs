//! Heisenberg trimer and tetramer clusters: Hamiltonians, analytic spectra,
//! ground / thermal reduced pair states, and parameter scans across the
//! first-order transition points.
//!
//! Units: k_B = 1, temperatures in |J|/k_B, energies in units of J.

use thiserror::Error;

use crate::qcore::{
    ground_state_mixture, partial_trace_pair, site_operator, spin_half_ops, thermal_state,
    ComplexMatrix, DensityMatrix, QcoreError,
};
use crate::xstate::{
    discord_numeric, report_symmetric, CorrelationReport, MeasurementSearch, XState, XStateError,
};

/// Parameter-space tolerance for sitting exactly on a degeneracy boundary.
const BOUNDARY_TOL: f64 = 1e-12;
const EPSILON_SLACK: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum ClusterError {
    #[error("anisotropy must satisfy epsilon <= 1, got {0}")]
    BadEpsilon(f64),
    #[error("magnetic field must be >= 0, got {0}")]
    BadField(f64),
    #[error("temperature must be >= 0, got {0}")]
    BadTemperature(f64),
    #[error("exchange couplings must be > 0, got J1 = {0}, J2 = {1}")]
    BadExchange(f64, f64),
    #[error("analytic thermal elements require h = 0, got h = {0}")]
    FieldNotSupported(f64),
    #[error("analytic thermal elements require T > 0")]
    ZeroTemperature,
    #[error("scan needs at least 2 steps and a finite range")]
    BadScan,
    #[error(transparent)]
    XState(#[from] XStateError),
    #[error(transparent)]
    Core(#[from] QcoreError),
}

/// Symmetric trimer: J Σ SᶻSᶻ + εJ Σ (SˣSˣ + SʸSʸ) + h Σ Sᶻ on a
/// periodic three-site ring. J > 0 is AFM, J < 0 FM.
#[derive(Clone, Copy, Debug)]
pub struct TrimerParams {
    j: f64,
    epsilon: f64,
    h: f64,
    t: f64,
}

impl TrimerParams {
    pub fn new(j: f64, epsilon: f64, h: f64, t: f64) -> Result<Self, ClusterError> {
        if !epsilon.is_finite() || epsilon > 1.0 + EPSILON_SLACK {
            return Err(ClusterError::BadEpsilon(epsilon));
        }
        if !h.is_finite() || h < 0.0 {
            return Err(ClusterError::BadField(h));
        }
        if !t.is_finite() || t < 0.0 {
            return Err(ClusterError::BadTemperature(t));
        }
        Ok(Self { j, epsilon, h, t })
    }

    pub fn j(&self) -> f64 {
        self.j
    }
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
    pub fn h(&self) -> f64 {
        self.h
    }
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn with_field(&self, h: f64) -> Result<Self, ClusterError> {
        Self::new(self.j, self.epsilon, h, self.t)
    }

    pub fn with_temperature(&self, t: f64) -> Result<Self, ClusterError> {
        Self::new(self.j, self.epsilon, self.h, t)
    }
}

/// Tetramer ring with n.n. exchange J1 and diagonal (n.n.n.) exchange J2,
/// both antiferromagnetic.
#[derive(Clone, Copy, Debug)]
pub struct TetramerParams {
    j1: f64,
    j2: f64,
    t: f64,
}

impl TetramerParams {
    pub fn new(j1: f64, j2: f64, t: f64) -> Result<Self, ClusterError> {
        if !(j1 > 0.0 && j2 > 0.0) || !j1.is_finite() || !j2.is_finite() {
            return Err(ClusterError::BadExchange(j1, j2));
        }
        if !t.is_finite() || t < 0.0 {
            return Err(ClusterError::BadTemperature(t));
        }
        Ok(Self { j1, j2, t })
    }

    pub fn j1(&self) -> f64 {
        self.j1
    }
    pub fn j2(&self) -> f64 {
        self.j2
    }
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn with_temperature(&self, t: f64) -> Result<Self, ClusterError> {
        Self::new(self.j1, self.j2, t)
    }
}

/// Which tetramer pair to reduce onto: a ring edge or a diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    Nn,
    Nnn,
}

impl PairKind {
    /// Canonical site pair used for reductions.
    pub fn sites(&self) -> (usize, usize) {
        match self {
            PairKind::Nn => (0, 1),
            PairKind::Nnn => (0, 2),
        }
    }
}

/// jz·SᶻᵢSᶻⱼ + jxy·(SˣᵢSˣⱼ + SʸᵢSʸⱼ) embedded in an n-site register.
fn exchange_bond(n_sites: usize, i: usize, j: usize, jz: f64, jxy: f64) -> ComplexMatrix {
    let (sx, sy, sz) = spin_half_ops();
    let term = |op: &ComplexMatrix, w: f64| {
        (&site_operator(op, i, n_sites) * &site_operator(op, j, n_sites)).scale(w)
    };
    &(&term(&sz, jz) + &term(&sx, jxy)) + &term(&sy, jxy)
}

/// The 8x8 trimer Hamiltonian.
pub fn trimer_hamiltonian(p: &TrimerParams) -> ComplexMatrix {
    let bonds = [(0usize, 1usize), (1, 2), (2, 0)];
    let mut h = ComplexMatrix::zeros(8);
    for &(i, j) in &bonds {
        h = &h + &exchange_bond(3, i, j, p.j, p.epsilon * p.j);
    }
    if p.h != 0.0 {
        let (_, _, sz) = spin_half_ops();
        for site in 0..3 {
            h = &h + &site_operator(&sz, site, 3).scale(p.h);
        }
    }
    h
}

/// Closed-form trimer energies E₁..E₈, field shifts included.
pub fn trimer_spectrum_analytic(p: &TrimerParams) -> [f64; 8] {
    let (j, eps, h) = (p.j, p.epsilon, p.h);
    let e_plus = -(1.0 + 2.0 * eps) * j / 4.0;
    let e_minus = -(1.0 - 4.0 * eps) * j / 4.0;
    [
        0.75 * j + 1.5 * h,
        0.5 * h + e_plus,
        0.5 * h + e_plus,
        0.5 * h + e_minus,
        -0.5 * h + e_plus,
        -0.5 * h + e_plus,
        -0.5 * h + e_minus,
        0.75 * j - 1.5 * h,
    ]
}

/// The 16x16 tetramer Hamiltonian.
pub fn tetramer_hamiltonian(p: &TetramerParams) -> ComplexMatrix {
    let edges = [(0usize, 1usize), (1, 2), (2, 3), (3, 0)];
    let diagonals = [(0usize, 2usize), (1, 3)];
    let mut h = ComplexMatrix::zeros(16);
    for &(i, j) in &edges {
        h = &h + &exchange_bond(4, i, j, p.j1, p.j1);
    }
    for &(i, j) in &diagonals {
        h = &h + &exchange_bond(4, i, j, p.j2, p.j2);
    }
    h
}

/// Distinct tetramer levels as (energy, multiplicity), multiplicities
/// (5, 6, 3, 1, 1).
pub fn tetramer_spectrum_analytic(p: &TetramerParams) -> [(f64, usize); 5] {
    let (j1, j2) = (p.j1, p.j2);
    [
        (j1 + 0.5 * j2, 5),
        (-0.5 * j2, 6),
        (-j1 + 0.5 * j2, 3),
        (-1.5 * j2, 1),
        (-2.0 * j1 + 0.5 * j2, 1),
    ]
}

/// Largest exponent is factored out before summing, so arbitrarily large β
/// cannot overflow; the ratios are unchanged.
fn shifted_weights(exponents: &[f64]) -> Vec<f64> {
    let m = exponents.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    exponents.iter().map(|&e| (e - m).exp()).collect()
}

/// Analytic zero-field thermal pair state of the trimer, from the printed
/// Boltzmann-weighted elements with γ = J/(4k_BT).
pub fn trimer_thermal_xstate(p: &TrimerParams) -> Result<XState, ClusterError> {
    if p.h != 0.0 {
        return Err(ClusterError::FieldNotSupported(p.h));
    }
    if p.t <= 0.0 {
        return Err(ClusterError::ZeroTemperature);
    }
    let gamma = p.j / (4.0 * p.t);
    let w = shifted_weights(&[
        -3.0 * gamma,
        (1.0 + 2.0 * p.epsilon) * gamma,
        (1.0 - 4.0 * p.epsilon) * gamma,
    ]);
    let z_fn = 2.0 * (w[0] + 2.0 * w[1] + w[2]);
    let a = (w[0] + 2.0 / 3.0 * w[1] + 1.0 / 3.0 * w[2]) / z_fn;
    let b = 2.0 / 3.0 * (2.0 * w[1] + w[2]) / z_fn;
    let z = 2.0 / 3.0 * (w[2] - w[1]) / z_fn;
    Ok(XState::new(a, b, b, a, z, 0.0)?)
}

/// Ground-state two-site reduction (sites 0, 1; the trimer is symmetric).
/// Degenerate manifolds enter as the equal-weight mixture.
pub fn trimer_ground_rdm(p: &TrimerParams) -> Result<DensityMatrix, ClusterError> {
    let h = trimer_hamiltonian(p);
    let ground = ground_state_mixture(&h, None)?;
    Ok(partial_trace_pair(&ground, 0, 1)?)
}

/// Full-pipeline pair state at the params' temperature (T = 0 routes to the
/// ground-state mixture rather than β = ∞), any field.
pub fn trimer_pair_rdm(p: &TrimerParams) -> Result<DensityMatrix, ClusterError> {
    if p.t == 0.0 {
        return trimer_ground_rdm(p);
    }
    let h = trimer_hamiltonian(p);
    let rho = thermal_state(&h, 1.0 / p.t)?;
    Ok(partial_trace_pair(&rho, 0, 1)?)
}

/// Analytic tetramer ground-state pair elements. The three branches are the
/// RVB ground states on either side of J1 = J2 and their equal mixture at
/// the transition (|J1 - J2| ≤ 1e-12).
pub fn tetramer_ground_rdm(p: &TetramerParams, pair: PairKind) -> Result<XState, ClusterError> {
    let x = if (p.j1 - p.j2).abs() <= BOUNDARY_TOL {
        XState::new(1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0, -1.0 / 6.0, 0.0)
    } else if p.j1 > p.j2 {
        match pair {
            PairKind::Nn => XState::new(
                1.0 / 12.0,
                5.0 / 12.0,
                5.0 / 12.0,
                1.0 / 12.0,
                -1.0 / 3.0,
                0.0,
            ),
            PairKind::Nnn => {
                XState::new(1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0, 1.0 / 6.0, 0.0)
            }
        }
    } else {
        match pair {
            PairKind::Nn => XState::new(0.25, 0.25, 0.25, 0.25, 0.0, 0.0),
            PairKind::Nnn => XState::new(0.0, 0.5, 0.5, 0.0, -0.5, 0.0),
        }
    };
    Ok(x?)
}

/// Analytic thermal pair elements of the tetramer (printed Boltzmann sums
/// over the five distinct levels).
pub fn tetramer_thermal_xstate(p: &TetramerParams, pair: PairKind) -> Result<XState, ClusterError> {
    if p.t <= 0.0 {
        return Err(ClusterError::ZeroTemperature);
    }
    let beta = 1.0 / p.t;
    let w = shifted_weights(
        &tetramer_spectrum_analytic(p)
            .iter()
            .map(|(e, _)| -beta * e)
            .collect::<Vec<_>>(),
    );
    let z_fn = 5.0 * w[0] + 6.0 * w[1] + 3.0 * w[2] + w[3] + w[4];
    let (a, b, z) = match pair {
        PairKind::Nn => (
            (5.0 / 3.0 * w[0] + 1.5 * w[1] + 0.5 * w[2] + 0.25 * w[3] + w[4] / 12.0) / z_fn,
            (5.0 / 6.0 * w[0] + 1.5 * w[1] + w[2] + 0.25 * w[3] + 5.0 / 12.0 * w[4]) / z_fn,
            (5.0 / 6.0 * w[0] - 0.5 * w[2] - w[4] / 3.0) / z_fn,
        ),
        PairKind::Nnn => (
            (5.0 / 3.0 * w[0] + w[1] + w[2] + w[4] / 3.0) / z_fn,
            (5.0 / 6.0 * w[0] + 2.0 * w[1] + 0.5 * w[2] + 0.5 * w[3] + w[4] / 6.0) / z_fn,
            (5.0 / 6.0 * w[0] - w[1] + 0.5 * w[2] - 0.5 * w[3] + w[4] / 6.0) / z_fn,
        ),
    };
    Ok(XState::new(a, b, b, a, z, 0.0)?)
}

/// Full-pipeline tetramer pair state (T = 0 routes to the ground mixture).
pub fn tetramer_pair_rdm(p: &TetramerParams, pair: PairKind) -> Result<DensityMatrix, ClusterError> {
    let h = tetramer_hamiltonian(p);
    let rho = if p.t == 0.0 {
        ground_state_mixture(&h, None)?
    } else {
        thermal_state(&h, 1.0 / p.t)?
    };
    let (i, j) = pair.sites();
    Ok(partial_trace_pair(&rho, i, j)?)
}

/// One scan family for [`qpt_scan`]: the parameter is the trimer field h, or
/// the tetramer coupling ratio J1/J2 (J2 held at 1).
#[derive(Clone, Copy, Debug)]
pub enum ScanFamily {
    TrimerField { j: f64, epsilon: f64 },
    TetramerRatio { pair: PairKind },
}

#[derive(Clone, Copy, Debug)]
pub struct ScanRow {
    pub parameter: f64,
    pub discord: f64,
    pub classical: f64,
    pub concurrence: f64,
}

/// Scan output: correlation rows in parameter order plus the intervals
/// bracketing any detected discontinuity in Q.
#[derive(Clone, Debug)]
pub struct QptScan {
    pub rows: Vec<ScanRow>,
    pub jumps: Vec<(f64, f64)>,
}

/// Ground-state correlations across a parameter grid. A jump is declared
/// between adjacent points when |ΔQ| exceeds max(10 × median |ΔQ|, 1e-3).
pub fn qpt_scan(
    family: ScanFamily,
    lo: f64,
    hi: f64,
    steps: usize,
) -> Result<QptScan, ClusterError> {
    if !lo.is_finite() || !hi.is_finite() || (steps < 2 && lo != hi) {
        return Err(ClusterError::BadScan);
    }
    let points: Vec<f64> = if lo == hi {
        vec![lo]
    } else {
        (0..steps)
            .map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64)
            .collect()
    };
    let mut rows = Vec::with_capacity(points.len());
    for &parameter in &points {
        let report = scan_report(&family, parameter)?;
        rows.push(ScanRow {
            parameter,
            discord: report.discord,
            classical: report.classical_correlation,
            concurrence: report.concurrence,
        });
    }
    let jumps = detect_jumps(&rows);
    Ok(QptScan { rows, jumps })
}

fn scan_report(family: &ScanFamily, parameter: f64) -> Result<CorrelationReport, ClusterError> {
    match family {
        ScanFamily::TrimerField { j, epsilon } => {
            let p = TrimerParams::new(*j, *epsilon, parameter, 0.0)?;
            let rdm = trimer_ground_rdm(&p)?;
            // a ≠ d once the field splits the levels, so always the numeric path.
            Ok(discord_numeric(&rdm, &MeasurementSearch::default()))
        }
        ScanFamily::TetramerRatio { pair } => {
            let p = TetramerParams::new(parameter, 1.0, 0.0)?;
            let x = tetramer_ground_rdm(&p, *pair)?;
            Ok(report_symmetric(&x)?)
        }
    }
}

fn detect_jumps(rows: &[ScanRow]) -> Vec<(f64, f64)> {
    if rows.len() < 2 {
        return Vec::new();
    }
    let mut deltas: Vec<f64> = rows
        .windows(2)
        .map(|w| (w[1].discord - w[0].discord).abs())
        .collect();
    let mut sorted = deltas.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median = sorted[sorted.len() / 2];
    let threshold = (10.0 * median).max(1e-3);
    let mut jumps = Vec::new();
    for (k, delta) in deltas.drain(..).enumerate() {
        if delta > threshold {
            jumps.push((rows[k].parameter, rows[k + 1].parameter));
        }
    }
    jumps
}
