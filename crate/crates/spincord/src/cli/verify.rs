//! The `verify` command: recomputes every published reference value this
//! crate reproduces and reports a pass/fail line for each.

use crate::clusters::{
    tetramer_ground_rdm, tetramer_hamiltonian, tetramer_pair_rdm, tetramer_spectrum_analytic,
    tetramer_thermal_xstate, trimer_ground_rdm, trimer_hamiltonian, trimer_pair_rdm,
    trimer_spectrum_analytic, trimer_thermal_xstate, PairKind, TetramerParams, TrimerParams,
};
use crate::decoherence::{
    apply_dephasing, concurrence_closed, discord_closed, kraus_operators, trajectory, werner,
    WernerParams,
};
use crate::qcore::{
    eig_hermitian, ground_state_mixture, kron, von_neumann_entropy, ComplexMatrix, DensityMatrix,
};
use crate::xstate::{
    classical_correlation_symmetric, concurrence, discord_numeric, discord_symmetric,
    is_zero_discord, mutual_information, wootters_concurrence, xstate_eigenvalues,
    MeasurementSearch, XState, X_FORM_TOL, ZERO_DISCORD_TOL,
};

use super::first_zero_crossing;

/// One verification check: pass ⇔ |computed - expected| ≤ tolerance.
#[derive(Clone, Debug)]
pub struct VerifyRow {
    pub label: String,
    pub computed: f64,
    pub expected: f64,
    pub tolerance: f64,
}

impl VerifyRow {
    pub fn pass(&self) -> bool {
        (self.computed - self.expected).abs() <= self.tolerance
    }
}

pub fn render(rows: &[VerifyRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let status = if r.pass() { "ok  " } else { "FAIL" };
        out.push_str(&format!(
            "{status}  {:<58} computed {:>13} expected {:>13} tol {:>7.0e}\n",
            r.label,
            super::format_sig6(r.computed),
            super::format_sig6(r.expected),
            r.tolerance,
        ));
    }
    out
}

fn max_abs_dev(pairs: &[(f64, f64)]) -> f64 {
    pairs.iter().map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

fn element_dev(x: &XState, want: [f64; 6]) -> f64 {
    max_abs_dev(&[
        (x.a(), want[0]),
        (x.b1(), want[1]),
        (x.b2(), want[2]),
        (x.d(), want[3]),
        (x.z(), want[4]),
        (x.f(), want[5]),
    ])
}

fn sorted_spectrum_dev(h: &ComplexMatrix, expected: &mut Vec<f64>) -> f64 {
    let numeric = eig_hermitian(h).unwrap().values;
    expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
    numeric
        .iter()
        .zip(expected.iter())
        .map(|(n, e)| (n - e).abs())
        .fold(0.0, f64::max)
}

fn ground_pair(j: f64, eps: f64, h: f64) -> (DensityMatrix, XState) {
    let p = TrimerParams::new(j, eps, h, 0.0).unwrap();
    let rdm = trimer_ground_rdm(&p).unwrap();
    let x = XState::from_matrix(&rdm, X_FORM_TOL).unwrap();
    (rdm, x)
}

/// Runs the whole battery. All closures are deterministic, so so is the row
/// list and its rendering.
pub fn verify_rows() -> Vec<VerifyRow> {
    let mut rows: Vec<VerifyRow> = Vec::new();
    let mut row = |label: &str, computed: f64, expected: f64, tolerance: f64| {
        rows.push(VerifyRow { label: label.to_string(), computed, expected, tolerance });
    };
    let search = MeasurementSearch::default();

    // --- trimer ground state, AFM and FM ---
    let (afm_rdm, afm) = ground_pair(1.0, 1.0, 0.0);
    row(
        "trimer AFM pair elements vs (1/6,1/3,1/3,1/6,-1/6,0)",
        element_dev(&afm, [1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0, -1.0 / 6.0, 0.0]),
        0.0,
        1e-10,
    );
    let mut lam = xstate_eigenvalues(&afm);
    lam.sort_by(|a, b| a.partial_cmp(b).unwrap());
    row(
        "trimer AFM pair eigenvalues vs {1/6,1/6,1/6,1/2}",
        max_abs_dev(&[
            (lam[0], 1.0 / 6.0),
            (lam[1], 1.0 / 6.0),
            (lam[2], 1.0 / 6.0),
            (lam[3], 0.5),
        ]),
        0.0,
        1e-10,
    );
    row("trimer AFM ground I", mutual_information(&afm), 0.207, 1e-3);
    row(
        "trimer AFM ground C",
        classical_correlation_symmetric(&afm).unwrap(),
        0.082,
        1e-3,
    );
    let afm_q_analytic = discord_symmetric(&afm).unwrap();
    row("trimer AFM ground Q (analytic)", afm_q_analytic, 0.125, 1e-3);
    let afm_q_numeric = discord_numeric(&afm_rdm, &search).discord;
    row("trimer AFM ground Q (numeric)", afm_q_numeric, 0.125, 1e-3);
    row(
        "trimer AFM Q analytic vs numeric",
        (afm_q_analytic - afm_q_numeric).abs(),
        0.0,
        1e-5,
    );
    row("trimer AFM pair concurrence (no entanglement)", concurrence(&afm), 0.0, 1e-12);
    let afm_full = ground_state_mixture(
        &trimer_hamiltonian(&TrimerParams::new(1.0, 1.0, 0.0, 0.0).unwrap()),
        None,
    )
    .unwrap();
    row(
        "trimer AFM ground manifold entropy (four-fold)",
        von_neumann_entropy(&afm_full),
        2.0,
        1e-9,
    );

    let (_, fm) = ground_pair(-1.0, 1.0, 0.0);
    let mut lam = xstate_eigenvalues(&fm);
    lam.sort_by(|a, b| a.partial_cmp(b).unwrap());
    row(
        "trimer FM pair eigenvalues vs {0,1/3,1/3,1/3}",
        max_abs_dev(&[
            (lam[0], 0.0),
            (lam[1], 1.0 / 3.0),
            (lam[2], 1.0 / 3.0),
            (lam[3], 1.0 / 3.0),
        ]),
        0.0,
        1e-10,
    );
    row("trimer FM ground I", mutual_information(&fm), 0.415, 1e-3);
    row("trimer FM ground C", classical_correlation_symmetric(&fm).unwrap(), 0.082, 1e-3);
    row("trimer FM ground Q", discord_symmetric(&fm).unwrap(), 0.333, 1e-3);

    // --- trimer spectra ---
    let p = TrimerParams::new(1.0, 1.0, 0.0, 0.0).unwrap();
    let mut two_level: Vec<f64> = vec![-0.75; 4];
    two_level.extend(vec![0.75; 4]);
    row(
        "trimer spectrum eps=1 vs {-3/4 x4, +3/4 x4}",
        sorted_spectrum_dev(&trimer_hamiltonian(&p), &mut two_level),
        0.0,
        1e-10,
    );
    let p = TrimerParams::new(1.0, 0.5, 0.0, 0.0).unwrap();
    row(
        "trimer E2 at eps=1/2 vs -J/2",
        trimer_spectrum_analytic(&p)[1],
        -0.5,
        1e-12,
    );
    let p = TrimerParams::new(1.0, 1.0, 0.7, 0.0).unwrap();
    let mut in_field = trimer_spectrum_analytic(&p).to_vec();
    row(
        "trimer in-field analytic vs numeric spectrum (h=0.7)",
        sorted_spectrum_dev(&trimer_hamiltonian(&p), &mut in_field),
        0.0,
        1e-10,
    );
    row("trimer E1 at h=0.7 vs 3J/4+3h/2", trimer_spectrum_analytic(&p)[0], 1.8, 1e-12);
    row("trimer E8 at h=0.7 vs 3J/4-3h/2", trimer_spectrum_analytic(&p)[7], -0.3, 1e-12);

    // --- trimer thermal state ---
    let p = TrimerParams::new(1.0, 0.6, 0.0, 0.9).unwrap();
    let analytic = trimer_thermal_xstate(&p).unwrap();
    let pipeline = XState::from_matrix(&trimer_pair_rdm(&p).unwrap(), X_FORM_TOL).unwrap();
    row(
        "trimer thermal elements analytic vs pipeline",
        element_dev(
            &analytic,
            [pipeline.a(), pipeline.b1(), pipeline.b2(), pipeline.d(), pipeline.z(), pipeline.f()],
        ),
        0.0,
        1e-12,
    );
    let t: f64 = 0.7;
    let gamma: f64 = 1.0 / (4.0 * t);
    let z_formula = 2.0 * ((-3.0 * gamma).exp() + 2.0 * (3.0 * gamma).exp() + (-3.0 * gamma).exp());
    let p = TrimerParams::new(1.0, 1.0, 0.0, t).unwrap();
    let z_numeric: f64 = eig_hermitian(&trimer_hamiltonian(&p))
        .unwrap()
        .values
        .iter()
        .map(|e| (-e / t).exp())
        .sum();
    row("trimer partition function identity (eps=1)", z_numeric, z_formula, 1e-10);
    let p = TrimerParams::new(1.0, 1.0, 0.0, 100.0).unwrap();
    let hot = trimer_thermal_xstate(&p).unwrap();
    row(
        "trimer thermal T=100 violates vanishing-discord conditions",
        is_zero_discord(&hot, ZERO_DISCORD_TOL) as u8 as f64,
        0.0,
        0.0,
    );
    row(
        "trimer thermal T=100 keeps Q > 1e-6 (1 = yes)",
        (discord_symmetric(&hot).unwrap() > 1e-6) as u8 as f64,
        1.0,
        0.0,
    );

    // --- trimer in a field ---
    let (rdm, x) = ground_pair(1.0, 1.0, 1.0);
    row(
        "trimer h=J pair elements vs (0,1/3,1/3,1/3,-1/6,0)",
        element_dev(&x, [0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, -1.0 / 6.0, 0.0]),
        0.0,
        1e-10,
    );
    row(
        "trimer h=J ground Q (numeric)",
        discord_numeric(&rdm, &search).discord,
        0.125815,
        1e-5,
    );
    let plateau_dev = [0.25, 0.5, 0.75, 1.25]
        .iter()
        .map(|&h| {
            let (rdm, _) = ground_pair(1.0, 1.0, h);
            (discord_numeric(&rdm, &search).discord - 0.125815).abs()
        })
        .fold(0.0, f64::max);
    row("trimer Q plateau on 0 <= h < 3J/2", plateau_dev, 0.0, 1e-5);
    let (rdm, x) = ground_pair(1.0, 1.0, 1.5);
    row(
        "trimer h=3J/2 pair elements vs (0,2/9,2/9,5/9,-1/9,0)",
        element_dev(&x, [0.0, 2.0 / 9.0, 2.0 / 9.0, 5.0 / 9.0, -1.0 / 9.0, 0.0]),
        0.0,
        1e-10,
    );
    row(
        "trimer h=3J/2 ground Q (numeric)",
        discord_numeric(&rdm, &search).discord,
        0.0838764,
        1e-5,
    );
    let p = TrimerParams::new(1.0, 1.0, 1.5, 0.0).unwrap();
    let qpt_full = ground_state_mixture(&trimer_hamiltonian(&p), None).unwrap();
    row(
        "trimer h=3J/2 ground manifold entropy (three-fold)",
        von_neumann_entropy(&qpt_full),
        3f64.log2(),
        1e-9,
    );
    let (rdm, _) = ground_pair(1.0, 1.0, 2.0);
    row(
        "trimer h=2J ground Q (separable |8>)",
        discord_numeric(&rdm, &search).discord,
        0.0,
        1e-9,
    );

    // --- tetramer spectra ---
    let p = TetramerParams::new(1.0, 0.5, 0.0).unwrap();
    let mut analytic: Vec<f64> = tetramer_spectrum_analytic(&p)
        .iter()
        .flat_map(|&(e, m)| std::iter::repeat(e).take(m))
        .collect();
    row(
        "tetramer spectrum multiset J1=1 J2=1/2",
        sorted_spectrum_dev(&tetramer_hamiltonian(&p), &mut analytic),
        0.0,
        1e-10,
    );
    row(
        "tetramer minimum eigenvalue J1=1 J2=1/2 vs -7/4",
        eig_hermitian(&tetramer_hamiltonian(&p)).unwrap().values[0],
        -1.75,
        1e-10,
    );
    let p = TetramerParams::new(0.5, 1.0, 0.0).unwrap();
    row(
        "tetramer minimum eigenvalue J1=1/2 J2=1 vs -3/2",
        eig_hermitian(&tetramer_hamiltonian(&p)).unwrap().values[0],
        -1.5,
        1e-10,
    );
    let beta = 1.0 / 0.8;
    let p = TetramerParams::new(1.0, 0.5, 0.8).unwrap();
    let z_formula: f64 = tetramer_spectrum_analytic(&p)
        .iter()
        .map(|&(e, m)| m as f64 * (-beta * e).exp())
        .sum();
    let z_numeric: f64 = eig_hermitian(&tetramer_hamiltonian(&p))
        .unwrap()
        .values
        .iter()
        .map(|e| (-beta * e).exp())
        .sum();
    row("tetramer partition function identity", z_numeric, z_formula, 1e-10);

    // --- tetramer ground-state correlations ---
    let regimes = [(1.0, 0.5), (0.5, 1.0), (1.0, 1.0)];
    let expected_cq = [
        [(0.350, 0.442), (0.082, 0.333)], // J1 > J2: nn, nnn
        [(0.0, 0.0), (1.0, 1.0)],         // J1 < J2
        [(0.082, 0.1258), (0.082, 0.1258)], // QPT point
    ];
    for (k, &(j1, j2)) in regimes.iter().enumerate() {
        let p = TetramerParams::new(j1, j2, 0.0).unwrap();
        for (pair, &(c_want, q_want)) in
            [PairKind::Nn, PairKind::Nnn].iter().zip(expected_cq[k].iter())
        {
            let x = tetramer_ground_rdm(&p, *pair).unwrap();
            let tag = match pair {
                PairKind::Nn => "nn",
                PairKind::Nnn => "nnn",
            };
            row(
                &format!("tetramer J1={j1} J2={j2} {tag} C"),
                classical_correlation_symmetric(&x).unwrap(),
                c_want,
                1e-3,
            );
            row(
                &format!("tetramer J1={j1} J2={j2} {tag} Q"),
                discord_symmetric(&x).unwrap(),
                q_want,
                1e-3,
            );
        }
    }
    let p = TetramerParams::new(0.5, 1.0, 0.0).unwrap();
    let singlet = tetramer_ground_rdm(&p, PairKind::Nnn).unwrap();
    row(
        "tetramer J1<J2 nnn ground is the singlet projector",
        element_dev(&singlet, [0.0, 0.5, 0.5, 0.0, -0.5, 0.0]),
        0.0,
        1e-10,
    );
    for (j1, j2) in regimes {
        let p = TetramerParams::new(j1, j2, 0.0).unwrap();
        let dev = [PairKind::Nn, PairKind::Nnn]
            .iter()
            .map(|&pair| {
                let table = tetramer_ground_rdm(&p, pair).unwrap();
                let pipe =
                    XState::from_matrix(&tetramer_pair_rdm(&p, pair).unwrap(), X_FORM_TOL)
                        .unwrap();
                element_dev(&table, [pipe.a(), pipe.b1(), pipe.b2(), pipe.d(), pipe.z(), pipe.f()])
            })
            .fold(0.0, f64::max);
        row(
            &format!("tetramer ground table vs pipeline J1={j1} J2={j2}"),
            dev,
            0.0,
            1e-10,
        );
    }

    // --- tetramer thermal elements (resolves the printed nnn label slip) ---
    let p = TetramerParams::new(0.7, 1.1, 0.6).unwrap();
    for pair in [PairKind::Nn, PairKind::Nnn] {
        let analytic = tetramer_thermal_xstate(&p, pair).unwrap();
        let pipe = XState::from_matrix(&tetramer_pair_rdm(&p, pair).unwrap(), X_FORM_TOL).unwrap();
        let tag = match pair {
            PairKind::Nn => "nn",
            PairKind::Nnn => "nnn",
        };
        row(
            &format!("tetramer thermal {tag} elements analytic vs pipeline"),
            element_dev(
                &analytic,
                [pipe.a(), pipe.b1(), pipe.b2(), pipe.d(), pipe.z(), pipe.f()],
            ),
            0.0,
            1e-12,
        );
    }

    // --- Werner states and dephasing ---
    let w = werner(&WernerParams::new(1.0 / 3.0).unwrap());
    row(
        "werner(1/3) equals the AFM trimer ground pair",
        (w.matrix() - afm_rdm.matrix()).max_abs(),
        0.0,
        1e-12,
    );
    let w = werner(&WernerParams::new(2.0 / 3.0).unwrap());
    let p = TetramerParams::new(1.0, 0.5, 0.0).unwrap();
    let nn = tetramer_ground_rdm(&p, PairKind::Nn).unwrap().to_density().unwrap();
    row(
        "werner(2/3) equals the tetramer nn ground pair",
        (w.matrix() - nn.matrix()).max_abs(),
        0.0,
        1e-12,
    );
    let evolved = apply_dephasing(&w, 0.5).unwrap();
    row(
        "dephased werner(2/3) inner coherence at gamma=1/2",
        evolved.matrix()[(1, 2)].re,
        -1.0 / 6.0,
        1e-14,
    );
    let completeness_defect = (0..=100)
        .map(|k| {
            let g = k as f64 / 100.0;
            let (e0, e1) = kraus_operators(g);
            let mut sum = ComplexMatrix::zeros(4);
            for a in [&e0, &e1] {
                for b in [&e0, &e1] {
                    let k_op = kron(a, b);
                    sum = &sum + &(&k_op.adjoint() * &k_op);
                }
            }
            (&sum - &ComplexMatrix::identity(4)).max_abs()
        })
        .fold(0.0, f64::max);
    row("Kraus completeness defect over gamma grid", completeness_defect, 0.0, 1e-14);

    let closed = trajectory(2.0 / 3.0, 101).unwrap();
    let closed_curve: Vec<(f64, f64)> = closed.rows.iter().map(|r| (r.gamma, r.concurrence)).collect();
    row(
        "dephasing alpha=2/3 closed-form CN death point",
        first_zero_crossing(&closed_curve).unwrap_or(f64::NAN),
        0.75,
        1e-9,
    );
    let wootters_curve: Vec<(f64, f64)> = (0..=100)
        .map(|k| {
            let g = k as f64 / 100.0;
            let rho = apply_dephasing(&werner(&WernerParams::new(2.0 / 3.0).unwrap()), g).unwrap();
            (g, wootters_concurrence(&rho))
        })
        .collect();
    row(
        "dephasing alpha=2/3 Wootters-pipeline CN death point",
        first_zero_crossing(&wootters_curve).unwrap_or(f64::NAN),
        0.75,
        1e-6,
    );
    let min_q = closed.rows.iter().filter(|r| r.gamma < 1.0).map(|r| r.discord).fold(
        f64::INFINITY,
        f64::min,
    );
    row(
        "dephasing alpha=2/3 keeps Q > 0 for gamma < 1 (1 = yes)",
        (min_q > 0.0) as u8 as f64,
        1.0,
        0.0,
    );
    row(
        "dephasing alpha=2/3 Q at gamma=1",
        closed.rows.last().unwrap().discord,
        0.0,
        1e-12,
    );
    let third = trajectory(1.0 / 3.0, 101).unwrap();
    row(
        "dephasing alpha=1/3 CN identically zero",
        third.rows.iter().map(|r| r.concurrence).fold(0.0, f64::max),
        0.0,
        1e-15,
    );
    row(
        "dephasing alpha=1/3 Q at gamma=1",
        third.rows.last().unwrap().discord,
        0.0,
        1e-12,
    );
    row("dephasing alpha=1/3 Q at gamma=0", discord_closed(1.0 / 3.0, 0.0), 0.125815, 1e-5);

    let mut q_dev: f64 = 0.0;
    let mut cn_dev: f64 = 0.0;
    for ai in 0..11 {
        let alpha = ai as f64 / 10.0;
        let w = werner(&WernerParams::new(alpha).unwrap());
        for gi in 0..21 {
            let g = gi as f64 / 20.0;
            let rho = apply_dephasing(&w, g).unwrap();
            let numeric = discord_numeric(&rho, &search);
            q_dev = q_dev.max((discord_closed(alpha, g) - numeric.discord).abs());
            cn_dev = cn_dev.max((concurrence_closed(alpha, g) - wootters_concurrence(&rho)).abs());
        }
    }
    row("dephasing closed Q vs Kraus+numeric pipeline (21x11 grid)", q_dev, 0.0, 1e-5);
    row("dephasing closed CN vs Wootters pipeline (21x11 grid)", cn_dev, 0.0, 1e-10);

    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_passes() {
        let rows = verify_rows();
        let failures: Vec<String> = rows
            .iter()
            .filter(|r| !r.pass())
            .map(|r| format!("{}: computed {} expected {}", r.label, r.computed, r.expected))
            .collect();
        assert!(failures.is_empty(), "failing rows:\n{}", failures.join("\n"));
    }

    #[test]
    fn render_is_deterministic() {
        let rows = verify_rows();
        assert_eq!(render(&rows), render(&rows));
    }
}
