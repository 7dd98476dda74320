//! Command-line driver: parameter sweeps that reproduce the figure data as
//! CSV, plus a `verify` command that checks the computed numbers against
//! their reference values.
//!
//! Exit statuses: 0 success, 1 usage error, 2 verification failure.

pub mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::clusters::{
    tetramer_ground_rdm, tetramer_thermal_xstate, trimer_ground_rdm, trimer_pair_rdm,
    trimer_thermal_xstate, ClusterError, PairKind, TetramerParams, TrimerParams,
};
use crate::decoherence::{trajectory, DecoherenceError};
use crate::xstate::{
    discord_numeric, report_symmetric, MeasurementSearch, XState, XStateError, X_FORM_TOL,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Decoherence(#[from] DecoherenceError),
    #[error(transparent)]
    XState(#[from] XStateError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

/// Uniform grid over [lo, hi], both endpoints included.
#[derive(Clone, Copy, Debug)]
pub struct SweepAxis {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl SweepAxis {
    pub fn points(&self) -> Vec<f64> {
        if self.lo == self.hi {
            return vec![self.lo];
        }
        (0..self.steps)
            .map(|k| self.lo + (self.hi - self.lo) * k as f64 / (self.steps - 1) as f64)
            .collect()
    }
}

/// Parses `axis:lo:hi:steps`, e.g. `T:0.05:20:201`.
pub fn parse_sweep(s: &str) -> Result<(String, SweepAxis), CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let usage = || CliError::Usage(format!("bad sweep spec '{s}', want axis:lo:hi:steps"));
    if parts.len() != 4 {
        return Err(usage());
    }
    let lo: f64 = parts[1].parse().map_err(|_| usage())?;
    let hi: f64 = parts[2].parse().map_err(|_| usage())?;
    let steps: usize = parts[3].parse().map_err(|_| usage())?;
    if !lo.is_finite() || !hi.is_finite() || steps < 2 {
        return Err(CliError::Usage(format!(
            "sweep '{s}' needs finite bounds and at least 2 steps"
        )));
    }
    Ok((parts[0].to_string(), SweepAxis { lo, hi, steps }))
}

/// Parses `axis=v1,v2,...`, e.g. `T=0.1,0.5,1.0`.
pub fn parse_fixed(s: &str) -> Result<(String, Vec<f64>), CliError> {
    let usage = || CliError::Usage(format!("bad fixed list '{s}', want axis=v1,v2,..."));
    let (axis, list) = s.split_once('=').ok_or_else(usage)?;
    let values: Result<Vec<f64>, _> = list.split(',').map(str::parse).collect();
    let values = values.map_err(|_| usage())?;
    if values.is_empty() || values.iter().any(|v: &f64| !v.is_finite()) {
        return Err(usage());
    }
    Ok((axis.to_string(), values))
}

/// A rectangular numeric table with a header row; renders to CSV with
/// 6-significant-digit cells and LF line endings.
#[derive(Clone, Debug)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| format_sig6(v)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}

/// Fixed-width scientific form with 6 significant digits; -0 normalizes to 0
/// so output bytes never depend on the sign of a rounded-away value.
pub fn format_sig6(value: f64) -> String {
    let v = if value == 0.0 { 0.0 } else { value };
    format!("{v:.5e}")
}

fn search() -> MeasurementSearch {
    MeasurementSearch::default()
}

/// Symmetric-state report from the zero-field trimer at (ε, T); T = 0 routes
/// through the ground-state mixture.
fn trimer_report(j: f64, eps: f64, t: f64) -> Result<[f64; 3], CliError> {
    let p = TrimerParams::new(j, eps, 0.0, t)?;
    let x = if t == 0.0 {
        XState::from_matrix(&trimer_ground_rdm(&p)?, X_FORM_TOL)?
    } else {
        trimer_thermal_xstate(&p)?
    };
    let r = report_symmetric(&x)?;
    Ok([r.mutual_information, r.classical_correlation, r.discord])
}

/// Figure 1/2 data: sweep ε at fixed temperatures or T at fixed anisotropies.
/// Columns: sweep value, fixed value, I, C, Q.
pub fn run_trimer_sweep(
    j: f64,
    axis: &str,
    grid: &SweepAxis,
    fixed: &[f64],
) -> Result<Table, CliError> {
    let mut table = match axis {
        "eps" => Table::new(&["eps", "T", "I", "C", "Q"]),
        "T" => Table::new(&["T", "eps", "I", "C", "Q"]),
        other => {
            return Err(CliError::Usage(format!(
                "trimer-sweep axis must be 'eps' or 'T', got '{other}'"
            )))
        }
    };
    for &fix in fixed {
        for value in grid.points() {
            let (eps, t) = if axis == "eps" { (value, fix) } else { (fix, value) };
            let [i, c, q] = trimer_report(j, eps, t)?;
            table.push(vec![value, fix, i, c, q]);
        }
    }
    Ok(table)
}

/// Figure 3/4 data. Sweeping h runs the T = 0 ground pipeline with numeric
/// discord; sweeping T runs the full thermal pipeline at fixed h.
pub fn run_trimer_field(
    j: f64,
    eps: f64,
    h_fixed: f64,
    axis: &str,
    grid: &SweepAxis,
) -> Result<Table, CliError> {
    match axis {
        "h" => {
            let mut table = Table::new(&["h", "Q"]);
            for h in grid.points() {
                let p = TrimerParams::new(j, eps, h, 0.0)?;
                let report = discord_numeric(&trimer_ground_rdm(&p)?, &search());
                table.push(vec![h, report.discord]);
            }
            Ok(table)
        }
        "T" => {
            let mut table = Table::new(&["T", "Q"]);
            for t in grid.points() {
                let p = TrimerParams::new(j, eps, h_fixed, t)?;
                let report = discord_numeric(&trimer_pair_rdm(&p)?, &search());
                table.push(vec![t, report.discord]);
            }
            Ok(table)
        }
        other => Err(CliError::Usage(format!(
            "trimer-field axis must be 'h' or 'T', got '{other}'"
        ))),
    }
}

/// Figure 6/7 data: temperature sweep of (Q, CN, C) for one pair kind.
/// Returns the table and the interpolated concurrence-death temperature,
/// when the sweep contains one.
pub fn run_tetramer_sweep(
    j1: f64,
    j2: f64,
    pair: PairKind,
    grid: &SweepAxis,
) -> Result<(Table, Option<f64>), CliError> {
    let mut table = Table::new(&["T", "Q", "CN", "C"]);
    for t in grid.points() {
        let p = TetramerParams::new(j1, j2, t)?;
        let x = if t == 0.0 {
            tetramer_ground_rdm(&p, pair)?
        } else {
            tetramer_thermal_xstate(&p, pair)?
        };
        let r = report_symmetric(&x)?;
        table.push(vec![t, r.discord, r.concurrence, r.classical_correlation]);
    }
    let curve: Vec<(f64, f64)> = table.rows.iter().map(|r| (r[0], r[2])).collect();
    Ok((table, first_zero_crossing(&curve)))
}

/// Figure 9/10 data: (γ, CN, Q) rows of the closed-form trajectories.
pub fn run_dephasing(alpha: f64, steps: usize) -> Result<Table, CliError> {
    let traj = trajectory(alpha, steps)?;
    let mut table = Table::new(&["gamma", "CN", "Q"]);
    for row in traj.rows {
        table.push(vec![row.gamma, row.concurrence, row.discord]);
    }
    Ok(table)
}

/// Linear interpolation of the first descent of a sampled curve to zero.
/// Values below 1e-12 count as zero; returns None when the curve starts at
/// zero or never reaches it.
pub fn first_zero_crossing(points: &[(f64, f64)]) -> Option<f64> {
    const FLOOR: f64 = 1e-12;
    let mut seen_positive = false;
    for w in points.windows(2) {
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        if y0 > FLOOR {
            seen_positive = true;
            if y1 <= FLOOR {
                return Some(x0 + y0 * (x1 - x0) / (y0 - y1.max(0.0)));
            }
        }
    }
    let _ = seen_positive;
    None
}

// ---------------------------------------------------------------------------
// Argument surface
// ---------------------------------------------------------------------------

#[derive(Parser, Debug)]
#[command(
    name = "spincord",
    about = "Correlation measures for Heisenberg spin trimers and tetramers",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Thermal trimer sweep over anisotropy or temperature (CSV).
    TrimerSweep {
        /// Exchange strength; positive is AFM, negative FM.
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        j: f64,
        /// Swept axis as axis:lo:hi:steps with axis one of eps, T.
        #[arg(long, default_value = "eps:0:1:201")]
        sweep: String,
        /// Held-constant values as axis=v1,v2,...; defaults to T=0.1,0.5,1.0
        /// for an eps sweep and eps=0.25,0.5,0.75,1.0 for a T sweep.
        #[arg(long)]
        fixed: Option<String>,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Trimer quantum discord against magnetic field (T = 0) or temperature.
    TrimerField {
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        j: f64,
        /// Anisotropy parameter (≤ 1).
        #[arg(long, default_value_t = 1.0)]
        eps: f64,
        /// Fixed field for the temperature mode.
        #[arg(long, default_value_t = 0.0)]
        h: f64,
        /// Swept axis as axis:lo:hi:steps with axis one of h, T.
        #[arg(long, default_value = "h:0:2:201")]
        sweep: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tetramer (Q, CN, C) against temperature for one pair kind.
    TetramerSweep {
        /// Nearest-neighbour exchange (> 0).
        #[arg(long, default_value_t = 1.0)]
        j1: f64,
        /// Diagonal exchange (> 0).
        #[arg(long, default_value_t = 0.5)]
        j2: f64,
        #[arg(long, value_enum, default_value_t = PairArg::Nn)]
        pair: PairArg,
        #[arg(long, default_value = "T:0.05:5:201")]
        sweep: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Werner-state dephasing trajectory (γ, CN, Q).
    Dephasing {
        /// Werner mixing weight in [0, 1].
        #[arg(long, default_value_t = 2.0 / 3.0)]
        alpha: f64,
        /// Number of γ samples on [0, 1].
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check computed values against their references; exits 2 on failure.
    Verify,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PairArg {
    Nn,
    Nnn,
}

impl From<PairArg> for PairKind {
    fn from(p: PairArg) -> Self {
        match p {
            PairArg::Nn => PairKind::Nn,
            PairArg::Nnn => PairKind::Nnn,
        }
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return 1;
        }
        Err(e) => {
            // --help / --version land here.
            print!("{e}");
            return 0;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::TrimerSweep { j, sweep, fixed, out } => {
            let (axis, grid) = parse_sweep(&sweep)?;
            let fixed_values = match fixed {
                Some(s) => {
                    let (fixed_axis, values) = parse_fixed(&s)?;
                    let want = if axis == "eps" { "T" } else { "eps" };
                    if fixed_axis != want {
                        return Err(CliError::Usage(format!(
                            "sweep axis '{axis}' pairs with fixed axis '{want}', got '{fixed_axis}'"
                        )));
                    }
                    values
                }
                None if axis == "eps" => vec![0.1, 0.5, 1.0],
                None => vec![0.25, 0.5, 0.75, 1.0],
            };
            let table = run_trimer_sweep(j, &axis, &grid, &fixed_values)?;
            write_table(&out, &table)?;
            println!("wrote {} rows to {}", table.rows.len(), out.display());
            Ok(0)
        }
        Command::TrimerField { j, eps, h, sweep, out } => {
            let (axis, grid) = parse_sweep(&sweep)?;
            let table = run_trimer_field(j, eps, h, &axis, &grid)?;
            write_table(&out, &table)?;
            println!("wrote {} rows to {}", table.rows.len(), out.display());
            Ok(0)
        }
        Command::TetramerSweep { j1, j2, pair, sweep, out } => {
            let (axis, grid) = parse_sweep(&sweep)?;
            if axis != "T" {
                return Err(CliError::Usage(format!(
                    "tetramer-sweep sweeps T only, got '{axis}'"
                )));
            }
            let (table, death) = run_tetramer_sweep(j1, j2, pair.into(), &grid)?;
            write_table(&out, &table)?;
            println!("wrote {} rows to {}", table.rows.len(), out.display());
            match death {
                Some(t) => println!("concurrence reaches zero near T = {}", format_sig6(t)),
                None => println!("concurrence has no zero crossing on this grid"),
            }
            Ok(0)
        }
        Command::Dephasing { alpha, steps, out } => {
            let table = run_dephasing(alpha, steps)?;
            write_table(&out, &table)?;
            println!("wrote {} rows to {}", table.rows.len(), out.display());
            Ok(0)
        }
        Command::Verify => {
            let rows = verify::verify_rows();
            print!("{}", verify::render(&rows));
            if rows.iter().all(|r| r.pass()) {
                println!("verification passed ({} checks)", rows.len());
                Ok(0)
            } else {
                let failed = rows.iter().filter(|r| !r.pass()).count();
                println!("verification FAILED ({failed} of {} checks)", rows.len());
                Ok(2)
            }
        }
    }
}

fn write_table(path: &PathBuf, table: &Table) -> Result<(), CliError> {
    if path.as_os_str().is_empty() {
        return Err(CliError::Usage("output path must be non-empty".into()));
    }
    std::fs::write(path, table.to_csv())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn sweep_spec_parsing() {
        let (axis, grid) = parse_sweep("T:0.05:20:201").unwrap();
        assert_eq!(axis, "T");
        assert_eq!(grid.steps, 201);
        assert_abs_diff_eq!(grid.lo, 0.05);
        assert!(parse_sweep("T:0:1").is_err());
        assert!(parse_sweep("T:a:1:10").is_err());
        assert!(parse_sweep("T:0:1:1").is_err());
    }

    #[test]
    fn fixed_list_parsing() {
        let (axis, values) = parse_fixed("T=0.1,0.5,1.0").unwrap();
        assert_eq!(axis, "T");
        assert_eq!(values.len(), 3);
        assert!(parse_fixed("T:0.1").is_err());
        assert!(parse_fixed("T=").is_err());
    }

    #[test]
    fn csv_formatting_is_deterministic() {
        let mut table = Table::new(&["x", "y"]);
        table.push(vec![0.125815, -0.0]);
        table.push(vec![1.5, 2e-7]);
        let a = table.to_csv();
        let b = table.to_csv();
        assert_eq!(a, b);
        assert_eq!(a, "x,y\n1.25815e-1,0.00000e0\n1.50000e0,2.00000e-7\n");
    }

    #[test]
    fn trimer_sweep_ising_row_has_zero_discord() {
        let grid = SweepAxis { lo: 0.0, hi: 0.0, steps: 2 };
        let table = run_trimer_sweep(1.0, "eps", &grid, &[0.5]).unwrap();
        // ε = 0 leaves a diagonal thermal state: no quantum correlations.
        assert_abs_diff_eq!(table.rows[0][4], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn trimer_field_h_zero_matches_thermal_sweep() {
        let grid = SweepAxis { lo: 0.8, hi: 0.8, steps: 2 };
        let field = run_trimer_field(1.0, 1.0, 0.0, "T", &grid).unwrap();
        let sweep = run_trimer_sweep(1.0, "T", &grid, &[1.0]).unwrap();
        assert_abs_diff_eq!(field.rows[0][1], sweep.rows[0][4], epsilon = 1e-6);
    }

    #[test]
    fn zero_crossing_interpolation() {
        let curve = [(0.0, 1.0), (1.0, 0.5), (2.0, 0.0), (3.0, 0.0)];
        assert_abs_diff_eq!(first_zero_crossing(&curve).unwrap(), 2.0, epsilon = 1e-12);
        assert!(first_zero_crossing(&[(0.0, 0.0), (1.0, 0.0)]).is_none());
        assert!(first_zero_crossing(&[(0.0, 1.0), (1.0, 0.5)]).is_none());
    }
}
