//! Command-line surface: classification reports, spectrum tables, sampled
//! eigenfunctions, oracle comparisons and the ground-state figure datasets.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid physics parameters.

use std::fmt::Write as _;
use std::io;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{allowed_parities, classify_boundary, indicial_roots, Degeneracy, Parity, PotentialSpec};
use crate::error::Error;
use crate::oracle::{solve_grid, GridConfig};
use crate::spectra::{
    density, kratzer_spectrum, spectrum, BoundState, NormalizationDomain, SpectrumRequest, Verdict,
};

pub const EXIT_IO: i32 = 1;
pub const EXIT_PHYSICS: i32 = 2;

/// Ground-state couplings of the first figure: g₁ = -10 and five values of g₂.
pub const FIG1_G1: f64 = -10.0;
pub const FIG1_G2: [f64; 5] = [-0.124_999, -0.1, 0.0, 0.1, 0.3];
/// Second figure: g₂ just above the critical coupling and two values of g₁.
pub const FIG2_G2: f64 = -0.124_999;
pub const FIG2_G1: [f64; 2] = [-10.0, -5.0];

#[derive(Debug, Parser)]
#[command(name = "boundstate", version, about = "Bound states of 1D Schrödinger equations with singular potentials")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, global = true)]
    pub format: Option<OutputFormat>,
    /// Output file (figures: output directory). Defaults to stdout / the current directory.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Domain {
    Half,
    Full,
}

impl From<Domain> for NormalizationDomain {
    fn from(d: Domain) -> Self {
        match d {
            Domain::Half => NormalizationDomain::HalfLine,
            Domain::Full => NormalizationDomain::FullLine,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Indicial exponents, origin behaviour, allowed parities and degeneracy.
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        /// Dominant coupling g (the inverse-square coupling g₂ when beta = 2).
        #[arg(long, visible_alias = "g2", allow_negative_numbers = true)]
        g: Option<f64>,
    },
    /// Closed-form levels (n, E_n, s, κ_n).
    Spectrum {
        #[command(flatten)]
        couplings: Couplings,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Domain::Half)]
        domain: Domain,
    },
    /// Samples of ψ_n and ρ_n on a uniform ζ grid.
    Wavefunction {
        #[command(flatten)]
        couplings: Couplings,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        samples: Samples,
        #[arg(long, value_enum, default_value_t = Domain::Half)]
        domain: Domain,
    },
    /// Analytic levels next to the finite-difference eigenvalues.
    Oracle {
        #[command(flatten)]
        couplings: Couplings,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
        /// Grid points (default 20000).
        #[arg(long)]
        points: Option<usize>,
    },
    /// Normalized ground states for the two reference figures (fig1.csv, fig2.csv).
    Figures {
        #[command(flatten)]
        samples: Samples,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Couplings {
    #[arg(long, allow_negative_numbers = true)]
    pub g1: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub g2: f64,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Samples {
    #[arg(long, default_value_t = 0.0)]
    pub zeta_min: f64,
    #[arg(long, default_value_t = 1.2)]
    pub zeta_max: f64,
    #[arg(long, default_value_t = 600)]
    pub samples: usize,
}

impl Samples {
    pub fn abscissae(&self) -> Vec<f64> {
        let n = self.samples;
        if n == 1 {
            return vec![self.zeta_min];
        }
        (0..n)
            .map(|i| self.zeta_min + (self.zeta_max - self.zeta_min) * i as f64 / (n - 1) as f64)
            .collect()
    }

    fn validate(&self) -> Result<(), CliError> {
        if !(self.zeta_min >= 0.0 && self.zeta_max > self.zeta_min && self.samples >= 1) {
            return Err(CliError::Physics(Error::InvalidParameter(format!(
                "sample range [{}, {}] with {} samples",
                self.zeta_min, self.zeta_max, self.samples
            ))));
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Physics(#[from] Error),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Physics(_) => EXIT_PHYSICS,
            CliError::Io(_) => EXIT_IO,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Physics(Error::Supercritical { g }) => format!(
                "supercritical coupling g2 = {g}: it must exceed the critical coupling alpha_c = -1/8 (-0.125)"
            ),
            other => other.to_string(),
        }
    }
}

/// One file produced by a command: `None` path means standard output.
#[derive(Debug, Clone, PartialEq)]
pub struct Emitted {
    pub path: Option<PathBuf>,
    pub contents: String,
}

/// Fixed 17-significant-digit scientific formatting; parses back bit-exactly.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn json_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

/// Executes a parsed command and returns what it would emit.
pub fn execute(cfg: &RunConfig) -> Result<Vec<Emitted>, CliError> {
    match &cfg.command {
        Command::Classify { beta, g } => {
            let text = cmd_classify(*beta, *g, cfg.format.unwrap_or(OutputFormat::Json))?;
            Ok(vec![Emitted {
                path: cfg.output.clone(),
                contents: text,
            }])
        }
        Command::Spectrum { couplings, nmax, domain } => {
            let text = cmd_spectrum(couplings, *nmax, (*domain).into(), cfg.format.unwrap_or(OutputFormat::Csv))?;
            Ok(vec![Emitted {
                path: cfg.output.clone(),
                contents: text,
            }])
        }
        Command::Wavefunction {
            couplings,
            n,
            samples,
            domain,
        } => {
            let text = cmd_wavefunction(
                couplings,
                *n,
                samples,
                (*domain).into(),
                cfg.format.unwrap_or(OutputFormat::Csv),
            )?;
            Ok(vec![Emitted {
                path: cfg.output.clone(),
                contents: text,
            }])
        }
        Command::Oracle { couplings, nmax, points } => {
            let text = cmd_oracle(couplings, *nmax, *points, cfg.format.unwrap_or(OutputFormat::Csv))?;
            Ok(vec![Emitted {
                path: cfg.output.clone(),
                contents: text,
            }])
        }
        Command::Figures { samples } => {
            let dir = cfg.output.clone().unwrap_or_else(|| PathBuf::from("."));
            cmd_figures(samples, cfg.format.unwrap_or(OutputFormat::Csv), &dir)
        }
    }
}

/// Writes emitted outputs, creating parent directories for files.
pub fn write_outputs(outputs: &[Emitted], stdout: &mut impl io::Write) -> io::Result<()> {
    for out in outputs {
        match &out.path {
            Some(path) => {
                if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                    std::fs::create_dir_all(parent)?;
                }
                std::fs::write(path, &out.contents)?;
            }
            None => stdout.write_all(out.contents.as_bytes())?,
        }
    }
    Ok(())
}

/// Parses, executes and writes; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut impl io::Write, stderr: &mut impl io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_PHYSICS } else { 0 };
        }
    };
    let result = execute(&cfg).and_then(|outs| write_outputs(&outs, stdout).map_err(CliError::from));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

#[derive(Debug, Serialize)]
struct BranchReport {
    s: f64,
    psi_at_origin: crate::analysis::OriginValue,
    dpsi_at_origin: crate::analysis::OriginDerivative,
    allowed_parities: Vec<Parity>,
}

pub fn cmd_classify(beta: f64, g: Option<f64>, format: OutputFormat) -> Result<String, CliError> {
    let g = match g {
        Some(g) => g,
        None if beta < 2.0 => 0.0,
        None => {
            return Err(Error::InvalidParameter("beta = 2 requires the inverse-square coupling --g2".into()).into())
        }
    };
    let spec = PotentialSpec::new(beta, g)?;
    let roots = indicial_roots(&spec)?;
    let branches = classify_boundary(&spec)?;
    let parities = allowed_parities(&spec)?;
    let degeneracy = if branches.iter().any(|b| b.degeneracy == Degeneracy::Double) {
        Degeneracy::Double
    } else {
        Degeneracy::Nondegenerate
    };
    match format {
        OutputFormat::Json => {
            let report: Vec<BranchReport> = branches
                .iter()
                .map(|b| BranchReport {
                    s: b.s,
                    psi_at_origin: b.psi_at_origin,
                    dpsi_at_origin: b.dpsi_at_origin,
                    allowed_parities: b.allowed_parities.clone(),
                })
                .collect();
            Ok(json_text(&json!({
                "beta": beta,
                "g": g,
                "s_plus": roots.s_plus,
                "s_minus": roots.s_minus,
                "admissible_s": roots.admissible_s,
                "branches": report,
                "allowed_parities": parities,
                "degeneracy": degeneracy,
            })))
        }
        OutputFormat::Csv => {
            let deg = match degeneracy {
                Degeneracy::Double => "double",
                Degeneracy::Nondegenerate => "nondegenerate",
            };
            let rows = branches.iter().map(|b| {
                let value = serde_json::to_value(b.psi_at_origin).expect("enum serializes");
                let deriv = serde_json::to_value(b.dpsi_at_origin).expect("enum serializes");
                vec![
                    fmt_float(b.s),
                    value.as_str().unwrap_or_default().to_string(),
                    deriv.as_str().unwrap_or_default().to_string(),
                    b.allowed_parities.iter().map(|p| parity_name(*p)).collect::<Vec<_>>().join(";"),
                    deg.to_string(),
                ]
            });
            Ok(csv(&["s", "psi_at_origin", "dpsi_at_origin", "allowed_parities", "degeneracy"], rows))
        }
    }
}

pub fn cmd_spectrum(
    c: &Couplings,
    nmax: usize,
    domain: NormalizationDomain,
    format: OutputFormat,
) -> Result<String, CliError> {
    let sp = spectrum(&SpectrumRequest {
        g1: c.g1,
        g2: c.g2,
        n_max: nmax,
        normalization_domain: domain,
    })?;
    let full = domain == NormalizationDomain::FullLine;
    match format {
        OutputFormat::Csv => {
            let mut header = vec!["n", "energy", "s", "kappa"];
            if full {
                header.push("parity");
            }
            let rows = sp.states.iter().map(|st| {
                let mut row = vec![st.n.to_string(), fmt_float(st.energy), fmt_float(st.s), fmt_float(st.kappa)];
                if full {
                    row.push(st.parity.map(parity_name).unwrap_or("none").to_string());
                }
                row
            });
            let mut text = csv(&header, rows);
            if sp.verdict == Verdict::NoBoundStates {
                text.push_str("# verdict: no bound states\n");
            }
            Ok(text)
        }
        OutputFormat::Json => {
            let states: Vec<serde_json::Value> = sp
                .states
                .iter()
                .map(|st| {
                    let mut v = json!({"n": st.n, "energy": st.energy, "s": st.s, "kappa": st.kappa});
                    if full {
                        v["parity"] = json!(st.parity);
                    }
                    v
                })
                .collect();
            Ok(json_text(&json!({
                "g1": c.g1,
                "g2": c.g2,
                "verdict": sp.verdict,
                "states": states,
            })))
        }
    }
}

fn single_state(c: &Couplings, n: usize, domain: NormalizationDomain) -> Result<BoundState, CliError> {
    let sp = spectrum(&SpectrumRequest {
        g1: c.g1,
        g2: c.g2,
        n_max: n,
        normalization_domain: domain,
    })?;
    let state = sp
        .states
        .into_iter()
        .filter(|st| st.n == n)
        .max_by_key(|st| st.parity == Some(Parity::Odd))
        .ok_or_else(|| Error::InvalidParameter(format!("no bound state for g1 = {}, g2 = {}", c.g1, c.g2)))?;
    Ok(state)
}

pub fn cmd_wavefunction(
    c: &Couplings,
    n: usize,
    samples: &Samples,
    domain: NormalizationDomain,
    format: OutputFormat,
) -> Result<String, CliError> {
    samples.validate()?;
    let state = single_state(c, n, domain)?;
    let zeta = samples.abscissae();
    match format {
        OutputFormat::Csv => Ok(csv(
            &["zeta", "psi", "rho"],
            zeta.iter()
                .map(|&z| vec![fmt_float(z), fmt_float(state.psi(z)), fmt_float(density(&state, z))]),
        )),
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = zeta
                .iter()
                .map(|&z| json!({"zeta": z, "psi": state.psi(z), "rho": density(&state, z)}))
                .collect();
            Ok(json_text(&json!({
                "g1": c.g1,
                "g2": c.g2,
                "n": n,
                "energy": state.energy,
                "samples": rows,
            })))
        }
    }
}

/// One row of the analytic/grid comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleRow {
    pub n: usize,
    pub analytic: f64,
    pub grid: f64,
    pub relative_error: f64,
}

pub fn oracle_rows(c: &Couplings, nmax: usize, points: Option<usize>) -> Result<Vec<OracleRow>, Error> {
    let states = kratzer_spectrum(c.g1, c.g2, nmax)?;
    if states.is_empty() {
        return Ok(Vec::new());
    }
    let potential = PotentialSpec::kratzer(c.g1, c.g2)?;
    let mut cfg = GridConfig::for_potential(&potential, states.len())?;
    if let Some(p) = points {
        cfg = GridConfig::new(cfg.zeta_min, cfg.zeta_max, p, cfg.num_eigenvalues)?.with_inner(cfg.inner);
    }
    let grid = solve_grid(&potential, &cfg)?;
    Ok(states
        .iter()
        .zip(&grid.energies)
        .map(|(st, &e)| OracleRow {
            n: st.n,
            analytic: st.energy,
            grid: e,
            relative_error: ((e - st.energy) / st.energy).abs(),
        })
        .collect())
}

pub fn cmd_oracle(c: &Couplings, nmax: usize, points: Option<usize>, format: OutputFormat) -> Result<String, CliError> {
    let rows = oracle_rows(c, nmax, points)?;
    match format {
        OutputFormat::Csv => Ok(csv(
            &["n", "analytic", "grid", "relative_error"],
            rows.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    fmt_float(r.analytic),
                    fmt_float(r.grid),
                    fmt_float(r.relative_error),
                ]
            }),
        )),
        OutputFormat::Json => Ok(json_text(&json!({"g1": c.g1, "g2": c.g2, "rows": rows}))),
    }
}

/// A normalized half-line ground state sampled for plotting.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub g1: f64,
    pub g2: f64,
    pub state: BoundState,
    pub zeta: Vec<f64>,
    pub psi: Vec<f64>,
}

fn ground_curve(g1: f64, g2: f64, zeta: &[f64]) -> Result<Curve, Error> {
    let state = kratzer_spectrum(g1, g2, 0)?
        .pop()
        .ok_or_else(|| Error::InvalidParameter(format!("no ground state for g1 = {g1}")))?;
    Ok(Curve {
        g1,
        g2,
        state,
        zeta: zeta.to_vec(),
        psi: zeta.iter().map(|&z| state.psi(z)).collect(),
    })
}

/// Curves of both figures, evaluated concurrently.
pub fn figure_curves(samples: &Samples) -> Result<(Vec<Curve>, Vec<Curve>), Error> {
    let zeta = samples.abscissae();
    let params: Vec<(f64, f64)> = FIG1_G2
        .iter()
        .map(|&g2| (FIG1_G1, g2))
        .chain(FIG2_G1.iter().map(|&g1| (g1, FIG2_G2)))
        .collect();
    let curves: Vec<Result<Curve, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = params
            .iter()
            .map(|&(g1, g2)| {
                let zeta = &zeta;
                scope.spawn(move || ground_curve(g1, g2, zeta))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("figure worker panicked"))
            .collect()
    });
    let mut curves = curves.into_iter().collect::<Result<Vec<_>, _>>()?;
    let fig2 = curves.split_off(FIG1_G2.len());
    Ok((curves, fig2))
}

fn curves_text(curves: &[Curve], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => csv(
            &["g1", "g2", "zeta", "psi"],
            curves.iter().flat_map(|c| {
                c.zeta
                    .iter()
                    .zip(&c.psi)
                    .map(move |(&z, &p)| vec![fmt_float(c.g1), fmt_float(c.g2), fmt_float(z), fmt_float(p)])
            }),
        ),
        OutputFormat::Json => {
            let curves: Vec<serde_json::Value> = curves
                .iter()
                .map(|c| {
                    json!({
                        "g1": c.g1,
                        "g2": c.g2,
                        "energy": c.state.energy,
                        "zeta": c.zeta,
                        "psi": c.psi,
                    })
                })
                .collect();
            json_text(&json!({ "curves": curves }))
        }
    }
}

pub fn cmd_figures(samples: &Samples, format: OutputFormat, dir: &Path) -> Result<Vec<Emitted>, CliError> {
    samples.validate()?;
    let (fig1, fig2) = figure_curves(samples)?;
    let ext = match format {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
    };
    let mut summary = String::new();
    let _ = writeln!(summary, "wrote {} and {}", dir.join(format!("fig1.{ext}")).display(), dir.join(format!("fig2.{ext}")).display());
    Ok(vec![
        Emitted {
            path: Some(dir.join(format!("fig1.{ext}"))),
            contents: curves_text(&fig1, format),
        },
        Emitted {
            path: Some(dir.join(format!("fig2.{ext}"))),
            contents: curves_text(&fig2, format),
        },
        Emitted {
            path: None,
            contents: summary,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("boundstate").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn classify_double_degeneracy() {
        let (code, out, _) = run_args(&["classify", "--beta", "2", "--g2", "0.3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["degeneracy"], "double");
        assert_eq!(v["allowed_parities"], json!(["even", "odd"]));
        assert_eq!(v["branches"][0]["dpsi_at_origin"], "zero");
    }

    #[test]
    fn classify_intermediate() {
        let (code, out, _) = run_args(&["classify", "--beta", "1.5"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["allowed_parities"], json!(["odd"]));
        assert_eq!(v["degeneracy"], "nondegenerate");
    }

    #[test]
    fn classify_supercritical_exit_code() {
        let (code, _, err) = run_args(&["classify", "--beta", "2", "--g2", "-0.2"]);
        assert_eq!(code, EXIT_PHYSICS);
        assert!(err.contains("alpha_c"), "{err}");
    }

    #[test]
    fn classify_csv() {
        let (code, out, _) = run_args(&["classify", "--beta", "0.5", "--format", "csv"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "s,psi_at_origin,dpsi_at_origin,allowed_parities,degeneracy");
        assert!(lines[1].contains(",finite,zero,even,nondegenerate"));
        assert!(lines[2].contains(",zero,finite,odd,nondegenerate"));
    }

    #[test]
    fn spectrum_table() {
        let (code, out, _) = run_args(&["spectrum", "--g1", "-10", "--g2", "0", "--nmax", "2"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "n,energy,s,kappa");
        let energies: Vec<f64> = lines[1..].iter().map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
        assert_eq!(energies, vec![-50.0, -12.5, -50.0 / 9.0]);
    }

    #[test]
    fn spectrum_without_coulomb_term() {
        let (code, out, _) = run_args(&["spectrum", "--g1", "0", "--g2", "0.3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,energy,s,kappa\n# verdict: no bound states\n");
        let (_, out, _) = run_args(&["spectrum", "--g1", "0", "--g2", "0.3", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "no_bound_states");
        assert_eq!(v["states"], json!([]));
    }

    #[test]
    fn spectrum_full_line_lists_parities() {
        let (_, out, _) = run_args(&["spectrum", "--g1", "-10", "--g2", "0.3", "--nmax", "1", "--domain", "full"]);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "n,energy,s,kappa,parity");
        assert_eq!(lines.len(), 5);
        assert!(lines[1].ends_with(",even") && lines[2].ends_with(",odd"));
    }

    #[test]
    fn invalid_physics_exit_codes() {
        assert_eq!(run_args(&["spectrum", "--g1", "-10", "--g2", "-0.2"]).0, EXIT_PHYSICS);
        assert_eq!(run_args(&["classify", "--beta", "3"]).0, EXIT_PHYSICS);
        assert_eq!(run_args(&["wavefunction", "--g1", "4"]).0, EXIT_PHYSICS);
        assert_eq!(run_args(&["oracle", "--g1", "0", "--g2", "0.3"]).0, EXIT_PHYSICS);
    }

    #[test]
    fn io_failure_exit_code() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        std::fs::write(&blocker, "x").unwrap();
        let target = blocker.join("out.csv");
        let (code, _, _) = run_args(&["spectrum", "--g1", "-1", "--output", target.to_str().unwrap()]);
        assert_eq!(code, EXIT_IO);
    }

    #[test]
    fn wavefunction_samples() {
        let (code, out, _) = run_args(&["wavefunction", "--g1", "-10", "--samples", "11", "--zeta-max", "1"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "zeta,psi,rho");
        assert_eq!(lines.len(), 12);
        let first: Vec<f64> = lines[1].split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(first, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn oracle_agreement() {
        let rows = oracle_rows(&Couplings { g1: -10.0, g2: 0.3 }, 3, None).unwrap();
        assert_eq!(rows.len(), 4);
        for r in rows {
            assert!(r.relative_error < 5e-3, "{r:?}");
        }
    }

    #[test]
    fn csv_is_deterministic_and_exact() {
        let a = run_args(&["spectrum", "--g1", "-7.3", "--g2", "0.17", "--nmax", "5"]).1;
        let b = run_args(&["spectrum", "--g1", "-7.3", "--g2", "0.17", "--nmax", "5"]).1;
        assert_eq!(a, b);
        let states = kratzer_spectrum(-7.3, 0.17, 5).unwrap();
        for (line, st) in a.lines().skip(1).zip(&states) {
            let e: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
            assert_eq!(e.to_bits(), st.energy.to_bits());
        }
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let out = run_args(&["spectrum", "--g1", "-7.3", "--g2", "0.17", "--nmax", "5", "--format", "json"]).1;
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let states = kratzer_spectrum(-7.3, 0.17, 5).unwrap();
        for (row, st) in v["states"].as_array().unwrap().iter().zip(&states) {
            assert_eq!(row["energy"].as_f64().unwrap().to_bits(), st.energy.to_bits());
            assert_eq!(row["kappa"].as_f64().unwrap().to_bits(), st.kappa.to_bits());
            assert_eq!(row["s"].as_f64().unwrap().to_bits(), st.s.to_bits());
        }
    }

    #[test]
    fn figures_write_files() {
        let dir = tempfile::tempdir().unwrap();
        let (code, _, _) = run_args(&["figures", "--output", dir.path().to_str().unwrap()]);
        assert_eq!(code, 0);
        let fig1 = std::fs::read_to_string(dir.path().join("fig1.csv")).unwrap();
        assert_eq!(fig1.lines().count(), 1 + 5 * 600);
        let fig2 = std::fs::read_to_string(dir.path().join("fig2.csv")).unwrap();
        assert_eq!(fig2.lines().count(), 1 + 2 * 600);
        assert!(fig1.starts_with("g1,g2,zeta,psi\n"));
    }

    #[test]
    fn float_format() {
        assert_eq!(fmt_float(-50.0), "-5.0000000000000000e1");
        for x in [0.1, -0.124_999, 1.0 / 3.0, 6.02e23, f64::MIN_POSITIVE] {
            assert_eq!(fmt_float(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }
}
