//! The `eph` command line.
//!
//! Exit codes: 0 success, 2 malformed input, 3 parameter out of domain,
//! 4 degenerate geometry.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::basis::{self, EvalMode, Order, ShapeParam};
use crate::bench::{self, RhoConfig, TimingConfig};
use crate::curve::EphCurve;
use crate::error::EphError;
use crate::eval::{self, EvalMethod};
use crate::hermite::{self, AngleChoice, HermiteProblem, PlanarTag};
use crate::quat::Vector3;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "eph",
    version,
    about = "PH curves in exponential-polynomial spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a curve on an equispaced grid.
    Eval(EvalArgs),
    /// Solve a C¹ Hermite problem and print the interpolant as JSON.
    Hermite(HermiteArgs),
    /// Tabulate basis functions.
    Basis(BasisArgs),
    /// Run the accuracy or timing experiments.
    Bench(BenchArgs),
}

#[derive(Debug, clap::Args)]
pub struct EvalArgs {
    /// Curve JSON: {"m", "omega", "dim", "control_points"}.
    #[arg(long)]
    pub curve: PathBuf,
    #[arg(long, default_value = "new", value_parser = parse_method)]
    pub method: EvalMethod,
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    /// naive, stable, taylor or auto.
    #[arg(long, default_value = "auto", value_parser = parse_mode)]
    pub mode: EvalMode,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// The data of y = cosh(2ωx)/(2ω) on [0, 1].
    Cosh,
}

#[derive(Debug, clap::Args)]
pub struct HermiteArgs {
    /// Problem JSON: {"r0", "r_end", "di", "df", "omega"} plus "tag" (planar)
    /// or "angles" ({"eta0","eta1","eta2"} or {"eta_m","delta_eta","eta1"}).
    #[arg(long, conflicts_with = "preset")]
    pub problem: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Overrides the problem's omega; required with --preset.
    #[arg(long)]
    pub omega: Option<f64>,
    /// Planar solution (++, +-, -+, --); overrides the problem's tag.
    #[arg(long, value_parser = parse_tag, allow_hyphen_values = true)]
    pub tag: Option<PlanarTag>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write an SVG polyline of the interpolant.
    #[arg(long)]
    pub plot: Option<PathBuf>,
    #[arg(long, default_value_t = 501)]
    pub samples: usize,
    #[arg(long, default_value_t = 640)]
    pub width: u32,
    #[arg(long, default_value_t = 480)]
    pub height: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    Phi,
    Varphi,
    Psi,
    Tau,
}

#[derive(Debug, clap::Args)]
pub struct BasisArgs {
    #[arg(long, value_parser = parse_order)]
    pub m: Order,
    #[arg(long)]
    pub omega: f64,
    #[arg(long, default_value_t = 11)]
    pub grid: usize,
    #[arg(long, value_enum, default_value = "phi")]
    pub kind: BasisKind,
    #[arg(long, default_value = "auto", value_parser = parse_mode)]
    pub mode: EvalMode,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    Rho,
    Breakpoints,
    Timing,
}

#[derive(Debug, clap::Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub experiment: Experiment,
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    #[arg(long, default_value = "1", value_parser = parse_order)]
    pub m: Order,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Random curves per ω (default 100, or 1000 for timing).
    #[arg(long)]
    pub curves: Option<usize>,
    #[arg(long, default_value_t = 501)]
    pub grid_points: usize,
    /// Size of the ω grid of the rho and breakpoints experiments.
    #[arg(long, default_value_t = 500)]
    pub omega_count: usize,
    #[arg(long, default_value_t = 2.0)]
    pub omega_max: f64,
    /// Comma separated ω values of the timing experiment (default 0.096 + 2^k, k = -10..10).
    #[arg(long, value_delimiter = ',')]
    pub omegas: Option<Vec<f64>>,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    /// Comma separated methods (default: all four for rho/breakpoints, the three algorithms for timing).
    #[arg(long, value_delimiter = ',', value_parser = parse_method)]
    pub methods: Option<Vec<EvalMethod>>,
}

fn parse_method(s: &str) -> Result<EvalMethod, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<EvalMode, String> {
    s.parse()
}

fn parse_tag(s: &str) -> Result<PlanarTag, String> {
    s.parse()
}

fn parse_order(s: &str) -> Result<Order, String> {
    let m: u8 = s
        .parse()
        .map_err(|_| format!("m must be 1 or 2, got '{s}'"))?;
    Order::try_from(m)
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Math(EphError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Math(e) => match e {
                EphError::Invalid { .. } => EXIT_INPUT,
                EphError::Domain { .. } | EphError::OverflowHazard(_) => EXIT_DOMAIN,
                EphError::ZeroVector(_)
                | EphError::DegenerateDirection(_)
                | EphError::SingularControlBlock => EXIT_DEGENERATE,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(s) => f.write_str(s),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl From<EphError> for CliError {
    fn from(e: EphError) -> Self {
        CliError::Math(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let s = read_file(path)?;
    serde_json::from_str(&s).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn coord_names(dim: usize) -> &'static str {
    if dim == 2 {
        "x,y"
    } else {
        "x,y,z"
    }
}

fn cmd_eval(a: &EvalArgs) -> CliResult<()> {
    let curve: EphCurve = read_json(&a.curve)?;
    let rows = eval::evaluate_grid(&curve, a.grid, a.method, a.mode)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# command=eval method={} mode={} grid={} m={} omega={} dim={}",
        a.method,
        a.mode.name(),
        a.grid,
        curve.order(),
        curve.omega().get(),
        curve.dim()
    );
    let _ = writeln!(out, "t,{}", coord_names(curve.dim()));
    for (t, p) in rows {
        let _ = write!(out, "{t}");
        for c in p {
            let _ = write!(out, ",{c}");
        }
        out.push('\n');
    }
    emit(&a.out, &out)
}

/// JSON form of a Hermite problem.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermiteDoc {
    pub r0: Vec<f64>,
    pub r_end: Vec<f64>,
    pub di: Vec<f64>,
    pub df: Vec<f64>,
    pub omega: Option<f64>,
    pub tag: Option<PlanarTag>,
    pub angles: Option<AngleChoice>,
}

fn vec3(field: &'static str, v: &[f64], dim: usize) -> CliResult<Vector3> {
    if v.len() != dim {
        return Err(CliError::Input(format!(
            "invalid {field}: expected {dim} coordinates, got {}",
            v.len()
        )));
    }
    Ok(Vector3::new(v[0], v[1], if dim == 3 { v[2] } else { 0.0 }))
}

fn cmd_hermite(a: &HermiteArgs) -> CliResult<()> {
    let (problem, dim, tag, angles, label) = match (a.preset, &a.problem) {
        (Some(Preset::Cosh), _) => {
            let w = a
                .omega
                .ok_or_else(|| CliError::Input("--preset cosh requires --omega".into()))?;
            let p = hermite::cosh_problem(ShapeParam::new(w)?);
            (
                p,
                2,
                Some(a.tag.unwrap_or(PlanarTag::PlusPlus)),
                None,
                "cosh".to_string(),
            )
        }
        (None, Some(path)) => {
            let doc: HermiteDoc = read_json(path)?;
            let dim = doc.r0.len();
            if dim != 2 && dim != 3 {
                return Err(CliError::Input(format!(
                    "invalid r0: expected 2 or 3 coordinates, got {dim}"
                )));
            }
            let w = a
                .omega
                .or(doc.omega)
                .ok_or_else(|| CliError::Input("invalid omega: missing".into()))?;
            let p = HermiteProblem::new(
                vec3("r0", &doc.r0, dim)?,
                vec3("r_end", &doc.r_end, dim)?,
                vec3("di", &doc.di, dim)?,
                vec3("df", &doc.df, dim)?,
                ShapeParam::new(w)?,
            );
            (
                p,
                dim,
                a.tag.or(doc.tag),
                doc.angles,
                path.display().to_string(),
            )
        }
        (None, None) => {
            return Err(CliError::Input(
                "one of --problem or --preset is required".into(),
            ))
        }
    };
    let sol = match (angles, tag) {
        (Some(ang), None) => hermite::solve_spatial(&problem, ang)?,
        (None, Some(t)) if dim == 2 => hermite::solve_planar(&problem, t)?,
        (None, Some(_)) => {
            return Err(CliError::Input(
                "invalid tag: planar tags need 2D data".into(),
            ))
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Input(
                "invalid angles: give either tag or angles".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Input(
                "invalid tag: give a planar tag or angles".into(),
            ))
        }
    };
    let res = hermite::residuals(&problem, &sol.curve)?;
    eprintln!(
        "# hermite source={label} omega={} residuals r0={:e} r_end={:e} di={:e} df={:e}",
        problem.omega.get(),
        res[0],
        res[1],
        res[2],
        res[3]
    );
    if a.preset == Some(Preset::Cosh) {
        eprintln!(
            "# cosh deviation={:e}",
            hermite::hyperbolic_deviation(&sol.curve, 1001)?
        );
    }
    if let Some(path) = &a.plot {
        let spec = PlotSpec::svg(a.samples, a.width, a.height)?;
        let svg = plot_svg(&sol.curve, &spec)?;
        std::fs::write(path, svg)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    let mut json = sol.curve.to_json();
    json.push('\n');
    emit(&a.out, &json)
}

/// Output of a sampled curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotSpec {
    pub samples: usize,
    pub width: u32,
    pub height: u32,
}

impl PlotSpec {
    pub fn svg(samples: usize, width: u32, height: u32) -> CliResult<Self> {
        if samples < 2 {
            return Err(CliError::Input(format!(
                "invalid samples: need at least 2, got {samples}"
            )));
        }
        Ok(PlotSpec {
            samples,
            width,
            height,
        })
    }
}

/// The curve's xy projection as an SVG polyline with the control polygon.
pub fn plot_svg(curve: &EphCurve, spec: &PlotSpec) -> Result<String, EphError> {
    let pts: Vec<(f64, f64)> = (0..spec.samples)
        .map(|k| {
            let t = k as f64 / (spec.samples - 1) as f64;
            eval::eval_new(curve, t).map(|p| (p[0], p[1]))
        })
        .collect::<Result<_, _>>()?;
    let ctrl: Vec<(f64, f64)> = curve
        .control_points()
        .iter()
        .map(|p| (p[0], p[1]))
        .collect();
    let all = pts.iter().chain(&ctrl);
    let (mut x0, mut x1, mut y0, mut y1) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for &(x, y) in all {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let pad = 0.05 * (x1 - x0).max(y1 - y0).max(1e-12);
    let (vx, vy, vw, vh) = (
        x0 - pad,
        -(y1 + pad),
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad,
    );
    let stroke = 0.004 * vw.max(vh);
    let line = |v: &[(f64, f64)]| {
        v.iter()
            .map(|(x, y)| format!("{x},{}", -y))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{vx} {vy} {vw} {vh}">"#,
        spec.width, spec.height
    );
    let _ = writeln!(
        s,
        r#"<polyline fill="none" stroke="gray" stroke-width="{}" stroke-dasharray="{} {}" points="{}"/>"#,
        stroke / 2.0,
        stroke * 2.0,
        stroke,
        line(&ctrl)
    );
    let _ = writeln!(
        s,
        r#"<polyline fill="none" stroke="black" stroke-width="{stroke}" points="{}"/>"#,
        line(&pts)
    );
    s.push_str("</svg>\n");
    Ok(s)
}

fn cmd_basis(a: &BasisArgs) -> CliResult<()> {
    if a.grid < 2 {
        return Err(CliError::Input(format!(
            "invalid grid: need at least 2 points, got {}",
            a.grid
        )));
    }
    let w = ShapeParam::new(a.omega)?;
    let n = a.m.m();
    let (prefix, count) = match a.kind {
        BasisKind::Phi => ("Phi", 2 * n + 2),
        BasisKind::Varphi => ("varphi", 2 * n + 1),
        BasisKind::Psi => ("psi", n + 1),
        BasisKind::Tau => ("tau", 2 * n + 1),
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# command=basis kind={prefix} m={} omega={} grid={} mode={}",
        a.m,
        a.omega,
        a.grid,
        a.mode.name()
    );
    let cols: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
    let _ = writeln!(out, "t,{}", cols.join(","));
    for k in 0..a.grid {
        let t = k as f64 / (a.grid - 1) as f64;
        let vals = match a.kind {
            BasisKind::Phi => basis::phi(a.m, w, t, a.mode)?,
            BasisKind::Varphi => basis::varphi(a.m, w, t)?,
            BasisKind::Psi => basis::psi(a.m, w, t)?,
            BasisKind::Tau => {
                // τ is undefined at the end points
                if k == 0 || k + 1 == a.grid {
                    continue;
                }
                basis::tau(a.m, w, t, a.mode)?
            }
        };
        let _ = write!(out, "{t}");
        for v in vals.iter() {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
    }
    emit(&a.out, &out)
}

fn cmd_bench(a: &BenchArgs) -> CliResult<()> {
    let text = match a.experiment {
        Experiment::Rho | Experiment::Breakpoints => {
            let cfg = RhoConfig {
                d: a.d,
                m: a.m,
                n_curves: a.curves.unwrap_or(100),
                grid_points: a.grid_points,
                omega_grid: bench::omega_grid(a.omega_count, a.omega_max),
                seed: a.seed,
            };
            let methods = a
                .methods
                .clone()
                .unwrap_or_else(|| EvalMethod::ALL.to_vec());
            if a.experiment == Experiment::Rho {
                bench::rho_csv(&cfg, &methods)?
            } else {
                bench::breakpoints_csv(&cfg, &methods)?
            }
        }
        Experiment::Timing => {
            let cfg = TimingConfig {
                d: a.d,
                m: a.m,
                omegas: a
                    .omegas
                    .clone()
                    .unwrap_or_else(TimingConfig::standard_omegas),
                n_curves: a.curves.unwrap_or(1000),
                grid_points: a.grid_points,
                reps: a.reps,
                seed: a.seed,
            };
            let methods = a
                .methods
                .clone()
                .unwrap_or_else(|| EvalMethod::ALGORITHMS.to_vec());
            let rows = bench::time_methods(&cfg, &methods)?;
            bench::timing_csv(&cfg, &rows)
        }
    };
    emit(&a.out, &text)
}

pub fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Hermite(a) => cmd_hermite(a),
        Command::Basis(a) => cmd_basis(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

/// Parses `args`, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
