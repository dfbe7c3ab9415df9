//! Command-line front end. [`run`] returns the process exit code:
//! 0 on success, 1 on usage or input errors, 2 on numerical-accuracy errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{
    build_x, build_z, decompose_hermitian, decompose_unitary, parse_matrix, write_matrix,
    DecompositionKind, HERMITIAN_TOL,
};
use crate::channel::lossy_gate;
use crate::error::{Error, Result};
use crate::numfmt::fmt10;
use crate::overlap::{chi_sweep, BeamGeometry, ChiModel};
use crate::sweep::{
    dimension_comparison, load_state, probability_map, run_selftest, write_atomic, Objective,
    SweepConfig,
};

#[derive(Debug, Parser)]
#[command(
    name = "oam-qudit",
    version,
    about = "Lossy OAM qudit gates: algebra, overlaps and sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a shift or clock operator, or decompose a matrix read from a file.
    Gates(GatesArgs),
    /// Tabulate conversion coefficients chi over OAM values and shifts (CSV).
    Chi(ChiArgs),
    /// Run one lossy gate and print its report line.
    Apply(ApplyArgs),
    /// Success-probability heatmap of uniform states over base OAM and shift (CSV).
    Map(MapArgs),
    /// Compare the gate across the built-in d = 2..5 states.
    Table(TableArgs),
    /// Run the built-in invariant checks.
    Selftest,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Operator {
    X,
    Z,
}

#[derive(Debug, Args)]
struct GatesArgs {
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    m: i64,
    #[arg(long, value_enum, default_value_t = Operator::X)]
    op: Operator,
    /// Matrix file ("d" line, then d rows of re+imj entries) to decompose.
    #[arg(long, value_name = "FILE")]
    decompose: Option<PathBuf>,
}

/// Settings shared by the sweep commands; each overrides the config file.
#[derive(Debug, Args)]
struct SweepArgs {
    /// Flat key = value file supplying defaults for the flags below.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i32>,
    #[arg(long, allow_negative_numbers = true)]
    zs_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    zs_max: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    /// Beam waist.
    #[arg(long)]
    w0: Option<f64>,
    /// Rayleigh length.
    #[arg(long)]
    zr: Option<f64>,
    #[arg(long)]
    radial_points: Option<usize>,
    #[arg(long)]
    radial_cutoff: Option<f64>,
    /// Write output here (atomically) instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ChiArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    #[arg(long, allow_negative_numbers = true)]
    l_min: Option<i32>,
    #[arg(long, allow_negative_numbers = true)]
    l_max: Option<i32>,
}

#[derive(Debug, Args)]
struct ApplyArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    /// Preset name or state file.
    #[arg(long)]
    state: Option<String>,
    /// Shift zS/zR.
    #[arg(long, allow_negative_numbers = true)]
    zs: f64,
}

#[derive(Debug, Args)]
struct MapArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    l_min: Option<i32>,
    #[arg(long, allow_negative_numbers = true)]
    l_max: Option<i32>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    sweep: SweepArgs,
    #[arg(long)]
    objective: Option<String>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

impl SweepArgs {
    fn resolve(&self) -> Result<SweepConfig> {
        let mut cfg = match &self.config {
            Some(path) => SweepConfig::from_file(path)?,
            None => SweepConfig::default(),
        };
        if let Some(m) = self.m {
            cfg.m = m;
        }
        if let Some(v) = self.zs_min {
            cfg.zs.min = v;
        }
        if let Some(v) = self.zs_max {
            cfg.zs.max = v;
        }
        if let Some(v) = self.steps {
            cfg.zs.steps = v;
        }
        if self.w0.is_some() || self.zr.is_some() {
            cfg.geometry = BeamGeometry::new(
                self.w0.unwrap_or(cfg.geometry.w0()),
                self.zr.unwrap_or(cfg.geometry.z_r()),
            )?;
        }
        if let Some(v) = self.radial_points {
            cfg.quadrature.radial_points = v;
        }
        if let Some(v) = self.radial_cutoff {
            cfg.quadrature.radial_cutoff = v;
        }
        if self.out.is_some() {
            cfg.out = self.out.clone();
        }
        Ok(cfg)
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn model(cfg: &SweepConfig) -> Result<ChiModel> {
    ChiModel::new(cfg.geometry, cfg.quadrature)
}

fn gates(args: &GatesArgs) -> Result<()> {
    if let Some(path) = &args.decompose {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let a = parse_matrix(&text)?;
        let coeffs = if a.hermitian_deviation() <= HERMITIAN_TOL {
            decompose_hermitian(&a)?
        } else {
            decompose_unitary(&a)?
        };
        let mut out = match coeffs.kind() {
            DecompositionKind::HermitianReal => String::from("# A = sum_jk C_jk Q_jk\n"),
            DecompositionKind::UnitaryComplex => String::from("# U = sum_jk g_jk X^j Z^k\n"),
        };
        out.push_str("j,k,re,im\n");
        for j in 0..coeffs.dim() {
            for k in 0..coeffs.dim() {
                let c = coeffs.get(j, k);
                out.push_str(&format!("{j},{k},{},{}\n", fmt10(c.re), fmt10(c.im)));
            }
        }
        return emit(None, &out);
    }
    let op = match args.op {
        Operator::X => build_x(args.d, args.m)?,
        Operator::Z => build_z(args.d, args.m)?,
    };
    emit(None, &write_matrix(&op))
}

fn chi(args: &ChiArgs) -> Result<()> {
    let mut cfg = args.sweep.resolve()?;
    cfg.l_min = args.l_min.unwrap_or(cfg.l_min);
    cfg.l_max = args.l_max.unwrap_or(cfg.l_max);
    cfg.validate()?;
    let l_values: Vec<i32> = (cfg.l_min..=cfg.l_max).collect();
    let table = chi_sweep(cfg.m, &l_values, &cfg.zs.points(), &model(&cfg)?)?;
    emit(cfg.out.as_deref(), &table.to_csv())
}

fn apply(args: &ApplyArgs) -> Result<()> {
    let mut cfg = args.sweep.resolve()?;
    if let Some(state) = &args.state {
        cfg.state = state.clone();
    }
    cfg.validate()?;
    let state = load_state(&cfg.state)?;
    let outcome = lossy_gate(&state, cfg.m, &model(&cfg)?, args.zs)?;
    emit(cfg.out.as_deref(), &(outcome.report_line() + "\n"))
}

fn map(args: &MapArgs) -> Result<()> {
    let mut cfg = args.sweep.resolve()?;
    cfg.d = args.d.unwrap_or(cfg.d);
    cfg.l_min = args.l_min.unwrap_or(cfg.l_min);
    cfg.l_max = args.l_max.unwrap_or(cfg.l_max);
    cfg.validate()?;
    let bases: Vec<i32> = (cfg.l_min..=cfg.l_max).collect();
    let map = probability_map(cfg.d, cfg.m, &bases, &cfg.zs.points(), &model(&cfg)?)?;
    emit(cfg.out.as_deref(), &map.to_csv())
}

fn table(args: &TableArgs) -> Result<()> {
    let mut cfg = args.sweep.resolve()?;
    if let Some(o) = &args.objective {
        cfg.objective = o.parse::<Objective>()?;
    }
    cfg.validate()?;
    let cmp = dimension_comparison(cfg.m, &cfg.zs.points(), cfg.objective, &model(&cfg)?)?;
    let text = match args.format {
        TableFormat::Csv => cmp.to_csv(),
        TableFormat::Text => cmp.to_text(),
    };
    emit(cfg.out.as_deref(), &text)
}

fn selftest() -> Result<bool> {
    let results = run_selftest();
    let mut text = String::new();
    for r in &results {
        text.push_str(&r.line());
        text.push('\n');
    }
    emit(None, &text)?;
    Ok(results.iter().all(|r| r.passed()))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NumericalAccuracy(_) => 2,
        _ => 1,
    }
}

/// Parse `argv` (including the program name) and run the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match &cli.command {
        Command::Gates(a) => gates(a),
        Command::Chi(a) => chi(a),
        Command::Apply(a) => apply(a),
        Command::Map(a) => map(a),
        Command::Table(a) => table(a),
        Command::Selftest => match selftest() {
            Ok(true) => Ok(()),
            Ok(false) => return 2,
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
