use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use dicke_squeeze::analytic::ClosedForm;
use dicke_squeeze::oracle::{squeezing_parameter_oracle, squeezing_parameter_scan, DEFAULT_SCAN_STEPS, MIN_SCAN_STEPS};
use dicke_squeeze::state::FULL_HILBERT_MAX_N;
use dicke_squeeze::verify::{self, VerifyOptions};
use dicke_squeeze::{squeezing_parameter, DickeClassConfig, SqueezeError, SqueezingReport, Verdict};

use crate::config::ConfigFile;
use crate::csv::{to_csv_string, write_csv};
use crate::error::{CliError, EXIT_OK, EXIT_USAGE};
use crate::figures::{build_figure, FigureId};
use crate::sweep::{run_sweep, MethodChoice, SweepSpec};

#[derive(Debug, Parser)]
#[command(name = "dicke-squeeze", version, about = "Spin squeezing of Dicke-class symmetric multiqubit states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the squeezing parameter at one (N, k, a).
    Xi(XiArgs),
    /// Write a CSV over a grid of a for one N and several k.
    Sweep(SweepArgs),
    /// Reproduce one of the reference figures as SVG plus CSV.
    Figure(FigureArgs),
    /// Run the cross-check suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct XiArgs {
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long, value_enum)]
    pub method: Option<MethodChoice>,
    /// Angle resolution for `--method scan`.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub a_start: Option<f64>,
    #[arg(long)]
    pub a_end: Option<f64>,
    /// Number of grid points, both ends included.
    #[arg(long)]
    pub a_steps: Option<usize>,
    #[arg(long, value_enum)]
    pub method: Option<MethodChoice>,
    /// Angle resolution for `--method scan`.
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: Option<u32>,
    /// Comma-separated multiplicities.
    #[arg(long, value_delimiter = ',')]
    pub k_list: Option<Vec<u32>>,
    /// Single multiplicity, shorthand for a one-element `--k-list`.
    #[arg(long, conflicts_with = "k_list")]
    pub k: Option<u32>,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Output CSV path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub which: FigureId,
    #[command(flatten)]
    pub grid: GridArgs,
    /// SVG path; the CSV goes next to it with a `.csv` extension.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long)]
    pub tables_only: bool,
    /// Angle resolution of the scan check.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn load_config(path: Option<&Path>) -> Result<ConfigFile, CliError> {
    match path {
        None => Ok(ConfigFile::default()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|source| CliError::ReadConfig {
                path: p.to_owned(),
                source,
            })?;
            ConfigFile::parse(&text)
        }
    }
}

fn required<T>(flag: Option<T>, file: Option<T>, name: &str) -> Result<T, CliError> {
    flag.or(file)
        .ok_or_else(|| CliError::Usage(format!("missing required value --{name} (flag or config key)")))
}

fn scan_steps(flag: Option<usize>, file: &ConfigFile) -> Result<usize, CliError> {
    let steps = flag.or(file.get("steps")?).unwrap_or(DEFAULT_SCAN_STEPS);
    if steps < MIN_SCAN_STEPS {
        return Err(SqueezeError::ScanResolution {
            steps,
            min: MIN_SCAN_STEPS,
        }
        .into());
    }
    Ok(steps)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_owned(),
        source,
    })
}

pub fn format_report(r: &SqueezingReport) -> String {
    let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_else(|| "undefined".into());
    format!(
        "N = {}\nk = {}\na = {}\nmethod = {}\nsx = {}\nsy = {}\nsz = {}\nperp_var = {}\nxi = {}\nphi_opt = {}\nverdict = {}\n",
        r.config.n(),
        r.config.k(),
        r.config.a(),
        r.method,
        r.spin.sx,
        r.spin.sy,
        r.spin.sz,
        opt(r.perp_variance_min),
        opt(r.xi),
        opt(r.phi_opt),
        r.verdict
    )
}

fn cmd_xi(args: XiArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let file = load_config(args.config.as_deref())?;
    let n = required(args.n, file.get("n")?, "n")?;
    let k = required(args.k, file.get("k")?, "k")?;
    let a = required(args.a, file.get("a")?, "a")?;
    let method = args.method.or(file.get("method")?).unwrap_or(MethodChoice::Analytic);
    let steps = scan_steps(args.steps, &file)?;
    let cfg = DickeClassConfig::new(n, k, a)?;

    let reports = match method {
        MethodChoice::Analytic => vec![squeezing_parameter(&cfg)?],
        MethodChoice::Oracle => vec![squeezing_parameter_oracle(&cfg)],
        MethodChoice::Scan => vec![squeezing_parameter_scan(&cfg, steps)?],
        MethodChoice::Both => vec![squeezing_parameter(&cfg)?, squeezing_parameter_oracle(&cfg)],
    };
    let text = reports.iter().map(format_report).collect::<Vec<_>>().join("\n");
    out.write_all(text.as_bytes()).ok();
    if reports.iter().any(|r| r.verdict == Verdict::UndefinedMeanSpin) {
        return Err(SqueezeError::UndefinedMeanSpin.into());
    }
    Ok(())
}

fn grid_spec(base: SweepSpec, grid: &GridArgs, file: &ConfigFile) -> Result<SweepSpec, CliError> {
    Ok(SweepSpec {
        a_start: grid.a_start.or(file.get("a-start")?).unwrap_or(base.a_start),
        a_end: grid.a_end.or(file.get("a-end")?).unwrap_or(base.a_end),
        a_steps: grid.a_steps.or(file.get("a-steps")?).unwrap_or(base.a_steps),
        method: grid.method.or(file.get("method")?).unwrap_or(base.method),
        scan_steps: scan_steps(grid.steps, file)?,
        ..base
    })
}

fn cmd_sweep(args: SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let file = load_config(args.config.as_deref())?;
    let n = required(args.n, file.get("n")?, "n")?;
    let k_list = args
        .k_list
        .or(args.k.map(|k| vec![k]))
        .or(file.get_list("k-list")?)
        .or(file.get("k")?.map(|k| vec![k]));
    let k_list = required(k_list, None, "k-list")?;
    let spec = grid_spec(SweepSpec::new(n, k_list), &args.grid, &file)?;
    let rows = run_sweep(&spec)?;
    match args.out.or(file.get("out")?) {
        Some(path) => write_file(&path, &to_csv_string(&rows)),
        None => write_csv(out, &rows).map_err(|source| CliError::Write {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn cmd_figure(args: FigureArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let file = load_config(args.config.as_deref())?;
    let spec = grid_spec(args.which.sweep_spec(), &args.grid, &file)?;
    let svg_path = args
        .out
        .or(file.get("out")?)
        .unwrap_or_else(|| PathBuf::from(format!("{}.svg", args.which)));
    let csv_path = svg_path.with_extension("csv");
    let figure = build_figure(args.which, &spec)?;
    write_file(&svg_path, &figure.svg)?;
    write_file(&csv_path, &to_csv_string(&figure.rows))?;
    writeln!(out, "wrote {} and {} ({} rows)", svg_path.display(), csv_path.display(), figure.rows.len()).ok();
    Ok(())
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let file = load_config(args.config.as_deref())?;
    let max_n = args.max_n.or(file.get("max-n")?).unwrap_or(FULL_HILBERT_MAX_N);
    if !(2..=FULL_HILBERT_MAX_N).contains(&max_n) {
        return Err(CliError::Validation(format!(
            "max-n = {max_n} is outside 2..={FULL_HILBERT_MAX_N}"
        )));
    }
    let options = VerifyOptions {
        max_n,
        tables_only: args.tables_only || file.get_bool("tables-only")?,
        scan_steps: scan_steps(args.steps, &file)?,
    };
    let start = Instant::now();
    let report = verify::run(&ClosedForm, &options);
    for suite in &report.suites {
        writeln!(out, "{suite}").ok();
    }
    writeln!(
        out,
        "{} suites, {} checks, {:.2?}",
        report.suites.len(),
        report.suites.iter().map(|s| s.checks).sum::<usize>(),
        start.elapsed()
    )
    .ok();
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::VerifyFailed {
            suites: report.failed_suites().into_iter().map(String::from).collect(),
        })
    }
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Xi(args) => cmd_xi(args, out),
        Command::Sweep(args) => cmd_sweep(args, out),
        Command::Figure(args) => cmd_figure(args, out),
        Command::Verify(args) => cmd_verify(args, out),
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    write!(out, "{e}").ok();
                    EXIT_OK
                }
                _ => {
                    write!(err, "{e}").ok();
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            e.exit_code()
        }
    }
}
