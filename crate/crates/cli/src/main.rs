//! `ajel` — jackknife empirical likelihood inference from the command line.

mod errors;
mod ingest;
mod report;

use std::path::{Path, PathBuf};

use ajel::kernel::Kernel;
use ajel::{
    confidence_interval, jackknife_pseudo_values, jackknife_pseudo_values_two, test_theta,
    KernelArity, Method, PseudoValueSet, Sample,
};
use ajel_sims::{presets, run_experiment, results_to_csv, SimResult};
use clap::{Args, Parser, Subcommand, ValueEnum};

use errors::{from_lib, CliError, Result};
use ingest::{ingest_csv, DataFile};
use report::{
    to_json, CiReport, DesignEcho, IntervalRow, SimulateReport, TestReport, TestRow,
    SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "ajel",
    version,
    about = "Confidence intervals and tests for U-statistics via jackknife empirical likelihood",
    after_help = "Exit codes: 0 success, 2 usage error, 3 data error, 4 numerical failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Confidence intervals for a U-statistic from CSV data
    Ci(CiArgs),
    /// Likelihood-ratio test of theta = theta0
    Test(TestArgs),
    /// Run a canned Monte Carlo coverage study
    Simulate(SimulateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Jel,
    Ajel,
    Both,
}

impl MethodArg {
    fn resolve(self) -> Vec<Method> {
        match self {
            MethodArg::Jel => vec![Method::Jel],
            MethodArg::Ajel => vec![Method::Ajel],
            MethodArg::Both => vec![Method::Jel, Method::Ajel],
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct DataOptions {
    /// CSV data file (header: group,v1[,v2,...])
    data: PathBuf,
    /// Kernel name; see `ajel ci --help` footer for the registry
    #[arg(long)]
    kernel: String,
    /// Which likelihood to profile
    #[arg(long, value_enum, default_value_t = MethodArg::Ajel)]
    method: MethodArg,
    /// Adjustment level a_n override (default: max(ln(n)/2, 1e-8))
    #[arg(long)]
    an: Option<f64>,
    /// Which group supplies the first (X) sample
    #[arg(long)]
    x_group: Option<String>,
}

#[derive(Args)]
struct OutputOptions {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[command(after_help = kernel_registry_help())]
struct CiArgs {
    #[command(flatten)]
    data: DataOptions,
    /// Confidence level in (0,1); repeat for several (default: 0.90 and 0.95)
    #[arg(long = "level")]
    levels: Vec<f64>,
    #[command(flatten)]
    output: OutputOptions,
}

#[derive(Args)]
#[command(after_help = kernel_registry_help())]
struct TestArgs {
    #[command(flatten)]
    data: DataOptions,
    /// Null value of the parameter
    #[arg(long)]
    theta0: f64,
    #[command(flatten)]
    output: OutputOptions,
}

#[derive(Args)]
struct SimulateArgs {
    /// Canned study: `table1` (pwm on chi-squared(1)) or `table2` (auc on exponentials)
    preset: String,
    /// Master seed; every design and replicate derives its own substream
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Replications per design (default 1000)
    #[arg(long)]
    replications: Option<usize>,
    /// Divide the replication count by 10 for a smoke run
    #[arg(long)]
    quick: bool,
    #[command(flatten)]
    output: OutputOptions,
}

fn kernel_registry_help() -> String {
    let rows: Vec<String> = Kernel::builtin_names()
        .iter()
        .map(|(name, summary)| format!("  {name:<12} {summary}"))
        .collect();
    format!("Kernels:\n{}", rows.join("\n"))
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Ci(args) => cmd_ci(args),
        Command::Test(args) => cmd_test(args),
        Command::Simulate(args) => cmd_simulate(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

fn validate_an(an: Option<f64>) -> Result<Option<f64>> {
    if let Some(value) = an {
        if !(value.is_finite() && value > 0.0) {
            return Err(CliError::Usage(format!(
                "--an must be finite and positive (got {value})"
            )));
        }
    }
    Ok(an)
}

fn resolve_kernel(name: &str) -> Result<Kernel> {
    Kernel::by_name(name).ok_or_else(|| {
        let known: Vec<&str> = Kernel::builtin_names().iter().map(|(n, _)| *n).collect();
        CliError::Usage(format!("unknown kernel '{name}'; available: {}", known.join(", ")))
    })
}

fn resolve_levels(levels: Vec<f64>) -> Result<Vec<f64>> {
    if levels.is_empty() {
        return Ok(vec![0.90, 0.95]);
    }
    for &level in &levels {
        if !(level > 0.0 && level < 1.0) {
            return Err(CliError::Usage(format!(
                "--level must lie strictly between 0 and 1 (got {level})"
            )));
        }
    }
    Ok(levels)
}

/// Build pseudo-values from the ingested file, honoring --x-group.
fn pseudo_values(
    kernel: &Kernel,
    data: &DataFile,
    x_group: Option<&str>,
) -> Result<(PseudoValueSet, DesignEcho)> {
    match kernel.arity() {
        KernelArity::OneSample { .. } => {
            if data.groups.len() != 1 {
                return Err(CliError::Data(format!(
                    "kernel '{}' is one-sample but the file has {} groups",
                    kernel.name(),
                    data.groups.len()
                )));
            }
            let g = &data.groups[0];
            if let Some(label) = x_group {
                if label != g.label {
                    return Err(CliError::Data(format!(
                        "--x-group '{label}' not found; the only group is '{}'",
                        g.label
                    )));
                }
            }
            let sample = Sample::from_rows(g.label.clone(), g.rows.clone()).map_err(from_lib)?;
            let pv = jackknife_pseudo_values(kernel, &sample).map_err(from_lib)?;
            let design = DesignEcho::OneSample { group: g.label.clone(), n: g.rows.len() };
            Ok((pv, design))
        }
        KernelArity::TwoSample { .. } => {
            if data.groups.len() != 2 {
                return Err(CliError::Data(format!(
                    "kernel '{}' is two-sample but the file has {} group(s)",
                    kernel.name(),
                    data.groups.len()
                )));
            }
            let (first, second) = (&data.groups[0], &data.groups[1]);
            let (x, y) = match x_group {
                None => (first, second),
                Some(label) if label == first.label => (first, second),
                Some(label) if label == second.label => (second, first),
                Some(label) => {
                    return Err(CliError::Data(format!(
                        "--x-group '{label}' not found; groups are '{}' and '{}'",
                        first.label, second.label
                    )));
                }
            };
            let xs = Sample::from_rows(x.label.clone(), x.rows.clone()).map_err(from_lib)?;
            let ys = Sample::from_rows(y.label.clone(), y.rows.clone()).map_err(from_lib)?;
            let pv = jackknife_pseudo_values_two(kernel, &xs, &ys).map_err(from_lib)?;
            let design = DesignEcho::TwoSample {
                x_group: x.label.clone(),
                n_x: x.rows.len(),
                y_group: y.label.clone(),
                n_y: y.rows.len(),
            };
            Ok((pv, design))
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_ci(args: CiArgs) -> Result<()> {
    let kernel = resolve_kernel(&args.data.kernel)?;
    let an = validate_an(args.data.an)?;
    let levels = resolve_levels(args.levels)?;
    let methods = args.data.method.resolve();

    let data = ingest_csv(&args.data.data)?;
    let (pv, design) = pseudo_values(&kernel, &data, args.data.x_group.as_deref())?;

    let mut intervals = Vec::with_capacity(methods.len() * levels.len());
    for &method in &methods {
        for &level in &levels {
            let ci = confidence_interval(&pv, level, method, an).map_err(from_lib)?;
            intervals.push(IntervalRow::from(&ci));
        }
    }
    let report = CiReport {
        schema_version: SCHEMA_VERSION,
        command: "ci",
        kernel: kernel.name().to_string(),
        design,
        point_estimate: pv.u_stat(),
        intervals,
    };
    let rendered = match args.output.format {
        Format::Text => report.to_text(),
        Format::Json => to_json(&report),
        Format::Csv => report.to_csv(),
    };
    emit(&rendered, args.output.output.as_deref())
}

fn cmd_test(args: TestArgs) -> Result<()> {
    let kernel = resolve_kernel(&args.data.kernel)?;
    let an = validate_an(args.data.an)?;
    if !args.theta0.is_finite() {
        return Err(CliError::Usage(format!("--theta0 must be finite (got {})", args.theta0)));
    }
    let methods = args.data.method.resolve();

    let data = ingest_csv(&args.data.data)?;
    let (pv, design) = pseudo_values(&kernel, &data, args.data.x_group.as_deref())?;

    let mut tests = Vec::with_capacity(methods.len());
    for &method in &methods {
        let result = test_theta(&pv, args.theta0, method, an).map_err(from_lib)?;
        tests.push(TestRow::from(&result));
    }
    let report = TestReport {
        schema_version: SCHEMA_VERSION,
        command: "test",
        kernel: kernel.name().to_string(),
        design,
        point_estimate: pv.u_stat(),
        theta0: args.theta0,
        tests,
    };
    let rendered = match args.output.format {
        Format::Text => report.to_text(),
        Format::Json => to_json(&report),
        Format::Csv => report.to_csv(),
    };
    emit(&rendered, args.output.output.as_deref())
}

fn cmd_simulate(args: SimulateArgs) -> Result<()> {
    let base = args.replications.unwrap_or(1000);
    let replications = if args.quick { (base / 10).max(1) } else { base };
    let specs = match args.preset.as_str() {
        "table1" => presets::table1(args.seed, replications),
        "table2" => presets::table2(args.seed, replications),
        other => {
            return Err(CliError::Usage(format!(
                "unknown preset '{other}'; available: table1, table2"
            )));
        }
    };

    let mut results: Vec<SimResult> = Vec::with_capacity(specs.len());
    for spec in &specs {
        results.push(run_experiment(spec).map_err(from_lib)?);
    }

    let report = SimulateReport {
        schema_version: SCHEMA_VERSION,
        command: "simulate",
        preset: &args.preset,
        master_seed: args.seed,
        replications,
        results: &results,
    };
    let rendered = match args.output.format {
        Format::Text => report.to_text(),
        Format::Json => to_json(&report),
        Format::Csv => results_to_csv(&results),
    };
    emit(&rendered, args.output.output.as_deref())
}
