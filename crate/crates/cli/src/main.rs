use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use clifford_cli::compare::run_compare;
use clifford_cli::config::{
    DEFAULT_EPSILON, DEFAULT_FRAMES, DEFAULT_GRID, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use clifford_cli::output::write_output;
use clifford_cli::verify::run_verify;
use clifford_cli::{sweep, CliError, OutputFormat, RunConfig, Status};

#[derive(Parser)]
#[command(
    name = "clifford",
    version,
    about = "Fibrations of S3 x S3 by great 3-spheres"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the property suite and write a report
    Verify(VerifyArgs),
    /// Hot and cold circles on the fiber over 1 as the neighbor direction turns
    Sweep(SweepArgs),
    /// Pointwise-distance variance of fiber pairs, Hopf against f_alpha
    Compare(CompareArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_6)]
    alpha: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Include wall-clock durations (makes output differ between runs)
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_6)]
    alpha: f64,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    #[arg(long, default_value_t = DEFAULT_FRAMES)]
    frames: usize,
    /// With svg, the JSON records go next to it with a .json extension
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_6)]
    alpha: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn verify(args: VerifyArgs) -> Result<bool, CliError> {
    if args.format == OutputFormat::Svg {
        return Err(CliError::Usage("verify writes json or csv".into()));
    }
    let cfg = RunConfig {
        alpha: args.alpha,
        seed: args.seed,
        n_samples: args.samples,
        grid_size: args.grid,
        output_format: args.format,
        output_path: args.out,
        ..Default::default()
    };
    let report = run_verify(&cfg, args.timings)?;
    let text = match cfg.output_format {
        OutputFormat::Csv => report.to_csv(),
        _ => report.to_json(),
    };
    write_output(cfg.output_path.as_deref(), &text)?;
    for c in report.failures() {
        eprintln!(
            "check failed: {} (residual {:?}, tolerance {})",
            c.name, c.residual, c.tolerance
        );
    }
    Ok(report.status == Status::Pass)
}

fn sweep(args: SweepArgs) -> Result<bool, CliError> {
    let cfg = RunConfig {
        alpha: args.alpha,
        epsilon: args.epsilon,
        n_frames: args.frames,
        output_format: args.format,
        output_path: args.out,
        ..Default::default()
    };
    let frames = sweep::run_sweep(&cfg)?;
    let path = cfg.output_path.as_deref();
    match cfg.output_format {
        OutputFormat::Json => write_output(path, &sweep::to_json(&frames))?,
        OutputFormat::Csv => write_output(path, &sweep::to_csv(&frames))?,
        OutputFormat::Svg => {
            write_output(path, &sweep::to_svg(&frames))?;
            if let Some(p) = path {
                write_output(Some(&p.with_extension("json")), &sweep::to_json(&frames))?;
            }
        }
    }
    Ok(true)
}

fn compare(args: CompareArgs) -> Result<bool, CliError> {
    let cfg = RunConfig {
        alpha: args.alpha,
        seed: args.seed,
        output_path: args.out,
        ..Default::default()
    };
    let report = run_compare(&cfg)?;
    write_output(cfg.output_path.as_deref(), &report.to_json())?;
    if report.status == Status::Fail {
        eprintln!("compare failed: Hopf fibers not parallel or f_alpha fibers all parallel");
    }
    Ok(report.status == Status::Pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
        Command::Compare(a) => compare(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
