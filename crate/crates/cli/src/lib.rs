//! The `fvmlf` command-line tool: noise injection, filtering, evaluation,
//! parameter sweeps, and the axiom harness.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 axiom violation.

pub mod io;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fvmlf_core::axioms::suite::{render_suite, run_standard_suite};
use fvmlf_core::image::{filter_image, synthetic_scene, FilterKind, DEFAULT_K, DEFAULT_P};
use fvmlf_core::noise::{add_impulse, NoiseKind, NoiseSpec};
use fvmlf_core::quality::{evaluate, QualityReport};
use fvmlf_core::Execution;

pub use io::{decode_ppm, encode_ppm, read_image, write_image};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Core(#[from] fvmlf_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0} axiom check(s) reported violations")]
    AxiomViolation(usize),
}

impl CliError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub(crate) fn in_file(self, path: &Path) -> Self {
        match self {
            CliError::Format(msg) => CliError::Format(format!("{}: {msg}", path.display())),
            other => other,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::AxiomViolation(_) => 3,
            _ => 2,
        }
    }
}

const NOISE_HELP: &str = "Noise uses xoshiro256++ seeded through SplitMix64. \
Pixels are visited in row-major order; one draw per pixel decides the hit, \
and replacement values come from a second stream (the first advanced by one \
2^128-step jump), so --per-channel never changes which pixels are hit.";

#[derive(Debug, Parser)]
#[command(
    name = "fvmlf",
    version,
    about = "Fuzzy vector median-like filtering of RGB images"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Add impulse noise to an image.
    #[command(after_help = NOISE_HELP)]
    Noise {
        #[command(flatten)]
        noise: NoiseArgs,
        input: PathBuf,
        output: PathBuf,
    },
    /// Filter an image.
    Filter {
        #[command(flatten)]
        filter: FilterArgs,
        /// vmf, fvmf, fvmlf-full, or fvmlf-scheme
        #[arg(long, default_value = "fvmlf-scheme")]
        kind: String,
        input: PathBuf,
        output: PathBuf,
    },
    /// Print `mae,psnr,ncd` for a test image against a reference.
    Eval { reference: PathBuf, test: PathBuf },
    /// Run noise, filtering, and evaluation over a K x density grid.
    #[command(after_help = NOISE_HELP)]
    Sweep(SweepArgs),
    /// Run the axiom and property harness.
    Axioms {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Disable data-parallel sampling.
        #[arg(long)]
        sequential: bool,
    },
    /// Write the built-in synthetic test scene.
    Synth {
        #[arg(long, default_value_t = 64)]
        width: usize,
        #[arg(long, default_value_t = 64)]
        height: usize,
        output: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct NoiseArgs {
    /// fixed (salt and pepper) or random
    #[arg(long = "noise", default_value = "fixed")]
    kind: String,
    #[arg(long, default_value_t = 0.1)]
    density: f64,
    /// Corrupt channels independently.
    #[arg(long)]
    per_channel: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    /// Exponent of the L_p distance (vmf).
    #[arg(long, default_value_t = DEFAULT_P)]
    p: f64,
    /// Smoothing constant of the fuzzy metrics.
    #[arg(long = "K", default_value_t = DEFAULT_K)]
    k: f64,
    /// Odd window side.
    #[arg(long, default_value_t = 3)]
    window: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Source image; the synthetic scene when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Side of the synthetic scene.
    #[arg(long, default_value_t = 64)]
    size: usize,
    #[arg(long = "K", value_delimiter = ',', default_values_t = [256.0, 1024.0, 4096.0])]
    k: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_values_t = [0.05, 0.1, 0.2])]
    density: Vec<f64>,
    #[arg(
        long,
        value_delimiter = ',',
        default_values_t = ["vmf".to_string(), "fvmf".to_string(), "fvmlf-full".to_string(), "fvmlf-scheme".to_string()]
    )]
    filters: Vec<String>,
    #[arg(long = "noise", default_value = "fixed")]
    noise: String,
    #[arg(long)]
    per_channel: bool,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_P)]
    p: f64,
    #[arg(long, default_value_t = 3)]
    window: usize,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also write the noisy and filtered images here as PPM.
    #[arg(long)]
    images: Option<PathBuf>,
}

fn noise_spec(
    kind: &str,
    density: f64,
    per_channel: bool,
    seed: u64,
) -> Result<NoiseSpec, CliError> {
    let kind: NoiseKind = kind
        .parse()
        .map_err(|e: fvmlf_core::Error| CliError::Usage(e.to_string()))?;
    NoiseSpec::new(kind, density, per_channel, seed).map_err(|e| CliError::Usage(e.to_string()))
}

fn filter_kind(name: &str, p: f64, k: f64) -> Result<FilterKind, CliError> {
    FilterKind::from_name(name, p, k).map_err(|e| CliError::Usage(e.to_string()))
}

/// Parameter problems are usage errors rather than data errors.
fn validated(kind: FilterKind, window: usize) -> Result<FilterKind, CliError> {
    kind.validate(window)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(kind)
}

/// The noisy baseline appears in sweep output under this filter name.
pub const NOISY_ROW: &str = "noisy";
pub const SWEEP_HEADER: [&str; 6] = ["K", "density", "filter", "mae", "psnr", "ncd"];

fn sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let reference = match &args.input {
        Some(path) => read_image(path)?,
        None => {
            if args.size == 0 {
                return Err(CliError::Usage("--size must be positive".into()));
            }
            synthetic_scene(args.size, args.size)
        }
    };
    let mut kinds = Vec::new();
    for &k in &args.k {
        for name in &args.filters {
            kinds.push((k, validated(filter_kind(name, args.p, k)?, args.window)?));
        }
    }
    let specs = args
        .density
        .iter()
        .map(|&d| noise_spec(&args.noise, d, args.per_channel, args.seed))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(dir) = &args.images {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }

    let mut csv = csv::WriterBuilder::new().from_writer(out);
    csv.write_record(SWEEP_HEADER)?;
    let mut row = |k: f64, density: f64, name: &str, r: &QualityReport| {
        csv.write_record([
            k.to_string(),
            density.to_string(),
            name.to_string(),
            r.mae.to_string(),
            r.psnr.to_string(),
            r.ncd.to_string(),
        ])
    };
    for spec in &specs {
        let noisy = add_impulse(&reference, spec);
        let density = spec.density();
        if let Some(dir) = &args.images {
            write_image(&noisy, &dir.join(format!("noisy_d{density}.ppm")))?;
        }
        let baseline = evaluate(&reference, &noisy)?;
        for &k in &args.k {
            row(k, density, NOISY_ROW, &baseline)?;
            for &(_, kind) in kinds.iter().filter(|(kk, _)| *kk == k) {
                let filtered = filter_image(&noisy, kind, args.window)?;
                if let Some(dir) = &args.images {
                    write_image(&filtered, &dir.join(format!("{kind}_K{k}_d{density}.ppm")))?;
                }
                row(k, density, kind.name(), &evaluate(&reference, &filtered)?)?;
            }
        }
    }
    csv.flush().map_err(|e| CliError::Csv(e.into()))?;
    Ok(())
}

/// Executes one parsed command, writing reports to `out`.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let stdout_err = |e| CliError::io(Path::new("<stdout>"), e);
    match cli.command {
        Command::Noise {
            noise,
            input,
            output,
        } => {
            let spec = noise_spec(&noise.kind, noise.density, noise.per_channel, noise.seed)?;
            let image = read_image(&input)?;
            write_image(&add_impulse(&image, &spec), &output)
        }
        Command::Filter {
            filter,
            kind,
            input,
            output,
        } => {
            let kind = validated(filter_kind(&kind, filter.p, filter.k)?, filter.window)?;
            let image = read_image(&input)?;
            write_image(&filter_image(&image, kind, filter.window)?, &output)
        }
        Command::Eval { reference, test } => {
            let report = evaluate(&read_image(&reference)?, &read_image(&test)?)?;
            writeln!(out, "{}\n{}", QualityReport::CSV_HEADER, report.csv_row()).map_err(stdout_err)
        }
        Command::Sweep(args) => match &args.output {
            Some(path) => {
                let mut buf = Vec::new();
                sweep(&args, &mut buf)?;
                std::fs::write(path, buf).map_err(|e| CliError::io(path, e))
            }
            None => sweep(&args, out),
        },
        Command::Axioms {
            seed,
            samples,
            sequential,
        } => {
            if samples == 0 {
                return Err(CliError::Usage("--samples must be positive".into()));
            }
            let execution = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let entries = run_standard_suite(seed, samples, execution)?;
            out.write_all(render_suite(&entries).as_bytes())
                .map_err(stdout_err)?;
            let failed = entries
                .iter()
                .flat_map(|e| &e.reports)
                .filter(|r| !r.passed())
                .count();
            if failed > 0 {
                Err(CliError::AxiomViolation(failed))
            } else {
                Ok(())
            }
        }
        Command::Synth {
            width,
            height,
            output,
        } => {
            if width == 0 || height == 0 {
                return Err(CliError::Usage("dimensions must be positive".into()));
            }
            write_image(&synthetic_scene(width, height), &output)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    match execute(cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fvmlf: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 1);
        assert_eq!(CliError::Format("x".into()).exit_code(), 2);
        assert_eq!(
            CliError::Core(fvmlf_core::Error::NcdUndefined).exit_code(),
            2
        );
        assert_eq!(
            CliError::io(Path::new("a"), std::io::ErrorKind::NotFound.into()).exit_code(),
            2
        );
        assert_eq!(CliError::AxiomViolation(2).exit_code(), 3);
    }

    #[test]
    fn format_errors_name_the_file() {
        let e = CliError::Format("bad".into()).in_file(Path::new("x.ppm"));
        assert_eq!(e.to_string(), "x.ppm: bad");
    }
}
