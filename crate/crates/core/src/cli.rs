//! The `skewsep` command line.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage error, 3 cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{self, CatalogOptions, ReportDocument};
use crate::config::JobConfig;
use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "skewsep", version, about = "Separability of skew polynomial quotients over finite rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the ring, automorphism and derivation axioms.
    Validate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide invariance, separability and Hirata separability of the
    /// configured polynomials.
    Check {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify every invariant monic polynomial of one degree.
    Catalog {
        #[arg(long)]
        config: PathBuf,
        /// Overrides `degree` in the config.
        #[arg(long)]
        degree: Option<usize>,
        /// Largest number of candidate polynomials to enumerate.
        #[arg(long)]
        max_enum: Option<u128>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Reuse catalogs stored under this directory, keyed by content hash.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-verify a stored document and render it.
    Report {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add a metadata block with wall-clock timings.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Json(_) | Error::Config(_) | Error::Io(_) => EXIT_USAGE,
        Error::EnumerationCap { .. } | Error::DegreeCap { .. } => EXIT_CAP,
        _ => EXIT_VALIDATION,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render(doc: &ReportDocument, output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), Error> {
    let mut doc = doc.clone();
    if !output.timings {
        doc.metadata = None;
    }
    let text = match output.format {
        Format::Json => catalog::to_json(&doc)?,
        Format::Csv => catalog::to_csv(&doc)?,
    };
    emit(&text, &output.out, stdout)
}

fn load_context(
    config: &JobConfig,
    stderr: &mut dyn Write,
) -> Result<Option<std::sync::Arc<crate::skew::SkewRing>>, Error> {
    let resolved = config.resolve()?;
    let summary = resolved.validate();
    if !summary.passed {
        writeln!(stderr, "validation failed: {}", serde_json::to_string(&summary)?)?;
        return Ok(None);
    }
    Ok(Some(resolved.into_context()?))
}

fn execute(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Error> {
    match cmd {
        Command::Validate { config, out } => {
            let config = JobConfig::load(&config)?;
            let summary = config.resolve()?.validate();
            let mut text = serde_json::to_string_pretty(&summary)?;
            text.push('\n');
            emit(&text, &out, stdout)?;
            Ok(if summary.passed { EXIT_OK } else { EXIT_VALIDATION })
        }
        Command::Check { config, output } => {
            let config = JobConfig::load(&config)?;
            let Some(ctx) = load_context(&config, stderr)? else { return Ok(EXIT_VALIDATION) };
            if config.polynomials.is_empty() {
                return Err(Error::Config("check needs at least one entry in \"polynomials\"".into()));
            }
            let polys = config
                .polynomials
                .iter()
                .map(|p| p.build(&ctx, config.max_degree()))
                .collect::<Result<Vec<_>, _>>()?;
            let start = std::time::Instant::now();
            let mut doc = catalog::check(&ctx, &polys)?;
            doc.metadata = Some(catalog::Metadata {
                elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
                jobs: 1,
                cached: false,
            });
            render(&doc, &output, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Catalog { config, degree, max_enum, jobs, cache_dir, output } => {
            let config = JobConfig::load(&config)?;
            let Some(ctx) = load_context(&config, stderr)? else { return Ok(EXIT_VALIDATION) };
            let degree = degree
                .or(config.degree)
                .ok_or_else(|| Error::Config("catalog needs a degree".into()))?;
            if degree == 0 || degree > config.max_degree() {
                return Err(Error::DegreeCap { degree, cap: config.max_degree() });
            }
            let opts = CatalogOptions {
                degree,
                max_enum: max_enum.unwrap_or(config.max_enum()),
                jobs: jobs.max(1),
                cache_dir,
            };
            let doc = catalog::catalog(&ctx, &opts)?;
            render(&doc, &output, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Report { input, output } => {
            let doc = catalog::load(&input)?;
            let problems = catalog::verify_document(&doc)?;
            if !problems.is_empty() {
                writeln!(stderr, "{}", serde_json::to_string_pretty(&problems)?)?;
                return Ok(EXIT_VALIDATION);
            }
            render(&doc, &output, stdout)?;
            Ok(EXIT_OK)
        }
    }
}
