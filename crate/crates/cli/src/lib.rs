//! The `fpa` command line: corpus ingestion, counting and granularity
//! reports, sensitivity curves, method comparison, fixtures and seeded
//! corpus generation.

pub mod corpus_csv;
pub mod error;
pub mod fp_table;
pub mod generate;
pub mod report;

use std::fs::{self, File};
use std::io::BufReader;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fpa_core::fixtures::{FIXTURE_NAMES, TABLE11};
use fpa_core::ProjectCorpus;

pub use error::{CliError, Result};
use fp_table::MergedRow;
use generate::GeneratorConfig;
use report::{Comparison, CountTable, MethodSelection};

#[derive(Debug, Parser)]
#[command(name = "fpa", version, about = "Function point counting under FP4.1 and EFP4.1")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-project unadjusted function points and a summary row.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Granular and non-granular functions per project and kind.
    Granularity {
        /// Corpus CSV.
        #[arg(long)]
        input: PathBuf,
    },
    /// Sensitivity curves for DET increments 1..9.
    Sensitivity {
        /// Corpus CSV.
        #[arg(long)]
        input: PathBuf,
        /// RET/FTR increment applied alongside each DET increment.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u32).range(0..=1))]
        ret_ftr_inc: u32,
        /// Curve CSV destination; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Rater ANOVA, d_ab, K-S normality and one-sample t-test.
    Compare {
        #[command(flatten)]
        source: Source,
    },
    /// Seeded synthetic two-rater corpus.
    Generate {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        projects: u32,
        #[arg(long, default_value_t = 20)]
        min_functions: u32,
        #[arg(long, default_value_t = 60)]
        max_functions: u32,
        /// Percent of functions drawn from the granular region, 0..=100.
        #[arg(long, default_value_t = 50)]
        granular_target: u32,
        /// Corpus CSV destination; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print an embedded dataset.
    Fixture {
        /// Dataset name (`table11`).
        name: String,
    },
}

/// Either a per-rater corpus or a rater-merged count table.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Corpus CSV: project,rater,kind,ret_ftr,det,count.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Rater-merged CSV: project,fp41,efp41.
    #[arg(long)]
    pub fp_table: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Fp41,
    Efp41,
    Both,
}

impl From<MethodArg> for MethodSelection {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fp41 => MethodSelection::Fp41,
            MethodArg::Efp41 => MethodSelection::Efp41,
            MethodArg::Both => MethodSelection::Both,
        }
    }
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

pub fn load_corpus(path: &Path) -> Result<ProjectCorpus> {
    let name = display(path);
    let file = File::open(path).map_err(|e| CliError::io(&name, e))?;
    corpus_csv::read_corpus(BufReader::new(file), &name)
}

pub fn load_fp_table(path: &Path) -> Result<Vec<MergedRow>> {
    let name = display(path);
    let file = File::open(path).map_err(|e| CliError::io(&name, e))?;
    fp_table::read_fp_table(BufReader::new(file), &name)
}

pub fn table11() -> Vec<MergedRow> {
    TABLE11.iter().map(MergedRow::from).collect()
}

/// What a command produced: text for standard output, or a file written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Output {
    Stdout(String),
    Written(PathBuf),
}

fn emit(text: String, output: Option<PathBuf>) -> Result<Output> {
    match output {
        None => Ok(Output::Stdout(text)),
        Some(path) => {
            fs::write(&path, text).map_err(|e| CliError::io(&display(&path), e))?;
            Ok(Output::Written(path))
        }
    }
}

pub fn run(command: Command) -> Result<Output> {
    match command {
        Command::Count { source, method } => {
            let table = match (source.input, source.fp_table) {
                (Some(p), _) => CountTable::from_corpus(&load_corpus(&p)?, method.into())?,
                (None, Some(p)) => CountTable::from_merged(&load_fp_table(&p)?, method.into()),
                (None, None) => unreachable!("clap requires one source"),
            };
            Ok(Output::Stdout(table.render()?))
        }
        Command::Granularity { input } => {
            Ok(Output::Stdout(report::granularity_report(&load_corpus(&input)?)?))
        }
        Command::Sensitivity {
            input,
            ret_ftr_inc,
            output,
        } => emit(report::sensitivity_csv(&load_corpus(&input)?, ret_ftr_inc)?, output),
        Command::Compare { source } => {
            let cmp = match (source.input, source.fp_table) {
                (Some(p), _) => Comparison::from_corpus(&load_corpus(&p)?)?,
                (None, Some(p)) => Comparison::from_merged(&load_fp_table(&p)?)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            Ok(Output::Stdout(cmp.render()))
        }
        Command::Generate {
            seed,
            projects,
            min_functions,
            max_functions,
            granular_target,
            output,
        } => {
            let config = GeneratorConfig {
                seed,
                projects,
                min_functions,
                max_functions,
                granular_target,
            };
            let corpus = generate::generate(&config)?;
            emit(corpus_csv::corpus_to_string(&corpus), output)
        }
        Command::Fixture { name } => match name.as_str() {
            "table11" => Ok(Output::Stdout(report::fixture_csv(&table11()))),
            other => Err(CliError::Usage(format!(
                "unknown fixture `{other}`; available: {}",
                FIXTURE_NAMES.join(", ")
            ))),
        },
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// text for standard output, or the message and exit code on failure;
/// help and version requests come back as `Ok`.
pub fn run_args<I, T>(args: I) -> std::result::Result<String, (String, i32)>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return if code == 0 {
                Ok(e.to_string())
            } else {
                Err((e.to_string(), code))
            };
        }
    };
    match run(cli.command) {
        Ok(Output::Stdout(text)) => Ok(text),
        Ok(Output::Written(_)) => Ok(String::new()),
        Err(e) => Err((format!("error: {e}\n"), e.exit_code())),
    }
}
