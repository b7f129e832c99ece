//! Command-line interface: survey tables, ad-hoc β computation, plot-series
//! emission, appendix calculators, and record export.
//!
//! Exit status: 0 when every computation succeeds and all comparisons agree,
//! 1 when a comparison disagrees, 2 on input errors.

use clap::{Parser, Subcommand, ValueEnum};
use macroscope::dataset::{self, ExperimentRecord, RecordKind};
use macroscope::report::{
    self,
    compute::{AppendixCalc, ComputeKind},
    plot::SeriesKind,
    OutputFormat,
};
use macroscope::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "macroscope",
    version,
    about = "Macroscopicity (β) calculator for quantum-superposition experiments",
    long_about = "Computes the macroscopicity β — observed coherence time over the time a \
                  classical probe would need to repeatably distinguish the superposed paths — \
                  for matter-wave, Ramsey, and trapped-particle experiments."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Relative tolerance when comparing computed and published values.
    #[arg(long, global = true, default_value_t = 0.10, value_name = "REL")]
    tolerance: f64,

    /// Record file to use instead of the built-in survey.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// Which survey table to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Matter-wave interference experiments.
    #[value(name = "1")]
    One,
    /// Ramsey interferometry experiments.
    #[value(name = "2")]
    Two,
    /// Both tables.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the survey tables, comparing computed against published β.
    Tables {
        #[arg(value_enum, default_value = "both")]
        which: Which,
    },
    /// Compute β (and τ, T where defined) for ad-hoc parameters.
    ///
    /// Parameters are key=value pairs with units attached, e.g.
    /// `compute mw lambda=50pm theta=0.58urad d=0.062um`.
    Compute {
        #[arg(value_enum)]
        kind: ComputeKind,
        #[arg(value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
    /// Emit the (x, y, label) data series behind the survey figures.
    PlotData {
        #[arg(value_enum)]
        series: SeriesKind,
    },
    /// Probe-photon window and hydrogenic-scattering calculators.
    Appendix {
        #[arg(value_enum)]
        calc: AppendixCalc,
        #[arg(value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
    /// Print the selected records in the record file format.
    ExportBuiltin {
        #[arg(value_enum, default_value = "both")]
        which: Which,
    },
}

fn matches_which(record: &ExperimentRecord, which: Which) -> bool {
    match which {
        Which::One => matches!(record.kind, RecordKind::MatterWave(_)),
        Which::Two => matches!(record.kind, RecordKind::Ramsey(_)),
        Which::Both => true,
    }
}

/// Loads the working record set: the `--input` file when given, otherwise the
/// built-in survey, restricted to the requested table.
fn load_records(input: &Option<PathBuf>, which: Which) -> Result<Vec<ExperimentRecord>, Error> {
    let records = match input {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|error| Error::Parse {
                line: 0,
                message: format!("cannot read {}: {error}", path.display()),
            })?;
            dataset::parse_records(&text)?
        }
        None => dataset::builtin_all(),
    };
    Ok(records
        .into_iter()
        .filter(|record| matches_which(record, which))
        .collect())
}

struct RunOutcome {
    output: String,
    all_agree: bool,
}

fn run(cli: &Cli) -> Result<RunOutcome, Error> {
    if !cli.tolerance.is_finite() || cli.tolerance < 0.0 {
        return Err(Error::NegativeError(cli.tolerance));
    }
    match &cli.command {
        Command::Tables { which } => {
            let records = load_records(&cli.input, *which)?;
            if records.is_empty() {
                return Err(Error::EmptyDataset);
            }
            let (results, summary) = dataset::evaluate_all(&records, cli.tolerance);
            Ok(RunOutcome {
                output: report::tables::render(&results, summary, cli.tolerance, cli.format),
                all_agree: summary.all_agree(),
            })
        }
        Command::Compute { kind, params } => Ok(RunOutcome {
            output: report::compute::run_compute(*kind, params, cli.tolerance, cli.format)?,
            all_agree: true,
        }),
        Command::PlotData { series } => {
            let records = load_records(&cli.input, Which::Both)?;
            let series = report::plot::build_series(*series, &records)?;
            Ok(RunOutcome {
                output: report::plot::render(&series, cli.format),
                all_agree: true,
            })
        }
        Command::Appendix { calc, params } => Ok(RunOutcome {
            output: report::compute::run_appendix(*calc, params, cli.format)?,
            all_agree: true,
        }),
        Command::ExportBuiltin { which } => {
            let records = load_records(&cli.input, *which)?;
            if records.is_empty() {
                return Err(Error::EmptyDataset);
            }
            Ok(RunOutcome {
                output: dataset::serialize_records(&records),
                all_agree: true,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if outcome.all_agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}
