use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cliquescope::commands::{self, OutputFormat, ProfileSource};
use cliquescope::learn::{default_grid, CvConfig, FeatureKind};
use cliquescope::temporal::{DEFAULT_STEPS, DEFAULT_TRAJECTORY_KMAX};
use cliquescope::{Error, Result, DEFAULT_KMAX};

#[derive(Parser)]
#[command(
    name = "cliquescope",
    version,
    about = "Exact clique analytics for graphs"
)]
struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true, env = "CLIQUESCOPE_THREADS")]
    threads: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact k-clique counts of an edge list.
    Count {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: usize,
        #[arg(long)]
        per_node: bool,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Clique-profile feature rows for an edge list or a dataset.
    Profile {
        /// Edge-list file (omit when using --dataset).
        input: Option<PathBuf>,
        #[command(flatten)]
        dataset: DatasetArgs,
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Append the global clustering coefficient.
        #[arg(long)]
        extended: bool,
    },
    /// k-clustering coefficient trajectories of a temporal edge list.
    Hocc {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TRAJECTORY_KMAX)]
        kmax: usize,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
    },
    /// Repeated stratified cross-validation of a linear SVM.
    Classify {
        #[command(flatten)]
        dataset: DatasetArgs,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long)]
        extended: bool,
        /// Use a one-dimensional baseline feature (acc or cc) instead of a profile.
        #[arg(long)]
        baseline: Option<String>,
        /// Comma-separated C values.
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<f64>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        repeats: usize,
        #[arg(long, default_value_t = 10)]
        folds: usize,
        /// Also write the feature matrix as CSV.
        #[arg(long)]
        export_features: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DatasetArgs {
    /// Directory holding NAME_A.txt, NAME_graph_indicator.txt, NAME_graph_labels.txt.
    #[arg(long)]
    dataset: Option<PathBuf>,
    #[arg(long)]
    name: Option<String>,
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Output(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dataset_pair(args: &DatasetArgs) -> Result<(&Path, &str)> {
    match (&args.dataset, &args.name) {
        (Some(dir), Some(name)) => Ok((dir, name)),
        _ => Err(Error::Argument(
            "--dataset and --name must be given together".into(),
        )),
    }
}

fn run(cli: Cli) -> Result<()> {
    let output = cli.output.as_deref();
    match cli.command {
        Command::Count {
            input,
            kmax,
            per_node,
            format,
        } => {
            let format: OutputFormat = format.parse()?;
            emit(output, &commands::count(&input, kmax, per_node, format)?)
        }
        Command::Profile {
            input,
            dataset,
            k,
            extended,
        } => {
            let source = match &input {
                Some(path) => ProfileSource::EdgeList(path),
                None => {
                    let (dir, name) = dataset_pair(&dataset)?;
                    ProfileSource::Dataset { dir, name }
                }
            };
            emit(output, &commands::profile(source, k, extended)?)
        }
        Command::Hocc { input, kmax, steps } => emit(output, &commands::hocc(&input, kmax, steps)?),
        Command::Classify {
            dataset,
            k,
            extended,
            baseline,
            grid,
            seed,
            repeats,
            folds,
            export_features,
        } => {
            let (dir, name) = dataset_pair(&dataset)?;
            let kind = match baseline.as_deref() {
                Some(b) => match b.parse()? {
                    kind @ (FeatureKind::AverageClustering | FeatureKind::GlobalClustering) => kind,
                    _ => return Err(Error::Argument(format!("unknown baseline {b:?}"))),
                },
                None if extended => FeatureKind::Extended(k),
                None => FeatureKind::Profile(k),
            };
            let cfg = CvConfig {
                grid: grid.unwrap_or_else(default_grid),
                repeats,
                n_folds: folds,
                seed,
                ..CvConfig::default()
            };
            let report = commands::classify(dir, name, kind, &cfg, export_features.as_deref())?;
            eprintln!(
                "{} {}: {} (C={})",
                report.dataset,
                report.feature_spec,
                report.summary(),
                report.chosen_c
            );
            emit(output, &commands::report_json(&report)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 3 })
        }
    }
}
