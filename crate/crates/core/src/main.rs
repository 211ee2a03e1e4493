use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use graph_metrics::commands::{
    describe_error, run_bench, run_metrics, run_oracle_command, BenchOptions, InputSource,
    LoadedGraph, MetricsOptions, Mode, Target,
};
use graph_metrics::oracle::DEFAULT_MATRIX_CAP;
use graph_metrics::report::{write_bench_csv, write_json_reports, RunReport};
use graph_metrics::{write_dimacs, Baseline, GraphSpec};

#[derive(Parser)]
#[command(
    name = "graph-metrics",
    version,
    about = "Exact radius, center and diameter of weighted graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Radius/center and diameter/peripheral pair with the pivot searches.
    Metrics {
        #[command(flatten)]
        input: InputArgs,
        /// p1: rows computed on demand; p2: distance matrix built first.
        #[arg(long, default_value = "p1")]
        mode: Mode,
        #[arg(long, default_value = "both")]
        target: Target,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Brute-force ground truth with every center and peripheral pair.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Time every algorithm and baseline over a suite of inputs.
    Bench {
        /// DIMACS files (repeatable).
        #[arg(long = "input")]
        inputs: Vec<PathBuf>,
        /// Generator specs (repeatable).
        #[arg(long = "gen")]
        gens: Vec<GraphSpec>,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        /// CSV output path; standard output when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value = "auto")]
        baseline: Baseline,
        #[arg(long, default_value_t = DEFAULT_MATRIX_CAP)]
        max_matrix_n: usize,
    },
    /// Write a generated graph in DIMACS format.
    Gen {
        /// Generator spec, `complete:<n>:seed=<s>` or `sparse:<n>:<m>:seed=<s>`,
        /// optionally followed by `:w=<lo>..<hi>` and `:int`.
        #[arg(long = "gen")]
        spec: GraphSpec,
        /// Output path; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// DIMACS `.gr` file.
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    input: Option<PathBuf>,
    /// Generator spec, e.g. `complete:1000:seed=1` or `sparse:100:150:seed=7`.
    #[arg(long)]
    gen: Option<GraphSpec>,
}

impl InputArgs {
    fn source(&self) -> InputSource {
        match (&self.input, &self.gen) {
            (Some(path), _) => InputSource::File(path.clone()),
            (None, Some(spec)) => InputSource::Generated(spec.clone()),
            (None, None) => unreachable!("clap enforces one input"),
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Write the reports as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// All-pairs baseline used to build matrices.
    #[arg(long, default_value = "auto")]
    baseline: Baseline,
    /// Refuse to build a distance matrix for more vertices than this.
    #[arg(long, default_value_t = DEFAULT_MATRIX_CAP)]
    max_matrix_n: usize,
}

fn emit(reports: &[RunReport], json: Option<&PathBuf>) -> anyhow::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for r in reports {
        writeln!(out, "{}", r.summary_line())?;
    }
    if let Some(path) = json {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_json_reports(reports, file)?;
    }
    Ok(())
}

fn load(input: &InputArgs) -> anyhow::Result<LoadedGraph> {
    let source = input.source();
    source
        .load()
        .map_err(|e| anyhow::anyhow!("{source}: {}", describe_error(None, &e)))
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Metrics {
            input,
            mode,
            target,
            common,
        } => {
            let loaded = load(&input)?;
            let opts = MetricsOptions {
                mode,
                target,
                baseline: common.baseline,
                max_matrix_n: common.max_matrix_n,
            };
            let reports = run_metrics(&loaded, &opts)
                .map_err(|e| anyhow::anyhow!(describe_error(Some(&loaded.graph), &e)))?;
            emit(&reports, common.json.as_ref())
        }
        Command::Oracle { input, common } => {
            let loaded = load(&input)?;
            let reports = run_oracle_command(&loaded, common.baseline, common.max_matrix_n)
                .map_err(|e| anyhow::anyhow!(describe_error(Some(&loaded.graph), &e)))?;
            emit(&reports, common.json.as_ref())
        }
        Command::Bench {
            inputs,
            gens,
            repeats,
            csv,
            baseline,
            max_matrix_n,
        } => {
            if repeats == 0 {
                bail!("--repeats must be at least 1");
            }
            let suite: Vec<InputSource> = inputs
                .into_iter()
                .map(InputSource::File)
                .chain(gens.into_iter().map(InputSource::Generated))
                .collect();
            if suite.is_empty() {
                bail!("bench needs at least one --input or --gen");
            }
            let opts = BenchOptions {
                repeats,
                baseline,
                max_matrix_n,
            };
            let rows = run_bench(&suite, &opts);
            match csv {
                Some(path) => {
                    let file = File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_bench_csv(&rows, file)?;
                    for row in &rows {
                        println!(
                            "{:<24} {:>4} value={} sssp={} time={}ms speedup={} {}",
                            row.name,
                            row.algo
                                .map(|a| a.to_string())
                                .unwrap_or_else(|| "-".into()),
                            fmt_opt(row.value),
                            fmt_opt(row.sssp_count),
                            fmt_opt(row.elapsed_ms),
                            fmt_opt(row.speedup_vs_baseline),
                            row.errors
                        );
                    }
                }
                None => write_bench_csv(&rows, io::stdout().lock())?,
            }
            Ok(())
        }
        Command::Gen { spec, output } => {
            let g = graph_metrics::generate(&spec)?;
            match output {
                Some(path) => {
                    let file = File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_dimacs(&g, file)?;
                }
                None => write_dimacs(&g, io::stdout().lock())?,
            }
            Ok(())
        }
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.4}")).unwrap_or_else(|| "-".into())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
