use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use merrifield::cli::{cmd_delta, cmd_sigma, emit_report, load_graph, CliError, Exit};
use merrifield::enumeration::FamilyKind;
use merrifield::format::parse_vertex_list;
use merrifield::verify::{hunt, run_identities, verify_sweep, Config, OutputFormat, PairMode};
use merrifield::PathBudget;

#[derive(Parser)]
#[command(
    name = "msverify",
    version,
    about = "Independent-set counts and Δ sign checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the independent sets of a graph.
    Sigma {
        /// graph6 string, file path (graph6 or edge list), or - for stdin
        graph: String,
        /// Cross-check against the naive enumeration (n <= 30).
        #[arg(long)]
        oracle: bool,
    },
    /// Evaluate Δ(G, A, B) and compare its sign with the path parity.
    Delta {
        graph: String,
        /// Comma-separated vertices, e.g. 0,2 (- for the empty set)
        a: String,
        b: String,
        #[arg(long, default_value_t = PathBudget::default().max_paths)]
        path_budget: u64,
    },
    /// Sweep a graph family and check the sign law.
    Verify(SweepArgs),
    /// Search for vertex pairs whose Δ sign contradicts distance parity.
    Hunt(SweepArgs),
    /// Run the identity suites.
    Identities(SweepArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Largest vertex count.
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// vertices or sets (hunt defaults to vertices, the others to sets)
    #[arg(long)]
    pairs: Option<PairMode>,
    /// all, connected, bipartite, nonbipartite, connected-nonbipartite (exhaustive);
    /// trees, cycles, paths, unicyclic, bipartite-unicyclic, gnp, random-bipartite (sampled)
    #[arg(long, default_value = "all")]
    family: FamilyKind,
    /// Edge probability for the random families.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Paths enumerated before a parity classification gives up.
    #[arg(long, default_value_t = PathBudget::default().max_paths)]
    path_budget: u64,
    /// Samples per vertex count for the sampled families.
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// json (line-delimited records) or tsv (summary)
    #[arg(long, default_value = "json")]
    format: OutputFormat,
    /// Report file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SweepArgs {
    fn config(self, default_pairs: PairMode) -> Config {
        Config {
            max_n: self.n,
            pairs: self.pairs.unwrap_or(default_pairs),
            family: self.family,
            p: self.p,
            seed: self.seed,
            workers: self.workers,
            path_budget: PathBudget::new(self.path_budget),
            count: self.count,
            format: self.format,
            out: self.out,
        }
    }
}

fn run(command: Command) -> Result<Exit, CliError> {
    let started = Instant::now();
    let exit = match command {
        Command::Sigma { graph, oracle } => {
            let g = load_graph(&graph)?;
            println!("{}", cmd_sigma(&g, oracle)?);
            Exit::Pass
        }
        Command::Delta {
            graph,
            a,
            b,
            path_budget,
        } => {
            let g = load_graph(&graph)?;
            let a = parse_vertex_list(&a)?;
            let b = parse_vertex_list(&b)?;
            let outcome = cmd_delta(&g, a, b, PathBudget::new(path_budget))?;
            println!("{outcome}");
            outcome.exit()
        }
        Command::Verify(args) => {
            let config = args.config(PairMode::Sets);
            emit_report(&verify_sweep(&config)?, &config)?
        }
        Command::Hunt(args) => {
            let config = args.config(PairMode::Vertices);
            emit_report(&hunt(&config)?, &config)?
        }
        Command::Identities(args) => {
            let config = args.config(PairMode::Sets);
            emit_report(&run_identities(&config)?, &config)?
        }
    };
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    Ok(exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Exit::Usage.code() as u8
            } else {
                0
            });
        }
    };
    match run(cli.command) {
        Ok(exit) => ExitCode::from(exit.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit().code() as u8)
        }
    }
}
