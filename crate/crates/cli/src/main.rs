use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sqfr_core::error::{EvenConnectionError, OrderError, RegularityError};
use sqfr_core::graph::parse_pairs;
use sqfr_core::order::find_admissible_order;
use sqfr_core::regularity::{DEFAULT_PRIME, DEFAULT_VERTEX_CAP};
use sqfr_core::report::{CheckId, SCHEMA_VERSION};
use sqfr_core::{
    colon_graph, parse_graph6_str, to_graph6, Checker, Graph, HomologyConfig, Matching, RegCache, Subject,
};

/// Exit statuses shared by every subcommand.
mod exit {
    pub const CHECK_FAILED: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const CAP: u8 = 4;
    pub const THEOREM_VIOLATION: u8 = 5;
}

#[derive(Parser)]
#[command(name = "sqfr", version, about = "Regularity of squarefree powers of edge ideals")]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, env = "SQFR_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u32,
    /// Largest number of active variables the homology engine accepts (at most 20).
    #[arg(long, global = true, env = "SQFR_CAP", default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,
    /// Worker threads; defaults to the available cores.
    #[arg(long, global = true, env = "SQFR_JOBS")]
    jobs: Option<usize>,
    /// Append-only regularity cache file.
    #[arg(long, global = true, env = "SQFR_CACHE")]
    cache: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, env = "SQFR_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long, env = "SQFR_G6")]
    g6: Option<String>,
    /// Graph as an edge list such as "0-1,1-2".
    #[arg(long, env = "SQFR_EDGES")]
    edges: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Regularity of one squarefree power.
    Reg {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, env = "SQFR_S")]
        s: usize,
        /// Include the full Betti table.
        #[arg(long, env = "SQFR_BETTI")]
        betti: bool,
    },
    /// Colon graph of a matching, with even-connection witnesses.
    ColonGraph {
        #[command(flatten)]
        graph: GraphInput,
        /// Matching edges such as "0-1,2-3".
        #[arg(long)]
        matching: String,
    },
    /// Run checks over a graph6 stream, one JSON report per line.
    Sweep {
        /// graph6 file, one record per line; stdin when absent or "-".
        input: Option<PathBuf>,
        /// Comma-separated check ids, or "all".
        #[arg(long, env = "SQFR_CHECKS", default_value = "all")]
        checks: String,
        /// Write reports here instead of stdout.
        #[arg(long, env = "SQFR_OUT")]
        out: Option<PathBuf>,
    },
    /// Search for an admissible ordering of the generators of one power.
    Order {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, env = "SQFR_S")]
        s: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Self { code, message: message.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn regularity_failure(e: RegularityError) -> Failure {
    let code = match e {
        RegularityError::CapExceeded { .. } => exit::CAP,
        _ => exit::INPUT,
    };
    Failure::new(code, e)
}

impl GraphInput {
    /// The graph and its graph6 id.
    fn load(&self) -> Result<(Graph, String), Failure> {
        match (&self.g6, &self.edges) {
            (Some(g6), _) => {
                let record = g6.trim();
                let g = parse_graph6_str(record).map_err(|e| Failure::new(exit::INPUT, e))?;
                Ok((g, record.to_string()))
            }
            (None, Some(edges)) => {
                let g = Graph::parse_edge_list(edges).map_err(|e| Failure::new(exit::INPUT, e))?;
                let id = to_graph6(&g);
                Ok((g, id))
            }
            (None, None) => Err(Failure::new(exit::INPUT, "a graph is required (--g6 or --edges)")),
        }
    }
}

impl ConfigArgs {
    fn homology(&self) -> Result<HomologyConfig, Failure> {
        HomologyConfig::new(self.prime, self.cap).map_err(|e| Failure::new(exit::INPUT, e))
    }

    fn checker(&self) -> Result<Checker, Failure> {
        let cache = match &self.cache {
            Some(path) => RegCache::with_file(path)
                .map_err(|e| Failure::new(exit::INPUT, format!("cache {}: {e}", path.display())))?,
            None => RegCache::in_memory(),
        };
        Ok(Checker::new(self.homology()?, self.seed, cache))
    }

    fn pool(&self) -> Result<rayon::ThreadPool, Failure> {
        if self.jobs == Some(0) {
            return Err(Failure::new(exit::INPUT, "--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.unwrap_or(0))
            .build()
            .map_err(|e| Failure::new(exit::INPUT, e))
    }
}

fn print(value: Value) {
    println!("{value}");
}

fn cmd_reg(config: &ConfigArgs, graph: &GraphInput, s: usize, betti: bool) -> Outcome {
    let (g, id) = graph.load()?;
    let checker = config.checker()?;
    let subject = Subject::new(&id, g);
    let nu = subject.matching_number;
    if s == 0 || s > nu {
        return Err(Failure::new(exit::PRECONDITION, format!("power {s} is outside 1..={nu}")));
    }
    let reg = checker.power_regularity(&subject, s).map_err(regularity_failure)?;
    let mut out = json!({
        "schema": SCHEMA_VERSION,
        "graph_id": id,
        "s": s,
        "regularity": reg,
        "match": nu,
        "ind_match": subject.induced_matching_number,
        // I^[s] is generated in degree 2s
        "linear": reg == 2 * s,
    });
    if betti {
        let table = checker.config().betti_table(subject.power(s)).map_err(regularity_failure)?;
        out["betti"] = json!(table);
    }
    print(out);
    Ok(0)
}

fn cmd_colon_graph(graph: &GraphInput, matching: &str) -> Outcome {
    let (g, id) = graph.load()?;
    let pairs = parse_pairs(matching).map_err(|e| Failure::new(exit::INPUT, e))?;
    let m = Matching::new(&g, &pairs).map_err(|e| Failure::new(exit::INPUT, e))?;
    let h = colon_graph(&g, &m).map_err(|e| match e {
        EvenConnectionError::PowerOutOfRange { .. } => Failure::new(exit::PRECONDITION, e),
        other => Failure::new(exit::INPUT, other),
    })?;
    print(json!({
        "schema": SCHEMA_VERSION,
        "graph_id": id,
        "s": m.len(),
        "matching": m,
        "colon_graph": h,
    }));
    Ok(0)
}

fn cmd_order(graph: &GraphInput, s: usize) -> Outcome {
    let (g, id) = graph.load()?;
    let cert = find_admissible_order(&g, s).map_err(|e| match e {
        OrderError::PowerOutOfRange { .. } => Failure::new(exit::PRECONDITION, e),
        OrderError::SearchExhausted { .. } => Failure::new(exit::THEOREM_VIOLATION, e),
        OrderError::Regularity(e) => regularity_failure(e),
        other => Failure::new(exit::INPUT, other),
    })?;
    print(json!({
        "schema": SCHEMA_VERSION,
        "graph_id": id,
        "s": s,
        "generators": cert.ordering.len(),
        "certificate": cert,
    }));
    Ok(0)
}

fn cmd_sweep(config: &ConfigArgs, input: Option<&PathBuf>, checks: &str, out: Option<&PathBuf>) -> Outcome {
    let checks = CheckId::parse_list(checks).map_err(|e| Failure::new(exit::INPUT, e))?;
    let checker = config.checker()?;
    let pool = config.pool()?;
    let reader: Box<dyn BufRead + Send> = match input.filter(|p| p.as_os_str() != "-") {
        Some(path) => Box::new(BufReader::new(
            File::open(path).map_err(|e| Failure::new(exit::INPUT, format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let writer: Box<dyn Write + Send> = match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| Failure::new(exit::INPUT, format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    let summary = pool
        .install(|| sqfr_core::run_sweep(reader, writer, &checks, &checker))
        .map_err(|e| Failure::new(exit::INPUT, e))?;
    Ok(if summary.all_clear() { 0 } else { exit::CHECK_FAILED })
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let _ = e.print();
        std::process::exit(if e.use_stderr() { exit::INPUT.into() } else { 0 })
    });
    let outcome = match &cli.command {
        Command::Reg { graph, s, betti } => cmd_reg(&cli.config, graph, *s, *betti),
        Command::ColonGraph { graph, matching } => cli.config.homology().and_then(|_| cmd_colon_graph(graph, matching)),
        Command::Sweep { input, checks, out } => cmd_sweep(&cli.config, input.as_ref(), checks, out.as_ref()),
        Command::Order { graph, s } => cli.config.homology().and_then(|_| cmd_order(graph, *s)),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("sqfr: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
