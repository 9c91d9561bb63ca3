//! `mkcover` command-line driver.
//!
//! Exit codes: 0 success, 1 bad input or usage, 2 a mathematical invariant
//! failed (bound exceeded, fast and brute covers disagree, ...).

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mkcover::connectivity::FlowScratch;
use mkcover::constructible::{check_order, embed_weights, extend_maximal, is_k_minimal, ConstructionOrder};
use mkcover::cover::{edge_bound, mk_brute, mk_fast, BruteOptions, CoverReport, DEFAULT_WORK_LIMIT};
use mkcover::generators::{fixture_c4, gen_random_complete, gen_tight, Seed};
use mkcover::mst::mst;
use mkcover::suite::{run_suite, SuiteConfig};
use mkcover::{Error, WeightMode, WeightedGraph};

#[derive(Parser, Debug)]
#[command(name = "mkcover", version, about = "Robust MST covers and k-constructible graphs")]
struct Cli {
    /// Accept repeated weights, breaking ties by (weight, u, v).
    #[arg(long, global = true)]
    permissive: bool,

    /// Write results here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum spanning tree edge list.
    Mst { file: Option<PathBuf> },
    /// Compute M_k and compare it with the edge bound.
    ComputeMk {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
        work_limit: u128,
        file: Option<PathBuf>,
    },
    /// Check that an order file is a k-construction order.
    CheckOrder {
        /// Overrides the k in the order file header.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
        order_file: Option<PathBuf>,
    },
    /// Extend a construction order until no anti-edge fits.
    ExtendMaximal {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
        order_file: Option<PathBuf>,
    },
    /// Complete graph whose M_k contains every edge of a construction order.
    EmbedWeights {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
        order_file: Option<PathBuf>,
    },
    /// Decide whether a graph is edge-minimal k-connected.
    CheckKminimal {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        file: Option<PathBuf>,
    },
    /// Local vertex connectivity between two vertices.
    Connectivity {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
        file: Option<PathBuf>,
    },
    /// Instance generators.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Batch-check the theory on seeded instances.
    VerifySuite(SuiteArgs),
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Weights attaining |M_k| = nk - k(k+1)/2.
    Tight {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Weights are a seeded permutation of 1..n(n-1)/2.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// K4 with the 4-cycle weighted 1..4 and diagonals 5, 6.
    C4,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Vertex counts, e.g. 4,5,6,7,8 or 200.
    #[arg(long, value_delimiter = ',', default_values_t = vec![4usize, 5, 6, 7, 8])]
    ns: Vec<usize>,
    /// Values of k; every 1..n when omitted.
    #[arg(long = "k", value_delimiter = ',')]
    ks: Option<Vec<usize>>,
    /// Number of seeds per vertex count.
    #[arg(long, default_value_t = 40)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed_base: u64,
    /// Brute-force legs run only up to this many vertices.
    #[arg(long, default_value_t = 8)]
    brute_max_n: usize,
    #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
    work_limit: u128,
    #[arg(long, default_value_t = 50)]
    embed_orders: usize,
    /// Skip the tight-family cases.
    #[arg(long)]
    no_tight: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Fast,
    Brute,
    Both,
}

enum Failure {
    Domain(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_invariant_violation() {
            Failure::Invariant(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| Failure::Domain(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_graph(path: &Option<PathBuf>, mode: WeightMode) -> Result<WeightedGraph, Failure> {
    Ok(WeightedGraph::parse(&read_input(path)?, mode)?)
}

fn read_order(path: &Option<PathBuf>, k: Option<u32>) -> Result<ConstructionOrder, Failure> {
    let order = ConstructionOrder::parse(&read_input(path)?)?;
    match k {
        Some(k) => Ok(order.with_k(k as usize)?),
        None => Ok(order),
    }
}

fn report_lines(report: &CoverReport, method: &str) -> String {
    eprintln!(
        "# n={} gv_bound={} elapsed_ms={:.3}",
        report.n,
        report.gv_bound,
        report.elapsed.as_secs_f64() * 1e3
    );
    format!("{}{}\n", report.cover.to_text(), report.summary_with_method(method))
}

fn compute_mk(g: &WeightedGraph, k: usize, method: MethodArg, work_limit: u128) -> Outcome {
    let opts = BruteOptions {
        work_limit,
        parallel: true,
    };
    match method {
        MethodArg::Fast => Ok(report_lines(&mk_fast(g, k)?, "fast")),
        MethodArg::Brute => Ok(report_lines(&mk_brute(g, k, &opts)?, "brute")),
        MethodArg::Both => {
            let fast = mk_fast(g, k)?;
            let brute = mk_brute(g, k, &opts)?;
            if fast.cover != brute.cover {
                return Err(Failure::Invariant(format!(
                    "fast and brute covers differ: fast has {} edges, brute has {}",
                    fast.cover_size(),
                    brute.cover_size()
                )));
            }
            Ok(report_lines(&fast, "both"))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let mode = if cli.permissive {
        WeightMode::Permissive
    } else {
        WeightMode::Strict
    };
    match cli.command {
        Command::Mst { file } => {
            let g = read_graph(&file, mode)?;
            Ok(mst(&g)?.to_text())
        }
        Command::ComputeMk {
            k,
            method,
            work_limit,
            file,
        } => {
            let g = read_graph(&file, mode)?;
            compute_mk(&g, k as usize, method, work_limit)
        }
        Command::CheckOrder { k, order_file } => {
            let order = read_order(&order_file, k)?;
            let verdict = check_order(&order);
            match verdict.first_violation {
                Some(v) => Err(Failure::Domain(format!(
                    "valid=no k={} index={} edge={} connectivity={}",
                    order.k(),
                    v.index,
                    v.edge,
                    v.connectivity
                ))),
                None => {
                    let (n, k, m) = (order.host_n(), order.k(), order.sequence().len());
                    if n > k && m > edge_bound(n, k) {
                        return Err(Failure::Invariant(format!(
                            "{k}-constructible graph on {n} vertices has {m} edges, above bound {}",
                            edge_bound(n, k)
                        )));
                    }
                    Ok(format!("valid=yes k={k} n={n} edges={m}\n"))
                }
            }
        }
        Command::ExtendMaximal { k, order_file } => {
            let order = read_order(&order_file, k)?;
            let (_, extended) = extend_maximal(&order)?;
            Ok(extended.serialize())
        }
        Command::EmbedWeights { k, order_file } => {
            let order = read_order(&order_file, k)?;
            Ok(embed_weights(&order)?.serialize())
        }
        Command::CheckKminimal { k, file } => {
            let g = read_graph(&file, WeightMode::Permissive)?.topology();
            let k = k as usize;
            if !is_k_minimal(&g, k) {
                return Err(Failure::Domain(format!("kminimal=no k={k}")));
            }
            let m = g.edge_count();
            if m > edge_bound(g.n(), k) {
                return Err(Failure::Invariant(format!(
                    "{k}-minimal graph on {} vertices has {m} edges, above bound {}",
                    g.n(),
                    edge_bound(g.n(), k)
                )));
            }
            Ok(format!("kminimal=yes k={k} n={} edges={m}\n", g.n()))
        }
        Command::Connectivity { s, t, cap, file } => {
            let g = read_graph(&file, WeightMode::Permissive)?.topology();
            let mut flow = FlowScratch::new();
            let cap = cap.map_or(usize::MAX, |c| c as usize);
            let value = flow.local_connectivity(&g, s, t, cap)?;
            let mut out = format!("s={s} t={t} connectivity={value}");
            if !g.has_edge(s, t) && cap == usize::MAX {
                let cert = flow.min_separator(&g, s, t)?;
                let sep: Vec<String> = cert.separator.iter().map(|x| x.to_string()).collect();
                out.push_str(&format!(" separator={}", sep.join(",")));
            }
            out.push('\n');
            Ok(out)
        }
        Command::Gen(cmd) => {
            let g = match cmd {
                GenCommand::Tight { n, k, seed } => gen_tight(n, k, Seed(seed))?,
                GenCommand::Random { n, seed } => gen_random_complete(n, Seed(seed))?,
                GenCommand::C4 => fixture_c4(),
            };
            Ok(g.serialize())
        }
        Command::VerifySuite(args) => {
            let mut cfg = SuiteConfig {
                ns: args.ns,
                ks: args.ks,
                seeds: (args.seed_base..args.seed_base + args.seeds).collect(),
                brute_max_n: args.brute_max_n,
                work_limit: args.work_limit,
                embed_orders: args.embed_orders,
                ..SuiteConfig::default()
            };
            if args.no_tight {
                cfg.tight_cases.clear();
            }
            let report = run_suite(&cfg);
            if report.is_success() {
                Ok(report.to_string())
            } else {
                Err(Failure::Invariant(report.to_string()))
            }
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> io::Result<()> {
    match output {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let output = cli.output.clone();
    match run(cli) {
        Ok(text) => match emit(&text, &output) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("INVARIANT VIOLATION: {msg}");
            ExitCode::from(2)
        }
    }
}
