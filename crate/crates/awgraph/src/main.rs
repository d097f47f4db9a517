use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use awgraph::ap::enumerate_k_aps;
use awgraph::error::Error;
use awgraph::formulas::{bound_report, BoundContext, PrimeCache};
use awgraph::generators::{generate, FamilySpec};
use awgraph::graph::{distance_matrix, Graph};
use awgraph::scan::{run_scan, ScanOptions};
use awgraph::solver::{aw, SearchConfig};
use awgraph::verify::{run_all, run_suite, SuiteReport, VerifyOptions};

/// Exact anti-van der Waerden numbers of graphs.
#[derive(Parser)]
#[command(name = "awgraph", version, about)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Node budget for the exact search.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget: u64,
    /// Worker threads for corpus sweeps (0 keeps the library default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Seed for the randomized portions of scans.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include timing and prune counters in the output. Timings vary run to
    /// run, so reproducible pipelines should leave this off.
    #[arg(long, global = true)]
    stats: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute aw(G,k) exactly, with an extremal witness coloring.
    Aw(GraphArgs),
    /// List the k-term progressions of a graph.
    Aps(GraphArgs),
    /// Report every bound rule that applies to a graph.
    Bounds(GraphArgs),
    /// Replay a verification suite (or "all").
    Verify {
        /// Suite name: paths, cycles, hypercube, binary-trees, stars,
        /// bipartite, diameter-two, bounds, products, dominating,
        /// properties, or all.
        suite: String,
        /// Largest vertex count for the labeled graph sweeps.
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Largest vertex count for the tree sweeps.
        #[arg(long, default_value_t = 9)]
        tree_nmax: usize,
        /// Largest vertex count for the solver-versus-brute-force sweep.
        #[arg(long, default_value_t = 5)]
        brute_nmax: usize,
        /// Largest vertex count for the progression-enumerator cross-check.
        #[arg(long, default_value_t = 7)]
        oracle_nmax: usize,
    },
    /// Run a budgeted conjecture scan: tree_log3 or dominating.
    Scan {
        /// Scan name: tree_log3 or dominating.
        which: String,
        /// Number of seeded random cases on top of the exhaustive corpus.
        #[arg(long, default_value_t = 120)]
        instances: u64,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Family spec such as path:9, cycle:17, star:5, kbipartite:4,4,
    /// hypercube:3, btree:2, comb:4, or product:(path:3)x(path:3).
    #[arg(long, conflicts_with = "file")]
    family: Option<String>,
    /// Graph file: optional "# name: ..." comment, a "n m" header line,
    /// then one "u v" edge per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Progression length.
    #[arg(short, default_value_t = 3)]
    k: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded(_) | Error::EnumerationTooLarge(_) | Error::PrimeBudget(_) => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let cfg = SearchConfig::with_budget(cli.budget);
    match &cli.cmd {
        Cmd::Aw(args) => cmd_aw(cli, args, &cfg),
        Cmd::Aps(args) => cmd_aps(cli, args),
        Cmd::Bounds(args) => cmd_bounds(cli, args, &cfg),
        Cmd::Verify {
            suite,
            nmax,
            tree_nmax,
            brute_nmax,
            oracle_nmax,
        } => {
            let opts = VerifyOptions {
                nmax: *nmax,
                tree_nmax: *tree_nmax,
                brute_nmax: *brute_nmax,
                oracle_nmax: *oracle_nmax,
                config: cfg,
            };
            cmd_verify(cli, suite, &opts)
        }
        Cmd::Scan { which, instances } => cmd_scan(cli, which, *instances, &cfg),
    }
}

fn load_graph(args: &GraphArgs) -> Result<(Graph, Option<FamilySpec>), Error> {
    match (&args.family, &args.file) {
        (Some(family), None) => {
            let spec = FamilySpec::parse(family)?;
            let g = generate(&spec)?;
            Ok((g, Some(spec)))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            Ok((Graph::parse_text(&text)?, None))
        }
        _ => Err(Error::Parse(
            "exactly one of --family or --file is required".into(),
        )),
    }
}

#[derive(Serialize)]
struct AwOut<'a> {
    aw: u32,
    witness: Option<&'a [u32]>,
    nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    ms: Option<u64>,
}

fn cmd_aw(cli: &Cli, args: &GraphArgs, cfg: &SearchConfig) -> Result<ExitCode, Error> {
    let (g, _) = load_graph(args)?;
    let res = aw(&g, args.k, cfg)?;
    if cli.json {
        let out = AwOut {
            aw: res.aw,
            witness: res.extremal.as_ref().map(|c| c.colors()),
            nodes: res.stats.nodes,
            ms: cli.stats.then_some(res.stats.elapsed_ms),
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("aw = {}", res.aw);
        match &res.extremal {
            Some(c) => println!("witness: {}", c.to_line()),
            None => println!("witness: none (every exact coloring below aw is degenerate)"),
        }
        println!("nodes: {}", res.stats.nodes);
        if cli.stats {
            println!("prunes: {}", res.stats.prunes);
            println!("ms: {}", res.stats.elapsed_ms);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ApOut<'a> {
    diff: u32,
    vertices: &'a [usize],
}

#[derive(Serialize)]
struct ApsOut<'a> {
    k: usize,
    count: usize,
    aps: Vec<ApOut<'a>>,
}

fn cmd_aps(cli: &Cli, args: &GraphArgs) -> Result<ExitCode, Error> {
    let (g, _) = load_graph(args)?;
    let dm = distance_matrix(&g);
    let idx = enumerate_k_aps(&g, &dm, args.k)?;
    if cli.json {
        let out = ApsOut {
            k: args.k,
            count: idx.len(),
            aps: idx
                .aps()
                .iter()
                .map(|ap| ApOut {
                    diff: ap.diff(),
                    vertices: ap.vertices(),
                })
                .collect(),
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("k = {}, {} progression(s)", args.k, idx.len());
        print!("{}", idx.dump());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(cli: &Cli, args: &GraphArgs, cfg: &SearchConfig) -> Result<ExitCode, Error> {
    let (g, spec) = load_graph(args)?;
    let primes = PrimeCache::bundled();
    let mut ctx = BoundContext::default().with_primes(&primes);
    if let Some(spec) = &spec {
        ctx = ctx.with_family(spec);
    }
    let report = bound_report(&g, args.k, &ctx, cfg)?;
    if cli.json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        for e in &report.lower {
            println!("lower: {} = {}", e.rule, e.value);
        }
        for e in &report.upper {
            println!("upper: {} = {}", e.rule, e.value);
        }
        match &report.exact {
            Some(e) => println!("exact: {} = {}", e.rule, e.value),
            None => println!("exact: none"),
        }
        let hi = report
            .best_upper()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "?".into());
        println!("best: {} <= aw <= {}", report.best_lower(), hi);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_suite_text(report: &SuiteReport) {
    println!("suite: {}", report.suite);
    for c in &report.claims {
        let mark = if c.pass { "PASS" } else { "FAIL" };
        println!("  {mark} {}: {}", c.id, c.detail);
    }
}

fn cmd_verify(cli: &Cli, suite: &str, opts: &VerifyOptions) -> Result<ExitCode, Error> {
    let reports = if suite == "all" {
        run_all(opts)?
    } else {
        vec![run_suite(suite, opts)?]
    };
    let all_pass = reports.iter().all(SuiteReport::pass);
    if cli.json {
        if suite == "all" {
            println!("{}", serde_json::to_string(&reports).expect("serializable"));
        } else {
            println!(
                "{}",
                serde_json::to_string(&reports[0]).expect("serializable")
            );
        }
    } else {
        for report in &reports {
            print_suite_text(report);
        }
        let claims: usize = reports.iter().map(|r| r.claims.len()).sum();
        println!(
            "{}: {claims} claim(s) across {} suite(s)",
            if all_pass { "ok" } else { "FAILED" },
            reports.len()
        );
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_scan(cli: &Cli, which: &str, instances: u64, cfg: &SearchConfig) -> Result<ExitCode, Error> {
    let opts = ScanOptions {
        seed: cli.seed,
        instances,
        config: *cfg,
    };
    let report = run_scan(which, &opts)?;
    if cli.json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("scan: {}", report.scan);
        println!("cases: {}", report.cases);
        for note in &report.notes {
            println!("note: {note}");
        }
        if report.counterexamples.is_empty() {
            println!("counterexamples: none");
        } else {
            for c in &report.counterexamples {
                println!("counterexample: {c}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
