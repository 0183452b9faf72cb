//! `nbnc`: rank nodes, pick vaccinees, run seeded SIS trials, sweep the
//! parameter grid, and render heat maps.
//!
//! Exit codes: 0 success, 1 usage, 2 data or parse error, 3 numeric failure.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use nbnc_core::experiment::{
    heatmap_layout, load_registry, read_records_csv, render_svg, write_file, write_ratios_csv,
    write_records_csv, write_summary_csv,
};
use nbnc_core::{
    compute_ratios, nbnc_tuples, parse_edge_list, rank_nodes, run_sweep, run_trials,
    select_vaccinees, summarize_ratios, Error, Graph, SimConfig, Strategy, SweepGrid,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "nbnc",
    version,
    about = "Bridge-node centrality vaccination experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every node with its centrality tuple, best first.
    Rank {
        graph: PathBuf,
        #[arg(long, default_value = "nbnc", value_parser = parse_strategy)]
        strategy: Strategy,
    },
    /// Print the nodes chosen for vaccination.
    Vaccinate {
        graph: PathBuf,
        #[arg(long, default_value = "nbnc", value_parser = parse_strategy)]
        strategy: Strategy,
        #[arg(long, value_parser = parse_probability)]
        lambda: f64,
    },
    /// Run seeded SIS trials and print JSON lines.
    Simulate(SimulateArgs),
    /// Run the full operating-condition grid over a manifest of networks.
    Sweep(SweepArgs),
    /// Render a records CSV as an SVG heat map.
    Report {
        records: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct SimulateArgs {
    graph: PathBuf,
    #[arg(long, value_parser = parse_probability)]
    beta: f64,
    #[arg(long, value_parser = parse_probability)]
    mu: f64,
    #[arg(long, value_parser = parse_probability, default_value_t = 0.0)]
    lambda: f64,
    #[arg(long, default_value = "nbnc", value_parser = parse_strategy)]
    strategy: Strategy,
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    rounds: u64,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct SweepArgs {
    manifest: PathBuf,
    #[arg(long, value_delimiter = ',', value_parser = parse_probability, default_values_t = [0.3, 0.5, 0.7])]
    beta: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_parser = parse_probability, default_values_t = [0.25, 0.5])]
    mu: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_parser = parse_probability, default_values_t = [0.05, 0.10, 0.15, 0.20, 0.30])]
    lambda: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_parser = parse_strategy, default_values_t = Strategy::ALL)]
    strategy: Vec<Strategy>,
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    rounds: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    jobs: Option<usize>,
    /// Output directory for records.csv, ratios.csv, and summary.csv.
    #[arg(long)]
    out: PathBuf,
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a number"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is outside [0, 1]"))
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) => 1,
            Error::NoConvergence { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Rank { graph, strategy } => cmd_rank(&graph, strategy, &mut out),
        Command::Vaccinate {
            graph,
            strategy,
            lambda,
        } => cmd_vaccinate(&graph, strategy, lambda, &mut out),
        Command::Simulate(args) => cmd_simulate(&args, &mut out),
        Command::Sweep(args) => cmd_sweep(&args, &mut out),
        Command::Report { records, out: path } => cmd_report(&records, &path, &mut out),
    }
    .and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

/// Seed to use and whether it was generated here.
fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let nanos = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos() as u64)
            .unwrap_or(0);
        nbnc_core::rng::mix64(nanos ^ u64::from(std::process::id()))
    })
}

fn cmd_rank(path: &Path, strategy: Strategy, out: &mut impl Write) -> Result<(), Failure> {
    let g = load_graph(path)?;
    let tuples = nbnc_tuples(&g)?;
    let ranking = rank_nodes(&g, strategy)?;
    let group = ranking.group_index();
    for &v in &ranking.order {
        let t = &tuples[v];
        writeln!(
            out,
            "{v} {} {:.6} {} {}",
            t.components, t.acr, t.degree, group[v]
        )?;
    }
    Ok(())
}

fn cmd_vaccinate(
    path: &Path,
    strategy: Strategy,
    lambda: f64,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let g = load_graph(path)?;
    let chosen = select_vaccinees(&g, strategy, lambda)?;
    writeln!(out, "{}", chosen.len())?;
    let ids: Vec<String> = chosen.sorted().iter().map(|v| v.to_string()).collect();
    writeln!(out, "{}", ids.join(" "))?;
    Ok(())
}

#[derive(Serialize)]
struct SimulateHeader<'a> {
    graph: &'a str,
    nodes: usize,
    strategy: String,
    beta: f64,
    mu: f64,
    lambda: f64,
    trials: u64,
    rounds: u64,
    seed: u64,
    seed_generated: bool,
    vaccinees: &'a [usize],
}

#[derive(Serialize)]
struct TrialLine<'a> {
    trial: usize,
    rounds: usize,
    total_infected: usize,
    avg_infected_per_round: f64,
    per_round: &'a [usize],
}

#[derive(Serialize)]
struct SummaryLine {
    summary: SummaryBody,
}

#[derive(Serialize)]
struct SummaryBody {
    trials: usize,
    mean_avg_infected_per_round: f64,
    avg_infected_fraction: f64,
}

fn cmd_simulate(args: &SimulateArgs, out: &mut impl Write) -> Result<(), Failure> {
    let seed = resolve_seed(args.seed);
    let config = SimConfig::new(args.beta, args.mu, args.rounds as usize, seed)?;
    let g = load_graph(&args.graph)?;
    let vaccinees = select_vaccinees(&g, args.strategy, args.lambda)?;
    let sorted = vaccinees.sorted();
    let header = SimulateHeader {
        graph: &args.graph.display().to_string(),
        nodes: g.node_count(),
        strategy: args.strategy.to_string(),
        beta: args.beta,
        mu: args.mu,
        lambda: args.lambda,
        trials: args.trials,
        rounds: args.rounds,
        seed,
        seed_generated: args.seed.is_none(),
        vaccinees: &sorted,
    };
    json_line(out, &header)?;
    let results = run_trials(&g, &config, &vaccinees, args.trials as usize)?;
    for (trial, r) in results.iter().enumerate() {
        json_line(
            out,
            &TrialLine {
                trial,
                rounds: r.rounds_executed,
                total_infected: r.total_infected,
                avg_infected_per_round: r.avg_infected_per_round,
                per_round: &r.per_round_infected,
            },
        )?;
    }
    let mean = results
        .iter()
        .map(|r| r.avg_infected_per_round)
        .sum::<f64>()
        / results.len() as f64;
    let fraction = if g.node_count() == 0 {
        0.0
    } else {
        mean / g.node_count() as f64
    };
    json_line(
        out,
        &SummaryLine {
            summary: SummaryBody {
                trials: results.len(),
                mean_avg_infected_per_round: mean,
                avg_infected_fraction: fraction,
            },
        },
    )
}

fn json_line<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure {
        code: 2,
        message: e.to_string(),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn cmd_sweep(args: &SweepArgs, out: &mut impl Write) -> Result<(), Failure> {
    let seed = resolve_seed(args.seed);
    let grid = SweepGrid {
        betas: args.beta.clone(),
        mus: args.mu.clone(),
        lambdas: args.lambda.clone(),
        strategies: args.strategy.clone(),
        n_trials: args.trials as usize,
        max_rounds: args.rounds as usize,
        base_seed: seed,
    };
    grid.validate()?;
    let registry = load_registry(&args.manifest)?;
    for w in &registry.warnings {
        eprintln!("warning: {w}");
    }
    if registry.networks.is_empty() {
        return Err(Failure {
            code: 1,
            message: format!("manifest {} lists no networks", args.manifest.display()),
        });
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        pool = pool.num_threads(jobs.max(1));
    }
    let pool = pool.build().map_err(|e| Failure {
        code: 1,
        message: format!("cannot start worker pool: {e}"),
    })?;
    let records = pool.install(|| run_sweep(&registry.networks, &grid))?;

    fs::create_dir_all(&args.out).map_err(|source| Error::Io {
        path: args.out.clone(),
        source,
    })?;
    write_file(&args.out.join("records.csv"), |w| {
        write_records_csv(&records, w)
    })?;
    let has_pairs =
        grid.strategies.contains(&Strategy::Nbnc) && grid.strategies.contains(&Strategy::Deg);
    if has_pairs {
        let ratios = compute_ratios(&records)?;
        let summary = summarize_ratios(&ratios);
        for c in &summary.excluded {
            eprintln!(
                "warning: no defined ratio for beta={} mu={} lambda={}",
                c.beta, c.mu, c.lambda
            );
        }
        write_file(&args.out.join("ratios.csv"), |w| {
            write_ratios_csv(&ratios, w)
        })?;
        write_file(&args.out.join("summary.csv"), |w| {
            write_summary_csv(&summary, w)
        })?;
    } else {
        eprintln!("warning: single strategy, skipping ratios.csv and summary.csv");
    }
    writeln!(
        out,
        "seed {seed}{}",
        if args.seed.is_none() {
            " (generated)"
        } else {
            ""
        }
    )?;
    writeln!(
        out,
        "{} networks, {} records written to {}",
        registry.networks.len(),
        records.len(),
        args.out.display()
    )?;
    Ok(())
}

fn cmd_report(records_path: &Path, svg_path: &Path, out: &mut impl Write) -> Result<(), Failure> {
    let file = fs::File::open(records_path).map_err(|source| Error::Io {
        path: records_path.to_path_buf(),
        source,
    })?;
    let records = read_records_csv(io::BufReader::new(file)).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", records_path.display()),
    })?;
    let layout = heatmap_layout(&records)?;
    let svg = render_svg(&layout);
    write_file(svg_path, |w| w.write_all(svg.as_bytes()))?;
    writeln!(
        out,
        "{} x {} heat map written to {}",
        layout.row_labels.len(),
        layout.column_labels.len(),
        svg_path.display()
    )?;
    Ok(())
}
