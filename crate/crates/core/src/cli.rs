//! Command-line driver behind the `lfnet` binary.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::bounds::{
    algorithm_one, bounds_report, distance_vector_set, lower_bound, BoundsReport, ExhaustiveSearch,
    BRUTE_FORCE_CAP,
};
use crate::controllability::{check_prop1, controllability_matrix, witness_submatrix};
use crate::error::{Error, Result};
use crate::gen;
use crate::graph::Network;
use crate::io;
use crate::partition::maximal_leader_invariant_eep;
use crate::sim::{simulate, InputSchedule};

#[derive(Debug, Parser)]
#[command(name = "lfnet", version, about = "Controllability bounds for leader-follower consensus networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for random generation and random initial states.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Where the graph comes from. Files starting with `{` are read as JSON,
/// anything else as the plain-text edge list.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Graph file (JSON or plain-text edge list).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Read the graph from standard input.
    #[arg(long)]
    pub stdin: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lower bound, exact rank, and upper bound with witnesses.
    Analyze(InputArgs),
    /// Exact rank of the controllability matrix.
    Rank(InputArgs),
    /// Maximal leader-invariant external equitable partition.
    Eep(InputArgs),
    /// Longest admissible distance-vector sequence.
    LowerBound(InputArgs),
    /// Integrate the consensus dynamics and print the trajectory as CSV.
    Simulate(SimulateArgs),
    /// Run the structural property checks on one graph.
    Check(InputArgs),
    /// Generate a graph family as JSON.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 10.0)]
    pub t_end: f64,
    #[arg(long, default_value_t = 0.01)]
    pub dt: f64,
    /// Initial state: comma-separated values, or "random" for uniform [-1, 1].
    #[arg(long, default_value = "random")]
    pub x0: String,
    /// Input schedule file: lines of "t u_1 ... u_m". Zero input if omitted.
    #[arg(long)]
    pub u: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Grid,
    Random,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Node count (grid: number of rows).
    #[arg(long)]
    pub n: usize,
    /// Grid columns; defaults to `--n`.
    #[arg(long)]
    pub cols: Option<usize>,
    /// Edge probability for the random family.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Leader ids as a comma list; for the random family, the leader count.
    #[arg(long, default_value = "0")]
    pub leaders: String,
}

/// A command's rendered output and exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn read_network(args: &InputArgs) -> Result<Network> {
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            buf
        }
    };
    io::parse_auto(&text)
}

/// Runs one parsed command. Errors carry their own exit code via
/// [`Error::exit_code`].
pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Gen(args) => cmd_gen(args, cli.seed).map(|net| Outcome::ok(io::to_json(&net) + "\n")),
        Command::Simulate(args) => cmd_simulate(&read_network(&args.input)?, args, cli.format, cli.seed),
        Command::Analyze(input) => cmd_analyze(&read_network(input)?, cli.format),
        Command::Rank(input) => cmd_rank(&read_network(input)?, cli.format),
        Command::Eep(input) => cmd_eep(&read_network(input)?, cli.format),
        Command::LowerBound(input) => cmd_lower_bound(&read_network(input)?, cli.format),
        Command::Check(input) => cmd_check(&read_network(input)?, cli.format),
    }
}

pub fn render_report_text(net: &Network, report: &BoundsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "nodes {}  edges {}  leaders {:?}",
        net.node_count(),
        net.edges().len(),
        net.leaders()
    );
    let _ = writeln!(
        out,
        "lower {} <= rank {} <= upper {}",
        report.lower, report.rank, report.upper
    );
    let _ = writeln!(out, "witness  {}", report.witness_sequence);
    let _ = writeln!(out, "eep      {}", render_cells(report.eep_cells.cells()));
    out
}

fn render_cells(cells: &[Vec<usize>]) -> String {
    cells
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(ToString::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_analyze(net: &Network, format: Format) -> Result<Outcome> {
    let report = bounds_report(net)?;
    Ok(Outcome::ok(match format {
        Format::Json => serde_json::to_string(&report).expect("report serializes") + "\n",
        Format::Text => render_report_text(net, &report),
    }))
}

pub fn cmd_rank(net: &Network, format: Format) -> Result<Outcome> {
    let rank = controllability_matrix(net).rank();
    let n = net.node_count();
    Ok(Outcome::ok(match format {
        Format::Json => json!({ "rank": rank, "n": n }).to_string() + "\n",
        Format::Text => format!("rank {rank} of {n}\n"),
    }))
}

pub fn cmd_eep(net: &Network, format: Format) -> Result<Outcome> {
    net.require_connected()?;
    let eep = maximal_leader_invariant_eep(net);
    Ok(Outcome::ok(match format {
        Format::Json => json!({ "upper": eep.len(), "cells": eep }).to_string() + "\n",
        Format::Text => format!("upper {}\n{}\n", eep.len(), render_cells(eep.cells())),
    }))
}

pub fn cmd_lower_bound(net: &Network, format: Format) -> Result<Outcome> {
    let res = lower_bound(net)?;
    Ok(Outcome::ok(match format {
        Format::Json => json!({ "lower": res.length, "witness_sequence": res.witness }).to_string() + "\n",
        Format::Text => format!("lower {}\nwitness {}\n", res.length, res.witness),
    }))
}

fn parse_x0(spec: &str, n: usize, seed: u64) -> Result<Vec<f64>> {
    if spec == "random" {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        return Ok((0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect());
    }
    let x0: Vec<f64> = spec
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad x0 entry {t:?}")))
        })
        .collect::<Result<_>>()?;
    if x0.len() != n {
        return Err(Error::InvalidParams(format!("x0 has {} entries, network has {n} nodes", x0.len())));
    }
    Ok(x0)
}

pub fn cmd_simulate(net: &Network, args: &SimulateArgs, format: Format, seed: u64) -> Result<Outcome> {
    let x0 = parse_x0(&args.x0, net.node_count(), seed)?;
    let sched = match &args.u {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            InputSchedule::parse(&text)?
        }
        None => InputSchedule::zero(),
    };
    let traj = simulate(net, &x0, &sched, args.t_end, args.dt)?;
    Ok(Outcome::ok(match format {
        Format::Json => json!({ "times": traj.times, "states": traj.states }).to_string() + "\n",
        Format::Text => traj.to_csv(),
    }))
}

pub fn cmd_gen(args: &GenArgs, seed: u64) -> Result<Network> {
    let ids = || -> Result<Vec<usize>> {
        args.leaders
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::InvalidParams(format!("bad leader id {t:?}")))
            })
            .collect()
    };
    match args.family {
        Family::Path => gen::path(args.n, &ids()?),
        Family::Cycle => gen::cycle(args.n, &ids()?),
        Family::Star => gen::star(args.n, &ids()?),
        Family::Complete => gen::complete(args.n, &ids()?),
        Family::Grid => gen::grid(args.n, args.cols.unwrap_or(args.n), &ids()?),
        Family::Random => {
            let count = args
                .leaders
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParams(format!("random family needs a leader count, got {:?}", args.leaders)))?;
            gen::random_seeded(args.n, args.p, count, seed)
        }
    }
}

/// Result of one structural check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Zero pattern of `(-L)^r b_k`, witness column rank, agreement with the
/// exhaustive oracle, the greedy-minimum property of longest sequences, and
/// the bound ordering.
pub fn run_checks(net: &Network) -> Result<Vec<CheckLine>> {
    net.require_connected()?;
    let mut lines = Vec::new();

    let n = net.node_count();
    let m = net.leader_count();
    let triples: usize = {
        let dist = net.bfs_distances()?;
        (0..n).map(|i| (0..m).map(|k| dist.get(i, k) + 1).sum::<usize>()).sum()
    };
    let violations = check_prop1(net)?;
    lines.push(CheckLine {
        name: "walk-pattern",
        passed: violations.is_empty(),
        detail: match violations.first() {
            None => format!("{triples} entries match"),
            Some(v) => format!("{} violations, first: {v}", violations.len()),
        },
    });

    let lb = lower_bound(net)?;
    let w = witness_submatrix(net, &lb.witness)?;
    let wrank = w.rank();
    lines.push(CheckLine {
        name: "witness-rank",
        passed: wrank == lb.length && lb.witness.check_rule(),
        detail: format!("rank {wrank} for {} columns", lb.length),
    });

    let set = distance_vector_set(&net.bfs_distances()?);
    if set.len() <= BRUTE_FORCE_CAP {
        let search = ExhaustiveSearch::new(set.vectors(), m, BRUTE_FORCE_CAP)?;
        let algo = algorithm_one(set.vectors(), m)?.length;
        lines.push(CheckLine {
            name: "oracle-length",
            passed: algo == search.max_length(),
            detail: format!("level search {algo}, exhaustive {}", search.max_length()),
        });
        let greedy = search.check_greedy_minimum();
        lines.push(CheckLine {
            name: "greedy-minimum",
            passed: greedy.is_ok(),
            detail: match greedy {
                Ok(count) => format!("{count} optimal moves inspected"),
                Err((mask, mv)) => format!("state {mask:#b} move {mv:?} is not a column minimum"),
            },
        });
    } else {
        lines.push(CheckLine {
            name: "oracle-length",
            passed: true,
            detail: format!("skipped: {} distinct vectors exceed cap {BRUTE_FORCE_CAP}", set.len()),
        });
    }

    match bounds_report(net) {
        Ok(r) => lines.push(CheckLine {
            name: "sandwich",
            passed: true,
            detail: format!("{} <= {} <= {}", r.lower, r.rank, r.upper),
        }),
        Err(Error::SandwichViolation { lower, rank, upper }) => lines.push(CheckLine {
            name: "sandwich",
            passed: false,
            detail: format!("{lower} <= {rank} <= {upper} fails"),
        }),
        Err(e) => return Err(e),
    }
    Ok(lines)
}

pub fn cmd_check(net: &Network, format: Format) -> Result<Outcome> {
    let lines = run_checks(net)?;
    let failed = lines.iter().filter(|l| !l.passed).count();
    let stdout = match format {
        Format::Json => json!({ "checks": lines, "failed": failed }).to_string() + "\n",
        Format::Text => {
            let mut out = String::new();
            for l in &lines {
                let _ = writeln!(out, "{} {:<15} {}", if l.passed { "PASS" } else { "FAIL" }, l.name, l.detail);
            }
            let _ = writeln!(out, "{} passed, {failed} failed", lines.len() - failed);
            out
        }
    };
    Ok(Outcome {
        stdout,
        code: if failed == 0 { 0 } else { 2 },
    })
}
