//! Command-line front end. Thin wiring only: parse arguments, load graphs
//! and targets, call the library, print the report in the requested
//! format. Exit codes: 0 ok, 1 usage or bad input, 2 budget exceeded,
//! 3 internal inconsistency (a proven statement failing, or the solver
//! disagreeing with its own pruning-free rescan).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cairn::cache::{self, Cache};
use cairn::constructions;
use cairn::distribution::{self, DistributionSet};
use cairn::error::{Error, Result};
use cairn::graph::Graph;
use cairn::harness::{
    self, CheckOptions, Classification, ConjectureInstance, ConjectureKind, ConjectureSpec,
    Outcome, SweepSpec,
};
use cairn::io::{self, TargetSpec};
use cairn::numbers::Quantifier;
use cairn::solver::{self, MoveSequence, SolveOpts};

#[derive(Parser)]
#[command(name = "pebble", version, about = "Exact graph pebbling toolkit")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_parser = ["json", "text"], default_value = "json")]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a start distribution reaches a target.
    Reach(ReachArgs),
    /// Compute a pebbling number.
    Number(NumberArgs),
    /// Check one named equality or bound statement exactly.
    Verify(VerifyArgs),
    /// Check one product-inequality instance.
    Conjecture(ConjectureArgs),
    /// Check product inequalities across graph families.
    Sweep(SweepArgs),
    /// Rerun the stock counterexamples and report each claim.
    Repro,
}

#[derive(Args)]
struct ReachArgs {
    /// Graph file or shorthand: path:N, cycle:N, complete:N, cube:D,
    /// trivial, product(A,B).
    #[arg(long)]
    graph: String,
    /// Start distribution as a bracketed count vector.
    #[arg(long)]
    from: String,
    /// Target: count vector, delta:v, tdelta:v:t, or gamma.
    #[arg(long, conflicts_with = "any_of")]
    to: Option<String>,
    /// Target set file; reaching any one member counts.
    #[arg(long)]
    any_of: Option<PathBuf>,
    /// Disable every solver prune and search literally.
    #[arg(long)]
    paranoid: bool,
    /// Write the move witness here when reachable.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Args)]
struct NumberArgs {
    #[arg(long)]
    graph: String,
    /// Which number: pi, pi_t, gamma, rho, rho_t, or pi_dist.
    #[arg(long)]
    kind: String,
    /// Target vertex (pi, pi_t, rho), count vector (pi_dist), or set
    /// file or shorthand (rho). Omit for whole-graph numbers.
    #[arg(long)]
    target: Option<String>,
    /// Fold factor for pi_t and rho_t.
    #[arg(long)]
    t: Option<u64>,
    /// Start distributions enumerated before giving up.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    /// Result cache file; PEBBLE_CACHE is the fallback.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which statement: prop:2s, prop:st, thm:doubling, or prop:g_of_p.
    statement: String,
    #[arg(long)]
    graph: Option<String>,
    /// Second product factor (thm:doubling).
    #[arg(long)]
    graph2: Option<String>,
    /// Pendant attachment vertex, index or label (prop:2s, prop:st).
    #[arg(long)]
    vertex: Option<String>,
    /// Target vertex in the first factor (thm:doubling).
    #[arg(long)]
    x: Option<String>,
    /// Target vertex in the second factor (thm:doubling).
    #[arg(long)]
    y: Option<String>,
    /// Pendant edge weight (prop:st) or first fold factor (thm:doubling).
    #[arg(long)]
    s: Option<u64>,
    /// Fold factor.
    #[arg(long)]
    t: Option<u64>,
    /// Path length (prop:g_of_p).
    #[arg(long)]
    n: Option<usize>,
    /// Doubling exponent (prop:g_of_p).
    #[arg(long)]
    i: Option<u32>,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Statement shape: sets, distributions, st-vertices, vertices,
    /// st-graphs, graham, odd, powers-of-two, weighted-st,
    /// weighted-vertices, or rho-analog.
    #[arg(long)]
    kind: String,
    /// First factor.
    #[arg(long)]
    graph: String,
    /// Second factor.
    #[arg(long)]
    graph2: String,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    /// Target vertex in the first factor.
    #[arg(long)]
    x: Option<String>,
    /// Target vertex in the second factor.
    #[arg(long)]
    y: Option<String>,
    /// Single target on the first factor.
    #[arg(long)]
    dg: Option<String>,
    /// Single target on the second factor.
    #[arg(long)]
    dh: Option<String>,
    /// Target set on the first factor (file or S_t:t / D_t:t).
    #[arg(long)]
    sg: Option<String>,
    /// Target set on the second factor.
    #[arg(long)]
    sh: Option<String>,
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// First-factor graphs, comma separated.
    #[arg(long, value_delimiter = ',')]
    left: Vec<String>,
    /// Second-factor graphs, comma separated.
    #[arg(long, value_delimiter = ',')]
    right: Vec<String>,
    /// Statement shapes, comma separated.
    #[arg(long, value_delimiter = ',')]
    kinds: Vec<String>,
    #[arg(long, default_value_t = 1)]
    s: u64,
    #[arg(long, default_value_t = 1)]
    t: u64,
    #[arg(long, default_value_t = 0)]
    a: u32,
    #[arg(long, default_value_t = 0)]
    b: u32,
    /// Sampled target pairs per graph pair for the sets and
    /// distributions shapes.
    #[arg(long, default_value_t = 3)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long)]
    cache: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.format == "json";
    let code = match &cli.command {
        Command::Reach(a) => run_reach(a, json),
        Command::Number(a) => run_number(a, json),
        Command::Verify(a) => run_verify(a, json),
        Command::Conjecture(a) => run_conjecture(a, json),
        Command::Sweep(a) => run_sweep(a, json),
        Command::Repro => run_repro(json),
    };
    match code {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 2,
                Error::Inconsistent(_) | Error::BoundExceeded { .. } => 3,
                _ => 1,
            })
        }
    }
}

/// Prints the report: the JSON value as-is, or the prepared text lines.
/// Weight-1 edges are legal but outside the classical game, so reports
/// about graphs that have them carry an explicit flag.
fn emit(json: bool, mut value: serde_json::Value, text: String, unit_edges: bool) {
    if json {
        if unit_edges {
            if let Some(map) = value.as_object_mut() {
                map.insert("weight_one_edges".into(), json!(true));
            }
        }
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("{text}");
        if unit_edges {
            println!("note: graph has weight-1 edges");
        }
    }
}

fn required<'a, T>(v: &'a Option<T>, flag: &str) -> Result<&'a T> {
    v.as_ref().ok_or_else(|| Error::InvalidInput(format!("{flag} is required here")))
}

fn open_cache(flag: Option<&PathBuf>) -> Result<Option<Cache>> {
    match cache::resolve_cache_path(flag.map(|p| p.as_path())) {
        Some(path) => Ok(Some(Cache::open(&path)?)),
        None => Ok(None),
    }
}

fn run_reach(args: &ReachArgs, json: bool) -> Result<u8> {
    let g = io::load_graph(&args.graph)?;
    let start = io::parse_distribution(&args.from)?;
    let opts = SolveOpts { paranoid: args.paranoid };
    let (sequence, member): (Option<MoveSequence>, Option<usize>) =
        if let Some(path) = &args.any_of {
            let set = io::load_distribution_set(path)?;
            match solver::reach_any_opts(&g, &start, &set, opts)? {
                Some(hit) => (Some(hit.sequence), Some(hit.member_index)),
                None => (None, None),
            }
        } else {
            let to = required(&args.to, "--to or --any-of")?;
            match io::parse_target(&g, to)? {
                TargetSpec::One(d) => (solver::is_reachable_opts(&g, &start, &d, opts)?, None),
                TargetSpec::Many(set) => match solver::reach_any_opts(&g, &start, &set, opts)? {
                    Some(hit) => (Some(hit.sequence), Some(hit.member_index)),
                    None => (None, None),
                },
            }
        };
    let witness = match &sequence {
        Some(seq) => Some(io::witness_to_file(&g, seq)?),
        None => None,
    };
    if let (Some(path), Some(w)) = (&args.witness, &witness) {
        std::fs::write(path, serde_json::to_string_pretty(w)? + "\n")?;
    }
    let reachable = sequence.is_some();
    let text = match (&sequence, member) {
        (Some(seq), Some(m)) => format!("reachable: member {m} in {} moves", seq.len()),
        (Some(seq), None) => format!("reachable in {} moves", seq.len()),
        _ => "unreachable".into(),
    };
    let value = json!({
        "reachable": reachable,
        "member_index": member,
        "witness": witness,
    });
    emit(json, value, text, g.has_unit_edges());
    Ok(0)
}

fn run_number(args: &NumberArgs, json: bool) -> Result<u8> {
    let g = io::load_graph(&args.graph)?;
    let fold = || required(&args.t, "--t").copied();
    // Vertex targets are the common case for pi, pi_t, and rho; anything
    // that does not name a vertex falls through to the target grammar.
    let vertex_or_target = |scale: u64| -> Result<TargetSpec> {
        let raw = required(&args.target, "--target")?;
        match io::parse_vertex(&g, raw) {
            Ok(v) => Ok(TargetSpec::One(distribution::delta(&g, v)?.scale(scale))),
            Err(_) => io::parse_target(&g, raw),
        }
    };
    let (quantifier, targets) = match args.kind.as_str() {
        "pi" => match &args.target {
            None => (Quantifier::PiSet, distribution::s_t(&g, 1)?),
            Some(_) => match vertex_or_target(1)? {
                TargetSpec::One(d) => (Quantifier::PiDist, DistributionSet::singleton(d)),
                TargetSpec::Many(s) => (Quantifier::PiSet, s),
            },
        },
        "pi_t" => match &args.target {
            None => (Quantifier::PiSet, distribution::s_t(&g, fold()?)?),
            Some(_) => match vertex_or_target(fold()?)? {
                TargetSpec::One(d) => (Quantifier::PiDist, DistributionSet::singleton(d)),
                TargetSpec::Many(s) => (Quantifier::PiSet, s),
            },
        },
        "gamma" => (
            Quantifier::PiDist,
            DistributionSet::singleton(distribution::gamma_target(&g)),
        ),
        "pi_dist" => match io::parse_target(&g, required(&args.target, "--target")?)? {
            TargetSpec::One(d) => (Quantifier::PiDist, DistributionSet::singleton(d)),
            TargetSpec::Many(_) => {
                return Err(Error::InvalidInput(
                    "pi_dist takes a single target; use kind pi for a set".into(),
                ))
            }
        },
        "rho" => match vertex_or_target(1)? {
            TargetSpec::One(d) => (Quantifier::RhoSet, DistributionSet::singleton(d)),
            TargetSpec::Many(s) => (Quantifier::RhoSet, s),
        },
        "rho_t" => (Quantifier::RhoSet, distribution::s_t(&g, fold()?)?),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown kind '{other}'; use pi, pi_t, gamma, rho, rho_t, or pi_dist"
            )))
        }
    };
    let mut cache = open_cache(args.cache.as_ref())?;
    let result =
        harness::cached_number(&g, &targets, quantifier, Some(args.budget), cache.as_mut())?;
    let mut text = format!("value = {}", result.value);
    if let Some(w) = &result.witness_failure {
        text.push_str(&format!("\nfailing witness = {:?}", w.counts()));
    }
    emit(json, serde_json::to_value(&result)?, text, g.has_unit_edges());
    Ok(0)
}

fn run_verify(args: &VerifyArgs, json: bool) -> Result<u8> {
    let (value, text, holds, units) = match args.statement.as_str() {
        "prop:2s" | "prop:st" => {
            let g = io::load_graph(required(&args.graph, "--graph")?)?;
            let vertex = io::parse_vertex(&g, required(&args.vertex, "--vertex")?)?;
            let s = if args.statement == "prop:2s" {
                2
            } else {
                *required(&args.s, "--s")?
            };
            let t = args.t.unwrap_or(1);
            let r = constructions::verify_prop_2s(&g, vertex, s, t)?;
            let text = format!("lhs = {}\nrhs = {}\nholds = {}", r.lhs, r.rhs, r.holds);
            (serde_json::to_value(&r)?, text, r.holds, g.has_unit_edges())
        }
        "thm:doubling" => {
            let g = io::load_graph(required(&args.graph, "--graph")?)?;
            let h = io::load_graph(required(&args.graph2, "--graph2")?)?;
            let x = io::parse_vertex(&g, required(&args.x, "--x")?)?;
            let y = io::parse_vertex(&h, required(&args.y, "--y")?)?;
            let s = args.s.unwrap_or(1);
            let t = args.t.unwrap_or(1);
            let r = constructions::verify_doubling_instance(&g, &h, x, y, s, t)?;
            let text = format!(
                "lhs = {}\nrhs via first factor = {}\nrhs via second factor = {}\nholds = {}",
                r.lhs, r.rhs.via_first_factor, r.rhs.via_second_factor, r.holds
            );
            let units = g.has_unit_edges() || h.has_unit_edges();
            (serde_json::to_value(&r)?, text, r.holds, units)
        }
        "prop:g_of_p" => {
            let n = *required(&args.n, "--n")?;
            let i = *required(&args.i, "--i")?;
            let r = constructions::verify_g_of_p(n, i)?;
            let text = if r.excluded {
                format!(
                    "cycle length {} is below 3; corner excluded, nothing to check",
                    r.cycle_len
                )
            } else {
                format!(
                    "lhs = {}\nrhs = {}\nclosed form = {}\ncritical start blocked = {}\nholds = {}",
                    r.lhs.unwrap(),
                    r.rhs.unwrap(),
                    r.closed_form.unwrap(),
                    r.critical_blocked.unwrap(),
                    r.holds
                )
            };
            (serde_json::to_value(&r)?, text, r.holds, false)
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown statement '{other}'; use prop:2s, prop:st, thm:doubling, or prop:g_of_p"
            )))
        }
    };
    emit(json, value, text, units);
    // These statements are proved; a clean run that refutes one means the
    // solver is inconsistent with itself.
    Ok(if holds { 0 } else { 3 })
}

fn instance_text(inst: &ConjectureInstance) -> String {
    let side = |v: &Option<cairn::numbers::Value>| {
        v.map_or_else(|| "?".to_string(), |v| v.to_string())
    };
    let verdict = match inst.outcome {
        Outcome::Holds => "holds".into(),
        Outcome::Violation => format!(
            "VIOLATION ({}; reconfirmed without prunes)",
            inst.classification
                .map_or("unclassified", |c| match c {
                    Classification::Expected => "expected",
                    Classification::Surprising => "surprising",
                    Classification::Impossible => "impossible",
                })
        ),
        Outcome::TooLarge => format!(
            "too large: {}",
            inst.note.as_deref().unwrap_or("budget exhausted")
        ),
    };
    format!(
        "{}: lhs = {}, rhs = {} -> {}",
        inst.kind.token(),
        side(&inst.lhs),
        side(&inst.rhs),
        verdict
    )
}

fn parse_vertex_opt(g: &Graph, v: &Option<String>) -> Result<Option<usize>> {
    v.as_ref().map(|s| io::parse_vertex(g, s)).transpose()
}

fn single_target(g: &Graph, s: &str) -> Result<distribution::Distribution> {
    match io::parse_target(g, s)? {
        TargetSpec::One(d) => Ok(d),
        TargetSpec::Many(_) => Err(Error::InvalidInput(
            "this flag takes a single target, not a set".into(),
        )),
    }
}

fn set_target(g: &Graph, s: &str) -> Result<DistributionSet> {
    match io::parse_target(g, s)? {
        TargetSpec::One(d) => Ok(DistributionSet::singleton(d)),
        TargetSpec::Many(set) => Ok(set),
    }
}

fn run_conjecture(args: &ConjectureArgs, json: bool) -> Result<u8> {
    let kind: ConjectureKind = args.kind.parse()?;
    let g = io::load_graph(&args.graph)?;
    let h = io::load_graph(&args.graph2)?;
    let mut spec = ConjectureSpec::new(kind, g.clone(), h.clone());
    spec.s = args.s;
    spec.t = args.t;
    spec.a = args.a;
    spec.b = args.b;
    spec.x = parse_vertex_opt(&g, &args.x)?;
    spec.y = parse_vertex_opt(&h, &args.y)?;
    spec.dg = args.dg.as_deref().map(|s| single_target(&g, s)).transpose()?;
    spec.dh = args.dh.as_deref().map(|s| single_target(&h, s)).transpose()?;
    spec.sg = args.sg.as_deref().map(|s| set_target(&g, s)).transpose()?;
    spec.sh = args.sh.as_deref().map(|s| set_target(&h, s)).transpose()?;
    let mut cache = open_cache(args.cache.as_ref())?;
    let opts = CheckOptions { budget: Some(args.budget), cache: cache.as_mut() };
    let inst = harness::check_conjecture(&spec, opts)?;
    let units = g.has_unit_edges() || h.has_unit_edges();
    emit(json, serde_json::to_value(&inst)?, instance_text(&inst), units);
    Ok(match (inst.outcome, inst.classification) {
        (Outcome::TooLarge, _) => 2,
        (Outcome::Violation, Some(Classification::Impossible)) => 3,
        _ => 0,
    })
}

fn run_sweep(args: &SweepArgs, json: bool) -> Result<u8> {
    let mut pairs = Vec::new();
    for l in &args.left {
        for r in &args.right {
            pairs.push((io::load_graph(l)?, io::load_graph(r)?));
        }
    }
    let kinds = args
        .kinds
        .iter()
        .map(|k| k.parse())
        .collect::<Result<Vec<ConjectureKind>>>()?;
    let mut spec = SweepSpec::new(pairs, kinds);
    spec.s = args.s;
    spec.t = args.t;
    spec.a = args.a;
    spec.b = args.b;
    spec.samples = args.samples;
    spec.seed = args.seed;
    let mut cache = open_cache(args.cache.as_ref())?;
    let opts = CheckOptions { budget: Some(args.budget), cache: cache.as_mut() };
    let report = harness::sweep(&spec, opts)?;
    let mut text = format!(
        "seed {}: {} hold, {} violations, {} too large",
        report.seed, report.holds, report.violations, report.too_large
    );
    for inst in &report.instances {
        text.push_str(&format!("\n  {}", instance_text(inst)));
    }
    let impossible = report.instances.iter().any(|i| {
        i.outcome == Outcome::Violation && i.classification == Some(Classification::Impossible)
    });
    let units = spec
        .pairs
        .iter()
        .any(|(g, h)| g.has_unit_edges() || h.has_unit_edges());
    emit(json, serde_json::to_value(&report)?, text, units);
    Ok(if impossible { 3 } else { 0 })
}

fn run_repro(json: bool) -> Result<u8> {
    let report = harness::reproduce_counterexamples(CheckOptions::default())?;
    let mut text = String::new();
    for claim in &report.claims {
        text.push_str(&format!(
            "[{}] {} (expected {}, observed {})\n",
            if claim.pass { "pass" } else { "FAIL" },
            claim.claim,
            claim.expected,
            claim.observed
        ));
    }
    text.push_str(if report.pass { "all claims reproduced" } else { "REPRODUCTION FAILED" });
    emit(json, serde_json::to_value(&report)?, text, false);
    // Failing to reproduce a stock counterexample means the solver broke.
    Ok(if report.pass { 0 } else { 3 })
}
