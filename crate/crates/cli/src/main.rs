use std::fmt;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sigspread::families::FamilySpec;
use sigspread::io::{graph_from_json, graph_to_json, report_to_value, steps_to_value, to_dot, trace_to_json};
use sigspread::solver::{describe, DEFAULT_EXACT_CAP};
use sigspread::verify::{self, ClaimParams, Conjecture, CorpusSpec, Status};
use sigspread::{
    equivalent, exact_confusion, exact_relaxed_confusion, min_steps, relaxed_via_class, run, Budget,
    Mode, Placement, PolicyKind, Sign, SignedGraph, Strategy, SwitchSet,
};

/// Information dissemination on signed graphs: simulate, solve exactly,
/// and check the known bounds.
///
/// Graphs are exchanged as JSON `{"schema":1,"n":..,"edges":[{"u","v","sign"}]}`;
/// commands that read a graph take a file path or read stdin.
/// Exit status: 0 ok, 1 domain error, 2 usage error, 3 failed verification.
#[derive(Parser)]
#[command(name = "sigspread", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family member or a seeded random graph.
    Generate(GenerateArgs),
    /// Run a given placement sequence and print the trace.
    Simulate(SimulateArgs),
    /// Compute the (relaxed) confusion number or the minimum step count.
    Solve(SolveArgs),
    /// Test balance and antibalance; print the partition.
    Balance(InputArg),
    /// Frustration index with a minimum balancing edge set.
    Frustration(FrustrationArgs),
    /// Decide switching equivalence of two signatures on the same graph.
    Equivalent(EquivalentArgs),
    /// Switch at a vertex set.
    Switch(SwitchArgs),
    /// Run the claim registry, or one claim.
    Verify(VerifyArgs),
    /// Search a corpus for counterexamples to a conjecture.
    ExploreConjecture(ExploreArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct InputArg {
    /// Graph JSON file; stdin when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    family: Family,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Shorthand for `--format dot`.
    #[arg(long, global = true)]
    dot: bool,
}

#[derive(Subcommand)]
enum Family {
    /// Two positive K_{n/2} joined by a negative perfect matching.
    Gn {
        n: usize,
        #[arg(long)]
        negated: bool,
    },
    /// K_{t,t} with a negative perfect matching.
    Ktt {
        t: usize,
        #[arg(long)]
        negated: bool,
    },
    /// Ring of s layers of size t, consecutive layers inducing (K_tt, tau_t).
    Gst {
        s: usize,
        t: usize,
        /// Comma-separated 0/1 per layer pair; 1 negates that pair.
        #[arg(long, value_delimiter = ',')]
        flags: Option<Vec<u8>>,
    },
    /// Circuit on k vertices (all positive unless told otherwise).
    Cycle {
        k: usize,
        #[arg(long, conflicts_with = "signs")]
        all_negative: bool,
        /// Comma-separated `+`/`-` per edge `{i, i+1}`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        signs: Option<Vec<String>>,
    },
    /// Path with `len` edges.
    Path {
        len: usize,
        #[arg(long, conflicts_with = "signs")]
        all_negative: bool,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        signs: Option<Vec<String>>,
    },
    RandomTree {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        neg_prob: f64,
    },
    RandomConnected {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0.5)]
        neg_prob: f64,
    },
}

#[derive(Args)]
struct SimulateArgs {
    input: Option<PathBuf>,
    /// Placement `v:A` or `v:-A`, in order; repeat for each step.
    #[arg(long = "place", required = true, allow_hyphen_values = true)]
    placements: Vec<String>,
    /// `ID` or `rID`; defaults to rID when any placement is `-A`.
    #[arg(long)]
    mode: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search node limit; on exhaustion the best known upper bound is
    /// reported with `"optimal": false`.
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<f64>,
    /// Largest graph order accepted by the exact solver.
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    max_n: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        let mut b = Budget::default().with_max_n(self.max_n);
        if let Some(nodes) = self.budget_nodes {
            b = b.with_nodes(nodes);
        }
        if let Some(secs) = self.budget_secs {
            b = b.with_time(seconds(secs)?);
        }
        Ok(b)
    }
}

fn seconds(secs: f64) -> Result<Duration> {
    Duration::try_from_secs_f64(secs).map_err(|_| usage(format!("invalid duration {secs}")))
}

#[derive(Args)]
struct SolveArgs {
    input: Option<PathBuf>,
    /// Relaxed process (placements may carry -A).
    #[arg(long)]
    relaxed: bool,
    /// Minimum number of placements instead of minimum confusion.
    #[arg(long, conflicts_with_all = ["via_class", "greedy"])]
    min_steps: bool,
    /// Exact branch and bound (the default).
    #[arg(long, conflicts_with_all = ["via_class", "greedy"])]
    exact: bool,
    /// Relaxed value as the minimum over the switching class.
    #[arg(long, conflicts_with = "greedy")]
    via_class: bool,
    /// Run a constructive policy instead of searching.
    #[arg(long, value_name = "POLICY")]
    greedy: Option<String>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct FrustrationArgs {
    input: Option<PathBuf>,
    #[arg(long, default_value_t = sigspread::graph::DEFAULT_FRUSTRATION_CAP)]
    max_n: usize,
}

#[derive(Args)]
struct EquivalentArgs {
    first: PathBuf,
    second: PathBuf,
}

#[derive(Args)]
struct SwitchArgs {
    input: Option<PathBuf>,
    /// Comma-separated vertices to switch at.
    #[arg(long, value_delimiter = ',', required = true)]
    set: Vec<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single claim.
    #[arg(long)]
    claim: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    count: Option<usize>,
    /// Time limit per solve.
    #[arg(long)]
    budget_secs: Option<f64>,
    /// Print a JSON array of claim results instead of a table.
    #[arg(long)]
    json: bool,
    /// List claim ids and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct ExploreArgs {
    /// `conj1` or `conj2`.
    which: String,
    #[arg(long, default_value_t = CorpusSpec::default().family_max_n)]
    family_max_n: usize,
    #[arg(long, default_value_t = CorpusSpec::default().random_count)]
    random_count: usize,
    #[arg(long, default_value_t = CorpusSpec::default().random_max_n)]
    random_max_n: usize,
    #[arg(long, default_value_t = CorpusSpec::default().seed)]
    seed: u64,
    #[command(flatten)]
    budget: BudgetArgs,
}

/// Marks errors that should exit with the usage status.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn read_text(input: Option<&PathBuf>) -> Result<String> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            buf
        }
    };
    if text.trim().is_empty() {
        return Err(usage("no input graph (pass a file or pipe JSON on stdin)"));
    }
    Ok(text)
}

fn read_graph(input: Option<&PathBuf>) -> Result<SignedGraph> {
    Ok(graph_from_json(&read_text(input)?)?)
}

fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

fn emit_json(value: &Value) -> Result<()> {
    emit(&serde_json::to_string(value)?)
}

fn emit_graph(g: &SignedGraph, format: Format) -> Result<()> {
    match format {
        Format::Json => emit(&graph_to_json(g)),
        Format::Dot => emit(&to_dot(g, None)),
    }
}

fn parse_signs(raw: &[String]) -> Result<Vec<Sign>> {
    raw.iter()
        .map(|s| match s.trim() {
            "+" | "1" | "+1" => Ok(Sign::Positive),
            "-" | "-1" => Ok(Sign::Negative),
            other => Err(usage(format!("bad sign `{other}` (use + or -)"))),
        })
        .collect()
}

fn family_signs(count: usize, all_negative: bool, signs: &Option<Vec<String>>) -> Result<Vec<Sign>> {
    match signs {
        Some(raw) => {
            let signs = parse_signs(raw)?;
            if signs.len() != count {
                return Err(usage(format!("expected {count} signs, got {}", signs.len())));
            }
            Ok(signs)
        }
        None if all_negative => Ok(vec![Sign::Negative; count]),
        None => Ok(vec![Sign::Positive; count]),
    }
}

fn generate(args: &GenerateArgs) -> Result<u8> {
    let spec = match &args.family {
        Family::Gn { n, negated } => FamilySpec::Gn { n: *n, negated: *negated },
        Family::Ktt { t, negated } => FamilySpec::KttTau { t: *t, negated: *negated },
        Family::Gst { s, t, flags } => FamilySpec::Gst {
            s: *s,
            t: *t,
            layer_negated: match flags {
                Some(f) => f.iter().map(|&x| x != 0).collect(),
                None => vec![false; *s],
            },
        },
        Family::Cycle { k, all_negative, signs } => FamilySpec::Cycle {
            signs: family_signs(*k, *all_negative, signs)?.iter().map(|s| s.as_i64()).collect(),
        },
        Family::Path { len, all_negative, signs } => FamilySpec::Path {
            signs: family_signs(*len, *all_negative, signs)?.iter().map(|s| s.as_i64()).collect(),
        },
        Family::RandomTree { n, seed, neg_prob } => {
            FamilySpec::RandomTree { seed: *seed, n: *n, neg_prob: *neg_prob }
        }
        Family::RandomConnected { n, seed, edge_prob, neg_prob } => FamilySpec::RandomConnected {
            seed: *seed,
            n: *n,
            edge_prob: *edge_prob,
            neg_prob: *neg_prob,
        },
    };
    let g = spec.generate()?;
    emit_graph(&g, if args.dot { Format::Dot } else { args.format })?;
    Ok(0)
}

fn simulate(args: &SimulateArgs) -> Result<u8> {
    let g = read_graph(args.input.as_ref())?;
    let placements = args
        .placements
        .iter()
        .map(|p| p.parse::<Placement>().map_err(|e| usage(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let mode = match &args.mode {
        Some(m) => m.parse::<Mode>().map_err(|e| usage(e.to_string()))?,
        None if placements.iter().any(|p| p.info == sigspread::Info::NegA) => Mode::Relaxed,
        None => Mode::Id,
    };
    let trace = run(&g, &Strategy { mode, placements })?;
    if !trace.is_complete() {
        eprintln!("note: placements leave uninformed vertices; the trace is incomplete");
    }
    match args.format {
        Format::Json => emit(&trace_to_json(&trace))?,
        Format::Dot => emit(&to_dot(&g, Some(trace.final_state())))?,
    }
    Ok(0)
}

fn solve(args: &SolveArgs) -> Result<u8> {
    let g = read_graph(args.input.as_ref())?;
    let budget = args.budget.budget()?;
    let value = if let Some(name) = &args.greedy {
        if args.relaxed {
            return Err(usage("policies build ID strategies; drop --relaxed"));
        }
        let policy: PolicyKind = name.parse().map_err(|e: sigspread::Error| usage(e.to_string()))?;
        let strategy = policy.build(&g)?;
        let trace = run(&g, &strategy)?;
        json!({
            "schema": 1,
            "mode": Mode::Id,
            "policy": policy.name(),
            "confused": trace.confused_count(),
            "complete": trace.is_complete(),
            "witness": strategy.placements,
            "guarantee": policy.guarantee(&g).map(|q| q.to_string()),
        })
    } else if args.min_steps {
        let mode = if args.relaxed { Mode::Relaxed } else { Mode::Id };
        steps_to_value(&min_steps(&g, mode, &budget)?)
    } else {
        let report = if args.via_class {
            relaxed_via_class(&g, &budget)?
        } else if args.relaxed {
            exact_relaxed_confusion(&g, &budget)?
        } else {
            exact_confusion(&g, &budget)?
        };
        if !report.optimal {
            eprintln!(
                "note: budget exhausted; {} is an upper bound ({})",
                report.optimum,
                describe(&report.witness.placements)
            );
        }
        report_to_value(&report)
    };
    emit_json(&value)?;
    Ok(0)
}

fn balance(args: &InputArg) -> Result<u8> {
    let g = read_graph(args.input.as_ref())?;
    let partition = g.is_balanced();
    emit_json(&json!({
        "schema": 1,
        "balanced": partition.is_some(),
        "antibalanced": g.is_antibalanced(),
        "partition": partition,
    }))?;
    Ok(0)
}

fn frustration(args: &FrustrationArgs) -> Result<u8> {
    let g = read_graph(args.input.as_ref())?;
    let f = g.frustration_index(args.max_n)?;
    emit_json(&json!({ "schema": 1, "value": f.value, "witness": f.witness }))?;
    Ok(0)
}

fn equivalent_cmd(args: &EquivalentArgs) -> Result<u8> {
    if args.first.as_os_str() == "-" && args.second.as_os_str() == "-" {
        return Err(usage("at most one of the two graphs can come from stdin"));
    }
    let a = read_graph(Some(&args.first))?;
    let b = read_graph(Some(&args.second))?;
    let witness = equivalent(&a, &b)?;
    emit_json(&json!({ "schema": 1, "equivalent": witness.is_some(), "switch": witness }))?;
    Ok(0)
}

fn switch_cmd(args: &SwitchArgs) -> Result<u8> {
    let g = read_graph(args.input.as_ref())?;
    let x: SwitchSet = args.set.iter().copied().collect();
    emit_graph(&g.switch(&x)?, args.format)?;
    Ok(0)
}

fn verify_cmd(args: &VerifyArgs) -> Result<u8> {
    if args.list {
        emit(&verify::claim_ids().join("\n"))?;
        return Ok(0);
    }
    let mut budget = Budget::default();
    if let Some(secs) = args.budget_secs {
        budget = budget.with_time(seconds(secs)?);
    }
    let params = ClaimParams { n: args.n, t: args.t, seed: args.seed, count: args.count };
    let results = match &args.claim {
        Some(id) => vec![verify::verify_claim(id, &params, &budget).map_err(|e| match e {
            sigspread::Error::UnknownClaim(_) => usage(format!("{e}; see `verify --list`")),
            e => e.into(),
        })?],
        None => {
            if params != ClaimParams::default() {
                return Err(usage("--n, --t, --seed and --count need --claim"));
            }
            verify::run_suite(&budget)
        }
    };
    if args.json {
        emit_json(&serde_json::to_value(&results)?)?;
    } else {
        let mut table = String::new();
        for r in &results {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            let observed = r.observed.map_or("-".to_string(), |o| o.to_string());
            table.push_str(&format!("{status:4}  {:28} observed {observed:>4}  {}\n", r.claim_id, r.statement));
        }
        emit(&table)?;
    }
    let failed: Vec<_> = results.iter().filter(|r| r.status == Status::Fail).collect();
    for r in &failed {
        eprintln!("failed: {}: {}", r.claim_id, r.reason.as_deref().unwrap_or(""));
        eprintln!("  reproduce with: {}", r.repro);
    }
    for r in results.iter().filter(|r| r.status == Status::Skipped) {
        eprintln!("skipped: {}: {}", r.claim_id, r.reason.as_deref().unwrap_or(""));
    }
    Ok(if failed.is_empty() { 0 } else { 3 })
}

fn explore(args: &ExploreArgs) -> Result<u8> {
    let which: Conjecture = args.which.parse().map_err(|e: sigspread::Error| usage(e.to_string()))?;
    let corpus = CorpusSpec {
        family_max_n: args.family_max_n,
        random_count: args.random_count,
        random_max_n: args.random_max_n,
        seed: args.seed,
    };
    let report = verify::explore_conjecture(which, &corpus, &args.budget.budget()?)?;
    emit_json(&json!({ "schema": 1, "report": report }))?;
    if !report.holds() {
        eprintln!(
            "{} violation(s) of {which} among {} checked instances",
            report.violations.len(),
            report.checked
        );
        return Ok(3);
    }
    Ok(0)
}

fn dispatch(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Generate(a) => generate(a),
        Command::Simulate(a) => simulate(a),
        Command::Solve(a) => solve(a),
        Command::Balance(a) => balance(a),
        Command::Frustration(a) => frustration(a),
        Command::Equivalent(a) => equivalent_cmd(a),
        Command::Switch(a) => switch_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::ExploreConjecture(a) => explore(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        // a closed pipe (`| head`) is not an error worth reporting
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<UsageError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
