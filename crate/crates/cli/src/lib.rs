//! The `oricycle` command line: generators, finders, walk constructions and
//! the brute-force oracles, each run producing one JSON document.
//!
//! Exit codes: 0 success, 1 nothing found, 2 usage or input error, 3 search
//! budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use oricycle::constructions::{
    butterfly_gadget, bypass_blowup, complete_bipartite_digraph, extremal_3cycle_vertex,
    random_degree_conditioned, random_min_semidegree, rotational_tournament, BlowupSpec,
};
use oricycle::finders::{
    find_3cycle_through, find_4cycle_through, find_5cycle_through, find_6cycle_through, find_butterfly,
    find_lcycle_through, find_path_345, FallbackOutcome, FinderOptions, FinderTrace,
};
use oricycle::graph::{parse_edge_list, to_dot, write_edge_list};
use oricycle::oracle::{
    contains_pattern, has_cycle_exact, random_split_experiment, threshold_search, SplitExperimentConfig,
    SplitTarget, ThresholdOptions, MAX_ENUMERATION_ORDER,
};
use oricycle::walks::{closed_walk_of_length, cycle_type, embed_walk_greedy, pattern_to_walk, CyclePattern};
use oricycle::{Budget, OrientedGraph, SearchOutcome, VertexSet};

pub const SCHEMA_VERSION: u32 = 1;
pub const JOBS_ENV: &str = "ORICYCLE_JOBS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "oricycle", version, about = "Cycles of given length in oriented graphs")]
pub struct Cli {
    /// Seed for every random choice made by the run.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for parallel searches.
    #[arg(long, global = true, env = JOBS_ENV)]
    pub jobs: Option<usize>,
    /// Also write the JSON document to this file.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Build a graph from one of the construction families.
    Generate(GenerateArgs),
    /// Run a constructive finder through a vertex.
    Find(FindArgs),
    /// Closed walk of a given length.
    Walk(WalkArgs),
    /// Cycle-type, target walk and embedding for an f/b pattern.
    Pattern(PatternArgs),
    /// Exact cycle search.
    Verify(VerifyArgs),
    /// Bounds on the semidegree threshold for an l-cycle.
    SearchThreshold(ThresholdArgs),
    /// Monte-Carlo random half-splits.
    SplitExperiment(SplitArgs),
    /// Graphviz rendering of an edge-list file.
    ExportDot(DotArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Generate(_) => "generate",
            Command::Find(_) => "find",
            Command::Walk(_) => "walk",
            Command::Pattern(_) => "pattern",
            Command::Verify(_) => "verify",
            Command::SearchThreshold(_) => "search-threshold",
            Command::SplitExperiment(_) => "split-experiment",
            Command::ExportDot(_) => "export-dot",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Blowup,
    Bypass,
    Extremal3,
    Rotational,
    Butterfly,
    Bipartite,
    Random,
}

#[derive(Args, Debug, Serialize)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Minimum semidegree for the random family.
    #[arg(long, conflicts_with = "fraction")]
    pub min_semi: Option<usize>,
    /// Minimum semidegree for the random family, as a fraction of n.
    #[arg(long)]
    pub fraction: Option<f64>,
    #[arg(short = 'o', long)]
    pub output: PathBuf,
    /// Also write a DOT rendering here.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum What {
    #[value(name = "3cycle")]
    #[serde(rename = "3cycle")]
    Cycle3,
    #[value(name = "4cycle")]
    #[serde(rename = "4cycle")]
    Cycle4,
    #[value(name = "5cycle")]
    #[serde(rename = "5cycle")]
    Cycle5,
    #[value(name = "6cycle")]
    #[serde(rename = "6cycle")]
    Cycle6,
    Lcycle,
    Path345,
    Butterfly,
}

#[derive(Args, Debug, Serialize)]
pub struct FindArgs {
    #[arg(long, value_enum)]
    pub what: What,
    #[arg(long)]
    pub through: usize,
    /// Endpoint for path345.
    #[arg(long)]
    pub to: Option<usize>,
    /// Cycle length for lcycle.
    #[arg(long)]
    pub length: Option<usize>,
    /// Vertices a path345 interior must avoid.
    #[arg(long, value_delimiter = ',')]
    pub avoid: Vec<usize>,
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Report the constructive procedure only, without the exact search.
    #[arg(long)]
    pub no_fallback: bool,
    /// Node budget for the exact search.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct WalkArgs {
    #[arg(long)]
    pub length: usize,
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Args, Debug, Serialize)]
pub struct PatternArgs {
    /// Pattern over {f, b}, e.g. ffbfb.
    #[arg(long)]
    pub embed: String,
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Also search for the pattern as a cycle on distinct vertices.
    #[arg(long, requires = "input")]
    pub exact: bool,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub length: usize,
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Succeed when there is no such cycle.
    #[arg(long)]
    pub no_cycle: bool,
    #[arg(long)]
    pub through: Option<usize>,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub length: usize,
    #[arg(long)]
    pub n: usize,
    /// Random instances tried per degree.
    #[arg(long, default_value_t = 8)]
    pub samples: u64,
    #[arg(long, default_value_t = 5_000_000)]
    pub budget: u64,
    #[arg(long, default_value_t = 4)]
    pub shard_depth: usize,
    /// Write the cycle-free witness graph here.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct SplitArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// Target `f·u` for the semidegree of each half.
    #[arg(long, conflicts_with = "alpha", required_unless_present = "alpha")]
    pub fraction: Option<f64>,
    /// Target `(3/8 + α − u^(−3/8))·u`.
    #[arg(long)]
    pub alpha: Option<f64>,
}

#[derive(Args, Debug, Serialize)]
pub struct DotArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(short = 'o', long)]
    pub output: PathBuf,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("cannot write {path}: {message}")]
    Output { path: PathBuf, message: String },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    NotFound,
    BudgetExceeded,
}

impl Status {
    fn exit_code(self) -> i32 {
        match self {
            Status::Ok => EXIT_OK,
            Status::NotFound => EXIT_NOT_FOUND,
            Status::BudgetExceeded => EXIT_BUDGET,
        }
    }
}

struct Outcome {
    status: Status,
    result: Value,
}

#[derive(Serialize)]
struct Manifest<'a> {
    subcommand: &'static str,
    parameters: &'a Command,
    seed: u64,
    inputs: Vec<PathBuf>,
    outputs: Vec<PathBuf>,
    tool_version: &'static str,
    wall_time_ms: u64,
}

#[derive(Serialize)]
struct Document<'a> {
    schema_version: u32,
    status: Status,
    manifest: Manifest<'a>,
    result: Value,
}

#[derive(Default)]
struct Io {
    inputs: Vec<PathBuf>,
    outputs: Vec<PathBuf>,
}

impl Io {
    fn read_graph(&mut self, path: &Path) -> Result<OrientedGraph, CliError> {
        let input = |message: String| CliError::Input { path: path.to_path_buf(), message };
        let text = fs::read_to_string(path).map_err(|e| input(e.to_string()))?;
        let g = parse_edge_list(&text).map_err(|e| input(e.to_string()))?;
        self.inputs.push(path.to_path_buf());
        Ok(g)
    }

    fn write(&mut self, path: &Path, contents: &str) -> Result<(), CliError> {
        write_atomic(path, contents.as_bytes())?;
        self.outputs.push(path.to_path_buf());
        Ok(())
    }
}

/// Writes to a temporary file next to `path`, then renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let err = |e: &dyn std::fmt::Display| CliError::Output { path: path.to_path_buf(), message: e.to_string() };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| err(&e))?;
    tmp.write_all(contents).map_err(|e| err(&e))?;
    tmp.as_file().sync_all().map_err(|e| err(&e))?;
    tmp.persist(path).map_err(|e| err(&e.error))?;
    Ok(())
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize to JSON")
}

fn budget_of(nodes: Option<u64>) -> Budget {
    nodes.map_or(Budget::unlimited(), Budget::nodes)
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| usage(format!("--{flag} is required for the {family} family")))
}

fn generate(args: &GenerateArgs, seed: u64, io: &mut Io) -> Result<Outcome, CliError> {
    let build_err = |e: oricycle::constructions::ConstructionError| usage(e.to_string());
    let mut meta = serde_json::Map::new();
    let g = match args.family {
        Family::Blowup => {
            let (k, n) = (need(args.k, "k", "blowup")?, need(args.n, "n", "blowup")?);
            let spec = BlowupSpec::new(k, n).map_err(build_err)?;
            meta.insert("class_sizes".into(), to_value(&spec.class_sizes()));
            spec.build()
        }
        Family::Bypass => {
            let b = bypass_blowup(need(args.n, "n", "bypass")?).map_err(build_err)?;
            meta.insert("class_sizes".into(), to_value(&b.class_sizes));
            meta.insert("u".into(), to_value(&b.bypass));
            b.graph
        }
        Family::Extremal3 => {
            let ex = extremal_3cycle_vertex(need(args.m, "m", "extremal3")?).map_err(build_err)?;
            meta.insert("u".into(), to_value(&ex.u));
            meta.insert("a".into(), json!([ex.a.start, ex.a.end]));
            meta.insert("b".into(), json!([ex.b.start, ex.b.end]));
            meta.insert("c".into(), json!([ex.c.start, ex.c.end]));
            ex.graph
        }
        Family::Rotational => rotational_tournament(need(args.n, "n", "rotational")?).map_err(build_err)?,
        Family::Butterfly => butterfly_gadget(),
        Family::Bipartite => complete_bipartite_digraph(need(args.n, "n", "bipartite")?).map_err(build_err)?,
        Family::Random => {
            let n = need(args.n, "n", "random")?;
            meta.insert("seed".into(), to_value(&seed));
            match (args.min_semi, args.fraction) {
                (Some(d), None) => random_min_semidegree(n, d, seed).map_err(build_err)?,
                (None, Some(f)) => random_degree_conditioned(n, f, seed).map_err(build_err)?,
                _ => return Err(usage("the random family needs exactly one of --min-semi and --fraction")),
            }
        }
    };
    meta.insert("family".into(), to_value(&args.family));
    meta.insert("order".into(), to_value(&g.order()));
    meta.insert("edges".into(), to_value(&g.edge_count()));
    meta.insert("mode".into(), to_value(&g.mode()));
    meta.insert("min_semidegree".into(), to_value(&g.min_semidegree()));
    let mut sidecar = meta.clone();
    sidecar.insert("schema_version".into(), to_value(&SCHEMA_VERSION));

    io.write(&args.output, &write_edge_list(&g))?;
    let mut meta_path = args.output.clone().into_os_string();
    meta_path.push(".meta.json");
    let meta_path = PathBuf::from(meta_path);
    io.write(&meta_path, &(serde_json::to_string_pretty(&sidecar).expect("json") + "\n"))?;
    if let Some(dot) = &args.dot {
        io.write(dot, &to_dot(&g))?;
    }
    meta.insert("graph".into(), to_value(&args.output));
    meta.insert("metadata".into(), to_value(&meta_path));
    Ok(Outcome { status: Status::Ok, result: Value::Object(meta) })
}

fn finder_status(found: bool, trace: &FinderTrace) -> Status {
    if found {
        Status::Ok
    } else if trace.fallback_outcome == Some(FallbackOutcome::BudgetExceeded) {
        Status::BudgetExceeded
    } else {
        Status::NotFound
    }
}

fn find(args: &FindArgs, io: &mut Io) -> Result<Outcome, CliError> {
    let g = io.read_graph(&args.input)?;
    let mut opts = FinderOptions { fallback: !args.no_fallback, ..FinderOptions::default() };
    if let Some(b) = args.budget {
        opts.budget = Budget::nodes(b);
    }
    let x = args.through;
    let finder_err = |e: oricycle::finders::FinderError| usage(e.to_string());
    let (witness, trace) = match args.what {
        What::Path345 => {
            let y = args.to.ok_or_else(|| usage("--to is required for path345"))?;
            let mut avoid = VertexSet::new(g.order());
            for &v in &args.avoid {
                if v >= g.order() {
                    return Err(usage(format!("avoided vertex {v} out of range for {} vertices", g.order())));
                }
                avoid.insert(v);
            }
            let r = find_path_345(&g, x, y, &avoid).map_err(finder_err)?;
            (r.witness.as_ref().map(to_value), r.trace)
        }
        What::Butterfly => {
            let r = find_butterfly(&g, x).map_err(finder_err)?;
            (r.witness.as_ref().map(to_value), r.trace)
        }
        what => {
            let r = match what {
                What::Cycle3 => find_3cycle_through(&g, x, &opts),
                What::Cycle4 => find_4cycle_through(&g, x, &opts),
                What::Cycle5 => find_5cycle_through(&g, x, &opts),
                What::Cycle6 => find_6cycle_through(&g, x, &opts),
                _ => {
                    let ell = args.length.ok_or_else(|| usage("--length is required for lcycle"))?;
                    find_lcycle_through(&g, x, ell, &opts)
                }
            }
            .map_err(finder_err)?;
            (r.witness.as_ref().map(to_value), r.trace)
        }
    };
    let status = finder_status(witness.is_some(), &trace);
    let result = json!({
        "witness": witness,
        "fallback_used": trace.fallback_used,
        "hypothesis_met": trace.hypothesis_met(),
        "trace": trace,
    });
    Ok(Outcome { status, result })
}

fn walk(args: &WalkArgs, io: &mut Io) -> Result<Outcome, CliError> {
    let g = io.read_graph(&args.input)?;
    let w = closed_walk_of_length(&g, args.length).map_err(|e| usage(e.to_string()))?;
    let status = if w.is_some() { Status::Ok } else { Status::NotFound };
    Ok(Outcome { status, result: json!({ "length": args.length, "witness": w }) })
}

fn pattern(args: &PatternArgs, io: &mut Io) -> Result<Outcome, CliError> {
    let p: CyclePattern = args.embed.parse().map_err(|e: oricycle::walks::WalkError| usage(e.to_string()))?;
    let shape = pattern_to_walk(&p);
    let mut result = json!({
        "pattern": p,
        "cycle_type": cycle_type(&p),
        "shape": shape,
    });
    let mut status = Status::Ok;
    if let Some(input) = &args.input {
        let g = io.read_graph(input)?;
        match embed_walk_greedy(&g, &shape) {
            Ok(map) => result["embedding"] = to_value(&map),
            Err(e) => {
                result["embedding"] = Value::Null;
                result["embed_error"] = to_value(&e.to_string());
                status = Status::NotFound;
            }
        }
        if args.exact {
            let out = contains_pattern(&g, &p, budget_of(args.budget));
            status = match &out {
                SearchOutcome::Found(_) => Status::Ok,
                SearchOutcome::Absent => Status::NotFound,
                SearchOutcome::BudgetExceeded => Status::BudgetExceeded,
            };
            result["exact"] = to_value(&out);
        }
    }
    Ok(Outcome { status, result })
}

fn outcome_word<T>(out: &SearchOutcome<T>) -> &'static str {
    match out {
        SearchOutcome::Found(_) => "found",
        SearchOutcome::Absent => "absent",
        SearchOutcome::BudgetExceeded => "budget-exceeded",
    }
}

fn verify(args: &VerifyArgs, seed: u64, io: &mut Io) -> Result<Outcome, CliError> {
    let g = io.read_graph(&args.input)?;
    if let Some(t) = args.through {
        if t >= g.order() {
            return Err(usage(format!("vertex {t} out of range for {} vertices", g.order())));
        }
    }
    let out = has_cycle_exact(&g, args.length, args.through, budget_of(args.budget))
        .map_err(|e| usage(e.to_string()))?;
    let status = match (&out, args.no_cycle) {
        (SearchOutcome::BudgetExceeded, _) => Status::BudgetExceeded,
        (SearchOutcome::Found(_), false) | (SearchOutcome::Absent, true) => Status::Ok,
        _ => Status::NotFound,
    };
    let exhaustive = !matches!(out, SearchOutcome::BudgetExceeded);
    let result = json!({
        "query": {
            "length": args.length,
            "through": args.through,
            "expect": if args.no_cycle { "no-cycle" } else { "cycle" },
        },
        "result": outcome_word(&out),
        "exhaustive": exhaustive,
        "witness": out.found(),
        "shards": 1,
        "seed": seed,
    });
    Ok(Outcome { status, result })
}

fn search_threshold(args: &ThresholdArgs, seed: u64, io: &mut Io) -> Result<Outcome, CliError> {
    let opts = ThresholdOptions {
        budget: Budget::nodes(args.budget),
        samples: args.samples,
        seed,
        shard_depth: args.shard_depth,
    };
    let record = threshold_search(args.length, args.n, &opts).map_err(|e| usage(e.to_string()))?;
    let mut witness = Value::Null;
    if let (Some(path), Some(g)) = (&args.witness_out, &record.lower_witness) {
        io.write(path, &write_edge_list(g))?;
        witness = to_value(path);
    }
    let status = if args.n <= MAX_ENUMERATION_ORDER && !record.exhaustive {
        Status::BudgetExceeded
    } else {
        Status::Ok
    };
    let result = json!({
        "query": { "length": args.length, "n": args.n },
        "result": record,
        "exhaustive": record.exhaustive,
        "witness": witness,
        "shards": record.shards,
        "seed": seed,
    });
    Ok(Outcome { status, result })
}

fn split_experiment(args: &SplitArgs, seed: u64, io: &mut Io) -> Result<Outcome, CliError> {
    let g = io.read_graph(&args.input)?;
    let target = match (args.fraction, args.alpha) {
        (Some(f), None) => SplitTarget::Fraction { f },
        (None, Some(alpha)) => SplitTarget::Alpha { alpha },
        _ => return Err(usage("give exactly one of --fraction and --alpha")),
    };
    let cfg = SplitExperimentConfig { trials: args.trials, target };
    let report = random_split_experiment(&g, &cfg, seed).map_err(|e| usage(e.to_string()))?;
    Ok(Outcome { status: Status::Ok, result: json!({ "config": cfg, "report": report }) })
}

fn export_dot(args: &DotArgs, io: &mut Io) -> Result<Outcome, CliError> {
    let g = io.read_graph(&args.input)?;
    io.write(&args.output, &to_dot(&g))?;
    Ok(Outcome { status: Status::Ok, result: json!({ "dot": args.output, "order": g.order(), "edges": g.edge_count() }) })
}

fn execute(cli: &Cli, io: &mut Io) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Generate(a) => generate(a, cli.seed, io),
        Command::Find(a) => find(a, io),
        Command::Walk(a) => walk(a, io),
        Command::Pattern(a) => pattern(a, io),
        Command::Verify(a) => verify(a, cli.seed, io),
        Command::SearchThreshold(a) => search_threshold(a, cli.seed, io),
        Command::SplitExperiment(a) => split_experiment(a, cli.seed, io),
        Command::ExportDot(a) => export_dot(a, io),
    }
}

fn run_parsed(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let start = Instant::now();
    let mut io = Io::default();
    let outcome = match cli.jobs {
        Some(0) => return Err(usage("--jobs must be at least 1")),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| usage(e.to_string()))?
            .install(|| execute(cli, &mut io))?,
        None => execute(cli, &mut io)?,
    };
    if let Some(report) = &cli.report {
        io.outputs.push(report.clone());
    }
    let doc = Document {
        schema_version: SCHEMA_VERSION,
        status: outcome.status,
        manifest: Manifest {
            subcommand: cli.command.name(),
            parameters: &cli.command,
            seed: cli.seed,
            inputs: io.inputs,
            outputs: io.outputs,
            tool_version: env!("CARGO_PKG_VERSION"),
            wall_time_ms: start.elapsed().as_millis() as u64,
        },
        result: outcome.result,
    };
    let text = serde_json::to_string_pretty(&doc).expect("json") + "\n";
    if let Some(report) = &cli.report {
        write_atomic(report, text.as_bytes())?;
    }
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Output { path: PathBuf::from("<stdout>"), message: e.to_string() })?;
    Ok(outcome.status.exit_code())
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match run_parsed(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_write_replaces_contents() {
        let dir = tempfile::TempDir::new().unwrap();
        let p = dir.path().join("a.txt");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn status_codes() {
        assert_eq!(Status::Ok.exit_code(), 0);
        assert_eq!(Status::NotFound.exit_code(), 1);
        assert_eq!(Status::BudgetExceeded.exit_code(), 3);
        assert_eq!(serde_json::to_value(Status::BudgetExceeded).unwrap(), "budget-exceeded");
    }

    #[test]
    fn command_names_match_clap() {
        let cli = Cli::try_parse_from(["oricycle", "search-threshold", "--length", "3", "--n", "4"]).unwrap();
        assert_eq!(cli.command.name(), "search-threshold");
        assert_eq!(cli.seed, 0);
    }
}
