//! Command-line front end. [`run`] parses the process arguments; [`run_from`]
//! takes them explicitly so tests can drive it in-process.

use crate::error::{Error, Result};
use crate::graph::{build_named, parse_edge_list, parse_graph6, Edge, Graph, NamedFamily, VertexSet};
use crate::homology::{betti_numbers, Field};
use crate::invariants::{
    chromatic_number, clique_number, cochordal_cover_number, decycling_number, gallai_graph, girth,
    independence_number, induced_matching_number, is_chordal, is_cochordal, is_perfect, is_vertex_decomposable,
    maximum_clique, maximum_independent_set, maximum_induced_matching, optimal_coloring,
};
use crate::regularity::{regularity, regularity_bounds, Cache, RegStrategy, Strategy};
use crate::transforms::{default_lozinize_budget, lozin_transform, lozinize, triple_subdivision, whisker, LozinSpec};
use crate::verify::{
    all_graphs, canonical_form, parse_theorem_list, read_corpus, run_suite, write_corpus, Caps, Checker, GeneratorSpec,
    Summary, Verdict, MAX_CORPUS_N,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

const GRAPH_HELP: &str = "Graph input: a graph6 string, a file holding graph6 or an edge list \
(`n m` header then `u v` lines), `-` for graph6 on stdin, or `named:SPEC` where SPEC is \
Cn (cycle), Pn (path), Kn or Kn:n (complete), En (edgeless), Hn, Rn or 2K2";

#[derive(Parser, Debug)]
#[command(name = "reglab", version, about = "Exact regularity of edge ideals of graphs")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute invariants of one graph.
    Compute {
        #[arg(long, help = GRAPH_HELP)]
        graph: String,
        /// Comma-separated: reg, im, alpha, omega, chi, cochord, decycling, betti,
        /// bounds, girth, chordal, cochordal, vd, gstar, all.
        #[arg(long, default_value = "reg")]
        invariants: String,
        #[arg(long, default_value_t = 2)]
        field: u32,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
        /// Subset-search cap for the regularity engine.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Apply one rewrite to a graph.
    Transform {
        #[arg(long, help = GRAPH_HELP)]
        graph: String,
        #[arg(long, value_enum)]
        op: Op,
        /// Lozin: the vertex to replace.
        #[arg(long)]
        x: Option<usize>,
        /// Lozin: the neighbors of x joined to the new vertex y (comma list, may be empty).
        #[arg(long = "Y", value_name = "LIST", allow_hyphen_values = true)]
        y_side: Option<String>,
        /// Subdivide: the edge as `u,v`.
        #[arg(long)]
        edge: Option<String>,
        /// Whisker: the vertices to whisker; all vertices when omitted.
        #[arg(long = "S", value_name = "LIST")]
        s: Option<String>,
        /// Lozinize: class index.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Lozinize: step budget; defaults to 10·|E|·(3m+3).
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::G6)]
        emit: Emit,
    },
    /// Check theorems on generated graphs. Exits 1 if any instance fails.
    Verify {
        /// `all` or a comma-separated list of theorem tags.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Generator: er:N,P[,seed=S][,count=K] | chordal:N | unicyclic:N |
        /// named:C8..16 | all:0..5 | corpus:PATH. N may be a range A..B.
        #[arg(long, default_value = "all:0..5")]
        gen: String,
        /// Engine limits, e.g. `exhaustive_max_n=12,pruned_cap=18,field=2`.
        #[arg(long)]
        caps: Option<String>,
        /// Write JSON-lines reports here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Seed for partition sampling. Generator seeds are part of --gen.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build and inspect graph6 corpora of isomorphism classes.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Inspect the invariant cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    /// Write graphs{n}.g6 for every n up to --max-n.
    Generate {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
    },
    /// Count graphs per vertex count in a graph6 file.
    Count { path: PathBuf },
    /// Print the canonical graph6 form of a graph.
    Canonical {
        #[arg(long, help = GRAPH_HELP)]
        graph: String,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    /// Number of entries and malformed lines.
    Stats {
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print every entry.
    Dump {
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Pruned,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    Lozin,
    Subdivide,
    Whisker,
    Lozinize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    G6,
    ReceiptJson,
}

/// Parses the process arguments and runs; returns the exit code.
pub fn run() -> i32 {
    run_from(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stdin().lock(),
    )
}

pub fn run_from<I, T>(args: I, out: &mut dyn Write, input: &mut dyn Read) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, cli.jobs, out, input) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) | Error::BudgetExceeded { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Worker pool for the parallel engines; the CLI itself stays on one thread.
fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))
}

fn dispatch(command: Command, jobs: Option<usize>, out: &mut dyn Write, input: &mut dyn Read) -> Result<i32> {
    match command {
        Command::Compute {
            graph,
            invariants,
            field,
            strategy,
            cap,
            json,
            cache,
        } => {
            let g = load_graph(&graph, input)?;
            let field = Field::new(field)?;
            let mut strat = match strategy {
                StrategyArg::Exhaustive => RegStrategy::exhaustive(),
                StrategyArg::Pruned => RegStrategy::pruned(),
            }
            .with_field(field);
            if let Some(c) = cap {
                strat = strat.with_cap(c);
            }
            let cache = open_cache(cache.as_deref())?;
            pool(jobs)?
                .install(|| compute(&g, &invariants, strat, cache.as_ref(), json))?
                .emit(out)
        }
        Command::Transform {
            graph,
            op,
            x,
            y_side,
            edge,
            s,
            m,
            budget,
            emit,
        } => {
            let g = load_graph(&graph, input)?;
            let value = match op {
                Op::Lozin => {
                    let x = x.ok_or_else(|| usage("lozin needs --x"))?;
                    let y = parse_list(y_side.as_deref().unwrap_or(""))?;
                    let (h, receipt) = lozin_transform(&g, &LozinSpec::from_y_side(&g, x, y.into_iter().collect())?)?;
                    (h, serde_json::to_value(receipt).expect("receipt serializes"))
                }
                Op::Subdivide => {
                    let e = parse_edge(edge.as_deref().ok_or_else(|| usage("subdivide needs --edge u,v"))?)?;
                    let (h, receipt) = triple_subdivision(&g, e)?;
                    (h, serde_json::to_value(receipt).expect("receipt serializes"))
                }
                Op::Whisker => {
                    let set: VertexSet = match s {
                        Some(list) => parse_list(&list)?.into_iter().collect(),
                        None => g.vertices(),
                    };
                    let (h, receipt) = whisker(&g, &set)?;
                    (h, serde_json::to_value(receipt).expect("receipt serializes"))
                }
                Op::Lozinize => {
                    let budget = budget.unwrap_or_else(|| default_lozinize_budget(&g, m));
                    let result = lozinize(&g, m, budget)?;
                    let v = serde_json::to_value(&result).expect("result serializes");
                    (result.graph, v)
                }
            };
            match emit {
                Emit::G6 => writeln!(out, "{}", value.0.to_graph6())?,
                Emit::ReceiptJson => writeln!(out, "{}", value.1)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            gen,
            caps,
            out: path,
            cache,
            seed,
            json,
        } => {
            let theorems = parse_theorem_list(&suite)?;
            let spec: GeneratorSpec = gen.parse()?;
            let caps = parse_caps(caps.as_deref())?;
            let cache = Arc::new(open_cache(cache.as_deref())?.unwrap_or_else(Cache::in_memory));
            let checker = Checker::new(caps, cache);
            let reports = pool(jobs)?.install(|| run_suite(&spec, &theorems, &checker, seed))?;
            if let Some(path) = path {
                let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
                for r in &reports {
                    writeln!(f, "{}", serde_json::to_string(r).expect("report serializes"))?;
                }
                f.flush()?;
            }
            let summary = Summary::of(&reports);
            if json {
                writeln!(out, "{}", serde_json::to_string(&summary).expect("summary serializes"))?;
            } else {
                print_summary(&summary, out)?;
                for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
                    writeln!(
                        out,
                        "FAIL {} {}",
                        r.theorem,
                        serde_json::to_string(&r.instance).expect("serializes")
                    )?;
                }
            }
            Ok(if summary.has_failures() { EXIT_FAIL } else { EXIT_OK })
        }
        Command::Corpus { action } => corpus(action, jobs, out, input),
        Command::Cache { action } => {
            let path = match &action {
                CacheAction::Stats { cache } | CacheAction::Dump { cache } => cache.clone(),
            };
            let (cache, problems) = Cache::from_flag_or_env(path.as_deref())?
                .ok_or_else(|| usage("no cache: pass --cache or set REGLAB_CACHE"))?;
            match action {
                CacheAction::Stats { .. } => {
                    writeln!(out, "entries\t{}", cache.len())?;
                    writeln!(out, "malformed\t{}", problems.len())?;
                    for p in problems {
                        eprintln!("warning: {p}");
                    }
                }
                CacheAction::Dump { .. } => {
                    for e in cache.entries() {
                        write!(out, "{}", e.line())?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn corpus(action: CorpusAction, jobs: Option<usize>, out: &mut dyn Write, input: &mut dyn Read) -> Result<i32> {
    match action {
        CorpusAction::Generate { max_n, dir } => {
            if max_n > MAX_CORPUS_N {
                return Err(Error::ResourceLimit(format!(
                    "corpus size {max_n} exceeds {MAX_CORPUS_N}"
                )));
            }
            std::fs::create_dir_all(&dir)?;
            for n in 0..=max_n {
                let graphs = pool(jobs)?.install(|| all_graphs(n))?;
                write_corpus(&graphs, dir.join(format!("graphs{n}.g6")))?;
                writeln!(out, "graphs{n}.g6\t{}", graphs.len())?;
            }
        }
        CorpusAction::Count { path } => {
            let mut counts = std::collections::BTreeMap::new();
            let mut bad = 0;
            for g in read_corpus(&path)? {
                match g {
                    Ok(g) => *counts.entry(g.n()).or_insert(0usize) += 1,
                    Err(e) => {
                        bad += 1;
                        eprintln!("warning: {e}");
                    }
                }
            }
            for (n, c) in counts {
                writeln!(out, "{n}\t{c}")?;
            }
            if bad > 0 {
                writeln!(out, "malformed\t{bad}")?;
            }
        }
        CorpusAction::Canonical { graph } => {
            let g = load_graph(&graph, input)?;
            writeln!(out, "{}", canonical_form(&g)?.to_graph6())?;
        }
    }
    Ok(EXIT_OK)
}

fn usage(msg: &str) -> Error {
    Error::InvalidParameter(msg.to_string())
}

fn open_cache(flag: Option<&Path>) -> Result<Option<Cache>> {
    Ok(Cache::from_flag_or_env(flag)?.map(|(cache, problems)| {
        for p in problems {
            eprintln!("warning: skipping cache line: {p}");
        }
        cache
    }))
}

/// Reads `--graph`: `named:SPEC`, `-`, an existing file, or graph6 text.
pub fn load_graph(spec: &str, input: &mut dyn Read) -> Result<Graph> {
    if let Some(name) = spec.strip_prefix("named:") {
        return build_named(name.parse::<NamedFamily>()?);
    }
    if spec == "-" {
        let mut text = String::new();
        input.read_to_string(&mut text)?;
        return parse_graph6(first_line(&text).as_bytes());
    }
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return match parse_graph6(first_line(&text).as_bytes()) {
            Ok(g) => Ok(g),
            Err(g6_err) => parse_edge_list(&text).map_err(|_| g6_err),
        };
    }
    parse_graph6(spec.trim().as_bytes())
}

fn first_line(text: &str) -> &str {
    text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("")
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(&format!("bad vertex {t:?}"))))
        .collect()
}

fn parse_edge(s: &str) -> Result<Edge> {
    match parse_list(s)?[..] {
        [u, v] => Edge::new(u, v),
        _ => Err(usage(&format!("edge must be `u,v`, got {s:?}"))),
    }
}

fn parse_caps(s: Option<&str>) -> Result<Caps> {
    let mut caps = Caps::default();
    for item in s.unwrap_or("").split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| usage(&format!("cap {item:?} is not key=value")))?;
        let n: usize = value
            .parse()
            .map_err(|_| usage(&format!("cap value {value:?} is not a number")))?;
        match key {
            "exhaustive_max_n" => caps.exhaustive_max_n = n,
            "pruned_cap" => caps.pruned_cap = n,
            "field" => caps.field = Field::new(n as u32)?,
            _ => return Err(usage(&format!("unknown cap {key:?}"))),
        }
    }
    Ok(caps)
}

fn print_summary(s: &Summary, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "{:<20} {:>7} {:>7} {:>7}", "theorem", "pass", "fail", "skip")?;
    for (t, c) in &s.by_theorem {
        writeln!(out, "{:<20} {:>7} {:>7} {:>7}", t.tag(), c.pass, c.fail, c.skipped)?;
    }
    writeln!(
        out,
        "{:<20} {:>7} {:>7} {:>7}",
        "total", s.total.pass, s.total.fail, s.total.skipped
    )?;
    for (t, k) in &s.non_vacuous {
        writeln!(out, "non-vacuous {}: {k}", t.tag())?;
    }
    Ok(())
}

fn set_json(s: &VertexSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

struct Printed(String);

impl Printed {
    fn emit(self, out: &mut dyn Write) -> Result<i32> {
        writeln!(out, "{}", self.0)?;
        Ok(EXIT_OK)
    }
}

fn compute(g: &Graph, list: &str, strategy: RegStrategy, cache: Option<&Cache>, as_json: bool) -> Result<Printed> {
    const ALL: &[&str] = &[
        "reg",
        "im",
        "alpha",
        "omega",
        "chi",
        "cochord",
        "decycling",
        "betti",
        "bounds",
        "girth",
        "chordal",
        "cochordal",
        "vd",
        "gstar",
    ];
    let names: Vec<&str> = list.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    let names: Vec<&str> = if names == ["all"] { ALL.to_vec() } else { names };
    if let Some(bad) = names.iter().find(|n| !ALL.contains(n)) {
        return Err(usage(&format!("unknown invariant {bad:?}")));
    }
    let mut values = Map::new();
    let mut witnesses = Map::new();
    for &name in &names {
        let value = match name {
            "reg" => {
                let cached = cache
                    .and_then(|c| c.lookup(&g.to_graph6(), strategy.field, "reg"))
                    .and_then(|v| v.parse::<usize>().ok());
                match cached {
                    Some(v) => json!(v),
                    None => {
                        let r = regularity(g, strategy)?;
                        if let Some(c) = cache {
                            crate::regularity::cached_regularity(g, strategy, c)?;
                        }
                        if let Some(w) = &r.witness {
                            witnesses.insert("reg".into(), json!({"subset": set_json(&w.subset), "j": w.j}));
                        }
                        json!(r.value)
                    }
                }
            }
            "im" => {
                let m = maximum_induced_matching(g)?;
                witnesses.insert("im".into(), json!(m.iter().map(|e| [e.u, e.v]).collect::<Vec<_>>()));
                json!(induced_matching_number(g)?)
            }
            "alpha" => {
                witnesses.insert("alpha".into(), set_json(&maximum_independent_set(g)?));
                json!(independence_number(g)?)
            }
            "omega" => {
                witnesses.insert("omega".into(), set_json(&maximum_clique(g)?));
                json!(clique_number(g)?)
            }
            "chi" => {
                witnesses.insert("chi".into(), json!(optimal_coloring(g)?));
                json!(chromatic_number(g)?)
            }
            "cochord" => json!(cochordal_cover_number(g)?),
            "decycling" => {
                let (k, set) = decycling_number(g)?;
                witnesses.insert("decycling".into(), set_json(&set));
                json!(k)
            }
            "betti" => json!(betti_numbers(g, strategy.field)?.as_slice()),
            "bounds" => {
                let b = regularity_bounds(g)?;
                json!([b.lower, b.upper])
            }
            "girth" => json!(girth(g)),
            "chordal" => json!(is_chordal(g)),
            "cochordal" => json!(is_cochordal(g)),
            "vd" => json!(is_vertex_decomposable(g)?),
            "gstar" => {
                if g.is_edgeless() {
                    Value::Null
                } else {
                    let star = gallai_graph(g)?.star;
                    json!({
                        "graph6": star.to_graph6(),
                        "omega": clique_number(&star)?,
                        "chi": chromatic_number(&star)?,
                        "perfect": is_perfect(&star).ok(),
                    })
                }
            }
            _ => unreachable!("checked above"),
        };
        values.insert(name.to_string(), value);
    }
    if as_json {
        let mut obj = values;
        obj.insert("graph6".into(), json!(g.to_graph6()));
        obj.insert("field".into(), json!(strategy.field.p()));
        obj.insert(
            "strategy".into(),
            json!(match strategy.mode {
                Strategy::Exhaustive => "exhaustive",
                Strategy::Pruned => "pruned",
            }),
        );
        obj.insert("witnesses".into(), Value::Object(witnesses));
        Ok(Printed(Value::Object(obj).to_string()))
    } else {
        let parts: Vec<String> = values.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        let ordered: Vec<String> = names
            .iter()
            .filter_map(|n| parts.iter().find(|p| p.starts_with(&format!("{n}="))).cloned())
            .collect();
        Ok(Printed(ordered.join(" ")))
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(","),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}
