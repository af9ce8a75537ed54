//! Command-line front end: reads a graph, runs one analysis, prints the
//! result as text, JSON or DOT.
//!
//! Exit status: 0 for a positive answer or success, 1 for a negative
//! certificate (not chordal, not proper interval, a failed verification),
//! 2 for usage, input and parse errors.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chordal::clique_tree::{build_clique_tree, reduced_clique_graph, verify_clique_tree, CliqueTree, CliqueTreeDoc};
use chordal::generate::{random_chordal, random_chordal_with_edges};
use chordal::io::{graph_to_dot, parse_graph, write_edge_list, GraphDoc};
use chordal::minmax::{
    containment_elimination_scheme, has_minmin_pending_tree, minmax_simplicial_vertices, pending_minmax_tree,
    search_counterexamples, separator_poset, CounterexampleKind, SearchReport,
};
use chordal::oracle::{
    brute_has_reversible_ordering, brute_is_chordal, brute_maximal_cliques, brute_minimal_separators,
    extremal_separators, has_minmin_pending_by_enumeration, minmax_simplicial_by_enumeration, CorpusSpec, Filters,
    MaxSpanningTrees, SeparatorMode, ORDERING_LIMIT, SUBSET_MODE_LIMIT,
};
use chordal::reversible::{find_reversible_ordering, ReversibilityCertificate};
use chordal::search::{is_chordal, is_simplicial_elimination_scheme, lexbfs, ChordalityCertificate, SchemeCheck};
use chordal::{Error, Graph, VertexOrdering, VertexSet};

/// Seed used by randomized subcommands when none is given.
const DEFAULT_SEED: u64 = 42;
/// Largest graph accepted by `verify` without a certificate.
const VERIFY_LIMIT: usize = 16;

#[derive(Parser)]
#[command(name = "chordal", version, about = "Structural analysis of chordal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Input {
    /// Graph file: an edge list (two labels per line) or DIMACS `p edge`.
    /// Reads standard input when omitted or `-`.
    input: Option<PathBuf>,
    #[arg(long, short, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Chordality with a certificate: an elimination scheme or a hole.
    Check(Input),
    /// Reversed LexBFS order, checked as an elimination scheme.
    Peo {
        #[command(flatten)]
        input: Input,
        /// Start vertex, by label or id. Defaults to the first vertex.
        #[arg(long)]
        start: Option<String>,
    },
    /// A maximal clique tree.
    CliqueTree(Input),
    /// The reduced clique graph.
    Rcg(Input),
    /// A clique tree with a pending edge labeled by a min-max separator.
    MinmaxTree(Input),
    /// Elimination scheme following the separator containment order.
    Scheme(Input),
    /// A reversible ordering or a claw, net, 3-sun or hole.
    Reversible(Input),
    /// Minimal separators with multiplicities and containment.
    Separators(Input),
    /// Scans a corpus for counterexamples.
    Search(SearchArgs),
    /// Random connected chordal graph.
    Gen(GenArgs),
    /// Cross-checks the library against brute force, or re-verifies a JSON
    /// result produced by another subcommand.
    Verify {
        #[command(flatten)]
        input: Input,
        /// JSON output of `check`, `peo`, `clique-tree`, `minmax-tree`,
        /// `scheme` or `reversible` for the same graph.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Times the pending min-max tree on growing random chordal graphs.
    Bench(BenchArgs),
    /// Splits a graph into connected components.
    Components(Input),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    NoMinmaxTerminal,
    NoMinminPending,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    /// Every connected chordal labeled graph.
    Exhaustive,
    /// Connected chordal graphs up to relabeling.
    Classes,
    /// Seeded random connected chordal graphs.
    Random,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = Mode::Classes)]
    mode: Mode,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    /// Number of graphs in random mode.
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, short, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    /// Number of vertices.
    #[arg(long, short, conflicts_with = "edges", required_unless_present = "edges")]
    n: Option<usize>,
    /// Approximate number of edges, instead of a vertex count.
    #[arg(long)]
    edges: Option<usize>,
    /// Chance of keeping each member of the attachment clique.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, short, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Target edge counts.
    #[arg(long, value_delimiter = ',', default_values_t = [10_000usize, 100_000, 1_000_000])]
    edges: Vec<usize>,
    #[arg(long, default_value_t = 0.9)]
    density: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Runs per size; the fastest counts.
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(long, short, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Library(Error::Io(e))
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Library(Error::Disconnected) => {
                f.write_str("graph is disconnected; split it with `chordal components` first")
            }
            Failure::Library(e) => write!(f, "{e}"),
        }
    }
}

/// Rendered output and whether the answer was positive.
struct Report {
    text: String,
    positive: bool,
}

impl Report {
    fn new(text: String, positive: bool) -> Self {
        Report { text, positive }
    }
}

type Run = Result<Report, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(r) => {
            print!("{}", r.text);
            if !r.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(if r.positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("chordal: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Run {
    match command {
        Command::Check(i) => check(&read(&i)?, i.format),
        Command::Peo { input, start } => peo(&read(&input)?, input.format, start.as_deref()),
        Command::CliqueTree(i) => clique_tree(&read(&i)?, i.format),
        Command::Rcg(i) => rcg(&read(&i)?, i.format),
        Command::MinmaxTree(i) => minmax_tree(&read(&i)?, i.format),
        Command::Scheme(i) => scheme(&read(&i)?, i.format),
        Command::Reversible(i) => reversible(&read(&i)?, i.format),
        Command::Separators(i) => separators(&read(&i)?, i.format),
        Command::Search(a) => search(&a),
        Command::Gen(a) => gen(&a),
        Command::Verify { input, certificate } => match certificate {
            Some(path) => verify_certificate(&read(&input)?, &path),
            None => verify(&read(&input)?, input.format),
        },
        Command::Bench(a) => bench(&a),
        Command::Components(i) => components(&read(&i)?, i.format),
    }
}

fn read(input: &Input) -> Result<Graph, Failure> {
    let text = match input.input.as_deref() {
        None => read_stdin()?,
        Some(p) if p.as_os_str() == "-" => read_stdin()?,
        Some(p) => {
            std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?
        }
    };
    Ok(parse_graph(&text)?)
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn allow(format: Format, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(
            format!("format {format:?} is not available for `{command}`").to_lowercase(),
        ))
    }
}

fn labels(g: &Graph) -> Vec<String> {
    g.vertices().map(|v| g.label(v).into_owned()).collect()
}

fn names(g: &Graph, vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| g.label(v).into_owned())
        .collect::<Vec<_>>()
        .join(" ")
}

fn set_names(g: &Graph, s: &VertexSet) -> String {
    format!(
        "{{{}}}",
        s.iter().map(|v| g.label(v).into_owned()).collect::<Vec<_>>().join(",")
    )
}

/// JSON document with the command name, its payload and the label table.
fn envelope(g: &Graph, command: &str, payload: Value) -> String {
    let mut doc = json!({ "command": command });
    if let Value::Object(fields) = payload {
        doc.as_object_mut().expect("object").extend(fields);
    }
    doc["vertex_labels"] = json!(labels(g));
    let mut s = serde_json::to_string_pretty(&doc).expect("plain values");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

/// The chordality answer as a report, used by every command that needs a
/// chordal graph when the input has a hole.
fn hole_report(g: &Graph, command: &str, format: Format, hole: &[usize]) -> Report {
    let text = match format {
        Format::Json => envelope(
            g,
            command,
            json!({ "chordal": false, "certificate": { "kind": "hole", "vertices": hole } }),
        ),
        _ => format!("not chordal: hole {}\n", names(g, hole.iter().copied())),
    };
    Report::new(text, false)
}

/// Runs `f` on a chordal graph; a hole becomes a negative report.
fn with_chordal(g: &Graph, command: &str, format: Format, f: impl FnOnce() -> Run) -> Run {
    match is_chordal(g)? {
        ChordalityCertificate::Hole(h) => Ok(hole_report(g, command, format, &h)),
        ChordalityCertificate::Scheme(_) => f(),
    }
}

fn check(g: &Graph, format: Format) -> Run {
    allow(format, &[Format::Text, Format::Json], "check")?;
    match is_chordal(g)? {
        ChordalityCertificate::Hole(h) => Ok(hole_report(g, "check", format, &h)),
        cert @ ChordalityCertificate::Scheme(_) => {
            let ChordalityCertificate::Scheme(order) = &cert else {
                unreachable!()
            };
            let text = match format {
                Format::Json => envelope(g, "check", json!({ "chordal": true, "certificate": to_value(&cert) })),
                _ => format!(
                    "chordal: elimination scheme {}\n",
                    names(g, order.as_slice().iter().copied())
                ),
            };
            Ok(Report::new(text, true))
        }
    }
}

fn resolve(g: &Graph, name: &str) -> Result<usize, Failure> {
    g.vertex_by_label(name)
        .or_else(|| name.parse::<usize>().ok().filter(|&v| v < g.vertex_count()))
        .ok_or_else(|| Failure::Usage(format!("unknown vertex {name:?}")))
}

fn peo(g: &Graph, format: Format, start: Option<&str>) -> Run {
    allow(format, &[Format::Text, Format::Json], "peo")?;
    let start = start.map(|s| resolve(g, s)).transpose()?.unwrap_or(0);
    let order = lexbfs(g, start)?.reversed();
    let check = is_simplicial_elimination_scheme(g, &order)?;
    let violation = match check {
        SchemeCheck::Valid => None,
        SchemeCheck::Violation(v) => Some(v),
    };
    let text = match format {
        Format::Json => envelope(
            g,
            "peo",
            json!({ "ordering": to_value(&order), "valid": violation.is_none(), "violation": to_value(&violation) }),
        ),
        _ => {
            let mut s = format!("{}\n", names(g, order.as_slice().iter().copied()));
            if let Some(v) = violation {
                let _ = writeln!(
                    s,
                    "not an elimination scheme: {} has non-adjacent later neighbors {} and {}",
                    g.label(v.vertex),
                    g.label(v.pair.0),
                    g.label(v.pair.1)
                );
            }
            s
        }
    };
    Ok(Report::new(text, violation.is_none()))
}

fn tree_text(g: &Graph, t: &CliqueTree, highlight: Option<usize>) -> String {
    let mut s = String::new();
    for (i, c) in t.nodes().iter().enumerate() {
        let _ = writeln!(s, "clique {i}: {}", set_names(g, c));
    }
    for (i, e) in t.edges().iter().enumerate() {
        let mark = if Some(i) == highlight { "  (pending)" } else { "" };
        let _ = writeln!(s, "edge {}-{}: {}{mark}", e.a, e.b, set_names(g, &e.label));
    }
    s
}

fn clique_tree(g: &Graph, format: Format) -> Run {
    with_chordal(g, "clique-tree", format, || {
        let t = build_clique_tree(g)?;
        let text = match format {
            Format::Json => envelope(g, "clique-tree", json!({ "tree": to_value(&CliqueTreeDoc::from(t)) })),
            Format::Dot => t.to_dot(g, None),
            Format::Text => tree_text(g, &t, None),
        };
        Ok(Report::new(text, true))
    })
}

fn rcg(g: &Graph, format: Format) -> Run {
    with_chordal(g, "rcg", format, || {
        let r = reduced_clique_graph(g)?;
        let text = match format {
            Format::Json => {
                let edges: Vec<[usize; 2]> = r.edges().iter().map(|e| [e.a, e.b]).collect();
                let labels: Vec<&VertexSet> = r.edges().iter().map(|e| &e.label).collect();
                envelope(
                    g,
                    "rcg",
                    json!({ "nodes": r.nodes(), "edges": edges, "labels": labels }),
                )
            }
            Format::Dot => r.to_dot(g),
            Format::Text => {
                let mut s = String::new();
                for (i, c) in r.nodes().iter().enumerate() {
                    let _ = writeln!(s, "clique {i}: {}", set_names(g, c));
                }
                for e in r.edges() {
                    let _ = writeln!(s, "edge {}-{}: {}", e.a, e.b, set_names(g, &e.label));
                }
                s
            }
        };
        Ok(Report::new(text, true))
    })
}

fn minmax_tree(g: &Graph, format: Format) -> Run {
    with_chordal(g, "minmax-tree", format, || {
        let r = match pending_minmax_tree(g) {
            Err(Error::NoSeparators) => {
                let text = match format {
                    Format::Json => envelope(
                        g,
                        "minmax-tree",
                        json!({ "pending": null, "reason": "single maximal clique" }),
                    ),
                    _ => "no separators: the graph is a single clique\n".to_string(),
                };
                return Ok(Report::new(text, false));
            }
            other => other?,
        };
        let text = match format {
            Format::Json => {
                let mut v = to_value(&r);
                v["tree"] = to_value(&CliqueTreeDoc::from(r.tree.clone()));
                envelope(g, "minmax-tree", v)
            }
            Format::Dot => r.to_dot(g),
            Format::Text => {
                let mut s = tree_text(g, &r.tree, Some(r.pending_edge));
                let _ = writeln!(
                    s,
                    "pending: clique {} on separator {}",
                    set_names(g, &r.tree.nodes()[r.leaf]),
                    set_names(g, &r.separator)
                );
                for x in &r.transform_log {
                    let _ = writeln!(
                        s,
                        "exchange {}-{} -> {}-{} on {}",
                        x.removed.0,
                        x.removed.1,
                        x.added.0,
                        x.added.1,
                        set_names(g, &x.label)
                    );
                }
                s
            }
        };
        Ok(Report::new(text, true))
    })
}

fn scheme(g: &Graph, format: Format) -> Run {
    allow(format, &[Format::Text, Format::Json], "scheme")?;
    with_chordal(g, "scheme", format, || {
        let s = containment_elimination_scheme(g)?;
        let text = match format {
            Format::Json => envelope(g, "scheme", to_value(&s)),
            _ => {
                let mut out = format!("{}\n", names(g, s.ordering.as_slice().iter().copied()));
                for step in &s.steps {
                    let sep = step.separator.as_ref().map_or("none".to_string(), |x| set_names(g, x));
                    let _ = writeln!(
                        out,
                        "prune {} on {sep}: {}",
                        set_names(g, &step.clique),
                        names(g, step.eliminated.iter().copied())
                    );
                }
                out
            }
        };
        Ok(Report::new(text, true))
    })
}

fn reversible(g: &Graph, format: Format) -> Run {
    allow(format, &[Format::Text, Format::Json], "reversible")?;
    let cert = find_reversible_ordering(g)?;
    let text = match format {
        Format::Json => envelope(
            g,
            "reversible",
            json!({ "proper_interval": cert.is_ordering(), "certificate": to_value(&cert) }),
        ),
        _ => match &cert {
            ReversibilityCertificate::Ordering(o) => format!("{}\n", names(g, o.as_slice().iter().copied())),
            other => {
                let v = to_value(other);
                let vs: Vec<usize> = serde_json::from_value(v["vertices"].clone()).expect("vertex list");
                format!(
                    "not proper interval: {} {}\n",
                    v["kind"].as_str().unwrap_or("?"),
                    names(g, vs)
                )
            }
        },
    };
    Ok(Report::new(text, cert.is_ordering()))
}

fn separators(g: &Graph, format: Format) -> Run {
    allow(format, &[Format::Text, Format::Json], "separators")?;
    with_chordal(g, "separators", format, || {
        let p = separator_poset(g)?;
        let text = match format {
            Format::Json => envelope(g, "separators", to_value(&p)),
            _ => {
                let mut s = String::new();
                for (i, sep) in p.separators().iter().enumerate() {
                    let mut flags = Vec::new();
                    if p.is_min_max(i) {
                        flags.push("min-max");
                    }
                    if p.is_min_min(i) {
                        flags.push("min-min");
                    }
                    let _ = writeln!(
                        s,
                        "{i}: {} x{} {}",
                        set_names(g, sep),
                        p.multiplicity(i),
                        flags.join(" ")
                    );
                }
                for (a, b) in p.hasse() {
                    let _ = writeln!(s, "{a} < {b}");
                }
                s
            }
        };
        Ok(Report::new(text, true))
    })
}

fn search(a: &SearchArgs) -> Run {
    allow(a.format, &[Format::Text, Format::Json], "search")?;
    let kind = match a.kind {
        Kind::NoMinmaxTerminal => CounterexampleKind::NoMinmaxTerminal,
        Kind::NoMinminPending => CounterexampleKind::NoMinminPending,
    };
    let filters = Filters {
        connected: true,
        chordal: true,
    };
    let spec = match a.mode {
        Mode::Exhaustive => CorpusSpec::exhaustive(a.n_min, a.n_max, filters),
        Mode::Classes => CorpusSpec::chordal_classes(a.n_min, a.n_max),
        Mode::Random => CorpusSpec::random(a.count, a.n_min, a.n_max, a.density, a.seed, filters),
    };
    let workers = a
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let report: SearchReport = search_counterexamples(kind, &spec, workers).map_err(|e| match e {
        Error::OverBudget(m) | Error::Precondition(m) => Failure::Usage(m),
        other => Failure::Library(other),
    })?;
    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("plain values");
            s.push('\n');
            s
        }
        _ => {
            let mut s = format!("examined {} graphs, found {}\n", report.examined, report.found.len());
            for c in &report.found {
                let edges: Vec<String> = c.graph.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                let _ = writeln!(s, "n={} {}", c.graph.vertex_count(), edges.join(" "));
            }
            s
        }
    };
    Ok(Report::new(text, true))
}

fn gen(a: &GenArgs) -> Run {
    let g = match (a.n, a.edges) {
        (Some(n), _) => random_chordal(n, a.density, a.seed),
        (None, Some(m)) => random_chordal_with_edges(m, a.density, a.seed),
        (None, None) => return Err(Failure::Usage("give --n or --edges".into())),
    };
    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string(&GraphDoc::from(&g)).expect("plain values");
            s.push('\n');
            s
        }
        Format::Dot => graph_to_dot(&g),
        Format::Text if g.edge_count() == 0 => "# single vertex\n".to_string(),
        Format::Text => write_edge_list(&g),
    };
    Ok(Report::new(text, true))
}

struct Checks(Vec<(&'static str, Option<bool>, String)>);

impl Checks {
    fn add(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        self.0.push((name, Some(ok), detail.into()));
    }

    fn skip(&mut self, name: &'static str, why: impl Into<String>) {
        self.0.push((name, None, why.into()));
    }

    fn passed(&self) -> bool {
        self.0.iter().all(|(_, ok, _)| *ok != Some(false))
    }

    fn render(&self, g: &Graph, format: Format) -> String {
        match format {
            Format::Json => {
                let rows: Vec<Value> = self
                    .0
                    .iter()
                    .map(|(n, ok, d)| json!({ "check": n, "agree": ok, "detail": d }))
                    .collect();
                envelope(g, "verify", json!({ "agree": self.passed(), "checks": rows }))
            }
            _ => {
                let mut s = String::new();
                for (n, ok, d) in &self.0 {
                    let tag = match ok {
                        Some(true) => "ok  ",
                        Some(false) => "FAIL",
                        None => "skip",
                    };
                    let _ = writeln!(s, "{tag} {n}: {d}");
                }
                s
            }
        }
    }
}

/// Compares library answers with brute-force ones on a small graph.
fn verify(g: &Graph, format: Format) -> Run {
    allow(format, &[Format::Text, Format::Json], "verify")?;
    let n = g.vertex_count();
    if n > VERIFY_LIMIT {
        return Err(Failure::Usage(format!(
            "verify compares with brute force and is limited to n <= {VERIFY_LIMIT}"
        )));
    }
    g.require_connected()?;
    let mut c = Checks(Vec::new());
    let cert = is_chordal(g)?;
    let truth = brute_is_chordal(g);
    c.add(
        "chordality",
        cert.is_chordal() == truth && cert.verify(g),
        format!("library {}, brute force {truth}", cert.is_chordal()),
    );
    if n <= ORDERING_LIMIT {
        let fast = find_reversible_ordering(g)?;
        let brute = brute_has_reversible_ordering(g)?;
        c.add(
            "reversible ordering",
            fast.is_ordering() == brute && fast.verify(g),
            format!("library {}, brute force {brute}", fast.is_ordering()),
        );
    } else {
        c.skip(
            "reversible ordering",
            format!("permutation search needs n <= {ORDERING_LIMIT}"),
        );
    }
    if truth && cert.is_chordal() {
        verify_chordal(g, &mut c)?;
    }
    Ok(Report::new(c.render(g, format), c.passed()))
}

fn verify_chordal(g: &Graph, c: &mut Checks) -> Result<(), Failure> {
    let tree = build_clique_tree(g)?;
    let mut cliques = tree.nodes().to_vec();
    cliques.sort();
    let brute = brute_maximal_cliques(g);
    c.add("maximal cliques", cliques == brute, format!("{} cliques", brute.len()));

    let mode = if g.vertex_count() <= SUBSET_MODE_LIMIT {
        SeparatorMode::Subsets
    } else {
        SeparatorMode::Generation
    };
    let seps = brute_minimal_separators(g, mode)?;
    let keys: std::collections::BTreeSet<VertexSet> = tree.separator_multiset().into_keys().collect();
    c.add("minimal separators", keys == seps, format!("{} separators", seps.len()));

    let mst = MaxSpanningTrees::new(g)?;
    c.add(
        "clique tree",
        verify_clique_tree(g, &tree).is_ok() && tree.weight() == mst.max_weight(),
        format!("weight {} of maximum {}", tree.weight(), mst.max_weight()),
    );
    let rcg = reduced_clique_graph(g)?;
    c.add(
        "reduced clique graph",
        rcg.canonical_edges() == mst.union_edges(),
        format!("{} edges", rcg.edges().len()),
    );
    let scheme = containment_elimination_scheme(g)?;
    c.add(
        "containment scheme",
        is_simplicial_elimination_scheme(g, &scheme.ordering)?.is_valid(),
        format!("{} pruning steps", scheme.steps.len()),
    );
    if brute.len() < 2 {
        c.skip("pending min-max tree", "single maximal clique");
        return Ok(());
    }
    let (max, _) = extremal_separators(&seps);
    let r = pending_minmax_tree(g)?;
    c.add(
        "pending min-max tree",
        r.check().is_ok() && max.contains(&r.separator) && r.tree.weight() == mst.max_weight(),
        format!("pending on {}", set_names(g, &r.separator)),
    );
    match minmax_simplicial_by_enumeration(g) {
        Ok(oracle) => {
            let fast = minmax_simplicial_vertices(g)?;
            c.add("min-max simplicial vertices", fast == oracle, set_names(g, &fast));
        }
        Err(e) => c.skip("min-max simplicial vertices", e.to_string()),
    }
    match has_minmin_pending_by_enumeration(g) {
        Ok(oracle) => {
            let fast = has_minmin_pending_tree(g)?;
            c.add("min-min pending tree", fast == oracle, format!("{fast:?}"));
        }
        Err(e) => c.skip("min-min pending tree", e.to_string()),
    }
    Ok(())
}

fn field<T: serde::de::DeserializeOwned>(doc: &Value, key: &str) -> Result<T, Failure> {
    serde_json::from_value(doc.get(key).cloned().unwrap_or(Value::Null))
        .map_err(|e| Failure::Usage(format!("certificate field {key:?}: {e}")))
}

/// Re-checks a JSON result against the graph with the library verifiers.
fn verify_certificate(g: &Graph, path: &PathBuf) -> Run {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("certificate: {e}")))?;
    if let Some(l) = doc.get("vertex_labels") {
        let recorded: Vec<String> = field(&doc, "vertex_labels")?;
        if recorded != labels(g) {
            return Err(Failure::Usage(format!(
                "certificate was produced for a different labeling: {l}"
            )));
        }
    }
    let command = doc.get("command").and_then(Value::as_str).unwrap_or("");
    let (ok, what) = match command {
        "check" => {
            let cert: ChordalityCertificate = field(&doc, "certificate")?;
            (
                cert.verify(g),
                if cert.is_chordal() {
                    "elimination scheme"
                } else {
                    "hole"
                },
            )
        }
        "peo" => {
            let order: VertexOrdering = field(&doc, "ordering")?;
            let claimed: bool = field(&doc, "valid")?;
            (
                is_simplicial_elimination_scheme(g, &order)?.is_valid() == claimed,
                "ordering",
            )
        }
        "clique-tree" => {
            let t = CliqueTree::try_from(field::<CliqueTreeDoc>(&doc, "tree")?)?;
            (verify_clique_tree(g, &t).is_ok(), "clique tree")
        }
        "minmax-tree" => {
            let t = CliqueTree::try_from(field::<CliqueTreeDoc>(&doc, "tree")?)?;
            let e: usize = field(&doc, "pending_edge")?;
            let leaf: usize = field(&doc, "leaf")?;
            let ok = verify_clique_tree(g, &t).is_ok()
                && t.edges().get(e).is_some_and(|x| x.touches(leaf))
                && t.is_leaf(leaf)
                && chordal::minmax::SeparatorPoset::from_tree(&t).contains_min_max(&t.edges()[e].label);
            (ok, "pending min-max tree")
        }
        "scheme" => {
            let order: VertexOrdering = field(&doc, "ordering")?;
            (
                is_simplicial_elimination_scheme(g, &order)?.is_valid(),
                "elimination scheme",
            )
        }
        "reversible" => {
            let cert: ReversibilityCertificate = field(&doc, "certificate")?;
            (
                cert.verify(g),
                if cert.is_ordering() {
                    "reversible ordering"
                } else {
                    "forbidden structure"
                },
            )
        }
        other => return Err(Failure::Usage(format!("no verifier for command {other:?}"))),
    };
    let text = format!("{} {what}\n", if ok { "verified" } else { "REJECTED" });
    Ok(Report::new(text, ok))
}

fn slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (lx, ly): (Vec<f64>, Vec<f64>) = points.iter().map(|&(x, y)| (x.ln(), y.ln())).unzip();
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let cov: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}

fn bench(a: &BenchArgs) -> Run {
    allow(a.format, &[Format::Text, Format::Json], "bench")?;
    if a.edges.is_empty() || a.repeats == 0 {
        return Err(Failure::Usage("need at least one size and one repeat".into()));
    }
    let mut rows = Vec::new();
    for (i, &m) in a.edges.iter().enumerate() {
        let g = random_chordal_with_edges(m, a.density, a.seed + i as u64);
        let mut best = f64::INFINITY;
        for _ in 0..a.repeats {
            let start = Instant::now();
            let r = pending_minmax_tree(&g)?;
            best = best.min(start.elapsed().as_secs_f64());
            drop(r);
        }
        rows.push((g.vertex_count(), g.edge_count(), best));
    }
    let fit = (rows.len() >= 2).then(|| slope(&rows.iter().map(|&(_, m, t)| (m as f64, t)).collect::<Vec<_>>()));
    let text = match a.format {
        Format::Json => {
            let runs: Vec<Value> = rows
                .iter()
                .map(|&(n, m, t)| json!({ "vertices": n, "edges": m, "seconds": t }))
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&json!({ "runs": runs, "slope": fit })).expect("plain")
            )
        }
        _ => {
            let mut s = String::new();
            for (n, m, t) in &rows {
                let _ = writeln!(s, "n={n} m={m} {t:.4}s");
            }
            if let Some(k) = fit {
                let _ = writeln!(s, "log-log slope {k:.3}");
            }
            s
        }
    };
    Ok(Report::new(text, true))
}

fn components(g: &Graph, format: Format) -> Run {
    allow(format, &[Format::Text, Format::Json], "components")?;
    let parts: Vec<Graph> = g.components().iter().map(|c| g.induced_subgraph(c).0).collect();
    let text = match format {
        Format::Json => {
            let docs: Vec<GraphDoc> = parts.iter().map(GraphDoc::from).collect();
            format!("{}\n", serde_json::to_string_pretty(&docs).expect("plain values"))
        }
        _ => {
            let mut s = String::new();
            for (i, p) in parts.iter().enumerate() {
                if p.edge_count() == 0 {
                    let _ = writeln!(s, "# component {}: single vertex {}", i + 1, p.label(0));
                } else {
                    let _ = writeln!(s, "# component {}: {} vertices", i + 1, p.vertex_count());
                    s.push_str(&write_edge_list(p));
                }
            }
            s
        }
    };
    Ok(Report::new(text, true))
}
