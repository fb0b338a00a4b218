use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use unavoidable::balance::{char_bp_witness, constant_bal_predicate, half_family, in_ck, ktt_witness, two_squares};
use unavoidable::certificate::Witness;
use unavoidable::coloring::EnumerationMode;
use unavoidable::constructions as build;
use unavoidable::graph::parse_graph_spec;
use unavoidable::multicolor::{classify_colors, search_clique_grid, verify_multicolor_b};
use unavoidable::patterns::{
    avoids_family_with, find_balanced_witness, find_induced_mono, find_weakly_induced_mono, EmbedMode,
};
use unavoidable::search::{self, SearchOptions};
use unavoidable::suites::{run_suite, SuiteOptions, SUITES};
use unavoidable::{graph6, Error, ExtremalCertificate, KColoring, PatternFamily, SimpleGraph, TwoColoring};

/// Exact computation and verification of unavoidable color patterns.
#[derive(Parser, Debug, Serialize)]
#[command(name = "unavoidable", version)]
struct Cli {
    /// Worker threads for searches.
    #[arg(long, global = true, env = "UNAVOIDABLE_WORKERS")]
    workers: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Write a run manifest (command, parameters, seed, workers, versions) here.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    /// Record wall-clock time in certificates (breaks bit-identical output).
    #[arg(long, global = true)]
    timing: bool,
    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Emit {
    Json,
    Dot,
    Graph6,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
enum Command {
    /// Build an extremal coloring or graph.
    Construct(ConstructArgs),
    /// Look for a monochromatic or balanced copy of a pattern in a coloring.
    Detect(DetectArgs),
    /// Exhaustive searches for extremal values.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Balanceability and constant balancing number.
    #[command(subcommand)]
    Balance(BalanceCommand),
    /// Color classes of k-colorings.
    #[command(subcommand)]
    Multicolor(MulticolorCommand),
    /// Run a property suite (or `all`).
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Kind {
    Matching,
    Star,
    Blowup,
    Layered,
    BipartiteFree,
    Partition,
    Incidence,
    Graph,
}

#[derive(Args, Debug, Serialize)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Prime order of the projective plane.
    #[arg(long)]
    q: Option<usize>,
    /// Number of colors.
    #[arg(long)]
    k: Option<usize>,
    /// Named graph or `graph6:<string>` (kind `graph`).
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum DetectMode {
    Induced,
    Weak,
    WeakStrict,
    Balanced,
}

#[derive(Args, Debug, Serialize)]
struct DetectArgs {
    /// Coloring file, or inline JSON / graph6 of the red graph.
    #[arg(long)]
    coloring: String,
    #[arg(long, required_unless_present = "family")]
    pattern: Option<String>,
    /// Check a whole family instead (`F:s,t`, `L:r,s,t`, `half:<graph>`, `file:<path>`).
    #[arg(long, conflicts_with = "pattern")]
    family: Option<String>,
    #[arg(long, value_enum, default_value_t = DetectMode::Induced)]
    mode: DetectMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ModeArg {
    Raw,
    Canonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum WeakArg {
    Weak,
    Strict,
}

#[derive(Args, Debug, Serialize)]
struct EnumerationArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Canonical)]
    mode: ModeArg,
    /// Reading of weakly induced containment.
    #[arg(long, value_enum, default_value_t = WeakArg::Weak)]
    weak: WeakArg,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "search")]
enum SearchCommand {
    /// ex2(K_n, F). Always finite at fixed n; an unbounded value shows up as growth in n.
    Ex2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        family: String,
        #[command(flatten)]
        enumeration: EnumerationArgs,
    },
    /// bal(n, G).
    Bal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        enumeration: EnumerationArgs,
    },
    /// R(k), or whether every coloring of K_n has a monochromatic K_k.
    Ramsey {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        allow_literature: bool,
    },
    /// BR(t), or the check at K_{n,n}.
    BipartiteRamsey {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        allow_literature: bool,
    },
    /// z(m, n; s, t).
    Zarankiewicz {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// ex(n, K_{s,t}) on at most 8 vertices.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Kovari-Sos-Turan bounds.
    Bounds {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// The constant r(2T^2 - 6T + 5) with T = R(2t).
    Constant {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "balance")]
enum BalanceCommand {
    /// Balanceability witness (partition and subset).
    Check {
        #[arg(long)]
        graph: String,
    },
    /// Explicit K_{t,t} witness.
    Ktt {
        #[arg(long)]
        t: usize,
    },
    /// C_k membership with structural witnesses.
    Ck {
        #[arg(long)]
        graph: String,
    },
    /// Constant balancing number predicate.
    Constant {
        #[arg(long)]
        graph: String,
    },
    /// The half-edge family F(G).
    HalfFamily {
        #[arg(long)]
        graph: String,
    },
    /// Sum of two squares under both conventions.
    TwoSquares {
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "multicolor")]
enum MulticolorCommand {
    Classify {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        t: usize,
    },
    /// Verify a clique grid, searching for one when no cliques are given.
    VerifyB {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        t: usize,
        /// JSON object mapping colors to vertex lists.
        #[arg(long)]
        cliques: Option<String>,
    },
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
}

/// What a run produced: the JSON document, optional graph/coloring views for
/// the other emit formats, and whether every checked property held.
struct Outcome {
    json: Value,
    view: Option<View>,
    passed: bool,
}

enum View {
    Graph(SimpleGraph),
    Coloring(TwoColoring),
    KColoring(KColoring),
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, view: None, passed: true }
    }

    fn with_view(json: Value, view: View) -> Self {
        Outcome { json, view: Some(view), passed: true }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn need(v: Option<usize>, name: &str) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required for this kind")))
}

/// A file path, or the argument itself when no such file exists.
fn read_input(arg: &str) -> CliResult<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn coloring_json(c: &TwoColoring) -> Value {
    let sizes = c.class_sizes();
    let mut v = c.to_json_value();
    v["red_edges"] = json!(sizes.red);
    v["blue_edges"] = json!(sizes.blue);
    v["min_class"] = json!(sizes.min);
    v
}

fn graph_json(g: &SimpleGraph) -> Value {
    json!({ "n": g.n(), "edges": g.edges(), "edge_count": g.edge_count(), "graph6": graph6::encode(g) })
}

fn construct(a: &ConstructArgs) -> CliResult<Outcome> {
    let coloring = |c: TwoColoring| Outcome::with_view(coloring_json(&c), View::Coloring(c));
    Ok(match a.kind {
        Kind::Matching => coloring(build::matching_coloring(need(a.n, "n")?)?),
        Kind::Star => coloring(build::star_coloring(need(a.n, "n")?)?),
        Kind::Blowup => coloring(build::clique_blowup_coloring(need(a.n, "n")?, need(a.t, "t")?)?),
        Kind::Layered => coloring(build::layered_coloring(
            need(a.n, "n")?,
            need(a.r, "r")?,
            need(a.s, "s")?,
            need(a.t, "t")?,
        )?),
        Kind::BipartiteFree => coloring(build::bipartite_free_coloring(need(a.n, "n")?, need(a.q, "q")?)?),
        Kind::Partition => {
            let c = build::multicolor_partition_coloring(need(a.n, "n")?, need(a.k, "k")?)?;
            let mut json = c.to_json_value();
            json["class_sizes"] = json!((1..=c.k()).map(|i| c.color_graph(i).edge_count()).collect::<Vec<_>>());
            Outcome::with_view(json, View::KColoring(c))
        }
        Kind::Incidence => {
            let g = build::incidence_bipartite(need(a.q, "q")?)?;
            Outcome::with_view(graph_json(&g), View::Graph(g))
        }
        Kind::Graph => {
            let spec = a.graph.as_deref().ok_or_else(|| CliError::Usage("--graph is required for kind graph".into()))?;
            let g = parse_graph_spec(spec)?;
            Outcome::with_view(graph_json(&g), View::Graph(g))
        }
    })
}

fn weak_mode(w: WeakArg) -> EmbedMode {
    match w {
        WeakArg::Weak => EmbedMode::Weak,
        WeakArg::Strict => EmbedMode::WeakStrict,
    }
}

fn detect(a: &DetectArgs) -> CliResult<Outcome> {
    let c = TwoColoring::parse(&read_input(&a.coloring)?, None)?;
    if let Some(spec) = &a.family {
        let fam = PatternFamily::parse(spec)?;
        let mode = if a.mode == DetectMode::WeakStrict { EmbedMode::WeakStrict } else { EmbedMode::Weak };
        let json = match avoids_family_with(&c, &fam, mode) {
            Ok(()) => json!({ "family": fam.name, "avoids": true }),
            Err(v) => json!({ "family": fam.name, "avoids": false, "member": v.member, "witness": v.witness }),
        };
        return Ok(Outcome::ok(json));
    }
    let h = parse_graph_spec(a.pattern.as_deref().expect("clap requires a pattern or a family"))?;
    let witness = match a.mode {
        DetectMode::Induced => find_induced_mono(&c, &h),
        DetectMode::Weak => find_weakly_induced_mono(&c, &h, false),
        DetectMode::WeakStrict => find_weakly_induced_mono(&c, &h, true),
        DetectMode::Balanced => find_balanced_witness(&c, &h),
    };
    Ok(Outcome::ok(json!({
        "pattern": graph6::encode(&h),
        "mode": a.mode,
        "found": witness.is_some(),
        "witness": witness,
    })))
}

fn options(e: &EnumerationArgs, timing: bool) -> SearchOptions {
    SearchOptions {
        mode: match e.mode {
            ModeArg::Raw => EnumerationMode::Raw,
            ModeArg::Canonical => EnumerationMode::Canonical,
        },
        weak_mode: weak_mode(e.weak),
        timing,
    }
}

fn certificate(cert: ExtremalCertificate) -> Outcome {
    let view = match &cert.witness {
        Witness::Coloring(c) => Some(View::Coloring(c.clone())),
        Witness::Graph(g) => Some(View::Graph(g.clone())),
        Witness::Bipartite(b) => Some(View::Graph(b.to_graph())),
        Witness::None => None,
    };
    Outcome { json: cert.to_json(), view, passed: true }
}

fn search_cmd(cmd: &SearchCommand, timing: bool) -> CliResult<Outcome> {
    let start = Instant::now();
    let mut out = match cmd {
        SearchCommand::Ex2 { n, family, enumeration } => {
            let fam = PatternFamily::parse(family)?;
            certificate(search::ex2_exact(*n, &fam, options(enumeration, timing))?)
        }
        SearchCommand::Bal { n, graph, enumeration } => {
            let g = parse_graph_spec(graph)?;
            certificate(search::bal_exact(*n, &g, options(enumeration, timing))?)
        }
        SearchCommand::Ramsey { k, n: Some(n), .. } => {
            let r = search::ramsey_check(*k, *n)?;
            let json = json!({
                "k": k,
                "n": n,
                "holds": r.holds,
                "colorings_checked": r.colorings_checked,
                "counterexample": r.counterexample.as_ref().map(coloring_json),
            });
            match r.counterexample {
                Some(c) => Outcome::with_view(json, View::Coloring(c)),
                None => Outcome::ok(json),
            }
        }
        SearchCommand::Ramsey { k, n: None, allow_literature } => {
            let v = search::ramsey_value(*k, *allow_literature)?;
            if *k <= 3 && v.provenance == search::Provenance::Computed {
                let mut cert = search::ramsey_certificate(*k)?;
                cert.wall_time_secs = timing.then(|| start.elapsed().as_secs_f64());
                certificate(cert)
            } else {
                Outcome::ok(json!({ "quantity": "ramsey", "k": k, "value": v.value, "provenance": v.provenance }))
            }
        }
        SearchCommand::BipartiteRamsey { t, n: Some(n), .. } => {
            let (holds, witness, nodes) = search::bipartite_ramsey_check(*t, *n)?;
            Outcome::ok(json!({
                "t": t,
                "n": n,
                "holds": holds,
                "nodes_searched": nodes,
                "counterexample": witness.map(|b| b.adjacency),
            }))
        }
        SearchCommand::BipartiteRamsey { t, n: None, allow_literature } => {
            let v = search::bipartite_ramsey_value(*t, *allow_literature)?;
            if v.provenance == search::Provenance::Computed {
                certificate(search::bipartite_ramsey_certificate(*t)?)
            } else {
                Outcome::ok(json!({ "quantity": "bipartite-ramsey", "t": t, "value": v.value, "provenance": v.provenance }))
            }
        }
        SearchCommand::Zarankiewicz { m, n, s, t } => certificate(search::zarankiewicz_exact(*m, *n, *s, *t)?),
        SearchCommand::Turan { n, s, t } => certificate(search::ex_kst_exact(*n, *s, *t)?),
        SearchCommand::Bounds { m, n, s, t } => {
            Outcome::ok(serde_json::to_value(build::kst_bounds(*m, *n, *s, *t)?).expect("plain data"))
        }
        SearchCommand::Constant { r, t } => {
            let (value, big_t) = search::theorem_constant(*r, *t)?;
            Outcome::ok(json!({ "r": r, "t": t, "value": value, "ramsey": big_t }))
        }
    };
    if timing && out.json.get("wall_time_secs").is_none() {
        out.json["wall_time_secs"] = json!(start.elapsed().as_secs_f64());
    }
    Ok(out)
}

fn balance_cmd(cmd: &BalanceCommand) -> CliResult<Outcome> {
    Ok(match cmd {
        BalanceCommand::Check { graph } => {
            let g = parse_graph_spec(graph)?;
            let w = char_bp_witness(&g)?;
            Outcome::ok(json!({ "graph": graph6::encode(&g), "balanceable": w.is_some(), "witness": w }))
        }
        BalanceCommand::Ktt { t } => Outcome::ok(to(&ktt_witness(*t)?)),
        BalanceCommand::Ck { graph } => Outcome::ok(to(&in_ck(&parse_graph_spec(graph)?)?)),
        BalanceCommand::Constant { graph } => Outcome::ok(to(&constant_bal_predicate(&parse_graph_spec(graph)?)?)),
        BalanceCommand::HalfFamily { graph } => Outcome::ok(half_family(&parse_graph_spec(graph)?)?.to_json_value()),
        BalanceCommand::TwoSquares { t } => {
            let sq = two_squares(*t);
            Outcome::ok(json!({ "t": t, "positive": sq.positive, "non_negative": sq.non_negative }))
        }
    })
}

fn to<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn multicolor_cmd(cmd: &MulticolorCommand) -> CliResult<Outcome> {
    match cmd {
        MulticolorCommand::Classify { coloring, t } => {
            let c = KColoring::parse(&read_input(coloring)?)?;
            let class = classify_colors(&c, *t)?;
            Ok(Outcome::ok(serde_json::to_value(class).expect("plain data")))
        }
        MulticolorCommand::VerifyB { coloring, t, cliques } => {
            let c = KColoring::parse(&read_input(coloring)?)?;
            let grid: Option<BTreeMap<usize, Vec<usize>>> = match cliques {
                Some(text) => {
                    let text = read_input(text)?;
                    let raw: BTreeMap<String, Vec<usize>> =
                        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("cliques: {e}")))?;
                    let mut map = BTreeMap::new();
                    for (k, v) in raw {
                        let color = k.parse().map_err(|_| CliError::Usage(format!("cliques: bad color {k:?}")))?;
                        map.insert(color, v);
                    }
                    Some(map)
                }
                None => search_clique_grid(&c, *t)?,
            };
            let holds = match &grid {
                Some(g) => verify_multicolor_b(&c, *t, g)?,
                None => false,
            };
            Ok(Outcome {
                json: json!({ "t": t, "holds": holds, "cliques": grid }),
                view: None,
                passed: holds,
            })
        }
    }
}

fn verify_cmd(a: &VerifyArgs) -> CliResult<Outcome> {
    let opts = SuiteOptions { seed: a.seed, samples: a.samples, k: a.k };
    let names: Vec<&str> = if a.suite == "all" {
        SUITES.iter().map(|s| s.0).collect()
    } else {
        vec![a.suite.as_str()]
    };
    let mut reports = Vec::new();
    let mut passed = true;
    for name in names {
        let r = run_suite(name, &opts)?;
        for p in &r.properties {
            eprintln!("[{}] {}: {}", if p.passed { "pass" } else { "FAIL" }, r.suite, p.name);
        }
        passed &= r.passed;
        reports.push(serde_json::to_value(&r).expect("plain data"));
    }
    let json = if reports.len() == 1 { reports.pop().expect("one report") } else { json!({ "passed": passed, "suites": reports }) };
    Ok(Outcome { json, view: None, passed })
}

fn dot(view: &View) -> String {
    let mut s = String::from("graph G {\n");
    let mut edge = |u: usize, v: usize, attr: &str| {
        let _ = writeln!(s, "  {u} -- {v}{attr};");
    };
    match view {
        View::Graph(g) => {
            for (u, v) in g.edges() {
                edge(u, v, "");
            }
        }
        View::Coloring(c) => {
            for v in 0..c.n() {
                for u in 0..v {
                    edge(u, v, if c.is_red(u, v) { " [color=red]" } else { " [color=blue]" });
                }
            }
        }
        View::KColoring(c) => {
            for v in 0..c.n() {
                for u in 0..v {
                    let attr = format!(" [label={}, colorscheme=set19, color={}]", c.color(u, v), (c.color(u, v) - 1) % 9 + 1);
                    edge(u, v, &attr);
                }
            }
        }
    }
    s.push_str("}\n");
    s
}

fn render(out: &Outcome, emit: Emit) -> CliResult<String> {
    match emit {
        Emit::Json => Ok(serde_json::to_string_pretty(&out.json).expect("json renders") + "\n"),
        Emit::Dot => out.view.as_ref().map(dot).ok_or_else(|| CliError::Usage("nothing to draw for this command".into())),
        Emit::Graph6 => match &out.view {
            Some(View::Graph(g)) => Ok(graph6::encode(g) + "\n"),
            Some(View::Coloring(c)) => Ok(graph6::encode(c.red()) + "\n"),
            _ => Err(CliError::Usage("graph6 output needs a graph or a 2-coloring".into())),
        },
    }
}

#[derive(Serialize)]
struct RunManifest<'a> {
    subcommand: &'a Command,
    arguments: Vec<String>,
    seed: Option<u64>,
    workers: Option<usize>,
    output: Option<&'a Path>,
    emit: Emit,
    versions: BTreeMap<&'static str, &'static str>,
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    search::with_workers(cli.workers, || match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Detect(a) => detect(a),
        Command::Search(cmd) => search_cmd(cmd, cli.timing),
        Command::Balance(cmd) => balance_cmd(cmd),
        Command::Multicolor(cmd) => multicolor_cmd(cmd),
        Command::Verify(a) => verify_cmd(a),
    })
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.workers == Some(0) {
        eprintln!("error: --workers must be at least 1");
        return ExitCode::from(2);
    }
    let result = run(&cli).and_then(|out| {
        let text = render(&out, cli.emit)?;
        match &cli.output {
            Some(path) => write_file(path, &text)?,
            None => print!("{text}"),
        }
        if let Some(path) = &cli.manifest {
            let manifest = RunManifest {
                subcommand: &cli.command,
                arguments: std::env::args().skip(1).collect(),
                seed: match &cli.command {
                    Command::Verify(a) => Some(a.seed),
                    _ => None,
                },
                workers: cli.workers,
                output: cli.output.as_deref(),
                emit: cli.emit,
                versions: BTreeMap::from([
                    ("unavoidable", env!("CARGO_PKG_VERSION")),
                ]),
            };
            write_file(path, &(serde_json::to_string_pretty(&manifest).expect("manifest renders") + "\n"))?;
        }
        Ok(out.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
