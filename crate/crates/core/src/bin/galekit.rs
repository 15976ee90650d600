use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use galekit::alternation::{
    alt_min, alt_property, hypergraph_alternation, AltMode, Bijection, SearchBudget, SignedProperty,
};
use galekit::bounds::{bound_report, BoundBudget, BoundReport};
use galekit::boxcomplex::{check_z2_structure, BoxComplex, Variant};
use galekit::coloring::{is_multicoloring, multichromatic_number, SolverCaps};
use galekit::family::{Family, FamilySpec};
use galekit::gale::{corollary_configuration, lemma_configuration, verify_auto, verify_exact, verify_sampled, GaleConfiguration};
use galekit::graph::{kneser_graph, Graph};
use galekit::hypergraph::Hypergraph;
use galekit::{Error, Result};

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "galekit", version, about = "Alternation numbers, Gale configurations and Kneser-type colorings")]
struct Cli {
    /// Worker threads for parallel searches (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// alt(H) or salt(H), minimized over orderings or at a given one.
    Alt(AltArgs),
    /// Build the moment-curve configuration and verify its hemispheres.
    Gale(GaleArgs),
    /// The lower-bound chain for chi(KG(H)).
    Bounds(BoundsArgs),
    /// The m-fold chromatic number.
    Multichi(MultichiArgs),
    /// f-vector and Z2 checks of B(G) or B0(G).
    Boxcomplex(BoxArgs),
}

#[derive(Args)]
struct Target {
    /// kneser:n,k | schrijver:n,k | sstable:n,k,s | pnks:n,k,s
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Hypergraph JSON: {"vertices": [...], "edges": [[...], ...]}
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Orderings are searched exhaustively up to this many vertices.
    #[arg(long, default_value_t = SearchBudget::default().exhaustive_threshold)]
    exhaustive_threshold: usize,
    #[arg(long, default_value_t = SearchBudget::default().anneal_steps)]
    anneal_steps: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

impl SearchArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            exhaustive_threshold: self.exhaustive_threshold,
            anneal_steps: self.anneal_steps,
            seed: self.seed,
        }
    }
}

#[derive(Args)]
struct AltArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, default_value = "alt")]
    mode: AltMode,
    /// `min` (hypergraphs only), `identity`, or a comma-separated vertex order.
    #[arg(long)]
    sigma: Option<String>,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyChoice {
    Exact,
    Sampled,
    Auto,
}

#[derive(Args)]
struct GaleArgs {
    #[command(flatten)]
    target: Target,
    /// Bare moment curve with this many points (needs --d).
    #[arg(long, conflicts_with_all = ["family", "input"], requires = "d")]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    d: Option<i64>,
    /// For hypergraphs: alt checks "some side holds an edge", salt "both do".
    #[arg(long, default_value = "salt")]
    mode: AltMode,
    /// `identity` or a comma-separated vertex order.
    #[arg(long)]
    sigma: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    verify: VerifyChoice,
    #[arg(long, default_value_t = 100_000)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct BoundsArgs {
    /// Repeatable.
    #[arg(long)]
    family: Vec<String>,
    /// Repeatable hypergraph JSON files.
    #[arg(long)]
    input: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Vertex cap for the exact chromatic number of KG(H).
    #[arg(long, default_value_t = SolverCaps::default().max_vertices)]
    max_vertices: usize,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args)]
struct MultichiArgs {
    #[arg(long, conflicts_with = "graph")]
    family: Option<String>,
    /// Graph JSON: {"vertices": [...], "adjacency": [[...], ...]}
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 32)]
    nmax: usize,
    #[arg(long, default_value_t = SolverCaps::default().max_vertices)]
    max_vertices: usize,
}

#[derive(Args)]
struct BoxArgs {
    /// k<N> (complete), c<N> (cycle), e<N> (edgeless), or a graph JSON file.
    #[arg(long)]
    graph: String,
    #[arg(long, default_value = "b0")]
    variant: Variant,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot set up {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match &cli.command {
        Command::Alt(a) => cmd_alt(a),
        Command::Gale(a) => cmd_gale(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Multichi(a) => cmd_multichi(a),
        Command::Boxcomplex(a) => cmd_boxcomplex(a),
    };
    let (body, code) = match outcome {
        Ok(Report { body, code }) => (body, code),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Err(e) = emit(cli.output.as_deref(), &body) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

struct Report {
    body: String,
    code: u8,
}

impl Report {
    fn json(value: &Value) -> Self {
        Report::json_with_code(value, 0)
    }

    fn json_with_code(value: &Value, code: u8) -> Self {
        let body = serde_json::to_string_pretty(value).expect("reports serialize") + "\n";
        Report { body, code }
    }
}

fn emit(path: Option<&Path>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))
}

enum Loaded {
    Hypergraph(Hypergraph, String),
    Property(Box<dyn SignedProperty>, String),
}

fn load(target: &Target) -> Result<Loaded> {
    match (&target.family, &target.input) {
        (Some(spec), _) => {
            let spec: FamilySpec = spec.parse()?;
            Ok(match spec.build()? {
                Family::Hypergraph(h) => Loaded::Hypergraph(h, spec.to_string()),
                Family::Property(p) => Loaded::Property(Box::new(p), spec.to_string()),
            })
        }
        (None, Some(path)) => Ok(Loaded::Hypergraph(
            Hypergraph::from_json_str(&read(path)?)?,
            path.display().to_string(),
        )),
        (None, None) => Err(Error::Domain("give --family or --input".into())),
    }
}

/// Parse an explicit ordering. Vertex names are looked up in `h`; for a
/// property the names are `1..n`.
fn parse_sigma(text: &str, n: usize, h: Option<&Hypergraph>) -> Result<Bijection> {
    if text == "identity" {
        return Ok(Bijection::identity(n));
    }
    let names: Vec<&str> = text.split(',').map(str::trim).collect();
    match h {
        Some(h) => Bijection::from_names(h, &names),
        None => {
            let images = names
                .iter()
                .map(|s| match s.parse::<usize>() {
                    Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                    _ => Err(Error::Parse(format!("sigma entry {s:?} is not a vertex in 1..{n}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            Bijection::new(images)
        }
    }
}

fn order_names(names: &[String], sigma: &Bijection) -> Vec<String> {
    sigma.images().iter().map(|&v| names[v].clone()).collect()
}

fn range_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn cmd_alt(a: &AltArgs) -> Result<Report> {
    match load(&a.target)? {
        Loaded::Hypergraph(h, label) => {
            let n = h.vertex_count();
            let (sigma, exact) = match a.sigma.as_deref() {
                None | Some("min") => {
                    let m = alt_min(&h, a.mode, &a.search.budget());
                    (m.sigma, m.exact)
                }
                Some(text) => (parse_sigma(text, n, Some(&h))?, true),
            };
            let (value, witness) = hypergraph_alternation(&h, &sigma, a.mode)?;
            Ok(Report::json(&json!({
                "schema": 1,
                "command": "alt",
                "target": label,
                "mode": a.mode,
                "minimized": matches!(a.sigma.as_deref(), None | Some("min")),
                "value": value,
                "exact": exact,
                "sigma": order_names(h.names(), &sigma),
                "witness": witness.to_string(),
                "degenerate": h.edge_count() == 0,
            })))
        }
        Loaded::Property(p, label) => {
            let n = p.ground_size();
            let sigma = match a.sigma.as_deref() {
                None | Some("identity") => Bijection::identity(n),
                Some("min") => {
                    return Err(Error::Domain("minimizing over orderings is only available for hypergraphs".into()))
                }
                Some(text) => parse_sigma(text, n, None)?,
            };
            let out = alt_property(p.as_ref(), &sigma)?;
            Ok(Report::json(&json!({
                "schema": 1,
                "command": "alt",
                "target": label,
                "property": p.name(),
                "value": out.reported(),
                "exact": true,
                "all_in_property": out.all_in_property(),
                "sigma": order_names(&range_names(n), &sigma),
                "witness": out.witness.map(|w| w.to_string()),
            })))
        }
    }
}

fn cmd_gale(a: &GaleArgs) -> Result<Report> {
    if let (Some(n), Some(d)) = (a.n, a.d) {
        if d < 0 {
            return Err(Error::Domain(
                "d = −1 means alt(P,σ) = n; the construction needs d ≥ 0".into(),
            ));
        }
        let sigma = match a.sigma.as_deref() {
            None => Bijection::identity(n),
            Some(text) => parse_sigma(text, n, None)?,
        };
        let z = GaleConfiguration::moment_curve(n, d, &sigma)?;
        return Ok(Report::json(&json!({
            "schema": 1,
            "command": "gale",
            "configuration": z.to_json(),
            "verdict": null,
        })));
    }
    let (z, prop, label, d, alternation): (GaleConfiguration, Box<dyn SignedProperty>, String, usize, usize) =
        match load(&a.target)? {
            Loaded::Hypergraph(h, label) => {
                let sigma = match a.sigma.as_deref() {
                    None => Bijection::identity(h.vertex_count()),
                    Some(text) => parse_sigma(text, h.vertex_count(), Some(&h))?,
                };
                let c = corollary_configuration(&h, &sigma, a.mode)?;
                (c.config, Box::new(c.property), label, c.d, c.alternation)
            }
            Loaded::Property(p, label) => {
                let n = p.ground_size();
                let sigma = match a.sigma.as_deref() {
                    None => Bijection::identity(n),
                    Some(text) => parse_sigma(text, n, None)?,
                };
                let c = lemma_configuration(p.as_ref(), &sigma)?;
                (c.config, p, label, c.d, c.alternation)
            }
        };
    let verdict = match a.verify {
        VerifyChoice::Exact => verify_exact(&z, prop.as_ref())?,
        VerifyChoice::Sampled => verify_sampled(&z, prop.as_ref(), a.trials, a.seed)?,
        VerifyChoice::Auto => verify_auto(&z, prop.as_ref(), a.trials, a.seed)?,
    };
    // the construction is a theorem; a failing hemisphere is a bug
    let code = if verdict.ok { 0 } else { 4 };
    Ok(Report::json_with_code(
        &json!({
            "schema": 1,
            "command": "gale",
            "target": label,
            "property": prop.name(),
            "alternation": alternation,
            "d": d,
            "configuration": z.to_json(),
            "verdict": verdict,
        }),
        code,
    ))
}

fn cmd_bounds(a: &BoundsArgs) -> Result<Report> {
    let mut targets = Vec::new();
    for spec in &a.family {
        let spec: FamilySpec = spec.parse()?;
        targets.push((spec.to_string(), spec.hypergraph()?));
    }
    for path in &a.input {
        targets.push((path.display().to_string(), Hypergraph::from_json_str(&read(path)?)?));
    }
    if targets.is_empty() {
        return Err(Error::Domain("give at least one --family or --input".into()));
    }
    let budget = BoundBudget {
        search: a.search.budget(),
        caps: SolverCaps { max_vertices: a.max_vertices },
        ..BoundBudget::default()
    };
    let reports: Vec<(String, BoundReport)> =
        targets.into_iter().map(|(label, h)| (label, bound_report(&h, &budget))).collect();
    let violations: Vec<String> = reports
        .iter()
        .flat_map(|(label, r)| r.violations().into_iter().map(move |v| format!("{label}: {v}")))
        .collect();
    for v in &violations {
        eprintln!("invariant violated: {v}");
    }
    let code = if violations.is_empty() { 0 } else { 4 };
    let body = match a.format {
        Format::Json => {
            let list: Vec<Value> = reports
                .iter()
                .map(|(label, r)| json!({ "label": label, "report": r }))
                .collect();
            let value = json!({ "schema": 1, "command": "bounds", "reports": list, "violations": violations });
            return Ok(Report::json_with_code(&value, code));
        }
        Format::Csv => {
            let mut out = String::from(BoundReport::csv_header());
            out.push('\n');
            for (label, r) in &reports {
                out.push_str(&r.csv_row(label));
                out.push('\n');
            }
            out
        }
        Format::Text => reports.iter().map(|(label, r)| r.text(label)).collect(),
    };
    Ok(Report { body, code })
}

fn cmd_multichi(a: &MultichiArgs) -> Result<Report> {
    let (g, label) = match (&a.family, &a.graph) {
        (Some(spec), _) => {
            let spec: FamilySpec = spec.parse()?;
            (kneser_graph(&spec.hypergraph()?)?, spec.to_string())
        }
        (None, Some(path)) => (Graph::from_json_str(&read(path)?)?, path.display().to_string()),
        (None, None) => return Err(Error::Domain("give --family or --graph".into())),
    };
    let caps = SolverCaps { max_vertices: a.max_vertices };
    let r = multichromatic_number(&g, a.m, a.nmax, &caps)?;
    if !is_multicoloring(&g, a.m, r.colors, &r.sets) {
        return Err(Error::Invariant("multicoloring witness failed re-validation".into()));
    }
    let witness: Vec<Vec<usize>> = r.sets.iter().map(|&s| (0..64).filter(|c| s >> c & 1 == 1).map(|c| c + 1).collect()).collect();
    Ok(Report::json(&json!({
        "schema": 1,
        "command": "multichi",
        "target": label,
        "m": a.m,
        "value": r.colors,
        "vertices": g.labels(),
        "witness": witness,
    })))
}

fn named_graph(text: &str) -> Result<Option<Graph>> {
    let lower = text.to_ascii_lowercase();
    let Some(kind) = lower.chars().next() else {
        return Ok(None);
    };
    let Ok(n) = lower[1..].parse::<usize>() else {
        return Ok(None);
    };
    match kind {
        'k' => Graph::complete(n).map(Some),
        'c' => Graph::cycle(n).map(Some),
        'e' => Graph::with_order(n).map(Some),
        _ => Ok(None),
    }
}

fn cmd_boxcomplex(a: &BoxArgs) -> Result<Report> {
    let g = match named_graph(&a.graph)? {
        Some(g) => g,
        None => Graph::from_json_str(&read(Path::new(&a.graph))?)?,
    };
    let c = BoxComplex::build(&g, a.variant)?;
    let z2 = check_z2_structure(&c);
    let code = if z2.all_ok() { 0 } else { 4 };
    let complex = c.to_json();
    Ok(Report::json_with_code(
        &json!({
            "schema": 1,
            "command": "boxcomplex",
            "graph": a.graph,
            "variant": a.variant,
            "f_vector": complex.f_vector,
            "dimension": complex.dimension,
            "hereditary": z2.hereditary,
            "involution_closed": z2.involution_closed,
            "free": z2.free,
            "complex": complex,
        }),
        code,
    ))
}
