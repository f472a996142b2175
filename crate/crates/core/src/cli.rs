//! Command-line front end. [`run`] takes the argument vector and two output
//! streams and returns the process exit code: 0 on success, 1 on a domain
//! error (for instance a non-graphic sequence), 2 on a usage error.
//! Errors are written as a single `ERROR <code>: <message>` line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bound_report, BoundReport};
use crate::dpg::{grow, DeltaPolicy, GrowthConfig, MatchingPolicy};
use crate::enumeration::{
    conjecture_csv, conjecture_scan, enumerate_realizations, nu_bar_sequence, nu_star_brute, EnumerationCaps,
};
use crate::error::Error;
use crate::families::{make_family, Family};
use crate::graph::Graph;
use crate::graphicality::{delta_star, extension_feasible, is_graphic_eg, nu_star, realize_hh};
use crate::matching::{matching_number, MIN_MAXIMAL_CAP};
use crate::seq::DegreeSequence;

#[derive(Debug, Parser)]
#[command(name = "degmatch", version, about = "Degree sequences, realizations and matching bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the primary output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long = "rng-seed", global = true, default_value_t = 0)]
    rng_seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Inline comma-separated degrees, e.g. `3,2,2,1`.
    #[arg(long)]
    seq: Option<String>,
    #[arg(long = "seq-file")]
    seq_file: Option<PathBuf>,
    /// Edge-list file; its degree sequence is used where a sequence is expected.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide graphicality.
    Check(Input),
    /// Build the Havel–Hakimi realization.
    Realize(Input),
    /// Report every degree-sequence lower bound.
    Bounds(Input),
    /// Largest even δ with d ∘ δ graphic.
    DeltaStar(Input),
    /// Maximum matching number over all realizations.
    NuStar(Input),
    /// Whether d ∘ δ is graphic.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        delta: usize,
    },
    /// Run degree-preserving growth from a graph (or the realization of a sequence).
    Grow {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        /// `fixed:<δ>`, `random` or `max`.
        #[arg(long, default_value = "random")]
        policy: String,
        #[arg(long, value_enum, default_value_t = MatchingArg::Random)]
        matching: MatchingArg,
    },
    /// Generate a named graph family as an edge list.
    Family {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Enumerate every labelled realization of a small sequence.
    Enumerate {
        #[command(flatten)]
        input: Input,
        /// Raise the vertex cap (and lift the degree-sum cap accordingly).
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
    /// Compare ν̄(d) with ℓ* and k* over all graphic sequences up to --max-n.
    ScanConjecture {
        #[arg(long = "max-n", default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatchingArg {
    Random,
    FirstFound,
    MaxDegree,
}

impl From<MatchingArg> for MatchingPolicy {
    fn from(m: MatchingArg) -> Self {
        match m {
            MatchingArg::Random => MatchingPolicy::Random,
            MatchingArg::FirstFound => MatchingPolicy::FirstFound,
            MatchingArg::MaxDegree => MatchingPolicy::MaxDegreeCovering,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Usage(msg),
            other => Failure::Domain(other),
        }
    }
}

/// What a command produced: primary output, plus a non-zero exit for
/// verdict-style commands that still print a result.
struct Outcome {
    body: String,
    exit: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, exit: 0 }
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

enum Source {
    Sequence(DegreeSequence),
    Graph(Graph),
}

impl Input {
    fn resolve(&self) -> Result<Source, Failure> {
        if let Some(s) = &self.seq {
            return Ok(Source::Sequence(s.parse()?));
        }
        if let Some(p) = &self.seq_file {
            let text = read_file(p)?;
            let body: String =
                text.lines().filter(|l| !l.trim_start().starts_with('#')).collect::<Vec<_>>().join(",");
            let cleaned: Vec<&str> = body.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
            return Ok(Source::Sequence(cleaned.join(",").parse()?));
        }
        if let Some(p) = &self.graph {
            return Ok(Source::Graph(Graph::parse_edge_list(&read_file(p)?)?));
        }
        Err(Failure::Usage("one of --seq, --seq-file, --graph is required".into()))
    }

    fn sequence(&self) -> Result<DegreeSequence, Failure> {
        Ok(match self.resolve()? {
            Source::Sequence(d) => d,
            Source::Graph(g) => g.degree_sequence(),
        })
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn quoted(d: &DegreeSequence) -> String {
    format!("\"{d}\"")
}

#[derive(Serialize)]
struct CheckOut {
    sequence: String,
    graphic: bool,
    parity_ok: bool,
    failing_k: Option<usize>,
}

fn cmd_check(input: &Input, format: Format) -> Result<Outcome, Failure> {
    let d = input.sequence()?;
    let v = is_graphic_eg(&d);
    let body = match format {
        Format::Json => json(&CheckOut {
            sequence: d.to_string(),
            graphic: v.is_graphic,
            parity_ok: v.parity_ok,
            failing_k: v.failing_k,
        }),
        Format::Csv => format!(
            "sequence,graphic,parity_ok,failing_k\n{},{},{},{}\n",
            quoted(&d),
            v.is_graphic,
            v.parity_ok,
            v.failing_k.map(|k| k.to_string()).unwrap_or_default()
        ),
        Format::Text => match (v.is_graphic, v.failing_k) {
            (true, _) => "graphic\n".to_string(),
            (false, Some(k)) => format!("not graphic (Erdős–Gallai fails at k={k})\n"),
            (false, None) => "not graphic (odd degree sum)\n".to_string(),
        },
    };
    Ok(Outcome { body, exit: if v.is_graphic { 0 } else { 1 } })
}

fn graph_body(g: &Graph, format: Format) -> String {
    match format {
        Format::Json => json(g),
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for (u, v) in g.edges() {
                s.push_str(&format!("{u},{v}\n"));
            }
            s
        }
        Format::Text => g.to_edge_list(),
    }
}

fn cmd_realize(input: &Input, format: Format) -> Result<Outcome, Failure> {
    let g = realize_hh(&input.sequence()?)?;
    Ok(Outcome::ok(graph_body(&g, format)))
}

#[derive(Serialize)]
struct BoundsOut {
    #[serde(flatten)]
    report: BoundReport,
    nu_star: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu: Option<usize>,
}

fn cmd_bounds(input: &Input, format: Format) -> Result<Outcome, Failure> {
    let (d, nu) = match input.resolve()? {
        Source::Sequence(d) => (d, None),
        Source::Graph(g) => {
            let nu = (g.vertex_count() <= EXACT_NU_CAP).then(|| matching_number(&g));
            (g.degree_sequence(), nu)
        }
    };
    let report = bound_report(&d)?;
    let nu_star = if report.m == 0 { 0 } else { nu_star(&d)? };
    let out = BoundsOut { report, nu_star, nu };
    let body = match format {
        Format::Json => json(&out),
        Format::Csv => {
            let r = &out.report;
            let mut s = String::from(
                "sequence,n,m,max_degree,k_star,ell_star,noP3,vizing_num,vizing_den,vizing_ceil,posa,zeros_stripped,nu_star",
            );
            if out.nu.is_some() {
                s.push_str(",nu");
            }
            s.push_str(&format!(
                "\n\"{}\",{},{},{},{},{},{},{},{},{},{},{},{}",
                r.sequence,
                r.n,
                r.m,
                r.max_degree,
                r.k_star,
                r.ell_star,
                r.no_p3,
                r.vizing_num,
                r.vizing_den,
                r.vizing_ceil,
                r.posa,
                r.zeros_stripped,
                out.nu_star
            ));
            if let Some(nu) = out.nu {
                s.push_str(&format!(",{nu}"));
            }
            s.push('\n');
            s
        }
        Format::Text => {
            let r = &out.report;
            let mut s = format!("sequence        {}\n", r.sequence);
            s.push_str(&format!("n, m, max degree {}, {}, {}\n", r.n, r.m, r.max_degree));
            s.push_str(&format!("k_star          {}\n", r.k_star));
            s.push_str(&format!("ell_star        {}\n", r.ell_star));
            s.push_str(&format!("noP3            {}\n", r.no_p3));
            s.push_str(&format!(
                "vizing          {}/{} (ceil {})\n",
                r.vizing_num, r.vizing_den, r.vizing_ceil
            ));
            s.push_str(&format!("posa            {}\n", r.posa));
            s.push_str(&format!("nu_star         {}\n", out.nu_star));
            if let Some(nu) = out.nu {
                s.push_str(&format!("nu              {nu}\n"));
            }
            if r.zeros_stripped {
                s.push_str("note            zero degrees were dropped\n");
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

/// Largest graph for which `bounds --graph` also reports the exact ν(G).
pub const EXACT_NU_CAP: usize = 5000;

#[derive(Serialize)]
struct NuStarOut {
    nu_star: usize,
    delta_star: usize,
}

fn cmd_delta_star(input: &Input, format: Format) -> Result<Outcome, Failure> {
    let ds = delta_star(&input.sequence()?)?;
    let body = match format {
        Format::Json => json(&serde_json::json!({ "delta_star": ds })),
        Format::Csv => format!("delta_star\n{ds}\n"),
        Format::Text => format!("delta_star {ds}\n"),
    };
    Ok(Outcome::ok(body))
}

fn cmd_nu_star(input: &Input, format: Format) -> Result<Outcome, Failure> {
    let d = input.sequence()?;
    let out = NuStarOut { nu_star: nu_star(&d)?, delta_star: delta_star(&d)? };
    let body = match format {
        Format::Json => json(&out),
        Format::Csv => format!("nu_star,delta_star\n{},{}\n", out.nu_star, out.delta_star),
        Format::Text => format!("nu_star {}\ndelta_star {}\n", out.nu_star, out.delta_star),
    };
    Ok(Outcome::ok(body))
}

#[derive(Serialize)]
struct ExtendOut {
    delta: usize,
    feasible: bool,
    augmented: String,
}

fn cmd_extend(input: &Input, delta: usize, format: Format) -> Result<Outcome, Failure> {
    let d = input.sequence()?;
    let feasible = extension_feasible(&d, delta)?;
    let out = ExtendOut { delta, feasible, augmented: d.augment(delta)?.to_string() };
    let body = match format {
        Format::Json => json(&out),
        Format::Csv => {
            format!("delta,feasible,augmented\n{},{},\"{}\"\n", out.delta, out.feasible, out.augmented)
        }
        Format::Text => format!(
            "{} ∘ {} = {} is {}graphic\n",
            d,
            delta,
            out.augmented,
            if feasible { "" } else { "not " }
        ),
    };
    Ok(Outcome::ok(body))
}

fn parse_policy(s: &str) -> Result<DeltaPolicy, Failure> {
    match s {
        "random" => Ok(DeltaPolicy::RandomFeasible),
        "max" => Ok(DeltaPolicy::MaxFeasible),
        _ => s
            .strip_prefix("fixed:")
            .and_then(|x| x.parse().ok())
            .map(DeltaPolicy::Fixed)
            .ok_or_else(|| Failure::Usage(format!("bad --policy {s:?}; use fixed:<δ>, random or max"))),
    }
}

fn cmd_grow(
    input: &Input,
    steps: usize,
    policy: &str,
    matching: MatchingArg,
    seed: u64,
    format: Format,
) -> Result<Outcome, Failure> {
    let g0 = match input.resolve()? {
        Source::Graph(g) => g,
        Source::Sequence(d) => realize_hh(&d)?,
    };
    let config = GrowthConfig::new(parse_policy(policy)?).with_matching(matching.into());
    let trace = grow(&g0, steps, config, seed);
    let body = match format {
        Format::Json => json(&trace),
        Format::Csv => trace.to_csv(),
        Format::Text => {
            let mut s = format!(
                "seed graph: n={} m={} d={}\n",
                trace.seed_graph.n, trace.seed_graph.m, trace.seed_graph.degree_sequence
            );
            for st in &trace.steps {
                s.push_str(&format!(
                    "step {}: delta={} new_vertex={} n={} m={}\n",
                    st.step_index, st.delta, st.new_vertex, st.n, st.m
                ));
            }
            if trace.halted_early {
                s.push_str("halted: no admissible delta\n");
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

#[allow(clippy::too_many_arguments)]
fn family_from_args(
    kind: &str,
    n: Option<usize>,
    t: Option<usize>,
    l: Option<usize>,
    r: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    k: Option<usize>,
) -> Result<Family, Failure> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("--kind {kind} requires --{flag}")))
    };
    Ok(match kind {
        "half-graph" => Family::HalfGraph { n: need(n, "n")? },
        "windmill" | "friendship" => {
            Family::Windmill { t: need(t, "t")?, l: if kind == "friendship" { 3 } else { need(l, "l")? } }
        }
        "complete" => Family::Complete { n: need(n, "n")? },
        "cycle" => Family::Cycle { n: need(n, "n")? },
        "path" => Family::Path { n: need(n, "n")? },
        "regular-circulant" | "regular" => Family::RegularCirculant { n: need(n, "n")?, r: need(r, "r")? },
        "complete-bipartite" => Family::CompleteBipartite { a: need(a, "a")?, b: need(b, "b")? },
        "disjoint-triangles" => Family::DisjointTriangles { k: need(k, "k")? },
        "disjoint-cliques" => Family::DisjointCliques { k: need(k, "k")?, l: need(l, "l")? },
        other => return Err(Failure::Usage(format!("unknown family {other:?}"))),
    })
}

#[derive(Serialize)]
struct EnumerateOut {
    sequence: String,
    count: usize,
    nu_star: Option<usize>,
    nu_bar: Option<usize>,
}

fn cmd_enumerate(input: &Input, max_n: Option<usize>, format: Format) -> Result<Outcome, Failure> {
    let d = input.sequence()?;
    let caps = max_n.map(EnumerationCaps::complete).unwrap_or_default();
    let graphs: Vec<Graph> = enumerate_realizations(&d, caps)?.collect();
    let graphic = !graphs.is_empty();
    let positive = !d.is_all_zero();
    let nu_star = (graphic && positive).then(|| nu_star_brute(&d, caps)).transpose()?;
    let nu_bar = (graphic && d.len() <= MIN_MAXIMAL_CAP).then(|| nu_bar_sequence(&d, caps)).transpose()?;
    let out = EnumerateOut { sequence: d.to_string(), count: graphs.len(), nu_star, nu_bar };
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    let body = match format {
        Format::Json => json(&out),
        Format::Csv => format!(
            "sequence,count,nu_star,nu_bar\n{},{},{},{}\n",
            quoted(&d),
            out.count,
            opt(out.nu_star),
            opt(out.nu_bar)
        ),
        Format::Text => {
            let mut s = String::new();
            for g in &graphs {
                let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                s.push_str(&edges.join(" "));
                s.push('\n');
            }
            s.push_str(&format!(
                "# {} realizations; nu_star={} nu_bar={}\n",
                out.count,
                opt(out.nu_star),
                opt(out.nu_bar)
            ));
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn cmd_scan(max_n: usize, format: Format) -> Result<Outcome, Failure> {
    let default = EnumerationCaps::default();
    if max_n > default.max_n {
        return Err(
            Error::CapExceeded { what: "conjecture scan (n)", actual: max_n, cap: default.max_n }.into()
        );
    }
    let rows = conjecture_scan(max_n, EnumerationCaps::complete(max_n))?;
    let body = match format {
        Format::Json => json(&rows),
        Format::Csv | Format::Text => conjecture_csv(&rows),
    };
    Ok(Outcome::ok(body))
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Check(i) => cmd_check(i, f),
        Command::Realize(i) => cmd_realize(i, f),
        Command::Bounds(i) => cmd_bounds(i, f),
        Command::DeltaStar(i) => cmd_delta_star(i, f),
        Command::NuStar(i) => cmd_nu_star(i, f),
        Command::Extend { input, delta } => cmd_extend(input, *delta, f),
        Command::Grow { input, steps, policy, matching } => {
            cmd_grow(input, *steps, policy, *matching, cli.rng_seed, f)
        }
        Command::Family { kind, n, t, l, r, a, b, k } => {
            let family = family_from_args(kind, *n, *t, *l, *r, *a, *b, *k)?;
            Ok(Outcome::ok(graph_body(&make_family(family)?, f)))
        }
        Command::Enumerate { input, max_n } => cmd_enumerate(input, *max_n, f),
        Command::ScanConjecture { max_n } => cmd_scan(*max_n, f),
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(stderr, "ERROR usage: {first}");
            return 2;
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "ERROR usage: {msg}");
            return 2;
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "ERROR {}: {e}", e.code());
            return 1;
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &outcome.body) {
            let _ = writeln!(stderr, "ERROR io: cannot write {}: {e}", path.display());
            return 2;
        }
    } else {
        let _ = stdout.write_all(outcome.body.as_bytes());
    }
    outcome.exit
}
