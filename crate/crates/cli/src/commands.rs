use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use burnhom::burning::{
    burning_map, extremal_path_report, minimal_b_burned_subgraphs, BurnedGraph, ExtremalKind, SizeGuard, SourcePrefix,
};
use burnhom::complex::configuration_space;
use burnhom::format::{self, to_json, BurningsDocument, ComplexDocument, HomologyDocument, SCHEMA_VERSION};
use burnhom::graph::classify;
use burnhom::verify::{run_checks, Status, CHECKS};
use burnhom::{burning_number, enumerate_burnings, homology, validate_burning, Coefficients, Graph, SourceSequence};
use serde_json::json;

use crate::{Command, Format, GlobalArgs, GraphArg};

/// Rendered output, and whether a check it reports on failed.
pub struct Output {
    pub text: String,
    pub check_failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, check_failed: false }
    }
}

/// Everything that makes the invocation itself unusable.
pub type CliError = String;

struct Config {
    format: Format,
    base: usize,
    max_vertices: Option<usize>,
    max_edges: Option<usize>,
}

impl Config {
    fn from_args(args: &GlobalArgs) -> Self {
        Self {
            format: if args.json { Format::Json } else { args.format },
            base: usize::from(args.one_based),
            max_vertices: args.max_vertices.map(|v| v as usize),
            max_edges: args.max_edges.map(|v| v as usize),
        }
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }

    /// Loads the graph and applies the vertex guard (`default` unless overridden).
    fn graph(&self, arg: &GraphArg, default: usize) -> Result<Graph, CliError> {
        let g = load_graph(&arg.graph)?;
        let limit = self.max_vertices.unwrap_or(default);
        if g.vertex_count() > limit {
            return Err(format!(
                "graph has {} vertices, above the limit of {limit} for this command (raise it with --max-vertices)",
                g.vertex_count()
            ));
        }
        Ok(g)
    }

    fn sources(&self, text: &str, g: &Graph) -> Result<SourceSequence, CliError> {
        let raw: SourceSequence = text.parse().map_err(|e| format!("bad source sequence `{text}`: {e}"))?;
        let shifted = raw
            .as_slice()
            .iter()
            .map(|&v| v.checked_sub(self.base).ok_or(format!("vertex label {v} is below the index base")))
            .collect::<Result<Vec<_>, _>>()?;
        for &v in &shifted {
            g.check_vertex(v).map_err(|_| format!("vertex {} is not in the graph", v + self.base))?;
        }
        SourceSequence::new(shifted).map_err(|e| e.to_string())
    }

    fn label(&self, v: usize) -> usize {
        v + self.base
    }

    fn labels(&self, vs: impl IntoIterator<Item = usize>) -> Vec<usize> {
        vs.into_iter().map(|v| self.label(v)).collect()
    }
}

fn load_graph(input: &str) -> Result<Graph, CliError> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("reading standard input: {e}"))?;
        s
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| format!("reading {input}: {e}"))?
    } else {
        input.to_string()
    };
    format::parse_graph(&text).map_err(|e| e.to_string())
}

fn json_text<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    to_json(value).map_err(|e| e.to_string())
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

const ENUMERATION_LIMIT: usize = 10;
const BURNING_NUMBER_LIMIT: usize = 12;

pub fn run(command: Command, args: &GlobalArgs) -> Result<Output, CliError> {
    let cfg = Config::from_args(args);
    match command {
        Command::Burnings(arg) => burnings(&cfg, &arg),
        Command::BurningNumber(arg) => {
            let b = burning_number(&cfg.graph(&arg, BURNING_NUMBER_LIMIT)?);
            Ok(Output::ok(if cfg.json() {
                json_text(&json!({ "burning_number": b, "schema": SCHEMA_VERSION }))?
            } else {
                format!("{b}\n")
            }))
        }
        Command::Validate { graph, sources } => validate(&cfg, &graph, &sources),
        Command::Complex(arg) => {
            let c = configuration_space(&cfg.graph(&arg, ENUMERATION_LIMIT)?);
            if cfg.json() {
                return Ok(Output::ok(json_text(&ComplexDocument::new(&c, cfg.base))?));
            }
            let mut out = format!("vertices: {}\ndimension: {}\nfacets: {}\n", c.vertex_count(), c.dimension(), c.facets().len());
            for f in c.facets() {
                let _ = writeln!(out, "  {{{}}}", join(&cfg.labels(f.iter())));
            }
            Ok(Output::ok(out))
        }
        Command::Homology { graph, reduced, coeff } => {
            let coefficients: Coefficients = coeff.parse().map_err(|e: burnhom::homology::HomologyError| e.to_string())?;
            let g = cfg.graph(&graph, ENUMERATION_LIMIT)?;
            let groups = homology(&configuration_space(&g), reduced, coefficients);
            if cfg.json() {
                let doc = HomologyDocument::new(&groups, reduced, coefficients).map_err(|e| e.to_string())?;
                return Ok(Output::ok(json_text(&doc)?));
            }
            let ring = match coefficients {
                Coefficients::Integers => "Z".to_string(),
                Coefficients::Rationals => "Q".to_string(),
                Coefficients::ModP(p) => format!("F_{}", p.modulus()),
            };
            let mut out = String::new();
            for (q, h) in groups.iter().enumerate() {
                let shown = match (coefficients, h.free_rank) {
                    (Coefficients::Integers, _) => h.to_string(),
                    (_, 0) => "0".to_string(),
                    (_, 1) => ring.clone(),
                    (_, r) => format!("{ring}^{r}"),
                };
                let _ = writeln!(out, "H{}_{q} = {shown}", if reduced { "~" } else { "" });
            }
            Ok(Output::ok(out))
        }
        Command::MinimalSubgraphs { graph, sources, any_prefix } => minimal(&cfg, &graph, &sources, any_prefix),
        Command::Witness { kind, param } => witness(&cfg, &kind, param),
        Command::Verify { checks } => verify(&cfg, &checks),
    }
}

fn burnings(cfg: &Config, arg: &GraphArg) -> Result<Output, CliError> {
    let g = cfg.graph(arg, ENUMERATION_LIMIT)?;
    let all = enumerate_burnings(&g);
    if cfg.json() {
        return Ok(Output::ok(json_text(&BurningsDocument::new(&g, &all, cfg.base))?));
    }
    let mut out = format!("{} burnings\n", all.len());
    for b in &all {
        let hom = if burning_map(&g, b).is_homomorphism() { "  homomorphism" } else { "" };
        let _ = writeln!(
            out,
            "sources {}  end {}  times {}{hom}",
            join(&cfg.labels(b.sources().as_slice().iter().copied())),
            b.end_time(),
            join(b.lambda())
        );
    }
    Ok(Output::ok(out))
}

fn validate(cfg: &Config, arg: &GraphArg, sources: &str) -> Result<Output, CliError> {
    let g = load_graph(&arg.graph)?;
    let s = cfg.sources(sources, &g)?;
    let shown = cfg.labels(s.as_slice().iter().copied());
    match validate_burning(&g, &s) {
        Ok(b) => {
            let hom = burning_map(&g, &b).is_homomorphism();
            let text = if cfg.json() {
                json_text(&json!({
                    "end_time": b.end_time(),
                    "index_base": cfg.base,
                    "is_homomorphism": hom,
                    "lambda": b.lambda(),
                    "schema": SCHEMA_VERSION,
                    "sources": shown,
                    "valid": true,
                }))?
            } else {
                let times: Vec<String> =
                    g.vertices().map(|v| format!("{}:{}", cfg.label(v), b.time_of(v))).collect();
                format!(
                    "valid\nend time: {}\ntimes: {}\nhomomorphism: {}\n",
                    b.end_time(),
                    times.join(" "),
                    if hom { "yes" } else { "no" }
                )
            };
            Ok(Output::ok(text))
        }
        Err(e) => {
            let text = if cfg.json() {
                json_text(&json!({
                    "error": e.to_string(),
                    "index_base": cfg.base,
                    "schema": SCHEMA_VERSION,
                    "sources": shown,
                    "valid": false,
                }))?
            } else {
                format!("invalid: {e}\n")
            };
            Ok(Output { text, check_failed: true })
        }
    }
}

fn minimal(cfg: &Config, arg: &GraphArg, sources: &str, any_prefix: bool) -> Result<Output, CliError> {
    let defaults = SizeGuard::default();
    let guard = SizeGuard {
        max_vertices: cfg.max_vertices.unwrap_or(defaults.max_vertices),
        max_edges: cfg.max_edges.unwrap_or(defaults.max_edges),
    };
    let g = load_graph(&arg.graph)?;
    guard.check(g.vertex_count(), g.edge_count()).map_err(|e| e.to_string())?;
    let s = cfg.sources(sources, &g)?;
    let target = BurnedGraph::new(g, &s).map_err(|e| e.to_string())?;
    let policy = if any_prefix { SourcePrefix::Any } else { SourcePrefix::Full };
    let found = minimal_b_burned_subgraphs(&target, policy, guard).map_err(|e| e.to_string())?;
    let rows: Vec<_> = found
        .iter()
        .map(|w| {
            let edges: Vec<[usize; 2]> = w.subgraph.edges().iter().map(|&(u, v)| [cfg.label(u), cfg.label(v)]).collect();
            let tree = w.subgraph.to_graph().map(|(h, _)| classify(&h).tree).unwrap_or(false);
            (cfg.labels(w.subgraph.vertices().iter()), edges, cfg.labels(w.sources.as_slice().iter().copied()), tree)
        })
        .collect();
    if cfg.json() {
        let subgraphs: Vec<_> = rows
            .iter()
            .map(|(vs, es, ss, tree)| json!({ "edges": es, "is_tree": tree, "sources": ss, "vertices": vs }))
            .collect();
        return Ok(Output::ok(json_text(&json!({
            "count": rows.len(),
            "index_base": cfg.base,
            "schema": SCHEMA_VERSION,
            "sources": cfg.labels(s.as_slice().iter().copied()),
            "subgraphs": subgraphs,
        }))?));
    }
    let mut out = format!("{} minimal subgraphs\n", rows.len());
    for (vs, es, ss, tree) in &rows {
        let edges: Vec<String> = es.iter().map(|[u, v]| format!("{u}-{v}")).collect();
        let _ = writeln!(
            out,
            "vertices {{{}}}  edges {{{}}}  sources {}  {}",
            join(vs),
            edges.join(","),
            join(ss),
            if *tree { "tree" } else { "not a tree" }
        );
    }
    Ok(Output::ok(out))
}

fn witness(cfg: &Config, kind: &str, param: usize) -> Result<Output, CliError> {
    let kind: ExtremalKind = kind.parse()?;
    if param == 0 {
        return Err("the parameter must be at least 1".into());
    }
    let Some(r) = extremal_path_report(kind, param) else {
        return Err(format!("no witness for {kind} at {param}"));
    };
    let sources = cfg.labels(r.witness.sources().as_slice().iter().copied());
    let text = if cfg.json() {
        json_text(&json!({
            "closed_form": r.closed_form,
            "end_time": r.witness.end_time(),
            "index_base": cfg.base,
            "is_homomorphism": r.is_homomorphism,
            "kind": kind.to_string(),
            "lambda": r.witness.lambda(),
            "n": r.n,
            "param": param,
            "schema": SCHEMA_VERSION,
            "sources": sources,
        }))?
    } else {
        format!(
            "{kind} at {param}: n = {}\nsources {}  end {}  times {}\nhomomorphism: {}\nwitness: {}\n",
            r.n,
            join(&sources),
            r.witness.end_time(),
            join(r.witness.lambda()),
            if r.is_homomorphism { "yes" } else { "no" },
            if r.closed_form { "closed form" } else { "search" }
        )
    };
    Ok(Output::ok(text))
}

fn verify(cfg: &Config, checks: &[String]) -> Result<Output, CliError> {
    let selected: Option<Vec<&str>> = if checks.iter().any(|c| c == "all") {
        None
    } else {
        for id in checks {
            if !CHECKS.iter().any(|c| c.id == id) {
                let known: Vec<&str> = CHECKS.iter().map(|c| c.id).collect();
                return Err(format!("unknown check `{id}`; known checks: all, {}", known.join(", ")));
            }
        }
        Some(checks.iter().map(String::as_str).collect())
    };
    let report = run_checks(selected.as_deref());
    let text = if cfg.json() {
        json_text(&report)?
    } else {
        let mut out = String::new();
        for c in &report.checks {
            let _ = writeln!(out, "{} {}: {}", c.status, c.id, c.claim);
            match (&c.status, &c.counterexample) {
                (Status::Fail, Some(example)) => {
                    let _ = writeln!(out, "    counterexample: {example}");
                }
                (Status::Pass, _) => {
                    let _ = writeln!(out, "    {}", c.details);
                }
                _ => {}
            }
        }
        let _ = writeln!(out, "{} passed, {} failed", report.passed, report.failed);
        out
    };
    Ok(Output { text, check_failed: !report.all_passed() })
}
