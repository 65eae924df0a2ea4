//! Text and JSON formats: the edge-list graph format, builder expressions
//! such as `sum:path:2,cycle:4`, and versioned JSON documents for burnings,
//! complexes and homology.
//!
//! Every document carries `schema: 1`. Object keys serialize in sorted order
//! (struct fields are declared alphabetically), so output is byte-stable.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burning::{burning_map, validate_burning, Burning, BurningError, SourceSequence};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::graph::{Graph, GraphError, NamedGraph, VertexSet};
use crate::homology::{Coefficients, HomologyGroup};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("empty graph description")]
    NoVertices,
    #[error("bad builder expression `{expr}`: {message}")]
    Builder { expr: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Burning(#[from] BurningError),
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("index base must be 0 or 1, got {0}")]
    IndexBase(usize),
    #[error("vertex label {0} is below the index base")]
    Label(usize),
    #[error("torsion coefficient {0} does not fit in 64 bits")]
    Overflow(String),
    #[error("stored record disagrees with the recomputed one: {0}")]
    Mismatch(&'static str),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Parses the edge-list format: an optional `n <count>` line, then one
/// `u v` pair per line. `#` starts a comment. Without an `n` line the vertex
/// count is one more than the largest index.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_edge = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| FormatError::Line { line, message };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let number = |t: &str| t.parse::<usize>().map_err(|_| err(format!("`{t}` is not a vertex index")));
        match tokens.as_slice() {
            ["n", count] => {
                if declared.is_some() || seen_edge {
                    return Err(err("the `n` line must come first and only once".into()));
                }
                let count = number(count)?;
                if count == 0 {
                    return Err(err("a graph needs at least one vertex".into()));
                }
                declared = Some(count);
            }
            [u, v] => {
                let (u, v) = (number(u)?, number(v)?);
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                if let Some(n) = declared {
                    if u >= n || v >= n {
                        return Err(err(format!("edge {u} {v} exceeds the declared {n} vertices")));
                    }
                }
                edges.push((u, v));
                seen_edge = true;
            }
            _ => return Err(err(format!("expected `u v` or `n <count>`, found `{content}`"))),
        }
    }
    let n = match declared {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().ok_or(FormatError::NoVertices)?,
    };
    Ok(Graph::new(n, edges)?)
}

fn builder_error(expr: &str, message: impl Into<String>) -> FormatError {
    FormatError::Builder { expr: expr.to_string(), message: message.into() }
}

fn parse_count(expr: &str, t: &str) -> Result<usize, FormatError> {
    t.trim().parse().map_err(|_| builder_error(expr, format!("`{t}` is not a count")))
}

/// Parses a builder expression: `path:n`, `cycle:n`, `complete:n`,
/// `edgeless:n`, `bipartite:n,m`, `cube`, `times:k:EXPR`, and
/// `sum:EXPR,EXPR,...` (summands joined left to right).
pub fn parse_builder(expr: &str) -> Result<NamedGraph, FormatError> {
    let expr = expr.trim();
    let (family, rest) = expr.split_once(':').unwrap_or((expr, ""));
    let one = |rest: &str| parse_count(expr, rest);
    match family {
        "path" => Ok(NamedGraph::Path(one(rest)?)),
        "cycle" => Ok(NamedGraph::Cycle(one(rest)?)),
        "complete" => Ok(NamedGraph::Complete(one(rest)?)),
        "edgeless" => Ok(NamedGraph::Edgeless(one(rest)?)),
        "cube" if rest.is_empty() => Ok(NamedGraph::Cube),
        "bipartite" => {
            let (a, b) = rest.split_once(',').ok_or_else(|| builder_error(expr, "expected `bipartite:n,m`"))?;
            Ok(NamedGraph::CompleteBipartite(one(a)?, one(b)?))
        }
        "times" => {
            let (k, inner) = rest.split_once(':').ok_or_else(|| builder_error(expr, "expected `times:k:EXPR`"))?;
            Ok(NamedGraph::Iterated(one(k)?, Box::new(parse_builder(inner)?)))
        }
        "sum" => {
            // A bare number continues the previous summand (`bipartite:2,3`).
            let mut parts: Vec<String> = Vec::new();
            for token in rest.split(',') {
                match parts.last_mut() {
                    Some(last) if !token.is_empty() && token.trim().chars().all(|c| c.is_ascii_digit()) => {
                        last.push(',');
                        last.push_str(token);
                    }
                    _ => parts.push(token.to_string()),
                }
            }
            if parts.iter().any(|p| p.trim().is_empty()) {
                return Err(builder_error(expr, "empty summand"));
            }
            Ok(NamedGraph::Sum(parts.iter().map(|p| parse_builder(p)).collect::<Result<_, _>>()?))
        }
        _ => Err(FormatError::Graph(GraphError::UnknownFamily(family.to_string()))),
    }
}

/// Reads a graph from either a builder expression or edge-list text.
pub fn parse_graph(input: &str) -> Result<Graph, FormatError> {
    let trimmed = input.trim();
    let looks_like_builder =
        !trimmed.contains('\n') && trimmed.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) && !trimmed.starts_with("n ");
    if looks_like_builder {
        Ok(parse_builder(trimmed)?.build()?)
    } else {
        parse_edge_list(input)
    }
}

/// Writes the edge-list format, which [`parse_edge_list`] reads back.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn check_base(base: usize) -> Result<(), FormatError> {
    if base > 1 {
        return Err(FormatError::IndexBase(base));
    }
    Ok(())
}

fn unshift(labels: &[usize], base: usize) -> Result<Vec<usize>, FormatError> {
    labels.iter().map(|&v| v.checked_sub(base).ok_or(FormatError::Label(v))).collect()
}

fn shift(labels: impl IntoIterator<Item = usize>, base: usize) -> Vec<usize> {
    labels.into_iter().map(|v| v + base).collect()
}

/// One burning. `lambda` is indexed by vertex; labels in `sources` are
/// offset by the enclosing document's index base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurningRecord {
    pub end_time: usize,
    pub is_homomorphism: bool,
    pub lambda: Vec<usize>,
    pub sources: Vec<usize>,
}

impl BurningRecord {
    pub fn new(g: &Graph, b: &Burning, base: usize) -> Self {
        Self {
            end_time: b.end_time(),
            is_homomorphism: burning_map(g, b).is_homomorphism(),
            lambda: b.lambda().to_vec(),
            sources: shift(b.sources().as_slice().iter().copied(), base),
        }
    }

    /// Re-validates the sources on `g` and checks the stored fields agree.
    pub fn to_burning(&self, g: &Graph, base: usize) -> Result<Burning, FormatError> {
        check_base(base)?;
        let seq = SourceSequence::new(unshift(&self.sources, base)?)?;
        let b = validate_burning(g, &seq)?;
        if b.lambda() != self.lambda.as_slice() || b.end_time() != self.end_time {
            return Err(FormatError::Mismatch("burning times"));
        }
        if burning_map(g, &b).is_homomorphism() != self.is_homomorphism {
            return Err(FormatError::Mismatch("homomorphism flag"));
        }
        Ok(b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurningsDocument {
    pub burnings: Vec<BurningRecord>,
    pub count: usize,
    pub index_base: usize,
    pub schema: u32,
}

impl BurningsDocument {
    pub fn new(g: &Graph, burnings: &[Burning], base: usize) -> Self {
        Self {
            burnings: burnings.iter().map(|b| BurningRecord::new(g, b, base)).collect(),
            count: burnings.len(),
            index_base: base,
            schema: SCHEMA_VERSION,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub facets: Vec<Vec<usize>>,
    pub index_base: usize,
    pub schema: u32,
    pub vertex_count: usize,
}

impl ComplexDocument {
    pub fn new(c: &SimplicialComplex, base: usize) -> Self {
        Self {
            facets: c.facets().iter().map(|f| shift(f.iter(), base)).collect(),
            index_base: base,
            schema: SCHEMA_VERSION,
            vertex_count: c.vertex_count(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, FormatError> {
        if self.schema != SCHEMA_VERSION {
            return Err(FormatError::Schema(self.schema));
        }
        check_base(self.index_base)?;
        let facets = self
            .facets
            .iter()
            .map(|f| unshift(f, self.index_base).map(VertexSet::from))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SimplicialComplex::new(self.vertex_count, facets)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    /// `Z`, `Q` or `Fp`.
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
}

impl From<Coefficients> for CoefficientRecord {
    fn from(c: Coefficients) -> Self {
        match c {
            Coefficients::Integers => Self { field: "Z".into(), p: None },
            Coefficients::Rationals => Self { field: "Q".into(), p: None },
            Coefficients::ModP(p) => Self { field: "Fp".into(), p: Some(p.modulus()) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyDocument {
    pub coefficients: CoefficientRecord,
    pub groups: Vec<GroupRecord>,
    pub reduced: bool,
    pub schema: u32,
}

impl HomologyDocument {
    pub fn new(groups: &[HomologyGroup], reduced: bool, coefficients: Coefficients) -> Result<Self, FormatError> {
        let groups = groups
            .iter()
            .enumerate()
            .map(|(degree, g)| {
                let torsion = g
                    .torsion
                    .iter()
                    .map(|d| d.to_u64().ok_or_else(|| FormatError::Overflow(d.to_string())))
                    .collect::<Result<_, _>>()?;
                Ok(GroupRecord { degree, free_rank: g.free_rank, torsion })
            })
            .collect::<Result<_, FormatError>>()?;
        Ok(Self { coefficients: coefficients.into(), groups, reduced, schema: SCHEMA_VERSION })
    }

    pub fn to_groups(&self) -> Vec<HomologyGroup> {
        self.groups
            .iter()
            .map(|g| HomologyGroup { free_rank: g.free_rank, torsion: g.torsion.iter().map(|&d| d.into()).collect() })
            .collect()
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String, FormatError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::enumerate_burnings;
    use crate::complex::configuration_space;
    use crate::homology::homology;

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("n 3\n0 1\n1 2").unwrap();
        assert_eq!(g, NamedGraph::Path(3).build().unwrap());
        let g = parse_edge_list("# a path\n0 1 # first edge\n\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(parse_edge_list("n 4\n").unwrap().edge_count(), 0);
        let err = parse_edge_list("0 1\n1 x\n").unwrap_err().to_string();
        assert!(err.starts_with("line 2:"), "{err}");
        assert!(parse_edge_list("n 2\n0 5\n").unwrap_err().to_string().starts_with("line 2:"));
        assert!(parse_edge_list("0 0\n").is_err());
        assert!(matches!(parse_edge_list("# nothing\n"), Err(FormatError::NoVertices)));
        assert!(parse_edge_list("0 1\nn 3\n").is_err());
    }

    #[test]
    fn builders() {
        assert_eq!(parse_graph("path:5").unwrap(), NamedGraph::Path(5).build().unwrap());
        let pi3 = parse_graph("sum:path:2,path:2,path:2").unwrap();
        assert_eq!((pi3.vertex_count(), pi3.edge_count()), (6, 3));
        assert_eq!(pi3, parse_graph("times:3:path:2").unwrap());
        let g = parse_builder("sum:bipartite:2,3,path:2").unwrap();
        assert_eq!(
            g,
            NamedGraph::Sum(vec![NamedGraph::CompleteBipartite(2, 3), NamedGraph::Path(2)])
        );
        for spec in ["cube", "cycle:6", "complete:4", "edgeless:2", "times:2:sum:path:2,complete:1"] {
            assert_eq!(parse_builder(spec).unwrap().to_string(), spec);
        }
        assert!(matches!(parse_graph("wheel:5"), Err(FormatError::Graph(GraphError::UnknownFamily(_)))));
        assert!(parse_graph("path:0").is_err());
        assert!(parse_graph("path:x").is_err());
        assert!(parse_graph("sum:path:2,,path:1").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        for spec in ["cube", "sum:path:3,complete:1", "edgeless:3"] {
            let g = parse_graph(spec).unwrap();
            assert_eq!(parse_graph(&write_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn burning_documents_round_trip() {
        let g = parse_graph("path:5").unwrap();
        let all = enumerate_burnings(&g);
        for base in [0, 1] {
            let doc = BurningsDocument::new(&g, &all, base);
            let text = to_json(&doc).unwrap();
            let back: BurningsDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(back, doc);
            for (record, b) in back.burnings.iter().zip(&all) {
                assert_eq!(&record.to_burning(&g, base).unwrap(), b);
            }
        }
        let mut bad = BurningRecord::new(&g, &all[0], 0);
        bad.lambda[0] = 9;
        assert!(matches!(bad.to_burning(&g, 0), Err(FormatError::Mismatch(_))));
    }

    #[test]
    fn complex_documents() {
        let c = configuration_space(&parse_graph("path:5").unwrap());
        let text = to_json(&ComplexDocument::new(&c, 0)).unwrap();
        assert_eq!(
            text,
            "{\n  \"facets\": [\n    [\n      0,\n      2,\n      4\n    ],\n    [\n      0,\n      3\n    ],\n    [\n      1,\n      3\n    ],\n    [\n      1,\n      4\n    ]\n  ],\n  \"index_base\": 0,\n  \"schema\": 1,\n  \"vertex_count\": 5\n}\n"
        );
        let back: ComplexDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_complex().unwrap(), c);
        let one = ComplexDocument::new(&c, 1);
        assert_eq!(one.facets[0], vec![1, 3, 5]);
        assert_eq!(one.to_complex().unwrap(), c);
    }

    #[test]
    fn homology_documents() {
        let c = configuration_space(&parse_graph("path:5").unwrap());
        let groups = homology(&c, false, Coefficients::Integers);
        let doc = HomologyDocument::new(&groups, false, Coefficients::Integers).unwrap();
        let value: serde_json::Value = serde_json::from_str(&to_json(&doc).unwrap()).unwrap();
        assert_eq!(value["coefficients"]["field"], "Z");
        assert!(value["coefficients"].get("p").is_none());
        assert_eq!(value["groups"][1]["free_rank"], 1);
        assert_eq!(doc.to_groups(), groups);
        let fp = HomologyDocument::new(&groups, true, "p:3".parse().unwrap()).unwrap();
        assert_eq!(fp.coefficients, CoefficientRecord { field: "Fp".into(), p: Some(3) });
    }
}
