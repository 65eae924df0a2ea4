//! Finite simple undirected graphs and the graph-level constructions the
//! burning machinery is built from: distances, closed neighborhoods, induced
//! unions, complements, disjoint sums and graph maps.
//!
//! Vertices are always the contiguous range `0..vertex_count`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("subgraphs live in different ambient graphs")]
    MismatchedAmbient,
    #[error("induced union of an empty family")]
    EmptyUnion,
    #[error("edge {{{0}, {1}}} is not in the ambient graph")]
    EdgeNotInAmbient(usize, usize),
    #[error("edge {{{0}, {1}}} has an endpoint outside the subgraph")]
    DanglingEdge(usize, usize),
    #[error("vertex function has {got} entries, domain has {expected} vertices")]
    MapNotTotal { expected: usize, got: usize },
    #[error("edge {{{0}, {1}}} maps to a non-adjacent pair of distinct vertices")]
    NotAGraphMap(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
}

/// Normalizes an unordered pair to `(min, max)`.
#[inline]
pub fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph on the vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Repeated edges collapse (set semantics).
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert(edge_key(u, v));
        }
        Ok(Self::from_edge_set(vertex_count, set))
    }

    fn from_edge_set(vertex_count: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Self { vertex_count, edges, neighbors }
    }

    pub fn edgeless(vertex_count: usize) -> Result<Self, GraphError> {
        Self::new(vertex_count, std::iter::empty())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count
    }

    /// Edges as normalized `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&edge_key(u, v))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count })
        }
    }

    /// Hop counts from `source`; `None` marks unreachable vertices.
    pub fn bfs_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_from(0).iter().all(Option::is_some)
    }

    /// The subgraph view of the whole graph.
    pub fn as_subgraph(&self) -> Subgraph<'_> {
        Subgraph {
            ambient: self,
            vertices: VertexSet::full(self.vertex_count),
            edges: self.edges.clone(),
        }
    }
}

/// A sorted, duplicate-free list of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn singleton(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.0.iter().all(|&v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

/// A subgraph of a fixed ambient graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph<'a> {
    ambient: &'a Graph,
    vertices: VertexSet,
    edges: BTreeSet<(usize, usize)>,
}

impl<'a> Subgraph<'a> {
    pub fn new<I>(ambient: &'a Graph, vertices: VertexSet, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        for v in vertices.iter() {
            ambient.check_vertex(v)?;
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            let e = edge_key(u, v);
            if !ambient.edges.contains(&e) {
                return Err(GraphError::EdgeNotInAmbient(e.0, e.1));
            }
            if !vertices.contains(e.0) || !vertices.contains(e.1) {
                return Err(GraphError::DanglingEdge(e.0, e.1));
            }
            set.insert(e);
        }
        Ok(Self { ambient, vertices, edges: set })
    }

    /// The induced subgraph on `vertices`: every ambient edge between them.
    pub fn induced(ambient: &'a Graph, vertices: VertexSet) -> Result<Self, GraphError> {
        for v in vertices.iter() {
            ambient.check_vertex(v)?;
        }
        let edges = ambient
            .edges
            .iter()
            .filter(|&&(u, v)| vertices.contains(u) && vertices.contains(v))
            .copied()
            .collect();
        Ok(Self { ambient, vertices, edges })
    }

    pub fn ambient(&self) -> &'a Graph {
        self.ambient
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn is_induced(&self) -> bool {
        self.ambient
            .edges
            .iter()
            .filter(|&&(u, v)| self.vertices.contains(u) && self.vertices.contains(v))
            .all(|e| self.edges.contains(e))
    }

    /// Whether `self ⊂ other` as subgraphs (vertices and edges).
    pub fn is_subgraph_of(&self, other: &Subgraph<'_>) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }

    /// Re-indexes the subgraph as a standalone graph on `0..len`. The returned
    /// vector maps each new index to its ambient label.
    pub fn to_graph(&self) -> Result<(Graph, Vec<usize>), GraphError> {
        let labels = self.vertices.as_slice().to_vec();
        let local = |v: usize| labels.binary_search(&v).expect("edge endpoint inside subgraph");
        let g = Graph::new(labels.len(), self.edges.iter().map(|&(u, v)| (local(u), local(v))))?;
        Ok((g, labels))
    }

    pub fn is_connected(&self) -> bool {
        match self.to_graph() {
            Ok((g, _)) => g.is_connected(),
            Err(_) => false,
        }
    }
}

/// Shortest-path length, with unreachable pairs kept distinct from any
/// finite count. `Finite` sorts before `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn within(self, radius: usize) -> bool {
        matches!(self, Distance::Finite(d) if d <= radius)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.dist[u * self.n + v]
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

/// All-pairs hop counts by one breadth-first search per vertex.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = Vec::with_capacity(n * n);
    for s in g.vertices() {
        dist.extend(
            g.bfs_from(s)
                .into_iter()
                .map(|d| d.map_or(Distance::Infinite, Distance::Finite)),
        );
    }
    DistanceMatrix { n, dist }
}

/// The induced subgraph on `{w | d(v, w) <= radius}`.
pub fn closed_neighborhood(g: &Graph, v: usize, radius: usize) -> Result<Subgraph<'_>, GraphError> {
    g.check_vertex(v)?;
    let members = g
        .bfs_from(v)
        .into_iter()
        .enumerate()
        .filter(|(_, d)| matches!(d, Some(d) if *d <= radius))
        .map(|(w, _)| w);
    Subgraph::induced(g, VertexSet::new(members))
}

/// Induced subgraph of the shared ambient graph on the union of the parts'
/// vertex sets.
pub fn induced_union<'a>(parts: &[Subgraph<'a>]) -> Result<Subgraph<'a>, GraphError> {
    let first = parts.first().ok_or(GraphError::EmptyUnion)?;
    let ambient = first.ambient;
    if parts
        .iter()
        .any(|p| !std::ptr::eq(p.ambient, ambient) && p.ambient != ambient)
    {
        return Err(GraphError::MismatchedAmbient);
    }
    let members = VertexSet::new(parts.iter().flat_map(|p| p.vertices.iter()));
    Subgraph::induced(ambient, members)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    Graph::from_edge_set(n, edges)
}

/// `g + h`: the vertices of `h` are shifted past those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.vertex_count();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)))
        .collect();
    Graph::from_edge_set(shift + h.vertex_count(), edges)
}

/// `k·g`, the disjoint union of `k >= 1` copies.
pub fn iterated_sum(g: &Graph, k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter {
            family: "iterated sum",
            reason: "needs at least one copy".into(),
        });
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = disjoint_union(&acc, g);
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub connected: bool,
    pub tree: bool,
    pub bipartite: bool,
    pub components: Vec<VertexSet>,
}

pub fn classify(g: &Graph) -> StructureReport {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut components = Vec::new();
    let mut bipartite = true;
    for root in g.vertices() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut members = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap_or(false);
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        members.push(w);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        components.push(VertexSet::new(members));
    }
    let connected = components.len() == 1;
    StructureReport {
        connected,
        tree: connected && g.edge_count() + 1 == n,
        bipartite,
        components,
    }
}

/// A certified graph map: every edge goes to an edge or collapses to a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphMap {
    vertex_fn: Vec<usize>,
    codomain_size: usize,
    is_homomorphism: bool,
}

impl GraphMap {
    pub fn identity(g: &Graph) -> Self {
        Self {
            vertex_fn: g.vertices().collect(),
            codomain_size: g.vertex_count(),
            is_homomorphism: true,
        }
    }

    pub fn vertex_fn(&self) -> &[usize] {
        &self.vertex_fn
    }

    pub fn apply(&self, v: usize) -> usize {
        self.vertex_fn[v]
    }

    pub fn domain_size(&self) -> usize {
        self.vertex_fn.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    /// No edge collapses.
    pub fn is_homomorphism(&self) -> bool {
        self.is_homomorphism
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain_size];
        self.vertex_fn.iter().all(|&w| !std::mem::replace(&mut seen[w], true))
    }

    /// `other ∘ self`, re-validated against the outer graphs.
    pub fn then(&self, other: &GraphMap, g: &Graph, k: &Graph) -> Result<GraphMap, GraphError> {
        let f: Vec<usize> = self.vertex_fn.iter().map(|&v| other.apply(v)).collect();
        validate_graph_map(&f, g, k)
    }
}

/// Accepts `f` iff each edge of `g` lands on an edge of `h` or collapses.
pub fn validate_graph_map(f: &[usize], g: &Graph, h: &Graph) -> Result<GraphMap, GraphError> {
    if f.len() != g.vertex_count() {
        return Err(GraphError::MapNotTotal { expected: g.vertex_count(), got: f.len() });
    }
    for &w in f {
        h.check_vertex(w)?;
    }
    let mut is_homomorphism = true;
    for &(u, v) in g.edges() {
        let (a, b) = (f[u], f[v]);
        if a == b {
            is_homomorphism = false;
        } else if !h.has_edge(a, b) {
            return Err(GraphError::NotAGraphMap(u, v));
        }
    }
    Ok(GraphMap {
        vertex_fn: f.to_vec(),
        codomain_size: h.vertex_count(),
        is_homomorphism,
    })
}

/// The graph families the builders know about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Edgeless(usize),
    CompleteBipartite(usize, usize),
    /// The 3-cube with vertex `i` adjacent to `i ^ 1`, `i ^ 2`, `i ^ 4`.
    Cube,
    /// `k` disjoint copies of one graph.
    Iterated(usize, Box<NamedGraph>),
    /// Left-to-right disjoint union.
    Sum(Vec<NamedGraph>),
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph, GraphError> {
        fn positive(family: &'static str, n: usize, min: usize) -> Result<(), GraphError> {
            if n < min {
                Err(GraphError::InvalidParameter {
                    family,
                    reason: format!("needs at least {min} vertices, got {n}"),
                })
            } else {
                Ok(())
            }
        }
        match self {
            NamedGraph::Path(n) => {
                positive("path", *n, 1)?;
                Graph::new(*n, (1..*n).map(|i| (i - 1, i)))
            }
            NamedGraph::Cycle(n) => {
                positive("cycle", *n, 3)?;
                Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))
            }
            NamedGraph::Complete(n) => {
                positive("complete", *n, 1)?;
                Ok(complement(&Graph::edgeless(*n)?))
            }
            NamedGraph::Edgeless(n) => {
                positive("edgeless", *n, 1)?;
                Graph::edgeless(*n)
            }
            NamedGraph::CompleteBipartite(n, m) => {
                positive("complete bipartite", *n, 1)?;
                positive("complete bipartite", *m, 1)?;
                let (n, m) = (*n, *m);
                Graph::new(n + m, (0..n).flat_map(|i| (n..n + m).map(move |j| (i, j))))
            }
            NamedGraph::Cube => Graph::new(
                8,
                (0..8usize).flat_map(|i| [1, 2, 4].into_iter().map(move |b| (i, i ^ b))),
            ),
            NamedGraph::Iterated(k, inner) => iterated_sum(&inner.build()?, *k),
            NamedGraph::Sum(parts) => {
                let mut iter = parts.iter();
                let first = iter.next().ok_or(GraphError::InvalidParameter {
                    family: "sum",
                    reason: "needs at least one summand".into(),
                })?;
                iter.try_fold(first.build()?, |acc, p| Ok(disjoint_union(&acc, &p.build()?)))
            }
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Path(n) => write!(f, "path:{n}"),
            NamedGraph::Cycle(n) => write!(f, "cycle:{n}"),
            NamedGraph::Complete(n) => write!(f, "complete:{n}"),
            NamedGraph::Edgeless(n) => write!(f, "edgeless:{n}"),
            NamedGraph::CompleteBipartite(n, m) => write!(f, "bipartite:{n},{m}"),
            NamedGraph::Cube => write!(f, "cube"),
            NamedGraph::Iterated(k, g) => write!(f, "times:{k}:{g}"),
            NamedGraph::Sum(parts) => {
                write!(f, "sum:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        NamedGraph::Path(n).build().unwrap()
    }

    #[test]
    fn builders_match_their_definitions() {
        assert_eq!(path(3).edges().iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let k3 = NamedGraph::Complete(3).build().unwrap();
        assert_eq!(k3.edge_count(), 3);
        let cube = NamedGraph::Cube.build().unwrap();
        assert_eq!((cube.vertex_count(), cube.edge_count()), (8, 12));
        // Edges as drawn in the reference figure.
        for e in [(0, 1), (4, 5), (6, 7), (5, 7), (4, 6), (0, 4), (2, 3), (1, 3), (1, 5), (0, 2), (2, 6), (3, 7)] {
            assert!(cube.has_edge(e.0, e.1), "{e:?}");
        }
        assert!(NamedGraph::Cycle(2).build().is_err());
        assert!(NamedGraph::Path(0).build().is_err());
        assert!(NamedGraph::CompleteBipartite(0, 2).build().is_err());
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, .. })));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distances(&path(3)).get(0, 2), Distance::Finite(2));
        let two = disjoint_union(&path(2), &path(2));
        assert_eq!(distances(&two).get(0, 2), Distance::Infinite);
        let cube = NamedGraph::Cube.build().unwrap();
        assert_eq!(distances(&cube).get(0, 7), Distance::Finite(3));
        assert_eq!(distances(&cube).get(2, 5), Distance::Finite(3));
    }

    #[test]
    fn neighborhood_examples() {
        let p5 = path(5);
        assert_eq!(closed_neighborhood(&p5, 2, 1).unwrap().vertices().as_slice(), &[1, 2, 3]);
        let n0 = closed_neighborhood(&p5, 3, 0).unwrap();
        assert_eq!(n0.vertices().as_slice(), &[3]);
        assert!(n0.edges().is_empty());
        let n2 = closed_neighborhood(&p5, 0, 2).unwrap();
        assert_eq!(n2.vertices().as_slice(), &[0, 1, 2]);
        assert_eq!(n2.edges().iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(closed_neighborhood(&p5, 5, 1).is_err());
    }

    #[test]
    fn induced_union_restores_ambient_edges() {
        let p3 = path(3);
        let a = closed_neighborhood(&p3, 0, 0).unwrap();
        let c = closed_neighborhood(&p3, 2, 0).unwrap();
        let b = closed_neighborhood(&p3, 1, 0).unwrap();
        let ac = induced_union(&[a.clone(), c]).unwrap();
        assert_eq!(ac.vertices().as_slice(), &[0, 2]);
        assert!(ac.edges().is_empty());
        let ab = induced_union(&[a, b]).unwrap();
        assert_eq!(ab.edges().iter().copied().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(induced_union(&[]), Err(GraphError::EmptyUnion));
        let other = path(4);
        let x = closed_neighborhood(&p3, 0, 0).unwrap();
        let y = closed_neighborhood(&other, 0, 0).unwrap();
        assert_eq!(induced_union(&[x, y]), Err(GraphError::MismatchedAmbient));
    }

    #[test]
    fn complement_examples() {
        let k4 = NamedGraph::Complete(4).build().unwrap();
        assert_eq!(complement(&k4), Graph::edgeless(4).unwrap());
        let c = complement(&path(5));
        let expected = [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)];
        assert_eq!(c.edges().iter().copied().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn sums() {
        let s = disjoint_union(&path(2), &path(2));
        assert_eq!(s.edges().iter().copied().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let k = disjoint_union(&NamedGraph::Complete(3).build().unwrap(), &NamedGraph::Complete(4).build().unwrap());
        assert_eq!((k.vertex_count(), k.edge_count()), (7, 3 + 6));
        let pi3 = iterated_sum(&path(2), 3).unwrap();
        assert_eq!((pi3.vertex_count(), pi3.edge_count()), (6, 3));
    }

    #[test]
    fn classification() {
        let k3 = NamedGraph::Complete(3).build().unwrap();
        assert!(!classify(&k3).bipartite);
        let p = classify(&path(6));
        assert!(p.tree && p.bipartite && p.connected);
        let q = classify(&NamedGraph::Cube.build().unwrap());
        assert!(q.bipartite && !q.tree);
        let two = classify(&disjoint_union(&path(2), &path(1)));
        assert!(!two.connected && !two.tree);
        assert_eq!(two.components, vec![VertexSet::new([0, 1]), VertexSet::singleton(2)]);
    }

    #[test]
    fn graph_map_validation() {
        let p2 = path(2);
        let k1 = path(1);
        let constant = validate_graph_map(&[0, 0], &p2, &k1).unwrap();
        assert!(!constant.is_homomorphism());
        let id = GraphMap::identity(&p2);
        assert!(id.is_homomorphism());
        assert_eq!(validate_graph_map(&[0, 2], &path(2), &path(3)), Err(GraphError::NotAGraphMap(0, 1)));
        assert!(matches!(validate_graph_map(&[0], &p2, &k1), Err(GraphError::MapNotTotal { .. })));
    }

    #[test]
    fn subgraph_reindexing() {
        let p5 = path(5);
        let s = Subgraph::new(&p5, VertexSet::new([1, 2, 4]), [(1, 2)]).unwrap();
        let (g, labels) = s.to_graph().unwrap();
        assert_eq!(labels, vec![1, 2, 4]);
        assert_eq!(g.edges().iter().copied().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(!s.is_connected());
        assert!(s.is_induced());
        assert_eq!(Subgraph::new(&p5, VertexSet::new([1]), [(1, 2)]), Err(GraphError::DanglingEdge(1, 2)));
        assert_eq!(Subgraph::new(&p5, VertexSet::new([1, 3]), [(1, 3)]), Err(GraphError::EdgeNotInAmbient(1, 3)));
    }
}
