//! Finite abstract simplicial complexes stored by their facets, and the
//! configuration complex of a graph: the complex generated by the source
//! sets of all its burnings.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use thiserror::Error;

use crate::burning::for_each_burning;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("a complex needs at least one vertex")]
    Empty,
    #[error("facets must be nonempty")]
    EmptyFacet,
    #[error("vertex {vertex} out of range for a complex on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("vertex {0} lies in no facet")]
    UncoveredVertex(usize),
    #[error("vertex function has {got} entries, domain has {expected} vertices")]
    MapNotTotal { expected: usize, got: usize },
    #[error("facet {facet:?} maps to {image:?}, which is not a face of the target")]
    NotSimplicial { facet: Vec<usize>, image: Vec<usize> },
    #[error("complex on {vertices} vertices exceeds the isomorphism search limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

/// Default vertex limit for [`are_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 12;

/// A simplicial complex on `0..vertex_count`, kept as its sorted antichain of
/// facets. Faces are derived on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<VertexSet>,
}

/// The inclusion-maximal members of `sets`, sorted and deduplicated.
fn maximal(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    // Larger sets first so every candidate only needs checking against kept ones.
    all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `generators`; non-maximal generators are absorbed.
    pub fn new<I>(vertex_count: usize, generators: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if vertex_count == 0 {
            return Err(ComplexError::Empty);
        }
        let facets = maximal(generators);
        let mut covered = vec![false; vertex_count];
        for f in &facets {
            if f.is_empty() {
                return Err(ComplexError::EmptyFacet);
            }
            for v in f.iter() {
                if v >= vertex_count {
                    return Err(ComplexError::VertexOutOfRange { vertex: v, vertex_count });
                }
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(ComplexError::UncoveredVertex(v));
        }
        Ok(Self { vertex_count, facets })
    }

    /// The 1-dimensional complex of a graph: its edges plus isolated vertices.
    pub fn from_graph(g: &Graph) -> Self {
        let edges = g.edges().iter().map(|&(u, v)| VertexSet::new([u, v]));
        let points = g.vertices().map(VertexSet::singleton);
        Self::new(g.vertex_count(), edges.chain(points)).expect("graphs are nonempty")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn dimension(&self) -> usize {
        self.facets.iter().map(VertexSet::len).max().unwrap_or(1) - 1
    }

    pub fn is_face(&self, s: &VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// All `q`-dimensional faces in lexicographic order.
    pub fn faces(&self, q: usize) -> Vec<VertexSet> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            if f.len() > q {
                out.extend(f.as_slice().iter().copied().combinations(q + 1).map(VertexSet::from));
            }
        }
        out.into_iter().collect()
    }

    /// Number of faces per dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dimension()).map(|q| self.faces(q).len()).collect()
    }

    pub fn skeleton(&self, n: usize) -> Self {
        let generators = self.facets.iter().flat_map(|f| {
            if f.len() <= n + 1 {
                vec![f.clone()]
            } else {
                f.as_slice().iter().copied().combinations(n + 1).map(VertexSet::from).collect()
            }
        });
        Self::new(self.vertex_count, generators).expect("skeleta keep every vertex")
    }

    /// The graph of the 1-skeleton.
    pub fn one_skeleton_graph(&self) -> Graph {
        let edges = self.faces(1).into_iter().map(|e| (e.as_slice()[0], e.as_slice()[1]));
        Graph::new(self.vertex_count, edges).expect("faces use valid vertices")
    }

    /// Joins every facet to a new apex, numbered `vertex_count`.
    pub fn cone(&self) -> Self {
        let apex = self.vertex_count;
        let facets = self.facets.iter().map(|f| f.union(&VertexSet::singleton(apex)));
        Self::new(self.vertex_count + 1, facets).expect("cone of a complex")
    }

    /// Joins every facet to each of two new poles, numbered `vertex_count`
    /// and `vertex_count + 1`.
    pub fn suspension(&self) -> Self {
        let n = self.vertex_count;
        let facets = self
            .facets
            .iter()
            .flat_map(|f| [f.union(&VertexSet::singleton(n)), f.union(&VertexSet::singleton(n + 1))]);
        Self::new(n + 2, facets).expect("suspension of a complex")
    }

    /// Per vertex: how many facets contain it, and the sorted facet sizes.
    fn vertex_signatures(&self) -> Vec<(usize, Vec<usize>)> {
        let mut sig = vec![(0, Vec::new()); self.vertex_count];
        for f in &self.facets {
            for v in f.iter() {
                sig[v].0 += 1;
                sig[v].1.push(f.len());
            }
        }
        for s in &mut sig {
            s.1.sort_unstable();
        }
        sig
    }
}

/// Distinct burning source sets of `g`, sorted.
pub fn source_sets(g: &Graph) -> Vec<VertexSet> {
    let mut sets = BTreeSet::new();
    for_each_burning(g, |b| {
        sets.insert(b.source_set());
    });
    sets.into_iter().collect()
}

/// The configuration complex: generated by the source sets of all burnings.
pub fn configuration_space(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::new(g.vertex_count(), source_sets(g)).expect("every vertex starts some burning")
}

/// Pairs `(a, b)` of distinct burning source sets with `a ⊂ b`.
pub fn nested_source_sets(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
    let sets = source_sets(g);
    let mut out = Vec::new();
    for a in &sets {
        for b in &sets {
            if a != b && a.is_subset(b) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// A vertex function certified to send simplices to simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    vertex_fn: Vec<usize>,
}

impl SimplicialMap {
    pub fn vertex_fn(&self) -> &[usize] {
        &self.vertex_fn
    }

    pub fn apply(&self, v: usize) -> usize {
        self.vertex_fn[v]
    }

    pub fn image(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.apply(v)).collect()
    }
}

/// Accepts `f` iff the image of every facet of `c1` is a face of `c2`.
pub fn validate_simplicial_map(
    f: &[usize],
    c1: &SimplicialComplex,
    c2: &SimplicialComplex,
) -> Result<SimplicialMap, ComplexError> {
    if f.len() != c1.vertex_count {
        return Err(ComplexError::MapNotTotal { expected: c1.vertex_count, got: f.len() });
    }
    if let Some(&w) = f.iter().find(|&&w| w >= c2.vertex_count) {
        return Err(ComplexError::VertexOutOfRange { vertex: w, vertex_count: c2.vertex_count });
    }
    let map = SimplicialMap { vertex_fn: f.to_vec() };
    for facet in &c1.facets {
        let image = map.image(facet);
        if !c2.is_face(&image) {
            return Err(ComplexError::NotSimplicial { facet: facet.as_slice().to_vec(), image: image.into_vec() });
        }
    }
    Ok(map)
}

/// A vertex bijection carrying the facets of `c1` onto those of `c2`, found
/// by backtracking with vertex signatures as a filter.
pub fn are_isomorphic(
    c1: &SimplicialComplex,
    c2: &SimplicialComplex,
    limit: usize,
) -> Result<Option<Vec<usize>>, ComplexError> {
    let n = c1.vertex_count;
    if n > limit {
        return Err(ComplexError::TooLarge { vertices: n, limit });
    }
    if n != c2.vertex_count || c1.facets.len() != c2.facets.len() {
        return Ok(None);
    }
    let sig1 = c1.vertex_signatures();
    let sig2 = c2.vertex_signatures();
    let count = |sig: &[(usize, Vec<usize>)]| {
        sig.iter().fold(BTreeMap::new(), |mut m, s| {
            *m.entry(s.clone()).or_insert(0usize) += 1;
            m
        })
    };
    if count(&sig1) != count(&sig2) {
        return Ok(None);
    }
    // Visit vertices facet by facet so facets complete early and prune.
    let order: Vec<usize> = c1.facets.iter().flat_map(VertexSet::iter).unique().collect();
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // For each position in `order`, the facets whose last vertex sits there.
    let mut completes: Vec<Vec<&VertexSet>> = vec![Vec::new(); n];
    for f in &c1.facets {
        let last = f.iter().map(|v| rank[v]).max().expect("nonempty facet");
        completes[last].push(f);
    }
    let target: BTreeSet<&VertexSet> = c2.facets.iter().collect();
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];

    fn extend(
        pos: usize,
        order: &[usize],
        sig1: &[(usize, Vec<usize>)],
        sig2: &[(usize, Vec<usize>)],
        completes: &[Vec<&VertexSet>],
        target: &BTreeSet<&VertexSet>,
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for w in 0..used.len() {
            if used[w] || sig1[v] != sig2[w] {
                continue;
            }
            assignment[v] = Some(w);
            used[w] = true;
            let consistent = completes[pos].iter().all(|f| {
                let image: VertexSet = f.iter().map(|u| assignment[u].expect("assigned")).collect();
                target.contains(&image)
            });
            if consistent && extend(pos + 1, order, sig1, sig2, completes, target, assignment, used) {
                return true;
            }
            assignment[v] = None;
            used[w] = false;
        }
        false
    }

    let found = extend(0, &order, &sig1, &sig2, &completes, &target, &mut assignment, &mut used);
    Ok(found.then(|| assignment.into_iter().map(|w| w.expect("bijection")).collect()))
}
