//! Burning sequences and their time functions.
//!
//! A sequence `(v_1, ..., v_k)` burns `G` when each `v_j` (`j >= 2`) lies
//! outside `U_j`, the region already reached at step `j` by the earlier
//! sources, and `U_{k+1}` is all of `G`. The burning time `λ(v)` is the first
//! step whose region `𝒩_j` contains `v`.
//!
//! Two independent routes compute these regions: [`filtration`] evaluates the
//! neighborhood unions from the distance matrix, while the search engine in
//! [`search`] spreads a bitset one hop per step. Tests hold them equal.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{distances, validate_graph_map, Graph, GraphError, GraphMap, VertexSet};

pub mod extension;
pub mod extremal;
pub mod morphism;
pub(crate) mod search;
pub mod subgraphs;

pub use extension::{admits_extension, is_burning_extension, ExtensionError, EXTENSION_GUARD};
pub use extremal::{extremal_path_report, find_path_burning, ExtremalKind, ExtremalReport, PathConstraint};
pub use morphism::{compose_morphisms, validate_morphism, BurnedGraph, BurningMorphism, MorphismError};
pub use subgraphs::{is_b_burned, minimal_b_burned_subgraphs, BBurnedWitness, SizeGuard, SourcePrefix, SubgraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurningError {
    #[error("a burning sequence needs at least one source")]
    EmptySequence,
    #[error("source {0} appears twice")]
    RepeatedSource(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// `v_j ∈ U_j`: the source was already reached by the spread of earlier sources.
    #[error("source v_{step} = {vertex} is already burned by the earlier sources (v_j must lie outside U_j)")]
    SourceTooEarly { step: usize, vertex: usize },
    /// `U_{k+1} ≠ G`.
    #[error("the sources leave vertices {unburned:?} unburned (U_(k+1) must be the whole graph)")]
    Incomplete { unburned: Vec<usize> },
    #[error("malformed source sequence `{0}`")]
    Parse(String),
}

/// Ordered, pairwise distinct burning sources.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourceSequence(Vec<usize>);

impl SourceSequence {
    pub fn new(sources: Vec<usize>) -> Result<Self, BurningError> {
        if sources.is_empty() {
            return Err(BurningError::EmptySequence);
        }
        let mut seen = sources.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(BurningError::RepeatedSource(w[0]));
        }
        Ok(Self(sources))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The underlying set `Ŝ`.
    pub fn to_set(&self) -> VertexSet {
        VertexSet::new(self.0.iter().copied())
    }

    fn check_in(&self, g: &Graph) -> Result<(), BurningError> {
        for &v in &self.0 {
            g.check_vertex(v)?;
        }
        Ok(())
    }
}

impl FromStr for SourceSequence {
    type Err = BurningError;

    /// Comma-separated 0-based indices, e.g. `0,3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parsed: Result<Vec<usize>, _> = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect();
        SourceSequence::new(parsed.map_err(|_| BurningError::Parse(s.to_string()))?)
    }
}

impl fmt::Display for SourceSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// A validated burning: the sources with their time function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Burning {
    sources: SourceSequence,
    lambda: Vec<usize>,
    end_time: usize,
}

impl Burning {
    pub(crate) fn from_parts(sources: Vec<usize>, lambda: Vec<usize>) -> Self {
        let end_time = lambda.iter().copied().max().unwrap_or(1);
        Self { sources: SourceSequence(sources), lambda, end_time }
    }

    pub fn sources(&self) -> &SourceSequence {
        &self.sources
    }

    /// Burning times, indexed by vertex; values lie in `1..=end_time`.
    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn time_of(&self, v: usize) -> usize {
        self.lambda[v]
    }

    pub fn end_time(&self) -> usize {
        self.end_time
    }

    pub fn source_count(&self) -> usize {
        self.sources.len()
    }

    pub fn source_set(&self) -> VertexSet {
        self.sources.to_set()
    }
}

/// One column of the filtration diagram: `𝒩_j` and, from step 2 on, `U_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationState {
    pub step: usize,
    pub burned_now: VertexSet,
    pub burned_before_source: Option<VertexSet>,
}

/// Evaluates `𝒩_j` and `U_j` for `j = 1..=k+1` directly as unions of closed
/// neighborhoods `N_{j-i}(v_i)`. No validity judgment is made.
pub fn filtration(g: &Graph, s: &SourceSequence) -> Result<Vec<FiltrationState>, BurningError> {
    s.check_in(g)?;
    let dist = distances(g);
    let src = s.as_slice();
    let k = src.len();
    // ⋃_{i < upto} N_{j-i}(v_i), with 1-based i.
    let region = |j: usize, upto: usize| -> VertexSet {
        g.vertices()
            .filter(|&w| (1..=upto).any(|i| dist.get(src[i - 1], w).within(j - i)))
            .collect()
    };
    let mut states = Vec::with_capacity(k + 1);
    for j in 1..=k + 1 {
        let before = (j >= 2).then(|| region(j, j - 1));
        let now = if j <= k {
            let mut members: Vec<usize> = before.iter().flat_map(VertexSet::iter).collect();
            members.push(src[j - 1]);
            VertexSet::new(members)
        } else {
            before.clone().unwrap_or_default()
        };
        states.push(FiltrationState { step: j, burned_now: now, burned_before_source: before });
    }
    Ok(states)
}

/// Checks `s` against the definition of a burning sequence and computes
/// `λ(v) = min{ i | v ∈ 𝒩_i }` and `T = max λ`.
pub fn validate_burning(g: &Graph, s: &SourceSequence) -> Result<Burning, BurningError> {
    let states = filtration(g, s)?;
    let k = s.len();
    for state in &states[1..k] {
        let j = state.step;
        let u = state.burned_before_source.as_ref().expect("U_j exists for j >= 2");
        let v = s.as_slice()[j - 1];
        if u.contains(v) {
            return Err(BurningError::SourceTooEarly { step: j, vertex: v });
        }
    }
    let last = &states[k];
    if last.burned_now.len() != g.vertex_count() {
        let unburned = g.vertices().filter(|&v| !last.burned_now.contains(v)).collect();
        return Err(BurningError::Incomplete { unburned });
    }
    let lambda = g
        .vertices()
        .map(|v| {
            states
                .iter()
                .find(|st| st.burned_now.contains(v))
                .map(|st| st.step)
                .expect("𝒩_(k+1) is the whole graph")
        })
        .collect();
    Ok(Burning::from_parts(s.as_slice().to_vec(), lambda))
}

/// The time function as a graph map into the path `P_T` (0-based: time `t`
/// goes to vertex `t - 1`).
pub fn burning_map(g: &Graph, b: &Burning) -> GraphMap {
    let path = Graph::new(b.end_time(), (1..b.end_time()).map(|i| (i - 1, i)))
        .expect("end time is positive");
    let f: Vec<usize> = b.lambda().iter().map(|&t| t - 1).collect();
    validate_graph_map(&f, g, &path).expect("a burning's time function is a graph map")
}

/// Every burning of `g`, in lexicographic order of the source sequences.
pub fn enumerate_burnings(g: &Graph) -> Vec<Burning> {
    let mut out = Vec::new();
    let _ = search::BurnSearch::new(g).run(&[], None, &mut |b| {
        out.push(b);
        std::ops::ControlFlow::Continue(())
    });
    out
}

/// Calls `visit` for every burning, in the same order as [`enumerate_burnings`].
pub fn for_each_burning<F: FnMut(&Burning)>(g: &Graph, mut visit: F) {
    let _ = search::BurnSearch::new(g).run(&[], None, &mut |b| {
        visit(&b);
        std::ops::ControlFlow::Continue(())
    });
}

/// Burnings of `g` whose source sequence starts with `prefix`.
pub fn burnings_with_prefix(g: &Graph, prefix: &[usize]) -> Result<Vec<Burning>, BurningError> {
    for &v in prefix {
        g.check_vertex(v)?;
    }
    let mut out = Vec::new();
    let _ = search::BurnSearch::new(g).run(prefix, None, &mut |b| {
        out.push(b);
        std::ops::ControlFlow::Continue(())
    });
    Ok(out)
}

/// The least end time over all burnings of `g`.
///
/// Searches with at most `t` sources for `t = 1, 2, ...`; since `T >= k`, the
/// first `t` admitting a burning that ends by time `t` is the minimum.
pub fn burning_number(g: &Graph) -> usize {
    let engine = search::BurnSearch::new(g);
    for t in 1..=g.vertex_count() {
        let mut found = false;
        let _ = engine.run(&[], Some(t), &mut |b| {
            if b.end_time() <= t {
                found = true;
                std::ops::ControlFlow::Break(())
            } else {
                std::ops::ControlFlow::Continue(())
            }
        });
        if found {
            return t;
        }
    }
    unreachable!("every vertex order yields a burning within |V| steps")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::NamedGraph;

    fn seq(v: &[usize]) -> SourceSequence {
        SourceSequence::new(v.to_vec()).unwrap()
    }

    fn path(n: usize) -> Graph {
        NamedGraph::Path(n).build().unwrap()
    }

    #[test]
    fn sequence_parsing() {
        assert_eq!("0,3".parse::<SourceSequence>().unwrap(), seq(&[0, 3]));
        assert_eq!(" 2 ".parse::<SourceSequence>().unwrap().to_string(), "2");
        assert_eq!("1,1".parse::<SourceSequence>(), Err(BurningError::RepeatedSource(1)));
        assert!("1,x".parse::<SourceSequence>().is_err());
        assert_eq!(SourceSequence::new(vec![]), Err(BurningError::EmptySequence));
    }

    #[test]
    fn filtration_on_a_path() {
        let states = filtration(&path(5), &seq(&[0, 3])).unwrap();
        assert_eq!(states.len(), 3);
        assert_eq!(states[0].burned_now.as_slice(), &[0]);
        assert_eq!(states[0].burned_before_source, None);
        assert_eq!(states[1].burned_before_source.as_ref().unwrap().as_slice(), &[0, 1]);
        assert_eq!(states[2].burned_before_source.as_ref().unwrap().as_slice(), &[0, 1, 2, 3, 4]);
        let single = filtration(&path(4), &seq(&[2])).unwrap();
        assert_eq!(single[0].burned_now.as_slice(), &[2]);
    }

    #[test]
    fn filtration_of_the_two_source_example() {
        let g = corpus::two_source_example();
        let states = filtration(&g, &seq(&[0, 5])).unwrap();
        assert_eq!(states[2].burned_now.len(), 7);
    }

    #[test]
    fn validation_examples() {
        let b = validate_burning(&path(5), &seq(&[0, 3])).unwrap();
        assert_eq!(b.lambda(), &[1, 2, 3, 2, 3]);
        assert_eq!(b.end_time(), 3);

        let b = validate_burning(&path(3), &seq(&[1])).unwrap();
        assert_eq!(b.end_time(), 2);
        assert_eq!(b.lambda(), &[2, 1, 2]);

        let b = validate_burning(&path(3), &seq(&[0, 2])).unwrap();
        assert_eq!(b.lambda(), &[1, 2, 2]);
        assert_eq!(b.end_time(), 2);

        let k3 = NamedGraph::Complete(3).build().unwrap();
        assert_eq!(
            validate_burning(&k3, &seq(&[0, 1])),
            Err(BurningError::SourceTooEarly { step: 2, vertex: 1 })
        );
        assert_eq!(
            validate_burning(&path(5), &seq(&[0])),
            Err(BurningError::Incomplete { unburned: vec![2, 3, 4] })
        );
        let g = corpus::two_source_example();
        let b = validate_burning(&g, &seq(&[0, 5])).unwrap();
        assert_eq!(b.lambda(), &[1, 2, 3, 3, 3, 2, 3]);

        let k1 = path(1);
        let b = validate_burning(&k1, &seq(&[0])).unwrap();
        assert_eq!((b.end_time(), b.lambda()), (1, &[1][..]));
        assert!(matches!(validate_burning(&k1, &seq(&[1])), Err(BurningError::Graph(_))));
    }

    #[test]
    fn burning_maps() {
        let (g, h) = corpus::homomorphism_pair();
        let s = seq(&[0, 4]);
        let bg = validate_burning(&g, &s).unwrap();
        let bh = validate_burning(&h, &s).unwrap();
        assert_eq!(bg.lambda(), &[1, 2, 2, 3, 2]);
        assert_eq!(bg.lambda(), bh.lambda());
        assert!(burning_map(&g, &bg).is_homomorphism());
        assert!(!burning_map(&h, &bh).is_homomorphism());

        let b = validate_burning(&path(4), &seq(&[0, 3])).unwrap();
        assert_eq!(b.lambda(), &[1, 2, 3, 2]);
        assert!(burning_map(&path(4), &b).is_homomorphism());
    }

    #[test]
    fn enumeration_examples() {
        let all = enumerate_burnings(&path(3));
        let seqs: Vec<&[usize]> = all.iter().map(|b| b.sources().as_slice()).collect();
        assert_eq!(seqs, vec![&[0, 2][..], &[1], &[2, 0]]);
        assert_eq!(enumerate_burnings(&path(1)).len(), 1);
        for n in 2..=6 {
            let all = enumerate_burnings(&NamedGraph::Complete(n).build().unwrap());
            assert_eq!(all.len(), n);
            assert!(all.iter().all(|b| b.source_count() == 1 && b.end_time() == 2));
        }
    }

    /// Independent oracle: tries every ordered sequence of distinct vertices.
    fn brute_force(g: &Graph) -> Vec<Vec<usize>> {
        fn extend(g: &Graph, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if !cur.is_empty() && validate_burning(g, &SourceSequence(cur.clone())).is_ok() {
                out.push(cur.clone());
            }
            for v in g.vertices() {
                if !cur.contains(&v) {
                    cur.push(v);
                    extend(g, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        extend(g, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let graphs = [
            path(3),
            path(5),
            NamedGraph::Cycle(5).build().unwrap(),
            NamedGraph::CompleteBipartite(2, 3).build().unwrap(),
            corpus::two_source_example(),
            NamedGraph::Sum(vec![NamedGraph::Path(2), NamedGraph::Path(3)]).build().unwrap(),
        ];
        for g in &graphs {
            let fast: Vec<Vec<usize>> =
                enumerate_burnings(g).iter().map(|b| b.sources().as_slice().to_vec()).collect();
            assert_eq!(fast, brute_force(g), "{g:?}");
            for b in enumerate_burnings(g) {
                assert_eq!(validate_burning(g, b.sources()).unwrap(), b);
            }
        }
    }

    #[test]
    fn no_burning_is_a_prefix_of_another() {
        for g in corpus::named_families(7) {
            let all = enumerate_burnings(&g.graph);
            for w in all.windows(2) {
                assert!(w[0].sources() < w[1].sources());
                assert!(!w[1].sources().as_slice().starts_with(w[0].sources().as_slice()));
            }
        }
    }

    #[test]
    fn burning_numbers() {
        assert_eq!(burning_number(&path(9)), 3);
        assert_eq!(burning_number(&path(1)), 1);
        assert_eq!(burning_number(&path(10)), 4);
        let cube = NamedGraph::Cube.build().unwrap();
        let min = enumerate_burnings(&cube).iter().map(Burning::end_time).min().unwrap();
        assert_eq!(burning_number(&cube), min);
        assert_eq!(burning_number(&cube), 3);
    }

    #[test]
    fn prefix_search() {
        let p5 = path(5);
        let with = burnings_with_prefix(&p5, &[0]).unwrap();
        assert!(with.iter().all(|b| b.sources().as_slice()[0] == 0));
        let all = enumerate_burnings(&p5);
        assert_eq!(with.len(), all.iter().filter(|b| b.sources().as_slice()[0] == 0).count());
        assert!(burnings_with_prefix(&p5, &[0, 1]).unwrap().is_empty());
        assert!(burnings_with_prefix(&p5, &[9]).is_err());
    }
}
