//! Subgraphs burned compatibly with an ambient burning, and the minimal ones.

use std::collections::BTreeSet;

use thiserror::Error;

use super::morphism::{validate_morphism, BurnedGraph};
use super::{validate_burning, Burning, SourceSequence};
use crate::graph::{GraphError, Subgraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgraphError {
    #[error("the ambient graph is not connected")]
    AmbientDisconnected,
    #[error("the subgraph is not connected")]
    SubgraphDisconnected,
    #[error("the subgraph does not live in the burned graph")]
    AmbientMismatch,
    #[error("graph has {vertices} vertices and {edges} edges, over the limit of {max_vertices} vertices / {max_edges} edges")]
    TooLarge { vertices: usize, edges: usize, max_vertices: usize, max_edges: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which source prefixes of the ambient burning a subgraph may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SourcePrefix {
    /// The subgraph must be burned by the whole ambient source sequence.
    #[default]
    Full,
    /// Any nonempty prefix `(v_1, ..., v_p)` will do, shortest first.
    Any,
}

/// Explicit cap on brute-force searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        Self { max_vertices: 8, max_edges: 14 }
    }
}

impl SizeGuard {
    pub fn check(&self, vertices: usize, edges: usize) -> Result<(), SubgraphError> {
        if vertices > self.max_vertices || edges > self.max_edges {
            return Err(SubgraphError::TooLarge {
                vertices,
                edges,
                max_vertices: self.max_vertices,
                max_edges: self.max_edges,
            });
        }
        Ok(())
    }
}

/// A B-burned subgraph with the burning that certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BBurnedWitness<'a> {
    pub subgraph: Subgraph<'a>,
    /// Sources in ambient labels.
    pub sources: SourceSequence,
    /// The subgraph's own burning, on its re-indexed vertices.
    pub burning: Burning,
}

/// Looks for a burning of the connected subgraph `h`, using a source prefix of
/// `target`'s burning, whose time function is the restriction of the ambient
/// one and whose inclusion is a morphism of burnings.
pub fn is_b_burned<'a>(
    h: &Subgraph<'a>,
    target: &BurnedGraph,
    policy: SourcePrefix,
) -> Result<Option<BBurnedWitness<'a>>, SubgraphError> {
    if h.ambient() != &target.graph {
        return Err(SubgraphError::AmbientMismatch);
    }
    if !target.graph.is_connected() {
        return Err(SubgraphError::AmbientDisconnected);
    }
    if !h.is_connected() {
        return Err(SubgraphError::SubgraphDisconnected);
    }
    Ok(certify(h, target, policy))
}

fn certify<'a>(h: &Subgraph<'a>, target: &BurnedGraph, policy: SourcePrefix) -> Option<BBurnedWitness<'a>> {
    let all = target.burning.sources().as_slice();
    let lengths = match policy {
        SourcePrefix::Full => all.len()..=all.len(),
        SourcePrefix::Any => 1..=all.len(),
    };
    let (local, labels) = h.to_graph().expect("subgraph edges are ambient edges");
    for p in lengths {
        let prefix = &all[..p];
        if !prefix.iter().all(|&v| h.vertices().contains(v)) {
            continue;
        }
        let local_sources: Vec<usize> = prefix
            .iter()
            .map(|v| labels.binary_search(v).expect("source inside subgraph"))
            .collect();
        let seq = SourceSequence::new(local_sources).expect("prefix of distinct sources");
        let Ok(burning) = validate_burning(&local, &seq) else {
            continue;
        };
        let restricted = labels.iter().enumerate().all(|(i, &v)| burning.time_of(i) == target.burning.time_of(v));
        if !restricted {
            continue;
        }
        let object = BurnedGraph::from_burning(local.clone(), burning.clone());
        if validate_morphism(&labels, &object, target).is_ok() {
            return Some(BBurnedWitness {
                subgraph: h.clone(),
                sources: SourceSequence::new(prefix.to_vec()).expect("distinct"),
                burning,
            });
        }
    }
    None
}

/// Every connected subgraph (vertex set plus edge set) of the burned graph
/// that is B-burned and contains no other B-burned subgraph, ordered by
/// vertex set and then edge set.
pub fn minimal_b_burned_subgraphs<'a>(
    target: &'a BurnedGraph,
    policy: SourcePrefix,
    guard: SizeGuard,
) -> Result<Vec<BBurnedWitness<'a>>, SubgraphError> {
    let g = &target.graph;
    guard.check(g.vertex_count(), g.edge_count())?;
    if !g.is_connected() {
        return Err(SubgraphError::AmbientDisconnected);
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().collect();
    let mut burned: Vec<BBurnedWitness<'a>> = Vec::new();
    for v in g.vertices() {
        let h = Subgraph::new(g, VertexSet::singleton(v), [])?;
        burned.extend(certify(&h, target, policy));
    }
    // A connected subgraph with an edge is determined by its edge set.
    for mask in 1u64..(1u64 << edges.len()) {
        let chosen: BTreeSet<(usize, usize)> =
            (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let vertices: VertexSet = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
        let h = Subgraph::new(g, vertices, chosen)?;
        if h.is_connected() {
            burned.extend(certify(&h, target, policy));
        }
    }
    let mut minimal: Vec<BBurnedWitness<'a>> = burned
        .iter()
        .filter(|w| {
            !burned
                .iter()
                .any(|o| o.subgraph != w.subgraph && o.subgraph.is_subgraph_of(&w.subgraph))
        })
        .cloned()
        .collect();
    minimal.sort_by(|a, b| {
        (a.subgraph.vertices(), a.subgraph.edges()).cmp(&(b.subgraph.vertices(), b.subgraph.edges()))
    });
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::{classify, Graph, NamedGraph};

    fn object(g: Graph, s: &[usize]) -> BurnedGraph {
        BurnedGraph::new(g, &SourceSequence::new(s.to_vec()).unwrap()).unwrap()
    }

    fn vertex_sets(ws: &[BBurnedWitness<'_>]) -> Vec<Vec<usize>> {
        ws.iter().map(|w| w.subgraph.vertices().as_slice().to_vec()).collect()
    }

    #[test]
    fn two_source_example_has_three_minimal_trees() {
        let obj = object(corpus::two_source_example(), &[0, 5]);
        let minimal = minimal_b_burned_subgraphs(&obj, SourcePrefix::Full, SizeGuard::default()).unwrap();
        assert_eq!(vertex_sets(&minimal), vec![vec![0, 1, 2, 5], vec![0, 1, 3, 5], vec![0, 1, 4, 5]]);
        for w in &minimal {
            assert_eq!(w.sources.as_slice(), &[0, 5]);
            assert_eq!(w.subgraph.edges().len(), 3);
            assert!(classify(&w.subgraph.to_graph().unwrap().0).tree);
        }
    }

    #[test]
    fn three_source_example() {
        let obj = object(corpus::three_source_example(), &[0, 4, 6]);
        assert_eq!(obj.burning.lambda(), &[1, 2, 3, 3, 2, 3, 3]);
        let minimal = minimal_b_burned_subgraphs(&obj, SourcePrefix::Full, SizeGuard::default()).unwrap();
        assert_eq!(
            vertex_sets(&minimal),
            vec![vec![0, 1, 2, 3, 4, 6], vec![0, 1, 2, 4, 5, 6], vec![0, 1, 3, 4, 5, 6]]
        );
        assert!(minimal.iter().all(|w| classify(&w.subgraph.to_graph().unwrap().0).tree));
    }

    #[test]
    fn single_vertices_and_the_whole_graph() {
        let g = corpus::two_source_example();
        let obj = object(g.clone(), &[0, 5]);
        let whole = Subgraph::induced(&obj.graph, VertexSet::full(7)).unwrap();
        assert!(is_b_burned(&whole, &obj, SourcePrefix::Full).unwrap().is_some());
        let lone = Subgraph::induced(&obj.graph, VertexSet::singleton(3)).unwrap();
        assert!(is_b_burned(&lone, &obj, SourcePrefix::Any).unwrap().is_none());
        let apart = Subgraph::induced(&obj.graph, VertexSet::new([0, 5])).unwrap();
        assert_eq!(is_b_burned(&apart, &obj, SourcePrefix::Full), Err(SubgraphError::SubgraphDisconnected));
    }

    #[test]
    fn any_prefix_collapses_to_the_first_source() {
        // With prefixes of every length allowed, {v_1} alone is always
        // B-burned, so it is the unique minimal subgraph.
        let obj = object(corpus::two_source_example(), &[0, 5]);
        let minimal = minimal_b_burned_subgraphs(&obj, SourcePrefix::Any, SizeGuard::default()).unwrap();
        assert_eq!(vertex_sets(&minimal), vec![vec![0]]);
    }

    #[test]
    fn one_source_burnings_reduce_to_the_source() {
        let obj = object(NamedGraph::Path(3).build().unwrap(), &[1]);
        let minimal = minimal_b_burned_subgraphs(&obj, SourcePrefix::Full, SizeGuard::default()).unwrap();
        assert_eq!(vertex_sets(&minimal), vec![vec![1]]);
    }

    #[test]
    fn guards() {
        let obj = object(NamedGraph::Complete(6).build().unwrap(), &[0]);
        assert!(matches!(
            minimal_b_burned_subgraphs(&obj, SourcePrefix::Full, SizeGuard::default()),
            Err(SubgraphError::TooLarge { edges: 15, .. })
        ));
        let obj = object(NamedGraph::Edgeless(2).build().unwrap(), &[0, 1]);
        assert_eq!(
            minimal_b_burned_subgraphs(&obj, SourcePrefix::Full, SizeGuard::default()).unwrap_err(),
            SubgraphError::AmbientDisconnected
        );
    }
}
