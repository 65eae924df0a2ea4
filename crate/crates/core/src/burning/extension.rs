//! Extending burnings of a subgraph to the ambient graph.

use thiserror::Error;

use super::morphism::{validate_morphism, BurnedGraph};
use super::subgraphs::SizeGuard;
use super::{for_each_burning, search::BurnSearch, Burning};
use crate::graph::{validate_graph_map, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("the embedding identifies vertices {0} and {1}")]
    NotInjective(usize, usize),
    #[error("graph on {vertices} vertices exceeds the enumeration limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

/// Default limit for the double enumeration in [`is_burning_extension`].
pub const EXTENSION_GUARD: SizeGuard = SizeGuard { max_vertices: 10, max_edges: usize::MAX };

fn check_embedding(embed: &[usize], h: &Graph, g: &Graph) -> Result<(), ExtensionError> {
    validate_graph_map(embed, h, g)?;
    let mut owner = vec![None; g.vertex_count()];
    for (v, &w) in embed.iter().enumerate() {
        if let Some(u) = owner[w].replace(v) {
            return Err(ExtensionError::NotInjective(u, v));
        }
    }
    Ok(())
}

/// A burning of `g` that starts with the embedded sources of `burned` and
/// makes the embedding a morphism of burnings, if one exists.
pub fn admits_extension(burned: &BurnedGraph, embed: &[usize], g: &Graph) -> Result<Option<Burning>, ExtensionError> {
    check_embedding(embed, &burned.graph, g)?;
    let prefix: Vec<usize> = burned.burning.sources().as_slice().iter().map(|&v| embed[v]).collect();
    let mut found = None;
    let _ = BurnSearch::new(g).run(&prefix, None, &mut |b| {
        let candidate = BurnedGraph::from_burning(g.clone(), b);
        if validate_morphism(embed, burned, &candidate).is_ok() {
            found = Some(candidate.burning);
            std::ops::ControlFlow::Break(())
        } else {
            std::ops::ControlFlow::Continue(())
        }
    });
    Ok(found)
}

/// Whether every burning source set of `h` lands, under `embed`, inside the
/// source set of some burning of `g`.
pub fn is_burning_extension(h: &Graph, embed: &[usize], g: &Graph, guard: SizeGuard) -> Result<bool, ExtensionError> {
    // Source sets are packed into u128 masks.
    let limit = guard.max_vertices.min(128);
    for size in [h.vertex_count(), g.vertex_count()] {
        if size > limit {
            return Err(ExtensionError::TooLarge { vertices: size, limit });
        }
    }
    check_embedding(embed, h, g)?;
    let mask = |vs: &mut dyn Iterator<Item = usize>| vs.fold(0u128, |m, v| m | 1 << v);
    let mut ambient = Vec::new();
    for_each_burning(g, |b| ambient.push(mask(&mut b.sources().as_slice().iter().copied())));
    ambient.sort_unstable();
    ambient.dedup();
    let mut ok = true;
    for_each_burning(h, |b| {
        if ok {
            let image = mask(&mut b.sources().as_slice().iter().map(|&v| embed[v]));
            ok = ambient.iter().any(|&s| s & image == image);
        }
    });
    Ok(ok)
}
