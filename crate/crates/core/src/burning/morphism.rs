//! Morphisms of burnings: graph maps that send the sources of one burning
//! onto the leading sources of another and commute with the time functions
//! through a graph map `τ` of path graphs.

use thiserror::Error;

use super::{validate_burning, Burning, BurningError, SourceSequence};
use crate::graph::{validate_graph_map, Graph, GraphError, GraphMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("not a graph map: {0}")]
    NotAGraphMap(#[from] GraphError),
    #[error("domain burning has {domain} sources but the target only {target}")]
    TooManySources { domain: usize, target: usize },
    #[error("source v_{index} maps to {got}, expected w_{index} = {expected}")]
    PrefixMismatch { index: usize, expected: usize, got: usize },
    #[error("time {time} would map to both {first} and {second}")]
    TauIllDefined { time: usize, first: usize, second: usize },
    #[error("τ jumps from {from} to {to} between times {time} and {next}", next = time + 1)]
    TauNotGraphMap { time: usize, from: usize, to: usize },
    #[error("the morphisms do not compose: target and source burnings differ")]
    NotComposable,
}

/// A graph together with one of its burnings: an object of the category of
/// burnings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnedGraph {
    pub graph: Graph,
    pub burning: Burning,
}

impl BurnedGraph {
    pub fn new(graph: Graph, sources: &SourceSequence) -> Result<Self, BurningError> {
        let burning = validate_burning(&graph, sources)?;
        Ok(Self { graph, burning })
    }

    pub fn from_burning(graph: Graph, burning: Burning) -> Self {
        Self { graph, burning }
    }
}

/// A certified morphism `f: B(G) → B(H)` with its time map `τ`.
#[derive(Clone, Debug)]
pub struct BurningMorphism<'a> {
    source: &'a BurnedGraph,
    target: &'a BurnedGraph,
    map: GraphMap,
    tau: Vec<usize>,
    tau_is_inclusion: Option<bool>,
}

impl<'a> BurningMorphism<'a> {
    pub fn identity(object: &'a BurnedGraph) -> Self {
        validate_morphism(GraphMap::identity(&object.graph).vertex_fn(), object, object)
            .expect("the identity is a morphism of burnings")
    }

    pub fn source(&self) -> &'a BurnedGraph {
        self.source
    }

    pub fn target(&self) -> &'a BurnedGraph {
        self.target
    }

    pub fn map(&self) -> &GraphMap {
        &self.map
    }

    /// `τ(t)` for `t = 1..=T^G`, stored at index `t - 1`.
    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    /// When the domain burning ends at time `k` (its number of sources),
    /// whether `τ` is injective; `None` otherwise.
    pub fn tau_is_inclusion(&self) -> Option<bool> {
        self.tau_is_inclusion
    }
}

impl PartialEq for BurningMorphism<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.map == other.map
            && self.tau == other.tau
    }
}

/// Certifies `f` as a morphism of burnings and derives `τ`.
///
/// `τ(t)` is read off as `λ_H(f(v))` for any `v` with `λ_G(v) = t`; the time
/// function is onto `1..=T^G`, so this pins `τ` down uniquely when it exists.
pub fn validate_morphism<'a>(
    f: &[usize],
    source: &'a BurnedGraph,
    target: &'a BurnedGraph,
) -> Result<BurningMorphism<'a>, MorphismError> {
    let map = validate_graph_map(f, &source.graph, &target.graph)?;
    let (bg, bh) = (&source.burning, &target.burning);
    let (k, m) = (bg.source_count(), bh.source_count());
    if k > m {
        return Err(MorphismError::TooManySources { domain: k, target: m });
    }
    for (i, (&v, &w)) in bg.sources().as_slice().iter().zip(bh.sources().as_slice()).enumerate() {
        if map.apply(v) != w {
            return Err(MorphismError::PrefixMismatch { index: i + 1, expected: w, got: map.apply(v) });
        }
    }
    let mut tau: Vec<Option<usize>> = vec![None; bg.end_time()];
    for v in source.graph.vertices() {
        let t = bg.time_of(v);
        let image = bh.time_of(map.apply(v));
        match tau[t - 1] {
            None => tau[t - 1] = Some(image),
            Some(prev) if prev != image => {
                return Err(MorphismError::TauIllDefined { time: t, first: prev, second: image })
            }
            Some(_) => {}
        }
    }
    let tau: Vec<usize> = tau
        .into_iter()
        .map(|t| t.expect("time function is onto 1..=T"))
        .collect();
    for (i, w) in tau.windows(2).enumerate() {
        if w[0].abs_diff(w[1]) > 1 {
            return Err(MorphismError::TauNotGraphMap { time: i + 1, from: w[0], to: w[1] });
        }
    }
    let tau_is_inclusion = (bg.end_time() == k).then(|| {
        let mut sorted = tau.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    });
    Ok(BurningMorphism { source, target, map, tau, tau_is_inclusion })
}

/// `second ∘ first`, re-validated from scratch.
pub fn compose_morphisms<'a>(
    first: &BurningMorphism<'a>,
    second: &BurningMorphism<'a>,
) -> Result<BurningMorphism<'a>, MorphismError> {
    if !std::ptr::eq(first.target, second.source) && first.target != second.source {
        return Err(MorphismError::NotComposable);
    }
    let f: Vec<usize> = first.map.vertex_fn().iter().map(|&v| second.map.apply(v)).collect();
    let composite = validate_morphism(&f, first.source, second.target)?;
    debug_assert!(composite
        .tau
        .iter()
        .zip(&first.tau)
        .all(|(&c, &t)| c == second.tau[t - 1]));
    Ok(composite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::NamedGraph;

    fn seq(v: &[usize]) -> SourceSequence {
        SourceSequence::new(v.to_vec()).unwrap()
    }

    fn path_object(n: usize, s: &[usize]) -> BurnedGraph {
        BurnedGraph::new(NamedGraph::Path(n).build().unwrap(), &seq(s)).unwrap()
    }

    #[test]
    fn collapsing_map_onto_a_path() {
        let (g, h, f) = corpus::collapse_example();
        let bg = BurnedGraph::new(g, &seq(&[0, 2])).unwrap();
        let bh = BurnedGraph::new(h, &seq(&[0, 2])).unwrap();
        assert_eq!(bg.burning.end_time(), 3);
        assert_eq!(bh.burning.end_time(), 2);
        let m = validate_morphism(&f, &bg, &bh).unwrap();
        assert_eq!(m.tau(), &[1, 2, 2]);
        assert!(!m.map().is_homomorphism());
        assert_eq!(m.tau_is_inclusion(), None);
    }

    #[test]
    fn identity_morphism() {
        let obj = path_object(5, &[0, 3]);
        let id = BurningMorphism::identity(&obj);
        assert_eq!(id.tau(), &[1, 2, 3]);
    }

    #[test]
    fn failure_modes() {
        let big = path_object(5, &[0, 3]);
        let small = path_object(3, &[1]);
        assert_eq!(
            validate_morphism(&[0, 1, 2, 2, 2], &big, &small).unwrap_err(),
            MorphismError::TooManySources { domain: 2, target: 1 }
        );
        let a = path_object(3, &[1]);
        let b = path_object(3, &[0, 2]);
        assert_eq!(
            validate_morphism(&[0, 1, 2], &a, &b).unwrap_err(),
            MorphismError::PrefixMismatch { index: 1, expected: 0, got: 1 }
        );
        // 0 -> 3 is fine but the edge {1, 2} lands on the non-edge {1, 3}.
        let c = path_object(3, &[0, 2]);
        let e = path_object(4, &[0, 2]);
        assert!(matches!(validate_morphism(&[0, 1, 3], &c, &e), Err(MorphismError::NotAGraphMap(_))));
        let star = BurnedGraph::new(NamedGraph::CompleteBipartite(1, 3).build().unwrap(), &seq(&[1, 2])).unwrap();
        let other = BurnedGraph::new(NamedGraph::CompleteBipartite(1, 3).build().unwrap(), &seq(&[1, 3])).unwrap();
        assert!(matches!(
            validate_morphism(&[0, 1, 2, 3], &star, &other),
            Err(MorphismError::PrefixMismatch { index: 2, .. })
        ));
    }

    #[test]
    fn ill_defined_tau() {
        // Both ends of P3 burn at time 2, but after folding 0 onto the
        // source their images burn at times 1 and 2.
        let a = path_object(3, &[1]);
        assert_eq!(
            validate_morphism(&[1, 1, 2], &a, &a).unwrap_err(),
            MorphismError::TauIllDefined { time: 2, first: 1, second: 2 }
        );
    }

    #[test]
    fn tau_inclusion_flag() {
        let p3 = path_object(3, &[0, 2]);
        let p4 = path_object(4, &[0, 2]);
        let m = validate_morphism(&[0, 1, 2], &p3, &p4).unwrap();
        assert_eq!(m.tau(), &[1, 2]);
        assert_eq!(m.tau_is_inclusion(), Some(true));
    }

    #[test]
    fn composition_and_laws() {
        let p2 = path_object(2, &[0]);
        let p3 = path_object(3, &[0, 2]);
        let p4 = path_object(4, &[0, 2]);
        let f = validate_morphism(&[0, 1], &p2, &p3).unwrap();
        let g = validate_morphism(&[0, 1, 2], &p3, &p4).unwrap();
        let gf = compose_morphisms(&f, &g).unwrap();
        assert_eq!(gf.map().vertex_fn(), &[0, 1]);
        let id2 = BurningMorphism::identity(&p2);
        let id3 = BurningMorphism::identity(&p3);
        assert_eq!(compose_morphisms(&id2, &f).unwrap(), f);
        assert_eq!(compose_morphisms(&f, &id3).unwrap(), f);
        assert_eq!(compose_morphisms(&g, &f).unwrap_err(), MorphismError::NotComposable);
    }
}
