//! Named test graphs: the standard families, the worked examples used
//! throughout the test suites, and a seeded random sample.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, NamedGraph};

/// Seed for [`random_graphs`] in the standard corpus.
pub const CORPUS_SEED: u64 = 0x6275_726e;

#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

impl CorpusGraph {
    fn named(spec: NamedGraph) -> Self {
        let graph = spec.build().expect("corpus parameters are valid");
        Self { name: spec.to_string(), graph }
    }

    fn custom(name: &str, graph: Graph) -> Self {
        Self { name: name.to_string(), graph }
    }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("corpus edges are valid")
}

/// Seven vertices, two sources `(0, 5)` reach everything by time 3 through
/// three parallel middle vertices.
pub fn two_source_example() -> Graph {
    graph(7, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6)])
}

/// Seven vertices on a 6-cycle-like loop with a pendant, burned by `(0, 4, 6)`.
pub fn three_source_example() -> Graph {
    graph(7, &[(0, 1), (1, 2), (1, 3), (3, 6), (2, 4), (4, 5), (5, 6)])
}

/// Two graphs on five vertices that share the burning `(0, 4)` and its time
/// function; the first has a homomorphic burning map, the second does not.
pub fn homomorphism_pair() -> (Graph, Graph) {
    let g = graph(5, &[(0, 1), (0, 2), (2, 3), (1, 3), (3, 4)]);
    let h = graph(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]);
    (g, h)
}

/// A five-vertex graph folded onto `P_3` by a graph map that collapses
/// vertices 2, 3 and 4, returned as `(domain, path, vertex function)`.
pub fn collapse_example() -> (Graph, Graph, Vec<usize>) {
    let g = graph(5, &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)]);
    let p3 = NamedGraph::Path(3).build().expect("valid");
    (g, p3, vec![0, 1, 2, 2, 2])
}

/// Standard families with at most `max_vertices` vertices.
pub fn named_families(max_vertices: usize) -> Vec<CorpusGraph> {
    use NamedGraph::*;
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        out.push(CorpusGraph::named(Path(n)));
        out.push(CorpusGraph::named(Complete(n)));
        out.push(CorpusGraph::named(Edgeless(n)));
        if n >= 3 {
            out.push(CorpusGraph::named(Cycle(n)));
        }
    }
    for a in 1..=max_vertices {
        for b in a..=max_vertices - a {
            out.push(CorpusGraph::named(CompleteBipartite(a, b)));
        }
    }
    if max_vertices >= 8 {
        out.push(CorpusGraph::named(Cube));
    }
    for k in 2..=max_vertices / 2 {
        out.push(CorpusGraph::named(Iterated(k, Box::new(Path(2)))));
    }
    let sums = [
        vec![Path(2), Path(3)],
        vec![Path(3), Complete(1)],
        vec![Complete(3), Path(2)],
        vec![Cycle(4), Complete(1)],
        vec![Path(4), Path(2)],
        vec![Complete(2), Complete(3)],
    ];
    for parts in sums {
        let spec = Sum(parts);
        let size = spec.build().expect("valid").vertex_count();
        if size <= max_vertices {
            out.push(CorpusGraph::named(spec));
        }
    }
    out
}

/// The worked examples, all on at most seven vertices.
pub fn examples() -> Vec<CorpusGraph> {
    let (g, h) = homomorphism_pair();
    let (c, _, _) = collapse_example();
    vec![
        CorpusGraph::custom("two-source", two_source_example()),
        CorpusGraph::custom("three-source", three_source_example()),
        CorpusGraph::custom("homomorphic", g),
        CorpusGraph::custom("non-homomorphic", h),
        CorpusGraph::custom("collapsing", c),
    ]
}

/// `count` Erdős–Rényi graphs with 1 to `max_vertices` vertices and edge
/// probabilities drawn from `[0.2, 0.8)`.
pub fn random_graphs(count: usize, max_vertices: usize, seed: u64) -> Vec<CorpusGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.random_range(1..=max_vertices);
            let p = rng.random_range(0.2..0.8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            CorpusGraph::custom(&format!("random-{i}"), graph(n, &edges))
        })
        .collect()
}

/// A random recursive tree on `n` vertices: vertex `v` attaches to a uniform
/// earlier vertex.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    graph(n, &edges)
}

/// Named families up to eight vertices, the worked examples, and 50 random
/// graphs on at most seven vertices.
pub fn standard() -> Vec<CorpusGraph> {
    let mut out = named_families(8);
    out.extend(examples());
    out.extend(random_graphs(50, 7, CORPUS_SEED));
    out
}

/// The connected members of [`standard`] with at most `max_vertices` vertices.
pub fn connected(max_vertices: usize) -> Vec<CorpusGraph> {
    standard()
        .into_iter()
        .filter(|c| c.graph.vertex_count() <= max_vertices && c.graph.is_connected())
        .collect()
}
