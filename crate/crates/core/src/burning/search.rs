use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use super::Burning;
use crate::graph::Graph;

/// Depth-first burning search over bitsets.
///
/// With `𝒩_{j-1}` burned after `j - 1` sources, the next region is
/// `U_j = N_1(𝒩_{j-1})` and a source `v_j` is any vertex outside it. A
/// sequence is complete exactly when `U_j` covers the graph.
pub(crate) struct BurnSearch {
    closed: Vec<FixedBitSet>,
    n: usize,
}

impl BurnSearch {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let closed = g
            .vertices()
            .map(|v| {
                let mut set = FixedBitSet::with_capacity(n);
                set.insert(v);
                for &w in g.neighbors(v) {
                    set.insert(w);
                }
                set
            })
            .collect();
        Self { closed, n }
    }

    fn spread(&self, burned: &FixedBitSet) -> FixedBitSet {
        let mut out = burned.clone();
        for v in burned.ones() {
            out.union_with(&self.closed[v]);
        }
        out
    }

    fn is_full(&self, set: &FixedBitSet) -> bool {
        set.count_ones(..) == self.n
    }

    /// Visits burnings whose sources start with `prefix` and number at most
    /// `max_sources`, in lexicographic order. Returns early on `Break`.
    pub(crate) fn run<F>(&self, prefix: &[usize], max_sources: Option<usize>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(Burning) -> ControlFlow<()>,
    {
        let limit = max_sources.unwrap_or(self.n);
        let mut sources: Vec<usize> = Vec::new();
        // regions[j - 1] holds 𝒩_j.
        let mut regions: Vec<FixedBitSet> = Vec::new();
        for &v in prefix {
            let next = match regions.last() {
                None => {
                    let mut s = FixedBitSet::with_capacity(self.n);
                    s.insert(v);
                    s
                }
                Some(prev) => {
                    let u = self.spread(prev);
                    if u.contains(v) {
                        return ControlFlow::Continue(());
                    }
                    let mut s = u;
                    s.insert(v);
                    s
                }
            };
            sources.push(v);
            regions.push(next);
        }
        if sources.len() > limit {
            return ControlFlow::Continue(());
        }
        self.descend(&mut sources, &mut regions, limit, visit)
    }

    fn descend<F>(
        &self,
        sources: &mut Vec<usize>,
        regions: &mut Vec<FixedBitSet>,
        limit: usize,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(Burning) -> ControlFlow<()>,
    {
        let reached = match regions.last() {
            None => FixedBitSet::with_capacity(self.n),
            Some(prev) => self.spread(prev),
        };
        if !regions.is_empty() && self.is_full(&reached) {
            return visit(self.leaf(sources, regions));
        }
        if sources.len() == limit {
            return ControlFlow::Continue(());
        }
        for v in 0..self.n {
            if reached.contains(v) {
                continue;
            }
            let mut next = reached.clone();
            next.insert(v);
            sources.push(v);
            regions.push(next);
            let flow = self.descend(sources, regions, limit, visit);
            sources.pop();
            regions.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn leaf(&self, sources: &[usize], regions: &[FixedBitSet]) -> Burning {
        let k = sources.len();
        let mut lambda = vec![k + 1; self.n];
        for (j, region) in regions.iter().enumerate().rev() {
            for v in region.ones() {
                lambda[v] = j + 1;
            }
        }
        Burning::from_parts(sources.to_vec(), lambda)
    }
}
