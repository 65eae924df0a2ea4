//! Independent reference implementations used as oracles by the
//! integration and acceptance tests. Nothing here calls into the library's
//! algorithms; graphs are read only through their edge lists.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use burnhom::graph::Graph;

pub type Adjacency = Vec<Vec<bool>>;

pub fn adjacency(g: &Graph) -> Adjacency {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Hop distances by BFS, `None` when unreachable.
pub fn bfs(adj: &Adjacency, s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for w in 0..adj.len() {
            if adj[u][w] && d[w].is_none() {
                d[w] = Some(d[u].unwrap() + 1);
                q.push_back(w);
            }
        }
    }
    d
}

/// Evaluates the definition of a burning sequence literally:
/// `U_j = ⋃_{i<j} N_{j-i}(v_i)`, sources outside `U_j`, `U_{k+1}` everything,
/// and `λ(v) = min{ j | v ∈ 𝒩_j }`. Returns `λ` when valid.
pub fn burning_times(adj: &Adjacency, s: &[usize]) -> Option<Vec<usize>> {
    let n = adj.len();
    let k = s.len();
    if k == 0 {
        return None;
    }
    let dist: Vec<Vec<Option<usize>>> = s.iter().map(|&v| bfs(adj, v)).collect();
    let within = |i: usize, w: usize, r: usize| dist[i][w].is_some_and(|d| d <= r);
    let u = |j: usize, w: usize| (1..j).any(|i| within(i - 1, w, j - i));
    for j in 2..=k {
        if u(j, s[j - 1]) {
            return None;
        }
    }
    if !(0..n).all(|w| u(k + 1, w)) {
        return None;
    }
    let in_n = |j: usize, w: usize| u(j, w) || (j <= k && s[j - 1] == w);
    Some((0..n).map(|w| (1..=k + 1).find(|&j| in_n(j, w)).unwrap()).collect())
}

/// Whether the last source of `s` is outside the region burned before it.
/// Once this fails for a prefix it fails for every extension.
fn last_source_unburned(adj: &Adjacency, s: &[usize]) -> bool {
    let j = s.len();
    let v = s[j - 1];
    s[..j - 1].iter().enumerate().all(|(i, &u)| bfs(adj, u)[v].is_none_or(|d| d > j - 1 - i))
}

/// Every valid source sequence, by trying all sequences of distinct vertices
/// whose sources are unburned when chosen.
pub fn all_burnings(adj: &Adjacency) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn go(adj: &Adjacency, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Vec<usize>)>) {
        if let Some(l) = burning_times(adj, cur) {
            out.push((cur.clone(), l));
            return;
        }
        for v in 0..adj.len() {
            if !cur.contains(&v) {
                cur.push(v);
                if last_source_unburned(adj, cur) {
                    go(adj, cur, out);
                }
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(adj, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn complement_edges(adj: &Adjacency) -> BTreeSet<(usize, usize)> {
    let n = adj.len();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !adj[u][v]).collect()
}

/// Inclusion-maximal source sets over all burnings.
pub fn configuration_facets(adj: &Adjacency) -> BTreeSet<Vec<usize>> {
    let sets: BTreeSet<Vec<usize>> = all_burnings(adj)
        .into_iter()
        .map(|(mut s, _)| {
            s.sort();
            s
        })
        .collect();
    sets.iter()
        .filter(|a| !sets.iter().any(|b| b != *a && a.iter().all(|x| b.contains(x))))
        .cloned()
        .collect()
}

/// Whether the graph has a simple cycle of odd length, by exhaustive search.
pub fn has_odd_cycle(adj: &Adjacency) -> bool {
    fn extend(adj: &Adjacency, start: usize, path: &mut Vec<usize>) -> bool {
        let last = *path.last().unwrap();
        for w in 0..adj.len() {
            if !adj[last][w] {
                continue;
            }
            if w == start && path.len() >= 3 && path.len() % 2 == 1 {
                return true;
            }
            if w > start && !path.contains(&w) {
                path.push(w);
                if extend(adj, start, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..adj.len()).any(|s| extend(adj, s, &mut vec![s]))
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Determinant by cofactor expansion (small matrices only).
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors via determinantal divisors: `d_k = D_k / D_{k-1}` where
/// `D_k` is the gcd of all `k × k` minors.
pub fn determinantal_divisors(m: &[Vec<i128>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=rows.min(cols) {
        let mut g = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = gcd(g, det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// Rank over ℚ by fraction-free elimination.
pub fn rational_rank(m: &[Vec<i128>]) -> usize {
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let (x, y) = (a[rank][c], a[r][c]);
                for j in 0..cols {
                    a[r][j] = a[r][j] * x - a[rank][j] * y;
                }
                let g = a[r].iter().fold(0, |g, &v| gcd(g, v));
                if g > 1 {
                    a[r].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// All faces of the complex generated by `facets`, grouped by dimension.
pub fn faces_by_dimension(facets: &[Vec<usize>]) -> Vec<BTreeSet<Vec<usize>>> {
    let mut out: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    for f in facets {
        for mask in 1u32..(1 << f.len()) {
            let s: Vec<usize> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            let d = s.len() - 1;
            if out.len() <= d {
                out.resize(d + 1, BTreeSet::new());
            }
            out[d].insert(s);
        }
    }
    out
}

/// Betti numbers over ℚ from boundary ranks, computed independently.
pub fn rational_betti(facets: &[Vec<usize>]) -> Vec<usize> {
    let faces: Vec<Vec<Vec<usize>>> = faces_by_dimension(facets).into_iter().map(|s| s.into_iter().collect()).collect();
    let boundary_rank = |q: usize| -> usize {
        if q == 0 || q >= faces.len() {
            return 0;
        }
        let rows = &faces[q - 1];
        let m: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                faces[q]
                    .iter()
                    .map(|s| match s.iter().position(|v| !r.contains(v)) {
                        Some(i) if r.len() + 1 == s.len() && r.iter().all(|x| s.contains(x)) => {
                            if i % 2 == 0 { 1 } else { -1 }
                        }
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        rational_rank(&m)
    };
    (0..faces.len()).map(|q| faces[q].len() - boundary_rank(q) - boundary_rank(q + 1)).collect()
}
