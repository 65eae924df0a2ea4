//! Executable checks of the library's headline results on the standard corpus.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::burning::{
    burning_map, compose_morphisms, extremal_path_report, minimal_b_burned_subgraphs, validate_morphism, BurnedGraph,
    BurningMorphism, ExtremalKind, SizeGuard, SourcePrefix,
};
use crate::complex::{are_isomorphic, configuration_space, SimplicialComplex, ISOMORPHISM_LIMIT};
use crate::corpus::{self, CORPUS_SEED};
use crate::graph::{classify, complement, disjoint_union, Graph, NamedGraph};
use crate::homology::{homology, smith_normal_form, ChainComplex, Coefficients, HomologyGroup, IntegerMatrix};
use crate::{burning_number, enumerate_burnings, SourceSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

/// One check. Fields are declared in key order so JSON output is sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    /// The statement being checked, in words.
    pub claim: &'static str,
    /// The first failing instance, when the check fails.
    pub counterexample: Option<String>,
    pub details: String,
    pub id: &'static str,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub failed: usize,
    pub passed: usize,
    pub schema: u32,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

type Outcome = Result<String, String>;

pub struct Check {
    pub id: &'static str,
    pub claim: &'static str,
    run: fn() -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Every check, in a fixed order.
pub const CHECKS: [Check; 12] = [
    Check { id: "path-burning-numbers", claim: "b(P_n) = ceil(sqrt(n)) for n = 1..12", run: path_burning_numbers },
    Check {
        id: "path5-configuration-space",
        claim: "the configuration space of P_5 has facets {1,3,5}, {1,4}, {2,4}, {2,5} (1-based)",
        run: path5_configuration_space,
    },
    Check {
        id: "skeleton-is-complement",
        claim: "the 1-skeleton of the configuration space is the complement graph",
        run: skeleton_is_complement,
    },
    Check {
        id: "cone-and-suspension",
        claim: "adding K_1 cones the configuration space and adding P_2 suspends it",
        run: cone_and_suspension,
    },
    Check {
        id: "path-homology-table",
        claim: "H_0 of the configuration spaces of P_1..P_6 is Z, Z^2, Z^2, Z, Z, Z; H_1 is Z for P_5; all else 0",
        run: path_homology_table,
    },
    Check {
        id: "cross-polytope-spheres",
        claim: "n disjoint edges give 2^n facets of size n and the homology of an (n-1)-sphere",
        run: cross_polytopes,
    },
    Check {
        id: "cube",
        claim: "every burning of the cube has two sources and its configuration space is the complement graph",
        run: cube,
    },
    Check {
        id: "minimal-b-burned-subgraphs",
        claim: "minimal B-burned subgraphs of the worked examples are as listed, and all are trees",
        run: minimal_subgraphs,
    },
    Check {
        id: "extremal-paths",
        claim: "extremal path lengths T^2, T^2-T+1, k^2+2k, 2k-1, 3k-2 have witnesses and T^2, 2k-1 are sharp",
        run: extremal_paths,
    },
    Check {
        id: "odd-cycles-block-homomorphisms",
        claim: "no burning of a non-bipartite graph has a homomorphic time function",
        run: odd_cycles,
    },
    Check {
        id: "suspension-shift",
        claim: "reduced H_k after adding P_2 equals reduced H_(k-1) before, for connected graphs",
        run: suspension_shift,
    },
    Check {
        id: "property-suites",
        claim: "burning invariants, boundary squares to zero, Euler characteristic, Smith form, category laws",
        run: property_suites,
    },
];

/// Runs the checks whose ids are selected; `None` runs all of them.
/// Unselected checks are reported as skipped.
pub fn run_checks(selected: Option<&[&str]>) -> VerificationReport {
    let checks: Vec<CheckResult> = CHECKS
        .iter()
        .map(|c| {
            let chosen = selected.is_none_or(|ids| ids.contains(&c.id));
            let (status, details, counterexample) = if !chosen {
                (Status::Skipped, "not selected".to_string(), None)
            } else {
                match (c.run)() {
                    Ok(details) => (Status::Pass, details, None),
                    Err(example) => (Status::Fail, "check failed".to_string(), Some(example)),
                }
            };
            CheckResult { claim: c.claim, counterexample, details, id: c.id, status }
        })
        .collect();
    let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
    let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
    VerificationReport { checks, failed, passed, schema: crate::format::SCHEMA_VERSION }
}

fn path(n: usize) -> Graph {
    NamedGraph::Path(n).build().expect("positive length")
}

fn facets(c: &SimplicialComplex) -> BTreeSet<Vec<usize>> {
    c.facets().iter().map(|f| f.as_slice().to_vec()).collect()
}

fn group(groups: &[HomologyGroup], q: usize) -> HomologyGroup {
    groups.get(q).cloned().unwrap_or_default()
}

fn path_burning_numbers() -> Outcome {
    for n in 1..=12usize {
        let expected = (1..=n).find(|r| r * r >= n).expect("n >= 1");
        let b = burning_number(&path(n));
        ensure!(b == expected, "P_{n}: burning number {b}, expected {expected}");
    }
    Ok("12 paths".into())
}

fn path5_configuration_space() -> Outcome {
    let got: BTreeSet<Vec<usize>> =
        facets(&configuration_space(&path(5))).into_iter().map(|f| f.iter().map(|v| v + 1).collect()).collect();
    let expected: BTreeSet<Vec<usize>> = [vec![1, 3, 5], vec![1, 4], vec![2, 4], vec![2, 5]].into();
    ensure!(got == expected, "facets {got:?}");
    Ok("4 facets".into())
}

fn skeleton_is_complement() -> Outcome {
    let graphs = corpus::standard();
    for c in &graphs {
        let sk = configuration_space(&c.graph).one_skeleton_graph();
        ensure!(sk == complement(&c.graph), "{}: 1-skeleton edges {:?}", c.name, sk.edges());
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn cone_and_suspension() -> Outcome {
    let graphs = corpus::connected(6);
    for c in &graphs {
        let base = configuration_space(&c.graph);
        for (extra, expected, what) in [(path(1), base.cone(), "cone"), (path(2), base.suspension(), "suspension")] {
            let actual = configuration_space(&disjoint_union(&c.graph, &extra));
            let iso = are_isomorphic(&actual, &expected, ISOMORPHISM_LIMIT).map_err(|e| e.to_string())?;
            ensure!(iso.is_some(), "{}: not isomorphic to the {what}", c.name);
        }
    }
    Ok(format!("{} connected graphs", graphs.len()))
}

fn path_homology_table() -> Outcome {
    let h0 = [1, 2, 2, 1, 1, 1];
    let mut mismatches = Vec::new();
    for n in 1..=6 {
        let groups = homology(&configuration_space(&path(n)), false, Coefficients::Integers);
        for q in 0..groups.len().max(3) {
            let expected = match (n, q) {
                (_, 0) => HomologyGroup::free(h0[n - 1]),
                (5, 1) => HomologyGroup::free(1),
                _ => HomologyGroup::default(),
            };
            if group(&groups, q) != expected {
                mismatches.push(format!("P_{n} degree {q}: computed {}, expected {expected}", group(&groups, q)));
            }
        }
    }
    ensure!(mismatches.is_empty(), "{}", mismatches.join("; "));
    Ok("6 paths".into())
}

fn cross_polytopes() -> Outcome {
    for n in 1..=5 {
        let g = NamedGraph::Iterated(n, Box::new(NamedGraph::Path(2))).build().expect("valid");
        let c = configuration_space(&g);
        ensure!(c.facets().len() == 1 << n, "{n} edges: {} facets", c.facets().len());
        for f in c.facets() {
            let pairs: BTreeSet<usize> = f.iter().map(|v| v / 2).collect();
            ensure!(f.len() == n && pairs.len() == n, "{n} edges: facet {:?}", f.as_slice());
        }
        let groups = homology(&c, false, Coefficients::Integers);
        for q in 0..groups.len().max(n + 1) {
            let expected = HomologyGroup::free(usize::from(q == 0) + usize::from(q == n - 1));
            ensure!(group(&groups, q) == expected, "{n} edges, degree {q}: {}", group(&groups, q));
        }
    }
    Ok("n = 1..5".into())
}

fn cube() -> Outcome {
    let q = NamedGraph::Cube.build().expect("valid");
    let c = configuration_space(&q);
    ensure!(c.dimension() == 1, "dimension {}", c.dimension());
    let burnings = enumerate_burnings(&q);
    if let Some(b) = burnings.iter().find(|b| b.source_count() != 2) {
        return Err(format!("burning {:?}", b.sources().as_slice()));
    }
    ensure!(c == SimplicialComplex::from_graph(&complement(&q)), "facets {:?}", facets(&c));
    Ok(format!("{} burnings", burnings.len()))
}

fn minimal_sets(g: Graph, sources: &[usize]) -> Result<Vec<Vec<usize>>, String> {
    let seq = SourceSequence::new(sources.to_vec()).map_err(|e| e.to_string())?;
    let obj = BurnedGraph::new(g, &seq).map_err(|e| e.to_string())?;
    let minimal =
        minimal_b_burned_subgraphs(&obj, SourcePrefix::Full, SizeGuard::default()).map_err(|e| e.to_string())?;
    Ok(minimal.iter().map(|w| w.subgraph.vertices().as_slice().to_vec()).collect())
}

fn minimal_subgraphs() -> Outcome {
    let two = minimal_sets(corpus::two_source_example(), &[0, 5])?;
    ensure!(two == [vec![0, 1, 2, 5], vec![0, 1, 3, 5], vec![0, 1, 4, 5]], "two-source example: {two:?}");
    let three = minimal_sets(corpus::three_source_example(), &[0, 4, 6])?;
    ensure!(
        three == [vec![0, 1, 2, 3, 4, 6], vec![0, 1, 2, 4, 5, 6], vec![0, 1, 3, 4, 5, 6]],
        "three-source example: {three:?}"
    );
    let guard = SizeGuard::default();
    let mut count = 0;
    for c in corpus::standard() {
        let g = &c.graph;
        if !g.is_connected() || guard.check(g.vertex_count(), g.edge_count()).is_err() {
            continue;
        }
        let burnings = enumerate_burnings(g);
        let picks: BTreeSet<usize> = [0, burnings.len() / 2, burnings.len() - 1].into();
        for i in picks {
            let obj = BurnedGraph::from_burning(g.clone(), burnings[i].clone());
            for w in minimal_b_burned_subgraphs(&obj, SourcePrefix::Full, guard).map_err(|e| e.to_string())? {
                let (h, _) = w.subgraph.to_graph().map_err(|e| e.to_string())?;
                ensure!(classify(&h).tree, "{}: {:?} is not a tree", c.name, w.subgraph.vertices().as_slice());
                count += 1;
            }
        }
    }
    Ok(format!("{count} minimal subgraphs"))
}

fn extremal_paths() -> Outcome {
    for t in 1..=3 {
        for kind in ExtremalKind::ALL {
            let report = extremal_path_report(kind, t).ok_or(format!("{kind} {t}: no witness"))?;
            ensure!(report.n == kind.value(t), "{kind} {t}: length {}", report.n);
            ensure!(kind.constraint(t).accepts(&path(report.n), &report.witness), "{kind} {t}: bad witness");
        }
        let longer = path(t * t + 1);
        if let Some(b) = enumerate_burnings(&longer).iter().find(|b| b.end_time() <= t) {
            return Err(format!("P_{} burns by time {t} via {:?}", t * t + 1, b.sources().as_slice()));
        }
        for n in 1..2 * t - 1 {
            if let Some(b) = enumerate_burnings(&path(n)).iter().find(|b| b.source_count() == t) {
                return Err(format!("P_{n} burns with {t} sources via {:?}", b.sources().as_slice()));
            }
        }
    }
    Ok("T, k = 1..3".into())
}

fn odd_cycles() -> Outcome {
    let mut graphs = vec![NamedGraph::Complete(3).build().expect("valid"), NamedGraph::Cycle(5).build().expect("valid")];
    graphs.extend(corpus::standard().into_iter().filter(|c| c.graph.vertex_count() <= 6).map(|c| c.graph));
    let mut count = 0;
    for g in graphs.iter().filter(|g| !classify(g).bipartite) {
        for b in enumerate_burnings(g) {
            ensure!(!burning_map(g, &b).is_homomorphism(), "{:?} via {:?}", g.edges(), b.sources().as_slice());
        }
        count += 1;
    }
    Ok(format!("{count} non-bipartite graphs"))
}

fn suspension_shift() -> Outcome {
    let graphs = corpus::connected(6);
    for c in &graphs {
        let base = homology(&configuration_space(&c.graph), true, Coefficients::Integers);
        let suspended =
            homology(&configuration_space(&disjoint_union(&c.graph, &path(2))), true, Coefficients::Integers);
        for k in 0..=base.len().max(suspended.len()) {
            let expected = if k == 0 { HomologyGroup::default() } else { group(&base, k - 1) };
            ensure!(group(&suspended, k) == expected, "{}: degree {k}: {} vs {expected}", c.name, group(&suspended, k));
        }
    }
    Ok(format!("{} connected graphs", graphs.len()))
}

fn property_suites() -> Outcome {
    let graphs = corpus::standard();
    for c in &graphs {
        let g = &c.graph;
        for b in enumerate_burnings(g) {
            let (s, l, t) = (b.sources().as_slice(), b.lambda(), b.end_time());
            ensure!(s.iter().enumerate().all(|(i, &v)| l[v] == i + 1), "{}: source times {s:?}", c.name);
            ensure!((1..=t).all(|i| l.contains(&i)), "{}: times of {s:?} not onto", c.name);
            ensure!(t == s.len() || t == s.len() + 1, "{}: end time of {s:?}", c.name);
            ensure!(g.edges().iter().all(|&(u, v)| l[u].abs_diff(l[v]) <= 1), "{}: jump in {s:?}", c.name);
            burning_map(g, &b);
        }
    }
    for c in graphs.iter().filter(|c| c.graph.vertex_count() <= 7) {
        let complex = configuration_space(&c.graph);
        for augmented in [false, true] {
            let chains = ChainComplex::new(&complex, augmented);
            for q in 1..=chains.top_degree() + 1 {
                ensure!(chains.boundary(q - 1).mul(chains.boundary(q)).is_zero(), "{}: degree {q}", c.name);
            }
        }
        let alt = |q: usize, n: usize| if q % 2 == 0 { n as i64 } else { -(n as i64) };
        let faces: i64 = complex.f_vector().iter().enumerate().map(|(q, &n)| alt(q, n)).sum();
        let ranks: i64 =
            homology(&complex, false, Coefficients::Integers).iter().enumerate().map(|(q, h)| alt(q, h.free_rank)).sum();
        ensure!(faces == ranks, "{}: Euler characteristic {faces} vs {ranks}", c.name);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    for _ in 0..100 {
        let rows: Vec<Vec<i64>> = (0..5).map(|_| (0..5).map(|_| rng.random_range(-9..=9)).collect()).collect();
        let m = IntegerMatrix::from_rows(&rows);
        let got = smith_normal_form(&m).diagonal;
        let expected = determinantal_divisors(&m);
        ensure!(got == expected, "matrix {rows:?}: {got:?} vs {expected:?}");
    }
    category_laws()?;
    Ok(format!("{} graphs, 100 matrices", graphs.len()))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<BigInt>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
            let term = &m[0][j] * determinant(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Invariant factors as quotients of successive gcds of `k × k` minors.
fn determinantal_divisors(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = BigInt::zero();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let minor: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| m.get(r, c).clone()).collect()).collect();
                g = g.gcd(&determinant(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

fn all_morphisms<'a>(a: &'a BurnedGraph, b: &'a BurnedGraph) -> Vec<BurningMorphism<'a>> {
    let (n, m) = (a.graph.vertex_count(), b.graph.vertex_count());
    let mut out = Vec::new();
    let mut f = vec![0; n];
    loop {
        if let Ok(mor) = validate_morphism(&f, a, b) {
            out.push(mor);
        }
        let Some(i) = (0..n).find(|&i| f[i] + 1 < m) else { break };
        f[i] += 1;
        f[..i].iter_mut().for_each(|x| *x = 0);
    }
    out
}

fn category_laws() -> Result<(), String> {
    let mut objects = Vec::new();
    for spec in [NamedGraph::Path(2), NamedGraph::Path(3), NamedGraph::Path(4), NamedGraph::Cycle(4)] {
        let g = spec.build().expect("valid");
        for b in enumerate_burnings(&g).into_iter().take(3) {
            objects.push(BurnedGraph::from_burning(g.clone(), b));
        }
    }
    let homs: Vec<Vec<Vec<BurningMorphism>>> =
        objects.iter().map(|a| objects.iter().map(|b| all_morphisms(a, b)).collect()).collect();
    let err = |e: crate::burning::MorphismError| e.to_string();
    for i in 0..objects.len() {
        for j in 0..objects.len() {
            for f in &homs[i][j] {
                let left = compose_morphisms(&BurningMorphism::identity(&objects[i]), f).map_err(err)?;
                let right = compose_morphisms(f, &BurningMorphism::identity(&objects[j])).map_err(err)?;
                ensure!(&left == f && &right == f, "identity law for {:?}", f.map().vertex_fn());
                for k in 0..objects.len() {
                    for g in homs[j][k].iter().take(3) {
                        let gf = compose_morphisms(f, g).map_err(err)?;
                        for h in homs[k].iter().flat_map(|row| row.iter().take(1)) {
                            let lhs = compose_morphisms(&gf, h).map_err(err)?;
                            let rhs = compose_morphisms(f, &compose_morphisms(g, h).map_err(err)?).map_err(err)?;
                            ensure!(lhs == rhs, "associativity for {:?}", f.map().vertex_fn());
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
