//! Extremal burnings of path graphs: the longest path burnable by a given
//! time or number of sources, and the shortest path needing a given number
//! of sources.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::{burning_map, search::BurnSearch, validate_burning, Burning, SourceSequence};
use crate::graph::{Graph, NamedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtremalKind {
    /// Longest path burnable with end time `T`.
    MaxVerticesForTime,
    /// Same, with a homomorphic burning map.
    MaxVerticesForTimeHom,
    /// Longest path burnable with `k` sources.
    MaxVerticesForSources,
    /// Shortest path burnable with `k` sources.
    MinVerticesForSources,
    /// Same, with a homomorphic burning map.
    MinVerticesForSourcesHom,
}

impl ExtremalKind {
    pub const ALL: [ExtremalKind; 5] = [
        ExtremalKind::MaxVerticesForTime,
        ExtremalKind::MaxVerticesForTimeHom,
        ExtremalKind::MaxVerticesForSources,
        ExtremalKind::MinVerticesForSources,
        ExtremalKind::MinVerticesForSourcesHom,
    ];

    fn name(self) -> &'static str {
        match self {
            ExtremalKind::MaxVerticesForTime => "max-n-for-T",
            ExtremalKind::MaxVerticesForTimeHom => "max-n-for-T-hom",
            ExtremalKind::MaxVerticesForSources => "max-n-for-k",
            ExtremalKind::MinVerticesForSources => "min-n-for-k",
            ExtremalKind::MinVerticesForSourcesHom => "min-n-for-k-hom",
        }
    }

    /// The extremal path length for parameter `t` (a time or a source count).
    pub fn value(self, t: usize) -> usize {
        match self {
            ExtremalKind::MaxVerticesForTime => t * t,
            ExtremalKind::MaxVerticesForTimeHom => t * t - t + 1,
            ExtremalKind::MaxVerticesForSources => t * t + 2 * t,
            ExtremalKind::MinVerticesForSources => 2 * t - 1,
            ExtremalKind::MinVerticesForSourcesHom => 3 * t - 2,
        }
    }

    /// The constraint a witness burning must satisfy for parameter `t`.
    pub fn constraint(self, t: usize) -> PathConstraint {
        match self {
            ExtremalKind::MaxVerticesForTime => PathConstraint { max_end_time: Some(t), ..Default::default() },
            ExtremalKind::MaxVerticesForTimeHom => {
                PathConstraint { max_end_time: Some(t), homomorphism: true, ..Default::default() }
            }
            ExtremalKind::MaxVerticesForSources | ExtremalKind::MinVerticesForSources => {
                PathConstraint { sources: Some(t), ..Default::default() }
            }
            ExtremalKind::MinVerticesForSourcesHom => {
                PathConstraint { sources: Some(t), homomorphism: true, ..Default::default() }
            }
        }
    }

    /// The closed-form source sequence from the literature, 1-based.
    fn closed_form(self, t: usize) -> Option<Vec<usize>> {
        match self {
            ExtremalKind::MaxVerticesForTime => Some(
                std::iter::once(t)
                    .chain((2..=t).map(|j| (t + 1 - j..t).map(|i| 2 * i + 1).sum::<usize>() + t - j + 1))
                    .collect(),
            ),
            ExtremalKind::MaxVerticesForTimeHom => Some(
                std::iter::once(t)
                    .chain((2..t).map(|j| (t + 1 - j..t).map(|i| 2 * i).sum::<usize>() + t - j))
                    .collect(),
            ),
            ExtremalKind::MaxVerticesForSources => None,
            ExtremalKind::MinVerticesForSources => Some((1..=t).map(|i| 2 * i - 1).collect()),
            ExtremalKind::MinVerticesForSourcesHom => Some((1..=t).map(|i| 3 * i - 2).collect()),
        }
    }
}

impl fmt::Display for ExtremalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExtremalKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExtremalKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown extremal kind `{s}`"))
    }
}

/// Requirements on a burning of a path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PathConstraint {
    /// Exact number of sources.
    pub sources: Option<usize>,
    /// Upper bound on the end time.
    pub max_end_time: Option<usize>,
    pub homomorphism: bool,
}

impl PathConstraint {
    pub fn accepts(&self, g: &Graph, b: &Burning) -> bool {
        self.sources.is_none_or(|k| b.source_count() == k)
            && self.max_end_time.is_none_or(|t| b.end_time() <= t)
            && (!self.homomorphism || burning_map(g, b).is_homomorphism())
    }

    fn source_limit(&self) -> Option<usize> {
        match (self.sources, self.max_end_time) {
            (Some(k), Some(t)) => Some(k.min(t)),
            (k, t) => k.or(t),
        }
    }
}

/// The first burning of `P_n`, in lexicographic order, meeting `c`.
pub fn find_path_burning(n: usize, c: PathConstraint) -> Option<Burning> {
    let path = NamedGraph::Path(n).build().ok()?;
    let mut found = None;
    let _ = BurnSearch::new(&path).run(&[], c.source_limit(), &mut |b| {
        if c.accepts(&path, &b) {
            found = Some(b);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub kind: ExtremalKind,
    pub param: usize,
    /// The extremal path length.
    pub n: usize,
    /// A validated burning of `P_n` meeting the kind's constraint.
    pub witness: Burning,
    pub is_homomorphism: bool,
    /// Whether the witness is the closed-form sequence rather than a search result.
    pub closed_form: bool,
}

/// The extremal length for `kind` at `param`, with a witness burning.
///
/// The closed-form sequence is validated first; when it is not a valid
/// witness the lexicographically first valid burning is used instead.
/// Returns `None` for `param = 0` or if no witness exists.
pub fn extremal_path_report(kind: ExtremalKind, param: usize) -> Option<ExtremalReport> {
    if param == 0 {
        return None;
    }
    let n = kind.value(param);
    let path = NamedGraph::Path(n).build().ok()?;
    let constraint = kind.constraint(param);
    let closed = kind
        .closed_form(param)
        .and_then(|one_based| SourceSequence::new(one_based.iter().map(|v| v - 1).collect()).ok())
        .and_then(|s| validate_burning(&path, &s).ok())
        .filter(|b| constraint.accepts(&path, b));
    let (witness, closed_form) = match closed {
        Some(b) => (b, true),
        None => (find_path_burning(n, constraint)?, false),
    };
    let is_homomorphism = burning_map(&path, &witness).is_homomorphism();
    Some(ExtremalReport { kind, param, n, witness, is_homomorphism, closed_form })
}
