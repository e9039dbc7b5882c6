//! The subgraph induced by the degree-2 vertices: its path/cycle census,
//! the keep/reject verdict for double-edge lifting, maximum matchings,
//! and the lifts themselves.

use crate::graph::{canonical_key, CanonicalKey, Multigraph};
use std::collections::HashSet;
use std::fmt;

/// Shape of one connected component of the degree-2 induced subgraph.
/// With every degree at most 2, paths and cycles are the only options;
/// an isolated vertex counts as a one-vertex path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// Component census of the degree-2 induced subgraph, sorted by
/// (kind, order) for deterministic reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTwoProfile {
    pub components: Vec<(ComponentKind, usize)>,
}

impl DegreeTwoProfile {
    /// Total number of degree-2 vertices.
    pub fn order(&self) -> usize {
        self.components.iter().map(|&(_, len)| len).sum()
    }

    pub fn cycles(&self) -> usize {
        self.components
            .iter()
            .filter(|&&(kind, _)| kind == ComponentKind::Cycle)
            .count()
    }

    pub fn odd_paths(&self) -> usize {
        self.components
            .iter()
            .filter(|&&(kind, len)| kind == ComponentKind::Path && len % 2 == 1)
            .count()
    }
}

impl fmt::Display for DegreeTwoProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|&(kind, len)| match kind {
                ComponentKind::Path => format!("P{len}"),
                ComponentKind::Cycle => format!("C{len}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Whether a base graph can contribute double-edge lifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Keep,
    Reject(RejectReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    /// A cycle among the degree-2 vertices that does not span the graph.
    ShortCycle,
    MultipleOddPaths,
    ZeroOddPaths,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RejectReason::ShortCycle => "short cycle",
            RejectReason::MultipleOddPaths => "multiple odd paths",
            RejectReason::ZeroOddPaths => "zero odd paths",
        };
        write!(f, "{s}")
    }
}

/// Subgraph induced by the degree-2 vertices, plus the map from its
/// vertex indices back to the host graph's.
pub fn degree2_subgraph(h: &Multigraph) -> (Multigraph, Vec<usize>) {
    let map: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 2).collect();
    let mut f = Multigraph::empty(map.len());
    for a in 0..map.len() {
        for b in (a + 1)..map.len() {
            let m = h.mult(map[a], map[b]);
            if m > 0 {
                f.set_mult(a, b, m);
            }
        }
    }
    (f, map)
}

/// Census of the degree-2 induced subgraph and the verdict on whether
/// the host graph admits near-perfect double-edge lifts: keep when the
/// induced subgraph is a spanning cycle or a disjoint union of paths
/// with exactly one of odd order.
///
/// A matching that covers all but one degree-2 vertex exists precisely
/// under the path condition (every even path or cycle matches
/// perfectly, an odd path all but one end); a non-spanning cycle is
/// rejected outright because its vertices have both their host edges
/// inside it, making it a whole connected component of the host.
pub fn classify_f(h: &Multigraph) -> (DegreeTwoProfile, Verdict) {
    let (f, _) = degree2_subgraph(h);
    let mut components = Vec::new();
    for comp in f.components() {
        let kind = if !comp.is_empty() && comp.iter().all(|&v| f.degree(v) == 2) {
            ComponentKind::Cycle
        } else {
            ComponentKind::Path
        };
        components.push((kind, comp.len()));
    }
    components.sort_unstable();
    let profile = DegreeTwoProfile { components };

    let spanning_cycle =
        profile.components.len() == 1 && profile.components[0] == (ComponentKind::Cycle, h.n());
    let verdict = if spanning_cycle {
        Verdict::Keep
    } else if profile.cycles() > 0 {
        Verdict::Reject(RejectReason::ShortCycle)
    } else {
        match profile.odd_paths() {
            1 => Verdict::Keep,
            0 => Verdict::Reject(RejectReason::ZeroOddPaths),
            _ => Verdict::Reject(RejectReason::MultipleOddPaths),
        }
    };
    (profile, verdict)
}

/// All maximum matchings of a graph whose components are paths and
/// cycles, as sorted edge lists over the graph's own vertex indices.
/// The edgeless graph has exactly one (empty) maximum matching.
pub fn max_matchings_of_f(f: &Multigraph) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = f.edges().map(|(u, v, _)| (u, v)).collect();
    let mut all: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut used = vec![false; f.n()];
    collect_matchings(&edges, 0, &mut used, &mut Vec::new(), &mut all);
    let best = all.iter().map(Vec::len).max().unwrap_or(0);
    let mut out: Vec<_> = all.into_iter().filter(|m| m.len() == best).collect();
    out.sort_unstable();
    out
}

fn collect_matchings(
    edges: &[(usize, usize)],
    i: usize,
    used: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    all: &mut Vec<Vec<(usize, usize)>>,
) {
    if i == edges.len() {
        all.push(current.clone());
        return;
    }
    collect_matchings(edges, i + 1, used, current, all);
    let (u, v) = edges[i];
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        current.push((u, v));
        collect_matchings(edges, i + 1, used, current, all);
        current.pop();
        used[u] = false;
        used[v] = false;
    }
}

/// Doubles each matching's edges in the base graph, one output per
/// isomorphism class, sorted by canonical key. Matchings are given as
/// host-graph vertex pairs; every pair must be an existing single edge.
pub fn lift_to_m(h: &Multigraph, matchings: &[Vec<(usize, usize)>]) -> Vec<Multigraph> {
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out: Vec<(CanonicalKey, Multigraph)> = Vec::new();
    for matching in matchings {
        let mut lifted = h.clone();
        for &(u, v) in matching {
            assert_eq!(
                lifted.mult(u, v),
                1,
                "lift must double an existing single edge"
            );
            lifted.set_mult(u, v, 2);
        }
        debug_assert!(lifted.max_multiplicity() <= 2);
        let key = canonical_key(&lifted);
        if seen.insert(key.clone()) {
            out.push((key, lifted));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, path};

    /// Complement of the 5-vertex path 0-1-2-3-4.
    fn p5_complement() -> Multigraph {
        let mut g = Multigraph::empty(5);
        for (u, v) in [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)] {
            g.set_mult(u, v, 1);
        }
        g
    }

    /// K4 with one edge subdivided twice: degree-2 vertices 4 and 5 are
    /// adjacent, so the induced subgraph is a single even path.
    fn k4_double_subdivision() -> Multigraph {
        let mut g = Multigraph::empty(6);
        for (u, v) in [
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (0, 4),
            (4, 5),
            (5, 1),
        ] {
            g.set_mult(u, v, 1);
        }
        g
    }

    #[test]
    fn p5_complement_keeps_with_one_matching() {
        let h = p5_complement();
        assert_eq!(h.degree_sequence(), vec![3, 3, 2, 2, 2]);
        let (profile, verdict) = classify_f(&h);
        assert_eq!(verdict, Verdict::Keep);
        assert_eq!(
            profile.components,
            vec![(ComponentKind::Path, 1), (ComponentKind::Path, 2)]
        );
        let (f, map) = degree2_subgraph(&h);
        assert_eq!(map, vec![1, 2, 3]);
        let matchings = max_matchings_of_f(&f);
        assert_eq!(matchings, vec![vec![(0, 2)]]); // h-edge (1, 3)
        let lifts = lift_to_m(&h, &[vec![(1, 3)]]);
        assert_eq!(lifts.len(), 1);
        assert_eq!(lifts[0].degree_sequence(), vec![3, 3, 3, 3, 2]);
        assert_eq!(lifts[0].max_multiplicity(), 2);
    }

    #[test]
    fn k23_is_rejected_for_multiple_odd_paths() {
        let (profile, verdict) = classify_f(&complete_bipartite(2, 3));
        assert_eq!(profile.components, vec![(ComponentKind::Path, 1); 3]);
        assert_eq!(verdict, Verdict::Reject(RejectReason::MultipleOddPaths));
        assert_eq!(profile.to_string(), "P1 + P1 + P1");
    }

    #[test]
    fn spanning_cycle_is_kept() {
        let (profile, verdict) = classify_f(&cycle(7));
        assert_eq!(profile.components, vec![(ComponentKind::Cycle, 7)]);
        assert_eq!(verdict, Verdict::Keep);
        assert_eq!(profile.to_string(), "C7");
    }

    #[test]
    fn short_cycle_is_rejected() {
        // Two disjoint cycles: every induced cycle is shorter than the host.
        let mut g = Multigraph::empty(7);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)] {
            g.set_mult(u, v, 1);
        }
        let (profile, verdict) = classify_f(&g);
        assert_eq!(profile.cycles(), 2);
        assert_eq!(verdict, Verdict::Reject(RejectReason::ShortCycle));
    }

    #[test]
    fn single_even_path_is_rejected() {
        let (profile, verdict) = classify_f(&k4_double_subdivision());
        assert_eq!(profile.components, vec![(ComponentKind::Path, 2)]);
        assert_eq!(verdict, Verdict::Reject(RejectReason::ZeroOddPaths));
    }

    #[test]
    fn matching_counts_on_paths_and_cycles() {
        assert_eq!(max_matchings_of_f(&path(5)).len(), 3);
        assert_eq!(max_matchings_of_f(&path(3)).len(), 2);
        assert_eq!(max_matchings_of_f(&path(2)).len(), 1);
        assert_eq!(max_matchings_of_f(&cycle(5)).len(), 5);
        assert_eq!(max_matchings_of_f(&cycle(6)).len(), 2);
        // Edgeless graph: one empty matching.
        let f = Multigraph::empty(3);
        assert_eq!(max_matchings_of_f(&f), vec![Vec::new()]);
    }

    #[test]
    fn matchings_are_maximum_and_disjoint() {
        for f in [path(7), cycle(9), k4_double_subdivision()] {
            let matchings = max_matchings_of_f(&f);
            assert!(!matchings.is_empty());
            let size = matchings[0].len();
            for m in &matchings {
                assert_eq!(m.len(), size);
                let mut covered = Vec::new();
                for &(u, v) in m {
                    assert_eq!(f.mult(u, v), 1);
                    covered.push(u);
                    covered.push(v);
                }
                covered.sort_unstable();
                covered.dedup();
                assert_eq!(covered.len(), 2 * size, "matching must be vertex-disjoint");
            }
        }
    }

    #[test]
    fn spanning_cycle_lifts_collapse_to_one_class() {
        let h = cycle(5);
        let (f, map) = degree2_subgraph(&h);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
        let matchings: Vec<Vec<(usize, usize)>> = max_matchings_of_f(&f)
            .into_iter()
            .map(|m| m.into_iter().map(|(a, b)| (map[a], map[b])).collect())
            .collect();
        assert_eq!(matchings.len(), 5);
        let lifts = lift_to_m(&h, &matchings);
        assert_eq!(lifts.len(), 1, "all five doubled matchings are isomorphic");
        assert_eq!(lifts[0].degree_sequence(), vec![3, 3, 3, 3, 2]);
    }
}
