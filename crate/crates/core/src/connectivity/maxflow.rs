//! Vertex connectivity via vertex-splitting max-flow.
//!
//! Every vertex v becomes an arc in(v) → out(v) of capacity 1; every
//! edge of the underlying simple graph becomes two uncapacitated arcs.
//! By Menger's theorem the max flow from out(s) to in(t) equals the
//! number of internally disjoint s–t paths, and the minimum over
//! non-adjacent pairs (s, t) is κ(G). Complete graphs have no such
//! pair; κ(K_n) = n − 1 by convention.

use super::ConnectivityError;
use crate::graph::Multigraph;

const INF: i64 = i64::MAX / 4;

/// κ(G) of the underlying simple graph (vertex cuts ignore multiplicity).
pub fn vertex_connectivity(g: &Multigraph) -> Result<u32, ConnectivityError> {
    if g.n() < 2 {
        return Err(ConnectivityError::TooFewVertices { n: g.n() });
    }
    let s = g.underlying_simple_graph();
    let n = s.n();
    let mut best: Option<u32> = None;
    for u in 0..n {
        for v in (u + 1)..n {
            if s.mult(u, v) == 0 {
                let flow = min_vertex_cut_between(&s, u, v);
                if best.map_or(true, |b| flow < b) {
                    best = Some(flow);
                    if flow == 0 {
                        return Ok(0);
                    }
                }
            }
        }
    }
    // No non-adjacent pair means the underlying graph is complete.
    Ok(best.unwrap_or((n - 1) as u32))
}

/// Maximum number of internally vertex-disjoint s–t paths for
/// non-adjacent s, t, by BFS augmentation on the split digraph.
fn min_vertex_cut_between(simple: &Multigraph, s: usize, t: usize) -> u32 {
    let n = simple.n();
    let size = 2 * n;
    let node_in = |v: usize| 2 * v;
    let node_out = |v: usize| 2 * v + 1;
    let mut cap = vec![vec![0i64; size]; size];
    for v in 0..n {
        cap[node_in(v)][node_out(v)] = 1;
    }
    for (u, v, _) in simple.edges() {
        cap[node_out(u)][node_in(v)] = INF;
        cap[node_out(v)][node_in(u)] = INF;
    }
    let (source, sink) = (node_out(s), node_in(t));

    let mut flow = 0i64;
    loop {
        let mut parent = vec![usize::MAX; size];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..size {
                if parent[y] == usize::MAX && cap[x][y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut bottleneck = INF;
        let mut y = sink;
        while y != source {
            let x = parent[y];
            bottleneck = bottleneck.min(cap[x][y]);
            y = x;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            cap[x][y] -= bottleneck;
            cap[y][x] += bottleneck;
            y = x;
        }
        flow += bottleneck;
    }
    flow as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, extremal_5vertex, path, petersen, Multigraph};

    #[test]
    fn known_vertex_connectivities() {
        assert_eq!(vertex_connectivity(&complete(4)).unwrap(), 3);
        assert_eq!(vertex_connectivity(&path(3)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&cycle(6)).unwrap(), 2);
        assert_eq!(vertex_connectivity(&petersen()).unwrap(), 3);
        assert_eq!(
            vertex_connectivity(&extremal_5vertex(1).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            vertex_connectivity(&extremal_5vertex(4).unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn multiplicities_do_not_help() {
        // A doubled path is still 1-vertex-connected.
        let g = Multigraph::parse_mg("mg 3\n0 2 0\n2 0 2\n0 2 0").unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 1);
    }

    #[test]
    fn complete_graph_convention_holds_for_doubled_edges() {
        let g = Multigraph::parse_mg("mg 2\n0 5\n5 0").unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 1);
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Multigraph::parse_mg("mg 4\n0 1 0 0\n1 0 0 0\n0 0 0 1\n0 0 1 0").unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 0);
    }

    #[test]
    fn single_vertex_is_an_error() {
        assert!(vertex_connectivity(&Multigraph::empty(1)).is_err());
    }
}
