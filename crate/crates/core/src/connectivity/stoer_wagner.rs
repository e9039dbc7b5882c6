//! Global minimum edge cut by the Stoer–Wagner algorithm.
//!
//! Weights are edge multiplicities, kept in u64 so sums are exact. Each
//! phase grows a maximum-adjacency ordering, records the cut of the
//! phase, and merges the last two vertices; the minimum over all phases
//! is the global minimum cut.

use super::ConnectivityError;
use crate::graph::Multigraph;

/// κ′(G): weight of a global minimum edge cut, multiplicities counted.
/// Zero exactly when the graph is disconnected.
pub fn edge_connectivity(g: &Multigraph) -> Result<u64, ConnectivityError> {
    if g.n() < 2 {
        return Err(ConnectivityError::TooFewVertices { n: g.n() });
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let n = g.n();
    let mut w = vec![vec![0u64; n]; n];
    for (u, v, mult) in g.edges() {
        w[u][v] = mult as u64;
        w[v][u] = mult as u64;
    }

    let mut merged = vec![false; n];
    let mut best = u64::MAX;
    for phase in 0..n - 1 {
        let remaining = n - phase;
        let mut in_a = vec![false; n];
        let mut wsum = vec![0u64; n];
        let mut prev = usize::MAX;
        let mut last = usize::MAX;
        let mut cut_of_phase = 0;
        for _ in 0..remaining {
            let sel = (0..n)
                .filter(|&v| !merged[v] && !in_a[v])
                .max_by_key(|&v| wsum[v])
                .expect("unmerged vertex remains");
            prev = last;
            last = sel;
            cut_of_phase = wsum[sel];
            in_a[sel] = true;
            for v in 0..n {
                if !merged[v] && !in_a[v] {
                    wsum[v] += w[sel][v];
                }
            }
        }
        best = best.min(cut_of_phase);
        // Merge `last` into `prev`.
        merged[last] = true;
        for v in 0..n {
            if !merged[v] && v != prev {
                w[prev][v] += w[last][v];
                w[v][prev] = w[prev][v];
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, extremal_6vertex, petersen, Multigraph};

    #[test]
    fn known_edge_connectivities() {
        assert_eq!(edge_connectivity(&cycle(5)).unwrap(), 2);
        assert_eq!(edge_connectivity(&complete(5)).unwrap(), 4);
        assert_eq!(edge_connectivity(&petersen()).unwrap(), 3);
        assert_eq!(edge_connectivity(&extremal_6vertex(3).unwrap()).unwrap(), 1);
        assert_eq!(edge_connectivity(&extremal_6vertex(9).unwrap()).unwrap(), 1);
    }

    #[test]
    fn multiplicities_are_counted() {
        // Two vertices joined by a triple edge: κ′ = 3.
        let g = Multigraph::parse_mg("mg 2\n0 3\n3 0").unwrap();
        assert_eq!(edge_connectivity(&g).unwrap(), 3);
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Multigraph::parse_mg("mg 4\n0 1 0 0\n1 0 0 0\n0 0 0 1\n0 0 1 0").unwrap();
        assert_eq!(edge_connectivity(&g).unwrap(), 0);
    }

    #[test]
    fn single_vertex_is_an_error() {
        assert!(matches!(
            edge_connectivity(&Multigraph::empty(1)),
            Err(ConnectivityError::TooFewVertices { n: 1 })
        ));
    }
}
