//! Exact connectivity invariants: κ, κ′, cut edges, Cheeger constant,
//! and deliberately independent brute-force oracles for each.

mod brute;
mod cheeger;
mod maxflow;
mod stoer_wagner;

pub use brute::{brute_force_edge_connectivity, brute_force_vertex_connectivity};
pub use cheeger::{cheeger_constant, cheeger_fraction, cheeger_sandwich};
pub use maxflow::vertex_connectivity;
pub use stoer_wagner::edge_connectivity;

use crate::graph::Multigraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConnectivityError {
    #[error("graph on {n} vertices has no meaningful connectivity")]
    TooFewVertices { n: usize },
    #[error("graph on {n} vertices exceeds the exhaustive-scan limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not {expected}-regular")]
    NotRegular { expected: u32 },
}

/// Cut edges (bridges) of a connected multigraph, lexicographically
/// sorted. A parallel class of multiplicity ≥ 2 is never a cut edge:
/// deleting one copy leaves the other.
pub fn cut_edges(g: &Multigraph) -> Result<Vec<(usize, usize)>, ConnectivityError> {
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    let simple = g.underlying_simple_graph();
    let n = simple.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut bridges = Vec::new();
    dfs_bridges(
        &simple,
        0,
        usize::MAX,
        &mut disc,
        &mut low,
        &mut time,
        &mut bridges,
    );
    let mut edges: Vec<(usize, usize)> = bridges
        .into_iter()
        .filter(|&(u, v)| g.mult(u, v) == 1)
        .collect();
    edges.sort_unstable();
    Ok(edges)
}

fn dfs_bridges(
    simple: &Multigraph,
    v: usize,
    parent: usize,
    disc: &mut [usize],
    low: &mut [usize],
    time: &mut usize,
    out: &mut Vec<(usize, usize)>,
) {
    disc[v] = *time;
    low[v] = *time;
    *time += 1;
    for u in simple.neighbors(v) {
        if disc[u] == usize::MAX {
            dfs_bridges(simple, u, v, disc, low, time, out);
            low[v] = low[v].min(low[u]);
            if low[u] > disc[v] {
                out.push((v.min(u), v.max(u)));
            }
        } else if u != parent {
            low[v] = low[v].min(disc[u]);
        }
    }
}

/// The cut edge whose removal leaves the smallest small side, together
/// with that size sc; ties broken by lexicographic edge order. None for
/// 2-edge-connected graphs.
pub fn min_sc_cut_edge(
    g: &Multigraph,
) -> Result<Option<((usize, usize), usize)>, ConnectivityError> {
    let edges = cut_edges(g)?;
    let mut best: Option<((usize, usize), usize)> = None;
    for (u, v) in edges {
        let mut cut = g.clone();
        cut.set_mult(u, v, 0);
        let sc = cut
            .components()
            .iter()
            .map(|c| c.len())
            .min()
            .expect("cut edge removal leaves components");
        if best.map_or(true, |(_, bs)| sc < bs) {
            best = Some(((u, v), sc));
        }
    }
    Ok(best)
}

/// Everything the certificate pipeline needs about connectivity.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectivityReport {
    pub kappa: u32,
    pub kappa_prime: u64,
    pub is_connected: bool,
    pub cut_edges: Vec<(usize, usize)>,
    /// Smallest small-side order over all cut-edge removals; 0 when
    /// there is no cut edge.
    pub sc_min: usize,
}

pub fn connectivity_report(g: &Multigraph) -> Result<ConnectivityReport, ConnectivityError> {
    let kappa = vertex_connectivity(g)?;
    let kappa_prime = edge_connectivity(g)?;
    let is_connected = kappa_prime >= 1;
    let (cut_edges, sc_min) = if is_connected {
        let edges = cut_edges(g)?;
        let sc = min_sc_cut_edge(g)?.map_or(0, |(_, sc)| sc);
        (edges, sc)
    } else {
        (Vec::new(), 0)
    };
    Ok(ConnectivityReport {
        kappa,
        kappa_prime,
        is_connected,
        cut_edges,
        sc_min,
    })
}
