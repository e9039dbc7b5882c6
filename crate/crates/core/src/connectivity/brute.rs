//! Brute-force connectivity oracles.
//!
//! Deliberately naive, structured nothing like the flow-based
//! implementations, so agreement between the two is meaningful
//! evidence of correctness.

use super::ConnectivityError;
use crate::graph::Multigraph;

const MAX_N: usize = 20;

/// κ′ by scanning all 2^{n−1} bipartitions containing vertex 0 and
/// taking the lightest boundary.
pub fn brute_force_edge_connectivity(g: &Multigraph) -> Result<u64, ConnectivityError> {
    let n = g.n();
    if n < 2 {
        return Err(ConnectivityError::TooFewVertices { n });
    }
    if n > MAX_N {
        return Err(ConnectivityError::TooLarge { n, max: MAX_N });
    }
    let mut best = u64::MAX;
    // Vertex 0 is always on the S side; the mask ranges over the rest.
    // The all-ones mask would leave the complement empty, so it is skipped.
    for mask in 0..(1u32 << (n - 1)) - 1 {
        let in_s = |v: usize| v == 0 || mask >> (v - 1) & 1 == 1;
        let mut boundary = 0u64;
        for (u, v, mult) in g.edges() {
            if in_s(u) != in_s(v) {
                boundary += mult as u64;
            }
        }
        best = best.min(boundary);
    }
    Ok(best)
}

/// κ by scanning vertex subsets in increasing size until one separates
/// the underlying simple graph; κ(K_n) = n − 1 by convention.
pub fn brute_force_vertex_connectivity(g: &Multigraph) -> Result<u32, ConnectivityError> {
    let n = g.n();
    if n < 2 {
        return Err(ConnectivityError::TooFewVertices { n });
    }
    if n > MAX_N {
        return Err(ConnectivityError::TooLarge { n, max: MAX_N });
    }
    let s = g.underlying_simple_graph();
    let min_degree = (0..n).map(|v| s.degree(v)).min().unwrap() as usize;
    for k in 0..=min_degree.min(n - 2) {
        let mut found = false;
        visit_subsets(n, k, &mut |subset| {
            if !found && disconnects(&s, subset) {
                found = true;
            }
        });
        if found {
            return Ok(k as u32);
        }
    }
    // No separating set of size ≤ min degree: for a complete underlying
    // graph that means κ = n − 1, otherwise κ = whatever the neighborhood
    // of a minimum-degree vertex provides.
    let complete = (0..n).all(|u| (0..n).all(|v| u == v || s.mult(u, v) > 0));
    if complete {
        Ok((n - 1) as u32)
    } else {
        Ok(min_degree as u32)
    }
}

fn visit_subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    let mut subset = Vec::with_capacity(k);
    fn recurse(
        start: usize,
        n: usize,
        k: usize,
        subset: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if subset.len() == k {
            f(subset);
            return;
        }
        for v in start..n {
            if n - v < k - subset.len() {
                break;
            }
            subset.push(v);
            recurse(v + 1, n, k, subset, f);
            subset.pop();
        }
    }
    recurse(0, n, k, &mut subset, f);
}

/// Is the simple graph minus `removed` disconnected (at least two
/// components among the remaining vertices)?
fn disconnects(s: &Multigraph, removed: &[usize]) -> bool {
    let n = s.n();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let Some(start) = (0..n).find(|&v| !gone[v]) else {
        return false;
    };
    let remaining = n - removed.len();
    if remaining < 2 {
        return false;
    }
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for u in s.neighbors(v) {
            if !gone[u] && !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count < remaining
}
