//! Named graph constructors: standard small graphs plus the two extremal
//! multigraph families whose second-largest eigenvalue meets the bound
//! thresholds exactly.

use super::{GraphError, Multigraph};

/// Complete simple graph `K_n`.
pub fn complete(n: usize) -> Multigraph {
    let mut g = Multigraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.set_mult(u, v, 1);
        }
    }
    g
}

/// Complete graph with every edge duplicated `mult` times. The excluded
/// case of the partition bounds: an inflated `K_n` keeps `lambda_2` low
/// while its connectivity is pinned at `n - 1`.
pub fn doubled_complete(n: usize, mult: u32) -> Multigraph {
    let mut g = Multigraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.set_mult(u, v, mult);
        }
    }
    g
}

/// Cycle `C_n` (`n >= 3`).
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = Multigraph::empty(n);
    for v in 0..n {
        g.set_mult(v, (v + 1) % n, 1);
    }
    g
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Multigraph {
    let mut g = Multigraph::empty(n);
    for v in 1..n {
        g.set_mult(v - 1, v, 1);
    }
    g
}

/// Complete bipartite graph `K_{a,b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut g = Multigraph::empty(a + b);
    for u in 0..a {
        for v in a..(a + b) {
            g.set_mult(u, v, 1);
        }
    }
    g
}

/// The Petersen graph: outer 5-cycle, inner 5-cycle with step 2, spokes.
pub fn petersen() -> Multigraph {
    let mut g = Multigraph::empty(10);
    for v in 0..5 {
        g.set_mult(v, (v + 1) % 5, 1);
        g.set_mult(5 + v, 5 + (v + 2) % 5, 1);
        g.set_mult(v, 5 + v, 1);
    }
    g
}

/// The 5-vertex `4k`-regular multigraph with `kappa = 1` whose
/// `lambda_2` equals `(8n - 25) / (9n - 25) * d` at `n = 5`: two heavy
/// pairs hang off a single middle cut-vertex.
///
/// Multiplicity matrix (`d = 4k`):
///
/// ```text
///   0    3d/4  d/4  0    0
///   3d/4 0     d/4  0    0
///   d/4  d/4   0    d/4  d/4
///   0    0     d/4  0    3d/4
///   0    0     d/4  3d/4 0
/// ```
pub fn extremal_5vertex(k: u32) -> Result<Multigraph, GraphError> {
    if k < 1 {
        return Err(GraphError::InvalidParameter(format!(
            "extremal_5vertex needs k >= 1, got {k}"
        )));
    }
    let quarter = k; // d/4 with d = 4k
    let mut g = Multigraph::empty(5);
    g.set_mult(0, 1, 3 * quarter);
    g.set_mult(0, 2, quarter);
    g.set_mult(1, 2, quarter);
    g.set_mult(2, 3, quarter);
    g.set_mult(2, 4, quarter);
    g.set_mult(3, 4, 3 * quarter);
    Ok(g)
}

/// The 6-vertex `d`-regular multigraph (`d` odd, `d >= 3`) with a single
/// cut-edge, whose `lambda_2` equals `(d - 1 + sqrt(9d^2 - 10d + 17)) / 4`:
/// two triangles of heavy edges joined by one bridge.
///
/// Vertices `{0, 1, 2}` and `{3, 4, 5}`; `0-1` has multiplicity
/// `(d + 1) / 2`, `0-2` and `1-2` have `(d - 1) / 2`, the bridge is `2-3`,
/// and the right block mirrors the left.
pub fn extremal_6vertex(d: u32) -> Result<Multigraph, GraphError> {
    if d < 3 || d % 2 == 0 {
        return Err(GraphError::InvalidParameter(format!(
            "extremal_6vertex needs odd d >= 3, got {d}"
        )));
    }
    let heavy = (d + 1) / 2;
    let light = (d - 1) / 2;
    let mut g = Multigraph::empty(6);
    g.set_mult(0, 1, heavy);
    g.set_mult(0, 2, light);
    g.set_mult(1, 2, light);
    g.set_mult(2, 3, 1);
    g.set_mult(3, 4, light);
    g.set_mult(3, 5, light);
    g.set_mult(4, 5, heavy);
    Ok(g)
}
