//! Exact Cheeger constant by exhaustive subset scan.
//!
//! h(G) = min over non-empty S with |S| ≤ n/2 of [S,S̄]/|S|, boundary
//! counted with multiplicity. Subsets are visited in Gray-code order so
//! each step flips one vertex and updates the boundary incrementally;
//! the running minimum is kept as an exact integer fraction.

use super::ConnectivityError;
use crate::graph::Multigraph;
use crate::spectral;

const MAX_N: usize = 22;

/// Exact h(G). Zero iff the graph is disconnected.
pub fn cheeger_constant(g: &Multigraph) -> Result<f64, ConnectivityError> {
    let (num, den) = cheeger_fraction(g)?;
    Ok(num as f64 / den as f64)
}

/// h(G) as an exact fraction (boundary, |S|) of a minimizing subset.
pub fn cheeger_fraction(g: &Multigraph) -> Result<(u64, u64), ConnectivityError> {
    let n = g.n();
    if n < 2 {
        return Err(ConnectivityError::TooFewVertices { n });
    }
    if n > MAX_N {
        return Err(ConnectivityError::TooLarge { n, max: MAX_N });
    }

    let mut in_s = vec![false; n];
    let mut size = 0u64;
    let mut boundary = 0u64;
    let mut best: Option<(u64, u64)> = None;
    // Gray code: between step i−1 and i the flipped bit is the number
    // of trailing zeros of i, so every subset is one flip from the last.
    for i in 1u64..1 << n {
        let v = i.trailing_zeros() as usize;
        let joining = !in_s[v];
        for u in g.neighbors(v) {
            let mult = g.mult(u, v) as u64;
            let crossing_before = in_s[u] != in_s[v];
            if crossing_before {
                boundary -= mult;
            } else {
                boundary += mult;
            }
        }
        in_s[v] = joining;
        size = if joining { size + 1 } else { size - 1 };
        if size == 0 || 2 * size > n as u64 {
            continue;
        }
        let better = match best {
            None => true,
            // boundary/size < bn/bs  ⟺  boundary·bs < bn·size
            Some((bn, bs)) => (boundary as u128) * (bs as u128) < (bn as u128) * (size as u128),
        };
        if better {
            best = Some((boundary, size));
            if boundary == 0 {
                break;
            }
        }
    }
    Ok(best.expect("n ≥ 2 guarantees a candidate subset"))
}

/// The spectral sandwich ((d − λ2)/2, h(G), √(2d(d − λ2))) for a
/// d-regular multigraph. The gap d − λ2 is clamped at zero so the
/// disconnected case (λ2 = d up to rounding) yields (0, 0, ~0).
pub fn cheeger_sandwich(g: &Multigraph, d: u32) -> Result<(f64, f64, f64), ConnectivityError> {
    match g.regular_degree() {
        Some(deg) if deg == d => {}
        _ => return Err(ConnectivityError::NotRegular { expected: d }),
    }
    let h = cheeger_constant(g)?;
    let lambda2 =
        spectral::lambda2(g).map_err(|_| ConnectivityError::TooFewVertices { n: g.n() })?;
    let gap = (d as f64 - lambda2).max(0.0);
    let lower = gap / 2.0;
    let upper = (2.0 * d as f64 * gap).sqrt();
    assert!(
        lower <= h + 1e-8 && h <= upper + 1e-8,
        "Cheeger sandwich violated: {lower} ≤ {h} ≤ {upper}"
    );
    Ok((lower, h, upper))
}
