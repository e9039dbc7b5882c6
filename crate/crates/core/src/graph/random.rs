//! Configuration-model sampler for random regular multigraphs.

use super::{GraphError, Multigraph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MAX_ATTEMPTS: u32 = 10_000;

/// Draws a uniform perfect matching on `n * d` half-edge stubs and keeps
/// the first sample without loops or multiplicities above `max_mult`.
/// Deterministic for a given seed.
pub fn random_regular_multigraph(
    n: usize,
    d: u32,
    max_mult: u32,
    seed: u64,
) -> Result<Multigraph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices { min: 2, found: n });
    }
    if d < 1 {
        return Err(GraphError::InvalidParameter("degree must be >= 1".into()));
    }
    if n % 2 == 1 && d % 2 == 1 {
        return Err(GraphError::InvalidParameter(format!(
            "n * d must be even, got n = {n}, d = {d}"
        )));
    }
    if u64::from(d) > (n as u64 - 1) * u64::from(max_mult) {
        return Err(GraphError::InvalidParameter(format!(
            "d = {d} exceeds (n - 1) * max_mult = {}",
            (n as u64 - 1) * u64::from(max_mult)
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n * d as usize).map(|i| i / d as usize).collect();
    'attempt: for _ in 0..MAX_ATTEMPTS {
        stubs.shuffle(&mut rng);
        let mut g = Multigraph::empty(n);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.mult(u, v) + 1 > max_mult {
                continue 'attempt;
            }
            g.add_edge(u, v, 1);
        }
        debug_assert_eq!(g.regular_degree(), Some(d));
        return Ok(g);
    }
    Err(GraphError::SamplingBudget {
        attempts: MAX_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertices_force_triple_edge() {
        for seed in 0..5 {
            let g = random_regular_multigraph(2, 3, 3, seed).unwrap();
            assert_eq!(g.mult(0, 1), 3);
        }
    }

    #[test]
    fn simple_cubic_on_four_vertices_is_k4() {
        use crate::graph::complete;
        for seed in 0..5 {
            let g = random_regular_multigraph(4, 3, 1, seed).unwrap();
            assert_eq!(g, complete(4));
        }
    }

    #[test]
    fn sampler_is_regular_and_deterministic() {
        let a = random_regular_multigraph(6, 3, 3, 7).unwrap();
        let b = random_regular_multigraph(6, 3, 3, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.regular_degree(), Some(3));
        let c = random_regular_multigraph(6, 3, 3, 8).unwrap();
        assert_eq!(c.regular_degree(), Some(3));
    }

    #[test]
    fn infeasible_parameters_error() {
        assert!(matches!(
            random_regular_multigraph(5, 3, 3, 0),
            Err(GraphError::InvalidParameter(_))
        ));
        assert!(matches!(
            random_regular_multigraph(2, 5, 3, 0),
            Err(GraphError::InvalidParameter(_))
        ));
        assert!(matches!(
            random_regular_multigraph(1, 2, 3, 0),
            Err(GraphError::TooFewVertices { .. })
        ));
    }

    #[test]
    fn respects_max_mult() {
        for seed in 0..50 {
            let g = random_regular_multigraph(8, 5, 2, seed).unwrap();
            assert!(g.max_multiplicity() <= 2);
            assert_eq!(g.regular_degree(), Some(5));
        }
    }
}
