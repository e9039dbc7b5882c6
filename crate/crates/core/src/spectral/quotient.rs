//! Equitable-or-not quotient matrices of vertex partitions.
//!
//! For a partition V = V_1 ∪ ⋯ ∪ V_s the quotient matrix has
//! Q_{ij} = [V_i, V_j] / |V_i| for i ≠ j (edges between the blocks,
//! counted with multiplicity) and Q_{ii} = 2|E(G[V_i])| / |V_i|.
//! Its eigenvalues are real — Q is similar to the symmetric matrix
//! D^{1/2} Q D^{−1/2} with D = diag(|V_i|) — and interlace the
//! eigenvalues of the graph.

use super::jacobi::jacobi_eigen;
use super::rational::{Rat, RatMatrix};
use super::SpectralError;
use crate::graph::Multigraph;
use num::BigRational;

/// Validated partition of the vertex set {0, …, n−1} into non-empty blocks.
#[derive(Clone, Debug)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    /// Checks that the blocks are non-empty and cover every vertex of a
    /// graph on `n` vertices exactly once.
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Partition, SpectralError> {
        let mut seen = vec![false; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(SpectralError::InvalidPartition(format!(
                    "block {i} is empty"
                )));
            }
            for &v in block {
                if v >= n {
                    return Err(SpectralError::InvalidPartition(format!(
                        "block {i} contains vertex {v}, but the graph has {n} vertices"
                    )));
                }
                if seen[v] {
                    return Err(SpectralError::InvalidPartition(format!(
                        "vertex {v} appears in more than one block"
                    )));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(SpectralError::InvalidPartition(format!(
                "vertex {v} is not covered by any block"
            )));
        }
        Ok(Partition { blocks, n })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Quotient matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    entries: RatMatrix,
    block_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn entries(&self) -> &RatMatrix {
        &self.entries
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        self.entries.entry(i, j)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries.to_f64()
    }

    /// Eigenvalues, descending. Computed on the symmetric similarity
    /// S_{ij} = B_{ij} / √(|V_i||V_j|) where B_{ij} is the block edge
    /// count, so the Jacobi solver applies directly.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let s = self.block_sizes.len();
        let q = self.to_f64();
        let mut sym = vec![vec![0.0; s]; s];
        for i in 0..s {
            for j in 0..s {
                let scale = (self.block_sizes[i] as f64 / self.block_sizes[j] as f64).sqrt();
                sym[i][j] = q[i][j] * scale;
            }
        }
        // Symmetrize away the last floating-point crumbs.
        for i in 0..s {
            for j in (i + 1)..s {
                let avg = 0.5 * (sym[i][j] + sym[j][i]);
                sym[i][j] = avg;
                sym[j][i] = avg;
            }
        }
        let (mut values, _) = jacobi_eigen(&sym);
        values.sort_by(|a, b| b.total_cmp(a));
        values
    }
}

/// Quotient matrix of `g` under partition `p`, with exact entries.
pub fn quotient_matrix(g: &Multigraph, p: &Partition) -> Result<QuotientMatrix, SpectralError> {
    if p.n() != g.n() {
        return Err(SpectralError::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    let s = p.num_blocks();
    let blocks = p.blocks();
    let mut boundary = vec![vec![0u64; s]; s];
    let mut block_of = vec![0usize; g.n()];
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            block_of[v] = i;
        }
    }
    for (u, v, mult) in g.edges() {
        let (bu, bv) = (block_of[u], block_of[v]);
        boundary[bu][bv] += mult as u64;
        if bu != bv {
            boundary[bv][bu] += mult as u64;
        }
    }
    let rows: Vec<Vec<Rat>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    let count = if i == j {
                        2 * boundary[i][i]
                    } else {
                        boundary[i][j]
                    };
                    BigRational::new((count as i64).into(), (blocks[i].len() as i64).into())
                })
                .collect()
        })
        .collect();
    Ok(QuotientMatrix {
        entries: RatMatrix::from_rows(rows),
        block_sizes: blocks.iter().map(|b| b.len()).collect(),
    })
}
