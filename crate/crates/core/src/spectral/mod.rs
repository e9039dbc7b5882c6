//! Eigenvalues of multigraphs: floating-point spectra, quotient
//! matrices, interlacing checks, and exact rational sign computations.
//!
//! The two quantities everything else consumes are λ2 (second-largest
//! adjacency eigenvalue) and μ2 (second-smallest Laplacian eigenvalue,
//! the algebraic connectivity). For d-regular graphs L = dI − A, so
//! λ_i = d − μ_{n+1−i}; both are exposed because abs irregular inputs
//! still admit the Laplacian-side bound.

mod jacobi;
pub mod quotient;
pub mod rational;

pub use quotient::{quotient_matrix, Partition, QuotientMatrix};
pub use rational::{charpoly_sign, rat, Poly, Rat, RatMatrix};

use crate::graph::Multigraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("matrix is not symmetric: entry ({i},{j}) = {a} differs from ({j},{i}) = {b}")]
    NotSymmetric { i: usize, j: usize, a: f64, b: f64 },
    #[error("graph on {n} vertices has no second eigenvalue")]
    TooFewVertices { n: usize },
    #[error(
        "interlacing requires strictly fewer inner eigenvalues: got {inner} inner, {outer} outer"
    )]
    InterlacingSizes { inner: usize, outer: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

/// Which matrix a spectrum came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
    General,
}

/// Real eigenvalues sorted descending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub kind: SpectrumKind,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// i-th largest eigenvalue, 1-indexed like λ_i.
    pub fn nth_largest(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// i-th smallest eigenvalue, 1-indexed like μ_i.
    pub fn nth_smallest(&self, i: usize) -> f64 {
        self.values[self.values.len() - i]
    }
}

/// All eigenvalues of a symmetric matrix, descending, with eigenvectors.
pub fn eigen_decomposition(m: &[Vec<f64>]) -> Result<(Vec<f64>, Vec<Vec<f64>>), SpectralError> {
    let n = m.len();
    for (row, r) in m.iter().enumerate() {
        if r.len() != n {
            return Err(SpectralError::NotSquare {
                row,
                len: r.len(),
                n,
            });
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (m[i][j] - m[j][i]).abs() > 1e-12 {
                return Err(SpectralError::NotSymmetric {
                    i,
                    j,
                    a: m[i][j],
                    b: m[j][i],
                });
            }
        }
    }
    let (values, vectors) = jacobi::jacobi_eigen(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    Ok((
        order.iter().map(|&k| values[k]).collect(),
        order.iter().map(|&k| vectors[k].clone()).collect(),
    ))
}

/// Eigenvalues of a symmetric matrix, descending.
pub fn eigenvalues_symmetric(m: &[Vec<f64>]) -> Result<Spectrum, SpectralError> {
    let (values, _) = eigen_decomposition(m)?;
    Ok(Spectrum {
        values,
        kind: SpectrumKind::General,
    })
}

/// Adjacency spectrum λ1 ≥ ⋯ ≥ λn.
pub fn adjacency_spectrum(g: &Multigraph) -> Spectrum {
    let (values, _) = jacobi::jacobi_eigen(&g.adjacency_f64());
    let mut values = values;
    values.sort_by(|a, b| b.total_cmp(a));
    Spectrum {
        values,
        kind: SpectrumKind::Adjacency,
    }
}

/// Laplacian spectrum, descending; the smallest entry is 0.
pub fn laplacian_spectrum(g: &Multigraph) -> Spectrum {
    let (values, _) = jacobi::jacobi_eigen(&g.laplacian_f64());
    let mut values = values;
    values.sort_by(|a, b| b.total_cmp(a));
    Spectrum {
        values,
        kind: SpectrumKind::Laplacian,
    }
}

/// Second-largest adjacency eigenvalue λ2, multiplicities included: for a
/// disconnected d-regular multigraph this equals d.
pub fn lambda2(g: &Multigraph) -> Result<f64, SpectralError> {
    if g.n() < 2 {
        return Err(SpectralError::TooFewVertices { n: g.n() });
    }
    Ok(adjacency_spectrum(g).nth_largest(2))
}

/// Second-smallest Laplacian eigenvalue μ2, the algebraic connectivity.
pub fn mu2(g: &Multigraph) -> Result<f64, SpectralError> {
    if g.n() < 2 {
        return Err(SpectralError::TooFewVertices { n: g.n() });
    }
    Ok(laplacian_spectrum(g).nth_smallest(2))
}

const INTERLACE_TOL: f64 = 1e-8;

/// Cauchy interlacing test: with inner values b_1 ≥ ⋯ ≥ b_m and outer
/// values a_1 ≥ ⋯ ≥ a_n, checks a_i ≥ b_i ≥ a_{n−m+i} for every i,
/// with 1e-8 slack on each comparison.
pub fn interlaces(inner: &Spectrum, outer: &Spectrum) -> Result<bool, SpectralError> {
    let (m, n) = (inner.len(), outer.len());
    if m >= n {
        return Err(SpectralError::InterlacingSizes { inner: m, outer: n });
    }
    for i in 0..m {
        let b = inner.values[i];
        if outer.values[i] + INTERLACE_TOL < b || b + INTERLACE_TOL < outer.values[n - m + i] {
            return Ok(false);
        }
    }
    Ok(true)
}
