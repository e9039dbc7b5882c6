//! Multigraph representation and I/O.
//!
//! A [`Multigraph`] is an undirected loopless graph with integer edge
//! multiplicities, stored as a dense symmetric `n x n` matrix. Everything
//! in this crate stays below a few dozen vertices, where the dense form
//! is both the fastest and the simplest representation: quotient sums,
//! spectra and cut scans all become row operations.

mod canon;
mod families;
mod random;

pub(crate) use canon::canonical_form_colored;
pub use canon::{canonical_form, canonical_key, CanonicalForm, CanonicalKey};
pub use families::{
    complete, complete_bipartite, cycle, doubled_complete, extremal_5vertex, extremal_6vertex,
    path, petersen,
};
pub use random::random_regular_multigraph;

use thiserror::Error;

/// Errors from multigraph construction, parsing and sampling.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed header: expected `mg <n>` with n >= 1, got {0:?}")]
    MalformedHeader(String),
    #[error("expected {expected} matrix rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("row {row}: expected {expected} entries, found {found}")]
    WrongRowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry ({row},{col}): {token:?} is not a multiplicity")]
    MalformedEntry {
        row: usize,
        col: usize,
        token: String,
    },
    #[error("entry ({row},{col}) is negative")]
    NegativeEntry { row: usize, col: usize },
    #[error("matrix not symmetric at ({u},{v}): {a} vs {b}")]
    NotSymmetric { u: usize, v: usize, a: u32, b: u32 },
    #[error("nonzero diagonal at vertex {v}: {mult}")]
    NonzeroDiagonal { v: usize, mult: u32 },
    #[error("need at least {min} vertices, got {found}")]
    TooFewVertices { min: usize, found: usize },
    #[error("graph is not regular (degrees {min}..{max})")]
    NotRegular { min: u32, max: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no admissible sample found in {attempts} attempts")]
    SamplingBudget { attempts: u32 },
}

/// Undirected multigraph: symmetric multiplicity matrix, zero diagonal.
///
/// Immutable after construction; all mutating helpers are crate-private
/// and re-establish the cached degrees before the value escapes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
    degree: Vec<u32>,
}

impl Multigraph {
    /// Builds a multigraph from explicit matrix rows, validating the
    /// symmetry and zero-diagonal invariants.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 {
            return Err(GraphError::TooFewVertices { min: 1, found: 0 });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::WrongRowLength {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
        }
        let mut g = Multigraph {
            n,
            mult: Vec::with_capacity(n * n),
            degree: vec![0; n],
        };
        for row in rows {
            g.mult.extend_from_slice(row);
        }
        g.check_matrix()?;
        g.recompute_degrees();
        Ok(g)
    }

    /// The empty graph on `n` vertices. Crate-internal starting point for
    /// the family constructors and the enumerator.
    pub(crate) fn empty(n: usize) -> Self {
        Multigraph {
            n,
            mult: vec![0; n * n],
            degree: vec![0; n],
        }
    }

    /// Sets the multiplicity of `{u, v}`, keeping the degree cache in sync.
    pub(crate) fn set_mult(&mut self, u: usize, v: usize, m: u32) {
        assert!(u != v, "loops are not allowed");
        let old = self.mult[u * self.n + v];
        self.mult[u * self.n + v] = m;
        self.mult[v * self.n + u] = m;
        self.degree[u] = self.degree[u] - old + m;
        self.degree[v] = self.degree[v] - old + m;
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize, m: u32) {
        self.set_mult(u, v, self.mult(u, v) + m);
    }

    fn check_matrix(&self) -> Result<(), GraphError> {
        for u in 0..self.n {
            if self.mult[u * self.n + u] != 0 {
                return Err(GraphError::NonzeroDiagonal {
                    v: u,
                    mult: self.mult[u * self.n + u],
                });
            }
            for v in (u + 1)..self.n {
                let a = self.mult[u * self.n + v];
                let b = self.mult[v * self.n + u];
                if a != b {
                    return Err(GraphError::NotSymmetric { u, v, a, b });
                }
            }
        }
        Ok(())
    }

    fn recompute_degrees(&mut self) {
        for v in 0..self.n {
            self.degree[v] = self.mult[v * self.n..(v + 1) * self.n].iter().sum();
        }
    }

    /// Re-checks every structural invariant, including the degree cache.
    pub fn validate(&self) -> Result<(), GraphError> {
        self.check_matrix()?;
        for v in 0..self.n {
            let sum: u32 = self.mult[v * self.n..(v + 1) * self.n].iter().sum();
            assert_eq!(sum, self.degree[v], "degree cache out of sync at {v}");
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of edges counting multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.degree.iter().map(|&d| u64::from(d)).sum::<u64>() / 2
    }

    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degree
    }

    /// Degree sequence, descending.
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut seq = self.degree.clone();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<u32> {
        let d = self.degree[0];
        self.degree.iter().all(|&x| x == d).then_some(d)
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    /// Vertices adjacent to `v` (ignoring multiplicity).
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.mult[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter(|&(_, &m)| m > 0)
            .map(|(u, _)| u)
    }

    /// Edges as `(u, v, multiplicity)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n).filter_map(move |v| {
                let m = self.mult(u, v);
                (m > 0).then_some((u, v, m))
            })
        })
    }

    /// Every positive multiplicity collapsed to a single edge.
    pub fn underlying_simple_graph(&self) -> Multigraph {
        let mut g = self.clone();
        for m in &mut g.mult {
            *m = (*m).min(1);
        }
        g.recompute_degrees();
        g
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `start`, in discovery order.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        let mut out = Vec::new();
        seen[start] = true;
        while let Some(u) = stack.pop() {
            out.push(u);
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if !seen[s] {
                let mut comp = self.component_of(s);
                for &v in &comp {
                    seen[v] = true;
                }
                comp.sort_unstable();
                out.push(comp);
            }
        }
        out
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        let mut g = Multigraph::empty(self.n);
        for (u, v, m) in self.edges() {
            g.set_mult(perm[u], perm[v], m);
        }
        g
    }

    /// Adjacency matrix as floats, for the eigensolver boundary.
    pub fn adjacency_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| f64::from(self.mult(u, v))).collect())
            .collect()
    }

    /// Laplacian matrix `D - A` as floats.
    pub fn laplacian_f64(&self) -> Vec<Vec<f64>> {
        let mut m = self.adjacency_f64();
        for (v, row) in m.iter_mut().enumerate() {
            for x in row.iter_mut() {
                *x = -*x;
            }
            row[v] = f64::from(self.degree[v]);
        }
        m
    }

    /// Parses the `.mg` format. Whitespace-tolerant; see [`Multigraph::to_mg`]
    /// for the canonical serialization.
    pub fn parse_mg(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().unwrap_or("");
        let mut tokens = header.split_whitespace();
        let n = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some("mg"), Some(num), None) => num
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| GraphError::MalformedHeader(header.to_string()))?,
            _ => return Err(GraphError::MalformedHeader(header.to_string())),
        };
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            if i >= n {
                return Err(GraphError::WrongRowCount {
                    expected: n,
                    found: i + 1,
                });
            }
            let mut row = Vec::with_capacity(n);
            for (j, tok) in line.split_whitespace().enumerate() {
                let value = tok.parse::<i64>().map_err(|_| GraphError::MalformedEntry {
                    row: i,
                    col: j,
                    token: tok.to_string(),
                })?;
                if value < 0 {
                    return Err(GraphError::NegativeEntry { row: i, col: j });
                }
                let value = u32::try_from(value).map_err(|_| GraphError::MalformedEntry {
                    row: i,
                    col: j,
                    token: tok.to_string(),
                })?;
                row.push(value);
            }
            if row.len() != n {
                return Err(GraphError::WrongRowLength {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(GraphError::WrongRowCount {
                expected: n,
                found: rows.len(),
            });
        }
        Multigraph::from_rows(&rows)
    }

    /// Canonical `.mg` serialization: `mg <n>` header, one row per line,
    /// single spaces, LF endings, no trailing whitespace.
    pub fn to_mg(&self) -> String {
        let mut out = format!("mg {}\n", self.n);
        for u in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|v| self.mult(u, v).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multigraph(n={})\n{}", self.n, self.to_mg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Multigraph {
        Multigraph::parse_mg("mg 3\n0 1 1\n1 0 1\n1 1 0").unwrap()
    }

    #[test]
    fn parse_smallest_multigraph() {
        let g = Multigraph::parse_mg("mg 2\n0 2\n2 0").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.mult(0, 1), 2);
        assert_eq!(g.degree_sequence(), vec![2, 2]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_triangle() {
        let g = k3();
        assert_eq!(g.degree_sequence(), vec![2, 2, 2]);
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.is_simple());
    }

    #[test]
    fn parse_rejects_asymmetric() {
        let err = Multigraph::parse_mg("mg 2\n0 1\n2 0").unwrap_err();
        assert_eq!(
            err,
            GraphError::NotSymmetric {
                u: 0,
                v: 1,
                a: 1,
                b: 2
            }
        );
    }

    #[test]
    fn parse_rejects_nonzero_diagonal() {
        let err = Multigraph::parse_mg("mg 2\n1 0\n0 0").unwrap_err();
        assert_eq!(err, GraphError::NonzeroDiagonal { v: 0, mult: 1 });
    }

    #[test]
    fn parse_rejects_negative_entry() {
        let err = Multigraph::parse_mg("mg 2\n0 -1\n-1 0").unwrap_err();
        assert_eq!(err, GraphError::NegativeEntry { row: 0, col: 1 });
    }

    #[test]
    fn parse_rejects_bad_header() {
        assert!(matches!(
            Multigraph::parse_mg("graph 2\n0 1\n1 0").unwrap_err(),
            GraphError::MalformedHeader(_)
        ));
        assert!(matches!(
            Multigraph::parse_mg("mg 0\n"),
            Err(GraphError::MalformedHeader(_))
        ));
        assert!(matches!(
            Multigraph::parse_mg("mg two\n"),
            Err(GraphError::MalformedHeader(_))
        ));
    }

    #[test]
    fn parse_rejects_bad_shape() {
        assert!(matches!(
            Multigraph::parse_mg("mg 2\n0 1\n"),
            Err(GraphError::WrongRowCount { .. })
        ));
        assert!(matches!(
            Multigraph::parse_mg("mg 2\n0 1 0\n1 0 0"),
            Err(GraphError::WrongRowLength { .. })
        ));
        assert!(matches!(
            Multigraph::parse_mg("mg 2\n0 x\n1 0"),
            Err(GraphError::MalformedEntry { .. })
        ));
    }

    #[test]
    fn serialize_round_trip_is_byte_identical() {
        let text = "mg 3\n0 2 1\n2 0 0\n1 0 0\n";
        let g = Multigraph::parse_mg(text).unwrap();
        assert_eq!(g.to_mg(), text);
        let messy = "mg 3\n 0  2 1\n2 0 0\n\n1 0 0\n";
        assert_eq!(Multigraph::parse_mg(messy).unwrap().to_mg(), text);
    }

    #[test]
    fn underlying_simple_collapses_multiplicities() {
        let g = Multigraph::parse_mg("mg 2\n0 2\n2 0").unwrap();
        let s = g.underlying_simple_graph();
        assert_eq!(s.mult(0, 1), 1);
        assert_eq!(s.degree(0), 1);
        let t = k3();
        assert_eq!(t.underlying_simple_graph(), t);
    }

    #[test]
    fn connectivity_and_components() {
        let g = Multigraph::parse_mg("mg 4\n0 1 0 0\n1 0 0 0\n0 0 0 3\n0 0 3 0").unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(k3().is_connected());
    }

    #[test]
    fn permute_preserves_structure() {
        let g = Multigraph::parse_mg("mg 3\n0 2 0\n2 0 1\n0 1 0").unwrap();
        let h = g.permute(&[2, 0, 1]);
        assert_eq!(h.mult(2, 0), 2);
        assert_eq!(h.mult(0, 1), 1);
        assert_eq!(g.degree_sequence(), h.degree_sequence());
    }

    #[test]
    fn degree_cache_stays_consistent() {
        let mut g = Multigraph::empty(4);
        g.add_edge(0, 1, 2);
        g.add_edge(1, 2, 1);
        g.set_mult(0, 1, 1);
        g.validate().unwrap();
        assert_eq!(g.degrees(), &[1, 2, 1, 0]);
    }
}
