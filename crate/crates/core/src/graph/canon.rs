//! Canonical forms for multigraphs.
//!
//! Partition refinement with sorted neighborhood signatures, then
//! individualization with backtracking. A leaf of the search tree is a
//! discrete ordered partition, i.e. a candidate labeling; the canonical
//! form is the lexicographically smallest matrix encoding over all leaves.
//! Leaves that tie with the current best yield automorphisms, which in
//! turn prune branches that only revisit images of explored subtrees.
//! The collected automorphisms generate the full automorphism group,
//! which the enumerator relies on for orbit computations.

use super::Multigraph;
use std::collections::BTreeMap;

/// Isomorphism-invariant identifier: two multigraphs have equal keys iff
/// they are isomorphic. Ordered lexicographically on the encoded bytes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Hex rendering of the key bytes.
    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// SHA-256 digest of the key, hex-encoded. Fixed-width stand-in for
    /// the key in file names and manifests, where raw keys of larger
    /// graphs would be unwieldy.
    pub fn digest_hex(&self) -> String {
        use sha2::{Digest, Sha256};
        let hash = Sha256::digest(&self.0);
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalKey({})", self.hex())
    }
}

/// Result of a canonical labeling search.
pub struct CanonicalForm {
    /// Minimal encoding over all labelings.
    pub key: CanonicalKey,
    /// `labeling[i]` is the original vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// Generators of the automorphism group, as vertex maps.
    pub automorphisms: Vec<Vec<usize>>,
}

/// Canonical key of a multigraph (all vertices one color).
pub fn canonical_key(g: &Multigraph) -> CanonicalKey {
    canonical_form(g).key
}

/// Canonical form of a multigraph (all vertices one color).
pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    canonical_form_colored(g, &vec![0; g.n()])
}

/// Canonical form respecting a vertex coloring: only color-preserving
/// permutations are considered, and the colors are part of the encoding.
pub(crate) fn canonical_form_colored(g: &Multigraph, colors: &[u32]) -> CanonicalForm {
    assert_eq!(colors.len(), g.n());
    let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        cells.entry(colors[v]).or_default().push(v);
    }
    let mut searcher = Searcher {
        g,
        n: g.n(),
        colors,
        best: None,
        best_labeling: Vec::new(),
        automorphisms: Vec::new(),
    };
    let root: Vec<Vec<usize>> = cells.into_values().collect();
    searcher.search(root, &mut Vec::new());
    CanonicalForm {
        key: CanonicalKey(searcher.best.expect("search visits at least one leaf")),
        labeling: searcher.best_labeling,
        automorphisms: searcher.automorphisms,
    }
}

struct Searcher<'a> {
    g: &'a Multigraph,
    n: usize,
    colors: &'a [u32],
    best: Option<Vec<u8>>,
    best_labeling: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

impl Searcher<'_> {
    fn search(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let cells = self.refine(cells);
        let target = match cells.iter().position(|c| c.len() > 1) {
            None => {
                let labeling: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                self.record_leaf(labeling);
                return;
            }
            Some(t) => t,
        };

        let mut processed: Vec<usize> = Vec::new();
        for idx in 0..cells[target].len() {
            let v = cells[target][idx];
            if self.in_processed_orbit(prefix, &processed, v) {
                continue;
            }
            processed.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }

    /// True when an automorphism that fixes the current prefix pointwise
    /// maps an already-explored sibling onto `v`; that subtree would only
    /// repeat explored leaves under relabeling.
    fn in_processed_orbit(&self, prefix: &[usize], processed: &[usize], v: usize) -> bool {
        if processed.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for a in &self.automorphisms {
            if prefix.iter().all(|&p| a[p] == p) {
                for u in 0..self.n {
                    uf.union(u, a[u]);
                }
            }
        }
        processed.iter().any(|&u| uf.find(u) == uf.find(v))
    }

    fn record_leaf(&mut self, labeling: Vec<usize>) {
        let enc = self.encode(&labeling);
        match &self.best {
            Some(best) if *best < enc => {}
            Some(best) if *best == enc => {
                let mut aut = vec![0; self.n];
                for i in 0..self.n {
                    aut[self.best_labeling[i]] = labeling[i];
                }
                debug_assert!(is_automorphism(self.g, &aut));
                self.automorphisms.push(aut);
            }
            _ => {
                self.best = Some(enc);
                self.best_labeling = labeling;
            }
        }
    }

    fn encode(&self, labeling: &[usize]) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 + self.n + self.n * self.n / 2);
        out.extend_from_slice(&(self.n as u16).to_be_bytes());
        for &v in labeling {
            push_varint(&mut out, self.colors[v]);
        }
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                push_varint(&mut out, self.g.mult(labeling[i], labeling[j]));
            }
        }
        out
    }

    /// Splits every cell by the multiset of (cell id, multiplicity)
    /// neighbor signatures until stable. Signature order fixes the order
    /// of the sub-cells, which keeps the refinement label-invariant.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let mut cell_of = vec![0usize; self.n];
        loop {
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<(usize, u32)>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let mut sig: Vec<(usize, u32)> = self
                        .g
                        .neighbors(v)
                        .map(|u| (cell_of[u], self.g.mult(v, u)))
                        .collect();
                    sig.sort_unstable();
                    groups.entry(sig).or_default().push(v);
                }
                if groups.len() == 1 {
                    next.push(cell.clone());
                } else {
                    changed = true;
                    next.extend(groups.into_values());
                }
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }
}

fn push_varint(out: &mut Vec<u8>, x: u32) {
    if x < 255 {
        out.push(x as u8);
    } else {
        out.push(255);
        out.extend_from_slice(&x.to_be_bytes());
    }
}

fn is_automorphism(g: &Multigraph, perm: &[usize]) -> bool {
    (0..g.n()).all(|u| (0..g.n()).all(|v| u == v || g.mult(u, v) == g.mult(perm[u], perm[v])))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
