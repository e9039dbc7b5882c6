//! The bridgeless building blocks, the bridging gadgets, the one-cut
//! families assembled from them, and the eigenvalue verification the
//! pipeline exists for.

use super::classify::{classify_f, degree2_subgraph, lift_to_m, max_matchings_of_f, Verdict};
use super::gen::gen_simple_graphs;
use super::EnumerateError;
use crate::bounds::rho;
use crate::connectivity::{cut_edges, edge_connectivity, min_sc_cut_edge, vertex_connectivity};
use crate::graph::{canonical_key, CanonicalKey, Multigraph};
use crate::spectral::lambda2;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

/// Names for every family the enumerator can build: the bridgeless
/// blocks `B5`–`B11` and the assembled one-cut families `A10`–`A18`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    B5,
    B7,
    B9,
    B11,
    A10,
    A12,
    A14,
    A16,
    A18,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::B5,
        FamilyId::B7,
        FamilyId::B9,
        FamilyId::B11,
        FamilyId::A10,
        FamilyId::A12,
        FamilyId::A14,
        FamilyId::A16,
        FamilyId::A18,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::B5 => "B5",
            FamilyId::B7 => "B7",
            FamilyId::B9 => "B9",
            FamilyId::B11 => "B11",
            FamilyId::A10 => "A10",
            FamilyId::A12 => "A12",
            FamilyId::A14 => "A14",
            FamilyId::A16 => "A16",
            FamilyId::A18 => "A18",
        }
    }

    /// Vertex count of every member.
    pub fn order(self) -> usize {
        match self {
            FamilyId::B5 => 5,
            FamilyId::B7 => 7,
            FamilyId::B9 => 9,
            FamilyId::B11 => 11,
            FamilyId::A10 => 10,
            FamilyId::A12 => 12,
            FamilyId::A14 => 14,
            FamilyId::A16 => 16,
            FamilyId::A18 => 18,
        }
    }

    pub fn build(self) -> Result<Vec<Multigraph>, EnumerateError> {
        match self {
            FamilyId::B5 | FamilyId::B7 | FamilyId::B9 | FamilyId::B11 => build_b(self.order()),
            _ => build_a(self.order()),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = EnumerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| EnumerateError::UnknownFamily(s.to_string()))
    }
}

/// All lifts with exactly `ell` doubled edges on `j` vertices:
/// connected bridgeless multigraphs with degree sequence {3^(j-1), 2}
/// and `ell` parallel classes, sorted by canonical key.
pub fn build_m(ell: usize, j: usize) -> Result<Vec<Multigraph>, EnumerateError> {
    assert!(j % 2 == 1 && j >= 5, "blocks need odd order >= 5");
    assert!(2 * ell + 1 <= j, "at most (j-1)/2 doubled edges fit");
    let mut degrees = vec![3u32; j - 2 * ell - 1];
    degrees.extend(std::iter::repeat(2u32).take(2 * ell + 1));
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out: Vec<(CanonicalKey, Multigraph)> = Vec::new();
    for base in gen_simple_graphs(&degrees)? {
        // Vertex cuts ignore multiplicities, and in a max-degree-3 graph
        // a bridge forces a cut vertex, so the lifts of a base are
        // connected and bridgeless exactly when the base is
        // 2-vertex-connected.
        if vertex_connectivity(&base).expect("order >= 5") < 2 {
            continue;
        }
        if classify_f(&base).1 != Verdict::Keep {
            continue;
        }
        let (f, map) = degree2_subgraph(&base);
        let matchings: Vec<Vec<(usize, usize)>> = max_matchings_of_f(&f)
            .into_iter()
            .map(|m| m.into_iter().map(|(a, b)| (map[a], map[b])).collect())
            .collect();
        debug_assert!(matchings.iter().all(|m| m.len() == ell));
        for lifted in lift_to_m(&base, &matchings) {
            let key = canonical_key(&lifted);
            if seen.insert(key.clone()) {
                assert_block_member(&lifted, j);
                out.push((key, lifted));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// The full block family on `j` vertices: all connected bridgeless
/// multigraphs with degree sequence {3^(j-1), 2}, i.e. the union of the
/// lifts over every feasible double count. Sorted by canonical key.
pub fn build_b(j: usize) -> Result<Vec<Multigraph>, EnumerateError> {
    assert!(
        matches!(j, 5 | 7 | 9 | 11),
        "blocks are used at odd orders 5..=11"
    );
    let mut keyed: Vec<(CanonicalKey, Multigraph)> = Vec::new();
    for ell in 0..=(j - 1) / 2 {
        for g in build_m(ell, j)? {
            keyed.push((canonical_key(&g), g));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    // Lifts with different double counts can never coincide.
    debug_assert!(keyed.windows(2).all(|w| w[0].0 != w[1].0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

fn assert_block_member(g: &Multigraph, j: usize) {
    let mut want = vec![3u32; j - 1];
    want.push(2);
    assert_eq!(g.degree_sequence(), want);
    assert!(g.max_multiplicity() <= 2);
    assert!(g.is_connected());
    assert!(cut_edges(g).expect("connected").is_empty());
}

/// Bridging gadgets: small graphs with two designated degree-2 ports
/// that sit between two blocks. Each is symmetric in its ports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bridge {
    /// Two vertices joined by a double edge.
    J2,
    /// Two double-edge pairs linked by a single (cut) edge.
    J4,
    /// The complete graph on four vertices minus one edge.
    J4Prime,
}

impl Bridge {
    pub fn as_str(self) -> &'static str {
        match self {
            Bridge::J2 => "J2",
            Bridge::J4 => "J4",
            Bridge::J4Prime => "J4'",
        }
    }

    /// The gadget graph. Ports are vertices 0 and n-1.
    pub fn graph(self) -> Multigraph {
        match self {
            Bridge::J2 => {
                let mut g = Multigraph::empty(2);
                g.set_mult(0, 1, 2);
                g
            }
            Bridge::J4 => {
                let mut g = Multigraph::empty(4);
                g.set_mult(0, 1, 2);
                g.set_mult(1, 2, 1);
                g.set_mult(2, 3, 2);
                g
            }
            Bridge::J4Prime => {
                let mut g = Multigraph::empty(4);
                for (u, v) in [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)] {
                    g.set_mult(u, v, 1);
                }
                g
            }
        }
    }

    pub fn ports(self) -> (usize, usize) {
        match self {
            Bridge::J2 => (0, 1),
            Bridge::J4 | Bridge::J4Prime => (0, 3),
        }
    }
}

impl fmt::Display for Bridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Disjoint union of two blocks — optionally with a gadget between
/// them — wired through new single edges at the operands' unique
/// degree-2 vertices. Joining blocks yields a 3-regular multigraph
/// whose only cut edges are the new ones (plus the gadget's own).
pub fn join(
    left: &Multigraph,
    right: &Multigraph,
    bridge: Option<Bridge>,
) -> Result<Multigraph, EnumerateError> {
    let lv = unique_degree2(left)?;
    let rv = unique_degree2(right)?;
    Ok(match bridge {
        None => {
            let mut g = disjoint_union(&[left, right]);
            g.set_mult(lv, left.n() + rv, 1);
            g
        }
        Some(b) => {
            let gadget = b.graph();
            let (p, q) = b.ports();
            let mut g = disjoint_union(&[left, &gadget, right]);
            g.set_mult(lv, left.n() + p, 1);
            g.set_mult(left.n() + q, left.n() + gadget.n() + rv, 1);
            g
        }
    })
}

fn unique_degree2(g: &Multigraph) -> Result<usize, EnumerateError> {
    let found: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
    match found.as_slice() {
        [v] => Ok(*v),
        _ => Err(EnumerateError::JoinOperand { found: found.len() }),
    }
}

fn disjoint_union(parts: &[&Multigraph]) -> Multigraph {
    let n = parts.iter().map(|p| p.n()).sum();
    let mut g = Multigraph::empty(n);
    let mut off = 0;
    for p in parts {
        for (u, v, m) in p.edges() {
            g.set_mult(off + u, off + v, m);
        }
        off += p.n();
    }
    g
}

/// The one-cut family on `i` vertices, assembled from block joins:
///
/// - A10 = B5.B5                A14 = B7.B7
/// - A12 = B5.B7 + B5.J2.B5     A16 = B7.B9 + B7.J2.B7
/// - A18 = B7.B11 + B9.B9 + B7.J2.B9 + B7.J4.B7 + B7.J4'.B7
///
/// Same-block joins run over unordered pairs with repetition (the join
/// is orientation-free); the result is isomorph-free and sorted by
/// canonical key. Distinct recipes never collide — deleting all cut
/// edges leaves component orders that identify the recipe — and the
/// count is asserted against the pair-counting formula.
pub fn build_a(i: usize) -> Result<Vec<Multigraph>, EnumerateError> {
    let recipes: &[(usize, usize, Option<Bridge>)] = match i {
        10 => &[(5, 5, None)],
        12 => &[(5, 7, None), (5, 5, Some(Bridge::J2))],
        14 => &[(7, 7, None)],
        16 => &[(7, 9, None), (7, 7, Some(Bridge::J2))],
        18 => &[
            (7, 11, None),
            (9, 9, None),
            (7, 9, Some(Bridge::J2)),
            (7, 7, Some(Bridge::J4)),
            (7, 7, Some(Bridge::J4Prime)),
        ],
        _ => return Err(EnumerateError::UnknownFamily(format!("A{i}"))),
    };
    let mut blocks: BTreeMap<usize, Vec<Multigraph>> = BTreeMap::new();
    for &(l, r, _) in recipes {
        for j in [l, r] {
            if let std::collections::btree_map::Entry::Vacant(e) = blocks.entry(j) {
                e.insert(build_b(j)?);
            }
        }
    }
    let mut expected = 0usize;
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out: Vec<(CanonicalKey, Multigraph)> = Vec::new();
    for &(l, r, bridge) in recipes {
        let left = &blocks[&l];
        let right = &blocks[&r];
        expected += if l == r {
            left.len() * (left.len() + 1) / 2
        } else {
            left.len() * right.len()
        };
        for (a, x) in left.iter().enumerate() {
            let ys = if l == r { &right[a..] } else { &right[..] };
            for y in ys {
                let g = join(x, y, bridge)?;
                let key = canonical_key(&g);
                if seen.insert(key.clone()) {
                    assert_family_member(&g, i);
                    out.push((key, g));
                }
            }
        }
    }
    assert_eq!(out.len(), expected, "block joins must not collide");
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

fn assert_family_member(g: &Multigraph, i: usize) {
    assert_eq!(g.n(), i);
    assert_eq!(g.regular_degree(), Some(3));
    assert!(g.is_connected());
    assert!(g.max_multiplicity() <= 2);
    let cuts = cut_edges(g).expect("connected").len();
    let allowed = match i {
        10 | 14 => 1..=1,
        12 | 16 => 1..=2,
        _ => 1..=3,
    };
    assert!(
        allowed.contains(&cuts),
        "family member with {cuts} cut edges"
    );
    let floor = if i <= 12 { 5 } else { 7 };
    let (_, sc) = min_sc_cut_edge(g)
        .expect("connected")
        .expect("members have a cut edge");
    assert!(sc >= floor, "family member with small side {sc}");
    debug_assert_eq!(edge_connectivity(g).expect("valid order"), 1);
}

/// Eigenvalue verification report for one assembled family.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub family: String,
    /// Family size.
    pub total: usize,
    /// Members actually checked (less than `total` only when sampled).
    pub verified: usize,
    /// The claimed spectral floor rho(3, i).
    pub rho_floor: f64,
    pub min_lambda2: f64,
    /// Digest of the member attaining the minimum.
    pub argmin_key: String,
    /// min_lambda2 - rho_floor; nonnegative up to roundoff.
    pub margin: f64,
}

/// Checks the spectral claim for the order-`i` family: every member's
/// second-largest adjacency eigenvalue stays at or above rho(3, i),
/// within 1e-9. `sample` caps how many members are checked (spread
/// deterministically across the sorted family); `None` checks all.
pub fn verify_family(i: usize, sample: Option<usize>) -> Result<FamilyReport, EnumerateError> {
    let members = build_a(i)?;
    let floor = rho(3, i).expect("family orders are valid rho arguments");
    let total = members.len();
    let picked: Vec<&Multigraph> = match sample {
        Some(k) if k > 0 && k < total => (0..k).map(|t| &members[t * total / k]).collect(),
        _ => members.iter().collect(),
    };
    let verified = picked.len();
    let mut evals: Vec<(f64, String)> = picked
        .par_iter()
        .map(|g| {
            let l2 = lambda2(g).expect("members are connected regular graphs");
            (l2, canonical_key(g).digest_hex())
        })
        .collect();
    evals.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then_with(|| a.1.cmp(&b.1)));
    let (min_lambda2, argmin_key) = evals.first().cloned().expect("families are non-empty");
    if min_lambda2 < floor - 1e-9 {
        return Err(EnumerateError::ClaimViolated {
            family: format!("A{i}"),
            key: argmin_key,
            lambda2: min_lambda2,
            floor,
        });
    }
    Ok(FamilyReport {
        family: format!("A{i}"),
        total,
        verified,
        rho_floor: floor,
        min_lambda2,
        argmin_key,
        margin: min_lambda2 - floor,
    })
}
