//! The bound rules: for each, an applicability predicate over
//! (d, n, t, graph class) and a spectral threshold whose satisfaction
//! guarantees a vertex- or edge-connectivity target.

use super::{rho, BoundsError};
use std::fmt;

/// Stable rule identifiers; the string forms appear verbatim in CLI
/// arguments and JSON output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    Fiedler,
    Chandran,
    KrivelevichSudakov,
    CioabaT,
    CioabaPi,
    CioabaT2,
    OMult1,
    OMultT,
    OVertex,
    Thm31,
    Thm32,
    Thm41,
    Thm42Rho,
}

impl RuleId {
    pub const ALL: [RuleId; 13] = [
        RuleId::Fiedler,
        RuleId::Chandran,
        RuleId::KrivelevichSudakov,
        RuleId::CioabaT,
        RuleId::CioabaPi,
        RuleId::CioabaT2,
        RuleId::OMult1,
        RuleId::OMultT,
        RuleId::OVertex,
        RuleId::Thm31,
        RuleId::Thm32,
        RuleId::Thm41,
        RuleId::Thm42Rho,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Fiedler => "fiedler",
            RuleId::Chandran => "chandran",
            RuleId::KrivelevichSudakov => "krivelevich_sudakov",
            RuleId::CioabaT => "cioaba_t",
            RuleId::CioabaPi => "cioaba_pi",
            RuleId::CioabaT2 => "cioaba_t2",
            RuleId::OMult1 => "o_mult_1",
            RuleId::OMultT => "o_mult_t",
            RuleId::OVertex => "o_vertex",
            RuleId::Thm31 => "thm31",
            RuleId::Thm32 => "thm32",
            RuleId::Thm41 => "thm41",
            RuleId::Thm42Rho => "thm42_rho",
        }
    }

    /// Whether the rule takes the target parameter t.
    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            RuleId::Fiedler | RuleId::CioabaT | RuleId::OMultT | RuleId::Thm31 | RuleId::Thm41
        )
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for RuleId {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<RuleId, BoundsError> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| BoundsError::UnknownRule(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    Simple,
    Multigraph,
}

/// How the spectral quantity is compared against the threshold value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// Fires when λ2 < value.
    Lambda2Below,
    /// Fires when λ2 ≤ value.
    Lambda2AtMost,
    /// Fires when μ2 > value.
    Mu2Above,
}

impl Comparison {
    pub fn as_str(self) -> &'static str {
        match self {
            Comparison::Lambda2Below => "lambda2 <",
            Comparison::Lambda2AtMost => "lambda2 <=",
            Comparison::Mu2Above => "mu2 >",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectivityKind {
    Vertex,
    Edge,
}

impl ConnectivityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ConnectivityKind::Vertex => "kappa",
            ConnectivityKind::Edge => "kappa_prime",
        }
    }
}

/// A rule instantiated with concrete parameters.
#[derive(Clone, Copy, Debug)]
pub struct BoundRule {
    pub id: RuleId,
    pub d: u32,
    pub n: usize,
    pub t: Option<u32>,
    pub graph_class: GraphClass,
}

/// The evaluated threshold: satisfy `comparison` against `value` and the
/// rule guarantees connectivity (of `kind`) at least `target`.
#[derive(Clone, Copy, Debug)]
pub struct Threshold {
    pub value: f64,
    pub comparison: Comparison,
    pub target: u32,
    pub kind: ConnectivityKind,
}

/// Comparison slack: strict rules must not fire at their own boundary
/// (the tight families sit exactly there), the one non-strict rule must.
pub const FIRING_TOL: f64 = 1e-9;

impl Threshold {
    /// Does the rule fire for the given spectral data?
    pub fn fires(&self, lambda2: f64, mu2: f64) -> bool {
        match self.comparison {
            Comparison::Lambda2Below => lambda2 < self.value - FIRING_TOL,
            Comparison::Lambda2AtMost => lambda2 <= self.value + FIRING_TOL,
            Comparison::Mu2Above => mu2 > self.value + FIRING_TOL,
        }
    }
}

fn inapplicable(rule: RuleId, reason: impl Into<String>) -> BoundsError {
    BoundsError::Inapplicable {
        rule,
        reason: reason.into(),
    }
}

fn require(cond: bool, rule: RuleId, predicate: &str) -> Result<(), BoundsError> {
    if cond {
        Ok(())
    } else {
        Err(inapplicable(rule, predicate))
    }
}

fn require_simple(rule: BoundRule) -> Result<(), BoundsError> {
    require(
        rule.graph_class == GraphClass::Simple,
        rule.id,
        "graph must be simple",
    )
}

fn take_t(rule: BoundRule) -> Result<u32, BoundsError> {
    rule.t
        .ok_or_else(|| inapplicable(rule.id, "rule requires the parameter t"))
}

/// Threshold of a rule for concrete parameters, or the violated
/// applicability predicate.
pub fn evaluate_bound(rule: BoundRule) -> Result<Threshold, BoundsError> {
    let id = rule.id;
    let d = rule.d as f64;
    let n = rule.n as f64;
    match id {
        RuleId::Fiedler => {
            // κ ≥ μ2 for simple non-complete graphs; with integer t the
            // usable form is: μ2 > t implies κ ≥ t + 1. Completeness is a
            // property of the concrete graph, checked by the caller.
            require_simple(rule)?;
            let t = take_t(rule)?;
            require(t >= 1, id, "t must be at least 1")?;
            require((t as usize) < rule.n, id, "t must be below the order")?;
            Ok(Threshold {
                value: t as f64,
                comparison: Comparison::Mu2Above,
                target: t + 1,
                kind: ConnectivityKind::Vertex,
            })
        }
        RuleId::Chandran => {
            require_simple(rule)?;
            require(rule.n > rule.d as usize, id, "order must exceed the degree")?;
            Ok(Threshold {
                value: d - 1.0 - d / (n - d),
                comparison: Comparison::Lambda2Below,
                target: rule.d,
                kind: ConnectivityKind::Edge,
            })
        }
        RuleId::KrivelevichSudakov => {
            require_simple(rule)?;
            Ok(Threshold {
                value: d - 2.0,
                comparison: Comparison::Lambda2AtMost,
                target: rule.d,
                kind: ConnectivityKind::Edge,
            })
        }
        RuleId::CioabaT => {
            require_simple(rule)?;
            let t = take_t(rule)?;
            require(t < rule.d, id, "t must satisfy 0 <= t <= d-1")?;
            Ok(Threshold {
                value: d - 2.0 * t as f64 / (d + 1.0),
                comparison: Comparison::Lambda2Below,
                target: t + 1,
                kind: ConnectivityKind::Edge,
            })
        }
        RuleId::CioabaPi => {
            require_simple(rule)?;
            require(
                rule.d >= 3 && rule.d % 2 == 1,
                id,
                "d must be odd and at least 3",
            )?;
            Ok(Threshold {
                value: pi(rule.d),
                comparison: Comparison::Lambda2Below,
                target: 2,
                kind: ConnectivityKind::Edge,
            })
        }
        RuleId::CioabaT2 => {
            require_simple(rule)?;
            require(rule.d >= 3, id, "d must be at least 3")?;
            Ok(Threshold {
                value: (d - 3.0 + ((d + 3.0) * (d + 3.0) - 16.0).sqrt()) / 2.0,
                comparison: Comparison::Lambda2Below,
                target: 3,
                kind: ConnectivityKind::Edge,
            })
        }
        RuleId::OMult1 => {
            // Stated for connected d-regular multigraphs; connectivity is
            // a property of the concrete graph, checked by the caller.
            // d = 1 is excluded: the threshold would be 1 while the only
            // connected 1-regular multigraph has λ2 = −1 and κ′ = 1.
            require(rule.d >= 2, id, "d must be at least 2")?;
            Ok(Threshold {
                value: (d - 1.0 + (9.0 * d * d - 10.0 * d + 17.0).sqrt()) / 4.0,
                comparison: Comparison::Lambda2Below,
                target: 2,
                kind: ConnectivityKind::Edge,
            })
        }
        RuleId::OMultT => {
            let t = take_t(rule)?;
            require(t >= 2, id, "t must be at least 2")?;
            require(t < rule.d, id, "t must satisfy t <= d-1")?;
            // For odd t the weaker hypothesis λ2 < d-t+1 already gives
            // κ' >= t+1, so that is the operative threshold.
            let value = if t % 2 == 1 {
                d - t as f64 + 1.0
            } else {
                d - t as f64
            };
            Ok(Threshold {
                value,
                comparison: Comparison::Lambda2Below,
                target: t + 1,
                kind: ConnectivityKind::Edge,
            })
        }
        RuleId::OVertex => {
            require(
                rule.n != 2,
                id,
                "the 2-vertex d-regular multigraph is excluded",
            )?;
            Ok(Threshold {
                value: 3.0 * d / 4.0,
                comparison: Comparison::Lambda2Below,
                target: 2,
                kind: ConnectivityKind::Vertex,
            })
        }
        RuleId::Thm31 => {
            let t = take_t(rule)?;
            require(t < rule.d, id, "t must satisfy 0 <= t <= d-1")?;
            let phi = match (rule.graph_class, t) {
                (_, 0) => 3, // t = 0 zeroes both correction terms
                (GraphClass::Multigraph, 1) => 3,
                (GraphClass::Multigraph, _) => t + 1,
                (GraphClass::Simple, 1) => rule.d + 2,
                (GraphClass::Simple, _) => rule.d + 1,
            } as f64;
            require(n > phi, id, "order must exceed phi(d,t)")?;
            let td = t as f64 * d;
            Ok(Threshold {
                value: d - td / (2.0 * phi) - td / (2.0 * (n - phi)),
                comparison: Comparison::Lambda2Below,
                target: t + 1,
                kind: ConnectivityKind::Vertex,
            })
        }
        RuleId::Thm32 => {
            require(rule.n >= 5, id, "order must be at least 5")?;
            require(rule.d >= 3, id, "d must be at least 3")?;
            Ok(Threshold {
                value: (8.0 * n - 25.0) / (9.0 * n - 25.0) * d,
                comparison: Comparison::Lambda2Below,
                target: 2,
                kind: ConnectivityKind::Vertex,
            })
        }
        RuleId::Thm41 => {
            let t = take_t(rule)?;
            require(t < rule.d, id, "t must satisfy 0 <= t <= d-1")?;
            let psi = if t <= 1 { 3.0 } else { 2.0 };
            require(n > psi, id, "order must exceed psi(d,t)")?;
            Ok(Threshold {
                value: d - t as f64 / psi - t as f64 / (n - psi),
                comparison: Comparison::Lambda2Below,
                target: t + 1,
                kind: ConnectivityKind::Edge,
            })
        }
        RuleId::Thm42Rho => {
            let value = rho::rho(rule.d, rule.n).map_err(|e| match e {
                BoundsError::InvalidParameters { reason, .. } => inapplicable(id, reason),
                other => other,
            })?;
            Ok(Threshold {
                value,
                comparison: Comparison::Lambda2Below,
                target: 2,
                kind: ConnectivityKind::Edge,
            })
        }
    }
}

/// π(d): the largest root of x³ − (d−3)x² − (3d−2)x − 2, bisected to
/// 1e−10. The root lies in (d−1, d): the polynomial is −d(d−1)−2 < 0 at
/// d−1 and 2d−2 > 0 at d, and no root exceeds d (see the flank test).
pub fn pi(d: u32) -> f64 {
    assert!(d >= 3 && d % 2 == 1, "pi(d) needs odd d >= 3");
    let df = d as f64;
    let p = |x: f64| x * x * x - (df - 3.0) * x * x - (3.0 * df - 2.0) * x - 2.0;
    let (mut lo, mut hi) = (df - 1.0, df);
    debug_assert!(p(lo) < 0.0 && p(hi) > 0.0);
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if p(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
