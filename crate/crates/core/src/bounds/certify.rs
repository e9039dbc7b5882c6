//! The certificate engine: evaluate every rule against a concrete
//! multigraph's spectrum, record fired thresholds and skip reasons, and
//! cross-check each claimed guarantee against exact connectivity.

use super::rules::{evaluate_bound, BoundRule, ConnectivityKind, GraphClass, RuleId, Threshold};
use super::BoundsError;
use crate::connectivity::{edge_connectivity, vertex_connectivity};
use crate::graph::Multigraph;
use crate::spectral;
use serde::Serialize;

/// Everything the engine derives from one graph: exact spectral data,
/// exact connectivity, and the outcome of every rule in a fixed order.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub n: usize,
    pub d: Option<u32>,
    pub lambda2: f64,
    pub mu2: f64,
    pub kappa: u32,
    pub kappa_prime: u64,
    pub rules: Vec<RuleOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RuleOutcome {
    pub rule: String,
    /// The parameter t the reported threshold was evaluated at, for the
    /// parametric rules: the best firing t, or the most permissive one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(flatten)]
    pub status: RuleStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RuleStatus {
    /// The spectral condition is met; `holds` records the soundness
    /// cross-check against the exact value.
    Fired {
        threshold: f64,
        comparison: String,
        kind: String,
        target: u32,
        holds: bool,
    },
    /// Applicable, but the spectral condition is not met.
    NotFired {
        threshold: f64,
        comparison: String,
        kind: String,
        target: u32,
    },
    /// An applicability predicate rejected the graph or its parameters.
    Skipped { reason: String },
}

impl RuleStatus {
    pub fn is_fired(&self) -> bool {
        matches!(self, RuleStatus::Fired { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, RuleStatus::Skipped { .. })
    }
}

impl Certificate {
    /// The outcome for one rule; every rule id has exactly one entry.
    pub fn rule(&self, id: RuleId) -> &RuleOutcome {
        self.rules
            .iter()
            .find(|r| r.rule == id.as_str())
            .expect("certificates carry one entry per rule")
    }

    pub fn fired(&self) -> impl Iterator<Item = &RuleOutcome> {
        self.rules.iter().filter(|r| r.status.is_fired())
    }

    /// Largest vertex-connectivity target among fired rules (0 if none).
    pub fn best_vertex_guarantee(&self) -> u32 {
        self.best_guarantee("kappa")
    }

    /// Largest edge-connectivity target among fired rules (0 if none).
    pub fn best_edge_guarantee(&self) -> u32 {
        self.best_guarantee("kappa_prime")
    }

    fn best_guarantee(&self, want_kind: &str) -> u32 {
        self.fired()
            .filter_map(|r| match &r.status {
                RuleStatus::Fired { kind, target, .. } if kind == want_kind => Some(*target),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }
}

struct Ctx {
    n: usize,
    d: Option<u32>,
    class: GraphClass,
    lambda2: f64,
    mu2: f64,
    kappa: u32,
    kappa_prime: u64,
    connected: bool,
    underlying_complete: bool,
}

/// Evaluate every rule against the graph. Parametric rules sweep their
/// whole t range and report the strongest firing instance unless a
/// specific `t_override` is requested.
///
/// Panics if the graph has fewer than 2 vertices (no second eigenvalue).
pub fn certify(g: &Multigraph, t_override: Option<u32>) -> Certificate {
    let n = g.n();
    assert!(n >= 2, "certification needs at least 2 vertices, got {n}");
    let ctx = Ctx {
        n,
        d: g.regular_degree(),
        class: if g.is_simple() {
            GraphClass::Simple
        } else {
            GraphClass::Multigraph
        },
        lambda2: spectral::lambda2(g).expect("order checked above"),
        mu2: spectral::mu2(g).expect("order checked above"),
        kappa: vertex_connectivity(g).expect("order checked above"),
        kappa_prime: edge_connectivity(g).expect("order checked above"),
        connected: g.is_connected(),
        underlying_complete: (0..n).all(|u| ((u + 1)..n).all(|v| g.mult(u, v) >= 1)),
    };
    let rules = RuleId::ALL
        .into_iter()
        .map(|id| ctx.outcome(id, t_override))
        .collect();
    Certificate {
        n,
        d: ctx.d,
        lambda2: ctx.lambda2,
        mu2: ctx.mu2,
        kappa: ctx.kappa,
        kappa_prime: ctx.kappa_prime,
        rules,
    }
}

fn skipped(id: RuleId, reason: impl Into<String>) -> RuleOutcome {
    RuleOutcome {
        rule: id.as_str().to_string(),
        t: None,
        status: RuleStatus::Skipped {
            reason: reason.into(),
        },
        note: None,
    }
}

fn error_reason(e: &BoundsError) -> String {
    match e {
        BoundsError::Inapplicable { reason, .. } => reason.clone(),
        BoundsError::InvalidParameters { reason, .. } => reason.clone(),
        other => other.to_string(),
    }
}

impl Ctx {
    /// t candidates for a rule, strongest (largest) first.
    fn candidates(&self, id: RuleId, t_override: Option<u32>) -> Vec<Option<u32>> {
        if !id.is_parametric() {
            return vec![None];
        }
        if let Some(t) = t_override {
            return vec![Some(t)];
        }
        let d = self.d.unwrap_or(0);
        let (lo, hi) = match id {
            RuleId::Fiedler => (1, self.n.saturating_sub(2).max(1) as u32),
            RuleId::OMultT => (2, d.saturating_sub(1)),
            _ => (1, d.saturating_sub(1)),
        };
        if hi < lo {
            // Empty sweep: evaluate the most permissive t anyway so the
            // outcome carries the violated predicate as its reason.
            vec![Some(lo)]
        } else {
            (lo..=hi).rev().map(Some).collect()
        }
    }

    /// Is the graph excluded from the partition bounds at this t: a
    /// multigraph obtained by duplicating edges in a complete graph on
    /// at most t + 1 vertices?
    fn excluded_at(&self, id: RuleId, t: Option<u32>) -> bool {
        matches!(id, RuleId::Thm31 | RuleId::Thm41)
            && self.underlying_complete
            && t.is_some_and(|t| self.n <= t as usize + 1)
    }

    fn exact_meets(&self, th: &Threshold) -> bool {
        match th.kind {
            ConnectivityKind::Vertex => th.target <= self.kappa,
            ConnectivityKind::Edge => u64::from(th.target) <= self.kappa_prime,
        }
    }

    fn outcome(&self, id: RuleId, t_override: Option<u32>) -> RuleOutcome {
        if id == RuleId::Fiedler {
            if self.class != GraphClass::Simple {
                return skipped(id, "graph must be simple");
            }
            if self.underlying_complete {
                return skipped(id, "complete graphs are excluded");
            }
        } else if self.d.is_none() {
            return skipped(id, "graph is not regular");
        }
        if matches!(id, RuleId::OMult1 | RuleId::OMultT) && !self.connected {
            return skipped(id, "graph is disconnected");
        }

        let d = self.d.unwrap_or(0);
        let mut excluded: Vec<u32> = Vec::new();
        let mut evaluated: Vec<(Option<u32>, Threshold)> = Vec::new();
        let mut first_error: Option<BoundsError> = None;
        for t in self.candidates(id, t_override) {
            if self.excluded_at(id, t) {
                excluded.push(t.expect("exclusion is t-specific"));
                continue;
            }
            let rule = BoundRule {
                id,
                d,
                n: self.n,
                t,
                graph_class: self.class,
            };
            match evaluate_bound(rule) {
                Ok(th) => evaluated.push((t, th)),
                Err(e) => {
                    if first_error.is_none() {
                        first_error = Some(e);
                    }
                }
            }
        }

        let note = excluded
            .last()
            .map(|lo| format!("duplicated complete graph: t >= {lo} excluded"));

        // Candidates are ordered strongest first, so the first firing
        // threshold carries the best guarantee this rule can give.
        if let Some((t, th)) = evaluated
            .iter()
            .find(|(_, th)| th.fires(self.lambda2, self.mu2))
        {
            let holds = self.exact_meets(th);
            debug_assert!(
                holds,
                "rule {id} fired (target {} on {}) but kappa={} kappa_prime={}",
                th.target,
                th.kind.as_str(),
                self.kappa,
                self.kappa_prime,
            );
            return RuleOutcome {
                rule: id.as_str().to_string(),
                t: *t,
                status: RuleStatus::Fired {
                    threshold: th.value,
                    comparison: th.comparison.as_str().to_string(),
                    kind: th.kind.as_str().to_string(),
                    target: th.target,
                    holds,
                },
                note,
            };
        }
        if let Some((t, th)) = evaluated.last() {
            return RuleOutcome {
                rule: id.as_str().to_string(),
                t: *t,
                status: RuleStatus::NotFired {
                    threshold: th.value,
                    comparison: th.comparison.as_str().to_string(),
                    kind: th.kind.as_str().to_string(),
                    target: th.target,
                },
                note,
            };
        }
        let reason = match (&first_error, excluded.is_empty()) {
            (Some(e), _) => error_reason(e),
            (None, false) => "duplicated complete graph on at most t+1 vertices".to_string(),
            (None, true) => "no applicable parameters".to_string(),
        };
        RuleOutcome {
            rule: id.as_str().to_string(),
            t: None,
            status: RuleStatus::Skipped { reason },
            note,
        }
    }
}
