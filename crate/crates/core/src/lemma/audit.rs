//! Audit of the even-factor theorem on a k-critical graph: count divalent
//! vertices, search for an even factor, and when none exists, expose the
//! normalized barrier and its component weights.

use serde::{Serialize, Serializer};

use super::component_weight;
use crate::coloring::DEFAULT_COLOR_BUDGET;
use crate::criticality::{is_k_critical, CriticalityReport};
use crate::error::{Error, Result};
use crate::even_factor::{
    find_barrier, find_even_factor, normalize_barrier, EvenFactor, Normalized,
    DEFAULT_BARRIER_BUDGET, DEFAULT_FACTOR_BUDGET,
};
use crate::graph::Graph;
use crate::search::Verdict;
use crate::Rational;

#[derive(Debug, Clone, Copy)]
pub struct AuditBudgets {
    pub color: u64,
    pub factor: u64,
    pub barrier: u64,
}

impl Default for AuditBudgets {
    fn default() -> Self {
        Self {
            color: DEFAULT_COLOR_BUDGET,
            factor: DEFAULT_FACTOR_BUDGET,
            barrier: DEFAULT_BARRIER_BUDGET,
        }
    }
}

fn ratio_str<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ratios_str<S: Serializer>(
    v: &Option<Vec<Rational>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(v) => s.collect_seq(v.iter().map(|r| r.to_string())),
    }
}

fn opt_ratio_str<S: Serializer>(
    v: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(r) => ratio_str(r, s),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditVerdict {
    pub k: usize,
    pub divalent_count: usize,
    /// divalent_count ≤ 2k − 6.
    pub hypothesis_met: bool,
    pub even_factor: Option<EvenFactor>,
    pub barrier: Option<Normalized>,
    /// g(D_i) for each component of G − X of the normalized barrier.
    #[serde(serialize_with = "ratios_str")]
    pub g_values: Option<Vec<Rational>>,
    #[serde(serialize_with = "opt_ratio_str")]
    pub g_sum: Option<Rational>,
    /// Σ g(D_i) < number of components.
    pub pivot_holds: Option<bool>,
    /// False when a search ran out of budget before deciding.
    pub conclusive: bool,
    /// Hypothesis met and no even factor exists.
    pub falsification: bool,
}

/// Audits a graph; criticality is certified first.
pub fn theorem1_audit(g: &Graph, budgets: AuditBudgets) -> Result<AuditVerdict> {
    if g.max_degree() < 3 {
        return Err(Error::Usage(format!(
            "theorem stated for k ≥ 3, got k = {}",
            g.max_degree()
        )));
    }
    let report = is_k_critical(g, budgets.color)?;
    theorem1_audit_with_report(g, &report, budgets)
}

/// Audits against an already computed criticality report.
pub fn theorem1_audit_with_report(
    g: &Graph,
    report: &CriticalityReport,
    budgets: AuditBudgets,
) -> Result<AuditVerdict> {
    let k = g.max_degree();
    if k < 3 {
        return Err(Error::Usage(format!(
            "theorem stated for k ≥ 3, got k = {k}"
        )));
    }
    match report.is_k_critical {
        Some(true) if report.k == k => {}
        Some(_) => return Err(Error::Usage(format!("input is not {k}-critical"))),
        None => {
            return Err(Error::Precondition(
                "criticality undecided within budget".into(),
            ))
        }
    }
    let divalent_count = g.divalent_vertices().len();
    let hypothesis_met = divalent_count as i64 <= 2 * k as i64 - 6;
    let mut v = AuditVerdict {
        k,
        divalent_count,
        hypothesis_met,
        even_factor: None,
        barrier: None,
        g_values: None,
        g_sum: None,
        pivot_holds: None,
        conclusive: true,
        falsification: false,
    };
    match find_even_factor(g, budgets.factor).verdict {
        Verdict::Found(f) => v.even_factor = Some(f),
        Verdict::BudgetExceeded => v.conclusive = false,
        Verdict::Refuted => {
            v.falsification = hypothesis_met;
            match find_barrier(g, budgets.barrier).verdict {
                Verdict::Found(b) => {
                    let norm = normalize_barrier(g, &b.x)?;
                    let x = &norm.barrier.x;
                    let values = norm
                        .barrier
                        .components
                        .iter()
                        .map(|d| component_weight::<Rational>(g, x, d))
                        .collect::<Result<Vec<_>>>()?;
                    let sum = values.iter().fold(Rational::from_integer(0), |a, b| a + b);
                    v.pivot_holds = Some(sum < Rational::from_integer(values.len() as i64));
                    v.g_sum = Some(sum);
                    v.g_values = Some(values);
                    v.barrier = Some(norm);
                }
                // no factor but no barrier: the characterization itself failed
                Verdict::Refuted => v.falsification = true,
                Verdict::BudgetExceeded => v.conclusive = false,
            }
        }
    }
    Ok(v)
}
