//! Executable checks of the structural statements about critical graphs:
//! the configuration bound around a vertex set A with divalent
//! neighbours, the 3-edge-cut colour-type argument, and the audit of the
//! even-factor theorem through component weights.

mod audit;
mod cut;
mod lemma1;

pub use audit::{theorem1_audit, theorem1_audit_with_report, AuditBudgets, AuditVerdict};
pub use cut::{
    combine_cut_colorings, cut_sides, cut_type, lemma2_check, minimal_three_cuts, CutColoringType,
    CutSides, Lemma2Report, Lemma2Violation,
};
pub use lemma1::{
    find_lemma1_configs, lemma1_bound, lemma1_bound_check, lemma1_trace, validate_config,
    ClaimResults, Lemma1Config, Lemma1Options, Lemma1Search, Lemma1Trace, Triple,
};

use crate::error::{usage, Result};
use crate::graph::{Graph, VertexSet};
use crate::scalar::Scalar;

/// g(D) = Σ_{v ∈ N(D)} (d(v) − 2)/d(v) for a component D of G − X.
pub fn component_weight<T: Scalar>(g: &Graph, x: &VertexSet, d: &VertexSet) -> Result<T> {
    if !g.components(x).contains(d) {
        return usage("D is not a component of G − X");
    }
    Ok(g.neighborhood(d)
        .iter()
        .map(|&v| {
            let dv = g.degree(v) as i64;
            T::ratio(dv - 2, dv)
        })
        .fold(T::zero(), |acc, w| acc + w))
}
