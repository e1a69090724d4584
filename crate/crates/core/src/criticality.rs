//! Critical edges and k-critical graphs.
//!
//! An edge e is critical when Δ(G) = k, χ′(G) = k + 1 and χ′(G − e) = k.
//! Witnesses are the k-colourings of G − e found by the exact search.

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{chromatic_index, color_minus_edge, ChiVerdict, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::search::Verdict;

#[derive(Debug, Clone, Serialize)]
pub struct EdgeCriticality {
    pub edge: Edge,
    /// `None` when the search ran out of budget.
    pub critical: Option<bool>,
    pub witness: Option<EdgeColoring>,
    pub nodes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriticalityReport {
    pub k: usize,
    pub chi: ChiVerdict,
    pub edges: Vec<EdgeCriticality>,
    /// `None` when any verdict is unknown.
    pub is_k_critical: Option<bool>,
    pub nodes: u64,
}

impl CriticalityReport {
    pub fn critical_edges(&self) -> impl Iterator<Item = &EdgeCriticality> {
        self.edges.iter().filter(|e| e.critical == Some(true))
    }

    pub fn edge(&self, e: Edge) -> Option<&EdgeCriticality> {
        self.edges.iter().find(|x| x.edge == e)
    }
}

/// Per-edge test against an already decided χ′.
pub fn critical_edge_given_chi(
    g: &Graph,
    chi: &ChiVerdict,
    e: Edge,
    budget: u64,
) -> Result<EdgeCriticality> {
    g.check_edge(e)?;
    let k = chi.delta;
    match chi.is_class_two() {
        None => Ok(EdgeCriticality {
            edge: e,
            critical: None,
            witness: None,
            nodes: 0,
        }),
        Some(false) => Ok(EdgeCriticality {
            edge: e,
            critical: Some(false),
            witness: None,
            nodes: 0,
        }),
        Some(true) => {
            let s = color_minus_edge(g, e, k, budget)?;
            let (critical, witness) = match s.verdict {
                Verdict::Found(c) => (Some(true), Some(c)),
                Verdict::Refuted => (Some(false), None),
                Verdict::BudgetExceeded => (None, None),
            };
            Ok(EdgeCriticality {
                edge: e,
                critical,
                witness,
                nodes: s.nodes,
            })
        }
    }
}

pub fn is_critical_edge(g: &Graph, e: Edge, budget: u64) -> Result<EdgeCriticality> {
    g.check_edge(e)?;
    let chi = chromatic_index(g, budget);
    critical_edge_given_chi(g, &chi, e, budget)
}

/// Full per-edge report; χ′(G) is decided once and reused.
pub fn is_k_critical(g: &Graph, budget: u64) -> Result<CriticalityReport> {
    if g.m() == 0 || !g.is_connected() {
        return Err(Error::Precondition(
            "criticality needs a connected graph with at least one edge".into(),
        ));
    }
    let chi = chromatic_index(g, budget);
    report_given_chi(g, chi, budget)
}

pub fn report_given_chi(g: &Graph, chi: ChiVerdict, budget: u64) -> Result<CriticalityReport> {
    let edges = g
        .edges()
        .par_iter()
        .map(|&e| critical_edge_given_chi(g, &chi, e, budget))
        .collect::<Result<Vec<_>>>()?;
    let is_k_critical = if chi.chi.is_none() {
        None
    } else if edges.iter().any(|e| e.critical == Some(false)) {
        Some(false)
    } else if edges.iter().any(|e| e.critical.is_none()) {
        None
    } else {
        chi.is_class_two()
    };
    let nodes = chi.nodes + edges.iter().map(|e| e.nodes).sum::<u64>();
    Ok(CriticalityReport {
        k: chi.delta,
        chi,
        edges,
        is_k_critical,
        nodes,
    })
}

/// Deletes non-critical edges (first in canonical order, re-deciding after
/// each deletion) until every edge is critical, then drops isolated
/// vertices. `Ok(None)` when G is class 1; budget exhaustion is an error.
pub fn extract_critical_subgraph(g: &Graph, budget: u64) -> Result<Option<Graph>> {
    let chi = chromatic_index(g, budget);
    match chi.is_class_two() {
        None => {
            return Err(Error::Precondition(
                "chromatic index undecided within budget".into(),
            ))
        }
        Some(false) => return Ok(None),
        Some(true) => {}
    }
    let mut h = g.clone();
    let k = chi.delta;
    'outer: loop {
        for &e in h.edges() {
            let s = color_minus_edge(&h, e, k, budget)?;
            match s.verdict {
                Verdict::Found(_) => {}
                Verdict::Refuted => {
                    h = h.without_edge(e)?;
                    continue 'outer;
                }
                Verdict::BudgetExceeded => {
                    return Err(Error::Precondition(format!(
                        "budget exhausted testing edge {e}"
                    )))
                }
            }
        }
        return Ok(Some(h.without_isolated()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::DEFAULT_COLOR_BUDGET as B;
    use crate::graph::named::*;

    #[test]
    fn edge_examples() {
        let c5 = cycle(5);
        let r = is_critical_edge(&c5, Edge::new(0, 1), B).unwrap();
        assert_eq!(r.critical, Some(true));
        assert!(r.witness.unwrap().is_proper_total());
        let k4 = complete(4);
        assert_eq!(
            is_critical_edge(&k4, Edge::new(0, 1), B).unwrap().critical,
            Some(false)
        );
        // Petersen is class 2 but no edge is critical
        assert_eq!(
            is_critical_edge(&petersen(), Edge::new(0, 1), B)
                .unwrap()
                .critical,
            Some(false)
        );
        assert!(is_critical_edge(&c5, Edge::new(0, 2), B).is_err());
    }

    #[test]
    fn graph_examples() {
        let r = is_k_critical(&cycle(7), B).unwrap();
        assert_eq!((r.k, r.is_k_critical), (2, Some(true)));
        let r = is_k_critical(&subdivided_k4(), B).unwrap();
        assert_eq!(r.chi.chi, Some(4));
        assert_eq!((r.k, r.is_k_critical), (3, Some(true)));
        assert_eq!(
            is_k_critical(&cycle(6), B).unwrap().is_k_critical,
            Some(false)
        );
        assert!(is_k_critical(&Graph::empty(3), B).is_err());
    }

    #[test]
    fn unknown_budget_propagates() {
        let r = is_k_critical(&petersen(), 1).unwrap();
        assert_eq!(r.chi.chi, None);
        assert_eq!(r.is_k_critical, None);
    }

    #[test]
    fn critical_subgraph_of_class_two_graphs() {
        for g in [
            petersen(),
            complete(5),
            complete(7),
            subdivided_k4(),
            cycle(9),
        ] {
            let h = extract_critical_subgraph(&g, B).unwrap().unwrap();
            let r = is_k_critical(&h, B).unwrap();
            assert_eq!(r.is_k_critical, Some(true), "{g:?} -> {h:?}");
            assert_eq!(r.k, g.max_degree());
            assert!(h.min_degree() >= 2 && h.is_bridgeless());
        }
        assert!(extract_critical_subgraph(&cycle(6), B).unwrap().is_none());
    }
}
