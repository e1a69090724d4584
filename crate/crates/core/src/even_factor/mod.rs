//! Even factors (spanning subgraphs whose vertices all have even, positive
//! degree) and the parity-barrier certificates that rule them out.

mod barrier;
mod search;

pub(crate) use barrier::next_combination;
pub use barrier::{
    check_properties, deficiency, find_barrier, normalize_barrier, property_e_sides, Barrier,
    BarrierSearch, Normalized, Properties, DEFAULT_BARRIER_BUDGET,
};
pub use search::{find_even_factor, FactorSearch, DEFAULT_FACTOR_BUDGET};

use serde::Serialize;

use crate::graph::{Edge, EdgeSet, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenFactor {
    pub edges: EdgeSet,
}

/// True iff every vertex has even degree ≥ 2 in the spanning subgraph
/// formed by `edges`, which must all belong to `g`.
pub fn is_even_factor(g: &Graph, edges: &[Edge]) -> bool {
    let mut deg = vec![0usize; g.n()];
    let set = EdgeSet::new(edges.to_vec());
    if set.len() != edges.len() {
        return false;
    }
    for e in edges {
        if !g.has_edge(e.u, e.v) {
            return false;
        }
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    deg.iter().all(|&d| d >= 2 && d % 2 == 0)
}
