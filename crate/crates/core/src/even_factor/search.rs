//! Backtracking search for an even factor with parity propagation.

use serde::Serialize;

use super::{is_even_factor, EvenFactor};
use crate::graph::{EdgeSet, Graph};
use crate::search::Verdict;

pub const DEFAULT_FACTOR_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct FactorSearch {
    pub verdict: Verdict<EvenFactor>,
    pub nodes: u64,
}

const UNDECIDED: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct State<'a> {
    g: &'a Graph,
    status: Vec<u8>,
    deg_in: Vec<usize>,
    open: Vec<usize>,
    trail: Vec<usize>,
    nodes: u64,
    budget: u64,
}

/// Smallest admissible final degree ≥ `lo`: even and at least 2.
fn least_even(lo: usize) -> usize {
    let t = lo.max(2);
    t + t % 2
}

impl State<'_> {
    fn feasible(&self, v: usize) -> bool {
        least_even(self.deg_in[v]) <= self.deg_in[v] + self.open[v]
    }

    fn decide(&mut self, id: usize, s: u8) {
        debug_assert_eq!(self.status[id], UNDECIDED);
        let e = self.g.edge(id);
        self.status[id] = s;
        self.open[e.u] -= 1;
        self.open[e.v] -= 1;
        if s == IN {
            self.deg_in[e.u] += 1;
            self.deg_in[e.v] += 1;
        }
        self.trail.push(id);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let id = self.trail.pop().unwrap();
            let e = self.g.edge(id);
            if self.status[id] == IN {
                self.deg_in[e.u] -= 1;
                self.deg_in[e.v] -= 1;
            }
            self.open[e.u] += 1;
            self.open[e.v] += 1;
            self.status[id] = UNDECIDED;
        }
    }

    /// Applies forced decisions starting from `queue`. False on conflict.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            if !self.feasible(v) {
                return false;
            }
            if self.open[v] == 0 {
                continue;
            }
            let lo = self.deg_in[v];
            let hi = lo + self.open[v];
            let forced = if least_even(lo) == hi {
                Some(IN)
            } else if self.open[v] == 1 {
                Some(if lo % 2 == 1 { IN } else { OUT })
            } else {
                None
            };
            if let Some(s) = forced {
                let ids: Vec<usize> = self
                    .g
                    .incident(v)
                    .iter()
                    .copied()
                    .filter(|&id| self.status[id] == UNDECIDED)
                    .collect();
                for id in ids {
                    self.decide(id, s);
                    queue.push(self.g.edge(id).other(v));
                }
                queue.push(v);
            }
        }
        true
    }

    /// Vertex with the fewest undecided incident edges (> 0), lowest index.
    fn branch_vertex(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.open[v] > 0)
            .min_by_key(|&v| (self.open[v], v))
    }

    fn dfs(&mut self) -> Option<bool> {
        let Some(v) = self.branch_vertex() else {
            return Some((0..self.g.n()).all(|v| self.feasible(v)));
        };
        let (pos, _) = self
            .g
            .incident(v)
            .iter()
            .enumerate()
            .find(|(_, &id)| self.status[id] == UNDECIDED)
            .expect("open edge");
        let id = self.g.incident(v)[pos];
        let e = self.g.edge(id);
        for s in [IN, OUT] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let mark = self.trail.len();
            self.decide(id, s);
            if self.propagate(vec![e.u, e.v]) {
                match self.dfs() {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.undo_to(mark);
        }
        Some(false)
    }
}

/// Finds an even factor, or proves by exhaustion that none exists.
///
/// Branches on an undecided edge at the vertex with the fewest undecided
/// incident edges; after each decision, vertices whose remaining choices
/// are forced by parity (or by needing degree ≥ 2) are settled at once.
pub fn find_even_factor(g: &Graph, budget: u64) -> FactorSearch {
    let n = g.n();
    let mut st = State {
        g,
        status: vec![UNDECIDED; g.m()],
        deg_in: vec![0; n],
        open: (0..n).map(|v| g.degree(v)).collect(),
        trail: Vec::new(),
        nodes: 0,
        budget,
    };
    let verdict = if !st.propagate((0..n).collect()) {
        Verdict::Refuted
    } else {
        match st.dfs() {
            Some(true) => {
                let edges: EdgeSet = (0..g.m())
                    .filter(|&id| st.status[id] == IN)
                    .map(|id| g.edge(id))
                    .collect();
                debug_assert!(is_even_factor(g, &edges));
                Verdict::Found(EvenFactor { edges })
            }
            Some(false) => Verdict::Refuted,
            None => Verdict::BudgetExceeded,
        }
    };
    FactorSearch {
        verdict,
        nodes: st.nodes,
    }
}
