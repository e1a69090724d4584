//! Exact k-edge-colourability by backtracking, and the chromatic index
//! decision built on it.

use serde::Serialize;

use super::{vizing_color, Color, EdgeColoring};
use crate::error::Result;
use crate::graph::{Edge, Graph};
use crate::search::Verdict;

pub const DEFAULT_COLOR_BUDGET: u64 = 100_000_000;

/// Largest vertex count for which the odd-set counting bound is checked
/// before searching.
const COUNTING_BOUND_MAX_N: usize = 16;

#[derive(Debug, Clone)]
pub struct ColorSearch {
    pub verdict: Verdict<EdgeColoring>,
    /// Backtrack nodes consumed.
    pub nodes: u64,
}

impl ColorSearch {
    pub fn coloring(&self) -> Option<&EdgeColoring> {
        match &self.verdict {
            Verdict::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.verdict, Verdict::Refuted)
    }
}

/// Some odd vertex set S spans more than k(|S|−1)/2 edges, so no k colour
/// classes (each a matching) can cover E(G).
fn has_overfull_subset(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n > COUNTING_BOUND_MAX_N {
        return 2 * g.m() > k * (n - n % 2) && n % 2 == 1;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    (1u32..(1 << n))
        .filter(|s| s.count_ones() % 2 == 1 && s.count_ones() >= 3)
        .any(|s| {
            let twice: u32 = (0..n)
                .filter(|&v| s & (1 << v) != 0)
                .map(|v| (adj[v] & s).count_ones())
                .sum();
            twice as usize > k * (s.count_ones() as usize - 1)
        })
}

struct Search<'a> {
    g: &'a Graph,
    full: u64,
    order: Vec<usize>,
    present: Vec<u64>,
    color: Vec<Color>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn avail(&self, id: usize) -> u64 {
        let e = self.g.edge(id);
        self.full & !(self.present[e.u] | self.present[e.v])
    }

    fn neighbours_ok(&self, v: usize) -> bool {
        self.g
            .incident(v)
            .iter()
            .all(|&f| self.color[f] != 0 || self.avail(f) != 0)
    }

    /// Some(true) found, Some(false) exhausted, None out of budget.
    fn dfs(&mut self, pos: usize, max_used: usize) -> Option<bool> {
        if pos == self.order.len() {
            return Some(true);
        }
        let id = self.order[pos];
        let Edge { u, v } = self.g.edge(id);
        let mut avail = self.avail(id);
        // colours are interchangeable: open at most one new colour
        let cap = if max_used >= 64 {
            u64::MAX
        } else {
            (1u64 << (max_used + 1)) - 1
        };
        avail &= cap;
        while avail != 0 {
            let bit = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let mask = 1u64 << bit;
            self.present[u] |= mask;
            self.present[v] |= mask;
            self.color[id] = bit + 1;
            if self.neighbours_ok(u) && self.neighbours_ok(v) {
                match self.dfs(pos + 1, max_used.max(bit + 1)) {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.present[u] &= !mask;
            self.present[v] &= !mask;
            self.color[id] = 0;
        }
        Some(false)
    }
}

/// Decides whether `g` has a proper k-edge-colouring.
///
/// Edges are tried in order of decreasing larger-endpoint degree (ties by
/// edge id), colours ascending, and a new colour is opened only after all
/// smaller ones are in use. `budget` bounds the number of colour
/// assignments tried; running out is reported as
/// [`Verdict::BudgetExceeded`], never as a refutation.
pub fn color_exact(g: &Graph, k: usize, budget: u64) -> ColorSearch {
    let delta = g.max_degree();
    if g.m() == 0 {
        return ColorSearch {
            verdict: Verdict::Found(EdgeColoring::uncolored(g.clone(), k)),
            nodes: 0,
        };
    }
    if delta > k {
        return ColorSearch {
            verdict: Verdict::Refuted,
            nodes: 0,
        };
    }
    if k > delta {
        let c = vizing_color(g);
        let c = EdgeColoring::from_ids(g.clone(), k, c.color_ids().to_vec()).expect("proper");
        return ColorSearch {
            verdict: Verdict::Found(c),
            nodes: 0,
        };
    }
    assert!(k <= 64, "exact search supports at most 64 colours");
    if has_overfull_subset(g, k) {
        return ColorSearch {
            verdict: Verdict::Refuted,
            nodes: 0,
        };
    }

    let mut order: Vec<usize> = (0..g.m()).collect();
    let key = |id: usize| {
        let e = g.edge(id);
        g.degree(e.u).max(g.degree(e.v))
    };
    order.sort_by(|&a, &b| key(b).cmp(&key(a)).then(a.cmp(&b)));
    let mut s = Search {
        g,
        full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
        order,
        present: vec![0; g.n()],
        color: vec![0; g.m()],
        nodes: 0,
        budget,
    };
    let verdict = match s.dfs(0, 0) {
        Some(true) => Verdict::Found(
            EdgeColoring::from_ids(g.clone(), k, s.color).expect("search keeps colouring proper"),
        ),
        Some(false) => Verdict::Refuted,
        None => Verdict::BudgetExceeded,
    };
    ColorSearch {
        verdict,
        nodes: s.nodes,
    }
}

/// A proper k-colouring of G − e, or an exhaustion verdict.
pub fn color_minus_edge(g: &Graph, e: Edge, k: usize, budget: u64) -> Result<ColorSearch> {
    let h = g.without_edge(e)?;
    Ok(color_exact(&h, k, budget))
}

/// χ′(G) decided exactly, or `None` when the budget ran out.
#[derive(Debug, Clone, Serialize)]
pub struct ChiVerdict {
    pub delta: usize,
    pub chi: Option<usize>,
    pub nodes: u64,
    #[serde(skip)]
    pub coloring: Option<EdgeColoring>,
}

impl ChiVerdict {
    pub fn is_class_two(&self) -> Option<bool> {
        self.chi.map(|c| c > self.delta)
    }
}

pub fn chromatic_index(g: &Graph, budget: u64) -> ChiVerdict {
    let delta = g.max_degree();
    let s = color_exact(g, delta, budget);
    let (chi, coloring) = match s.verdict {
        Verdict::Found(c) => (Some(delta), Some(c)),
        Verdict::Refuted => (Some(delta + 1), Some(vizing_color(g))),
        Verdict::BudgetExceeded => (None, None),
    };
    ChiVerdict {
        delta,
        chi,
        nodes: s.nodes,
        coloring,
    }
}
