//! Three-edge cuts: colour types of the cut edges, gluing the colourings
//! of the two sides, and the check that critical 3-cuts avoid divalent
//! vertices.

use std::collections::HashMap;

use serde::Serialize;

use crate::coloring::{chromatic_index, color_minus_edge, Color, EdgeColoring};
use crate::error::{usage, Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::search::Verdict;

/// Equality pattern of (φ(e₁), φ(e₂), φ(e₃)):
/// 1 all equal, 2 e₁=e₂≠e₃, 3 e₁=e₃≠e₂, 4 e₂=e₃≠e₁, 5 all distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CutColoringType(pub u8);

fn pattern(a: Color, b: Color, c: Color) -> CutColoringType {
    CutColoringType(match (a == b, a == c, b == c) {
        (true, true, _) => 1,
        (true, false, _) => 2,
        (false, true, _) => 3,
        (false, false, true) => 4,
        (false, false, false) => 5,
    })
}

pub fn cut_type(c: &EdgeColoring, e1: Edge, e2: Edge, e3: Edge) -> Result<CutColoringType> {
    let mut cols = [0; 3];
    for (slot, e) in cols.iter_mut().zip([e1, e2, e3]) {
        match c.color(e) {
            Some(col) if col != 0 => *slot = col,
            _ => return usage(format!("edge {e} is not coloured")),
        }
    }
    Ok(pattern(cols[0], cols[1], cols[2]))
}

/// The two sides of a minimal 3-edge cut {e₁, e₂, e₃}.
///
/// `a` holds the smallest vertex. `ga` and `gb` are spanning subgraphs of
/// G (same vertex set): the edges inside one side plus the three cut edges.
#[derive(Debug, Clone)]
pub struct CutSides {
    pub cut: [Edge; 3],
    pub a: VertexSet,
    pub b: VertexSet,
    pub ga: Graph,
    pub gb: Graph,
}

pub fn cut_sides(g: &Graph, cut: [Edge; 3]) -> Result<CutSides> {
    for e in cut {
        g.check_edge(e)?;
    }
    if cut[0] == cut[1] || cut[0] == cut[2] || cut[1] == cut[2] {
        return usage("cut edges must be distinct");
    }
    let Some((a, b)) = g.minimal_cut_sides(&cut) else {
        return usage(format!(
            "{{{}, {}, {}}} is not an inclusion-minimal edge cut",
            cut[0], cut[1], cut[2]
        ));
    };
    let in_a = a.mask(g.n());
    let side = |mine: bool| -> Result<Graph> {
        let keep: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| cut.contains(e) || (in_a[e.u] == mine && in_a[e.v] == mine))
            .collect();
        g.spanning_subgraph(&keep)
    };
    Ok(CutSides {
        cut,
        ga: side(true)?,
        gb: side(false)?,
        a,
        b,
    })
}

/// Glues a colouring of G_A and one of G_B into a colouring of G, after
/// relabelling G_B's colours so the cut edges agree. `Ok(None)` when the
/// cut types differ, since then no relabelling can match them.
pub fn combine_cut_colorings(
    g: &Graph,
    ca: &EdgeColoring,
    cb: &EdgeColoring,
    cut: [Edge; 3],
) -> Result<Option<EdgeColoring>> {
    let sides = cut_sides(g, cut)?;
    if ca.host() != &sides.ga || cb.host() != &sides.gb {
        return usage("colourings must be of G_A and G_B for this cut");
    }
    if ca.k() != cb.k() {
        return usage(format!("colour counts differ: {} vs {}", ca.k(), cb.k()));
    }
    if !ca.is_proper_total() || !cb.is_proper_total() {
        return usage("both colourings must be proper and total");
    }
    let [e1, e2, e3] = cut;
    if cut_type(ca, e1, e2, e3)? != cut_type(cb, e1, e2, e3)? {
        return Ok(None);
    }
    let k = ca.k();
    let mut map = vec![0; k + 1];
    let mut used = vec![false; k + 1];
    for e in cut {
        let (from, to) = (cb.color(e).unwrap(), ca.color(e).unwrap());
        map[from] = to;
        used[to] = true;
    }
    let mut free = (1..=k).filter(|&c| !used[c]);
    for slot in map.iter_mut().skip(1) {
        if *slot == 0 {
            *slot = free.next().expect("bijection extends");
        }
    }
    let cb = cb.relabel(|c| map[c])?;
    let in_a = sides.a.mask(g.n());
    let colors: Vec<Color> = g
        .edges()
        .iter()
        .map(|e| {
            let from_a = cut.contains(e) || in_a[e.u];
            if from_a { ca.color(*e) } else { cb.color(*e) }.expect("edge on one side")
        })
        .collect();
    EdgeColoring::from_ids(g.clone(), k, colors).map(Some)
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma2Violation {
    pub cut: [Edge; 3],
    /// Cut edges with a divalent endpoint.
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma2Report {
    pub k: usize,
    pub cuts_examined: usize,
    /// Minimal 3-edge cuts whose three edges are all critical.
    pub critical_cuts: Vec<[Edge; 3]>,
    pub violations: Vec<Lemma2Violation>,
    /// False when some cut edge's criticality stayed undecided.
    pub complete: bool,
}

/// All inclusion-minimal 3-edge cuts of a connected graph, each listed in
/// edge order, sorted lexicographically.
pub fn minimal_three_cuts(g: &Graph) -> Result<Vec<[Edge; 3]>> {
    let edges = g.edges();
    let m = edges.len();
    let mut out = Vec::new();
    // the third edge of a minimal 3-cut is a bridge of G − e₁ − e₂
    for i in 0..m {
        for j in i + 1..m {
            let rest = g.without_edges(&[edges[i], edges[j]])?;
            let mut thirds: Vec<usize> = rest
                .bridges()
                .iter()
                .filter_map(|b| g.edge_id(b.u, b.v))
                .filter(|&l| l > j)
                .collect();
            thirds.sort_unstable();
            for l in thirds {
                let cut = [edges[i], edges[j], edges[l]];
                if g.is_minimal_edge_cut(&cut) {
                    out.push(cut);
                }
            }
        }
    }
    Ok(out)
}

/// Enumerates all inclusion-minimal 3-edge cuts made of critical edges and
/// reports those touching a divalent vertex. Needs Δ > 3 and class 2.
pub fn lemma2_check(g: &Graph, budget: u64) -> Result<Lemma2Report> {
    let k = g.max_degree();
    if k <= 3 {
        return Err(Error::Precondition("the 3-cut check requires k > 3".into()));
    }
    match chromatic_index(g, budget).is_class_two() {
        None => {
            return Err(Error::Precondition(
                "chromatic index undecided within budget".into(),
            ))
        }
        Some(false) => {
            return Err(Error::Precondition(
                "cut check needs χ′(G) = Δ(G) + 1".into(),
            ))
        }
        Some(true) => {}
    }
    let mut report = Lemma2Report {
        k,
        cuts_examined: 0,
        critical_cuts: Vec::new(),
        violations: Vec::new(),
        complete: true,
    };
    if !g.is_connected() {
        return Ok(report);
    }
    let mut critical: HashMap<Edge, Option<bool>> = HashMap::new();
    for cut in minimal_three_cuts(g)? {
        report.cuts_examined += 1;
        let mut all = Some(true);
        for e in cut {
            let c = match critical.get(&e) {
                Some(&c) => c,
                None => {
                    let c = match color_minus_edge(g, e, k, budget)?.verdict {
                        Verdict::Found(_) => Some(true),
                        Verdict::Refuted => Some(false),
                        Verdict::BudgetExceeded => None,
                    };
                    critical.insert(e, c);
                    c
                }
            };
            all = match (all, c) {
                (Some(false), _) | (_, Some(false)) => Some(false),
                (None, _) | (_, None) => None,
                _ => Some(true),
            };
        }
        match all {
            Some(true) => {}
            Some(false) => continue,
            None => {
                report.complete = false;
                continue;
            }
        }
        report.critical_cuts.push(cut);
        let touching: Vec<Edge> = cut
            .iter()
            .copied()
            .filter(|e| g.degree(e.u) == 2 || g.degree(e.v) == 2)
            .collect();
        if !touching.is_empty() {
            report.violations.push(Lemma2Violation {
                cut,
                edges: touching,
            });
        }
    }
    Ok(report)
}
