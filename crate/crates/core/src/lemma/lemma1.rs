//! The configuration bound: a vertex set A whose neighbours each send one
//! edge into A, all divalent except x and y, forces many divalent
//! neighbours once one of their edges into A is critical.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::coloring::{
    align_missing, chromatic_index, color_minus_edge, kempe_chain, Color, EdgeColoring,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::search::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Config {
    pub k: usize,
    pub a: VertexSet,
    pub x: usize,
    pub y: usize,
    pub w_list: VertexSet,
    pub l: usize,
    pub w_prime: usize,
    pub w: usize,
}

/// (h, z, h′): z is an interior vertex of a chain, h the colour of its
/// unique edge into A and h′ the colour of another edge at z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triple {
    pub h: Color,
    pub z: usize,
    pub h_prime: Color,
}

/// Lists every violated hypothesis; empty when the configuration is valid.
fn violations(g: &Graph, cfg: &Lemma1Config) -> Vec<String> {
    let mut out = Vec::new();
    let n = g.n();
    let all: Vec<usize> = cfg
        .a
        .iter()
        .chain([&cfg.x, &cfg.y])
        .chain(cfg.w_list.iter())
        .copied()
        .collect();
    if all.iter().chain([&cfg.w_prime, &cfg.w]).any(|&v| v >= n) {
        out.push(format!("vertex out of range for n = {n}"));
        return out;
    }
    if cfg.k != g.max_degree() {
        out.push(format!("k = {} but Δ(G) = {}", cfg.k, g.max_degree()));
    }
    if cfg.a.is_empty() {
        out.push("A is empty".into());
    }
    let nbhd = g.neighborhood(&cfg.a);
    let mut claimed: Vec<usize> = vec![cfg.x, cfg.y];
    claimed.extend(cfg.w_list.iter().copied());
    let claimed_set = VertexSet::new(claimed.clone());
    if claimed_set.len() != claimed.len() {
        out.push("x, y and the w_i must be distinct".into());
    }
    if claimed_set != nbhd {
        out.push(format!("N(A) = {:?}, not {{x, y}} ∪ w_list", &nbhd[..]));
    }
    let in_a = cfg.a.mask(n);
    for &v in nbhd.iter() {
        let into_a = g.neighbors(v).iter().filter(|&&u| in_a[u]).count();
        if into_a != 1 {
            out.push(format!("e_G(A, {v}) = {into_a}, not 1"));
        }
    }
    let (dx, dy) = (g.degree(cfg.x), g.degree(cfg.y));
    if !(dy <= dx && dx < cfg.k) {
        out.push(format!(
            "need d(y) ≤ d(x) < k, got d(y) = {dy}, d(x) = {dx}, k = {}",
            cfg.k
        ));
    }
    for &w in cfg.w_list.iter() {
        if g.degree(w) != 2 {
            out.push(format!("w = {w} is not divalent"));
        }
    }
    if cfg.l != cfg.w_list.len() || cfg.l == 0 {
        out.push(format!("l = {} but |w_list| = {}", cfg.l, cfg.w_list.len()));
    }
    if !cfg.w_list.contains(cfg.w) {
        out.push(format!("w = {} not in w_list", cfg.w));
    }
    if !cfg.a.contains(cfg.w_prime) {
        out.push(format!("w′ = {} not in A", cfg.w_prime));
    }
    if !g.has_edge(cfg.w_prime, cfg.w) {
        out.push(format!("w′w = {}{} is not an edge", cfg.w_prime, cfg.w));
    }
    out
}

/// `Err(Hypothesis)` naming each violated hypothesis.
pub fn validate_config(g: &Graph, cfg: &Lemma1Config) -> Result<()> {
    let v = violations(g, cfg);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Hypothesis(v.join("; ")))
    }
}

/// l > k(k − d(y)) − d(x) + 1.
pub fn lemma1_bound(k: usize, dx: usize, dy: usize, l: usize) -> bool {
    let (k, dx, dy, l) = (k as i64, dx as i64, dy as i64, l as i64);
    l > k * (k - dy) - dx + 1
}

pub fn lemma1_bound_check(g: &Graph, cfg: &Lemma1Config) -> Result<bool> {
    let v = violations(g, cfg);
    if !v.is_empty() {
        return Err(Error::Usage(format!(
            "invalid configuration: {}",
            v.join("; ")
        )));
    }
    Ok(lemma1_bound(cfg.k, g.degree(cfg.x), g.degree(cfg.y), cfg.l))
}

#[derive(Debug, Clone)]
pub struct Lemma1Options {
    /// Largest |A| tried; `None` means n − 3.
    pub size_cap: Option<usize>,
    /// Maximum number of candidate sets A examined.
    pub max_subsets: u64,
    /// Node budget for each colouring search.
    pub color_budget: u64,
}

impl Default for Lemma1Options {
    fn default() -> Self {
        Self {
            size_cap: None,
            max_subsets: 1 << 22,
            color_budget: crate::coloring::DEFAULT_COLOR_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma1Search {
    pub configs: Vec<Lemma1Config>,
    /// False when the subset cap was hit or some edge stayed undecided.
    pub complete: bool,
    pub subsets_examined: u64,
    pub undecided_edges: Vec<Edge>,
}

/// Enumerates every A with 1 ≤ |A| ≤ cap (by size, then lexicographically)
/// and every ordered choice of x, y, and critical edge w′w meeting the
/// hypotheses. Requires a class-2 graph with Δ ≥ 3.
pub fn find_lemma1_configs(g: &Graph, opts: &Lemma1Options) -> Result<Lemma1Search> {
    let k = g.max_degree();
    let chi = chromatic_index(g, opts.color_budget);
    match chi.is_class_two() {
        None => {
            return Err(Error::Precondition(
                "chromatic index undecided within budget".into(),
            ))
        }
        Some(false) => {
            return Err(Error::Precondition(
                "configuration search needs χ′(G) = Δ(G) + 1".into(),
            ))
        }
        Some(true) => {}
    }
    if k < 3 {
        return Err(Error::Precondition(format!(
            "k = {k}: no vertex x with 2 ≤ d(x) < k"
        )));
    }
    let n = g.n();
    let cap = opts
        .size_cap
        .unwrap_or(n.saturating_sub(3))
        .min(n.saturating_sub(1));
    let mut critical: HashMap<usize, Option<bool>> = HashMap::new();
    let mut out = Lemma1Search {
        configs: Vec::new(),
        complete: true,
        subsets_examined: 0,
        undecided_edges: Vec::new(),
    };

    'sizes: for size in 1..=cap {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if out.subsets_examined >= opts.max_subsets {
                out.complete = false;
                break 'sizes;
            }
            out.subsets_examined += 1;
            let a = VertexSet::new(idx.clone());
            configs_for_set(g, k, &a, opts.color_budget, &mut critical, &mut out)?;
            if !crate::even_factor::next_combination(&mut idx, n) {
                break;
            }
        }
    }
    out.undecided_edges = critical
        .iter()
        .filter(|(_, c)| c.is_none())
        .map(|(&id, _)| g.edge(id))
        .collect();
    out.undecided_edges.sort_unstable();
    if !out.undecided_edges.is_empty() {
        out.complete = false;
    }
    Ok(out)
}

fn configs_for_set(
    g: &Graph,
    k: usize,
    a: &VertexSet,
    budget: u64,
    critical: &mut HashMap<usize, Option<bool>>,
    out: &mut Lemma1Search,
) -> Result<()> {
    let in_a = a.mask(g.n());
    let nbhd = g.neighborhood(a);
    if nbhd.len() < 3 {
        return Ok(());
    }
    let mut anchor = Vec::with_capacity(nbhd.len());
    for &v in nbhd.iter() {
        let mut into = g.neighbors(v).iter().filter(|&&u| in_a[u]);
        let first = into.next();
        if into.next().is_some() {
            return Ok(());
        }
        anchor.push(*first.expect("neighbour of A"));
    }
    let heavy = nbhd.iter().filter(|&&v| g.degree(v) != 2).count();
    if heavy > 2 {
        return Ok(());
    }
    for (xi, &x) in nbhd.iter().enumerate() {
        for (yi, &y) in nbhd.iter().enumerate() {
            let (dx, dy) = (g.degree(x), g.degree(y));
            if x == y || !(dy <= dx && dx < k) {
                continue;
            }
            let rest: Vec<(usize, usize)> = nbhd
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != xi && i != yi)
                .map(|(i, &v)| (v, anchor[i]))
                .collect();
            if rest.iter().any(|&(v, _)| g.degree(v) != 2) {
                continue;
            }
            let w_list = VertexSet::new(rest.iter().map(|&(v, _)| v).collect());
            for &(w, w_prime) in &rest {
                let id = g.edge_id(w, w_prime).expect("anchor edge");
                let verdict = match critical.get(&id) {
                    Some(&c) => c,
                    None => {
                        let s = color_minus_edge(g, g.edge(id), k, budget)?;
                        let c = match s.verdict {
                            Verdict::Found(_) => Some(true),
                            Verdict::Refuted => Some(false),
                            Verdict::BudgetExceeded => None,
                        };
                        critical.insert(id, c);
                        c
                    }
                };
                if verdict == Some(true) {
                    out.configs.push(Lemma1Config {
                        k,
                        a: a.clone(),
                        x,
                        y,
                        l: w_list.len(),
                        w_list: w_list.clone(),
                        w_prime,
                        w,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Outcome of every checked step of the argument.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimResults {
    /// φ̄(w′) = φ(w) = {1} and 1 ∈ φ̄(x) after alignment.
    pub claim1_aligned: bool,
    /// Each P_{w′}(1, i) is a w′,w-path.
    pub chains_are_paths: bool,
    /// Each P_{w′}(1, i) carries a triple, and |M₁| = k − 1.
    pub claim2_m1_size: bool,
    /// Every M₁ triple uses colours {1, i}.
    pub m1_color_pairs: bool,
    /// No M₁ triple is at x.
    pub m1_avoids_x: bool,
    /// Every P_{z_i}(i₁, j) carries a triple.
    pub claim3_m2_nonempty: bool,
    pub claim4_disjoint: bool,
    /// |M₂| equals the number of pairs (j, z_i).
    pub claim5_m2_size: bool,
    /// Pair count ≥ (k − d(y))(k − 1).
    pub claim6_pair_bound: bool,
    /// M₁ ∪ M₂ ⊆ M.
    pub m_contains_m1_m2: bool,
    /// l > |M| − (d(x) − 1) − (d(y) − 1).
    pub l_exceeds_m: bool,
    /// |M₁| + |M₂| − (d(x) − 1) − (d(y) − 1) ≥ k(k − d(y)) − d(x) + 1.
    pub chain_lower_bound: bool,
    /// l > k(k − d(y)) − d(x) + 1.
    pub bound_strict: bool,
}

impl ClaimResults {
    pub fn all(&self) -> bool {
        self.claim1_aligned
            && self.chains_are_paths
            && self.claim2_m1_size
            && self.m1_color_pairs
            && self.m1_avoids_x
            && self.claim3_m2_nonempty
            && self.claim4_disjoint
            && self.claim5_m2_size
            && self.claim6_pair_bound
            && self.m_contains_m1_m2
            && self.l_exceeds_m
            && self.chain_lower_bound
            && self.bound_strict
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("claim1_aligned", self.claim1_aligned),
            ("chains_are_paths", self.chains_are_paths),
            ("claim2_m1_size", self.claim2_m1_size),
            ("m1_color_pairs", self.m1_color_pairs),
            ("m1_avoids_x", self.m1_avoids_x),
            ("claim3_m2_nonempty", self.claim3_m2_nonempty),
            ("claim4_disjoint", self.claim4_disjoint),
            ("claim5_m2_size", self.claim5_m2_size),
            ("claim6_pair_bound", self.claim6_pair_bound),
            ("m_contains_m1_m2", self.m_contains_m1_m2),
            ("l_exceeds_m", self.l_exceeds_m),
            ("chain_lower_bound", self.chain_lower_bound),
            ("bound_strict", self.bound_strict),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct M1Entry {
    pub i: Color,
    pub triple: Option<Triple>,
}

#[derive(Debug, Clone, Serialize)]
pub struct M2Entry {
    pub j: Color,
    pub z: usize,
    pub triple: Option<Triple>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma1Trace {
    pub config: Lemma1Config,
    pub phi: EdgeColoring,
    /// Colours interchanged along P_{w′} before relabelling, if any.
    pub swap: Option<(Color, Color)>,
    pub m: Vec<Triple>,
    pub m1: Vec<M1Entry>,
    pub m2: Vec<M2Entry>,
    pub pair_count: usize,
    pub claims: ClaimResults,
    /// l ≥ k(k − d(y)) − d(x) + 1, the weaker form reached at the end of
    /// the counting argument; reported next to the strict check.
    pub bound_nonstrict: bool,
    pub falsified: bool,
}

/// Triples (h, z, h′) read along the chain, in walk order.
fn chain_triples(
    g: &Graph,
    in_a: &[bool],
    members: &[bool],
    vertices: &[usize],
    edges: &[(Edge, Color)],
) -> Vec<Triple> {
    let mut out = Vec::new();
    for pos in 1..vertices.len().saturating_sub(1) {
        let z = vertices[pos];
        if !members[z] {
            continue;
        }
        let (prev, next) = (edges[pos - 1], edges[pos]);
        let into_a = |e: Edge| in_a[e.other(z)];
        debug_assert!(g.has_edge(prev.0.u, prev.0.v));
        if into_a(prev.0) {
            out.push(Triple {
                h: prev.1,
                z,
                h_prime: next.1,
            });
        } else if into_a(next.0) {
            out.push(Triple {
                h: next.1,
                z,
                h_prime: prev.1,
            });
        }
    }
    out
}

/// Replays the counting argument on a concrete colouring of G − w′w and
/// records the outcome of each step. Invalid configurations are
/// hypothesis errors; a failing step on a valid one sets `falsified`.
pub fn lemma1_trace(g: &Graph, cfg: &Lemma1Config, budget: u64) -> Result<Lemma1Trace> {
    validate_config(g, cfg)?;
    let k = cfg.k;
    let ww = Edge::new(cfg.w_prime, cfg.w);
    let start = match color_minus_edge(g, ww, k, budget)?.verdict {
        Verdict::Found(c) => c,
        Verdict::Refuted => return Err(Error::Hypothesis(format!("w′w = {ww} is not critical"))),
        Verdict::BudgetExceeded => {
            return Err(Error::Precondition(format!(
                "no {k}-colouring of G − {ww} found within budget"
            )))
        }
    };
    let aligned = align_missing(&start, cfg.w_prime, cfg.w, cfg.x)?;
    let phi = aligned.coloring;
    let h = phi.host();
    let mut claims = ClaimResults {
        claim1_aligned: phi.missing_colors(cfg.w_prime).iter().eq([1].iter())
            && phi.present_colors(cfg.w).iter().eq([1].iter())
            && phi.is_missing(cfg.x, 1),
        ..Default::default()
    };

    let n = g.n();
    let in_a = cfg.a.mask(n);
    let mut members = vec![false; n];
    for &z in [cfg.x, cfg.y].iter().chain(cfg.w_list.iter()) {
        members[z] = z != cfg.w;
    }
    let a_color = |z: usize| -> Color {
        let id = h
            .incident(z)
            .iter()
            .copied()
            .find(|&id| in_a[h.edge(id).other(z)])
            .expect("edge into A");
        phi.color_by_id(id)
    };

    let mut m = BTreeSet::new();
    for z in (0..n).filter(|&z| members[z]) {
        let hz = a_color(z);
        for c in phi.present_colors(z) {
            if c != hz {
                m.insert(Triple {
                    h: hz,
                    z,
                    h_prime: c,
                });
            }
        }
    }

    let mut m1 = Vec::new();
    let mut chains_ok = true;
    let mut pairs_ok = true;
    let mut avoids_x = true;
    for i in 2..=k {
        let chain = kempe_chain(&phi, cfg.w_prime, 1, i, Some(cfg.w_prime))?;
        if !(chain.is_path() && chain.end() == cfg.w) {
            chains_ok = false;
        }
        let t = chain_triples(h, &in_a, &members, &chain.vertices, &chain.edges)
            .last()
            .copied();
        if let Some(t) = t {
            let pair: BTreeSet<Color> = [t.h, t.h_prime].into();
            pairs_ok &= pair == [1, i].into();
            avoids_x &= t.z != cfg.x;
        }
        m1.push(M1Entry { i, triple: t });
    }
    let m1_set: BTreeSet<Triple> = m1.iter().filter_map(|e| e.triple).collect();
    claims.chains_are_paths = chains_ok;
    claims.claim2_m1_size = m1.iter().all(|e| e.triple.is_some()) && m1_set.len() == k - 1;
    claims.m1_color_pairs = pairs_ok;
    claims.m1_avoids_x = avoids_x;

    let pairs: BTreeSet<(Color, usize)> = m1_set
        .iter()
        .flat_map(|t| phi.missing_colors(t.z).into_iter().map(move |j| (j, t.z)))
        .collect();
    let mut m2 = Vec::new();
    for &(j, z) in &pairs {
        let i1 = a_color(z);
        let chain = kempe_chain(&phi, z, i1, j, Some(z))?;
        let t = chain_triples(h, &in_a, &members, &chain.vertices, &chain.edges)
            .first()
            .copied();
        m2.push(M2Entry { j, z, triple: t });
    }
    let m2_set: BTreeSet<Triple> = m2.iter().filter_map(|e| e.triple).collect();
    claims.claim3_m2_nonempty = m2.iter().all(|e| e.triple.is_some());
    claims.claim4_disjoint = m1_set.is_disjoint(&m2_set);
    claims.claim5_m2_size = m2_set.len() == pairs.len();

    let (ki, dx, dy, l) = (
        k as i64,
        g.degree(cfg.x) as i64,
        g.degree(cfg.y) as i64,
        cfg.l as i64,
    );
    let target = ki * (ki - dy) - dx + 1;
    claims.claim6_pair_bound = pairs.len() as i64 >= (ki - dy) * (ki - 1);
    claims.m_contains_m1_m2 = m1_set.is_subset(&m) && m2_set.is_subset(&m);
    claims.l_exceeds_m = l > m.len() as i64 - (dx - 1) - (dy - 1);
    claims.chain_lower_bound = (m1_set.len() + m2_set.len()) as i64 - (dx - 1) - (dy - 1) >= target;
    claims.bound_strict = l > target;

    let falsified = !claims.all();
    Ok(Lemma1Trace {
        config: cfg.clone(),
        phi: phi.clone(),
        swap: aligned.swap,
        m: m.into_iter().collect(),
        m1,
        m2,
        pair_count: pairs.len(),
        bound_nonstrict: l >= target,
        claims,
        falsified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::DEFAULT_COLOR_BUDGET as B;
    use crate::graph::named::*;

    #[test]
    fn bound_arithmetic() {
        assert!(!lemma1_bound(4, 3, 3, 2));
        assert!(lemma1_bound(4, 3, 3, 3));
        assert!(!lemma1_bound(5, 4, 2, 12));
        assert!(lemma1_bound(5, 4, 2, 13));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            find_lemma1_configs(&cycle(5), &Lemma1Options::default()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            find_lemma1_configs(&cycle(6), &Lemma1Options::default()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            find_lemma1_configs(&complete(4), &Lemma1Options::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn subdivided_k4_has_no_configuration() {
        let r = find_lemma1_configs(&subdivided_k4(), &Lemma1Options::default()).unwrap();
        assert!(r.configs.is_empty());
        assert!(r.complete);
        // |A| ≤ 2 on five vertices: 5 + 10 sets
        assert_eq!(r.subsets_examined, 15);
    }

    /// Every configuration the search reports on small class-2 graphs
    /// passes all checks.
    #[test]
    fn traces_pass_on_found_configs() {
        let mut graphs = vec![petersen(), complete(5), subdivided_k4()];
        // K4 with two edges subdivided, and K5 with one edge subdivided
        graphs.push(
            Graph::from_edges(
                6,
                [
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (1, 4),
                    (4, 3),
                    (2, 5),
                    (5, 3),
                ],
            )
            .unwrap(),
        );
        let mut k5s: Vec<(usize, usize)> = complete(5)
            .edges()
            .iter()
            .map(|e| (e.u, e.v))
            .filter(|&p| p != (0, 1))
            .collect();
        k5s.extend([(0, 5), (5, 1)]);
        graphs.push(Graph::from_edges(6, k5s).unwrap());
        let mut seen = 0;
        for g in graphs {
            let Ok(r) = find_lemma1_configs(&g, &Lemma1Options::default()) else {
                continue;
            };
            for cfg in &r.configs {
                let t = lemma1_trace(&g, cfg, B).unwrap();
                assert!(!t.falsified, "{:?}", t.claims.failures());
                assert!(lemma1_bound_check(&g, cfg).unwrap());
                seen += 1;
            }
        }
        let _ = seen;
    }

    #[test]
    fn invalid_config_is_rejected() {
        let g = subdivided_k4();
        let cfg = Lemma1Config {
            k: 3,
            a: VertexSet::new(vec![0]),
            x: 1,
            y: 2,
            w_list: VertexSet::new(vec![3]),
            l: 1,
            w_prime: 0,
            w: 3,
        };
        let err = lemma1_trace(&g, &cfg, B).unwrap_err();
        assert!(
            matches!(&err, Error::Hypothesis(m) if m.contains("w = 3 is not divalent")),
            "{err}"
        );
        assert!(matches!(lemma1_bound_check(&g, &cfg), Err(Error::Usage(_))));
    }
}
