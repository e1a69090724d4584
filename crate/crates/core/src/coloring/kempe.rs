//! Kempe chains: extraction, interchange, and the colour alignment used at
//! the start of the configuration-bound argument.

use serde::Serialize;

use super::{Color, EdgeColoring};
use crate::error::{usage, Error, Result};
use crate::graph::Edge;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Path,
    Circuit,
}

/// A component of K(i, j). For a circuit the first and last vertex agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KempeChain {
    pub colors: (Color, Color),
    pub vertices: Vec<usize>,
    /// Edges in walk order, with the colour each carried at extraction.
    pub edges: Vec<(Edge, Color)>,
    pub kind: ChainKind,
}

impl KempeChain {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("chain has a vertex")
    }

    pub fn is_path(&self) -> bool {
        self.kind == ChainKind::Path
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Path endpoints as an ordered pair (smaller first).
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        self.is_path().then(|| {
            let (a, b) = (self.start(), self.end());
            (a.min(b), a.max(b))
        })
    }
}

/// Follows the alternating walk leaving `from` along colour `first`.
/// Returns the vertices after `from` and the edges taken.
fn walk(
    c: &EdgeColoring,
    from: usize,
    first: Color,
    second: Color,
) -> (Vec<usize>, Vec<(Edge, Color)>) {
    let g = c.host();
    let mut verts = Vec::new();
    let mut edges = Vec::new();
    let mut at = from;
    let mut want = first;
    while let Some(id) = c.edge_with_color(at, want) {
        let e = g.edge(id);
        edges.push((e, want));
        at = e.other(at);
        verts.push(at);
        if at == from {
            break;
        }
        want = if want == first { second } else { first };
    }
    (verts, edges)
}

/// P_v(i, j): the component of K(i, j) through `v`.
///
/// Paths are listed from `start` when given (it must be an endpoint),
/// otherwise from the endpoint with the smaller index. Circuits start at
/// `start` if given, else at `v`, and leave along colour `i`.
pub fn kempe_chain(
    c: &EdgeColoring,
    v: usize,
    i: Color,
    j: Color,
    start: Option<usize>,
) -> Result<KempeChain> {
    c.host().check_vertex(v)?;
    if i == j || i == 0 || j == 0 || i > c.k() || j > c.k() {
        return usage(format!("invalid colour pair ({i}, {j}) for k = {}", c.k()));
    }
    if c.is_missing(v, i) && c.is_missing(v, j) {
        return usage(format!("colours {i} and {j} are both missing at {v}"));
    }

    let (fwd_v, fwd_e) = walk(c, v, i, j);
    if fwd_v.last() == Some(&v) {
        let mut vertices = vec![v];
        vertices.extend(fwd_v);
        let mut chain = KempeChain {
            colors: (i, j),
            vertices,
            edges: fwd_e,
            kind: ChainKind::Circuit,
        };
        if let Some(s) = start {
            rotate_circuit(&mut chain, s)?;
        }
        return Ok(chain);
    }
    let (back_v, back_e) = walk(c, v, j, i);
    let mut vertices: Vec<usize> = back_v.into_iter().rev().collect();
    vertices.push(v);
    vertices.extend(fwd_v);
    let mut edges: Vec<(Edge, Color)> = back_e.into_iter().rev().collect();
    edges.extend(fwd_e);

    let first = vertices[0];
    let last = *vertices.last().unwrap();
    let from = match start {
        Some(s) if s == first || s == last => s,
        Some(s) => {
            return usage(format!(
                "{s} is not an endpoint of the ({i}, {j}) chain at {v}"
            ))
        }
        None => first.min(last),
    };
    if from != first {
        vertices.reverse();
        edges.reverse();
    }
    Ok(KempeChain {
        colors: (i, j),
        vertices,
        edges,
        kind: ChainKind::Path,
    })
}

fn rotate_circuit(chain: &mut KempeChain, s: usize) -> Result<()> {
    let Some(pos) = chain.vertices[..chain.vertices.len() - 1]
        .iter()
        .position(|&x| x == s)
    else {
        return usage(format!("{s} is not on the circuit"));
    };
    chain.vertices.pop();
    chain.vertices.rotate_left(pos);
    chain.vertices.push(s);
    chain.edges.rotate_left(pos);
    Ok(())
}

/// φ/P: interchanges the chain's two colours on exactly its edges.
pub fn kempe_swap(c: &EdgeColoring, chain: &KempeChain) -> Result<EdgeColoring> {
    let (i, j) = chain.colors;
    let fresh = kempe_chain(c, chain.start(), i, j, None).map_err(|_| stale())?;
    let mut a: Vec<_> = fresh.edges.clone();
    let mut b: Vec<_> = chain.edges.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err(stale());
    }
    let mut out = c.clone();
    for &(e, col) in &chain.edges {
        let id = c.host().check_edge(e)?;
        out.set_by_id(id, if col == i { j } else { i });
    }
    debug_assert!(out.is_proper());
    Ok(out)
}

fn stale() -> Error {
    Error::Usage("stale Kempe chain: colouring changed since extraction".into())
}

/// Result of [`align_missing`].
#[derive(Debug, Clone)]
pub struct Aligned {
    pub coloring: EdgeColoring,
    /// Colours `(i, j)` interchanged along P_{w′}(i, j), if a swap was needed.
    pub swap: Option<(Color, Color)>,
    /// The colour that was relabelled to 1.
    pub relabeled_from: Color,
}

/// Given a proper k-colouring of G − w′w where w′w is critical and w is
/// divalent in G, produces a colouring with φ̄(w′) = φ(w) = {1} and
/// 1 ∈ φ̄(x), using at most one Kempe swap followed by a global relabel.
pub fn align_missing(c: &EdgeColoring, w_prime: usize, w: usize, x: usize) -> Result<Aligned> {
    let g = c.host();
    let k = c.k();
    for v in [w_prime, w, x] {
        g.check_vertex(v)?;
    }
    if w_prime == w || x == w || x == w_prime {
        return Err(Error::Hypothesis("w′, w and x must be distinct".into()));
    }
    if g.has_edge(w_prime, w) {
        return Err(Error::Hypothesis("colouring must be of G − w′w".into()));
    }
    if !c.is_proper_total() {
        return Err(Error::Hypothesis(
            "colouring must be proper and total".into(),
        ));
    }
    if g.degree(w) != 1 {
        return Err(Error::Hypothesis(format!("w = {w} divalent in G")));
    }
    if g.degree(x) >= k {
        return Err(Error::Hypothesis(format!(
            "d(x)<k (d({x}) = {}, k = {k})",
            g.degree(x)
        )));
    }
    let miss_wp = c.missing_colors(w_prime);
    let pres_w = c.present_colors(w);
    if miss_wp.len() != 1 || miss_wp != pres_w {
        return Err(Error::Hypothesis(format!(
            "critical edge: expected φ̄(w′) = φ(w) singleton, got {miss_wp:?} vs {pres_w:?}"
        )));
    }
    let i = *miss_wp.iter().next().unwrap();
    let miss_x = c.missing_colors(x);
    let j = if miss_x.contains(&i) {
        i
    } else {
        *miss_x.iter().next().unwrap()
    };

    let (swapped, swap) = if i == j {
        (c.clone(), None)
    } else {
        let chain = kempe_chain(c, w_prime, i, j, Some(w_prime))?;
        if chain.endpoints() != Some((w_prime.min(w), w_prime.max(w))) {
            return Err(Error::Hypothesis(format!(
                "critical edge: P_{w_prime}({i},{j}) is not a w′,w-path"
            )));
        }
        (kempe_swap(c, &chain)?, Some((i, j)))
    };
    let coloring = swapped.swap_labels(j, 1)?;
    debug_assert!(coloring.missing_colors(w_prime).iter().eq([1].iter()));
    debug_assert!(coloring.is_missing(x, 1));
    Ok(Aligned {
        coloring,
        swap,
        relabeled_from: j,
    })
}
