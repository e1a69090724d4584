//! Proper edge colourings with colours `1..=k`.
//!
//! Colour 0 marks an uncoloured edge; a partial colouring is still required
//! to be proper on the edges it does colour.

mod exact;
mod kempe;
mod vizing;

pub use exact::{
    chromatic_index, color_exact, color_minus_edge, ChiVerdict, ColorSearch, DEFAULT_COLOR_BUDGET,
};
pub use kempe::{align_missing, kempe_chain, kempe_swap, ChainKind, KempeChain};
pub use vizing::vizing_color;

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{usage, Error, Result};
use crate::graph::{Edge, Graph};

pub type Color = usize;
pub type ColorSet = BTreeSet<Color>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Graph,
    k: usize,
    colors: Vec<Color>,
}

impl EdgeColoring {
    /// The all-uncoloured k-colouring of `host`.
    pub fn uncolored(host: Graph, k: usize) -> Self {
        let m = host.m();
        EdgeColoring {
            host,
            k,
            colors: vec![0; m],
        }
    }

    /// Builds a colouring from per-edge-id colours (0 = uncoloured) and
    /// checks that it is proper.
    pub fn from_ids(host: Graph, k: usize, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != host.m() {
            return usage(format!("{} colours for {} edges", colors.len(), host.m()));
        }
        if let Some(&c) = colors.iter().find(|&&c| c > k) {
            return usage(format!("colour {c} outside 1..={k}"));
        }
        let c = EdgeColoring { host, k, colors };
        if let Some((e, f)) = c.conflict() {
            return usage(format!("edges {e} and {f} share a vertex and a colour"));
        }
        Ok(c)
    }

    pub fn from_assignment<I>(host: Graph, k: usize, assignment: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Edge, Color)>,
    {
        let mut colors = vec![0; host.m()];
        for (e, c) in assignment {
            let id = host.check_edge(e)?;
            colors[id] = c;
        }
        Self::from_ids(host, k, colors)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Colour of edge id `id`, 0 when uncoloured.
    pub fn color_by_id(&self, id: usize) -> Color {
        self.colors[id]
    }

    pub fn color(&self, e: Edge) -> Option<Color> {
        let id = self.host.edge_id(e.u, e.v)?;
        Some(self.colors[id]).filter(|&c| c != 0)
    }

    pub fn color_ids(&self) -> &[Color] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != 0)
    }

    /// φ(v)
    pub fn present_colors(&self, v: usize) -> ColorSet {
        self.host
            .incident(v)
            .iter()
            .map(|&id| self.colors[id])
            .filter(|&c| c != 0)
            .collect()
    }

    /// φ̄(v)
    pub fn missing_colors(&self, v: usize) -> ColorSet {
        let present = self.present_colors(v);
        (1..=self.k).filter(|c| !present.contains(c)).collect()
    }

    pub fn is_missing(&self, v: usize, c: Color) -> bool {
        self.edge_with_color(v, c).is_none()
    }

    /// Id of the edge at `v` coloured `c`, if any.
    pub fn edge_with_color(&self, v: usize, c: Color) -> Option<usize> {
        if c == 0 {
            return None;
        }
        self.host
            .incident(v)
            .iter()
            .copied()
            .find(|&id| self.colors[id] == c)
    }

    fn conflict(&self) -> Option<(Edge, Edge)> {
        for v in 0..self.host.n() {
            let inc = self.host.incident(v);
            for (a, &ea) in inc.iter().enumerate() {
                let ca = self.colors[ea];
                if ca == 0 {
                    continue;
                }
                if let Some(&eb) = inc[a + 1..].iter().find(|&&eb| self.colors[eb] == ca) {
                    return Some((self.host.edge(ea), self.host.edge(eb)));
                }
            }
        }
        None
    }

    pub fn is_proper(&self) -> bool {
        self.colors.iter().all(|&c| c <= self.k) && self.conflict().is_none()
    }

    /// Proper and every edge coloured.
    pub fn is_proper_total(&self) -> bool {
        self.is_total() && self.is_proper()
    }

    /// Exchanges the labels `a` and `b` everywhere.
    pub fn swap_labels(&self, a: Color, b: Color) -> Result<Self> {
        self.relabel(|c| {
            if c == a {
                b
            } else if c == b {
                a
            } else {
                c
            }
        })
    }

    /// Applies a colour bijection; `map` must send `1..=k` onto `1..=k`.
    pub fn relabel(&self, map: impl Fn(Color) -> Color) -> Result<Self> {
        let image: BTreeSet<Color> = (1..=self.k).map(&map).collect();
        if image.len() != self.k || image.iter().any(|&c| c == 0 || c > self.k) {
            return usage("relabel map is not a bijection on 1..=k");
        }
        let colors = self
            .colors
            .iter()
            .map(|&c| if c == 0 { 0 } else { map(c) })
            .collect();
        Ok(EdgeColoring {
            host: self.host.clone(),
            k: self.k,
            colors,
        })
    }

    /// The colouring restricted to a subgraph `sub` on the same vertex set.
    pub fn restrict(&self, sub: &Graph) -> Result<Self> {
        let colors = sub
            .edges()
            .iter()
            .map(|e| {
                self.host
                    .edge_id(e.u, e.v)
                    .map(|id| self.colors[id])
                    .ok_or(Error::NotAnEdge { u: e.u, v: e.v })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_ids(sub.clone(), self.k, colors)
    }

    pub(crate) fn set_by_id(&mut self, id: usize, c: Color) {
        self.colors[id] = c;
    }

    /// Coloured edges as `(edge, colour)` in canonical edge order.
    pub fn assignment(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.host
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, &c)| c != 0)
            .map(|(&e, &c)| (e, c))
    }
}

/// Serialises as `{"k": k, "edges": [[u, v, colour], ...]}`.
impl Serialize for EdgeColoring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 3]> = self.assignment().map(|(e, c)| [e.u, e.v, c]).collect();
        let mut st = s.serialize_struct("EdgeColoring", 2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// K₄ coloured by its three perfect matchings.
    pub(crate) fn k4_three_colored() -> EdgeColoring {
        let g = complete(4);
        EdgeColoring::from_assignment(
            g,
            3,
            [
                (Edge::new(0, 1), 1),
                (Edge::new(2, 3), 1),
                (Edge::new(0, 2), 2),
                (Edge::new(1, 3), 2),
                (Edge::new(0, 3), 3),
                (Edge::new(1, 2), 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn present_and_missing() {
        let c5 = cycle(5);
        let col = EdgeColoring::from_assignment(
            c5.clone(),
            3,
            [
                (Edge::new(0, 1), 1),
                (Edge::new(1, 2), 2),
                (Edge::new(2, 3), 1),
                (Edge::new(3, 4), 2),
                (Edge::new(0, 4), 3),
            ],
        )
        .unwrap();
        for v in 0..5 {
            assert_eq!(col.missing_colors(v).len(), 1);
            let all: ColorSet = col
                .present_colors(v)
                .union(&col.missing_colors(v))
                .copied()
                .collect();
            assert_eq!(all, (1..=3).collect());
        }
        let blank = EdgeColoring::uncolored(c5, 3);
        assert_eq!(blank.missing_colors(2), (1..=3).collect());
        let k4 = k4_three_colored();
        assert!((0..4).all(|v| k4.missing_colors(v).is_empty()));
    }

    #[test]
    fn improper_input_is_rejected() {
        let r =
            EdgeColoring::from_assignment(path(3), 2, [(Edge::new(0, 1), 1), (Edge::new(1, 2), 1)]);
        assert!(matches!(r, Err(Error::Usage(_))));
        let r = EdgeColoring::from_assignment(path(3), 2, [(Edge::new(0, 1), 3)]);
        assert!(matches!(r, Err(Error::Usage(_))));
    }

    #[test]
    fn json_shape() {
        let col = EdgeColoring::from_assignment(path(3), 2, [(Edge::new(0, 1), 2)]).unwrap();
        let s = serde_json::to_string(&col).unwrap();
        assert_eq!(s, r#"{"k":2,"edges":[[0,1,2]]}"#);
    }

    #[test]
    fn relabel_rejects_non_bijection() {
        let k4 = k4_three_colored();
        assert!(k4.relabel(|_| 1).is_err());
        let s = k4.swap_labels(1, 3).unwrap();
        assert_eq!(s.color(Edge::new(0, 1)), Some(3));
        assert!(s.is_proper_total());
    }
}
