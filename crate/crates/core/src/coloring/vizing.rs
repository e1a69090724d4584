//! Constructive (Δ+1)-edge-colouring via fan rotation and cd-path
//! inversion (Misra–Gries).

use super::{Color, EdgeColoring};
use crate::graph::Graph;

struct State<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<Color>,
    /// at[v][c] = edge id coloured c at v
    at: Vec<Vec<Option<usize>>>,
}

impl<'a> State<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        State {
            g,
            k,
            color: vec![0; g.m()],
            at: vec![vec![None; k + 1]; g.n()],
        }
    }

    fn free(&self, v: usize, c: Color) -> bool {
        self.at[v][c].is_none()
    }

    fn first_free(&self, v: usize) -> Color {
        (1..=self.k)
            .find(|&c| self.free(v, c))
            .expect("a vertex of degree ≤ Δ misses a colour")
    }

    fn set(&mut self, id: usize, c: Color) {
        let e = self.g.edge(id);
        let old = self.color[id];
        if old != 0 {
            self.at[e.u][old] = None;
            self.at[e.v][old] = None;
        }
        self.color[id] = c;
        if c != 0 {
            debug_assert!(self.free(e.u, c) && self.free(e.v, c));
            self.at[e.u][c] = Some(id);
            self.at[e.v][c] = Some(id);
        }
    }

    fn eid(&self, a: usize, b: usize) -> usize {
        self.g.edge_id(a, b).expect("fan edge")
    }

    /// Maximal fan at `u` starting with the uncoloured edge to `v`; the
    /// smallest-index neighbour is taken whenever several extend it.
    fn fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = self
                .g
                .neighbors(u)
                .iter()
                .zip(self.g.incident(u))
                .find(|&(w, &id)| {
                    let c = self.color[id];
                    c != 0 && self.free(last, c) && !fan.contains(w)
                });
            match next {
                Some((&w, _)) => fan.push(w),
                None => return fan,
            }
        }
    }

    /// Swaps c and d along the alternating path leaving `u` (which misses c).
    fn invert_path(&mut self, u: usize, c: Color, d: Color) {
        let mut path = Vec::new();
        let (mut at, mut want) = (u, d);
        while let Some(id) = self.at[at][want] {
            path.push(id);
            at = self.g.edge(id).other(at);
            want = if want == d { c } else { d };
        }
        let old: Vec<Color> = path.iter().map(|&id| self.color[id]).collect();
        for &id in &path {
            self.set(id, 0);
        }
        for (&id, &col) in path.iter().zip(&old) {
            self.set(id, if col == c { d } else { c });
        }
    }

    fn color_edge(&mut self, id: usize) {
        let e = self.g.edge(id);
        let u = e.u;
        let fan = self.fan(u, e.v);
        let c = self.first_free(u);
        let d = self.first_free(*fan.last().unwrap());
        if c != d {
            self.invert_path(u, c, d);
        }
        debug_assert!(self.free(u, d));

        let mut pivot = None;
        for i in 0..fan.len() {
            if i > 0 {
                let col = self.color[self.eid(u, fan[i])];
                if col == 0 || !self.free(fan[i - 1], col) {
                    break;
                }
            }
            if self.free(fan[i], d) {
                pivot = Some(i);
                break;
            }
        }
        let w = pivot.expect("fan prefix ending at a vertex missing d");

        let shifted: Vec<Color> = (1..=w).map(|i| self.color[self.eid(u, fan[i])]).collect();
        for &f in &fan[1..=w] {
            let fid = self.eid(u, f);
            self.set(fid, 0);
        }
        for (i, &col) in shifted.iter().enumerate() {
            let fid = self.eid(u, fan[i]);
            self.set(fid, col);
        }
        let wid = self.eid(u, fan[w]);
        self.set(wid, d);
    }
}

/// A total proper colouring with k = Δ(G) + 1 colours.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let k = g.max_degree() + 1;
    let mut st = State::new(g, k);
    for id in 0..g.m() {
        st.color_edge(id);
    }
    EdgeColoring::from_ids(g.clone(), k, st.color).expect("fan rotation keeps the colouring proper")
}
