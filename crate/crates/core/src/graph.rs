//! Simple undirected graphs on dense vertex indices `0..n`, plus the
//! set-level primitives (neighbourhoods, boundaries, components, cuts) the
//! rest of the crate is built from.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Canonical edge for the unordered pair `{a, b}`. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn has(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        if a == b {
            return Err(de::Error::custom("self-loop"));
        }
        Ok(Edge::new(a, b))
    }
}

/// Sorted, deduplicated set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut items: Vec<usize>) -> Self {
        items.sort_unstable();
        items.dedup();
        VertexSet(items)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn without(&self, v: usize) -> Self {
        VertexSet(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    pub fn with(&self, v: usize) -> Self {
        let mut items = self.0.clone();
        items.push(v);
        VertexSet::new(items)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Membership mask over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }
}

impl Deref for VertexSet {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

/// Sorted, deduplicated set of canonical edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new(mut items: Vec<Edge>) -> Self {
        items.sort_unstable();
        items.dedup();
        EdgeSet(items)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.binary_search(e).is_ok()
    }

    pub fn into_vec(self) -> Vec<Edge> {
        self.0
    }
}

impl Deref for EdgeSet {
    type Target = [Edge];
    fn deref(&self) -> &[Edge] {
        &self.0
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet::new(iter.into_iter().collect())
    }
}

/// A finite simple undirected graph.
///
/// Vertices are `0..n`. Neighbour lists are sorted, and every edge has a
/// stable id given by its position in the canonically sorted edge list, so
/// per-edge data (colours, search state) can live in flat vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph, rejecting loops, repeated pairs and out-of-range ends.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { v: x, n });
                }
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("parallel edge {}", w[0])));
        }
        Ok(Self::from_sorted_edges(n, edges))
    }

    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut inc = vec![Vec::new(); n];
        for v in 0..n {
            adj[v].sort_unstable();
            inc[v] = adj[v]
                .iter()
                .map(|&w| edges.binary_search(&Edge::new(v, w)).expect("edge present"))
                .collect();
        }
        Graph { adj, inc, edges }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge ids incident to `v`, parallel to [`Graph::neighbors`].
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Δ(G); zero for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.n() || a == b {
            return None;
        }
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n() })
        }
    }

    pub fn check_edge(&self, e: Edge) -> Result<usize> {
        self.edge_id(e.u, e.v)
            .ok_or(Error::NotAnEdge { u: e.u, v: e.v })
    }

    fn check_set(&self, s: &[usize]) -> Result<()> {
        s.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// Vertices of degree 2.
    pub fn divalent_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.degree(v) == 2).collect()
    }

    /// G − e, on the same vertex set.
    pub fn without_edge(&self, e: Edge) -> Result<Graph> {
        let id = self.check_edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(id);
        Ok(Self::from_sorted_edges(self.n(), edges))
    }

    /// G − E′, on the same vertex set.
    pub fn without_edges(&self, removed: &[Edge]) -> Result<Graph> {
        for &e in removed {
            self.check_edge(e)?;
        }
        let drop = EdgeSet::new(removed.to_vec());
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !drop.contains(e))
            .collect();
        Ok(Self::from_sorted_edges(self.n(), edges))
    }

    /// Spanning subgraph with the given edges (all must belong to G).
    pub fn spanning_subgraph(&self, keep: &[Edge]) -> Result<Graph> {
        for &e in keep {
            self.check_edge(e)?;
        }
        Ok(Self::from_sorted_edges(
            self.n(),
            EdgeSet::new(keep.to_vec()).into_vec(),
        ))
    }

    /// Drops isolated vertices and relabels the rest in increasing order.
    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| self.degree(v) > 0).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(index[e.u], index[e.v]))
            .collect::<EdgeSet>()
            .into_vec();
        Self::from_sorted_edges(keep.len(), edges)
    }

    /// Connected components of G − `removed`, each sorted, ordered by their
    /// smallest member.
    pub fn components(&self, removed: &[usize]) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &v in removed {
            if v < n {
                seen[v] = true;
            }
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components(&[]).len() == 1
    }

    /// E_G(A₁, A₂) for disjoint vertex sets.
    pub fn boundary_edges(&self, a: &[usize], b: &[usize]) -> Result<EdgeSet> {
        self.check_set(a)?;
        self.check_set(b)?;
        let in_b = VertexSet::new(b.to_vec()).mask(self.n());
        if a.iter().any(|&v| in_b[v]) {
            return usage("boundary_edges requires disjoint vertex sets");
        }
        let mut out = Vec::new();
        for &v in a {
            for &w in &self.adj[v] {
                if in_b[w] {
                    out.push(Edge::new(v, w));
                }
            }
        }
        Ok(EdgeSet::new(out))
    }

    /// e_G(A₁, A₂).
    pub fn count_between(&self, a: &[usize], b: &[usize]) -> Result<usize> {
        self.boundary_edges(a, b).map(|s| s.len())
    }

    /// N(A) = ⋃ N(v) − A.
    pub fn neighborhood(&self, a: &[usize]) -> VertexSet {
        let inside = VertexSet::new(a.to_vec()).mask(self.n());
        a.iter()
            .flat_map(|&v| self.adj[v].iter().copied())
            .filter(|&w| !inside[w])
            .collect()
    }

    pub fn is_stable(&self, x: &[usize]) -> bool {
        let inside = VertexSet::new(x.to_vec()).mask(self.n());
        x.iter().all(|&v| self.adj[v].iter().all(|&w| !inside[w]))
    }

    /// Edges whose removal increases the number of components.
    pub fn bridges(&self) -> Vec<Edge> {
        // iterative lowpoint DFS
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge id, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, pe, ref mut next)) = stack.last_mut() {
                if *next < self.adj[v].len() {
                    let w = self.adj[v][*next];
                    let eid = self.inc[v][*next];
                    *next += 1;
                    if eid == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, eid, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(self.edges[pe]);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Splits a connected graph along `cut`. Returns the two sides when
    /// `cut` is an inclusion-minimal edge cut, `None` otherwise. The side
    /// holding the smallest vertex comes first.
    pub fn minimal_cut_sides(&self, cut: &[Edge]) -> Option<(VertexSet, VertexSet)> {
        if cut.is_empty() || !self.is_connected() {
            return None;
        }
        let rest = self.without_edges(cut).ok()?;
        let comps = rest.components(&[]);
        if comps.len() != 2 {
            return None;
        }
        let side = comps[0].mask(self.n());
        if cut.iter().all(|e| side[e.u] != side[e.v]) {
            let mut it = comps.into_iter();
            Some((it.next()?, it.next()?))
        } else {
            None
        }
    }

    /// True iff removing `cut` leaves exactly two components and no proper
    /// subset of `cut` already disconnects the graph.
    pub fn is_minimal_edge_cut(&self, cut: &[Edge]) -> bool {
        self.minimal_cut_sides(cut).is_some()
    }
}
