//! Fixture loading, an isomorph-free generator for small connected graphs,
//! and a few named constructions used by the acceptance suite.

use std::collections::HashSet;
use std::path::PathBuf;

use critlab_core::{parse_graph6, Graph};
use rayon::prelude::*;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_lines(name: &str) -> Vec<String> {
    std::fs::read_to_string(fixture_path(name))
        .expect("fixture readable")
        .lines()
        .map(str::to_owned)
        .collect()
}

pub fn fixture_graphs(name: &str) -> Vec<Graph> {
    fixture_lines(name)
        .iter()
        .map(|l| parse_graph6(l).expect("fixture parses"))
        .collect()
}

/// Adjacency rows as bitmasks; n ≤ 11 so codes fit a u64.
fn rows(g: &Graph) -> Vec<u16> {
    let mut adj = vec![0u16; g.n()];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    adj
}

/// Splits cells by neighbour counts into every cell until stable. Cell
/// order depends only on isomorphism-invariant data.
fn refine(adj: &[u16], cells: &mut Vec<Vec<usize>>) {
    loop {
        let n = adj.len();
        let mut cell_of = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(n);
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let sig = |v: usize| -> Vec<u8> {
                let mut counts = vec![0u8; cells.len()];
                for w in 0..n {
                    if adj[v] >> w & 1 == 1 {
                        counts[cell_of[w]] += 1;
                    }
                }
                counts
            };
            let mut keyed: Vec<(Vec<u8>, usize)> = c.iter().map(|&v| (sig(v), v)).collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|x| x.1).collect());
                    start = k;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn code(adj: &[u16], order: &[usize]) -> u64 {
    let n = adj.len();
    let mut out = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            out <<= 1;
            if adj[order[i]] >> order[j] & 1 == 1 {
                out |= 1;
            }
        }
    }
    out
}

fn search(adj: &[u16], cells: Vec<Vec<usize>>, best: &mut Option<u64>) {
    let Some(pos) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let c = code(adj, &order);
        if best.is_none_or(|b| c > b) {
            *best = Some(c);
        }
        return;
    };
    for &v in &cells[pos] {
        let mut child = cells[..pos].to_vec();
        child.push(vec![v]);
        child.push(cells[pos].iter().copied().filter(|&w| w != v).collect());
        child.extend(cells[pos + 1..].iter().cloned());
        refine(adj, &mut child);
        search(adj, child, best);
    }
}

/// Canonical code: the largest upper-triangle adjacency string over all
/// leaves of the individualisation-refinement tree. Equal codes iff
/// isomorphic graphs with the same vertex count.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= 11);
    let adj = rows(g);
    let mut by_degree: Vec<(u32, usize)> = (0..g.n()).map(|v| (adj[v].count_ones(), v)).collect();
    by_degree.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (d, v) in by_degree {
        match cells.last_mut() {
            Some(c) if adj[c[0]].count_ones() == d => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    refine(&adj, &mut cells);
    let mut best = None;
    search(&adj, cells, &mut best);
    best.unwrap_or(0)
}

pub fn from_code(n: usize, code: u64) -> Graph {
    let mut pairs = Vec::new();
    let mut bit = n * (n - 1) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edges(n, pairs).expect("valid code")
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, grown from those on n − 1 by adding a vertex joined to a
/// nonempty subset (every connected graph has a non-cut vertex).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=10).contains(&n));
    let mut level: Vec<u64> = vec![0];
    for size in 2..=n {
        let parents: Vec<Graph> = level.iter().map(|&c| from_code(size - 1, c)).collect();
        let found: HashSet<u64> = parents
            .par_iter()
            .flat_map_iter(|p| {
                let base: Vec<(usize, usize)> = p.edges().iter().map(|e| (e.u, e.v)).collect();
                (1u32..(1 << (size - 1))).map(move |mask| {
                    let mut pairs = base.clone();
                    pairs.extend(
                        (0..size - 1)
                            .filter(|b| mask >> b & 1 == 1)
                            .map(|b| (b, size - 1)),
                    );
                    canonical_code(&Graph::from_edges(size, pairs).unwrap())
                })
            })
            .collect();
        level = found.into_iter().collect();
        level.sort_unstable();
    }
    level.into_iter().map(|c| from_code(n, c)).collect()
}

pub fn graph(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, pairs.iter().copied()).expect("valid graph")
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
}

/// Outer 5-cycle 0..5, spokes i–i+5, inner pentagram.
pub fn petersen() -> Graph {
    let mut p: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    p.extend((0..5).map(|i| (i, i + 5)));
    p.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::from_edges(10, p).unwrap()
}

/// K4 on 0..4 with the edge 2–3 replaced by the path 2–4–3.
pub fn subdivided_k4() -> Graph {
    graph(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)])
}

/// Two triangles joined by a perfect matching.
pub fn prism() -> Graph {
    graph(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

/// Every proper total k-colouring of `g`, by enumerating colour vectors.
pub fn all_colorings(g: &Graph, k: usize) -> Vec<critlab_core::EdgeColoring> {
    let m = g.m();
    let mut out = Vec::new();
    let mut cols = vec![1; m];
    loop {
        let proper = g.edges().iter().enumerate().all(|(i, e)| {
            g.edges()[..i]
                .iter()
                .enumerate()
                .all(|(j, f)| cols[i] != cols[j] || !(e.has(f.u) || e.has(f.v)))
        });
        if proper {
            out.push(
                critlab_core::EdgeColoring::from_ids(g.clone(), k, cols.clone()).expect("proper"),
            );
        }
        let mut i = 0;
        while i < m && cols[i] == k {
            cols[i] = 1;
            i += 1;
        }
        if i == m {
            return out;
        }
        cols[i] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn connected_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn fixture_is_the_generated_set() {
        let fixture: HashSet<(usize, u64)> = fixture_graphs("connected_le7.g6")
            .iter()
            .map(|g| (g.n(), canonical_code(g)))
            .collect();
        let generated: HashSet<(usize, u64)> = (1..=7)
            .flat_map(connected_graphs)
            .map(|g| (g.n(), canonical_code(&g)))
            .collect();
        assert_eq!(fixture.len(), 996);
        assert_eq!(fixture, generated);
    }

    #[test]
    fn all_le8_fixture_has_every_class_once() {
        let graphs = fixture_graphs("all_le8.g6");
        let codes: HashSet<(usize, u64)> =
            graphs.iter().map(|g| (g.n(), canonical_code(g))).collect();
        assert_eq!(codes.len(), graphs.len());
        let per_n: Vec<usize> = (1..=8)
            .map(|n| graphs.iter().filter(|g| g.n() == n).count())
            .collect();
        // all graphs, connected or not, on 1..8 vertices
        assert_eq!(per_n, [1, 2, 4, 11, 34, 156, 1044, 12346]);
    }

    #[test]
    fn canonical_code_ignores_labelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for g in connected_graphs(6).into_iter().chain([petersen()]) {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for _ in 0..5 {
                perm.shuffle(&mut rng);
                let h = Graph::from_edges(g.n(), g.edges().iter().map(|e| (perm[e.u], perm[e.v])))
                    .unwrap();
                assert_eq!(canonical_code(&g), canonical_code(&h));
            }
        }
    }

    #[test]
    fn from_code_round_trips() {
        for g in connected_graphs(5) {
            let c = canonical_code(&g);
            assert_eq!(canonical_code(&from_code(5, c)), c);
        }
    }
}
