//! Parity barriers: vertex sets X with Σ_{v∈X}(d(v) − 2) − q(G;X) < 0,
//! where q counts the components D of G − X joined to X by an odd number
//! of edges. Such an X exists exactly when G has no even factor.

use serde::Serialize;

use crate::error::{usage, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::scalar::Scalar;
use crate::Rational;

pub const DEFAULT_BARRIER_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Barrier {
    #[serde(rename = "X")]
    pub x: VertexSet,
    /// Components D_i of G − X, ordered by smallest vertex.
    pub components: Vec<VertexSet>,
    /// e_G(D_i, X) per component.
    pub boundary: Vec<usize>,
    pub odd_flags: Vec<bool>,
    pub q: usize,
    pub deficiency: i64,
}

impl Barrier {
    pub fn is_barrier(&self) -> bool {
        self.deficiency < 0
    }

    /// Recomputes q and the deficiency from the stored decomposition.
    pub fn recompute(&self, g: &Graph) -> i64 {
        let q = self.boundary.iter().filter(|&&b| b % 2 == 1).count() as i64;
        self.x.iter().map(|&v| g.degree(v) as i64 - 2).sum::<i64>() - q
    }
}

/// The deficiency record of `x`, which must be a proper subset of V(G).
pub fn deficiency(g: &Graph, x: &VertexSet) -> Result<Barrier> {
    for &v in x.iter() {
        g.check_vertex(v)?;
    }
    if x.len() >= g.n() {
        return usage("X must be a proper subset of V(G)");
    }
    Ok(decompose(g, x))
}

fn decompose(g: &Graph, x: &VertexSet) -> Barrier {
    let components = g.components(x);
    let in_x = x.mask(g.n());
    let boundary: Vec<usize> = components
        .iter()
        .map(|d| {
            d.iter()
                .map(|&v| g.neighbors(v).iter().filter(|&&w| in_x[w]).count())
                .sum()
        })
        .collect();
    let odd_flags: Vec<bool> = boundary.iter().map(|b| b % 2 == 1).collect();
    let q = odd_flags.iter().filter(|&&o| o).count();
    let deficiency = x.iter().map(|&v| g.degree(v) as i64 - 2).sum::<i64>() - q as i64;
    Barrier {
        x: x.clone(),
        components,
        boundary,
        odd_flags,
        q,
        deficiency,
    }
}

/// Deficiency only, without materialising the record.
fn deficiency_value(g: &Graph, in_x: &[bool], stack: &mut Vec<usize>, seen: &mut [bool]) -> i64 {
    let n = g.n();
    seen.copy_from_slice(in_x);
    let mut q = 0i64;
    let sum: i64 = (0..n)
        .filter(|&v| in_x[v])
        .map(|v| g.degree(v) as i64 - 2)
        .sum();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut boundary = 0usize;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if in_x[w] {
                    boundary += 1;
                } else if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        q += (boundary % 2) as i64;
    }
    sum - q
}

#[derive(Debug, Clone, Serialize)]
pub struct BarrierSearch {
    pub verdict: crate::search::Verdict<Barrier>,
    /// Subsets examined.
    pub subsets: u64,
}

/// Smallest barrier: subsets are tried by size, then lexicographically,
/// and the first with negative deficiency is returned. `budget` bounds the
/// number of subsets examined.
pub fn find_barrier(g: &Graph, budget: u64) -> BarrierSearch {
    use crate::search::Verdict;
    let n = g.n();
    let mut in_x = vec![false; n];
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    let mut subsets = 0u64;
    for size in 0..n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            subsets += 1;
            if subsets > budget {
                return BarrierSearch {
                    verdict: Verdict::BudgetExceeded,
                    subsets: budget,
                };
            }
            in_x.iter_mut().for_each(|b| *b = false);
            for &v in &idx {
                in_x[v] = true;
            }
            if deficiency_value(g, &in_x, &mut stack, &mut seen) < 0 {
                let b = decompose(g, &VertexSet::new(idx.clone()));
                return BarrierSearch {
                    verdict: Verdict::Found(b),
                    subsets,
                };
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    BarrierSearch {
        verdict: Verdict::Refuted,
        subsets,
    }
}

/// Advances `idx` to the next k-subset of 0..n in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The five structural properties of a minimal barrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Properties {
    /// deficiency < 0
    pub a: bool,
    /// e_G(D_i, v) ≤ 1 for every component and every v ∈ X
    pub b: bool,
    /// X stable
    pub c: bool,
    /// every e_G(D_i, X) odd
    pub d: bool,
    /// Σ_{v∈X, d(v)≠2}(d(v)−3) + ½Σ_i(e_G(D_i,X)−3) < |{v ∈ X : d(v) = 2}|
    pub e: bool,
}

impl Properties {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e
    }
}

/// Both sides of inequality (e), evaluated in `T`.
pub fn property_e_sides<T: Scalar>(g: &Graph, x: &VertexSet) -> Result<(T, T)> {
    let bar = deficiency(g, x)?;
    let mut lhs = T::zero();
    let mut divalent = 0i64;
    for &v in x.iter() {
        let d = g.degree(v) as i64;
        if d == 2 {
            divalent += 1;
        } else {
            lhs = lhs + T::from_int(d - 3);
        }
    }
    let half = T::ratio(1, 2);
    for &b in &bar.boundary {
        lhs = lhs + half * T::from_int(b as i64 - 3);
    }
    Ok((lhs, T::from_int(divalent)))
}

pub fn check_properties(g: &Graph, x: &VertexSet) -> Result<Properties> {
    let bar = deficiency(g, x)?;
    let in_x = x.mask(g.n());
    let b = bar.components.iter().all(|d| {
        let mut hits = vec![0usize; g.n()];
        for &v in d.iter() {
            for &w in g.neighbors(v) {
                if in_x[w] {
                    hits[w] += 1;
                }
            }
        }
        hits.iter().all(|&h| h <= 1)
    });
    let (lhs, rhs) = property_e_sides::<Rational>(g, x)?;
    Ok(Properties {
        a: bar.deficiency < 0,
        b,
        c: g.is_stable(x),
        d: bar.odd_flags.iter().all(|&o| o),
        e: lhs < rhs,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Normalized {
    pub barrier: Barrier,
    /// Vertices dropped from the input, in removal order.
    pub removed: Vec<usize>,
    pub properties: Properties,
}

/// Shrinks a barrier of a connected graph until no single vertex can be
/// dropped without losing negative deficiency, scanning in ascending
/// vertex order and restarting after each removal. The returned record
/// carries a fresh evaluation of all five properties.
pub fn normalize_barrier(g: &Graph, x: &VertexSet) -> Result<Normalized> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "barrier normalisation needs a connected graph".into(),
        ));
    }
    let start = deficiency(g, x)?;
    if !start.is_barrier() {
        return usage(format!(
            "X has deficiency {} ≥ 0, not a barrier",
            start.deficiency
        ));
    }
    let mut cur = x.clone();
    let mut removed = Vec::new();
    'scan: loop {
        for &v in cur.iter() {
            let smaller = cur.without(v);
            if deficiency(g, &smaller)?.is_barrier() {
                cur = smaller;
                removed.push(v);
                continue 'scan;
            }
        }
        break;
    }
    let properties = check_properties(g, &cur)?;
    Ok(Normalized {
        barrier: deficiency(g, &cur)?,
        removed,
        properties,
    })
}
