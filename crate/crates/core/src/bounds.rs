//! Edge-counting arithmetic behind the maximum degree bound.
//!
//! For a vertex `v` of degree `k` in a claw-free graph, the neighborhood
//! `N(v)` induces a graph whose complement is triangle-free. When the
//! complement is also non-bipartite, the Erdős bound caps its size, which
//! forces many edges inside `N[v]`. `G[N[v]]` has a dominating vertex, so it
//! has at most `4(k + 1) - 9` edges if it is 1-planar. Comparing the two
//! counts rules out every `k >= 11`.

use thiserror::Error;

use crate::drawing::OnePlaneDrawing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("n must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("brute force runs for 3 <= n <= 7, got {0}")]
    OutOfRange(usize),
    #[error("graph has no dominating vertex (max degree {max_degree}, n = {n})")]
    NoDominatingVertex { n: usize, max_degree: usize },
}

/// `floor((n - 1)^2 / 4) + 1`, the largest size of a non-bipartite
/// triangle-free graph on `n` vertices.
pub fn erdos_bound(n: usize) -> Result<usize, BoundsError> {
    if n < 1 {
        return Err(BoundsError::TooSmall { n, min: 1 });
    }
    Ok((n - 1) * (n - 1) / 4 + 1)
}

/// `4n - 9`, the edge bound for 1-planar graphs with a dominating vertex.
pub fn dominating_oneplanar_edge_bound(n: usize) -> Result<usize, BoundsError> {
    if n < 3 {
        return Err(BoundsError::TooSmall { n, min: 3 });
    }
    Ok(4 * n - 9)
}

/// `k + C(k, 2) - erdos_bound(k)`: edges forced in `G[N[v]]` when `d(v) = k`.
///
/// Signed because the expression is an arithmetic quantity first; it is
/// non-negative for every `k >= 1`.
pub fn neighborhood_edge_lower_bound(k: usize) -> i64 {
    let k = k.max(1);
    let erdos = erdos_bound(k).expect("k >= 1") as i64;
    let k = k as i64;
    k + k * (k - 1) / 2 - erdos
}

/// Exact maximum size of a non-bipartite triangle-free graph on `n`
/// labelled vertices, or `None` when no such graph exists.
///
/// Exhaustive over edge sets: edges are added in a fixed order and a branch
/// is dropped as soon as it closes a triangle or can no longer beat the best
/// size found so far.
pub fn brute_force_max_edges_nonbipartite_trianglefree(n: usize) -> Result<Option<usize>, BoundsError> {
    if !(3..=7).contains(&n) {
        return Err(BoundsError::OutOfRange(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut adj = vec![0u32; n];
    let mut best = None;
    extend(&pairs, 0, 0, &mut adj, &mut best);
    Ok(best)
}

fn extend(pairs: &[(usize, usize)], next: usize, size: usize, adj: &mut [u32], best: &mut Option<usize>) {
    if best.is_some_and(|b| size + (pairs.len() - next) <= b) {
        return;
    }
    if next == pairs.len() {
        if !mask_bipartite(adj) {
            *best = Some(size);
        }
        return;
    }
    let (u, v) = pairs[next];
    if adj[u] & adj[v] == 0 {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        extend(pairs, next + 1, size + 1, adj, best);
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
    extend(pairs, next + 1, size, adj, best);
}

fn mask_bipartite(adj: &[u32]) -> bool {
    let n = adj.len();
    let mut color = vec![u8::MAX; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if adj[x] >> y & 1 == 0 {
                    continue;
                }
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    stack.push(y);
                } else if color[y] == color[x] {
                    return false;
                }
            }
        }
    }
    true
}

/// One row of the degree-bound table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundLedger {
    pub k: usize,
    pub erdos: usize,
    pub lower: i64,
    pub upper: i64,
    pub feasible: bool,
}

impl BoundLedger {
    /// Panics for `k = 0`.
    pub fn for_degree(k: usize) -> Self {
        let lower = neighborhood_edge_lower_bound(k);
        // 4n - 9 needs n >= 3; a closed neighborhood on two vertices has one edge.
        let upper = dominating_oneplanar_edge_bound(k + 1).map_or(1, |u| u as i64);
        BoundLedger {
            k,
            erdos: erdos_bound(k).expect("k >= 1"),
            lower,
            upper,
            feasible: lower <= upper,
        }
    }
}

/// Degrees covered by [`bound_ledger`].
pub const LEDGER_RANGE: std::ops::RangeInclusive<usize> = 1..=15;

pub fn bound_ledger() -> Vec<BoundLedger> {
    LEDGER_RANGE.map(BoundLedger::for_degree).collect()
}

/// Largest `k` in the ledger whose forced neighborhood size still fits
/// under the 1-planar edge bound.
pub fn max_degree_bound_solve() -> usize {
    let k = bound_ledger()
        .iter()
        .filter(|row| row.feasible)
        .map(|row| row.k)
        .max()
        .expect("k = 1 is feasible");
    debug_assert_eq!(k, floor_six_plus_sqrt21());
    k
}

/// `floor(6 + sqrt(21))`, the root of the quadratic behind the table,
/// computed with an integer square root at six decimal digits.
pub fn floor_six_plus_sqrt21() -> usize {
    const SCALE: u64 = 1_000_000;
    let root = (21 * SCALE * SCALE).isqrt();
    (6 + root / SCALE) as usize
}

/// Whether a drawing whose base has a dominating vertex meets `e <= 4n - 9`.
pub fn check_lemma2_on_fixture(drawing: &OnePlaneDrawing) -> Result<bool, BoundsError> {
    let g = drawing.base();
    let n = g.n();
    if n == 0 || g.max_degree() != n - 1 {
        return Err(BoundsError::NoDominatingVertex {
            n,
            max_degree: g.max_degree(),
        });
    }
    let bound = dominating_oneplanar_edge_bound(n)?;
    Ok(g.e() <= bound)
}
