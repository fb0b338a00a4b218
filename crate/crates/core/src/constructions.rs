//! Extremal colorings and graphs used for lower bounds, and the
//! Kővári–Sós–Turán bound evaluators.

use serde::Serialize;

use crate::coloring::{KColoring, TwoColoring};
use crate::error::{invalid, Error, Result};
use crate::graph::SimpleGraph;

/// Red graph is a maximum matching `⌊n/2⌋K_2` on consecutive pairs.
pub fn matching_coloring(n: usize) -> Result<TwoColoring> {
    if n < 2 {
        return invalid(format!("matching coloring needs n >= 2, got {n}"));
    }
    let edges: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    TwoColoring::from_red(n, SimpleGraph::from_edges(n, &edges)?)
}

/// Red graph is the star `K_{1,n−1}` centered at 0.
pub fn star_coloring(n: usize) -> Result<TwoColoring> {
    if n < 2 {
        return invalid(format!("star coloring needs n >= 2, got {n}"));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    TwoColoring::from_red(n, SimpleGraph::from_edges(n, &edges)?)
}

/// Blue graph is `⌊n/(t−1)⌋K_{t−1}` on the first vertices; everything else red.
pub fn clique_blowup_coloring(n: usize, t: usize) -> Result<TwoColoring> {
    if t < 3 || n < t - 1 {
        return invalid(format!("clique blow-up needs t >= 3 and n >= t - 1, got n = {n}, t = {t}"));
    }
    let size = t - 1;
    let mut blue = SimpleGraph::empty(n);
    for block in 0..n / size {
        let base = block * size;
        for v in base..base + size {
            for u in base..v {
                blue.add_edge(u, v);
            }
        }
    }
    Ok(TwoColoring::from_red(n, blue)?.swap_colors())
}

/// Blue edge count of [`clique_blowup_coloring`].
pub fn clique_blowup_blue_edges(n: usize, t: usize) -> usize {
    (n / (t - 1)) * (t - 1) * (t - 2) / 2
}

/// `V_1, …, V_{w−1}` of size `t − 1` followed by `W`, with `w = min(r, s)`. Red:
/// inside `W` and between distinct `V_i`; blue: inside each `V_i` and from each
/// `V_i` to `W`.
pub fn layered_coloring(n: usize, r: usize, s: usize, t: usize) -> Result<TwoColoring> {
    if s < 2 || t < s || r < 2 {
        return invalid(format!("layered coloring needs t >= s >= 2 and r >= 2, got r = {r}, s = {s}, t = {t}"));
    }
    let w = r.min(s);
    let layered = (w - 1) * (t - 1);
    if n <= layered {
        return invalid(format!("layered coloring needs n > {layered}, got {n}"));
    }
    let part = |v: usize| if v < layered { Some(v / (t - 1)) } else { None };
    let mut red = SimpleGraph::empty(n);
    for v in 0..n {
        for u in 0..v {
            let is_red = match (part(u), part(v)) {
                (None, None) => true,
                (Some(a), Some(b)) => a != b,
                _ => false,
            };
            if is_red {
                red.add_edge(u, v);
            }
        }
    }
    TwoColoring::from_red(n, red)
}

/// Blue edge count of [`layered_coloring`].
pub fn layered_blue_edges(n: usize, r: usize, s: usize, t: usize) -> usize {
    let w = r.min(s);
    let layered = (w - 1) * (t - 1);
    layered * (n - layered) + (w - 1) * (t - 1) * (t - 2) / 2
}

pub fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Normalized homogeneous coordinates of PG(2, q): first nonzero entry is 1.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::with_capacity(q * q + q + 1);
    for b in 0..q {
        for c in 0..q {
            pts.push([1, b, c]);
        }
    }
    for c in 0..q {
        pts.push([0, 1, c]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// Point-line incidence graph of PG(2, q) for prime `q`: points are
/// `0..q²+q+1`, lines follow.
pub fn incidence_bipartite(q: usize) -> Result<SimpleGraph> {
    if !is_prime(q) {
        return invalid(format!("q = {q} is not prime"));
    }
    let pts = projective_points(q);
    let count = pts.len();
    if 2 * count > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices { n: 2 * count, max: crate::graph::MAX_VERTICES });
    }
    let mut g = SimpleGraph::empty(2 * count);
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0 {
                g.add_edge(i, count + j);
            }
        }
    }
    Ok(g)
}

/// Blue graph is the PG(2, q) incidence graph padded to `n` vertices.
pub fn bipartite_free_coloring(n: usize, q: usize) -> Result<TwoColoring> {
    bipartite_free_coloring_from(n, &incidence_bipartite(q)?)
}

/// Blue graph is any supplied bipartite graph padded to `n` vertices.
pub fn bipartite_free_coloring_from(n: usize, blue: &SimpleGraph) -> Result<TwoColoring> {
    if n < blue.n() {
        return invalid(format!("n = {n} is smaller than the {} vertices of the blue graph", blue.n()));
    }
    if blue.bipartition().is_none() {
        return invalid("blue graph must be bipartite");
    }
    Ok(TwoColoring::from_red(n, blue.padded(n))?.swap_colors())
}

/// Sizes of `parts` near-equal consecutive blocks of `0..n`, larger blocks first.
pub fn balanced_parts(n: usize, parts: usize) -> Vec<usize> {
    (0..parts).map(|i| n / parts + usize::from(i < n % parts)).collect()
}

/// Parts `P_1, …, P_{k−1}`; edges inside `P_i` get color `i`, all others color `k`.
pub fn multicolor_partition_coloring(n: usize, k: usize) -> Result<KColoring> {
    if k < 3 || n < k - 1 {
        return invalid(format!("partition coloring needs k >= 3 and n >= k - 1, got n = {n}, k = {k}"));
    }
    let mut part_of = Vec::with_capacity(n);
    for (i, size) in balanced_parts(n, k - 1).into_iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i + 1, size));
    }
    KColoring::from_fn(n, k, |u, v| if part_of[u] == part_of[v] { part_of[u] } else { k })
}

/// Kővári–Sós–Turán bounds; see [`kst_bounds`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub m: usize,
    pub n: usize,
    pub s: usize,
    pub t: usize,
    /// `(s−1)^{1/t}(n−t+1)m^{1−1/t} + (t−1)m`, bounding `z(m, n; s, t)`.
    pub zarankiewicz: f64,
    /// `½((t−1)^{1/s}n^{2−1/s} + (s−1)n)`, bounding `ex(n, K_{s,t})`.
    pub extremal: f64,
}

/// Floating-point slack used when a bound is compared with an integer.
pub const BOUND_TOLERANCE: f64 = 1e-9;

pub fn kst_bounds(m: usize, n: usize, s: usize, t: usize) -> Result<BoundReport> {
    if m == 0 || n == 0 || s == 0 || t == 0 {
        return invalid("all parameters must be positive");
    }
    if s > t {
        return invalid(format!("bounds need s <= t, got s = {s}, t = {t}"));
    }
    let (mf, nf, sf, tf) = (m as f64, n as f64, s as f64, t as f64);
    let zarankiewicz = (sf - 1.0).powf(1.0 / tf) * (nf - tf + 1.0) * mf.powf(1.0 - 1.0 / tf) + (tf - 1.0) * mf;
    let extremal = 0.5 * ((tf - 1.0).powf(1.0 / sf) * nf.powf(2.0 - 1.0 / sf) + (sf - 1.0) * nf);
    Ok(BoundReport { m, n, s, t, zarankiewicz, extremal })
}
