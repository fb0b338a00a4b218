//! Slow brute-force references: plain subset and injection scans with no
//! pruning, for cross-checking the fast detectors on small inputs.

use crate::coloring::TwoColoring;
use crate::graph::SimpleGraph;

/// Calls `f` on every injection `0..k → 0..n` until it returns `false`.
pub fn for_each_injection(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    fn go(n: usize, k: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                let go_on = go(n, k, used, cur, f);
                cur.pop();
                used[v] = false;
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    if k <= n {
        go(n, k, &mut vec![false; n], &mut Vec::with_capacity(k), &mut f);
    }
}

fn any_injection(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut hit = false;
    for_each_injection(n, k, |img| {
        hit = f(img);
        !hit
    });
    hit
}

pub fn has_induced(host: &SimpleGraph, h: &SimpleGraph) -> bool {
    let k = h.n();
    any_injection(host.n(), k, |img| {
        (0..k).all(|a| (0..a).all(|b| h.has_edge(a, b) == host.has_edge(img[a], img[b])))
    })
}

pub fn has_subgraph(host: &SimpleGraph, h: &SimpleGraph) -> bool {
    any_injection(host.n(), h.n(), |img| h.edges().iter().all(|&(a, b)| host.has_edge(img[a], img[b])))
}

/// Edges of `h` map to edges and no host edge joins images of different
/// components. With `strict`, non-edges inside a component map to non-edges too.
pub fn has_weakly_induced(host: &SimpleGraph, h: &SimpleGraph, strict: bool) -> bool {
    let k = h.n();
    let comp: Vec<usize> = {
        let comps = h.components();
        (0..k).map(|v| comps.iter().position(|c| c >> v & 1 == 1).expect("vertex lies in a component")).collect()
    };
    any_injection(host.n(), k, |img| {
        (0..k).all(|a| {
            (0..a).all(|b| {
                let he = host.has_edge(img[a], img[b]);
                if h.has_edge(a, b) {
                    he
                } else if comp[a] != comp[b] || strict {
                    !he
                } else {
                    true
                }
            })
        })
    })
}

/// A copy of `g` in `K_n` whose red edge count is `⌊e/2⌋` or `⌈e/2⌉`.
pub fn has_balanced_copy(c: &TwoColoring, g: &SimpleGraph) -> bool {
    let e = g.edge_count();
    let edges = g.edges();
    any_injection(c.n(), g.n(), |img| {
        let red = edges.iter().filter(|&&(a, b)| c.is_red(img[a], img[b])).count();
        red == e / 2 || red == e.div_ceil(2)
    })
}

pub fn matching_number(g: &SimpleGraph) -> usize {
    let edges = g.edges();
    fn go(edges: &[(usize, usize)], used: u128) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let skip = go(rest, used);
                if used >> u & 1 == 0 && used >> v & 1 == 0 {
                    skip.max(1 + go(rest, used | 1 << u | 1 << v))
                } else {
                    skip
                }
            }
        }
    }
    go(&edges, 0)
}

pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && has_induced(a, b)
}
