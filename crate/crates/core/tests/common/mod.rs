//! Brute-force oracles written without the library's matchers or enumerators:
//! plain adjacency matrices, permutations and edge-subset scans.

#![allow(dead_code)]

/// Edge list as an adjacency matrix.
pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(n: usize, edges: &[(usize, usize)]) -> Matrix {
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in edges {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Pairs `(u, v)` with `u < v` in the order `(0,1), (0,2), (1,2), (0,3), …`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 0..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

pub fn from_mask(n: usize, mask: u64) -> Matrix {
    let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
    matrix(n, &edges)
}

pub fn to_mask(m: &Matrix) -> u64 {
    pairs(m.len()).into_iter().enumerate().filter(|(_, (u, v))| m[*u][*v]).fold(0, |acc, (i, _)| acc | 1 << i)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|v| s >> v & 1 == 1).collect())
        .collect()
}

/// Masks of every labeled copy of `h` on its own vertex set.
pub fn labeled_copies(h: &Matrix) -> std::collections::HashSet<u64> {
    let n = h.len();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut m = vec![vec![false; n]; n];
            for u in 0..n {
                for v in 0..n {
                    m[p[u]][p[v]] = h[u][v];
                }
            }
            to_mask(&m)
        })
        .collect()
}

pub fn isomorphic(a: &Matrix, b: &Matrix) -> bool {
    a.len() == b.len() && labeled_copies(a).contains(&to_mask(b))
}

/// `sub[i]` for a `k`-subset: the position in the host mask of the `i`-th pair of
/// the subset, so sub-colorings are read off by bit gathering.
fn gather_plan(n: usize, k: usize) -> Vec<Vec<usize>> {
    let index: std::collections::HashMap<(usize, usize), usize> =
        pairs(n).into_iter().enumerate().map(|(i, e)| (e, i)).collect();
    subsets(n, k)
        .into_iter()
        .map(|s| pairs(k).into_iter().map(|(a, b)| index[&(s[a], s[b])]).collect())
        .collect()
}

fn gather(mask: u64, plan: &[usize]) -> usize {
    plan.iter().enumerate().fold(0, |acc, (i, &p)| acc | ((mask >> p & 1) as usize) << i)
}

/// Decides induced monochromatic containment of any member on `n`-vertex
/// colorings by table lookup on every vertex subset.
pub struct FamilyOracle {
    n: usize,
    /// Per member size: (subset plans, table over sub-colorings).
    parts: Vec<(Vec<Vec<usize>>, Vec<bool>)>,
}

impl FamilyOracle {
    pub fn new(n: usize, members: &[Matrix]) -> Self {
        let mut by_size: std::collections::BTreeMap<usize, Vec<bool>> = Default::default();
        for h in members {
            let k = h.len();
            let e = k * (k - 1) / 2;
            let table = by_size.entry(k).or_insert_with(|| vec![false; 1 << e]);
            let full = (1u64 << e) - 1;
            for m in labeled_copies(h) {
                table[m as usize] = true;
                table[(full & !m) as usize] = true;
            }
        }
        let parts = by_size.into_iter().filter(|(k, _)| *k <= n).map(|(k, t)| (gather_plan(n, k), t)).collect();
        FamilyOracle { n, parts }
    }

    /// True if the coloring with red edge set `mask` contains a member.
    pub fn contains(&self, mask: u64) -> bool {
        self.parts.iter().any(|(plans, table)| plans.iter().any(|p| table[gather(mask, p)]))
    }
}

/// Decides whether some copy of `g` in `K_n` has a balanced red count.
pub struct BalanceOracle {
    plans: Vec<Vec<usize>>,
    table: Vec<bool>,
}

impl BalanceOracle {
    pub fn new(n: usize, g: &Matrix) -> Self {
        let k = g.len();
        let e_k = k * (k - 1) / 2;
        let g_edges: Vec<(usize, usize)> = pairs(k).into_iter().filter(|&(u, v)| g[u][v]).collect();
        let e = g_edges.len();
        let perms = permutations(k);
        let table = (0..1u64 << e_k)
            .map(|sub| {
                let col = from_mask(k, sub);
                perms.iter().any(|p| {
                    let red = g_edges.iter().filter(|&&(u, v)| col[p[u]][p[v]]).count();
                    red == e / 2 || red == e.div_ceil(2)
                })
            })
            .collect();
        BalanceOracle { plans: gather_plan(n, k), table }
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.plans.iter().any(|p| self.table[gather(mask, p)])
    }
}

/// Largest smallest class over all red edge sets on `n` vertices for which
/// `bad` is false, with the first coloring attaining it.
pub fn max_min_class(n: usize, bad: impl Fn(u64) -> bool) -> Option<(usize, u64)> {
    let e = n * (n - 1) / 2;
    let mut best: Option<(usize, u64)> = None;
    for mask in 0..1u64 << e {
        let r = mask.count_ones() as usize;
        let value = r.min(e - r);
        if best.is_some_and(|(b, _)| value <= b) {
            continue;
        }
        if !bad(mask) {
            best = Some((value, mask));
        }
    }
    best
}

pub fn complete(n: usize) -> Matrix {
    let mut m = vec![vec![true; n]; n];
    for (v, row) in m.iter_mut().enumerate() {
        row[v] = false;
    }
    m
}

pub fn star(t: usize) -> Matrix {
    matrix(t + 1, &(1..=t).map(|v| (0, v)).collect::<Vec<_>>())
}

pub fn matching(r: usize) -> Matrix {
    matrix(2 * r, &(0..r).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>())
}

pub fn complete_bipartite(s: usize, t: usize) -> Matrix {
    let mut edges = Vec::new();
    for a in 0..s {
        for b in 0..t {
            edges.push((a, s + b));
        }
    }
    matrix(s + t, &edges)
}

/// An `s`-clique joined to an independent `t`-set.
pub fn complete_split(s: usize, t: usize) -> Matrix {
    let mut m = complete_bipartite(s, t);
    for a in 0..s {
        for b in 0..a {
            m[a][b] = true;
            m[b][a] = true;
        }
    }
    m
}

pub fn path(n: usize) -> Matrix {
    matrix(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Matrix {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    matrix(n, &edges)
}

/// Every graph on `n` vertices containing no `K_{s,t}` subgraph; returns the
/// largest edge count.
pub fn turan_kst(n: usize, s: usize, t: usize) -> usize {
    let e = n * (n - 1) / 2;
    let mut best = 0;
    for mask in 0..1u64 << e {
        let r = mask.count_ones() as usize;
        if r <= best {
            continue;
        }
        let g = from_mask(n, mask);
        let mut found = false;
        'outer: for a in subsets(n, s) {
            let common: Vec<usize> = (0..n).filter(|&v| a.iter().all(|&x| g[x][v])).collect();
            if common.len() >= t {
                found = true;
                break 'outer;
            }
        }
        if !found {
            best = r;
        }
    }
    best
}

/// Largest number of ones in an `m × n` 0/1 matrix with no `s × t` all-ones
/// submatrix, by scanning every matrix.
pub fn zarankiewicz(m: usize, n: usize, s: usize, t: usize) -> usize {
    let cells = m * n;
    let mut best = 0;
    for mask in 0u64..1 << cells {
        let ones = mask.count_ones() as usize;
        if ones <= best {
            continue;
        }
        let row = |i: usize| (mask >> (i * n)) & ((1 << n) - 1);
        let bad = subsets(m, s).into_iter().any(|rs| {
            let common = rs.iter().fold((1u64 << n) - 1, |acc, &i| acc & row(i));
            common.count_ones() as usize >= t
        });
        if !bad {
            best = ones;
        }
    }
    best
}

pub fn matching_number(g: &Matrix) -> usize {
    let edges: Vec<(usize, usize)> = pairs(g.len()).into_iter().filter(|&(u, v)| g[u][v]).collect();
    let mut best = 0;
    for s in 0u32..1 << edges.len() {
        let chosen: Vec<_> = (0..edges.len()).filter(|i| s >> i & 1 == 1).map(|i| edges[i]).collect();
        let mut used = vec![false; g.len()];
        if chosen.iter().all(|&(u, v)| {
            let free = !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            free
        }) {
            best = best.max(chosen.len());
        }
    }
    best
}
