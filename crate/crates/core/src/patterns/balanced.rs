//! Balanced copies: a copy of `G` in `K_n` with `⌊e/2⌋` or `⌈e/2⌉` red edges.
//!
//! For `n ≤ 11` every copy of `G` is listed once as a colex edge mask, so a
//! coloring is tested with one popcount per copy. The lists are cached per
//! `(n, G)`. Larger hosts fall back to backtracking with red-count bounds.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::bits::{bit, edge_index, Row};
use crate::coloring::TwoColoring;
use crate::graph::SimpleGraph;
use crate::graph6;

/// Largest host for the copy-mask table.
pub const COPY_TABLE_MAX: usize = 11;
/// Largest number of injections enumerated when building a table.
const INJECTION_LIMIT: u64 = 4_000_000;

/// All copies of a pattern in `K_n`, each with one vertex map realizing it.
#[derive(Debug)]
pub struct CopyTable {
    pub n: usize,
    pub edges: usize,
    /// `(edge mask, image of each pattern vertex)`, in discovery order.
    pub copies: Vec<(u64, Vec<u8>)>,
}

impl CopyTable {
    fn build(n: usize, g: &SimpleGraph) -> CopyTable {
        let core = g.strip_isolated();
        let k = core.n();
        let pattern_edges = core.edges();
        let mut seen = HashSet::new();
        let mut copies = Vec::new();
        let mut image = vec![0u8; k];
        fn place(
            i: usize,
            used: Row,
            n: usize,
            image: &mut Vec<u8>,
            edges: &[(usize, usize)],
            seen: &mut HashSet<u64>,
            copies: &mut Vec<(u64, Vec<u8>)>,
        ) {
            if i == image.len() {
                let mask = edges.iter().fold(0u64, |m, &(a, b)| {
                    m | 1 << edge_index(image[a] as usize, image[b] as usize)
                });
                if seen.insert(mask) {
                    copies.push((mask, image.clone()));
                }
                return;
            }
            for x in 0..n {
                if used & bit(x) == 0 {
                    image[i] = x as u8;
                    place(i + 1, used | bit(x), n, image, edges, seen, copies);
                }
            }
        }
        place(0, 0, n, &mut image, &pattern_edges, &mut seen, &mut copies);
        CopyTable { n, edges: pattern_edges.len(), copies }
    }

    /// First copy whose red count is balanced, as an index into `copies`.
    pub fn first_balanced(&self, red_mask: u64) -> Option<usize> {
        let (lo, hi) = balance_range(self.edges);
        self.copies.iter().position(|(m, _)| {
            let r = (m & red_mask).count_ones() as usize;
            r >= lo && r <= hi
        })
    }

    pub fn has_balanced(&self, red_mask: u64) -> bool {
        let (lo, hi) = (self.edges / 2, self.edges.div_ceil(2));
        self.copies.iter().any(|(m, _)| {
            let r = (m & red_mask).count_ones() as usize;
            r >= lo && r <= hi
        })
    }
}

/// `(⌊e/2⌋, ⌈e/2⌉)`.
pub fn balance_range(e: usize) -> (usize, usize) {
    (e / 2, e.div_ceil(2))
}

type TableCache = Mutex<HashMap<(usize, String), Arc<OnceLock<Arc<CopyTable>>>>>;

/// Cached copy table for `(n, G)`, or `None` when the table would be too large.
pub fn copy_table(n: usize, g: &SimpleGraph) -> Option<Arc<CopyTable>> {
    let k = g.strip_isolated().n();
    if n > COPY_TABLE_MAX || g.n() > n {
        return None;
    }
    let injections: u64 = (0..k as u64).map(|i| n as u64 - i).product();
    if injections > INJECTION_LIMIT {
        return None;
    }
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let slot = {
        let mut map = cache.lock().expect("copy cache poisoned");
        Arc::clone(map.entry((n, graph6::encode(g))).or_default())
    };
    Some(Arc::clone(slot.get_or_init(|| Arc::new(CopyTable::build(n, g)))))
}

/// A balanced copy of `g` in `c`, as the image of each vertex of `g`.
pub fn find_balanced_copy(c: &TwoColoring, g: &SimpleGraph) -> Option<Vec<usize>> {
    if g.n() > c.n() {
        return None;
    }
    if let (Some(table), Some(mask)) = (copy_table(c.n(), g), c.red_mask()) {
        let i = table.first_balanced(mask)?;
        return Some(complete_image(g, &table.copies[i].1, c.n()));
    }
    backtrack_balanced(c, g)
}

/// Extends an image of the non-isolated vertices to all of `g`, placing isolated
/// vertices on the smallest unused host vertices.
fn complete_image(g: &SimpleGraph, core_image: &[u8], n: usize) -> Vec<usize> {
    let mut used: Row = 0;
    for &x in core_image {
        used |= bit(x as usize);
    }
    let mut image = vec![usize::MAX; g.n()];
    let mut it = core_image.iter();
    for v in 0..g.n() {
        if g.degree(v) > 0 {
            image[v] = *it.next().expect("core image covers non-isolated vertices") as usize;
        }
    }
    let mut free = (0..n).filter(|&x| used & bit(x) == 0);
    for slot in image.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = free.next().expect("host has room for isolated vertices");
    }
    image
}

fn backtrack_balanced(c: &TwoColoring, g: &SimpleGraph) -> Option<Vec<usize>> {
    let core = g.strip_isolated();
    let k = core.n();
    let (lo, hi) = balance_range(core.edge_count());
    // Edges to earlier vertices, per pattern vertex.
    let back: Vec<Vec<usize>> = (0..k).map(|v| (0..v).filter(|&u| core.has_edge(u, v)).collect()).collect();
    let mut remaining_after = vec![0usize; k + 1];
    for v in (0..k).rev() {
        remaining_after[v] = remaining_after[v + 1] + back[v].len();
    }
    let mut image = vec![0usize; k];
    fn go(
        v: usize,
        used: Row,
        red: usize,
        c: &TwoColoring,
        back: &[Vec<usize>],
        rem: &[usize],
        lo: usize,
        hi: usize,
        image: &mut [usize],
    ) -> bool {
        if red > hi || red + rem[v] < lo {
            return false;
        }
        if v == image.len() {
            return true;
        }
        for x in 0..c.n() {
            if used & bit(x) != 0 {
                continue;
            }
            let r = back[v].iter().filter(|&&u| c.is_red(image[u], x)).count();
            image[v] = x;
            if go(v + 1, used | bit(x), red + r, c, back, rem, lo, hi, image) {
                return true;
            }
        }
        false
    }
    if !go(0, 0, 0, c, &back, &remaining_after, lo, hi, &mut image) {
        return None;
    }
    let core_image: Vec<u8> = image.iter().map(|&x| x as u8).collect();
    Some(complete_image(g, &core_image, c.n()))
}

/// Red-edge count of the copy of `g` given by `image`.
pub fn red_count(c: &TwoColoring, g: &SimpleGraph, image: &[usize]) -> usize {
    g.edges().iter().filter(|&&(a, b)| c.is_red(image[a], image[b])).count()
}
