//! Classical graph parameters: matching number, independence number, greedy strong
//! edge coloring, cliques.

use std::collections::VecDeque;

use crate::bits::{bit, bits, Row};
use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

/// A maximum matching, found with Edmonds' blossom algorithm.
pub fn maximum_matching(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] != NONE {
            continue;
        }
        if let Some(u) = bits(g.neighbors(v)).find(|&u| mate[u] == NONE) {
            mate[u] = v;
            mate[v] = u;
        }
    }
    let mut blossom = Blossom::new(n);
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = blossom.find_augmenting_path(g, root, &mate) {
            while v != NONE {
                let pv = blossom.parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
    (0..n)
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect()
}

/// Matching number `β(G)`.
pub fn matching_number(g: &SimpleGraph) -> usize {
    maximum_matching(g).len()
}

struct Blossom {
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom {
    fn new(n: usize) -> Self {
        Blossom {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize, mate: &[usize]) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, mate: &[usize]) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// Returns the free endpoint of an augmenting path from `root`, with the path
    /// recorded in `parent`.
    fn find_augmenting_path(&mut self, g: &SimpleGraph, root: usize, mate: &[usize]) -> Option<usize> {
        let n = g.n();
        self.parent.fill(NONE);
        self.in_tree.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in bits(g.neighbors(v)) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lowest_common_base(v, to, mate);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to, mate);
                    self.mark_path(to, cur, v, mate);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let m = mate[to];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

/// Largest clique contained in `candidates`, as a vertex mask. Ties go to the
/// first clique found when branching on the lowest-numbered vertex.
pub fn max_clique_within(rows: &[Row], candidates: Row) -> Row {
    let mut best = 0;
    clique_branch(rows, 0, candidates, &mut best);
    best
}

fn clique_branch(rows: &[Row], current: Row, mut cand: Row, best: &mut Row) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    while cand != 0 {
        if current.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= !bit(v);
        clique_branch(rows, current | bit(v), cand & rows[v], best);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

/// Whether `rows` has a clique of size `k` inside `candidates`.
pub fn has_clique(rows: &[Row], candidates: Row, k: usize) -> bool {
    fn go(rows: &[Row], mut cand: Row, need: u32) -> bool {
        if need == 0 {
            return true;
        }
        while cand.count_ones() >= need {
            let v = cand.trailing_zeros() as usize;
            cand &= !bit(v);
            if go(rows, cand & rows[v], need - 1) {
                return true;
            }
        }
        false
    }
    go(rows, candidates, k as u32)
}

/// Independence number `α(G)`, by branch and bound on the complement.
pub fn independence_number(g: &SimpleGraph) -> usize {
    maximum_independent_set(g).len()
}

pub fn maximum_independent_set(g: &SimpleGraph) -> Vec<usize> {
    let co = g.complement();
    bits(max_clique_within(co.rows(), g.all_vertices())).collect()
}

/// Result of [`greedy_strong_edge_coloring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongEdgeColoring {
    pub class_count: usize,
    /// `(edge, class)` in the order of [`SimpleGraph::edges`].
    pub classes: Vec<((usize, usize), usize)>,
}

impl StrongEdgeColoring {
    pub fn class_edges(&self, class: usize) -> Vec<(usize, usize)> {
        self.classes
            .iter()
            .filter(|(_, c)| *c == class)
            .map(|(e, _)| *e)
            .collect()
    }

    pub fn largest_class_size(&self) -> usize {
        (0..self.class_count)
            .map(|c| self.classes.iter().filter(|(_, k)| *k == c).count())
            .max()
            .unwrap_or(0)
    }
}

/// Greedy strong edge coloring: each edge gets the smallest class containing no
/// edge at distance at most one from it, so every class is an induced matching and
/// at most `2Δ² − 2Δ + 1` classes are used.
pub fn greedy_strong_edge_coloring(g: &SimpleGraph) -> StrongEdgeColoring {
    let edges = g.edges();
    // Vertices covered by each class so far.
    let mut covered: Vec<Row> = Vec::new();
    let mut classes = Vec::with_capacity(edges.len());
    for &(u, v) in &edges {
        let reach = bit(u) | bit(v) | g.neighbors(u) | g.neighbors(v);
        let class = match covered.iter().position(|&c| c & reach == 0) {
            Some(c) => c,
            None => {
                covered.push(0);
                covered.len() - 1
            }
        };
        covered[class] |= bit(u) | bit(v);
        classes.push(((u, v), class));
    }
    StrongEdgeColoring { class_count: covered.len(), classes }
}

/// `2Δ² − 2Δ + 1`.
pub fn strong_edge_greedy_bound(max_degree: usize) -> usize {
    if max_degree == 0 {
        return 1;
    }
    2 * max_degree * max_degree - 2 * max_degree + 1
}

/// Whether `edges` form an induced matching of `g`.
pub fn is_induced_matching(g: &SimpleGraph, edges: &[(usize, usize)]) -> bool {
    for (i, &(a, b)) in edges.iter().enumerate() {
        if !g.has_edge(a, b) {
            return false;
        }
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                return false;
            }
            if g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d) {
                return false;
            }
        }
    }
    true
}

pub fn is_matching(g: &SimpleGraph, edges: &[(usize, usize)]) -> bool {
    let mut used: Row = 0;
    for &(a, b) in edges {
        if !g.has_edge(a, b) || used & (bit(a) | bit(b)) != 0 {
            return false;
        }
        used |= bit(a) | bit(b);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(k: NamedGraph) -> SimpleGraph {
        k.build().unwrap()
    }

    #[test]
    fn matching_examples() {
        assert_eq!(matching_number(&SimpleGraph::complete(4)), 2);
        assert_eq!(matching_number(&named(NamedGraph::Path(4))), 2);
        assert_eq!(matching_number(&named(NamedGraph::CompleteSplit(2, 2))), 2);
        assert_eq!(matching_number(&named(NamedGraph::Cycle(5))), 2);
        assert_eq!(matching_number(&SimpleGraph::empty(3)), 0);
    }

    #[test]
    fn blossom_is_needed() {
        // Triangle 0-1-2 with pendant paths; greedy start leaves an odd cycle to shrink.
        let g = SimpleGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (5, 6), (6, 7)],
        )
        .unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 4);
        assert!(is_matching(&g, &m));
        let petersen = crate::graph6::decode("IheA@GUAo").unwrap();
        assert_eq!(matching_number(&petersen), 5);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&SimpleGraph::empty(5)), 5);
        assert_eq!(independence_number(&SimpleGraph::complete(5)), 1);
        assert_eq!(independence_number(&named(NamedGraph::Cycle(5))), 2);
        assert_eq!(independence_number(&SimpleGraph::empty(0)), 0);
    }

    #[test]
    fn strong_edge_coloring_examples() {
        let m = greedy_strong_edge_coloring(&named(NamedGraph::Matching(3)));
        assert_eq!(m.class_count, 1);
        let star = greedy_strong_edge_coloring(&named(NamedGraph::Star(3)));
        assert_eq!(star.class_count, 3);
        let p4 = named(NamedGraph::Path(4));
        let c = greedy_strong_edge_coloring(&p4);
        assert_eq!(c.class_count, 3);
        assert!(c.class_count <= strong_edge_greedy_bound(p4.max_degree()));
        assert_eq!(strong_edge_greedy_bound(2), 5);
        for class in 0..c.class_count {
            assert!(is_induced_matching(&p4, &c.class_edges(class)));
        }
    }

    #[test]
    fn cliques() {
        let g = named(NamedGraph::CompleteSplit(3, 2));
        assert_eq!(max_clique_within(g.rows(), g.all_vertices()).count_ones(), 4);
        assert!(has_clique(g.rows(), g.all_vertices(), 4));
        assert!(!has_clique(g.rows(), g.all_vertices(), 5));
        assert!(has_clique(g.rows(), 0, 0));
    }
}
