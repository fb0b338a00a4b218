//! Dense simple graphs on `{0..n-1}` with one bit row per vertex.

use std::fmt;
use std::str::FromStr;

use crate::bits::{bit, bits, choose2, edge_at, edge_index, low_bits, Row};
use crate::error::{invalid, Error, Result};

/// Largest vertex count a [`SimpleGraph`] can hold.
pub const MAX_VERTICES: usize = 128;

/// Labeled undirected graph without loops or multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Row>,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_VERTICES`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        SimpleGraph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from symmetric adjacency rows.
    pub(crate) fn from_rows(rows: Vec<Row>) -> Self {
        debug_assert!(rows.len() <= MAX_VERTICES);
        let g = SimpleGraph { n: rows.len(), adj: rows };
        debug_assert!(g.is_well_formed());
        g
    }

    /// Decodes a colex edge mask (bit `v(v-1)/2 + u` is the edge `uv`, `u < v`).
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        debug_assert!(choose2(n) <= 64);
        let mut g = SimpleGraph::empty(n);
        let mut m = mask;
        while m != 0 {
            let (u, v) = edge_at(m.trailing_zeros() as usize);
            g.add_edge(u, v);
            m &= m - 1;
        }
        g
    }

    /// Colex edge mask; only available while all `n(n-1)/2` edges fit in 64 bits.
    pub fn edge_mask(&self) -> Option<u64> {
        if choose2(self.n) > 64 {
            return None;
        }
        let mut mask = 0u64;
        for (u, v) in self.edges() {
            mask |= 1u64 << edge_index(u, v);
        }
        Some(mask)
    }

    pub fn complete(n: usize) -> Self {
        let all = low_bits(n);
        let adj = (0..n).map(|v| all & !bit(v)).collect();
        SimpleGraph::from_rows(adj)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Row] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Row {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    pub fn all_vertices(&self) -> Row {
        low_bits(self.n)
    }

    /// `uv` is an edge of the result iff it is not an edge of `self`.
    pub fn complement(&self) -> Self {
        let all = self.all_vertices();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Juxtaposes the parts, shifting labels so part `i` follows part `i-1`.
    pub fn disjoint_union(parts: &[SimpleGraph]) -> Result<Self> {
        let n: usize = parts.iter().map(|p| p.n).sum();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = Vec::with_capacity(n);
        let mut offset = 0;
        for p in parts {
            adj.extend(p.adj.iter().map(|r| r << offset));
            offset += p.n;
        }
        Ok(SimpleGraph { n, adj })
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let k = vertices.len();
        let mut g = SimpleGraph::empty(k);
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0; self.n];
        for v in 0..self.n {
            let mut row = 0;
            for u in bits(self.adj[v]) {
                row |= bit(perm[u]);
            }
            adj[perm[v]] = row;
        }
        SimpleGraph { n: self.n, adj }
    }

    /// Adds a vertex `n` adjacent to exactly the vertices of `nbrs`.
    pub fn with_new_vertex(&self, nbrs: Row) -> Self {
        let v = self.n;
        assert!(v < MAX_VERTICES);
        let mut adj = self.adj.clone();
        for u in bits(nbrs) {
            adj[u] |= bit(v);
        }
        adj.push(nbrs);
        SimpleGraph { n: v + 1, adj }
    }

    /// Pads with isolated vertices up to `n`.
    pub fn padded(&self, n: usize) -> Self {
        assert!(n >= self.n && n <= MAX_VERTICES);
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        SimpleGraph { n, adj }
    }

    /// Removes isolated vertices, keeping the relative order of the rest.
    pub fn strip_isolated(&self) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.adj[v] != 0).collect();
        self.induced(&keep)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == choose2(self.n)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Row> {
        let mut seen: Row = 0;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Row> {
        let mut side: Row = 0;
        let mut seen: Row = 0;
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            seen |= bit(s);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let v_side = side & bit(v) != 0;
                for u in bits(self.adj[v]) {
                    if seen & bit(u) == 0 {
                        seen |= bit(u);
                        if !v_side {
                            side |= bit(u);
                        }
                        stack.push(u);
                    } else if (side & bit(u) != 0) == v_side {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: Row) -> usize {
        bits(set).map(|v| (self.adj[v] & set).count_ones() as usize).sum::<usize>() / 2
    }

    /// Number of edges with exactly one end in `set`.
    pub fn edges_across(&self, set: Row) -> usize {
        let rest = self.all_vertices() & !set;
        bits(set).map(|v| (self.adj[v] & rest).count_ones() as usize).sum()
    }

    fn is_well_formed(&self) -> bool {
        let all = self.all_vertices();
        (0..self.n).all(|v| {
            self.adj[v] & !all == 0
                && self.adj[v] & bit(v) == 0
                && bits(self.adj[v]).all(|u| self.adj[u] & bit(v) != 0)
        })
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    Empty(usize),
    /// Path on `n` vertices.
    Path(usize),
    Cycle(usize),
    /// Star `K_{1,t}`.
    Star(usize),
    /// Induced matching `rK_2`.
    Matching(usize),
    CompleteBipartite(usize, usize),
    /// `S_{s,t}`: an `s`-clique completely joined to an independent `t`-set.
    CompleteSplit(usize, usize),
    /// `H_t`: clique `B`, independent `A`, `v_i v_{t+j}` an edge iff `j <= i`.
    StaircaseSplit(usize),
    /// `E_t`: like `H_t` with both sides independent.
    StaircaseBipartite(usize),
}

impl NamedGraph {
    pub fn build(self) -> Result<SimpleGraph> {
        use NamedGraph::*;
        let positive = |xs: &[usize]| -> Result<()> {
            if xs.contains(&0) {
                invalid(format!("{self:?}: parameters must be positive"))
            } else {
                Ok(())
            }
        };
        let g = match self {
            Complete(n) => {
                positive(&[n])?;
                check_size(n)?;
                SimpleGraph::complete(n)
            }
            Empty(n) => {
                positive(&[n])?;
                check_size(n)?;
                SimpleGraph::empty(n)
            }
            Path(n) => {
                positive(&[n])?;
                check_size(n)?;
                let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                SimpleGraph::from_edges(n, &edges)?
            }
            Cycle(n) => {
                if n < 3 {
                    return invalid("a cycle needs at least 3 vertices");
                }
                check_size(n)?;
                let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
                SimpleGraph::from_edges(n, &edges)?
            }
            Star(t) => {
                positive(&[t])?;
                check_size(t + 1)?;
                let edges: Vec<_> = (1..=t).map(|v| (0, v)).collect();
                SimpleGraph::from_edges(t + 1, &edges)?
            }
            Matching(r) => {
                positive(&[r])?;
                check_size(2 * r)?;
                let edges: Vec<_> = (0..r).map(|i| (2 * i, 2 * i + 1)).collect();
                SimpleGraph::from_edges(2 * r, &edges)?
            }
            CompleteBipartite(s, t) => {
                positive(&[s, t])?;
                check_size(s + t)?;
                let mut g = SimpleGraph::empty(s + t);
                for a in 0..s {
                    for b in s..s + t {
                        g.add_edge(a, b);
                    }
                }
                g
            }
            CompleteSplit(s, t) => {
                positive(&[s, t])?;
                check_size(s + t)?;
                let mut g = SimpleGraph::empty(s + t);
                for a in 0..s {
                    for b in a + 1..s + t {
                        g.add_edge(a, b);
                    }
                }
                g
            }
            StaircaseSplit(t) | StaircaseBipartite(t) => {
                positive(&[t])?;
                check_size(2 * t)?;
                let mut g = SimpleGraph::empty(2 * t);
                // A = 0..t holds v_1..v_t, B = t..2t holds v_{t+1}..v_{2t}.
                for i in 1..=t {
                    for j in 1..=i {
                        g.add_edge(i - 1, t + j - 1);
                    }
                }
                if matches!(self, StaircaseSplit(_)) {
                    for a in t..2 * t {
                        for b in a + 1..2 * t {
                            g.add_edge(a, b);
                        }
                    }
                }
                g
            }
        };
        Ok(g)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

fn parse_params(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer parameter {p:?}")))
        })
        .collect()
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Parses `name:params`, e.g. `K:4`, `K:2,3`, `S:2,2`, `H_t:3`, `star:3`, `matching:2`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected name:params, got {s:?}")))?;
        let p = parse_params(params)?;
        let one = |f: fn(usize) -> NamedGraph| -> Result<NamedGraph> {
            match p.as_slice() {
                [a] => Ok(f(*a)),
                _ => Err(Error::Parse(format!("{name} takes one parameter"))),
            }
        };
        let two = |f: fn(usize, usize) -> NamedGraph| -> Result<NamedGraph> {
            match p.as_slice() {
                [a, b] => Ok(f(*a, *b)),
                _ => Err(Error::Parse(format!("{name} takes two parameters"))),
            }
        };
        match name {
            "K" | "complete" if p.len() == 1 => one(NamedGraph::Complete),
            "K" | "Kst" | "bipartite" => two(NamedGraph::CompleteBipartite),
            "empty" | "E" => one(NamedGraph::Empty),
            "P" | "path" => one(NamedGraph::Path),
            "C" | "cycle" => one(NamedGraph::Cycle),
            "star" => one(NamedGraph::Star),
            "matching" | "rK2" => one(NamedGraph::Matching),
            "S" | "split" => two(NamedGraph::CompleteSplit),
            "H_t" | "H" => one(NamedGraph::StaircaseSplit),
            "E_t" => one(NamedGraph::StaircaseBipartite),
            _ => Err(Error::Parse(format!("unknown graph name {name:?}"))),
        }
    }
}

/// Parses a named generator (`H_t:3`) or a `graph6:<string>` literal.
pub fn parse_graph_spec(s: &str) -> Result<SimpleGraph> {
    if let Some(g6) = s.strip_prefix("graph6:").or_else(|| s.strip_prefix("g6:")) {
        return crate::graph6::decode(g6);
    }
    s.parse::<NamedGraph>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_examples() {
        let k3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, SimpleGraph::complete(3));
        assert_eq!(SimpleGraph::from_edges(4, &[]).unwrap().edge_count(), 0);
        assert_eq!(SimpleGraph::from_edges(4, &[(0, 1), (0, 1)]).unwrap().edge_count(), 1);
        assert_eq!(
            SimpleGraph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(SimpleGraph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn named_edge_counts() {
        let s22 = NamedGraph::CompleteSplit(2, 2).build().unwrap();
        assert_eq!((s22.n(), s22.edge_count()), (4, 5));
        let h3 = NamedGraph::StaircaseSplit(3).build().unwrap();
        assert_eq!((h3.n(), h3.edge_count()), (6, 9));
        let e3 = NamedGraph::StaircaseBipartite(3).build().unwrap();
        assert_eq!(e3.edge_count(), 6);
        for t in 1..8 {
            let h = NamedGraph::StaircaseSplit(t).build().unwrap();
            let e = NamedGraph::StaircaseBipartite(t).build().unwrap();
            assert_eq!(h.edge_count(), t * t);
            assert_eq!(e.edge_count(), t * (t + 1) / 2);
            // B is a clique and A independent in H_t.
            assert_eq!(h.edges_within(low_bits(t)), 0);
            assert_eq!(h.edges_within(low_bits(2 * t) & !low_bits(t)), t * (t - 1) / 2);
        }
        assert!(NamedGraph::Star(0).build().is_err());
        assert!(NamedGraph::CompleteBipartite(2, 0).build().is_err());
    }

    #[test]
    fn staircase_adjacency_rule() {
        let t = 4;
        let h = NamedGraph::StaircaseSplit(t).build().unwrap();
        for i in 1..=t {
            for j in 1..=t {
                assert_eq!(h.has_edge(i - 1, t + j - 1), j <= i);
            }
        }
    }

    #[test]
    fn complement_examples() {
        let k4 = SimpleGraph::complete(4);
        assert!(k4.complement().is_edgeless());
        let two_k2 = NamedGraph::Matching(2).build().unwrap();
        let c = two_k2.complement();
        assert_eq!(c.edge_count(), 4);
        assert!(c.degree_sequence().iter().all(|&d| d == 2));
        assert!(c.is_connected());
        let s22c = NamedGraph::CompleteSplit(2, 2).build().unwrap().complement();
        assert_eq!(s22c.edges(), vec![(2, 3)]);
    }

    #[test]
    fn disjoint_union_examples() {
        let k2 = SimpleGraph::complete(2);
        let u = SimpleGraph::disjoint_union(&[k2.clone(), k2.clone(), k2]).unwrap();
        assert_eq!(u, NamedGraph::Matching(3).build().unwrap());
        let k3 = SimpleGraph::complete(3);
        let u = SimpleGraph::disjoint_union(&[k3.clone(), k3]).unwrap();
        assert_eq!((u.n(), u.edge_count()), (6, 6));
        assert_eq!(u.components().len(), 2);
        let e = SimpleGraph::disjoint_union(&[]).unwrap();
        assert_eq!(e.n(), 0);
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(NamedGraph::Star(4).build().unwrap().max_degree(), 4);
        assert_eq!(NamedGraph::Matching(3).build().unwrap().max_degree(), 1);
        assert_eq!(NamedGraph::StaircaseSplit(3).build().unwrap().max_degree(), 5);
    }

    #[test]
    fn edge_mask_round_trip() {
        let g = NamedGraph::Cycle(7).build().unwrap();
        let m = g.edge_mask().unwrap();
        assert_eq!(SimpleGraph::from_edge_mask(7, m), g);
        assert!(SimpleGraph::empty(12).edge_mask().is_none());
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(NamedGraph::Cycle(6).build().unwrap().bipartition().is_some());
        assert!(NamedGraph::Cycle(5).build().unwrap().bipartition().is_none());
    }

    #[test]
    fn parse_specs() {
        assert_eq!(parse_graph_spec("H_t:3").unwrap().edge_count(), 9);
        assert_eq!(parse_graph_spec("K:4").unwrap().edge_count(), 6);
        assert_eq!(parse_graph_spec("K:2,3").unwrap().edge_count(), 6);
        assert_eq!(parse_graph_spec("graph6:Bw").unwrap(), SimpleGraph::complete(3));
        assert!(parse_graph_spec("nope:3").is_err());
        assert!(parse_graph_spec("K3").is_err());
    }
}
