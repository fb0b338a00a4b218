//! Embedding search compiled once per pattern.
//!
//! A host is given as two row arrays: `adj` (edges a pattern edge may use) and
//! `non` (pairs a constrained pattern non-edge may use). For an induced copy in the
//! red graph, `adj` is red and `non` is blue; the same matcher run with the arrays
//! swapped looks for the copy in blue.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, bits, low_bits, Row};
use crate::graph::SimpleGraph;

/// Largest pattern order a [`Matcher`] accepts.
pub const MAX_PATTERN: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbedMode {
    /// Pattern edges map to `adj`, pattern non-edges to `non`.
    Induced,
    /// Pattern edges map to `adj`; non-edges unconstrained.
    Subgraph,
    /// Components embed as subgraphs of `adj`; pairs in different components map to
    /// `non`.
    Weak,
    /// Weak embedding whose component images are also induced. With no edges
    /// between components this coincides with [`EmbedMode::Induced`].
    WeakStrict,
}

#[derive(Debug, Clone)]
pub struct Matcher {
    k: usize,
    /// Pattern vertex placed at each search position.
    order: Vec<usize>,
    need_adj: Vec<u32>,
    need_non: Vec<u32>,
    min_adj: Vec<u32>,
    min_non: Vec<u32>,
}

impl Matcher {
    pub fn new(h: &SimpleGraph, mode: EmbedMode) -> Self {
        let k = h.n();
        assert!(k <= MAX_PATTERN, "pattern order {k} exceeds {MAX_PATTERN}");
        let comp_of: Vec<usize> = {
            let mut c = vec![0; k];
            for (i, comp) in h.components().into_iter().enumerate() {
                for v in bits(comp) {
                    c[v] = i;
                }
            }
            c
        };
        let constrained_non = |u: usize, v: usize| -> bool {
            u != v
                && !h.has_edge(u, v)
                && match mode {
                    EmbedMode::Induced | EmbedMode::WeakStrict => true,
                    EmbedMode::Subgraph => false,
                    EmbedMode::Weak => comp_of[u] != comp_of[v],
                }
        };
        let non_degree = |v: usize| (0..k).filter(|&u| constrained_non(u, v)).count();

        // Most constrained first: highest degree, then most links to placed vertices.
        let mut order: Vec<usize> = Vec::with_capacity(k);
        let mut placed: Row = 0;
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| placed & bit(v) == 0)
                .max_by_key(|&v| {
                    let links = (h.neighbors(v) & placed).count_ones() as usize
                        + (0..k).filter(|&u| placed & bit(u) != 0 && constrained_non(u, v)).count();
                    (links, h.degree(v), non_degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex remains");
            order.push(next);
            placed |= bit(next);
        }
        let mut need_adj = vec![0u32; k];
        let mut need_non = vec![0u32; k];
        for i in 0..k {
            for j in 0..i {
                let (p, q) = (order[i], order[j]);
                if h.has_edge(p, q) {
                    need_adj[i] |= 1 << j;
                } else if constrained_non(p, q) {
                    need_non[i] |= 1 << j;
                }
            }
        }
        let min_adj = order.iter().map(|&p| h.degree(p) as u32).collect();
        let min_non = order.iter().map(|&p| non_degree(p) as u32).collect();
        Matcher { k, order, need_adj, need_non, min_adj, min_non }
    }

    pub fn pattern_order(&self) -> usize {
        self.k
    }

    /// An embedding as `image[p]` for each pattern vertex `p`, or `None`.
    pub fn find(&self, adj: &[Row], non: &[Row]) -> Option<Vec<usize>> {
        let mut pos = [0usize; MAX_PATTERN];
        if !self.search(adj, non, &mut pos) {
            return None;
        }
        let mut image = vec![0; self.k];
        for (i, &p) in self.order.iter().enumerate() {
            image[p] = pos[i];
        }
        Some(image)
    }

    pub fn exists(&self, adj: &[Row], non: &[Row]) -> bool {
        let mut pos = [0usize; MAX_PATTERN];
        self.search(adj, non, &mut pos)
    }

    fn search(&self, adj: &[Row], non: &[Row], pos: &mut [usize; MAX_PATTERN]) -> bool {
        let n = adj.len();
        if self.k > n {
            return false;
        }
        if self.k == 0 {
            return true;
        }
        let all = low_bits(n);
        let mut filt = [0 as Row; MAX_PATTERN];
        let mut dadj = [0u32; 128];
        let mut dnon = [0u32; 128];
        for x in 0..n {
            dadj[x] = adj[x].count_ones();
            dnon[x] = non[x].count_ones();
        }
        for i in 0..self.k {
            let (a, b) = (self.min_adj[i], self.min_non[i]);
            let mut f = 0;
            for x in 0..n {
                if dadj[x] >= a && dnon[x] >= b {
                    f |= bit(x);
                }
            }
            if f == 0 {
                return false;
            }
            filt[i] = f & all;
        }
        self.extend(0, 0, adj, non, &filt, pos)
    }

    fn extend(
        &self,
        i: usize,
        used: Row,
        adj: &[Row],
        non: &[Row],
        filt: &[Row; MAX_PATTERN],
        pos: &mut [usize; MAX_PATTERN],
    ) -> bool {
        if i == self.k {
            return true;
        }
        let mut cand = filt[i] & !used;
        let mut m = self.need_adj[i];
        while m != 0 && cand != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            cand &= adj[pos[j]];
        }
        let mut m = self.need_non[i];
        while m != 0 && cand != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            cand &= non[pos[j]];
        }
        while cand != 0 {
            let x = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            pos[i] = x;
            if self.extend(i + 1, used | bit(x), adj, non, filt, pos) {
                return true;
            }
        }
        false
    }
}

/// Complement rows within `n` vertices.
pub fn complement_rows(rows: &[Row]) -> Vec<Row> {
    let all = low_bits(rows.len());
    rows.iter().enumerate().map(|(v, &r)| !r & all & !bit(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn induced(host: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
        let non = complement_rows(host.rows());
        Matcher::new(h, EmbedMode::Induced).find(host.rows(), &non)
    }

    #[test]
    fn induced_examples() {
        let c5 = NamedGraph::Cycle(5).build().unwrap();
        let p3 = NamedGraph::Path(3).build().unwrap();
        let img = induced(&c5, &p3).unwrap();
        assert_eq!(c5.induced(&img), p3);
        assert!(induced(&SimpleGraph::complete(4), &p3).is_none());
        let k22 = NamedGraph::CompleteBipartite(2, 2).build().unwrap();
        let two_k2 = NamedGraph::Matching(2).build().unwrap();
        assert!(induced(&k22, &two_k2).is_none());
    }

    #[test]
    fn weak_and_subgraph_modes() {
        let two_k2 = NamedGraph::Matching(2).build().unwrap();
        let k3 = SimpleGraph::complete(3);
        let two_k3 = SimpleGraph::disjoint_union(&[k3.clone(), k3]).unwrap();
        let weak = Matcher::new(&two_k2, EmbedMode::Weak);
        let non = complement_rows(two_k3.rows());
        assert!(weak.find(two_k3.rows(), &non).is_some());
        let k6 = SimpleGraph::complete(6);
        assert!(weak.find(k6.rows(), &complement_rows(k6.rows())).is_none());
        let sub = Matcher::new(&two_k2, EmbedMode::Subgraph);
        assert!(sub.find(k6.rows(), &complement_rows(k6.rows())).is_some());
        let c6 = NamedGraph::Cycle(6).build().unwrap();
        let img = weak.find(c6.rows(), &complement_rows(c6.rows())).unwrap();
        assert!(c6.has_edge(img[0], img[1]) && c6.has_edge(img[2], img[3]));
        for &a in &img[..2] {
            for &b in &img[2..] {
                assert!(!c6.has_edge(a, b));
            }
        }
    }

    #[test]
    fn pattern_larger_than_host() {
        let h = SimpleGraph::empty(5);
        let host = SimpleGraph::complete(3);
        assert!(Matcher::new(&h, EmbedMode::Induced).find(host.rows(), host.rows()).is_none());
        let nothing = SimpleGraph::empty(0);
        assert_eq!(Matcher::new(&nothing, EmbedMode::Induced).find(host.rows(), host.rows()), Some(vec![]));
    }
}
