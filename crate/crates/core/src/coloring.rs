//! Red/blue and k-colorings of the edges of `K_n`.

use serde::{Deserialize, Serialize};

use crate::bits::{choose2, edge_at, edge_index, low_bits, Row};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::graph6;

/// Largest `n` for raw enumeration of all red edge subsets.
pub const RAW_MAX: usize = 8;

/// A 2-coloring of `E(K_n)`, stored as its red graph; blue is the complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    red: SimpleGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassSizes {
    pub red: usize,
    pub blue: usize,
    pub min: usize,
}

impl TwoColoring {
    pub fn from_red(n: usize, red: SimpleGraph) -> Result<Self> {
        if red.n() != n {
            return Err(Error::VertexCountMismatch { expected: n, found: red.n() });
        }
        Ok(TwoColoring { red })
    }

    /// Red edges given by a colex edge mask (`n ≤ 11`).
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        TwoColoring { red: SimpleGraph::from_edge_mask(n, mask) }
    }

    pub fn monochromatic(n: usize, red: bool) -> Self {
        let red = if red { SimpleGraph::complete(n) } else { SimpleGraph::empty(n) };
        TwoColoring { red }
    }

    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &SimpleGraph {
        &self.red
    }

    pub fn blue(&self) -> SimpleGraph {
        self.red.complement()
    }

    pub fn red_mask(&self) -> Option<u64> {
        self.red.edge_mask()
    }

    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.red.has_edge(u, v)
    }

    /// Blue neighbourhood of `v`, computed from the red row.
    pub fn blue_neighbors(&self, v: usize) -> Row {
        !self.red.neighbors(v) & low_bits(self.n()) & !(1 << v)
    }

    pub fn class_sizes(&self) -> ClassSizes {
        let red = self.red.edge_count();
        let blue = choose2(self.n()) - red;
        ClassSizes { red, blue, min: red.min(blue) }
    }

    pub fn swap_colors(&self) -> Self {
        TwoColoring { red: self.red.complement() }
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        TwoColoring { red: self.red.relabel(perm) }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(TwoColoringFile {
            n: self.n(),
            red: self.red.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        })
        .expect("plain data serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: TwoColoringFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let edges: Vec<(usize, usize)> = file.red.iter().map(|e| (e[0], e[1])).collect();
        Ok(TwoColoring { red: SimpleGraph::from_edges(file.n, &edges)? })
    }

    /// Parses the JSON coloring format, or a graph6 red graph (optionally checked
    /// against an expected vertex count).
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let trimmed = text.trim();
        let c = if trimmed.starts_with('{') {
            Self::from_json_str(trimmed)?
        } else {
            TwoColoring { red: graph6::decode(trimmed)? }
        };
        match n {
            Some(n) if n != c.n() => Err(Error::VertexCountMismatch { expected: n, found: c.n() }),
            _ => Ok(c),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TwoColoringFile {
    n: usize,
    red: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// All `2^C(n,2)` red edge subsets.
    Raw,
    /// One red graph per isomorphism class.
    Canonical,
}

/// Stream of colorings of `K_n`: every red edge subset (`Raw`, `n ≤ 8`) or one per
/// isomorphism class (`Canonical`, `n ≤ 10`).
pub fn enumerate_red_graphs(
    n: usize,
    mode: EnumerationMode,
) -> Result<Box<dyn Iterator<Item = TwoColoring> + Send>> {
    match mode {
        EnumerationMode::Raw => {
            if n > RAW_MAX {
                return Err(Error::OutOfRange(format!(
                    "raw enumeration supports at most {RAW_MAX} vertices, got {n}"
                )));
            }
            let total = 1u64 << choose2(n);
            Ok(Box::new((0..total).map(move |m| TwoColoring::from_edge_mask(n, m))))
        }
        EnumerationMode::Canonical => Ok(Box::new(
            enumerate::canonical_iter(n)?.map(move |m| TwoColoring::from_edge_mask(n, m)),
        )),
    }
}

/// A coloring `f: E(K_n) → {1..k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KColoring {
    n: usize,
    k: usize,
    /// Color of each edge, indexed by colex edge position.
    colors: Vec<usize>,
}

impl KColoring {
    /// Builds a k-coloring from `(u, v, color)` triples covering every edge once.
    pub fn from_parts(n: usize, k: usize, assignment: &[(usize, usize, usize)]) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidColoring("k must be positive".into()));
        }
        let mut colors = vec![0; choose2(n)];
        for &(u, v, c) in assignment {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !(1..=k).contains(&c) {
                return Err(Error::InvalidColoring(format!("color {c} outside 1..={k}")));
            }
            let slot = &mut colors[edge_index(u, v)];
            if *slot != 0 && *slot != c {
                return Err(Error::InvalidColoring(format!("edge ({u}, {v}) colored twice")));
            }
            *slot = c;
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            let (u, v) = edge_at(i);
            return Err(Error::InvalidColoring(format!("edge ({u}, {v}) has no color")));
        }
        Ok(KColoring { n, k, colors })
    }

    /// Builds a k-coloring from a total function on pairs `u < v`.
    pub fn from_fn(n: usize, k: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut parts = Vec::with_capacity(choose2(n));
        for v in 1..n {
            for u in 0..v {
                parts.push((u, v, f(u, v)));
            }
        }
        Self::from_parts(n, k, &parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, u: usize, v: usize) -> usize {
        self.colors[edge_index(u, v)]
    }

    /// The graph `G_i` on the edges of color `i`.
    pub fn color_graph(&self, i: usize) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n);
        for (idx, &c) in self.colors.iter().enumerate() {
            if c == i {
                let (u, v) = edge_at(idx);
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_two_coloring(c: &TwoColoring) -> Self {
        KColoring::from_fn(c.n(), 2, |u, v| if c.is_red(u, v) { 1 } else { 2 })
            .expect("every edge gets color 1 or 2")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let mut edges = Vec::with_capacity(self.colors.len());
        for v in 1..self.n {
            for u in 0..v {
                edges.push([u, v, self.color(u, v)]);
            }
        }
        serde_json::to_value(KColoringFile { n: self.n, k: self.k, edges }).expect("plain data serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: KColoringFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let parts: Vec<_> = file.edges.iter().map(|e| (e[0], e[1], e[2])).collect();
        Self::from_parts(file.n, file.k, &parts)
    }

    /// Accepts either coloring format; a 2-coloring becomes colors 1 (red), 2 (blue).
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text.trim()).map_err(|e| Error::Parse(e.to_string()))?;
        if value.get("k").is_some() {
            Self::from_json_str(text)
        } else {
            Ok(Self::from_two_coloring(&TwoColoring::from_json_str(text)?))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct KColoringFile {
    n: usize,
    k: usize,
    edges: Vec<[usize; 3]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn class_size_examples() {
        let c = TwoColoring::from_red(4, SimpleGraph::complete(4)).unwrap();
        assert_eq!(c.class_sizes(), ClassSizes { red: 6, blue: 0, min: 0 });
        let m = NamedGraph::Matching(2).build().unwrap().padded(5);
        assert_eq!(TwoColoring::from_red(5, m).unwrap().class_sizes().blue, 8);
        let star = NamedGraph::Star(5).build().unwrap();
        let c = TwoColoring::from_red(6, star).unwrap();
        assert_eq!(c.class_sizes().min, 5);
        let s = c.swap_colors();
        assert_eq!((s.class_sizes().red, s.class_sizes().blue), (10, 5));
        assert_eq!(s.swap_colors(), c);
        assert!(TwoColoring::from_red(5, SimpleGraph::complete(4)).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_red_graphs(3, EnumerationMode::Raw).unwrap().count(), 8);
        assert_eq!(enumerate_red_graphs(4, EnumerationMode::Raw).unwrap().count(), 64);
        assert_eq!(enumerate_red_graphs(4, EnumerationMode::Canonical).unwrap().count(), 11);
        assert!(enumerate_red_graphs(9, EnumerationMode::Raw).is_err());
        assert!(enumerate_red_graphs(11, EnumerationMode::Canonical).is_err());
    }

    #[test]
    fn kcoloring_parts() {
        let rainbow = KColoring::from_parts(3, 3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        for i in 1..=3 {
            assert_eq!(rainbow.color_graph(i).edge_count(), 1);
        }
        let mono = KColoring::from_fn(5, 3, |_, _| 1).unwrap();
        assert!(mono.color_graph(1).is_complete());
        assert!(mono.color_graph(2).is_edgeless());
        assert!(KColoring::from_parts(3, 3, &[(0, 1, 1), (1, 2, 2)]).is_err());
        assert!(KColoring::from_parts(3, 2, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]).is_err());
    }

    #[test]
    fn json_round_trips() {
        let c = TwoColoring::from_red(5, NamedGraph::Cycle(5).build().unwrap()).unwrap();
        let text = c.to_json_value().to_string();
        assert_eq!(TwoColoring::parse(&text, Some(5)).unwrap(), c);
        assert_eq!(TwoColoring::parse("Bw", None).unwrap().class_sizes().red, 3);
        let k = KColoring::from_fn(4, 3, |u, v| (u + v) % 3 + 1).unwrap();
        assert_eq!(KColoring::parse(&k.to_json_value().to_string()).unwrap(), k);
        let two = KColoring::parse(&text).unwrap();
        assert_eq!(two.color_graph(1), *c.red());
    }
}
