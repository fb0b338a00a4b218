//! Certificates for exact extremal values.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::coloring::TwoColoring;
use crate::graph::SimpleGraph;
use crate::graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    Ex2,
    Bal,
    Ramsey,
    BipartiteRamsey,
    Zarankiewicz,
    Extremal,
}

/// A bipartite graph given by its biadjacency rows (`rows[i]` bit `j` set iff row
/// vertex `i` is adjacent to column vertex `j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartite {
    pub rows: usize,
    pub cols: usize,
    pub adjacency: Vec<u64>,
}

impl Bipartite {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &r) in self.adjacency.iter().enumerate() {
            for j in 0..self.cols {
                if r >> j & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Whether some `s` rows and `t` columns span a complete bipartite graph.
    pub fn contains_kst(&self, s: usize, t: usize) -> bool {
        if s > self.rows || t > self.cols {
            return false;
        }
        if s == 0 {
            return true;
        }
        let mut found = false;
        crate::bits::for_each_combination(self.rows, s, |pick| {
            let common = pick.iter().fold(u64::MAX, |m, &i| m & self.adjacency[i]);
            if common.count_ones() as usize >= t {
                found = true;
                return false;
            }
            true
        });
        found
    }

    /// As a graph on `rows + cols` vertices, rows first.
    pub fn to_graph(&self) -> SimpleGraph {
        let edges: Vec<_> = self.edges().into_iter().map(|(i, j)| (i, self.rows + j)).collect();
        SimpleGraph::from_edges(self.rows + self.cols, &edges).expect("edges in range")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Coloring(TwoColoring),
    Graph(SimpleGraph),
    Bipartite(Bipartite),
    None,
}

impl Witness {
    fn to_json(&self) -> Value {
        match self {
            Witness::Coloring(c) => {
                let mut v = c.to_json_value();
                v["kind"] = json!("coloring");
                v["graph6"] = json!(graph6::encode(c.red()));
                v
            }
            Witness::Graph(g) => json!({
                "kind": "graph",
                "n": g.n(),
                "graph6": graph6::encode(g),
                "edges": g.edges(),
            }),
            Witness::Bipartite(b) => json!({
                "kind": "bipartite",
                "rows": b.rows,
                "cols": b.cols,
                "edges": b.edges(),
            }),
            Witness::None => Value::Null,
        }
    }
}

/// An exact value with a witness attaining it and search statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalCertificate {
    pub quantity: Quantity,
    pub parameters: BTreeMap<String, Value>,
    pub value: usize,
    pub witness: Witness,
    /// The value is proved exact by exhaustive search.
    pub exhaustive: bool,
    /// Deterministic size of the searched space.
    pub nodes_searched: u64,
    pub wall_time_secs: Option<f64>,
    pub details: BTreeMap<String, Value>,
}

impl ExtremalCertificate {
    pub(crate) fn new(quantity: Quantity, value: usize, witness: Witness) -> Self {
        ExtremalCertificate {
            quantity,
            parameters: BTreeMap::new(),
            value,
            witness,
            exhaustive: true,
            nodes_searched: 0,
            wall_time_secs: None,
            details: BTreeMap::new(),
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub(crate) fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    /// JSON without the wall-clock time: identical across runs and worker counts.
    pub fn to_canonical_json(&self) -> Value {
        json!({
            "quantity": self.quantity,
            "parameters": self.parameters,
            "value": self.value,
            "witness": self.witness.to_json(),
            "exhaustive": self.exhaustive,
            "nodes_searched": self.nodes_searched,
            "details": self.details,
        })
    }

    /// Canonical JSON plus `wall_time_secs` when recorded.
    pub fn to_json(&self) -> Value {
        let mut v = self.to_canonical_json();
        if let Some(t) = self.wall_time_secs {
            v["wall_time_secs"] = json!(t);
        }
        v
    }

    pub fn witness_coloring(&self) -> Option<&TwoColoring> {
        match &self.witness {
            Witness::Coloring(c) => Some(c),
            _ => None,
        }
    }
}
