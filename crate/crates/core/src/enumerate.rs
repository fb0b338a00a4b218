//! Isomorphism-free generation of small graphs.
//!
//! Graphs on a fixed vertex count are produced by canonical augmentation: a child
//! obtained by appending a vertex to a canonical parent is kept only when the new
//! vertex lies in the orbit of the child's canonically last vertex. Graphs with a
//! fixed edge count are grown one edge at a time and deduplicated by certificate.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::bits::{bit, low_bits};
use crate::canon;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest vertex count whose full level list is kept in memory.
pub const CACHED_LEVEL_MAX: usize = 9;
/// Largest vertex count supported by canonical enumeration.
pub const CANONICAL_MAX: usize = 10;
/// Largest edge count supported by [`enumerate_graphs`].
pub const EDGE_ENUMERATION_MAX: usize = 9;

type Levels = Mutex<HashMap<usize, Arc<Vec<u64>>>>;

fn levels() -> &'static Levels {
    static LEVELS: OnceLock<Levels> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(HashMap::new()))
}

/// One canonically labeled edge mask per isomorphism class of graphs on `n`
/// vertices, for `n ≤ 9`.
pub fn canonical_level(n: usize) -> Result<Arc<Vec<u64>>> {
    if n > CACHED_LEVEL_MAX {
        return Err(Error::OutOfRange(format!(
            "cached canonical levels go up to {CACHED_LEVEL_MAX} vertices, got {n}"
        )));
    }
    if let Some(level) = levels().lock().expect("level cache poisoned").get(&n) {
        return Ok(Arc::clone(level));
    }
    let level = if n <= 1 {
        vec![0]
    } else {
        let parents = canonical_level(n - 1)?;
        parents
            .par_iter()
            .map(|&p| children(n - 1, p))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    let level = Arc::new(level);
    levels()
        .lock()
        .expect("level cache poisoned")
        .entry(n)
        .or_insert_with(|| Arc::clone(&level));
    Ok(level)
}

/// Parallel stream over canonical representatives on `n ≤ 10` vertices. Level 10
/// is streamed from the cached level 9 without being stored.
pub fn canonical_par_iter(n: usize) -> Result<impl ParallelIterator<Item = u64>> {
    if n > CANONICAL_MAX {
        return Err(Error::OutOfRange(format!(
            "canonical enumeration supports at most {CANONICAL_MAX} vertices, got {n}"
        )));
    }
    Ok(if n <= CACHED_LEVEL_MAX {
        let level = canonical_level(n)?;
        let items: Vec<u64> = level.as_ref().clone();
        rayon::iter::Either::Left(items.into_par_iter())
    } else {
        let parents = canonical_level(n - 1)?;
        let items: Vec<u64> = parents.as_ref().clone();
        rayon::iter::Either::Right(items.into_par_iter().flat_map_iter(move |p| children(n - 1, p)))
    })
}

/// Sequential counterpart of [`canonical_par_iter`].
pub fn canonical_iter(n: usize) -> Result<Box<dyn Iterator<Item = u64> + Send>> {
    if n > CANONICAL_MAX {
        return Err(Error::OutOfRange(format!(
            "canonical enumeration supports at most {CANONICAL_MAX} vertices, got {n}"
        )));
    }
    if n <= CACHED_LEVEL_MAX {
        let level = canonical_level(n)?;
        Ok(Box::new((0..level.len()).map(move |i| level[i])))
    } else {
        let parents = canonical_level(n - 1)?;
        Ok(Box::new((0..parents.len()).flat_map(move |i| children(n - 1, parents[i]))))
    }
}

/// Accepted children of the canonical parent `mask` on `pn` vertices, as canonical
/// masks on `pn + 1` vertices.
fn children(pn: usize, mask: u64) -> Vec<u64> {
    let parent = SimpleGraph::from_edge_mask(pn, mask);
    let n = pn + 1;
    let degrees: Vec<usize> = (0..pn).map(|v| parent.degree(v)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0..(1u64 << pn) {
        let d = nbrs.count_ones() as usize;
        if (0..pn).any(|u| degrees[u] + ((nbrs >> u) & 1) as usize > d) {
            continue;
        }
        let child = parent.with_new_vertex(nbrs as u128 & low_bits(pn));
        let labeling = canon::canonical_labeling(&child);
        let last = labeling.iter().position(|&l| l == n - 1).expect("labeling is a permutation");
        if last != pn && !canon::same_orbit(&child, pn, last) {
            continue;
        }
        let canonical = child
            .relabel(&labeling)
            .edge_mask()
            .expect("canonical levels stay within mask range");
        if seen.insert(canonical) {
            out.push(canonical);
        }
    }
    out
}

/// One representative per isomorphism class of graphs with exactly `k_edges` edges.
/// With `min_degree_one` the graphs have no isolated vertices and between
/// `⌈(1 + √(1 + 8k))/2⌉` and `2k` vertices; otherwise every representative is padded
/// with isolated vertices to exactly `2k` vertices, which covers every class of
/// `k`-edge graph whose non-isolated part fits.
pub fn enumerate_graphs(k_edges: usize, min_degree_one: bool) -> Result<Vec<SimpleGraph>> {
    if k_edges > EDGE_ENUMERATION_MAX {
        return Err(Error::OutOfRange(format!(
            "exhaustive edge enumeration supports at most {EDGE_ENUMERATION_MAX} edges, got {k_edges}"
        )));
    }
    let mut level: Vec<SimpleGraph> = vec![SimpleGraph::empty(0)];
    for _ in 0..k_edges {
        let mut next: BTreeMap<String, SimpleGraph> = BTreeMap::new();
        for g in &level {
            let n = g.n();
            let mut grown = Vec::new();
            for v in 0..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        grown.push(g.clone_with_edge(u, v));
                    }
                }
                grown.push(g.with_new_vertex(bit(v)));
            }
            grown.push(SimpleGraph::disjoint_union(&[g.clone(), SimpleGraph::complete(2)])?);
            for h in grown {
                let form = canon::canonical_form(&h);
                next.entry(form.certificate).or_insert_with(|| h.relabel(&form.labeling));
            }
        }
        level = next.into_values().collect();
    }
    if k_edges == 0 {
        level = vec![SimpleGraph::empty(0)];
    }
    Ok(if min_degree_one {
        level
    } else {
        level.into_iter().map(|g| g.padded(2 * k_edges)).collect()
    })
}

impl SimpleGraph {
    fn clone_with_edge(&self, u: usize, v: usize) -> SimpleGraph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }
}
