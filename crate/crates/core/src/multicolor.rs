//! Color classification for k-colorings: which colors contain an induced star
//! `K_{1,t}` or an induced matching `tK_2`, and the clique grid spanned by the
//! remaining colors.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bits::{bit, for_each_combination, Row};
use crate::coloring::KColoring;
use crate::error::{invalid, Error, Result};
use crate::graph::{NamedGraph, SimpleGraph};
use crate::patterns::{find_induced, verify_embedding, EmbedMode};

/// Largest vertex count for [`search_clique_grid`].
pub const CLIQUE_GRID_MAX: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColorPattern {
    Star,
    Matching,
}

impl ColorPattern {
    pub fn graph(self, t: usize) -> SimpleGraph {
        match self {
            ColorPattern::Star => NamedGraph::Star(t).build(),
            ColorPattern::Matching => NamedGraph::Matching(t).build(),
        }
        .expect("small named graphs build")
    }
}

/// An induced copy of a star or matching inside one color class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorWitness {
    pub pattern: ColorPattern,
    /// `vertices[p]` is the image of pattern vertex `p`.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorClassification {
    pub t: usize,
    /// Colors containing an induced `K_{1,t}` or `tK_2`.
    pub a_f: BTreeSet<usize>,
    pub b_f: BTreeSet<usize>,
    pub witnesses: BTreeMap<usize, ColorWitness>,
}

impl ColorClassification {
    /// Re-checks every witness against the coloring.
    pub fn verify(&self, c: &KColoring) -> bool {
        let all: BTreeSet<usize> = (1..=c.k()).collect();
        self.a_f.union(&self.b_f).copied().collect::<BTreeSet<_>>() == all
            && self.a_f.is_disjoint(&self.b_f)
            && self.a_f.iter().copied().eq(self.witnesses.keys().copied())
            && self.witnesses.iter().all(|(&i, w)| {
                verify_embedding(&c.color_graph(i), &w.pattern.graph(self.t), &w.vertices, EmbedMode::Induced)
            })
    }
}

pub fn classify_colors(c: &KColoring, t: usize) -> Result<ColorClassification> {
    if t < 2 {
        return invalid(format!("classification needs t >= 2, got {t}"));
    }
    let patterns = [ColorPattern::Star, ColorPattern::Matching].map(|p| (p, p.graph(t)));
    let mut out = ColorClassification { t, a_f: BTreeSet::new(), b_f: BTreeSet::new(), witnesses: BTreeMap::new() };
    for i in 1..=c.k() {
        let g = c.color_graph(i);
        let hit = patterns
            .iter()
            .find_map(|(p, h)| find_induced(&g, h).map(|vertices| ColorWitness { pattern: *p, vertices }));
        match hit {
            Some(w) => {
                out.a_f.insert(i);
                out.witnesses.insert(i, w);
            }
            None => {
                out.b_f.insert(i);
            }
        }
    }
    Ok(out)
}

fn is_mono_clique(c: &KColoring, color: usize, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(a, &u)| vs[..a].iter().all(|&v| c.color(u, v) == color))
}

/// The common color of all edges between `a` and `b`, if there is one.
fn cross_color(c: &KColoring, a: &[usize], b: &[usize]) -> Option<usize> {
    let first = c.color(a[0], b[0]);
    a.iter().all(|&u| b.iter().all(|&v| c.color(u, v) == first)).then_some(first)
}

/// Checks a clique grid: one `t`-clique `C_i` of color `i` for every `i` in `B_f`,
/// pairwise disjoint, such that every pair `C_i ∪ C_j` spans a monochromatic
/// `K_{t,t}` whose color lies in `A_f`. Errors when the map is malformed.
pub fn verify_multicolor_b(c: &KColoring, t: usize, cliques: &BTreeMap<usize, Vec<usize>>) -> Result<bool> {
    let class = classify_colors(c, t)?;
    if cliques.keys().copied().collect::<BTreeSet<_>>() != class.b_f {
        return Err(Error::Precondition(format!(
            "cliques must be given exactly for the colors {:?}",
            class.b_f
        )));
    }
    let mut used: Row = 0;
    for (&i, vs) in cliques {
        if vs.len() != t || vs.iter().any(|&v| v >= c.n()) {
            return Err(Error::Precondition(format!("clique of color {i} must be {t} vertices below {}", c.n())));
        }
        let set = vs.iter().fold(0 as Row, |m, &v| m | bit(v));
        if set.count_ones() as usize != t || set & used != 0 {
            return Err(Error::Precondition(format!("clique of color {i} repeats a vertex")));
        }
        used |= set;
        if !is_mono_clique(c, i, vs) {
            return Err(Error::Precondition(format!("vertices {vs:?} are not a clique of color {i}")));
        }
    }
    let sets: Vec<&Vec<usize>> = cliques.values().collect();
    Ok(sets.iter().enumerate().all(|(a, x)| {
        sets[..a].iter().all(|y| cross_color(c, x, y).is_some_and(|col| class.a_f.contains(&col)))
    }))
}

/// Exhaustive search for a clique grid accepted by [`verify_multicolor_b`].
pub fn search_clique_grid(c: &KColoring, t: usize) -> Result<Option<BTreeMap<usize, Vec<usize>>>> {
    if c.n() > CLIQUE_GRID_MAX {
        return Err(Error::OutOfRange(format!("clique grid search supports n <= {CLIQUE_GRID_MAX}, got {}", c.n())));
    }
    let class = classify_colors(c, t)?;
    let colors: Vec<usize> = class.b_f.iter().copied().collect();
    let mut options: Vec<Vec<Vec<usize>>> = Vec::with_capacity(colors.len());
    for &i in &colors {
        let mut found = Vec::new();
        for_each_combination(c.n(), t, |vs| {
            if is_mono_clique(c, i, vs) {
                found.push(vs.to_vec());
            }
            true
        });
        if found.is_empty() {
            return Ok(None);
        }
        options.push(found);
    }
    fn go(
        c: &KColoring,
        a_f: &BTreeSet<usize>,
        options: &[Vec<Vec<usize>>],
        chosen: &mut Vec<Vec<usize>>,
        used: Row,
    ) -> bool {
        let Some(level) = options.get(chosen.len()) else {
            return true;
        };
        for cand in level {
            let set = cand.iter().fold(0 as Row, |m, &v| m | bit(v));
            if set & used != 0 {
                continue;
            }
            if chosen.iter().all(|prev| cross_color(c, prev, cand).is_some_and(|col| a_f.contains(&col))) {
                chosen.push(cand.clone());
                if go(c, a_f, options, chosen, used | set) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    Ok(go(c, &class.a_f, &options, &mut chosen, 0).then(|| colors.into_iter().zip(chosen).collect()))
}
