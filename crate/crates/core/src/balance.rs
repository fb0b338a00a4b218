//! Balanceability, the half-edge family `F(G)`, membership in `C_k` with its
//! structural witnesses, and the constant balancing number predicate.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::{bit, bits, low_bits, Row};
use crate::canon;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::graph6;
use crate::params::{is_matching, matching_number, maximum_matching};
use crate::patterns::{balance_range, Containment, FamilyMember, PatternFamily};

/// Largest order accepted by [`char_bp_witness`].
pub const CHAR_BP_MAX: usize = 24;
/// Largest edge count accepted by [`half_family`].
pub const HALF_FAMILY_MAX_EDGES: usize = 24;

/// `F(G)`: the subgraphs of `G` with `⌊e/2⌋` or `⌈e/2⌉` edges up to isomorphism,
/// isolated vertices removed.
pub fn half_family(g: &SimpleGraph) -> Result<PatternFamily> {
    half_family_with(g, false)
}

/// As [`half_family`]; `keep_isolated` keeps each member spanning `V(G)`.
pub fn half_family_with(g: &SimpleGraph, keep_isolated: bool) -> Result<PatternFamily> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::InvalidParameter("F(G) needs at least one edge".into()));
    }
    if edges.len() > HALF_FAMILY_MAX_EDGES {
        return Err(Error::OutOfRange(format!(
            "F(G) is enumerated for at most {HALF_FAMILY_MAX_EDGES} edges, got {}",
            edges.len()
        )));
    }
    let (lo, hi) = balance_range(edges.len());
    let mut classes: BTreeMap<String, SimpleGraph> = BTreeMap::new();
    for size in lo..=hi {
        crate::bits::for_each_combination(edges.len(), size, |pick| {
            let chosen: Vec<(usize, usize)> = pick.iter().map(|&i| edges[i]).collect();
            let mut h = SimpleGraph::from_edges(g.n(), &chosen).expect("edges come from g");
            if !keep_isolated {
                h = h.strip_isolated();
            }
            let form = canon::canonical_form(&h);
            classes.entry(form.certificate).or_insert_with(|| h.relabel(&form.labeling));
            true
        });
    }
    let members = classes
        .into_values()
        .map(|graph| FamilyMember { graph, containment: Containment::InducedMono })
        .collect();
    Ok(PatternFamily::new_unchecked(format!("F({})", graph6::encode(g)), members))
}

/// A cut `(X, Y)` and a vertex set `W` with half the edges each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceWitness {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub cut_edges: usize,
    pub w: Vec<usize>,
    pub inside_edges: usize,
}

impl BalanceWitness {
    fn from_sets(g: &SimpleGraph, x: Row, w: Row) -> Self {
        let all = g.all_vertices();
        BalanceWitness {
            x: bits(x).collect(),
            y: bits(all & !x).collect(),
            cut_edges: g.edges_across(x),
            w: bits(w).collect(),
            inside_edges: g.edges_within(w),
        }
    }

    /// Recomputes both counts on `g` and checks they are balanced.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        let set = |vs: &[usize]| vs.iter().fold(0 as Row, |m, &v| m | bit(v));
        let (x, y, w) = (set(&self.x), set(&self.y), set(&self.w));
        let (lo, hi) = balance_range(g.edge_count());
        let ok = |c: usize| c >= lo && c <= hi;
        x & y == 0
            && x | y == g.all_vertices()
            && w & !g.all_vertices() == 0
            && g.edges_across(x) == self.cut_edges
            && g.edges_within(w) == self.inside_edges
            && ok(self.cut_edges)
            && ok(self.inside_edges)
    }
}

/// A balanceability witness if one exists. Subsets are scanned in increasing mask
/// order; a cut of exactly `⌊e/2⌋` edges is preferred.
pub fn char_bp_witness(g: &SimpleGraph) -> Result<Option<BalanceWitness>> {
    let n = g.n();
    if n > CHAR_BP_MAX {
        return Err(Error::OutOfRange(format!("subset scan supports at most {CHAR_BP_MAX} vertices, got {n}")));
    }
    let e = g.edge_count();
    if e == 0 {
        return Err(Error::InvalidParameter("balanceability needs at least one edge".into()));
    }
    let (lo, hi) = balance_range(e);
    let total: u64 = 1 << n;
    let mut cut_hi = None;
    let mut cut = None;
    // The cut of a set equals the cut of its complement: scanning sets without the
    // top vertex suffices.
    for s in 0..total.max(2) / 2 {
        let c = g.edges_across(s as Row);
        if c == lo {
            cut = Some(s as Row);
            break;
        }
        if c == hi && cut_hi.is_none() {
            cut_hi = Some(s as Row);
        }
    }
    let Some(x) = cut.or(cut_hi) else { return Ok(None) };
    let w = (0..total).find(|&s| {
        let c = g.edges_within(s as Row);
        c >= lo && c <= hi
    });
    Ok(w.map(|w| BalanceWitness::from_sets(g, x, w as Row)))
}

/// The explicit witness for `K_{t,t}` with parts `A = 0..t`, `B = t..2t`: `X` takes
/// `⌊t/2⌋` vertices from each side, `W` takes `t` (even `t`) or `t − 1` (odd `t`)
/// vertices of `A` and `⌈t/2⌉` of `B`.
pub fn ktt_witness(t: usize) -> Result<BalanceWitness> {
    let g = crate::graph::NamedGraph::CompleteBipartite(t, t).build()?;
    let from = |start: usize, count: usize| low_bits(count) << start;
    let x = from(0, t / 2) | from(t, t / 2);
    let a_part = if t.is_multiple_of(2) { t } else { t - 1 };
    let w = from(0, a_part) | from(t, t.div_ceil(2));
    Ok(BalanceWitness::from_sets(&g, x, w))
}

/// The edge-decomposition witness: `G − removed` splits into a star at `center`
/// with `leaves` and the matching `matching`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub removed: (usize, usize),
    pub center: usize,
    pub leaves: Vec<usize>,
    pub matching: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureWitnesses {
    /// `β ≤ k/2 + 1`.
    pub matching_bound: bool,
    pub decomposition: Option<Decomposition>,
    /// Every degree is at most 3 or exactly `k/2`.
    pub degree_dichotomy: bool,
    /// A maximum matching with an edge at the apex.
    pub apex_matching: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CkReport {
    pub k: usize,
    pub beta: usize,
    pub apex: Option<usize>,
    pub member: bool,
    pub structure: Option<StructureWitnesses>,
}

/// Membership of `g` in `C_k` for `k = e(g)`, with the structural witnesses when
/// it is a member.
pub fn in_ck(g: &SimpleGraph) -> Result<CkReport> {
    let k = g.edge_count();
    if k < 2 {
        return Err(Error::InvalidParameter(format!("C_k membership needs at least 2 edges, got {k}")));
    }
    let beta = matching_number(g);
    let apex = if k.is_multiple_of(2) { (0..g.n()).find(|&v| g.degree(v) == k / 2) } else { None };
    let member = k.is_multiple_of(2) && beta >= k / 2 && apex.is_some();
    let structure = match (member, apex) {
        (true, Some(x)) => Some(StructureWitnesses {
            matching_bound: beta <= k / 2 + 1,
            decomposition: find_decomposition(g),
            degree_dichotomy: (0..g.n()).all(|v| g.degree(v) <= 3 || g.degree(v) == k / 2),
            apex_matching: apex_matching(g, x),
        }),
        _ => None,
    };
    Ok(CkReport { k, beta, apex, member, structure })
}

/// Exhaustive search over the removed edge, the star center and its leaves.
pub fn find_decomposition(g: &SimpleGraph) -> Option<Decomposition> {
    let k = g.edge_count();
    if !k.is_multiple_of(2) || k < 2 {
        return None;
    }
    let half = k / 2;
    for (a, b) in g.edges() {
        let rest = g.without_edge(a, b);
        for center in 0..rest.n() {
            let nbrs: Vec<usize> = bits(rest.neighbors(center)).collect();
            if nbrs.len() < half {
                continue;
            }
            let mut found = None;
            crate::bits::for_each_combination(nbrs.len(), half, |pick| {
                let leaves: Vec<usize> = pick.iter().map(|&i| nbrs[i]).collect();
                let mut left = rest.clone();
                for &l in &leaves {
                    left.remove_edge(center, l);
                }
                let matching = left.edges();
                if is_matching(&left, &matching) {
                    found = Some(Decomposition { removed: (a, b), center, leaves, matching });
                    return false;
                }
                true
            });
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

impl Decomposition {
    /// The star and matching are edge-disjoint and together give `g − removed`.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        let k = g.edge_count();
        if !k.is_multiple_of(2) || !g.has_edge(self.removed.0, self.removed.1) {
            return false;
        }
        if self.leaves.len() != k / 2 || self.matching.len() + 1 != k / 2 {
            return false;
        }
        let mut rebuilt = SimpleGraph::empty(g.n());
        for &l in &self.leaves {
            if rebuilt.has_edge(self.center, l) || l == self.center {
                return false;
            }
            rebuilt.add_edge(self.center, l);
        }
        let mut used: Row = 0;
        for &(u, v) in &self.matching {
            if used & (bit(u) | bit(v)) != 0 || rebuilt.has_edge(u, v) || u == v {
                return false;
            }
            used |= bit(u) | bit(v);
            rebuilt.add_edge(u, v);
        }
        rebuilt == g.without_edge(self.removed.0, self.removed.1)
    }
}

/// A maximum matching containing an edge at `x`, obtained from any maximum
/// matching by swapping `yz` for `xy` when needed.
pub fn apex_matching(g: &SimpleGraph, x: usize) -> Option<Vec<(usize, usize)>> {
    let mut m = maximum_matching(g);
    let touches = |e: &(usize, usize)| e.0 == x || e.1 == x;
    if m.iter().any(touches) {
        return Some(m);
    }
    let nx = g.neighbors(x);
    let i = m.iter().position(|&(y, z)| nx & (bit(y) | bit(z)) != 0)?;
    let (y, z) = m[i];
    let y = if nx & bit(y) != 0 { y } else { z };
    m[i] = (x.min(y), x.max(y));
    m.sort_unstable();
    Some(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantBalReport {
    pub k: usize,
    pub holds: bool,
    /// For odd `k`, the edge whose removal lands in `C_{k−1}`.
    pub removed_edge: Option<(usize, usize)>,
    pub ck: Option<CkReport>,
}

/// Whether `g` has constant balancing number by the characterization: `g ∈ C_k`
/// for even `k`, `g − e ∈ C_{k−1}` for some edge `e` for odd `k`.
pub fn constant_bal_predicate(g: &SimpleGraph) -> Result<ConstantBalReport> {
    let k = g.edge_count();
    if k < 2 {
        return Err(Error::InvalidParameter(format!("needs at least 2 edges, got {k}")));
    }
    if k.is_multiple_of(2) {
        let r = in_ck(g)?;
        return Ok(ConstantBalReport { k, holds: r.member, removed_edge: None, ck: Some(r) });
    }
    for (u, v) in g.edges() {
        let r = in_ck(&g.without_edge(u, v))?;
        if r.member {
            return Ok(ConstantBalReport { k, holds: true, removed_edge: Some((u, v)), ck: Some(r) });
        }
    }
    Ok(ConstantBalReport { k, holds: false, removed_edge: None, ck: None })
}

/// Sum-of-two-squares test under both readings of "natural number".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoSquares {
    /// `t = a² + b²` with `a, b ≥ 1`.
    pub positive: bool,
    /// `t = a² + b²` with `a, b ≥ 0`.
    pub non_negative: bool,
}

pub fn two_squares(t: usize) -> TwoSquares {
    let mut positive = false;
    let mut non_negative = false;
    let mut a = 0;
    while a * a <= t {
        let rest = t - a * a;
        let b = (rest as f64).sqrt().round() as usize;
        for c in [b.saturating_sub(1), b, b + 1] {
            if c * c == rest {
                non_negative = true;
                if a >= 1 && c >= 1 {
                    positive = true;
                }
            }
        }
        a += 1;
    }
    TwoSquares { positive, non_negative }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(k: NamedGraph) -> SimpleGraph {
        k.build().unwrap()
    }

    #[test]
    fn half_family_examples() {
        let p3 = half_family(&named(NamedGraph::Path(3))).unwrap();
        assert_eq!(p3.members.len(), 1);
        assert_eq!(p3.members[0].graph, SimpleGraph::complete(2));
        assert_eq!(half_family(&SimpleGraph::complete(3)).unwrap().members.len(), 2);
        assert_eq!(half_family(&named(NamedGraph::Cycle(4))).unwrap().members.len(), 2);
        assert!(half_family(&SimpleGraph::empty(3)).is_err());
        let kept = half_family_with(&named(NamedGraph::Path(3)), true).unwrap();
        assert_eq!(kept.members[0].graph.n(), 3);
    }

    #[test]
    fn char_bp_examples() {
        let k33 = named(NamedGraph::CompleteBipartite(3, 3));
        let w = char_bp_witness(&k33).unwrap().unwrap();
        assert_eq!((w.cut_edges, w.inside_edges), (4, 4));
        assert!(w.verify(&k33));
        let k3 = SimpleGraph::complete(3);
        let two_k3 = SimpleGraph::disjoint_union(&[k3.clone(), k3]).unwrap();
        assert_eq!(char_bp_witness(&two_k3).unwrap(), None);
        let k2 = SimpleGraph::complete(2);
        let w = char_bp_witness(&k2).unwrap().unwrap();
        assert!(w.w.is_empty());
        assert!(char_bp_witness(&SimpleGraph::empty(25)).is_err());
    }

    #[test]
    fn ktt_examples() {
        for (t, cut, inside) in [(3, 4, 4), (2, 2, 2), (4, 8, 8)] {
            let w = ktt_witness(t).unwrap();
            assert_eq!((w.cut_edges, w.inside_edges), (cut, inside));
            assert!(w.verify(&named(NamedGraph::CompleteBipartite(t, t))));
        }
    }

    #[test]
    fn ck_examples() {
        let c4 = in_ck(&named(NamedGraph::Cycle(4))).unwrap();
        assert!(c4.member);
        let s = c4.structure.unwrap();
        assert!(s.matching_bound && s.degree_dichotomy);
        assert!(s.decomposition.unwrap().verify(&named(NamedGraph::Cycle(4))));
        let p3_2k2 = SimpleGraph::disjoint_union(&[named(NamedGraph::Path(3)), named(NamedGraph::Matching(2))]).unwrap();
        let r = in_ck(&p3_2k2).unwrap();
        assert!(r.member);
        assert_eq!(r.apex, Some(1));
        assert!(!in_ck(&SimpleGraph::complete(4)).unwrap().member);
    }

    #[test]
    fn constant_predicate_examples() {
        assert!(constant_bal_predicate(&named(NamedGraph::Cycle(4))).unwrap().holds);
        let p4 = constant_bal_predicate(&named(NamedGraph::Path(4))).unwrap();
        assert!(p4.holds);
        assert!(!constant_bal_predicate(&SimpleGraph::complete(4)).unwrap().holds);
        assert!(constant_bal_predicate(&SimpleGraph::complete(2)).is_err());
    }

    #[test]
    fn two_squares_examples() {
        assert_eq!(two_squares(2), TwoSquares { positive: true, non_negative: true });
        assert_eq!(two_squares(3), TwoSquares { positive: false, non_negative: false });
        assert_eq!(two_squares(4), TwoSquares { positive: false, non_negative: true });
        assert_eq!(two_squares(1), TwoSquares { positive: false, non_negative: true });
        assert_eq!(two_squares(25), TwoSquares { positive: true, non_negative: true });
    }
}
