//! Named property suites. Each run reports one line per property, plus the
//! canonical JSON of every certificate it computed; both are independent of the
//! worker count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::balance::{char_bp_witness, constant_bal_predicate, in_ck, ktt_witness, two_squares};
use crate::bits::choose2;
use crate::coloring::TwoColoring;
use crate::constructions::{
    incidence_bipartite, kst_bounds, layered_blue_edges, layered_coloring, multicolor_partition_coloring,
    BOUND_TOLERANCE,
};
use crate::enumerate::{canonical_level, enumerate_graphs};
use crate::error::{Error, Result};
use crate::graph::{NamedGraph, SimpleGraph};
use crate::graph6;
use crate::multicolor::{classify_colors, search_clique_grid, verify_multicolor_b};
use crate::params::{greedy_strong_edge_coloring, has_clique, is_induced_matching, is_matching, strong_edge_greedy_bound};
use crate::patterns::{
    avoids_family, complement_rows, find_balanced_copy, find_induced, find_subgraph, find_weakly_induced,
    verify_embedding, EmbedMode, PatternFamily,
};
use crate::reference;
use crate::search::{
    bipartite_ramsey_certificate, bipartite_ramsey_check, ex2_exact, ramsey_certificate, ramsey_check, verify_ex2,
    verify_zarankiewicz, zarankiewicz_exact, SearchOptions,
};

/// Suite names with one-line descriptions, in criterion order.
pub const SUITES: [(&str, &str); 12] = [
    ("ex2-degenerate", "ex2(K_n, F_{1,2}) = 0 for n = 4..8, raw enumeration"),
    ("layered-avoidance", "layered colorings avoid L_{r,s,t} for n = 10..16"),
    ("lower-bound", "ex2(K_n, L_{r,s,t}) is at least the layered coloring's smaller class"),
    ("ramsey", "R(3) = 6 and BR(2) = 5 with witnesses below the threshold"),
    ("zarankiewicz", "z(m,n;2,2) for m, n <= 6 against the counting bound"),
    ("strong-edge", "greedy strong edge colorings stay within 2D^2 - 2D + 1 classes"),
    ("balanceability", "balanceability witnesses for K_{t,t}, H_t, E_t and none for 2K_3"),
    ("lemma-structure", "structural witnesses for every member of C_k"),
    ("constant-regime", "ex2(K_n, L_{3,1,3}) agrees at n = 7 and n = 8"),
    ("incidence", "projective-plane incidence graphs are C_4-free and regular"),
    ("multicolor", "color classification and clique grid of the partition coloring"),
    ("detector-oracle", "fast detectors agree with brute-force scans on random instances"),
];

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random instances for sampling suites; defaults per suite.
    pub samples: Option<usize>,
    /// Restricts `lemma-structure` to one edge count.
    pub k: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0x5eed, samples: None, k: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub passed: bool,
    /// Instances examined.
    pub checked: u64,
    pub detail: Value,
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
    pub certificates: Vec<Value>,
}

#[derive(Default)]
struct Builder {
    properties: Vec<PropertyResult>,
    certificates: Vec<Value>,
}

impl Builder {
    fn check(&mut self, name: impl Into<String>, passed: bool, checked: u64, detail: Value, counterexample: Option<Value>) {
        self.properties.push(PropertyResult { name: name.into(), passed, checked, detail, counterexample });
    }

    fn finish(self, suite: &str) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            passed: self.properties.iter().all(|p| p.passed),
            properties: self.properties,
            certificates: self.certificates,
        }
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut b = Builder::default();
    match name {
        "ex2-degenerate" => ex2_degenerate(&mut b)?,
        "layered-avoidance" => layered_avoidance(&mut b)?,
        "lower-bound" => lower_bound(&mut b)?,
        "ramsey" => ramsey(&mut b)?,
        "zarankiewicz" => zarankiewicz(&mut b)?,
        "strong-edge" => strong_edge(&mut b, opts)?,
        "balanceability" => balanceability(&mut b)?,
        "lemma-structure" => lemma_structure(&mut b, opts)?,
        "constant-regime" => constant_regime(&mut b)?,
        "incidence" => incidence(&mut b)?,
        "multicolor" => multicolor(&mut b)?,
        "detector-oracle" => detector_oracle(&mut b, opts)?,
        other => {
            let known: Vec<&str> = SUITES.iter().map(|s| s.0).collect();
            return Err(Error::InvalidParameter(format!("unknown suite {other:?}; known: {}", known.join(", "))));
        }
    }
    Ok(b.finish(name))
}

fn coloring_json(c: &TwoColoring) -> Value {
    json!({ "n": c.n(), "red": graph6::encode(c.red()) })
}

fn ex2_degenerate(b: &mut Builder) -> Result<()> {
    let fam = PatternFamily::f(1, 2)?;
    for n in 4..=8 {
        let cert = ex2_exact(n, &fam, SearchOptions::raw())?;
        let ok = cert.value == 0 && verify_ex2(&cert, &fam, EmbedMode::Weak);
        b.check(format!("ex2(K_{n}, F_1,2) = 0"), ok, cert.nodes_searched, json!({ "value": cert.value }), None);
        b.certificates.push(cert.to_canonical_json());
    }
    Ok(())
}

fn layered_params() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for r in 2..=3 {
        for s in 2..=3 {
            for t in s..=4 {
                out.push((r, s, t));
            }
        }
    }
    out
}

fn layered_avoidance(b: &mut Builder) -> Result<()> {
    for (r, s, t) in layered_params() {
        let fam = PatternFamily::l(r, s, t)?;
        let mut bad = None;
        let mut checked = 0;
        for n in 10..=16 {
            let c = layered_coloring(n, r, s, t)?;
            checked += 1;
            let blue_ok = c.class_sizes().blue == layered_blue_edges(n, r, s, t);
            if let Err(v) = avoids_family(&c, &fam) {
                bad = Some(json!({ "n": n, "coloring": coloring_json(&c), "member": v.member, "vertices": v.witness.vertices }));
                break;
            }
            if !blue_ok {
                bad = Some(json!({ "n": n, "blue": c.class_sizes().blue, "formula": layered_blue_edges(n, r, s, t) }));
                break;
            }
        }
        b.check(format!("layered({r},{s},{t}) avoids L_{r},{s},{t}"), bad.is_none(), checked, json!({}), bad);
    }
    Ok(())
}

fn lower_bound(b: &mut Builder) -> Result<()> {
    for (r, s, t) in [(2, 2, 2), (2, 2, 3)] {
        let fam = PatternFamily::l(r, s, t)?;
        for n in 7..=8 {
            let cert = ex2_exact(n, &fam, SearchOptions::default())?;
            let lower = layered_coloring(n, r, s, t)?.class_sizes().min;
            let ok = cert.value >= lower && verify_ex2(&cert, &fam, EmbedMode::Weak);
            b.check(
                format!("ex2(K_{n}, L_{r},{s},{t}) >= layered min class"),
                ok,
                cert.nodes_searched,
                json!({ "value": cert.value, "construction": lower }),
                None,
            );
            b.certificates.push(cert.to_canonical_json());
        }
    }
    Ok(())
}

fn ramsey(b: &mut Builder) -> Result<()> {
    let at = ramsey_check(3, 6)?;
    b.check("every coloring of K_6 has a monochromatic triangle", at.holds, at.colorings_checked, json!({}), None);
    let below = ramsey_check(3, 5)?;
    let witness_ok = below.counterexample.as_ref().is_some_and(|c| {
        let red = c.red().rows();
        let all = c.red().all_vertices();
        !has_clique(red, all, 3) && !has_clique(&complement_rows(red), all, 3)
    });
    b.check(
        "K_5 has a coloring without monochromatic triangles",
        !below.holds && witness_ok,
        below.colorings_checked,
        json!({ "witness": below.counterexample.as_ref().map(coloring_json) }),
        None,
    );
    let (holds5, _, nodes5) = bipartite_ramsey_check(2, 5)?;
    b.check("every coloring of K_5,5 has a monochromatic K_2,2", holds5, nodes5, json!({}), None);
    let (holds4, w, nodes4) = bipartite_ramsey_check(2, 4)?;
    let w_ok = w.as_ref().is_some_and(|w| {
        let flipped = crate::certificate::Bipartite {
            adjacency: w.adjacency.iter().map(|r| !r & ((1 << w.cols) - 1)).collect(),
            ..w.clone()
        };
        !w.contains_kst(2, 2) && !flipped.contains_kst(2, 2)
    });
    b.check(
        "K_4,4 has a coloring without monochromatic K_2,2",
        !holds4 && w_ok,
        nodes4,
        json!({ "witness": w.map(|w| w.adjacency) }),
        None,
    );
    b.certificates.push(ramsey_certificate(3)?.to_canonical_json());
    b.certificates.push(bipartite_ramsey_certificate(2)?.to_canonical_json());
    Ok(())
}

fn zarankiewicz(b: &mut Builder) -> Result<()> {
    let mut strict_fail = None;
    let mut degenerate_fail = None;
    let mut checked = 0;
    for m in 1..=6 {
        for n in 1..=6 {
            let cert = zarankiewicz_exact(m, n, 2, 2)?;
            let bound = kst_bounds(m, n, 2, 2)?.zarankiewicz;
            checked += 1;
            let value = cert.value as f64;
            let valid = verify_zarankiewicz(&cert, 2, 2);
            if m >= 2 && n >= 2 {
                if (value >= bound - BOUND_TOLERANCE || !valid) && strict_fail.is_none() {
                    strict_fail = Some(json!({ "m": m, "n": n, "value": cert.value, "bound": bound }));
                }
            } else if ((value - bound).abs() > BOUND_TOLERANCE || !valid) && degenerate_fail.is_none() {
                degenerate_fail = Some(json!({ "m": m, "n": n, "value": cert.value, "bound": bound }));
            }
            b.certificates.push(cert.to_canonical_json());
        }
    }
    b.check("z(m,n;2,2) < bound for 2 <= m, n <= 6", strict_fail.is_none(), 25, json!({}), strict_fail);
    b.check("z(m,n;2,2) = bound when m = 1 or n = 1", degenerate_fail.is_none(), checked - 25, json!({}), degenerate_fail);
    let z44 = zarankiewicz_exact(4, 4, 2, 2)?.value;
    b.check("z(4,4;2,2) = 9", z44 == 9, 1, json!({ "value": z44 }), None);
    Ok(())
}

fn strong_edge_ok(g: &SimpleGraph) -> bool {
    let sec = greedy_strong_edge_coloring(g);
    let covered = sec.classes.len() == g.edge_count();
    covered
        && sec.class_count <= strong_edge_greedy_bound(g.max_degree())
        && (0..sec.class_count).all(|i| is_induced_matching(g, &sec.class_edges(i)))
}

fn strong_edge(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let mut checked = 0u64;
    let mut bad = None;
    for n in 0..=7 {
        for &mask in canonical_level(n)?.iter() {
            let g = SimpleGraph::from_edge_mask(n, mask);
            checked += 1;
            if bad.is_none() && !strong_edge_ok(&g) {
                bad = Some(json!(graph6::encode(&g)));
            }
        }
    }
    b.check("every graph on at most 7 vertices", bad.is_none(), checked, json!({}), bad);
    let mut checked = 0u64;
    let mut bad = None;
    for k in 1..=9 {
        for g in enumerate_graphs(k, true)? {
            checked += 1;
            if bad.is_none() && !strong_edge_ok(&g) {
                bad = Some(json!(graph6::encode(&g)));
            }
        }
    }
    b.check("every graph with at most 9 edges and no isolated vertex", bad.is_none(), checked, json!({}), bad);
    let samples = opts.samples.unwrap_or(10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut bad = None;
    for _ in 0..samples {
        let g = random_graph(&mut rng, 12);
        if bad.is_none() && !strong_edge_ok(&g) {
            bad = Some(json!(graph6::encode(&g)));
        }
    }
    b.check("random graphs on at most 12 vertices", bad.is_none(), samples as u64, json!({ "seed": opts.seed }), bad);
    Ok(())
}

fn balanceability(b: &mut Builder) -> Result<()> {
    for t in 2..=5 {
        for (label, named) in [
            ("K_t,t", NamedGraph::CompleteBipartite(t, t)),
            ("H_t", NamedGraph::StaircaseSplit(t)),
            ("E_t", NamedGraph::StaircaseBipartite(t)),
        ] {
            let g = named.build()?;
            let w = char_bp_witness(&g)?;
            let ok = w.as_ref().is_some_and(|w| w.verify(&g));
            b.check(
                format!("{label} balanceable, t = {t}"),
                ok,
                1,
                json!({ "edges": g.edge_count(), "witness": w }),
                None,
            );
        }
        let g = NamedGraph::CompleteBipartite(t, t).build()?;
        let w = ktt_witness(t)?;
        let half = t * t / 2;
        b.check(
            format!("explicit K_t,t witness, t = {t}"),
            w.verify(&g) && w.cut_edges == half && w.inside_edges == half,
            1,
            json!({ "cut": w.cut_edges, "inside": w.inside_edges }),
            None,
        );
    }
    let two_k3 = SimpleGraph::disjoint_union(&[SimpleGraph::complete(3), SimpleGraph::complete(3)])?;
    let none = char_bp_witness(&two_k3)?.is_none();
    b.check("2K_3 not balanceable", none, 1, json!({}), None);
    let mut rows = Vec::new();
    let mut agree = true;
    for t in 1..=6 {
        let g = SimpleGraph::disjoint_union(&[SimpleGraph::complete(t), SimpleGraph::complete(t)])?;
        if g.edge_count() == 0 {
            continue;
        }
        let bal = char_bp_witness(&g)?.is_some();
        let sq = two_squares(t);
        agree &= bal == sq.non_negative;
        rows.push(json!({ "t": t, "balanceable": bal, "positive": sq.positive, "non_negative": sq.non_negative }));
    }
    b.check("2K_t balanceable iff t is a sum of two squares (0 allowed)", agree, rows.len() as u64, json!(rows), None);
    Ok(())
}

fn lemma_structure(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let ks = opts.k.map_or(vec![4, 6, 8], |k| vec![k]);
    for k in ks {
        let mut members = 0u64;
        let mut total = 0u64;
        let mut bad = None;
        for g in enumerate_graphs(k, true)? {
            total += 1;
            let r = in_ck(&g)?;
            if !r.member {
                continue;
            }
            members += 1;
            let x = r.apex.expect("members have an apex");
            let s = r.structure.as_ref().expect("members carry witnesses");
            let beta = reference::matching_number(&g);
            let matching_ok = s.apex_matching.as_ref().is_some_and(|m| {
                m.len() == beta && is_matching(&g, m) && m.iter().any(|&(u, v)| u == x || v == x)
            });
            let ok = r.beta == beta
                && s.matching_bound
                && beta <= k / 2 + 1
                && s.decomposition.as_ref().is_some_and(|d| d.verify(&g))
                && s.degree_dichotomy
                && matching_ok;
            if !ok && bad.is_none() {
                bad = Some(json!({ "graph": graph6::encode(&g), "report": r }));
            }
        }
        b.check(
            format!("C_{k} members carry verified witnesses"),
            bad.is_none(),
            members,
            json!({ "graphs": total, "members": members }),
            bad,
        );
    }
    let p4 = NamedGraph::Path(4).build()?;
    let c4 = NamedGraph::Cycle(4).build()?;
    let k4 = SimpleGraph::complete(4);
    let ok = constant_bal_predicate(&p4)?.holds && constant_bal_predicate(&c4)?.holds && !constant_bal_predicate(&k4)?.holds;
    b.check("constant balancing predicate on P_4, C_4, K_4", ok, 3, json!({}), None);
    Ok(())
}

fn constant_regime(b: &mut Builder) -> Result<()> {
    let fam = PatternFamily::l(3, 1, 3)?;
    let mut values = Vec::new();
    for n in 6..=8 {
        let cert = ex2_exact(n, &fam, SearchOptions::default())?;
        let ok = verify_ex2(&cert, &fam, EmbedMode::Weak);
        b.check(format!("ex2(K_{n}, L_3,1,3) certificate verifies"), ok, cert.nodes_searched, json!({ "value": cert.value }), None);
        values.push((n, cert.value, choose2(n) / 2));
        b.certificates.push(cert.to_canonical_json());
    }
    let same = values[1].1 == values[2].1;
    b.check(
        "ex2(K_7, L_3,1,3) = ex2(K_8, L_3,1,3)",
        same,
        2,
        json!(values.iter().map(|(n, v, half)| json!({ "n": n, "value": v, "half_edges": half })).collect::<Vec<_>>()),
        None,
    );
    Ok(())
}

fn incidence(b: &mut Builder) -> Result<()> {
    let c4 = NamedGraph::Cycle(4).build()?;
    for q in [2, 3] {
        let g = incidence_bipartite(q)?;
        let points = q * q + q + 1;
        let regular = (0..g.n()).all(|v| g.degree(v) == q + 1);
        let free = find_subgraph(&g, &c4).is_none();
        let ok = regular && free && g.n() == 2 * points && g.edge_count() == (q + 1) * points;
        b.check(
            format!("PG(2,{q}) incidence graph"),
            ok,
            1,
            json!({ "vertices": g.n(), "edges": g.edge_count(), "regular": regular, "c4_free": free }),
            None,
        );
    }
    Ok(())
}

fn multicolor(b: &mut Builder) -> Result<()> {
    let c = multicolor_partition_coloring(12, 3)?;
    let class = classify_colors(&c, 2)?;
    let ok = class.a_f.iter().eq([3].iter()) && class.b_f.iter().eq([1, 2].iter()) && class.verify(&c);
    b.check("partition coloring (12,3): A_f = {3}, B_f = {1,2}", ok, 1, json!(class), None);
    let grid = search_clique_grid(&c, 2)?;
    let verified = match &grid {
        Some(g) => verify_multicolor_b(&c, 2, g)?,
        None => false,
    };
    b.check("clique grid found and verified", verified, 1, json!({ "cliques": grid }), None);
    Ok(())
}

/// A random graph on `1..=max_n` vertices with a random edge density.
fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> SimpleGraph {
    let n = rng.gen_range(1..=max_n);
    let mut g = SimpleGraph::empty(n);
    let p: f64 = rng.gen_range(0.1..0.9);
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn detector_oracle(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let samples = opts.samples.unwrap_or(10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut bad: [Option<Value>; 4] = Default::default();
    let names = ["induced", "weakly induced", "weakly induced (strict)", "balanced copy"];
    for _ in 0..samples {
        let host = random_graph(&mut rng, 7);
        let h = random_graph(&mut rng, 5);
        let case = || json!({ "host": graph6::encode(&host), "pattern": graph6::encode(&h) });
        let fast = find_induced(&host, &h);
        let ok = fast.is_some() == reference::has_induced(&host, &h)
            && fast.as_ref().is_none_or(|img| verify_embedding(&host, &h, img, EmbedMode::Induced));
        if !ok && bad[0].is_none() {
            bad[0] = Some(case());
        }
        for (slot, strict) in [(1, false), (2, true)] {
            let fast = find_weakly_induced(&host, &h, strict);
            let mode = if strict { EmbedMode::WeakStrict } else { EmbedMode::Weak };
            let ok = fast.is_some() == reference::has_weakly_induced(&host, &h, strict)
                && fast.as_ref().is_none_or(|img| verify_embedding(&host, &h, img, mode));
            if !ok && bad[slot].is_none() {
                bad[slot] = Some(case());
            }
        }
        if h.edge_count() > 0 {
            let c = TwoColoring::from_red(host.n(), host.clone())?;
            let fast = find_balanced_copy(&c, &h);
            let ok = fast.is_some() == reference::has_balanced_copy(&c, &h);
            if !ok && bad[3].is_none() {
                bad[3] = Some(case());
            }
        }
    }
    for (name, bad) in names.iter().zip(bad) {
        b.check(
            format!("{name} detector agrees with brute force"),
            bad.is_none(),
            samples as u64,
            json!({ "seed": opts.seed }),
            bad,
        );
    }
    Ok(())
}
