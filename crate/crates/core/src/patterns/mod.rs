//! Monochromatic pattern detection: induced, weakly induced and balanced copies,
//! pattern families, and grid alignment.

mod balanced;
mod grid;
mod matcher;

pub use balanced::{balance_range, copy_table, find_balanced_copy, red_count, CopyTable, COPY_TABLE_MAX};
pub use grid::{grid_alignment, is_mono_clique, EXHAUSTIVE_COLUMNS};
pub use matcher::{complement_rows, EmbedMode, Matcher, MAX_PATTERN};

use serde::{Deserialize, Serialize};

use crate::bits::Row;
use crate::coloring::TwoColoring;
use crate::error::{Error, Result};
use crate::graph::{parse_graph_spec, NamedGraph, SimpleGraph};
use crate::graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Containment {
    InducedMono,
    WeaklyInducedMono,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub graph: SimpleGraph,
    pub containment: Containment,
}

/// Forbidden patterns, each matched as an induced or weakly induced
/// monochromatic subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternFamily {
    pub name: String,
    pub members: Vec<FamilyMember>,
}

impl PatternFamily {
    /// Validated family: no complete or edgeless member, weak members disconnected.
    pub fn new(name: impl Into<String>, members: Vec<FamilyMember>) -> Result<Self> {
        let fam = PatternFamily { name: name.into(), members };
        fam.validate()?;
        Ok(fam)
    }

    /// Family without the legality checks, for families such as `F(G)` whose
    /// members may be complete.
    pub fn new_unchecked(name: impl Into<String>, members: Vec<FamilyMember>) -> Self {
        PatternFamily { name: name.into(), members }
    }

    pub fn validate(&self) -> Result<()> {
        for (i, m) in self.members.iter().enumerate() {
            if m.graph.is_complete() || m.graph.is_edgeless() {
                return Err(Error::InvalidFamily(format!(
                    "member {i} ({}) is complete or edgeless",
                    graph6::encode(&m.graph)
                )));
            }
            if m.containment == Containment::WeaklyInducedMono && m.graph.is_connected() {
                return Err(Error::InvalidFamily(format!(
                    "weakly induced member {i} ({}) must be disconnected",
                    graph6::encode(&m.graph)
                )));
            }
            if m.graph.n() > MAX_PATTERN {
                return Err(Error::InvalidFamily(format!("member {i} has more than {MAX_PATTERN} vertices")));
            }
        }
        Ok(())
    }

    /// `F_{s,t} = {K_{s,t}, S_{t,t}}`.
    pub fn f(s: usize, t: usize) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidParameter("F:s,t needs positive s and t".into()));
        }
        Self::new(
            format!("F_{{{s},{t}}}"),
            vec![
                induced(NamedGraph::CompleteBipartite(s, t).build()?),
                induced(NamedGraph::CompleteSplit(t, t).build()?),
            ],
        )
    }

    /// `L_{r,s,t} = {rK_2} ∪ F_{s,t}`.
    pub fn l(r: usize, s: usize, t: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParameter("L:r,s,t needs r >= 2".into()));
        }
        let mut fam = Self::f(s, t)?;
        fam.members.insert(0, induced(NamedGraph::Matching(r).build()?));
        fam.name = format!("L_{{{r},{s},{t}}}");
        fam.validate()?;
        Ok(fam)
    }

    /// Parses `F:s,t`, `L:r,s,t`, `half:<graph spec>` or `file:<path>`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family `{spec}` lacks a `kind:` prefix")))?;
        let nums = || -> Result<Vec<usize>> {
            rest.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("`{x}`: {e}"))))
                .collect()
        };
        match kind {
            "F" => match nums()?.as_slice() {
                [s, t] => Self::f(*s, *t),
                _ => Err(Error::Parse("F takes two parameters".into())),
            },
            "L" => match nums()?.as_slice() {
                [r, s, t] => Self::l(*r, *s, *t),
                _ => Err(Error::Parse("L takes three parameters".into())),
            },
            "half" => crate::balance::half_family(&parse_graph_spec(rest)?),
            "file" => {
                let text = std::fs::read_to_string(rest).map_err(|e| Error::Parse(format!("{rest}: {e}")))?;
                Self::from_json_str(&text)
            }
            other => Err(Error::Parse(format!("unknown family kind `{other}`"))),
        }
    }

    /// `{"name": ..., "members": [{"graph": <spec>, "containment": "induced"|"weak"}]}`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct File {
            #[serde(default)]
            name: Option<String>,
            members: Vec<Member>,
        }
        #[derive(Deserialize)]
        struct Member {
            graph: String,
            #[serde(default)]
            containment: Option<String>,
        }
        let file: File = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut members = Vec::new();
        for m in file.members {
            let containment = match m.containment.as_deref() {
                None | Some("induced") | Some("induced-mono") => Containment::InducedMono,
                Some("weak") | Some("weakly-induced-mono") => Containment::WeaklyInducedMono,
                Some(other) => return Err(Error::Parse(format!("unknown containment `{other}`"))),
            };
            members.push(FamilyMember { graph: parse_graph_spec(&m.graph)?, containment });
        }
        Self::new(file.name.unwrap_or_else(|| "custom".into()), members)
    }

    pub fn compile(&self, weak_mode: EmbedMode) -> CompiledFamily {
        CompiledFamily {
            members: self
                .members
                .iter()
                .map(|m| {
                    let mode = match m.containment {
                        Containment::InducedMono => EmbedMode::Induced,
                        Containment::WeaklyInducedMono => weak_mode,
                    };
                    Matcher::new(&m.graph, mode)
                })
                .collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "members": self.members.iter().map(|m| serde_json::json!({
                "graph": format!("graph6:{}", graph6::encode(&m.graph)),
                "containment": match m.containment {
                    Containment::InducedMono => "induced",
                    Containment::WeaklyInducedMono => "weak",
                },
            })).collect::<Vec<_>>(),
        })
    }
}

fn induced(graph: SimpleGraph) -> FamilyMember {
    FamilyMember { graph, containment: Containment::InducedMono }
}

/// A family with its members compiled to matchers.
#[derive(Debug, Clone)]
pub struct CompiledFamily {
    members: Vec<Matcher>,
}

impl CompiledFamily {
    /// Whether no member appears in either color, given red and blue rows.
    #[inline]
    pub fn avoids(&self, red: &[Row], blue: &[Row]) -> bool {
        self.members.iter().all(|m| !m.exists(red, blue) && !m.exists(blue, red))
    }

    /// First violation in member order, red before blue.
    pub fn first_violation(&self, red: &[Row], blue: &[Row]) -> Option<(usize, WitnessColor, Vec<usize>)> {
        for (i, m) in self.members.iter().enumerate() {
            if let Some(img) = m.find(red, blue) {
                return Some((i, WitnessColor::Red, img));
            }
            if let Some(img) = m.find(blue, red) {
                return Some((i, WitnessColor::Blue, img));
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessColor {
    Red,
    Blue,
    Color(usize),
}

/// A located copy: `vertices[p]` is the image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub color: WitnessColor,
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub red_edges: Option<usize>,
}

impl PatternWitness {
    fn plain(color: WitnessColor, vertices: Vec<usize>) -> Self {
        PatternWitness { color, vertices, edges: None, red_edges: None }
    }

    /// Re-checks an induced witness: the witness color induces exactly `h` on the
    /// vertex list, under the listed correspondence.
    pub fn verify_induced(&self, c: &TwoColoring, h: &SimpleGraph) -> bool {
        let host = match self.color {
            WitnessColor::Red => c.red().clone(),
            WitnessColor::Blue => c.blue(),
            WitnessColor::Color(_) => return false,
        };
        verify_embedding(&host, h, &self.vertices, EmbedMode::Induced)
    }

    /// Re-checks a balanced-copy witness.
    pub fn verify_balanced(&self, c: &TwoColoring, g: &SimpleGraph) -> bool {
        if !verify_embedding(&SimpleGraph::complete(c.n()), g, &self.vertices, EmbedMode::Subgraph) {
            return false;
        }
        let r = red_count(c, g, &self.vertices);
        let (lo, hi) = balance_range(g.edge_count());
        self.red_edges == Some(r) && r >= lo && r <= hi
    }
}

/// Whether `image` embeds `h` into `host` under `mode`.
pub fn verify_embedding(host: &SimpleGraph, h: &SimpleGraph, image: &[usize], mode: EmbedMode) -> bool {
    if image.len() != h.n() || image.iter().any(|&x| x >= host.n()) {
        return false;
    }
    let mut sorted = image.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let comps = h.components();
    let comp_of = |v: usize| comps.iter().position(|&c| c & crate::bits::bit(v) != 0);
    for q in 0..h.n() {
        for p in 0..q {
            let (a, b) = (image[p], image[q]);
            if h.has_edge(p, q) {
                if !host.has_edge(a, b) {
                    return false;
                }
                continue;
            }
            let must_be_non = match mode {
                EmbedMode::Induced | EmbedMode::WeakStrict => true,
                EmbedMode::Subgraph => false,
                EmbedMode::Weak => comp_of(p) != comp_of(q),
            };
            if must_be_non && host.has_edge(a, b) {
                return false;
            }
        }
    }
    true
}

/// Vertex images of an induced copy of `h` in `host`.
pub fn find_induced(host: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    Matcher::new(h, EmbedMode::Induced).find(host.rows(), &complement_rows(host.rows()))
}

/// Vertex images of `h` as a (not necessarily induced) subgraph of `host`.
pub fn find_subgraph(host: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    Matcher::new(h, EmbedMode::Subgraph).find(host.rows(), &complement_rows(host.rows()))
}

/// Weakly induced copy: components as subgraphs, no host edges between component
/// images. `strict` additionally requires each component image to be induced.
pub fn find_weakly_induced(host: &SimpleGraph, h: &SimpleGraph, strict: bool) -> Option<Vec<usize>> {
    let mode = if strict { EmbedMode::WeakStrict } else { EmbedMode::Weak };
    Matcher::new(h, mode).find(host.rows(), &complement_rows(host.rows()))
}

/// Induced monochromatic copy of `h`, red searched first.
pub fn find_induced_mono(c: &TwoColoring, h: &SimpleGraph) -> Option<PatternWitness> {
    find_mono(c, h, EmbedMode::Induced)
}

/// Weakly induced monochromatic copy of `h`, red searched first.
pub fn find_weakly_induced_mono(c: &TwoColoring, h: &SimpleGraph, strict: bool) -> Option<PatternWitness> {
    find_mono(c, h, if strict { EmbedMode::WeakStrict } else { EmbedMode::Weak })
}

fn find_mono(c: &TwoColoring, h: &SimpleGraph, mode: EmbedMode) -> Option<PatternWitness> {
    let red = c.red().rows();
    let blue = complement_rows(red);
    let m = Matcher::new(h, mode);
    if let Some(img) = m.find(red, &blue) {
        return Some(PatternWitness::plain(WitnessColor::Red, img));
    }
    m.find(&blue, red).map(|img| PatternWitness::plain(WitnessColor::Blue, img))
}

/// Balanced copy of `g` with its edge list and red count.
pub fn find_balanced_witness(c: &TwoColoring, g: &SimpleGraph) -> Option<PatternWitness> {
    let image = find_balanced_copy(c, g)?;
    let edges = g.edges().iter().map(|&(a, b)| (image[a], image[b])).collect();
    let red = red_count(c, g, &image);
    Some(PatternWitness { color: WitnessColor::Red, vertices: image, edges: Some(edges), red_edges: Some(red) })
}

/// A family violation: member index and its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub member: usize,
    pub witness: PatternWitness,
}

/// `Ok(())` when `c` contains no member of `fam` under its containment mode,
/// otherwise the first violation. Weak members use the non-strict reading.
pub fn avoids_family(c: &TwoColoring, fam: &PatternFamily) -> std::result::Result<(), Violation> {
    avoids_family_with(c, fam, EmbedMode::Weak)
}

pub fn avoids_family_with(
    c: &TwoColoring,
    fam: &PatternFamily,
    weak_mode: EmbedMode,
) -> std::result::Result<(), Violation> {
    let red = c.red().rows();
    let blue = complement_rows(red);
    match fam.compile(weak_mode).first_violation(red, &blue) {
        None => Ok(()),
        Some((member, color, img)) => Err(Violation { member, witness: PatternWitness::plain(color, img) }),
    }
}
