//! The simple graph: simple braids joined by right multiplication with a
//! generator.

pub mod planarity;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::counting;
use crate::error::{Error, Result};
use crate::simple;
use crate::word::{BraidWord, CanonicalBraid, Canonicalizer};

pub use planarity::{Embedding, KuratowskiKind, KuratowskiWitness, Planarity, UndirectedGraph};

/// Largest strand count accepted by [`build_graph`].
pub const MAX_GRAPH_STRANDS: usize = 9;

/// Vertices are the simple braids ordered by (length, word); every edge
/// joins a braid of length `ℓ` with one of length `ℓ + 1`.
#[derive(Clone, Debug)]
pub struct LevelGraph {
    strands: usize,
    vertices: Vec<CanonicalBraid>,
    index: HashMap<BraidWord, usize>,
    graph: UndirectedGraph,
}

impl LevelGraph {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn vertices(&self) -> &[CanonicalBraid] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Edges as `(lower id, higher id)`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    pub fn level(&self, v: usize) -> usize {
        self.vertices[v].len()
    }

    pub fn index_of(&self, w: &BraidWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn undirected(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.graph.has_edge(a, b)
    }

    /// Number of vertices on each level `0, 1, …`.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::new();
        for v in &self.vertices {
            if sizes.len() <= v.len() {
                sizes.resize(v.len() + 1, 0);
            }
            sizes[v.len()] += 1;
        }
        sizes
    }

    /// Neighbours of `v` one level up.
    pub fn up_degree(&self, v: usize) -> usize {
        self.graph
            .neighbors(v)
            .filter(|&w| self.level(w) > self.level(v))
            .count()
    }
}

/// Builds `Γ` on `n` strands: vertices are the simple braids and
/// `{β, β·x_i}` is an edge whenever `β·x_i` is again simple.
pub fn build_graph(n: usize) -> Result<LevelGraph> {
    build_graph_with(n, &mut Canonicalizer::default())
}

pub fn build_graph_with(n: usize, canon: &mut Canonicalizer) -> Result<LevelGraph> {
    if n == 0 || n > MAX_GRAPH_STRANDS {
        return Err(Error::OutOfRange {
            what: "simple graph",
            detail: format!("n = {n} outside 1..={MAX_GRAPH_STRANDS}"),
        });
    }
    let mut vertices: Vec<CanonicalBraid> = simple::enumerate_simple(n)?
        .iter()
        .map(simple::SimpleBraidForm::to_canonical)
        .collect();
    vertices.sort();
    let index: HashMap<BraidWord, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.word().clone(), i))
        .collect();
    let mut edges = BTreeSet::new();
    for (u, beta) in vertices.iter().enumerate() {
        let mut targets = BTreeSet::new();
        for i in 1..n {
            let ext = beta.word().push_generator(i)?;
            let target = canon.canonical_form(&ext)?;
            if let Some(&v) = index.get(target.word()) {
                // right cancellativity: distinct generators give distinct products
                assert!(targets.insert(v), "{beta}·x_{i} repeats a neighbour");
                assert!(edges.insert((u.min(v), u.max(v))), "edge found twice");
            }
        }
    }
    let graph = UndirectedGraph::new(vertices.len(), edges)?;
    Ok(LevelGraph {
        strands: n,
        vertices,
        index,
        graph,
    })
}

/// `(n-1) s_{n,0} + (n-2) s_{n,1} + … + s_{n,n-2}`.
pub fn edge_count_formula(n: usize) -> u128 {
    if n < 2 {
        return 0;
    }
    let s = counting::s_table(n);
    (0..n - 1).map(|i| (n - 1 - i) as u128 * s[n][i]).sum()
}

/// Breadth-first reachability from the unit braid.
pub fn is_connected(g: &LevelGraph) -> bool {
    if g.vertex_count() == 0 {
        return true;
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[0] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for w in g.graph.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == g.vertex_count()
}

/// Exactly `n` nonempty levels `0..n` and every edge between adjacent levels.
pub fn is_n_partite_by_levels(g: &LevelGraph) -> bool {
    let sizes = g.level_sizes();
    sizes.len() == g.strands()
        && sizes.iter().all(|&s| s > 0)
        && g.edges()
            .iter()
            .all(|&(a, b)| g.level(a).abs_diff(g.level(b)) == 1)
}

/// Proper two-colouring by breadth-first search.
pub fn is_bipartite(g: &LevelGraph) -> bool {
    let n = g.vertex_count();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let c = colour[v].expect("coloured");
            for w in g.graph.neighbors(v) {
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Planarity decision with certificate.
pub fn is_planar(g: &LevelGraph) -> Planarity {
    planarity::planarity(&g.graph)
}

/// Whether the vertices and edges of `small` appear, with the same words,
/// as an induced subgraph of `large`.
pub fn embeds_as_induced_subgraph(small: &LevelGraph, large: &LevelGraph) -> bool {
    let map: Option<Vec<usize>> = small
        .vertices
        .iter()
        .map(|v| {
            let lifted = BraidWord::from_raw(large.strands, v.word().letters().to_vec());
            large.index_of(&lifted)
        })
        .collect();
    let Some(map) = map else { return false };
    let small_edges: BTreeSet<(usize, usize)> = small
        .edges()
        .iter()
        .map(|&(a, b)| (map[a].min(map[b]), map[a].max(map[b])))
        .collect();
    for (i, &a) in map.iter().enumerate() {
        for &b in &map[i + 1..] {
            let e = (a.min(b), a.max(b));
            if large.has_edge(a, b) != small_edges.contains(&e) {
                return false;
            }
        }
    }
    true
}

/// The nine paths of the `K_{3,3}` drawn for seven strands, as compact
/// labels (`"136"` is `x_1 x_3 x_6`). Branch sides are `{e, 136, 26}` and
/// `{1, 3, 6}`.
pub const SEVEN_STRAND_K33_PATHS: [&[&str]; 9] = [
    &["e", "1"],
    &["e", "3"],
    &["e", "6"],
    &["136", "13", "1"],
    &["136", "36", "3"],
    &["136", "16", "6"],
    &["26", "246", "24", "4", "14", "1"],
    &["26", "2", "25", "5", "35", "3"],
    &["26", "6"],
];

/// Result of checking the drawn `K_{3,3}` against the built graph.
#[derive(Clone, Debug, Serialize)]
pub struct DrawnK33Check {
    pub holds: bool,
    pub missing_edges: Vec<(String, String)>,
    pub witness: Option<KuratowskiWitness>,
    pub detail: Option<String>,
}

fn parse_label(strands: usize, label: &str) -> Result<BraidWord> {
    if label == "e" {
        return BraidWord::unit(strands);
    }
    let digits: Vec<usize> = label
        .chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::Parse(label.into()))
        })
        .collect::<Result<_>>()?;
    BraidWord::from_indices(strands, &digits)
}

/// Confirms every edge of [`SEVEN_STRAND_K33_PATHS`] in `g` and that the
/// paths form a `K_{3,3}` subdivision. Discrepancies are reported, not raised.
pub fn verify_drawn_k33(g: &LevelGraph) -> Result<DrawnK33Check> {
    if g.strands() != 7 {
        return Err(Error::OutOfRange {
            what: "drawn K3,3 check",
            detail: format!("needs the 7-strand graph, got n = {}", g.strands()),
        });
    }
    let mut canon = Canonicalizer::default();
    let mut lookup = |label: &str| -> Result<Option<usize>> {
        let w = parse_label(7, label)?;
        Ok(g.index_of(canon.canonical_form(&w)?.word()))
    };
    let mut missing = Vec::new();
    let mut paths = Vec::new();
    for labels in SEVEN_STRAND_K33_PATHS {
        let mut ids = Vec::new();
        for &l in labels {
            match lookup(l)? {
                Some(id) => ids.push(id),
                None => {
                    return Ok(DrawnK33Check {
                        holds: false,
                        missing_edges: Vec::new(),
                        witness: None,
                        detail: Some(format!("{l} is not a simple braid")),
                    })
                }
            }
        }
        for (pair, w) in labels.windows(2).zip(ids.windows(2)) {
            if !g.has_edge(w[0], w[1]) {
                missing.push((pair[0].to_string(), pair[1].to_string()));
            }
        }
        paths.push(ids);
    }
    let branch = ["e", "136", "26", "1", "3", "6"]
        .iter()
        .map(|l| lookup(l).map(|id| id.expect("branch labels are simple")))
        .collect::<Result<Vec<_>>>()?;
    let witness = KuratowskiWitness {
        kind: KuratowskiKind::K33,
        branch,
        paths,
    };
    let verdict = witness.verify(&g.graph);
    Ok(DrawnK33Check {
        holds: missing.is_empty() && verdict.is_ok(),
        missing_edges: missing,
        detail: verdict.err(),
        witness: Some(witness),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct JsonVertex {
    word: String,
    level: usize,
}

#[derive(Serialize)]
struct JsonGraph {
    n: usize,
    vertices: Vec<JsonVertex>,
    edges: Vec<[usize; 2]>,
}

/// DOT with one `rank=same` group per level, or JSON
/// `{n, vertices: [{word, level}], edges: [[i, j]]}`.
pub fn export_graph(g: &LevelGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => {
            let mut out = String::new();
            let _ = writeln!(out, "graph simple_braids_{} {{", g.strands());
            let mut level_start = 0;
            for size in g.level_sizes() {
                let names: Vec<String> = g.vertices[level_start..level_start + size]
                    .iter()
                    .map(|v| format!("\"{v}\";"))
                    .collect();
                let _ = writeln!(out, "  {{ rank=same; {} }}", names.join(" "));
                level_start += size;
            }
            for &(a, b) in g.edges() {
                let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.vertices[a], g.vertices[b]);
            }
            out.push_str("}\n");
            out
        }
        GraphFormat::Json => {
            let doc = JsonGraph {
                n: g.strands(),
                vertices: g
                    .vertices
                    .iter()
                    .map(|v| JsonVertex {
                        word: v.to_string(),
                        level: v.len(),
                    })
                    .collect(),
                edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            };
            serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_graphs() {
        let g = build_graph(2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        let g = build_graph(3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 4));
        assert_eq!(g.level_sizes(), vec![1, 2, 2]);
        let g = build_graph(1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        assert!(is_connected(&g));
        assert!(build_graph(10).is_err());
    }

    #[test]
    fn edge_formula_values() {
        assert_eq!(edge_count_formula(3), 4);
        assert_eq!(edge_count_formula(4), 14);
        assert_eq!(edge_count_formula(6), 145);
        assert_eq!(edge_count_formula(7), 444);
    }

    #[test]
    fn structure_n4() {
        let g = build_graph(4).unwrap();
        assert!(is_connected(&g));
        assert!(is_n_partite_by_levels(&g));
        assert!(is_bipartite(&g));
        assert_eq!(g.level_sizes(), vec![1, 3, 5, 4]);
        assert!(is_planar(&g).is_planar());
    }

    #[test]
    fn exports() {
        let dot = export_graph(&build_graph(2).unwrap(), GraphFormat::Dot);
        assert!(dot.contains("\"e\" -- \"1\""));
        let dot3 = export_graph(&build_graph(3).unwrap(), GraphFormat::Dot);
        assert_eq!(dot3.matches("rank=same").count(), 3);
        let json: serde_json::Value =
            serde_json::from_str(&export_graph(&build_graph(3).unwrap(), GraphFormat::Json))
                .unwrap();
        assert_eq!(json["n"], 3);
        assert_eq!(json["vertices"].as_array().unwrap().len(), 5);
        assert_eq!(json["edges"].as_array().unwrap().len(), 4);
        assert_eq!(json["vertices"][0]["word"], "e");
        assert!("svg".parse::<GraphFormat>().is_err());
    }

    #[test]
    fn label_parsing() {
        assert_eq!(parse_label(7, "136").unwrap().indices(), vec![1, 3, 6]);
        assert!(parse_label(7, "e").unwrap().is_empty());
        assert!(parse_label(7, "1x").is_err());
    }
}
