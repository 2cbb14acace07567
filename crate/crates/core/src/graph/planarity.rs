//! Left-right planarity test with certificates.
//!
//! Planar inputs yield a rotation system (clockwise neighbour order at
//! every vertex) whose face count satisfies Euler's formula; nonplanar
//! inputs yield a subdivision of `K_5` or `K_{3,3}` found by shrinking the
//! edge set to a minimal nonplanar subgraph.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    edge_set: HashSet<(usize, usize)>,
}

impl UndirectedGraph {
    /// Normalises each edge to `(min, max)`; rejects loops and repeats.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        let mut edge_set = HashSet::new();
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Invalid(format!("edge ({a},{b}) outside 0..{n}")));
            }
            if a == b {
                return Err(Error::Invalid(format!("self-loop at {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !edge_set.insert(e) {
                return Err(Error::Invalid(format!("duplicate edge ({},{})", e.0, e.1)));
            }
            let id = list.len();
            list.push(e);
            adj[e.0].push((e.1, id));
            adj[e.1].push((e.0, id));
        }
        Ok(Self {
            n,
            edges: list,
            adj,
            edge_set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_set.contains(&(a.min(b), a.max(b)))
    }

    /// Connected components, each a sorted vertex list.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn subgraph(&self, keep: &[(usize, usize)]) -> UndirectedGraph {
        UndirectedGraph::new(self.n, keep.iter().copied()).expect("subset of a simple graph")
    }
}

/// Clockwise neighbour order at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

/// Euler characteristic bookkeeping for one connected component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentEuler {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl ComponentEuler {
    pub fn characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

impl Embedding {
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Whether the rotation at every vertex lists exactly its neighbours.
    pub fn is_consistent_with(&self, g: &UndirectedGraph) -> bool {
        if self.rotation.len() != g.vertex_count() {
            return false;
        }
        (0..g.vertex_count()).all(|v| {
            let mut a = self.rotation[v].clone();
            let mut b: Vec<usize> = g.neighbors(v).collect();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        })
    }

    /// Faces traced per component; an isolated vertex counts one face.
    pub fn euler_by_component(&self, g: &UndirectedGraph) -> Vec<ComponentEuler> {
        let position: Vec<HashMap<usize, usize>> = self
            .rotation
            .iter()
            .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        let mut visited: HashSet<(usize, usize)> = HashSet::new();
        let mut out = Vec::new();
        for comp in g.components() {
            let edges = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            let mut faces = 0;
            for &u in &comp {
                for &v in &self.rotation[u] {
                    if visited.contains(&(u, v)) {
                        continue;
                    }
                    faces += 1;
                    let (mut a, mut b) = (u, v);
                    while visited.insert((a, b)) {
                        let rot = &self.rotation[b];
                        let next = rot[(position[b][&a] + 1) % rot.len()];
                        (a, b) = (b, next);
                    }
                }
            }
            out.push(ComponentEuler {
                vertices: comp.len(),
                edges,
                faces: faces.max(1),
            });
        }
        out
    }

    /// Consistent with the graph and `V - E + F = 2` on every component.
    pub fn is_valid_planar_embedding(&self, g: &UndirectedGraph) -> bool {
        self.is_consistent_with(g)
            && self
                .euler_by_component(g)
                .iter()
                .all(|c| c.characteristic() == 2)
    }

    fn insert_after(&mut self, start: usize, end: usize, reference: usize) {
        let rot = &mut self.rotation[start];
        let pos = rot
            .iter()
            .position(|&x| x == reference)
            .expect("reference neighbour");
        rot.insert(pos + 1, end);
    }

    fn insert_before(&mut self, start: usize, end: usize, reference: usize) {
        let rot = &mut self.rotation[start];
        let pos = rot
            .iter()
            .position(|&x| x == reference)
            .expect("reference neighbour");
        rot.insert(pos, end);
    }

    fn insert_first(&mut self, start: usize, end: usize) {
        self.rotation[start].insert(0, end);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    #[serde(rename = "K5")]
    K5,
    #[serde(rename = "K3,3")]
    K33,
}

impl fmt::Display for KuratowskiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KuratowskiKind::K5 => "K5",
            KuratowskiKind::K33 => "K3,3",
        })
    }
}

/// A subdivision of `K_5` or `K_{3,3}` inside a graph.
///
/// For `K_{3,3}` the first three branch vertices form one side.
/// Every path runs between two branch vertices through degree-two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl KuratowskiWitness {
    /// Checks the witness against `g` without trusting how it was found.
    pub fn verify(&self, g: &UndirectedGraph) -> std::result::Result<(), String> {
        let branch: HashSet<usize> = self.branch.iter().copied().collect();
        let expected_pairs: HashSet<(usize, usize)> = match self.kind {
            KuratowskiKind::K5 => {
                if self.branch.len() != 5 {
                    return Err("K5 needs 5 branch vertices".into());
                }
                let b = &self.branch;
                (0..5)
                    .flat_map(|i| (i + 1..5).map(move |j| (b[i].min(b[j]), b[i].max(b[j]))))
                    .collect()
            }
            KuratowskiKind::K33 => {
                if self.branch.len() != 6 {
                    return Err("K3,3 needs 6 branch vertices".into());
                }
                let b = &self.branch;
                (0..3)
                    .flat_map(|i| (3..6).map(move |j| (b[i].min(b[j]), b[i].max(b[j]))))
                    .collect()
            }
        };
        if branch.len() != self.branch.len() {
            return Err("repeated branch vertex".into());
        }
        if branch.iter().any(|&v| v >= g.vertex_count()) {
            return Err("branch vertex outside graph".into());
        }
        let mut covered = HashSet::new();
        let mut interior_used = HashSet::new();
        for path in &self.paths {
            if path.len() < 2 {
                return Err(format!("path {path:?} too short"));
            }
            let (a, b) = (path[0], path[path.len() - 1]);
            let pair = (a.min(b), a.max(b));
            if !expected_pairs.contains(&pair) {
                return Err(format!("path {path:?} joins a pair outside the pattern"));
            }
            if !covered.insert(pair) {
                return Err(format!("pair {pair:?} joined twice"));
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(format!("edge ({},{}) missing from graph", w[0], w[1]));
                }
            }
            for &v in &path[1..path.len() - 1] {
                if branch.contains(&v) || !interior_used.insert(v) {
                    return Err(format!("path {path:?} is not internally disjoint"));
                }
            }
        }
        if covered.len() != expected_pairs.len() {
            return Err("some branch pair is not joined".into());
        }
        Ok(())
    }

    /// Reads the witness off a subgraph in which all vertices have degree
    /// 0 or 2 except the branch vertices.
    fn from_subdivision(g: &UndirectedGraph) -> Option<Self> {
        let branch: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| g.degree(v) >= 3)
            .collect();
        if (0..g.vertex_count()).any(|v| g.degree(v) == 1) {
            return None;
        }
        let is_branch: HashSet<usize> = branch.iter().copied().collect();
        let mut paths = Vec::new();
        for &b in &branch {
            for first in g.neighbors(b) {
                let mut path = vec![b, first];
                let (mut prev, mut cur) = (b, first);
                while !is_branch.contains(&cur) {
                    let next = g.neighbors(cur).find(|&x| x != prev)?;
                    path.push(next);
                    (prev, cur) = (cur, next);
                }
                if cur == b {
                    return None;
                }
                // keep one orientation of each path
                if b < cur {
                    paths.push(path);
                }
            }
        }
        paths.sort();
        let kind = match (
            branch.len(),
            branch.iter().all(|&v| g.degree(v) == 4),
            branch.iter().all(|&v| g.degree(v) == 3),
        ) {
            (5, true, _) => KuratowskiKind::K5,
            (6, _, true) => KuratowskiKind::K33,
            _ => return None,
        };
        let ordered_branch = match kind {
            KuratowskiKind::K5 => branch,
            KuratowskiKind::K33 => {
                let joined: HashSet<(usize, usize)> =
                    paths.iter().map(|p| (p[0], p[p.len() - 1])).collect();
                let anchor = branch[0];
                let mut side_a = vec![anchor];
                let mut side_b = Vec::new();
                for &v in &branch[1..] {
                    if joined.contains(&(anchor.min(v), anchor.max(v))) {
                        side_b.push(v);
                    } else {
                        side_a.push(v);
                    }
                }
                side_a.extend(side_b);
                side_a
            }
        };
        let witness = Self {
            kind,
            branch: ordered_branch,
            paths,
        };
        witness.verify(g).ok().map(|_| witness)
    }
}

/// Outcome of a planarity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    /// Re-checks the certificate against `g`.
    pub fn certificate_holds(&self, g: &UndirectedGraph) -> bool {
        match self {
            Planarity::Planar(emb) => emb.is_valid_planar_embedding(g),
            Planarity::NonPlanar(w) => w.verify(g).is_ok(),
        }
    }
}

/// Planarity decision without a certificate.
pub fn is_planar(g: &UndirectedGraph) -> bool {
    LrState::new(g).run(false).is_some()
}

/// Planarity decision with an embedding or a Kuratowski subdivision.
pub fn planarity(g: &UndirectedGraph) -> Planarity {
    if let Some(emb) = LrState::new(g).run(true) {
        return Planarity::Planar(emb);
    }
    let minimal = minimal_nonplanar_edges(g);
    let sub = g.subgraph(&minimal);
    let witness = KuratowskiWitness::from_subdivision(&sub)
        .expect("a minimal nonplanar graph is a Kuratowski subdivision");
    Planarity::NonPlanar(witness)
}

/// Shrinks a nonplanar edge set to an inclusion-minimal nonplanar one.
/// Edges are dropped in halving chunks, ending with single-edge passes.
pub fn minimal_nonplanar_edges(g: &UndirectedGraph) -> Vec<(usize, usize)> {
    let nonplanar = |edges: &[(usize, usize)]| !is_planar(&g.subgraph(edges));
    let mut edges = g.edges().to_vec();
    debug_assert!(nonplanar(&edges));
    let mut chunk = (edges.len() / 2).max(1);
    loop {
        let mut i = 0;
        while i < edges.len() {
            let end = (i + chunk).min(edges.len());
            let trial: Vec<(usize, usize)> =
                edges[..i].iter().chain(&edges[end..]).copied().collect();
            if nonplanar(&trial) {
                edges = trial;
            } else {
                i = end;
            }
        }
        if chunk == 1 {
            break;
        }
        chunk /= 2;
    }
    edges
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: u64,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// State of the left-right algorithm. Edges are oriented during the first
/// depth-first pass; all per-edge arrays are indexed by edge id.
struct LrState<'g> {
    g: &'g UndirectedGraph,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    roots: Vec<usize>,
    oriented: Vec<bool>,
    source: Vec<usize>,
    target: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    ordered: Vec<Vec<usize>>,
    refs: Vec<Option<usize>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<Option<u64>>,
    lowpt_edge: Vec<Option<usize>>,
    next_id: u64,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    embedding: Embedding,
}

impl<'g> LrState<'g> {
    fn new(g: &'g UndirectedGraph) -> Self {
        let (n, m) = (g.vertex_count(), g.edge_count());
        Self {
            g,
            height: vec![None; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            oriented: vec![false; m],
            source: vec![0; m],
            target: vec![0; m],
            out_edges: vec![Vec::new(); n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            ordered: vec![Vec::new(); n],
            refs: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![None; m],
            lowpt_edge: vec![None; m],
            next_id: 0,
            left_ref: vec![usize::MAX; n],
            right_ref: vec![usize::MAX; n],
            embedding: Embedding {
                rotation: vec![Vec::new(); n],
            },
        }
    }

    fn run(mut self, want_embedding: bool) -> Option<Embedding> {
        let (n, m) = (self.g.vertex_count(), self.g.edge_count());
        if n > 2 && m > 3 * n - 6 {
            return None;
        }
        for v in 0..n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..n {
            let mut out = self.out_edges[v].clone();
            out.sort_by_key(|&e| self.nesting[e]);
            self.ordered[v] = out;
        }
        for r in self.roots.clone() {
            if !self.test(r) {
                return None;
            }
        }
        if !want_embedding {
            return Some(self.embedding);
        }
        for e in 0..m {
            self.nesting[e] *= self.sign(e);
        }
        for v in 0..n {
            let mut out = self.out_edges[v].clone();
            out.sort_by_key(|&e| self.nesting[e]);
            self.embedding.rotation[v] = out.iter().map(|&e| self.target[e]).collect();
            self.ordered[v] = out;
        }
        for r in self.roots.clone() {
            self.embed(r);
        }
        Some(self.embedding)
    }

    fn height_of(&self, v: usize) -> usize {
        self.height[v].expect("visited vertex")
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        let hv = self.height_of(v);
        for idx in 0..self.g.adj[v].len() {
            let (w, e) = self.g.adj[v][idx];
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            self.source[e] = v;
            self.target[e] = w;
            self.out_edges[v].push(e);
            self.lowpt[e] = hv;
            self.lowpt2[e] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(e);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[e] = hw,
            }
            self.nesting[e] = 2 * self.lowpt[e] as i64;
            if self.lowpt2[e] < hv {
                // chordal edge
                self.nesting[e] += 1;
            }
            if let Some(pe) = parent {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn top_id(&self) -> Option<u64> {
        self.stack.last().map(|p| p.id)
    }

    fn push_pair(&mut self, left: Interval, right: Interval) {
        let id = self.next_id;
        self.next_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && i.high.is_some_and(|h| self.lowpt[h] > self.lowpt[b])
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => usize::MAX,
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let hv = self.height_of(v);
        let ordered = self.ordered[v].clone();
        for &ei in &ordered {
            let w = self.target[ei];
            self.stack_bottom[ei] = self.top_id();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.push_pair(
                    Interval::default(),
                    Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                );
            }
            if self.lowpt[ei] < hv {
                let pe = parent.expect("return edge below a non-root");
                if ei == ordered[0] {
                    self.lowpt_edge[pe] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, pe) {
                    return false;
                }
            }
        }
        if let Some(pe) = parent {
            self.remove_back_edges(pe);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p_left = Interval::default();
        let mut p_right = Interval::default();
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("nonempty interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p_right.is_empty() {
                    p_right = q.right;
                } else if let Some(pl) = p_right.low {
                    self.refs[pl] = q.right.high;
                }
                p_right.low = q.right.low;
            } else {
                self.refs[q_low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("nonempty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p_right.low {
                self.refs[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p_right.low = q.right.low;
            }
            if p_left.is_empty() {
                p_left = q.left;
            } else if let Some(pl) = p_left.low {
                self.refs[pl] = q.left.high;
            }
            p_left.low = q.left.low;
        }
        if !(p_left.is_empty() && p_right.is_empty()) {
            self.push_pair(p_left, p_right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.source[e];
        let hu = self.height_of(u);
        while let Some(top) = self.stack.last().copied() {
            if self.lowest(&top) != hu {
                break;
            }
            let p = self.stack.pop().expect("nonempty");
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.target[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.target[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            let top = *self
                .stack
                .last()
                .expect("return edge keeps a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = Vec::new();
        let mut cur = e;
        while let Some(r) = self.refs[cur] {
            chain.push(cur);
            cur = r;
        }
        let mut s = self.side[cur];
        for &x in chain.iter().rev() {
            self.side[x] *= s;
            self.refs[x] = None;
            s = self.side[x];
        }
        self.side[e]
    }

    fn embed(&mut self, v: usize) {
        let ordered = self.ordered[v].clone();
        for ei in ordered {
            let w = self.target[ei];
            if self.parent_edge[w] == Some(ei) {
                self.embedding.insert_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embed(w);
            } else if self.side[ei] == 1 {
                let r = self.right_ref[w];
                self.embedding.insert_after(w, v, r);
            } else {
                let l = self.left_ref[w];
                self.embedding.insert_before(w, v, l);
                self.left_ref[w] = v;
            }
        }
    }
}
