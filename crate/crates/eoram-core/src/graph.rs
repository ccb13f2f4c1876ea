//! Core data model: graphs, edge orders, vertex orders, colorings, embeddings.
//!
//! Vertices of an `n`-vertex graph are always `0..n`. Edges are stored as
//! `(u, v)` pairs with `u < v`, sorted lexicographically; the position of a
//! pair in that sorted list is its *edge index*. Edge orders and colorings are
//! keyed by edge index, which keeps every engine agnostic of how a particular
//! file format happens to list edges.

use crate::error::{Error, Result};
use itertools::Itertools;

/// Largest vertex count accepted by the factorial-time canonicalization and
/// isomorphism routines.
pub const CANON_VERTEX_LIMIT: usize = 10;

/// Color index used for "red" in two-colorings.
pub const RED: u8 = 0;
/// Color index used for "blue" in two-colorings.
pub const BLUE: u8 = 1;

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Endpoints are normalized to
    /// `u < v` and the list is sorted; loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for n = {n}"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self { n, edges: norm })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).tuple_combinations().collect();
        Self { n, edges }
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Self { n: a + b, edges }
    }

    /// Path `0 - 1 - … - n-1`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self { n, edges }
    }

    /// Cycle `0 - 1 - … - n-1 - 0` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::new(n, edges)
    }

    /// Perfect matching `{0,1}, {2,3}, …` on an even number of vertices.
    pub fn matching(n: usize) -> Result<Self> {
        if n == 0 || n % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "matching needs a positive even vertex count, got {n}"
            )));
        }
        let edges = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
        Ok(Self { n, edges })
    }

    /// Star with center `0` and the given number of leaves.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v)).collect();
        Self { n: leaves + 1, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs in edge-index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of edge `{u, v}` in the sorted edge list, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Neighbor lists indexed by vertex.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Vertex degrees.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Image of the graph under the bijection `perm` (`perm[v]` is the new
    /// label of `v`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self { n: self.n, edges }
    }
}

/// Graph together with a total order on its edges.
///
/// `rank[e]` is the position of edge index `e` in the order: rank `0` is the
/// `≺`-least edge. Every rank vector is a permutation of `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeOrderedGraph {
    graph: Graph,
    rank: Vec<usize>,
}

impl EdgeOrderedGraph {
    pub fn new(graph: Graph, rank: Vec<usize>) -> Result<Self> {
        if rank.len() != graph.m() {
            return Err(Error::DimensionMismatch(format!(
                "rank vector length {} != edge count {}",
                rank.len(),
                graph.m()
            )));
        }
        let mut seen = vec![false; rank.len()];
        for &r in &rank {
            if r >= rank.len() || seen[r] {
                return Err(Error::InvalidGraph(format!(
                    "rank vector is not a permutation of 0..{}",
                    rank.len()
                )));
            }
            seen[r] = true;
        }
        Ok(Self { graph, rank })
    }

    /// Builds an edge-ordered graph from edges listed in `≺`-increasing order,
    /// the on-disk representation.
    pub fn from_ordered_edges(
        n: usize,
        edges_in_order: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let listed: Vec<(usize, usize)> = edges_in_order.into_iter().collect();
        let graph = Graph::new(n, listed.iter().copied())?;
        let mut rank = vec![0; graph.m()];
        for (r, &(u, v)) in listed.iter().enumerate() {
            // edge_index is total here because `graph` was built from `listed`
            rank[graph.edge_index(u, v).unwrap()] = r;
        }
        EdgeOrderedGraph::new(graph, rank)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Rank vector indexed by edge index.
    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    pub fn rank_of(&self, edge_index: usize) -> usize {
        self.rank[edge_index]
    }

    /// Edge indices sorted by increasing rank.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.rank.len()];
        for (e, &r) in self.rank.iter().enumerate() {
            order[r] = e;
        }
        order
    }

    /// Edge pairs listed in `≺`-increasing order.
    pub fn edges_in_order(&self) -> Vec<(usize, usize)> {
        self.order()
            .into_iter()
            .map(|e| self.graph.edges()[e])
            .collect()
    }

    /// Image under a vertex bijection; edge ranks follow their edges.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let graph = self.graph.relabel(perm);
        let mut rank = vec![0; graph.m()];
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            let (a, b) = (perm[u], perm[v]);
            rank[graph.edge_index(a, b).unwrap()] = self.rank[e];
        }
        Self { graph, rank }
    }
}

/// Graph together with a total order on its vertices.
///
/// `vrank[v]` is the position of vertex `v` in the order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexOrderedGraph {
    graph: Graph,
    vrank: Vec<usize>,
}

impl VertexOrderedGraph {
    pub fn new(graph: Graph, vrank: Vec<usize>) -> Result<Self> {
        if vrank.len() != graph.n() {
            return Err(Error::DimensionMismatch(format!(
                "vertex rank length {} != vertex count {}",
                vrank.len(),
                graph.n()
            )));
        }
        let mut seen = vec![false; vrank.len()];
        for &r in &vrank {
            if r >= vrank.len() || seen[r] {
                return Err(Error::InvalidGraph(format!(
                    "vertex rank vector is not a permutation of 0..{}",
                    vrank.len()
                )));
            }
            seen[r] = true;
        }
        Ok(Self { graph, vrank })
    }

    /// Graph with the identity vertex order.
    pub fn with_identity_order(graph: Graph) -> Self {
        let vrank = (0..graph.n()).collect();
        Self { graph, vrank }
    }

    /// Builds a vertex-ordered graph from vertices listed in `<`-increasing
    /// order, the on-disk representation.
    pub fn from_vertex_order(graph: Graph, vertices_in_order: &[usize]) -> Result<Self> {
        let mut vrank = vec![0; vertices_in_order.len()];
        let mut seen = vec![false; vertices_in_order.len()];
        if vertices_in_order.len() != graph.n() {
            return Err(Error::DimensionMismatch(format!(
                "vertex order length {} != vertex count {}",
                vertices_in_order.len(),
                graph.n()
            )));
        }
        for (pos, &v) in vertices_in_order.iter().enumerate() {
            if v >= graph.n() || seen[v] {
                return Err(Error::InvalidGraph(
                    "vertex order is not a permutation".into(),
                ));
            }
            seen[v] = true;
            vrank[v] = pos;
        }
        Ok(Self { graph, vrank })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Vertex rank vector indexed by vertex.
    pub fn vrank(&self) -> &[usize] {
        &self.vrank
    }

    /// Vertices sorted by increasing rank.
    pub fn vertices_in_order(&self) -> Vec<usize> {
        let mut order = vec![0; self.vrank.len()];
        for (v, &r) in self.vrank.iter().enumerate() {
            order[r] = v;
        }
        order
    }

    /// Relabels vertices so the order becomes the identity `0 < 1 < …`.
    /// Two vertex-ordered graphs are isomorphic iff their normalizations are
    /// equal, since an order-preserving bijection is unique.
    pub fn normalized(&self) -> Self {
        let graph = self.graph.relabel(&self.vrank);
        Self::with_identity_order(graph)
    }
}

/// Order-preserving isomorphism test for vertex-ordered graphs.
pub fn are_isomorphic_vog(a: &VertexOrderedGraph, b: &VertexOrderedGraph) -> bool {
    a.normalized() == b.normalized()
}

/// Assignment of one of `k` colors to every edge of a host graph, keyed by
/// edge index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    k: usize,
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<u8>) -> Result<Self> {
        if k == 0 || k > 8 {
            return Err(Error::InvalidArgument(format!(
                "color count must be in 1..=8, got {k}"
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= k) {
            return Err(Error::InvalidArgument(format!(
                "color {c} out of range for k = {k}"
            )));
        }
        Ok(Self { k, colors })
    }

    /// All `m` edges in a single color.
    pub fn constant(m: usize, k: usize, color: u8) -> Result<Self> {
        Self::new(k, vec![color; m])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.colors.len()
    }

    /// Colors indexed by edge index.
    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, edge_index: usize) -> u8 {
        self.colors[edge_index]
    }

    /// Colors re-listed in `≺`-increasing rank order of `host`, the on-disk
    /// representation for edge-ordered hosts.
    pub fn to_rank_order(&self, host: &EdgeOrderedGraph) -> Vec<u8> {
        host.order().into_iter().map(|e| self.colors[e]).collect()
    }

    /// Inverse of [`Coloring::to_rank_order`].
    pub fn from_rank_order(host: &EdgeOrderedGraph, by_rank: &[u8], k: usize) -> Result<Self> {
        if by_rank.len() != host.m() {
            return Err(Error::DimensionMismatch(format!(
                "coloring length {} != host edge count {}",
                by_rank.len(),
                host.m()
            )));
        }
        let mut colors = vec![0; by_rank.len()];
        for (e, &r) in host.rank().iter().enumerate() {
            colors[e] = by_rank[r];
        }
        Self::new(k, colors)
    }
}

/// Map from pattern vertices to host vertices witnessing a subgraph copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `vertex_map[p]` is the host vertex carrying pattern vertex `p`.
    pub vertex_map: Vec<usize>,
}

impl Embedding {
    /// Host edge indices carrying the pattern's edges, in pattern edge-index
    /// order. Fails if some pattern edge does not land on a host edge.
    pub fn edge_images(&self, pattern: &Graph, host: &Graph) -> Result<Vec<usize>> {
        pattern
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (x, y) = (self.vertex_map[u], self.vertex_map[v]);
                host.edge_index(x, y).ok_or(Error::NotAnEdge { u: x, v: y })
            })
            .collect()
    }
}

/// Induced edge-ordered subgraph on a vertex subset.
///
/// `vertices` must be distinct and in range; the result relabels the `i`-th
/// smallest chosen vertex to `i` and compresses edge ranks, preserving their
/// relative order.
pub fn restrict(host: &EdgeOrderedGraph, vertices: &[usize]) -> Result<EdgeOrderedGraph> {
    let mut chosen = vertices.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    if chosen.len() != vertices.len() {
        return Err(Error::InvalidArgument("restrict: repeated vertex".into()));
    }
    if chosen.last().is_some_and(|&v| v >= host.n()) {
        return Err(Error::InvalidArgument("restrict: vertex out of range".into()));
    }
    let mut new_label = vec![usize::MAX; host.n()];
    for (i, &v) in chosen.iter().enumerate() {
        new_label[v] = i;
    }
    // Collect surviving edges with their old ranks, then compress ranks.
    let mut kept: Vec<(usize, (usize, usize))> = host
        .graph()
        .edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| new_label[u] != usize::MAX && new_label[v] != usize::MAX)
        .map(|(e, &(u, v))| (host.rank_of(e), (new_label[u], new_label[v])))
        .collect();
    kept.sort_unstable();
    EdgeOrderedGraph::from_ordered_edges(chosen.len(), kept.into_iter().map(|(_, e)| e))
}

/// Returns every permutation of `0..n` (helper for the factorial-time
/// routines; callers are responsible for keeping `n` small).
pub(crate) fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Plain graph isomorphism by brute force over vertex bijections, with a
/// degree-sequence precheck. Intended for the small patterns this crate
/// works with.
pub fn are_isomorphic_graph(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut deg_a = a.degrees();
    let mut deg_b = b.degrees();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let mut image = Vec::with_capacity(a.m());
    for perm in (0..a.n()).permutations(a.n()) {
        image.clear();
        image.extend(a.edges().iter().map(|&(u, v)| {
            let (x, y) = (perm[u], perm[v]);
            (x.min(y), x.max(y))
        }));
        image.sort_unstable();
        if image == b.edges() {
            return true;
        }
    }
    false
}

/// Isomorphism of edge-ordered graphs: a vertex bijection that maps the
/// `r`-th edge of `a` to the `r`-th edge of `b` for every rank `r`.
pub fn are_isomorphic_eog(a: &EdgeOrderedGraph, b: &EdgeOrderedGraph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut deg_a = a.graph().degrees();
    let mut deg_b = b.graph().degrees();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let a_edges = a.edges_in_order();
    let b_edges = b.edges_in_order();
    'perm: for perm in (0..a.n()).permutations(a.n()) {
        for (&(u, v), &(x, y)) in a_edges.iter().zip(&b_edges) {
            let (pu, pv) = (perm[u], perm[v]);
            if (pu.min(pv), pu.max(pv)) != (x, y) {
                continue 'perm;
            }
        }
        return true;
    }
    false
}

/// Canonical form of an edge-ordered graph: the lexicographically least
/// relabeled edge listing. Two graphs are isomorphic iff their keys are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub n: usize,
    /// Edge pairs of the least representative, in `≺`-increasing order.
    pub edges_in_order: Vec<(usize, usize)>,
}

impl CanonicalKey {
    /// Rebuilds the canonical representative graph from the key.
    pub fn to_graph(&self) -> EdgeOrderedGraph {
        EdgeOrderedGraph::from_ordered_edges(self.n, self.edges_in_order.iter().copied())
            .expect("canonical keys describe valid edge-ordered graphs")
    }
}

/// Computes the canonical key by brute force over all `n!` relabelings.
/// Rejects graphs with more than [`CANON_VERTEX_LIMIT`] vertices.
pub fn canonical_form_eog(g: &EdgeOrderedGraph) -> Result<CanonicalKey> {
    canonical_form_eog_with_limit(g, CANON_VERTEX_LIMIT)
}

/// [`canonical_form_eog`] with an explicit vertex-count budget.
pub fn canonical_form_eog_with_limit(g: &EdgeOrderedGraph, limit: usize) -> Result<CanonicalKey> {
    if g.n() > limit {
        return Err(Error::LimitExceeded { n: g.n(), limit });
    }
    let edges = g.edges_in_order();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut candidate = vec![(0, 0); edges.len()];
    for perm in (0..g.n()).permutations(g.n()) {
        for (slot, &(u, v)) in candidate.iter_mut().zip(&edges) {
            let (a, b) = (perm[u], perm[v]);
            *slot = (a.min(b), a.max(b));
        }
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate.clone());
        }
    }
    Ok(CanonicalKey {
        n: g.n(),
        edges_in_order: best.unwrap_or_default(),
    })
}
