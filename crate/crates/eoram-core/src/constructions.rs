//! Named edge orderings and ordered-graph constructions.
//!
//! A *vertex bijection* `f` is given as a slice with `f[v]` = the position of
//! vertex `v` (0-based). The lexicographic ordering induced by `f` sorts edges
//! `{u, v}` by the pair `(min(f[u], f[v]), max(f[u], f[v]))`; the
//! max-lexicographic ordering sorts by the same minimum but *descending*
//! maximum, so each min-vertex interval is reversed. A bijection whose induced
//! lexicographic ordering reproduces a given edge order is a *consistent map*
//! of that edge-ordered graph.

use crate::error::{Error, Result};
use crate::graph::{
    all_permutations, EdgeOrderedGraph, Graph, VertexOrderedGraph, CANON_VERTEX_LIMIT,
};

fn check_bijection(n: usize, f: &[usize]) -> Result<()> {
    if f.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "bijection length {} != vertex count {n}",
            f.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in f {
        if p >= n || seen[p] {
            return Err(Error::InvalidArgument(
                "vertex bijection is not a permutation".into(),
            ));
        }
        seen[p] = true;
    }
    Ok(())
}

fn ordering_by_key(
    g: &Graph,
    f: &[usize],
    key: impl Fn(usize, usize) -> (usize, usize),
) -> Result<EdgeOrderedGraph> {
    check_bijection(g.n(), f)?;
    let mut keyed: Vec<((usize, usize), usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            let (a, b) = (f[u].min(f[v]), f[u].max(f[v]));
            (key(a, b), e)
        })
        .collect();
    keyed.sort_unstable();
    let mut rank = vec![0; g.m()];
    for (r, &(_, e)) in keyed.iter().enumerate() {
        rank[e] = r;
    }
    EdgeOrderedGraph::new(g.clone(), rank)
}

/// Lexicographic edge ordering of `g` induced by the vertex bijection `f`.
pub fn lex_ordering(g: &Graph, f: &[usize]) -> Result<EdgeOrderedGraph> {
    ordering_by_key(g, f, |a, b| (a, b))
}

/// Max-lexicographic edge ordering: same min-vertex groups as lexicographic,
/// but each group is traversed in decreasing max endpoint.
pub fn max_lex_ordering(g: &Graph, f: &[usize]) -> Result<EdgeOrderedGraph> {
    // b <= n, so n - b is a safe descending key.
    let n = g.n();
    ordering_by_key(g, f, move |a, b| (a, n - b))
}

/// Reverses an edge ordering: rank `r` becomes `m - 1 - r`.
pub fn inverse_ordering(g: &EdgeOrderedGraph) -> EdgeOrderedGraph {
    let m = g.m();
    let rank = g.rank().iter().map(|&r| m - 1 - r).collect();
    EdgeOrderedGraph::new(g.graph().clone(), rank).expect("reversal preserves permutations")
}

/// The lexicographically edge-ordered complete graph on `n` vertices.
pub fn lex_complete(n: usize) -> EdgeOrderedGraph {
    let identity: Vec<usize> = (0..n).collect();
    lex_ordering(&Graph::complete(n), &identity).expect("identity is a bijection")
}

/// The max-lexicographically edge-ordered complete graph on `n` vertices.
pub fn max_lex_complete(n: usize) -> EdgeOrderedGraph {
    let identity: Vec<usize> = (0..n).collect();
    max_lex_ordering(&Graph::complete(n), &identity).expect("identity is a bijection")
}

/// The four canonical orderings of complete graphs: lexicographic,
/// max-lexicographic, and their reversals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalType {
    Lex,
    MaxLex,
    InverseLex,
    InverseMaxLex,
}

impl CanonicalType {
    pub const ALL: [CanonicalType; 4] = [
        CanonicalType::Lex,
        CanonicalType::MaxLex,
        CanonicalType::InverseLex,
        CanonicalType::InverseMaxLex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CanonicalType::Lex => "lex",
            CanonicalType::MaxLex => "max-lex",
            CanonicalType::InverseLex => "inverse-lex",
            CanonicalType::InverseMaxLex => "inverse-max-lex",
        }
    }
}

impl std::fmt::Display for CanonicalType {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.write_str(self.name())
    }
}

/// The canonically ordered complete graph of the given type on `n` vertices.
pub fn canonical_complete(t: CanonicalType, n: usize) -> EdgeOrderedGraph {
    match t {
        CanonicalType::Lex => lex_complete(n),
        CanonicalType::MaxLex => max_lex_complete(n),
        CanonicalType::InverseLex => inverse_ordering(&lex_complete(n)),
        CanonicalType::InverseMaxLex => inverse_ordering(&max_lex_complete(n)),
    }
}

/// Lexicographically ordered complete bipartite graph with parts `0..a` and
/// `a..a+b`.
pub fn lex_bipartite(a: usize, b: usize) -> EdgeOrderedGraph {
    let g = Graph::complete_bipartite(a, b);
    let identity: Vec<usize> = (0..g.n()).collect();
    lex_ordering(&g, &identity).expect("identity is a bijection")
}

/// Edge-monotone path on `n` vertices: edge `{i, i+1}` has rank `i`.
pub fn monotone_path_eog(n: usize) -> EdgeOrderedGraph {
    let g = Graph::path(n);
    let rank = (0..g.m()).collect();
    EdgeOrderedGraph::new(g, rank).expect("identity rank is a permutation")
}

/// Monotone vertex-ordered path: the path `0 - 1 - … - n-1` with the identity
/// vertex order.
pub fn monotone_path_vog(n: usize) -> VertexOrderedGraph {
    VertexOrderedGraph::with_identity_order(Graph::path(n))
}

/// Edge-ordered perfect matching `{0,1} ≺ {2,3} ≺ …` on `n` vertices.
pub fn matching_eog(n: usize) -> Result<EdgeOrderedGraph> {
    let g = Graph::matching(n)?;
    let rank = (0..g.m()).collect();
    Ok(EdgeOrderedGraph::new(g, rank).expect("identity rank is a permutation"))
}

/// Edge-ordered star with the given number of leaves, edges ranked by leaf.
pub fn star_eog(leaves: usize) -> EdgeOrderedGraph {
    let g = Graph::star(leaves);
    let rank = (0..g.m()).collect();
    EdgeOrderedGraph::new(g, rank).expect("identity rank is a permutation")
}

/// Degeneracy of `g` together with a vertex order in which every vertex has
/// at most `d` neighbors before it.
///
/// Computed by repeatedly deleting a minimum-degree vertex (ties broken by
/// lowest index) and reversing the deletion sequence.
pub fn degeneracy_order(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let adj = g.adjacency();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        d = d.max(deg[v]);
        removed[v] = true;
        removal.push(v);
        for &w in &adj[v] {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    removal.reverse();
    (d, removal)
}

/// Replaces every vertex of a complete edge-ordered base by a block of
/// `block_size` fresh vertices and every base edge by a bridge ordering of the
/// complete bipartite graph between the two blocks.
///
/// The result is an edge ordering of the complete graph on
/// `base.n() * block_size` vertices: bridge edges come first, grouped by base
/// edge in base order and ordered within a group by the bridge, then all
/// intra-block edges in lexicographic order. Returns the ordering together
/// with the block partition; block `i` is the contiguous vertex range
/// `i*block_size .. (i+1)*block_size`.
///
/// `bridge(i, j)` is called once per base edge `{i, j}` (`i < j`, in base
/// order) and must return an ordering of the complete bipartite graph with
/// parts `0..block_size` (mapped into block `i`) and
/// `block_size..2*block_size` (mapped into block `j`).
pub fn blow_up(
    base: &EdgeOrderedGraph,
    block_size: usize,
    mut bridge: impl FnMut(usize, usize) -> Result<EdgeOrderedGraph>,
) -> Result<(EdgeOrderedGraph, Vec<Vec<usize>>)> {
    let nb = base.n();
    let s = block_size;
    if s == 0 {
        return Err(Error::InvalidArgument("block size must be positive".into()));
    }
    if *base.graph() != Graph::complete(nb) {
        return Err(Error::InvalidBase);
    }
    let bipartite_shape = Graph::complete_bipartite(s, s);
    let mut listed: Vec<(usize, usize)> = Vec::with_capacity(nb * s * (nb * s - 1) / 2);
    for &(i, j) in &base.edges_in_order() {
        let br = bridge(i, j)?;
        if br.graph() != &bipartite_shape {
            return Err(Error::InvalidArgument(format!(
                "bridge for base edge ({i}, {j}) is not an ordered K_{{{s},{s}}} on parts 0..{s} and {s}..{}",
                2 * s
            )));
        }
        for (a, b) in br.edges_in_order() {
            // a < s <= b by the bipartite shape check.
            listed.push((i * s + a, j * s + (b - s)));
        }
    }
    let mut intra: Vec<(usize, usize)> = Vec::new();
    for i in 0..nb {
        for a in 0..s {
            for b in (a + 1)..s {
                intra.push((i * s + a, i * s + b));
            }
        }
    }
    intra.sort_unstable();
    listed.extend(intra);
    let blocks = (0..nb).map(|i| (i * s..(i + 1) * s).collect()).collect();
    Ok((EdgeOrderedGraph::from_ordered_edges(nb * s, listed)?, blocks))
}

/// All vertex bijections whose induced lexicographic ordering equals `g`'s
/// edge order, in lexicographic order of the bijection vector. Brute force
/// over `n!` bijections, so `n` is capped at [`CANON_VERTEX_LIMIT`].
pub fn consistent_maps(g: &EdgeOrderedGraph) -> Result<Vec<Vec<usize>>> {
    if g.n() > CANON_VERTEX_LIMIT {
        return Err(Error::LimitExceeded {
            n: g.n(),
            limit: CANON_VERTEX_LIMIT,
        });
    }
    let mut maps = Vec::new();
    for f in all_permutations(g.n()) {
        if lex_ordering(g.graph(), &f)?.rank() == g.rank() {
            maps.push(f);
        }
    }
    Ok(maps)
}

/// Whether some vertex bijection realizes `g`'s edge order lexicographically.
pub fn is_lexicographic(g: &EdgeOrderedGraph) -> Result<bool> {
    if g.n() > CANON_VERTEX_LIMIT {
        return Err(Error::LimitExceeded {
            n: g.n(),
            limit: CANON_VERTEX_LIMIT,
        });
    }
    for f in all_permutations(g.n()) {
        if lex_ordering(g.graph(), &f)?.rank() == g.rank() {
            return Ok(true);
        }
    }
    Ok(false)
}
