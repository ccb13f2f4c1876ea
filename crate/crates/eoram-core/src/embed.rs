//! Order-preserving subgraph embedding and copy enumeration.
//!
//! A *copy* of a pattern in a host is a set of host edge indices realizable
//! by some embedding; patterns with isolated vertices additionally require
//! enough host vertices. All searches are deterministic: candidates are tried
//! in increasing rank (edge-ordered), increasing position (vertex-ordered) or
//! increasing vertex index (plain), and the first complete embedding found is
//! returned.

use crate::constructions::{canonical_complete, CanonicalType};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form_eog, restrict, Coloring, EdgeOrderedGraph, Embedding, Graph,
    VertexOrderedGraph,
};
use num_integer::binomial;
use std::collections::BTreeSet;
use std::ops::ControlFlow;

/// Default cap on the number of distinct copies an enumeration may produce.
pub const DEFAULT_COPY_CAP: u64 = 10_000_000;
/// Default cap on the number of vertex subsets scanned for canonical cliques.
pub const DEFAULT_SUBSET_CAP: u64 = 1_000_000;

/// Restricts a search to host edges of one color.
#[derive(Clone, Copy, Debug)]
pub struct ColorFilter<'a> {
    pub coloring: &'a Coloring,
    pub color: u8,
}

impl ColorFilter<'_> {
    /// Per-edge-index admissibility under the filter (everything admissible
    /// when there is no filter).
    fn edge_ok(filter: Option<&ColorFilter<'_>>, m: usize) -> Result<Vec<bool>> {
        match filter {
            None => Ok(vec![true; m]),
            Some(f) => {
                if f.coloring.m() != m {
                    return Err(Error::DimensionMismatch(format!(
                        "coloring has {} edges, host has {m}",
                        f.coloring.m()
                    )));
                }
                Ok(f.coloring.colors().iter().map(|&c| c == f.color).collect())
            }
        }
    }
}

/// Shared state for the edge-ordered backtracking search.
struct EogSearch {
    pat_edges: Vec<(usize, usize)>,
    host_pairs: Vec<(usize, usize)>, // indexed by host rank
    edge_ok_by_rank: Vec<bool>,
    n_pat: usize,
    pmap: Vec<usize>, // usize::MAX = unassigned
    used: Vec<bool>,
}

const UNSET: usize = usize::MAX;

impl EogSearch {
    /// Tries to bind pattern vertex `p` to host vertex `h`; returns whether a
    /// fresh binding was made (`None` = inconsistent).
    fn bind(&mut self, p: usize, h: usize) -> Option<bool> {
        if self.pmap[p] != UNSET {
            return (self.pmap[p] == h).then_some(false);
        }
        if self.used[h] {
            return None;
        }
        self.pmap[p] = h;
        self.used[h] = true;
        Some(true)
    }

    fn unbind(&mut self, p: usize) {
        self.used[self.pmap[p]] = false;
        self.pmap[p] = UNSET;
    }

    fn recurse(
        &mut self,
        slot: usize,
        min_rank: usize,
        sink: &mut dyn FnMut(&[usize]) -> Result<ControlFlow<()>>,
    ) -> Result<ControlFlow<()>> {
        if slot == self.pat_edges.len() {
            return self.finish(sink);
        }
        let (u, v) = self.pat_edges[slot];
        for r in min_rank..self.host_pairs.len() {
            if !self.edge_ok_by_rank[r] {
                continue;
            }
            let (x, y) = self.host_pairs[r];
            for (a, b) in [(x, y), (y, x)] {
                let Some(fresh_u) = self.bind(u, a) else { continue };
                match self.bind(v, b) {
                    Some(fresh_v) => {
                        let flow = self.recurse(slot + 1, r + 1, sink)?;
                        if fresh_v {
                            self.unbind(v);
                        }
                        if fresh_u {
                            self.unbind(u);
                        }
                        if flow.is_break() {
                            return Ok(ControlFlow::Break(()));
                        }
                    }
                    None => {
                        if fresh_u {
                            self.unbind(u);
                        }
                    }
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Places the pattern vertices untouched by edges (lowest pattern vertex
    /// to lowest free host vertex) and reports the embedding.
    fn finish(
        &mut self,
        sink: &mut dyn FnMut(&[usize]) -> Result<ControlFlow<()>>,
    ) -> Result<ControlFlow<()>> {
        let mut extras = Vec::new();
        let mut next_free = 0;
        for p in 0..self.n_pat {
            if self.pmap[p] != UNSET {
                continue;
            }
            while self.used[next_free] {
                next_free += 1;
            }
            self.pmap[p] = next_free;
            self.used[next_free] = true;
            extras.push(p);
        }
        let flow = sink(&self.pmap)?;
        for p in extras {
            self.unbind(p);
        }
        Ok(flow)
    }
}

fn eog_drive(
    pattern: &EdgeOrderedGraph,
    host: &EdgeOrderedGraph,
    filter: Option<&ColorFilter<'_>>,
    sink: &mut dyn FnMut(&[usize]) -> Result<ControlFlow<()>>,
) -> Result<()> {
    if pattern.n() > host.n() {
        return Ok(());
    }
    let edge_ok = ColorFilter::edge_ok(filter, host.m())?;
    let order = host.order();
    let mut search = EogSearch {
        pat_edges: pattern.edges_in_order(),
        host_pairs: order.iter().map(|&e| host.graph().edges()[e]).collect(),
        edge_ok_by_rank: order.iter().map(|&e| edge_ok[e]).collect(),
        n_pat: pattern.n(),
        pmap: vec![UNSET; pattern.n()],
        used: vec![false; host.n()],
    };
    let _ = search.recurse(0, 0, sink)?;
    Ok(())
}

/// First embedding of an edge-ordered pattern into an edge-ordered host that
/// preserves the edge order (and uses only edges of the filtered color).
pub fn find_edge_ordered_embedding(
    pattern: &EdgeOrderedGraph,
    host: &EdgeOrderedGraph,
    filter: Option<&ColorFilter<'_>>,
) -> Result<Option<Embedding>> {
    let mut found = None;
    eog_drive(pattern, host, filter, &mut |pmap| {
        found = Some(Embedding { vertex_map: pmap.to_vec() });
        Ok(ControlFlow::Break(()))
    })?;
    Ok(found)
}

/// Shared state for the vertex-ordered and plain searches, which both assign
/// whole vertices at a time.
struct VertexSearch {
    /// Pattern vertices in assignment order.
    pat_seq: Vec<usize>,
    /// Host vertices in candidate order.
    host_seq: Vec<usize>,
    /// Host adjacency with the color filter applied: `admissible[u][v]`.
    admissible: Vec<Vec<bool>>,
    pat_adj: Vec<Vec<usize>>,
    pmap: Vec<usize>,
    /// `order_preserving` restricts host candidates to increasing positions.
    order_preserving: bool,
    used: Vec<bool>,
}

impl VertexSearch {
    fn recurse(
        &mut self,
        slot: usize,
        min_pos: usize,
        sink: &mut dyn FnMut(&[usize]) -> Result<ControlFlow<()>>,
    ) -> Result<ControlFlow<()>> {
        if slot == self.pat_seq.len() {
            return sink(&self.pmap);
        }
        let p = self.pat_seq[slot];
        for pos in min_pos..self.host_seq.len() {
            let h = self.host_seq[pos];
            if self.used[h] {
                continue;
            }
            let ok = self.pat_adj[p]
                .iter()
                .filter(|&&q| self.pmap[q] != UNSET)
                .all(|&q| self.admissible[h][self.pmap[q]]);
            if !ok {
                continue;
            }
            self.pmap[p] = h;
            self.used[h] = true;
            let next_min = if self.order_preserving { pos + 1 } else { 0 };
            let flow = self.recurse(slot + 1, next_min, sink)?;
            self.pmap[p] = UNSET;
            self.used[h] = false;
            if flow.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn admissible_matrix(host: &Graph, filter: Option<&ColorFilter<'_>>) -> Result<Vec<Vec<bool>>> {
    let edge_ok = ColorFilter::edge_ok(filter, host.m())?;
    let mut adm = vec![vec![false; host.n()]; host.n()];
    for (e, &(u, v)) in host.edges().iter().enumerate() {
        if edge_ok[e] {
            adm[u][v] = true;
            adm[v][u] = true;
        }
    }
    Ok(adm)
}

fn vog_drive(
    pattern: &VertexOrderedGraph,
    host: &VertexOrderedGraph,
    filter: Option<&ColorFilter<'_>>,
    sink: &mut dyn FnMut(&[usize]) -> Result<ControlFlow<()>>,
) -> Result<()> {
    if pattern.n() > host.n() {
        return Ok(());
    }
    let mut search = VertexSearch {
        pat_seq: pattern.vertices_in_order(),
        host_seq: host.vertices_in_order(),
        admissible: admissible_matrix(host.graph(), filter)?,
        pat_adj: pattern.graph().adjacency(),
        pmap: vec![UNSET; pattern.n()],
        order_preserving: true,
        used: vec![false; host.n()],
    };
    let _ = search.recurse(0, 0, sink)?;
    Ok(())
}

/// First embedding of a vertex-ordered pattern into a vertex-ordered host
/// that preserves the vertex order.
pub fn find_vertex_ordered_embedding(
    pattern: &VertexOrderedGraph,
    host: &VertexOrderedGraph,
    filter: Option<&ColorFilter<'_>>,
) -> Result<Option<Embedding>> {
    let mut found = None;
    vog_drive(pattern, host, filter, &mut |pmap| {
        found = Some(Embedding { vertex_map: pmap.to_vec() });
        Ok(ControlFlow::Break(()))
    })?;
    Ok(found)
}

fn graph_drive(
    pattern: &Graph,
    host: &Graph,
    filter: Option<&ColorFilter<'_>>,
    sink: &mut dyn FnMut(&[usize]) -> Result<ControlFlow<()>>,
) -> Result<()> {
    if pattern.n() > host.n() {
        return Ok(());
    }
    let mut search = VertexSearch {
        pat_seq: (0..pattern.n()).collect(),
        host_seq: (0..host.n()).collect(),
        admissible: admissible_matrix(host, filter)?,
        pat_adj: pattern.adjacency(),
        pmap: vec![UNSET; pattern.n()],
        order_preserving: false,
        used: vec![false; host.n()],
    };
    let _ = search.recurse(0, 0, sink)?;
    Ok(())
}

/// First (not necessarily induced) embedding of a plain pattern into a plain
/// host.
pub fn find_graph_embedding(
    pattern: &Graph,
    host: &Graph,
    filter: Option<&ColorFilter<'_>>,
) -> Result<Option<Embedding>> {
    let mut found = None;
    graph_drive(pattern, host, filter, &mut |pmap| {
        found = Some(Embedding { vertex_map: pmap.to_vec() });
        Ok(ControlFlow::Break(()))
    })?;
    Ok(found)
}

fn collect_copies(
    pat: &Graph,
    host: &Graph,
    cap: u64,
    drive: impl FnOnce(&mut dyn FnMut(&[usize]) -> Result<ControlFlow<()>>) -> Result<()>,
) -> Result<Vec<Vec<usize>>> {
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    let pat_edges = pat.edges().to_vec();
    drive(&mut |pmap| {
        let mut copy: Vec<usize> = pat_edges
            .iter()
            .map(|&(u, v)| {
                host.edge_index(pmap[u], pmap[v])
                    .expect("search only emits edge-preserving maps")
            })
            .collect();
        copy.sort_unstable();
        out.insert(copy);
        if out.len() as u64 > cap {
            return Err(Error::CapExceeded {
                count: out.len() as u128,
                cap: cap as u128,
            });
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(out.into_iter().collect())
}

/// All copies of an edge-ordered pattern in an edge-ordered host, as sorted
/// host edge-index sets in increasing order. Fails with `CapExceeded` if more
/// than `cap` distinct copies exist.
pub fn enumerate_copies_eog(
    pattern: &EdgeOrderedGraph,
    host: &EdgeOrderedGraph,
    cap: u64,
) -> Result<Vec<Vec<usize>>> {
    collect_copies(pattern.graph(), host.graph(), cap, |sink| {
        eog_drive(pattern, host, None, sink)
    })
}

/// All copies of a vertex-ordered pattern in a vertex-ordered host.
pub fn enumerate_copies_vog(
    pattern: &VertexOrderedGraph,
    host: &VertexOrderedGraph,
    cap: u64,
) -> Result<Vec<Vec<usize>>> {
    collect_copies(pattern.graph(), host.graph(), cap, |sink| {
        vog_drive(pattern, host, None, sink)
    })
}

/// All copies of a plain pattern in a plain host.
pub fn enumerate_copies_graph(pattern: &Graph, host: &Graph, cap: u64) -> Result<Vec<Vec<usize>>> {
    collect_copies(pattern, host, cap, |sink| graph_drive(pattern, host, None, sink))
}

/// Searches the host's `n`-vertex induced subgraphs (in lexicographic subset
/// order) for one isomorphic to a canonically ordered complete graph, trying
/// the four types in the order lex, max-lex, inverse-lex, inverse-max-lex.
pub fn find_canonical_clique(
    host: &EdgeOrderedGraph,
    n: usize,
    cap: u64,
) -> Result<Option<(Vec<usize>, CanonicalType)>> {
    use itertools::Itertools;
    if n > host.n() {
        return Ok(None);
    }
    let subsets = binomial(host.n() as u128, n as u128);
    if subsets > cap as u128 {
        return Err(Error::CapExceeded { count: subsets, cap: cap as u128 });
    }
    let type_keys: Vec<_> = CanonicalType::ALL
        .iter()
        .map(|&t| canonical_form_eog(&canonical_complete(t, n)))
        .collect::<Result<_>>()?;
    for subset in (0..host.n()).combinations(n) {
        let sub = restrict(host, &subset)?;
        let key = canonical_form_eog(&sub)?;
        for (t, tk) in CanonicalType::ALL.iter().zip(&type_keys) {
            if key == *tk {
                return Ok(Some((subset, *t)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        lex_bipartite, lex_complete, matching_eog, max_lex_complete, monotone_path_eog,
        monotone_path_vog,
    };
    use crate::graph::{VertexOrderedGraph, BLUE, RED};
    use crate::oracle;

    #[test]
    fn first_monotone_path_embedding_in_lex_k3() {
        let emb = find_edge_ordered_embedding(&monotone_path_eog(3), &lex_complete(3), None)
            .unwrap()
            .unwrap();
        assert_eq!(emb.vertex_map, vec![0, 1, 2]);
    }

    #[test]
    fn copies_of_monotone_p3_in_lex_k3() {
        let copies = enumerate_copies_eog(&monotone_path_eog(3), &lex_complete(3), 100).unwrap();
        // Any two adjacent edges of K3 form a copy once oriented by rank.
        assert_eq!(copies, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn copies_of_lex_triangle_in_lex_k4() {
        let copies = enumerate_copies_eog(&lex_complete(3), &lex_complete(4), 100).unwrap();
        assert_eq!(copies.len(), 4); // one per triangle of K4
    }

    #[test]
    fn single_edge_copies_everywhere() {
        let e = lex_complete(2);
        for n in 2..=5 {
            let copies = enumerate_copies_eog(&e, &lex_complete(n), 1000).unwrap();
            assert_eq!(copies.len(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn eog_copies_agree_with_naive_oracle() {
        let hosts = [
            lex_complete(4),
            max_lex_complete(4),
            lex_bipartite(2, 3),
            lex_complete(5),
        ];
        let patterns = [
            monotone_path_eog(3),
            monotone_path_eog(4),
            lex_complete(3),
            matching_eog(4).unwrap(),
        ];
        for host in &hosts {
            for pat in &patterns {
                let fast = enumerate_copies_eog(pat, host, 1_000_000).unwrap();
                let naive: Vec<_> = oracle::copies_eog_naive(pat, host).into_iter().collect();
                assert_eq!(fast, naive, "pattern {pat:?} in host {host:?}");
            }
        }
    }

    #[test]
    fn monotone_vog_path_copies_in_ordered_k4() {
        let host = VertexOrderedGraph::with_identity_order(Graph::complete(4));
        let copies = enumerate_copies_vog(&monotone_path_vog(3), &host, 100).unwrap();
        assert_eq!(copies.len(), 4); // one monotone path per vertex triple
        let naive: Vec<_> = oracle::copies_vog_naive(&monotone_path_vog(3), &host)
            .into_iter()
            .collect();
        assert_eq!(copies, naive);
    }

    #[test]
    fn vog_embedding_respects_vertex_order() {
        // Pattern: edge between the two LAST vertices in order; host: path
        // 0-1-2 with identity order. The only copies use consecutive pairs.
        let pat = VertexOrderedGraph::from_vertex_order(
            Graph::new(3, [(1, 2)]).unwrap(),
            &[0, 1, 2],
        )
        .unwrap();
        let host = VertexOrderedGraph::with_identity_order(Graph::path(3));
        let emb = find_vertex_ordered_embedding(&pat, &host, None).unwrap().unwrap();
        // First in deterministic order: vertex 0 -> 0, then edge (1,2) -> (1,2).
        assert_eq!(emb.vertex_map, vec![0, 1, 2]);
        let copies = enumerate_copies_vog(&pat, &host, 100).unwrap();
        let naive: Vec<_> = oracle::copies_vog_naive(&pat, &host).into_iter().collect();
        assert_eq!(copies, naive);
    }

    #[test]
    fn graph_copies_agree_with_naive_oracle() {
        let hosts = [Graph::complete(5), Graph::complete_bipartite(2, 3), Graph::cycle(6).unwrap()];
        let patterns = [Graph::path(3), Graph::path(4), Graph::complete(3), Graph::star(2)];
        for host in &hosts {
            for pat in &patterns {
                let fast = enumerate_copies_graph(pat, host, 1_000_000).unwrap();
                let naive: Vec<_> = oracle::copies_graph_naive(pat, host).into_iter().collect();
                assert_eq!(fast, naive, "pattern {pat:?} in host {host:?}");
            }
        }
    }

    #[test]
    fn empty_pattern_has_one_vacuous_copy_when_vertices_suffice() {
        let pat = EdgeOrderedGraph::new(Graph::empty(3), vec![]).unwrap();
        assert_eq!(
            enumerate_copies_eog(&pat, &lex_complete(3), 10).unwrap(),
            vec![Vec::<usize>::new()]
        );
        assert!(enumerate_copies_eog(&pat, &lex_complete(2), 10).unwrap().is_empty());
    }

    #[test]
    fn color_filter_restricts_embeddings() {
        let host = lex_complete(3);
        // Edge (0,1) red, the others blue (by edge index).
        let coloring = Coloring::new(2, vec![RED, BLUE, BLUE]).unwrap();
        let pat = monotone_path_eog(3);
        let blue = ColorFilter { coloring: &coloring, color: BLUE };
        let emb = find_edge_ordered_embedding(&pat, &host, Some(&blue)).unwrap().unwrap();
        // Only blue copy: edges (0,2) then (1,2), i.e. path 0-2-1 read 0,2,1.
        assert_eq!(emb.vertex_map, vec![0, 2, 1]);
        let red = ColorFilter { coloring: &coloring, color: RED };
        assert!(find_edge_ordered_embedding(&pat, &host, Some(&red)).unwrap().is_none());
    }

    #[test]
    fn copy_cap_is_enforced() {
        assert!(matches!(
            enumerate_copies_eog(&monotone_path_eog(3), &lex_complete(5), 2),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn canonical_clique_present_in_lex_hosts() {
        let (vertices, t) = find_canonical_clique(&lex_complete(6), 4, DEFAULT_SUBSET_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(t, CanonicalType::Lex);
        assert_eq!(vertices, vec![0, 1, 2, 3]); // lex order restricts to lex order
        // Any ordering of K3 is a canonical clique of every 3-vertex host.
        let host = EdgeOrderedGraph::new(Graph::complete(3), vec![2, 0, 1]).unwrap();
        let found = find_canonical_clique(&host, 3, DEFAULT_SUBSET_CAP).unwrap();
        assert!(found.is_some());
    }

    #[test]
    fn canonical_clique_type_identification() {
        let host = inverse(&max_lex_complete(5));
        let (_, t) = find_canonical_clique(&host, 5, DEFAULT_SUBSET_CAP).unwrap().unwrap();
        assert_eq!(t, CanonicalType::InverseMaxLex);
        // Strictly smaller subcliques of the max-lex host are max-lex.
        let (_, t) = find_canonical_clique(&max_lex_complete(5), 4, DEFAULT_SUBSET_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(t, CanonicalType::MaxLex);
    }

    fn inverse(g: &EdgeOrderedGraph) -> EdgeOrderedGraph {
        crate::constructions::inverse_ordering(g)
    }

    #[test]
    fn canonical_clique_cap() {
        assert!(matches!(
            find_canonical_clique(&lex_complete(10), 5, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}
