//! JSON interchange formats and self-contained certificates.
//!
//! Every search result the toolkit emits is wrapped in a [`Certificate`]
//! carrying the full inputs it refers to, so that [`Certificate::verify`]
//! can re-check the claim from the file alone — with independent machinery
//! (the embedding engine for colorings, direct index arithmetic for
//! embeddings) wherever one exists.
//!
//! Graph files use the formats
//! `{"n": …, "edge_order": [[u,v], …]}` (edges listed in increasing edge
//! order), `{"n": …, "vertex_order": […], "edges": [[u,v], …]}`, and
//! `{"n": …, "edges": [[u,v], …]}`; the flavor of a file is recognized by
//! its fields. Colorings are `{"colors": […]}`, indexed by edge *rank* for
//! edge-ordered hosts and by edge index otherwise.

use crate::constructions::{canonical_complete, CanonicalType};
use crate::embed::{
    find_edge_ordered_embedding, find_graph_embedding, find_vertex_ordered_embedding, ColorFilter,
};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form_eog, restrict, Coloring, EdgeOrderedGraph, Graph, VertexOrderedGraph,
};
use crate::greedy::{verify_certificate, GreedyCertificate, GreedyInstance};
use crate::paramwords::{ParameterWord, Sym};
use crate::probabilistic::check_biclique_saturation;
use crate::ramsey::{adversary_multi, AnyGraph, SearchStats};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Subset-pair budget used when re-checking saturation certificates.
pub const VERIFY_SATURATION_CAP: u64 = 1_000_000;

/// An edge-ordered graph: `edge_order` lists the edges from least to
/// greatest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EogJson {
    pub n: usize,
    pub edge_order: Vec<(usize, usize)>,
}

impl EogJson {
    pub fn from_graph(g: &EdgeOrderedGraph) -> Self {
        EogJson { n: g.n(), edge_order: g.edges_in_order() }
    }

    pub fn to_graph(&self) -> Result<EdgeOrderedGraph> {
        EdgeOrderedGraph::from_ordered_edges(self.n, self.edge_order.iter().copied())
    }
}

/// A vertex-ordered graph: `vertex_order` lists the vertices from least to
/// greatest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VogJson {
    pub n: usize,
    pub vertex_order: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl VogJson {
    pub fn from_graph(g: &VertexOrderedGraph) -> Self {
        VogJson {
            n: g.n(),
            vertex_order: g.vertices_in_order(),
            edges: g.graph().edges().to_vec(),
        }
    }

    pub fn to_graph(&self) -> Result<VertexOrderedGraph> {
        VertexOrderedGraph::from_vertex_order(
            Graph::new(self.n, self.edges.iter().copied())?,
            &self.vertex_order,
        )
    }
}

/// An unordered graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().to_vec() }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }
}

/// Any of the three graph flavors, recognized by field shape: `edge_order`
/// marks an edge-ordered graph, `vertex_order` a vertex-ordered one, bare
/// `edges` a plain one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HostJson {
    EdgeOrdered(EogJson),
    VertexOrdered(VogJson),
    Plain(GraphJson),
}

impl HostJson {
    pub fn from_any(g: &AnyGraph) -> Self {
        match g {
            AnyGraph::EdgeOrdered(g) => HostJson::EdgeOrdered(EogJson::from_graph(g)),
            AnyGraph::VertexOrdered(g) => HostJson::VertexOrdered(VogJson::from_graph(g)),
            AnyGraph::Plain(g) => HostJson::Plain(GraphJson::from_graph(g)),
        }
    }

    pub fn to_any(&self) -> Result<AnyGraph> {
        Ok(match self {
            HostJson::EdgeOrdered(j) => AnyGraph::EdgeOrdered(j.to_graph()?),
            HostJson::VertexOrdered(j) => AnyGraph::VertexOrdered(j.to_graph()?),
            HostJson::Plain(j) => AnyGraph::Plain(j.to_graph()?),
        })
    }
}

/// An edge coloring; position `i` colors the rank-`i` edge for edge-ordered
/// hosts and the index-`i` edge otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub colors: Vec<u8>,
}

/// Serialize a coloring against its host, switching to rank order for
/// edge-ordered hosts.
pub fn coloring_to_json(host: &AnyGraph, coloring: &Coloring) -> ColoringJson {
    let colors = match host {
        AnyGraph::EdgeOrdered(g) => coloring.to_rank_order(g),
        _ => coloring.colors().to_vec(),
    };
    ColoringJson { colors }
}

/// Rebuild an internally indexed coloring with `k` colors.
pub fn coloring_from_json(host: &AnyGraph, json: &ColoringJson, k: usize) -> Result<Coloring> {
    match host {
        AnyGraph::EdgeOrdered(g) => Coloring::from_rank_order(g, &json.colors, k),
        _ => Coloring::new(k, json.colors.clone()),
    }
}

/// A 0/1 matrix given by its 1-entries (1-indexed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub ones: Vec<(usize, usize)>,
}

impl MatrixJson {
    pub fn from_matrix(m: &crate::matrices::ZeroOneMatrix) -> Self {
        MatrixJson { rows: m.rows(), cols: m.cols(), ones: m.ones().to_vec() }
    }

    pub fn to_matrix(&self) -> Result<crate::matrices::ZeroOneMatrix> {
        crate::matrices::ZeroOneMatrix::new(self.rows, self.cols, self.ones.iter().copied())
    }
}

/// A parameter word: symbols are alphabet letters verbatim or `"L1"`,
/// `"L2"`, … for the parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub alphabet: Vec<String>,
    pub t: usize,
    pub symbols: Vec<String>,
}

impl WordJson {
    pub fn from_word(w: &ParameterWord) -> Self {
        let alphabet: Vec<String> = (0..w.alphabet_size()).map(|a| a.to_string()).collect();
        let symbols = w
            .symbols()
            .iter()
            .map(|&s| match s {
                Sym::Letter(a) => alphabet[a as usize].clone(),
                Sym::Lambda(j) => format!("L{j}"),
            })
            .collect();
        WordJson { alphabet, t: w.t(), symbols }
    }

    /// Parse with the strict first-occurrence invariant (`relaxed = false`)
    /// or accepting any occurrence order (`relaxed = true`).
    pub fn to_word(&self, relaxed: bool) -> Result<ParameterWord> {
        if self.alphabet.len() > u8::MAX as usize {
            return Err(Error::InvalidArgument("alphabet too large".into()));
        }
        let symbols = self
            .symbols
            .iter()
            .map(|s| {
                // Alphabet letters win ties against the parameter syntax.
                if let Some(a) = self.alphabet.iter().position(|l| l == s) {
                    return Ok(Sym::Letter(a as u8));
                }
                if let Some(j) = s.strip_prefix('L').and_then(|d| d.parse::<usize>().ok()) {
                    return Ok(Sym::Lambda(j));
                }
                Err(Error::InvalidArgument(format!("unknown symbol {s:?}")))
            })
            .collect::<Result<Vec<Sym>>>()?;
        if relaxed {
            ParameterWord::new_relaxed(self.alphabet.len() as u8, self.t, symbols)
        } else {
            ParameterWord::new(self.alphabet.len() as u8, self.t, symbols)
        }
    }
}

/// A self-contained machine-checkable claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `vertex_map[v]` hosts pattern vertex `v`, preserving the pattern's
    /// ordering flavor; with `coloring` and `color`, every image edge has
    /// that color.
    Embedding {
        pattern: HostJson,
        host: HostJson,
        vertex_map: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coloring: Option<ColoringJson>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        color: Option<u8>,
    },
    /// A coloring of the host with no color-`c` copy of `targets[c]`,
    /// refuting an arrowing claim.
    BadColoring {
        host: HostJson,
        targets: Vec<HostJson>,
        colors: ColoringJson,
    },
    /// The host arrows the targets: every coloring has a monochromatic
    /// copy. Verification re-runs the exhaustive adversary search.
    Arrowing {
        host: HostJson,
        targets: Vec<HostJson>,
        stats: SearchStats,
    },
    /// A partitioned-host greedy outcome: a blue partition-respecting copy
    /// of `h`, or a red `t × t` biclique across two parts.
    Greedy {
        h: GraphJson,
        order: Vec<usize>,
        d: usize,
        t: usize,
        parts: Vec<Vec<usize>>,
        coloring: ColoringJson,
        witness: GreedyCertificate,
    },
    /// The induced subgraph on `vertices` is a canonically ordered complete
    /// graph of the named kind (`lex`, `max-lex`, `inverse-lex`,
    /// `inverse-max-lex`).
    CanonicalClique {
        host: EogJson,
        vertices: Vec<usize>,
        clique_kind: String,
    },
    /// An edge ordering of `K_{side,side}` in which every `t × t`
    /// sub-biclique contains the pattern.
    SaturatingOrdering {
        side: usize,
        pattern: EogJson,
        t: usize,
        ordering: EogJson,
    },
}

fn fail(msg: impl Into<String>) -> Error {
    Error::VerificationFailed(msg.into())
}

/// Direct structural check of an order-preserving embedding, independent of
/// the search engine: injectivity, edge coverage, order preservation, and
/// the optional color filter.
fn check_embedding(
    pattern: &AnyGraph,
    host: &AnyGraph,
    map: &[usize],
    filter: Option<(&Coloring, u8)>,
) -> Result<()> {
    if pattern.kind_name() != host.kind_name() {
        return Err(Error::KindMismatch {
            host: host.kind_name(),
            target: pattern.kind_name(),
        });
    }
    let (pg, hg) = (pattern.graph(), host.graph());
    if map.len() != pg.n() {
        return Err(fail(format!("map covers {} of {} vertices", map.len(), pg.n())));
    }
    let mut used = vec![false; hg.n()];
    for &v in map {
        if v >= hg.n() || used[v] {
            return Err(fail(format!("vertex map is not injective into the host: {v}")));
        }
        used[v] = true;
    }
    let image_edge = |u: usize, v: usize| -> Result<usize> {
        hg.edge_index(map[u], map[v])
            .ok_or_else(|| fail(format!("pattern edge ({u}, {v}) lands on a non-edge")))
    };
    for &(u, v) in pg.edges() {
        image_edge(u, v)?;
    }
    match (pattern, host) {
        (AnyGraph::EdgeOrdered(p), AnyGraph::EdgeOrdered(h)) => {
            let mut prev = None;
            for (u, v) in p.edges_in_order() {
                let r = h.rank_of(image_edge(u, v)?);
                if prev.is_some_and(|p| p >= r) {
                    return Err(fail("edge order is not preserved"));
                }
                prev = Some(r);
            }
        }
        (AnyGraph::VertexOrdered(p), AnyGraph::VertexOrdered(h)) => {
            let mut prev = None;
            for u in p.vertices_in_order() {
                let r = h.vrank()[map[u]];
                if prev.is_some_and(|p| p >= r) {
                    return Err(fail("vertex order is not preserved"));
                }
                prev = Some(r);
            }
        }
        _ => {}
    }
    if let Some((coloring, color)) = filter {
        if coloring.m() != hg.m() {
            return Err(fail(format!(
                "coloring covers {} edges, host has {}",
                coloring.m(),
                hg.m()
            )));
        }
        for &(u, v) in pg.edges() {
            let e = image_edge(u, v)?;
            if coloring.color(e) != color {
                return Err(fail(format!(
                    "image edge ({}, {}) has color {}, wanted {color}",
                    map[u],
                    map[v],
                    coloring.color(e)
                )));
            }
        }
    }
    Ok(())
}

/// First embedding of the target into the colored host using only edges of
/// the given color, dispatched by graph flavor.
fn find_colored_copy(
    host: &AnyGraph,
    target: &AnyGraph,
    coloring: &Coloring,
    color: u8,
) -> Result<Option<Vec<usize>>> {
    let filter = ColorFilter { coloring, color };
    let found = match (host, target) {
        (AnyGraph::EdgeOrdered(h), AnyGraph::EdgeOrdered(t)) => {
            find_edge_ordered_embedding(t, h, Some(&filter))?
        }
        (AnyGraph::VertexOrdered(h), AnyGraph::VertexOrdered(t)) => {
            find_vertex_ordered_embedding(t, h, Some(&filter))?
        }
        (AnyGraph::Plain(h), AnyGraph::Plain(t)) => find_graph_embedding(t, h, Some(&filter))?,
        _ => {
            return Err(Error::KindMismatch {
                host: host.kind_name(),
                target: target.kind_name(),
            });
        }
    };
    Ok(found.map(|e| e.vertex_map))
}

impl Certificate {
    /// Re-check the claim from the certificate's own data. `copy_cap` and
    /// `cache_dir` only matter for arrowing certificates, whose
    /// verification re-runs the exhaustive search.
    pub fn verify(&self, copy_cap: u64, cache_dir: Option<&Path>) -> Result<()> {
        match self {
            Certificate::Embedding { pattern, host, vertex_map, coloring, color } => {
                let (pattern, host) = (pattern.to_any()?, host.to_any()?);
                let filter = match (coloring, color) {
                    (Some(c), Some(b)) => {
                        // The color count is not stored; any k admitting all
                        // listed colors and the filter color is equivalent.
                        let k = c
                            .colors
                            .iter()
                            .max()
                            .map_or(0, |&m| usize::from(m))
                            .max(usize::from(*b))
                            + 1;
                        Some((coloring_from_json(&host, c, k)?, *b))
                    }
                    (None, None) => None,
                    _ => {
                        return Err(Error::InvalidArgument(
                            "coloring and color must be given together".into(),
                        ));
                    }
                };
                check_embedding(
                    &pattern,
                    &host,
                    vertex_map,
                    filter.as_ref().map(|(c, b)| (c, *b)),
                )
            }
            Certificate::BadColoring { host, targets, colors } => {
                let host = host.to_any()?;
                let k = targets.len();
                if k == 0 {
                    return Err(Error::InvalidArgument("no targets".into()));
                }
                let coloring = coloring_from_json(&host, colors, k)?;
                if coloring.m() != host.m() {
                    return Err(fail("coloring does not cover the host"));
                }
                for (c, target) in targets.iter().enumerate() {
                    let target = target.to_any()?;
                    if let Some(map) = find_colored_copy(&host, &target, &coloring, c as u8)? {
                        return Err(fail(format!(
                            "color {c} contains its target at {map:?}"
                        )));
                    }
                }
                Ok(())
            }
            Certificate::Arrowing { host, targets, stats: _ } => {
                let host = host.to_any()?;
                let targets = targets
                    .iter()
                    .map(|t| t.to_any())
                    .collect::<Result<Vec<AnyGraph>>>()?;
                let refs: Vec<&AnyGraph> = targets.iter().collect();
                let outcome = adversary_multi(&host, &refs, copy_cap, cache_dir)?;
                if outcome.arrows {
                    Ok(())
                } else {
                    Err(fail("an avoiding coloring exists, the host does not arrow"))
                }
            }
            Certificate::Greedy { h, order, d, t, parts, coloring, witness } => {
                let inst =
                    GreedyInstance::new(h.to_graph()?, order.clone(), *d, *t, parts.clone())?;
                let coloring = Coloring::new(2, coloring.colors.clone())?;
                if verify_certificate(&inst, &coloring, witness) {
                    Ok(())
                } else {
                    Err(fail("greedy witness rejected"))
                }
            }
            Certificate::CanonicalClique { host, vertices, clique_kind } => {
                let host = host.to_graph()?;
                let kind = CanonicalType::ALL
                    .iter()
                    .copied()
                    .find(|k| k.name() == clique_kind)
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!("unknown clique kind {clique_kind:?}"))
                    })?;
                let sub = restrict(&host, vertices)?;
                let reference = canonical_complete(kind, vertices.len());
                if canonical_form_eog(&sub)? == canonical_form_eog(&reference)? {
                    Ok(())
                } else {
                    Err(fail(format!(
                        "induced subgraph is not a {clique_kind} clique"
                    )))
                }
            }
            Certificate::SaturatingOrdering { side, pattern, t, ordering } => {
                let ordering = ordering.to_graph()?;
                let pattern = pattern.to_graph()?;
                if ordering.n() != 2 * side {
                    return Err(fail(format!(
                        "ordering has {} vertices, expected {}",
                        ordering.n(),
                        2 * side
                    )));
                }
                let outcome =
                    check_biclique_saturation(&ordering, &pattern, *t, VERIFY_SATURATION_CAP)?;
                match outcome.violator {
                    None => Ok(()),
                    Some((left, right)) => Err(fail(format!(
                        "sub-biclique {left:?} × {right:?} misses the pattern"
                    ))),
                }
            }
        }
    }

    /// Deterministic pretty-printed JSON (field order fixed, trailing
    /// newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{lex_complete, monotone_path_eog};
    use crate::greedy::{greedy_embed, host_for};
    use crate::probabilistic::search_saturating_ordering;
    use crate::ramsey::adversary_coloring;

    #[test]
    fn graph_json_round_trips_and_detects_flavors() {
        let eog = lex_complete(3);
        let parsed: HostJson =
            serde_json::from_str("{\"n\":3,\"edge_order\":[[0,1],[0,2],[1,2]]}").unwrap();
        assert_eq!(parsed, HostJson::EdgeOrdered(EogJson::from_graph(&eog)));
        let back = match parsed.to_any().unwrap() {
            AnyGraph::EdgeOrdered(g) => g,
            other => panic!("wrong flavor: {other:?}"),
        };
        assert_eq!(back, eog);

        let parsed: HostJson =
            serde_json::from_str("{\"n\":3,\"vertex_order\":[2,0,1],\"edges\":[[0,1]]}").unwrap();
        assert!(matches!(parsed, HostJson::VertexOrdered(_)));
        let parsed: HostJson = serde_json::from_str("{\"n\":3,\"edges\":[[0,1]]}").unwrap();
        assert!(matches!(parsed, HostJson::Plain(_)));

        // Serialization matches the documented field shapes byte for byte.
        let j = serde_json::to_string(&HostJson::from_any(&AnyGraph::EdgeOrdered(eog))).unwrap();
        assert_eq!(j, "{\"n\":3,\"edge_order\":[[0,1],[0,2],[1,2]]}");
    }

    #[test]
    fn coloring_json_uses_rank_order_for_edge_ordered_hosts() {
        // Host whose rank order disagrees with index order.
        let host = EdgeOrderedGraph::from_ordered_edges(3, [(1, 2), (0, 1), (0, 2)]).unwrap();
        let any = AnyGraph::EdgeOrdered(host.clone());
        let coloring = Coloring::new(2, vec![0, 1, 0]).unwrap(); // by index
        let json = coloring_to_json(&any, &coloring);
        // Rank 0 edge is (1,2) with index 2 → color 0; rank 1 edge is (0,1).
        assert_eq!(json.colors, vec![0, 0, 1]);
        let back = coloring_from_json(&any, &json, 2).unwrap();
        assert_eq!(back, coloring);
    }

    #[test]
    fn word_json_matches_the_documented_example() {
        let json: WordJson = serde_json::from_str(
            "{\"alphabet\":[\"0\"],\"t\":3,\"symbols\":[\"L1\",\"L2\",\"L3\",\"0\"]}",
        )
        .unwrap();
        let word = json.to_word(false).unwrap();
        assert_eq!(
            word.symbols(),
            &[Sym::Lambda(1), Sym::Lambda(2), Sym::Lambda(3), Sym::Letter(0)]
        );
        assert_eq!(WordJson::from_word(&word), json);
        // Out-of-order parameters need the relaxed parser.
        let swapped = WordJson {
            alphabet: vec!["0".into()],
            t: 2,
            symbols: vec!["L2".into(), "L1".into()],
        };
        assert!(swapped.to_word(false).is_err());
        assert!(swapped.to_word(true).is_ok());
    }

    #[test]
    fn embedding_certificates_verify_and_reject() {
        let cert = Certificate::Embedding {
            pattern: HostJson::EdgeOrdered(EogJson::from_graph(&monotone_path_eog(3))),
            host: HostJson::EdgeOrdered(EogJson::from_graph(&lex_complete(3))),
            vertex_map: vec![0, 1, 2],
            coloring: None,
            color: None,
        };
        cert.verify(10_000, None).unwrap();

        // Reversing the map breaks the edge order.
        let bad = Certificate::Embedding {
            pattern: HostJson::EdgeOrdered(EogJson::from_graph(&monotone_path_eog(3))),
            host: HostJson::EdgeOrdered(EogJson::from_graph(&lex_complete(3))),
            vertex_map: vec![2, 1, 0],
            coloring: None,
            color: None,
        };
        assert!(matches!(
            bad.verify(10_000, None),
            Err(Error::VerificationFailed(_))
        ));

        // Color filter: the map's edges must carry the stated color.
        let host = AnyGraph::EdgeOrdered(lex_complete(3));
        let coloring = Coloring::new(2, vec![0, 0, 1]).unwrap();
        let colored = Certificate::Embedding {
            pattern: HostJson::EdgeOrdered(EogJson::from_graph(&monotone_path_eog(2))),
            host: HostJson::from_any(&host),
            vertex_map: vec![0, 1],
            coloring: Some(coloring_to_json(&host, &coloring)),
            color: Some(0),
        };
        colored.verify(10_000, None).unwrap();
        let miscolored = Certificate::Embedding {
            pattern: HostJson::EdgeOrdered(EogJson::from_graph(&monotone_path_eog(2))),
            host: HostJson::from_any(&host),
            vertex_map: vec![1, 2],
            coloring: Some(coloring_to_json(&host, &coloring)),
            color: Some(0),
        };
        assert!(matches!(
            miscolored.verify(10_000, None),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn bad_coloring_certificates_round_trip_from_the_adversary() {
        // The lexicographic K4 does not arrow the lexicographic K3.
        let host = AnyGraph::EdgeOrdered(lex_complete(4));
        let target = AnyGraph::EdgeOrdered(lex_complete(3));
        let outcome = adversary_coloring(&host, &target, &target, 2, 10_000, None).unwrap();
        assert!(!outcome.arrows);
        let witness = outcome.witness.unwrap();
        let cert = Certificate::BadColoring {
            host: HostJson::from_any(&host),
            targets: vec![HostJson::from_any(&target); 2],
            colors: coloring_to_json(&host, &witness),
        };
        cert.verify(10_000, None).unwrap();

        // An all-red coloring of K4 contains a red K3.
        let all_red = Coloring::constant(6, 2, 0).unwrap();
        let bad = Certificate::BadColoring {
            host: HostJson::from_any(&host),
            targets: vec![HostJson::from_any(&target); 2],
            colors: coloring_to_json(&host, &all_red),
        };
        assert!(matches!(
            bad.verify(10_000, None),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn arrowing_certificates_rerun_the_search() {
        // The lexicographic K3 arrows the monotone path on 3 vertices.
        let p3 = HostJson::EdgeOrdered(EogJson::from_graph(&monotone_path_eog(3)));
        let cert = Certificate::Arrowing {
            host: HostJson::EdgeOrdered(EogJson::from_graph(&lex_complete(3))),
            targets: vec![p3.clone(), p3.clone()],
            stats: SearchStats::default(),
        };
        cert.verify(10_000, None).unwrap();

        let too_small = Certificate::Arrowing {
            host: HostJson::EdgeOrdered(EogJson::from_graph(&lex_complete(2))),
            targets: vec![p3.clone(), p3],
            stats: SearchStats::default(),
        };
        assert!(matches!(
            too_small.verify(10_000, None),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn greedy_certificates_verify_and_reject_tampering() {
        let inst = host_for(&Graph::path(3), 2).unwrap();
        let m = inst.host_edge_count();
        let coloring = Coloring::constant(m, 2, crate::graph::BLUE).unwrap();
        let witness = greedy_embed(&inst, &coloring).unwrap();
        let cert = Certificate::Greedy {
            h: GraphJson::from_graph(inst.h()),
            order: inst.order().to_vec(),
            d: inst.d(),
            t: inst.t(),
            parts: inst.parts().to_vec(),
            coloring: ColoringJson { colors: coloring.colors().to_vec() },
            witness,
        };
        cert.verify(10_000, None).unwrap();

        let mut tampered = cert.clone();
        if let Certificate::Greedy { witness: GreedyCertificate::BlueCopy { map }, .. } =
            &mut tampered
        {
            map.swap(0, 1);
        } else {
            panic!("expected a blue copy");
        }
        assert!(matches!(
            tampered.verify(10_000, None),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn canonical_clique_certificates_check_the_claimed_kind() {
        let cert = Certificate::CanonicalClique {
            host: EogJson::from_graph(&lex_complete(4)),
            vertices: vec![0, 1, 2],
            clique_kind: "lex".into(),
        };
        cert.verify(10_000, None).unwrap();

        // Every triangle ordering is isomorphic to every canonical kind, so
        // a 3-clique also passes as inverse-lex.
        let also = Certificate::CanonicalClique {
            host: EogJson::from_graph(&lex_complete(4)),
            vertices: vec![0, 1, 2],
            clique_kind: "inverse-lex".into(),
        };
        also.verify(10_000, None).unwrap();

        // On 4 vertices the kinds separate: a lex clique starts with a
        // star, an inverse-lex clique with a triangle.
        let wrong = Certificate::CanonicalClique {
            host: EogJson::from_graph(&lex_complete(4)),
            vertices: vec![0, 1, 2, 3],
            clique_kind: "inverse-lex".into(),
        };
        assert!(matches!(
            wrong.verify(10_000, None),
            Err(Error::VerificationFailed(_))
        ));
        let unknown = Certificate::CanonicalClique {
            host: EogJson::from_graph(&lex_complete(4)),
            vertices: vec![0, 1, 2],
            clique_kind: "sideways".into(),
        };
        assert!(matches!(
            unknown.verify(10_000, None),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn saturating_ordering_certificates_recheck_every_sub_biclique() {
        let p3 = monotone_path_eog(3);
        let found = search_saturating_ordering(4, &p3, 3, 50, 7, 100_000)
            .unwrap()
            .expect("a saturating ordering exists within the restart budget");
        let cert = Certificate::SaturatingOrdering {
            side: 4,
            pattern: EogJson::from_graph(&p3),
            t: 3,
            ordering: EogJson::from_graph(&found),
        };
        cert.verify(10_000, None).unwrap();

        let wrong_side = Certificate::SaturatingOrdering {
            side: 3,
            pattern: EogJson::from_graph(&p3),
            t: 3,
            ordering: EogJson::from_graph(&found),
        };
        assert!(wrong_side.verify(10_000, None).is_err());
    }

    #[test]
    fn certificate_json_round_trips_byte_identically() {
        let cert = Certificate::Embedding {
            pattern: HostJson::EdgeOrdered(EogJson::from_graph(&monotone_path_eog(3))),
            host: HostJson::EdgeOrdered(EogJson::from_graph(&lex_complete(3))),
            vertex_map: vec![0, 1, 2],
            coloring: None,
            color: None,
        };
        let first = cert.to_json();
        let reparsed = Certificate::from_json(&first).unwrap();
        assert_eq!(reparsed, cert);
        assert_eq!(reparsed.to_json(), first);
        assert!(first.ends_with('\n'));
        assert!(first.contains("\"kind\": \"embedding\""));
    }
}
