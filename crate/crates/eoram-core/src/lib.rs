//! Search and certification engines for edge-ordered Ramsey numbers.
//!
//! An *edge-ordered graph* is a graph together with a total order on its
//! edges; a *vertex-ordered graph* orders the vertices instead. This crate
//! computes small Ramsey-type thresholds for such graphs by exhaustive,
//! certificate-producing search:
//!
//! - [`graph`] — the shared data model (graphs, orders, colorings,
//!   embeddings, canonical forms);
//! - [`constructions`] — lexicographic and related named edge orderings;
//! - [`embed`] — order-preserving subgraph embedding and copy enumeration;
//! - [`ramsey`] — adversary coloring search and minimal-host drivers for the
//!   classic, vertex-ordered, lexicographic and edge-ordered variants;
//! - [`greedy`] — a total greedy embedding that returns either a blue copy or
//!   a red biclique on a degeneracy-ordered host partition;
//! - [`probabilistic`] — exact and Monte Carlo containment probabilities for
//!   random edge orderings, plus biclique saturation machinery;
//! - [`matrices`] — zero-one matrix pattern containment and weight bounds;
//! - [`paramwords`] — parameter words and the subset-host witness checker;
//! - [`cert`] — self-contained JSON certificates and their re-verification;
//! - [`oracle`] — deliberately naive reference implementations used to
//!   cross-check every optimized engine.
//!
//! All randomized routines take explicit `u64` seeds and drive a ChaCha8
//! stream, so identical inputs give identical outputs on every platform and
//! at every worker count.

pub mod cache;
pub mod cert;
pub mod constructions;
pub mod embed;
pub mod error;
pub mod graph;
pub mod greedy;
pub mod matrices;
pub mod oracle;
pub mod paramwords;
pub mod probabilistic;
pub mod ramsey;

pub use error::{Error, Result};
pub use graph::{
    are_isomorphic_eog, are_isomorphic_vog, canonical_form_eog, restrict, CanonicalKey, Coloring,
    EdgeOrderedGraph, Embedding, Graph, VertexOrderedGraph, BLUE, RED,
};
