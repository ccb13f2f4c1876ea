//! Deliberately naive reference implementations.
//!
//! Everything here enumerates its whole search space with no pruning, sharing
//! no code with the optimized engines, and exists solely to cross-check them
//! on exhaustible ranges. Keep these slow and obvious.

use crate::graph::{EdgeOrderedGraph, Graph, VertexOrderedGraph};
use itertools::Itertools;
use std::collections::BTreeSet;

/// Every injective map from `0..k` into `0..n`, in lexicographic order.
pub fn all_injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(k).collect()
}

fn copy_of(map: &[usize], pat_edges: &[(usize, usize)], host: &Graph) -> Option<Vec<usize>> {
    let mut copy = Vec::with_capacity(pat_edges.len());
    for &(u, v) in pat_edges {
        copy.push(host.edge_index(map[u], map[v])?);
    }
    copy.sort_unstable();
    Some(copy)
}

/// All copies of an edge-ordered pattern, by trying every injection and
/// keeping those whose host ranks increase along the pattern's edge order.
pub fn copies_eog_naive(
    pattern: &EdgeOrderedGraph,
    host: &EdgeOrderedGraph,
) -> BTreeSet<Vec<usize>> {
    let pat_edges = pattern.edges_in_order();
    let mut out = BTreeSet::new();
    for map in all_injections(pattern.n(), host.n()) {
        let mut ranks = Vec::with_capacity(pat_edges.len());
        let mut ok = true;
        for &(u, v) in &pat_edges {
            match host.graph().edge_index(map[u], map[v]) {
                Some(e) => ranks.push(host.rank_of(e)),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && ranks.windows(2).all(|w| w[0] < w[1]) {
            if let Some(copy) = copy_of(&map, &pat_edges, host.graph()) {
                out.insert(copy);
            }
        }
    }
    out
}

/// All copies of a vertex-ordered pattern, by trying every injection and
/// keeping the vertex-order-preserving ones whose edges all exist.
pub fn copies_vog_naive(
    pattern: &VertexOrderedGraph,
    host: &VertexOrderedGraph,
) -> BTreeSet<Vec<usize>> {
    let pat_edges = pattern.graph().edges().to_vec();
    let mut out = BTreeSet::new();
    for map in all_injections(pattern.n(), host.n()) {
        let order_ok = (0..pattern.n()).tuple_combinations().all(|(p, q)| {
            let forward = pattern.vrank()[p] < pattern.vrank()[q];
            let image_forward = host.vrank()[map[p]] < host.vrank()[map[q]];
            forward == image_forward
        });
        if !order_ok {
            continue;
        }
        if let Some(copy) = copy_of(&map, &pat_edges, host.graph()) {
            out.insert(copy);
        }
    }
    out
}

/// All copies of a plain pattern, by trying every injection.
pub fn copies_graph_naive(pattern: &Graph, host: &Graph) -> BTreeSet<Vec<usize>> {
    let pat_edges = pattern.edges().to_vec();
    let mut out = BTreeSet::new();
    for map in all_injections(pattern.n(), host.n()) {
        if let Some(copy) = copy_of(&map, &pat_edges, host) {
            out.insert(copy);
        }
    }
    out
}

/// Whether some copy in `copies[c]` is entirely colored `c`.
pub fn has_monochromatic_copy(colors: &[u8], copies_per_color: &[Vec<Vec<usize>>]) -> bool {
    copies_per_color.iter().enumerate().any(|(c, copies)| {
        copies
            .iter()
            .any(|copy| copy.iter().all(|&e| colors[e] == c as u8))
    })
}

/// Scans all `k^m` colorings in lexicographic order (edge 0 most significant,
/// color 0 first) and returns the first one with no monochromatic copy, or
/// `None` if every coloring has one — i.e. the host arrows the targets.
///
/// `copies_per_color[c]` lists the copies of the color-`c` target as host
/// edge-index sets.
pub fn first_avoiding_coloring_naive(
    m: usize,
    k: usize,
    copies_per_color: &[Vec<Vec<usize>>],
) -> Option<Vec<u8>> {
    assert_eq!(copies_per_color.len(), k);
    assert!(k >= 1);
    let mut colors = vec![0u8; m];
    loop {
        if !has_monochromatic_copy(&colors, copies_per_color) {
            return Some(colors);
        }
        // Advance the odometer, least significant digit last.
        let mut i = m;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if (colors[i] as usize) + 1 < k {
                colors[i] += 1;
                colors[i + 1..].fill(0);
                break;
            }
            colors[i] = 0;
        }
    }
}

/// Pattern containment for 0/1 matrices by trying every increasing row and
/// column selection outright.
pub fn contains_pattern_naive(
    a: &crate::matrices::ZeroOneMatrix,
    pat: &crate::matrices::ZeroOneMatrix,
) -> bool {
    if pat.rows() > a.rows() || pat.cols() > a.cols() {
        return false;
    }
    for rows in (1..=a.rows()).combinations(pat.rows()) {
        for cols in (1..=a.cols()).combinations(pat.cols()) {
            let all_covered = pat
                .ones()
                .iter()
                .all(|&(i, j)| a.is_one(rows[i - 1], cols[j - 1]));
            if all_covered {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{lex_complete, monotone_path_eog};

    #[test]
    fn injections_count() {
        assert_eq!(all_injections(2, 4).len(), 12);
        assert_eq!(all_injections(0, 3).len(), 1);
        assert_eq!(all_injections(4, 3).len(), 0);
    }

    #[test]
    fn naive_copies_spot_check() {
        let copies = copies_eog_naive(&monotone_path_eog(3), &lex_complete(3));
        assert_eq!(copies.len(), 3);
    }

    #[test]
    fn odometer_covers_every_coloring() {
        // With impossible-to-avoid copies (a copy with no edges), the scan
        // visits all k^m colorings and returns None.
        let copies = vec![vec![vec![]], vec![]];
        assert_eq!(first_avoiding_coloring_naive(3, 2, &copies), None);
        // With no copies at all, the first coloring wins.
        let copies = vec![vec![], vec![]];
        assert_eq!(first_avoiding_coloring_naive(3, 2, &copies), Some(vec![0, 0, 0]));
    }

    #[test]
    fn first_avoiding_coloring_for_triangle_on_k3() {
        // K3 does not arrow the triangle: color one edge differently.
        let triangle: Vec<Vec<usize>> = vec![vec![0, 1, 2]];
        let copies = vec![triangle.clone(), triangle];
        assert_eq!(
            first_avoiding_coloring_naive(3, 2, &copies),
            Some(vec![0, 0, 1])
        );
    }
}
