//! 0/1-matrix pattern containment and the ordered-path weight bound.
//!
//! A lexicographically edge-ordered complete host splits into two vertex
//! halves, and the cross edges of one color class form a 0/1 matrix
//! ([`coloring_to_incidence`]). A red copy of the alternating ordered path
//! corresponds to the matrix containing the staircase [`path_pattern`], so
//! extremal bounds on pattern-avoiding matrices ([`path_weight_bound`]) turn
//! into upper bounds on lexicographic Ramsey values ([`lex_path_bound`]).
//! [`max_weight_avoiding`] is a desk-scale exhaustive oracle for the
//! extremal quantity itself.
//!
//! Positions are 1-indexed throughout: the ones of an `r × c` matrix live in
//! `(1..=r) × (1..=c)`.

use crate::constructions::lex_complete;
use crate::error::{Error, Result};
use crate::graph::{Coloring, EdgeOrderedGraph, Graph, VertexOrderedGraph};
use itertools::Itertools;
use rayon::prelude::*;

/// A 0/1 matrix stored as its set of 1-positions, 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    /// Sorted, distinct `(row, col)` positions of the ones.
    ones: Vec<(usize, usize)>,
}

impl ZeroOneMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        ones: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut ones: Vec<(usize, usize)> = ones.into_iter().collect();
        ones.sort_unstable();
        for &(i, j) in &ones {
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(Error::InvalidArgument(format!(
                    "position ({i},{j}) outside a {rows}×{cols} matrix"
                )));
            }
        }
        if ones.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate 1-position".into()));
        }
        Ok(ZeroOneMatrix { rows, cols, ones })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ones(&self) -> &[(usize, usize)] {
        &self.ones
    }

    pub fn count_ones(&self) -> usize {
        self.ones.len()
    }

    pub fn is_one(&self, row: usize, col: usize) -> bool {
        self.ones.binary_search(&(row, col)).is_ok()
    }
}

/// Does `a` contain `pat`: are there strictly increasing row and column
/// selections placing every 1 of `pat` onto a 1 of `a`?
///
/// Rows are chosen by backtracking over increasing combinations; for a fixed
/// row choice the columns are matched greedily left to right, which is
/// optimal because any valid assignment can be shifted down to the greedy
/// one column by column.
pub fn contains_pattern(a: &ZeroOneMatrix, pat: &ZeroOneMatrix) -> bool {
    if pat.rows > a.rows || pat.cols > a.cols {
        return false;
    }
    // Ones of the pattern grouped by column, for the greedy scan.
    let mut by_col: Vec<Vec<usize>> = vec![Vec::new(); pat.cols + 1];
    for &(i, j) in &pat.ones {
        by_col[j].push(i);
    }
    'rows: for rows in (1..=a.rows).combinations(pat.rows) {
        let mut prev = 0usize;
        for j in 1..=pat.cols {
            let needed = &by_col[j];
            let found = (prev + 1..=a.cols)
                .find(|&c| a.cols - c >= pat.cols - j && {
                    needed.iter().all(|&i| a.is_one(rows[i - 1], c))
                });
            match found {
                Some(c) => prev = c,
                None => continue 'rows,
            }
        }
        return true;
    }
    false
}

/// The staircase pattern of the alternating ordered path on `n ≥ 3`
/// vertices: a `⌈n/2⌉ × ⌊n/2⌋` matrix with ones at `(i, i)` and `(i+1, i)`
/// wherever those positions exist.
pub fn path_pattern(n: usize) -> Result<ZeroOneMatrix> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("path pattern needs n >= 3, got {n}")));
    }
    let rows = n.div_ceil(2);
    let cols = n / 2;
    let mut ones = Vec::new();
    for i in 1..=cols.min(rows) {
        ones.push((i, i));
    }
    for i in 1..=cols {
        if i + 1 <= rows {
            ones.push((i + 1, i));
        }
    }
    ZeroOneMatrix::new(rows, cols, ones)
}

/// The vertex-ordered bipartite graph of a matrix: row `i` becomes vertex
/// `i − 1`, column `j` becomes vertex `rows + j − 1`, ones become edges, and
/// the vertex order is the natural one.
pub fn matrix_to_ordered_graph(m: &ZeroOneMatrix) -> Result<VertexOrderedGraph> {
    let n = m.rows + m.cols;
    let edges: Vec<(usize, usize)> = m
        .ones
        .iter()
        .map(|&(i, j)| (i - 1, m.rows + j - 1))
        .collect();
    Ok(VertexOrderedGraph::with_identity_order(Graph::new(n, edges)?))
}

/// The incidence matrix of one color class's cross edges in a
/// lexicographically ordered complete host: entry `(i, j)` is 1 iff the edge
/// between vertex `i − 1` and vertex `⌈N/2⌉ + j − 1` has the given color.
pub fn coloring_to_incidence(
    host: &EdgeOrderedGraph,
    coloring: &Coloring,
    color: u8,
) -> Result<ZeroOneMatrix> {
    let n = host.n();
    if *host != lex_complete(n) {
        return Err(Error::InvalidArgument(
            "incidence extraction needs the lexicographically ordered complete host".into(),
        ));
    }
    if coloring.m() != host.m() {
        return Err(Error::DimensionMismatch(format!(
            "coloring covers {} edges, host has {}",
            coloring.m(),
            host.m()
        )));
    }
    let rows = n.div_ceil(2);
    let cols = n / 2;
    let mut ones = Vec::new();
    for i in 1..=rows {
        for j in 1..=cols {
            let (u, v) = (i - 1, rows + j - 1);
            let e = host
                .graph()
                .edge_index(u, v)
                .expect("complete hosts have every cross edge");
            if coloring.color(e) == color {
                ones.push((i, j));
            }
        }
    }
    ZeroOneMatrix::new(rows, cols, ones)
}

/// Extremal weight bound for matrices avoiding the `n`-vertex path pattern
/// in a host split of `N` vertices:
/// `(⌊n/2⌋−1)·⌈N/2⌉ + (⌈n/2⌉−1)·⌊N/2⌋ − (⌈n/2⌉−1)·(⌊n/2⌋−1)`.
///
/// The value can be negative for tiny parameters, hence the signed return.
pub fn path_weight_bound(n: usize, big_n: usize) -> Result<i64> {
    if n < 3 || big_n < 1 {
        return Err(Error::InvalidArgument(format!(
            "weight bound needs n >= 3 and N >= 1, got n={n}, N={big_n}"
        )));
    }
    let (half_up, half_down) = (n.div_ceil(2) as i64, (n / 2) as i64);
    let (cap_up, cap_down) = (big_n.div_ceil(2) as i64, (big_n / 2) as i64);
    Ok((half_down - 1) * cap_up + (half_up - 1) * cap_down - (half_up - 1) * (half_down - 1))
}

/// Maximum number of ones over all `rows × cols` matrices avoiding `pat`,
/// by exhausting all `2^(rows·cols)` candidates (capped at 24 cells). The
/// candidate space is sharded across threads; the maximum is
/// schedule-independent.
pub fn max_weight_avoiding(pat: &ZeroOneMatrix, rows: usize, cols: usize) -> Result<usize> {
    let cells = rows * cols;
    if cells > 24 {
        return Err(Error::LimitExceeded { n: cells, limit: 24 });
    }
    let total: u32 = 1 << cells;
    let best = (0..total)
        .into_par_iter()
        .map(|mask| {
            let ones = (0..cells)
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| (b / cols + 1, b % cols + 1));
            let candidate =
                ZeroOneMatrix::new(rows, cols, ones).expect("bit positions are in range");
            if contains_pattern(&candidate, pat) {
                0
            } else {
                candidate.count_ones()
            }
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}

/// Upper bound `2n − 3 + √(2n² − 8n + 11)` on the lexicographic value of
/// the ordered path on `n > 2` vertices.
pub fn lex_path_bound(n: usize) -> Result<f64> {
    if n <= 2 {
        return Err(Error::InvalidArgument(format!("bound needs n > 2, got {n}")));
    }
    let nf = n as f64;
    Ok(2.0 * nf - 3.0 + (2.0 * nf * nf - 8.0 * nf + 11.0).sqrt())
}
