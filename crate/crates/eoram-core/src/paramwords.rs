//! Parameter words, the subset host, and induced-copy verification.
//!
//! A *t-parameter word* of length `N` over an alphabet `A` is a sequence
//! over `A ∪ {λ₁, …, λ_t}` in which every parameter occurs and first
//! occurrences appear in index order. Words compose by substitution
//! ([`compose`]), and 3-parameter words over a single letter encode the
//! edges of the *subset host*: the graph on all subsets of `{1, …, N}`
//! joining sets with nonempty intersection, vertex-ordered by minimum
//! element and edge-ordered by minimum of the intersection
//! ([`SubsetHost`], [`word_to_edge`]).
//!
//! An `(n+m)`-parameter word `w` whose induced edge colors are constant
//! selects `n` subsets `F₁ … F_n` ([`extract_f_star`]) that form an induced,
//! order-respecting, monochromatic copy of a given ordered target;
//! [`verify_induced_copy`] checks all of that directly against the subsets
//! and the coloring. Positions and ground elements are 1-indexed.

use crate::error::{Error, Result};
use crate::graph::EdgeOrderedGraph;
use std::cmp::Ordering;

/// Largest ground-set size for which the subset host is materialized.
pub const SUBSET_HOST_LIMIT: usize = 12;

/// One symbol of a parameter word: a fixed letter or a parameter `λ_j`
/// (`j` is 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    Letter(u8),
    Lambda(usize),
}

/// A parameter word. Constructed strictly via [`ParameterWord::new`]
/// (enforcing the first-occurrence invariant) or loosely via
/// [`ParameterWord::new_relaxed`], which the copy verifier accepts so that
/// structurally broken words are *reported* as failed conclusions rather
/// than rejected up front.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterWord {
    alphabet_size: u8,
    t: usize,
    symbols: Vec<Sym>,
}

impl ParameterWord {
    /// Validate everything: ranges, occurrence of every parameter, and
    /// first occurrences in index order.
    pub fn new(alphabet_size: u8, t: usize, symbols: Vec<Sym>) -> Result<Self> {
        let word = Self::new_relaxed(alphabet_size, t, symbols)?;
        if !word.is_valid() {
            return Err(Error::InvalidArgument(
                "first occurrences of parameters must be in index order".into(),
            ));
        }
        Ok(word)
    }

    /// Validate ranges and that every parameter occurs, but allow first
    /// occurrences in any order.
    pub fn new_relaxed(alphabet_size: u8, t: usize, symbols: Vec<Sym>) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::InvalidArgument("alphabet must be nonempty".into()));
        }
        let mut seen = vec![false; t];
        for &s in &symbols {
            match s {
                Sym::Letter(a) if a < alphabet_size => {}
                Sym::Letter(a) => {
                    return Err(Error::InvalidArgument(format!(
                        "letter {a} outside alphabet of size {alphabet_size}"
                    )));
                }
                Sym::Lambda(j) if j >= 1 && j <= t => seen[j - 1] = true,
                Sym::Lambda(j) => {
                    return Err(Error::InvalidArgument(format!(
                        "parameter index {j} outside 1..={t}"
                    )));
                }
            }
        }
        if let Some(j) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidArgument(format!(
                "parameter {} never occurs",
                j + 1
            )));
        }
        Ok(ParameterWord { alphabet_size, t, symbols })
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Sym] {
        &self.symbols
    }

    /// 1-based positions of `λ_j` (the set `S_j`).
    pub fn positions_of(&self, j: usize) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == Sym::Lambda(j))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Does the word satisfy the strict first-occurrence invariant?
    pub fn is_valid(&self) -> bool {
        let firsts: Vec<usize> = (1..=self.t)
            .map(|j| {
                self.symbols
                    .iter()
                    .position(|&s| s == Sym::Lambda(j))
                    .expect("occurrence was checked at construction")
            })
            .collect();
        firsts.windows(2).all(|w| w[0] < w[1])
    }
}

/// Substitution composition: replace each `λ_j` of `f` by the `j`-th symbol
/// of `g`. For `f` of length `N` with `t` parameters and `g` of length `t`
/// with `r` parameters, the result has length `N` and `r` parameters.
pub fn compose(f: &ParameterWord, g: &ParameterWord) -> Result<ParameterWord> {
    if g.len() != f.t() {
        return Err(Error::DimensionMismatch(format!(
            "composition needs |g| = {} parameters of f, got {}",
            f.t(),
            g.len()
        )));
    }
    if f.alphabet_size() != g.alphabet_size() {
        return Err(Error::DimensionMismatch("alphabets differ".into()));
    }
    let symbols = f
        .symbols()
        .iter()
        .map(|&s| match s {
            Sym::Letter(a) => Sym::Letter(a),
            Sym::Lambda(j) => g.symbols()[j - 1],
        })
        .collect();
    // Valid inputs compose to valid words; relaxed inputs may not, and the
    // verifier depends on composing them mechanically.
    ParameterWord::new_relaxed(f.alphabet_size(), g.t(), symbols)
}

/// All valid `t`-parameter words of length `len` over an alphabet of size
/// `alphabet_size`, in lexicographic symbol order (letters before
/// parameters at each position).
pub fn enumerate_words(alphabet_size: u8, len: usize, t: usize) -> Vec<ParameterWord> {
    fn rec(
        alphabet_size: u8,
        len: usize,
        t: usize,
        used: usize,
        cur: &mut Vec<Sym>,
        out: &mut Vec<ParameterWord>,
    ) {
        if t - used > len - cur.len() {
            return; // not enough room to introduce the remaining parameters
        }
        if cur.len() == len {
            out.push(
                ParameterWord::new(alphabet_size, t, cur.clone())
                    .expect("construction preserves the invariants"),
            );
            return;
        }
        for a in 0..alphabet_size {
            cur.push(Sym::Letter(a));
            rec(alphabet_size, len, t, used, cur, out);
            cur.pop();
        }
        for j in 1..=used {
            cur.push(Sym::Lambda(j));
            rec(alphabet_size, len, t, used, cur, out);
            cur.pop();
        }
        if used < t {
            cur.push(Sym::Lambda(used + 1));
            rec(alphabet_size, len, t, used + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(alphabet_size, len, t, 0, &mut Vec::with_capacity(len), &mut out);
    out
}

/// The identity word `λ₁ λ₂ … λ_t`, the two-sided unit of composition.
pub fn identity_word(alphabet_size: u8, t: usize) -> ParameterWord {
    ParameterWord::new(alphabet_size, t, (1..=t).map(Sym::Lambda).collect())
        .expect("the identity word is valid")
}

/// The subset pair encoded by a 3-parameter word: `X = S₁ ∪ S₃` and
/// `Y = S₂ ∪ S₃`, as sorted 1-based element lists. For strictly valid words
/// `X ∩ Y = S₃` is nonempty and `X` precedes `Y` in the host vertex order.
pub fn word_to_edge(w: &ParameterWord) -> Result<(Vec<usize>, Vec<usize>)> {
    if w.t() != 3 {
        return Err(Error::DimensionMismatch(format!(
            "edge encoding needs exactly 3 parameters, got {}",
            w.t()
        )));
    }
    let (s1, s2, s3) = (w.positions_of(1), w.positions_of(2), w.positions_of(3));
    let mut x = s1;
    x.extend_from_slice(&s3);
    x.sort_unstable();
    let mut y = s2;
    y.extend_from_slice(&s3);
    y.sort_unstable();
    Ok((x, y))
}

/// Vertex comparison of the subset host: by minimum element (the empty set
/// first), ties broken by the lexicographic order of the sorted element
/// lists.
pub fn compare_vertices(a: &[usize], b: &[usize]) -> Ordering {
    let min = |s: &[usize]| s.first().copied().unwrap_or(0);
    min(a).cmp(&min(b)).then_with(|| a.cmp(b))
}

/// Edge comparison of the subset host: by minimum of the intersection, ties
/// broken by the vertex keys of the (vertex-order-normalized) endpoint
/// pairs. Both pairs must genuinely be edges: distinct sets with nonempty
/// intersection.
pub fn compare_edges(a: (&[usize], &[usize]), b: (&[usize], &[usize])) -> Ordering {
    fn normalized<'s>(e: (&'s [usize], &'s [usize])) -> (&'s [usize], &'s [usize]) {
        if compare_vertices(e.0, e.1) == Ordering::Greater {
            (e.1, e.0)
        } else {
            e
        }
    }
    fn min_intersection(e: (&[usize], &[usize])) -> usize {
        e.0.iter()
            .find(|v| e.1.contains(v))
            .copied()
            .expect("edge endpoints must intersect")
    }
    let (a, b) = (normalized(a), normalized(b));
    min_intersection(a)
        .cmp(&min_intersection(b))
        .then_with(|| compare_vertices(a.0, b.0))
        .then_with(|| compare_vertices(a.1, b.1))
}

/// The materialized subset host on ground set `{1, …, N}`: all `2^N`
/// subsets in vertex order.
#[derive(Clone, Debug)]
pub struct SubsetHost {
    n: usize,
    vertices: Vec<Vec<usize>>,
}

impl SubsetHost {
    pub fn new(n: usize) -> Result<Self> {
        if n > SUBSET_HOST_LIMIT {
            return Err(Error::LimitExceeded { n, limit: SUBSET_HOST_LIMIT });
        }
        let mut vertices: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect())
            .collect();
        vertices.sort_by(|a, b| compare_vertices(a, b));
        Ok(SubsetHost { n, vertices })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// All subsets in vertex order; the index in this list is the vertex id.
    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn vertex_index(&self, subset: &[usize]) -> Option<usize> {
        self.vertices
            .binary_search_by(|probe| compare_vertices(probe, subset))
            .ok()
    }

    /// Distinct subsets with nonempty intersection are adjacent.
    pub fn is_edge(&self, x: &[usize], y: &[usize]) -> bool {
        x != y && x.iter().any(|v| y.contains(v))
    }
}

/// The `n` subsets selected by an `(n+m)`-parameter word for a target with
/// `n` vertices and `m` edges: `F_i` is `S_i` together with the blocks
/// `S_{n+l}` of all edges `f_l` incident to vertex `i − 1` (edges numbered
/// by rank).
pub fn extract_f_star(w: &ParameterWord, target: &EdgeOrderedGraph) -> Result<Vec<Vec<usize>>> {
    let (n, m) = (target.n(), target.m());
    if w.t() != n + m {
        return Err(Error::DimensionMismatch(format!(
            "word has {} parameters, target needs n + m = {}",
            w.t(),
            n + m
        )));
    }
    let edges_in_order = target.edges_in_order();
    let mut sets = Vec::with_capacity(n);
    for v in 0..n {
        let mut f = w.positions_of(v + 1);
        for (l, &(a, b)) in edges_in_order.iter().enumerate() {
            if a == v || b == v {
                f.extend(w.positions_of(n + l + 1));
            }
        }
        f.sort_unstable();
        sets.push(f);
    }
    Ok(sets)
}

/// The 3-parameter selector word for the edge `{u, v}` of the target: its
/// composition with an `(n+m)`-parameter word `w` encodes exactly the host
/// edge between the extracted sets `F_u` and `F_v`.
///
/// `λ₁` marks `u`'s own block and the blocks of `u`'s other edges, `λ₂` the
/// same for `v`, and `λ₃` the block of `{u, v}` itself; all remaining
/// positions are the letter 0.
pub fn build_edge_selector(
    w: &ParameterWord,
    target: &EdgeOrderedGraph,
    u: usize,
    v: usize,
) -> Result<ParameterWord> {
    let (n, m) = (target.n(), target.m());
    if w.t() != n + m {
        return Err(Error::DimensionMismatch(format!(
            "word has {} parameters, target needs n + m = {}",
            w.t(),
            n + m
        )));
    }
    let (u, v) = (u.min(v), u.max(v));
    let edge = target.graph().edge_index(u, v).ok_or(Error::NotAnEdge { u, v })?;
    let rank = target.rank_of(edge);
    let edges_in_order = target.edges_in_order();
    let mut symbols = vec![Sym::Letter(0); n + m];
    symbols[u] = Sym::Lambda(1);
    symbols[v] = Sym::Lambda(2);
    for (l, &(a, b)) in edges_in_order.iter().enumerate() {
        if l == rank {
            symbols[n + l] = Sym::Lambda(3);
        } else if a == u || b == u {
            symbols[n + l] = Sym::Lambda(1);
        } else if a == v || b == v {
            symbols[n + l] = Sym::Lambda(2);
        }
    }
    let selector = ParameterWord::new(w.alphabet_size(), 3, symbols)?;
    // The defining block condition: composing selects exactly the host edge
    // between the extracted sets, with the shared block as intersection.
    if w.is_valid() {
        let sets = extract_f_star(w, target)?;
        let (x, y) = word_to_edge(&compose(w, &selector)?)?;
        let shared = w.positions_of(n + rank + 1);
        let minus = |s: &[usize]| -> Vec<usize> {
            s.iter().copied().filter(|p| !shared.contains(p)).collect()
        };
        assert_eq!(minus(&x), minus(&sets[u]), "λ₁ block must cover F_u minus the shared block");
        assert_eq!(minus(&y), minus(&sets[v]), "λ₂ block must cover F_v minus the shared block");
    }
    Ok(selector)
}

/// Verification report for one extracted copy; `all_ok` only when every
/// conclusion holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopyReport {
    /// The constant color of the word's selector compositions (`None` for
    /// edgeless targets with no selectors to check).
    pub color: Option<u8>,
    /// The extracted sets `F₁ … F_n`.
    pub sets: Vec<Vec<usize>>,
    /// Conclusion 1: the sets appear in host vertex order.
    pub vertex_order_ok: bool,
    /// Conclusion 2: adjacency matches the target exactly, with each
    /// intersection equal to the shared edge block (the copy is induced).
    pub edges_ok: bool,
    /// Conclusion 3: the host edge order of the copy matches the target's
    /// edge order.
    pub edge_order_ok: bool,
    /// Conclusion 4: every copy edge carries the constant color.
    pub colors_ok: bool,
}

impl CopyReport {
    pub fn all_ok(&self) -> bool {
        self.vertex_order_ok && self.edges_ok && self.edge_order_ok && self.colors_ok
    }
}

/// Check that the word `w` extracts a monochromatic induced ordered copy of
/// `target` in the subset host on `{1, …, N}` under the edge coloring
/// `chi`.
///
/// `chi` is called with the two endpoint subsets in host vertex order and
/// must be well defined on unordered pairs. The precondition that all
/// selector compositions `w · v` receive one color is *checked*: a clash
/// yields [`Error::NotMonochromaticWord`] with the two offending colors.
pub fn verify_induced_copy(
    n_ground: usize,
    target: &EdgeOrderedGraph,
    w: &ParameterWord,
    chi: impl Fn(&[usize], &[usize]) -> u8,
) -> Result<CopyReport> {
    if n_ground > SUBSET_HOST_LIMIT {
        return Err(Error::LimitExceeded { n: n_ground, limit: SUBSET_HOST_LIMIT });
    }
    if w.len() != n_ground {
        return Err(Error::DimensionMismatch(format!(
            "word length {} differs from ground size {n_ground}",
            w.len()
        )));
    }
    let (n, m) = (target.n(), target.m());
    if w.t() != n + m {
        return Err(Error::DimensionMismatch(format!(
            "word has {} parameters, target needs n + m = {}",
            w.t(),
            n + m
        )));
    }
    let ordered_chi = |a: &[usize], b: &[usize]| -> u8 {
        if compare_vertices(a, b) == Ordering::Greater {
            chi(b, a)
        } else {
            chi(a, b)
        }
    };
    // Monochromaticity of the word: every 3-parameter substitution instance
    // must land on one color.
    let mut color: Option<u8> = None;
    for selector in enumerate_words(w.alphabet_size(), n + m, 3) {
        let (x, y) = word_to_edge(&compose(w, &selector)?)?;
        let c = ordered_chi(&x, &y);
        match color {
            None => color = Some(c),
            Some(b) if b != c => {
                return Err(Error::NotMonochromaticWord { first: b, second: c });
            }
            Some(_) => {}
        }
    }
    let sets = extract_f_star(w, target)?;
    let vertex_order_ok = (0..n)
        .zip(1..n)
        .all(|(i, j)| compare_vertices(&sets[i], &sets[j]) == Ordering::Less);
    let edges_in_order = target.edges_in_order();
    let mut edges_ok = true;
    for i in 0..n {
        for j in i + 1..n {
            let inter: Vec<usize> =
                sets[i].iter().copied().filter(|p| sets[j].contains(p)).collect();
            match target.graph().edge_index(i, j) {
                Some(e) => {
                    let block = w.positions_of(n + target.rank_of(e) + 1);
                    edges_ok &= !inter.is_empty() && inter == block && sets[i] != sets[j];
                }
                None => edges_ok &= inter.is_empty(),
            }
        }
    }
    let images: Vec<(&[usize], &[usize])> = edges_in_order
        .iter()
        .map(|&(a, b)| (sets[a].as_slice(), sets[b].as_slice()))
        .collect();
    // Comparing images requires each to be a genuine host edge; that is
    // exactly conclusion 2, so a failed adjacency check suppresses the
    // order check instead of panicking inside the comparator.
    let edge_order_ok = edges_ok
        && images
            .windows(2)
            .all(|pair| compare_edges(pair[0], pair[1]) == Ordering::Less);
    let colors_ok = match color {
        Some(b) => {
            edges_ok
                && images
                    .iter()
                    .all(|&(x, y)| ordered_chi(x, y) == b)
        }
        None => true,
    };
    Ok(CopyReport { color, sets, vertex_order_ok, edges_ok, edge_order_ok, colors_ok })
}
