//! Greedy partition-respecting embedding with a red-biclique fallback.
//!
//! Given a target graph `H` with degeneracy `d`, a biclique parameter `t`,
//! and a 2-coloring of the complete host on `N = n'^2 · t^(d+1)` vertices
//! partitioned into `n'` equal parts, [`greedy_embed`] always certifies one
//! of two outcomes: a blue copy of `H` whose `i`-th vertex (in degeneracy
//! order) lands in part `i`, or a red complete bipartite graph with `t`
//! vertices in each of two distinct parts. [`verify_certificate`] checks
//! either certificate against the coloring without sharing any code with the
//! embedding procedure.

use crate::constructions::degeneracy_order;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, BLUE, RED};

/// Edge index of `{u, v}` in the complete graph on `n` vertices under the
/// sorted-pair listing used by [`Graph::complete`].
fn complete_edge_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// A greedy-embedding problem: target, processing order, and host partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyInstance {
    h: Graph,
    /// `order[i]` is the target vertex placed at step `i`; every vertex has
    /// at most `d` neighbors earlier in the order.
    order: Vec<usize>,
    d: usize,
    t: usize,
    /// `parts[i]` holds the host candidates for step `i`, strictly
    /// increasing; parts are disjoint with union `0..n_host`.
    parts: Vec<Vec<usize>>,
    n_host: usize,
}

fn required_part_size(np: usize, d: usize, t: usize) -> Result<usize> {
    np.checked_mul(
        t.checked_pow((d + 1) as u32)
            .ok_or(Error::Overflow("t^(d+1)"))?,
    )
    .ok_or(Error::Overflow("part size"))
}

impl GreedyInstance {
    pub fn new(
        h: Graph,
        order: Vec<usize>,
        d: usize,
        t: usize,
        parts: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let np = h.n();
        if np == 0 {
            return Err(Error::InvalidInstance("target graph is empty".into()));
        }
        if t == 0 {
            return Err(Error::InvalidInstance("t must be at least 1".into()));
        }
        if order.len() != np {
            return Err(Error::InvalidInstance("order length differs from target".into()));
        }
        let mut seen = vec![false; np];
        for &v in &order {
            if v >= np || seen[v] {
                return Err(Error::InvalidInstance("order is not a permutation".into()));
            }
            seen[v] = true;
        }
        let mut position = vec![0; np];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = h.adjacency();
        for (i, &v) in order.iter().enumerate() {
            let back = adjacency[v].iter().filter(|&&w| position[w] < i).count();
            if back > d {
                return Err(Error::InvalidInstance(format!(
                    "vertex {v} has {back} earlier neighbors, bound is {d}"
                )));
            }
        }
        let part_size = required_part_size(np, d, t)?;
        let n_host = part_size.checked_mul(np).ok_or(Error::Overflow("host size"))?;
        if parts.len() != np {
            return Err(Error::InvalidInstance("one part per target vertex required".into()));
        }
        let mut covered = vec![false; n_host];
        for part in &parts {
            if part.len() != part_size {
                return Err(Error::InvalidInstance(format!(
                    "part size {} differs from required {part_size}",
                    part.len()
                )));
            }
            if !part.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidInstance("parts must be strictly increasing".into()));
            }
            for &v in part {
                if v >= n_host || covered[v] {
                    return Err(Error::InvalidInstance(
                        "parts must be disjoint subsets of the host".into(),
                    ));
                }
                covered[v] = true;
            }
        }
        Ok(GreedyInstance { h, order, d, t, parts, n_host })
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn n_host(&self) -> usize {
        self.n_host
    }

    /// Number of host edges a coloring of this instance must cover.
    pub fn host_edge_count(&self) -> usize {
        self.n_host * (self.n_host - 1) / 2
    }
}

/// Instance for target `h` and parameter `t`: degeneracy order, part size
/// `n' · t^(d+1)`, and contiguous parts on `n'^2 · t^(d+1)` host vertices.
pub fn host_for(h: &Graph, t: usize) -> Result<GreedyInstance> {
    if h.n() == 0 {
        return Err(Error::InvalidInstance("target graph is empty".into()));
    }
    if t == 0 {
        return Err(Error::InvalidInstance("t must be at least 1".into()));
    }
    let (d, order) = degeneracy_order(h);
    let part_size = required_part_size(h.n(), d, t)?;
    let parts = (0..h.n())
        .map(|i| (i * part_size..(i + 1) * part_size).collect())
        .collect();
    GreedyInstance::new(h.clone(), order, d, t, parts)
}

/// Outcome of one greedy run.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GreedyCertificate {
    /// `map[v]` is the host vertex carrying target vertex `v`; the vertex
    /// placed at step `i` lies in part `i`, and every target edge is blue.
    BlueCopy { map: Vec<usize> },
    /// All `t²` host edges between `w ⊆ parts[part_a]` and
    /// `z ⊆ parts[part_b]` are red.
    RedBiclique { part_a: usize, part_b: usize, w: Vec<usize>, z: Vec<usize> },
}

fn check_coloring(inst: &GreedyInstance, coloring: &Coloring) -> Result<()> {
    if coloring.m() != inst.host_edge_count() {
        return Err(Error::DimensionMismatch(format!(
            "coloring covers {} edges, host has {}",
            coloring.m(),
            inst.host_edge_count()
        )));
    }
    if coloring.k() != 2 {
        return Err(Error::InvalidArgument(format!(
            "greedy embedding needs a red/blue coloring, got {} colors",
            coloring.k()
        )));
    }
    Ok(())
}

/// Embed a blue copy of the target respecting the partition, or exhibit a
/// red `t × t` biclique across two parts. Never fails on a valid instance.
///
/// Candidate sets start as the parts. A candidate is *good* when it has at
/// least a `1/t` fraction of blue neighbors in every forward neighbor's
/// candidate set; placing the lowest good candidate shrinks those sets to
/// its blue neighborhood, truncated down to a multiple of `t` by dropping
/// the highest vertices. When no candidate is good, some forward set has `t`
/// candidates that are each blue-poor there, and `t` vertices jointly missed
/// by them complete the red biclique.
pub fn greedy_embed(inst: &GreedyInstance, coloring: &Coloring) -> Result<GreedyCertificate> {
    check_coloring(inst, coloring)?;
    let np = inst.h.n();
    let n = inst.n_host;
    let is_blue = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        coloring.color(complete_edge_index(n, a, b)) == BLUE
    };
    let position = {
        let mut p = vec![0; np];
        for (i, &v) in inst.order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    // Forward neighbors of each step, as later step indices.
    let forward: Vec<Vec<usize>> = (0..np)
        .map(|i| {
            let mut f: Vec<usize> = inst.h.adjacency()[inst.order[i]]
                .iter()
                .map(|&w| position[w])
                .filter(|&j| j > i)
                .collect();
            f.sort_unstable();
            f
        })
        .collect();
    let mut cands: Vec<Vec<usize>> = inst.parts.clone();
    let mut updates = vec![0usize; np];
    let mut placed = vec![0usize; np];
    for i in 0..np {
        assert!(
            cands[i].len() >= np * inst.t,
            "candidate set shrank below n'·t, which the size arithmetic forbids"
        );
        for &j in &forward[i] {
            assert!(cands[j].len() % inst.t == 0, "candidate sets stay multiples of t");
        }
        let blue_degree = |v: usize, j: usize| cands[j].iter().filter(|&&z| is_blue(v, z)).count();
        let good = cands[i]
            .iter()
            .copied()
            .find(|&v| forward[i].iter().all(|&j| blue_degree(v, j) >= cands[j].len() / inst.t));
        match good {
            Some(v) => {
                placed[i] = v;
                for &j in &forward[i] {
                    let mut kept: Vec<usize> =
                        cands[j].iter().copied().filter(|&z| is_blue(v, z)).collect();
                    kept.truncate(kept.len() / inst.t * inst.t);
                    cands[j] = kept;
                    updates[j] += 1;
                    assert!(updates[j] <= inst.d, "each candidate set is updated at most d times");
                }
            }
            None => {
                // Every candidate is blue-poor toward some forward set; one
                // forward set collects t of them.
                let (j, bad) = forward[i]
                    .iter()
                    .map(|&j| {
                        let bad: Vec<usize> = cands[i]
                            .iter()
                            .copied()
                            .filter(|&v| blue_degree(v, j) + 1 <= cands[j].len() / inst.t)
                            .take(inst.t)
                            .collect();
                        (j, bad)
                    })
                    .find(|(_, bad)| bad.len() == inst.t)
                    .expect("pigeonhole guarantees t blue-poor candidates for some forward set");
                let z: Vec<usize> = cands[j]
                    .iter()
                    .copied()
                    .filter(|&zv| bad.iter().all(|&w| !is_blue(w, zv)))
                    .take(inst.t)
                    .collect();
                assert!(z.len() == inst.t, "at least t vertices avoid all blue neighborhoods");
                return Ok(GreedyCertificate::RedBiclique { part_a: i, part_b: j, w: bad, z });
            }
        }
    }
    let mut map = vec![0usize; np];
    for i in 0..np {
        map[inst.order[i]] = placed[i];
    }
    Ok(GreedyCertificate::BlueCopy { map })
}

/// Check a certificate against the coloring directly from its invariants.
pub fn verify_certificate(
    inst: &GreedyInstance,
    coloring: &Coloring,
    cert: &GreedyCertificate,
) -> bool {
    if check_coloring(inst, coloring).is_err() {
        return false;
    }
    let n = inst.n_host;
    let color_of = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        coloring.color(complete_edge_index(n, a, b))
    };
    match cert {
        GreedyCertificate::BlueCopy { map } => {
            if map.len() != inst.h.n() {
                return false;
            }
            for (i, &v) in inst.order.iter().enumerate() {
                if !inst.parts[i].contains(&map[v]) {
                    return false;
                }
            }
            inst.h
                .edges()
                .iter()
                .all(|&(u, v)| map[u] != map[v] && color_of(map[u], map[v]) == BLUE)
        }
        GreedyCertificate::RedBiclique { part_a, part_b, w, z } => {
            if part_a == part_b || *part_a >= inst.parts.len() || *part_b >= inst.parts.len() {
                return false;
            }
            if w.len() != inst.t || z.len() != inst.t {
                return false;
            }
            let distinct = |s: &[usize]| {
                let mut sorted = s.to_vec();
                sorted.sort_unstable();
                sorted.windows(2).all(|p| p[0] < p[1])
            };
            if !distinct(w) || !distinct(z) {
                return false;
            }
            if !w.iter().all(|v| inst.parts[*part_a].contains(v))
                || !z.iter().all(|v| inst.parts[*part_b].contains(v))
            {
                return false;
            }
            w.iter().all(|&a| z.iter().all(|&b| color_of(a, b) == RED))
        }
    }
}
