//! Backtracking coloring search over a copy hypergraph.
//!
//! Variables are host edges, values are colors, and each constraint forbids
//! one copy (a set of edges) from being entirely one color. Unit propagation:
//! once a copy has all but one edge in its color, that last edge loses the
//! color from its domain; singleton domains are assigned immediately.
//! Branching picks an edge lying in the most "near-monochromatic" alive
//! copies (at most two uncolored edges), breaking ties by lowest edge
//! priority, and tries colors in ascending order — so the search, and the
//! first avoiding coloring it finds, are fully deterministic.

use serde::{Deserialize, Serialize};

/// Copy-avoidance instance: `m` edge variables, `k` colors, and for each
/// constraint the color it forbids together with the copy's edge indices.
pub(crate) struct CopyConstraints {
    pub m: usize,
    pub k: usize,
    pub constraints: Vec<(u8, Vec<u32>)>,
    /// Tie-break order for branching; lower is preferred. For edge-ordered
    /// hosts this is the edge rank, otherwise the edge index.
    pub priority: Vec<u32>,
}

/// Search-effort counters, reported in certificates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Branching decisions taken.
    pub nodes: u64,
    /// Domain deletions performed by unit propagation.
    pub propagations: u64,
}

pub(crate) struct SolveOutcome {
    /// Colors by edge index for the first avoiding coloring, if one exists.
    pub witness: Option<Vec<u8>>,
    pub stats: SearchStats,
}

const UNASSIGNED: u8 = u8::MAX;

enum Trail {
    Assign(u32),
    Domain(u32, u8),
    Dead(u32),
}

struct Solver<'a> {
    cons: &'a [(u8, Vec<u32>)],
    k: u8,
    by_edge: Vec<Vec<u32>>,
    assign: Vec<u8>,
    domain: Vec<u8>, // bitmask over colors
    unassigned_in: Vec<u32>,
    dead: Vec<bool>,
    trail: Vec<Trail>,
    priority: &'a [u32],
    stats: SearchStats,
}

impl<'a> Solver<'a> {
    fn new(inst: &'a CopyConstraints) -> Self {
        let mut by_edge = vec![Vec::new(); inst.m];
        for (ci, (_, edges)) in inst.constraints.iter().enumerate() {
            for &e in edges {
                by_edge[e as usize].push(ci as u32);
            }
        }
        let full: u8 = if inst.k == 8 { 0xff } else { (1u8 << inst.k) - 1 };
        Solver {
            cons: &inst.constraints,
            k: inst.k as u8,
            by_edge,
            assign: vec![UNASSIGNED; inst.m],
            domain: vec![full; inst.m],
            unassigned_in: inst.constraints.iter().map(|(_, e)| e.len() as u32).collect(),
            dead: vec![false; inst.constraints.len()],
            trail: Vec::new(),
            priority: &inst.priority,
            stats: SearchStats::default(),
        }
    }

    /// Assigns edge `e` to color `c`, updating constraint counters and
    /// queueing forced assignments. Returns `false` on conflict.
    fn assign_edge(&mut self, e: u32, c: u8, queue: &mut Vec<(u32, u8)>) -> bool {
        let ei = e as usize;
        if self.assign[ei] != UNASSIGNED {
            return self.assign[ei] == c;
        }
        if self.domain[ei] & (1 << c) == 0 {
            return false;
        }
        self.assign[ei] = c;
        self.trail.push(Trail::Assign(e));
        // `undo_to` re-increments the counter for every constraint in
        // `by_edge[e]`, so the decrement loop must run to completion even
        // after a conflict is detected.
        let mut ok = true;
        for idx in 0..self.by_edge[ei].len() {
            let ci = self.by_edge[ei][idx];
            let cu = ci as usize;
            self.unassigned_in[cu] -= 1;
            if !ok || self.dead[cu] {
                continue;
            }
            let (color, edges) = &self.cons[cu];
            if *color != c {
                // An off-color edge satisfies the copy forever.
                self.dead[cu] = true;
                self.trail.push(Trail::Dead(ci));
                continue;
            }
            match self.unassigned_in[cu] {
                0 => ok = false, // the copy went monochromatic
                1 => {
                    let &f = edges
                        .iter()
                        .find(|&&f| self.assign[f as usize] == UNASSIGNED)
                        .expect("count says one edge is unassigned");
                    let fi = f as usize;
                    let bit = 1u8 << *color;
                    if self.domain[fi] & bit != 0 {
                        self.trail.push(Trail::Domain(f, self.domain[fi]));
                        self.domain[fi] &= !bit;
                        self.stats.propagations += 1;
                        match self.domain[fi].count_ones() {
                            0 => ok = false,
                            1 => queue.push((f, self.domain[fi].trailing_zeros() as u8)),
                            _ => {}
                        }
                    }
                }
                _ => {}
            }
        }
        ok
    }

    fn propagate(&mut self, queue: &mut Vec<(u32, u8)>) -> bool {
        while let Some((e, c)) = queue.pop() {
            if !self.assign_edge(e, c, queue) {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Trail::Assign(e) => {
                    let ei = e as usize;
                    self.assign[ei] = UNASSIGNED;
                    for idx in 0..self.by_edge[ei].len() {
                        let ci = self.by_edge[ei][idx] as usize;
                        self.unassigned_in[ci] += 1;
                    }
                }
                Trail::Domain(e, old) => self.domain[e as usize] = old,
                Trail::Dead(ci) => self.dead[ci as usize] = false,
            }
        }
    }

    /// Unassigned edge in the most alive near-monochromatic copies; `None`
    /// when everything is assigned.
    fn choose_branch(&self) -> Option<u32> {
        let mut score = vec![0u32; self.assign.len()];
        for (ci, (_, edges)) in self.cons.iter().enumerate() {
            if self.dead[ci] || self.unassigned_in[ci] > 2 {
                continue;
            }
            for &e in edges {
                if self.assign[e as usize] == UNASSIGNED {
                    score[e as usize] += 1;
                }
            }
        }
        (0..self.assign.len())
            .filter(|&e| self.assign[e] == UNASSIGNED)
            .max_by(|&a, &b| {
                (score[a], std::cmp::Reverse(self.priority[a]))
                    .cmp(&(score[b], std::cmp::Reverse(self.priority[b])))
            })
            .map(|e| e as u32)
    }

    fn dfs(&mut self) -> Option<Vec<u8>> {
        let Some(e) = self.choose_branch() else {
            return Some(self.assign.clone());
        };
        self.stats.nodes += 1;
        for c in 0..self.k {
            if self.domain[e as usize] & (1 << c) == 0 {
                continue;
            }
            let mark = self.trail.len();
            let mut queue = vec![(e, c)];
            if self.propagate(&mut queue) {
                if let Some(w) = self.dfs() {
                    return Some(w);
                }
            }
            self.undo_to(mark);
        }
        None
    }
}

/// Runs the search. `symmetry_fix` pre-assigns one edge to one color before
/// branching; callers must only pass it when a color symmetry justifies it.
pub(crate) fn solve(inst: &CopyConstraints, symmetry_fix: Option<(u32, u8)>) -> SolveOutcome {
    debug_assert_eq!(inst.priority.len(), inst.m);
    debug_assert!(inst.k >= 1 && inst.k <= 8);
    // A copy with no edges is monochromatic under every coloring.
    if inst.constraints.iter().any(|(_, edges)| edges.is_empty()) {
        return SolveOutcome { witness: None, stats: SearchStats::default() };
    }
    let mut solver = Solver::new(inst);
    if let Some((e, c)) = symmetry_fix {
        let mut queue = vec![(e, c)];
        if !solver.propagate(&mut queue) {
            return SolveOutcome { witness: None, stats: solver.stats };
        }
    }
    let witness = solver.dfs();
    SolveOutcome { witness, stats: solver.stats }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn inst(m: usize, k: usize, constraints: Vec<(u8, Vec<u32>)>) -> CopyConstraints {
        let priority = (0..m as u32).collect();
        CopyConstraints { m, k, constraints, priority }
    }

    #[test]
    fn empty_copy_is_unsatisfiable() {
        let out = solve(&inst(3, 2, vec![(0, vec![])]), None);
        assert!(out.witness.is_none());
    }

    #[test]
    fn no_constraints_yields_first_coloring() {
        let out = solve(&inst(3, 2, vec![]), None);
        assert_eq!(out.witness, Some(vec![0, 0, 0]));
    }

    #[test]
    fn triangle_on_k3_needs_one_off_color_edge() {
        // Both colors forbid the full triangle {0,1,2}.
        let cs = vec![(0u8, vec![0, 1, 2]), (1u8, vec![0, 1, 2])];
        let out = solve(&inst(3, 2, cs), None);
        let w = out.witness.expect("an avoiding coloring exists");
        assert!(w.iter().any(|&c| c != w[0]));
    }

    #[test]
    fn propagation_forces_last_edge_away() {
        // Single red copy {0,1}: assigning 0 red must force 1 blue.
        let cs = vec![(0u8, vec![0, 1])];
        let out = solve(&inst(2, 2, cs), Some((0, 0)));
        assert_eq!(out.witness, Some(vec![0, 1]));
        assert!(out.stats.propagations >= 1);
    }

    #[test]
    fn unsatisfiable_sunflower() {
        // k = 2 on a single edge with both colors forbidden as singletons.
        let cs = vec![(0u8, vec![0]), (1u8, vec![0])];
        assert!(solve(&inst(1, 2, cs), None).witness.is_none());
    }

    #[test]
    fn agrees_with_exhaustive_oracle_on_random_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let m = rng.gen_range(1..=8);
            let k = rng.gen_range(1..=3);
            let n_cons = rng.gen_range(0..=6);
            let mut constraints = Vec::new();
            for _ in 0..n_cons {
                let color = rng.gen_range(0..k) as u8;
                let size = rng.gen_range(1..=m.min(4));
                let mut edges: Vec<u32> = (0..m as u32).collect();
                for i in (1..edges.len()).rev() {
                    let j = rng.gen_range(0..=i);
                    edges.swap(i, j);
                }
                edges.truncate(size);
                edges.sort_unstable();
                constraints.push((color, edges));
            }
            let out = solve(&inst(m, k, constraints.clone()), None);
            let mut per_color: Vec<Vec<Vec<usize>>> = vec![Vec::new(); k];
            for (c, edges) in &constraints {
                per_color[*c as usize].push(edges.iter().map(|&e| e as usize).collect());
            }
            let naive = oracle::first_avoiding_coloring_naive(m, k, &per_color);
            assert_eq!(
                out.witness.is_some(),
                naive.is_some(),
                "solver and oracle disagree on satisfiability: {constraints:?}"
            );
            if let Some(w) = out.witness {
                assert!(!oracle::has_monochromatic_copy(&w, &per_color));
            }
        }
    }
}
