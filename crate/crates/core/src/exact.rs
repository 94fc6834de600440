//! Exact chromatic number by DSATUR-ordered backtracking.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{dsatur, Coloring};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("instance too large for exact oracle: {n} vertices, cap {cap}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaResult {
    pub chi: usize,
    pub optimal_coloring: Coloring,
}

/// A chromatic number that is exact, or a greedy upper bound when the
/// instance exceeds the oracle cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiValue {
    pub value: usize,
    pub exact: bool,
}

pub fn chromatic_number(g: &Graph) -> Result<ChromaResult, ExactError> {
    chromatic_number_with_cap(g, DEFAULT_CAP)
}

pub fn chromatic_number_with_cap(g: &Graph, cap: usize) -> Result<ChromaResult, ExactError> {
    let n = g.n();
    if n > cap {
        return Err(ExactError::TooLarge { n, cap });
    }
    if n == 0 {
        return Ok(ChromaResult { chi: 0, optimal_coloring: Coloring::new(Vec::new()) });
    }
    let upper = dsatur(g);
    let lower = max_clique_size(g).max(1);
    for k in lower..upper.colors_used() {
        if let Some(c) = is_k_colorable(g, k) {
            return Ok(ChromaResult { chi: k, optimal_coloring: c });
        }
    }
    Ok(ChromaResult { chi: upper.colors_used(), optimal_coloring: upper })
}

/// Chromatic number of the subgraph induced by `set`.
pub fn chromatic_number_of(g: &Graph, set: &VertexSet, cap: usize) -> Result<usize, ExactError> {
    let (h, _) = g.induced_subgraph(set);
    chromatic_number_with_cap(&h, cap).map(|r| r.chi)
}

/// Exact when `|set| <= cap`, otherwise the DSATUR colour count.
pub fn chi_value(g: &Graph, set: &VertexSet, cap: usize) -> ChiValue {
    let (h, _) = g.induced_subgraph(set);
    match chromatic_number_with_cap(&h, cap) {
        Ok(r) => ChiValue { value: r.chi, exact: true },
        Err(_) => ChiValue { value: dsatur(&h).colors_used(), exact: false },
    }
}

/// A proper colouring with colours `1..=k`, or `None` when none exists.
///
/// Branches on the uncoloured vertex of largest saturation (ties: larger
/// degree, then smaller identifier) and only ever opens one new colour class
/// per step, so colour permutations are not re-explored.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::new(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let mut state =
        Search { g, k, colors: vec![0; n], counts: vec![0; n * (k + 1)], saturation: vec![0; n], colored: 0 };
    if state.solve(0) {
        Some(Coloring::new(state.colors))
    } else {
        None
    }
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    colors: Vec<usize>,
    /// counts[v * (k + 1) + c]: neighbours of v currently coloured c.
    counts: Vec<u32>,
    saturation: Vec<usize>,
    colored: usize,
}

impl Search<'_> {
    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        for v in 0..self.g.n() {
            if self.colors[v] != 0 {
                continue;
            }
            if best == usize::MAX
                || (self.saturation[v], self.g.degree(v)) > (self.saturation[best], self.g.degree(best))
            {
                best = v;
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        self.colored += 1;
        let stride = self.k + 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * stride + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        self.colored -= 1;
        let stride = self.k + 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * stride + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn solve(&mut self, max_used: usize) -> bool {
        if self.colored == self.g.n() {
            return true;
        }
        let v = self.pick();
        if self.saturation[v] >= self.k {
            return false;
        }
        let stride = self.k + 1;
        for c in 1..=(max_used + 1).min(self.k) {
            if self.counts[v * stride + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.solve(max_used.max(c)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// Size of a largest clique.
pub fn max_clique_size(g: &Graph) -> usize {
    fn extend(g: &Graph, size: usize, candidates: VertexSet, best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        if size + candidates.len() <= *best {
            return;
        }
        let mut rest = candidates;
        while let Some(v) = rest.first() {
            if size + rest.len() <= *best {
                return;
            }
            rest.remove(v);
            extend(g, size + 1, rest.intersection(g.neighbor_set(v)), best);
        }
    }
    let mut best = 0;
    extend(g, 0, g.vertex_set(), &mut best);
    best
}
