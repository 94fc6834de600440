//! Levellings `(L0, .., Lk)`: validation, stability, ceiling and floor paths,
//! dependent spines, lollipops and weak-stable extraction.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::holes::{HoleWitness, InducedPaths, Visit};
use crate::vertex_set::VertexSet;

mod lollipop;
mod spine;
mod stabilize;

pub use lollipop::{cleanliness, find_licking, find_licking_with_cap, is_licking, Lollipop};
pub use spine::{build_v_alpha, classify_types, prune_to_dependent_spine, SpineLevelling, VertexType};
pub use stabilize::{weak_stabilize, weak_stabilize_with_cap, WeakStable};

/// `|L0| = 1`; every vertex of `Li` (i >= 1) has a neighbour in `L(i-1)` and
/// none in `Lh` for `h <= i - 2`. Levels are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Levelling {
    levels: Vec<Vec<usize>>,
}

impl Levelling {
    pub fn new(g: &Graph, levels: Vec<Vec<usize>>) -> Result<Self, LevellingViolation> {
        validate_levelling(g, &levels)?;
        Ok(Levelling::new_unchecked(levels))
    }

    pub(crate) fn new_unchecked(mut levels: Vec<Vec<usize>>) -> Self {
        for l in &mut levels {
            l.sort_unstable();
        }
        Levelling { levels }
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn into_levels(self) -> Vec<Vec<usize>> {
        self.levels
    }

    /// The index `k` of the last level.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, i: usize) -> &[usize] {
        &self.levels[i]
    }

    pub fn last(&self) -> &[usize] {
        &self.levels[self.depth()]
    }

    pub fn root(&self) -> usize {
        self.levels[0][0]
    }

    /// `(L0, .., Lt)`.
    pub fn prefix(&self, t: usize) -> Levelling {
        Levelling { levels: self.levels[..=t].to_vec() }
    }

    pub fn level_of(&self, v: usize) -> Option<usize> {
        self.levels.iter().position(|l| l.binary_search(&v).is_ok())
    }

    pub fn level_set(&self, g: &Graph, i: usize) -> VertexSet {
        g.set_of(self.levels[i].iter().copied())
    }

    /// Union of all levels.
    pub fn vertices(&self, g: &Graph) -> VertexSet {
        g.set_of(self.levels.iter().flatten().copied())
    }

    /// Union of the levels `range`.
    pub fn band(&self, g: &Graph, range: core::ops::Range<usize>) -> VertexSet {
        g.set_of(self.levels[range].iter().flatten().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LevellingViolation {
    #[error("empty levelling")]
    Empty,
    #[error("root size: L0 has {size} vertices")]
    RootSize { size: usize },
    #[error("empty level: L{level}")]
    EmptyLevel { level: usize },
    #[error("out of range: vertex {vertex}")]
    OutOfRange { vertex: usize },
    #[error("repeated vertex: {vertex}")]
    Repeated { vertex: usize },
    #[error("no parent: vertex {vertex} in L{level} has no neighbour in the previous level")]
    NoParent { vertex: usize, level: usize },
    #[error("back edge: vertex {vertex} in L{level} is adjacent to {other} in L{other_level}")]
    BackEdge { vertex: usize, level: usize, other: usize, other_level: usize },
}

/// Checks the levelling invariants and names the first offending vertex.
pub fn validate_levelling(g: &Graph, seq: &[Vec<usize>]) -> Result<(), LevellingViolation> {
    if seq.is_empty() {
        return Err(LevellingViolation::Empty);
    }
    if seq[0].len() != 1 {
        return Err(LevellingViolation::RootSize { size: seq[0].len() });
    }
    let n = g.n();
    let mut level_of = alloc::vec![usize::MAX; n];
    for (i, l) in seq.iter().enumerate() {
        if l.is_empty() {
            return Err(LevellingViolation::EmptyLevel { level: i });
        }
        for &v in l {
            if v >= n {
                return Err(LevellingViolation::OutOfRange { vertex: v });
            }
            if level_of[v] != usize::MAX {
                return Err(LevellingViolation::Repeated { vertex: v });
            }
            level_of[v] = i;
        }
    }
    for (i, l) in seq.iter().enumerate() {
        let mut sorted = l.clone();
        sorted.sort_unstable();
        for &v in &sorted {
            let mut has_parent = i == 0;
            for &w in g.neighbors(v) {
                let j = level_of[w];
                if j == usize::MAX {
                    continue;
                }
                if j + 1 == i {
                    has_parent = true;
                } else if j + 2 <= i {
                    return Err(LevellingViolation::BackEdge { vertex: v, level: i, other: w, other_level: j });
                }
            }
            if !has_parent {
                return Err(LevellingViolation::NoParent { vertex: v, level: i });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityKind {
    /// `L0, .., L(k-1)` independent.
    Stable,
    /// `L1, .., L(k-2)` independent.
    WeakStable,
    Plain,
}

/// The strongest kind that applies.
pub fn stability_kind(g: &Graph, lv: &Levelling) -> StabilityKind {
    let k = lv.depth();
    let independent = |i: usize| {
        let l = lv.level(i);
        l.iter().all(|&v| l.iter().all(|&w| !g.has_edge(v, w)))
    };
    if (0..k).all(independent) {
        StabilityKind::Stable
    } else if (1..k.saturating_sub(1)).all(independent) {
        StabilityKind::WeakStable
    } else {
        StabilityKind::Plain
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parity {
    #[default]
    Any,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, edges: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => edges.is_multiple_of(2),
            Parity::Odd => edges % 2 == 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LevellingError {
    #[error("invalid levelling: {0}")]
    Invalid(#[from] LevellingViolation),
    #[error("endpoints must be distinct")]
    SameVertex,
    #[error("vertices {0} and {1} are not in the same level")]
    NotSameLevel(usize, usize),
    #[error("ceiling paths need endpoints below L0")]
    RootLevel,
    #[error("levelling does not cover the graph")]
    NotSpanning,
    #[error("last level does not induce a connected subgraph")]
    LastLevelDisconnected,
    #[error("levelling collapsed: L{level} emptied while pruning")]
    Collapsed { level: usize },
    #[error("invalid spine: {0}")]
    InvalidSpine(&'static str),
    #[error("spine assumption violated at vertex {vertex}")]
    SpineAssumption { vertex: usize },
    #[error("invalid lollipop: {0}")]
    InvalidLollipop(&'static str),
    #[error("hypothesis unmet: chi(C) = {chi} <= {bound}")]
    HypothesisUnmet { chi: usize, bound: usize },
    #[error("licking search exhausted")]
    LickingExhausted,
    #[error("graph is outside the class: {kind} {cycle:?}", kind = .0.kind, cycle = .0.cycle)]
    NotInClass(HoleWitness),
    #[error("construction failed: {0}")]
    Internal(&'static str),
}

/// Induced `u`-`v` path whose interior lies in the levels above that of `u`
/// and `v`: shortest admissible by `parity`, ties broken lexicographically.
pub fn ceiling_path(
    g: &Graph,
    lv: &Levelling,
    u: usize,
    v: usize,
    parity: Parity,
) -> Result<Option<Vec<usize>>, LevellingError> {
    let i = same_level(lv, u, v)?;
    if i == 0 {
        return Err(LevellingError::RootLevel);
    }
    Ok(level_path(g, u, v, &lv.band(g, 0..i), parity))
}

/// Induced `u`-`v` path whose interior lies in the levels below that of `u`
/// and `v`; same preference order as [`ceiling_path`].
pub fn floor_path(
    g: &Graph,
    lv: &Levelling,
    u: usize,
    v: usize,
    parity: Parity,
) -> Result<Option<Vec<usize>>, LevellingError> {
    let i = same_level(lv, u, v)?;
    Ok(level_path(g, u, v, &lv.band(g, i + 1..lv.depth() + 1), parity))
}

fn same_level(lv: &Levelling, u: usize, v: usize) -> Result<usize, LevellingError> {
    if u == v {
        return Err(LevellingError::SameVertex);
    }
    match (lv.level_of(u), lv.level_of(v)) {
        (Some(a), Some(b)) if a == b => Ok(a),
        _ => Err(LevellingError::NotSameLevel(u, v)),
    }
}

fn level_path(g: &Graph, u: usize, v: usize, interior: &VertexSet, parity: Parity) -> Option<Vec<usize>> {
    if g.has_edge(u, v) {
        // Any longer u-v path has the chord uv.
        return parity.admits(1).then(|| alloc::vec![u, v]);
    }
    let mut best: Option<Vec<usize>> = None;
    let want = match parity {
        Parity::Any => None,
        Parity::Even => Some(0),
        Parity::Odd => Some(1),
    };
    InducedPaths::run_with_parity(g, u, v, interior, g.n(), want, |p| {
        let better = match &best {
            None => true,
            Some(b) => p.len() < b.len() || (p.len() == b.len() && p < b.as_slice()),
        };
        if better {
            best = Some(p.to_vec());
        }
        Visit::Limit(p.len() - 1)
    });
    best
}
