//! Induced cycles, girth, and witness-producing membership tests for the
//! girth / odd-hole restricted graph families.
//!
//! Every family is described by the set of induced-cycle lengths it forbids:
//! a graph has girth at least `g` exactly when it has no induced cycle shorter
//! than `g`, because a shortest cycle is always induced.

mod search;

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;
pub(crate) use search::{InducedPaths, Visit};

/// The four families.
///
/// * `A`: girth at least `2l`, no odd hole of length at least `2l + 3`.
/// * `B`: triangle-free, no 5-hole, no odd hole of length at least `2l + 3`.
/// * `G`: girth at least `2l + 1`, no odd hole of length at least `2l + 5`.
/// * `F`: girth at least `2l + 1`, no odd hole of length at least `2l + 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    G,
    F,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::G => 'G',
            Family::F => 'F',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'G' => Some(Family::G),
            'F' => Some(Family::F),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HoleError {
    #[error("class parameter ell must be at least 2, got {0}")]
    EllTooSmall(usize),
    #[error("vertex {0} lies on the hole")]
    OnHole(usize),
    #[error("vertex {0} has no neighbour on the hole")]
    NoNeighbor(usize),
    #[error("sequence is not an induced cycle of the graph")]
    NotAHole,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub family: Family,
    pub ell: usize,
    /// Additionally forbid 7-holes.
    pub seven_hole_free: bool,
}

impl ClassSpec {
    pub fn new(family: Family, ell: usize) -> Result<Self, HoleError> {
        if ell < 2 {
            return Err(HoleError::EllTooSmall(ell));
        }
        Ok(ClassSpec { family, ell, seven_hole_free: false })
    }

    pub fn with_seven_hole_free(mut self, on: bool) -> Self {
        self.seven_hole_free = on;
        self
    }

    pub fn min_girth(&self) -> usize {
        match self.family {
            Family::A => 2 * self.ell,
            Family::B => 4,
            Family::G | Family::F => 2 * self.ell + 1,
        }
    }

    /// Odd holes of this length or longer are forbidden.
    pub fn long_odd_threshold(&self) -> usize {
        match self.family {
            Family::G => 2 * self.ell + 5,
            _ => 2 * self.ell + 3,
        }
    }

    /// The clause an induced cycle of length `len` violates, if any. Clauses
    /// are tried shortest-cycle first, then 5-hole, 7-hole, long odd hole.
    pub fn violated_clause(&self, len: usize) -> Option<HoleKind> {
        if len < 3 {
            None
        } else if len < self.min_girth() {
            Some(if len == 3 { HoleKind::Triangle } else { HoleKind::ShortCycle })
        } else if len == 5 && self.family == Family::B {
            Some(HoleKind::KHole(5))
        } else if len == 7 && self.seven_hole_free {
            Some(HoleKind::KHole(7))
        } else if len % 2 == 1 && len >= self.long_odd_threshold() {
            Some(HoleKind::LongOddHole)
        } else {
            None
        }
    }

    pub fn forbids(&self, len: usize) -> bool {
        self.violated_clause(len).is_some()
    }

    /// Every forbidden length at or above the girth bound is odd.
    fn long_clauses_odd_only(&self) -> bool {
        (self.min_girth()..self.long_odd_threshold() + 2).all(|l| l % 2 == 1 || !self.forbids(l))
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.ell)?;
        if self.seven_hole_free {
            write!(f, "+7hf")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HoleKind {
    Triangle,
    /// A cycle shorter than the girth bound (length at least 4).
    ShortCycle,
    /// An explicitly excluded hole length (5 or 7).
    KHole(usize),
    LongOddHole,
}

impl fmt::Display for HoleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HoleKind::Triangle => write!(f, "triangle"),
            HoleKind::ShortCycle => write!(f, "short-cycle"),
            HoleKind::KHole(k) => write!(f, "{k}-hole"),
            HoleKind::LongOddHole => write!(f, "long-odd-hole"),
        }
    }
}

/// An induced cycle certifying that a graph is outside a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleWitness {
    pub kind: HoleKind,
    /// Canonical vertex order, see [`canonical_cycle`].
    pub cycle: Vec<usize>,
}

impl HoleWitness {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Independent re-check: the cycle is induced in `g` and its length
    /// violates the clause `kind` names.
    pub fn certifies(&self, g: &Graph, spec: &ClassSpec) -> bool {
        g.is_induced_cycle(&self.cycle) && spec.violated_clause(self.cycle.len()) == Some(self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub witness: Option<HoleWitness>,
}

impl MembershipVerdict {
    pub fn member(&self) -> bool {
        self.witness.is_none()
    }
}

/// Rotates a cycle so its smallest vertex comes first and its second vertex is
/// the smaller of that vertex's two cycle neighbours.
pub fn canonical_cycle(seq: &[usize]) -> Vec<usize> {
    let len = seq.len();
    if len == 0 {
        return Vec::new();
    }
    let (pos, _) = seq.iter().enumerate().min_by_key(|(_, &v)| v).unwrap();
    let fwd = seq[(pos + 1) % len];
    let back = seq[(pos + len - 1) % len];
    if fwd <= back {
        (0..len).map(|i| seq[(pos + i) % len]).collect()
    } else {
        (0..len).map(|i| seq[(pos + len - i) % len]).collect()
    }
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = alloc::vec![usize::MAX; n];
    let mut parent = alloc::vec![usize::MAX; n];
    let mut queue = alloc::collections::VecDeque::new();
    for r in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[r] = 0;
        parent[r] = usize::MAX;
        queue.clear();
        queue.push_back(r);
        'bfs: while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Visits every induced cycle of length `3..=max_len` once, in canonical form
/// and in lexicographic order of that form. The visitor may stop the search or
/// lower `max_len` (via `Visit::Limit(max cycle length)`).
pub(crate) fn search_induced_cycles<F>(g: &Graph, max_len: usize, odd_only: bool, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> Visit,
{
    let n = g.n();
    let mut limit = max_len;
    let mut cycle = Vec::with_capacity(n);
    let mut allowed = g.vertex_set();
    for s in 0..n {
        allowed.remove(s);
        if limit < 3 {
            break;
        }
        if odd_only {
            // Odd cycles through s inside {v >= s} need a non-bipartite component.
            let mut scope = allowed.clone();
            scope.insert(s);
            let comp = component_of(g, s, &scope);
            if g.is_bipartite_within(&comp) {
                continue;
            }
        }
        for &x in g.neighbors(s) {
            if x < s {
                continue;
            }
            // An odd cycle closes a path with an even number of edges.
            let parity = odd_only.then_some(0);
            let stopped = InducedPaths::run_with_parity(g, x, s, &allowed, limit - 1, parity, |path| {
                // path = x, q1, .., q_{m-1}, s; keep the orientation with x < q_{m-1}.
                let last = path[path.len() - 2];
                if last < x {
                    return Visit::Continue;
                }
                cycle.clear();
                cycle.push(s);
                cycle.extend_from_slice(&path[..path.len() - 1]);
                match visit(&cycle) {
                    Visit::Limit(l) => {
                        limit = limit.min(l);
                        Visit::Limit(limit.saturating_sub(1))
                    }
                    other => other,
                }
            });
            if stopped {
                return true;
            }
        }
    }
    false
}

fn component_of(g: &Graph, v: usize, scope: &VertexSet) -> VertexSet {
    let dist = g.bfs_distances(&g.set_of([v]), Some(scope));
    g.set_of(dist.iter().enumerate().filter(|(_, d)| d.is_some()).map(|(u, _)| u))
}

/// Every induced cycle of length `3..=max_len` (triangles included), each once
/// in canonical form, listed in lexicographic order.
pub fn enumerate_induced_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search_induced_cycles(g, max_len, false, |c| {
        out.push(c.to_vec());
        Visit::Continue
    });
    out
}

/// Shortest induced cycle whose length satisfies `accept`, ties broken by the
/// lexicographically smallest canonical form.
pub fn find_induced_cycle<P>(g: &Graph, max_len: usize, accept: P) -> Option<Vec<usize>>
where
    P: Fn(usize) -> bool,
{
    let odd_only = (3..=max_len.min(g.n())).all(|l| l % 2 == 1 || !accept(l));
    find_induced_cycle_with(g, max_len, odd_only, accept)
}

fn find_induced_cycle_with<P>(g: &Graph, max_len: usize, odd_only: bool, accept: P) -> Option<Vec<usize>>
where
    P: Fn(usize) -> bool,
{
    let mut best: Option<Vec<usize>> = None;
    search_induced_cycles(g, max_len, odd_only, |c| {
        if accept(c.len()) {
            best = Some(c.to_vec());
            Visit::Limit(c.len() - 1)
        } else {
            Visit::Continue
        }
    });
    best
}

/// A shortest cycle (canonical, lexicographically smallest), or `None` for a forest.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let len = girth(g)?;
    find_induced_cycle(g, len, |l| l == len)
}

/// Decides membership. A non-member gets the shortest violating induced cycle
/// (lexicographically smallest among those) as its witness.
pub fn class_membership(g: &Graph, spec: &ClassSpec) -> MembershipVerdict {
    if let Some(len) = girth(g) {
        if len < spec.min_girth() {
            let cycle = shortest_cycle(g).expect("graph with finite girth has a cycle");
            let kind = spec.violated_clause(len).expect("short cycle violates the girth clause");
            return MembershipVerdict { witness: Some(HoleWitness { kind, cycle }) };
        }
    } else {
        return MembershipVerdict { witness: None };
    }
    let odd_only = spec.long_clauses_odd_only();
    let witness = find_induced_cycle_with(g, g.n(), odd_only, |l| spec.forbids(l))
        .map(|cycle| HoleWitness { kind: spec.violated_clause(cycle.len()).unwrap(), cycle });
    MembershipVerdict { witness }
}

/// For a member `g` and a non-edge `uv`: the shortest forbidden induced cycle
/// that adding `uv` would create. Such a cycle must use the new edge, so the
/// search only covers induced `u`-`v` paths of `g`.
pub fn violation_through_new_edge(g: &Graph, u: usize, v: usize, spec: &ClassSpec) -> Option<HoleWitness> {
    let cycle = cycle_through_new_edge(g, u, v, spec, true)?;
    let kind = spec.violated_clause(cycle.len()).unwrap();
    Some(HoleWitness { kind, cycle })
}

/// Whether adding the non-edge `uv` to the member `g` leaves the class. Same
/// answer as [`violation_through_new_edge`], without ranking witnesses.
pub fn new_edge_breaks_membership(g: &Graph, u: usize, v: usize, spec: &ClassSpec) -> bool {
    cycle_through_new_edge(g, u, v, spec, false).is_some()
}

fn cycle_through_new_edge(g: &Graph, u: usize, v: usize, spec: &ClassSpec, shortest: bool) -> Option<Vec<usize>> {
    debug_assert!(u != v && !g.has_edge(u, v));
    let dist = g.bfs_distances(&g.set_of([u]), None);
    let d = dist[v]?;
    if d + 1 < spec.min_girth() {
        // A shortest u-v path is induced and closes a shortest new cycle.
        return best_cycle_through(g, u, v, d + 1, None, shortest, |l| l == d + 1);
    }
    let odd_only = spec.long_clauses_odd_only();
    if odd_only {
        // New cycles all have length dist-parity + 1; in a bipartite component
        // with u, v on opposite sides they are all even.
        let comp = component_of(g, u, &g.vertex_set());
        if let crate::graph::Bipartition::TwoColoring(side) = g.bipartition_or_odd_cycle(&comp) {
            if side[u] != side[v] {
                return None;
            }
        }
    }
    best_cycle_through(g, u, v, g.n(), odd_only.then_some(0), shortest, |l| spec.forbids(l))
}

fn best_cycle_through<P: Fn(usize) -> bool>(
    g: &Graph,
    u: usize,
    v: usize,
    max_len: usize,
    parity: Option<usize>,
    shortest: bool,
    accept: P,
) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    InducedPaths::run_with_parity(g, u, v, &g.vertex_set(), max_len.saturating_sub(1), parity, |path| {
        let len = path.len();
        if !accept(len) {
            return Visit::Continue;
        }
        let cand = canonical_cycle(path);
        let better = match &best {
            None => true,
            Some(b) => len < b.len() || (len == b.len() && cand < *b),
        };
        if better {
            best = Some(cand);
        }
        if !shortest {
            return Visit::Stop;
        }
        // Only cycles no longer than the best so far can still win.
        Visit::Limit(len - 1)
    });
    best
}

/// How an outside vertex attaches to a hole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AttachmentProfile {
    /// Exactly one neighbour on the hole.
    Single(usize),
    /// Exactly two neighbours `v_i, v_{i+3}` (three steps apart along the hole,
    /// in the hole's vertex order).
    Pair(usize, usize),
    /// Anything else; its neighbours on the hole, in hole order.
    Other(Vec<usize>),
}

pub fn hole_attachment_profile(g: &Graph, hole: &[usize], u: usize) -> Result<AttachmentProfile, HoleError> {
    if !g.is_induced_cycle(hole) {
        return Err(HoleError::NotAHole);
    }
    if hole.contains(&u) {
        return Err(HoleError::OnHole(u));
    }
    let positions: Vec<usize> = (0..hole.len()).filter(|&i| g.has_edge(u, hole[i])).collect();
    let len = hole.len();
    match positions.as_slice() {
        [] => Err(HoleError::NoNeighbor(u)),
        [p] => Ok(AttachmentProfile::Single(hole[*p])),
        [p, q] => {
            let fwd = q - p;
            if fwd == 3 {
                Ok(AttachmentProfile::Pair(hole[*p], hole[*q]))
            } else if len - fwd == 3 {
                Ok(AttachmentProfile::Pair(hole[*q], hole[*p]))
            } else {
                Ok(AttachmentProfile::Other(alloc::vec![hole[*p], hole[*q]]))
            }
        }
        more => Ok(AttachmentProfile::Other(more.iter().map(|&i| hole[i]).collect())),
    }
}
