//! Simple undirected graphs over dense vertex identifiers.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::levelling::Levelling;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("target set is empty")]
    EmptyTarget,
}

/// Immutable simple graph. Neighbour lists are kept sorted, and every vertex
/// also carries its neighbourhood as a bitset for constant-time adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    edges: usize,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], rows: vec![VertexSet::new(n); n], edges: 0 }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        for (a, b) in [(u, v), (v, u)] {
            let pos = self.adj[a].partition_point(|&x| x < b);
            self.adj[a].insert(pos, b);
            self.rows[a].insert(b);
        }
        self.edges += 1;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, it: I) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.n(), it)
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbor_set(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    /// Neighbours of `v` inside `scope`.
    pub fn neighbors_in(&self, v: usize, scope: &VertexSet) -> VertexSet {
        self.rows[v].intersection(scope)
    }

    /// The subgraph induced by `keep`, relabelled to `[0, |keep|)` in ascending
    /// order of the original identifiers. The returned vector maps new labels to old.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().collect();
        let mut inverse = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            inverse[v] = i;
        }
        let mut g = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = inverse[w];
                if j != usize::MAX && j > i {
                    g.try_add_edge(i, j).expect("induced subgraph of a simple graph is simple");
                }
            }
        }
        (g, map)
    }

    /// Breadth-first distances from `sources`, moving only through `within`
    /// (all vertices when `None`). Neighbours are scanned in ascending order.
    pub fn bfs_distances(&self, sources: &VertexSet, within: Option<&VertexSet>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for s in sources {
            if within.is_none_or(|w| w.contains(s)) {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() && within.is_none_or(|s| s.contains(w)) {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distance layers from `root`: `L_i` holds the vertices at distance `i`.
    pub fn bfs_layers(&self, root: usize) -> Result<Levelling, GraphError> {
        if root >= self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: root, n: self.n() });
        }
        let dist = self.bfs_distances(&self.set_of([root]), None);
        let depth = dist.iter().flatten().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); depth + 1];
        for (v, d) in dist.iter().enumerate() {
            if let Some(d) = d {
                levels[*d].push(v);
            }
        }
        Ok(Levelling::new_unchecked(levels))
    }

    /// `min_{x in target} d(v, x)`, or `None` when no vertex of `target` is reachable.
    pub fn distance(&self, v: usize, target: &VertexSet) -> Result<Option<usize>, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        if target.is_empty() {
            return Err(GraphError::EmptyTarget);
        }
        Ok(self.bfs_distances(target, None)[v])
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&self.vertex_set()).into_iter().map(|c| c.to_vec()).collect()
    }

    /// Components of the subgraph induced by `scope`.
    pub fn components_within(&self, scope: &VertexSet) -> Vec<VertexSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for s in scope {
            if seen.contains(s) {
                continue;
            }
            let dist = self.bfs_distances(&self.set_of([s]), Some(scope));
            let comp = self.set_of(dist.iter().enumerate().filter(|(_, d)| d.is_some()).map(|(v, _)| v));
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components_within(&self.vertex_set()).len() == 1
    }

    pub fn is_connected_within(&self, scope: &VertexSet) -> bool {
        scope.is_empty() || self.components_within(scope).len() == 1
    }

    /// Either a proper 2-colouring of the subgraph induced by `scope`, or an
    /// odd cycle (not necessarily induced) all of whose vertices lie in `scope`.
    pub fn bipartition_or_odd_cycle(&self, scope: &VertexSet) -> Bipartition {
        let n = self.n();
        let mut side: Vec<Option<u8>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in scope {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !scope.contains(w) {
                        continue;
                    }
                    match side[w] {
                        None => {
                            side[w] = Some(1 - side[u].unwrap());
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if Some(sw) == side[u] => {
                            return Bipartition::OddCycle(tree_cycle(u, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::TwoColoring(side)
    }

    pub fn is_bipartite_within(&self, scope: &VertexSet) -> bool {
        matches!(self.bipartition_or_odd_cycle(scope), Bipartition::TwoColoring(_))
    }

    /// True when `seq` is a path: distinct vertices, consecutive ones adjacent.
    pub fn is_path(&self, seq: &[usize]) -> bool {
        let mut seen = self.empty_set();
        seq.iter().all(|&v| v < self.n() && seen.insert(v)) && seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// A path with no chords.
    pub fn is_induced_path(&self, seq: &[usize]) -> bool {
        self.is_path(seq) && (0..seq.len()).all(|i| (i + 2..seq.len()).all(|j| !self.has_edge(seq[i], seq[j])))
    }

    /// A cycle (length at least 3) with no chords.
    pub fn is_induced_cycle(&self, seq: &[usize]) -> bool {
        let len = seq.len();
        len >= 3
            && self.is_path(seq)
            && self.has_edge(seq[0], seq[len - 1])
            && (0..len).all(|i| (i + 2..len).all(|j| (i == 0 && j == len - 1) || !self.has_edge(seq[i], seq[j])))
    }

    /// A closed walk through distinct vertices, chords allowed.
    pub fn is_cycle(&self, seq: &[usize]) -> bool {
        seq.len() >= 3 && self.is_path(seq) && self.has_edge(seq[0], seq[seq.len() - 1])
    }
}

fn tree_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    left
}

/// Outcome of [`Graph::bipartition_or_odd_cycle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) for each vertex of the scope; `None` outside it.
    TwoColoring(Vec<Option<u8>>),
    OddCycle(Vec<usize>),
}
