//! Depth-first enumeration of induced paths between two vertices.
//!
//! A path `q0 = start, q1, .., qm = end` (m >= 2) is reported when its interior
//! lies in `allowed` and the only adjacencies among its vertices are between
//! consecutive vertices, with the pair `(start, end)` ignored. Ignoring that pair
//! lets the same search enumerate induced cycles through an edge `start-end` and
//! induced paths between non-adjacent vertices.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Visit {
    Continue,
    Stop,
    /// Continue, but only report paths with at most this many edges from now on.
    Limit(usize),
}

pub(crate) struct InducedPaths<'g, F> {
    g: &'g Graph,
    end: usize,
    max_edges: usize,
    /// Only paths whose edge count has this parity are wanted.
    parity: Option<usize>,
    path: Vec<usize>,
    blocked: Vec<VertexSet>,
    seen: VertexSet,
    depth: Vec<usize>,
    visit: F,
    stopped: bool,
}

impl<'g, F> InducedPaths<'g, F>
where
    F: FnMut(&[usize]) -> Visit,
{
    /// Runs the search and returns `true` if the visitor stopped it early.
    /// With `parity` set, only paths whose edge count has that parity are reported.
    pub(crate) fn run_with_parity(
        g: &'g Graph,
        start: usize,
        end: usize,
        allowed: &VertexSet,
        max_edges: usize,
        parity: Option<usize>,
        visit: F,
    ) -> bool {
        if max_edges < 2 || start == end {
            return false;
        }
        let mut root = g.vertex_set();
        root.difference_with(allowed);
        root.insert(start);
        root.insert(end);
        let mut s = InducedPaths {
            g,
            end,
            max_edges,
            parity: parity.map(|p| p % 2),
            path: Vec::with_capacity(g.n()),
            blocked: Vec::with_capacity(g.n()),
            seen: g.empty_set(),
            depth: vec![0; g.n()],
            visit,
            stopped: false,
        };
        s.path.push(start);
        s.blocked.push(root);
        s.dfs(0);
        s.stopped
    }

    fn dfs(&mut self, k: usize) {
        let g = self.g;
        let tip = self.path[k];
        let end_nbrs = g.neighbor_set(self.end);
        let candidates = g.neighbor_set(tip).difference(&self.blocked[k]);
        if candidates.is_empty() {
            return;
        }
        // Blocked set for the children: everything adjacent to q0..q_k.
        let mut next = self.blocked[k].clone();
        next.union_with(g.neighbor_set(tip));
        next.insert(tip);
        if self.blocked.len() <= k + 1 {
            self.blocked.push(next);
        } else {
            self.blocked[k + 1] = next;
        }

        for c in candidates.iter() {
            if k + 2 > self.max_edges {
                return;
            }
            if end_nbrs.contains(c) {
                if self.parity.is_some_and(|p| (k + 2) % 2 != p) {
                    continue;
                }
                self.path.push(c);
                self.path.push(self.end);
                let verdict = (self.visit)(&self.path);
                self.path.truncate(k + 1);
                match verdict {
                    Visit::Continue => {}
                    Visit::Stop => {
                        self.stopped = true;
                        return;
                    }
                    Visit::Limit(m) => self.max_edges = self.max_edges.min(m),
                }
            } else if k + 3 <= self.max_edges && self.can_reach_end(c, k) {
                self.path.push(c);
                self.dfs(k + 1);
                self.path.truncate(k + 1);
                if self.stopped {
                    return;
                }
            }
        }
    }

    /// Relaxed reachability for `c` about to become q_{k+1}: is there a walk
    /// through unblocked vertices to a neighbour of `end` that fits the edge
    /// budget? When the explored region is bipartite, every such walk has a
    /// fixed parity, which must also match the requested one.
    fn can_reach_end(&mut self, c: usize, k: usize) -> bool {
        let g = self.g;
        let blocked = &self.blocked[k + 1];
        let end_nbrs = g.neighbor_set(self.end);
        // Edges left once c is on the path; the closing step into `end` uses one.
        let budget = self.max_edges - (k + 1);
        let seen = &mut self.seen;
        let depth = &mut self.depth;
        seen.clear();
        seen.insert(c);
        depth[c] = 0;
        let mut frontier = Vec::with_capacity(8);
        frontier.push(c);
        let mut bipartite = true;
        let mut reach = [false; 2];
        let mut d = 0;
        while !frontier.is_empty() && d + 1 < budget {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in g.neighbors(u) {
                    if blocked.contains(w) {
                        continue;
                    }
                    if seen.contains(w) {
                        if depth[w] % 2 == d % 2 {
                            bipartite = false;
                        }
                        continue;
                    }
                    seen.insert(w);
                    depth[w] = d + 1;
                    if end_nbrs.contains(w) {
                        if self.parity.is_none() {
                            return true;
                        }
                        reach[(d + 1) % 2] = true;
                    } else {
                        next.push(w);
                    }
                }
            }
            frontier = next;
            d += 1;
        }
        match self.parity {
            None => false,
            Some(_) if !bipartite => reach[0] || reach[1],
            // Total edges: (k + 1) to reach c, depth to w, one more into end.
            Some(p) => reach[(p + k) % 2],
        }
    }
}
