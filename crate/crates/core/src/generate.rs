//! Named graphs, the Mycielski construction and seeded generation of class members.
//!
//! Randomness comes from ChaCha8 seeded through `SeedableRng::seed_from_u64`.
//! A uniform index below `m` is drawn as `(next_u64() as u128 * m as u128) >> 64`,
//! and shuffles are Fisher-Yates from the back, so corpora can be reproduced by
//! any implementation of the same stream.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::graph::Graph;
use crate::holes::{new_edge_breaks_membership, ClassSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

/// `0 - 1 - .. - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::InvalidParameter("a cycle needs at least 3 vertices"));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
}

/// `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::InvalidParameter("a path needs at least 1 vertex"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap())
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram `5+i - 5+(i+2)%5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// Vertices `0..n` copy `g`, `n + u` is the shadow of `u` (adjacent to `N(u)`),
/// and `2n` is the apex adjacent to every shadow.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for u in 0..n {
        for &w in g.neighbors(u) {
            edges.push((n + u, w));
        }
        edges.push((n + u, 2 * n));
    }
    Graph::from_edges(2 * n + 1, edges).unwrap()
}

/// The Mycielskian of `C5`: 11 vertices, 20 edges, triangle-free, 4-chromatic.
pub fn grotzsch() -> Graph {
    mycielskian(&cycle(5).unwrap())
}

/// Random recursive tree: vertex `i > 0` hangs off a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_edges(n, (1..n).map(|i| (uniform_below(&mut rng, i), i))).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Grotzsch,
    Tree(usize, u64),
}

pub fn named_graph(name: NamedGraph) -> Result<Graph, GenError> {
    match name {
        NamedGraph::Cycle(n) => cycle(n),
        NamedGraph::Path(n) => path(n),
        NamedGraph::Complete(n) => Ok(complete(n)),
        NamedGraph::CompleteBipartite(a, b) => Ok(complete_bipartite(a, b)),
        NamedGraph::Petersen => Ok(petersen()),
        NamedGraph::Grotzsch => Ok(grotzsch()),
        NamedGraph::Tree(n, seed) => Ok(random_tree(n, seed)),
    }
}

pub fn uniform_below<R: RngCore>(rng: &mut R, m: usize) -> usize {
    ((rng.next_u64() as u128 * m as u128) >> 64) as usize
}

pub fn shuffle<T, R: RngCore>(rng: &mut R, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = uniform_below(rng, i + 1);
        items.swap(i, j);
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub spec: ClassSpec,
    pub n: usize,
    /// Fraction of the `n(n-1)/2` candidate pairs that are tried.
    pub density: f64,
    pub seed: u64,
    /// Rejected candidates allowed before generation stops.
    pub retry_budget: usize,
}

impl GenSpec {
    pub fn new(spec: ClassSpec, n: usize, seed: u64) -> Self {
        GenSpec { spec, n, density: 1.0, seed, retry_budget: usize::MAX }
    }

    pub fn with_density(mut self, density: f64) -> Self {
        self.density = density;
        self
    }

    pub fn with_retry_budget(mut self, budget: usize) -> Self {
        self.retry_budget = budget;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub attempted: usize,
    pub rejected: usize,
    /// Set when generation ended with no edges although some were attempted.
    pub degenerate: bool,
}

/// Adds candidate pairs in seeded random order, keeping an edge only when the
/// graph stays in the class. Every output is a member of `gs.spec`.
pub fn random_in_class(gs: &GenSpec) -> Result<Generated, GenError> {
    if !(0.0..=1.0).contains(&gs.density) {
        return Err(GenError::InvalidParameter("density must lie in [0, 1]"));
    }
    let n = gs.n;
    let mut rng = ChaCha8Rng::seed_from_u64(gs.seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    shuffle(&mut rng, &mut pairs);
    let quota = ceil_to_usize(gs.density * pairs.len() as f64).min(pairs.len());

    let mut g = Graph::empty(n);
    let mut budget = gs.retry_budget;
    let mut attempted = 0;
    let mut rejected = 0;
    for &(u, v) in &pairs[..quota] {
        if budget == 0 {
            break;
        }
        attempted += 1;
        if !new_edge_breaks_membership(&g, u, v, &gs.spec) {
            g.try_add_edge(u, v).expect("fresh pair");
        } else {
            rejected += 1;
            budget -= 1;
        }
    }
    let degenerate = g.edge_count() == 0 && attempted > 0;
    Ok(Generated { graph: g, attempted, rejected, degenerate })
}

fn ceil_to_usize(x: f64) -> usize {
    let t = x as usize;
    if (t as f64) < x {
        t + 1
    } else {
        t
    }
}
