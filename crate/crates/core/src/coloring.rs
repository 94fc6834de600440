//! Colourings: DSATUR, the layer-wise 4-colouring, and class-bound certification.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Bipartition, Graph};
use crate::holes::{class_membership, ClassSpec, Family, HoleWitness};

/// Colour per vertex, colours start at 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Number of distinct colours actually used.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c >= 1)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Greedy DSATUR: repeatedly colour the vertex with the most distinct colours
/// among its neighbours (ties: larger degree, then smaller identifier) with the
/// smallest colour it can take.
pub fn dsatur(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut seen: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by(|&a, &b| (seen[a].len(), g.degree(a)).cmp(&(seen[b].len(), g.degree(b))).then(b.cmp(&a)))
            .expect("an uncoloured vertex remains");
        let c = (1..).find(|c| !seen[v].contains(c)).unwrap();
        colors[v] = c;
        for &w in g.neighbors(v) {
            seen[w].insert(c);
        }
    }
    Coloring::new(colors)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("graph is disconnected; colour each component separately")]
    Disconnected,
    #[error("root {0} out of range")]
    RootOutOfRange(usize),
    #[error("graph is not in {spec}: {kind} {cycle:?}", kind = witness.kind, cycle = witness.cycle)]
    NotMember { spec: ClassSpec, witness: HoleWitness },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FourColorOutcome {
    Colored(Coloring),
    /// Distance layer `layer` is not bipartite; `cycle` is an odd cycle inside it.
    /// This proves the graph is not in `A_3`.
    OddLayer {
        layer: usize,
        cycle: Vec<usize>,
    },
}

/// Colours a connected graph from the distance layers of vertex 0: each layer
/// is 2-coloured and layers of opposite parity use disjoint colour pairs, so
/// the result uses colours from `{1, 2, 3, 4}`.
pub fn four_color_a3(g: &Graph) -> Result<FourColorOutcome, ColoringError> {
    four_color_a3_from(g, 0)
}

pub fn four_color_a3_from(g: &Graph, root: usize) -> Result<FourColorOutcome, ColoringError> {
    if g.n() == 0 {
        return Ok(FourColorOutcome::Colored(Coloring::default()));
    }
    if root >= g.n() {
        return Err(ColoringError::RootOutOfRange(root));
    }
    if !g.is_connected() {
        return Err(ColoringError::Disconnected);
    }
    let layers = g.bfs_layers(root).expect("root checked");
    let mut colors = vec![0; g.n()];
    for (i, layer) in layers.levels().iter().enumerate() {
        let scope = g.set_of(layer.iter().copied());
        match g.bipartition_or_odd_cycle(&scope) {
            Bipartition::TwoColoring(side) => {
                for &v in layer {
                    colors[v] = (i % 2) * 2 + side[v].unwrap() as usize + 1;
                }
            }
            Bipartition::OddCycle(cycle) => return Ok(FourColorOutcome::OddLayer { layer: i, cycle }),
        }
    }
    Ok(FourColorOutcome::Colored(Coloring::new(colors)))
}

/// [`four_color_a3`] applied to each component, rooted at its smallest vertex.
pub fn four_color_a3_components(g: &Graph) -> FourColorOutcome {
    let mut colors = vec![0; g.n()];
    for comp in g.components() {
        let set = g.set_of(comp.iter().copied());
        let (h, map) = g.induced_subgraph(&set);
        match four_color_a3(&h).expect("a component is connected") {
            FourColorOutcome::Colored(c) => {
                for (i, &v) in map.iter().enumerate() {
                    colors[v] = c.color(i);
                }
            }
            FourColorOutcome::OddLayer { layer, cycle } => {
                return FourColorOutcome::OddLayer { layer, cycle: cycle.iter().map(|&i| map[i]).collect() };
            }
        }
    }
    FourColorOutcome::Colored(Coloring::new(colors))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorMethod {
    FourColorA3,
    Dsatur,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedColoring {
    pub coloring: Coloring,
    pub method: ColorMethod,
    /// The proven chromatic bound for the class, when one is known.
    pub bound: Option<usize>,
    /// `colors_used <= bound`, when a bound applies.
    pub within: Option<bool>,
}

/// Proven chromatic bound for a class: 1456 for `G_2`, 4 for `A_3`,
/// `12l + 8` for 7-hole-free `B_l`. `F_2` and `F_3` inherit the bounds of
/// `G_2` and `A_3`, which contain them. Everything else has no bound here.
pub fn class_bound(spec: &ClassSpec) -> Option<usize> {
    match (spec.family, spec.ell) {
        (Family::G | Family::F, 2) => Some(1456),
        (Family::A | Family::F, 3) => Some(4),
        (Family::B, ell) if spec.seven_hole_free => Some(12 * ell + 8),
        _ => None,
    }
}

/// Colours a member of `spec` with the strongest constructive method that
/// applies (the layer-wise 4-colouring when it succeeds, DSATUR otherwise) and
/// compares against the class bound.
pub fn certified_class_color(g: &Graph, spec: &ClassSpec) -> Result<CertifiedColoring, ColoringError> {
    if let Some(witness) = class_membership(g, spec).witness {
        return Err(ColoringError::NotMember { spec: *spec, witness });
    }
    let bound = class_bound(spec);
    let (coloring, method) = match four_color_a3_components(g) {
        FourColorOutcome::Colored(c) if bound.is_some() => (c, ColorMethod::FourColorA3),
        _ => (dsatur(g), ColorMethod::Dsatur),
    };
    let within = bound.map(|b| coloring.colors_used() <= b);
    Ok(CertifiedColoring { coloring, method, bound, within })
}
