//! Structural properties of members of the classes, checked on concrete
//! graphs by the verifier and the test suites.

use alloc::vec::Vec;

use crate::exact::{chi_value, ChiValue};
use crate::graph::{Bipartition, Graph};
use crate::holes::{
    enumerate_induced_cycles, hole_attachment_profile, search_induced_cycles, AttachmentProfile, Visit,
};
use crate::levelling::Levelling;
use crate::vertex_set::VertexSet;

/// The BFS levelling from `root`, cut after the first level that has an edge,
/// so that every level but the last is independent.
pub fn stable_bfs_prefix(g: &Graph, root: usize) -> Levelling {
    let lv = g.bfs_layers(root).expect("root in range");
    let t = (0..lv.depth())
        .find(|&i| {
            let l = lv.level(i);
            l.iter().any(|&v| l.iter().any(|&w| g.has_edge(v, w)))
        })
        .unwrap_or(lv.depth());
    lv.prefix(t)
}

/// Vertices of `scope` at distance exactly `r` from `z` inside `scope`.
pub fn sphere(g: &Graph, scope: &VertexSet, z: usize, r: usize) -> VertexSet {
    let dist = g.bfs_distances(&g.set_of([z]), Some(scope));
    g.set_of(dist.iter().enumerate().filter(|(_, d)| **d == Some(r)).map(|(v, _)| v))
}

/// A vertex `z` of the last level and an odd cycle in a set that should be bipartite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSphere {
    pub z: usize,
    pub cycle: Vec<usize>,
}

fn odd_cycle_in(g: &Graph, set: &VertexSet) -> Option<Vec<usize>> {
    match g.bipartition_or_odd_cycle(set) {
        Bipartition::TwoColoring(_) => None,
        Bipartition::OddCycle(c) => Some(c),
    }
}

/// With `H = G[Lk]`: `H[N²_H(z)]` is bipartite for every `z` in `H`.
pub fn check_second_spheres(g: &Graph, lv: &Levelling) -> Result<(), OddSphere> {
    let h = lv.level_set(g, lv.depth());
    for z in h.iter() {
        if let Some(cycle) = odd_cycle_in(g, &sphere(g, &h, z, 2)) {
            return Err(OddSphere { z, cycle });
        }
    }
    Ok(())
}

/// Vertices of `N³_H(z)` all of whose parents in `L(k-1)` are adjacent to `z`.
pub fn parent_complete_set(g: &Graph, lv: &Levelling, z: usize) -> VertexSet {
    let k = lv.depth();
    let h = lv.level_set(g, k);
    let mut a = sphere(g, &h, z, 3);
    if k == 0 {
        return a;
    }
    let above = lv.level_set(g, k - 1);
    for v in a.clone().iter() {
        if !g.neighbor_set(v).intersection(&above).is_subset(g.neighbor_set(z)) {
            a.remove(v);
        }
    }
    a
}

/// `H[A]` is bipartite for the set `A` of [`parent_complete_set`], for every `z`.
pub fn check_parent_complete(g: &Graph, lv: &Levelling) -> Result<(), OddSphere> {
    let h = lv.level_set(g, lv.depth());
    for z in h.iter() {
        if let Some(cycle) = odd_cycle_in(g, &parent_complete_set(g, lv, z)) {
            return Err(OddSphere { z, cycle });
        }
    }
    Ok(())
}

/// Largest `chi(H[N³_H(z)])` over `z` in the last level, with the `z` attaining it.
pub fn max_third_sphere_chi(g: &Graph, lv: &Levelling, cap: usize) -> Option<(usize, ChiValue)> {
    let h = lv.level_set(g, lv.depth());
    let mut best: Option<(usize, ChiValue)> = None;
    for z in h.iter() {
        let chi = chi_value(g, &sphere(g, &h, z, 3), cap);
        if best.is_none_or(|(_, b)| chi.value > b.value) {
            best = Some((z, chi));
        }
    }
    best
}

pub fn last_level_chi(g: &Graph, lv: &Levelling, cap: usize) -> ChiValue {
    chi_value(g, &lv.level_set(g, lv.depth()), cap)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObservationFailure {
    /// Bipartiteness disagrees with the absence of 5- and 7-holes.
    Bipartiteness { bipartite: bool, hole: Option<Vec<usize>> },
    /// A vertex attaches to a 5- or 7-hole other than at one vertex or at two
    /// vertices three apart.
    Attachment { hole: Vec<usize>, vertex: usize, neighbors: Vec<usize> },
}

/// For members of `G_2`: bipartite exactly when there is no 5-hole and no
/// 7-hole, and every attachment to such a hole is `Single` or `Pair`.
pub fn check_short_odd_holes(g: &Graph) -> Result<(), ObservationFailure> {
    let bipartite = g.is_bipartite_within(&g.vertex_set());
    let mut hole = None;
    search_induced_cycles(g, 7, true, |c| {
        if c.len() == 5 || c.len() == 7 {
            hole = Some(c.to_vec());
            Visit::Stop
        } else {
            Visit::Continue
        }
    });
    if bipartite == hole.is_some() {
        return Err(ObservationFailure::Bipartiteness { bipartite, hole });
    }
    for hole in enumerate_induced_cycles(g, 7).into_iter().filter(|c| c.len() == 5 || c.len() == 7) {
        let on = g.set_of(hole.iter().copied());
        for u in 0..g.n() {
            if on.contains(u) || !g.neighbor_set(u).intersects(&on) {
                continue;
            }
            if let Ok(AttachmentProfile::Other(neighbors)) = hole_attachment_profile(g, &hole, u) {
                return Err(ObservationFailure::Attachment { hole, vertex: u, neighbors });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, petersen};

    #[test]
    fn stable_prefix_cuts_at_first_edge() {
        let p = petersen();
        let lv = stable_bfs_prefix(&p, 0);
        assert_eq!(lv.depth(), 2);
        let c7 = cycle(7).unwrap();
        assert_eq!(stable_bfs_prefix(&c7, 0).depth(), 3);
        let c5 = cycle(5).unwrap();
        let mut edges: Vec<_> = c5.edges().collect();
        edges.push((0, 5));
        let g = Graph::from_edges(6, edges).unwrap();
        // From 5: L2 = {1, 4}, L3 = {2, 3} with the edge 2-3.
        assert_eq!(stable_bfs_prefix(&g, 5).depth(), 3);
    }

    #[test]
    fn sphere_checks_on_small_members() {
        for g in [petersen(), cycle(7).unwrap()] {
            for r in 0..g.n() {
                let lv = stable_bfs_prefix(&g, r);
                assert_eq!(check_second_spheres(&g, &lv), Ok(()));
                assert_eq!(check_parent_complete(&g, &lv), Ok(()));
                assert!(max_third_sphere_chi(&g, &lv, 64).unwrap().1.value <= 7);
                assert!(last_level_chi(&g, &lv, 64).value <= 4);
            }
            assert_eq!(check_short_odd_holes(&g), Ok(()));
        }
    }

    #[test]
    fn odd_sphere_is_reported() {
        // Root 11 over a level holding z = 0, a_i = 6..11 and a 5-cycle c_i = 1..6.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((1 + i, 1 + (i + 1) % 5));
            edges.push((6 + i, 1 + i));
            edges.push((0, 6 + i));
        }
        edges.extend((0..11).map(|v| (v, 11)));
        let g = Graph::from_edges(12, edges).unwrap();
        let lv = Levelling::new(&g, alloc::vec![alloc::vec![11], (0..11).collect()]).unwrap();
        assert_eq!(sphere(&g, &lv.level_set(&g, 1), 0, 2).to_vec(), [1, 2, 3, 4, 5]);
        let err = check_second_spheres(&g, &lv).unwrap_err();
        assert_eq!(err.z, 0);
        assert_eq!(err.cycle.len(), 5);
    }
}
