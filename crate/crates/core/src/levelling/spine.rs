use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Levelling, LevellingError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A levelling in which every vertex below the last level has a dependent,
/// together with a path `l0 .. lk` where each `li` is a dependent of `l(i-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineLevelling {
    base: Levelling,
    spine: Vec<usize>,
}

impl SpineLevelling {
    /// Checks the spine invariants; the last level is not required to be connected.
    pub fn from_parts(g: &Graph, base: Levelling, spine: Vec<usize>) -> Result<Self, LevellingError> {
        super::validate_levelling(g, base.levels())?;
        let k = base.depth();
        if spine.len() != k + 1 {
            return Err(LevellingError::InvalidSpine("spine length differs from level count"));
        }
        let sets: Vec<VertexSet> = (0..=k).map(|i| base.level_set(g, i)).collect();
        for (i, &s) in spine.iter().enumerate() {
            if !sets[i].contains(s) {
                return Err(LevellingError::InvalidSpine("spine vertex outside its level"));
            }
            if i > 0 && parents(g, &sets, i, s).to_vec() != [spine[i - 1]] {
                return Err(LevellingError::InvalidSpine("spine vertex is not a dependent of its predecessor"));
            }
        }
        for i in 0..k {
            if base.level(i).iter().any(|&v| !has_dependent(g, &sets, i, v)) {
                return Err(LevellingError::InvalidSpine("vertex without a dependent"));
            }
        }
        Ok(SpineLevelling { base, spine })
    }

    pub fn levelling(&self) -> &Levelling {
        &self.base
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    pub fn depth(&self) -> usize {
        self.base.depth()
    }
}

fn parents(g: &Graph, sets: &[VertexSet], i: usize, v: usize) -> VertexSet {
    g.neighbor_set(v).intersection(&sets[i - 1])
}

fn is_dependent(g: &Graph, sets: &[VertexSet], i: usize, w: usize, u: usize) -> bool {
    let p = parents(g, sets, i, w);
    p.len() == 1 && p.contains(u)
}

fn has_dependent(g: &Graph, sets: &[VertexSet], i: usize, v: usize) -> bool {
    sets.get(i + 1)
        .is_some_and(|next| g.neighbor_set(v).intersection(next).iter().any(|w| is_dependent(g, sets, i + 1, w, v)))
}

/// Deletes vertices below the last level that have no dependent, one at a
/// time in passes of ascending level and identifier, until none remain; then
/// picks the spine by following the smallest dependent from the root.
///
/// Requires `lv` to cover `g` and its last level to induce a connected subgraph.
pub fn prune_to_dependent_spine(g: &Graph, lv: &Levelling) -> Result<SpineLevelling, LevellingError> {
    super::validate_levelling(g, lv.levels())?;
    if lv.levels().iter().map(Vec::len).sum::<usize>() != g.n() {
        return Err(LevellingError::NotSpanning);
    }
    let k = lv.depth();
    if !g.is_connected_within(&lv.level_set(g, k)) {
        return Err(LevellingError::LastLevelDisconnected);
    }
    let mut sets: Vec<VertexSet> = (0..=k).map(|i| lv.level_set(g, i)).collect();
    loop {
        let mut changed = false;
        for i in 0..k {
            for v in sets[i].to_vec() {
                if !has_dependent(g, &sets, i, v) {
                    sets[i].remove(v);
                    changed = true;
                }
            }
            if sets[i].is_empty() {
                return Err(LevellingError::Collapsed { level: i });
            }
        }
        if !changed {
            break;
        }
    }
    let mut spine = Vec::with_capacity(k + 1);
    spine.push(lv.root());
    for i in 1..=k {
        let prev = spine[i - 1];
        let next = g
            .neighbor_set(prev)
            .intersection(&sets[i])
            .iter()
            .find(|&w| is_dependent(g, &sets, i, w, prev))
            .ok_or(LevellingError::Internal("pruned vertex without a dependent"))?;
        spine.push(next);
    }
    let base = Levelling::new_unchecked(sets.iter().map(VertexSet::to_vec).collect());
    Ok(SpineLevelling { base, spine })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VertexType {
    /// Adjacent to `l(i-1)`.
    One,
    /// Adjacent to `li`.
    Two,
}

impl VertexType {
    pub fn index(self) -> usize {
        match self {
            VertexType::One => 1,
            VertexType::Two => 2,
        }
    }
}

/// Types of the off-spine vertices with a spine neighbour. A vertex of `Li`
/// must be adjacent to exactly one of `l(i-1)` and `li` and to no other
/// spine vertex.
pub fn classify_types(g: &Graph, sp: &SpineLevelling) -> Result<BTreeMap<usize, VertexType>, LevellingError> {
    let lv = sp.levelling();
    let spine = sp.spine();
    let on_spine = g.set_of(spine.iter().copied());
    let mut out = BTreeMap::new();
    for (i, level) in lv.levels().iter().enumerate() {
        for &v in level {
            if on_spine.contains(v) {
                continue;
            }
            let touched = g.neighbor_set(v).intersection(&on_spine);
            if touched.is_empty() {
                continue;
            }
            let t = match touched.to_vec().as_slice() {
                [s] if i >= 1 && *s == spine[i - 1] => VertexType::One,
                [s] if *s == spine[i] => VertexType::Two,
                _ => return Err(LevellingError::SpineAssumption { vertex: v }),
            };
            out.insert(v, t);
        }
    }
    Ok(out)
}

/// The smallest sets `V1`, `V2` of off-spine vertices such that typed vertices
/// join the set of their type and an untyped off-spine vertex joins every set
/// containing one of its parents. Computed by one sweep down the levels.
pub fn build_v_alpha(g: &Graph, sp: &SpineLevelling, types: &BTreeMap<usize, VertexType>) -> (VertexSet, VertexSet) {
    let lv = sp.levelling();
    let on_spine = g.set_of(sp.spine().iter().copied());
    let mut v = [g.empty_set(), g.empty_set()];
    for i in 1..=lv.depth() {
        let above = lv.level_set(g, i - 1);
        for &x in lv.level(i) {
            if on_spine.contains(x) {
                continue;
            }
            if let Some(t) = types.get(&x) {
                v[t.index() - 1].insert(x);
                continue;
            }
            let ps = g.neighbor_set(x).intersection(&above);
            for set in v.iter_mut() {
                if set.intersects(&ps) {
                    set.insert(x);
                }
            }
        }
    }
    let [v1, v2] = v;
    (v1, v2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path};
    use alloc::vec;

    #[test]
    fn prune_c6() {
        // v, a, c, w, d, b = 0..6.
        let c6 = cycle(6).unwrap();
        let sp = prune_to_dependent_spine(&c6, &c6.bfs_layers(0).unwrap()).unwrap();
        assert_eq!(sp.spine(), &[0, 5, 4, 3]);
        assert_eq!(sp.levelling().levels(), &[vec![0], vec![5], vec![4], vec![3]]);
    }

    #[test]
    fn prune_trivial() {
        let p = path(6).unwrap();
        let lv = p.bfs_layers(0).unwrap();
        let sp = prune_to_dependent_spine(&p, &lv).unwrap();
        assert_eq!(sp.levelling(), &lv);
        assert_eq!(sp.spine(), &[0, 1, 2, 3, 4, 5]);
        let k2 = complete(2);
        assert_eq!(prune_to_dependent_spine(&k2, &k2.bfs_layers(0).unwrap()).unwrap().spine(), &[0, 1]);

        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(prune_to_dependent_spine(&g, &g.bfs_layers(0).unwrap()), Err(LevellingError::NotSpanning));
    }

    #[test]
    fn types_on_c7() {
        let c7 = cycle(7).unwrap();
        let sp = prune_to_dependent_spine(&c7, &c7.bfs_layers(0).unwrap()).unwrap();
        assert_eq!(sp.spine(), &[0, 1, 2, 3]);
        let types = classify_types(&c7, &sp).unwrap();
        assert_eq!(types.into_iter().collect::<Vec<_>>(), vec![(4, VertexType::Two), (6, VertexType::One)]);
    }

    #[test]
    fn types_trivial_and_errors() {
        let p = path(4).unwrap();
        let sp = prune_to_dependent_spine(&p, &p.bfs_layers(0).unwrap()).unwrap();
        let types = classify_types(&p, &sp).unwrap();
        assert!(types.is_empty());
        let (v1, v2) = build_v_alpha(&p, &sp, &types);
        assert!(v1.is_empty() && v2.is_empty());

        let tri = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
        let sp = prune_to_dependent_spine(&tri, &tri.bfs_layers(0).unwrap()).unwrap();
        assert_eq!(sp.spine(), &[0, 1, 2]);
        assert_eq!(classify_types(&tri, &sp), Err(LevellingError::SpineAssumption { vertex: 3 }));
    }

    #[test]
    fn v_alpha_single_extra_vertex() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let lv = Levelling::new(&g, vec![vec![0], vec![1], vec![2, 3]]).unwrap();
        let sp = SpineLevelling::from_parts(&g, lv, vec![0, 1, 2]).unwrap();
        let types = classify_types(&g, &sp).unwrap();
        let (v1, v2) = build_v_alpha(&g, &sp, &types);
        assert_eq!(v1.to_vec(), vec![3]);
        assert!(v2.is_empty());
    }

    #[test]
    fn v_alpha_c6() {
        let c6 = cycle(6).unwrap();
        let sp = prune_to_dependent_spine(&c6, &c6.bfs_layers(0).unwrap()).unwrap();
        let (v1, v2) = build_v_alpha(&c6, &sp, &classify_types(&c6, &sp).unwrap());
        assert!(v1.is_empty() && v2.is_empty());

        // With a and c restored, w has two parents and (v, b, d, w) is no longer a spine.
        let full = Levelling::new(&c6, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]).unwrap();
        assert!(SpineLevelling::from_parts(&c6, full, vec![0, 5, 4, 3]).is_err());
    }

    #[test]
    fn from_parts_rejects_non_dependent_spine() {
        let c6 = cycle(6).unwrap();
        let lv = Levelling::new(&c6, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]).unwrap();
        assert!(matches!(SpineLevelling::from_parts(&c6, lv, vec![0, 1, 2, 3]), Err(LevellingError::InvalidSpine(_))));
    }
}
