use alloc::vec;
use alloc::vec::Vec;

use super::{
    build_v_alpha, classify_types, find_licking_with_cap, prune_to_dependent_spine, stability_kind, validate_levelling,
    Levelling, LevellingError, Lollipop, StabilityKind,
};
use crate::exact::{chi_value, ChiValue, DEFAULT_CAP};
use crate::graph::Graph;
use crate::holes::{class_membership, ClassSpec, Family};
use crate::vertex_set::VertexSet;

/// Result of [`weak_stabilize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakStable {
    pub levelling: Levelling,
    /// Chromatic number of the input's last level.
    pub chi_input: ChiValue,
    /// Chromatic number of the output's last level.
    pub chi_output: ChiValue,
    /// The type `1` or `2` whose vertices were kept, when the full construction ran.
    pub alpha: Option<usize>,
}

impl WeakStable {
    /// `chi(M_t) >= chi(L_k) / 2 - ell + 1`, in integers.
    pub fn bound_holds(&self, ell: usize) -> bool {
        2 * self.chi_output.value + 2 * ell >= self.chi_input.value + 2
    }
}

pub fn weak_stabilize(g: &Graph, lv: &Levelling, ell: usize) -> Result<WeakStable, LevellingError> {
    weak_stabilize_with_cap(g, lv, ell, DEFAULT_CAP)
}

/// A weak-stable levelling `(M0, .., Mt)` with `chi(Mt) >= chi(Lk) / 2 - ell + 1`
/// for a triangle-free graph with no 5-hole and no odd hole of length at least
/// `2 ell + 3`.
///
/// The construction restricts `Lk` to a component of largest chromatic number,
/// prunes to a dependent spine `l0 .. lk`, licks the lollipop `(Lk, l(k-2) l(k-1))`
/// to cleanliness `2 ell - 2`, splits the vertices off the spine into the two
/// types, keeps the better type inside the licked set and chains minimal
/// parent sets `Ji` back up to the root. The output is re-validated; a failure
/// is reported with a forbidden cycle of `g` when one exists.
pub fn weak_stabilize_with_cap(
    g: &Graph,
    lv: &Levelling,
    ell: usize,
    cap: usize,
) -> Result<WeakStable, LevellingError> {
    validate_levelling(g, lv.levels())?;
    let k = lv.depth();
    let chi_input = chi_value(g, &lv.level_set(g, k), cap);
    let all = lv.vertices(g);
    if g.is_bipartite_within(&all) {
        return Ok(WeakStable { levelling: lv.clone(), chi_input, chi_output: chi_input, alpha: None });
    }
    if chi_input.value + 2 <= 2 * ell {
        let t = k.min(1);
        let out = lv.prefix(t);
        let chi_output = chi_value(g, &out.level_set(g, t), cap);
        return Ok(WeakStable { levelling: out, chi_input, chi_output, alpha: None });
    }

    let run = || -> Result<(Levelling, usize), LevellingError> {
        let last = best_component(g, &lv.level_set(g, k), cap);
        let mut levels = lv.levels().to_vec();
        levels[k] = last.to_vec();
        let keep = g.set_of(levels.iter().flatten().copied());
        let (h, map) = g.induced_subgraph(&keep);
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let relabelled =
            Levelling::new_unchecked(levels.iter().map(|l| l.iter().map(|&v| local[v]).collect()).collect());
        let (levels, alpha) = construct(&h, &relabelled, ell, cap)?;
        let back = levels.into_iter().map(|l| l.into_iter().map(|v| map[v]).collect()).collect();
        Ok((Levelling::new_unchecked(back), alpha))
    };
    let outcome = run().and_then(|(out, alpha)| {
        if validate_levelling(g, out.levels()).is_err() {
            return Err(LevellingError::Internal("output is not a levelling"));
        }
        if stability_kind(g, &out) == StabilityKind::Plain {
            return Err(LevellingError::Internal("output is not weak-stable"));
        }
        let chi_output = chi_value(g, &out.level_set(g, out.depth()), cap);
        let res = WeakStable { levelling: out, chi_input, chi_output, alpha: Some(alpha) };
        if chi_input.exact && chi_output.exact && !res.bound_holds(ell) {
            return Err(LevellingError::Internal("chromatic bound not met"));
        }
        Ok(res)
    });
    outcome.map_err(|e| match e {
        LevellingError::LickingExhausted | LevellingError::Invalid(_) => e,
        other => match hypothesis_witness(g, ell) {
            Some(w) => LevellingError::NotInClass(w),
            None => other,
        },
    })
}

fn hypothesis_witness(g: &Graph, ell: usize) -> Option<crate::holes::HoleWitness> {
    let spec = ClassSpec::new(Family::B, ell.max(2)).ok()?;
    class_membership(g, &spec).witness
}

/// Component of largest chromatic number, ties to the smallest least vertex.
fn best_component(g: &Graph, scope: &VertexSet, cap: usize) -> VertexSet {
    let mut best: Option<(usize, VertexSet)> = None;
    for comp in g.components_within(scope) {
        let chi = chi_value(g, &comp, cap).value;
        if best.as_ref().is_none_or(|(b, _)| chi > *b) {
            best = Some((chi, comp));
        }
    }
    best.map(|(_, c)| c).unwrap_or_else(|| g.empty_set())
}

/// The construction on a graph covered by `lv` whose last level is connected.
fn construct(g: &Graph, lv: &Levelling, ell: usize, cap: usize) -> Result<(Vec<Vec<usize>>, usize), LevellingError> {
    let sp = prune_to_dependent_spine(g, lv)?;
    let k = sp.depth();
    if k < 2 {
        return Err(LevellingError::Internal("last level too shallow for a lollipop"));
    }
    let spine = sp.spine();
    let base = sp.levelling();
    let lp = Lollipop::new(g, base.level_set(g, k), vec![spine[k - 2], spine[k - 1]])?;
    let c1 = match find_licking_with_cap(g, &lp, 2 * ell - 2, 1, cap)? {
        Some(l) => l.c().clone(),
        None => return Err(LevellingError::LickingExhausted),
    };

    let types = classify_types(g, &sp)?;
    let (v1, v2) = build_v_alpha(g, &sp, &types);
    let in1 = v1.intersection(&c1);
    let in2 = v2.intersection(&c1);
    let (alpha, v_alpha, inside) =
        if chi_value(g, &in1, cap).value >= chi_value(g, &in2, cap).value { (1, v1, in1) } else { (2, v2, in2) };
    let c2 = best_component(g, &inside, cap);
    if c2.is_empty() {
        return Err(LevellingError::Internal("empty licked set"));
    }

    let typed = g.set_of(types.keys().copied());
    let mut j: Vec<VertexSet> = vec![g.empty_set(); k + 1];
    j[k] = c2;
    for i in (1..k).rev() {
        let pool = v_alpha.intersection(&base.level_set(g, i));
        let need: Vec<usize> = j[i + 1].difference(&typed).to_vec();
        let mut chosen = g.empty_set();
        for &u in &need {
            let ps = g.neighbor_set(u).intersection(&pool);
            if ps.intersects(&chosen) {
                continue;
            }
            let p = ps.first().ok_or(LevellingError::Internal("vertex of V_alpha without a parent in V_alpha"))?;
            chosen.insert(p);
        }
        for p in chosen.to_vec() {
            chosen.remove(p);
            if !need.iter().all(|&u| g.neighbor_set(u).intersects(&chosen)) {
                chosen.insert(p);
            }
        }
        j[i] = chosen;
    }

    let mut m: Vec<Vec<usize>> = Vec::with_capacity(k + 1);
    if alpha == 1 {
        m.push(vec![spine[0]]);
        for i in 1..=k {
            let mut level = j[i].to_vec();
            level.push(spine[i]);
            m.push(level);
        }
    } else {
        m.push(vec![spine[1]]);
        for i in 1..k {
            let mut level = j[i].to_vec();
            level.push(spine[i + 1]);
            m.push(level);
        }
        m.push(j[k].to_vec());
    }
    Ok((m, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, cycle};

    #[test]
    fn bipartite_input_is_returned() {
        let g = complete_bipartite(3, 4);
        let lv = g.bfs_layers(0).unwrap();
        let out = weak_stabilize(&g, &lv, 3).unwrap();
        assert_eq!(out.levelling, lv);
        assert_eq!(out.alpha, None);
        let c6 = cycle(6).unwrap();
        let lv = c6.bfs_layers(2).unwrap();
        assert_eq!(weak_stabilize(&c6, &lv, 3).unwrap().levelling, lv);
    }

    #[test]
    fn low_chromatic_last_level_truncates() {
        let c7 = cycle(7).unwrap();
        let lv = c7.bfs_layers(0).unwrap();
        let out = weak_stabilize(&c7, &lv, 3).unwrap();
        assert_eq!(out.levelling.levels(), &[vec![0], vec![1, 6]]);
        assert_eq!(out.chi_input.value, 2);
        assert!(out.bound_holds(3));
        assert_eq!(stability_kind(&c7, &out.levelling), StabilityKind::Stable);
    }
}
