//! Cross-checks against brute-force oracles on small random graphs.

use std::collections::BTreeSet;

use holefree_core::exact::{chromatic_number, is_k_colorable};
use holefree_core::holes::{
    canonical_cycle, class_membership, enumerate_induced_cycles, girth, new_edge_breaks_membership,
    violation_through_new_edge, ClassSpec, Family,
};
use holefree_core::levelling::{ceiling_path, floor_path, Parity};
use holefree_core::Graph;
use proptest::prelude::*;

fn graph_strategy(max_n: usize, p: f64) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::weighted(p), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Every vertex subset inducing a cycle, as canonical sequences.
fn naive_induced_cycles(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.n();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let inside = |v: usize| mask >> v & 1 == 1;
        if verts.iter().any(|&v| g.neighbors(v).iter().filter(|&&w| inside(w)).count() != 2) {
            continue;
        }
        // 2-regular: walk from the first vertex and check it closes over all of them.
        let mut seq = vec![verts[0]];
        let mut prev = usize::MAX;
        let mut cur = verts[0];
        loop {
            let next = *g.neighbors(cur).iter().find(|&&w| inside(w) && w != prev).unwrap();
            if next == verts[0] {
                break;
            }
            seq.push(next);
            prev = cur;
            cur = next;
        }
        if seq.len() == verts.len() {
            out.insert(canonical_cycle(&seq));
        }
    }
    out
}

fn naive_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| colors[u] != colors[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

/// Shortest forbidden induced cycle, lexicographically smallest among those.
fn naive_witness(cycles: &BTreeSet<Vec<usize>>, spec: &ClassSpec) -> Option<Vec<usize>> {
    cycles.iter().filter(|c| spec.forbids(c.len())).min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b))).cloned()
}

fn specs() -> Vec<ClassSpec> {
    let mut out = Vec::new();
    for fam in [Family::A, Family::B, Family::G, Family::F] {
        for ell in 2..=3 {
            for seven in [false, true] {
                out.push(ClassSpec::new(fam, ell).unwrap().with_seven_hole_free(seven));
            }
        }
    }
    out
}

fn with_edge(g: &Graph, u: usize, v: usize) -> Graph {
    Graph::from_edges(g.n(), g.edges().chain([(u, v)])).unwrap()
}

/// Induced u-v paths with interior in `allowed`, by exhaustive DFS over simple paths.
fn naive_paths(g: &Graph, u: usize, v: usize, allowed: &[bool]) -> Vec<Vec<usize>> {
    fn go(g: &Graph, path: &mut Vec<usize>, v: usize, allowed: &[bool], out: &mut Vec<Vec<usize>>) {
        let tip = *path.last().unwrap();
        for &w in g.neighbors(tip) {
            if path.contains(&w) {
                continue;
            }
            if w == v {
                path.push(w);
                if g.is_induced_path(path) {
                    out.push(path.clone());
                }
                path.pop();
            } else if allowed[w] {
                path.push(w);
                go(g, path, v, allowed, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![u], v, allowed, &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn induced_cycles_match_subsets(g in graph_strategy(9, 0.4)) {
        let naive = naive_induced_cycles(&g);
        let fast = enumerate_induced_cycles(&g, g.n());
        let fast_set: BTreeSet<_> = fast.iter().cloned().collect();
        prop_assert_eq!(fast.len(), fast_set.len());
        prop_assert_eq!(&fast_set, &naive);
        let mut sorted = fast.clone();
        sorted.sort();
        prop_assert_eq!(sorted, fast);
        prop_assert_eq!(girth(&g), naive.iter().map(Vec::len).min());
    }

    #[test]
    fn bounded_enumeration_is_a_filter(g in graph_strategy(9, 0.4), max_len in 3usize..9) {
        let all = enumerate_induced_cycles(&g, g.n());
        let short: Vec<_> = all.into_iter().filter(|c| c.len() <= max_len).collect();
        prop_assert_eq!(enumerate_induced_cycles(&g, max_len), short);
    }

    #[test]
    fn chromatic_number_matches_brute_force(g in graph_strategy(8, 0.45)) {
        let r = chromatic_number(&g).unwrap();
        prop_assert_eq!(r.chi, naive_chromatic(&g));
        prop_assert!(r.optimal_coloring.is_proper(&g));
        prop_assert_eq!(r.optimal_coloring.colors_used(), r.chi);
        for k in r.chi..=g.n() {
            prop_assert!(is_k_colorable(&g, k).is_some());
        }
        if r.chi > 0 {
            prop_assert!(is_k_colorable(&g, r.chi - 1).is_none());
        }
    }

    #[test]
    fn membership_matches_brute_force(g in graph_strategy(9, 0.3)) {
        let cycles = naive_induced_cycles(&g);
        for spec in specs() {
            let verdict = class_membership(&g, &spec);
            let expected = naive_witness(&cycles, &spec);
            prop_assert_eq!(verdict.witness.as_ref().map(|w| w.cycle.clone()), expected, "{}", spec);
            if let Some(w) = &verdict.witness {
                prop_assert!(w.certifies(&g, &spec));
            }
        }
    }

    #[test]
    fn new_edge_check_matches_rebuild(g in graph_strategy(9, 0.25), pick in any::<proptest::sample::Index>()) {
        let non_edges: Vec<(usize, usize)> =
            (0..g.n()).flat_map(|u| (u + 1..g.n()).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[pick.index(non_edges.len())];
        let h = with_edge(&g, u, v);
        for spec in specs() {
            if !class_membership(&g, &spec).member() {
                continue;
            }
            let after = class_membership(&h, &spec).witness;
            prop_assert_eq!(new_edge_breaks_membership(&g, u, v, &spec), after.is_some(), "{}", spec);
            prop_assert_eq!(violation_through_new_edge(&g, u, v, &spec), after, "{}", spec);
        }
    }

    #[test]
    fn level_paths_are_shortest(g in graph_strategy(8, 0.35), root in 0usize..8) {
        prop_assume!(root < g.n());
        let lv = g.bfs_layers(root).unwrap();
        for i in 0..=lv.depth() {
            let level = lv.level(i).to_vec();
            for (a, &u) in level.iter().enumerate() {
                for &v in &level[a + 1..] {
                    for (parity, rem) in [(Parity::Any, None), (Parity::Even, Some(0)), (Parity::Odd, Some(1))] {
                        let check = |found: Option<Vec<usize>>, interior: Vec<bool>| -> Result<(), TestCaseError> {
                            let mut all = naive_paths(&g, u, v, &interior);
                            all.retain(|p| rem.is_none_or(|r| (p.len() - 1) % 2 == r));
                            all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
                            prop_assert_eq!(found, all.first().cloned());
                            Ok(())
                        };
                        if i > 0 {
                            let above: Vec<bool> = (0..g.n()).map(|x| lv.level_of(x).is_some_and(|j| j < i)).collect();
                            check(ceiling_path(&g, &lv, u, v, parity).unwrap(), above)?;
                        }
                        let below: Vec<bool> = (0..g.n()).map(|x| lv.level_of(x).is_some_and(|j| j > i)).collect();
                        check(floor_path(&g, &lv, u, v, parity).unwrap(), below)?;
                    }
                }
            }
        }
    }
}
