use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::LevellingError;
use crate::exact::{chi_value, DEFAULT_CAP};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A connected set `C` and an induced path `T = t1 .. tk` (k >= 2) disjoint
/// from `C`, where `tk` has a neighbour in `C` and `t1 .. t(k-1)` have none.
/// `t1` is the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lollipop {
    c: VertexSet,
    t: Vec<usize>,
}

impl Lollipop {
    pub fn new(g: &Graph, c: VertexSet, t: Vec<usize>) -> Result<Self, LevellingError> {
        use LevellingError::InvalidLollipop as E;
        if t.len() < 2 {
            return Err(E("path needs at least two vertices"));
        }
        if t.iter().any(|&v| v >= g.n()) || c.capacity() != g.n() {
            return Err(E("vertex out of range"));
        }
        if !g.is_induced_path(&t) {
            return Err(E("path is not induced"));
        }
        if c.is_empty() || !g.is_connected_within(&c) {
            return Err(E("C is empty or disconnected"));
        }
        if t.iter().any(|&v| c.contains(v)) {
            return Err(E("path meets C"));
        }
        let (tip, rest) = t.split_last().unwrap();
        if !g.neighbor_set(*tip).intersects(&c) {
            return Err(E("tip has no neighbour in C"));
        }
        if rest.iter().any(|&v| g.neighbor_set(v).intersects(&c)) {
            return Err(E("C touches the path before its tip"));
        }
        Ok(Lollipop { c, t })
    }

    pub fn c(&self) -> &VertexSet {
        &self.c
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    pub fn end(&self) -> usize {
        self.t[0]
    }

    pub fn tip(&self) -> usize {
        *self.t.last().unwrap()
    }
}

/// Largest `c <= k - 2` such that `t1 .. tc` all have distance at least 3 from `C`.
pub fn cleanliness(g: &Graph, lp: &Lollipop) -> usize {
    let dist = g.bfs_distances(&lp.c, None);
    let k = lp.t.len();
    lp.t[..k - 2].iter().take_while(|&&v| dist[v].is_none_or(|d| d >= 3)).count()
}

/// `cand` is a lollipop with `C' ⊆ C`, the same end, `T` a subpath of `T'`
/// and `V(T') ⊆ V(T) ∪ C`.
pub fn is_licking(g: &Graph, orig: &Lollipop, cand: &Lollipop) -> bool {
    if Lollipop::new(g, cand.c.clone(), cand.t.clone()).is_err() {
        return false;
    }
    cand.c.is_subset(&orig.c)
        && cand.t.len() >= orig.t.len()
        && cand.t[..orig.t.len()] == orig.t[..]
        && cand.t[orig.t.len()..].iter().all(|&v| orig.c.contains(v))
}

pub fn find_licking(g: &Graph, lp: &Lollipop, h: usize, kappa: usize) -> Result<Option<Lollipop>, LevellingError> {
    find_licking_with_cap(g, lp, h, kappa, DEFAULT_CAP)
}

/// A licking of `lp` with cleanliness at least `h` more and `chi(C')` at
/// least `chi(C) - h * kappa`.
///
/// Each step takes the first vertex `t` of the path that is still within
/// distance two of `C`, drops the vertices of `C` at distance two from `t`,
/// keeps a component of what remains and, if needed, extends the path through
/// the dropped part to reach it. Components are tried in order of decreasing
/// chromatic number, backtracking when a branch cannot meet the bound.
/// `Ok(None)` means every branch failed.
pub fn find_licking_with_cap(
    g: &Graph,
    lp: &Lollipop,
    h: usize,
    kappa: usize,
    cap: usize,
) -> Result<Option<Lollipop>, LevellingError> {
    if h == 0 {
        return Ok(Some(lp.clone()));
    }
    let chi = chi_value(g, &lp.c, cap).value;
    let bound = h.saturating_mul(kappa);
    if chi <= bound {
        return Err(LevellingError::HypothesisUnmet { chi, bound });
    }
    let search = Licking { g, cap, target: cleanliness(g, lp) + h, floor: chi - bound };
    Ok(search.step(lp))
}

struct Licking<'g> {
    g: &'g Graph,
    cap: usize,
    target: usize,
    floor: usize,
}

impl Licking<'_> {
    fn step(&self, lp: &Lollipop) -> Option<Lollipop> {
        let g = self.g;
        let c = cleanliness(g, lp);
        if c >= self.target {
            return Some(lp.clone());
        }
        // c <= k - 2, so t = t(c+1) is not the tip and sits at distance two from C.
        let t = lp.t[c];
        let dist = g.bfs_distances(&g.set_of([t]), None);
        let mut rest = lp.c.clone();
        for v in lp.c.iter() {
            if dist[v].is_some_and(|d| d <= 2) {
                rest.remove(v);
            }
        }
        let mut comps: Vec<(usize, VertexSet)> =
            g.components_within(&rest).into_iter().map(|comp| (chi_value(g, &comp, self.cap).value, comp)).collect();
        comps.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.first().cmp(&b.1.first())));
        for (chi, comp) in comps {
            if chi < self.floor {
                break;
            }
            let Some(t) = self.extend(lp, &comp) else { continue };
            let next = Lollipop::new(g, comp, t).expect("extension keeps the lollipop shape");
            if let Some(found) = self.step(&next) {
                return Some(found);
            }
        }
        None
    }

    /// The path of `lp` followed by a shortest path through `C \ target` from
    /// a neighbour of the tip to a neighbour of `target`.
    fn extend(&self, lp: &Lollipop, target: &VertexSet) -> Option<Vec<usize>> {
        let g = self.g;
        let tip = lp.tip();
        if g.neighbor_set(tip).intersects(target) {
            return Some(lp.t.clone());
        }
        let scope = lp.c.difference(target);
        let mut parent = vec![usize::MAX; g.n()];
        let mut queue = VecDeque::new();
        for s in g.neighbor_set(tip).intersection(&scope).iter() {
            parent[s] = s;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            if g.neighbor_set(u).intersects(target) {
                let mut tail = vec![u];
                let mut x = u;
                while parent[x] != x {
                    x = parent[x];
                    tail.push(x);
                }
                tail.reverse();
                let mut t = lp.t.clone();
                t.extend(tail);
                return Some(t);
            }
            for &w in g.neighbors(u) {
                if scope.contains(w) && parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};

    fn path_lollipop(c: &[usize], t_len: usize) -> (Graph, Lollipop) {
        let p = path(12).unwrap();
        let lp = Lollipop::new(&p, p.set_of(c.iter().copied()), (0..t_len).collect()).unwrap();
        (p, lp)
    }

    #[test]
    fn cleanliness_examples() {
        let (p, lp) = path_lollipop(&[10, 11], 10);
        assert_eq!(cleanliness(&p, &lp), 8);
        let (p, lp) = path_lollipop(&[11], 11);
        assert_eq!(cleanliness(&p, &lp), 9);
        let c6 = cycle(6).unwrap();
        let lp = Lollipop::new(&c6, c6.set_of([3, 4]), vec![1, 2]).unwrap();
        assert_eq!(cleanliness(&c6, &lp), 0);
    }

    #[test]
    fn lollipop_validation() {
        let p = path(12).unwrap();
        assert!(Lollipop::new(&p, p.set_of([10, 11]), vec![0]).is_err());
        assert!(Lollipop::new(&p, p.set_of([9, 11]), (0..9).collect()).is_err());
        assert!(Lollipop::new(&p, p.set_of([10, 11]), (0..9).collect()).is_err());
        assert!(Lollipop::new(&p, p.set_of([9, 10]), (0..10).collect()).is_err());
    }

    #[test]
    fn licking_examples() {
        let (p, lp) = path_lollipop(&[10, 11], 10);
        assert_eq!(find_licking(&p, &lp, 0, 1).unwrap(), Some(lp.clone()));
        let l = find_licking(&p, &lp, 1, 1).unwrap().unwrap();
        assert_eq!(l.c().to_vec(), [11]);
        assert_eq!(l.t(), (0..11).collect::<Vec<_>>().as_slice());
        assert_eq!(cleanliness(&p, &l), 9);
        assert!(is_licking(&p, &lp, &l));

        let (p, lp) = path_lollipop(&[11], 11);
        assert_eq!(find_licking(&p, &lp, 1, 1), Err(LevellingError::HypothesisUnmet { chi: 1, bound: 1 }));
    }

    #[test]
    fn licking_extends_through_c() {
        // Path 0-1-2 into C = an 11-cycle 3..14 attached at 3.
        let mut edges = vec![(0, 1), (1, 2), (2, 3)];
        edges.extend((0..11).map(|i| (3 + i, 3 + (i + 1) % 11)));
        let g = Graph::from_edges(14, edges).unwrap();
        let lp = Lollipop::new(&g, g.set_of(3..14), vec![0, 1, 2]).unwrap();
        assert_eq!(cleanliness(&g, &lp), 1);
        let l = find_licking(&g, &lp, 2, 1).unwrap().unwrap();
        assert!(is_licking(&g, &lp, &l));
        assert!(cleanliness(&g, &l) >= 3);
        assert!(chi_value(&g, l.c(), 64).value >= 1);
    }
}
