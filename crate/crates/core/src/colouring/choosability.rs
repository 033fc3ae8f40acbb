//! `f`-choosability by enumerating list assignments up to renaming colours.
//!
//! Vertices are visited in breadth-first order from a vertex of maximum
//! degree. The list of each vertex mixes colours already used with a run of
//! brand-new colours, which are always the next unused integers; that fixes
//! one representative per orbit of colour permutations. A prefix whose lists
//! already admit no colouring yields a witness at once (the remaining
//! vertices get fresh colours). A branch closes once the prefix is colourable
//! and the untouched vertices can be greedily finished whatever colours the
//! prefix used.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::solve::solve_list_colouring;
use super::{ListAssignment, Outcome};
use crate::alon_tarsi::is_f_at;
use crate::degeneracy::strict_peel_within;
use crate::graph::{CapMap, Graph, Vertex};
use crate::{Budget, Exhausted};

/// Orientation search is used as a shortcut up to this many edges.
pub const AT_SHORTCUT_EDGES: usize = 18;
/// Longest single list the oracle will write out.
pub const MAX_LIST: i64 = 4096;

/// Whether every `f`-list assignment admits a colouring; on failure a bad
/// assignment with `|L(v)| = f(v)` is returned.
pub fn is_f_choosable(
    g: &Graph,
    f: &CapMap,
    budget: &mut Budget,
) -> Result<Outcome<ListAssignment>, Exhausted> {
    let n = g.n();
    assert_eq!(f.len(), n);
    if let Some(v) = (0..n).find(|&v| f[v] > MAX_LIST) {
        return Err(Exhausted::Size { limit: MAX_LIST as usize, actual: f[v] as usize });
    }
    let size = |v: Vertex| f[v].max(0) as usize;
    if (0..n).any(|v| f[v] <= 0) {
        // an empty list cannot be coloured
        return Ok(Outcome::Fails(fresh_lists(n, &size)));
    }
    // vertices with more colours than neighbours never matter
    let all = vec![true; n];
    if strict_peel_within(g, f.values(), &all).is_some() {
        return Ok(Outcome::Holds);
    }
    let mut core = all;
    strip_surplus(g, f.values(), &mut core);
    let (h, map) = g.induced(&(0..n).filter(|&v| core[v]).collect::<Vec<_>>());
    let fh = CapMap::new(map.iter().map(|&v| f[v]).collect());
    if h.m() <= AT_SHORTCUT_EDGES {
        match is_f_at(&h, &fh, budget) {
            Ok(Some(_)) => return Ok(Outcome::Holds),
            Ok(None) => {}
            Err(crate::alon_tarsi::AtError::Exhausted(e)) => return Err(e),
            Err(_) => {}
        }
    }
    let order = bfs_order(&h);
    let mut search = Search {
        h: &h,
        f: &fh,
        order: &order,
        lists: vec![Vec::new(); h.n()],
        settled_from: settled_from(&h, &fh, &order),
    };
    match search.rec(0, 0, budget)? {
        None => Ok(Outcome::Holds),
        Some(local) => {
            // lift to the whole graph with fresh colours outside the core
            let mut next = local.iter().flatten().copied().max().map_or(0, |c| c + 1);
            let mut lists = vec![Vec::new(); n];
            for (i, &v) in map.iter().enumerate() {
                lists[v] = local[i].clone();
            }
            for v in 0..n {
                if !core[v] {
                    lists[v] = (next..next + size(v) as u32).collect();
                    next += size(v) as u32;
                }
            }
            Ok(Outcome::Fails(ListAssignment::new(lists)))
        }
    }
}

fn fresh_lists(n: usize, size: &dyn Fn(Vertex) -> usize) -> ListAssignment {
    let mut next = 0u32;
    let mut lists = Vec::with_capacity(n);
    for v in 0..n {
        lists.push((next..next + size(v) as u32).collect());
        next += size(v) as u32;
    }
    ListAssignment::new(lists)
}

/// Repeatedly drop vertices whose capacity exceeds their degree.
fn strip_surplus(g: &Graph, f: &[i64], alive: &mut [bool]) {
    loop {
        let v = (0..g.n()).find(|&v| {
            alive[v] && f[v] > g.neighbours(v).iter().filter(|&&w| alive[w]).count() as i64
        });
        match v {
            Some(v) => alive[v] = false,
            None => return,
        }
    }
}

fn bfs_order(h: &Graph) -> Vec<Vertex> {
    let n = h.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut starts: Vec<Vertex> = (0..n).collect();
    starts.sort_by_key(|&v| (core::cmp::Reverse(h.degree(v)), v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for &w in h.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    order
}

/// Smallest `i` such that the vertices `order[i..]` can be finished greedily
/// after any colouring of `order[..i]`.
fn settled_from(h: &Graph, f: &CapMap, order: &[Vertex]) -> usize {
    let n = h.n();
    for i in 0..=n {
        let mut alive = vec![false; n];
        for &v in &order[i..] {
            alive[v] = true;
        }
        let reduced: Vec<i64> = (0..n)
            .map(|v| f[v] - h.neighbours(v).iter().filter(|&&w| !alive[w]).count() as i64)
            .collect();
        if strict_peel_within(h, &reduced, &alive).is_some() {
            return i;
        }
    }
    n
}

struct Search<'a> {
    h: &'a Graph,
    f: &'a CapMap,
    order: &'a [Vertex],
    lists: Vec<Vec<u32>>,
    settled_from: usize,
}

impl Search<'_> {
    /// A bad assignment extending the current prefix, if any.
    fn rec(&mut self, depth: usize, used: u32, budget: &mut Budget) -> Result<Option<Vec<Vec<u32>>>, Exhausted> {
        budget.tick()?;
        if depth > 0 {
            let prefix = &self.order[..depth];
            let (sub, map) = self.h.induced(prefix);
            let la = ListAssignment::new(map.iter().map(|&v| self.lists[v].clone()).collect());
            if solve_list_colouring(&sub, &la).is_none() {
                let mut out = self.lists.clone();
                let mut next = used;
                for &v in &self.order[depth..] {
                    let k = self.f[v] as u32;
                    out[v] = (next..next + k).collect();
                    next += k;
                }
                return Ok(Some(out));
            }
        }
        if depth >= self.settled_from {
            return Ok(None);
        }
        let v = self.order[depth];
        let k = self.f[v] as u32;
        // fewest new colours first: overlapping lists are the dangerous ones
        for fresh in 0..=k {
            let old = k - fresh;
            if old > used {
                continue;
            }
            let mut pick = Vec::new();
            if let Some(w) = self.choose(depth, used, old, fresh, 0, &mut pick, budget)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        depth: usize,
        used: u32,
        old: u32,
        fresh: u32,
        start: u32,
        pick: &mut Vec<u32>,
        budget: &mut Budget,
    ) -> Result<Option<Vec<Vec<u32>>>, Exhausted> {
        if pick.len() as u32 == old {
            let v = self.order[depth];
            let mut list = pick.clone();
            list.extend(used..used + fresh);
            self.lists[v] = list;
            let r = self.rec(depth + 1, used + fresh, budget)?;
            self.lists[v].clear();
            return Ok(r);
        }
        for c in start..used {
            if used - c < old - pick.len() as u32 {
                break;
            }
            pick.push(c);
            let r = self.choose(depth, used, old, fresh, c + 1, pick, budget)?;
            pick.pop();
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::is_gallai_tree;
    use crate::colouring::solve_list_colouring;
    use crate::enumerate::connected_graphs_up_to;
    use crate::graph::families;

    fn check_witness(g: &Graph, f: &CapMap, l: &ListAssignment) {
        assert!((0..g.n()).all(|v| l.list(v).len() as i64 == f[v].max(0)));
        assert_eq!(solve_list_colouring(g, l), None);
    }

    #[test]
    fn spot_values() {
        let mut b = Budget::default();
        assert!(is_f_choosable(&families::cycle(4), &CapMap::constant(4, 2), &mut b).unwrap().holds());
        let c3 = families::cycle(3);
        let f = CapMap::constant(3, 2);
        match is_f_choosable(&c3, &f, &mut b).unwrap() {
            Outcome::Fails(l) => check_witness(&c3, &f, &l),
            Outcome::Holds => panic!("triangle is not 2-choosable"),
        }
        let k24 = families::complete_bipartite(2, 4);
        let f = CapMap::constant(6, 2);
        match is_f_choosable(&k24, &f, &mut b).unwrap() {
            Outcome::Fails(l) => check_witness(&k24, &f, &l),
            Outcome::Holds => panic!("K_2,4 is not 2-choosable"),
        }
        assert!(is_f_choosable(&k24, &CapMap::constant(6, 3), &mut b).unwrap().holds());
    }

    #[test]
    fn classic_k24_witness_is_bad() {
        let k24 = families::complete_bipartite(2, 4);
        let l = ListAssignment::new(vec![
            vec![1, 2],
            vec![3, 4],
            vec![1, 3],
            vec![1, 4],
            vec![2, 3],
            vec![2, 4],
        ]);
        assert_eq!(solve_list_colouring(&k24, &l), None);
    }

    #[test]
    fn zero_capacity_fails() {
        let g = families::path(2);
        let f = CapMap::new(vec![0, 5]);
        match is_f_choosable(&g, &f, &mut Budget::default()).unwrap() {
            Outcome::Fails(l) => check_witness(&g, &f, &l),
            Outcome::Holds => panic!(),
        }
    }

    /// Without the orientation shortcut the enumeration alone must agree on
    /// a few hand-picked cases.
    #[test]
    fn enumeration_alone() {
        for (g, k, expect) in [
            (families::cycle(4), 2, true),
            (families::cycle(5), 2, false),
            (families::complete_bipartite(2, 3), 2, true),
            (families::complete_bipartite(2, 4), 2, false),
            (families::complete(4), 3, false),
        ] {
            let f = CapMap::constant(g.n(), k);
            let order = bfs_order(&g);
            let mut s = Search {
                h: &g,
                f: &f,
                order: &order,
                lists: vec![Vec::new(); g.n()],
                settled_from: settled_from(&g, &f, &order),
            };
            let r = s.rec(0, 0, &mut Budget::default()).unwrap();
            assert_eq!(r.is_none(), expect);
            if let Some(l) = r {
                check_witness(&g, &f, &ListAssignment::new(l));
            }
        }
    }

    #[test]
    fn degree_choosable_iff_not_gallai() {
        let mut b = Budget::new(u64::MAX);
        for g in connected_graphs_up_to(6) {
            let f = CapMap::degree(&g);
            let out = is_f_choosable(&g, &f, &mut b).unwrap();
            assert_eq!(!out.holds(), is_gallai_tree(&g).unwrap());
            if let Outcome::Fails(l) = out {
                check_witness(&g, &f, &l);
            }
        }
    }
}
