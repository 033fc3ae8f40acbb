//! Exact decision procedures: weak*, strict weak and strict degeneracy.
//!
//! The weak* search works on a normal form of certificates:
//!
//! * a vertex whose capacity exceeds its degree can always be deleted last,
//!   so every state is first peeled down to its core;
//! * components are solved independently;
//! * `Reduce` only ever happens right before an `EdgeDelete` that uses the
//!   reduced vertex as the reference, so the two are fused into one move
//!   that picks the reference level.
//!
//! UNSAT states are memoised by canonical form, and (weak* only) a stored
//! UNSAT state also refutes any labelled-identical state with smaller
//! capacities.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::Op;
use crate::canon::canonical_key;
use crate::degeneracy::{degeneracy, strict_degenerate_order};
use crate::graph::{CapMap, Graph, Vertex};
use crate::{Budget, Decision, Exhausted};

/// Largest state the bitmask search accepts.
pub const MAX_SEARCH_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    WeakStar,
    StrictWeak,
}

/// Knobs for the search. Both prunings are on by default; turning them
/// off is only useful for cross-checking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub canonical_memo: bool,
    pub dominance: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            canonical_memo: true,
            dominance: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub memo_entries: usize,
    pub memo_hits: u64,
}

#[derive(Clone)]
struct State {
    alive: u64,
    adj: Vec<u64>,
    caps: Vec<i64>,
}

impl State {
    fn degree(&self, v: usize) -> i64 {
        (self.adj[v] & self.alive).count_ones() as i64
    }

    fn remove_edge(&mut self, x: usize, y: usize) {
        self.adj[x] &= !(1 << y);
        self.adj[y] &= !(1 << x);
    }

    fn delete(&mut self, x: usize, saved: Option<usize>) {
        for w in bits(self.adj[x] & self.alive) {
            if Some(w) != saved {
                self.caps[w] -= 1;
            }
            self.adj[w] &= !(1 << x);
        }
        self.adj[x] = 0;
        self.alive &= !(1 << x);
    }

    fn labelled_key(&self) -> Vec<u64> {
        let mut k = Vec::with_capacity(1 + self.alive.count_ones() as usize);
        k.push(self.alive);
        k.extend(bits(self.alive).map(|v| self.adj[v] & self.alive));
        k
    }

    fn canonical_key(&self) -> Vec<u64> {
        let vs: Vec<usize> = bits(self.alive).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        let adj: Vec<u64> = vs
            .iter()
            .map(|&v| bits(self.adj[v] & self.alive).fold(0u64, |m, w| m | 1 << pos[w]))
            .collect();
        let cols: Vec<i64> = vs.iter().map(|&v| self.caps[v]).collect();
        canonical_key(&adj, &cols)
    }

    fn components(&self) -> Vec<u64> {
        let mut left = self.alive;
        let mut out = Vec::new();
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & self.alive & !comp;
                comp |= new;
                frontier |= new;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Strict peeling: repeatedly remove a vertex with `d < f`. Returns the
    /// removal order; the state keeps only the core.
    fn peel(&mut self) -> Vec<usize> {
        let mut removed = Vec::new();
        loop {
            let next = bits(self.alive).find(|&v| self.degree(v) < self.caps[v]);
            match next {
                Some(v) => {
                    // removal without touching caps: the vertex goes last
                    for w in bits(self.adj[v] & self.alive) {
                        self.adj[w] &= !(1 << v);
                    }
                    self.adj[v] = 0;
                    self.alive &= !(1 << v);
                    removed.push(v);
                }
                None => return removed,
            }
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

struct Solver<'a> {
    kind: Kind,
    opts: SearchOptions,
    budget: &'a mut Budget,
    unsat: BTreeSet<Vec<u64>>,
    dominated: BTreeMap<Vec<u64>, Vec<Vec<i64>>>,
    hits: u64,
}

impl Solver<'_> {
    fn solve(&mut self, mut st: State) -> Result<Option<Vec<Op>>, Exhausted> {
        if bits(st.alive).any(|v| st.caps[v] <= 0) {
            return Ok(None);
        }
        let mut tail = Vec::new();
        match self.kind {
            Kind::WeakStar => {
                let peeled = st.peel();
                tail.extend(peeled.into_iter().rev().map(|x| Op::VertexDelete { x }));
            }
            Kind::StrictWeak => {
                let mut probe = st.clone();
                let peeled = probe.peel();
                if probe.alive == 0 {
                    return Ok(Some(peeled.into_iter().rev().map(|x| Op::VertexDelete { x }).collect()));
                }
            }
        }
        if st.alive == 0 {
            return Ok(Some(tail));
        }
        let comps = st.components();
        if comps.len() > 1 {
            let mut ops = Vec::new();
            for c in comps {
                let mut sub = st.clone();
                sub.alive = c;
                match self.solve(sub)? {
                    Some(o) => ops.extend(o),
                    None => return Ok(None),
                }
            }
            ops.extend(tail);
            return Ok(Some(ops));
        }
        match self.solve_connected(st)? {
            Some(mut ops) => {
                ops.extend(tail);
                Ok(Some(ops))
            }
            None => Ok(None),
        }
    }

    fn solve_connected(&mut self, st: State) -> Result<Option<Vec<Op>>, Exhausted> {
        let ckey = self.opts.canonical_memo.then(|| st.canonical_key());
        let lkey = st.labelled_key();
        if let Some(k) = &ckey {
            if self.unsat.contains(k) {
                self.hits += 1;
                return Ok(None);
            }
        } else if self.unsat.contains(&lkey_with_caps(&lkey, &st)) {
            self.hits += 1;
            return Ok(None);
        }
        if self.kind == Kind::WeakStar && self.opts.dominance {
            if let Some(list) = self.dominated.get(&lkey) {
                if list
                    .iter()
                    .any(|g| bits(st.alive).all(|v| st.caps[v] <= g[v]))
                {
                    self.hits += 1;
                    return Ok(None);
                }
            }
        }
        self.budget.tick()?;

        for (ops, next) in self.moves(&st) {
            if let Some(rest) = self.solve(next)? {
                let mut out = ops;
                out.extend(rest);
                return Ok(Some(out));
            }
        }

        match ckey {
            Some(k) => {
                self.unsat.insert(k);
            }
            None => {
                self.unsat.insert(lkey_with_caps(&lkey, &st));
            }
        }
        if self.kind == Kind::WeakStar && self.opts.dominance {
            self.dominated.entry(lkey).or_default().push(st.caps.clone());
        }
        Ok(None)
    }

    fn moves(&self, st: &State) -> Vec<(Vec<Op>, State)> {
        let mut order: Vec<usize> = bits(st.alive).collect();
        order.sort_by_key(|&v| (core::cmp::Reverse(st.caps[v] - st.degree(v)), v));
        let mut out = Vec::new();
        for &x in &order {
            let mut s = st.clone();
            s.delete(x, None);
            out.push((vec![Op::VertexDelete { x }], s));
            for y in bits(st.adj[x] & st.alive) {
                let (fx, fy) = (st.caps[x], st.caps[y]);
                match self.kind {
                    Kind::StrictWeak => {
                        if fx > fy {
                            let mut s = st.clone();
                            s.delete(x, Some(y));
                            out.push((vec![Op::DeleteSave { x, y }], s));
                        }
                    }
                    Kind::WeakStar => {
                        let top = fy.min(fx - 1);
                        for level in (1..=top).rev() {
                            let mut s = st.clone();
                            let mut ops = Vec::with_capacity(2);
                            if level < fy {
                                ops.push(Op::Reduce { x: y, s: fy - level });
                                s.caps[y] = level;
                            }
                            ops.push(Op::EdgeDelete { x, y });
                            s.caps[x] -= level;
                            s.remove_edge(x, y);
                            out.push((ops, s));
                        }
                    }
                }
            }
        }
        out
    }
}

fn lkey_with_caps(lkey: &[u64], st: &State) -> Vec<u64> {
    let mut k = lkey.to_vec();
    k.extend(bits(st.alive).map(|v| st.caps[v] as u64));
    k
}

fn run(
    kind: Kind,
    g: &Graph,
    f: &CapMap,
    budget: &mut Budget,
    opts: SearchOptions,
) -> (Decision<Vec<Op>>, SearchStats) {
    assert_eq!(g.n(), f.len(), "capacity map must cover the graph");
    let start = budget.used();
    let mut stats = SearchStats::default();
    // cheap complete answers before the size guard
    if f.values().iter().any(|&c| c <= 0) {
        return (Decision::No, stats);
    }
    if let Some(order) = strict_degenerate_order(g, f) {
        let ops = order.into_iter().rev().map(|x| Op::VertexDelete { x }).collect();
        return (Decision::Yes(ops), stats);
    }
    let adj = match g.adjacency_masks() {
        Some(a) => a,
        None => {
            return (
                Decision::Unknown(Exhausted::Size {
                    limit: MAX_SEARCH_VERTICES,
                    actual: g.n(),
                }),
                stats,
            )
        }
    };
    let alive = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let st = State {
        alive,
        adj,
        caps: f.values().to_vec(),
    };
    let mut solver = Solver {
        kind,
        opts,
        budget,
        unsat: BTreeSet::new(),
        dominated: BTreeMap::new(),
        hits: 0,
    };
    let out = solver.solve(st);
    stats.memo_entries = solver.unsat.len();
    stats.memo_hits = solver.hits;
    stats.nodes = solver.budget.used() - start;
    let d = match out {
        Ok(Some(ops)) => Decision::Yes(ops),
        Ok(None) => Decision::No,
        Err(e) => Decision::Unknown(e),
    };
    (d, stats)
}

/// Is `G` weak* `f`-degenerate? A `Yes` carries a full certificate.
pub fn decide_weak_star(g: &Graph, f: &CapMap, budget: &mut Budget) -> Decision<Vec<Op>> {
    run(Kind::WeakStar, g, f, budget, SearchOptions::default()).0
}

pub fn decide_weak_star_with(
    g: &Graph,
    f: &CapMap,
    budget: &mut Budget,
    opts: SearchOptions,
) -> (Decision<Vec<Op>>, SearchStats) {
    run(Kind::WeakStar, g, f, budget, opts)
}

/// Is `G` strict weak `f`-degenerate (vertex-delete and delete-save only)?
pub fn decide_strict_weak(g: &Graph, f: &CapMap, budget: &mut Budget) -> Decision<Vec<Op>> {
    run(Kind::StrictWeak, g, f, budget, SearchOptions::default()).0
}

/// Strict `f`-degeneracy. `Yes` carries the removal order: each vertex has
/// fewer than `f(v)` neighbours among the vertices removed after it.
pub fn decide_strict_degenerate(g: &Graph, f: &CapMap) -> Decision<Vec<Vertex>> {
    match strict_degenerate_order(g, f) {
        Some(o) => Decision::Yes(o),
        None => Decision::No,
    }
}

/// Least `d` such that `G` is weak* `d`-degenerate, searched upward from 1.
/// Bounded above by degeneracy + 1.
pub fn weak_star_degeneracy(g: &Graph, budget: &mut Budget) -> Result<i64, Exhausted> {
    let top = degeneracy(g) as i64 + 1;
    for d in 1..top {
        match decide_weak_star(g, &CapMap::constant(g.n(), d), budget) {
            Decision::Yes(_) => return Ok(d),
            Decision::No => {}
            Decision::Unknown(e) => return Err(e),
        }
    }
    Ok(top)
}

/// Least `d` such that `G` is strict weak `d`-degenerate.
pub fn strict_weak_degeneracy(g: &Graph, budget: &mut Budget) -> Result<i64, Exhausted> {
    let top = degeneracy(g) as i64 + 1;
    for d in 1..top {
        match decide_strict_weak(g, &CapMap::constant(g.n(), d), budget) {
            Decision::Yes(_) => return Ok(d),
            Decision::No => {}
            Decision::Unknown(e) => return Err(e),
        }
    }
    Ok(top)
}

/// Strict degeneracy number: least `d` with strict `d`-degeneracy, which is
/// the ordinary degeneracy plus one.
pub fn strict_degeneracy(g: &Graph) -> i64 {
    degeneracy(g) as i64 + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::certifies;
    use crate::enumerate::connected_graphs_up_to;
    use crate::graph::families;

    fn yes(d: &Decision<Vec<Op>>) -> bool {
        d.is_yes()
    }

    /// Unrestricted reference search straight from the definition: any
    /// legal reduce, edge delete or vertex delete, memoised on the exact
    /// labelled state.
    fn reference(g: &Graph, f: &[i64]) -> bool {
        fn go(
            alive: u64,
            adj: &[u64],
            caps: &[i64],
            seen: &mut BTreeMap<(u64, Vec<u64>, Vec<i64>), bool>,
        ) -> bool {
            if alive == 0 {
                return true;
            }
            let key = (alive, adj.to_vec(), caps.to_vec());
            if let Some(&r) = seen.get(&key) {
                return r;
            }
            let mut res = false;
            'outer: for x in bits(alive) {
                if caps[x] > 0 {
                    let mut a = adj.to_vec();
                    let mut c = caps.to_vec();
                    for w in bits(adj[x]) {
                        c[w] -= 1;
                        a[w] &= !(1 << x);
                    }
                    a[x] = 0;
                    if go(alive & !(1 << x), &a, &c, seen) {
                        res = true;
                        break 'outer;
                    }
                }
                for s in 1..caps[x] {
                    let mut c = caps.to_vec();
                    c[x] -= s;
                    if go(alive, adj, &c, seen) {
                        res = true;
                        break 'outer;
                    }
                }
                for y in bits(adj[x]) {
                    if caps[x] > caps[y] {
                        let mut a = adj.to_vec();
                        let mut c = caps.to_vec();
                        c[x] -= caps[y];
                        a[x] &= !(1 << y);
                        a[y] &= !(1 << x);
                        if go(alive, &a, &c, seen) {
                            res = true;
                            break 'outer;
                        }
                    }
                }
            }
            seen.insert(key, res);
            res
        }
        let adj = g.adjacency_masks().unwrap();
        go((1u64 << g.n()) - 1, &adj, f, &mut BTreeMap::new())
    }

    fn caps_up_to(n: usize, max: i64) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (1..=max).map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn spot_values() {
        let mut b = Budget::default();
        assert!(yes(&decide_weak_star(&Graph::empty(0), &CapMap::new(vec![]), &mut b)));
        let k3 = families::complete(3);
        assert!(decide_weak_star(&k3, &CapMap::constant(3, 2), &mut b).is_no());
        let d = decide_weak_star(&k3, &CapMap::constant(3, 3), &mut b);
        assert!(certifies(&k3, &CapMap::constant(3, 3), d.witness().unwrap()));
        for n in 1..=4 {
            assert_eq!(weak_star_degeneracy(&families::complete(n), &mut b), Ok(n as i64));
        }
        assert_eq!(weak_star_degeneracy(&families::cycle(4), &mut b), Ok(3));
        assert_eq!(weak_star_degeneracy(&families::cycle(5), &mut b), Ok(3));
    }

    #[test]
    fn strict_weak_spot_values() {
        let mut b = Budget::default();
        let k3 = families::complete(3);
        assert!(decide_strict_weak(&k3, &CapMap::constant(3, 3), &mut b).is_yes());
        assert!(decide_strict_weak(&k3, &CapMap::constant(3, 2), &mut b).is_no());
        assert!(decide_strict_weak(&families::cycle(4), &CapMap::constant(4, 2), &mut b).is_no());
    }

    #[test]
    fn strict_spot_values() {
        for n in 1..=5 {
            assert!(decide_strict_degenerate(&families::complete(n), &CapMap::constant(n, n as i64)).is_yes());
        }
        assert!(decide_strict_degenerate(&families::cycle(4), &CapMap::constant(4, 2)).is_no());
        assert!(decide_strict_degenerate(&families::path(3), &CapMap::new(vec![1, 2, 1])).is_no());
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let g = families::complete(5);
        let mut b = Budget::new(1);
        let d = decide_weak_star(&g, &CapMap::constant(5, 4), &mut b);
        assert!(matches!(d, Decision::Unknown(Exhausted::Nodes(1))));
    }

    #[test]
    fn pruned_search_matches_definition_n4() {
        for g in connected_graphs_up_to(4) {
            for f in caps_up_to(g.n(), 4) {
                let fm = CapMap::new(f.clone());
                let mut b = Budget::default();
                let d = decide_weak_star(&g, &fm, &mut b);
                assert_eq!(d.is_yes(), reference(&g, &f), "{:?} {:?}", g.edge_set(), f);
                if let Some(c) = d.witness() {
                    assert!(certifies(&g, &fm, c));
                }
            }
        }
    }

    #[test]
    fn memo_variants_agree() {
        let plain = SearchOptions { canonical_memo: false, dominance: false };
        for g in connected_graphs_up_to(5).into_iter().filter(|g| g.n() == 5) {
            for k in 1..=3 {
                let f = CapMap::constant(5, k);
                let a = decide_weak_star(&g, &f, &mut Budget::default()).is_yes();
                let (b, _) = decide_weak_star_with(&g, &f, &mut Budget::default(), plain);
                assert_eq!(a, b.is_yes());
            }
        }
    }

    #[test]
    fn hierarchy_and_positivity_n5() {
        for g in connected_graphs_up_to(5) {
            let n = g.n();
            for k in 1..=n as i64 {
                let f = CapMap::constant(n, k);
                let mut b = Budget::default();
                let ws = decide_weak_star(&g, &f, &mut b);
                let sw = decide_strict_weak(&g, &f, &mut b);
                let sd = decide_strict_degenerate(&g, &f);
                if let Some(c) = sw.witness() {
                    assert!(certifies(&g, &f, c));
                    assert!(ws.is_yes());
                }
                if sd.is_yes() {
                    assert!(sw.is_yes());
                }
                if let Some(c) = ws.witness() {
                    assert!(certifies(&g, &f, c));
                }
            }
            let mut z = CapMap::constant(n, 3);
            z[0] = 0;
            assert!(decide_weak_star(&g, &z, &mut Budget::default()).is_no());
        }
    }

    #[test]
    fn monotone_in_caps_n4() {
        for g in connected_graphs_up_to(4) {
            let all = caps_up_to(g.n(), 3);
            let verdicts: Vec<bool> = all
                .iter()
                .map(|f| decide_weak_star(&g, &CapMap::new(f.clone()), &mut Budget::default()).is_yes())
                .collect();
            for (i, f) in all.iter().enumerate() {
                for (j, h) in all.iter().enumerate() {
                    if verdicts[i] && f.iter().zip(h).all(|(a, b)| a <= b) {
                        assert!(verdicts[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn large_strictly_degenerate_input_skips_size_guard() {
        let g = families::cycle(100);
        let d = decide_weak_star(&g, &CapMap::constant(100, 3), &mut Budget::default());
        assert!(d.is_yes());
        let d = decide_weak_star(&g, &CapMap::constant(100, 2), &mut Budget::default());
        assert!(matches!(d, Decision::Unknown(Exhausted::Size { .. })));
    }
}
