//! Alon–Tarsi machinery: signed Eulerian subdigraph counts (plain and
//! edge-weighted), graph-polynomial coefficients, the orientation search
//! deciding `f`-AT, and orientation extraction from operation certificates.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::calculus::{expand_delete_save, verify_certificate, Mode, Op, OpState, Verdict};
use crate::graph::{CapMap, Graph, Vertex};
use crate::{Budget, Exhausted};

/// Plain subset enumeration is refused above this many arcs.
pub const MAX_ENUM_ARCS: usize = 24;
/// Orientation search and coefficient expansion refuse larger edge sets.
pub const MAX_AT_EDGES: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AtError {
    #[error("{actual} edges exceed the limit of {limit}")]
    TooLarge { limit: usize, actual: usize },
    #[error("arc {0}->{1} is not an edge of the base graph")]
    NotAnEdge(Vertex, Vertex),
    #[error("edge {0}-{1} is oriented more than once or not at all")]
    BadOrientation(Vertex, Vertex),
    #[error("weighting has {got} entries for {arcs} arcs, or a zero weight")]
    BadWeights { arcs: usize, got: usize },
    #[error("exponent vector has {got} entries for {n} vertices")]
    BadExponents { n: usize, got: usize },
    #[error("certificate rejected: {0:?}")]
    Certificate(Verdict),
    #[error(transparent)]
    Exhausted(#[from] Exhausted),
}

/// An orientation of a base graph: one arc `(tail, head)` per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
}

impl Orientation {
    /// Checks that `arcs` orients every edge of `g` exactly once.
    pub fn new(g: &Graph, arcs: Vec<(Vertex, Vertex)>) -> Result<Self, AtError> {
        let mut seen = BTreeMap::new();
        for &(a, b) in &arcs {
            if a >= g.n() || b >= g.n() || !g.has_edge(a, b) {
                return Err(AtError::NotAnEdge(a, b));
            }
            if seen.insert((a.min(b), a.max(b)), ()).is_some() {
                return Err(AtError::BadOrientation(a, b));
            }
        }
        if let Some((u, v)) = g.edges().find(|e| !seen.contains_key(e)) {
            return Err(AtError::BadOrientation(u, v));
        }
        Ok(Orientation { n: g.n(), arcs })
    }

    /// Every edge `u < v` oriented `u -> v` when bit `i` of `choice` is 0.
    pub fn from_choice(g: &Graph, choice: u64) -> Self {
        let arcs = g
            .edges()
            .enumerate()
            .map(|(i, (u, v))| if choice >> i & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        Orientation { n: g.n(), arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    /// `t_D`.
    pub fn out_degrees(&self) -> Vec<i64> {
        let mut t = vec![0; self.n];
        for &(a, _) in &self.arcs {
            t[a] += 1;
        }
        t
    }

    /// Sum of arc weights leaving each vertex.
    pub fn out_weights(&self, w: &[u64]) -> Vec<i64> {
        let mut t = vec![0; self.n];
        for (&(a, _), &x) in self.arcs.iter().zip(w) {
            t[a] += x as i64;
        }
        t
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            n: self.n,
            arcs: self.arcs.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }
}

fn check_weights(d: &Orientation, w: &[u64]) -> Result<(), AtError> {
    if w.len() != d.arcs.len() || w.contains(&0) {
        return Err(AtError::BadWeights { arcs: d.arcs.len(), got: w.len() });
    }
    Ok(())
}

/// `diff(D)`.
pub fn eulerian_diff(d: &Orientation) -> i64 {
    eulerian_diff_weighted(d, &vec![1; d.arcs.len()]).expect("unit weights are valid")
}

/// `diff(D, w)` by a dynamic program over the balances of the vertices whose
/// arcs are only partly decided. A vertex leaves the state once its last arc
/// is processed, and only with balance zero.
pub fn eulerian_diff_weighted(d: &Orientation, w: &[u64]) -> Result<i64, AtError> {
    check_weights(d, w)?;
    let n = d.n;
    let m = d.arcs.len();
    let mut remaining = vec![0i64; n];
    for (i, &(a, b)) in d.arcs.iter().enumerate() {
        remaining[a] += w[i] as i64;
        remaining[b] += w[i] as i64;
    }
    // state: sorted (vertex, balance) for open vertices with nonzero balance
    let mut states: BTreeMap<Vec<(Vertex, i64)>, i64> = BTreeMap::new();
    states.insert(Vec::new(), 1);
    for i in 0..m {
        let (a, b) = d.arcs[i];
        let x = w[i] as i64;
        remaining[a] -= x;
        remaining[b] -= x;
        let mut next: BTreeMap<Vec<(Vertex, i64)>, i64> = BTreeMap::new();
        for (key, count) in states {
            // skip the arc
            let skip_ok = [a, b].iter().all(|&v| {
                let bal = key.iter().find(|e| e.0 == v).map_or(0, |e| e.1);
                bal.abs() <= remaining[v]
            });
            if skip_ok {
                *next.entry(key.clone()).or_insert(0) += count;
            }
            // take it: tail gains out-weight, head gains in-weight
            let mut k = key;
            bump(&mut k, a, x);
            bump(&mut k, b, -x);
            let take_ok = [a, b].iter().all(|&v| {
                let bal = k.iter().find(|e| e.0 == v).map_or(0, |e| e.1);
                bal.abs() <= remaining[v]
            });
            if take_ok {
                *next.entry(k).or_insert(0) -= count;
            }
        }
        states = next;
    }
    Ok(states.get(&Vec::new()).copied().unwrap_or(0))
}

fn bump(k: &mut Vec<(Vertex, i64)>, v: Vertex, by: i64) {
    match k.binary_search_by_key(&v, |e| e.0) {
        Ok(p) => {
            k[p].1 += by;
            if k[p].1 == 0 {
                k.remove(p);
            }
        }
        Err(p) => k.insert(p, (v, by)),
    }
}

/// `diff(D, w)` by walking all arc subsets in a fixed order, cutting a branch
/// once a vertex with no undecided arcs is unbalanced. Kept as an
/// independent check on [`eulerian_diff_weighted`].
pub fn eulerian_diff_enumerate(d: &Orientation, w: &[u64]) -> Result<i64, AtError> {
    check_weights(d, w)?;
    let m = d.arcs.len();
    if m > MAX_ENUM_ARCS {
        return Err(AtError::TooLarge { limit: MAX_ENUM_ARCS, actual: m });
    }
    let mut last = vec![None; d.n];
    for (i, &(a, b)) in d.arcs.iter().enumerate() {
        last[a] = Some(i);
        last[b] = Some(i);
    }
    fn rec(d: &Orientation, w: &[u64], last: &[Option<usize>], i: usize, bal: &mut [i64], odd: bool) -> i64 {
        if i == d.arcs.len() {
            return if odd { -1 } else { 1 };
        }
        let (a, b) = d.arcs[i];
        let closes = |bal: &[i64]| [a, b].iter().all(|&v| last[v] != Some(i) || bal[v] == 0);
        let mut total = 0;
        if closes(bal) {
            total += rec(d, w, last, i + 1, bal, odd);
        }
        bal[a] += w[i] as i64;
        bal[b] -= w[i] as i64;
        if closes(bal) {
            total += rec(d, w, last, i + 1, bal, !odd);
        }
        bal[a] -= w[i] as i64;
        bal[b] += w[i] as i64;
        total
    }
    let mut bal = vec![0; d.n];
    Ok(rec(d, w, &last, 0, &mut bal, false))
}

/// Coefficient of `prod x_v^t(v)` in `prod_{uv in E, u<v} (x_u^w - x_v^w)`,
/// with edges in the order of [`Graph::edges`] and `w` indexed alike
/// (`None` means unit weights).
pub fn coefficient(g: &Graph, w: Option<&[u64]>, t: &[u64]) -> Result<i64, AtError> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let unit = vec![1u64; edges.len()];
    let w = w.unwrap_or(&unit);
    if w.len() != edges.len() || w.contains(&0) {
        return Err(AtError::BadWeights { arcs: edges.len(), got: w.len() });
    }
    if t.len() != g.n() {
        return Err(AtError::BadExponents { n: g.n(), got: t.len() });
    }
    if edges.len() > MAX_AT_EDGES {
        return Err(AtError::TooLarge { limit: MAX_AT_EDGES, actual: edges.len() });
    }
    let total: u64 = w.iter().sum();
    if t.iter().sum::<u64>() != total {
        return Ok(0);
    }
    fn rec(edges: &[(Vertex, Vertex)], w: &[u64], i: usize, need: &mut [u64]) -> i64 {
        if i == edges.len() {
            return 1;
        }
        let (u, v) = edges[i];
        let mut s = 0;
        if need[u] >= w[i] {
            need[u] -= w[i];
            s += rec(edges, w, i + 1, need);
            need[u] += w[i];
        }
        if need[v] >= w[i] {
            need[v] -= w[i];
            s -= rec(edges, w, i + 1, need);
            need[v] += w[i];
        }
        s
    }
    let mut need = t.to_vec();
    Ok(rec(&edges, w, 0, &mut need))
}

/// An AT-orientation `D` with `t_D + 1 <= f`, if one exists.
pub fn is_f_at(g: &Graph, f: &CapMap, budget: &mut Budget) -> Result<Option<Orientation>, AtError> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    if edges.len() > MAX_AT_EDGES {
        return Err(AtError::TooLarge { limit: MAX_AT_EDGES, actual: edges.len() });
    }
    if (0..g.n()).any(|v| f[v] <= 0) {
        return Ok(None);
    }
    let room: i64 = (0..g.n()).map(|v| f[v] - 1).sum();
    if (edges.len() as i64) > room {
        return Ok(None);
    }
    let mut out = vec![0i64; g.n()];
    let mut arcs = Vec::with_capacity(edges.len());
    fn rec(
        g: &Graph,
        f: &CapMap,
        edges: &[(Vertex, Vertex)],
        out: &mut [i64],
        arcs: &mut Vec<(Vertex, Vertex)>,
        budget: &mut Budget,
    ) -> Result<Option<Orientation>, AtError> {
        budget.tick()?;
        let i = arcs.len();
        if i == edges.len() {
            let d = Orientation { n: g.n(), arcs: arcs.clone() };
            return Ok((eulerian_diff(&d) != 0).then_some(d));
        }
        let (u, v) = edges[i];
        for (a, b) in [(u, v), (v, u)] {
            if out[a] + 1 > f[a] - 1 {
                continue;
            }
            out[a] += 1;
            arcs.push((a, b));
            if let Some(d) = rec(g, f, edges, out, arcs, budget)? {
                return Ok(Some(d));
            }
            arcs.pop();
            out[a] -= 1;
        }
        Ok(None)
    }
    rec(g, f, &edges, &mut out, &mut arcs, budget)
}

/// Least `k` with `G` being `k`-AT.
pub fn at_number(g: &Graph, budget: &mut Budget) -> Result<i64, AtError> {
    let mut k = 1;
    loop {
        if is_f_at(g, &CapMap::constant(g.n(), k), budget)?.is_some() {
            return Ok(k);
        }
        k += 1;
    }
}

/// Replays a verified certificate backwards. An edge deletion `(x, y)`
/// becomes the arc `x -> y` weighted by the capacity of `y` at that moment;
/// a vertex deletion makes the vertex a sink with unit-weight arcs from its
/// remaining neighbours. `DeleteSave` is expanded first. The result has
/// weighted out-degree at most `f - 1` everywhere.
pub fn certificate_to_at_orientation(
    g: &Graph,
    f: &CapMap,
    ops: &[Op],
) -> Result<(Orientation, Vec<u64>), AtError> {
    let v = verify_certificate(g, f, ops, Mode::Full);
    if !v.is_accept() {
        return Err(AtError::Certificate(v));
    }
    let ops = expand_delete_save(ops);
    let mut st = OpState::new(g, f);
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    let mut w: Vec<u64> = Vec::new();
    let mut steps: Vec<(Vec<(Vertex, Vertex)>, Vec<u64>)> = Vec::with_capacity(ops.len());
    for op in &ops {
        let mut here = (Vec::new(), Vec::new());
        match *op {
            Op::EdgeDelete { x, y } => {
                here.0.push((x, y));
                here.1.push(st.cap(y) as u64);
            }
            Op::VertexDelete { x } => {
                for &y in st.graph().neighbours(x) {
                    if st.is_present(y) {
                        here.0.push((y, x));
                        here.1.push(1);
                    }
                }
            }
            Op::Reduce { .. } | Op::DeleteSave { .. } => {}
        }
        st.apply(op).expect("verified certificate replays");
        steps.push(here);
    }
    for (a, b) in steps.into_iter().rev() {
        arcs.extend(a);
        w.extend(b);
    }
    // canonical arc order: by base edge
    let mut idx: Vec<usize> = (0..arcs.len()).collect();
    idx.sort_by_key(|&i| (arcs[i].0.min(arcs[i].1), arcs[i].0.max(arcs[i].1)));
    let arcs2: Vec<(Vertex, Vertex)> = idx.iter().map(|&i| arcs[i]).collect();
    let w2: Vec<u64> = idx.iter().map(|&i| w[i]).collect();
    let d = Orientation::new(g, arcs2)?;
    Ok((d, w2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::decide_weak_star;
    use crate::enumerate::connected_graphs_up_to;
    use crate::graph::families;
    use proptest::prelude::*;

    fn directed_cycle(k: usize) -> (Graph, Orientation) {
        let g = families::cycle(k);
        let arcs = (0..k).map(|i| (i, (i + 1) % k)).collect();
        let d = Orientation::new(&g, arcs).unwrap();
        (g, d)
    }

    #[test]
    fn small_diffs() {
        let g = families::complete(2);
        assert_eq!(eulerian_diff(&Orientation::new(&g, vec![(0, 1)]).unwrap()), 1);
        assert_eq!(eulerian_diff(&directed_cycle(3).1), 0);
        assert_eq!(eulerian_diff(&directed_cycle(4).1), 2);
        let (_, d) = directed_cycle(4);
        assert_eq!(eulerian_diff_weighted(&d, &[2, 1, 1, 1]).unwrap(), 1);
        assert_eq!(eulerian_diff_enumerate(&d, &[2, 1, 1, 1]).unwrap(), 1);
    }

    #[test]
    fn orientation_validation() {
        let g = families::path(3);
        assert!(Orientation::new(&g, vec![(0, 1)]).is_err());
        assert!(Orientation::new(&g, vec![(0, 2), (1, 2)]).is_err());
        assert!(Orientation::new(&g, vec![(0, 1), (1, 0), (1, 2)]).is_err());
        assert!(Orientation::new(&g, vec![(1, 0), (2, 1)]).is_ok());
    }

    #[test]
    fn coefficients() {
        let g = families::complete(2);
        assert_eq!(coefficient(&g, None, &[1, 0]).unwrap().abs(), 1);
        assert_eq!(coefficient(&families::cycle(4), None, &[1; 4]).unwrap().abs(), 2);
        assert_eq!(coefficient(&families::cycle(3), None, &[1; 3]).unwrap(), 0);
        assert_eq!(coefficient(&g, None, &[2, 0]).unwrap(), 0);
    }

    #[test]
    fn at_spot_values() {
        let mut b = Budget::default();
        let c4 = families::cycle(4);
        let d = is_f_at(&c4, &CapMap::constant(4, 2), &mut b).unwrap().unwrap();
        assert_eq!(eulerian_diff(&d).abs(), 2);
        assert!(is_f_at(&families::cycle(3), &CapMap::constant(3, 2), &mut b).unwrap().is_none());
        let k2 = families::complete(2);
        let d = is_f_at(&k2, &CapMap::new(vec![2, 1]), &mut b).unwrap().unwrap();
        assert_eq!(d.arcs(), &[(0, 1)]);
        assert_eq!(at_number(&c4, &mut b).unwrap(), 2);
        assert_eq!(at_number(&families::cycle(3), &mut b).unwrap(), 3);
        assert_eq!(at_number(&Graph::empty(1), &mut b).unwrap(), 1);
    }

    /// Every orientation of every graph with at most `max_m` edges, up to
    /// seven vertices.
    fn orientations(max_m: usize) -> impl Iterator<Item = (Graph, Orientation)> {
        connected_graphs_up_to(6)
            .into_iter()
            .filter(move |g| g.m() <= max_m)
            .flat_map(|g| {
                (0..1u64 << g.m()).map(move |c| {
                    let d = Orientation::from_choice(&g, c);
                    (g.clone(), d)
                })
            })
    }

    #[test]
    fn identity_with_coefficients() {
        for (g, d) in orientations(8) {
            let t: Vec<u64> = d.out_degrees().iter().map(|&x| x as u64).collect();
            let c = coefficient(&g, None, &t).unwrap();
            let e = eulerian_diff(&d);
            assert_eq!(c.abs(), e.abs());
            assert_eq!(e, eulerian_diff_enumerate(&d, &vec![1; g.m()]).unwrap());
            assert_eq!(e, eulerian_diff(&d.reversed()));
        }
    }

    #[test]
    fn weighted_identity_and_divisibility() {
        let weights = [[1u64, 2, 1, 3, 1, 2, 2, 1], [2, 2, 1, 1, 3, 1, 1, 2]];
        for (g, d) in orientations(6) {
            for ws in &weights {
                let w = &ws[..g.m()];
                let t: Vec<u64> = d.out_weights(w).iter().map(|&x| x as u64).collect();
                let c = coefficient(&g, Some(w), &t).unwrap();
                let e = eulerian_diff_weighted(&d, w).unwrap();
                assert_eq!(c.abs(), e.abs());
                assert_eq!(e, eulerian_diff_enumerate(&d, w).unwrap());
                if c != 0 {
                    assert!(below(&t).any(|s| coefficient(&g, None, &s).unwrap() != 0));
                }
            }
        }
    }

    fn below(t: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
        let total: u64 = t.iter().map(|&x| x + 1).product();
        (0..total).map(move |mut c| {
            t.iter()
                .map(|&x| {
                    let d = c % (x + 1);
                    c /= x + 1;
                    d
                })
                .collect()
        })
    }

    #[test]
    fn certificate_spot_examples() {
        let g = families::path(3);
        let f = CapMap::new(vec![1, 2, 3]);
        let ops: Vec<Op> = (0..3).map(|x| Op::VertexDelete { x }).collect();
        let (d, w) = certificate_to_at_orientation(&g, &f, &ops).unwrap();
        assert_eq!(d.arcs(), &[(1, 0), (2, 1)]);
        assert_eq!(w, vec![1, 1]);
        assert_eq!(eulerian_diff(&d), 1);

        let k2 = families::complete(2);
        let f = CapMap::new(vec![2, 1]);
        let ops = [Op::EdgeDelete { x: 0, y: 1 }, Op::VertexDelete { x: 0 }, Op::VertexDelete { x: 1 }];
        let (d, w) = certificate_to_at_orientation(&k2, &f, &ops).unwrap();
        assert_eq!(d.arcs(), &[(0, 1)]);
        assert_eq!(w, vec![1]);
        assert_eq!(eulerian_diff_weighted(&d, &w).unwrap(), 1);

        let bad = [Op::VertexDelete { x: 0 }];
        assert!(matches!(
            certificate_to_at_orientation(&k2, &f, &bad),
            Err(AtError::Certificate(_))
        ));
    }

    #[test]
    fn weak_star_implies_at_small() {
        let mut seen = 0;
        for g in connected_graphs_up_to(5) {
            let n = g.n();
            for code in 0..4u32.pow(n as u32) {
                let f = CapMap::new((0..n).map(|i| (code / 4u32.pow(i as u32) % 4) as i64 + 1).collect());
                if let Some(cert) = decide_weak_star(&g, &f, &mut Budget::default()).witness() {
                    seen += 1;
                    let at = is_f_at(&g, &f, &mut Budget::default()).unwrap();
                    assert!(at.is_some(), "{:?} {:?}", g.edges().collect::<Vec<_>>(), f);
                    if g.m() <= 12 {
                        let (d, w) = certificate_to_at_orientation(&g, &f, cert).unwrap();
                        let t = d.out_weights(&w);
                        assert!((0..n).all(|v| t[v] < f[v]));
                        assert_ne!(eulerian_diff_weighted(&d, &w).unwrap(), 0);
                    }
                }
            }
        }
        assert!(seen > 1000);
    }

    proptest! {
        #[test]
        fn search_witness_is_valid(idx in 0usize..150, k in 1i64..5) {
            let graphs = connected_graphs_up_to(6);
            let g = &graphs[idx % graphs.len()];
            let f = CapMap::constant(g.n(), k);
            if let Some(d) = is_f_at(g, &f, &mut Budget::default()).unwrap() {
                let t = d.out_degrees();
                prop_assert!((0..g.n()).all(|v| t[v] < k));
                prop_assert_ne!(eulerian_diff(&d), 0);
            }
        }
    }
}
