//! The painting and DP-painting games, decided through the one-round
//! recursion: Lister announces `g <= f` (and a `g`-cover), Painter colours
//! a set `X` and the game continues on `G - X` with `f - g`.
//!
//! States are `(vertex mask, capacities)` on the fixed host graph and are
//! memoised. Vertices whose capacity exceeds their degree are dropped first.
//! For DP-painting, Painter's good sets for a given `g` form an up-set, so
//! Lister wins with `g` exactly when some cover makes every minimal good set
//! uncolourable; that is what [`cover_search`] looks for.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::covers::cover_search;
use crate::graph::{CapMap, Graph, Vertex};
use crate::{Budget, Exhausted};

/// Painting is limited to this many vertices.
pub const MAX_PAINT_VERTICES: usize = 16;

type State = (u64, Vec<i64>);

fn prepare(g: &Graph, f: &CapMap) -> Result<Vec<u64>, Exhausted> {
    assert_eq!(f.len(), g.n());
    if g.n() > MAX_PAINT_VERTICES {
        return Err(Exhausted::Size { limit: MAX_PAINT_VERTICES, actual: g.n() });
    }
    Ok(g.adjacency_masks().expect("small graph"))
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Drops surplus vertices and canonicalises capacities outside the mask.
fn normalise(adj: &[u64], mut mask: u64, f: &[i64]) -> State {
    loop {
        let mut changed = false;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if f[v] > (adj[v] & mask).count_ones() as i64 {
                mask &= !(1 << v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let caps = (0..f.len()).map(|v| if mask >> v & 1 == 1 { f[v] } else { 0 }).collect();
    (mask, caps)
}

/// `f`-painting solver for one host graph; reusable across capacities.
pub struct Painter {
    adj: Vec<u64>,
    memo: BTreeMap<State, bool>,
}

impl Painter {
    pub fn new(g: &Graph) -> Result<Self, Exhausted> {
        let adj = prepare(g, &CapMap::constant(g.n(), 0))?;
        Ok(Painter { adj, memo: BTreeMap::new() })
    }

    pub fn decide(&mut self, f: &CapMap, budget: &mut Budget) -> Result<bool, Exhausted> {
        assert_eq!(f.len(), self.adj.len());
        self.win(full(self.adj.len()), f.values(), budget)
    }

    fn win(&mut self, mask: u64, f: &[i64], budget: &mut Budget) -> Result<bool, Exhausted> {
        if (0..f.len()).any(|v| mask >> v & 1 == 1 && f[v] <= 0) {
            return Ok(false);
        }
        let (mask, f) = normalise(&self.adj, mask, f);
        if mask == 0 {
            return Ok(true);
        }
        if let Some(&r) = self.memo.get(&(mask, f.clone())) {
            return Ok(r);
        }
        budget.tick()?;
        let mut result = true;
        // Lister marks a nonempty set M of uncoloured vertices
        let mut mk = mask;
        'lister: while mk != 0 {
            let marked = mk;
            mk = (mk - 1) & mask;
            let mut next = f.clone();
            let mut m = marked;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next[v] -= 1;
            }
            for x in maximal_independent(&self.adj, marked) {
                if self.win(mask & !x, &next, budget)? {
                    continue 'lister;
                }
            }
            result = false;
            break;
        }
        self.memo.insert((mask, f), result);
        Ok(result)
    }
}

/// Maximal independent subsets of `within`.
fn maximal_independent(adj: &[u64], within: u64) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(adj: &[u64], within: u64, cand: u64, chosen: u64, out: &mut Vec<u64>) {
        if cand == 0 {
            // maximal: nothing outside can be added
            let mut rest = within & !chosen;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[v] & chosen == 0 {
                    return;
                }
            }
            out.push(chosen);
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        rec(adj, within, cand & !bit & !adj[v], chosen | bit, out);
        rec(adj, within, cand & !bit, chosen, out);
    }
    rec(adj, within, within, 0, &mut out);
    out
}

pub fn decide_paintable(g: &Graph, f: &CapMap, budget: &mut Budget) -> Result<bool, Exhausted> {
    Painter::new(g)?.decide(f, budget)
}

/// DP-`f`-painting solver for one host graph.
pub struct DpPainter {
    g: Graph,
    adj: Vec<u64>,
    memo: BTreeMap<State, bool>,
}

impl DpPainter {
    pub fn new(g: &Graph) -> Result<Self, Exhausted> {
        let adj = prepare(g, &CapMap::constant(g.n(), 0))?;
        Ok(DpPainter { g: g.clone(), adj, memo: BTreeMap::new() })
    }

    pub fn decide(&mut self, f: &CapMap, budget: &mut Budget) -> Result<bool, Exhausted> {
        assert_eq!(f.len(), self.adj.len());
        self.win(full(self.adj.len()), f.values(), budget)
    }

    fn win(&mut self, mask: u64, f: &[i64], budget: &mut Budget) -> Result<bool, Exhausted> {
        if (0..f.len()).any(|v| mask >> v & 1 == 1 && f[v] <= 0) {
            return Ok(false);
        }
        let (mask, f) = normalise(&self.adj, mask, f);
        if mask == 0 {
            return Ok(true);
        }
        if let Some(&r) = self.memo.get(&(mask, f.clone())) {
            return Ok(r);
        }
        budget.tick()?;
        let verts: Vec<Vertex> = (0..f.len()).filter(|&v| mask >> v & 1 == 1).collect();
        let mut g = vec![0i64; f.len()];
        let mut result = true;
        // odometer over 0 <= g <= f on the live vertices, skipping g = 0
        while advance(&mut g, &f, &verts) {
            budget.tick()?;
            if !self.lister_fails(mask, &f, &g, &verts, budget)? {
                result = false;
                break;
            }
        }
        self.memo.insert((mask, f), result);
        Ok(result)
    }

    /// Whether Painter survives every `g`-cover.
    fn lister_fails(
        &mut self,
        mask: u64,
        f: &[i64],
        g: &[i64],
        verts: &[Vertex],
        budget: &mut Budget,
    ) -> Result<bool, Exhausted> {
        let next: Vec<i64> = (0..f.len()).map(|v| f[v] - g[v]).collect();
        let support: Vec<Vertex> = verts.iter().copied().filter(|&v| g[v] > 0).collect();
        let s = support.len();
        // minimal X within the support with G - X winning for f - g
        let mut minimal: Vec<u64> = Vec::new();
        let mut subsets: Vec<u64> = (0..1u64 << s).collect();
        subsets.sort_by_key(|x| (x.count_ones(), *x));
        for local in subsets {
            if minimal.iter().any(|&m| (m & local) == m) {
                continue;
            }
            let x = (0..s).filter(|&i| local >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << support[i]);
            if self.win(mask & !x, &next, budget)? {
                if local == 0 {
                    return Ok(true);
                }
                minimal.push(local);
            }
        }
        if minimal.is_empty() {
            return Ok(false);
        }
        let (h, _) = self.g.induced(&support);
        let sizes: Vec<usize> = support.iter().map(|&v| g[v] as usize).collect();
        let targets: Vec<Vec<usize>> = minimal
            .iter()
            .map(|&m| (0..s).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        Ok(cover_search(&h, &sizes, &targets, budget)?.is_none())
    }
}

/// Next `g` in the odometer; `false` once it wraps to zero.
fn advance(g: &mut [i64], f: &[i64], verts: &[Vertex]) -> bool {
    for &v in verts {
        if g[v] < f[v] {
            g[v] += 1;
            return true;
        }
        g[v] = 0;
    }
    false
}

pub fn decide_dp_paintable(g: &Graph, f: &CapMap, budget: &mut Budget) -> Result<bool, Exhausted> {
    DpPainter::new(g)?.decide(f, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::decide_weak_star;
    use crate::enumerate::connected_graphs_up_to;
    use crate::graph::families;

    #[test]
    fn spot_values() {
        let mut b = Budget::default();
        let c4 = families::cycle(4);
        assert!(decide_paintable(&c4, &CapMap::constant(4, 2), &mut b).unwrap());
        assert!(!decide_dp_paintable(&c4, &CapMap::constant(4, 2), &mut b).unwrap());
        assert!(decide_dp_paintable(&c4, &CapMap::constant(4, 3), &mut b).unwrap());
        assert!(decide_dp_paintable(&Graph::empty(1), &CapMap::constant(1, 1), &mut b).unwrap());
        assert!(!decide_paintable(&families::cycle(3), &CapMap::constant(3, 2), &mut b).unwrap());
        assert!(!decide_paintable(&families::cycle(5), &CapMap::constant(5, 2), &mut b).unwrap());
    }

    #[test]
    fn independent_sets() {
        let c4 = families::cycle(4);
        let adj = c4.adjacency_masks().unwrap();
        let mut s = maximal_independent(&adj, 0b1111);
        s.sort_unstable();
        assert_eq!(s, vec![0b0101, 0b1010]);
        assert_eq!(maximal_independent(&adj, 0b0011).len(), 2);
    }

    #[test]
    fn weak_star_implies_dp_paintable() {
        let mut checked = 0;
        for g in connected_graphs_up_to(4) {
            let n = g.n();
            let mut dp = DpPainter::new(&g).unwrap();
            for code in 0..4u32.pow(n as u32) {
                let f = CapMap::new((0..n).map(|i| (code / 4u32.pow(i as u32) % 4) as i64 + 1).collect());
                if decide_weak_star(&g, &f, &mut Budget::default()).is_yes() {
                    assert!(dp.decide(&f, &mut Budget::new(u64::MAX)).unwrap());
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }
}
