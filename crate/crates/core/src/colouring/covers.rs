//! Search for a simple cover defeating a family of vertex sets.
//!
//! Given node counts on the vertices of a small graph and target sets
//! `X_1, .., X_r`, find maximal-matching link sets such that no `G[X_i]`
//! has a colouring. For each target the set of still-valid assignments of
//! `X_i` is kept as a bitset over the mixed-radix product of node counts;
//! adding a matching on edge `uv` clears every assignment using a linked
//! pair. A spanning forest is normalised by relabelling child nodes, and a
//! branch is cut once some target has more survivors than the remaining
//! edges inside it could possibly clear.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};
use crate::{Budget, Exhausted};

/// Largest assignment space tracked per target.
pub const MAX_TARGET_SPACE: usize = 1 << 20;

/// `map[i] = Some(j)` links node `i` of the first endpoint to node `j`.
type Matching = Vec<Option<usize>>;

struct Target {
    members: Vec<usize>,
    /// `digits[p][idx]`: node of `members[p]` in assignment `idx`.
    digits: Vec<Vec<u8>>,
    space: usize,
}

struct EdgePlan {
    u: usize,
    v: usize,
    options: Vec<Matching>,
}

/// Links per local edge `(u, v)` with `u < v`, or `None` when every cover
/// leaves some target colourable.
pub fn cover_search(
    h: &Graph,
    sizes: &[usize],
    targets: &[Vec<usize>],
    budget: &mut Budget,
) -> Result<Option<BTreeMap<(Vertex, Vertex), Vec<(usize, usize)>>>, Exhausted> {
    let n = h.n();
    assert_eq!(sizes.len(), n);
    let mut tgts = Vec::with_capacity(targets.len());
    for t in targets {
        let mut space = 1usize;
        for &v in t {
            space = space.saturating_mul(sizes[v].max(1));
            if space > MAX_TARGET_SPACE {
                return Err(Exhausted::Size { limit: MAX_TARGET_SPACE, actual: space });
            }
        }
        let mut digits = vec![Vec::with_capacity(space); t.len()];
        for idx in 0..space {
            let mut rest = idx;
            for (p, &v) in t.iter().enumerate() {
                let s = sizes[v].max(1);
                digits[p].push((rest % s) as u8);
                rest /= s;
            }
        }
        tgts.push(Target { members: t.clone(), digits, space });
    }

    let plan = plan_edges(h, sizes);
    let mut surv: Vec<Vec<u64>> = tgts
        .iter()
        .map(|t| {
            let mut bits = vec![u64::MAX; t.space.div_ceil(64)];
            if t.members.iter().any(|&v| sizes[v] == 0) {
                bits.iter_mut().for_each(|w| *w = 0);
            } else if t.space % 64 != 0 {
                *bits.last_mut().unwrap() = (1u64 << (t.space % 64)) - 1;
            }
            bits
        })
        .collect();
    // suffix capacity: how many assignments edges from position k on can clear
    let mut cap = vec![vec![0usize; plan.len() + 1]; tgts.len()];
    for (ti, t) in tgts.iter().enumerate() {
        for k in (0..plan.len()).rev() {
            let e = &plan[k];
            let inside = t.members.contains(&e.u) && t.members.contains(&e.v);
            let add = if inside {
                let (a, b) = (sizes[e.u], sizes[e.v]);
                if a == 0 || b == 0 {
                    0
                } else {
                    a.min(b) * (t.space / (a * b))
                }
            } else {
                0
            };
            cap[ti][k] = cap[ti][k + 1] + add;
        }
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(plan.len());
    let found = dfs(&plan, &tgts, &cap, &mut surv, &mut chosen, budget)?;
    if !found {
        return Ok(None);
    }
    let mut links = BTreeMap::new();
    for (k, &o) in chosen.iter().enumerate() {
        let e = &plan[k];
        links.insert(key(e.u, e.v), pairs(e.u, e.v, &e.options[o]));
    }
    Ok(Some(fill_identity(h, sizes, &links)))
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn pairs(u: usize, v: usize, m: &Matching) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = m
        .iter()
        .enumerate()
        .filter_map(|(i, j)| j.map(|j| if u < v { (i, j) } else { (j, i) }))
        .collect();
    out.sort_unstable();
    out
}

/// Complete `links` with the identity matching on every missing edge.
fn fill_identity(
    h: &Graph,
    sizes: &[usize],
    links: &BTreeMap<(Vertex, Vertex), Vec<(usize, usize)>>,
) -> BTreeMap<(Vertex, Vertex), Vec<(usize, usize)>> {
    let mut out = links.clone();
    for (u, v) in h.edges() {
        out.entry((u, v))
            .or_insert_with(|| (0..sizes[u].min(sizes[v])).map(|i| (i, i)).collect());
    }
    out
}

fn plan_edges(h: &Graph, sizes: &[usize]) -> Vec<EdgePlan> {
    let n = h.n();
    let mut seen = vec![false; n];
    let mut tree = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(p) = q.pop_front() {
            for &c in h.neighbours(p) {
                if !seen[c] {
                    seen[c] = true;
                    tree.push((p, c));
                    q.push_back(c);
                }
            }
        }
    }
    let mut plan = Vec::new();
    for &(p, c) in &tree {
        let (a, b) = (sizes[p], sizes[c]);
        let options = if a <= b {
            vec![(0..a).map(Some).collect()]
        } else {
            subsets(a, b)
                .into_iter()
                .map(|sel| {
                    let mut m = vec![None; a];
                    for (j, &i) in sel.iter().enumerate() {
                        m[i] = Some(j);
                    }
                    m
                })
                .collect()
        };
        plan.push(EdgePlan { u: p, v: c, options });
    }
    for (u, v) in h.edges() {
        if tree.contains(&(u, v)) || tree.contains(&(v, u)) {
            continue;
        }
        plan.push(EdgePlan { u, v, options: injections(sizes[u], sizes[v]) });
    }
    plan
}

/// Sorted `k`-subsets of `0..n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Maximum matchings of `K_{a,b}` as maps from the first side; identity first.
fn injections(a: usize, b: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    if a <= b {
        let mut cur = Vec::new();
        let mut used = vec![false; b];
        fn rec(a: usize, b: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Matching>) {
            if cur.len() == a {
                out.push(cur.iter().map(|&j| Some(j)).collect());
                return;
            }
            for j in 0..b {
                if !used[j] {
                    used[j] = true;
                    cur.push(j);
                    rec(a, b, cur, used, out);
                    cur.pop();
                    used[j] = false;
                }
            }
        }
        rec(a, b, &mut cur, &mut used, &mut out);
    } else {
        for m in injections(b, a) {
            let mut rev = vec![None; a];
            for (j, i) in m.iter().enumerate() {
                rev[i.unwrap()] = Some(j);
            }
            out.push(rev);
        }
    }
    out
}

fn dfs(
    plan: &[EdgePlan],
    tgts: &[Target],
    cap: &[Vec<usize>],
    surv: &mut [Vec<u64>],
    chosen: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<bool, Exhausted> {
    budget.tick()?;
    let k = chosen.len();
    let mut all_dead = true;
    for ti in 0..tgts.len() {
        let alive: usize = surv[ti].iter().map(|w| w.count_ones() as usize).sum();
        if alive > cap[ti][k] {
            return Ok(false);
        }
        all_dead &= alive == 0;
    }
    if all_dead {
        // remaining edges are irrelevant; take the first option each
        while chosen.len() < plan.len() {
            chosen.push(0);
        }
        return Ok(true);
    }
    if k == plan.len() {
        return Ok(false);
    }
    let e = &plan[k];
    for (o, m) in e.options.iter().enumerate() {
        let mut saved: Vec<(usize, Vec<u64>)> = Vec::new();
        for (ti, t) in tgts.iter().enumerate() {
            let (Some(pu), Some(pv)) = (
                t.members.iter().position(|&x| x == e.u),
                t.members.iter().position(|&x| x == e.v),
            ) else {
                continue;
            };
            saved.push((ti, surv[ti].clone()));
            let (du, dv) = (&t.digits[pu], &t.digits[pv]);
            for (wi, word) in surv[ti].iter_mut().enumerate() {
                let mut bits = *word;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let idx = wi * 64 + b;
                    if m[du[idx] as usize] == Some(dv[idx] as usize) {
                        *word &= !(1u64 << b);
                    }
                }
            }
        }
        chosen.push(o);
        if dfs(plan, tgts, cap, surv, chosen, budget)? {
            return Ok(true);
        }
        chosen.pop();
        for (ti, bits) in saved {
            surv[ti] = bits;
        }
    }
    Ok(false)
}
