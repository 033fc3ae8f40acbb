//! Minimum-degree peeling: degeneracy orderings, strict degeneracy and the
//! truncated-degree capacity map.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{CapMap, Graph, Vertex};

/// Ordering in which every vertex has at most `cap` neighbours earlier in
/// the ordering, or `None` when some subgraph has minimum degree above
/// `cap`.
///
/// Built by repeatedly removing a minimum-degree vertex (ties broken by
/// vertex index) and reversing the removal sequence. With
/// `consecutive_components` the vertices of each connected component are
/// kept together, components ordered by smallest vertex.
pub fn degeneracy_ordering(
    g: &Graph,
    cap: usize,
    consecutive_components: bool,
) -> Option<Vec<Vertex>> {
    if consecutive_components {
        let mut out = Vec::with_capacity(g.n());
        for comp in g.components() {
            out.extend(peel_min_degree(g, &comp, cap)?);
        }
        Some(out)
    } else {
        let all: Vec<Vertex> = g.vertices().collect();
        peel_min_degree(g, &all, cap)
    }
}

/// Ordering restricted to the vertex set `vs` (in the induced subgraph).
pub fn degeneracy_ordering_on(
    g: &Graph,
    vs: &[Vertex],
    cap: usize,
    consecutive_components: bool,
) -> Option<Vec<Vertex>> {
    let (h, map) = g.induced(vs);
    degeneracy_ordering(&h, cap, consecutive_components)
        .map(|o| o.into_iter().map(|v| map[v]).collect())
}

fn peel_min_degree(g: &Graph, vs: &[Vertex], cap: usize) -> Option<Vec<Vertex>> {
    let mut inside = vec![false; g.n()];
    for &v in vs {
        inside[v] = true;
    }
    let mut deg = vec![0usize; g.n()];
    let mut queue = BTreeSet::new();
    for &v in vs {
        deg[v] = g.neighbours(v).iter().filter(|&&w| inside[w]).count();
        queue.insert((deg[v], v));
    }
    let mut removal = Vec::with_capacity(vs.len());
    while let Some((d, v)) = queue.pop_first() {
        if d > cap {
            return None;
        }
        inside[v] = false;
        removal.push(v);
        for &w in g.neighbours(v) {
            if inside[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    removal.reverse();
    Some(removal)
}

/// Degeneracy of `g`: the least `d` such that every subgraph has a vertex of
/// degree at most `d`.
pub fn degeneracy(g: &Graph) -> usize {
    (0..=g.max_degree())
        .find(|&d| degeneracy_ordering(g, d, false).is_some())
        .unwrap_or(0)
}

/// Removal order witnessing strict `f`-degeneracy: each removed vertex has
/// fewer remaining neighbours than its capacity. Ties are broken by vertex
/// index. `None` if the peeling gets stuck.
pub fn strict_degenerate_order(g: &Graph, f: &CapMap) -> Option<Vec<Vertex>> {
    let alive = vec![true; g.n()];
    strict_peel_within(g, f.values(), &alive)
}

/// Strict peeling of the subgraph induced by `alive` with capacities `f`.
pub fn strict_peel_within(g: &Graph, f: &[i64], alive: &[bool]) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut alive = alive.to_vec();
    let mut deg: Vec<i64> = (0..n)
        .map(|v| {
            g.neighbours(v).iter().filter(|&&w| alive[w]).count() as i64
        })
        .collect();
    let mut ready: BTreeSet<Vertex> = (0..n).filter(|&v| alive[v] && deg[v] < f[v]).collect();
    let mut removal = Vec::new();
    let total = alive.iter().filter(|&&a| a).count();
    while let Some(v) = ready.pop_first() {
        alive[v] = false;
        removal.push(v);
        for &w in g.neighbours(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < f[w] {
                    ready.insert(w);
                }
            }
        }
    }
    (removal.len() == total).then_some(removal)
}

/// `f(v) = min{k, d_G(v)}`.
pub fn truncated_cap(g: &Graph, k: i64) -> CapMap {
    CapMap::truncated(g, k)
}

/// Acyclic orientation from a strict-peeling removal order: every edge
/// points from the later-removed endpoint to the earlier-removed one, so
/// in-degrees count neighbours removed later.
pub fn orientation_from_removal(g: &Graph, removal: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in removal.iter().enumerate() {
        pos[v] = i;
    }
    g.edges()
        .map(|(u, v)| if pos[u] > pos[v] { (u, v) } else { (v, u) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn earlier_neighbours_ok(g: &Graph, order: &[Vertex], cap: usize) -> bool {
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        order.iter().all(|&v| {
            g.neighbours(v).iter().filter(|&&w| pos[w] < pos[v]).count() <= cap
        })
    }

    #[test]
    fn tree_is_one_degenerate() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let o = degeneracy_ordering(&g, 1, false).unwrap();
        assert_eq!(o.len(), 6);
        assert!(earlier_neighbours_ok(&g, &o, 1));
    }

    #[test]
    fn k4_fails_at_two() {
        assert!(degeneracy_ordering(&families::complete(4), 2, false).is_none());
        assert!(degeneracy_ordering(&families::complete(4), 3, false).is_some());
    }

    #[test]
    fn components_stay_consecutive() {
        let mut g = families::cycle(4);
        for l in ["4", "5", "6"] {
            g.add_vertex(l).unwrap();
        }
        g.add_edge(4, 5).unwrap();
        g.add_edge(5, 6).unwrap();
        g.add_edge(0, 5).ok();
        let g2 = {
            let mut h = families::cycle(3);
            for l in ["3", "4", "5"] {
                h.add_vertex(l).unwrap();
            }
            h.add_edge(3, 4).unwrap();
            h.add_edge(4, 5).unwrap();
            h
        };
        for g in [g, g2] {
            let o = degeneracy_ordering(&g, 2, true).unwrap();
            let comps = g.components();
            let mut idx = 0;
            for c in &comps {
                let mut chunk = o[idx..idx + c.len()].to_vec();
                chunk.sort_unstable();
                assert_eq!(&chunk, c);
                idx += c.len();
            }
            assert!(earlier_neighbours_ok(&g, &o, 2));
        }
    }

    #[test]
    fn truncated_examples() {
        let s = families::star(5);
        assert_eq!(truncated_cap(&s, 3).values(), &[3, 1, 1, 1, 1, 1]);
        assert!(truncated_cap(&families::cycle(6), 16).values().iter().all(|&x| x == 2));
        let w = families::wheel(20);
        let f = truncated_cap(&w, 16);
        assert_eq!(f[0], 16);
        assert!((1..=20).all(|v| f[v] == 3));
    }

    #[test]
    fn strict_examples() {
        let k4 = families::complete(4);
        assert!(strict_degenerate_order(&k4, &CapMap::constant(4, 4)).is_some());
        let c4 = families::cycle(4);
        assert!(strict_degenerate_order(&c4, &CapMap::constant(4, 2)).is_none());
        let p3 = families::path(3);
        assert!(strict_degenerate_order(&p3, &CapMap::new(vec![1, 2, 1])).is_none());
    }

    #[test]
    fn orientation_in_degrees_below_caps() {
        let g = families::wheel(7);
        let f = CapMap::constant(g.n(), 4);
        let order = strict_degenerate_order(&g, &f).unwrap();
        let arcs = orientation_from_removal(&g, &order);
        let mut indeg = vec![0i64; g.n()];
        for (_, h) in arcs {
            indeg[h] += 1;
        }
        assert!((0..g.n()).all(|v| indeg[v] < f[v]));
    }

    #[test]
    fn degeneracy_brute_force_agrees() {
        // every induced subgraph has a vertex of degree <= cap
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                if mask % 7 != 0 && n == 6 {
                    continue;
                }
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                for cap in 0..n {
                    let brute = (1u32..(1 << n)).all(|sub| {
                        (0..n).filter(|&v| sub >> v & 1 == 1).any(|v| {
                            g.neighbours(v).iter().filter(|&&w| sub >> w & 1 == 1).count() <= cap
                        })
                    });
                    assert_eq!(degeneracy_ordering(&g, cap, false).is_some(), brute);
                }
            }
        }
    }
}
