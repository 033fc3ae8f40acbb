//! Isomorphism classes of small graphs, generated by vertex augmentation
//! with canonical-key rejection.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::canon::canonical_key;
use crate::graph::Graph;

/// One representative of every isomorphism class on exactly `n` vertices,
/// ordered by canonical key. Practical up to `n = 8`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    classes(n).into_values().map(|adj| from_masks(&adj)).collect()
}

/// Connected representatives on exactly `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Connected representatives on `1..=max_n` vertices, by order then key.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// Every graph with `1..=max_m` edges and no isolated vertex, up to
/// isomorphism, grouped by edge count. Built by adding one edge at a time
/// (between old vertices, to one new vertex, or on two new vertices), so
/// it reaches sparse graphs with more vertices than [`all_graphs`] can.
pub fn graphs_by_edges(max_m: usize) -> Vec<Vec<Graph>> {
    let mut out: Vec<Vec<Graph>> = Vec::new();
    let mut level: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
    level.insert(canonical_key(&[2, 1], &[0, 0]), alloc::vec![2, 1]);
    for m in 1..=max_m {
        if m > 1 {
            let mut next = BTreeMap::new();
            for adj in level.values() {
                let n = adj.len();
                for u in 0..=n {
                    for v in u + 1..=n + 1 {
                        if v == n + 1 && u < n {
                            continue;
                        }
                        let size = n + (v >= n) as usize + (u >= n) as usize;
                        if size > 64 {
                            continue;
                        }
                        let mut a = adj.clone();
                        a.resize(size, 0);
                        if a[u] >> v & 1 == 1 {
                            continue;
                        }
                        a[u] |= 1 << v;
                        a[v] |= 1 << u;
                        next.entry(canonical_key(&a, &vec_zero(size))).or_insert(a);
                    }
                }
            }
            level = next;
        }
        out.push(level.values().map(|a| from_masks(a)).collect());
    }
    out
}

fn classes(n: usize) -> BTreeMap<Vec<u64>, Vec<u64>> {
    let mut level: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
    level.insert(canonical_key(&[], &[]), Vec::new());
    for k in 0..n {
        let mut next = BTreeMap::new();
        for adj in level.values() {
            for nbrs in 0u64..(1u64 << k) {
                let mut a = adj.clone();
                for (w, row) in a.iter_mut().enumerate() {
                    if nbrs >> w & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                a.push(nbrs);
                let key = canonical_key(&a, &vec_zero(k + 1));
                next.entry(key).or_insert(a);
            }
        }
        level = next;
    }
    level
}

fn vec_zero(n: usize) -> Vec<i64> {
    alloc::vec![0; n]
}

fn from_masks(adj: &[u64]) -> Graph {
    let mut g = Graph::empty(adj.len());
    for (u, &row) in adj.iter().enumerate() {
        for v in u + 1..adj.len() {
            if row >> v & 1 == 1 {
                g.add_edge(u, v).expect("masks describe a simple graph");
            }
        }
    }
    g
}
