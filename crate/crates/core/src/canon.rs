//! Canonical labelling of vertex-coloured graphs with at most 64 vertices.
//!
//! Colour refinement followed by individualisation/backtracking. Within a
//! cell, twins (same colour, same neighbourhood apart from each other) are
//! interchangeable, so only one representative per twin class is tried.
//! That keeps complete and edgeless graphs linear; it is not nauty, but the
//! memoised searches only ever see small states.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Canonical key plus the labelling that produced it: `order[i]` is the
/// vertex placed at canonical position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonForm {
    pub key: Vec<u64>,
    pub order: Vec<usize>,
}

/// Canonical form of the coloured graph given by neighbour bitmasks.
/// Two inputs get equal keys iff some bijection maps one onto the other
/// preserving edges and colours.
pub fn canonical_form(adj: &[u64], colours: &[i64]) -> CanonForm {
    let n = adj.len();
    assert!(n <= 64 && colours.len() == n);
    if n == 0 {
        return CanonForm {
            key: vec![0],
            order: Vec::new(),
        };
    }
    let init = rank(colours);
    let start = refine(adj, init);
    let mut best: Option<CanonForm> = None;
    search(adj, colours, start, &mut best);
    best.expect("search visits at least one leaf")
}

pub fn canonical_key(adj: &[u64], colours: &[i64]) -> Vec<u64> {
    canonical_form(adj, colours).key
}

/// Convenience wrapper over a [`Graph`]; `None` above 64 vertices.
pub fn canonical_key_graph(g: &Graph, colours: &[i64]) -> Option<Vec<u64>> {
    g.adjacency_masks().map(|adj| canonical_key(&adj, colours))
}

fn rank<T: Ord + Clone>(xs: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = xs.to_vec();
    sorted.sort();
    sorted.dedup();
    xs.iter()
        .map(|x| sorted.binary_search(x).unwrap() as u32)
        .collect()
}

fn class_count(c: &[u32]) -> usize {
    c.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Equitable refinement. Colour ranks are label-independent because new
/// ranks come from sorting the signatures themselves.
fn refine(adj: &[u64], mut col: Vec<u32>) -> Vec<u32> {
    let n = adj.len();
    loop {
        let before = class_count(&col);
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u32> = bits(adj[v]).map(|w| col[w]).collect();
                ns.sort_unstable();
                (col[v], ns)
            })
            .collect();
        col = rank(&sigs);
        if class_count(&col) == before {
            return col;
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

fn search(adj: &[u64], colours: &[i64], col: Vec<u32>, best: &mut Option<CanonForm>) {
    let n = adj.len();
    let k = class_count(&col);
    if k == n {
        let mut order = vec![0usize; n];
        for v in 0..n {
            order[col[v] as usize] = v;
        }
        let key = encode(adj, colours, &order);
        if best.as_ref().is_none_or(|b| key < b.key) {
            *best = Some(CanonForm { key, order });
        }
        return;
    }
    // first non-singleton cell
    let mut size = vec![0usize; k];
    for &c in &col {
        size[c as usize] += 1;
    }
    let target = (0..k).find(|&c| size[c] > 1).unwrap() as u32;
    let cell: Vec<usize> = (0..n).filter(|&v| col[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| twins(adj, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next: Vec<u32> = col.iter().map(|&c| 2 * c + 1).collect();
        next[v] = 2 * col[v];
        let next = refine(adj, rank(&next));
        search(adj, colours, next, best);
    }
}

fn twins(adj: &[u64], u: usize, v: usize) -> bool {
    let mask = !((1u64 << u) | (1u64 << v));
    adj[u] & mask == adj[v] & mask
}

fn encode(adj: &[u64], colours: &[i64], order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut key = Vec::with_capacity(1 + 2 * n);
    key.push(n as u64);
    key.extend(order.iter().map(|&v| colours[v] as u64));
    for &v in order {
        let row = bits(adj[v]).fold(0u64, |m, w| m | (1u64 << (63 - pos[w])));
        key.push(row);
    }
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use proptest::prelude::*;

    fn permute(adj: &[u64], perm: &[usize]) -> Vec<u64> {
        let n = adj.len();
        let mut out = vec![0u64; n];
        for u in 0..n {
            for w in bits(adj[u]) {
                out[perm[u]] |= 1 << perm[w];
            }
        }
        out
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn complete_graph_is_cheap_and_stable() {
        let g = families::complete(12);
        let adj = g.adjacency_masks().unwrap();
        let a = canonical_key(&adj, &[1; 12]);
        let b = canonical_key(&permute(&adj, &[3, 1, 4, 0, 5, 9, 2, 6, 11, 7, 8, 10]), &[1; 12]);
        assert_eq!(a, b);
    }

    #[test]
    fn colours_matter() {
        let adj = families::path(3).adjacency_masks().unwrap();
        assert_ne!(canonical_key(&adj, &[1, 2, 1]), canonical_key(&adj, &[2, 1, 1]));
        assert_eq!(canonical_key(&adj, &[2, 1, 1]), canonical_key(&adj, &[1, 1, 2]));
    }

    #[test]
    fn exhaustive_iso_classes_n5() {
        // key equality coincides with isomorphism, tested by brute force
        let n = 5;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let perms = all_perms(n);
        let graphs: Vec<Vec<u64>> = (0u32..(1 << pairs.len()))
            .step_by(37)
            .map(|mask| {
                let mut adj = vec![0u64; n];
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        adj[i] |= 1 << j;
                        adj[j] |= 1 << i;
                    }
                }
                adj
            })
            .collect();
        let cols = [1i64, 2, 1, 1, 2];
        for a in &graphs {
            for b in &graphs {
                let iso = perms.iter().any(|p| {
                    permute(a, p) == *b && (0..n).all(|v| cols[v] == cols[p[v]])
                });
                assert_eq!(canonical_key(a, &cols) == canonical_key(b, &cols), iso);
            }
        }
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling(
            n in 1usize..9,
            edges in proptest::collection::vec((0usize..9, 0usize..9), 0..20),
            colours in proptest::collection::vec(0i64..3, 9),
            seed in any::<u64>(),
        ) {
            let mut adj = vec![0u64; n];
            for (a, b) in edges {
                let (a, b) = (a % n, b % n);
                if a != b {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let cols = &colours[..n];
            let mut pcols = vec![0i64; n];
            for v in 0..n {
                pcols[perm[v]] = cols[v];
            }
            prop_assert_eq!(canonical_key(&adj, cols), canonical_key(&permute(&adj, &perm), &pcols));
        }
    }
}
