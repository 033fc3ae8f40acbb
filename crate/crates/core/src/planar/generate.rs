//! Deterministic 3-connected planar graphs driven by a choice sequence, for
//! corpora and property tests.

use alloc::vec;
use alloc::vec::Vec;

use crate::blocks::is_3_connected;
use crate::graph::Graph;

/// Stacked triangulation: start from `K4` and put one new vertex into a face
/// per choice. Choice `c` picks face `c mod (#faces)`; when `hub_bias` is
/// set, even choices pick among faces at vertex 0 or 1 so that a couple of
/// vertices get large degree.
pub fn stacked_triangulation(choices: &[usize], hub_bias: bool) -> Graph {
    let (n, edges, _) = stacked(choices, hub_bias);
    Graph::from_edges(n, &edges).expect("stacking adds fresh edges only")
}

type Stacked = (usize, Vec<(usize, usize)>, Vec<[usize; 3]>);

fn stacked(choices: &[usize], hub_bias: bool) -> Stacked {
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut n = 4;
    for &c in choices {
        let pool: Vec<usize> = if hub_bias && c % 2 == 0 {
            let hub = (c / 2) % 2;
            (0..faces.len()).filter(|&i| faces[i].contains(&hub)).collect()
        } else {
            (0..faces.len()).collect()
        };
        let i = pool[(c / 4) % pool.len()];
        let [a, b, d] = faces[i];
        let v = n;
        n += 1;
        edges.extend([(a, v), (b, v), (d, v)]);
        faces[i] = [a, b, v];
        faces.push([a, d, v]);
        faces.push([b, d, v]);
    }
    (n, edges, faces)
}

/// A stacked triangulation with one gadget in every face: a single vertex
/// joined to the three corners (gadget choice even) or a triangle with each
/// vertex joined to two corners (odd). Missing gadget choices count as 0.
pub fn gadget_triangulation(stack: &[usize], gadgets: &[usize]) -> Graph {
    let (mut n, mut edges, faces) = stacked(stack, true);
    for (i, [a, b, c]) in faces.into_iter().enumerate() {
        if gadgets.get(i).copied().unwrap_or(0) % 2 == 0 {
            edges.extend([(a, n), (b, n), (c, n)]);
            n += 1;
        } else {
            let (x, y, z) = (n, n + 1, n + 2);
            n += 3;
            edges.extend([(x, y), (y, z), (z, x), (x, a), (x, b), (y, b), (y, c), (z, c), (z, a)]);
        }
    }
    Graph::from_edges(n, &edges).expect("gadgets add fresh edges only")
}

/// Removes edges named by `choices` (index into the current edge list)
/// whenever the graph stays 3-connected.
pub fn thin_out(g: &Graph, choices: &[usize]) -> Graph {
    let mut h = g.clone();
    for &c in choices {
        let edges: Vec<(usize, usize)> = h.edges().collect();
        if edges.is_empty() {
            break;
        }
        let (a, b) = edges[c % edges.len()];
        h.remove_edge(a, b);
        if !is_3_connected(&h) {
            h.add_edge(a, b).expect("edge was just removed");
        }
    }
    h
}
