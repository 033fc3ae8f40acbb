//! Certificates built directly instead of searched for.
//!
//! * strict peeling: delete vertices in reverse order of a strict peel;
//! * the degree route: a connected graph that is not a GDP-tree is weak*
//!   degree-degenerate. Strip everything outside one block that is neither
//!   complete nor a cycle, then create one vertex with spare capacity inside
//!   that block and peel toward it.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Op, OpState};
use crate::blocks::{block_decomposition_within, block_shape, BlockShape};
use crate::degeneracy::strict_peel_within;
use crate::graph::{CapMap, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("component containing vertex {0} is a GDP-tree with capacity equal to degree")]
    GdpTree(Vertex),
    #[error("vertex {v} has capacity {cap} below its degree {deg}")]
    Deficit { v: Vertex, cap: i64, deg: usize },
    #[error("no vertex with two non-adjacent neighbours whose removal keeps the block connected")]
    NoLovaszTriple,
}

/// Vertex deletions in reverse strict-peel order, restricted to `alive`.
pub fn strict_peel_certificate(g: &Graph, alive: &[bool], caps: &[i64]) -> Option<Vec<Op>> {
    strict_peel_within(g, caps, alive).map(|order| {
        order.into_iter().rev().map(|x| Op::VertexDelete { x }).collect()
    })
}

/// Certificate for `(G, d_G)`, `G` connected and not a GDP-tree.
pub fn degree_certificate(g: &Graph) -> Result<Vec<Op>, ConstructError> {
    residual_certificate(g, &vec![true; g.n()], CapMap::degree(g).values())
}

/// Certificate deleting every vertex of `alive` from the current pair
/// `(g, caps)`, where `caps(v) >= d(v)` inside `alive`. Components with a
/// vertex of spare capacity are peeled; the others go through the degree
/// route and must not be GDP-trees.
pub fn residual_certificate(
    g: &Graph,
    alive: &[bool],
    caps: &[i64],
) -> Result<Vec<Op>, ConstructError> {
    let deg = |v: Vertex| g.neighbours(v).iter().filter(|&&w| alive[w]).count();
    for v in 0..g.n() {
        if alive[v] && caps[v] < deg(v) as i64 {
            return Err(ConstructError::Deficit { v, cap: caps[v], deg: deg(v) });
        }
    }
    let mut ops = Vec::new();
    for comp in g.components_within(alive) {
        let mut mask = vec![false; g.n()];
        for &v in &comp {
            mask[v] = true;
        }
        if let Some(o) = strict_peel_certificate(g, &mask, caps) {
            ops.extend(o);
        } else {
            ops.extend(degree_route(g, &comp, &mask)?);
        }
    }
    Ok(ops)
}

/// `comp` connected, caps equal to degrees within `comp`.
fn degree_route(g: &Graph, comp: &[Vertex], mask: &[bool]) -> Result<Vec<Op>, ConstructError> {
    let bt = block_decomposition_within(g, mask);
    let block = bt
        .blocks
        .iter()
        .find(|b| block_shape(g, b) == BlockShape::Other)
        .ok_or(ConstructError::GdpTree(comp[0]))?
        .clone();

    let mut ops = Vec::new();
    // delete everything outside the block, farthest first
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue: VecDeque<Vertex> = VecDeque::new();
    for &v in &block {
        dist[v] = 0;
        queue.push_back(v);
    }
    let mut outside = Vec::new();
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbours(v) {
            if mask[w] && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                outside.push(w);
                queue.push_back(w);
            }
        }
    }
    outside.sort_by_key(|&v| (core::cmp::Reverse(dist[v]), v));
    ops.extend(outside.iter().map(|&x| Op::VertexDelete { x }));

    // inside the block, local indices
    let (h, map) = g.induced(&block);
    let mut st = OpState::new(&h, &CapMap::degree(&h));
    let mut local = Vec::new();
    let uneven = h
        .edges()
        .flat_map(|(a, b)| [(a, b), (b, a)])
        .filter(|&(x, y)| h.degree(x) > h.degree(y))
        .min();
    if let Some((x, y)) = uneven {
        local.push(Op::EdgeDelete { x, y });
        local.push(Op::VertexDelete { x });
    } else {
        let (x, y, z) = lovasz_triple(&h).ok_or(ConstructError::NoLovaszTriple)?;
        local.push(Op::VertexDelete { x: y });
        local.push(Op::EdgeDelete { x: z, y: x });
        local.push(Op::VertexDelete { x: z });
    }
    for op in &local {
        st.apply(op).expect("degree route moves are legal by construction");
    }
    let peel = strict_peel_certificate(st.graph(), st.present(), st.caps())
        .expect("the block minus the deleted vertices is connected with spare capacity");
    local.extend(peel);
    ops.extend(local.into_iter().map(|op| relabel(op, &map)));
    Ok(ops)
}

/// In a 2-connected regular graph that is neither complete nor a cycle:
/// `x` with non-adjacent neighbours `y`, `z` such that removing `y` and `z`
/// leaves the graph connected.
pub fn lovasz_triple(h: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    let n = h.n();
    for x in 0..n {
        let ns = h.neighbours(x);
        for (i, &y) in ns.iter().enumerate() {
            for &z in &ns[i + 1..] {
                if h.has_edge(y, z) {
                    continue;
                }
                let mut alive = vec![true; n];
                alive[y] = false;
                alive[z] = false;
                if h.components_within(&alive).len() == 1 {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn relabel(op: Op, map: &[Vertex]) -> Op {
    match op {
        Op::Reduce { x, s } => Op::Reduce { x: map[x], s },
        Op::EdgeDelete { x, y } => Op::EdgeDelete { x: map[x], y: map[y] },
        Op::VertexDelete { x } => Op::VertexDelete { x: map[x] },
        Op::DeleteSave { x, y } => Op::DeleteSave { x: map[x], y: map[y] },
    }
}
