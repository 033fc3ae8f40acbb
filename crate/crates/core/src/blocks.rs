//! Blocks (maximal 2-connected subgraphs and bridges), cut vertices,
//! Gallai-/GDP-tree recognition and small connectivity checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafBlock {
    /// Index into [`BlockTree::blocks`].
    pub block: usize,
    /// The unique cut vertex of the block, if any.
    pub root: Option<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTree {
    /// Sorted vertex sets, sorted lexicographically. Isolated vertices form
    /// singleton blocks.
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    pub leaf_blocks: Vec<LeafBlock>,
}

impl BlockTree {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Non-root vertices of every leaf block.
    pub fn leaf_non_roots(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .leaf_blocks
            .iter()
            .flat_map(|lb| {
                self.blocks[lb.block]
                    .iter()
                    .copied()
                    .filter(move |&v| Some(v) != lb.root)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Hopcroft–Tarjan block decomposition restricted to vertices with
/// `alive[v]`.
fn blocks_within(g: &Graph, alive: &[bool]) -> (Vec<Vec<Vertex>>, Vec<bool>) {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut time = 0usize;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();

    for root in 0..n {
        if !alive[root] || disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0usize;
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        let mut has_edge = false;
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            let ns = g.neighbours(v);
            if *pos < ns.len() {
                let w = ns[*pos];
                *pos += 1;
                if !alive[w] || w == parent {
                    continue;
                }
                has_edge = true;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
        if !has_edge {
            blocks.push(vec![root]);
        }
    }
    (blocks, is_cut)
}

pub fn block_decomposition(g: &Graph) -> BlockTree {
    block_decomposition_within(g, &vec![true; g.n()])
}

pub fn block_decomposition_within(g: &Graph, alive: &[bool]) -> BlockTree {
    let (mut blocks, is_cut) = blocks_within(g, alive);
    blocks.sort();
    let cut_vertices: Vec<Vertex> = (0..g.n()).filter(|&v| is_cut[v]).collect();
    let leaf_blocks = blocks
        .iter()
        .enumerate()
        .filter_map(|(i, b)| {
            let cuts: Vec<Vertex> = b.iter().copied().filter(|&v| is_cut[v]).collect();
            match cuts.len() {
                0 => Some(LeafBlock { block: i, root: None }),
                1 => Some(LeafBlock { block: i, root: Some(cuts[0]) }),
                _ => None,
            }
        })
        .collect();
    BlockTree {
        blocks,
        cut_vertices,
        leaf_blocks,
    }
}

/// Cut vertices of the subgraph induced by `alive`.
pub fn articulation_points_within(g: &Graph, alive: &[bool]) -> Vec<Vertex> {
    let (_, is_cut) = blocks_within(g, alive);
    (0..g.n()).filter(|&v| is_cut[v]).collect()
}

fn block_edges(g: &Graph, block: &[Vertex]) -> usize {
    let mut e = 0;
    for (i, &u) in block.iter().enumerate() {
        for &v in &block[i + 1..] {
            if g.has_edge(u, v) {
                e += 1;
            }
        }
    }
    e
}

/// Shape of a block: complete (including K_1, K_2), a cycle of the given
/// length, or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockShape {
    Complete,
    Cycle(usize),
    Other,
}

pub fn block_shape(g: &Graph, block: &[Vertex]) -> BlockShape {
    let k = block.len();
    let e = block_edges(g, block);
    if e == k * k.saturating_sub(1) / 2 {
        BlockShape::Complete
    } else if k >= 3 && e == k {
        // a 2-connected graph with as many edges as vertices is a cycle
        BlockShape::Cycle(k)
    } else {
        BlockShape::Other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("tree recognition needs a connected graph")]
pub struct Disconnected;

/// Every block complete or an odd cycle.
pub fn is_gallai_tree(g: &Graph) -> Result<bool, Disconnected> {
    if !g.is_connected() {
        return Err(Disconnected);
    }
    let bt = block_decomposition(g);
    Ok(bt.blocks.iter().all(|b| match block_shape(g, b) {
        BlockShape::Complete => true,
        BlockShape::Cycle(k) => k % 2 == 1,
        BlockShape::Other => false,
    }))
}

/// Every block complete or a cycle.
pub fn is_gdp_tree(g: &Graph) -> Result<bool, Disconnected> {
    if !g.is_connected() {
        return Err(Disconnected);
    }
    let bt = block_decomposition(g);
    Ok(bt
        .blocks
        .iter()
        .all(|b| block_shape(g, b) != BlockShape::Other))
}

/// Same as [`is_gdp_tree`] for the subgraph induced by a connected vertex
/// set `vs`.
pub fn is_gdp_tree_on(g: &Graph, vs: &[Vertex]) -> bool {
    let (h, _) = g.induced(vs);
    is_gdp_tree(&h).unwrap_or(false)
}

pub fn is_biconnected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && articulation_points_within(g, &vec![true; g.n()]).is_empty()
}

/// 3-connectivity: at least four vertices, connected, and no separating set
/// of size at most two. Checked by deleting each vertex in turn and looking
/// for cut vertices in what remains.
pub fn is_3_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || !g.is_connected() {
        return false;
    }
    let mut alive = vec![true; n];
    if !articulation_points_within(g, &alive).is_empty() {
        return false;
    }
    for v in 0..n {
        alive[v] = false;
        let ok = articulation_points_within(g, &alive).is_empty()
            && g.components_within(&alive).len() == 1;
        alive[v] = true;
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn cycle_is_one_block() {
        let bt = block_decomposition(&families::cycle(5));
        assert_eq!(bt.blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(bt.cut_vertices.is_empty());
        assert_eq!(bt.leaf_blocks, vec![LeafBlock { block: 0, root: None }]);
    }

    #[test]
    fn bowtie() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let bt = block_decomposition(&g);
        assert_eq!(bt.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(bt.cut_vertices, vec![2]);
        assert_eq!(bt.leaf_blocks.len(), 2);
        assert!(bt.leaf_blocks.iter().all(|lb| lb.root == Some(2)));
    }

    #[test]
    fn path_blocks() {
        let bt = block_decomposition(&families::path(3));
        assert_eq!(bt.blocks, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(bt.cut_vertices, vec![1]);
    }

    #[test]
    fn isolated_vertices_are_blocks() {
        let bt = block_decomposition(&Graph::empty(2));
        assert_eq!(bt.blocks, vec![vec![0], vec![1]]);
    }

    #[test]
    fn tree_recognition() {
        let c5 = families::cycle(5);
        assert_eq!(is_gallai_tree(&c5), Ok(true));
        assert_eq!(is_gdp_tree(&c5), Ok(true));
        let c4 = families::cycle(4);
        assert_eq!(is_gallai_tree(&c4), Ok(false));
        assert_eq!(is_gdp_tree(&c4), Ok(true));
        let mut k4p = families::complete(4);
        let p = k4p.add_vertex("4").unwrap();
        k4p.add_edge(0, p).unwrap();
        assert_eq!(is_gallai_tree(&k4p), Ok(true));
        assert_eq!(is_gdp_tree(&k4p), Ok(true));
        assert_eq!(is_gdp_tree(&Graph::empty(2)), Err(Disconnected));
        // diamond: 2-connected, neither complete nor a cycle
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(is_gdp_tree(&diamond), Ok(false));
    }

    #[test]
    fn three_connectivity() {
        assert!(is_3_connected(&families::complete(4)));
        assert!(is_3_connected(&families::wheel(6)));
        assert!(!is_3_connected(&families::cycle(6)));
        assert!(!is_3_connected(&families::complete_bipartite(2, 4)));
        assert!(is_3_connected(&families::complete_bipartite(3, 3)));
    }
}
