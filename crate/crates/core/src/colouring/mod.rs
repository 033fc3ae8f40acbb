//! Exact colouring oracles for small graphs: list colouring, cover (DP)
//! colouring, choosability, DP-colourability, paintability and
//! DP-paintability.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

mod choosability;
mod covers;
mod dp;
mod painting;
mod parameter;
mod solve;

pub use choosability::is_f_choosable;
pub use dp::is_dp_f_colourable;
pub use painting::{decide_dp_paintable, decide_paintable, DpPainter, Painter};
pub use parameter::{parameter, Parameter};
pub use solve::{is_list_colouring, solve_cover_colouring, solve_list_colouring, Csp};

/// Colour lists per vertex; colours are opaque ids. Lists are kept
/// sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<u32>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    pub fn list(&self, v: Vertex) -> &[u32] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// `|L(v)| >= f(v)` everywhere.
    pub fn is_f_assignment(&self, f: &[i64]) -> bool {
        self.lists.len() == f.len() && self.lists.iter().zip(f).all(|(l, &k)| l.len() as i64 >= k)
    }
}

/// A cover `(L, M)`: vertex `v` owns nodes `0..sizes[v]`; `links[(u, v)]`
/// (with `u < v`) lists linked node pairs `(i, j)`, `i` in `L(u)` and `j`
/// in `L(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cover {
    pub sizes: Vec<usize>,
    pub links: BTreeMap<(Vertex, Vertex), Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("cover has {sizes} node sets for {n} vertices")]
    Shape { n: usize, sizes: usize },
    #[error("link set on non-edge {0}-{1}")]
    NotAnEdge(Vertex, Vertex),
    #[error("link set key ({0}, {1}) must have the smaller vertex first")]
    Unordered(Vertex, Vertex),
    #[error("link ({i}, {j}) on edge {u}-{v} refers to a missing node")]
    BadNode { u: Vertex, v: Vertex, i: usize, j: usize },
    #[error("vertex {0} has more than 64 nodes")]
    TooManyNodes(Vertex),
}

impl Cover {
    /// The cover induced by a list assignment: node `i` of `v` is the
    /// `i`-th colour of `L(v)`, and equal colours are linked.
    pub fn from_lists(g: &Graph, lists: &ListAssignment) -> Cover {
        let mut links = BTreeMap::new();
        for (u, v) in g.edges() {
            let mut ls = Vec::new();
            for (i, a) in lists.list(u).iter().enumerate() {
                if let Ok(j) = lists.list(v).binary_search(a) {
                    ls.push((i, j));
                }
            }
            links.insert((u, v), ls);
        }
        Cover {
            sizes: lists.lists().iter().map(Vec::len).collect(),
            links,
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), CoverError> {
        if self.sizes.len() != g.n() {
            return Err(CoverError::Shape { n: g.n(), sizes: self.sizes.len() });
        }
        if let Some(v) = (0..g.n()).find(|&v| self.sizes[v] > 64) {
            return Err(CoverError::TooManyNodes(v));
        }
        for (&(u, v), ls) in &self.links {
            if u >= v {
                return Err(CoverError::Unordered(u, v));
            }
            if v >= g.n() || !g.has_edge(u, v) {
                return Err(CoverError::NotAnEdge(u, v));
            }
            for &(i, j) in ls {
                if i >= self.sizes[u] || j >= self.sizes[v] {
                    return Err(CoverError::BadNode { u, v, i, j });
                }
            }
        }
        Ok(())
    }

    /// Every link set is a matching.
    pub fn is_simple(&self) -> bool {
        self.links.values().all(|ls| {
            let mut a: Vec<usize> = ls.iter().map(|p| p.0).collect();
            let mut b: Vec<usize> = ls.iter().map(|p| p.1).collect();
            a.sort_unstable();
            b.sort_unstable();
            let n = a.len();
            a.dedup();
            b.dedup();
            a.len() == n && b.len() == n
        })
    }

    pub fn linked(&self, u: Vertex, i: usize, v: Vertex, j: usize) -> bool {
        let (key, pair) = if u < v { ((u, v), (i, j)) } else { ((v, u), (j, i)) };
        self.links.get(&key).is_some_and(|ls| ls.contains(&pair))
    }
}

/// Answer of a universally quantified oracle: the property holds, or fails
/// with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<W> {
    Holds,
    Fails(W),
}

impl<W> Outcome<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }
}
