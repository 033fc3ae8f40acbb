//! One-candidate-per-vertex constraint solver shared by list and cover
//! colouring: most-constrained-first backtracking with forward checking.

use alloc::vec;
use alloc::vec::Vec;

use super::{Cover, CoverError, ListAssignment};
use crate::graph::{Graph, Vertex};

/// Each vertex picks one of `sizes[v] <= 64` candidates; `conflicts[u]`
/// holds `(v, table)` where `table[i]` is the mask of candidates of `v`
/// that clash with candidate `i` of `u`.
#[derive(Clone, Debug)]
pub struct Csp {
    sizes: Vec<usize>,
    conflicts: Vec<Vec<(Vertex, Vec<u64>)>>,
}

impl Csp {
    pub fn new(sizes: Vec<usize>) -> Self {
        let n = sizes.len();
        assert!(sizes.iter().all(|&s| s <= 64));
        Csp {
            sizes,
            conflicts: vec![Vec::new(); n],
        }
    }

    /// Register the clash table for the pair `(u, v)` in both directions.
    pub fn add_pair(&mut self, u: Vertex, v: Vertex, clash: impl Fn(usize, usize) -> bool) {
        let fwd: Vec<u64> = (0..self.sizes[u])
            .map(|i| (0..self.sizes[v]).filter(|&j| clash(i, j)).fold(0, |m, j| m | 1 << j))
            .collect();
        let back: Vec<u64> = (0..self.sizes[v])
            .map(|j| (0..self.sizes[u]).filter(|&i| clash(i, j)).fold(0, |m, i| m | 1 << i))
            .collect();
        self.conflicts[u].push((v, fwd));
        self.conflicts[v].push((u, back));
    }

    fn full(k: usize) -> u64 {
        if k == 64 {
            u64::MAX
        } else {
            (1u64 << k) - 1
        }
    }

    /// Assignment restricted to the vertices of `keep`, or `None`.
    pub fn solve_within(&self, keep: &[bool]) -> Option<Vec<usize>> {
        let n = self.sizes.len();
        let mut avail: Vec<u64> = (0..n).map(|v| Self::full(self.sizes[v])).collect();
        let mut chosen = vec![usize::MAX; n];
        let todo = keep.iter().filter(|&&k| k).count();
        if (0..n).any(|v| keep[v] && avail[v] == 0) {
            return None;
        }
        if self.search(keep, &mut avail, &mut chosen, todo) {
            Some(chosen)
        } else {
            None
        }
    }

    pub fn solve(&self) -> Option<Vec<usize>> {
        self.solve_within(&vec![true; self.sizes.len()])
    }

    fn search(&self, keep: &[bool], avail: &mut [u64], chosen: &mut [usize], todo: usize) -> bool {
        if todo == 0 {
            return true;
        }
        let u = (0..self.sizes.len())
            .filter(|&v| keep[v] && chosen[v] == usize::MAX)
            .min_by_key(|&v| (avail[v].count_ones(), core::cmp::Reverse(self.conflicts[v].len()), v))
            .expect("todo > 0");
        let mut options = avail[u];
        while options != 0 {
            let i = options.trailing_zeros() as usize;
            options &= options - 1;
            chosen[u] = i;
            let mut saved: Vec<(Vertex, u64)> = Vec::new();
            let mut dead = false;
            for (v, table) in &self.conflicts[u] {
                let v = *v;
                if keep[v] && chosen[v] == usize::MAX && avail[v] & table[i] != 0 {
                    saved.push((v, avail[v]));
                    avail[v] &= !table[i];
                    if avail[v] == 0 {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead && self.search(keep, avail, chosen, todo - 1) {
                return true;
            }
            for (v, a) in saved.into_iter().rev() {
                avail[v] = a;
            }
            chosen[u] = usize::MAX;
        }
        false
    }
}

/// A proper colouring with `phi(v)` taken from `L(v)`, or `None`.
pub fn solve_list_colouring(g: &Graph, lists: &ListAssignment) -> Option<Vec<u32>> {
    assert_eq!(lists.len(), g.n());
    let mut csp = Csp::new(lists.lists().iter().map(Vec::len).collect());
    for (u, v) in g.edges() {
        let (a, b) = (lists.list(u), lists.list(v));
        csp.add_pair(u, v, |i, j| a[i] == b[j]);
    }
    csp.solve().map(|idx| idx.iter().enumerate().map(|(v, &i)| lists.list(v)[i]).collect())
}

/// An `(L, M)`-colouring as node indices per vertex, or `None`.
pub fn solve_cover_colouring(g: &Graph, cover: &Cover) -> Result<Option<Vec<usize>>, CoverError> {
    cover.validate(g)?;
    let mut csp = Csp::new(cover.sizes.clone());
    for (&(u, v), ls) in &cover.links {
        csp.add_pair(u, v, |i, j| ls.contains(&(i, j)));
    }
    Ok(csp.solve())
}

/// Checks a claimed list colouring.
pub fn is_list_colouring(g: &Graph, lists: &ListAssignment, phi: &[u32]) -> bool {
    phi.len() == g.n()
        && (0..g.n()).all(|v| lists.list(v).contains(&phi[v]))
        && g.edges().all(|(u, v)| phi[u] != phi[v])
}
