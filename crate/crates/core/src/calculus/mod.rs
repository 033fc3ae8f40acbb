//! The operation calculus on pairs `(G, f)`: legality, application and
//! certificate replay.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{CapMap, Graph, Vertex};

pub mod constructive;
pub mod normalize;
pub mod search;
pub mod split;

pub use constructive::{degree_certificate, strict_peel_certificate, ConstructError};
pub use normalize::{is_normal, normalize_certificate};
pub use search::{
    decide_strict_degenerate, decide_strict_weak, decide_weak_star, decide_weak_star_with, strict_degeneracy,
    strict_weak_degeneracy, weak_star_degeneracy, SearchOptions, SearchStats, MAX_SEARCH_VERTICES,
};
pub use split::{certificate_split, certifies_on, check_split, expand_delete_save, Split, SplitError};

/// One move. Vertices are indices of the graph the certificate was issued
/// for; they stay valid as vertices disappear.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// `f(x) -= s`; legal if `f(x) > s` and `s >= 1`.
    Reduce { x: Vertex, s: i64 },
    /// Remove edge `xy`, `f(x) -= f(y)`; legal if `f(x) > f(y)`.
    EdgeDelete { x: Vertex, y: Vertex },
    /// Remove `x`, decrement every neighbour; legal if `f(x) > 0`.
    VertexDelete { x: Vertex },
    /// Remove `x`, decrement every neighbour except `y`; legal if `xy` is an
    /// edge and `f(x) > f(y)`.
    DeleteSave { x: Vertex, y: Vertex },
}

impl Op {
    /// The vertex whose capacity pays for the move (or that is deleted).
    pub fn x(&self) -> Vertex {
        match *self {
            Op::Reduce { x, .. }
            | Op::EdgeDelete { x, .. }
            | Op::VertexDelete { x }
            | Op::DeleteSave { x, .. } => x,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Op::Reduce { .. } => "reduce",
            Op::EdgeDelete { .. } => "edgedel",
            Op::VertexDelete { .. } => "vdel",
            Op::DeleteSave { .. } => "deletesave",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Op::Reduce { x, s } => write!(f, "reduce({x}, {s})"),
            Op::EdgeDelete { x, y } => write!(f, "edgedel({x}, {y})"),
            Op::VertexDelete { x } => write!(f, "vdel({x})"),
            Op::DeleteSave { x, y } => write!(f, "deletesave({x}, {y})"),
        }
    }
}

/// Why a move cannot be applied.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Illegal {
    #[error("vertex {0} is not present")]
    Absent(Vertex),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(Vertex, Vertex),
    #[error("edge operation with x = y = {0}")]
    SameEndpoints(Vertex),
    #[error("reduce amount {0} is not positive")]
    NonPositiveAmount(i64),
    #[error("reduce needs f({x}) = {cap} > {s}")]
    ReduceTooLarge { x: Vertex, cap: i64, s: i64 },
    #[error("needs f({x}) = {fx} > f({y}) = {fy}")]
    NotGreater { x: Vertex, fx: i64, y: Vertex, fy: i64 },
    #[error("vertex delete needs f({x}) = {cap} > 0")]
    NonPositiveCap { x: Vertex, cap: i64 },
}

/// A pair `(G, f)` evolving under moves. The vertex set of the original
/// graph is kept; deleted vertices are flagged absent and lose their
/// edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpState {
    graph: Graph,
    present: Vec<bool>,
    caps: Vec<i64>,
    alive: usize,
}

impl OpState {
    pub fn new(g: &Graph, f: &CapMap) -> Self {
        assert_eq!(g.n(), f.len(), "capacity map must cover the graph");
        OpState {
            graph: g.clone(),
            present: vec![true; g.n()],
            caps: f.values().to_vec(),
            alive: g.n(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cap(&self, v: Vertex) -> i64 {
        self.caps[v]
    }

    pub fn caps(&self) -> &[i64] {
        &self.caps
    }

    pub fn is_present(&self, v: Vertex) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    pub fn present(&self) -> &[bool] {
        &self.present
    }

    pub fn alive_count(&self) -> usize {
        self.alive
    }

    pub fn is_empty(&self) -> bool {
        self.alive == 0
    }

    /// Current degree (edges to present vertices).
    pub fn degree(&self, v: Vertex) -> usize {
        self.graph.degree(v)
    }

    pub fn check(&self, op: &Op) -> Result<(), Illegal> {
        let present = |v: Vertex| {
            if self.is_present(v) {
                Ok(())
            } else {
                Err(Illegal::Absent(v))
            }
        };
        match *op {
            Op::Reduce { x, s } => {
                present(x)?;
                if s < 1 {
                    return Err(Illegal::NonPositiveAmount(s));
                }
                if self.caps[x] <= s {
                    return Err(Illegal::ReduceTooLarge { x, cap: self.caps[x], s });
                }
            }
            Op::EdgeDelete { x, y } | Op::DeleteSave { x, y } => {
                present(x)?;
                present(y)?;
                if x == y {
                    return Err(Illegal::SameEndpoints(x));
                }
                if !self.graph.has_edge(x, y) {
                    return Err(Illegal::MissingEdge(x, y));
                }
                if self.caps[x] <= self.caps[y] {
                    return Err(Illegal::NotGreater {
                        x,
                        fx: self.caps[x],
                        y,
                        fy: self.caps[y],
                    });
                }
            }
            Op::VertexDelete { x } => {
                present(x)?;
                if self.caps[x] <= 0 {
                    return Err(Illegal::NonPositiveCap { x, cap: self.caps[x] });
                }
            }
        }
        Ok(())
    }

    pub fn apply(&mut self, op: &Op) -> Result<(), Illegal> {
        self.check(op)?;
        match *op {
            Op::Reduce { x, s } => self.caps[x] -= s,
            Op::EdgeDelete { x, y } => {
                self.caps[x] -= self.caps[y];
                self.graph.remove_edge(x, y);
            }
            Op::VertexDelete { x } => self.delete_vertex(x, None),
            Op::DeleteSave { x, y } => self.delete_vertex(x, Some(y)),
        }
        Ok(())
    }

    fn delete_vertex(&mut self, x: Vertex, saved: Option<Vertex>) {
        let nbrs: Vec<Vertex> = self.graph.neighbours(x).to_vec();
        for w in nbrs {
            if Some(w) != saved {
                self.caps[w] -= 1;
            }
            self.graph.remove_edge(x, w);
        }
        self.present[x] = false;
        self.alive -= 1;
    }
}

/// Replay result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    /// `step` is 1-based; `step = ops.len() + 1` means the sequence was
    /// legal but left vertices behind.
    Reject { step: usize, reason: RejectReason },
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RejectReason {
    #[error("{op}: {why}")]
    Illegal { op: Op, why: Illegal },
    #[error("{0} vertices remain after the last move")]
    NotEmpty(usize),
    #[error("capacity map has {caps} entries for {n} vertices")]
    ShapeMismatch { n: usize, caps: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every move legal and the final state empty.
    Full,
    /// Every move legal.
    Prefix,
}

pub fn verify_certificate(g: &Graph, f: &CapMap, ops: &[Op], mode: Mode) -> Verdict {
    if g.n() != f.len() {
        return Verdict::Reject {
            step: 0,
            reason: RejectReason::ShapeMismatch { n: g.n(), caps: f.len() },
        };
    }
    let mut st = OpState::new(g, f);
    for (i, op) in ops.iter().enumerate() {
        if let Err(why) = st.apply(op) {
            return Verdict::Reject {
                step: i + 1,
                reason: RejectReason::Illegal { op: *op, why },
            };
        }
    }
    if mode == Mode::Full && !st.is_empty() {
        return Verdict::Reject {
            step: ops.len() + 1,
            reason: RejectReason::NotEmpty(st.alive_count()),
        };
    }
    Verdict::Accept
}

/// Shorthand for a full replay.
pub fn certifies(g: &Graph, f: &CapMap, ops: &[Op]) -> bool {
    verify_certificate(g, f, ops, Mode::Full).is_accept()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn edge_delete_pays() {
        let g = families::complete(2);
        let mut st = OpState::new(&g, &CapMap::new(vec![5, 2]));
        st.apply(&Op::EdgeDelete { x: 0, y: 1 }).unwrap();
        assert_eq!(st.caps(), &[3, 2]);
        assert_eq!(st.graph().m(), 0);
        assert_eq!(st.alive_count(), 2);
    }

    #[test]
    fn single_vertex_delete_empties() {
        let g = Graph::empty(1);
        let mut st = OpState::new(&g, &CapMap::new(vec![1]));
        st.apply(&Op::VertexDelete { x: 0 }).unwrap();
        assert!(st.is_empty());
    }

    #[test]
    fn vertex_delete_decrements() {
        let g = families::path(3);
        let mut st = OpState::new(&g, &CapMap::new(vec![2, 1, 2]));
        st.apply(&Op::VertexDelete { x: 1 }).unwrap();
        assert_eq!((st.cap(0), st.cap(2)), (1, 1));
        assert_eq!(st.graph().m(), 0);
    }

    #[test]
    fn delete_save_spares_y() {
        let g = families::path(3);
        let mut st = OpState::new(&g, &CapMap::new(vec![2, 3, 2]));
        st.apply(&Op::DeleteSave { x: 1, y: 0 }).unwrap();
        assert_eq!((st.cap(0), st.cap(2)), (2, 1));
    }

    #[test]
    fn verify_examples() {
        let p3 = families::path(3);
        let ops = [
            Op::VertexDelete { x: 1 },
            Op::VertexDelete { x: 0 },
            Op::VertexDelete { x: 2 },
        ];
        assert_eq!(
            verify_certificate(&p3, &CapMap::new(vec![2, 1, 2]), &ops, Mode::Full),
            Verdict::Accept
        );

        let k3 = families::complete(3);
        let ops = [
            Op::VertexDelete { x: 0 },
            Op::VertexDelete { x: 1 },
            Op::VertexDelete { x: 2 },
        ];
        match verify_certificate(&k3, &CapMap::constant(3, 2), &ops, Mode::Full) {
            Verdict::Reject { step: 3, reason: RejectReason::Illegal { why, .. } } => {
                assert_eq!(why, Illegal::NonPositiveCap { x: 2, cap: 0 })
            }
            v => panic!("unexpected {v:?}"),
        }

        let k2 = families::complete(2);
        let ops = [Op::EdgeDelete { x: 0, y: 1 }];
        assert!(matches!(
            verify_certificate(&k2, &CapMap::constant(2, 2), &ops, Mode::Full),
            Verdict::Reject { step: 1, reason: RejectReason::Illegal { why: Illegal::NotGreater { .. }, .. } }
        ));
    }

    #[test]
    fn prefix_mode_ignores_leftovers() {
        let g = families::path(2);
        let f = CapMap::new(vec![2, 1]);
        let ops = [Op::EdgeDelete { x: 0, y: 1 }];
        assert!(verify_certificate(&g, &f, &ops, Mode::Prefix).is_accept());
        assert_eq!(
            verify_certificate(&g, &f, &ops, Mode::Full),
            Verdict::Reject { step: 2, reason: RejectReason::NotEmpty(2) }
        );
    }

    #[test]
    fn reduce_rules() {
        let g = Graph::empty(1);
        let f = CapMap::new(vec![3]);
        assert!(verify_certificate(&g, &f, &[Op::Reduce { x: 0, s: 2 }], Mode::Prefix).is_accept());
        assert!(!verify_certificate(&g, &f, &[Op::Reduce { x: 0, s: 3 }], Mode::Prefix).is_accept());
        assert!(!verify_certificate(&g, &f, &[Op::Reduce { x: 0, s: 0 }], Mode::Prefix).is_accept());
    }

    #[test]
    fn absent_and_missing() {
        let g = families::path(3);
        let f = CapMap::constant(3, 3);
        let ops = [Op::VertexDelete { x: 0 }, Op::VertexDelete { x: 0 }];
        assert!(matches!(
            verify_certificate(&g, &f, &ops, Mode::Prefix),
            Verdict::Reject { step: 2, reason: RejectReason::Illegal { why: Illegal::Absent(0), .. } }
        ));
        let ops = [Op::EdgeDelete { x: 0, y: 2 }];
        assert!(matches!(
            verify_certificate(&g, &f, &ops, Mode::Prefix),
            Verdict::Reject { step: 1, reason: RejectReason::Illegal { why: Illegal::MissingEdge(0, 2), .. } }
        ));
    }
}
