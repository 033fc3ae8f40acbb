//! Canonical certificate form: every `Reduce` sits right before a move
//! that uses the reduced vertex as its reference.
//!
//! A reduction is postponed until the vertex is next used as `y` in an
//! `EdgeDelete` (or `DeleteSave`); pending amounts on the same vertex are
//! merged. Reductions still pending when the vertex is deleted, or when
//! the sequence ends, are dropped. Postponing only keeps capacities higher
//! in between, which never makes a move illegal except as a reference, and
//! there the pending amount is paid first.

use alloc::vec;
use alloc::vec::Vec;

use super::{verify_certificate, Mode, Op, Verdict};
use crate::graph::{CapMap, Graph};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NormalizeError {
    #[error("input certificate rejected: {0:?}")]
    Rejected(Verdict),
    #[error("internal: normalised certificate rejected: {0:?}")]
    OutputRejected(Verdict),
}

pub fn normalize_certificate(g: &Graph, f: &CapMap, ops: &[Op]) -> Result<Vec<Op>, NormalizeError> {
    let v = verify_certificate(g, f, ops, Mode::Full);
    if !v.is_accept() {
        return Err(NormalizeError::Rejected(v));
    }
    let mut pending = vec![0i64; g.n()];
    let mut out = Vec::with_capacity(ops.len());
    for op in ops {
        match *op {
            Op::Reduce { x, s } => pending[x] += s,
            Op::EdgeDelete { y, .. } | Op::DeleteSave { y, .. } => {
                if pending[y] > 0 {
                    out.push(Op::Reduce { x: y, s: pending[y] });
                    pending[y] = 0;
                }
                out.push(*op);
                if let Op::DeleteSave { x, .. } = *op {
                    pending[x] = 0;
                }
            }
            Op::VertexDelete { x } => {
                pending[x] = 0;
                out.push(*op);
            }
        }
    }
    let v = verify_certificate(g, f, &out, Mode::Full);
    if !v.is_accept() {
        return Err(NormalizeError::OutputRejected(v));
    }
    Ok(out)
}

/// Every `Reduce` is followed, possibly after further reductions, by a move
/// using its vertex as the reference.
pub fn is_normal(ops: &[Op]) -> bool {
    ops.iter().enumerate().all(|(i, op)| match *op {
        Op::Reduce { x, .. } => ops[i + 1..]
            .iter()
            .find(|o| !matches!(o, Op::Reduce { .. }))
            .is_some_and(|o| matches!(*o, Op::EdgeDelete { y, .. } | Op::DeleteSave { y, .. } if y == x)),
        _ => true,
    })
}
