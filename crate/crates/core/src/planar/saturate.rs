//! Making marked vertices that share a face adjacent, and carrying a
//! certificate from the enlarged graph back to the original one.

use alloc::vec::Vec;

use super::embedding::{Embedding, EmbeddingError};
use crate::calculus::{Illegal, Op, OpState};
use crate::graph::{CapMap, Graph, Vertex};

/// Adds chords inside faces until no two marked vertices on a common face
/// are non-adjacent. Returns the new embedding and the added edges in
/// insertion order. Degrees never drop; a second call adds nothing.
pub fn saturate_visibility(emb: &Embedding, marked: &[bool]) -> Result<(Embedding, Vec<(Vertex, Vertex)>), EmbeddingError> {
    let mut cur = emb.clone();
    let mut added = Vec::new();
    while let Some((face, a, b)) = invisible_pair(&cur, marked) {
        cur = cur.add_chord(face, a, b)?;
        added.push((a, b));
    }
    Ok((cur, added))
}

fn invisible_pair(emb: &Embedding, marked: &[bool]) -> Option<(usize, Vertex, Vertex)> {
    let g = emb.graph();
    for (i, f) in emb.faces().iter().enumerate() {
        let on: Vec<Vertex> = f.vertices.iter().copied().filter(|&v| marked[v]).collect();
        for (j, &a) in on.iter().enumerate() {
            for &b in &on[j + 1..] {
                if !g.has_edge(a, b) {
                    return Some((i, a, b));
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TransferError {
    #[error("graphs differ in vertex count")]
    Shape,
    #[error("edge {0}-{1} of the smaller graph is missing from the larger one")]
    NotSpanning(Vertex, Vertex),
    #[error("move {step} ({op}) is illegal in the larger graph: {why}")]
    Source { step: usize, op: Op, why: Illegal },
    #[error("move {step} ({op}) cannot be mirrored: {why}")]
    Target { step: usize, op: Op, why: Illegal },
}

/// Mirrors a legal sequence for `(big, f)` on `(small, f)`, where `small`
/// is a spanning subgraph of `big`. Moves on edges absent from `small` are
/// dropped (or become plain vertex deletions). Before an edge move the
/// capacity of `y` is lowered to its value in the larger graph, so that the
/// payment matches; capacities in `small` never fall below those in `big`.
pub fn transfer_to_subgraph(big: &Graph, small: &Graph, f: &CapMap, ops: &[Op]) -> Result<Vec<Op>, TransferError> {
    if big.n() != small.n() {
        return Err(TransferError::Shape);
    }
    if let Some((a, b)) = small.edges().find(|&(a, b)| !big.has_edge(a, b)) {
        return Err(TransferError::NotSpanning(a, b));
    }
    let mut src = OpState::new(big, f);
    let mut dst = OpState::new(small, f);
    let mut out = Vec::with_capacity(ops.len());
    for (i, op) in ops.iter().enumerate() {
        let step = i + 1;
        src.apply(op).map_err(|why| TransferError::Source { step, op: *op, why })?;
        let mut push = |dst: &mut OpState, o: Op| -> Result<(), TransferError> {
            dst.apply(&o).map_err(|why| TransferError::Target { step, op: o, why })?;
            out.push(o);
            Ok(())
        };
        match *op {
            Op::Reduce { .. } | Op::VertexDelete { .. } => push(&mut dst, *op)?,
            Op::EdgeDelete { x, y } | Op::DeleteSave { x, y } => {
                let has = dst.graph().has_edge(x, y);
                if has {
                    // src already applied: y's capacity is unchanged by it
                    let surplus = dst.cap(y) - src.cap(y);
                    if surplus > 0 {
                        push(&mut dst, Op::Reduce { x: y, s: surplus })?;
                    }
                    push(&mut dst, *op)?;
                } else if matches!(op, Op::DeleteSave { .. }) {
                    push(&mut dst, Op::VertexDelete { x })?;
                }
            }
        }
    }
    Ok(out)
}
