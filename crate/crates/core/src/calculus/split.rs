//! Splitting a certificate along `g <= f`: from a certificate for `(G, f)`
//! produce `X` with certificates for `(G[X], g)` and `(G - X, f - g)`.
//!
//! One forward pass tracks `g` through the moves of the given certificate;
//! a vertex belongs to `X` exactly when its `g`-value is still positive at
//! the moment it is deleted. A second pass replays each move on the side
//! that owns it and lowers every side capacity to its target with `Reduce`
//! moves.
//!
//! Target rules for a move on `(G, f)` with result `(G', f')`:
//!
//! * `Reduce(x, s)`: `g'(x) = min(g(x), f'(x))`.
//! * `EdgeDelete(x, y)`: `g'(x) = clamp(g(x) - g(y), 0, f'(x))`.
//! * `VertexDelete(x)` with `g(x) >= 1`: `g'(w) = max(g(w) - 1, 0)` on
//!   neighbours.
//! * `VertexDelete(x)` with `g(x) = 0`: `g'(w) = min(g(w), f'(w))` on
//!   neighbours.
//!
//! Both side targets never increase along the sequence, so every lowering
//! `Reduce` ends at a positive value and is legal.

use alloc::vec;
use alloc::vec::Vec;

use super::{certifies, verify_certificate, Mode, Op, OpState, Verdict};
use crate::graph::{CapMap, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    /// Sorted.
    pub x: Vec<Vertex>,
    /// Certificate for `(G[X], g)`, in vertex indices of `G`.
    pub cert_x: Vec<Op>,
    /// Certificate for `(G - X, f - g)`, in vertex indices of `G`.
    pub cert_rest: Vec<Op>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SplitError {
    #[error("g must satisfy 0 <= g <= f pointwise")]
    NotBelow,
    #[error("capacity maps do not match the graph")]
    ShapeMismatch,
    #[error("input certificate rejected: {0:?}")]
    Rejected(Verdict),
    #[error("internal: side capacity of vertex {0} fell below its target")]
    Internal(Vertex),
    #[error("internal: produced certificate for the {0} side does not verify")]
    OutputRejected(&'static str),
}

/// Rewrite `DeleteSave(x, y)` as `EdgeDelete(x, y)` then `VertexDelete(x)`.
pub fn expand_delete_save(ops: &[Op]) -> Vec<Op> {
    let mut out = Vec::with_capacity(ops.len());
    for op in ops {
        match *op {
            Op::DeleteSave { x, y } => {
                out.push(Op::EdgeDelete { x, y });
                out.push(Op::VertexDelete { x });
            }
            o => out.push(o),
        }
    }
    out
}

pub fn certificate_split(
    g: &Graph,
    f: &CapMap,
    gcap: &CapMap,
    cert: &[Op],
) -> Result<Split, SplitError> {
    let n = g.n();
    if f.len() != n || gcap.len() != n {
        return Err(SplitError::ShapeMismatch);
    }
    if (0..n).any(|v| gcap[v] < 0 || gcap[v] > f[v]) {
        return Err(SplitError::NotBelow);
    }
    let verdict = verify_certificate(g, f, cert, Mode::Full);
    if !verdict.is_accept() {
        return Err(SplitError::Rejected(verdict));
    }
    let ops = expand_delete_save(cert);

    // pass 1: sides
    let mut in_x = vec![false; n];
    {
        let mut st = OpState::new(g, f);
        let mut gv = gcap.values().to_vec();
        for op in &ops {
            if let Op::VertexDelete { x } = *op {
                in_x[x] = gv[x] >= 1;
            }
            step_targets(&st, op, &mut gv);
            st.apply(op).expect("certificate verified above");
        }
    }

    // pass 2: emit
    let mut st = OpState::new(g, f);
    let mut gv = gcap.values().to_vec();
    let mut side: Vec<i64> = (0..n)
        .map(|v| if in_x[v] { gv[v] } else { f[v] - gv[v] })
        .collect();
    let mut cert_x = Vec::new();
    let mut cert_rest = Vec::new();
    for op in &ops {
        let touched: Vec<Vertex> = match *op {
            Op::Reduce { x, .. } => vec![x],
            Op::EdgeDelete { x, y } => {
                if in_x[x] == in_x[y] {
                    side[x] -= side[y];
                    let out = if in_x[x] { &mut cert_x } else { &mut cert_rest };
                    out.push(*op);
                }
                vec![x]
            }
            Op::VertexDelete { x } => {
                let nbrs = st.graph().neighbours(x).to_vec();
                for &w in &nbrs {
                    if in_x[w] == in_x[x] {
                        side[w] -= 1;
                    }
                }
                let out = if in_x[x] { &mut cert_x } else { &mut cert_rest };
                out.push(*op);
                nbrs
            }
            Op::DeleteSave { .. } => unreachable!("expanded above"),
        };
        step_targets(&st, op, &mut gv);
        st.apply(op).expect("certificate verified above");
        for v in touched {
            let target = if in_x[v] { gv[v] } else { st.cap(v) - gv[v] };
            let diff = side[v] - target;
            if diff < 0 {
                return Err(SplitError::Internal(v));
            }
            if diff > 0 {
                let out = if in_x[v] { &mut cert_x } else { &mut cert_rest };
                out.push(Op::Reduce { x: v, s: diff });
                side[v] = target;
            }
        }
    }

    let x: Vec<Vertex> = (0..n).filter(|&v| in_x[v]).collect();
    let split = Split { x, cert_x, cert_rest };
    let (okx, okr) = check_split(g, f, gcap, &split);
    if !okx {
        return Err(SplitError::OutputRejected("X"));
    }
    if !okr {
        return Err(SplitError::OutputRejected("rest"));
    }
    Ok(split)
}

/// Update `g` for one move applied to `st` (before the move is applied).
fn step_targets(st: &OpState, op: &Op, gv: &mut [i64]) {
    match *op {
        Op::Reduce { x, s } => {
            gv[x] = gv[x].min(st.cap(x) - s);
        }
        Op::EdgeDelete { x, y } => {
            let fx = st.cap(x) - st.cap(y);
            gv[x] = (gv[x] - gv[y]).clamp(0, fx.max(0));
        }
        Op::VertexDelete { x } => {
            let into_x = gv[x] >= 1;
            for &w in st.graph().neighbours(x) {
                gv[w] = if into_x {
                    (gv[w] - 1).max(0)
                } else {
                    gv[w].min(st.cap(w) - 1)
                };
            }
        }
        Op::DeleteSave { .. } => unreachable!("expanded before use"),
    }
}

/// Verify both halves of a split against `(G, f, g)`. Returns
/// `(X side ok, rest side ok)`.
pub fn check_split(g: &Graph, f: &CapMap, gcap: &CapMap, s: &Split) -> (bool, bool) {
    let rest: Vec<Vertex> = (0..g.n()).filter(|v| s.x.binary_search(v).is_err()).collect();
    let h = f.sub(gcap);
    (
        certifies_on(g, &s.x, gcap, &s.cert_x),
        certifies_on(g, &rest, &h, &s.cert_rest),
    )
}

/// Does `ops` (in indices of `g`) certify `(g[keep], caps|keep)`?
pub fn certifies_on(g: &Graph, keep: &[Vertex], caps: &CapMap, ops: &[Op]) -> bool {
    let (sub, map) = g.induced(keep);
    let mut back = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        back[v] = i;
    }
    let mut mapped = Vec::with_capacity(ops.len());
    for op in ops {
        let m = |v: Vertex| back.get(v).copied().filter(|&i| i != usize::MAX);
        let o = match *op {
            Op::Reduce { x, s } => m(x).map(|x| Op::Reduce { x, s }),
            Op::EdgeDelete { x, y } => m(x).zip(m(y)).map(|(x, y)| Op::EdgeDelete { x, y }),
            Op::VertexDelete { x } => m(x).map(|x| Op::VertexDelete { x }),
            Op::DeleteSave { x, y } => m(x).zip(m(y)).map(|(x, y)| Op::DeleteSave { x, y }),
        };
        match o {
            Some(o) => mapped.push(o),
            None => return false,
        }
    }
    certifies(&sub, &caps.restrict(keep), &mapped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::decide_weak_star;
    use crate::enumerate::connected_graphs_up_to;
    use crate::graph::families;
    use crate::Budget;

    #[test]
    fn g_equals_f_keeps_everything() {
        let g = families::cycle(4);
        let f = CapMap::constant(4, 3);
        let cert = decide_weak_star(&g, &f, &mut Budget::default()).witness().unwrap().clone();
        let s = certificate_split(&g, &f, &f, &cert).unwrap();
        assert_eq!(s.x, vec![0, 1, 2, 3]);
        assert_eq!(s.cert_x, cert);
        assert!(s.cert_rest.is_empty());
    }

    #[test]
    fn zero_g_keeps_nothing() {
        let g = families::cycle(4);
        let f = CapMap::constant(4, 3);
        let cert = decide_weak_star(&g, &f, &mut Budget::default()).witness().unwrap().clone();
        let s = certificate_split(&g, &f, &CapMap::constant(4, 0), &cert).unwrap();
        assert!(s.x.is_empty());
        assert_eq!(s.cert_rest, cert);
    }

    #[test]
    fn c4_three_one() {
        let g = families::cycle(4);
        let f = CapMap::constant(4, 3);
        let cert = decide_weak_star(&g, &f, &mut Budget::default()).witness().unwrap().clone();
        let s = certificate_split(&g, &f, &CapMap::constant(4, 1), &cert).unwrap();
        assert_eq!(check_split(&g, &f, &CapMap::constant(4, 1), &s), (true, true));
    }

    #[test]
    fn hand_written_certificate_with_reduces() {
        // K2, f = (3, 2): reduce y to 1, delete the edge, then both vertices
        let g = families::complete(2);
        let f = CapMap::new(vec![3, 2]);
        let cert = vec![
            Op::Reduce { x: 1, s: 1 },
            Op::EdgeDelete { x: 0, y: 1 },
            Op::VertexDelete { x: 0 },
            Op::VertexDelete { x: 1 },
        ];
        assert!(certifies(&g, &f, &cert));
        for a in 0..=3 {
            for b in 0..=2 {
                let gc = CapMap::new(vec![a, b]);
                let s = certificate_split(&g, &f, &gc, &cert).unwrap();
                assert_eq!(check_split(&g, &f, &gc, &s), (true, true), "g = ({a}, {b})");
            }
        }
    }

    #[test]
    fn delete_save_input_is_expanded() {
        let g = families::path(2);
        let f = CapMap::new(vec![2, 1]);
        let cert = vec![Op::DeleteSave { x: 0, y: 1 }, Op::VertexDelete { x: 1 }];
        let gc = CapMap::new(vec![1, 1]);
        let s = certificate_split(&g, &f, &gc, &cert).unwrap();
        assert_eq!(check_split(&g, &f, &gc, &s), (true, true));
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = families::path(2);
        let f = CapMap::new(vec![2, 1]);
        let cert = vec![Op::VertexDelete { x: 0 }, Op::VertexDelete { x: 1 }];
        assert_eq!(
            certificate_split(&g, &f, &CapMap::new(vec![3, 0]), &cert),
            Err(SplitError::NotBelow)
        );
        assert!(matches!(
            certificate_split(&g, &f, &CapMap::new(vec![1, 0]), &[Op::VertexDelete { x: 1 }]),
            Err(SplitError::Rejected(_))
        ));
    }

    #[test]
    fn exhaustive_small_splits() {
        for gr in connected_graphs_up_to(3) {
            let n = gr.n();
            let mut fs = vec![vec![]];
            for _ in 0..n {
                fs = fs
                    .into_iter()
                    .flat_map(|p: Vec<i64>| (1..=3).map(move |c| [p.clone(), vec![c]].concat()))
                    .collect();
            }
            for f in fs {
                let fm = CapMap::new(f.clone());
                let Some(cert) = decide_weak_star(&gr, &fm, &mut Budget::default()).witness().cloned() else {
                    continue;
                };
                let mut gs = vec![vec![]];
                for &fv in &f {
                    gs = gs
                        .into_iter()
                        .flat_map(|p: Vec<i64>| (0..=fv).map(move |c| [p.clone(), vec![c]].concat()))
                        .collect();
                }
                for gv in gs {
                    let gc = CapMap::new(gv);
                    let s = certificate_split(&gr, &fm, &gc, &cert).unwrap();
                    assert_eq!(check_split(&gr, &fm, &gc, &s), (true, true));
                }
            }
        }
    }
}
