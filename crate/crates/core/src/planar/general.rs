//! Certificates for `(G, min{k, d})` in a family excluding `K_{s,t}` as a
//! minor, with `q = 4^{s+1} s! s t (s+t-1) + 1` and `k = 2^{s+2} t q`.
//!
//! Minor exclusion is not checked. The construction only relies on two of
//! its consequences, and reports a typed error when either fails on the
//! input: the high-degree vertices admit a `(2^{s+2} t - 1)`-degenerate
//! order, and the component/vertex incidence graph can be peeled from the
//! high side with degree at most `4^{s+1} s! s t`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::blocks::{block_decomposition_within, is_gdp_tree_on};
use crate::calculus::{
    constructive::residual_certificate, degree_certificate, verify_certificate, ConstructError, Illegal, Mode, Op,
    OpState, Verdict,
};
use crate::degeneracy::degeneracy_ordering_on;
use crate::graph::{CapMap, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("s and t must be positive")]
    NonPositive,
    #[error("constants overflow for s = {s}, t = {t}")]
    Overflow { s: u32, t: u32 },
}

/// The excluded minor `K_{s,t}` and the derived constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorParams {
    pub s: u32,
    pub t: u32,
    /// `4^{s+1} s! s t`
    pub peel_bound: u128,
    /// `2^{s+2} t - 1`
    pub degeneracy: u128,
    pub q: u128,
    pub k: u128,
}

impl MinorParams {
    pub fn new(s: u32, t: u32) -> Result<Self, ParamError> {
        if s == 0 || t == 0 {
            return Err(ParamError::NonPositive);
        }
        let of = ParamError::Overflow { s, t };
        let (s1, t1) = (s as u128, t as u128);
        let mut fact: u128 = 1;
        for i in 2..=s1 {
            fact = fact.checked_mul(i).ok_or(of)?;
        }
        let pow4 = 4u128.checked_pow(s + 1).ok_or(of)?;
        let peel_bound = pow4
            .checked_mul(fact)
            .and_then(|x| x.checked_mul(s1))
            .and_then(|x| x.checked_mul(t1))
            .ok_or(of)?;
        let q = peel_bound.checked_mul(s1 + t1 - 1).and_then(|x| x.checked_add(1)).ok_or(of)?;
        let pow2 = 2u128.checked_pow(s + 2).ok_or(of)?;
        let degeneracy = pow2.checked_mul(t1).ok_or(of)? - 1;
        let k = pow2.checked_mul(t1).and_then(|x| x.checked_mul(q)).ok_or(of)?;
        Ok(MinorParams { s, t, peel_bound, degeneracy, q, k })
    }

    /// `k` as a capacity; saturates at `i64::MAX` (no graph reaches it).
    pub fn k_cap(&self) -> i64 {
        i64::try_from(self.k).unwrap_or(i64::MAX)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GeneralCertError {
    #[error("high-degree vertices are not {0}-degenerate")]
    Degeneracy(u128),
    #[error("peeling stuck: every remaining high vertex meets more than {bound} components (least {least})")]
    Peel { bound: u128, least: usize },
    #[error("vertex {vertex}: {op} is illegal: {why}")]
    Illegal { vertex: Vertex, op: Op, why: Illegal },
    #[error("residual: {0}")]
    Residual(#[from] ConstructError),
    #[error("final replay rejected: {0:?}")]
    Rejected(Verdict),
}

/// One step of the high-side peeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub vertex: Vertex,
    /// indices into [`GeneralCertificate::components`]
    pub components: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralCertificate {
    pub params: MinorParams,
    pub ops: Vec<Op>,
    pub high: Vec<Vertex>,
    /// order used to make the high side independent
    pub order: Vec<Vertex>,
    pub components: Vec<Vec<Vertex>>,
    /// processing order (reverse of peeling)
    pub peel: Vec<PeelStep>,
    /// most capacity spent by a high vertex on its private components
    pub max_spent: i64,
}

pub fn general_caps(g: &Graph, params: &MinorParams) -> CapMap {
    CapMap::truncated(g, params.k_cap())
}

pub fn general_certificate(g: &Graph, params: &MinorParams) -> Result<GeneralCertificate, GeneralCertError> {
    general_certificate_with(g, params, params.peel_bound)
}

/// As [`general_certificate`] with an explicit peeling bound.
pub fn general_certificate_with(g: &Graph, params: &MinorParams, peel_bound: u128) -> Result<GeneralCertificate, GeneralCertError> {
    let n = g.n();
    let f = general_caps(g, params);
    let k = params.k_cap();
    let is_high: Vec<bool> = (0..n).map(|v| g.degree(v) as i64 >= k).collect();
    let high: Vec<Vertex> = (0..n).filter(|&v| is_high[v]).collect();
    let mut cert = GeneralCertificate {
        params: *params,
        ops: Vec::new(),
        high: high.clone(),
        order: Vec::new(),
        components: Vec::new(),
        peel: Vec::new(),
        max_spent: 0,
    };
    if high.is_empty() {
        cert.ops = degree_certificate(g)?;
        return finish(g, &f, cert);
    }
    let q = i64::try_from(params.q).unwrap_or(i64::MAX);

    let cap = usize::try_from(params.degeneracy).unwrap_or(usize::MAX);
    let order = degeneracy_ordering_on(g, &high, cap, false).ok_or(GeneralCertError::Degeneracy(params.degeneracy))?;
    let mut st = OpState::new(g, &f);
    let mut ops = Vec::new();
    let apply = |st: &mut OpState, ops: &mut Vec<Op>, op: Op| {
        st.apply(&op).map_err(|why| GeneralCertError::Illegal { vertex: op.x(), op, why })?;
        ops.push(op);
        Ok::<(), GeneralCertError>(())
    };
    // make the high side independent with every high capacity equal to q
    let mut placed = vec![false; n];
    for &w in &order {
        let earlier: Vec<Vertex> = g.neighbours(w).iter().copied().filter(|&y| placed[y]).collect();
        for y in earlier {
            apply(&mut st, &mut ops, Op::EdgeDelete { x: w, y })?;
        }
        let extra = st.cap(w) - q;
        if extra > 0 {
            apply(&mut st, &mut ops, Op::Reduce { x: w, s: extra })?;
        }
        placed[w] = true;
    }

    let low_mask: Vec<bool> = is_high.iter().map(|&h| !h).collect();
    let components = g.components_within(&low_mask);
    let mut comp_of = vec![usize::MAX; n];
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let adj: Vec<BTreeSet<usize>> = high
        .iter()
        .map(|&w| st.graph().neighbours(w).iter().map(|&v| comp_of[v]).collect())
        .collect();

    // peel the high side by fewest live components
    let mut alive_comp = vec![true; components.len()];
    let mut alive_high = vec![true; high.len()];
    let mut peel = Vec::with_capacity(high.len());
    for _ in 0..high.len() {
        let (hi, deg) = (0..high.len())
            .filter(|&i| alive_high[i])
            .map(|i| (i, adj[i].iter().filter(|&&c| alive_comp[c]).count()))
            .min_by_key(|&(i, d)| (d, high[i]))
            .expect("a high vertex remains");
        if deg as u128 > peel_bound {
            return Err(GeneralCertError::Peel { bound: peel_bound, least: deg });
        }
        let comps: Vec<usize> = adj[hi].iter().copied().filter(|&c| alive_comp[c]).collect();
        for &c in &comps {
            alive_comp[c] = false;
        }
        alive_high[hi] = false;
        peel.push(PeelStep { vertex: high[hi], components: comps });
    }
    peel.reverse();

    // each component is private to its vertex by the time it is processed
    let mut max_spent = 0;
    for step in &peel {
        let w = step.vertex;
        let start = st.cap(w);
        for &c in &step.components {
            let q_vs = &components[c];
            if !is_gdp_tree_on(g, q_vs) {
                continue;
            }
            let mut mask = vec![false; n];
            for &v in q_vs {
                mask[v] = true;
            }
            let leaves = block_decomposition_within(g, &mask).leaf_non_roots();
            let pick = |pool: &mut dyn Iterator<Item = Vertex>| pool.filter(|&v| st.graph().has_edge(w, v)).min_by_key(|&v| (st.cap(v), v));
            let target = pick(&mut leaves.iter().copied()).or_else(|| pick(&mut q_vs.iter().copied()));
            if let Some(y) = target {
                apply(&mut st, &mut ops, Op::EdgeDelete { x: w, y })?;
            }
        }
        max_spent = max_spent.max(start - st.cap(w));
        apply(&mut st, &mut ops, Op::VertexDelete { x: w })?;
    }
    ops.extend(residual_certificate(st.graph(), st.present(), st.caps())?);
    cert.ops = ops;
    cert.order = order;
    cert.components = components;
    cert.peel = peel;
    cert.max_spent = max_spent;
    finish(g, &f, cert)
}

fn finish(g: &Graph, f: &CapMap, cert: GeneralCertificate) -> Result<GeneralCertificate, GeneralCertError> {
    match verify_certificate(g, f, &cert.ops, Mode::Full) {
        Verdict::Accept => Ok(cert),
        v => Err(GeneralCertError::Rejected(v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn constants() {
        let p = MinorParams::new(3, 3).unwrap();
        assert_eq!(p.peel_bound, 256 * 6 * 9);
        assert_eq!(p.q, 69_121);
        assert_eq!(p.k, 6_635_616);
        assert_eq!(p.degeneracy, 95);
        let p = MinorParams::new(2, 1).unwrap();
        assert_eq!((p.q, p.k), (513, 8208));
        assert_eq!(MinorParams::new(0, 3), Err(ParamError::NonPositive));
        assert!(matches!(MinorParams::new(40, 1), Err(ParamError::Overflow { .. })));
    }

    #[test]
    fn small_graphs_take_the_degree_route() {
        let p = MinorParams::new(3, 3).unwrap();
        let g = families::wheel(12);
        let c = general_certificate(&g, &p).unwrap();
        assert!(c.high.is_empty());
        assert!(c.peel.is_empty());
        assert_eq!(general_certificate(&families::complete(5), &p).unwrap_err(), GeneralCertError::Residual(ConstructError::GdpTree(0)));
    }

    #[test]
    fn huge_wheel_hub() {
        // rim 8300 > k = 8208 for K_{2,1}; the wheel does contain that minor,
        // so this only exercises the moves
        let p = MinorParams::new(2, 1).unwrap();
        let g = families::wheel(8300);
        let c = general_certificate(&g, &p).unwrap();
        assert_eq!(c.high.len(), 1);
        assert_eq!(c.peel.len(), 1);
        assert_eq!(c.peel[0].components.len(), 1);
        assert_eq!(c.max_spent, 3);
    }

    #[test]
    fn peel_bound_is_enforced() {
        let p = MinorParams::new(2, 1).unwrap();
        let g = families::wheel(8300);
        assert_eq!(general_certificate_with(&g, &p, 0), Err(GeneralCertError::Peel { bound: 0, least: 1 }));
    }
}
