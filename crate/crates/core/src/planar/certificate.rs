//! Constructive certificate for `(G, min{16, d})` when `G` is a
//! non-complete 3-connected plane graph.
//!
//! High-degree vertices (`V2`) are processed in a 5-degenerate order. When a
//! vertex is the last protector of a low-degree component `Q`, the part of
//! `Q` it cannot see is deleted, one edge from it into a leaf block of `Q`
//! is deleted (so `Q` gains spare capacity), and the vertex goes. What is
//! left at the end has spare capacity in every component and is peeled.
//! Every round is checked against the three invariants of the argument and
//! recorded.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::embedding::{Embedding, EmbeddingError};
use super::nice::{nice_subgraph_within, NiceError};
use super::regions::Regions;
use super::saturate::{saturate_visibility, transfer_to_subgraph, TransferError};
use crate::blocks::{block_decomposition_within, is_3_connected, is_gdp_tree_on};
use crate::calculus::{
    constructive::residual_certificate, degree_certificate, strict_peel_certificate, verify_certificate, ConstructError, Illegal,
    Mode, Op, OpState, Verdict,
};
use crate::degeneracy::degeneracy_ordering_on;
use crate::graph::{CapMap, Graph, Vertex};

pub const PLANAR_THRESHOLD: i64 = 16;

/// Degeneracy bound of planar graphs used for the `V2` order.
const V2_DEGENERACY: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PlanarCertError {
    #[error("embedding is of a different graph")]
    EmbeddingMismatch,
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("graph is complete")]
    Complete,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("nice subgraph: {0}")]
    Nice(#[from] NiceError),
    #[error("high-degree vertices are not {V2_DEGENERACY}-degenerate")]
    Degeneracy,
    #[error("component containing {component} has no protector on the side of component {side}")]
    NoProtector { component: Vertex, side: usize },
    #[error("round {round}: {op} is illegal: {why}")]
    Illegal { round: usize, op: Op, why: Illegal },
    #[error("round {round}: invariant {which} fails at vertex {vertex}")]
    Invariant { round: usize, which: u8, vertex: Vertex },
    #[error("residual: {0}")]
    Residual(#[from] ConstructError),
    #[error("transfer: {0}")]
    Transfer(#[from] TransferError),
    #[error("final replay rejected: {0:?}")]
    Rejected(Verdict),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanarRoute {
    /// no vertex reaches the threshold
    Degree,
    /// every vertex reaches it
    StrictPeel,
    /// the protector construction
    Protectors,
}

/// One component handled in a round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStep {
    /// index into [`PlanarCertificate::components`]
    pub component: usize,
    pub deleted: Vec<Vertex>,
    /// the leaf-block vertex whose edge to the round vertex is deleted
    pub target: Vertex,
    /// capacity paid by the round vertex for that edge
    pub paid: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    /// 1-based
    pub round: usize,
    pub vertex: Vertex,
    pub earlier_neighbours: usize,
    pub cap_before: i64,
    pub steps: Vec<ComponentStep>,
    /// capacity right before the vertex is deleted
    pub cap_at_delete: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarCertificate {
    /// legal for `(G, min{16, d_G})`
    pub ops: Vec<Op>,
    pub route: PlanarRoute,
    pub high: Vec<Vertex>,
    /// chords added between mutually visible high-degree vertices
    pub added_edges: Vec<(Vertex, Vertex)>,
    /// processing order of the high-degree vertices
    pub order: Vec<Vertex>,
    /// components of the low-degree part, sorted
    pub components: Vec<Vec<Vertex>>,
    pub gdp: Vec<bool>,
    /// protectors per component (empty for non-GDP ones)
    pub protectors: Vec<Vec<Vertex>>,
    pub rounds: Vec<Round>,
    /// set when the nice subgraph came from the exhaustive fallback
    pub nice_fallback: Option<NiceError>,
}

impl PlanarCertificate {
    fn simple(ops: Vec<Op>, route: PlanarRoute, high: Vec<Vertex>) -> Self {
        PlanarCertificate {
            ops,
            route,
            high,
            added_edges: Vec::new(),
            order: Vec::new(),
            components: Vec::new(),
            gdp: Vec::new(),
            protectors: Vec::new(),
            rounds: Vec::new(),
            nice_fallback: None,
        }
    }

    /// Largest capacity a round vertex paid for one edge deletion.
    pub fn max_payment(&self) -> i64 {
        self.rounds.iter().flat_map(|r| r.steps.iter().map(|s| s.paid)).max().unwrap_or(0)
    }
}

pub fn planar_caps(g: &Graph) -> CapMap {
    CapMap::truncated(g, PLANAR_THRESHOLD)
}

/// Certificate for `(G, min{16, d_G})`.
pub fn planar_certificate(g: &Graph, emb: &Embedding) -> Result<PlanarCertificate, PlanarCertError> {
    if emb.graph() != g {
        return Err(PlanarCertError::EmbeddingMismatch);
    }
    if g.m() == g.n() * (g.n().saturating_sub(1)) / 2 {
        return Err(PlanarCertError::Complete);
    }
    if !is_3_connected(g) {
        return Err(PlanarCertError::NotThreeConnected);
    }
    let n = g.n();
    let f = planar_caps(g);
    let is_high: Vec<bool> = (0..n).map(|v| g.degree(v) as i64 >= PLANAR_THRESHOLD).collect();
    let high: Vec<Vertex> = (0..n).filter(|&v| is_high[v]).collect();
    if high.is_empty() {
        let ops = degree_certificate(g)?;
        return finish(g, &f, PlanarCertificate::simple(ops, PlanarRoute::Degree, high));
    }
    if high.len() == n {
        let ops = strict_peel_certificate(g, &vec![true; n], f.values()).ok_or(PlanarCertError::Degeneracy)?;
        return finish(g, &f, PlanarCertificate::simple(ops, PlanarRoute::StrictPeel, high));
    }

    let (emb, added_edges) = saturate_visibility(emb, &is_high)?;
    let gs = emb.graph().clone();
    let low_mask: Vec<bool> = is_high.iter().map(|&h| !h).collect();
    let components = gs.components_within(&low_mask);
    let gdp: Vec<bool> = components.iter().map(|q| is_gdp_tree_on(&gs, q)).collect();

    // components G_i of G[V2]
    let sides = gs.components_within(&is_high);
    let mut side_of = vec![usize::MAX; n];
    for (i, s) in sides.iter().enumerate() {
        for &v in s {
            side_of[v] = i;
        }
    }
    let r2 = Regions::new(&emb, &high);
    let b2 = r2.boundaries(&emb);
    let side_regions: Vec<Regions> = sides.iter().map(|s| Regions::new(&emb, s)).collect();
    let side_bounds: Vec<BTreeMap<usize, Vec<Vertex>>> = side_regions.iter().map(|r| r.boundaries(&emb)).collect();

    let anchor = high
        .iter()
        .copied()
        .find(|&v| r2.faces_at(&emb, v).contains(&r2.outer()))
        .expect("some high vertex lies on the outer face of G[V2]");
    let nice = nice_subgraph_within(&emb, &high, anchor)?;

    let order = degeneracy_ordering_on(&gs, &high, V2_DEGENERACY, true).ok_or(PlanarCertError::Degeneracy)?;
    let mut pos = vec![usize::MAX; n];
    for (i, &u) in order.iter().enumerate() {
        pos[u] = i;
    }

    // protectors, per component, with the data each round needs
    struct Plan {
        /// per side index: (Q_i, leaf non-roots of Q_i)
        parts: BTreeMap<usize, (Vec<Vertex>, Vec<Vertex>)>,
        last: usize,
    }
    let mut protectors = vec![Vec::new(); components.len()];
    let mut plans: Vec<Option<Plan>> = Vec::with_capacity(components.len());
    for (qi, q) in components.iter().enumerate() {
        if !gdp[qi] {
            plans.push(None);
            continue;
        }
        let theta = r2.faces_at(&emb, q[0]);
        debug_assert_eq!(theta.len(), 1);
        let theta = theta[0];
        let boundary = b2.get(&theta).cloned().unwrap_or_default();
        let js: BTreeSet<usize> = boundary.iter().map(|&v| side_of[v]).collect();
        let mut parts = BTreeMap::new();
        let mut prot: BTreeSet<Vertex> = BTreeSet::new();
        for &i in &js {
            let part = visible_part(&emb, q, &sides[i]);
            let mut mask = vec![false; n];
            for &v in &part {
                mask[v] = true;
            }
            let leaves = block_decomposition_within(&gs, &mask).leaf_non_roots();
            let t_i = side_regions[i].faces_at(&emb, q[0]);
            debug_assert_eq!(t_i.len(), 1);
            let bound_i = side_bounds[i].get(&t_i[0]).cloned().unwrap_or_default();
            let here: Vec<Vertex> = bound_i
                .iter()
                .copied()
                .filter(|&u| nice.has(u, theta) && leaves.iter().any(|&l| gs.has_edge(u, l)))
                .collect();
            if here.is_empty() {
                return Err(PlanarCertError::NoProtector { component: q[0], side: i });
            }
            prot.extend(here);
            parts.insert(i, (part, leaves));
        }
        if prot.is_empty() {
            return Err(PlanarCertError::NoProtector { component: q[0], side: usize::MAX });
        }
        let last = prot.iter().map(|&u| pos[u]).max().unwrap();
        protectors[qi] = prot.into_iter().collect();
        plans.push(Some(Plan { parts, last }));
    }

    let mut st = OpState::new(&gs, &f);
    let mut ops = Vec::new();
    let mut rounds = Vec::with_capacity(order.len());
    let apply = |st: &mut OpState, ops: &mut Vec<Op>, round: usize, op: Op| {
        st.apply(&op).map_err(|why| PlanarCertError::Illegal { round, op, why })?;
        ops.push(op);
        Ok::<(), PlanarCertError>(())
    };
    for (t, &u) in order.iter().enumerate() {
        let round = t + 1;
        let earlier = gs.neighbours(u).iter().filter(|&&w| is_high[w] && pos[w] < t).count();
        let cap_before = st.cap(u);
        let mut steps = Vec::new();
        for (qi, plan) in plans.iter().enumerate() {
            let Some(plan) = plan else { continue };
            if plan.last != t {
                continue;
            }
            let (part, leaves) = &plan.parts[&side_of[u]];
            let deleted = far_first(&gs, &components[qi], part);
            for &x in &deleted {
                apply(&mut st, &mut ops, round, Op::VertexDelete { x })?;
            }
            let target = leaves
                .iter()
                .copied()
                .filter(|&l| st.graph().has_edge(u, l))
                .min_by_key(|&l| (st.cap(l), l))
                .ok_or(PlanarCertError::NoProtector { component: components[qi][0], side: side_of[u] })?;
            let paid = st.cap(target);
            apply(&mut st, &mut ops, round, Op::EdgeDelete { x: u, y: target })?;
            steps.push(ComponentStep { component: qi, deleted, target, paid });
        }
        let cap_at_delete = st.cap(u);
        apply(&mut st, &mut ops, round, Op::VertexDelete { x: u })?;
        rounds.push(Round { round, vertex: u, earlier_neighbours: earlier, cap_before, steps, cap_at_delete });
        check_round(&gs, &f, &st, &order, t, &components, &plans.iter().map(|p| p.as_ref().map(|p| p.last)).collect::<Vec<_>>(), &is_high)?;
    }

    ops.extend(residual_certificate(st.graph(), st.present(), st.caps())?);
    let star = verify_certificate(&gs, &f, &ops, Mode::Full);
    if star != Verdict::Accept {
        return Err(PlanarCertError::Rejected(star));
    }
    let ops = transfer_to_subgraph(&gs, g, &f, &ops)?;
    finish(
        g,
        &f,
        PlanarCertificate {
            ops,
            route: PlanarRoute::Protectors,
            high,
            added_edges,
            order,
            components,
            gdp,
            protectors,
            rounds,
            nice_fallback: nice.construction_error,
        },
    )
}

fn finish(g: &Graph, f: &CapMap, cert: PlanarCertificate) -> Result<PlanarCertificate, PlanarCertError> {
    match verify_certificate(g, f, &cert.ops, Mode::Full) {
        Verdict::Accept => Ok(cert),
        v => Err(PlanarCertError::Rejected(v)),
    }
}

/// Vertices of `q` sharing a face with some vertex of `side`.
fn visible_part(emb: &Embedding, q: &[Vertex], side: &[Vertex]) -> Vec<Vertex> {
    let mut in_side = vec![false; emb.n()];
    for &v in side {
        in_side[v] = true;
    }
    q.iter()
        .copied()
        .filter(|&v| emb.faces_at(v).into_iter().any(|fc| emb.faces()[fc].vertices.iter().any(|&w| in_side[w])))
        .collect()
}

/// `q - part`, farthest from `part` first, so what is left stays connected.
fn far_first(g: &Graph, q: &[Vertex], part: &[Vertex]) -> Vec<Vertex> {
    let n = g.n();
    let mut in_q = vec![false; n];
    for &v in q {
        in_q[v] = true;
    }
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &v in part {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbours(v) {
            if in_q[w] && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<Vertex> = q.iter().copied().filter(|&v| dist[v] != 0).collect();
    out.sort_by_key(|&v| (core::cmp::Reverse(dist[v]), v));
    out
}

#[allow(clippy::too_many_arguments)]
fn check_round(
    gs: &Graph,
    f: &CapMap,
    st: &OpState,
    order: &[Vertex],
    t: usize,
    components: &[Vec<Vertex>],
    last: &[Option<usize>],
    is_high: &[bool],
) -> Result<(), PlanarCertError> {
    let round = t + 1;
    let bad = |which: u8, vertex: Vertex| Err(PlanarCertError::Invariant { round, which, vertex });
    // (1) exactly the later high vertices remain
    for (j, &u) in order.iter().enumerate() {
        if st.is_present(u) != (j > t) {
            return bad(1, u);
        }
    }
    // (2) low vertices never go into deficit; finished components are
    // connected with spare capacity; others are untouched
    for v in 0..gs.n() {
        if !is_high[v] && st.is_present(v) && st.cap(v) < st.degree(v) as i64 {
            return bad(2, v);
        }
    }
    for (q, l) in components.iter().zip(last) {
        let Some(l) = *l else { continue };
        if l > t {
            if let Some(&v) = q.iter().find(|&&v| !st.is_present(v)) {
                return bad(2, v);
            }
            continue;
        }
        let rest: Vec<Vertex> = q.iter().copied().filter(|&v| st.is_present(v)).collect();
        let mut mask = vec![false; gs.n()];
        for &v in &rest {
            mask[v] = true;
        }
        if st.graph().components_within(&mask).len() != 1 {
            return bad(2, q[0]);
        }
        if !rest.iter().any(|&v| st.cap(v) > st.degree(v) as i64) {
            return bad(2, q[0]);
        }
    }
    // (3) later high vertices have only lost their earlier high neighbours
    let done: BTreeSet<Vertex> = order[..=t].iter().copied().collect();
    for &u in &order[t + 1..] {
        let lost = gs.neighbours(u).iter().filter(|w| done.contains(w)).count() as i64;
        if st.cap(u) != f.values()[u] - lost {
            return bad(3, u);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::planar::planar_embedding;

    fn cert(g: &Graph) -> PlanarCertificate {
        let e = planar_embedding(g).unwrap();
        planar_certificate(g, &e).unwrap()
    }

    #[test]
    fn octahedron_takes_the_degree_route() {
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4), (4, 1)],
        )
        .unwrap();
        let c = cert(&g);
        assert_eq!(c.route, PlanarRoute::Degree);
    }

    #[test]
    fn big_wheel_hub_pays_little() {
        let g = families::wheel(20);
        let c = cert(&g);
        assert_eq!(c.route, PlanarRoute::Protectors);
        assert_eq!(c.rounds.len(), 1);
        assert!(c.max_payment() <= 5);
        assert!(c.added_edges.is_empty());
    }

    #[test]
    fn double_wheel() {
        // two hubs over a 20-cycle, hubs not visible to each other
        let n = 20;
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((n, i));
            edges.push((n + 1, i));
        }
        let g = Graph::from_edges(n + 2, &edges).unwrap();
        let c = cert(&g);
        assert_eq!(c.rounds.len(), 2);
        assert!(c.max_payment() <= 5);
    }

    #[test]
    fn rejects_bad_input() {
        let k4 = families::complete(4);
        let e = planar_embedding(&k4).unwrap();
        assert_eq!(planar_certificate(&k4, &e), Err(PlanarCertError::Complete));
        let c6 = families::cycle(6);
        let e = planar_embedding(&c6).unwrap();
        assert_eq!(planar_certificate(&c6, &e), Err(PlanarCertError::NotThreeConnected));
        let w = families::wheel(5);
        assert_eq!(planar_certificate(&w, &e), Err(PlanarCertError::EmbeddingMismatch));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::planar::generate::{gadget_triangulation, stacked_triangulation, thin_out};
    use crate::planar::planar_embedding;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn random_plane_graphs_certify(
            stack in proptest::collection::vec(0usize..10_000, 20..70),
            thin in proptest::collection::vec(0usize..10_000, 0..40),
        ) {
            let g = thin_out(&stacked_triangulation(&stack, true), &thin);
            let e = planar_embedding(&g).unwrap();
            let c = planar_certificate(&g, &e).unwrap();
            prop_assert!(crate::calculus::certifies(&g, &planar_caps(&g), &c.ops));
        }

        #[test]
        fn gadget_filled_graphs_certify(
            stack in proptest::collection::vec(0usize..10_000, 10..40),
            gadgets in proptest::collection::vec(0usize..2, 0..120),
            thin in proptest::collection::vec(0usize..10_000, 0..20),
        ) {
            let g = thin_out(&gadget_triangulation(&stack, &gadgets), &thin);
            let e = planar_embedding(&g).unwrap();
            let c = planar_certificate(&g, &e).unwrap();
            prop_assert!(crate::calculus::certifies(&g, &planar_caps(&g), &c.ops));
            for r in &c.rounds {
                prop_assert!(r.earlier_neighbours <= 5);
                prop_assert!(r.steps.iter().all(|s| s.paid <= 5));
            }
        }
    }
}
