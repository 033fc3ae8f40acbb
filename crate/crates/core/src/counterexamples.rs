//! The 28-vertex gadget `H` with its list assignment, the 3-connected planar
//! gluing of 42 copies that is not 7-truncated-degree-choosable, and the
//! complete bipartite instances showing that the minor constant cannot be
//! dropped.
//!
//! The edge set of `H` is stored as data. Every build re-checks it against
//! the structure the non-colourability argument relies on, so a wrong edge
//! makes the build fail rather than silently produce a weaker graph.
//! Choices the argument leaves open:
//!
//! * the path `u3 u2 u1 v1 v2 v3` with every path vertex joined to `x` and
//!   `y` (the lists of these vertices contain `a` and `b`, so they must see
//!   both terminals);
//! * `{u1, v1, w1, w2}` is a second `K4`, which gives `w1`, `w2` the degrees
//!   3 and 4 their lists require;
//! * each pair `s_{2j-1} s_{2j}` forms a `K4` with the two path vertices it
//!   separates, and the even one of each pair sees `x` (list contains `a`)
//!   or `y` (contains `b`); the `t` side mirrors this on the `v` path.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::blocks::is_3_connected;
use crate::colouring::{is_list_colouring, solve_list_colouring, ListAssignment};
use crate::graph::{Graph, Vertex};
use crate::planar::planar_embedding;

/// Symbolic colours `a..g`; the numeric colours `1..5` are themselves.
pub const A: u32 = 101;
pub const B: u32 = 102;
pub const TERMINAL_COLOURS: [u32; 7] = [101, 102, 103, 104, 105, 106, 107];

pub fn colour_name(c: u32) -> String {
    if (101..=126).contains(&c) {
        String::from(char::from(b'a' + (c - 101) as u8))
    } else {
        alloc::format!("{c}")
    }
}

pub const H_NAMES: [&str; 28] = [
    "x", "y", "u1", "u2", "u3", "v1", "v2", "v3", "w1", "w2", "w3", "w4", "s1", "s2", "s3", "s4", "s5", "s6", "s7",
    "s8", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8",
];

const H_EDGES: [(&str, &str); 77] = [
    // terminals
    ("x", "u1"), ("x", "u2"), ("x", "u3"), ("x", "v1"), ("x", "v2"), ("x", "v3"),
    ("y", "u1"), ("y", "u2"), ("y", "u3"), ("y", "v1"), ("y", "v2"), ("y", "v3"),
    ("x", "w2"), ("x", "s2"), ("x", "s6"), ("x", "t2"), ("x", "t6"),
    ("y", "w4"), ("y", "s4"), ("y", "s8"), ("y", "t4"), ("y", "t8"),
    // path
    ("u3", "u2"), ("u2", "u1"), ("u1", "v1"), ("v1", "v2"), ("v2", "v3"),
    // middle
    ("w1", "w2"), ("w1", "u1"), ("w1", "v1"), ("w2", "u1"), ("w2", "v1"),
    ("w3", "w4"), ("w3", "u1"), ("w3", "v1"), ("w4", "u1"), ("w4", "v1"),
    // s side
    ("s1", "s2"), ("s1", "u1"), ("s1", "u2"), ("s2", "u1"), ("s2", "u2"),
    ("s3", "s4"), ("s3", "u1"), ("s3", "u2"), ("s4", "u1"), ("s4", "u2"),
    ("s5", "s6"), ("s5", "u2"), ("s5", "u3"), ("s6", "u2"), ("s6", "u3"),
    ("s7", "s8"), ("s7", "u2"), ("s7", "u3"), ("s8", "u2"), ("s8", "u3"),
    // t side
    ("t1", "t2"), ("t1", "v1"), ("t1", "v2"), ("t2", "v1"), ("t2", "v2"),
    ("t3", "t4"), ("t3", "v1"), ("t3", "v2"), ("t4", "v1"), ("t4", "v2"),
    ("t5", "t6"), ("t5", "v2"), ("t5", "v3"), ("t6", "v2"), ("t6", "v3"),
    ("t7", "t8"), ("t7", "v2"), ("t7", "v3"), ("t8", "v2"), ("t8", "v3"),
];

fn h_list(name: &str) -> Vec<u32> {
    match name {
        "x" => vec![A],
        "y" => vec![B],
        "u1" | "u2" | "u3" | "v1" | "v2" | "v3" => vec![A, B, 1, 2, 3, 4, 5],
        "w1" | "s1" | "t1" => vec![1, 2, 3],
        "w2" | "s2" | "t2" => vec![A, 1, 2, 3],
        "w3" | "s7" | "t7" => vec![3, 4, 5],
        "w4" | "s8" | "t8" => vec![B, 3, 4, 5],
        "s3" | "t3" => vec![1, 2, 4],
        "s4" | "t4" => vec![B, 1, 2, 4],
        "s5" | "t5" => vec![1, 2, 5],
        "s6" | "t6" => vec![A, 1, 2, 5],
        _ => unreachable!("unknown gadget vertex {name}"),
    }
}

fn h_index(name: &str) -> Vertex {
    H_NAMES.iter().position(|&n| n == name).expect("gadget vertex name")
}

/// Which structural check failed.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GadgetError {
    #[error("gadget check failed: {0}")]
    Check(&'static str),
    #[error("glued graph check failed: {0}")]
    Glued(&'static str),
    #[error("{0} copies cannot carry distinct ordered colour pairs")]
    TooManyCopies(usize),
    #[error("sharpness instance needs s >= 2 and k >= 1")]
    SharpnessParams,
    #[error("sharpness instance would have {0} vertices, above the limit {1}")]
    SharpnessSize(u128, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetH {
    pub graph: Graph,
    pub lists: ListAssignment,
}

impl GadgetH {
    pub fn vertex(name: &str) -> Vertex {
        h_index(name)
    }

    pub fn name(v: Vertex) -> &'static str {
        H_NAMES[v]
    }
}

/// Builds `H` with its lists and runs every check.
pub fn build_gadget_h() -> Result<GadgetH, GadgetError> {
    let edges: Vec<(Vertex, Vertex)> = H_EDGES.iter().map(|&(a, b)| (h_index(a), h_index(b))).collect();
    let mut graph = Graph::with_labels(H_NAMES.iter().map(|&n| String::from(n)).collect())
        .map_err(|_| GadgetError::Check("names are not distinct"))?;
    for (a, b) in edges {
        graph.add_edge(a, b).map_err(|_| GadgetError::Check("edge list is not simple"))?;
    }
    let lists = ListAssignment::new(H_NAMES.iter().map(|n| h_list(n)).collect());
    let h = GadgetH { graph, lists };
    check_gadget(&h)?;
    Ok(h)
}

fn check_gadget(h: &GadgetH) -> Result<(), GadgetError> {
    let g = &h.graph;
    let v = h_index;
    let check = |ok: bool, what: &'static str| if ok { Ok(()) } else { Err(GadgetError::Check(what)) };
    check(g.n() == 28, "vertex count")?;
    let clique = |names: &[&str]| {
        names.iter().enumerate().all(|(i, a)| names[i + 1..].iter().all(|b| g.has_edge(v(a), v(b))))
    };
    check(clique(&["u1", "v1", "w3", "w4"]), "{u1, v1, w3, w4} is not a K4")?;
    for tri in [["s1", "s2", "u1"], ["s3", "s4", "u1"], ["s5", "s6", "u2"], ["s7", "s8", "u2"]] {
        check(clique(&tri), "s-side triangle missing")?;
    }
    // the vertex forced in H_2 and H_3 sees the whole blocking set
    for n in ["u1", "s1", "s2", "s3", "s4"] {
        check(g.has_edge(v("u2"), v(n)), "u2 does not see all of H_2")?;
    }
    for n in ["u2", "s5", "s6", "s7", "s8"] {
        check(g.has_edge(v("u3"), v(n)), "u3 does not see all of H_3")?;
    }
    // a path vertex must not dodge a terminal colour
    for n in ["u1", "u2", "u3", "v1", "v2", "v3"] {
        check(g.has_edge(v("x"), v(n)) && g.has_edge(v("y"), v(n)), "path vertex misses a terminal")?;
    }
    // terminal colours appear exactly on the terminal's neighbours, and
    // list sizes are the truncated degrees
    for w in 2..28 {
        let l = h.lists.list(w);
        check(l.contains(&A) == g.has_edge(0, w), "colour a on a non-neighbour of x")?;
        check(l.contains(&B) == g.has_edge(1, w), "colour b on a non-neighbour of y")?;
        check(l.len() == g.degree(w).min(7), "list size differs from min{d, 7}")?;
    }
    // u <-> v, s <-> t is an automorphism preserving lists
    let mirror: Vec<Vertex> = H_NAMES
        .iter()
        .map(|n| {
            let m: String = n.chars().map(|c| match c {
                'u' => 'v',
                'v' => 'u',
                's' => 't',
                't' => 's',
                c => c,
            }).collect();
            v(&m)
        })
        .collect();
    check(
        g.edges().all(|(a, b)| g.has_edge(mirror[a], mirror[b])) && (0..28).all(|w| h.lists.list(w) == h.lists.list(mirror[w])),
        "mirror symmetry broken",
    )?;
    check(planar_embedding(g).is_ok(), "not planar")?;
    check(solve_list_colouring(g, &h.lists).is_none(), "H is L-colourable")?;
    Ok(())
}

/// Every list colouring of `g`, in lexicographic order of list positions.
pub fn all_list_colourings(g: &Graph, lists: &ListAssignment) -> Vec<Vec<u32>> {
    fn go(g: &Graph, lists: &ListAssignment, phi: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let v = phi.len();
        if v == g.n() {
            out.push(phi.clone());
            return;
        }
        for &c in lists.list(v) {
            if g.neighbours(v).iter().all(|&w| w >= v || phi[w] != c) {
                phi.push(c);
                go(g, lists, phi, out);
                phi.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, lists, &mut Vec::with_capacity(g.n()), &mut out);
    out
}

/// Induced sub-instance of `H` on the named vertices with the given lists.
pub fn gadget_piece(h: &GadgetH, names: &[&str], lists: &[&[u32]]) -> (Graph, ListAssignment) {
    let vs: Vec<Vertex> = names.iter().map(|n| h_index(n)).collect();
    let (sub, _) = h.graph.induced(&vs);
    (sub, ListAssignment::new(lists.iter().map(|l| l.to_vec()).collect()))
}

/// The three forcing steps of the argument, each by enumeration:
/// `H_1` forces `u1` or `v1` into `{1,2}`, `H_2` with `u1` in `{1,2}` forces
/// `u2 = 5`, and `H_3` with `u2 = 5` leaves no colour for `u3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingReport {
    pub h1_colourings: usize,
    pub h1_forced: bool,
    pub h2_colourings: usize,
    pub h2_forced: bool,
    pub h3_colourings: usize,
}

pub fn forcing_report(h: &GadgetH) -> ForcingReport {
    let five: &[u32] = &[1, 2, 3, 4, 5];
    let (g1, l1) = gadget_piece(
        h,
        &["u1", "v1", "w1", "w2", "w3", "w4"],
        &[five, five, &[1, 2, 3], &[1, 2, 3], &[3, 4, 5], &[3, 4, 5]],
    );
    let c1 = all_list_colourings(&g1, &l1);
    let h1_forced = c1.iter().all(|p| p[0] <= 2 || p[1] <= 2);

    let (g2, l2) = gadget_piece(
        h,
        &["u1", "u2", "s1", "s2", "s3", "s4"],
        &[&[1, 2], five, &[1, 2, 3], &[1, 2, 3], &[1, 2, 4], &[1, 2, 4]],
    );
    let c2 = all_list_colourings(&g2, &l2);
    let h2_forced = c2.iter().all(|p| p[1] == 5);

    let (g3, l3) = gadget_piece(
        h,
        &["u2", "u3", "s5", "s6", "s7", "s8"],
        &[&[5], five, &[1, 2, 5], &[1, 2, 5], &[3, 4, 5], &[3, 4, 5]],
    );
    let c3 = all_list_colourings(&g3, &l3);
    ForcingReport { h1_colourings: c1.len(), h1_forced, h2_colourings: c2.len(), h2_forced, h3_colourings: c3.len() }
}

/// The 42 ordered pairs of distinct terminal colours, in a fixed order.
pub fn terminal_pairs() -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(42);
    for &a in &TERMINAL_COLOURS {
        for &b in &TERMINAL_COLOURS {
            if a != b {
                out.push((a, b));
            }
        }
    }
    out
}

pub const COPIES: usize = TERMINAL_COLOURS.len() * (TERMINAL_COLOURS.len() - 1);

/// Copies of `H` sharing `x` and `y`, chained by `v3 u3'` edges, plus `xy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedG {
    pub graph: Graph,
    pub lists: ListAssignment,
    /// `copies[i][j]`: vertex of `G` playing gadget vertex `j` in copy `i`
    pub copies: Vec<Vec<Vertex>>,
    /// ordered terminal pair each copy is built to refute
    pub pairs: Vec<(u32, u32)>,
}

pub const X: Vertex = 0;
pub const Y: Vertex = 1;

/// The full gluing of 42 copies, validated.
pub fn build_glued_g(h: &GadgetH) -> Result<GluedG, GadgetError> {
    let all: Vec<usize> = (0..COPIES).collect();
    glue(h, &all)
}

/// Gluing of the copies for the listed pair indices (in order). With fewer
/// than 42 copies the graph is still validated but is no longer a
/// counterexample.
pub fn glue(h: &GadgetH, pair_indices: &[usize]) -> Result<GluedG, GadgetError> {
    let pairs_all = terminal_pairs();
    if pair_indices.iter().any(|&i| i >= pairs_all.len()) || pair_indices.len() > COPIES {
        return Err(GadgetError::TooManyCopies(pair_indices.len()));
    }
    let k = pair_indices.len();
    let n = 2 + 26 * k;
    let mut copies = Vec::with_capacity(k);
    for i in 0..k {
        let mut map = vec![X, Y];
        map.extend((0..26).map(|j| 2 + 26 * i + j));
        copies.push(map);
    }
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(77 * k + k);
    for map in &copies {
        edges.extend(h.graph.edges().map(|(a, b)| (map[a], map[b])));
    }
    let (u3, v3) = (h_index("u3"), h_index("v3"));
    for i in 1..k {
        edges.push((copies[i - 1][v3], copies[i][u3]));
    }
    edges.push((X, Y));
    let graph = Graph::from_edges(n, &edges).map_err(|_| GadgetError::Glued("edge list is not simple"))?;

    let mut lists = vec![Vec::new(); n];
    lists[X] = TERMINAL_COLOURS.to_vec();
    lists[Y] = TERMINAL_COLOURS.to_vec();
    let pairs: Vec<(u32, u32)> = pair_indices.iter().map(|&i| pairs_all[i]).collect();
    for (map, &(pa, pb)) in copies.iter().zip(&pairs) {
        for j in 2..28 {
            lists[map[j]] = h
                .lists
                .list(j)
                .iter()
                .map(|&c| if c == A { pa } else if c == B { pb } else { c })
                .collect();
        }
    }
    let glued = GluedG { graph, lists: ListAssignment::new(lists), copies, pairs };
    check_glued(&glued)?;
    Ok(glued)
}

fn check_glued(g: &GluedG) -> Result<(), GadgetError> {
    let gr = &g.graph;
    let check = |ok: bool, what: &'static str| if ok { Ok(()) } else { Err(GadgetError::Glued(what)) };
    check((0..gr.n()).all(|v| g.lists.list(v).len() == gr.degree(v).min(7)), "list size differs from min{d, 7}")?;
    check(gr.m() < gr.n() * (gr.n() - 1) / 2, "complete")?;
    check(is_3_connected(gr), "not 3-connected")?;
    check(planar_embedding(gr).is_ok(), "not planar")?;
    Ok(())
}

/// Outcome of one terminal pair on its designated copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub index: usize,
    pub pair: (u32, u32),
    pub copy: usize,
    /// an extension of the pair to the copy, if one exists
    pub extension: Option<Vec<u32>>,
}

impl PairCheck {
    pub fn refuted(&self) -> bool {
        self.extension.is_none()
    }
}

/// Tries to extend the terminal colouring `pair` to copy `copy` alone
/// (chain edges ignored; they only add constraints).
pub fn extend_to_copy(g: &GluedG, copy: usize, pair: (u32, u32)) -> Option<Vec<u32>> {
    extend_to_copy_fixed(g, copy, pair, None)
}

fn extend_to_copy_fixed(g: &GluedG, copy: usize, pair: (u32, u32), ends: Option<(u32, u32)>) -> Option<Vec<u32>> {
    let map = &g.copies[copy];
    let (sub, order) = g.graph.induced(map);
    let (u3, v3) = (map[h_index("u3")], map[h_index("v3")]);
    let lists: Vec<Vec<u32>> = order
        .iter()
        .map(|&w| match (w, ends) {
            (X, _) => vec![pair.0],
            (Y, _) => vec![pair.1],
            (w, Some((cu, _))) if w == u3 => vec![cu],
            (w, Some((_, cv))) if w == v3 => vec![cv],
            _ => g.lists.list(w).to_vec(),
        })
        .collect();
    let lists = ListAssignment::new(lists);
    solve_list_colouring(&sub, &lists).map(|phi| {
        let mut full = vec![0; map.len()];
        for (i, &w) in order.iter().enumerate() {
            let j = map.iter().position(|&m| m == w).unwrap();
            full[j] = phi[i];
        }
        full
    })
}

/// Checks pair `index` on the copy built for it.
pub fn check_pair(g: &GluedG, index: usize) -> PairCheck {
    let pair = terminal_pairs()[index];
    let copy = g.pairs.iter().position(|&p| p == pair);
    match copy {
        Some(copy) => PairCheck { index, pair, copy, extension: extend_to_copy(g, copy, pair) },
        None => PairCheck { index, pair, copy: usize::MAX, extension: Some(Vec::new()) },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofReport {
    pub checks: Vec<PairCheck>,
}

impl ProofReport {
    pub fn refuted(&self) -> usize {
        self.checks.iter().filter(|c| c.refuted()).count()
    }

    pub fn all_refuted(&self) -> bool {
        self.checks.len() == COPIES && self.refuted() == COPIES
    }
}

/// All 42 pair checks, sequentially. The std crate runs them in parallel.
pub fn verify_not_7_truncated_choosable(g: &GluedG) -> ProofReport {
    ProofReport { checks: (0..COPIES).map(|i| check_pair(g, i)).collect() }
}

/// A full list colouring of `g` with the terminals coloured `pair`, found
/// copy by copy along the chain, or `None`.
pub fn extend_pair(g: &GluedG, pair: (u32, u32)) -> Option<Vec<u32>> {
    let (u3, v3) = (h_index("u3"), h_index("v3"));
    let k = g.copies.len();
    // feasible (u3, v3) colours per copy
    let mut feasible: Vec<Vec<(u32, u32)>> = Vec::with_capacity(k);
    for (i, map) in g.copies.iter().enumerate() {
        let mut ok = Vec::new();
        for &cu in g.lists.list(map[u3]) {
            for &cv in g.lists.list(map[v3]) {
                if extend_to_copy_fixed(g, i, pair, Some((cu, cv))).is_some() {
                    ok.push((cu, cv));
                }
            }
        }
        feasible.push(ok);
    }
    // chain: colour of v3 in copy i must differ from u3 in copy i + 1
    let mut reach: Vec<BTreeSet<(u32, u32)>> = Vec::with_capacity(k);
    for i in 0..k {
        let prev: BTreeSet<u32> = if i == 0 { BTreeSet::new() } else { reach[i - 1].iter().map(|&(_, cv)| cv).collect() };
        let here: BTreeSet<(u32, u32)> = feasible[i]
            .iter()
            .copied()
            .filter(|&(cu, _)| i == 0 || prev.iter().any(|&cv| cv != cu))
            .collect();
        if here.is_empty() {
            return None;
        }
        reach.push(here);
    }
    let mut ends = vec![(0, 0); k];
    ends[k - 1] = *reach[k - 1].iter().next()?;
    for i in (0..k - 1).rev() {
        let next_u = ends[i + 1].0;
        ends[i] = *reach[i].iter().find(|&&(_, cv)| cv != next_u)?;
    }
    let mut phi = vec![0u32; g.graph.n()];
    phi[X] = pair.0;
    phi[Y] = pair.1;
    for (i, map) in g.copies.iter().enumerate() {
        let part = extend_to_copy_fixed(g, i, pair, Some(ends[i]))?;
        for (j, &w) in map.iter().enumerate() {
            phi[w] = part[j];
        }
    }
    debug_assert!(is_list_colouring(&g.graph, &g.lists, &phi));
    Some(phi)
}

/// `K_{s-1, k^{s-1}}` with lists `L(v_i) = [k] x {i}` and
/// `L(u_x) = {(x_i, i)}`. Colour `(c, i)` is encoded as `(i - 1) k + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessInstance {
    pub s: usize,
    pub k: usize,
    pub graph: Graph,
    pub lists: ListAssignment,
}

pub fn build_sharpness_instance(s: usize, k: usize, max_vertices: usize) -> Result<SharpnessInstance, GadgetError> {
    if s < 2 || k < 1 {
        return Err(GadgetError::SharpnessParams);
    }
    let b = (k as u128).checked_pow((s - 1) as u32).unwrap_or(u128::MAX);
    let total = b.saturating_add((s - 1) as u128);
    if total > max_vertices as u128 {
        return Err(GadgetError::SharpnessSize(total, max_vertices));
    }
    let a = s - 1;
    let b = b as usize;
    let n = a + b;
    let colour = |c: usize, i: usize| (i * k + c) as u32;
    let mut lists: Vec<Vec<u32>> = (0..a).map(|i| (1..=k).map(|c| colour(c, i)).collect()).collect();
    let mut edges = Vec::with_capacity(a * b);
    for idx in 0..b {
        // base-k digits of idx are x_1 .. x_{s-1} (each shifted to 1..=k)
        let mut rest = idx;
        let mut l = Vec::with_capacity(a);
        for i in 0..a {
            l.push(colour(rest % k + 1, i));
            rest /= k;
            edges.push((i, a + idx));
        }
        lists.push(l);
    }
    let graph = Graph::from_edges(n, &edges).expect("bipartite edges are simple");
    Ok(SharpnessInstance { s, k, graph, lists: ListAssignment::new(lists) })
}
