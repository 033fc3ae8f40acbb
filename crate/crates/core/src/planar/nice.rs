//! Nice spanning subgraphs of the vertex-face incidence graph.
//!
//! `H` is nice for the anchor `v*` (a vertex on the outer face) when every
//! graph vertex has at most two `H`-faces, the outer face keeps all its
//! vertices, `v*` keeps exactly one face, every face loses at most two of
//! its vertices, and when a finite face loses two vertices both lie on a
//! cycle through vertices of that face which encloses the face.
//!
//! The construction recurses on induced subgraphs: components, a cut
//! vertex, a cycle, an ear of an outerplane block, or an interior vertex.
//! Faces are named as in [`Regions`]. Every result is re-checked by
//! [`check_nice`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::embedding::Embedding;
use super::regions::Regions;
use crate::blocks::articulation_points_within;
use crate::graph::Vertex;

pub type Incidence = BTreeSet<(Vertex, usize)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceSubgraph {
    /// the vertex set `S` of the embedded subgraph, sorted
    pub vertices: Vec<Vertex>,
    pub anchor: Vertex,
    /// outer face of `G[S]`
    pub outer: usize,
    /// `(vertex, face)` pairs kept
    pub edges: Incidence,
    /// Set when the recursive construction failed and the subgraph was
    /// found by [`search_nice`] instead.
    pub construction_error: Option<NiceError>,
}

impl NiceSubgraph {
    pub fn has(&self, v: Vertex, face: usize) -> bool {
        self.edges.contains(&(v, face))
    }

    pub fn faces_of(&self, v: Vertex) -> Vec<usize> {
        self.edges.range((v, 0)..(v + 1, 0)).map(|&(_, f)| f).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NiceViolation {
    #[error("({v}, face {face}) is not an incidence")]
    NotIncidence { v: Vertex, face: usize },
    #[error("vertex {v} has {degree} faces")]
    VertexDegree { v: Vertex, degree: usize },
    #[error("outer face keeps {have} of {want} vertices")]
    OuterDegree { have: usize, want: usize },
    #[error("anchor keeps {0} faces")]
    AnchorDegree(usize),
    #[error("face {face} loses {missing} vertices")]
    FaceDeficit { face: usize, missing: usize },
    #[error("face {face}: no cycle through {v1} and {v2} encloses it")]
    NoEnclosingCycle { face: usize, v1: Vertex, v2: Vertex },
    #[error("face {face}: cycle search too large")]
    Unverifiable { face: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NiceError {
    #[error("vertex {0} is not in the subgraph")]
    NotInSubgraph(Vertex),
    #[error("vertex {0} is not on the outer face")]
    NotOnOuterFace(Vertex),
    #[error("construction failed: {0}")]
    Recursion(&'static str),
    #[error("construction is not nice: {0}")]
    Invalid(#[from] NiceViolation),
}

/// Nice subgraph of `H(G)` for the whole embedded graph.
pub fn nice_subgraph(emb: &Embedding, anchor: Vertex) -> Result<NiceSubgraph, NiceError> {
    let all: Vec<Vertex> = (0..emb.n()).collect();
    nice_subgraph_within(emb, &all, anchor)
}

/// Nice subgraph of `H(G[S])`, faces of `G[S]` taken from the drawing of
/// `G`.
pub fn nice_subgraph_within(emb: &Embedding, s: &[Vertex], anchor: Vertex) -> Result<NiceSubgraph, NiceError> {
    let mut vs = s.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if vs.binary_search(&anchor).is_err() {
        return Err(NiceError::NotInSubgraph(anchor));
    }
    let reg = Regions::new(emb, &vs);
    if !reg.faces_at(emb, anchor).contains(&reg.outer()) {
        return Err(NiceError::NotOnOuterFace(anchor));
    }
    let built = Builder { emb }
        .build(&vs, anchor)
        .and_then(|edges| check_nice(emb, &vs, anchor, &edges).map(|_| edges).map_err(NiceError::from));
    let (edges, construction_error) = match built {
        Ok(edges) => (edges, None),
        Err(e) => {
            let flow = flow_nice(emb, &vs, anchor).filter(|h| check_nice(emb, &vs, anchor, h).is_ok());
            match flow.or_else(|| search_nice(emb, &vs, anchor)) {
                Some(edges) => {
                    check_nice(emb, &vs, anchor, &edges)?;
                    (edges, Some(e))
                }
                None => return Err(e),
            }
        }
    };
    Ok(NiceSubgraph { vertices: vs, anchor, outer: reg.outer(), edges, construction_error })
}

/// Drops as a flow problem. A finite face bounded by a simple cycle lies
/// inside that cycle, so it may lose any two of its vertices; every other
/// finite face may lose one. Each vertex must drop all but its allowed
/// number of finite faces.
pub fn flow_nice(emb: &Embedding, s: &[Vertex], anchor: Vertex) -> Option<Incidence> {
    let g = emb.graph();
    let reg = Regions::new(emb, s);
    let outer = reg.outer();
    let bounds = reg.boundaries(emb);
    let face_ids: Vec<usize> = bounds.keys().copied().filter(|&f| f != outer).collect();
    let face_index: BTreeMap<usize, usize> = face_ids.iter().enumerate().map(|(i, &f)| (f, i)).collect();

    // sides of each edge of G[S]
    let mut side_edges = vec![0usize; face_ids.len()];
    let mut two_sided = vec![false; face_ids.len()];
    let mut deg_on = BTreeMap::<(usize, Vertex), usize>::new();
    for &u in s {
        for &v in g.neighbours(u) {
            if u < v && reg.contains(v) {
                let a = reg.class(emb.face_of_dart(u, v));
                let b = reg.class(emb.face_of_dart(v, u));
                for f in [a, b] {
                    if let Some(&i) = face_index.get(&f) {
                        if a == b {
                            two_sided[i] = true;
                        }
                        side_edges[i] += 1;
                        *deg_on.entry((i, u)).or_default() += 1;
                        *deg_on.entry((i, v)).or_default() += 1;
                    }
                }
            }
        }
    }
    let cap: Vec<usize> = face_ids
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let vs = &bounds[f];
            let simple = !two_sided[i]
                && side_edges[i] == vs.len()
                && vs.len() >= 3
                && vs.iter().all(|&v| deg_on.get(&(i, v)) == Some(&2));
            if simple && one_walk(emb, &reg, vs, *f) {
                2
            } else {
                1
            }
        })
        .collect();

    // network: source, vertices of S, faces, sink
    let nv = s.len();
    let nf = face_ids.len();
    let (src, sink) = (nv + nf, nv + nf + 1);
    let mut net = Net::new(nv + nf + 2);
    let mut need = 0;
    let mut arcs = Vec::new();
    for (i, &v) in s.iter().enumerate() {
        let at = reg.faces_at(emb, v);
        let on_outer = at.contains(&outer);
        let finite: Vec<usize> = at.into_iter().filter(|&f| f != outer).collect();
        let keep = if v == anchor { 0 } else { 2 - on_outer as usize };
        let r = finite.len().saturating_sub(keep);
        if r == 0 {
            continue;
        }
        need += r;
        net.add(src, i, r);
        for f in finite {
            let j = face_index[&f];
            arcs.push((net.add(i, nv + j, 1), v, f));
        }
    }
    for (j, &c) in cap.iter().enumerate() {
        net.add(nv + j, sink, c);
    }
    if net.max_flow(src, sink) < need {
        return None;
    }
    let mut edges: Incidence = reg.incidence(emb).into_iter().collect();
    for (a, v, f) in arcs {
        if net.cap[a] == 0 {
            edges.remove(&(v, f));
        }
    }
    Some(edges)
}

/// The face's boundary edges form a single closed walk.
fn one_walk(emb: &Embedding, reg: &Regions, vs: &[Vertex], face: usize) -> bool {
    let g = emb.graph();
    let mut seen = BTreeSet::new();
    let mut stack = vec![vs[0]];
    seen.insert(vs[0]);
    while let Some(u) = stack.pop() {
        for &v in g.neighbours(u) {
            if reg.contains(v)
                && !seen.contains(&v)
                && (reg.class(emb.face_of_dart(u, v)) == face || reg.class(emb.face_of_dart(v, u)) == face)
            {
                seen.insert(v);
                stack.push(v);
            }
        }
    }
    seen.len() == vs.len()
}

/// Residual network for Edmonds-Karp.
struct Net {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl Net {
    fn new(n: usize) -> Self {
        Net { head: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new() }
    }

    /// Returns the id of the forward arc; its reverse is `id ^ 1`.
    fn add(&mut self, a: usize, b: usize, c: usize) -> usize {
        let id = self.to.len();
        self.head[a].push(id);
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(id + 1);
        self.to.push(a);
        self.cap.push(0);
        id
    }

    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; self.head.len()];
            let mut queue = alloc::collections::VecDeque::from([s]);
            via[s] = usize::MAX - 1;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.head[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && via[v] == usize::MAX {
                        via[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if via[t] == usize::MAX {
                return total;
            }
            let mut push = usize::MAX;
            let mut v = t;
            while v != s {
                let a = via[v];
                push = push.min(self.cap[a]);
                v = self.to[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                v = self.to[a ^ 1];
            }
            total += push;
        }
    }
}

const SEARCH_NODES: usize = 1 << 22;

/// Exhaustive search for a nice subgraph: each vertex drops just enough
/// finite faces, each face absorbs at most two drops, and a face with two
/// drops needs an enclosing cycle through both.
pub fn search_nice(emb: &Embedding, s: &[Vertex], anchor: Vertex) -> Option<Incidence> {
    let reg = Regions::new(emb, s);
    let outer = reg.outer();
    let bounds = reg.boundaries(emb);
    let mut todo: Vec<(Vertex, Vec<usize>, usize)> = Vec::new();
    for &v in s {
        let at = reg.faces_at(emb, v);
        let on_outer = at.contains(&outer);
        let finite: Vec<usize> = at.into_iter().filter(|&f| f != outer).collect();
        let keep = if v == anchor { 0 } else { 2 - on_outer as usize };
        if finite.len() > keep {
            let r = finite.len() - keep;
            todo.push((v, finite, r));
        }
    }
    todo.sort_by_key(|(v, fs, r)| (core::cmp::Reverse(*r), fs.len(), *v));

    struct St<'a> {
        emb: &'a Embedding,
        bounds: &'a BTreeMap<usize, Vec<Vertex>>,
        todo: &'a [(Vertex, Vec<usize>, usize)],
        drops: BTreeMap<usize, Vec<Vertex>>,
        memo: BTreeMap<(usize, Vertex, Vertex), bool>,
        nodes: usize,
    }
    impl St<'_> {
        fn pair_ok(&mut self, face: usize, a: Vertex, b: Vertex) -> bool {
            let key = (face, a.min(b), a.max(b));
            if let Some(&r) = self.memo.get(&key) {
                return r;
            }
            let r = enclosing_cycle(self.emb, &self.bounds[&face], a, b, face) == Some(true);
            self.memo.insert(key, r);
            r
        }

        fn rec(&mut self, i: usize) -> Option<bool> {
            self.nodes += 1;
            if self.nodes > SEARCH_NODES {
                return None;
            }
            if i == self.todo.len() {
                return Some(true);
            }
            let (v, ref faces, r) = self.todo[i];
            let faces = faces.clone();
            let mut pick = Vec::new();
            self.choose(i, v, &faces, r, 0, &mut pick)
        }

        fn choose(&mut self, i: usize, v: Vertex, faces: &[usize], r: usize, from: usize, pick: &mut Vec<usize>) -> Option<bool> {
            if pick.len() == r {
                return self.rec(i + 1);
            }
            for j in from..faces.len() {
                let f = faces[j];
                let have = self.drops.get(&f).map_or(0, |d| d.len());
                if have >= 2 {
                    continue;
                }
                if have == 1 {
                    let other = self.drops[&f][0];
                    if !self.pair_ok(f, other, v) {
                        continue;
                    }
                }
                self.drops.entry(f).or_default().push(v);
                pick.push(f);
                let r2 = self.choose(i, v, faces, r, j + 1, pick);
                if r2 != Some(false) {
                    // keep the drops of a solution
                    return r2;
                }
                pick.pop();
                self.drops.get_mut(&f).unwrap().pop();
            }
            Some(false)
        }
    }

    let mut st = St { emb, bounds: &bounds, todo: &todo, drops: BTreeMap::new(), memo: BTreeMap::new(), nodes: 0 };
    if st.rec(0) != Some(true) {
        return None;
    }
    let mut edges: Incidence = reg.incidence(emb).into_iter().collect();
    for (f, vs) in &st.drops {
        for &v in vs {
            edges.remove(&(v, *f));
        }
    }
    Some(edges)
}

struct Builder<'a> {
    emb: &'a Embedding,
}

impl Builder<'_> {
    fn build(&self, s: &[Vertex], anchor: Vertex) -> Result<Incidence, NiceError> {
        let emb = self.emb;
        let g = emb.graph();
        let reg = Regions::new(emb, s);
        if s.len() == 1 {
            return Ok([(s[0], reg.outer())].into_iter().collect());
        }
        let mut alive = vec![false; g.n()];
        for &v in s {
            alive[v] = true;
        }

        let comps = g.components_within(&alive);
        if comps.len() > 1 {
            let mut out = Incidence::new();
            for mut comp in comps {
                comp.sort_unstable();
                let creg = Regions::new(emb, &comp);
                let a = if comp.contains(&anchor) {
                    anchor
                } else {
                    *comp
                        .iter()
                        .find(|&&v| creg.faces_at(emb, v).contains(&creg.outer()))
                        .ok_or(NiceError::Recursion("component without outer vertex"))?
                };
                let sub = self.build(&comp, a)?;
                out.extend(self.lift(&sub, &creg, &[], &reg)?);
            }
            return Ok(out);
        }

        let cuts = articulation_points_within(g, &alive);
        if let Some(&u) = cuts.first() {
            return self.cut_vertex(s, anchor, u, &reg, &mut alive);
        }

        let bounds = reg.boundaries(emb);
        let outer = reg.outer();
        let mut full: Incidence = reg.incidence(emb).into_iter().collect();
        if bounds.len() == 1 {
            // a single edge
            return Ok(full);
        }
        let deg_s = |v: Vertex| g.neighbours(v).iter().filter(|&&w| alive[w]).count();
        if s.iter().all(|&v| deg_s(v) == 2) {
            let inner = *bounds.keys().find(|&&f| f != outer).expect("cycle has a finite face");
            full.remove(&(anchor, inner));
            return Ok(full);
        }
        if bounds[&outer].len() == s.len() {
            self.ear(s, anchor, &reg, &bounds, &alive)
        } else {
            self.interior(s, anchor, &reg, &bounds)
        }
    }

    fn cut_vertex(
        &self,
        s: &[Vertex],
        anchor: Vertex,
        u: Vertex,
        reg: &Regions,
        alive: &mut [bool],
    ) -> Result<Incidence, NiceError> {
        let emb = self.emb;
        let g = emb.graph();
        alive[u] = false;
        let parts = g.components_within(alive);
        alive[u] = true;
        let mut chosen = None;
        for part in parts {
            if part.contains(&anchor) {
                continue;
            }
            let mut g2 = part.clone();
            g2.push(u);
            g2.sort_unstable();
            let r2 = Regions::new(emb, &g2);
            // the piece must not enclose anything else
            let encloses = s
                .iter()
                .filter(|v| g2.binary_search(v).is_err())
                .any(|&w| r2.faces_at(emb, w) != [r2.outer()]);
            if !encloses {
                chosen = Some((part, g2, r2));
                break;
            }
        }
        let (part, g2, r2) = chosen.ok_or(NiceError::Recursion("every piece at the cut vertex encloses another"))?;
        let g1: Vec<Vertex> = s.iter().copied().filter(|v| !part.contains(v)).collect();
        let r1 = Regions::new(emb, &g1);
        let h1 = self.build(&g1, anchor)?;
        let mut h2 = self.build(&g2, u)?;
        if !h2.remove(&(u, r2.outer())) {
            return Err(NiceError::Recursion("cut vertex lost its outer face"));
        }
        let around_part = {
            let c = r1.faces_at(emb, part[0]);
            if c.len() != 1 {
                return Err(NiceError::Recursion("piece not inside one face"));
            }
            c[0]
        };
        let mut out = self.lift(&h1, &r1, &[(&r2, r2.outer())], reg)?;
        out.extend(self.lift(&h2, &r2, &[(&r1, around_part)], reg)?);
        Ok(out)
    }

    fn ear(
        &self,
        s: &[Vertex],
        anchor: Vertex,
        reg: &Regions,
        bounds: &BTreeMap<usize, Vec<Vertex>>,
        alive: &[bool],
    ) -> Result<Incidence, NiceError> {
        let emb = self.emb;
        let g = emb.graph();
        let outer = reg.outer();
        let deg_s = |v: Vertex| g.neighbours(v).iter().filter(|&&w| alive[w]).count();
        let mut found = None;
        for (&face, vs) in bounds {
            if face == outer {
                continue;
            }
            let big: Vec<Vertex> = vs.iter().copied().filter(|&v| deg_s(v) >= 3).collect();
            if big.len() != 2 || !g.has_edge(big[0], big[1]) {
                continue;
            }
            let (a, b) = (big[0], big[1]);
            if reg.class(emb.face_of_dart(a, b)) != face && reg.class(emb.face_of_dart(b, a)) != face {
                continue;
            }
            let interior: Vec<Vertex> = vs.iter().copied().filter(|&v| v != a && v != b).collect();
            if interior.contains(&anchor) {
                continue;
            }
            found = Some((face, interior));
            break;
        }
        let (face, interior) = found.ok_or(NiceError::Recursion("no ear avoiding the anchor"))?;
        let rest: Vec<Vertex> = s.iter().copied().filter(|v| !interior.contains(v)).collect();
        let r = Regions::new(emb, &rest);
        let sub = self.build(&rest, anchor)?;
        let kept: Incidence = sub.into_iter().filter(|&(_, f)| f != r.outer()).collect();
        let mut out = self.lift(&kept, &r, &[], reg)?;
        out.extend(s.iter().map(|&x| (x, outer)));
        out.extend(interior.iter().map(|&x| (x, face)));
        Ok(out)
    }

    fn interior(
        &self,
        s: &[Vertex],
        anchor: Vertex,
        reg: &Regions,
        bounds: &BTreeMap<usize, Vec<Vertex>>,
    ) -> Result<Incidence, NiceError> {
        let emb = self.emb;
        let outer = reg.outer();
        let u = *s.iter().find(|v| bounds[&outer].binary_search(v).is_err()).expect("interior vertex");
        let rest: Vec<Vertex> = s.iter().copied().filter(|&v| v != u).collect();
        let r = Regions::new(emb, &rest);
        let sub = self.build(&rest, anchor)?;
        let theta_u = match r.faces_at(emb, u).as_slice() {
            [c] => *c,
            _ => return Err(NiceError::Recursion("interior vertex not inside one face")),
        };
        let nb: Vec<Vertex> = emb.rotation(u).iter().copied().filter(|&w| reg.contains(w)).collect();
        let k = nb.len();
        // face at the corner (nb[t], u, nb[t+1])
        let theta: Vec<usize> = (0..k).map(|t| reg.class(emb.face_of_dart(u, nb[(t + 1) % k]))).collect();
        let paths: Vec<Vec<Vertex>> = (0..k)
            .map(|t| bounds[&theta[t]].iter().copied().filter(|&x| x != u && x != nb[t]).collect())
            .collect();
        let around: Vec<Vertex> = r.boundaries(emb).remove(&theta_u).unwrap_or_default();
        let z: Vec<Vertex> = around.iter().copied().filter(|&x| !sub.contains(&(x, theta_u))).collect();
        if z.len() > 2 {
            return Err(NiceError::Recursion("more than two vertices missing around the interior vertex"));
        }
        let kept: Incidence = sub.into_iter().filter(|&(_, f)| f != theta_u).collect();
        let mut out = self.lift(&kept, &r, &[], reg)?;
        for t in 0..k {
            out.extend(paths[t].iter().map(|&x| (x, theta[t])));
        }
        let idx = |x: Vertex| {
            (0..k)
                .find(|&t| paths[t].contains(&x))
                .ok_or(NiceError::Recursion("missing vertex on no boundary path"))
        };
        match z.as_slice() {
            [] => {
                out.insert((u, theta[0]));
            }
            &[z1] => {
                let i = idx(z1)?;
                out.insert((u, theta[i]));
                out.remove(&(z1, theta[i]));
            }
            &[z1, z2] => {
                let (i, j) = (idx(z1)?, idx(z2)?);
                if i != j {
                    out.insert((u, theta[i]));
                    out.insert((u, theta[j]));
                    out.remove(&(z1, theta[i]));
                    out.remove(&(z2, theta[j]));
                } else {
                    let prev = (i + k - 1) % k;
                    out.remove(&(z1, theta[i]));
                    out.remove(&(z2, theta[i]));
                    out.remove(&(nb[i], theta[prev]));
                    out.insert((u, theta[i]));
                    out.insert((u, theta[prev]));
                    out.insert((nb[i], theta[i]));
                }
            }
            _ => unreachable!(),
        }
        Ok(out)
    }

    /// Moves `(v, face of piece)` to the face of the parent containing the
    /// corners of `v` in that face which also lie in the given faces of the
    /// other pieces.
    fn lift(
        &self,
        edges: &Incidence,
        piece: &Regions,
        others: &[(&Regions, usize)],
        parent: &Regions,
    ) -> Result<Incidence, NiceError> {
        let mut out = Incidence::new();
        for &(v, phi) in edges {
            let mut targets = BTreeSet::new();
            for b in self.emb.faces_at(v) {
                if piece.class(b) == phi && others.iter().all(|(r, c)| r.class(b) == *c) {
                    targets.insert(parent.class(b));
                }
            }
            if targets.len() != 1 {
                return Err(NiceError::Recursion("face of a piece does not lift to one face"));
            }
            out.insert((v, targets.into_iter().next().unwrap()));
        }
        Ok(out)
    }
}

/// Checks the definition directly.
pub fn check_nice(emb: &Embedding, s: &[Vertex], anchor: Vertex, edges: &Incidence) -> Result<(), NiceViolation> {
    let reg = Regions::new(emb, s);
    let full: Incidence = reg.incidence(emb).into_iter().collect();
    for &(v, face) in edges {
        if !full.contains(&(v, face)) {
            return Err(NiceViolation::NotIncidence { v, face });
        }
    }
    for &v in s {
        let degree = edges.range((v, 0)..(v + 1, 0)).count();
        if degree > 2 {
            return Err(NiceViolation::VertexDegree { v, degree });
        }
    }
    let bounds = reg.boundaries(emb);
    let outer = reg.outer();
    let have = bounds[&outer].iter().filter(|&&v| edges.contains(&(v, outer))).count();
    if have != bounds[&outer].len() {
        return Err(NiceViolation::OuterDegree { have, want: bounds[&outer].len() });
    }
    let d = edges.range((anchor, 0)..(anchor + 1, 0)).count();
    if d != 1 {
        return Err(NiceViolation::AnchorDegree(d));
    }
    for (&face, vs) in &bounds {
        let missing: Vec<Vertex> = vs.iter().copied().filter(|&v| !edges.contains(&(v, face))).collect();
        if missing.len() > 2 {
            return Err(NiceViolation::FaceDeficit { face, missing: missing.len() });
        }
        if face != outer && missing.len() == 2 {
            let (v1, v2) = (missing[0], missing[1]);
            match enclosing_cycle(emb, vs, v1, v2, face) {
                Some(true) => {}
                Some(false) => return Err(NiceViolation::NoEnclosingCycle { face, v1, v2 }),
                None => return Err(NiceViolation::Unverifiable { face }),
            }
        }
    }
    Ok(())
}

const CYCLE_SEARCH_NODES: usize = 1 << 20;

/// Whether some cycle on vertices of `within`, through `v1` and `v2`, has
/// `face` in its interior. `None` when the search is too large.
fn enclosing_cycle(emb: &Embedding, within: &[Vertex], v1: Vertex, v2: Vertex, face: usize) -> Option<bool> {
    let g = emb.graph();
    let mut allowed = vec![false; g.n()];
    for &v in within {
        allowed[v] = true;
    }
    let mut path = vec![v1];
    let mut on = vec![false; g.n()];
    on[v1] = true;
    let mut nodes = 0usize;

    fn rec(
        emb: &Embedding,
        allowed: &[bool],
        path: &mut Vec<Vertex>,
        on: &mut [bool],
        v2: Vertex,
        face: usize,
        nodes: &mut usize,
    ) -> Option<bool> {
        *nodes += 1;
        if *nodes > CYCLE_SEARCH_NODES {
            return None;
        }
        let g = emb.graph();
        let last = *path.last().unwrap();
        if path.len() >= 3 && on[v2] && g.has_edge(last, path[0]) {
            let reg = Regions::new(emb, path);
            if reg.class(face) != reg.outer() {
                return Some(true);
            }
        }
        for &x in g.neighbours(last) {
            if !allowed[x] || on[x] {
                continue;
            }
            path.push(x);
            on[x] = true;
            let r = rec(emb, allowed, path, on, v2, face, nodes);
            path.pop();
            on[x] = false;
            match r {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
    rec(emb, &allowed, &mut path, &mut on, v2, face, &mut nodes)
}
