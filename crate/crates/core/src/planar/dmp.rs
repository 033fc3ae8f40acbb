//! Demoucron–Malgrange–Pertuiset embedding of each block, glued at cut
//! vertices by concatenating rotations.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::embedding::{Embedding, EmbeddingError};
use crate::blocks::block_decomposition;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PlanarityError {
    #[error("graph is not planar")]
    NonPlanar,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

/// Some plane embedding of `g`; the outer walk is the longest one.
pub fn planar_embedding(g: &Graph) -> Result<Embedding, PlanarityError> {
    let n = g.n();
    let mut rotation: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for block in block_decomposition(g).blocks {
        if block.len() < 2 {
            continue;
        }
        let (h, map) = g.induced(&block);
        let local = if h.n() == 2 { vec![vec![1], vec![0]] } else { embed_biconnected(&h)? };
        for (i, rot) in local.into_iter().enumerate() {
            rotation[map[i]].extend(rot.into_iter().map(|w| map[w]));
        }
    }
    let e = Embedding::new(g, rotation.clone(), 0)?;
    if !g.is_connected() {
        return Ok(e);
    }
    // for a connected graph walk index = face index
    let longest = (0..e.face_count())
        .max_by_key(|&i| (e.faces()[i].walks[0].len(), core::cmp::Reverse(i)))
        .unwrap_or(0);
    Ok(Embedding::new(g, rotation, longest)?)
}

/// Rotation system of a 2-connected graph with at least three vertices.
fn embed_biconnected(h: &Graph) -> Result<Vec<Vec<Vertex>>, PlanarityError> {
    let n = h.n();
    let cycle = find_cycle(h);
    let mut in_h = vec![false; n];
    let mut edges: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        edges.insert(key(a, b));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<Vertex>> = vec![cycle, rev];

    while edges.len() < h.m() {
        let frags = fragments(h, &in_h, &edges);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, fr) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&i| fr.attach.iter().all(|a| faces[i].contains(a)))
                .collect();
            match admissible.len() {
                0 => return Err(PlanarityError::NonPlanar),
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("some fragment remains");
        let path = fragment_path(h, &in_h, &frags[fi]);
        for w in path.windows(2) {
            edges.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let (f1, f2) = split_face(&faces[face], &path);
        faces[face] = f1;
        faces.push(f2);
    }

    // succ_v(prev) = next along every face walk
    let mut succ: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (p, v, q) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            succ[v].push((p, q));
        }
    }
    let mut rotation = vec![Vec::new(); n];
    for v in 0..n {
        let start = h.neighbours(v)[0];
        let mut cur = start;
        loop {
            rotation[v].push(cur);
            cur = succ[v].iter().find(|&&(p, _)| p == cur).map(|&(_, q)| q).ok_or(PlanarityError::NonPlanar)?;
            if cur == start {
                break;
            }
            if rotation[v].len() > h.degree(v) {
                return Err(PlanarityError::NonPlanar);
            }
        }
    }
    Ok(rotation)
}

fn key(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    (a.min(b), a.max(b))
}

/// Any cycle, via a DFS back edge.
fn find_cycle(h: &Graph) -> Vec<Vertex> {
    let n = h.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        if *i == h.degree(v) {
            stack.pop();
            continue;
        }
        let w = h.neighbours(v)[*i];
        *i += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cyc = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cyc.push(x);
            }
            return cyc;
        }
    }
    unreachable!("2-connected graphs have cycles")
}

struct Fragment {
    attach: Vec<Vertex>,
    /// inner vertices (empty for a single chord)
    inner: Vec<Vertex>,
    chord: Option<(Vertex, Vertex)>,
}

fn fragments(h: &Graph, in_h: &[bool], edges: &BTreeSet<(Vertex, Vertex)>) -> Vec<Fragment> {
    let n = h.n();
    let mut out = Vec::new();
    for (a, b) in h.edges() {
        if in_h[a] && in_h[b] && !edges.contains(&(a, b)) {
            out.push(Fragment { attach: vec![a, b], inner: Vec::new(), chord: Some((a, b)) });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut inner = vec![s];
        let mut attach = BTreeSet::new();
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in h.neighbours(v) {
                if in_h[w] {
                    attach.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                    q.push_back(w);
                }
            }
        }
        out.push(Fragment { attach: attach.into_iter().collect(), inner, chord: None });
    }
    out
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(h: &Graph, in_h: &[bool], fr: &Fragment) -> Vec<Vertex> {
    if let Some((a, b)) = fr.chord {
        return vec![a, b];
    }
    let a = fr.attach[0];
    let n = h.n();
    let mut inside = vec![false; n];
    for &v in &fr.inner {
        inside[v] = true;
    }
    let mut parent = vec![usize::MAX; n];
    let mut q = VecDeque::new();
    for &w in h.neighbours(a) {
        if inside[w] && parent[w] == usize::MAX {
            parent[w] = a;
            q.push_back(w);
        }
    }
    while let Some(v) = q.pop_front() {
        if let Some(&b) = h.neighbours(v).iter().find(|&&b| in_h[b] && b != a) {
            let mut path = vec![b, v];
            let mut x = v;
            while parent[x] != a {
                x = parent[x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in h.neighbours(v) {
            if inside[w] && parent[w] == usize::MAX {
                parent[w] = v;
                q.push_back(w);
            }
        }
    }
    unreachable!("fragments of a 2-connected graph have two attachments")
}

/// Splits the oriented face cycle by a path joining two of its vertices.
fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let k = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut t = from;
        loop {
            out.push(face[t]);
            if t == to {
                break;
            }
            t = (t + 1) % k;
        }
        out
    };
    let mut f1 = arc(i, j);
    f1.extend(inner.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn octahedron() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4), (4, 1)],
        )
        .unwrap()
    }

    #[test]
    fn planar_families_embed() {
        for g in [
            families::complete(4),
            families::cycle(7),
            families::wheel(9),
            families::complete_bipartite(2, 5),
            families::star(4),
            octahedron(),
            Graph::empty(3),
        ] {
            let e = planar_embedding(&g).unwrap();
            assert_eq!(e.n() + e.face_count(), g.m() + 1 + g.components().len());
        }
        // two triangles sharing a vertex, plus a pendant path
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(planar_embedding(&g).unwrap().face_count(), 3);
    }

    #[test]
    fn kuratowski_graphs_rejected() {
        assert_eq!(planar_embedding(&families::complete(5)), Err(PlanarityError::NonPlanar));
        assert_eq!(planar_embedding(&families::complete_bipartite(3, 3)), Err(PlanarityError::NonPlanar));
        // Petersen graph
        let p = Graph::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        )
        .unwrap();
        assert_eq!(planar_embedding(&p), Err(PlanarityError::NonPlanar));
    }
}
