//! Rotation systems and their faces.
//!
//! `rotation[v]` lists the neighbours of `v` in clockwise order. Walking
//! along the dart `u -> v`, the next dart of the same face is
//! `v -> w` where `w` follows `u` in the rotation of `v`. Every dart lies on
//! exactly one boundary walk.
//!
//! A disconnected graph is drawn with its components side by side: the
//! outer walks of all components form one merged outer face. The outer walk
//! of the component holding the chosen outer walk is that walk; any other
//! component uses the walk through the first dart of its smallest vertex.
//! An isolated vertex contributes a walk without darts.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error("rotation lists {got} vertices, graph has {n}")]
    Length { n: usize, got: usize },
    #[error("rotation of vertex {0} is not a permutation of its neighbours")]
    NotPermutation(Vertex),
    #[error("outer walk {outer} out of range ({walks} walks)")]
    OuterOutOfRange { outer: usize, walks: usize },
    #[error("Euler check failed: n = {n}, m = {m}, faces = {faces}, components = {components}")]
    Euler { n: usize, m: usize, faces: usize, components: usize },
    #[error("edge {0}-{1} already present")]
    EdgeExists(Vertex, Vertex),
    #[error("vertices {0} and {1} do not share face {2}")]
    NotOnFace(Vertex, Vertex, usize),
}

/// One face: its boundary walks (one per component meeting it) and the
/// vertex set `V(face)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub walks: Vec<Vec<Vertex>>,
    pub vertices: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<Vertex>>,
    outer_walk: usize,
    /// first dart id of each vertex
    offset: Vec<usize>,
    dart_id: BTreeMap<(Vertex, Vertex), usize>,
    dart_walk: Vec<usize>,
    dart_face: Vec<usize>,
    walk_face: Vec<usize>,
    faces: Vec<Face>,
    outer: usize,
}

impl Embedding {
    /// Builds the faces of a rotation system; `outer_walk` indexes the
    /// boundary walks in tracing order (for a connected graph this is the
    /// face index).
    pub fn new(g: &Graph, rotation: Vec<Vec<Vertex>>, outer_walk: usize) -> Result<Self, EmbeddingError> {
        let n = g.n();
        if rotation.len() != n {
            return Err(EmbeddingError::Length { n, got: rotation.len() });
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut a = rot.clone();
            a.sort_unstable();
            let mut b = g.neighbours(v).to_vec();
            b.sort_unstable();
            if a != b {
                return Err(EmbeddingError::NotPermutation(v));
            }
        }
        let mut offset = Vec::with_capacity(n + 1);
        let mut dart_id = BTreeMap::new();
        let mut total = 0;
        for (v, rot) in rotation.iter().enumerate() {
            offset.push(total);
            for &w in rot {
                dart_id.insert((v, w), total);
                total += 1;
            }
        }
        offset.push(total);

        // trace walks
        let mut dart_walk = vec![usize::MAX; total];
        let mut walks: Vec<Vec<Vertex>> = Vec::new();
        let mut walk_of_isolated = vec![usize::MAX; n];
        for v in 0..n {
            if rotation[v].is_empty() {
                walk_of_isolated[v] = walks.len();
                walks.push(vec![v]);
                continue;
            }
            for i in 0..rotation[v].len() {
                let start = offset[v] + i;
                if dart_walk[start] != usize::MAX {
                    continue;
                }
                let w_id = walks.len();
                let mut walk = Vec::new();
                let (mut a, mut b) = (v, rotation[v][i]);
                loop {
                    let d = dart_id[&(a, b)];
                    if dart_walk[d] != usize::MAX {
                        break;
                    }
                    dart_walk[d] = w_id;
                    walk.push(a);
                    let rb = &rotation[b];
                    let p = rb.iter().position(|&x| x == a).expect("symmetric rotation");
                    let c = rb[(p + 1) % rb.len()];
                    a = b;
                    b = c;
                }
                walks.push(walk);
            }
        }
        if outer_walk >= walks.len() {
            return Err(EmbeddingError::OuterOutOfRange { outer: outer_walk, walks: walks.len() });
        }

        // merge the outer walks of all components
        let components = g.components();
        let first_walk = |v: Vertex| {
            if rotation[v].is_empty() {
                walk_of_isolated[v]
            } else {
                dart_walk[offset[v]]
            }
        };
        let walk_vertex = |w: usize| walks[w][0];
        let mut comp_of = vec![0usize; n];
        for (c, comp) in components.iter().enumerate() {
            for &v in comp {
                comp_of[v] = c;
            }
        }
        let outer_comp = comp_of[walk_vertex(outer_walk)];
        let mut merged: Vec<usize> = components
            .iter()
            .enumerate()
            .map(|(c, comp)| if c == outer_comp { outer_walk } else { first_walk(comp[0]) })
            .collect();
        merged.sort_unstable();

        let mut walk_face = vec![usize::MAX; walks.len()];
        let mut faces: Vec<Face> = Vec::new();
        let mut outer = usize::MAX;
        for w in 0..walks.len() {
            if walk_face[w] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let members: Vec<usize> = if merged.binary_search(&w).is_ok() {
                outer = id;
                merged.clone()
            } else {
                vec![w]
            };
            let mut vertices: Vec<Vertex> = Vec::new();
            let mut fw = Vec::new();
            for &m in &members {
                walk_face[m] = id;
                vertices.extend(&walks[m]);
                fw.push(walks[m].clone());
            }
            vertices.sort_unstable();
            vertices.dedup();
            faces.push(Face { walks: fw, vertices });
        }
        let dart_face = dart_walk.iter().map(|&w| walk_face[w]).collect();

        let expected = g.m() + 1 + components.len();
        if faces.len() + n != expected {
            return Err(EmbeddingError::Euler {
                n,
                m: g.m(),
                faces: faces.len(),
                components: components.len(),
            });
        }
        Ok(Embedding {
            graph: g.clone(),
            rotation,
            outer_walk,
            offset,
            dart_id,
            dart_walk,
            dart_face,
            walk_face,
            faces,
            outer,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotation
    }

    pub fn outer_walk(&self) -> usize {
        self.outer_walk
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    /// Face to the left of the dart `u -> v`.
    pub fn face_of_dart(&self, u: Vertex, v: Vertex) -> usize {
        self.dart_face[self.dart_id[&(u, v)]]
    }

    /// Faces at the corners of `v`, in rotation order, without repeats.
    /// The corner between `rotation[v][i]` and `rotation[v][i+1]` lies in
    /// the face of the dart `v -> rotation[v][i+1]`.
    pub fn faces_at(&self, v: Vertex) -> Vec<usize> {
        let rot = &self.rotation[v];
        if rot.is_empty() {
            return vec![self.outer];
        }
        let mut out = Vec::with_capacity(rot.len());
        for i in 0..rot.len() {
            let f = self.dart_face[self.offset[v] + i];
            if !out.contains(&f) {
                out.push(f);
            }
        }
        out
    }

    /// Whether the face of every walk is the one recorded; used by tests.
    pub fn walk_face(&self, walk: usize) -> usize {
        self.walk_face[walk]
    }

    /// The bipartite vertex-face incidence graph: graph vertices keep their
    /// indices, face `i` becomes vertex `n + i`.
    pub fn incidence_graph(&self) -> Graph {
        let n = self.n();
        let mut h = Graph::empty(n + self.faces.len());
        for (i, f) in self.faces.iter().enumerate() {
            for &v in &f.vertices {
                h.add_edge(v, n + i).expect("fresh incidence edge");
            }
        }
        h
    }

    /// Adds the edge `ab` through face `face`, using the first corner of
    /// each endpoint on that face.
    pub fn add_chord(&self, face: usize, a: Vertex, b: Vertex) -> Result<Embedding, EmbeddingError> {
        if self.graph.has_edge(a, b) || a == b {
            return Err(EmbeddingError::EdgeExists(a, b));
        }
        let corner = |x: Vertex| -> Option<usize> {
            let rot = &self.rotation[x];
            if rot.is_empty() {
                return (self.outer == face).then_some(0);
            }
            // corner before position i lies in the face of dart x -> rot[i]
            (0..rot.len()).find(|&i| self.dart_face[self.offset[x] + i] == face)
        };
        let (ca, cb) = match (corner(a), corner(b)) {
            (Some(ca), Some(cb)) => (ca, cb),
            _ => return Err(EmbeddingError::NotOnFace(a, b, face)),
        };
        let mut rotation = self.rotation.clone();
        rotation[a].insert(ca, b);
        rotation[b].insert(cb, a);
        let mut g = self.graph.clone();
        g.add_edge(a, b).expect("checked absent");
        // the old outer walk index may shift; keep the face of the same dart
        let outer_dart = self.outer_dart();
        let tmp = Embedding::new(&g, rotation.clone(), 0)?;
        let outer_walk = match outer_dart {
            Some((x, y)) => tmp.walk_of_dart(x, y),
            None => self.outer_walk,
        };
        Embedding::new(&g, rotation, outer_walk)
    }

    /// Some dart on the outer walk chosen at construction, if it has darts.
    fn outer_dart(&self) -> Option<(Vertex, Vertex)> {
        let walk = self.faces[self.outer]
            .walks
            .iter()
            .find(|w| w.len() > 1 || !self.rotation[w[0]].is_empty())?;
        // consecutive pair of the walk is a dart
        let a = walk[0];
        let b = if walk.len() > 1 { walk[1] } else { self.rotation[a][0] };
        Some((a, b))
    }

    fn walk_of_dart(&self, u: Vertex, v: Vertex) -> usize {
        self.dart_walk[self.dart_id[&(u, v)]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    pub(crate) fn k4() -> Embedding {
        // 0 in the middle of triangle 1 2 3 (drawn clockwise)
        let g = families::complete(4);
        let rot = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        Embedding::new(&g, rot, 0).unwrap()
    }

    #[test]
    fn small_face_counts() {
        assert_eq!(k4().face_count(), 4);
        assert!(k4().faces().iter().all(|f| f.vertices.len() == 3));
        let c4 = families::cycle(4);
        let rot = (0..4).map(|v| c4.neighbours(v).to_vec()).collect();
        assert_eq!(Embedding::new(&c4, rot, 0).unwrap().face_count(), 2);
        let star = families::star(3);
        let rot = (0..4).map(|v| star.neighbours(v).to_vec()).collect();
        let e = Embedding::new(&star, rot, 0).unwrap();
        assert_eq!(e.face_count(), 1);
        assert_eq!(e.faces()[0].vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn non_planar_rotation_fails_euler() {
        let g = families::complete(4);
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(Embedding::new(&g, rot, 0), Err(EmbeddingError::Euler { .. })));
    }

    #[test]
    fn bad_rotations() {
        let g = families::path(3);
        assert!(matches!(
            Embedding::new(&g, vec![vec![1], vec![0]], 0),
            Err(EmbeddingError::Length { .. })
        ));
        assert_eq!(
            Embedding::new(&g, vec![vec![1], vec![0, 0], vec![1]], 0),
            Err(EmbeddingError::NotPermutation(1))
        );
    }

    #[test]
    fn incidence_examples() {
        let c3 = families::cycle(3);
        let rot = (0..3).map(|v| c3.neighbours(v).to_vec()).collect();
        let h = Embedding::new(&c3, rot, 0).unwrap().incidence_graph();
        assert_eq!((h.n(), h.m()), (5, 6));
        let k1 = Embedding::new(&Graph::empty(1), vec![vec![]], 0).unwrap();
        assert_eq!(k1.incidence_graph().m(), 1);
        let two = Embedding::new(&Graph::empty(2), vec![vec![], vec![]], 1).unwrap();
        assert_eq!(two.face_count(), 1);
        let h = two.incidence_graph();
        assert_eq!((h.n(), h.m()), (3, 2));
    }

    #[test]
    fn disconnected_faces_merge() {
        // two disjoint triangles: 3 faces in total
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let rot = (0..6).map(|v| g.neighbours(v).to_vec()).collect();
        let e = Embedding::new(&g, rot, 0).unwrap();
        assert_eq!(e.face_count(), 3);
        assert_eq!(e.faces()[e.outer_face()].vertices, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn chord_splits_face() {
        let c4 = families::cycle(4);
        let rot = (0..4).map(|v| c4.neighbours(v).to_vec()).collect();
        let e = Embedding::new(&c4, rot, 0).unwrap();
        let inner = 1 - e.outer_face();
        let e2 = e.add_chord(inner, 0, 2).unwrap();
        assert_eq!(e2.face_count(), 3);
        assert_eq!(e2.faces()[e2.outer_face()].vertices, vec![0, 1, 2, 3]);
        assert!(e2.add_chord(0, 0, 2).is_err());
    }
}
