//! Faces of an induced subgraph `G[S]` of an embedded graph `G`.
//!
//! Removing an edge from a drawing glues the faces on its two sides, so the
//! faces of `G[S]` are the classes of faces of `G` under gluing across every
//! edge not inside `S`. A class is named by its smallest face of `G`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::embedding::Embedding;
use crate::graph::Vertex;

#[derive(Clone, Debug)]
pub struct Regions {
    class: Vec<usize>,
    outer: usize,
    inside: Vec<bool>,
}

impl Regions {
    pub fn new(emb: &Embedding, s: &[Vertex]) -> Self {
        let mut inside = vec![false; emb.n()];
        for &v in s {
            inside[v] = true;
        }
        let mut parent: Vec<usize> = (0..emb.face_count()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (a, b) in emb.graph().edges() {
            if inside[a] && inside[b] {
                continue;
            }
            let ra = find(&mut parent, emb.face_of_dart(a, b));
            let rb = find(&mut parent, emb.face_of_dart(b, a));
            if ra < rb {
                parent[rb] = ra;
            } else {
                parent[ra] = rb;
            }
        }
        let class: Vec<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
        let outer = class[emb.outer_face()];
        Regions { class, outer, inside }
    }

    /// Class of a face of the host embedding.
    pub fn class(&self, face: usize) -> usize {
        self.class[face]
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.inside[v]
    }

    /// Classes at the corners of `v` (which need not lie in `S`).
    pub fn faces_at(&self, emb: &Embedding, v: Vertex) -> Vec<usize> {
        let mut out: Vec<usize> = emb.faces_at(v).into_iter().map(|f| self.class[f]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `V(face)` for every face of `G[S]`.
    pub fn boundaries(&self, emb: &Embedding) -> BTreeMap<usize, Vec<Vertex>> {
        let mut out: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
        for v in 0..emb.n() {
            if self.inside[v] {
                for c in self.faces_at(emb, v) {
                    out.entry(c).or_default().push(v);
                }
            }
        }
        out
    }

    /// Edges `(v, face)` of the incidence graph `H(G[S])`.
    pub fn incidence(&self, emb: &Embedding) -> Vec<(Vertex, usize)> {
        let mut out = Vec::new();
        for v in 0..emb.n() {
            if self.inside[v] {
                for c in self.faces_at(emb, v) {
                    out.push((v, c));
                }
            }
        }
        out.sort_unstable();
        out
    }
}
