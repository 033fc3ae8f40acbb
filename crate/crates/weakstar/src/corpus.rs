//! Named graphs: small families and a fixed corpus of 3-connected,
//! non-complete planar graphs for the planar and general pipelines.

use weakstar_core::counterexamples::{build_glued_g, build_gadget_h};
use weakstar_core::graph::families;
use weakstar_core::planar::generate::{gadget_triangulation, stacked_triangulation, thin_out};
use weakstar_core::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("corpus edges are simple")
}

pub fn octahedron() -> Graph {
    let mut e = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 {
                e.push((u, v));
            }
        }
    }
    build(6, &e)
}

pub fn icosahedron() -> Graph {
    let mut e = Vec::new();
    for i in 1..=5 {
        let next = i % 5 + 1;
        e.push((0, i));
        e.push((i, next));
        e.push((i, i + 5));
        e.push((i, next + 5));
        e.push((i + 5, next + 5));
        e.push((i + 5, 11));
    }
    build(12, &e)
}

pub fn cube() -> Graph {
    let mut e = Vec::new();
    for u in 0..8usize {
        for b in [1, 2, 4] {
            if u & b == 0 {
                e.push((u, u | b));
            }
        }
    }
    build(8, &e)
}

pub fn dodecahedron() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, 5 + 2 * i));
        e.push((5 + 2 * i + 1, 15 + i));
        e.push((15 + i, 15 + (i + 1) % 5));
    }
    for j in 0..10 {
        e.push((5 + j, 5 + (j + 1) % 10));
    }
    build(20, &e)
}

/// Two `k`-cycles joined rung by rung.
pub fn prism(k: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..k {
        e.push((i, (i + 1) % k));
        e.push((k + i, k + (i + 1) % k));
        e.push((i, k + i));
    }
    build(2 * k, &e)
}

/// Two `k`-cycles joined by a zigzag of triangles.
pub fn antiprism(k: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..k {
        e.push((i, (i + 1) % k));
        e.push((k + i, k + (i + 1) % k));
        e.push((i, k + i));
        e.push((i, k + (i + 1) % k));
    }
    build(2 * k, &e)
}

/// A `k`-cycle with two apexes.
pub fn bipyramid(k: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..k {
        e.push((i, (i + 1) % k));
        e.push((i, k));
        e.push((i, k + 1));
    }
    build(k + 2, &e)
}

fn stacked_choices(len: usize, mul: usize, add: usize) -> Vec<usize> {
    (0..len).map(|i| i * mul + add).collect()
}

/// The glued 42-copy graph from the gadget construction.
pub fn glued_g() -> Graph {
    let h = build_gadget_h().expect("gadget validates");
    build_glued_g(&h).expect("gluing validates").graph
}

/// Small families and corpus members by name: `K<n>`, `C<n>`, `P<n>`,
/// `W<n>` (wheel with `n` rim vertices), `S<n>` (star), or a corpus name.
pub fn by_name(name: &str) -> Option<Graph> {
    let num = |p: &str| name.strip_prefix(p).and_then(|s| s.parse::<usize>().ok());
    if let Some(n) = num("K") {
        return Some(families::complete(n));
    }
    if let Some(n) = num("C").filter(|&n| n >= 3) {
        return Some(families::cycle(n));
    }
    if let Some(n) = num("P") {
        return Some(families::path(n));
    }
    if let Some(n) = num("W").filter(|&n| n >= 3) {
        return Some(families::wheel(n));
    }
    if let Some(n) = num("S") {
        return Some(families::star(n));
    }
    CORPUS.iter().find(|(n, _)| *n == name).map(|(_, f)| f())
}

type Entry = (&'static str, fn() -> Graph);

const CORPUS: &[Entry] = &[
    ("octahedron", octahedron),
    ("icosahedron", icosahedron),
    ("cube", cube),
    ("dodecahedron", dodecahedron),
    ("wheel-5", || families::wheel(5)),
    ("wheel-8", || families::wheel(8)),
    ("wheel-16", || families::wheel(16)),
    ("wheel-20", || families::wheel(20)),
    ("wheel-30", || families::wheel(30)),
    ("wheel-40", || families::wheel(40)),
    ("prism-5", || prism(5)),
    ("prism-12", || prism(12)),
    ("antiprism-9", || antiprism(9)),
    ("bipyramid-6", || bipyramid(6)),
    ("bipyramid-24", || bipyramid(24)),
    ("stacked-hubs", || stacked_triangulation(&stacked_choices(40, 7, 3), true)),
    ("stacked-hubs-2", || stacked_triangulation(&stacked_choices(60, 2, 0), true)),
    ("stacked-plain", || stacked_triangulation(&stacked_choices(30, 5, 1), false)),
    ("stacked-thinned", || {
        let c = stacked_choices(50, 6, 2);
        thin_out(&stacked_triangulation(&c, true), &stacked_choices(80, 13, 5))
    }),
    ("gadget-filled", || gadget_triangulation(&stacked_choices(12, 2, 0), &stacked_choices(30, 3, 1))),
    ("glued-g", glued_g),
];

/// Names of the planar corpus, in a fixed order.
pub fn corpus_names() -> Vec<&'static str> {
    CORPUS.iter().map(|(n, _)| *n).collect()
}

pub fn planar_corpus() -> Vec<(&'static str, Graph)> {
    CORPUS.iter().map(|(n, f)| (*n, f())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use weakstar_core::blocks::is_3_connected;
    use weakstar_core::planar::planar_embedding;

    #[test]
    fn platonic_counts() {
        let o = octahedron();
        assert_eq!((o.n(), o.m()), (6, 12));
        assert!(o.vertices().all(|v| o.degree(v) == 4));
        let i = icosahedron();
        assert_eq!((i.n(), i.m()), (12, 30));
        assert!(i.vertices().all(|v| i.degree(v) == 5));
        let c = cube();
        assert_eq!((c.n(), c.m()), (8, 12));
        let d = dodecahedron();
        assert_eq!((d.n(), d.m()), (20, 30));
        assert!(d.vertices().all(|v| d.degree(v) == 3));
    }

    #[test]
    fn corpus_is_three_connected_planar_and_not_complete() {
        let all = planar_corpus();
        assert!(all.len() >= 20);
        for (name, g) in all.iter().filter(|(n, _)| *n != "glued-g") {
            assert!(is_3_connected(g), "{name}");
            assert!(!g.is_complete(), "{name}");
            assert!(planar_embedding(g).is_ok(), "{name}");
        }
    }

    #[test]
    fn names_resolve() {
        assert_eq!(by_name("K4").unwrap().m(), 6);
        assert_eq!(by_name("W20").unwrap().n(), 21);
        assert_eq!(by_name("C2"), None);
        assert_eq!(by_name("cube").unwrap(), cube());
        assert_eq!(by_name("nonsense"), None);
    }
}
