//! DP-`f`-colourability by searching for a simple `f`-cover with no
//! colouring. Only strict peeling is used as a shortcut, so this oracle
//! stays independent of the operation calculus.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::covers::cover_search;
use super::{Cover, Outcome};
use crate::degeneracy::strict_peel_within;
use crate::graph::{CapMap, Graph};
use crate::{Budget, Exhausted};

/// Whether every simple `f`-cover admits a colouring; on failure a simple
/// cover with `|L(v)| = f(v)` and no colouring is returned.
pub fn is_dp_f_colourable(g: &Graph, f: &CapMap, budget: &mut Budget) -> Result<Outcome<Cover>, Exhausted> {
    let n = g.n();
    assert_eq!(f.len(), n);
    if let Some(v) = (0..n).find(|&v| f[v] > 64) {
        // surplus vertices are peeled below; only huge node sets in the
        // core would matter, and those cannot be tracked
        if f[v] <= g.degree(v) as i64 {
            return Err(Exhausted::Size { limit: 64, actual: f[v] as usize });
        }
    }
    let sizes: Vec<usize> = (0..n).map(|v| f[v].clamp(0, 64) as usize).collect();
    if (0..n).any(|v| f[v] <= 0) {
        return Ok(Outcome::Fails(identity_cover(g, &sizes)));
    }
    let mut alive = vec![true; n];
    if strict_peel_within(g, f.values(), &alive).is_some() {
        return Ok(Outcome::Holds);
    }
    loop {
        let v = (0..n).find(|&v| {
            alive[v] && f[v] > g.neighbours(v).iter().filter(|&&w| alive[w]).count() as i64
        });
        match v {
            Some(v) => alive[v] = false,
            None => break,
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let (h, map) = g.induced(&keep);
    let hs: Vec<usize> = map.iter().map(|&v| sizes[v]).collect();
    let target: Vec<usize> = (0..h.n()).collect();
    match cover_search(&h, &hs, &[target], budget)? {
        None => Ok(Outcome::Holds),
        Some(local) => {
            let mut cover = identity_cover(g, &sizes);
            for ((a, b), ls) in local {
                let (u, v) = (map[a], map[b]);
                // induced relabelling keeps order, so u < v still
                debug_assert!(u < v);
                cover.links.insert((u, v), ls);
            }
            Ok(Outcome::Fails(cover))
        }
    }
}

/// The cover linking node `i` to node `i` along every edge.
pub(crate) fn identity_cover(g: &Graph, sizes: &[usize]) -> Cover {
    let mut links = BTreeMap::new();
    for (u, v) in g.edges() {
        links.insert((u, v), (0..sizes[u].min(sizes[v])).map(|i| (i, i)).collect());
    }
    Cover { sizes: sizes.to_vec(), links }
}
