//! Exact solvers and certificate machinery for weak* degeneracy.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything here is a pure
//! function over small in-memory structures; file formats, reports and the
//! command line live in the `weakstar` companion crate.
//!
//! Layout:
//!
//! * [`graph`], [`graph6`], [`blocks`], [`degeneracy`], [`canon`],
//!   [`enumerate`]: graph representation, block structure, orderings.
//! * [`calculus`]: the operation calculus (reduce / edge-delete /
//!   vertex-delete / delete-save), certificate replay, exact decision
//!   procedures and certificate transformations.
//! * [`colouring`]: brute-force list, cover (DP), painting and DP-painting
//!   oracles.
//! * [`alon_tarsi`]: Eulerian subdigraph counts, graph-polynomial
//!   coefficients, orientation search and orientation extraction from
//!   certificates.
//! * [`planar`]: rotation systems, faces, incidence graphs, nice subgraphs
//!   and the constructive truncated-degree certificates.
//! * [`counterexamples`]: the 28-vertex gadget, its 42-copy gluing and the
//!   complete-bipartite sharpness instances.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod alon_tarsi;
pub mod blocks;
pub mod calculus;
pub mod canon;
pub mod colouring;
pub mod counterexamples;
pub mod degeneracy;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod planar;

pub use graph::{CapMap, Graph, GraphError, Vertex};

/// Outcome of a bounded exact search.
///
/// `Unknown` is only ever produced when the configured node budget (or an
/// instance size guard) is exhausted; it is never a disguised "no".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<W> {
    Yes(W),
    No,
    Unknown(Exhausted),
}

impl<W> Decision<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Decision::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(W) -> U) -> Decision<U> {
        match self {
            Decision::Yes(w) => Decision::Yes(f(w)),
            Decision::No => Decision::No,
            Decision::Unknown(e) => Decision::Unknown(e),
        }
    }
}

/// Which resource ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Exhausted {
    /// Search-node budget hit; carries the budget that was configured.
    #[error("node budget of {0} exhausted")]
    Nodes(u64),
    /// Instance larger than the oracle's size guard.
    #[error("instance size {actual} exceeds limit {limit}")]
    Size { limit: usize, actual: usize },
}

/// Default number of search nodes an exact procedure may expand.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Node counter shared by the exhaustive searches.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    /// Charge one node. Returns `Err` once the limit is passed.
    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.used += 1;
        if self.used > self.limit {
            Err(Exhausted::Nodes(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}
