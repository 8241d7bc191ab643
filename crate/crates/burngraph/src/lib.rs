//! Burning numbers of finite graphs.
//!
//! The burning number `b(G)` is the minimum number of rounds needed to burn
//! every node when one new fire source is chosen per round and fire spreads
//! one hop per round. This crate computes it exactly on small instances,
//! bounds it on larger ones, and ships the machinery around it:
//!
//! - [`graph`], [`dist`]: graph construction, generators, hop metrics.
//! - [`engine`]: burning sequences checked three independent ways
//!   (round-by-round simulation, ball-cover characterization, rooted tree
//!   partitions) plus the cover-to-sequence construction.
//! - [`solver`]: exact search over ball covers, optimal-sequence
//!   enumeration, a greedy upper bound, and a spanning-tree cross-check.
//! - [`bounds`]: radius/diameter, degree, order, and distance-domination
//!   bounds, plus Nordhaus-Gaddum reports for a graph and its complement.
//! - [`ilt`]: iterated local transitivity graphs and the constant-burning
//!   prediction for them.
//! - [`catalog`]: all connected graphs up to 8 nodes, canonically deduped.
//! - [`suite`]: the executable battery of every numeric claim this crate
//!   reproduces, shared by `tests/acceptance.rs` and the CLI.

pub mod bitset;
pub mod bounds;
pub mod catalog;
pub mod dist;
pub mod engine;
mod error;
pub mod graph;
pub mod ilt;
pub mod io;
pub mod solver;
pub mod spanning;
pub mod suite;

pub use bitset::NodeSet;
pub use dist::{metrics, DistanceMatrix, GraphMetrics, UNREACHABLE};
pub use error::{Error, Result};
pub use graph::{is_isometric_subgraph, Graph, NodeId, Shape};

/// Smallest `k` with `k * k >= n`.
pub fn ceil_sqrt(n: usize) -> usize {
    let r = n.isqrt();
    if r * r < n {
        r + 1
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_sqrt_exact() {
        let expected = [0, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(ceil_sqrt(n), e, "n = {n}");
        }
        assert_eq!(ceil_sqrt(25), 5);
        assert_eq!(ceil_sqrt(26), 6);
    }
}
