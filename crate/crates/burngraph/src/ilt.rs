//! Iterated local transitivity (ILT) graphs.
//!
//! Each step clones every node `x` into `x'` joined to `x` and all of `x`'s
//! current neighbors; the clones form an independent set and the order
//! doubles. Burning numbers stay constant across steps: `b(G_t)` is either
//! `b(G_0)` or `b(G_0) + 1` for every `t >= 1`, decided by whether some
//! optimal sequence of `G_0` ends next to a node that burned a round early.

use crate::dist::DistanceMatrix;
use crate::engine::{self, BurningSequence};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::solver;
use rayon::prelude::*;

pub const DEFAULT_NODE_CAP: usize = 1 << 20;
pub const DEFAULT_ENUMERATION_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct IltStep {
    pub graph: Graph,
    /// `(original, clone)` pairs; clone ids are `original + n`.
    pub clone_pairs: Vec<(NodeId, NodeId)>,
}

#[derive(Clone, Debug)]
pub struct IltTrace {
    pub g0: Graph,
    pub steps: Vec<IltStep>,
}

impl IltTrace {
    /// Graph after `t` steps; `t = 0` is the seed.
    pub fn graph_at(&self, t: usize) -> &Graph {
        if t == 0 {
            &self.g0
        } else {
            &self.steps[t - 1].graph
        }
    }
}

/// One cloning step: node `x` gains clone `x + n` adjacent to `x` and to
/// every neighbor of `x`.
pub fn ilt_step(g: &Graph) -> IltStep {
    let n = g.n();
    let mut edges: Vec<(NodeId, NodeId)> = g.edges().collect();
    for x in 0..n {
        edges.push((x, x + n));
        for &y in g.neighbors(x) {
            edges.push((x + n, y));
        }
    }
    let graph = Graph::from_edge_list(2 * n, &edges).expect("cloned edges are valid");
    IltStep {
        graph,
        clone_pairs: (0..n).map(|x| (x, x + n)).collect(),
    }
}

pub fn ilt_iterate(g0: &Graph, t: usize, node_cap: usize) -> Result<IltTrace> {
    if !g0.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut steps = Vec::with_capacity(t);
    let mut current = g0.clone();
    for _ in 0..t {
        if current.n() * 2 > node_cap {
            return Err(Error::LimitExceeded {
                what: "ILT node count",
                limit: node_cap,
            });
        }
        let step = ilt_step(&current);
        current = step.graph.clone();
        steps.push(step);
    }
    Ok(IltTrace {
        g0: g0.clone(),
        steps,
    })
}

#[derive(Clone, Debug)]
pub struct IltPrediction {
    pub b0: usize,
    /// Predicted `b(G_t)` for every `t >= 1`.
    pub predicted: usize,
    /// An optimal sequence of the seed whose last source has a neighbor
    /// burning a round early, when one exists.
    pub witness: Option<BurningSequence>,
}

/// Predicts `b(G_t)` for all `t >= 1` from the seed alone: enumerate every
/// optimal burning sequence of `G_0`; if any of them burns some neighbor of
/// its last source by round `k - 1`, the burning number stays `b(G_0)`,
/// otherwise it grows by one.
pub fn ilt_predict(g0: &Graph, dm0: &DistanceMatrix, enumeration_limit: usize) -> Result<IltPrediction> {
    if !g0.is_connected() {
        return Err(Error::Disconnected);
    }
    let all = solver::enumerate_optimal_sequences(g0, dm0, enumeration_limit)?;
    if !all.complete {
        return Err(Error::LimitExceeded {
            what: "optimal sequence enumeration",
            limit: enumeration_limit,
        });
    }
    let k = all.burning_number;
    let mut witness = None;
    for seq in &all.sequences {
        let sim = engine::simulate(g0, seq)?;
        let schedule = sim.schedule().ok_or_else(|| {
            Error::InternalInvariant("enumerated sequence fails simulation".into())
        })?;
        let last = *seq.sources().last().unwrap();
        let early = g0
            .neighbors(last)
            .iter()
            .any(|&u| (schedule.round(u) as usize) < k);
        if early {
            witness = Some(seq.clone());
            break;
        }
    }
    Ok(IltPrediction {
        b0: k,
        predicted: if witness.is_some() { k } else { k + 1 },
        witness,
    })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct IltVerifyRow {
    pub t: usize,
    pub nodes: usize,
    pub exact: usize,
    pub predicted: usize,
    pub matches: bool,
}

/// Exact-vs-predicted comparison for `t = 1..=t_max`. The per-step solves
/// are independent and fan out to rayon workers.
pub fn ilt_verify(g0: &Graph, t_max: usize, node_cap: usize) -> Result<Vec<IltVerifyRow>> {
    let dm0 = DistanceMatrix::compute(g0);
    let prediction = ilt_predict(g0, &dm0, DEFAULT_ENUMERATION_LIMIT)?;
    let trace = ilt_iterate(g0, t_max, node_cap)?;
    (1..=t_max)
        .into_par_iter()
        .map(|t| {
            let gt = trace.graph_at(t);
            let dm = DistanceMatrix::compute(gt);
            let exact = solver::burning_number(gt, &dm)?.burning_number;
            Ok(IltVerifyRow {
                t,
                nodes: gt.n(),
                exact,
                predicted: prediction.predicted,
                matches: exact == prediction.predicted,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_becomes_an_edge() {
        let step = ilt_step(&Graph::complete(1).unwrap());
        assert_eq!(step.graph, Graph::path(2).unwrap());
        assert_eq!(step.clone_pairs, vec![(0, 1)]);
    }

    #[test]
    fn k2_step_structure() {
        // Clones attach to their original and its neighbors, and stay
        // mutually non-adjacent: K_2 grows into K_4 minus the clone edge.
        let step = ilt_step(&Graph::complete(2).unwrap());
        let g = &step.graph;
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 5);
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn clones_form_an_independent_set_with_matching_neighborhoods() {
        let g0 = Graph::gnp_random(7, 0.4, 9).unwrap();
        let n = g0.n();
        let step = ilt_step(&g0);
        let g1 = &step.graph;
        let dm0 = DistanceMatrix::compute(&g0);
        let dm1 = DistanceMatrix::compute(g1);
        for &(x, xc) in &step.clone_pairs {
            for &(_, other) in &step.clone_pairs {
                assert!(xc == other || !g1.has_edge(xc, other), "clone edge {xc}-{other}");
            }
            // The clone attaches to its original and exactly the original's
            // old neighbors.
            let mut expected: Vec<_> = g0.neighbors(x).to_vec();
            expected.push(x);
            expected.sort_unstable();
            assert_eq!(g1.neighbors(xc), expected);
            // Within the previous level, original and clone have the same
            // closed neighborhoods at every radius (other clones differ:
            // they neighbor x but not xc).
            for z in 0..n {
                if z == x {
                    continue;
                }
                assert_eq!(dm1.get(xc, z), dm0.get(x, z), "x {x} clone {xc} z {z}");
            }
        }
    }

    #[test]
    fn iterate_doubles_and_caps() {
        let p3 = Graph::path(3).unwrap();
        let trace = ilt_iterate(&p3, 2, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(trace.graph_at(0).n(), 3);
        assert_eq!(trace.graph_at(1).n(), 6);
        assert_eq!(trace.graph_at(2).n(), 12);

        assert_eq!(
            ilt_iterate(&p3, 4, 20).unwrap_err(),
            Error::LimitExceeded {
                what: "ILT node count",
                limit: 20
            }
        );
        let p2 = Graph::path(2).unwrap();
        let disc = Graph::disjoint_union(&[p2.clone(), p2]).unwrap();
        assert_eq!(ilt_iterate(&disc, 1, 100).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn earlier_levels_stay_isometric() {
        let g0 = Graph::cycle(5).unwrap();
        let trace = ilt_iterate(&g0, 2, DEFAULT_NODE_CAP).unwrap();
        for t in 1..=2 {
            let prev = trace.graph_at(t - 1);
            let cur = trace.graph_at(t);
            let identity: Vec<usize> = (0..prev.n()).collect();
            assert!(crate::graph::is_isometric_subgraph(prev, cur, &identity).unwrap());
        }
    }

    #[test]
    fn path_predictions_split_on_square_orders() {
        // Perfect-square paths force the +1 branch, others keep b.
        let p4 = Graph::path(4).unwrap();
        let p = ilt_predict(&p4, &DistanceMatrix::compute(&p4), 10_000).unwrap();
        assert_eq!((p.b0, p.predicted), (2, 3));
        assert!(p.witness.is_none());

        let p3 = Graph::path(3).unwrap();
        let p = ilt_predict(&p3, &DistanceMatrix::compute(&p3), 10_000).unwrap();
        assert_eq!((p.b0, p.predicted), (2, 2));
        assert!(p.witness.is_some());

        let p9 = Graph::path(9).unwrap();
        let p = ilt_predict(&p9, &DistanceMatrix::compute(&p9), 10_000).unwrap();
        assert_eq!((p.b0, p.predicted), (3, 4));
    }

    #[test]
    fn verify_small_seeds() {
        let rows = ilt_verify(&Graph::path(3).unwrap(), 2, DEFAULT_NODE_CAP).unwrap();
        assert!(rows.iter().all(|r| r.matches && r.exact == 2));

        let rows = ilt_verify(&Graph::complete(3).unwrap(), 2, DEFAULT_NODE_CAP).unwrap();
        assert!(rows.iter().all(|r| r.matches));
        assert!(rows.iter().all(|r| r.exact == rows[0].exact));
    }
}
