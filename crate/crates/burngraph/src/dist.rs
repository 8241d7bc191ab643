//! All-pairs hop distances and derived metrics.
//!
//! Every bound and the exact search query pairwise distances, so the matrix
//! is computed once per graph (BFS from each node) and shared read-only.

use crate::bitset::NodeSet;
use crate::graph::{Graph, NodeId};
use std::collections::VecDeque;

/// Sentinel distance for node pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn compute(g: &Graph) -> DistanceMatrix {
        let n = g.n();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let row = &mut dist[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in g.neighbors(u) {
                    if row[v] == UNREACHABLE {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: NodeId, v: NodeId) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn reachable(&self, u: NodeId, v: NodeId) -> bool {
        self.get(u, v) != UNREACHABLE
    }

    /// Max distance from `v`, or `None` when `v` does not reach every node.
    pub fn eccentricity(&self, v: NodeId) -> Option<u32> {
        let row = &self.dist[v * self.n..(v + 1) * self.n];
        let m = *row.iter().max().unwrap();
        if m == UNREACHABLE {
            None
        } else {
            Some(m)
        }
    }

    /// Closed ball `{u : d(u, v) <= r}`; `ball(v, 0) = {v}`.
    pub fn ball(&self, v: NodeId, r: u32) -> NodeSet {
        let mut s = NodeSet::new(self.n);
        let row = &self.dist[v * self.n..(v + 1) * self.n];
        for (u, &d) in row.iter().enumerate() {
            if d <= r {
                s.insert(u);
            }
        }
        s
    }

    pub fn ball_len(&self, v: NodeId, r: u32) -> usize {
        let row = &self.dist[v * self.n..(v + 1) * self.n];
        row.iter().filter(|&&d| d <= r).count()
    }
}

/// Radius, diameter, and center are only defined on connected graphs; the
/// disconnected case reports `None` plus the component count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMetrics {
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
    /// Nodes of minimum eccentricity; empty when disconnected.
    pub center: Vec<NodeId>,
    pub max_degree: usize,
    pub connected: bool,
    pub component_count: usize,
}

pub fn metrics(g: &Graph, dm: &DistanceMatrix) -> GraphMetrics {
    let component_count = g.components().len();
    let connected = component_count == 1;
    let (mut radius, mut diameter, mut center) = (None, None, Vec::new());
    if connected {
        let eccs: Vec<u32> = (0..g.n()).map(|v| dm.eccentricity(v).unwrap()).collect();
        let r = *eccs.iter().min().unwrap();
        let d = *eccs.iter().max().unwrap();
        radius = Some(r);
        diameter = Some(d);
        center = (0..g.n()).filter(|&v| eccs[v] == r).collect();
    }
    GraphMetrics {
        radius,
        diameter,
        center,
        max_degree: g.max_degree(),
        connected,
        component_count,
    }
}

/// Diameter of the component containing `v` (all nodes of one component
/// share it). Used for per-component bounds on disconnected graphs.
pub fn component_diameter(dm: &DistanceMatrix, comp: &[NodeId]) -> u32 {
    let mut d = 0;
    for (i, &u) in comp.iter().enumerate() {
        for &v in &comp[i + 1..] {
            d = d.max(dm.get(u, v));
        }
    }
    d
}
