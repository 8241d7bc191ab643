//! Spanning tree enumeration by edge inclusion/exclusion.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

pub const DEFAULT_TREE_LIMIT: usize = 10_000;

/// Enumerates every spanning tree of a connected graph, up to `limit`.
///
/// Each edge is branched on in order: include it (if it closes no cycle in
/// the partial forest) or exclude it (if the remaining edges still connect
/// the graph). Every spanning tree corresponds to exactly one leaf.
pub fn enumerate_spanning_trees(g: &Graph, limit: usize) -> Result<Vec<Graph>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges: Vec<(NodeId, NodeId)> = g.edges().collect();
    let n = g.n();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    let mut excluded = vec![false; edges.len()];
    recurse(n, &edges, 0, &mut chosen, &mut excluded, limit, &mut out)?;
    Ok(out)
}

fn recurse(
    n: usize,
    edges: &[(NodeId, NodeId)],
    idx: usize,
    chosen: &mut Vec<(NodeId, NodeId)>,
    excluded: &mut [bool],
    limit: usize,
    out: &mut Vec<Graph>,
) -> Result<()> {
    if chosen.len() == n - 1 {
        if out.len() == limit {
            return Err(Error::LimitExceeded {
                what: "spanning trees",
                limit,
            });
        }
        out.push(Graph::from_edge_list(n, chosen).expect("forest edges are valid"));
        return Ok(());
    }
    if idx == edges.len() {
        return Ok(());
    }
    let (u, v) = edges[idx];

    // Include branch: only if u and v are in different forest components.
    if !forest_connects(chosen, n, u, v) {
        chosen.push((u, v));
        recurse(n, edges, idx + 1, chosen, excluded, limit, out)?;
        chosen.pop();
    }

    // Exclude branch: only if the graph stays connected without this edge.
    excluded[idx] = true;
    if still_connected(n, edges, excluded) {
        recurse(n, edges, idx + 1, chosen, excluded, limit, out)?;
    }
    excluded[idx] = false;
    Ok(())
}

fn forest_connects(chosen: &[(NodeId, NodeId)], n: usize, u: NodeId, v: NodeId) -> bool {
    // Union-find over the current forest, rebuilt per query; the forests are
    // tiny at the scale this enumeration is used.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in chosen {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    find(&mut parent, u) == find(&mut parent, v)
}

fn still_connected(n: usize, edges: &[(NodeId, NodeId)], excluded: &[bool]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !excluded[i] {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_has_n_trees() {
        let trees = enumerate_spanning_trees(&Graph::cycle(4).unwrap(), 100).unwrap();
        assert_eq!(trees.len(), 4);
        for t in &trees {
            assert_eq!(t.edge_count(), 3);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn tree_input_yields_itself() {
        let p5 = Graph::path(5).unwrap();
        let trees = enumerate_spanning_trees(&p5, 100).unwrap();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0], p5);
    }

    #[test]
    fn k4_has_sixteen_trees() {
        // Cayley: n^(n-2) = 4^2 = 16.
        let trees = enumerate_spanning_trees(&Graph::complete(4).unwrap(), 100).unwrap();
        assert_eq!(trees.len(), 16);
        let unique: std::collections::HashSet<Vec<(usize, usize)>> =
            trees.iter().map(|t| t.edges().collect()).collect();
        assert_eq!(unique.len(), 16);
    }

    #[test]
    fn limit_and_disconnected_errors() {
        assert_eq!(
            enumerate_spanning_trees(&Graph::complete(4).unwrap(), 10),
            Err(Error::LimitExceeded {
                what: "spanning trees",
                limit: 10
            })
        );
        let two = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(enumerate_spanning_trees(&two, 10), Err(Error::Disconnected));
    }
}
