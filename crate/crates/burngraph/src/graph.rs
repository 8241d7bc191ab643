//! Simple undirected graphs over dense integer node ids.

use crate::error::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type NodeId = usize;

/// Provenance flag set by the canonical generators. Used by the solver to
/// dispatch closed-form burning numbers without any isomorphism testing:
/// a graph built by [`Graph::from_edge_list`] never carries a shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Spider { arms: usize, arm_len: usize },
    Wheel(usize),
}

/// Immutable simple undirected graph: no self-loops, no parallel edges,
/// node ids dense in `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<NodeId>>,
    labels: Option<Vec<String>>,
    shape: Option<Shape>,
}

impl Graph {
    /// Builds a normalized graph from an edge list. Duplicate edges collapse,
    /// self-loops and out-of-range ids are rejected, `n = 0` is rejected.
    pub fn from_edge_list(n: usize, edges: &[(NodeId, NodeId)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidNode { node: u, n });
            }
            if v >= n {
                return Err(Error::InvalidNode { node: v, n });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
            shape: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn with_shape(mut self, shape: Shape) -> Graph {
        self.shape = Some(shape);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn label(&self, v: NodeId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn shape(&self) -> Option<Shape> {
        self.shape
    }

    pub fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidNode { node: v, n: self.n })
        }
    }

    /// Connected components as sorted node lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Edge present iff absent in `self`; labels kept, shape dropped.
    pub fn complement(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.has_edge(u, v) {
                    adj[u].push(v);
                }
            }
        }
        Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
            shape: None,
        }
    }

    /// Disjoint union with node ids re-based in input order.
    pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
        if graphs.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let n: usize = graphs.iter().map(|g| g.n).sum();
        let mut adj = Vec::with_capacity(n);
        for g in graphs {
            let base = adj.len();
            for list in &g.adj {
                adj.push(list.iter().map(|&v| v + base).collect());
            }
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
            shape: None,
        })
    }

    /// Adds a node adjacent to every existing node. A cycle input yields the
    /// corresponding wheel, which the result records.
    pub fn add_universal_node(&self) -> Graph {
        let hub = self.n;
        let mut adj = self.adj.clone();
        for (v, list) in adj.iter_mut().enumerate() {
            list.push(hub);
            debug_assert!(list.is_sorted(), "hub id exceeds all others, v={v}");
        }
        adj.push((0..self.n).collect());
        let shape = match self.shape {
            Some(Shape::Cycle(m)) => Some(Shape::Wheel(m)),
            _ => None,
        };
        Graph {
            n: self.n + 1,
            adj,
            labels: None,
            shape,
        }
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("path requires n >= 1".into()));
        }
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Ok(Graph::from_edge_list(n, &edges)?.with_shape(Shape::Path(n)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter("cycle requires n >= 3".into()));
        }
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Ok(Graph::from_edge_list(n, &edges)?.with_shape(Shape::Cycle(n)))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("complete requires n >= 1".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Ok(Graph::from_edge_list(n, &edges)?.with_shape(Shape::Complete(n)))
    }

    /// Star with center `0` and `s` leaves.
    pub fn star(s: usize) -> Result<Graph> {
        if s == 0 {
            return Err(Error::InvalidParameter("star requires s >= 1".into()));
        }
        let edges: Vec<_> = (1..=s).map(|v| (0, v)).collect();
        Ok(Graph::from_edge_list(s + 1, &edges)?.with_shape(Shape::Star(s)))
    }

    /// Spider with `s` arms of length `r` attached to center `0`;
    /// `s * r + 1` nodes in total.
    pub fn spider(s: usize, r: usize) -> Result<Graph> {
        if s < 3 || r == 0 {
            return Err(Error::InvalidParameter(
                "spider requires s >= 3 arms of length r >= 1".into(),
            ));
        }
        let mut edges = Vec::new();
        for arm in 0..s {
            let first = 1 + arm * r;
            edges.push((0, first));
            for d in 1..r {
                edges.push((first + d - 1, first + d));
            }
        }
        Ok(Graph::from_edge_list(s * r + 1, &edges)?.with_shape(Shape::Spider { arms: s, arm_len: r }))
    }

    /// Wheel: an `n`-cycle on `0..n` plus a universal hub `n`.
    pub fn wheel(n: usize) -> Result<Graph> {
        if n < 4 {
            return Err(Error::InvalidParameter("wheel requires n >= 4".into()));
        }
        Ok(Graph::cycle(n)?.add_universal_node())
    }

    /// G(n, p) with a ChaCha stream keyed by `seed`; identical seeds give
    /// identical graphs on every platform.
    pub fn gnp_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("p = {p} outside [0, 1]")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges)
    }
}

/// True iff `embed` realizes `h` as a distance-preserving subgraph of `g`:
/// every pair of `h`-nodes is exactly as far apart in `g` as in `h`.
///
/// `embed[v]` is the `g`-node for `h`-node `v`. The map must be injective and
/// must send `h`-edges to `g`-edges; anything else is an embedding error
/// rather than a `false` verdict.
pub fn is_isometric_subgraph(h: &Graph, g: &Graph, embed: &[NodeId]) -> Result<bool> {
    if embed.len() != h.n() {
        return Err(Error::InvalidEmbedding(format!(
            "map covers {} of {} nodes",
            embed.len(),
            h.n()
        )));
    }
    let mut seen = vec![false; g.n()];
    for &img in embed {
        if img >= g.n() {
            return Err(Error::InvalidNode { node: img, n: g.n() });
        }
        if seen[img] {
            return Err(Error::InvalidEmbedding(format!("node {img} used twice")));
        }
        seen[img] = true;
    }
    for (u, v) in h.edges() {
        if !g.has_edge(embed[u], embed[v]) {
            return Err(Error::InvalidEmbedding(format!(
                "edge ({u}, {v}) has no image edge ({}, {})",
                embed[u], embed[v]
            )));
        }
    }
    let dh = crate::dist::DistanceMatrix::compute(h);
    let dg = crate::dist::DistanceMatrix::compute(g);
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            if dh.get(u, v) != dg.get(embed[u], embed[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Structural equality: same order and same edge set. Labels and generator
/// shape are display/provenance data and do not participate.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_normalizes() {
        let g = Graph::from_edge_list(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(2), &[] as &[usize]);
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(Error::InvalidEdge { u: 0, v: 0 })
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 5)]),
            Err(Error::InvalidNode { node: 5, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(0, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn generators_have_expected_structure() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.shape(), Some(Shape::Path(4)));

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.has_edge(4, 0));

        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.edge_count(), 10);

        let sp = Graph::spider(3, 2).unwrap();
        assert_eq!(sp.n(), 7);
        assert_eq!(sp.degree(0), 3);

        let w5 = Graph::wheel(5).unwrap();
        assert_eq!(w5, Graph::cycle(5).unwrap().add_universal_node());
        assert_eq!(w5.shape(), Some(Shape::Wheel(5)));
        assert_eq!(w5.degree(5), 5);

        let star = Graph::star(5).unwrap();
        assert_eq!(star.max_degree(), 5);

        assert!(Graph::cycle(2).is_err());
        assert!(Graph::spider(2, 1).is_err());
        assert!(Graph::wheel(3).is_err());
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::complete(4).unwrap();
        let e4 = k4.complement();
        assert_eq!(e4.edge_count(), 0);
        assert_eq!(e4.complement(), k4);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        let cc = c5.complement();
        // C_5 complement is again a 5-cycle, though with relabeled edges.
        assert_eq!(cc.edge_count(), 5);
        assert!(cc.adj.iter().all(|l| l.len() == 2));
        assert!(cc.is_connected());
    }

    #[test]
    fn disjoint_union_rebases_ids() {
        let p2 = Graph::path(2).unwrap();
        let u = Graph::disjoint_union(&[p2.clone(), p2]).unwrap();
        assert_eq!(u.n(), 4);
        assert_eq!(u.edge_count(), 2);
        assert_eq!(u.components().len(), 2);
        assert!(Graph::disjoint_union(&[]).is_err());

        let k3 = Graph::complete(3).unwrap();
        assert_eq!(Graph::disjoint_union(std::slice::from_ref(&k3)).unwrap(), k3);
    }

    #[test]
    fn gnp_is_deterministic_per_seed() {
        let a = Graph::gnp_random(10, 0.5, 7).unwrap();
        let b = Graph::gnp_random(10, 0.5, 7).unwrap();
        let c = Graph::gnp_random(10, 0.5, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c, "different seeds should give different graphs");
        assert!(Graph::gnp_random(5, 1.5, 0).is_err());
    }

    #[test]
    fn isometric_checks() {
        // The cycle rim keeps its distances inside the wheel.
        let c5 = Graph::cycle(5).unwrap();
        let w5 = Graph::wheel(5).unwrap();
        assert!(is_isometric_subgraph(&c5, &w5, &[0, 1, 2, 3, 4]).unwrap());

        // A path loses its distances once a universal node is added.
        let p5 = Graph::path(5).unwrap();
        let host = p5.add_universal_node();
        assert!(!is_isometric_subgraph(&p5, &host, &[0, 1, 2, 3, 4]).unwrap());

        // Identity embedding is always isometric.
        assert!(is_isometric_subgraph(&p5, &p5, &[0, 1, 2, 3, 4]).unwrap());

        // A non-edge-preserving map is an error, not `false`.
        let p3 = Graph::path(3).unwrap();
        assert!(matches!(
            is_isometric_subgraph(&p3, &p5, &[0, 2, 4]),
            Err(Error::InvalidEmbedding(_))
        ));
        assert!(matches!(
            is_isometric_subgraph(&p3, &p5, &[0, 1, 1]),
            Err(Error::InvalidEmbedding(_))
        ));
    }
}
