//! Exhaustive catalog of small graphs up to isomorphism.
//!
//! Graphs on up to 8 nodes are enumerated incrementally: every graph on
//! `n` nodes arises from some graph on `n - 1` nodes by adding one node
//! with an arbitrary neighborhood, so extending each (n-1)-node.
//! representative with all `2^(n-1)` neighbor masks and deduplicating by
//! canonical form reaches every isomorphism class. The canonical form is
//! the lexicographically greatest upper-triangle bit string over all
//! relabelings, found by a positional search that only branches on
//! candidates attaining the per-level maximum (interchangeable twins are
//! branched once).

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeSet;

pub const MAX_CATALOG_ORDER: usize = 8;

/// Graphs on 1..=8 nodes up to isomorphism.
pub const ALL_GRAPH_COUNTS: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];
/// Connected graphs on 1..=8 nodes up to isomorphism.
pub const CONNECTED_GRAPH_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

/// Adjacency-mask representation for graphs with at most 8 nodes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct SmallGraph {
    pub n: usize,
    pub rows: [u8; 8],
}

impl SmallGraph {
    fn single() -> Self {
        SmallGraph { n: 1, rows: [0; 8] }
    }

    fn extend(&self, mask: u8) -> Self {
        let mut rows = self.rows;
        rows[self.n] = mask;
        for j in 0..self.n {
            if mask & (1 << j) != 0 {
                rows[j] |= 1 << self.n;
            }
        }
        SmallGraph {
            n: self.n + 1,
            rows,
        }
    }

    pub(crate) fn is_connected(&self) -> bool {
        let mut seen: u8 = 1;
        loop {
            let mut next = seen;
            for v in 0..self.n {
                if seen & (1 << v) != 0 {
                    next |= self.rows[v];
                }
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen.count_ones() as usize == self.n
    }

    pub(crate) fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.rows[u] & (1 << v) != 0 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(self.n, &edges).expect("masks encode a simple graph")
    }
}

/// Packs level bit strings into one key: placing the vertex at position `i`
/// fixes its `i` adjacency bits towards positions `0..i`.
pub(crate) fn canonical_bits(g: &SmallGraph) -> u32 {
    let mut search = CanonSearch { g, best: 0 };
    let mut perm = [0usize; 8];
    search.place(&mut perm, 0, 0, 0);
    search.best
}

struct CanonSearch<'a> {
    g: &'a SmallGraph,
    best: u32,
}

impl CanonSearch<'_> {
    fn place(&mut self, perm: &mut [usize; 8], depth: usize, used: u8, bits: u32) {
        if depth == self.g.n {
            self.best = self.best.max(bits);
            return;
        }
        // Per-level bits of each unused candidate; only maxima can extend a
        // lexicographically greatest string.
        let mut level = [(0usize, 0u32); 8];
        let mut count = 0;
        let mut max_lb = 0;
        for c in 0..self.g.n {
            if used & (1 << c) != 0 {
                continue;
            }
            let mut lb = 0u32;
            for &p in perm.iter().take(depth) {
                lb = (lb << 1) | u32::from(self.g.rows[p] & (1 << c) != 0);
            }
            level[count] = (c, lb);
            count += 1;
            max_lb = max_lb.max(lb);
        }
        let next_bits = (bits << depth) | max_lb;
        let mut taken: u8 = 0;
        for &(c, lb) in level.iter().take(count) {
            if lb != max_lb {
                continue;
            }
            // Swapping two unused twins is an automorphism; branch only once.
            let is_twin_of_taken = (0..self.g.n).any(|t| {
                taken & (1 << t) != 0 && {
                    let others = !((1u8 << c) | (1 << t));
                    self.g.rows[c] & others == self.g.rows[t] & others
                }
            });
            taken |= 1 << c;
            if is_twin_of_taken {
                continue;
            }
            perm[depth] = c;
            self.place(perm, depth + 1, used | (1 << c), next_bits);
        }
    }
}

fn from_bits(n: usize, bits: u32) -> SmallGraph {
    let mut g = SmallGraph { n, rows: [0; 8] };
    let mut remaining: u32 = (n * (n - 1) / 2) as u32;
    for i in 1..n {
        remaining -= i as u32;
        let level = (bits >> remaining) & ((1 << i) - 1);
        for j in 0..i {
            if level & (1 << (i - 1 - j)) != 0 {
                g.rows[i] |= 1 << j;
                g.rows[j] |= 1 << i;
            }
        }
    }
    g
}

/// Canonical representatives of all graphs, grouped by order `1..=max_n`.
pub(crate) fn all_graphs_by_order(max_n: usize) -> Vec<Vec<SmallGraph>> {
    assert!((1..=MAX_CATALOG_ORDER).contains(&max_n));
    let mut levels = vec![vec![SmallGraph::single()]];
    for n in 2..=max_n {
        let mut keys = BTreeSet::new();
        for g in &levels[n - 2] {
            for mask in 0u16..(1 << (n - 1)) {
                keys.insert(canonical_bits(&g.extend(mask as u8)));
            }
        }
        levels.push(keys.into_iter().map(|b| from_bits(n, b)).collect());
    }
    levels
}

/// Every connected graph with `1..=max_n` nodes, one per isomorphism class,
/// in a deterministic order.
pub fn connected_graphs(max_n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_CATALOG_ORDER).contains(&max_n) {
        return Err(Error::InvalidParameter(format!(
            "catalog supports orders 1..={MAX_CATALOG_ORDER}, got {max_n}"
        )));
    }
    Ok(all_graphs_by_order(max_n)
        .iter()
        .flatten()
        .filter(|g| g.is_connected())
        .map(SmallGraph::to_graph)
        .collect())
}

const CACHE_HEADER: &str = "burngraph-catalog v1 connected";

/// Loads the catalog from `path` if present and well-formed; otherwise
/// generates it and writes the cache.
pub fn connected_graphs_cached(max_n: usize, path: &std::path::Path) -> Result<Vec<Graph>> {
    if let Some(graphs) = try_load(max_n, path) {
        return Ok(graphs);
    }
    if !(1..=MAX_CATALOG_ORDER).contains(&max_n) {
        return Err(Error::InvalidParameter(format!(
            "catalog supports orders 1..={MAX_CATALOG_ORDER}, got {max_n}"
        )));
    }
    let levels = all_graphs_by_order(max_n);
    let connected: Vec<&SmallGraph> = levels
        .iter()
        .flatten()
        .filter(|g| g.is_connected())
        .collect();
    let mut out = format!("{CACHE_HEADER} max_n={max_n}\n");
    for g in &connected {
        out.push_str(&format!("{} {:07x}\n", g.n, canonical_bits(g)));
    }
    // Failing to write the cache is not an error; the next run regenerates.
    let _ = std::fs::write(path, out);
    Ok(connected.into_iter().map(SmallGraph::to_graph).collect())
}

fn try_load(max_n: usize, path: &std::path::Path) -> Option<Vec<Graph>> {
    let text = std::fs::read_to_string(path).ok()?;
    let mut lines = text.lines();
    if lines.next()? != format!("{CACHE_HEADER} max_n={max_n}") {
        return None;
    }
    let mut graphs = Vec::new();
    for line in lines {
        let (n, hex) = line.split_once(' ')?;
        let n: usize = n.parse().ok()?;
        if !(1..=max_n).contains(&n) {
            return None;
        }
        let bits = u32::from_str_radix(hex, 16).ok()?;
        let small = from_bits(n, bits);
        if !small.is_connected() {
            return None;
        }
        graphs.push(small.to_graph());
    }
    let expected: usize = CONNECTED_GRAPH_COUNTS[..max_n].iter().sum();
    (graphs.len() == expected).then_some(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_match_known_values() {
        let levels = all_graphs_by_order(7);
        for (i, level) in levels.iter().enumerate() {
            assert_eq!(level.len(), ALL_GRAPH_COUNTS[i], "all graphs on {} nodes", i + 1);
            let connected = level.iter().filter(|g| g.is_connected()).count();
            assert_eq!(
                connected,
                CONNECTED_GRAPH_COUNTS[i],
                "connected graphs on {} nodes",
                i + 1
            );
        }
    }

    /// Independent route: enumerate every labeled graph and deduplicate with
    /// a permutation-brute-force canonical form.
    #[test]
    fn agrees_with_labeled_brute_force_up_to_n5() {
        for n in 1..=5 {
            let edge_slots: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let mut classes = HashSet::new();
            for mask in 0u32..(1 << edge_slots.len()) {
                let mut g = SmallGraph { n, rows: [0; 8] };
                for (i, &(u, v)) in edge_slots.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        g.rows[u] |= 1 << v;
                        g.rows[v] |= 1 << u;
                    }
                }
                classes.insert(brute_canonical(&g));
            }
            assert_eq!(classes.len(), ALL_GRAPH_COUNTS[n - 1], "n = {n}");

            // The search-based canonical form matches the brute-force one.
            for g in &all_graphs_by_order(n)[n - 1] {
                assert_eq!(canonical_bits(g), brute_canonical(g));
            }
        }
    }

    fn brute_canonical(g: &SmallGraph) -> u32 {
        let mut ids: Vec<usize> = (0..g.n).collect();
        let mut best = 0;
        permute(&mut ids, 0, &mut |perm| {
            let mut bits = 0u32;
            for i in 0..g.n {
                for j in 0..i {
                    bits = (bits << 1) | u32::from(g.rows[perm[j]] & (1 << perm[i]) != 0);
                }
            }
            best = best.max(bits);
        });
        best
    }

    fn permute(ids: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
        if at == ids.len() {
            f(ids);
            return;
        }
        for i in at..ids.len() {
            ids.swap(at, i);
            permute(ids, at + 1, f);
            ids.swap(at, i);
        }
    }

    #[test]
    fn catalog_members_are_valid_graphs() {
        let graphs = connected_graphs(5).unwrap();
        assert_eq!(graphs.len(), 1 + 1 + 2 + 6 + 21);
        for g in &graphs {
            assert!(g.is_connected());
        }
        // No two members are identical as labeled graphs (weak sanity check;
        // the canonical dedup is tested above).
        let labeled: HashSet<Vec<(usize, usize)>> =
            graphs.iter().map(|g| g.edges().collect()).collect();
        assert!(labeled.len() >= 29);
        assert!(connected_graphs(0).is_err());
        assert!(connected_graphs(9).is_err());
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join("burngraph-test-catalog");
        let _ = std::fs::create_dir_all(&dir);
        let path = dir.join("catalog-n5.txt");
        let _ = std::fs::remove_file(&path);
        let generated = connected_graphs_cached(5, &path).unwrap();
        assert!(path.exists());
        let loaded = connected_graphs_cached(5, &path).unwrap();
        assert_eq!(generated, loaded);
        // A corrupt cache is regenerated, not trusted.
        std::fs::write(&path, "nonsense").unwrap();
        let regenerated = connected_graphs_cached(5, &path).unwrap();
        assert_eq!(generated, regenerated);
    }
}
