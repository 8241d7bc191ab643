//! Burning sequences and their three equivalent validity checks.
//!
//! A sequence `(x_1, ..., x_k)` burns the graph if round `i` burns source
//! `x_i` and fire spreads one hop per round, finishing by round `k`. The
//! same condition can be stated as a ball cover (`N_{k-1}[x_1] ∪ ... ∪
//! N_0[x_k] = V` plus `d(x_i, x_j) >= j - i`) or as a rooted tree partition
//! with shrinking heights. This module implements all three forms and the
//! conversions between them; the solver and the test suite cross-check them
//! against each other.
//!
//! Round ordering: within round `i`, fire first spreads from nodes burned in
//! earlier rounds, then `x_i` is chosen. The choice is legal as long as
//! `x_i` was unburned at the end of round `i - 1`; a source reached by the
//! same round's spread burns in round `i` either way. This is the ordering
//! under which simulation agrees exactly with the ball-cover form: sources
//! at distance exactly `j - i` are allowed, anything closer is rejected.

use crate::bitset::NodeSet;
use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use std::collections::HashMap;

/// Ordered distinct fire sources.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurningSequence {
    sources: Vec<NodeId>,
}

impl BurningSequence {
    pub fn new(sources: Vec<NodeId>) -> Result<Self> {
        if sources.is_empty() {
            return Err(Error::InvalidSequence("sequence must be nonempty".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for &s in &sources {
            if !seen.insert(s) {
                return Err(Error::InvalidSequence(format!("duplicate source {s}")));
            }
        }
        Ok(Self { sources })
    }

    pub fn sources(&self) -> &[NodeId] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty sequences
    }
}

impl std::fmt::Display for BurningSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ids: Vec<String> = self.sources.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", ids.join(","))
    }
}

/// Round at which each node burns, for a sequence that burns everything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnSchedule {
    rounds: Vec<u32>,
}

impl BurnSchedule {
    /// 1-based round in which `v` burns.
    pub fn round(&self, v: NodeId) -> u32 {
        self.rounds[v]
    }

    pub fn max_round(&self) -> u32 {
        *self.rounds.iter().max().unwrap()
    }

    pub fn rounds(&self) -> &[u32] {
        &self.rounds
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simulation {
    Complete(BurnSchedule),
    /// First violated round: either source `x_i` was already burned before
    /// round `i`, or (at round `k + 1`) nodes were left unburned.
    InvalidAt { round: usize, reason: SimFailure },
}

impl Simulation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Simulation::Complete(_))
    }

    pub fn schedule(&self) -> Option<&BurnSchedule> {
        match self {
            Simulation::Complete(s) => Some(s),
            Simulation::InvalidAt { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimFailure {
    SourceAlreadyBurned { source: NodeId, burned_in: u32 },
    LeftUnburned { node: NodeId },
}

const UNBURNED: u32 = 0;

/// Runs the burning process round by round.
pub fn simulate(g: &Graph, seq: &BurningSequence) -> Result<Simulation> {
    for &s in seq.sources() {
        g.check_node(s)?;
    }
    let k = seq.len();
    let mut burned_at = vec![UNBURNED; g.n()];
    let mut frontier: Vec<NodeId> = Vec::new();
    for (idx, &source) in seq.sources().iter().enumerate() {
        let round = (idx + 1) as u32;
        // Spread from everything burned in round - 1.
        let mut next = Vec::new();
        for &u in &frontier {
            for &v in g.neighbors(u) {
                if burned_at[v] == UNBURNED {
                    burned_at[v] = round;
                    next.push(v);
                }
            }
        }
        if burned_at[source] != UNBURNED && burned_at[source] < round {
            return Ok(Simulation::InvalidAt {
                round: round as usize,
                reason: SimFailure::SourceAlreadyBurned {
                    source,
                    burned_in: burned_at[source],
                },
            });
        }
        if burned_at[source] == UNBURNED {
            burned_at[source] = round;
            next.push(source);
        }
        frontier = next;
    }
    if let Some(node) = burned_at.iter().position(|&r| r == UNBURNED) {
        return Ok(Simulation::InvalidAt {
            round: k + 1,
            reason: SimFailure::LeftUnburned { node },
        });
    }
    Ok(Simulation::Complete(BurnSchedule { rounds: burned_at }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCheck {
    pub valid: bool,
    pub violation: Option<CoverViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    /// Node outside every `N_{k-i}[x_i]`.
    Uncovered { node: NodeId },
    /// `d(x_i, x_j) < j - i` for 1-based positions `i < j`.
    SourcesTooClose { i: usize, j: usize, dist: u32 },
}

/// Checks validity through the ball-cover form: the radius-`(k-i)` balls
/// around the sources must cover the graph and sources must be pairwise far
/// enough apart. Equivalent to [`simulate`] on every input.
pub fn check_by_covering(g: &Graph, dm: &DistanceMatrix, seq: &BurningSequence) -> Result<CoverCheck> {
    for &s in seq.sources() {
        g.check_node(s)?;
    }
    let xs = seq.sources();
    let k = xs.len();
    for j in 1..k {
        for i in 0..j {
            let need = (j - i) as u32;
            let d = dm.get(xs[i], xs[j]);
            if d < need {
                return Ok(CoverCheck {
                    valid: false,
                    violation: Some(CoverViolation::SourcesTooClose {
                        i: i + 1,
                        j: j + 1,
                        dist: d,
                    }),
                });
            }
        }
    }
    let mut covered = NodeSet::new(g.n());
    for (idx, &x) in xs.iter().enumerate() {
        covered.union_with(&dm.ball(x, (k - 1 - idx) as u32));
    }
    for node in 0..g.n() {
        if !covered.contains(node) {
            return Ok(CoverCheck {
                valid: false,
                violation: Some(CoverViolation::Uncovered { node }),
            });
        }
    }
    Ok(CoverCheck {
        valid: true,
        violation: None,
    })
}

/// One rooted subtree of a partition; `parent` maps every non-root member to
/// its tree parent along an edge of the host graph.
#[derive(Clone, Debug)]
pub struct TreePart {
    pub root: NodeId,
    pub members: Vec<NodeId>,
    pub parent: HashMap<NodeId, NodeId>,
}

impl TreePart {
    /// Greatest depth over members; `None` if a parent chain is broken.
    pub fn height(&self) -> Option<u32> {
        self.members
            .iter()
            .map(|&v| self.depth(v))
            .collect::<Option<Vec<_>>>()
            .map(|d| d.into_iter().max().unwrap_or(0))
    }

    fn depth(&self, mut v: NodeId) -> Option<u32> {
        let mut d = 0;
        let mut steps = 0;
        while v != self.root {
            v = *self.parent.get(&v)?;
            d += 1;
            steps += 1;
            if steps > self.members.len() {
                return None; // cycle
            }
        }
        Some(d)
    }
}

/// Partition of the node set into rooted subtrees with shrinking height
/// budgets: part `i` (1-based, out of `k`) may have height at most `k - i`.
#[derive(Clone, Debug)]
pub struct RootedTreePartition {
    pub parts: Vec<TreePart>,
}

/// Splits the graph along a valid burning sequence into fire-provenance
/// trees: every source roots its own tree, and every other node hangs off
/// the lowest-id neighbor that burned exactly one round before it. Depths
/// satisfy `depth(v) = burn_round(v) - i` inside part `i`, so part `i` has
/// height at most `k - i`.
pub fn sequence_to_partition(
    g: &Graph,
    dm: &DistanceMatrix,
    seq: &BurningSequence,
) -> Result<RootedTreePartition> {
    let _ = dm;
    let schedule = match simulate(g, seq)? {
        Simulation::Complete(s) => s,
        Simulation::InvalidAt { round, .. } => {
            return Err(Error::InvalidSequence(format!(
                "sequence is not valid (fails at round {round})"
            )))
        }
    };
    let xs = seq.sources();
    let k = xs.len();
    let mut position = vec![usize::MAX; g.n()];
    for (idx, &x) in xs.iter().enumerate() {
        position[x] = idx;
    }
    // Fire provenance: a non-source node caught fire from some neighbor that
    // burned in the previous round.
    let mut parent_of = vec![usize::MAX; g.n()];
    let mut assignment = vec![usize::MAX; g.n()];
    let mut order: Vec<NodeId> = (0..g.n()).collect();
    order.sort_unstable_by_key(|&v| schedule.round(v));
    for &v in &order {
        if position[v] != usize::MAX {
            assignment[v] = position[v];
            continue;
        }
        let t = schedule.round(v);
        let p = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&u| schedule.round(u) + 1 == t)
            .ok_or_else(|| {
                Error::InternalInvariant(format!("node {v} burned without a fire source"))
            })?;
        parent_of[v] = p;
        assignment[v] = assignment[p];
    }
    let mut parts = Vec::with_capacity(k);
    for (idx, &x) in xs.iter().enumerate() {
        let members: Vec<NodeId> = (0..g.n()).filter(|&v| assignment[v] == idx).collect();
        let parent: HashMap<NodeId, NodeId> = members
            .iter()
            .filter(|&&v| v != x)
            .map(|&v| (v, parent_of[v]))
            .collect();
        parts.push(TreePart {
            root: x,
            members,
            parent,
        });
    }
    Ok(RootedTreePartition { parts })
}

/// Reads the burning sequence back off a partition after checking all of its
/// invariants: the parts partition the nodes, each part is a rooted subtree
/// of the graph with height at most `k - i`, and roots of parts `i` and `j`
/// are at distance at least `|i - j|`.
pub fn partition_to_sequence(
    g: &Graph,
    dm: &DistanceMatrix,
    partition: &RootedTreePartition,
) -> Result<BurningSequence> {
    let k = partition.parts.len();
    if k == 0 {
        return Err(Error::InvalidPartition("no parts".into()));
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (idx, part) in partition.parts.iter().enumerate() {
        if part.members.is_empty() {
            return Err(Error::InvalidPartition(format!("part {} is empty", idx + 1)));
        }
        for &v in &part.members {
            g.check_node(v)?;
            if owner[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!(
                    "node {v} appears in parts {} and {}",
                    owner[v] + 1,
                    idx + 1
                )));
            }
            owner[v] = idx;
        }
        if !part.members.contains(&part.root) {
            return Err(Error::InvalidPartition(format!(
                "root {} is not a member of part {}",
                part.root,
                idx + 1
            )));
        }
        for (&v, &p) in &part.parent {
            if owner.get(p).copied() != Some(idx) || !part.members.contains(&v) {
                return Err(Error::InvalidPartition(format!(
                    "parent link {v} -> {p} leaves part {}",
                    idx + 1
                )));
            }
            if !g.has_edge(v, p) {
                return Err(Error::InvalidPartition(format!(
                    "parent link {v} -> {p} is not an edge of the graph"
                )));
            }
        }
        let height = part.height().ok_or_else(|| {
            Error::InvalidPartition(format!("part {} parent links do not form a rooted tree", idx + 1))
        })?;
        let budget = (k - idx - 1) as u32;
        if height > budget {
            return Err(Error::InvalidPartition(format!(
                "part {} has height {height}, budget {budget}",
                idx + 1
            )));
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::InvalidPartition(format!("node {v} is in no part")));
    }
    for i in 0..k {
        for j in i + 1..k {
            let need = (j - i) as u32;
            let d = dm.get(partition.parts[i].root, partition.parts[j].root);
            if d < need {
                return Err(Error::InvalidPartition(format!(
                    "roots of parts {} and {} are at distance {d} < {need}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    BurningSequence::new(partition.parts.iter().map(|p| p.root).collect())
}

/// Builds a valid burning sequence from a covering by connected parts of
/// induced radius at most `radius_bound`: burn centers of parts that still
/// lack one (smallest part index first, lowest center id), then keep burning
/// leftover unburned nodes. For `t` parts the result has length at most
/// `t + radius_bound`; when part `i` has radius at most `k - i` the result
/// has length at most `k`.
pub fn cover_to_sequence(
    g: &Graph,
    dm: &DistanceMatrix,
    cover: &[NodeSet],
    radius_bound: u32,
) -> Result<BurningSequence> {
    let centers = validate_cover(g, cover, radius_bound)?;
    let seq = run_cover_procedure(g, cover, &centers, cover.len() + radius_bound as usize)?;
    // The construction is guaranteed to produce a valid sequence; check it
    // anyway since the solver builds its witnesses through this path.
    match check_by_covering(g, dm, &seq)? {
        CoverCheck { valid: true, .. } => Ok(seq),
        CoverCheck { violation, .. } => Err(Error::InternalInvariant(format!(
            "cover procedure produced an invalid sequence: {violation:?}"
        ))),
    }
}

/// Per-part sorted center lists of the induced subgraphs.
fn validate_cover(g: &Graph, cover: &[NodeSet], radius_bound: u32) -> Result<Vec<Vec<NodeId>>> {
    if cover.is_empty() {
        return Err(Error::InvalidCover("cover has no parts".into()));
    }
    let mut union = NodeSet::new(g.n());
    for part in cover {
        union.union_with(part);
    }
    if union.len() != g.n() {
        let missing = (0..g.n()).find(|&v| !union.contains(v)).unwrap();
        return Err(Error::InvalidCover(format!("node {missing} is uncovered")));
    }
    let mut centers = Vec::with_capacity(cover.len());
    for (idx, part) in cover.iter().enumerate() {
        let members = part.to_vec();
        if members.is_empty() {
            return Err(Error::InvalidCover(format!("part {} is empty", idx + 1)));
        }
        let ecc = induced_eccentricities(g, part, &members);
        let radius = *ecc.iter().min().unwrap();
        if radius == u32::MAX {
            return Err(Error::InvalidCover(format!(
                "part {} does not induce a connected subgraph",
                idx + 1
            )));
        }
        if radius > radius_bound {
            return Err(Error::InvalidCover(format!(
                "part {} has induced radius {radius} > {radius_bound}",
                idx + 1
            )));
        }
        centers.push(
            members
                .iter()
                .copied()
                .zip(&ecc)
                .filter(|&(_, &e)| e == radius)
                .map(|(v, _)| v)
                .collect(),
        );
    }
    Ok(centers)
}

/// Eccentricity of each member within the induced subgraph, `u32::MAX` when
/// the member does not reach the whole part.
fn induced_eccentricities(g: &Graph, part: &NodeSet, members: &[NodeId]) -> Vec<u32> {
    members
        .iter()
        .map(|&src| {
            let mut dist: HashMap<NodeId, u32> = HashMap::from([(src, 0)]);
            let mut queue = std::collections::VecDeque::from([src]);
            let mut seen = 1;
            let mut ecc = 0;
            while let Some(u) = queue.pop_front() {
                let du = dist[&u];
                for &v in g.neighbors(u) {
                    if part.contains(v) && !dist.contains_key(&v) {
                        dist.insert(v, du + 1);
                        ecc = ecc.max(du + 1);
                        seen += 1;
                        queue.push_back(v);
                    }
                }
            }
            if seen == members.len() {
                ecc
            } else {
                u32::MAX
            }
        })
        .collect()
}

fn run_cover_procedure(
    g: &Graph,
    cover: &[NodeSet],
    centers: &[Vec<NodeId>],
    round_cap: usize,
) -> Result<BurningSequence> {
    let mut burned_at = vec![UNBURNED; g.n()];
    let mut frontier: Vec<NodeId> = Vec::new();
    let mut sources = Vec::new();
    let mut satisfied = vec![false; cover.len()];
    for round in 1.. {
        if burned_at.iter().all(|&b| b != UNBURNED) {
            break;
        }
        if round > round_cap {
            return Err(Error::InternalInvariant(
                "cover procedure exceeded its round budget".into(),
            ));
        }
        let round = round as u32;
        let mut next = Vec::new();
        for &u in &frontier {
            for &v in g.neighbors(u) {
                if burned_at[v] == UNBURNED {
                    burned_at[v] = round;
                    next.push(v);
                }
            }
        }
        // A part is satisfied once some center of it burned in an earlier
        // round; this round's spread does not count yet.
        for (idx, part_centers) in centers.iter().enumerate() {
            if !satisfied[idx] {
                satisfied[idx] = part_centers
                    .iter()
                    .any(|&c| burned_at[c] != UNBURNED && burned_at[c] < round);
            }
        }
        let lacking = satisfied.iter().position(|&s| !s);
        let source = match lacking {
            Some(idx) => centers[idx][0],
            None => {
                // Pad with the lowest unburned node, falling back to one that
                // only this round's spread reached (it was unburned before the
                // round, so choosing it is still legal).
                let fresh = (0..g.n()).find(|&v| burned_at[v] == UNBURNED);
                match fresh.or_else(|| (0..g.n()).find(|&v| burned_at[v] == round)) {
                    Some(v) => v,
                    None => break, // everything burned before this round
                }
            }
        };
        if burned_at[source] == UNBURNED {
            burned_at[source] = round;
            next.push(source);
        } else if burned_at[source] < round {
            return Err(Error::InternalInvariant(format!(
                "cover procedure chose an already burned source {source}"
            )));
        }
        sources.push(source);
        if let Some(idx) = lacking {
            satisfied[idx] = true;
        }
        frontier = next;
    }
    BurningSequence::new(sources)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::DistanceMatrix;

    fn seq(ids: &[usize]) -> BurningSequence {
        BurningSequence::new(ids.to_vec()).unwrap()
    }

    #[test]
    fn sequence_constructor_rejects_bad_input() {
        assert!(BurningSequence::new(vec![]).is_err());
        assert!(BurningSequence::new(vec![1, 1]).is_err());
        assert!(BurningSequence::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn p4_optimal_sequence_schedule() {
        // Burning v2 then v4 (ids 1 and 3) burns P_4 in two rounds.
        let g = Graph::path(4).unwrap();
        let sim = simulate(&g, &seq(&[1, 3])).unwrap();
        let schedule = sim.schedule().expect("valid sequence");
        assert_eq!(schedule.rounds(), &[2, 1, 2, 2]);
        assert_eq!(schedule.max_round(), 2);
    }

    #[test]
    fn single_node_burns_in_one_round() {
        let g = Graph::path(1).unwrap();
        let sim = simulate(&g, &seq(&[0])).unwrap();
        assert_eq!(sim.schedule().unwrap().rounds(), &[1]);
    }

    #[test]
    fn short_sequence_fails_past_its_last_round() {
        // (v2, v3) on P_4 leaves v4 unburned after round 2.
        let g = Graph::path(4).unwrap();
        let sim = simulate(&g, &seq(&[1, 2])).unwrap();
        assert_eq!(
            sim,
            Simulation::InvalidAt {
                round: 3,
                reason: SimFailure::LeftUnburned { node: 3 }
            }
        );
    }

    #[test]
    fn source_burned_in_earlier_round_is_rejected() {
        // On P_5, v2 (id 1) burns in round 2 from v1; picking it in round 3
        // is a violation.
        let g = Graph::path(5).unwrap();
        let sim = simulate(&g, &seq(&[0, 4, 1])).unwrap();
        assert_eq!(
            sim,
            Simulation::InvalidAt {
                round: 3,
                reason: SimFailure::SourceAlreadyBurned { source: 1, burned_in: 2 }
            }
        );
    }

    #[test]
    fn same_round_spread_does_not_invalidate_the_source() {
        // In K_2 both orders are valid: the second source is reached by
        // spread exactly in its own round.
        let g = Graph::complete(2).unwrap();
        assert!(simulate(&g, &seq(&[0, 1])).unwrap().is_valid());
        assert!(simulate(&g, &seq(&[1, 0])).unwrap().is_valid());
    }

    #[test]
    fn simulate_rejects_out_of_range_ids() {
        let g = Graph::path(3).unwrap();
        assert_eq!(
            simulate(&g, &seq(&[7])),
            Err(Error::InvalidNode { node: 7, n: 3 })
        );
    }

    #[test]
    fn covering_check_matches_examples() {
        let g = Graph::path(4).unwrap();
        let dm = DistanceMatrix::compute(&g);
        assert!(check_by_covering(&g, &dm, &seq(&[1, 3])).unwrap().valid);

        let r = check_by_covering(&g, &dm, &seq(&[1, 2])).unwrap();
        assert_eq!(r.violation, Some(CoverViolation::Uncovered { node: 3 }));

        let r = check_by_covering(&g, &dm, &seq(&[0, 1])).unwrap();
        assert_eq!(r.violation, Some(CoverViolation::Uncovered { node: 2 }));

        // Distance violation: d = 1 but positions two apart.
        let g5 = Graph::path(5).unwrap();
        let dm5 = DistanceMatrix::compute(&g5);
        let r = check_by_covering(&g5, &dm5, &seq(&[0, 4, 1])).unwrap();
        assert_eq!(
            r.violation,
            Some(CoverViolation::SourcesTooClose { i: 1, j: 3, dist: 1 })
        );
    }

    #[test]
    fn partition_round_trip_on_p4() {
        let g = Graph::path(4).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let s = seq(&[1, 3]);
        let p = sequence_to_partition(&g, &dm, &s).unwrap();
        assert_eq!(p.parts.len(), 2);
        assert_eq!(p.parts[0].root, 1);
        assert_eq!(p.parts[0].members, vec![0, 1, 2]);
        assert_eq!(p.parts[0].height(), Some(1));
        assert_eq!(p.parts[1].root, 3);
        assert_eq!(p.parts[1].members, vec![3]);
        assert_eq!(p.parts[1].height(), Some(0));

        let back = partition_to_sequence(&g, &dm, &p).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn partition_of_single_node() {
        let g = Graph::path(1).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let p = sequence_to_partition(&g, &dm, &seq(&[0])).unwrap();
        assert_eq!(p.parts.len(), 1);
        assert_eq!(p.parts[0].height(), Some(0));
        assert_eq!(partition_to_sequence(&g, &dm, &p).unwrap(), seq(&[0]));
    }

    #[test]
    fn partition_rejects_invalid_sequences_and_partitions() {
        let g = Graph::path(4).unwrap();
        let dm = DistanceMatrix::compute(&g);
        assert!(matches!(
            sequence_to_partition(&g, &dm, &seq(&[0, 1])),
            Err(Error::InvalidSequence(_))
        ));

        // Roots of adjacent parts at distance 0 is impossible; emulate a bad
        // partition by reusing the same root twice.
        let part = |root: usize, members: Vec<usize>, parent: &[(usize, usize)]| TreePart {
            root,
            members,
            parent: parent.iter().copied().collect(),
        };
        let bad = RootedTreePartition {
            parts: vec![
                part(1, vec![0, 1, 2], &[(0, 1), (2, 1)]),
                part(1, vec![3], &[]),
            ],
        };
        assert!(matches!(
            partition_to_sequence(&g, &dm, &bad),
            Err(Error::InvalidPartition(_))
        ));

        // Height budget violation: part 2 of 2 must have height 0.
        let bad = RootedTreePartition {
            parts: vec![
                part(1, vec![0, 1], &[(0, 1)]),
                part(2, vec![2, 3], &[(3, 2)]),
            ],
        };
        let err = partition_to_sequence(&g, &dm, &bad).unwrap_err();
        assert!(matches!(err, Error::InvalidPartition(ref m) if m.contains("height")));

        // Parent link that is not an edge.
        let bad = RootedTreePartition {
            parts: vec![
                part(1, vec![0, 1, 2], &[(0, 1), (2, 1)]),
                part(3, vec![3], &[]),
            ],
        };
        assert!(partition_to_sequence(&g, &dm, &bad).is_ok());
        let bad = RootedTreePartition {
            parts: vec![
                part(1, vec![0, 1, 3], &[(0, 1), (3, 1)]),
                part(2, vec![2], &[]),
            ],
        };
        let err = partition_to_sequence(&g, &dm, &bad).unwrap_err();
        assert!(matches!(err, Error::InvalidPartition(ref m) if m.contains("not an edge")));
    }

    #[test]
    fn cover_to_sequence_on_p9_balls() {
        // Three radius-1 balls around v2, v5, v8 cover P_9; the construction
        // must finish within 3 + 1 rounds.
        let g = Graph::path(9).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let cover = vec![dm.ball(1, 1), dm.ball(4, 1), dm.ball(7, 1)];
        let s = cover_to_sequence(&g, &dm, &cover, 1).unwrap();
        assert!(s.len() <= 4);
        assert!(simulate(&g, &s).unwrap().is_valid());
    }

    #[test]
    fn cover_to_sequence_on_whole_clique() {
        let g = Graph::complete(6).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let cover = vec![NodeSet::full(6)];
        let s = cover_to_sequence(&g, &dm, &cover, 1).unwrap();
        assert!(s.len() <= 2);
        assert!(simulate(&g, &s).unwrap().is_valid());
    }

    #[test]
    fn cover_with_shrinking_radii_burns_within_k() {
        // Parts of radius k-1, k-2, ..., 0 burn in at most k rounds.
        let g = Graph::path(9).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let cover = vec![dm.ball(2, 2), dm.ball(6, 1), dm.ball(8, 0)];
        let s = cover_to_sequence(&g, &dm, &cover, 2).unwrap();
        assert!(s.len() <= 3);
        assert!(simulate(&g, &s).unwrap().is_valid());
    }

    #[test]
    fn cover_validation_errors() {
        let g = Graph::path(4).unwrap();
        let dm = DistanceMatrix::compute(&g);
        // Union misses node 3.
        let cover = vec![NodeSet::from_iter(4, [0, 1, 2])];
        assert!(matches!(
            cover_to_sequence(&g, &dm, &cover, 2),
            Err(Error::InvalidCover(_))
        ));
        // Disconnected part.
        let cover = vec![NodeSet::from_iter(4, [0, 3]), NodeSet::from_iter(4, [1, 2])];
        assert!(matches!(
            cover_to_sequence(&g, &dm, &cover, 2),
            Err(Error::InvalidCover(_))
        ));
        // Radius too large.
        let cover = vec![NodeSet::full(4)];
        assert!(matches!(
            cover_to_sequence(&g, &dm, &cover, 1),
            Err(Error::InvalidCover(_))
        ));
    }
}
