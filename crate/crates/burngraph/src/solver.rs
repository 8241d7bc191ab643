//! Exact burning number computation.
//!
//! The search runs over the ball-cover form rather than raw sequences: the
//! graph burns in `k` rounds iff some choice of centers `x_1, ..., x_k`
//! covers the node set with balls of radii `k-1, ..., 0`. Dropping the
//! pairwise distance constraints shrinks the space; a concrete sequence
//! witness is reconstructed from the cover afterwards.

use crate::bitset::NodeSet;
use crate::ceil_sqrt;
use crate::dist::{component_diameter, DistanceMatrix};
use crate::engine::{self, BurningSequence};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, Shape};
use crate::spanning;
use std::collections::hash_map::Entry;
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMethod {
    Exact,
    ClosedForm,
    HeuristicUpper,
}

impl SolveMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveMethod::Exact => "exact",
            SolveMethod::ClosedForm => "closed-form",
            SolveMethod::HeuristicUpper => "heuristic-upper",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub burning_number: usize,
    pub witness: BurningSequence,
    pub method: SolveMethod,
    pub nodes_explored: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    /// Dispatch closed forms for graphs built by the path/cycle/complete
    /// generators instead of searching.
    pub use_closed_forms: bool,
    /// Fan the first search level out to rayon workers. The witness stays
    /// deterministic (leftmost feasible candidate wins) but the explored-node
    /// count does not, so this is off by default.
    pub parallel: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            use_closed_forms: true,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecideOutcome {
    pub witness: Option<BurningSequence>,
    pub explored: u64,
}

/// Is there a burning sequence of length `k`? Searches for centers whose
/// balls of radii `k-1, ..., 0` cover the graph; a found cover is converted
/// into a valid sequence, `None` means no such cover (and hence no such
/// sequence) exists.
pub fn decide(g: &Graph, dm: &DistanceMatrix, k: usize) -> Result<DecideOutcome> {
    decide_with(g, dm, k, &SolverOptions::default())
}

pub fn decide_with(
    g: &Graph,
    dm: &DistanceMatrix,
    k: usize,
    opts: &SolverOptions,
) -> Result<DecideOutcome> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!(
            "decision asks for k = {k} on a graph of order {}",
            g.n()
        )));
    }
    let ctx = SearchContext::new(g, dm, k);
    let full = NodeSet::full(g.n());

    if opts.parallel && g.n() >= 32 {
        use rayon::prelude::*;
        let cands = ctx.candidates(1, &full);
        let found: Option<Vec<NodeId>> = cands
            .par_iter()
            .find_map_first(|&(_, v)| {
                let mut search = CoverSearch::new(&ctx);
                let mut uncovered = full.clone();
                uncovered.subtract(&ctx.balls[k - 1][v]);
                let mut chosen = vec![v];
                search.run(2, &uncovered, &mut chosen).then_some(chosen)
            });
        let explored = cands.len() as u64; // count is not stable in parallel mode
        return match found {
            Some(chosen) => Ok(DecideOutcome {
                witness: Some(ctx.witness_from_centers(&chosen)?),
                explored,
            }),
            None => Ok(DecideOutcome {
                witness: None,
                explored,
            }),
        };
    }

    let mut search = CoverSearch::new(&ctx);
    let mut chosen = Vec::with_capacity(k);
    let found = search.run(1, &full, &mut chosen);
    let explored = search.explored;
    if found {
        Ok(DecideOutcome {
            witness: Some(ctx.witness_from_centers(&chosen)?),
            explored,
        })
    } else {
        Ok(DecideOutcome {
            witness: None,
            explored,
        })
    }
}

/// Shared immutable data of one decision instance.
struct SearchContext<'a> {
    g: &'a Graph,
    dm: &'a DistanceMatrix,
    k: usize,
    /// `balls[r][v]` for `r` in `0..k`.
    balls: Vec<Vec<NodeSet>>,
    /// `suffix_cap[p]`: most nodes positions `p..=k` can still cover.
    suffix_cap: Vec<usize>,
}

impl<'a> SearchContext<'a> {
    fn new(g: &'a Graph, dm: &'a DistanceMatrix, k: usize) -> Self {
        let n = g.n();
        let balls: Vec<Vec<NodeSet>> = (0..k as u32)
            .map(|r| (0..n).map(|v| dm.ball(v, r)).collect())
            .collect();
        let maxcov: Vec<usize> = balls
            .iter()
            .map(|per_radius| per_radius.iter().map(NodeSet::len).max().unwrap_or(0))
            .collect();
        let mut suffix_cap = vec![0usize; k + 2];
        for p in (1..=k).rev() {
            suffix_cap[p] = suffix_cap[p + 1] + maxcov[k - p];
        }
        SearchContext {
            g,
            dm,
            k,
            balls,
            suffix_cap,
        }
    }

    /// Candidates for position `p`, best coverage gain first, lowest id on
    /// ties. Zero-gain candidates are never useful: a solution using one can
    /// drop it and shift later (smaller) balls up to larger radii.
    fn candidates(&self, p: usize, uncovered: &NodeSet) -> Vec<(usize, NodeId)> {
        let r = self.k - p;
        let mut cands: Vec<(usize, NodeId)> = (0..self.g.n())
            .filter_map(|v| {
                let gain = self.balls[r][v].intersection_len(uncovered);
                (gain > 0).then_some((gain, v))
            })
            .collect();
        cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        cands
    }

    /// Turns chosen centers (position order, radii `k-1, k-2, ...`) into a
    /// valid burning sequence via the cover construction.
    fn witness_from_centers(&self, centers: &[NodeId]) -> Result<BurningSequence> {
        let parts: Vec<NodeSet> = centers
            .iter()
            .enumerate()
            .map(|(idx, &v)| self.balls[self.k - 1 - idx][v].clone())
            .collect();
        let seq = engine::cover_to_sequence(self.g, self.dm, &parts, (self.k - 1) as u32)?;
        if seq.len() > self.k {
            return Err(Error::InternalInvariant(format!(
                "cover of {} parts produced a sequence of length {} > k = {}",
                parts.len(),
                seq.len(),
                self.k
            )));
        }
        Ok(seq)
    }
}

struct CoverSearch<'a, 'b> {
    ctx: &'b SearchContext<'a>,
    /// Uncovered sets proven infeasible, keyed to the smallest failing
    /// position: failing at `p` implies failing at any later position, where
    /// less ball capacity remains.
    failed: HashMap<NodeSet, usize>,
    explored: u64,
}

impl<'a, 'b> CoverSearch<'a, 'b> {
    fn new(ctx: &'b SearchContext<'a>) -> Self {
        CoverSearch {
            ctx,
            failed: HashMap::new(),
            explored: 0,
        }
    }

    fn run(&mut self, p: usize, uncovered: &NodeSet, chosen: &mut Vec<NodeId>) -> bool {
        self.explored += 1;
        if uncovered.is_empty() {
            return true;
        }
        if p > self.ctx.k {
            return false;
        }
        let need = uncovered.len();
        if need > self.ctx.suffix_cap[p] {
            return false;
        }
        if let Some(&fp) = self.failed.get(uncovered) {
            if fp <= p {
                return false;
            }
        }
        let rest = self.ctx.suffix_cap[p + 1];
        let r = self.ctx.k - p;
        for (gain, v) in self.ctx.candidates(p, uncovered) {
            if gain + rest < need {
                break; // candidates are gain-sorted
            }
            let mut next = uncovered.clone();
            next.subtract(&self.ctx.balls[r][v]);
            chosen.push(v);
            if self.run(p + 1, &next, chosen) {
                return true;
            }
            chosen.pop();
        }
        match self.failed.entry(uncovered.clone()) {
            Entry::Occupied(mut e) => {
                if p < *e.get() {
                    e.insert(p);
                }
            }
            Entry::Vacant(e) => {
                e.insert(p);
            }
        }
        false
    }
}

/// Exact burning number with a validated witness.
pub fn burning_number(g: &Graph, dm: &DistanceMatrix) -> Result<SolveResult> {
    burning_number_with(g, dm, &SolverOptions::default())
}

pub fn burning_number_with(
    g: &Graph,
    dm: &DistanceMatrix,
    opts: &SolverOptions,
) -> Result<SolveResult> {
    if opts.use_closed_forms {
        if let Some(result) = closed_form(g, dm)? {
            return Ok(result);
        }
    }
    let (lo, hi) = seed_bounds(g, dm);
    let mut explored = 0;
    for k in lo..=hi {
        let outcome = decide_with(g, dm, k, opts)?;
        explored += outcome.explored;
        if let Some(witness) = outcome.witness {
            let result = SolveResult {
                burning_number: witness.len(),
                witness,
                method: SolveMethod::Exact,
                nodes_explored: explored,
            };
            if result.burning_number != k {
                return Err(Error::InternalInvariant(format!(
                    "witness length {} disagrees with first feasible k = {k}",
                    result.burning_number
                )));
            }
            verify_witness(g, dm, &result.witness)?;
            return Ok(result);
        }
    }
    Err(Error::InternalInvariant(format!(
        "no feasible k in [{lo}, {hi}]"
    )))
}

/// Lower and upper bounds seeding the exact search. Connected graphs use the
/// diameter lower bound and the radius+1 upper bound; disconnected graphs
/// need one source per component and fall back to `n` above.
fn seed_bounds(g: &Graph, dm: &DistanceMatrix) -> (usize, usize) {
    let n = g.n();
    if n == 1 {
        return (1, 1);
    }
    let comps = g.components();
    let mut lo = 2;
    for comp in &comps {
        lo = lo.max(ceil_sqrt(component_diameter(dm, comp) as usize + 1));
    }
    if comps.len() == 1 {
        let radius = (0..n).map(|v| dm.eccentricity(v).unwrap()).min().unwrap();
        (lo, radius as usize + 1)
    } else {
        (lo.max(comps.len()), n)
    }
}

fn verify_witness(g: &Graph, dm: &DistanceMatrix, witness: &BurningSequence) -> Result<()> {
    let sim_ok = engine::simulate(g, witness)?.is_valid();
    let cover_ok = engine::check_by_covering(g, dm, witness)?.valid;
    if sim_ok && cover_ok {
        Ok(())
    } else {
        Err(Error::InternalInvariant(format!(
            "witness {witness} rejected by a checker (simulation: {sim_ok}, covering: {cover_ok})"
        )))
    }
}

fn closed_form(g: &Graph, dm: &DistanceMatrix) -> Result<Option<SolveResult>> {
    let (k, witness) = match g.shape() {
        Some(Shape::Path(n)) => (ceil_sqrt(n), path_witness(n)?),
        Some(Shape::Cycle(n)) => {
            let k = ceil_sqrt(n);
            (k, cycle_witness(g, dm, n, k)?)
        }
        Some(Shape::Complete(n)) => {
            let ids = if n == 1 { vec![0] } else { vec![0, 1] };
            (ids.len(), BurningSequence::new(ids)?)
        }
        _ => return Ok(None),
    };
    verify_witness(g, dm, &witness)?;
    if witness.len() != k {
        return Err(Error::InternalInvariant(format!(
            "closed-form witness has length {}, expected {k}",
            witness.len()
        )));
    }
    Ok(Some(SolveResult {
        burning_number: k,
        witness,
        method: SolveMethod::ClosedForm,
        nodes_explored: 0,
    }))
}

/// The explicit optimal sequence for the path `0 - 1 - ... - n-1`: counting
/// from the far end, source `k - i` sits `i^2 + i` nodes in, and the first
/// source takes the leftover prefix.
fn path_witness(n: usize) -> Result<BurningSequence> {
    let k = ceil_sqrt(n);
    if k == 1 {
        return BurningSequence::new(vec![0]);
    }
    let mut by_position = vec![0; k];
    for i in 0..k - 1 {
        by_position[k - i - 1] = n - i * i - i - 1;
    }
    by_position[0] = if n >= (k - 1) * (k - 1) + k {
        n - (k - 1) * (k - 1) - (k - 1) - 1
    } else {
        0
    };
    BurningSequence::new(by_position)
}

/// Cycle witness: the path witness on the cycle minus one edge covers the
/// cycle as well (balls only grow), so convert that cover back into a
/// sequence on the cycle.
fn cycle_witness(g: &Graph, dm: &DistanceMatrix, n: usize, k: usize) -> Result<BurningSequence> {
    let path = path_witness(n)?;
    let parts: Vec<NodeSet> = path
        .sources()
        .iter()
        .enumerate()
        .map(|(idx, &v)| dm.ball(v, (k - 1 - idx) as u32))
        .collect();
    let seq = engine::cover_to_sequence(g, dm, &parts, (k - 1) as u32)?;
    if seq.len() != k {
        return Err(Error::InternalInvariant(format!(
            "cycle witness length {} != {k}",
            seq.len()
        )));
    }
    Ok(seq)
}

#[derive(Clone, Debug)]
pub struct OptimalSequences {
    pub burning_number: usize,
    pub sequences: Vec<BurningSequence>,
    /// False when enumeration stopped at `limit`.
    pub complete: bool,
}

/// Every valid burning sequence of length exactly `b(G)`, in lexicographic
/// order, up to `limit`. Enumeration runs over raw sequences (validity by
/// simulation), not covers: distinct sequences with the same cover matter to
/// callers.
pub fn enumerate_optimal_sequences(
    g: &Graph,
    dm: &DistanceMatrix,
    limit: usize,
) -> Result<OptimalSequences> {
    let k = burning_number(g, dm)?.burning_number;
    let ctx = SearchContext::new(g, dm, k);
    let mut out = OptimalSequences {
        burning_number: k,
        sequences: Vec::new(),
        complete: true,
    };
    let mut prefix = Vec::with_capacity(k);
    let covered = NodeSet::new(g.n());
    enumerate_rec(g, dm, &ctx, &mut prefix, &covered, limit, &mut out)?;
    Ok(out)
}

fn enumerate_rec(
    g: &Graph,
    dm: &DistanceMatrix,
    ctx: &SearchContext,
    prefix: &mut Vec<NodeId>,
    covered: &NodeSet,
    limit: usize,
    out: &mut OptimalSequences,
) -> Result<()> {
    let k = ctx.k;
    let p = prefix.len() + 1;
    if p > k {
        if covered.len() == g.n() {
            let seq = BurningSequence::new(prefix.clone())?;
            debug_assert!(engine::simulate(g, &seq)?.is_valid());
            if out.sequences.len() == limit {
                out.complete = false;
                return Ok(());
            }
            out.sequences.push(seq);
        }
        return Ok(());
    }
    if covered.len() + ctx.suffix_cap[p] < g.n() {
        return Ok(());
    }
    let r = (k - p) as u32;
    'next: for v in 0..g.n() {
        if prefix.contains(&v) {
            continue;
        }
        for (idx, &x) in prefix.iter().enumerate() {
            if dm.get(x, v) < (p - idx - 1) as u32 {
                continue 'next;
            }
        }
        let mut next_covered = covered.clone();
        next_covered.union_with(&dm.ball(v, r));
        prefix.push(v);
        enumerate_rec(g, dm, ctx, prefix, &next_covered, limit, out)?;
        prefix.pop();
        if !out.complete {
            return Ok(());
        }
    }
    Ok(())
}

/// Greedy max-coverage upper bound: for ascending `k`, repeatedly pick the
/// node covering the most uncovered nodes at the current radius. The first
/// `k` whose greedy run covers everything yields a valid sequence, so the
/// result is always an upper bound on `b(G)`.
pub fn greedy_upper_bound(g: &Graph, dm: &DistanceMatrix) -> Result<SolveResult> {
    let (lo, hi) = seed_bounds(g, dm);
    let mut picks = 0u64;
    for k in lo..=hi {
        let ctx = SearchContext::new(g, dm, k);
        let mut uncovered = NodeSet::full(g.n());
        let mut centers = Vec::new();
        for p in 1..=k {
            if uncovered.is_empty() {
                break;
            }
            let r = k - p;
            let best = (0..g.n())
                .filter(|v| !centers.contains(v))
                .max_by(|&a, &b| {
                    let ga = ctx.balls[r][a].intersection_len(&uncovered);
                    let gb = ctx.balls[r][b].intersection_len(&uncovered);
                    ga.cmp(&gb).then(b.cmp(&a))
                })
                .expect("graph has unused nodes while uncovered remain");
            picks += 1;
            uncovered.subtract(&ctx.balls[r][best]);
            centers.push(best);
        }
        if uncovered.is_empty() {
            let witness = ctx.witness_from_centers(&centers)?;
            verify_witness(g, dm, &witness)?;
            return Ok(SolveResult {
                burning_number: witness.len(),
                witness,
                method: SolveMethod::HeuristicUpper,
                nodes_explored: picks,
            });
        }
    }
    Err(Error::InternalInvariant(
        "greedy failed to cover within the upper bound".into(),
    ))
}

/// `b(G)` as the minimum burning number over all spanning trees; agrees with
/// the direct computation and exists purely as a cross-check.
pub fn burning_number_via_spanning_trees(
    g: &Graph,
    dm: &DistanceMatrix,
    tree_limit: usize,
) -> Result<usize> {
    let _ = dm;
    let trees = spanning::enumerate_spanning_trees(g, tree_limit)?;
    let mut best = usize::MAX;
    for tree in &trees {
        let tdm = DistanceMatrix::compute(tree);
        best = best.min(burning_number(tree, &tdm)?.burning_number);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(g: &Graph) -> SolveResult {
        let dm = DistanceMatrix::compute(g);
        burning_number(g, &dm).unwrap()
    }

    fn solve_exactly(g: &Graph) -> SolveResult {
        let dm = DistanceMatrix::compute(g);
        burning_number_with(
            g,
            &dm,
            &SolverOptions {
                use_closed_forms: false,
                parallel: false,
            },
        )
        .unwrap()
    }

    #[test]
    fn decide_on_p4() {
        let g = Graph::path(4).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let yes = decide(&g, &dm, 2).unwrap();
        assert!(yes.witness.is_some());
        let no = decide(&g, &dm, 1).unwrap();
        assert!(no.witness.is_none());
        assert!(decide(&g, &dm, 0).is_err());
        assert!(decide(&g, &dm, 5).is_err());
    }

    #[test]
    fn decide_p9_k2_infeasible() {
        // Balls of radii 1 and 0 cover at most 3 + 1 < 9 path nodes.
        let g = Graph::path(9).unwrap();
        let dm = DistanceMatrix::compute(&g);
        assert!(decide(&g, &dm, 2).unwrap().witness.is_none());
    }

    #[test]
    fn closed_forms_match_search() {
        for n in 1..=16 {
            let p = Graph::path(n).unwrap();
            let dispatched = solve(&p);
            let searched = solve_exactly(&p);
            assert_eq!(dispatched.method, SolveMethod::ClosedForm);
            assert_eq!(dispatched.burning_number, ceil_sqrt(n));
            assert_eq!(searched.burning_number, ceil_sqrt(n), "path n = {n}");
        }
        for n in 3..=12 {
            let c = Graph::cycle(n).unwrap();
            assert_eq!(solve(&c).burning_number, ceil_sqrt(n));
            assert_eq!(solve_exactly(&c).burning_number, ceil_sqrt(n), "cycle n = {n}");
        }
        for n in 2..=8 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(solve(&k).burning_number, 2);
            assert_eq!(solve_exactly(&k).burning_number, 2);
        }
    }

    #[test]
    fn union_of_p2s() {
        for t in 1..=4 {
            let parts: Vec<Graph> = (0..t).map(|_| Graph::path(2).unwrap()).collect();
            let g = Graph::disjoint_union(&parts).unwrap();
            assert_eq!(solve(&g).burning_number, t + 1, "t = {t}");
        }
    }

    #[test]
    fn wheel_and_cycle() {
        assert_eq!(solve(&Graph::cycle(5).unwrap()).burning_number, 3);
        assert_eq!(solve(&Graph::wheel(5).unwrap()).burning_number, 2);
    }

    #[test]
    fn spiders_hit_the_radius_bound() {
        assert_eq!(solve(&Graph::spider(3, 2).unwrap()).burning_number, 3);
        assert_eq!(solve(&Graph::spider(4, 3).unwrap()).burning_number, 4);
    }

    #[test]
    fn decide_is_monotone_in_k() {
        let g = Graph::gnp_random(9, 0.3, 11).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let mut seen_feasible = false;
        for k in 1..=g.n() {
            let feasible = decide(&g, &dm, k).unwrap().witness.is_some();
            assert!(!seen_feasible || feasible, "feasibility must not flip back at k = {k}");
            seen_feasible |= feasible;
        }
        assert!(seen_feasible);
    }

    #[test]
    fn enumerate_p4_and_k2() {
        let g = Graph::path(4).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let all = enumerate_optimal_sequences(&g, &dm, 100).unwrap();
        assert!(all.complete);
        let expected = vec![
            BurningSequence::new(vec![1, 3]).unwrap(),
            BurningSequence::new(vec![2, 0]).unwrap(),
        ];
        assert_eq!(all.sequences, expected);

        let k2 = Graph::complete(2).unwrap();
        let dm2 = DistanceMatrix::compute(&k2);
        let all2 = enumerate_optimal_sequences(&k2, &dm2, 100).unwrap();
        assert_eq!(all2.sequences.len(), 2);
    }

    #[test]
    fn enumerate_respects_limit() {
        let k5 = Graph::complete(5).unwrap();
        let dm = DistanceMatrix::compute(&k5);
        let capped = enumerate_optimal_sequences(&k5, &dm, 3).unwrap();
        assert!(!capped.complete);
        assert_eq!(capped.sequences.len(), 3);
        let full = enumerate_optimal_sequences(&k5, &dm, 100).unwrap();
        assert!(full.complete);
        assert_eq!(full.sequences.len(), 20); // ordered pairs of distinct nodes
    }

    #[test]
    fn greedy_is_an_upper_bound() {
        for seed in 0..10 {
            let g = Graph::gnp_random(10, 0.3, seed).unwrap();
            let dm = DistanceMatrix::compute(&g);
            let exact = burning_number(&g, &dm).unwrap();
            let greedy = greedy_upper_bound(&g, &dm).unwrap();
            assert_eq!(greedy.method, SolveMethod::HeuristicUpper);
            assert!(greedy.burning_number >= exact.burning_number, "seed {seed}");
        }
        let p16 = Graph::path(16).unwrap();
        let dm = DistanceMatrix::compute(&p16);
        assert_eq!(greedy_upper_bound(&p16, &dm).unwrap().burning_number, 4);
    }

    #[test]
    fn spanning_tree_route_agrees() {
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::path(6).unwrap(),
        ] {
            let dm = DistanceMatrix::compute(&g);
            let direct = solve_exactly(&g).burning_number;
            let via_trees = burning_number_via_spanning_trees(&g, &dm, 10_000).unwrap();
            assert_eq!(direct, via_trees);
        }
    }

    #[test]
    fn parallel_decide_matches_sequential() {
        let g = Graph::gnp_random(36, 0.12, 5).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let opts = SolverOptions {
            use_closed_forms: false,
            parallel: true,
        };
        let par = burning_number_with(&g, &dm, &opts).unwrap();
        let seq = solve_exactly(&g);
        assert_eq!(par.burning_number, seq.burning_number);
        assert_eq!(par.witness, seq.witness);
    }
}
