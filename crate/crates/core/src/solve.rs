//! Exact minimum domination-type sets.
//!
//! [`minimum`] runs an include/exclude branch and bound over bitmask state.
//! With `deterministic` set, a second bounded search recovers the
//! lexicographically least optimal set, so witnesses do not depend on the
//! branching order. [`brute_force_oracle`] enumerates subsets through
//! [`crate::dominate::check`] and shares no code with the search.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::dominate::{self, match_mask, DominationKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::vertex_set::VertexSet;

/// Largest graph the branch and bound accepts.
pub const SOLVER_LIMIT: usize = 128;
/// Largest graph the brute-force oracle accepts.
pub const ORACLE_LIMIT: usize = 20;

/// Environment variable overriding the default time budget, in seconds.
pub const BUDGET_ENV: &str = "MIDDLEDOM_TIME_BUDGET_SECS";

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub time_budget: Duration,
    pub node_budget: u64,
    /// Only vertices of this set may be chosen.
    pub restrict_to: Option<VertexSet>,
    /// Report the lexicographically least optimal witness.
    pub deterministic: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            time_budget: Duration::from_secs(60),
            node_budget: 100_000_000,
            restrict_to: None,
            deterministic: true,
        }
    }
}

impl SolveOptions {
    /// Defaults, with the time budget taken from [`BUDGET_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        let mut opts = SolveOptions::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            let secs: f64 = raw
                .trim()
                .parse()
                .ok()
                .filter(|s: &f64| s.is_finite() && *s > 0.0)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("{BUDGET_ENV}={raw:?} is not a positive number"))
                })?;
            opts.time_budget = Duration::from_secs_f64(secs);
        }
        Ok(opts)
    }

    fn validate(&self) -> Result<()> {
        if self.time_budget.is_zero() || self.node_budget == 0 {
            return Err(Error::InvalidArgument(
                "solver budgets must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    BudgetExceeded,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub kind: DominationKind,
    /// Optimal value, or the best value found under `BudgetExceeded`;
    /// `None` when no feasible set was found.
    pub value: Option<usize>,
    pub witness: VertexSet,
    pub stats: SolveStats,
    pub status: SolveStatus,
}

impl SolveResult {
    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }

    /// The optimal value; panics unless the status is `Optimal`.
    pub fn optimal_value(&self) -> usize {
        assert!(self.is_optimal(), "solve ended with status {}", self.status);
        self.value.expect("optimal results carry a value")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("solve result serializes")
    }
}

impl Serialize for SolveResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Flat<'a> {
            kind: DominationKind,
            value: Option<usize>,
            witness: &'a VertexSet,
            nodes: u64,
            millis: u128,
            status: SolveStatus,
        }
        Flat {
            kind: self.kind,
            value: self.value,
            witness: &self.witness,
            nodes: self.stats.nodes,
            millis: self.stats.elapsed.as_millis(),
            status: self.status,
        }
        .serialize(s)
    }
}

/// Precomputed bitmask view of a graph for one domination kind.
struct Masks {
    kind: DominationKind,
    adj: Vec<u128>,
    dist2: Vec<u128>,
    /// Vertices whose coverage a pick of `u` can contribute to.
    reach: Vec<u128>,
    all: u128,
}

impl Masks {
    fn new(g: &Graph, kind: DominationKind) -> Result<Self> {
        let n = g.n();
        if n > SOLVER_LIMIT {
            return Err(Error::TooLarge {
                n,
                limit: SOLVER_LIMIT,
                what: "the exact solver",
            });
        }
        g.ensure_isolate_free()?;
        let adj: Vec<u128> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(w)))
            .collect();
        let dist2: Vec<u128> = (0..n)
            .map(|v| {
                let two = g.neighbors(v).iter().fold(0, |m, &w| m | adj[w]);
                two & !adj[v] & !bit(v)
            })
            .collect();
        let reach = (0..n)
            .map(|u| {
                let mut r = adj[u];
                if !kind.is_total() {
                    r |= bit(u);
                }
                if kind.is_disjunctive() {
                    r |= dist2[u];
                }
                r
            })
            .collect();
        Ok(Masks {
            kind,
            adj,
            dist2,
            reach,
            all: full_mask(n),
        })
    }

    fn is_covered(&self, v: usize, chosen: u128) -> bool {
        (!self.kind.is_total() && chosen & bit(v) != 0)
            || self.adj[v] & chosen != 0
            || (self.kind.is_disjunctive() && (self.dist2[v] & chosen).count_ones() >= 2)
    }

    fn uncovered(&self, chosen: u128) -> u128 {
        iter_bits(self.all)
            .filter(|&v| !self.is_covered(v, chosen))
            .fold(0, |m, v| m | bit(v))
    }

    /// Whether every uncovered vertex can still be covered using `avail`.
    fn coverable(&self, uncovered: u128, chosen: u128, avail: u128) -> bool {
        iter_bits(uncovered).all(|v| {
            (!self.kind.is_total() && avail & bit(v) != 0)
                || self.adj[v] & avail != 0
                || (self.kind.is_disjunctive()
                    && (self.dist2[v] & (chosen | avail)).count_ones() >= 2)
        })
    }

    /// Every chosen vertex still has a possible partner.
    fn partners_possible(&self, chosen: u128, avail: u128) -> bool {
        iter_bits(chosen).all(|v| self.adj[v] & (chosen | avail) != 0)
    }

    fn has_matching(&self, chosen: u128) -> bool {
        match_mask(&self.adj, chosen, &mut HashSet::new(), &mut Vec::new())
    }

    fn feasible(&self, chosen: u128) -> bool {
        self.uncovered(chosen) == 0 && (!self.kind.is_paired() || self.has_matching(chosen))
    }

    /// Lower bound on the number of further picks, or `None` if the state is
    /// a dead end.
    fn extra_picks_bound(&self, chosen: u128, uncovered: u128, avail: u128) -> Option<usize> {
        if !self.coverable(uncovered, chosen, avail) {
            return None;
        }
        let paired = self.kind.is_paired();
        if paired && !self.partners_possible(chosen, avail) {
            return None;
        }
        let deficit = uncovered.count_ones() as usize;
        let mut lb = if deficit == 0 {
            0
        } else {
            let best = iter_bits(avail)
                .map(|u| (self.reach[u] & uncovered).count_ones() as usize)
                .max()
                .unwrap_or(0);
            if best == 0 {
                return None;
            }
            deficit.div_ceil(best)
        };
        if paired {
            let size = chosen.count_ones() as usize;
            if (size + lb) % 2 == 1 {
                lb += 1;
            }
            if lb == 0 && !self.has_matching(chosen) {
                lb = 2;
            }
        }
        if lb > avail.count_ones() as usize {
            return None;
        }
        Some(lb)
    }
}

fn bit(v: usize) -> u128 {
    1u128 << v
}

fn full_mask(n: usize) -> u128 {
    if n == 0 {
        0
    } else {
        u128::MAX >> (128 - n)
    }
}

fn iter_bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

fn mask_to_set(n: usize, m: u128) -> VertexSet {
    VertexSet::from_vertices(n, iter_bits(m)).expect("mask within universe")
}

fn set_to_mask(s: &VertexSet) -> u128 {
    s.iter().fold(0, |m, v| m | bit(v))
}

struct Budget {
    start: Instant,
    time: Duration,
    max_nodes: u64,
    nodes: u64,
    exceeded: bool,
}

impl Budget {
    fn new(opts: &SolveOptions) -> Self {
        Budget {
            start: Instant::now(),
            time: opts.time_budget,
            max_nodes: opts.node_budget,
            nodes: 0,
            exceeded: false,
        }
    }

    /// Counts a node; returns false once a budget is exhausted.
    fn tick(&mut self) -> bool {
        if self.exceeded {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes
            || (self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.time)
        {
            self.exceeded = true;
        }
        !self.exceeded
    }

    fn stats(&self) -> SolveStats {
        SolveStats {
            nodes: self.nodes,
            elapsed: self.start.elapsed(),
        }
    }
}

struct Search<'a> {
    masks: &'a Masks,
    /// Branching order and, per position, the mask of undecided vertices.
    order: Vec<usize>,
    suffix: Vec<u128>,
    best: Option<u128>,
    best_size: usize,
    budget: Budget,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, chosen: u128) {
        if !self.budget.tick() {
            return;
        }
        let size = chosen.count_ones() as usize;
        let uncovered = self.masks.uncovered(chosen);
        if uncovered == 0 && (!self.masks.kind.is_paired() || self.masks.has_matching(chosen)) {
            if size < self.best_size {
                self.best = Some(chosen);
                self.best_size = size;
            }
            return;
        }
        let avail = self.suffix[idx];
        match self.masks.extra_picks_bound(chosen, uncovered, avail) {
            Some(lb) if size + lb < self.best_size => {}
            _ => return,
        }
        let v = self.order[idx];
        self.run(idx + 1, chosen | bit(v));
        self.run(idx + 1, chosen);
    }
}

/// Include-first search in ascending vertex order for a feasible set of
/// exactly `target` vertices drawn from `allowed`; the first hit is the
/// lexicographically least such set.
fn lex_least(masks: &Masks, allowed: u128, target: usize, budget: &mut Budget) -> Option<u128> {
    fn go(
        masks: &Masks,
        allowed: u128,
        target: usize,
        pos: usize,
        chosen: u128,
        budget: &mut Budget,
    ) -> Option<u128> {
        if !budget.tick() {
            return None;
        }
        let size = chosen.count_ones() as usize;
        if size == target {
            return masks.feasible(chosen).then_some(chosen);
        }
        let avail = allowed & !full_mask(pos);
        let uncovered = masks.uncovered(chosen);
        match masks.extra_picks_bound(chosen, uncovered, avail) {
            Some(lb) if size + lb <= target => {}
            _ => return None,
        }
        let v = avail.trailing_zeros() as usize;
        go(masks, allowed, target, v + 1, chosen | bit(v), budget)
            .or_else(|| go(masks, allowed, target, v + 1, chosen, budget))
    }
    go(masks, allowed, target, 0, 0, budget)
}

/// Greedy feasible set within `allowed`, or `None` if greedy gets stuck.
fn greedy_mask(masks: &Masks, allowed: u128) -> Option<u128> {
    let mut chosen = 0u128;
    let gain =
        |chosen: u128, add: u128, before: u32| before - masks.uncovered(chosen | add).count_ones();
    loop {
        let uncovered = masks.uncovered(chosen);
        let before = uncovered.count_ones();
        if masks.kind.is_paired() {
            if uncovered == 0 {
                return Some(chosen);
            }
            let free = allowed & !chosen;
            let mut best: Option<(u32, u128)> = None;
            for u in iter_bits(free) {
                for w in iter_bits(masks.adj[u] & free & !full_mask(u + 1)) {
                    let g = gain(chosen, bit(u) | bit(w), before);
                    if best.is_none_or(|(b, _)| g > b) {
                        best = Some((g, bit(u) | bit(w)));
                    }
                }
            }
            match best {
                Some((g, pair)) if g > 0 => chosen |= pair,
                _ => return None,
            }
        } else {
            if uncovered == 0 {
                return Some(chosen);
            }
            let best = iter_bits(allowed & !chosen)
                .map(|u| (gain(chosen, bit(u), before), u))
                .max_by_key(|&(g, u)| (g, std::cmp::Reverse(u)));
            match best {
                Some((g, u)) if g > 0 => chosen |= bit(u),
                _ => return None,
            }
        }
    }
}

/// Greedy feasible set: best pairs of adjacent vertices for paired kinds,
/// best single vertices otherwise.
pub fn greedy_upper_bound(g: &Graph, kind: DominationKind) -> Result<(usize, VertexSet)> {
    let masks = Masks::new(g, kind)?;
    let chosen =
        greedy_mask(&masks, masks.all).expect("greedy always completes on isolate-free graphs");
    Ok((chosen.count_ones() as usize, mask_to_set(g.n(), chosen)))
}

pub fn minimum(g: &Graph, kind: DominationKind, opts: &SolveOptions) -> Result<SolveResult> {
    let allowed = match &opts.restrict_to {
        Some(s) => s.clone(),
        None => VertexSet::full(g.n()),
    };
    solve_within(g, kind, &allowed, opts)
}

/// Minimum over subsets of `allowed` only.
pub fn minimum_restricted(
    g: &Graph,
    kind: DominationKind,
    allowed: &VertexSet,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    solve_within(g, kind, allowed, opts)
}

fn solve_within(
    g: &Graph,
    kind: DominationKind,
    allowed: &VertexSet,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    opts.validate()?;
    let masks = Masks::new(g, kind)?;
    if let Some(v) = allowed.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let allowed = set_to_mask(allowed);

    let mut order: Vec<usize> = iter_bits(allowed).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut suffix = vec![0u128; order.len() + 1];
    for i in (0..order.len()).rev() {
        suffix[i] = suffix[i + 1] | bit(order[i]);
    }

    let incumbent = greedy_mask(&masks, allowed);
    let mut search = Search {
        masks: &masks,
        order,
        suffix,
        best_size: incumbent.map_or(usize::MAX, |m| m.count_ones() as usize),
        best: incumbent,
        budget: Budget::new(opts),
    };
    search.run(0, 0);

    let Search {
        best, mut budget, ..
    } = search;
    let finish = |status, best: Option<u128>, budget: &Budget| SolveResult {
        kind,
        value: best.map(|m| m.count_ones() as usize),
        witness: mask_to_set(g.n(), best.unwrap_or(0)),
        stats: budget.stats(),
        status,
    };
    if budget.exceeded {
        return Ok(finish(SolveStatus::BudgetExceeded, best, &budget));
    }
    let Some(best) = best else {
        return Ok(finish(SolveStatus::Infeasible, None, &budget));
    };
    if !opts.deterministic {
        return Ok(finish(SolveStatus::Optimal, Some(best), &budget));
    }
    match lex_least(&masks, allowed, best.count_ones() as usize, &mut budget) {
        Some(least) => Ok(finish(SolveStatus::Optimal, Some(least), &budget)),
        None if budget.exceeded => Ok(finish(SolveStatus::BudgetExceeded, Some(best), &budget)),
        None => unreachable!("an optimal set of this size exists"),
    }
}

/// Exhaustive search by ascending cardinality (even cardinalities only for
/// paired kinds), lexicographic within a cardinality. Returns the first
/// satisfying set.
pub fn brute_force_oracle(g: &Graph, kind: DominationKind) -> Result<SolveResult> {
    let n = g.n();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ORACLE_LIMIT,
            what: "the brute-force oracle",
        });
    }
    g.ensure_isolate_free()?;
    let start = Instant::now();
    let mut nodes = 0u64;
    let step = if kind.is_paired() { 2 } else { 1 };
    for size in (0..=n).step_by(step) {
        let mut combo: Vec<Vertex> = (0..size).collect();
        loop {
            nodes += 1;
            let d = VertexSet::from_vertices(n, combo.iter().copied())?;
            if dominate::check(g, &d, kind)?.satisfied {
                return Ok(SolveResult {
                    kind,
                    value: Some(size),
                    witness: d,
                    stats: SolveStats {
                        nodes,
                        elapsed: start.elapsed(),
                    },
                    status: SolveStatus::Optimal,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(SolveResult {
        kind,
        value: None,
        witness: VertexSet::new(n),
        stats: SolveStats {
            nodes,
            elapsed: start.elapsed(),
        },
        status: SolveStatus::Infeasible,
    })
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominate::check;
    use crate::generators::FamilySpec;
    use crate::transform::middle_graph;
    use DominationKind::*;

    fn fam(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    fn solve(g: &Graph, kind: DominationKind) -> SolveResult {
        minimum(g, kind, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn k2_needs_both_vertices() {
        let r = solve(&fam(FamilySpec::Complete(2)), PairedDisjunctive);
        assert_eq!(r.value, Some(2));
        assert_eq!(r.witness.to_vec(), vec![0, 1]);
    }

    #[test]
    fn middle_cycle_four_and_path_four() {
        let r = solve(
            &middle_graph(&fam(FamilySpec::Cycle(4))).graph,
            PairedDisjunctive,
        );
        assert_eq!(r.optimal_value(), 2);
        let r = solve(
            &middle_graph(&fam(FamilySpec::Path(4))).graph,
            PairedDisjunctive,
        );
        assert_eq!(r.optimal_value(), 4);
    }

    #[test]
    fn oracle_small_values() {
        assert_eq!(
            brute_force_oracle(&fam(FamilySpec::Path(3)), PairedDisjunctive)
                .unwrap()
                .value,
            Some(2)
        );
        assert_eq!(
            brute_force_oracle(&fam(FamilySpec::Cycle(5)), Dominating)
                .unwrap()
                .value,
            Some(2)
        );
        assert_eq!(
            brute_force_oracle(&fam(FamilySpec::Complete(4)), TotalDominating)
                .unwrap()
                .value,
            Some(2)
        );
        assert!(brute_force_oracle(&fam(FamilySpec::Path(21)), Dominating).is_err());
    }

    #[test]
    fn deterministic_witness_matches_oracle() {
        for spec in [
            FamilySpec::Cycle(7),
            FamilySpec::Path(6),
            FamilySpec::DoubleStar(2, 1),
        ] {
            let g = fam(spec);
            for kind in DominationKind::ALL {
                let a = solve(&g, kind);
                let b = brute_force_oracle(&g, kind).unwrap();
                assert_eq!(a.witness, b.witness, "{spec} {kind}");
            }
        }
    }

    #[test]
    fn restricted_searches() {
        let mg = middle_graph(&fam(FamilySpec::Cycle(8)));
        let r = minimum_restricted(
            &mg.graph,
            PairedDisjunctive,
            &mg.subdivision_vertices(),
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(r.optimal_value(), 4);
        assert!(r.witness.is_subset(&mg.subdivision_vertices()));

        let c6 = fam(FamilySpec::Cycle(6));
        let r = minimum_restricted(
            &c6,
            Dominating,
            &VertexSet::new(6),
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(r.status, SolveStatus::Infeasible);
        assert_eq!(r.value, None);

        let mg = middle_graph(&fam(FamilySpec::Path(5)));
        let r = minimum_restricted(
            &mg.graph,
            PairedDisjunctive,
            &mg.original_vertices(),
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(r.status, SolveStatus::Infeasible);
    }

    #[test]
    fn greedy_is_feasible() {
        let (v, w) = greedy_upper_bound(&fam(FamilySpec::Complete(6)), PairedDisjunctive).unwrap();
        assert_eq!((v, w.len()), (2, 2));

        let mg = middle_graph(&fam(FamilySpec::DoubleStar(2, 2)));
        let (v, w) = greedy_upper_bound(&mg.graph, PairedDisjunctive).unwrap();
        assert!(v >= 4 && check(&mg.graph, &w, PairedDisjunctive).unwrap().satisfied);

        let c10 = fam(FamilySpec::Cycle(10));
        let (v, w) = greedy_upper_bound(&c10, PairedDisjunctive).unwrap();
        assert!(v >= 4 && v % 2 == 0);
        assert!(check(&c10, &w, PairedDisjunctive).unwrap().satisfied);
    }

    #[test]
    fn tiny_node_budget_reports_incumbent() {
        let g = middle_graph(&fam(FamilySpec::Cycle(12))).graph;
        let opts = SolveOptions {
            node_budget: 3,
            ..SolveOptions::default()
        };
        let r = minimum(&g, PairedDisjunctive, &opts).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExceeded);
        assert!(check(&g, &r.witness, PairedDisjunctive).unwrap().satisfied);
        assert_eq!(r.value, Some(r.witness.len()));
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            minimum(&g, Dominating, &SolveOptions::default()),
            Err(Error::IsolatedVertex(2))
        );
        let opts = SolveOptions {
            node_budget: 0,
            ..SolveOptions::default()
        };
        assert!(minimum(&fam(FamilySpec::Path(3)), Dominating, &opts).is_err());
    }

    #[test]
    fn json_shape() {
        let r = solve(&fam(FamilySpec::Complete(2)), PairedDisjunctive);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["kind"], "pdd");
        assert_eq!(v["value"], 2);
        assert_eq!(v["witness"], serde_json::json!([0, 1]));
        assert_eq!(v["status"], "Optimal");
        assert!(v["nodes"].is_u64() && v["millis"].is_u64());
    }
}
