//! Exact 1-planarity decision for small graphs.
//!
//! The search walks the edges in lexicographic order and decides each one:
//! either it stays uncrossed or it crosses a later, still undecided edge
//! with no common endpoint. Two prunes keep it exact:
//!
//! * the planarization of the decided edges alone (decided pairs as fake
//!   vertices, decided uncrossed edges as plain edges) must be planar, since
//!   it is a subdrawing of every drawing that extends the partial decision;
//! * the final planarization has `n + c` vertices and `e + 2c` edges, so a
//!   planar one needs `c >= e - 3n + 6` crossings; branches that can no
//!   longer reach that many are cut.
//!
//! The tree is split into a fixed frontier of subtrees that are searched in
//! parallel and combined in DFS order, so the witness, the outcome and the
//! node count do not depend on the number of worker threads.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::drawing::{Crossing, OnePlaneDrawing};
use crate::graph::{Edge, Graph};
use crate::planarity::PlanarityTester;

/// Number of subtrees the search tree is cut into before parallel search.
const FRONTIER_TASKS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_crossings: usize,
    /// Maximum number of search nodes (assignments tried).
    pub node_limit: u64,
}

impl Budget {
    pub fn new(max_crossings: usize, node_limit: u64) -> Self {
        Budget {
            max_crossings,
            node_limit,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_crossings: usize::MAX,
            node_limit: 50_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Witness(OnePlaneDrawing),
    /// Complete search: no 1-planar drawing within the crossing cap.
    Refuted,
    BudgetExceeded,
}

impl OracleOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            OracleOutcome::Witness(_) => "witness",
            OracleOutcome::Refuted => "refuted",
            OracleOutcome::BudgetExceeded => "budget-exceeded",
        }
    }

    pub fn witness(&self) -> Option<&OnePlaneDrawing> {
        match self {
            OracleOutcome::Witness(d) => Some(d),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: OracleOutcome,
    /// Nodes counted up to the deciding subtree.
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exceeded")]
pub struct BudgetExceeded;

/// Planarity with an embedding witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarityResult {
    Planar(OnePlaneDrawing),
    NonPlanar,
}

pub fn is_planar(g: &Graph) -> PlanarityResult {
    match OnePlaneDrawing::realize(g.clone(), &[]) {
        Ok((d, _)) => PlanarityResult::Planar(d),
        Err(_) => PlanarityResult::NonPlanar,
    }
}

/// Searches with rayon's current thread pool.
pub fn find_one_planar_drawing(g: &Graph, budget: Budget) -> OracleOutcome {
    search(g, budget, None).outcome
}

/// Searches on a dedicated pool of `threads` workers.
pub fn find_with_threads(g: &Graph, budget: Budget, threads: usize) -> SearchReport {
    search(g, budget, Some(threads.max(1)))
}

/// Least crossing count `c <= cap` of a 1-planar drawing, by running the
/// search with caps `0, 1, ..., cap`.
pub fn min_crossings_one_planar(
    g: &Graph,
    cap: usize,
    node_limit: u64,
    threads: Option<usize>,
) -> Result<Option<(usize, OnePlaneDrawing)>, BudgetExceeded> {
    for c in 0..=cap {
        match search(g, Budget::new(c, node_limit), threads).outcome {
            OracleOutcome::Witness(d) => return Ok(Some((d.crossing_count(), d))),
            OracleOutcome::Refuted => continue,
            OracleOutcome::BudgetExceeded => return Err(BudgetExceeded),
        }
    }
    Ok(None)
}

/// Minimum number of crossings any 1-planar drawing of `g` needs by edge
/// density of its planarization.
pub fn crossing_lower_bound(g: &Graph) -> usize {
    let (n, e) = (g.n(), g.e());
    if n < 3 {
        return 0;
    }
    (e + 6).saturating_sub(3 * n)
}

const UNDECIDED: u32 = u32::MAX;
const UNCROSSED: u32 = u32::MAX - 1;

#[derive(Clone)]
struct State {
    /// Per edge: UNDECIDED, UNCROSSED, or the index of its crossing partner.
    partner: Vec<u32>,
    crossings: usize,
    undecided: usize,
    /// All edges before `pos` are decided.
    pos: usize,
}

impl State {
    fn advance(&mut self) {
        while self.pos < self.partner.len() && self.partner[self.pos] != UNDECIDED {
            self.pos += 1;
        }
    }

    fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| p < UNCROSSED && (p as usize) > i)
            .map(|(i, &p)| (i, p as usize))
            .collect()
    }
}

enum Stop {
    Budget,
    Cancelled,
    /// All tasks together ran past the node limit.
    Shared,
}

struct Searcher<'a> {
    n: usize,
    edges: &'a [Edge],
    candidates: Vec<Vec<usize>>,
    max_crossings: usize,
    lower_bound: usize,
    nodes: u64,
    node_cap: u64,
    node_limit: u64,
    scratch: Vec<Edge>,
    tester: PlanarityTester,
    cancel: Option<(&'a AtomicUsize, usize)>,
    shared: Option<&'a AtomicU64>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, budget: Budget) -> Self {
        let edges = g.edges();
        let m = edges.len();
        let candidates = (0..m)
            .map(|i| {
                let (a, b) = edges[i];
                (i + 1..m)
                    .filter(|&j| {
                        let (c, d) = edges[j];
                        a != c && a != d && b != c && b != d
                    })
                    .collect()
            })
            .collect();
        Searcher {
            n: g.n(),
            edges,
            candidates,
            max_crossings: budget.max_crossings,
            lower_bound: crossing_lower_bound(g),
            nodes: 0,
            node_cap: budget.node_limit,
            node_limit: budget.node_limit,
            scratch: Vec::new(),
            tester: PlanarityTester::new(),
            cancel: None,
            shared: None,
        }
    }

    fn root(&self) -> State {
        let mut s = State {
            partner: vec![UNDECIDED; self.edges.len()],
            crossings: 0,
            undecided: self.edges.len(),
            pos: 0,
        };
        s.advance();
        s
    }

    /// Whether the crossing lower bound is still reachable.
    fn reachable(&self, s: &State) -> bool {
        let room = self.max_crossings.saturating_sub(s.crossings);
        s.crossings + room.min(s.undecided / 2) >= self.lower_bound
    }

    fn decided_planar(&mut self, s: &State) -> bool {
        self.scratch.clear();
        let mut fake = self.n;
        for (i, &p) in s.partner.iter().enumerate() {
            if p == UNCROSSED {
                self.scratch.push(self.edges[i]);
            } else if p < UNCROSSED && (p as usize) > i {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[p as usize];
                self.scratch.extend([(a, fake), (b, fake), (c, fake), (d, fake)]);
                fake += 1;
            }
        }
        self.tester.is_planar(fake, &self.scratch)
    }

    fn tick(&mut self) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Stop::Budget);
        }
        if self.nodes.is_multiple_of(256) {
            if let Some((best, me)) = self.cancel {
                if best.load(Ordering::Relaxed) < me {
                    return Err(Stop::Cancelled);
                }
            }
            if let Some(total) = self.shared {
                if total.fetch_add(256, Ordering::Relaxed) + 256 > self.node_limit {
                    return Err(Stop::Shared);
                }
            }
        }
        Ok(())
    }

    /// Children of `s` in branch order, each already counted and pruned.
    fn children(&mut self, s: &State) -> Result<Vec<State>, Stop> {
        let i = s.pos;
        let mut out = Vec::new();
        let mut child = s.clone();
        child.partner[i] = UNCROSSED;
        child.undecided -= 1;
        self.tick()?;
        if self.reachable(&child) && self.decided_planar(&child) {
            let mut c = child.clone();
            c.advance();
            out.push(c);
        }
        if s.crossings < self.max_crossings {
            for k in 0..self.candidates[i].len() {
                let j = self.candidates[i][k];
                if s.partner[j] != UNDECIDED {
                    continue;
                }
                let mut child = s.clone();
                child.partner[i] = j as u32;
                child.partner[j] = i as u32;
                child.undecided -= 2;
                child.crossings += 1;
                self.tick()?;
                if self.reachable(&child) && self.decided_planar(&child) {
                    child.advance();
                    out.push(child);
                }
            }
        }
        Ok(out)
    }

    /// Depth-first search below `s`; returns the first complete assignment.
    fn dfs(&mut self, s: &mut State) -> Result<Option<Vec<(usize, usize)>>, Stop> {
        if s.pos == s.partner.len() {
            return Ok(Some(s.crossing_pairs()));
        }
        let i = s.pos;
        let saved_pos = s.pos;

        s.partner[i] = UNCROSSED;
        s.undecided -= 1;
        self.tick()?;
        if self.reachable(s) && self.decided_planar(s) {
            s.advance();
            if let Some(found) = self.dfs(s)? {
                return Ok(Some(found));
            }
            s.pos = saved_pos;
        }
        s.partner[i] = UNDECIDED;
        s.undecided += 1;

        if s.crossings < self.max_crossings {
            for k in 0..self.candidates[i].len() {
                let j = self.candidates[i][k];
                if s.partner[j] != UNDECIDED {
                    continue;
                }
                s.partner[i] = j as u32;
                s.partner[j] = i as u32;
                s.undecided -= 2;
                s.crossings += 1;
                self.tick()?;
                if self.reachable(s) && self.decided_planar(s) {
                    s.advance();
                    if let Some(found) = self.dfs(s)? {
                        return Ok(Some(found));
                    }
                    s.pos = saved_pos;
                }
                s.partner[i] = UNDECIDED;
                s.partner[j] = UNDECIDED;
                s.undecided += 2;
                s.crossings -= 1;
            }
        }
        Ok(None)
    }
}

enum TaskResult {
    Found(Vec<(usize, usize)>),
    Exhausted,
    OverBudget,
    Cancelled,
    Shared,
}

fn search(g: &Graph, budget: Budget, threads: Option<usize>) -> SearchReport {
    let mut root_search = Searcher::new(g, budget);
    if root_search.lower_bound > budget.max_crossings {
        return SearchReport {
            outcome: OracleOutcome::Refuted,
            nodes: 0,
        };
    }

    // Expand level by level, preserving DFS order, until the frontier is
    // wide enough or no open node remains.
    let mut frontier = vec![root_search.root()];
    let m = g.e();
    loop {
        if frontier.len() >= FRONTIER_TASKS || frontier.iter().all(|s| s.pos == m) {
            break;
        }
        let mut next = Vec::new();
        for s in &frontier {
            if s.pos == m {
                next.push(s.clone());
                continue;
            }
            match root_search.children(s) {
                Ok(kids) => next.extend(kids),
                Err(_) => {
                    return SearchReport {
                        outcome: OracleOutcome::BudgetExceeded,
                        nodes: root_search.nodes,
                    }
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    let frontier_nodes = root_search.nodes;
    let best = AtomicUsize::new(usize::MAX);
    let total = AtomicU64::new(frontier_nodes);

    let run_task = |idx: usize, state: &State, cap: u64, parallel: bool| -> (TaskResult, u64) {
        let mut s = Searcher::new(g, Budget::new(budget.max_crossings, cap));
        s.node_limit = budget.node_limit;
        if parallel {
            s.cancel = Some((&best, idx));
            s.shared = Some(&total);
        }
        let mut st = state.clone();
        match s.dfs(&mut st) {
            Ok(Some(pairs)) => {
                best.fetch_min(idx, Ordering::Relaxed);
                (TaskResult::Found(pairs), s.nodes)
            }
            Ok(None) => (TaskResult::Exhausted, s.nodes),
            Err(Stop::Budget) => (TaskResult::OverBudget, s.nodes),
            Err(Stop::Cancelled) => (TaskResult::Cancelled, s.nodes),
            Err(Stop::Shared) => (TaskResult::Shared, s.nodes),
        }
    };

    // Sequential order with the remaining budget handed down; this defines
    // the result that parallel runs must reproduce.
    let sequential = || {
        let mut out = Vec::new();
        let mut used = frontier_nodes;
        for (i, s) in frontier.iter().enumerate() {
            let cap = budget.node_limit.saturating_sub(used);
            let r = run_task(i, s, cap, false);
            used += r.1;
            let stop = !matches!(r.0, TaskResult::Exhausted);
            out.push(r);
            if stop {
                break;
            }
        }
        out
    };
    let task_cap = budget.node_limit.saturating_sub(frontier_nodes);
    let parallel = |pool_threads: Option<usize>| {
        let go = || -> Vec<(TaskResult, u64)> {
            frontier
                .par_iter()
                .enumerate()
                .map(|(i, s)| run_task(i, s, task_cap, true))
                .collect()
        };
        match pool_threads {
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .expect("thread pool")
                .install(go),
            None => go(),
        }
    };

    let mut results: Vec<(TaskResult, u64)> = match threads {
        Some(1) => sequential(),
        other => parallel(other),
    };
    // A shared-limit stop loses the per-task accounting; the sequential pass
    // recovers it exactly and costs at most the node limit.
    if results.iter().any(|r| matches!(r.0, TaskResult::Shared)) {
        results = sequential();
    }

    let mut nodes = frontier_nodes;
    for (result, task_nodes) in results {
        nodes += task_nodes;
        if nodes > budget.node_limit {
            return SearchReport {
                outcome: OracleOutcome::BudgetExceeded,
                nodes,
            };
        }
        match result {
            TaskResult::Found(pairs) => {
                let crossings: Vec<Crossing> = pairs
                    .iter()
                    .map(|&(i, j)| Crossing::new(g.edges()[i], g.edges()[j]))
                    .collect();
                let (drawing, _) = OnePlaneDrawing::realize(g.clone(), &crossings)
                    .expect("planar planarization embeds");
                return SearchReport {
                    outcome: OracleOutcome::Witness(drawing),
                    nodes,
                };
            }
            TaskResult::Exhausted => {}
            TaskResult::OverBudget => {
                return SearchReport {
                    outcome: OracleOutcome::BudgetExceeded,
                    nodes,
                }
            }
            // only tasks after a found witness are cancelled
            TaskResult::Cancelled | TaskResult::Shared => {
                unreachable!("task stopped early before the first witness")
            }
        }
    }
    SearchReport {
        outcome: OracleOutcome::Refuted,
        nodes,
    }
}
