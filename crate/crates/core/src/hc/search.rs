//! Branch and bound over restricted-growth strings.
//!
//! Elements are assigned one at a time, in a fixed order, either to an open
//! block or to a fresh one. Each hyperedge carries its set of used blocks and
//! whether two of its members already share a block ("dead": it can never
//! become rainbow). When an element is the last unassigned member of a live
//! edge it must join one of that edge's blocks, which rules out both a fresh
//! block and every block outside the edge's mask. This is exactly the "no
//! completed edge is rainbow" test, applied one step early.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000_000;

const CHECK_EVERY: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub threads: usize,
    pub node_limit: u64,
    pub timeout: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { threads: 1, node_limit: DEFAULT_NODE_LIMIT, timeout: None }
    }
}

impl SearchConfig {
    pub fn with_threads(threads: usize) -> Self {
        SearchConfig { threads: threads.max(1), ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    Maximize,
    Exactly(usize),
}

struct Problem {
    n: usize,
    /// position -> original element
    order: Vec<usize>,
    edge_len: Vec<u8>,
    /// position -> ids of edges containing that element
    edges_at: Vec<Vec<u32>>,
}

impl Problem {
    fn new(h: &Hypergraph) -> Self {
        let n = h.n_vertices();
        let mut weight = vec![0f64; n];
        for e in h.edges() {
            let w = 1.0 / e.len() as f64;
            for v in *e {
                weight[v] += w;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| weight[b].total_cmp(&weight[a]).then(a.cmp(&b)));
        let mut pos_of = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            pos_of[v] = p;
        }
        let mut edges_at = vec![Vec::new(); n];
        for (id, e) in h.edges().iter().enumerate() {
            for v in *e {
                edges_at[pos_of[v]].push(id as u32);
            }
        }
        Problem { n, order, edge_len: h.edges().iter().map(|e| e.len() as u8).collect(), edges_at }
    }

    fn to_partition(&self, assign: &[u8]) -> Partition {
        let mut labels = vec![0u8; self.n];
        for (p, &b) in assign.iter().enumerate() {
            labels[self.order[p]] = b;
        }
        Partition::from_labels(&labels)
    }
}

struct Shared {
    goal: Goal,
    best: AtomicUsize,
    best_assign: Mutex<Option<Vec<u8>>>,
    nodes: AtomicU64,
    stop: AtomicBool,
    exhausted: AtomicBool,
    node_limit: u64,
    deadline: Option<Instant>,
}

impl Shared {
    fn record(&self, blocks: usize, assign: &[u8]) {
        let mut guard = self.best_assign.lock().unwrap();
        match self.goal {
            Goal::Maximize => {
                if blocks > self.best.load(Ordering::Relaxed) {
                    self.best.fetch_max(blocks, Ordering::Relaxed);
                    *guard = Some(assign.to_vec());
                }
            }
            Goal::Exactly(_) => {
                if guard.is_none() {
                    *guard = Some(assign.to_vec());
                }
                self.stop.store(true, Ordering::Relaxed);
            }
        }
    }
}

struct Worker<'a> {
    prob: &'a Problem,
    shared: &'a Shared,
    assign: Vec<u8>,
    unassigned: Vec<u8>,
    dead: Vec<bool>,
    mask: Vec<u64>,
    undo: Vec<(u64, bool)>,
    pending_nodes: u64,
    check_every: u64,
}

impl<'a> Worker<'a> {
    fn new(prob: &'a Problem, shared: &'a Shared) -> Self {
        Worker {
            prob,
            shared,
            assign: Vec::with_capacity(prob.n),
            unassigned: prob.edge_len.clone(),
            dead: vec![false; prob.edge_len.len()],
            mask: vec![0; prob.edge_len.len()],
            undo: Vec::new(),
            pending_nodes: 0,
            check_every: CHECK_EVERY.min(shared.node_limit.max(1)),
        }
    }

    /// Blocks the element at `pos` may join, and whether a fresh block is allowed.
    fn allowed(&self, pos: usize, open: usize) -> (u64, bool) {
        let mut allowed = if open == 64 { u64::MAX } else { (1u64 << open) - 1 };
        let mut fresh = open < 64;
        for &id in &self.prob.edges_at[pos] {
            let id = id as usize;
            if !self.dead[id] && self.unassigned[id] == 1 {
                allowed &= self.mask[id];
                fresh = false;
            }
        }
        (allowed, fresh)
    }

    fn push(&mut self, pos: usize, block: u8) {
        let bit = 1u64 << block;
        for &id in &self.prob.edges_at[pos] {
            let id = id as usize;
            self.undo.push((self.mask[id], self.dead[id]));
            if !self.dead[id] {
                if self.mask[id] & bit != 0 {
                    self.dead[id] = true;
                } else {
                    self.mask[id] |= bit;
                }
            }
            self.unassigned[id] -= 1;
        }
        self.assign.push(block);
    }

    fn pop(&mut self, pos: usize) {
        for &id in self.prob.edges_at[pos].iter().rev() {
            let id = id as usize;
            let (mask, dead) = self.undo.pop().unwrap();
            self.mask[id] = mask;
            self.dead[id] = dead;
            self.unassigned[id] += 1;
        }
        self.assign.pop();
    }

    fn tick(&mut self) -> bool {
        self.pending_nodes += 1;
        if self.pending_nodes >= self.check_every {
            self.flush(true);
            if self.shared.stop.load(Ordering::Relaxed) {
                return false;
            }
        }
        true
    }

    /// Publishes the local node count; with `check`, also enforces the caps.
    fn flush(&mut self, check: bool) {
        let total = self.shared.nodes.fetch_add(self.pending_nodes, Ordering::Relaxed) + self.pending_nodes;
        self.pending_nodes = 0;
        if !check {
            return;
        }
        let over_nodes = total > self.shared.node_limit;
        let over_time = self.shared.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.shared.exhausted.store(true, Ordering::Relaxed);
            self.shared.stop.store(true, Ordering::Relaxed);
        }
    }

    /// Can a branch ending with at most `reachable` blocks still help?
    fn promising(&self, open_after: usize, reachable: usize) -> bool {
        match self.shared.goal {
            Goal::Maximize => reachable > self.shared.best.load(Ordering::Relaxed),
            Goal::Exactly(t) => open_after <= t && reachable >= t,
        }
    }

    fn dfs(&mut self, pos: usize, open: usize) {
        if self.shared.stop.load(Ordering::Relaxed) {
            return;
        }
        if pos == self.prob.n {
            let done = match self.shared.goal {
                Goal::Maximize => open > self.shared.best.load(Ordering::Relaxed),
                Goal::Exactly(t) => open == t,
            };
            if done {
                self.shared.record(open, &self.assign);
            }
            return;
        }
        if !self.tick() {
            return;
        }
        let remaining = self.prob.n - pos - 1;
        let (allowed, fresh) = self.allowed(pos, open);
        if fresh && self.promising(open + 1, open + 1 + remaining) {
            self.push(pos, open as u8);
            self.dfs(pos + 1, open + 1);
            self.pop(pos);
        }
        let mut rest = allowed;
        while rest != 0 {
            if !self.promising(open, open + remaining) {
                break;
            }
            let b = rest.trailing_zeros() as u8;
            rest &= rest - 1;
            self.push(pos, b);
            self.dfs(pos + 1, open);
            self.pop(pos);
        }
    }

    /// Collects feasible prefixes of length `depth` for distribution to workers.
    fn prefixes(&mut self, pos: usize, open: usize, depth: usize, out: &mut Vec<(Vec<u8>, usize)>) {
        if pos == depth || pos == self.prob.n {
            out.push((self.assign.clone(), open));
            return;
        }
        let (allowed, fresh) = self.allowed(pos, open);
        if fresh {
            self.push(pos, open as u8);
            self.prefixes(pos + 1, open + 1, depth, out);
            self.pop(pos);
        }
        let mut rest = allowed;
        while rest != 0 {
            let b = rest.trailing_zeros() as u8;
            rest &= rest - 1;
            self.push(pos, b);
            self.prefixes(pos + 1, open, depth, out);
            self.pop(pos);
        }
    }
}

struct RunResult {
    assign: Option<Vec<u8>>,
    stats: SearchStats,
    exhausted: bool,
    best: usize,
}

fn run(prob: &Problem, goal: Goal, initial_best: usize, cfg: &SearchConfig) -> RunResult {
    let start = Instant::now();
    let shared = Shared {
        goal,
        best: AtomicUsize::new(initial_best),
        best_assign: Mutex::new(None),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
        node_limit: cfg.node_limit,
        deadline: cfg.timeout.map(|t| start + t),
    };

    if cfg.threads <= 1 || prob.n < 4 {
        let mut w = Worker::new(prob, &shared);
        w.dfs(0, 0);
        w.flush(false);
    } else {
        let mut prefixes = Vec::new();
        let target = 8 * cfg.threads;
        let mut depth = 1;
        loop {
            prefixes.clear();
            Worker::new(prob, &shared).prefixes(0, 0, depth, &mut prefixes);
            if prefixes.len() >= target || depth >= prob.n / 2 {
                break;
            }
            depth += 1;
        }
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for _ in 0..cfg.threads {
                scope.spawn(|| {
                    let mut w = Worker::new(prob, &shared);
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some((prefix, open)) = prefixes.get(i) else { break };
                        for (pos, &b) in prefix.iter().enumerate() {
                            w.push(pos, b);
                        }
                        w.dfs(prefix.len(), *open);
                        for pos in (0..prefix.len()).rev() {
                            w.pop(pos);
                        }
                        if shared.stop.load(Ordering::Relaxed) {
                            break;
                        }
                    }
                    w.flush(false);
                });
            }
        });
    }

    let assign = shared.best_assign.into_inner().unwrap();
    RunResult {
        assign,
        stats: SearchStats { nodes: shared.nodes.load(Ordering::Relaxed), elapsed: start.elapsed() },
        exhausted: shared.exhausted.load(Ordering::Relaxed),
        best: shared.best.load(Ordering::Relaxed),
    }
}

/// Result of [`max_rainbow_free`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MaxRainbowFree {
    /// Some hyperedge has at most one element, so every colouring has a rainbow edge.
    NoRainbowPossible,
    /// Largest block count of a rainbow-free partition, with one such partition.
    Blocks { count: usize, witness: Partition },
}

fn check_input(h: &Hypergraph) -> Result<()> {
    if h.is_empty() {
        return Err(Error::DegenerateView("hypergraph has no hyperedges".into()));
    }
    Ok(())
}

/// Largest `t` such that some `t`-block partition leaves every edge non-rainbow.
pub fn max_rainbow_free(h: &Hypergraph, cfg: &SearchConfig) -> Result<(MaxRainbowFree, SearchStats)> {
    check_input(h)?;
    if h.edges().iter().any(|e| e.len() <= 1) {
        return Ok((MaxRainbowFree::NoRainbowPossible, SearchStats::default()));
    }
    let prob = Problem::new(h);
    // one block is always rainbow-free once every edge has two members
    let res = run(&prob, Goal::Maximize, 1, cfg);
    if res.exhausted {
        return Err(Error::Inconclusive { nodes: res.stats.nodes, best: res.best });
    }
    let witness = match res.assign {
        Some(a) => prob.to_partition(&a),
        None => Partition::single_block(h.n_vertices()),
    };
    Ok((MaxRainbowFree::Blocks { count: witness.block_count(), witness }, res.stats))
}

/// A rainbow-free partition with exactly `blocks` blocks, if one exists.
pub fn find_rainbow_free_partition(
    h: &Hypergraph,
    blocks: usize,
    cfg: &SearchConfig,
) -> Result<(Option<Partition>, SearchStats)> {
    if blocks == 0 || blocks > h.n_vertices() {
        return Ok((None, SearchStats::default()));
    }
    if h.edges().iter().any(|e| e.len() <= 1) {
        return Ok((None, SearchStats::default()));
    }
    let prob = Problem::new(h);
    let res = run(&prob, Goal::Exactly(blocks), 0, cfg);
    match res.assign {
        Some(a) => Ok((Some(prob.to_partition(&a)), res.stats)),
        None if res.exhausted => Err(Error::Inconclusive { nodes: res.stats.nodes, best: 0 }),
        None => Ok((None, res.stats)),
    }
}

/// Heterochromatic number, or the absence of hyperedges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcValue {
    NoHyperedges,
    Value(usize),
}

impl HcValue {
    pub fn value(self) -> Option<usize> {
        match self {
            HcValue::Value(v) => Some(v),
            HcValue::NoHyperedges => None,
        }
    }
}

impl std::fmt::Display for HcValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HcValue::NoHyperedges => write!(f, "no_hyperedges"),
            HcValue::Value(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcOutcome {
    pub value: HcValue,
    /// A rainbow-free partition into `hc - 1` blocks; absent when `hc <= 1`.
    pub witness: Option<Partition>,
    pub stats: SearchStats,
}

/// Smallest `t` such that every `t`-colouring has a rainbow hyperedge.
pub fn hc(h: &Hypergraph, cfg: &SearchConfig) -> Result<HcOutcome> {
    if h.is_empty() {
        return Ok(HcOutcome { value: HcValue::NoHyperedges, witness: None, stats: SearchStats::default() });
    }
    match max_rainbow_free(h, cfg)? {
        (MaxRainbowFree::NoRainbowPossible, stats) => {
            Ok(HcOutcome { value: HcValue::Value(1), witness: None, stats })
        }
        (MaxRainbowFree::Blocks { count, witness }, stats) => {
            Ok(HcOutcome { value: HcValue::Value(count + 1), witness: Some(witness), stats })
        }
    }
}
