//! Exhaustive search for `s_L(G)` and related extremal enumerations.
//!
//! Sequences are generated as nondecreasing element-index lists, so every
//! multiset is visited once. Each search node carries, per group element,
//! a bitmask of the lengths of subsequences summing to it; appending `x`
//! is rejected when a subsequence of sum `−x` has length in `L − 1`.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::sequence::{LengthSet, Sequence};

/// Largest group order handled by the search tables.
pub const MAX_SEARCH_ORDER: u64 = 4096;

/// How often workers publish node counts and poll the budgets.
const FLUSH_INTERVAL: u64 = 4096;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
    pub symmetry_reduction: bool,
    pub parallel_depth: usize,
    /// Restricts the search to sequences containing this sub-multiset.
    pub stem: Option<Sequence>,
    /// Length cap for non-interval `L`; defaults to `4·D*(G)`.
    pub horizon: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            node_budget: u64::MAX,
            time_budget: None,
            symmetry_reduction: false,
            parallel_depth: 0,
            stem: None,
            horizon: None,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.node_budget == 0 {
            return Err(Error::InvalidParams("node budget must be positive".into()));
        }
        if self.time_budget.is_some_and(|t| t.is_zero()) {
            return Err(Error::InvalidParams("time budget must be positive".into()));
        }
        if self.horizon == Some(0) {
            return Err(Error::InvalidParams("horizon must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchValue {
    Finite(u64),
    Infinite,
    /// Budget or horizon reached; every sequence found so far is shorter
    /// than `lower_bound`, so `s_L(G) ≥ lower_bound`.
    Unknown {
        lower_bound: u64,
    },
}

impl SearchValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            Self::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_complete(self) -> bool {
        !matches!(self, Self::Unknown { .. })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub pruned: u64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub value: SearchValue,
    pub witness: Option<Sequence>,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalSet {
    pub sequences: Vec<Sequence>,
    pub up_to_automorphism: bool,
    /// False when a budget cut the enumeration short.
    pub complete: bool,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decision {
    Exists(Sequence),
    NoneExists,
    Unknown,
}

/// True if some element order has no multiple in `L`, so a power of that
/// element avoids `L` at every length.
pub fn infinite_certificate(group: &GroupSpec, lengths: &LengthSet) -> bool {
    divisors(group.exponent())
        .into_iter()
        .filter(|&o| o > 1)
        .any(|o| first_multiple_in(lengths, o).is_none())
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1];
    for (p, e) in factorize(n) {
        let base = out.clone();
        let mut q = 1;
        for _ in 0..e {
            q *= p;
            out.extend(base.iter().map(|d| d * q));
        }
    }
    out.sort_unstable();
    out
}

fn first_multiple_in(lengths: &LengthSet, o: u64) -> Option<u64> {
    match lengths {
        LengthSet::Interval(k) => (o <= *k).then_some(o),
        LengthSet::Singleton(m) => (m % o == 0).then_some(*m),
        LengthSet::Explicit(set) => set.iter().copied().find(|l| l % o == 0),
        LengthSet::AllPositive => Some(o),
    }
}

/// Precomputed tables shared by all workers of one search.
struct Space {
    n: usize,
    minus: Vec<u16>,
    neg: Vec<usize>,
    cap: Vec<u32>,
    lmask: u64,
    full: u64,
    saturating: bool,
    max_len: usize,
}

impl Space {
    fn new(group: &GroupSpec, lengths: &LengthSet, max_len_hint: Option<usize>) -> Result<Self> {
        let n = group.checked_order(MAX_SEARCH_ORDER)?;
        let mut minus = vec![0u16; n * n];
        let elements: Vec<_> = (0..n).map(|i| group.element_at(i)).collect();
        for (x, ex) in elements.iter().enumerate() {
            for (g, eg) in elements.iter().enumerate() {
                minus[x * n + g] = group.index_of(&group.sub(eg, ex)?) as u16;
            }
        }
        let neg: Vec<usize> = (0..n).map(|x| minus[x * n] as usize).collect();
        let cap: Vec<u32> = elements
            .iter()
            .map(|e| {
                let o = group.order_of(e).expect("element of group");
                first_multiple_in(lengths, o).map_or(u32::MAX, |l| (l - 1) as u32)
            })
            .collect();
        let total: usize = cap.iter().map(|&c| c as usize).sum();
        let max_len = max_len_hint.map_or(total, |h| h.min(total));

        // An interval reaching |G| bans every nonempty zero-sum, since each
        // contains a minimal one of length at most |G|.
        let lengths = match lengths {
            LengthSet::Interval(k) if *k >= n as u64 => &LengthSet::AllPositive,
            other => other,
        };
        let (lmask, full, saturating) = match lengths.max() {
            None => (0b10, 0b11, true),
            Some(m) => {
                let width = (m as usize).min(max_len);
                if width > 62 {
                    return Err(Error::ResourceLimit(format!(
                        "length set {lengths} needs {width}-bit length masks"
                    )));
                }
                let full = (1u64 << (width + 1)) - 1;
                let lmask = lengths
                    .members_up_to(width as u64)
                    .iter()
                    .fold(0u64, |acc, &l| acc | 1 << l);
                (lmask, full, false)
            }
        };
        Ok(Self {
            n,
            minus,
            neg,
            cap,
            lmask,
            full,
            saturating,
            max_len,
        })
    }

    #[inline]
    fn shift(&self, m: u64) -> u64 {
        if self.saturating {
            if m != 0 {
                0b10
            } else {
                0
            }
        } else {
            (m << 1) & self.full
        }
    }

    #[inline]
    fn admissible(&self, masks: &[u64], y: usize) -> bool {
        self.shift(masks[self.neg[y]]) & self.lmask == 0
    }

    fn append(&self, old: &[u64], new: &mut [u64], x: usize) {
        let row = &self.minus[x * self.n..(x + 1) * self.n];
        for ((dst, &o), &src) in new.iter_mut().zip(old).zip(row) {
            *dst = o | self.shift(old[src as usize]);
        }
    }

    fn initial_masks(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.n];
        m[0] = 1;
        m
    }

    /// Masks and counts after appending `seq`, or `None` if `seq` already
    /// has a banned zero-sum or exceeds a multiplicity cap.
    fn state_of(&self, seq: &[usize]) -> Option<(Vec<u64>, Vec<u32>)> {
        let mut masks = self.initial_masks();
        let mut next = masks.clone();
        let mut counts = vec![0u32; self.n];
        for &x in seq {
            if counts[x] >= self.cap[x] || !self.admissible(&masks, x) {
                return None;
            }
            counts[x] += 1;
            self.append(&masks, &mut next, x);
            std::mem::swap(&mut masks, &mut next);
        }
        Some((masks, counts))
    }
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    abort: AtomicBool,
    found: AtomicBool,
    node_budget: u64,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(cfg: &SearchConfig, start: Instant) -> Self {
        Self {
            best: AtomicUsize::new(0),
            nodes: AtomicU64::new(0),
            abort: AtomicBool::new(false),
            found: AtomicBool::new(false),
            node_budget: cfg.node_budget,
            deadline: cfg.time_budget.map(|t| start + t),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Maximize,
    Collect(usize),
    Decide(usize),
}

/// A search root: a starting sequence and the least index its extension
/// may use.
#[derive(Clone)]
struct Root {
    seq: Vec<usize>,
    start: usize,
}

struct Worker<'a> {
    space: &'a Space,
    shared: &'a Shared,
    mode: Mode,
    levels: Vec<Vec<u64>>,
    seq: Vec<usize>,
    counts: Vec<u32>,
    best_len: usize,
    best: Option<Vec<usize>>,
    collected: Vec<Vec<usize>>,
    local_nodes: u64,
    pruned: u64,
    /// Stop descending at this length and report the node as a task.
    split_at: Option<usize>,
    tasks: Vec<Item>,
}

enum Item {
    Candidate(Vec<usize>),
    Task(Root),
}

struct Outcome {
    best: Option<Vec<usize>>,
    collected: Vec<Vec<usize>>,
    pruned: u64,
}

impl<'a> Worker<'a> {
    fn new(space: &'a Space, shared: &'a Shared, mode: Mode, root: &Root) -> Option<Self> {
        let (masks, counts) = space.state_of(&root.seq)?;
        let depth = space.max_len + 1;
        let mut levels = vec![vec![0u64; space.n]; depth.saturating_sub(root.seq.len()) + 1];
        levels[0] = masks;
        Some(Self {
            space,
            shared,
            mode,
            levels,
            seq: root.seq.clone(),
            counts,
            best_len: 0,
            best: None,
            collected: Vec::new(),
            local_nodes: 0,
            pruned: 0,
            split_at: None,
            tasks: Vec::new(),
        })
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes.is_multiple_of(FLUSH_INTERVAL) {
            self.flush();
        }
        self.shared.abort.load(Ordering::Relaxed)
            || (matches!(self.mode, Mode::Decide(_)) && self.shared.found.load(Ordering::Relaxed))
    }

    fn flush(&mut self) {
        let pending = self.local_nodes % FLUSH_INTERVAL;
        let pending = if pending == 0 {
            FLUSH_INTERVAL
        } else {
            pending
        };
        let total = self.shared.nodes.fetch_add(pending, Ordering::Relaxed) + pending;
        self.local_nodes = 0;
        let late = self.shared.deadline.is_some_and(|d| Instant::now() >= d);
        if total > self.shared.node_budget || late {
            self.shared.abort.store(true, Ordering::Relaxed);
        }
    }

    fn finish(mut self) -> Outcome {
        if self.local_nodes > 0 {
            self.flush();
        }
        Outcome {
            best: self.best,
            collected: self.collected,
            pruned: self.pruned,
        }
    }

    fn run(&mut self, start: usize) {
        self.dfs(0, start);
    }

    fn dfs(&mut self, level: usize, start: usize) {
        if self.tick() {
            return;
        }
        let len = self.seq.len();
        match self.mode {
            Mode::Maximize => {
                if self.best.is_none() || len > self.best_len {
                    self.best_len = len;
                    self.best = Some(self.seq.clone());
                    self.shared.best.fetch_max(len, Ordering::Relaxed);
                }
            }
            Mode::Collect(target) | Mode::Decide(target) => {
                if len == target {
                    self.collected.push(self.seq.clone());
                    if matches!(self.mode, Mode::Decide(_)) {
                        self.shared.found.store(true, Ordering::Relaxed);
                    }
                    return;
                }
            }
        }
        if len >= self.space.max_len {
            return;
        }
        if self.split_at == Some(len) {
            self.tasks.push(Item::Task(Root {
                seq: self.seq.clone(),
                start,
            }));
            return;
        }

        let space = self.space;
        let masks = &self.levels[level];
        let mut children: Vec<(usize, u64)> = Vec::new();
        for y in start..space.n {
            if self.counts[y] < space.cap[y] && space.admissible(masks, y) {
                children.push((y, (space.cap[y] - self.counts[y]) as u64));
            }
        }
        // suffix sums give the bound for each child in turn
        let mut room: u64 = children.iter().map(|c| c.1).sum();
        for (y, rem) in children {
            let bound = len as u64 + room;
            room -= rem;
            if self.cut(bound) {
                self.pruned += 1;
                break;
            }
            let (lo, hi) = self.levels.split_at_mut(level + 1);
            space.append(&lo[level], &mut hi[0], y);
            self.seq.push(y);
            self.counts[y] += 1;
            self.dfs(level + 1, y);
            self.counts[y] -= 1;
            self.seq.pop();
            if self.shared.abort.load(Ordering::Relaxed) {
                return;
            }
        }
    }

    fn cut(&self, bound: u64) -> bool {
        match self.mode {
            Mode::Maximize => {
                let global = self.shared.best.load(Ordering::Relaxed) as u64;
                (self.best.is_some() && bound <= self.best_len as u64) || bound < global
            }
            Mode::Collect(t) | Mode::Decide(t) => bound < t as u64,
        }
    }

    /// Explores the first `depth` levels below the root, recording every
    /// visited node as a candidate and every node at the split depth as a
    /// task, in DFS order.
    fn split(
        space: &'a Space,
        shared: &'a Shared,
        mode: Mode,
        root: &Root,
        depth: usize,
    ) -> Vec<Item> {
        let Some(mut w) = Worker::new(space, shared, Mode::Collect(usize::MAX), root) else {
            return Vec::new();
        };
        w.split_at = Some(root.seq.len() + depth);
        w.mode = Mode::Collect(usize::MAX);
        w.split_dfs(0, root.start, mode);
        let tasks = std::mem::take(&mut w.tasks);
        w.finish();
        tasks
    }

    fn split_dfs(&mut self, level: usize, start: usize, mode: Mode) {
        let len = self.seq.len();
        if self.split_at == Some(len) && len < self.space.max_len {
            self.tasks.push(Item::Task(Root {
                seq: self.seq.clone(),
                start,
            }));
            return;
        }
        self.tasks.push(Item::Candidate(self.seq.clone()));
        if let Mode::Collect(t) | Mode::Decide(t) = mode {
            if len >= t {
                return;
            }
        }
        if len >= self.space.max_len {
            return;
        }
        let space = self.space;
        for y in start..space.n {
            if self.counts[y] < space.cap[y] && space.admissible(&self.levels[level], y) {
                let (lo, hi) = self.levels.split_at_mut(level + 1);
                space.append(&lo[level], &mut hi[0], y);
                self.seq.push(y);
                self.counts[y] += 1;
                self.split_dfs(level + 1, y, mode);
                self.counts[y] -= 1;
                self.seq.pop();
            }
        }
    }
}

struct RunResult {
    best: Option<Vec<usize>>,
    collected: Vec<Vec<usize>>,
    aborted: bool,
    stats: SearchStats,
}

/// Runs `mode` over all roots, splitting each at `parallel_depth` when that
/// is positive. Results are merged in DFS order, so the outcome does not
/// depend on scheduling.
fn run_search(space: &Space, roots: &[Root], mode: Mode, cfg: &SearchConfig) -> RunResult {
    let start = Instant::now();
    let shared = Shared::new(cfg, start);
    let mut items: Vec<Item> = Vec::new();
    for root in roots {
        if cfg.parallel_depth == 0 {
            items.push(Item::Task(root.clone()));
        } else {
            items.extend(Worker::split(
                space,
                &shared,
                mode,
                root,
                cfg.parallel_depth,
            ));
        }
    }

    let run_item = |item: &Item| -> Option<Outcome> {
        match item {
            Item::Candidate(seq) => {
                let collected = match mode {
                    Mode::Collect(t) | Mode::Decide(t) if seq.len() == t => vec![seq.clone()],
                    _ => Vec::new(),
                };
                if mode == Mode::Maximize {
                    shared.best.fetch_max(seq.len(), Ordering::Relaxed);
                }
                Some(Outcome {
                    best: Some(seq.clone()),
                    collected,
                    pruned: 0,
                })
            }
            Item::Task(root) => {
                let mut w = Worker::new(space, &shared, mode, root)?;
                w.run(root.start);
                Some(w.finish())
            }
        }
    };
    let outcomes: Vec<Option<Outcome>> = if cfg.parallel_depth == 0 {
        items.iter().map(run_item).collect()
    } else {
        items.par_iter().map(run_item).collect()
    };

    let mut best: Option<Vec<usize>> = None;
    let mut collected = Vec::new();
    let mut pruned = 0;
    for out in outcomes.into_iter().flatten() {
        pruned += out.pruned;
        collected.extend(out.collected);
        if let Some(b) = out.best {
            if best.as_ref().is_none_or(|cur| b.len() > cur.len()) {
                best = Some(b);
            }
        }
    }
    RunResult {
        best,
        collected,
        aborted: shared.abort.load(Ordering::Relaxed),
        stats: SearchStats {
            nodes: shared.nodes.load(Ordering::Relaxed),
            pruned,
            seconds: start.elapsed().as_secs_f64(),
        },
    }
}

/// Orbit representatives of the `L`-free `j`-multisets under the
/// automorphism group, each the lex-least index list in its orbit.
fn stems(group: &GroupSpec, space: &Space, j: usize) -> Result<Vec<Vec<usize>>> {
    let perms: Vec<Vec<u32>> = group
        .automorphisms()?
        .iter()
        .map(|phi| phi.permutation(group))
        .collect();
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(j);
    collect_stems(space, &perms, j, 0, &mut seq, &mut out);
    Ok(out)
}

fn collect_stems(
    space: &Space,
    perms: &[Vec<u32>],
    j: usize,
    start: usize,
    seq: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if seq.len() == j {
        if space.state_of(seq).is_some() && is_orbit_minimum(seq, perms) {
            out.push(seq.clone());
        }
        return;
    }
    for y in start..space.n {
        seq.push(y);
        if space.state_of(seq).is_some() {
            collect_stems(space, perms, j, y, seq, out);
        }
        seq.pop();
    }
}

fn is_orbit_minimum(seq: &[usize], perms: &[Vec<u32>]) -> bool {
    let mut image = vec![0usize; seq.len()];
    perms.iter().all(|perm| {
        for (dst, &x) in image.iter_mut().zip(seq) {
            *dst = perm[x] as usize;
        }
        image.sort_unstable();
        image.as_slice() >= seq
    })
}

/// Lex-least image of a sorted index list under the given permutations.
fn canonical_form(seq: &[usize], perms: &[Vec<u32>]) -> Vec<usize> {
    let mut best = seq.to_vec();
    let mut image = vec![0usize; seq.len()];
    for perm in perms {
        for (dst, &x) in image.iter_mut().zip(seq) {
            *dst = perm[x] as usize;
        }
        image.sort_unstable();
        if image < best {
            best.clone_from(&image);
        }
    }
    best
}

/// Search roots: the configured stem, the symmetry-reduced stems when
/// sequences of at least `min_len` terms are sought, or the empty sequence.
fn roots_for(
    group: &GroupSpec,
    space: &Space,
    cfg: &SearchConfig,
    min_len: usize,
) -> Result<Vec<Root>> {
    if let Some(stem) = &cfg.stem {
        if stem.group() != group {
            return Err(Error::GroupMismatch);
        }
        return Ok(vec![Root {
            seq: stem.indices(),
            start: 0,
        }]);
    }
    let j = group.rank().min(3);
    if cfg.symmetry_reduction && group.is_homocyclic() && j >= 2 && min_len >= j {
        match stems(group, space, j) {
            Ok(reps) if !reps.is_empty() => {
                return Ok(reps.into_iter().map(|seq| Root { seq, start: 0 }).collect());
            }
            Ok(_) | Err(Error::ResourceLimit(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(vec![Root {
        seq: Vec::new(),
        start: 0,
    }])
}

fn to_sequence(group: &GroupSpec, seq: &[usize]) -> Sequence {
    Sequence::from_indices(group, seq)
}

/// `s_L(G)`: one more than the longest sequence with no zero-sum subsequence
/// of length in `L`.
pub fn s_l(group: &GroupSpec, lengths: &LengthSet, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    if infinite_certificate(group, lengths) {
        return Ok(SearchResult {
            value: SearchValue::Infinite,
            witness: None,
            stats: SearchStats::default(),
        });
    }
    let horizon = match lengths {
        LengthSet::Interval(_) | LengthSet::AllPositive => None,
        _ => Some(cfg.horizon.unwrap_or(4 * group.d_star()) as usize),
    };
    let space = Space::new(group, lengths, horizon)?;
    let roots = roots_for(group, &space, cfg, usize::MAX)?;
    let run = run_search(&space, &roots, Mode::Maximize, cfg);
    let best = run.best.unwrap_or_default();
    let reached_horizon = horizon.is_some_and(|h| best.len() >= h);
    let value = if run.aborted || reached_horizon {
        SearchValue::Unknown {
            lower_bound: best.len() as u64 + 1,
        }
    } else {
        SearchValue::Finite(best.len() as u64 + 1)
    };
    Ok(SearchResult {
        value,
        witness: Some(to_sequence(group, &best)),
        stats: run.stats,
    })
}

/// `D(G)`.
pub fn davenport(group: &GroupSpec, cfg: &SearchConfig) -> Result<SearchResult> {
    s_l(group, &LengthSet::AllPositive, cfg)
}

/// `s_{≤k}(G)`.
pub fn s_leq(group: &GroupSpec, k: u64, cfg: &SearchConfig) -> Result<SearchResult> {
    s_l(group, &LengthSet::interval(k)?, cfg)
}

/// `η(G) = s_{[1, exp(G)]}(G)`.
pub fn eta(group: &GroupSpec, cfg: &SearchConfig) -> Result<SearchResult> {
    s_leq(group, group.exponent(), cfg)
}

/// `s(G) = s_{{exp(G)}}(G)`.
pub fn s_egz(group: &GroupSpec, cfg: &SearchConfig) -> Result<SearchResult> {
    s_l(group, &LengthSet::singleton(group.exponent())?, cfg)
}

/// `s_{k·exp(G)}(G)`.
pub fn s_kexp(group: &GroupSpec, k: u64, cfg: &SearchConfig) -> Result<SearchResult> {
    s_l(group, &LengthSet::singleton(k * group.exponent())?, cfg)
}

/// Every sequence of the given length with no zero-sum subsequence of
/// length in `L`, optionally one per automorphism orbit.
pub fn enumerate_extremal(
    group: &GroupSpec,
    lengths: &LengthSet,
    length: usize,
    up_to_automorphism: bool,
    cfg: &SearchConfig,
) -> Result<ExtremalSet> {
    cfg.validate()?;
    if length == 0 {
        return Err(Error::InvalidParams("length must be at least 1".into()));
    }
    let space = Space::new(group, lengths, Some(length))?;
    let root = Root {
        seq: Vec::new(),
        start: 0,
    };
    let plain = SearchConfig {
        stem: None,
        symmetry_reduction: false,
        ..cfg.clone()
    };
    let run = run_search(&space, &[root], Mode::Collect(length), &plain);
    let found = dedupe(group, run.collected, up_to_automorphism)?;
    Ok(ExtremalSet {
        sequences: found.iter().map(|s| to_sequence(group, s)).collect(),
        up_to_automorphism,
        complete: !run.aborted,
        stats: run.stats,
    })
}

fn dedupe(group: &GroupSpec, seqs: Vec<Vec<usize>>, by_orbit: bool) -> Result<Vec<Vec<usize>>> {
    if !by_orbit {
        let set: BTreeSet<Vec<usize>> = seqs.into_iter().collect();
        return Ok(set.into_iter().collect());
    }
    let perms: Vec<Vec<u32>> = group
        .automorphisms()?
        .iter()
        .map(|phi| phi.permutation(group))
        .collect();
    let set: BTreeSet<Vec<usize>> = seqs.iter().map(|s| canonical_form(s, &perms)).collect();
    Ok(set.into_iter().collect())
}

/// Every minimal zero-sum sequence of the given length, built by closing
/// zero-sum free sequences of length `length − 1` with their negated sum.
pub fn enumerate_minimal_zero_sum(
    group: &GroupSpec,
    length: usize,
    up_to_automorphism: bool,
    cfg: &SearchConfig,
) -> Result<ExtremalSet> {
    cfg.validate()?;
    if length == 0 {
        return Err(Error::InvalidParams("length must be at least 1".into()));
    }
    let free: Vec<Vec<usize>> = if length == 1 {
        vec![Vec::new()]
    } else {
        let space = Space::new(group, &LengthSet::AllPositive, Some(length - 1))?;
        let root = Root {
            seq: Vec::new(),
            start: 0,
        };
        let plain = SearchConfig {
            stem: None,
            symmetry_reduction: false,
            ..cfg.clone()
        };
        let run = run_search(&space, &[root], Mode::Collect(length - 1), &plain);
        if run.aborted {
            return Ok(ExtremalSet {
                sequences: Vec::new(),
                up_to_automorphism,
                complete: false,
                stats: run.stats,
            });
        }
        run.collected
    };
    let start = Instant::now();
    let mut closed = Vec::new();
    for t in free {
        let mut s = to_sequence(group, &t);
        let g = group.neg(&s.sigma())?;
        s.push(g)?;
        if is_minimal_zero_sum(&s)? {
            closed.push(s.indices());
        }
    }
    let found = dedupe(group, closed, up_to_automorphism)?;
    Ok(ExtremalSet {
        sequences: found.iter().map(|s| to_sequence(group, s)).collect(),
        up_to_automorphism,
        complete: true,
        stats: SearchStats {
            seconds: start.elapsed().as_secs_f64(),
            ..Default::default()
        },
    })
}

/// Zero-sum, and no proper nonempty subsequence is zero-sum.
pub fn is_minimal_zero_sum(s: &Sequence) -> Result<bool> {
    if s.is_empty() || !s.is_zero_sum() {
        return Ok(false);
    }
    let table = crate::sequence::feasibility(s)?;
    let zero = s.group().zero();
    Ok((1..s.len()).all(|l| !table.get(&zero, l)))
}

/// Whether some sequence of exactly `length` terms avoids zero-sums with
/// length in `L`.
pub fn exists_free_sequence(
    group: &GroupSpec,
    lengths: &LengthSet,
    length: usize,
    cfg: &SearchConfig,
) -> Result<Decision> {
    cfg.validate()?;
    if infinite_certificate(group, lengths) {
        let g = group
            .elements()?
            .find(|g| first_multiple_in(lengths, group.order_of(g).unwrap_or(1)).is_none())
            .expect("certificate names an element order");
        return Ok(Decision::Exists(Sequence::from_terms(
            group,
            [(g, length as u32)],
        )?));
    }
    let space = Space::new(group, lengths, Some(length))?;
    if space.max_len < length {
        return Ok(Decision::NoneExists);
    }
    let roots = roots_for(
        group,
        &space,
        &SearchConfig {
            stem: None,
            ..cfg.clone()
        },
        length,
    )?;
    let run = run_search(&space, &roots, Mode::Decide(length), cfg);
    Ok(match run.collected.first() {
        Some(seq) => Decision::Exists(to_sequence(group, seq)),
        None if run.aborted => Decision::Unknown,
        None => Decision::NoneExists,
    })
}
