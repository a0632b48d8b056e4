//! Exact counting of irreducible upper sets without materializing them.
//!
//! The engine walks up-sets by always extending with elements whose upper
//! covers are already present, in a fixed top-down element order. Every
//! nonempty up-set is generated exactly once, so the walk visits one node per
//! up-set; a union-find over cover edges, rolled back on backtrack, keeps the
//! number of connected components incrementally. Subtrees are disjoint, which
//! makes the parallel split exact and deterministic regardless of thread
//! count.

use std::collections::BinaryHeap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::CountError;
use crate::matroid::Matroid;
use crate::poset::{Bits, Poset};

/// Dedekind numbers, the irreducible counts over rank-zero uniform matroids.
pub const DEDEKIND: [u64; 7] = [1, 2, 5, 19, 167, 7580, 7_828_353];

/// Knobs for one counting run.
#[derive(Clone, Debug)]
pub struct CountOptions {
    /// Worker threads; 0 picks the rayon default, 1 forces sequential.
    pub threads: usize,
    /// Wall-clock budget; exceeding it aborts with `BudgetExceeded`.
    pub budget: Option<Duration>,
    /// Cross-check against full enumeration on posets of at most 12 elements.
    pub cross_check: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            threads: 1,
            budget: None,
            cross_check: true,
        }
    }
}

/// Outcome of one exact count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub descriptor: String,
    pub count: u64,
    pub elapsed: Duration,
    pub method: String,
}

/// Counts the irreducible upper sets of a poset with default options.
pub fn count_irreducibles(poset: &Poset) -> Result<CountResult, CountError> {
    count_irreducibles_with(poset, &format!("poset:{}", poset.len()), &CountOptions::default())
}

/// Counts the irreducible upper sets of `slice_poset(U(k, n))`.
pub fn count_uniform(k: usize, n: usize, opts: &CountOptions) -> Result<CountResult, CountError> {
    let poset = Matroid::uniform(k, n)?.slice_poset()?;
    count_irreducibles_with(&poset, &uniform_descriptor(k, n), opts)
}

pub fn uniform_descriptor(k: usize, n: usize) -> String {
    format!("uniform:{k},{n}")
}

/// Counts connected nonempty up-sets by pruned depth-first generation.
pub fn count_irreducibles_with(
    poset: &Poset,
    descriptor: &str,
    opts: &CountOptions,
) -> Result<CountResult, CountError> {
    let start = Instant::now();
    let shape = Shape::new(poset);
    let deadline = opts.budget.map(|b| start + b);
    let cancel = AtomicBool::new(false);

    let threads = if opts.threads == 0 {
        rayon::current_num_threads()
    } else {
        opts.threads
    };
    let count = if threads <= 1 || poset.len() < 8 {
        let mut ctx = Ctx::fresh(&shape, deadline, &cancel);
        ctx.dfs(0);
        if ctx.aborted {
            return Err(budget_error(descriptor, opts));
        }
        ctx.count
    } else {
        count_parallel(&shape, threads, deadline, &cancel, descriptor, opts)?
    };

    if opts.cross_check && poset.len() <= 12 {
        let enumerated = poset.enumerate_irreducible_upper_sets().len() as u64;
        assert_eq!(
            count, enumerated,
            "counting engine disagrees with enumeration on `{descriptor}`"
        );
    }

    Ok(CountResult {
        descriptor: descriptor.to_owned(),
        count,
        elapsed: start.elapsed(),
        method: format!("dfs-uf,threads={threads}"),
    })
}

fn budget_error(descriptor: &str, opts: &CountOptions) -> CountError {
    CountError::BudgetExceeded {
        descriptor: descriptor.to_owned(),
        millis: opts.budget.map_or(0, |b| b.as_millis() as u64),
    }
}

fn count_parallel(
    shape: &Shape,
    threads: usize,
    deadline: Option<Instant>,
    cancel: &AtomicBool,
    descriptor: &str,
    opts: &CountOptions,
) -> Result<u64, CountError> {
    // Peel off the top of the search tree until enough disjoint subtrees
    // exist to balance the workers. Subtree sizes are heavily skewed, so
    // always split the state with the most open choices next; the immediate
    // branching count plus the number of undecided positions is a usable
    // proxy for subtree size.
    let target = (threads * 2048).min(16_384);
    let mut base = 0u64;
    let mut heap: BinaryHeap<(u32, usize, u64, usize)> = BinaryHeap::new();
    heap.push((u32::MAX, shape.n, 0, 0));
    while heap.len() < target {
        let Some((_, _, mask, pos)) = heap.pop() else {
            break;
        };
        let ctx = Ctx::from_mask(shape, mask, deadline, cancel);
        let cand = ctx.addable & mask_from(pos);
        for j in Bits(cand) {
            let child = mask | (1 << j);
            let child_ctx = Ctx::from_mask(shape, child, deadline, cancel);
            if child_ctx.comp_count == 1 {
                base += 1;
            }
            let branching = (child_ctx.addable & mask_from(j + 1)).count_ones();
            heap.push((branching, shape.n - (j + 1).min(shape.n), child, j + 1));
        }
    }
    let tasks: Vec<(u64, usize)> = heap.into_iter().map(|(_, _, m, p)| (m, p)).collect();

    let run = || -> Result<u64, CountError> {
        let subtotals: Result<Vec<u64>, CountError> = tasks
            .par_iter()
            .map(|&(mask, pos)| {
                let mut ctx = Ctx::from_mask(shape, mask, deadline, cancel);
                ctx.dfs(pos);
                if ctx.aborted {
                    Err(budget_error(descriptor, opts))
                } else {
                    Ok(ctx.count)
                }
            })
            .collect();
        subtotals?
            .iter()
            .try_fold(base, |acc, &c| acc.checked_add(c))
            .ok_or(CountError::Overflow)
    };

    if opts.threads == 0 {
        run()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(run)
    }
}

/// Mask of all bit positions at or above `pos`.
fn mask_from(pos: usize) -> u64 {
    if pos >= 64 {
        0
    } else {
        u64::MAX << pos
    }
}

/// Cover structure reindexed so that position 0 is a maximal element and all
/// upper covers of an element precede it.
struct Shape {
    n: usize,
    covers_up: Vec<u64>,
    covers_dn: Vec<u64>,
}

impl Shape {
    fn new(poset: &Poset) -> Shape {
        let n = poset.len();
        let order: Vec<usize> = poset.linear_extension().iter().rev().copied().collect();
        let mut pos_of = vec![0usize; n];
        for (i, &x) in order.iter().enumerate() {
            pos_of[x] = i;
        }
        let remap = |mask: u64| -> u64 {
            let mut out = 0u64;
            for x in Bits(mask) {
                out |= 1 << pos_of[x];
            }
            out
        };
        Shape {
            n,
            covers_up: order.iter().map(|&x| remap(poset.covers_up(x))).collect(),
            covers_dn: order.iter().map(|&x| remap(poset.covers_dn(x))).collect(),
        }
    }
}

const BUDGET_CHECK_INTERVAL: u64 = 1 << 14;

struct Ctx<'a> {
    shape: &'a Shape,
    in_set: u64,
    addable: u64,
    missing: [u8; 64],
    parent: [u8; 64],
    size: [u8; 64],
    undo: Vec<(u8, u8)>,
    comp_count: u32,
    count: u64,
    nodes: u64,
    next_check: u64,
    deadline: Option<Instant>,
    cancel: &'a AtomicBool,
    aborted: bool,
}

impl<'a> Ctx<'a> {
    fn fresh(shape: &'a Shape, deadline: Option<Instant>, cancel: &'a AtomicBool) -> Ctx<'a> {
        Ctx::from_mask(shape, 0, deadline, cancel)
    }

    /// Rebuilds the incremental state for an arbitrary up-set mask.
    fn from_mask(
        shape: &'a Shape,
        mask: u64,
        deadline: Option<Instant>,
        cancel: &'a AtomicBool,
    ) -> Ctx<'a> {
        let mut ctx = Ctx {
            shape,
            in_set: mask,
            addable: 0,
            missing: [0; 64],
            parent: [0; 64],
            size: [0; 64],
            undo: Vec::with_capacity(shape.n),
            comp_count: 0,
            count: 0,
            nodes: 0,
            next_check: BUDGET_CHECK_INTERVAL,
            deadline,
            cancel,
            aborted: false,
        };
        for i in 0..shape.n {
            let miss = (shape.covers_up[i] & !mask).count_ones() as u8;
            ctx.missing[i] = miss;
            if mask & (1 << i) == 0 && miss == 0 {
                ctx.addable |= 1 << i;
            }
        }
        for j in Bits(mask) {
            ctx.parent[j] = j as u8;
            ctx.size[j] = 1;
            ctx.comp_count += 1;
        }
        for j in Bits(mask) {
            for y in Bits(shape.covers_up[j]) {
                ctx.union(j as u8, y as u8);
            }
        }
        ctx.undo.clear();
        ctx
    }

    fn find(&self, mut x: u8) -> u8 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u8, b: u8) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (small, big) = if self.size[ra as usize] <= self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        self.undo.push((small, big));
        self.comp_count -= 1;
        true
    }

    fn add(&mut self, j: usize) -> (u64, usize) {
        self.in_set |= 1 << j;
        self.addable &= !(1 << j);
        let mut newly = 0u64;
        for x in Bits(self.shape.covers_dn[j]) {
            self.missing[x] -= 1;
            if self.missing[x] == 0 {
                newly |= 1 << x;
            }
        }
        self.addable |= newly;
        self.parent[j] = j as u8;
        self.size[j] = 1;
        self.comp_count += 1;
        let before = self.undo.len();
        for y in Bits(self.shape.covers_up[j]) {
            self.union(j as u8, y as u8);
        }
        (newly, self.undo.len() - before)
    }

    fn remove(&mut self, j: usize, newly: u64, unions: usize) {
        for _ in 0..unions {
            let (small, big) = self.undo.pop().expect("undo entries match unions");
            self.parent[small as usize] = small;
            self.size[big as usize] -= self.size[small as usize];
            self.comp_count += 1;
        }
        self.comp_count -= 1;
        for x in Bits(self.shape.covers_dn[j]) {
            self.missing[x] += 1;
        }
        self.addable &= !newly;
        self.addable |= 1 << j;
        self.in_set &= !(1 << j);
    }

    fn check_budget(&mut self) {
        self.next_check = self.nodes + BUDGET_CHECK_INTERVAL;
        if self.cancel.load(Ordering::Relaxed) {
            self.aborted = true;
        } else if let Some(d) = self.deadline {
            if Instant::now() >= d {
                self.cancel.store(true, Ordering::Relaxed);
                self.aborted = true;
            }
        }
    }

    /// Extends the current up-set with every addable element at position
    /// `min_pos` or later, counting connected states as they appear.
    fn dfs(&mut self, min_pos: usize) {
        let cand = self.addable & mask_from(min_pos);
        for j in Bits(cand) {
            let (newly, unions) = self.add(j);
            self.nodes += 1;
            if self.nodes >= self.next_check {
                self.check_budget();
            }
            if self.comp_count == 1 {
                self.count += 1;
            }
            if !self.aborted {
                self.dfs(j + 1);
            }
            self.remove(j, newly, unions);
            if self.aborted {
                return;
            }
        }
    }
}

/// Counts irreducibles over the rank-zero uniform matroid and checks the
/// result against the known Dedekind prefix.
pub fn dedekind_column(n: usize, opts: &CountOptions) -> Result<CountResult, CountError> {
    let result = count_uniform(0, n, opts)?;
    assert_eq!(
        result.count, DEDEKIND[n],
        "engine self-check failed on the Dedekind column at n = {n}"
    );
    Ok(result)
}

/// One cell of the irreducible-count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableCell {
    Exact(CountResult),
    /// Mirrored from the complementary rank.
    Dual { of_k: usize, count: u64 },
    Timeout { millis: u64 },
    Skipped { reason: String },
}

impl TableCell {
    pub fn count(&self) -> Option<u64> {
        match self {
            TableCell::Exact(r) => Some(r.count),
            TableCell::Dual { count, .. } => Some(*count),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub n: usize,
    /// Cells indexed by k = 0..=n.
    pub cells: Vec<TableCell>,
}

#[derive(Clone, Debug)]
pub struct Table1 {
    pub rows: Vec<Table1Row>,
}

#[derive(Clone, Debug, Default)]
pub struct Table1Options {
    pub count: CountOptions,
    /// Compute the heavyweight n = 6, k in {2, 3} cells instead of skipping.
    pub stretch: bool,
}

/// Irreducible counts for U(k, n) over all n <= max_n, k <= n. Cells past the
/// symmetry axis mirror their dual; the two heavyweight n = 6 cells are
/// opt-in via [`Table1Options::stretch`].
pub fn table1(max_n: usize, opts: &Table1Options) -> Result<Table1, CountError> {
    table1_with(max_n, opts, |_, _| None, |_| ())
}

/// [`table1`] with hooks for a result cache: `lookup` may answer a cell
/// before it is computed, `store` sees every freshly computed cell.
pub fn table1_with(
    max_n: usize,
    opts: &Table1Options,
    mut lookup: impl FnMut(usize, usize) -> Option<CountResult>,
    mut store: impl FnMut(&CountResult),
) -> Result<Table1, CountError> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let mut cells: Vec<TableCell> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if 2 * k > n {
                let dual = &cells[n - k];
                let cell = match dual.count() {
                    Some(count) => TableCell::Dual { of_k: n - k, count },
                    None => dual.clone(),
                };
                cells.push(cell);
                continue;
            }
            if let Some(hit) = lookup(k, n) {
                cells.push(TableCell::Exact(hit));
                continue;
            }
            if n == 6 && (k == 2 || k == 3) && !opts.stretch {
                cells.push(TableCell::Skipped {
                    reason: "opt-in".to_owned(),
                });
                continue;
            }
            match count_uniform(k, n, &opts.count) {
                Ok(result) => {
                    store(&result);
                    cells.push(TableCell::Exact(result));
                }
                Err(CountError::BudgetExceeded { millis, .. }) => {
                    cells.push(TableCell::Timeout { millis })
                }
                Err(e) => return Err(e),
            }
        }
        rows.push(Table1Row { n, cells });
    }
    Ok(Table1 { rows })
}

#[derive(Clone, Debug)]
pub struct SweepRankRow {
    pub rank: usize,
    pub matroids: usize,
    pub max_count: u64,
    pub uniform_count: u64,
    pub uniform_attains_max: bool,
}

/// Evidence report: irreducible counts over every rank table on n elements.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub n: usize,
    pub matroid_count: usize,
    pub per_rank: Vec<SweepRankRow>,
    pub global_max: u64,
    pub half_rank_uniform_count: u64,
    pub global_attained_by_half_rank_uniform: bool,
}

const SWEEP_MAX_N: usize = 3;

/// Enumerates every valid rank table on n <= 3 elements, counts irreducibles
/// of each induced poset, and reports whether uniform matroids attain the
/// per-rank and global maxima. Evidence only; nothing here is a proof.
pub fn conjecture_sweep(n: usize) -> Result<SweepReport, CountError> {
    if n > SWEEP_MAX_N {
        return Err(CountError::SweepTooLarge { n, max: SWEEP_MAX_N });
    }
    let subsets = 1usize << n;
    let mut table = vec![0u8; subsets];
    let mut matroids: Vec<Matroid> = Vec::new();
    // Candidate tables: rank zero on the empty set, bounded by cardinality
    // elsewhere; the matroid axioms filter the rest.
    fn fill(table: &mut Vec<u8>, idx: usize, n: usize, out: &mut Vec<Matroid>) {
        if idx == table.len() {
            let m = Matroid::from_rank_table(n, table.clone()).expect("table sized to 2^n");
            if m.is_valid() {
                out.push(m);
            }
            return;
        }
        let cap = if idx == 0 { 0 } else { (idx as u32).count_ones() as u8 };
        for r in 0..=cap {
            table[idx] = r;
            fill(table, idx + 1, n, out);
        }
    }
    fill(&mut table, 0, n, &mut matroids);

    let opts = CountOptions::default();
    let mut counted: Vec<(usize, u64, bool)> = Vec::new();
    for m in &matroids {
        let rank = m.rank(m.full_mask()) as usize;
        let uniform = *m == Matroid::uniform(rank, n)?;
        let poset = m.slice_poset()?;
        let result = count_irreducibles_with(&poset, &format!("sweep:{:?}", m.ranks()), &opts)?;
        counted.push((rank, result.count, uniform));
    }

    let mut per_rank = Vec::new();
    for rank in 0..=n {
        let in_rank: Vec<&(usize, u64, bool)> =
            counted.iter().filter(|(r, _, _)| *r == rank).collect();
        if in_rank.is_empty() {
            continue;
        }
        let max_count = in_rank.iter().map(|(_, c, _)| *c).max().unwrap_or(0);
        let uniform_count = in_rank
            .iter()
            .find(|(_, _, u)| *u)
            .map(|(_, c, _)| *c)
            .expect("uniform matroid exists in every rank");
        per_rank.push(SweepRankRow {
            rank,
            matroids: in_rank.len(),
            max_count,
            uniform_count,
            uniform_attains_max: uniform_count == max_count,
        });
    }
    let global_max = counted.iter().map(|(_, c, _)| *c).max().unwrap_or(0);
    let half = count_uniform(n / 2, n, &opts)?.count;
    Ok(SweepReport {
        n,
        matroid_count: matroids.len(),
        per_rank,
        global_max,
        half_rank_uniform_count: half,
        global_attained_by_half_rank_uniform: half == global_max,
    })
}
