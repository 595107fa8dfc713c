//! Support enumeration and incremental rank tracking for the certified
//! search engine.
//!
//! Supports are visited through a sink so the Gaussian elimination state can
//! be pushed and popped column by column along the enumeration tree. A push
//! that reduces to zero against the current pivots means the parity-check
//! columns of the partial support are dependent, i.e. a codeword lives on a
//! subset of it; the sink records the hit and the branch is pruned.

use crate::symbols::SymbolOps;

pub(crate) trait SupportSink {
    /// Returns true when the pushed column is dependent on the previous ones
    /// (the branch is then pruned by the caller).
    fn push(&mut self, col: usize) -> bool;
    fn pop(&mut self);
    /// A complete support was placed with all pushes independent.
    fn leaf(&mut self);
}

/// Enumerate all supports of size `d` from columns `first..n` whose smallest
/// element is exactly `first`.
pub(crate) fn combinations_task<S: SupportSink>(n: usize, d: usize, first: usize, sink: &mut S) {
    debug_assert!(d >= 1 && first + d <= n);
    if !sink.push(first) {
        combos_rec(n, d - 1, first + 1, sink);
    }
    sink.pop();
}

fn combos_rec<S: SupportSink>(n: usize, remaining: usize, start: usize, sink: &mut S) {
    if remaining == 0 {
        sink.leaf();
        return;
    }
    for c in start..=(n - remaining) {
        if !sink.push(c) {
            combos_rec(n, remaining - 1, c + 1, sink);
        }
        sink.pop();
    }
}

/// One unit of work in the pair-weight layer: circular supports with a fixed
/// number of maximal runs and total size split by their anchor.
#[derive(Clone, Copy, Debug)]
pub(crate) enum RunTask {
    /// Position 0 unused; the first run starts at this position (>= 1).
    LinearFirstStart(usize),
    /// Position 0 used; the run through 0 covers n-b..n-1 and 0..=f.
    Wrap { back: usize, forward: usize },
}

/// All tasks for the block of circular supports with `runs` maximal runs and
/// total size `size` (0 < size < n). Together the tasks enumerate every such
/// support exactly once.
pub(crate) fn run_tasks(n: usize, runs: usize, size: usize) -> Vec<RunTask> {
    debug_assert!(runs >= 1 && size >= runs && size < n);
    let mut tasks = Vec::new();
    // case A: 0 unused, runs in the window [1, n-1]
    let hi = n - 1;
    let max_start = (hi + 1).saturating_sub(size + runs - 1);
    for start in 1..=max_start.min(hi) {
        tasks.push(RunTask::LinearFirstStart(start));
    }
    // case B: the run through 0 takes wrap_len columns; a single run must
    // take all of them
    let wrap_lens = if runs == 1 { size..=size } else { 1..=size - (runs - 1) };
    for wrap_len in wrap_lens {
        for back in 0..wrap_len {
            let forward = wrap_len - 1 - back;
            // keep both boundary gaps on the circle: n-b-1 and f+1 unused
            if back + forward + 2 <= n {
                tasks.push(RunTask::Wrap { back, forward });
            }
        }
    }
    tasks
}

pub(crate) fn run_support_task<S: SupportSink>(
    n: usize,
    runs: usize,
    size: usize,
    task: RunTask,
    sink: &mut S,
) {
    match task {
        RunTask::LinearFirstStart(start) => {
            let hi = n - 1;
            if start + size + runs - 2 <= hi {
                grow_run(start, hi, runs, size, sink);
            }
        }
        RunTask::Wrap { back, forward } => {
            let wrap_len = back + forward + 1;
            let rest = size - wrap_len;
            // push the wrap run: 0..=forward then n-back..n-1
            let mut pushed = 0usize;
            let mut dependent = false;
            for c in (0..=forward).chain(n - back..n) {
                pushed += 1;
                if sink.push(c) {
                    dependent = true;
                    break;
                }
            }
            if !dependent {
                if runs == 1 {
                    debug_assert_eq!(rest, 0);
                    sink.leaf();
                } else {
                    // remaining runs strictly between the wrap run's gaps
                    let lo = forward + 2;
                    let hi = n - back - 2;
                    if rest >= runs - 1 && lo <= hi && lo + rest + runs - 3 <= hi {
                        place_first(lo, hi, runs - 1, rest, sink);
                    }
                }
            }
            for _ in 0..pushed {
                sink.pop();
            }
        }
    }
}

/// Place `runs` runs totaling `size` columns in [lo, hi], any start >= lo.
fn place_first<S: SupportSink>(lo: usize, hi: usize, runs: usize, size: usize, sink: &mut S) {
    debug_assert!(runs >= 1 && size >= runs);
    if lo > hi {
        return;
    }
    let max_start = (hi + 1).saturating_sub(size + runs - 1);
    for start in lo..=max_start.min(hi) {
        grow_run(start, hi, runs, size, sink);
    }
}

/// Push `col` as part of the current run, then either extend the run or
/// close it and start the next one. `runs_left` includes the current run.
fn grow_run<S: SupportSink>(col: usize, hi: usize, runs_left: usize, size_left: usize, sink: &mut S) {
    if !sink.push(col) {
        let size_left = size_left - 1;
        if size_left == 0 {
            debug_assert_eq!(runs_left, 1);
            sink.leaf();
        } else {
            // close the current run; next run needs a gap of >= 1
            if runs_left >= 2 && size_left >= runs_left - 1 {
                let lo = col + 2;
                let span = size_left + (runs_left - 1) - 1; // columns + inner gaps
                if lo <= hi && lo + span - 1 <= hi {
                    let max_start = hi + 1 - span;
                    for nxt in lo..=max_start {
                        grow_run(nxt, hi, runs_left - 1, size_left, sink);
                    }
                }
            }
            // extend the current run
            if size_left >= runs_left && col + size_left + runs_left - 1 <= hi {
                grow_run(col + 1, hi, runs_left, size_left, sink);
            }
        }
    }
    sink.pop();
}

/// A dependency found during enumeration: the pushed support prefix and the
/// null-space basis of its parity-check columns.
pub(crate) struct Hit {
    pub support: Vec<usize>,
    pub null_basis: Vec<Vec<u64>>,
}

/// Incremental-elimination sink over parity-check columns.
pub(crate) struct EliminationSink<'a> {
    ops: &'a SymbolOps,
    cols: &'a [Vec<u64>],
    r: usize,
    pivots: Vec<Pivot>,
    pushed: Vec<(usize, bool)>,
    scratch: Vec<u64>,
    pool: Vec<Vec<u64>>,
    pub checked: u64,
    pub hits: Vec<Hit>,
}

struct Pivot {
    vec: Vec<u64>,
    row: usize,
}

impl<'a> EliminationSink<'a> {
    pub fn new(ops: &'a SymbolOps, cols: &'a [Vec<u64>]) -> EliminationSink<'a> {
        let r = cols.first().map_or(0, |c| c.len());
        EliminationSink {
            ops,
            cols,
            r,
            pivots: Vec::new(),
            pushed: Vec::new(),
            scratch: vec![0; r],
            pool: Vec::new(),
            checked: 0,
            hits: Vec::new(),
        }
    }

    fn record_hit(&mut self) {
        self.checked += 1;
        let support: Vec<usize> = self.pushed.iter().map(|&(c, _)| c).collect();
        let null_basis = null_space(self.ops, self.cols, &support);
        debug_assert!(!null_basis.is_empty());
        self.hits.push(Hit { support, null_basis });
    }
}

impl SupportSink for EliminationSink<'_> {
    fn push(&mut self, col: usize) -> bool {
        let ops = self.ops;
        self.scratch.copy_from_slice(&self.cols[col]);
        for p in &self.pivots {
            let c = self.scratch[p.row];
            if c != 0 {
                for (s, &pv) in self.scratch.iter_mut().zip(&p.vec) {
                    if pv != 0 {
                        *s = ops.sub(*s, ops.mul(c, pv));
                    }
                }
            }
        }
        match self.scratch.iter().position(|&v| v != 0) {
            None => {
                self.pushed.push((col, false));
                self.record_hit();
                true
            }
            Some(row) => {
                let inv = ops.inv(self.scratch[row]);
                let mut vec = self.pool.pop().unwrap_or_else(|| vec![0; self.r]);
                for (v, &s) in vec.iter_mut().zip(&self.scratch) {
                    *v = ops.mul(s, inv);
                }
                self.pivots.push(Pivot { vec, row });
                self.pushed.push((col, true));
                false
            }
        }
    }

    fn pop(&mut self) {
        let (_, was_pivot) = self.pushed.pop().expect("pop without push");
        if was_pivot {
            self.pool.push(self.pivots.pop().unwrap().vec);
        }
    }

    fn leaf(&mut self) {
        self.checked += 1;
    }
}

/// Fresh reduced-row-echelon null-space computation for the r x d submatrix
/// of `cols` selected by `support`. Only runs at hits, so clarity over speed.
pub(crate) fn null_space(ops: &SymbolOps, cols: &[Vec<u64>], support: &[usize]) -> Vec<Vec<u64>> {
    let d = support.len();
    let r = cols.first().map_or(0, |c| c.len());
    let mut m: Vec<Vec<u64>> = (0..r)
        .map(|row| support.iter().map(|&c| cols[c][row]).collect())
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; d];
    let mut rank = 0usize;
    for col in 0..d {
        let Some(prow) = (rank..r).find(|&row| m[row][col] != 0) else {
            continue;
        };
        m.swap(rank, prow);
        let inv = ops.inv(m[rank][col]);
        for j in 0..d {
            m[rank][j] = ops.mul(m[rank][j], inv);
        }
        for row in 0..r {
            if row != rank && m[row][col] != 0 {
                let f = m[row][col];
                for j in 0..d {
                    let s = ops.mul(f, m[rank][j]);
                    m[row][j] = ops.sub(m[row][j], s);
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == r {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..d {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; d];
        v[free] = ops.one();
        for col in 0..d {
            if let Some(prow) = pivot_of_col[col] {
                v[col] = ops.neg(m[prow][free]);
            }
        }
        basis.push(v);
    }
    basis
}
