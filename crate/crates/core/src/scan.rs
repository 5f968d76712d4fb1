//! Exhaustive scan of one subset level (all k-subsets of a ≤64-vertex
//! component) for the feasible mask with the best tie-break key.
//!
//! The rank space is cut into fixed-size chunks independent of the worker
//! count, and chunk results are merged with an associative, commutative
//! reduction. Any number of workers therefore yields the same winner and the
//! same examined-subset count.

use crate::combinations::{binomial, RankRange};

/// Ranks per work unit.
pub(crate) const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub(crate) struct LevelOutcome {
    /// Feasible mask with the largest key, if any.
    pub best: Option<u64>,
    pub examined: u64,
}

impl LevelOutcome {
    fn merge(self, other: Self, key: impl Fn(u64) -> u64) -> Self {
        let best = match (self.best, other.best) {
            (Some(a), Some(b)) => Some(if key(a) >= key(b) { a } else { b }),
            (a, b) => a.or(b),
        };
        Self {
            best,
            examined: self.examined + other.examined,
        }
    }
}

fn scan_chunk<F, K>(k: usize, start: u64, end: u64, feasible: &F, key: &K) -> LevelOutcome
where
    F: Fn(u64) -> bool,
    K: Fn(u64) -> u64,
{
    let mut out = LevelOutcome::default();
    for mask in RankRange::new(k, start, end) {
        out.examined += 1;
        if feasible(mask) && out.best.is_none_or(|b| key(mask) > key(b)) {
            out.best = Some(mask);
        }
    }
    out
}

/// How a level is scanned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Workers {
    Sequential,
    /// `None` uses the global rayon pool.
    Parallel(Option<usize>),
}

impl Workers {
    pub fn from_count(count: Option<usize>) -> Self {
        match count {
            Some(1) => Workers::Sequential,
            _ if !cfg!(feature = "parallel") => Workers::Sequential,
            other => Workers::Parallel(other),
        }
    }

    /// Effective number of threads this mode uses.
    pub fn threads(&self) -> usize {
        match *self {
            Workers::Sequential => 1,
            #[cfg(feature = "parallel")]
            Workers::Parallel(None) => rayon::current_num_threads(),
            #[cfg(not(feature = "parallel"))]
            Workers::Parallel(None) => 1,
            Workers::Parallel(Some(n)) => n,
        }
    }
}

/// Scans every k-subset of `0..n`.
pub(crate) fn scan_level<F, K>(n: usize, k: usize, workers: Workers, feasible: F, key: K) -> LevelOutcome
where
    F: Fn(u64) -> bool + Sync,
    K: Fn(u64) -> u64 + Sync,
{
    let total = binomial(n, k);
    let chunks = total.div_ceil(CHUNK);
    let run = |c: u64| {
        let end = ((c + 1) * CHUNK).min(total);
        scan_chunk(k, c * CHUNK, end, &feasible, &key)
    };

    #[cfg(feature = "parallel")]
    if let Workers::Parallel(_) = workers {
        use rayon::prelude::*;
        return (0..chunks)
            .into_par_iter()
            .map(run)
            .reduce(LevelOutcome::default, |a, b| a.merge(b, &key));
    }

    let _ = workers;
    (0..chunks)
        .map(run)
        .fold(LevelOutcome::default(), |a, b| a.merge(b, &key))
}

/// Runs `f` inside a pool of the requested size when one is asked for.
pub(crate) fn with_workers<R: Send>(workers: Workers, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Workers::Parallel(Some(n)) = workers {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            return pool.install(f);
        }
    }
    let _ = workers;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_parallel_agree() {
        let feasible = |m: u64| m & (1 << 3) == 0 && m.count_ones().is_multiple_of(2) || m & 1 == 1;
        let key = |m: u64| m.reverse_bits();
        for k in 0..=18 {
            let seq = scan_level(18, k, Workers::Sequential, feasible, key);
            for w in [None, Some(2), Some(3), Some(7)] {
                let par = with_workers(Workers::Parallel(w), || {
                    scan_level(18, k, Workers::Parallel(w), feasible, key)
                });
                assert_eq!(seq, par, "k={k} workers={w:?}");
            }
            assert_eq!(seq.examined, binomial(18, k));
        }
    }

    #[test]
    fn infeasible_level() {
        let out = scan_level(10, 4, Workers::Sequential, |_| false, |m| m);
        assert_eq!(out.best, None);
        assert_eq!(out.examined, 210);
    }
}
