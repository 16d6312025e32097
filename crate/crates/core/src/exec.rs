//! Data-parallel execution with a sequential fallback.
//!
//! Work is always split into the same fixed-size chunks and the partial
//! results are combined in chunk order, so both modes produce bit-identical
//! values. Only the scheduling differs.

use std::ops::Range;

/// Chunk length used for long partial sums.
pub const DEFAULT_CHUNK: usize = 2048;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    #[cfg_attr(feature = "parallel", default)]
    Parallel,
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
}

impl Execution {
    /// `Parallel` when the crate was built with rayon, else `Sequential`.
    pub fn available_parallel() -> Execution {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }

    /// Applies `f` to every item; results come back in input order.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Splits `range` into consecutive chunks of `chunk` indices and maps each
    /// chunk with `f`. Partial results are returned in chunk order.
    pub fn map_chunks<U, F>(self, range: Range<u64>, chunk: usize, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(Range<u64>) -> U + Sync + Send,
    {
        let chunks = chunk_ranges(range, chunk.max(1) as u64);
        self.map(&chunks, |r| f(r.clone()))
    }
}

fn chunk_ranges(range: Range<u64>, chunk: u64) -> Vec<Range<u64>> {
    let mut out = Vec::new();
    let mut start = range.start;
    while start < range.end {
        let end = (start + chunk).min(range.end);
        out.push(start..end);
        start = end;
    }
    out
}
