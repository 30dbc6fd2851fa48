//! Order-preserving parallel map over a fixed-size worker pool.
//!
//! Results always come back in input order, so output produced from them is
//! identical for every worker count.

use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Environment variable that overrides the default worker count.
pub const WORKERS_ENV: &str = "LANDAU_RH_WORKERS";

pub fn default_worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub struct Workers {
    pool: rayon::ThreadPool,
    count: usize,
}

impl Workers {
    pub fn new(count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::invalid("workers", "worker count must be at least 1"));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build()
            .map_err(|e| Error::invalid("workers", e.to_string()))?;
        Ok(Workers { pool, count })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn map_range<R, F>(&self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        if self.count == 1 {
            return range.map(f).collect();
        }
        self.pool.install(|| range.into_par_iter().map(f).collect())
    }

    /// Like [`map_range`](Self::map_range); on failure returns the error of the
    /// lowest failing index.
    pub fn try_map_range<R, F>(&self, range: Range<usize>, f: F) -> Result<Vec<R>>
    where
        R: Send,
        F: Fn(usize) -> Result<R> + Sync + Send,
    {
        self.map_range(range, f).into_iter().collect()
    }

    pub fn map_slice<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        if self.count == 1 {
            return items.iter().map(f).collect();
        }
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}

impl Default for Workers {
    fn default() -> Self {
        Workers::new(default_worker_count()).expect("default worker pool")
    }
}
