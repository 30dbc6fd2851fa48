//! Prime tables backed by a segmented, odd-only sieve of Eratosthenes.
//!
//! A [`PrimeTable`] is built once for a fixed bound and is read-only afterwards;
//! `p_n`, `π(x)` and the ascending enumeration of prime powers are all answered
//! from the stored list.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SieveConfig {
    /// Odd numbers per segment; one byte each.
    pub segment_len: usize,
    /// Upper bound on the bytes spent storing primes.
    pub memory_budget: usize,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            segment_len: 1 << 16,
            memory_budget: 1 << 30,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimePower {
    pub p: u64,
    pub k: u32,
    pub value: u64,
}

pub fn build_prime_table(limit: u64) -> Result<PrimeTable> {
    build_prime_table_with(limit, &SieveConfig::default())
}

pub fn build_prime_table_with(limit: u64, cfg: &SieveConfig) -> Result<PrimeTable> {
    if limit > u32::MAX as u64 {
        return Err(Error::out_of_range("sieve limit", limit as f64, u32::MAX as f64));
    }
    if cfg.segment_len == 0 {
        return Err(Error::invalid("sieve", "segment length must be positive"));
    }
    // π(x) < 1.26 x / ln x for x > 1.
    let estimate = if limit < 17 {
        8
    } else {
        (1.26 * limit as f64 / (limit as f64).ln()) as u128 + 1
    };
    let bytes = estimate * 4;
    if bytes > cfg.memory_budget as u128 {
        return Err(Error::Resource {
            what: "prime table",
            requested: bytes,
            budget: cfg.memory_budget as u128,
        });
    }

    let mut primes: Vec<u32> = Vec::with_capacity(estimate as usize);
    if limit >= 2 {
        primes.push(2);
    }
    if limit < 3 {
        return Ok(PrimeTable { limit, primes });
    }

    let root = isqrt(limit);
    let base = simple_odd_sieve(root);
    // next[i] is the next odd multiple of base[i] still to be crossed out.
    let mut next: Vec<u64> = base.iter().map(|&q| q * q).collect();
    let mut seg = vec![0u8; cfg.segment_len];
    let span = 2 * cfg.segment_len as u64;
    let mut low = 3u64;
    while low <= limit {
        let high = (low + span - 1).min(limit);
        let len = ((high - low) / 2 + 1) as usize;
        seg[..len].fill(1);
        for (q, nx) in base.iter().zip(next.iter_mut()) {
            if *nx > high {
                continue;
            }
            let step = 2 * q;
            let mut m = *nx;
            while m <= high {
                seg[((m - low) / 2) as usize] = 0;
                m += step;
            }
            *nx = m;
        }
        for (i, &flag) in seg[..len].iter().enumerate() {
            if flag != 0 {
                primes.push((low + 2 * i as u64) as u32);
            }
        }
        low += span;
    }
    Ok(PrimeTable { limit, primes })
}

fn simple_odd_sieve(limit: u64) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    // index i stands for 2i + 3
    let n = ((limit - 3) / 2 + 1) as usize;
    let mut flags = vec![true; n];
    let mut i = 0;
    loop {
        let p = 2 * i as u64 + 3;
        if p * p > limit {
            break;
        }
        if flags[i] {
            let mut j = ((p * p - 3) / 2) as usize;
            while j < n {
                flags[j] = false;
                j += p as usize;
            }
        }
        i += 1;
    }
    flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(i, _)| 2 * i as u64 + 3)
        .collect()
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn count(&self) -> usize {
        self.primes.len()
    }

    pub fn primes(&self) -> impl ExactSizeIterator<Item = u64> + '_ {
        self.primes.iter().map(|&p| p as u64)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.primes
    }

    /// The n-th prime, 1-based.
    pub fn nth_prime(&self, n: usize) -> Result<u64> {
        if n == 0 {
            return Err(Error::Domain {
                func: "nth_prime",
                value: 0.0,
                expected: "n >= 1",
            });
        }
        self.primes
            .get(n - 1)
            .map(|&p| p as u64)
            .ok_or_else(|| Error::out_of_range("nth_prime (sieve bound too small)", n as f64, self.count() as f64))
    }

    /// π(m) for an integer argument.
    pub fn prime_count_int(&self, m: u64) -> Result<usize> {
        if m > self.limit {
            return Err(Error::out_of_range("prime_count", m as f64, self.limit as f64));
        }
        Ok(self.primes.partition_point(|&p| p as u64 <= m))
    }

    /// π(x) for a real argument; counts primes `p <= floor(x)`.
    pub fn prime_count(&self, x: f64) -> Result<usize> {
        if x.is_nan() || x > self.limit as f64 {
            return Err(Error::out_of_range("prime_count", x, self.limit as f64));
        }
        if x < 2.0 {
            return Ok(0);
        }
        self.prime_count_int(x.floor() as u64)
    }

    /// All prime powers `p^k <= x` with `k >= 1`, ascending by value.
    pub fn prime_powers_upto(&self, x: f64) -> Result<Vec<PrimePower>> {
        if x.is_nan() || x > self.limit as f64 {
            return Err(Error::out_of_range("prime_powers_upto", x, self.limit as f64));
        }
        if x < 2.0 {
            return Ok(Vec::new());
        }
        let x = x.floor() as u64;
        let np = self.prime_count_int(x)?;
        // The k = 1 stream is the prime list itself; only p <= sqrt(x) contribute k >= 2.
        let mut higher = Vec::new();
        for &p in &self.primes[..np] {
            let p = p as u64;
            if p * p > x {
                break;
            }
            let mut v = p * p;
            let mut k = 2;
            loop {
                higher.push(PrimePower { p, k, value: v });
                match v.checked_mul(p) {
                    Some(w) if w <= x => {
                        v = w;
                        k += 1;
                    }
                    _ => break,
                }
            }
        }
        higher.sort_unstable_by_key(|pp| pp.value);

        let mut out = Vec::with_capacity(np + higher.len());
        let mut hi = higher.into_iter().peekable();
        for &p in &self.primes[..np] {
            let p = p as u64;
            while let Some(h) = hi.next_if(|h| h.value < p) {
                out.push(h);
            }
            out.push(PrimePower { p, k: 1, value: p });
        }
        out.extend(hi);
        Ok(out)
    }
}
