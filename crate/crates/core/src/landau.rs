//! Landau's function `g(n)`, the largest order of a permutation of `n` points.
//!
//! `g(n)` is the maximum of `Π p^e` over sets of prime powers with distinct
//! bases and `Σ p^e <= n`. The table is filled by a knapsack-style dynamic
//! program over primes in the log domain,
//!
//! ```text
//! L(k, m) = max( L(k-1, m), max_{e>=1, p_k^e <= m} e·ln p_k + L(k-1, m - p_k^e) )
//! ```
//!
//! with `L(0, m) = 0`. When per-cell choices are retained, candidates closer
//! than the tie envelope are resolved by comparing the exact products, so the
//! reconstructed witness is the true maximizer and not an artifact of rounding.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::primes::PrimeTable;

#[derive(Clone, Debug)]
pub struct LandauConfig {
    /// Keep the (primes × budget) choice matrix when `max_n` is at most this.
    pub retain_choices_up_to: usize,
    /// Candidates whose log values differ by less than this count as ties.
    pub tie_envelope: f64,
    /// Cap on bytes for a choice matrix, including on-demand rebuilds.
    pub memory_budget: usize,
}

impl Default for LandauConfig {
    fn default() -> Self {
        LandauConfig {
            retain_choices_up_to: 100_000,
            tie_envelope: 1e-9,
            memory_budget: 1 << 30,
        }
    }
}

/// Prime-power witness `Π p^e` with strictly ascending bases.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Factorization {
    parts: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn new(mut parts: Vec<(u64, u32)>) -> Result<Self> {
        parts.sort_unstable();
        if parts.iter().any(|&(p, e)| p < 2 || e == 0) || parts.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::invalid(
                "factorization",
                "bases must be distinct primes with positive exponents",
            ));
        }
        Ok(Factorization { parts })
    }

    pub fn parts(&self) -> &[(u64, u32)] {
        &self.parts
    }

    /// `Σ p^e`, the least `n` whose symmetric group holds an element of this order.
    pub fn cost(&self) -> u64 {
        self.parts.iter().map(|&(p, e)| p.pow(e)).sum()
    }

    /// `Σ e·ln p`.
    pub fn value(&self) -> f64 {
        self.parts.iter().map(|&(p, e)| e as f64 * (p as f64).ln()).sum()
    }

    pub fn to_biguint(&self) -> BigUint {
        self.parts
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{p}^{e}")?;
        }
        Ok(())
    }
}

/// Largest prime the DP considers for budgets up to `max_n`.
pub fn prime_bound(max_n: usize) -> u64 {
    let n = max_n as f64;
    let b = if max_n >= 2 {
        (2.0 * (n * n.ln()).sqrt()).ceil() as u64
    } else {
        0
    };
    b.max(11)
}

#[derive(Clone, Debug)]
pub struct LandauTable {
    max_n: usize,
    primes: Vec<u64>,
    log_g: Vec<f64>,
    choices: Option<Vec<u8>>,
    cfg: LandauConfig,
}

pub fn build_landau_table(max_n: usize, table: &PrimeTable) -> Result<LandauTable> {
    build_landau_table_with(max_n, table, &LandauConfig::default())
}

pub fn build_landau_table_with(max_n: usize, table: &PrimeTable, cfg: &LandauConfig) -> Result<LandauTable> {
    if max_n == 0 {
        return Err(Error::Domain {
            func: "build_landau_table",
            value: 0.0,
            expected: "max_n >= 1",
        });
    }
    let bound = prime_bound(max_n).min(max_n as u64);
    if table.limit() < bound {
        return Err(Error::out_of_range(
            "landau table (insufficient sieve bound)",
            bound as f64,
            table.limit() as f64,
        ));
    }
    let primes: Vec<u64> = table.primes().take_while(|&p| p <= bound).collect();
    let retain = max_n <= cfg.retain_choices_up_to;
    if retain {
        check_choice_budget(primes.len(), max_n, cfg)?;
    }
    let (log_g, choices) = run_dp(max_n, &primes, retain, cfg.tie_envelope);
    Ok(LandauTable {
        max_n,
        primes,
        log_g,
        choices,
        cfg: cfg.clone(),
    })
}

fn check_choice_budget(rows: usize, max_n: usize, cfg: &LandauConfig) -> Result<()> {
    let bytes = rows as u128 * (max_n as u128 + 1);
    if bytes > cfg.memory_budget as u128 {
        return Err(Error::Resource {
            what: "landau choice matrix",
            requested: bytes,
            budget: cfg.memory_budget as u128,
        });
    }
    Ok(())
}

fn run_dp(max_n: usize, primes: &[u64], retain: bool, envelope: f64) -> (Vec<f64>, Option<Vec<u8>>) {
    let width = max_n + 1;
    let mut log = vec![0.0f64; width];
    let mut choices = retain.then(|| vec![0u8; primes.len() * width]);

    for (k, &p) in primes.iter().enumerate() {
        let lnp = (p as f64).ln();
        let mut powers = Vec::new();
        let mut pe = p;
        let mut e = 1u32;
        while pe as usize <= max_n {
            powers.push((e, pe as usize, e as f64 * lnp));
            match pe.checked_mul(p) {
                Some(v) => pe = v,
                None => break,
            }
            e += 1;
        }

        // Descending m reads row k-1 values at m - p^e before they are overwritten.
        for m in (p as usize..width).rev() {
            let mut best = log[m];
            let mut best_e = 0u32;
            for &(e, pe, v) in &powers {
                if pe > m {
                    break;
                }
                let cand = v + log[m - pe];
                let take = if cand > best + envelope {
                    true
                } else if cand >= best - envelope {
                    match choices.as_deref() {
                        Some(ch) => {
                            let a = exact_candidate(ch, primes, width, k, m, p, e);
                            let b = exact_candidate(ch, primes, width, k, m, p, best_e);
                            a > b
                        }
                        None => cand > best,
                    }
                } else {
                    false
                };
                if take {
                    best = cand;
                    best_e = e;
                }
            }
            log[m] = best;
            if let Some(ch) = choices.as_deref_mut() {
                ch[k * width + m] = best_e as u8;
            }
        }
    }
    (log, choices)
}

/// Exact value of taking `p^e` at row `k` with budget `m`, the rest from rows `< k`.
fn exact_candidate(ch: &[u8], primes: &[u64], width: usize, k: usize, m: usize, p: u64, e: u32) -> BigUint {
    let used = p.pow(e) as usize;
    let rest = reconstruct(ch, primes, width, k, m - used);
    rest.to_biguint() * BigUint::from(p).pow(e)
}

/// Witness for budget `m` using rows `0..rows`.
fn reconstruct(ch: &[u8], primes: &[u64], width: usize, rows: usize, mut m: usize) -> Factorization {
    let mut parts = Vec::new();
    for k in (0..rows).rev() {
        let e = ch[k * width + m] as u32;
        if e > 0 {
            let p = primes[k];
            parts.push((p, e));
            m -= p.pow(e) as usize;
        }
    }
    parts.reverse();
    Factorization { parts }
}

impl LandauTable {
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn retains_choices(&self) -> bool {
        self.choices.is_some()
    }

    /// Primes the DP ranged over.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `ln g(n)`; `n = 0` gives 0.
    pub fn log_g(&self, n: usize) -> Result<f64> {
        self.log_g
            .get(n)
            .copied()
            .ok_or_else(|| Error::out_of_range("landau table", n as f64, self.max_n as f64))
    }

    pub fn log_g_slice(&self) -> &[f64] {
        &self.log_g
    }

    /// Witness achieving `g(n)`. Tables built without retained choices rerun
    /// the DP for budget `n` alone, subject to the memory budget.
    pub fn witness(&self, n: usize) -> Result<Factorization> {
        if n > self.max_n {
            return Err(Error::out_of_range("landau table", n as f64, self.max_n as f64));
        }
        match &self.choices {
            Some(ch) => Ok(reconstruct(ch, &self.primes, self.max_n + 1, self.primes.len(), n)),
            None => {
                if n == 0 {
                    return Ok(Factorization::default());
                }
                let bound = prime_bound(n).min(n as u64);
                let primes: Vec<u64> = self.primes.iter().copied().take_while(|&p| p <= bound).collect();
                check_choice_budget(primes.len(), n, &self.cfg)?;
                let (_, ch) = run_dp(n, &primes, true, self.cfg.tie_envelope);
                let ch = ch.expect("choices were requested");
                Ok(reconstruct(&ch, &primes, n + 1, primes.len(), n))
            }
        }
    }
}

/// Exact `g(n)` from the table's witness.
pub fn landau_exact(n: usize, table: &LandauTable) -> Result<BigUint> {
    Ok(table.witness(n)?.to_biguint())
}

pub const BRUTEFORCE_MAX_N: usize = 45;

/// `g(n)` as the largest lcm over all partitions of `n`, for `1 <= n <= 45`.
///
/// `reach[b][r]` holds every lcm attained by a partition of `r` into parts of
/// size at most `b`, so the search never looks at prime factorizations.
pub fn landau_bruteforce(n: usize) -> Result<BigUint> {
    if !(1..=BRUTEFORCE_MAX_N).contains(&n) {
        return Err(Error::out_of_range(
            "landau_bruteforce",
            n as f64,
            BRUTEFORCE_MAX_N as f64,
        ));
    }
    let mut reach: Vec<Vec<BTreeSet<u64>>> = vec![vec![BTreeSet::new(); n + 1]; n + 1];
    for row in reach.iter_mut() {
        row[0].insert(1);
    }
    for b in 1..=n {
        for r in 1..=n {
            // Partitions of r with parts <= b either avoid b, or contain b once more.
            let mut set = reach[b - 1][r].clone();
            if b <= r {
                for &l in &reach[b][r - b] {
                    set.insert(lcm(l, b as u64));
                }
            }
            reach[b][r] = set;
        }
    }
    let best = reach[n][n].iter().copied().max().unwrap_or(1);
    Ok(BigUint::from(best))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `ln` of a big integer, accurate to f64 precision.
pub fn ln_biguint(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 64 {
        return (v.iter_u64_digits().next().unwrap_or(0) as f64).ln();
    }
    let shift = bits - 64;
    let top: BigUint = v >> shift;
    (top.iter_u64_digits().next().unwrap() as f64).ln() + shift as f64 * std::f64::consts::LN_2
}
