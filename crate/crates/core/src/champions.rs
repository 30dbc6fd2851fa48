//! Superchampion numbers `N_ρ` and the quantities built on them.
//!
//! For `ρ > 0`, `N_ρ = Π p^{α_p}` where `α_p` is the largest `k` for which every
//! step up to `p^k` pays for itself at rate `ρ`: the first power costs `p` (it
//! adds `p` to `ℓ = Σ p^{α_p}`), a later step from `p^{k-1}` to `p^k` costs
//! `p^k - p^{k-1}`, and a step is taken when its cost is at most `ρ·ln p`.
//! Primes enter exactly when `p/ln p <= ρ`, that is `p <= x₁` with
//! `x₁/ln x₁ = ρ`, which gives `θ(x₁) <= ln N_ρ <= ψ(x₁)`.
//!
//! Each `N_ρ` is a value of Landau's function, `g(ℓ) = N_ρ`: it maximizes
//! `ln N - ρ·ℓ` over all prime-power products, so nothing with `Σ p^e <= ℓ`
//! can beat it.

use std::f64::consts::E;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::chebyshev::ChebyshevTables;
use crate::error::{Error, Result};
use crate::ext::Dd;
use crate::landau::{landau_exact, Factorization, LandauTable};
use crate::logintegral::{Li, LiConfig};
use crate::primes::PrimeTable;

/// Cost of raising the exponent of `p` from `k - 1` to `k`.
fn step_cost(p: u64, k: u32) -> Option<u64> {
    if k == 1 {
        return Some(p);
    }
    let hi = p.checked_pow(k)?;
    Some(hi - hi / p)
}

/// `α_p(ρ)`: the largest `k` with every step cost up to `k` at most `ρ·ln p`.
pub fn champion_exponent(p: u64, rho: f64) -> u32 {
    if !(rho > 0.0) || p < 2 {
        return 0;
    }
    let budget = rho * (p as f64).ln();
    let mut k = 0;
    while let Some(c) = step_cost(p, k + 1) {
        if c as f64 > budget {
            break;
        }
        k += 1;
    }
    k
}

/// Root `x >= e` of `x / ln x = ρ`, for `ρ >= e`.
///
/// Safeguarded Newton on `f(x) = x - ρ·ln x`, which is increasing and convex
/// on `[ρ, ∞)` where the root lies, bracketed by `[max(e, ρ), max(e², ρ·ln²(ρ+e))]`.
pub fn x1_of_rho(rho: f64) -> Result<f64> {
    if !(rho >= E) || !rho.is_finite() {
        return Err(Error::Domain {
            func: "x1_of_rho",
            value: rho,
            expected: "e <= rho < inf",
        });
    }
    if rho == E {
        return Ok(E);
    }
    let f = |x: f64| x - rho * x.ln();
    let mut lo = rho.max(E);
    let mut hi = (E * E).max(rho * (rho + E).ln().powi(2));
    while f(hi) < 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    let mut x = hi;
    for _ in 0..200 {
        let fx = f(x);
        if fx > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let mut next = x - fx / (1.0 - rho / x);
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-15 * x || hi - lo <= 1e-15 * hi {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::NonConvergence {
        func: "x1_of_rho",
        iterations: 200,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Champion {
    pub rho: f64,
    /// `α_p` for the first `exponents.len()` primes, all at least 1.
    #[serde(skip)]
    exponents: Vec<u8>,
    #[serde(skip)]
    primes: std::sync::Arc<[u64]>,
    pub log_n: f64,
    pub ell: u64,
    pub x1: f64,
}

impl Champion {
    pub fn num_primes(&self) -> usize {
        self.exponents.len()
    }

    /// `(p, α_p)` over the included primes.
    pub fn exponents(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.primes.iter().zip(&self.exponents).map(|(&p, &a)| (p, a as u32))
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        match self.primes[..self.exponents.len()].binary_search(&p) {
            Ok(i) => self.exponents[i] as u32,
            Err(_) => 0,
        }
    }

    pub fn factorization(&self) -> Factorization {
        Factorization::new(self.exponents().collect()).expect("champion exponents are valid")
    }

    pub fn to_biguint(&self) -> BigUint {
        self.exponents()
            .fold(BigUint::one(), |acc, (p, a)| acc * BigUint::from(p).pow(a))
    }

    /// `θ(x₁) <= ln N <= ψ(x₁)`. `x₁` is known to about 1e-15 relative, so
    /// the two sides are read just below and just above it; this only matters
    /// when `x₁` is itself a prime power.
    pub fn sandwich(&self, cheb: &ChebyshevTables) -> Result<Sandwich> {
        let slack = 1e-12;
        let theta = cheb.theta(self.x1 * (1.0 - slack))?;
        let psi = cheb.psi(self.x1 * (1.0 + slack))?;
        let tol = 1e-12 * self.log_n.max(1.0);
        Ok(Sandwich {
            theta,
            psi,
            holds: theta <= self.log_n + tol && self.log_n <= psi + tol,
        })
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Sandwich {
    pub theta: f64,
    pub psi: f64,
    pub holds: bool,
}

/// Bytes allowed for the exponent vectors of a whole sequence.
pub const SEQUENCE_MEMORY_BUDGET: u128 = 1 << 30;

/// Champions at every breakpoint `ρ = cost/ln p <= rho_max`, ascending in `ρ`.
///
/// Breakpoints that coincide (`2/ln 2` is both the first and the second step
/// of `p = 2`) yield a single champion carrying both steps.
pub fn champion_sequence(rho_max: f64, primes: &PrimeTable) -> Result<Vec<Champion>> {
    if !(rho_max >= E) || !rho_max.is_finite() {
        return Err(Error::Domain {
            func: "champion_sequence",
            value: rho_max,
            expected: "e <= rho_max < inf",
        });
    }
    let x_top = x1_of_rho(rho_max)?;
    if (primes.limit() as f64) < x_top {
        return Err(Error::out_of_range(
            "champion_sequence (sieve bound)",
            x_top,
            primes.limit() as f64,
        ));
    }
    let plist: Vec<u64> = primes.primes().take_while(|&p| p as f64 <= x_top).collect();

    let mut events: Vec<(f64, usize, u32)> = Vec::new();
    for (i, &p) in plist.iter().enumerate() {
        let lnp = (p as f64).ln();
        let mut k = 1;
        while let Some(c) = step_cost(p, k) {
            let r = c as f64 / lnp;
            if r > rho_max {
                break;
            }
            events.push((r, i, k));
            k += 1;
        }
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    let mut distinct = events.len();
    for w in events.windows(2) {
        if w[0].0 == w[1].0 {
            distinct -= 1;
        }
    }
    let need = distinct as u128 * plist.len() as u128;
    if need > SEQUENCE_MEMORY_BUDGET {
        return Err(Error::Resource {
            what: "champion_sequence exponent vectors",
            requested: need,
            budget: SEQUENCE_MEMORY_BUDGET,
        });
    }

    let shared: std::sync::Arc<[u64]> = plist.into();
    let mut exps: Vec<u8> = Vec::new();
    let mut log_n = Dd::ZERO;
    let mut ell: u64 = 0;
    let mut out: Vec<Champion> = Vec::with_capacity(distinct);
    let mut i = 0;
    while i < events.len() {
        let rho = events[i].0;
        while i < events.len() && events[i].0 == rho {
            let (_, idx, k) = events[i];
            if idx >= exps.len() {
                // Primes enter in increasing order since p/ln p increases for p >= 3,
                // and 3/ln 3 < 2/ln 2 is the only inversion; pad with zeros meanwhile.
                exps.resize(idx + 1, 0);
            }
            exps[idx] = k as u8;
            let p = shared[idx];
            log_n += Dd::from(p as f64).ln();
            ell = ell
                .checked_add(step_cost(p, k).expect("cost fit when the event was created"))
                .ok_or(Error::Resource {
                    what: "champion ell",
                    requested: u128::MAX,
                    budget: u64::MAX as u128,
                })?;
            i += 1;
        }
        if exps.contains(&0) {
            // Only the ρ = 3/ln 3 champion, N = 3, has a gap (at p = 2).
            out.push(champion_with_gaps(rho, &exps, &shared, log_n.to_f64(), ell)?);
            continue;
        }
        out.push(Champion {
            rho,
            exponents: exps.clone(),
            primes: shared.clone(),
            log_n: log_n.to_f64(),
            ell,
            x1: x1_of_rho(rho)?,
        });
    }
    Ok(out)
}

/// Every champion with `ell <= ell_max`, followed by the first one beyond it.
pub fn champion_sequence_to_ell(ell_max: u64, primes: &PrimeTable) -> Result<Vec<Champion>> {
    let mut rho_max = 16.0;
    loop {
        let mut seq = champion_sequence(rho_max, primes)?;
        if let Some(k) = seq.iter().position(|c| c.ell > ell_max) {
            seq.truncate(k + 1);
            return Ok(seq);
        }
        rho_max *= 2.0;
    }
}

fn champion_with_gaps(rho: f64, exps: &[u8], primes: &[u64], log_n: f64, ell: u64) -> Result<Champion> {
    let (ps, es): (Vec<u64>, Vec<u8>) = primes
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(&p, &e)| (p, e))
        .unzip();
    Ok(Champion {
        rho,
        exponents: es,
        primes: ps.into(),
        log_n,
        ell,
        x1: x1_of_rho(rho)?,
    })
}

/// The champion with the largest `N <= g(n)`.
///
/// Log values within the table's envelope of `ln g(n)` are settled by comparing
/// `N` with the exact `g(n)`.
pub fn champion_for_n<'a>(n: usize, seq: &'a [Champion], lt: &LandauTable) -> Result<&'a Champion> {
    let log_g = lt.log_g(n)?;
    let env = 1e-9 * log_g.max(1.0);
    let last = seq
        .last()
        .ok_or_else(|| Error::invalid("champion_for_n", "empty champion sequence"))?;
    if last.log_n <= log_g + env {
        return Err(Error::invalid(
            "champion_for_n",
            format!(
                "sequence ends at ln N = {} and does not pass ln g({n}) = {log_g}",
                last.log_n
            ),
        ));
    }
    let mut i = seq.partition_point(|c| c.log_n <= log_g + env);
    while i > 0 && (seq[i - 1].log_n - log_g).abs() <= env {
        if seq[i - 1].to_biguint() <= landau_exact(n, lt)? {
            break;
        }
        i -= 1;
    }
    if i == 0 {
        return Err(Error::invalid(
            "champion_for_n",
            format!("no champion at or below g({n})"),
        ));
    }
    Ok(&seq[i - 1])
}

/// Largest observed `(ln g(n) - ln N_ρ(n)) / ln x₁` over `n_from..=n_to`.
#[derive(Clone, Debug, Serialize)]
pub struct GapConstant {
    pub n_from: usize,
    pub n_to: usize,
    pub max_ratio: f64,
    pub argmax_n: usize,
    pub argmax_rho: f64,
}

pub fn gap_constant(n_from: usize, n_to: usize, seq: &[Champion], lt: &LandauTable) -> Result<GapConstant> {
    if n_from > n_to {
        return Err(Error::invalid("gap_constant", "empty range"));
    }
    let mut best = GapConstant {
        n_from,
        n_to,
        max_ratio: f64::NEG_INFINITY,
        argmax_n: n_from,
        argmax_rho: f64::NAN,
    };
    for n in n_from..=n_to {
        let c = champion_for_n(n, seq, lt)?;
        let ratio = (lt.log_g(n)? - c.log_n).max(0.0) / c.x1.ln();
        if ratio > best.max_ratio {
            best.max_ratio = ratio;
            best.argmax_n = n;
            best.argmax_rho = c.rho;
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct WitnessPoint {
    pub x1: f64,
    /// `Li(x₁²) - Π₁(x₁) + (x₁/ln x₁)(ψ(x₁) - x₁)`.
    pub w: f64,
    /// `Li(ψ(x₁)²) - Π₁(x₁)`.
    pub li_psi_sq_minus_pi1: f64,
}

/// `W(x₁) = Li(x₁²) - Π₁(x₁) + (x₁/ln x₁)(ψ(x₁) - x₁)` for `3 <= x₁ <= x_max`.
pub fn witness_w(x1: f64, t: &ChebyshevTables, cfg: &LiConfig) -> Result<f64> {
    Ok(witness_point(x1, t, cfg)?.w)
}

pub fn witness_point(x1: f64, t: &ChebyshevTables, cfg: &LiConfig) -> Result<WitnessPoint> {
    if !(x1 >= 3.0) || x1 > t.x_max() as f64 {
        return Err(Error::out_of_range("witness_w", x1, t.x_max() as f64));
    }
    let psi = t.psi(x1)?;
    let pi1 = t.pi1(x1)?;
    let li_sq = Li(Dd::from(x1).sqr(), cfg)?.to_f64();
    let w = li_sq - pi1 + x1 / x1.ln() * (psi - x1);
    let li_psi = Li(Dd::from(psi).sqr(), cfg)?.to_f64();
    Ok(WitnessPoint {
        x1,
        w,
        li_psi_sq_minus_pi1: li_psi - pi1,
    })
}

/// `count` points log-spaced over `[lo, hi]`, endpoints included.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            (0..count)
                .map(|i| {
                    if i == 0 {
                        lo
                    } else if i + 1 == count {
                        hi
                    } else {
                        (a + (b - a) * i as f64 / (count - 1) as f64).exp()
                    }
                })
                .collect()
        }
    }
}
