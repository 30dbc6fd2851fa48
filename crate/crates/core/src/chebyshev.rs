//! Chebyshev's functions `θ` and `ψ`, the weighted prime-power sum
//! `Π₁(x) = Σ_{p^k<=x} p^k/k`, and the prime-number-theorem error envelope
//! `R(x) = sup_{2<=s<=x} |π(s) - Li(s)|`.
//!
//! All four are step-like in `x`, so they are stored as breakpoint arrays and
//! evaluated by binary search.

use crate::error::{Error, Result};
use crate::ext::Dd;
use crate::logintegral::{Li, LiConfig};
use crate::parallel::Workers;
use crate::primes::PrimeTable;

/// Right-continuous step function: zero left of the first breakpoint, then
/// `values[i]` on `[breaks[i], breaks[i+1])`.
#[derive(Clone, Debug, Default)]
pub struct StepFunction {
    breaks: Vec<u64>,
    values: Vec<f64>,
}

impl StepFunction {
    pub fn eval(&self, x: f64) -> f64 {
        let i = self.breaks.partition_point(|&b| b as f64 <= x);
        if i == 0 {
            0.0
        } else {
            self.values[i - 1]
        }
    }

    pub fn breakpoints(&self) -> &[u64] {
        &self.breaks
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

#[derive(Clone, Debug)]
pub struct ChebyshevTables {
    x_max: u64,
    theta: StepFunction,
    psi: StepFunction,
    pi1: StepFunction,
    r_env: REnvelope,
}

pub fn build_chebyshev_tables(
    x_max: u64,
    primes: &PrimeTable,
    li_cfg: &LiConfig,
    workers: &Workers,
) -> Result<ChebyshevTables> {
    if x_max > primes.limit() {
        return Err(Error::out_of_range(
            "chebyshev tables",
            x_max as f64,
            primes.limit() as f64,
        ));
    }
    let pps = primes.prime_powers_upto(x_max as f64)?;
    let mut theta = StepFunction::default();
    let mut psi = StepFunction::default();
    let mut pi1 = StepFunction::default();
    let (mut th, mut ps, mut p1) = (Dd::ZERO, Dd::ZERO, Dd::ZERO);
    for pp in &pps {
        let lnp = Dd::from(pp.p as f64).ln();
        ps += lnp;
        p1 += Dd::from_u64(pp.value) / pp.k as f64;
        psi.breaks.push(pp.value);
        psi.values.push(ps.to_f64());
        pi1.breaks.push(pp.value);
        pi1.values.push(p1.to_f64());
        if pp.k == 1 {
            th += lnp;
            theta.breaks.push(pp.value);
            theta.values.push(th.to_f64());
        }
    }
    let r_env = build_r_envelope(x_max, primes, li_cfg, workers)?;
    Ok(ChebyshevTables {
        x_max,
        theta,
        psi,
        pi1,
        r_env,
    })
}

impl ChebyshevTables {
    pub fn x_max(&self) -> u64 {
        self.x_max
    }

    fn check(&self, x: f64, what: &'static str) -> Result<()> {
        if x.is_nan() || x > self.x_max as f64 {
            return Err(Error::out_of_range(what, x, self.x_max as f64));
        }
        Ok(())
    }

    /// `θ(x) = Σ_{p<=x} ln p`.
    pub fn theta(&self, x: f64) -> Result<f64> {
        self.check(x, "theta")?;
        Ok(self.theta.eval(x))
    }

    /// `ψ(x) = Σ_{p^k<=x} ln p`.
    pub fn psi(&self, x: f64) -> Result<f64> {
        self.check(x, "psi")?;
        Ok(self.psi.eval(x))
    }

    /// `Π₁(x) = Σ_{p^k<=x} p^k / k`.
    pub fn pi1(&self, x: f64) -> Result<f64> {
        self.check(x, "pi1")?;
        Ok(self.pi1.eval(x))
    }

    pub fn r_envelope(&self) -> &REnvelope {
        &self.r_env
    }

    pub fn theta_steps(&self) -> &StepFunction {
        &self.theta
    }

    pub fn psi_steps(&self) -> &StepFunction {
        &self.psi
    }

    pub fn pi1_steps(&self) -> &StepFunction {
        &self.pi1
    }
}

/// Running supremum of `|π(s) - Li(s)|` over `2 <= s <= x`.
///
/// Between consecutive primes `π` is constant and `Li` increasing, so on each
/// gap `|π - Li|` peaks at an end: just after the jump at a prime `p`
/// (`π(p)` vs `Li(p)`) or just before the next one (`π(p) - 1` vs `Li(p)`).
/// The stored breakpoints hold the supremum up to and including each prime; a
/// query at `x` adds the one remaining candidate `|π(x) - Li(x)|`.
#[derive(Clone, Debug)]
pub struct REnvelope {
    x_max: u64,
    primes: Vec<u64>,
    sup: Vec<f64>,
    li_cfg: LiConfig,
}

pub fn build_r_envelope(x_max: u64, primes: &PrimeTable, li_cfg: &LiConfig, workers: &Workers) -> Result<REnvelope> {
    if x_max > primes.limit() {
        return Err(Error::out_of_range("R envelope", x_max as f64, primes.limit() as f64));
    }
    if x_max < 2 {
        return Err(Error::Domain {
            func: "build_r_envelope",
            value: x_max as f64,
            expected: "x_max >= 2",
        });
    }
    let ps: Vec<u64> = primes.primes().take_while(|&p| p <= x_max).collect();
    let lis = workers.try_map_range(0..ps.len(), |i| Ok(Li(ps[i] as f64, li_cfg)?.to_f64()))?;
    let mut sup = Vec::with_capacity(ps.len());
    let mut run = 0.0f64;
    for (i, &li_p) in lis.iter().enumerate() {
        let after = (i + 1) as f64;
        let before = i as f64;
        run = run.max((before - li_p).abs()).max((after - li_p).abs());
        sup.push(run);
    }
    Ok(REnvelope {
        x_max,
        primes: ps,
        sup,
        li_cfg: li_cfg.clone(),
    })
}

impl REnvelope {
    pub fn x_max(&self) -> u64 {
        self.x_max
    }

    /// `R(x)`; zero for `x < 2`, where the supremum is over an empty set.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if x.is_nan() || x > self.x_max as f64 {
            return Err(Error::out_of_range("R envelope", x, self.x_max as f64));
        }
        if x < 2.0 {
            return Ok(0.0);
        }
        let i = self.primes.partition_point(|&p| p as f64 <= x);
        let here = (i as f64 - Li(x, &self.li_cfg)?.to_f64()).abs();
        Ok(self.sup[i - 1].max(here))
    }

    /// Supremum through each prime, as `(p, R(p))`.
    pub fn at_primes(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.primes.iter().copied().zip(self.sup.iter().copied())
    }
}

/// Least-squares slope of `ln f(x)` against `ln x` on `points` log-spaced
/// samples in `[lo, hi]`.
pub fn log_slope_fit(f: impl Fn(f64) -> Result<f64>, lo: f64, hi: f64, points: usize) -> Result<f64> {
    if !(lo > 0.0 && hi > lo) || points < 2 {
        return Err(Error::invalid(
            "log_slope_fit",
            "needs 0 < lo < hi and at least two points",
        ));
    }
    let (a, b) = (lo.ln(), hi.ln());
    let mut xs = Vec::with_capacity(points);
    let mut ys = Vec::with_capacity(points);
    for i in 0..points {
        let t = a + (b - a) * i as f64 / (points - 1) as f64;
        let x = t.exp().clamp(lo, hi);
        let v = f(x)?;
        if !(v > 0.0) {
            return Err(Error::invalid(
                "log_slope_fit",
                format!("non-positive sample at x = {x}"),
            ));
        }
        xs.push(t);
        ys.push(v.ln());
    }
    let n = points as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

/// Empirical growth exponent of `R` over `[lo, x_max]`, which must span at
/// least two decades.
pub fn empirical_r_exponent(env: &REnvelope, lo: f64, points: usize) -> Result<f64> {
    let hi = env.x_max() as f64;
    if !(lo >= 2.0) || hi < 100.0 * lo {
        return Err(Error::invalid(
            "empirical_r_exponent",
            format!("range [{lo}, {hi}] spans less than two decades"),
        ));
    }
    log_slope_fit(|x| env.eval(x), lo, hi, points)
}
