//! Row-by-row checks of the inequalities linking `g(n)`, `p_n` and `li⁻¹(n)`.
//!
//! With `a_n = (sqrt(li⁻¹(n)) - ln g(n)) / (n ln n)^{1/4}`:
//!
//! * `ln² g(n) < p_n` (equivalently `π(ln² g(n)) < n`),
//! * `a_n >= (2 - √2)/3 - c - 0.43·ln ln n / ln n`,
//! * `|li⁻¹(n) - p_n| <= (√2/8π)·ln²(2n ln n)·sqrt(n ln n)` for `n >= 2657`,
//! * `sqrt(li⁻¹(n)) - sqrt(p_n) < (√2/16π)·ln²(2n ln n)` for `n >= 2657`,
//! * `p_n > n ln n`, `li⁻¹(n) > n ln n` for `n > 40`, and
//!   `p_n, li⁻¹(n) < 2n ln n` for `n >= 3`,
//! * `li⁻¹(n) <= p_n`, i.e. `π(p_n) <= li(p_n)`.
//!
//! Comparisons whose sides agree to within the guard band are recomputed in
//! double-double, including `ln g(n)` from its exact witness.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext::Dd;
use crate::landau::{build_landau_table_with, LandauConfig, LandauTable};
use crate::logintegral::{li, li_inverse, LiConfig};
use crate::parallel::Workers;
use crate::primes::{build_prime_table_with, PrimeTable, SieveConfig};
use crate::zeros::CSum;

/// Relative width inside which a comparison is recomputed at higher precision.
pub const GUARD_BAND: f64 = 1e-6;
/// First `n` covered by the Schoenfeld-type gap bound.
pub const GAP_LEMMA_FROM: usize = 2657;

/// `(2 - √2)/3`.
pub fn dn_constant() -> f64 {
    (2.0 - std::f64::consts::SQRT_2) / 3.0
}

/// Immutable inputs shared by every row.
#[derive(Clone, Copy)]
pub struct Deps<'a> {
    pub primes: &'a PrimeTable,
    pub landau: &'a LandauTable,
    pub li: &'a LiConfig,
    /// Needed only for the `a_n` versus `d_n` comparison.
    pub c: Option<&'a CSum>,
    /// Fault injection: the row for this `n` reports ln² g(n) < p_n as failed.
    pub fault: Option<usize>,
}

/// Tables sized for rows `1..=to_n`.
pub struct Tables {
    pub primes: PrimeTable,
    pub landau: LandauTable,
}

/// Upper bound for the `n`-th prime (Rosser–Schoenfeld, `n >= 6`).
pub fn nth_prime_upper(n: usize) -> u64 {
    if n < 6 {
        return 13;
    }
    let x = n as f64;
    (x * (x.ln() + x.ln().ln())).ceil() as u64
}

/// Prime table through `p_{to_n + 1}` and Landau table through `to_n`.
pub fn prepare_tables(to_n: usize, landau_cfg: &LandauConfig, sieve: &SieveConfig) -> Result<Tables> {
    if to_n == 0 {
        return Err(Error::invalid("prepare_tables", "to_n must be >= 1"));
    }
    let limit = nth_prime_upper(to_n + 1).max(crate::landau::prime_bound(to_n));
    let primes = build_prime_table_with(limit, sieve)?;
    let landau = build_landau_table_with(to_n, &primes, landau_cfg)?;
    Ok(Tables { primes, landau })
}

impl Tables {
    pub fn deps<'a>(&'a self, li: &'a LiConfig, c: Option<&'a CSum>) -> Deps<'a> {
        Deps {
            primes: &self.primes,
            landau: &self.landau,
            li,
            c,
            fault: None,
        }
    }
}

fn n_ln_n(n: usize) -> f64 {
    let x = n as f64;
    x * x.ln()
}

/// `ln g(n)` recomputed in double-double from its witness.
fn log_g_dd(n: usize, deps: &Deps) -> Result<Dd> {
    let w = deps.landau.witness(n)?;
    Ok(w.parts()
        .iter()
        .fold(Dd::ZERO, |acc, &(p, e)| acc + Dd::from(p as f64).ln() * e as f64))
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= GUARD_BAND * a.abs().max(b.abs()).max(1e-300)
}

/// `a_n = (sqrt(li⁻¹(n)) - ln g(n)) / (n ln n)^{1/4}` for `n >= 2`.
pub fn a_n(n: usize, deps: &Deps) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain {
            func: "a_n",
            value: n as f64,
            expected: "n >= 2",
        });
    }
    let li_inv = li_inverse(n as f64, deps.li)?;
    let log_g = deps.landau.log_g(n)?;
    Ok(a_n_from(n, li_inv, log_g))
}

fn a_n_from(n: usize, li_inv: Dd, log_g: f64) -> f64 {
    (li_inv.sqrt().to_f64() - log_g) / n_ln_n(n).powf(0.25)
}

/// `(2 - √2)/3 - c - 0.43·ln ln n / ln n`.
pub fn dn_lower_bound(n: usize, c: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain {
            func: "dn_lower_bound",
            value: n as f64,
            expected: "n >= 2",
        });
    }
    let l = (n as f64).ln();
    Ok(dn_constant() - c - 0.43 * l.ln() / l)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct LogSqBound {
    /// `ln² g(n) < p_n`.
    pub holds: bool,
    /// `p_n - ln² g(n)`.
    pub margin: f64,
    /// `π(ln² g(n))`.
    pub pi_of_log_sq: usize,
    /// `π(ln² g(n)) <= n`.
    pub pi_form: bool,
    pub reevaluated: bool,
}

/// `ln² g(n) < p_n`; the table must reach `p_{n+1}` so the `π` form is decided.
pub fn check_log_sq_bound(n: usize, deps: &Deps) -> Result<LogSqBound> {
    if n == 0 {
        return Err(Error::Domain {
            func: "check_log_sq_bound",
            value: 0.0,
            expected: "n >= 1",
        });
    }
    let p_n = deps.primes.nth_prime(n)?;
    let log_g = deps.landau.log_g(n)?;
    let sq = log_g * log_g;
    let mut margin = p_n as f64 - sq;
    let mut holds = margin > 0.0;
    let mut reevaluated = false;
    if near(p_n as f64, sq) {
        let exact = log_g_dd(n, deps)?.sqr();
        let m = Dd::from_u64(p_n) - exact;
        margin = m.to_f64();
        holds = m > 0.0;
        reevaluated = true;
    }
    let pi = deps.primes.prime_count(sq.min(deps.primes.limit() as f64))?;
    Ok(LogSqBound {
        holds,
        margin,
        pi_of_log_sq: pi,
        pi_form: sq <= deps.primes.limit() as f64 && pi <= n,
        reevaluated,
    })
}

/// `(√2/8π)·ln²(2n ln n)·sqrt(n ln n)`.
pub fn gap_lemma_rhs(n: usize) -> f64 {
    let nl = n_ln_n(n);
    std::f64::consts::SQRT_2 / (8.0 * PI) * (2.0 * nl).ln().powi(2) * nl.sqrt()
}

/// `(√2/16π)·ln²(2n ln n)`.
pub fn sqrt_gap_rhs(n: usize) -> f64 {
    std::f64::consts::SQRT_2 / (16.0 * PI) * (2.0 * n_ln_n(n)).ln().powi(2)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Comparison {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

fn gap_pre(n: usize, func: &'static str) -> Result<()> {
    if n < GAP_LEMMA_FROM {
        return Err(Error::Domain {
            func,
            value: n as f64,
            expected: "n >= 2657",
        });
    }
    Ok(())
}

/// `|li⁻¹(n) - p_n| <= (√2/8π)·ln²(2n ln n)·sqrt(n ln n)`.
pub fn check_gap_lemma(n: usize, deps: &Deps) -> Result<Comparison> {
    gap_pre(n, "check_gap_lemma")?;
    let li_inv = li_inverse(n as f64, deps.li)?;
    let p_n = deps.primes.nth_prime(n)?;
    Ok(gap_lemma_from(n, li_inv, p_n))
}

fn gap_lemma_from(n: usize, li_inv: Dd, p_n: u64) -> Comparison {
    let lhs = (li_inv - Dd::from_u64(p_n)).abs().to_f64();
    let rhs = gap_lemma_rhs(n);
    Comparison {
        lhs,
        rhs,
        holds: lhs <= rhs,
    }
}

/// `sqrt(li⁻¹(n)) - sqrt(p_n) < (√2/16π)·ln²(2n ln n)`.
pub fn check_sqrt_gap(n: usize, deps: &Deps) -> Result<Comparison> {
    gap_pre(n, "check_sqrt_gap")?;
    let li_inv = li_inverse(n as f64, deps.li)?;
    let p_n = deps.primes.nth_prime(n)?;
    Ok(sqrt_gap_from(n, li_inv, p_n))
}

fn sqrt_gap_from(n: usize, li_inv: Dd, p_n: u64) -> Comparison {
    let lhs = (li_inv.sqrt() - Dd::from_u64(p_n).sqrt()).to_f64();
    let rhs = sqrt_gap_rhs(n);
    Comparison {
        lhs,
        rhs,
        holds: lhs < rhs,
    }
}

/// The four elementary bounds; `None` outside the range each is claimed for.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CrudeRosser {
    /// `p_n > n ln n`, all `n >= 1`.
    pub rosser: bool,
    /// `li⁻¹(n) > n ln n`, `n > 40`.
    pub li_inv_lower: Option<bool>,
    /// `p_n < 2n ln n`, `n >= 3`.
    pub p_upper: Option<bool>,
    /// `li⁻¹(n) < 2n ln n`, `n >= 3`.
    pub li_inv_upper: Option<bool>,
}

pub fn check_crude_and_rosser(n: usize, deps: &Deps) -> Result<CrudeRosser> {
    if n == 0 {
        return Err(Error::Domain {
            func: "check_crude_and_rosser",
            value: 0.0,
            expected: "n >= 1",
        });
    }
    let p_n = deps.primes.nth_prime(n)?;
    let li_inv = li_inverse(n as f64, deps.li)?;
    Ok(crude_from(n, li_inv, p_n))
}

fn crude_from(n: usize, li_inv: Dd, p_n: u64) -> CrudeRosser {
    let nl = n_ln_n(n);
    CrudeRosser {
        rosser: p_n as f64 > nl,
        li_inv_lower: (n > 40).then_some(li_inv > nl),
        p_upper: (n >= 3).then_some((p_n as f64) < 2.0 * nl),
        li_inv_upper: (n >= 3).then_some(li_inv < 2.0 * nl),
    }
}

/// Smallest `n0 <= n_max` with `li⁻¹(n) > n ln n` for every `n0 <= n <= n_max`.
pub fn li_inverse_lower_crossover(n_max: usize, cfg: &LiConfig) -> Result<usize> {
    let mut first = n_max + 1;
    for n in (1..=n_max).rev() {
        if li_inverse(n as f64, cfg)? > n_ln_n(n) {
            first = n;
        } else {
            break;
        }
    }
    Ok(first)
}

/// First integer `m` in `[2, m_max]` with `π(m) > li(m)`, if any.
pub fn check_pi_le_li(m_max: u64, primes: &PrimeTable, cfg: &LiConfig, workers: &Workers) -> Result<Option<u64>> {
    if m_max > primes.limit() {
        return Err(Error::out_of_range(
            "check_pi_le_li",
            m_max as f64,
            primes.limit() as f64,
        ));
    }
    let count = |m: u64| primes.prime_count_int(m).map(|c| c as u64);
    let jumps: Vec<u64> = primes.primes().take_while(|&p| p <= m_max).collect();
    check_counting_le_li(m_max, count, &jumps, cfg, workers)
}

/// First integer `m` in `[2, m_max]` with `count(m) > li(m)`.
///
/// `count` must be a non-decreasing step function of `m` that only changes at
/// the ascending points `jumps`. Since `li` increases, it suffices to compare at
/// each jump inside `[2, m_max]`, plus `m = 2`.
pub fn check_counting_le_li<F>(
    m_max: u64,
    count: F,
    jumps: &[u64],
    cfg: &LiConfig,
    workers: &Workers,
) -> Result<Option<u64>>
where
    F: Fn(u64) -> Result<u64> + Sync,
{
    if m_max < 2 {
        return Ok(None);
    }
    let mut pts: Vec<u64> = std::iter::once(2)
        .chain(jumps.iter().copied().filter(|&m| (2..=m_max).contains(&m)))
        .collect();
    pts.dedup();
    let bad = workers.try_map_range(0..pts.len(), |i| {
        let m = pts[i];
        let c = count(m)?;
        Ok(Dd::from_u64(c) > li(m as f64, cfg)?)
    })?;
    Ok(bad.iter().position(|&b| b).map(|i| pts[i]))
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ThresholdPoint {
    pub n: f64,
    pub f1: f64,
    pub f2: f64,
}

/// Largest grid point where a claim fails and the next grid point, from which
/// it holds through the end of the grid; `crossover` is the sign change located
/// by bisection between them.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Bracket {
    pub last_fail: f64,
    pub holds_from: f64,
    pub crossover: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThresholdReport {
    pub points: Vec<ThresholdPoint>,
    pub f1_bracket: Option<Bracket>,
    pub f2_bracket: Option<Bracket>,
    /// Both claims hold at `n = 10^10 + 1` and at every grid point past it.
    pub holds_past_1e10: bool,
}

/// `0.14 - 0.43·ln ln n / ln n - 0.08`.
pub fn threshold_f1(n: f64) -> f64 {
    let l = n.ln();
    0.14 - 0.43 * l.ln() / l - 0.08
}

/// `0.08·(n ln n)^{1/4} - (√2/16π)·ln²(2n ln n)`.
pub fn threshold_f2(n: f64) -> f64 {
    let nl = n * n.ln();
    0.08 * nl.powf(0.25) - std::f64::consts::SQRT_2 / (16.0 * PI) * (2.0 * nl).ln().powi(2)
}

/// Ten points per decade over `[10^2, 10^18]`, plus `10^10 + 1`.
pub fn threshold_grid() -> Vec<f64> {
    let mut g: Vec<f64> = (0..=160).map(|i| 10f64.powf(2.0 + i as f64 / 10.0)).collect();
    g.push(1e10 + 1.0);
    g.sort_by(f64::total_cmp);
    g
}

pub fn threshold_scan() -> ThresholdReport {
    let grid = threshold_grid();
    let points: Vec<ThresholdPoint> = grid
        .iter()
        .map(|&n| ThresholdPoint {
            n,
            f1: threshold_f1(n),
            f2: threshold_f2(n),
        })
        .collect();
    let bracket = |f: fn(f64) -> f64, vals: Vec<f64>| -> Option<Bracket> {
        let last = vals.iter().rposition(|&v| v <= 0.0)?;
        if last + 1 >= grid.len() {
            return None;
        }
        let (mut lo, mut hi) = (grid[last].ln(), grid[last + 1].ln());
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid.exp()) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(Bracket {
            last_fail: grid[last],
            holds_from: grid[last + 1],
            crossover: hi.exp(),
        })
    };
    let f1_bracket = bracket(threshold_f1, points.iter().map(|p| p.f1).collect());
    let f2_bracket = bracket(threshold_f2, points.iter().map(|p| p.f2).collect());
    let holds_past_1e10 = points
        .iter()
        .filter(|p| p.n >= 1e10 + 1.0)
        .all(|p| p.f1 > 0.0 && p.f2 > 0.0);
    ThresholdReport {
        points,
        f1_bracket,
        f2_bracket,
        holds_past_1e10,
    }
}

/// One `n` of a sweep. `None` marks a check that does not apply at this `n`.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationRow {
    pub n: usize,
    pub p_n: u64,
    pub li_inv: f64,
    pub log_g: f64,
    pub a_n: Option<f64>,
    /// Bound at the midpoint of the `c` interval.
    pub dn_bound: Option<f64>,
    pub thm1_margin: f64,
    pub thm1_ok: bool,
    pub thm1_pi_form_ok: bool,
    /// The margin's sign matches `π(ln² g(n)) < n`.
    pub thm1_pi_agrees: bool,
    pub a_pos_ok: Option<bool>,
    /// `a_n >= d_n` with `c` at the upper end of its interval.
    pub dn_ok: Option<bool>,
    pub gap_ok: Option<bool>,
    pub sqrt_gap_ok: Option<bool>,
    pub crude_ok: Option<bool>,
    pub rosser_ok: bool,
    /// `li⁻¹(n) <= p_n`.
    pub li_inv_le_p_ok: bool,
    /// `sqrt(p_n) - ln g = (sqrt(li⁻¹) - ln g) - (sqrt(li⁻¹) - sqrt(p_n))` to rounding.
    pub decomposition_ok: bool,
    pub reevaluated: bool,
}

impl VerificationRow {
    /// Every applicable check, by name.
    pub fn checks(&self) -> [(&'static str, Option<bool>); 11] {
        [
            ("thm1", Some(self.thm1_ok)),
            ("thm1_pi_form", Some(self.thm1_pi_form_ok)),
            ("thm1_pi_agrees", Some(self.thm1_pi_agrees)),
            ("a_pos", self.a_pos_ok),
            ("dn_bound", self.dn_ok),
            ("gap", self.gap_ok),
            ("sqrt_gap", self.sqrt_gap_ok),
            ("crude", self.crude_ok),
            ("rosser", Some(self.rosser_ok)),
            ("li_inv_le_p", Some(self.li_inv_le_p_ok)),
            ("decomposition", Some(self.decomposition_ok)),
        ]
    }

    pub fn failed(&self) -> bool {
        self.checks().iter().any(|(_, v)| *v == Some(false))
    }
}

pub fn compute_row(n: usize, deps: &Deps) -> Result<VerificationRow> {
    let t1 = check_log_sq_bound(n, deps)?;
    let p_n = deps.primes.nth_prime(n)?;
    let log_g = deps.landau.log_g(n)?;
    let li_inv = li_inverse(n as f64, deps.li)?;
    let mut reevaluated = t1.reevaluated;

    let (a, a_pos, dn, dn_ok) = if n >= 2 {
        let mut a = a_n_from(n, li_inv, log_g);
        let dn_hi = deps.c.map(|c| dn_lower_bound(n, c.hi())).transpose()?;
        let needs_exact = a.abs() <= GUARD_BAND || dn_hi.is_some_and(|d| near(a, d));
        if needs_exact {
            let exact = (li_inv.sqrt() - log_g_dd(n, deps)?) / n_ln_n(n).powf(0.25);
            a = exact.to_f64();
            reevaluated = true;
        }
        let dn_mid = deps.c.map(|c| dn_lower_bound(n, c.midpoint())).transpose()?;
        (Some(a), Some(a > 0.0), dn_mid, dn_hi.map(|d| a >= d))
    } else {
        (None, None, None, None)
    };

    let (gap_ok, sqrt_ok) = if n >= GAP_LEMMA_FROM {
        (
            Some(gap_lemma_from(n, li_inv, p_n).holds),
            Some(sqrt_gap_from(n, li_inv, p_n).holds),
        )
    } else {
        (None, None)
    };

    let cr = crude_from(n, li_inv, p_n);
    let crude_ok = match (cr.p_upper, cr.li_inv_upper) {
        (Some(a), Some(b)) => Some(a && b),
        _ => None,
    };
    let rosser_ok = cr.rosser && cr.li_inv_lower.unwrap_or(true);

    let sp = Dd::from_u64(p_n).sqrt();
    let sl = li_inv.sqrt();
    let lhs = (sp - log_g).to_f64();
    let rhs = ((sl - log_g) - (sl - sp)).to_f64();
    let decomposition_ok = (lhs - rhs).abs() <= 1e-9 * sl.to_f64().max(1.0);

    Ok(VerificationRow {
        n,
        p_n,
        li_inv: li_inv.to_f64(),
        log_g,
        a_n: a,
        dn_bound: dn,
        thm1_margin: t1.margin,
        thm1_ok: t1.holds && deps.fault != Some(n),
        thm1_pi_form_ok: t1.pi_form,
        thm1_pi_agrees: t1.holds == (t1.pi_form && t1.pi_of_log_sq < n),
        a_pos_ok: a_pos,
        dn_ok,
        gap_ok,
        sqrt_gap_ok: sqrt_ok,
        crude_ok,
        rosser_ok,
        li_inv_le_p_ok: li_inv <= Dd::from_u64(p_n),
        decomposition_ok,
        reevaluated,
    })
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct CheckCount {
    pub check: &'static str,
    pub applicable: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RangeConfigEcho {
    pub guard_band: f64,
    pub li: LiConfig,
    pub c_interval: Option<(f64, f64)>,
    pub zeros: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RangeReport {
    pub from_n: usize,
    pub to_n: usize,
    pub rows_failed: Vec<VerificationRow>,
    pub counts: Vec<CheckCount>,
    pub reevaluated: usize,
    pub config: RangeConfigEcho,
}

impl RangeReport {
    pub fn all_pass(&self) -> bool {
        self.rows_failed.is_empty()
    }

    pub fn count(&self, check: &str) -> Option<&CheckCount> {
        self.counts.iter().find(|c| c.check == check)
    }
}

/// Rows are computed this many at a time, so memory stays flat over long ranges.
pub const CHUNK: usize = 1 << 15;

/// Sweeps `from_n..=to_n`, feeding every row in ascending `n` to `sink`.
pub fn run_range_with<S>(from_n: usize, to_n: usize, deps: &Deps, workers: &Workers, mut sink: S) -> Result<RangeReport>
where
    S: FnMut(&VerificationRow) -> Result<()>,
{
    if from_n == 0 || from_n > to_n {
        return Err(Error::invalid("run_range", format!("empty range [{from_n}, {to_n}]")));
    }
    let names = [
        "thm1",
        "thm1_pi_form",
        "thm1_pi_agrees",
        "a_pos",
        "dn_bound",
        "gap",
        "sqrt_gap",
        "crude",
        "rosser",
        "li_inv_le_p",
        "decomposition",
    ];
    let mut counts: Vec<CheckCount> = names
        .iter()
        .map(|&check| CheckCount {
            check,
            ..Default::default()
        })
        .collect();
    let mut rows_failed = Vec::new();
    let mut reevaluated = 0;
    let mut start = from_n;
    while start <= to_n {
        let end = (start + CHUNK - 1).min(to_n);
        let rows = workers.try_map_range(start..end + 1, |n| compute_row(n, deps))?;
        for row in rows {
            for (slot, (_, v)) in counts.iter_mut().zip(row.checks()) {
                if let Some(ok) = v {
                    slot.applicable += 1;
                    slot.failed += usize::from(!ok);
                }
            }
            reevaluated += usize::from(row.reevaluated);
            sink(&row)?;
            if row.failed() {
                rows_failed.push(row);
            }
        }
        start = end + 1;
    }
    Ok(RangeReport {
        from_n,
        to_n,
        rows_failed,
        counts,
        reevaluated,
        config: RangeConfigEcho {
            guard_band: GUARD_BAND,
            li: deps.li.clone(),
            c_interval: deps.c.map(|c| c.interval()),
            zeros: deps.c.map(|c| c.zeros),
        },
    })
}

pub fn run_range(from_n: usize, to_n: usize, deps: &Deps, workers: &Workers) -> Result<RangeReport> {
    run_range_with(from_n, to_n, deps, workers, |_| Ok(()))
}

pub const CSV_HEADER: &str = "n,p_n,li_inv,log_g,a_n,dn_bound,thm1_margin,gap_ok,sqrt_gap_ok,crude_ok,rosser_ok";

fn opt_f(v: Option<f64>) -> String {
    v.map(crate::fmt::g15).unwrap_or_else(|| "NA".into())
}

fn opt_b(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "NA",
    }
}

impl VerificationRow {
    pub fn csv_line(&self) -> String {
        use crate::fmt::g15;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.p_n,
            g15(self.li_inv),
            g15(self.log_g),
            opt_f(self.a_n),
            opt_f(self.dn_bound),
            g15(self.thm1_margin),
            opt_b(self.gap_ok),
            opt_b(self.sqrt_gap_ok),
            opt_b(self.crude_ok),
            opt_b(Some(self.rosser_ok)),
        )
    }
}
