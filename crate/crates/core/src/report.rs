//! A full reproduction run bundled into a set of text files.
//!
//! Every number is printed at 15 significant digits and every collection in a
//! fixed order, so two runs with the same configuration produce identical
//! bytes whatever the worker count.

use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::champions::{champion_sequence_to_ell, gap_constant, log_grid, witness_point, Champion};
use crate::chebyshev::{build_chebyshev_tables, empirical_r_exponent};
use crate::error::{Error, Result};
use crate::fmt::{g15, round15};
use crate::landau::{build_landau_table_with, landau_exact, LandauConfig};
use crate::logintegral::LiConfig;
use crate::parallel::Workers;
use crate::primes::{build_prime_table_with, SieveConfig};
use crate::verify::{
    check_pi_le_li, li_inverse_lower_crossover, prepare_tables, run_range_with, threshold_scan, CSV_HEADER,
};
use crate::zeros::{constant_c_with, TailBound, ZeroTable, CRITICAL_LINE_NOTE};

#[derive(Clone, Debug, Serialize)]
pub struct ReportConfig {
    /// Sweep `1..=to_n` for the row checks.
    pub to_n: usize,
    /// `π(m) <= li(m)` for `2 <= m <= pi_li_max`.
    pub pi_li_max: u64,
    /// Champions with `ell <= champion_ell_max`.
    pub champion_ell_max: u64,
    /// Witness grid over `[3, witness_x_max]`.
    pub witness_x_max: u64,
    pub witness_points: usize,
    /// Chebyshev tables (and `R`) reach this far.
    pub cheby_x_max: u64,
    /// Rows with `n <= sample_head` or `n` a multiple of `sample_every` go to
    /// `verify_sample.csv`.
    pub sample_head: usize,
    pub sample_every: usize,
    pub li: LiConfig,
    pub tail: TailBound,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            to_n: 1_000_000,
            pi_li_max: 10_000_000,
            champion_ell_max: 100_000,
            witness_x_max: 100_000,
            witness_points: 200,
            cheby_x_max: 1_000_000,
            sample_head: 100,
            sample_every: 1000,
            li: LiConfig::default(),
            tail: TailBound::default(),
        }
    }
}

impl ReportConfig {
    pub fn validate(&self) -> Result<()> {
        self.li.validate()?;
        if self.to_n < 2 || self.pi_li_max < 2 || self.champion_ell_max < 3 || self.sample_every == 0 {
            return Err(Error::invalid(
                "report config",
                "limits must be positive (to_n, pi_li_max >= 2)",
            ));
        }
        if self.witness_x_max < 10 || self.witness_points < 2 || self.cheby_x_max < self.witness_x_max {
            return Err(Error::invalid(
                "report config",
                "need witness_x_max >= 10, witness_points >= 2 and cheby_x_max >= witness_x_max",
            ));
        }
        Ok(())
    }
}

/// Named files in a fixed order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bundle {
    pub files: Vec<(String, String)>,
    /// Number of failed checks across the whole run.
    pub failures: usize,
}

impl Bundle {
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir).map_err(|source| Error::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        for (name, body) in &self.files {
            let path = dir.join(name);
            std::fs::write(&path, body).map_err(|source| Error::Io { path, source })?;
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.files.iter().find(|(n, _)| n == name).map(|(_, b)| b.as_str())
    }
}

fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(round15(x))
    } else {
        Value::String(g15(x))
    }
}

pub const CHAMPIONS_HEADER: &str = "rho,x1,log_N,ell,num_primes";
pub const WITNESS_HEADER: &str = "x1,W,LiPsiSq_minus_Pi1";

pub fn champion_csv_line(c: &Champion) -> String {
    format!(
        "{},{},{},{},{}",
        g15(c.rho),
        g15(c.x1),
        g15(c.log_n),
        c.ell,
        c.num_primes()
    )
}

pub fn run_report(cfg: &ReportConfig, zeros: &ZeroTable, workers: &Workers) -> Result<Bundle> {
    cfg.validate()?;
    let mut failures = 0usize;
    let mut files = Vec::new();

    let c = constant_c_with(zeros, &cfg.tail)?;
    let zeros_json = json!({
        "assumption": CRITICAL_LINE_NOTE,
        "zeros": c.zeros,
        "height": num(c.height),
        "partial": num(c.partial),
        "tail_hi": num(c.tail_hi),
        "interval_lo": num(c.lo()),
        "interval_hi": num(c.hi()),
        "tail_bound": serde_json::to_value(cfg.tail).expect("tail bound serializes"),
    });

    let tables = prepare_tables(cfg.to_n, &LandauConfig::default(), &SieveConfig::default())?;
    let deps = tables.deps(&cfg.li, Some(&c));
    let mut sample = String::from(CSV_HEADER);
    sample.push('\n');
    let range = run_range_with(1, cfg.to_n, &deps, workers, |row| {
        if row.n <= cfg.sample_head || row.n % cfg.sample_every == 0 {
            sample.push_str(&row.csv_line());
            sample.push('\n');
        }
        Ok(())
    })?;
    failures += range.counts.iter().map(|c| c.failed).sum::<usize>();
    let mut failed_csv = String::from(CSV_HEADER);
    failed_csv.push('\n');
    for row in &range.rows_failed {
        failed_csv.push_str(&row.csv_line());
        failed_csv.push('\n');
    }
    let counts: Vec<Value> = range
        .counts
        .iter()
        .map(|c| json!({"check": c.check, "applicable": c.applicable, "failed": c.failed}))
        .collect();

    let big_primes = build_prime_table_with(cfg.pi_li_max.max(cfg.cheby_x_max), &SieveConfig::default())?;
    let pi_li = check_pi_le_li(cfg.pi_li_max, &big_primes, &cfg.li, workers)?;
    failures += usize::from(pi_li.is_some());
    let crossover = li_inverse_lower_crossover(1000, &cfg.li)?;

    let thresholds = threshold_scan();
    failures += usize::from(!thresholds.holds_past_1e10);
    let mut thr_csv = String::from("n,f1,f2\n");
    for p in &thresholds.points {
        thr_csv.push_str(&format!("{},{},{}\n", g15(p.n), g15(p.f1), g15(p.f2)));
    }
    let bracket = |b: &Option<crate::verify::Bracket>| match b {
        Some(b) => {
            json!({"last_fail": num(b.last_fail), "holds_from": num(b.holds_from), "crossover": num(b.crossover)})
        }
        None => Value::Null,
    };

    let cheb = build_chebyshev_tables(cfg.cheby_x_max, &big_primes, &cfg.li, workers)?;
    let ell_max = cfg.champion_ell_max;
    let lt = build_landau_table_with(ell_max as usize, &big_primes, &LandauConfig::default())?;
    let seq = champion_sequence_to_ell(ell_max, &big_primes)?;
    let in_range: Vec<&Champion> = seq.iter().filter(|c| c.ell <= ell_max).collect();
    let checks = workers.try_map_range(0..in_range.len(), |i| {
        let ch = in_range[i];
        let member = landau_exact(ch.ell as usize, &lt)? == ch.to_biguint();
        let sandwich = ch.sandwich(&cheb)?.holds;
        Ok((member, sandwich))
    })?;
    let member_fail = checks.iter().filter(|c| !c.0).count();
    let sandwich_fail = checks.iter().filter(|c| !c.1).count();
    failures += member_fail + sandwich_fail;
    let mut champ_csv = format!("{CHAMPIONS_HEADER}\n");
    for ch in &in_range {
        champ_csv.push_str(&champion_csv_line(ch));
        champ_csv.push('\n');
    }
    let gap = gap_constant(3, ell_max as usize, &seq, &lt)?;

    let grid = log_grid(3.0, cfg.witness_x_max as f64, cfg.witness_points);
    let pts = workers.try_map_range(0..grid.len(), |i| witness_point(grid[i], &cheb, &cfg.li))?;
    let mut wit_csv = format!("{WITNESS_HEADER}\n");
    let mut positive = 0;
    let mut convexity_fail = 0;
    for p in &pts {
        wit_csv.push_str(&format!("{},{},{}\n", g15(p.x1), g15(p.w), g15(p.li_psi_sq_minus_pi1)));
        positive += usize::from(p.w > 0.0);
        convexity_fail += usize::from(p.li_psi_sq_minus_pi1 < p.w);
    }
    failures += convexity_fail;

    // The fit needs two decades above its lower end.
    let r_exp = if cfg.cheby_x_max >= 100_000 {
        num(empirical_r_exponent(cheb.r_envelope(), 1000.0, 61)?)
    } else {
        Value::Null
    };

    let summary = json!({
        "config": {
            "to_n": cfg.to_n,
            "pi_li_max": cfg.pi_li_max,
            "champion_ell_max": cfg.champion_ell_max,
            "witness_x_max": cfg.witness_x_max,
            "witness_points": cfg.witness_points,
            "cheby_x_max": cfg.cheby_x_max,
            "guard_band": num(range.config.guard_band),
            "li": {
                "abs_tol": num(cfg.li.abs_tol),
                "inv_tol": num(cfg.li.inv_tol),
                "max_iter": cfg.li.max_iter,
                "asymptotic_crossover": num(cfg.li.asymptotic_crossover),
            },
        },
        "zeros": zeros_json,
        "sweep": {
            "from_n": range.from_n,
            "to_n": range.to_n,
            "counts": counts,
            "rows_failed": range.rows_failed.len(),
            "reevaluated": range.reevaluated,
        },
        "pi_le_li": {
            "m_max": cfg.pi_li_max,
            "first_violation": pi_li,
        },
        "li_inverse_lower_bound_from": crossover,
        "thresholds": {
            "f1_bracket": bracket(&thresholds.f1_bracket),
            "f2_bracket": bracket(&thresholds.f2_bracket),
            "holds_past_1e10": thresholds.holds_past_1e10,
        },
        "champions": {
            "count": in_range.len(),
            "ell_max": ell_max,
            "g_of_ell_mismatches": member_fail,
            "sandwich_failures": sandwich_fail,
            "gap_constant": {
                "n_from": gap.n_from,
                "n_to": gap.n_to,
                "max_ratio": num(gap.max_ratio),
                "argmax_n": gap.argmax_n,
                "argmax_rho": num(gap.argmax_rho),
            },
        },
        "witness": {
            "points": pts.len(),
            "w_positive": positive,
            "convexity_failures": convexity_fail,
        },
        "r_envelope_exponent": {
            "lo": 1000,
            "hi": cfg.cheby_x_max,
            "slope": r_exp,
        },
        "failures": failures,
    });

    files.push((
        "summary.json".to_string(),
        serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n",
    ));
    files.push(("verify_sample.csv".into(), sample));
    files.push(("verify_failures.csv".into(), failed_csv));
    files.push(("thresholds.csv".into(), thr_csv));
    files.push(("champions.csv".into(), champ_csv));
    files.push(("witness.csv".into(), wit_csv));
    Ok(Bundle { files, failures })
}
