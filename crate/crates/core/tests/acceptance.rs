//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` still print FAIL when they fail but
//! do not fail the run; every other FAIL makes the process exit nonzero.

use std::path::Path;
use std::time::{Duration, Instant};

use landau_core::champions::{champion_sequence_to_ell, log_grid, witness_point};
use landau_core::chebyshev::build_chebyshev_tables;
use landau_core::landau::{build_landau_table, landau_bruteforce, landau_exact, ln_biguint, prime_bound};
use landau_core::logintegral::LiConfig;
use landau_core::parallel::{default_worker_count, Workers};
use landau_core::primes::build_prime_table;
use landau_core::report::{run_report, ReportConfig};
use landau_core::verify::{
    check_pi_le_li, dn_constant, li_inverse_lower_crossover, prepare_tables, run_range, threshold_f1, threshold_f2,
    threshold_scan, RangeReport,
};
use landau_core::zeros::{constant_c, load_zeros_file};
use landau_core::{landau::LandauConfig, primes::SieveConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const C_REFERENCE: f64 = 0.046117644421509;
const FIXTURE_ZEROS: usize = 800_000;

/// Criterion 13 asks for Li(ψ²) >= Li(x²) + (x/ln x)(ψ - x) from x = 3, but
/// t -> Li(t²) is concave below e and ψ(x) = ln 6 < e on [3, 4), so the
/// tangent-line inequality is false there (exactly, not numerically) for
/// x < 3.4.
const KNOWN_UNATTAINABLE: &[u32] = &[13];

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
    elapsed: Duration,
    limit: Option<Duration>,
}

struct Run {
    outcomes: Vec<Outcome>,
}

impl Run {
    fn record(&mut self, id: u32, limit: Option<Duration>, start: Instant, pass: bool, detail: String) {
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let o = Outcome {
            id,
            pass: pass && in_time,
            detail: if in_time {
                detail
            } else {
                format!("{detail}; over time limit {:?}", limit.unwrap())
            },
            elapsed,
            limit,
        };
        println!(
            "{} criterion {:>2} ({:.2} s{}): {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.id,
            o.elapsed.as_secs_f64(),
            o.limit.map_or(String::new(), |l| format!(" of {} s", l.as_secs())),
            o.detail
        );
        self.outcomes.push(o);
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn count(report: &RangeReport, check: &str) -> (usize, usize) {
    report
        .counts
        .iter()
        .find(|c| c.check == check)
        .map_or((0, 0), |c| (c.applicable, c.failed))
}

fn main() {
    let workers = Workers::new(default_worker_count()).unwrap();
    let li_cfg = LiConfig::default();
    let mut run = Run { outcomes: Vec::new() };
    println!("acceptance: {} worker(s)", workers.count());

    let t = Instant::now();
    let lt45 = build_landau_table(45, &build_prime_table(prime_bound(45)).unwrap()).unwrap();
    let mismatches: Vec<usize> = (1..=45)
        .filter(|&n| landau_exact(n, &lt45).unwrap() != landau_bruteforce(n).unwrap())
        .collect();
    run.record(
        1,
        secs(10),
        t,
        mismatches.is_empty(),
        format!("g(n) vs brute force for n <= 45, mismatches {mismatches:?}"),
    );

    let t = Instant::now();
    let lt2000 = build_landau_table(2000, &build_prime_table(prime_bound(2000)).unwrap()).unwrap();
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for n in 1..=2000 {
        let w = lt2000.witness(n).unwrap();
        let exact = landau_exact(n, &lt2000).unwrap();
        let d = (ln_biguint(&exact) - lt2000.log_g(n).unwrap()).abs();
        worst = worst.max(d);
        if d > 1e-9 || w.to_biguint() != exact || w.cost() as usize > n {
            bad.push(n);
        }
    }
    run.record(
        2,
        secs(60),
        t,
        bad.is_empty(),
        format!("n <= 2000, max |ln g - log_g| = {worst:.3e}, failures {}", bad.len()),
    );

    // Criteria 3, 4, 6, 7 and 9 share one sweep with c from the zero fixture.
    let t = Instant::now();
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let zeros_path = zeta_fixture::cached_ordinates(tmp, FIXTURE_ZEROS).unwrap();
    let fixture_time = t.elapsed();

    let t5 = Instant::now();
    let zeros = load_zeros_file(&zeros_path).unwrap();
    let c = constant_c(&zeros).unwrap();
    let ok5 = zeros.len() >= 10_000 && c.contains(C_REFERENCE) && c.width() < 1e-5;
    let c_detail = format!(
        "{} zeros to height {:.1}: c in [{:.15}, {:.15}], width {:.3e} (fixture ready in {:.1} s)",
        c.zeros,
        c.height,
        c.lo(),
        c.hi(),
        c.width(),
        fixture_time.as_secs_f64()
    );
    let t5_elapsed = t5.elapsed();

    let t = Instant::now();
    let tables = prepare_tables(1_000_000, &LandauConfig::default(), &SieveConfig::default()).unwrap();
    let deps = tables.deps(&li_cfg, Some(&c));
    let sweep = run_range(1, 1_000_000, &deps, &workers).unwrap();
    let sweep_time = t.elapsed();
    println!(
        "  sweep n in [1, 1e6]: {:.1} s, {} rows failed, {} guard-band re-evaluations",
        sweep_time.as_secs_f64(),
        sweep.rows_failed.len(),
        sweep.reevaluated
    );

    let (app, failed) = count(&sweep, "thm1");
    run.record(
        3,
        secs(600),
        t,
        failed == 0 && app == 1_000_000,
        format!("ln² g(n) < p_n on {app} values of n, {failed} failures"),
    );

    let t = Instant::now();
    let (pa, pf) = count(&sweep, "a_pos");
    let (da, df) = count(&sweep, "dn_bound");
    run.record(
        4,
        None,
        t,
        pf == 0 && df == 0 && pa == 999_999 && da == 999_999,
        format!(
            "a_n > 0: {pf}/{pa} failures; a_n >= {:.6} - c_hi - 0.43 lnln n/ln n: {df}/{da} failures",
            dn_constant()
        ),
    );

    run.record(5, secs(5), Instant::now() - t5_elapsed, ok5, c_detail);

    let t = Instant::now();
    let (ga, gf) = count(&sweep, "gap");
    run.record(
        6,
        None,
        t,
        gf == 0 && ga == 1_000_000 - 2657 + 1,
        format!("|li⁻¹(n) - p_n| bound for 2657 <= n <= 1e6: {gf}/{ga} failures"),
    );

    let t = Instant::now();
    let (sa, sf) = count(&sweep, "sqrt_gap");
    run.record(
        7,
        None,
        t,
        sf == 0 && sa == 1_000_000 - 2657 + 1,
        format!("√li⁻¹(n) - √p_n bound for 2657 <= n <= 1e6: {sf}/{sa} failures"),
    );

    let t = Instant::now();
    let pt7 = build_prime_table(10_000_000).unwrap();
    let violation = check_pi_le_li(10_000_000, &pt7, &li_cfg, &workers).unwrap();
    run.record(
        8,
        secs(300),
        t,
        violation.is_none(),
        format!("π(m) <= li(m) for 2 <= m <= 1e7, first violation {violation:?}"),
    );

    let t = Instant::now();
    let (ra, rf) = count(&sweep, "rosser");
    let (ca, cf) = count(&sweep, "crude");
    let crossover = li_inverse_lower_crossover(1000, &li_cfg).unwrap();
    run.record(
        9,
        None,
        t,
        rf == 0 && cf == 0 && ra == 1_000_000 && ca == 999_998 && crossover <= 41,
        format!(
            "p_n > n ln n: {rf}/{ra} failures; upper bounds and li⁻¹(n) > n ln n (n > 40): {cf}/{ca} failures; li⁻¹(n) > n ln n holds from n = {crossover}"
        ),
    );

    let t = Instant::now();
    let th = threshold_scan();
    let at = 1e10 + 1.0;
    let brackets_ok = [&th.f1_bracket, &th.f2_bracket]
        .iter()
        .all(|b| b.as_ref().is_some_and(|b| b.holds_from <= 1e10 && b.crossover < 1e10));
    let pass10 = th.holds_past_1e10 && threshold_f1(at) > 0.0 && threshold_f2(at) > 0.0 && brackets_ok;
    let show = |b: &Option<landau_core::verify::Bracket>| {
        b.as_ref().map_or("none".to_string(), |b| {
            format!("({:.4e}, {:.4e}] at {:.6e}", b.last_fail, b.holds_from, b.crossover)
        })
    };
    run.record(
        10,
        secs(1),
        t,
        pass10,
        format!(
            "f1(1e10+1) = {:.6}, f2(1e10+1) = {:.6}; crossovers f1 {}, f2 {}",
            threshold_f1(at),
            threshold_f2(at),
            show(&th.f1_bracket),
            show(&th.f2_bracket)
        ),
    );

    let cheb_start = Instant::now();
    let cheb = build_chebyshev_tables(1_000_000, &pt7, &li_cfg, &workers).unwrap();

    let t = Instant::now();
    let lt_ell = build_landau_table(100_000, &pt7).unwrap();
    let seq = champion_sequence_to_ell(100_000, &pt7).unwrap();
    let champs: Vec<_> = seq.iter().filter(|c| c.ell <= 100_000).collect();
    let checks = workers.map_range(0..champs.len(), |i| {
        let ch = champs[i];
        let member = landau_exact(ch.ell as usize, &lt_ell).unwrap() == ch.to_biguint();
        (member, ch.sandwich(&cheb).unwrap().holds)
    });
    let not_member = checks.iter().filter(|c| !c.0).count();
    let not_sandwiched = checks.iter().filter(|c| !c.1).count();
    run.record(
        11,
        secs(120),
        t,
        not_member == 0 && not_sandwiched == 0 && !champs.is_empty(),
        format!(
            "{} champions with ell <= 1e5: g(ell) != N for {not_member}, θ(x1) <= ln N <= ψ(x1) fails for {not_sandwiched}",
            champs.len()
        ),
    );

    let env = cheb.r_envelope();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1234);
    let mut viol = 0;
    let mut tightest = f64::INFINITY;
    for _ in 0..10_000 {
        let a: f64 = rng.gen_range(2.0..1e6);
        let b: f64 = rng.gen_range(0.0..=(1e6 - a));
        let slack = env.eval(a).unwrap() + b + 1.0 - env.eval(a + b).unwrap();
        tightest = tightest.min(slack);
        viol += usize::from(slack < 0.0);
    }
    run.record(
        12,
        None,
        cheb_start,
        viol == 0,
        format!("R(a+b) <= R(a) + b + 1 on 10^4 ChaCha pairs, {viol} failures, least slack {tightest:.4}"),
    );

    let t = Instant::now();
    let grid = log_grid(3.0, 1e5, 200);
    let failing: Vec<f64> = grid
        .iter()
        .filter_map(|&x| {
            let p = witness_point(x, &cheb, &li_cfg).unwrap();
            (p.li_psi_sq_minus_pi1 < p.w).then_some(x)
        })
        .collect();
    let detail13 = match (failing.first(), failing.last()) {
        (Some(lo), Some(hi)) => format!(
            "{} of 200 grid points fail, all in [{lo:.4}, {hi:.4}] where ψ(x) < e and Li(t²) is not convex",
            failing.len()
        ),
        _ => "all 200 grid points in [3, 1e5] satisfy the inequality".to_string(),
    };
    run.record(13, None, t, failing.is_empty(), detail13);

    let t = Instant::now();
    let small = ReportConfig {
        to_n: 20_000,
        pi_li_max: 200_000,
        champion_ell_max: 2_000,
        witness_x_max: 10_000,
        witness_points: 50,
        cheby_x_max: 200_000,
        ..ReportConfig::default()
    };
    let head = zeros.prefix(20_000).unwrap();
    let one = run_report(&small, &head, &Workers::new(1).unwrap()).unwrap();
    let three = run_report(&small, &head, &Workers::new(3).unwrap()).unwrap();
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    one.write_to(dir_a.path()).unwrap();
    three.write_to(dir_b.path()).unwrap();
    let differing: Vec<&str> = one
        .files
        .iter()
        .filter(|(name, _)| {
            std::fs::read(dir_a.path().join(name)).unwrap() != std::fs::read(dir_b.path().join(name)).unwrap()
        })
        .map(|(n, _)| n.as_str())
        .collect();
    run.record(
        14,
        None,
        t,
        differing.is_empty() && one.files.len() == 6,
        format!(
            "report with 1 and 3 workers: {} files, differing {differing:?}",
            one.files.len()
        ),
    );

    let unexpected: Vec<u32> = run
        .outcomes
        .iter()
        .filter(|o| !o.pass && !KNOWN_UNATTAINABLE.contains(&o.id))
        .map(|o| o.id)
        .collect();
    let known: Vec<u32> = run
        .outcomes
        .iter()
        .filter(|o| !o.pass && KNOWN_UNATTAINABLE.contains(&o.id))
        .map(|o| o.id)
        .collect();
    let passed = run.outcomes.iter().filter(|o| o.pass).count();
    println!(
        "acceptance: {passed}/{} PASS; failing as documented {known:?}; unexpected failures {unexpected:?}",
        run.outcomes.len()
    );
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
