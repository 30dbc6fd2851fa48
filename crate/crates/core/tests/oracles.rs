//! Cross-checks against values computed independently of the library code.

use std::io::Cursor;
use std::sync::OnceLock;

use landau_core::champions::{champion_for_n, champion_sequence_to_ell};
use landau_core::chebyshev::{build_chebyshev_tables, ChebyshevTables};
use landau_core::landau::{build_landau_table, prime_bound};
use landau_core::logintegral::{li, li_inverse, LiConfig};
use landau_core::parallel::Workers;
use landau_core::primes::build_prime_table;
use landau_core::zeros::{constant_c, load_zeros, load_zeros_file};
use landau_core::{Dd, Error};
use proptest::prelude::*;

const LI_ORACLE: &str = include_str!("data/li_oracle.txt");

#[test]
fn li_matches_quadrature_oracle() {
    let cfg = LiConfig::default();
    let mut n = 0;
    for line in LI_ORACLE.lines().filter(|l| !l.starts_with('#')) {
        let f: Vec<f64> = line.split_whitespace().map(|t| t.parse().unwrap()).collect();
        let (x, want) = (f[0], Dd::from(f[1]) + f[2]);
        let got = li(x, &cfg).unwrap();
        let err = (got - want).abs().to_f64();
        assert!(err <= 1e-12, "li({x}): got {got}, oracle {want}, error {err:e}");
        n += 1;
    }
    assert_eq!(n, 100);
}

/// Li(s) for every integer 2 <= s <= n by composite Simpson on unit steps.
fn li_offset_by_simpson(n: usize) -> Vec<f64> {
    let f = |t: f64| 1.0 / t.ln();
    let mut out = vec![0.0; 3];
    let mut acc = 0.0;
    for s in 3..=n {
        let a = (s - 1) as f64;
        let m = if s < 1000 { 64 } else { 8 };
        let h = 1.0 / m as f64;
        let mut step = f(a) + f(a + 1.0);
        for k in 1..m {
            step += if k % 2 == 1 { 4.0 } else { 2.0 } * f(a + k as f64 * h);
        }
        acc += step * h / 3.0;
        out.push(acc);
    }
    out
}

fn cheb_1e6() -> &'static ChebyshevTables {
    static T: OnceLock<ChebyshevTables> = OnceLock::new();
    T.get_or_init(|| {
        let pt = build_prime_table(1_000_000).unwrap();
        build_chebyshev_tables(1_000_000, &pt, &LiConfig::default(), &Workers::new(2).unwrap()).unwrap()
    })
}

#[test]
fn r_envelope_matches_dense_grid() {
    const N: usize = 1_000_000;
    let t = cheb_1e6();
    let lis = li_offset_by_simpson(N);
    let mut sieve = vec![true; N + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= N {
        if sieve[i] {
            (i * i..=N).step_by(i).for_each(|j| sieve[j] = false);
        }
        i += 1;
    }
    let mut pi = 0i64;
    let mut sup = 0.0f64;
    let mut checkpoint = 10;
    for s in 2..=N {
        let left = (pi as f64 - lis[s]).abs();
        if sieve[s] {
            pi += 1;
        }
        sup = sup.max(left).max((pi as f64 - lis[s]).abs());
        if s == checkpoint || s == N {
            let r = t.r_envelope().eval(s as f64).unwrap();
            assert!((r - sup).abs() <= 1e-6 * sup.max(1.0), "R({s}) = {r}, grid {sup}");
            checkpoint *= 10;
        }
    }
}

#[test]
fn psi_and_theta_match_trial_division() {
    let t = cheb_1e6();
    let mut theta = 0.0;
    let mut psi = 0.0;
    for m in 2u64..=20_000 {
        let p = (2..=m).find(|d| m % d == 0).unwrap();
        let mut k = m;
        while k % p == 0 {
            k /= p;
        }
        if k == 1 {
            psi += (p as f64).ln();
            if p == m {
                theta += (p as f64).ln();
            }
        }
        if m % 997 == 0 {
            assert!((t.psi(m as f64).unwrap() - psi).abs() < 1e-9 * psi);
            assert!((t.theta(m as f64).unwrap() - theta).abs() < 1e-9 * theta);
        }
    }
}

#[test]
fn li_round_trip_sweep() {
    let cfg = LiConfig::default();
    let mut y = 0.0f64;
    while y <= 1e9 {
        let x = li_inverse(y, &cfg).unwrap();
        let back = li(x, &cfg).unwrap();
        assert!(
            (back - y).abs().to_f64() <= cfg.inv_tol.max(1e-15 * y),
            "li(li⁻¹({y})) = {back}"
        );
        y = if y < 10.0 { y + 0.25 } else { y * 1.37 };
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn li_inverse_is_a_right_inverse(y in 0.0f64..1e9) {
        let cfg = LiConfig::default();
        let x = li_inverse(y, &cfg).unwrap();
        prop_assert!(x.to_f64() >= 1.45);
        prop_assert!((li(x, &cfg).unwrap() - y).abs().to_f64() <= cfg.inv_tol.max(1e-15 * y));
    }

    #[test]
    fn li_is_monotone_above_one(a in 1.0001f64..1e7, b in 1.0001f64..1e7) {
        let cfg = LiConfig::default();
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assume!(hi > lo);
        prop_assert!(li(lo, &cfg).unwrap() < li(hi, &cfg).unwrap());
    }
}

#[test]
fn zeros_load_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    std::fs::write(
        &path,
        "# first five ordinates\n14.134725141734693\n21.022039638771555\n\n25.010857580145688\n30.424876125859513\n32.935061587739189\n",
    )
    .unwrap();
    let z = load_zeros_file(&path).unwrap();
    assert_eq!(z.len(), 5);
    let c = constant_c(&z).unwrap();
    let by_hand: f64 = z
        .gammas()
        .iter()
        .map(|g| 2.0 / ((0.25 + g * g) * (2.25 + g * g)).sqrt())
        .sum();
    assert!((c.partial - by_hand).abs() < 1e-16);
    assert!(c.contains(0.046117644421509));

    let err = load_zeros_file(dir.path().join("absent.txt")).unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
    let err = load_zeros(Cursor::new("14.134725141734693\n13.0\n")).unwrap_err();
    assert!(err.to_string().contains("line 2"), "{err}");
}

#[test]
fn champion_for_n_is_the_last_champion_not_beyond_n() {
    const N: usize = 5000;
    let pt = build_prime_table(prime_bound(N)).unwrap();
    let lt = build_landau_table(N, &pt).unwrap();
    let seq = champion_sequence_to_ell(N as u64, &pt).unwrap();
    let mut last = 0;
    for n in 3..=N {
        while last + 1 < seq.len() && seq[last + 1].ell as usize <= n {
            last += 1;
        }
        let c = champion_for_n(n, &seq, &lt).unwrap();
        assert_eq!(c.ell, seq[last].ell, "n = {n}");
    }
}
