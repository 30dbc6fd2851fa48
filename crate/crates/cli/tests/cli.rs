use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use landau_cli::{parse_args, Command as Cmd, EXIT_FAILURES, EXIT_OK, EXIT_USAGE};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_landau-rh"))
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .env_remove("LANDAU_RH_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn zeros() -> &'static Path {
    static PATH: OnceLock<PathBuf> = OnceLock::new();
    PATH.get_or_init(|| zeta_fixture::cached_ordinates(Path::new(env!("CARGO_TARGET_TMPDIR")), 10_000).unwrap())
}

fn argv(s: &str) -> Vec<String> {
    std::iter::once("landau-rh".to_string())
        .chain(s.split_whitespace().map(String::from))
        .collect()
}

#[test]
fn parses_the_documented_examples() {
    let c = parse_args(argv("verify --from 2 --to 1000 --zeros z.txt")).unwrap();
    match c.command {
        Cmd::Verify { from, to, zeros, .. } => {
            assert_eq!((from, to), (2, 1000));
            assert_eq!(zeros, PathBuf::from("z.txt"));
        }
        other => panic!("{other:?}"),
    }
    let c = parse_args(argv("landau --max 100 --witness 30")).unwrap();
    assert!(matches!(c.command, Cmd::Landau { max: 100, witness: 30 }));
    let e = parse_args(argv("verify --to 10 --from 20 --zeros z.txt")).unwrap_err();
    assert!(e.message.contains("empty range"), "{}", e.message);
    assert_eq!(e.code, EXIT_USAGE);
}

#[test]
fn rejects_bad_arguments() {
    for bad in [
        "verify --to 100",
        "report --out dir",
        "landau --max 0",
        "landau --max 10 --witness 11",
        "primes --limit ten",
        "primes --limit 10 --bogus",
        "verify --to 10 --zeros z --emit xml",
        "champions --rho-max 2",
        "li --x 5 --workers 0",
        "zeros --file z --tail explicit --slack 2",
    ] {
        let e = parse_args(argv(bad)).unwrap_err();
        assert_eq!(e.code, EXIT_USAGE, "{bad}");
    }
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# defaults\nmax = 50\nwitness = 20\nworkers = 3\n").unwrap();
    let c = parse_args(argv(&format!("landau --config {} --witness 40", cfg.display()))).unwrap();
    assert!(matches!(c.command, Cmd::Landau { max: 50, witness: 40 }));
    assert_eq!(c.workers, 3);

    std::fs::write(&cfg, "colour = blue\n").unwrap();
    let e = parse_args(argv(&format!("landau --max 5 --config {}", cfg.display()))).unwrap_err();
    assert!(e.message.contains("unknown key"), "{}", e.message);
}

#[test]
fn worker_count_comes_from_the_environment() {
    let o = bin()
        .args(["li", "--x", "10", "--workers", "2"])
        .env("LANDAU_RH_WORKERS", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let o = bin()
        .args(["li", "--x", "10"])
        .env("LANDAU_RH_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_OK));
}

#[test]
fn li_and_primes_print_fifteen_digits() {
    let o = run(&["li", "--x", "1e6", "--inverse", "1000"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let s = stdout(&o);
    assert!(s.contains("li(1000000) = 78627.5491594622\n"), "{s}");
    assert!(s.contains("Li(1000000) = 78626.5039956821\n"), "{s}");
    let o = run(&["primes", "--limit", "1000", "--nth", "168", "--pi", "100"]);
    let s = stdout(&o);
    assert!(s.contains("p_168 = 997\n") && s.contains("pi(100) = 25\n"), "{s}");
}

#[test]
fn landau_prints_the_witness() {
    let o = run(&["landau", "--max", "30"]);
    let s = stdout(&o);
    assert!(s.contains("g(30) = 4620\n"), "{s}");
    assert!(s.contains("witness(30) = 2^2*3^1*5^1*7^1*11^1\n"), "{s}");
    assert!(s.contains("witness_sum(30) = 30\n"), "{s}");
}

#[test]
fn cheby_reports_the_step_functions() {
    let o = run(&["cheby", "--xmax", "100", "--at", "10"]);
    let s = stdout(&o);
    assert!(s.contains("psi(10) = 7.83201418050547\n"), "{s}");
    assert!(s.contains("theta(10) = 5.34710753071747\n"), "{s}");
}

#[test]
fn zeros_reports_the_interval() {
    let o = run(&["zeros", "--file", zeros().to_str().unwrap(), "--report"]);
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", stderr(&o));
    let s = stdout(&o);
    let get = |k: &str| -> f64 {
        s.lines()
            .find_map(|l| l.strip_prefix(&format!("{k} = ")))
            .unwrap_or_else(|| panic!("{k} missing in {s}"))
            .parse()
            .unwrap()
    };
    assert!(get("interval_lo") <= 0.046117644421509 && 0.046117644421509 <= get("interval_hi"));
    assert_eq!(get("zeros"), 10_000.0);
    assert!(s.contains("assumption = "));
}

#[test]
fn malformed_zeros_file_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("z.txt");
    std::fs::write(&f, "# header\n14.134725141734693\n21.02203963877155\nx21.5\n").unwrap();
    let o = run(&["zeros", "--file", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    let e = stderr(&o);
    assert!(e.contains("line 4"), "{e}");
    let o = run(&["zeros", "--file", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
}

#[test]
fn verify_passes_fails_on_injection_and_writes_csv() {
    let z = zeros().to_str().unwrap();
    let o = run(&["verify", "--to", "3000", "--zeros", z]);
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", stderr(&o));
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(
        lines.next(),
        Some("n,p_n,li_inv,log_g,a_n,dn_bound,thm1_margin,gap_ok,sqrt_gap_ok,crude_ok,rosser_ok")
    );
    assert_eq!(s.lines().count(), 3001);
    let row_2657 = s.lines().find(|l| l.starts_with("2657,")).unwrap();
    assert!(row_2657.ends_with(",true,true,true,true"), "{row_2657}");
    let row_5 = s.lines().find(|l| l.starts_with("5,")).unwrap();
    assert!(row_5.contains(",NA,NA,"), "{row_5}");

    let o = run(&["verify", "--to", "200", "--zeros", z, "--inject-fail", "77"]);
    assert_eq!(o.status.code(), Some(EXIT_FAILURES));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("v.json");
    let o = run(&[
        "verify",
        "--from",
        "2",
        "--to",
        "500",
        "--zeros",
        z,
        "--emit",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).is_empty());
    let j = std::fs::read_to_string(out).unwrap();
    assert!(j.contains("\"from_n\": 2") && j.contains("\"to_n\": 500"), "{j}");
}

#[test]
fn champions_and_witness_grids() {
    let o = run(&["champions", "--rho-max", "4"]);
    let s = stdout(&o);
    assert_eq!(s.lines().next(), Some("rho,x1,log_N,ell,num_primes"));
    assert_eq!(s.lines().nth(1), Some("2.73071767988051,3,1.09861228866811,3,1"));
    let o = run(&["champions", "--rho-max", "4", "--emit", "json"]);
    assert!(stdout(&o).contains("\"ell\": 12"));

    let o = run(&["champions", "--witness", "--xmax", "1000", "--points", "7"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let s = stdout(&o);
    assert_eq!(s.lines().next(), Some("x1,W,LiPsiSq_minus_Pi1"));
    assert_eq!(s.lines().count(), 8);
    assert!(s.lines().nth(7).unwrap().starts_with("1000,"));
}

#[test]
fn help_names_the_inequalities() {
    let o = run(&["verify", "--help"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).contains("ln² g(n) < p_n"));
    let o = run(&["champions", "--help"]);
    assert!(stdout(&o).contains("Li(ψ²) >= Li(x²)"));
    let o = run(&["--help"]);
    let s = stdout(&o);
    for sub in [
        "primes",
        "li",
        "landau",
        "cheby",
        "zeros",
        "champions",
        "verify",
        "report",
    ] {
        assert!(s.contains(&format!("  {sub} ")), "{sub} missing from {s}");
    }
}

#[test]
fn report_writes_identical_bundles() {
    let z = zeros().to_str().unwrap();
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let small = [
        "--to",
        "3000",
        "--pi-li-max",
        "20000",
        "--champion-ell-max",
        "500",
        "--witness-xmax",
        "2000",
        "--witness-points",
        "20",
        "--cheby-xmax",
        "20000",
    ];
    for (dir, w) in [(&a, "1"), (&b, "3")] {
        let mut args = vec![
            "report",
            "--zeros",
            z,
            "--out",
            dir.path().to_str().unwrap(),
            "--workers",
            w,
        ];
        args.extend_from_slice(&small);
        let o = run(&args);
        assert!(
            o.status.code() == Some(EXIT_OK) || o.status.code() == Some(EXIT_FAILURES),
            "{}",
            stderr(&o)
        );
    }
    let mut names: Vec<_> = std::fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert_eq!(names.len(), 6);
    for n in names {
        let x = std::fs::read(a.path().join(&n)).unwrap();
        let y = std::fs::read(b.path().join(&n)).unwrap();
        assert!(x == y, "{n:?} differs");
    }
}
