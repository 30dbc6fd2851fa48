//! Argument parsing and dispatch for the `landau-rh` binary.
//!
//! Every option can also come from a `key = value` file given with
//! `--config`; keys are the long flag names without dashes, and flags given on
//! the command line win.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use landau_core::champions::{champion_sequence, log_grid, witness_point, x1_of_rho};
use landau_core::chebyshev::{build_chebyshev_tables, empirical_r_exponent};
use landau_core::fmt::{g15, to_json15};
use landau_core::landau::{build_landau_table, landau_exact};
use landau_core::logintegral::{li, li_inverse, Li, LiConfig};
use landau_core::parallel::{default_worker_count, Workers};
use landau_core::primes::build_prime_table;
use landau_core::report::{champion_csv_line, run_report, ReportConfig, CHAMPIONS_HEADER, WITNESS_HEADER};
use landau_core::verify::{prepare_tables, run_range_with, CSV_HEADER};
use landau_core::zeros::{constant_c_with, load_zeros_file, TailBound, CRITICAL_LINE_NOTE};
use landau_core::{landau::LandauConfig, primes::SieveConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "landau-rh",
    version,
    about = "Landau's function, primes, li and the inequalities tying them to the Riemann Hypothesis",
    long_about = None
)]
struct Cli {
    /// key = value file supplying defaults for any flag
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Worker threads (default: $LANDAU_RH_WORKERS, else all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Absolute tolerance for li
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
    /// Residual tolerance for li⁻¹
    #[arg(long, global = true)]
    inv_tol: Option<f64>,
    /// Iteration cap for li⁻¹
    #[arg(long, global = true)]
    max_iter: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Sieve primes; report π(x) and p_n. Checks nothing.
    Primes(PrimesArgs),
    /// li(x), Li(x) = li(x) - li(2) and li⁻¹(y) in double-double precision.
    Li(LiArgs),
    /// Exact g(n) with its prime-power witness, g(n) = max lcm of a partition of n.
    Landau(LandauArgs),
    /// θ(x), ψ(x), Π₁(x) = Σ p^k/k and R(x) = sup |π(s) - Li(s)|.
    Cheby(ChebyArgs),
    /// The zero sum c = Σ 1/|ρ(ρ+1)| as an interval, from a file of zero ordinates.
    Zeros(ZerosArgs),
    /// Superchampions N_ρ (columns rho,x1,log_N,ell,num_primes), or with --witness
    /// W(x) = Li(x²) - Π₁(x) + (x/ln x)(ψ(x) - x) next to Li(ψ(x)²) - Π₁(x),
    /// whose difference is the convexity inequality Li(ψ²) >= Li(x²) + (x/ln x)(ψ - x).
    Champions(ChampionsArgs),
    /// Sweep n over a range checking ln² g(n) < p_n (g(n) <= e^√p_n), a_n > 0,
    /// a_n >= (2-√2)/3 - c - 0.43 ln ln n/ln n, |li⁻¹(n) - p_n| <= (√2/8π) ln²(2n ln n) √(n ln n)
    /// and √li⁻¹(n) - √p_n < (√2/16π) ln²(2n ln n) for n >= 2657, p_n > n ln n,
    /// li⁻¹(n) > n ln n for n > 40, and p_n, li⁻¹(n) < 2n ln n for n >= 3. Exit 1 on any failure.
    Verify(VerifyArgs),
    /// Full reproduction bundle: the verify sweep, π(m) <= li(m), the 0.08 threshold
    /// claims past 10^10, champion validity (g(ell) = N, θ(x₁) <= ln N <= ψ(x₁)),
    /// the witness/convexity grid and the gap constant. Exit 1 on any failure.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
struct PrimesArgs {
    /// Sieve bound
    #[arg(long)]
    limit: Option<u64>,
    /// Print the n-th prime
    #[arg(long)]
    nth: Vec<usize>,
    /// Print π(x)
    #[arg(long)]
    pi: Vec<f64>,
}

#[derive(Args, Debug)]
struct LiArgs {
    /// Evaluate li and Li at x
    #[arg(long)]
    x: Vec<f64>,
    /// Evaluate li⁻¹ at y
    #[arg(long)]
    inverse: Vec<f64>,
}

#[derive(Args, Debug)]
struct LandauArgs {
    /// Table bound
    #[arg(long)]
    max: Option<usize>,
    /// Print g(k) and its witness (defaults to --max)
    #[arg(long)]
    witness: Option<usize>,
}

#[derive(Args, Debug)]
struct ChebyArgs {
    /// Table bound
    #[arg(long)]
    xmax: Option<u64>,
    /// Points to evaluate at (default: xmax)
    #[arg(long)]
    at: Vec<f64>,
    /// Also fit the growth exponent of R over [LO, xmax]
    #[arg(long, value_name = "LO")]
    r_exponent: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TailKind {
    Majorant,
    Explicit,
}

impl FromStr for TailKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <TailKind as ValueEnum>::from_str(s, true)
    }
}

#[derive(Args, Debug, Clone)]
struct TailArgs {
    /// Bound on zeros above the table height
    #[arg(long, value_enum)]
    tail: Option<TailKind>,
    /// Slack factor for the majorant bound
    #[arg(long)]
    slack: Option<f64>,
    /// Constant added to the main term of N(t) in the majorant bound
    #[arg(long)]
    count_offset: Option<f64>,
}

#[derive(Args, Debug)]
struct ZerosArgs {
    /// One ordinate per line, ascending; '#' comments allowed
    #[arg(long)]
    file: Option<PathBuf>,
    /// Also print the table size, height, tail bound and assumptions
    #[arg(long)]
    report: bool,
    #[command(flatten)]
    tail: TailArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Csv,
    Json,
}

impl FromStr for Emit {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Emit as ValueEnum>::from_str(s, true)
    }
}

#[derive(Args, Debug)]
struct ChampionsArgs {
    /// Champions at every breakpoint up to this ρ
    #[arg(long)]
    rho_max: Option<f64>,
    /// Emit the witness grid instead
    #[arg(long)]
    witness: bool,
    /// Witness grid upper end
    #[arg(long)]
    xmax: Option<u64>,
    /// Witness grid size
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, value_enum)]
    emit: Option<Emit>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    from: Option<usize>,
    #[arg(long)]
    to: Option<usize>,
    /// Zero ordinates for the constant c
    #[arg(long)]
    zeros: Option<PathBuf>,
    #[arg(long, value_enum)]
    emit: Option<Emit>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    tail: TailArgs,
    /// Testing hook: mark the row for this n as failing
    #[arg(long, hide = true)]
    inject_fail: Option<usize>,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Zero ordinates for the constant c
    #[arg(long)]
    zeros: Option<PathBuf>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// Sweep bound for the row checks
    #[arg(long)]
    to: Option<usize>,
    /// Bound for π(m) <= li(m)
    #[arg(long)]
    pi_li_max: Option<u64>,
    /// Champions with ell up to this
    #[arg(long)]
    champion_ell_max: Option<u64>,
    #[arg(long)]
    witness_xmax: Option<u64>,
    #[arg(long)]
    witness_points: Option<usize>,
    /// Chebyshev table bound
    #[arg(long)]
    cheby_xmax: Option<u64>,
    #[command(flatten)]
    tail: TailArgs,
}

/// A validated invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub workers: usize,
    pub li: LiConfig,
    pub command: Command,
}

#[derive(Clone, Debug)]
pub enum Command {
    Primes {
        limit: u64,
        nth: Vec<usize>,
        pi: Vec<f64>,
    },
    Li {
        x: Vec<f64>,
        inverse: Vec<f64>,
    },
    Landau {
        max: usize,
        witness: usize,
    },
    Cheby {
        xmax: u64,
        at: Vec<f64>,
        r_exponent: Option<f64>,
    },
    Zeros {
        file: PathBuf,
        report: bool,
        tail: TailBound,
    },
    Champions {
        rho_max: f64,
        emit: Emit,
        out: Option<PathBuf>,
    },
    Witness {
        xmax: u64,
        points: usize,
        emit: Emit,
        out: Option<PathBuf>,
    },
    Verify {
        from: usize,
        to: usize,
        zeros: PathBuf,
        emit: Emit,
        out: Option<PathBuf>,
        tail: TailBound,
        inject_fail: Option<usize>,
    },
    Report {
        zeros: PathBuf,
        out: PathBuf,
        cfg: ReportConfig,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

const CONFIG_KEYS: &[&str] = &[
    "workers",
    "abs_tol",
    "inv_tol",
    "max_iter",
    "limit",
    "max",
    "witness",
    "xmax",
    "rho_max",
    "points",
    "file",
    "zeros",
    "from",
    "to",
    "emit",
    "out",
    "tail",
    "slack",
    "count_offset",
    "pi_li_max",
    "champion_ell_max",
    "witness_xmax",
    "witness_points",
    "cheby_xmax",
];

fn read_config(path: &PathBuf) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("config {}: {e}", path.display())))?;
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(CliError::usage(format!(
                "config {} line {}: expected key = value",
                path.display(),
                i + 1
            )));
        };
        let k = k.trim().replace('-', "_");
        if !CONFIG_KEYS.contains(&k.as_str()) {
            return Err(CliError::usage(format!(
                "config {} line {}: unknown key '{k}'",
                path.display(),
                i + 1
            )));
        }
        map.insert(k, v.trim().trim_matches('"').to_string());
    }
    Ok(map)
}

struct Defaults(BTreeMap<String, String>);

impl Defaults {
    fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.0.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|e| CliError::usage(format!("config key {key}: invalid value '{v}': {e}"))),
        }
    }

    fn require<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<T, CliError>
    where
        T::Err: std::fmt::Display,
    {
        self.pick(flag, key)?
            .ok_or_else(|| CliError::usage(format!("missing required --{}", key.replace('_', "-"))))
    }

    fn tail(&self, t: TailArgs) -> Result<TailBound, CliError> {
        let kind = self.pick(t.tail, "tail")?.unwrap_or(TailKind::Majorant);
        let slack = self.pick(t.slack, "slack")?;
        let offset = self.pick(t.count_offset, "count_offset")?;
        match kind {
            TailKind::Explicit => {
                if slack.is_some() || offset.is_some() {
                    return Err(CliError::usage(
                        "--slack and --count-offset apply to --tail majorant only",
                    ));
                }
                Ok(TailBound::Explicit)
            }
            TailKind::Majorant => {
                let TailBound::Majorant { count_offset, slack: s } = TailBound::default() else {
                    unreachable!("default tail bound is a majorant")
                };
                let slack = slack.unwrap_or(s);
                if slack.is_nan() || slack < 1.0 {
                    return Err(CliError::usage("--slack must be >= 1"));
                }
                Ok(TailBound::Majorant {
                    count_offset: offset.unwrap_or(count_offset),
                    slack,
                })
            }
        }
    }
}

fn positive<T: PartialOrd + Default + std::fmt::Display>(v: T, what: &str) -> Result<T, CliError> {
    if v > T::default() {
        Ok(v)
    } else {
        Err(CliError::usage(format!("--{what} must be positive (got {v})")))
    }
}

/// Parses `argv` (program name first) into a validated configuration.
///
/// `--help` and `--version` come back as an error with exit code 0 and the
/// text to print.
pub fn parse_args<I, S>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError {
        message: e.render().to_string(),
        code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
    })?;
    let d = Defaults(match &cli.config {
        Some(p) => read_config(p)?,
        None => BTreeMap::new(),
    });

    let workers = match d.pick(cli.workers, "workers")? {
        Some(w) => positive(w, "workers")?,
        None => default_worker_count(),
    };
    let mut li = LiConfig::default();
    if let Some(v) = d.pick(cli.abs_tol, "abs_tol")? {
        li.abs_tol = v;
    }
    if let Some(v) = d.pick(cli.inv_tol, "inv_tol")? {
        li.inv_tol = v;
    }
    if let Some(v) = d.pick(cli.max_iter, "max_iter")? {
        li.max_iter = v;
    }
    li.validate().map_err(|e| CliError::usage(e.to_string()))?;

    let command = match cli.cmd {
        Cmd::Primes(a) => Command::Primes {
            limit: positive(d.require(a.limit, "limit")?, "limit")?,
            nth: a.nth,
            pi: a.pi,
        },
        Cmd::Li(a) => {
            if a.x.is_empty() && a.inverse.is_empty() {
                return Err(CliError::usage("li: give at least one --x or --inverse"));
            }
            Command::Li {
                x: a.x,
                inverse: a.inverse,
            }
        }
        Cmd::Landau(a) => {
            let max = positive(d.require(a.max, "max")?, "max")?;
            let witness = d.pick(a.witness, "witness")?.unwrap_or(max);
            if witness > max {
                return Err(CliError::usage(format!("--witness {witness} exceeds --max {max}")));
            }
            Command::Landau { max, witness }
        }
        Cmd::Cheby(a) => {
            let xmax = d.require(a.xmax, "xmax")?;
            if xmax < 2 {
                return Err(CliError::usage("--xmax must be at least 2"));
            }
            Command::Cheby {
                xmax,
                at: a.at,
                r_exponent: a.r_exponent,
            }
        }
        Cmd::Zeros(a) => Command::Zeros {
            file: d.require(a.file, "file")?,
            report: a.report,
            tail: d.tail(a.tail)?,
        },
        Cmd::Champions(a) => {
            let emit = d.pick(a.emit, "emit")?.unwrap_or(Emit::Csv);
            let out = d.pick(a.out, "out")?;
            if a.witness {
                let xmax = d.require(a.xmax, "xmax")?;
                if xmax < 10 {
                    return Err(CliError::usage("--xmax must be at least 10 for the witness grid"));
                }
                Command::Witness {
                    xmax,
                    points: positive(d.pick(a.points, "points")?.unwrap_or(200), "points")?,
                    emit,
                    out,
                }
            } else {
                let rho_max = d.require(a.rho_max, "rho_max")?;
                if rho_max.is_nan() || rho_max < std::f64::consts::E {
                    return Err(CliError::usage("--rho-max must be at least e"));
                }
                Command::Champions { rho_max, emit, out }
            }
        }
        Cmd::Verify(a) => {
            let from = d.pick(a.from, "from")?.unwrap_or(1);
            let to = d.require(a.to, "to")?;
            if from == 0 || from > to {
                return Err(CliError::usage(format!("empty range: --from {from} --to {to}")));
            }
            Command::Verify {
                from,
                to,
                zeros: d.require(a.zeros, "zeros")?,
                emit: d.pick(a.emit, "emit")?.unwrap_or(Emit::Csv),
                out: d.pick(a.out, "out")?,
                tail: d.tail(a.tail)?,
                inject_fail: a.inject_fail,
            }
        }
        Cmd::Report(a) => {
            let mut cfg = ReportConfig {
                li: li.clone(),
                tail: d.tail(a.tail)?,
                ..ReportConfig::default()
            };
            if let Some(v) = d.pick(a.to, "to")? {
                cfg.to_n = v;
            }
            if let Some(v) = d.pick(a.pi_li_max, "pi_li_max")? {
                cfg.pi_li_max = v;
            }
            if let Some(v) = d.pick(a.champion_ell_max, "champion_ell_max")? {
                cfg.champion_ell_max = v;
            }
            if let Some(v) = d.pick(a.witness_xmax, "witness_xmax")? {
                cfg.witness_x_max = v;
            }
            if let Some(v) = d.pick(a.witness_points, "witness_points")? {
                cfg.witness_points = v;
            }
            if let Some(v) = d.pick(a.cheby_xmax, "cheby_xmax")? {
                cfg.cheby_x_max = v;
            }
            cfg.validate().map_err(|e| CliError::usage(e.to_string()))?;
            Command::Report {
                zeros: d.require(a.zeros, "zeros")?,
                out: d.require(a.out, "out")?,
                cfg,
            }
        }
    };
    Ok(RunConfig { workers, li, command })
}

type Failure = (i32, String);

fn err(e: impl std::fmt::Display) -> Failure {
    (EXIT_USAGE, e.to_string())
}

fn emit_text(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| err(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(err),
    }
}

/// Runs the command, writing results to `stdout` and diagnostics to `stderr`;
/// returns the process exit code.
pub fn dispatch_to(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match run(cfg, stdout, stderr) {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(stderr, "landau-rh: {msg}");
            code
        }
    }
}

pub fn dispatch(cfg: &RunConfig) -> i32 {
    dispatch_to(cfg, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn run(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let workers = Workers::new(cfg.workers).map_err(err)?;
    let li_cfg = &cfg.li;
    let mut text = String::new();
    match &cfg.command {
        Command::Primes { limit, nth, pi } => {
            let t = build_prime_table(*limit).map_err(|e| err(format!("primes: {e}")))?;
            let _ = writeln!(text, "limit = {limit}");
            let _ = writeln!(text, "count = {}", t.count());
            for &n in nth {
                let p = t.nth_prime(n).map_err(|e| err(format!("primes: {e}")))?;
                let _ = writeln!(text, "p_{n} = {p}");
            }
            for &x in pi {
                let c = t.prime_count(x).map_err(|e| err(format!("primes: {e}")))?;
                let _ = writeln!(text, "pi({}) = {c}", g15(x));
            }
        }
        Command::Li { x, inverse } => {
            for &v in x {
                let a = li(v, li_cfg).map_err(|e| err(format!("li: {e}")))?;
                let _ = writeln!(text, "li({}) = {}", g15(v), g15(a.to_f64()));
                if v >= 2.0 {
                    let b = Li(v, li_cfg).map_err(|e| err(format!("li: {e}")))?;
                    let _ = writeln!(text, "Li({}) = {}", g15(v), g15(b.to_f64()));
                }
            }
            for &y in inverse {
                let a = li_inverse(y, li_cfg).map_err(|e| err(format!("li: {e}")))?;
                let _ = writeln!(text, "li_inv({}) = {}", g15(y), g15(a.to_f64()));
            }
        }
        Command::Landau { max, witness } => {
            let pt =
                build_prime_table(landau_core::landau::prime_bound(*max)).map_err(|e| err(format!("landau: {e}")))?;
            let lt = build_landau_table(*max, &pt).map_err(|e| err(format!("landau: {e}")))?;
            let w = lt.witness(*witness).map_err(|e| err(format!("landau: {e}")))?;
            let g = landau_exact(*witness, &lt).map_err(|e| err(format!("landau: {e}")))?;
            let _ = writeln!(text, "g({witness}) = {g}");
            let _ = writeln!(text, "log_g({witness}) = {}", g15(lt.log_g(*witness).map_err(err)?));
            let _ = writeln!(text, "witness({witness}) = {w}");
            let _ = writeln!(text, "witness_sum({witness}) = {}", w.cost());
        }
        Command::Cheby { xmax, at, r_exponent } => {
            let pt = build_prime_table(*xmax).map_err(|e| err(format!("cheby: {e}")))?;
            let t = build_chebyshev_tables(*xmax, &pt, li_cfg, &workers).map_err(|e| err(format!("cheby: {e}")))?;
            let pts = if at.is_empty() { vec![*xmax as f64] } else { at.clone() };
            for x in pts {
                let ex = |e: landau_core::Error| err(format!("cheby: {e}"));
                let _ = writeln!(text, "theta({}) = {}", g15(x), g15(t.theta(x).map_err(ex)?));
                let _ = writeln!(text, "psi({}) = {}", g15(x), g15(t.psi(x).map_err(ex)?));
                let _ = writeln!(text, "Pi1({}) = {}", g15(x), g15(t.pi1(x).map_err(ex)?));
                let _ = writeln!(text, "R({}) = {}", g15(x), g15(t.r_envelope().eval(x).map_err(ex)?));
            }
            if let Some(lo) = r_exponent {
                let s = empirical_r_exponent(t.r_envelope(), *lo, 61).map_err(|e| err(format!("cheby: {e}")))?;
                let _ = writeln!(text, "R_exponent[{}, {xmax}] = {}", g15(*lo), g15(s));
            }
        }
        Command::Zeros { file, report, tail } => {
            let z = load_zeros_file(file).map_err(|e| err(format!("zeros {}: {e}", file.display())))?;
            let c = constant_c_with(&z, tail).map_err(|e| err(format!("zeros: {e}")))?;
            let _ = writeln!(text, "partial = {}", g15(c.partial));
            let _ = writeln!(text, "tail_hi = {}", g15(c.tail_hi));
            let _ = writeln!(text, "interval_lo = {}", g15(c.lo()));
            let _ = writeln!(text, "interval_hi = {}", g15(c.hi()));
            if *report {
                let _ = writeln!(text, "zeros = {}", c.zeros);
                let _ = writeln!(text, "height = {}", g15(c.height));
                let tail_desc = match tail {
                    TailBound::Majorant { count_offset, slack } => {
                        format!("majorant (count_offset {}, slack {})", g15(*count_offset), g15(*slack))
                    }
                    TailBound::Explicit => "explicit".to_string(),
                };
                let _ = writeln!(text, "tail_bound = {tail_desc}");
                let _ = writeln!(text, "assumption = {CRITICAL_LINE_NOTE}");
            }
        }
        Command::Champions { rho_max, emit, out } => {
            let x_top = x1_of_rho(*rho_max).map_err(|e| err(format!("champions: {e}")))?;
            let pt = build_prime_table(x_top.ceil() as u64 + 1).map_err(|e| err(format!("champions: {e}")))?;
            let seq = champion_sequence(*rho_max, &pt).map_err(|e| err(format!("champions: {e}")))?;
            let body = match emit {
                Emit::Csv => {
                    let mut s = format!("{CHAMPIONS_HEADER}\n");
                    for c in &seq {
                        s.push_str(&champion_csv_line(c));
                        s.push('\n');
                    }
                    s
                }
                Emit::Json => to_json15(&seq.iter().map(champion_json).collect::<Vec<_>>()),
            };
            emit_text(out, &body, stdout)?;
            return Ok(EXIT_OK);
        }
        Command::Witness {
            xmax,
            points,
            emit,
            out,
        } => {
            let pt = build_prime_table(*xmax).map_err(|e| err(format!("champions: {e}")))?;
            let t = build_chebyshev_tables(*xmax, &pt, li_cfg, &workers).map_err(|e| err(format!("champions: {e}")))?;
            let grid = log_grid(3.0, *xmax as f64, *points);
            let pts = workers
                .try_map_range(0..grid.len(), |i| witness_point(grid[i], &t, li_cfg))
                .map_err(|e| err(format!("champions: {e}")))?;
            let body = match emit {
                Emit::Csv => {
                    let mut s = format!("{WITNESS_HEADER}\n");
                    for p in &pts {
                        let _ = writeln!(s, "{},{},{}", g15(p.x1), g15(p.w), g15(p.li_psi_sq_minus_pi1));
                    }
                    s
                }
                Emit::Json => to_json15(&pts),
            };
            emit_text(out, &body, stdout)?;
            return Ok(EXIT_OK);
        }
        Command::Verify {
            from,
            to,
            zeros,
            emit,
            out,
            tail,
            inject_fail,
        } => {
            let z = load_zeros_file(zeros).map_err(|e| err(format!("zeros {}: {e}", zeros.display())))?;
            let c = constant_c_with(&z, tail).map_err(|e| err(format!("zeros: {e}")))?;
            let tables = prepare_tables(*to, &LandauConfig::default(), &SieveConfig::default())
                .map_err(|e| err(format!("verify: {e}")))?;
            let mut deps = tables.deps(li_cfg, Some(&c));
            deps.fault = *inject_fail;
            let mut csv = String::new();
            if *emit == Emit::Csv {
                csv.push_str(CSV_HEADER);
                csv.push('\n');
            }
            let report = run_range_with(*from, *to, &deps, &workers, |row| {
                if *emit == Emit::Csv {
                    csv.push_str(&row.csv_line());
                    csv.push('\n');
                }
                Ok(())
            })
            .map_err(|e| err(format!("verify: {e}")))?;
            let body = match emit {
                Emit::Csv => csv,
                Emit::Json => to_json15(&report),
            };
            emit_text(out, &body, stdout)?;
            let _ = writeln!(
                stderr,
                "verify: n in [{from}, {to}]: {} rows failed",
                report.rows_failed.len()
            );
            return Ok(if report.all_pass() { EXIT_OK } else { EXIT_FAILURES });
        }
        Command::Report { zeros, out, cfg: rc } => {
            let z = load_zeros_file(zeros).map_err(|e| err(format!("zeros {}: {e}", zeros.display())))?;
            let bundle = run_report(rc, &z, &workers).map_err(|e| err(format!("report: {e}")))?;
            bundle.write_to(out).map_err(|e| err(format!("report: {e}")))?;
            for (name, _) in &bundle.files {
                let _ = writeln!(text, "wrote {}", out.join(name).display());
            }
            let _ = writeln!(text, "failures = {}", bundle.failures);
            stdout.write_all(text.as_bytes()).map_err(err)?;
            return Ok(if bundle.failures == 0 { EXIT_OK } else { EXIT_FAILURES });
        }
    }
    stdout.write_all(text.as_bytes()).map_err(err)?;
    Ok(EXIT_OK)
}

fn champion_json(c: &landau_core::champions::Champion) -> serde_json::Value {
    serde_json::json!({
        "rho": c.rho,
        "x1": c.x1,
        "log_N": c.log_n,
        "ell": c.ell,
        "num_primes": c.num_primes(),
    })
}
