//! Ordinates of the first nontrivial zeta zeros, for use as test data.
//!
//! Zeros are located as sign changes of Hardy's `Z(t)` evaluated with the
//! Riemann–Siegel formula (four correction terms), walking Gram blocks and
//! using Rosser's rule to know how many sign changes each block must hold.
//! Rosser's rule is known to hold well past the heights generated here, so a
//! block that cannot be completed is reported as an error rather than skipped.

use std::f64::consts::PI;
use std::fmt;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

mod coefficients;

/// Riemann–Siegel theta function.
pub fn theta(t: f64) -> f64 {
    let t2 = t * t;
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t2)
        + 31.0 / (80640.0 * t * t2 * t2)
}

fn theta_prime(t: f64) -> f64 {
    0.5 * (t / (2.0 * PI)).ln() - 1.0 / (48.0 * t * t)
}

fn horner(c: &[f64], z: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * z + v)
}

/// Evaluates `Z(t)`, caching `ln n` and `n^{-1/2}` for the main sum.
#[derive(Debug, Default)]
pub struct HardyZ {
    ln: Vec<f64>,
    rsqrt: Vec<f64>,
}

impl HardyZ {
    pub fn new() -> Self {
        Self::default()
    }

    fn grow(&mut self, n: usize) {
        while self.ln.len() < n {
            let k = (self.ln.len() + 1) as f64;
            self.ln.push(k.ln());
            self.rsqrt.push(1.0 / k.sqrt());
        }
    }

    /// `Z(t)` for `t >= 2π`; absolute error is below 1e-4 at `t = 14` and
    /// falls quickly with `t`.
    pub fn eval(&mut self, t: f64) -> f64 {
        let a = (t / (2.0 * PI)).sqrt();
        let n = a.floor() as usize;
        self.grow(n);
        let th = theta(t);
        let mut sum = 0.0;
        for k in 0..n {
            sum += (th - t * self.ln[k]).cos() * self.rsqrt[k];
        }
        let z = a - n as f64 - 0.5;
        let corr = horner(&coefficients::C0, z)
            + (horner(&coefficients::C1, z) + (horner(&coefficients::C2, z) + horner(&coefficients::C3, z) / a) / a)
                / a;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        2.0 * sum + sign * corr / a.sqrt()
    }
}

/// `Z(t)`; see [`HardyZ::eval`].
pub fn hardy_z(t: f64) -> f64 {
    HardyZ::new().eval(t)
}

/// The Gram point `g_n`, `θ(g_n) = nπ`, for `n >= -1`.
pub fn gram_point(n: i64) -> f64 {
    assert!(n >= -1, "gram points are defined for n >= -1");
    // Asymptotic seed t ≈ 2π·m/ln(m/e) with m = n + 1/8 + 1, then Newton.
    let m = (n as f64 + 1.125).max(1.0);
    let seed = 2.0 * PI * m / (m / std::f64::consts::E).ln().max(0.5);
    refine_gram(n, seed.max(9.0))
}

fn refine_gram(n: i64, mut t: f64) -> f64 {
    let target = n as f64 * PI;
    for _ in 0..50 {
        let step = (theta(t) - target) / theta_prime(t);
        t -= step;
        if step.abs() <= 1e-13 * t {
            break;
        }
    }
    t
}

#[derive(Debug)]
pub enum FixtureError {
    /// A Gram block held fewer sign changes than its length after subdivision.
    IncompleteBlock {
        start: f64,
        end: f64,
        expected: usize,
        found: usize,
    },
    Io(io::Error),
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::IncompleteBlock {
                start,
                end,
                expected,
                found,
            } => write!(
                f,
                "gram block [{start}, {end}] should hold {expected} zeros, found {found}"
            ),
            FixtureError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FixtureError {}

impl From<io::Error> for FixtureError {
    fn from(e: io::Error) -> Self {
        FixtureError::Io(e)
    }
}

const MAX_SUBDIVISION: usize = 256;
const ROOT_TOL: f64 = 1e-9;

/// Illinois regula falsi on a bracket with `fa·fb < 0`.
fn refine_root(zf: &mut HardyZ, mut a: f64, mut fa: f64, mut b: f64, mut fb: f64) -> f64 {
    let mut side = 0i8;
    for _ in 0..100 {
        if (b - a).abs() <= ROOT_TOL {
            break;
        }
        let c = (a * fb - b * fa) / (fb - fa);
        let c = if c > a && c < b { c } else { 0.5 * (a + b) };
        let fc = zf.eval(c);
        if fc == 0.0 {
            return c;
        }
        if (fc < 0.0) == (fb < 0.0) {
            b = c;
            fb = fc;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        } else {
            a = c;
            fa = fc;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        }
    }
    if fa.abs() < fb.abs() {
        a
    } else {
        b
    }
}

/// Sign changes of `Z` on the sampled points, as brackets.
fn brackets(ts: &[f64], zs: &[f64]) -> Vec<(usize, usize)> {
    (1..ts.len())
        .filter(|&i| (zs[i - 1] < 0.0) != (zs[i] < 0.0))
        .map(|i| (i - 1, i))
        .collect()
}

/// Zeros in a Gram block `[g_j, g_k]` that must hold exactly `k - j` of them.
fn solve_block(zf: &mut HardyZ, grams: &[f64], zgram: &[f64], out: &mut Vec<f64>) -> Result<(), FixtureError> {
    let expected = grams.len() - 1;
    let mut ts = grams.to_vec();
    let mut zs = zgram.to_vec();
    let mut per = 1;
    loop {
        let found = brackets(&ts, &zs);
        if found.len() >= expected {
            for (i, j) in found.into_iter().take(expected) {
                out.push(refine_root(zf, ts[i], zs[i], ts[j], zs[j]));
            }
            return Ok(());
        }
        if per >= MAX_SUBDIVISION {
            return Err(FixtureError::IncompleteBlock {
                start: grams[0],
                end: grams[expected],
                expected,
                found: found.len(),
            });
        }
        // Halve every sample interval.
        per *= 2;
        let mut nts = Vec::with_capacity(2 * ts.len());
        let mut nzs = Vec::with_capacity(2 * ts.len());
        for i in 0..ts.len() - 1 {
            nts.push(ts[i]);
            nzs.push(zs[i]);
            let mid = 0.5 * (ts[i] + ts[i + 1]);
            nts.push(mid);
            nzs.push(zf.eval(mid));
        }
        nts.push(ts[ts.len() - 1]);
        nzs.push(zs[zs.len() - 1]);
        ts = nts;
        zs = nzs;
    }
}

fn gram_good(n: i64, z: f64) -> bool {
    let parity = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    parity * z > 0.0
}

/// The first `count` positive zero ordinates, ascending.
pub fn generate_ordinates(count: usize) -> Result<Vec<f64>, FixtureError> {
    let mut zf = HardyZ::new();
    let mut out = Vec::with_capacity(count + 8);
    let mut n = -1i64;
    let mut g = gram_point(-1);
    let mut zg = zf.eval(g);
    debug_assert!(gram_good(n, zg));
    let mut grams = vec![g];
    let mut zgram = vec![zg];
    while out.len() < count {
        let next = refine_gram(n + 1, g + PI / theta_prime(g));
        n += 1;
        g = next;
        zg = zf.eval(g);
        grams.push(g);
        zgram.push(zg);
        if gram_good(n, zg) {
            solve_block(&mut zf, &grams, &zgram, &mut out)?;
            grams.clear();
            zgram.clear();
            grams.push(g);
            zgram.push(zg);
        }
    }
    out.truncate(count);
    Ok(out)
}

pub fn write_ordinates(path: &Path, gammas: &[f64]) -> io::Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(
        w,
        "# first {} zeta zero ordinates (Riemann-Siegel, Gram blocks)",
        gammas.len()
    )?;
    for g in gammas {
        writeln!(w, "{g:.9}")?;
    }
    w.flush()
}

/// Path of a file holding the first `count` ordinates inside `dir`, generating
/// it on first use.
pub fn cached_ordinates(dir: &Path, count: usize) -> Result<PathBuf, FixtureError> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("zeta_zeros_{count}.txt"));
    if path.exists() {
        return Ok(path);
    }
    let gammas = generate_ordinates(count)?;
    let tmp = dir.join(format!("zeta_zeros_{count}.txt.{}", std::process::id()));
    write_ordinates(&tmp, &gammas)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}
