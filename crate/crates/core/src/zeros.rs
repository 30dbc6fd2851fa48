//! Zeta-zero ordinates and the constant `c = Σ_ρ 1/|ρ(ρ+1)|`.
//!
//! Ordinates are read from a text file, one positive decimal per line in
//! ascending order (`#` comments and blank lines allowed). Every ingested zero
//! is taken to be simple and on the critical line, `ρ = 1/2 + iγ`, so each
//! ordinate together with its conjugate contributes
//! `2 / (sqrt(1/4 + γ²)·sqrt(9/4 + γ²))`.
//!
//! The zeros above the last ingested ordinate `T` are bounded through the
//! zero-counting function. Writing `g(t) = 2/t²`, which dominates each term,
//! and integrating by parts against any majorant `N(t) <= M(t) + E(t)`,
//!
//! ```text
//! Σ_{γ>T} g(γ) <= g(T)·(M(T) - N(T)) + ∫_T^∞ g·M' dt + ∫_T^∞ E·|g'| dt
//! ```
//!
//! with `∫_T^∞ g·M' dt = (ln(T/2π) + 1)/(πT)` for the Riemann–von Mangoldt main
//! term. This needs the ingested list to be complete up to `T`.

use std::f64::consts::PI;
use std::io::BufRead;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext::Dd;

pub const CRITICAL_LINE_NOTE: &str = "ingested ordinates are assumed to be simple zeros on Re(s) = 1/2";

#[derive(Clone, Debug)]
pub struct ZeroTable {
    gammas: Vec<f64>,
}

impl ZeroTable {
    pub fn from_ordinates(gammas: Vec<f64>) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::NoZeros);
        }
        for (i, &g) in gammas.iter().enumerate() {
            if !(g > 0.0) || !g.is_finite() {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("non-positive ordinate {g}"),
                });
            }
            if i > 0 && g <= gammas[i - 1] {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("ordinates not strictly ascending ({} then {g})", gammas[i - 1]),
                });
            }
        }
        if !(14.0..=14.2).contains(&gammas[0]) {
            return Err(Error::invalid(
                "zero table",
                format!("first ordinate {} is not the first zeta zero (14.1347...)", gammas[0]),
            ));
        }
        Ok(ZeroTable { gammas })
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    /// Largest ingested ordinate.
    pub fn height(&self) -> f64 {
        *self.gammas.last().expect("zero tables are non-empty")
    }

    pub fn prefix(&self, n: usize) -> Result<ZeroTable> {
        if n == 0 {
            return Err(Error::NoZeros);
        }
        Ok(ZeroTable {
            gammas: self.gammas[..n.min(self.len())].to_vec(),
        })
    }
}

pub fn load_zeros<R: BufRead>(reader: R) -> Result<ZeroTable> {
    let mut gammas = Vec::new();
    let mut prev: Option<(usize, f64)> = None;
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        let s = line.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let g: f64 = s.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("not a decimal ordinate: {s:?}"),
        })?;
        if !(g > 0.0) || !g.is_finite() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("non-positive ordinate {g}"),
            });
        }
        if let Some((pl, pg)) = prev {
            if g <= pg {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("ordinates not strictly ascending ({pg} on line {pl}, then {g})"),
                });
            }
        }
        prev = Some((lineno, g));
        gammas.push(g);
    }
    ZeroTable::from_ordinates(gammas)
}

pub fn load_zeros_file(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let f = std::fs::File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    load_zeros(std::io::BufReader::new(f))
}

/// How the contribution of zeros above the ingested height is bounded.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TailBound {
    /// `M(t) = (t/2π)·ln(t/2πe) + count_offset` taken as a majorant of `N(t)`,
    /// result scaled by `slack`.
    Majorant { count_offset: f64, slack: f64 },
    /// Main term `(t/2π)·ln(t/2πe) + 7/8` with Trudgian's explicit remainder
    /// `|E(t)| <= 0.112 ln t + 0.278 ln ln t + 2.510 + 0.2/t`.
    Explicit,
}

impl Default for TailBound {
    fn default() -> Self {
        TailBound::Majorant {
            count_offset: 2.0,
            slack: 1.1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CSum {
    pub partial: f64,
    pub tail_hi: f64,
    pub zeros: usize,
    pub height: f64,
    pub tail_bound: TailBound,
}

impl CSum {
    pub fn interval(&self) -> (f64, f64) {
        (self.partial, self.partial + self.tail_hi)
    }

    pub fn lo(&self) -> f64 {
        self.partial
    }

    pub fn hi(&self) -> f64 {
        self.partial + self.tail_hi
    }

    pub fn midpoint(&self) -> f64 {
        self.partial + 0.5 * self.tail_hi
    }

    pub fn width(&self) -> f64 {
        self.tail_hi
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo() <= v && v <= self.hi()
    }
}

/// `2/|ρ(ρ+1)|` for `ρ = 1/2 + iγ`, the pair `ρ, ρ̄` together.
pub fn zero_pair_term(gamma: f64) -> f64 {
    let g2 = gamma * gamma;
    2.0 / ((0.25 + g2).sqrt() * (2.25 + g2).sqrt())
}

pub fn constant_c(table: &ZeroTable) -> Result<CSum> {
    constant_c_with(table, &TailBound::default())
}

pub fn constant_c_with(table: &ZeroTable, tail: &TailBound) -> Result<CSum> {
    if table.is_empty() {
        return Err(Error::NoZeros);
    }
    let partial = table
        .gammas
        .iter()
        .fold(Dd::ZERO, |acc, &g| acc + zero_pair_term(g))
        .to_f64();
    let t = table.height();
    let count = table.len() as f64;
    let main_integral = ((t / (2.0 * PI)).ln() + 1.0) / (PI * t);
    let g_t = 2.0 / (t * t);
    let tail_hi = match *tail {
        TailBound::Majorant { count_offset, slack } => {
            if !(slack >= 1.0) {
                return Err(Error::invalid("tail bound", "slack must be >= 1"));
            }
            let majorant = t / (2.0 * PI) * (t / (2.0 * PI * std::f64::consts::E)).ln() + count_offset;
            slack * (g_t * (majorant - count).max(0.0) + main_integral)
        }
        TailBound::Explicit => {
            let (lt, llt) = (t.ln(), t.ln().ln());
            let main = t / (2.0 * PI) * (t / (2.0 * PI * std::f64::consts::E)).ln() + 0.875;
            // ∫_T^∞ E(t)·4/t³ dt, with ln ln t bounded by its tangent in ln t at T.
            let remainder = 0.112 * (2.0 * lt + 1.0) / (t * t)
                + 0.278 * (2.0 * llt + 1.0 / lt) / (t * t)
                + 2.0 * 2.510 / (t * t)
                + 4.0 * 0.2 / (3.0 * t * t * t);
            (g_t * (main - count) + main_integral + remainder).max(0.0)
        }
    };
    Ok(CSum {
        partial,
        tail_hi,
        zeros: table.len(),
        height: t,
        tail_bound: *tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIRST: &str = "14.134725142\n21.022039639\n25.010857580\n30.424876126\n32.935061588\n";

    #[test]
    fn parses_plain_stream() {
        let t = load_zeros("14.134725\n21.022040\n".as_bytes()).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.height(), 21.022040);
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = load_zeros("# first zeros\n\n14.134725\n  \n# more\n21.022040\n".as_bytes()).unwrap();
        assert_eq!(t.gammas(), &[14.134725, 21.022040]);
    }

    #[test]
    fn empty_stream_is_an_error() {
        let e = load_zeros("".as_bytes()).unwrap_err();
        assert_eq!(e.to_string(), "no zeros");
        assert!(matches!(load_zeros("# nothing\n\n".as_bytes()), Err(Error::NoZeros)));
    }

    #[test]
    fn descending_pair_names_the_line() {
        let e = load_zeros("14.134725\n21.022040\n# c\n20.0\n".as_bytes()).unwrap_err();
        match e {
            Error::Parse { line, .. } => assert_eq!(line, 4),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn bad_tokens() {
        assert!(matches!(
            load_zeros("14.13\nabc\n".as_bytes()),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            load_zeros("-14.13\n".as_bytes()),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(load_zeros("3.0\n".as_bytes()), Err(Error::Invalid { .. })));
    }

    #[test]
    fn single_term_arithmetic() {
        let t = load_zeros("14.134725\n".as_bytes()).unwrap();
        let c = constant_c(&t).unwrap();
        assert!((c.partial - 0.009948).abs() < 5e-7, "{}", c.partial);
        assert!(c.tail_hi > 0.0);
    }

    #[test]
    fn partial_is_monotone_and_intervals_nest_the_full_sum() {
        let full = load_zeros(FIRST.as_bytes()).unwrap();
        let all = constant_c(&full).unwrap();
        let mut prev = 0.0;
        for n in 1..=full.len() {
            let c = constant_c(&full.prefix(n).unwrap()).unwrap();
            assert!(c.partial >= prev);
            prev = c.partial;
            assert!(c.contains(all.partial));
            let e = constant_c_with(&full.prefix(n).unwrap(), &TailBound::Explicit).unwrap();
            assert!(e.contains(all.partial));
        }
    }

    #[test]
    fn slack_below_one_rejected() {
        let t = load_zeros(FIRST.as_bytes()).unwrap();
        let bad = TailBound::Majorant {
            count_offset: 2.0,
            slack: 0.5,
        };
        assert!(constant_c_with(&t, &bad).is_err());
    }
}
