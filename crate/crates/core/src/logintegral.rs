//! The logarithmic integral `li(x)`, the offset form `Li(x) = li(x) - li(2)` and
//! the inverse `li⁻¹(y)`, all in double-double precision.
//!
//! `li` is evaluated from the exponential-integral series in `u = ln x`,
//!
//! ```text
//! li(x) = γ + ln u + Σ_{k≥1} u^k / (k·k!)
//! ```
//!
//! whose terms are all positive for `x > 1`. Above a configurable crossover in
//! `u` the asymptotic expansion `(x/u)·Σ k!/u^k`, truncated at its smallest
//! term, takes over; at the default crossover its relative error is below
//! `e^-300`.

use crate::error::{Error, Result};
use crate::ext::{Dd, EULER_GAMMA};

/// Ramanujan–Soldner constant, the positive root of `li`.
pub const SOLDNER: Dd = Dd::from_parts(1.451369234883381, -4.82713642696033e-17);
/// `li(2)`.
pub const LI_2: Dd = Dd::from_parts(1.045163780117493, -1.0616403481185999e-16);

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct LiConfig {
    /// Absolute tolerance for `li`. Results are also never worse than about
    /// 1e-30 relative, which is the binding limit once `li(x)` exceeds 1e18.
    pub abs_tol: f64,
    /// Residual tolerance `|li(x) - y|` for the inverse.
    pub inv_tol: f64,
    pub max_iter: usize,
    /// Switch to the asymptotic expansion once `ln x` exceeds this.
    pub asymptotic_crossover: f64,
}

impl Default for LiConfig {
    fn default() -> Self {
        LiConfig {
            abs_tol: 1e-12,
            inv_tol: 1e-9,
            max_iter: 100,
            asymptotic_crossover: 300.0,
        }
    }
}

impl LiConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.inv_tol > 0.0) || self.max_iter == 0 {
            return Err(Error::invalid(
                "LiConfig",
                "abs_tol, inv_tol must be > 0 and max_iter >= 1",
            ));
        }
        if !(self.asymptotic_crossover > 0.0) || self.asymptotic_crossover > 700.0 {
            return Err(Error::invalid("LiConfig", "asymptotic_crossover must lie in (0, 700]"));
        }
        Ok(())
    }
}

const SERIES_EPS: f64 = 1e-33;

/// `li(x)` for `x > 1`.
pub fn li(x: impl Into<Dd>, cfg: &LiConfig) -> Result<Dd> {
    let x = x.into();
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::Domain {
            func: "li",
            value: x.to_f64(),
            expected: "1 < x < inf",
        });
    }
    let u = x.ln();
    if u.hi() > cfg.asymptotic_crossover {
        return li_asymptotic(x, u, cfg);
    }
    li_series(u, cfg)
}

fn li_series(u: Dd, cfg: &LiConfig) -> Result<Dd> {
    let budget = (3.0 * u.hi()).ceil() as usize + 200;
    let mut term = Dd::ONE; // u^k / k!
    let mut sum = Dd::ZERO;
    for k in 1..=budget {
        let kf = k as f64;
        term = term * u / kf;
        let add = term / kf;
        sum += add;
        // Past k > u the terms shrink at least geometrically with ratio u/(k+1).
        if kf > u.hi() && add.hi() <= SERIES_EPS * sum.hi().abs().max(1.0) {
            return Ok(EULER_GAMMA + u.ln() + sum);
        }
    }
    if (term / budget as f64).hi() < cfg.abs_tol {
        return Ok(EULER_GAMMA + u.ln() + sum);
    }
    Err(Error::NonConvergence {
        func: "li series",
        iterations: budget,
    })
}

fn li_asymptotic(x: Dd, u: Dd, cfg: &LiConfig) -> Result<Dd> {
    let mut term = Dd::ONE; // k! / u^k
    let mut sum = Dd::ONE;
    let limit = cfg.max_iter.max(u.hi() as usize);
    for k in 1..=limit {
        let next = term * (k as f64) / u;
        if next.hi() >= term.hi() {
            // smallest term reached
            break;
        }
        term = next;
        sum += term;
        if term.hi() < SERIES_EPS {
            break;
        }
    }
    Ok(x / u * sum)
}

/// `Li(x) = li(x) - li(2)` for `x >= 2`.
#[allow(non_snake_case)]
pub fn Li(x: impl Into<Dd>, cfg: &LiConfig) -> Result<Dd> {
    let x = x.into();
    if !(x >= 2.0) {
        return Err(Error::Domain {
            func: "Li",
            value: x.to_f64(),
            expected: "x >= 2",
        });
    }
    if x == 2.0 {
        return Ok(Dd::ZERO);
    }
    Ok(li(x, cfg)? - LI_2)
}

/// `1 / ln x`, the derivative of `li`.
fn li_prime(x: Dd) -> Dd {
    x.ln().recip()
}

/// The unique `x >= μ` with `li(x) = y`.
///
/// Safeguarded Newton on `li(x) - y` inside the bracket
/// `[max(2, y), max(4, 2y·ln(max(y, 3)))]`; the upper end is doubled until the
/// root is enclosed and the lower end falls back to `μ` when `li(lo) > y`.
pub fn li_inverse(y: impl Into<Dd>, cfg: &LiConfig) -> Result<Dd> {
    let y = y.into();
    if !(y >= 0.0) || !y.is_finite() {
        return Err(Error::Domain {
            func: "li_inverse",
            value: y.to_f64(),
            expected: "0 <= y < inf",
        });
    }
    if y == 0.0 {
        return Ok(SOLDNER);
    }
    let yf = y.to_f64();
    let mut lo = Dd::from(yf.max(2.0));
    let mut hi = Dd::from((2.0 * yf * yf.max(3.0).ln()).max(4.0));
    if li(lo, cfg)? > y {
        lo = SOLDNER;
    }
    let mut widen = 0;
    while li(hi, cfg)? < y {
        lo = hi;
        hi = hi * 2.0;
        widen += 1;
        if widen > 2000 {
            return Err(Error::NonConvergence {
                func: "li_inverse bracket",
                iterations: widen,
            });
        }
    }

    // li is increasing and concave, so a Newton step from a guess close to
    // y·ln y lands right of the root and the iterates then decrease monotonically.
    let guess = if yf > 3.0 {
        let l = yf.ln();
        yf * (l + l.ln())
    } else {
        yf + 2.0
    };
    let mut x = Dd::from(guess.clamp(lo.to_f64(), hi.to_f64()));
    for _ in 0..cfg.max_iter {
        let f = li(x, cfg)? - y;
        if f > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let step = f / li_prime(x);
        let mut next = x - step;
        if !(next > lo && next < hi) {
            next = (lo + hi) * 0.5;
        }
        let converged = f.abs() <= cfg.inv_tol && step.abs().hi() <= 1e-26 * x.hi();
        if converged || next == x || hi.to_f64() - lo.to_f64() <= 1e-30 * x.hi() {
            return Ok(x);
        }
        x = next;
    }
    let f = li(x, cfg)? - y;
    if f.abs() <= cfg.inv_tol {
        return Ok(x);
    }
    Err(Error::NonConvergence {
        func: "li_inverse",
        iterations: cfg.max_iter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> LiConfig {
        LiConfig::default()
    }

    #[test]
    fn soldner_point_is_a_root() {
        assert!(li(SOLDNER, &cfg()).unwrap().abs() < 1e-12);
    }

    #[test]
    fn li_two() {
        let v = li(2.0, &cfg()).unwrap();
        assert!((v - LI_2).abs() < 1e-12);
        assert!((v.to_f64() - 1.0451637801).abs() < 1e-10);
    }

    #[test]
    fn li_is_increasing() {
        assert!(li(10.0, &cfg()).unwrap() > li(5.0, &cfg()).unwrap());
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(li(1.0, &cfg()), Err(Error::Domain { .. })));
        assert!(li(0.5, &cfg()).is_err());
        assert!(li(f64::NAN, &cfg()).is_err());
        assert!(Li(1.9, &cfg()).is_err());
        assert!(li_inverse(-1.0, &cfg()).is_err());
    }

    #[test]
    fn offset_form() {
        assert_eq!(Li(2.0, &cfg()).unwrap(), Dd::ZERO);
        let d = Li(10.0, &cfg()).unwrap() - (li(10.0, &cfg()).unwrap() - li(2.0, &cfg()).unwrap());
        assert!(d.abs() < 1e-25);
    }

    #[test]
    fn inverse_identities() {
        let y = li(10.0, &cfg()).unwrap();
        let x = li_inverse(y, &cfg()).unwrap();
        assert!((x - 10.0).abs() < 1e-20);
        assert_eq!(li_inverse(0.0, &cfg()).unwrap(), SOLDNER);
        let tiny = li_inverse(1e-6, &cfg()).unwrap();
        assert!(tiny > SOLDNER && tiny < 1.46);
    }

    #[test]
    fn inverse_above_n_log_n_past_forty() {
        for n in 41..=10_000u64 {
            let x = li_inverse(n as f64, &cfg()).unwrap();
            let nf = n as f64;
            assert!(x.to_f64() > nf * nf.ln(), "n = {n}");
        }
    }

    #[test]
    fn asymptotic_branch_agrees_with_series_at_crossover() {
        let mut low = cfg();
        low.asymptotic_crossover = 60.0;
        let x = Dd::from(65.0).exp();
        let a = li(x, &low).unwrap();
        let s = li(x, &cfg()).unwrap();
        assert!(((a - s) / s).abs() < 1e-24);
    }

    #[test]
    fn bad_config_is_rejected() {
        let mut c = cfg();
        c.max_iter = 0;
        assert!(c.validate().is_err());
        assert!(cfg().validate().is_ok());
    }
}
