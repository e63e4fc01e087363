//! Closed-form bounding families for `sin(x)/x`, evaluated at `t = cos x`.
//!
//! All families equal 1 at `t = 1`. Near degenerate exponents the evaluation
//! moves to the log domain so the `p -> 0` and `q -> 0` limits are continuous.

use std::f64::consts::FRAC_2_PI;

use crate::error::{domain, Error, Result};
use crate::numeric::{exp_ratio, ln1p_ratio};

/// Exponents below this magnitude use the exact limiting formula.
pub const DEGENERATE: f64 = 1e-12;
/// Exponents below this magnitude are evaluated in the log domain.
pub const LOG_DOMAIN: f64 = 1e-4;

fn snap(v: f64) -> f64 {
    if v.abs() < DEGENERATE {
        0.0
    } else {
        v
    }
}

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t <= 1.0 {
        Ok(())
    } else {
        Err(domain("t", t, "0 < t <= 1"))
    }
}

fn check_finite(what: &'static str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(domain(what, v, "finite"))
    }
}

/// `(w a^q + (1-w) b^q)^{1/q}`, and `a^w b^{1-w}` at `q = 0`.
pub fn weighted_power_mean(a: f64, b: f64, q: f64, w: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(domain("a", a, "a > 0"));
    }
    if !(b > 0.0 && b.is_finite()) {
        return Err(domain("b", b, "b > 0"));
    }
    check_finite("q", q)?;
    check_finite("w", w)?;
    let in_region = (q >= 0.0 && w <= 1.0) || (q <= 0.0 && w >= 0.0);
    if !in_region {
        return Err(Error::Region(format!("(q, w) = ({q}, {w})")));
    }
    let q = snap(q);
    let z = w * exp_ratio(q, (a / b).ln());
    Ok(b * ln1p_ratio(q, z).exp())
}

/// `(1 - p/(kappa q) + p/(kappa q) t^q)^{1/p}` with its `p = 0` and `q = 0` limits.
///
/// `kappa = 3` gives the Cusa-type family; other values are used by the
/// half-angle inverse-trig bounds. No region check is made here.
pub(crate) fn scaled_cusa_mean(t: f64, p: f64, q: f64, kappa: f64) -> f64 {
    let (p, q) = (snap(p), snap(q));
    let l = t.ln();
    if q == 0.0 {
        return ln1p_ratio(p, l / kappa).exp();
    }
    if p == 0.0 {
        return (exp_ratio(q, l) / kappa).exp();
    }
    if p.abs() < LOG_DOMAIN || q.abs() < LOG_DOMAIN {
        return ln1p_ratio(p, exp_ratio(q, l) / kappa).exp();
    }
    let w = p / (kappa * q);
    let tq = t.powf(q);
    if tq.is_finite() {
        (1.0 + w * (tq - 1.0)).powf(1.0 / p)
    } else {
        // t^q overflows (q very negative): factor it out of the base
        let ql = q * l;
        let ln_base = ql + (w + (1.0 - w) * (-ql).exp()).ln();
        (ln_base / p).exp()
    }
}

/// Name of the evaluation path [`cusa_mean`] and its relatives take for `(p, q)`.
pub fn family_branch(p: f64, q: f64) -> &'static str {
    let (p, q) = (snap(p), snap(q));
    if q == 0.0 {
        "limit-q0"
    } else if p == 0.0 {
        "limit-p0"
    } else if p.abs() < LOG_DOMAIN || q.abs() < LOG_DOMAIN {
        "log-domain"
    } else {
        "direct"
    }
}

/// Cusa-type family `(1 - p/(3q) + p/(3q) t^q)^{1/p}` on the admissible region.
pub fn cusa_mean(t: f64, p: f64, q: f64) -> Result<f64> {
    check_t(t)?;
    check_finite("p", p)?;
    check_finite("q", q)?;
    if !crate::kernel::is_admissible(p, q) {
        return Err(Error::Region(format!("(p, q) = ({p}, {q})")));
    }
    Ok(scaled_cusa_mean(t, p, q, 3.0))
}

pub(crate) fn endpoint_mean_unchecked(t: f64, p: f64, q: f64) -> f64 {
    let p = snap(p);
    // t^q + (1 - t^q)(2/pi)^p in the form 1 + p z
    let z = -(q * t.ln()).exp_m1() * exp_ratio(p, FRAC_2_PI.ln());
    ln1p_ratio(p, z).exp()
}

/// Endpoint-anchored family `((2/pi)^p + (1 - (2/pi)^p) t^q)^{1/p}`, `q > 0`.
pub fn endpoint_mean(t: f64, p: f64, q: f64) -> Result<f64> {
    check_t(t)?;
    check_finite("p", p)?;
    check_finite("q", q)?;
    if q <= 0.0 {
        return Err(domain("q", q, "q > 0"));
    }
    Ok(endpoint_mean_unchecked(t, p, q))
}

pub fn is_kq_admissible(k: f64, q: f64) -> bool {
    (q <= 0.0 && k >= 0.0) || (q >= 0.0 && k <= 3.0)
}

/// `(1 - k/3 + k/3 t^q)^{1/(kq)}`: the Cusa-type family along `p = kq`.
pub fn cusa_mean_kq(t: f64, k: f64, q: f64) -> Result<f64> {
    check_t(t)?;
    check_finite("k", k)?;
    check_finite("q", q)?;
    if !is_kq_admissible(k, q) {
        return Err(Error::Region(format!("(k, q) = ({k}, {q})")));
    }
    Ok(scaled_cusa_mean(t, k * q, q, 3.0))
}

/// The Cusa-type family along `p = 3q - 8/5`, defined for every real `q`.
pub fn cusa_mean_line(t: f64, q: f64) -> Result<f64> {
    check_t(t)?;
    check_finite("q", q)?;
    Ok(line_unchecked(t, q))
}

pub(crate) fn line_unchecked(t: f64, q: f64) -> f64 {
    scaled_cusa_mean(t, 3.0 * (q - 8.0 / 15.0), q, 3.0)
}
