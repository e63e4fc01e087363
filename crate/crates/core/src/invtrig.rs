//! Bounds for `arcsin` and `arccos` obtained by substituting `x = arcsin t`
//! (or `arccos t`) into the Cusa-type inequalities, either at `x` directly or
//! at the half angle `x/2` where the ratio is pinned at `x = pi/4`.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::bounds::{endpoint_mean_unchecked, scaled_cusa_mean};
use crate::constants::quarter_constant;
use crate::error::{domain, Error, Result};
use crate::kernel::{endpoint_p, is_admissible, LINE_Q};
use crate::numeric::pow_deficit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Basic,
    HalfAngle,
    Classic,
}

impl Family {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "basic" => Some(Family::Basic),
            "halfangle" | "half-angle" => Some(Family::HalfAngle),
            "classic" | "carlson-classic" | "shafer-fink" => Some(Family::Classic),
            _ => None,
        }
    }
}

/// Which monotone regime of the ratio a parameter pair falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Clause {
    I,
    II,
    III,
    IV,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::I => "i",
            Clause::II => "ii",
            Clause::III => "iii",
            Clause::IV => "iv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InverseBoundPair {
    pub lower: f64,
    pub upper: f64,
    pub family: Family,
    /// `None` for the classical fixed-form bounds.
    pub clause: Option<Clause>,
    /// Set when one side is only the trivial bound (`sin x < x`).
    pub one_sided: bool,
}

const SLACK: f64 = 1e-12;

/// Clause for the direct substitution; requires the family to be a mean.
pub fn basic_clause(p: f64, q: f64) -> Option<Clause> {
    if !is_admissible(p, q) {
        return None;
    }
    let line = 3.0 * q - 1.6;
    if q >= 1.0 && p <= line + SLACK {
        Some(Clause::I)
    } else if q > LINE_Q && q <= 1.0 && p >= endpoint_p() - SLACK {
        Some(Clause::II)
    } else if q > 0.0 && q <= LINE_Q && p >= line - SLACK {
        Some(Clause::III)
    } else if q <= 0.0 && p >= line - SLACK {
        Some(Clause::IV)
    } else {
        None
    }
}

/// Largest `p` (exclusive) keeping the half-angle denominators positive.
pub fn halfangle_p_limit(q: f64) -> f64 {
    3.0 / pow_deficit(q, -0.5 * LN_2)
}

/// Clause for the half-angle substitution (no mean requirement).
pub fn halfangle_clause(p: f64, q: f64) -> Option<Clause> {
    let limit = halfangle_p_limit(q);
    if p.is_nan() || limit.is_nan() || p >= limit {
        return None;
    }
    let line = 3.0 * q - 1.6;
    if q >= 1.0 && p <= line + SLACK {
        Some(Clause::I)
    } else if q > LINE_Q && q <= 1.0 && p >= endpoint_p() - SLACK {
        Some(Clause::II)
    } else if q <= LINE_Q && p >= line - SLACK {
        Some(Clause::IV)
    } else {
        None
    }
}

fn no_clause(family: &str, p: f64, q: f64) -> Error {
    Error::Region(format!(
        "(p, q) = ({p}, {q}) satisfies no clause of the {family} bounds"
    ))
}

/// Cusa-type family at `c = cos x`, allowing `c = 0` where the limit is finite.
fn mean_at(c: f64, p: f64, q: f64) -> f64 {
    if c == 0.0 && q <= 0.0 {
        0.0
    } else {
        scaled_cusa_mean(c, p, q, 3.0)
    }
}

fn check_sin_arg(t: f64) -> Result<()> {
    if t > 0.0 && t <= 1.0 {
        Ok(())
    } else {
        Err(domain("t", t, "0 < t <= 1"))
    }
}

fn check_cos_arg(t: f64) -> Result<()> {
    if (0.0..1.0).contains(&t) {
        Ok(())
    } else {
        Err(domain("t", t, "0 <= t < 1"))
    }
}

/// `sin / M(cos)`; equal exponents use `3^{1/p} sin / (2 + cos^p)^{1/p}`,
/// which at `p = q = 1` is the classical expression operation for operation.
fn over_mean(sin: f64, cos: f64, p: f64, q: f64) -> f64 {
    if p == q && p.abs() >= 1e-4 && cos > 0.0 {
        let r = 1.0 / p;
        3f64.powf(r) * sin / (2.0 + cos.powf(p)).powf(r)
    } else {
        sin / mean_at(cos, p, q)
    }
}

/// `sin x`, `cos x` known; bounds on `x` from `sin x / x` versus the families.
fn basic_pair(sin: f64, cos: f64, p: f64, q: f64) -> Result<InverseBoundPair> {
    let clause = basic_clause(p, q).ok_or_else(|| no_clause("basic", p, q))?;
    let via_m = over_mean(sin, cos, p, q);
    let (lower, upper, one_sided) = match clause {
        Clause::I => (via_m, sin / endpoint_mean_unchecked(cos, p, q), false),
        Clause::II | Clause::III => (sin / endpoint_mean_unchecked(cos, p, q), via_m, false),
        Clause::IV => (sin, via_m, true),
    };
    Ok(InverseBoundPair {
        lower,
        upper,
        family: Family::Basic,
        clause: Some(clause),
        one_sided,
    })
}

pub fn arcsin_bounds_basic(t: f64, p: f64, q: f64) -> Result<InverseBoundPair> {
    check_sin_arg(t)?;
    basic_pair(t, ((1.0 - t) * (1.0 + t)).sqrt(), p, q)
}

pub fn arccos_bounds_basic(t: f64, p: f64, q: f64) -> Result<InverseBoundPair> {
    check_cos_arg(t)?;
    basic_pair(((1.0 - t) * (1.0 + t)).sqrt(), t, p, q)
}

/// `2 sin(x/2)` and `cos(x/2)` known; bounds on `x`.
fn halfangle_pair(chord: f64, half_cos: f64, p: f64, q: f64) -> Result<InverseBoundPair> {
    let clause = halfangle_clause(p, q).ok_or_else(|| no_clause("half-angle", p, q))?;
    let at_three = chord / scaled_cusa_mean(half_cos, p, q, 3.0);
    let at_quarter = chord / scaled_cusa_mean(half_cos, p, q, quarter_constant(p, q));
    let (lower, upper) = match clause {
        Clause::I => (at_three, at_quarter),
        _ => (at_quarter, at_three),
    };
    Ok(InverseBoundPair {
        lower,
        upper,
        family: Family::HalfAngle,
        clause: Some(clause),
        one_sided: false,
    })
}

pub fn arcsin_bounds_halfangle(t: f64, p: f64, q: f64) -> Result<InverseBoundPair> {
    check_sin_arg(t)?;
    let (rp, rm) = ((1.0 + t).sqrt(), (1.0 - t).sqrt());
    // sqrt(1+t) - sqrt(1-t) without cancellation
    let chord = 2.0 * t / (rp + rm);
    halfangle_pair(chord, 0.5 * (rp + rm), p, q)
}

pub fn arccos_bounds_halfangle(t: f64, p: f64, q: f64) -> Result<InverseBoundPair> {
    check_cos_arg(t)?;
    let chord = (2.0 * (1.0 - t)).sqrt();
    halfangle_pair(chord, (0.5 * (1.0 + t)).sqrt(), p, q)
}

/// `3t/(2 + sqrt(1-t^2)) < arcsin t < pi t/(2 + sqrt(1-t^2))`.
pub fn arcsin_bounds_classic(t: f64) -> Result<InverseBoundPair> {
    check_sin_arg(t)?;
    let den = 2.0 + ((1.0 - t) * (1.0 + t)).sqrt();
    Ok(InverseBoundPair {
        lower: 3.0 * t / den,
        upper: PI * t / den,
        family: Family::Classic,
        clause: None,
        one_sided: false,
    })
}

/// `6 (sqrt(1+t) - sqrt(1-t)) / (4 + sqrt(1+t) + sqrt(1-t))`, a lower bound for `arcsin t`.
pub fn arcsin_halfangle_classic_lower(t: f64) -> Result<f64> {
    check_sin_arg(t)?;
    let (rp, rm) = ((1.0 + t).sqrt(), (1.0 - t).sqrt());
    Ok(6.0 * (2.0 * t / (rp + rm)) / (4.0 + rp + rm))
}

/// `6 sqrt(1-t)/(2 sqrt 2 + sqrt(1+t)) < arccos t < 2^{2/3} sqrt(1-t)/(1+t)^{1/6}`.
pub fn arccos_bounds_classic(t: f64) -> Result<InverseBoundPair> {
    check_cos_arg(t)?;
    let (rm, rp) = ((1.0 - t).sqrt(), (1.0 + t).sqrt());
    Ok(InverseBoundPair {
        lower: 6.0 * rm / (2.0 * std::f64::consts::SQRT_2 + rp),
        upper: 4f64.cbrt() * rm / (1.0 + t).powf(1.0 / 6.0),
        family: Family::Classic,
        clause: None,
        one_sided: false,
    })
}

pub fn arcsin_bounds(family: Family, t: f64, p: f64, q: f64) -> Result<InverseBoundPair> {
    match family {
        Family::Basic => arcsin_bounds_basic(t, p, q),
        Family::HalfAngle => arcsin_bounds_halfangle(t, p, q),
        Family::Classic => arcsin_bounds_classic(t),
    }
}

pub fn arccos_bounds(family: Family, t: f64, p: f64, q: f64) -> Result<InverseBoundPair> {
    match family {
        Family::Basic => arccos_bounds_basic(t, p, q),
        Family::HalfAngle => arccos_bounds_halfangle(t, p, q),
        Family::Classic => arccos_bounds_classic(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn basic_endpoint_example() {
        let b = arcsin_bounds_basic(1.0, 1.0, 1.0).unwrap();
        assert!((b.lower - 1.5).abs() < 1e-15);
        assert!((b.upper - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(b.clause, Some(Clause::I));
    }

    #[test]
    fn classic_carlson_near_zero() {
        let b = arccos_bounds_classic(1e-12).unwrap();
        assert!((b.lower - 6.0 / (2.0 * 2f64.sqrt() + 1.0)).abs() < 1e-9);
        assert!((b.upper - 4f64.cbrt()).abs() < 1e-9);
        assert!(b.lower < FRAC_PI_2 && FRAC_PI_2 < b.upper);
    }

    #[test]
    fn halfangle_upper_is_exact_at_the_end() {
        for &(p, q) in &[(1.0, 1.0), (0.0, 1.0), (-1.0, 2.0), (1.0, 1.5)] {
            let b = arcsin_bounds_halfangle(1.0, p, q).unwrap();
            assert!((b.upper - FRAC_PI_2).abs() < 1e-14, "{p} {q} {b:?}");
            // arcsin(1 - 1e-10) itself sits 1.4e-5 below pi/2
            let t = 1.0 - 1e-10;
            let b = arcsin_bounds_halfangle(t, p, q).unwrap();
            assert!(b.upper >= t.asin() && b.upper - t.asin() < 1e-6, "{p} {q} {b:?}");
            let c = arccos_bounds_halfangle(0.0, p, q).unwrap();
            assert!((c.upper - FRAC_PI_2).abs() < 1e-12, "{p} {q} {c:?}");
        }
    }

    #[test]
    fn clauses_reject_gaps() {
        assert!(arcsin_bounds_basic(0.5, 1.44, 1.0).is_err());
        assert!(arcsin_bounds_halfangle(0.5, 100.0, 1.0).is_err());
        assert_eq!(halfangle_clause(0.0, 0.5), Some(Clause::IV));
    }
}
