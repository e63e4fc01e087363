//! Bivariate means and their two-sided estimates.
//!
//! Every mean here can be written as `SB(m, M)` for a pair of simpler means,
//! where `SB` is the Schwab-Borchardt mean, so the trigonometric bounds on
//! `sin(x)/x` transfer through `x = arccos(m/M)`.

use serde::{Deserialize, Serialize};

use crate::bounds::{cusa_mean_kq, cusa_mean_line};
use crate::error::{domain, Error, Result};
use crate::numeric::ln_sinc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeanKind {
    Geometric,
    Arithmetic,
    Quadratic,
    /// `SB(G, A)`: `(a - b) / (2 arcsin((a - b)/(a + b)))`.
    SbGa,
    /// `SB(A, Q)`: `(a - b) / (2 arctan((a - b)/(a + b)))`.
    SbAq,
    /// `SB(G, Q)`: `(a - b) / (sqrt 2 arctan((a - b)/sqrt(2ab)))`.
    SbGq,
}

impl MeanKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "G" | "g" => Some(MeanKind::Geometric),
            "A" | "a" => Some(MeanKind::Arithmetic),
            "Q" | "q" => Some(MeanKind::Quadratic),
            "P" | "p" => Some(MeanKind::SbGa),
            "T" | "t" => Some(MeanKind::SbAq),
            "U" | "u" => Some(MeanKind::SbGq),
            _ => None,
        }
    }

    /// The pair `(m, M)` with `self = SB(m, M)`, for the three derived means.
    pub fn sb_pair(self) -> Option<(MeanKind, MeanKind)> {
        match self {
            MeanKind::SbGa => Some((MeanKind::Geometric, MeanKind::Arithmetic)),
            MeanKind::SbAq => Some((MeanKind::Arithmetic, MeanKind::Quadratic)),
            MeanKind::SbGq => Some((MeanKind::Geometric, MeanKind::Quadratic)),
            _ => None,
        }
    }
}

/// Relative gap below which the derived means use their equal-argument limit.
pub const NEAR_EQUAL: f64 = 1e-8;

fn check_pair(a: f64, b: f64) -> Result<()> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(domain("a", a, "a > 0"));
    }
    if !(b > 0.0 && b.is_finite()) {
        return Err(domain("b", b, "b > 0"));
    }
    Ok(())
}

/// `z / arctan z` with its small-argument limit.
fn z_over_atan(z: f64) -> f64 {
    if z.abs() < NEAR_EQUAL {
        1.0 + z * z / 3.0
    } else {
        z / z.atan()
    }
}

pub fn mean(kind: MeanKind, a: f64, b: f64) -> Result<f64> {
    check_pair(a, b)?;
    let am = 0.5 * (a + b);
    Ok(match kind {
        MeanKind::Geometric => (a * b).sqrt(),
        MeanKind::Arithmetic => am,
        MeanKind::Quadratic => (0.5 * (a * a + b * b)).sqrt(),
        // arcsin z = atan2(a - b, 2 sqrt(ab)) stays well conditioned as z -> 1
        MeanKind::SbGa => {
            let z = (a - b) / (a + b);
            if z.abs() < NEAR_EQUAL {
                am * (1.0 - z * z / 6.0)
            } else {
                (a - b) / (2.0 * (a - b).atan2(2.0 * (a * b).sqrt()))
            }
        }
        MeanKind::SbAq => am * z_over_atan((a - b) / (a + b)),
        MeanKind::SbGq => (a * b).sqrt() * z_over_atan((a - b) / (2.0 * a * b).sqrt()),
    })
}

/// Schwab-Borchardt mean: `sqrt(b^2 - a^2)/arccos(a/b)` for `a < b`,
/// `sqrt(a^2 - b^2)/arccosh(a/b)` for `a > b`, `a` when equal.
pub fn schwab_borchardt(a: f64, b: f64) -> Result<f64> {
    if !(a >= 0.0 && a.is_finite()) {
        return Err(domain("a", a, "a >= 0"));
    }
    if !(b > 0.0 && b.is_finite()) {
        return Err(domain("b", b, "b > 0"));
    }
    if a == b {
        return Ok(a);
    }
    if ((a - b) / (a + b)).abs() < NEAR_EQUAL {
        return Ok((a + 2.0 * b) / 3.0);
    }
    let root = ((a - b).abs() * (a + b)).sqrt();
    Ok(if a < b {
        root / root.atan2(a)
    } else {
        // arccosh(a/b) = ln(1 + d + sqrt(d (d + 2))) with d = a/b - 1
        let d = (a - b) / b;
        root / (d + (d * (d + 2.0)).sqrt()).ln_1p()
    })
}

fn ln_sinhc(z: f64) -> f64 {
    if z.abs() < 1e-4 {
        let y = z * z;
        y / 6.0 - y * y / 180.0
    } else {
        (z.sinh() / z).ln()
    }
}

/// `z cot z - 1` (or `z coth z - 1`) without cancellation at small `z`.
fn cot_excess(z: f64, hyperbolic: bool) -> f64 {
    let s = if hyperbolic { -1.0 } else { 1.0 };
    if z.abs() < 0.1 {
        let y = s * z * z;
        -y / 3.0 - y * y / 45.0 - 2.0 * y * y * y / 945.0 - y * y * y * y / 4725.0
    } else if hyperbolic {
        z / z.tanh() - 1.0
    } else {
        z / z.tan() - 1.0
    }
}

/// Separation below which the two-exponent kernel uses its diagonal form.
pub const DIAGONAL: f64 = 1e-5;

fn sine_kernel_impl(p: f64, q: f64, t: f64, hyperbolic: bool) -> f64 {
    let shape = |z: f64| if hyperbolic { ln_sinhc(z) } else { ln_sinc(z) };
    if p.abs() < 1e-12 && q.abs() < 1e-12 {
        return 1.0;
    }
    if (p - q).abs() < DIAGONAL {
        // d/ds ln shape(s t) at the midpoint, exact on the diagonal
        let m = 0.5 * (p + q);
        let z = m * t;
        return if m.abs() < 1e-12 {
            1.0
        } else {
            (cot_excess(z, hyperbolic) / m).exp()
        };
    }
    if q.abs() < 1e-12 {
        return (shape(p * t) / p).exp();
    }
    if p.abs() < 1e-12 {
        return (shape(q * t) / q).exp();
    }
    ((shape(p * t) - shape(q * t)) / (p - q)).exp()
}

/// `(q sin(pt) / (p sin(qt)))^{1/(p-q)}` with its four limiting forms.
pub fn sine_kernel(p: f64, q: f64, t: f64) -> f64 {
    sine_kernel_impl(p, q, t, false)
}

pub fn sine_mean_admissible(p: f64, q: f64) -> bool {
    (-2.0..=2.0).contains(&p) && (-2.0..=2.0).contains(&q) && (0.0..=3.0).contains(&(p + q))
}

/// Two-parameter sine mean `b * kernel(arccos(a/b))`, extended to `a > b`
/// through the hyperbolic kernel and to `a = b` by continuity.
pub fn sine_mean(a: f64, b: f64, p: f64, q: f64) -> Result<f64> {
    check_pair(a, b)?;
    if !sine_mean_admissible(p, q) {
        return Err(Error::Region(format!("(p, q) = ({p}, {q})")));
    }
    if a == b {
        return Ok(a);
    }
    let root = ((a - b).abs() * (a + b)).sqrt();
    Ok(if a < b {
        b * sine_kernel_impl(p, q, root.atan2(a), false)
    } else {
        let d = (a - b) / b;
        b * sine_kernel_impl(p, q, (d + (d * (d + 2.0)).sqrt()).ln_1p(), true)
    })
}

fn check_ordered(a: f64, b: f64) -> Result<()> {
    check_pair(a, b)?;
    if a > b {
        return Err(domain("a", a, "a <= b"));
    }
    Ok(())
}

/// `b^{1-1/k} ((1 - k/3) b^q + (k/3) a^q)^{1/(kq)}`, for `a <= b`.
pub fn sb_bound_kq(a: f64, b: f64, k: f64, q: f64) -> Result<f64> {
    check_ordered(a, b)?;
    Ok(b * cusa_mean_kq(a / b, k, q)?)
}

/// `b (8/(15q) + (1 - 8/(15q)) (a/b)^q)^{5/(15q-8)}`, for `a <= b`.
pub fn sb_bound_line(a: f64, b: f64, q: f64) -> Result<f64> {
    check_ordered(a, b)?;
    Ok(b * cusa_mean_line(a / b, q)?)
}

/// Line-family estimate of `SB(m, M)` where `(m, M)` is the pair behind `kind`.
pub fn line_estimate(kind: MeanKind, a: f64, b: f64, q: f64) -> Result<f64> {
    let (lo, hi) = kind
        .sb_pair()
        .ok_or_else(|| Error::Region(format!("{kind:?} is not a Schwab-Borchardt pair mean")))?;
    let (m, big) = (mean(lo, a, b)?, mean(hi, a, b)?);
    // equal arguments make m == M up to rounding
    if m >= big {
        return Ok(big);
    }
    sb_bound_line(m, big, q)
}
