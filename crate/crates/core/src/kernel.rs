//! The ratio `T(x) = (1 - (sin x / x)^p)/p / ((1 - cos^q x)/q)` on `(0, pi/2)`,
//! its small-x expansion, its endpoint value, and the pieces of its derivative.
//!
//! `T(0+) = 1/3` for every `(p, q)`; the sign of `T - 1/3` decides which side
//! of `sin(x)/x` the bound families in [`crate::bounds`] fall on.

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, PI};
use std::sync::OnceLock;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numeric::{ln_cos, ln_sinc, pow_deficit};
use crate::series::{global_table, to_f64, DEFAULT_N_MAX};

/// Below this `x` the ratio is evaluated from its power series.
pub const SMALL_X: f64 = 1e-2;
/// Below this `x` the derivative pieces are summed from the coefficient table.
pub const TABLE_X: f64 = 1.0;

const RATIO_SERIES_ORDER: usize = 5;

/// Critical `q` on the line `p = 3q - 8/5`.
pub const LINE_Q: f64 = 34.0 / 35.0;
/// Critical `p` for the decreasing clauses near `q = 1`.
pub fn endpoint_p() -> f64 {
    PI * PI / 4.0 - 1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Unclassified,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub p: f64,
    pub q: f64,
    /// `p <= 0` or `0 < p <= 3q`: the region where the bound family is a mean.
    pub admissible: bool,
    pub monotonicity: Monotonicity,
}

const SLACK: f64 = 1e-12;

pub fn is_admissible(p: f64, q: f64) -> bool {
    p <= 0.0 || p <= 3.0 * q + SLACK
}

/// Which way `T` moves on `(0, pi/2)`, when one of the proven regimes applies.
pub fn classify(p: f64, q: f64) -> Monotonicity {
    let line = 3.0 * q - 1.6;
    if q >= 1.0 - SLACK && p <= line + SLACK {
        return Monotonicity::Increasing;
    }
    let upper_band = q > LINE_Q && q <= 1.0 + SLACK && p >= endpoint_p() - SLACK;
    let lower_band = q <= LINE_Q + SLACK && p >= line - SLACK;
    if upper_band || lower_band {
        Monotonicity::Decreasing
    } else {
        Monotonicity::Unclassified
    }
}

impl ParamPoint {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !p.is_finite() {
            return Err(domain("p", p, "finite"));
        }
        if !q.is_finite() {
            return Err(domain("q", q, "finite"));
        }
        Ok(ParamPoint {
            p,
            q,
            admissible: is_admissible(p, q),
            monotonicity: classify(p, q),
        })
    }

    pub fn on_line(&self) -> bool {
        (self.p - (3.0 * self.q - 1.6)).abs() <= SLACK
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Series,
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub branch: Branch,
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x < FRAC_PI_2 {
        Ok(())
    } else {
        Err(domain("x", x, "0 < x < pi/2"))
    }
}

fn check_pq(p: f64, q: f64) -> Result<()> {
    ParamPoint::new(p, q).map(|_| ())
}

/// `(1 - t^p)/p`, or `-ln t` at `p = 0`.
pub fn power_deficit(p: f64, t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(domain("t", t, "t > 0"));
    }
    if !p.is_finite() {
        return Err(domain("p", p, "finite"));
    }
    Ok(pow_deficit(p, t.ln()))
}

/// Power deficit of `sin(x)/x`.
pub fn sinc_deficit(p: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(pow_deficit(p, ln_sinc(x)))
}

/// Power deficit of `cos x`.
pub fn cos_deficit(q: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(pow_deficit(q, ln_cos(x)))
}

pub fn cusa_ratio(p: f64, q: f64, x: f64) -> Result<f64> {
    Ok(cusa_ratio_eval(p, q, x)?.value)
}

/// Ratio with the branch that produced it.
pub fn cusa_ratio_eval(p: f64, q: f64, x: f64) -> Result<Evaluation> {
    check_pq(p, q)?;
    check_x(x)?;
    Ok(if x < SMALL_X {
        Evaluation {
            value: 1.0 / 3.0 + excess_series(p, q, x),
            branch: Branch::Series,
        }
    } else {
        Evaluation {
            value: ratio_direct(p, q, x),
            branch: Branch::Direct,
        }
    })
}

/// Ratio evaluated on a forced branch; used to cross-check the two routes.
pub fn cusa_ratio_on(branch: Branch, p: f64, q: f64, x: f64) -> Result<f64> {
    check_pq(p, q)?;
    check_x(x)?;
    Ok(match branch {
        Branch::Series => 1.0 / 3.0 + excess_series(p, q, x),
        Branch::Direct => ratio_direct(p, q, x),
    })
}

/// `T - 1/3`.
pub fn ratio_excess(p: f64, q: f64, x: f64) -> Result<f64> {
    check_pq(p, q)?;
    check_x(x)?;
    Ok(if x < SMALL_X {
        excess_series(p, q, x)
    } else {
        ratio_direct(p, q, x) - 1.0 / 3.0
    })
}

fn ratio_direct(p: f64, q: f64, x: f64) -> f64 {
    pow_deficit(p, ln_sinc(x)) / pow_deficit(q, ln_cos(x))
}

/// Log-series coefficients of `sin(x)/x` and `cos x` in powers of `y = x^2`.
fn log_coeffs() -> &'static ([f64; RATIO_SERIES_ORDER + 1], [f64; RATIO_SERIES_ORDER + 1]) {
    static C: OnceLock<([f64; RATIO_SERIES_ORDER + 1], [f64; RATIO_SERIES_ORDER + 1])> =
        OnceLock::new();
    C.get_or_init(|| {
        let t = global_table();
        let mut ls = [0.0; RATIO_SERIES_ORDER + 1];
        let mut lc = [0.0; RATIO_SERIES_ORDER + 1];
        for n in 1..=RATIO_SERIES_ORDER {
            // -(2^{2n} |B_{2n}| / (2n)!) / (2n), and the same times (2^{2n} - 1)
            let k = (2 * n) as f64;
            ls[n] = -t.elementary_coeff(crate::series::Elementary::Cot, n) / k;
            lc[n] = -t.elementary_coeff(crate::series::Elementary::Tan, n) / k;
        }
        (ls, lc)
    })
}

type Poly = [f64; RATIO_SERIES_ORDER + 1];

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = [0.0; RATIO_SERIES_ORDER + 1];
    for i in 0..=RATIO_SERIES_ORDER {
        for j in 0..=(RATIO_SERIES_ORDER - i) {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

/// Series of `(1 - e^{p L})/p` where `L` is a log-series without constant term.
fn deficit_series(p: f64, log: &Poly) -> Poly {
    let mut out = [0.0; RATIO_SERIES_ORDER + 1];
    let mut power = *log;
    let mut coef = 1.0; // p^{k-1}/k!
    for k in 1..=RATIO_SERIES_ORDER {
        for i in 0..=RATIO_SERIES_ORDER {
            out[i] -= coef * power[i];
        }
        power = poly_mul(&power, log);
        coef *= p / (k + 1) as f64;
    }
    out
}

/// Coefficients of `T - 1/3` in powers of `x^2`, through `x^8`.
pub fn excess_coeffs(p: f64, q: f64) -> [f64; RATIO_SERIES_ORDER] {
    let (ls, lc) = log_coeffs();
    let s = deficit_series(p, ls);
    let c = deficit_series(q, lc);
    // both start at y^1; divide out y and invert
    let mut t = [0.0; RATIO_SERIES_ORDER];
    for j in 0..RATIO_SERIES_ORDER {
        let mut acc = s[j + 1];
        for i in 1..=j {
            acc -= c[i + 1] * t[j - i];
        }
        t[j] = acc / c[1];
    }
    let mut out = [0.0; RATIO_SERIES_ORDER];
    out[1..].copy_from_slice(&t[1..]);
    out
}

fn excess_series(p: f64, q: f64, x: f64) -> f64 {
    let c = excess_coeffs(p, q);
    let y = x * x;
    let mut acc = 0.0;
    for j in (1..RATIO_SERIES_ORDER).rev() {
        acc = acc * y + c[j];
    }
    acc * y
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitCoeffs {
    /// Coefficient of `x^2` in `T - 1/3`.
    pub quadratic: f64,
    /// Coefficient of `x^4` in `T - 1/3`.
    pub quartic: f64,
    /// `T(pi/2-) - 1/3`; `-inf` on the line `p = 3q - 8/5` with `q <= 0`.
    pub endpoint_excess: f64,
}

pub fn limit_coeffs(point: &ParamPoint) -> LimitCoeffs {
    let (p, q) = (point.p, point.q);
    let quadratic = -(5.0 * p - 15.0 * q + 8.0) / 180.0;
    let quartic = (70.0 * p * p + 315.0 * q * q - 315.0 * p * q + 126.0 * p + 126.0 * q - 304.0)
        / 45360.0;
    let endpoint_excess = if point.on_line() && q <= 0.0 {
        f64::NEG_INFINITY
    } else {
        endpoint_ratio(p, q) - 1.0 / 3.0
    };
    LimitCoeffs {
        quadratic,
        quartic,
        endpoint_excess,
    }
}

/// `T(pi/2-)`: `q (1 - (2/pi)^p)/p` for `q > 0`, and `0` for `q <= 0`.
pub fn endpoint_ratio(p: f64, q: f64) -> f64 {
    if q > 0.0 {
        q * pow_deficit(p, FRAC_2_PI.ln())
    } else {
        0.0
    }
}

/// The three trigonometric pieces of the derivative numerator.
///
/// `p_part = (sin x - x cos x)^2 cos x`, `q_part = x (sin x - x cos x) sin^2 x`,
/// `free_part = x sin x + cos x sin^2 x - 2 x^2 cos x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivParts {
    pub p_part: f64,
    pub q_part: f64,
    pub free_part: f64,
}

fn check_x_closed(x: f64) -> Result<()> {
    if x > 0.0 && x <= FRAC_PI_2 {
        Ok(())
    } else {
        Err(domain("x", x, "0 < x <= pi/2"))
    }
}

/// `sin^2 x cos x`, the common factor of the tabulated expansions.
fn table_weight(x: f64) -> f64 {
    let s = x.sin();
    s * s * x.cos()
}

fn table_sum(coeffs: &[f64], x: f64, first: usize) -> f64 {
    let y = x * x;
    let mut acc = 0.0;
    for n in (first..coeffs.len()).rev() {
        acc = acc * y + coeffs[n];
    }
    acc * y.powi(first as i32)
}

struct PartTables {
    p: Vec<f64>,
    q: Vec<f64>,
    free: Vec<f64>,
    // q_part - 3 p_part and free_part - 8/5 p_part, both starting at n = 3
    line_den: Vec<f64>,
    line_num: Vec<f64>,
}

fn part_tables() -> &'static PartTables {
    static T: OnceLock<PartTables> = OnceLock::new();
    T.get_or_init(|| {
        let t = global_table();
        let n = DEFAULT_N_MAX;
        let three = BigRational::from_integer(3.into());
        let eight_fifths = BigRational::new(8.into(), 5.into());
        PartTables {
            p: (0..=n).map(|i| t.p_part_f64(i)).collect(),
            q: (0..=n).map(|i| t.q_part_f64(i)).collect(),
            free: (0..=n).map(|i| t.free_part_f64(i)).collect(),
            line_den: (0..=n)
                .map(|i| to_f64(&(t.q_part(i) - &three * t.p_part(i))))
                .collect(),
            line_num: (0..=n)
                .map(|i| to_f64(&(t.free_part(i) - &eight_fifths * t.p_part(i))))
                .collect(),
        }
    })
}

pub fn deriv_parts(x: f64) -> Result<DerivParts> {
    check_x_closed(x)?;
    if x < TABLE_X {
        let t = part_tables();
        let w = table_weight(x);
        return Ok(DerivParts {
            p_part: w * table_sum(&t.p, x, 2),
            q_part: w * table_sum(&t.q, x, 2),
            free_part: w * table_sum(&t.free, x, 2),
        });
    }
    let (s, c) = x.sin_cos();
    let defect = s - x * c;
    Ok(DerivParts {
        p_part: defect * defect * c,
        q_part: x * defect * s * s,
        free_part: x * s + c * s * s - 2.0 * x * x * c,
    })
}

/// `p * p_part - q * q_part + free_part`, which carries the sign of `T'`.
pub fn deriv_numerator(p: f64, q: f64, x: f64) -> Result<f64> {
    check_pq(p, q)?;
    let d = deriv_parts(x)?;
    Ok(p * d.p_part - q * d.q_part + d.free_part)
}

/// The `p` at which the derivative numerator changes sign, for fixed `q`.
pub fn p_threshold(q: f64, x: f64) -> Result<f64> {
    if !q.is_finite() {
        return Err(domain("q", q, "finite"));
    }
    check_x(x)?;
    if x < TABLE_X {
        let t = part_tables();
        let a = table_sum(&t.p, x, 2);
        let b = table_sum(&t.q, x, 2);
        let c = table_sum(&t.free, x, 2);
        return Ok((q * b - c) / a);
    }
    let d = deriv_parts(x)?;
    Ok((q * d.q_part - d.free_part) / d.p_part)
}

/// The `q` at which the numerator changes sign along `p = 3q - 8/5`.
pub fn line_threshold(x: f64) -> Result<f64> {
    check_x(x)?;
    if x < TABLE_X {
        let t = part_tables();
        return Ok(table_sum(&t.line_num, x, 3) / table_sum(&t.line_den, x, 3));
    }
    let d = deriv_parts(x)?;
    Ok((d.free_part - 1.6 * d.p_part) / (d.q_part - 3.0 * d.p_part))
}

/// Upper end of the window where the two-term expansion is compared.
pub const EXPANSION_X: f64 = 0.1;

/// Relative departure of `(T - 1/3)/x^2` from its two-term expansion at each `x`.
pub fn expansion_deviation(p: f64, q: f64, xs: &[f64]) -> Result<Vec<f64>> {
    let point = ParamPoint::new(p, q)?;
    let lc = limit_coeffs(&point);
    xs.iter()
        .map(|&x| {
            if !(x > 0.0 && x <= EXPANSION_X) {
                return Err(domain("x", x, "0 < x <= 0.1"));
            }
            let d = ratio_excess(p, q, x)?;
            let model = lc.quadratic + lc.quartic * x * x;
            let scale = lc.quadratic.abs() + lc.quartic.abs() * x * x;
            if scale == 0.0 {
                return Err(Error::Region(format!("(p, q) = ({p}, {q}) has a flat expansion")));
            }
            Ok((d / (x * x) - model).abs() / scale)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_examples() {
        assert!((cusa_ratio(1.0, 1.0, 1e-4).unwrap() - 1.0 / 3.0).abs() < 1e-8);
        let near_end = cusa_ratio(1.0, 1.0, FRAC_PI_2 - 1e-9).unwrap();
        assert!((near_end - (1.0 - FRAC_2_PI)).abs() < 1e-6);
        let e = ratio_excess(1.0, 1.0, 0.01).unwrap();
        assert!((e - 1.111e-6).abs() < 1e-9);
    }

    #[test]
    fn series_leading_terms_match_closed_forms() {
        for &(p, q) in &[(1.0, 1.0), (0.0, 0.0), (-2.0, 0.5), (3.0, -1.0), (2.2, 1.3)] {
            let c = excess_coeffs(p, q);
            let lc = limit_coeffs(&ParamPoint::new(p, q).unwrap());
            assert!((c[1] - lc.quadratic).abs() < 1e-15, "{p} {q}");
            assert!((c[2] - lc.quartic).abs() < 1e-15, "{p} {q}");
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(0.0, 1.0), Monotonicity::Increasing);
        // between 7/5 and pi^2/4 - 1 on q = 1 nothing is proven
        assert_eq!(classify(1.44, 1.0), Monotonicity::Unclassified);
        assert_eq!(classify(2.0, 1.0), Monotonicity::Decreasing);
        assert_eq!(classify(0.0, 0.5), Monotonicity::Decreasing);
        assert_eq!(classify(-5.0, 0.5), Monotonicity::Unclassified);
        assert!(!is_admissible(2.0, 0.5));
        assert!(is_admissible(-1.0, -3.0));
    }

    #[test]
    fn endpoint_values() {
        assert!((endpoint_ratio(0.0, 1.0) - (PI / 2.0).ln()).abs() < 1e-15);
        assert_eq!(endpoint_ratio(1.0, -1.0), 0.0);
        let on_line = ParamPoint::new(-1.6, 0.0).unwrap();
        assert_eq!(limit_coeffs(&on_line).endpoint_excess, f64::NEG_INFINITY);
    }

    #[test]
    fn derivative_pieces_at_right_end() {
        let d = deriv_parts(FRAC_PI_2).unwrap();
        assert!(d.p_part.abs() < 1e-15);
        assert!((d.q_part - FRAC_PI_2).abs() < 1e-15);
        assert!((d.free_part - FRAC_PI_2).abs() < 1e-15);
    }
}
