//! Cancellation-free building blocks shared by the kernel and bound families.

use crate::error::{Error, Result};

/// `sin(x)/x - 1`, accurate to a few ulps even as `x -> 0`.
pub fn sinc_m1(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 1.0 {
        let y = x * x;
        // Horner over (-1)^k y^k / (2k+1)!, k = 1..=12
        let mut acc = 0.0;
        let mut k = 12;
        while k >= 1 {
            let fact = odd_factorial(k);
            let term = if k % 2 == 0 { 1.0 / fact } else { -1.0 / fact };
            acc = acc * y + term;
            k -= 1;
        }
        acc * y
    } else {
        x.sin() / x - 1.0
    }
}

fn odd_factorial(k: usize) -> f64 {
    (1..=(2 * k + 1)).fold(1.0, |a, i| a * i as f64)
}

pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1.0 {
        1.0 + sinc_m1(x)
    } else {
        x.sin() / x
    }
}

/// `cos(x) - 1` without cancellation.
pub fn cos_m1(x: f64) -> f64 {
    let s = (0.5 * x).sin();
    -2.0 * s * s
}

pub fn ln_sinc(x: f64) -> f64 {
    sinc_m1(x).ln_1p()
}

pub fn ln_cos(x: f64) -> f64 {
    let c = x.cos();
    if c < 0.5 {
        c.ln()
    } else {
        cos_m1(x).ln_1p()
    }
}

/// `(1 - e^{p l}) / p`, continuous through `p = 0` where it equals `-l`.
///
/// With `l = ln t` this is the power deficit `(1 - t^p)/p`.
pub fn pow_deficit(p: f64, l: f64) -> f64 {
    let z = p * l;
    if z.abs() < 1e-4 {
        -l * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0))))
    } else {
        -z.exp_m1() / p
    }
}

/// `(e^{q l} - 1) / q`, equal to `l` at `q = 0`.
pub fn exp_ratio(q: f64, l: f64) -> f64 {
    -pow_deficit(q, l)
}

/// `ln(1 + p z) / p`, equal to `z` at `p = 0`.
pub fn ln1p_ratio(p: f64, z: f64) -> f64 {
    let w = p * z;
    if w.abs() < 1e-4 {
        z * (1.0 + w * (-0.5 + w * (1.0 / 3.0 + w * (-0.25 + w * 0.2))))
    } else {
        w.ln_1p() / p
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    pub residual: f64,
    pub bracket: (f64, f64),
}

/// Bisection on a sign-changing bracket until its width is below `width`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, width: f64) -> Result<Root> {
    let (mut a, mut b) = (lo, hi);
    let (fa, fb) = (f(a), f(b));
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::Bracket(format!(
            "no sign change on [{lo}, {hi}] (f = {fa}, {fb})"
        )));
    }
    let neg_at_lo = fa < 0.0;
    for _ in 0..400 {
        if b - a <= width {
            break;
        }
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            a = m;
            b = m;
            break;
        }
        if (fm < 0.0) == neg_at_lo {
            a = m;
        } else {
            b = m;
        }
    }
    let (fa, fb) = (f(a), f(b));
    let (value, residual) = if fa.abs() <= fb.abs() { (a, fa) } else { (b, fb) };
    Ok(Root {
        value,
        residual: residual.abs(),
        bracket: (lo, hi),
    })
}

/// Distance in units in the last place between two finite doubles.
pub fn ulp_distance(a: f64, b: f64) -> u64 {
    fn key(x: f64) -> i64 {
        let bits = x.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    }
    key(a).abs_diff(key(b))
}
