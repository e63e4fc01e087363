//! Exact Bernoulli numbers and the power-series coefficients built on them.
//!
//! Everything is computed in exact rational arithmetic first; `f64` shadows
//! are correctly rounded conversions of the exact values.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

pub const DEFAULT_N_MAX: usize = 40;
pub const MAX_N: usize = 64;

/// Coefficient tables indexed by `n` (entries below their first valid index are zero).
#[derive(Debug, Clone)]
pub struct SeriesTable {
    n_max: usize,
    bernoulli: Vec<BigRational>,
    p_part: Vec<BigRational>,
    q_part: Vec<BigRational>,
    free_part: Vec<BigRational>,
    bernoulli_f: Vec<f64>,
    p_part_f: Vec<f64>,
    q_part_f: Vec<f64>,
    free_part_f: Vec<f64>,
    elementary_f: [Vec<f64>; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    Csc,
    Cot,
    CscSquared,
    Tan,
}

impl Elementary {
    fn slot(self) -> usize {
        match self {
            Elementary::Csc => 0,
            Elementary::Cot => 1,
            Elementary::CscSquared => 2,
            Elementary::Tan => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Elementary::Csc => "csc",
            Elementary::Cot => "cot",
            Elementary::CscSquared => "csc2",
            Elementary::Tan => "tan",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "csc" => Some(Elementary::Csc),
            "cot" => Some(Elementary::Cot),
            "csc2" | "csc^2" | "csc_squared" => Some(Elementary::CscSquared),
            "tan" => Some(Elementary::Tan),
            _ => None,
        }
    }

    /// Closed-form value, used as the reference for series truncation.
    pub fn exact(self, x: f64) -> f64 {
        match self {
            Elementary::Csc => 1.0 / x.sin(),
            Elementary::Cot => x.cos() / x.sin(),
            Elementary::CscSquared => 1.0 / (x.sin() * x.sin()),
            Elementary::Tan => x.tan(),
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `B_0 .. B_m` from `sum_{k=0}^{j} C(j+1, k) B_k = 0`.
fn bernoulli_numbers(m: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::one());
    for j in 1..=m {
        if j >= 3 && j % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        // binomials C(j+1, k) built incrementally
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate().take(j) {
            if !bk.is_zero() {
                acc += BigRational::from_integer(binom.clone()) * bk;
            }
            binom = binom * BigInt::from(j + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / rat(j as i64 + 1));
    }
    b
}

pub fn build_series_table(n_max: usize) -> Result<SeriesTable> {
    if !(2..=MAX_N).contains(&n_max) {
        return Err(domain("n_max", n_max as f64, "2 <= n_max <= 64"));
    }
    let all = bernoulli_numbers(2 * n_max);
    let bernoulli: Vec<BigRational> = (0..=n_max).map(|n| all[2 * n].abs()).collect();

    let mut p_part = vec![BigRational::zero(); n_max + 1];
    let mut q_part = p_part.clone();
    let mut free_part = p_part.clone();
    let mut elementary: [Vec<BigRational>; 4] = Default::default();
    for slot in elementary.iter_mut() {
        *slot = vec![BigRational::zero(); n_max + 1];
    }

    for n in 1..=n_max {
        let four_n = pow2(2 * n);
        // 2^{2n} |B_{2n}| / (2n)!
        let scaled = BigRational::new(four_n.clone(), factorial(2 * n)) * &bernoulli[n];
        let four_n_r = BigRational::from_integer(four_n.clone());
        let inv_fact = BigRational::new(BigInt::one(), factorial(2 * n)) * &bernoulli[n];
        elementary[0][n] = (&four_n_r - rat(2)) * &inv_fact;
        elementary[1][n] = scaled.clone();
        elementary[2][n] = rat(2 * n as i64 - 1) * &scaled;
        elementary[3][n] = (&four_n_r - rat(1)) * &scaled;
        if n >= 2 {
            p_part[n] = rat(2 * n as i64 + 1) * &scaled;
            q_part[n] = (&four_n_r - rat(1)) * &scaled;
            free_part[n] = (&four_n_r - rat(4 * n as i64)) * &scaled;
        }
    }

    let conv = |v: &Vec<BigRational>| v.iter().map(to_f64).collect::<Vec<f64>>();
    Ok(SeriesTable {
        n_max,
        bernoulli_f: conv(&bernoulli),
        p_part_f: conv(&p_part),
        q_part_f: conv(&q_part),
        free_part_f: conv(&free_part),
        elementary_f: [
            conv(&elementary[0]),
            conv(&elementary[1]),
            conv(&elementary[2]),
            conv(&elementary[3]),
        ],
        bernoulli,
        p_part,
        q_part,
        free_part,
    })
}

/// Shared table at the maximum supported order.
pub fn global_table() -> &'static SeriesTable {
    static TABLE: OnceLock<SeriesTable> = OnceLock::new();
    TABLE.get_or_init(|| build_series_table(MAX_N).expect("MAX_N is in range"))
}

impl SeriesTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `|B_{2n}|`.
    pub fn bernoulli_abs(&self, n: usize) -> &BigRational {
        &self.bernoulli[n]
    }

    pub fn bernoulli_abs_f64(&self, n: usize) -> f64 {
        self.bernoulli_f[n]
    }

    /// Coefficient of `x^{2n}` in the expansion of the p-weighted part of the
    /// derivative numerator, normalised by `sin^2 x cos x`.
    pub fn p_part(&self, n: usize) -> &BigRational {
        &self.p_part[n]
    }

    pub fn q_part(&self, n: usize) -> &BigRational {
        &self.q_part[n]
    }

    pub fn free_part(&self, n: usize) -> &BigRational {
        &self.free_part[n]
    }

    pub fn p_part_f64(&self, n: usize) -> f64 {
        self.p_part_f[n]
    }

    pub fn q_part_f64(&self, n: usize) -> f64 {
        self.q_part_f[n]
    }

    pub fn free_part_f64(&self, n: usize) -> f64 {
        self.free_part_f[n]
    }

    /// Coefficient of the `n`-th correction term of an elementary expansion.
    pub fn elementary_coeff(&self, kind: Elementary, n: usize) -> f64 {
        self.elementary_f[kind.slot()][n]
    }
}

/// Truncated Laurent/Taylor expansion of csc, cot, csc^2 or tan.
pub fn elementary_series(kind: Elementary, x: f64, n_terms: usize) -> Result<f64> {
    if n_terms == 0 || n_terms > MAX_N {
        return Err(domain("n_terms", n_terms as f64, "1 <= n_terms <= 64"));
    }
    let radius = match kind {
        Elementary::Tan => std::f64::consts::FRAC_PI_2,
        _ => std::f64::consts::PI,
    };
    if !x.is_finite() || x.abs() >= radius {
        return Err(domain("x", x, "|x| below the radius of convergence"));
    }
    if kind != Elementary::Tan && x == 0.0 {
        return Err(domain("x", x, "x != 0 for csc, cot, csc^2"));
    }
    let t = global_table();
    let y = x * x;
    let mut sum = 0.0;
    for n in (1..=n_terms).rev() {
        sum = sum * y + t.elementary_coeff(kind, n);
    }
    // sum is now sum_n coeff_n y^{n-1}
    Ok(match kind {
        Elementary::Csc => 1.0 / x + x * sum,
        Elementary::Cot => 1.0 / x - x * sum,
        Elementary::CscSquared => 1.0 / y + sum,
        Elementary::Tan => x * sum,
    })
}

/// Exact ratio `((4^n - 1) q - (4^n - 4n)) / (2n + 1)` for `n >= 2`.
pub fn p_threshold_coeff_ratio_exact(n: usize, q: &BigRational) -> Result<BigRational> {
    if n < 2 {
        return Err(domain("n", n as f64, "n >= 2"));
    }
    let four_n = BigRational::from_integer(pow2(2 * n));
    let num = (&four_n - rat(1)) * q - (&four_n - rat(4 * n as i64));
    Ok(num / rat(2 * n as i64 + 1))
}

/// Ratio of the q-weighted-minus-free coefficient to the p-weighted one.
pub fn p_threshold_coeff_ratio(n: usize, q: f64) -> Result<f64> {
    if n < 2 {
        return Err(domain("n", n as f64, "n >= 2"));
    }
    // (q - 1) 4^n + 4n - q: the 4^n terms cancel exactly at q = 1
    let four_n = 4f64.powi(n as i32);
    Ok(((q - 1.0) * four_n + (4 * n) as f64 - q) / (2 * n + 1) as f64)
}

/// Exact ratio `(4^n - 36n/5 - 8/5) / (4^n - 6n - 4)` for `n >= 3`.
pub fn line_threshold_coeff_ratio_exact(n: usize) -> Result<BigRational> {
    if n < 3 {
        return Err(domain("n", n as f64, "n >= 3"));
    }
    let four_n = BigRational::from_integer(pow2(2 * n));
    let num = &four_n - BigRational::new(BigInt::from(36 * n + 8), BigInt::from(5));
    let den = &four_n - rat(6 * n as i64 + 4);
    Ok(num / den)
}

pub fn line_threshold_coeff_ratio(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(domain("n", n as f64, "n >= 3"));
    }
    // 1 - (6/5)(n - 2) / (4^n - 6n - 4)
    let den = 4f64.powi(n as i32) - (6 * n + 4) as f64;
    Ok(1.0 - 1.2 * (n as f64 - 2.0) / den)
}
