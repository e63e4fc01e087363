//! Sharp constants: the critical exponents where a bound stops holding.

use std::f64::consts::{FRAC_2_PI, LN_2, PI, SQRT_2};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numeric::{bisect, exp_ratio};

pub use crate::kernel::endpoint_ratio;

pub const ROOT_WIDTH: f64 = 1e-13;
pub const ROOT_RESIDUAL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolvedConstant {
    pub name: String,
    pub value: f64,
    pub residual: f64,
    pub bracket: (f64, f64),
}

/// `q` at which the endpoint value of the ratio equals 1/3: `p / (3 (1 - (2/pi)^p))`.
pub fn q_crit_of_p(p: f64) -> f64 {
    -1.0 / (3.0 * exp_ratio(p, FRAC_2_PI.ln()))
}

/// Inverse of [`q_crit_of_p`], by bisection from `[0.1, 10]` with bracket growth.
pub fn p_crit_of_q(q: f64) -> Result<SolvedConstant> {
    if !(q > 0.0 && q.is_finite()) {
        return Err(domain("q", q, "q > 0"));
    }
    let f = |p: f64| q_crit_of_p(p) - q;
    let (mut lo, mut hi) = (0.1, 10.0);
    let mut step = 1.0;
    let mut tries = 0;
    while f(lo) > 0.0 {
        lo -= step;
        step *= 2.0;
        tries += 1;
        if tries > 60 {
            return Err(Error::Bracket(format!("no lower bracket for q = {q}")));
        }
    }
    while f(hi) < 0.0 {
        hi *= 2.0;
        tries += 1;
        if tries > 120 {
            return Err(Error::Bracket(format!("no upper bracket for q = {q}")));
        }
    }
    let root = bisect(f, lo, hi, ROOT_WIDTH)?;
    finish(format!("p_crit({q})"), root)
}

fn finish(name: String, root: crate::numeric::Root) -> Result<SolvedConstant> {
    if root.residual > ROOT_RESIDUAL {
        return Err(Error::Bracket(format!(
            "{name}: residual {} above {ROOT_RESIDUAL}",
            root.residual
        )));
    }
    Ok(SolvedConstant {
        name,
        value: root.value,
        residual: root.residual,
        bracket: root.bracket,
    })
}

/// `ln(1 - k/3) / (k ln(2/pi))` for `0 < k < 3`: the critical `q` along `p = kq`.
pub fn q_crit_of_k(k: f64) -> Result<f64> {
    if !(k > 0.0 && k < 3.0) {
        return Err(domain("k", k, "0 < k < 3"));
    }
    Ok((-k / 3.0).ln_1p() / (k * FRAC_2_PI.ln()))
}

/// Endpoint gap along `p = 3q - 8/5`: `ln(8/(15q)) - (3q - 8/5) ln(2/pi)`.
pub fn line_gap(q: f64) -> f64 {
    (8.0 / (15.0 * q)).ln() - (3.0 * q - 1.6) * FRAC_2_PI.ln()
}

/// Root of [`line_gap`] in `[0.74, 1]`.
pub fn q_line_crit() -> &'static SolvedConstant {
    static C: OnceLock<SolvedConstant> = OnceLock::new();
    C.get_or_init(|| {
        let root = bisect(line_gap, 0.74, 1.0, ROOT_WIDTH).expect("line gap changes sign");
        finish("q0".into(), root).expect("line gap root converges")
    })
}

/// Critical `p` at `q = 1`.
pub fn p_unit_crit() -> &'static SolvedConstant {
    static C: OnceLock<SolvedConstant> = OnceLock::new();
    C.get_or_init(|| {
        let mut c = p_crit_of_q(1.0).expect("q = 1 is bracketed");
        c.name = "p0".into();
        c
    })
}

/// Critical `p` at `q = 34/35`.
pub fn p_line_crit() -> &'static SolvedConstant {
    static C: OnceLock<SolvedConstant> = OnceLock::new();
    C.get_or_init(|| {
        let mut c = p_crit_of_q(34.0 / 35.0).expect("q = 34/35 is bracketed");
        c.name = "p0star".into();
        c
    })
}

/// Reciprocal of the ratio at `x = pi/4`, with every degenerate branch as a limit.
pub fn quarter_constant(p: f64, q: f64) -> f64 {
    let r = 2.0 * SQRT_2 / PI;
    exp_ratio(q, -0.5 * LN_2) / exp_ratio(p, r.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert!((q_crit_of_p(0.0) - 1.0 / (3.0 * (PI / 2.0).ln())).abs() < 1e-15);
        assert!((q_crit_of_p(1.0) - PI / (3.0 * PI - 6.0)).abs() < 1e-15);
        assert!((quarter_constant(0.0, 0.0) - 0.5 * LN_2 / (PI / (2.0 * SQRT_2)).ln()).abs() < 1e-14);
    }

    #[test]
    fn solved_constants_have_small_residuals() {
        for c in [q_line_crit(), p_unit_crit(), p_line_crit()] {
            assert!(c.residual <= ROOT_RESIDUAL, "{c:?}");
            assert!(c.bracket.0 < c.value && c.value < c.bracket.1);
        }
        assert!(p_crit_of_q(-1.0).is_err());
        assert!(q_crit_of_k(3.0).is_err());
    }

    #[test]
    fn inverse_round_trip_far_out() {
        for &q in &[0.41, 0.5, 2.0, 37.0, 100.0] {
            let c = p_crit_of_q(q).unwrap();
            assert!((q_crit_of_p(c.value) - q).abs() <= ROOT_RESIDUAL);
        }
    }
}
