//! Suites shared by the per-area tests and the acceptance runner.
//!
//! Each suite returns `Ok(detail)` or `Err(reason)`; independent oracles are
//! computed inline (exact rationals, direct formulas, closed forms).

#![allow(dead_code)]

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, PI};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cusa::bounds::{cusa_mean, cusa_mean_kq, cusa_mean_line, endpoint_mean};
use cusa::claims::{catalog, lookup, Params};
use cusa::constants::{line_gap, p_crit_of_q, p_line_crit, p_unit_crit, q_crit_of_k, q_crit_of_p, q_line_crit};
use cusa::kernel::{
    classify, cusa_ratio, deriv_numerator, deriv_parts, endpoint_p, is_admissible, limit_coeffs, line_threshold,
    p_threshold, power_deficit, ratio_excess, Monotonicity, ParamPoint, LINE_Q,
};
use cusa::means::{mean, schwab_borchardt, sine_mean, MeanKind};
use cusa::numeric::ulp_distance;
use cusa::series::{
    elementary_series, global_table, line_threshold_coeff_ratio_exact, p_threshold_coeff_ratio_exact, Elementary,
};
use cusa::verifier::{check_expansion, probe_sharpness, recheck, verify_claim, SampleSpec, Status};

pub type Check = Result<String, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn params(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn near(name: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    ensure((got - want).abs() <= tol, || format!("{name} = {got}, expected {want} +- {tol}"))
}

// ---------------------------------------------------------------- criterion 1

pub fn constants_regression() -> Check {
    near("p0", p_unit_crit().value, 1.42034, 1e-4)?;
    near("p0star", p_line_crit().value, 1.27754, 1e-4)?;
    near("q0", q_line_crit().value, 0.989681, 1e-5)?;
    near("q_of_p(0)", q_crit_of_p(0.0), 0.73814, 1e-5)?;
    near("q_of_p(1)", q_crit_of_p(1.0), 0.91731, 1e-5)?;
    let qk = |k: f64| q_crit_of_k(k).map_err(|e| e.to_string());
    near("q_of_k(1)", qk(1.0)?, 0.89788, 1e-5)?;
    near("q_of_k(3/2)", qk(1.5)?, 1.0233, 1e-4)?;
    near("q_of_k(2)", qk(2.0)?, 1.2164, 1e-4)?;
    for c in [p_unit_crit(), p_line_crit(), q_line_crit()] {
        ensure(c.residual <= 1e-12, || format!("{} residual {}", c.name, c.residual))?;
        ensure(c.bracket.0 < c.value && c.value < c.bracket.1, || format!("{} outside its bracket", c.name))?;
    }
    // closed forms as independent oracles
    near("q_of_p(0) closed form", q_crit_of_p(0.0), 1.0 / (3.0 * FRAC_PI_2.ln()), 1e-14)?;
    near("q_of_p(1) closed form", q_crit_of_p(1.0), PI / (3.0 * PI - 6.0), 1e-14)?;
    Ok(format!(
        "p0 = {:.6}, p0star = {:.6}, q0 = {:.7}",
        p_unit_crit().value,
        p_line_crit().value,
        q_line_crit().value
    ))
}

// ---------------------------------------------------------------- criterion 2

pub fn line_gap_at_one() -> Check {
    let direct = (8.0f64 / 15.0).ln() - 1.4 * FRAC_2_PI.ln();
    near("v(1)", line_gap(1.0), 3.6071e-3, 1e-6)?;
    near("v(1) vs direct", line_gap(1.0), direct, 1e-15)?;
    Ok(format!("v(1) = {:.7e}", line_gap(1.0)))
}

// ---------------------------------------------------------------- criterion 3

/// Every claim at its listed instances plus two seeded parameter draws.
pub fn claim_suite() -> Check {
    let spec = SampleSpec::default();
    let mut draws = rng(31);
    let mut runs = 0;
    let mut weakest = f64::INFINITY;
    for claim in catalog() {
        let mut sets = claim.instance_params();
        if !claim.params.is_empty() {
            for _ in 0..2 {
                let m = claim
                    .sample_params(&mut draws)
                    .ok_or_else(|| format!("{}: no asserted parameter draw", claim.id))?;
                sets.push(m);
            }
        }
        for m in sets {
            let r = verify_claim(claim, &m, &spec).map_err(|e| format!("{} {m:?}: {e}", claim.id))?;
            ensure(r.status == Status::Pass && r.min_margin > 0.0, || {
                format!("{} {m:?}: {:?}, min margin {:e} at {}", claim.id, r.status, r.min_margin, r.argmin)
            })?;
            weakest = weakest.min(r.min_margin);
            runs += 1;
        }
    }
    Ok(format!("{runs} verifications over {} claims, weakest margin {weakest:.3e}", catalog().len()))
}

// ---------------------------------------------------------------- criterion 4

pub fn sharpness_probes() -> Check {
    let spec = SampleSpec::default();
    let cases: [(&str, Params, &str, f64); 5] = [
        ("C-MT5b", params(&[]), "q", 1e-2),
        ("C-MT2c-i", params(&[("p", 2.0)]), "q", 1e-2),
        ("C-MT2c-ii", params(&[("p", 2.0)]), "q", 1e-2),
        ("C-MT4sharp-i", params(&[("k", 2.0)]), "q", 1e-2),
        ("C-ZHU-i", params(&[]), "eta", 1e-3),
    ];
    let mut notes = Vec::new();
    for (id, base, param, delta) in cases {
        let results = probe_sharpness(id, &base, param, &[delta], &spec).map_err(|e| format!("{id}: {e}"))?;
        let claim = lookup(id).map_err(|e| e.to_string())?;
        for r in &results {
            if r.delta == 0.0 {
                ensure(r.report.status == Status::Pass, || format!("{id} at the boundary: {:?}", r.report.status))?;
            } else {
                ensure(r.report.status == Status::Fail, || format!("{id} past the boundary: {:?}", r.report.status))?;
                for v in &r.report.violations {
                    let m = recheck(claim, &r.report.param_values, v.point);
                    ensure(m < -spec.inconclusive_margin, || format!("{id}: violation at {} does not recheck", v.point))?;
                }
                notes.push(format!("{id} fails at x = {:.4}", r.report.argmin));
            }
        }
    }
    // failure location for the endpoint-driven case
    let r = probe_sharpness("C-MT2c-ii", &params(&[("p", 2.0)]), "q", &[1e-2], &spec).map_err(|e| e.to_string())?;
    ensure(r[1].report.argmin > 1.5, || format!("C-MT2c-ii argmin {} not near pi/2", r[1].report.argmin))?;
    Ok(notes.join("; "))
}

// ---------------------------------------------------------------- criterion 5

pub fn expansion_cross_check() -> Check {
    let mut r = rng(5);
    let mut worst: f64 = 0.0;
    let mut n = 0;
    while n < 20 {
        let (p, q) = (r.gen_range(-3.0..3.0), r.gen_range(-2.0..3.0));
        if !is_admissible(p, q) {
            continue;
        }
        let dev = check_expansion(p, q, &[0.01]).map_err(|e| e.to_string())?;
        ensure(dev <= 1e-3, || format!("(p, q) = ({p}, {q}): deviation {dev:e}"))?;
        worst = worst.max(dev);
        n += 1;
    }
    for q in [LINE_Q - 0.1, LINE_Q + 0.1] {
        let x: f64 = 0.01;
        let d = ratio_excess(3.0 * q - 1.6, q, x).map_err(|e| e.to_string())?;
        let quartic = d / x.powi(4);
        let want = (q - LINE_Q) / 135.0;
        ensure(((quartic - want) / want).abs() <= 0.05, || format!("line q = {q}: x^4 coefficient {quartic} vs {want}"))?;
    }
    Ok(format!("worst relative deviation {worst:.2e} over 20 draws"))
}

// ---------------------------------------------------------------- criterion 6

/// Closed-form oracle for `(1 - t^p)/p`.
fn deficit_oracle(p: f64, t: f64) -> f64 {
    if p == 0.0 {
        -t.ln()
    } else {
        (1.0 - t.powf(p)) / p
    }
}

pub fn deficit_monotone_in_p() -> Check {
    let ps: Vec<f64> = (0..20).map(|i| -3.0 + 6.0 * i as f64 / 19.0).collect();
    let ts: Vec<f64> = (0..20).map(|i| 0.02 + 0.96 * i as f64 / 19.0).collect();
    let mut checks = 0;
    for &t in &ts {
        for (i, &p) in ps.iter().enumerate() {
            let u = power_deficit(p, t).map_err(|e| e.to_string())?;
            ensure(u > 0.0, || format!("deficit({p}, {t}) = {u}"))?;
            ensure((u - deficit_oracle(p, t)).abs() <= 1e-12 * (1.0 + u), || format!("oracle mismatch at ({p}, {t})"))?;
            for &p2 in &ps[i + 1..] {
                let u2 = power_deficit(p2, t).map_err(|e| e.to_string())?;
                ensure(u > u2, || format!("deficit not decreasing in p at t = {t}: {p} -> {p2}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} ordered pairs"))
}

pub fn ratio_branch_continuity() -> Check {
    let mut r = rng(6);
    for _ in 0..50 {
        let x = r.gen_range(0.05..1.5);
        let q = r.gen_range(0.2..2.0);
        let base = cusa_ratio(0.0, q, x).map_err(|e| e.to_string())?;
        for p in [1e-8, -1e-8] {
            let v = cusa_ratio(p, q, x).map_err(|e| e.to_string())?;
            near("p continuity", v, base, 1e-6)?;
        }
        let p = r.gen_range(-2.0..0.0);
        let base = cusa_ratio(p, 0.0, x).map_err(|e| e.to_string())?;
        for q in [1e-8, -1e-8] {
            let v = cusa_ratio(p, q, x).map_err(|e| e.to_string())?;
            near("q continuity", v, base, 1e-6)?;
        }
    }
    // series and direct forms across the switch
    for &(p, q) in &[(1.0, 1.0), (0.0, 0.0), (-2.0, 0.5), (2.5, 1.5), (46.0 / 35.0, LINE_Q)] {
        for i in 0..=40 {
            let x = 5e-3 + 15e-3 * i as f64 / 40.0;
            let s = cusa::kernel::cusa_ratio_on(cusa::kernel::Branch::Series, p, q, x).map_err(|e| e.to_string())?;
            let d = cusa::kernel::cusa_ratio_on(cusa::kernel::Branch::Direct, p, q, x).map_err(|e| e.to_string())?;
            near("series vs direct", s, d, 1e-9)?;
        }
    }
    Ok("50 seeded x per exponent; series/direct agree on [5e-3, 2e-2]".into())
}

fn clause_draw(clause: usize, r: &mut ChaCha8Rng) -> (f64, f64) {
    loop {
        let (p, q) = match clause {
            0 => {
                let q = r.gen_range(1.0..3.0);
                (r.gen_range(-3.0..=3.0 * q - 1.6), q)
            }
            1 => {
                let q = r.gen_range(LINE_Q + 1e-6..=1.0);
                (r.gen_range(endpoint_p()..=3.0 * q), q)
            }
            2 => {
                let q = r.gen_range(0.05..=LINE_Q);
                (r.gen_range(3.0 * q - 1.6..=3.0 * q), q)
            }
            _ => {
                let q = r.gen_range(-2.0..=0.0);
                (r.gen_range(3.0 * q - 1.6..=0.0), q)
            }
        };
        if is_admissible(p, q) {
            return (p, q);
        }
    }
}

/// Finite differences of the ratio over a 4096-point grid have the clause's sign.
pub fn ratio_monotonicity() -> Check {
    const FLAT: f64 = 1e-14;
    let mut r = rng(61);
    let n = 4096;
    let (lo, hi) = (1e-6, FRAC_PI_2 - 1e-6);
    let mut worst = f64::INFINITY;
    for clause in 0..4 {
        for _ in 0..10 {
            let (p, q) = clause_draw(clause, &mut r);
            let want = classify(p, q);
            let sign = match (clause, want) {
                (0, Monotonicity::Increasing) => 1.0,
                (1..=3, Monotonicity::Decreasing) => -1.0,
                _ => return Err(format!("({p}, {q}) classified {want:?} for clause {}", clause + 1)),
            };
            let mut prev = cusa_ratio(p, q, lo).map_err(|e| e.to_string())?;
            let mut best = f64::INFINITY;
            for i in 1..n {
                let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
                let v = cusa_ratio(p, q, x).map_err(|e| e.to_string())?;
                let step = sign * (v - prev);
                ensure(step > -FLAT, || format!("clause {} ({p}, {q}): wrong-way step {step:e} at x = {x}", clause + 1))?;
                if step.abs() > FLAT {
                    best = best.min(step);
                }
                prev = v;
            }
            worst = worst.min(best);
        }
    }
    Ok(format!("40 parameter pairs, smallest resolved step {worst:.2e}"))
}

pub fn threshold_identities() -> Check {
    let mut r = rng(62);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let x = r.gen_range(1e-3..FRAC_PI_2 - 1e-3);
        let (p, q) = (r.gen_range(-3.0..3.0), r.gen_range(-2.0..3.0));
        let parts = deriv_parts(x).map_err(|e| e.to_string())?;
        let f2 = deriv_numerator(p, q, x).map_err(|e| e.to_string())?;
        let g1 = p_threshold(q, x).map_err(|e| e.to_string())?;
        let scale = (p * parts.p_part).abs() + (q * parts.q_part).abs() + parts.free_part.abs();
        let gap = (f2 - parts.p_part * (p - g1)).abs() / scale;
        worst = worst.max(gap);
        ensure(gap <= 1e-12, || format!("f2 = A (p - g1) off by {gap:e} at ({p}, {q}, {x})"))?;
        let ql = r.gen_range(-2.0..3.0);
        let f2l = deriv_numerator(3.0 * ql - 1.6, ql, x).map_err(|e| e.to_string())?;
        let g2 = line_threshold(x).map_err(|e| e.to_string())?;
        let scale = ((3.0 * ql - 1.6) * parts.p_part).abs() + (ql * parts.q_part).abs() + parts.free_part.abs();
        let gap = (f2l + (parts.q_part - 3.0 * parts.p_part) * (ql - g2)).abs() / scale;
        worst = worst.max(gap);
        ensure(gap <= 1e-12, || format!("line identity off by {gap:e} at ({ql}, {x})"))?;
    }
    Ok(format!("2000 identity checks, worst relative gap {worst:.1e}"))
}

pub fn threshold_monotonicity() -> Check {
    let xs: Vec<f64> = (1..2000).map(|i| FRAC_PI_2 * i as f64 / 2000.0).collect();
    let g2: Vec<f64> = xs.iter().map(|&x| line_threshold(x)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    for w in g2.windows(2) {
        ensure(w[1] > w[0], || format!("line threshold not increasing: {} -> {}", w[0], w[1]))?;
    }
    ensure(g2.iter().all(|&g| g > LINE_Q && g < 1.0), || "line threshold leaves (34/35, 1)".into())?;
    for (q, up) in [(1.0, true), (1.5, true), (2.0, true), (0.9, false), (0.5, false), (0.0, false)] {
        let g1: Vec<f64> = xs.iter().map(|&x| p_threshold(q, x)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        for w in g1.windows(2) {
            ensure((w[1] > w[0]) == up, || format!("p threshold at q = {q} has the wrong direction"))?;
        }
    }
    near("g1(1, 0+)", p_threshold(1.0, 1e-4).map_err(|e| e.to_string())?, 1.4, 1e-6)?;
    near("g1(1, pi/2-)", p_threshold(1.0, FRAC_PI_2 - 1e-9).map_err(|e| e.to_string())?, endpoint_p(), 1e-6)?;
    near("g2(0+)", line_threshold(1e-3).map_err(|e| e.to_string())?, LINE_Q, 1e-5)?;
    near("g2(pi/2-)", line_threshold(FRAC_PI_2 - 1e-6).map_err(|e| e.to_string())?, 1.0, 1e-4)?;
    Ok("line threshold increasing in (34/35, 1); p threshold directions match".into())
}

pub fn kernel_suites() -> Check {
    let parts = [
        deficit_monotone_in_p()?,
        ratio_branch_continuity()?,
        ratio_monotonicity()?,
        threshold_identities()?,
        threshold_monotonicity()?,
    ];
    Ok(parts.join("; "))
}

// ---------------------------------------------------------------- criterion 7

fn strictly(values: &[f64], increasing: bool) -> bool {
    values.windows(2).all(|w| if increasing { w[1] > w[0] } else { w[1] < w[0] })
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

pub fn bounds_monotonicity() -> Check {
    let e = |r: cusa::Result<f64>| r.map_err(|e| e.to_string());
    for t in [0.1, 0.5, 0.9] {
        for q in [-2.0, -0.5, 0.3, 1.0, 2.0] {
            let vals: Vec<f64> = grid(-3.0, 3.0, 121)
                .into_iter()
                .filter(|&p| is_admissible(p, q))
                .map(|p| e(cusa_mean(t, p, q)))
                .collect::<Result<_, _>>()?;
            ensure(strictly(&vals, false), || format!("cusa_mean not decreasing in p (t = {t}, q = {q})"))?;
        }
        for p in [-2.0, 0.0, 0.5, 1.5] {
            let vals: Vec<f64> = grid(-3.0, 3.0, 121)
                .into_iter()
                .filter(|&q| is_admissible(p, q))
                .map(|q| e(cusa_mean(t, p, q)))
                .collect::<Result<_, _>>()?;
            ensure(strictly(&vals, true), || format!("cusa_mean not increasing in q (t = {t}, p = {p})"))?;
        }
        for q in [0.3, 1.0, 2.0] {
            let vals: Vec<f64> = grid(-3.0, 3.0, 121).into_iter().map(|p| e(endpoint_mean(t, p, q))).collect::<Result<_, _>>()?;
            ensure(strictly(&vals, true), || format!("endpoint_mean not increasing in p (t = {t}, q = {q})"))?;
        }
        for p in [-2.0, 0.0, 1.0, 2.0] {
            let vals: Vec<f64> = grid(0.05, 3.0, 60).into_iter().map(|q| e(endpoint_mean(t, p, q))).collect::<Result<_, _>>()?;
            ensure(strictly(&vals, false), || format!("endpoint_mean not decreasing in q (t = {t}, p = {p})"))?;
        }
        let line: Vec<f64> = grid(-5.0, 5.0, 201).into_iter().map(|q| e(cusa_mean_line(t, q))).collect::<Result<_, _>>()?;
        ensure(strictly(&line, true), || format!("cusa_mean_line not increasing in q (t = {t})"))?;
        let k4: Vec<f64> = grid(-3.0, -0.01, 100).into_iter().map(|q| e(cusa_mean_kq(t, 4.0, q))).collect::<Result<_, _>>()?;
        ensure(strictly(&k4, false), || format!("kq family at k = 4 not decreasing in q (t = {t})"))?;
        let k2: Vec<f64> = grid(-3.0, 3.0, 121).into_iter().map(|q| e(cusa_mean_kq(t, 2.0, q))).collect::<Result<_, _>>()?;
        ensure(strictly(&k2, true), || format!("kq family at k = 2 not increasing in q (t = {t})"))?;
    }
    near("line at q = -1e4", e(cusa_mean_line(0.125, -1e4))?, 0.5, 1e-3)?;
    near("line at q = 1e4", e(cusa_mean_line(0.5, 1e4))?, 1.0, 1e-3)?;
    // every family is exactly 1 at t = 1
    for (p, q) in [(1.0, 1.0), (0.0, 0.0), (-2.0, -1.0), (1e-9, 0.5)] {
        ensure(e(cusa_mean(1.0, p, q))? == 1.0, || format!("cusa_mean(1; {p}, {q}) != 1"))?;
    }
    ensure(e(endpoint_mean(1.0, 2.0, 0.5))? == 1.0 && e(cusa_mean_line(1.0, 8.0 / 15.0))? == 1.0, || "t = 1".into())?;
    // continuity across the special exponents
    for t in [0.1, 0.5, 0.9] {
        for (a, b) in [
            (e(cusa_mean(t, -1.0, 1e-8))?, e(cusa_mean(t, -1.0, 0.0))?),
            (e(cusa_mean(t, 1e-8, 1.0))?, e(cusa_mean(t, 0.0, 1.0))?),
            (e(cusa_mean_line(t, 8.0 / 15.0 + 1e-8))?, e(cusa_mean_line(t, 8.0 / 15.0))?),
            (e(cusa_mean_line(t, 1e-8))?, e(cusa_mean_line(t, 0.0))?),
            (e(cusa_mean_kq(t, 2.0, 1e-8))?, e(cusa_mean_kq(t, 2.0, 0.0))?),
        ] {
            near("branch continuity", a, b, 1e-6)?;
        }
    }
    Ok("parameter monotonicity on all grids; line limits t^(1/3) and 1".into())
}

// ---------------------------------------------------------------- criterion 8

pub fn means_identities() -> Check {
    let e = |r: cusa::Result<f64>| r.map_err(|e| e.to_string());
    let mut r = rng(8);
    let mut worst = 0;
    for _ in 0..500 {
        let a = 10f64.powf(r.gen_range(-2.0..2.0));
        let b = 10f64.powf(r.gen_range(-2.0..2.0));
        let g = e(mean(MeanKind::Geometric, a, b))?;
        let am = e(mean(MeanKind::Arithmetic, a, b))?;
        let qm = e(mean(MeanKind::Quadratic, a, b))?;
        for (kind, lo, hi) in [(MeanKind::SbGa, g, am), (MeanKind::SbAq, am, qm), (MeanKind::SbGq, g, qm)] {
            let d = ulp_distance(e(mean(kind, a, b))?, e(schwab_borchardt(lo, hi))?);
            worst = worst.max(d);
            ensure(d <= 4, || format!("{kind:?}({a}, {b}) differs from SB by {d} ulps"))?;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let d = ulp_distance(e(sine_mean(lo, hi, 1.0, 0.0))?, e(schwab_borchardt(lo, hi))?);
        worst = worst.max(d);
        ensure(d <= 4, || format!("S(1,0)({lo}, {hi}) differs from SB by {d} ulps"))?;
        for kind in [
            MeanKind::Geometric,
            MeanKind::Arithmetic,
            MeanKind::Quadratic,
            MeanKind::SbGa,
            MeanKind::SbAq,
            MeanKind::SbGq,
        ] {
            let v = e(mean(kind, a, b))?;
            ensure(v >= lo && v <= hi, || format!("{kind:?}({a}, {b}) = {v} not internal"))?;
            ensure(v == e(mean(kind, b, a))?, || format!("{kind:?} not symmetric at ({a}, {b})"))?;
            for lambda in [0.5, 2.0, 10.0] {
                let d = ulp_distance(e(mean(kind, lambda * a, lambda * b))?, lambda * v);
                ensure(d <= 4, || format!("{kind:?} homogeneity off by {d} ulps at ({a}, {b}), lambda {lambda}"))?;
            }
        }
        let v = e(schwab_borchardt(a, b))?;
        ensure(v >= lo && v <= hi, || format!("SB({a}, {b}) = {v} not internal"))?;
        let (p, q) = (r.gen_range(-2.0..=2.0), r.gen_range(-2.0..=2.0));
        if (0.0..=3.0).contains(&(p + q)) {
            let s = e(sine_mean(lo, hi, p, q))?;
            let slack = 1e-12 * hi;
            ensure(s >= lo - slack && s <= hi + slack, || format!("S({p},{q})({lo}, {hi}) = {s} not internal"))?;
        }
    }
    // independent closed forms
    near("P(1,3)", e(mean(MeanKind::SbGa, 1.0, 3.0))?, 6.0 / PI, 1e-14)?;
    near("T(1,3)", e(mean(MeanKind::SbAq, 1.0, 3.0))?, 1.0 / 0.5f64.atan(), 1e-14)?;
    near("SB(0,1)", e(schwab_borchardt(0.0, 1.0))?, FRAC_2_PI, 1e-15)?;
    near("SB(2,1)", e(schwab_borchardt(2.0, 1.0))?, 3f64.sqrt() / (2.0 + 3f64.sqrt()).ln(), 1e-14)?;
    Ok(format!("500 seeded pairs, worst identity gap {worst} ulps"))
}

// ---------------------------------------------------------------- criterion 9

fn exact_bernoulli(n_max: usize) -> Vec<BigRational> {
    // B_m from sum_{k=0}^{m} C(m+1, k) B_k = 0, independent of the library
    let mut b = vec![BigRational::one()];
    for m in 1..=2 * n_max {
        let mut sum = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            sum += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-sum / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

fn within_one_ulp(shadow: f64, exact: &BigRational) -> bool {
    let Some(s) = BigRational::from_float(shadow) else {
        return false;
    };
    let ulp = BigRational::from_float(shadow.abs() * f64::EPSILON).unwrap_or_else(BigRational::zero);
    (s - exact).abs() <= ulp
}

pub fn series_oracle() -> Check {
    let table = global_table();
    let bern = exact_bernoulli(40);
    for n in 1..=40 {
        let want = bern[2 * n].abs();
        ensure(table.bernoulli_abs(n) == &want, || format!("|B_{}| mismatch", 2 * n))?;
        ensure(within_one_ulp(table.bernoulli_abs_f64(n), &want), || format!("|B_{}| float shadow", 2 * n))?;
    }
    for n in 2..=40 {
        for (name, exact, shadow) in [
            ("p_part", table.p_part(n), table.p_part_f64(n)),
            ("q_part", table.q_part(n), table.q_part_f64(n)),
            ("free_part", table.free_part(n), table.free_part_f64(n)),
        ] {
            ensure(exact.is_positive(), || format!("{name}[{n}] not positive"))?;
            ensure(within_one_ulp(shadow, exact), || format!("{name}[{n}] float shadow"))?;
        }
        let gap = table.q_part(n) - BigRational::from_integer(3.into()) * table.p_part(n);
        if n == 2 {
            ensure(gap.is_zero(), || "q_part[2] - 3 p_part[2] != 0".into())?;
        } else {
            ensure(gap.is_positive(), || format!("q_part[{n}] - 3 p_part[{n}] not positive"))?;
        }
    }
    let mut r = rng(9);
    let mut worst: f64 = 0.0;
    for kind in [Elementary::Csc, Elementary::Cot, Elementary::CscSquared, Elementary::Tan] {
        let half = if kind == Elementary::Tan { PI / 4.0 } else { FRAC_PI_2 };
        for _ in 0..100 {
            let x = r.gen_range(0.01..half) * if r.gen_bool(0.5) { 1.0 } else { -1.0 };
            let direct = match kind {
                Elementary::Csc => 1.0 / x.sin(),
                Elementary::Cot => x.cos() / x.sin(),
                Elementary::CscSquared => 1.0 / (x.sin() * x.sin()),
                Elementary::Tan => x.tan(),
            };
            let s = elementary_series(kind, x, 30).map_err(|e| e.to_string())?;
            worst = worst.max((s - direct).abs());
            ensure((s - direct).abs() <= 1e-10, || format!("{} series at {x}: {s} vs {direct}", kind.name()))?;
        }
    }
    // coefficient-ratio profiles, in exact arithmetic
    let rat = |v: f64| BigRational::from_float(v).unwrap_or_else(BigRational::zero);
    for (q, increasing) in [(1.0, true), (1.5, true), (2.0, true), (0.9, false), (0.5, false), (0.0, false), (-1.0, false)] {
        let seq: Vec<BigRational> = (2..=40)
            .map(|n| p_threshold_coeff_ratio_exact(n, &rat(q)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure(seq.windows(2).all(|w| if increasing { w[1] > w[0] } else { w[1] < w[0] }), || {
            format!("p-threshold coefficient ratio at q = {q} has the wrong direction")
        })?;
    }
    let at_line: Vec<BigRational> = (2..=40)
        .map(|n| p_threshold_coeff_ratio_exact(n, &BigRational::new(34.into(), 35.into())))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(at_line.windows(2).all(|w| w[1] <= w[0]), || "ratio at q = 34/35 increases".into())?;
    let line: Vec<BigRational> = (3..=40).map(line_threshold_coeff_ratio_exact).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(line[0] == BigRational::new(34.into(), 35.into()), || "line ratio at n = 3 is not 34/35".into())?;
    ensure(line.windows(2).all(|w| w[1] > w[0]), || "line coefficient ratio not increasing".into())?;
    ensure(line.iter().all(|v| v < &BigRational::one()), || "line coefficient ratio reaches 1".into())?;
    Ok(format!("Bernoulli and coefficient tables exact to n = 40; series worst error {worst:.1e}"))
}

/// Quick smoke checks on single values used across files.
pub fn point_values() -> Check {
    let e = |r: cusa::Result<f64>| r.map_err(|e| e.to_string());
    near("ratio(1,1,1e-4)", e(cusa_ratio(1.0, 1.0, 1e-4))?, 1.0 / 3.0, 1e-8)?;
    near("ratio(0,0,pi/3)", e(cusa_ratio(0.0, 0.0, PI / 3.0))?, ((PI / 3.0).sin() / (PI / 3.0)).ln() / 0.5f64.ln(), 1e-14)?;
    near("excess on the line at 34/35", e(ratio_excess(46.0 / 35.0, LINE_Q, 1e-3))?, 0.0, 1e-11)?;
    let lc = limit_coeffs(&ParamPoint::new(1.0, 1.0).map_err(|e| e.to_string())?);
    near("L2(1,1)", lc.quadratic, 1.0 / 90.0, 1e-16)?;
    near("endpoint(1,1)", lc.endpoint_excess, 1.0 - FRAC_2_PI - 1.0 / 3.0, 1e-15)?;
    let p_of_q = p_crit_of_q(1.5).map_err(|e| e.to_string())?;
    near("q_of_p(p_of_q(1.5))", q_crit_of_p(p_of_q.value), 1.5, 1e-10)?;
    Ok("ok".into())
}
