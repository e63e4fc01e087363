//! Deterministic sampling checks of catalog claims.
//!
//! Sample points are a uniform grid plus seeded uniform draws from a
//! `ChaCha8` generator (`rand_chacha::ChaCha8Rng::seed_from_u64(seed)`), all
//! inside the claim interval shrunk by the endpoint gap. A chain
//! `e_0 < ... < e_n` is scored per point by its weakest adjacent link.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::claims::{chain_claim, lookup, Claim, FailSide, Params};
use crate::error::{Error, Result};
use crate::kernel::expansion_deviation;

pub const DEFAULT_SEED: u64 = 20_240_607;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub grid_points: usize,
    pub random_points: usize,
    pub seed: u64,
    pub endpoint_gap: f64,
    pub inconclusive_margin: f64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        Self {
            grid_points: 4096,
            random_points: 4096,
            seed: DEFAULT_SEED,
            endpoint_gap: 1e-6,
            inconclusive_margin: 1e-13,
        }
    }
}

impl SampleSpec {
    pub fn validate(&self, interval: (f64, f64)) -> Result<()> {
        if self.grid_points < 16 {
            return Err(Error::SampleSpec(format!("grid_points = {} < 16", self.grid_points)));
        }
        if self.endpoint_gap.is_nan() || self.endpoint_gap <= 0.0 {
            return Err(Error::SampleSpec(format!("endpoint_gap = {} must be positive", self.endpoint_gap)));
        }
        if self.inconclusive_margin.is_nan() || self.inconclusive_margin < 0.0 {
            return Err(Error::SampleSpec("inconclusive_margin must be non-negative".into()));
        }
        if interval.0 + self.endpoint_gap >= interval.1 - self.endpoint_gap {
            return Err(Error::SampleSpec("domain is empty after shrinking".into()));
        }
        Ok(())
    }

    /// Grid points first (ascending), then the seeded random points.
    pub fn points(&self, interval: (f64, f64)) -> Result<Vec<f64>> {
        self.validate(interval)?;
        let lo = interval.0 + self.endpoint_gap;
        let hi = interval.1 - self.endpoint_gap;
        let n = self.grid_points;
        let mut out = Vec::with_capacity(n + self.random_points);
        out.extend((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64));
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        out.extend((0..self.random_points).map(|_| rng.gen_range(lo..hi)));
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub point: f64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim_id: String,
    pub param_values: Params,
    pub samples_evaluated: usize,
    pub min_margin: f64,
    pub argmin: f64,
    pub violations: Vec<Violation>,
    pub inconclusive_count: usize,
    pub status: Status,
    pub seed: u64,
}

/// One sample: the weakest link's two sides and their gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointEval {
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub link: usize,
}

fn weakest_link(claim: &Claim, params: &Params, x: f64) -> PointEval {
    let values: Vec<f64> = claim.chain.terms(params).iter().map(|t| t.eval(x, params)).collect();
    let mut best = PointEval {
        x,
        lhs: f64::NAN,
        rhs: f64::NAN,
        margin: f64::INFINITY,
        link: 0,
    };
    for (i, w) in values.windows(2).enumerate() {
        // a non-finite side can never certify the link
        let margin = if w[0].is_finite() && w[1].is_finite() {
            w[1] - w[0]
        } else {
            f64::NEG_INFINITY
        };
        if margin < best.margin || i == 0 {
            best = PointEval {
                x,
                lhs: w[0],
                rhs: w[1],
                margin,
                link: i,
            };
        }
    }
    best
}

/// Evaluates the claim at every sample point without judging it.
pub fn sample_claim(claim: &Claim, params: &Params, spec: &SampleSpec) -> Result<Vec<PointEval>> {
    claim.check_params(params)?;
    let points = spec.points(claim.variable.interval())?;
    Ok(points.into_iter().map(|x| weakest_link(claim, params, x)).collect())
}

fn summarize(claim: &Claim, params: &Params, spec: &SampleSpec, evals: &[PointEval]) -> Report {
    let tol = spec.inconclusive_margin;
    let mut violations = Vec::new();
    let mut inconclusive = 0;
    let mut best: Option<(f64, f64)> = None;
    let mut raw_best: Option<(f64, f64)> = None;
    let better = |cur: Option<(f64, f64)>, m: f64, x: f64| match cur {
        None => true,
        Some((bm, bx)) => m < bm || (m == bm && x < bx),
    };
    for e in evals {
        if better(raw_best, e.margin, e.x) {
            raw_best = Some((e.margin, e.x));
        }
        if e.margin.abs() < tol {
            inconclusive += 1;
            continue;
        }
        if e.margin < 0.0 {
            violations.push(Violation {
                point: e.x,
                lhs: e.lhs,
                rhs: e.rhs,
            });
        }
        if better(best, e.margin, e.x) {
            best = Some((e.margin, e.x));
        }
    }
    let (status, min_margin, argmin) = match best {
        Some((m, x)) if m < 0.0 => (Status::Fail, m, x),
        Some((m, x)) => (Status::Pass, m, x),
        // nothing resolved: report a zero margin at the tightest raw point
        None => (Status::Inconclusive, 0.0, raw_best.map_or(f64::NAN, |(_, x)| x)),
    };
    violations.sort_by(|a, b| a.point.total_cmp(&b.point));
    Report {
        claim_id: claim.id.to_string(),
        param_values: params.clone(),
        samples_evaluated: evals.len(),
        min_margin,
        argmin,
        violations,
        inconclusive_count: inconclusive,
        status,
        seed: spec.seed,
    }
}

/// Checks a claim at the given parameters. Preconditions are enforced; the
/// sharp ("iff") conditions are not, so a run past a sharp boundary is
/// expected to fail.
pub fn verify_claim(claim: &Claim, params: &Params, spec: &SampleSpec) -> Result<Report> {
    let evals = sample_claim(claim, params, spec)?;
    Ok(summarize(claim, params, spec, &evals))
}

pub fn verify(claim_id: &str, params: &Params, spec: &SampleSpec) -> Result<Report> {
    verify_claim(lookup(claim_id)?, params, spec)
}

pub fn verify_chain(name: &str, spec: &SampleSpec) -> Result<Report> {
    verify_claim(chain_claim(name)?, &Params::new(), spec)
}

/// Margin of a single violation recomputed from scratch.
pub fn recheck(claim: &Claim, params: &Params, x: f64) -> f64 {
    weakest_link(claim, params, x).margin
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub delta: f64,
    pub boundary: f64,
    pub report: Report,
}

/// Parameters on the sharp boundary of `param`, or pushed `delta` past it.
pub fn boundary_params(claim: &Claim, base: &Params, param: &str, delta: f64) -> Result<(Params, f64)> {
    let b = claim
        .sharp
        .iter()
        .find(|s| s.param == param)
        .ok_or_else(|| Error::NoBoundary {
            claim: claim.id.to_string(),
            param: param.to_string(),
        })?;
    let mut m = claim.complete_params(base);
    let boundary = b.value.eval(&m);
    let v = match b.fails {
        FailSide::Above => boundary + delta,
        FailSide::Below => boundary - delta,
    };
    m.insert(param.to_string(), v);
    Ok((m, boundary))
}

/// Verifies at the boundary itself (delta 0) and at each pushed-out value.
pub fn probe_sharpness(
    claim_id: &str,
    base: &Params,
    param: &str,
    deltas: &[f64],
    spec: &SampleSpec,
) -> Result<Vec<ProbeResult>> {
    let claim = lookup(claim_id)?;
    let mut all = vec![0.0];
    for &d in deltas {
        if !(d >= 0.0 && d.is_finite()) {
            return Err(Error::Domain {
                what: "delta",
                value: d,
                expected: "finite and non-negative",
            });
        }
        if d != 0.0 {
            all.push(d);
        }
    }
    all.into_iter()
        .map(|delta| {
            let (m, boundary) = boundary_params(claim, base, param, delta)?;
            Ok(ProbeResult {
                delta,
                boundary,
                report: verify_claim(claim, &m, spec)?,
            })
        })
        .collect()
}

/// Largest relative deviation of `(T - 1/3)/x^2` from its two-term expansion.
pub fn check_expansion(p: f64, q: f64, xs: &[f64]) -> Result<f64> {
    Ok(expansion_deviation(p, q, xs)?.into_iter().fold(0.0, f64::max))
}
