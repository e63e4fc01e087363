//! Catalog of inequality statements.
//!
//! Every claim is an ordered chain `e_0 < e_1 < ... < e_n` of expression
//! terms over one real variable (an angle `x`, an argument `t`, or a ratio
//! `a/b` of two positive numbers with `b = 1`). Parameters come in two kinds:
//! preconditions (the statement says nothing outside them) and sharp
//! boundaries (the statement is an "iff": crossing them must break it).

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, PI};
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{endpoint_mean_unchecked, is_kq_admissible, line_unchecked, scaled_cusa_mean};
use crate::constants::{p_crit_of_q, p_line_crit, p_unit_crit, q_crit_of_k, q_crit_of_p, q_line_crit, quarter_constant};
use crate::error::{Error, Result};
use crate::kernel::{endpoint_p, is_admissible, LINE_Q};
use crate::means::{line_estimate, mean, schwab_borchardt, MeanKind};
use crate::numeric::{ln_cos, ln_sinc, pow_deficit, sinc};

pub type Params = BTreeMap<String, f64>;

fn get(m: &Params, name: &str) -> f64 {
    m.get(name).copied().unwrap_or(f64::NAN)
}

/// A number that may depend on the parameter values.
#[derive(Clone, Copy)]
pub enum Scalar {
    Lit(f64),
    Param(&'static str),
    Derived(&'static str, fn(&Params) -> f64),
}

impl Scalar {
    pub fn eval(&self, m: &Params) -> f64 {
        match self {
            Scalar::Lit(v) => *v,
            Scalar::Param(n) => get(m, n),
            Scalar::Derived(_, f) => f(m),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Scalar::Lit(v) => format!("{v}"),
            Scalar::Param(n) => (*n).to_string(),
            Scalar::Derived(l, _) => (*l).to_string(),
        }
    }
}

impl std::fmt::Debug for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variable {
    /// Angle `x` in `(0, pi/2)`.
    Angle,
    /// Argument `t` in `(0, 1)` of arcsin / arccos.
    Argument,
    /// `r = a/b` in `(0, 1)` with `b = 1`.
    Ratio,
}

impl Variable {
    pub fn interval(self) -> (f64, f64) {
        match self {
            Variable::Angle => (0.0, FRAC_PI_2),
            Variable::Argument | Variable::Ratio => (0.0, 1.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variable::Angle => "x",
            Variable::Argument => "t",
            Variable::Ratio => "r",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvFn {
    Asin,
    Acos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Via {
    /// Divide by the Cusa-type family.
    Cusa,
    /// Divide by the endpoint-anchored family.
    Endpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfConst {
    Three,
    Quarter,
}

/// Expression tags; each resolves to exactly one evaluator in [`Term::eval`].
#[derive(Debug, Clone, Copy)]
pub enum Term {
    Sinc,
    SincPow(Scalar),
    /// `(a + b cos^gamma(scale x))^delta`.
    CosAffinePow {
        a: Scalar,
        b: Scalar,
        scale: f64,
        gamma: Scalar,
        delta: f64,
    },
    /// `exp(a + b cos^gamma x)`.
    ExpCosAffine { a: f64, b: f64, gamma: f64 },
    /// `(a + b ln cos x)^delta`.
    LogCosPow { a: f64, b: f64, delta: f64 },
    /// `exp(-x^2/6)`.
    Gauss,
    /// `(cos x * sin(x)/x)^{1/4}`.
    CosSincQuarter,
    /// `(sin x / artanh(sin x))^{1/2}`.
    SinOverArtanhSqrt,
    /// `((cos x + sin(x)/x)/2)^{1/2}`.
    CosSincMeanSqrt,
    /// `1 - p/(3q) + p/(3q) cos^q x`, with the `q -> 0` limit `1 + (p/3) ln cos x`.
    CusaBase { p: Scalar, q: Scalar },
    CusaMean { p: Scalar, q: Scalar },
    EndpointMean { p: Scalar, q: Scalar },
    CusaMeanKq { k: Scalar, q: Scalar },
    CusaMeanLine { q: Scalar },
    /// `(1 - (sin x/x)^p)/p`.
    SincDeficit { p: Scalar },
    /// `(1 - cos^q x)/(3q)`.
    CosDeficitThird { q: Scalar },
    /// `(1 - w)(x/sin x)^q + w (x/tan x)^q`.
    SecantMix { w: Scalar, q: Scalar },
    Inverse(InvFn),
    /// `sin x / family(cos x)` written in `t`.
    InvBasic { f: InvFn, via: Via, p: Scalar, q: Scalar },
    /// `2 sin(x/2) / family_kappa(cos(x/2))` written in `t`.
    InvHalf { f: InvFn, kappa: HalfConst, p: Scalar, q: Scalar },
    /// `3t/(2 + sqrt(1-t^2))`.
    AsinClassicLower,
    /// `pi t/(2 + sqrt(1-t^2))`.
    AsinClassicUpper,
    /// `6 (sqrt(1+t) - sqrt(1-t))/(4 + sqrt(1+t) + sqrt(1-t))`.
    AsinHalfClassic,
    /// `6 sqrt(1-t)/(2 sqrt 2 + sqrt(1+t))`.
    AcosClassicLower,
    /// `2^{2/3} sqrt(1-t)/(1+t)^{1/6}`.
    AcosClassicUpper,
    /// Schwab-Borchardt mean of `(r, 1)`.
    SbMean,
    Mean(MeanKind),
    SbKq { k: Scalar, q: Scalar },
    SbLine { q: Scalar },
    LineEstimate { kind: MeanKind, q: Scalar },
}

fn cos_pow_in(x: f64, gamma: f64) -> f64 {
    (gamma * ln_cos(x)).exp()
}

fn family_at(c: f64, p: f64, q: f64) -> f64 {
    if c == 0.0 && q <= 0.0 {
        0.0
    } else {
        scaled_cusa_mean(c, p, q, 3.0)
    }
}

impl Term {
    /// Value at the claim variable `v` (an angle, an argument or a ratio).
    pub fn eval(&self, v: f64, m: &Params) -> f64 {
        match *self {
            Term::Sinc => sinc(v),
            Term::SincPow(p) => (p.eval(m) * ln_sinc(v)).exp(),
            Term::CosAffinePow {
                a,
                b,
                scale,
                gamma,
                delta,
            } => {
                let c = cos_pow_in(scale * v, gamma.eval(m));
                (a.eval(m) + b.eval(m) * c).powf(delta)
            }
            Term::ExpCosAffine { a, b, gamma } => (a + b * cos_pow_in(v, gamma)).exp(),
            Term::LogCosPow { a, b, delta } => (a + b * ln_cos(v)).powf(delta),
            Term::Gauss => (-v * v / 6.0).exp(),
            Term::CosSincQuarter => (0.25 * (ln_cos(v) + ln_sinc(v))).exp(),
            Term::SinOverArtanhSqrt => {
                let (s, c) = v.sin_cos();
                // artanh(sin x) = ln((1 + sin x)/cos x); the log form keeps accuracy near pi/2
                let h = if s < 0.5 { s.atanh() } else { ((1.0 + s) / c).ln() };
                (s / h).sqrt()
            }
            Term::CosSincMeanSqrt => (0.5 * (v.cos() + sinc(v))).sqrt(),
            Term::CusaBase { p, q } => {
                let (p, q) = (p.eval(m), q.eval(m));
                // 1 + (p/3) (cos^q - 1)/q
                1.0 - p / 3.0 * pow_deficit(q, ln_cos(v))
            }
            Term::CusaMean { p, q } => scaled_cusa_mean(v.cos(), p.eval(m), q.eval(m), 3.0),
            Term::EndpointMean { p, q } => endpoint_mean_unchecked(v.cos(), p.eval(m), q.eval(m)),
            Term::CusaMeanKq { k, q } => {
                let q = q.eval(m);
                scaled_cusa_mean(v.cos(), k.eval(m) * q, q, 3.0)
            }
            Term::CusaMeanLine { q } => line_unchecked(v.cos(), q.eval(m)),
            Term::SincDeficit { p } => pow_deficit(p.eval(m), ln_sinc(v)),
            Term::CosDeficitThird { q } => pow_deficit(q.eval(m), ln_cos(v)) / 3.0,
            Term::SecantMix { w, q } => {
                let (w, q) = (w.eval(m), q.eval(m));
                let over_sin = (-q * ln_sinc(v)).exp();
                let over_tan = (q * (ln_cos(v) - ln_sinc(v))).exp();
                (1.0 - w) * over_sin + w * over_tan
            }
            Term::Inverse(InvFn::Asin) => v.asin(),
            Term::Inverse(InvFn::Acos) => v.acos(),
            Term::InvBasic { f, via, p, q } => {
                let co = ((1.0 - v) * (1.0 + v)).sqrt();
                let (s, c) = match f {
                    InvFn::Asin => (v, co),
                    InvFn::Acos => (co, v),
                };
                let (p, q) = (p.eval(m), q.eval(m));
                match via {
                    Via::Cusa => s / family_at(c, p, q),
                    Via::Endpoint => s / endpoint_mean_unchecked(c, p, q),
                }
            }
            Term::InvHalf { f, kappa, p, q } => {
                let (p, q) = (p.eval(m), q.eval(m));
                let (chord, half_cos) = match f {
                    InvFn::Asin => {
                        let (rp, rm) = ((1.0 + v).sqrt(), (1.0 - v).sqrt());
                        (2.0 * v / (rp + rm), 0.5 * (rp + rm))
                    }
                    InvFn::Acos => ((2.0 * (1.0 - v)).sqrt(), (0.5 * (1.0 + v)).sqrt()),
                };
                let k = match kappa {
                    HalfConst::Three => 3.0,
                    HalfConst::Quarter => quarter_constant(p, q),
                };
                chord / scaled_cusa_mean(half_cos, p, q, k)
            }
            Term::AsinClassicLower => 3.0 * v / (2.0 + ((1.0 - v) * (1.0 + v)).sqrt()),
            Term::AsinClassicUpper => PI * v / (2.0 + ((1.0 - v) * (1.0 + v)).sqrt()),
            Term::AsinHalfClassic => {
                let (rp, rm) = ((1.0 + v).sqrt(), (1.0 - v).sqrt());
                6.0 * (2.0 * v / (rp + rm)) / (4.0 + rp + rm)
            }
            Term::AcosClassicLower => {
                6.0 * (1.0 - v).sqrt() / (2.0 * std::f64::consts::SQRT_2 + (1.0 + v).sqrt())
            }
            Term::AcosClassicUpper => 4f64.cbrt() * (1.0 - v).sqrt() / (1.0 + v).powf(1.0 / 6.0),
            Term::SbMean => schwab_borchardt(v, 1.0).unwrap_or(f64::NAN),
            Term::Mean(kind) => mean(kind, v, 1.0).unwrap_or(f64::NAN),
            Term::SbKq { k, q } => {
                let q = q.eval(m);
                scaled_cusa_mean(v, k.eval(m) * q, q, 3.0)
            }
            Term::SbLine { q } => line_unchecked(v, q.eval(m)),
            Term::LineEstimate { kind, q } => line_estimate(kind, v, 1.0, q.eval(m)).unwrap_or(f64::NAN),
        }
    }

    pub fn tag(&self) -> String {
        match self {
            Term::Sinc => "sin(x)/x".into(),
            Term::SincPow(p) => format!("(sin(x)/x)^{}", p.label()),
            Term::CosAffinePow {
                a,
                b,
                scale,
                gamma,
                delta,
            } => {
                let arg = if *scale == 1.0 { "x".to_string() } else { format!("{scale}x") };
                format!("({} + {} cos^{}({arg}))^{delta}", a.label(), b.label(), gamma.label())
            }
            Term::ExpCosAffine { a, b, gamma } => format!("exp({a} + {b} cos^{gamma}(x))"),
            Term::LogCosPow { a, b, delta } => format!("({a} + {b} ln cos(x))^{delta}"),
            Term::Gauss => "exp(-x^2/6)".into(),
            Term::CosSincQuarter => "(cos(x) sin(x)/x)^(1/4)".into(),
            Term::SinOverArtanhSqrt => "(sin(x)/artanh(sin(x)))^(1/2)".into(),
            Term::CosSincMeanSqrt => "((cos(x) + sin(x)/x)/2)^(1/2)".into(),
            Term::CusaBase { p, q } => format!("cusa_base(p={}, q={})", p.label(), q.label()),
            Term::CusaMean { p, q } => format!("cusa_mean(cos x; p={}, q={})", p.label(), q.label()),
            Term::EndpointMean { p, q } => {
                format!("endpoint_mean(cos x; p={}, q={})", p.label(), q.label())
            }
            Term::CusaMeanKq { k, q } => {
                format!("cusa_mean_kq(cos x; k={}, q={})", k.label(), q.label())
            }
            Term::CusaMeanLine { q } => format!("cusa_mean_line(cos x; q={})", q.label()),
            Term::SincDeficit { p } => format!("sinc_deficit(p={})", p.label()),
            Term::CosDeficitThird { q } => format!("cos_deficit(q={})/3", q.label()),
            Term::SecantMix { w, q } => format!("secant_mix(w={}, q={})", w.label(), q.label()),
            Term::Inverse(InvFn::Asin) => "arcsin(t)".into(),
            Term::Inverse(InvFn::Acos) => "arccos(t)".into(),
            Term::InvBasic { f, via, p, q } => format!(
                "{}_basic_{}(p={}, q={})",
                inv_name(*f),
                match via {
                    Via::Cusa => "cusa",
                    Via::Endpoint => "endpoint",
                },
                p.label(),
                q.label()
            ),
            Term::InvHalf { f, kappa, p, q } => format!(
                "{}_halfangle_{}(p={}, q={})",
                inv_name(*f),
                match kappa {
                    HalfConst::Three => "three",
                    HalfConst::Quarter => "quarter",
                },
                p.label(),
                q.label()
            ),
            Term::AsinClassicLower => "3t/(2+sqrt(1-t^2))".into(),
            Term::AsinClassicUpper => "pi t/(2+sqrt(1-t^2))".into(),
            Term::AsinHalfClassic => "6(sqrt(1+t)-sqrt(1-t))/(4+sqrt(1+t)+sqrt(1-t))".into(),
            Term::AcosClassicLower => "6 sqrt(1-t)/(2 sqrt2 + sqrt(1+t))".into(),
            Term::AcosClassicUpper => "2^(2/3) sqrt(1-t)/(1+t)^(1/6)".into(),
            Term::SbMean => "SB(r, 1)".into(),
            Term::Mean(k) => format!("{}(r, 1)", mean_name(*k)),
            Term::SbKq { k, q } => format!("sb_bound_kq(r, 1; k={}, q={})", k.label(), q.label()),
            Term::SbLine { q } => format!("sb_bound_line(r, 1; q={})", q.label()),
            Term::LineEstimate { kind, q } => {
                format!("line_estimate_{}(r, 1; q={})", mean_name(*kind), q.label())
            }
        }
    }
}

fn inv_name(f: InvFn) -> &'static str {
    match f {
        InvFn::Asin => "arcsin",
        InvFn::Acos => "arccos",
    }
}

fn mean_name(k: MeanKind) -> &'static str {
    match k {
        MeanKind::Geometric => "G",
        MeanKind::Arithmetic => "A",
        MeanKind::Quadratic => "Q",
        MeanKind::SbGa => "P",
        MeanKind::SbAq => "T",
        MeanKind::SbGq => "U",
    }
}

#[derive(Clone)]
pub enum Chain {
    Fixed(Vec<Term>),
    /// Different displayed forms depending on the sign of parameter `p`.
    BySignOfP {
        pos: Vec<Term>,
        zero: Vec<Term>,
        neg: Vec<Term>,
    },
}

impl Chain {
    pub fn terms(&self, m: &Params) -> &[Term] {
        match self {
            Chain::Fixed(t) => t,
            Chain::BySignOfP { pos, zero, neg } => {
                let p = get(m, "p");
                if p.abs() < 1e-12 {
                    zero
                } else if p > 0.0 {
                    pos
                } else {
                    neg
                }
            }
        }
    }

    pub fn all_terms(&self) -> Vec<&Term> {
        match self {
            Chain::Fixed(t) => t.iter().collect(),
            Chain::BySignOfP { pos, zero, neg } => pos.iter().chain(zero).chain(neg).collect(),
        }
    }
}

#[derive(Clone, Copy)]
pub struct Condition {
    pub label: &'static str,
    pub test: fn(&Params) -> bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailSide {
    /// The claim breaks once the parameter exceeds the boundary.
    Above,
    Below,
}

#[derive(Debug, Clone, Copy)]
pub struct SharpBoundary {
    pub param: &'static str,
    pub value: Scalar,
    pub fails: FailSide,
}

impl SharpBoundary {
    pub fn holds(&self, m: &Params) -> bool {
        let (v, b) = (get(m, self.param), self.value.eval(m));
        let tol = 1e-12 * (1.0 + b.abs());
        match self.fails {
            FailSide::Above => v <= b + tol,
            FailSide::Below => v >= b - tol,
        }
    }
}

/// Sampling interval for one parameter; bounds may use earlier parameters.
#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub lo: Scalar,
    pub hi: Scalar,
}

#[derive(Clone)]
pub struct Claim {
    pub id: &'static str,
    pub anchor: &'static str,
    pub statement: &'static str,
    pub variable: Variable,
    pub params: Vec<ParamSpec>,
    pub preconditions: Vec<Condition>,
    pub chain: Chain,
    pub sharp: Vec<SharpBoundary>,
    pub instances: Vec<Vec<(&'static str, Scalar)>>,
    pub equivalent_to: Option<&'static str>,
}

impl Claim {
    pub fn param_names(&self) -> Vec<&'static str> {
        self.params.iter().map(|p| p.name).collect()
    }

    /// Checks names and preconditions; sharp conditions are allowed to fail.
    pub fn check_params(&self, m: &Params) -> Result<()> {
        for name in self.param_names() {
            match m.get(name) {
                Some(v) if v.is_finite() => {}
                Some(_) => return Err(Error::Domain { what: "parameter", value: get(m, name), expected: "finite" }),
                None => return Err(Error::MissingParam(name.to_string())),
            }
        }
        for key in m.keys() {
            if !self.param_names().contains(&key.as_str()) {
                return Err(Error::UnexpectedParam(key.clone()));
            }
        }
        for c in &self.preconditions {
            if !(c.test)(m) {
                return Err(Error::Precondition {
                    claim: self.id.to_string(),
                    condition: c.label.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Whether the parameters lie where the claim asserts the chain.
    pub fn asserted_at(&self, m: &Params) -> bool {
        self.preconditions.iter().all(|c| (c.test)(m)) && self.sharp.iter().all(|s| s.holds(m))
    }

    pub fn instance_params(&self) -> Vec<Params> {
        self.instances
            .iter()
            .map(|inst| {
                let mut m = Params::new();
                for (name, s) in inst {
                    let v = s.eval(&m);
                    m.insert((*name).to_string(), v);
                }
                m
            })
            .collect()
    }

    /// Fills parameters missing from `given` from the first listed instance,
    /// re-deriving dependent values from what the caller supplied.
    pub fn complete_params(&self, given: &Params) -> Params {
        let mut m = Params::new();
        if let Some(inst) = self.instances.first() {
            for (name, s) in inst {
                let v = given.get(*name).copied().unwrap_or_else(|| s.eval(&m));
                m.insert((*name).to_string(), v);
            }
        }
        for (k, v) in given {
            m.insert(k.clone(), *v);
        }
        m
    }

    /// Draws an asserted parameter point from the sampling box.
    pub fn sample_params<R: Rng>(&self, rng: &mut R) -> Option<Params> {
        for _ in 0..10_000 {
            let mut m = Params::new();
            for spec in &self.params {
                let (lo, hi) = (spec.lo.eval(&m), spec.hi.eval(&m));
                let v = if hi > lo { rng.gen_range(lo..=hi) } else { lo };
                m.insert(spec.name.to_string(), v);
            }
            if self.asserted_at(&m) {
                return Some(m);
            }
        }
        None
    }

    pub fn summary(&self) -> ClaimSummary {
        ClaimSummary {
            id: self.id.to_string(),
            anchor: self.anchor.to_string(),
            statement: self.statement.to_string(),
            variable: self.variable,
            domain: self.variable.interval(),
            params: self
                .params
                .iter()
                .map(|p| ParamSummary {
                    name: p.name.to_string(),
                    sample_lo: p.lo.label(),
                    sample_hi: p.hi.label(),
                })
                .collect(),
            preconditions: self.preconditions.iter().map(|c| c.label.to_string()).collect(),
            chain: self.chain.all_terms().iter().map(|t| t.tag()).collect(),
            sharp_boundaries: self
                .sharp
                .iter()
                .map(|s| BoundarySummary {
                    param: s.param.to_string(),
                    value: s.value.label(),
                    fails: s.fails,
                })
                .collect(),
            instances: self.instance_params(),
            equivalent_to: self.equivalent_to.map(str::to_string),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamSummary {
    pub name: String,
    pub sample_lo: String,
    pub sample_hi: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundarySummary {
    pub param: String,
    pub value: String,
    pub fails: FailSide,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub id: String,
    pub anchor: String,
    pub statement: String,
    pub variable: Variable,
    pub domain: (f64, f64),
    pub params: Vec<ParamSummary>,
    pub preconditions: Vec<String>,
    pub chain: Vec<String>,
    pub sharp_boundaries: Vec<BoundarySummary>,
    pub instances: Vec<Params>,
    pub equivalent_to: Option<String>,
}

// ---- construction helpers -------------------------------------------------

const fn lit(v: f64) -> Scalar {
    Scalar::Lit(v)
}

const fn par(n: &'static str) -> Scalar {
    Scalar::Param(n)
}

const fn der(label: &'static str, f: fn(&Params) -> f64) -> Scalar {
    Scalar::Derived(label, f)
}

fn ps(name: &'static str, lo: Scalar, hi: Scalar) -> ParamSpec {
    ParamSpec { name, lo, hi }
}

fn cond(label: &'static str, test: fn(&Params) -> bool) -> Condition {
    Condition { label, test }
}

fn sharp(param: &'static str, value: Scalar, fails: FailSide) -> SharpBoundary {
    SharpBoundary { param, value, fails }
}

fn cos_pow(g: f64) -> Term {
    Term::CosAffinePow {
        a: lit(0.0),
        b: lit(1.0),
        scale: 1.0,
        gamma: lit(g),
        delta: 1.0,
    }
}

fn cos_scaled(scale: f64, power: f64) -> Term {
    Term::CosAffinePow {
        a: lit(0.0),
        b: lit(1.0),
        scale,
        gamma: lit(power),
        delta: 1.0,
    }
}

fn affine(a: f64, b: f64, gamma: f64, delta: f64) -> Term {
    Term::CosAffinePow {
        a: lit(a),
        b: lit(b),
        scale: 1.0,
        gamma: lit(gamma),
        delta,
    }
}

fn cusa() -> Term {
    affine(2.0 / 3.0, 1.0 / 3.0, 1.0, 1.0)
}

fn m_pq(p: Scalar, q: Scalar) -> Term {
    Term::CusaMean { p, q }
}

fn n_pq(p: Scalar, q: Scalar) -> Term {
    Term::EndpointMean { p, q }
}

fn kq(k: Scalar, q: Scalar) -> Term {
    Term::CusaMeanKq { k, q }
}

fn inst(pairs: &[(&'static str, Scalar)]) -> Vec<(&'static str, Scalar)> {
    pairs.to_vec()
}

// common derived values
const LINE_P: Scalar = der("3q-8/5", |m| 3.0 * get(m, "q") - 1.6);
const THREE_Q: Scalar = der("3q", |m| 3.0 * get(m, "q"));
const P_THIRD_LINE: Scalar = der("p/3+8/15", |m| get(m, "p") / 3.0 + 8.0 / 15.0);
const P_THIRD: Scalar = der("p/3", |m| get(m, "p") / 3.0);
const Q_OF_P: Scalar = der("q_crit(p)", |m| q_crit_of_p(get(m, "p")));
const P_OF_Q: Scalar = der("p_crit(q)", |m| p_crit_of_q(get(m, "q")).map(|c| c.value).unwrap_or(f64::NAN));
const K_LINE: Scalar = der("8/(5(3-k))", |m| 1.6 / (3.0 - get(m, "k")));
const Q_OF_K: Scalar = der("q_crit(k)", |m| q_crit_of_k(get(m, "k")).unwrap_or(f64::NAN));
const P0: Scalar = der("p0", |_| p_unit_crit().value);
const P0STAR: Scalar = der("p0star", |_| p_line_crit().value);
const Q0: Scalar = der("q0", |_| q_line_crit().value);
const ENDPOINT_P: Scalar = der("pi^2/4-1", |_| endpoint_p());
const LINE_Q_S: Scalar = lit(LINE_Q);
const UNIT_K_Q: Scalar = der("q_crit(k=1)", |_| q_crit_of_k(1.0).unwrap_or(f64::NAN));
const HALF_LIMIT: Scalar = der("3q/(1-2^(-q/2)) - 1e-6", |m| {
    crate::invtrig::halfangle_p_limit(get(m, "q")) - 1e-6
});

fn admissible(m: &Params) -> bool {
    is_admissible(get(m, "p"), get(m, "q"))
}

fn kq_admissible(k: &str, q: &str, m: &Params) -> bool {
    is_kq_admissible(get(m, k), get(m, q))
}

fn zhu_term(w: &'static str, p: &'static str) -> Term {
    let a = match w {
        "eta" => der("1-eta", |m| 1.0 - get(m, "eta")),
        _ => der("1-xi", |m| 1.0 - get(m, "xi")),
    };
    Term::CosAffinePow {
        a,
        b: par(w),
        scale: 1.0,
        gamma: par(p),
        delta: 1.0,
    }
}

fn asin_basic(via: Via) -> Term {
    Term::InvBasic {
        f: InvFn::Asin,
        via,
        p: par("p"),
        q: par("q"),
    }
}

fn acos_basic(via: Via) -> Term {
    Term::InvBasic {
        f: InvFn::Acos,
        via,
        p: par("p"),
        q: par("q"),
    }
}

fn half(f: InvFn, kappa: HalfConst) -> Term {
    Term::InvHalf {
        f,
        kappa,
        p: par("p"),
        q: par("q"),
    }
}

#[allow(clippy::too_many_arguments)]
fn claim(
    id: &'static str,
    anchor: &'static str,
    statement: &'static str,
    variable: Variable,
    params: Vec<ParamSpec>,
    preconditions: Vec<Condition>,
    chain: Vec<Term>,
    sharp: Vec<SharpBoundary>,
    instances: Vec<Vec<(&'static str, Scalar)>>,
) -> Claim {
    Claim {
        id,
        anchor,
        statement,
        variable,
        params,
        preconditions,
        chain: Chain::Fixed(chain),
        sharp,
        instances,
        equivalent_to: None,
    }
}

// one long literal table; tuples keep each row on a few lines
#[allow(clippy::vec_init_then_push, clippy::type_complexity)]
fn build() -> Vec<Claim> {
    use FailSide::{Above, Below};
    use Variable::{Angle, Argument, Ratio};
    let mut out = Vec::new();

    // ---- classical chains -------------------------------------------------
    out.push(claim(
        "C-MC",
        "classical: Mitrinovic-Cusa",
        "cos^(1/3) x < sin(x)/x < (2 + cos x)/3",
        Angle,
        vec![],
        vec![],
        vec![cos_pow(1.0 / 3.0), Term::Sinc, cusa()],
        vec![],
        vec![vec![]],
    ));
    out.push(claim(
        "C-NEUMAN1",
        "classical: refinement chain below sin(x)/x",
        "cos^(1/3) < (cos sinc)^(1/4) < (sin/artanh sin)^(1/2) < ((cos+sinc)/2)^(1/2) < ((1+2cos)/3)^(1/2) < ((1+cos)/2)^(2/3) < sinc",
        Angle,
        vec![],
        vec![],
        vec![
            cos_pow(1.0 / 3.0),
            Term::CosSincQuarter,
            Term::SinOverArtanhSqrt,
            Term::CosSincMeanSqrt,
            affine(1.0 / 3.0, 2.0 / 3.0, 1.0, 0.5),
            affine(0.5, 0.5, 1.0, 2.0 / 3.0),
            Term::Sinc,
        ],
        vec![],
        vec![vec![]],
    ));
    out.push(claim(
        "C-KLENYANG",
        "classical: cube of cos(x/3) between sin(x)/x and Cusa",
        "sin(x)/x < cos^3(x/3) < (2 + cos x)/3 on (0, pi/2)",
        Angle,
        vec![],
        vec![],
        vec![Term::Sinc, cos_scaled(1.0 / 3.0, 3.0), cusa()],
        vec![],
        vec![vec![]],
    ));
    out.push(claim(
        "C-YANG1",
        "classical: half-angle refinement above sin(x)/x",
        "sin(x)/x < ((2/3) cos(x/2) + 1/3)^2 < cos^3(x/3) < (2 + cos x)/3",
        Angle,
        vec![],
        vec![],
        vec![
            Term::Sinc,
            Term::CosAffinePow {
                a: lit(1.0 / 3.0),
                b: lit(2.0 / 3.0),
                scale: 0.5,
                gamma: lit(1.0),
                delta: 2.0,
            },
            cos_scaled(1.0 / 3.0, 3.0),
            cusa(),
        ],
        vec![],
        vec![vec![]],
    ));
    out.push(claim(
        "C-YANG2",
        "classical: scaled-cosine chain",
        "cos^(1/3) x < cos(x/sqrt3) < cos^(4/3)(x/2) < sinc < cos^3(x/3) < cos^(16/3)(x/4) < exp(-x^2/6) < (2+cos x)/3",
        Angle,
        vec![],
        vec![],
        vec![
            cos_pow(1.0 / 3.0),
            cos_scaled(1.0 / 3f64.sqrt(), 1.0),
            cos_scaled(0.5, 4.0 / 3.0),
            Term::Sinc,
            cos_scaled(1.0 / 3.0, 3.0),
            cos_scaled(0.25, 16.0 / 3.0),
            Term::Gauss,
            cusa(),
        ],
        vec![],
        vec![vec![]],
    ));
    out.push(claim(
        "C-YANG3",
        "classical: weighted power-mean bounds with best exponents",
        "(2/3 + cos^q1(x)/3)^(1/q1) < sin(x)/x < (2/3 + cos^q2(x)/3)^(1/q2) iff q1 <= 4/5, q2 >= log_{pi/2}(3/2)",
        Angle,
        vec![ps("q1", lit(-1.0), lit(0.8)), ps("q2", UNIT_K_Q, lit(3.0))],
        vec![],
        vec![kq(lit(1.0), par("q1")), Term::Sinc, kq(lit(1.0), par("q2"))],
        vec![sharp("q1", lit(0.8), Above), sharp("q2", UNIT_K_Q, Below)],
        vec![inst(&[("q1", lit(0.8)), ("q2", UNIT_K_Q)])],
    ));

    // ---- single-exponent power forms ---------------------------------------
    let xi_floor = der("1-(2/pi)^p", |m| 1.0 - FRAC_2_PI.powf(get(m, "p")));
    out.push(claim(
        "C-ZHU-i",
        "power form, p >= 1",
        "1 - xi + xi cos^p < (sin x/x)^p < 1 - eta + eta cos^p iff eta <= 1/3 and xi >= 1 - (2/pi)^p",
        Angle,
        vec![
            ps("p", lit(1.0), lit(4.0)),
            ps("eta", lit(-1.0), lit(1.0 / 3.0)),
            ps("xi", xi_floor, lit(1.5)),
        ],
        vec![cond("p >= 1", |m| get(m, "p") >= 1.0)],
        vec![zhu_term("xi", "p"), Term::SincPow(par("p")), zhu_term("eta", "p")],
        vec![sharp("eta", lit(1.0 / 3.0), Above), sharp("xi", xi_floor, Below)],
        vec![
            inst(&[("p", lit(1.0)), ("eta", lit(1.0 / 3.0)), ("xi", xi_floor)]),
            inst(&[("p", lit(2.0)), ("eta", lit(1.0 / 3.0)), ("xi", xi_floor)]),
        ],
    ));
    out.push(claim(
        "C-ZHU-ii",
        "power form, 0 < p <= 4/5",
        "1 - eta + eta cos^p < (sin x/x)^p < 1 - xi + xi cos^p iff eta >= 1/3 and xi <= 1 - (2/pi)^p",
        Angle,
        vec![
            ps("p", lit(0.05), lit(0.8)),
            ps("eta", lit(1.0 / 3.0), lit(1.5)),
            ps("xi", lit(-0.5), xi_floor),
        ],
        vec![cond("0 < p <= 4/5", |m| get(m, "p") > 0.0 && get(m, "p") <= 0.8)],
        vec![zhu_term("eta", "p"), Term::SincPow(par("p")), zhu_term("xi", "p")],
        vec![sharp("eta", lit(1.0 / 3.0), Below), sharp("xi", xi_floor, Above)],
        vec![inst(&[("p", lit(0.5)), ("eta", lit(1.0 / 3.0)), ("xi", xi_floor)])],
    ));
    out.push(claim(
        "C-ZHU-iii",
        "power form, p < 0",
        "(sin x/x)^p < 1 - eta + eta cos^p iff eta >= 1/3",
        Angle,
        vec![ps("p", lit(-4.0), lit(-0.05)), ps("eta", lit(1.0 / 3.0), lit(1.5))],
        vec![cond("p < 0", |m| get(m, "p") < 0.0)],
        vec![Term::SincPow(par("p")), zhu_term("eta", "p")],
        vec![sharp("eta", lit(1.0 / 3.0), Below)],
        vec![inst(&[("p", lit(-1.0)), ("eta", lit(1.0 / 3.0))])],
    ));

    // ---- two-sided bounds from monotonicity of the ratio -------------------
    let e_cond = cond("(p, q) admissible: p <= 0 or p <= 3q", admissible);
    out.push(claim(
        "C-MT1-i",
        "two-sided bound, increasing ratio",
        "endpoint_mean(cos x; p, q) < sin(x)/x < cusa_mean(cos x; p, q) for q >= 1, p <= 3q - 8/5",
        Angle,
        vec![ps("q", lit(1.0), lit(3.0)), ps("p", lit(-3.0), LINE_P)],
        vec![
            cond("q >= 1", |m| get(m, "q") >= 1.0),
            cond("p <= 3q - 8/5", |m| get(m, "p") <= 3.0 * get(m, "q") - 1.6 + 1e-12),
            e_cond,
        ],
        vec![n_pq(par("p"), par("q")), Term::Sinc, m_pq(par("p"), par("q"))],
        vec![],
        vec![
            inst(&[("q", lit(1.0)), ("p", lit(1.0))]),
            inst(&[("q", lit(1.0)), ("p", lit(1.4))]),
            inst(&[("q", lit(2.0)), ("p", lit(0.0))]),
        ],
    ));
    out.push(claim(
        "C-MT1-ii",
        "two-sided bound, decreasing ratio near q = 1",
        "cusa_mean < sin(x)/x < endpoint_mean for 34/35 < q <= 1, p >= pi^2/4 - 1",
        Angle,
        vec![ps("q", lit(LINE_Q + 1e-9), lit(1.0)), ps("p", ENDPOINT_P, THREE_Q)],
        vec![
            cond("34/35 < q <= 1", |m| get(m, "q") > LINE_Q && get(m, "q") <= 1.0),
            cond("p >= pi^2/4 - 1", |m| get(m, "p") >= endpoint_p() - 1e-12),
            e_cond,
        ],
        vec![m_pq(par("p"), par("q")), Term::Sinc, n_pq(par("p"), par("q"))],
        vec![],
        vec![inst(&[("q", lit(1.0)), ("p", lit(2.0))])],
    ));
    out.push(claim(
        "C-MT1-iii",
        "two-sided bound, decreasing ratio, 0 < q <= 34/35",
        "cusa_mean < sin(x)/x < endpoint_mean for 0 < q <= 34/35, p >= 3q - 8/5",
        Angle,
        vec![ps("q", lit(0.05), lit(LINE_Q)), ps("p", LINE_P, THREE_Q)],
        vec![
            cond("0 < q <= 34/35", |m| get(m, "q") > 0.0 && get(m, "q") <= LINE_Q),
            cond("p >= 3q - 8/5", |m| get(m, "p") >= 3.0 * get(m, "q") - 1.6 - 1e-12),
            e_cond,
        ],
        vec![m_pq(par("p"), par("q")), Term::Sinc, n_pq(par("p"), par("q"))],
        vec![],
        vec![
            inst(&[("q", lit(0.5)), ("p", lit(0.0))]),
            inst(&[("q", lit(LINE_Q)), ("p", lit(46.0 / 35.0))]),
        ],
    ));
    out.push(Claim {
        id: "C-MT1-iv",
        anchor: "one-sided bound, q <= 0",
        statement: "sin(x)/x above the Cusa-type family (raw power form when p > 0) for q <= 0, p >= 3q - 8/5",
        variable: Angle,
        params: vec![ps("q", lit(-3.0), lit(0.0)), ps("p", LINE_P, lit(3.0))],
        preconditions: vec![
            cond("q <= 0", |m| get(m, "q") <= 0.0),
            cond("p >= 3q - 8/5", |m| get(m, "p") >= 3.0 * get(m, "q") - 1.6 - 1e-12),
        ],
        chain: Chain::BySignOfP {
            pos: vec![Term::CusaBase { p: par("p"), q: par("q") }, Term::SincPow(par("p"))],
            zero: vec![m_pq(lit(0.0), par("q")), Term::Sinc],
            neg: vec![m_pq(par("p"), par("q")), Term::Sinc],
        },
        sharp: vec![],
        instances: vec![
            inst(&[("q", lit(0.0)), ("p", lit(0.0))]),
            inst(&[("q", lit(-1.0)), ("p", lit(0.5))]),
            inst(&[("q", lit(-1.0)), ("p", lit(-2.0))]),
        ],
        equivalent_to: None,
    });
    out.push(Claim {
        id: "C-HUYGENS",
        anchor: "secant/cotangent restatement of the increasing-ratio bound",
        statement: "(2/pi)^p (x/sin)^q + (1-(2/pi)^p)(x/tan)^q < (sin x/x)^(p-q) < (1-p/(3q))(x/sin)^q + p/(3q)(x/tan)^q",
        variable: Angle,
        params: vec![ps("q", lit(1.0), lit(3.0)), ps("p", lit(0.05), LINE_P)],
        preconditions: vec![
            cond("q >= 1", |m| get(m, "q") >= 1.0),
            cond("0 < p <= 3q - 8/5", |m| get(m, "p") > 0.0 && get(m, "p") <= 3.0 * get(m, "q") - 1.6 + 1e-12),
        ],
        chain: Chain::Fixed(vec![
            Term::SecantMix { w: xi_floor, q: par("q") },
            Term::SincPow(der("p-q", |m| get(m, "p") - get(m, "q"))),
            Term::SecantMix { w: der("p/(3q)", |m| get(m, "p") / (3.0 * get(m, "q"))), q: par("q") },
        ]),
        sharp: vec![],
        instances: vec![inst(&[("q", lit(1.0)), ("p", lit(1.0))])],
        equivalent_to: Some("C-MT1-i"),
    });

    // ---- deficit form with separate exponents -------------------------------
    let mt2a = |id, anchor, p_lo: Scalar, p_hi: Scalar, pre: Vec<Condition>, q2_lo: Scalar, q1_hi: Scalar, inst_p: f64| {
        Claim {
            id,
            anchor,
            statement: "(1 - cos^q2)/(3 q2) < (1 - (sin x/x)^p)/p < (1 - cos^q1)/(3 q1)",
            variable: Angle,
            params: vec![
                ps("p", p_lo, p_hi),
                ps("q2", q2_lo, der("q2_min + 2", |m| 2.0 + (get(m, "p") / 3.0 + 8.0 / 15.0).max(1.0))),
                ps("q1", lit(-2.0), q1_hi),
            ],
            preconditions: pre,
            chain: Chain::Fixed(vec![
                Term::CosDeficitThird { q: par("q2") },
                Term::SincDeficit { p: par("p") },
                Term::CosDeficitThird { q: par("q1") },
            ]),
            sharp: vec![],
            instances: vec![inst(&[("p", lit(inst_p)), ("q2", q2_lo), ("q1", q1_hi)])],
            equivalent_to: None,
        }
    };
    out.push(mt2a(
        "C-MT2a-i",
        "deficit form, p >= pi^2/4 - 1",
        ENDPOINT_P,
        lit(4.0),
        vec![
            cond("p >= pi^2/4 - 1", |m| get(m, "p") >= endpoint_p() - 1e-12),
            cond("q2 >= p/3 + 8/15", |m| get(m, "q2") >= get(m, "p") / 3.0 + 8.0 / 15.0 - 1e-12),
            cond("q1 <= 1", |m| get(m, "q1") <= 1.0),
        ],
        P_THIRD_LINE,
        lit(1.0),
        2.0,
    ));
    out.push(mt2a(
        "C-MT2a-ii",
        "deficit form, 7/5 <= p < pi^2/4 - 1",
        lit(1.4),
        der("pi^2/4-1 - 1e-9", |_| endpoint_p() - 1e-9),
        vec![
            cond("7/5 <= p < pi^2/4 - 1", |m| get(m, "p") >= 1.4 && get(m, "p") < endpoint_p()),
            cond("q2 >= p/3 + 8/15", |m| get(m, "q2") >= get(m, "p") / 3.0 + 8.0 / 15.0 - 1e-12),
            cond("q1 <= 34/35", |m| get(m, "q1") <= LINE_Q),
        ],
        P_THIRD_LINE,
        LINE_Q_S,
        1.4,
    ));
    out.push(mt2a(
        "C-MT2a-iii",
        "deficit form, 46/35 <= p < 7/5",
        lit(46.0 / 35.0),
        lit(1.4 - 1e-9),
        vec![
            cond("46/35 <= p < 7/5", |m| get(m, "p") >= 46.0 / 35.0 && get(m, "p") < 1.4),
            cond("q2 >= 1", |m| get(m, "q2") >= 1.0),
            cond("q1 <= 34/35", |m| get(m, "q1") <= LINE_Q),
        ],
        lit(1.0),
        LINE_Q_S,
        46.0 / 35.0,
    ));
    out.push(mt2a(
        "C-MT2a-iv",
        "deficit form, p < 46/35",
        lit(-3.0),
        lit(46.0 / 35.0 - 1e-9),
        vec![
            cond("p < 46/35", |m| get(m, "p") < 46.0 / 35.0),
            cond("q2 >= 1", |m| get(m, "q2") >= 1.0),
            cond("q1 <= p/3 + 8/15", |m| get(m, "q1") <= get(m, "p") / 3.0 + 8.0 / 15.0 + 1e-12),
        ],
        lit(1.0),
        P_THIRD_LINE,
        1.0,
    ));

    // ---- best q for fixed p ---------------------------------------------------
    out.push(claim(
        "C-MT2c-i",
        "best q for an upper bound, p >= 7/5",
        "sin(x)/x < cusa_mean(cos x; p, q) iff q >= p/3 + 8/15",
        Angle,
        vec![ps("p", lit(1.4), lit(4.0)), ps("q", P_THIRD_LINE, der("p/3+8/15+2", |m| get(m, "p") / 3.0 + 8.0 / 15.0 + 2.0))],
        vec![cond("p >= 7/5", |m| get(m, "p") >= 1.4), e_cond],
        vec![Term::Sinc, m_pq(par("p"), par("q"))],
        vec![sharp("q", P_THIRD_LINE, Below)],
        vec![
            inst(&[("p", lit(2.0)), ("q", P_THIRD_LINE)]),
            inst(&[("p", lit(1.4)), ("q", lit(1.0))]),
        ],
    ));
    out.push(claim(
        "C-MT2c-ii",
        "best q for a lower bound, p >= p0",
        "cusa_mean(cos x; p, q) < sin(x)/x iff q <= q_crit(p)",
        Angle,
        vec![ps("p", P0, lit(4.0)), ps("q", P_THIRD, Q_OF_P)],
        vec![cond("p >= p0", |m| get(m, "p") >= p_unit_crit().value - 1e-12), e_cond],
        vec![m_pq(par("p"), par("q")), Term::Sinc],
        vec![sharp("q", Q_OF_P, Above)],
        vec![
            inst(&[("p", lit(2.0)), ("q", Q_OF_P)]),
            inst(&[("p", P0), ("q", lit(1.0))]),
        ],
    ));
    out.push(claim(
        "C-MT2c-iii",
        "best q for a lower bound, p <= 46/35",
        "cusa_mean(cos x; p, q) < sin(x)/x iff q <= p/3 + 8/15",
        Angle,
        vec![ps("p", lit(-3.0), lit(46.0 / 35.0)), ps("q", der("max(p/3, -3)", |m| (get(m, "p") / 3.0).max(-3.0)), P_THIRD_LINE)],
        vec![cond("p <= 46/35", |m| get(m, "p") <= 46.0 / 35.0 + 1e-12), e_cond],
        vec![m_pq(par("p"), par("q")), Term::Sinc],
        vec![sharp("q", P_THIRD_LINE, Above)],
        vec![
            inst(&[("p", lit(1.0)), ("q", P_THIRD_LINE)]),
            inst(&[("p", lit(0.0)), ("q", P_THIRD_LINE)]),
        ],
    ));
    out.push(claim(
        "C-MT2c-iv",
        "best q for an upper bound, p <= p0star",
        "sin(x)/x < cusa_mean(cos x; p, q) iff q >= q_crit(p)",
        Angle,
        vec![ps("p", lit(-3.0), P0STAR), ps("q", Q_OF_P, der("q_crit(p)+2", |m| q_crit_of_p(get(m, "p")) + 2.0))],
        vec![cond("p <= p0star", |m| get(m, "p") <= p_line_crit().value + 1e-12), e_cond],
        vec![Term::Sinc, m_pq(par("p"), par("q"))],
        vec![sharp("q", Q_OF_P, Below)],
        vec![
            inst(&[("p", lit(1.0)), ("q", Q_OF_P)]),
            inst(&[("p", lit(0.0)), ("q", Q_OF_P)]),
        ],
    ));
    let two_q = |id, anchor, statement, p1: Scalar, p2: Scalar, q1: (Scalar, Scalar), q2: (Scalar, Scalar), pre: Vec<Condition>| {
        claim(
            id,
            anchor,
            statement,
            Angle,
            vec![ps("q1", q1.0, q1.1), ps("q2", q2.0, q2.1)],
            pre,
            vec![m_pq(p1, par("q1")), Term::Sinc, m_pq(p2, par("q2"))],
            vec![sharp("q1", q1.1, Above), sharp("q2", q2.0, Below)],
            vec![inst(&[("q1", q1.1), ("q2", q2.0)])],
        )
    };
    out.push(two_q(
        "C-MT2c-COR-i",
        "fixed exponents p0 and 7/5",
        "cusa_mean(p0, q1) < sin(x)/x < cusa_mean(7/5, q2) iff p0/3 <= q1 <= 1, q2 >= 1",
        P0,
        lit(1.4),
        (der("p0/3", |_| p_unit_crit().value / 3.0), lit(1.0)),
        (lit(1.0), lit(3.0)),
        vec![cond("q1 >= p0/3", |m| get(m, "q1") >= p_unit_crit().value / 3.0 - 1e-12)],
    ));
    out.push(two_q(
        "C-MT2c-COR-ii",
        "fixed exponents 46/35 and p0star",
        "cusa_mean(46/35, q1) < sin(x)/x < cusa_mean(p0star, q2) iff 46/105 <= q1 <= 34/35, q2 >= 34/35",
        lit(46.0 / 35.0),
        P0STAR,
        (lit(46.0 / 105.0), LINE_Q_S),
        (LINE_Q_S, lit(3.0)),
        vec![cond("q1 >= 46/105", |m| get(m, "q1") >= 46.0 / 105.0 - 1e-12)],
    ));
    out.push(two_q(
        "C-MT2c-COR-iii",
        "fixed exponent p = 0",
        "exp((cos^q1 - 1)/(3 q1)) < sin(x)/x < exp((cos^q2 - 1)/(3 q2)) iff q1 <= 8/15, q2 >= 1/(3 ln(pi/2))",
        lit(0.0),
        lit(0.0),
        (lit(-2.0), lit(8.0 / 15.0)),
        (der("1/(3 ln(pi/2))", |_| q_crit_of_p(0.0)), lit(3.0)),
        vec![],
    ));
    out.push(two_q(
        "C-MT2c-COR-iv",
        "fixed exponent p = 1",
        "cusa_mean(1, q1) < sin(x)/x < cusa_mean(1, q2) iff 1/3 <= q1 <= 13/15, q2 >= pi/(3 pi - 6)",
        lit(1.0),
        lit(1.0),
        (lit(1.0 / 3.0), lit(13.0 / 15.0)),
        (der("pi/(3pi-6)", |_| PI / (3.0 * PI - 6.0)), lit(3.0)),
        vec![cond("q1 >= 1/3", |m| get(m, "q1") >= 1.0 / 3.0 - 1e-12)],
    ));
    out.push(claim(
        "C-CHAIN-P1",
        "chain at p = 1",
        "cos^(1/3) < 1/3 + 2/3 cos^(1/2) < 1/2 + 1/2 cos^(2/3) < 8/13 + 5/13 cos^(13/15) < sinc < 2/3 + 1/3 cos",
        Angle,
        vec![],
        vec![],
        vec![
            cos_pow(1.0 / 3.0),
            affine(1.0 / 3.0, 2.0 / 3.0, 0.5, 1.0),
            affine(0.5, 0.5, 2.0 / 3.0, 1.0),
            affine(8.0 / 13.0, 5.0 / 13.0, 13.0 / 15.0, 1.0),
            Term::Sinc,
            cusa(),
        ],
        vec![],
        vec![vec![]],
    ));

    // ---- best p for fixed q ---------------------------------------------------
    out.push(claim(
        "C-MT3-i",
        "best exponents for fixed q >= 1",
        "cusa_mean(p1, q) < sin(x)/x < cusa_mean(p2, q) iff p1 >= p_crit(q), p2 <= 3q - 8/5",
        Angle,
        vec![ps("q", lit(1.0), lit(3.0)), ps("p1", P_OF_Q, THREE_Q), ps("p2", lit(-3.0), LINE_P)],
        vec![
            cond("q >= 1", |m| get(m, "q") >= 1.0),
            cond("p1 <= 3q", |m| is_admissible(get(m, "p1"), get(m, "q"))),
        ],
        vec![m_pq(par("p1"), par("q")), Term::Sinc, m_pq(par("p2"), par("q"))],
        vec![sharp("p1", P_OF_Q, Below), sharp("p2", LINE_P, Above)],
        vec![
            inst(&[("q", lit(1.0)), ("p1", P_OF_Q), ("p2", LINE_P)]),
            inst(&[("q", lit(1.5)), ("p1", P_OF_Q), ("p2", LINE_P)]),
        ],
    ));
    out.push(claim(
        "C-MT3-ii",
        "best exponents for fixed 0 < q <= 34/35",
        "cusa_mean(p1, q) < sin(x)/x < cusa_mean(p2, q) iff p1 >= 3q - 8/5, p2 <= p_crit(q)",
        Angle,
        vec![ps("q", lit(0.3), lit(LINE_Q)), ps("p1", LINE_P, THREE_Q), ps("p2", lit(-3.0), P_OF_Q)],
        vec![
            cond("0 < q <= 34/35", |m| get(m, "q") > 0.0 && get(m, "q") <= LINE_Q),
            cond("p1 <= 3q", |m| is_admissible(get(m, "p1"), get(m, "q"))),
        ],
        vec![m_pq(par("p1"), par("q")), Term::Sinc, m_pq(par("p2"), par("q"))],
        vec![sharp("p1", LINE_P, Below), sharp("p2", P_OF_Q, Above)],
        vec![
            inst(&[("q", LINE_Q_S), ("p1", LINE_P), ("p2", P_OF_Q)]),
            inst(&[("q", lit(0.5)), ("p1", LINE_P), ("p2", P_OF_Q)]),
        ],
    ));
    out.push(claim(
        "C-MT3-iii",
        "best lower exponent for fixed q <= 0",
        "cusa_mean(p1, q) < sin(x)/x iff p1 >= 3q - 8/5",
        Angle,
        vec![ps("q", lit(-3.0), lit(0.0)), ps("p1", LINE_P, lit(0.0))],
        vec![
            cond("q <= 0", |m| get(m, "q") <= 0.0),
            cond("p1 <= 0", |m| get(m, "p1") <= 0.0),
        ],
        vec![m_pq(par("p1"), par("q")), Term::Sinc],
        vec![sharp("p1", LINE_P, Below)],
        vec![
            inst(&[("q", lit(0.0)), ("p1", lit(-1.6))]),
            inst(&[("q", lit(-1.0)), ("p1", LINE_P)]),
        ],
    ));
    out.push(claim(
        "C-MT3-COR-i",
        "fixed q = 1",
        "(1 - p1/3 + p1/3 cos)^(1/p1) < sin(x)/x < (1 - p2/3 + p2/3 cos)^(1/p2) iff p0 <= p1 <= 3, p2 <= 7/5",
        Angle,
        vec![ps("p1", P0, lit(3.0)), ps("p2", lit(-3.0), lit(1.4))],
        vec![cond("p1 <= 3", |m| get(m, "p1") <= 3.0)],
        vec![m_pq(par("p1"), lit(1.0)), Term::Sinc, m_pq(par("p2"), lit(1.0))],
        vec![sharp("p1", P0, Below), sharp("p2", lit(1.4), Above)],
        vec![inst(&[("p1", P0), ("p2", lit(1.4))])],
    ));
    out.push(claim(
        "C-MT3-COR-ii",
        "fixed q = 34/35",
        "cusa_mean(p1, 34/35) < sin(x)/x < cusa_mean(p2, 34/35) iff 46/35 <= p1 <= 102/35, p2 <= p0star",
        Angle,
        vec![ps("p1", lit(46.0 / 35.0), lit(102.0 / 35.0)), ps("p2", lit(-3.0), P0STAR)],
        vec![cond("p1 <= 102/35", |m| get(m, "p1") <= 102.0 / 35.0 + 1e-12)],
        vec![m_pq(par("p1"), LINE_Q_S), Term::Sinc, m_pq(par("p2"), LINE_Q_S)],
        vec![sharp("p1", lit(46.0 / 35.0), Below), sharp("p2", P0STAR, Above)],
        vec![inst(&[("p1", lit(46.0 / 35.0)), ("p2", P0STAR)])],
    ));
    out.push(claim(
        "C-MT3-COR-iii",
        "fixed q = 0",
        "(1 + (p/3) ln cos x)^(1/p) < sin(x)/x iff -8/5 <= p < 0",
        Angle,
        vec![ps("p", lit(-1.6), lit(-1e-3))],
        vec![cond("p < 0", |m| get(m, "p") < 0.0)],
        vec![m_pq(par("p"), lit(0.0)), Term::Sinc],
        vec![sharp("p", lit(-1.6), Below)],
        vec![inst(&[("p", lit(-1.6))])],
    ));
    out.push(claim(
        "C-CHAIN-Q1",
        "chain at q = 1",
        "cos^(1/3) < (1/3 + 2/3 cos)^(1/2) < (1/2 + 1/2 cos)^(2/3) < sinc < (8/15 + 7/15 cos)^(5/7) < (3/5 + 2/5 cos)^(5/6) < 2/3 + 1/3 cos",
        Angle,
        vec![],
        vec![],
        vec![
            cos_pow(1.0 / 3.0),
            affine(1.0 / 3.0, 2.0 / 3.0, 1.0, 0.5),
            affine(0.5, 0.5, 1.0, 2.0 / 3.0),
            Term::Sinc,
            affine(8.0 / 15.0, 7.0 / 15.0, 1.0, 5.0 / 7.0),
            affine(0.6, 0.4, 1.0, 5.0 / 6.0),
            cusa(),
        ],
        vec![],
        vec![vec![]],
    ));

    // ---- the p = kq family ------------------------------------------------------
    let kq_pre = |extra: Vec<Condition>| {
        let mut v = vec![
            cond("(k, q1) admissible", |m| kq_admissible("k", "q1", m)),
            cond("(k, q2) admissible", |m| kq_admissible("k", "q2", m)),
        ];
        v.extend(extra);
        v
    };
    out.push(claim(
        "C-MT4-i",
        "p = kq, k > 3",
        "cusa_mean_kq(cos x; k, q) < sin(x)/x for k > 3, 8/(5(3-k)) <= q <= 0",
        Angle,
        vec![ps("k", lit(3.05), lit(6.0)), ps("q", K_LINE, lit(0.0))],
        vec![
            cond("k > 3", |m| get(m, "k") > 3.0),
            cond("8/(5(3-k)) <= q <= 0", |m| {
                get(m, "q") <= 0.0 && get(m, "q") >= 1.6 / (3.0 - get(m, "k")) - 1e-12
            }),
        ],
        vec![kq(par("k"), par("q")), Term::Sinc],
        vec![],
        vec![inst(&[("k", lit(4.0)), ("q", lit(-1.6))]), inst(&[("k", lit(4.0)), ("q", lit(0.0))])],
    ));
    let k_mid = (35.0 * PI * PI - 140.0) / 136.0;
    let mt4 = |id, anchor, k_lo: f64, k_hi: f64, q2_lo: Scalar, q1_lo: Scalar, q1_hi: Scalar, extra: Vec<Condition>, inst_k: f64| {
        claim(
            id,
            anchor,
            "cusa_mean_kq(cos x; k, q1) < sin(x)/x < cusa_mean_kq(cos x; k, q2)",
            Angle,
            vec![
                ps("k", lit(k_lo), lit(k_hi)),
                ps("q2", q2_lo, der("q2_min + 2", |m| 2.0 + (1.6 / (3.0 - get(m, "k"))).max(1.0))),
                ps("q1", q1_lo, q1_hi),
            ],
            kq_pre(extra),
            vec![kq(par("k"), par("q1")), Term::Sinc, kq(par("k"), par("q2"))],
            vec![],
            vec![inst(&[("k", lit(inst_k)), ("q2", q2_lo), ("q1", q1_hi)])],
        )
    };
    out.push(mt4(
        "C-MT4-ii",
        "p = kq, (35 pi^2 - 140)/136 <= k < 3",
        k_mid,
        3.0 - 1e-3,
        K_LINE,
        lit(-2.0),
        lit(1.0),
        vec![
            cond("(35 pi^2 - 140)/136 <= k < 3", |m| get(m, "k") >= (35.0 * PI * PI - 140.0) / 136.0 - 1e-12 && get(m, "k") < 3.0),
            cond("q2 >= 8/(5(3-k))", |m| get(m, "q2") >= 1.6 / (3.0 - get(m, "k")) - 1e-12),
            cond("q1 <= 1", |m| get(m, "q1") <= 1.0),
        ],
        2.0,
    ));
    out.push(mt4(
        "C-MT4-iii",
        "p = kq, pi^2/4 - 1 <= k < (35 pi^2 - 140)/136",
        endpoint_p(),
        k_mid - 1e-9,
        K_LINE,
        lit(-2.0),
        lit(LINE_Q),
        vec![
            cond("pi^2/4 - 1 <= k < (35 pi^2 - 140)/136", |m| get(m, "k") >= endpoint_p() - 1e-12 && get(m, "k") < (35.0 * PI * PI - 140.0) / 136.0),
            cond("q2 >= 8/(5(3-k))", |m| get(m, "q2") >= 1.6 / (3.0 - get(m, "k")) - 1e-12),
            cond("q1 <= 34/35 or (pi^2/4-1)/k <= q1 <= 1", |m| {
                let (k, q1) = (get(m, "k"), get(m, "q1"));
                q1 <= LINE_Q || (q1 >= endpoint_p() / k - 1e-12 && q1 <= 1.0)
            }),
        ],
        1.5,
    ));
    out.push(mt4(
        "C-MT4-iv",
        "p = kq, 7/5 <= k < pi^2/4 - 1",
        1.4,
        endpoint_p() - 1e-9,
        K_LINE,
        lit(-2.0),
        LINE_Q_S,
        vec![
            cond("7/5 <= k < pi^2/4 - 1", |m| get(m, "k") >= 1.4 && get(m, "k") < endpoint_p()),
            cond("q2 >= 8/(5(3-k))", |m| get(m, "q2") >= 1.6 / (3.0 - get(m, "k")) - 1e-12),
            cond("q1 <= 34/35", |m| get(m, "q1") <= LINE_Q),
        ],
        1.4,
    ));
    out.push(mt4(
        "C-MT4-v",
        "p = kq, 23/17 <= k < 7/5",
        23.0 / 17.0,
        1.4 - 1e-9,
        lit(1.0),
        lit(-2.0),
        LINE_Q_S,
        vec![
            cond("23/17 <= k < 7/5", |m| get(m, "k") >= 23.0 / 17.0 && get(m, "k") < 1.4),
            cond("q2 >= 1", |m| get(m, "q2") >= 1.0),
            cond("q1 <= 34/35", |m| get(m, "q1") <= LINE_Q),
        ],
        23.0 / 17.0,
    ));
    out.push(mt4(
        "C-MT4-vi",
        "p = kq, 0 <= k < 23/17",
        0.0,
        23.0 / 17.0 - 1e-9,
        lit(1.0),
        lit(-2.0),
        K_LINE,
        vec![
            cond("0 <= k < 23/17", |m| get(m, "k") >= 0.0 && get(m, "k") < 23.0 / 17.0),
            cond("q2 >= 1", |m| get(m, "q2") >= 1.0),
            cond("q1 <= 8/(5(3-k))", |m| get(m, "q1") <= 1.6 / (3.0 - get(m, "k")) + 1e-12),
        ],
        1.0,
    ));
    out.push(mt4(
        "C-MT4-vii",
        "p = kq, k < 0",
        -3.0,
        -1e-3,
        lit(1.0),
        lit(0.0),
        K_LINE,
        vec![
            cond("k < 0", |m| get(m, "k") < 0.0),
            cond("q2 >= 1", |m| get(m, "q2") >= 1.0),
            cond("0 <= q1 <= 8/(5(3-k))", |m| get(m, "q1") >= 0.0 && get(m, "q1") <= 1.6 / (3.0 - get(m, "k")) + 1e-12),
        ],
        -1.0,
    ));
    let kq_sharp = |id, anchor, statement, k_lo: Scalar, k_hi: Scalar, q_lo: Scalar, q_hi: Scalar, upper: bool, b: SharpBoundary, pre: Vec<Condition>, insts: Vec<Vec<(&'static str, Scalar)>>| {
        let chain = if upper {
            vec![Term::Sinc, kq(par("k"), par("q"))]
        } else {
            vec![kq(par("k"), par("q")), Term::Sinc]
        };
        let mut pre = pre;
        pre.push(cond("(k, q) admissible", |m| kq_admissible("k", "q", m)));
        claim(id, anchor, statement, Angle, vec![ps("k", k_lo, k_hi), ps("q", q_lo, q_hi)], pre, chain, vec![b], insts)
    };
    out.push(kq_sharp(
        "C-MT4sharp-i",
        "p = kq, best upper q for 7/5 <= k < 3",
        "sin(x)/x < cusa_mean_kq(cos x; k, q) iff q >= 8/(5(3-k))",
        lit(1.4),
        lit(2.9),
        K_LINE,
        der("8/(5(3-k))+2", |m| 1.6 / (3.0 - get(m, "k")) + 2.0),
        true,
        sharp("q", K_LINE, Below),
        vec![cond("7/5 <= k < 3", |m| get(m, "k") >= 1.4 && get(m, "k") < 3.0)],
        vec![
            inst(&[("k", lit(2.0)), ("q", K_LINE)]),
            inst(&[("k", lit(1.5)), ("q", K_LINE)]),
        ],
    ));
    out.push(kq_sharp(
        "C-MT4sharp-ii",
        "p = kq, best lower q for p0 < k < 3",
        "cusa_mean_kq(cos x; k, q) < sin(x)/x iff q <= q_crit(k)",
        der("p0 + 1e-9", |_| p_unit_crit().value + 1e-9),
        lit(2.9),
        lit(-2.0),
        Q_OF_K,
        false,
        sharp("q", Q_OF_K, Above),
        vec![cond("p0 < k < 3", |m| get(m, "k") > p_unit_crit().value && get(m, "k") < 3.0)],
        vec![
            inst(&[("k", lit(2.0)), ("q", Q_OF_K)]),
            inst(&[("k", lit(1.5)), ("q", Q_OF_K)]),
        ],
    ));
    out.push(kq_sharp(
        "C-MT4sharp-iii",
        "p = kq, best lower q for 0 < k <= 23/17",
        "cusa_mean_kq(cos x; k, q) < sin(x)/x iff q <= 8/(5(3-k))",
        lit(0.05),
        lit(23.0 / 17.0),
        lit(-2.0),
        K_LINE,
        false,
        sharp("q", K_LINE, Above),
        vec![cond("0 < k <= 23/17", |m| get(m, "k") > 0.0 && get(m, "k") <= 23.0 / 17.0 + 1e-12)],
        vec![inst(&[("k", lit(1.0)), ("q", K_LINE)])],
    ));
    out.push(kq_sharp(
        "C-MT4sharp-iv",
        "p = kq, best upper q for 0 < k < p0star",
        "sin(x)/x < cusa_mean_kq(cos x; k, q) iff q >= q_crit(k)",
        lit(0.05),
        der("p0star - 1e-9", |_| p_line_crit().value - 1e-9),
        Q_OF_K,
        der("q_crit(k)+2", |m| q_crit_of_k(get(m, "k")).unwrap_or(f64::NAN) + 2.0),
        true,
        sharp("q", Q_OF_K, Below),
        vec![cond("0 < k < p0star", |m| get(m, "k") > 0.0 && get(m, "k") < p_line_crit().value)],
        vec![inst(&[("k", lit(1.0)), ("q", Q_OF_K)])],
    ));
    let kq_pair = |id, anchor, statement, k: f64, q1_hi: Scalar, q2_lo: Scalar| {
        claim(
            id,
            anchor,
            statement,
            Angle,
            vec![ps("q1", lit(-2.0), q1_hi), ps("q2", q2_lo, lit(4.0))],
            vec![],
            vec![kq(lit(k), par("q1")), Term::Sinc, kq(lit(k), par("q2"))],
            vec![sharp("q1", q1_hi, Above), sharp("q2", q2_lo, Below)],
            vec![inst(&[("q1", q1_hi), ("q2", q2_lo)])],
        )
    };
    out.push(kq_pair(
        "C-MT4-COR-i",
        "p = kq at k = 3/2",
        "(1/2 + 1/2 cos^q1)^(2/(3 q1)) < sin(x)/x < (1/2 + 1/2 cos^q2)^(2/(3 q2)) iff q1 <= q_crit(3/2), q2 >= 16/15",
        1.5,
        der("q_crit(3/2)", |_| q_crit_of_k(1.5).unwrap_or(f64::NAN)),
        lit(16.0 / 15.0),
    ));
    out.push(kq_pair(
        "C-MT4-COR-ii",
        "p = kq at k = 2",
        "(1/3 + 2/3 cos^q1)^(1/(2 q1)) < sin(x)/x < (1/3 + 2/3 cos^q2)^(1/(2 q2)) iff q1 <= q_crit(2), q2 >= 8/5",
        2.0,
        der("q_crit(2)", |_| q_crit_of_k(2.0).unwrap_or(f64::NAN)),
        lit(1.6),
    ));

    // ---- the p = 3q - 8/5 line ---------------------------------------------------
    let line = Term::CusaMeanLine { q: par("q") };
    let n_line = n_pq(LINE_P, par("q"));
    out.push(claim(
        "C-MT5a-i",
        "line family, q >= 1",
        "endpoint_mean(3q-8/5, q) < sin(x)/x < cusa_mean_line(q)",
        Angle,
        vec![ps("q", lit(1.0), lit(3.0))],
        vec![cond("q >= 1", |m| get(m, "q") >= 1.0)],
        vec![n_line, Term::Sinc, line],
        vec![],
        vec![inst(&[("q", lit(1.0))]), inst(&[("q", lit(1.2))])],
    ));
    out.push(claim(
        "C-MT5a-ii",
        "line family, 0 < q <= 34/35",
        "cusa_mean_line(q) < sin(x)/x < endpoint_mean(3q-8/5, q)",
        Angle,
        vec![ps("q", lit(0.02), lit(LINE_Q))],
        vec![cond("0 < q <= 34/35", |m| get(m, "q") > 0.0 && get(m, "q") <= LINE_Q)],
        vec![line, Term::Sinc, n_line],
        vec![],
        vec![inst(&[("q", lit(0.5))]), inst(&[("q", LINE_Q_S)])],
    ));
    out.push(claim(
        "C-MT5a-iii",
        "line family, q <= 0",
        "cusa_mean_line(q) < sin(x)/x",
        Angle,
        vec![ps("q", lit(-3.0), lit(0.0))],
        vec![cond("q <= 0", |m| get(m, "q") <= 0.0)],
        vec![line, Term::Sinc],
        vec![],
        vec![inst(&[("q", lit(0.0))]), inst(&[("q", lit(-1.0))])],
    ));
    out.push(claim(
        "C-MT5b",
        "line family, best q for the lower bound",
        "cusa_mean_line(q) < sin(x)/x iff q <= 34/35 (reverse iff q >= q0, see C-MT5b-rev)",
        Angle,
        vec![ps("q", lit(-3.0), LINE_Q_S)],
        vec![],
        vec![line, Term::Sinc],
        vec![sharp("q", LINE_Q_S, Above)],
        vec![inst(&[("q", LINE_Q_S)]), inst(&[("q", lit(0.0))])],
    ));
    out.push(claim(
        "C-MT5b-rev",
        "line family, best q for the upper bound",
        "sin(x)/x < cusa_mean_line(q) iff q >= q0",
        Angle,
        vec![ps("q", Q0, lit(3.0))],
        vec![],
        vec![Term::Sinc, line],
        vec![sharp("q", Q0, Below)],
        vec![inst(&[("q", Q0)]), inst(&[("q", lit(1.0))])],
    ));
    out.push(claim(
        "C-CHAIN-FINAL",
        "line family chain",
        "cos^(1/3) < (1-8/15 ln cos)^(-5/8) < (8/3-5/3 cos^(1/5))^(-1) < exp(5/8 cos^(8/15)-5/8) < (5/21 cos^(7/10)+16/21)^2 < (1/3 cos^(4/5)+2/3)^(5/4) < 5/13 cos^(13/15)+8/13 < (23/51 cos^(34/35)+28/51)^(35/46) < sinc < (7/15 cos+8/15)^(5/7) < (5/9 cos^(6/5)+4/9)^(1/2) < (2+cos)/3",
        Angle,
        vec![],
        vec![],
        vec![
            cos_pow(1.0 / 3.0),
            Term::LogCosPow { a: 1.0, b: -8.0 / 15.0, delta: -5.0 / 8.0 },
            affine(8.0 / 3.0, -5.0 / 3.0, 0.2, -1.0),
            Term::ExpCosAffine { a: -5.0 / 8.0, b: 5.0 / 8.0, gamma: 8.0 / 15.0 },
            affine(16.0 / 21.0, 5.0 / 21.0, 0.7, 2.0),
            affine(2.0 / 3.0, 1.0 / 3.0, 0.8, 1.25),
            affine(8.0 / 13.0, 5.0 / 13.0, 13.0 / 15.0, 1.0),
            affine(28.0 / 51.0, 23.0 / 51.0, LINE_Q, 35.0 / 46.0),
            Term::Sinc,
            affine(8.0 / 15.0, 7.0 / 15.0, 1.0, 5.0 / 7.0),
            affine(4.0 / 9.0, 5.0 / 9.0, 1.2, 0.5),
            cusa(),
        ],
        vec![],
        vec![vec![]],
    ));

    // ---- inverse sine and cosine ---------------------------------------------------
    let asin = Term::Inverse(InvFn::Asin);
    let acos = Term::Inverse(InvFn::Acos);
    out.push(claim(
        "C-SF-SHAFER",
        "classical arcsin chain",
        "3t/(2+sqrt(1-t^2)) < 6(sqrt(1+t)-sqrt(1-t))/(4+sqrt(1+t)+sqrt(1-t)) < arcsin t",
        Argument,
        vec![],
        vec![],
        vec![Term::AsinClassicLower, Term::AsinHalfClassic, asin],
        vec![],
        vec![vec![]],
    ));
    out.push(claim(
        "C-SF-FINK",
        "classical two-sided arcsin bound",
        "3t/(2+sqrt(1-t^2)) < arcsin t < pi t/(2+sqrt(1-t^2))",
        Argument,
        vec![],
        vec![],
        vec![Term::AsinClassicLower, asin, Term::AsinClassicUpper],
        vec![],
        vec![vec![]],
    ));
    let basic_clauses: [(&'static str, &'static str, Vec<ParamSpec>, Vec<Condition>, bool, Vec<Vec<(&'static str, Scalar)>>); 4] = [
        (
            "i",
            "q >= 1, p <= 3q - 8/5",
            vec![ps("q", lit(1.0), lit(3.0)), ps("p", lit(-3.0), LINE_P)],
            vec![
                cond("q >= 1", |m| get(m, "q") >= 1.0),
                cond("p <= 3q - 8/5", |m| get(m, "p") <= 3.0 * get(m, "q") - 1.6 + 1e-12),
                e_cond,
            ],
            true,
            vec![inst(&[("q", lit(1.0)), ("p", lit(1.0))])],
        ),
        (
            "ii",
            "34/35 < q <= 1, p >= pi^2/4 - 1",
            vec![ps("q", lit(LINE_Q + 1e-9), lit(1.0)), ps("p", ENDPOINT_P, THREE_Q)],
            vec![
                cond("34/35 < q <= 1", |m| get(m, "q") > LINE_Q && get(m, "q") <= 1.0),
                cond("p >= pi^2/4 - 1", |m| get(m, "p") >= endpoint_p() - 1e-12),
                e_cond,
            ],
            false,
            vec![inst(&[("q", lit(1.0)), ("p", lit(2.0))])],
        ),
        (
            "iii",
            "0 < q <= 34/35, p >= 3q - 8/5",
            vec![ps("q", lit(0.05), lit(LINE_Q)), ps("p", LINE_P, THREE_Q)],
            vec![
                cond("0 < q <= 34/35", |m| get(m, "q") > 0.0 && get(m, "q") <= LINE_Q),
                cond("p >= 3q - 8/5", |m| get(m, "p") >= 3.0 * get(m, "q") - 1.6 - 1e-12),
                e_cond,
            ],
            false,
            vec![inst(&[("q", lit(0.5)), ("p", lit(0.0))])],
        ),
        (
            "iv",
            "q <= 0, 3q - 8/5 <= p <= 0",
            vec![ps("q", lit(-3.0), lit(0.0)), ps("p", LINE_P, lit(0.0))],
            vec![
                cond("q <= 0", |m| get(m, "q") <= 0.0),
                cond("p >= 3q - 8/5", |m| get(m, "p") >= 3.0 * get(m, "q") - 1.6 - 1e-12),
                e_cond,
            ],
            false,
            vec![inst(&[("q", lit(0.0)), ("p", lit(0.0))])],
        ),
    ];
    for (label, cond_text, params, pre, increasing, insts) in basic_clauses {
        let (asin_chain, acos_chain) = if label == "iv" {
            (
                vec![asin, asin_basic(Via::Cusa)],
                vec![acos, acos_basic(Via::Cusa)],
            )
        } else if increasing {
            (
                vec![asin_basic(Via::Cusa), asin, asin_basic(Via::Endpoint)],
                vec![acos_basic(Via::Cusa), acos, acos_basic(Via::Endpoint)],
            )
        } else {
            (
                vec![asin_basic(Via::Endpoint), asin, asin_basic(Via::Cusa)],
                vec![acos_basic(Via::Endpoint), acos, acos_basic(Via::Cusa)],
            )
        };
        let sid: &'static str = Box::leak(format!("C-SF-basic-{label}").into_boxed_str());
        let cid: &'static str = Box::leak(format!("C-SF-basic-acos-{label}").into_boxed_str());
        out.push(claim(
            sid,
            Box::leak(format!("arcsin via direct substitution, {cond_text}").into_boxed_str()),
            "t/family(sqrt(1-t^2)) bounds on arcsin t",
            Argument,
            params.clone(),
            pre.clone(),
            asin_chain,
            vec![],
            insts.clone(),
        ));
        out.push(claim(
            cid,
            Box::leak(format!("arccos via direct substitution, {cond_text}").into_boxed_str()),
            "sqrt(1-t^2)/family(t) bounds on arccos t",
            Argument,
            params,
            pre,
            acos_chain,
            vec![],
            insts,
        ));
    }
    let half_clauses: [(&'static str, &'static str, Vec<ParamSpec>, Vec<Condition>, bool, Vec<Vec<(&'static str, Scalar)>>); 3] = [
        (
            "i",
            "q >= 1, p <= 3q - 8/5",
            vec![ps("q", lit(1.0), lit(3.0)), ps("p", lit(-3.0), LINE_P)],
            vec![
                cond("q >= 1", |m| get(m, "q") >= 1.0),
                cond("p <= 3q - 8/5", |m| get(m, "p") <= 3.0 * get(m, "q") - 1.6 + 1e-12),
            ],
            true,
            vec![inst(&[("q", lit(1.0)), ("p", lit(1.0))]), inst(&[("q", lit(1.0)), ("p", lit(0.0))])],
        ),
        (
            "ii",
            "34/35 < q <= 1, pi^2/4 - 1 <= p < 3q/(1 - 2^(-q/2))",
            vec![ps("q", lit(LINE_Q + 1e-9), lit(1.0)), ps("p", ENDPOINT_P, HALF_LIMIT)],
            vec![
                cond("34/35 < q <= 1", |m| get(m, "q") > LINE_Q && get(m, "q") <= 1.0),
                cond("p >= pi^2/4 - 1", |m| get(m, "p") >= endpoint_p() - 1e-12),
                cond("p < 3q/(1 - 2^(-q/2))", |m| get(m, "p") < crate::invtrig::halfangle_p_limit(get(m, "q"))),
            ],
            false,
            vec![inst(&[("q", lit(1.0)), ("p", lit(2.0))])],
        ),
        (
            "iv",
            "q <= 34/35, 3q - 8/5 <= p < 3q/(1 - 2^(-q/2))",
            vec![ps("q", lit(-2.0), lit(LINE_Q)), ps("p", LINE_P, der("min(limit, 3q+1.4)", |m| {
                (crate::invtrig::halfangle_p_limit(get(m, "q")) - 1e-6).min(3.0 * get(m, "q") + 1.4)
            }))],
            vec![
                cond("q <= 34/35", |m| get(m, "q") <= LINE_Q),
                cond("p >= 3q - 8/5", |m| get(m, "p") >= 3.0 * get(m, "q") - 1.6 - 1e-12),
                cond("p < 3q/(1 - 2^(-q/2))", |m| get(m, "p") < crate::invtrig::halfangle_p_limit(get(m, "q"))),
            ],
            false,
            vec![inst(&[("q", lit(0.5)), ("p", lit(0.0))]), inst(&[("q", lit(0.0)), ("p", lit(0.0))])],
        ),
    ];
    for (label, cond_text, params, pre, increasing, insts) in half_clauses {
        let chain_for = |f: InvFn| {
            let target = Term::Inverse(f);
            if increasing {
                vec![half(f, HalfConst::Three), target, half(f, HalfConst::Quarter)]
            } else {
                vec![half(f, HalfConst::Quarter), target, half(f, HalfConst::Three)]
            }
        };
        out.push(claim(
            Box::leak(format!("C-SF-refined-{label}").into_boxed_str()),
            Box::leak(format!("arcsin via half-angle substitution, {cond_text}").into_boxed_str()),
            "2 sin(x/2)/family(cos(x/2)) bounds on arcsin t, constants 3 and the quarter-point constant",
            Argument,
            params.clone(),
            pre.clone(),
            chain_for(InvFn::Asin),
            vec![],
            insts.clone(),
        ));
        out.push(claim(
            Box::leak(format!("C-CARLSON-refined-{label}").into_boxed_str()),
            Box::leak(format!("arccos via half-angle substitution, {cond_text}").into_boxed_str()),
            "2 sin(x/2)/family(cos(x/2)) bounds on arccos t, constants 3 and the quarter-point constant",
            Argument,
            params,
            pre,
            chain_for(InvFn::Acos),
            vec![],
            insts,
        ));
    }
    out.push(claim(
        "C-CARLSON-classic",
        "classical two-sided arccos bound",
        "6 sqrt(1-t)/(2 sqrt2 + sqrt(1+t)) < arccos t < 2^(2/3) sqrt(1-t)/(1+t)^(1/6)",
        Argument,
        vec![],
        vec![],
        vec![Term::AcosClassicLower, acos, Term::AcosClassicUpper],
        vec![],
        vec![vec![]],
    ));

    // ---- means ------------------------------------------------------------------------
    let sb_kq = |upper: bool| {
        if upper {
            vec![Term::SbMean, Term::SbKq { k: par("k"), q: par("q") }]
        } else {
            vec![Term::SbKq { k: par("k"), q: par("q") }, Term::SbMean]
        }
    };
    let sb_specs: [(&'static str, &'static str, Scalar, Scalar, Scalar, Scalar, bool, SharpBoundary, Condition, f64); 4] = [
        ("C-MEAN-SB-sharp-i", "SB(a,b) < b^(1-1/k)((1-k/3)b^q + (k/3)a^q)^(1/(kq)) iff q >= 8/(5(3-k)), 7/5 <= k < 3",
            lit(1.4), lit(2.9), K_LINE, der("8/(5(3-k))+2", |m| 1.6 / (3.0 - get(m, "k")) + 2.0), true, sharp("q", K_LINE, Below),
            cond("7/5 <= k < 3", |m| get(m, "k") >= 1.4 && get(m, "k") < 3.0), 2.0),
        ("C-MEAN-SB-sharp-ii", "SB(a,b) > b^(1-1/k)((1-k/3)b^q + (k/3)a^q)^(1/(kq)) iff q <= q_crit(k), p0 < k < 3",
            der("p0 + 1e-9", |_| p_unit_crit().value + 1e-9), lit(2.9), lit(-2.0), Q_OF_K, false, sharp("q", Q_OF_K, Above),
            cond("p0 < k < 3", |m| get(m, "k") > p_unit_crit().value && get(m, "k") < 3.0), 2.0),
        ("C-MEAN-SB-sharp-iii", "SB(a,b) > b^(1-1/k)((1-k/3)b^q + (k/3)a^q)^(1/(kq)) iff q <= 8/(5(3-k)), 0 < k <= 23/17",
            lit(0.05), lit(23.0 / 17.0), lit(-2.0), K_LINE, false, sharp("q", K_LINE, Above),
            cond("0 < k <= 23/17", |m| get(m, "k") > 0.0 && get(m, "k") <= 23.0 / 17.0 + 1e-12), 1.0),
        ("C-MEAN-SB-sharp-iv", "SB(a,b) < b^(1-1/k)((1-k/3)b^q + (k/3)a^q)^(1/(kq)) iff q >= q_crit(k), 0 < k < p0star",
            lit(0.05), der("p0star - 1e-9", |_| p_line_crit().value - 1e-9), Q_OF_K, der("q_crit(k)+2", |m| q_crit_of_k(get(m, "k")).unwrap_or(f64::NAN) + 2.0), true, sharp("q", Q_OF_K, Below),
            cond("0 < k < p0star", |m| get(m, "k") > 0.0 && get(m, "k") < p_line_crit().value), 1.0),
    ];
    for (id, statement, k_lo, k_hi, q_lo, q_hi, upper, b, pre, inst_k) in sb_specs {
        out.push(claim(
            id,
            "Schwab-Borchardt mean against the p = kq family",
            statement,
            Ratio,
            vec![ps("k", k_lo, k_hi), ps("q", q_lo, q_hi)],
            vec![pre, cond("(k, q) admissible", |m| kq_admissible("k", "q", m))],
            sb_kq(upper),
            vec![b],
            vec![inst(&[("k", lit(inst_k)), ("q", b.value)])],
        ));
    }
    out.push(claim(
        "C-MEAN-SB-line",
        "Schwab-Borchardt mean against the line family",
        "b cusa_mean_line(a/b; q) < SB(a, b) iff q <= 34/35",
        Ratio,
        vec![ps("q", lit(-3.0), LINE_Q_S)],
        vec![],
        vec![Term::SbLine { q: par("q") }, Term::SbMean],
        vec![sharp("q", LINE_Q_S, Above)],
        vec![inst(&[("q", LINE_Q_S)])],
    ));
    out.push(claim(
        "C-MEAN-SB-line-rev",
        "Schwab-Borchardt mean against the line family, reversed",
        "SB(a, b) < b cusa_mean_line(a/b; q) iff q >= q0",
        Ratio,
        vec![ps("q", Q0, lit(3.0))],
        vec![],
        vec![Term::SbMean, Term::SbLine { q: par("q") }],
        vec![sharp("q", Q0, Below)],
        vec![inst(&[("q", Q0)])],
    ));
    let mean_specs: [(&'static str, &'static str, MeanKind, bool); 3] = [
        ("P", "G, A", MeanKind::SbGa, true),
        ("T", "A, Q", MeanKind::SbAq, false),
        ("U", "G, Q", MeanKind::SbGq, true),
    ];
    for (name, pair, kind, sharp_rev) in mean_specs {
        let est = Term::LineEstimate { kind, q: par("q") };
        out.push(claim(
            Box::leak(format!("C-MEAN-{name}").into_boxed_str()),
            Box::leak(format!("{name} = SB({pair}) against the line family").into_boxed_str()),
            Box::leak(format!("M^((10q-8)/(15q-8)) (8/(15q) M^q + (1-8/(15q)) m^q)^(5/(15q-8)) < {name} for (m, M) = ({pair}) iff q <= 34/35").into_boxed_str()),
            Ratio,
            vec![ps("q", lit(-3.0), LINE_Q_S)],
            vec![],
            vec![est, Term::Mean(kind)],
            vec![sharp("q", LINE_Q_S, Above)],
            vec![inst(&[("q", LINE_Q_S)]), inst(&[("q", lit(0.0))])],
        ));
        // (A, Q) only reaches x < pi/4, so q0 is sufficient there but not sharp
        let (pre, sharp_list) = if sharp_rev {
            (vec![], vec![sharp("q", Q0, Below)])
        } else {
            (vec![cond("q >= q0", |m| get(m, "q") >= q_line_crit().value - 1e-12)], vec![])
        };
        out.push(claim(
            Box::leak(format!("C-MEAN-{name}-rev").into_boxed_str()),
            Box::leak(format!("{name} = SB({pair}) against the line family, reversed").into_boxed_str()),
            Box::leak(format!("{name} < M^((10q-8)/(15q-8)) (8/(15q) M^q + (1-8/(15q)) m^q)^(5/(15q-8)) for (m, M) = ({pair}) when q >= q0").into_boxed_str()),
            Ratio,
            vec![ps("q", Q0, lit(3.0))],
            pre,
            vec![Term::Mean(kind), est],
            sharp_list,
            vec![inst(&[("q", Q0)]), inst(&[("q", lit(1.0))])],
        ));
    }

    out
}

pub fn catalog() -> &'static [Claim] {
    static CATALOG: OnceLock<Vec<Claim>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

/// Finds a claim by id; a family id without a clause suffix resolves to clause `-i`.
pub fn lookup(id: &str) -> Result<&'static Claim> {
    let cat = catalog();
    cat.iter()
        .find(|c| c.id == id)
        .or_else(|| {
            let with_clause = format!("{id}-i");
            cat.iter().find(|c| c.id == with_clause)
        })
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Chain-shaped claims addressable by a short name.
pub fn chain_claim(name: &str) -> Result<&'static Claim> {
    let id = match name {
        "final" => "C-CHAIN-FINAL",
        "neuman1" => "C-NEUMAN1",
        "yang1" => "C-YANG1",
        "yang2" => "C-YANG2",
        "mc" => "C-MC",
        "klen-yang" => "C-KLENYANG",
        "p1" => "C-CHAIN-P1",
        "q1" => "C-CHAIN-Q1",
        "shafer" => "C-SF-SHAFER",
        _ => return Err(Error::UnknownChain(name.to_string())),
    };
    lookup(id)
}

pub const CHAIN_NAMES: [&str; 9] = ["final", "neuman1", "yang1", "yang2", "mc", "klen-yang", "p1", "q1", "shafer"];
