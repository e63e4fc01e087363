use std::f64::consts::FRAC_PI_2;
use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use cusa::bounds::{cusa_mean, cusa_mean_kq, cusa_mean_line, endpoint_mean, family_branch, weighted_power_mean};
use cusa::claims::{catalog, chain_claim, lookup, Params, CHAIN_NAMES};
use cusa::constants::{
    endpoint_ratio, line_gap, p_crit_of_q, p_line_crit, p_unit_crit, q_crit_of_k, q_crit_of_p, q_line_crit,
    quarter_constant, SolvedConstant,
};
use cusa::invtrig::{arccos_bounds, arcsin_bounds, Family};
use cusa::kernel::{
    classify, cusa_ratio_eval, deriv_numerator, deriv_parts, is_admissible, limit_coeffs, line_threshold,
    p_threshold, power_deficit, ratio_excess, ParamPoint, TABLE_X,
};
use cusa::means::{line_estimate, mean, sb_bound_kq, sb_bound_line, schwab_borchardt, sine_mean, MeanKind};
use cusa::numeric::{sinc, ulp_distance};
use cusa::output::{sig6, to_json};
use cusa::series::{
    build_series_table, elementary_series, line_threshold_coeff_ratio_exact, p_threshold_coeff_ratio_exact, to_f64,
    Elementary, DEFAULT_N_MAX,
};
use cusa::verifier::{probe_sharpness, sample_claim, verify_claim, SampleSpec, Status};
use cusa::Error;

const CONFIG_ENV: &str = "CUSA_CONFIG";

/// Two-parameter Cusa-type bounds for sin(x)/x: evaluation, constants and claim verification.
///
/// Exit codes: 0 pass, 1 claim failure, 2 usage error, 3 inconclusive.
/// Sampling defaults can be set in a TOML file named by $CUSA_CONFIG
/// (keys: grid, random, seed, delta, inconclusive_margin); flags win.
#[derive(Parser)]
#[command(name = "cusa", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Default)]
struct Common {
    #[arg(long, global = true, allow_negative_numbers = true)]
    p: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    q: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    k: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    t: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    x: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    b: Option<f64>,
    /// Any other claim parameter, e.g. `--param eta=0.3` (repeatable).
    #[arg(long = "param", global = true, value_name = "NAME=VALUE", value_parser = parse_pair)]
    params: Vec<(String, f64)>,
    /// Grid points per verification.
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// Seeded random points per verification.
    #[arg(long, global = true)]
    random: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Endpoint gap: samples stay this far inside the open interval.
    #[arg(long, global = true)]
    delta: Option<f64>,
    /// Write JSON to PATH, or to stdout with `-`.
    #[arg(long, global = true, value_name = "PATH|-")]
    json: Option<String>,
    /// Write per-point CSV (x, lhs, rhs, margin) or a table to PATH, or stdout with `-`.
    #[arg(long, global = true, value_name = "PATH|-")]
    csv: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Kernel functions: ratio, excess, deficit, parts, numerator, p-threshold, line-threshold, limit, endpoint, classify.
    Eval {
        #[arg(default_value = "ratio")]
        function: String,
    },
    /// Bounding families at t (or t = cos x): cusa, endpoint, kq, line, power-mean (with --a --b --param w=...).
    Bound {
        #[arg(default_value = "cusa")]
        family: String,
    },
    /// Sharp constants: p0, p0star, q0, q-of-p, p-of-q, q-of-k, c-pq, v, endpoint; all fixed ones when omitted.
    Constants {
        #[arg(long)]
        name: Option<String>,
    },
    /// Catalog listing (`list`) or one claim (`show --claim ID`).
    Claims {
        #[arg(default_value = "list")]
        action: String,
        #[arg(long)]
        claim: Option<String>,
    },
    /// Verify a claim at the given parameters.
    Verify {
        #[arg(long)]
        claim: String,
    },
    /// Push a parameter past its sharp boundary and look for violations.
    Probe {
        #[arg(long)]
        claim: String,
        /// Parameter to push; may be omitted when the claim has one boundary.
        #[arg(long)]
        boundary: Option<String>,
        #[arg(long, value_delimiter = ',', default_value = "1e-2")]
        deltas: Vec<f64>,
    },
    /// Verify a named chain (final, neuman1, yang1, yang2, mc, klen-yang, p1, q1, shafer).
    Chain {
        #[arg(default_value = "final")]
        name: String,
    },
    /// arcsin/arccos bounds: --t with --p --q for the basic and halfangle families.
    Invtrig {
        #[arg(default_value = "arcsin")]
        function: String,
        #[arg(long, default_value = "basic")]
        family: String,
    },
    /// Means of (a, b): G A Q P T U SB S kq line est-P est-T est-U check all.
    Means {
        #[arg(default_value = "all")]
        kind: String,
    },
    /// Coefficient tables as CSV, or `--kind csc|cot|csc2|tan --x X` for a truncated series.
    Series {
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, default_value_t = 30)]
        terms: usize,
    },
}

fn parse_pair(s: &str) -> std::result::Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let v: f64 = v.trim().parse().map_err(|e| format!("bad value in `{s}`: {e}"))?;
    Ok((k.trim().to_string(), v))
}

/// Failure that maps to an exit code.
enum Fail {
    Usage(String),
    Io(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Fail>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(Fail::Usage(msg.into()))
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    grid: Option<usize>,
    random: Option<usize>,
    seed: Option<u64>,
    delta: Option<f64>,
    inconclusive_margin: Option<f64>,
}

fn sample_spec(c: &Common) -> Run<SampleSpec> {
    let mut spec = SampleSpec::default();
    let file = match std::env::var_os(CONFIG_ENV) {
        Some(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Fail::Usage(format!("cannot read {CONFIG_ENV}={}: {e}", path.to_string_lossy())))?;
            toml::from_str::<ConfigFile>(&text).map_err(|e| Fail::Usage(format!("bad config file: {e}")))?
        }
        None => ConfigFile::default(),
    };
    fn pick<T: Copy + std::fmt::Display>(name: &str, flag: Option<T>, file: Option<T>, slot: &mut T) {
        if let (Some(f), Some(c)) = (flag, file) {
            eprintln!("note: --{name} {f} overrides config value {c}");
        }
        if let Some(v) = flag.or(file) {
            *slot = v;
        }
    }
    pick("grid", c.grid, file.grid, &mut spec.grid_points);
    pick("random", c.random, file.random, &mut spec.random_points);
    pick("seed", c.seed, file.seed, &mut spec.seed);
    pick("delta", c.delta, file.delta, &mut spec.endpoint_gap);
    if let Some(m) = file.inconclusive_margin {
        spec.inconclusive_margin = m;
    }
    Ok(spec)
}

fn given_params(c: &Common) -> Params {
    let mut m = Params::new();
    for (name, v) in [("p", c.p), ("q", c.q), ("k", c.k), ("t", c.t), ("x", c.x), ("a", c.a), ("b", c.b)] {
        if let Some(v) = v {
            m.insert(name.to_string(), v);
        }
    }
    for (k, v) in &c.params {
        m.insert(k.clone(), *v);
    }
    m
}

fn need(v: Option<f64>, name: &str) -> Run<f64> {
    v.ok_or_else(|| Fail::Usage(format!("missing --{name}")))
}

fn extra(c: &Common, name: &str) -> Option<f64> {
    c.params.iter().rev().find(|(k, _)| k == name).map(|(_, v)| *v)
}

fn emit(path: &str, body: &str) -> Run<()> {
    if path == "-" {
        print!("{body}");
        Ok(())
    } else {
        fs::File::create(path)
            .and_then(|mut f| f.write_all(body.as_bytes()))
            .map_err(|e| Fail::Io(format!("cannot write {path}: {e}")))
    }
}

/// Writes JSON/CSV where requested and prints the text form unless stdout is taken.
fn publish(c: &Common, json_value: &impl Serialize, csv: Option<String>, text: &str) -> Run<()> {
    let mut stdout_used = false;
    if let Some(path) = &c.json {
        emit(path, &to_json(json_value))?;
        stdout_used |= path == "-";
    }
    if let Some(path) = &c.csv {
        let Some(body) = csv else {
            return usage("--csv is not available for this subcommand");
        };
        if stdout_used && path == "-" {
            return usage("--json - and --csv - cannot both use stdout");
        }
        emit(path, &body)?;
        stdout_used |= path == "-";
    }
    if !stdout_used {
        print!("{text}");
    }
    Ok(())
}

fn x_or_t(c: &Common) -> Run<(f64, Option<f64>)> {
    match (c.t, c.x) {
        (Some(t), None) => Ok((t, None)),
        (None, Some(x)) => Ok((x.cos(), Some(x))),
        (Some(_), Some(_)) => usage("give either --t or --x, not both"),
        (None, None) => usage("missing --t or --x"),
    }
}

fn run_eval(c: &Common, function: &str) -> Run<i32> {
    let (value, branch, detail): (Value, &str, String) = match function {
        "ratio" | "excess" => {
            let (p, q, x) = (need(c.p, "p")?, need(c.q, "q")?, need(c.x, "x")?);
            let e = cusa_ratio_eval(p, q, x)?;
            let branch = match e.branch {
                cusa::kernel::Branch::Series => "series",
                cusa::kernel::Branch::Direct => "direct",
            };
            if function == "ratio" {
                (json!(e.value), branch, format!("ratio(p={p}, q={q}, x={x}) = {}", sig6(e.value)))
            } else {
                let d = ratio_excess(p, q, x)?;
                (json!(d), branch, format!("ratio - 1/3 = {}", sig6(d)))
            }
        }
        "deficit" => {
            let (p, t) = (need(c.p, "p")?, need(c.t, "t")?);
            let v = power_deficit(p, t)?;
            (json!(v), if p.abs() < 1e-4 { "series" } else { "direct" }, format!("(1 - t^p)/p = {}", sig6(v)))
        }
        "parts" => {
            let x = need(c.x, "x")?;
            let d = deriv_parts(x)?;
            let text = format!(
                "p_part = {}\nq_part = {}\nfree_part = {}",
                sig6(d.p_part),
                sig6(d.q_part),
                sig6(d.free_part)
            );
            (serde_json::to_value(d).unwrap_or(Value::Null), if x < TABLE_X { "series" } else { "direct" }, text)
        }
        "numerator" => {
            let (p, q, x) = (need(c.p, "p")?, need(c.q, "q")?, need(c.x, "x")?);
            let v = deriv_numerator(p, q, x)?;
            (json!(v), if x < TABLE_X { "series" } else { "direct" }, format!("derivative numerator = {}", sig6(v)))
        }
        "p-threshold" => {
            let (q, x) = (need(c.q, "q")?, need(c.x, "x")?);
            let v = p_threshold(q, x)?;
            (json!(v), if x < TABLE_X { "series" } else { "direct" }, format!("p threshold = {}", sig6(v)))
        }
        "line-threshold" => {
            let x = need(c.x, "x")?;
            let v = line_threshold(x)?;
            (json!(v), if x < TABLE_X { "series" } else { "direct" }, format!("line threshold = {}", sig6(v)))
        }
        "limit" => {
            let (p, q) = (need(c.p, "p")?, need(c.q, "q")?);
            let l = limit_coeffs(&ParamPoint::new(p, q)?);
            let v = json!({"quadratic": l.quadratic, "quartic": l.quartic, "endpoint_excess": l.endpoint_excess});
            let text = format!(
                "x^2 coefficient = {}\nx^4 coefficient = {}\nratio(pi/2-) - 1/3 = {}",
                sig6(l.quadratic),
                sig6(l.quartic),
                sig6(l.endpoint_excess)
            );
            (v, "limit", text)
        }
        "endpoint" => {
            let (p, q) = (need(c.p, "p")?, need(c.q, "q")?);
            let v = endpoint_ratio(p, q);
            (json!(v), "limit", format!("ratio(pi/2-) = {}", sig6(v)))
        }
        "classify" => {
            let (p, q) = (need(c.p, "p")?, need(c.q, "q")?);
            let m = classify(p, q);
            let adm = is_admissible(p, q);
            (
                json!({"admissible": adm, "monotonicity": format!("{m:?}").to_lowercase()}),
                "region",
                format!("admissible = {adm}, ratio is {}", format!("{m:?}").to_lowercase()),
            )
        }
        other => return usage(format!("unknown eval function `{other}`")),
    };
    let body = json!({"function": function, "value": value, "branch": branch});
    publish(c, &body, None, &format!("{detail}\nbranch: {branch}\n"))?;
    Ok(0)
}

fn run_bound(c: &Common, family: &str) -> Run<i32> {
    let (value, branch) = match family {
        "power-mean" => {
            let (a, b, q) = (need(c.a, "a")?, need(c.b, "b")?, need(c.q, "q")?);
            let w = extra(c, "w").ok_or_else(|| Fail::Usage("missing --param w=...".into()))?;
            (weighted_power_mean(a, b, q, w)?, if q.abs() < 1e-12 { "limit-q0" } else { "direct" })
        }
        _ => {
            let (t, _) = x_or_t(c)?;
            match family {
                "cusa" => {
                    let (p, q) = (need(c.p, "p")?, need(c.q, "q")?);
                    (cusa_mean(t, p, q)?, family_branch(p, q))
                }
                "endpoint" => {
                    let (p, q) = (need(c.p, "p")?, need(c.q, "q")?);
                    (endpoint_mean(t, p, q)?, if p.abs() < 1e-12 { "limit-p0" } else { "log-domain" })
                }
                "kq" => {
                    let (k, q) = (need(c.k, "k")?, need(c.q, "q")?);
                    (cusa_mean_kq(t, k, q)?, family_branch(k * q, q))
                }
                "line" => {
                    let q = need(c.q, "q")?;
                    (cusa_mean_line(t, q)?, family_branch(3.0 * q - 1.6, q))
                }
                other => return usage(format!("unknown bound family `{other}`")),
            }
        }
    };
    let mut body = json!({"family": family, "value": value, "branch": branch});
    let mut text = format!("{family} = {}\nbranch: {branch}\n", sig6(value));
    if let (Some(x), true) = (c.x, family != "power-mean") {
        let s = sinc(x);
        body["sinc"] = json!(s);
        body["difference"] = json!(value - s);
        text.push_str(&format!("sin(x)/x = {}\nbound - sin(x)/x = {}\n", sig6(s), sig6(value - s)));
    }
    publish(c, &body, None, &text)?;
    Ok(0)
}

fn solved_text(s: &SolvedConstant) -> String {
    format!(
        "{} = {}  (residual {}, bracket [{}, {}])\n",
        s.name,
        sig6(s.value),
        sig6(s.residual),
        sig6(s.bracket.0),
        sig6(s.bracket.1)
    )
}

fn closed(name: &str, value: f64) -> SolvedConstant {
    SolvedConstant {
        name: name.to_string(),
        value,
        residual: 0.0,
        bracket: (value, value),
    }
}

fn run_constants(c: &Common, name: Option<&str>) -> Run<i32> {
    let list: Vec<SolvedConstant> = match name {
        None => vec![p_unit_crit().clone(), p_line_crit().clone(), q_line_crit().clone()],
        Some("p0") => vec![p_unit_crit().clone()],
        Some("p0star") => vec![p_line_crit().clone()],
        Some("q0") => vec![q_line_crit().clone()],
        Some("q-of-p") => vec![closed("q_of_p", q_crit_of_p(need(c.p, "p")?))],
        Some("p-of-q") => vec![p_crit_of_q(need(c.q, "q")?)?],
        Some("q-of-k") => vec![closed("q_of_k", q_crit_of_k(need(c.k, "k")?)?)],
        Some("c-pq") => vec![closed("c_pq", quarter_constant(need(c.p, "p")?, need(c.q, "q")?))],
        Some("v") => vec![closed("v", line_gap(need(c.q, "q")?))],
        Some("endpoint") => vec![closed("endpoint_ratio", endpoint_ratio(need(c.p, "p")?, need(c.q, "q")?))],
        Some(other) => return usage(format!("unknown constant `{other}`")),
    };
    let text: String = list.iter().map(solved_text).collect();
    if list.len() == 1 {
        publish(c, &list[0], None, &text)?;
    } else {
        publish(c, &list, None, &text)?;
    }
    Ok(0)
}

fn run_claims(c: &Common, action: &str, id: Option<&str>) -> Run<i32> {
    match (action, id) {
        ("list", None) => {
            let all: Vec<_> = catalog().iter().map(|cl| cl.summary()).collect();
            let mut text = String::new();
            for s in &all {
                let names: Vec<_> = s.params.iter().map(|p| p.name.as_str()).collect();
                text.push_str(&format!("{:<22} [{}] {}\n", s.id, names.join(", "), s.anchor));
            }
            publish(c, &all, None, &text)?;
        }
        ("list" | "show", Some(id)) => {
            let s = lookup(id)?.summary();
            let mut text = format!("{}\n  {}\n  {}\n  variable {} in ({}, {})\n", s.id, s.anchor, s.statement, s.variable.name(), sig6(s.domain.0), sig6(s.domain.1));
            for p in &s.params {
                text.push_str(&format!("  param {}: sampled in [{}, {}]\n", p.name, p.sample_lo, p.sample_hi));
            }
            for p in &s.preconditions {
                text.push_str(&format!("  requires {p}\n"));
            }
            for b in &s.sharp_boundaries {
                let side = match b.fails {
                    cusa::claims::FailSide::Above => ">",
                    cusa::claims::FailSide::Below => "<",
                };
                text.push_str(&format!("  sharp: fails once {} {side} {}\n", b.param, b.value));
            }
            text.push_str(&format!("  chain: {}\n", s.chain.join("  <  ")));
            if let Some(e) = &s.equivalent_to {
                text.push_str(&format!("  equivalent to {e}\n"));
            }
            publish(c, &s, None, &text)?;
        }
        ("show", None) => return usage("claims show needs --claim ID"),
        (other, _) => return usage(format!("unknown claims action `{other}`")),
    }
    Ok(0)
}

fn report_text(r: &cusa::verifier::Report) -> String {
    let params: Vec<String> = r.param_values.iter().map(|(k, v)| format!("{k}={}", sig6(*v))).collect();
    let mut s = format!(
        "{} [{}]: {:?}\n  samples {}, inconclusive {}, min margin {} at {}, seed {}\n",
        r.claim_id,
        params.join(", "),
        r.status,
        r.samples_evaluated,
        r.inconclusive_count,
        sig6(r.min_margin),
        sig6(r.argmin),
        r.seed
    );
    if !r.violations.is_empty() {
        s.push_str(&format!("  {} violations, first few:\n", r.violations.len()));
        for v in r.violations.iter().take(5) {
            s.push_str(&format!("    at {}: lhs {} rhs {}\n", sig6(v.point), sig6(v.lhs), sig6(v.rhs)));
        }
    }
    s
}

fn points_csv(points: &[cusa::verifier::PointEval]) -> String {
    let mut out = String::from("x,lhs,rhs,margin\n");
    for p in points {
        out.push_str(&format!("{:.16e},{:.16e},{:.16e},{:.16e}\n", p.x, p.lhs, p.rhs, p.margin));
    }
    out
}

fn verify_and_publish(c: &Common, claim: &cusa::claims::Claim, given: &Params) -> Run<i32> {
    let spec = sample_spec(c)?;
    let m = claim.complete_params(given);
    for (k, v) in &m {
        if !given.contains_key(k) {
            eprintln!("note: {k} = {} taken from the catalog instance", sig6(*v));
        }
    }
    let report = verify_claim(claim, &m, &spec)?;
    let csv = match c.csv {
        Some(_) => Some(points_csv(&sample_claim(claim, &m, &spec)?)),
        None => None,
    };
    publish(c, &report, csv, &report_text(&report))?;
    Ok(report.status.exit_code())
}

fn run_probe(c: &Common, id: &str, boundary: Option<&str>, deltas: &[f64]) -> Run<i32> {
    let claim = lookup(id)?;
    let param = match boundary {
        Some(b) => b.to_string(),
        None => match claim.sharp.as_slice() {
            [only] => only.param.to_string(),
            [] => return usage(format!("{} has no sharp boundary", claim.id)),
            _ => return usage(format!("{} has several boundaries; pick one with --boundary", claim.id)),
        },
    };
    let spec = sample_spec(c)?;
    let results = probe_sharpness(claim.id, &given_params(c), &param, deltas, &spec)?;
    let mut text = String::new();
    let mut code = 0;
    for r in &results {
        let expected = if r.delta == 0.0 { Status::Pass } else { Status::Fail };
        let verdict = if r.report.status == expected { "as expected" } else { "UNEXPECTED" };
        text.push_str(&format!("delta {} past {} = {}: {}", sig6(r.delta), param, sig6(r.boundary), verdict));
        text.push('\n');
        text.push_str(&report_text(&r.report));
        code = match (code, r.report.status) {
            (1, _) => 1,
            (_, s) if s == expected => code,
            (_, Status::Inconclusive) => 3,
            _ => 1,
        };
    }
    publish(c, &results, None, &text)?;
    Ok(code)
}

fn run_chain(c: &Common, name: &str) -> Run<i32> {
    if name == "list" {
        let text: String = CHAIN_NAMES
            .iter()
            .map(|n| format!("{n:<10} {}\n", chain_claim(n).map(|cl| cl.statement).unwrap_or("")))
            .collect();
        publish(c, &CHAIN_NAMES, None, &text)?;
        return Ok(0);
    }
    verify_and_publish(c, chain_claim(name)?, &Params::new())
}

fn run_invtrig(c: &Common, function: &str, family: &str) -> Run<i32> {
    let fam = Family::parse(family).ok_or_else(|| Fail::Usage(format!("unknown family `{family}`")))?;
    let t = need(c.t, "t")?;
    let (p, q) = match fam {
        Family::Classic => (c.p.unwrap_or(0.0), c.q.unwrap_or(0.0)),
        _ => (need(c.p, "p")?, need(c.q, "q")?),
    };
    let (pair, target) = match function {
        "arcsin" => (arcsin_bounds(fam, t, p, q)?, t.asin()),
        "arccos" => (arccos_bounds(fam, t, p, q)?, t.acos()),
        other => return usage(format!("unknown function `{other}`")),
    };
    let body = json!({
        "function": function,
        "bounds": pair,
        "target": target,
        "lower_margin": target - pair.lower,
        "upper_margin": pair.upper - target,
    });
    let clause = pair.clause.map_or("-".to_string(), |cl| cl.label().to_string());
    let text = format!(
        "lower {}  {function}(t) {}  upper {}\nmargins: {} below, {} above; clause {clause}{}\n",
        sig6(pair.lower),
        sig6(target),
        sig6(pair.upper),
        sig6(target - pair.lower),
        sig6(pair.upper - target),
        if pair.one_sided { " (lower side trivial)" } else { "" }
    );
    publish(c, &body, None, &text)?;
    Ok(0)
}

fn run_means(c: &Common, kind: &str) -> Run<i32> {
    let (a, b) = (need(c.a, "a")?, need(c.b, "b")?);
    let classical = ["G", "A", "Q", "P", "T", "U"];
    let mut rows: Vec<(String, f64)> = Vec::new();
    let mut code = 0;
    match kind {
        "all" => {
            for k in classical {
                rows.push((k.into(), mean(MeanKind::parse(k).unwrap_or(MeanKind::Arithmetic), a, b)?));
            }
            rows.push(("SB".into(), schwab_borchardt(a, b)?));
        }
        "SB" | "sb" => rows.push(("SB".into(), schwab_borchardt(a, b)?)),
        "S" | "s" => {
            let (p, q) = (need(c.p, "p")?, need(c.q, "q")?);
            rows.push((format!("S_{{{p},{q}}}"), sine_mean(a, b, p, q)?));
        }
        "kq" => rows.push(("sb_bound_kq".into(), sb_bound_kq(a, b, need(c.k, "k")?, need(c.q, "q")?)?)),
        "line" => rows.push(("sb_bound_line".into(), sb_bound_line(a, b, need(c.q, "q")?)?)),
        "est-P" | "est-T" | "est-U" => {
            let m = MeanKind::parse(&kind[4..]).unwrap_or(MeanKind::SbGa);
            let q = need(c.q, "q")?;
            rows.push((format!("estimate_{}", &kind[4..]), line_estimate(m, a, b, q)?));
            rows.push((kind[4..].to_string(), mean(m, a, b)?));
        }
        "check" => {
            let g = mean(MeanKind::Geometric, a, b)?;
            let am = mean(MeanKind::Arithmetic, a, b)?;
            let qm = mean(MeanKind::Quadratic, a, b)?;
            let mut worst = 0;
            for (name, kind, lo, hi) in [
                ("P", MeanKind::SbGa, g, am),
                ("T", MeanKind::SbAq, am, qm),
                ("U", MeanKind::SbGq, g, qm),
            ] {
                let direct = mean(kind, a, b)?;
                let via = schwab_borchardt(lo, hi)?;
                let ulps = ulp_distance(direct, via);
                worst = worst.max(ulps);
                rows.push((name.into(), direct));
                rows.push((format!("SB for {name}"), via));
                rows.push((format!("{name} ulps"), ulps as f64));
            }
            if worst > 4 {
                code = 1;
            }
        }
        k if classical.contains(&k) => rows.push((k.into(), mean(MeanKind::parse(k).unwrap_or(MeanKind::Arithmetic), a, b)?)),
        other => return usage(format!("unknown mean `{other}`")),
    }
    let body: serde_json::Map<String, Value> = rows.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    let text: String = rows.iter().map(|(k, v)| format!("{k} = {}\n", sig6(*v))).collect();
    publish(c, &body, None, &text)?;
    Ok(code)
}

fn run_series(c: &Common, n_max: usize, kind: Option<&str>, terms: usize) -> Run<i32> {
    if let Some(kind) = kind {
        let e = Elementary::parse(kind).ok_or_else(|| Fail::Usage(format!("unknown series kind `{kind}`")))?;
        let x = need(c.x, "x")?;
        let v = elementary_series(e, x, terms)?;
        let direct = e.exact(x);
        let body = json!({"kind": e.name(), "x": x, "terms": terms, "series": v, "direct": direct});
        publish(c, &body, None, &format!("{}({}) series {} direct {}\n", e.name(), sig6(x), sig6(v), sig6(direct)))?;
        return Ok(0);
    }
    let table = build_series_table(n_max)?;
    let q_exact = match c.q {
        Some(q) => Some(BigRational::from_float(q).ok_or_else(|| Fail::Usage("q must be finite".into()))?),
        None => None,
    };
    #[derive(Serialize)]
    struct Row {
        quantity: &'static str,
        n: usize,
        exact: String,
        value: f64,
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        rows.push(Row { quantity: "bernoulli_abs", n, exact: table.bernoulli_abs(n).to_string(), value: table.bernoulli_abs_f64(n) });
    }
    for n in 2..=n_max {
        for (quantity, r, v) in [
            ("p_part", table.p_part(n), table.p_part_f64(n)),
            ("q_part", table.q_part(n), table.q_part_f64(n)),
            ("free_part", table.free_part(n), table.free_part_f64(n)),
        ] {
            rows.push(Row { quantity, n, exact: r.to_string(), value: v });
        }
        if let Some(q) = &q_exact {
            let r = p_threshold_coeff_ratio_exact(n, q)?;
            rows.push(Row { quantity: "p_threshold_ratio", n, value: to_f64(&r), exact: r.to_string() });
        }
        if n >= 3 {
            let r = line_threshold_coeff_ratio_exact(n)?;
            rows.push(Row { quantity: "line_threshold_ratio", n, value: to_f64(&r), exact: r.to_string() });
        }
    }
    let mut csv = String::from("quantity,n,exact,value\n");
    for r in &rows {
        csv.push_str(&format!("{},{},{},{:.16e}\n", r.quantity, r.n, r.exact, r.value));
    }
    let text = if c.csv.is_none() && c.json.is_none() { csv.clone() } else { String::new() };
    publish(c, &rows, Some(csv), &text)?;
    Ok(0)
}

fn run(cli: &Cli) -> Run<i32> {
    let c = &cli.common;
    if let Some(x) = c.x {
        if !(x > 0.0 && x <= FRAC_PI_2) && !matches!(cli.cmd, Cmd::Series { .. }) {
            return usage(format!("--x {x} is outside (0, pi/2]"));
        }
    }
    match &cli.cmd {
        Cmd::Eval { function } => run_eval(c, function),
        Cmd::Bound { family } => run_bound(c, family),
        Cmd::Constants { name } => run_constants(c, name.as_deref()),
        Cmd::Claims { action, claim } => run_claims(c, action, claim.as_deref()),
        Cmd::Verify { claim } => verify_and_publish(c, lookup(claim)?, &given_params(c)),
        Cmd::Probe { claim, boundary, deltas } => run_probe(c, claim, boundary.as_deref(), deltas),
        Cmd::Chain { name } => run_chain(c, name),
        Cmd::Invtrig { function, family } => run_invtrig(c, function, family),
        Cmd::Means { kind } => run_means(c, kind),
        Cmd::Series { n_max, kind, terms } => run_series(c, *n_max, kind.as_deref(), *terms),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}\n\nRun `cusa --help` for usage.");
            ExitCode::from(2)
        }
        Err(Fail::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
