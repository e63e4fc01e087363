mod common;

use cusa::claims::{catalog, lookup, Params};
use cusa::error::Error;
use cusa::output::to_json;
use cusa::verifier::{probe_sharpness, recheck, verify, verify_chain, Report, SampleSpec, Status};

use common::params;

#[test]
fn every_claim_holds() {
    common::claim_suite().unwrap();
}

#[test]
fn sharp_boundaries_are_tight() {
    common::sharpness_probes().unwrap();
}

#[test]
fn expansion_matches_direct_evaluation() {
    common::expansion_cross_check().unwrap();
}

#[test]
fn every_boundary_fails_just_past_it() {
    let spec = SampleSpec { grid_points: 2048, random_points: 1024, ..SampleSpec::default() };
    for claim in catalog() {
        for b in &claim.sharp {
            let r = probe_sharpness(claim.id, &Params::new(), b.param, &[0.05], &spec).unwrap();
            assert_eq!(r[0].report.status, Status::Pass, "{} at its {} boundary", claim.id, b.param);
            assert_eq!(r[1].report.status, Status::Fail, "{} past its {} boundary", claim.id, b.param);
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let spec = SampleSpec { seed: 7, ..SampleSpec::default() };
    let m = params(&[("q", 1.1)]);
    let a = verify("C-MT5b", &m, &spec).unwrap();
    assert_eq!(a, verify("C-MT5b", &m, &spec).unwrap());
    assert_eq!(to_json(&a), to_json(&verify("C-MT5b", &m, &spec).unwrap()));
    assert_eq!(a.status, Status::Fail);
    let claim = lookup("C-MT5b").unwrap();
    for v in &a.violations {
        assert!(recheck(claim, &m, v.point) < -spec.inconclusive_margin);
        assert!(v.lhs > v.rhs);
    }
    let other = verify("C-MT5b", &m, &SampleSpec { seed: 8, ..spec }).unwrap();
    assert_eq!(other.status, Status::Fail);
}

#[test]
fn report_json_round_trips() {
    let r = verify("C-MT5b", &params(&[("q", 1.1)]), &SampleSpec::default()).unwrap();
    let back: Report = serde_json::from_str(&to_json(&r)).unwrap();
    assert_eq!(back, r);
}

#[test]
fn tiny_margins_are_inconclusive() {
    // a huge threshold leaves nothing resolved
    let spec = SampleSpec { inconclusive_margin: 10.0, ..SampleSpec::default() };
    let r = verify("C-MC", &Params::new(), &spec).unwrap();
    assert_eq!(r.status, Status::Inconclusive);
    assert_eq!(r.min_margin, 0.0);
    assert_eq!(r.inconclusive_count, r.samples_evaluated);
    assert_eq!(r.status.exit_code(), 3);
}

#[test]
fn chains_hold() {
    for name in cusa::claims::CHAIN_NAMES {
        let r = verify_chain(name, &SampleSpec::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "chain {name}");
    }
    assert!(verify_chain("nope", &SampleSpec::default()).is_err());
}

#[test]
fn usage_errors() {
    let spec = SampleSpec::default();
    assert!(matches!(verify("C-NOPE", &Params::new(), &spec), Err(Error::UnknownClaim(_))));
    assert!(matches!(verify("C-MC", &params(&[("p", 1.0)]), &spec), Err(Error::UnexpectedParam(_))));
    assert!(matches!(
        verify("C-MC", &Params::new(), &SampleSpec { endpoint_gap: 0.0, ..spec }),
        Err(Error::SampleSpec(_))
    ));
    assert!(probe_sharpness("C-MC", &Params::new(), "q", &[0.01], &spec).is_err());
}
