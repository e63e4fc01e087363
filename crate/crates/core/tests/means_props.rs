mod common;

use proptest::prelude::*;

use cusa::bounds::cusa_mean_kq;
use cusa::means::{mean, sb_bound_kq, schwab_borchardt, MeanKind};
use cusa::numeric::ulp_distance;

#[test]
fn identities_and_axioms() {
    common::means_identities().unwrap();
}

#[test]
fn sb_bound_is_scaled_family() {
    let mut r = common::rng(81);
    for _ in 0..500 {
        use rand::Rng;
        let b = r.gen_range(0.1..10.0);
        let a = b * r.gen_range(0.0..1.0);
        let (k, q) = (2.0, r.gen_range(-2.0..2.0));
        let got = sb_bound_kq(a, b, k, q).unwrap();
        let want = b * cusa_mean_kq(a / b, k, q).unwrap();
        assert!(ulp_distance(got, want) <= 2);
    }
}

#[test]
fn equal_arguments_and_errors() {
    for kind in [MeanKind::SbGa, MeanKind::SbAq, MeanKind::SbGq] {
        assert_eq!(mean(kind, 2.5, 2.5).unwrap(), 2.5);
        assert!(mean(kind, -1.0, 2.0).is_err());
    }
    assert_eq!(schwab_borchardt(3.0, 3.0).unwrap(), 3.0);
}

proptest! {
    #[test]
    fn means_are_symmetric_and_ordered(a in 0.01f64..100.0, b in 0.01f64..100.0) {
        let g = mean(MeanKind::Geometric, a, b).unwrap();
        let p = mean(MeanKind::SbGa, a, b).unwrap();
        let am = mean(MeanKind::Arithmetic, a, b).unwrap();
        let t = mean(MeanKind::SbAq, a, b).unwrap();
        let q = mean(MeanKind::Quadratic, a, b).unwrap();
        let slack = 1e-15 * q;
        prop_assert!(g <= p + slack && p <= am + slack && am <= t + slack && t <= q + slack);
        prop_assert_eq!(schwab_borchardt(a, b).unwrap(), schwab_borchardt(a, b).unwrap());
    }

    #[test]
    fn homogeneous(a in 0.01f64..100.0, b in 0.01f64..100.0, lambda in 0.1f64..10.0) {
        for kind in [MeanKind::SbGa, MeanKind::SbAq, MeanKind::SbGq] {
            let v = mean(kind, a, b).unwrap();
            let w = mean(kind, lambda * a, lambda * b).unwrap();
            prop_assert!((w - lambda * v).abs() <= 1e-14 * w, "{:?}", kind);
        }
    }
}
