//! End-to-end flow: family definition, verification, witness polynomial,
//! normalization and Kamke representations of the witness values.

use num_bigint::BigInt;
use proptest::prelude::*;
use trw_core::families::{build_witness, find_family, parse_family, registry, verify_range};
use trw_core::intpoly::trace_power;
use trw_core::waring::{kamke_scan, normalize_poly};

#[test]
fn witness_feeds_kamke() {
    let fam = parse_family(
        "# real quadratic units\nname: mruv\nparams: a\npoly: x^2 - 2*a*x - 1\nrange a: -10..10\n",
    )
    .unwrap();
    let report = verify_range(&fam, None).unwrap();
    assert_eq!((report.instances, report.passed), (21, 21));

    let w = build_witness(&fam, 1).unwrap();
    let f = w.witness.to_univariate().unwrap();
    assert_eq!(f.to_string(), "4*x^2 + 2");

    let n = normalize_poly(&f, 0).unwrap();
    assert_eq!((n.shift, n.negated), (BigInt::from(0), false));
    let scan = kamke_scan(&n.poly, 500, 12).unwrap();
    assert!(scan.gaps.is_empty());
    for row in &scan.rows {
        let rep = row.representation.as_ref().unwrap();
        let total: BigInt = rep.terms.iter().map(|&a| n.poly.eval(&a.into())).sum::<BigInt>() + rep.s2;
        assert_eq!(total, BigInt::from(row.m));
    }
}

#[test]
fn sextic_witness_has_expected_shape() {
    let fam = find_family("gras_sextic").unwrap();
    let w = build_witness(&fam, 2).unwrap();
    assert_eq!(w.k, 1);
    assert_eq!(w.exponent, 4);
    assert_eq!(w.witness.total_degree(), Some(4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn witness_values_are_power_sums(idx in 0usize..6, a in -40i64..40, n in 1usize..4) {
        let fam = &registry()[idx];
        let w = build_witness(fam, n).unwrap();
        let f = fam.at(a).unwrap();
        prop_assert_eq!(
            w.witness.eval_values(&[BigInt::from(a)]),
            trace_power(&f, w.exponent as u32).unwrap()
        );
    }
}
