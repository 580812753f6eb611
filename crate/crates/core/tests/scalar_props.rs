use std::collections::BTreeMap;

use num_rational::BigRational;
use proptest::prelude::*;
use sl2q::scalars::{parse_scalar, FieldSpec, Scalar};

fn laurent(field: FieldSpec) -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..4, -4i64..5, 1i64..4), 0..4).prop_map(move |terms| {
        let mut m = BTreeMap::new();
        for (e, a, b) in terms {
            *m.entry(e).or_insert_with(|| BigRational::from_integer(0.into())) += BigRational::new(a.into(), b.into());
        }
        Scalar::from_laurent_map(&m, field)
    })
}

fn ratio(field: FieldSpec) -> impl Strategy<Value = Scalar> {
    (laurent(field), laurent(field)).prop_map(|(a, b)| if b.is_zero() { a } else { a.div(&b).unwrap() })
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Generic), (2u32..10).prop_map(FieldSpec::RootOfUnity)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms((a, b, c) in fields().prop_flat_map(|f| (ratio(f), ratio(f), ratio(f)))) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn json_round_trip(a in fields().prop_flat_map(ratio)) {
        let f = a.field();
        prop_assert_eq!(Scalar::from_json(&a.to_json(), f).unwrap(), a);
    }

    #[test]
    fn laurent_display_parses_back(a in fields().prop_flat_map(laurent)) {
        prop_assert_eq!(parse_scalar(&a.to_string(), a.field()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratio(FieldSpec::Generic), b in ratio(FieldSpec::Generic)) {
        let q = 1.37;
        if let (Ok(x), Ok(y), Ok(z)) = ((&a * &b).evaluate_at(q), a.evaluate_at(q), b.evaluate_at(q)) {
            prop_assert!((x - y * z).norm() <= 1e-9 * (1.0 + x.norm()));
        }
    }
}
