//! Property tests for the coefficient field: field axioms on random
//! rational functions, and compatibility of specialization with the ring
//! operations at random non-pole points.

use proptest::prelude::*;

use dihedral::field::{ParamPoly, ParamRat};
use dihedral::scalar::Rat;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=10).prop_map(|(p, q)| Rat::new(p, q))
}

fn arb_poly() -> impl Strategy<Value = ParamPoly> {
    proptest::collection::vec(((0u32..=2, 0u32..=2), arb_rat()), 0..4).prop_map(|terms| {
        let mut p = ParamPoly::zero();
        for ((e0, e1), c) in terms {
            p.add_term(e0, e1, c);
        }
        p
    })
}

// Denominator factors drawn from the shapes that actually occur: kappa
// half-shifts, the parameter sum, and the gamma0 family.
fn arb_den() -> impl Strategy<Value = Vec<((i64, i64, Rat), u32)>> {
    let form = prop_oneof![
        Just((1i64, 0i64, Rat::new(1, 2))),
        Just((0, 1, Rat::new(1, 2))),
        Just((1, 1, Rat::one())),
        Just((1, 1, Rat::from_int(2))),
        Just((2, 2, Rat::one())),
        Just((3, 3, Rat::from_int(2))),
    ];
    proptest::collection::vec((form, 1u32..=2), 0..3)
}

fn arb_param_rat() -> impl Strategy<Value = ParamRat> {
    (arb_poly(), arb_den()).prop_map(|(num, den)| ParamRat::from_num_den(num, den))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_commutes(x in arb_param_rat(), y in arb_param_rat()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
    }

    #[test]
    fn addition_associates(x in arb_param_rat(), y in arb_param_rat(), z in arb_param_rat()) {
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
    }

    #[test]
    fn multiplication_associates(x in arb_param_rat(), y in arb_param_rat(), z in arb_param_rat()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn distributivity(x in arb_param_rat(), y in arb_param_rat(), z in arb_param_rat()) {
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn additive_inverse(x in arb_param_rat()) {
        prop_assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn units(x in arb_param_rat()) {
        prop_assert_eq!(x.add(&ParamRat::zero()), x.clone());
        prop_assert_eq!(x.mul(&ParamRat::one()), x);
    }
}

proptest! {
    // 20 random evaluation points per generated pair of operands.
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn specialize_is_a_homomorphism(
        x in arb_param_rat(),
        y in arb_param_rat(),
        points in proptest::collection::vec((arb_rat(), arb_rat()), 20),
    ) {
        for (k0, k1) in points {
            let (Ok(xv), Ok(yv)) = (x.specialize(&k0, &k1), y.specialize(&k0, &k1)) else {
                // the point lies on a pole of one operand; skip it
                continue;
            };
            // reduction only removes denominator factors, so sums and
            // products specialize wherever both operands do
            let sv = x.add(&y).specialize(&k0, &k1).unwrap();
            prop_assert_eq!(sv, xv.clone() + yv.clone());
            let pv = x.mul(&y).specialize(&k0, &k1).unwrap();
            prop_assert_eq!(pv, xv * yv);
        }
    }
}
