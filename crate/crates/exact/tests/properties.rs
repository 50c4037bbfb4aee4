use corner_exact::{GaussianRational, Monomial, Polynomial, Rational, VarLabel};
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (any::<i32>(), 1i64..2000).prop_map(|(n, d)| Rational::new(n as i64, d))
}

fn arb_scalar() -> impl Strategy<Value = GaussianRational> {
    (arb_rational(), arb_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn arb_var() -> impl Strategy<Value = VarLabel> {
    let idx = -3i64..4;
    prop_oneof![
        (idx.clone(), idx.clone()).prop_map(|(m, n)| VarLabel::j(m, n)),
        (idx.clone(), idx.clone()).prop_map(|(m, n)| VarLabel::k(m, n)),
        (idx.clone(), idx.clone()).prop_map(|(m, n)| VarLabel::p(m, n)),
        (idx.clone(), idx.clone())
            .prop_map(|(m, n)| VarLabel::v(m, n).unwrap_or(VarLabel::V(1, 1))),
        (idx.clone(), idx.clone()).prop_map(|(m, n)| VarLabel::x(m, n)),
        idx.clone().prop_map(VarLabel::wx),
        (1i64..4).prop_map(|j| VarLabel::wy(j).unwrap()),
    ]
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((arb_var(), 1u32..4), 0..4).prop_map(Monomial::from_pairs)
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((arb_monomial(), arb_scalar()), 0..6).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scalar_field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
        }
        // conj(z)·z is real
        prop_assert!((&a.conj() * &a).im.is_zero());
    }

    #[test]
    fn poly_mul_commutative_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.mul(&r)), p.mul(&q).mul(&r));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn partials_commute(p in arb_poly(), u in arb_var(), w in arb_var()) {
        prop_assert_eq!(p.diff(&u).diff(&w), p.diff(&w).diff(&u));
    }

    #[test]
    fn leibniz_rule(p in arb_poly(), q in arb_poly(), u in arb_var()) {
        let lhs = p.mul(&q).diff(&u);
        let rhs = p.diff(&u).mul(&q).add(&p.mul(&q.diff(&u)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_roundtrip_bit_exact(p in arb_poly()) {
        let encoded = serde_json::to_string(&p).unwrap();
        let decoded: Polynomial = serde_json::from_str(&encoded).unwrap();
        prop_assert_eq!(&decoded, &p);
        // canonical encoding: re-serialization is byte-identical
        let again = serde_json::to_string(&decoded).unwrap();
        prop_assert_eq!(encoded, again);
    }

    #[test]
    fn scalar_json_roundtrip(a in arb_scalar()) {
        let encoded = serde_json::to_string(&a).unwrap();
        let decoded: GaussianRational = serde_json::from_str(&encoded).unwrap();
        prop_assert_eq!(decoded, a);
    }

    #[test]
    fn rational_matches_bigint_oracle(a in any::<i64>(), b in 1i64.., c in any::<i64>(), d in 1i64..) {
        // exercises overflow promotion against num's BigRational
        let x = Rational::new(a, b);
        let y = Rational::new(c, d);
        let sum = x.add(&y);
        let prod = x.mul(&y);
        prop_assert_eq!(sum.to_big(), x.to_big() + y.to_big());
        prop_assert_eq!(prod.to_big(), x.to_big() * y.to_big());
    }
}
