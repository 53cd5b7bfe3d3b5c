//! Exact scalars: rationals and Laurent polynomials over them.

mod poly;
mod rational;

pub use poly::{Monomial, Scalar};
pub use rational::Rational;

#[cfg(test)]
mod proptests {
    use std::collections::HashMap;

    use proptest::prelude::*;

    use super::*;
    use crate::ring::Ring;

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        let term = (-5i64..=5, 1i64..=3, -2i32..=2, -2i32..=2).prop_map(|(n, d, et, es)| {
            Scalar::monomial(
                Rational::new(n, d),
                Monomial::var("t", et).mul(&Monomial::var("s", es)),
            )
        });
        prop::collection::vec(term, 0..5)
            .prop_map(|ts| ts.iter().fold(Scalar::zero(), |a, b| a.plus(b)))
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(x in arb_scalar()) {
            let printed = x.to_string();
            let back: Scalar = printed.parse().unwrap();
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(back.to_string(), printed);
        }

        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.plus(&b), b.plus(&a));
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.minus(&a), Scalar::zero());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_scalar(), b in arb_scalar(),
                                        tn in 1i64..7, sn in -6i64..-1) {
            let mut vals = HashMap::new();
            vals.insert("t".to_string(), Rational::new(tn, 3));
            vals.insert("s".to_string(), Rational::new(sn, 2));
            let ea = a.eval(&vals).unwrap();
            let eb = b.eval(&vals).unwrap();
            prop_assert_eq!(a.times(&b).eval(&vals).unwrap(), &ea * &eb);
            prop_assert_eq!(a.plus(&b).eval(&vals).unwrap(), &ea + &eb);
        }
    }
}
