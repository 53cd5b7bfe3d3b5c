use proptest::prelude::*;

use triality::chevalley::{oplus_gen, roots, spin_gen, Root};
use triality::clifford::{Blade, CliffordElement};
use triality::exterior::{phi_apply, psi_apply, psi_inverse};
use triality::quadtriple::{chi, is_orthogonal, is_proper, semitrace, sigma_apply};
use triality::triality::{theta_minus_table, theta_plus_table};
use triality::triples::{word_map, word_matrix};
use triality::{Matrix, Rational};

type C = CliffordElement<Rational>;

fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=4, 1i64..=3, any::<bool>()).prop_map(|(n, d, neg)| Rational::new(if neg { -n } else { n }, d))
}

fn element(rank: usize, even: bool) -> impl Strategy<Value = C> {
    let mono = (0u16..(1u16 << (2 * rank)), rational());
    prop::collection::vec(mono, 0..5).prop_map(move |terms| {
        terms.into_iter().fold(C::zero(rank), |acc, (m, c)| {
            if even && m.count_ones() % 2 == 1 {
                acc
            } else {
                acc.add(&C::monomial(rank, Blade(m), c))
            }
        })
    })
}

fn word() -> impl Strategy<Value = Vec<(Root, Rational)>> {
    prop::collection::vec((0usize..24, nonzero_rational()), 1..4)
        .prop_map(|w| w.into_iter().map(|(i, t)| (roots(4)[i], t)).collect())
}

fn spin_of(w: &[(Root, Rational)]) -> C {
    w.iter().fold(C::one(4), |acc, (r, t)| acc.mul(&spin_gen(r, t, 4).unwrap()))
}

fn matrix8() -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(rational(), 64).prop_map(|v| Matrix::from_fn(8, 8, |i, j| v[i * 8 + j].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn clifford_product_is_associative(x in element(4, false), y in element(4, false), z in element(4, false)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn reversal_is_an_anti_involution(x in element(3, false), y in element(3, false)) {
        prop_assert_eq!(x.mul(&y).reverse(), y.reverse().mul(&x.reverse()));
        prop_assert_eq!(x.reverse().reverse(), x);
    }

    #[test]
    fn phi_is_multiplicative(x in element(4, false), y in element(4, false)) {
        prop_assert_eq!(phi_apply(&x.mul(&y)), phi_apply(&x).mul(&phi_apply(&y)));
    }

    #[test]
    fn psi_is_multiplicative_and_invertible(x in element(4, true), y in element(4, true)) {
        let (a, b) = psi_apply(&x.mul(&y)).unwrap();
        let (xa, xb) = psi_apply(&x).unwrap();
        let (ya, yb) = psi_apply(&y).unwrap();
        prop_assert_eq!(a, xa.mul(&ya));
        prop_assert_eq!(b, xb.mul(&yb));
        prop_assert_eq!(psi_inverse(&xa, &xb), x);
    }

    #[test]
    fn chi_lands_in_proper_orthogonal_group(w1 in word(), w2 in word()) {
        let (a, b) = (spin_of(&w1), spin_of(&w2));
        let m = chi(&a).unwrap();
        prop_assert!(is_orthogonal(&m));
        prop_assert!(is_proper(&m).unwrap());
        prop_assert_eq!(chi(&a.mul(&b)).unwrap(), m.mul(&chi(&b).unwrap()));
        prop_assert_eq!(m, word_matrix(&w1));
    }

    #[test]
    fn semitrace_of_symmetrised_matrix_is_trace(a in matrix8()) {
        prop_assert_eq!(semitrace(&a.add(&sigma_apply(&a))).unwrap(), a.trace());
        prop_assert_eq!(sigma_apply(&sigma_apply(&a)), a);
    }

    #[test]
    fn theta_plus_cubes_to_identity_on_words(w in word()) {
        let tp = theta_plus_table();
        let back = word_map(&word_map(&word_map(&w, &tp), &tp), &tp);
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(word_map(&word_map(&w, &tp), &tp), word_map(&w, &theta_minus_table()));
    }

    #[test]
    fn generators_are_additive(i in 0usize..24, s in rational(), t in rational()) {
        let r = roots(4)[i];
        let sum = &s + &t;
        prop_assert_eq!(spin_gen(&r, &s, 4).unwrap().mul(&spin_gen(&r, &t, 4).unwrap()), spin_gen(&r, &sum, 4).unwrap());
        prop_assert_eq!(oplus_gen(&r, &s, 4).unwrap().mul(&oplus_gen(&r, &t, 4).unwrap()), oplus_gen(&r, &sum, 4).unwrap());
    }
}
