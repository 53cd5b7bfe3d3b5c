//! Verification suites for the foundational modules and the suite dispatcher.
//!
//! The `clifford` suite also covers the scalar ring and the quadratic-triple maps; the
//! `triality`, `octonion` and `triples` suites live next to their modules.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chevalley::{
    commutator, generator, kernel_chi_enumerate, oplus_gen, oplus_h, oplus_w, roots, simple_system,
    spin_gen, spin_h, spin_w, structure_constant, zeta, Group, GroupElement, Root,
};
use crate::clifford::{center_of_even_basis, central_idempotent, vstar, v, Blade, CliffordElement, MAX_RANK};
use crate::error::{Error, Result};
use crate::exterior::{
    b_wedge, even_signed_basis, ext_basis, odd_signed_basis, phi_apply, phi_is_bijective, psi_apply,
    psi_inverse, ExtElement,
};
use crate::linalg;
use crate::matrix::Matrix;
use crate::quadtriple::{
    chi, even_auto_map, induced_clifford_auto, inner_rep, is_orthogonal, is_proper, is_spin, pgo_equal,
    semitrace, semitrace_with, sigma_apply, SemitraceWitness,
};
use crate::report::CheckResult;
use crate::ring::Ring;
use crate::scalar::{Rational, Scalar};
use crate::triality::{improper_phi, theta_plus_via_psi};
use crate::triples::inner_auto_map;

/// Names accepted by [`run_suite`], in run order.
pub const SUITES: [&str; 6] = ["clifford", "exterior", "chevalley", "triality", "octonion", "triples"];

type C = CliffordElement<Rational>;
type CS = CliffordElement<Scalar>;

fn var(name: &str) -> Scalar {
    Scalar::var(name)
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn root(s: &str) -> Root {
    s.parse().expect("literal root")
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=2);
    Rational::new(if num == 0 { 1 } else { num }, den)
}

fn random_element(rng: &mut ChaCha8Rng, n: usize, terms: usize, even: bool) -> C {
    let mut x = C::zero(n);
    while x.num_terms() < terms {
        let mask: u16 = rng.gen_range(0..(1u32 << (2 * n))) as u16;
        if even && mask.count_ones() % 2 == 1 {
            continue;
        }
        x = x.add(&C::monomial(n, Blade(mask), small_rational(rng)));
    }
    x
}

fn random_matrix(rng: &mut ChaCha8Rng, d: usize) -> Matrix<Rational> {
    Matrix::from_fn(d, d, |_, _| {
        if rng.gen_bool(0.3) {
            small_rational(rng)
        } else {
            Rational::zero()
        }
    })
}

fn random_spin_word(rng: &mut ChaCha8Rng, len: usize) -> Vec<(Root, Rational)> {
    let rs = roots(4);
    (0..len).map(|_| (rs[rng.gen_range(0..rs.len())], small_rational(rng))).collect()
}

fn spin_product(word: &[(Root, Rational)]) -> Result<C> {
    word.iter().try_fold(C::one(4), |acc, (r, t)| Ok(acc.mul(&spin_gen(r, t, 4)?)))
}

fn oplus_product(word: &[(Root, Rational)]) -> Result<Matrix<Rational>> {
    word.iter().try_fold(Matrix::identity(8), |acc, (r, t)| Ok(acc.mul(&oplus_gen(r, t, 4)?)))
}

fn check(suite: &str, id: impl Into<String>, reference: &str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    CheckResult::from_result(suite, id, f(), reference)
}

// ---------------------------------------------------------------- clifford

const CLIFFORD: &str = "clifford";

fn scalar_checks() -> Vec<CheckResult> {
    let t = var("t");
    let s = var("s");
    let one = Scalar::one();
    let tinv = t.try_inverse().expect("monomial unit");
    let mut out = vec![
        check(CLIFFORD, "scalar.add.examples", "scalar-ring", || {
            let a = t.plus(&t.negate()).is_zero();
            let b = one.plus(&t).plus(&one.minus(&t)) == Scalar::int(2);
            let c = tinv.plus(&t).num_terms() == 2;
            Ok((a && b && c, "t-t=0, (1+t)+(1-t)=2, t^-1+t has two terms".into()))
        }),
        check(CLIFFORD, "scalar.mul.examples", "scalar-ring", || {
            let a = t.times(&tinv).is_one();
            let b = one.plus(&t).times(&one.minus(&t)) == one.minus(&t.times(&t));
            let c = t.scale(&Rational::new(2, 3)).times(&s.scale(&q(3))) == s.times(&t).scale(&q(2));
            Ok((a && b && c, "t*t^-1=1, (1+t)(1-t)=1-t^2, (2/3)t*3s=2st".into()))
        }),
    ];
    out.push(check(CLIFFORD, "scalar.eval.examples", "scalar-ring", || {
        let mut vals = HashMap::new();
        vals.insert("t".to_string(), Rational::new(1, 2));
        let a = t.times(&t).plus(&tinv).eval(&vals)? == Rational::new(9, 4);
        let missing = matches!(s.eval(&vals), Err(Error::MissingVariable(_)));
        vals.insert("t".to_string(), Rational::zero());
        let zero = matches!(tinv.eval(&vals), Err(Error::ZeroAtNegativeExponent(_)));
        Ok((a && missing && zero, "t^2+t^-1 at 1/2 is 9/4; missing and zero-at-pole errors raised".into()))
    }));
    out.push(check(CLIFFORD, "scalar.print_parse_roundtrip", "scalar-ring", || {
        let samples = [
            t.plus(&s.times(&tinv)).scale(&Rational::new(-3, 5)),
            one.minus(&t.times(&t).times(&t)),
            tinv.times(&tinv).plus(&Scalar::int(7)),
        ];
        let ok = samples.iter().all(|x| x.to_string().parse::<Scalar>().as_ref() == Ok(x));
        Ok((ok, format!("{} samples", samples.len())))
    }));
    out
}

fn relation_checks(n: usize) -> CheckResult {
    check(CLIFFORD, format!("clifford.relations.rank={n}"), "clifford-relations", || {
        let l = |k: usize| C::letter(n, k);
        let one = C::one(n);
        let mut bad = Vec::new();
        for i in 1..=n {
            for (a, b) in [(v(n, i), v(n, i)), (vstar(n, i), vstar(n, i))] {
                if !l(a).mul(&l(b)).is_zero() {
                    bad.push(format!("square of letter {a}"));
                }
            }
            if l(v(n, i)).mul(&l(vstar(n, i))).add(&l(vstar(n, i)).mul(&l(v(n, i)))) != one {
                bad.push(format!("v{i}w{i}+w{i}v{i}"));
            }
            for j in 1..=n {
                if i == j {
                    continue;
                }
                for (a, b) in [(v(n, i), v(n, j)), (v(n, i), vstar(n, j)), (vstar(n, i), vstar(n, j))] {
                    if !l(a).mul(&l(b)).add(&l(b).mul(&l(a))).is_zero() {
                        bad.push(format!("anticommutator of letters {a},{b}"));
                    }
                }
            }
        }
        Ok((bad.is_empty(), if bad.is_empty() { format!("all relations hold for n={n}") } else { bad.join("; ") }))
    })
}

fn clifford_element_checks(seed: u64, n: usize) -> Vec<CheckResult> {
    let t = var("t");
    let s = var("s");
    let l = |k: usize| CS::letter(4, k);
    let mut out = vec![relation_checks(n)];
    out.push(check(CLIFFORD, "clifford.mul.examples", "clifford-relations", || {
        let a = l(v(4, 1)).mul(&l(v(4, 1))).is_zero();
        let b = l(v(4, 1)).mul(&l(vstar(4, 1))) == CS::one(4).sub(&l(vstar(4, 1)).mul(&l(v(4, 1))));
        let m = CS::word(4, &[v(4, 1), vstar(4, 2)]);
        let x = CS::one(4).add(&m.scale(&t));
        let y = CS::one(4).add(&m.scale(&s));
        let c = x.mul(&y) == CS::one(4).add(&m.scale(&t.plus(&s)));
        Ok((a && b && c, "v1v1=0, v1w1=1-w1v1, (1+t v1w2)(1+s v1w2)=1+(t+s)v1w2".into()))
    }));
    out.push(check(CLIFFORD, "clifford.reverse.examples", "canonical-involution", || {
        let a = CS::one(4).reverse().is_one();
        let v12 = CS::word(4, &[v(4, 1), v(4, 2)]);
        let b = v12.reverse() == v12.neg();
        let v11 = CS::word(4, &[v(4, 1), vstar(4, 1)]);
        let c = v11.reverse() == CS::one(4).sub(&v11);
        Ok((a && b && c, "rev(1)=1, rev(v1v2)=-v1v2, rev(v1w1)=1-v1w1".into()))
    }));
    out.push(check(CLIFFORD, "clifford.grade_projection.examples", "clifford-grading", || {
        let v1 = l(v(4, 1));
        let a = CS::one(4).add(&v1).even_part().is_one();
        let v12 = CS::word(4, &[v(4, 1), v(4, 2)]);
        let b = v12.sub(&v12.even_part()).is_zero();
        let top = CS::word(4, &[0, 1, 2, 3]).scale(&t);
        let c = top.add(&v1).even_part() == top;
        Ok((a && b && c, "even(1+v1)=1, odd(v1v2)=0, even(t v1v2v3v4+v1)=t v1v2v3v4".into()))
    }));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc1);
    let samples: Vec<(C, C, C)> = (0..12)
        .map(|_| {
            (
                random_element(&mut rng, n, 3, false),
                random_element(&mut rng, n, 3, false),
                random_element(&mut rng, n, 3, false),
            )
        })
        .collect();
    out.push(check(CLIFFORD, format!("clifford.associativity.rank={n}"), "clifford-relations", || {
        let ok = samples.iter().all(|(x, y, z)| x.mul(y).mul(z) == x.mul(&y.mul(z)));
        Ok((ok, format!("{} random triples", samples.len())))
    }));
    out.push(check(CLIFFORD, format!("clifford.reverse.anti_homomorphism.rank={n}"), "canonical-involution", || {
        let ok = samples
            .iter()
            .all(|(x, y, _)| x.mul(y).reverse() == y.reverse().mul(&x.reverse()) && x.reverse().reverse() == *x);
        Ok((ok, format!("{} random pairs; reversal is an involution", samples.len())))
    }));
    out.push(check(CLIFFORD, format!("clifford.grading.rank={n}"), "clifford-grading", || {
        let mut ok = true;
        for (x, y, _) in &samples {
            for (bx, _) in x.terms() {
                for (by, _) in y.terms() {
                    let xb = C::monomial(n, *bx, Rational::one());
                    let yb = C::monomial(n, *by, Rational::one());
                    let parity = (bx.len() + by.len()) % 2;
                    ok &= xb.mul(&yb).terms().all(|(b, _)| b.len() % 2 == parity);
                }
            }
        }
        Ok((ok, "parity of products of homogeneous monomials".into()))
    }));
    out.push(check(CLIFFORD, "clifford.unitary_inverse.examples", "canonical-involution", || {
        let a = CS::one(4).unitary_inverse()?.is_one();
        let x = spin_gen(&root("e1-e2"), &t, 4)?;
        let m = CS::word(4, &[v(4, 1), vstar(4, 2)]);
        let b = x.unitary_inverse()? == CS::one(4).sub(&m.scale(&t));
        let c = CS::one(4).add(&l(v(4, 1))).unitary_inverse() == Err(Error::NotUnitary);
        Ok((a && b && c, "inv(1)=1, inv(X[e1-e2](t))=1-t v1w2, 1+v1 is not unitary".into()))
    }));
    out.extend(center_checks(n));
    out
}

fn center_checks(n: usize) -> Vec<CheckResult> {
    let mut out = vec![check(CLIFFORD, format!("clifford.center.dimension.rank={n}"), "even-center", || {
        let dim = center_of_even_basis(n).len();
        Ok((dim == 2, format!("center of the even part has dimension {dim}")))
    })];
    out.push(check(CLIFFORD, "clifford.center.idempotent", "even-center", || {
        let z = psi_inverse(&Matrix::<Rational>::identity(8), &Matrix::zeros(8, 8));
        let one = C::one(4);
        let w = one.sub(&z);
        let idem = z.mul(&z) == z && w.mul(&w) == w;
        let central = (0..8).all(|a| {
            (a + 1..8).all(|b| {
                let g = C::word(4, &[a, b]);
                g.mul(&z) == z.mul(&g)
            })
        });
        let (p, q) = psi_apply(&z)?;
        let image = p.is_identity() && q.is_zero();
        let c = central_idempotent(4)?;
        let solved = c == z || c == w;
        Ok((
            idem && central && image && solved,
            format!("z^2=z: {idem}, central: {central}, psi(z)=(I,0): {image}, matches commutant solution: {solved}"),
        ))
    }));
    out
}

fn quadtriple_checks(seed: u64) -> Vec<CheckResult> {
    let t = var("t");
    let phi = improper_phi::<Rational>();
    let mut out = Vec::new();
    out.push(check(CLIFFORD, "quadtriple.sigma.examples", "adjoint-involution", || {
        let i: Matrix<Rational> = Matrix::identity(8);
        let a = sigma_apply(&i) == i;
        let b = sigma_apply(&Matrix::<Rational>::unit(8, 0, 1)) == Matrix::unit(8, 6, 7);
        let mut c = true;
        for r in roots(4) {
            c &= sigma_apply(&oplus_gen(&r, &t, 4)?) == oplus_gen(&r, &t.negate(), 4)?;
        }
        Ok((a && b && c, "sigma(I)=I, sigma(E12)=E78, sigma(x_a(t))=x_a(-t) for 24 roots".into()))
    }));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51);
    let mats: Vec<Matrix<Rational>> = (0..6).map(|_| random_matrix(&mut rng, 8)).collect();
    out.push(check(CLIFFORD, "quadtriple.sigma.anti_automorphism", "adjoint-involution", || {
        let ok = mats.windows(2).all(|w| {
            sigma_apply(&w[0].mul(&w[1])) == sigma_apply(&w[1]).mul(&sigma_apply(&w[0]))
                && sigma_apply(&sigma_apply(&w[0])) == w[0]
        });
        Ok((ok, format!("{} random pairs", mats.len() - 1)))
    }));
    out.push(check(CLIFFORD, "quadtriple.semitrace", "semitrace", || {
        let i: Matrix<Rational> = Matrix::identity(8);
        let a = semitrace(&i)? == q(4);
        let b = semitrace(&Matrix::<Rational>::zeros(8, 8))?.is_zero();
        let mut c = true;
        for m in &mats {
            let sym = m.add(&sigma_apply(m));
            c &= semitrace(&sym)? == m.trace() && semitrace_with(&sym, SemitraceWitness::Half)? == m.trace();
        }
        let d = semitrace(&Matrix::<Rational>::unit(8, 0, 1)).is_err();
        Ok((a && b && c && d, "f(I)=4, f(0)=0, f(a+sigma a)=tr a for both witnesses, nonsymmetric input rejected".into()))
    }));
    out.push(check(CLIFFORD, "quadtriple.orthogonal_and_proper", "proper-isometries", || {
        let mut gens = true;
        for r in roots(4) {
            let x = oplus_gen(&r, &t, 4)?;
            gens &= is_orthogonal(&x) && is_proper(&x)?;
        }
        let two = !is_orthogonal(&Matrix::<Rational>::identity(8).scale(&q(2)));
        let id = is_proper(&Matrix::<Rational>::identity(8))?;
        let phi_ok = is_orthogonal(&phi) && !is_proper(&phi)?;
        Ok((
            gens && two && id && phi_ok,
            format!("x_a(t) orthogonal and proper: {gens}; 2I rejected: {two}; phi orthogonal, improper: {phi_ok}"),
        ))
    }));
    out.push(check(CLIFFORD, "quadtriple.induced_auto", "clifford-functor", || {
        let id = even_auto_map(&Matrix::<Rational>::identity(8)).is_identity();
        let x = spin_gen(&root("e1-e3"), &t, 4)?;
        let img = induced_clifford_auto(&phi.to_scalar(), &x)?;
        let ex = img == spin_gen(&root("-e1-e3"), &t, 4)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1a);
        let g = oplus_product(&random_spin_word(&mut rng, 3))?;
        let mut mult = true;
        for _ in 0..4 {
            let a = random_element(&mut rng, 4, 3, true);
            let b = random_element(&mut rng, 4, 3, true);
            let lhs = induced_clifford_auto(&g, &a.mul(&b))?;
            mult &= lhs == induced_clifford_auto(&g, &a)?.mul(&induced_clifford_auto(&g, &b)?);
        }
        Ok((id && ex && mult, format!("C(I)=id: {id}; C(phi)X[e1-e3](t)=X[-e1-e3](t): {ex}; multiplicative: {mult}")))
    }));
    out.push(check(CLIFFORD, "quadtriple.chi.examples", "vector-representation", || {
        let a = chi(&CS::one(4))?.is_identity();
        let b = chi(&spin_gen(&root("e1-e2"), &t, 4)?)? == oplus_gen(&root("e1-e2"), &t, 4)?;
        let odd = !is_spin(&CS::letter(4, v(4, 1)));
        let plus = is_spin(&CS::one(4).add(&CS::word(4, &[v(4, 1), v(4, 2)])));
        Ok((a && b && odd && plus, "chi(1)=I, chi(X[e1-e2](t))=x[e1-e2](t), v1 not spin, 1+v1v2 spin".into()))
    }));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc4);
    let words: Vec<Vec<(Root, Rational)>> = (0..4).map(|_| random_spin_word(&mut rng, 3)).collect();
    out.push(check(CLIFFORD, "quadtriple.chi.homomorphism", "vector-representation", || {
        let mut ok = true;
        for w in words.windows(2) {
            let (a, b) = (spin_product(&w[0])?, spin_product(&w[1])?);
            let (ca, cb) = (chi(&a)?, chi(&b)?);
            ok &= chi(&a.mul(&b))? == ca.mul(&cb) && is_orthogonal(&ca) && is_proper(&ca)?;
            ok &= ca == oplus_product(&w[0])?;
        }
        Ok((ok, format!("{} sampled spin products", words.len())))
    }));
    out.push(check(CLIFFORD, "quadtriple.chi.conjugation", "clifford-actions", || {
        let mut ok = true;
        for w in &words {
            let a = spin_product(w)?;
            let auto = even_auto_map(&chi(&a)?);
            for (j, b) in crate::clifford::even_basis(4).iter().enumerate().step_by(9) {
                let m = C::monomial(4, *b, Rational::one());
                let expected = a.conjugate(&m)?;
                let got = C::from_even_coords(4, &auto.apply(&[(j, Rational::one())]));
                ok &= got == expected;
            }
        }
        Ok((ok, "C(chi(a)) agrees with conjugation by a on sampled monomials".into()))
    }));
    out.push(check(CLIFFORD, "quadtriple.inner_rep.examples", "inner-representative", || {
        let i: Matrix<Rational> = Matrix::identity(8);
        let a = inner_rep(8, &inner_auto_map(&i, &i))?.is_identity();
        let x = oplus_gen(&root("e1-e2"), &q(1), 4)?;
        let xinv = oplus_gen(&root("e1-e2"), &q(-1), 4)?;
        let b = pgo_equal(&inner_rep(8, &inner_auto_map(&x, &xinv))?, &x);
        let c = pgo_equal(
            &theta_plus_via_psi(&oplus_gen(&root("e1-e2"), &t, 4)?)?,
            &oplus_gen(&root("e3+e4"), &t.negate(), 4)?,
        );
        Ok((a && b && c, "identity, own representative, first factor of the conjugated x[e1-e2](t)".into()))
    }));
    out.push(check(CLIFFORD, "quadtriple.pgo_equal.examples", "projective-equality", || {
        let x = oplus_gen(&root("e1-e3"), &t, 4)?;
        let a = pgo_equal(&x, &x.neg());
        let b = !pgo_equal(&oplus_gen::<Rational>(&root("e1-e2"), &q(1), 4)?, &oplus_gen(&root("e1-e2"), &q(2), 4)?);
        let i: Matrix<Rational> = Matrix::identity(8);
        let c = pgo_equal(&i, &i.neg());
        Ok((a && b && c, "A~-A, x(1)!~x(2), I~-I".into()))
    }));
    out
}

pub fn verify_clifford(seed: u64, rank: usize) -> Vec<CheckResult> {
    let mut out = scalar_checks();
    out.extend(clifford_element_checks(seed, rank));
    if rank != 4 {
        out.push(relation_checks(4));
        out.extend(center_checks(4).into_iter().filter(|c| c.check_id.contains("rank=")));
    }
    out.extend(quadtriple_checks(seed));
    out
}

// ---------------------------------------------------------------- exterior

const EXTERIOR: &str = "exterior";

fn ext(set: u16, c: i64) -> ExtElement<Rational> {
    ExtElement::basis(4, set, q(c))
}

fn gram(basis: &[(u16, i8)]) -> Matrix<Rational> {
    Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        b_wedge(&ext(basis[i].0, basis[i].1 as i64), &ext(basis[j].0, basis[j].1 as i64))
    })
}

fn is_antidiagonal_identity(m: &Matrix<Rational>) -> bool {
    let d = m.rows();
    (0..d).all(|i| (0..d).all(|j| *m.get(i, j) == if i + j == d - 1 { q(1) } else { q(0) }))
}

pub fn verify_exterior(seed: u64) -> Vec<CheckResult> {
    let t = var("t");
    let l = |k: usize| C::letter(4, k);
    let mut out = Vec::new();
    out.push(check(EXTERIOR, "exterior.wedge.examples", "exterior-algebra", || {
        let a = ext(0b0001, 1).wedge(&ext(0b0001, 1)) == ExtElement::zero(4);
        let b = ext(0b0010, 1).wedge(&ext(0b0001, 1)) == ext(0b0011, -1);
        let c = ext(0b0011, 1).wedge(&ext(0b1100, 1)) == ext(0b1111, 1);
        Ok((a && b && c, "v1^v1=0, v2^v1=-v12, v12^v34=v1234".into()))
    }));
    out.push(check(EXTERIOR, "exterior.contraction.examples", "exterior-algebra", || {
        let v12 = ext(0b0011, 1);
        let a = v12.act(&l(vstar(4, 1))) == ext(0b0010, 1);
        let b = v12.act(&l(vstar(4, 2))) == ext(0b0001, -1);
        let c = ext(0b0010, 1).act(&l(vstar(4, 1))) == ExtElement::zero(4);
        Ok((a && b && c, "d_w1(v12)=v2, d_w2(v12)=-v1, d_w1(v2)=0".into()))
    }));
    out.push(check(EXTERIOR, "exterior.phi.letter_identities", "clifford-representation", || {
        let p1 = phi_apply(&l(v(4, 1)));
        let p1s = phi_apply(&l(vstar(4, 1)));
        let sq = p1.mul(&p1).is_zero();
        let leibniz = p1.mul(&p1s).add(&p1s.mul(&p1)).is_identity();
        Ok((sq && leibniz, "phi(v1)^2=0 and phi(v1)phi(w1)+phi(w1)phi(v1)=I".into()))
    }));
    out.push(check(EXTERIOR, "exterior.phi.v1_w2", "clifford-representation", || {
        let x = C::word(4, &[v(4, 1), vstar(4, 2)]);
        let set = |items: &[usize]| items.iter().fold(0u16, |m, i| m | (1 << (i - 1)));
        let expected = [
            (set(&[2, 3]), -1, set(&[1, 3]), -1),
            (set(&[2, 4]), 1, set(&[1, 4]), 1),
            (set(&[2, 3, 4]), -1, set(&[1, 3, 4]), -1),
            (set(&[2]), 1, set(&[1]), 1),
        ];
        let mut ok = true;
        for basis in [even_signed_basis(), odd_signed_basis()] {
            for (s, e) in basis {
                let img = ext(s, e as i64).act(&x);
                match expected.iter().find(|r| r.0 == s) {
                    Some(&(_, se, ts, te)) => ok &= se == e && img == ext(ts, te),
                    None => ok &= img == ExtElement::zero(4),
                }
            }
        }
        Ok((ok, "phi(v1w2) on the signed bases".into()))
    }));
    out.push(check(EXTERIOR, "exterior.phi.homomorphism_on_letters", "clifford-representation", || {
        let mut ok = true;
        for a in 0..8 {
            for b in 0..8 {
                ok &= phi_apply(&l(a).mul(&l(b))) == phi_apply(&l(a)).mul(&phi_apply(&l(b)));
            }
        }
        Ok((ok, "64 letter products at n=4".into()))
    }));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xe7);
    let pairs: Vec<(C, C)> =
        (0..6).map(|_| (random_element(&mut rng, 4, 4, false), random_element(&mut rng, 4, 4, false))).collect();
    out.push(check(EXTERIOR, "exterior.phi.homomorphism_sampled", "clifford-representation", || {
        let ok = pairs.iter().all(|(x, y)| phi_apply(&x.mul(y)) == phi_apply(x).mul(&phi_apply(y)));
        Ok((ok, format!("{} random pairs", pairs.len())))
    }));
    out.push(check(EXTERIOR, "exterior.phi.bijective", "clifford-representation", || {
        let ok = phi_is_bijective(4);
        Ok((ok, format!("256x256 coefficient matrix has full rank: {ok}")))
    }));
    for (name, basis) in [("even", even_signed_basis()), ("odd", odd_signed_basis())] {
        let g = gram(&basis);
        let id = format!("exterior.b_wedge.gram_{name}");
        if is_antidiagonal_identity(&g) {
            out.push(CheckResult::new(EXTERIOR, id, true, "Gram matrix is the antidiagonal identity", "hyperbolic-bases"));
        } else {
            out.push(CheckResult::anomaly(EXTERIOR, id, format!("Gram matrix {g:?}"), "hyperbolic-bases"));
        }
    }
    out.push(check(EXTERIOR, "exterior.b_wedge.examples", "exterior-form", || {
        let a = b_wedge(&ext(0, 1), &ext(0b1111, 1)) == q(1);
        let b = b_wedge(&ext(0b0011, 1), &ext(0b1100, -1)) == q(1);
        let c = b_wedge(&ext(0b0001, 1), &ext(0b0001, 1)).is_zero();
        Ok((a && b && c, "b(1,v1234)=1, b(v12,-v34)=1, b(v1,v1)=0".into()))
    }));
    let full = Matrix::from_fn(16, 16, |i, j| {
        let bs = ext_basis(4);
        b_wedge(&ext(bs[i], 1), &ext(bs[j], 1))
    });
    out.push(check(EXTERIOR, "exterior.b_wedge.regular", "exterior-form", || {
        let r = linalg::rank(&full);
        Ok((r == 16, format!("Gram rank {r}")))
    }));
    out.push(check(EXTERIOR, "exterior.involution_compatibility", "exterior-form", || {
        let binv = linalg::inverse(&full).ok_or(Error::NotInvertible)?;
        let mut ok = true;
        for k in 0..8 {
            let p = phi_apply(&l(k));
            ok &= binv.mul(&p.transpose()).mul(&full) == phi_apply(&l(k).reverse());
        }
        Ok((ok, "B^-1 phi(g)^T B = phi(rev g) for all letters".into()))
    }));
    out.push(check(EXTERIOR, "exterior.psi.examples", "psi-table", || {
        let (a, b) = psi_apply(&CS::one(4))?;
        let one = a.is_identity() && b.is_identity();
        let x = psi_apply(&spin_gen(&root("e1-e2"), &t, 4)?)?;
        let ex1 = x == (oplus_gen(&root("e3+e4"), &t.negate(), 4)?, oplus_gen(&root("-e1-e2"), &t, 4)?);
        let y = psi_apply(&spin_gen(&root("e2-e3"), &t, 4)?)?;
        let g = oplus_gen(&root("e2-e3"), &t, 4)?;
        let ex2 = y == (g.clone(), g);
        let odd = psi_apply(&CS::letter(4, 0)) == Err(Error::NotEven);
        Ok((one && ex1 && ex2 && odd, "psi(1)=(I,I); X[e1-e2](t), X[e2-e3](t) images; odd input rejected".into()))
    }));
    let evens: Vec<(C, C)> =
        (0..6).map(|_| (random_element(&mut rng, 4, 4, true), random_element(&mut rng, 4, 4, true))).collect();
    out.push(check(EXTERIOR, "exterior.psi.homomorphism", "psi-table", || {
        let mut ok = true;
        for (x, y) in &evens {
            let (a, b) = psi_apply(&x.mul(y))?;
            let (xa, xb) = psi_apply(x)?;
            let (ya, yb) = psi_apply(y)?;
            ok &= a == xa.mul(&ya) && b == xb.mul(&yb);
        }
        Ok((ok, format!("{} random even pairs", evens.len())))
    }));
    out.push(check(EXTERIOR, "exterior.psi_inverse.roundtrip", "psi-table", || {
        let mut ok = true;
        for (x, _) in &evens {
            let (a, b) = psi_apply(x)?;
            ok &= psi_inverse(&a, &b) == *x;
        }
        let i: Matrix<Rational> = Matrix::identity(8);
        let one = psi_inverse(&i, &i).is_one();
        Ok((ok && one, format!("{} random even elements; psi^-1(I,I)=1", evens.len())))
    }));
    out
}

// ---------------------------------------------------------------- chevalley

const CHEVALLEY: &str = "chevalley";

fn spin(g: GroupElement<Scalar>) -> Option<CS> {
    match g {
        GroupElement::Spin(a) => Some(a),
        GroupElement::Oplus(_) => None,
    }
}

/// `[x_α(s), x_β(t)]` is trivial or `x_{α+β}(N s t)` with the same `N` in both groups.
fn commutator_row(alpha: &Root) -> Result<(bool, String)> {
    let (s, t) = (var("s"), var("t"));
    let mut bad = Vec::new();
    for beta in roots(4) {
        if beta == alpha.neg() {
            continue;
        }
        let n = structure_constant(alpha, &beta, 4, Group::Oplus)?;
        let n_spin = structure_constant(alpha, &beta, 4, Group::Spin)?;
        if n != n_spin {
            bad.push(format!("{beta}: N differs between groups ({n:?} vs {n_spin:?})"));
        }
        for g in [Group::Spin, Group::Oplus] {
            let c = commutator(&generator(alpha, &s, 4, g)?, &generator(&beta, &t, 4, g)?)?;
            let ok = match (alpha.add(&beta, 4), n) {
                (None, _) => c.is_identity(),
                (Some(sum), Some(k)) if k == 1 || k == -1 => {
                    c == generator(&sum, &s.times(&t).scale_i64(k), 4, g)?
                }
                _ => false,
            };
            if !ok {
                bad.push(format!("{beta} in {g:?}"));
            }
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "dichotomy holds against all roots".into() } else { bad.join("; ") }))
}

pub fn verify_chevalley() -> Vec<CheckResult> {
    let t = var("t");
    let s = var("s");
    let mut out = Vec::new();
    out.push(check(CHEVALLEY, "chevalley.generators.examples", "chevalley-generators", || {
        let w = |l: &[usize]| CS::word(4, l);
        let one = CS::one(4);
        let a = spin_gen(&root("e1-e2"), &t, 4)? == one.add(&w(&[v(4, 1), vstar(4, 2)]).scale(&t));
        let b = spin_gen(&root("e1+e2"), &t, 4)? == one.add(&w(&[v(4, 1), v(4, 2)]).scale(&t));
        let c = spin_gen(&root("-e1-e2"), &t, 4)? == one.add(&w(&[vstar(4, 2), vstar(4, 1)]).scale(&t));
        let e = |i: usize, j: usize| Matrix::<Scalar>::unit(8, i - 1, j - 1);
        let i8: Matrix<Scalar> = Matrix::identity(8);
        let d = oplus_gen(&root("e1-e2"), &t, 4)? == i8.add(&e(1, 2).sub(&e(7, 8)).scale(&t));
        let f = oplus_gen(&root("e1+e2"), &t, 4)? == i8.add(&e(1, 7).sub(&e(2, 8)).scale(&t));
        let g = oplus_gen(&root("-e1-e2"), &t, 4)? == i8.add(&e(7, 1).sub(&e(8, 2)).scale(&t));
        Ok((a && b && c && d && f && g, "X and x for e1-e2, e1+e2, -e1-e2".into()))
    }));
    out.push(check(CHEVALLEY, "chevalley.simple_system", "dynkin-diagram", || {
        let sys = simple_system();
        let centre = root("e3-e4");
        let mut ok = true;
        for a in &sys {
            for b in &sys {
                let ip = a.inner(b, 4);
                let expected = if a == b {
                    2
                } else if *a == centre || *b == centre {
                    -1
                } else {
                    0
                };
                ok &= ip == expected;
            }
        }
        Ok((ok, "e3-e4 is joined to the other three simple roots".into()))
    }));
    out.extend(roots(4).par_iter().map(|r| {
        check(CHEVALLEY, format!("chevalley.chi.{r}"), "vector-representation", || {
            let x = spin_gen(r, &t, 4)?;
            let m = chi(&x)?;
            let ok = m == oplus_gen(r, &t, 4)? && is_orthogonal(&m) && is_proper(&m)?;
            Ok((ok, format!("chi(X[{r}](t)) = x[{r}](t), orthogonal and proper")))
        })
    }).collect::<Vec<_>>());
    out.extend(roots(4).par_iter().map(|r| {
        check(CHEVALLEY, format!("chevalley.additivity.{r}"), "chevalley-generators", || {
            let a = spin_gen(r, &s, 4)?.mul(&spin_gen(r, &t, 4)?) == spin_gen(r, &s.plus(&t), 4)?;
            let b = oplus_gen(r, &s, 4)?.mul(&oplus_gen(r, &t, 4)?) == oplus_gen(r, &s.plus(&t), 4)?;
            Ok((a && b, "X(s)X(t)=X(s+t), x(s)x(t)=x(s+t)".into()))
        })
    }).collect::<Vec<_>>());
    out.extend(
        roots(4)
            .par_iter()
            .map(|r| CheckResult::from_result(CHEVALLEY, format!("chevalley.commutator.{r}"), commutator_row(r), "commutator-relations"))
            .collect::<Vec<_>>(),
    );
    out.push(check(CHEVALLEY, "chevalley.commutator.antisymmetry", "commutator-relations", || {
        let mut ok = true;
        let mut count = 0;
        for a in roots(4) {
            for b in roots(4) {
                if let Some(n) = structure_constant(&a, &b, 4, Group::Oplus)? {
                    ok &= structure_constant(&b, &a, 4, Group::Oplus)? == Some(-n);
                    count += 1;
                }
            }
        }
        Ok((ok, format!("N(a,b) = -N(b,a) on {count} ordered pairs")))
    }));
    out.push(check(CHEVALLEY, "chevalley.commutator.nested_example", "commutator-relations", || {
        let g = |r: &str, p: &Scalar| generator(&root(r), p, 4, Group::Spin);
        let inner = commutator(&g("e1+e3", &t)?, &g("-e3+e4", &Scalar::int(-1))?)?;
        let c = spin(commutator(&inner, &g("-e2-e4", &Scalar::one())?)?).expect("spin");
        Ok((c == spin_gen(&root("e1-e2"), &t, 4)?, format!("result {c}")))
    }));
    out.extend(roots(4).par_iter().map(|r| {
        check(CHEVALLEY, format!("chevalley.weyl.{r}"), "weyl-elements", || {
            let w = spin_w(r, &t, 4)?;
            let sq = w.mul(&w) == spin_h(r, &Scalar::int(-1), 4)?;
            let image = chi(&w)? == oplus_w(r, &t, 4)?;
            let h1 = spin_h(r, &Scalar::one(), 4)?.is_one();
            Ok((sq && image && h1, format!("W^2 = H(-1): {sq}; chi(W(t)) = w(t): {image}; H(1) = 1: {h1}")))
        })
    }).collect::<Vec<_>>());
    out.push(check(CHEVALLEY, "chevalley.weyl.e1-e2_permutation", "weyl-elements", || {
        let w = oplus_w(&root("e1-e2"), &q(1), 4)?;
        let mut ok = w.nonzero_count() == 8;
        for (i, j) in [(0, 1), (1, 0), (6, 7), (7, 6)] {
            ok &= w.get(i, j).abs() == q(1);
        }
        for k in 2..6 {
            ok &= w.get(k, k).is_one();
        }
        Ok((ok, "signed permutation swapping coordinates (1,2) and (7,8)".into()))
    }));
    out.push(check(CHEVALLEY, "chevalley.torus", "torus-elements", || {
        let tinv = t.try_inverse().expect("unit");
        let h = oplus_h(&root("e1-e2"), &t, 4)?;
        let diag = [t.clone(), tinv.clone(), Scalar::one(), Scalar::one(), Scalar::one(), Scalar::one(), t.clone(), tinv];
        let expected = Matrix::from_fn(8, 8, |i, j| if i == j { diag[i].clone() } else { Scalar::zero() });
        let a = h == expected;
        let mut b = true;
        for r in roots(4) {
            b &= oplus_h(&r, &s, 4)?.mul(&oplus_h(&r, &t, 4)?) == oplus_h(&r, &s.times(&t), 4)?;
        }
        Ok((a && b, "h[e1-e2](t) = diag(t,1/t,1,1,1,1,t,1/t); h(s)h(t) = h(st) for all roots".into()))
    }));
    out.push(check(CHEVALLEY, "chevalley.kernel", "kernel-of-chi", || {
        let ker = kernel_chi_enumerate()?;
        let z = zeta::<Rational>()?;
        let one = C::one(4);
        let listed = ker.len() == 2 && ker[0] == one && ker[1] == z;
        let nontrivial = z != one && z.mul(&z) == one;
        let trivial_image = chi(&z)?.is_identity();
        let zs = zeta::<Scalar>()?;
        let mut central = true;
        for r in roots(4) {
            let x = spin_gen(&r, &s, 4)?;
            central &= x.mul(&zs) == zs.mul(&x);
        }
        Ok((
            listed && nontrivial && trivial_image && central,
            format!("ker chi = {{1, {z}}}; zeta^2 = 1, chi(zeta) = I, zeta commutes with all X_a(s)"),
        ))
    }));
    out
}

/// Runs one named suite (or `all`). `rank` applies to the rank-generic Clifford checks.
pub fn run_suite(name: &str, seed: u64, rank: usize) -> Result<Vec<CheckResult>> {
    if !(2..=MAX_RANK).contains(&rank) {
        return Err(Error::Domain(format!("rank must be between 2 and {MAX_RANK}, got {rank}")));
    }
    match name {
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(s, seed, rank)?);
            }
            Ok(out)
        }
        "clifford" => Ok(verify_clifford(seed, rank)),
        "exterior" => Ok(verify_exterior(seed)),
        "chevalley" => Ok(verify_chevalley()),
        "triality" => Ok(crate::triality::verify_all()),
        "octonion" => Ok(crate::octonion::verify_all(seed)),
        "triples" => Ok(crate::triples::verify_all(seed)),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Suite names a run covers.
pub fn suite_names(name: &str) -> Vec<String> {
    if name == "all" {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        vec![name.to_string()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all_pass(results: &[CheckResult]) {
        let failed: Vec<_> = results.iter().filter(|r| !r.passed()).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn clifford_suite_passes() {
        assert_all_pass(&verify_clifford(0, 4));
    }

    #[test]
    fn clifford_suite_other_ranks() {
        for n in [2, 3] {
            let r = verify_clifford(1, n);
            assert_all_pass(&r);
            assert!(r.iter().any(|c| c.check_id == format!("clifford.relations.rank={n}")));
        }
    }

    #[test]
    fn exterior_suite_passes() {
        assert_all_pass(&verify_exterior(0));
    }

    #[test]
    fn chevalley_suite_passes() {
        let r = verify_chevalley();
        assert_all_pass(&r);
        assert_eq!(r.iter().filter(|c| c.check_id.starts_with("chevalley.chi.")).count(), 24);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert_eq!(run_suite("nosuch", 0, 4), Err(Error::UnknownSuite("nosuch".into())));
        assert!(run_suite("clifford", 0, 9).is_err());
    }
}
