//! The outer automorphisms `θ⁺`, `θ⁻ = (θ⁺)²` and `θ` of `Spin₈`, `O₈⁺` and `PGO₈⁺`.
//!
//! `θ⁺` is available twice: as a signed table on Chevalley generators, and derived from the
//! Clifford isomorphism `Ψ: Cl₀ → Mat₈ × Mat₈` through `Ψ ∘ C(A) ∘ Ψ⁻¹`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::{
    commutator, identify_oplus_gen, oplus_gen, oplus_h, roots, spin_gen, GroupElement, Root,
};
use crate::clifford::CliffordElement;
use crate::error::{Error, Result};
use crate::exterior::{psi_apply, psi_inverse_map, psi_map};
use crate::matrix::Matrix;
use crate::quadtriple::{even_auto_map, induced_clifford_auto, inner_rep, is_proper, pgo_equal};
use crate::report::CheckResult;
use crate::ring::Ring;
use crate::scalar::{Rational, Scalar};
use crate::sparse::LinearMap;

const SUITE: &str = "triality";

/// Permutation of the roots with a sign on each parameter: `x_α(t) ↦ x_{β}(s·t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedRootMap {
    pub entries: BTreeMap<Root, (Root, i8)>,
}

impl SignedRootMap {
    pub fn identity() -> Self {
        SignedRootMap { entries: roots(4).into_iter().map(|r| (r, (r, 1))).collect() }
    }

    pub fn get(&self, r: &Root) -> (Root, i8) {
        self.entries[r]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedRootMap) -> SignedRootMap {
        SignedRootMap {
            entries: other
                .entries
                .iter()
                .map(|(a, (b, s))| {
                    let (c, t) = self.get(b);
                    (*a, (c, s * t))
                })
                .collect(),
        }
    }

    pub fn is_bijection(&self) -> bool {
        let mut targets: Vec<Root> = self.entries.values().map(|(r, _)| *r).collect();
        targets.sort();
        targets.dedup();
        targets.len() == self.entries.len()
    }
}

impl fmt::Display for SignedRootMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, (b, s)) in &self.entries {
            writeln!(f, "{a:>8} -> {b:>8} ({})", if *s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// The signed table of `θ⁺` on Chevalley generators.
pub fn theta_plus_table() -> SignedRootMap {
    const ROWS: [(&str, &str, i8); 24] = [
        ("e1-e2", "e3+e4", -1),
        ("e1-e3", "e2+e4", 1),
        ("e1-e4", "e2+e3", -1),
        ("e2-e3", "e2-e3", 1),
        ("e2-e4", "e2-e4", 1),
        ("e3-e4", "e3-e4", 1),
        ("-e1+e2", "-e3-e4", -1),
        ("-e1+e3", "-e2-e4", 1),
        ("-e1+e4", "-e2-e3", -1),
        ("-e2+e3", "-e2+e3", 1),
        ("-e2+e4", "-e2+e4", 1),
        ("-e3+e4", "-e3+e4", 1),
        ("e1+e2", "-e1+e2", 1),
        ("e1+e3", "-e1+e3", 1),
        ("e1+e4", "-e1+e4", 1),
        ("e2+e3", "-e1-e4", -1),
        ("e2+e4", "-e1-e3", 1),
        ("e3+e4", "-e1-e2", -1),
        ("-e1-e2", "e1-e2", 1),
        ("-e1-e3", "e1-e3", 1),
        ("-e1-e4", "e1-e4", 1),
        ("-e2-e3", "e1+e4", -1),
        ("-e2-e4", "e1+e3", 1),
        ("-e3-e4", "e1+e2", -1),
    ];
    SignedRootMap {
        entries: ROWS
            .iter()
            .map(|(a, b, s)| (a.parse().expect("root"), (b.parse().expect("root"), *s)))
            .collect(),
    }
}

pub fn theta_minus_table() -> SignedRootMap {
    let tp = theta_plus_table();
    tp.compose(&tp)
}

/// The isometry `v1 ↦ −v1*`, `v1* ↦ −v1`, fixing the other basis vectors.
pub fn improper_phi<R: Ring>() -> Matrix<R> {
    let mut m = Matrix::identity(8);
    m.set(0, 0, R::zero());
    m.set(7, 7, R::zero());
    m.set(7, 0, R::one().negate());
    m.set(0, 7, R::one().negate());
    m
}

/// `θ(A) = φ A φ⁻¹`.
pub fn theta_via_phi<R: Ring>(a: &Matrix<R>) -> Matrix<R> {
    let phi = improper_phi::<R>();
    phi.mul(a).mul(&phi)
}

/// `θ` on generators, read off from conjugation by `φ`.
pub fn theta_table() -> Result<SignedRootMap> {
    let t = Scalar::var("t");
    let mut entries = BTreeMap::new();
    for r in roots(4) {
        let img = theta_via_phi(&oplus_gen(&r, &t, 4)?);
        let (b, p) = identify_oplus_gen(&img)
            .ok_or_else(|| Error::Internal(format!("theta of x_{r} is not a root element")))?;
        entries.insert(r, (b, sign_of(&p, &t)?));
    }
    Ok(SignedRootMap { entries })
}

fn sign_of(p: &Scalar, t: &Scalar) -> Result<i8> {
    if p == t {
        Ok(1)
    } else if *p == t.negate() {
        Ok(-1)
    } else {
        Err(Error::Internal(format!("parameter {p} is not ±t")))
    }
}

/// `Ψ ∘ C(A) ∘ Ψ⁻¹` on `Mat₈ × Mat₈` coordinates.
pub fn psi_conjugated_auto<R: Ring>(a: &Matrix<R>) -> LinearMap<R> {
    let ca = even_auto_map(a);
    psi_map().lift::<R>().compose(&ca.compose(&psi_inverse_map().lift::<R>()))
}

/// Factors of `Ψ ∘ C(A) ∘ Ψ⁻¹` as inner automorphisms of `Mat₈`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialityFactors<R: Ring> {
    /// Whether the factors are preserved (true) or exchanged (false).
    pub proper: bool,
    pub first: Matrix<R>,
    pub second: Matrix<R>,
}

/// For proper `A`: `(Inn g1 × Inn g2)`. For improper `A`: `sw ∘ (Inn g1 × Inn g2)`.
pub fn triality_factors<R: Ring>(a: &Matrix<R>) -> Result<TrialityFactors<R>> {
    let t = psi_conjugated_auto(a);
    let zero_block = |r0, c0| t.block(r0, c0, 64, 64).nnz() == 0;
    if zero_block(64, 0) && zero_block(0, 64) {
        Ok(TrialityFactors {
            proper: true,
            first: inner_rep(8, &t.block(0, 0, 64, 64))?,
            second: inner_rep(8, &t.block(64, 64, 64, 64))?,
        })
    } else if zero_block(0, 0) && zero_block(64, 64) {
        // (b, c) ↦ (g2 c g2⁻¹, g1 b g1⁻¹)
        Ok(TrialityFactors {
            proper: false,
            first: inner_rep(8, &t.block(64, 0, 64, 64))?,
            second: inner_rep(8, &t.block(0, 64, 64, 64))?,
        })
    } else {
        Err(Error::Internal("Psi-conjugated automorphism mixes the factors".into()))
    }
}

/// `θ⁺(A)` up to sign, from the first factor of `Ψ ∘ C(A) ∘ Ψ⁻¹`.
pub fn theta_plus_via_psi<R: Ring>(a: &Matrix<R>) -> Result<Matrix<R>> {
    let f = triality_factors(a)?;
    if !f.proper {
        return Err(Error::Domain("improper isometry exchanges the factors".into()));
    }
    Ok(f.first)
}

pub fn theta_minus_via_psi<R: Ring>(a: &Matrix<R>) -> Result<Matrix<R>> {
    let f = triality_factors(a)?;
    if !f.proper {
        return Err(Error::Domain("improper isometry exchanges the factors".into()));
    }
    Ok(f.second)
}

/// One row of the image table of `Ψ` on spin generators.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsiRow {
    pub input: Root,
    pub output_first: Root,
    pub sign_first: i8,
    pub output_second: Root,
    pub sign_second: i8,
}

/// `Ψ(X_α(t))` identified as a pair of signed generators.
pub fn psi_row(alpha: &Root) -> Result<PsiRow> {
    let t = Scalar::var("t");
    let (a, b) = psi_apply(&spin_gen(alpha, &t, 4)?)?;
    let id = |m: &Matrix<Scalar>| -> Result<(Root, i8)> {
        let (r, p) = identify_oplus_gen(m)
            .ok_or_else(|| Error::Internal(format!("factor of Psi(X_{alpha}) is not a root element")))?;
        Ok((r, sign_of(&p, &t)?))
    };
    let (r1, s1) = id(&a)?;
    let (r2, s2) = id(&b)?;
    Ok(PsiRow { input: *alpha, output_first: r1, sign_first: s1, output_second: r2, sign_second: s2 })
}

pub fn psi_table() -> Result<Vec<PsiRow>> {
    roots(4).par_iter().map(psi_row).collect()
}

fn fmt_gen(r: &Root, s: i8) -> String {
    format!("x[{r}]({}t)", if s > 0 { "" } else { "-" })
}

/// Both factors of `Ψ(X_α(t))` against `θ⁺` and `θ⁻ = (θ⁺)²` (48 rows).
pub fn verify_psi_table() -> Vec<CheckResult> {
    let tp = theta_plus_table();
    let tm = theta_minus_table();
    roots(4)
        .par_iter()
        .flat_map_iter(|r| {
            let reference = "psi-images-of-spin-generators";
            match psi_row(r) {
                Ok(row) => {
                    let (e1, s1) = tp.get(r);
                    let (e2, s2) = tm.get(r);
                    vec![
                        CheckResult::new(
                            SUITE,
                            format!("triality.psi_table.{r}.first"),
                            (row.output_first, row.sign_first) == (e1, s1),
                            format!("got {}, expected {}", fmt_gen(&row.output_first, row.sign_first), fmt_gen(&e1, s1)),
                            reference,
                        ),
                        CheckResult::new(
                            SUITE,
                            format!("triality.psi_table.{r}.second"),
                            (row.output_second, row.sign_second) == (e2, s2),
                            format!("got {}, expected {}", fmt_gen(&row.output_second, row.sign_second), fmt_gen(&e2, s2)),
                            reference,
                        ),
                    ]
                }
                Err(e) => vec![CheckResult::new(SUITE, format!("triality.psi_table.{r}"), false, e.to_string(), reference)],
            }
        })
        .collect()
}

/// `θ⁺` from `Ψ` agrees with the table on every generator.
pub fn verify_theta_plus_via_psi() -> Vec<CheckResult> {
    let tp = theta_plus_table();
    let t = Scalar::var("t");
    roots(4)
        .par_iter()
        .map(|r| {
            let res = (|| {
                let a = oplus_gen(r, &t, 4)?;
                let got = theta_plus_via_psi(&a)?;
                let (b, s) = tp.get(r);
                let expected = oplus_gen(&b, &t.scale_i64(s as i64), 4)?;
                Ok((pgo_equal(&got, &expected), format!("theta+(x[{r}](t)) = {}", fmt_gen(&b, s))))
            })();
            CheckResult::from_result(SUITE, format!("triality.theta_plus_via_psi.{r}"), res, "theta-plus-from-clifford-triality")
        })
        .collect()
}

/// `(θ⁺)³ = id`, `θ⁺ ∘ θ⁻ = id`, and bijectivity of the table.
pub fn verify_order_three() -> Vec<CheckResult> {
    let tp = theta_plus_table();
    let tm = theta_minus_table();
    let cube = tp.compose(&tm);
    let mut out = vec![
        CheckResult::new(SUITE, "triality.theta_plus.bijection", tp.is_bijection(), "24 distinct targets", "theta-plus-table"),
        CheckResult::new(
            SUITE,
            "triality.theta_plus.inverse",
            tm.compose(&tp) == SignedRootMap::identity(),
            "theta- o theta+ = id",
            "theta-plus-table",
        ),
    ];
    for r in roots(4) {
        let (b, s) = cube.get(&r);
        out.push(CheckResult::new(
            SUITE,
            format!("triality.theta_plus.order_three.{r}"),
            b == r && s == 1,
            format!("(theta+)^3 sends {r} to {} with sign {s}", b),
            "theta-plus-order-three",
        ));
    }
    out
}

/// The commutator expression for `x_{e1−e2}(t)` and its image under `θ⁺`.
pub fn verify_theta_plus_commutator() -> Vec<CheckResult> {
    let res = (|| {
        let t = Scalar::var("t");
        let one = Scalar::one();
        let g = |r: &str, p: &Scalar| -> Result<GroupElement<Scalar>> {
            Ok(GroupElement::Oplus(oplus_gen(&r.parse()?, p, 4)?))
        };
        let lhs = commutator(&commutator(&g("e1+e3", &t)?, &g("-e3+e4", &one.negate())?)?, &g("-e2-e4", &one)?)?;
        let ok1 = lhs == g("e1-e2", &t)?;
        let mapped = commutator(&commutator(&g("-e1+e3", &t)?, &g("-e3+e4", &one.negate())?)?, &g("e1+e3", &one)?)?;
        let ok2 = mapped == g("e3+e4", &t.negate())?;
        Ok((ok1 && ok2, format!("expression reproduces x[e1-e2](t): {ok1}; image is x[e3+e4](-t): {ok2}")))
    })();
    vec![CheckResult::from_result(SUITE, "triality.theta_plus.commutator_identity", res, "theta-plus-table")]
}

/// `C(φ)` realises `θ` on `Spin₈` and `Inn φ` realises it on `O₈⁺`.
pub fn verify_theta_description() -> Vec<CheckResult> {
    let t = Scalar::var("t");
    let mut out = Vec::new();
    let phi = improper_phi::<Scalar>();
    out.push(CheckResult::new(SUITE, "triality.phi.order_two", phi.mul(&phi).is_identity(), "phi^2 = I", "improper-isometry"));
    let improper = matches!(is_proper(&phi), Ok(false)) && matches!(is_proper(&phi.neg()), Ok(false));
    out.push(CheckResult::new(SUITE, "triality.phi.improper", improper, "phi and -phi swap the central idempotents", "improper-isometry"));
    let theta = theta_table();
    let res = (|| {
        let pairs = [("e1-e3", "-e1-e3"), ("-e1-e3", "e1-e3"), ("e2+e4", "e2+e4"), ("e3-e4", "e3-e4")];
        let mut ok = true;
        for (a, b) in pairs {
            let x = spin_gen(&a.parse()?, &t, 4)?;
            ok &= induced_clifford_auto(&phi, &x)? == spin_gen(&b.parse()?, &t, 4)?;
        }
        Ok((ok, "C(phi) on X_alpha(t) for the simple roots".to_string()))
    })();
    out.push(CheckResult::from_result(SUITE, "triality.theta.spin_on_simple_roots", res, "theta-description"));
    let res = (|| {
        let pairs = [("e1-e3", "-e1-e3"), ("-e1-e3", "e1-e3"), ("-e2+e3", "-e2+e3"), ("e2+e4", "e2+e4")];
        let mut ok = true;
        for (a, b) in pairs {
            ok &= theta_via_phi(&oplus_gen(&a.parse()?, &t, 4)?) == oplus_gen(&b.parse()?, &t, 4)?;
        }
        Ok((ok, "Inn(phi) on x_alpha(t) for the listed roots".to_string()))
    })();
    out.push(CheckResult::from_result(SUITE, "triality.theta.oplus_on_generators", res, "theta-description"));
    // C(φ) and Inn φ agree root by root, and χ intertwines them
    let res = (|| {
        let theta = theta.clone()?;
        let mut ok = true;
        for r in roots(4) {
            let (b, s) = theta.get(&r);
            let img = induced_clifford_auto(&phi, &spin_gen(&r, &t, 4)?)?;
            ok &= img == spin_gen(&b, &t.scale_i64(s as i64), 4)?;
        }
        Ok((ok, "C(phi)(X_alpha(t)) = X_theta(alpha)(±t) with the signs of Inn(phi)".to_string()))
    })();
    out.push(CheckResult::from_result(SUITE, "triality.theta.spin_matches_oplus", res, "theta-description"));
    let res = (|| {
        let theta = theta.clone()?;
        let sq = theta.compose(&theta);
        Ok((sq == SignedRootMap::identity(), "theta^2 = id on generators".to_string()))
    })();
    out.push(CheckResult::from_result(SUITE, "triality.theta.order_two", res, "theta-description"));
    // θ ∘ θ⁺ ∘ θ = θ⁻
    match theta {
        Ok(th) => {
            let lhs = th.compose(&theta_plus_table()).compose(&th);
            let tm = theta_minus_table();
            for r in roots(4) {
                out.push(CheckResult::new(
                    SUITE,
                    format!("triality.semidirect_relation.{r}"),
                    lhs.get(&r) == tm.get(&r),
                    format!("theta theta+ theta sends {r} to {:?}", lhs.get(&r)),
                    "graph-automorphisms-s3",
                ));
            }
        }
        Err(e) => out.push(CheckResult::new(SUITE, "triality.semidirect_relation", false, e.to_string(), "graph-automorphisms-s3")),
    }
    out
}

/// `Ψ(C(φ)(X_α(1))) = sw ∘ (Inn φ × Inn φ)(Ψ(X_α(1)))` for every root.
pub fn verify_switch_corollary() -> Vec<CheckResult> {
    let phi = improper_phi::<Rational>();
    roots(4)
        .par_iter()
        .map(|r| {
            let res = (|| {
                let x = spin_gen(r, &Rational::one(), 4)?;
                let (l1, l2) = psi_apply(&induced_clifford_auto(&phi, &x)?)?;
                let (a, b) = psi_apply(&x)?;
                let (r1, r2) = (theta_via_phi(&b), theta_via_phi(&a));
                Ok((l1 == r1 && l2 == r2, "both sides agree as matrix pairs".to_string()))
            })();
            CheckResult::from_result(SUITE, format!("triality.switch.{r}"), res, "clifford-switch")
        })
        .collect()
}

/// `θ⁺(h_{e3−e4}(t)) = h_{e3−e4}(t)` and `θ⁺(h_{e3+e4}(t)) = h_{−e1−e2}(t)` at sample points.
pub fn theta_plus_on_h() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for t in [-1i64, 1, 2] {
        let tq = Rational::from(t);
        for (a, b) in [("e3-e4", "e3-e4"), ("e3+e4", "-e1-e2")] {
            let res = (|| {
                let h = oplus_h(&a.parse()?, &tq, 4)?;
                let got = theta_plus_via_psi(&h)?;
                let expected = oplus_h(&b.parse()?, &tq, 4)?;
                let trivial = pgo_equal(&expected, &Matrix::identity(8));
                Ok((pgo_equal(&got, &expected), format!("theta+(h[{a}]({t})) = h[{b}]({t}); trivial in PGO: {trivial}")))
            })();
            out.push(CheckResult::from_result(SUITE, format!("triality.theta_plus_on_h.{a}.t={t}"), res, "theta-plus-on-torus"));
        }
    }
    out
}

/// The pair `(χ(θ⁺ a), χ(θ⁻ a))` for a product of spin generators, via the tables.
pub fn spin_word_theta(word: &[(Root, Scalar)], map: &SignedRootMap) -> Vec<(Root, Scalar)> {
    word.iter().map(|(r, p)| {
        let (b, s) = map.get(r);
        (b, p.scale_i64(s as i64))
    }).collect()
}

pub fn spin_word_eval(word: &[(Root, Scalar)]) -> Result<CliffordElement<Scalar>> {
    word.iter().try_fold(CliffordElement::one(4), |acc, (r, p)| Ok(acc.mul(&spin_gen(r, p, 4)?)))
}

/// Every suite check of this module.
pub fn verify_all() -> Vec<CheckResult> {
    let mut out = verify_order_three();
    out.extend(verify_theta_plus_commutator());
    out.extend(verify_psi_table());
    out.extend(verify_theta_plus_via_psi());
    out.extend(verify_theta_description());
    out.extend(verify_switch_corollary());
    out.extend(theta_plus_on_h());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_examples() {
        let tp = theta_plus_table();
        assert_eq!(tp.get(&"e1-e2".parse().unwrap()), ("e3+e4".parse().unwrap(), -1));
        assert_eq!(tp.get(&"e2-e3".parse().unwrap()), ("e2-e3".parse().unwrap(), 1));
        assert_eq!(tp.get(&"e3+e4".parse().unwrap()), ("-e1-e2".parse().unwrap(), -1));
    }

    #[test]
    fn orbit_of_e1_plus_e2() {
        let tp = theta_plus_table();
        let a: Root = "e1+e2".parse().unwrap();
        let (b, s1) = tp.get(&a);
        let (c, s2) = tp.get(&b);
        let (d, s3) = tp.get(&c);
        assert_eq!(b.to_string(), "-e1+e2");
        assert_eq!(c.to_string(), "-e3-e4");
        assert_eq!((d, s1 * s2 * s3), (a, 1));
    }

    #[test]
    fn all_checks_pass() {
        let failures: Vec<_> = verify_all().into_iter().filter(|r| !r.passed()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
    }

    #[test]
    fn identity_maps_to_identity() {
        let i: Matrix<Rational> = Matrix::identity(8);
        assert!(theta_plus_via_psi(&i).unwrap().is_identity());
    }

    #[test]
    fn improper_phi_exchanges_factors() {
        let f = triality_factors(&improper_phi::<Rational>()).unwrap();
        assert!(!f.proper);
    }
}
