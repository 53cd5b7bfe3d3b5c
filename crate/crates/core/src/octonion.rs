//! Split octonions by Cayley–Dickson doubling of `Mat₂`, the para-Cayley product, and the
//! isomorphism `α₀: Cl₀(𝒞_s, n) → End(𝒞_s) × End(𝒞_s)`.

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevalley::{roots, spin_gen};
use crate::clifford::CliffordElement;
use crate::error::{Error, Result};
use crate::exterior::psi_apply;
use crate::linalg;
use crate::matrix::Matrix;
use crate::quadtriple::sigma_apply;
use crate::report::CheckResult;
use crate::ring::Ring;
use crate::scalar::{Rational, Scalar};

const SUITE: &str = "octonion";

fn m2<R: Ring>(a: i64, b: i64, c: i64, d: i64) -> Matrix<R> {
    Matrix::from_fn(2, 2, |i, j| R::from_i64([[a, b], [c, d]][i][j]))
}

/// Canonical symplectic involution of `Mat₂`: `[[a,b],[c,d]] ↦ [[d,−b],[−c,a]]`.
pub fn psi2_apply<R: Ring>(m: &Matrix<R>) -> Matrix<R> {
    Matrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 0) => m.get(1, 1).clone(),
        (1, 1) => m.get(0, 0).clone(),
        _ => m.get(i, j).negate(),
    })
}

pub fn det2<R: Ring>(m: &Matrix<R>) -> R {
    m.get(0, 0).times(m.get(1, 1)).minus(&m.get(0, 1).times(m.get(1, 0)))
}

/// `a + νb`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Octonion<R: Ring = Scalar> {
    pub a: Matrix<R>,
    pub b: Matrix<R>,
}

impl<R: Ring> Octonion<R> {
    pub fn new(a: Matrix<R>, b: Matrix<R>) -> Self {
        Octonion { a, b }
    }

    pub fn zero() -> Self {
        Octonion { a: Matrix::zeros(2, 2), b: Matrix::zeros(2, 2) }
    }

    pub fn one() -> Self {
        Octonion { a: Matrix::identity(2), b: Matrix::zeros(2, 2) }
    }

    /// Coordinates `(a11, a12, a21, a22, b11, b12, b21, b22)`.
    pub fn raw(&self) -> Vec<R> {
        self.a.entries().iter().chain(self.b.entries()).cloned().collect()
    }

    pub fn from_raw(c: &[R]) -> Self {
        Octonion {
            a: Matrix::from_fn(2, 2, |i, j| c[2 * i + j].clone()),
            b: Matrix::from_fn(2, 2, |i, j| c[4 + 2 * i + j].clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Octonion { a: self.a.add(&o.a), b: self.b.add(&o.b) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Octonion { a: self.a.sub(&o.a), b: self.b.sub(&o.b) }
    }

    pub fn neg(&self) -> Self {
        Octonion { a: self.a.neg(), b: self.b.neg() }
    }

    pub fn scale(&self, s: &R) -> Self {
        Octonion { a: self.a.scale(s), b: self.b.scale(s) }
    }

    /// `(a+νb)(a'+νb') = aa' − b'ψ(b) + ν(ψ(a)b' + a'b)`.
    pub fn mul(&self, o: &Self) -> Self {
        Octonion {
            a: self.a.mul(&o.a).sub(&o.b.mul(&psi2_apply(&self.b))),
            b: psi2_apply(&self.a).mul(&o.b).add(&o.a.mul(&self.b)),
        }
    }

    pub fn conj(&self) -> Self {
        Octonion { a: psi2_apply(&self.a), b: self.b.neg() }
    }

    pub fn norm(&self) -> R {
        det2(&self.a).plus(&det2(&self.b))
    }

    pub fn bnorm(&self, o: &Self) -> R {
        self.add(o).norm().minus(&self.norm()).minus(&o.norm())
    }

    /// `x ⋆ y = x̄ · ȳ`.
    pub fn para_mul(&self, o: &Self) -> Self {
        self.conj().mul(&o.conj())
    }
}

impl Octonion<Scalar> {
    /// Octonion with coordinates `{prefix}1, …, {prefix}8`.
    pub fn symbolic(prefix: &str) -> Self {
        let c: Vec<Scalar> = (1..=8).map(|k| Scalar::var(&format!("{prefix}{k}"))).collect();
        Octonion::from_raw(&c)
    }
}

impl<R: Ring> fmt::Display for Octonion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |m: &Matrix<R>, i: usize| format!("{} {}", m.get(i, 0), m.get(i, 1));
        write!(f, "[{}; {}] + nu[{}; {}]", row(&self.a, 0), row(&self.a, 1), row(&self.b, 0), row(&self.b, 1))
    }
}

/// The good basis `e1, e2, u1, u2, u3, v1, v2, v3`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GoodBasis {
    pub e1: Octonion<Rational>,
    pub e2: Octonion<Rational>,
    pub u1: Octonion<Rational>,
    pub u2: Octonion<Rational>,
    pub u3: Octonion<Rational>,
    pub v1: Octonion<Rational>,
    pub v2: Octonion<Rational>,
    pub v3: Octonion<Rational>,
}

impl GoodBasis {
    /// The matrices as printed, with `u₂ = ν·diag(0, −1)`.
    pub fn printed() -> Self {
        let z = || Matrix::zeros(2, 2);
        GoodBasis {
            e1: Octonion::new(m2(1, 0, 0, 0), z()),
            e2: Octonion::new(m2(0, 0, 0, 1), z()),
            u1: Octonion::new(m2(0, 1, 0, 0), z()),
            u2: Octonion::new(z(), m2(0, 0, 0, -1)),
            u3: Octonion::new(z(), m2(0, 0, 1, 0)),
            v1: Octonion::new(m2(0, 0, -1, 0), z()),
            v2: Octonion::new(z(), m2(1, 0, 0, 0)),
            v3: Octonion::new(z(), m2(0, -1, 0, 0)),
        }
    }

    /// `u₂ = ν·diag(0, 1)`; the other elements as printed.
    pub fn corrected() -> Self {
        let mut g = GoodBasis::printed();
        g.u2 = g.u2.neg();
        g
    }

    pub fn elements(&self) -> [(&'static str, &Octonion<Rational>); 8] {
        [
            ("e1", &self.e1),
            ("e2", &self.e2),
            ("u1", &self.u1),
            ("u2", &self.u2),
            ("u3", &self.u3),
            ("v1", &self.v1),
            ("v2", &self.v2),
            ("v3", &self.v3),
        ]
    }

    /// `{e1, −v2, −v1, −v3, −u3, −u1, −u2, e2}`.
    pub fn ordered(&self) -> OctOrderedBasis {
        OctOrderedBasis::new([
            self.e1.clone(),
            self.v2.neg(),
            self.v1.neg(),
            self.v3.neg(),
            self.u3.neg(),
            self.u1.neg(),
            self.u2.neg(),
            self.e2.clone(),
        ])
    }
}

pub const ORDERED_NAMES: [&str; 8] = ["e1", "-v2", "-v1", "-v3", "-u3", "-u1", "-u2", "e2"];

/// An ordered basis of `𝒞_s` with precomputed coordinate map.
#[derive(Clone, Debug, PartialEq)]
pub struct OctOrderedBasis {
    pub entries: [Octonion<Rational>; 8],
    to_coords: Matrix<Rational>,
}

impl OctOrderedBasis {
    pub fn new(entries: [Octonion<Rational>; 8]) -> Self {
        let m = Matrix::from_fn(8, 8, |i, j| entries[j].raw()[i].clone());
        let to_coords = linalg::inverse(&m).expect("ordered basis spans");
        OctOrderedBasis { entries, to_coords }
    }

    pub fn gram(&self) -> Matrix<Rational> {
        Matrix::from_fn(8, 8, |i, j| self.entries[i].bnorm(&self.entries[j]))
    }

    pub fn coords<R: Ring>(&self, x: &Octonion<R>) -> Vec<R> {
        self.to_coords.lift::<R>().apply(&x.raw())
    }

    /// Matrix of a linear endomorphism in this basis.
    pub fn operator<R: Ring>(&self, f: impl Fn(&Octonion<R>) -> Octonion<R>) -> Matrix<R> {
        let mut m = Matrix::zeros(8, 8);
        for (j, e) in self.entries.iter().enumerate() {
            let e = Octonion { a: e.a.lift::<R>(), b: e.b.lift::<R>() };
            for (i, c) in self.coords(&f(&e)).into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Whether the Gram matrix is `Σ E_{i,9−i}`.
    pub fn is_hyperbolic(&self) -> bool {
        let g = self.gram();
        (0..8).all(|i| (0..8).all(|j| *g.get(i, j) == Rational::from(i64::from(i + j == 7))))
    }
}

/// The isomorphism `α₀` in the coordinates of an ordered basis, letter `k` of the rank-4 Clifford
/// algebra standing for basis entry `k`.
#[derive(Clone, Debug)]
pub struct Alpha0 {
    left: Vec<Matrix<Rational>>,
    right: Vec<Matrix<Rational>>,
}

impl Alpha0 {
    pub fn new(basis: &OctOrderedBasis) -> Self {
        let left = basis.entries.iter().map(|x| basis.operator(|y: &Octonion<Rational>| x.para_mul(y))).collect();
        let right = basis.entries.iter().map(|x| basis.operator(|y: &Octonion<Rational>| y.para_mul(x))).collect();
        Alpha0 { left, right }
    }

    /// `ℓ_x` and `r_x` for basis entry `k`.
    pub fn left(&self, k: usize) -> &Matrix<Rational> {
        &self.left[k]
    }

    pub fn right(&self, k: usize) -> &Matrix<Rational> {
        &self.right[k]
    }

    /// `α₀` on an even element: a word `x₁⋯x₂ₘ` goes to `(ℓ_{x₁} r_{x₂} ⋯, r_{x₁} ℓ_{x₂} ⋯)`.
    pub fn apply<R: Ring>(&self, x: &CliffordElement<R>) -> Result<(Matrix<R>, Matrix<R>)> {
        if x.rank() != 4 {
            return Err(Error::RankMismatch { expected: 4, found: x.rank() });
        }
        if !x.is_even() {
            return Err(Error::NotEven);
        }
        let mut first = Matrix::<R>::zeros(8, 8);
        let mut second = Matrix::<R>::zeros(8, 8);
        for (b, c) in x.terms() {
            let mut p = Matrix::<Rational>::identity(8);
            let mut q = Matrix::<Rational>::identity(8);
            for (pos, k) in b.letters().enumerate() {
                if pos % 2 == 0 {
                    p = p.mul(&self.left[k]);
                    q = q.mul(&self.right[k]);
                } else {
                    p = p.mul(&self.right[k]);
                    q = q.mul(&self.left[k]);
                }
            }
            first = first.add(&p.lift::<R>().scale(c));
            second = second.add(&q.lift::<R>().scale(c));
        }
        Ok((first, second))
    }
}

/// `α₀` for the corrected good basis.
pub fn alpha0() -> &'static Alpha0 {
    static A: OnceLock<Alpha0> = OnceLock::new();
    A.get_or_init(|| Alpha0::new(&GoodBasis::corrected().ordered()))
}

pub fn alpha0_apply<R: Ring>(x: &CliffordElement<R>) -> Result<(Matrix<R>, Matrix<R>)> {
    alpha0().apply(x)
}

/// Number of the 48 generator rows on which `α₀` and `Ψ` agree, at `t = 1`.
pub fn table_matches(basis: &OctOrderedBasis) -> usize {
    let a = Alpha0::new(basis);
    roots(4)
        .iter()
        .map(|r| {
            let x = spin_gen(r, &Rational::one(), 4).expect("generator");
            match (a.apply(&x), psi_apply(&x)) {
                (Ok((a1, a2)), Ok((p1, p2))) => usize::from(a1 == p1) + usize::from(a2 == p2),
                _ => 0,
            }
        })
        .sum()
}

/// Sign changes of ordered-basis entries that make the Gram hyperbolic and the table agree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignFix {
    /// Negated entries, 0-based.
    pub flipped: Vec<usize>,
    pub table_rows: usize,
}

/// All sign patterns of minimal weight under which `basis` becomes hyperbolic with 48/48 rows.
pub fn minimal_sign_fix(basis: &OctOrderedBasis) -> Vec<SignFix> {
    let mut by_weight: Vec<Vec<SignFix>> = vec![Vec::new(); 9];
    for mask in 0u16..256 {
        let mut entries = basis.entries.clone();
        for (k, e) in entries.iter_mut().enumerate() {
            if mask & (1 << k) != 0 {
                *e = e.neg();
            }
        }
        let b = OctOrderedBasis::new(entries);
        if !b.is_hyperbolic() {
            continue;
        }
        let rows = table_matches(&b);
        if rows == 48 {
            let flipped: Vec<usize> = (0..8).filter(|k| mask & (1 << k) != 0).collect();
            by_weight[flipped.len()].push(SignFix { flipped, table_rows: rows });
        }
    }
    by_weight.into_iter().find(|v| !v.is_empty()).unwrap_or_default()
}

/// Good-basis multiplication table, computed from the doubling formula.
pub fn multiplication_table() -> Vec<Vec<String>> {
    let g = GoodBasis::printed();
    let els = g.elements();
    els.iter()
        .map(|(_, x)| {
            els.iter()
                .map(|(_, y)| describe_in_good_basis(&g, &x.mul(y)))
                .collect()
        })
        .collect()
}

fn describe_in_good_basis(g: &GoodBasis, x: &Octonion<Rational>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    for (name, e) in g.elements() {
        if x == e {
            return name.to_string();
        }
        if *x == e.neg() {
            return format!("-{name}");
        }
    }
    x.to_string()
}

fn sym_zero(x: &Scalar) -> (bool, String) {
    (x.is_zero(), format!("{} terms remain", x.num_terms()))
}

/// `n(x⋆y) = n(x)n(y)`, `b_n(x⋆y,z) = b_n(x,y⋆z)` and `x⋆(y⋆x) = n(x)y = (x⋆y)⋆x` in fully
/// symbolic coordinates.
pub fn verify_symmetric_composition() -> Vec<CheckResult> {
    let (x, y, z) = (Octonion::symbolic("x"), Octonion::symbolic("y"), Octonion::symbolic("z"));
    let reference = "symmetric-composition-axioms";
    let mult = x.para_mul(&y).norm().minus(&x.norm().times(&y.norm()));
    let (ok, d) = sym_zero(&mult);
    let mut out = vec![CheckResult::new(SUITE, "octonion.composition.multiplicative", ok, format!("n(x*y) - n(x)n(y): {d}"), reference)];
    let assoc = x.para_mul(&y).bnorm(&z).minus(&x.bnorm(&y.para_mul(&z)));
    let (ok, d) = sym_zero(&assoc);
    out.push(CheckResult::new(SUITE, "octonion.composition.associative_form", ok, format!("b(x*y,z) - b(x,y*z): {d}"), reference));
    let nxy = y.scale(&x.norm());
    let l = x.para_mul(&y.para_mul(&x)).sub(&nxy);
    let r = x.para_mul(&y).para_mul(&x).sub(&nxy);
    out.push(CheckResult::new(SUITE, "octonion.composition.x_yx", l.is_zero(), "x*(y*x) - n(x)y", reference));
    out.push(CheckResult::new(SUITE, "octonion.composition.xy_x", r.is_zero(), "(x*y)*x - n(x)y", reference));
    out
}

/// Hurwitz identities on `Mat₂` and basic facts about `𝒞_s`.
pub fn verify_cayley_dickson() -> Vec<CheckResult> {
    let reference = "cayley-dickson-construction";
    let m = Matrix::from_fn(2, 2, |i, j| Scalar::var(&format!("m{}{}", i + 1, j + 1)));
    let tr = m.trace();
    let hur1 = m.add(&psi2_apply(&m)) == Matrix::identity(2).scale(&tr);
    let hur2 = m.mul(&psi2_apply(&m)) == Matrix::identity(2).scale(&det2(&m));
    let x = Octonion::symbolic("x");
    let unit = x.mul(&x.conj()) == Octonion::one().scale(&x.norm());
    let g = GoodBasis::printed();
    let conj_ok = g.e1.conj() == g.e2
        && [&g.u1, &g.u2, &g.u3, &g.v1, &g.v2, &g.v3].iter().all(|u| u.conj() == u.neg());
    let one_ok = g.e1.add(&g.e2) == Octonion::one();
    vec![
        CheckResult::new(SUITE, "octonion.hurwitz.trace", hur1, "m + psi(m) = tr(m) I", reference),
        CheckResult::new(SUITE, "octonion.hurwitz.det", hur2, "m psi(m) = det(m) I", reference),
        CheckResult::new(SUITE, "octonion.norm.x_conj_x", unit, "x conj(x) = n(x) 1", reference),
        CheckResult::new(SUITE, "octonion.good_basis.conjugation", conj_ok, "conj(e1) = e2, conj(u_i) = -u_i, conj(v_i) = -v_i", reference),
        CheckResult::new(SUITE, "octonion.good_basis.unit", one_ok, "e1 + e2 = 1", reference),
    ]
}

/// Alternativity on a symbolic pair and a non-associative triple of good-basis elements.
pub fn verify_alternative() -> Vec<CheckResult> {
    let reference = "cayley-dickson-construction";
    let (x, y) = (Octonion::symbolic("x"), Octonion::symbolic("y"));
    let alt = x.mul(&x).mul(&y) == x.mul(&x.mul(&y)) && y.mul(&x).mul(&x) == y.mul(&x.mul(&x));
    let mut out = vec![CheckResult::new(SUITE, "octonion.alternative", alt, "(xx)y = x(xy) and (yx)x = y(xx)", reference)];
    let g = GoodBasis::printed();
    let els = g.elements();
    let witness = els.iter().find_map(|(a, x)| {
        els.iter().find_map(|(b, y)| {
            els.iter().find_map(|(c, z)| (x.mul(y).mul(z) != x.mul(&y.mul(z))).then(|| format!("({a}{b}){c} != {a}({b}{c})")))
        })
    });
    out.push(CheckResult::new(
        SUITE,
        "octonion.non_associative",
        witness.is_some(),
        witness.unwrap_or_else(|| "no witness among good-basis triples".into()),
        reference,
    ));
    out
}

/// Gram anomaly of the printed ordered basis, and the minimal correction.
pub fn verify_ordered_basis() -> Vec<CheckResult> {
    let reference = "ordered-hyperbolic-basis";
    let printed = GoodBasis::printed().ordered();
    let g = printed.gram();
    let off: Vec<String> = (0..8)
        .flat_map(|i| (0..8).map(move |j| (i, j)))
        .filter(|&(i, j)| i < j && *g.get(i, j) != Rational::from(i64::from(i + j == 7)))
        .map(|(i, j)| format!("b({},{}) = {}", ORDERED_NAMES[i], ORDERED_NAMES[j], g.get(i, j)))
        .collect();
    let rows = table_matches(&printed);
    let mut out = Vec::new();
    if off.is_empty() {
        out.push(CheckResult::new(SUITE, "octonion.ordered_basis.printed_gram", true, "hyperbolic", reference));
    } else {
        out.push(CheckResult::anomaly(
            SUITE,
            "octonion.ordered_basis.printed_gram",
            format!("printed matrices give {}; {rows}/48 generator rows agree", off.join(", ")),
            reference,
        ));
    }
    let fixes = minimal_sign_fix(&printed);
    let detail = if fixes.is_empty() {
        "no sign pattern works".to_string()
    } else {
        fixes
            .iter()
            .map(|f| format!("negate {}", f.flipped.iter().map(|&k| ORDERED_NAMES[k]).collect::<Vec<_>>().join(", ")))
            .collect::<Vec<_>>()
            .join("; ")
    };
    let unique_u2 = fixes.len() == 1 && fixes[0].flipped == vec![6];
    out.push(CheckResult::new(SUITE, "octonion.ordered_basis.sign_fix", unique_u2, format!("minimal fix: {detail}, i.e. u2 = nu diag(0,1)"), reference));
    let corrected = GoodBasis::corrected().ordered();
    out.push(CheckResult::new(
        SUITE,
        "octonion.ordered_basis.corrected_gram",
        corrected.is_hyperbolic() && unique_u2,
        "Gram of the corrected basis is antidiagonal 1",
        reference,
    ));
    out
}

/// All 48 rows: `α₀(X_α(t))` against `Ψ(X_α(t))`.
pub fn verify_octonion_table() -> Vec<CheckResult> {
    use rayon::prelude::*;
    let reference = "octonion-generator-images";
    let t = Scalar::var("t");
    roots(4)
        .par_iter()
        .flat_map_iter(|r| {
            let x = spin_gen(r, &t, 4).expect("generator");
            match (alpha0_apply(&x), psi_apply(&x)) {
                (Ok((a1, a2)), Ok((p1, p2))) => vec![
                    CheckResult::new(SUITE, format!("octonion.table.{r}.first"), a1 == p1, "alpha0 and Psi first factors", reference),
                    CheckResult::new(SUITE, format!("octonion.table.{r}.second"), a2 == p2, "alpha0 and Psi second factors", reference),
                ],
                (Err(e), _) | (_, Err(e)) => vec![CheckResult::new(SUITE, format!("octonion.table.{r}"), false, e.to_string(), reference)],
            }
        })
        .collect()
}

/// The worked example `X_{e1−e2}(t) = 1 − t e₁u₂`.
pub fn verify_alpha0_example() -> Vec<CheckResult> {
    let reference = "octonion-generator-images";
    let res = (|| {
        let g = GoodBasis::corrected();
        let basis = g.ordered();
        let a = alpha0();
        // e₁ is entry 0 and −u₂ is entry 6
        let p = a.left(0).mul(a.right(6)).neg();
        let q = a.right(0).mul(a.left(6)).neg();
        let direct_p = basis.operator(|y: &Octonion<Rational>| g.e1.para_mul(&y.para_mul(&g.u2)));
        let direct_q = basis.operator(|y: &Octonion<Rational>| g.u2.para_mul(y).para_mul(&g.e1));
        let e = |i: usize, j: usize| Matrix::<Rational>::unit(8, i - 1, j - 1);
        let ok_p = p == e(3, 5).sub(&e(4, 6)) && p == direct_p;
        let ok_q = q == e(8, 2).sub(&e(7, 1)) && q == direct_q;
        let t = Scalar::var("t");
        let x = spin_gen(&"e1-e2".parse()?, &t, 4)?;
        let (a1, a2) = alpha0_apply(&x)?;
        let expected1 = crate::chevalley::oplus_gen(&"e3+e4".parse()?, &t.negate(), 4)?;
        let expected2 = crate::chevalley::oplus_gen(&"-e1-e2".parse()?, &t, 4)?;
        let ok_x = a1 == expected1 && a2 == expected2;
        Ok((ok_p && ok_q && ok_x, format!("l_e1 r_u2: {ok_p}; r_e1 l_u2: {ok_q}; alpha0(X[e1-e2](t)) = (x[e3+e4](-t), x[-e1-e2](t)): {ok_x}")))
    })();
    vec![CheckResult::from_result(SUITE, "octonion.alpha0.e1_u2", res, reference)]
}

/// `α₀` is multiplicative and intertwines `σ̲` with `σ` on sampled even elements.
pub fn verify_alpha0_homomorphism(seed: u64) -> Vec<CheckResult> {
    let reference = "octonion-clifford-isomorphism";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = crate::clifford::even_basis(4);
    let mut sample = || {
        (0..4).fold(CliffordElement::<Rational>::zero(4), |acc, _| {
            let b = basis[rng.gen_range(0..basis.len())];
            acc.add(&CliffordElement::monomial(4, b, Rational::from(rng.gen_range(-3i64..=3))))
        })
    };
    let mut mult = true;
    let mut invol = true;
    for _ in 0..8 {
        let (x, y) = (sample(), sample());
        let (Ok((x1, x2)), Ok((y1, y2)), Ok((p1, p2))) = (alpha0_apply(&x), alpha0_apply(&y), alpha0_apply(&x.mul(&y))) else {
            mult = false;
            continue;
        };
        mult &= p1 == x1.mul(&y1) && p2 == x2.mul(&y2);
        match alpha0_apply(&x.reverse()) {
            Ok((r1, r2)) => invol &= r1 == sigma_apply(&x1) && r2 == sigma_apply(&x2),
            Err(_) => invol = false,
        }
    }
    let one = alpha0_apply(&CliffordElement::<Rational>::one(4)).map(|(a, b)| a.is_identity() && b.is_identity()).unwrap_or(false);
    vec![
        CheckResult::new(SUITE, "octonion.alpha0.unit", one, "alpha0(1) = (I, I)", reference),
        CheckResult::new(SUITE, "octonion.alpha0.multiplicative", mult, format!("8 sampled pairs, seed {seed}"), reference),
        CheckResult::new(SUITE, "octonion.alpha0.involution", invol, format!("alpha0(rev x) = sigma(alpha0 x), seed {seed}"), reference),
    ]
}

/// Trace of `w ↦ b_n(v, w)·f(v)`, which is `b_n(v, f(v))`, computed as an operator trace.
fn rank_one_trace(basis: &OctOrderedBasis, v: &Octonion<Scalar>, f: impl Fn(&Octonion<Scalar>) -> Octonion<Scalar>) -> Scalar {
    let fv = f(v);
    basis.operator(|w: &Octonion<Scalar>| fv.scale(&v.bnorm(w))).trace()
}

/// `Tr(ℓ_{v₁*} r_{v₁} φ_n(v⊗v)) = n(v) = Tr(r_{v₁*} ℓ_{v₁} φ_n(v⊗v))` with `(v₁, v₁*) = (e₁, e₂)`.
pub fn verify_semitrace_identities() -> Vec<CheckResult> {
    let reference = "semi-trace-compatibility";
    let g = GoodBasis::corrected();
    let basis = g.ordered();
    let lift = |x: &Octonion<Rational>| Octonion { a: x.a.lift::<Scalar>(), b: x.b.lift::<Scalar>() };
    let (v1, v1s) = (lift(&basis.entries[0]), lift(&basis.entries[7]));
    let norm_pair = basis.entries[0].bnorm(&basis.entries[7]);
    let mut out = vec![CheckResult::new(SUITE, "octonion.semitrace.pair_normalised", norm_pair.is_one(), format!("b(v1, v1*) = {norm_pair}"), reference)];
    let mut vs: Vec<(String, Octonion<Scalar>)> = basis.entries.iter().zip(ORDERED_NAMES).map(|(e, n)| (n.to_string(), lift(e))).collect();
    vs.push(("symbolic".into(), Octonion::symbolic("x")));
    for (name, v) in vs {
        let left = rank_one_trace(&basis, &v, |w| v1s.para_mul(&w.para_mul(&v1)));
        let right = rank_one_trace(&basis, &v, |w| v1.para_mul(w).para_mul(&v1s));
        let n = v.norm();
        out.push(CheckResult::new(SUITE, format!("octonion.semitrace.{name}.left"), left == n, format!("trace = {left}, n = {n}"), reference));
        out.push(CheckResult::new(SUITE, format!("octonion.semitrace.{name}.right"), right == n, format!("trace = {right}, n = {n}"), reference));
    }
    out
}

pub fn verify_all(seed: u64) -> Vec<CheckResult> {
    let mut out = verify_cayley_dickson();
    out.extend(verify_alternative());
    out.extend(verify_symmetric_composition());
    out.extend(verify_ordered_basis());
    out.extend(verify_octonion_table());
    out.extend(verify_alpha0_example());
    out.extend(verify_alpha0_homomorphism(seed));
    out.extend(verify_semitrace_identities());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type O = Octonion<Rational>;

    #[test]
    fn psi2_examples() {
        let i: Matrix<Rational> = Matrix::identity(2);
        assert_eq!(psi2_apply(&i), i);
        let e12: Matrix<Rational> = Matrix::unit(2, 0, 1);
        assert_eq!(psi2_apply(&e12), e12.neg());
    }

    #[test]
    fn products_from_the_doubling_formula() {
        let g = GoodBasis::printed();
        assert_eq!(g.e1.mul(&g.e1), g.e1);
        assert!(g.e1.mul(&g.e2).is_zero());
        assert_eq!(g.u1.mul(&g.v1), g.e1.neg());
        assert_eq!(g.e1.norm(), Rational::zero());
        assert_eq!(g.e1.bnorm(&g.e2), Rational::one());
        assert_eq!(g.e1.para_mul(&g.e1), g.e2);
    }

    #[test]
    fn unit_para_product_is_conjugation() {
        let x = Octonion::symbolic("x");
        assert_eq!(Octonion::one().para_mul(&x), x.conj());
        let _: O = O::zero();
    }

    #[test]
    fn printed_gram_has_one_bad_entry() {
        let g = GoodBasis::printed().ordered().gram();
        assert_eq!(*g.get(1, 6), Rational::from(-1));
        assert_eq!(*g.get(0, 7), Rational::one());
        assert!(GoodBasis::corrected().ordered().is_hyperbolic());
    }

    #[test]
    fn single_flip_of_u2() {
        let fixes = minimal_sign_fix(&GoodBasis::printed().ordered());
        assert_eq!(fixes, vec![SignFix { flipped: vec![6], table_rows: 48 }]);
    }

    #[test]
    fn all_checks_pass_or_are_anomalies() {
        let bad: Vec<_> = verify_all(7).into_iter().filter(|r| r.status == crate::report::CheckStatus::Fail).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn odd_input_rejected() {
        assert!(matches!(alpha0_apply(&CliffordElement::<Rational>::letter(4, 0)), Err(Error::NotEven)));
    }
}
