//! Trialitarian triples over a split base: twisting the split object `(M, M, M, Ψ)`, the
//! functors `Θ⁺` and `Θ`, and the combinatorics of the split trialitarian cover.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::{kernel_chi_enumerate, oplus_gen, roots, spin_gen, zeta, Root};
use crate::clifford::{even_basis, CliffordElement};
use crate::error::{Error, Result};
use crate::exterior::{pair_from_coords, psi_apply, psi_inverse_map, psi_map};
use crate::matrix::Matrix;
use crate::quadtriple::{chi, even_auto_map, is_orthogonal, is_proper, pgo_equal, sigma_apply};
use crate::report::CheckResult;
use crate::scalar::Rational;
use crate::sparse::LinearMap;
use crate::triality::{improper_phi, theta_minus_table, theta_plus_table, theta_plus_via_psi, theta_via_phi, SignedRootMap};

const SUITE: &str = "triples";

/// A product of Chevalley generators `x_{α₁}(t₁) ⋯ x_{αₖ}(tₖ)`.
pub type Word = Vec<(Root, Rational)>;

pub fn word_matrix(w: &[(Root, Rational)]) -> Matrix<Rational> {
    w.iter()
        .fold(Matrix::identity(8), |acc, (r, t)| acc.mul(&oplus_gen(r, t, 4).expect("rank 4 root")))
}

pub fn word_spin(w: &[(Root, Rational)]) -> CliffordElement<Rational> {
    w.iter()
        .fold(CliffordElement::one(4), |acc, (r, t)| acc.mul(&spin_gen(r, t, 4).expect("rank 4 root")))
}

/// Applies a signed root map factor by factor.
pub fn word_map(w: &[(Root, Rational)], map: &SignedRootMap) -> Word {
    w.iter()
        .map(|(r, t)| {
            let (b, s) = map.get(r);
            (b, if s > 0 { t.clone() } else { -t })
        })
        .collect()
}

pub fn word_to_string(w: &[(Root, Rational)]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|(r, t)| format!("x[{r}]({t})")).collect::<Vec<_>>().join("*")
}

/// Deterministic words of one to three generators with parameters in `{1, 2, −1, 1/2}`.
pub fn sample_words(seed: u64, count: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rs = roots(4);
    let params = [Rational::from(1), Rational::from(2), Rational::from(-1), Rational::new(1, 2)];
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=3);
            (0..len)
                .map(|_| (rs[rng.gen_range(0..rs.len())], params[rng.gen_range(0..params.len())].clone()))
                .collect()
        })
        .collect()
}

/// `X ↦ g X g⁻¹` on row-major coordinates of `Mat₈`.
pub fn inner_auto_map(g: &Matrix<Rational>, ginv: &Matrix<Rational>) -> LinearMap<Rational> {
    let d = g.rows();
    let cols = (0..d * d)
        .map(|k| {
            let (i, j) = (k / d, k % d);
            let mut col = Vec::new();
            for p in 0..d {
                if g.get(p, i).is_zero() {
                    continue;
                }
                for q in 0..d {
                    let v = g.get(p, i) * ginv.get(j, q);
                    if !v.is_zero() {
                        col.push((p * d + q, v));
                    }
                }
            }
            col
        })
        .collect();
    LinearMap::from_columns(d * d, cols)
}

/// `Inn a × Inn b` on pair coordinates, for orthogonal `a`, `b`.
pub fn inner_pair_map(a: &Matrix<Rational>, b: &Matrix<Rational>) -> LinearMap<Rational> {
    let ia = inner_auto_map(a, &sigma_apply(a));
    let ib = inner_auto_map(b, &sigma_apply(b));
    let mut cols: Vec<Vec<(usize, Rational)>> = (0..64).map(|j| ia.column(j).to_vec()).collect();
    cols.extend((0..64).map(|j| ib.column(j).iter().map(|(i, v)| (i + 64, v.clone())).collect()));
    LinearMap::from_columns(128, cols)
}

/// The factor swap `(X, Y) ↦ (Y, X)`.
pub fn swap_map() -> LinearMap<Rational> {
    let perm: Vec<usize> = (0..128).map(|i| (i + 64) % 128).collect();
    LinearMap::<Rational>::identity(128).permute_rows(&perm)
}

/// Orthogonal isometries `(g₁, g₂, g₃)` identifying each component with the split one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwistData {
    pub g1: Matrix<Rational>,
    pub g2: Matrix<Rational>,
    pub g3: Matrix<Rational>,
}

impl TwistData {
    pub fn new(g1: Matrix<Rational>, g2: Matrix<Rational>, g3: Matrix<Rational>) -> Self {
        TwistData { g1, g2, g3 }
    }

    pub fn identity() -> Self {
        let i = Matrix::identity(8);
        TwistData::new(i.clone(), i.clone(), i)
    }

    pub fn from_words(w1: &[(Root, Rational)], w2: &[(Root, Rational)], w3: &[(Root, Rational)]) -> Self {
        TwistData::new(word_matrix(w1), word_matrix(w2), word_matrix(w3))
    }

    /// `(g₂, g₃, g₁)`.
    pub fn rotate(&self) -> Self {
        TwistData::new(self.g2.clone(), self.g3.clone(), self.g1.clone())
    }

    fn all(&self) -> [&Matrix<Rational>; 3] {
        [&self.g1, &self.g2, &self.g3]
    }

    /// Whether each isometry is orthogonal and proper.
    pub fn check(&self) -> Result<()> {
        for (k, g) in self.all().into_iter().enumerate() {
            if !is_orthogonal(g) {
                return Err(Error::ImproperTwist(format!("g{} is not orthogonal", k + 1)));
            }
            if !is_proper(g)? {
                return Err(Error::ImproperTwist(format!("g{} is improper", k + 1)));
            }
        }
        Ok(())
    }
}

/// `(Inn g₂ × Inn g₃) ∘ Ψ ∘ C(g₁)⁻¹` on even-monomial coordinates.
pub fn realize(tw: &TwistData) -> LinearMap<Rational> {
    inner_pair_map(&tw.g2, &tw.g3).compose(&psi_map().compose(&even_auto_map(&sigma_apply(&tw.g1))))
}

/// `C(g₁) ∘ Ψ⁻¹ ∘ (Inn g₂⁻¹ × Inn g₃⁻¹)`.
pub fn realize_inverse(tw: &TwistData) -> LinearMap<Rational> {
    even_auto_map(&tw.g1).compose(&psi_inverse_map().compose(&inner_pair_map(&sigma_apply(&tw.g2), &sigma_apply(&tw.g3))))
}

/// A triple of split quadratic triples with its isomorphism `α`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitTriple {
    pub twist: TwistData,
    pub alpha: LinearMap<Rational>,
}

impl SplitTriple {
    /// `(M, M, M, Ψ)`.
    pub fn split() -> Self {
        SplitTriple { twist: TwistData::identity(), alpha: psi_map().clone() }
    }

    pub fn apply(&self, x: &CliffordElement<Rational>) -> Result<(Matrix<Rational>, Matrix<Rational>)> {
        Ok(pair_from_coords(&self.alpha.apply(&x.even_coords()?)))
    }
}

pub fn build_triple(twist: TwistData) -> Result<SplitTriple> {
    twist.check()?;
    let alpha = realize(&twist);
    let tr = SplitTriple { twist, alpha };
    validate(&tr)?;
    Ok(tr)
}

/// Invertibility, multiplicativity on `{X_α(1) − 1}·{monomials}`, and compatibility with the
/// involutions.
pub fn validate(tr: &SplitTriple) -> Result<()> {
    if !realize_inverse(&tr.twist).compose(&tr.alpha).is_identity() {
        return Err(Error::Internal("alpha is not inverted by its twist".into()));
    }
    let basis = even_basis(4);
    let images: Vec<(Matrix<Rational>, Matrix<Rational>)> =
        (0..basis.len()).map(|j| pair_from_coords(tr.alpha.column(j))).collect();
    let gens: Vec<CliffordElement<Rational>> = roots(4)
        .iter()
        .map(|r| spin_gen(r, &Rational::one(), 4).map(|x| x.sub(&CliffordElement::one(4))))
        .collect::<Result<_>>()?;
    let bad = gens.par_iter().find_map_any(|x| {
        let (xa, xb) = tr.apply(x).ok()?;
        basis.iter().enumerate().find_map(|(j, b)| {
            let m = CliffordElement::monomial(4, *b, Rational::one());
            let (pa, pb) = tr.apply(&x.mul(&m)).ok()?;
            let (ma, mb) = &images[j];
            (pa != xa.mul(ma) || pb != xb.mul(mb)).then(|| format!("not multiplicative on {x} * {}", crate::clifford::blade_name(4, *b)))
        })
    });
    if let Some(msg) = bad {
        return Err(Error::Internal(msg));
    }
    for (j, b) in basis.iter().enumerate() {
        let m = CliffordElement::monomial(4, *b, Rational::one());
        let (ra, rb) = tr.apply(&m.reverse())?;
        let (ma, mb) = &images[j];
        if ra != sigma_apply(ma) || rb != sigma_apply(mb) {
            return Err(Error::Internal("involutions not compatible".into()));
        }
    }
    Ok(())
}

/// `(B, C, A, α_B)` with `α_B = (Inn g₃ × Inn g₁) ∘ Ψ ∘ C(g₂)⁻¹`.
pub fn theta_plus_triple(tr: &SplitTriple) -> SplitTriple {
    let twist = tr.twist.rotate();
    let alpha = realize(&twist);
    SplitTriple { twist, alpha }
}

pub fn theta_minus_triple(tr: &SplitTriple) -> SplitTriple {
    theta_plus_triple(&theta_plus_triple(tr))
}

/// `(A, C, B, sw ∘ α)`; the twist becomes `(g₁φ, g₃φ, g₂φ)` with `φ` improper.
pub fn theta_triple(tr: &SplitTriple) -> SplitTriple {
    let phi = improper_phi::<Rational>();
    let t = &tr.twist;
    SplitTriple {
        twist: TwistData::new(t.g1.mul(&phi), t.g3.mul(&phi), t.g2.mul(&phi)),
        alpha: swap_map().compose(&tr.alpha),
    }
}

/// Whether `(α₁, α₂, α₃)` is a trialitarian algebra over the split cover.
pub fn split_trialg_condition(a1: &SplitTriple, a2: &SplitTriple, a3: &SplitTriple) -> bool {
    a2.alpha == theta_plus_triple(a1).alpha && a3.alpha == theta_plus_triple(a2).alpha
}

/// Labels of the six components, in order.
pub const PAIR_LABELS: [(usize, usize); 6] = [(1, 2), (2, 3), (3, 1), (1, 3), (2, 1), (3, 2)];

/// A tuple of algebras over `S^{⊔3}` or `S^{⊔6}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleAlgebra<T> {
    pub components: Vec<T>,
}

impl<T: Clone> TupleAlgebra<T> {
    pub fn new(components: Vec<T>) -> Self {
        TupleAlgebra { components }
    }

    fn arity(&self, n: usize) -> Result<&[T]> {
        if self.components.len() == n {
            Ok(&self.components)
        } else {
            Err(Error::ArityMismatch { expected: n, found: self.components.len() })
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self.components.len() {
            6 => PAIR_LABELS.iter().map(|(i, j)| format!("({i},{j})")).collect(),
            n => (1..=n).map(|i| i.to_string()).collect(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for TupleAlgebra<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `π′(a, b, c) = (a, b, c, a, b, c)`.
pub fn pi_prime<T: Clone>(x: &TupleAlgebra<T>) -> Result<TupleAlgebra<T>> {
    let v = x.arity(3)?;
    Ok(TupleAlgebra::new(PAIR_LABELS.iter().map(|(i, _)| v[i - 1].clone()).collect()))
}

/// `τ′(a, b, c) = (b, c, a, c, a, b)`.
pub fn tau_prime<T: Clone>(x: &TupleAlgebra<T>) -> Result<TupleAlgebra<T>> {
    let v = x.arity(3)?;
    Ok(TupleAlgebra::new(PAIR_LABELS.iter().map(|(_, j)| v[j - 1].clone()).collect()))
}

/// `ρ′((a, b, c), (d, e, f)) = ((b, c, a), (f, d, e))`.
pub fn rho_prime<T: Clone>(x: &TupleAlgebra<T>) -> Result<TupleAlgebra<T>> {
    let v = x.arity(6)?;
    Ok(TupleAlgebra::new([1, 2, 0, 5, 3, 4].iter().map(|&k| v[k].clone()).collect()))
}

/// `γ(a, b, c) = ((b, c), (c, a), (a, b))`.
pub fn gamma<T: Clone>(x: &TupleAlgebra<T>) -> Result<TupleAlgebra<(T, T)>> {
    let v = x.arity(3)?;
    Ok(TupleAlgebra::new((0..3).map(|i| (v[(i + 1) % 3].clone(), v[(i + 2) % 3].clone())).collect()))
}

/// `π_*` of a six-tuple: component `i` is the product over the labels `(i, ·)`.
pub fn pushforward_pi<T: Clone>(x: &TupleAlgebra<T>) -> Result<TupleAlgebra<(T, T)>> {
    let v = x.arity(6)?;
    Ok(TupleAlgebra::new((1..=3).map(|i| {
        let mut it = PAIR_LABELS.iter().enumerate().filter(|(_, (a, _))| *a == i).map(|(k, _)| v[k].clone());
        (it.next().expect("two labels"), it.next().expect("two labels"))
    }).collect()))
}

/// A permutation of `{1, 2, 3}`, stored 0-based as `i ↦ p[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Perm(pub [usize; 3]);

impl Perm {
    pub const ID: Perm = Perm([0, 1, 2]);
    /// `(1 2 3)`.
    pub const C: Perm = Perm([1, 2, 0]);
    /// `(2 3)`.
    pub const LAMBDA: Perm = Perm([0, 2, 1]);

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm([self.0[other.0[0]], self.0[other.0[1]], self.0[other.0[2]]])
    }

    pub fn is_even(&self) -> bool {
        matches!(self.0, [0, 1, 2] | [1, 2, 0] | [2, 0, 1])
    }

    /// `id, c, c², λ, cλ, c²λ`.
    pub fn all() -> [Perm; 6] {
        let c2 = Perm::C.compose(&Perm::C);
        [Perm::ID, Perm::C, c2, Perm::LAMBDA, Perm::C.compose(&Perm::LAMBDA), c2.compose(&Perm::LAMBDA)]
    }

    /// `(k, e)` with `self = cᵏ λᵉ`.
    pub fn decompose(&self) -> (usize, usize) {
        for e in 0..2 {
            for k in 0..3 {
                let mut p = Perm::ID;
                for _ in 0..k {
                    p = p.compose(&Perm::C);
                }
                if e == 1 {
                    p = p.compose(&Perm::LAMBDA);
                }
                if p == *self {
                    return (k, e);
                }
            }
        }
        unreachable!("every permutation of three letters is c^k lambda^e")
    }

    /// Pullback on three components: `(β·x)_k = x_{β(k)}`.
    pub fn act3<T: Clone>(&self, x: &TupleAlgebra<T>) -> Result<TupleAlgebra<T>> {
        let v = x.arity(3)?;
        Ok(TupleAlgebra::new((0..3).map(|k| v[self.0[k]].clone()).collect()))
    }

    /// Pullback on six components, acting on both entries of each label.
    pub fn act6<T: Clone>(&self, x: &TupleAlgebra<T>) -> Result<TupleAlgebra<T>> {
        let v = x.arity(6)?;
        let pos = |a: usize, b: usize| PAIR_LABELS.iter().position(|&l| l == (a, b)).expect("label");
        Ok(TupleAlgebra::new(
            PAIR_LABELS
                .iter()
                .map(|&(i, j)| v[pos(self.0[i - 1] + 1, self.0[j - 1] + 1)].clone())
                .collect(),
        ))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["id", "c", "c^2", "lambda", "c*lambda", "c^2*lambda"];
        let k = Perm::all().iter().position(|p| p == self).expect("perm");
        write!(f, "{}", names[k])
    }
}

fn letters(n: usize) -> TupleAlgebra<String> {
    TupleAlgebra::new(["a", "b", "c", "d", "e", "f"][..n].iter().map(|s| s.to_string()).collect())
}

fn tuple(s: &[&str]) -> TupleAlgebra<String> {
    TupleAlgebra::new(s.iter().map(|x| x.to_string()).collect())
}

/// Cover maps, `ρ′` equivariance and the pushforward shape.
pub fn verify_cover_maps() -> Vec<CheckResult> {
    let reference = "split-trialitarian-cover";
    let mut out = Vec::new();
    let abc = letters(3);
    let six = letters(6);
    let eq = |a: Result<TupleAlgebra<String>>, b: &[&str]| a.map(|x| x == tuple(b)).unwrap_or(false);
    out.push(CheckResult::new(SUITE, "triples.cover.pi_prime", eq(pi_prime(&abc), &["a", "b", "c", "a", "b", "c"]), "(a,b,c,a,b,c)", reference));
    out.push(CheckResult::new(SUITE, "triples.cover.tau_prime", eq(tau_prime(&abc), &["b", "c", "a", "c", "a", "b"]), "(b,c,a,c,a,b)", reference));
    out.push(CheckResult::new(SUITE, "triples.cover.rho_prime", eq(rho_prime(&six), &["b", "c", "a", "f", "d", "e"]), "((b,c,a),(f,d,e))", reference));
    let g = gamma(&abc).map(|t| t.components);
    let g_ok = g.as_ref().map(|v| v.iter().map(|(x, y)| format!("{x}{y}")).collect::<Vec<_>>() == ["bc", "ca", "ab"]).unwrap_or(false);
    out.push(CheckResult::new(SUITE, "triples.cover.gamma", g_ok, "((b,c),(c,a),(a,b))", reference));
    let r3 = rho_prime(&six).and_then(|x| rho_prime(&x)).and_then(|x| rho_prime(&x));
    out.push(CheckResult::new(SUITE, "triples.cover.rho_order_three", r3.map(|x| x == six).unwrap_or(false), "rho'^3 = id", reference));
    let arity = matches!(rho_prime(&abc), Err(Error::ArityMismatch { expected: 6, found: 3 }))
        && matches!(pi_prime(&six), Err(Error::ArityMismatch { expected: 3, found: 6 }));
    out.push(CheckResult::new(SUITE, "triples.cover.arity", arity, "wrong arity is rejected", reference));
    let lam = Perm::LAMBDA.act6(&six);
    out.push(CheckResult::new(SUITE, "triples.cover.lambda_action", eq(lam, &["d", "f", "e", "a", "c", "b"]), "lambda: ((d,f,e),(a,c,b))", reference));
    for h in Perm::all() {
        let res = (|| {
            let pi_eq = pi_prime(&h.act3(&abc)?)? == h.act6(&pi_prime(&abc)?)?;
            let tau_eq = tau_prime(&h.act3(&abc)?)? == h.act6(&tau_prime(&abc)?)?;
            let lhs = rho_prime(&h.act6(&six)?)?;
            let rhs = h.act6(&rho_prime(&six)?)?;
            Ok((pi_eq && tau_eq && lhs == rhs, format!("rho' o {h} = {h} o rho' = {lhs}")))
        })();
        out.push(CheckResult::from_result(SUITE, format!("triples.cover.equivariance.{h}"), res, "rho-equivariance"));
    }
    let lam_rho = Perm::LAMBDA.act6(&six).and_then(|x| rho_prime(&x));
    out.push(CheckResult::new(SUITE, "triples.cover.lambda_rho", eq(lam_rho, &["f", "e", "d", "b", "a", "c"]), "((f,e,d),(b,a,c))", "rho-equivariance"));
    let push = tau_prime(&tuple(&["A", "B", "C"])).and_then(|x| pushforward_pi(&x)).map(|t| {
        t.components.iter().map(|(x, y)| format!("{x}x{y}")).collect::<Vec<_>>()
    });
    out.push(CheckResult::new(
        SUITE,
        "triples.cover.pushforward",
        push.as_ref().map(|v| v == &["BxC", "CxA", "AxB"]).unwrap_or(false),
        format!("{push:?}"),
        "split-twist-pushforward",
    ));
    out
}

/// Scales an orthogonal-up-to-scalar matrix to an orthogonal one.
pub fn orthogonal_normalize(g: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let s = sigma_apply(g).mul(g);
    let mu = s.get(0, 0).clone();
    if mu.is_zero() || s != Matrix::identity(8).scale(&mu) {
        return Err(Error::NotOrthogonal);
    }
    let r = mu.sqrt_exact().ok_or_else(|| Error::Domain(format!("similitude factor {mu} is not a square")))?;
    Ok(g.scale(&r.recip().expect("nonzero")))
}

/// `θ⁺` on an orthogonal matrix, through `Ψ`.
pub fn theta_plus_matrix(g: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    orthogonal_normalize(&theta_plus_via_psi(g)?)
}

/// Element `(1, h)(φ, 1)` of `PGO₈⁺ ⋊ S₃`.
#[derive(Clone, Debug, PartialEq)]
pub struct SemidirectElement {
    pub h: Perm,
    pub phi: Matrix<Rational>,
}

/// The right action of `S₃` on `PGO₈⁺`: `c` acts by `θ⁺` and `λ` by `θ`.
pub fn act(h: &Perm, g: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let (k, e) = h.decompose();
    let mut out = g.clone();
    for _ in 0..k {
        out = theta_plus_matrix(&out)?;
    }
    if e == 1 {
        out = theta_via_phi(&out);
    }
    Ok(out)
}

impl SemidirectElement {
    /// `(1,h₁)(φ,1)(1,h₂)(ψ,1) = (1,h₁h₂)(act_{h₂}(φ)ψ,1)`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        Ok(SemidirectElement { h: self.h.compose(&o.h), phi: act(&o.h, &self.phi)?.mul(&o.phi) })
    }

    pub fn equals(&self, o: &Self) -> bool {
        self.h == o.h && pgo_equal(&self.phi, &o.phi)
    }
}

/// Automorphism `(Id, h, (φ₁, φ₂, φ₃))` of the split trialitarian algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialgAut {
    pub h: Perm,
    pub phis: [Matrix<Rational>; 3],
}

impl TrialgAut {
    /// `(ψ, θ⁺ψ, θ⁻ψ)` for even `h`, `(πψ, πθ⁺ψ, πθ⁻ψ)` otherwise.
    pub fn from_word(h: Perm, w: &[(Root, Rational)]) -> Self {
        let tp = theta_plus_table();
        let tm = theta_minus_table();
        let mats = [word_matrix(w), word_matrix(&word_map(w, &tp)), word_matrix(&word_map(w, &tm))];
        let phis = if h.is_even() {
            mats
        } else {
            let p = improper_phi::<Rational>();
            mats.map(|m| p.mul(&m))
        };
        TrialgAut { h, phis }
    }

    /// `(h₁h₂, (φ_{h₂(i)} ψ_i)_i)`.
    pub fn compose(&self, o: &Self) -> Self {
        let phis = [0, 1, 2].map(|i| self.phis[o.h.0[i]].mul(&o.phis[i]));
        TrialgAut { h: self.h.compose(&o.h), phis }
    }

    /// The map to `PGO₈⁺ ⋊ S₃`.
    pub fn to_semidirect(&self) -> SemidirectElement {
        let phi = if self.h.is_even() { self.phis[0].clone() } else { improper_phi::<Rational>().mul(&self.phis[0]) };
        SemidirectElement { h: self.h, phi }
    }

    /// `β ∘ C(φᵢ) = (Inn φᵢ₊₁ × Inn φᵢ₊₂) ∘ Ψ` with `β = Ψ` or `sw ∘ Ψ`.
    pub fn is_automorphism(&self) -> bool {
        let target = if self.h.is_even() { psi_map().clone() } else { swap_map().compose(psi_map()) };
        (0..3).all(|i| {
            let lhs = target.compose(&even_auto_map(&self.phis[i]));
            let rhs = inner_pair_map(&self.phis[(i + 1) % 3], &self.phis[(i + 2) % 3]).compose(psi_map());
            lhs == rhs
        })
    }
}

/// Composition against the semidirect law on sampled pairs, including all four cases of
/// `h₂ ∈ {c, λ}` with `h₁` even or odd.
pub fn verify_semidirect_law(seed: u64, samples: usize) -> Vec<CheckResult> {
    let reference = "trialitarian-automorphism-group";
    let words = sample_words(seed ^ 0x5d, 2 * samples);
    let perms = Perm::all();
    let mut out = Vec::new();
    let ident = TrialgAut::from_word(Perm::ID, &[]);
    let id_ok = ident.to_semidirect().equals(&SemidirectElement { h: Perm::ID, phi: Matrix::identity(8) });
    out.push(CheckResult::new(SUITE, "triples.semidirect.identity", id_ok, "identity maps to identity", reference));
    let cases: Vec<(usize, Perm, Perm)> = (0..samples)
        .flat_map(|k| {
            let h1 = perms[k % 6];
            [(k, h1, Perm::C), (k, h1, Perm::LAMBDA), (k, perms[(k + 3) % 6], Perm::C), (k, perms[(k + 3) % 6], Perm::LAMBDA)]
        })
        .collect();
    let results: Vec<CheckResult> = cases
        .par_iter()
        .enumerate()
        .map(|(n, (k, h1, h2))| {
            let (w1, w2) = (&words[2 * k], &words[2 * k + 1]);
            let res = (|| {
                let x = TrialgAut::from_word(*h1, w1);
                let y = TrialgAut::from_word(*h2, w2);
                let valid = x.is_automorphism() && y.is_automorphism();
                let lhs = x.compose(&y).to_semidirect();
                let rhs = x.to_semidirect().mul(&y.to_semidirect())?;
                Ok((
                    valid && lhs.equals(&rhs),
                    format!("h1 = {h1}, h2 = {h2}, phi = {}, psi = {}", word_to_string(w1), word_to_string(w2)),
                ))
            })();
            CheckResult::from_result(SUITE, format!("triples.semidirect.sample_{n:02}"), res, reference)
        })
        .collect();
    out.extend(results);
    // θ ∘ θ⁺ ∘ θ = θ⁻, which makes the action well defined
    let res = (|| {
        let mut ok = true;
        for w in words.iter().take(samples) {
            let g = word_matrix(w);
            let lhs = theta_via_phi(&theta_plus_matrix(&theta_via_phi(&g))?);
            let rhs = theta_plus_matrix(&theta_plus_matrix(&g)?)?;
            ok &= pgo_equal(&lhs, &rhs);
        }
        Ok((ok, format!("{samples} sampled elements")))
    })();
    out.push(CheckResult::from_result(SUITE, "triples.semidirect.action_relation", res, reference));
    out
}

/// `Ψ(a) = (χ(θ⁺a), χ(θ⁻a))`, `χ` lands in `O⁺`, and `ker χ` maps to the identity.
pub fn verify_spin_pgo_isogeny(seed: u64, samples: usize) -> Vec<CheckResult> {
    let reference = "spin-pgo-isogeny";
    let tp = theta_plus_table();
    let tm = theta_minus_table();
    let mut words: Vec<(String, Word)> = roots(4).into_iter().map(|r| (r.to_string(), vec![(r, Rational::from(2))])).collect();
    words.extend(sample_words(seed ^ 0x150, samples).into_iter().enumerate().map(|(k, w)| (format!("sample_{k:02}"), w)));
    let mut out: Vec<CheckResult> = words
        .par_iter()
        .map(|(name, w)| {
            let res = (|| {
                let a = word_spin(w);
                let (p1, p2) = psi_apply(&a)?;
                let c1 = chi(&word_spin(&word_map(w, &tp)))?;
                let c2 = chi(&word_spin(&word_map(w, &tm)))?;
                let ca = chi(&a)?;
                let proper = [&ca, &c1, &c2].iter().all(|m| is_orthogonal(*m) && matches!(is_proper(*m), Ok(true)));
                Ok((p1 == c1 && p2 == c2 && proper, format!("a = {}", word_to_string(w))))
            })();
            CheckResult::from_result(SUITE, format!("triples.isogeny.{name}"), res, reference)
        })
        .collect();
    let res = (|| {
        let z = zeta::<Rational>()?;
        let ker = kernel_chi_enumerate()?;
        let all_trivial = ker.iter().map(chi).collect::<Result<Vec<_>>>()?.iter().all(|m| m.is_identity());
        let (p1, p2) = psi_apply(&z)?;
        let i = Matrix::identity(8);
        Ok((
            all_trivial && chi(&z)?.is_identity() && pgo_equal(&p1, &i) && pgo_equal(&p2, &i),
            format!("zeta = {z}; |ker chi| = {}", ker.len()),
        ))
    })();
    out.push(CheckResult::from_result(SUITE, "triples.isogeny.kernel", res, reference));
    out
}

fn sample_twists(seed: u64, count: usize) -> Vec<(Word, Word, Word)> {
    let w = sample_words(seed, 3 * count);
    (0..count).map(|k| (w[3 * k].clone(), w[3 * k + 1].clone(), w[3 * k + 2].clone())).collect()
}

fn twist_detail(t: &(Word, Word, Word)) -> String {
    format!("g1 = {}, g2 = {}, g3 = {}", word_to_string(&t.0), word_to_string(&t.1), word_to_string(&t.2))
}

/// Construction, `Θ⁺`, `Θ` and their relations on the split object and sampled twists.
pub fn verify_triples(seed: u64, samples: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let split = SplitTriple::split();
    let e12: Word = vec![("e1-e2".parse().expect("root"), Rational::one())];
    let tp = theta_plus_table();
    let tm = theta_minus_table();
    let build_ref = "twisted-triple-construction";

    let res = build_triple(TwistData::identity()).map(|t| (t.alpha == *psi_map(), "alpha = Psi".to_string()));
    out.push(CheckResult::from_result(SUITE, "triples.build.split", res, build_ref));
    let res = build_triple(TwistData::from_words(&e12, &word_map(&e12, &tp), &word_map(&e12, &tm)))
        .map(|t| (t.alpha == *psi_map(), "twist (g, theta+ g, theta- g) with g = x[e1-e2](1) gives Psi".to_string()));
    out.push(CheckResult::from_result(SUITE, "triples.build.diagonal_twist", res, build_ref));
    let res = build_triple(TwistData::from_words(&e12, &[], &[])).map(|t| (t.alpha != *psi_map(), "twist (x[e1-e2](1), I, I) differs from Psi".to_string()));
    out.push(CheckResult::from_result(SUITE, "triples.build.nontrivial_twist", res, build_ref));
    let phi = improper_phi::<Rational>();
    let rejected = matches!(build_triple(TwistData::new(phi.clone(), phi.clone(), phi.clone())), Err(Error::ImproperTwist(_)));
    out.push(CheckResult::new(SUITE, "triples.build.rejects_improper", rejected, "improper twist is rejected", build_ref));

    out.push(CheckResult::new(
        SUITE,
        "triples.theta_plus.split_fixed",
        theta_plus_triple(&split).alpha == split.alpha,
        "Theta+(split) = split",
        "theta-plus-order-three",
    ));
    // Θ(split) ≅ split through (π, π, π)
    let iso = swap_map().compose(psi_map()).compose(&even_auto_map(&phi)) == inner_pair_map(&phi, &phi).compose(psi_map());
    out.push(CheckResult::new(SUITE, "triples.theta.split_isomorphism", iso, "sw o Psi o C(phi) = (Inn phi x Inn phi) o Psi", "theta-functor-properties"));
    let sw_psi = theta_triple(&split);
    out.push(CheckResult::new(SUITE, "triples.trialg.split", split_trialg_condition(&split, &split, &split), "(Psi, Psi, Psi)", "split-trialitarian-condition"));
    out.push(CheckResult::new(
        SUITE,
        "triples.trialg.swapped_rejected",
        !split_trialg_condition(&split, &split, &sw_psi),
        "(Psi, Psi, sw o Psi) fails",
        "split-trialitarian-condition",
    ));

    let twists = sample_twists(seed, samples);
    let per_sample: Vec<Vec<CheckResult>> = twists
        .par_iter()
        .enumerate()
        .map(|(k, t)| {
            let detail = twist_detail(t);
            let id = |name: &str| format!("triples.{name}.sample_{k:02}");
            let tr = match build_triple(TwistData::from_words(&t.0, &t.1, &t.2)) {
                Ok(tr) => tr,
                Err(e) => return vec![CheckResult::new(SUITE, id("build"), false, format!("{detail}: {e}"), build_ref)],
            };
            let mut v = vec![CheckResult::new(SUITE, id("build"), true, detail.clone(), build_ref)];
            let b = theta_plus_triple(&tr);
            let c = theta_plus_triple(&b);
            let a = theta_plus_triple(&c);
            v.push(CheckResult::new(SUITE, id("theta_plus_order_three"), a.alpha == tr.alpha, detail.clone(), "theta-plus-order-three"));
            v.push(CheckResult::from_result(
                SUITE,
                id("theta_plus_valid"),
                validate(&b).map(|_| (true, detail.clone())),
                "twisted-triple-construction",
            ));
            v.push(CheckResult::new(SUITE, id("trialg"), split_trialg_condition(&tr, &b, &c), detail.clone(), "split-trialitarian-condition"));
            // choice independence with h a sampled word
            let h = &t.0;
            let moved = TwistData::from_words(
                &[t.0.clone(), h.clone()].concat(),
                &[t.1.clone(), word_map(h, &tp)].concat(),
                &[t.2.clone(), word_map(h, &tm)].concat(),
            );
            let tr2 = SplitTriple { alpha: realize(&moved), twist: moved };
            let indep = tr2.alpha == tr.alpha && theta_plus_triple(&tr2).alpha == b.alpha;
            v.push(CheckResult::new(SUITE, id("choice_independence"), indep, format!("{detail}, h = {}", word_to_string(h)), "theta-plus-well-defined"));
            let th = theta_triple(&tr);
            v.push(CheckResult::new(SUITE, id("theta_realized"), th.alpha == realize(&th.twist), detail.clone(), "theta-functor-properties"));
            v.push(CheckResult::new(SUITE, id("theta_order_two"), theta_triple(&th).alpha == tr.alpha, detail.clone(), "theta-functor-properties"));
            let lhs = theta_plus_triple(&th);
            let rhs = theta_triple(&theta_minus_triple(&tr));
            v.push(CheckResult::new(SUITE, id("theta_plus_theta"), lhs.alpha == rhs.alpha, detail.clone(), "theta-functor-properties"));
            v.push(CheckResult::from_result(SUITE, id("theta_valid"), validate(&th).map(|_| (true, detail)), "theta-functor-properties"));
            v
        })
        .collect();
    out.extend(per_sample.into_iter().flatten());
    out
}

pub fn verify_all(seed: u64) -> Vec<CheckResult> {
    let mut out = verify_cover_maps();
    out.extend(verify_triples(seed, 5));
    out.extend(verify_semidirect_law(seed, 6));
    out.extend(verify_spin_pgo_isogeny(seed, 5));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_group_structure() {
        let all = Perm::all();
        let c = Perm::C;
        assert_eq!(c.compose(&c).compose(&c), Perm::ID);
        assert_eq!(Perm::LAMBDA.compose(&Perm::LAMBDA), Perm::ID);
        assert_eq!(Perm::LAMBDA.compose(&c), c.compose(&c).compose(&Perm::LAMBDA));
        assert_eq!(all.iter().filter(|p| p.is_even()).count(), 3);
        for p in all {
            let (k, e) = p.decompose();
            assert!(k < 3 && e < 2);
        }
    }

    #[test]
    fn cycle_pulls_back_components() {
        let x = tuple(&["A1", "A2", "A3"]);
        assert_eq!(Perm::C.act3(&x).unwrap(), tuple(&["A2", "A3", "A1"]));
        assert_eq!(Perm::LAMBDA.act3(&x).unwrap(), tuple(&["A1", "A3", "A2"]));
    }

    #[test]
    fn cover_checks() {
        let bad: Vec<_> = verify_cover_maps().into_iter().filter(|r| !r.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn split_object_validates() {
        validate(&SplitTriple::split()).unwrap();
        assert!(swap_map().compose(&swap_map()).is_identity());
    }

    #[test]
    fn triples_checks() {
        let bad: Vec<_> = verify_triples(11, 2).into_iter().filter(|r| !r.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn semidirect_and_isogeny_checks() {
        let mut all = verify_semidirect_law(3, 3);
        all.extend(verify_spin_pgo_isogeny(3, 2));
        let bad: Vec<_> = all.into_iter().filter(|r| !r.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn proper_triple_is_not_an_odd_automorphism() {
        let w: Word = vec![("e1-e3".parse().unwrap(), Rational::from(2))];
        let even = TrialgAut::from_word(Perm::ID, &w);
        assert!(even.is_automorphism());
        let wrong = TrialgAut { h: Perm::LAMBDA, phis: even.phis.clone() };
        assert!(!wrong.is_automorphism());
        assert!(TrialgAut::from_word(Perm::LAMBDA, &w).is_automorphism());
    }
}
