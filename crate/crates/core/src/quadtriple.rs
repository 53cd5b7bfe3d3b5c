//! The split quadratic triple `(End H(V), σ, f)` and the maps tying it to the Clifford algebra.
//!
//! The standard basis of `H(V)` is `v1, …, vn, vn*, …, v1*`, which is also the Clifford letter
//! order, so basis vector `k` and letter `k` coincide.

use crate::clifford::{Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::exterior::center_idempotent;
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::Rational;
use crate::sparse::LinearMap;

/// Adjoint involution of the hyperbolic form: `σ(A) = J Aᵀ J`.
pub fn sigma_apply<R: Ring>(a: &Matrix<R>) -> Matrix<R> {
    let d = a.rows();
    Matrix::from_fn(d, d, |i, j| a.get(d - 1 - j, d - 1 - i).clone())
}

pub fn is_symmetric<R: Ring>(a: &Matrix<R>) -> bool {
    sigma_apply(a) == *a
}

/// `ℓ` with `ℓ + σ(ℓ) = 1` used to evaluate the semitrace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemitraceWitness {
    Half,
    Projection,
}

fn witness<R: Ring>(d: usize, w: SemitraceWitness) -> Matrix<R> {
    match w {
        SemitraceWitness::Half => Matrix::identity(d).scale(&R::from_rational(&Rational::new(1, 2))),
        SemitraceWitness::Projection => Matrix::from_fn(d, d, |i, j| {
            if i == j && i < d / 2 {
                R::one()
            } else {
                R::zero()
            }
        }),
    }
}

/// Semitrace of a symmetric element: `f(s) = Tr(s ℓ)`.
pub fn semitrace_with<R: Ring>(s: &Matrix<R>, w: SemitraceWitness) -> Result<R> {
    if !is_symmetric(s) {
        return Err(Error::Domain("semitrace is defined on symmetric elements".into()));
    }
    Ok(s.mul(&witness(s.rows(), w)).trace())
}

pub fn semitrace<R: Ring>(s: &Matrix<R>) -> Result<R> {
    semitrace_with(s, SemitraceWitness::Projection)
}

pub fn is_orthogonal<R: Ring>(a: &Matrix<R>) -> bool {
    a.is_square() && sigma_apply(a).mul(a).is_identity()
}

/// Inverse of an orthogonal matrix.
pub fn orthogonal_inverse<R: Ring>(a: &Matrix<R>) -> Result<Matrix<R>> {
    let s = sigma_apply(a);
    if s.mul(a).is_identity() {
        Ok(s)
    } else {
        Err(Error::NotOrthogonal)
    }
}

/// Images under `C(A)` of every normal monomial, indexed by bitmask.
pub fn clifford_auto_images<R: Ring>(a: &Matrix<R>) -> Vec<CliffordElement<R>> {
    let n = a.rows() / 2;
    let letter_images: Vec<CliffordElement<R>> = (0..2 * n)
        .map(|k| {
            (0..2 * n).fold(CliffordElement::zero(n), |acc, p| {
                acc.add(&CliffordElement::monomial(n, Blade(1 << p), a.get(p, k).clone()))
            })
        })
        .collect();
    let total = 1usize << (2 * n);
    let mut images: Vec<CliffordElement<R>> = Vec::with_capacity(total);
    images.push(CliffordElement::one(n));
    for m in 1..total {
        let top = 15 - (m as u16).leading_zeros() as usize;
        let rest = m & !(1 << top);
        let img = images[rest].mul(&letter_images[top]);
        images.push(img);
    }
    images
}

/// Applies the Clifford automorphism induced by `A`.
pub fn induced_clifford_auto<R: Ring>(a: &Matrix<R>, x: &CliffordElement<R>) -> Result<CliffordElement<R>> {
    let n = a.rows() / 2;
    if x.rank() != n {
        return Err(Error::RankMismatch { expected: n, found: x.rank() });
    }
    let images = clifford_auto_images(a);
    Ok(apply_images(&images, x))
}

fn apply_images<R: Ring>(images: &[CliffordElement<R>], x: &CliffordElement<R>) -> CliffordElement<R> {
    x.terms()
        .fold(CliffordElement::zero(x.rank()), |acc, (b, c)| acc.add(&images[b.0 as usize].scale(c)))
}

/// `C(A)` restricted to the even part, in even-monomial coordinates.
pub fn even_auto_map<R: Ring>(a: &Matrix<R>) -> LinearMap<R> {
    let n = a.rows() / 2;
    let images = even_images(a);
    let cols = images
        .iter()
        .map(|img| img.even_coords().expect("even image"))
        .collect();
    LinearMap::from_columns(crate::clifford::even_basis(n).len(), cols)
}

fn even_images<R: Ring>(a: &Matrix<R>) -> Vec<CliffordElement<R>> {
    let n = a.rows() / 2;
    let all = clifford_auto_images(a);
    crate::clifford::even_basis(n).iter().map(|b| all[b.0 as usize].clone()).collect()
}

/// Whether an orthogonal matrix fixes the center of the even Clifford algebra.
///
/// Returns `Ok(true)` when `C(A)(z) = z` and `Ok(false)` when `C(A)(z) = 1 - z`.
pub fn is_proper<R: Ring>(a: &Matrix<R>) -> Result<bool> {
    if a.rows() != 8 {
        return Err(Error::RankMismatch { expected: 4, found: a.rows() / 2 });
    }
    if !is_orthogonal(a) {
        return Err(Error::NotOrthogonal);
    }
    let z = center_idempotent().map(R::from_rational);
    let img = induced_clifford_auto(a, &z)?;
    if img == z {
        Ok(true)
    } else if img == CliffordElement::one(4).sub(&z) {
        Ok(false)
    } else {
        Err(Error::Internal("center not preserved".into()))
    }
}

/// Coordinates of a degree-one element as a vector of `H(V)`.
fn as_vector<R: Ring>(x: &CliffordElement<R>) -> Option<Vec<R>> {
    let n = x.rank();
    let mut out = vec![R::zero(); 2 * n];
    for (b, c) in x.terms() {
        if b.len() != 1 {
            return None;
        }
        out[b.0.trailing_zeros() as usize] = c.clone();
    }
    Some(out)
}

/// Matrix of `v ↦ a v σ(a)` for a spin element `a`.
pub fn chi<R: Ring>(a: &CliffordElement<R>) -> Result<Matrix<R>> {
    if !a.is_even() {
        return Err(Error::NotInSpin("element is not even".into()));
    }
    let n = a.rank();
    let ar = a.reverse();
    if !a.mul(&ar).is_one() {
        return Err(Error::NotInSpin("element is not unitary".into()));
    }
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for k in 0..2 * n {
        let img = a.mul(&CliffordElement::letter(n, k)).mul(&ar);
        let col = as_vector(&img).ok_or_else(|| Error::NotInSpin("does not normalise V".into()))?;
        for (p, c) in col.into_iter().enumerate() {
            m.set(p, k, c);
        }
    }
    Ok(m)
}

pub fn is_spin<R: Ring>(a: &CliffordElement<R>) -> bool {
    chi(a).is_ok()
}

/// `g` with `auto(X) = g X g⁻¹`, normalised so that its first nonzero entry is one when that
/// entry is a unit. `auto` maps matrix units to matrices in row-major coordinates.
pub fn inner_rep<R: Ring>(d: usize, auto: &LinearMap<R>) -> Result<Matrix<R>> {
    let image = |i: usize, j: usize| -> Matrix<R> {
        let mut m = Matrix::zeros(d, d);
        for (p, c) in auto.column(i * d + j) {
            m.set(p / d, p % d, c.clone());
        }
        m
    };
    let p11 = image(0, 0);
    let c = (0..d)
        .map(|k| p11.column(k))
        .find(|col| col.iter().any(|x| !x.is_zero()))
        .ok_or_else(|| Error::NoInnerRep("image of E11 vanishes".into()))?;
    let mut g = Matrix::zeros(d, d);
    for i in 0..d {
        let col = image(i, 0).apply(&c);
        for (p, x) in col.into_iter().enumerate() {
            g.set(p, i, x);
        }
    }
    if let Some(lead) = g.entries().iter().find(|x| !x.is_zero()) {
        if let Some(inv) = lead.try_inverse() {
            g = g.scale(&inv);
        }
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = g.mul(&Matrix::unit(d, i, j));
            let rhs = image(i, j).mul(&g);
            if lhs != rhs {
                return Err(Error::NoInnerRep(format!("mismatch at E{}{}", i + 1, j + 1)));
            }
        }
    }
    Ok(g)
}

/// Equality in `PGO`: `A = λ B` for a unit scalar `λ`.
pub fn pgo_equal<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> bool {
    if a == b {
        return true;
    }
    let pos = b.entries().iter().position(|x| x.try_inverse().is_some());
    match pos {
        Some(p) => {
            let (i, j) = (p / b.cols(), p % b.cols());
            let lambda = a.get(i, j).times(&b.get(i, j).try_inverse().expect("unit"));
            lambda.try_inverse().is_some() && b.scale(&lambda) == *a
        }
        None => b.neg() == *a,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{v, vstar};
    use crate::scalar::Scalar;

    type C = CliffordElement<Scalar>;

    fn t() -> Scalar {
        Scalar::var("t")
    }

    #[test]
    fn semitrace_witnesses_agree() {
        let s = Matrix::from_fn(8, 8, |i, j| Scalar::int(((i * 3 + j * 5) % 7) as i64));
        let sym = s.add(&sigma_apply(&s));
        let a = semitrace_with(&sym, SemitraceWitness::Half).unwrap();
        let b = semitrace_with(&sym, SemitraceWitness::Projection).unwrap();
        assert_eq!(a, b);
        assert!(semitrace(&Matrix::<Scalar>::unit(8, 0, 1)).is_err());
    }

    #[test]
    fn chi_of_unipotent_generator() {
        let n = 4;
        // 1 + t v1 v2*
        let a = C::one(n).add(&C::word(n, &[v(n, 1), vstar(n, 2)]).scale(&t()));
        let m = chi(&a).unwrap();
        // I + t (E12 - E78)
        let expected = Matrix::identity(8)
            .add(&Matrix::unit(8, 0, 1).scale(&t()))
            .sub(&Matrix::unit(8, 6, 7).scale(&t()));
        assert_eq!(m, expected);
        assert!(is_orthogonal(&m));
        assert!(is_proper(&m).unwrap());
    }

    #[test]
    fn chi_rejects_odd_and_non_unitary() {
        let n = 4;
        assert!(chi(&C::letter(n, 0)).is_err());
        assert!(chi(&C::scalar(n, Scalar::int(2))).is_err());
    }

    #[test]
    fn inner_rep_recovers_conjugator() {
        let d = 4;
        let g = Matrix::from_fn(d, d, |i, j| {
            if i == j {
                Rational::one()
            } else if j == i + 1 {
                Rational::from(2)
            } else {
                Rational::zero()
            }
        });
        let ginv = crate::linalg::inverse(&g).unwrap();
        let cols = (0..d * d)
            .map(|k| {
                let e: Matrix<Rational> = Matrix::unit(d, k / d, k % d);
                let img = g.mul(&e).mul(&ginv);
                img.entries().iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        let auto = LinearMap::from_columns(d * d, cols);
        let h = inner_rep(d, &auto).unwrap();
        assert!(pgo_equal(&h, &g));
    }

    #[test]
    fn pgo_equality_up_to_sign() {
        let a: Matrix<Scalar> = Matrix::identity(8);
        assert!(pgo_equal(&a.neg(), &a));
        assert!(!pgo_equal(&a.scale(&t().plus(&Scalar::one())), &a));
    }
}
