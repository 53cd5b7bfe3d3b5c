//! Exterior algebra `∧(V)` and the Clifford representation `Φ: Cl(H(V)) → End(∧V)`.
//!
//! Subsets of `{1..n}` are bitmasks with bit `i-1` for `v_i`; the exterior basis is ordered by
//! size, then lexicographically.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use crate::clifford::{even_basis, Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::Rational;
use crate::sparse::LinearMap;

/// Subsets of `{1..n}` in exterior basis order.
pub fn ext_basis(n: usize) -> Vec<u16> {
    let mut v: Vec<u16> = (0..(1u16 << n)).collect();
    v.sort_by(|a, b| Blade(*a).cmp(&Blade(*b)));
    v
}

fn ext_index(n: usize) -> HashMap<u16, usize> {
    ext_basis(n).into_iter().enumerate().map(|(i, s)| (s, i)).collect()
}

fn below(set: u16, i: usize) -> u32 {
    (set & ((1u16 << i) - 1)).count_ones()
}

fn sign(parity: u32) -> i8 {
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Left wedge by `v_i` (0-based `i`) on a basis subset.
pub fn wedge_letter(i: usize, set: u16) -> Option<(u16, i8)> {
    if set & (1 << i) != 0 {
        None
    } else {
        Some((set | (1 << i), sign(below(set, i))))
    }
}

/// Contraction `d_{v_i*}` (0-based `i`) on a basis subset.
pub fn contract_letter(i: usize, set: u16) -> Option<(u16, i8)> {
    if set & (1 << i) == 0 {
        None
    } else {
        Some((set & !(1 << i), sign(below(set, i))))
    }
}

/// `Φ` of a single Clifford letter.
pub fn phi_letter(n: usize, k: usize, set: u16) -> Option<(u16, i8)> {
    if k < n {
        wedge_letter(k, set)
    } else {
        contract_letter(2 * n - 1 - k, set)
    }
}

/// `Φ` of a normal monomial, as a signed partial permutation of basis subsets.
pub fn phi_monomial(n: usize, b: Blade, set: u16) -> Option<(u16, i8)> {
    let letters: Vec<usize> = b.letters().collect();
    let mut cur = (set, 1i8);
    for &k in letters.iter().rev() {
        let (s, e) = phi_letter(n, k, cur.0)?;
        cur = (s, cur.1 * e);
    }
    Some(cur)
}

/// Matrix of `Φ(x)` on `∧V` (column `j` is the image of basis vector `j`).
pub fn phi_apply<R: Ring>(x: &CliffordElement<R>) -> Matrix<R> {
    let n = x.rank();
    let basis = ext_basis(n);
    let index = ext_index(n);
    let dim = basis.len();
    let mut m: Matrix<R> = Matrix::zeros(dim, dim);
    for (b, c) in x.terms() {
        for (j, &set) in basis.iter().enumerate() {
            if let Some((t, s)) = phi_monomial(n, *b, set) {
                let i = index[&t];
                let cur = m.get(i, j).plus(&c.scale_i64(s as i64));
                m.set(i, j, cur);
            }
        }
    }
    m
}

/// The `2^{2n} × 2^{2n}` coefficient matrix of `Φ` over the monomial basis.
pub fn phi_coefficient_matrix(n: usize) -> Matrix<Rational> {
    let dim = 1usize << n;
    let index = ext_index(n);
    let basis = ext_basis(n);
    let mut m = Matrix::zeros(dim * dim, 1 << (2 * n));
    for mono in 0..(1u16 << (2 * n)) {
        for (j, &set) in basis.iter().enumerate() {
            if let Some((t, s)) = phi_monomial(n, Blade(mono), set) {
                m.set(index[&t] * dim + j, mono as usize, Rational::from(s as i64));
            }
        }
    }
    m
}

pub fn phi_is_bijective(n: usize) -> bool {
    linalg::rank(&phi_coefficient_matrix(n)) == 1 << (2 * n)
}

/// Element of `∧V`.
#[derive(Clone, PartialEq, Debug)]
pub struct ExtElement<R> {
    rank: usize,
    terms: BTreeMap<u16, R>,
}

impl<R: Ring> ExtElement<R> {
    pub fn zero(rank: usize) -> Self {
        ExtElement { rank, terms: BTreeMap::new() }
    }

    pub fn basis(rank: usize, set: u16, c: R) -> Self {
        let mut e = Self::zero(rank);
        if !c.is_zero() {
            e.terms.insert(set, c);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeff(&self, set: u16) -> R {
        self.terms.get(&set).cloned().unwrap_or_else(R::zero)
    }

    fn insert(&mut self, set: u16, c: R) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(set).or_insert_with(R::zero);
        e.add_assign_ref(&c);
        if e.is_zero() {
            self.terms.remove(&set);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.insert(*s, c.clone());
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let inversions: u32 = (0..self.rank)
                    .filter(|i| b & (1 << i) != 0)
                    .map(|i| (a >> (i + 1)).count_ones())
                    .sum();
                out.insert(a | b, ca.times(cb).scale_i64(sign(inversions) as i64));
            }
        }
        out
    }

    /// Reverses the order of factors in each basis word.
    pub fn reversal(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for (s, c) in &self.terms {
            let k = s.count_ones();
            out.insert(*s, c.scale_i64(sign(k * k.saturating_sub(1) / 2) as i64));
        }
        out
    }

    /// Applies `Φ(x)`.
    pub fn act(&self, x: &CliffordElement<R>) -> Self {
        let mut out = Self::zero(self.rank);
        for (b, cx) in x.terms() {
            for (s, c) in &self.terms {
                if let Some((t, e)) = phi_monomial(self.rank, *b, *s) {
                    out.insert(t, cx.times(c).scale_i64(e as i64));
                }
            }
        }
        out
    }

    pub fn coords(&self) -> Vec<R> {
        ext_basis(self.rank).iter().map(|s| self.coeff(*s)).collect()
    }
}

impl<R: Ring> fmt::Display for ExtElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| {
                let w: Vec<String> =
                    (0..self.rank).filter(|i| s & (1 << i) != 0).map(|i| format!("v{}", i + 1)).collect();
                let w = if w.is_empty() { "1".to_string() } else { w.join("^") };
                format!("({c})*{w}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coefficient of `v1 ∧ … ∧ vn` in `reversal(x) ∧ y`.
pub fn b_wedge<R: Ring>(x: &ExtElement<R>, y: &ExtElement<R>) -> R {
    let top = (1u16 << x.rank) - 1;
    x.reversal().wedge(y).coeff(top)
}

fn set_of(items: &[usize]) -> u16 {
    items.iter().fold(0, |m, i| m | (1 << (i - 1)))
}

/// Signed ordered basis of `∧₀ V` for `n = 4`.
pub fn even_signed_basis() -> [(u16, i8); 8] {
    [
        (set_of(&[]), 1),
        (set_of(&[1, 2]), 1),
        (set_of(&[1, 3]), 1),
        (set_of(&[1, 4]), 1),
        (set_of(&[2, 3]), -1),
        (set_of(&[2, 4]), 1),
        (set_of(&[3, 4]), -1),
        (set_of(&[1, 2, 3, 4]), 1),
    ]
}

/// Signed ordered basis of `∧₁ V` for `n = 4`.
pub fn odd_signed_basis() -> [(u16, i8); 8] {
    [
        (set_of(&[2, 3, 4]), -1),
        (set_of(&[2]), 1),
        (set_of(&[3]), 1),
        (set_of(&[4]), 1),
        (set_of(&[1, 2, 3]), -1),
        (set_of(&[1, 2, 4]), 1),
        (set_of(&[1, 3, 4]), -1),
        (set_of(&[1]), -1),
    ]
}

/// Restriction of `Φ(x)` to `∧₀` and `∧₁` in the signed bases.
pub fn psi_apply<R: Ring>(x: &CliffordElement<R>) -> Result<(Matrix<R>, Matrix<R>)> {
    if x.rank() != 4 {
        return Err(Error::RankMismatch { expected: 4, found: x.rank() });
    }
    if !x.is_even() {
        return Err(Error::NotEven);
    }
    let m = phi_apply(x);
    let index = ext_index(4);
    let restrict = |basis: [(u16, i8); 8]| {
        Matrix::from_fn(8, 8, |k, j| {
            let (ik, sk) = basis[k];
            let (ij, sj) = basis[j];
            m.get(index[&ik], index[&ij]).scale_i64((sk * sj) as i64)
        })
    };
    Ok((restrict(even_signed_basis()), restrict(odd_signed_basis())))
}

/// Pair of 8×8 matrices flattened to 128 coordinates (row-major, first factor first).
pub fn pair_coords<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Vec<(usize, R)> {
    a.entries()
        .iter()
        .chain(b.entries())
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn pair_from_coords<R: Ring>(v: &[(usize, R)]) -> (Matrix<R>, Matrix<R>) {
    let mut a = Matrix::zeros(8, 8);
    let mut b = Matrix::zeros(8, 8);
    for (i, x) in v {
        if *i < 64 {
            a.set(i / 8, i % 8, x.clone());
        } else {
            b.set((i - 64) / 8, (i - 64) % 8, x.clone());
        }
    }
    (a, b)
}

/// `Ψ` as a linear map from even-monomial coordinates to pair coordinates.
pub fn psi_map() -> &'static LinearMap<Rational> {
    static MAP: OnceLock<LinearMap<Rational>> = OnceLock::new();
    MAP.get_or_init(|| {
        let cols = even_basis(4)
            .iter()
            .map(|b| {
                let x = CliffordElement::monomial(4, *b, Rational::one());
                let (p, q) = psi_apply(&x).expect("even rank-4 monomial");
                pair_coords(&p, &q)
            })
            .collect();
        LinearMap::from_columns(128, cols)
    })
}

/// Exact inverse of [`psi_map`], computed once.
pub fn psi_inverse_map() -> &'static LinearMap<Rational> {
    static MAP: OnceLock<LinearMap<Rational>> = OnceLock::new();
    MAP.get_or_init(|| {
        let dense = psi_map().to_dense();
        let inv = linalg::inverse(&dense).expect("Psi is an isomorphism");
        LinearMap::from_dense(&inv)
    })
}

pub fn psi_inverse<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> CliffordElement<R> {
    let v = pair_coords(a, b);
    let mut acc = crate::sparse::Accumulator::new(128);
    let inv = psi_inverse_map();
    for (j, c) in &v {
        for (i, q) in inv.column(*j) {
            acc.add(*i, c.times(&R::from_rational(q)));
        }
    }
    CliffordElement::from_even_coords(4, &acc.drain())
}

/// The central idempotent `z` with `Ψ(z) = (I, 0)`.
pub fn center_idempotent() -> CliffordElement<Rational> {
    psi_inverse(&Matrix::identity(8), &Matrix::zeros(8, 8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{v, vstar};

    type C = CliffordElement<Rational>;

    #[test]
    fn phi_is_an_algebra_map_on_letters() {
        let n = 3;
        for a in 0..2 * n {
            for b in 0..2 * n {
                let x = C::letter(n, a);
                let y = C::letter(n, b);
                assert_eq!(phi_apply(&x.mul(&y)), phi_apply(&x).mul(&phi_apply(&y)));
            }
        }
    }

    #[test]
    fn phi_bijective_small_ranks() {
        for n in 1..=3 {
            assert!(phi_is_bijective(n), "rank {n}");
        }
    }

    #[test]
    fn psi_of_one_is_identity_pair() {
        let (a, b) = psi_apply(&C::one(4)).unwrap();
        assert!(a.is_identity() && b.is_identity());
        assert_eq!(psi_map().cols(), 128);
    }

    #[test]
    fn psi_rejects_odd_elements() {
        assert_eq!(psi_apply(&C::letter(4, v(4, 1))), Err(Error::NotEven));
    }

    #[test]
    fn inverse_roundtrip_on_monomials() {
        let x = C::word(4, &[v(4, 1), vstar(4, 2)]);
        let (a, b) = psi_apply(&x).unwrap();
        assert_eq!(psi_inverse(&a, &b), x);
        let z = center_idempotent();
        assert_eq!(z.mul(&z), z);
    }

    #[test]
    fn b_wedge_pairs_complements() {
        let n = 4;
        let one = ExtElement::basis(n, 0, Rational::one());
        let top = ExtElement::basis(n, 0b1111, Rational::one());
        assert_eq!(b_wedge(&one, &top), Rational::one());
        let a = ExtElement::basis(n, 0b0011, Rational::one());
        assert!(b_wedge(&a, &a).is_zero());
    }

    #[test]
    fn phi_is_adjoint_for_b_wedge() {
        // b(Φ(x)u, w) = b(u, Φ(σ(x))w) on basis vectors
        let n = 3;
        let basis = ext_basis(n);
        for k in 0..2 * n {
            let x = C::letter(n, k);
            let xr = x.reverse();
            for &s in &basis {
                for &t in &basis {
                    let u = ExtElement::basis(n, s, Rational::one());
                    let w = ExtElement::basis(n, t, Rational::one());
                    assert_eq!(b_wedge(&u.act(&x), &w), b_wedge(&u, &w.act(&xr)));
                }
            }
        }
    }
}
