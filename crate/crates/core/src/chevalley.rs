//! Roots of type `D_n` and Chevalley generators in `Spin(H(V))` and `O⁺(H(V))`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::clifford::{vstar, v, CliffordElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::quadtriple::orthogonal_inverse;
use crate::ring::Ring;
use crate::scalar::Rational;

/// Root `si·e_i + sj·e_j` with `i < j` (1-based) and signs `±1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    pub i: u8,
    pub j: u8,
    pub si: i8,
    pub sj: i8,
}

impl Root {
    pub fn new(i: usize, si: i8, j: usize, sj: i8) -> Result<Root> {
        if i == j || i == 0 || j == 0 || si.abs() != 1 || sj.abs() != 1 {
            return Err(Error::UnknownRoot(format!("({si})e{i} + ({sj})e{j}")));
        }
        let (i, si, j, sj) = if i < j { (i, si, j, sj) } else { (j, sj, i, si) };
        Ok(Root { i: i as u8, j: j as u8, si, sj })
    }

    pub fn coords(&self, n: usize) -> Vec<i8> {
        let mut c = vec![0; n];
        c[self.i as usize - 1] = self.si;
        c[self.j as usize - 1] = self.sj;
        c
    }

    pub fn from_coords(c: &[i8]) -> Option<Root> {
        let nz: Vec<(usize, i8)> =
            c.iter().enumerate().filter(|(_, x)| **x != 0).map(|(k, x)| (k + 1, *x)).collect();
        match nz.as_slice() {
            [(i, si), (j, sj)] if si.abs() == 1 && sj.abs() == 1 => Root::new(*i, *si, *j, *sj).ok(),
            _ => None,
        }
    }

    pub fn neg(&self) -> Root {
        Root { i: self.i, j: self.j, si: -self.si, sj: -self.sj }
    }

    pub fn max_index(&self) -> usize {
        self.j as usize
    }

    /// `α + β` when it is a root.
    pub fn add(&self, other: &Root, n: usize) -> Option<Root> {
        let c: Vec<i8> = self.coords(n).iter().zip(other.coords(n)).map(|(a, b)| a + b).collect();
        Root::from_coords(&c)
    }

    pub fn inner(&self, other: &Root, n: usize) -> i32 {
        self.coords(n).iter().zip(other.coords(n)).map(|(a, b)| (*a as i32) * (b as i32)).sum()
    }

    /// Normal-ordered letter pair of the spin generator.
    fn letters(&self, n: usize) -> [usize; 2] {
        let (i, j) = (self.i as usize, self.j as usize);
        match (self.si, self.sj) {
            (1, -1) => [v(n, i), vstar(n, j)],
            (-1, 1) => [v(n, j), vstar(n, i)],
            (1, 1) => [v(n, i), v(n, j)],
            _ => [vstar(n, j), vstar(n, i)],
        }
    }

    /// Nilpotent `N_α` with `x_α(t) = I + t N_α`, as two signed 1-based positions.
    fn nilpotent_entries(&self, n: usize) -> [((usize, usize), i64); 2] {
        let (i, j) = (self.i as usize, self.j as usize);
        let bar = |k: usize| 2 * n + 1 - k;
        match (self.si, self.sj) {
            (1, -1) => [((i, j), 1), ((bar(j), bar(i)), -1)],
            (-1, 1) => [((j, i), 1), ((bar(i), bar(j)), -1)],
            (1, 1) => [((i, bar(j)), 1), ((j, bar(i)), -1)],
            _ => [((bar(j), i), 1), ((bar(i), j), -1)],
        }
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let n = self.max_index().max(other.max_index());
        self.coords(n).cmp(&other.coords(n))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: i8| if x > 0 { "+" } else { "-" };
        if self.si > 0 {
            write!(f, "e{}{}e{}", self.i, s(self.sj), self.j)
        } else {
            write!(f, "-e{}{}e{}", self.i, s(self.sj), self.j)
        }
    }
}

impl FromStr for Root {
    type Err = Error;
    fn from_str(s: &str) -> Result<Root> {
        let bad = || Error::UnknownRoot(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('\u{2212}', "-");
        let mut parts: Vec<(i8, usize)> = Vec::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let (sign, r) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if parts.is_empty() => (1, rest),
                _ => return Err(bad()),
            };
            let r = r.strip_prefix('e').ok_or_else(bad)?;
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            let idx: usize = r[..end].parse().map_err(|_| bad())?;
            parts.push((sign, idx));
            rest = &r[end..];
        }
        match parts.as_slice() {
            [(si, i), (sj, j)] => Root::new(*i, *si, *j, *sj).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// All roots of `D_n`, in lexicographic order of coordinate vectors.
pub fn roots(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for si in [1, -1] {
                for sj in [1, -1] {
                    out.push(Root::new(i, si, j, sj).expect("valid root"));
                }
            }
        }
    }
    out.sort_by_key(|r| r.coords(n));
    out
}

/// Simple system `{e2+e4, e3−e4, e1−e3, −e1−e3}` of `D_4`.
pub fn simple_system() -> [Root; 4] {
    ["e2+e4", "e3-e4", "e1-e3", "-e1-e3"].map(|s| s.parse().expect("simple root"))
}

fn check_rank(alpha: &Root, n: usize) -> Result<()> {
    if alpha.max_index() > n {
        Err(Error::UnknownRoot(format!("{alpha} in rank {n}")))
    } else {
        Ok(())
    }
}

/// `X_α(t) ∈ Spin`.
pub fn spin_gen<R: Ring>(alpha: &Root, t: &R, n: usize) -> Result<CliffordElement<R>> {
    check_rank(alpha, n)?;
    let w = CliffordElement::word(n, &alpha.letters(n));
    Ok(CliffordElement::one(n).add(&w.scale(t)))
}

/// `N_α`.
pub fn nilpotent<R: Ring>(alpha: &Root, n: usize) -> Result<Matrix<R>> {
    check_rank(alpha, n)?;
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for ((a, b), s) in alpha.nilpotent_entries(n) {
        m.set(a - 1, b - 1, R::from_i64(s));
    }
    Ok(m)
}

/// `x_α(t) ∈ O⁺`.
pub fn oplus_gen<R: Ring>(alpha: &Root, t: &R, n: usize) -> Result<Matrix<R>> {
    Ok(Matrix::identity(2 * n).add(&nilpotent(alpha, n)?.scale(t)))
}

fn unit_inverse<R: Ring>(t: &R) -> Result<R> {
    t.try_inverse()
        .ok_or_else(|| Error::Domain(format!("parameter `{t}` is not invertible")))
}

/// Which group a generator lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Spin,
    Oplus,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GroupElement<R: Ring> {
    Spin(CliffordElement<R>),
    Oplus(Matrix<R>),
}

impl<R: Ring> GroupElement<R> {
    pub fn mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (GroupElement::Spin(a), GroupElement::Spin(b)) => Ok(GroupElement::Spin(a.mul(b))),
            (GroupElement::Oplus(a), GroupElement::Oplus(b)) => Ok(GroupElement::Oplus(a.mul(b))),
            _ => Err(Error::Domain("cannot multiply elements of different groups".into())),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        match self {
            GroupElement::Spin(a) => Ok(GroupElement::Spin(a.unitary_inverse()?)),
            GroupElement::Oplus(a) => Ok(GroupElement::Oplus(orthogonal_inverse(a)?)),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Spin(a) => a.is_one(),
            GroupElement::Oplus(a) => a.is_identity(),
        }
    }
}

pub fn generator<R: Ring>(alpha: &Root, t: &R, n: usize, g: Group) -> Result<GroupElement<R>> {
    Ok(match g {
        Group::Spin => GroupElement::Spin(spin_gen(alpha, t, n)?),
        Group::Oplus => GroupElement::Oplus(oplus_gen(alpha, t, n)?),
    })
}

/// `w_α(t) = x_α(t) x_{−α}(−t⁻¹) x_α(t)`.
pub fn w_element<R: Ring>(alpha: &Root, t: &R, n: usize, g: Group) -> Result<GroupElement<R>> {
    let tinv = unit_inverse(t)?;
    let a = generator(alpha, t, n, g)?;
    let b = generator(&alpha.neg(), &tinv.negate(), n, g)?;
    a.mul(&b)?.mul(&a)
}

/// `h_α(t) = w_α(t) w_α(−1)`.
pub fn h_element<R: Ring>(alpha: &Root, t: &R, n: usize, g: Group) -> Result<GroupElement<R>> {
    w_element(alpha, t, n, g)?.mul(&w_element(alpha, &R::one().negate(), n, g)?)
}

pub fn spin_w<R: Ring>(alpha: &Root, t: &R, n: usize) -> Result<CliffordElement<R>> {
    match w_element(alpha, t, n, Group::Spin)? {
        GroupElement::Spin(a) => Ok(a),
        GroupElement::Oplus(_) => unreachable!(),
    }
}

pub fn spin_h<R: Ring>(alpha: &Root, t: &R, n: usize) -> Result<CliffordElement<R>> {
    match h_element(alpha, t, n, Group::Spin)? {
        GroupElement::Spin(a) => Ok(a),
        GroupElement::Oplus(_) => unreachable!(),
    }
}

pub fn oplus_w<R: Ring>(alpha: &Root, t: &R, n: usize) -> Result<Matrix<R>> {
    match w_element(alpha, t, n, Group::Oplus)? {
        GroupElement::Oplus(a) => Ok(a),
        GroupElement::Spin(_) => unreachable!(),
    }
}

pub fn oplus_h<R: Ring>(alpha: &Root, t: &R, n: usize) -> Result<Matrix<R>> {
    match h_element(alpha, t, n, Group::Oplus)? {
        GroupElement::Oplus(a) => Ok(a),
        GroupElement::Spin(_) => unreachable!(),
    }
}

/// `g1 g2 g1⁻¹ g2⁻¹`.
pub fn commutator<R: Ring>(g1: &GroupElement<R>, g2: &GroupElement<R>) -> Result<GroupElement<R>> {
    g1.mul(g2)?.mul(&g1.inverse()?)?.mul(&g2.inverse()?)
}

/// Reads `M` as `x_α(p)` when it has that shape.
pub fn identify_oplus_gen<R: Ring>(m: &Matrix<R>) -> Option<(Root, R)> {
    let d = m.rows();
    if d % 2 != 0 || !m.is_square() {
        return None;
    }
    let n = d / 2;
    let diff = m.sub(&Matrix::identity(d));
    let nz: Vec<usize> = (0..d * d).filter(|&p| !diff.entries()[p].is_zero()).collect();
    if nz.len() != 2 {
        return None;
    }
    for alpha in roots(n) {
        let [((a, b), s), _] = alpha.nilpotent_entries(n);
        let p = diff.get(a - 1, b - 1);
        if p.is_zero() {
            continue;
        }
        let p = p.scale_i64(s);
        if diff == nilpotent::<R>(&alpha, n).ok()?.scale(&p) {
            return Some((alpha, p));
        }
    }
    None
}

/// Reads `a` as `X_α(p)` when it has that shape.
pub fn identify_spin_gen<R: Ring>(a: &CliffordElement<R>) -> Option<(Root, R)> {
    let n = a.rank();
    let diff = a.sub(&CliffordElement::one(n));
    if diff.num_terms() != 1 {
        return None;
    }
    let (b, c) = diff.terms().next()?;
    roots(n).into_iter().find_map(|alpha| {
        let w = CliffordElement::<R>::word(n, &alpha.letters(n));
        let (wb, wc) = w.terms().next()?;
        (wb == b && w.num_terms() == 1).then(|| (alpha, c.times(wc)))
    })
}

/// Chevalley structure constant `N(α, β)` with `[x_α(s), x_β(t)] = x_{α+β}(N s t)`.
pub fn structure_constant(alpha: &Root, beta: &Root, n: usize, g: Group) -> Result<Option<i64>> {
    if alpha.add(beta, n).is_none() {
        return Ok(None);
    }
    let s = Rational::from(1);
    let c = commutator(&generator(alpha, &s, n, g)?, &generator(beta, &s, n, g)?)?;
    let (root, p) = match &c {
        GroupElement::Oplus(m) => identify_oplus_gen(m),
        GroupElement::Spin(a) => identify_spin_gen(a),
    }
    .ok_or_else(|| Error::Internal(format!("commutator of {alpha}, {beta} is not a root element")))?;
    if Some(root) != alpha.add(beta, n) {
        return Err(Error::Internal(format!("commutator of {alpha}, {beta} lands in {root}")));
    }
    Ok(p.to_i64())
}

/// `ζ = h_{e3−e4}(−1) h_{e3+e4}(−1)`.
pub fn zeta<R: Ring>() -> Result<CliffordElement<R>> {
    let m1 = R::one().negate();
    Ok(spin_h(&"e3-e4".parse()?, &m1, 4)?.mul(&spin_h(&"e3+e4".parse()?, &m1, 4)?))
}

/// Even elements commuting with every letter (the kernel of `χ` lies in their unit group).
pub fn even_commutant_of_letters(n: usize) -> Vec<CliffordElement<Rational>> {
    let basis = crate::clifford::even_basis(n);
    let dim = basis.len();
    let full = 1usize << (2 * n);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for k in 0..2 * n {
        let l = CliffordElement::<Rational>::letter(n, k);
        let mut block = vec![vec![Rational::zero(); dim]; full];
        for (j, b) in basis.iter().enumerate() {
            let m = CliffordElement::monomial(n, *b, Rational::one());
            for (bb, c) in l.mul(&m).sub(&m.mul(&l)).terms() {
                block[bb.0 as usize][j] = c.clone();
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    let sys = Matrix::from_rows(rows).expect("rectangular");
    linalg::kernel(&sys)
        .into_iter()
        .map(|v| {
            let coords: Vec<(usize, Rational)> =
                v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            CliffordElement::from_even_coords(n, &coords)
        })
        .collect()
}

/// `ker χ`, derived from the commutant: it is `{±1}` and `ζ = −1`.
pub fn kernel_chi_enumerate() -> Result<Vec<CliffordElement<Rational>>> {
    let comm = even_commutant_of_letters(4);
    if comm.len() != 1 || comm[0].num_terms() != 1 || comm[0].terms().any(|(b, _)| !b.is_empty()) {
        return Err(Error::Internal("commutant of the letters is not the scalars".into()));
    }
    // unitary scalars c satisfy c² = 1
    let one = CliffordElement::<Rational>::one(4);
    let z = zeta::<Rational>()?;
    if z != one.neg() {
        return Err(Error::Internal(format!("zeta = {z}")));
    }
    Ok(vec![one, z])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadtriple::{chi, is_orthogonal};
    use crate::scalar::Scalar;

    fn t() -> Scalar {
        Scalar::var("t")
    }

    #[test]
    fn twenty_four_roots() {
        let rs = roots(4);
        assert_eq!(rs.len(), 24);
        for r in &rs {
            assert_eq!(r.to_string().parse::<Root>().unwrap(), *r);
        }
        assert_eq!("e2-e1".parse::<Root>().unwrap().to_string(), "-e1+e2");
        assert!("e1".parse::<Root>().is_err());
        assert!("e1+e1".parse::<Root>().is_err());
    }

    #[test]
    fn chi_of_spin_gen_is_oplus_gen() {
        for r in roots(4) {
            let a = spin_gen(&r, &t(), 4).unwrap();
            assert_eq!(chi(&a).unwrap(), oplus_gen(&r, &t(), 4).unwrap(), "{r}");
            assert!(is_orthogonal(&oplus_gen(&r, &t(), 4).unwrap()));
        }
    }

    #[test]
    fn w_and_h_shapes() {
        let r: Root = "e1-e2".parse().unwrap();
        let w = oplus_w(&r, &Rational::one(), 4).unwrap();
        assert!(w.entries().iter().filter(|x| !x.is_zero()).count() == 8);
        // (v1, v2) block [[0, 1], [-1, 0]], (v2*, v1*) block [[0, -1], [1, 0]]
        assert!(w.get(0, 1).is_one() && w.get(1, 0) == &Rational::from(-1));
        assert!(w.get(7, 6).is_one() && w.get(6, 7) == &Rational::from(-1));
        assert!((2..6).all(|k| w.get(k, k).is_one()));
        let h = oplus_h(&r, &t(), 4).unwrap();
        let tinv = t().try_inverse().unwrap();
        let diag = [t(), tinv.clone(), Scalar::one(), Scalar::one(), Scalar::one(), Scalar::one(), t(), tinv];
        assert_eq!(h, Matrix::from_fn(8, 8, |i, j| if i == j { diag[i].clone() } else { Scalar::zero() }));
    }

    #[test]
    fn kernel_is_plus_minus_one() {
        let k = kernel_chi_enumerate().unwrap();
        assert_eq!(k.len(), 2);
        assert!(chi(&k[1]).unwrap().is_identity());
    }

    #[test]
    fn recogniser_roundtrip() {
        for r in roots(4) {
            let m = oplus_gen(&r, &t().negate(), 4).unwrap();
            assert_eq!(identify_oplus_gen(&m), Some((r, t().negate())));
            let a = spin_gen(&r, &t(), 4).unwrap();
            assert_eq!(identify_spin_gen(&a), Some((r, t())));
        }
    }
}
