//! Clifford algebra of the hyperbolic space `H(V)`, `dim V = n`.
//!
//! Letters are indexed `0..2n` in the order `v1 < … < vn < vn* < … < v1*`;
//! `v_i` is letter `i - 1`, `v_i*` is letter `2n - i` and is written `wi` in text.
//! A normal monomial is a strictly increasing word, stored as a bitmask.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::parse::{parse_all, ParseTarget};
use crate::ring::Ring;
use crate::scalar::{Rational, Scalar};

pub const MAX_RANK: usize = 5;

/// Normal monomial as a set of letters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Blade(pub u16);

impl Blade {
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn letters(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |k| self.0 & (1 << k) != 0)
    }

    pub fn contains(self, k: usize) -> bool {
        self.0 & (1 << k) != 0
    }
}

// Shorter words first, then lexicographic on the increasing letter sequence.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let x = self.0 ^ other.0;
            if x == 0 {
                Ordering::Equal
            } else if self.0 & (x & x.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Index of the dual letter.
pub fn dual(n: usize, k: usize) -> usize {
    2 * n - 1 - k
}

/// Letter index of `v_i` (1-based `i`).
pub fn v(n: usize, i: usize) -> usize {
    debug_assert!(i >= 1 && i <= n);
    let _ = n;
    i - 1
}

/// Letter index of `v_i*`.
pub fn vstar(n: usize, i: usize) -> usize {
    debug_assert!(i >= 1 && i <= n);
    2 * n - i
}

pub fn letter_name(n: usize, k: usize) -> String {
    if k < n {
        format!("v{}", k + 1)
    } else {
        format!("w{}", 2 * n - k)
    }
}

fn parse_letter(n: usize, name: &str) -> Option<usize> {
    let (head, tail) = name.split_at(1);
    let i: usize = tail.parse().ok()?;
    if i == 0 || i > n {
        return None;
    }
    match head {
        "v" => Some(v(n, i)),
        "w" => Some(vstar(n, i)),
        _ => None,
    }
}

pub fn is_letter_name(name: &str) -> bool {
    name.len() >= 2
        && (name.starts_with('v') || name.starts_with('w'))
        && name[1..].chars().all(|c| c.is_ascii_digit())
}

type Terms = SmallVec<[(u16, i32); 4]>;

/// `M · L` for a normal monomial `M` and a single letter `L`.
fn right_mul_letter(n: usize, m: u16, l: usize, out: &mut Terms, coeff: i32) {
    let d = dual(n, l);
    let above = |k: usize| (m >> (k + 1)).count_ones();
    if d > l && m & (1 << d) != 0 {
        let s = if above(d) % 2 == 0 { coeff } else { -coeff };
        out.push((m & !(1 << d), s));
    }
    if m & (1 << l) == 0 {
        let s = if above(l) % 2 == 0 { coeff } else { -coeff };
        out.push((m | (1 << l), s));
    }
}

fn mono_mul_raw(n: usize, a: u16, b: u16) -> Terms {
    let mut cur: Terms = smallvec![(a, 1)];
    for l in Blade(b).letters() {
        let mut next: Terms = SmallVec::new();
        for &(m, c) in &cur {
            right_mul_letter(n, m, l, &mut next, c);
        }
        next.sort_unstable_by_key(|t| t.0);
        let mut merged: Terms = SmallVec::new();
        for (m, c) in next {
            match merged.last_mut() {
                Some((pm, pc)) if *pm == m => *pc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|t| t.1 != 0);
        cur = merged;
        if cur.is_empty() {
            break;
        }
    }
    cur
}

fn rank4_table() -> &'static Vec<Terms> {
    static TABLE: OnceLock<Vec<Terms>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(1 << 16);
        for a in 0..256u16 {
            for b in 0..256u16 {
                t.push(mono_mul_raw(4, a, b));
            }
        }
        t
    })
}

/// Product of two normal monomials as signed normal monomials.
pub fn mono_mul(n: usize, a: u16, b: u16) -> Terms {
    if n == 4 {
        rank4_table()[((a as usize) << 8) | b as usize].clone()
    } else {
        mono_mul_raw(n, a, b)
    }
}

/// Forces the cached rank-4 product table and returns its number of entries.
pub fn product_table_size() -> usize {
    rank4_table().len()
}

/// Reversal of a normal monomial, renormalised.
pub fn mono_reverse(n: usize, m: u16) -> Terms {
    let mut cur: Terms = smallvec![(0, 1)];
    let letters: Vec<usize> = Blade(m).letters().collect();
    for &l in letters.iter().rev() {
        let mut next: Terms = SmallVec::new();
        for &(w, c) in &cur {
            for (p, s) in mono_mul(n, w, 1 << l) {
                next.push((p, s * c));
            }
        }
        cur = next;
    }
    let mut acc: BTreeMap<u16, i32> = BTreeMap::new();
    for (m, c) in cur {
        *acc.entry(m).or_default() += c;
    }
    acc.into_iter().filter(|t| t.1 != 0).collect()
}

fn reverse_cached(n: usize, m: u16) -> Terms {
    static TABLE: OnceLock<Vec<Terms>> = OnceLock::new();
    if n == 4 {
        TABLE.get_or_init(|| (0..256u16).map(|m| mono_reverse(4, m)).collect())[m as usize].clone()
    } else {
        mono_reverse(n, m)
    }
}

/// Element of `Cl(H(V))` with coefficients in `R`.
#[derive(Clone, PartialEq, Debug)]
pub struct CliffordElement<R = Scalar> {
    rank: usize,
    terms: BTreeMap<Blade, R>,
}

impl<R: Ring> CliffordElement<R> {
    pub fn zero(rank: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&rank), "rank out of range");
        CliffordElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, R::one())
    }

    pub fn scalar(rank: usize, c: R) -> Self {
        Self::monomial(rank, Blade(0), c)
    }

    pub fn monomial(rank: usize, b: Blade, c: R) -> Self {
        let mut e = Self::zero(rank);
        if !c.is_zero() {
            e.terms.insert(b, c);
        }
        e
    }

    pub fn letter(rank: usize, k: usize) -> Self {
        Self::monomial(rank, Blade(1 << k), R::one())
    }

    /// Product of letters in the given order.
    pub fn word(rank: usize, letters: &[usize]) -> Self {
        letters
            .iter()
            .fold(Self::one(rank), |acc, &k| acc.mul(&Self::letter(rank, k)))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: Blade) -> R {
        self.terms.get(&b).cloned().unwrap_or_else(R::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Blade(0)).is_some_and(|c| c.is_one())
    }

    fn insert(&mut self, b: Blade, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) {
        assert_eq!(self.rank, other.rank, "rank mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_rank(other);
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.insert(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.negate())
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = Self::zero(self.rank);
        for (b, c) in &self.terms {
            out.insert(*b, c.times(s));
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> CliffordElement<S> {
        let mut out = CliffordElement::zero(self.rank);
        for (b, c) in &self.terms {
            out.insert(*b, f(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_rank(other);
        let n = self.rank;
        let mut acc: HashMap<u16, R> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let prod = mono_mul(n, a.0, b.0);
                if prod.is_empty() {
                    continue;
                }
                let c = ca.times(cb);
                for (m, s) in prod {
                    let term = c.scale_i64(s as i64);
                    match acc.get_mut(&m) {
                        Some(x) => x.add_assign_ref(&term),
                        None => {
                            acc.insert(m, term);
                        }
                    }
                }
            }
        }
        let mut out = Self::zero(n);
        for (m, c) in acc {
            if !c.is_zero() {
                out.terms.insert(Blade(m), c);
            }
        }
        out
    }

    /// The reversal anti-automorphism fixing every letter.
    pub fn reverse(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for (b, c) in &self.terms {
            for (m, s) in reverse_cached(self.rank, b.0) {
                out.insert(Blade(m), c.scale_i64(s as i64));
            }
        }
        out
    }

    pub fn grade_projection(&self, k: u32) -> Self {
        let mut out = Self::zero(self.rank);
        for (b, c) in &self.terms {
            if b.len() == k {
                out.terms.insert(*b, c.clone());
            }
        }
        out
    }

    pub fn even_part(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for (b, c) in &self.terms {
            if b.len() % 2 == 0 {
                out.terms.insert(*b, c.clone());
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.len() % 2 == 0)
    }

    pub fn is_homogeneous_odd(&self) -> bool {
        self.terms.keys().all(|b| b.len() % 2 == 1)
    }

    /// Inverse of a unitary element (`a σ(a) = σ(a) a = 1`), which is its reversal.
    pub fn unitary_inverse(&self) -> Result<Self> {
        let r = self.reverse();
        if self.mul(&r).is_one() && r.mul(self).is_one() {
            Ok(r)
        } else {
            Err(Error::NotUnitary)
        }
    }

    /// `a x a⁻¹` for a unitary `a`.
    pub fn conjugate(&self, x: &Self) -> Result<Self> {
        Ok(self.mul(x).mul(&self.unitary_inverse()?))
    }

    /// Coordinates in the even basis (see [`even_basis`]).
    pub fn even_coords(&self) -> Result<Vec<(usize, R)>> {
        let idx = even_index(self.rank);
        self.terms
            .iter()
            .map(|(b, c)| idx.get(&b.0).map(|&i| (i, c.clone())).ok_or(Error::NotEven))
            .collect()
    }

    pub fn from_even_coords(rank: usize, coords: &[(usize, R)]) -> Self {
        let basis = even_basis(rank);
        let mut out = Self::zero(rank);
        for (i, c) in coords {
            out.insert(basis[*i], c.clone());
        }
        out
    }

    /// Coordinates in the full monomial basis indexed by mask.
    pub fn full_coords(&self) -> Vec<(usize, R)> {
        self.terms.iter().map(|(b, c)| (b.0 as usize, c.clone())).collect()
    }
}

impl CliffordElement<Scalar> {
    pub fn eval(&self, values: &HashMap<String, Rational>) -> Result<CliffordElement<Rational>> {
        let mut out = CliffordElement::zero(self.rank);
        for (b, c) in &self.terms {
            out.insert(*b, c.eval(values)?);
        }
        Ok(out)
    }

    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let p: ParsedClifford = parse_all(s)?;
        p.resolve(rank)
    }
}

impl CliffordElement<Rational> {
    pub fn to_scalar(&self) -> CliffordElement<Scalar> {
        self.map(|q| Scalar::constant(q.clone()))
    }
}

/// Even normal monomials in increasing order.
pub fn even_basis(n: usize) -> &'static [Blade] {
    static CACHE: OnceLock<Vec<Vec<Blade>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=MAX_RANK)
            .map(|n| {
                let mut v: Vec<Blade> =
                    (0..(1u32 << (2 * n))).map(|m| Blade(m as u16)).filter(|b| b.len() % 2 == 0).collect();
                v.sort();
                v
            })
            .collect()
    })[n]
}

fn even_index(n: usize) -> &'static HashMap<u16, usize> {
    static CACHE: OnceLock<Vec<HashMap<u16, usize>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=MAX_RANK)
            .map(|n| even_basis(n).iter().enumerate().map(|(i, b)| (b.0, i)).collect())
            .collect()
    })[n]
}

pub fn blade_name(n: usize, b: Blade) -> String {
    if b.is_empty() {
        return "1".into();
    }
    b.letters().map(|k| letter_name(n, k)).collect::<Vec<_>>().join("*")
}

impl<R: Ring> fmt::Display for CliffordElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let simple = !cs[1..].contains(['+', '-']);
            let (neg, body) = if simple && cs.starts_with('-') {
                (true, cs[1..].to_string())
            } else if simple {
                (false, cs)
            } else {
                (false, format!("({cs})"))
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if b.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", blade_name(self.rank, *b))?;
            } else {
                write!(f, "{body}*{}", blade_name(self.rank, *b))?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> Serialize for CliffordElement<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parse tree for Clifford text: ordered words with scalar coefficients.
#[derive(Clone)]
struct ParsedClifford {
    terms: Vec<(Scalar, Vec<String>)>,
}

impl ParseTarget for ParsedClifford {
    fn number(q: Rational) -> Self {
        ParsedClifford { terms: vec![(Scalar::constant(q), vec![])] }
    }
    fn ident(name: &str, exp: i32) -> Result<Self> {
        if is_letter_name(name) {
            if exp < 0 {
                return Err(Error::Parse(format!("negative power of letter `{name}`")));
            }
            Ok(ParsedClifford { terms: vec![(Scalar::one(), vec![name.to_string(); exp as usize])] })
        } else {
            Ok(ParsedClifford { terms: vec![(Scalar::ident(name, exp)?, vec![])] })
        }
    }
    fn add(mut self, other: Self) -> Self {
        self.terms.extend(other.terms);
        self
    }
    fn mul(self, other: Self) -> Self {
        let mut terms = Vec::new();
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                terms.push((c1.mul_ref(c2), w));
            }
        }
        ParsedClifford { terms }
    }
    fn neg(self) -> Self {
        ParsedClifford { terms: self.terms.into_iter().map(|(c, w)| (c.neg_ref(), w)).collect() }
    }
}

impl ParsedClifford {
    fn resolve(self, rank: usize) -> Result<CliffordElement<Scalar>> {
        let mut out = CliffordElement::zero(rank);
        for (c, word) in self.terms {
            let letters = word
                .iter()
                .map(|w| parse_letter(rank, w).ok_or_else(|| Error::Parse(format!("unknown letter `{w}` in rank {rank}"))))
                .collect::<Result<Vec<_>>>()?;
            out = out.add(&CliffordElement::word(rank, &letters).scale(&c));
        }
        Ok(out)
    }
}

impl FromStr for CliffordElement<Scalar> {
    type Err = Error;
    /// Parses in rank 4.
    fn from_str(s: &str) -> Result<Self> {
        CliffordElement::parse(4, s)
    }
}

/// Basis of the center of the even subalgebra, found by solving the commutant equations.
pub fn center_of_even_basis(n: usize) -> Vec<CliffordElement<Rational>> {
    let basis = even_basis(n);
    let gens: Vec<CliffordElement<Rational>> = (0..2 * n)
        .flat_map(|a| (a + 1..2 * n).map(move |b| (a, b)))
        .map(|(a, b)| CliffordElement::word(n, &[a, b]))
        .collect();
    let dim = basis.len();
    let index = even_index(n);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in &gens {
        let mut block = vec![vec![Rational::zero(); dim]; dim];
        for (j, b) in basis.iter().enumerate() {
            let m: CliffordElement<Rational> = CliffordElement::monomial(n, *b, Rational::one());
            let comm = g.mul(&m).sub(&m.mul(g));
            for (bb, c) in comm.terms() {
                block[index[&bb.0]][j] = c.clone();
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    if rows.is_empty() {
        rows.push(vec![Rational::zero(); dim]);
    }
    let sys = Matrix::from_rows(rows).expect("rectangular system");
    linalg::kernel(&sys)
        .into_iter()
        .map(|v| {
            let coords: Vec<(usize, Rational)> =
                v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            CliffordElement::from_even_coords(n, &coords)
        })
        .collect()
}

/// A nontrivial idempotent of the (two-dimensional) center of the even subalgebra.
pub fn central_idempotent(n: usize) -> Result<CliffordElement<Rational>> {
    let basis = center_of_even_basis(n);
    if basis.len() != 2 {
        return Err(Error::Internal(format!("center has dimension {}", basis.len())));
    }
    let one = CliffordElement::<Rational>::one(n);
    let u = basis
        .iter()
        .find(|b| b.sub(&one.scale(&b.coeff(Blade(0)))).num_terms() > 0)
        .map(|b| b.sub(&one.scale(&b.coeff(Blade(0)))))
        .ok_or_else(|| Error::Internal("center is scalar".into()))?;
    // u² = a + b u for rationals a, b; the idempotents are (u - r2)/(r1 - r2).
    let sq = u.mul(&u);
    let lead = *u.terms().next().expect("nonzero").0;
    let b = sq.coeff(lead) / u.coeff(lead);
    let rest = sq.sub(&u.scale(&b));
    if rest.num_terms() > 1 || rest.terms().any(|(bl, _)| !bl.is_empty()) {
        return Err(Error::Internal("center generator is not quadratic".into()));
    }
    let a = rest.coeff(Blade(0));
    let disc = &(&b * &b) + &(&Rational::from(4) * &a);
    let root = disc
        .sqrt_exact()
        .ok_or_else(|| Error::Internal("center is not split".into()))?;
    let r1 = &(&b + &root) / &Rational::from(2);
    let r2 = &(&b - &root) / &Rational::from(2);
    let z = u
        .sub(&one.scale(&r2))
        .scale(&(&r1 - &r2).recip().expect("distinct roots"));
    debug_assert_eq!(z.mul(&z), z);
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = CliffordElement<Rational>;

    #[test]
    fn defining_relations() {
        for n in 1..=MAX_RANK {
            for i in 1..=n {
                let a = C::letter(n, v(n, i));
                let b = C::letter(n, vstar(n, i));
                assert!(a.mul(&a).is_zero());
                assert!(b.mul(&b).is_zero());
                assert!(a.mul(&b).add(&b.mul(&a)).is_one());
                for j in 1..=n {
                    if j == i {
                        continue;
                    }
                    for x in [v(n, j), vstar(n, j)] {
                        let c = C::letter(n, x);
                        assert!(a.mul(&c).add(&c.mul(&a)).is_zero());
                        assert!(b.mul(&c).add(&c.mul(&b)).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn dual_times_letter_renormalises() {
        let n = 4;
        let e = C::word(n, &[vstar(n, 1), v(n, 1)]);
        assert_eq!(e.to_string(), "1 - v1*w1");
    }

    #[test]
    fn text_roundtrip() {
        let e = CliffordElement::parse(4, "1 + t*v1*w2 - 3/2*v2*v3 + (s+t)*w1").unwrap();
        let back = CliffordElement::parse(4, &e.to_string()).unwrap();
        assert_eq!(e, back);
        assert!(CliffordElement::parse(4, "v5").is_err());
        assert!(CliffordElement::parse(4, "v1*").is_err());
    }

    #[test]
    fn reverse_is_antiautomorphism_on_words() {
        let n = 3;
        let a = C::word(n, &[0, 3, 5]);
        let b = C::word(n, &[2, 5]);
        assert_eq!(a.mul(&b).reverse(), b.reverse().mul(&a.reverse()));
    }

    #[test]
    fn center_is_two_dimensional() {
        for n in 1..=4 {
            assert_eq!(center_of_even_basis(n).len(), 2, "rank {n}");
            let z = central_idempotent(n).unwrap();
            assert_eq!(z.mul(&z), z);
            assert!(!z.is_zero() && !z.is_one());
        }
    }

    #[test]
    fn product_table_is_cached() {
        assert_eq!(product_table_size(), 65536);
        for (a, b) in [(0x81u16, 0x18u16), (0xffu16, 0x0fu16), (0x3cu16, 0xc3u16)] {
            assert_eq!(mono_mul(4, a, b), mono_mul_raw(4, a, b));
        }
    }
}
