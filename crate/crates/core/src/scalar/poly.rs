use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use super::Rational;
use crate::error::{Error, Result};
use crate::parse::{parse_all, ParseTarget};
use crate::ring::Ring;

/// Product of variables with nonzero integer exponents, sorted by variable name.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Arc<str>, i32); 2]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(name: &str, exp: i32) -> Self {
        if exp == 0 {
            return Monomial::one();
        }
        let mut v = SmallVec::new();
        v.push((Arc::from(name), exp));
        Monomial(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, i32)> {
        self.0.iter().map(|(v, e)| (v.as_ref(), *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.0.is_empty() {
            return other.clone();
        }
        if other.0.is_empty() {
            return self.clone();
        }
        let mut out: SmallVec<[(Arc<str>, i32); 2]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j].clone());
                j += 1;
            } else {
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((a[i].0.clone(), e));
                }
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), -e)).collect())
    }
}

// Graded order: total degree first, then lexicographic on the (variable, exponent) list.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Laurent polynomial with rational coefficients in named variables.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, Rational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Monomial::one(), q);
        }
        Scalar { terms }
    }

    pub fn int(n: i64) -> Self {
        Scalar::constant(Rational::from(n))
    }

    pub fn var(name: &str) -> Self {
        Scalar::monomial(Rational::one(), Monomial::var(name, 1))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The rational value when the polynomial is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v.to_string()))
            .collect()
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &Scalar) -> Scalar {
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub_ref(&self, other: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c);
        }
        out
    }

    pub fn mul_ref(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if let Some(q) = other.as_rational() {
            return self.scale(&q);
        }
        if let Some(q) = self.as_rational() {
            return other.scale(&q);
        }
        let mut out = Scalar::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        if q.is_one() {
            return self.clone();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    /// Inverse of a single-term element.
    pub fn unit_inverse(&self) -> Option<Scalar> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().expect("one term");
        Some(Scalar::monomial(c.recip()?, m.inverse()))
    }

    /// Evaluates at the given rational values.
    pub fn eval(&self, values: &HashMap<String, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.factors() {
                let x = values
                    .get(v)
                    .ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                if x.is_zero() && e < 0 {
                    return Err(Error::ZeroAtNegativeExponent(v.to_string()));
                }
                term = &term * &x.pow(e).expect("nonzero base");
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// Replaces each listed variable by a Laurent polynomial; negative exponents need unit images.
    pub fn substitute(&self, values: &HashMap<String, Scalar>) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = Scalar::constant(c.clone());
            for (v, e) in m.factors() {
                let factor = match values.get(v) {
                    Some(s) => {
                        let base = if e < 0 {
                            s.unit_inverse()
                                .ok_or_else(|| Error::ZeroAtNegativeExponent(v.to_string()))?
                        } else {
                            s.clone()
                        };
                        let mut p = Scalar::one();
                        for _ in 0..e.unsigned_abs() {
                            p = p.mul_ref(&base);
                        }
                        p
                    }
                    None => Scalar::monomial(Rational::one(), Monomial::var(v, e)),
                };
                term = term.mul_ref(&factor);
            }
            out = out.add_ref(&term);
        }
        Ok(out)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl ParseTarget for Scalar {
    fn number(q: Rational) -> Self {
        Scalar::constant(q)
    }
    fn ident(name: &str, exp: i32) -> Result<Self> {
        Ok(Scalar::monomial(Rational::one(), Monomial::var(name, exp)))
    }
    fn add(self, other: Self) -> Self {
        self.add_ref(&other)
    }
    fn mul(self, other: Self) -> Self {
        self.mul_ref(&other)
    }
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_all(s)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::constant(q)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_ref(o)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.sub_ref(o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub_ref(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn negate(&self) -> Self {
        self.neg_ref()
    }
    fn from_rational(q: &Rational) -> Self {
        Scalar::constant(q.clone())
    }
    fn try_inverse(&self) -> Option<Self> {
        self.unit_inverse()
    }
    fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.insert_term(m.clone(), c.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn canonical_product() {
        assert_eq!(&s("1+t") * &s("1-t"), s("1-t^2"));
        assert_eq!((&s("1+t") * &s("1-t")).to_string(), "1-t^2");
        assert_eq!(&s("t") * &s("t^-1"), Scalar::one());
    }

    #[test]
    fn printing_is_canonical() {
        let x = s("-3/2*t^2*s^-1");
        assert_eq!(x.to_string(), "-3/2*s^-1*t^2");
        assert_eq!(s(&x.to_string()), x);
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(s("t + 2 - t").to_string(), "2");
    }

    #[test]
    fn evaluation_errors() {
        let mut vals = HashMap::new();
        vals.insert("t".to_string(), Rational::zero());
        assert_eq!(
            s("t^-1").eval(&vals),
            Err(Error::ZeroAtNegativeExponent("t".into()))
        );
        assert_eq!(s("s").eval(&vals), Err(Error::MissingVariable("s".into())));
        vals.insert("t".to_string(), Rational::new(1, 2));
        assert_eq!(s("t^-1+t").eval(&vals).unwrap(), Rational::new(5, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Scalar>().is_err());
        assert!("1+".parse::<Scalar>().is_err());
        assert!("t^".parse::<Scalar>().is_err());
        assert!("(1+t".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn parenthesised_powers() {
        assert_eq!(s("(1+t)^2"), s("1+2*t+t^2"));
    }

    #[test]
    fn unit_inverse_only_for_monomials() {
        assert_eq!(s("-2*t").unit_inverse().unwrap(), s("-1/2*t^-1"));
        assert!(s("1+t").unit_inverse().is_none());
    }
}
