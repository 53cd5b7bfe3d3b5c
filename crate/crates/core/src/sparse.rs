//! Column-sparse linear maps between coordinate spaces.

use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::Rational;

/// Sparse vector: sorted `(index, value)` pairs with nonzero values.
pub type SparseVec<R> = Vec<(usize, R)>;

/// Linear map stored by columns; column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearMap<R> {
    rows: usize,
    cols: Vec<SparseVec<R>>,
}

/// Accumulates sparse linear combinations into a dense buffer.
pub struct Accumulator<R> {
    buf: Vec<Option<R>>,
    touched: Vec<usize>,
}

impl<R: Ring> Accumulator<R> {
    pub fn new(dim: usize) -> Self {
        Accumulator { buf: vec![None; dim], touched: Vec::new() }
    }

    pub fn add(&mut self, i: usize, v: R) {
        match &mut self.buf[i] {
            Some(x) => x.add_assign_ref(&v),
            slot @ None => {
                *slot = Some(v);
                self.touched.push(i);
            }
        }
    }

    pub fn add_scaled(&mut self, col: &[(usize, R)], coeff: &R) {
        for (i, v) in col {
            self.add(*i, v.times(coeff));
        }
    }

    pub fn drain(&mut self) -> SparseVec<R> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            if let Some(v) = self.buf[i].take() {
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
        }
        self.touched.clear();
        out
    }
}

impl<R: Ring> LinearMap<R> {
    pub fn from_columns(rows: usize, cols: Vec<SparseVec<R>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.retain(|(_, v)| !v.is_zero());
                c.sort_by_key(|(i, _)| *i);
                debug_assert!(c.iter().all(|(i, _)| *i < rows));
                c
            })
            .collect();
        LinearMap { rows, cols }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { rows: n, cols: (0..n).map(|i| vec![(i, R::one())]).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, R)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn apply(&self, v: &[(usize, R)]) -> SparseVec<R> {
        let mut acc = Accumulator::new(self.rows);
        for (j, c) in v {
            acc.add_scaled(&self.cols[*j], c);
        }
        acc.drain()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap<R>) -> LinearMap<R> {
        assert_eq!(self.cols.len(), other.rows, "dimension mismatch in composition");
        let mut acc = Accumulator::new(self.rows);
        let cols = other
            .cols
            .iter()
            .map(|col| {
                for (k, c) in col {
                    acc.add_scaled(&self.cols[*k], c);
                }
                acc.drain()
            })
            .collect();
        LinearMap { rows: self.rows, cols }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols.len()
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn to_dense(&self) -> Matrix<R> {
        let mut m = Matrix::zeros(self.rows, self.cols.len());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn from_dense(m: &Matrix<R>) -> Self {
        let cols = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter_map(|i| {
                        let v = m.get(i, j);
                        (!v.is_zero()).then(|| (i, v.clone()))
                    })
                    .collect()
            })
            .collect();
        LinearMap { rows: m.rows(), cols }
    }

    /// Rows `r0..r0+h` restricted to columns `c0..c0+w`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> LinearMap<R> {
        let cols = self.cols[c0..c0 + w]
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|(i, _)| *i >= r0 && *i < r0 + h)
                    .map(|(i, v)| (i - r0, v.clone()))
                    .collect()
            })
            .collect();
        LinearMap { rows: h, cols }
    }

    /// Reorders output coordinates: entry `i` moves to `perm[i]`.
    pub fn permute_rows(&self, perm: &[usize]) -> LinearMap<R> {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, v)| (perm[*i], v.clone())).collect())
            .collect();
        LinearMap::from_columns(self.rows, cols)
    }
}

impl LinearMap<Rational> {
    pub fn lift<S: Ring>(&self) -> LinearMap<S> {
        LinearMap {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|(i, v)| (*i, S::from_rational(v))).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_matches_dense_product() {
        let a = Matrix::from_fn(3, 4, |i, j| Rational::from(((i * 7 + j * 3) % 5) as i64 - 2));
        let b = Matrix::from_fn(4, 2, |i, j| Rational::from(((i + 2 * j) % 3) as i64 - 1));
        let sa = LinearMap::from_dense(&a);
        let sb = LinearMap::from_dense(&b);
        assert_eq!(sa.compose(&sb).to_dense(), a.mul(&b));
    }

    #[test]
    fn identity_detection() {
        let id: LinearMap<Rational> = LinearMap::identity(5);
        assert!(id.is_identity());
        assert!(id.compose(&id).is_identity());
    }
}
