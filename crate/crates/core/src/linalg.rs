//! Exact Gaussian elimination over the rationals.

use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::Rational;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut Matrix<Rational>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut data: Vec<Vec<Rational>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !data[i][c].is_zero()) else {
            continue;
        };
        data.swap(r, p);
        let inv = data[r][c].recip().expect("nonzero pivot");
        for x in data[r].iter_mut().skip(c) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = data[r].clone();
        let support: Vec<usize> = (c..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in data.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] = &row[j] - &(&f * &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    *m = Matrix::from_rows(data).unwrap_or_else(|_| Matrix::zeros(rows, cols));
    pivots
}

pub fn rank(m: &Matrix<Rational>) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

pub fn inverse(m: &Matrix<Rational>) -> Option<Matrix<Rational>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.block(0, n, n, n))
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel(m: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = a.get(r, f).negate();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_small_matrix() {
        let m = Matrix::from_rows(vec![
            vec![Rational::from(2), Rational::from(1)],
            vec![Rational::from(5), Rational::from(3)],
        ])
        .unwrap();
        let inv = inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn singular_has_kernel() {
        let m = Matrix::from_fn(3, 3, |i, j| Rational::from((i + j) as i64));
        assert_eq!(rank(&m), 2);
        assert!(inverse(&m).is_none());
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(|x| x.is_zero()));
    }
}
