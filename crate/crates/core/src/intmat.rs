//! Exact linear algebra over Z and Q for small dense matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][t] * &b[t][j];
            }
        }
    }
    out
}

pub(crate) fn trace(a: &[Vec<BigInt>]) -> BigInt {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Fraction-free (Bareiss) determinant; every interior division is exact
/// over Z.
pub(crate) fn det(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                let (q, r) = num_integer::div_rem(num, prev.clone());
                debug_assert!(r.is_zero(), "Bareiss division must be exact over Z");
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Solves `a x = rhs` over the rationals; `None` when `a` is singular.
pub(crate) fn solve_rational(a: &[Vec<BigInt>], rhs: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            row.iter()
                .map(|c| BigRational::from(c.clone()))
                .chain(std::iter::once(BigRational::from(b.clone())))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for cell in &mut m[col][col..=n] {
            *cell = &*cell / &p;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (cell, p) in row[col..=n].iter_mut().zip(&pivot_row[col..=n]) {
                *cell -= &factor * p;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det(&m(&[&[2]])), BigInt::from(2));
        assert_eq!(det(&m(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(
            det(&m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])),
            BigInt::from(-2)
        );
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn det_needs_row_swap() {
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    }

    #[test]
    fn solve_known_system() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let rhs: Vec<BigInt> = [5, 10].iter().map(|&c| BigInt::from(c)).collect();
        let x = solve_rational(&a, &rhs).unwrap();
        assert_eq!(x[0], BigRational::from(BigInt::from(1)));
        assert_eq!(x[1], BigRational::from(BigInt::from(3)));
    }

    #[test]
    fn solve_singular_is_none() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let rhs: Vec<BigInt> = [1, 2].iter().map(|&c| BigInt::from(c)).collect();
        assert!(solve_rational(&a, &rhs).is_none());
    }
}
