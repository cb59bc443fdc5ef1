//! Difference-operator eigenproblem route.
//!
//! `q(s) = p(s + 1/2)` is an eigenvector of
//! `T(q)(s) = (s + (k+1)/2)·q(s+1) − (s − (k+1)/2)·q(s−1)` for eigenvalue `m + 1`.
//! On polynomials of degree ≤ d the operator is upper triangular with
//! diagonal `2n + k + 1`, so the eigenvalue `k + 2d + 1 = m + 1` is simple.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{is_admissible, Route, ZetaPolyRecord};
use crate::error::{Error, Result};
use crate::exact::{int, rat, QPoly};

/// Apply `T` to `q` exactly.
pub fn difference_operator(q: &QPoly, k: usize) -> QPoly {
    let a = rat(k as i64 + 1, 2);
    let plus = QPoly::linear(BigRational::one(), a.clone());
    let minus = QPoly::linear(BigRational::one(), -a);
    let up = q.shift(&int(1));
    let down = q.shift(&int(-1));
    &(&plus * &up) - &(&minus * &down)
}

/// Matrix of `T` on the monomial basis `{1, s, …, s^d}`; column `n` is `T(s^n)`.
pub fn operator_matrix(d: usize, k: usize) -> Vec<Vec<BigRational>> {
    let mut m = vec![vec![BigRational::zero(); d + 1]; d + 1];
    for n in 0..=d {
        let image = difference_operator(&QPoly::monomial(BigRational::one(), n), k);
        assert!(image.degree().unwrap_or(0) <= n, "T must not raise degree");
        for (i, row) in m.iter_mut().enumerate() {
            row[n] = image.coeff(i);
        }
    }
    m
}

/// Basis of the exact nullspace of `a` (rows × cols) via reduced row echelon form.
pub fn nullspace(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigRational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

pub fn zeta_poly_recurrence(m: usize, k: usize) -> Result<ZetaPolyRecord> {
    if !is_admissible(m, k) {
        return Err(Error::Domain(format!("(m,k) = ({m},{k}) has (m-k)/2 outside N")));
    }
    let d = (m - k) / 2;
    let mut a = operator_matrix(d, k);
    let eig = int(m as i64 + 1);
    for (i, row) in a.iter_mut().enumerate() {
        row[i] -= &eig;
    }
    let basis = nullspace(&a);
    if basis.len() != 1 {
        return Err(Error::DegenerateEigenspace {
            eigenvalue: eig.to_string(),
            dimension: basis.len(),
        });
    }
    let q = QPoly::new(basis.into_iter().next().unwrap());
    let p = q.shift(&rat(-1, 2)).primitive_positive();
    Ok(ZetaPolyRecord::from_poly(m, k, p, Route::Recurrence))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_is_eigenvector_for_m0() {
        let one = QPoly::one();
        assert_eq!(difference_operator(&one, 0), one);
        assert_eq!(zeta_poly_recurrence(0, 0).unwrap().coeffs, one);
    }

    #[test]
    fn quadratic_eigen_relation() {
        // 5·q(s) = (s+1/2)q(s+1) − (s−1/2)q(s−1) for q = 2s² + 1/2.
        let q = QPoly::from_rationals([rat(1, 2), rat(0, 1), rat(2, 1)]);
        let rhs = difference_operator(&q, 0);
        assert_eq!(rhs, QPoly::from_rationals([rat(5, 2), rat(0, 1), rat(10, 1)]));
        assert_eq!(rhs, q.scale(&int(5)));
        assert_eq!(zeta_poly_recurrence(4, 0).unwrap().coeffs, QPoly::from_ints(&[1, -2, 2]));
    }

    #[test]
    fn linear_case() {
        // 3s = (s+1/2)(s+1) − (s−1/2)(s−1).
        let s = QPoly::x();
        assert_eq!(difference_operator(&s, 0), s.scale(&int(3)));
        assert_eq!(zeta_poly_recurrence(2, 0).unwrap().coeffs, QPoly::from_ints(&[-1, 2]));
    }

    #[test]
    fn operator_is_upper_triangular_with_expected_diagonal() {
        for k in 0..5 {
            let a = operator_matrix(6, k);
            for (i, row) in a.iter().enumerate() {
                assert_eq!(row[i], int((2 * i + k + 1) as i64));
                for x in &row[..i] {
                    assert!(x.is_zero());
                }
            }
        }
    }

    #[test]
    fn nullspace_of_rank_deficient() {
        let a = vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]];
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let dot: BigRational = row.iter().zip(&v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn inadmissible_rejected() {
        assert!(matches!(zeta_poly_recurrence(3, 0), Err(Error::Domain(_))));
        assert!(matches!(zeta_poly_recurrence(2, 4), Err(Error::Domain(_))));
    }
}
