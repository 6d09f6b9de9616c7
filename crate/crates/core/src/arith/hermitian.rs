//! Signatures of the Hermitian forms `(1−ζ)V + (1−ζ̄)Vᵀ` at roots of unity.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::cyclotomic::{CircleAngle, CycloElem, CyclotomicField};
use super::matrix::IntMatrix;
use super::poly::{cyclotomic, QPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// `det(V − t·Vᵀ)` as a polynomial in `t`, by evaluation at `0..=dim` and
/// interpolation.
pub fn alexander_polynomial(v: &IntMatrix) -> Result<QPoly> {
    if !v.is_square() {
        return Err(Error::NotSquare { rows: v.rows(), cols: v.cols() });
    }
    let n = v.rows();
    let vt = v.transpose();
    let xs: Vec<Rational> = (0..=n as i64).map(|k| Rational::from_integer(BigInt::from(k))).collect();
    let ys: Vec<Rational> = (0..=n as i64)
        .map(|k| {
            let m = v - &vt.scale(&BigInt::from(k));
            m.det().map(Rational::from_integer)
        })
        .collect::<Result<_>>()?;
    Ok(interpolate(&xs, &ys))
}

/// Newton interpolation through the points `(xs[i], ys[i])`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> QPoly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = QPoly::zero();
    for i in (0..n).rev() {
        let linear = QPoly::new(vec![-xs[i].clone(), Rational::from_integer(1.into())]);
        p = &(&p * &linear) + &QPoly::constant(coef[i].clone());
    }
    p
}

/// True iff `det(V − ζVᵀ) ≠ 0`, decided by reducing the Alexander polynomial
/// modulo Φₙ.
pub fn alexander_nonvanishing(v: &IntMatrix, zeta: &CircleAngle) -> Result<bool> {
    let delta = alexander_polynomial(v)?;
    Ok(polynomial_nonvanishing(&delta, zeta))
}

/// True iff `p(ζ) ≠ 0` for the primitive root `ζ` of the given angle.
pub fn polynomial_nonvanishing(p: &QPoly, zeta: &CircleAngle) -> bool {
    !p.rem(&cyclotomic(zeta.denom())).is_zero()
}

/// Signature of `H(ζ) = (1−ζ)V + (1−ζ̄)Vᵀ`.
pub fn hermitian_signature(v: &IntMatrix, zeta: &CircleAngle) -> Result<i64> {
    if !v.is_square() {
        return Err(Error::NotSquare { rows: v.rows(), cols: v.cols() });
    }
    if zeta.is_zero() {
        return Err(Error::AngleOne);
    }
    if v.rows() == 0 {
        return Ok(0);
    }
    if !alexander_nonvanishing(v, zeta)? {
        return Err(Error::SingularAtRoot(zeta.to_string()));
    }
    let field = CyclotomicField::new(*zeta);
    let h = hermitian_matrix(&field, v);
    signature_ldl(&field, h)
}

/// Entries of `(1−ζ)V + (1−ζ̄)Vᵀ` in `Q(ζ)`.
pub fn hermitian_matrix(field: &CyclotomicField, v: &IntMatrix) -> Vec<Vec<CycloElem>> {
    let one = field.from_int(&BigInt::from(1));
    let a = field.sub(&one, &field.zeta_pow(1));
    let b = field.sub(&one, &field.zeta_pow(-1));
    let n = v.rows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = field.scale(&a, v.get(i, j));
                    let y = field.scale(&b, v.get(j, i));
                    field.add(&x, &y)
                })
                .collect()
        })
        .collect()
}

/// Signature of a Hermitian matrix over `Q(ζ)` by symmetric elimination with
/// 1×1 and 2×2 pivots. Pivot signs are decided exactly.
pub fn signature_ldl(field: &CyclotomicField, mut a: Vec<Vec<CycloElem>>) -> Result<i64> {
    let mut signature = 0i64;
    let mut active: Vec<usize> = (0..a.len()).collect();
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(pos);
            let pivot = a[p][p].clone();
            signature += match field.real_sign(&pivot) {
                Ordering::Greater => 1,
                Ordering::Less => -1,
                Ordering::Equal => unreachable!("nonzero pivot"),
            };
            let inv = field.inv(&pivot)?;
            let col: Vec<CycloElem> = active.iter().map(|&r| field.mul(&a[r][p], &inv)).collect();
            for (ri, &r) in active.iter().enumerate() {
                if col[ri].is_zero() {
                    continue;
                }
                for &c in &active {
                    if a[p][c].is_zero() {
                        continue;
                    }
                    let corr = field.mul(&col[ri], &a[p][c]);
                    a[r][c] = field.sub(&a[r][c], &corr);
                }
            }
            continue;
        }
        // Every remaining diagonal entry vanishes: use a 2×2 block
        // [[0, h], [h̄, 0]], which contributes one positive and one negative
        // eigenvalue.
        let Some((i, j)) = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i != j && !a[i][j].is_zero())
        else {
            return Err(Error::SingularMatrix);
        };
        active.retain(|&k| k != i && k != j);
        let h = a[i][j].clone();
        let inv_h = field.inv(&h)?;
        let inv_hbar = field.conj(&inv_h);
        let left_i: Vec<CycloElem> = active.iter().map(|&r| field.mul(&a[r][i], &inv_hbar)).collect();
        let left_j: Vec<CycloElem> = active.iter().map(|&r| field.mul(&a[r][j], &inv_h)).collect();
        for (ri, &r) in active.iter().enumerate() {
            for &c in &active {
                let t1 = field.mul(&left_i[ri], &a[j][c]);
                let t2 = field.mul(&left_j[ri], &a[i][c]);
                a[r][c] = field.sub(&field.sub(&a[r][c], &t1), &t2);
            }
        }
    }
    Ok(signature)
}

/// Signature of a symmetric rational matrix (the ζ = −1 case without field
/// machinery); exposed for cross-checks.
pub fn rational_symmetric_signature(m: &IntMatrix) -> Result<i64> {
    let field = CyclotomicField::new(CircleAngle::new(1, 2)?);
    let a = (0..m.rows()).map(|i| (0..m.cols()).map(|j| field.from_int(m.get(i, j))).collect()).collect();
    signature_ldl(&field, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn trefoil() -> IntMatrix {
        m(&[vec![-1, 1], vec![0, -1]])
    }

    fn angle(a: i64, n: i64) -> CircleAngle {
        CircleAngle::new(a, n).unwrap()
    }

    #[test]
    fn alexander_of_trefoil() {
        let d = alexander_polynomial(&trefoil()).unwrap();
        assert_eq!(d, QPoly::from_ints(&[1, -1, 1]));
        assert!(!alexander_nonvanishing(&trefoil(), &angle(1, 6)).unwrap());
        assert!(alexander_nonvanishing(&trefoil(), &angle(1, 2)).unwrap());
        assert!(alexander_nonvanishing(&IntMatrix::zeros(0, 0), &angle(1, 6)).unwrap());
    }

    #[test]
    fn trefoil_signatures() {
        assert_eq!(hermitian_signature(&trefoil(), &angle(1, 2)).unwrap(), -2);
        assert_eq!(hermitian_signature(&trefoil(), &angle(1, 12)).unwrap(), 0);
        assert_eq!(hermitian_signature(&trefoil(), &angle(1, 4)).unwrap(), -2);
        assert_eq!(hermitian_signature(&IntMatrix::zeros(0, 0), &angle(1, 3)).unwrap(), 0);
    }

    #[test]
    fn signature_errors() {
        assert_eq!(hermitian_signature(&trefoil(), &angle(0, 1)), Err(Error::AngleOne));
        assert!(matches!(hermitian_signature(&trefoil(), &angle(1, 6)), Err(Error::SingularAtRoot(_))));
        assert!(matches!(hermitian_signature(&trefoil(), &angle(5, 6)), Err(Error::SingularAtRoot(_))));
    }

    #[test]
    fn two_by_two_pivot_path() {
        // [[0,1],[1,0]] has signature 0, [[0,1,0],[1,0,0],[0,0,-3]] has −1
        assert_eq!(rational_symmetric_signature(&m(&[vec![0, 1], vec![1, 0]])).unwrap(), 0);
        assert_eq!(
            rational_symmetric_signature(&m(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -3]])).unwrap(),
            -1
        );
        assert_eq!(
            rational_symmetric_signature(&m(&[vec![0, 2, 1], vec![2, 0, 1], vec![1, 1, 5]])).unwrap(),
            // det = 0·(0−1) − 2·(10−1) + 1·(2−0) = −16 < 0 with trace 5 > 0: (+,+,−)
            1
        );
    }
}
