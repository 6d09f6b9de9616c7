//! Genus-one patterns whose boundary has Alexander polynomial one.
//!
//! The Seifert form is `S = [[n, m], [m−1, l]]` with `n·l = m(m−1)`. Then
//! `S + Sᵀ` has determinant −1 and `−(S+Sᵀ)⁻¹ = G = [[2l, 1−2m], [1−2m, 2n]]`,
//! so the self-linking of the axis with dual coordinates `(x, y)` is the
//! quadratic form `(x,y)·G·(x,y)ᵀ`.

use num_bigint::BigInt;

use super::{Pattern, SeifertForm};
use crate::arith::matrix::IntMatrix;
use crate::error::{Error, Result};

fn check(n: i64, m: i64, l: i64) -> Result<()> {
    if (n as i128) * (l as i128) != (m as i128) * (m as i128 - 1) {
        return Err(Error::NotAlexanderOne { n, m, l });
    }
    Ok(())
}

/// The linking form `G = [[2l, 1−2m], [1−2m, 2n]]`.
pub fn genus1_form(n: i64, m: i64, l: i64) -> Result<IntMatrix> {
    check(n, m, l)?;
    IntMatrix::from_rows(&[vec![2 * l, 1 - 2 * m], vec![1 - 2 * m, 2 * n]])
}

/// `(x,y)·G·(x,y)ᵀ`.
pub fn genus1_value(n: i64, m: i64, l: i64, x: i64, y: i64) -> Result<BigInt> {
    let g = genus1_form(n, m, l)?;
    let v = [BigInt::from(x), BigInt::from(y)];
    g.bilinear(&v, &v)
}

pub fn genus1_nonzero(n: i64, m: i64, l: i64, x: i64, y: i64) -> Result<bool> {
    Ok(genus1_value(n, m, l, x, y)? != BigInt::from(0))
}

/// The winding-number-zero pattern with Seifert form `[[n, m], [m−1, l]]` and
/// axis coordinates `(x, y)`.
pub fn genus1_pattern(n: i64, m: i64, l: i64, x: i64, y: i64) -> Result<Pattern> {
    check(n, m, l)?;
    let s = SeifertForm::from_rows(&[vec![n, m], vec![m - 1, l]])?;
    Pattern::new(format!("genus1_{n}_{m}_{l}"), s, 0, vec![x.into(), y.into()])
}

/// All `(n, m, l)` with `|m| ≤ max_m`, `|l| ≤ max_l` and `n·l = m(m−1)`, in
/// lexicographic order. When `l = 0` and `m(m−1) = 0`, `n` ranges over
/// `[−max_l, max_l]`.
pub fn genus1_enumerate(max_m: u32, max_l: u32) -> Vec<(i64, i64, i64)> {
    let (max_m, max_l) = (max_m as i64, max_l as i64);
    let mut out = Vec::new();
    for m in -max_m..=max_m {
        let prod = m * (m - 1);
        for l in -max_l..=max_l {
            if l == 0 {
                if prod == 0 {
                    out.extend((-max_l..=max_l).map(|n| (n, m, 0)));
                }
            } else if prod % l == 0 {
                out.push((prod / l, m, l));
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::Rational;
    use crate::seifert::axis_self_linking;

    #[test]
    fn form_examples() {
        assert_eq!(genus1_form(1, 2, 2).unwrap(), IntMatrix::from_rows(&[vec![4, -3], vec![-3, 2]]).unwrap());
        assert_eq!(genus1_form(0, 1, 5).unwrap(), IntMatrix::from_rows(&[vec![10, -1], vec![-1, 0]]).unwrap());
        assert_eq!(genus1_form(0, 0, 0).unwrap(), IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap());
        assert_eq!(genus1_form(1, 2, 3), Err(Error::NotAlexanderOne { n: 1, m: 2, l: 3 }));
    }

    #[test]
    fn nonzero_examples() {
        assert!(genus1_nonzero(1, 2, 2, -1, 1).unwrap());
        assert_eq!(genus1_value(1, 2, 2, -1, 1).unwrap(), BigInt::from(12));
        assert!(!genus1_nonzero(1, 2, 2, 1, 1).unwrap());
        assert!(!genus1_nonzero(3, 3, 2, 0, 0).unwrap());
        assert!(genus1_nonzero(1, 2, 3, 1, 0).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let e = genus1_enumerate(2, 2);
        assert!(e.contains(&(1, 2, 2)));
        assert!(e.contains(&(0, 0, 0)));
        assert!(genus1_enumerate(0, 0).contains(&(0, 0, 0)));
        assert!(genus1_enumerate(3, 6).contains(&(1, 3, 6)));
        let mut sorted = e.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, e);
        for (n, m, l) in e {
            assert_eq!(n * l, m * (m - 1));
        }
    }

    #[test]
    fn quadratic_form_matches_inverse_path() {
        for (n, m, l) in genus1_enumerate(3, 4) {
            for (x, y) in [(1, 0), (0, 1), (-1, 1), (2, 3), (-3, 1)] {
                let p = genus1_pattern(n, m, l, x, y).unwrap();
                let direct = Rational::from_integer(genus1_value(n, m, l, x, y).unwrap());
                assert_eq!(axis_self_linking(&p).unwrap(), direct, "{n} {m} {l} {x} {y}");
            }
        }
    }
}
