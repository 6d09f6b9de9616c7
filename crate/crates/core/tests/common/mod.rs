//! Independent oracles and generators shared by the integration tests.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use knotrank::arith::matrix::IntMatrix;
use knotrank::seifert::SeifertForm;

/// Signature of `(1−ζ)V + (1−ζ̄)Vᵀ` at `ζ = e^{2πit}` from floating-point
/// eigenvalues of the real `2n×2n` embedding. `None` if some eigenvalue is
/// too close to zero to be trusted.
pub fn float_signature(v: &IntMatrix, t: f64) -> Option<i64> {
    let n = v.rows();
    if n == 0 {
        return Some(0);
    }
    let theta = 2.0 * std::f64::consts::PI * t;
    let (c, s) = (theta.cos(), theta.sin());
    // 1 − ζ = (1 − c) − i s
    let (ar, ai) = (1.0 - c, -s);
    let f = |i: usize, j: usize| v.get(i, j).to_f64().unwrap();
    let mut re = DMatrix::<f64>::zeros(n, n);
    let mut im = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            // (1−ζ)V_ij + (1−ζ̄)V_ji
            re[(i, j)] = ar * f(i, j) + ar * f(j, i);
            im[(i, j)] = ai * f(i, j) - ai * f(j, i);
        }
    }
    let mut big = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            big[(i, j)] = re[(i, j)];
            big[(i + n, j + n)] = re[(i, j)];
            big[(i, j + n)] = -im[(i, j)];
            big[(i + n, j)] = im[(i, j)];
        }
    }
    let eig = big.symmetric_eigen().eigenvalues;
    let scale = eig.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    if eig.iter().any(|x| x.abs() < 1e-9 * scale) {
        return None;
    }
    let pos = eig.iter().filter(|x| **x > 0.0).count() as i64;
    let neg = eig.iter().filter(|x| **x < 0.0).count() as i64;
    Some((pos - neg) / 2)
}

/// Signature of `T(r,s)` at `x = a/n ∈ (0,1)` by counting lattice points
/// `i/r + j/s` (`0 < i < r`, `0 < j < s`): those in `(x, x+1)` count −1,
/// the rest +1.
pub fn litherland_torus_signature(r: i64, s: i64, a: i64, n: i64) -> i64 {
    let (mut inside, mut outside) = (0, 0);
    for i in 1..r {
        for j in 1..s {
            // compare i/r + j/s with a/n and a/n + 1 over the common denominator
            let v = (i * s + j * r) * n;
            let lo = a * r * s;
            let hi = (a + n) * r * s;
            if v > lo && v < hi {
                inside += 1;
            } else {
                outside += 1;
            }
        }
    }
    outside - inside
}

/// `V = W + E` with `W` symmetric and `E` block-diagonal `[[0,1],[0,0]]`, so
/// `V − Vᵀ` is the standard symplectic form.
pub fn seifert_from_symmetric(g: usize, w: &[i64]) -> SeifertForm {
    let n = 2 * g;
    let mut m = IntMatrix::zeros(n, n);
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            let x = BigInt::from(w[k % w.len()]);
            k += 1;
            m.set(i, j, x.clone());
            m.set(j, i, x);
        }
    }
    for b in 0..g {
        let x = m.get(2 * b, 2 * b + 1) + 1;
        m.set(2 * b, 2 * b + 1, x);
    }
    SeifertForm::new(m).expect("valid by construction")
}

/// Random Seifert forms of genus `1..=max_genus` with entries in `[−r, r]`.
pub fn arb_seifert(max_genus: usize, r: i64) -> impl Strategy<Value = SeifertForm> {
    (1..=max_genus).prop_flat_map(move |g| {
        let len = (2 * g) * (2 * g + 1) / 2;
        prop::collection::vec(-r..=r, len).prop_map(move |w| seifert_from_symmetric(g, &w))
    })
}

/// Random unimodular matrix as a product of elementary row operations and
/// sign flips.
pub fn arb_unimodular(n: usize, steps: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), steps).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, k, flip) in ops {
            if i != j {
                for c in 0..n {
                    let x = u.get(i, c) + u.get(j, c) * BigInt::from(k);
                    u.set(i, c, x);
                }
            } else if flip {
                for c in 0..n {
                    let x = -u.get(i, c);
                    u.set(i, c, x);
                }
            }
        }
        u
    })
}

pub fn vec_times_matrix(v: &[BigInt], m: &IntMatrix) -> Vec<BigInt> {
    (0..m.cols()).map(|j| (0..m.rows()).map(|i| &v[i] * m.get(i, j)).sum()).collect()
}
