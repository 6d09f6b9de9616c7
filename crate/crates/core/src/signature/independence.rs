//! Linear independence of signature jump functions.

use num_bigint::BigInt;

use super::{jump_spectrum, RootKey};
use crate::arith::matrix::IntMatrix;
use crate::error::Result;
use crate::seifert::SeifertForm;

/// The jump vectors of the given knots over the union of their roots, one row
/// per knot, columns in increasing angle order.
pub fn jump_matrix(knots: &[SeifertForm]) -> Result<(Vec<RootKey>, IntMatrix)> {
    let spectra = knots.iter().map(jump_spectrum).collect::<Result<Vec<_>>>()?;
    let mut keys: Vec<RootKey> = Vec::new();
    for s in &spectra {
        for (k, _) in s.entries() {
            let mut pos = keys.len();
            let mut dup = false;
            for (i, existing) in keys.iter().enumerate() {
                match k.cmp_position(existing)? {
                    std::cmp::Ordering::Equal => {
                        dup = true;
                        break;
                    }
                    std::cmp::Ordering::Less => {
                        pos = i;
                        break;
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
            if !dup {
                keys.insert(pos, k.clone());
            }
        }
    }
    let mut m = IntMatrix::zeros(knots.len(), keys.len());
    for (row, s) in spectra.iter().enumerate() {
        for (k, d) in s.entries() {
            for (col, key) in keys.iter().enumerate() {
                if key.same_point(k)? {
                    m.set(row, col, BigInt::from(*d));
                    break;
                }
            }
        }
    }
    Ok((keys, m))
}

/// Rank of the jump vectors; equal to `knots.len()` iff the jump functions
/// are linearly independent.
pub fn independence_rank(knots: &[SeifertForm]) -> Result<usize> {
    let (_, m) = jump_matrix(knots)?;
    Ok(m.rank())
}
