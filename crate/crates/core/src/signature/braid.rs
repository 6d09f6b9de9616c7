//! Positive braids and the Seifert matrices of their fiber surfaces.
//!
//! The closure of a positive braid bounds the surface built from one disk per
//! strand and one band per crossing. Between two consecutive occurrences of
//! `σᵢ` there is a "brick": a loop running through both bands. The bricks
//! form a basis of `H₁`, and the Seifert matrix has −1 on the diagonal, 1
//! from a brick to its successor on the same level, and ±1 between
//! interleaved bricks on adjacent levels.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::matrix::IntMatrix;
use crate::error::{Error, Result};
use crate::seifert::SeifertForm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    generators: Vec<usize>,
}

#[derive(Clone, Copy, Debug)]
struct Brick {
    level: usize,
    start: usize,
    end: usize,
}

impl BraidWord {
    /// A positive word in `σ₁ … σ_{strands−1}`.
    pub fn new(strands: usize, generators: Vec<usize>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidBraid(format!("need at least 2 strands, got {strands}")));
        }
        if generators.is_empty() {
            return Err(Error::InvalidBraid("empty word".into()));
        }
        if let Some(&g) = generators.iter().find(|&&g| g == 0 || g >= strands) {
            return Err(Error::InvalidBraid(format!("generator {g} out of range 1..{}", strands - 1)));
        }
        Ok(BraidWord { strands, generators })
    }

    /// `(σ₁ … σ_{r−1})^s`.
    pub fn torus(r: usize, s: usize) -> Result<Self> {
        Self::new(r, (0..s).flat_map(|_| 1..r).collect())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &g in &self.generators {
            perm.swap(g - 1, g);
        }
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for i in 0..self.strands {
            if seen[i] {
                continue;
            }
            count += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
            }
        }
        count
    }

    fn bricks(&self) -> Vec<Brick> {
        let mut out = Vec::new();
        for level in 1..self.strands {
            let pos: Vec<usize> =
                self.generators.iter().enumerate().filter(|&(_, &g)| g == level).map(|(i, _)| i).collect();
            out.extend(pos.windows(2).map(|w| Brick { level, start: w[0], end: w[1] }));
        }
        out
    }

    /// The Seifert matrix of the fiber surface in the brick basis.
    pub fn seifert_matrix(&self) -> IntMatrix {
        let bricks = self.bricks();
        let n = bricks.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, a) in bricks.iter().enumerate() {
            for (j, b) in bricks.iter().enumerate() {
                let v: i64 = if i == j {
                    -1
                } else if a.level == b.level && b.start == a.end {
                    1
                } else if b.level == a.level + 1 {
                    // a below b
                    if a.start < b.start && b.start < a.end && a.end < b.end {
                        1
                    } else if b.start < a.start && a.start < b.end && b.end < a.end {
                        -1
                    } else {
                        0
                    }
                } else {
                    0
                };
                if v != 0 {
                    m.set(i, j, BigInt::from(v));
                }
            }
        }
        m
    }

    /// The Seifert form of a closure that is a knot.
    pub fn seifert_form(&self) -> Result<SeifertForm> {
        let c = self.components();
        if c != 1 {
            return Err(Error::InvalidBraid(format!("closure has {c} components")));
        }
        SeifertForm::new(self.seifert_matrix())
    }
}

/// Seifert form of the positive torus knot `T(r, s)`, from the braid
/// `(σ₁ … σ_{r−1})^s`.
pub fn torus_seifert(r: i64, s: i64) -> Result<SeifertForm> {
    if r < 2 || s < 2 || r.gcd(&s) != 1 {
        return Err(Error::InvalidTorusParams(r, s));
    }
    let form = BraidWord::torus(r as usize, s as usize)?.seifert_form()?;
    Ok(form.with_name(format!("T({r},{s})")))
}
