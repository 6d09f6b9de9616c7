//! Tristram-Levine signatures and their jump functions.
//!
//! `σ_K(ζ)` is the signature of `(1−ζ)V + (1−ζ̄)Vᵀ`. It is locally constant
//! away from the unit-circle roots of `Δ_K(z) = det(V − zVᵀ)`, and
//! `δ_K(t) = ½(σ(t⁺) − σ(t⁻))` records its steps. Jumps are stored on
//! `(0, 1/2]` with `δ(1−t) = δ(t)`.

pub mod braid;
pub mod independence;
pub mod roots;

use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::arith::cyclotomic::CircleAngle;
use crate::arith::hermitian::{alexander_polynomial, hermitian_signature, polynomial_nonvanishing};
use crate::arith::rational::{to_fraction_string, Rational};
use crate::error::Result;
use crate::seifert::{Pattern, SeifertForm};

pub use braid::{torus_seifert, BraidWord};
pub use independence::independence_rank;
pub use roots::{unit_circle_roots, IrrationalRoot, RootKey, RootLayout};

/// `σ_K(e^{2πit})`.
pub fn tl_signature(v: &SeifertForm, t: &CircleAngle) -> Result<i64> {
    hermitian_signature(v.matrix(), t)
}

fn signature_at(v: &SeifertForm, t: &Rational) -> Result<i64> {
    tl_signature(v, &CircleAngle::from_rational(t)?)
}

/// Roots on the upper semicircle with a signature value for every gap:
/// `sigmas[i]` is σ between `roots[i−1]` and `roots[i]`.
fn signature_profile(v: &SeifertForm) -> Result<(RootLayout, Vec<i64>)> {
    let delta = alexander_polynomial(v.matrix())?;
    let layout = unit_circle_roots(&delta)?;
    let sigmas = layout.samples.iter().map(|t| signature_at(v, t)).collect::<Result<Vec<_>>>()?;
    Ok((layout, sigmas))
}

/// `δ_K(t)` for any `t`; zero away from Alexander roots and at `t = 0`.
pub fn jump_at(v: &SeifertForm, t: &CircleAngle) -> Result<i64> {
    if t.is_zero() || v.dim() == 0 {
        return Ok(0);
    }
    let t = t.fold_to_upper_half();
    let delta = alexander_polynomial(v.matrix())?;
    if polynomial_nonvanishing(&delta, &t) {
        return Ok(0);
    }
    let (layout, sigmas) = signature_profile(v)?;
    let key = RootKey::Exact(t);
    for (i, r) in layout.roots.iter().enumerate() {
        if r.same_point(&key)? {
            return Ok((sigmas[i + 1] - sigmas[i]) / 2);
        }
    }
    unreachable!("Alexander root {t} missing from its layout")
}

/// Nonzero jumps on `(0, 1/2]`, in increasing angle order.
#[derive(Clone, Debug, Default)]
pub struct JumpSpectrum {
    entries: Vec<(RootKey, i64)>,
}

impl JumpSpectrum {
    pub fn entries(&self) -> &[(RootKey, i64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Jump at a rational angle (folded into `[0, 1/2]`).
    pub fn get(&self, t: &CircleAngle) -> i64 {
        let t = t.fold_to_upper_half();
        self.entries
            .iter()
            .find_map(|(k, d)| match k {
                RootKey::Exact(a) if *a == t => Some(*d),
                _ => None,
            })
            .unwrap_or(0)
    }

    /// Exact-angle entries as `(angle, jump)` pairs.
    pub fn exact_entries(&self) -> Vec<(CircleAngle, i64)> {
        self.entries
            .iter()
            .filter_map(|(k, d)| match k {
                RootKey::Exact(a) => Some((*a, *d)),
                RootKey::Isolated(_) => None,
            })
            .collect()
    }

    pub fn negate(&self) -> JumpSpectrum {
        JumpSpectrum { entries: self.entries.iter().map(|(k, d)| (k.clone(), -d)).collect() }
    }

    /// Pointwise sum, with root identity decided exactly.
    pub fn add(&self, other: &JumpSpectrum) -> Result<JumpSpectrum> {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let ord = match (self.entries.get(i), other.entries.get(j)) {
                (Some(a), Some(b)) => a.0.cmp_position(&b.0)?,
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.entries[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.entries[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let d = self.entries[i].1 + other.entries[j].1;
                    if d != 0 {
                        out.push((self.entries[i].0.clone(), d));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(JumpSpectrum { entries: out })
    }

    /// Same roots with the same jumps.
    pub fn equivalent(&self, other: &JumpSpectrum) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        for ((a, x), (b, y)) in self.entries.iter().zip(&other.entries) {
            if x != y || !a.same_point(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `σ` on the gap after the `k`-th root: twice the sum of earlier jumps.
    pub fn signature_after(&self, k: usize) -> i64 {
        2 * self.entries[..=k].iter().map(|(_, d)| d).sum::<i64>()
    }

    /// `[{"angle": "a/n" | {"isolating": [lo, hi]}, "jump": d}, …]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(k, d)| {
                    let angle = match k {
                        RootKey::Exact(a) => json!(a.to_string()),
                        RootKey::Isolated(r) => {
                            json!({ "isolating": [to_fraction_string(r.lo()), to_fraction_string(r.hi())] })
                        }
                    };
                    json!({ "angle": angle, "jump": d })
                })
                .collect(),
        )
    }
}

/// All nonzero jumps of `σ_K` on the upper semicircle.
pub fn jump_spectrum(v: &SeifertForm) -> Result<JumpSpectrum> {
    if v.dim() == 0 {
        return Ok(JumpSpectrum::default());
    }
    let (layout, sigmas) = signature_profile(v)?;
    let entries = layout
        .roots
        .into_iter()
        .enumerate()
        .map(|(i, r)| (r, (sigmas[i + 1] - sigmas[i]) / 2))
        .filter(|(_, d)| *d != 0)
        .collect();
    Ok(JumpSpectrum { entries })
}

/// Litherland's formula `δ_{P(K)}(t) = δ_{P(U)}(t) + δ_K(w·t)`.
pub fn litherland_jump(p: &Pattern, companion: &SeifertForm, t: &CircleAngle) -> Result<i64> {
    let own = jump_at(&p.seifert, t)?;
    let shifted = t.times(p.winding);
    let theirs = if shifted.is_zero() { 0 } else { jump_at(companion, &shifted)? };
    Ok(own + theirs)
}
