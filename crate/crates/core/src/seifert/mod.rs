//! Seifert forms, winding-number-zero patterns and linking numbers in the
//! branched double cover.
//!
//! A pattern is described by the Seifert form `S` of `P(U)` (a Seifert
//! surface inside the solid torus) together with the coordinates `v` of the
//! meridian curve `∂D²` in the Alexander dual basis. The branched double
//! cover `Σ(P(U))` has the surgery description with linking matrix `S + Sᵀ`,
//! and the framed lift `J` of `∂D²` has rational self-linking
//! `l = −v·(S+Sᵀ)⁻¹·vᵀ`.

pub mod genus1;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::matrix::{rational_inverse_apply, rational_inverse_bilinear, IntMatrix};
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

pub use genus1::{genus1_enumerate, genus1_form, genus1_nonzero, genus1_pattern, genus1_value};

/// A Seifert matrix `V` of a knot: square, even-dimensional, with
/// `det(V − Vᵀ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertForm {
    matrix: IntMatrix,
    name: Option<String>,
}

impl SeifertForm {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        if !matrix.rows().is_multiple_of(2) {
            return Err(Error::InvariantViolation(format!(
                "Seifert matrix must have even dimension, got {}",
                matrix.rows()
            )));
        }
        let d = (&matrix - &matrix.transpose()).det()?;
        if !d.is_one() {
            return Err(Error::InvariantViolation(format!("det(V - V^T) = {d}, expected 1")));
        }
        Ok(SeifertForm { matrix, name: None })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn unknot() -> Self {
        SeifertForm { matrix: IntMatrix::zeros(0, 0), name: Some("unknot".into()) }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn genus(&self) -> usize {
        self.dim() / 2
    }

    /// Seifert form of the mirror image, `−Vᵀ`.
    pub fn mirror(&self) -> Self {
        SeifertForm { matrix: -&self.matrix.transpose(), name: self.name.as_ref().map(|n| format!("m({n})")) }
    }

    /// Seifert form of the connected sum, `V ⊕ V′`.
    pub fn connected_sum(&self, other: &SeifertForm) -> Self {
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}#{b}")),
            _ => None,
        };
        SeifertForm { matrix: self.matrix.direct_sum(&other.matrix), name }
    }

    /// Change of basis `V ↦ U·V·Uᵀ` for unimodular `U`.
    pub fn change_basis(&self, u: &IntMatrix) -> Result<Self> {
        let d = u.det()?;
        if d.abs() != BigInt::one() {
            return Err(Error::InvariantViolation(format!("basis change has determinant {d}")));
        }
        let m = &(u * &self.matrix) * &u.transpose();
        Ok(SeifertForm { matrix: m, name: self.name.clone() })
    }
}

/// A knot in the solid torus: the Seifert form of `P(U)`, the winding number
/// and the Alexander-dual coordinates of the axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub name: String,
    pub seifert: SeifertForm,
    pub winding: i64,
    pub axis_linking: Vec<BigInt>,
}

impl Pattern {
    pub fn new(name: impl Into<String>, seifert: SeifertForm, winding: i64, axis_linking: Vec<BigInt>) -> Result<Self> {
        if axis_linking.len() != seifert.dim() {
            return Err(Error::DimensionMismatch { expected: seifert.dim(), got: axis_linking.len() });
        }
        Ok(Pattern { name: name.into(), seifert, winding, axis_linking })
    }

    /// Convenience constructor for small integer data.
    pub fn from_ints(name: &str, rows: &[Vec<i64>], winding: i64, axis: &[i64]) -> Result<Self> {
        let s = SeifertForm::from_rows(rows)?.with_name(name);
        Self::new(name, s, winding, axis.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// The mirror pattern `m(P)`: Seifert form `−Sᵀ`, same axis coordinates.
    pub fn mirror(&self) -> Self {
        Pattern {
            name: format!("m({})", self.name),
            seifert: self.seifert.mirror(),
            winding: self.winding,
            axis_linking: self.axis_linking.clone(),
        }
    }

    /// The twist-knot pattern `P_k` with its Seifert matrix `[[k,0],[−1,−1]]`
    /// and axis vector `(1,0)`; `k = 0` is the Whitehead double pattern.
    pub fn twist(k: i64) -> Self {
        Self::from_ints(&format!("twist_{k}"), &[vec![k, 0], vec![-1, -1]], 0, &[1, 0]).expect("valid twist pattern")
    }
}

/// `S + Sᵀ`, the linking matrix of the surgery description of the branched
/// double cover. Its determinant is always odd.
pub fn branched_cover_matrix(s: &SeifertForm) -> Result<IntMatrix> {
    let m = s.matrix();
    let a = m + &m.transpose();
    let d = a.det()?;
    if d.is_even() {
        return Err(Error::InvariantViolation(format!("det(S+S^T) = {d} is even")));
    }
    Ok(a)
}

/// Rational self-linking `l` of the framed lift of the axis in `Σ(P(U))`.
pub fn axis_self_linking(p: &Pattern) -> Result<Rational> {
    if p.winding != 0 {
        return Err(Error::NonzeroWinding(p.winding));
    }
    if p.axis_linking.iter().all(Zero::is_zero) {
        return Ok(Rational::zero());
    }
    let a = p.seifert.matrix() + &p.seifert.matrix().transpose();
    match rational_inverse_apply(&a, &p.axis_linking) {
        Ok(x) => Ok(-x),
        Err(Error::SingularMatrix) => Err(Error::SingularCover),
        Err(e) => Err(e),
    }
}

/// Linking data of a framed link in S³ together with auxiliary curves in its
/// complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryPresentation {
    linking_matrix: IntMatrix,
    curves: BTreeMap<String, Vec<BigInt>>,
    s3_linking: BTreeMap<(String, String), BigInt>,
}

impl SurgeryPresentation {
    pub fn new(linking_matrix: IntMatrix) -> Result<Self> {
        if !linking_matrix.is_symmetric() {
            return Err(Error::InvariantViolation("linking matrix must be symmetric".into()));
        }
        if linking_matrix.det()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(SurgeryPresentation { linking_matrix, curves: BTreeMap::new(), s3_linking: BTreeMap::new() })
    }

    pub fn linking_matrix(&self) -> &IntMatrix {
        &self.linking_matrix
    }

    /// Registers a curve by its linking numbers with each link component.
    pub fn add_curve(&mut self, name: impl Into<String>, linking: Vec<BigInt>) -> Result<()> {
        if linking.len() != self.linking_matrix.rows() {
            return Err(Error::DimensionMismatch { expected: self.linking_matrix.rows(), got: linking.len() });
        }
        self.curves.insert(name.into(), linking);
        Ok(())
    }

    /// Records `lk_{S³}(a, b)` (symmetric). For `a == b` this is the framing.
    pub fn set_s3_linking(&mut self, a: &str, b: &str, value: BigInt) -> Result<()> {
        for c in [a, b] {
            if !self.curves.contains_key(c) {
                return Err(Error::UnknownCurve(c.to_string()));
            }
        }
        self.s3_linking.insert(Self::key(a, b), value);
        Ok(())
    }

    fn key(a: &str, b: &str) -> (String, String) {
        if a <= b {
            (a.to_string(), b.to_string())
        } else {
            (b.to_string(), a.to_string())
        }
    }

    pub fn curve(&self, name: &str) -> Result<&[BigInt]> {
        self.curves.get(name).map(Vec::as_slice).ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn s3_linking(&self, a: &str, b: &str) -> Result<&BigInt> {
        self.curve(a)?;
        self.curve(b)?;
        self.s3_linking.get(&Self::key(a, b)).ok_or_else(|| Error::MissingLinking(a.to_string(), b.to_string()))
    }
}

/// Rational linking number of two curves in the surgered manifold:
/// `lk_{S³}(η,η′) − lk(η,L)·A⁻¹·lk(η′,L)ᵀ`.
pub fn surgery_linking(sp: &SurgeryPresentation, eta: &str, eta_prime: &str) -> Result<Rational> {
    let u = sp.curve(eta)?;
    let w = sp.curve(eta_prime)?;
    let base = Rational::from_integer(sp.s3_linking(eta, eta_prime)?.clone());
    let correction = rational_inverse_bilinear(sp.linking_matrix(), u, w)?;
    Ok(base - correction)
}

/// The intersection form `⟨pq + q²l⟩` of the 2-handle cobordism.
pub fn cobordism_form(p: i64, q: i64, l: &Rational) -> Result<Rational> {
    if q == 0 {
        return Err(Error::ZeroQ);
    }
    let (p, q) = (Rational::from_integer(p.into()), Rational::from_integer(q.into()));
    Ok(&p * &q + &q * &q * l)
}

pub fn is_negative_definite(form: &Rational) -> bool {
    form.is_negative()
}
