//! Rational points on the unit circle and the cyclotomic fields they
//! generate.
//!
//! Elements of `Q(ζ)` are kept as polynomials in `x` reduced modulo the
//! cyclotomic polynomial Φₙ, with `x ↦ ζ = e^{2πi·a/n}`. Zero testing is
//! therefore exact (a reduced representative is zero iff the element is).
//! Signs of real elements are decided by interval evaluation at increasing
//! precision; termination follows from the exact zero test.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::interval::{cos_two_pi_fraction, Interval};
use super::poly::{cyclotomic, QPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

static START_PRECISION: AtomicU32 = AtomicU32::new(64);

/// Sets the number of bits used for the first interval evaluation when
/// deciding signs. Results never depend on this value, only running time.
pub fn set_start_precision(bits: u32) {
    START_PRECISION.store(bits.max(8), AtomicOrdering::Relaxed);
}

pub fn start_precision() -> u32 {
    START_PRECISION.load(AtomicOrdering::Relaxed)
}

/// `ζ = e^{2πi·a/n}`, stored reduced with `0 ≤ a < n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleAngle {
    a: u64,
    n: u64,
}

impl CircleAngle {
    /// Reduces `a/n` modulo 1 and to lowest terms.
    pub fn new(a: i64, n: i64) -> Result<Self> {
        if n <= 0 {
            return Err(Error::InvalidAngle(format!("{a}/{n}")));
        }
        let a = a.rem_euclid(n);
        let g = a.gcd(&n).max(1);
        Ok(CircleAngle { a: (a / g) as u64, n: (n / g) as u64 })
    }

    pub fn from_rational(t: &Rational) -> Result<Self> {
        let a: i64 = t.numer().try_into().map_err(|_| Error::InvalidAngle(t.to_string()))?;
        let n: i64 = t.denom().try_into().map_err(|_| Error::InvalidAngle(t.to_string()))?;
        Self::new(a, n)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_rational(&super::rational::parse_rational(s)?)
    }

    pub fn numer(&self) -> u64 {
        self.a
    }

    pub fn denom(&self) -> u64 {
        self.n
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.a), BigInt::from(self.n))
    }

    /// True for ζ = 1.
    pub fn is_zero(&self) -> bool {
        self.a == 0
    }

    /// The conjugate angle `1 − t`.
    pub fn conjugate(&self) -> Self {
        CircleAngle::new(-(self.a as i64), self.n as i64).expect("valid")
    }

    /// `w·t` reduced modulo 1.
    pub fn times(&self, w: i64) -> Self {
        let n = self.n as i128;
        let a = ((self.a as i128 * w as i128).rem_euclid(n)) as i64;
        CircleAngle::new(a, self.n as i64).expect("valid")
    }

    /// The representative of `{t, 1 − t}` in `[0, 1/2]`.
    pub fn fold_to_upper_half(&self) -> Self {
        if 2 * self.a > self.n {
            self.conjugate()
        } else {
            *self
        }
    }
}

impl fmt::Display for CircleAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.n)
    }
}

impl fmt::Debug for CircleAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CircleAngle({}/{})", self.a, self.n)
    }
}

/// An element of `Q(ζₙ)`, reduced modulo Φₙ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloElem(QPoly);

impl CycloElem {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn poly(&self) -> &QPoly {
        &self.0
    }
}

/// `Q(ζ)` for a fixed primitive root `ζ = e^{2πi·a/n}`.
pub struct CyclotomicField {
    angle: CircleAngle,
    modulus: QPoly,
    cos_cache: RefCell<HashMap<u32, Vec<Interval>>>,
}

impl CyclotomicField {
    pub fn new(angle: CircleAngle) -> Self {
        CyclotomicField { angle, modulus: cyclotomic(angle.n), cos_cache: RefCell::new(HashMap::new()) }
    }

    pub fn angle(&self) -> CircleAngle {
        self.angle
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn reduce(&self, p: &QPoly) -> CycloElem {
        CycloElem(p.rem(&self.modulus))
    }

    pub fn from_int(&self, k: &BigInt) -> CycloElem {
        CycloElem(QPoly::constant(Rational::from_integer(k.clone())))
    }

    pub fn from_rational(&self, r: &Rational) -> CycloElem {
        CycloElem(QPoly::constant(r.clone()))
    }

    pub fn zero(&self) -> CycloElem {
        CycloElem(QPoly::zero())
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CycloElem {
        let e = k.rem_euclid(self.angle.n as i64) as usize;
        self.reduce(&QPoly::monomial(Rational::one(), e))
    }

    pub fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloElem(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloElem(&a.0 - &b.0)
    }

    pub fn neg(&self, a: &CycloElem) -> CycloElem {
        CycloElem(-&a.0)
    }

    pub fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        self.reduce(&(&a.0 * &b.0))
    }

    pub fn scale(&self, a: &CycloElem, k: &BigInt) -> CycloElem {
        CycloElem(a.0.scale(&Rational::from_integer(k.clone())))
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self, a: &CycloElem) -> CycloElem {
        let n = self.angle.n as usize;
        let mut v = vec![Rational::zero(); n.max(1)];
        for (k, c) in a.0.coeffs().iter().enumerate() {
            v[(n - k % n) % n] += c;
        }
        self.reduce(&QPoly::new(v))
    }

    pub fn inv(&self, a: &CycloElem) -> Result<CycloElem> {
        if a.is_zero() {
            return Err(Error::DomainError("inverse of zero in cyclotomic field".into()));
        }
        let (g, s, _) = a.0.xgcd(&self.modulus);
        debug_assert_eq!(g, QPoly::one());
        Ok(self.reduce(&s))
    }

    fn cos_table(&self, prec: u32) -> Vec<Interval> {
        if let Some(t) = self.cos_cache.borrow().get(&prec) {
            return t.clone();
        }
        let n = BigInt::from(self.angle.n);
        let table: Vec<Interval> = (0..self.degree().max(1))
            .map(|k| cos_two_pi_fraction(&BigInt::from(k as u64 * self.angle.a), &n, prec))
            .collect();
        self.cos_cache.borrow_mut().insert(prec, table.clone());
        table
    }

    /// Encloses the real part of `a` at the given precision.
    pub fn real_part_interval(&self, a: &CycloElem, prec: u32) -> Interval {
        let table = self.cos_table(prec);
        let mut acc = Interval::zero(prec);
        for (k, c) in a.0.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &table[k].mul_rational(c);
        }
        acc
    }

    /// Sign of the real part of `a`. Exact: zero is detected symbolically and
    /// nonzero values are separated from zero by refining precision.
    ///
    /// Intended for real elements (where the real part is the element).
    pub fn real_sign(&self, a: &CycloElem) -> Ordering {
        let re = self.real_part(a);
        if re.is_zero() {
            return Ordering::Equal;
        }
        let mut prec = start_precision();
        loop {
            if let Some(s) = self.real_part_interval(&re, prec).sign() {
                return s;
            }
            prec *= 2;
        }
    }

    /// `(a + ā)/2`, exactly.
    pub fn real_part(&self, a: &CycloElem) -> CycloElem {
        let sum = self.add(a, &self.conj(a));
        CycloElem(sum.0.scale(&Rational::new(BigInt::one(), BigInt::from(2))))
    }

    pub fn is_real(&self, a: &CycloElem) -> bool {
        &self.conj(a) == a
    }
}
