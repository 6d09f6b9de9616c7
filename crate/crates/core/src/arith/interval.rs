//! Fixed-point interval arithmetic.
//!
//! An [`Interval`] is a pair of integers `lo ≤ hi` read as
//! `[lo·2^-prec, hi·2^-prec]`. Every operation rounds outward, so the true
//! value of any expression evaluated on intervals is always enclosed.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn shr_floor(x: &BigInt, k: u32) -> BigInt {
    // `>>` on BigInt rounds toward negative infinity
    x >> k
}

fn shr_ceil(x: &BigInt, k: u32) -> BigInt {
    -((-x) >> k)
}

impl Interval {
    pub fn exact_int(n: &BigInt, prec: u32) -> Self {
        let v = n << prec;
        Interval { lo: v.clone(), hi: v, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Interval { lo: BigInt::zero(), hi: BigInt::zero(), prec }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let scaled = r.numer() << prec;
        Interval { lo: scaled.div_floor(r.denom()), hi: scaled.div_ceil(r.denom()), prec }
    }

    /// `[-|r|, |r|]` style error ball around zero with radius `ulps`.
    pub fn error_ball(ulps: &BigInt, prec: u32) -> Self {
        Interval { lo: -ulps.abs(), hi: ulps.abs(), prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lo(&self) -> Rational {
        Rational::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn hi(&self) -> Rational {
        Rational::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    pub fn width_ulps(&self) -> BigInt {
        &self.hi - &self.lo
    }

    /// Magnitude bound `max(|lo|, |hi|)` in ulps.
    pub fn mag_ulps(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    /// `Some(sign)` if the interval excludes zero, `None` otherwise.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.sign().is_none()
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Interval { lo: b, hi: a, prec: self.prec }
        } else {
            Interval { lo: a, hi: b, prec: self.prec }
        }
    }

    /// Division by a positive integer.
    pub fn div_pos_int(&self, k: &BigInt) -> Self {
        debug_assert!(k.is_positive());
        Interval { lo: self.lo.div_floor(k), hi: self.hi.div_ceil(k), prec: self.prec }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        self.mul_int(r.numer()).div_pos_int(r.denom())
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Self {
        Interval { lo: (&self.lo).min(&other.lo).clone(), hi: (&self.hi).max(&other.hi).clone(), prec: self.prec }
    }

    /// Re-expresses the interval at a lower precision.
    pub fn truncate(&self, prec: u32) -> Self {
        assert!(prec <= self.prec);
        let k = self.prec - prec;
        Interval { lo: shr_floor(&self.lo, k), hi: shr_ceil(&self.hi, k), prec }
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        debug_assert_eq!(self.prec, rhs.prec);
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi, prec: self.prec }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        debug_assert_eq!(self.prec, rhs.prec);
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo, prec: self.prec }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        debug_assert_eq!(self.prec, rhs.prec);
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = products.iter().min().unwrap();
        let hi = products.iter().max().unwrap();
        Interval { lo: shr_floor(lo, self.prec), hi: shr_ceil(hi, self.prec), prec: self.prec }
    }
}

/// `arctan(1/k)` for an integer `k ≥ 2`, as an enclosing interval.
fn arctan_inv(k: u64, prec: u32) -> Interval {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let one = BigInt::one() << prec;
    // power = 2^prec / k^(2j+1), truncated toward zero
    let mut power = &one / &k;
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut j = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        terms += 1;
        power = &power / &k2;
        j += 1;
    }
    // Truncation costs < 3 ulps per term (the running power drifts by < 2),
    // and the alternating tail is below the first omitted term (< 1 ulp).
    let err = BigInt::from(3 * terms + 2);
    Interval { lo: &sum - &err, hi: &sum + &err, prec }
}

/// π enclosed at the given precision (Machin's formula).
pub fn pi(prec: u32) -> Interval {
    let work = prec + 16;
    let a = arctan_inv(5, work).mul_int(&BigInt::from(16));
    let b = arctan_inv(239, work).mul_int(&BigInt::from(4));
    (&a - &b).truncate(prec)
}

/// `cos(2π·m/n)` enclosed at the given precision.
pub fn cos_two_pi_fraction(m: &BigInt, n: &BigInt, prec: u32) -> Interval {
    assert!(n.is_positive());
    // reduce m/n into [-1/2, 1/2]
    let mut r = m.mod_floor(n);
    if &r * 2 > *n {
        r -= n;
    }
    let work = prec + 32;
    let frac = Rational::new(&r * 2, n.clone());
    let x = pi(work).mul_rational(&frac);
    cos_interval(&x).truncate(prec)
}

/// Cosine of an interval with `|x| ≤ 4`, by Taylor series with a rigorous
/// remainder bound.
fn cos_interval(x: &Interval) -> Interval {
    let prec = x.prec;
    let x2 = x * x;
    let mut term = Interval::exact_int(&BigInt::one(), prec);
    let mut sum = term.clone();
    let mut j: u64 = 1;
    loop {
        let d = BigInt::from((2 * j - 1) * (2 * j));
        term = (&term * &x2).div_pos_int(&d);
        term = -&term;
        sum = &sum + &term;
        j += 1;
        // Terms decrease in magnitude once (2j)(2j-1) > x²; with |x| ≤ 4
        // that holds from j = 3 on. The tail is bounded by the next term,
        // which in turn is bounded by the current magnitude.
        if j > 3 && term.mag_ulps() <= BigInt::one() {
            let tail = term.mag_ulps() + BigInt::one();
            return &sum + &Interval::error_ball(&tail, prec);
        }
    }
}
