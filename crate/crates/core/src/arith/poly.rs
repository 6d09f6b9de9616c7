//! Dense univariate polynomials over the rationals.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Coefficients are stored lowest degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints<T: Into<BigInt> + Copy>(cs: &[T]) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// Drops the largest power of `x` dividing the polynomial; returns the
    /// quotient and the power removed.
    pub fn strip_x_power(&self) -> (Self, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (Self::new(self.coeffs[k..].to_vec()), k)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = &r[k] * &lc_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] -= &c * dc;
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·other = g`, `g`
    /// monic.
    pub fn xgcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Square-free part `p / gcd(p, p')`, made monic.
    pub fn square_free(&self) -> QPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Scales to an integer polynomial with content 1 and positive leading
    /// coefficient.
    pub fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        QPoly::new(ints.into_iter().map(|c| Rational::from_integer(c / &content * &sign)).collect())
    }

    /// Integer coefficients, if all coefficients are integral.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// `self(x^k)`.
    pub fn compose_power(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        QPoly::new(v)
    }

    /// Sturm sequence of a polynomial (assumed square-free).
    pub fn sturm_sequence(&self) -> Vec<QPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps sign information
            let p = r.primitive();
            let p = if r.leading().unwrap().is_negative() { -&p } else { p };
            seq.push(-&p);
        }
        seq
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

thread_local! {
    static CYCLOTOMIC_CACHE: RefCell<HashMap<u64, QPoly>> = RefCell::new(HashMap::new());
}

/// The `n`-th cyclotomic polynomial Φₙ (integer coefficients, monic).
pub fn cyclotomic(n: u64) -> QPoly {
    assert!(n >= 1);
    if let Some(p) = CYCLOTOMIC_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // Φₙ = (xⁿ − 1) / ∏_{d | n, d < n} Φ_d
    let mut p = &QPoly::monomial(Rational::one(), n as usize) - &QPoly::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic(d)).expect("cyclotomic divisibility");
        }
    }
    CYCLOTOMIC_CACHE.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// For a palindromic `P(z)` of even degree `2d` (`cₖ = c_{2d−k}`), returns
/// `R(u)` of degree `d` with `z^{−d}·P(z) = R(z + 1/z)`. Returns `None` if
/// the input is not palindromic of even degree.
pub fn palindromic_to_trace(p: &QPoly) -> Option<QPoly> {
    let deg = p.degree()?;
    if deg % 2 == 1 {
        return None;
    }
    let d = deg / 2;
    if (0..=deg).any(|k| p.coeff(k) != p.coeff(deg - k)) {
        return None;
    }
    // D₀ = 2, D₁ = u, D_{k+1} = u·D_k − D_{k−1}, with D_k(z+1/z) = z^k + z^{−k}.
    let u = QPoly::x();
    let mut dk_prev = QPoly::from_ints(&[2]);
    let mut dk = u.clone();
    let mut r = QPoly::constant(p.coeff(d));
    for k in 1..=d {
        r = &r + &dk.scale(&p.coeff(d + k));
        let next = &(&u * &dk) - &dk_prev;
        dk_prev = std::mem::replace(&mut dk, next);
    }
    Some(r)
}

/// `z^d · R(z + 1/z)` as a polynomial in `z`, where `d = deg R`.
pub fn trace_to_palindromic(r: &QPoly) -> QPoly {
    let Some(d) = r.degree() else { return QPoly::zero() };
    // (z² + 1)^k · z^{d−k} for each term c_k u^k
    let z2p1 = QPoly::from_ints(&[1, 0, 1]);
    let mut acc = QPoly::zero();
    let mut pow = QPoly::one();
    for k in 0..=d {
        let term = pow.shift(d - k).scale(&r.coeff(k));
        acc = &acc + &term;
        pow = &pow * &z2p1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), QPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), QPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(6), QPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(10), QPoly::from_ints(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic(12), QPoly::from_ints(&[1, 0, -1, 0, 1]));
        for n in 1..60 {
            assert_eq!(cyclotomic(n).degree().unwrap() as u64, euler_phi(n));
        }
    }

    #[test]
    fn division_and_gcd() {
        let a = QPoly::from_ints(&[-1, 0, 1]); // x²−1
        let b = QPoly::from_ints(&[1, 1]); // x+1
        assert_eq!(a.div_exact(&b).unwrap(), QPoly::from_ints(&[-1, 1]));
        let c = QPoly::from_ints(&[1, 2, 1]); // (x+1)²
        assert_eq!(a.gcd(&c), b);
        assert_eq!(c.square_free(), b);
        let (g, s, t) = a.xgcd(&QPoly::from_ints(&[2, 1]));
        assert_eq!(g, QPoly::one());
        assert_eq!(&(&s * &a) + &(&t * &QPoly::from_ints(&[2, 1])), QPoly::one());
    }

    #[test]
    fn palindromic_round_trip() {
        // z² − z + 1 = z·((z + 1/z) − 1)
        let p = QPoly::from_ints(&[1, -1, 1]);
        let r = palindromic_to_trace(&p).unwrap();
        assert_eq!(r, QPoly::from_ints(&[-1, 1]));
        assert_eq!(trace_to_palindromic(&r), p);
        let p = QPoly::from_ints(&[1, -1, 1, -1, 1]);
        let r = palindromic_to_trace(&p).unwrap();
        assert_eq!(trace_to_palindromic(&r), p);
        assert_eq!(r.eval(&int(2)), p.eval(&int(1)));
        assert!(palindromic_to_trace(&QPoly::from_ints(&[1, 2])).is_none());
    }

    #[test]
    fn sturm_counts_roots() {
        // (x−1)(x−2)(x+3)
        let p = &(&QPoly::from_ints(&[-1, 1]) * &QPoly::from_ints(&[-2, 1])) * &QPoly::from_ints(&[3, 1]);
        let seq = p.sturm_sequence();
        let changes = |x: Rational| {
            let signs: Vec<i32> = seq
                .iter()
                .map(|q| q.eval(&x))
                .filter(|v| !v.is_zero())
                .map(|v| if v.is_positive() { 1 } else { -1 })
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        assert_eq!(changes(int(-10)) - changes(int(10)), 3);
        assert_eq!(changes(int(0)) - changes(int(10)), 2);
    }
}
