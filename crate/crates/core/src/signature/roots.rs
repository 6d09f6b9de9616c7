//! Roots of the Alexander polynomial on the unit circle, located by their
//! angle `t ∈ (0, 1/2)` where `ζ = e^{2πit}`.
//!
//! A palindromic `Δ(z)` of degree `2d` is `z^d·R(u)` with `u = z + 1/z`, and
//! on the circle `u = 2cos(2πt)` decreases from 2 to −2 as `t` runs over
//! `[0, 1/2]`. Roots at rational `t` are the cyclotomic factors of `Δ`,
//! found by exact division. After removing them, the square-free trace
//! polynomial has no root at any rational angle, so Sturm counts evaluated at
//! the algebraic points `2cos(2πt)`, `t ∈ Q`, isolate the remaining roots
//! with rational angle endpoints.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::cyclotomic::{CircleAngle, CyclotomicField};
use crate::arith::poly::{cyclotomic, euler_phi, palindromic_to_trace, QPoly};
use crate::arith::rational::{rat, simplest_between, Rational};
use crate::error::{Error, Result};

/// Sign of `p(2cos(2πt))`, decided exactly.
pub fn sign_at_angle(p: &QPoly, t: &Rational) -> Result<Ordering> {
    let angle = CircleAngle::from_rational(t)?;
    let field = CyclotomicField::new(angle);
    let z = field.zeta_pow(1);
    let u = field.add(&z, &field.conj(&z));
    let mut acc = field.zero();
    for c in p.coeffs().iter().rev() {
        acc = field.add(&field.mul(&acc, &u), &field.from_rational(c));
    }
    Ok(field.real_sign(&acc))
}

/// Sturm sequence of a square-free trace polynomial, with memoised sign
/// variation counts at rational angles.
#[derive(Debug)]
struct Sturm {
    seq: Vec<QPoly>,
    cache: RefCell<HashMap<Rational, usize>>,
}

impl Sturm {
    fn new(p: &QPoly) -> Self {
        Sturm { seq: p.sturm_sequence(), cache: RefCell::new(HashMap::new()) }
    }

    fn variations(&self, t: &Rational) -> Result<usize> {
        if let Some(&v) = self.cache.borrow().get(t) {
            return Ok(v);
        }
        let mut count = 0;
        let mut last = Ordering::Equal;
        for q in &self.seq {
            let s = sign_at_angle(q, t)?;
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        self.cache.borrow_mut().insert(t.clone(), count);
        Ok(count)
    }

    /// Number of roots with angle in `(lo, hi)`; neither endpoint may be a
    /// root.
    fn count(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        if self.seq.is_empty() || lo >= hi {
            return Ok(0);
        }
        // u is decreasing in t
        let at_hi = self.variations(hi)?;
        let at_lo = self.variations(lo)?;
        Ok(at_hi - at_lo)
    }
}

/// A root at an irrational angle, given by a square-free trace polynomial
/// and an angle interval `(lo, hi)` containing exactly one of its roots.
#[derive(Clone, Debug)]
pub struct IrrationalRoot {
    trace_poly: QPoly,
    lo: Rational,
    hi: Rational,
}

impl IrrationalRoot {
    pub fn trace_poly(&self) -> &QPoly {
        &self.trace_poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    fn count_in(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        Sturm::new(&self.trace_poly).count(lo, hi)
    }

    /// Splits the isolating interval at a rational point `m` strictly inside
    /// it, keeping the half that holds the root.
    fn split_at(&self, m: &Rational) -> Result<IrrationalRoot> {
        let mut r = self.clone();
        if self.count_in(&self.lo, m)? == 1 {
            r.hi = m.clone();
        } else {
            r.lo = m.clone();
        }
        Ok(r)
    }

    /// Halves the isolating interval (at the simplest interior rational).
    pub fn refine(&self) -> Result<IrrationalRoot> {
        self.split_at(&simplest_between(&self.lo, &self.hi))
    }

    /// True iff both describe the same point of the circle: the gcd of the
    /// trace polynomials has a root in the intersection of the intervals.
    pub fn same_root(&self, other: &IrrationalRoot) -> Result<bool> {
        let lo = (&self.lo).max(&other.lo);
        let hi = (&self.hi).min(&other.hi);
        if lo >= hi {
            return Ok(false);
        }
        let g = self.trace_poly.gcd(&other.trace_poly);
        if g.degree().unwrap_or(0) == 0 {
            return Ok(false);
        }
        Ok(Sturm::new(&g).count(lo, hi)? > 0)
    }
}

/// A unit-circle root of the Alexander polynomial, by its angle.
#[derive(Clone, Debug)]
pub enum RootKey {
    Exact(CircleAngle),
    Isolated(IrrationalRoot),
}

impl RootKey {
    /// Compares positions on `(0, 1/2)`. Isolating intervals are refined on
    /// private copies until the order is decided.
    pub fn cmp_position(&self, other: &RootKey) -> Result<Ordering> {
        match (self, other) {
            (RootKey::Exact(a), RootKey::Exact(b)) => Ok(a.to_rational().cmp(&b.to_rational())),
            (RootKey::Exact(a), RootKey::Isolated(r)) => exact_vs_isolated(&a.to_rational(), r),
            (RootKey::Isolated(r), RootKey::Exact(a)) => Ok(exact_vs_isolated(&a.to_rational(), r)?.reverse()),
            (RootKey::Isolated(r1), RootKey::Isolated(r2)) => {
                if r1.same_root(r2)? {
                    return Ok(Ordering::Equal);
                }
                let (mut r1, mut r2) = (r1.clone(), r2.clone());
                loop {
                    if r1.hi <= r2.lo {
                        return Ok(Ordering::Less);
                    }
                    if r2.hi <= r1.lo {
                        return Ok(Ordering::Greater);
                    }
                    r1 = r1.refine()?;
                    r2 = r2.refine()?;
                }
            }
        }
    }

    pub fn same_point(&self, other: &RootKey) -> Result<bool> {
        Ok(self.cmp_position(other)? == Ordering::Equal)
    }

    /// Left and right ends of the region known to hold the root.
    fn bounds(&self) -> (Rational, Rational) {
        match self {
            RootKey::Exact(a) => (a.to_rational(), a.to_rational()),
            RootKey::Isolated(r) => (r.lo.clone(), r.hi.clone()),
        }
    }
}

fn exact_vs_isolated(a: &Rational, r: &IrrationalRoot) -> Result<Ordering> {
    if a <= &r.lo {
        return Ok(Ordering::Less);
    }
    if a >= &r.hi {
        return Ok(Ordering::Greater);
    }
    // a is never a root of the trace polynomial
    let r = r.split_at(a)?;
    Ok(if r.lo == *a { Ordering::Less } else { Ordering::Greater })
}

/// The roots of `Δ` on the open upper semicircle in increasing angle order,
/// together with one sample angle in each complementary gap:
/// `samples[i] < roots[i] < samples[i+1]`, none of them a root.
#[derive(Clone, Debug)]
pub struct RootLayout {
    pub roots: Vec<RootKey>,
    pub samples: Vec<Rational>,
}

/// Angles `a/n ∈ (0, 1/2)` of the primitive `n`-th roots of unity.
fn primitive_angles(n: u64) -> impl Iterator<Item = CircleAngle> {
    (1..n).filter(move |&a| 2 * a < n && a.gcd(&n) == 1).map(move |a| CircleAngle::new(a as i64, n as i64).unwrap())
}

/// Locates all roots of the palindromic polynomial `delta` on the unit
/// circle with angle in `(0, 1/2)`.
pub fn unit_circle_roots(delta: &QPoly) -> Result<RootLayout> {
    let half = rat(1, 2);
    if delta.is_zero() {
        return Err(Error::InvariantViolation("Alexander polynomial vanishes identically".into()));
    }
    let (mut rest, _) = delta.strip_x_power();
    if palindromic_to_trace(&rest).is_none() {
        return Err(Error::InvariantViolation(format!("Alexander polynomial {rest} is not palindromic")));
    }
    if rest.eval(&Rational::one()).is_zero() || rest.eval(&-Rational::one()).is_zero() {
        return Err(Error::InvariantViolation("Alexander polynomial vanishes at ±1".into()));
    }

    // cyclotomic factors Φₙ, n ≥ 3, with φ(n) ≤ deg; φ(n) ≥ √(n/2) bounds n
    let mut exact: Vec<CircleAngle> = Vec::new();
    let deg = rest.degree().unwrap_or(0) as u64;
    let mut n = 3u64;
    while n <= 2 * deg * deg && rest.degree().unwrap_or(0) > 0 {
        let left = rest.degree().unwrap() as u64;
        if euler_phi(n) <= left {
            let phi = cyclotomic(n);
            if rest.rem(&phi).is_zero() {
                while let Some(q) = rest.div_exact(&phi) {
                    rest = q;
                }
                exact.extend(primitive_angles(n));
            }
        }
        n += 1;
    }
    exact.sort_by_key(|a| a.to_rational());

    let trace = palindromic_to_trace(&rest).expect("quotient of palindromic polynomials");
    let trace_sf = trace.square_free().primitive();
    let sturm = (trace_sf.degree().unwrap_or(0) > 0).then(|| Sturm::new(&trace_sf));

    // partition (0, 1/2) at the exact roots and isolate inside each piece
    let mut cuts = vec![Rational::zero()];
    cuts.extend(exact.iter().map(CircleAngle::to_rational));
    cuts.push(half.clone());
    let mut roots: Vec<RootKey> = Vec::new();
    for (k, w) in cuts.windows(2).enumerate() {
        if k > 0 {
            roots.push(RootKey::Exact(exact[k - 1]));
        }
        if let Some(sturm) = &sturm {
            let (a, b) = (&w[0], &w[1]);
            let mut found = Vec::new();
            isolate(sturm, a.clone(), b.clone(), sturm.count(a, b)?, &mut found)?;
            for (mut lo, mut hi) in found {
                // keep exact roots and t = 0 (where σ is undefined) strictly
                // outside isolating intervals
                while lo == *a || (k + 1 < cuts.len() - 1 && hi == *b) {
                    let m = simplest_between(&lo, &hi);
                    if sturm.count(&lo, &m)? == 1 {
                        hi = m;
                    } else {
                        lo = m;
                    }
                }
                roots.push(RootKey::Isolated(IrrationalRoot { trace_poly: trace_sf.clone(), lo, hi }));
            }
        }
    }

    let mut samples = Vec::with_capacity(roots.len() + 1);
    let mut left = Rational::zero();
    for r in &roots {
        let (lo, hi) = r.bounds();
        samples.push(gap_sample(&left, &lo));
        left = hi;
    }
    samples.push(gap_sample(&left, &half));
    Ok(RootLayout { roots, samples })
}

/// A root-free sample in the gap `(a, b)`. When `a == b` the point is a
/// shared endpoint of two isolating intervals and therefore not a root.
fn gap_sample(a: &Rational, b: &Rational) -> Rational {
    if a == b {
        a.clone()
    } else {
        simplest_between(a, b)
    }
}

fn isolate(sturm: &Sturm, lo: Rational, hi: Rational, count: usize, out: &mut Vec<(Rational, Rational)>) -> Result<()> {
    match count {
        0 => Ok(()),
        1 => {
            out.push((lo, hi));
            Ok(())
        }
        _ => {
            let m = simplest_between(&lo, &hi);
            let left = sturm.count(&lo, &m)?;
            isolate(sturm, lo, m.clone(), left, out)?;
            isolate(sturm, m, hi, count - left, out)
        }
    }
}
