//! Exact arithmetic kernel: rationals, integer matrices, polynomials,
//! cyclotomic fields and certified Hermitian signatures.

pub mod cyclotomic;
pub mod hermitian;
pub mod interval;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use cyclotomic::{CircleAngle, CyclotomicField};
pub use hermitian::{alexander_nonvanishing, alexander_polynomial, hermitian_signature};
pub use matrix::{rational_inverse_apply, IntMatrix};
pub use poly::QPoly;
pub use rational::Rational;
