//! Exact scalar and linear-algebra kernel.
//!
//! Everything here is parameterized by a [`Field`] descriptor so that the same
//! elimination code runs over the rationals and over prime fields.

mod field;
mod matrix;
mod random;

pub use field::{parse_rational, rational_to_string, Field, FpScalar, PrimeField, Rational, Rationals};
pub use matrix::{determinant, kernel, rref, Matrix, Rref, Subspace};
pub use random::{random_int_matrix, random_invertible, rng_from_seed};

/// Primes used for finite-field experiments unless the caller overrides them.
pub const DEFAULT_PRIMES: [u32; 9] = [5, 7, 11, 13, 17, 19, 23, 29, 31];

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num/den`. Panics if `den == 0`.
pub fn qf(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
