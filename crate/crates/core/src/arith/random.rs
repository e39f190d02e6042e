use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Rational, Rationals};
use super::matrix::{determinant, Matrix};
use super::q;
use num::Zero;

/// Portable, seed-stable generator used for every sampling routine.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Matrix<Rational> {
    let data = (0..rows * cols).map(|_| q(rng.gen_range(-bound..=bound))).collect();
    Matrix::from_vec(rows, cols, data)
}

/// Uniform integer `d × d` matrix with entries in `[-bound, bound]` and
/// nonzero determinant, by rejection sampling.
pub fn random_invertible(d: usize, bound: i64, seed: u64) -> Matrix<Rational> {
    assert!(d >= 1 && bound >= 1, "need d >= 1 and bound >= 1");
    let mut rng = rng_from_seed(seed);
    loop {
        let m = random_int_matrix(&mut rng, d, d, bound);
        if !determinant(&Rationals, &m).is_zero() {
            return m;
        }
    }
}
