//! Seeded random polynomials for benchmarks and large-sample checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::RealPolynomial;

/// Coefficients of generated polynomials are uniform in `[-COEFFICIENT_RANGE, COEFFICIENT_RANGE]`.
pub const COEFFICIENT_RANGE: f64 = 10.0;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A monic polynomial of the given degree with random lower coefficients.
pub fn random_monic<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> RealPolynomial {
    let lower: Vec<f64> = (0..degree)
        .map(|_| rng.random_range(-COEFFICIENT_RANGE..=COEFFICIENT_RANGE))
        .collect();
    RealPolynomial::monic_from_lower(&lower).expect("monic polynomials are never zero")
}

/// `count` monic polynomials of one degree, reproducible from `seed`.
pub fn monic_corpus(seed: u64, degree: usize, count: usize) -> Vec<RealPolynomial> {
    let mut r = rng(seed ^ (degree as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    (0..count).map(|_| random_monic(&mut r, degree)).collect()
}
