//! Fixed, seeded inputs shared by the benchmarks.

use bihom_core::hermitian::epsilon_family;
use bihom_core::random::{random_dense_ideal, random_hermitian};
use bihom_core::{BihomForm, GradedIdeal, HermitianMatrix, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `(|z1|^2 - |z2|^2)^2 + (p/q) |z1 z2|^2`.
pub fn epsilon_form(p: i64, q: i64) -> BihomForm {
    epsilon_family(&Rational::new(p.into(), q.into()))
}

/// Full-rank complex Hermitian matrix with small integer entries.
pub fn hermitian(side: usize, seed: u64) -> HermitianMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_hermitian(&mut rng, side, 4, true, None)
}

/// Dense ideal in `n` variables with up to four generators of degree at most 3.
pub fn dense_ideal(n: usize, seed: u64) -> GradedIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_dense_ideal(&mut rng, n, 3, 4, 8)
}
