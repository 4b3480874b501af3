//! Seeded random σ-codes shared by the integration tests.

#![allow(dead_code)]

use permcode::perm::Permutation;
use permcode::sigma::{code_from_generators, phi, SigmaCode};
use permcode::{LinearCode, PrimeField};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub const PRIMES: [u32; 3] = [2, 3, 5];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn field(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Uniform permutation of `n` points.
pub fn random_sigma<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    Permutation::from_images(&image).unwrap()
}

pub fn random_vector<R: Rng>(rng: &mut R, p: u32, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..p)).collect()
}

/// A σ-code generated by one or two random vectors, with `n <= max_n`.
pub fn random_sigma_code<R: Rng>(rng: &mut R, max_n: usize) -> SigmaCode {
    let p = PRIMES[rng.gen_range(0..PRIMES.len())];
    let f = field(p);
    let n = rng.gen_range(1..=max_n);
    let sigma = random_sigma(rng, n);
    let count = rng.gen_range(1..=2);
    let gens: Vec<_> = (0..count)
        .map(|_| phi(f, &sigma, &random_vector(rng, p, n)).unwrap())
        .collect();
    code_from_generators(f, &sigma, &gens).unwrap()
}

/// A self-dual σ-code: `{(x, a x)}` with `a^2 = -1`, under `τ` acting on
/// both halves. Needs `p` = 2 or 5.
pub fn random_self_dual<R: Rng>(rng: &mut R, p: u32, m: usize) -> SigmaCode {
    let f = field(p);
    let a = match p {
        2 => 1,
        5 => 2,
        _ => panic!("no square root of -1 in F_{p}"),
    };
    let tau = random_sigma(rng, m);
    let mut image: Vec<usize> = tau.images().to_vec();
    image.extend(tau.images().iter().map(|&i| i + m));
    let sigma = Permutation::from_images(&image).unwrap();
    let rows: Vec<Vec<u32>> = (0..m)
        .map(|j| {
            let mut v = vec![0u32; 2 * m];
            v[j] = 1;
            v[m + j] = a;
            v
        })
        .collect();
    let code = LinearCode::span(f, 2 * m, &rows).unwrap();
    SigmaCode::from_code(sigma, code).unwrap()
}
