#![allow(dead_code)]

pub mod laws;
pub mod oracle_cases;

use incchain::random::{random_chain, random_ideal, ChainShape, IdealShape};
use incchain::{ChainSpec, MonomialIdeal};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_ideal(
    seed: u64,
    rows: u32,
    width: u32,
    max_gens: usize,
    max_degree: u32,
    squarefree: bool,
) -> MonomialIdeal {
    random_ideal(
        &mut rng(seed),
        &IdealShape {
            rows,
            width,
            max_gens,
            max_degree,
            squarefree,
        },
    )
}

/// c <= 3, r <= 4, at most 4 generators of degree <= 3.
pub fn small_chain(seed: u64) -> ChainSpec {
    random_chain(
        &mut rng(seed),
        &ChainShape {
            max_rows: 3,
            max_seed_index: 4,
            max_gens: 4,
            max_degree: 3,
        },
    )
}

pub fn tiny_chain(seed: u64) -> ChainSpec {
    random_chain(
        &mut rng(seed),
        &ChainShape {
            max_rows: 2,
            max_seed_index: 3,
            max_gens: 3,
            max_degree: 3,
        },
    )
}
