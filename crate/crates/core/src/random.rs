//! Random monomials, ideals and chains for experiments and tests.
//!
//! All generators take the random source as an argument, so a seeded RNG
//! reproduces the same objects.

use rand::Rng;

use crate::chain::ChainSpec;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Var};

/// Shape limits for random ideals in a `rows x width` grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealShape {
    pub rows: u32,
    pub width: u32,
    pub max_gens: usize,
    pub max_degree: u32,
    pub squarefree: bool,
}

/// Shape limits for random chains; row count, stability index and monoid
/// index are drawn uniformly up to these maxima.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainShape {
    pub max_rows: u32,
    pub max_seed_index: u32,
    pub max_gens: usize,
    pub max_degree: u32,
}

/// A monomial of degree `1..=max_degree` in the given grid.
pub fn random_monomial<R: Rng + ?Sized>(
    rng: &mut R,
    rows: u32,
    width: u32,
    max_degree: u32,
    squarefree: bool,
) -> Monomial {
    let degree = rng.gen_range(1..=max_degree.max(1));
    let mut factors: Vec<Var> = Vec::with_capacity(degree as usize);
    for _ in 0..degree {
        let v = Var::new(rng.gen_range(1..=rows), rng.gen_range(1..=width));
        if !(squarefree && factors.contains(&v)) {
            factors.push(v);
        }
    }
    Monomial::from_factors(factors.into_iter().map(|v| (v, 1)))
}

/// A nonzero proper ideal with `1..=max_gens` candidate generators.
pub fn random_ideal<R: Rng + ?Sized>(rng: &mut R, shape: &IdealShape) -> MonomialIdeal {
    let count = rng.gen_range(1..=shape.max_gens.max(1));
    let cands: Vec<Monomial> = (0..count)
        .map(|_| random_monomial(rng, shape.rows, shape.width, shape.max_degree, shape.squarefree))
        .collect();
    MonomialIdeal::minimalize(shape.rows, shape.width, cands).expect("candidates fit the grid")
}

/// A chain with a random nonzero proper seed.
pub fn random_chain<R: Rng + ?Sized>(rng: &mut R, shape: &ChainShape) -> ChainSpec {
    let rows = rng.gen_range(1..=shape.max_rows.max(1));
    random_chain_with_rows(rng, rows, shape)
}

/// Like [`random_chain`] but with exactly `rows` rows.
pub fn random_chain_with_rows<R: Rng + ?Sized>(rng: &mut R, rows: u32, shape: &ChainShape) -> ChainSpec {
    let seed_index = rng.gen_range(1..=shape.max_seed_index.max(1));
    let monoid_index = rng.gen_range(0..seed_index);
    let seed = random_ideal(
        rng,
        &IdealShape {
            rows,
            width: seed_index,
            max_gens: shape.max_gens,
            max_degree: shape.max_degree,
            squarefree: false,
        },
    );
    ChainSpec::new(rows, monoid_index, seed_index, seed.gens().iter().cloned()).expect("seed fits its width")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes_are_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let shape = ChainShape {
            max_rows: 3,
            max_seed_index: 5,
            max_gens: 5,
            max_degree: 4,
        };
        for _ in 0..100 {
            let spec = random_chain(&mut rng, &shape);
            assert!(spec.rows() <= 3 && spec.seed_index() <= 5);
            assert!(spec.monoid_index() < spec.seed_index());
            assert!(spec.seed().is_proper() && !spec.seed().is_zero());
            assert!(spec.seed().num_gens() <= 5);
            assert!(spec.seed().gens().iter().all(|g| g.degree() <= 4));
        }
        let c1 = random_chain_with_rows(&mut rng, 1, &shape);
        assert_eq!(c1.rows(), 1);
    }

    #[test]
    fn seeded_output_is_reproducible() {
        let shape = IdealShape {
            rows: 2,
            width: 4,
            max_gens: 6,
            max_degree: 3,
            squarefree: true,
        };
        let a = random_ideal(&mut ChaCha8Rng::seed_from_u64(1), &shape);
        let b = random_ideal(&mut ChaCha8Rng::seed_from_u64(1), &shape);
        assert_eq!(a, b);
        assert!(a.is_squarefree());
    }
}
