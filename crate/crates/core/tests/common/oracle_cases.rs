//! Fast routines against brute-force oracles, one random case per seed.

use std::collections::BTreeSet;

use incchain::chain::{orbit, orbit_bruteforce};
use incchain::covers::{gamma, gamma_bruteforce};
use incchain::decomposition::codim_bruteforce;
use incchain::random::random_monomial;
use incchain::resolution::{betti, betti_taylor_oracle, pd_quotient, pd_taylor_oracle, FieldChar, ResolutionOptions};
use incchain::{codim, MonomialIdeal};
use rand::Rng;

use super::{rng, small_ideal};

pub type Outcome = Result<(), String>;

fn agree<T: PartialEq + std::fmt::Debug>(what: &str, fast: T, slow: T) -> Outcome {
    if fast == slow {
        Ok(())
    } else {
        Err(format!("{what}: fast {fast:?}, oracle {slow:?}"))
    }
}

/// Up to 4 rows and 5 columns, so at most 20 variables.
pub fn codim_case(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let rows = r.gen_range(1..=4);
    let width = r.gen_range(1..=5);
    let j = small_ideal(seed, rows, width, 7, 3, seed.is_multiple_of(2));
    agree(&format!("codim of {j:?}"), codim(&j), codim_bruteforce(&j).unwrap())
}

/// At most 6 generators in at most 8 variables.
pub fn taylor_sized(seed: u64) -> MonomialIdeal {
    let mut r = rng(seed ^ 0xBE77);
    let rows = r.gen_range(1..=2);
    let width = r.gen_range(2..=4);
    small_ideal(seed, rows, width, 6, 3, seed.is_multiple_of(3))
}

pub fn pd_case(seed: u64, field: FieldChar) -> Outcome {
    let j = taylor_sized(seed);
    let opts = ResolutionOptions::default().with_field(field);
    agree(
        &format!("pd of {j:?}"),
        pd_quotient(&j, &opts).unwrap(),
        pd_taylor_oracle(&j, field).unwrap(),
    )
}

pub fn betti_case(seed: u64) -> Outcome {
    let j = taylor_sized(seed);
    let full = ResolutionOptions {
        full_table: true,
        ..ResolutionOptions::default()
    };
    agree(
        &format!("Betti table of {j:?}"),
        betti(&j, &full).unwrap(),
        betti_taylor_oracle(&j, FieldChar::Rational).unwrap(),
    )
}

/// Every `i < m <= n <= 8`, three random monomials each.
pub fn orbit_cases() -> Outcome {
    let mut r = rng(0x0EB1);
    for m in 1..=8u32 {
        for n in m..=8 {
            for i in 0..m {
                for _ in 0..3 {
                    let u = random_monomial(&mut r, 2, m, 3, false);
                    let fast: BTreeSet<_> = orbit(&u, i, m, n).unwrap().into_iter().collect();
                    let slow: BTreeSet<_> = orbit_bruteforce(&u, i, m, n).into_iter().collect();
                    agree(&format!("orbit of {u} (i = {i}, m = {m}, n = {n})"), fast, slow)?;
                }
            }
        }
    }
    Ok(())
}

pub fn gamma_case(seed: u64) -> Outcome {
    let mut r = rng(seed ^ 0x6A);
    let rows = r.gen_range(1..=4);
    let width = r.gen_range(1..=5);
    let i = r.gen_range(0..width);
    let j = small_ideal(seed, rows, width, 6, 3, false);
    agree(
        &format!("gamma_{i} of {j:?}"),
        gamma(&j, i).gamma,
        gamma_bruteforce(&j, i),
    )
}
