//! Structural identities checked per random seed; shared by the property
//! suite and the acceptance run.

use incchain::chain::{e_ideal, inc_image, shift_ideal};
use incchain::covers::{
    e_chains, gamma, gamma_bruteforce, gamma_by_e_split, gamma_chain, minimal_covers_bruteforce, CoverSet,
};
use incchain::random::random_monomial;
use incchain::resolution::{pd_ideal, pd_quotient, ResolutionOptions};
use incchain::{codim, ChainSpec, Degree, EVector, Monomial, MonomialIdeal, Var};
use rand::Rng;

use super::{rng, small_chain, small_ideal, tiny_chain};

pub type Outcome = Result<(), String>;
pub type Law = fn(u64) -> Outcome;

macro_rules! check {
    ($cond:expr) => {
        if !$cond {
            return Err(format!("{} failed", stringify!($cond)));
        }
    };
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

macro_rules! check_eq {
    ($a:expr, $b:expr) => {{
        let (a, b) = (&$a, &$b);
        if a != b {
            return Err(format!("{} = {:?}, expected {:?}", stringify!($a), a, b));
        }
    }};
}

fn random_var(seed: u64, rows: u32, width: u32) -> Var {
    let mut r = rng(seed);
    Var::new(r.gen_range(1..=rows), r.gen_range(1..=width))
}

pub fn random_e(seed: u64, rows: u32, max: u32) -> EVector {
    let mut r = rng(seed);
    EVector((0..rows).map(|_| r.gen_range(0..=max)).collect())
}

fn column_vars(rows: u32, col: u32) -> impl Iterator<Item = Var> {
    (1..=rows).map(move |k| Var::new(k, col))
}

pub fn q_equal(spec: &ChainSpec, e: &EVector) -> bool {
    let r = spec.seed_index();
    let lhs = e_ideal(&spec.generate(r + 1), spec.monoid_index(), e)
        .q_invariant()
        .unwrap();
    lhs == spec.seed().q_invariant().unwrap()
}

pub fn colon_membership(seed: u64) -> Outcome {
    let j = small_ideal(seed, 2, 4, 5, 3, false);
    let mut r = rng(seed ^ 1);
    let u = random_monomial(&mut r, 2, 4, 4, false);
    let v = random_monomial(&mut r, 2, 4, 3, false);
    check_eq!(j.colon(&v).contains(&u), j.contains(&u.mul(&v)));
    check_eq!(j.contains(&u), j.gens().iter().any(|g| g.divides(&u)));
    check!(j.is_subset_of(&j.colon(&v)));
    Ok(())
}

pub fn radical_membership(seed: u64) -> Outcome {
    let j = small_ideal(seed, 2, 4, 5, 4, false);
    let u = random_monomial(&mut rng(seed ^ 2), 2, 4, 3, false);
    let power = j.gens().iter().map(Monomial::max_exponent).max().unwrap();
    let rad = j.radical();
    check_eq!(rad.contains(&u), j.contains(&u.pow(power)));
    check!(rad.is_squarefree());
    check_eq!(rad.radical(), rad.clone());
    check!(j.is_subset_of(&rad));
    Ok(())
}

pub fn covers_pass_to_multiples(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let u = random_monomial(&mut r, 3, 4, 3, false);
    let w = random_monomial(&mut r, 3, 4, 2, false);
    let c = CoverSet::new((1..=3).filter(|_| r.gen_bool(0.5)));
    if c.covers(&u) {
        check!(c.covers(&u.mul(&w)));
    }
    Ok(())
}

pub fn covers_and_gamma_are_monotone(seed: u64) -> Outcome {
    let j = small_ideal(seed, 3, 5, 4, 3, false);
    let extra = small_ideal(seed ^ 3, 3, 5, 3, 3, false);
    let bigger = j.sum(&extra).unwrap();
    let i = rng(seed ^ 4).gen_range(0..5);
    for mask in 0u32..8 {
        let c = CoverSet::new((1..=3).filter(|k| mask >> (k - 1) & 1 == 1));
        if c.is_cover_of(&bigger, i) {
            check!(c.is_cover_of(&j, i));
        }
    }
    check!(gamma(&j, i).gamma <= gamma(&bigger, i).gamma);
    check_eq!(gamma(&j, i).gamma, gamma(&j.radical(), i).gamma);
    Ok(())
}

pub fn cover_family_contains_minimal_covers(seed: u64) -> Outcome {
    let j = small_ideal(seed, 3, 5, 5, 3, false);
    let i = rng(seed ^ 5).gen_range(0..5);
    let report = gamma(&j, i);
    for c in minimal_covers_bruteforce(&j, i) {
        check!(report.family.contains(&c));
    }
    check_eq!(report.gamma, gamma_bruteforce(&j, i));
    Ok(())
}

pub fn gamma_is_constant_from_the_stability_index(seed: u64) -> Outcome {
    let spec = small_chain(seed);
    let i = spec.monoid_index();
    let r = spec.seed_index();
    let g = gamma(&spec.generate(r), i).gamma;
    for n in r + 1..=r + 5 {
        check_eq!(gamma(&spec.generate(n), i).gamma, g);
    }
    Ok(())
}

pub fn squarefree_codim_splits_along_a_variable(seed: u64) -> Outcome {
    let j = small_ideal(seed, 3, 4, 6, 3, true);
    let x = random_var(seed ^ 6, 3, 4);
    let colon = j.colon(&Monomial::var(x.row, x.col)).add_vars([x]).unwrap();
    let plus = j.add_vars([x]).unwrap();
    let split = codim(&colon).saturating_sub(1).min(codim(&plus));
    check_eq!(codim(&j), split);
    Ok(())
}

pub fn e_ideal_q_inequality_and_equality_case(seed: u64) -> Outcome {
    let spec = small_chain(seed);
    let (i, r, c) = (spec.monoid_index(), spec.seed_index(), spec.rows());
    let e = random_e(seed ^ 7, c, 2);
    let at = |n: u32| e_ideal(&spec.generate(n + 1), i, &e);
    let shifted = |n: u32| {
        shift_ideal(i, &spec.generate(n))
            .add_vars(column_vars(c, i + 1))
            .unwrap()
    };
    let q_seed = spec.seed().q_invariant().unwrap();
    let q_e = at(r).q_invariant().unwrap();
    check!(q_e <= q_seed);
    check_eq!(q_e == q_seed, at(r) == shifted(r));
    if q_e == q_seed {
        for n in r + 1..=r + 2 {
            check_eq!(at(n), shifted(n));
        }
    }
    Ok(())
}

pub fn q_equality_adds_c_to_codim(seed: u64) -> Outcome {
    let spec = small_chain(seed);
    let e = random_e(seed ^ 8, spec.rows(), 2);
    if q_equal(&spec, &e) {
        let ech = spec.e_chain(&e).unwrap();
        for n in spec.seed_index()..=spec.seed_index() + 3 {
            check_eq!(
                codim(&ech.generate(n + 1)),
                codim(&spec.generate(n)).plus(u64::from(spec.rows()))
            );
        }
    }
    Ok(())
}

pub fn squarefree_codim_over_binary_e(seed: u64) -> Outcome {
    let spec = small_chain(seed).radical();
    let (i, r) = (spec.monoid_index(), spec.seed_index());
    for n in r..=r + 2 {
        let j = spec.generate(n);
        let best = EVector::binary(spec.rows())
            .iter()
            .map(|e| codim(&e_ideal(&j, i, e)).saturating_sub(e.norm()))
            .min()
            .unwrap();
        check_eq!(codim(&j), best);
    }
    Ok(())
}

pub fn e_chain_gamma_bounds(seed: u64) -> Outcome {
    let spec = small_chain(seed);
    let g = gamma_chain(&spec).gamma;
    let e = random_e(seed ^ 9, spec.rows(), 3);
    let ge = gamma_chain(&spec.e_chain(&e).unwrap()).gamma;
    check!(g <= ge);
    if q_equal(&spec, &e) {
        check_eq!(g, ge);
    }
    // The binary-vector bound needs a squarefree chain; gamma is unchanged
    // by passing to the radical.
    let rad = spec.radical();
    check_eq!(gamma_chain(&rad).gamma, g);
    for b in EVector::binary(rad.rows()) {
        if q_equal(&rad, &b) {
            check!(g <= Degree::Finite(u64::from(rad.rows()) - b.norm()));
        }
    }
    check_eq!(gamma_by_e_split(&spec).unwrap(), g);
    Ok(())
}

pub fn pd_under_colon_and_sum_with_a_variable(seed: u64) -> Outcome {
    let j = small_ideal(seed, 2, 3, 4, 3, false);
    let x = random_var(seed ^ 10, 2, 3);
    let xm = Monomial::var(x.row, x.col);
    let opts = ResolutionOptions::default();
    let pd = |a: &MonomialIdeal| pd_ideal(a, &opts).unwrap() as i64;
    let p = pd(&j);
    let (colon, plus) = (pd(&j.colon(&xm)), pd(&j.add_vars([x]).unwrap()));
    check!(p == colon || p == plus);
    check!(colon.max(plus - 1) <= p);

    let mut d = 1;
    while j.colon(&xm.pow(d)) != j.colon(&xm.pow(d + 1)) {
        d += 1;
    }
    let step = |k: u32| pd(&j.colon(&xm.pow(k)).add_vars([x]).unwrap());
    let lower = (0..=d).map(step).max().unwrap() - 1;
    check!(lower <= p);
    check!(p == step(d) - 1 || (0..d).any(|k| step(k) == p));
    Ok(())
}

pub fn e_chain_pd_sandwich(seed: u64) -> Outcome {
    let spec = tiny_chain(seed);
    let opts = ResolutionOptions::default();
    let chains = e_chains(&spec);
    let c = i64::from(spec.rows());
    for n in spec.seed_index() + 1..=spec.seed_index() + 2 {
        let top = chains
            .iter()
            .map(|(_, ch)| pd_ideal(&ch.generate(n), &opts).unwrap() as i64)
            .max()
            .unwrap();
        let p = pd_ideal(&spec.generate(n), &opts).unwrap() as i64;
        check!(top - c <= p && p <= top, "n={} pd={} max={}", n, p, top);
    }
    Ok(())
}

pub fn chains_are_invariant_and_stable(seed: u64) -> Outcome {
    let spec = small_chain(seed);
    let (i, r) = (spec.monoid_index(), spec.seed_index());
    for m in r..=r + 2 {
        check!(spec.verify_stability(m));
        for n in m..=r + 3 {
            check!(inc_image(&spec.generate(m), i, n).is_subset_of(&spec.generate(n)));
        }
    }
    for n in 1..r {
        check!(spec.generate(n).is_zero());
    }
    Ok(())
}

pub fn pd_lies_between_codim_and_variable_count(seed: u64) -> Outcome {
    let spec = tiny_chain(seed);
    let opts = ResolutionOptions::default();
    let mut last = Degree::Finite(0);
    for n in spec.seed_index()..=spec.seed_index() + 3 {
        let j = spec.generate(n);
        let cd = codim(&j);
        check!(last <= cd);
        last = cd;
        if j.num_gens() <= 12 {
            let p = u64::from(pd_quotient(&j, &opts).unwrap());
            check!(Degree::Finite(p) >= cd);
            check!(p <= u64::from(spec.rows()) * u64::from(n));
        }
    }
    Ok(())
}

/// The e-chain pd sandwich on the running example and the wide-gap chains.
pub fn named_chain_pd_sandwich() -> Outcome {
    let opts = ResolutionOptions::default().with_gen_cap(64);
    let mut specs = vec![(incchain::chain::running_example(), 5..=7)];
    for c in 2..=3 {
        specs.push((incchain::chain::wide_gap_example(c, 1, 3).unwrap(), 4..=6));
    }
    for (spec, range) in specs {
        let chains = e_chains(&spec);
        let c = i64::from(spec.rows());
        for n in range {
            let top = chains
                .iter()
                .map(|(_, ch)| pd_ideal(&ch.generate(n), &opts).unwrap() as i64)
                .max()
                .unwrap();
            let p = pd_ideal(&spec.generate(n), &opts).unwrap() as i64;
            check!(top - c <= p && p <= top, "n={n}: pd {p}, e-chain max {top}");
        }
    }
    Ok(())
}

/// Every law with its name, for table-driven runs.
pub const ALL: &[(&str, Law)] = &[
    ("colon_membership", colon_membership),
    ("radical_membership", radical_membership),
    ("covers_pass_to_multiples", covers_pass_to_multiples),
    ("covers_and_gamma_are_monotone", covers_and_gamma_are_monotone),
    (
        "cover_family_contains_minimal_covers",
        cover_family_contains_minimal_covers,
    ),
    (
        "gamma_is_constant_from_the_stability_index",
        gamma_is_constant_from_the_stability_index,
    ),
    (
        "squarefree_codim_splits_along_a_variable",
        squarefree_codim_splits_along_a_variable,
    ),
    (
        "e_ideal_q_inequality_and_equality_case",
        e_ideal_q_inequality_and_equality_case,
    ),
    ("q_equality_adds_c_to_codim", q_equality_adds_c_to_codim),
    ("squarefree_codim_over_binary_e", squarefree_codim_over_binary_e),
    ("e_chain_gamma_bounds", e_chain_gamma_bounds),
    (
        "pd_under_colon_and_sum_with_a_variable",
        pd_under_colon_and_sum_with_a_variable,
    ),
    ("e_chain_pd_sandwich", e_chain_pd_sandwich),
    ("chains_are_invariant_and_stable", chains_are_invariant_and_stable),
    (
        "pd_lies_between_codim_and_variable_count",
        pd_lies_between_codim_and_variable_count,
    ),
];
