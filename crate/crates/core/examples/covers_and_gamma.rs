//! Covers of a monomial ideal and the cover number gamma_i.
//!
//! Run with `cargo run --example covers_and_gamma`.

use incchain::covers::{gamma, gamma_bruteforce, partition_generators};
use incchain::{minimal_primes, Monomial, MonomialIdeal};

fn main() -> incchain::Result<()> {
    let gens = [
        "x[2,1]^4",
        "x[1,1]^3*x[2,3]^2*x[1,4]",
        "x[3,2]*x[1,3]^2*x[2,4]",
        "x[2,3]^3*x[1,4]^2",
        "x[2,4]^2*x[3,5]^4",
    ];
    let j = MonomialIdeal::minimalize(3, 6, gens.iter().map(|g| g.parse::<Monomial>().unwrap()))?;
    let i = 2;

    let parts = partition_generators(&j, i)?;
    let show = |us: &[Monomial]| us.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    println!("right of column {i}: {}", show(&parts.plus));
    println!(
        "straddling: {}",
        parts
            .mid
            .iter()
            .map(|s| s.whole.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("left: {}", show(&parts.minus));

    let plus = MonomialIdeal::minimalize(3, 6, parts.plus)?;
    for p in minimal_primes(&plus) {
        println!("minimal prime {p} projects to rows {:?}", p.rows());
    }

    let report = gamma(&j, i);
    let family: Vec<String> = report.family.iter().map(ToString::to_string).collect();
    let minimal: Vec<String> = report.minimal_covers.iter().map(ToString::to_string).collect();
    println!("cover family: {}", family.join(" "));
    println!("minimal covers: {}", minimal.join(" "));
    println!(
        "gamma_{i} = {} (subset search agrees: {})",
        report.gamma,
        gamma_bruteforce(&j, i) == report.gamma
    );
    Ok(())
}
