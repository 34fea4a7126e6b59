//! Betti numbers and projective dimension along a chain.
//!
//! Run with `cargo run --release --example betti_and_pd`.

use std::time::Instant;

use incchain::chain::running_example;
use incchain::resolution::{betti, pd_estimate, FieldChar, ResolutionOptions};

fn main() -> incchain::Result<()> {
    let spec = running_example();

    let full = ResolutionOptions {
        full_table: true,
        ..ResolutionOptions::default()
    };
    let table = betti(&spec.generate(5), &full)?;
    println!("Betti numbers of I_5 by homological degree: {:?}", table.totals());
    println!("pd(R_5/I_5) = {}", table.pd_quotient());

    for ch in [0, 32003] {
        let opts = ResolutionOptions::default().with_field(FieldChar::new(ch)?);
        println!("characteristic {ch}:");
        for n in 4..=10 {
            let start = Instant::now();
            let pd = pd_estimate(&spec.generate(n), &opts)?;
            println!("  n = {n:2}  pd = {pd:8}  ({:.2?})", start.elapsed());
        }
    }
    Ok(())
}
