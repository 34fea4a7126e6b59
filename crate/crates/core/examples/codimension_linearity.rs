//! The codimension of I_n grows linearly with slope gamma_i.
//!
//! Run with `cargo run --example codimension_linearity`.

use incchain::asymptotics::{verify_codim_theorem, TableOptions};
use incchain::chain::running_example;
use incchain::random::{random_chain, ChainShape};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> incchain::Result<()> {
    let mut chains = vec![running_example()];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let shape = ChainShape {
        max_rows: 3,
        max_seed_index: 5,
        max_gens: 5,
        max_degree: 4,
    };
    chains.extend((0..3).map(|_| random_chain(&mut rng, &shape)));

    for spec in &chains {
        let r = spec.seed_index();
        let report = verify_codim_theorem(spec, r, r + 6, &TableOptions::codim_only())?;
        let column: Vec<String> = report.table.rows.iter().map(|row| row.codim.to_string()).collect();
        println!("seed {}", spec.seed());
        println!("  codim over n = {r}..{}: {}", r + 6, column.join(" "));
        println!("  gamma = {}, {} {}", report.gamma, report.verdict, report.message);
    }
    Ok(())
}
