//! With one row, pd(R_n/I_n) is eventually constant or n minus a constant.
//!
//! Run with `cargo run --release --example c1_dichotomy`.

use incchain::asymptotics::{verify_c1_dichotomy, TableOptions};
use incchain::random::{random_chain_with_rows, ChainShape};
use incchain::resolution::ResolutionOptions;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> incchain::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1);
    let shape = ChainShape {
        max_rows: 1,
        max_seed_index: 4,
        max_gens: 3,
        max_degree: 3,
    };
    let opts = TableOptions {
        resolution: ResolutionOptions::default().with_gen_cap(64),
        skip_pd: false,
    };
    for _ in 0..5 {
        let spec = random_chain_with_rows(&mut rng, 1, &shape);
        let r = spec.seed_index();
        let report = verify_c1_dichotomy(&spec, r, r + 8, &opts)?;
        let pd: Vec<String> = report
            .table
            .iter()
            .flat_map(|t| &t.rows)
            .map(|row| row.pd.map_or("-".into(), |p| p.to_string()))
            .collect();
        println!("seed {} (i = {}, r = {r})", spec.seed(), spec.monoid_index());
        println!("  pd over n = {r}..{}: {}", r + 8, pd.join(" "));
        println!("  {} {}", report.verdict, report.message);
    }
    Ok(())
}
