//! Linear lower bounds for pd and the resulting Cohen-Macaulay obstruction.
//!
//! Run with `cargo run --release --example cm_obstruction`.

use incchain::asymptotics::{cm_obstruction, verify_pd_bounds, TableOptions};
use incchain::chain::{running_example, wide_gap_example};
use incchain::covers::default_depth_cap;
use incchain::resolution::ResolutionOptions;

fn main() -> incchain::Result<()> {
    let chains = [
        ("running example", running_example(), 4..=8),
        ("wide gap c = 3", wide_gap_example(3, 1, 3)?, 3..=7),
    ];
    let opts = TableOptions {
        resolution: ResolutionOptions::default().with_gen_cap(64),
        skip_pd: false,
    };
    for (name, spec, range) in chains {
        let depth = default_depth_cap(spec.rows());
        let bounds = verify_pd_bounds(&spec, *range.start(), *range.end(), depth, &opts)?;
        println!("{name}:");
        for cand in &bounds.candidates {
            println!("  lower-bound slope {} from {}", cand.slope, cand.source);
        }
        println!("  pd bounds: {} {}", bounds.verdict, bounds.message);
        let cm = cm_obstruction(&spec, depth)?;
        println!("  Cohen-Macaulay test: {} ({})", cm.verdict, cm.message);
    }
    Ok(())
}
