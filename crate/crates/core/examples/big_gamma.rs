//! e-chains, the depth-capped Gamma_i and the colon bound v_M.
//!
//! Run with `cargo run --example big_gamma`.

use incchain::chain::wide_gap_example;
use incchain::covers::{big_gamma, default_depth_cap, e_chains, gamma_chain, vm_bound};

fn main() -> incchain::Result<()> {
    for c in 2..=4 {
        let spec = wide_gap_example(c, 1, 3)?;
        println!("wide-gap chain, c = {c}, seed {}", spec.seed());
        println!("  gamma = {}", gamma_chain(&spec).gamma);
        for (e, chain) in e_chains(&spec) {
            println!("  e = {e}: gamma of the e-chain = {}", gamma_chain(&chain).gamma);
        }
        let big = big_gamma(&spec, default_depth_cap(c))?;
        println!(
            "  Gamma = {} (levels {:?}, reached at {}, stabilized {})",
            big.value, big.levels, big.reached_at, big.stabilized
        );
        let vm = vm_bound(&spec)?;
        println!("  v_M bound = {} via colon by v = {}", vm.slope, vm.v);
    }
    Ok(())
}
