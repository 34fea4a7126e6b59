//! Generating the ideals of an Inc-invariant chain from its seed.
//!
//! Run with `cargo run --example chain_generation`.

use incchain::chain::{inc_image, orbit, running_example};

fn main() -> incchain::Result<()> {
    let spec = running_example();
    let (i, r) = (spec.monoid_index(), spec.seed_index());
    println!(
        "chain with {} rows, monoid index {i}, stable from width {r}",
        spec.rows()
    );
    println!("I_{r} = {}", spec.seed());

    for n in r..=r + 2 {
        let ideal = spec.generate(n);
        println!("I_{n}: {} minimal generators", ideal.num_gens());
        for g in ideal.gens() {
            println!("    {g}");
        }
    }

    // Where one seed generator can land in width 7.
    let u = &spec.seed().gens()[1];
    let images = orbit(u, i, r, 7)?;
    let shown: Vec<String> = images.iter().map(ToString::to_string).collect();
    println!("orbit of {u} in width 7: {}", shown.join(", "));

    // Invariance: the image of a smaller ideal sits inside a larger one.
    let pushed = inc_image(&spec.generate(5), i, 7);
    println!("Inc(I_5) inside I_7: {}", pushed.is_subset_of(&spec.generate(7)));
    println!("stable at widths 4..8: {}", (4..=8).all(|n| spec.verify_stability(n)));
    Ok(())
}
