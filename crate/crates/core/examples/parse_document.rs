//! Reading and writing the plain-text chain format.
//!
//! Run with `cargo run --example parse_document`.

use incchain::chain::running_example;
use incchain::document::{parse_document, ChainDocument};

fn main() -> incchain::Result<()> {
    let text = "\
# a chain with a redundant generator
c = 2
i = 1
r = 3
gens:
x[1,2]*x[2,3]
x[1,2]^2*x[2,3]   # multiple of the line above
";
    let parsed = parse_document(text)?;
    for w in &parsed.warnings {
        println!("warning: {w}");
    }
    let spec = parsed.document.to_spec()?;
    println!("I_5 = {}", spec.generate(5));

    match parse_document("c = 2\ni = 1\nr = 3\ngens:\nx[3,1]\n") {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }

    // Any chain can be written back out.
    print!("{}", ChainDocument::from(&running_example()).render());
    Ok(())
}
