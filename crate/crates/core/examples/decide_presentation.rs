// Decide whether U -> W is an isomorphism for a few root data.

use a1_weyl::{decide, RootDatum};

pub fn run_example() -> a1_weyl::Result<()> {
    let data = [
        ("full rank 2", RootDatum::full(2)?),
        ("full rank 3", RootDatum::full(3)?),
        ("standard basis rank 5", RootDatum::standard_basis(5)?),
        (
            "custom rank 3",
            a1_weyl::cli::parse_input("rank: 3\ntab:\n000\n100\n010\n001\n110\n")?,
        ),
    ];
    for (name, d) in &data {
        let v = decide(d);
        println!(
            "{name}: {} classes, rank {} -> {}",
            v.cardinality,
            v.rank_sym,
            if v.iso { "isomorphism" } else { "not an isomorphism" }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> a1_weyl::Result<()> {
    run_example()
}
