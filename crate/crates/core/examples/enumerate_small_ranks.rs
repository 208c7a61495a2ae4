// Count root data and isomorphisms for small ranks, with and without GL(n, F2).

use a1_weyl::enumerate;

pub fn run_example() -> a1_weyl::Result<()> {
    for n in 1..=3 {
        for up_to_gl in [false, true] {
            let (mut total, mut iso) = (0, 0);
            for (_, v) in enumerate(n, up_to_gl)? {
                total += 1;
                iso += usize::from(v.iso);
            }
            let label = if up_to_gl { "orbits" } else { "data" };
            println!("rank {n}: {total} {label}, {iso} isomorphisms");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> a1_weyl::Result<()> {
    run_example()
}
