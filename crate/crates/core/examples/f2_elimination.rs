// Rank, dependency certificates and left solves over F2.

use a1_weyl::f2_linalg::{F2Matrix, F2Vector};

pub fn run_example() -> a1_weyl::Result<()> {
    let rows: Vec<F2Vector> = ["1100", "0110", "1010", "0001"]
        .iter()
        .map(|s| s.parse())
        .collect::<a1_weyl::Result<_>>()?;
    let m = F2Matrix::from_rows(4, rows)?;
    println!("rank {}", m.rank());
    if let Some(c) = m.dependency_certificate() {
        println!("certificate {c}, combination {}", m.combine(&c));
    }
    let target: F2Vector = "1011".parse()?;
    match m.solve_left(&target) {
        Some(x) => println!("{target} = rows {x}"),
        None => println!("{target} is outside the row space"),
    }
    println!("left kernel: {:?}", m.left_kernel().iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> a1_weyl::Result<()> {
    run_example()
}
