// Symmetric squares, the map phi and the diagonal square root over F2.

use a1_weyl::f2_linalg::F2Vector;
use a1_weyl::lattice::{self, pair_count, GVector};

pub fn run_example() -> a1_weyl::Result<()> {
    let n = 3;
    let g: F2Vector = "110".parse()?;
    let sq = lattice::sym_square(&g);
    println!("{g} (x) {g} = {} as a matrix:", sq.to_f2vector());
    for row in sq.to_matrix() {
        let line: String = row.iter().map(|&b| if b { '1' } else { '0' }).collect();
        println!("  {line}");
    }

    let w = F2Vector::from_mask(pair_count(n), 0b101);
    let p = lattice::phi(&w, &g)?;
    println!("phi({w}, {g}) = {}", p.to_f2vector());
    println!("sqrt of diagonal recovers {}", lattice::sqrt_diag(&p));

    let a = GVector::from_i64s(&[1, 2, 3]);
    let b = GVector::from_i64s(&[4, 5, 6]);
    let ab = lattice::wedge(&a, &b)?;
    println!("{a} ^ {b} = {ab}, mod 2 {}", ab.mod2());
    Ok(())
}

#[allow(dead_code)]
fn main() -> a1_weyl::Result<()> {
    run_example()
}
