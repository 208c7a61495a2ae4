// Reflections, products and the quotient maps of W.

use a1_weyl::lattice::GVector;
use a1_weyl::weyl::{eval_word_uab, eval_word_w};
use a1_weyl::{smul, RootDatum, WeylElement};

pub fn run_example() -> a1_weyl::Result<()> {
    let d = RootDatum::full(2)?;
    let t = GVector::from_i64s(&[1, 0]);
    let s = GVector::from_i64s(&[0, 1]);

    let rt = WeylElement::reflection(&d, &t)?;
    let rs = WeylElement::reflection(&d, &s)?;
    let prod = rt.multiply(&rs)?;
    println!("r_t r_s = {prod}");
    println!("inverse = {}", prod.inverse());
    println!("r_t r_t = {}", rt.multiply(&rt)?);
    println!("t . s = {}", smul(&t, &s)?);
    println!("r_t acts on s: {}", rt.act(&d, &s)?);
    println!("image in W^ab: {:?}", prod.abelianize());

    let word = [t.clone(), s.clone(), t.clone(), s.clone()];
    println!("word t s t s = {}", eval_word_w(&d, &word)?);
    let classes: Vec<_> = word.iter().map(GVector::mod2).collect();
    println!("in U^ab: {:?}", eval_word_uab(&d, &classes)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> a1_weyl::Result<()> {
    run_example()
}
