// Certificate for a dependent datum and a word that is trivial in W but not in U.

use a1_weyl::decision::verify_identity_word;
use a1_weyl::weyl::eval_word_w;
use a1_weyl::{extract_witness, find_identity_word, RootDatum};

pub fn run_example() -> a1_weyl::Result<()> {
    let d = RootDatum::full(3)?;
    let w = extract_witness(&d)?;
    println!("dependency:");
    for class in &w.dependency {
        println!("  {class}");
    }
    println!("pad with zero: {}", w.pad_zero);
    w.check(&d)?;

    let word = find_identity_word(&d, &w, 1_000_000)?;
    println!("word of {} letters:", word.len());
    for t in &word {
        println!("  {t}");
    }
    println!("evaluates to {}", eval_word_w(&d, &word)?);
    verify_identity_word(&d, &w, &word)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> a1_weyl::Result<()> {
    run_example()
}
