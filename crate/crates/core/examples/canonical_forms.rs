//! Canonical forms and equality of positive braid words.

use braidforge::word::{self, Canonicalizer};
use braidforge::BraidWord;

fn main() -> braidforge::Result<()> {
    let mut canon = Canonicalizer::default();

    let w = BraidWord::parse(3, "2,1,2")?;
    println!("class of {w}:");
    for member in canon.equivalence_class(&w)? {
        println!("  {member}");
    }
    println!("canonical form: {}", canon.canonical_form(&w)?);

    let a = BraidWord::parse(4, "1,3,2,1")?;
    let b = BraidWord::parse(4, "3,1,2,1")?;
    println!("{a} == {b}: {}", canon.braids_equal(&a, &b)?);

    let delta = BraidWord::parse(4, "1,2,1,3,2,1")?;
    println!(
        "|class of Delta_4| = {}",
        canon.equivalence_class(&delta)?.len()
    );
    println!("one-step rewrites of {delta}:");
    for nb in word::rewrite_neighbors(&delta) {
        println!("  {nb}");
    }
    Ok(())
}
