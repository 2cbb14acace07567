//! Conjugacy classes of simple braids and their representatives.

use std::collections::BTreeMap;

use braidforge::counting;
use braidforge::simple;
use braidforge::Canonicalizer;

fn main() -> braidforge::Result<()> {
    let n = 5;
    let mut classes: BTreeMap<Vec<usize>, Vec<String>> = BTreeMap::new();
    for b in simple::enumerate_simple(n)? {
        let a = simple::conjugacy_representative(&b);
        classes
            .entry(a.parts().to_vec())
            .or_default()
            .push(b.to_string());
    }
    let mut canon = Canonicalizer::default();
    for (parts, members) in &classes {
        let a = simple::ClassPartition::new(n, parts.clone())?;
        let rep = simple::beta_a(&a);
        println!(
            "{:<8} beta_A = {:<8} {} members",
            a.to_string(),
            rep.to_string(),
            members.len()
        );
    }
    println!("c_(5,i) = {:?}", counting::c_table(n));

    let all = simple::enumerate_simple(4)?;
    let b = all.iter().find(|b| b.to_string() == "3,2").expect("listed");
    if let Some(alpha) = simple::conjugacy_witness(b, 6, &mut canon)? {
        let a = simple::conjugacy_representative(b);
        println!("{b} * {alpha} = {alpha} * {}", simple::beta_a(&a));
    }
    Ok(())
}
