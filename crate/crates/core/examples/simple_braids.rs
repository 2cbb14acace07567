//! Simple braids: enumeration and the length triangle.

use braidforge::counting;
use braidforge::simple;
use braidforge::{BraidWord, Canonicalizer};

fn main() -> braidforge::Result<()> {
    for b in simple::enumerate_simple(4)? {
        println!("{:<8} length {}", b.to_string(), b.len());
    }
    let table = counting::s_table(8);
    for (n, row) in table.iter().enumerate().skip(1) {
        let total: u128 = row.iter().sum();
        println!("n = {n}: {row:?} total {total} = F_{}", 2 * n - 1);
    }
    let mut canon = Canonicalizer::default();
    for text in ["2,1,3", "1,2,1", "3,2,3,1"] {
        let w = BraidWord::parse(4, text)?;
        println!("{w} simple: {}", simple::is_simple(&w, &mut canon)?);
    }
    Ok(())
}
