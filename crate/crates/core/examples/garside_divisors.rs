//! Divisors of the Garside element and the Delta-power decomposition.

use braidforge::counting;
use braidforge::garside;
use braidforge::{BraidWord, Canonicalizer};

fn main() -> braidforge::Result<()> {
    let mut canon = Canonicalizer::default();
    for n in 2..=5 {
        let divisors = garside::enumerate_divisors(n)?;
        println!(
            "n = {n}: {} divisors, length profile {:?}",
            divisors.len(),
            counting::divisor_poly(n)?
                .coefficients()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        );
    }
    for d in garside::enumerate_divisors(3)? {
        let blocks: Vec<String> = d.blocks().iter().map(|b| b.to_string()).collect();
        println!("  {:<8} {}", d.expand().to_string(), blocks.join(" "));
    }

    let w = BraidWord::parse(3, "1,2,1,1,2,1,2")?;
    let (k, rest) = garside::delta_decompose(&w, &mut canon)?;
    println!("{w} = Delta^{k} * {rest}");
    println!(
        "square-free(1,2,1): {}",
        garside::is_square_free(&BraidWord::parse(3, "1,2,1")?, &mut canon)?
    );
    println!(
        "square-free(1,2,2): {}",
        garside::is_square_free(&BraidWord::parse(3, "1,2,2")?, &mut canon)?
    );
    Ok(())
}
