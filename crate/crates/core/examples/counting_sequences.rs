//! Counting sequences and their Fibonacci closed forms.

use braidforge::counting::{self, SClosedForm};

fn main() -> braidforge::Result<()> {
    let fib: Vec<u128> = (0..12).map(counting::fib).collect();
    println!("F: {fib:?}");
    let b: Vec<u128> = (0..10).map(counting::count_positive_3).collect();
    println!("positive 3-braids by length: {b:?}");
    let bp: Vec<u128> = (0..10).map(counting::count_delta_free_3).collect();
    println!("delta-free 3-braids by length: {bp:?}");

    let d = counting::d_table(5);
    println!(
        "d_5 = {:?}",
        d[5].iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );

    for form in SClosedForm::ALL {
        let values: Vec<i128> = (form.min_strands()..form.min_strands() + 5)
            .map(|n| form.evaluate(n))
            .collect::<Result<_, _>>()?;
        println!("{:<34} {values:?}", form.formula());
    }
    let p = counting::PartitionTable::new(12);
    println!(
        "P(12, k) = {:?}",
        (0..=12).map(|k| p.get(12, k)).collect::<Vec<_>>()
    );
    Ok(())
}
