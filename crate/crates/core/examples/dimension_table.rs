// Dimensions of S_r Λ^k(I^n) from the closed formula next to the rank of the
// constructed basis, laid out one block per n.

use cubical_forms::spaces::{basis_s, count_a, dim_s_formula};
use cubical_forms::Result;

fn main() -> Result<()> {
    run_example()
}

fn run_example() -> Result<()> {
    let rmax = 5;
    for n in 1..=3 {
        println!("n = {n}   (formula/constructive)");
        for k in 0..=n {
            let mut row = format!("  k={k}");
            for r in 1..=rmax {
                let formula = dim_s_formula(n, r, k)?;
                let built = basis_s(n, r, k)?.dim();
                assert_eq!(formula, built as u128);
                row.push_str(&format!(" {:>9}", format!("{formula}/{built}")));
            }
            println!("{row}");
        }
    }
    // the monomial count behind the dimension of the Koszul image
    println!("count_A(3, 3, 1) = {}", count_a(3, 3, 1)?);
    Ok(())
}
