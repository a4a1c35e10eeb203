// Exactness of the Koszul complex restricted to forms of bounded-below linear
// degree, checked by exact ranks.

use cubical_forms::spaces::verify_koszul_exactness;
use cubical_forms::Result;

fn main() -> Result<()> {
    run_example()
}

fn run_example() -> Result<()> {
    let n = 3;
    println!("{:>2} {:>2} {:>2} {:>8} {:>8} {:>8}  exact", "r", "l", "k", "κ in", "κ out", "dim H");
    for r in 1..=4 {
        for l in 0..r as u32 {
            for k in 0..n {
                let rep = verify_koszul_exactness(n, r, l, k)?;
                println!(
                    "{r:>2} {l:>2} {k:>2} {:>8} {:>8} {:>8}  {}",
                    rep.dim_image_in,
                    rep.dim_image_out,
                    rep.dim_space,
                    rep.pass()
                );
                assert!(rep.pass());
            }
        }
    }
    Ok(())
}
