// The subspace of S_r Λ^k with vanishing traces on the boundary, and the
// injectivity of the interior moments on it.

use cubical_forms::element::{certify_vanishing_trace_unisolvence, vanishing_trace_basis};
use cubical_forms::Result;

fn main() -> Result<()> {
    run_example()
}

fn run_example() -> Result<()> {
    let v = vanishing_trace_basis(2, 4, 1)?;
    println!("vanishing-trace subspace of S_4Λ^1(I²): dim {}", v.dim());
    for f in v.iter() {
        println!("  {f:?}");
    }
    for n in 1..=3 {
        for r in 1..=4 {
            for k in 0..=n {
                let rep = certify_vanishing_trace_unisolvence(n, r, k)?;
                assert!(rep.full_column_rank);
                if rep.dim_vanishing > 0 {
                    println!(
                        "n={n} r={r} k={k}: dim {}, interior moments {}, square {}",
                        rep.dim_vanishing, rep.num_interior_moments, rep.square
                    );
                }
            }
        }
    }
    Ok(())
}
