// Build S_r Λ^k(ℝ^n), look at its decomposition and the degree bounds of
// its monomials, and write the basis as JSON.

use cubical_forms::spaces::{basis_s, verify_decomposition, verify_degree_property};
use cubical_forms::Result;

fn main() -> Result<()> {
    run_example()
}

fn run_example() -> Result<()> {
    let (n, r, k) = (2, 2, 1);
    let s = basis_s(n, r, k)?;
    println!("S_{r}Λ^{k}(ℝ^{n}) has dimension {}", s.dim());
    for f in s.iter() {
        println!("  {f:?}");
    }
    let dec = verify_decomposition(n, r, k)?;
    println!(
        "P: {}  J: {}  dJ: {}  total {} (formula {})",
        dec.dim_p, dec.dim_j, dec.dim_dj, dec.dim_s, dec.formula
    );
    assert!(dec.pass());
    let deg = verify_degree_property(3, 2, 1)?;
    println!(
        "S_2Λ^1(ℝ³): max degree {} ≤ {}, max superlinear degree {} ≤ {}",
        deg.max_degree, deg.degree_bound, deg.max_superlinear, deg.superlinear_bound
    );
    let json = serde_json::to_string(&s.to_json())?;
    println!("JSON is {} bytes", json.len());
    Ok(())
}
