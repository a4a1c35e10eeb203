// Polynomial differential forms: wedge, exterior derivative, Koszul
// differential and the homotopy formula that ties them together.

use cubical_forms::exterior::DiffForm;
use cubical_forms::scalar::int;
use cubical_forms::Result;

fn main() -> Result<()> {
    run_example()
}

fn run_example() -> Result<()> {
    // ω = x₁x₂² dx₃ in ℝ³
    let w = DiffForm::monomial(&[1, 2, 0], &[3], int(1))?;
    let dw = w.exterior_derivative();
    let kw = w.koszul();
    println!("ω      = {w:?}");
    println!("dω     = {dw:?}");
    println!("κω     = {kw:?}");
    println!("κdω    = {:?}", w.koszul_of_derivative());

    // ω is homogeneous of degree 3 and a 1-form, so (dκ + κd)ω = 4ω.
    let lhs = &kw.exterior_derivative() + &dw.koszul();
    assert_eq!(lhs, w.scale(&int(4)));
    println!("(dκ+κd)ω = {lhs:?}");

    let a = DiffForm::monomial(&[0, 1, 0], &[1], int(1))?;
    let b = DiffForm::monomial(&[0, 0, 1], &[2], int(-2))?;
    let ab = a.wedge(&b)?;
    println!("(x₂dx₁) ∧ (−2x₃dx₂) = {ab:?}");
    println!("linear degree of ω = {}", w.ldeg()?);

    // trace onto the face x₁ = 1, then back-substituted variables are x₂, x₃
    println!("tr_(x₁=1) dω = {:?}", dw.trace_hyperplane(1, &int(1))?);
    println!("JSON: {}", serde_json::to_string(&w.to_json())?);
    Ok(())
}
