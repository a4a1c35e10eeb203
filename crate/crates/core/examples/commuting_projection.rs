// The canonical projection defined by the DOFs commutes with d on
// polynomial forms.

use cubical_forms::element::{certify_commuting_diagram, CubeElement};
use cubical_forms::exterior::DiffForm;
use cubical_forms::scalar::int;
use cubical_forms::verify::commuting_samples;
use cubical_forms::Result;

fn main() -> Result<()> {
    run_example()
}

fn run_example() -> Result<()> {
    let (n, r) = (2, 2);
    let p0 = CubeElement::reference(n, r, 0)?;
    let p1 = CubeElement::reference(n, r - 1, 1)?;

    // x₁⁴x₂³ is far outside S_2Λ^0
    let u = DiffForm::monomial(&[4, 3], &[], int(1))?;
    let pu = p0.project(&u)?;
    println!("π u   = {pu:?}");
    let left = p1.project(&u.exterior_derivative())?;
    let right = pu.exterior_derivative();
    println!("π du  = {left:?}");
    println!("d π u = {right:?}");
    assert_eq!(left, right);
    assert_eq!(p0.project(&pu)?, pu);

    let samples = commuting_samples(3, 3, 20, 7);
    let rep = certify_commuting_diagram(3, 3, &samples)?;
    println!("n=3, r=3: {} seeded forms, {} failures", rep.samples, rep.failures.len());
    assert!(rep.pass());
    Ok(())
}
