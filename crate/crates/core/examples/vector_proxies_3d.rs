// Three-dimensional H(curl) and H(div) shape functions through vector
// proxies.

use cubical_forms::element::proxy::{cross_weight_field, from_vector_proxy, to_vector_proxy};
use cubical_forms::exterior::DiffForm;
use cubical_forms::scalar::int;
use cubical_forms::spaces::basis_s;
use cubical_forms::Result;

fn main() -> Result<()> {
    run_example()
}

fn run_example() -> Result<()> {
    let r = 2;
    // w_i independent of x_i
    let w = [
        DiffForm::monomial(&[0, 2, 0], &[], int(1))?,
        DiffForm::monomial(&[1, 0, 1], &[], int(3))?,
        DiffForm::monomial(&[0, 1, 0], &[], int(-1))?,
    ];
    let field = cross_weight_field(&w)?;
    println!("(x₂x₃(w₂−w₃), x₃x₁(w₃−w₁), x₁x₂(w₁−w₂)) =");
    for c in &field {
        println!("  {c:?}");
    }
    let one_form = from_vector_proxy(&field, 1)?;
    let curl = one_form.exterior_derivative();
    let curl_proxy = to_vector_proxy(&curl)?;
    println!("curl = ({:?}, {:?}, {:?})", curl_proxy[0], curl_proxy[1], curl_proxy[2]);

    let s2 = basis_s(3, r, 2)?;
    println!("curl ∈ S_{r}Λ^2(ℝ³) (dim {}): {}", s2.dim(), s2.contains(&curl));
    assert!(s2.contains(&curl));

    let s1 = basis_s(3, r + 1, 1)?;
    println!("field ∈ S_{}Λ^1(ℝ³) (dim {}): {}", r + 1, s1.dim(), s1.contains(&one_form));
    assert!(s1.contains(&one_form));
    Ok(())
}
