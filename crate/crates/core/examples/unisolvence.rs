// Face-moment degrees of freedom on [−1,1]^n and the exact rank of the DOF
// matrix against the basis.

use cubical_forms::element::{certify_unisolvence, certify_unisolvence_on, AxisBox, CubeElement};
use cubical_forms::Result;

fn main() -> Result<()> {
    run_example()
}

fn run_example() -> Result<()> {
    let el = CubeElement::reference(2, 2, 1)?;
    println!("S_2Λ^1 on the square: {} DOFs", el.dofs().len());
    for dof in el.dofs().iter().take(4) {
        println!("  face {:?} weight {:?}", dof.face.fixed(), dof.weight);
    }
    let m = el.dof_matrix();
    println!("DOF matrix {}×{}, rank {}", m.rows(), m.cols(), m.rank());
    println!("first CSV row: {}", m.to_csv().lines().next().unwrap_or(""));

    for n in 1..=3 {
        for r in 1..=3 {
            for k in 0..=n {
                let rep = certify_unisolvence(n, r, k)?;
                assert!(rep.pass(), "{rep:?}");
            }
        }
    }
    println!("unisolvent for n ≤ 3, r ≤ 3, all k");

    let unit = AxisBox::unit(3);
    let rep = certify_unisolvence_on(&unit, 2, 2)?;
    println!("on [0,1]^3, S_2Λ^2: {} DOFs, nonsingular = {}", rep.num_dofs, rep.matrix_nonsingular);
    Ok(())
}
