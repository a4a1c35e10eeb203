// Assembly on a grid of cubes: global DOFs, trace continuity across shared
// faces and the cohomology of the assembled complex.

use cubical_forms::mesh::{
    assemble, build_mesh, certify_continuity, global_derivative_matrix, mesh_complex_cohomology, MeshSpec,
};
use cubical_forms::Result;

fn main() -> Result<()> {
    run_example()
}

fn run_example() -> Result<()> {
    let mesh = build_mesh(&MeshSpec::parse_grid("grid:2x1x1")?)?;
    println!(
        "{} cells, faces by dimension: {:?}",
        mesh.cells().len(),
        (0..=3).map(|d| mesh.num_faces(d)).collect::<Vec<_>>()
    );
    let r = 3;
    for k in 0..=3 {
        let space = assemble(&mesh, r - k as i64, k)?;
        let rep = certify_continuity(&space)?;
        println!(
            "S_{}Λ^{k}: {} global DOFs (formula {}), {} shared faces, continuous = {}",
            r - k as i64,
            space.dim(),
            mesh.global_dim_formula(r - k as i64, k),
            rep.shared_faces_checked,
            rep.pass()
        );
    }
    let coh = mesh_complex_cohomology(&mesh, r)?;
    println!("ranks of d: {:?}, defects: {:?}", coh.ranks, coh.defects);

    // a planted sign error on the shared facet breaks continuity
    let shared = mesh.faces(2).iter().position(|f| f.incidence.len() == 2).unwrap_or(0);
    let mut space = assemble(&mesh, 2, 2)?;
    space.flip_orientation(1, 2, shared);
    println!("after flipping facet {shared} in cell 1: continuous = {}", certify_continuity(&space)?.pass());

    let grid2 = build_mesh(&MeshSpec::parse_grid("grid:2x2")?)?;
    let d0 = global_derivative_matrix(&assemble(&grid2, 2, 0)?, &assemble(&grid2, 1, 1)?)?;
    println!("grid 2×2 gradient matrix {}×{}; first triplets:", d0.rows(), d0.cols());
    for line in d0.to_triplets().lines().take(3) {
        println!("  {line}");
    }
    Ok(())
}
