use cubical_forms::element::AxisBox;
use cubical_forms::mesh::{
    assemble, build_mesh, certify_continuity, global_derivative_matrix, mesh_complex_cohomology, MeshSpec,
};
use cubical_forms::scalar::{frac, int};
use cubical_forms::Error;

fn grid(spec: &str) -> cubical_forms::mesh::CubicalMesh {
    build_mesh(&MeshSpec::parse_grid(spec).unwrap()).unwrap()
}

#[test]
fn three_dimensional_continuity() {
    let m = grid("grid:2x1x1");
    for r in 1..=3 {
        for k in 0..=3 {
            let rep = certify_continuity(&assemble(&m, r, k).unwrap()).unwrap();
            assert!(rep.pass(), "r={r} k={k}: {:?}", rep.mismatches);
            if k < 3 {
                assert!(rep.shared_faces_checked > 0);
            }
        }
    }
}

#[test]
fn flipped_face_is_detected_in_every_degree() {
    let m = grid("grid:2x1x1");
    for k in 0..=2 {
        // a shared face that carries DOFs in this degree
        let d = if k == 2 { 2 } else { 1 };
        let shared = m.faces(d).iter().position(|f| f.incidence.len() == 2).unwrap();
        let mut s = assemble(&m, 2, k).unwrap();
        s.flip_orientation(0, d, shared);
        assert!(!certify_continuity(&s).unwrap().pass(), "k={k}");
    }
}

#[test]
fn nonuniform_boxes_assemble_conformingly() {
    let boxes = vec![
        AxisBox::new(vec![int(0), int(0)], vec![frac(1, 2), int(1)]).unwrap(),
        AxisBox::new(vec![frac(1, 2), int(0)], vec![int(2), int(1)]).unwrap(),
        AxisBox::new(vec![int(0), int(1)], vec![frac(1, 2), int(3)]).unwrap(),
        AxisBox::new(vec![frac(1, 2), int(1)], vec![int(2), int(3)]).unwrap(),
    ];
    let m = build_mesh(&MeshSpec::Boxes(boxes)).unwrap();
    assert_eq!((m.num_faces(0), m.num_faces(1), m.num_faces(2)), (9, 12, 4));
    for k in 0..=2 {
        assert!(certify_continuity(&assemble(&m, 2, k).unwrap()).unwrap().pass());
    }
    let rep = mesh_complex_cohomology(&m, 2).unwrap();
    assert_eq!(rep.defects, vec![1, 0, 0]);
}

#[test]
fn mesh_from_json_file() {
    let path = std::env::temp_dir().join("cubical_forms_mesh_test.json");
    std::fs::write(&path, r#"{"n": 3, "grid": [2, 1, 1]}"#).unwrap();
    let m = build_mesh(&MeshSpec::from_arg(path.to_str().unwrap()).unwrap()).unwrap();
    assert_eq!(m.num_faces(2), 11);
    assert!(matches!(MeshSpec::from_arg("/no/such/mesh.json"), Err(Error::Io(_))));
}

#[test]
fn global_derivative_triplets() {
    let m = grid("grid:2x1");
    let spaces: Vec<_> = (0..=2).map(|k| assemble(&m, 2 - k as i64, k).unwrap()).collect();
    let d0 = global_derivative_matrix(&spaces[0], &spaces[1]).unwrap();
    let d1 = global_derivative_matrix(&spaces[1], &spaces[2]).unwrap();
    assert_eq!((d0.rows(), d0.cols()), (spaces[1].dim(), spaces[0].dim()));
    assert!(d1.mul(&d0).unwrap().is_zero());
    let nonzeros = (0..d0.rows())
        .flat_map(|i| (0..d0.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| d0[(i, j)] != int(0))
        .count();
    let text = d0.to_triplets();
    assert_eq!(text.lines().count(), nonzeros);
    assert!(text.lines().all(|l| l.split(',').count() == 3));
}
