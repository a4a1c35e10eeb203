//! Assembly of `S_r Λ^k` on conforming meshes of axis-aligned boxes: global
//! DOF numbering, inter-element trace continuity and the global de Rham
//! subcomplex.
//!
//! Shared-face weights live in the global coordinates of the face, so every
//! cell containing a face integrates against literally the same functional
//! and all local-to-global signs are `+1` unless deliberately altered.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::element::{
    cohomology_from_matrices, faces, trace_to_face, weight_basis, AxisBox, CohomologyReport,
    CubeElement, CubeFace,
};
use crate::error::{domain, Error, Result};
use crate::exterior::DiffForm;
use crate::linalg::RationalMatrix;
use crate::scalar::{self, Rational};
use crate::spaces::binomial;

/// How a face sits along one axis: pinned to a coordinate or spanning an interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceExtent {
    Fixed(Rational),
    Span(Rational, Rational),
}

impl FaceExtent {
    fn lower(&self) -> &Rational {
        match self {
            FaceExtent::Fixed(v) | FaceExtent::Span(v, _) => v,
        }
    }
}

/// A geometric face of the mesh, identified by its extent along each axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FaceKey(pub Vec<FaceExtent>);

impl FaceKey {
    fn of(face: &CubeFace) -> Self {
        let b = face.parent();
        FaceKey(
            (1..=b.n())
                .map(|a| match face.fixed().get(&a) {
                    Some(&s) => FaceExtent::Fixed(b.end(a, s).clone()),
                    None => FaceExtent::Span(b.lo()[a - 1].clone(), b.hi()[a - 1].clone()),
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.iter().filter(|e| matches!(e, FaceExtent::Span(..))).count()
    }

    /// Sort key: dimension, lower corner, then fixed-axis pattern.
    fn order_key(&self) -> (usize, Vec<Rational>, Vec<bool>) {
        (
            self.dim(),
            self.0.iter().map(|e| e.lower().clone()).collect(),
            self.0.iter().map(|e| matches!(e, FaceExtent::Fixed(_))).collect(),
        )
    }
}

/// A geometric face with the cells containing it.
#[derive(Clone, Debug)]
pub struct MeshFace {
    pub key: FaceKey,
    /// `(cell, local face)` pairs; the local face is a [`CubeFace`] of that cell.
    pub incidence: Vec<(usize, CubeFace)>,
}

impl MeshFace {
    pub fn dim(&self) -> usize {
        self.key.dim()
    }
}

#[derive(Clone, Debug)]
pub enum MeshSpec {
    /// `N₁ × … × N_n` unit cells with lower corner at the origin.
    Grid(Vec<usize>),
    Boxes(Vec<AxisBox>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coord {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct BoxJson {
    lo: Vec<Coord>,
    hi: Vec<Coord>,
}

#[derive(Deserialize)]
struct MeshJson {
    n: Option<usize>,
    grid: Option<Vec<usize>>,
    boxes: Option<Vec<BoxJson>>,
}

fn coord(c: &Coord) -> Result<Rational> {
    match c {
        Coord::Int(v) => Ok(scalar::int(*v)),
        Coord::Text(s) => scalar::parse(s),
    }
}

impl MeshSpec {
    /// Parses `grid:AxBxC`.
    pub fn parse_grid(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix("grid:")
            .ok_or_else(|| Error::Input(format!("expected grid:AxB..., got {s:?}")))?;
        let shape = body
            .split('x')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Input(format!("bad grid shape {body:?}")))?;
        Ok(MeshSpec::Grid(shape))
    }

    /// `{"n":..,"grid":[..]}` or `{"boxes":[{"lo":[..],"hi":[..]}]}`; box
    /// coordinates are integers or `"p/q"` strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let j: MeshJson = serde_json::from_str(text)?;
        match (j.grid, j.boxes) {
            (Some(grid), None) => {
                if let Some(n) = j.n {
                    if n != grid.len() {
                        return Err(Error::Input(format!(
                            "n = {n} but grid has {} axes",
                            grid.len()
                        )));
                    }
                }
                Ok(MeshSpec::Grid(grid))
            }
            (None, Some(boxes)) => {
                let boxes = boxes
                    .iter()
                    .map(|b| {
                        let lo = b.lo.iter().map(coord).collect::<Result<Vec<_>>>()?;
                        let hi = b.hi.iter().map(coord).collect::<Result<Vec<_>>>()?;
                        AxisBox::new(lo, hi)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(MeshSpec::Boxes(boxes))
            }
            _ => Err(Error::Input("mesh JSON needs exactly one of grid, boxes".into())),
        }
    }

    /// `grid:...` literal or a path to a JSON file.
    pub fn from_arg(arg: &str) -> Result<Self> {
        if arg.starts_with("grid:") {
            MeshSpec::parse_grid(arg)
        } else {
            MeshSpec::from_json(&std::fs::read_to_string(Path::new(arg))?)
        }
    }
}

/// A conforming mesh of axis-aligned boxes with face adjacency for every dimension.
#[derive(Clone, Debug)]
pub struct CubicalMesh {
    n: usize,
    cells: Vec<AxisBox>,
    /// `faces[d]`: geometric `d`-faces in global order.
    faces: Vec<Vec<MeshFace>>,
    /// `cell_faces[c][d]`: ids into `faces[d]` in the cell's local face order.
    cell_faces: Vec<Vec<Vec<usize>>>,
}

fn grid_cells(shape: &[usize]) -> Vec<AxisBox> {
    let mut cells = Vec::new();
    let total: usize = shape.iter().product();
    for mut idx in 0..total {
        let mut corner = vec![0i64; shape.len()];
        // last axis fastest
        for a in (0..shape.len()).rev() {
            corner[a] = (idx % shape[a]) as i64;
            idx /= shape[a];
        }
        cells.push(AxisBox::grid_cell(&corner));
    }
    cells
}

/// Whether the intersection of `a` and `b` is a face of both (or empty).
fn conforming_pair(a: &AxisBox, b: &AxisBox) -> std::result::Result<(), String> {
    let n = a.n();
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for i in 0..n {
        let l = a.lo()[i].clone().max(b.lo()[i].clone());
        let h = a.hi()[i].clone().min(b.hi()[i].clone());
        if l > h {
            return Ok(());
        }
        lo.push(l);
        hi.push(h);
    }
    let is_face_of = |c: &AxisBox| {
        (0..n).all(|i| {
            let full = lo[i] == c.lo()[i] && hi[i] == c.hi()[i];
            let end = lo[i] == hi[i] && (lo[i] == c.lo()[i] || lo[i] == c.hi()[i]);
            full || end
        })
    };
    if (0..n).all(|i| lo[i] < hi[i]) {
        return Err("cells overlap".into());
    }
    if !is_face_of(a) || !is_face_of(b) {
        return Err("intersection is not a common face".into());
    }
    Ok(())
}

impl CubicalMesh {
    pub fn build(spec: &MeshSpec) -> Result<Self> {
        let cells = match spec {
            MeshSpec::Grid(shape) => {
                if shape.is_empty() || shape.contains(&0) {
                    return Err(Error::Input(format!("invalid grid shape {shape:?}")));
                }
                grid_cells(shape)
            }
            MeshSpec::Boxes(boxes) => {
                let Some(first) = boxes.first() else {
                    return Err(Error::Input("empty box list".into()));
                };
                if boxes.iter().any(|b| b.n() != first.n()) {
                    return Err(Error::Input("boxes of mixed dimension".into()));
                }
                for i in 0..boxes.len() {
                    for j in (i + 1)..boxes.len() {
                        conforming_pair(&boxes[i], &boxes[j]).map_err(|reason| {
                            Error::NonConforming {
                                first: i,
                                second: j,
                                reason,
                            }
                        })?;
                    }
                }
                boxes.clone()
            }
        };
        let n = cells[0].n();
        let mut by_key: Vec<HashMap<FaceKey, usize>> = vec![HashMap::new(); n + 1];
        let mut raw: Vec<Vec<MeshFace>> = vec![Vec::new(); n + 1];
        let mut cell_faces = Vec::with_capacity(cells.len());
        for (c, cell) in cells.iter().enumerate() {
            let mut per_dim = Vec::with_capacity(n + 1);
            for d in 0..=n {
                let mut ids = Vec::new();
                for f in faces(cell, d)? {
                    let key = FaceKey::of(&f);
                    let id = *by_key[d].entry(key.clone()).or_insert_with(|| {
                        raw[d].push(MeshFace {
                            key,
                            incidence: Vec::new(),
                        });
                        raw[d].len() - 1
                    });
                    raw[d][id].incidence.push((c, f));
                    ids.push(id);
                }
                per_dim.push(ids);
            }
            cell_faces.push(per_dim);
        }
        // renumber each dimension into the global order
        let mut faces_sorted = Vec::with_capacity(n + 1);
        for (d, list) in raw.into_iter().enumerate() {
            let mut order: Vec<usize> = (0..list.len()).collect();
            order.sort_by_key(|&i| list[i].key.order_key());
            let mut new_id = vec![0; list.len()];
            for (new, &old) in order.iter().enumerate() {
                new_id[old] = new;
            }
            for per_cell in cell_faces.iter_mut() {
                for id in per_cell[d].iter_mut() {
                    *id = new_id[*id];
                }
            }
            let mut slots: Vec<Option<MeshFace>> = list.into_iter().map(Some).collect();
            faces_sorted.push(order.iter().map(|&i| slots[i].take().unwrap()).collect());
        }
        Ok(CubicalMesh {
            n,
            cells,
            faces: faces_sorted,
            cell_faces,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[AxisBox] {
        &self.cells
    }

    pub fn faces(&self, d: usize) -> &[MeshFace] {
        &self.faces[d]
    }

    pub fn num_faces(&self, d: usize) -> usize {
        self.faces[d].len()
    }

    /// Ids of the cell's `d`-faces, in its local face order.
    pub fn cell_faces(&self, cell: usize, d: usize) -> &[usize] {
        &self.cell_faces[cell][d]
    }

    /// `Σ_f dim P_{r−2(d−k)} Λ^{d−k}(f)` over geometric faces with `d ≥ k`.
    pub fn global_dim_formula(&self, r: i64, k: usize) -> u128 {
        (k..=self.n)
            .map(|d| {
                let (d_, k_) = (d as i64, k as i64);
                let deg = r - 2 * (d_ - k_);
                let per_face = if deg < 0 {
                    0
                } else {
                    binomial(r - d_ + 2 * k_, d_) * binomial(d_, k_)
                };
                per_face * self.faces[d].len() as u128
            })
            .sum()
    }
}

pub fn build_mesh(spec: &MeshSpec) -> Result<CubicalMesh> {
    CubicalMesh::build(spec)
}

/// A global DOF: a geometric face and an index into its weight basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalDof {
    pub dim: usize,
    pub face: usize,
    pub weight: usize,
}

/// `S_r Λ^k` assembled on a mesh.
#[derive(Debug)]
pub struct GlobalSpace<'m> {
    pub r: i64,
    pub k: usize,
    mesh: &'m CubicalMesh,
    dofs: Vec<GlobalDof>,
    /// Per cell, per local DOF: global index and orientation sign.
    local_to_global: Vec<Vec<(usize, i8)>>,
    elements: Vec<CubeElement>,
    dual: Vec<Vec<DiffForm>>,
}

pub fn assemble(mesh: &CubicalMesh, r: i64, k: usize) -> Result<GlobalSpace<'_>> {
    GlobalSpace::new(mesh, r, k)
}

impl<'m> GlobalSpace<'m> {
    pub fn new(mesh: &'m CubicalMesh, r: i64, k: usize) -> Result<Self> {
        let n = mesh.n;
        if k > n {
            return domain(format!("form degree {k} exceeds dimension {n}"));
        }
        let mut dofs = Vec::new();
        let mut first: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for d in k..=n {
            let nw = weight_basis(d, r, k).len();
            for f in 0..mesh.faces[d].len() {
                first.insert((d, f), dofs.len());
                for w in 0..nw {
                    dofs.push(GlobalDof { dim: d, face: f, weight: w });
                }
            }
        }
        let mut elements = Vec::with_capacity(mesh.cells.len());
        let mut local_to_global = Vec::with_capacity(mesh.cells.len());
        let mut dual = Vec::with_capacity(mesh.cells.len());
        for (c, cell) in mesh.cells.iter().enumerate() {
            let el = CubeElement::new(cell, r, k)?;
            let mut map = Vec::with_capacity(el.dofs().len());
            // local DOFs come grouped by (d, local face) with weights in order
            let mut d_face_counter: BTreeMap<usize, (usize, Option<CubeFace>, usize)> = BTreeMap::new();
            for dof in el.dofs().iter() {
                let d = dof.face.dim();
                let entry = d_face_counter.entry(d).or_insert((0, None, 0));
                match &entry.1 {
                    Some(f) if *f == dof.face => entry.2 += 1,
                    Some(_) => {
                        entry.0 += 1;
                        entry.1 = Some(dof.face.clone());
                        entry.2 = 0;
                    }
                    None => {
                        entry.1 = Some(dof.face.clone());
                    }
                }
                let face_id = mesh.cell_faces[c][d][entry.0];
                map.push((first[&(d, face_id)] + entry.2, 1i8));
            }
            dual.push(el.dual_basis()?);
            local_to_global.push(map);
            elements.push(el);
        }
        Ok(GlobalSpace {
            r,
            k,
            mesh,
            dofs,
            local_to_global,
            elements,
            dual,
        })
    }

    pub fn mesh(&self) -> &CubicalMesh {
        self.mesh
    }

    pub fn dim(&self) -> usize {
        self.dofs.len()
    }

    pub fn dofs(&self) -> &[GlobalDof] {
        &self.dofs
    }

    pub fn local_to_global(&self, cell: usize) -> &[(usize, i8)] {
        &self.local_to_global[cell]
    }

    pub fn element(&self, cell: usize) -> &CubeElement {
        &self.elements[cell]
    }

    /// Negates the orientation of every local DOF that `cell` attaches to the
    /// geometric face `(d, face)`.
    pub fn flip_orientation(&mut self, cell: usize, d: usize, face: usize) {
        for entry in self.local_to_global[cell].iter_mut() {
            if self.dofs[entry.0].dim == d && self.dofs[entry.0].face == face {
                entry.1 = -entry.1;
            }
        }
    }

    /// Restriction of global basis function `g` to `cell`.
    pub fn restrict_basis(&self, g: usize, cell: usize) -> DiffForm {
        let mut out = DiffForm::zero(self.mesh.n, self.k);
        for (i, &(gi, s)) in self.local_to_global[cell].iter().enumerate() {
            if gi == g {
                out.axpy(&scalar::int(s as i64), &self.dual[cell][i]);
            }
        }
        out
    }

    /// Global coefficients of a piecewise form given by its restriction to
    /// every cell. Returns `None` if some piece leaves the local space or the
    /// DOFs of a shared face disagree between cells.
    pub fn coefficients(&self, pieces: &[DiffForm]) -> Result<Option<Vec<Rational>>> {
        let mut coeffs: Vec<Option<Rational>> = vec![None; self.dofs.len()];
        for (c, piece) in pieces.iter().enumerate() {
            let el = &self.elements[c];
            if !el.basis().contains(piece) {
                return Ok(None);
            }
            let values = el.dofs().values(piece)?;
            for (v, &(g, s)) in values.into_iter().zip(&self.local_to_global[c]) {
                let v = if s < 0 { -v } else { v };
                match &coeffs[g] {
                    Some(existing) if *existing != v => return Ok(None),
                    Some(_) => {}
                    None => coeffs[g] = Some(v),
                }
            }
        }
        Ok(coeffs.into_iter().collect())
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ContinuityReport {
    pub r: i64,
    pub k: usize,
    pub shared_faces_checked: usize,
    pub basis_functions: usize,
    pub mismatches: Vec<String>,
}

impl ContinuityReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Exact equality of traces from every incident cell, for every global basis
/// function, on every shared face of dimension `k..n`.
pub fn certify_continuity(space: &GlobalSpace<'_>) -> Result<ContinuityReport> {
    let mesh = space.mesh;
    let n = mesh.n;
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for d in space.k..n {
        for (fid, face) in mesh.faces[d].iter().enumerate() {
            if face.incidence.len() < 2 {
                continue;
            }
            checked += 1;
            // trace of each global basis function from each incident cell
            let mut per_cell: Vec<BTreeMap<usize, DiffForm>> = Vec::new();
            for (c, local) in &face.incidence {
                let mut traces: BTreeMap<usize, DiffForm> = BTreeMap::new();
                for (i, &(g, s)) in space.local_to_global[*c].iter().enumerate() {
                    let t = trace_to_face(&space.dual[*c][i], local)?;
                    if t.is_zero() {
                        continue;
                    }
                    traces
                        .entry(g)
                        .or_insert_with(|| DiffForm::zero(d, space.k))
                        .axpy(&scalar::int(s as i64), &t);
                }
                traces.retain(|_, t| !t.is_zero());
                per_cell.push(traces);
            }
            for (j, other) in per_cell.iter().enumerate().skip(1) {
                if *other != per_cell[0] {
                    mismatches.push(format!(
                        "face {fid} (dim {d}): cells {} and {} disagree",
                        face.incidence[0].0, face.incidence[j].0
                    ));
                }
            }
        }
    }
    Ok(ContinuityReport {
        r: space.r,
        k: space.k,
        shared_faces_checked: checked,
        basis_functions: space.dim(),
        mismatches,
    })
}

/// Matrix of `d: S_r Λ^k(𝒯) → S_{r−1} Λ^{k+1}(𝒯)` in the global bases.
pub fn global_derivative_matrix(src: &GlobalSpace<'_>, dst: &GlobalSpace<'_>) -> Result<RationalMatrix> {
    let cells = src.mesh.cells.len();
    let mut m = RationalMatrix::zeros(dst.dim(), src.dim());
    for g in 0..src.dim() {
        let pieces: Vec<DiffForm> = (0..cells)
            .map(|c| {
                let d = src.restrict_basis(g, c).exterior_derivative();
                if d.is_zero() {
                    DiffForm::zero(src.mesh.n, dst.k)
                } else {
                    d
                }
            })
            .collect();
        let coeffs = dst.coefficients(&pieces)?.ok_or_else(|| {
            Error::Domain(format!(
                "d of global basis function {g} is not in the assembled S_{}Λ^{}",
                dst.r, dst.k
            ))
        })?;
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                m[(i, g)] = c;
            }
        }
    }
    Ok(m)
}

/// Cohomology of `S_r Λ^0(𝒯) → S_{r−1} Λ^1(𝒯) → … → S_{r−n} Λ^n(𝒯)`.
pub fn mesh_complex_cohomology(mesh: &CubicalMesh, r: i64) -> Result<CohomologyReport> {
    let n = mesh.n;
    if r < n as i64 {
        return domain(format!("the mesh complex needs r ≥ n, got r={r}, n={n}"));
    }
    let spaces = (0..=n)
        .map(|k| GlobalSpace::new(mesh, r - k as i64, k))
        .collect::<Result<Vec<_>>>()?;
    let mats = (0..n)
        .map(|k| global_derivative_matrix(&spaces[k], &spaces[k + 1]))
        .collect::<Result<Vec<_>>>()?;
    cohomology_from_matrices(spaces.iter().map(GlobalSpace::dim).collect(), &mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::spaces::dim_s_formula;

    fn grid(shape: &[usize]) -> CubicalMesh {
        build_mesh(&MeshSpec::Grid(shape.to_vec())).unwrap()
    }

    #[test]
    fn grid_counts() {
        let m = grid(&[2, 1, 1]);
        assert_eq!(m.cells().len(), 2);
        assert_eq!(m.num_faces(2), 11);
        assert_eq!(m.faces(2).iter().filter(|f| f.incidence.len() == 2).count(), 1);
        let m = grid(&[1, 1]);
        assert_eq!((m.num_faces(2), m.num_faces(1), m.num_faces(0)), (1, 4, 4));
        let m = grid(&[2, 2]);
        assert_eq!((m.num_faces(2), m.num_faces(1), m.num_faces(0)), (4, 12, 9));
    }

    #[test]
    fn global_face_order() {
        let m = grid(&[2, 1]);
        let lows: Vec<Vec<Rational>> = m
            .faces(0)
            .iter()
            .map(|f| f.key.0.iter().map(|e| e.lower().clone()).collect())
            .collect();
        assert!(lows.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(lows[0], vec![int(0), int(0)]);
    }

    #[test]
    fn spec_parsing() {
        assert!(matches!(MeshSpec::parse_grid("grid:2x1x1").unwrap(), MeshSpec::Grid(s) if s == vec![2, 1, 1]));
        assert!(MeshSpec::parse_grid("grid:2xa").is_err());
        let j = MeshSpec::from_json(r#"{"n":2,"grid":[2,2]}"#).unwrap();
        assert!(matches!(j, MeshSpec::Grid(_)));
        let b = MeshSpec::from_json(r#"{"boxes":[{"lo":[0,0],"hi":[1,1]},{"lo":[1,0],"hi":["3/2",1]}]}"#)
            .unwrap();
        let m = build_mesh(&b).unwrap();
        assert_eq!(m.num_faces(1), 7);
        assert!(MeshSpec::from_json(r#"{"n":3,"grid":[2,2]}"#).is_err());
    }

    #[test]
    fn non_conforming_is_rejected() {
        let boxes = vec![
            AxisBox::new(vec![int(0), int(0)], vec![int(2), int(1)]).unwrap(),
            AxisBox::new(vec![int(2), int(0)], vec![int(3), scalar::frac(1, 2)]).unwrap(),
        ];
        match build_mesh(&MeshSpec::Boxes(boxes)) {
            Err(Error::NonConforming { first, second, .. }) => assert_eq!((first, second), (0, 1)),
            other => panic!("expected non-conforming error, got {other:?}"),
        }
        let overlap = vec![
            AxisBox::new(vec![int(0), int(0)], vec![int(2), int(1)]).unwrap(),
            AxisBox::new(vec![int(1), int(0)], vec![int(3), int(1)]).unwrap(),
        ];
        assert!(build_mesh(&MeshSpec::Boxes(overlap)).is_err());
    }

    #[test]
    fn global_dimensions() {
        let single = grid(&[1, 1]);
        for k in 0..=2 {
            let s = assemble(&single, 2, k).unwrap();
            assert_eq!(s.dim() as u128, dim_s_formula(2, 2, k).unwrap());
        }
        assert_eq!(assemble(&grid(&[2, 1]), 1, 0).unwrap().dim(), 6);
        let m = grid(&[2, 1, 1]);
        assert_eq!(assemble(&m, 1, 2).unwrap().dim(), 33);
        for k in 0..=3 {
            for r in 1..=3 {
                assert_eq!(
                    assemble(&m, r, k).unwrap().dim() as u128,
                    m.global_dim_formula(r, k)
                );
            }
        }
    }

    #[test]
    fn continuity_and_planted_flip() {
        let m = grid(&[2, 1]);
        for k in 0..=2 {
            let s = assemble(&m, 2, k).unwrap();
            assert!(certify_continuity(&s).unwrap().pass());
        }
        let mut s = assemble(&m, 2, 1).unwrap();
        let shared = m.faces(1).iter().position(|f| f.incidence.len() == 2).unwrap();
        s.flip_orientation(1, 1, shared);
        assert!(!certify_continuity(&s).unwrap().pass());
    }

    #[test]
    fn mesh_cohomology_small() {
        let rep = mesh_complex_cohomology(&grid(&[2, 1]), 2).unwrap();
        assert!(rep.pass(), "{rep:?}");
        let single = mesh_complex_cohomology(&grid(&[1, 1]), 3).unwrap();
        let cube = crate::element::complex_cohomology_on_cube(2, 3).unwrap();
        assert_eq!(single.defects, cube.defects);
        assert_eq!(single.dims, cube.dims);
    }
}
