use std::sync::{Arc, OnceLock};

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use super::dofs::{weight_basis, DofSet};
use super::geometry::{faces, integrate_top_form, trace_to_face, AxisBox};
use crate::error::{domain, Error, Result};
use crate::exterior::{form_monomials_upto, DiffForm};
use crate::linalg::{EchelonSpace, RationalMatrix};
use crate::scalar::{self, Rational};
use crate::spaces::{cached_basis_s, dim_s_formula, Family, SpaceBasis};

/// The `S_r Λ^k` element on one box: shape functions, DOFs and the DOF matrix
/// `M[i][j] = dof_i(basis_j)`.
#[derive(Debug)]
pub struct CubeElement {
    pub r: i64,
    pub k: usize,
    basis: Arc<SpaceBasis>,
    forms: Vec<DiffForm>,
    dofs: DofSet,
    matrix: RationalMatrix,
    inverse: OnceLock<std::result::Result<RationalMatrix, String>>,
}

impl CubeElement {
    pub fn new(domain_box: &AxisBox, r: i64, k: usize) -> Result<Self> {
        let basis = cached_basis_s(domain_box.n(), r, k)?;
        let forms = basis.forms();
        let dofs = DofSet::new(domain_box, r, k)?;
        let mut matrix = RationalMatrix::zeros(dofs.len(), forms.len());
        for (j, f) in forms.iter().enumerate() {
            for (i, v) in dofs.values(f)?.into_iter().enumerate() {
                matrix[(i, j)] = v;
            }
        }
        Ok(CubeElement {
            r,
            k,
            basis,
            forms,
            dofs,
            matrix,
            inverse: OnceLock::new(),
        })
    }

    pub fn reference(n: usize, r: i64, k: usize) -> Result<Self> {
        CubeElement::new(&AxisBox::reference(n), r, k)
    }

    pub fn n(&self) -> usize {
        self.dofs.domain.n()
    }

    pub fn domain(&self) -> &AxisBox {
        &self.dofs.domain
    }

    pub fn basis(&self) -> &SpaceBasis {
        &self.basis
    }

    pub fn shape_functions(&self) -> &[DiffForm] {
        &self.forms
    }

    pub fn dofs(&self) -> &DofSet {
        &self.dofs
    }

    pub fn dof_matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    fn inverse(&self) -> Result<&RationalMatrix> {
        self.inverse
            .get_or_init(|| self.matrix.inverse().map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| Error::Singular(e.clone()))
    }

    fn combine(&self, coeffs: &[Rational]) -> DiffForm {
        let mut out = DiffForm::zero(self.n(), self.k);
        for (c, f) in coeffs.iter().zip(&self.forms) {
            out.axpy(c, f);
        }
        out
    }

    /// Canonical projection: the unique shape function sharing all DOF values
    /// with `mu`.
    pub fn project(&self, mu: &DiffForm) -> Result<DiffForm> {
        let values = self.dofs.values(mu)?;
        let coeffs = self.inverse()?.mul_vec(&values);
        Ok(self.combine(&coeffs))
    }

    /// The basis dual to the DOFs: `dof_i(ψ_j) = δ_ij`.
    pub fn dual_basis(&self) -> Result<Vec<DiffForm>> {
        let inv = self.inverse()?;
        Ok((0..inv.cols()).map(|j| self.combine(&inv.column(j))).collect())
    }
}

/// `dof_matrix(n, r, k)` on the reference cube.
pub fn dof_matrix(n: usize, r: i64, k: usize) -> Result<RationalMatrix> {
    Ok(CubeElement::reference(n, r, k)?.matrix)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct UnisolvenceReport {
    pub n: usize,
    pub r: i64,
    pub k: usize,
    pub num_dofs: usize,
    pub dim_space: usize,
    pub formula: u128,
    pub rank: usize,
    pub dimension_ok: bool,
    pub matrix_nonsingular: bool,
}

impl UnisolvenceReport {
    pub fn pass(&self) -> bool {
        self.dimension_ok && self.matrix_nonsingular
    }
}

pub fn certify_unisolvence_on(domain_box: &AxisBox, r: i64, k: usize) -> Result<UnisolvenceReport> {
    let el = CubeElement::new(domain_box, r, k)?;
    let n = domain_box.n();
    let formula = dim_s_formula(n, r, k)?;
    let rank = el.matrix.rank();
    let (rows, cols) = (el.matrix.rows(), el.matrix.cols());
    Ok(UnisolvenceReport {
        n,
        r,
        k,
        num_dofs: rows,
        dim_space: cols,
        formula,
        rank,
        dimension_ok: rows == cols && cols as u128 == formula,
        matrix_nonsingular: rows == cols && rank == cols,
    })
}

/// Dimension count and exact nonsingularity of the DOF matrix on `[−1,1]^n`.
pub fn certify_unisolvence(n: usize, r: i64, k: usize) -> Result<UnisolvenceReport> {
    certify_unisolvence_on(&AxisBox::reference(n), r, k)
}

/// Stacks the coefficient vectors of the traces of `forms` on each facet.
fn facet_trace_matrix(forms: &[DiffForm], domain_box: &AxisBox) -> Result<RationalMatrix> {
    let n = domain_box.n();
    let mut blocks = Vec::new();
    for facet in faces(domain_box, n - 1)? {
        let traces = forms
            .iter()
            .map(|f| trace_to_face(f, &facet))
            .collect::<Result<Vec<_>>>()?;
        blocks.push(RationalMatrix::from_form_columns(&traces));
    }
    let rows: Vec<Vec<Rational>> = blocks
        .iter()
        .flat_map(|b| (0..b.rows()).map(|i| b.row(i).to_vec()).collect::<Vec<_>>())
        .collect();
    Ok(if rows.is_empty() {
        RationalMatrix::zeros(0, forms.len())
    } else {
        RationalMatrix::from_rows(rows)
    })
}

/// Shape functions whose traces vanish on every facet of `[−1,1]^n`.
pub fn vanishing_trace_basis(n: usize, r: i64, k: usize) -> Result<SpaceBasis> {
    vanishing_trace_basis_on(&AxisBox::reference(n), r, k)
}

pub fn vanishing_trace_basis_on(domain_box: &AxisBox, r: i64, k: usize) -> Result<SpaceBasis> {
    let n = domain_box.n();
    let basis = cached_basis_s(n, r, k)?;
    let forms = basis.forms();
    let m = facet_trace_matrix(&forms, domain_box)?;
    let mut space = EchelonSpace::new(n, k);
    for v in m.nullspace() {
        let mut f = DiffForm::zero(n, k);
        for (c, g) in v.iter().zip(&forms) {
            f.axpy(c, g);
        }
        space.insert(&f);
    }
    Ok(SpaceBasis::from_parts(Family::VanishingS, n, r, k, None, space))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VanishingTraceReport {
    pub n: usize,
    pub r: i64,
    pub k: usize,
    pub dim_vanishing: usize,
    pub num_interior_moments: usize,
    pub rank: usize,
    pub full_column_rank: bool,
    pub square: bool,
}

impl VanishingTraceReport {
    pub fn pass(&self) -> bool {
        self.full_column_rank
    }
}

/// Interior moments `μ ↦ ∫_T μ ∧ ν`, `ν ∈ P_{r−2(n−k)} Λ^{n−k}(T)`, are
/// injective on the vanishing-trace subspace.
pub fn certify_vanishing_trace_unisolvence(n: usize, r: i64, k: usize) -> Result<VanishingTraceReport> {
    let cube = AxisBox::reference(n);
    let kernel = vanishing_trace_basis_on(&cube, r, k)?;
    let weights = weight_basis(n, r, k);
    let mut m = RationalMatrix::zeros(weights.len(), kernel.dim());
    for (j, mu) in kernel.iter().enumerate() {
        for (i, nu) in weights.iter().enumerate() {
            m[(i, j)] = integrate_top_form(&mu.wedge(nu)?, &cube)?;
        }
    }
    let rank = m.rank();
    Ok(VanishingTraceReport {
        n,
        r,
        k,
        dim_vanishing: kernel.dim(),
        num_interior_moments: weights.len(),
        rank,
        full_column_rank: rank == kernel.dim(),
        square: weights.len() == kernel.dim(),
    })
}

/// A seeded random polynomial `k`-form of degree at most `max_deg` with a
/// handful of small integer coefficients.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, k: usize, max_deg: i64) -> DiffForm {
    let monos = form_monomials_upto(n, k, max_deg);
    let mut f = DiffForm::zero(n, k);
    if monos.is_empty() {
        return f;
    }
    let terms = rng.gen_range(1..=6);
    for _ in 0..terms {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        let mut c = rng.gen_range(-4i64..=4);
        if c == 0 {
            c = 1;
        }
        f.axpy(&scalar::one(), &DiffForm::from_monomial(m, scalar::int(c)));
    }
    f
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CommutingReport {
    pub n: usize,
    pub r: i64,
    pub samples: usize,
    pub failures: Vec<String>,
}

impl CommutingReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `π_{r−k−1}^{k+1} dμ = d π_{r−k}^k μ` for each sample `k`-form,
/// `k < n`, on `[−1,1]^n`.
pub fn certify_commuting_diagram(n: usize, r: i64, samples: &[DiffForm]) -> Result<CommutingReport> {
    if r < n as i64 {
        return domain(format!("commuting diagram needs r ≥ n, got r={r}, n={n}"));
    }
    let elements = (0..=n)
        .map(|k| CubeElement::reference(n, r - k as i64, k))
        .collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    for (i, mu) in samples.iter().enumerate() {
        let k = mu.k();
        if mu.n() != n || k >= n {
            return domain(format!("sample {i} is not a k-form with k < {n}"));
        }
        let left = elements[k + 1].project(&mu.exterior_derivative())?;
        let right = elements[k].project(mu)?.exterior_derivative();
        if left != right {
            failures.push(format!("sample {i} (k={k}): {mu:?}"));
        }
    }
    Ok(CommutingReport {
        n,
        r,
        samples: samples.len(),
        failures,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CohomologyReport {
    /// `dim S_{r−k} Λ^k` for `k = 0..=n`.
    pub dims: Vec<usize>,
    /// Rank of `d` out of degree `k`, `k = 0..n`.
    pub ranks: Vec<usize>,
    pub products_vanish: bool,
    /// `dim ker d_k − rank d_{k−1}`.
    pub defects: Vec<usize>,
}

impl CohomologyReport {
    pub fn pass(&self) -> bool {
        let mut expect = vec![0; self.defects.len()];
        expect[0] = 1;
        self.products_vanish && self.defects == expect
    }
}

/// Assembles defects from the matrices of `d` between consecutive spaces.
pub(crate) fn cohomology_from_matrices(dims: Vec<usize>, mats: &[RationalMatrix]) -> Result<CohomologyReport> {
    let mut products_vanish = true;
    for w in mats.windows(2) {
        if !w[1].mul(&w[0])?.is_zero() {
            products_vanish = false;
        }
    }
    let ranks: Vec<usize> = mats.iter().map(RationalMatrix::rank).collect();
    let defects = (0..dims.len())
        .map(|k| {
            let out_rank = ranks.get(k).copied().unwrap_or(0);
            let in_rank = if k == 0 { 0 } else { ranks[k - 1] };
            dims[k] - out_rank - in_rank
        })
        .collect();
    Ok(CohomologyReport {
        dims,
        ranks,
        products_vanish,
        defects,
    })
}

/// Cohomology of `S_r Λ^0 → S_{r−1} Λ^1 → … → S_{r−n} Λ^n` on one cube,
/// computed in the echelon bases.
pub fn complex_cohomology_on_cube(n: usize, r: i64) -> Result<CohomologyReport> {
    if r < n as i64 {
        return domain(format!("the complex on the cube needs r ≥ n, got r={r}, n={n}"));
    }
    let spaces = (0..=n)
        .map(|k| cached_basis_s(n, r - k as i64, k))
        .collect::<Result<Vec<_>>>()?;
    let mut mats = Vec::new();
    for k in 0..n {
        let (src, dst) = (&spaces[k], &spaces[k + 1]);
        let mut m = RationalMatrix::zeros(dst.dim(), src.dim());
        for (j, f) in src.iter().enumerate() {
            let coords = dst.space().coordinates(&f.exterior_derivative()).ok_or_else(|| {
                Error::Domain(format!("d leaves S_{}Λ^{}", r - k as i64 - 1, k + 1))
            })?;
            for (i, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    m[(i, j)] = c;
                }
            }
        }
        mats.push(m);
    }
    cohomology_from_matrices(spaces.iter().map(|s| s.dim()).collect(), &mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use rand::SeedableRng;

    #[test]
    fn interval_p1_matrix() {
        let m = dof_matrix(1, 1, 0).unwrap();
        assert_eq!(m.rows(), 2);
        let det = &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)];
        assert!(det == int(2) || det == int(-2));
    }

    #[test]
    fn small_unisolvence() {
        for (n, r, k) in [(1, 3, 1), (2, 2, 1), (3, 1, 1), (2, 3, 0), (3, 2, 2)] {
            let rep = certify_unisolvence(n, r, k).unwrap();
            assert!(rep.pass(), "{rep:?}");
        }
        assert_eq!(certify_unisolvence(3, 1, 1).unwrap().num_dofs, 24);
    }

    #[test]
    fn unisolvence_is_invariant_under_dilation() {
        let rep = certify_unisolvence_on(&AxisBox::unit(2), 3, 1).unwrap();
        assert!(rep.pass());
        let skew = AxisBox::new(vec![int(0), scalar::frac(1, 2)], vec![int(3), int(1)]).unwrap();
        assert!(certify_unisolvence_on(&skew, 2, 0).unwrap().pass());
    }

    #[test]
    fn projection_examples() {
        let el = CubeElement::reference(1, 1, 0).unwrap();
        let x2 = DiffForm::monomial(&[2], &[], int(1)).unwrap();
        assert_eq!(el.project(&x2).unwrap(), DiffForm::monomial(&[0], &[], int(1)).unwrap());
        let el = CubeElement::reference(2, 2, 1).unwrap();
        for f in el.shape_functions() {
            assert_eq!(&el.project(f).unwrap(), f);
        }
        let dual = el.dual_basis().unwrap();
        for (j, psi) in dual.iter().enumerate() {
            let v = el.dofs().values(psi).unwrap();
            for (i, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn vanishing_trace_examples() {
        for r in 1..=4 {
            assert_eq!(vanishing_trace_basis(1, r, 0).unwrap().dim(), (r - 1) as usize);
        }
        assert_eq!(vanishing_trace_basis(2, 2, 2).unwrap().dim(), 6);
        assert_eq!(vanishing_trace_basis(3, 2, 2).unwrap().dim(), 3);
        let rep = certify_vanishing_trace_unisolvence(3, 3, 2).unwrap();
        assert_eq!(rep.num_interior_moments, 12);
        assert!(rep.pass());
        let rep = certify_vanishing_trace_unisolvence(2, 2, 1).unwrap();
        assert_eq!(rep.num_interior_moments, 2);
        assert!(rep.pass() && rep.square);
        // no interior moments: the vanishing-trace space must be trivial
        let rep = certify_vanishing_trace_unisolvence(3, 1, 0).unwrap();
        assert_eq!((rep.num_interior_moments, rep.dim_vanishing), (0, 0));
    }

    #[test]
    fn commuting_small() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let samples: Vec<DiffForm> = (0..10)
            .flat_map(|_| (0..2).map(|k| random_form(&mut rng, 2, k, 4)).collect::<Vec<_>>())
            .collect();
        let rep = certify_commuting_diagram(2, 2, &samples).unwrap();
        assert!(rep.pass(), "{rep:?}");
        let constant = DiffForm::monomial(&[0, 0], &[], int(5)).unwrap();
        assert!(certify_commuting_diagram(2, 3, &[constant]).unwrap().pass());
        assert!(certify_commuting_diagram(3, 2, &[]).is_err());
    }

    #[test]
    fn cube_cohomology() {
        assert_eq!(complex_cohomology_on_cube(1, 2).unwrap().defects, vec![1, 0]);
        let rep = complex_cohomology_on_cube(2, 3).unwrap();
        assert!(rep.pass(), "{rep:?}");
        assert!(complex_cohomology_on_cube(3, 2).is_err());
    }
}
