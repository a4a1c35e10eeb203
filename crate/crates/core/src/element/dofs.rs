//! Face-moment degrees of freedom `μ ↦ ∫_f tr_f μ ∧ ν`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::geometry::{faces, integrate_top_form, trace_to_face, AxisBox, CubeFace};
use crate::error::{domain, Result};
use crate::exterior::{form_monomials_upto, DiffForm, FormJson};
use crate::scalar::{self, Rational};

/// One moment functional: a face and a weight `(d−k)`-form in the face's
/// `d` free coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DofFunctional {
    pub face: CubeFace,
    pub weight: DiffForm,
}

impl DofFunctional {
    pub fn eval(&self, mu: &DiffForm) -> Result<Rational> {
        let tr = trace_to_face(mu, &self.face)?;
        self.eval_traced(&tr)
    }

    /// Evaluation on a form already traced to this functional's face.
    pub fn eval_traced(&self, traced: &DiffForm) -> Result<Rational> {
        let d = self.face.dim();
        if traced.n() != d || (!traced.is_zero() && traced.k() + self.weight.k() != d) {
            return domain(format!(
                "tr_f μ ∧ ν is not a top form on a {d}-face (k = {}, weight degree {})",
                traced.k(),
                self.weight.k()
            ));
        }
        integrate_top_form(&traced.wedge(&self.weight)?, &self.face.as_box())
    }
}

/// Highest face dimension carrying DOFs: `min(n, ⌊r/2⌋ + k)`.
pub fn max_dof_dim(n: usize, r: i64, k: usize) -> usize {
    n.min((r.max(0) / 2) as usize + k)
}

/// Monomial basis of `P_{r−2(d−k)} Λ^{d−k}` in `d` variables, graded-lex.
pub fn weight_basis(d: usize, r: i64, k: usize) -> Vec<DiffForm> {
    if d < k {
        return Vec::new();
    }
    form_monomials_upto(d, d - k, r - 2 * (d - k) as i64)
        .into_iter()
        .map(|m| DiffForm::from_monomial(m, scalar::one()))
        .collect()
}

/// The ordered DOFs of `S_r Λ^k` on a box: by face dimension, then face
/// order of [`faces`], then weight order.
#[derive(Clone, Debug)]
pub struct DofSet {
    pub r: i64,
    pub k: usize,
    pub domain: AxisBox,
    pub dofs: Vec<DofFunctional>,
}

impl DofSet {
    pub fn new(domain: &AxisBox, r: i64, k: usize) -> Result<Self> {
        let n = domain.n();
        if k > n {
            return domain_err(k, n);
        }
        let mut dofs = Vec::new();
        for d in k..=max_dof_dim(n, r, k) {
            let weights = weight_basis(d, r, k);
            if weights.is_empty() {
                continue;
            }
            for face in faces(domain, d)? {
                for w in &weights {
                    dofs.push(DofFunctional {
                        face: face.clone(),
                        weight: w.clone(),
                    });
                }
            }
        }
        Ok(DofSet {
            r,
            k,
            domain: domain.clone(),
            dofs,
        })
    }

    pub fn reference(n: usize, r: i64, k: usize) -> Result<Self> {
        DofSet::new(&AxisBox::reference(n), r, k)
    }

    pub fn len(&self) -> usize {
        self.dofs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dofs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &DofFunctional> {
        self.dofs.iter()
    }

    /// All DOF values of `mu`, tracing once per face.
    pub fn values(&self, mu: &DiffForm) -> Result<Vec<Rational>> {
        let mut out = Vec::with_capacity(self.dofs.len());
        let mut cache: Option<(&CubeFace, DiffForm)> = None;
        for dof in &self.dofs {
            let fresh = match &cache {
                Some((f, _)) => *f != &dof.face,
                None => true,
            };
            if fresh {
                cache = Some((&dof.face, trace_to_face(mu, &dof.face)?));
            }
            out.push(dof.eval_traced(&cache.as_ref().unwrap().1)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> DofSetJson {
        DofSetJson {
            n: self.domain.n(),
            r: self.r,
            k: self.k,
            count: self.dofs.len(),
            dofs: self
                .dofs
                .iter()
                .map(|d| DofJson {
                    dim: d.face.dim(),
                    face: FaceJson {
                        fixed: d
                            .face
                            .fixed()
                            .iter()
                            .map(|(&a, &s)| (a.to_string(), s.sign()))
                            .collect(),
                    },
                    weight: d.weight.to_json(),
                })
                .collect(),
        }
    }
}

fn domain_err<T>(k: usize, n: usize) -> Result<T> {
    domain(format!("form degree {k} exceeds dimension {n}"))
}

/// `fixed` maps each fixed axis to `-1` (lower end) or `+1` (upper end).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FaceJson {
    pub fixed: BTreeMap<String, i8>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DofJson {
    pub dim: usize,
    pub face: FaceJson,
    pub weight: FormJson,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DofSetJson {
    pub n: usize,
    pub r: i64,
    pub k: usize,
    pub count: usize,
    pub dofs: Vec<DofJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::spaces::dim_s_formula;

    #[test]
    fn counts_match_formula() {
        for n in 1..=4 {
            for k in 0..=n {
                for r in 1..=7 {
                    let dofs = DofSet::reference(n, r, k).unwrap();
                    assert_eq!(dofs.len() as u128, dim_s_formula(n, r, k).unwrap());
                }
            }
        }
        assert_eq!(DofSet::reference(3, 0, 3).unwrap().len(), 1);
    }

    #[test]
    fn vertex_dofs_are_point_values() {
        let mu = DiffForm::monomial(&[1], &[], int(1)).unwrap();
        let dofs = DofSet::reference(1, 1, 0).unwrap();
        assert_eq!(dofs.values(&mu).unwrap(), vec![int(-1), int(1)]);
        let mu = &DiffForm::monomial(&[1, 1], &[], int(2)).unwrap()
            + &DiffForm::monomial(&[0, 0], &[], int(1)).unwrap();
        let vals = DofSet::reference(2, 1, 0).unwrap().values(&mu).unwrap();
        // vertices (−1,−1), (−1,1), (1,−1), (1,1)
        assert_eq!(vals, vec![int(3), int(-1), int(-1), int(3)]);
    }

    #[test]
    fn edge_moment_of_dx1() {
        let mu = DiffForm::alternator(2, &[1]).unwrap();
        let dofs = DofSet::reference(2, 1, 1).unwrap();
        let bottom = dofs
            .iter()
            .find(|d| d.face.fixed().get(&2) == Some(&super::super::Side::Lo))
            .unwrap();
        assert_eq!(bottom.eval(&mu).unwrap(), int(2));
        // on the vertical edges dx1 has zero trace
        let left = dofs
            .iter()
            .find(|d| d.face.fixed().get(&1).is_some())
            .unwrap();
        assert_eq!(left.eval(&mu).unwrap(), int(0));
    }

    #[test]
    fn mismatched_degree_is_rejected() {
        let dofs = DofSet::reference(2, 1, 1).unwrap();
        let zero_form = DiffForm::monomial(&[1, 0], &[], int(1)).unwrap();
        assert!(dofs.dofs[0].eval(&zero_form).is_err());
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_value(DofSet::reference(2, 2, 1).unwrap().to_json()).unwrap();
        assert_eq!(j["count"], 14);
        assert_eq!(j["dofs"][0]["face"]["fixed"]["1"], -1);
        assert_eq!(j["dofs"][0]["weight"]["k"], 0);
    }
}
