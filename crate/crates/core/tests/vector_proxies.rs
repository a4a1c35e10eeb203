//! The 3-D H(div) and H(curl) spaces built from their vector-field
//! descriptions must coincide with the exterior-calculus construction.

use cubical_forms::element::proxy::{cross_weight_field, from_vector_proxy, to_vector_proxy};
use cubical_forms::exterior::{multi_indices, DiffForm, MultiIndex};
use cubical_forms::linalg::EchelonSpace;
use cubical_forms::scalar::int;
use cubical_forms::spaces::{basis_p, basis_s};

fn scalar(alpha: &MultiIndex) -> DiffForm {
    DiffForm::monomial(alpha.exponents(), &[], int(1)).unwrap()
}

/// Monomials of degree ≤ `r` in three variables not involving `x_i`.
fn independent_of(i: usize, r: i64) -> Vec<DiffForm> {
    (0..=r.max(-1))
        .flat_map(|d| multi_indices(3, d as u32))
        .filter(|a| a.exponent(i + 1) == 0)
        .map(|a| scalar(&a))
        .collect()
}

/// Every admissible `w` with a single nonzero monomial component.
fn cross_fields(r: i64) -> Vec<[DiffForm; 3]> {
    let mut out = Vec::new();
    for i in 0..3 {
        for m in independent_of(i, r) {
            let mut w = [DiffForm::zero(3, 0), DiffForm::zero(3, 0), DiffForm::zero(3, 0)];
            w[i] = m;
            out.push(cross_weight_field(&w).unwrap());
        }
    }
    out
}

#[test]
fn h_div_description_matches() {
    for r in 1..=4 {
        let mut forms = basis_p(3, r, 2).unwrap().forms().to_vec();
        for field in cross_fields(r) {
            forms.push(from_vector_proxy(&field, 1).unwrap().exterior_derivative());
        }
        let described = EchelonSpace::from_forms(3, 2, &forms);
        let s = basis_s(3, r, 2).unwrap();
        assert!(described.same_span(s.space()), "r = {r}");
        assert_eq!(s.dim() as i64, (r + 1) * (r * r + 5 * r + 12) / 2);
    }
}

#[test]
fn h_curl_description_matches() {
    for r in 1..=4 {
        let mut forms = basis_p(3, r, 1).unwrap().forms().to_vec();
        for field in cross_fields(r - 1) {
            forms.push(from_vector_proxy(&field, 1).unwrap());
        }
        // gradients of s with superlinear degree ≤ r + 1
        let cap = (r + 1) as u32;
        for d in 0..=(cap + 3) {
            for a in multi_indices(3, d) {
                let superlinear: u32 = a.exponents().iter().filter(|&&e| e >= 2).sum();
                if superlinear <= cap {
                    forms.push(scalar(&a).exterior_derivative());
                }
            }
        }
        let described = EchelonSpace::from_forms(3, 1, &forms);
        let s = basis_s(3, r, 1).unwrap();
        assert!(described.same_span(s.space()), "r = {r}");
        assert_eq!(s.dim() as i64, (r + 1) * (r * r + 5 * r + 18) / 2);
    }
}

#[test]
fn proxies_round_trip_on_basis() {
    for k in [1, 2] {
        for f in basis_s(3, 2, k).unwrap().iter() {
            let p = to_vector_proxy(f).unwrap();
            assert_eq!(&from_vector_proxy(&p, k).unwrap(), f);
        }
    }
}
