//! Vector proxies for 1- and 2-forms in three dimensions.
//!
//! 1-forms: `u₁dx₁ + u₂dx₂ + u₃dx₃ ↔ (u₁, u₂, u₃)`.
//! 2-forms: `u₁θ₁ + u₂θ₂ + u₃θ₃ ↔ (u₁, u₂, u₃)` with `θ₁ = dx₂∧dx₃`,
//! `θ₂ = dx₃∧dx₁ = −dx₁∧dx₃`, `θ₃ = dx₁∧dx₂`.

use crate::error::{domain, Result};
use crate::exterior::{DiffForm, IndexSet};
use crate::scalar;

/// Scalar polynomial (0-form in three variables).
pub type Component = DiffForm;

fn alternators(k: usize) -> Result<[(IndexSet, i64); 3]> {
    let s = |v: &[usize]| IndexSet::new(v, 3);
    match k {
        1 => Ok([(s(&[1])?, 1), (s(&[2])?, 1), (s(&[3])?, 1)]),
        2 => Ok([(s(&[2, 3])?, 1), (s(&[1, 3])?, -1), (s(&[1, 2])?, 1)]),
        _ => domain(format!("vector proxies exist for k = 1, 2, not {k}")),
    }
}

/// Components of a 1- or 2-form in three variables.
pub fn to_vector_proxy(mu: &DiffForm) -> Result<[Component; 3]> {
    if mu.n() != 3 {
        return domain(format!("vector proxies need n = 3, got {}", mu.n()));
    }
    let alts = alternators(mu.k())?;
    let mut out = [DiffForm::zero(3, 0), DiffForm::zero(3, 0), DiffForm::zero(3, 0)];
    for (m, c) in mu.terms() {
        let i = alts.iter().position(|(s, _)| *s == m.sigma).expect("alternator of degree k");
        let sign = scalar::int(alts[i].1);
        let coeff = DiffForm::monomial(m.alpha.exponents(), &[], c * &sign)?;
        out[i].axpy(&scalar::one(), &coeff);
    }
    Ok(out)
}

/// The `k`-form with the given proxy components.
pub fn from_vector_proxy(components: &[Component; 3], k: usize) -> Result<DiffForm> {
    let alts = alternators(k)?;
    let mut out = DiffForm::zero(3, k);
    for (u, (sigma, sign)) in components.iter().zip(alts) {
        if !u.is_zero() && (u.n() != 3 || u.k() != 0) {
            return domain("proxy components must be scalar polynomials in three variables");
        }
        let alt = DiffForm::alternator(3, &sigma.to_vec())?;
        out.axpy(&scalar::int(sign), &u.wedge(&alt)?);
    }
    Ok(out)
}

/// `(x₂x₃(w₂−w₃), x₃x₁(w₃−w₁), x₁x₂(w₁−w₂))`.
pub fn cross_weight_field(w: &[Component; 3]) -> Result<[Component; 3]> {
    let pair = |i: usize, j: usize| {
        let mut e = [0u32; 3];
        e[i] = 1;
        e[j] = 1;
        DiffForm::monomial(&e, &[], scalar::one())
    };
    let c0 = pair(1, 2)?.wedge(&(&w[1] - &w[2]))?;
    let c1 = pair(2, 0)?.wedge(&(&w[2] - &w[0]))?;
    let c2 = pair(0, 1)?.wedge(&(&w[0] - &w[1]))?;
    Ok([c0, c1, c2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn c(alpha: &[u32], v: i64) -> DiffForm {
        DiffForm::monomial(alpha, &[], int(v)).unwrap()
    }

    #[test]
    fn unit_proxies() {
        let dx1 = DiffForm::alternator(3, &[1]).unwrap();
        let p = to_vector_proxy(&dx1).unwrap();
        assert_eq!(p[0], c(&[0, 0, 0], 1));
        assert!(p[1].is_zero() && p[2].is_zero());
        let theta1 = DiffForm::alternator(3, &[2, 3]).unwrap();
        let p = to_vector_proxy(&theta1).unwrap();
        assert_eq!(p[0], c(&[0, 0, 0], 1));
        let p2 = [DiffForm::zero(3, 0), c(&[0, 0, 0], 1), DiffForm::zero(3, 0)];
        assert_eq!(
            from_vector_proxy(&p2, 2).unwrap(),
            DiffForm::alternator(3, &[1, 3]).unwrap().scale(&int(-1))
        );
    }

    #[test]
    fn round_trip() {
        let u = [c(&[1, 0, 2], 3), c(&[0, 1, 0], -1), c(&[2, 2, 0], 5)];
        for k in [1, 2] {
            let f = from_vector_proxy(&u, k).unwrap();
            assert_eq!(to_vector_proxy(&f).unwrap(), u);
        }
    }

    #[test]
    fn derivative_is_curl() {
        // d of the 1-form proxy of (0, 0, x1) is the 2-form proxy of curl = (0, −1, 0)
        let u = [DiffForm::zero(3, 0), DiffForm::zero(3, 0), c(&[1, 0, 0], 1)];
        let du = from_vector_proxy(&u, 1).unwrap().exterior_derivative();
        let curl = to_vector_proxy(&du).unwrap();
        assert_eq!(curl[1], c(&[0, 0, 0], -1));
        assert!(curl[0].is_zero() && curl[2].is_zero());
    }

    #[test]
    fn wrong_dimension() {
        assert!(to_vector_proxy(&DiffForm::alternator(2, &[1]).unwrap()).is_err());
        assert!(to_vector_proxy(&DiffForm::alternator(3, &[]).unwrap()).is_err());
    }
}
