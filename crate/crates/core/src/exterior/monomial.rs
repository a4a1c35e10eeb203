use std::cmp::Ordering;
use std::fmt;

use super::index::{index_sets, multi_indices, IndexSet, MultiIndex};

/// A form monomial `x^α dx_σ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormMonomial {
    pub alpha: MultiIndex,
    pub sigma: IndexSet,
}

impl FormMonomial {
    pub fn new(alpha: MultiIndex, sigma: IndexSet) -> Self {
        FormMonomial { alpha, sigma }
    }

    pub fn n(&self) -> usize {
        self.alpha.n()
    }

    /// Form degree `k = |σ|`.
    pub fn k(&self) -> usize {
        self.sigma.len()
    }

    pub fn deg(&self) -> u32 {
        self.alpha.degree()
    }

    /// Number of axes outside `σ` entering the coefficient exactly linearly.
    pub fn ldeg(&self) -> u32 {
        self.sigma
            .complement(self.n())
            .iter()
            .filter(|&i| self.alpha.exponent(i) == 1)
            .count() as u32
    }

    /// `deg − ldeg`.
    pub fn superlinear_degree(&self) -> u32 {
        self.deg() - self.ldeg()
    }

    /// The weight `α + 1_σ`; preserved by both `d` and the Koszul differential.
    pub fn weight(&self) -> MultiIndex {
        let mut w = self.alpha.exponents().to_vec();
        for i in self.sigma.iter() {
            w[i - 1] += 1;
        }
        MultiIndex::new(w)
    }
}

/// Graded lexicographic on `(deg, α, σ)`.
impl Ord for FormMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg()
            .cmp(&other.deg())
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.sigma.cmp(&other.sigma))
    }
}

impl PartialOrd for FormMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FormMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?} dx{:?}", self.alpha, self.sigma)
    }
}

/// All `k`-form monomials in `n` variables of polynomial degree exactly `deg`,
/// in canonical order.
pub fn form_monomials(n: usize, k: usize, deg: u32) -> Vec<FormMonomial> {
    let sets = index_sets(n, k);
    let mut out = Vec::new();
    for alpha in multi_indices(n, deg) {
        for &sigma in &sets {
            out.push(FormMonomial::new(alpha.clone(), sigma));
        }
    }
    out
}

/// All `k`-form monomials of degree at most `max_deg` (none if negative).
pub fn form_monomials_upto(n: usize, k: usize, max_deg: i64) -> Vec<FormMonomial> {
    (0..=max_deg.max(-1))
        .flat_map(|s| form_monomials(n, k, s as u32))
        .collect()
}
