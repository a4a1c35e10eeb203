use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::index::{sign, IndexSet, MultiIndex};
use super::monomial::FormMonomial;
use crate::error::{domain, Result};
use crate::scalar::{self, Rational};

/// A polynomial differential `k`-form in `n` variables, stored as a sorted map
/// from form monomials to nonzero rational coefficients.
///
/// Zero forms carry a nominal degree; arithmetic between a zero form and a
/// form of another degree is allowed and yields the nonzero operand.
#[derive(Clone)]
pub struct DiffForm {
    n: usize,
    k: usize,
    terms: BTreeMap<FormMonomial, Rational>,
}

impl DiffForm {
    pub fn zero(n: usize, k: usize) -> Self {
        DiffForm {
            n,
            k,
            terms: BTreeMap::new(),
        }
    }

    /// `c · x^α dx_σ`, with `σ` given as 1-based axes.
    pub fn monomial(alpha: &[u32], sigma: &[usize], coeff: Rational) -> Result<Self> {
        let n = alpha.len();
        let sigma = IndexSet::new(sigma, n)?;
        let mut f = DiffForm::zero(n, sigma.len());
        f.accumulate(FormMonomial::new(MultiIndex::new(alpha.to_vec()), sigma), coeff);
        Ok(f)
    }

    /// A constant-coefficient basic alternator `dx_σ`.
    pub fn alternator(n: usize, sigma: &[usize]) -> Result<Self> {
        DiffForm::monomial(&vec![0; n], sigma, scalar::one())
    }

    pub fn from_monomial(m: FormMonomial, coeff: Rational) -> Self {
        let mut f = DiffForm::zero(m.n(), m.k());
        f.accumulate(m, coeff);
        f
    }

    /// Collects terms, summing duplicates; every monomial must match `(n, k)`.
    pub fn from_terms(
        n: usize,
        k: usize,
        terms: impl IntoIterator<Item = (FormMonomial, Rational)>,
    ) -> Result<Self> {
        let mut f = DiffForm::zero(n, k);
        for (m, c) in terms {
            if m.n() != n || m.k() != k {
                return domain(format!("monomial {m:?} is not a {k}-form in {n} variables"));
            }
            f.accumulate(m, c);
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &FormMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&FormMonomial, &Rational)> {
        self.terms.iter().next()
    }

    pub(crate) fn accumulate(&mut self, m: FormMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn axpy(&mut self, c: &Rational, other: &DiffForm) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.k = other.k;
            self.n = other.n;
        }
        assert!(
            self.n == other.n && self.k == other.k,
            "adding a {}-form in {} variables to a {}-form in {} variables",
            other.k,
            other.n,
            self.k,
            self.n
        );
        for (m, v) in &other.terms {
            self.accumulate(m.clone(), c * v);
        }
    }

    pub fn scale(&self, c: &Rational) -> DiffForm {
        if c.is_zero() {
            return DiffForm::zero(self.n, self.k);
        }
        DiffForm {
            n: self.n,
            k: self.k,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Largest polynomial degree present, `None` for the zero form.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(FormMonomial::deg).max()
    }

    /// Common polynomial degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(FormMonomial::deg);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Minimum linear degree over the monomials; undefined for the zero form.
    pub fn ldeg(&self) -> Result<u32> {
        match self.terms.keys().map(FormMonomial::ldeg).min() {
            Some(l) => Ok(l),
            None => domain("ldeg of the zero form is undefined"),
        }
    }

    /// True when every monomial has linear degree at least `l`; the zero form
    /// satisfies every bound.
    pub fn has_ldeg_at_least(&self, l: u32) -> bool {
        self.terms.keys().all(|m| m.ldeg() >= l)
    }

    pub fn wedge(&self, other: &DiffForm) -> Result<DiffForm> {
        if self.n != other.n {
            return domain(format!(
                "wedge of forms in {} and {} variables",
                self.n, other.n
            ));
        }
        let mut out = DiffForm::zero(self.n, self.k + other.k);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if !a.sigma.is_disjoint(&b.sigma) {
                    continue;
                }
                // sign of the shuffle merging σ and τ: pairs (s ∈ σ, t ∈ τ) with s > t
                let inversions: u32 = b.sigma.iter().map(|t| a.sigma.len() as u32 - a.sigma.count_below(t)).sum();
                let mut c = ca * cb;
                if inversions % 2 == 1 {
                    c = -c;
                }
                out.accumulate(
                    FormMonomial::new(a.alpha.add(&b.alpha), a.sigma.union(&b.sigma)),
                    c,
                );
            }
        }
        Ok(out)
    }

    /// Exterior derivative: `ν_ρ = Σ_{q∈ρ} ε(q, ρ−q) ∂_q ω_{ρ−q}`.
    pub fn exterior_derivative(&self) -> DiffForm {
        let mut out = DiffForm::zero(self.n, self.k + 1);
        for (m, c) in &self.terms {
            for q in m.sigma.complement(self.n).iter() {
                let e = m.alpha.exponent(q);
                if e == 0 {
                    continue;
                }
                let mut v = c * scalar::int(e as i64);
                if sign(q, m.sigma) < 0 {
                    v = -v;
                }
                out.accumulate(FormMonomial::new(m.alpha.bumped(q, -1), m.sigma.with(q)), v);
            }
        }
        out
    }

    /// Koszul differential: `η_ζ = Σ_{q∉ζ} ε(q, ζ) x_q ω_{ζ+q}`. The Koszul
    /// differential of a 0-form is the zero 0-form.
    pub fn koszul(&self) -> DiffForm {
        let mut out = DiffForm::zero(self.n, self.k.saturating_sub(1));
        if self.k == 0 {
            return out;
        }
        for (m, c) in &self.terms {
            for q in m.sigma.iter() {
                let zeta = m.sigma.without(q);
                let v = if sign(q, zeta) < 0 { -c.clone() } else { c.clone() };
                out.accumulate(FormMonomial::new(m.alpha.bumped(q, 1), zeta), v);
            }
        }
        out
    }

    /// `κdω` evaluated directly from the coordinate formula
    /// `μ_σ = Σ_{q∉σ} [x_q ∂_q ω_σ + Σ_{p∈σ} ε(q,p,σ) x_q ∂_p ω_{σ+q−p}]`.
    pub fn koszul_of_derivative(&self) -> DiffForm {
        let n = self.n;
        let mut out = DiffForm::zero(n, self.k);
        for (m, c) in &self.terms {
            // m = x^α dx_τ contributes to μ_σ for σ = τ (first sum) and for
            // σ = τ − q + p with q ∈ τ, p ∉ τ (second sum, relabelled).
            let tau = m.sigma;
            for q in tau.complement(n).iter() {
                let e = m.alpha.exponent(q);
                if e > 0 {
                    out.accumulate(m.clone(), c * scalar::int(e as i64));
                }
            }
            for q in tau.iter() {
                for p in tau.complement(n).iter() {
                    let e = m.alpha.exponent(p);
                    if e == 0 {
                        continue;
                    }
                    let sigma = tau.without(q).with(p);
                    let s = sign(q, sigma) * sign(p, sigma.with(q).without(p));
                    let mut v = c * scalar::int(e as i64);
                    if s < 0 {
                        v = -v;
                    }
                    out.accumulate(
                        FormMonomial::new(m.alpha.bumped(p, -1).bumped(q, 1), sigma),
                        v,
                    );
                }
            }
        }
        out
    }

    /// `(dκ + κd)ω`, checked against `(r + k)ω` for homogeneous `ω` of degree `r`.
    pub fn homotopy_apply(&self) -> Result<DiffForm> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let Some(r) = self.homogeneous_degree() else {
            return domain("homotopy formula needs a homogeneous form");
        };
        let mut out = self.exterior_derivative().koszul();
        out.axpy(&scalar::one(), &self.koszul().exterior_derivative());
        let expected = self.scale(&scalar::int((r as usize + self.k) as i64));
        if out != expected {
            return Err(crate::error::Error::Domain(format!(
                "homotopy identity violated for {self:?}"
            )));
        }
        Ok(out)
    }

    /// Pullback to the hyperplane `x_axis = value`, re-indexing the remaining
    /// axes to `1..n-1` in order.
    pub fn trace_hyperplane(&self, axis: usize, value: &Rational) -> Result<DiffForm> {
        if axis == 0 || axis > self.n {
            return domain(format!("axis {axis} out of range 1..={}", self.n));
        }
        let mut fixed = BTreeMap::new();
        fixed.insert(axis, value.clone());
        self.restrict(&fixed)
    }

    /// Pullback to the affine subspace where each listed axis is held at its
    /// value. Free axes are renumbered `1..` in increasing order.
    pub fn restrict(&self, fixed: &BTreeMap<usize, Rational>) -> Result<DiffForm> {
        let n = self.n;
        if let Some((&a, _)) = fixed.iter().find(|(&a, _)| a == 0 || a > n) {
            return domain(format!("axis {a} out of range 1..={n}"));
        }
        let mut fixed_bits = 0u32;
        for &a in fixed.keys() {
            fixed_bits |= 1 << (a - 1);
        }
        let free: Vec<usize> = (1..=n).filter(|a| !fixed.contains_key(a)).collect();
        let mut out = DiffForm::zero(free.len(), self.k);
        for (m, c) in &self.terms {
            if m.sigma.bits() & fixed_bits != 0 {
                continue;
            }
            let mut v = c.clone();
            for (&a, x) in fixed {
                let e = m.alpha.exponent(a);
                if e > 0 {
                    v *= scalar::pow(x, e);
                }
            }
            if v.is_zero() {
                continue;
            }
            let alpha = MultiIndex::new(free.iter().map(|&a| m.alpha.exponent(a)).collect());
            let mut bits = 0u32;
            for (j, &a) in free.iter().enumerate() {
                if m.sigma.contains(a) {
                    bits |= 1 << j;
                }
            }
            out.accumulate(FormMonomial::new(alpha, IndexSet::from_bits(bits)), v);
        }
        Ok(out)
    }

    /// Inverse of [`restrict`](Self::restrict) on monomials: views a form in
    /// the free variables as a form in `n` variables independent of the fixed axes.
    pub fn embed(&self, n: usize, free: &[usize]) -> Result<DiffForm> {
        if free.len() != self.n || free.iter().any(|&a| a == 0 || a > n) {
            return domain("embed: free axes do not match the form");
        }
        let mut out = DiffForm::zero(n, self.k);
        for (m, c) in &self.terms {
            let mut alpha = vec![0u32; n];
            let mut bits = 0u32;
            for (j, &a) in free.iter().enumerate() {
                alpha[a - 1] = m.alpha.exponents()[j];
                if m.sigma.contains(j + 1) {
                    bits |= 1 << (a - 1);
                }
            }
            out.accumulate(
                FormMonomial::new(MultiIndex::new(alpha), IndexSet::from_bits(bits)),
                c.clone(),
            );
        }
        Ok(out)
    }

    /// Value of a 0-form in 0 variables (a constant), or the coefficient of
    /// the constant monomial otherwise.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&FormMonomial::new(MultiIndex::zeros(self.n), IndexSet::empty()))
    }
}

impl fmt::Debug for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "({c}) {m:?}")?;
            }
        }
        Ok(())
    }
}

// Nonzero terms already determine `n` and `k`; zero forms of any degree
// compare equal.
impl PartialEq for DiffForm {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for DiffForm {}

impl std::hash::Hash for DiffForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Add for &DiffForm {
    type Output = DiffForm;
    fn add(self, rhs: &DiffForm) -> DiffForm {
        let mut out = self.clone();
        out.axpy(&scalar::one(), rhs);
        out
    }
}

impl Sub for &DiffForm {
    type Output = DiffForm;
    fn sub(self, rhs: &DiffForm) -> DiffForm {
        let mut out = self.clone();
        out.axpy(&-scalar::one(), rhs);
        out
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        self.scale(&-scalar::one())
    }
}
