//! Explicit bases of the polynomial form spaces `P_r Λ^k`, `H_r Λ^k`,
//! `H_{r,l} Λ^k`, `J_r Λ^k` and `S_r Λ^k` over ℚ, and rank-based
//! certificates of their structural properties.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::exterior::{form_monomials, form_monomials_upto, DiffForm, FormJson, FormMonomial};
use crate::linalg::{span_dim, EchelonSpace, RationalMatrix};
use crate::scalar::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    P,
    H,
    #[serde(rename = "H_ldeg")]
    HLdeg,
    J,
    S,
    /// Elements of `S_r Λ^k` with vanishing traces on every facet.
    #[serde(rename = "S_vanishing")]
    VanishingS,
}

/// An echelonized basis of one of the polynomial form spaces.
#[derive(Clone, Debug)]
pub struct SpaceBasis {
    pub family: Family,
    pub n: usize,
    pub r: i64,
    pub k: usize,
    pub l: Option<u32>,
    space: EchelonSpace,
}

impl SpaceBasis {
    pub(crate) fn from_parts(
        family: Family,
        n: usize,
        r: i64,
        k: usize,
        l: Option<u32>,
        space: EchelonSpace,
    ) -> Self {
        SpaceBasis {
            family,
            n,
            r,
            k,
            l,
            space,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn forms(&self) -> Vec<DiffForm> {
        self.space.basis().cloned().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &DiffForm> {
        self.space.basis()
    }

    pub fn space(&self) -> &EchelonSpace {
        &self.space
    }

    pub fn contains(&self, f: &DiffForm) -> bool {
        self.space.contains(f)
    }

    pub fn to_json(&self) -> SpaceJson {
        SpaceJson {
            family: self.family,
            n: self.n,
            r: self.r,
            k: self.k,
            l: self.l,
            dim: self.dim(),
            forms: self.space.basis().map(DiffForm::to_json).collect(),
        }
    }
}

/// Serialized basis: a header followed by the forms in the term-list encoding.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SpaceJson {
    pub family: Family,
    pub n: usize,
    pub r: i64,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l: Option<u32>,
    pub dim: usize,
    pub forms: Vec<FormJson>,
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n == 0 || k > n {
        return domain(format!("need n ≥ 1 and 0 ≤ k ≤ n, got n={n}, k={k}"));
    }
    if n > crate::exterior::MAX_DIM {
        return domain(format!("dimension {n} is too large"));
    }
    Ok(())
}

fn monomial_space(n: usize, k: usize, ms: impl IntoIterator<Item = FormMonomial>) -> EchelonSpace {
    let mut s = EchelonSpace::new(n, k);
    for m in ms {
        s.insert(&DiffForm::from_monomial(m, scalar::one()));
    }
    s
}

/// `P_r Λ^k(ℝ^n)`: all monomials of degree at most `r`; zero for `r < 0`.
pub fn basis_p(n: usize, r: i64, k: usize) -> Result<SpaceBasis> {
    check_nk(n, k)?;
    let s = monomial_space(n, k, form_monomials_upto(n, k, r));
    Ok(SpaceBasis::from_parts(Family::P, n, r, k, None, s))
}

/// `H_r Λ^k(ℝ^n)`: homogeneous monomials of degree `r`.
pub fn basis_h(n: usize, r: i64, k: usize) -> Result<SpaceBasis> {
    check_nk(n, k)?;
    let ms = if r < 0 { Vec::new() } else { form_monomials(n, k, r as u32) };
    Ok(SpaceBasis::from_parts(Family::H, n, r, k, None, monomial_space(n, k, ms)))
}

fn h_ldeg_monomials(n: usize, r: i64, l: u32, k: usize) -> Vec<FormMonomial> {
    if r < 0 {
        return Vec::new();
    }
    form_monomials(n, k, r as u32)
        .into_iter()
        .filter(|m| m.ldeg() >= l)
        .collect()
}

/// `H_{r,l} Λ^k(ℝ^n)`: homogeneous degree `r` monomials of linear degree at least `l`.
pub fn basis_h_ldeg(n: usize, r: i64, l: u32, k: usize) -> Result<SpaceBasis> {
    check_nk(n, k)?;
    let s = monomial_space(n, k, h_ldeg_monomials(n, r, l, k));
    Ok(SpaceBasis::from_parts(Family::HLdeg, n, r, k, Some(l), s))
}

/// Monomials `m` (as `k`-forms) with `deg m ≥ r` and `deg m − ldeg m ≤ r − 1`;
/// they span `Σ_{l≥1} H_{r+l−1,l} Λ^k`.
pub fn j_generator_monomials(n: usize, r: i64, k: usize) -> Vec<FormMonomial> {
    if k > n || r < 1 {
        return Vec::new();
    }
    // ldeg ≤ n − k caps the degree at r − 1 + n − k
    let max = r - 1 + (n - k) as i64;
    (r..=max)
        .flat_map(|s| form_monomials(n, k, s as u32))
        .filter(|m| (m.superlinear_degree() as i64) < r)
        .collect()
}

fn j_space(n: usize, r: i64, k: usize) -> EchelonSpace {
    let mut s = EchelonSpace::new(n, k);
    for m in j_generator_monomials(n, r, k + 1) {
        s.insert(&DiffForm::from_monomial(m, scalar::one()).koszul());
    }
    s
}

/// `J_r Λ^k(ℝ^n) = Σ_{l≥1} κ H_{r+l−1,l} Λ^{k+1}`, spanned by `κm` over the
/// generator monomials.
pub fn span_j(n: usize, r: i64, k: usize) -> Result<SpaceBasis> {
    check_nk(n, k)?;
    if r < 1 {
        return domain(format!("J_r needs r ≥ 1, got {r}"));
    }
    Ok(SpaceBasis::from_parts(Family::J, n, r, k, None, j_space(n, r, k)))
}

/// The three summands `P_r Λ^k`, `J_r Λ^k`, `d J_{r+1} Λ^{k−1}` of `S_r Λ^k`
/// and the space `J_{r+1} Λ^{k−1}` itself.
#[derive(Clone, Debug)]
pub struct SComponents {
    pub p: EchelonSpace,
    pub j: EchelonSpace,
    pub j_lower: EchelonSpace,
    pub dj: EchelonSpace,
}

fn check_s_params(n: usize, r: i64, k: usize) -> Result<()> {
    check_nk(n, k)?;
    if r < 1 && !(r == 0 && k == n) {
        return domain(format!("S_r Λ^k needs r ≥ 1 (or r = 0 with k = n), got r={r}, k={k}"));
    }
    Ok(())
}

pub fn s_components(n: usize, r: i64, k: usize) -> Result<SComponents> {
    check_s_params(n, r, k)?;
    let p = monomial_space(n, k, form_monomials_upto(n, k, r));
    let j = if r >= 1 { j_space(n, r, k) } else { EchelonSpace::new(n, k) };
    let (j_lower, dj) = if k >= 1 {
        let jl = j_space(n, r + 1, k - 1);
        let mut dj = EchelonSpace::new(n, k);
        for f in jl.basis() {
            dj.insert(&f.exterior_derivative());
        }
        (jl, dj)
    } else {
        (EchelonSpace::new(n, 0), EchelonSpace::new(n, k))
    };
    Ok(SComponents { p, j, j_lower, dj })
}

/// `S_r Λ^k(ℝ^n) = P_r Λ^k + J_r Λ^k + d J_{r+1} Λ^{k−1}`.
pub fn basis_s(n: usize, r: i64, k: usize) -> Result<SpaceBasis> {
    let c = s_components(n, r, k)?;
    let mut s = c.p;
    for f in c.j.basis().chain(c.dj.basis()) {
        s.insert(f);
    }
    Ok(SpaceBasis::from_parts(Family::S, n, r, k, None, s))
}

type SCache = Mutex<HashMap<(usize, i64, usize), Arc<SpaceBasis>>>;

/// Memoized [`basis_s`]; bases are immutable once built.
pub fn cached_basis_s(n: usize, r: i64, k: usize) -> Result<Arc<SpaceBasis>> {
    static CACHE: OnceLock<SCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().unwrap().get(&(n, r, k)) {
        return Ok(b.clone());
    }
    let b = Arc::new(basis_s(n, r, k)?);
    cache.lock().unwrap().insert((n, r, k), b.clone());
    Ok(b)
}

/// Binomial coefficient, zero outside `0 ≤ b ≤ a`.
pub fn binomial(a: i64, b: i64) -> u128 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    (0..b).fold(1u128, |acc, i| acc * (a - i) / (i + 1))
}

/// Closed-form DOF count:
/// `Σ_{d=k}^{min(n,⌊r/2⌋+k)} 2^{n−d} C(n,d) C(r−d+2k,d) C(d,k)`.
pub fn dim_s_formula(n: usize, r: i64, k: usize) -> Result<u128> {
    check_s_params(n, r, k)?;
    let (n, k) = (n as i64, k as i64);
    let top = n.min(r / 2 + k);
    Ok((k..=top)
        .map(|d| (1u128 << (n - d)) * binomial(n, d) * binomial(r - d + 2 * k, d) * binomial(d, k))
        .sum())
}

/// `#A(r,k,n)`: monomials in `n` variables with `deg − l ≤ r`, `l` the number
/// of the first `n − k` variables entering linearly.
pub fn count_a(n: usize, r: i64, k: usize) -> Result<u128> {
    check_s_params(n, r, k)?;
    let (n, k) = (n as i64, k as i64);
    let top = (n - k).min(r / 2);
    Ok((0..=top)
        .map(|d| (1u128 << (n - k - d)) * binomial(n - k, d) * binomial(r - d + k, d + k))
        .sum())
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KoszulExactnessReport {
    pub n: usize,
    pub r: i64,
    pub l: u32,
    pub k: usize,
    /// `dim κ(H_{r−1,l} Λ^{k+1})`
    pub dim_image_in: usize,
    /// `dim κ(H_{r,l} Λ^k)`
    pub dim_image_out: usize,
    /// `dim H_{r,l} Λ^k`
    pub dim_space: usize,
    /// `dim (ker κ ∩ H_{r,l} Λ^k)`
    pub dim_kernel: usize,
    /// Whether the incoming image lands in `H_{r,l} Λ^k` and equals the kernel.
    pub kernel_equals_image: bool,
}

impl KoszulExactnessReport {
    pub fn pass(&self) -> bool {
        self.dim_image_in + self.dim_image_out == self.dim_space && self.kernel_equals_image
    }
}

/// Certifies exactness of `H_{r−1,l}Λ^{k+1} → H_{r,l}Λ^k → H_{r+1,l}Λ^{k−1}`
/// under the Koszul differential by exact ranks.
pub fn verify_koszul_exactness(n: usize, r: i64, l: u32, k: usize) -> Result<KoszulExactnessReport> {
    check_nk(n, k)?;
    if r < 1 || (l as i64) >= r || k >= n {
        return domain(format!(
            "Koszul exactness needs r ≥ 1, 0 ≤ l < r, 0 ≤ k < n; got r={r}, l={l}, k={k}, n={n}"
        ));
    }
    let incoming: Vec<DiffForm> = h_ldeg_monomials(n, r - 1, l, k + 1)
        .into_iter()
        .map(|m| DiffForm::from_monomial(m, scalar::one()).koszul())
        .collect();
    let image_in = EchelonSpace::from_forms(n, k, &incoming);
    let domain_monos = h_ldeg_monomials(n, r, l, k);
    let outgoing: Vec<DiffForm> = domain_monos
        .iter()
        .map(|m| DiffForm::from_monomial(m.clone(), scalar::one()).koszul())
        .collect();
    let dim_image_out = span_dim(&outgoing);

    // kernel of κ restricted to H_{r,l}Λ^k, from the null space of its matrix
    let kernel_forms: Vec<DiffForm> = if k == 0 {
        domain_monos
            .iter()
            .map(|m| DiffForm::from_monomial(m.clone(), scalar::one()))
            .collect()
    } else {
        let mat = RationalMatrix::from_form_columns(&outgoing);
        let mat = if mat.rows() == 0 {
            RationalMatrix::zeros(0, outgoing.len())
        } else {
            mat
        };
        mat.nullspace()
            .into_iter()
            .map(|v| combine(n, k, &domain_monos, &v))
            .collect()
    };
    let kernel = EchelonSpace::from_forms(n, k, &kernel_forms);
    let lands = image_in.basis().all(|f| f.has_ldeg_at_least(l) && f.koszul().is_zero());
    Ok(KoszulExactnessReport {
        n,
        r,
        l,
        k,
        dim_image_in: image_in.dim(),
        dim_image_out,
        dim_space: domain_monos.len(),
        dim_kernel: kernel.dim(),
        kernel_equals_image: lands && kernel.same_span(&image_in),
    })
}

fn combine(n: usize, k: usize, monos: &[FormMonomial], coeffs: &[Rational]) -> DiffForm {
    DiffForm::from_terms(n, k, monos.iter().cloned().zip(coeffs.iter().cloned()))
        .expect("monomials share (n, k)")
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeReport {
    pub n: usize,
    pub r: i64,
    pub k: usize,
    pub degree_bound: i64,
    pub superlinear_bound: i64,
    pub max_degree: i64,
    pub max_superlinear: i64,
    pub violations: usize,
}

impl DegreeReport {
    pub fn pass(&self) -> bool {
        self.violations == 0
    }
}

/// Checks every monomial of the `S_r Λ^k` basis against
/// `deg m ≤ r+n−k−δ_{k0}` and `deg m − ldeg m ≤ r+1−δ_{k0}`.
pub fn verify_degree_property(n: usize, r: i64, k: usize) -> Result<DegreeReport> {
    let basis = cached_basis_s(n, r, k)?;
    let delta = i64::from(k == 0);
    let degree_bound = r + (n - k) as i64 - delta;
    let superlinear_bound = r + 1 - delta;
    let mut rep = DegreeReport {
        n,
        r,
        k,
        degree_bound,
        superlinear_bound,
        max_degree: -1,
        max_superlinear: -1,
        violations: 0,
    };
    for f in basis.iter() {
        for (m, _) in f.terms() {
            let (d, s) = (m.deg() as i64, m.superlinear_degree() as i64);
            rep.max_degree = rep.max_degree.max(d);
            rep.max_superlinear = rep.max_superlinear.max(s);
            if d > degree_bound || s > superlinear_bound {
                rep.violations += 1;
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DecompositionReport {
    pub n: usize,
    pub r: i64,
    pub k: usize,
    pub dim_p: usize,
    pub dim_j: usize,
    pub dim_j_lower: usize,
    pub dim_dj: usize,
    pub dim_s: usize,
    pub formula: u128,
}

impl DecompositionReport {
    /// Direct sum, `d` injective on `J_{r+1}Λ^{k−1}`, and the count formula.
    pub fn pass(&self) -> bool {
        self.dim_p + self.dim_j + self.dim_dj == self.dim_s
            && self.dim_dj == self.dim_j_lower
            && self.dim_s as u128 == self.formula
    }
}

pub fn verify_decomposition(n: usize, r: i64, k: usize) -> Result<DecompositionReport> {
    let c = s_components(n, r, k)?;
    let s = cached_basis_s(n, r, k)?;
    Ok(DecompositionReport {
        n,
        r,
        k,
        dim_p: c.p.dim(),
        dim_j: c.j.dim(),
        dim_j_lower: c.j_lower.dim(),
        dim_dj: c.dj.dim(),
        dim_s: s.dim(),
        formula: dim_s_formula(n, r, k)?,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ContainmentReport {
    pub description: String,
    pub dim_small: usize,
    pub dim_big: usize,
    pub contained: bool,
}

impl ContainmentReport {
    pub fn pass(&self) -> bool {
        self.contained
    }
}

/// `d S_{r+1} Λ^{k−1} ⊂ S_r Λ^k` for `0 < k ≤ n`.
pub fn verify_subcomplex(n: usize, r: i64, k: usize) -> Result<ContainmentReport> {
    if k == 0 {
        return domain("subcomplex property needs k ≥ 1");
    }
    let big = cached_basis_s(n, r, k)?;
    let src = cached_basis_s(n, r + 1, k - 1)?;
    let image = EchelonSpace::from_forms(n, k, &src.iter().map(DiffForm::exterior_derivative).collect::<Vec<_>>());
    Ok(ContainmentReport {
        description: format!("d S_{}Λ^{}(ℝ^{n}) ⊂ S_{r}Λ^{k}(ℝ^{n})", r + 1, k - 1),
        dim_small: image.dim(),
        dim_big: big.dim(),
        contained: big.space().contains_space(&image),
    })
}

/// `S_r Λ^k ⊂ S_{r+1} Λ^k`.
pub fn verify_inclusion(n: usize, r: i64, k: usize) -> Result<ContainmentReport> {
    let small = cached_basis_s(n, r, k)?;
    let big = cached_basis_s(n, r + 1, k)?;
    Ok(ContainmentReport {
        description: format!("S_{r}Λ^{k}(ℝ^{n}) ⊂ S_{}Λ^{k}(ℝ^{n})", r + 1),
        dim_small: small.dim(),
        dim_big: big.dim(),
        contained: big.space().contains_space(small.space()),
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TraceCase {
    pub axis: usize,
    pub value: String,
    pub dim_trace: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TraceReport {
    pub n: usize,
    pub r: i64,
    pub k: usize,
    pub dim_source: usize,
    pub dim_target: usize,
    pub cases: Vec<TraceCase>,
}

impl TraceReport {
    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.equal)
    }
}

/// `tr_f S_r Λ^k(ℝ^n) = S_r Λ^k(f)` on every hyperplane `x_i = c`,
/// `c ∈ {−1, 0, 1}`, as an equality of spans.
pub fn verify_trace(n: usize, r: i64, k: usize) -> Result<TraceReport> {
    if n < 2 {
        return domain("trace property needs n ≥ 2");
    }
    let src = cached_basis_s(n, r, k)?;
    let target = if k < n {
        Some(cached_basis_s(n - 1, r, k)?)
    } else {
        None
    };
    let mut cases = Vec::new();
    for axis in 1..=n {
        for c in [-1i64, 0, 1] {
            let value = scalar::int(c);
            let mut tr = EchelonSpace::new(n - 1, k);
            for f in src.iter() {
                tr.insert(&f.trace_hyperplane(axis, &value)?);
            }
            let equal = match &target {
                Some(t) => tr.same_span(t.space()),
                None => tr.dim() == 0,
            };
            cases.push(TraceCase {
                axis,
                value: c.to_string(),
                dim_trace: tr.dim(),
                equal,
            });
        }
    }
    Ok(TraceReport {
        n,
        r,
        k,
        dim_source: src.dim(),
        dim_target: target.map_or(0, |t| t.dim()),
        cases,
    })
}
