//! Multi-indices, alternator index sets and the sign functions built on them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain, Result};

/// Exponent vector of a monomial `x^α` in `n` variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Exponent of `x_axis`, 1-based.
    pub fn exponent(&self, axis: usize) -> u32 {
        self.0[axis - 1]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub(crate) fn bumped(&self, axis: usize, delta: i32) -> MultiIndex {
        let mut e = self.0.clone();
        e[axis - 1] = (e[axis - 1] as i32 + delta) as u32;
        MultiIndex(e)
    }

    pub(crate) fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All multi-indices of total degree `deg` in `n` variables, in ascending
/// lexicographic order.
pub fn multi_indices(n: usize, deg: u32) -> Vec<MultiIndex> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(MultiIndex(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if deg == 0 {
            out.push(MultiIndex(Vec::new()));
        }
        return out;
    }
    rec(n, deg, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A strictly increasing set of axes drawn from `1..=n`, stored as a bit mask
/// (bit `i - 1` for axis `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u32);

pub const MAX_DIM: usize = 31;

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet(0)
    }

    /// Builds a set from a strictly increasing list of axes in `1..=n`.
    pub fn new(indices: &[usize], n: usize) -> Result<Self> {
        if n > MAX_DIM {
            return domain(format!("dimension {n} exceeds {MAX_DIM}"));
        }
        let mut bits = 0u32;
        let mut last = 0usize;
        for &i in indices {
            if i <= last || i > n {
                return domain(format!(
                    "index set {indices:?} is not strictly increasing within 1..={n}"
                ));
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Ok(IndexSet(bits))
    }

    pub(crate) fn from_bits(bits: u32) -> Self {
        IndexSet(bits)
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, axis: usize) -> bool {
        (1..=32).contains(&axis) && self.0 & (1 << (axis - 1)) != 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (1..=32usize).filter(move |i| bits & (1u32 << (i - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn with(&self, axis: usize) -> IndexSet {
        IndexSet(self.0 | 1 << (axis - 1))
    }

    pub fn without(&self, axis: usize) -> IndexSet {
        IndexSet(self.0 & !(1 << (axis - 1)))
    }

    pub fn complement(&self, n: usize) -> IndexSet {
        let full = if n >= 32 { u32::MAX } else { (1u32 << n) - 1 };
        IndexSet(!self.0 & full)
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    /// Number of members strictly smaller than `axis`.
    pub(crate) fn count_below(&self, axis: usize) -> u32 {
        (self.0 & ((1u32 << (axis - 1)) - 1)).count_ones()
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

/// All `k`-element subsets of `1..=n` in lexicographic order.
pub fn index_sets(n: usize, k: usize) -> Vec<IndexSet> {
    fn rec(start: usize, n: usize, k: usize, bits: u32, out: &mut Vec<IndexSet>) {
        if k == 0 {
            out.push(IndexSet(bits));
            return;
        }
        for i in start..=n {
            if n - i + 1 < k {
                break;
            }
            rec(i + 1, n, k - 1, bits | 1 << (i - 1), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, 0, &mut out);
    }
    out
}

/// `(-1)^l` with `l` the number of members of `sigma` smaller than `q`.
/// Unchecked variant used in the hot loops.
pub(crate) fn sign(q: usize, sigma: IndexSet) -> i32 {
    if sigma.count_below(q).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `ε(q, σ)`: the sign `(-1)^l`, `l = #{p ∈ σ : p < q}`; requires `q ∉ σ`.
pub fn eps(q: usize, sigma: IndexSet) -> Result<i32> {
    if q == 0 || q > MAX_DIM {
        return domain(format!("axis {q} out of range"));
    }
    if sigma.contains(q) {
        return domain(format!("eps: {q} belongs to {sigma:?}"));
    }
    Ok(sign(q, sigma))
}

/// `ε(q, p, σ) = ε(q, σ)·ε(p, σ + q − p)` for `q ∉ σ`, `p ∈ σ`.
pub fn eps2(q: usize, p: usize, sigma: IndexSet) -> Result<i32> {
    if q == 0 || p == 0 || q > MAX_DIM || p > MAX_DIM {
        return domain("eps2: axis out of range");
    }
    if sigma.contains(q) || !sigma.contains(p) {
        return domain(format!("eps2: need {q} ∉ {sigma:?} and {p} ∈ {sigma:?}"));
    }
    Ok(sign(q, sigma) * sign(p, sigma.with(q).without(p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v, 5).unwrap()
    }

    #[test]
    fn eps_examples() {
        assert_eq!(eps(1, set(&[2, 3])).unwrap(), 1);
        assert_eq!(eps(2, set(&[1, 3])).unwrap(), -1);
        assert_eq!(eps(4, set(&[1, 2, 3])).unwrap(), -1);
        assert!(eps(2, set(&[2, 3])).is_err());
    }

    #[test]
    fn eps2_examples() {
        assert_eq!(eps2(2, 1, set(&[1, 3])).unwrap(), -1);
        assert_eq!(eps2(1, 3, set(&[2, 3])).unwrap(), 1);
        assert!(eps2(1, 2, set(&[1, 2])).is_err());
        assert!(eps2(4, 2, set(&[1, 3])).is_err());
    }

    #[test]
    fn eps2_identity_exhaustive() {
        // ε(q,p,σ) = −ε(p,σ−p)·ε(q,σ−p) for every admissible triple, n ≤ 5.
        for n in 1..=5 {
            for k in 0..=n {
                for sigma in index_sets(n, k) {
                    for p in sigma.iter() {
                        for q in sigma.complement(n).iter() {
                            let rest = sigma.without(p);
                            let rhs = -eps(p, rest).unwrap() * eps(q, rest).unwrap();
                            assert_eq!(eps2(q, p, sigma).unwrap(), rhs, "{q} {p} {sigma:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn index_set_validation() {
        assert!(IndexSet::new(&[2, 1], 3).is_err());
        assert!(IndexSet::new(&[1, 4], 3).is_err());
        assert!(IndexSet::new(&[1, 1], 3).is_err());
        assert_eq!(set(&[1, 3]).complement(4).to_vec(), vec![2, 4]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(multi_indices(3, 2).len(), 6);
        assert_eq!(multi_indices(0, 0).len(), 1);
        assert!(multi_indices(0, 1).is_empty());
        assert_eq!(index_sets(4, 2).len(), 6);
        assert_eq!(index_sets(3, 0), vec![IndexSet::empty()]);
        let sets = index_sets(4, 2);
        assert!(sets.windows(2).all(|w| w[0] < w[1]));
    }
}
