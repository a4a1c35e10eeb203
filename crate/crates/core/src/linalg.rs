//! Exact linear algebra over the rationals: a dense matrix with Gaussian
//! elimination and a sparse reduced-row-echelon span of forms.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{DiffForm, FormMonomial};
use crate::scalar::{self, Rational};

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose `j`-th column is the coefficient vector of `columns[j]`
    /// over the union of their monomials (in canonical order).
    pub fn from_form_columns(columns: &[DiffForm]) -> Self {
        let mut index: BTreeMap<FormMonomial, usize> = BTreeMap::new();
        for f in columns {
            for (m, _) in f.terms() {
                index.entry(m.clone()).or_insert(0);
            }
        }
        for (i, v) in index.values_mut().enumerate() {
            *v = i;
        }
        let mut out = RationalMatrix::zeros(index.len(), columns.len());
        for (j, f) in columns.iter().enumerate() {
            for (m, c) in f.terms() {
                out[(index[m], j)] = c.clone();
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Side-by-side concatenation `[self | other]`.
    pub fn hconcat(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = RationalMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form in place; returns pivot columns. Pivots are
    /// the first nonzero entry scanning rows top-down, scaled to one.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            let pivot_row: Vec<Rational> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let v = &self[(i, c + off)] - &f * pv;
                        self[(i, c + off)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.clone().rref_in_place().len()
        } else {
            self.transpose().rref_in_place().len()
        }
    }

    /// Basis of the right null space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(i);
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -r[(i, free)].clone();
            }
            out.push(v);
        }
        out
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self) -> Result<RationalMatrix> {
        if !self.is_square() {
            return Err(Error::Domain("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = self.hconcat(&RationalMatrix::identity(n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} matrix has rank below {n}")));
        }
        let mut inv = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Solves `self · x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        if !self.is_square() || b.len() != self.rows {
            return Err(Error::Domain("solve needs a square system".into()));
        }
        let n = self.rows;
        let rhs = RationalMatrix {
            rows: n,
            cols: 1,
            data: b.to_vec(),
        };
        let mut aug = self.hconcat(&rhs);
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} system is singular")));
        }
        Ok((0..n).map(|i| aug[(i, n)].clone()).collect())
    }

    /// Exact-rational CSV, one row per line, entries as `num/den`.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(scalar::to_slash).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    /// Nonzero entries as `row,col,num/den` lines.
    pub fn to_triplets(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = &self[(i, j)];
                if !v.is_zero() {
                    let _ = writeln!(s, "{i},{j},{}", scalar::to_slash(v));
                }
            }
        }
        s
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// A subspace of `k`-forms held in reduced row echelon form with respect to
/// the canonical monomial order. Each row has a unit coefficient at its pivot
/// (its smallest monomial) and zero at every other row's pivot, so the basis
/// depends only on the span, not on insertion order.
#[derive(Clone, Debug)]
pub struct EchelonSpace {
    n: usize,
    k: usize,
    rows: BTreeMap<FormMonomial, DiffForm>,
}

impl EchelonSpace {
    pub fn new(n: usize, k: usize) -> Self {
        EchelonSpace {
            n,
            k,
            rows: BTreeMap::new(),
        }
    }

    pub fn from_forms<'a>(n: usize, k: usize, forms: impl IntoIterator<Item = &'a DiffForm>) -> Self {
        let mut s = EchelonSpace::new(n, k);
        for f in forms {
            s.insert(f);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &DiffForm> {
        self.rows.values()
    }

    pub fn into_basis(self) -> Vec<DiffForm> {
        self.rows.into_values().collect()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &FormMonomial> {
        self.rows.keys()
    }

    /// `f` minus its projection along the pivot columns.
    pub fn reduce(&self, f: &DiffForm) -> DiffForm {
        let mut out = f.clone();
        for (m, c) in f.terms() {
            if let Some(row) = self.rows.get(m) {
                out.axpy(&-c.clone(), row);
            }
        }
        out
    }

    pub fn contains(&self, f: &DiffForm) -> bool {
        self.reduce(f).is_zero()
    }

    /// Adds `f` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, f: &DiffForm) -> bool {
        let r = self.reduce(f);
        let Some((pivot, lead)) = r.leading() else {
            return false;
        };
        let pivot = pivot.clone();
        let row = r.scale(&lead.recip());
        for other in self.rows.values_mut() {
            let c = other.coeff(&pivot);
            if !c.is_zero() {
                other.axpy(&-c, &row);
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    /// Coordinates of `f` in the echelon basis, or `None` if `f` is not in the span.
    pub fn coordinates(&self, f: &DiffForm) -> Option<Vec<Rational>> {
        if !self.contains(f) {
            return None;
        }
        Some(self.rows.keys().map(|p| f.coeff(p)).collect())
    }

    pub fn contains_space(&self, other: &EchelonSpace) -> bool {
        other.basis().all(|f| self.contains(f))
    }

    /// Span equality; RREF is canonical so this is structural comparison.
    pub fn same_span(&self, other: &EchelonSpace) -> bool {
        self.rows == other.rows
    }
}

/// Rank of a list of forms.
pub fn span_dim<'a>(forms: impl IntoIterator<Item = &'a DiffForm>) -> usize {
    let mut s: Option<EchelonSpace> = None;
    let mut dim = 0;
    for f in forms {
        let space = s.get_or_insert_with(|| EchelonSpace::new(f.n(), f.k()));
        if space.insert(f) {
            dim += 1;
        }
    }
    dim
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn mat(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(Zero::is_zero));
        assert_eq!(mat(&[&[1], &[2], &[3]]).rank(), 1);
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn inverse_and_solve() {
        let m = mat(&[&[1, -1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(2));
        assert_eq!(inv[(0, 0)], frac(1, 2));
        assert_eq!(m.solve(&[int(1), int(1)]).unwrap(), vec![int(1), int(0)]);
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn csv_and_triplets() {
        let m = RationalMatrix::from_rows(vec![vec![frac(1, 2), int(0)], vec![int(-3), int(1)]]);
        assert_eq!(m.to_csv(), "1/2,0/1\n-3/1,1/1\n");
        assert_eq!(m.to_triplets(), "0,0,1/2\n1,0,-3/1\n1,1,1/1\n");
    }

    #[test]
    fn echelon_is_order_independent() {
        let a = DiffForm::monomial(&[1, 0], &[], int(1)).unwrap();
        let b = DiffForm::monomial(&[0, 1], &[], int(2)).unwrap();
        let c = &a + &b;
        let s1 = EchelonSpace::from_forms(2, 0, [&a, &c]);
        let s2 = EchelonSpace::from_forms(2, 0, [&c, &b, &a]);
        assert_eq!(s1.dim(), 2);
        assert!(s1.same_span(&s2));
        let coords = s1.coordinates(&c).unwrap();
        assert_eq!(coords.len(), 2);
        let x2 = DiffForm::monomial(&[2, 0], &[], int(1)).unwrap();
        assert!(s1.coordinates(&x2).is_none());
    }
}
