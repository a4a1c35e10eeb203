use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::exterior::{index_sets, DiffForm};
use crate::scalar::{self, Rational};

/// Cartesian product of closed intervals `[a_i, b_i]` with `a_i < b_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxisBox {
    lo: Vec<Rational>,
    hi: Vec<Rational>,
}

impl AxisBox {
    pub fn new(lo: Vec<Rational>, hi: Vec<Rational>) -> Result<Self> {
        if lo.len() != hi.len() {
            return domain("box corners have different dimensions");
        }
        if let Some(i) = (0..lo.len()).find(|&i| lo[i] >= hi[i]) {
            return domain(format!("box side {} is not a positive interval", i + 1));
        }
        Ok(AxisBox { lo, hi })
    }

    /// The reference cube `[−1, 1]^n`.
    pub fn reference(n: usize) -> Self {
        AxisBox {
            lo: vec![scalar::int(-1); n],
            hi: vec![scalar::int(1); n],
        }
    }

    /// The unit cube `[0, 1]^n`.
    pub fn unit(n: usize) -> Self {
        AxisBox {
            lo: vec![scalar::zero(); n],
            hi: vec![scalar::one(); n],
        }
    }

    /// The cell `[c, c + 1]` of the integer grid with lower corner `c`.
    pub fn grid_cell(corner: &[i64]) -> Self {
        AxisBox {
            lo: corner.iter().map(|&c| scalar::int(c)).collect(),
            hi: corner.iter().map(|&c| scalar::int(c + 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[Rational] {
        &self.lo
    }

    pub fn hi(&self) -> &[Rational] {
        &self.hi
    }

    /// Endpoint of `axis` (1-based) on the given side.
    pub fn end(&self, axis: usize, side: Side) -> &Rational {
        match side {
            Side::Lo => &self.lo[axis - 1],
            Side::Hi => &self.hi[axis - 1],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Lo,
    Hi,
}

impl Side {
    pub fn sign(self) -> i8 {
        match self {
            Side::Lo => -1,
            Side::Hi => 1,
        }
    }
}

/// A face of a box: some axes held at one of their endpoints, the rest free.
/// The free axes, in increasing order, give the face coordinates and its
/// positive orientation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubeFace {
    parent: AxisBox,
    fixed: BTreeMap<usize, Side>,
}

impl CubeFace {
    pub fn new(parent: AxisBox, fixed: BTreeMap<usize, Side>) -> Result<Self> {
        if fixed.keys().any(|&a| a == 0 || a > parent.n()) {
            return domain("face fixes an axis outside the box");
        }
        Ok(CubeFace { parent, fixed })
    }

    /// The whole box as its own top-dimensional face.
    pub fn whole(parent: AxisBox) -> Self {
        CubeFace {
            parent,
            fixed: BTreeMap::new(),
        }
    }

    pub fn parent(&self) -> &AxisBox {
        &self.parent
    }

    pub fn dim(&self) -> usize {
        self.parent.n() - self.fixed.len()
    }

    pub fn fixed(&self) -> &BTreeMap<usize, Side> {
        &self.fixed
    }

    pub fn free_axes(&self) -> Vec<usize> {
        (1..=self.parent.n())
            .filter(|a| !self.fixed.contains_key(a))
            .collect()
    }

    /// Coordinate value of each fixed axis.
    pub fn fixed_values(&self) -> BTreeMap<usize, Rational> {
        self.fixed
            .iter()
            .map(|(&a, &s)| (a, self.parent.end(a, s).clone()))
            .collect()
    }

    /// The face as a box in its own free coordinates.
    pub fn as_box(&self) -> AxisBox {
        let free = self.free_axes();
        AxisBox {
            lo: free.iter().map(|&a| self.parent.lo[a - 1].clone()).collect(),
            hi: free.iter().map(|&a| self.parent.hi[a - 1].clone()).collect(),
        }
    }
}

impl fmt::Debug for CubeFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=self.parent.n())
            .map(|a| match self.fixed.get(&a) {
                None => "*".to_string(),
                Some(s) => self.parent.end(a, *s).to_string(),
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `d`-dimensional faces: fixed-axis sets in lexicographic order, then
/// endpoint patterns with `Lo < Hi` on the first fixed axis most significant.
pub fn faces(parent: &AxisBox, d: usize) -> Result<Vec<CubeFace>> {
    let n = parent.n();
    if d > n {
        return domain(format!("face dimension {d} exceeds {n}"));
    }
    let mut out = Vec::new();
    for fixed_set in index_sets(n, n - d) {
        let axes = fixed_set.to_vec();
        for pattern in 0..(1u32 << axes.len()) {
            let fixed = axes
                .iter()
                .enumerate()
                .map(|(j, &a)| {
                    let bit = pattern >> (axes.len() - 1 - j) & 1;
                    (a, if bit == 0 { Side::Lo } else { Side::Hi })
                })
                .collect();
            out.push(CubeFace {
                parent: parent.clone(),
                fixed,
            });
        }
    }
    Ok(out)
}

/// `tr_f w`: the form pulled back to the face, in the face's free coordinates.
pub fn trace_to_face(w: &DiffForm, face: &CubeFace) -> Result<DiffForm> {
    if w.n() != face.parent.n() {
        return domain("form and face live in different dimensions");
    }
    w.restrict(&face.fixed_values())
}

/// Exact integral of a top-degree form over a box of the same dimension.
pub fn integrate_top_form(w: &DiffForm, domain_box: &AxisBox) -> Result<Rational> {
    let n = domain_box.n();
    if w.n() != n {
        return domain(format!(
            "integrating a form in {} variables over a {n}-dimensional box",
            w.n()
        ));
    }
    let mut total = Rational::zero();
    for (m, c) in w.terms() {
        if m.k() != n {
            return domain(format!("{m:?} is not a top-degree form"));
        }
        let mut v = c.clone();
        for (i, &p) in m.alpha.exponents().iter().enumerate() {
            // ∫_a^b x^p dx = (b^{p+1} − a^{p+1}) / (p + 1)
            let (a, b) = (&domain_box.lo[i], &domain_box.hi[i]);
            v *= (scalar::pow(b, p + 1) - scalar::pow(a, p + 1)) / scalar::int(p as i64 + 1);
        }
        total += v;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn face_counts() {
        let cube3 = AxisBox::reference(3);
        assert_eq!(faces(&cube3, 2).unwrap().len(), 6);
        assert_eq!(faces(&cube3, 0).unwrap().len(), 8);
        assert_eq!(faces(&AxisBox::reference(4), 1).unwrap().len(), 32);
        assert!(faces(&cube3, 4).is_err());
        for n in 1..=4usize {
            for d in 0..=n {
                let expect = (1usize << (n - d))
                    * crate::spaces::binomial(n as i64, d as i64) as usize;
                assert_eq!(faces(&AxisBox::reference(n), d).unwrap().len(), expect);
            }
        }
    }

    #[test]
    fn face_order_is_deterministic() {
        let f = faces(&AxisBox::reference(2), 1).unwrap();
        let fixed: Vec<Vec<(usize, Side)>> = f
            .iter()
            .map(|x| x.fixed().iter().map(|(&a, &s)| (a, s)).collect())
            .collect();
        assert_eq!(
            fixed,
            vec![
                vec![(1, Side::Lo)],
                vec![(1, Side::Hi)],
                vec![(2, Side::Lo)],
                vec![(2, Side::Hi)]
            ]
        );
    }

    #[test]
    fn integration_examples() {
        let x = DiffForm::monomial(&[1], &[1], int(1)).unwrap();
        assert_eq!(integrate_top_form(&x, &AxisBox::reference(1)).unwrap(), int(0));
        let q = DiffForm::monomial(&[2, 2], &[1, 2], int(1)).unwrap();
        assert_eq!(integrate_top_form(&q, &AxisBox::reference(2)).unwrap(), frac(4, 9));
        let vol = DiffForm::alternator(3, &[1, 2, 3]).unwrap();
        assert_eq!(integrate_top_form(&vol, &AxisBox::reference(3)).unwrap(), int(8));
        assert_eq!(integrate_top_form(&vol, &AxisBox::unit(3)).unwrap(), int(1));
        let not_top = DiffForm::alternator(2, &[1]).unwrap();
        assert!(integrate_top_form(&not_top, &AxisBox::reference(2)).is_err());
    }

    #[test]
    fn trace_order_independence() {
        let w = &DiffForm::monomial(&[2, 1, 3], &[2], int(3)).unwrap()
            + &DiffForm::monomial(&[1, 1, 1], &[3], int(-1)).unwrap();
        let face = CubeFace::new(
            AxisBox::reference(3),
            [(1, Side::Hi), (3, Side::Lo)].into_iter().collect(),
        )
        .unwrap();
        let direct = trace_to_face(&w, &face).unwrap();
        // x1 first (then axis 3 has become axis 2), or axis 3 first
        let a = w
            .trace_hyperplane(1, &int(1))
            .unwrap()
            .trace_hyperplane(2, &int(-1))
            .unwrap();
        let b = w
            .trace_hyperplane(3, &int(-1))
            .unwrap()
            .trace_hyperplane(1, &int(1))
            .unwrap();
        assert_eq!(direct, a);
        assert_eq!(direct, b);
    }
}
