use serde::Serialize;
use thiserror::Error;

use crate::arrgeo::Lattice;
use crate::exact::{rank, Cyclo, MatrixF};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OsError {
    #[error("coordinates of a class in H^1(M) must sum to zero")]
    SigmaNonZero,
    #[error("expected {expected} coordinates, got {found}")]
    LengthMismatch { expected: usize, found: usize },
}

/// Class in H¹(M) ⊂ A¹: coordinates in the meridian basis e₁…e_d with
/// Σ aᵢ = 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct H1Vector(Vec<Cyclo>);

impl H1Vector {
    pub fn new(a: Vec<Cyclo>) -> Result<Self, OsError> {
        let sum = a.iter().fold(Cyclo::zero(1), |s, x| &s + x);
        if !sum.is_zero() {
            return Err(OsError::SigmaNonZero);
        }
        Ok(H1Vector(a))
    }

    pub fn zero(d: usize) -> Self {
        H1Vector(vec![Cyclo::zero(1); d])
    }

    /// e_j − e_i.
    pub fn difference(d: usize, j: usize, i: usize) -> Self {
        let mut a = vec![Cyclo::zero(1); d];
        a[j] = &a[j] + &Cyclo::one(1);
        a[i] = &a[i] - &Cyclo::one(1);
        H1Vector(a)
    }

    pub fn coords(&self) -> &[Cyclo] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Cyclo::is_zero)
    }

    pub fn scale(&self, c: &Cyclo) -> H1Vector {
        H1Vector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &H1Vector) -> H1Vector {
        H1Vector(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    pub fn order(&self) -> u32 {
        Cyclo::common_order(&self.0)
    }
}

/// Degree ≤ 2 part of the Orlik–Solomon algebra of the central arrangement.
///
/// A² has basis e_{a(X)}·e_i over points X and lines i ∈ X other than the
/// anchor a(X), the least line through X. For i < j meeting at X,
/// e_i·e_j = e_a·e_j − e_a·e_i.
#[derive(Clone, Debug)]
pub struct Os2 {
    d: usize,
    // (point, line) for each basis element of A²
    basis: Vec<(usize, usize)>,
    // pair_index[i * d + j]: basis position of e_{a}·e_j where i is the anchor
    // of the point through i and j; only filled when i is that anchor.
    pair_basis: Vec<Option<usize>>,
    anchor_of_pair: Vec<usize>,
}

impl Os2 {
    pub fn new(lattice: &Lattice) -> Self {
        let d = lattice.d();
        let mut basis = Vec::new();
        let mut pair_basis = vec![None; d * d];
        let mut anchor_of_pair = vec![usize::MAX; d * d];
        for (x, p) in lattice.points().iter().enumerate() {
            let a = p.anchor();
            for &i in &p.incident[1..] {
                pair_basis[a * d + i] = Some(basis.len());
                basis.push((x, i));
            }
            for &i in &p.incident {
                for &j in &p.incident {
                    anchor_of_pair[i * d + j] = a;
                }
            }
        }
        Os2 {
            d,
            basis,
            pair_basis,
            anchor_of_pair,
        }
    }

    pub fn dim_a1(&self) -> usize {
        self.d
    }

    pub fn dim_a2(&self) -> usize {
        self.basis.len()
    }

    /// (point, line) labels of the A² basis.
    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    /// e_i·e_j as a sparse combination of A² basis elements.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        if i == j {
            return Vec::new();
        }
        let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let a = self.anchor_of_pair[lo * self.d + hi];
        let basis_of = |l: usize| self.pair_basis[a * self.d + l].expect("anchored pair");
        if lo == a {
            vec![(basis_of(hi), sign)]
        } else {
            vec![(basis_of(hi), sign), (basis_of(lo), -sign)]
        }
    }

    /// u ∪ v in A² coordinates.
    pub fn cup(&self, u: &[Cyclo], v: &[Cyclo]) -> Vec<Cyclo> {
        let order = Cyclo::common_order(u.iter().chain(v));
        let mut out = vec![Cyclo::zero(order); self.basis.len()];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui * vj;
                for (b, s) in self.product(i, j) {
                    out[b] = if s > 0 { &out[b] + &c } else { &out[b] - &c };
                }
            }
        }
        out
    }

    /// Matrix of μ_α: A¹ → A², x ↦ x·α; column i is e_i·α.
    pub fn mu_matrix(&self, alpha: &[Cyclo]) -> MatrixF {
        let order = Cyclo::common_order(alpha);
        let mut m = MatrixF::zeros(order, self.basis.len(), self.d);
        for i in 0..self.d {
            for (j, aj) in alpha.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                for (b, s) in self.product(i, j) {
                    let cur = m.get(b, i).clone();
                    let next = if s > 0 { &cur + aj } else { &cur - aj };
                    m.set(b, i, next);
                }
            }
        }
        m
    }

    /// dim H¹(A•(M), ·α).
    ///
    /// Computed in the central algebra: dim ker μ_α on A¹ minus the line
    /// spanned by α itself, which is the image of A⁰.
    pub fn aomoto_h1(&self, alpha: &H1Vector) -> Result<usize, OsError> {
        if alpha.d() != self.d {
            return Err(OsError::LengthMismatch {
                expected: self.d,
                found: alpha.d(),
            });
        }
        if alpha.is_zero() {
            return Ok(self.d - 1);
        }
        let r = rank(&self.mu_matrix(alpha.coords()));
        Ok(self.d - r - 1)
    }

    pub fn in_resonance(&self, alpha: &H1Vector, m: usize) -> Result<bool, OsError> {
        Ok(self.aomoto_h1(alpha)? >= m)
    }
}

pub fn os2_structure(lattice: &Lattice) -> Os2 {
    Os2::new(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrgeo::{builtin, intersection_lattice};

    fn q(v: &[i64]) -> Vec<Cyclo> {
        v.iter().map(|&x| Cyclo::from_int(1, x)).collect()
    }

    #[test]
    fn a2_dimensions() {
        for (name, dim) in [("A3", 11), ("Hesse", 39), ("B3", 4 * 2 + 3 * 3 + 6)] {
            let os = Os2::new(&intersection_lattice(&builtin(name).unwrap()));
            assert_eq!(os.dim_a2(), dim, "{name}");
        }
    }

    #[test]
    fn antisymmetric_products() {
        let os = Os2::new(&intersection_lattice(&builtin("A3").unwrap()));
        for i in 0..6 {
            assert!(os.product(i, i).is_empty());
            for j in 0..6 {
                let neg: Vec<(usize, i64)> =
                    os.product(j, i).into_iter().map(|(b, s)| (b, -s)).collect();
                let mut a = os.product(i, j);
                let mut n = neg;
                a.sort();
                n.sort();
                assert_eq!(a, n);
            }
        }
    }

    #[test]
    fn braid_aomoto() {
        let os = Os2::new(&intersection_lattice(&builtin("A3").unwrap()));
        assert_eq!(os.aomoto_h1(&H1Vector::zero(6)).unwrap(), 5);
        // Triple point {x, y, x−y} = lines 0, 1, 3.
        let w = |k| Cyclo::root_of_unity(3, k);
        let z = Cyclo::zero(3);
        let a = H1Vector::new(vec![w(0), w(1), z.clone(), w(2), z.clone(), z]).unwrap();
        assert_eq!(os.aomoto_h1(&a).unwrap(), 1);
        let generic = H1Vector::new(q(&[1, 2, -4, 3, 5, -7])).unwrap();
        assert_eq!(os.aomoto_h1(&generic).unwrap(), 0);
    }

    #[test]
    fn sigma_must_vanish() {
        assert_eq!(H1Vector::new(q(&[1, 1])), Err(OsError::SigmaNonZero));
    }
}
