use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cyclo::{Cyclo, Rational};

/// Dense row-major matrix over a single cyclotomic field Q(ζ_N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixF {
    order: u32,
    nrows: usize,
    ncols: usize,
    data: Vec<Cyclo>,
}

impl MatrixF {
    pub fn zeros(order: u32, nrows: usize, ncols: usize) -> Self {
        MatrixF {
            order,
            nrows,
            ncols,
            data: vec![Cyclo::zero(order); nrows * ncols],
        }
    }

    pub fn identity(order: u32, n: usize) -> Self {
        let mut m = Self::zeros(order, n, n);
        for i in 0..n {
            m.data[i * n + i] = Cyclo::one(order);
        }
        m
    }

    /// Builds a matrix from rows, embedding every entry into the lcm of the
    /// entry orders and `min_order`.
    pub fn from_rows(min_order: u32, rows: Vec<Vec<Cyclo>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix"
        );
        let order = rows
            .iter()
            .flatten()
            .fold(min_order, |acc, c| super::cyclo::lcm_order(acc, c.order()));
        let data = rows
            .into_iter()
            .flatten()
            .map(|c| c.embed(order))
            .collect();
        MatrixF {
            order,
            nrows,
            ncols,
            data,
        }
    }

    pub fn from_rationals(rows: &[Vec<Rational>]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|x| Cyclo::from_rational(1, x)).collect())
            .collect();
        Self::from_rows(1, rows)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclo) {
        self.data[i * self.ncols + j] = v.embed(self.order);
    }

    pub fn row(&self, i: usize) -> &[Cyclo] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Cyclo]> {
        (0..self.nrows).map(move |i| self.row(i))
    }

    pub fn mul_vec(&self, v: &[Cyclo]) -> Vec<Cyclo> {
        assert_eq!(v.len(), self.ncols);
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Cyclo::zero(self.order), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn mul(&self, rhs: &MatrixF) -> MatrixF {
        assert_eq!(self.ncols, rhs.nrows);
        let order = super::cyclo::lcm_order(self.order, rhs.order);
        let mut out = MatrixF::zeros(order, self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = &out.data[i * rhs.ncols + j] + &(a * b);
                        out.data[i * rhs.ncols + j] = cur;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> MatrixF {
        let mut out = MatrixF::zeros(self.order, self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.data[j * self.nrows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclo::is_zero)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &MatrixF) -> MatrixF {
        assert_eq!(self.ncols, other.ncols);
        let rows = self
            .rows()
            .chain(other.rows())
            .map(<[Cyclo]>::to_vec)
            .collect();
        let mut m = MatrixF::from_rows(super::cyclo::lcm_order(self.order, other.order), rows);
        m.ncols = self.ncols;
        m
    }
}

impl fmt::Display for MatrixF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Row echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<Cyclo>>,
    pivots: Vec<usize>,
}

/// Bareiss elimination. Pivot rule: in each column, the first row (lowest
/// index) at or below the current step with a nonzero entry.
fn bareiss(m: &MatrixF) -> Echelon {
    let order = m.order;
    let ncols = m.ncols;
    let mut a: Vec<Vec<Cyclo>> = m.rows().map(<[Cyclo]>::to_vec).collect();
    let mut prev = Cyclo::one(order);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let prev_inv = prev.inv().expect("Bareiss pivot is nonzero");
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = std::mem::replace(&mut row[c], Cyclo::zero(order));
            for j in c + 1..ncols {
                let mut v = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&lead * &pivot_row[j]);
                }
                if !prev.is_one() && !v.is_zero() {
                    v = &v * &prev_inv;
                }
                row[j] = v;
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

pub fn rank(m: &MatrixF) -> usize {
    if m.nrows == 0 || m.ncols == 0 {
        return 0;
    }
    bareiss(m).pivots.len()
}

/// Rank and a kernel basis (column vectors v with m·v = 0).
///
/// Each basis vector has a 1 in one free column and 0 in the others, so the
/// basis is determined by the matrix alone.
pub fn rank_and_kernel(m: &MatrixF) -> (usize, Vec<Vec<Cyclo>>) {
    let order = m.order;
    let ncols = m.ncols;
    if m.nrows == 0 {
        let basis = (0..ncols)
            .map(|f| unit_vector(order, ncols, f))
            .collect();
        return (0, basis);
    }
    let ech = bareiss(m);
    let rank = ech.pivots.len();
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let pivot_inv: Vec<Cyclo> = ech
        .rows
        .iter()
        .zip(&ech.pivots)
        .map(|(row, &p)| row[p].inv().expect("pivot is nonzero"))
        .collect();
    let mut basis = Vec::with_capacity(ncols - rank);
    for free in (0..ncols).filter(|&j| !is_pivot[j]) {
        let mut x = unit_vector(order, ncols, free);
        for i in (0..rank).rev() {
            let p = ech.pivots[i];
            let row = &ech.rows[i];
            let mut s = Cyclo::zero(order);
            for j in p + 1..ncols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    s = &s + &(&row[j] * &x[j]);
                }
            }
            x[p] = -&(&s * &pivot_inv[i]);
        }
        basis.push(x);
    }
    (rank, basis)
}

fn unit_vector(order: u32, n: usize, k: usize) -> Vec<Cyclo> {
    (0..n)
        .map(|j| {
            if j == k {
                Cyclo::one(order)
            } else {
                Cyclo::zero(order)
            }
        })
        .collect()
}

/// Rank of a list of vectors (as rows).
pub fn rank_of_vectors(order: u32, vectors: &[Vec<Cyclo>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&MatrixF::from_rows(order, vectors.to_vec()))
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(order: u32, basis: &[Vec<Cyclo>], v: &[Cyclo]) -> bool {
    let r = rank_of_vectors(order, basis);
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    rank_of_vectors(order, &all) == r
}

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixZ {
    nrows: usize,
    ncols: usize,
    data: Vec<BigInt>,
}

impl MatrixZ {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        MatrixZ {
            nrows,
            ncols,
            data: vec![BigInt::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(ncols: usize, rows: &[Vec<T>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows in integer matrix");
            data.extend(r.iter().cloned().map(Into::into));
        }
        MatrixZ {
            nrows: rows.len(),
            ncols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.nrows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, rhs: &MatrixZ) -> MatrixZ {
        assert_eq!(self.ncols, rhs.nrows);
        let mut out = MatrixZ::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.ncols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &MatrixZ) -> MatrixZ {
        assert_eq!(self.ncols, other.ncols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        MatrixZ {
            nrows: self.nrows + other.nrows,
            ncols: self.ncols,
            data,
        }
    }

    /// Rank over Q, by integer Bareiss elimination (all divisions exact).
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == a.len() {
                break;
            }
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let (top, bottom) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in bottom.iter_mut() {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..self.ncols {
                    let mut v = &pivot_row[c] * &row[j];
                    if !lead.is_zero() {
                        v -= &lead * &pivot_row[j];
                    }
                    if !prev.is_one() {
                        debug_assert!((&v % &prev).is_zero());
                        v /= &prev;
                    }
                    row[j] = v;
                }
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(order: u32, k: i64) -> Cyclo {
        Cyclo::root_of_unity(order, k)
    }

    fn int(v: i64) -> Cyclo {
        Cyclo::from_int(1, v)
    }

    #[test]
    fn identity_has_full_rank() {
        let (r, ker) = rank_and_kernel(&MatrixF::identity(1, 3));
        assert_eq!(r, 3);
        assert!(ker.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let (r, ker) = rank_and_kernel(&MatrixF::zeros(1, 2, 3));
        assert_eq!(r, 0);
        assert_eq!(ker.len(), 3);
        for (k, v) in ker.iter().enumerate() {
            assert_eq!(v, &unit_vector(1, 3, k));
        }
    }

    #[test]
    fn empty_matrix() {
        let (r, ker) = rank_and_kernel(&MatrixF::zeros(1, 0, 2));
        assert_eq!(r, 0);
        assert_eq!(ker.len(), 2);
    }

    #[test]
    fn cube_root_example() {
        // [[1, ζ], [ζ², 1]] over Q(ζ_3): second row is ζ² times the first.
        let m = MatrixF::from_rows(3, vec![vec![c(3, 0), c(3, 1)], vec![c(3, 2), c(3, 0)]]);
        let (r, ker) = rank_and_kernel(&m);
        assert_eq!(r, 1);
        assert_eq!(ker.len(), 1);
        // Expected direction (ζ, −1), up to scale.
        let expected = vec![c(3, 1), Cyclo::from_int(3, -1)];
        assert!(in_span(3, &ker, &expected));
        assert!(m.mul_vec(&ker[0]).iter().all(Cyclo::is_zero));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = MatrixF::from_rows(
            1,
            vec![
                vec![int(1), int(2), int(3), int(4)],
                vec![int(2), int(4), int(6), int(8)],
                vec![int(0), int(1), int(-1), int(5)],
            ],
        );
        let (r, ker) = rank_and_kernel(&m);
        assert_eq!(r, 2);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(Cyclo::is_zero));
        }
        assert_eq!(rank_of_vectors(1, &ker), 2);
    }

    #[test]
    fn integer_rank() {
        let m = MatrixZ::from_rows(3, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(MatrixZ::zeros(2, 2).rank(), 0);
        assert_eq!(MatrixZ::identity(4).rank(), 4);
    }
}
