//! Smith normal form over Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::MatrixZ;

/// `left · m · right = diag(diagonal)` with `left`, `right` unimodular.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub diagonal: Vec<BigInt>,
    pub left: MatrixZ,
    pub right: MatrixZ,
}

/// Invariant factors d₁ | d₂ | … (length min(nrows, ncols), zeros last).
pub fn smith_normal_form(m: &MatrixZ) -> Vec<BigInt> {
    Smith::run(m, false).diagonal
}

pub fn smith_decomposition(m: &MatrixZ) -> SmithDecomposition {
    let s = Smith::run(m, true);
    SmithDecomposition {
        diagonal: s.diagonal,
        left: MatrixZ::from_rows(m.nrows(), &s.left),
        right: MatrixZ::from_rows(m.ncols(), &s.right),
    }
}

struct Smith {
    a: Vec<Vec<BigInt>>,
    left: Vec<Vec<BigInt>>,
    // Stored transposed: right_t[j] is column j of the right transform.
    right_t: Vec<Vec<BigInt>>,
    track: bool,
    diagonal: Vec<BigInt>,
    right: Vec<Vec<BigInt>>,
}

impl Smith {
    fn run(m: &MatrixZ, track: bool) -> Smith {
        let (nr, nc) = (m.nrows(), m.ncols());
        let mut s = Smith {
            a: m.to_rows(),
            left: if track { MatrixZ::identity(nr).to_rows() } else { Vec::new() },
            right_t: if track { MatrixZ::identity(nc).to_rows() } else { Vec::new() },
            track,
            diagonal: Vec::new(),
            right: Vec::new(),
        };
        s.reduce();
        let n = nr.min(nc);
        s.diagonal = (0..n).map(|i| s.a[i][i].clone()).collect();
        if track {
            s.right = (0..nc)
                .map(|i| (0..nc).map(|j| s.right_t[j][i].clone()).collect())
                .collect();
        }
        s
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if self.track {
            self.left.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        if self.track {
            self.right_t.swap(i, j);
        }
    }

    /// row_i += q · row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        let src = self.a[j].clone();
        for (x, y) in self.a[i].iter_mut().zip(&src) {
            if !y.is_zero() {
                *x += q * y;
            }
        }
        if self.track {
            let src = self.left[j].clone();
            for (x, y) in self.left[i].iter_mut().zip(&src) {
                if !y.is_zero() {
                    *x += q * y;
                }
            }
        }
    }

    /// col_i += q · col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for row in &mut self.a {
            if !row[j].is_zero() {
                let v = q * &row[j];
                row[i] += v;
            }
        }
        if self.track {
            let src = self.right_t[j].clone();
            for (x, y) in self.right_t[i].iter_mut().zip(&src) {
                if !y.is_zero() {
                    *x += q * y;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        if self.track {
            for x in &mut self.left[i] {
                *x = -&*x;
            }
        }
    }

    fn min_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in self.a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn reduce(&mut self) {
        let nr = self.a.len();
        let nc = self.a.first().map_or(0, Vec::len);
        for t in 0..nr.min(nc) {
            let Some((pi, pj)) = self.min_in_block(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..nr {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = -(&self.a[i][t] / &self.a[t][t]);
                    self.add_row(i, t, &q);
                    if !self.a[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..nc {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = -(&self.a[t][j] / &self.a[t][t]);
                    self.add_col(j, t, &q);
                    if !self.a[t][j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    // Bring the smallest remainder in row/column t to the pivot.
                    let mut best = (t, t);
                    for i in t + 1..nr {
                        let x = &self.a[i][t];
                        if !x.is_zero() && x.abs() < self.a[best.0][best.1].abs() {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..nc {
                        let x = &self.a[t][j];
                        if !x.is_zero() && x.abs() < self.a[best.0][best.1].abs() {
                            best = (t, j);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                // Divisibility: fold a violating row into row t and repeat.
                let pivot = self.a[t][t].clone();
                let bad = (t + 1..nr).find(|&i| {
                    self.a[i][t + 1..]
                        .iter()
                        .any(|x| !x.is_multiple_of(&pivot))
                });
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Ranks and torsion of the abelian group Z^ncols / rowspace(m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

pub fn cokernel_invariants(m: &MatrixZ) -> AbelianInvariants {
    let diag = smith_normal_form(m);
    let nonzero: Vec<&BigInt> = diag.iter().filter(|d| !d.is_zero()).collect();
    AbelianInvariants {
        free_rank: m.ncols() - nonzero.len(),
        torsion: nonzero
            .into_iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect(),
    }
}
