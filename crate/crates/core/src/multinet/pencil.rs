use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use super::structure::MultinetStructure;
use crate::arrgeo::Arrangement;
use crate::exact::{rank, Cyclo, MatrixF};

/// Homogeneous polynomial in x, y, z; keys are exponent triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoly {
    degree: u32,
    terms: BTreeMap<[u32; 3], Cyclo>,
}

impl HomPoly {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert([0, 0, 0], Cyclo::one(1));
        HomPoly { degree: 0, terms }
    }

    pub fn linear(form: &[Cyclo; 3]) -> Self {
        let mut terms = BTreeMap::new();
        for (v, c) in form.iter().enumerate() {
            if !c.is_zero() {
                let mut e = [0; 3];
                e[v] = 1;
                terms.insert(e, c.clone());
            }
        }
        HomPoly { degree: 1, terms }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mul(&self, rhs: &HomPoly) -> HomPoly {
        let mut terms: BTreeMap<[u32; 3], Cyclo> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let key = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                let p = x * y;
                match terms.get_mut(&key) {
                    Some(c) => *c = &*c + &p,
                    None => {
                        terms.insert(key, p);
                    }
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        HomPoly {
            degree: self.degree + rhs.degree,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> HomPoly {
        (0..e).fold(HomPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn add(&self, rhs: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, rhs.degree);
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            match terms.get_mut(k) {
                Some(x) => *x = &*x + c,
                None => {
                    terms.insert(*k, c.clone());
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        HomPoly {
            degree: self.degree,
            terms,
        }
    }

    pub fn scale(&self, s: &Cyclo) -> HomPoly {
        let mut terms: BTreeMap<[u32; 3], Cyclo> =
            self.terms.iter().map(|(k, c)| (*k, c * s)).collect();
        terms.retain(|_, c| !c.is_zero());
        HomPoly {
            degree: self.degree,
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient vector in the monomial basis of the degree, ordered
    /// x^e, x^(e−1)y, x^(e−1)z, … , z^e.
    pub fn coefficient_vector(&self, order: u32) -> Vec<Cyclo> {
        monomials(self.degree)
            .iter()
            .map(|m| {
                self.terms
                    .get(m)
                    .map_or_else(|| Cyclo::zero(order), |c| c.embed(lcm(order, c.order())))
            })
            .collect()
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    crate::exact::lcm_order(a, b)
}

/// Exponent triples of total degree `e`, lexicographically descending.
pub fn monomials(e: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=e).rev() {
        for b in (0..=e - a).rev() {
            out.push([a, b, e - a - b]);
        }
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PencilError {
    #[error("class products span a space of dimension {0}, not 2")]
    SpanNotTwo(usize),
    #[error("fiber points {0} and {1} of the pencil coincide")]
    FiberCollision(usize, usize),
}

/// Q_j = α_j·Q₁ + β_j·Q₂.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collinearity {
    pub class: usize,
    pub alpha: Cyclo,
    pub beta: Cyclo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilRealization {
    pub degree: u32,
    /// Coefficients of each Q_j in the basis given by [`monomials`].
    pub q_coeffs: Vec<Vec<Cyclo>>,
    pub span_dim: usize,
    pub collinearity: Vec<Collinearity>,
    /// (α_j : β_j) ∈ P¹ for every class, normalized to a leading 1.
    pub fiber_points: Vec<[Cyclo; 2]>,
}

/// Q_j = Π_{i ∈ A_j} f_i^{μ(i)} for the given linear forms.
pub fn class_products(forms: &[[Cyclo; 3]], mn: &MultinetStructure) -> Vec<HomPoly> {
    mn.classes()
        .iter()
        .map(|class| {
            class.iter().fold(HomPoly::one(), |acc, &i| {
                acc.mul(&HomPoly::linear(&forms[i]).pow(mn.mu(i)))
            })
        })
        .collect()
}

pub fn span_dimension(polys: &[HomPoly], order: u32) -> usize {
    let rows: Vec<Vec<Cyclo>> = polys.iter().map(|p| p.coefficient_vector(order)).collect();
    rank(&MatrixF::from_rows(order, rows))
}

pub fn realize_pencil(
    arr: &Arrangement,
    mn: &MultinetStructure,
) -> Result<PencilRealization, PencilError> {
    let order = arr.order();
    let forms: Vec<[Cyclo; 3]> = arr.lines().iter().map(|l| l.coeffs().clone()).collect();
    let polys = class_products(&forms, mn);
    let q_coeffs: Vec<Vec<Cyclo>> = polys.iter().map(|p| p.coefficient_vector(order)).collect();
    let span_dim = rank(&MatrixF::from_rows(order, q_coeffs.clone()));
    if span_dim != 2 {
        return Err(PencilError::SpanNotTwo(span_dim));
    }
    // Distinct classes share no linear factor, so Q₁ and Q₂ are independent;
    // pick two monomial columns with a nonzero 2×2 minor to solve for (α, β).
    let (q1, q2) = (&q_coeffs[0], &q_coeffs[1]);
    let n = q1.len();
    let (c0, c1, det) = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find_map(|(a, b)| {
            let det = &(&q1[a] * &q2[b]) - &(&q1[b] * &q2[a]);
            (!det.is_zero()).then_some((a, b, det))
        })
        .expect("first two class products are independent");
    let det_inv = det.inv().unwrap();
    let mut collinearity = Vec::new();
    let mut fiber_points = Vec::new();
    for (j, q) in q_coeffs.iter().enumerate() {
        // Cramer's rule on columns c0, c1.
        let alpha = &(&(&q[c0] * &q2[c1]) - &(&q[c1] * &q2[c0])) * &det_inv;
        let beta = &(&(&q1[c0] * &q[c1]) - &(&q1[c1] * &q[c0])) * &det_inv;
        debug_assert!((0..n).all(|m| (&(&alpha * &q1[m]) + &(&beta * &q2[m])) == q[m]));
        fiber_points.push(normalize_pair(&alpha, &beta));
        if j >= 2 {
            collinearity.push(Collinearity {
                class: j,
                alpha,
                beta,
            });
        }
    }
    for a in 0..fiber_points.len() {
        for b in a + 1..fiber_points.len() {
            if fiber_points[a] == fiber_points[b] {
                return Err(PencilError::FiberCollision(a, b));
            }
        }
    }
    Ok(PencilRealization {
        degree: mn.e(),
        q_coeffs,
        span_dim,
        collinearity,
        fiber_points,
    })
}

fn normalize_pair(a: &Cyclo, b: &Cyclo) -> [Cyclo; 2] {
    let lead = if a.is_zero() { b } else { a };
    let inv = lead.inv().expect("fiber point is nonzero");
    [a * &inv, b * &inv]
}
