use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::arrgeo::{Arrangement, Lattice};

/// Which multinet axiom a structure fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    /// Every class has the same total multiplicity e.
    M1,
    /// At every base point each class has the same weight n_X.
    M2,
    /// Lines from different classes meet at base points.
    M3,
    /// Lines of one class are connected through non-base intersection points.
    M4,
    /// At least three classes.
    ClassCount,
    /// The base locus has at least two points.
    BaseLocus,
    /// Classes are disjoint, nonempty, and μ is positive exactly on them.
    Partition,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Witness {
    ClassWeights {
        class_a: usize,
        weight_a: u32,
        class_b: usize,
        weight_b: u32,
    },
    Point {
        point: usize,
        class_a: usize,
        weight_a: u32,
        class_b: usize,
        weight_b: u32,
    },
    Lines {
        line_a: usize,
        line_b: usize,
    },
    Disconnected {
        class: usize,
        line_a: usize,
        line_b: usize,
    },
    Count(usize),
    Line(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultinetError {
    #[error("axiom {axiom} violated: {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Witness },
}

impl MultinetError {
    fn violation(axiom: Axiom, witness: Witness) -> Self {
        MultinetError::AxiomViolation { axiom, witness }
    }
}

/// Base point of a multinet: a lattice point where lines from at least two
/// classes meet, with its common class weight n_X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BasePoint {
    pub point: usize,
    pub n: u32,
}

/// A validated multinet on a subarrangement.
///
/// Classes are kept sorted internally and ordered by their least line, so
/// two structures are equal exactly when they agree up to class relabeling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MultinetStructure {
    support: Vec<usize>,
    classes: Vec<Vec<usize>>,
    /// (line, μ(line)) for every line in the support, sorted by line.
    mu: Vec<(usize, u32)>,
    e: u32,
    base_points: Vec<BasePoint>,
}

impl MultinetStructure {
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn mu_pairs(&self) -> &[(usize, u32)] {
        &self.mu
    }

    /// μ(line), or 0 off the support.
    pub fn mu(&self, line: usize) -> u32 {
        self.mu
            .binary_search_by_key(&line, |&(l, _)| l)
            .map_or(0, |k| self.mu[k].1)
    }

    pub fn base_points(&self) -> &[BasePoint] {
        &self.base_points
    }

    pub fn is_reduced(&self) -> bool {
        self.mu.iter().all(|&(_, m)| m == 1)
    }

    pub fn is_full_support(&self, d: usize) -> bool {
        self.support.len() == d
    }

    /// Σ_X n_X² over base points; equals e² for multinets coming from
    /// pencils (recorded in reports, not enforced).
    pub fn weighted_base_count(&self) -> u64 {
        self.base_points.iter().map(|b| (b.n as u64).pow(2)).sum()
    }

    /// Structure without any axiom check, for exercising the bookkeeping
    /// functions on synthetic data.
    #[cfg(test)]
    pub(crate) fn unchecked(classes: Vec<Vec<usize>>, mut mu: Vec<(usize, u32)>) -> Self {
        mu.sort_unstable();
        let support = mu.iter().map(|&(l, _)| l).collect();
        let e = classes[0].iter().map(|&l| mu[l].1).sum();
        MultinetStructure {
            support,
            classes,
            mu,
            e,
            base_points: Vec::new(),
        }
    }

    pub fn class_of(&self, line: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&line).is_ok())
    }
}

/// Checks the multinet axioms for `classes` with multiplicities `mu` and
/// computes the base points.
pub fn validate_multinet(
    arr: &Arrangement,
    lattice: &Lattice,
    classes: &[Vec<usize>],
    mu: &[(usize, u32)],
) -> Result<MultinetStructure, MultinetError> {
    let d = arr.d();
    let mut classes: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();
    if classes.iter().any(Vec::is_empty) {
        return Err(MultinetError::violation(Axiom::Partition, Witness::Count(0)));
    }
    classes.sort();
    let mut seen = BTreeSet::new();
    for &i in classes.iter().flatten() {
        if i >= d || !seen.insert(i) {
            return Err(MultinetError::violation(Axiom::Partition, Witness::Line(i)));
        }
    }
    let support: Vec<usize> = seen.into_iter().collect();
    let mut mu: Vec<(usize, u32)> = mu.to_vec();
    mu.sort_unstable();
    mu.dedup();
    if mu.len() != support.len() {
        let bad = mu
            .iter()
            .map(|&(l, _)| l)
            .find(|l| support.binary_search(l).is_err())
            .or_else(|| {
                support
                    .iter()
                    .copied()
                    .find(|l| mu.binary_search_by_key(l, |&(x, _)| x).is_err())
            })
            .unwrap_or(0);
        return Err(MultinetError::violation(Axiom::Partition, Witness::Line(bad)));
    }
    for (&(l, m), &s) in mu.iter().zip(&support) {
        if l != s || m == 0 {
            return Err(MultinetError::violation(Axiom::Partition, Witness::Line(l)));
        }
    }
    let k = classes.len();
    if k < 3 {
        return Err(MultinetError::violation(Axiom::ClassCount, Witness::Count(k)));
    }
    let mu_of = |l: usize| mu[support.binary_search(&l).unwrap()].1;
    let class_of = |l: usize| classes.iter().position(|c| c.binary_search(&l).is_ok());

    // M1
    let weights: Vec<u32> = classes
        .iter()
        .map(|c| c.iter().map(|&l| mu_of(l)).sum())
        .collect();
    if let Some(j) = (1..k).find(|&j| weights[j] != weights[0]) {
        return Err(MultinetError::violation(
            Axiom::M1,
            Witness::ClassWeights {
                class_a: 0,
                weight_a: weights[0],
                class_b: j,
                weight_b: weights[j],
            },
        ));
    }
    let e = weights[0];

    // M2 and base points
    let mut base_points = Vec::new();
    let mut is_base = vec![false; lattice.points().len()];
    for (x, p) in lattice.points().iter().enumerate() {
        let mut w = vec![0u32; k];
        let mut present = 0;
        for &l in &p.incident {
            if let Some(c) = class_of(l) {
                if w[c] == 0 {
                    present += 1;
                }
                w[c] += mu_of(l);
            }
        }
        if present < 2 {
            continue;
        }
        if let Some(j) = (1..k).find(|&j| w[j] != w[0]) {
            return Err(MultinetError::violation(
                Axiom::M2,
                Witness::Point {
                    point: x,
                    class_a: 0,
                    weight_a: w[0],
                    class_b: j,
                    weight_b: w[j],
                },
            ));
        }
        is_base[x] = true;
        base_points.push(BasePoint { point: x, n: w[0] });
    }

    // M3: holds by construction of the base locus; checked for the record.
    for (a, ca) in classes.iter().enumerate() {
        for cb in &classes[a + 1..] {
            for &i in ca {
                for &j in cb {
                    if !is_base[lattice.point_of_pair(i, j)] {
                        return Err(MultinetError::violation(
                            Axiom::M3,
                            Witness::Lines { line_a: i, line_b: j },
                        ));
                    }
                }
            }
        }
    }

    // M4: union-find on each class over non-base intersection points.
    for (j, class) in classes.iter().enumerate() {
        let mut parent: Vec<usize> = (0..class.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for a in 0..class.len() {
            for b in a + 1..class.len() {
                if !is_base[lattice.point_of_pair(class[a], class[b])] {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
        let root = find(&mut parent, 0);
        if let Some(b) = (1..class.len()).find(|&b| find(&mut parent, b) != root) {
            return Err(MultinetError::violation(
                Axiom::M4,
                Witness::Disconnected {
                    class: j,
                    line_a: class[0],
                    line_b: class[b],
                },
            ));
        }
    }

    if base_points.len() < 2 {
        return Err(MultinetError::violation(
            Axiom::BaseLocus,
            Witness::Count(base_points.len()),
        ));
    }

    Ok(MultinetStructure {
        support,
        classes,
        mu,
        e,
        base_points,
    })
}

/// gcd of all multiplicities.
pub fn mu_gcd(mn: &MultinetStructure) -> u32 {
    mn.mu.iter().fold(0, |g, &(_, m)| g.gcd(&m))
}
