use std::collections::BTreeMap;

use serde::Serialize;

use super::arrangement::{cross, normalize_triple, Arrangement};
use crate::exact::Cyclo;

/// A point of P² where at least two lines meet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatPoint {
    pub point: [Cyclo; 3],
    /// Sorted line indices through the point.
    pub incident: Vec<usize>,
}

impl FlatPoint {
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }

    /// Least incident line index.
    pub fn anchor(&self) -> usize {
        self.incident[0]
    }

    pub fn contains(&self, line: usize) -> bool {
        self.incident.binary_search(&line).is_ok()
    }
}

/// Rank-2 flats of an arrangement, ordered lexicographically by normalized
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    d: usize,
    points: Vec<FlatPoint>,
    // pair_point[i * d + j] = index of the point on lines i and j
    pair_point: Vec<usize>,
}

impl Lattice {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[FlatPoint] {
        &self.points
    }

    /// Index of the point where lines `i != j` meet.
    pub fn point_of_pair(&self, i: usize, j: usize) -> usize {
        assert_ne!(i, j);
        self.pair_point[i * self.d + j]
    }

    pub fn points_on_line(&self, line: usize) -> impl Iterator<Item = usize> + '_ {
        self.points
            .iter()
            .enumerate()
            .filter(move |(_, p)| p.contains(line))
            .map(|(k, _)| k)
    }

    /// Number of points of each multiplicity, ascending.
    pub fn multiplicity_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for p in &self.points {
            *census.entry(p.multiplicity()).or_insert(0) += 1;
        }
        census
    }

    /// Σ C(m_X, 2) == C(d, 2).
    pub fn counting_identity_holds(&self) -> bool {
        let lhs: usize = self
            .points
            .iter()
            .map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2)
            .sum();
        lhs == self.d * self.d.saturating_sub(1) / 2
    }

    /// Incidence of the subarrangement `support` (sorted original indices):
    /// each point keeps the incident lines from `support`, points with fewer
    /// than two such lines are dropped.
    pub fn restricted_incidence(&self, support: &[usize]) -> Vec<Vec<usize>> {
        self.points
            .iter()
            .map(|p| {
                p.incident
                    .iter()
                    .copied()
                    .filter(|i| support.binary_search(i).is_ok())
                    .collect::<Vec<_>>()
            })
            .filter(|inc| inc.len() >= 2)
            .collect()
    }
}

pub fn intersection_lattice(arr: &Arrangement) -> Lattice {
    let d = arr.d();
    let mut groups: BTreeMap<[Cyclo; 3], Vec<usize>> = BTreeMap::new();
    for i in 0..d {
        for j in i + 1..d {
            let p = cross(arr.line(i).coeffs(), arr.line(j).coeffs());
            let p = normalize_triple(p).expect("distinct lines meet in a point");
            let inc = groups.entry(p).or_default();
            for k in [i, j] {
                if let Err(pos) = inc.binary_search(&k) {
                    inc.insert(pos, k);
                }
            }
        }
    }
    let points: Vec<FlatPoint> = groups
        .into_iter()
        .map(|(point, incident)| FlatPoint { point, incident })
        .collect();
    let mut pair_point = vec![usize::MAX; d * d];
    for (k, p) in points.iter().enumerate() {
        for &i in &p.incident {
            for &j in &p.incident {
                if i != j {
                    pair_point[i * d + j] = k;
                }
            }
        }
    }
    debug_assert!(points
        .iter()
        .all(|p| p.incident.iter().all(|&i| arr.line(i).eval(&p.point).is_zero())));
    Lattice {
        d,
        points,
        pair_point,
    }
}
