use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arrgeo::Arrangement;
use crate::exact::{rational_to_string, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WiringError {
    #[error("line {line} has a non-rational coefficient; the arrangement is not complexified real")]
    NotReal { line: usize },
    #[error("line at infinity {0} out of range")]
    InfinityOutOfRange(usize),
}

/// Affine line v = slope·u + intercept in the swept chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLine {
    pub line: usize,
    pub slope: Rational,
    pub intercept: Rational,
}

/// Lines crossing at sweep coordinate `u`, listed in their bottom-to-top
/// order just before the crossing. They occupy consecutive wire positions
/// starting at `position`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub u: Rational,
    pub position: usize,
    pub lines: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WiringDiagram {
    pub d: usize,
    pub infinity_line: usize,
    /// Rotation parameter t of the sweep direction, (cos, sin) =
    /// ((1−t²)/(1+t²), 2t/(1+t²)).
    pub rotation: Rational,
    pub lines: Vec<AffineLine>,
    /// Bottom-to-top order of the affine lines left of every crossing.
    pub initial_order: Vec<usize>,
    pub crossings: Vec<Crossing>,
}

#[derive(Serialize)]
struct CrossingSummary {
    u: String,
    lines: Vec<usize>,
}

impl WiringDiagram {
    /// Crossing multiplicities in sweep order.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.crossings.iter().map(|c| c.lines.len()).collect()
    }

    pub fn summary(&self) -> serde_json::Value {
        let crossings: Vec<CrossingSummary> = self
            .crossings
            .iter()
            .map(|c| CrossingSummary {
                u: rational_to_string(&c.u),
                lines: c.lines.clone(),
            })
            .collect();
        serde_json::json!({
            "infinity_line": self.infinity_line,
            "rotation": rational_to_string(&self.rotation),
            "initial_order": self.initial_order,
            "crossings": crossings,
        })
    }
}

/// Wiring diagram of a complexified real arrangement, deconed at
/// `infinity_line`. The sweep direction is the first generic rotation
/// after skipping `skip` generic ones, so different `skip` values give
/// independent diagrams of the same arrangement.
pub fn wiring_diagram(
    arr: &Arrangement,
    infinity_line: usize,
    skip: usize,
) -> Result<WiringDiagram, WiringError> {
    let d = arr.d();
    if infinity_line >= d {
        return Err(WiringError::InfinityOutOfRange(infinity_line));
    }
    let mut forms: Vec<[Rational; 3]> = Vec::with_capacity(d);
    for (i, l) in arr.lines().iter().enumerate() {
        let c = l.coeffs();
        match (c[0].to_rational(), c[1].to_rational(), c[2].to_rational()) {
            (Some(a), Some(b), Some(z)) => forms.push([a, b, z]),
            _ => return Err(WiringError::NotReal { line: i }),
        }
    }
    let affine = decone(&forms, infinity_line);
    let mut skipped = 0;
    for k in 0u64.. {
        let t = Rational::new(k.into(), (k + 7).into());
        if let Some(wd) = try_direction(d, infinity_line, &affine, &t) {
            if skipped == skip {
                return Ok(wd);
            }
            skipped += 1;
        }
    }
    unreachable!("generic directions are cofinite")
}

/// Coefficients (a, b, c) of every line other than `inf` in affine
/// coordinates (u, v) with the line at infinity sent to w = 0: the line
/// reads a·u + b·v + c = 0.
fn decone(forms: &[[Rational; 3]], inf: usize) -> Vec<(usize, [Rational; 3])> {
    let f = &forms[inf];
    // New coordinates (u, v, w) = (p_a, p_b, f·p) for a pair of standard
    // coordinates that completes f to a basis.
    let (a, b, c) = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
        .into_iter()
        .find(|&(_, _, c)| !f[c].is_zero())
        .expect("nonzero form");
    // p_c = (w − f_a p_a − f_b p_b) / f_c
    let inv = Rational::one() / &f[c];
    forms
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != inf)
        .map(|(i, g)| {
            let u = &g[a] - &g[c] * &f[a] * &inv;
            let v = &g[b] - &g[c] * &f[b] * &inv;
            let w = &g[c] * &inv;
            (i, [u, v, w])
        })
        .collect()
}

fn try_direction(
    d: usize,
    infinity_line: usize,
    affine: &[(usize, [Rational; 3])],
    t: &Rational,
) -> Option<WiringDiagram> {
    let one = Rational::one();
    let den = &one + t * t;
    let cos = (&one - t * t) / &den;
    let sin = (Rational::from_integer(2.into()) * t) / &den;
    let mut lines = Vec::with_capacity(affine.len());
    for (i, [a, b, c]) in affine {
        // Rotating points by R rotates normals by R as well.
        let a2 = &cos * a - &sin * b;
        let b2 = &sin * a + &cos * b;
        if b2.is_zero() {
            return None;
        }
        lines.push(AffineLine {
            line: *i,
            slope: -(&a2 / &b2),
            intercept: -(c / &b2),
        });
    }
    // Group pairwise intersections into points.
    let mut points: BTreeMap<(Rational, Rational), Vec<usize>> = BTreeMap::new();
    for p in 0..lines.len() {
        for q in p + 1..lines.len() {
            let (lp, lq) = (&lines[p], &lines[q]);
            if lp.slope == lq.slope {
                continue;
            }
            let u = (&lq.intercept - &lp.intercept) / (&lp.slope - &lq.slope);
            let v = &lp.slope * &u + &lp.intercept;
            let entry = points.entry((u, v)).or_default();
            for x in [p, q] {
                if !entry.contains(&x) {
                    entry.push(x);
                }
            }
        }
    }
    let mut events: Vec<(Rational, Vec<usize>)> = points
        .into_iter()
        .map(|((u, _), ls)| (u, ls))
        .collect();
    events.sort_by(|x, y| x.0.cmp(&y.0));
    if events.windows(2).any(|w| w[0].0 == w[1].0) {
        return None;
    }
    let u0 = events
        .first()
        .map_or_else(Rational::zero, |(u, _)| u - Rational::one());
    let height = |l: &AffineLine, u: &Rational| &l.slope * u + &l.intercept;
    let mut order: Vec<usize> = (0..lines.len()).collect();
    order.sort_by(|&p, &q| height(&lines[p], &u0).cmp(&height(&lines[q], &u0)));
    let initial_order: Vec<usize> = order.iter().map(|&p| lines[p].line).collect();
    let mut crossings = Vec::with_capacity(events.len());
    for (u, members) in events {
        let mut pos: Vec<usize> = members
            .iter()
            .map(|m| order.iter().position(|x| x == m).unwrap())
            .collect();
        pos.sort_unstable();
        let start = pos[0];
        let len = pos.len();
        assert_eq!(pos[len - 1] - start + 1, len, "crossing strands are adjacent");
        crossings.push(Crossing {
            u,
            position: start,
            lines: order[start..start + len].iter().map(|&p| lines[p].line).collect(),
        });
        order[start..start + len].reverse();
    }
    Some(WiringDiagram {
        d,
        infinity_line,
        rotation: t.clone(),
        lines,
        initial_order,
        crossings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrgeo::{builtin, intersection_lattice, validate_arrangement};
    use crate::exact::Cyclo;

    fn count_off_infinity(name: &str, inf: usize) -> (Vec<usize>, Vec<usize>) {
        let arr = builtin(name).unwrap();
        let lat = intersection_lattice(&arr);
        let mut expected: Vec<usize> = lat
            .points()
            .iter()
            .filter(|p| !p.contains(inf))
            .map(|p| p.multiplicity())
            .collect();
        expected.sort_unstable();
        let mut got = wiring_diagram(&arr, inf, 0).unwrap().multiplicities();
        got.sort_unstable();
        (got, expected)
    }

    #[test]
    fn two_lines() {
        let i = |v| Cyclo::from_int(1, v);
        let raw = [[i(1), i(0), i(0)], [i(0), i(1), i(0)], [i(0), i(0), i(1)]];
        let arr = validate_arrangement("xyz", &raw, 1).unwrap();
        let wd = wiring_diagram(&arr, 2, 0).unwrap();
        assert_eq!(wd.crossings.len(), 1);
        assert_eq!(wd.crossings[0].lines.len(), 2);
    }

    #[test]
    fn braid_crossings() {
        // Off z: triple points (0:0:1), (1:1:1) and double points (0:1:1),
        // (1:0:1).
        let (got, _) = count_off_infinity("A3", 2);
        assert_eq!(got, vec![2, 2, 3, 3]);
    }

    #[test]
    fn crossings_match_lattice() {
        for name in ["A3", "B3", "Pappus"] {
            for inf in [0, 2, 5] {
                let (got, expected) = count_off_infinity(name, inf);
                assert_eq!(got, expected, "{name} at infinity {inf}");
            }
        }
    }

    #[test]
    fn directions_differ() {
        let arr = builtin("B3").unwrap();
        let a = wiring_diagram(&arr, 8, 0).unwrap();
        let b = wiring_diagram(&arr, 8, 1).unwrap();
        assert_ne!(a.rotation, b.rotation);
        assert_eq!(a.crossings.len(), b.crossings.len());
    }

    #[test]
    fn non_real_rejected() {
        let arr = builtin("Hesse").unwrap();
        assert!(matches!(
            wiring_diagram(&arr, 11, 0),
            Err(WiringError::NotReal { .. })
        ));
    }
}
