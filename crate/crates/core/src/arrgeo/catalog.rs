//! Builtin arrangements.
//!
//! | name      | d      | field    |
//! |-----------|--------|----------|
//! | `A3`      | 6      | Q        |
//! | `B3`      | 9      | Q        |
//! | `Pappus`  | 9      | Q        |
//! | `Hesse`   | 12     | Q(ζ_3)   |
//! | `Ceva(r)` | 3(r+1) | Q(ζ_r)   |

use thiserror::Error;

use super::arrangement::{validate_arrangement, Arrangement};
use crate::exact::Cyclo;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown builtin arrangement {0:?} (known: A3, B3, Pappus, Hesse, Ceva(r))")]
    UnknownName(String),
}

pub const NAMES: &[&str] = &["A3", "B3", "Pappus", "Hesse", "Ceva(r)"];

/// A multinet known to live on a catalog arrangement: classes of line
/// indices and the multiplicity of every line in the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownMultinet {
    pub classes: Vec<Vec<usize>>,
    pub mu: Vec<(usize, u32)>,
}

impl KnownMultinet {
    fn reduced(classes: Vec<Vec<usize>>) -> Self {
        let mut mu: Vec<(usize, u32)> = classes.iter().flatten().map(|&i| (i, 1)).collect();
        mu.sort();
        KnownMultinet { classes, mu }
    }
}

fn int_line(a: i64, b: i64, c: i64) -> [Cyclo; 3] {
    [Cyclo::from_int(1, a), Cyclo::from_int(1, b), Cyclo::from_int(1, c)]
}

/// Parses `Ceva(4)`, `ceva4`, `Ceva-4`.
fn parse_ceva(name: &str) -> Option<u32> {
    let lower = name.to_ascii_lowercase();
    let rest = lower.strip_prefix("ceva")?;
    let digits = rest.trim_matches(|c| c == '(' || c == ')' || c == '-' || c == '_');
    digits.parse::<u32>().ok().filter(|&r| r >= 1)
}

pub fn builtin(name: &str) -> Result<Arrangement, CatalogError> {
    let arr = match name.to_ascii_lowercase().as_str() {
        "a3" => braid(),
        "b3" => b3(),
        "pappus" => pappus(),
        "hesse" => hesse(),
        _ => match parse_ceva(name) {
            Some(r) => ceva(r),
            None => return Err(CatalogError::UnknownName(name.to_string())),
        },
    };
    Ok(arr)
}

/// Multinets recorded alongside the catalog entry (possibly none).
pub fn known_multinets(name: &str) -> Vec<KnownMultinet> {
    match name.to_ascii_lowercase().as_str() {
        "a3" => vec![KnownMultinet::reduced(vec![vec![0, 4], vec![1, 5], vec![2, 3]])],
        "b3" => vec![KnownMultinet {
            classes: vec![vec![0, 5, 6], vec![1, 7, 8], vec![2, 3, 4]],
            mu: vec![
                (0, 2),
                (1, 2),
                (2, 2),
                (3, 1),
                (4, 1),
                (5, 1),
                (6, 1),
                (7, 1),
                (8, 1),
            ],
        }],
        "hesse" => vec![KnownMultinet::reduced(vec![
            vec![0, 1, 2],
            vec![3, 4, 5],
            vec![6, 7, 8],
            vec![9, 10, 11],
        ])],
        _ => match parse_ceva(name) {
            Some(r) => vec![ceva_multinet(r)],
            None => Vec::new(),
        },
    }
}

/// xyz(x−y)(y−z)(x−z).
fn braid() -> Arrangement {
    let raw = [
        int_line(1, 0, 0),
        int_line(0, 1, 0),
        int_line(0, 0, 1),
        int_line(1, -1, 0),
        int_line(0, 1, -1),
        int_line(1, 0, -1),
    ];
    validate_arrangement("A3", &raw, 1).expect("A3 catalog entry")
}

/// xyz(x²−y²)(y²−z²)(z²−x²).
fn b3() -> Arrangement {
    let raw = [
        int_line(1, 0, 0),
        int_line(0, 1, 0),
        int_line(0, 0, 1),
        int_line(1, -1, 0),
        int_line(1, 1, 0),
        int_line(0, 1, -1),
        int_line(0, 1, 1),
        int_line(1, 0, -1),
        int_line(1, 0, 1),
    ];
    validate_arrangement("B3", &raw, 1).expect("B3 catalog entry")
}

/// Dual of the Pappus configuration with A-points (0,0), (1,0), (3,0) and
/// B-points (0,1), (2,1), (5,1).
fn pappus() -> Arrangement {
    let raw = [
        int_line(0, 0, 1),
        int_line(1, 0, 1),
        int_line(3, 0, 1),
        int_line(0, 1, 1),
        int_line(2, 1, 1),
        int_line(5, 1, 1),
        int_line(2, 1, 3),
        int_line(15, 3, 8),
        int_line(13, 2, 5),
    ];
    validate_arrangement("Pappus", &raw, 1).expect("Pappus catalog entry")
}

/// The 12 lines in the four completely reducible fibers of the pencil
/// spanned by x³+y³+z³ and xyz: x, y, z and x + ω^j·y + ω^(2j+a)·z for
/// a, j ∈ {0, 1, 2}, where ω = ζ_3. Fiber a is x³+y³+z³ − 3ω^a·xyz.
fn hesse() -> Arrangement {
    let w = |k: i64| Cyclo::root_of_unity(3, k);
    let mut raw = vec![int_line(1, 0, 0), int_line(0, 1, 0), int_line(0, 0, 1)];
    for a in 0..3 {
        for j in 0..3 {
            raw.push([w(0), w(j), w(2 * j + a)]);
        }
    }
    validate_arrangement("Hesse", &raw, 3).expect("Hesse catalog entry")
}

/// xyz(x^r−y^r)(y^r−z^r)(z^r−x^r). Line order: x, y, z, then x − ζ^j·y,
/// y − ζ^j·z, z − ζ^j·x for j = 0..r.
fn ceva(r: u32) -> Arrangement {
    let z = |k: i64| Cyclo::root_of_unity(r, k);
    let zero = Cyclo::zero(r);
    let one = Cyclo::one(r);
    let mut raw = vec![int_line(1, 0, 0), int_line(0, 1, 0), int_line(0, 0, 1)];
    for j in 0..r as i64 {
        raw.push([one.clone(), -z(j), zero.clone()]);
    }
    for j in 0..r as i64 {
        raw.push([zero.clone(), one.clone(), -z(j)]);
    }
    for j in 0..r as i64 {
        raw.push([-z(j), zero.clone(), one.clone()]);
    }
    validate_arrangement(&format!("Ceva({r})"), &raw, r).expect("Ceva catalog entry")
}

/// Classes {x} ∪ {y − ζ^j z}, {y} ∪ {z − ζ^j x}, {z} ∪ {x − ζ^j y} with
/// multiplicity r on x, y, z.
fn ceva_multinet(r: u32) -> KnownMultinet {
    let r_us = r as usize;
    let block = |b: usize| (3 + b * r_us..3 + (b + 1) * r_us).collect::<Vec<_>>();
    let classes = vec![
        [vec![0], block(1)].concat(),
        [vec![1], block(2)].concat(),
        [vec![2], block(0)].concat(),
    ];
    let mut mu: Vec<(usize, u32)> = (0..3 + 3 * r_us)
        .map(|i| (i, if i < 3 { r } else { 1 }))
        .collect();
    mu.sort();
    KnownMultinet { classes, mu }
}
