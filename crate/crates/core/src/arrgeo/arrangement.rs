use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{lcm_order, Cyclo};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("arrangement has no lines")]
    Empty,
    #[error("line {0} is the zero form")]
    ZeroForm(usize),
    #[error("lines {0} and {1} are proportional")]
    DuplicateLine(usize, usize),
    #[error("coefficient of line {line} lives in Q(ζ_{found}), which is not a subfield of Q(ζ_{order})")]
    FieldMismatch { line: usize, found: u32, order: u32 },
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
}

/// A projective line a·x + b·y + c·z = 0, scaled so the first nonzero
/// coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjLine {
    coeffs: [Cyclo; 3],
}

impl ProjLine {
    pub fn new(coeffs: [Cyclo; 3]) -> Option<Self> {
        normalize_triple(coeffs).map(|coeffs| ProjLine { coeffs })
    }

    pub fn coeffs(&self) -> &[Cyclo; 3] {
        &self.coeffs
    }

    pub fn eval(&self, p: &[Cyclo; 3]) -> Cyclo {
        self.coeffs
            .iter()
            .zip(p)
            .fold(Cyclo::zero(1), |acc, (a, x)| &acc + &(a * x))
    }

    /// Whether every coefficient is rational.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Cyclo::is_rational)
    }
}

/// Scales a nonzero triple so its first nonzero entry is 1.
pub fn normalize_triple(t: [Cyclo; 3]) -> Option<[Cyclo; 3]> {
    let lead = t.iter().find(|c| !c.is_zero())?.inv()?;
    let [a, b, c] = t;
    Some([&a * &lead, &b * &lead, &c * &lead])
}

pub fn cross(u: &[Cyclo; 3], v: &[Cyclo; 3]) -> [Cyclo; 3] {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    name: String,
    order: u32,
    lines: Vec<ProjLine>,
}

impl Arrangement {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Cyclotomic order N of the coefficient field Q(ζ_N).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &ProjLine {
        &self.lines[i]
    }

    /// Number of lines, which is also the degree of the defining polynomial.
    pub fn d(&self) -> usize {
        self.lines.len()
    }

    pub fn is_real(&self) -> bool {
        self.lines.iter().all(ProjLine::is_real)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Same lines in a different order: line `k` of the result is line
    /// `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Arrangement {
        Arrangement {
            name: self.name.clone(),
            order: self.order,
            lines: perm.iter().map(|&i| self.lines[i].clone()).collect(),
        }
    }

    pub fn to_file(&self) -> ArrangementFile {
        ArrangementFile {
            name: self.name.clone(),
            cyclotomic_order: self.order,
            lines: self
                .lines
                .iter()
                .map(|l| l.coeffs.to_vec())
                .collect(),
        }
    }
}

/// Checks and normalizes raw coefficient triples over Q(ζ_order).
pub fn validate_arrangement(
    name: &str,
    raw: &[[Cyclo; 3]],
    order: u32,
) -> Result<Arrangement, ArrangementError> {
    if order == 0 {
        return Err(ArrangementError::ZeroOrder);
    }
    if raw.is_empty() {
        return Err(ArrangementError::Empty);
    }
    let mut lines: Vec<ProjLine> = Vec::with_capacity(raw.len());
    for (i, triple) in raw.iter().enumerate() {
        for c in triple {
            if !order.is_multiple_of(c.order()) && !c.is_rational() {
                return Err(ArrangementError::FieldMismatch {
                    line: i,
                    found: c.order(),
                    order,
                });
            }
        }
        let embedded = triple.clone().map(|c| {
            if order.is_multiple_of(c.order()) {
                c.embed(order)
            } else {
                Cyclo::from_rational(order, &c.to_rational().unwrap())
            }
        });
        let line = ProjLine::new(embedded).ok_or(ArrangementError::ZeroForm(i))?;
        if let Some(j) = lines.iter().position(|l| *l == line) {
            return Err(ArrangementError::DuplicateLine(j, i));
        }
        lines.push(line);
    }
    Ok(Arrangement {
        name: name.to_string(),
        order,
        lines,
    })
}

/// On-disk form: `{"name", "cyclotomic_order", "lines": [[c, c, c], …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub name: String,
    pub cyclotomic_order: u32,
    pub lines: Vec<Vec<Cyclo>>,
}

impl ArrangementFile {
    pub fn into_arrangement(self) -> Result<Arrangement, ArrangementError> {
        let mut raw = Vec::with_capacity(self.lines.len());
        for (i, l) in self.lines.into_iter().enumerate() {
            let triple: [Cyclo; 3] = l.try_into().map_err(|_| ArrangementError::ZeroForm(i))?;
            raw.push(triple);
        }
        let order = raw
            .iter()
            .flatten()
            .fold(self.cyclotomic_order, |acc, c| {
                if c.is_rational() {
                    acc
                } else {
                    lcm_order(acc, c.order())
                }
            });
        if order != self.cyclotomic_order {
            let (line, found) = raw
                .iter()
                .enumerate()
                .find_map(|(i, t)| {
                    t.iter()
                        .find(|c| !c.is_rational() && !self.cyclotomic_order.is_multiple_of(c.order()))
                        .map(|c| (i, c.order()))
                })
                .unwrap();
            return Err(ArrangementError::FieldMismatch {
                line,
                found,
                order: self.cyclotomic_order,
            });
        }
        validate_arrangement(&self.name, &raw, self.cyclotomic_order)
    }
}
