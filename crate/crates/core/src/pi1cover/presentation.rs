use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::wiring::WiringDiagram;
use super::word::{conjugate, exponent_sums, inverse, max_generator, product, Word};
use crate::exact::{cokernel_invariants, AbelianInvariants, MatrixZ};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("letter {letter} in {context} is outside 1..={generators} (or its negative)")]
    BadLetter {
        letter: i32,
        context: String,
        generators: usize,
    },
    #[error("generator {0} is not the meridian of any line; its character value is undetermined")]
    UnlabeledGenerator(usize),
}

/// Finite presentation of π₁(M) with a meridian word for every line.
///
/// Serialized as `{"generators": g, "relators": [[…]], "meridians": [[…]]}`
/// with letters as signed 1-based generator numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Word>,
    #[serde(default)]
    pub meridians: Vec<Word>,
}

impl GroupPresentation {
    pub fn validate(&self) -> Result<(), PresentationError> {
        let check = |w: &Word, context: String| {
            match w.iter().find(|&&x| x == 0 || x.unsigned_abs() as usize > self.generators) {
                Some(&letter) => Err(PresentationError::BadLetter {
                    letter,
                    context,
                    generators: self.generators,
                }),
                None => Ok(()),
            }
        };
        for (k, r) in self.relators.iter().enumerate() {
            check(r, format!("relator {k}"))?;
        }
        for (k, m) in self.meridians.iter().enumerate() {
            check(m, format!("meridian of line {k}"))?;
        }
        Ok(())
    }

    /// For each generator, (line, sign) such that the meridian of `line` is
    /// that single generator raised to `sign`.
    pub fn generator_lines(&self) -> Result<Vec<(usize, i32)>, PresentationError> {
        let mut out = vec![None; self.generators];
        for (line, m) in self.meridians.iter().enumerate() {
            if let [x] = m.as_slice() {
                let g = x.unsigned_abs() as usize - 1;
                out[g].get_or_insert((line, x.signum()));
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(g, v)| v.ok_or(PresentationError::UnlabeledGenerator(g + 1)))
            .collect()
    }

    /// Relator exponent-sum matrix (one row per relator).
    pub fn relation_matrix(&self) -> MatrixZ {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| exponent_sums(r, self.generators))
            .collect();
        MatrixZ::from_rows(self.generators, &rows)
    }

    pub fn abelianization(&self) -> AbelianInvariants {
        cokernel_invariants(&self.relation_matrix())
    }

    pub fn word_count_check(&self) -> bool {
        self.relators
            .iter()
            .chain(&self.meridians)
            .all(|w| max_generator(w) <= self.generators)
    }
}

/// Presentation read off a wiring diagram.
///
/// Generators are the meridians of the affine lines, numbered in increasing
/// line order, taken in a fiber left of all crossings with the base point
/// far below the real axis. In that fiber the loop around all punctures is
/// the product of the meridians from top to bottom. Moving the fiber past a
/// crossing along a path slightly above the real axis turns the local
/// punctures by a clockwise half-turn, which acts on the local loops
/// (a, b) of two adjacent strands as (a, b) ↦ (b, b·a·b⁻¹); a multiple
/// crossing is a product of such adjacent swaps. At a crossing of loops
/// a₁…a_m (bottom to top) the local product P = a_m⋯a₁ is central, giving
/// the m − 1 relators rot_j(P)·P⁻¹.
///
/// Only degree-one information is used downstream, so the presentation
/// 2-complex computing H¹ of π₁ is enough; no asphericity is needed.
pub fn randell_presentation(wd: &WiringDiagram) -> GroupPresentation {
    let affine: Vec<usize> = (0..wd.d).filter(|&i| i != wd.infinity_line).collect();
    let generator_of = |line: usize| affine.iter().position(|&l| l == line).unwrap() as i32 + 1;
    let mut cur: Vec<Word> = wd
        .initial_order
        .iter()
        .map(|&l| vec![generator_of(l)])
        .collect();
    let mut relators = Vec::new();
    for c in &wd.crossings {
        let m = c.lines.len();
        let local = &cur[c.position..c.position + m];
        let p: Word = product(local.iter().rev().map(Vec::as_slice));
        let p_inv = inverse(&p);
        for j in 1..m {
            // rot_j(P) = a_j ⋯ a_1 a_m ⋯ a_{j+1}
            let rot = product(
                local[..j]
                    .iter()
                    .rev()
                    .chain(local[j..].iter().rev())
                    .map(Vec::as_slice),
            );
            relators.push(product([rot.as_slice(), &p_inv]));
        }
        let block = &mut cur[c.position..c.position + m];
        for i in 0..m {
            for j in 0..m - 1 - i {
                let a = block[j].clone();
                let b = block[j + 1].clone();
                block[j] = b.clone();
                block[j + 1] = conjugate(&b, &a);
            }
        }
    }
    let mut meridians = vec![Vec::new(); wd.d];
    for &l in &affine {
        meridians[l] = vec![generator_of(l)];
    }
    let top_down: Vec<&[i32]> = wd
        .initial_order
        .iter()
        .rev()
        .map(|&l| meridians[l].as_slice())
        .collect();
    let total = product(top_down);
    meridians[wd.infinity_line] = inverse(&total);
    GroupPresentation {
        generators: affine.len(),
        relators,
        meridians,
    }
}
