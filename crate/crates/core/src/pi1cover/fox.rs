use thiserror::Error;

use super::character::Character;
use super::presentation::{GroupPresentation, PresentationError};
use crate::exact::{rank, Cyclo, MatrixF};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoxError {
    #[error("character values do not multiply to 1")]
    ProductNotOne,
    #[error("character has {found} values but the presentation labels {expected} lines")]
    LengthMismatch { expected: usize, found: usize },
    #[error("character value on line {0} disagrees with its meridian word")]
    MeridianMismatch(usize),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Fox Jacobian of the relators and the column (χ(x_k) − 1), both over
/// Q(ζ_order), for the character x_k ↦ ζ_order^gen_exps[k].
pub fn fox_matrices(
    pres: &GroupPresentation,
    order: u32,
    gen_exps: &[u32],
) -> (MatrixF, Vec<Cyclo>) {
    let g = pres.generators;
    assert_eq!(gen_exps.len(), g);
    let n = order as i64;
    let mut jac = MatrixF::zeros(order, pres.relators.len(), g);
    for (r, word) in pres.relators.iter().enumerate() {
        let mut counts = vec![vec![0i64; order as usize]; g];
        let mut s: i64 = 0;
        for &x in word {
            let k = x.unsigned_abs() as usize - 1;
            let e = gen_exps[k] as i64;
            if x > 0 {
                counts[k][s as usize] += 1;
                s = (s + e).rem_euclid(n);
            } else {
                s = (s - e).rem_euclid(n);
                counts[k][s as usize] -= 1;
            }
        }
        for (k, c) in counts.iter().enumerate() {
            if c.iter().any(|&v| v != 0) {
                jac.set(r, k, Cyclo::from_power_counts(order, c));
            }
        }
    }
    let d1 = gen_exps
        .iter()
        .map(|&e| &Cyclo::root_of_unity(order, e as i64) - &Cyclo::one(order))
        .collect();
    (jac, d1)
}

/// dim H¹ of the presentation with coefficients in the rank-one system
/// x_k ↦ ζ_order^gen_exps[k]: g − rank ∂₂ − rank ∂₁.
///
/// Panics if the fundamental identity ∂₂·∂₁ = 0 fails, which would mean a
/// relator does not evaluate to 1 under the character.
pub fn twisted_h1_on_generators(pres: &GroupPresentation, order: u32, gen_exps: &[u32]) -> usize {
    let (jac, d1) = fox_matrices(pres, order, gen_exps);
    let composite = jac.mul_vec(&d1);
    assert!(
        composite.iter().all(Cyclo::is_zero),
        "Fox identity failed: relators are not trivial under the character"
    );
    let rank_d1 = usize::from(d1.iter().any(|v| !v.is_zero()));
    pres.generators - rank(&jac) - rank_d1
}

/// Exponents of the character on the generators, read from the single-letter
/// meridians and checked against every meridian word.
pub fn generator_exponents(
    pres: &GroupPresentation,
    chi: &Character,
) -> Result<Vec<u32>, FoxError> {
    pres.validate()?;
    if pres.meridians.len() != chi.d() {
        return Err(FoxError::LengthMismatch {
            expected: pres.meridians.len(),
            found: chi.d(),
        });
    }
    if !chi.product_is_one() {
        return Err(FoxError::ProductNotOne);
    }
    let n = chi.order() as i64;
    let exps: Vec<u32> = pres
        .generator_lines()?
        .into_iter()
        .map(|(line, sign)| (sign as i64 * chi.exponents()[line] as i64).rem_euclid(n) as u32)
        .collect();
    for (line, m) in pres.meridians.iter().enumerate() {
        let v: i64 = m
            .iter()
            .map(|&x| x.signum() as i64 * exps[x.unsigned_abs() as usize - 1] as i64)
            .sum();
        if v.rem_euclid(n) != chi.exponents()[line] as i64 {
            return Err(FoxError::MeridianMismatch(line));
        }
    }
    Ok(exps)
}

/// dim H¹(M, L_χ), with χ given on the lines.
pub fn twisted_h1(pres: &GroupPresentation, chi: &Character) -> Result<usize, FoxError> {
    let exps = generator_exponents(pres, chi)?;
    Ok(twisted_h1_on_generators(pres, chi.order(), &exps))
}
