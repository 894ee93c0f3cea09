use serde::Serialize;
use thiserror::Error;

use super::character::Character;
use super::fox::{twisted_h1, FoxError};
use super::presentation::GroupPresentation;
use super::wiring::{wiring_diagram, WiringError};
use super::randell_presentation;
use crate::arrgeo::Arrangement;
use crate::exact::{euler_phi, RootOfUnity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EigenError {
    #[error("{0}; supply a presentation file to compute eigenspaces")]
    Wiring(#[from] WiringError),
    #[error(transparent)]
    Fox(#[from] FoxError),
}

impl EigenError {
    pub fn is_not_real(&self) -> bool {
        matches!(self, EigenError::Wiring(WiringError::NotReal { .. }))
    }
}

/// dim H¹(F)_λ for the primitive roots of one order (equal across the
/// Galois orbit).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenspaceEntry {
    pub order: u32,
    pub roots: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenspaceReport {
    pub d: usize,
    pub entries: Vec<EigenspaceEntry>,
    pub b1_f: usize,
    /// dim H¹(F)_1, the weight-2 part.
    pub weight2_dim: usize,
    /// Σ over λ ≠ 1, the weight-1 part.
    pub weight1_dim: usize,
}

impl EigenspaceReport {
    pub fn dim_at(&self, lambda: RootOfUnity) -> usize {
        self.entries
            .iter()
            .find(|e| e.order == lambda.order())
            .map_or(0, |e| e.dim)
    }

    pub fn monodromy_trivial(&self) -> bool {
        self.weight1_dim == 0
    }
}

/// dim H¹(F)_λ = dim H¹(M, L_λ) with L_λ of monodromy λ about every line.
pub fn eigenspace_dim(pres: &GroupPresentation, lambda: RootOfUnity) -> Result<usize, FoxError> {
    twisted_h1(pres, &Character::diagonal(pres.meridians.len(), lambda))
}

/// Eigenspaces of the algebraic monodromy on H¹(F) from a presentation
/// whose meridians label all d lines. One rank computation per divisor of
/// d; Galois-conjugate roots share the dimension.
pub fn milnor_eigenspaces_from_presentation(
    pres: &GroupPresentation,
) -> Result<EigenspaceReport, FoxError> {
    let d = pres.meridians.len();
    let mut entries = Vec::new();
    for e in (1..=d as u32).filter(|e| (d as u32).is_multiple_of(*e)) {
        let dim = eigenspace_dim(pres, RootOfUnity::new(e, 1))?;
        entries.push(EigenspaceEntry {
            order: e,
            roots: euler_phi(e),
            dim,
        });
    }
    let weight2_dim = entries[0].dim;
    let weight1_dim = entries[1..].iter().map(|e| e.roots * e.dim).sum();
    Ok(EigenspaceReport {
        d,
        entries,
        b1_f: weight1_dim + weight2_dim,
        weight2_dim,
        weight1_dim,
    })
}

/// Eigenspaces for a complexified real arrangement, through its wiring
/// diagram deconed at `infinity_line`.
pub fn milnor_eigenspaces(
    arr: &Arrangement,
    infinity_line: usize,
) -> Result<EigenspaceReport, EigenError> {
    let wd = wiring_diagram(arr, infinity_line, 0)?;
    Ok(milnor_eigenspaces_from_presentation(&randell_presentation(&wd))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrgeo::builtin;

    fn report(name: &str) -> EigenspaceReport {
        let arr = builtin(name).unwrap();
        milnor_eigenspaces(&arr, arr.d() - 1).unwrap()
    }

    #[test]
    fn braid() {
        let r = report("A3");
        let dims: Vec<(u32, usize)> = r.entries.iter().map(|e| (e.order, e.dim)).collect();
        assert_eq!(dims, vec![(1, 5), (2, 0), (3, 1), (6, 0)]);
        assert_eq!(r.b1_f, 7);
        assert_eq!(r.weight1_dim, 2);
    }

    #[test]
    fn b3_trivial() {
        let r = report("B3");
        assert_eq!(r.b1_f, 8);
        assert!(r.monodromy_trivial());
    }

    #[test]
    fn pappus() {
        let r = report("Pappus");
        assert_eq!(r.dim_at(RootOfUnity::new(3, 1)), 1);
        assert_eq!(r.dim_at(RootOfUnity::new(9, 1)), 0);
        assert_eq!(r.b1_f, 10);
    }

    #[test]
    fn hesse_needs_presentation() {
        let arr = builtin("Hesse").unwrap();
        assert!(milnor_eigenspaces(&arr, 11).unwrap_err().is_not_real());
    }
}
