use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteinError {
    #[error("degree e must be at least 1")]
    ZeroDegree,
    #[error("s_{k} given but only 1 <= k < e = {e} is allowed")]
    IndexOutOfRange { k: u32, e: u32 },
}

/// Data of a finite map q: S' → S of degree e between smooth curves:
/// χ(S) and s_k = number of points of S with exactly k preimages, k < e.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinData {
    e: u32,
    chi_s: i64,
    s: BTreeMap<u32, u64>,
}

impl SteinData {
    pub fn new(e: u32, chi_s: i64, s: BTreeMap<u32, u64>) -> Result<Self, SteinError> {
        if e == 0 {
            return Err(SteinError::ZeroDegree);
        }
        if let Some(&k) = s.keys().find(|&&k| k == 0 || k >= e) {
            return Err(SteinError::IndexOutOfRange { k, e });
        }
        Ok(SteinData { e, chi_s, s })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn chi_s(&self) -> i64 {
        self.chi_s
    }

    pub fn s(&self) -> &BTreeMap<u32, u64> {
        &self.s
    }
}

/// Returns (χ(S'), χ(S_e)), where S_e ⊂ S is the locus with e preimages.
///
/// χ(S') is evaluated twice, once through χ(S_e) and once through χ(S)
/// directly; the two must agree.
pub fn stein_chi(sd: &SteinData) -> (i64, i64) {
    let e = sd.e as i64;
    let chi_s = sd.chi_s;
    let total: i64 = sd.s.values().map(|&v| v as i64).sum();
    let chi_se = chi_s - total;
    let via_se = chi_s
        + (e - 1) * chi_se
        + sd.s.iter().map(|(&k, &v)| (k as i64 - 1) * v as i64).sum::<i64>();
    let via_s = chi_s
        + (e - 1) * chi_s
        + sd.s.iter().map(|(&k, &v)| (k as i64 - e) * v as i64).sum::<i64>();
    assert_eq!(via_se, via_s, "Euler characteristic identities disagree");
    (via_s, chi_se)
}
