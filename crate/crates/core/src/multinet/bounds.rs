use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use super::pencil::PencilRealization;
use super::structure::MultinetStructure;
use crate::exact::RootOfUnity;

/// dim H¹(F)_λ ≥ bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MonodromyBound {
    pub lambda: RootOfUnity,
    pub bound: usize,
}

/// Eigenspace lower bounds coming from a multinet with a realized pencil.
///
/// For every λ ≠ 1 with λ^k = 1 the rank-one local system pulled back from
/// the pencil has monodromy λ^μ(i) about line i (and 1 off the support).
/// When that is one constant λ₀ ≠ 1 with λ₀^d = 1, it is the local system of
/// the λ₀-eigenspace and contributes dim H¹(F)_λ₀ ≥ k − 2.
pub fn monodromy_lower_bounds(mn: &MultinetStructure, d: usize) -> Vec<MonodromyBound> {
    let k = mn.k() as u32;
    let mut out: BTreeMap<RootOfUnity, usize> = BTreeMap::new();
    for j in 1..k {
        let mut values = (0..d).map(|i| (j as u64 * mn.mu(i) as u64 % k as u64) as i64);
        let first = values.next().unwrap_or(0);
        if values.any(|v| v != first) {
            continue;
        }
        let lambda0 = RootOfUnity::new(k, first);
        if lambda0.is_one() || !(d as u64).is_multiple_of(lambda0.order() as u64) {
            continue;
        }
        out.insert(lambda0, mn.k() - 2);
    }
    out.into_iter()
        .map(|(lambda, bound)| MonodromyBound { lambda, bound })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    NontrivialMonodromy,
    NoConclusion,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("multinet is not reduced (μ takes values other than 1)")]
    NotReduced,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonodromyCertificate {
    pub classes: Vec<Vec<usize>>,
    pub k: usize,
    pub e: u32,
    pub reduced: bool,
    pub full_support: bool,
    pub span_dim: usize,
    pub bounds: Vec<MonodromyBound>,
    /// Dimension of the isotropic subspace I = f*H¹(S) in H¹(M).
    pub dim_i: usize,
    /// Lower bound for dim J, J = f'*H¹(S') in H¹(F).
    pub dim_j_lower: usize,
    pub conclusion: Conclusion,
    pub notes: Vec<String>,
}

/// Certificate that the algebraic monodromy on H¹(F) is not the identity.
///
/// Premises: a reduced multinet partitioning all `d` lines and a realized
/// pencil. A reduced multinet on a proper subarrangement yields
/// `NoConclusion`.
pub fn nontriviality_certificate(
    mn: &MultinetStructure,
    pencil: &PencilRealization,
    bounds: &[MonodromyBound],
    d: usize,
) -> Result<MonodromyCertificate, CertificateError> {
    if !mn.is_reduced() {
        return Err(CertificateError::NotReduced);
    }
    let k = mn.k();
    let full_support = mn.is_full_support(d);
    let realized = pencil.span_dim == 2;
    let conclusion = if full_support && realized {
        Conclusion::NontrivialMonodromy
    } else {
        Conclusion::NoConclusion
    };
    let mut notes = Vec::new();
    match conclusion {
        Conclusion::NontrivialMonodromy => {
            notes.push(format!(
                "pencil map f: M -> P^1 minus {k} points gives a non-translated component W of V_1(M) with tangent space I, dim I = {}",
                k - 1
            ));
            notes.push(format!(
                "on the Milnor fiber there is a non-translated component W' of V_1(F) strictly containing p^*(W), with dim T_1W' >= {}",
                (k - 1) * (k - 1)
            ));
            notes.push(
                "a trivial monodromy would make p^*(W) a component of V_1(F), so h^* != id on H^1(F)".to_string(),
            );
            notes.push(format!(
                "the admissible map F -> S' inducing W' is not a rational pencil: b_1 of the compactified base is at least {}",
                (k - 1) * (k - 2)
            ));
        }
        Conclusion::NoConclusion => {
            if !full_support {
                notes.push(format!(
                    "multinet is supported on {} of {d} lines; the class products do not account for the whole defining polynomial",
                    mn.support().len()
                ));
            }
            if !realized {
                notes.push(format!(
                    "class products span dimension {}, not a pencil",
                    pencil.span_dim
                ));
            }
        }
    }
    Ok(MonodromyCertificate {
        classes: mn.classes().to_vec(),
        k,
        e: mn.e(),
        reduced: true,
        full_support,
        span_dim: pencil.span_dim,
        bounds: bounds.to_vec(),
        dim_i: k - 1,
        dim_j_lower: (k - 1) * (k - 1),
        conclusion,
        notes,
    })
}

/// Per-class fiber multiplicities m_c = gcd{μ(i) : i ∈ A_c} and the count
/// n = Π_{m_c > 1} m_c.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectionCount {
    pub class_multiplicities: Vec<u32>,
    pub n: u64,
}

pub fn direction_count(mn: &MultinetStructure) -> DirectionCount {
    let class_multiplicities: Vec<u32> = mn
        .classes()
        .iter()
        .map(|c| c.iter().fold(0u32, |g, &i| g.gcd(&mn.mu(i))))
        .collect();
    let n = class_multiplicities
        .iter()
        .filter(|&&m| m > 1)
        .map(|&m| m as u64)
        .product();
    DirectionCount {
        class_multiplicities,
        n,
    }
}
