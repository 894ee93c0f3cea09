use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use super::character::Character;
use super::fox::{generator_exponents, twisted_h1_on_generators, FoxError};
use super::presentation::GroupPresentation;
use super::word::{exponent_sums, inverse, product, Word};
use crate::exact::{cokernel_invariants, cyclotomic_polynomial, euler_phi, MatrixZ};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchreierError {
    #[error("generator images do not generate Z/{0}")]
    NotSurjective(u32),
    #[error("expected {expected} generator images, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Fox(#[from] FoxError),
}

/// Reidemeister–Schreier presentation of K = ker(G → Z/index).
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    /// Presentation of K; meridians are not defined for K and left empty.
    pub presentation: GroupPresentation,
    pub index: u32,
    pub epi: Vec<u32>,
    /// rep(c) for every coset c, built from positive letters.
    pub transversal: Vec<Word>,
    /// (generator, coset) of each generator y(a, c) = rep(c)·a·rep(c+ε(a))⁻¹
    /// of K.
    pub labels: Vec<(usize, u32)>,
    // y_index[a * index + c]: position in `labels`, None on tree edges
    y_index: Vec<Option<usize>>,
}

impl SubgroupPresentation {
    fn coset_after(&self, c: u32, a: usize) -> u32 {
        (c + self.epi[a]) % self.index
    }

    /// Rewrites a word of G read from coset `start` into a word of K.
    pub fn rewrite(&self, w: &[i32], start: u32) -> Word {
        let n = self.index;
        let mut c = start;
        let mut out = Vec::new();
        for &x in w {
            let a = x.unsigned_abs() as usize - 1;
            if x > 0 {
                if let Some(y) = self.y_index[a * n as usize + c as usize] {
                    out.push(y as i32 + 1);
                }
                c = self.coset_after(c, a);
            } else {
                c = (c + n - self.epi[a]) % n;
                if let Some(y) = self.y_index[a * n as usize + c as usize] {
                    out.push(-(y as i32 + 1));
                }
            }
        }
        product([out.as_slice()])
    }

    /// Exponents of the restriction to K of the character of G with the
    /// given generator exponents (mod `order`).
    pub fn restrict(&self, gen_exps: &[u32], order: u32) -> Vec<u32> {
        let n = order as i64;
        let value = |w: &[i32]| -> i64 {
            w.iter()
                .map(|&x| x.signum() as i64 * gen_exps[x.unsigned_abs() as usize - 1] as i64)
                .sum()
        };
        self.labels
            .iter()
            .map(|&(a, c)| {
                let next = self.coset_after(c, a);
                let v = value(&self.transversal[c as usize]) + gen_exps[a] as i64
                    - value(&self.transversal[next as usize]);
                v.rem_euclid(n) as u32
            })
            .collect()
    }
}

pub fn subgroup_presentation(
    pres: &GroupPresentation,
    epi: &[u32],
    index: u32,
) -> Result<SubgroupPresentation, SchreierError> {
    let g = pres.generators;
    if epi.len() != g {
        return Err(SchreierError::LengthMismatch {
            expected: g,
            found: epi.len(),
        });
    }
    let n = index.max(1);
    let epi: Vec<u32> = epi.iter().map(|&e| e % n).collect();
    let mut transversal: Vec<Option<Word>> = vec![None; n as usize];
    let mut tree = vec![false; g * n as usize];
    transversal[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0u32]);
    while let Some(c) = queue.pop_front() {
        for (a, &e) in epi.iter().enumerate() {
            let next = (c + e) % n;
            if transversal[next as usize].is_none() {
                let mut w = transversal[c as usize].clone().unwrap();
                w.push(a as i32 + 1);
                transversal[next as usize] = Some(w);
                tree[a * n as usize + c as usize] = true;
                queue.push_back(next);
            }
        }
    }
    let transversal: Vec<Word> = transversal
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(SchreierError::NotSurjective(n))?;
    let mut labels = Vec::new();
    let mut y_index = vec![None; g * n as usize];
    for a in 0..g {
        for c in 0..n {
            let k = a * n as usize + c as usize;
            if !tree[k] {
                y_index[k] = Some(labels.len());
                labels.push((a, c));
            }
        }
    }
    let mut sub = SubgroupPresentation {
        presentation: GroupPresentation {
            generators: labels.len(),
            relators: Vec::new(),
            meridians: Vec::new(),
        },
        index: n,
        epi,
        transversal,
        labels,
        y_index,
    };
    let relators: Vec<Word> = pres
        .relators
        .iter()
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .map(|(r, c)| sub.rewrite(r, c))
        .collect();
    sub.presentation.relators = relators;
    Ok(sub)
}

/// dim H¹(M, L_χ) ≤ dim H¹(F, p*L_χ) for one character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PullbackCheck {
    pub character: Character,
    pub dim_m: usize,
    pub dim_f: usize,
    pub holds: bool,
}

/// Deck-group eigenspaces of one order: the Φ_order-primary part of
/// H₁(K, Q) has dimension `total`, split evenly over the primitive roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderDims {
    pub order: u32,
    pub total: usize,
    pub per_root: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverMonodromy {
    pub index: u32,
    pub b1: usize,
    pub torsion: Vec<BigInt>,
    pub character_dims: Vec<OrderDims>,
    pub trivial: bool,
    pub pullback_checks: Vec<PullbackCheck>,
}

/// Action of the deck generator (conjugation by rep(1)) on H₁(K, Q), its
/// eigenspace dimensions by order, and pullback inequalities for the
/// supplied characters of G.
pub fn cover_monodromy(
    pres: &GroupPresentation,
    epi: &[u32],
    index: u32,
    characters: &[Character],
) -> Result<CoverMonodromy, SchreierError> {
    let sub = subgroup_presentation(pres, epi, index)?;
    let n_y = sub.presentation.generators;
    let rel = sub.presentation.relation_matrix();
    let ab = cokernel_invariants(&rel);
    let d = sub.index;
    // Row y of `action` holds the exponent sums of s·y·s⁻¹.
    let s = sub.transversal[(1 % d) as usize].clone();
    let s_inv = inverse(&s);
    let rows: Vec<Vec<i64>> = sub
        .labels
        .iter()
        .map(|&(a, c)| {
            let next = sub.coset_after(c, a);
            let y_word = product([
                sub.transversal[c as usize].as_slice(),
                &[a as i32 + 1],
                &inverse(&sub.transversal[next as usize]),
            ]);
            let conj = product([s.as_slice(), &y_word, &s_inv]);
            exponent_sums(&sub.rewrite(&conj, 0), n_y)
        })
        .collect();
    let action = MatrixZ::from_rows(n_y, &rows);
    let mut character_dims = Vec::new();
    let mut powers = vec![MatrixZ::identity(n_y)];
    for e in (1..=d).filter(|e| d % e == 0) {
        let phi = cyclotomic_polynomial(e);
        while powers.len() < phi.len() {
            let next = powers.last().unwrap().mul(&action);
            powers.push(next);
        }
        let mut poly = MatrixZ::zeros(n_y, n_y);
        for (k, &c) in phi.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..n_y {
                for j in 0..n_y {
                    let v = poly.get(i, j) + BigInt::from(c) * powers[k].get(i, j);
                    poly.set(i, j, v);
                }
            }
        }
        let total = n_y - poly.vstack(&rel).rank();
        character_dims.push(OrderDims {
            order: e,
            total,
            per_root: total / euler_phi(e),
        });
    }
    debug_assert_eq!(
        character_dims.iter().map(|o| o.total).sum::<usize>(),
        ab.free_rank
    );
    let trivial = character_dims.iter().all(|o| o.order == 1 || o.total == 0);
    let mut pullback_checks = Vec::new();
    for chi in characters {
        let exps = generator_exponents(pres, chi)?;
        let dim_m = twisted_h1_on_generators(pres, chi.order(), &exps);
        let restricted = sub.restrict(&exps, chi.order());
        let dim_f = twisted_h1_on_generators(&sub.presentation, chi.order(), &restricted);
        pullback_checks.push(PullbackCheck {
            character: chi.clone(),
            dim_m,
            dim_f,
            holds: dim_m <= dim_f,
        });
    }
    Ok(CoverMonodromy {
        index: d,
        b1: ab.free_rank,
        torsion: ab.torsion,
        character_dims,
        trivial,
        pullback_checks,
    })
}

/// Total-degree epimorphism: every generator maps to 1.
pub fn total_degree_epi(pres: &GroupPresentation) -> Vec<u32> {
    vec![1; pres.generators]
}

/// Histogram of per-order dimensions, keyed by order.
pub fn dims_by_order(cm: &CoverMonodromy) -> BTreeMap<u32, usize> {
    cm.character_dims.iter().map(|o| (o.order, o.per_root)).collect()
}
