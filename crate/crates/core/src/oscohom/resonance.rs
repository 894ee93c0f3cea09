use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use super::os2::{H1Vector, Os2};
use crate::arrgeo::Lattice;
use crate::exact::{
    in_span, rank_and_kernel, smith_decomposition, Cyclo, MatrixF, MatrixZ, Rational,
};
use crate::multinet::MultinetStructure;
use crate::pi1cover::Character;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Local component at a point of multiplicity ≥ 3.
    Local { point: usize, lines: Vec<usize> },
    /// Component f*H¹(S) from a multinet with the given classes and μ.
    Multinet {
        classes: Vec<Vec<usize>>,
        mu: Vec<(usize, u32)>,
    },
}

/// Linear component of R¹₁(M).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResonanceComponent {
    pub dimension: usize,
    pub provenance: Provenance,
    pub span: Vec<H1Vector>,
    pub defined_over: u32,
}

impl ResonanceComponent {
    fn new(span: Vec<H1Vector>, provenance: Provenance) -> Self {
        let defined_over = Cyclo::common_order(span.iter().flat_map(|v| v.coords()));
        ResonanceComponent {
            dimension: span.len(),
            provenance,
            span,
            defined_over,
        }
    }

    fn rows(&self) -> Vec<Vec<Cyclo>> {
        self.span.iter().map(|v| v.coords().to_vec()).collect()
    }

    pub fn contains(&self, v: &H1Vector) -> bool {
        in_span(self.defined_over, &self.rows(), v.coords())
    }

    /// self ⊆ other as subspaces.
    pub fn is_subspace_of(&self, other: &ResonanceComponent) -> bool {
        self.span.iter().all(|v| other.contains(v))
    }

    /// Cup product vanishes on every pair of spanning vectors.
    pub fn is_isotropic(&self, os: &Os2) -> bool {
        self.span.iter().enumerate().all(|(a, u)| {
            self.span[a + 1..]
                .iter()
                .all(|v| os.cup(u.coords(), v.coords()).iter().all(Cyclo::is_zero))
        })
    }
}

/// Local components at points of multiplicity ≥ 3 followed by multinet
/// components, with duplicates and contained components removed (the
/// earlier of two equal subspaces is kept).
pub fn resonance_components(
    lattice: &Lattice,
    multinets: &[MultinetStructure],
) -> Vec<ResonanceComponent> {
    let d = lattice.d();
    let mut candidates = Vec::new();
    for (x, p) in lattice.points().iter().enumerate() {
        if p.multiplicity() < 3 {
            continue;
        }
        let a = p.anchor();
        let span = p.incident[1..]
            .iter()
            .map(|&i| H1Vector::difference(d, i, a))
            .collect();
        candidates.push(ResonanceComponent::new(
            span,
            Provenance::Local {
                point: x,
                lines: p.incident.clone(),
            },
        ));
    }
    for mn in multinets {
        let v: Vec<Vec<Cyclo>> = mn
            .classes()
            .iter()
            .map(|class| {
                let mut v = vec![Cyclo::zero(1); d];
                for &i in class {
                    v[i] = Cyclo::from_int(1, mn.mu(i) as i64);
                }
                v
            })
            .collect();
        let span = v[1..]
            .iter()
            .map(|vj| {
                let diff = vj.iter().zip(&v[0]).map(|(a, b)| a - b).collect();
                H1Vector::new(diff).expect("class weights agree")
            })
            .collect();
        candidates.push(ResonanceComponent::new(
            span,
            Provenance::Multinet {
                classes: mn.classes().to_vec(),
                mu: mn.mu_pairs().to_vec(),
            },
        ));
    }
    let keep: Vec<bool> = (0..candidates.len())
        .map(|a| {
            !candidates.iter().enumerate().any(|(b, other)| {
                b != a
                    && candidates[a].is_subspace_of(other)
                    && (other.dimension > candidates[a].dimension || b < a)
            })
        })
        .collect();
    candidates
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorsionError {
    #[error("component span has non-rational coordinates")]
    IrrationalSpan,
}

/// Nontrivial characters exp(2πi·a) for a ∈ U ∩ (1/N)·Z^d, U the span of
/// the component.
pub fn torsion_points(
    component: &ResonanceComponent,
    n: u32,
) -> Result<Vec<Character>, TorsionError> {
    let basis = integral_basis(component)?;
    let d = component.span.first().map_or(0, H1Vector::d);
    let k = basis.len();
    let mut out = BTreeSet::new();
    if n <= 1 || k == 0 {
        return Ok(Vec::new());
    }
    let big_n = BigInt::from(n);
    let mut coeffs = vec![0u32; k];
    loop {
        let exps: Vec<i64> = (0..d)
            .map(|i| {
                let s: BigInt = coeffs
                    .iter()
                    .zip(&basis)
                    .map(|(&c, b)| BigInt::from(c) * &b[i])
                    .sum();
                let r = s.mod_floor(&big_n);
                i64::try_from(r).expect("residue fits")
            })
            .collect();
        let chi = Character::new(n, &exps);
        if !chi.is_trivial() {
            out.insert(chi);
        }
        // odometer over (Z/N)^k
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(out.into_iter().collect());
            }
            coeffs[pos] += 1;
            if coeffs[pos] < n {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
    }
}

/// Z-basis of U ∩ Z^d.
fn integral_basis(component: &ResonanceComponent) -> Result<Vec<Vec<BigInt>>, TorsionError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for v in &component.span {
        let r: Option<Vec<Rational>> = v.coords().iter().map(Cyclo::to_rational).collect();
        rows.push(r.ok_or(TorsionError::IrrationalSpan)?);
    }
    let d = rows.first().map_or(0, Vec::len);
    // Rows of `perp` span U^⊥; U ∩ Z^d is the integer kernel of `perp`.
    let (_, perp) = rank_and_kernel(&MatrixF::from_rationals(&rows));
    let perp_int: Vec<Vec<BigInt>> = perp
        .iter()
        .map(|v| {
            let r: Vec<Rational> = v.iter().map(|c| c.to_rational().unwrap()).collect();
            clear_denominators(&r)
        })
        .collect();
    if perp_int.is_empty() {
        return Ok((0..d)
            .map(|i| (0..d).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect());
    }
    let c = MatrixZ::from_rows(d, &perp_int);
    let snf = smith_decomposition(&c);
    let r = snf.diagonal.iter().filter(|x| !x.is_zero()).count();
    Ok((r..d)
        .map(|j| (0..d).map(|i| snf.right.get(i, j).clone()).collect())
        .collect())
}

fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.abs().is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}
