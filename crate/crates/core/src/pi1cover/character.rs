use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exact::{Cyclo, RootOfUnity};

/// Rank-one torsion character of π₁(M): line i ↦ ζ_order^exponents[i].
///
/// The order is kept exact (the gcd of order and all exponents is 1). The
/// product condition Π λᵢ = 1 is not enforced on construction so that
/// malformed input can be reported by the operations that need it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "RawCharacter", into = "RawCharacter")]
pub struct Character {
    order: u32,
    exponents: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawCharacter {
    order: u32,
    exponents: Vec<i64>,
}

impl From<RawCharacter> for Character {
    fn from(raw: RawCharacter) -> Self {
        Character::new(raw.order.max(1), &raw.exponents)
    }
}

impl From<Character> for RawCharacter {
    fn from(c: Character) -> Self {
        RawCharacter {
            order: c.order,
            exponents: c.exponents.iter().map(|&e| e as i64).collect(),
        }
    }
}

impl Character {
    pub fn new(order: u32, exponents: &[i64]) -> Self {
        assert!(order >= 1, "character order must be positive");
        let mut exps: Vec<u32> = exponents
            .iter()
            .map(|&e| e.rem_euclid(order as i64) as u32)
            .collect();
        let g = exps.iter().fold(order, |g, &e| g.gcd(&e));
        for e in &mut exps {
            *e /= g;
        }
        Character {
            order: order / g,
            exponents: exps,
        }
    }

    pub fn trivial(d: usize) -> Self {
        Character {
            order: 1,
            exponents: vec![0; d],
        }
    }

    /// λ on every one of `d` lines.
    pub fn diagonal(d: usize, lambda: RootOfUnity) -> Self {
        Character::new(lambda.order(), &vec![lambda.exponent() as i64; d])
    }

    pub fn from_roots(roots: &[RootOfUnity]) -> Self {
        let order = roots.iter().fold(1u32, |n, r| n.lcm(&r.order()));
        let exps: Vec<i64> = roots.iter().map(|r| r.exponent_in(order) as i64).collect();
        Character::new(order, &exps)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn d(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn product_is_one(&self) -> bool {
        self.exponents.iter().map(|&e| e as u64).sum::<u64>() % self.order as u64 == 0
    }

    pub fn root(&self, i: usize) -> RootOfUnity {
        RootOfUnity::new(self.order, self.exponents[i] as i64)
    }

    pub fn value(&self, i: usize) -> Cyclo {
        Cyclo::root_of_unity(self.order, self.exponents[i] as i64)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Character) -> Character {
        assert_eq!(self.d(), other.d());
        let n = self.order.lcm(&other.order);
        let (a, b) = (n / self.order, n / other.order);
        let exps: Vec<i64> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&x, &y)| (x * a + y * b) as i64)
            .collect();
        Character::new(n, &exps)
    }

    /// Image under σ_k: ζ ↦ ζ^k.
    pub fn galois(&self, k: u32) -> Character {
        let exps: Vec<i64> = self.exponents.iter().map(|&e| e as i64 * k as i64).collect();
        Character::new(self.order, &exps)
    }
}
