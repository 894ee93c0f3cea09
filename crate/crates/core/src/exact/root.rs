use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::cyclo::Cyclo;

/// ζ_order^exponent, stored with gcd(order, exponent) = 1 so that `order`
/// is the exact multiplicative order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    order: u32,
    exponent: u32,
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exponent) {
            (1, _) => write!(f, "1"),
            (n, 1) => write!(f, "ζ_{n}"),
            (n, e) => write!(f, "ζ_{n}^{e}"),
        }
    }
}

impl RootOfUnity {
    pub fn new(order: u32, exponent: i64) -> Self {
        assert!(order >= 1, "root of unity order must be positive");
        let e = exponent.rem_euclid(order as i64) as u32;
        let g = order.gcd(&e);
        RootOfUnity {
            order: order / g,
            exponent: e / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity {
            order: 1,
            exponent: 0,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn pow(&self, k: i64) -> Self {
        RootOfUnity::new(self.order, self.exponent as i64 * k)
    }

    pub fn to_cyclo(&self) -> Cyclo {
        Cyclo::root_of_unity(self.order, self.exponent as i64)
    }

    /// Exponent of this root as a power of ζ_n; `n` must be a multiple of
    /// the order.
    pub fn exponent_in(&self, n: u32) -> u32 {
        assert!(n.is_multiple_of(self.order), "ζ_{} is not an {n}-th root", self.order);
        self.exponent * (n / self.order)
    }

    /// All primitive n-th roots of unity, by exponent.
    pub fn primitive(n: u32) -> Vec<RootOfUnity> {
        (0..n)
            .filter(|&k| n.gcd(&k) == 1)
            .map(|k| RootOfUnity::new(n, k as i64))
            .collect()
    }
}
