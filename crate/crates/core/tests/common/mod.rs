#![allow(dead_code)]

use arrangement_core::arrgeo::{builtin, Arrangement};
use arrangement_core::exact::{Cyclo, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub const REAL_CATALOG: &[&str] = &["A3", "B3", "Pappus"];
pub const CATALOG: &[&str] = &["A3", "B3", "Pappus", "Hesse", "Ceva(2)", "Ceva(3)", "Ceva(4)"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn arr(name: &str) -> Arrangement {
    builtin(name).unwrap()
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(-9..=9);
    let d: i64 = rng.gen_range(1..=5);
    Rational::new(n.into(), d.into())
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

/// Random element of Q(ζ_order) with small coefficients.
pub fn small_cyclo(rng: &mut ChaCha8Rng, order: u32) -> Cyclo {
    let coeffs: Vec<Rational> = (0..order.max(1)).map(|_| small_rational(rng)).collect();
    Cyclo::from_coeffs(order, &coeffs)
}

pub fn nonzero_cyclo(rng: &mut ChaCha8Rng, order: u32) -> Cyclo {
    loop {
        let c = small_cyclo(rng, order);
        if !c.is_zero() {
            return c;
        }
    }
}
