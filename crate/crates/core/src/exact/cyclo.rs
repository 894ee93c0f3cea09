//! Elements of the cyclotomic field Q(ζ_N), stored in the power basis of
//! Q[x]/Φ_N(x) with a single common denominator.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

fn phi_table() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static TABLE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_table().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_m for every proper divisor m of n.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for m in 1..n {
        if n.is_multiple_of(m) {
            let divisor = cyclotomic_polynomial(m);
            poly = divide_monic(&poly, &divisor);
        }
    }
    let poly = Arc::new(poly);
    phi_table().write().unwrap().insert(n, poly.clone());
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Euler's totient, i.e. the degree of Q(ζ_n) over Q.
pub fn euler_phi(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

pub fn lcm_order(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Reduces an integer polynomial modulo Φ_n in place and truncates it to
/// length φ(n).
fn reduce_mod_phi(poly: &mut Vec<BigInt>, n: u32) {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[k]);
            for (j, &p) in phi[..deg].iter().enumerate() {
                if p != 0 {
                    poly[k - deg + j] -= &c * p;
                }
            }
        }
    }
    poly.resize(deg, BigInt::zero());
}

#[derive(Clone, Debug)]
pub struct Cyclo {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclo {
    fn from_parts(order: u32, mut num: Vec<BigInt>, den: BigInt) -> Self {
        reduce_mod_phi(&mut num, order);
        let mut c = Cyclo { order, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero(order: u32) -> Self {
        Cyclo {
            order,
            num: vec![BigInt::zero(); euler_phi(order)],
            den: BigInt::one(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        let mut c = Self::zero(order);
        c.num[0] = BigInt::from(v);
        c
    }

    pub fn from_rational(order: u32, r: &Rational) -> Self {
        let mut num = vec![BigInt::zero(); euler_phi(order)];
        num[0] = r.numer().clone();
        let mut c = Cyclo {
            order,
            num,
            den: r.denom().clone(),
        };
        c.normalize();
        c
    }

    /// Builds Σ coeffs[i]·ζ^i (any length; reduced modulo Φ_N).
    pub fn from_coeffs(order: u32, coeffs: &[Rational]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_parts(order, num, den)
    }

    /// Σ counts[e]·ζ_N^e for exponents e = 0..counts.len().
    pub fn from_power_counts(order: u32, counts: &[i64]) -> Self {
        let num = counts.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_parts(order, num, BigInt::one())
    }

    /// ζ_N^k.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut num = vec![BigInt::zero(); e + 1];
        num[e] = BigInt::one();
        Self::from_parts(order, num, BigInt::one())
    }

    pub fn zeta(order: u32) -> Self {
        Self::root_of_unity(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coefficients, length φ(N).
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Image under Q(ζ_N) ⊂ Q(ζ_M); `target` must be a multiple of the order.
    pub fn embed(&self, target: u32) -> Cyclo {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(self.order),
            "cannot embed Q(ζ_{}) into Q(ζ_{target})",
            self.order
        );
        let step = (target / self.order) as usize;
        let mut num = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            num[i * step] = c.clone();
        }
        Self::from_parts(target, num, self.den.clone())
    }

    fn common(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        let n = lcm_order(a.order, b.order);
        (a.embed(n), b.embed(n))
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            let r = self.to_rational().unwrap().recip();
            return Some(Cyclo::from_rational(self.order, &r));
        }
        // Extended Euclid over Q[x] for a·s + Φ·t = 1.
        let phi: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        let a = poly_trim(self.coeffs());
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Φ is irreducible and a ≠ 0 mod Φ.
        let c = r1[0].recip();
        let s: Vec<Rational> = s1.into_iter().map(|x| x * &c).collect();
        Some(Cyclo::from_coeffs(self.order, &s))
    }

    pub fn pow(&self, mut e: u64) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Field automorphism ζ ↦ ζ^k, gcd(k, N) = 1.
    pub fn galois(&self, k: u32) -> Cyclo {
        let n = self.order as u64;
        let mut counts_num = vec![BigInt::zero(); self.order as usize];
        for (i, c) in self.num.iter().enumerate() {
            let e = ((i as u64) * (k as u64) % n) as usize;
            counts_num[e] += c;
        }
        Self::from_parts(self.order, counts_num, self.den.clone())
    }

    /// lcm of the orders of `values`: the smallest field holding all of them.
    pub fn common_order<'a, I: IntoIterator<Item = &'a Cyclo>>(values: I) -> u32 {
        values.into_iter().fold(1, |acc, c| lcm_order(acc, c.order))
    }

    pub fn div(&self, rhs: &Cyclo) -> Option<Cyclo> {
        rhs.inv().map(|r| self * &r)
    }
}

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    poly_trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    if a.len() <= db {
        return (vec![Rational::zero()], poly_trim(rem));
    }
    let mut quot = vec![Rational::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                rem[k + j] -= &c * y;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    (poly_trim(quot), poly_trim(rem))
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = Cyclo::common(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclo {}

impl Ord for Cyclo {
    /// Lexicographic on power-basis coefficients in the common field.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = Cyclo::common(self, other);
        for (x, y) in a.num.iter().zip(&b.num) {
            let ord = (x * &b.den).cmp(&(y * &a.den));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Cyclo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        if self.order != rhs.order {
            let (a, b) = Cyclo::common(self, rhs);
            return &a + &b;
        }
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(x, y)| x + y).collect();
            let mut c = Cyclo {
                order: self.order,
                num,
                den: self.den.clone(),
            };
            c.normalize();
            return c;
        }
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(x, y)| x * &rhs.den + y * &self.den)
            .collect();
        let mut c = Cyclo {
            order: self.order,
            num,
            den: &self.den * &rhs.den,
        };
        c.normalize();
        c
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            order: self.order,
            num: self.num.iter().map(|x| -x).collect(),
            den: self.den.clone(),
        }
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.order != rhs.order {
            let (a, b) = Cyclo::common(self, rhs);
            return &a * &b;
        }
        if self.is_zero() || rhs.is_zero() {
            return Cyclo::zero(self.order);
        }
        let n = self.num.len();
        if n == 1 {
            let mut c = Cyclo {
                order: self.order,
                num: vec![&self.num[0] * &rhs.num[0]],
                den: &self.den * &rhs.den,
            };
            c.normalize();
            return c;
        }
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Cyclo::from_parts(self.order, prod, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·ζ{}", self.order)?,
                _ => write!(f, "({c})·ζ{}^{i}", self.order)?,
            }
        }
        Ok(())
    }
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Cyclo", 2)?;
        st.serialize_field("order", &self.order)?;
        let coeffs: Vec<String> = self.coeffs().iter().map(rational_to_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CycloRepr {
    Full { order: u32, coeffs: Vec<NumOrStr> },
    Scalar(NumOrStr),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NumOrStr {
    Int(i64),
    Str(String),
}

impl NumOrStr {
    fn to_rational(&self) -> Result<Rational, String> {
        match self {
            NumOrStr::Int(v) => Ok(Rational::from_integer(BigInt::from(*v))),
            NumOrStr::Str(s) => parse_rational(s),
        }
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    /// Accepts `{"order": N, "coeffs": [...]}`, or a bare rational as a
    /// string or integer (order 1).
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match CycloRepr::deserialize(deserializer)? {
            CycloRepr::Full { order, coeffs } => {
                if order == 0 {
                    return Err(de::Error::custom("cyclotomic order must be positive"));
                }
                let phi = euler_phi(order);
                if coeffs.len() > phi {
                    return Err(de::Error::custom(format!(
                        "order {order} takes at most {phi} coefficients, got {}",
                        coeffs.len()
                    )));
                }
                let rs = coeffs
                    .iter()
                    .map(NumOrStr::to_rational)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(de::Error::custom)?;
                Ok(Cyclo::from_coeffs(order, &rs))
            }
            CycloRepr::Scalar(v) => {
                let r = v.to_rational().map_err(de::Error::custom)?;
                Ok(Cyclo::from_rational(1, &r))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(15), 8);
    }

    #[test]
    fn roots_of_unity_identities() {
        for n in 1..=15u32 {
            let z = Cyclo::zeta(n);
            assert!(z.pow(n as u64).is_one(), "ζ_{n}^{n} != 1");
        }
        for p in [2u32, 3, 5, 7, 11, 13] {
            let mut s = Cyclo::zero(p);
            for j in 0..p {
                s = &s + &Cyclo::root_of_unity(p, j as i64);
            }
            assert!(s.is_zero(), "Σ ζ_{p}^j != 0");
        }
    }

    #[test]
    fn inverse_and_division() {
        let z = Cyclo::zeta(5);
        let a = &Cyclo::from_int(5, 2) + &z;
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        let h = Cyclo::from_rational(7, &q(3, 4));
        assert!((&h * &h.inv().unwrap()).is_one());
        assert!(Cyclo::zero(3).inv().is_none());
    }

    #[test]
    fn embedding_respects_equality() {
        let w = Cyclo::zeta(3);
        let w6 = w.embed(6);
        assert_eq!(w6, Cyclo::root_of_unity(6, 2));
        assert_eq!(w, Cyclo::root_of_unity(12, 4));
        // ζ_4 · ζ_3 = ζ_12^7
        assert_eq!(&Cyclo::zeta(4) * &w, Cyclo::root_of_unity(12, 7));
        assert_eq!(Cyclo::root_of_unity(2, 1), Cyclo::from_int(1, -1));
    }

    #[test]
    fn canonical_denominators() {
        let a = Cyclo::from_coeffs(3, &[q(2, 4), q(1, 2)]);
        assert_eq!(a.coeffs(), vec![q(1, 2), q(1, 2)]);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z, Cyclo::zero(3));
    }

    #[test]
    fn galois_conjugation() {
        let z = Cyclo::zeta(7);
        assert_eq!(z.galois(3), Cyclo::root_of_unity(7, 3));
        let x = &Cyclo::from_int(7, 1) + &z;
        let y = &x * &x;
        assert_eq!(y.galois(2), &x.galois(2) * &x.galois(2));
    }

    #[test]
    fn serde_round_trip() {
        let a = Cyclo::from_coeffs(3, &[q(-1, 2), q(3, 1)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"order":3,"coeffs":["-1/2","3"]}"#);
        let b: Cyclo = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        let c: Cyclo = serde_json::from_str("\"5/3\"").unwrap();
        assert_eq!(c.to_rational(), Some(q(5, 3)));
        let d: Cyclo = serde_json::from_str("-2").unwrap();
        assert_eq!(d, Cyclo::from_int(1, -2));
        assert!(serde_json::from_str::<Cyclo>(r#"{"order":3,"coeffs":["1","2","3"]}"#).is_err());
    }
}
