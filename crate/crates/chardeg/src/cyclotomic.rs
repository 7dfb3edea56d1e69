//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! A value is a polynomial in zeta_n of degree < phi(n), reduced modulo the
//! n-th cyclotomic polynomial Phi_n, with rational coefficients in the power
//! basis {1, zeta, ..., zeta^{phi(n)-1}}. Phi_n is computed by the recursive
//! quotient Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x) with exact
//! polynomial division. Two values are equal iff their coefficient vectors
//! agree after embedding both at the lcm of their conductors.
//!
//! Per conductor we cache the reduction of every monomial zeta^t (t < n) to
//! the power basis, so multiplication, Galois action, and embedding are all
//! coefficient-vector sums over that table. No floating point anywhere.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always reduced, positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numerator: i64, denominator: i64) -> Rational {
    Rational::new(BigInt::from(numerator), BigInt::from(denominator))
}

pub fn rational_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut pk = 1;
            while rest % p == 0 {
                rest /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi *= rest - 1;
    }
    phi
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    divs
}

/// Exact division of `poly` by a monic divisor; panics if not exact.
fn divide_monic_exact(poly: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let d = divisor.len() - 1;
    assert!(divisor[d].is_one(), "divisor must be monic");
    let mut rem = poly.to_vec();
    let mut quotient = vec![BigInt::zero(); rem.len() - d];
    for shift in (0..quotient.len()).rev() {
        let lead = rem[shift + d].clone();
        if !lead.is_zero() {
            for (i, c) in divisor.iter().enumerate() {
                let delta = &lead * c;
                rem[shift + i] -= delta;
            }
        }
        quotient[shift] = lead;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quotient
}

/// Coefficients of Phi_n, constant term first, length phi(n) + 1, monic.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&n) {
        return Arc::clone(found);
    }
    // x^n - 1
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        poly = divide_monic_exact(&poly, &phi_d);
    }
    let result = Arc::new(poly);
    cache
        .lock()
        .unwrap()
        .insert(n, Arc::clone(&result));
    result
}

/// Per-conductor reduction data: Phi_n and every monomial zeta^t (t < n)
/// expressed in the power basis.
struct ReductionBasis {
    phi: usize,
    monomials: Vec<Vec<BigInt>>,
}

fn basis(n: u64) -> Arc<ReductionBasis> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<ReductionBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&n) {
        return Arc::clone(found);
    }
    let phi_poly = cyclotomic_polynomial(n);
    let phi = phi_poly.len() - 1;
    let mut monomials: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
    for t in 0..n as usize {
        if t < phi {
            let mut unit = vec![BigInt::zero(); phi];
            unit[t] = BigInt::one();
            monomials.push(unit);
        } else {
            // zeta^t = zeta * zeta^{t-1}; the overflowing top coefficient c
            // folds back as -c * (Phi_n minus its leading term).
            let prev = &monomials[t - 1];
            let mut next = vec![BigInt::zero(); phi];
            next[1..phi].clone_from_slice(&prev[..phi - 1]);
            let carry = prev[phi - 1].clone();
            if !carry.is_zero() {
                for i in 0..phi {
                    next[i] -= &carry * &phi_poly[i];
                }
            }
            monomials.push(next);
        }
    }
    let result = Arc::new(ReductionBasis { phi, monomials });
    cache.lock().unwrap().insert(n, Arc::clone(&result));
    result
}

/// How a single value sits relative to Q and R.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueClass {
    Rational,
    RealNotRational,
    Complex,
}

/// An element of Q(zeta_n) in canonical polynomial form.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(value: i64) -> Self {
        Cyclotomic::from_rational(rational_int(value))
    }

    /// zeta_n^k, reduced modulo Phi_n.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let exp = k.rem_euclid(n as i64) as u64;
        let b = basis(n);
        let coeffs = b.monomials[exp as usize]
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        Cyclotomic { conductor: n, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-express at a larger conductor; `to` must be a multiple of the
    /// current conductor.
    pub fn embed(&self, to: u64) -> Self {
        assert_eq!(
            to % self.conductor,
            0,
            "embedding target must be a multiple of the conductor"
        );
        if to == self.conductor {
            return self.clone();
        }
        let b = basis(to);
        let step = to / self.conductor;
        let mut acc = vec![Rational::zero(); b.phi];
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = (t as u64 * step) % to;
            accumulate(&mut acc, c, &b.monomials[exp as usize]);
        }
        Cyclotomic {
            conductor: to,
            coeffs: acc,
        }
    }

    fn common_conductor(&self, other: &Cyclotomic) -> u64 {
        num_integer::lcm(self.conductor, other.conductor)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Image under the field automorphism zeta_n -> zeta_n^k; requires
    /// gcd(k, n) = 1. k = -1 is complex conjugation.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.conductor;
        let exp = k.rem_euclid(n as i64) as u64;
        if num_integer::gcd(exp, n) != 1 {
            return Err(Error::InvalidAutomorphism { k, conductor: n });
        }
        let b = basis(n);
        let mut acc = vec![Rational::zero(); b.phi];
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = (t as u64 * exp) % n;
            accumulate(&mut acc, c, &b.monomials[image as usize]);
        }
        Ok(Cyclotomic {
            conductor: n,
            coeffs: acc,
        })
    }

    /// Complex conjugation, always a valid automorphism.
    pub fn conjugate(&self) -> Self {
        self.galois(-1).expect("conjugation is always valid")
    }

    pub fn classify(&self) -> ValueClass {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            ValueClass::Rational
        } else if self.conjugate() == *self {
            ValueClass::RealNotRational
        } else {
            ValueClass::Complex
        }
    }

    /// The rational value, when there is one.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

fn accumulate(acc: &mut [Rational], coeff: &Rational, monomial: &[BigInt]) {
    for (slot, m) in acc.iter_mut().zip(monomial) {
        if !m.is_zero() {
            *slot += coeff * m;
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let n = self.common_conductor(other);
        self.embed(n).coeffs == other.embed(n).coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return Cyclotomic {
                conductor: self.conductor,
                coeffs,
            };
        }
        let n = self.common_conductor(rhs);
        &self.embed(n) + &rhs.embed(n)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor != rhs.conductor {
            let n = self.common_conductor(rhs);
            return &self.embed(n) * &rhs.embed(n);
        }
        let n = self.conductor;
        let b = basis(n);
        // Convolve, then fold monomials of degree >= phi(n) through the table.
        let mut product = vec![Rational::zero(); 2 * b.phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, c) in rhs.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                product[i + j] += a * c;
            }
        }
        let mut acc = vec![Rational::zero(); b.phi];
        for (t, c) in product.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if t < b.phi {
                acc[t] += c;
            } else {
                accumulate(&mut acc, c, &b.monomials[t % n as usize]);
            }
        }
        Cyclotomic {
            conductor: n,
            coeffs: acc,
        }
    }
}

impl fmt::Display for Cyclotomic {
    /// Renders as `c0 + c1*z{n}^1 + ...` with zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                terms.push(format!("{c}"));
            } else {
                terms.push(format!("{}*z{}^{}", c, self.conductor, k));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Compare two values at the same conductor by coefficient vector; used for
/// canonical row ordering in character tables.
pub fn compare_same_conductor(a: &Cyclotomic, b: &Cyclotomic) -> std::cmp::Ordering {
    debug_assert_eq!(a.conductor, b.conductor);
    a.coeffs.cmp(&b.coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn phi_polynomials() {
        let phi6 = cyclotomic_polynomial(6);
        assert_eq!(
            *phi6,
            vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]
        );
        let phi12 = cyclotomic_polynomial(12);
        assert_eq!(phi12.len(), 5); // x^4 - x^2 + 1
        assert_eq!(phi12[2], BigInt::from(-1));
        assert_eq!(euler_phi(420), 96);
    }

    #[test]
    fn roots_of_unity_basics() {
        assert_eq!(zeta(1, 0), Cyclotomic::one());
        assert_eq!(&zeta(3, 1) + &zeta(3, 2), Cyclotomic::from_integer(-1));
        assert_eq!(&zeta(4, 1) * &zeta(4, 1), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn additive_identity() {
        let a = &zeta(5, 1) + &zeta(5, 3);
        assert_eq!(&a + &Cyclotomic::zero(), a);
    }

    #[test]
    fn golden_ratio_conjugates_multiply_to_minus_one() {
        let a = &zeta(5, 1) + &zeta(5, 4);
        let b = &zeta(5, 2) + &zeta(5, 3);
        assert_eq!(&a * &b, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn embedding_matches_across_conductors() {
        let minus_one = zeta(2, 1);
        assert_eq!(minus_one.embed(6), zeta(6, 3));
        assert_eq!(minus_one, zeta(6, 3));
    }

    #[test]
    fn galois_examples() {
        assert_eq!(zeta(5, 1).galois(2).unwrap(), zeta(5, 2));
        let fixed = &zeta(5, 1) + &zeta(5, 4);
        assert_eq!(fixed.galois(-1).unwrap(), fixed);
        let r = Cyclotomic::from_rational(rational(3, 7));
        assert_eq!(r.galois(5).unwrap(), r);
        assert!(zeta(6, 1).galois(2).is_err());
    }

    #[test]
    fn classify_examples() {
        let s = &zeta(3, 1) + &zeta(3, 2);
        assert_eq!(s.classify(), ValueClass::Rational);
        assert_eq!(s.to_rational(), Some(rational_int(-1)));

        let golden = &zeta(5, 1) + &zeta(5, 4);
        assert_eq!(golden.classify(), ValueClass::RealNotRational);
        assert_eq!(golden.to_rational(), None);

        assert_eq!(zeta(5, 1).classify(), ValueClass::Complex);
    }

    #[test]
    fn to_rational_examples() {
        let v = &(&Cyclotomic::one() + &zeta(4, 1)) - &zeta(4, 1);
        assert_eq!(v.to_rational(), Some(rational_int(1)));
        assert_eq!(zeta(8, 1).to_rational(), None);
        let one = &zeta(6, 1) + &zeta(6, 5);
        assert_eq!(one.to_rational(), Some(rational_int(1)));
    }

    #[test]
    fn rendering() {
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::from_rational(rational(29, 8)).to_string(), "29/8");
        let v = &Cyclotomic::from_integer(2) + &zeta(5, 1).scale(&rational(1, 2));
        assert_eq!(v.to_string(), "2 + 1/2*z5^1");
    }

    fn moebius(n: u64) -> i64 {
        let mut m = 1i64;
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                rest /= p;
                if rest % p == 0 {
                    return 0;
                }
                m = -m;
            }
            p += 1;
        }
        if rest > 1 {
            m = -m;
        }
        m
    }

    #[test]
    fn primitive_root_sums_match_moebius() {
        for n in 1..=30u64 {
            let mut sum = Cyclotomic::zero();
            for k in 1..=n {
                if num_integer::gcd(k, n) == 1 {
                    sum = &sum + &zeta(n, k as i64);
                }
            }
            assert_eq!(
                sum.to_rational(),
                Some(rational_int(moebius(n))),
                "sum of primitive {n}-th roots"
            );
        }
    }
}
