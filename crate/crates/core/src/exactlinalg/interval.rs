//! Certified signs of real cyclotomic numbers.
//!
//! Zero is decided exactly from the canonical form. A nonzero real number is
//! then enclosed in rational intervals of shrinking width until the enclosure
//! excludes zero.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::CycloScalar;
use crate::error::{Error, Result};

/// Environment variable holding the starting precision (in bits) for sign determination.
pub const PRECISION_ENV: &str = "HOPFCERT_SIGN_PRECISION";
/// Starting precision used when the environment variable is unset or unparsable.
pub const DEFAULT_PRECISION_BITS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

fn starting_precision() -> u32 {
    static START: OnceLock<u32> = OnceLock::new();
    *START.get_or_init(|| {
        std::env::var(PRECISION_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .filter(|&b| b >= 8)
            .unwrap_or(DEFAULT_PRECISION_BITS)
    })
}

/// A closed rational interval.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    fn point(x: BigRational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    fn widen(&self, r: &BigRational) -> Self {
        Interval {
            lo: &self.lo - r,
            hi: &self.hi + r,
        }
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn scale(&self, c: &BigRational) -> Interval {
        if c.is_negative() {
            Interval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            Interval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    fn round_outward(&self, bits: u32) -> Interval {
        let scale = BigRational::from_integer(BigInt::one() << bits);
        Interval {
            lo: (&self.lo * &scale).floor() / &scale,
            hi: (&self.hi * &scale).ceil() / &scale,
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }
}

fn pow2_inv(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Partial sums bracketing arctan(1/m) to within 2^-bits.
fn arctan_inv(m: i64, bits: u32) -> Interval {
    let tol = pow2_inv(bits);
    let x = BigRational::new(BigInt::one(), BigInt::from(m));
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut sum = BigRational::zero();
    let mut k: i64 = 0;
    loop {
        let term = &power / BigRational::from_integer(BigInt::from(2 * k + 1));
        if term < tol {
            // alternating with decreasing terms: the limit lies between
            // consecutive partial sums
            let next = if k % 2 == 0 {
                &sum + &term
            } else {
                &sum - &term
            };
            let (lo, hi) = if sum < next { (sum, next) } else { (next, sum) };
            return Interval { lo, hi };
        }
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power = &power * &x2;
        k += 1;
    }
}

/// An enclosure of π of width at most 2^-(bits-6).
pub fn pi_enclosure(bits: u32) -> Interval {
    let a = arctan_inv(5, bits + 6);
    let b = arctan_inv(239, bits + 6);
    let sixteen = BigRational::from_integer(BigInt::from(16));
    let four = BigRational::from_integer(BigInt::from(4));
    Interval {
        lo: &a.lo * &sixteen - &b.hi * &four,
        hi: &a.hi * &sixteen - &b.lo * &four,
    }
    .round_outward(bits + 4)
}

/// Enclosure of cos(2πk/n), accurate to roughly 2^-bits.
pub fn cos_two_pi_fraction(k: u64, n: u64, bits: u32, pi: &Interval) -> Interval {
    let k = k % n;
    let k = k.min(n - k);
    if k == 0 {
        return Interval::point(BigRational::one());
    }
    let frac = BigRational::new(BigInt::from(2 * k), BigInt::from(n));
    let lo = &pi.lo * &frac;
    let hi = &pi.hi * &frac;
    // cos is 1-Lipschitz, so expanding around the left endpoint costs at most (hi - lo).
    let a = Interval::point(lo.clone()).round_outward(bits + 4).lo;
    let spread = &hi - &a;
    let tol = pow2_inv(bits + 2);
    let a2 = &a * &a;
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    let mut m: i64 = 0;
    loop {
        // term = a^(2m)/(2m)!; the series alternates and decreases once 2m+2 > a
        if m >= 2 && term < tol {
            let widened = Interval::point(sum).widen(&(&term + &spread));
            return widened.round_outward(bits + 4);
        }
        if m % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        let denom = BigRational::from_integer(BigInt::from((2 * m + 1) * (2 * m + 2)));
        term = &term * &a2 / denom;
        m += 1;
    }
}

/// Enclosure of a real cyclotomic number under ζ ↦ exp(2πi/N).
pub fn real_enclosure(x: &CycloScalar, bits: u32) -> Interval {
    let n = x.order() as u64;
    let pi = pi_enclosure(bits + 8);
    let mut acc = Interval::point(BigRational::zero());
    for (k, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cosk = cos_two_pi_fraction(k as u64, n.max(1), bits + 8, &pi);
        acc = acc.add(&cosk.scale(c));
    }
    acc
}

/// Exact sign of a real cyclotomic number under the standard embedding.
pub fn sign_of_real(x: &CycloScalar) -> Result<Sign> {
    if !x.is_real() {
        return Err(Error::NotReal(x.to_string()));
    }
    if x.is_zero() {
        return Ok(Sign::Zero);
    }
    if let Some(q) = x.as_rational() {
        return Ok(if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        });
    }
    let mut bits = starting_precision();
    loop {
        let enc = real_enclosure(x, bits);
        if enc.lo.is_positive() {
            return Ok(Sign::Positive);
        }
        if enc.hi.is_negative() {
            return Ok(Sign::Negative);
        }
        bits = bits.saturating_mul(2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn pi_is_enclosed() {
        let pi = pi_enclosure(64);
        assert!(pi.lo.to_f64().unwrap() <= std::f64::consts::PI);
        assert!(pi.hi.to_f64().unwrap() >= std::f64::consts::PI);
        assert!((&pi.hi - &pi.lo) < pow2_inv(55));
    }

    #[test]
    fn cos_enclosures_bracket_floats() {
        let pi = pi_enclosure(80);
        for n in 1..13u64 {
            for k in 0..n {
                let enc = cos_two_pi_fraction(k, n, 64, &pi);
                let f = (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
                assert!(enc.lo.to_f64().unwrap() <= f + 1e-15, "{k}/{n}");
                assert!(enc.hi.to_f64().unwrap() >= f - 1e-15, "{k}/{n}");
            }
        }
    }

    #[test]
    fn signs_in_q_zeta5() {
        let z = CycloScalar::zeta(5);
        let x = &z + &z.conj();
        assert_eq!(sign_of_real(&x).unwrap(), Sign::Positive);
        let z2 = &z * &z;
        let y = &z2 + &z2.conj();
        assert_eq!(sign_of_real(&y).unwrap(), Sign::Negative);
        assert_eq!(sign_of_real(&CycloScalar::zero()).unwrap(), Sign::Zero);
    }

    #[test]
    fn non_real_is_rejected() {
        assert!(matches!(
            sign_of_real(&CycloScalar::zeta(4)),
            Err(Error::NotReal(_))
        ));
    }

    #[test]
    fn tiny_but_nonzero_values_resolve() {
        // 2cos(2π/12) - √3 style cancellation: (ζ+ζ⁻¹) - 1732/1000 in N=12
        let z = CycloScalar::zeta(12);
        let x = &(&z + &z.conj()) - &CycloScalar::from_ratio(1732, 1000);
        assert_eq!(sign_of_real(&x).unwrap(), Sign::Positive);
        let y = &(&z + &z.conj()) - &CycloScalar::from_ratio(17321, 10000);
        assert_eq!(sign_of_real(&y).unwrap(), Sign::Negative);
    }
}
