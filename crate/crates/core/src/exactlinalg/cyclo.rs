//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! An element is stored as its canonical residue modulo the N-th cyclotomic
//! polynomial Φ_N: a rational coefficient vector of length φ(N). Scalars of
//! different conductors may be mixed freely; the operands are lifted into
//! Q(ζ_lcm) first. Rationals carry conductor 1 and combine with anything
//! without lifting.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The field Q(ζ_N), with precomputed reductions of ζ^j for 0 ≤ j < N.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    degree: usize,
    /// Coefficients of Φ_N, lowest degree first (monic).
    cyclotomic: Vec<i64>,
    /// `powers[j]` is the canonical residue of z^j, for j in 0..N.
    powers: Vec<Vec<i64>>,
}

impl CycloField {
    fn new(order: u32) -> Self {
        let n = order as usize;
        let cyclotomic = cyclotomic_polynomial(order);
        let degree = cyclotomic.len() - 1;
        let mut powers = Vec::with_capacity(n);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by z and reduce the top coefficient
            let top = cur[degree - 1];
            for k in (1..degree).rev() {
                cur[k] = cur[k - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for k in 0..degree {
                    cur[k] -= top * cyclotomic[k];
                }
            }
        }
        CycloField {
            order,
            degree,
            cyclotomic,
            powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(N), the degree of Q(ζ_N) over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclotomic_polynomial(&self) -> &[i64] {
        &self.cyclotomic
    }
}

/// Returns the shared field descriptor for Q(ζ_order).
pub fn field(order: u32) -> Arc<CycloField> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    assert!(order >= 1, "cyclotomic order must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic field cache poisoned");
    guard
        .entry(order)
        .or_insert_with(|| Arc::new(CycloField::new(order)))
        .clone()
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // z^n - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            poly = exact_int_division(&poly, &divisor);
        }
    }
    poly
}

fn exact_int_division(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = num.len() - den.len();
    let mut quot = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// An element of a cyclotomic field Q(ζ_N).
#[derive(Clone)]
pub struct CycloScalar {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl CycloScalar {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycloScalar {
            field: field(1),
            coeffs: vec![q],
        }
    }

    /// ζ_order^k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let f = field(order);
        let j = k.rem_euclid(order as i64) as usize;
        let coeffs = f.powers[j]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        CycloScalar { field: f, coeffs }
    }

    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// Builds Σ coeffs[k] z^k in Q(ζ_order), reducing modulo Φ_order.
    pub fn from_poly(order: u32, coeffs: &[BigRational]) -> Self {
        let f = field(order);
        let mut out = vec![BigRational::zero(); f.degree];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let red = &f.powers[k % order as usize];
            for (slot, r) in out.iter_mut().zip(red) {
                if *r != 0 {
                    *slot += c * BigRational::from_integer(BigInt::from(*r));
                }
            }
        }
        CycloScalar {
            field: f,
            coeffs: out,
        }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Canonical residue coefficients (length φ(N)).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this scalar lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn rational_operand(&self) -> Option<&BigRational> {
        if self.field.order <= 2 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-expresses this scalar in Q(ζ_target); `order` must divide `target`.
    pub fn lift(&self, target: u32) -> Self {
        let m = self.field.order;
        if m == target {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(m),
            "cannot lift Q(ζ_{m}) into Q(ζ_{target})"
        );
        let f = field(target);
        let step = (target / m) as usize;
        let mut out = vec![BigRational::zero(); f.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let red = &f.powers[(k * step) % target as usize];
            for (slot, r) in out.iter_mut().zip(red) {
                if *r != 0 {
                    *slot += c * BigRational::from_integer(BigInt::from(*r));
                }
            }
        }
        CycloScalar {
            field: f,
            coeffs: out,
        }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let l = (a.field.order as u64).lcm(&(b.field.order as u64)) as u32;
        (a.lift(l), b.lift(l))
    }

    /// Complex conjugation, i.e. the automorphism ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        let n = self.field.order as usize;
        if n <= 2 {
            return self.clone();
        }
        let mut out = vec![BigRational::zero(); self.field.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let red = &self.field.powers[(n - k % n) % n];
            for (slot, r) in out.iter_mut().zip(red) {
                if *r != 0 {
                    *slot += c * BigRational::from_integer(BigInt::from(*r));
                }
            }
        }
        CycloScalar {
            field: self.field.clone(),
            coeffs: out,
        }
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo Φ_N.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.rational_operand() {
            return Ok(CycloScalar {
                field: self.field.clone(),
                coeffs: vec![q.recip()],
            });
        }
        let modulus: Vec<BigRational> = self
            .field
            .cyclotomic
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let a = trim(self.coeffs.clone());
        // Invariant: s_i * a ≡ r_i (mod Φ).
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = qpoly_divmod(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant since Φ is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let inv: Vec<BigRational> = s0.into_iter().map(|x| x * &c).collect();
        Ok(CycloScalar::from_poly(self.field.order, &inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Value under the embedding ζ ↦ exp(2πi·j/N), in floating point.
    pub fn to_complex(&self, j: u32) -> num_complex::Complex64 {
        let n = self.field.order as f64;
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (j as f64) * (k as f64) / n;
            let v = c.to_f64().unwrap_or(f64::NAN);
            acc += num_complex::Complex64::from_polar(v, angle);
        }
        acc
    }

    /// Parses a polynomial string in `z` (e.g. `"1/2*z^3 - 2"`) as an element of Q(ζ_order).
    pub fn parse(s: &str, order: u32) -> Result<Self> {
        let coeffs = parse_poly(s)?;
        Ok(CycloScalar::from_poly(order, &coeffs))
    }

    /// Polynomial string of the canonical residue, written over the given conductor.
    pub fn to_poly_string(&self, order: u32) -> String {
        if order.is_multiple_of(self.field.order) {
            format_poly(&self.lift(order).coeffs)
        } else {
            format_poly(&self.coeffs)
        }
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn qpoly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap().clone() / &lead;
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn parse_poly(s: &str) -> Result<Vec<BigRational>> {
    let err = |m: &str| Error::Parse {
        line: 0,
        message: format!("bad scalar {s:?}: {m}"),
    };
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty"));
    }
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && i == 0 {
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    terms.push((neg, cur));
    let mut out: Vec<BigRational> = Vec::new();
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(err("empty term"));
        }
        let (coef_str, power) = match term.find('z') {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let coef = term[..pos].trim_end_matches('*');
                let rest = &term[pos + 1..];
                let power = if rest.is_empty() {
                    1
                } else if let Some(p) = rest.strip_prefix('^') {
                    p.parse::<usize>().map_err(|_| err("bad exponent"))?
                } else {
                    return Err(err("unexpected text after z"));
                };
                (coef, power)
            }
        };
        let coef = if coef_str.is_empty() {
            BigRational::one()
        } else {
            BigRational::from_str(coef_str).map_err(|_| err("bad rational coefficient"))?
        };
        let coef = if neg { -coef } else { coef };
        if out.len() <= power {
            out.resize(power + 1, BigRational::zero());
        }
        out[power] += coef;
    }
    Ok(out)
}

fn format_poly(coeffs: &[BigRational]) -> String {
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        let body = match (k, a.is_one()) {
            (0, _) => a.to_string(),
            (1, true) => "z".to_string(),
            (1, false) => format!("{a}*z"),
            (_, true) => format!("z^{k}"),
            (_, false) => format!("{a}*z^{k}"),
        };
        parts.push((neg, body));
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.field.order == other.field.order {
            return self.coeffs == other.coeffs;
        }
        if let Some(q) = other.rational_operand() {
            return self.coeffs[0] == *q && self.coeffs[1..].iter().all(Zero::is_zero);
        }
        if let Some(q) = self.rational_operand() {
            return other.coeffs[0] == *q && other.coeffs[1..].iter().all(Zero::is_zero);
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloScalar {}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [N={}]", format_poly(&self.coeffs), self.field.order)
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coeffs))
    }
}

impl Default for CycloScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycloScalar {
    fn from(n: i64) -> Self {
        CycloScalar::from_int(n)
    }
}

impl<'a> Add<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        if self.field.order == rhs.field.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return CycloScalar {
                field: self.field.clone(),
                coeffs,
            };
        }
        if let Some(q) = rhs.rational_operand() {
            let mut out = self.clone();
            out.coeffs[0] += q;
            return out;
        }
        if let Some(q) = self.rational_operand() {
            let mut out = rhs.clone();
            out.coeffs[0] += q;
            return out;
        }
        let (a, b) = CycloScalar::common(self, rhs);
        &a + &b
    }
}

impl<'a> Mul<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        if self.field.order == rhs.field.order {
            let f = &self.field;
            if f.degree == 1 {
                return CycloScalar {
                    field: f.clone(),
                    coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
                };
            }
            let n = f.order as usize;
            let mut prod = vec![BigRational::zero(); 2 * f.degree - 1];
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    prod[i + j] += a * b;
                }
            }
            let mut out: Vec<BigRational> = prod[..f.degree].to_vec();
            for (k, c) in prod.iter().enumerate().skip(f.degree) {
                if c.is_zero() {
                    continue;
                }
                for (slot, r) in out.iter_mut().zip(&f.powers[k % n]) {
                    if *r != 0 {
                        *slot += c * BigRational::from_integer(BigInt::from(*r));
                    }
                }
            }
            return CycloScalar {
                field: f.clone(),
                coeffs: out,
            };
        }
        if let Some(q) = rhs.rational_operand() {
            return CycloScalar {
                field: self.field.clone(),
                coeffs: self.coeffs.iter().map(|c| c * q).collect(),
            };
        }
        if let Some(q) = self.rational_operand() {
            return CycloScalar {
                field: rhs.field.clone(),
                coeffs: rhs.coeffs.iter().map(|c| c * q).collect(),
            };
        }
        let (a, b) = CycloScalar::common(self, rhs);
        &a * &b
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -&self
    }
}

impl<'a> Sub<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: &CycloScalar) -> CycloScalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycloScalar> for &'a CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: &CycloScalar) {
        if self.field.order == rhs.field.order {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl AddAssign for CycloScalar {
    fn add_assign(&mut self, rhs: CycloScalar) {
        *self += &rhs;
    }
}

impl SubAssign<&CycloScalar> for CycloScalar {
    fn sub_assign(&mut self, rhs: &CycloScalar) {
        *self += &(-rhs);
    }
}

impl MulAssign<&CycloScalar> for CycloScalar {
    fn mul_assign(&mut self, rhs: &CycloScalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for CycloScalar {
    fn sum<I: Iterator<Item = CycloScalar>>(iter: I) -> Self {
        iter.fold(CycloScalar::zero(), |acc, x| acc + x)
    }
}
