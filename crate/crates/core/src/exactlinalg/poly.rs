//! Univariate polynomials over Q(ζ_N) and recognition of their roots in the field.
//!
//! Roots are located numerically in every embedding, recognized as elements of
//! Q(ζ_N) by rational reconstruction, and accepted only after exact evaluation.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;

use super::cyclo::CycloScalar;
use super::matrix::{is_zero_vec, Matrix, Vector};

/// Coefficients low to high, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<CycloScalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<CycloScalar>) -> Self {
        while coeffs.last().is_some_and(CycloScalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![CycloScalar::one()])
    }

    /// x - r.
    pub fn linear(r: &CycloScalar) -> Self {
        Poly::new(vec![-r, CycloScalar::one()])
    }

    pub fn coeffs(&self) -> &[CycloScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycloScalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = CycloScalar::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = CycloScalar::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![CycloScalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &CycloScalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d
            .leading()
            .unwrap()
            .inv()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![CycloScalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, b) in d.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + i] -= &(&c * b);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divmod(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with s·self + t·o = g and g monic.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inv().expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &CycloScalar::from_int(k as i64))
                .collect(),
        )
    }

    /// The product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divmod(&g).0.monic()
    }

    pub fn eval(&self, x: &CycloScalar) -> CycloScalar {
        let mut acc = CycloScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Matrix::identity(n).scale(c));
        }
        acc
    }

    /// Coefficients under the embedding ζ_N ↦ exp(2πij/N).
    pub fn embed(&self, order: u32, j: u32) -> Vec<Complex64> {
        self.coeffs
            .iter()
            .map(|c| c.lift(order).to_complex(j))
            .collect()
    }
}

/// The monic polynomial of least degree with p(x) = 0, given the powers
/// 1, x, x², ... as vectors produced by `next`. Stops at degree `max_degree`.
pub fn minimal_polynomial_from_powers(
    one: Vector,
    mut next: impl FnMut(&Vector) -> Vector,
    max_degree: usize,
) -> Poly {
    let n = one.len();
    let mut powers = vec![one];
    loop {
        let k = powers.len();
        let last = powers.last().unwrap().clone();
        let cand = next(&last);
        let m = Matrix::from_columns(&powers, n);
        if let Some(sol) = m.solve(&cand) {
            // x^k = Σ sol_i x^i
            let mut coeffs: Vec<CycloScalar> = sol.iter().map(|c| -c).collect();
            coeffs.push(CycloScalar::one());
            return Poly::new(coeffs);
        }
        if k > max_degree {
            panic!("minimal polynomial exceeds degree bound {max_degree}");
        }
        if is_zero_vec(&cand) {
            let mut coeffs = vec![CycloScalar::zero(); k];
            coeffs.push(CycloScalar::one());
            return Poly::new(coeffs);
        }
        powers.push(cand);
    }
}

/// Minimal polynomial of a square matrix.
pub fn matrix_minimal_polynomial(m: &Matrix) -> Poly {
    let n = m.rows();
    let flat = |a: &Matrix| -> Vector { a.row_vectors().into_iter().flatten().collect() };
    let unflat =
        |v: &Vector| -> Matrix { Matrix::from_rows(v.chunks(n).map(|c| c.to_vec()).collect(), n) };
    minimal_polynomial_from_powers(flat(&Matrix::identity(n)), |v| flat(&unflat(v).mul(m)), n)
}

/// Characteristic polynomial det(tI - M) by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(m: &Matrix) -> Poly {
    let n = m.rows();
    let mut coeffs = vec![CycloScalar::zero(); n + 1];
    coeffs[n] = CycloScalar::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        // M_k = M (M_{k-1} + c_{n-k+1} I)
        let shifted = mk.add(&Matrix::identity(n).scale(&coeffs[n - k + 1]));
        mk = m.mul(&shifted);
        let c = -(&mk.trace() * &CycloScalar::from_ratio(1, k as i64));
        coeffs[n - k] = c;
    }
    Poly::new(coeffs)
}

fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let a: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        a.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    };
    let bound = 1.0 + a[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                roots[i] += Complex64::new(1e-8, 1e-8);
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * bound {
            break;
        }
    }
    // Newton polishing
    let da: Vec<Complex64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();
    let deval = |z: Complex64| {
        da.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    };
    for r in roots.iter_mut() {
        for _ in 0..4 {
            let d = deval(*r);
            if d.norm() == 0.0 {
                break;
            }
            *r -= eval(*r) / d;
        }
    }
    roots
}

/// Best rational approximation with bounded denominator via continued fractions.
fn rationalize(x: f64, max_den: i64, tol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            return None;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let approx = h1 as f64 / k1 as f64;
        if (approx - x).abs() <= tol * (1.0 + x.abs()) {
            let g = h1.gcd(&k1);
            return Some(BigRational::new(BigInt::from(h1 / g), BigInt::from(k1 / g)));
        }
        let frac = r - a;
        if frac == 0.0 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

fn coprime_embeddings(order: u32) -> Vec<u32> {
    // one embedding from each complex-conjugate pair
    if order <= 2 {
        return vec![1];
    }
    (1..order)
        .filter(|&j| 2 * j < order && (j as u64).gcd(&(order as u64)) == 1)
        .collect()
}

/// Solves for rational coefficients c_k with Σ c_k σ_j(ζ^k) = values[j] over the
/// given embeddings, then rounds to small rationals.
fn reconstruct(order: u32, embeddings: &[u32], values: &[Complex64]) -> Option<CycloScalar> {
    let d = super::cyclo::field(order).degree();
    // real system: for each embedding, real and imaginary parts (imag only if genuinely complex)
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut rhs: Vec<f64> = Vec::new();
    for (&j, v) in embeddings.iter().zip(values) {
        let basis: Vec<Complex64> = (0..d)
            .map(|k| CycloScalar::zeta_pow(order, k as i64).to_complex(j))
            .collect();
        rows.push(basis.iter().map(|b| b.re).collect());
        rhs.push(v.re);
        if order > 2 {
            rows.push(basis.iter().map(|b| b.im).collect());
            rhs.push(v.im);
        }
    }
    let sol = solve_real(rows, rhs, d)?;
    let coeffs: Option<Vec<BigRational>> = sol
        .iter()
        .map(|&x| rationalize(x, 1_000_000, 1e-9))
        .collect();
    Some(CycloScalar::from_poly(order, &coeffs?))
}

fn solve_real(mut a: Vec<Vec<f64>>, mut b: Vec<f64>, n: usize) -> Option<Vec<f64>> {
    if a.len() != n {
        return None;
    }
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[p][c].abs() < 1e-12 {
            return None;
        }
        a.swap(p, c);
        b.swap(p, c);
        for i in 0..n {
            if i != c {
                let f = a[i][c] / a[c][c];
                if f != 0.0 {
                    for k in c..n {
                        a[i][k] -= f * a[c][k];
                    }
                    b[i] -= f * b[c];
                }
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

/// All roots of `p` lying in Q(ζ_order), each listed once, verified exactly.
pub fn roots_in_field(p: &Poly, order: u32) -> Vec<CycloScalar> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        let c = &p.coeffs[0] * &p.coeffs[1].inv().expect("nonzero");
        return vec![-c];
    }
    let embeddings = coprime_embeddings(order);
    let numeric: Vec<Vec<Complex64>> = embeddings
        .iter()
        .map(|&j| durand_kerner(&p.embed(order, j)))
        .collect();
    let mut found: Vec<CycloScalar> = Vec::new();
    // odometer over root choices in the secondary embeddings
    let m = embeddings.len();
    let mut idx = vec![0usize; m];
    loop {
        let values: Vec<Complex64> = (0..m).map(|e| numeric[e][idx[e]]).collect();
        if let Some(r) = reconstruct(order, &embeddings, &values) {
            if !found.contains(&r) && p.eval(&r).is_zero() {
                found.push(r);
                if found.len() == deg {
                    break;
                }
            }
        }
        let mut e = 0;
        loop {
            if e == m {
                return found;
            }
            idx[e] += 1;
            if idx[e] < deg {
                break;
            }
            idx[e] = 0;
            e += 1;
        }
    }
    found
}

/// Whether a squarefree polynomial splits into distinct linear factors over Q(ζ_order).
pub fn splits(p: &Poly, order: u32) -> bool {
    roots_in_field(p, order).len() == p.degree().unwrap_or(0)
}

/// The smallest multiple k·order (k ≤ 12) over which `p` splits, if any.
pub fn splitting_conductor_hint(p: &Poly, order: u32) -> Option<u32> {
    (2..=12u32)
        .map(|k| k * order.max(1))
        .find(|&n| splits(p, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycloScalar {
        CycloScalar::from_int(n)
    }

    fn poly(xs: &[i64]) -> Poly {
        Poly::new(xs.iter().map(|&x| c(x)).collect())
    }

    #[test]
    fn division_identity() {
        let a = poly(&[1, 2, 3, 4]);
        let b = poly(&[1, 1]);
        let (q, r) = a.divmod(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = poly(&[-1, 0, 1]); // (x-1)(x+1)
        let b = poly(&[-1, 1]); // x-1
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, poly(&[-1, 1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn squarefree() {
        let p = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[2, 1]));
        assert_eq!(p.squarefree_part(), poly(&[-1, 1]).mul(&poly(&[2, 1])));
    }

    #[test]
    fn cube_roots_of_unity_split_in_q_zeta3_only() {
        let p = poly(&[-1, 0, 0, 1]);
        let roots = roots_in_field(&p, 3);
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert!(p.eval(r).is_zero());
        }
        assert_eq!(roots_in_field(&p, 1), vec![c(1)]);
        assert_eq!(splitting_conductor_hint(&p, 1), Some(3));
    }

    #[test]
    fn roots_in_degree_four_field() {
        // x^2 - 2 splits over Q(ζ_8) since √2 = ζ + ζ⁻¹
        let p = poly(&[-2, 0, 1]);
        assert!(!splits(&p, 4));
        let roots = roots_in_field(&p, 8);
        assert_eq!(roots.len(), 2);
        let z = CycloScalar::zeta(8);
        assert!(roots.contains(&(&z + &z.conj())));
    }

    #[test]
    fn matrix_polynomials() {
        let m = Matrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]], 2);
        assert_eq!(matrix_minimal_polynomial(&m), poly(&[-1, 0, 1]));
        assert_eq!(characteristic_polynomial(&m), poly(&[-1, 0, 1]));
        let id = Matrix::identity(3);
        assert_eq!(matrix_minimal_polynomial(&id), poly(&[-1, 1]));
        assert_eq!(characteristic_polynomial(&id), poly(&[-1, 3, -3, 1]));
        assert!(characteristic_polynomial(&m).eval_matrix(&m).is_zero());
    }
}
