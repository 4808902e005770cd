//! Exact positive semidefiniteness certificates and S² block conjugators.

use crate::error::{Error, Result};
use crate::exactlinalg::poly::characteristic_polynomial;
use crate::exactlinalg::{sign_of_real, CycloScalar, Matrix, Sign, Subspace, Vector};

/// Outcome of the characteristic-polynomial PSD test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Psd {
    /// All c_k ≥ 0, where det(tI − M) = Σ (−1)^k c_k t^{n−k}.
    Psd { coefficients: Vec<CycloScalar> },
    /// c_index < 0.
    NotPsd {
        index: usize,
        coefficients: Vec<CycloScalar>,
    },
}

impl Psd {
    pub fn is_psd(&self) -> bool {
        matches!(self, Psd::Psd { .. })
    }

    pub fn coefficients(&self) -> &[CycloScalar] {
        match self {
            Psd::Psd { coefficients } | Psd::NotPsd { coefficients, .. } => coefficients,
        }
    }
}

/// Certifies a Hermitian matrix PSD via the signs of its characteristic polynomial coefficients.
pub fn psd_certificate(m: &Matrix) -> Result<Psd> {
    if let Some((row, col)) = m.is_hermitian() {
        return Err(Error::NonHermitian { row, col });
    }
    let n = m.rows();
    let p = characteristic_polynomial(m);
    let coefficients: Vec<CycloScalar> = (0..=n)
        .map(|k| {
            let c = p
                .coeffs()
                .get(n - k)
                .cloned()
                .unwrap_or_else(CycloScalar::zero);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    for (k, c) in coefficients.iter().enumerate() {
        if sign_of_real(c)? == Sign::Negative {
            return Ok(Psd::NotPsd {
                index: k,
                coefficients,
            });
        }
    }
    Ok(Psd::Psd { coefficients })
}

/// A positive invertible Q with S²(c) = Q c Q⁻¹ on a matrix block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockConjugator {
    pub q: Matrix,
    /// S² is the identity on the block and Q = id.
    pub trivial: bool,
    pub certificate: Psd,
}

/// Integer coefficient bound for combinations of solution-space basis vectors.
pub const CONJUGATOR_SEARCH_BOUND: i64 = 2;

/// Solves S²(c)·Q = Q·c for the matrix coefficients c = (c_ij) of a block and
/// certifies a solution positive definite.
pub fn s2_block_conjugator(coeffs: &[Vec<Vector>], s2: &Matrix) -> Result<BlockConjugator> {
    let d = coeffs.len();
    let n = s2.rows();
    let flat: Vec<Vector> = coeffs.iter().flatten().cloned().collect();
    let block = Subspace::span(n, &flat);
    if !flat.iter().all(|c| block.contains(&s2.apply(c))) {
        return Err(Error::Descent {
            map: "S^2 on the block".into(),
        });
    }
    if flat.iter().all(|c| s2.apply(c) == *c) {
        let q = Matrix::identity(d);
        let certificate = psd_certificate(&q)?;
        return Ok(BlockConjugator {
            q,
            trivial: true,
            certificate,
        });
    }
    // unknown Q_kj at index k*d + j; equation (i, j, coordinate t):
    // Σ_k S²(c_ik)_t Q_kj − Σ_k Q_ik (c_kj)_t = 0
    let s2c: Vec<Vec<Vector>> = coeffs
        .iter()
        .map(|row| row.iter().map(|c| s2.apply(c)).collect())
        .collect();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for t in 0..n {
                let mut row = vec![CycloScalar::zero(); d * d];
                for k in 0..d {
                    row[k * d + j] = &row[k * d + j] + &s2c[i][k][t];
                    row[i * d + k] = &row[i * d + k] - &coeffs[k][j][t];
                }
                rows.push(row);
            }
        }
    }
    let solutions: Vec<Vector> = Matrix::from_rows(rows, d * d)
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let lead = v
                .iter()
                .find(|x| !x.is_zero())
                .expect("nonzero kernel vector")
                .clone();
            let inv = lead.inv().expect("nonzero leading entry");
            v.iter().map(|x| x * &inv).collect()
        })
        .collect();
    let as_matrix = |v: &Vector| Matrix::from_fn(d, d, |r, c| v[r * d + c].clone());
    let mut candidates: Vec<Vector> = solutions.clone();
    if solutions.len() > 1 {
        let b = CONJUGATOR_SEARCH_BOUND;
        let mut combo = vec![-b; solutions.len()];
        loop {
            let mut v = vec![CycloScalar::zero(); d * d];
            for (s, &w) in solutions.iter().zip(&combo) {
                let w = CycloScalar::from_int(w);
                for (x, y) in v.iter_mut().zip(s) {
                    *x = &*x + &(&w * y);
                }
            }
            candidates.push(v);
            let Some(pos) = combo.iter().position(|&w| w < b) else {
                break;
            };
            combo[pos] += 1;
            for w in &mut combo[..pos] {
                *w = -b;
            }
        }
    }
    for v in &candidates {
        for sign in [1, -1] {
            let q = as_matrix(v).scale(&CycloScalar::from_int(sign));
            if q.is_hermitian().is_some() || q.determinant()?.is_zero() {
                continue;
            }
            let certificate = psd_certificate(&q)?;
            if certificate.is_psd() {
                return Ok(BlockConjugator {
                    q,
                    trivial: false,
                    certificate,
                });
            }
        }
    }
    Err(Error::NoPositiveSolution)
}

/// The matrix coalgebra M_d^* on basis e_pq (index p*d + q), Δ(e_pq) = Σ_k e_pk ⊗ e_kq,
/// with the map e_pq ↦ (w_p / w_q) e_pq, i.e. conjugation by diag(w).
pub fn diagonal_conjugation_fixture(weights: &[i64]) -> (Vec<Vec<Vector>>, Matrix) {
    let d = weights.len();
    let n = d * d;
    let coeffs: Vec<Vec<Vector>> = (0..d)
        .map(|p| {
            (0..d)
                .map(|q| crate::exactlinalg::matrix::unit_vector(n, p * d + q))
                .collect()
        })
        .collect();
    let s2 = Matrix::from_fn(n, n, |r, c| {
        if r == c {
            CycloScalar::from_ratio(weights[r / d], weights[r % d])
        } else {
            CycloScalar::zero()
        }
    });
    (coeffs, s2)
}
