//! Finite-dimensional right comodules and their coefficient coalgebras.

use super::hopf::FinHopfAlgebra;
use crate::error::{Error, Result};
use crate::exactlinalg::matrix::{axpy, dot, zeros};
use crate::exactlinalg::{CycloScalar, Matrix, Subspace, Vector};

/// A right H-comodule V with ρ(v_j) = Σ_i v_i ⊗ c_ij.
///
/// The structure matrix has dim V rows and dim V · dim H columns; entry
/// (j, i·n + k) is the coefficient of v_i ⊗ e_k in ρ(v_j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comodule {
    dim: usize,
    ambient: usize,
    structure: Matrix,
}

impl Comodule {
    /// Validates coassociativity and counitality against `h`.
    pub fn new(h: &FinHopfAlgebra, structure: Matrix) -> Result<Self> {
        let n = h.dim();
        let dim = structure.rows();
        if structure.cols() != dim * n {
            return Err(Error::DimensionMismatch {
                expected: dim * n,
                found: structure.cols(),
            });
        }
        let c = Comodule {
            dim,
            ambient: n,
            structure,
        };
        c.verify(h)?;
        Ok(c)
    }

    /// Builds from coefficients: `coeffs[i][j]` = c_ij.
    pub fn from_coefficients(h: &FinHopfAlgebra, coeffs: &[Vec<Vector>]) -> Result<Self> {
        let n = h.dim();
        let d = coeffs.len();
        let mut m = Matrix::zeros(d, d * n);
        for (i, row) in coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                for (k, x) in c.iter().enumerate() {
                    m[(j, i * n + k)] = x.clone();
                }
            }
        }
        Self::new(h, m)
    }

    /// The one-dimensional comodule with ρ(v) = v ⊗ 1.
    pub fn trivial(h: &FinHopfAlgebra) -> Self {
        Self::from_coefficients(h, &[vec![h.one().clone()]]).expect("trivial comodule")
    }

    /// H with ρ = Δ.
    pub fn regular(h: &FinHopfAlgebra) -> Self {
        let n = h.dim();
        let coeffs: Vec<Vec<Vector>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| h.coalgebra().basis_comult(j).row_vec(i))
                    .collect()
            })
            .collect();
        Self::from_coefficients(h, &coeffs).expect("regular comodule")
    }

    /// The comodule structure on a right coideal V ⊆ H, in V's stored basis.
    pub fn from_right_coideal(h: &FinHopfAlgebra, v: &Subspace) -> Result<Self> {
        let n = h.dim();
        let d = v.dim();
        let mut coeffs = vec![vec![zeros(n); d]; d];
        for (j, x) in v.basis().iter().enumerate() {
            let dx = h.comult(x);
            for k in 0..n {
                let col = dx.column(k);
                let coords = v.coordinates(&col).ok_or_else(|| Error::NotAComodule {
                    identity: "right coideal".into(),
                    witness: vec![j],
                })?;
                for (i, a) in coords.iter().enumerate() {
                    coeffs[i][j][k] = a.clone();
                }
            }
        }
        Self::from_coefficients(h, &coeffs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &Matrix {
        &self.structure
    }

    /// c_ij ∈ H.
    pub fn coefficient(&self, i: usize, j: usize) -> Vector {
        let n = self.ambient;
        (0..n)
            .map(|k| self.structure[(j, i * n + k)].clone())
            .collect()
    }

    fn verify(&self, h: &FinHopfAlgebra) -> Result<()> {
        let d = self.dim;
        let coeffs: Vec<Vec<Vector>> = (0..d)
            .map(|i| (0..d).map(|j| self.coefficient(i, j)).collect())
            .collect();
        for i in 0..d {
            for j in 0..d {
                let expected = if i == j {
                    CycloScalar::one()
                } else {
                    CycloScalar::zero()
                };
                if dot(h.coalgebra().counit(), &coeffs[i][j]) != expected {
                    return Err(Error::NotAComodule {
                        identity: "counit".into(),
                        witness: vec![i, j],
                    });
                }
                // Δ(c_ij) = Σ_l c_il ⊗ c_lj
                let lhs = h.comult(&coeffs[i][j]);
                let mut rhs = Matrix::zeros(h.dim(), h.dim());
                for l in 0..d {
                    rhs = rhs.add(&super::algebra::outer(&coeffs[i][l], &coeffs[l][j]));
                }
                if lhs != rhs {
                    return Err(Error::NotAComodule {
                        identity: "coassociativity".into(),
                        witness: vec![i, j],
                    });
                }
            }
        }
        Ok(())
    }

    /// V ⊗ W with coefficients c_ai·d_bj, indexed (a, b) ↦ a·dim W + b.
    pub fn tensor(&self, other: &Comodule, h: &FinHopfAlgebra) -> Comodule {
        let (dv, dw) = (self.dim, other.dim);
        let mut coeffs = vec![vec![Vec::new(); dv * dw]; dv * dw];
        for a in 0..dv {
            for b in 0..dw {
                for i in 0..dv {
                    for j in 0..dw {
                        coeffs[a * dw + b][i * dw + j] =
                            h.mul(&self.coefficient(a, i), &other.coefficient(b, j));
                    }
                }
            }
        }
        Self::from_coefficients(h, &coeffs).expect("tensor product of comodules")
    }

    /// V* with coefficients S(c_ji).
    pub fn dual(&self, h: &FinHopfAlgebra) -> Comodule {
        let d = self.dim;
        let coeffs: Vec<Vec<Vector>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| h.antipode(&self.coefficient(j, i)))
                    .collect()
            })
            .collect();
        Self::from_coefficients(h, &coeffs).expect("dual comodule")
    }
}

/// The span of all matrix coefficients: the smallest subcoalgebra D with ρ(V) ⊆ V⊗D.
pub fn coefficient_coalgebra(c: &Comodule) -> Subspace {
    let vs: Vec<Vector> = (0..c.dim)
        .flat_map(|i| (0..c.dim).map(move |j| (i, j)))
        .map(|(i, j)| c.coefficient(i, j))
        .collect();
    Subspace::span(c.ambient, &vs)
}

/// S(D) for a subspace D.
pub fn antipode_image(h: &FinHopfAlgebra, d: &Subspace) -> Subspace {
    d.image(h.antipode_matrix())
}

/// Product subspace E·D = span{x y}.
pub fn product_space(h: &FinHopfAlgebra, e: &Subspace, d: &Subspace) -> Subspace {
    let mut vs = Vec::new();
    for x in e.basis() {
        for y in d.basis() {
            vs.push(h.mul(x, y));
        }
    }
    Subspace::span(h.dim(), &vs)
}

/// Σ_k a_k c_k for scalars a and vectors c.
pub fn combine(coeffs: &[CycloScalar], vecs: &[Vector], n: usize) -> Vector {
    let mut out = zeros(n);
    for (a, v) in coeffs.iter().zip(vecs) {
        axpy(&mut out, a, v);
    }
    out
}
