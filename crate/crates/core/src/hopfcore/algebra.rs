//! Finite-dimensional associative algebras and coalgebras given by structure constants.

use crate::exactlinalg::matrix::{axpy, dot, is_zero_vec, unit_vector, zeros};
use crate::exactlinalg::{CycloScalar, Matrix, Subspace, Vector};

/// A finite-dimensional algebra: `mult[i][j]` is the product e_i e_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    dim: usize,
    mult: Vec<Vec<Vector>>,
    unit: Vector,
}

impl FiniteAlgebra {
    pub fn new(dim: usize, mult: Vec<Vec<Vector>>, unit: Vector) -> Self {
        assert_eq!(mult.len(), dim);
        assert_eq!(unit.len(), dim);
        FiniteAlgebra { dim, mult, unit }
    }

    /// Builds the algebra from a closure giving e_i e_j.
    pub fn from_fn(dim: usize, unit: Vector, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mult = (0..dim)
            .map(|i| (0..dim).map(|j| f(i, j)).collect())
            .collect();
        Self::new(dim, mult, unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn unit_mut(&mut self) -> &mut Vector {
        &mut self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.mult[i][j]
    }

    pub fn basis_product_mut(&mut self, i: usize, j: usize) -> &mut Vector {
        &mut self.mult[i][j]
    }

    pub fn mul(&self, a: &[CycloScalar], b: &[CycloScalar]) -> Vector {
        let mut out = zeros(self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                axpy(&mut out, &(x * y), &self.mult[i][j]);
            }
        }
        out
    }

    /// Matrix of x ↦ a·x.
    pub fn left_mult_matrix(&self, a: &[CycloScalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul(a, &unit_vector(self.dim, j)))
            .collect();
        Matrix::from_columns(&cols, self.dim)
    }

    /// Matrix of x ↦ x·a.
    pub fn right_mult_matrix(&self, a: &[CycloScalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul(&unit_vector(self.dim, j), a))
            .collect();
        Matrix::from_columns(&cols, self.dim)
    }

    /// First triple (i, j, k) with (e_i e_j) e_k ≠ e_i (e_j e_k).
    pub fn associativity_witness(&self) -> Option<Vec<usize>> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &self.mult[i][j];
                for k in 0..self.dim {
                    let lhs = self.mul(ij, &unit_vector(self.dim, k));
                    let rhs = self.mul(&unit_vector(self.dim, i), &self.mult[j][k]);
                    if lhs != rhs {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// First index i with 1·e_i ≠ e_i or e_i·1 ≠ e_i.
    pub fn unit_witness(&self) -> Option<Vec<usize>> {
        (0..self.dim)
            .find(|&i| {
                let e = unit_vector(self.dim, i);
                self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
            })
            .map(|i| vec![i])
    }

    /// Trace of left multiplication.
    pub fn regular_trace(&self, a: &[CycloScalar]) -> CycloScalar {
        self.left_mult_matrix(a).trace()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Whether the subspace is closed under multiplication.
    pub fn is_closed(&self, v: &Subspace) -> bool {
        for a in v.basis() {
            for b in v.basis() {
                if !v.contains(&self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }
}

/// A finite-dimensional coalgebra: `comult[i][(j, k)]` is the coefficient of
/// e_j ⊗ e_k in Δ(e_i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    dim: usize,
    comult: Vec<Matrix>,
    counit: Vector,
}

impl Coalgebra {
    pub fn new(dim: usize, comult: Vec<Matrix>, counit: Vector) -> Self {
        assert_eq!(comult.len(), dim);
        assert_eq!(counit.len(), dim);
        Coalgebra {
            dim,
            comult,
            counit,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn basis_comult(&self, i: usize) -> &Matrix {
        &self.comult[i]
    }

    pub fn basis_comult_mut(&mut self, i: usize) -> &mut Matrix {
        &mut self.comult[i]
    }

    pub fn counit_mut(&mut self) -> &mut Vector {
        &mut self.counit
    }

    pub fn epsilon(&self, v: &[CycloScalar]) -> CycloScalar {
        dot(&self.counit, v)
    }

    /// Δ(v) as an n×n coefficient matrix.
    pub fn comult(&self, v: &[CycloScalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = &self.comult[i];
            for a in 0..self.dim {
                for b in 0..self.dim {
                    let x = &m[(a, b)];
                    if !x.is_zero() {
                        out[(a, b)] += &(c * x);
                    }
                }
            }
        }
        out
    }

    /// Δ(v) flattened to a vector of length n² (index a·n + b).
    pub fn comult_flat(&self, v: &[CycloScalar]) -> Vector {
        flatten(&self.comult(v))
    }

    /// First k with (Δ⊗id)Δ(e_k) ≠ (id⊗Δ)Δ(e_k).
    pub fn coassociativity_witness(&self) -> Option<Vec<usize>> {
        let n = self.dim;
        for k in 0..n {
            let d = &self.comult[k];
            // lhs[a][b][c] = Σ_x d[x][c] Δ(e_x)[a][b]; rhs = Σ_y d[a][y] Δ(e_y)[b][c]
            let mut lhs = vec![CycloScalar::zero(); n * n * n];
            let mut rhs = vec![CycloScalar::zero(); n * n * n];
            for x in 0..n {
                for y in 0..n {
                    let c = &d[(x, y)];
                    if c.is_zero() {
                        continue;
                    }
                    let dx = &self.comult[x];
                    let dy = &self.comult[y];
                    for a in 0..n {
                        for b in 0..n {
                            let u = &dx[(a, b)];
                            if !u.is_zero() {
                                lhs[(a * n + b) * n + y] += &(c * u);
                            }
                            let w = &dy[(a, b)];
                            if !w.is_zero() {
                                rhs[(x * n + a) * n + b] += &(c * w);
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                return Some(vec![k]);
            }
        }
        None
    }

    /// First k with (ε⊗id)Δ(e_k) ≠ e_k or (id⊗ε)Δ(e_k) ≠ e_k.
    pub fn counit_witness(&self) -> Option<Vec<usize>> {
        (0..self.dim)
            .find(|&k| {
                let d = &self.comult[k];
                let e = unit_vector(self.dim, k);
                let left: Vector = (0..self.dim)
                    .map(|b| dot(&self.counit, &d.column(b)))
                    .collect();
                let right: Vector = (0..self.dim).map(|a| dot(d.row(a), &self.counit)).collect();
                left != e || right != e
            })
            .map(|k| vec![k])
    }

    /// Whether Δ(V) ⊆ V⊗V.
    pub fn is_subcoalgebra(&self, v: &Subspace) -> bool {
        let q = v.quotient();
        v.basis().iter().all(|x| {
            let d = self.comult(x);
            // (q⊗id)Δx = 0 and (id⊗q)Δx = 0
            (0..self.dim).all(|b| is_zero_vec(&q.project(&d.column(b))))
                && (0..self.dim).all(|a| is_zero_vec(&q.project(d.row(a))))
        })
    }

    /// Whether the subspace is a coideal: Δ(K) ⊆ K⊗C + C⊗K and ε(K) = 0.
    pub fn is_coideal(&self, k: &Subspace) -> bool {
        let q = k.quotient();
        let pm = q.projection_matrix();
        k.basis().iter().all(|x| {
            self.epsilon(x).is_zero() && pm.mul(&self.comult(x)).mul(&pm.transpose()).is_zero()
        })
    }

    /// Whether x is grouplike: Δx = x⊗x and ε(x) = 1.
    pub fn is_grouplike(&self, x: &[CycloScalar]) -> bool {
        self.epsilon(x).is_one() && self.comult(x) == outer(x, x)
    }
}

/// Row-major flattening of a matrix.
pub fn flatten(m: &Matrix) -> Vector {
    m.row_vectors().into_iter().flatten().collect()
}

/// The matrix u vᵀ, i.e. u ⊗ v.
pub fn outer(u: &[CycloScalar], v: &[CycloScalar]) -> Matrix {
    Matrix::from_fn(u.len(), v.len(), |a, b| &u[a] * &v[b])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycloScalar {
        CycloScalar::from_int(n)
    }

    /// k[x]/(x²) with basis {1, x}.
    fn dual_numbers() -> FiniteAlgebra {
        FiniteAlgebra::from_fn(2, vec![c(1), c(0)], |i, j| match i + j {
            0 => vec![c(1), c(0)],
            1 => vec![c(0), c(1)],
            _ => vec![c(0), c(0)],
        })
    }

    #[test]
    fn dual_numbers_are_associative_and_unital() {
        let a = dual_numbers();
        assert!(a.associativity_witness().is_none());
        assert!(a.unit_witness().is_none());
        assert!(a.is_commutative());
    }

    #[test]
    fn corrupted_product_is_caught() {
        let mut a = dual_numbers();
        *a.basis_product_mut(1, 1) = vec![c(1), c(0)];
        // x² = 1 is still associative; break the unit instead
        assert!(a.associativity_witness().is_none());
        *a.basis_product_mut(0, 1) = vec![c(0), c(2)];
        assert!(a.unit_witness().is_some());
    }

    #[test]
    fn grouplike_coalgebra() {
        let co = Coalgebra::new(
            2,
            vec![
                Matrix::from_fn(2, 2, |a, b| c((a == 0 && b == 0) as i64)),
                Matrix::from_fn(2, 2, |a, b| c((a == 1 && b == 1) as i64)),
            ],
            vec![c(1), c(1)],
        );
        assert!(co.coassociativity_witness().is_none());
        assert!(co.counit_witness().is_none());
        assert!(co.is_grouplike(&[c(0), c(1)]));
        assert!(!co.is_grouplike(&[c(1), c(1)]));
        assert!(co.is_subcoalgebra(&Subspace::span(2, &[vec![c(1), c(0)]])));
        assert!(!co.is_subcoalgebra(&Subspace::span(2, &[vec![c(1), c(1)]])));
        assert!(co.is_coideal(&Subspace::span(2, &[vec![c(1), c(-1)]])));
    }
}
