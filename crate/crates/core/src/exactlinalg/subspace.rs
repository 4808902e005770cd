//! Subspaces of k^n in canonical reduced-echelon form.

use super::cyclo::CycloScalar;
use super::matrix::{axpy, is_zero_vec, unit_vector, zeros, Matrix, Vector};
use crate::error::{Error, Result};

/// A subspace of k^n stored as the nonzero rows of a reduced echelon basis.
///
/// Two subspaces are equal iff their stored bases are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let rows: Vec<Vector> = vectors
            .iter()
            .filter(|v| !is_zero_vec(v))
            .cloned()
            .collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let rref = Matrix::from_rows(rows, ambient).rref();
        Subspace {
            ambient,
            basis: rref.matrix.row_vectors(),
            pivots: rref.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[CycloScalar]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut residual, &-c, b);
        }
        if is_zero_vec(&residual) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[CycloScalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // solve Σ a_i u_i = Σ b_j w_j
        let d1 = self.dim();
        let mut cols: Vec<Vector> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(&cols, self.ambient);
        let vs: Vec<Vector> = m
            .kernel_basis()
            .into_iter()
            .map(|k| {
                let mut v = zeros(self.ambient);
                for (a, u) in k[..d1].iter().zip(&self.basis) {
                    axpy(&mut v, a, u);
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vs)
    }

    /// Image of the subspace under a linear map given by a matrix.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::span(m.rows(), &vs)
    }

    /// Indices not used as pivots; they index a complement basis.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// The quotient k^n / self with its projection and a section.
    pub fn quotient(&self) -> Quotient {
        Quotient::new(self.clone())
    }
}

/// The quotient k^n / K realized on the complement spanned by non-pivot unit vectors.
#[derive(Debug, Clone)]
pub struct Quotient {
    kernel: Subspace,
    complement: Vec<usize>,
}

impl Quotient {
    pub fn new(kernel: Subspace) -> Self {
        let complement = kernel.non_pivots();
        Quotient { kernel, complement }
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.kernel.ambient
    }

    /// Indices of the ambient unit vectors chosen as quotient basis representatives.
    pub fn representatives(&self) -> &[usize] {
        &self.complement
    }

    pub fn project(&self, v: &[CycloScalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.kernel.basis.iter().zip(&self.kernel.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                axpy(&mut r, &-c, b);
            }
        }
        self.complement.iter().map(|&j| r[j].clone()).collect()
    }

    pub fn section(&self, q: &[CycloScalar]) -> Vector {
        let mut v = zeros(self.ambient_dim());
        for (c, &j) in q.iter().zip(&self.complement) {
            v[j] = c.clone();
        }
        v
    }

    /// Matrix of the projection (dim × ambient).
    pub fn projection_matrix(&self) -> Matrix {
        let n = self.ambient_dim();
        let cols: Vec<Vector> = (0..n).map(|i| self.project(&unit_vector(n, i))).collect();
        Matrix::from_columns(&cols, self.dim())
    }

    /// Matrix of the section (ambient × dim).
    pub fn section_matrix(&self) -> Matrix {
        let n = self.ambient_dim();
        let cols: Vec<Vector> = self.complement.iter().map(|&j| unit_vector(n, j)).collect();
        Matrix::from_columns(&cols, n)
    }
}

/// Checks that `v` has length `n`.
pub fn check_len(v: &[CycloScalar], n: usize) -> Result<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| CycloScalar::from_int(x)).collect()
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(3));
    }

    #[test]
    fn quotient_projection_kills_kernel() {
        let k = Subspace::span(3, &[v(&[1, -1, 0])]);
        let q = k.quotient();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&v(&[1, -1, 0])), v(&[0, 0]));
        assert_eq!(q.project(&v(&[1, 0, 0])), q.project(&v(&[0, 1, 0])));
        let s = q.section(&v(&[2, 3]));
        assert_eq!(q.project(&s), v(&[2, 3]));
    }

    #[test]
    fn coordinates_roundtrip() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let c = a.coordinates(&v(&[2, 2, 5])).unwrap();
        assert_eq!(c, v(&[2, 5]));
        assert!(a.coordinates(&v(&[1, 0, 0])).is_none());
    }
}
