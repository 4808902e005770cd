//! Dual algebras of coalgebras and the trace-form semisimplicity test.

use crate::exactlinalg::matrix::unit_vector;
use crate::exactlinalg::{CycloScalar, Matrix, Subspace, Vector};
use crate::hopfcore::{Coalgebra, FiniteAlgebra};

/// The dual algebra C* on the dual basis e^i: (f·g)(c) = f(c₁)g(c₂), unit ε.
pub fn dual_algebra(co: &Coalgebra) -> FiniteAlgebra {
    let n = co.dim();
    FiniteAlgebra::from_fn(n, co.counit().clone(), |a, b| {
        (0..n).map(|k| co.basis_comult(k)[(a, b)].clone()).collect()
    })
}

/// Outcome of the trace-form test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Semisimplicity {
    /// Nondegenerate trace form with its Gram determinant.
    Semisimple { determinant: CycloScalar },
    /// A nonzero vector in the kernel of the trace form, lying in the radical.
    NotSemisimple { radical_witness: Vector },
}

impl Semisimplicity {
    pub fn is_semisimple(&self) -> bool {
        matches!(self, Semisimplicity::Semisimple { .. })
    }
}

/// Gram matrix of T(x, y) = tr(L_x L_y) on the basis.
pub fn trace_form(alg: &FiniteAlgebra) -> Matrix {
    let n = alg.dim();
    let traces: Vec<Vec<CycloScalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| alg.regular_trace(alg.basis_product(i, j)))
                .collect()
        })
        .collect();
    Matrix::from_rows(traces, n)
}

/// Characteristic-zero criterion: semisimple iff the trace form is nondegenerate.
pub fn is_semisimple(alg: &FiniteAlgebra) -> Semisimplicity {
    let gram = trace_form(alg);
    let det = gram.determinant().expect("square Gram matrix");
    if !det.is_zero() {
        return Semisimplicity::Semisimple { determinant: det };
    }
    let witness = gram
        .kernel_basis()
        .into_iter()
        .next()
        .expect("singular Gram matrix has a kernel");
    Semisimplicity::NotSemisimple {
        radical_witness: witness,
    }
}

/// The center {z : z e_j = e_j z for all j}.
pub fn center(alg: &FiniteAlgebra) -> Subspace {
    let n = alg.dim();
    // rows: for each j and output coordinate k, Σ_i z_i (e_i e_j - e_j e_i)_k = 0
    let mut rows = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            rows.push(
                (0..n)
                    .map(|i| &alg.basis_product(i, j)[k] - &alg.basis_product(j, i)[k])
                    .collect::<Vector>(),
            );
        }
    }
    let m = Matrix::from_rows(rows, n);
    Subspace::span(n, &m.kernel_basis())
}

/// Whether `x` is nilpotent in the algebra.
pub fn is_nilpotent(alg: &FiniteAlgebra, x: &[CycloScalar]) -> bool {
    let n = alg.dim();
    let mut p = x.to_vec();
    for _ in 0..n {
        p = alg.mul(&p, x);
    }
    p.iter().all(CycloScalar::is_zero)
}

/// e^i as a vector of the dual algebra.
pub fn dual_basis_vector(n: usize, i: usize) -> Vector {
    unit_vector(n, i)
}
