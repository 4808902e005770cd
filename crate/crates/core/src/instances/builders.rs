//! Builders for group algebras, function algebras and the Taft algebra.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactlinalg::matrix::{unit_vector, zeros};
use crate::exactlinalg::{CycloScalar, Matrix, Vector};
use crate::hopfcore::{Coalgebra, FinHopfAlgebra, FiniteAlgebra};

use super::group::GroupTable;

fn one() -> CycloScalar {
    CycloScalar::one()
}

/// kG with Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹ and g* = g⁻¹.
pub fn group_algebra(name: &str, g: &GroupTable) -> FinHopfAlgebra {
    let n = g.order();
    let alg = FiniteAlgebra::from_fn(n, unit_vector(n, g.identity()), |a, b| {
        unit_vector(n, g.mul(a, b))
    });
    let comult = (0..n)
        .map(|x| {
            let mut m = Matrix::zeros(n, n);
            m[(x, x)] = one();
            m
        })
        .collect();
    let co = Coalgebra::new(n, comult, vec![one(); n]);
    let inv = Matrix::from_fn(n, n, |i, j| {
        if g.inv(j) == i {
            one()
        } else {
            CycloScalar::zero()
        }
    });
    FinHopfAlgebra::new(
        name,
        g.exponent() as u32,
        g.labels().to_vec(),
        alg,
        co,
        inv.clone(),
        Some(inv),
    )
    .expect("group algebra axioms")
}

/// k^G on the indicator basis δ_g with pointwise product, Δδ_g = Σ_{ab=g} δ_a⊗δ_b,
/// S(δ_g) = δ_{g⁻¹} and δ_g* = δ_g.
pub fn function_algebra(name: &str, g: &GroupTable) -> FinHopfAlgebra {
    let n = g.order();
    let alg = FiniteAlgebra::from_fn(n, vec![one(); n], |a, b| {
        if a == b {
            unit_vector(n, a)
        } else {
            zeros(n)
        }
    });
    let comult = (0..n)
        .map(|x| {
            Matrix::from_fn(n, n, |a, b| {
                if g.mul(a, b) == x {
                    one()
                } else {
                    CycloScalar::zero()
                }
            })
        })
        .collect();
    let co = Coalgebra::new(n, comult, unit_vector(n, g.identity()));
    let inv = Matrix::from_fn(n, n, |i, j| {
        if g.inv(j) == i {
            one()
        } else {
            CycloScalar::zero()
        }
    });
    let labels = g.labels().iter().map(|l| format!("d_{l}")).collect();
    FinHopfAlgebra::new(
        name,
        g.exponent() as u32,
        labels,
        alg,
        co,
        inv,
        Some(Matrix::identity(n)),
    )
    .expect("function algebra axioms")
}

/// Generators e_k (k in K) of the group subalgebra kK ⊆ kG.
pub fn subgroup_generators(g: &GroupTable, k: &BTreeSet<usize>) -> Result<Vec<Vector>> {
    if !g.is_subgroup(k) {
        return Err(Error::InvalidGroupTable("not a subgroup".into()));
    }
    Ok(k.iter().map(|&x| unit_vector(g.order(), x)).collect())
}

/// Coset indicators spanning k^{G/N} ⊆ k^G for a normal subgroup N.
pub fn pullback_generators(g: &GroupTable, normal: &BTreeSet<usize>) -> Result<Vec<Vector>> {
    if !g.is_subgroup(normal) {
        return Err(Error::InvalidGroupTable("not a subgroup".into()));
    }
    if !g.is_normal(normal) {
        return Err(Error::InvalidGroupTable("subgroup is not normal".into()));
    }
    Ok(g.left_cosets(normal)
        .iter()
        .map(|c| {
            let mut v = zeros(g.order());
            for &x in c {
                v[x] = one();
            }
            v
        })
        .collect())
}

/// The Taft algebra T₄ on the basis 1, g, x, gx: g² = 1, x² = 0, xg = −gx,
/// Δg = g⊗g, Δx = x⊗1 + g⊗x, S(g) = g, S(x) = −gx. No star.
pub fn taft4() -> FinHopfAlgebra {
    let n = 4;
    let c = CycloScalar::from_int;
    // words g^a x^b as (a, b) with index a + 2b
    let idx = |a: usize, b: usize| a + 2 * b;
    let alg = FiniteAlgebra::from_fn(n, unit_vector(n, 0), |i, j| {
        let (a1, b1) = (i % 2, i / 2);
        let (a2, b2) = (j % 2, j / 2);
        if b1 + b2 > 1 {
            return zeros(n);
        }
        // x^b1 g^a2 = (-1)^(a2 b1) g^a2 x^b1
        let sign = if a2 * b1 % 2 == 1 { -1 } else { 1 };
        let mut v = zeros(n);
        v[idx((a1 + a2) % 2, b1 + b2)] = c(sign);
        v
    });
    let mut comult = vec![Matrix::zeros(n, n); n];
    comult[0][(0, 0)] = one();
    comult[1][(1, 1)] = one();
    // Δx = x⊗1 + g⊗x
    comult[2][(2, 0)] = one();
    comult[2][(1, 2)] = one();
    // Δ(gx) = gx⊗g + 1⊗gx
    comult[3][(3, 1)] = one();
    comult[3][(0, 3)] = one();
    let co = Coalgebra::new(n, comult, vec![one(), one(), c(0), c(0)]);
    let mut s = Matrix::zeros(n, n);
    s[(0, 0)] = one();
    s[(1, 1)] = one();
    s[(3, 2)] = c(-1);
    s[(2, 3)] = one();
    FinHopfAlgebra::new(
        "taft4",
        2,
        vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        alg,
        co,
        s,
        None,
    )
    .expect("Taft algebra axioms")
}
