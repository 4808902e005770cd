//! Central idempotents, simple subcoalgebras, Haar integrals and simple comodules.

use super::dual::{center, dual_algebra, is_semisimple};
use crate::error::{Error, Result};
use crate::exactlinalg::matrix::{axpy, zeros};
use crate::exactlinalg::poly::{
    minimal_polynomial_from_powers, roots_in_field, splitting_conductor_hint, Poly,
};
use crate::exactlinalg::{CycloScalar, Matrix, Subspace, Vector};
use crate::hopfcore::{Coalgebra, Comodule, FinHopfAlgebra, FiniteAlgebra};

/// Evaluates p(x) in `alg`, with `unit` standing for x⁰.
pub fn eval_in_algebra(
    alg: &FiniteAlgebra,
    p: &Poly,
    x: &[CycloScalar],
    unit: &[CycloScalar],
) -> Vector {
    let mut acc = zeros(alg.dim());
    for c in p.coeffs().iter().rev() {
        acc = alg.mul(&acc, x);
        axpy(&mut acc, c, unit);
    }
    acc
}

/// Minimal polynomial of x inside the corner algebra with unit `unit`.
fn corner_minimal_polynomial(alg: &FiniteAlgebra, x: &[CycloScalar], unit: &Vector) -> Poly {
    let xv = x.to_vec();
    minimal_polynomial_from_powers(unit.clone(), |v| alg.mul(&xv, v), alg.dim())
}

/// Splits `unit` along the distinct eigenvalues of `x` (which must commute with
/// the corner and have a squarefree minimal polynomial there).
fn lagrange_split(
    alg: &FiniteAlgebra,
    x: &Vector,
    unit: &Vector,
    conductor: u32,
) -> Result<Vec<Vector>> {
    let p = corner_minimal_polynomial(alg, x, unit);
    let deg = p.degree().unwrap_or(0);
    if deg <= 1 {
        return Ok(vec![unit.clone()]);
    }
    let roots = roots_in_field(&p, conductor);
    if roots.len() < deg {
        return Err(Error::SplittingFailure {
            conductor,
            degree: deg,
            hint: splitting_conductor_hint(&p, conductor),
        });
    }
    let mut out = Vec::with_capacity(deg);
    for (i, r) in roots.iter().enumerate() {
        let mut num = Poly::one();
        let mut den = CycloScalar::one();
        for (j, s) in roots.iter().enumerate() {
            if i != j {
                num = num.mul(&Poly::linear(s));
                den = &den * &(r - s);
            }
        }
        let lag = num.scale(&den.inv()?);
        out.push(eval_in_algebra(alg, &lag, x, unit));
    }
    Ok(out)
}

/// Central primitive idempotents of a split semisimple algebra.
///
/// Center basis vectors are used in index order to refine the idempotent set.
pub fn central_idempotents(alg: &FiniteAlgebra, conductor: u32) -> Result<Vec<Vector>> {
    let z = center(alg);
    let mut idems = vec![alg.unit().clone()];
    for zb in z.basis() {
        if idems.len() == z.dim() {
            break;
        }
        let mut next = Vec::new();
        for e in &idems {
            let ze = alg.mul(zb, e);
            next.extend(lagrange_split(alg, &ze, e, conductor)?);
        }
        idems = next;
    }
    if idems.len() != z.dim() {
        return Err(Error::Structural(format!(
            "center of dimension {} split into {} idempotents",
            z.dim(),
            idems.len()
        )));
    }
    Ok(idems)
}

/// f ⇀ c = c₁ f(c₂).
pub fn left_hit(co: &Coalgebra, f: &[CycloScalar], c: &[CycloScalar]) -> Vector {
    co.comult(c).apply(f)
}

/// c ↼ f = f(c₁) c₂.
pub fn right_hit(co: &Coalgebra, c: &[CycloScalar], f: &[CycloScalar]) -> Vector {
    co.comult(c).transpose().apply(f)
}

/// The decomposition of a cosemisimple coalgebra into simple subcoalgebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleDecomposition {
    /// Blocks D_α, ordered by first pivot column.
    pub blocks: Vec<Subspace>,
    /// The central primitive idempotent e_α of the dual algebra for each block.
    pub idempotents: Vec<Vector>,
    /// Index of the block containing the distinguished grouplike, if one was given.
    pub trivial_block_index: Option<usize>,
}

impl SimpleDecomposition {
    pub fn block_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(Subspace::dim).collect()
    }

    /// Index of the block containing `v`, if `v` lies in a single block.
    pub fn block_of(&self, v: &[CycloScalar]) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    /// The concatenated block bases as columns of a change-of-basis matrix.
    pub fn adapted_basis(&self, n: usize) -> Matrix {
        let cols: Vec<Vector> = self
            .blocks
            .iter()
            .flat_map(|b| b.basis().iter().cloned())
            .collect();
        Matrix::from_columns(&cols, n)
    }

    /// Offset of block α in the adapted basis.
    pub fn offset(&self, alpha: usize) -> usize {
        self.blocks[..alpha].iter().map(Subspace::dim).sum()
    }

    /// For each block, the functionals dual to its basis, extended by zero on the other blocks.
    pub fn dual_block_bases(&self, n: usize) -> Vec<Vec<Vector>> {
        let inv = self
            .adapted_basis(n)
            .inverse()
            .expect("blocks form a direct sum decomposition");
        self.blocks
            .iter()
            .enumerate()
            .map(|(a, b)| {
                let off = self.offset(a);
                (0..b.dim()).map(|j| inv.row_vec(off + j)).collect()
            })
            .collect()
    }
}

/// Decomposes a cosemisimple coalgebra as ⊕ e_α ⇀ C.
pub fn simple_subcoalgebras(
    co: &Coalgebra,
    conductor: u32,
    distinguished: Option<&Vector>,
) -> Result<SimpleDecomposition> {
    let alg = dual_algebra(co);
    if !is_semisimple(&alg).is_semisimple() {
        return Err(Error::Precondition(
            "coalgebra is not cosemisimple (dual algebra has a radical)".into(),
        ));
    }
    let idems = central_idempotents(&alg, conductor)?;
    let n = co.dim();
    let mut pairs: Vec<(Subspace, Vector)> = idems
        .into_iter()
        .map(|e| {
            let vs: Vec<Vector> = (0..n)
                .map(|i| left_hit(co, &e, &crate::exactlinalg::matrix::unit_vector(n, i)))
                .collect();
            (Subspace::span(n, &vs), e)
        })
        .collect();
    pairs.sort_by_key(|(b, _)| b.pivots().first().copied().unwrap_or(usize::MAX));
    let (blocks, idempotents): (Vec<Subspace>, Vec<Vector>) = pairs.into_iter().unzip();
    let total: usize = blocks.iter().map(Subspace::dim).sum();
    if total != n {
        return Err(Error::Structural(format!(
            "blocks have total dimension {total}, expected {n}"
        )));
    }
    let trivial_block_index = match distinguished {
        None => None,
        Some(g) => Some(blocks.iter().position(|b| b.contains(g)).ok_or_else(|| {
            Error::BlockPrecondition("distinguished element lies in no single block".into())
        })?),
    };
    Ok(SimpleDecomposition {
        blocks,
        idempotents,
        trivial_block_index,
    })
}

/// The Haar integral: ε on the block of g₀ and zero on every other block.
pub fn haar_integral(
    co: &Coalgebra,
    decomposition: &SimpleDecomposition,
    g0: &Vector,
) -> Result<Vector> {
    if !co.is_grouplike(g0) {
        return Err(Error::BlockPrecondition(
            "distinguished element is not grouplike".into(),
        ));
    }
    let alpha = decomposition.block_of(g0).ok_or_else(|| {
        Error::BlockPrecondition("distinguished grouplike lies in no block".into())
    })?;
    if decomposition.blocks[alpha].dim() != 1 {
        return Err(Error::BlockPrecondition(format!(
            "block of the distinguished grouplike has dimension {}",
            decomposition.blocks[alpha].dim()
        )));
    }
    Ok(decomposition.idempotents[alpha].clone())
}

/// The corner e·A·e of the dual algebra for a central idempotent e, as a list of spanning vectors.
fn corner_basis(alg: &FiniteAlgebra, e: &Vector) -> Vec<Vector> {
    let n = alg.dim();
    let vs: Vec<Vector> = (0..n)
        .map(|j| alg.mul(e, &crate::exactlinalg::matrix::unit_vector(n, j)))
        .collect();
    Subspace::span(n, &vs).basis().to_vec()
}

/// A primitive idempotent f of the block algebra e_α C*, found by splitting
/// generalized eigenspaces of candidate elements. `target` is the required
/// dimension of the right coideal D_α ↼ f.
fn primitive_idempotent(
    co: &Coalgebra,
    alg: &FiniteAlgebra,
    block: &Subspace,
    e: &Vector,
    conductor: u32,
) -> Result<Vector> {
    let m = block.dim();
    let target = (1..=m).find(|k| k * k == m).ok_or_else(|| {
        Error::BlockPrecondition(format!("block of dimension {m} is not a matrix coalgebra"))
    })?;
    if target == 1 {
        return Ok(e.clone());
    }
    let basis = corner_basis(alg, e);
    let mut candidates: Vec<Vector> = basis.clone();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j {
                let mut v = basis[i].clone();
                axpy(&mut v, &CycloScalar::from_int(2 + j as i64), &basis[j]);
                candidates.push(v);
            }
        }
    }
    let coideal_dim = |f: &Vector| {
        let vs: Vec<Vector> = block.basis().iter().map(|c| right_hit(co, c, f)).collect();
        Subspace::span(co.dim(), &vs).dim()
    };
    for u in &candidates {
        let p = corner_minimal_polynomial(alg, u, e);
        if p.degree().unwrap_or(0) < 2 {
            continue;
        }
        for r in roots_in_field(&p.squarefree_part(), conductor) {
            // p = (x - r)^k q with q(r) ≠ 0
            let lin = Poly::linear(&r);
            let mut power = Poly::one();
            let mut q = p.clone();
            loop {
                let (quot, rem) = q.divmod(&lin);
                if !rem.is_zero() {
                    break;
                }
                q = quot;
                power = power.mul(&lin);
            }
            let (g, _s, t) = power.ext_gcd(&q);
            if g.degree() != Some(0) {
                continue;
            }
            let proj = eval_in_algebra(alg, &t.mul(&q), u, e);
            if coideal_dim(&proj) == target {
                return Ok(proj);
            }
        }
    }
    Err(Error::SplittingFailure {
        conductor,
        degree: target,
        hint: None,
    })
}

/// A simple comodule V_α = D_α ↼ f for a primitive idempotent f of the block algebra.
pub fn simple_comodule(
    h: &FinHopfAlgebra,
    decomposition: &SimpleDecomposition,
    alpha: usize,
) -> Result<Comodule> {
    let co = h.coalgebra();
    let alg = dual_algebra(co);
    let block = &decomposition.blocks[alpha];
    let f = primitive_idempotent(
        co,
        &alg,
        block,
        &decomposition.idempotents[alpha],
        h.conductor(),
    )?;
    let vs: Vec<Vector> = block.basis().iter().map(|c| right_hit(co, c, &f)).collect();
    let v = Subspace::span(h.dim(), &vs);
    Comodule::from_right_coideal(h, &v)
}

/// Matrix coefficients c_ij of a simple right coideal V ⊆ D_α, with Δ(v_j) = Σ_i v_i ⊗ c_ij.
/// Works for any cosemisimple coalgebra, not only Hopf algebras.
pub fn block_matrix_coefficients(
    co: &Coalgebra,
    decomposition: &SimpleDecomposition,
    alpha: usize,
    conductor: u32,
) -> Result<Vec<Vec<Vector>>> {
    let alg = dual_algebra(co);
    let block = &decomposition.blocks[alpha];
    let f = primitive_idempotent(
        co,
        &alg,
        block,
        &decomposition.idempotents[alpha],
        conductor,
    )?;
    let vs: Vec<Vector> = block.basis().iter().map(|c| right_hit(co, c, &f)).collect();
    let v = Subspace::span(co.dim(), &vs);
    let n = co.dim();
    let d = v.dim();
    let mut coeffs = vec![vec![zeros(n); d]; d];
    for (j, x) in v.basis().iter().enumerate() {
        let dx = co.comult(x);
        for k in 0..n {
            let coords = v
                .coordinates(&dx.column(k))
                .ok_or_else(|| Error::NotAComodule {
                    identity: "right coideal".into(),
                    witness: vec![j],
                })?;
            for (i, a) in coords.into_iter().enumerate() {
                coeffs[i][j][k] = a;
            }
        }
    }
    Ok(coeffs)
}
