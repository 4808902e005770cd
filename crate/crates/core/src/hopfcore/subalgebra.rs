//! Subalgebras, ideals and coideal subalgebras of a Hopf algebra.

use std::sync::Arc;

use super::hopf::FinHopfAlgebra;
use crate::error::{Error, Result};
use crate::exactlinalg::matrix::is_zero_vec;
use crate::exactlinalg::{Matrix, Subspace, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubalgebraKind {
    RightCoideal,
    Hopf,
}

/// The smallest unital subalgebra containing `gens`.
pub fn generated_subalgebra(h: &FinHopfAlgebra, gens: &[Vector]) -> Result<Subspace> {
    let n = h.dim();
    let mut vs = vec![h.one().clone()];
    vs.extend(gens.iter().cloned());
    let mut cur = Subspace::span(n, &vs);
    for _ in 0..=n {
        let mut all: Vec<Vector> = cur.basis().to_vec();
        for a in cur.basis() {
            for b in cur.basis() {
                all.push(h.mul(a, b));
            }
        }
        let next = Subspace::span(n, &all);
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::Structural(
        "subalgebra closure did not stabilize".into(),
    ))
}

/// A⁺ = A ∩ ker ε.
pub fn augmentation_ideal(h: &FinHopfAlgebra, a: &Subspace) -> Subspace {
    let n = h.dim();
    let ker_eps = Subspace::span(
        n,
        &Matrix::from_rows(vec![h.coalgebra().counit().clone()], n).kernel_basis(),
    );
    a.intersect(&ker_eps)
}

/// H·G (left) or G·H (right).
pub fn one_sided_ideal(h: &FinHopfAlgebra, g: &Subspace, side: Side) -> Subspace {
    let n = h.dim();
    let mut vs = Vec::new();
    for i in 0..n {
        let e = h.basis_vector(i);
        for x in g.basis() {
            vs.push(match side {
                Side::Left => h.mul(&e, x),
                Side::Right => h.mul(x, &e),
            });
        }
    }
    Subspace::span(n, &vs)
}

/// Whether Δ(V) ⊆ V⊗H.
pub fn is_right_coideal(h: &FinHopfAlgebra, v: &Subspace) -> bool {
    let q = v.quotient();
    v.basis().iter().all(|x| {
        let d = h.comult(x);
        (0..h.dim()).all(|b| is_zero_vec(&q.project(&d.column(b))))
    })
}

pub fn is_unital_subalgebra(h: &FinHopfAlgebra, v: &Subspace) -> bool {
    v.contains(h.one()) && h.algebra().is_closed(v)
}

pub fn is_right_coideal_subalgebra(h: &FinHopfAlgebra, v: &Subspace) -> bool {
    is_unital_subalgebra(h, v) && is_right_coideal(h, v)
}

/// Why `v` fails to be a Hopf (*-)subalgebra, if it does.
pub fn hopf_subalgebra_defect(h: &FinHopfAlgebra, v: &Subspace) -> Option<&'static str> {
    if !v.contains(h.one()) {
        return Some("does not contain the unit");
    }
    if !h.algebra().is_closed(v) {
        return Some("not closed under multiplication");
    }
    if !h.coalgebra().is_subcoalgebra(v) {
        return Some("not a subcoalgebra");
    }
    if !v.basis().iter().all(|x| v.contains(&h.antipode(x))) {
        return Some("not stable under the antipode");
    }
    if h.has_star() && !v.basis().iter().all(|x| v.contains(&h.star(x))) {
        return Some("not stable under the star");
    }
    None
}

/// A right coideal subalgebra A ⊆ H together with its parent.
#[derive(Debug, Clone)]
pub struct CoidealSubalgebra {
    name: String,
    parent: Arc<FinHopfAlgebra>,
    space: Subspace,
    kind: SubalgebraKind,
}

impl CoidealSubalgebra {
    /// Validates `space` as a right coideal subalgebra; the kind is `Hopf` when
    /// it is moreover a Hopf (*-)subalgebra.
    pub fn new(
        name: impl Into<String>,
        parent: Arc<FinHopfAlgebra>,
        space: Subspace,
    ) -> Result<Self> {
        let name = name.into();
        if space.ambient_dim() != parent.dim() {
            return Err(Error::DimensionMismatch {
                expected: parent.dim(),
                found: space.ambient_dim(),
            });
        }
        if !is_unital_subalgebra(&parent, &space) {
            return Err(Error::SubalgebraValidation {
                name,
                reason: "not a unital subalgebra".into(),
            });
        }
        if !is_right_coideal(&parent, &space) {
            return Err(Error::SubalgebraValidation {
                name,
                reason: "not a right coideal".into(),
            });
        }
        let kind = if hopf_subalgebra_defect(&parent, &space).is_none() {
            SubalgebraKind::Hopf
        } else {
            SubalgebraKind::RightCoideal
        };
        Ok(CoidealSubalgebra {
            name,
            parent,
            space,
            kind,
        })
    }

    /// Validates `space` as a Hopf (*-)subalgebra.
    pub fn hopf(
        name: impl Into<String>,
        parent: Arc<FinHopfAlgebra>,
        space: Subspace,
    ) -> Result<Self> {
        let name = name.into();
        if let Some(reason) = hopf_subalgebra_defect(&parent, &space) {
            return Err(Error::SubalgebraValidation {
                name,
                reason: reason.into(),
            });
        }
        Self::new(name, parent, space)
    }

    /// The subalgebra generated by `gens`, validated as a Hopf subalgebra.
    pub fn generated(
        name: impl Into<String>,
        parent: Arc<FinHopfAlgebra>,
        gens: &[Vector],
    ) -> Result<Self> {
        let space = generated_subalgebra(&parent, gens)?;
        Self::hopf(name, parent, space)
    }

    pub fn trivial(parent: Arc<FinHopfAlgebra>) -> Self {
        let space = Subspace::span(parent.dim(), &[parent.one().clone()]);
        Self::hopf("trivial", parent, space).expect("k·1 is a Hopf subalgebra")
    }

    pub fn full(parent: Arc<FinHopfAlgebra>) -> Self {
        let space = Subspace::full(parent.dim());
        Self::hopf("full", parent, space).expect("H is a Hopf subalgebra of itself")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn parent(&self) -> &Arc<FinHopfAlgebra> {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn kind(&self) -> SubalgebraKind {
        self.kind
    }

    pub fn is_hopf(&self) -> bool {
        self.kind == SubalgebraKind::Hopf
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn augmentation(&self) -> Subspace {
        augmentation_ideal(&self.parent, &self.space)
    }

    /// H·A⁺.
    pub fn left_ideal(&self) -> Subspace {
        one_sided_ideal(&self.parent, &self.augmentation(), Side::Left)
    }

    /// A⁺·H.
    pub fn right_ideal(&self) -> Subspace {
        one_sided_ideal(&self.parent, &self.augmentation(), Side::Right)
    }
}
