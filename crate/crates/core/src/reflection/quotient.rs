//! Quotient left module coalgebras C = H/K and the two reflections.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlinalg::matrix::{is_zero_vec, unit_vector};
use crate::exactlinalg::{CycloScalar, Matrix, Quotient, Subspace, Vector};
use crate::hopfcore::algebra::{flatten, outer};
use crate::hopfcore::{Coalgebra, CoidealSubalgebra, FinHopfAlgebra, FiniteAlgebra};
use crate::report::{Check, Report};

/// C = H/K for a coideal left ideal K, with the induced coalgebra and left H-action.
#[derive(Debug, Clone)]
pub struct QuotientModuleCoalgebra {
    parent: Arc<FinHopfAlgebra>,
    quotient: Quotient,
    proj: Matrix,
    section: Matrix,
    coalgebra: Coalgebra,
    one_bar: Vector,
}

impl QuotientModuleCoalgebra {
    /// Builds C = H/K, checking that K is a left ideal and a coideal.
    pub fn new(parent: Arc<FinHopfAlgebra>, kernel: Subspace) -> Result<Self> {
        let n = parent.dim();
        for (idx, k) in kernel.basis().iter().enumerate() {
            for i in 0..n {
                if !kernel.contains(&parent.mul(&unit_vector(n, i), k)) {
                    return Err(Error::Structural(format!(
                        "kernel is not a left ideal: e_{i} times kernel vector {idx}"
                    )));
                }
            }
        }
        if !parent.coalgebra().is_coideal(&kernel) {
            return Err(Error::Structural(
                "induced comultiplication is ill-defined: kernel is not a coideal".into(),
            ));
        }
        let quotient = kernel.quotient();
        let proj = quotient.projection_matrix();
        let section = quotient.section_matrix();
        let m = quotient.dim();
        let comult = (0..m)
            .map(|i| {
                let d = parent.comult(&section.column(i));
                proj.mul(&d).mul(&proj.transpose())
            })
            .collect();
        let counit = (0..m).map(|i| parent.epsilon(&section.column(i))).collect();
        let one_bar = proj.apply(parent.one());
        Ok(QuotientModuleCoalgebra {
            parent,
            quotient,
            proj,
            section,
            coalgebra: Coalgebra::new(m, comult, counit),
            one_bar,
        })
    }

    pub fn parent(&self) -> &Arc<FinHopfAlgebra> {
        &self.parent
    }

    pub fn kernel(&self) -> &Subspace {
        self.quotient.kernel()
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Matrix of π (dim C × dim H).
    pub fn proj(&self) -> &Matrix {
        &self.proj
    }

    /// Matrix of the section σ (dim H × dim C).
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    /// 1̄ = π(1).
    pub fn one_bar(&self) -> &Vector {
        &self.one_bar
    }

    pub fn project(&self, h: &[CycloScalar]) -> Vector {
        self.proj.apply(h)
    }

    pub fn lift(&self, c: &[CycloScalar]) -> Vector {
        self.section.apply(c)
    }

    /// x·c = π(x σ(c)).
    pub fn act(&self, x: &[CycloScalar], c: &[CycloScalar]) -> Vector {
        self.project(&self.parent.mul(x, &self.lift(c)))
    }

    /// Labels of the representative basis vectors.
    pub fn labels(&self) -> Vec<String> {
        self.quotient
            .representatives()
            .iter()
            .map(|&j| format!("[{}]", self.parent.labels()[j]))
            .collect()
    }

    /// Pulls a map on C back along the section and pushes it through π: π∘M∘σ.
    pub fn descend(&self, m: &Matrix) -> Matrix {
        self.proj.mul(m).mul(&self.section)
    }

    /// Whether M (a map H → H) maps the kernel into itself.
    pub fn preserves_kernel(&self, m: &Matrix) -> bool {
        self.kernel()
            .basis()
            .iter()
            .all(|k| is_zero_vec(&self.project(&m.apply(k))))
    }

    /// Coalgebra axioms of C plus the module-coalgebra compatibility
    /// Δ_C(x·c) = x₁·c₁ ⊗ x₂·c₂ (witness [x, c]).
    pub fn verify(&self) -> Report {
        let mut r = Report::new();
        r.push(Check::from_witness(
            "quotient_coassociativity",
            self.coalgebra.coassociativity_witness(),
        ));
        r.push(Check::from_witness(
            "quotient_counit",
            self.coalgebra.counit_witness(),
        ));
        let n = self.parent.dim();
        let m = self.dim();
        let mut witness = None;
        'outer: for x in 0..n {
            let dx = self.parent.coalgebra().basis_comult(x);
            for c in 0..m {
                let lhs = self
                    .coalgebra
                    .comult(&self.act(&unit_vector(n, x), &unit_vector(m, c)));
                let dc = self.coalgebra.basis_comult(c);
                let mut rhs = Matrix::zeros(m, m);
                for a in 0..n {
                    for b in 0..n {
                        let s = &dx[(a, b)];
                        if s.is_zero() {
                            continue;
                        }
                        for p in 0..m {
                            for q in 0..m {
                                let t = &dc[(p, q)];
                                if t.is_zero() {
                                    continue;
                                }
                                let u = self.act(&unit_vector(n, a), &unit_vector(m, p));
                                let v = self.act(&unit_vector(n, b), &unit_vector(m, q));
                                rhs = rhs.add(&outer(&u, &v).scale(&(s * t)));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    witness = Some(vec![x, c]);
                    break 'outer;
                }
            }
        }
        r.push(Check::from_witness("module_coalgebra", witness));
        r
    }
}

/// r(A) = H/HA⁺.
pub fn right_reflection(a: &CoidealSubalgebra) -> Result<QuotientModuleCoalgebra> {
    QuotientModuleCoalgebra::new(a.parent().clone(), a.left_ideal())
}

/// The coinvariants {h : (π⊗id)Δh = 1̄⊗h} as a subspace.
pub fn coinvariants(c: &QuotientModuleCoalgebra) -> Subspace {
    let h = c.parent();
    let n = h.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|j| {
            let d = h.coalgebra().basis_comult(j);
            let lhs = c.proj().mul(d);
            let rhs = outer(c.one_bar(), &unit_vector(n, j));
            flatten(&lhs.sub(&rhs))
        })
        .collect();
    let m = Matrix::from_columns(&cols, c.dim() * n);
    Subspace::span(n, &m.kernel_basis())
}

/// r(C) = ᶜH, validated as a right coideal subalgebra.
pub fn left_reflection(c: &QuotientModuleCoalgebra) -> Result<CoidealSubalgebra> {
    let space = coinvariants(c);
    CoidealSubalgebra::new("coinvariants", c.parent().clone(), space).map_err(|e| {
        Error::Structural(format!(
            "coinvariants are not a right coideal subalgebra: {e}"
        ))
    })
}

/// Exactness of A → H → C: A and C are each other's reflections.
pub fn check_exact_sequence(a: &CoidealSubalgebra, c: &QuotientModuleCoalgebra) -> Result<Report> {
    if !Arc::ptr_eq(a.parent(), c.parent()) && a.parent() != c.parent() {
        return Err(Error::Precondition("A and C have different parents".into()));
    }
    let h = a.parent();
    for (i, x) in a.space().basis().iter().enumerate() {
        let lhs = c.project(x);
        let rhs: Vector = c.one_bar().iter().map(|u| u * &h.epsilon(x)).collect();
        if lhs != rhs {
            return Err(Error::Precondition(format!(
                "π∘ι does not factor through ε at basis vector {i} of A"
            )));
        }
    }
    let ra = right_reflection(a)?;
    let rc = left_reflection(c)?;
    let rrc = right_reflection(&rc)?;
    let rra = left_reflection(&ra)?;
    let mut r = Report::new();
    r.push(Check::from_bool("r(A) = C", ra.kernel() == c.kernel()));
    r.push(Check::from_bool("r(C) = A", rc.space() == a.space()));
    r.push(Check::from_bool(
        "A <= r(r(A))",
        rra.space().contains_subspace(a.space()),
    ));
    r.push(Check::from_bool(
        "ker r(r(C)) <= ker C",
        c.kernel().contains_subspace(rrc.kernel()),
    ));
    Ok(r)
}

/// Result of the conormality test.
#[derive(Debug, Clone)]
pub struct Conormality {
    pub conormal: bool,
    /// The quotient Hopf algebra H/HA⁺ when A is conormal.
    pub quotient: Option<FinHopfAlgebra>,
    /// Axiom report of the quotient Hopf algebra, when built.
    pub report: Report,
}

/// HA⁺ = A⁺H; when it holds, C is built and checked as a quotient Hopf algebra.
pub fn is_conormal(a: &CoidealSubalgebra) -> Result<Conormality> {
    if !a.is_hopf() {
        return Err(Error::Precondition(format!(
            "{} is not a Hopf subalgebra",
            a.name()
        )));
    }
    let left = a.left_ideal();
    if left != a.right_ideal() {
        return Ok(Conormality {
            conormal: false,
            quotient: None,
            report: Report::new(),
        });
    }
    let h = a.parent();
    let c = QuotientModuleCoalgebra::new(h.clone(), left)?;
    if !c.preserves_kernel(h.antipode_matrix()) {
        return Err(Error::Descent {
            map: "antipode".into(),
        });
    }
    let m = c.dim();
    let alg = FiniteAlgebra::from_fn(m, c.one_bar().clone(), |i, j| {
        c.project(&h.mul(&c.section().column(i), &c.section().column(j)))
    });
    let star = match h.star_matrix() {
        Some(s) if c.preserves_kernel(s) => Some(c.descend(s)),
        _ => None,
    };
    let quotient = FinHopfAlgebra::from_parts(
        format!("{}/{}", h.name(), a.name()),
        h.conductor(),
        c.labels(),
        alg,
        c.coalgebra().clone(),
        c.descend(h.antipode_matrix()),
        star,
    )?;
    let mut report = quotient.verify_axioms();
    if quotient.has_star() {
        report.extend(quotient.verify_star_axioms());
    }
    Ok(Conormality {
        conormal: true,
        quotient: Some(quotient),
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::builtin;

    #[test]
    fn trivial_and_full_reflections() {
        let inst = builtin("kS3").unwrap();
        let triv = inst.subalgebra("trivial").unwrap();
        let c = right_reflection(triv).unwrap();
        assert_eq!(c.dim(), 6);
        assert_eq!(left_reflection(&c).unwrap().dim(), 1);
        let full = inst.subalgebra("full").unwrap();
        let c = right_reflection(full).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(left_reflection(&c).unwrap().dim(), 6);
    }

    #[test]
    fn coset_quotient_is_pointed_with_three_grouplikes() {
        let inst = builtin("kS3").unwrap();
        let a = inst.subalgebra("kC2_12").unwrap();
        let c = right_reflection(a).unwrap();
        assert_eq!(c.dim(), 3);
        for i in 0..3 {
            assert!(c.coalgebra().is_grouplike(&unit_vector(3, i)));
        }
        assert!(c.verify().all_pass());
        assert_eq!(left_reflection(&c).unwrap().space(), a.space());
    }

    #[test]
    fn conormality() {
        let inst = builtin("kS3").unwrap();
        assert!(
            !is_conormal(inst.subalgebra("kC2_12").unwrap())
                .unwrap()
                .conormal
        );
        let a3 = is_conormal(inst.subalgebra("kA3").unwrap()).unwrap();
        assert!(a3.conormal);
        assert_eq!(a3.quotient.as_ref().unwrap().dim(), 2);
        assert!(a3.report.all_pass());
        assert!(
            is_conormal(inst.subalgebra("full").unwrap())
                .unwrap()
                .conormal
        );
    }

    #[test]
    fn non_exact_pair_is_detected() {
        let inst = builtin("kS3").unwrap();
        let c = right_reflection(inst.subalgebra("kC2_12").unwrap()).unwrap();
        let r = check_exact_sequence(inst.subalgebra("trivial").unwrap(), &c).unwrap();
        assert!(r.get("r(A) = C").unwrap().status == crate::report::Status::Fail);
        assert!(r.get("r(C) = A").unwrap().status == crate::report::Status::Fail);
        assert!(r.get("A <= r(r(A))").unwrap().passed());
    }
}
