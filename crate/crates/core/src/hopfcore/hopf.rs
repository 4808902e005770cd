//! The Hopf (*-)algebra data model and its axiom checks.

use super::algebra::{outer, Coalgebra, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::exactlinalg::matrix::{dot, unit_vector, vec_conj};
use crate::exactlinalg::{CycloScalar, LinMap, Matrix, Vector};
use crate::report::{Check, Report};

/// Axiom names in report order.
pub const AXIOMS: [&str; 10] = [
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comult_multiplicative",
    "comult_unit",
    "counit_multiplicative",
    "counit_unit",
    "antipode_left",
    "antipode_right",
];

/// Star axiom names in report order.
pub const STAR_AXIOMS: [&str; 4] = [
    "star_involutive",
    "star_antimultiplicative",
    "star_comult",
    "star_counit",
];

/// A finite-dimensional Hopf algebra over Q(ζ_N), optionally with a star.
///
/// The antipode matrix has S(e_j) in column j. The star is stored as the
/// matrix M with x* = M·conj(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinHopfAlgebra {
    name: String,
    conductor: u32,
    labels: Vec<String>,
    algebra: FiniteAlgebra,
    coalgebra: Coalgebra,
    antipode: Matrix,
    star: Option<Matrix>,
}

impl FinHopfAlgebra {
    /// Assembles structure data without checking the axioms.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        name: impl Into<String>,
        conductor: u32,
        labels: Vec<String>,
        algebra: FiniteAlgebra,
        coalgebra: Coalgebra,
        antipode: Matrix,
        star: Option<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let check = |found: usize| {
            if found == n {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected: n, found })
            }
        };
        check(coalgebra.dim())?;
        check(labels.len())?;
        check(antipode.rows())?;
        check(antipode.cols())?;
        if let Some(s) = &star {
            check(s.rows())?;
            check(s.cols())?;
        }
        Ok(FinHopfAlgebra {
            name: name.into(),
            conductor,
            labels,
            algebra,
            coalgebra,
            antipode,
            star,
        })
    }

    /// Assembles and validates; fails with the first violated axiom.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        conductor: u32,
        labels: Vec<String>,
        algebra: FiniteAlgebra,
        coalgebra: Coalgebra,
        antipode: Matrix,
        star: Option<Matrix>,
    ) -> Result<Self> {
        let h = Self::from_parts(name, conductor, labels, algebra, coalgebra, antipode, star)?;
        h.validate()?;
        Ok(h)
    }

    /// Errors with the first failing axiom (star axioms included when present).
    pub fn validate(&self) -> Result<()> {
        let mut report = self.verify_axioms();
        if self.has_star() {
            report.extend(self.verify_star_axioms());
        }
        let first = report.failures().next().map(|c| Error::AxiomFailure {
            axiom: c.name.clone(),
            witness: c.witness.clone().unwrap_or_default(),
        });
        first.map_or(Ok(()), Err)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn algebra_mut(&mut self) -> &mut FiniteAlgebra {
        &mut self.algebra
    }

    pub fn coalgebra_mut(&mut self) -> &mut Coalgebra {
        &mut self.coalgebra
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_matrix_mut(&mut self) -> &mut Matrix {
        &mut self.antipode
    }

    pub fn star_matrix(&self) -> Option<&Matrix> {
        self.star.as_ref()
    }

    pub fn star_matrix_mut(&mut self) -> Option<&mut Matrix> {
        self.star.as_mut()
    }

    pub fn with_star(mut self, star: Option<Matrix>) -> Self {
        self.star = star;
        self
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    pub fn one(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    pub fn mul(&self, a: &[CycloScalar], b: &[CycloScalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn comult(&self, v: &[CycloScalar]) -> Matrix {
        self.coalgebra.comult(v)
    }

    pub fn epsilon(&self, v: &[CycloScalar]) -> CycloScalar {
        self.coalgebra.epsilon(v)
    }

    pub fn antipode(&self, v: &[CycloScalar]) -> Vector {
        self.antipode.apply(v)
    }

    pub fn antipode_map(&self) -> LinMap {
        LinMap::linear(self.antipode.clone())
    }

    /// S² as a matrix.
    pub fn antipode_squared(&self) -> Matrix {
        self.antipode.mul(&self.antipode)
    }

    pub fn star_map(&self) -> Option<LinMap> {
        self.star.as_ref().map(|m| LinMap::antilinear(m.clone()))
    }

    /// x* (requires a star).
    pub fn star(&self, v: &[CycloScalar]) -> Vector {
        self.star
            .as_ref()
            .expect("star structure present")
            .apply(&vec_conj(v))
    }

    /// m ∘ (f ⊗ g) applied to a tensor given as a coefficient matrix.
    fn contract_mult(&self, t: &Matrix, left: &Matrix, right: &Matrix) -> Vector {
        let n = self.dim();
        let mut out = vec![CycloScalar::zero(); n];
        for a in 0..n {
            for b in 0..n {
                let c = &t[(a, b)];
                if c.is_zero() {
                    continue;
                }
                let prod = self.mul(&left.column(a), &right.column(b));
                crate::exactlinalg::matrix::axpy(&mut out, c, &prod);
            }
        }
        out
    }

    /// Runs the Hopf algebra axioms, reporting the first witness of each failure.
    pub fn verify_axioms(&self) -> Report {
        let mut r = Report::new();
        r.push(Check::from_witness(
            AXIOMS[0],
            self.algebra.associativity_witness(),
        ));
        r.push(Check::from_witness(AXIOMS[1], self.algebra.unit_witness()));
        r.push(Check::from_witness(
            AXIOMS[2],
            self.coalgebra.coassociativity_witness(),
        ));
        r.push(Check::from_witness(
            AXIOMS[3],
            self.coalgebra.counit_witness(),
        ));
        r.push(Check::from_witness(
            AXIOMS[4],
            self.comult_multiplicative_witness(),
        ));
        let one = self.one();
        r.push(Check::from_bool(
            AXIOMS[5],
            self.comult(one) == outer(one, one),
        ));
        r.push(Check::from_witness(
            AXIOMS[6],
            self.counit_multiplicative_witness(),
        ));
        r.push(Check::from_bool(AXIOMS[7], self.epsilon(one).is_one()));
        let (left, right) = self.antipode_witnesses();
        r.push(Check::from_witness(AXIOMS[8], left));
        r.push(Check::from_witness(AXIOMS[9], right));
        r
    }

    fn comult_multiplicative_witness(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        for i in 0..n {
            let di = self.coalgebra.basis_comult(i);
            for j in 0..n {
                let dj = self.coalgebra.basis_comult(j);
                let lhs = self.comult(self.algebra.basis_product(i, j));
                // Δ(e_i)Δ(e_j) in H⊗H
                let mut rhs = Matrix::zeros(n, n);
                for a in 0..n {
                    for b in 0..n {
                        let x = &di[(a, b)];
                        if x.is_zero() {
                            continue;
                        }
                        for c in 0..n {
                            for d in 0..n {
                                let y = &dj[(c, d)];
                                if y.is_zero() {
                                    continue;
                                }
                                let xy = x * y;
                                let ac = self.algebra.basis_product(a, c);
                                let bd = self.algebra.basis_product(b, d);
                                for (p, u) in ac.iter().enumerate() {
                                    if u.is_zero() {
                                        continue;
                                    }
                                    let xyu = &xy * u;
                                    for (q, v) in bd.iter().enumerate() {
                                        if !v.is_zero() {
                                            rhs[(p, q)] += &(&xyu * v);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    }

    fn counit_multiplicative_witness(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        let eps = self.coalgebra.counit();
        for i in 0..n {
            for j in 0..n {
                if dot(eps, self.algebra.basis_product(i, j)) != &eps[i] * &eps[j] {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    }

    fn antipode_witnesses(&self) -> (Option<Vec<usize>>, Option<Vec<usize>>) {
        let n = self.dim();
        let id = Matrix::identity(n);
        let mut left = None;
        let mut right = None;
        for k in 0..n {
            let d = self.coalgebra.basis_comult(k);
            let expected: Vector = self
                .one()
                .iter()
                .map(|u| u * &self.coalgebra.counit()[k])
                .collect();
            if left.is_none() && self.contract_mult(d, &self.antipode, &id) != expected {
                left = Some(vec![k]);
            }
            if right.is_none() && self.contract_mult(d, &id, &self.antipode) != expected {
                right = Some(vec![k]);
            }
        }
        (left, right)
    }

    /// Star axioms: involutive, antimultiplicative, Δ∘* = (*⊗*)∘Δ, ε∘* = conj∘ε.
    /// Conjugate-linearity holds by construction of the stored map.
    pub fn verify_star_axioms(&self) -> Report {
        let mut r = Report::new();
        let Some(_) = &self.star else {
            for name in STAR_AXIOMS {
                r.push(Check::skipped(name, "no star structure"));
            }
            return r;
        };
        let n = self.dim();
        let e = |i: usize| unit_vector(n, i);
        let stars: Vec<Vector> = (0..n).map(|i| self.star(&e(i))).collect();

        r.push(Check::from_witness(
            STAR_AXIOMS[0],
            (0..n)
                .find(|&i| self.star(&stars[i]) != e(i))
                .map(|i| vec![i]),
        ));

        let mut anti = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = self.star(self.algebra.basis_product(i, j));
                let rhs = self.mul(&stars[j], &stars[i]);
                if lhs != rhs {
                    anti = Some(vec![i, j]);
                    break 'outer;
                }
            }
        }
        r.push(Check::from_witness(STAR_AXIOMS[1], anti));

        // (*⊗*)Δ(e_i) = Σ conj(c_ab) a* ⊗ b*
        let star_cols = Matrix::from_columns(&stars, n);
        let comult_witness = (0..n).find(|&i| {
            let d = self.coalgebra.basis_comult(i);
            let lhs = self.comult(&stars[i]);
            let rhs = star_cols.mul(&d.conj()).mul(&star_cols.transpose());
            lhs != rhs
        });
        r.push(Check::from_witness(
            STAR_AXIOMS[2],
            comult_witness.map(|i| vec![i]),
        ));

        let counit_witness =
            (0..n).find(|&i| self.epsilon(&stars[i]) != self.coalgebra.counit()[i].conj());
        r.push(Check::from_witness(
            STAR_AXIOMS[3],
            counit_witness.map(|i| vec![i]),
        ));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::matrix::zeros;

    fn c(n: i64) -> CycloScalar {
        CycloScalar::from_int(n)
    }

    /// kC₂ with basis {e, s}.
    fn kc2() -> FinHopfAlgebra {
        let alg = FiniteAlgebra::from_fn(2, vec![c(1), c(0)], |i, j| {
            let mut v = zeros(2);
            v[(i + j) % 2] = c(1);
            v
        });
        let co = Coalgebra::new(
            2,
            (0..2)
                .map(|i| Matrix::from_fn(2, 2, |a, b| c((a == i && b == i) as i64)))
                .collect(),
            vec![c(1), c(1)],
        );
        FinHopfAlgebra::new(
            "kC2",
            2,
            vec!["e".into(), "s".into()],
            alg,
            co,
            Matrix::identity(2),
            Some(Matrix::identity(2)),
        )
        .unwrap()
    }

    #[test]
    fn group_algebra_of_c2_passes() {
        let h = kc2();
        assert!(h.verify_axioms().all_pass());
        assert!(h.verify_star_axioms().all_pass());
    }

    #[test]
    fn negated_star_fails_coalgebra_compatibility() {
        let mut h = kc2();
        h.star_matrix_mut().unwrap()[(1, 1)] = c(-1);
        let r = h.verify_star_axioms();
        assert!(r.get("star_involutive").unwrap().passed());
        assert!(r.get("star_antimultiplicative").unwrap().passed());
        assert_eq!(r.get("star_comult").unwrap().witness, Some(vec![1]));
        assert_eq!(r.get("star_counit").unwrap().witness, Some(vec![1]));
    }

    #[test]
    fn broken_antipode_is_reported() {
        let mut h = kc2();
        h.antipode_matrix_mut()[(1, 1)] = c(2);
        let r = h.verify_axioms();
        assert_eq!(r.get("antipode_left").unwrap().witness, Some(vec![1]));
        assert!(matches!(h.validate(), Err(Error::AxiomFailure { .. })));
    }
}
