//! The relative Haar functional φ, the relative Haar element θ and the
//! φ-relative Fourier transform H → C* for a Hopf *-subalgebra A ⊆ H.

use crate::cosemisimple::{
    block_matrix_coefficients, dual_algebra, haar_integral, simple_subcoalgebras,
    SimpleDecomposition,
};
use crate::error::{Error, Result};
use crate::exactlinalg::matrix::{dot, is_zero_vec, unit_vector, vec_conj, vec_scale};
use crate::exactlinalg::{sign_of_real, CycloScalar, Matrix, Sign, Vector};
use crate::hopfcore::{Coalgebra, CoidealSubalgebra, FinHopfAlgebra, FiniteAlgebra};
use crate::reflection::{expectation, right_reflection, QuotientModuleCoalgebra};
use crate::report::{Check, Report};

use super::psd::{psd_certificate, s2_block_conjugator, Psd};

/// x ◁ f = f(x₁)x₂ for a functional f on H.
pub fn hit_action(h: &FinHopfAlgebra, x: &[CycloScalar], f: &[CycloScalar]) -> Vector {
    h.comult(x).transpose().apply(f)
}

/// θ = Σ_i e^i(S² e_{i(2)}) e_{i(1)} computed on the given basis.
pub fn theta_formula(co: &Coalgebra, s2: &Matrix) -> Vector {
    let m = co.dim();
    let mut theta = vec![CycloScalar::zero(); m];
    for i in 0..m {
        let d = co.basis_comult(i);
        for a in 0..m {
            for b in 0..m {
                let c = &d[(a, b)];
                if !c.is_zero() && !s2[(i, b)].is_zero() {
                    theta[a] += &(c * &s2[(i, b)]);
                }
            }
        }
    }
    theta
}

/// θ recomputed on the basis given by the columns of `t`, returned in the original coordinates.
pub fn theta_in_basis(co: &Coalgebra, s2: &Matrix, t: &Matrix) -> Result<Vector> {
    let m = co.dim();
    let t_inv = t.inverse()?;
    let comult = (0..m)
        .map(|i| t_inv.mul(&co.comult(&t.column(i))).mul(&t_inv.transpose()))
        .collect();
    let counit = (0..m).map(|i| co.epsilon(&t.column(i))).collect();
    let moved = Coalgebra::new(m, comult, counit);
    let s2_moved = t_inv.mul(s2).mul(t);
    Ok(t.apply(&theta_formula(&moved, &s2_moved)))
}

/// The data attached to A ⊆ H: C = H/HA⁺, its blocks, h_C, φ, S² on C and θ.
#[derive(Debug, Clone)]
pub struct CqgContext {
    pub subalgebra: CoidealSubalgebra,
    pub quotient: QuotientModuleCoalgebra,
    pub decomposition: SimpleDecomposition,
    /// h_C as a functional on C.
    pub haar: Vector,
    /// φ = h_C∘π as a functional on H.
    pub phi: Vector,
    /// S² descended to C.
    pub s2c: Matrix,
    s2c_inv: Matrix,
    /// Column c is π((Sσe_c)*); the dual star is f ↦ conj(Mᵀf).
    star_dual: Matrix,
    pub dual_algebra: FiniteAlgebra,
    pub theta: Vector,
}

impl CqgContext {
    pub fn new(a: &CoidealSubalgebra) -> Result<Self> {
        let h = a.parent();
        if !h.has_star() {
            return Err(Error::Precondition(format!(
                "{} has no star structure",
                h.name()
            )));
        }
        if !a.is_hopf() {
            return Err(Error::Precondition(format!(
                "{} is not a Hopf *-subalgebra",
                a.name()
            )));
        }
        let quotient = right_reflection(a)?;
        let co = quotient.coalgebra();
        let decomposition = simple_subcoalgebras(co, h.conductor(), Some(quotient.one_bar()))?;
        let haar = haar_integral(co, &decomposition, quotient.one_bar())?;
        let phi = quotient.proj().transpose().apply(&haar);

        let s2 = h.antipode_squared();
        if !quotient.preserves_kernel(&s2) {
            return Err(Error::Descent { map: "S^2".into() });
        }
        let s2c = quotient.descend(&s2);
        let s2c_inv = s2c.inverse()?;
        let star_s = |v: &[CycloScalar]| h.star(&h.antipode(v));
        if !quotient
            .kernel()
            .basis()
            .iter()
            .all(|k| is_zero_vec(&quotient.project(&star_s(k))))
        {
            return Err(Error::Descent {
                map: "star after antipode".into(),
            });
        }
        let cols: Vec<Vector> = (0..quotient.dim())
            .map(|c| quotient.project(&star_s(&quotient.section().column(c))))
            .collect();
        let star_dual = Matrix::from_columns(&cols, quotient.dim());
        let dual_algebra = dual_algebra(co);
        let theta = theta_formula(co, &s2c);
        Ok(CqgContext {
            subalgebra: a.clone(),
            quotient,
            decomposition,
            haar,
            phi,
            s2c,
            s2c_inv,
            star_dual,
            dual_algebra,
            theta,
        })
    }

    pub fn hopf(&self) -> &FinHopfAlgebra {
        self.subalgebra.parent()
    }

    pub fn phi_at(&self, x: &[CycloScalar]) -> CycloScalar {
        dot(&self.phi, x)
    }

    /// f∘π for a functional f on C.
    pub fn pullback(&self, f: &[CycloScalar]) -> Vector {
        self.quotient.proj().transpose().apply(f)
    }

    /// F(x)(πy) = φ(S(x)y), after checking it vanishes on ker π.
    pub fn fourier(&self, x: &[CycloScalar]) -> Result<Vector> {
        let h = self.hopf();
        let sx = h.antipode(x);
        if let Some(i) = self
            .quotient
            .kernel()
            .basis()
            .iter()
            .position(|k| !self.phi_at(&h.mul(&sx, k)).is_zero())
        {
            return Err(Error::Structural(format!(
                "Fourier transform does not vanish on kernel vector {i}"
            )));
        }
        Ok((0..self.quotient.dim())
            .map(|c| self.phi_at(&h.mul(&sx, &self.quotient.section().column(c))))
            .collect())
    }

    /// f*(πx) = conj(f(π((Sx)*))).
    pub fn dual_star(&self, f: &[CycloScalar]) -> Vector {
        vec_conj(&self.star_dual.transpose().apply(f))
    }

    /// (S²f)(c) = f(S²c).
    pub fn s2_dual(&self, f: &[CycloScalar]) -> Vector {
        self.s2c.transpose().apply(f)
    }

    /// (S⁻²f)(c) = f(S⁻²c).
    pub fn s2_inv_dual(&self, f: &[CycloScalar]) -> Vector {
        self.s2c_inv.transpose().apply(f)
    }

    /// Convolution product on C*.
    pub fn dual_mul(&self, f: &[CycloScalar], g: &[CycloScalar]) -> Vector {
        self.dual_algebra.mul(f, g)
    }

    /// θ as a functional on C*.
    pub fn theta_at(&self, f: &[CycloScalar]) -> CycloScalar {
        dot(&self.theta, f)
    }

    /// Component of a vector of C in block α.
    pub fn block_component(&self, v: &[CycloScalar], alpha: usize) -> Vector {
        let m = self.quotient.dim();
        let duals = &self.decomposition.dual_block_bases(m)[alpha];
        let mut out = vec![CycloScalar::zero(); m];
        for (f, b) in duals.iter().zip(self.decomposition.blocks[alpha].basis()) {
            let c = dot(f, v);
            for (o, x) in out.iter_mut().zip(b) {
                *o += &(&c * x);
            }
        }
        out
    }

    /// Cross-checks φ = ε∘p and (φ⊗id)Δ = ι∘p against the expectation.
    pub fn verify_phi(&self) -> Result<Report> {
        let h = self.hopf();
        let n = h.dim();
        let e = expectation(&self.subalgebra)?;
        let mut r = Report::new();
        r.push(Check::from_bool(
            "phi_unital",
            self.phi_at(h.one()) == CycloScalar::one(),
        ));
        let w = (0..n)
            .find(|&j| self.phi[j] != h.epsilon(&e.apply(&unit_vector(n, j))))
            .map(|j| vec![j]);
        r.push(Check::from_witness("phi_counit_of_expectation", w));
        let w = (0..n)
            .find(|&j| {
                let ej = unit_vector(n, j);
                hit_action(h, &ej, &self.phi) != e.apply(&ej)
            })
            .map(|j| vec![j]);
        r.push(Check::from_witness("phi_slice_is_expectation", w));
        Ok(r)
    }

    /// (a) 1̄-component, (b) H-invariance, (c) positivity per block, θ∘S² = θ,
    /// and basis independence of the formula.
    pub fn verify_theta(&self, theta: &[CycloScalar]) -> Result<Report> {
        let h = self.hopf();
        let n = h.dim();
        let m = self.quotient.dim();
        let mut r = Report::new();
        let triv = self
            .decomposition
            .trivial_block_index
            .expect("context has a distinguished block");
        r.push(Check::from_bool(
            "theta_trivial_component",
            self.block_component(theta, triv) == *self.quotient.one_bar(),
        ));
        let w = (0..n)
            .find(|&x| {
                let ex = unit_vector(n, x);
                self.quotient.act(&ex, theta) != vec_scale(theta, &h.epsilon(&ex))
            })
            .map(|x| vec![x]);
        r.push(Check::from_witness("theta_invariance", w));

        let duals = self.decomposition.dual_block_bases(m);
        let mut w = None;
        for (beta, fs) in duals.iter().enumerate() {
            let stars: Vec<Vector> = fs.iter().map(|f| self.dual_star(f)).collect();
            let g = Matrix::from_fn(fs.len(), fs.len(), |j, k| {
                dot(theta, &self.dual_mul(&stars[j], &fs[k]))
            });
            let ok = matches!(psd_certificate(&g), Ok(Psd::Psd { .. }));
            if !ok {
                w = Some(vec![beta]);
                break;
            }
        }
        r.push(Check::from_witness("theta_positivity", w));
        r.push(Check::from_bool(
            "theta_s2_invariance",
            self.s2c.apply(theta) == theta,
        ));

        // second basis: block-adapted, with the k-th vector scaled by k + 1
        let adapted = self.decomposition.adapted_basis(m);
        let t = Matrix::from_fn(m, m, |i, j| {
            &adapted[(i, j)] * &CycloScalar::from_int(j as i64 + 1)
        });
        let again = theta_in_basis(self.quotient.coalgebra(), &self.s2c, &t)?;
        r.push(Check::from_bool(
            "theta_basis_independence",
            again == self.theta,
        ));
        Ok(r)
    }

    /// Each block component θ_α equals tr(Q⁻¹)·Σ_ij Q_ji c_ij for the matrix
    /// coefficients c_ij of a simple comodule and the positive S²-conjugator Q.
    pub fn verify_theta_block_form(&self) -> Result<Report> {
        let co = self.quotient.coalgebra();
        let m = co.dim();
        let mut r = Report::new();
        let mut conj_fail = None;
        let mut form_fail = None;
        for alpha in 0..self.decomposition.blocks.len() {
            let coeffs =
                block_matrix_coefficients(co, &self.decomposition, alpha, self.hopf().conductor())?;
            let d = coeffs.len();
            let q = match s2_block_conjugator(&coeffs, &self.s2c) {
                Ok(b) => b.q,
                Err(_) => {
                    conj_fail.get_or_insert(vec![alpha]);
                    continue;
                }
            };
            let scale = q.inverse()?.trace();
            let mut expected = vec![CycloScalar::zero(); m];
            for i in 0..d {
                for j in 0..d {
                    let c = &scale * &q[(j, i)];
                    for (e, x) in expected.iter_mut().zip(&coeffs[i][j]) {
                        *e += &(&c * x);
                    }
                }
            }
            if self.block_component(&self.theta, alpha) != expected {
                form_fail.get_or_insert(vec![alpha]);
            }
        }
        r.push(Check::from_witness("s2_block_conjugator", conj_fail));
        r.push(Check::from_witness("theta_block_form", form_fail));
        Ok(r)
    }

    /// The five identities of the relative Fourier transform over all basis pairs.
    pub fn verify_fourier_identities(&self) -> Result<Report> {
        let h = self.hopf();
        let n = h.dim();
        let e = |i: usize| unit_vector(n, i);
        let f: Vec<Vector> = (0..n).map(|i| self.fourier(&e(i))).collect::<Result<_>>()?;
        let mut r = Report::new();

        let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
        let w = pairs()
            .find(|&(x, y)| {
                let lhs = self.fourier(&hit_action(h, &e(x), &self.pullback(&f[y])));
                lhs.ok().as_ref() != Some(&self.dual_mul(&f[x], &f[y]))
            })
            .map(|(x, y)| vec![x, y]);
        r.push(Check::from_witness("fourier_convolution", w));

        let mut w = None;
        for x in 0..n {
            let sx_star = h.star(&h.antipode(&e(x)));
            let rhs = self.s2_dual(&self.fourier(&sx_star)?);
            if self.dual_star(&f[x]) != rhs {
                w = Some(vec![x]);
                break;
            }
        }
        r.push(Check::from_witness("fourier_star", w));

        let w = pairs()
            .find(|&(x, y)| {
                let lhs = h.epsilon(&hit_action(h, &e(x), &self.pullback(&f[y])));
                lhs != self.phi_at(&h.mul(&h.antipode(&e(y)), &e(x)))
            })
            .map(|(x, y)| vec![x, y]);
        r.push(Check::from_witness("fourier_counit", w));

        let w = (0..n)
            .find(|&x| self.theta_at(&f[x]) != h.epsilon(&e(x)))
            .map(|x| vec![x]);
        r.push(Check::from_witness("fourier_theta", w));

        let s2 = h.antipode_squared();
        let mut w = None;
        for x in 0..n {
            if self.fourier(&s2.column(x))? != self.s2_inv_dual(&f[x]) {
                w = Some(vec![x]);
                break;
            }
        }
        r.push(Check::from_witness("fourier_antipode_squared", w));
        Ok(r)
    }

    /// θ((Fy)*Fx) = φ((S²y)*S²x) on basis pairs, φ∘S = φ, and θ((Fx)*Fx) ≥ 0.
    pub fn verify_plancherel(&self) -> Result<Report> {
        let h = self.hopf();
        let n = h.dim();
        let e = |i: usize| unit_vector(n, i);
        let f: Vec<Vector> = (0..n).map(|i| self.fourier(&e(i))).collect::<Result<_>>()?;
        let fstar: Vec<Vector> = f.iter().map(|v| self.dual_star(v)).collect();
        let s2 = h.antipode_squared();
        let mut r = Report::new();
        let mut w = None;
        'outer: for x in 0..n {
            for y in 0..n {
                let lhs = self.theta_at(&self.dual_mul(&fstar[y], &f[x]));
                let rhs = self.phi_at(&h.mul(&h.star(&s2.column(y)), &s2.column(x)));
                if lhs != rhs {
                    w = Some(vec![x, y]);
                    break 'outer;
                }
            }
        }
        r.push(Check::from_witness("plancherel", w));
        let w = (0..n)
            .find(|&j| self.phi_at(&h.antipode(&e(j))) != self.phi[j])
            .map(|j| vec![j]);
        r.push(Check::from_witness("phi_antipode_invariance", w));
        let mut w = None;
        for x in 0..n {
            let v = self.theta_at(&self.dual_mul(&fstar[x], &f[x]));
            if sign_of_real(&v).map_or(true, |s| s == Sign::Negative) {
                w = Some(vec![x]);
                break;
            }
        }
        r.push(Check::from_witness("fourier_norm_nonnegative", w));
        Ok(r)
    }

    /// G_xy = φ(x* y) over the basis of H.
    pub fn gram_matrix(&self) -> Matrix {
        let h = self.hopf();
        let n = h.dim();
        let stars: Vec<Vector> = (0..n).map(|i| h.star(&unit_vector(n, i))).collect();
        Matrix::from_fn(n, n, |x, y| {
            self.phi_at(&h.mul(&stars[x], &unit_vector(n, y)))
        })
    }

    /// Positivity of φ: G is Hermitian and PSD.
    pub fn gram_positivity(&self) -> Report {
        let g = self.gram_matrix();
        let mut r = Report::new();
        let herm = g.is_hermitian().map(|(i, j)| vec![i, j]);
        r.push(Check::from_witness("gram_hermitian", herm.clone()));
        if herm.is_some() {
            r.push(Check::skipped("gram_psd", "matrix is not Hermitian"));
            return r;
        }
        r.push(match psd_certificate(&g) {
            Ok(Psd::Psd { .. }) => Check::pass("gram_psd"),
            Ok(Psd::NotPsd { index, .. }) => Check::fail("gram_psd", vec![index]),
            Err(err) => Check::fail("gram_psd", Vec::new()).with_detail(err.to_string()),
        });
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::matrix::vec_sub;
    use crate::instances::{builtin, GroupTable};

    fn ctx(inst: &str, sub: &str) -> CqgContext {
        let i = builtin(inst).unwrap();
        CqgContext::new(i.subalgebra(sub).unwrap()).unwrap()
    }

    #[test]
    fn phi_on_group_algebra() {
        let c = ctx("kS3", "trivial");
        assert_eq!(c.phi, unit_vector(6, 0));
        let c = ctx("kS3", "kC2_12");
        let expected: Vector = (0..6)
            .map(|g| CycloScalar::from_int(i64::from(g < 2)))
            .collect();
        assert_eq!(c.phi, expected);
        assert!(c.verify_phi().unwrap().all_pass());
        let c = ctx("kS3", "full");
        assert_eq!(&c.phi, c.hopf().coalgebra().counit());
    }

    #[test]
    fn fourier_of_group_element_is_coset_indicator() {
        let c = ctx("kS3", "kC2_12");
        let g = GroupTable::symmetric3();
        let sub = [0usize, 1];
        let reps: Vec<usize> = (0..3)
            .map(|k| {
                let col = c.quotient.section().column(k);
                col.iter().position(|v| !v.is_zero()).unwrap()
            })
            .collect();
        for x in 0..6 {
            let f = c.fourier(&unit_vector(6, x)).unwrap();
            for (k, &r) in reps.iter().enumerate() {
                let inside = sub.contains(&g.mul(g.inv(x), r));
                assert_eq!(
                    f[k],
                    CycloScalar::from_int(i64::from(inside)),
                    "x={x} coset {k}"
                );
            }
        }
        let mut v = unit_vector(6, 0);
        v[1] = CycloScalar::from_int(-1);
        assert!(is_zero_vec(&c.fourier(&v).unwrap()));
    }

    #[test]
    fn theta_on_coset_space() {
        let c = ctx("kS3", "kC2_12");
        assert_eq!(c.theta, vec![CycloScalar::one(); 3]);
        assert!(c.verify_theta(&c.theta).unwrap().all_pass());
        let c = ctx("kS3", "full");
        assert_eq!(c.theta, vec![CycloScalar::one()]);
        assert!(c.verify_theta(&c.theta).unwrap().all_pass());
    }

    #[test]
    fn theta_on_matrix_block_is_twice_the_character() {
        let c = ctx("fun_S3", "trivial");
        let mut dims = c.decomposition.block_dims();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 4]);
        assert!(c.verify_theta(&c.theta).unwrap().all_pass());
        assert!(c.verify_theta_block_form().unwrap().all_pass());
    }

    #[test]
    fn zeroing_a_block_of_theta_breaks_invariance() {
        let c = ctx("kS3", "kC2_12");
        let triv = c.decomposition.trivial_block_index.unwrap();
        let other = (triv + 1) % 3;
        let broken = vec_sub(&c.theta, &c.block_component(&c.theta, other));
        let r = c.verify_theta(&broken).unwrap();
        assert!(!r.get("theta_invariance").unwrap().passed());
        assert!(r.get("theta_trivial_component").unwrap().passed());
    }

    #[test]
    fn dual_star_basics() {
        let c = ctx("kS3", "kC2_12");
        let eps_c = c.quotient.coalgebra().counit().clone();
        assert_eq!(c.dual_star(&eps_c), eps_c);
        for k in 0..3 {
            let f = unit_vector(3, k);
            assert_eq!(c.dual_star(&c.dual_star(&f)), f);
        }
    }

    #[test]
    fn identities_hold_on_all_pairs() {
        for (inst, sub) in [
            ("kS3", "kC2_12"),
            ("kS3", "trivial"),
            ("kS3", "kA3"),
            ("kS3", "full"),
            ("fun_S3", "pullback_C2"),
        ] {
            let c = ctx(inst, sub);
            let f = c.verify_fourier_identities().unwrap();
            assert!(f.all_pass(), "{inst}/{sub}: {f:?}");
            let p = c.verify_plancherel().unwrap();
            assert!(p.all_pass(), "{inst}/{sub}: {p:?}");
            assert!(c.gram_positivity().all_pass(), "{inst}/{sub}");
        }
    }

    #[test]
    fn gram_matrices() {
        assert_eq!(ctx("kS3", "trivial").gram_matrix(), Matrix::identity(6));
        assert_eq!(ctx("kS3", "kC2_12").gram_matrix().rank(), 3);
        let g = ctx("kC2", "full").gram_matrix();
        assert_eq!(g, Matrix::from_fn(2, 2, |_, _| CycloScalar::one()));
    }

    #[test]
    fn grouplikes_are_hit_eigenvectors() {
        let h = builtin("kS3").unwrap().hopf;
        let f: Vector = (1..=6).map(CycloScalar::from_int).collect();
        for g in 0..6 {
            assert_eq!(
                hit_action(&h, &unit_vector(6, g), &f),
                vec_scale(&unit_vector(6, g), &f[g])
            );
        }
        let eps = h.coalgebra().counit().clone();
        assert_eq!(hit_action(&h, &f, &eps), f);
    }

    #[test]
    fn no_star_is_a_precondition_failure() {
        let t = builtin("taft4").unwrap();
        assert!(matches!(
            CqgContext::new(t.subalgebra("coradical").unwrap()),
            Err(Error::Precondition(_))
        ));
    }
}
