mod common;

use std::sync::LazyLock;

use common::{naive_rank, Raw};
use hopfcert::cosemisimple::{dual_algebra, simple_subcoalgebras};
use hopfcert::cqg::{hit_action, psd_certificate, CqgContext};
use hopfcert::exactlinalg::{CycloScalar as S, Matrix, Subspace};
use hopfcert::instances::{builtin, list_builtins, Instance};
use hopfcert::reflection::{
    check_exact_sequence, expectation, free_basis_witness, right_reflection,
};
use proptest::prelude::*;

const ORDER: u32 = 12;

fn scalar() -> impl Strategy<Value = S> {
    prop::collection::vec(-4i64..=4, 4).prop_map(|cs| {
        cs.iter()
            .enumerate()
            .map(|(k, &c)| &S::from_int(c) * &S::zeta_pow(ORDER, k as i64))
            .sum()
    })
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| S::from_int(v[r * cols + c])))
}

fn small_vector(n: usize) -> impl Strategy<Value = Vec<S>> {
    prop::collection::vec(-2i64..=2, n).prop_map(|v| v.into_iter().map(S::from_int).collect())
}

static INSTANCES: LazyLock<Vec<Instance>> = LazyLock::new(|| {
    list_builtins()
        .iter()
        .map(|e| builtin(e.name).unwrap())
        .collect()
});

/// Determinant by cofactor expansion.
fn cofactor_det(m: &[Vec<S>]) -> S {
    if m.is_empty() {
        return S::one();
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<S>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &cofactor_det(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn rank_and_kernel(m in int_matrix(4, 5)) {
        let rank = m.rank();
        prop_assert_eq!(rank, naive_rank(&m.row_vectors()));
        let kernel = m.kernel_basis();
        prop_assert_eq!(rank + kernel.len(), 5);
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(S::is_zero));
        }
    }

    #[test]
    fn subspace_dimension_formula(a in int_matrix(3, 5), b in int_matrix(2, 5)) {
        let u = Subspace::span(5, &a.row_vectors());
        let v = Subspace::span(5, &b.row_vectors());
        let meet = u.intersect(&v);
        prop_assert_eq!(u.sum(&v).dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(u.contains_subspace(&meet) && v.contains_subspace(&meet));
    }

    #[test]
    fn determinant_matches_cofactors(m in int_matrix(4, 4)) {
        let rows = m.row_vectors();
        prop_assert_eq!(m.determinant().unwrap(), cofactor_det(&rows));
    }

    /// Oracle: a Hermitian matrix is PSD iff every principal minor is nonnegative.
    #[test]
    fn psd_matches_principal_minors(v in prop::collection::vec(-3i64..=3, 6)) {
        let m = Matrix::from_fn(3, 3, |r, c| {
            let (i, j) = (r.min(c), r.max(c));
            S::from_int(v[i * 3 + j - i * (i + 1) / 2])
        });
        let mut minors_ok = true;
        for mask in 1u32..8 {
            let idx: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
            let sub: Vec<Vec<S>> = idx.iter().map(|&r| idx.iter().map(|&c| m[(r, c)].clone()).collect()).collect();
            let d = cofactor_det(&sub);
            if d.as_rational().unwrap() < &num_rational::BigRational::from_integer(0.into()) {
                minors_ok = false;
            }
        }
        prop_assert_eq!(psd_certificate(&m).unwrap().is_psd(), minors_ok);
    }

    #[test]
    fn gram_of_any_matrix_is_psd(b in prop::collection::vec(scalar(), 6)) {
        let b = Matrix::from_fn(3, 2, |r, c| b[r * 2 + c].clone());
        prop_assert!(psd_certificate(&b.mul(&b.adjoint())).unwrap().is_psd());
    }

    #[test]
    fn galois_unit_and_free_basis(pick in 0usize..1000) {
        let all = &*INSTANCES;
        let pairs: Vec<(usize, usize)> = all
            .iter()
            .enumerate()
            .flat_map(|(i, inst)| (0..inst.subalgebras.len()).map(move |j| (i, j)))
            .collect();
        let (i, j) = pairs[pick % pairs.len()];
        let a = &all[i].subalgebras[j].subalgebra;
        let c = right_reflection(a).unwrap();
        let r = check_exact_sequence(a, &c).unwrap();
        prop_assert!(r.get("A <= r(r(A))").unwrap().passed());
        prop_assert!(r.get("ker r(r(C)) <= ker C").unwrap().passed());
        prop_assert_eq!(c.dim() * a.dim(), a.parent().dim());
        let w = free_basis_witness(a).unwrap();
        prop_assert!(!w.determinant.is_zero());
        prop_assert_eq!(w.vectors.len() * a.dim(), a.parent().dim());
    }

    /// (φ ⊗ id)Δ(x) = p(x), with the slice computed from raw structure constants.
    #[test]
    fn phi_slice_is_expectation(pick in 0usize..4, x in small_vector(6)) {
        let (inst, sub) = [("kS3", "kC2_12"), ("kS3", "kA3"), ("kS3", "trivial"), ("fun_S3", "pullback_C2")][pick];
        let inst = builtin(inst).unwrap();
        let a = inst.subalgebra(sub).unwrap();
        let ctx = CqgContext::new(a).unwrap();
        let raw = Raw::of(&inst.hopf);
        let d = raw.comult(&x);
        let slice: Vec<S> = (0..raw.n)
            .map(|b| (0..raw.n).map(|k| &ctx.phi[k] * &d[k][b]).sum())
            .collect();
        prop_assert_eq!(slice, expectation(a).unwrap().apply(&x));
    }

    /// (x ◁ f) ◁ g = x ◁ (fg) for x in the four-dimensional block of functions on S3.
    #[test]
    fn hit_action_is_associative(coef in small_vector(4), f in small_vector(6), g in small_vector(6)) {
        let h = builtin("fun_S3").unwrap().hopf;
        let dec = simple_subcoalgebras(h.coalgebra(), h.conductor(), Some(h.one())).unwrap();
        let block = dec.blocks.iter().find(|b| b.dim() == 4).unwrap();
        let mut x = vec![S::zero(); 6];
        for (c, v) in coef.iter().zip(block.basis()) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi = &*xi + &(c * vi);
            }
        }
        let fg = dual_algebra(h.coalgebra()).mul(&f, &g);
        let lhs = hit_action(&h, &hit_action(&h, &x, &f), &g);
        prop_assert_eq!(lhs, hit_action(&h, &x, &fg));
        prop_assert!(block.contains(&hit_action(&h, &x, &f)));
    }
}
