//! Conditional expectations onto Hopf subalgebras and free basis witnesses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cosemisimple::{simple_subcoalgebras, SimpleDecomposition};
use crate::error::{Error, Result};
use crate::exactlinalg::matrix::unit_vector;
use crate::exactlinalg::{CycloScalar, Matrix, Subspace, Vector};
use crate::hopfcore::CoidealSubalgebra;
use crate::report::{Check, Report};

/// The projection p: H → A along the sum of the simple blocks not in A.
#[derive(Debug, Clone)]
pub struct Expectation {
    pub subalgebra: CoidealSubalgebra,
    /// Sum of the blocks meeting A trivially.
    pub complement: Subspace,
    /// ι∘p as an n×n matrix.
    pub map: Matrix,
    pub decomposition: SimpleDecomposition,
}

impl Expectation {
    pub fn apply(&self, h: &[CycloScalar]) -> Vector {
        self.map.apply(h)
    }

    /// The same data with a replaced projection matrix.
    pub fn with_map(&self, map: Matrix) -> Self {
        Expectation {
            map,
            ..self.clone()
        }
    }
}

/// Builds the expectation from the block dichotomy: every simple block lies in A or meets it in 0.
pub fn expectation(a: &CoidealSubalgebra) -> Result<Expectation> {
    if !a.is_hopf() {
        return Err(Error::Precondition(format!(
            "{} is not a Hopf subalgebra",
            a.name()
        )));
    }
    let h = a.parent();
    let n = h.dim();
    let dec = simple_subcoalgebras(h.coalgebra(), h.conductor(), Some(h.one()))?;
    let mut inside = Subspace::zero(n);
    let mut outside = Subspace::zero(n);
    for (alpha, block) in dec.blocks.iter().enumerate() {
        if a.space().contains_subspace(block) {
            inside = inside.sum(block);
        } else if a.space().intersect(block).dim() == 0 {
            outside = outside.sum(block);
        } else {
            return Err(Error::Structural(format!(
                "block {alpha} meets {} partially",
                a.name()
            )));
        }
    }
    if inside != *a.space() {
        return Err(Error::Structural(format!(
            "blocks inside {} span dimension {}, expected {}",
            a.name(),
            inside.dim(),
            a.dim()
        )));
    }
    let mut cols: Vec<Vector> = inside.basis().to_vec();
    cols.extend(outside.basis().iter().cloned());
    let t = Matrix::from_columns(&cols, n);
    let t_inv = t.inverse()?;
    let keep = Matrix::from_fn(n, n, |i, j| {
        if i == j && i < inside.dim() {
            CycloScalar::one()
        } else {
            CycloScalar::zero()
        }
    });
    let map = t.mul(&keep).mul(&t_inv);
    Ok(Expectation {
        subalgebra: a.clone(),
        complement: outside,
        map,
        decomposition: dec,
    })
}

/// Checks (i) p∘ι = id, (ii) A-bimodule map, (iii) right H-comodule map,
/// (iv) equivariance for the adjoint A-action.
pub fn verify_expectation(e: &Expectation) -> Report {
    let a = &e.subalgebra;
    let h = a.parent();
    let n = h.dim();
    let abasis = a.space().basis();
    let mut r = Report::new();

    let w = abasis
        .iter()
        .position(|x| e.apply(x) != *x)
        .map(|i| vec![i]);
    r.push(Check::from_witness("retraction", w));

    let mut w = None;
    'bimod: for (i, x) in abasis.iter().enumerate() {
        for k in 0..n {
            let hk = unit_vector(n, k);
            for (j, y) in abasis.iter().enumerate() {
                let lhs = e.apply(&h.mul(&h.mul(x, &hk), y));
                let rhs = h.mul(&h.mul(x, &e.apply(&hk)), y);
                if lhs != rhs {
                    w = Some(vec![i, k, j]);
                    break 'bimod;
                }
            }
        }
    }
    r.push(Check::from_witness("bimodule", w));

    let w = (0..n)
        .find(|&k| {
            let hk = unit_vector(n, k);
            let lhs = h.comult(&e.apply(&hk));
            let rhs = e.map.mul(h.coalgebra().basis_comult(k));
            lhs != rhs
        })
        .map(|k| vec![k]);
    r.push(Check::from_witness("comodule", w));

    let mut w = None;
    'adj: for (i, x) in abasis.iter().enumerate() {
        let dx = h.comult(x);
        for k in 0..n {
            let hk = unit_vector(n, k);
            let ph = e.apply(&hk);
            let mut lhs = vec![CycloScalar::zero(); n];
            let mut rhs = vec![CycloScalar::zero(); n];
            for p in 0..n {
                for q in 0..n {
                    let c = &dx[(p, q)];
                    if c.is_zero() {
                        continue;
                    }
                    let s = h.antipode(&unit_vector(n, p));
                    let eq = unit_vector(n, q);
                    let l = e.apply(&h.mul(&h.mul(&s, &hk), &eq));
                    let rr = h.mul(&h.mul(&s, &ph), &eq);
                    for t in 0..n {
                        lhs[t] = &lhs[t] + &(c * &l[t]);
                        rhs[t] = &rhs[t] + &(c * &rr[t]);
                    }
                }
            }
            if lhs != rhs {
                w = Some(vec![i, k]);
                break 'adj;
            }
        }
    }
    r.push(Check::from_witness("adjoint_equivariance", w));
    r
}

/// Elements h_1..h_d with H = ⊕ A h_k, certified by an exact determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeBasisWitness {
    pub vectors: Vec<Vector>,
    /// Determinant of the map A ⊗ k^d → H, (a, k) ↦ a h_k.
    pub determinant: CycloScalar,
    /// Whether the greedy search over basis vectors succeeded.
    pub greedy: bool,
}

const RANDOM_ATTEMPTS: usize = 64;

fn greedy_from(
    a: &CoidealSubalgebra,
    d: usize,
    candidates: impl Iterator<Item = Vector>,
) -> Option<Vec<Vector>> {
    let h = a.parent();
    let mut span = Subspace::zero(h.dim());
    let mut chosen = Vec::new();
    for c in candidates {
        let orbit: Vec<Vector> = a.space().basis().iter().map(|x| h.mul(x, &c)).collect();
        let next = span.sum(&Subspace::span(h.dim(), &orbit));
        if next.dim() == span.dim() + a.dim() {
            span = next;
            chosen.push(c);
            if chosen.len() == d {
                return Some(chosen);
            }
        }
    }
    None
}

/// Finds a free basis of H as a left A-module: greedy over basis vectors,
/// then seeded random combinations.
pub fn free_basis_witness(a: &CoidealSubalgebra) -> Result<FreeBasisWitness> {
    let h = a.parent();
    let n = h.dim();
    if !n.is_multiple_of(a.dim()) {
        return Err(Error::Divisibility {
            sub: a.dim(),
            total: n,
        });
    }
    let d = n / a.dim();
    let mut greedy = true;
    let mut found = greedy_from(a, d, (0..n).map(|i| unit_vector(n, i)));
    if found.is_none() {
        greedy = false;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..RANDOM_ATTEMPTS {
            let cands: Vec<Vector> = (0..4 * d)
                .map(|_| {
                    (0..n)
                        .map(|_| CycloScalar::from_int(rng.gen_range(-3..=3)))
                        .collect()
                })
                .collect();
            found = greedy_from(a, d, cands.into_iter());
            if found.is_some() {
                break;
            }
        }
    }
    let vectors = found.ok_or(Error::GreedyExhausted {
        attempts: RANDOM_ATTEMPTS,
    })?;
    let cols: Vec<Vector> = vectors
        .iter()
        .flat_map(|c| a.space().basis().iter().map(move |x| h.mul(x, c)))
        .collect();
    let determinant = Matrix::from_columns(&cols, n).determinant()?;
    debug_assert!(!determinant.is_zero());
    Ok(FreeBasisWitness {
        vectors,
        determinant,
        greedy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::builtin;

    #[test]
    fn group_expectation_is_restriction() {
        let inst = builtin("kS3").unwrap();
        let e = expectation(inst.subalgebra("kC2_12").unwrap()).unwrap();
        for g in 0..6 {
            let img = e.apply(&unit_vector(6, g));
            let expected = if g <= 1 {
                unit_vector(6, g)
            } else {
                vec![CycloScalar::zero(); 6]
            };
            assert_eq!(img, expected);
        }
        assert!(verify_expectation(&e).all_pass());
    }

    #[test]
    fn function_algebra_expectation() {
        let inst = builtin("fun_S3").unwrap();
        let e = expectation(inst.subalgebra("pullback_C2").unwrap()).unwrap();
        assert!(verify_expectation(&e).all_pass());
        assert_eq!(e.complement.dim(), 4);
    }

    #[test]
    fn swapped_blocks_break_comodule_property() {
        let inst = builtin("kS3").unwrap();
        let e = expectation(inst.subalgebra("kC2_12").unwrap()).unwrap();
        let mut m = e.map.clone();
        // send e_(13) to e_(12) instead of 0
        m[(1, 2)] = CycloScalar::one();
        let r = verify_expectation(&e.with_map(m));
        assert!(!r.get("comodule").unwrap().passed());
    }

    #[test]
    fn greedy_free_bases() {
        let inst = builtin("kS3").unwrap();
        let w = free_basis_witness(inst.subalgebra("kC2_12").unwrap()).unwrap();
        assert!(w.greedy);
        assert_eq!(
            w.vectors,
            vec![unit_vector(6, 0), unit_vector(6, 2), unit_vector(6, 3)]
        );
        let t = builtin("taft4").unwrap();
        let w = free_basis_witness(t.subalgebra("coradical").unwrap()).unwrap();
        assert_eq!(w.vectors, vec![unit_vector(4, 0), unit_vector(4, 2)]);
        assert!(!w.determinant.is_zero());
    }

    #[test]
    fn taft_has_no_expectation_data() {
        let t = builtin("taft4").unwrap();
        assert!(matches!(
            expectation(t.subalgebra("coradical").unwrap()),
            Err(Error::Precondition(_))
        ));
    }
}
