//! Naive oracles over raw structure constants, independent of the library's
//! tensor helpers.

#![allow(dead_code, clippy::needless_range_loop)]

use hopfcert::exactlinalg::CycloScalar as S;
use hopfcert::hopfcore::FinHopfAlgebra;

/// Structure constants copied out as plain nested vectors.
pub struct Raw {
    pub n: usize,
    /// m[i][j][k]: coefficient of e_k in e_i e_j.
    pub m: Vec<Vec<Vec<S>>>,
    pub unit: Vec<S>,
    /// d[i][a][b]: coefficient of e_a ⊗ e_b in Δ(e_i).
    pub d: Vec<Vec<Vec<S>>>,
    pub eps: Vec<S>,
    /// s[i][j]: coefficient of e_j in S(e_i).
    pub s: Vec<Vec<S>>,
    /// st[i][j]: coefficient of e_j in e_i*.
    pub st: Option<Vec<Vec<S>>>,
}

impl Raw {
    pub fn of(h: &FinHopfAlgebra) -> Self {
        let n = h.dim();
        let alg = h.algebra();
        let co = h.coalgebra();
        Raw {
            n,
            m: (0..n)
                .map(|i| (0..n).map(|j| alg.basis_product(i, j).clone()).collect())
                .collect(),
            unit: alg.unit().clone(),
            d: (0..n)
                .map(|i| {
                    let t = co.basis_comult(i);
                    (0..n)
                        .map(|a| (0..n).map(|b| t[(a, b)].clone()).collect())
                        .collect()
                })
                .collect(),
            eps: co.counit().clone(),
            s: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| h.antipode_matrix()[(j, i)].clone())
                        .collect()
                })
                .collect(),
            st: h.star_matrix().map(|st| {
                (0..n)
                    .map(|i| (0..n).map(|j| st[(j, i)].clone()).collect())
                    .collect()
            }),
        }
    }

    fn zero(&self) -> Vec<S> {
        vec![S::zero(); self.n]
    }

    pub fn mul(&self, x: &[S], y: &[S]) -> Vec<S> {
        let mut out = self.zero();
        for i in 0..self.n {
            for j in 0..self.n {
                let c = &x[i] * &y[j];
                if c.is_zero() {
                    continue;
                }
                for k in 0..self.n {
                    out[k] = &out[k] + &(&c * &self.m[i][j][k]);
                }
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vec<S> {
        let mut v = self.zero();
        v[i] = S::one();
        v
    }

    /// Δ(x) as an n×n coefficient table.
    pub fn comult(&self, x: &[S]) -> Vec<Vec<S>> {
        let mut out = vec![self.zero(); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for a in 0..self.n {
                for b in 0..self.n {
                    out[a][b] = &out[a][b] + &(&x[i] * &self.d[i][a][b]);
                }
            }
        }
        out
    }

    pub fn eps_of(&self, x: &[S]) -> S {
        let mut acc = S::zero();
        for i in 0..self.n {
            acc = &acc + &(&x[i] * &self.eps[i]);
        }
        acc
    }

    pub fn antipode(&self, x: &[S]) -> Vec<S> {
        let mut out = self.zero();
        for i in 0..self.n {
            for j in 0..self.n {
                out[j] = &out[j] + &(&x[i] * &self.s[i][j]);
            }
        }
        out
    }

    pub fn star(&self, x: &[S]) -> Vec<S> {
        let st = self.st.as_ref().expect("star present");
        let mut out = self.zero();
        for i in 0..self.n {
            for j in 0..self.n {
                out[j] = &out[j] + &(&x[i].conj() * &st[i][j]);
            }
        }
        out
    }

    /// Whether the named axiom genuinely fails at the witness indices.
    pub fn violated(&self, axiom: &str, w: &[usize]) -> bool {
        let n = self.n;
        let e = |i: usize| self.basis(i);
        match axiom {
            "associativity" => {
                let (i, j, k) = (w[0], w[1], w[2]);
                self.mul(&self.mul(&e(i), &e(j)), &e(k)) != self.mul(&e(i), &self.mul(&e(j), &e(k)))
            }
            "unit" => {
                let i = w[0];
                self.mul(&self.unit, &e(i)) != e(i) || self.mul(&e(i), &self.unit) != e(i)
            }
            "coassociativity" => {
                let k = w[0];
                // (Δ⊗id)Δ and (id⊗Δ)Δ as n³ tables
                let mut lhs = vec![S::zero(); n * n * n];
                let mut rhs = vec![S::zero(); n * n * n];
                for a in 0..n {
                    for b in 0..n {
                        let c = &self.d[k][a][b];
                        if c.is_zero() {
                            continue;
                        }
                        for x in 0..n {
                            for y in 0..n {
                                let l = &self.d[a][x][y];
                                lhs[(x * n + y) * n + b] = &lhs[(x * n + y) * n + b] + &(c * l);
                                let r = &self.d[b][x][y];
                                rhs[(a * n + x) * n + y] = &rhs[(a * n + x) * n + y] + &(c * r);
                            }
                        }
                    }
                }
                lhs != rhs
            }
            "counit" => {
                let k = w[0];
                let mut left = self.zero();
                let mut right = self.zero();
                for a in 0..n {
                    for b in 0..n {
                        left[b] = &left[b] + &(&self.eps[a] * &self.d[k][a][b]);
                        right[a] = &right[a] + &(&self.eps[b] * &self.d[k][a][b]);
                    }
                }
                left != e(k) || right != e(k)
            }
            "comult_multiplicative" => {
                let (i, j) = (w[0], w[1]);
                let lhs = self.comult(&self.mul(&e(i), &e(j)));
                let mut rhs = vec![self.zero(); n];
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            for d in 0..n {
                                let coef = &self.d[i][a][b] * &self.d[j][c][d];
                                if coef.is_zero() {
                                    continue;
                                }
                                for x in 0..n {
                                    for y in 0..n {
                                        let t = &self.m[a][c][x] * &self.m[b][d][y];
                                        rhs[x][y] = &rhs[x][y] + &(&coef * &t);
                                    }
                                }
                            }
                        }
                    }
                }
                lhs != rhs
            }
            "comult_unit" => {
                let lhs = self.comult(&self.unit);
                (0..n).any(|a| (0..n).any(|b| lhs[a][b] != &self.unit[a] * &self.unit[b]))
            }
            "counit_multiplicative" => {
                let (i, j) = (w[0], w[1]);
                self.eps_of(&self.mul(&e(i), &e(j))) != &self.eps[i] * &self.eps[j]
            }
            "counit_unit" => !self.eps_of(&self.unit).is_one(),
            "antipode_left" | "antipode_right" => {
                let k = w[0];
                let mut acc = self.zero();
                for a in 0..n {
                    for b in 0..n {
                        let c = &self.d[k][a][b];
                        if c.is_zero() {
                            continue;
                        }
                        let p = if axiom == "antipode_left" {
                            self.mul(&self.antipode(&e(a)), &e(b))
                        } else {
                            self.mul(&e(a), &self.antipode(&e(b)))
                        };
                        for x in 0..n {
                            acc[x] = &acc[x] + &(c * &p[x]);
                        }
                    }
                }
                let expected: Vec<S> = self.unit.iter().map(|u| u * &self.eps[k]).collect();
                acc != expected
            }
            "star_involutive" => self.star(&self.star(&e(w[0]))) != e(w[0]),
            "star_antimultiplicative" => {
                let (i, j) = (w[0], w[1]);
                self.star(&self.mul(&e(i), &e(j))) != self.mul(&self.star(&e(j)), &self.star(&e(i)))
            }
            "star_comult" => {
                let i = w[0];
                let lhs = self.comult(&self.star(&e(i)));
                let mut rhs = vec![self.zero(); n];
                for a in 0..n {
                    for b in 0..n {
                        let c = self.d[i][a][b].conj();
                        if c.is_zero() {
                            continue;
                        }
                        let sa = self.star(&e(a));
                        let sb = self.star(&e(b));
                        for x in 0..n {
                            for y in 0..n {
                                rhs[x][y] = &rhs[x][y] + &(&c * &(&sa[x] * &sb[y]));
                            }
                        }
                    }
                }
                lhs != rhs
            }
            "star_counit" => self.eps_of(&self.star(&e(w[0]))) != self.eps[w[0]].conj(),
            other => panic!("no oracle for {other}"),
        }
    }
}

/// The rank of a list of vectors by fraction-free elimination written out here.
pub fn naive_rank(rows: &[Vec<S>]) -> usize {
    let mut rows: Vec<Vec<S>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                let pr = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pr) {
                    *x = &(&*x * &pivot) - &(&f * y);
                }
            }
        }
        rank += 1;
    }
    rank
}
