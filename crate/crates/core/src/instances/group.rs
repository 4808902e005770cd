//! Finite groups given by multiplication tables.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite group: `mult[a][b]` is the index of the product ab.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    labels: Vec<String>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(labels: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty group".into()));
        }
        if mult.len() != n
            || mult
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::InvalidGroupTable(
                "table is not n×n over 0..n".into(),
            ));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mult[e][g] == g && mult[g][e] == g))
            .ok_or_else(|| Error::InvalidGroupTable("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| mult[g][h] == identity && mult[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroupTable(format!("{} has no inverse", labels[g])))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::InvalidGroupTable(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            labels,
            mult,
            inverse,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mult[x][g];
            k += 1;
        }
        k
    }

    /// lcm of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, g| acc.lcm(&self.element_order(g)))
    }

    /// The subgroup generated by `gens`, as a sorted index set.
    pub fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.identity]);
        set.extend(gens.iter().copied());
        loop {
            let cur: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &cur {
                for &b in &cur {
                    set.insert(self.mult[a][b]);
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    pub fn is_subgroup(&self, k: &BTreeSet<usize>) -> bool {
        k.contains(&self.identity)
            && k.iter().all(|&a| {
                k.contains(&self.inverse[a]) && k.iter().all(|&b| k.contains(&self.mult[a][b]))
            })
    }

    pub fn is_normal(&self, k: &BTreeSet<usize>) -> bool {
        (0..self.order()).all(|g| {
            k.iter()
                .all(|&x| k.contains(&self.mult[self.mult[g][x]][self.inverse[g]]))
        })
    }

    /// All subgroups generated by at most two elements, sorted by (order, elements).
    pub fn subgroups(&self) -> Vec<BTreeSet<usize>> {
        let n = self.order();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        for a in 0..n {
            for b in a..n {
                found.insert(self.closure(&[a, b]).into_iter().collect());
            }
        }
        let mut out: Vec<BTreeSet<usize>> =
            found.into_iter().map(|v| v.into_iter().collect()).collect();
        out.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
        out
    }

    /// Left cosets gK, each sorted, ordered by their smallest element.
    pub fn left_cosets(&self, k: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen.contains(&g) {
                continue;
            }
            let coset: BTreeSet<usize> = k.iter().map(|&x| self.mult[g][x]).collect();
            seen.extend(coset.iter().copied());
            out.push(coset);
        }
        out
    }

    /// The cyclic group C_n with elements g^0, ..., g^(n-1).
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let mult = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::new(labels, mult).expect("cyclic group")
    }

    /// S₃ as permutations of {1, 2, 3}, composed right to left, in the order
    /// e, (12), (13), (23), (123), (132).
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mult = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let (s, t) = (perms[a], perms[b]);
                        index([s[t[0]], s[t[1]], s[t[2]]])
                    })
                    .collect()
            })
            .collect();
        Self::new(labels, mult).expect("S3")
    }

    /// The dihedral group of order 8, elements r^a s^b in the order
    /// e, r, r^2, r^3, s, rs, r^2s, r^3s.
    pub fn dihedral4() -> Self {
        let labels = ["e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let idx = |a: usize, b: usize| b * 4 + a;
        let mult = (0..8)
            .map(|x| {
                let (a, b) = (x % 4, x / 4);
                (0..8)
                    .map(|y| {
                        let (c, d) = (y % 4, y / 4);
                        let rot = if b == 0 { a + c } else { a + 4 - c };
                        idx(rot % 4, (b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        Self::new(labels, mult).expect("D4")
    }

    /// The quaternion group in the order 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion() -> Self {
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // unit products on {1, i, j, k} as (sign, unit)
        let unit = |u: usize, v: usize| -> (bool, usize) {
            match (u, v) {
                (0, x) | (x, 0) => (false, x),
                (a, b) if a == b => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let mult = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (sx, ux) = (x % 2 == 1, x / 2);
                        let (sy, uy) = (y % 2 == 1, y / 2);
                        let (s, u) = unit(ux, uy);
                        2 * u + usize::from(s ^ sx ^ sy)
                    })
                    .collect()
            })
            .collect();
        Self::new(labels, mult).expect("Q8")
    }
}
