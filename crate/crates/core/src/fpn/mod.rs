//! The elementary abelian case `G = F_p^n`: autoequivalences of the center
//! as `2n × 2n` matrices over `F_p` preserving the hyperbolic form on
//! grading ⊕ character coordinates.
//!
//! Coordinates are `(g; c)` with `g ∈ F_p^n` the grading and `c` the
//! character `x ↦ ζ_p^{c·x}`. The form is `J = [[0, I], [I, 0]]`; for
//! `p = 2` the same matrix is alternating and the preserved group is the
//! symplectic one.

mod bruhat;
mod model;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::modp;

pub use bruhat::{bruhat_factorize, cell_census, double_cosets_separated, BruhatCell, BruhatContext, CellCensus};
pub use model::FpModel;

/// Group-size bound for [`generate_matrix_group`].
pub const MATRIX_GROUP_CAP: usize = 1_000_000;

/// Search-tree bound for [`group_order_oracle`].
const ORACLE_NODE_BUDGET: u64 = 200_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FpMatrix {
    p: u64,
    rows: Vec<Vec<u64>>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{:?}", self.p, self.rows)
    }
}

fn check_prime(p: u64) -> Result<()> {
    if modp::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

impl FpMatrix {
    pub fn new(p: u64, rows: Vec<Vec<u64>>) -> Result<Self> {
        check_prime(p)?;
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::MalformedTable("matrix is not square".into()));
        }
        Ok(FpMatrix { p, rows: rows.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect() })
    }

    pub fn identity(p: u64, size: usize) -> Self {
        FpMatrix { p, rows: (0..size).map(|i| (0..size).map(|j| u64::from(i == j)).collect()).collect() }
    }

    fn from_fn(p: u64, size: usize, f: impl Fn(usize, usize) -> u64) -> Self {
        FpMatrix { p, rows: (0..size).map(|i| (0..size).map(|j| f(i, j) % p).collect()).collect() }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p, self.size())
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        debug_assert_eq!((self.p, self.size()), (other.p, other.size()));
        FpMatrix { p: self.p, rows: modp::mat_mul(&self.rows, &other.rows, self.p) }
    }

    pub fn transpose(&self) -> FpMatrix {
        Self::from_fn(self.p, self.size(), |i, j| self.rows[j][i])
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        modp::inverse(&self.rows, self.p).map(|rows| FpMatrix { p: self.p, rows })
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        self.rows.iter().map(|r| r.iter().zip(v).fold(0, |acc, (a, b)| (acc + a * b) % self.p)).collect()
    }

    /// The `k × k` block starting at `(r, c)`.
    pub fn block(&self, r: usize, c: usize, k: usize) -> Vec<Vec<u64>> {
        self.rows[r..r + k].iter().map(|row| row[c..c + k].to_vec()).collect()
    }

    /// `Mᵀ · J · M = J`.
    pub fn preserves(&self, j: &FpMatrix) -> bool {
        self.transpose().mul(j).mul(self) == *j
    }
}

/// `[[0, I], [I, 0]]` on `F_p^{2n}`.
pub fn hyperbolic_form(p: u64, n: usize) -> Result<FpMatrix> {
    check_prime(p)?;
    Ok(FpMatrix::from_fn(p, 2 * n, |i, j| u64::from(i.abs_diff(j) == n)))
}

/// The families of generators realized as matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Automorphisms `diag(v, v^{-T})`, `v ∈ GL_n`.
    V,
    /// Cocycles: lower unipotent `[[I, 0], [A, I]]`.
    Bv,
    /// Lazy cocycles on the whole group: upper unipotent `[[I, A], [0, I]]`.
    Ev,
    /// Partial dualizations `r_0, …, r_n`.
    R,
}

/// `diag(v, v^{-T})`.
pub fn block_diagonal(v: &FpMatrix) -> FpMatrix {
    let n = v.size();
    let w = v.inverse().expect("invertible").transpose();
    FpMatrix::from_fn(v.p, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => v.get(i, j),
        (false, false) => w.get(i - n, j - n),
        _ => 0,
    })
}

fn unipotent(a: &FpMatrix, lower: bool) -> FpMatrix {
    let n = a.size();
    FpMatrix::from_fn(a.p, 2 * n, |i, j| {
        if i == j {
            1
        } else if lower && i >= n && j < n {
            a.get(i - n, j)
        } else if !lower && i < n && j >= n {
            a.get(i, j - n)
        } else {
            0
        }
    })
}

/// `[[I, 0], [A, I]]`.
pub fn lower_unipotent(a: &FpMatrix) -> FpMatrix {
    unipotent(a, true)
}

/// `[[I, A], [0, I]]`.
pub fn upper_unipotent(a: &FpMatrix) -> FpMatrix {
    unipotent(a, false)
}

/// Partial dualization swapping the first `d` grading/character pairs.
pub fn reflection(p: u64, n: usize, d: usize) -> FpMatrix {
    FpMatrix::from_fn(p, 2 * n, |i, j| {
        let (ci, cj) = (i % n, j % n);
        if ci != cj {
            0
        } else if ci < d {
            u64::from(i != j)
        } else {
            u64::from(i == j)
        }
    })
}

/// Basis of `{A : Aᵀ = −A}`, the blocks for which `[[I, 0], [A, I]]`
/// preserves `J`. For odd `p` these are the alternating matrices; for
/// `p = 2` the symmetric ones, including diagonal units.
pub fn skew_basis(p: u64, n: usize) -> Vec<FpMatrix> {
    let mut out = Vec::new();
    for i in 0..n {
        if p == 2 {
            out.push(FpMatrix::from_fn(p, n, |a, b| u64::from(a == i && b == i)));
        }
        for j in i + 1..n {
            out.push(FpMatrix::from_fn(p, n, |a, b| {
                if (a, b) == (i, j) {
                    1
                } else if (a, b) == (j, i) {
                    p - 1
                } else {
                    0
                }
            }));
        }
    }
    out
}

/// Generators of `GL_n(F_p)`: `diag(ω, 1, …)` with `ω` a primitive root,
/// the transvection `I + E_12` and the cyclic coordinate shift. Identity
/// matrices are dropped.
pub fn gl_generators(p: u64, n: usize) -> Vec<FpMatrix> {
    let w = modp::primitive_root(p);
    let mut out = vec![FpMatrix::from_fn(p, n, |i, j| if i != j { 0 } else if i == 0 { w } else { 1 })];
    if n >= 2 {
        out.push(FpMatrix::from_fn(p, n, |i, j| u64::from(i == j || (i, j) == (0, 1))));
        out.push(FpMatrix::from_fn(p, n, |i, j| u64::from(i == (j + 1) % n)));
    }
    out.retain(|m| !m.is_identity());
    out
}

pub fn subgroup_generators(p: u64, n: usize, which: Family) -> Result<Vec<FpMatrix>> {
    check_prime(p)?;
    Ok(match which {
        Family::V => gl_generators(p, n).iter().map(block_diagonal).collect(),
        Family::Bv => skew_basis(p, n).iter().map(lower_unipotent).collect(),
        Family::Ev => skew_basis(p, n).iter().map(upper_unipotent).collect(),
        Family::R => (0..=n).map(|d| reflection(p, n, d)).collect(),
    })
}

/// Union of the generator lists of all four families.
pub fn all_generators(p: u64, n: usize) -> Result<Vec<FpMatrix>> {
    let mut out = Vec::new();
    for which in [Family::V, Family::Bv, Family::Ev, Family::R] {
        out.extend(subgroup_generators(p, n, which)?);
    }
    Ok(out)
}

/// Breadth-first closure under right multiplication by generators,
/// identity first.
pub fn generate_matrix_group(p: u64, size: usize, generators: &[FpMatrix], cap: usize) -> Result<Vec<FpMatrix>> {
    let id = FpMatrix::identity(p, size);
    let mut seen: HashSet<FpMatrix> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in generators {
            let next = m.mul(g);
            if seen.insert(next.clone()) {
                if out.len() == cap {
                    return Err(Error::CapExceeded { order: cap + 1, cap });
                }
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// Number of `M` with `Mᵀ J M = J`, counted column by column: column `j`
/// must pair with itself and with earlier columns as `J` prescribes.
/// Independent of the generator lists.
pub fn group_order_oracle(p: u64, n: usize) -> Result<u64> {
    check_prime(p)?;
    let dim = 2 * n;
    let count = p.checked_pow(dim as u32).filter(|&c| c <= 100_000).ok_or_else(|| {
        Error::BudgetExceeded(format!("{p}^{dim} candidate columns"))
    })?;
    let vectors: Vec<Vec<u64>> = (0..count)
        .map(|mut x| {
            (0..dim)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        })
        .collect();
    // b(x, y) = xᵀ J y = Σ x_i y_{i+n} + x_{i+n} y_i
    let form = |x: &[u64], y: &[u64]| (0..n).fold(0, |acc, i| (acc + x[i] * y[i + n] + x[i + n] * y[i]) % p);
    let target = |i: usize, j: usize| u64::from(i.abs_diff(j) == n);

    fn walk(
        depth: usize,
        chosen: &mut Vec<usize>,
        vectors: &[Vec<u64>],
        ok: &dyn Fn(usize, usize, &[usize]) -> bool,
        nodes: &mut u64,
    ) -> Result<u64> {
        if depth == vectors[0].len() {
            return Ok(1);
        }
        let mut total = 0;
        for v in 0..vectors.len() {
            *nodes += 1;
            if *nodes > ORACLE_NODE_BUDGET {
                return Err(Error::BudgetExceeded(format!("more than {ORACLE_NODE_BUDGET} search nodes")));
            }
            if ok(depth, v, chosen) {
                chosen.push(v);
                total += walk(depth + 1, chosen, vectors, ok, nodes)?;
                chosen.pop();
            }
        }
        Ok(total)
    }
    let ok = |j: usize, v: usize, chosen: &[usize]| {
        let x = &vectors[v];
        form(x, x) == target(j, j) && chosen.iter().enumerate().all(|(i, &c)| form(&vectors[c], x) == target(i, j))
    };
    walk(0, &mut Vec::new(), &vectors, &ok, &mut 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All `p^{4n²}` matrices, checked one by one.
    fn brute_force(p: u64, n: usize) -> u64 {
        let dim = 2 * n;
        let j = hyperbolic_form(p, n).unwrap();
        let total = p.pow((dim * dim) as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let m = FpMatrix::from_fn(p, dim, |_, _| 0);
                let rows = (0..dim)
                    .map(|_| {
                        (0..dim)
                            .map(|_| {
                                let d = c % p;
                                c /= p;
                                d
                            })
                            .collect()
                    })
                    .collect();
                let m = FpMatrix { rows, ..m };
                m.inverse().is_some() && m.preserves(&j)
            })
            .count() as u64
    }

    #[test]
    fn hyperbolic_form_shape() {
        let j = hyperbolic_form(3, 1).unwrap();
        assert_eq!(j.rows(), &[vec![0, 1], vec![1, 0]]);
        assert!(j.mul(&j).is_identity());
        assert!(hyperbolic_form(2, 3).unwrap().mul(&hyperbolic_form(2, 3).unwrap()).is_identity());
        assert_eq!(hyperbolic_form(4, 1), Err(Error::NotPrime(4)));
    }

    #[test]
    fn oracle_agrees_with_brute_force() {
        for (p, n) in [(2, 1), (3, 1), (5, 1), (2, 2)] {
            assert_eq!(group_order_oracle(p, n).unwrap(), brute_force(p, n), "({p},{n})");
        }
    }

    #[test]
    fn oracle_matches_order_formula_for_odd_p() {
        // |O⁺_{2n}(q)| = 2 q^{n(n−1)} (qⁿ − 1) ∏_{i<n} (q^{2i} − 1)
        for (q, n) in [(3u64, 1usize), (5, 1), (3, 2)] {
            let prod: u64 = (1..n).map(|i| q.pow(2 * i as u32) - 1).product();
            let formula = 2 * q.pow((n * (n - 1)) as u32) * (q.pow(n as u32) - 1) * prod;
            assert_eq!(group_order_oracle(q, n).unwrap(), formula);
        }
    }

    #[test]
    fn oracle_budget() {
        assert!(matches!(group_order_oracle(7, 3), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn generators_preserve_the_form() {
        for (p, n) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)] {
            let j = hyperbolic_form(p, n).unwrap();
            for m in all_generators(p, n).unwrap() {
                assert!(m.preserves(&j), "({p},{n}) {m:?}");
            }
        }
    }

    #[test]
    fn generator_lists() {
        assert_eq!(subgroup_generators(3, 1, Family::V).unwrap(), vec![FpMatrix::new(3, vec![vec![2, 0], vec![0, 2]]).unwrap()]);
        for p in [3, 5, 7] {
            assert!(subgroup_generators(p, 1, Family::Bv).unwrap().is_empty());
            assert!(subgroup_generators(p, 1, Family::Ev).unwrap().is_empty());
        }
        let r = subgroup_generators(2, 2, Family::R).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r[0].is_identity());
        assert_eq!(r[2], hyperbolic_form(2, 2).unwrap());
    }

    #[test]
    fn gl_generators_generate_gl() {
        // |GL_2(F_3)| = 48, |GL_3(F_2)| = 168
        for (p, n, order) in [(3, 2, 48), (2, 3, 168), (5, 1, 4)] {
            let gens = gl_generators(p, n);
            assert_eq!(generate_matrix_group(p, n, &gens, 1000).unwrap().len(), order);
        }
    }

    #[test]
    fn generated_orders_match_oracle() {
        for (p, n) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)] {
            let gens = all_generators(p, n).unwrap();
            let order = generate_matrix_group(p, 2 * n, &gens, MATRIX_GROUP_CAP).unwrap().len() as u64;
            assert_eq!(order, group_order_oracle(p, n).unwrap(), "({p},{n})");
        }
    }
}
