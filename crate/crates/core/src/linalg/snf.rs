//! Smith normal form over the integers with optional transform tracking.
//!
//! For an `r × c` matrix `A` the decomposition satisfies `L · A · R = D`
//! with `L`, `R` unimodular and `D` diagonal, `d_0 | d_1 | ...`, all
//! nonnegative. Pivots are chosen by smallest absolute value, ties broken by
//! smallest (row, column) index, so the result is deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type IntMatrix = Vec<Vec<BigInt>>;

pub(crate) fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

#[cfg(test)]
pub(crate) fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

pub(crate) fn mat_vec(a: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum())
        .collect()
}

pub(crate) struct Smith {
    /// Diagonal entries, `min(r, c)` of them.
    pub diag: Vec<BigInt>,
    pub left: Option<IntMatrix>,
    // inverses are only read when checking the transforms
    #[cfg_attr(not(test), allow(dead_code))]
    pub left_inv: Option<IntMatrix>,
    pub right: Option<IntMatrix>,
    #[cfg_attr(not(test), allow(dead_code))]
    pub right_inv: Option<IntMatrix>,
}

struct Work {
    a: IntMatrix,
    left: Option<(IntMatrix, IntMatrix)>,
    right: Option<(IntMatrix, IntMatrix)>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some((l, li)) = &mut self.left {
            l.swap(i, j);
            for row in li.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some((r, ri)) = &mut self.right {
            for row in r.iter_mut() {
                row.swap(i, j);
            }
            ri.swap(i, j);
        }
    }

    /// row_i += k row_j
    fn add_row(&mut self, i: usize, j: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        let src = self.a[j].clone();
        for (x, y) in self.a[i].iter_mut().zip(&src) {
            if !y.is_zero() {
                *x += k * y;
            }
        }
        if let Some((l, li)) = &mut self.left {
            let src = l[j].clone();
            for (x, y) in l[i].iter_mut().zip(&src) {
                if !y.is_zero() {
                    *x += k * y;
                }
            }
            // inverse: col_j -= k col_i
            for row in li.iter_mut() {
                if !row[i].is_zero() {
                    let t = k * &row[i];
                    row[j] -= t;
                }
            }
        }
    }

    /// col_i += k col_j
    fn add_col(&mut self, i: usize, j: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for row in self.a.iter_mut() {
            if !row[j].is_zero() {
                let t = k * &row[j];
                row[i] += t;
            }
        }
        if let Some((r, ri)) = &mut self.right {
            for row in r.iter_mut() {
                if !row[j].is_zero() {
                    let t = k * &row[j];
                    row[i] += t;
                }
            }
            // inverse: row_j -= k row_i
            let src = ri[i].clone();
            for (x, y) in ri[j].iter_mut().zip(&src) {
                if !y.is_zero() {
                    *x -= k * y;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -&*x;
        }
        if let Some((l, li)) = &mut self.left {
            for x in l[i].iter_mut() {
                *x = -&*x;
            }
            for row in li.iter_mut() {
                row[i] = -&row[i];
            }
        }
    }
}

pub(crate) fn smith(a: &[Vec<BigInt>], cols: usize, track_left: bool, track_right: bool) -> Smith {
    let rows = a.len();
    let mut w = Work {
        a: a.to_vec(),
        left: track_left.then(|| (identity(rows), identity(rows))),
        right: track_right.then(|| (identity(cols), identity(cols))),
    };
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &w.a[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < w.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                w.add_row(i, t, &-q);
                if !w.a[i][t].is_zero() {
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                w.add_col(j, t, &-q);
                if !w.a[t][j].is_zero() {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !w.a[i][j].is_multiple_of(&w.a[t][t]));
            match bad {
                Some((i, _)) => {
                    w.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let diag = (0..n).map(|i| w.a[i][i].clone()).collect();
    let (left, left_inv) = match w.left {
        Some((l, li)) => (Some(l), Some(li)),
        None => (None, None),
    };
    let (right, right_inv) = match w.right {
        Some((r, ri)) => (Some(r), Some(ri)),
        None => (None, None),
    };
    Smith { diag, left, left_inv, right, right_inv }
}

/// Smith form over `Z/M`, for lattices known to contain `M·Z^n`.
///
/// Same contract as [`smith`] with every entry and transform reduced mod
/// `M`; each step is an extended-gcd move on representatives in `[0, M)`,
/// so nothing grows. Diagonal entries are raw residues: the invariant
/// factor of position `i` is `gcd(diag[i], M)` (zero meaning `M`), and
/// those factors form a divisibility chain.
pub(crate) struct SmithMod {
    pub diag: Vec<u64>,
    pub left: Option<Vec<Vec<u64>>>,
    pub left_inv: Option<Vec<Vec<u64>>>,
    pub right: Option<Vec<Vec<u64>>>,
    pub right_inv: Option<Vec<Vec<u64>>>,
}

type Mix = [[i128; 2]; 2];

/// `m ← M2 · m` on rows `t, i`.
fn mix_rows(m: &mut [Vec<u64>], t: usize, i: usize, k: &Mix, modulus: u64) {
    let md = modulus as i128;
    for j in 0..m[t].len() {
        let (a, b) = (m[t][j] as i128, m[i][j] as i128);
        m[t][j] = (k[0][0] * a + k[0][1] * b).rem_euclid(md) as u64;
        m[i][j] = (k[1][0] * a + k[1][1] * b).rem_euclid(md) as u64;
    }
}

/// `m ← m · M2` on columns `t, i`.
fn mix_cols(m: &mut [Vec<u64>], t: usize, i: usize, k: &Mix, modulus: u64) {
    let md = modulus as i128;
    for row in m.iter_mut() {
        let (a, b) = (row[t] as i128, row[i] as i128);
        row[t] = (k[0][0] * a + k[1][0] * b).rem_euclid(md) as u64;
        row[i] = (k[0][1] * a + k[1][1] * b).rem_euclid(md) as u64;
    }
}

/// Unimodular `T` and its inverse with `T·(a, b)ᵀ = (gcd, 0)ᵀ`. When
/// `a | b` the first row is left alone, so finished pivots stay finished.
fn gcd_move(a: u64, b: u64) -> (Mix, Mix) {
    if b.is_multiple_of(a) {
        let k = (b / a) as i128;
        return ([[1, 0], [-k, 1]], [[1, 0], [k, 1]]);
    }
    let e = (a as i128).extended_gcd(&(b as i128));
    let (x, y) = (e.x, e.y);
    let (p, q) = (b as i128 / e.gcd, a as i128 / e.gcd);
    ([[x, y], [p, -q]], [[q, y], [p, -x]])
}

fn transpose2(k: &Mix) -> Mix {
    [[k[0][0], k[1][0]], [k[0][1], k[1][1]]]
}

struct ModWork {
    a: Vec<Vec<u64>>,
    modulus: u64,
    left: Option<(Vec<Vec<u64>>, Vec<Vec<u64>>)>,
    right: Option<(Vec<Vec<u64>>, Vec<Vec<u64>>)>,
}

impl ModWork {
    fn row_op(&mut self, t: usize, i: usize, k: &Mix, k_inv: &Mix) {
        mix_rows(&mut self.a, t, i, k, self.modulus);
        if let Some((l, li)) = &mut self.left {
            mix_rows(l, t, i, k, self.modulus);
            mix_cols(li, t, i, k_inv, self.modulus);
        }
    }

    fn col_op(&mut self, t: usize, j: usize, k: &Mix, k_inv: &Mix) {
        mix_cols(&mut self.a, t, j, k, self.modulus);
        if let Some((r, ri)) = &mut self.right {
            mix_cols(r, t, j, k, self.modulus);
            mix_rows(ri, t, j, k_inv, self.modulus);
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            let k = [[0, 1], [1, 0]];
            self.row_op(i, j, &k, &k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            let k = [[0, 1], [1, 0]];
            self.col_op(i, j, &k, &k);
        }
    }
}

pub(crate) fn smith_mod(
    a: &[Vec<u64>],
    cols: usize,
    modulus: u64,
    track_left: bool,
    track_right: bool,
) -> SmithMod {
    let rows = a.len();
    let id = |n: usize| -> Vec<Vec<u64>> {
        (0..n).map(|i| (0..n).map(|j| u64::from(i == j) % modulus).collect()).collect()
    };
    let mut w = ModWork {
        a: a.iter().map(|r| r.iter().map(|x| x % modulus).collect()).collect(),
        modulus,
        left: track_left.then(|| (id(rows), id(rows))),
        right: track_right.then(|| (id(cols), id(cols))),
    };
    let n = rows.min(cols);
    for t in 0..n {
        let ideal = |x: u64| x.gcd(&modulus);
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = w.a[i][j];
                if x != 0 && best.is_none_or(|(bi, bj)| ideal(x) < ideal(w.a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            loop {
                let mut dirty = false;
                for i in t + 1..rows {
                    if w.a[i][t] != 0 {
                        let (k, k_inv) = gcd_move(w.a[t][t], w.a[i][t]);
                        w.row_op(t, i, &k, &k_inv);
                    }
                }
                for j in t + 1..cols {
                    if w.a[t][j] != 0 {
                        let (k, k_inv) = gcd_move(w.a[t][t], w.a[t][j]);
                        w.col_op(t, j, &transpose2(&k), &transpose2(&k_inv));
                        dirty = true;
                    }
                }
                if !dirty || (t + 1..rows).all(|i| w.a[i][t] == 0) {
                    break;
                }
            }
            let p = w.a[t][t].gcd(&modulus);
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(p)));
            match bad {
                Some(i) => w.row_op(t, i, &[[1, 1], [0, 1]], &[[1, -1], [0, 1]]),
                None => break,
            }
        }
    }
    let diag = (0..n).map(|i| w.a[i][i]).collect();
    let (left, left_inv) = w.left.map_or((None, None), |(l, li)| (Some(l), Some(li)));
    let (right, right_inv) = w.right.map_or((None, None), |(r, ri)| (Some(r), Some(ri)));
    SmithMod { diag, left, left_inv, right, right_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn known_invariants() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&a, 3, true, true);
        assert_eq!(s.diag, vec![2.into(), 6.into(), 12.into()]);
        let (l, r) = (s.left.unwrap(), s.right.unwrap());
        let d = mat_mul(&mat_mul(&l, &a), &r);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, if i == j { s.diag[i].clone() } else { BigInt::zero() });
            }
        }
        assert_eq!(mat_mul(&l, &s.left_inv.unwrap()), identity(3));
        assert_eq!(mat_mul(&r, &s.right_inv.unwrap()), identity(3));
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let a = m(&[&[1, 2], &[2, 4], &[3, 6]]);
        let s = smith(&a, 2, true, true);
        assert_eq!(s.diag, vec![1.into(), 0.into()]);
        let d = mat_mul(&mat_mul(s.left.as_ref().unwrap(), &a), s.right.as_ref().unwrap());
        assert_eq!(d[0][0], 1.into());
        assert!(d.iter().flatten().filter(|x| !x.is_zero()).count() == 1);
    }

    fn mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
        let cols = b[0].len();
        a.iter()
            .map(|r| (0..cols).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum::<u64>() % m).collect())
            .collect()
    }

    #[test]
    fn modular_form_matches_integer_form() {
        let m = 24;
        let a: Vec<Vec<u64>> = vec![vec![2, 4, 4], vec![18, 6, 12], vec![10, 20, 8], vec![3, 0, 9]];
        let s = smith_mod(&a, 3, m, true, true);
        let (l, r) = (s.left.unwrap(), s.right.unwrap());
        let d = mul_mod(&mul_mod(&l, &a, m), &r, m);
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j && i < 3 { s.diag[i] } else { 0 }, "({i},{j})");
            }
        }
        assert_eq!(mul_mod(&l, &s.left_inv.unwrap(), m), (0..4).map(|i| (0..4).map(|j| u64::from(i == j)).collect::<Vec<_>>()).collect::<Vec<_>>());
        assert_eq!(mul_mod(&r, &s.right_inv.unwrap(), m), (0..3).map(|i| (0..3).map(|j| u64::from(i == j)).collect::<Vec<_>>()).collect::<Vec<_>>());
        // integer invariant factors of [a; 24 I] reduced against 24
        let mut stacked: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        for i in 0..3 {
            stacked.push((0..3).map(|j| BigInt::from(if i == j { m } else { 0 })).collect());
        }
        let int = smith(&stacked, 3, false, false);
        let factors: Vec<u64> = s.diag.iter().map(|&x| if x == 0 { m } else { x.gcd(&m) }).collect();
        let expected: Vec<u64> = int.diag.iter().map(|x| u64::try_from(x).unwrap()).collect();
        assert_eq!(factors, expected);
    }
}
