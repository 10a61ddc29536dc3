//! `H²(G, ℂˣ)` classes with `μ_m`-valued representatives.
//!
//! A normalized cocycle is determined by the values `u(a, s) = η(a, s)` for
//! `a ≠ 1` and `s` in a small generating set: along a spanning tree of the
//! Cayley graph, `η(a, ys) = η(a, y) + η(ay, s) − η(y, s)`. The remaining
//! (non-tree) edges give the linear constraints on `u`. Two such cocycles
//! are identified when they differ by the coboundary of a `ℂˣ`-valued
//! cochain; those cochains can be taken `μ_{m|G|}`-valued.

use num_integer::Integer;

use super::Cocycle2;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::snf::smith_mod;

/// Work bound on the constraint elimination, roughly
/// `#constraints × #unknowns²`.
const WORK_BUDGET: u128 = 2_000_000_000;
/// Largest number of classes whose representatives are enumerated.
const CLASS_BUDGET: u64 = 100_000;

#[derive(Clone, Debug)]
pub struct H2 {
    modulus: u64,
    divisors: Vec<u64>,
    generators: Vec<Cocycle2>,
    representatives: Vec<Cocycle2>,
    basis: Basis,
}

/// Everything needed to expand unknowns into tables and to read off the
/// class of a cocycle.
#[derive(Clone, Debug)]
struct Basis {
    order: usize,
    gens: Vec<usize>,
    parent: Vec<Option<(usize, usize)>>,
    bfs: Vec<usize>,
    /// Position of `a` among non-identity elements.
    slot: Vec<Option<usize>>,
    /// `R⁻¹ mod m` from the cocycle lattice.
    r_inv: Vec<Vec<u64>>,
    c: Vec<u64>,
    d: Vec<u64>,
    /// Rows of `P` for the nontrivial invariant factors, reduced mod each.
    p_rows: Vec<Vec<u64>>,
}

impl Basis {
    fn unknowns(&self) -> usize {
        self.slot.iter().flatten().count() * self.gens.len()
    }

    fn index(&self, a: usize, pos: usize) -> Option<usize> {
        self.slot[a].map(|i| i * self.gens.len() + pos)
    }

    /// Integer forms for `η(a, y)`, all `y`, in the unknowns.
    fn forms(&self, g: &FiniteGroup, a: usize) -> Vec<Vec<i64>> {
        let n_unk = self.unknowns();
        let mut f = vec![Vec::new(); self.order];
        f[g.identity()] = vec![0i64; n_unk];
        for &y in &self.bfs[1..] {
            let (x, pos) = self.parent[y].expect("non-root has a parent");
            let mut v = f[x].clone();
            if let Some(i) = self.index(g.mul(a, x), pos) {
                v[i] += 1;
            }
            if let Some(i) = self.index(x, pos) {
                v[i] -= 1;
            }
            f[y] = v;
        }
        f
    }

    fn expand(&self, g: &FiniteGroup, u: &[u64], m: u64) -> Cocycle2 {
        let n = self.order;
        let mut values = vec![0u64; n * n];
        for a in g.elements() {
            if a == g.identity() {
                continue;
            }
            for &y in &self.bfs[1..] {
                let (x, pos) = self.parent[y].expect("non-root has a parent");
                let up = |b: usize| self.index(b, pos).map_or(0, |i| u[i]);
                values[a * n + y] = (values[a * n + x] + up(g.mul(a, x)) + m - up(x)) % m;
            }
        }
        Cocycle2::from_values_unchecked(n, m, values)
    }

    fn coordinates(&self, u: &[u64], m: u64) -> Vec<u64> {
        let w: Vec<u64> = self
            .r_inv
            .iter()
            .zip(self.c.iter().zip(&self.d))
            .map(|(row, (&c, &d))| {
                let v = row.iter().zip(u).fold(0u128, |acc, (&x, &y)| (acc + x as u128 * y as u128) % m as u128) as u64;
                debug_assert_eq!(v % c, 0);
                (v / c) % d
            })
            .collect();
        self.p_rows
            .iter()
            .map(|row| row.iter().zip(&w).fold(0u64, |acc, (&x, &y)| acc + x * y))
            .collect()
    }
}

/// Extended gcd on nonnegative residues: `(g, x, y)` with `x a + y b = g`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

/// Insert `v` into a row echelon family over `Z/m` by unimodular row moves,
/// so the family spans the same `Z/m`-module as everything inserted.
fn insert_row(rows: &mut [Option<Vec<u64>>], mut v: Vec<u64>, m: u64) {
    let mi = m as i128;
    for i in 0..v.len() {
        if v[i] == 0 {
            continue;
        }
        let Some(b) = rows[i].take() else {
            rows[i] = Some(v);
            return;
        };
        let (g, x, y) = ext_gcd(b[i] as i64, v[i] as i64);
        let (p, q) = ((v[i] as i64 / g) as i128, (b[i] as i64 / g) as i128);
        let (x, y) = (x as i128, y as i128);
        let mut nb = vec![0u64; v.len()];
        let mut nv = vec![0u64; v.len()];
        for j in i..v.len() {
            let (bj, vj) = (b[j] as i128, v[j] as i128);
            nb[j] = (x * bj + y * vj).rem_euclid(mi) as u64;
            nv[j] = (p * bj - q * vj).rem_euclid(mi) as u64;
        }
        debug_assert_eq!(nv[i], 0);
        rows[i] = Some(nb);
        v = nv;
    }
}

/// Invariant factor of a raw diagonal residue: `gcd(x, m)`, zero meaning `m`.
fn factor(x: u64, m: u64) -> u64 {
    if x == 0 { m } else { x.gcd(&m) }
}

/// Representatives of every class of `H²(G, ℂˣ)` that has a `μ_m`-valued
/// cocycle, together with the invariant factors of that class group. With
/// `m = |G|` this is all of `H²(G, ℂˣ)`.
pub fn h2_classes(g: &FiniteGroup, m: u64) -> Result<H2> {
    if m == 0 {
        return Err(Error::BudgetExceeded("modulus must be positive".into()));
    }
    let n = g.order();
    let gens = g.small_generating_set();
    let (parent, bfs) = g.spanning_tree(&gens);
    let mut slot = vec![None; n];
    for (i, a) in g.elements().filter(|&a| a != g.identity()).enumerate() {
        slot[a] = Some(i);
    }
    let mut basis = Basis {
        order: n,
        gens,
        parent,
        bfs,
        slot,
        r_inv: Vec::new(),
        c: Vec::new(),
        d: Vec::new(),
        p_rows: Vec::new(),
    };
    let k = basis.gens.len();
    let n_unk = basis.unknowns();
    let work = (n as u128) * (n as u128) * (k as u128) * (n_unk as u128) * (n_unk as u128);
    if work > WORK_BUDGET {
        return Err(Error::BudgetExceeded(format!("|G| = {n} with {k} generators")));
    }
    if n_unk == 0 {
        let trivial = Cocycle2::trivial(n, m);
        return Ok(H2 { modulus: m, divisors: Vec::new(), generators: Vec::new(), representatives: vec![trivial], basis });
    }

    // cocycle constraints from the non-tree edges, reduced to echelon form
    let mut echelon: Vec<Option<Vec<u64>>> = vec![None; n_unk];
    for a in g.elements().filter(|&a| a != g.identity()) {
        let f = basis.forms(g, a);
        for x in g.elements() {
            for (pos, &s) in basis.gens.iter().enumerate() {
                let z = g.mul(x, s);
                if basis.parent[z] == Some((x, pos)) {
                    continue;
                }
                let mut row: Vec<i64> = f[z].iter().zip(&f[x]).map(|(p, q)| p - q).collect();
                if let Some(i) = basis.index(g.mul(a, x), pos) {
                    row[i] -= 1;
                }
                if let Some(i) = basis.index(x, pos) {
                    row[i] += 1;
                }
                let row: Vec<u64> = row.iter().map(|&c| c.rem_euclid(m as i64) as u64).collect();
                if row.iter().any(|&c| c != 0) {
                    insert_row(&mut echelon, row, m);
                }
            }
        }
    }

    // cocycles: u with Au ≡ 0 (mod m); diagonalize as U·A·R = D over Z/m
    let a_mat: Vec<Vec<u64>> = echelon.into_iter().map(|r| r.unwrap_or_else(|| vec![0; n_unk])).collect();
    let z_snf = smith_mod(&a_mat, n_unk, m, false, true);
    let r = z_snf.right.expect("tracked");
    let r_inv = z_snf.right_inv.expect("tracked");
    let d: Vec<u64> = z_snf.diag.iter().map(|&x| factor(x, m)).collect();
    let c: Vec<u64> = d.iter().map(|&di| m / di).collect();

    // coboundaries of μ_{m|G|}-valued cochains that land in μ_m
    let big_m = m * n as u64;
    let cochains: Vec<usize> = g.elements().filter(|&x| x != g.identity()).collect();
    let mut k_mat = vec![vec![0u64; cochains.len()]; n_unk];
    for a in g.elements().filter(|&a| a != g.identity()) {
        for (pos, &s) in basis.gens.iter().enumerate() {
            let row = basis.index(a, pos).expect("a is not the identity");
            for (col, &x) in cochains.iter().enumerate() {
                let coeff = i64::from(x == a) + i64::from(x == s) - i64::from(x == g.mul(a, s));
                k_mat[row][col] = coeff.rem_euclid(big_m as i64) as u64;
            }
        }
    }
    let b_snf = smith_mod(&k_mat, cochains.len(), big_m, true, false);
    let l_inv = b_snf.left_inv.expect("tracked");
    let mut t = vec![0u64; n_unk];
    for (ti, &e) in t.iter_mut().zip(&b_snf.diag) {
        *ti = (e / e.gcd(&(n as u64))) % m;
    }

    // coboundary generators in w-coordinates, w_i = (R⁻¹u)_i / c_i mod d_i
    let mut k2 = vec![vec![0u64; 2 * n_unk]; n_unk];
    for i in 0..n_unk {
        for j in 0..n_unk {
            let v = (0..n_unk).fold(0u128, |acc, l| acc + r_inv[i][l] as u128 * (l_inv[l][j] % m) as u128);
            let v = (v % m as u128) as u64 * t[j] % m;
            debug_assert_eq!(v % c[i], 0, "coboundaries are cocycles");
            k2[i][j] = (v / c[i]) % d[i];
        }
        k2[i][n_unk + i] = d[i] % m;
    }
    let h_snf = smith_mod(&k2, 2 * n_unk, m, true, false);
    let p = h_snf.left.expect("tracked");
    let p_inv = h_snf.left_inv.expect("tracked");
    let mut divisors = Vec::new();
    let mut p_rows = Vec::new();
    let mut gen_w = Vec::new();
    for (i, &raw) in h_snf.diag.iter().enumerate() {
        let e = factor(raw, m);
        if e > 1 {
            divisors.push(e);
            p_rows.push(p[i].iter().map(|x| x % e).collect());
            gen_w.push((0..n_unk).map(|j| p_inv[j][i]).collect::<Vec<u64>>());
        }
    }
    let count = divisors.iter().try_fold(1u64, |acc, &e| acc.checked_mul(e).filter(|&x| x <= CLASS_BUDGET));
    let Some(count) = count else {
        return Err(Error::BudgetExceeded(format!("more than {CLASS_BUDGET} classes")));
    };

    // generators u = R·diag(c)·w
    let gen_u: Vec<Vec<u64>> = gen_w
        .iter()
        .map(|w| {
            (0..n_unk)
                .map(|row| {
                    let s = (0..n_unk).fold(0u128, |acc, j| acc + r[row][j] as u128 * (c[j] * w[j] % m) as u128);
                    (s % m as u128) as u64
                })
                .collect()
        })
        .collect();
    basis.r_inv = r_inv;
    basis.c = c;
    basis.d = d;
    basis.p_rows = p_rows;

    let generators: Vec<Cocycle2> = gen_u.iter().map(|u| basis.expand(g, u, m)).collect();
    let mut representatives = Vec::with_capacity(count as usize);
    let mut coords = vec![0u64; divisors.len()];
    loop {
        let mut u = vec![0u64; n_unk];
        for (gu, &kk) in gen_u.iter().zip(&coords) {
            for (x, &y) in u.iter_mut().zip(gu) {
                *x = (*x + kk * y) % m;
            }
        }
        representatives.push(basis.expand(g, &u, m));
        // odometer, last coordinate fastest
        let mut i = divisors.len();
        loop {
            if i == 0 {
                return Ok(H2 { modulus: m, divisors, generators, representatives, basis });
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] < divisors[i] {
                break;
            }
            coords[i] = 0;
        }
    }
}

impl H2 {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Invariant factors `e_0 | e_1 | ...`, all greater than one.
    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn generators(&self) -> &[Cocycle2] {
        &self.generators
    }

    /// One representative per class, in lexicographic order of class
    /// coordinates; index 0 is the trivial class.
    pub fn representatives(&self) -> &[Cocycle2] {
        &self.representatives
    }

    /// Coordinates of the class of `eta` along `divisors()`, `None` when its
    /// modulus does not divide ours.
    pub fn class_of(&self, eta: &Cocycle2) -> Option<Vec<u64>> {
        let eta = eta.with_modulus(self.modulus)?;
        let b = &self.basis;
        let mut u = vec![0u64; b.unknowns()];
        for a in 0..b.order {
            for (pos, &s) in b.gens.iter().enumerate() {
                if let Some(i) = b.index(a, pos) {
                    u[i] = eta.value(a, s);
                }
            }
        }
        let raw = b.coordinates(&u, self.modulus);
        Some(raw.iter().zip(&self.divisors).map(|(&x, &e)| x % e).collect())
    }

    /// Index into `representatives()` of the class of `eta`.
    pub fn class_index(&self, eta: &Cocycle2) -> Option<usize> {
        let coords = self.class_of(eta)?;
        Some(coords.iter().zip(&self.divisors).fold(0usize, |acc, (&x, &e)| acc * e as usize + x as usize))
    }
}
