//! Per-conductor tables: Φ_n, the reduction of x^k modulo Φ_n, and the
//! data needed to test membership in maximal cyclotomic subfields.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use super::Rational;
use crate::linalg::rational::{inverse, rref};

pub(crate) struct FieldData {
    pub phi: usize,
    /// `red[k]` is `x^k mod Φ_n` for `0 <= k < n`.
    pub red: Vec<Vec<i64>>,
    pub descents: Vec<Descent>,
}

/// How to recognise elements of `Q(ζ_d)`, `d = n/p`, inside `Q(ζ_n)`.
pub(crate) enum Descent {
    /// `p² | n`: `Φ_n(x) = Φ_d(x^p)`, so the subfield is spanned by the
    /// basis monomials whose exponent is divisible by `p`.
    Stride { p: usize, d: u32 },
    /// `p ∤ d`: the subfield is the column span of `cols`
    /// (`cols[j] = ζ_d^j` written in the basis of `Q(ζ_n)`); `inv` inverts
    /// the rows `rows` of that matrix.
    Embed { d: u32, rows: Vec<usize>, inv: Vec<Vec<Rational>>, cols: Vec<Vec<i64>> },
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn euler_phi(n: u32) -> usize {
    prime_factors(n)
        .into_iter()
        .fold(n as usize, |acc, p| acc / p as usize * (p as usize - 1))
}

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let den = cyclotomic_polynomial(d);
        num = divide_monic(&num, &den);
    }
    num
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

impl FieldData {
    fn build(n: u32) -> Self {
        let phi = euler_phi(n);
        let poly = cyclotomic_polynomial(n);
        let mut red = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            red.push(cur.clone());
            // multiply by x and substitute x^phi = -Σ c_i x^i
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (c, &pc) in cur.iter_mut().zip(&poly[..phi]) {
                    *c -= top * pc;
                }
            }
        }
        let descents = prime_factors(n)
            .into_iter()
            .map(|p| {
                let d = n / p;
                if d.is_multiple_of(p) {
                    Descent::Stride { p: p as usize, d }
                } else {
                    let phid = euler_phi(d);
                    let cols: Vec<Vec<i64>> =
                        (0..phid).map(|j| red[(p as usize * j) % n as usize].clone()).collect();
                    // independent rows of the embedding = pivot columns of its transpose
                    let mut t: Vec<Vec<Rational>> = cols
                        .iter()
                        .map(|c| c.iter().map(|&x| Rational::from_integer(x.into())).collect())
                        .collect();
                    let rows = rref(&mut t);
                    debug_assert_eq!(rows.len(), phid);
                    let square: Vec<Vec<Rational>> = rows
                        .iter()
                        .map(|&r| cols.iter().map(|c| Rational::from_integer(c[r].into())).collect())
                        .collect();
                    let inv = inverse(&square).expect("embedding has full rank");
                    Descent::Embed { d, rows, inv, cols }
                }
            })
            .collect();
        FieldData { phi, red, descents }
    }

    /// Try to write `a` (coordinates in this field) as `Σ b_j ζ_d^j` for a
    /// proper subfield; returns `(d, b)` on success.
    pub fn descend(&self, a: &[Rational]) -> Option<(u32, Vec<Rational>)> {
        for descent in &self.descents {
            match descent {
                Descent::Stride { p, d } => {
                    if a.iter().enumerate().all(|(i, x)| i % p == 0 || x.is_zero()) {
                        return Some((*d, a.iter().step_by(*p).cloned().collect()));
                    }
                }
                Descent::Embed { d, rows, inv, cols } => {
                    let b: Vec<Rational> = inv
                        .iter()
                        .map(|row| {
                            row.iter()
                                .zip(rows)
                                .filter(|(c, &r)| !c.is_zero() && !a[r].is_zero())
                                .map(|(c, &r)| c * &a[r])
                                .sum()
                        })
                        .collect();
                    let fits = (0..a.len()).all(|i| {
                        let v: Rational = cols
                            .iter()
                            .zip(&b)
                            .filter(|(c, bj)| c[i] != 0 && !bj.is_zero())
                            .map(|(c, bj)| bj * Rational::from_integer(c[i].into()))
                            .sum();
                        v == a[i]
                    });
                    if fits {
                        return Some((*d, b));
                    }
                }
            }
        }
        None
    }
}

type Cache = RwLock<HashMap<u32, Arc<FieldData>>>;

fn cache() -> &'static Cache {
    static FIELDS: OnceLock<Cache> = OnceLock::new();
    FIELDS.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Field tables for conductor `n`, built once and shared.
pub(crate) fn field(n: u32) -> Arc<FieldData> {
    if let Some(f) = cache().read().expect("field cache poisoned").get(&n) {
        return Arc::clone(f);
    }
    let built = Arc::new(FieldData::build(n));
    let mut w = cache().write().expect("field cache poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}
