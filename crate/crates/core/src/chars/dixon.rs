//! Dixon–Schneider: split the class algebra over `F_p` with `p ≡ 1 mod
//! exp(G)`, then lift each modular character to exact cyclotomic values
//! through eigenvalue multiplicities.

use crate::cyclo::{Cyclotomic, Rational};
use crate::groups::{ConjugacyClasses, FiniteGroup};
use crate::linalg::modp::{
    charpoly, eval_poly, inv_mod, is_prime, mul_mod, nullspace, pow_mod, primitive_root, rref,
};

/// Smallest prime `p ≡ 1 (mod e)` above `bound`.
fn choose_prime(e: u64, bound: u64) -> u64 {
    let mut p = (bound / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

/// Class multiplication coefficients: `a[j][i][l]` counts `x ∈ C_i` with
/// `x⁻¹ z_l ∈ C_j`, where `z_l` is the representative of `C_l`.
fn class_matrices(g: &FiniteGroup, cc: &ConjugacyClasses) -> Vec<Vec<Vec<u64>>> {
    let k = cc.len();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (l, &z) in cc.reps.iter().enumerate() {
        for x in g.elements() {
            let y = g.mul(g.inv(x), z);
            a[cc.class_of[y]][cc.class_of[x]][l] += 1;
        }
    }
    a
}

/// Split `F_p^k` into the common one-dimensional eigenspaces of the class
/// matrices. Each returned vector is a basis of one eigenline.
fn split(mats: &[Vec<Vec<u64>>], k: usize, p: u64) -> Vec<Vec<u64>> {
    let identity: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut pending = vec![identity];
    let mut done = Vec::new();
    for a in mats {
        let mut next = Vec::new();
        for basis in pending {
            if basis.len() == 1 {
                done.push(basis);
                continue;
            }
            next.extend(split_space(a, basis, p));
        }
        pending = next;
        if pending.is_empty() {
            break;
        }
    }
    done.extend(pending);
    done.into_iter()
        .map(|b| {
            assert_eq!(b.len(), 1, "class algebra failed to split");
            b.into_iter().next().expect("one basis vector")
        })
        .collect()
}

/// Decompose an invariant subspace (rows in RREF) into eigenspaces of `a`.
fn split_space(a: &[Vec<u64>], basis: Vec<Vec<u64>>, p: u64) -> Vec<Vec<Vec<u64>>> {
    let d = basis.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("nonzero basis row"))
        .collect();
    // r[b][c]: coordinate c of a·basis_b; eigenvectors x satisfy x r = λ x
    let rt: Vec<Vec<u64>> = {
        let images: Vec<Vec<u64>> = basis
            .iter()
            .map(|v| {
                a.iter()
                    .map(|row| row.iter().zip(v).fold(0, |s, (&x, &y)| (s + mul_mod(x, y, p)) % p))
                    .collect()
            })
            .collect();
        (0..d).map(|c| (0..d).map(|b| images[b][pivots[c]]).collect()).collect()
    };
    let poly = charpoly(&rt, p);
    let mut parts = Vec::new();
    let mut total = 0;
    for lambda in 0..p {
        if eval_poly(&poly, lambda, p) != 0 {
            continue;
        }
        let shifted: Vec<Vec<u64>> = rt
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { (x + p - lambda) % p } else { x })
                    .collect()
            })
            .collect();
        let coords = nullspace(&shifted, p);
        let mut vecs: Vec<Vec<u64>> = coords
            .iter()
            .map(|x| {
                let mut v = vec![0u64; basis[0].len()];
                for (c, row) in x.iter().zip(&basis) {
                    for (o, &y) in v.iter_mut().zip(row) {
                        *o = (*o + mul_mod(*c, y, p)) % p;
                    }
                }
                v
            })
            .collect();
        rref(&mut vecs, p);
        total += vecs.len();
        parts.push(vecs);
        if total == d {
            break;
        }
    }
    assert_eq!(total, d, "class matrix is not diagonalizable mod p");
    parts
}

/// Exact irreducible characters, unsorted. Values are indexed by class.
pub(super) fn irreducible_characters(g: &FiniteGroup, cc: &ConjugacyClasses) -> Vec<Vec<Cyclotomic>> {
    let n = g.order() as u64;
    let k = cc.len();
    let e = g.exponent() as u64;
    let p = choose_prime(e, 2 * n);
    let id_class = cc.class_of[g.identity()];
    let inv_class: Vec<usize> = cc.reps.iter().map(|&r| cc.class_of[g.inv(r)]).collect();
    let sizes: Vec<u64> = (0..k).map(|i| cc.size(i) as u64).collect();
    let mats = class_matrices(g, cc);
    // the identity class matrix is the identity; skip it
    let useful: Vec<Vec<Vec<u64>>> =
        mats.into_iter().enumerate().filter(|(j, _)| *j != id_class).map(|(_, m)| m).collect();
    let lines = split(&useful, k, p);

    let z = pow_mod(primitive_root(p), (p - 1) / e, p);
    let orders: Vec<u64> = cc.reps.iter().map(|&r| g.element_order(r) as u64).collect();
    // power_class[i][l] = class of rep_i^l
    let power_class: Vec<Vec<usize>> = cc
        .reps
        .iter()
        .zip(&orders)
        .map(|(&r, &o)| {
            let mut x = g.identity();
            (0..o)
                .map(|_| {
                    let c = cc.class_of[x];
                    x = g.mul(x, r);
                    c
                })
                .collect()
        })
        .collect();

    lines
        .into_iter()
        .map(|w| {
            let scale = inv_mod(w[id_class], p);
            let omega: Vec<u64> = w.iter().map(|&x| mul_mod(x, scale, p)).collect();
            let s = (0..k).fold(0, |acc, i| {
                let t = mul_mod(mul_mod(omega[i], omega[inv_class[i]], p), inv_mod(sizes[i] % p, p), p);
                (acc + t) % p
            });
            let d2 = mul_mod(n % p, inv_mod(s, p), p);
            let d = (1..=n)
                .take_while(|d| d * d <= n)
                .find(|d| d * d % p == d2)
                .expect("degree squared divides the group order");
            let modular: Vec<u64> = (0..k)
                .map(|i| mul_mod(mul_mod(d, omega[i], p), inv_mod(sizes[i] % p, p), p))
                .collect();
            (0..k)
                .map(|i| {
                    let o = orders[i];
                    let zo = pow_mod(z, e / o, p);
                    let inv_o = inv_mod(o % p, p);
                    let terms = (0..o).filter_map(|t| {
                        let m = (0..o).fold(0, |acc, l| {
                            let root = pow_mod(zo, (o - (t * l) % o) % o, p);
                            (acc + mul_mod(modular[power_class[i][l as usize]], root, p)) % p
                        });
                        let m = mul_mod(m, inv_o, p);
                        assert!(m <= d, "eigenvalue multiplicity out of range");
                        (m != 0).then(|| (t, Rational::from_integer(m.into())))
                    });
                    Cyclotomic::from_powers(o as u32, terms)
                })
                .collect()
        })
        .collect()
}
