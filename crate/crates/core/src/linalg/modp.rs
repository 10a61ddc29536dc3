//! Dense linear algebra over a prime field `F_p` with `p < 2^31`.

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue (Fermat).
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of `F_p^×`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let qs = prime_divisors(p - 1);
    (2..p)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime fields have primitive roots")
}

/// Reduce rows to reduced row echelon form in place; returns pivot columns.
/// Zero rows are dropped.
pub(crate) fn rref(m: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(k) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, k);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = p - row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = (*x + mul_mod(f, y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub(crate) fn rank(m: &[Vec<u64>], p: u64) -> usize {
    let mut a = m.to_vec();
    rref(&mut a, p).len()
}

/// Basis (as rows) of `{x : m x = 0}`.
pub(crate) fn nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &pc) in a.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

pub(crate) fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![0u64; cols];
            for k in 0..inner {
                if row[k] == 0 {
                    continue;
                }
                for (o, &y) in out.iter_mut().zip(&b[k]) {
                    *o = (*o + mul_mod(row[k], y, p)) % p;
                }
            }
            out
        })
        .collect()
}

/// Inverse of a square matrix, `None` when singular.
pub(crate) fn inverse(m: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let mut aug: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Characteristic polynomial `det(xI - m)`, low degree first, via reduction
/// to upper Hessenberg form.
pub(crate) fn charpoly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = m.len();
    let mut h = m.to_vec();
    for c in 0..n.saturating_sub(2) {
        let Some(k) = (c + 1..n).find(|&i| h[i][c] != 0) else {
            continue;
        };
        if k != c + 1 {
            h.swap(k, c + 1);
            for row in h.iter_mut() {
                row.swap(k, c + 1);
            }
        }
        let inv = inv_mod(h[c + 1][c], p);
        for i in c + 2..n {
            let f = mul_mod(h[i][c], inv, p);
            if f == 0 {
                continue;
            }
            // row_i -= f row_{c+1}; col_{c+1} += f col_i
            for j in 0..n {
                let t = mul_mod(f, h[c + 1][j], p);
                h[i][j] = (h[i][j] + p - t) % p;
            }
            for row in h.iter_mut() {
                let t = mul_mod(f, row[i], p);
                row[c + 1] = (row[c + 1] + t) % p;
            }
        }
    }
    // p_k(x) = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - mul_mod(h[k][k], c, p)) % p;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul_mod(prod, h[i + 1][i], p);
            let f = mul_mod(prod, h[i][k], p);
            if f == 0 {
                continue;
            }
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = (next[j] + p - mul_mod(f, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

pub(crate) fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(2) && is_prime(97) && !is_prime(91) && !is_prime(1));
        let g = primitive_root(13);
        let powers: std::collections::BTreeSet<u64> = (0..12).map(|e| pow_mod(g, e, 13)).collect();
        assert_eq!(powers.len(), 12);
    }

    #[test]
    fn nullspace_and_rank() {
        let p = 7;
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert_eq!(rank(&m, p), 1);
        let ns = nullspace(&m, p);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let r: u64 = m[0].iter().zip(&v).map(|(a, b)| a * b).sum::<u64>() % p;
            assert_eq!(r, 0);
        }
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let p = 101;
        // [[2,1,0],[1,3,1],[0,1,4]]: x^3 - 9x^2 + 24x - 18
        let m = vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        assert_eq!(charpoly(&m, p), vec![p - 18, 24, p - 9, 1]);
        // companion-like matrix needing a row swap
        let m = vec![vec![0, 0, 1], vec![0, 0, 0], vec![1, 1, 0]];
        let cp = charpoly(&m, p);
        // det(xI - m) = x^3 - x
        assert_eq!(cp, vec![0, p - 1, 0, 1]);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = 11;
        let m = vec![vec![1, 2], vec![3, 4]];
        let inv = inverse(&m, p).unwrap();
        assert_eq!(mat_mul(&m, &inv, p), vec![vec![1, 0], vec![0, 1]]);
        assert!(inverse(&[vec![1, 2], vec![2, 4]], p).is_none());
    }
}
