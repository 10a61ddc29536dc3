//! Conjugation invariance of cocycles on a normal subgroup.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Cocycle2;
use crate::groups::{Embedded, FiniteGroup};
use crate::linalg::snf::{mat_vec, smith};

/// Local index of `h s h⁻¹` for every local `s`, `None` if conjugation
/// leaves the subgroup.
fn conjugation_map(g: &FiniteGroup, s: &Embedded, h: usize) -> Option<Vec<usize>> {
    s.embedding.iter().map(|&x| s.local(g.conjugate(h, x))).collect()
}

/// `η(ʰa, ʰb) = η(a, b)` for all `h ∈ G` and `a, b ∈ S`. `eta` lives on
/// `s.group` (local indices).
pub fn is_lazy(g: &FiniteGroup, s: &Embedded, eta: &Cocycle2) -> bool {
    let k = s.group.order();
    g.small_generating_set().iter().all(|&h| match conjugation_map(g, s, h) {
        None => false,
        Some(c) => (0..k).all(|a| (0..k).all(|b| eta.value(c[a], c[b]) == eta.value(a, b))),
    })
}

/// A conjugation-invariant cocycle cohomologous to `eta` over `ℂˣ`, or
/// `None` when the class has no invariant representative. The modulus of
/// the result may be a multiple of `eta`'s.
pub fn lazy_representative(g: &FiniteGroup, s: &Embedded, eta: &Cocycle2) -> Option<Cocycle2> {
    if is_lazy(g, s, eta) {
        return Some(eta.clone());
    }
    let sg = &s.group;
    let k = sg.order();
    let m = eta.modulus();
    let e = sg.identity();
    let unknowns: Vec<usize> = sg.elements().filter(|&x| x != e).collect();
    let col = |x: usize| unknowns.binary_search(&x).ok();

    // δf(ʰa,ʰb) − δf(a,b) = (η(a,b) − η(ʰa,ʰb)) / m  (mod 1)
    let mut rows: Vec<(Vec<i64>, u64)> = Vec::new();
    for h in g.small_generating_set() {
        let c = conjugation_map(g, s, h)?;
        for a in 0..k {
            for b in 0..k {
                let mut row = vec![0i64; unknowns.len()];
                let mut add = |x: usize, v: i64| {
                    if let Some(i) = col(x) {
                        row[i] += v;
                    }
                };
                add(c[a], 1);
                add(c[b], 1);
                add(c[sg.mul(a, b)], -1);
                add(a, -1);
                add(b, -1);
                add(sg.mul(a, b), 1);
                let rhs = (eta.value(a, b) + m - eta.value(c[a], c[b])) % m;
                if row.iter().all(|&x| x == 0) {
                    if rhs != 0 {
                        return None;
                    }
                    continue;
                }
                rows.push((row, rhs));
            }
        }
    }
    rows.sort_unstable();
    rows.dedup();
    let mat: Vec<Vec<BigInt>> = rows.iter().map(|(r, _)| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rhs: Vec<BigInt> = rows.iter().map(|&(_, c)| BigInt::from(c)).collect();
    let snf = smith(&mat, unknowns.len(), true, true);
    let lc = mat_vec(snf.left.as_ref().expect("tracked"), &rhs);
    let r = snf.right.expect("tracked");
    let big_m = BigInt::from(m);
    let rank = snf.diag.iter().take_while(|d| !d.is_zero()).count();
    if lc[rank..].iter().any(|x| !x.is_multiple_of(&big_m)) {
        return None;
    }
    // f_j = Σ_i R_ji (Lc)_i / (m d_i), scaled to the modulus m·lcm(d)
    let lcm = snf.diag[..rank].iter().fold(BigInt::one(), |acc, d| acc.lcm(d));
    let new_m = &big_m * &lcm;
    let f: Vec<BigInt> = (0..unknowns.len())
        .map(|j| {
            let s: BigInt = (0..rank).map(|i| &r[j][i] * &lc[i] * (&lcm / &snf.diag[i])).sum();
            s.mod_floor(&new_m)
        })
        .collect();
    let new_m_u = new_m.to_u64()?;
    let fv = |x: usize| col(x).map_or(0, |i| f[i].to_u64().expect("reduced"));
    let scale = new_m_u / m;
    let values = (0..k)
        .flat_map(|a| (0..k).map(move |b| (a, b)))
        .map(|(a, b)| (eta.value(a, b) * scale + fv(a) + fv(b) + new_m_u - fv(sg.mul(a, b))) % new_m_u)
        .collect();
    let out = Cocycle2::from_values_unchecked(k, new_m_u, values).reduced();
    debug_assert!(is_lazy(g, s, &out));
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::h2_classes;
    use crate::groups::{named_group, symmetric_group, Subgroup};

    fn klein_in_s4() -> (FiniteGroup, Embedded) {
        let g = symmetric_group(4);
        let v: Vec<usize> = g
            .elements()
            .filter(|&x| x == g.identity() || (g.element_order(x) == 2 && (g.elements().filter(|&y| g.conjugate(y, x) == x).count() == 8)))
            .collect();
        let s = Subgroup::new(&g, v).unwrap();
        assert_eq!(s.order(), 4);
        assert!(s.is_normal(&g));
        let e = s.embed(&g);
        (g, e)
    }

    #[test]
    fn central_subgroups_are_lazy() {
        let g = named_group("Z/2^3").unwrap();
        let s = Subgroup::whole(&g).embed(&g);
        for eta in h2_classes(&g, 8).unwrap().representatives() {
            assert!(is_lazy(&g, &s, eta));
        }
        let g = named_group("Q8").unwrap();
        let z = g.center().embed(&g);
        assert!(is_lazy(&g, &z, &Cocycle2::trivial(2, 2)));
    }

    #[test]
    fn trivial_class_is_lazy() {
        let (g, s) = klein_in_s4();
        let zero = Cocycle2::trivial(4, 2);
        assert!(is_lazy(&g, &s, &zero));
        assert_eq!(lazy_representative(&g, &s, &zero), Some(zero));
        // a coboundary is repaired to an invariant cocycle
        let d = Cocycle2::coboundary(&s.group, &[0, 1, 0, 3], 4);
        assert!(!is_lazy(&g, &s, &d));
        let rep = lazy_representative(&g, &s, &d).expect("coboundaries have the zero representative");
        assert!(is_lazy(&g, &s, &rep));
    }

    #[test]
    fn nondegenerate_klein_class_in_s4_has_no_invariant_representative() {
        let (g, s) = klein_in_s4();
        let h2 = h2_classes(&s.group, 2).unwrap();
        assert_eq!(h2.class_count(), 2);
        let eta = &h2.representatives()[1];
        assert_eq!(lazy_representative(&g, &s, eta), None);

        // oracle: every shift by a μ_8-valued cochain on V4 stays non-invariant
        let base = eta.with_modulus(8).unwrap();
        let mut invariant = 0;
        for code in 0..512u64 {
            let f = [0, code % 8, (code / 8) % 8, (code / 64) % 8];
            let shifted = base.add(&Cocycle2::coboundary(&s.group, &f, 8));
            if is_lazy(&g, &s, &shifted) {
                invariant += 1;
            }
        }
        assert_eq!(invariant, 0);
    }
}
