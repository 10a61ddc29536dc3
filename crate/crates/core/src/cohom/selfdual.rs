//! Conjugation-invariant nondegenerate pairings `N × N → Z/e` on an
//! abelian normal subgroup, i.e. isomorphisms of `Q`-modules `N ≅ N̂`.

use std::collections::HashMap;

use super::Pairing;
use crate::groups::{homomorphisms, FiniteGroup, GroupMorphism, Subgroup};

fn cyclic(e: usize) -> FiniteGroup {
    let table = (0..e).flat_map(|a| (0..e).map(move |b| (a + b) % e)).collect();
    FiniteGroup::from_flat_unchecked(e, table)
}

/// Every pairing `⟨,⟩` on `n` with values in `Z/exp(N)` that is
/// bimultiplicative, nondegenerate and satisfies
/// `⟨q a q⁻¹, q b q⁻¹⟩ = ⟨a, b⟩` for `q ∈ q_sub`. Empty when `n` is not
/// abelian or not normalized by `q_sub`.
pub fn all_self_dual_pairings(g: &FiniteGroup, n: &Subgroup, q_sub: &Subgroup) -> Vec<Pairing> {
    if !n.is_abelian(g) {
        return Vec::new();
    }
    let emb = n.embed(g);
    let ng = &emb.group;
    let e = ng.exponent();
    let chars = homomorphisms(ng, &cyclic(e));
    let index: HashMap<&[usize], usize> = chars.iter().enumerate().map(|(i, c)| (c.images(), i)).collect();
    let k = chars.len();
    let mut table = Vec::with_capacity(k * k);
    for a in &chars {
        for b in &chars {
            let sum: Vec<usize> = a.images().iter().zip(b.images()).map(|(x, y)| (x + y) % e).collect();
            table.push(index[sum.as_slice()]);
        }
    }
    let dual = FiniteGroup::from_flat_unchecked(k, table);

    let q_embedded = q_sub.embed(g);
    let conj: Option<Vec<Vec<usize>>> = q_embedded
        .group
        .small_generating_set()
        .iter()
        .map(|&lq| {
            let qq = q_embedded.embedding[lq];
            emb.embedding.iter().map(|&x| emb.local(g.conjugate(qq, x))).collect()
        })
        .collect();
    let Some(conj) = conj else {
        return Vec::new();
    };

    let form = |phi: &GroupMorphism, a: usize, b: usize| chars[phi.apply(a)].images()[b];
    let order = ng.order();
    homomorphisms(ng, &dual)
        .into_iter()
        .filter(GroupMorphism::is_injective)
        .filter(|phi| {
            conj.iter().all(|c| (0..order).all(|a| (0..order).all(|b| form(phi, c[a], c[b]) == form(phi, a, b))))
        })
        .map(|phi| {
            Pairing::from_fn(e as u64, emb.embedding.clone(), |a, b| {
                let (la, lb) = (emb.local(a).expect("in N"), emb.local(b).expect("in N"));
                form(&phi, la, lb) as u64
            })
        })
        .collect()
}

/// The first pairing of [`all_self_dual_pairings`], if any.
pub fn self_dual_pairing(g: &FiniteGroup, n: &Subgroup, q_sub: &Subgroup) -> Option<Pairing> {
    all_self_dual_pairings(g, n, q_sub).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{named_group, semidirect_decompositions};

    fn split(name: &str, n_order: usize) -> (FiniteGroup, Subgroup, Subgroup) {
        let g = named_group(name).unwrap();
        let (n, q) = semidirect_decompositions(&g)
            .into_iter()
            .find(|(n, _)| n.order() == n_order && n.is_abelian(&g))
            .unwrap();
        (g, n, q)
    }

    /// Brute force over all forms `⟨a, b⟩ = k·a·b mod c` on a cyclic `N`
    /// generated by `x`.
    fn cyclic_oracle(g: &FiniteGroup, n: &Subgroup, q: &Subgroup) -> usize {
        let c = n.order();
        let x = n.elements().iter().copied().find(|&x| g.element_order(x) == c).unwrap();
        let log = |y: usize| (0..c).find(|&i| g.pow(x, i) == y).unwrap();
        (0..c)
            .filter(|&k| num_integer::Integer::gcd(&k, &c) == 1)
            .filter(|&k| {
                q.elements().iter().all(|&qq| {
                    n.elements().iter().all(|&a| {
                        n.elements().iter().all(|&b| {
                            let lhs = k * log(g.conjugate(qq, a)) * log(g.conjugate(qq, b)) % c;
                            lhs == k * log(a) * log(b) % c
                        })
                    })
                })
            })
            .count()
    }

    #[test]
    fn inversion_on_z3() {
        let (g, n, q) = split("S3", 3);
        let all = all_self_dual_pairings(&g, &n, &q);
        assert_eq!(all.len(), cyclic_oracle(&g, &n, &q));
        assert_eq!(all.len(), 2);
        for p in &all {
            assert!(p.is_nondegenerate() && p.is_bimultiplicative(&g));
        }
    }

    #[test]
    fn trivial_action_on_z2_is_forced() {
        let g = named_group("Z/2").unwrap();
        let all = all_self_dual_pairings(&g, &Subgroup::whole(&g), &Subgroup::trivial(&g));
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].value(1, 1), 1);
    }

    #[test]
    fn z4_actions_match_brute_force() {
        for name in ["Z/4:Z/2@inv", "Z/4:Z/2@id"] {
            let g = named_group(name).unwrap();
            let (n, q) = semidirect_decompositions(&g)
                .into_iter()
                .find(|(n, _)| n.order() == 4 && n.elements().iter().any(|&x| g.element_order(x) == 4))
                .unwrap();
            assert_eq!(all_self_dual_pairings(&g, &n, &q).len(), cyclic_oracle(&g, &n, &q), "{name}");
        }
    }

    #[test]
    fn no_pairing_for_order_three_action_on_z7() {
        let (g, n, q) = split("Z/7:Z/3@mul:2", 7);
        assert_eq!(cyclic_oracle(&g, &n, &q), 0);
        assert!(self_dual_pairing(&g, &n, &q).is_none());
    }

    #[test]
    fn klein_four_with_trivial_complement() {
        let g = named_group("Z/2^2").unwrap();
        let all = all_self_dual_pairings(&g, &Subgroup::whole(&g), &Subgroup::trivial(&g));
        // nondegenerate 2x2 matrices over F_2
        assert_eq!(all.len(), 6);
    }
}
