//! The explicit constructions: automorphisms, automorphisms twisted by a
//! cocycle, lazy cocycles on abelian normal subgroups and partial
//! dualizations.

use super::{BraidedAutoeq, PartialBrEq, Provenance};
use crate::center::Double;
use crate::chars::CharacterTable;
use crate::cohom::{antisymmetrize, lazy_representative, self_dual_pairing, Cocycle2, Pairing};
use crate::cyclo::{root_of_unity, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupMorphism, Subgroup};

/// `O_g^χ ↦ O_{v(g)}^{χ∘v⁻¹}`.
pub fn from_hopf_auto(d: &Double, v: &GroupMorphism) -> Result<BraidedAutoeq> {
    let mapping = transport(d, v, None)?;
    BraidedAutoeq::new(d, mapping, Provenance::V { auto: v.images().to_vec() })
}

/// `O_g^χ ↦ O_{v(g)}^{χ'}` with `χ'(x) = χ(v⁻¹x) · μ(v⁻¹x, g) / μ(g, v⁻¹x)`.
pub fn from_bv(d: &Double, v: &GroupMorphism, mu: &Cocycle2) -> Result<BraidedAutoeq> {
    if mu.order() != d.group().order() {
        return Err(Error::MalformedTable(format!("cocycle on {} elements, group has {}", mu.order(), d.group().order())));
    }
    let mapping = transport(d, v, Some(mu))?;
    let (modulus, cocycle) = Provenance::cocycle_rows(mu);
    BraidedAutoeq::new(d, mapping, Provenance::Bv { auto: v.images().to_vec(), modulus, cocycle })
}

fn transport(d: &Double, v: &GroupMorphism, mu: Option<&Cocycle2>) -> Result<Vec<usize>> {
    let g = d.group();
    if v.source_order() != g.order() || !v.is_automorphism_of(g) {
        return Err(Error::NotAnAutomorphism("not a bijective homomorphism of the group".into()));
    }
    let vinv = v.inverse().expect("automorphisms are invertible");
    let center = &d.center;
    let mut mapping = Vec::with_capacity(center.len());
    for obj in center.objects() {
        let a = obj.class_rep;
        let cent = center.centralizer(obj.class_index);
        let twist = |w: usize| mu.map_or(0, |mu| (mu.value(w, a) + mu.modulus() - mu.value(a, w)) % mu.modulus());
        if let Some(mu) = mu {
            let m = mu.modulus();
            let elems = cent.subgroup.elements();
            let additive = elems
                .iter()
                .all(|&x| elems.iter().all(|&y| twist(g.mul(x, y)) == (twist(x) + twist(y)) % m));
            if !additive {
                return Err(Error::TwistNotCharacter { element: a });
            }
        }
        let m = mu.map_or(1, Cocycle2::modulus) as u32;
        let target = center
            .locate(v.apply(a), |z| {
                let w = vinv.apply(z);
                cent.value(obj.char_index, w) * &root_of_unity(m, twist(w) as i64)
            })
            .ok_or_else(|| Error::Unidentified(format!("image of {}", center.label(center.object_index(obj.class_index, obj.char_index)))))?;
        mapping.push(target);
    }
    Ok(mapping)
}

/// Image of the vacuum sector under a Clifford-type correspondence.
///
/// For each irreducible `V` of `G`, take a linear character `λ` of the
/// abelian normal subgroup `n` occurring in `V`, its dual element `s` under
/// `pairing`, and the `λ`-isotypic part `W` of `V` as a representation of
/// the inertia group. The target is `O_s^{W · c}`, where `c` is a linear
/// character of the inertia group supplied by `correction`.
fn clifford_map(
    d: &Double,
    n: &Subgroup,
    pairing: &Pairing,
    correction: impl Fn(usize, &[Cyclotomic]) -> Cyclotomic,
) -> Result<Vec<Option<usize>>> {
    let g = d.group();
    let center = &d.center;
    let id_class = center.classes().class_of[g.identity()];
    let table: &CharacterTable = &center.centralizer(id_class).table;
    let n_elems = n.elements();
    let norm = Rational::new(1.into(), n_elems.len().into());
    let mut mapping = vec![None; center.len()];
    for (k, obj) in center.vacuum_sector().enumerate() {
        let chi = &table.characters()[k];
        let components = table.clifford_decomposition(chi, n)?;
        let lambda = &components[0].linear_char;
        let s = pairing.dual_element(lambda)?;
        let cent_s = crate::groups::centralizer(g, s);
        if cent_s != components[0].inertia {
            // only happens for pairings that are not conjugation invariant
            return Err(Error::Unidentified(format!("inertia group of the character dual to {} is not its centralizer", g.name(s))));
        }
        let target = center.locate(s, |x| {
            let w: Cyclotomic = n_elems
                .iter()
                .zip(lambda)
                .map(|(&r, l)| &l.conj() * table.at(chi, g.mul(r, x)))
                .sum::<Cyclotomic>()
                .scale(&norm);
            &w * &correction(x, lambda)
        });
        mapping[obj] = Some(target.ok_or_else(|| Error::Unidentified(format!("image of {}", center.label(obj))))?);
    }
    Ok(mapping)
}

fn cocycle_on(g: &FiniteGroup, s: &Subgroup, eta: &Cocycle2) -> Result<()> {
    if eta.order() != s.order() {
        return Err(Error::MalformedTable(format!("cocycle on {} elements, subgroup has {}", eta.order(), s.order())));
    }
    eta.check(&s.embed(g).group)
}

/// Vacuum-sector action of the autoequivalence attached to a lazy,
/// nondegenerate cocycle `eta` on an abelian normal subgroup `s` (given in
/// local indices of `s`): `O_1^V ↦ O_s^W`, with `W` the isotypic component
/// of `V` for the character `⟨·, s⟩`, `⟨a, b⟩ = η(a, b) − η(b, a)`.
///
/// A class is accepted if some representative is conjugation invariant;
/// that representative is used.
pub fn from_ev_lazy(d: &Double, s: &Subgroup, eta: &Cocycle2) -> Result<PartialBrEq> {
    let g = d.group();
    if !s.is_normal(g) || !s.is_abelian(g) {
        return Err(Error::NotAbelianNormal);
    }
    cocycle_on(g, s, eta)?;
    let emb = s.embed(g);
    let lazy = lazy_representative(g, &emb, eta).ok_or(Error::NotLazy)?;
    let pairing = antisymmetrize(&emb.group, &lazy, &Subgroup::whole(&emb.group))?.relabel(&emb.embedding);
    if !pairing.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let mapping = clifford_map(d, s, &pairing, |_, _| Cyclotomic::one())?;
    let (modulus, cocycle) = Provenance::cocycle_rows(eta);
    PartialBrEq::new(mapping, Provenance::Ev { subgroup: s.elements().to_vec(), modulus, cocycle })
}

/// Vacuum-sector action of the partial dualization of `G = N ⋊ Q` on the
/// abelian factor: `O_1^V ↦ O_s^E`, where `V = Ind(λ̃ ⊗ E)` by Clifford
/// theory, `s` is dual to `λ` under a `Q`-invariant nondegenerate pairing
/// and `λ̃(nq) = λ(n)`. Without an explicit pairing the first one found by
/// [`self_dual_pairing`] is used.
pub fn partial_dualization(d: &Double, n: &Subgroup, q: &Subgroup, pairing: Option<&Pairing>) -> Result<PartialBrEq> {
    let g = d.group();
    if !n.is_normal(g) || !n.is_abelian(g) {
        return Err(Error::NotAbelianNormal);
    }
    if n.order() * q.order() != g.order() || !n.intersection(q).is_trivial() || q.parent_order() != g.order() {
        return Err(Error::NoComplement);
    }
    let found;
    let pairing = match pairing {
        Some(p) => {
            let invariant = || {
                q.elements().iter().all(|&h| {
                    n.elements().iter().all(|&a| n.elements().iter().all(|&b| p.value(g.conjugate(h, a), g.conjugate(h, b)) == p.value(a, b)))
                })
            };
            if p.elements() != n.elements() || !p.is_nondegenerate() || !p.is_bimultiplicative(g) || !invariant() {
                return Err(Error::NotSelfDual);
            }
            p
        }
        None => {
            found = self_dual_pairing(g, n, q).ok_or(Error::NotSelfDual)?;
            &found
        }
    };
    let n_elems = n.elements();
    // x = r·h with r ∈ N, h ∈ Q; the extension λ̃ evaluates λ on r
    let n_part = |x: usize| -> usize {
        q.elements()
            .iter()
            .map(|&h| g.mul(x, g.inv(h)))
            .find(|r| n.contains(*r))
            .expect("G = NQ")
    };
    let mapping = clifford_map(d, n, pairing, |x, lambda| {
        let r = n_part(x);
        lambda[n_elems.binary_search(&r).expect("r in N")].conj()
    })?;
    PartialBrEq::new(mapping, Provenance::RPrime { normal: n_elems.to_vec(), complement: q.elements().to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autoeq::{compose, complete_extensions, generate_group, GENERATE_CAP};
    use crate::cohom::h2_classes;
    use crate::groups::{
        automorphisms, inner_automorphisms, named_group, semidirect_decompositions, symmetric_group, DEFAULT_ORDER_CAP,
    };
    use proptest::prelude::*;

    fn double(g: &FiniteGroup) -> Double {
        Double::new(g, DEFAULT_ORDER_CAP).unwrap()
    }

    /// The object `O_x^χ` whose centralizer character has the given
    /// values on the listed parent elements.
    fn object_with(d: &Double, x: usize, values: &[(usize, Cyclotomic)]) -> usize {
        let (c, _) = d.center.conjugator(x);
        assert_eq!(d.center.classes().reps[c], x, "use the class representative");
        let cent = d.center.centralizer(c);
        let hits: Vec<usize> = (0..cent.table.len())
            .filter(|&k| values.iter().all(|(h, v)| cent.value(k, *h) == v))
            .collect();
        assert_eq!(hits.len(), 1, "values must pin down one character");
        d.center.object_index(c, hits[0])
    }

    fn vacuum(d: &Double, k: usize) -> usize {
        d.center.vacuum_sector().nth(k).unwrap()
    }

    #[test]
    fn identity_automorphism_is_identity() {
        let g = named_group("S3").unwrap();
        let d = double(&g);
        assert!(from_hopf_auto(&d, &GroupMorphism::identity(6)).unwrap().is_identity());
    }

    #[test]
    fn inner_automorphisms_act_trivially() {
        for g in [named_group("S3").unwrap(), symmetric_group(4)] {
            let d = double(&g);
            for v in inner_automorphisms(&g) {
                assert!(from_hopf_auto(&d, &v).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn doubling_on_z5() {
        let g = named_group("Z/5").unwrap();
        let d = double(&g);
        let v = GroupMorphism::new(5, 5, (0..5).map(|x| 2 * x % 5).collect());
        let f = from_hopf_auto(&d, &v).unwrap();
        // label objects by (g, k) with χ_k(x) = ζ_5^{kx}
        let label = |i: usize| {
            let o = &d.center.objects()[i];
            let k = (0..5).find(|&k| d.center.centralizer(o.class_index).value(o.char_index, 1) == &root_of_unity(5, k)).unwrap();
            (o.class_rep, k as usize)
        };
        for i in 0..d.len() {
            let (x, k) = label(i);
            // χ_k ∘ v⁻¹ = χ_{3k} since 2⁻¹ = 3
            assert_eq!(label(f.apply(i)), (2 * x % 5, 3 * k % 5));
        }
    }

    #[test]
    fn automorphisms_compose_like_the_group() {
        let g = symmetric_group(4);
        let d = double(&g);
        let autos = automorphisms(&g, DEFAULT_ORDER_CAP).unwrap();
        for (a, b) in [(3, 7), (10, 20), (5, 5)] {
            let (v, w) = (&autos[a], &autos[b]);
            let lhs = compose(&from_hopf_auto(&d, v).unwrap(), &from_hopf_auto(&d, w).unwrap()).unwrap();
            let rhs = from_hopf_auto(&d, &v.compose_after(w)).unwrap();
            assert_eq!(lhs.mapping(), rhs.mapping());
        }
    }

    #[test]
    fn rejects_non_automorphisms() {
        let g = named_group("Z/4").unwrap();
        let d = double(&g);
        let v = GroupMorphism::new(4, 4, vec![0, 2, 0, 2]);
        assert!(matches!(from_hopf_auto(&d, &v), Err(Error::NotAnAutomorphism(_))));
    }

    #[test]
    fn trivial_cocycle_reduces_to_automorphism() {
        for name in ["Z/4", "Z/2^2", "S3", "D4", "Q8"] {
            let g = named_group(name).unwrap();
            let d = double(&g);
            for v in automorphisms(&g, DEFAULT_ORDER_CAP).unwrap() {
                let a = from_hopf_auto(&d, &v).unwrap();
                let b = from_bv(&d, &v, &Cocycle2::trivial(g.order(), 2)).unwrap();
                assert_eq!(a.mapping(), b.mapping());
            }
        }
    }

    #[test]
    fn every_automorphism_and_cocycle_preserves_modular_data() {
        for name in ["Z/2", "Z/4", "Z/2^2", "S3", "D4", "Q8"] {
            let g = named_group(name).unwrap();
            let d = double(&g);
            let h2 = h2_classes(&g, g.exponent() as u64).unwrap();
            for v in automorphisms(&g, DEFAULT_ORDER_CAP).unwrap() {
                for mu in h2.representatives() {
                    // construction validates; failure would be an error here
                    from_bv(&d, &v, mu).unwrap();
                }
            }
        }
    }

    fn s4_transposition(g: &FiniteGroup) -> usize {
        let d_classes = crate::groups::conjugacy_classes(g);
        *d_classes.reps.iter().find(|&&r| g.element_order(r) == 2 && d_classes.size(d_classes.class_of[r]) == 6).unwrap()
    }

    #[test]
    fn s4_cocycle_swaps_two_transposition_objects() {
        let g = symmetric_group(4);
        let d = double(&g);
        let h2 = h2_classes(&g, 2).unwrap();
        let mu = &h2.representatives()[1];
        let f = from_bv(&d, &GroupMorphism::identity(24), mu).unwrap();
        for i in d.center.vacuum_sector() {
            assert_eq!(f.apply(i), i);
        }
        // the class representative t and the other transposition t' commuting with it
        let t = s4_transposition(&g);
        let other = other_transposition(&g, t);
        let minus = Cyclotomic::from_integer(-1);
        let plus = Cyclotomic::one();
        let mp = object_with(&d, t, &[(t, minus.clone()), (other, plus)]);
        let mm = object_with(&d, t, &[(t, minus.clone()), (other, minus)]);
        assert_eq!(f.apply(mp), mm);
        assert_eq!(f.apply(mm), mp);
        assert_eq!(f.order(), 2);
    }

    /// The transposition disjoint from `t`.
    fn other_transposition(g: &FiniteGroup, t: usize) -> usize {
        let classes = crate::groups::conjugacy_classes(g);
        g.elements()
            .find(|&x| x != t && classes.class_of[x] == classes.class_of[t] && g.commutes(x, t))
            .unwrap()
    }

    #[test]
    fn cocycle_classes_multiply() {
        for name in ["Z/2^2", "S4"] {
            let g = named_group(name).unwrap();
            let d = double(&g);
            let h2 = h2_classes(&g, 2).unwrap();
            let id = GroupMorphism::identity(g.order());
            let reps = h2.representatives();
            for a in reps {
                for b in reps {
                    let lhs = compose(&from_bv(&d, &id, a).unwrap(), &from_bv(&d, &id, b).unwrap()).unwrap();
                    let rhs = from_bv(&d, &id, &a.add(b)).unwrap();
                    assert_eq!(lhs.mapping(), rhs.mapping(), "{name}");
                }
            }
        }
    }

    #[test]
    fn class_independence_exhaustive_on_klein_four() {
        let g = named_group("Z/2^2").unwrap();
        let d = double(&g);
        let mu = h2_classes(&g, 2).unwrap().representatives()[1].with_modulus(4).unwrap();
        let id = GroupMorphism::identity(4);
        let base = from_bv(&d, &id, &mu).unwrap();
        for code in 0..64u64 {
            let f = [0, code % 4, (code / 4) % 4, (code / 16) % 4];
            let shifted = mu.add(&Cocycle2::coboundary(&g, &f, 4));
            assert_eq!(from_bv(&d, &id, &shifted).unwrap().mapping(), base.mapping());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn class_independence_under_coboundaries(
            name in prop::sample::select(vec!["D4", "Q8", "Z/2^3", "Z/4:Z/2@id", "S3", "Z/2^4"]),
            class in 0usize..8,
            f in prop::collection::vec(0u64..8, 16),
        ) {
            let g = named_group(name).unwrap();
            let d = double(&g);
            let m = 2 * g.exponent() as u64;
            let h2 = h2_classes(&g, g.exponent() as u64).unwrap();
            let reps = h2.representatives();
            let mu = reps[class % reps.len()].with_modulus(m).unwrap();
            let mut cochain: Vec<u64> = f.iter().take(g.order()).map(|x| x % m).collect();
            cochain[g.identity()] = 0;
            let shifted = mu.add(&Cocycle2::coboundary(&g, &cochain, m));
            let autos = automorphisms(&g, DEFAULT_ORDER_CAP).unwrap();
            let v = &autos[f[0] as usize % autos.len()];
            let (a, b) = (from_bv(&d, v, &shifted).unwrap(), from_bv(&d, v, &mu).unwrap());
            prop_assert_eq!(a.mapping(), b.mapping());
        }
    }

    #[test]
    fn ev_on_trivial_subgroup_is_identity_on_vacuum() {
        let g = named_group("S3").unwrap();
        let d = double(&g);
        let p = from_ev_lazy(&d, &Subgroup::trivial(&g), &Cocycle2::trivial(1, 1)).unwrap();
        for i in d.center.vacuum_sector() {
            assert_eq!(p.get(i), Some(i));
        }
    }

    #[test]
    fn ev_on_klein_four_sends_characters_to_dual_fluxes() {
        let g = named_group("Z/2^2").unwrap();
        let d = double(&g);
        let eta = h2_classes(&g, 2).unwrap().representatives()[1].clone();
        let p = from_ev_lazy(&d, &Subgroup::whole(&g), &eta).unwrap();
        let pairing = antisymmetrize(&g, &eta, &Subgroup::whole(&g)).unwrap();
        for (k, i) in d.center.vacuum_sector().enumerate() {
            let target = &d.center.objects()[p.get(i).unwrap()];
            let chi = d.center.centralizer(0).table.characters()[k].clone();
            let values: Vec<Cyclotomic> = (0..4).map(|x| d.center.centralizer(0).table.at(&chi, x).clone()).collect();
            // the flux s satisfies χ = ⟨·, s⟩, the charge is χ itself
            assert_eq!(pairing.character_of(target.class_rep), values);
            let tc = d.center.centralizer(target.class_index);
            assert!((0..4).all(|x| tc.value(target.char_index, x) == &values[x]));
        }
        assert!(!complete_extensions(&d, &p).unwrap().is_empty());
    }

    #[test]
    fn ev_refuses_non_lazy_klein_class_in_s4() {
        let g = symmetric_group(4);
        let d = double(&g);
        let s = klein(&g);
        let eta = h2_classes(&s.embed(&g).group, 2).unwrap().representatives()[1].clone();
        assert_eq!(from_ev_lazy(&d, &s, &eta), Err(Error::NotLazy));
    }

    #[test]
    fn ev_rejects_degenerate_and_non_normal() {
        let g = named_group("Z/2^2").unwrap();
        let d = double(&g);
        assert_eq!(from_ev_lazy(&d, &Subgroup::whole(&g), &Cocycle2::trivial(4, 2)), Err(Error::Degenerate));
        let s3 = named_group("S3").unwrap();
        let d3 = double(&s3);
        let t = Subgroup::generated_by(&s3, &[s3.elements().find(|&x| s3.element_order(x) == 2).unwrap()]);
        assert_eq!(from_ev_lazy(&d3, &t, &Cocycle2::trivial(2, 2)), Err(Error::NotAbelianNormal));
    }

    fn klein(g: &FiniteGroup) -> Subgroup {
        crate::groups::abelian_normal_subgroups(g).into_iter().find(|s| s.order() == 4).unwrap()
    }

    fn s3_split() -> (FiniteGroup, Subgroup, Subgroup) {
        let g = named_group("S3").unwrap();
        let (n, q) = semidirect_decompositions(&g).into_iter().find(|(n, _)| n.order() == 3).unwrap();
        (g, n, q)
    }

    #[test]
    fn s3_reflection_on_vacuum() {
        let (g, n, q) = s3_split();
        let d = double(&g);
        let p = partial_dualization(&d, &n, &q, None).unwrap();
        let (triv, sgn, refl) = (vacuum(&d, 0), vacuum(&d, 1), vacuum(&d, 2));
        assert_eq!(d.md.qdims()[refl], 2);
        assert_eq!(p.get(triv), Some(triv));
        assert_eq!(p.get(sgn), Some(sgn));
        let img = &d.center.objects()[p.get(refl).unwrap()];
        assert_eq!(g.element_order(img.class_rep), 3);
        // trivial character of the centralizer
        let tc = d.center.centralizer(img.class_index);
        assert!(tc.subgroup.elements().iter().all(|&x| tc.value(img.char_index, x).is_one()));
    }

    #[test]
    fn s3_reflection_completions() {
        let (g, n, q) = s3_split();
        let d = double(&g);
        let p = partial_dualization(&d, &n, &q, None).unwrap();
        let all = complete_extensions(&d, &p).unwrap();
        assert!(!all.is_empty() && all.len() <= 2);
        for f in &all {
            assert_eq!(f.order(), 2);
            assert!(compose(f, f).unwrap().is_identity());
            // transposition objects are fixed
            for (i, o) in d.center.objects().iter().enumerate() {
                if g.element_order(o.class_rep) == 2 {
                    assert_eq!(f.apply(i), i);
                }
            }
        }
        // both pairings give completions of the same shape
        for pairing in crate::cohom::all_self_dual_pairings(&g, &n, &q) {
            let p = partial_dualization(&d, &n, &q, Some(&pairing)).unwrap();
            assert!(!complete_extensions(&d, &p).unwrap().is_empty());
        }
        let gg = generate_group(d.len(), &all, GENERATE_CAP).unwrap();
        assert_eq!(gg.order(), 2);
    }

    #[test]
    fn full_dualization_of_klein_four_swaps_flux_and_charge() {
        let g = named_group("Z/2^2").unwrap();
        let d = double(&g);
        let p = partial_dualization(&d, &Subgroup::whole(&g), &Subgroup::trivial(&g), None).unwrap();
        for i in d.center.vacuum_sector() {
            let img = &d.center.objects()[p.get(i).unwrap()];
            // trivial charge on the target flux
            assert!(d.center.centralizer(img.class_index).table.characters()[img.char_index].values().iter().all(Cyclotomic::is_one));
        }
        let all = complete_extensions(&d, &p).unwrap();
        assert!(!all.is_empty());
    }

    #[test]
    fn trivial_normal_subgroup_gives_identity() {
        let g = named_group("S3").unwrap();
        let d = double(&g);
        let p = partial_dualization(&d, &Subgroup::trivial(&g), &Subgroup::whole(&g), None).unwrap();
        for i in d.center.vacuum_sector() {
            assert_eq!(p.get(i), Some(i));
        }
    }

    #[test]
    fn partial_dualization_checks_inputs() {
        let (g, n, q) = s3_split();
        let d = double(&g);
        assert_eq!(partial_dualization(&d, &n, &Subgroup::trivial(&g), None), Err(Error::NoComplement));
        let g7 = named_group("Z/7:Z/3@mul:2").unwrap();
        let d7 = double(&g7);
        let (n7, q7) = semidirect_decompositions(&g7).into_iter().find(|(n, _)| n.order() == 7).unwrap();
        assert_eq!(partial_dualization(&d7, &n7, &q7, None), Err(Error::NotSelfDual));
        assert_eq!(partial_dualization(&d, &q, &n, None), Err(Error::NotAbelianNormal));
    }

    #[test]
    fn z3_generates_orthogonal_group() {
        let g = named_group("Z/3").unwrap();
        let d = double(&g);
        let mut gens: Vec<BraidedAutoeq> =
            automorphisms(&g, DEFAULT_ORDER_CAP).unwrap().iter().map(|v| from_hopf_auto(&d, v).unwrap()).collect();
        let p = partial_dualization(&d, &Subgroup::whole(&g), &Subgroup::trivial(&g), None).unwrap();
        gens.extend(complete_extensions(&d, &p).unwrap());
        assert_eq!(generate_group(d.len(), &gens, GENERATE_CAP).unwrap().order(), 4);
    }
}
