//! The pair `(U, η)` with `U ≤ G × G^op` describing the invertible
//! bimodule category behind a constructed autoequivalence.

use std::collections::BTreeSet;

use serde::Serialize;

use super::Provenance;
use crate::cohom::{antisymmetrize, Cocycle2};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupMorphism, Subgroup};

/// What is known about the cocycle on `U`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EtaClass {
    Trivial,
    /// Pulled back from a cocycle on `G` along `U → G`, `(a, b) ↦ b⁻¹`.
    PullbackMu { modulus: u64, cocycle: Vec<Vec<u64>> },
    /// Pulled back from a cocycle on the abelian normal subgroup.
    PullbackEta { modulus: u64, cocycle: Vec<Vec<u64>> },
    NotComputed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conditions {
    /// `U(G × 1) = U(1 × G^op) = G × G^op`.
    pub transitive: bool,
    /// `U₁` and `U₂` are abelian.
    pub abelian: bool,
    /// The pairing `U₁ × U₂ → ℂˣ` from `η` is nondegenerate; `None` when
    /// `η` is not computed.
    pub nondegenerate: Option<bool>,
}

impl Conditions {
    pub fn all_hold(&self) -> bool {
        self.transitive && self.abelian && self.nondegenerate != Some(false)
    }
}

/// `U` as sorted pairs `(a, b)` with `a ∈ G`, `b ∈ G^op`; the product is
/// `(a, b)(c, d) = (ac, db)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BimoduleData {
    pub group_order: usize,
    pub u: Vec<(usize, usize)>,
    /// `U ∩ (G × 1)`, first coordinates.
    pub u1: Vec<usize>,
    /// `U ∩ (1 × G^op)`, second coordinates.
    pub u2: Vec<usize>,
    pub eta: EtaClass,
    pub conditions: Conditions,
}

fn is_subgroup(g: &FiniteGroup, u: &BTreeSet<(usize, usize)>) -> bool {
    u.iter().all(|&(a, b)| u.iter().all(|&(c, d)| u.contains(&(g.mul(a, c), g.mul(d, b)))))
}

/// `U = {(a, b) : a·b ∈ N}`, the pairs whose images in `G/N` are mutually
/// inverse.
fn quotient_graph(g: &FiniteGroup, n: &Subgroup) -> BTreeSet<(usize, usize)> {
    g.elements().flat_map(|a| g.elements().map(move |b| (a, b))).filter(|&(a, b)| n.contains(g.mul(a, b))).collect()
}

fn cocycle_from_rows(order: usize, modulus: u64, rows: &[Vec<u64>], g: &FiniteGroup) -> Result<Cocycle2> {
    if rows.len() != order {
        return Err(Error::MalformedTable(format!("cocycle has {} rows, expected {order}", rows.len())));
    }
    Cocycle2::new(g, modulus, rows)
}

fn automorphism(g: &FiniteGroup, images: &[usize]) -> Result<GroupMorphism> {
    let n = g.order();
    if images.len() != n || images.iter().any(|&x| x >= n) {
        return Err(Error::NotAnAutomorphism("image list has the wrong length".into()));
    }
    let v = GroupMorphism::new(n, n, images.to_vec());
    if !v.is_automorphism_of(g) {
        return Err(Error::NotAnAutomorphism("not a bijective homomorphism".into()));
    }
    Ok(v)
}

/// `U`, `U₁`, `U₂` and `η` for a construction, with the three conditions
/// for an invertible bimodule category checked. Fails with
/// `ConditionFailed` naming the first condition that does not hold.
pub fn bimodule_data(g: &FiniteGroup, construction: &Provenance) -> Result<BimoduleData> {
    let n = g.order();
    let (u, eta, pairing_check): (BTreeSet<(usize, usize)>, EtaClass, Option<Box<dyn Fn(&[usize], &[usize]) -> bool>>) =
        match construction {
            Provenance::Identity => (g.elements().map(|a| (a, g.inv(a))).collect(), EtaClass::Trivial, None),
            Provenance::V { auto } => {
                let v = automorphism(g, auto)?;
                (g.elements().map(|a| (v.apply(a), g.inv(a))).collect(), EtaClass::Trivial, None)
            }
            Provenance::Bv { auto, modulus, cocycle } => {
                let v = automorphism(g, auto)?;
                cocycle_from_rows(n, *modulus, cocycle, g)?;
                let eta = EtaClass::PullbackMu { modulus: *modulus, cocycle: cocycle.clone() };
                (g.elements().map(|a| (v.apply(a), g.inv(a))).collect(), eta, None)
            }
            Provenance::Ev { subgroup, modulus, cocycle } => {
                let s = Subgroup::new(g, subgroup.iter().copied()).map_err(|_| Error::NotAbelianNormal)?;
                if !s.is_normal(g) || !s.is_abelian(g) {
                    return Err(Error::NotAbelianNormal);
                }
                let emb = s.embed(g);
                let eta = cocycle_from_rows(s.order(), *modulus, cocycle, &emb.group)?;
                let pairing = antisymmetrize(&emb.group, &eta, &Subgroup::whole(&emb.group))?.relabel(&emb.embedding);
                let check = move |u1: &[usize], u2: &[usize]| {
                    // U₁ = U₂ = S; the pairing is the antisymmetrization of η
                    u1 == pairing.elements() && u2 == pairing.elements() && pairing.is_nondegenerate()
                };
                let eta = EtaClass::PullbackEta { modulus: *modulus, cocycle: cocycle.clone() };
                (quotient_graph(g, &s), eta, Some(Box::new(check)))
            }
            Provenance::RPrime { normal, .. } => {
                let nsub = Subgroup::new(g, normal.iter().copied()).map_err(|_| Error::NoComplement)?;
                if !nsub.is_normal(g) {
                    return Err(Error::NoComplement);
                }
                (quotient_graph(g, &nsub), EtaClass::NotComputed, None)
            }
            other => return Err(Error::NotAConstruction(format!("{other:?}"))),
        };
    debug_assert!(is_subgroup(g, &u));
    let e = g.identity();
    let u1: Vec<usize> = u.iter().filter(|p| p.1 == e).map(|p| p.0).collect();
    let u2: Vec<usize> = u.iter().filter(|p| p.0 == e).map(|p| p.1).collect();
    let transitive = u.len() == n * u1.len() && u.len() == n * u2.len();
    let abelian_set = |xs: &[usize]| xs.iter().all(|&a| xs.iter().all(|&b| g.commutes(a, b)));
    let abelian = abelian_set(&u1) && abelian_set(&u2);
    let nondegenerate = match (&eta, pairing_check) {
        (_, Some(check)) => Some(check(&u1, &u2)),
        (EtaClass::NotComputed, None) => None,
        // U₁ = U₂ = 1 for graphs of automorphisms
        (_, None) => Some(u1.len() == 1 && u2.len() == 1),
    };
    let conditions = Conditions { transitive, abelian, nondegenerate };
    let data = BimoduleData { group_order: n, u: u.into_iter().collect(), u1, u2, eta, conditions };
    let c = &data.conditions;
    if !c.transitive {
        return Err(Error::ConditionFailed("U does not act transitively on both sides".into()));
    }
    if !c.abelian {
        return Err(Error::ConditionFailed("U1 or U2 is not abelian".into()));
    }
    if c.nondegenerate == Some(false) {
        return Err(Error::ConditionFailed("the pairing U1 x U2 is degenerate".into()));
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::h2_classes;
    use crate::groups::{abelian_normal_subgroups, named_group, semidirect_decompositions};

    #[test]
    fn automorphism_graph_on_s3() {
        let g = named_group("S3").unwrap();
        let data = bimodule_data(&g, &Provenance::V { auto: (0..6).collect() }).unwrap();
        assert_eq!(data.u.len(), 6);
        assert!(data.u.iter().all(|&(a, b)| g.mul(a, b) == g.identity()));
        assert_eq!((data.u1.as_slice(), data.u2.as_slice()), (&[0][..], &[0][..]));
        assert_eq!(data.eta, EtaClass::Trivial);
        assert!(data.conditions.all_hold());
    }

    #[test]
    fn lazy_cocycle_on_klein_four() {
        let g = named_group("Z/2^2").unwrap();
        let eta = h2_classes(&g, 2).unwrap().representatives()[1].clone();
        let p = Provenance::Ev { subgroup: (0..4).collect(), modulus: 2, cocycle: eta.rows() };
        let data = bimodule_data(&g, &p).unwrap();
        assert_eq!(data.u1, vec![0, 1, 2, 3]);
        assert_eq!(data.u2, vec![0, 1, 2, 3]);
        assert_eq!(data.conditions.nondegenerate, Some(true));
        // the trivial cocycle on the same subgroup fails the third condition
        let p = Provenance::Ev { subgroup: (0..4).collect(), modulus: 2, cocycle: vec![vec![0; 4]; 4] };
        assert!(matches!(bimodule_data(&g, &p), Err(Error::ConditionFailed(_))));
    }

    #[test]
    fn reflection_on_s3() {
        let g = named_group("S3").unwrap();
        let (n, q) = semidirect_decompositions(&g).into_iter().find(|(n, _)| n.order() == 3).unwrap();
        let p = Provenance::RPrime { normal: n.elements().to_vec(), complement: q.elements().to_vec() };
        let data = bimodule_data(&g, &p).unwrap();
        // |U| = |N|² · |Q|
        assert_eq!(data.u.len(), 18);
        assert_eq!(data.u1, n.elements());
        assert_eq!(data.u2, n.elements());
        assert_eq!(data.eta, EtaClass::NotComputed);
        assert_eq!(data.conditions.nondegenerate, None);
    }

    #[test]
    fn non_abelian_kernel_fails() {
        let g = named_group("S3").unwrap();
        let whole = Provenance::RPrime { normal: (0..6).collect(), complement: vec![0] };
        assert!(matches!(bimodule_data(&g, &whole), Err(Error::ConditionFailed(_))));
        assert!(abelian_normal_subgroups(&g).iter().all(|s| s.order() < 6));
    }

    #[test]
    fn composites_are_not_constructions() {
        let g = named_group("Z/2").unwrap();
        let p = Provenance::Composite { parts: vec![] };
        assert!(matches!(bimodule_data(&g, &p), Err(Error::NotAConstruction(_))));
    }
}
