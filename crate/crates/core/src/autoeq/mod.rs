//! Braided autoequivalences of `Z(Vect_G)`, represented by the permutation
//! they induce on simple objects.
//!
//! Object indices are those of [`Center`](crate::center::Center). Every
//! total map built here is checked against the modular data: it must be a
//! bijection fixing the unit and satisfy `S_{π(i)π(j)} = S_ij`,
//! `T_{π(i)} = T_i`.

mod bimodule;
mod construct;
mod search;
mod standard;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::center::Double;
use crate::cohom::Cocycle2;
use crate::error::{Error, Result};

pub use bimodule::{bimodule_data, BimoduleData, Conditions, EtaClass};
pub use construct::{from_bv, from_ev_lazy, from_hopf_auto, partial_dualization};
pub use search::complete_extensions;
pub use standard::{standard_generators, Skipped, StandardGenerators};

/// Default bound for [`generate_group`].
pub const GENERATE_CAP: usize = 1_000_000;

/// How an autoequivalence was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Identity,
    /// Induced by a group automorphism, given by its images.
    V { auto: Vec<usize> },
    /// Automorphism plus a 2-cocycle on the group.
    Bv { auto: Vec<usize>, modulus: u64, cocycle: Vec<Vec<u64>> },
    /// Lazy cocycle on an abelian normal subgroup (local indices).
    Ev { subgroup: Vec<usize>, modulus: u64, cocycle: Vec<Vec<u64>> },
    /// Partial dualization of `G = N ⋊ Q` on the abelian factor `N`.
    RPrime { normal: Vec<usize>, complement: Vec<usize> },
    /// Read off a form-preserving matrix in the elementary abelian model.
    Matrix { p: u64, rows: Vec<Vec<u64>> },
    /// Product of the parts, the last one applied first.
    Composite { parts: Vec<Provenance> },
    Inverse { of: Box<Provenance> },
    /// A completion, found by search, of a partial map.
    Searched { from: Box<Provenance> },
}

impl Provenance {
    pub(crate) fn cocycle_rows(c: &Cocycle2) -> (u64, Vec<Vec<u64>>) {
        (c.modulus(), c.rows())
    }
}

/// First failure found by [`preserves_modular_data`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    WrongLength { expected: usize, found: usize },
    NotBijective { target: usize },
    UnitMoved { to: usize },
    Qdim { object: usize },
    T { object: usize },
    S { i: usize, j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { expected, found } => write!(f, "mapping has {found} entries, expected {expected}"),
            Violation::NotBijective { target } => write!(f, "object {target} is hit twice or out of range"),
            Violation::UnitMoved { to } => write!(f, "unit object is sent to {to}"),
            Violation::Qdim { object } => write!(f, "quantum dimension changes at object {object}"),
            Violation::T { object } => write!(f, "T changes at object {object}"),
            Violation::S { i, j } => write!(f, "S[{i}][{j}] is not preserved"),
        }
    }
}

/// Check a total object mapping against the modular data of `d`.
pub fn preserves_modular_data(mapping: &[usize], d: &Double) -> std::result::Result<(), Violation> {
    let n = d.len();
    if mapping.len() != n {
        return Err(Violation::WrongLength { expected: n, found: mapping.len() });
    }
    let mut seen = vec![false; n];
    for &t in mapping {
        if t >= n || std::mem::replace(&mut seen[t], true) {
            return Err(Violation::NotBijective { target: t });
        }
    }
    let unit = d.center.unit();
    if mapping[unit] != unit {
        return Err(Violation::UnitMoved { to: mapping[unit] });
    }
    let md = &d.md;
    if let Some(object) = (0..n).find(|&i| md.qdims()[mapping[i]] != md.qdims()[i]) {
        return Err(Violation::Qdim { object });
    }
    if let Some(object) = (0..n).find(|&i| md.t()[mapping[i]] != md.t()[i]) {
        return Err(Violation::T { object });
    }
    for i in 0..n {
        for j in i..n {
            if md.s_int(mapping[i], mapping[j]) != md.s_int(i, j) {
                return Err(Violation::S { i, j });
            }
        }
    }
    Ok(())
}

/// A total braided autoequivalence: `mapping[i]` is the image of object `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidedAutoeq {
    mapping: Vec<usize>,
    provenance: Provenance,
}

impl BraidedAutoeq {
    /// Validate against the modular data of `d`.
    pub fn new(d: &Double, mapping: Vec<usize>, provenance: Provenance) -> Result<Self> {
        preserves_modular_data(&mapping, d).map_err(|v| Error::NotBraided(v.to_string()))?;
        Ok(BraidedAutoeq { mapping, provenance })
    }

    /// Skip validation; used for products of already validated maps.
    fn trusted(mapping: Vec<usize>, provenance: Provenance) -> Self {
        BraidedAutoeq { mapping, provenance }
    }

    pub fn identity(d: &Double) -> Self {
        Self::trusted((0..d.len()).collect(), Provenance::Identity)
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn apply(&self, object: usize) -> usize {
        self.mapping[object]
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// Smallest `k ≥ 1` with `selfᵏ = id`.
    pub fn order(&self) -> usize {
        let mut current = self.mapping.clone();
        let mut k = 1;
        while current.iter().enumerate().any(|(i, &t)| i != t) {
            current = current.iter().map(|&t| self.mapping[t]).collect();
            k += 1;
        }
        k
    }

    pub fn preserves_modular_data(&self, d: &Double) -> std::result::Result<(), Violation> {
        preserves_modular_data(&self.mapping, d)
    }
}

/// `f ∘ g`: apply `g` first.
pub fn compose(f: &BraidedAutoeq, g: &BraidedAutoeq) -> Result<BraidedAutoeq> {
    if f.len() != g.len() {
        return Err(Error::DomainMismatch(f.len(), g.len()));
    }
    let mapping = g.mapping.iter().map(|&x| f.mapping[x]).collect();
    let provenance = Provenance::Composite { parts: vec![f.provenance.clone(), g.provenance.clone()] };
    Ok(BraidedAutoeq::trusted(mapping, provenance))
}

pub fn inverse(f: &BraidedAutoeq) -> BraidedAutoeq {
    let mut mapping = vec![0; f.len()];
    for (i, &t) in f.mapping.iter().enumerate() {
        mapping[t] = i;
    }
    BraidedAutoeq::trusted(mapping, Provenance::Inverse { of: Box::new(f.provenance.clone()) })
}

/// Equality of the object mappings, ignoring provenance.
pub fn equal(f: &BraidedAutoeq, g: &BraidedAutoeq) -> Result<bool> {
    if f.len() != g.len() {
        return Err(Error::DomainMismatch(f.len(), g.len()));
    }
    Ok(f.mapping == g.mapping)
}

/// An autoequivalence known only on part of the objects, typically the
/// vacuum sector `O_1^V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialBrEq {
    mapping: Vec<Option<usize>>,
    provenance: Provenance,
}

impl PartialBrEq {
    pub fn new(mapping: Vec<Option<usize>>, provenance: Provenance) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &t in mapping.iter().flatten() {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::NotBraided(format!("partial map is not injective at target {t}")));
            }
        }
        Ok(PartialBrEq { mapping, provenance })
    }

    /// Prescribe the given `(source, target)` pairs on `n` objects.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)], provenance: Provenance) -> Result<Self> {
        let mut mapping = vec![None; n];
        for &(s, t) in pairs {
            if s >= n {
                return Err(Error::DomainMismatch(s + 1, n));
            }
            mapping[s] = Some(t);
        }
        Self::new(mapping, provenance)
    }

    pub fn mapping(&self) -> &[Option<usize>] {
        &self.mapping
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.mapping.iter().enumerate().filter_map(|(i, t)| t.map(|_| i))
    }

    pub fn get(&self, object: usize) -> Option<usize> {
        self.mapping[object]
    }

    /// Whether a total map agrees with this one on its domain.
    pub fn is_extended_by(&self, f: &BraidedAutoeq) -> bool {
        self.mapping.len() == f.len() && self.domain().all(|i| self.mapping[i] == Some(f.apply(i)))
    }
}

/// Closure of a set of autoequivalences under composition.
#[derive(Clone, Debug)]
pub struct GeneratedGroup {
    /// Elements in breadth-first order, identity first.
    pub elements: Vec<BraidedAutoeq>,
    /// A shortest word for each element: generator indices, applied left
    /// to right.
    pub words: Vec<Vec<usize>>,
}

impl GeneratedGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Breadth-first closure of `generators` acting on `n` objects. Fails with
/// `CapExceeded` once more than `cap` elements are found.
pub fn generate_group(n: usize, generators: &[BraidedAutoeq], cap: usize) -> Result<GeneratedGroup> {
    if let Some(g) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::DomainMismatch(g.len(), n));
    }
    let id: Vec<usize> = (0..n).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id.clone(), 0)]);
    let mut maps = vec![id];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut head = 0;
    while head < maps.len() {
        for (k, gen) in generators.iter().enumerate() {
            let next: Vec<usize> = maps[head].iter().map(|&x| gen.mapping[x]).collect();
            if index.contains_key(&next) {
                continue;
            }
            if maps.len() == cap {
                return Err(Error::CapExceeded { order: cap + 1, cap });
            }
            let mut word = words[head].clone();
            word.push(k);
            index.insert(next.clone(), maps.len());
            maps.push(next);
            words.push(word);
        }
        head += 1;
    }
    let elements = maps
        .into_iter()
        .zip(&words)
        .map(|(m, w)| {
            let provenance = match w.len() {
                0 => Provenance::Identity,
                1 => generators[w[0]].provenance.clone(),
                _ => Provenance::Composite { parts: w.iter().rev().map(|&k| generators[k].provenance.clone()).collect() },
            };
            BraidedAutoeq::trusted(m, provenance)
        })
        .collect();
    Ok(GeneratedGroup { elements, words })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{named_group, DEFAULT_ORDER_CAP};

    fn double(name: &str) -> Double {
        Double::new(&named_group(name).unwrap(), DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn identity_preserves_everything() {
        let d = double("S3");
        let id = BraidedAutoeq::identity(&d);
        assert_eq!(id.preserves_modular_data(&d), Ok(()));
        assert_eq!(id.order(), 1);
        assert!(compose(&id, &inverse(&id)).unwrap().is_identity());
    }

    #[test]
    fn swapping_the_unit_is_rejected_with_witness() {
        let d = double("S3");
        let unit = d.center.unit();
        let other = (0..d.len()).find(|&i| i != unit).unwrap();
        let mut mapping: Vec<usize> = (0..d.len()).collect();
        mapping.swap(unit, other);
        assert_eq!(preserves_modular_data(&mapping, &d), Err(Violation::UnitMoved { to: other }));
        assert!(matches!(BraidedAutoeq::new(&d, mapping, Provenance::Identity), Err(Error::NotBraided(_))));
    }

    #[test]
    fn only_the_reflection_transposition_survives_on_s3() {
        let d = double("S3");
        let unit = d.center.unit();
        let q = d.md.qdims();
        // O_1^ref and O_(123)^1: dimension 2 in the vacuum and the 3-cycle sector
        let refl = d.center.vacuum_sector().find(|&i| q[i] == 2).unwrap();
        let flux = (0..d.len())
            .find(|&i| {
                let o = &d.center.objects()[i];
                d.group().element_order(o.class_rep) == 3 && o.char_index == 0
            })
            .unwrap();
        for a in 0..d.len() {
            for b in a + 1..d.len() {
                if a == unit || b == unit {
                    continue;
                }
                let mut mapping: Vec<usize> = (0..d.len()).collect();
                mapping.swap(a, b);
                let verdict = preserves_modular_data(&mapping, &d);
                if (a, b) == (refl.min(flux), refl.max(flux)) {
                    assert_eq!(verdict, Ok(()));
                } else if q[a] != q[b] {
                    assert!(matches!(verdict, Err(Violation::Qdim { .. })));
                } else {
                    assert!(matches!(verdict, Err(Violation::T { .. } | Violation::S { .. })), "{a} <-> {b}");
                }
            }
        }
    }

    #[test]
    fn compose_rejects_mismatched_domains() {
        let a = BraidedAutoeq::identity(&double("Z/2"));
        let b = BraidedAutoeq::identity(&double("S3"));
        assert_eq!(compose(&a, &b), Err(Error::DomainMismatch(4, 8)));
        assert_eq!(equal(&a, &b), Err(Error::DomainMismatch(4, 8)));
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let d = double("S3");
        let gg = generate_group(d.len(), &[], GENERATE_CAP).unwrap();
        assert_eq!(gg.order(), 1);
        assert!(gg.elements[0].is_identity());
    }

    #[test]
    fn generation_respects_cap() {
        // cyclic shift of 5 points has order 5
        let shift = BraidedAutoeq::trusted(vec![1, 2, 3, 4, 0], Provenance::Identity);
        assert_eq!(generate_group(5, std::slice::from_ref(&shift), 10).unwrap().order(), 5);
        assert!(matches!(generate_group(5, &[shift], 4), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn partial_maps_must_be_injective() {
        assert!(PartialBrEq::from_pairs(3, &[(0, 1), (2, 1)], Provenance::Identity).is_err());
        let p = PartialBrEq::from_pairs(3, &[(0, 0), (2, 1)], Provenance::Identity).unwrap();
        assert_eq!(p.domain().collect::<Vec<_>>(), vec![0, 2]);
    }
}
