//! Simple objects and modular data of the Drinfeld center `Z(Vect_G)`.
//!
//! Simples are pairs `O_g^χ`: a conjugacy class with representative `g`
//! and an irreducible character `χ` of `Cent(g)`.
//!
//! Normalization: `S = |G| · S_unitary`, concretely
//!
//! ```text
//! S[(a,χ),(b,ψ)] = |K_a| |K_b| / |G| · Σ_{x : [a, x b x⁻¹] = 1} conj χ(x b x⁻¹) · conj ψ(x⁻¹ a x)
//! ```
//!
//! so the unit row is the quantum dimensions `|K_a| χ(1)`, entries are
//! algebraic integers and `S · conj(S)ᵀ = |G|² · I`.

use rayon::prelude::*;
use serde::Serialize;

use crate::chars::{CharacterTable, ClassFunction};
use crate::cyclo::{CycloInt, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::groups::{centralizer, conjugacy_classes, ConjugacyClasses, Embedded, FiniteGroup, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SimpleObject {
    pub class_index: usize,
    pub char_index: usize,
    /// Minimal-index representative of the class.
    pub class_rep: usize,
    /// `|class| · χ(1)`.
    pub qdim: u64,
}

/// A centralizer with its character table, characters indexed as in the
/// table.
#[derive(Clone, Debug)]
pub struct Centralizer {
    pub subgroup: Subgroup,
    pub embedded: Embedded,
    pub table: CharacterTable,
}

impl Centralizer {
    /// `χ(h)` for a parent element `h` of the centralizer.
    pub fn value(&self, chi: usize, h: usize) -> &Cyclotomic {
        let local = self.embedded.local(h).expect("element of the centralizer");
        self.table.at(&self.table.characters()[chi], local)
    }

    /// Index of the irreducible character with the given values on parent
    /// elements.
    pub fn identify(&self, f: impl Fn(usize) -> Cyclotomic) -> Option<usize> {
        let emb = &self.embedded.embedding;
        let chi: ClassFunction = self.table.from_element_values(|x| f(emb[x]));
        self.table.index_of(&chi)
    }
}

#[derive(Clone, Debug)]
pub struct Center {
    group: FiniteGroup,
    classes: ConjugacyClasses,
    centralizers: Vec<Centralizer>,
    objects: Vec<SimpleObject>,
    offsets: Vec<usize>,
}

impl Center {
    pub fn new(g: &FiniteGroup, cap: usize) -> Result<Self> {
        g.check_order_cap(cap)?;
        let classes = conjugacy_classes(g);
        let centralizers: Vec<Centralizer> = classes
            .reps
            .par_iter()
            .map(|&r| {
                let subgroup = centralizer(g, r);
                let embedded = subgroup.embed(g);
                let table = CharacterTable::compute(&embedded.group);
                Centralizer { subgroup, embedded, table }
            })
            .collect();
        let mut objects = Vec::new();
        let mut offsets = Vec::new();
        for (c, cent) in centralizers.iter().enumerate() {
            offsets.push(objects.len());
            let size = classes.size(c) as u64;
            for (k, d) in cent.table.degrees().into_iter().enumerate() {
                objects.push(SimpleObject { class_index: c, char_index: k, class_rep: classes.reps[c], qdim: size * d as u64 });
            }
        }
        Ok(Center { group: g.clone(), classes, centralizers, objects, offsets })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn objects(&self) -> &[SimpleObject] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn centralizer(&self, class: usize) -> &Centralizer {
        &self.centralizers[class]
    }

    pub fn object_index(&self, class: usize, chi: usize) -> usize {
        debug_assert!(chi < self.centralizers[class].table.len());
        self.offsets[class] + chi
    }

    /// `O_1^triv`.
    pub fn unit(&self) -> usize {
        self.object_index(self.classes.class_of[self.group.identity()], 0)
    }

    /// Indices of the objects `O_1^V`, in character order of `G`.
    pub fn vacuum_sector(&self) -> std::ops::Range<usize> {
        let c = self.classes.class_of[self.group.identity()];
        self.offsets[c]..self.offsets[c] + self.centralizers[c].table.len()
    }

    /// Class of `x` and the first `y` (in element order) with
    /// `y x y⁻¹` equal to the class representative.
    pub fn conjugator(&self, x: usize) -> (usize, usize) {
        let c = self.classes.class_of[x];
        let rep = self.classes.reps[c];
        let y = self.group.elements().find(|&y| self.group.conjugate(y, x) == rep).expect("x lies in its class");
        (c, y)
    }

    /// The object `O_x^f` for any `x` in a class, where `f` is a character
    /// of `Cent(x)` given by parent-element values: transported to the
    /// representative along [`Center::conjugator`].
    pub fn locate(&self, x: usize, f: impl Fn(usize) -> Cyclotomic) -> Option<usize> {
        let (c, y) = self.conjugator(x);
        let yi = self.group.inv(y);
        let chi = self.centralizers[c].identify(|z| f(self.group.conjugate(yi, z)))?;
        Some(self.object_index(c, chi))
    }

    /// Short label `O[rep]^k` using element names.
    pub fn label(&self, i: usize) -> String {
        let o = &self.objects[i];
        format!("O[{}]^{}", self.group.name(o.class_rep), o.char_index)
    }
}

/// The center together with its modular data, the context every
/// autoequivalence is checked against.
#[derive(Clone, Debug)]
pub struct Double {
    pub center: Center,
    pub md: ModularData,
}

impl Double {
    pub fn new(g: &FiniteGroup, cap: usize) -> Result<Self> {
        let center = Center::new(g, cap)?;
        let md = modular_data(&center);
        Ok(Double { center, md })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.center.group()
    }

    pub fn len(&self) -> usize {
        self.center.len()
    }

    pub fn is_empty(&self) -> bool {
        self.center.is_empty()
    }
}

pub fn simple_objects(g: &FiniteGroup, cap: usize) -> Result<Vec<SimpleObject>> {
    Ok(Center::new(g, cap)?.objects)
}

#[derive(Clone, Debug)]
pub struct ModularData {
    order: usize,
    qdims: Vec<u64>,
    s: Vec<Vec<Cyclotomic>>,
    t: Vec<Cyclotomic>,
    s_int: Vec<Vec<CycloInt>>,
}

impl ModularData {
    pub fn s(&self) -> &[Vec<Cyclotomic>] {
        &self.s
    }

    pub fn t(&self) -> &[Cyclotomic] {
        &self.t
    }

    pub fn qdims(&self) -> &[u64] {
        &self.qdims
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub(crate) fn s_int(&self, i: usize, j: usize) -> &CycloInt {
        &self.s_int[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..i).all(|j| self.s_int[i][j] == self.s_int[j][i]))
    }

    /// `S · conj(S)ᵀ = |G|² · I`.
    pub fn is_unitary(&self) -> bool {
        let n = self.len();
        let g2 = (self.order * self.order) as i128;
        let conj: Vec<Vec<CycloInt>> = self.s_int.iter().map(|r| r.iter().map(CycloInt::conj).collect()).collect();
        (0..n).into_par_iter().all(|i| {
            (0..n).all(|j| {
                let mut acc = CycloInt::zero(self.s_int[0][0].conductor());
                for k in 0..n {
                    acc.add_assign(&self.s_int[i][k].mul(&conj[j][k]));
                }
                acc.to_integer() == Some(if i == j { g2 } else { 0 })
            })
        })
    }

    /// `S²/|G|²` as a permutation (charge conjugation), if it is one.
    pub fn charge_conjugation(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let g2 = (self.order * self.order) as i128;
        (0..n)
            .map(|i| {
                let row: Vec<Option<i128>> = (0..n)
                    .map(|j| {
                        let mut acc = CycloInt::zero(self.s_int[0][0].conductor());
                        for k in 0..n {
                            acc.add_assign(&self.s_int[i][k].mul(&self.s_int[k][j]));
                        }
                        acc.to_integer()
                    })
                    .collect();
                let hits: Vec<usize> = (0..n).filter(|&j| row[j] == Some(g2)).collect();
                let zeros = row.iter().filter(|x| **x == Some(0)).count();
                (hits.len() == 1 && zeros == n - 1).then(|| hits[0])
            })
            .collect()
    }
}

pub fn modular_data(center: &Center) -> ModularData {
    let g = &center.group;
    let order = g.order();
    let cond = g.exponent() as u32;
    let cc = &center.classes;
    let k = cc.len();

    // conj of every centralizer character value, per centralizer class
    let conj_values: Vec<Vec<Vec<CycloInt>>> = center
        .centralizers
        .iter()
        .map(|cent| {
            cent.table
                .characters()
                .iter()
                .map(|chi| {
                    chi.values().iter().map(|v| CycloInt::from_cyclotomic(&v.conj(), cond).expect("integral")).collect()
                })
                .collect()
        })
        .collect();

    let blocks: Vec<((usize, usize), Vec<Vec<CycloInt>>)> = (0..k)
        .flat_map(|a| (a..k).map(move |b| (a, b)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(ca, cb)| {
            let (a, b) = (cc.reps[ca], cc.reps[cb]);
            let (cent_a, cent_b) = (&center.centralizers[ca], &center.centralizers[cb]);
            let ka = cent_a.table.classes().len();
            let kb = cent_b.table.classes().len();
            let mut counts = vec![vec![0i128; kb]; ka];
            for x in g.elements() {
                let h = g.conjugate(x, b);
                if !g.commutes(a, h) {
                    continue;
                }
                let gp = g.conjugate(g.inv(x), a);
                let la = cent_a.embedded.local(h).expect("h commutes with a");
                let lb = cent_b.embedded.local(gp).expect("g' commutes with b");
                counts[cent_a.table.classes().class_of[la]][cent_b.table.classes().class_of[lb]] += 1;
            }
            let weight = (cc.size(ca) * cc.size(cb)) as i128;
            let block = conj_values[ca]
                .iter()
                .map(|chi| {
                    conj_values[cb]
                        .iter()
                        .map(|psi| {
                            let mut acc = CycloInt::zero(cond);
                            for (i, row) in counts.iter().enumerate() {
                                for (j, &n) in row.iter().enumerate() {
                                    if n != 0 {
                                        acc.add_assign(&chi[i].mul(&psi[j]).scale(n));
                                    }
                                }
                            }
                            acc.scale(weight).div_exact(order as i128).expect("S entries are algebraic integers")
                        })
                        .collect()
                })
                .collect();
            ((ca, cb), block)
        })
        .collect();

    let n = center.len();
    let mut s_int = vec![vec![CycloInt::zero(cond); n]; n];
    for ((ca, cb), block) in blocks {
        for (x, row) in block.into_iter().enumerate() {
            for (y, v) in row.into_iter().enumerate() {
                let (i, j) = (center.object_index(ca, x), center.object_index(cb, y));
                s_int[j][i] = v.clone();
                s_int[i][j] = v;
            }
        }
    }
    let s: Vec<Vec<Cyclotomic>> = s_int.iter().map(|r| r.iter().map(CycloInt::to_cyclotomic).collect()).collect();
    let t: Vec<Cyclotomic> = center
        .objects
        .iter()
        .map(|o| {
            let cent = &center.centralizers[o.class_index];
            let chi = &cent.table.characters()[o.char_index];
            let local = cent.embedded.local(o.class_rep).expect("g is central in Cent(g)");
            let d = cent.table.degree(chi);
            cent.table.at(chi, local).checked_div(&d).expect("nonzero degree")
        })
        .collect();
    let qdims = center.objects.iter().map(|o| o.qdim).collect();
    let md = ModularData { order, qdims, s, t, s_int };
    assert!(md.is_symmetric(), "S is symmetric");
    assert!(
        (0..n).all(|j| md.s_int[center.unit()][j].to_integer() == Some(md.qdims[j] as i128)),
        "unit row of S is the quantum dimensions"
    );
    md
}

/// `N_ij^k = Σ_r S_ir S_jr conj(S_kr) / (|G|² d_r)` as a non-negative
/// integer.
pub fn verlinde_fusion(md: &ModularData, i: usize, j: usize, k: usize) -> Result<u64> {
    let cond = md.s_int[0][0].conductor();
    let g = md.order as i128;
    let mut acc = CycloInt::zero(cond);
    for r in 0..md.len() {
        let w = g / md.qdims[r] as i128;
        acc.add_assign(&md.s_int[i][r].mul(&md.s_int[j][r]).mul(&md.s_int[k][r].conj()).scale(w));
    }
    acc.div_exact(g * g * g)
        .and_then(|x| x.to_integer())
        .and_then(|x| u64::try_from(x).ok())
        .ok_or(Error::NonIntegralFusion { i, j, k })
}

/// Every `N_ij^k`, indexed `[i][j][k]`.
pub fn fusion_table(md: &ModularData) -> Result<Vec<Vec<Vec<u64>>>> {
    let n = md.len();
    let cond = md.s_int[0][0].conductor();
    let g = md.order as i128;
    let weighted: Vec<Vec<CycloInt>> = (0..n)
        .map(|k| (0..n).map(|r| md.s_int[k][r].conj().scale(g / md.qdims[r] as i128)).collect())
        .collect();
    (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let prods: Vec<CycloInt> = (0..n).map(|r| md.s_int[i][r].mul(&md.s_int[j][r])).collect();
                    (0..n)
                        .map(|k| {
                            let mut acc = CycloInt::zero(cond);
                            for r in 0..n {
                                acc.add_assign(&prods[r].mul(&weighted[k][r]));
                            }
                            acc.div_exact(g * g * g)
                                .and_then(|x| x.to_integer())
                                .and_then(|x| u64::try_from(x).ok())
                                .ok_or(Error::NonIntegralFusion { i, j, k })
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// `S / |G|`, the unitary normalization, for display.
pub fn unitary_s(md: &ModularData) -> Vec<Vec<Cyclotomic>> {
    let inv = Rational::new(1.into(), md.order.into());
    md.s.iter().map(|r| r.iter().map(|x| x.scale(&inv)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{named_group, DEFAULT_ORDER_CAP};

    fn center(name: &str) -> Center {
        Center::new(&named_group(name).unwrap(), DEFAULT_ORDER_CAP).unwrap()
    }

    /// Orbits of commuting pairs under simultaneous conjugation, counted
    /// directly.
    fn commuting_pair_orbits(g: &FiniteGroup) -> usize {
        let mut seen = std::collections::HashSet::new();
        let mut orbits = 0;
        for a in g.elements() {
            for b in g.elements().filter(|&b| g.commutes(a, b)) {
                if seen.insert((a, b)) {
                    orbits += 1;
                    for x in g.elements() {
                        seen.insert((g.conjugate(x, a), g.conjugate(x, b)));
                    }
                }
            }
        }
        orbits
    }

    #[test]
    fn object_counts() {
        assert_eq!(center("1").len(), 1);
        assert_eq!(center("Z/2").len(), 4);
        assert_eq!(center("S3").len(), 8);
        for name in ["Z/4", "Z/2^2", "D4", "Q8", "S4", "A4"] {
            let c = center(name);
            let g = c.group();
            assert_eq!(c.len(), commuting_pair_orbits(g), "{name}");
            let total: u64 = c.objects().iter().map(|o| o.qdim * o.qdim).sum();
            assert_eq!(total, (g.order() * g.order()) as u64, "{name}");
        }
    }

    #[test]
    fn toric_code_data() {
        let c = center("Z/2");
        let md = modular_data(&c);
        let t: Vec<Cyclotomic> = [1, 1, 1, -1].iter().map(|&x| Cyclotomic::from_integer(x)).collect();
        assert_eq!(md.t(), &t[..]);
        let half = Cyclotomic::from_rational(Rational::new(1.into(), 2.into()));
        assert!(unitary_s(&md)[c.unit()].iter().all(|x| *x == half));
        // toric code S/|G| = (1/2)[[1,1,1,1],[1,1,-1,-1],[1,-1,1,-1],[1,-1,-1,1]]
        let signs = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(md.s()[i][j], Cyclotomic::from_integer(signs[i][j]));
            }
        }
    }

    #[test]
    fn trivial_group() {
        let md = modular_data(&center("1"));
        assert_eq!(md.s(), &[vec![Cyclotomic::one()]]);
        assert_eq!(md.t(), &[Cyclotomic::one()]);
    }

    #[test]
    fn unitarity_and_charge_conjugation() {
        for name in ["Z/3", "S3", "D4", "Q8", "A4"] {
            let md = modular_data(&center(name));
            assert!(md.is_unitary(), "{name}");
            let c = md.charge_conjugation().expect("S² is a permutation");
            assert!(c.iter().enumerate().all(|(i, &j)| c[j] == i), "{name}");
            for t in md.t() {
                assert!(t.as_root_of_unity().is_some(), "{name}");
            }
        }
    }

    #[test]
    fn z2_fusion_is_klein_four() {
        let md = modular_data(&center("Z/2"));
        let n = fusion_table(&md).unwrap();
        // objects (g, χ) in order (0,+), (0,-), (1,+), (1,-): fusion adds labels
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    assert_eq!(n[i][j][k], u64::from(k == i ^ j));
                }
            }
        }
    }

    #[test]
    fn verlinde_is_nonnegative_and_unit_acts_trivially() {
        for name in ["Z/2^2", "S3", "D4", "Q8"] {
            let c = center(name);
            let md = modular_data(&c);
            let n = fusion_table(&md).unwrap();
            let u = c.unit();
            for j in 0..md.len() {
                for k in 0..md.len() {
                    assert_eq!(n[u][j][k], u64::from(j == k));
                    // d_i d_j = Σ_k N_ij^k d_k
                    let lhs = md.qdims()[j] * md.qdims()[k];
                    let rhs: u64 = (0..md.len()).map(|l| n[j][k][l] * md.qdims()[l]).sum();
                    assert_eq!(lhs, rhs, "{name}");
                }
            }
            assert_eq!(verlinde_fusion(&md, 1, 1, u).unwrap(), n[1][1][u]);
        }
    }
}
