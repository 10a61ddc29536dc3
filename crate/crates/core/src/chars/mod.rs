//! Exact character tables and Clifford theory over abelian normal subgroups.

mod dixon;

use serde::Serialize;

use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::groups::{conjugacy_classes, ConjugacyClasses, Embedded, FiniteGroup, Subgroup};

/// A function constant on conjugacy classes, indexed by class position in
/// the owning [`CharacterTable`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassFunction {
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Pointwise product.
    pub fn tensor(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction::new(self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect())
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction::new(self.values.iter().map(Cyclotomic::conj).collect())
    }
}

/// A character restricted to a subgroup, together with the subgroup's own
/// class structure.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub subgroup: Embedded,
    pub classes: ConjugacyClasses,
    pub function: ClassFunction,
}

/// One linear character of `S` occurring in the restriction of an
/// irreducible character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordComponent {
    /// Values on `S`, indexed by position in `S.elements()`.
    pub linear_char: Vec<Cyclotomic>,
    /// Multiplicity of the linear character, the dimension of `E_i`.
    pub multiplicity: usize,
    /// Stabilizer of the linear character under conjugation.
    pub inertia: Subgroup,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: FiniteGroup,
    classes: ConjugacyClasses,
    characters: Vec<ClassFunction>,
    identity_class: usize,
}

/// All irreducible characters of `g`, sorted by degree and then by value
/// tuple (see [`Cyclotomic`]'s structural order), so the trivial character
/// comes first.
pub fn character_table(g: &FiniteGroup, cap: usize) -> Result<CharacterTable> {
    g.check_order_cap(cap)?;
    Ok(CharacterTable::compute(g))
}

impl CharacterTable {
    pub(crate) fn compute(g: &FiniteGroup) -> Self {
        let classes = conjugacy_classes(g);
        let identity_class = classes.class_of[g.identity()];
        let mut characters: Vec<ClassFunction> =
            dixon::irreducible_characters(g, &classes).into_iter().map(ClassFunction::new).collect();
        characters.sort_by(|a, b| {
            let da = a.values[identity_class].to_integer();
            let db = b.values[identity_class].to_integer();
            da.cmp(&db).then_with(|| a.values.cmp(&b.values))
        });
        CharacterTable { group: g.clone(), classes, characters, identity_class }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn characters(&self) -> &[ClassFunction] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    pub fn degree(&self, chi: &ClassFunction) -> Cyclotomic {
        chi.values[self.identity_class].clone()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.characters
            .iter()
            .map(|c| {
                let d = c.values[self.identity_class].to_integer().expect("integral degree");
                usize::try_from(d).expect("positive degree")
            })
            .collect()
    }

    /// Value of a class function at a group element.
    pub fn at<'a>(&self, chi: &'a ClassFunction, x: usize) -> &'a Cyclotomic {
        &chi.values[self.classes.class_of[x]]
    }

    /// Class function from element values; the caller guarantees constancy
    /// on classes.
    pub fn from_element_values(&self, f: impl Fn(usize) -> Cyclotomic) -> ClassFunction {
        ClassFunction::new(self.classes.reps.iter().map(|&r| f(r)).collect())
    }

    /// `(1/|G|) Σ_g α(g) conj β(g)`.
    pub fn inner_product(&self, a: &ClassFunction, b: &ClassFunction) -> Cyclotomic {
        let sum: Cyclotomic = (0..self.classes.len())
            .map(|i| {
                let size = Rational::from_integer(self.classes.size(i).into());
                (&a.values[i] * &b.values[i].conj()).scale(&size)
            })
            .sum();
        sum.scale(&Rational::new(1.into(), self.group.order().into()))
    }

    /// Position of `chi` in the table, if it is irreducible.
    pub fn index_of(&self, chi: &ClassFunction) -> Option<usize> {
        self.characters.iter().position(|c| c == chi)
    }

    /// Multiplicities of the irreducibles in a class function.
    pub fn decompose(&self, f: &ClassFunction) -> Vec<Cyclotomic> {
        self.characters.iter().map(|c| self.inner_product(f, c)).collect()
    }

    pub fn restrict(&self, chi: &ClassFunction, h: &Subgroup) -> Result<Restriction> {
        if h.parent_order() != self.group.order() {
            return Err(Error::NotASubgroup);
        }
        let subgroup = h.embed(&self.group);
        let classes = conjugacy_classes(&subgroup.group);
        let function = ClassFunction::new(
            classes
                .reps
                .iter()
                .map(|&r| self.at(chi, subgroup.embedding[r]).clone())
                .collect(),
        );
        Ok(Restriction { subgroup, classes, function })
    }

    fn is_irreducible(&self, chi: &ClassFunction) -> bool {
        chi.values.len() == self.classes.len()
            && self.inner_product(chi, chi).is_one()
            && self.degree(chi).to_integer().is_some_and(|d| d > 0.into())
    }

    /// Linear characters of `s` occurring in `chi|_s`, with multiplicities and
    /// inertia subgroups. The components form a single conjugation orbit.
    pub fn clifford_decomposition(&self, chi: &ClassFunction, s: &Subgroup) -> Result<Vec<CliffordComponent>> {
        let g = &self.group;
        if !s.is_normal(g) || !s.is_abelian(g) {
            return Err(Error::NotAbelianNormal);
        }
        if !self.is_irreducible(chi) {
            return Err(Error::NotIrreducible);
        }
        let linear = linear_characters(g, s);
        let elements = s.elements();
        let order = Rational::new(1.into(), elements.len().into());
        let mut out = Vec::new();
        for lambda in linear {
            let m: Cyclotomic = elements
                .iter()
                .zip(&lambda)
                .map(|(&x, l)| self.at(chi, x) * &l.conj())
                .sum::<Cyclotomic>()
                .scale(&order);
            let m = m.to_integer().expect("multiplicity is an integer");
            if m > 0.into() {
                let inertia = inertia_subgroup(g, s, &lambda);
                let multiplicity = usize::try_from(m).expect("small multiplicity");
                out.push(CliffordComponent { linear_char: lambda, multiplicity, inertia });
            }
        }
        let first = &out[0];
        let orbit = conjugate_linear_characters(g, s, &first.linear_char);
        assert_eq!(orbit.len(), out.len(), "components form one orbit");
        assert!(out.iter().all(|c| orbit.contains(&c.linear_char) && c.multiplicity == first.multiplicity));
        Ok(out)
    }
}

/// Linear characters of an abelian subgroup, as values indexed by position
/// in `s.elements()`, in character-table order.
pub fn linear_characters(g: &FiniteGroup, s: &Subgroup) -> Vec<Vec<Cyclotomic>> {
    let e = s.embed(g);
    let table = CharacterTable::compute(&e.group);
    table
        .characters()
        .iter()
        .map(|c| (0..s.order()).map(|x| table.at(c, x).clone()).collect())
        .collect()
}

/// `(gλ)(x) = λ(g⁻¹ x g)` for a linear character of normal `s`.
fn conjugate_linear(g: &FiniteGroup, s: &Subgroup, lambda: &[Cyclotomic], by: usize) -> Vec<Cyclotomic> {
    let elems = s.elements();
    let gi = g.inv(by);
    elems
        .iter()
        .map(|&x| {
            let y = g.conjugate(gi, x);
            lambda[elems.binary_search(&y).expect("normal subgroup")].clone()
        })
        .collect()
}

fn conjugate_linear_characters(g: &FiniteGroup, s: &Subgroup, lambda: &[Cyclotomic]) -> Vec<Vec<Cyclotomic>> {
    let mut orbit: Vec<Vec<Cyclotomic>> = g.elements().map(|x| conjugate_linear(g, s, lambda, x)).collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

pub fn inertia_subgroup(g: &FiniteGroup, s: &Subgroup, lambda: &[Cyclotomic]) -> Subgroup {
    let elements: Vec<usize> = g.elements().filter(|&x| conjugate_linear(g, s, lambda, x) == lambda).collect();
    Subgroup::new(g, elements).expect("stabilizers are subgroups")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::root_of_unity;
    use crate::groups::{abelian_normal_subgroups, named_group, DEFAULT_ORDER_CAP};

    fn table(name: &str) -> CharacterTable {
        character_table(&named_group(name).unwrap(), DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn degrees_of_standard_groups() {
        assert_eq!(table("1").degrees(), vec![1]);
        assert_eq!(table("S3").degrees(), vec![1, 1, 2]);
        assert_eq!(table("S4").degrees(), vec![1, 1, 2, 3, 3]);
        assert_eq!(table("A4").degrees(), vec![1, 1, 1, 3]);
        assert_eq!(table("A5").degrees(), vec![1, 3, 3, 4, 5]);
        assert_eq!(table("D4").degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(table("Q8").degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(table("Z/5").degrees(), vec![1; 5]);
    }

    #[test]
    fn s3_table_values() {
        let t = table("S3");
        let v: Vec<Vec<i64>> = t
            .characters()
            .iter()
            .map(|c| c.values().iter().map(|x| i64::try_from(x.to_integer().unwrap()).unwrap()).collect())
            .collect();
        // classes: identity, transpositions, 3-cycles
        assert_eq!(v, vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]]);
    }

    #[test]
    fn a5_has_golden_ratio_values() {
        let t = table("A5");
        let sqrt5 = root_of_unity(5, 1) + root_of_unity(5, 4) - root_of_unity(5, 2) - root_of_unity(5, 3);
        let golden = (Cyclotomic::one() + sqrt5).scale(&Rational::new(1.into(), 2.into()));
        let chi3 = &t.characters()[1];
        assert!(chi3.values().contains(&golden) || chi3.values().contains(&(Cyclotomic::one() - golden)));
    }

    #[test]
    fn cyclic_group_characters() {
        let t = table("Z/3");
        // trivial, then ζ before ζ²
        let gen_class = t.classes().class_of[1];
        assert!(t.characters()[0].value(gen_class).is_one());
        assert_eq!(t.characters()[1].value(gen_class), &root_of_unity(3, 1));
        assert_eq!(t.characters()[2].value(gen_class), &root_of_unity(3, 2));
    }

    fn check_orthogonality(t: &CharacterTable) {
        let g = t.group();
        for (i, a) in t.characters().iter().enumerate() {
            for (j, b) in t.characters().iter().enumerate() {
                let ip = t.inner_product(a, b);
                assert_eq!(ip, Cyclotomic::from_integer(i64::from(i == j)));
            }
        }
        let cc = t.classes();
        for x in 0..cc.len() {
            for y in 0..cc.len() {
                let s: Cyclotomic = t.characters().iter().map(|c| c.value(x) * &c.value(y).conj()).sum();
                let expected = if x == y { (g.order() / cc.size(x)) as i64 } else { 0 };
                assert_eq!(s, Cyclotomic::from_integer(expected));
            }
        }
        let sum_sq: usize = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sum_sq, g.order());
        assert_eq!(t.len(), cc.len());
    }

    #[test]
    fn orthogonality_relations() {
        for name in ["1", "Z/2", "Z/6", "Z/2^2", "S3", "D4", "Q8", "A4", "S4", "Z/3:Z/4", "D5", "Z/7:Z/3@mul:2"] {
            check_orthogonality(&table(name));
        }
    }

    #[test]
    fn restriction_to_rotations() {
        let t = table("S3");
        let g = t.group();
        let rot = Subgroup::generated_by(g, &[3]);
        assert_eq!(rot.order(), 3);
        let r = t.restrict(&t.characters()[2], &rot).unwrap();
        let sub = CharacterTable::compute(&r.subgroup.group);
        let m = sub.decompose(&r.function);
        // ζ and ζ² characters once each, trivial absent
        assert_eq!(m, vec![0.into(), 1.into(), 1.into()].into_iter().map(Cyclotomic::from_integer).collect::<Vec<_>>());
        let triv = Subgroup::trivial(g);
        let r = t.restrict(&t.characters()[2], &triv).unwrap();
        assert_eq!(r.function.values(), &[Cyclotomic::from_integer(2)]);
    }

    #[test]
    fn clifford_for_s3_and_s4() {
        let t = table("S3");
        let g = t.group();
        let rot = Subgroup::generated_by(g, &[3]);
        let comps = t.clifford_decomposition(&t.characters()[2], &rot).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.multiplicity == 1 && c.inertia == rot));
        let comps = t.clifford_decomposition(&t.characters()[0], &rot).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].inertia.order(), 6);

        let t = table("S4");
        let g = t.group();
        let v4 = abelian_normal_subgroups(g).into_iter().find(|s| s.order() == 4).unwrap();
        for chi in &t.characters()[3..] {
            let comps = t.clifford_decomposition(chi, &v4).unwrap();
            assert_eq!(comps.len(), 3);
            assert!(comps.iter().all(|c| c.multiplicity == 1 && c.inertia.order() == 8));
            assert!(comps.iter().all(|c| !c.linear_char.iter().all(Cyclotomic::is_one)));
        }
        let non_irr = t.characters()[0].tensor(&ClassFunction::new(vec![Cyclotomic::from_integer(2); 5]));
        assert_eq!(t.clifford_decomposition(&non_irr, &v4), Err(Error::NotIrreducible));
        let not_normal = Subgroup::generated_by(g, &[1]);
        assert_eq!(t.clifford_decomposition(&t.characters()[0], &not_normal), Err(Error::NotAbelianNormal));
    }
}
