//! Normalized 2-cocycles with values in `μ_m`, written additively as
//! exponents in `Z/m`, and the pairings they induce on abelian subgroups.

mod h2;
mod lazy;
mod selfdual;

pub use h2::{h2_classes, H2};
pub use lazy::{is_lazy, lazy_representative};
pub use selfdual::{all_self_dual_pairings, self_dual_pairing};

use num_integer::Integer;
use serde::Serialize;

use crate::cyclo::{root_of_unity, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::groups::{Embedded, FiniteGroup, GroupMorphism, Subgroup};

/// `η(a, b) ∈ Z/m` standing for `ζ_m^{η(a,b)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cocycle2 {
    modulus: u64,
    order: usize,
    values: Vec<u64>,
}

impl Cocycle2 {
    /// Validate a value table: entries reduced mod `m`, normalized, and the
    /// cocycle identity `η(a,b) + η(ab,c) = η(b,c) + η(a,bc)`.
    pub fn new(g: &FiniteGroup, modulus: u64, rows: &[Vec<u64>]) -> Result<Self> {
        let n = g.order();
        if modulus == 0 || rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedTable("cocycle table must be |G| x |G|".into()));
        }
        let values: Vec<u64> = rows.iter().flatten().map(|&x| x % modulus).collect();
        let c = Cocycle2 { modulus, order: n, values };
        let e = g.identity();
        if g.elements().any(|x| c.value(e, x) != 0 || c.value(x, e) != 0) {
            return Err(Error::MalformedTable("cocycle is not normalized".into()));
        }
        c.check(g)?;
        Ok(c)
    }

    pub(crate) fn from_values_unchecked(order: usize, modulus: u64, values: Vec<u64>) -> Self {
        debug_assert_eq!(values.len(), order * order);
        Cocycle2 { modulus, order, values }
    }

    pub fn trivial(order: usize, modulus: u64) -> Self {
        Cocycle2 { modulus, order, values: vec![0; order * order] }
    }

    /// `δf(a,b) = f(a) + f(b) - f(ab)` for a normalized cochain `f`.
    pub fn coboundary(g: &FiniteGroup, f: &[u64], modulus: u64) -> Self {
        let n = g.order();
        let mut values = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                values.push((f[a] + f[b] + modulus - f[g.mul(a, b)] % modulus) % modulus);
            }
        }
        Cocycle2 { modulus, order: n, values }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn value(&self, a: usize, b: usize) -> u64 {
        self.values[a * self.order + b]
    }

    /// `ζ_m^{η(a,b)}`.
    pub fn root_value(&self, a: usize, b: usize) -> Cyclotomic {
        root_of_unity(self.modulus as u32, self.value(a, b) as i64)
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.values.chunks(self.order).map(<[u64]>::to_vec).collect()
    }

    /// First triple violating the cocycle identity.
    pub fn check(&self, g: &FiniteGroup) -> Result<()> {
        let m = self.modulus;
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                for c in g.elements() {
                    let lhs = (self.value(a, b) + self.value(ab, c)) % m;
                    let rhs = (self.value(b, c) + self.value(a, g.mul(b, c))) % m;
                    if lhs != rhs {
                        return Err(Error::NotACocycle { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_cocycle(&self, g: &FiniteGroup) -> bool {
        self.check(g).is_ok()
    }

    pub fn add(&self, other: &Cocycle2) -> Cocycle2 {
        let m = self.modulus.lcm(&other.modulus);
        let (s, t) = (m / self.modulus, m / other.modulus);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| (a * s + b * t) % m).collect();
        Cocycle2 { modulus: m, order: self.order, values }
    }

    pub fn negate(&self) -> Cocycle2 {
        let m = self.modulus;
        Cocycle2 { values: self.values.iter().map(|x| (m - x) % m).collect(), ..self.clone() }
    }

    /// The same `μ`-valued function with exponents in `Z/m`, `m` a multiple
    /// of the current modulus.
    pub fn with_modulus(&self, m: u64) -> Option<Cocycle2> {
        if !m.is_multiple_of(self.modulus) {
            return None;
        }
        let s = m / self.modulus;
        Some(Cocycle2 { modulus: m, order: self.order, values: self.values.iter().map(|x| x * s).collect() })
    }

    /// Smallest modulus representing the same function.
    pub fn reduced(&self) -> Cocycle2 {
        let g = self.values.iter().fold(self.modulus, |acc, &x| acc.gcd(&x));
        Cocycle2 {
            modulus: self.modulus / g,
            order: self.order,
            values: self.values.iter().map(|x| x / g).collect(),
        }
    }

    /// Restriction to a subgroup, in the subgroup's local indices.
    pub fn restrict(&self, sub: &Embedded) -> Cocycle2 {
        let e = &sub.embedding;
        let values = e.iter().flat_map(|&a| e.iter().map(move |&b| (a, b))).map(|(a, b)| self.value(a, b)).collect();
        Cocycle2 { modulus: self.modulus, order: e.len(), values }
    }

    /// `(φ*η)(a,b) = η(φ(a), φ(b))`.
    pub fn pullback(&self, phi: &GroupMorphism) -> Cocycle2 {
        let n = phi.source_order();
        let values = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.value(phi.apply(a), phi.apply(b)))
            .collect();
        Cocycle2 { modulus: self.modulus, order: n, values }
    }
}

/// A `Z/m`-valued pairing on the elements of a subgroup (indices of the
/// group the pairing was computed in).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pairing {
    modulus: u64,
    elements: Vec<usize>,
    values: Vec<u64>,
}

impl Pairing {
    pub(crate) fn from_fn(modulus: u64, elements: Vec<usize>, f: impl Fn(usize, usize) -> u64) -> Self {
        let values = elements
            .iter()
            .flat_map(|&a| elements.iter().map(move |&b| (a, b)))
            .map(|(a, b)| f(a, b) % modulus)
            .collect();
        Pairing { modulus, elements, values }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    fn pos(&self, a: usize) -> usize {
        self.elements.binary_search(&a).expect("element of the paired subgroup")
    }

    /// `⟨a, b⟩` for elements `a, b` of the subgroup.
    pub fn value(&self, a: usize, b: usize) -> u64 {
        self.values[self.pos(a) * self.elements.len() + self.pos(b)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0)
    }

    pub fn is_bimultiplicative(&self, g: &FiniteGroup) -> bool {
        let m = self.modulus;
        self.elements.iter().all(|&a| {
            self.elements.iter().all(|&b| {
                self.elements.iter().all(|&c| {
                    self.value(g.mul(a, b), c) == (self.value(a, c) + self.value(b, c)) % m
                        && self.value(a, g.mul(b, c)) == (self.value(a, b) + self.value(a, c)) % m
                })
            })
        })
    }

    /// `a ↦ ⟨a, ·⟩` is injective.
    pub fn is_nondegenerate(&self) -> bool {
        let k = self.elements.len();
        let rows: std::collections::BTreeSet<&[u64]> = self.values.chunks(k).collect();
        rows.len() == k
    }

    /// The linear character `r ↦ ζ_m^{⟨r, s⟩}`, indexed like `elements()`.
    pub fn character_of(&self, s: usize) -> Vec<Cyclotomic> {
        self.elements
            .iter()
            .map(|&r| root_of_unity(self.modulus as u32, self.value(r, s) as i64))
            .collect()
    }

    /// The unique `s` with `χ(r) = ζ_m^{⟨r, s⟩}` for all `r`.
    pub fn dual_element(&self, chi: &[Cyclotomic]) -> Result<usize> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        self.elements
            .iter()
            .copied()
            .find(|&s| self.character_of(s) == chi)
            .ok_or(Error::NoSuchElement)
    }

    /// Rename elements through `map` (e.g. local to parent indices).
    pub fn relabel(&self, map: &[usize]) -> Pairing {
        let old = self.elements.clone();
        let mut elements: Vec<usize> = old.iter().map(|&x| map[x]).collect();
        elements.sort_unstable();
        let pairing = Pairing { modulus: self.modulus, elements: elements.clone(), values: vec![0; self.values.len()] };
        let k = old.len();
        let mut values = vec![0; k * k];
        for &a in &old {
            for &b in &old {
                values[pairing.pos(map[a]) * k + pairing.pos(map[b])] = self.value(a, b);
            }
        }
        Pairing { values, ..pairing }
    }
}

/// `⟨a, b⟩ = η(a, b) − η(b, a)` on an abelian subgroup.
pub fn antisymmetrize(g: &FiniteGroup, eta: &Cocycle2, s: &Subgroup) -> Result<Pairing> {
    if !s.is_abelian(g) {
        return Err(Error::NotAbelian);
    }
    let m = eta.modulus();
    let p = Pairing::from_fn(m, s.elements().to_vec(), |a, b| (eta.value(a, b) + m - eta.value(b, a)) % m);
    assert!(p.is_bimultiplicative(g), "antisymmetrized cocycle must be bimultiplicative");
    Ok(p)
}

/// The dual cocycle `σ(a, b) = |S|⁻² Σ_{t,t'} η(t,t') ⟨t,a⟩ ⟨t',b⟩` on an
/// abelian group `S`, with `⟨,⟩` a nondegenerate pairing identifying `Ŝ`
/// with `S`. Rows and columns follow element order.
pub fn sigma_from_eta(s: &FiniteGroup, eta: &Cocycle2, pairing: &Pairing) -> Result<Vec<Vec<Cyclotomic>>> {
    if !pairing.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let k = s.order();
    let norm = Rational::new(1.into(), (k * k).into());
    let pm = pairing.modulus() as u32;
    let em = eta.modulus() as u32;
    let table = s
        .elements()
        .map(|a| {
            s.elements()
                .map(|b| {
                    let terms: Cyclotomic = s
                        .elements()
                        .flat_map(|t| s.elements().map(move |t2| (t, t2)))
                        .map(|(t, t2)| {
                            let p = (pairing.value(t, a) + pairing.value(t2, b)) as i64;
                            &root_of_unity(em, eta.value(t, t2) as i64) * &root_of_unity(pm, p)
                        })
                        .sum();
                    terms.scale(&norm)
                })
                .collect()
        })
        .collect();
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::named_group;

    fn standard_pairing(g: &FiniteGroup) -> Pairing {
        // Z/2^k: ⟨a, b⟩ = Σ a_i b_i mod 2 on little-endian digits
        Pairing::from_fn(2, g.elements().collect(), |a, b| (a & b).count_ones() as u64)
    }

    #[test]
    fn cocycle_validation() {
        let g = named_group("Z/2").unwrap();
        assert!(Cocycle2::new(&g, 2, &[vec![0, 0], vec![0, 1]]).is_ok());
        let g = named_group("Z/2^2").unwrap();
        // η(a, b) = a_0 b_1 is bilinear, hence a cocycle
        let rows: Vec<Vec<u64>> = (0..4).map(|a| (0..4).map(|b| ((a & 1) * ((b >> 1) & 1)) as u64).collect()).collect();
        let eta = Cocycle2::new(&g, 2, &rows).unwrap();
        let p = antisymmetrize(&g, &eta, &Subgroup::whole(&g)).unwrap();
        assert_eq!(p.value(1, 2), 1);
        assert!(p.is_nondegenerate());
        let mut bad = rows.clone();
        bad[1][1] = 1;
        assert!(matches!(Cocycle2::new(&g, 2, &bad), Err(Error::NotACocycle { .. })));
        bad[1][1] = 0;
        bad[0][1] = 1;
        assert!(matches!(Cocycle2::new(&g, 2, &bad), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn symmetric_and_coboundary_pairings_vanish() {
        let g = named_group("Z/2^2").unwrap();
        let sym: Vec<Vec<u64>> = (0..4).map(|a| (0..4).map(|b| (a & b & 1) as u64).collect()).collect();
        let eta = Cocycle2::new(&g, 2, &sym).unwrap();
        assert!(antisymmetrize(&g, &eta, &Subgroup::whole(&g)).unwrap().is_zero());
        // every coboundary of a Z/4-valued cochain
        for code in 0..64u64 {
            let f = [0, code % 4, (code / 4) % 4, (code / 16) % 4];
            let d = Cocycle2::coboundary(&g, &f, 4);
            assert!(d.is_cocycle(&g));
            assert!(antisymmetrize(&g, &d, &Subgroup::whole(&g)).unwrap().is_zero());
        }
    }

    #[test]
    fn nonabelian_subgroup_is_rejected() {
        let g = named_group("S3").unwrap();
        let eta = Cocycle2::trivial(6, 6);
        assert_eq!(antisymmetrize(&g, &eta, &Subgroup::whole(&g)), Err(Error::NotAbelian));
    }

    #[test]
    fn dual_elements() {
        let g = named_group("Z/2^2").unwrap();
        let p = standard_pairing(&g);
        assert!(p.is_nondegenerate());
        let triv = vec![Cyclotomic::one(); 4];
        assert_eq!(p.dual_element(&triv), Ok(g.identity()));
        for s in g.elements() {
            assert_eq!(p.dual_element(&p.character_of(s)), Ok(s));
        }
        let zero = Pairing::from_fn(2, g.elements().collect(), |_, _| 0);
        assert!(!zero.is_nondegenerate());
        assert_eq!(zero.dual_element(&triv), Err(Error::Degenerate));
        let not_a_char = vec![Cyclotomic::from_integer(2); 4];
        assert_eq!(p.dual_element(&not_a_char), Err(Error::NoSuchElement));
    }

    #[test]
    fn sigma_for_small_groups() {
        let trivial = named_group("1").unwrap();
        let p = Pairing::from_fn(1, vec![0], |_, _| 0);
        let s = sigma_from_eta(&trivial, &Cocycle2::trivial(1, 1), &p).unwrap();
        assert_eq!(s, vec![vec![Cyclotomic::one()]]);

        // Z/2 with trivial η: σ(a,b) = (1/4) Σ (-1)^{ta + t'b} = δ_{a,0} δ_{b,0}
        let z2 = named_group("Z/2").unwrap();
        let s = sigma_from_eta(&z2, &Cocycle2::trivial(2, 2), &standard_pairing(&z2)).unwrap();
        let direct = |a: usize, b: usize| {
            let mut acc = 0i64;
            for t in 0..2 {
                for t2 in 0..2 {
                    acc += if (t * a + t2 * b).is_multiple_of(2) { 1 } else { -1 };
                }
            }
            Cyclotomic::from_rational(Rational::new(acc.into(), 4.into()))
        };
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(s[a][b], direct(a, b));
            }
        }
        assert_eq!(
            sigma_from_eta(&z2, &Cocycle2::trivial(2, 2), &Pairing::from_fn(2, vec![0, 1], |_, _| 0)),
            Err(Error::Degenerate)
        );
    }

    #[test]
    fn pairing_orthogonality_on_klein_four() {
        // Σ_{s's''=s} ⟨x,s'⟩⟨y,s''⟩ = |S| δ_{x,y} ⟨x,s⟩
        let g = named_group("Z/2^2").unwrap();
        let p = standard_pairing(&g);
        for x in g.elements() {
            for y in g.elements() {
                for s in g.elements() {
                    let sum: i64 = g
                        .elements()
                        .map(|s1| {
                            let s2 = g.mul(g.inv(s1), s);
                            if (p.value(x, s1) + p.value(y, s2)).is_multiple_of(2) { 1 } else { -1 }
                        })
                        .sum();
                    let expected = if x == y { 4 * if p.value(x, s) == 0 { 1 } else { -1 } } else { 0 };
                    assert_eq!(sum, expected);
                }
            }
        }
    }

    #[test]
    fn relabel_preserves_values() {
        let g = named_group("Z/2^2").unwrap();
        let p = standard_pairing(&g);
        let map = [10, 7, 3, 12];
        let q = p.relabel(&map);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(q.value(map[a], map[b]), p.value(a, b));
            }
        }
    }
}
