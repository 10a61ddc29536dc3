//! Finite groups stored as dense Cayley tables.
//!
//! Elements are the indices `0..order`. Everything downstream (classes,
//! centralizers, characters, cocycles) is expressed in terms of these
//! indices, and canonical representatives are always minimal indices so that
//! enumerations are reproducible.

mod morphism;
mod named;
mod subgroup;

pub use morphism::{
    automorphisms, find_isomorphism, homomorphisms, inner_automorphisms, outer_classes, GroupMorphism,
};
pub use named::{named_group, permutation_group, symmetric_group};
pub use subgroup::{
    abelian_normal_subgroups, all_subgroups, normal_subgroups, quotient, semidirect_decompositions,
    semidirect_product, Embedded, Quotient, Subgroup,
};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on group orders for the brute-force algorithms.
pub const DEFAULT_ORDER_CAP: usize = 200;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish()
    }
}

/// Validate a Cayley table and build the group.
///
/// The identity may sit at any index. Errors name a witness: the first
/// non-associative triple in lexicographic order, or the first element
/// without an inverse.
pub fn group_from_table(rows: &[Vec<usize>]) -> Result<FiniteGroup> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!("row {i} has length {}", row.len())));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(Error::MalformedTable(format!("entry {bad} in row {i}")));
        }
        table.extend_from_slice(row);
    }
    let at = |a: usize, b: usize| table[a * n + b];
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
        .ok_or(Error::NoIdentity)?;
    let mut inverses = vec![usize::MAX; n];
    for a in 0..n {
        match (0..n).find(|&b| at(a, b) == identity && at(b, a) == identity) {
            Some(b) => inverses[a] = b,
            None => return Err(Error::NoInverse { element: a }),
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(FiniteGroup { order: n, table, identity, inverses, names: None })
}

impl FiniteGroup {
    /// Build from a flat table known to be a group law (internal constructors).
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x))
            .expect("group law has an identity");
        let mut inverses = vec![0; order];
        for a in 0..order {
            inverses[a] = (0..order)
                .find(|&b| table[a * order + b] == identity)
                .expect("group law has inverses");
        }
        FiniteGroup { order, table, identity, inverses, names: None }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.order);
        self.names = Some(names);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    /// A small generating set: one generator if cyclic, else a pair if one
    /// exists, else a greedy choice in element order.
    pub fn small_generating_set(&self) -> Vec<usize> {
        if self.order == 1 {
            return Vec::new();
        }
        if let Some(g) = self.elements().find(|&g| self.element_order(g) == self.order) {
            return vec![g];
        }
        // Pairs are searched only when the group is small enough for the
        // quadratic scan to stay cheap.
        if self.order <= 256 {
            let orders: Vec<usize> = self.elements().map(|g| self.element_order(g)).collect();
            let mut cands: Vec<usize> = self.elements().filter(|&g| g != self.identity).collect();
            cands.sort_by_key(|&g| (std::cmp::Reverse(orders[g]), g));
            for (i, &a) in cands.iter().enumerate() {
                for &b in &cands[i + 1..] {
                    if self.generated(&[a, b]).len() == self.order {
                        let mut pair = vec![a, b];
                        pair.sort_unstable();
                        return pair;
                    }
                }
            }
        }
        let mut gens = Vec::new();
        let mut current = vec![self.identity];
        for g in self.elements() {
            if current.binary_search(&g).is_err() {
                gens.push(g);
                current = self.generated(&gens);
                if current.len() == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// Breadth-first spanning tree of the right Cayley graph for `gens`:
    /// returns, per element, `Some((parent, generator position))` with
    /// `element = parent * gens[pos]`, and the BFS order of elements.
    pub fn spanning_tree(&self, gens: &[usize]) -> (Vec<Option<(usize, usize)>>, Vec<usize>) {
        let mut parent = vec![None; self.order];
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut order = vec![self.identity];
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (pos, &s) in gens.iter().enumerate() {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, pos));
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        (parent, order)
    }

    /// Number of ordered commuting pairs. Divided by the order it counts
    /// conjugacy classes without forming them.
    pub fn commuting_pairs(&self) -> usize {
        let mut count = 0;
        for a in self.elements() {
            for b in self.elements() {
                if self.commutes(a, b) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn center(&self) -> Subgroup {
        let elements = self
            .elements()
            .filter(|&z| self.elements().all(|x| self.commutes(z, x)))
            .collect();
        Subgroup::from_sorted_unchecked(self.order, elements)
    }

    pub fn check_order_cap(&self, cap: usize) -> Result<()> {
        if self.order > cap {
            Err(Error::CapExceeded { order: self.order, cap })
        } else {
            Ok(())
        }
    }
}

/// Conjugacy classes with minimal-index representatives, ordered by
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub reps: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn size(&self, class: usize) -> usize {
        self.classes[class].len()
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyClasses {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut classes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        let mut members: Vec<usize> = (0..n).map(|y| g.conjugate(y, x)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            class_of[m] = idx;
        }
        reps.push(x);
        classes.push(members);
    }
    ConjugacyClasses { reps, classes, class_of }
}

pub fn centralizer(g: &FiniteGroup, x: usize) -> Subgroup {
    let elements = g.elements().filter(|&y| g.commutes(x, y)).collect();
    Subgroup::from_sorted_unchecked(g.order(), elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_table() {
        let g = group_from_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn z2_table() {
        let g = group_from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn identity_need_not_be_zero() {
        let g = group_from_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.identity(), 1);
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // Unique identity 0 and every element is its own inverse, but the
        // law is not associative (a Latin square that is not a group).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match group_from_table(&rows) {
            Err(Error::NotAssociative { a, b, c }) => {
                let at = |x: usize, y: usize| rows[x][y];
                assert_ne!(at(at(a, b), c), at(a, at(b, c)));
            }
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn missing_identity_and_inverse() {
        assert_eq!(group_from_table(&[vec![0, 0], vec![0, 0]]), Err(Error::NoIdentity));
        assert_eq!(
            group_from_table(&[vec![0, 1], vec![1, 1]]),
            Err(Error::NoInverse { element: 1 })
        );
        assert!(matches!(
            group_from_table(&[vec![0, 1], vec![1]]),
            Err(Error::MalformedTable(_))
        ));
    }

    #[test]
    fn s3_classes_and_centralizers() {
        let g = named_group("S3").unwrap();
        let cc = conjugacy_classes(&g);
        let sizes: Vec<usize> = cc.classes.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(centralizer(&g, g.identity()).order(), 6);
        assert_eq!(centralizer(&g, cc.reps[1]).order(), 2);
        assert_eq!(centralizer(&g, cc.reps[2]).order(), 3);
    }

    #[test]
    fn s4_has_five_classes() {
        let g = named_group("S4").unwrap();
        let cc = conjugacy_classes(&g);
        // Independent count: orbits of the conjugation action, counted by
        // Burnside's lemma as commuting pairs over |G|.
        assert_eq!(g.commuting_pairs() / g.order(), 5);
        assert_eq!(cc.len(), 5);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = named_group("Z/2^3").unwrap();
        let cc = conjugacy_classes(&g);
        assert_eq!(cc.len(), 8);
        assert!(cc.classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn small_generating_sets_generate() {
        for name in ["S3", "S4", "A5", "D4", "Q8", "Z/2^3", "Z/6", "Z/3^2"] {
            let g = named_group(name).unwrap();
            let gens = g.small_generating_set();
            assert_eq!(g.generated(&gens).len(), g.order(), "{name}");
        }
        assert_eq!(named_group("Z/2^3").unwrap().small_generating_set().len(), 3);
        assert_eq!(named_group("S4").unwrap().small_generating_set().len(), 2);
    }
}
