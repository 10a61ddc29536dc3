use std::collections::BTreeSet;

use super::FiniteGroup;
use crate::error::Result;

/// A map between element index sets; `images[x]` is the image of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupMorphism {
    source_order: usize,
    target_order: usize,
    images: Vec<usize>,
}

impl GroupMorphism {
    pub fn new(source_order: usize, target_order: usize, images: Vec<usize>) -> Self {
        assert_eq!(images.len(), source_order);
        debug_assert!(images.iter().all(|&y| y < target_order));
        GroupMorphism { source_order, target_order, images }
    }

    pub fn identity(order: usize) -> Self {
        GroupMorphism::new(order, order, (0..order).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose_after(&self, other: &GroupMorphism) -> GroupMorphism {
        assert_eq!(other.target_order, self.source_order);
        let images = other.images.iter().map(|&x| self.images[x]).collect();
        GroupMorphism::new(other.source_order, self.target_order, images)
    }

    pub fn inverse(&self) -> Option<GroupMorphism> {
        if self.source_order != self.target_order {
            return None;
        }
        let mut inv = vec![usize::MAX; self.source_order];
        for (x, &y) in self.images.iter().enumerate() {
            if inv[y] != usize::MAX {
                return None;
            }
            inv[y] = x;
        }
        Some(GroupMorphism::new(self.source_order, self.source_order, inv))
    }

    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        self.source_order == source.order()
            && self.target_order == target.order()
            && source.elements().all(|a| {
                source
                    .elements()
                    .all(|b| self.images[source.mul(a, b)] == target.mul(self.images[a], self.images[b]))
            })
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<usize> = self.images.iter().copied().collect();
        set.len() == self.source_order
    }

    pub fn is_automorphism_of(&self, g: &FiniteGroup) -> bool {
        self.is_homomorphism(g, g) && self.is_injective()
    }
}

/// Search for homomorphisms source -> target determined by images of a
/// generating set. `accept` filters complete candidates; the search visits
/// candidates in lexicographic order of generator images.
fn search_homomorphisms(
    source: &FiniteGroup,
    target: &FiniteGroup,
    bijective: bool,
    mut visit: impl FnMut(GroupMorphism) -> bool,
) {
    let gens = source.small_generating_set();
    let (parent, bfs) = source.spanning_tree(&gens);
    let target_orders: Vec<usize> = target.elements().map(|x| target.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = source.element_order(s);
            target
                .elements()
                .filter(|&y| {
                    if bijective {
                        target_orders[y] == o
                    } else {
                        o.is_multiple_of(target_orders[y])
                    }
                })
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; gens.len()];
    let mut images = vec![0usize; source.order()];
    if gens.is_empty() {
        images[source.identity()] = target.identity();
        visit(GroupMorphism::new(source.order(), target.order(), images));
        return;
    }
    if candidates.iter().any(Vec::is_empty) {
        return;
    }
    'outer: loop {
        let gen_images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
        images[source.identity()] = target.identity();
        for &x in &bfs[1..] {
            let (p, pos) = parent[x].expect("non-identity has parent");
            images[x] = target.mul(images[p], gen_images[pos]);
        }
        let consistent = source.elements().all(|x| {
            gens.iter()
                .zip(&gen_images)
                .all(|(&s, &t)| images[source.mul(x, s)] == target.mul(images[x], t))
        });
        if consistent {
            let phi = GroupMorphism::new(source.order(), target.order(), images.clone());
            if (!bijective || phi.is_injective()) && !visit(phi) {
                return;
            }
        }
        // advance the odometer, last generator fastest
        let mut i = gens.len();
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

fn order_statistics(g: &FiniteGroup) -> Vec<usize> {
    let mut orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    orders.sort_unstable();
    orders
}

/// All automorphisms, sorted by image list (the identity comes first).
pub fn automorphisms(g: &FiniteGroup, cap: usize) -> Result<Vec<GroupMorphism>> {
    g.check_order_cap(cap)?;
    let mut out = Vec::new();
    search_homomorphisms(g, g, true, |phi| {
        out.push(phi);
        true
    });
    out.sort();
    Ok(out)
}

pub fn inner_automorphisms(g: &FiniteGroup) -> Vec<GroupMorphism> {
    let set: BTreeSet<GroupMorphism> = g
        .elements()
        .map(|c| GroupMorphism::new(g.order(), g.order(), g.elements().map(|x| g.conjugate(c, x)).collect()))
        .collect();
    set.into_iter().collect()
}

/// One representative per coset of Inn(G) in Aut(G): the first automorphism
/// (in sorted order) of each coset.
pub fn outer_classes(g: &FiniteGroup, cap: usize) -> Result<Vec<GroupMorphism>> {
    let auts = automorphisms(g, cap)?;
    let inner = inner_automorphisms(g);
    let mut covered: BTreeSet<GroupMorphism> = BTreeSet::new();
    let mut reps = Vec::new();
    for a in auts {
        if covered.contains(&a) {
            continue;
        }
        for i in &inner {
            covered.insert(a.compose_after(i));
        }
        reps.push(a);
    }
    Ok(reps)
}

/// All homomorphisms source -> target, sorted by image list.
pub fn homomorphisms(source: &FiniteGroup, target: &FiniteGroup) -> Vec<GroupMorphism> {
    let mut out = Vec::new();
    search_homomorphisms(source, target, false, |phi| {
        out.push(phi);
        true
    });
    out.sort();
    out
}

/// An isomorphism source -> target if one exists. Element-order statistics
/// are compared before the backtracking search.
pub fn find_isomorphism(source: &FiniteGroup, target: &FiniteGroup) -> Option<GroupMorphism> {
    if source.order() != target.order() || order_statistics(source) != order_statistics(target) {
        return None;
    }
    let mut found = None;
    search_homomorphisms(source, target, true, |phi| {
        found = Some(phi);
        false
    });
    found
}
