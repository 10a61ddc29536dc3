use std::collections::{BTreeSet, HashSet};

use super::{conjugacy_classes, FiniteGroup, GroupMorphism};
use crate::error::{Error, Result};

/// A subgroup given by its sorted element indices in the parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
}

/// A subgroup realized as a group in its own right. Local index `i`
/// corresponds to parent element `embedding[i]`; local indices follow the
/// parent order, so the local identity is the smallest parent index present.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub group: FiniteGroup,
    pub embedding: Vec<usize>,
    local: Vec<Option<usize>>,
}

impl Embedded {
    pub fn local(&self, parent_element: usize) -> Option<usize> {
        self.local[parent_element]
    }
}

impl Subgroup {
    /// Validate closure and build.
    pub fn new(g: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if set.iter().any(|&x| x >= g.order()) || !set.contains(&g.identity()) {
            return Err(Error::NotASubgroup);
        }
        for &a in &set {
            if !set.contains(&g.inv(a)) {
                return Err(Error::NotASubgroup);
            }
            for &b in &set {
                if !set.contains(&g.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(Subgroup { parent_order: g.order(), elements: set.into_iter().collect() })
    }

    pub(crate) fn from_sorted_unchecked(parent_order: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { parent_order, elements }
    }

    pub fn generated_by(g: &FiniteGroup, gens: &[usize]) -> Self {
        Self::from_sorted_unchecked(g.order(), g.generated(gens))
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(g.order(), vec![g.identity()])
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(g.order(), g.elements().collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        g.elements()
            .all(|x| self.elements.iter().all(|&s| self.contains(g.conjugate(x, s))))
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(i, &a)| self.elements[i + 1..].iter().all(|&b| g.commutes(a, b)))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::from_sorted_unchecked(self.parent_order, elements)
    }

    pub fn join(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mut gens = self.elements.clone();
        gens.extend(other.elements.iter().copied().filter(|&x| !self.contains(x)));
        Subgroup::generated_by(g, &gens)
    }

    pub fn embed(&self, g: &FiniteGroup) -> Embedded {
        let mut local = vec![None; g.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            local[x] = Some(i);
        }
        let m = self.order();
        let mut table = Vec::with_capacity(m * m);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(local[g.mul(a, b)].expect("subgroup is closed"));
            }
        }
        let mut group = FiniteGroup::from_flat_unchecked(m, table);
        if g.names().is_some() {
            group = group.with_names(self.elements.iter().map(|&x| g.name(x)).collect());
        }
        Embedded { group, embedding: self.elements.clone(), local }
    }
}

/// All normal subgroups, sorted by (order, elements).
///
/// Every normal subgroup is generated by the conjugacy classes it contains,
/// so closing {1} under "join with the normal closure of one more class"
/// reaches all of them.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let cc = conjugacy_classes(g);
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut frontier = vec![Subgroup::trivial(g)];
    found.insert(Subgroup::trivial(g));
    while let Some(n) = frontier.pop() {
        for class in &cc.classes {
            if n.contains(class[0]) {
                continue;
            }
            let mut gens = n.elements.clone();
            gens.extend_from_slice(class);
            let joined = Subgroup::generated_by(g, &gens);
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    out
}

pub fn abelian_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    normal_subgroups(g).into_iter().filter(|n| n.is_abelian(g)).collect()
}

/// Every subgroup, sorted by (order, elements). Joins of cyclic subgroups
/// are closed until nothing new appears.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut cyclic: Vec<Subgroup> = g.elements().map(|x| Subgroup::generated_by(g, &[x])).collect();
    cyclic.sort();
    cyclic.dedup();
    let mut seen: HashSet<Subgroup> = cyclic.iter().cloned().collect();
    let mut list = cyclic.clone();
    let mut i = 0;
    while i < list.len() {
        let h = list[i].clone();
        for c in &cyclic {
            if c.is_subgroup_of(&h) {
                continue;
            }
            let j = h.join(g, c);
            if seen.insert(j.clone()) {
                list.push(j);
            }
        }
        i += 1;
    }
    list.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    list
}

/// All pairs (N, Q) with N abelian normal, N ∩ Q = 1 and NQ = G.
pub fn semidirect_decompositions(g: &FiniteGroup) -> Vec<(Subgroup, Subgroup)> {
    let normals = abelian_normal_subgroups(g);
    let needs_search = normals.iter().any(|n| !n.is_trivial() && n.order() != g.order());
    let subgroups = if needs_search { all_subgroups(g) } else { Vec::new() };
    let mut out = Vec::new();
    for n in normals {
        let want = g.order() / n.order();
        if n.is_trivial() {
            out.push((n, Subgroup::whole(g)));
        } else if want == 1 {
            out.push((n, Subgroup::trivial(g)));
        } else {
            for q in subgroups.iter().filter(|q| q.order() == want) {
                if n.intersection(q).is_trivial() {
                    out.push((n.clone(), q.clone()));
                }
            }
        }
    }
    out
}

/// A quotient group whose element `i` is the coset of `reps[i]`; the
/// representatives are minimal indices and listed in increasing order.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: GroupMorphism,
    pub reps: Vec<usize>,
}

pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    if !n.is_normal(g) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &s in n.elements() {
            coset_of[g.mul(x, s)] = reps.len();
        }
        reps.push(x);
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[g.mul(a, b)]);
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", g.name(r))).collect();
    let group = FiniteGroup::from_flat_unchecked(m, table).with_names(names);
    let projection = GroupMorphism::new(g.order(), m, coset_of);
    Ok(Quotient { group, projection, reps })
}

/// The semidirect product N ⋊ Q where `action[q]` is the automorphism of N
/// by which q acts. Element `(n, q)` has index `n * |Q| + q`.
pub fn semidirect_product(
    n: &FiniteGroup,
    q: &FiniteGroup,
    action: &[GroupMorphism],
) -> Result<FiniteGroup> {
    if action.len() != q.order() {
        return Err(Error::BadSemidirectAction(format!(
            "expected {} automorphisms, got {}",
            q.order(),
            action.len()
        )));
    }
    for (i, a) in action.iter().enumerate() {
        if !a.is_automorphism_of(n) {
            return Err(Error::BadSemidirectAction(format!("image of {i} is not an automorphism")));
        }
    }
    if !action[q.identity()].is_identity() {
        return Err(Error::BadSemidirectAction("identity does not act trivially".into()));
    }
    for a in q.elements() {
        for b in q.elements() {
            if action[q.mul(a, b)] != action[a].compose_after(&action[b]) {
                return Err(Error::BadSemidirectAction(format!(
                    "action is not a homomorphism at ({a}, {b})"
                )));
            }
        }
    }
    let (nn, nq) = (n.order(), q.order());
    let size = nn * nq;
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (n1, q1) = (x / nq, x % nq);
        for y in 0..size {
            let (n2, q2) = (y / nq, y % nq);
            let nprod = n.mul(n1, action[q1].apply(n2));
            table.push(nprod * nq + q.mul(q1, q2));
        }
    }
    let names = (0..size)
        .map(|x| format!("({},{})", n.name(x / nq), q.name(x % nq)))
        .collect();
    Ok(FiniteGroup::from_flat_unchecked(size, table).with_names(names))
}
