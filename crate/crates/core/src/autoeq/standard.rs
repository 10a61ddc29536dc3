//! The standard generating set: every construction applied to every input
//! the group offers.

use serde::Serialize;

use super::{complete_extensions, from_bv, from_ev_lazy, from_hopf_auto, partial_dualization, BraidedAutoeq};
use crate::center::Double;
use crate::cohom::h2_classes;
use crate::error::{Error, Result};
use crate::groups::{abelian_normal_subgroups, outer_classes, semidirect_decompositions, GroupMorphism};

/// A construction input that produced nothing, and why.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub family: &'static str,
    pub input: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StandardGenerators {
    pub generators: Vec<BraidedAutoeq>,
    pub skipped: Vec<Skipped>,
}

impl StandardGenerators {
    pub fn count(&self, family: &str) -> usize {
        self.generators.iter().filter(|g| family_of(g) == family).count()
    }
}

fn family_of(f: &BraidedAutoeq) -> &'static str {
    use super::Provenance::*;
    match f.provenance() {
        V { .. } => "v",
        Bv { .. } => "bv",
        Searched { from } => match **from {
            Ev { .. } => "ev",
            RPrime { .. } => "rprime",
            _ => "other",
        },
        _ => "other",
    }
}

/// Errors that mean "this input yields no autoequivalence" rather than a
/// failure of the computation.
fn is_benign(e: &Error) -> bool {
    matches!(
        e,
        Error::NotLazy | Error::Degenerate | Error::NotSelfDual | Error::NoComplement | Error::TwistNotCharacter { .. } | Error::Unidentified(_)
    )
}

/// Nontrivial outer automorphisms and the cocycle twists of the identity,
/// and with `subgroups` set also every lazy cocycle class on a nontrivial
/// abelian normal subgroup and every partial dualization, each completed
/// in all possible ways. Cocycles take values in the `modulus`-th roots of
/// unity, defaulting to the exponent of the group.
pub fn standard_generators(d: &Double, subgroups: bool, modulus: Option<u64>, cap: usize) -> Result<StandardGenerators> {
    let g = d.group();
    let m = modulus.unwrap_or(g.exponent() as u64);
    let mut generators = Vec::new();
    let mut skipped = Vec::new();
    for v in outer_classes(g, cap)? {
        let f = from_hopf_auto(d, &v)?;
        if !f.is_identity() {
            generators.push(f);
        }
    }
    let id = GroupMorphism::identity(g.order());
    for mu in h2_classes(g, m)?.generators() {
        generators.push(from_bv(d, &id, mu)?);
    }
    if subgroups {
        for s in abelian_normal_subgroups(g).into_iter().filter(|s| !s.is_trivial()) {
            let emb = s.embed(g);
            let sm = modulus.unwrap_or(emb.group.exponent() as u64);
            for eta in h2_classes(&emb.group, sm)?.representatives().iter().skip(1) {
                match from_ev_lazy(d, &s, eta).and_then(|p| complete_extensions(d, &p)) {
                    Ok(found) => generators.extend(found),
                    Err(e) if is_benign(&e) => {
                        skipped.push(Skipped { family: "ev", input: format!("{:?}", s.elements()), reason: e.to_string() })
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        for (n, q) in semidirect_decompositions(g).into_iter().filter(|(n, _)| !n.is_trivial()) {
            match partial_dualization(d, &n, &q, None).and_then(|p| complete_extensions(d, &p)) {
                Ok(found) => generators.extend(found),
                Err(e) if is_benign(&e) => skipped.push(Skipped {
                    family: "rprime",
                    input: format!("{:?}:{:?}", n.elements(), q.elements()),
                    reason: e.to_string(),
                }),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(StandardGenerators { generators, skipped })
}
