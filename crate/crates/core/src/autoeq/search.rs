//! Completing a partial object map to a permutation preserving `S` and `T`.

use super::{BraidedAutoeq, PartialBrEq, Provenance};
use crate::center::Double;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};

/// Upper bound on the number of completions returned.
pub const COMPLETION_CAP: usize = 100_000;

/// Invariants an object shares with its image: quantum dimension, twist,
/// `S_ii` and the multiset of its `S`-row.
type Fingerprint = (u64, Cyclotomic, Cyclotomic, Vec<Cyclotomic>);

fn fingerprints(d: &Double) -> Vec<Fingerprint> {
    let md = &d.md;
    (0..d.len())
        .map(|i| {
            let mut row = md.s()[i].clone();
            row.sort();
            (md.qdims()[i], md.t()[i].clone(), md.s()[i][i].clone(), row)
        })
        .collect()
}

struct Search<'a> {
    d: &'a Double,
    candidates: Vec<Vec<usize>>,
    order: Vec<usize>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// `S` agrees between `i ↦ j` and every assignment made so far.
    fn consistent(&self, i: usize, j: usize) -> bool {
        let md = &self.d.md;
        md.s_int(j, j) == md.s_int(i, i)
            && self.image.iter().enumerate().all(|(k, t)| t.is_none_or(|t| md.s_int(j, t) == md.s_int(i, k)))
    }

    fn run(&mut self, depth: usize) -> Result<()> {
        if depth == self.order.len() {
            if self.found.len() == COMPLETION_CAP {
                return Err(Error::BudgetExceeded(format!("more than {COMPLETION_CAP} completions")));
            }
            self.found.push(self.image.iter().map(|t| t.expect("total")).collect());
            return Ok(());
        }
        let i = self.order[depth];
        for c in 0..self.candidates[i].len() {
            let j = self.candidates[i][c];
            if self.used[j] || !self.consistent(i, j) {
                continue;
            }
            self.image[i] = Some(j);
            self.used[j] = true;
            self.run(depth + 1)?;
            self.image[i] = None;
            self.used[j] = false;
        }
        Ok(())
    }
}

/// Every bijection extending `partial` that fixes the unit, preserves
/// quantum dimensions and satisfies `S_{π(i)π(j)} = S_ij`,
/// `T_{π(i)} = T_i`, sorted by mapping. `NoExtension` if there is none.
pub fn complete_extensions(d: &Double, partial: &PartialBrEq) -> Result<Vec<BraidedAutoeq>> {
    let n = d.len();
    if partial.len() != n {
        return Err(Error::DomainMismatch(partial.len(), n));
    }
    let unit = d.center.unit();
    let mut image = partial.mapping().to_vec();
    match image[unit] {
        Some(t) if t != unit => return Err(Error::NoExtension),
        _ => image[unit] = Some(unit),
    }
    if image.iter().flatten().filter(|&&t| t == unit).count() > 1 {
        return Err(Error::NoExtension);
    }

    let fp = fingerprints(d);
    let candidates: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| fp[j] == fp[i]).collect()).collect();
    let mut search = Search { d, candidates, order: Vec::new(), image: vec![None; n], used: vec![false; n], found: Vec::new() };

    // seed with the prescribed part, checking it as we go
    for (i, t) in image.iter().enumerate() {
        if let Some(j) = *t {
            if j >= n || search.used[j] || fp[i] != fp[j] || !search.consistent(i, j) {
                return Err(Error::NoExtension);
            }
            search.image[i] = Some(j);
            search.used[j] = true;
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&i| image[i].is_none()).collect();
    order.sort_by_key(|&i| (search.candidates[i].len(), i));
    search.order = order;
    search.run(0)?;

    if search.found.is_empty() {
        return Err(Error::NoExtension);
    }
    search.found.sort();
    let from = Box::new(partial.provenance().clone());
    Ok(search
        .found
        .into_iter()
        .map(|m| BraidedAutoeq::trusted(m, Provenance::Searched { from: from.clone() }))
        .collect())
}
