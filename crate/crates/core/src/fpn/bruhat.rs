//! Double cosets `L · r_d · U` of the lower and upper block-triangular
//! form-preserving subgroups, `L = ⟨V, BV⟩` and `U = ⟨V, EV⟩`.
//!
//! The rank of the top-left `n × n` block is invariant under
//! `M ↦ l M u`, and equals `n − d` on `r_d`, so it names the cell.

use std::collections::HashSet;

use serde::Serialize;

use super::{
    check_prime, generate_matrix_group, hyperbolic_form, reflection, subgroup_generators, Family, FpMatrix,
    MATRIX_GROUP_CAP,
};
use crate::error::{Error, Result};
use crate::linalg::modp;

/// `M = b · r · e` with `b ∈ L`, `e ∈ U` and `r = r_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruhatCell {
    pub d: usize,
    pub b: FpMatrix,
    pub r: FpMatrix,
    pub e: FpMatrix,
}

/// The triangular subgroups for one `(p, n)`, built once and reused.
#[derive(Clone, Debug)]
pub struct BruhatContext {
    p: u64,
    n: usize,
    form: FpMatrix,
    lower: Vec<FpMatrix>,
    upper: HashSet<FpMatrix>,
}

impl BruhatContext {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        check_prime(p)?;
        let size = 2 * n;
        let v = subgroup_generators(p, n, Family::V)?;
        let mut lower_gens = v.clone();
        lower_gens.extend(subgroup_generators(p, n, Family::Bv)?);
        let mut upper_gens = v;
        upper_gens.extend(subgroup_generators(p, n, Family::Ev)?);
        let lower = generate_matrix_group(p, size, &lower_gens, MATRIX_GROUP_CAP)?;
        let upper = generate_matrix_group(p, size, &upper_gens, MATRIX_GROUP_CAP)?.into_iter().collect();
        Ok(BruhatContext { p, n, form: hyperbolic_form(p, n)?, lower, upper })
    }

    pub fn lower(&self) -> &[FpMatrix] {
        &self.lower
    }

    pub fn upper_len(&self) -> usize {
        self.upper.len()
    }

    /// `n − rank` of the top-left block.
    pub fn cell_of(&self, m: &FpMatrix) -> usize {
        self.n - modp::rank(&m.block(0, 0, self.n), self.p)
    }

    pub fn factorize(&self, m: &FpMatrix) -> Result<BruhatCell> {
        if m.p() != self.p || m.size() != 2 * self.n || !m.preserves(&self.form) {
            return Err(Error::NotFormPreserving);
        }
        let d = self.cell_of(m);
        let r = reflection(self.p, self.n, d);
        for b in &self.lower {
            // r is an involution
            let e = r.mul(&b.inverse().expect("group element")).mul(m);
            if self.upper.contains(&e) {
                return Ok(BruhatCell { d, b: b.clone(), r, e });
            }
        }
        Err(Error::NoFactorization)
    }

    /// The set `L · r_d · U`.
    pub fn double_coset(&self, d: usize) -> HashSet<FpMatrix> {
        let r = reflection(self.p, self.n, d);
        self.lower.iter().flat_map(|b| {
            let br = b.mul(&r);
            self.upper.iter().map(move |e| br.mul(e))
        })
        .collect()
    }
}

pub fn bruhat_factorize(m: &FpMatrix) -> Result<BruhatCell> {
    let n = m.size() / 2;
    BruhatContext::new(m.p(), n)?.factorize(m)
}

/// How the elements of a group of matrices distribute over the cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellCensus {
    pub p: u64,
    pub n: usize,
    pub group_order: usize,
    /// Elements per cell `d = 0..=n`.
    pub cells: Vec<usize>,
    /// Elements with no factorization.
    pub failures: usize,
}

impl CellCensus {
    pub fn nonempty_cells(&self) -> usize {
        self.cells.iter().filter(|&&c| c > 0).count()
    }
}

/// Factor every element of `elements`.
pub fn cell_census(p: u64, n: usize, elements: &[FpMatrix]) -> Result<CellCensus> {
    let ctx = BruhatContext::new(p, n)?;
    let mut cells = vec![0; n + 1];
    let mut failures = 0;
    for m in elements {
        match ctx.factorize(m) {
            Ok(cell) => {
                debug_assert_eq!(cell.b.mul(&cell.r).mul(&cell.e), *m);
                cells[cell.d] += 1;
            }
            Err(Error::NoFactorization) => failures += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(CellCensus { p, n, group_order: elements.len(), cells, failures })
}

/// `r_{d'} ∉ L · r_d · U` for all `d ≠ d'`, by enumerating each double
/// coset.
pub fn double_cosets_separated(p: u64, n: usize) -> Result<bool> {
    let ctx = BruhatContext::new(p, n)?;
    let reflections: Vec<FpMatrix> = (0..=n).map(|d| reflection(p, n, d)).collect();
    Ok((0..=n).all(|d| {
        let coset = ctx.double_coset(d);
        reflections.iter().enumerate().all(|(d2, r)| (d2 == d) == coset.contains(r))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpn::all_generators;

    fn group(p: u64, n: usize) -> Vec<FpMatrix> {
        generate_matrix_group(p, 2 * n, &all_generators(p, n).unwrap(), MATRIX_GROUP_CAP).unwrap()
    }

    #[test]
    fn identity_and_full_dualization() {
        let id = FpMatrix::identity(3, 2);
        let cell = bruhat_factorize(&id).unwrap();
        assert_eq!(cell.d, 0);
        assert!(cell.b.is_identity() && cell.e.is_identity());
        let r = reflection(3, 1, 1);
        let cell = bruhat_factorize(&r).unwrap();
        assert_eq!(cell.d, 1);
        assert!(cell.b.is_identity() && cell.e.is_identity());
    }

    #[test]
    fn every_element_factorizes() {
        for (p, n) in [(2, 1), (3, 1), (2, 2)] {
            let census = cell_census(p, n, &group(p, n)).unwrap();
            assert_eq!(census.failures, 0, "({p},{n})");
            assert_eq!(census.nonempty_cells(), n + 1);
            assert_eq!(census.cells.iter().sum::<usize>(), census.group_order);
        }
    }

    #[test]
    fn reflections_lie_in_distinct_double_cosets() {
        for (p, n) in [(2, 2), (3, 1)] {
            assert!(double_cosets_separated(p, n).unwrap());
        }
    }

    #[test]
    fn right_hand_reflection_order_misses_elements() {
        // swapping only the second grading/character pair is L r_1 U but in
        // no L U r_d
        let (p, n) = (2, 2);
        let ctx = BruhatContext::new(p, n).unwrap();
        let m = FpMatrix::new(p, vec![vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 1, 0, 0]]).unwrap();
        assert_eq!(ctx.factorize(&m).unwrap().d, 1);
        let lu: HashSet<FpMatrix> = ctx.lower().iter().flat_map(|b| ctx.upper.iter().map(move |e| b.mul(e))).collect();
        assert!((0..=n).all(|d| !lu.contains(&m.mul(&reflection(p, n, d)))));
    }

    #[test]
    fn rejects_non_form_preserving() {
        let m = FpMatrix::new(3, vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(bruhat_factorize(&m), Err(Error::NotFormPreserving));
    }
}
