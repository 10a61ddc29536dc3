//! Dictionary between autoequivalences of `Z(Vect_{F_p^n})` and matrices.

use std::collections::HashMap;

use super::{check_prime, hyperbolic_form, FpMatrix};
use crate::autoeq::{BraidedAutoeq, Provenance};
use crate::center::Double;
use crate::cyclo::root_of_unity;
use crate::error::{Error, Result};
use crate::groups::named_group;

/// The center of `Vect_{F_p^n}` with each simple object labelled by its
/// coordinates `(g; c) ∈ F_p^{2n}`.
#[derive(Clone, Debug)]
pub struct FpModel {
    p: u64,
    n: usize,
    double: Double,
    labels: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, usize>,
}

impl FpModel {
    pub fn new(p: u64, n: usize, cap: usize) -> Result<Self> {
        check_prime(p)?;
        let g = named_group(&format!("Z/{p}^{n}"))?;
        let double = Double::new(&g, cap)?;
        let pu = p as usize;
        // group elements carry little-endian digits; e_i has index p^i
        let digits = |mut x: usize| -> Vec<u64> {
            (0..n)
                .map(|_| {
                    let d = x % pu;
                    x /= pu;
                    d as u64
                })
                .collect()
        };
        let basis: Vec<usize> = (0..n).map(|i| pu.pow(i as u32)).collect();
        let labels: Vec<Vec<u64>> = double
            .center
            .objects()
            .iter()
            .map(|o| {
                let cent = double.center.centralizer(o.class_index);
                let mut label = digits(o.class_rep);
                label.extend(basis.iter().map(|&e| {
                    (0..p).find(|&k| cent.value(o.char_index, e) == &root_of_unity(p as u32, k as i64)).expect("p-th root")
                }));
                label
            })
            .collect();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Ok(FpModel { p, n, double, labels, index })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn double(&self) -> &Double {
        &self.double
    }

    pub fn label(&self, object: usize) -> &[u64] {
        &self.labels[object]
    }

    pub fn object(&self, label: &[u64]) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// The matrix `M` with `label(F(o)) = M · label(o)` for every object.
    pub fn to_matrix(&self, f: &BraidedAutoeq) -> Result<FpMatrix> {
        let dim = 2 * self.n;
        if f.len() != self.labels.len() {
            return Err(Error::DomainMismatch(f.len(), self.labels.len()));
        }
        let columns: Vec<&[u64]> = (0..dim)
            .map(|k| {
                let unit: Vec<u64> = (0..dim).map(|i| u64::from(i == k)).collect();
                self.label(f.apply(self.object(&unit).expect("basis label")))
            })
            .collect();
        let m = FpMatrix::new(self.p, (0..dim).map(|i| columns.iter().map(|c| c[i]).collect()).collect())?;
        let additive = (0..self.labels.len()).all(|o| m.apply(self.label(o)) == self.label(f.apply(o)));
        if !additive {
            return Err(Error::NotAdditive);
        }
        Ok(m)
    }

    /// The object permutation of a form-preserving matrix, checked against
    /// the modular data.
    pub fn to_autoeq(&self, m: &FpMatrix) -> Result<BraidedAutoeq> {
        if m.p() != self.p || m.size() != 2 * self.n {
            return Err(Error::DomainMismatch(m.size(), 2 * self.n));
        }
        if !m.preserves(&hyperbolic_form(self.p, self.n)?) {
            return Err(Error::NotFormPreserving);
        }
        let mapping = self.labels.iter().map(|l| self.object(&m.apply(l)).expect("labels cover F_p^2n")).collect();
        BraidedAutoeq::new(&self.double, mapping, Provenance::Matrix { p: self.p, rows: m.rows().to_vec() })
    }
}
