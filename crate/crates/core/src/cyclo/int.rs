use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use super::field::{field, FieldData};
use super::{canonical_conductor, Cyclotomic, Rational};

/// Element of `Z[ζ_n]` for a fixed conductor, with machine-integer
/// coordinates. Used for the large character sums behind modular data,
/// where the general [`Cyclotomic`] would re-normalize after every step.
#[derive(Clone)]
pub struct CycloInt {
    n: u32,
    field: Arc<FieldData>,
    coeffs: Vec<i128>,
}

impl std::fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CycloInt({}, {:?})", self.n, self.coeffs)
    }
}

impl PartialEq for CycloInt {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycloInt {}

impl CycloInt {
    pub fn zero(n: u32) -> Self {
        let n = canonical_conductor(n);
        let field = field(n);
        let coeffs = vec![0; field.phi];
        CycloInt { n, field, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// `ζ_n^k` in the ring of conductor `n`; `n` may be `2 mod 4`.
    pub fn root(n: u32, k: i64) -> Self {
        let mut out = CycloInt::zero(n);
        out.add_root(n, k, 1);
        out
    }

    /// Add `c ζ_m^k` for `m` dividing the (un-reduced) conductor.
    pub fn add_root(&mut self, m: u32, k: i64, c: i128) {
        let (m, mut k, mut c) = (m as i64, k, c);
        let n = self.n as i64;
        let mut big = if n % m == 0 { n } else { 2 * n };
        assert!(big % m == 0, "root order {m} does not divide conductor {n}");
        k = k.rem_euclid(m) * (big / m);
        if big != n {
            // ζ_{2n} with n odd: ζ_{2n}^k = (-1)^k ζ_n^{k(n+1)/2}
            if k % 2 == 1 {
                c = -c;
            }
            k = (k * ((n + 1) / 2)).rem_euclid(n);
            big = n;
        }
        let row = &self.field.red[k.rem_euclid(big) as usize];
        for (o, &r) in self.coeffs.iter_mut().zip(row) {
            *o += c * r as i128;
        }
    }

    /// Lift an algebraic integer whose conductor divides `n`.
    pub fn from_cyclotomic(a: &Cyclotomic, n: u32) -> Option<Self> {
        let mut out = CycloInt::zero(n);
        if !out.n.is_multiple_of(a.conductor()) || !a.is_integral() {
            return None;
        }
        for (i, c) in a.coeffs().iter().enumerate() {
            let c = c.to_integer().to_i128()?;
            if c != 0 {
                out.add_root(a.conductor(), i as i64, c);
            }
        }
        Some(out)
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::from_coeffs(
            self.n,
            self.coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
        )
        .expect("coordinate count matches the field")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add_assign(&mut self, other: &CycloInt) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn scale(&self, c: i128) -> CycloInt {
        CycloInt { coeffs: self.coeffs.iter().map(|x| x * c).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &CycloInt) -> CycloInt {
        debug_assert_eq!(self.n, other.n);
        let phi = self.field.phi;
        let mut prod = vec![0i128; 2 * phi - 1];
        for (i, &x) in self.coeffs.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, &y) in other.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let mut coeffs = prod[..phi].to_vec();
        for (k, &c) in prod.iter().enumerate().skip(phi).filter(|(_, c)| **c != 0) {
            let row = &self.field.red[k % self.n as usize];
            for (o, &r) in coeffs.iter_mut().zip(row) {
                *o += c * r as i128;
            }
        }
        CycloInt { coeffs, ..self.clone() }
    }

    /// Exact division by a nonzero integer, `None` if some coordinate is
    /// not divisible.
    pub fn div_exact(&self, d: i128) -> Option<CycloInt> {
        if d == 0 || self.coeffs.iter().any(|c| c % d != 0) {
            return None;
        }
        Some(CycloInt { coeffs: self.coeffs.iter().map(|c| c / d).collect(), ..self.clone() })
    }

    /// The value as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<i128> {
        self.coeffs[1..].iter().all(|&c| c == 0).then(|| self.coeffs[0])
    }

    pub fn conj(&self) -> CycloInt {
        let mut out = CycloInt::zero(self.n);
        for (i, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            out.add_root(self.n, -(i as i64), c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::root_of_unity;

    #[test]
    fn agrees_with_cyclotomic() {
        let n = 12;
        let a = CycloInt::root(12, 1);
        let mut b = CycloInt::zero(12);
        b.add_root(4, 1, 1);
        b.add_root(3, 2, 5);
        let prod = a.mul(&b).conj();
        let expected = (root_of_unity(12, 1)
            * (root_of_unity(4, 1) + root_of_unity(3, 2).scale(&Rational::from_integer(5.into()))))
        .conj();
        assert_eq!(prod.to_cyclotomic(), expected);
        let back = CycloInt::from_cyclotomic(&expected, n).unwrap();
        assert_eq!(back, prod);
    }

    #[test]
    fn conductor_two_mod_four() {
        let a = CycloInt::root(6, 1);
        assert_eq!(a.conductor(), 3);
        assert_eq!(a.to_cyclotomic(), root_of_unity(6, 1));
        let mut z = CycloInt::zero(6);
        z.add_root(2, 1, 1);
        z.add_root(1, 0, 1);
        assert!(z.is_zero());
    }
}
