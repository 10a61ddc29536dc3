//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] is stored in the power basis of `Q[x]/(Φ_n)` for its
//! minimal conductor `n` (never `2 mod 4`), so structural equality is value
//! equality. Every operation lifts to the common conductor and then descends
//! again.

mod field;
mod int;

pub use int::CycloInt;

pub(crate) use field::euler_phi;

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::rational::solve;
use field::field;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

/// Conductor of the same field without the redundant factor 2.
pub fn canonical_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// Accumulate `Σ c ζ_n^k` into coordinates of the canonical field of `n`.
fn accumulate(n: u32, terms: impl IntoIterator<Item = (u64, Rational)>) -> (u32, Vec<Rational>) {
    let m = canonical_conductor(n);
    let f = field(m);
    let mut out = vec![Rational::zero(); f.phi];
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let k = k % n as u64;
        let (k, c) = if m != n {
            // ζ_{2h} = -ζ_h^{(h+1)/2} for odd h
            let h = m as u64;
            let c = if k % 2 == 1 { -c } else { c };
            ((k * h.div_ceil(2)) % h, c)
        } else {
            (k, c)
        };
        for (o, &r) in out.iter_mut().zip(&f.red[k as usize]) {
            if r != 0 {
                *o += &c * Rational::from_integer(r.into());
            }
        }
    }
    (m, out)
}

fn normalize(mut n: u32, mut coeffs: Vec<Rational>) -> Cyclotomic {
    loop {
        if n == 1 || coeffs[1..].iter().all(Zero::is_zero) {
            let c = coeffs.swap_remove(0);
            return Cyclotomic { conductor: 1, coeffs: vec![c] };
        }
        match field(n).descend(&coeffs) {
            Some((d, b)) => {
                let (m, c) = accumulate(d, b.into_iter().enumerate().map(|(j, x)| (j as u64, x)));
                n = m;
                coeffs = c;
            }
            None => return Cyclotomic { conductor: n, coeffs },
        }
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_integer(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(n.into()))
    }

    /// `Σ c_k ζ_n^k` for arbitrary exponents.
    pub fn from_powers(n: u32, terms: impl IntoIterator<Item = (u64, Rational)>) -> Self {
        assert!(n >= 1);
        let (m, coeffs) = accumulate(n, terms);
        normalize(m, coeffs)
    }

    /// Build from coordinates in the power basis of `Φ_n`.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if n == 0 || coeffs.len() != euler_phi(n) {
            return Err(Error::MalformedTable(format!(
                "conductor {n} needs {} coefficients, got {}",
                if n == 0 { 0 } else { euler_phi(n) },
                coeffs.len()
            )));
        }
        if n % 4 == 2 {
            Ok(Cyclotomic::from_powers(n, coeffs.into_iter().enumerate().map(|(i, c)| (i as u64, c))))
        } else {
            Ok(normalize(n, coeffs))
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    /// Rational integer value, if this is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// All power-basis coordinates are integers (an algebraic integer).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coordinates in `Q(ζ_n)` for a multiple `n` of the conductor.
    pub(crate) fn lift(&self, n: u32) -> Vec<Rational> {
        debug_assert!(n.is_multiple_of(self.conductor) && n % 4 != 2);
        if n == self.conductor {
            return self.coeffs.clone();
        }
        let s = (n / self.conductor) as usize;
        let f = field(n);
        let mut out = vec![Rational::zero(); f.phi];
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (o, &r) in out.iter_mut().zip(&f.red[(i * s) % n as usize]) {
                if r != 0 {
                    *o += c * Rational::from_integer(r.into());
                }
            }
        }
        out
    }

    fn common(&self, other: &Cyclotomic) -> u32 {
        self.conductor.lcm(&other.conductor)
    }

    fn mul_ref(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        let n = self.common(other);
        let (a, b) = (self.lift(n), other.lift(n));
        let f = field(n);
        let mut prod = vec![Rational::zero(); 2 * f.phi - 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                prod[i + j] += x * y;
            }
        }
        let mut out = vec![Rational::zero(); f.phi];
        for (k, c) in prod.into_iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if k < f.phi {
                out[k] += c;
            } else {
                for (o, &r) in out.iter_mut().zip(&f.red[k % n as usize]) {
                    if r != 0 {
                        *o += &c * Rational::from_integer(r.into());
                    }
                }
            }
        }
        normalize(n, out)
    }

    fn add_ref(&self, other: &Cyclotomic, sign: bool) -> Cyclotomic {
        let n = self.common(other);
        let mut a = self.lift(n);
        let b = other.lift(n);
        for (x, y) in a.iter_mut().zip(&b) {
            if sign {
                *x += y;
            } else {
                *x -= y;
            }
        }
        normalize(n, a)
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        if q.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    /// The Galois automorphism `ζ_n ↦ ζ_n^k`; `k` must be coprime to the
    /// conductor.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let n = self.conductor as i64;
        assert_eq!(k.gcd(&n), 1, "Galois exponent must be a unit");
        if n == 1 {
            return self.clone();
        }
        let (m, coeffs) = accumulate(
            n as u32,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as i64 * k).rem_euclid(n) as u64, c.clone())),
        );
        Cyclotomic { conductor: m, coeffs }
    }

    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Cyclotomic::from_rational(q.recip()));
        }
        let n = self.conductor as usize;
        let f = field(self.conductor);
        // columns: a * x^j in the power basis
        let mut m = vec![vec![Rational::zero(); f.phi]; f.phi];
        for j in 0..f.phi {
            for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (row, &r) in m.iter_mut().zip(&f.red[(i + j) % n]) {
                    if r != 0 {
                        row[j] += a * Rational::from_integer(r.into());
                    }
                }
            }
        }
        let mut e0 = vec![Rational::zero(); f.phi];
        e0[0] = Rational::one();
        let x = solve(&m, &e0).ok_or(Error::DivisionByZero)?;
        Ok(Cyclotomic { conductor: self.conductor, coeffs: x })
    }

    pub fn checked_div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Cyclotomic> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Returns `(n, k)` with `gcd(n, k) = 1` (or `(1, 0)`) when the value is
    /// exactly `ζ_n^k`.
    pub fn as_root_of_unity(&self) -> Option<(u32, u32)> {
        if let Some(q) = self.to_rational() {
            return if q.is_one() {
                Some((1, 0))
            } else if (-q).is_one() {
                Some((2, 1))
            } else {
                None
            };
        }
        // roots of unity in Q(ζ_c) are the 2c-th (c odd) or c-th (c even) ones
        let c = self.conductor;
        let l = if c.is_multiple_of(2) { c } else { 2 * c };
        (0..l)
            .find(|&k| root_of_unity(l, k as i64) == *self)
            .map(|k| {
                let g = k.gcd(&l);
                (l / g, k / g)
            })
    }

    /// Approximate complex value, for display only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let n = self.conductor as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * i as f64 / n;
            (re + v * t.cos(), im + v * t.sin())
        })
    }
}

/// `ζ_n^k`.
pub fn root_of_unity(n: u32, k: i64) -> Cyclotomic {
    assert!(n >= 1);
    let k = k.rem_euclid(n as i64) as u32;
    let g = n.gcd(&k).max(1);
    let (n, k) = if k == 0 { (1, 0) } else { (n / g, k / g) };
    let (m, coeffs) = accumulate(n, [(k as u64, Rational::one())]);
    if m == 1 {
        normalize(m, coeffs)
    } else {
        Cyclotomic { conductor: m, coeffs }
    }
}

/// Structural total order: by conductor, then by coordinates in descending
/// lexicographic order. It is not compatible with any field structure but
/// makes sorted output reproducible; among values of the same conductor,
/// `1` precedes `-1` and `ζ_3` precedes `ζ_3^2`.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| other.coeffs.cmp(&self.coeffs))
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.add_ref(b, true));
forward_binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.add_ref(b, false));
forward_binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_ref(b));

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.coeffs {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -self.clone()
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        // accumulate unnormalized in a growing common field
        let items: Vec<Cyclotomic> = iter.collect();
        let n = items.iter().fold(1u32, |acc, x| acc.lcm(&x.conductor));
        let mut acc = vec![Rational::zero(); euler_phi(n)];
        for x in &items {
            for (a, b) in acc.iter_mut().zip(x.lift(n)) {
                *a += b;
            }
        }
        normalize(n, acc)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.cloned().sum()
    }
}

impl Product for Cyclotomic {
    fn product<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |a, b| &a * &b)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let root = match i {
                0 => String::new(),
                1 => format!("E({})", self.conductor),
                _ => format!("E({})^{i}", self.conductor),
            };
            match (root.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{root}")?,
                (false, false) => write!(f, "{mag}*{root}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    conductor: u32,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let coeffs = w
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n: BigInt = n.parse().map_err(D::Error::custom)?;
                let d: BigInt = d.parse().map_err(D::Error::custom)?;
                if d.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Rational::new(n, d))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Cyclotomic::from_coeffs(w.conductor, coeffs).map_err(D::Error::custom)
    }
}
