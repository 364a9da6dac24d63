//! Coefficient fields: the rationals and prime fields of modulus below 2^31.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Exclusive upper bound on prime-field moduli.
pub const MODULUS_BOUND: u64 = 1 << 31;

/// A coefficient field. The field value is a context object; elements are
/// plain values manipulated through it.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Image of `num / den` in the field.
    fn from_ratio(&self, num: &Integer, den: &Integer) -> Result<Self::Elem>;

    /// Reduction of an element into a prime field.
    fn to_prime(&self, a: &Self::Elem, target: &PrimeField) -> Result<PrimeFieldElement>;

    /// `"Q"` or `"Fp:<p>"`.
    fn descriptor(&self) -> String;

    /// Signed display: `-1` rather than `p - 1` in prime fields.
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// True when the displayed form starts with a minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_ratio(&Integer::from(v), &Integer::one())
            .expect("unit denominator")
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_ratio(&self, num: &Integer, den: &Integer) -> Result<Rational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational::new(num.clone(), den.clone()))
    }
    fn to_prime(&self, a: &Rational, target: &PrimeField) -> Result<PrimeFieldElement> {
        let p = Integer::from(target.modulus());
        let den = a.denom().mod_floor(&p);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = a.numer().mod_floor(&p);
        let num = target.element(num.to_u64().expect("reduced"));
        let den = target.element(den.to_u64().expect("reduced"));
        Ok(num * den.inverse().expect("nonzero"))
    }
    fn descriptor(&self) -> String {
        "Q".to_string()
    }
    fn format_elem(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn is_negative(&self, a: &Rational) -> bool {
        a.is_negative()
    }
}

/// The prime field of residues modulo `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Checks primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p >= MODULUS_BOUND || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn modulus(&self) -> u64 {
        u64::from(self.p)
    }

    pub fn element(&self, v: u64) -> PrimeFieldElement {
        PrimeFieldElement {
            residue: (v % self.modulus()) as u32,
            modulus: self.p,
        }
    }

    pub fn element_i64(&self, v: i64) -> PrimeFieldElement {
        self.element(v.rem_euclid(self.modulus() as i64) as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = PrimeFieldElement> + '_ {
        (0..self.modulus()).map(move |v| self.element(v))
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// A residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElement {
    residue: u32,
    modulus: u32,
}

impl PrimeFieldElement {
    pub fn residue(&self) -> u64 {
        u64::from(self.residue)
    }

    pub fn modulus(&self) -> u64 {
        u64::from(self.modulus)
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let p = self.modulus();
        let mut base = self.residue();
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Self {
            residue: acc as u32,
            modulus: self.modulus,
        }
    }

    pub fn inverse(self) -> Option<Self> {
        (!self.is_zero()).then(|| self.pow(self.modulus() - 2))
    }

    fn with(self, residue: u64) -> Self {
        Self {
            residue: residue as u32,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl std::ops::Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.with((self.residue() + rhs.residue()) % self.modulus())
    }
}

impl std::ops::Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.with((self.residue() + self.modulus() - rhs.residue()) % self.modulus())
    }
}

impl std::ops::Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.with(self.residue() * rhs.residue() % self.modulus())
    }
}

impl std::ops::Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        self.with((self.modulus() - self.residue()) % self.modulus())
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        self.element(0)
    }
    fn one(&self) -> PrimeFieldElement {
        self.element(1)
    }
    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &PrimeFieldElement) -> bool {
        a.residue == 1
    }
    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        *a + *b
    }
    fn sub(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        *a - *b
    }
    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        *a * *b
    }
    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        -*a
    }
    fn inv(&self, a: &PrimeFieldElement) -> Option<PrimeFieldElement> {
        a.inverse()
    }
    fn from_ratio(&self, num: &Integer, den: &Integer) -> Result<PrimeFieldElement> {
        let p = Integer::from(self.modulus());
        let den = self.element(den.mod_floor(&p).to_u64().expect("reduced"));
        let num = self.element(num.mod_floor(&p).to_u64().expect("reduced"));
        Ok(num * den.inverse().ok_or(Error::DivisionByZero)?)
    }
    fn to_prime(&self, a: &PrimeFieldElement, target: &PrimeField) -> Result<PrimeFieldElement> {
        if target != self {
            return Err(Error::IncompatibleField(format!(
                "cannot map {} into {}",
                self.descriptor(),
                target.descriptor()
            )));
        }
        Ok(*a)
    }
    fn descriptor(&self) -> String {
        format!("Fp:{}", self.p)
    }
    fn format_elem(&self, a: &PrimeFieldElement) -> String {
        if self.is_negative(a) {
            format!("-{}", self.modulus() - a.residue())
        } else {
            a.residue().to_string()
        }
    }
    fn is_negative(&self, a: &PrimeFieldElement) -> bool {
        a.residue() > self.modulus() / 2
    }
}

/// All `r` in the field with `r^d = c`, by enumeration of every residue.
pub fn dth_roots(c: PrimeFieldElement, d: u64) -> Vec<PrimeFieldElement> {
    let field = PrimeField { p: c.modulus };
    field.elements().filter(|r| r.pow(d) == c).collect()
}
