//! Exact scalars: canonical residues in F_p (p prime, p < 2¹⁵) and
//! reduced fractions in ℚ with arbitrary-precision integers.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

use super::ExactError;

/// Largest admissible prime modulus (exclusive). All products of two
/// residues then fit comfortably in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 15;

/// The base field: F_p for a prime p, or the rationals ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Prime(u64),
    Rationals,
}

impl FieldDescriptor {
    /// Builds a prime-field descriptor, checking primality by trial division.
    pub fn prime(p: u64) -> Result<FieldDescriptor, ExactError> {
        if p >= MAX_MODULUS {
            return Err(ExactError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        Ok(FieldDescriptor::Prime(p))
    }

    pub fn rationals() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    /// p for F_p, 0 for ℚ.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime(p) => *p,
            FieldDescriptor::Rationals => 0,
        }
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldDescriptor::Prime(p) => Some(*p),
            FieldDescriptor::Rationals => None,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> FieldElement {
        match self {
            FieldDescriptor::Prime(p) => {
                let p = *p as i64;
                FieldElement::Fp {
                    value: n.rem_euclid(p) as u64,
                    modulus: p as u64,
                }
            }
            FieldDescriptor::Rationals => FieldElement::Rational(BigRational::from_integer(n.into())),
        }
    }

    /// Builds num/den exactly; errors if den is zero or vanishes mod p.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement, ExactError> {
        if den == 0 {
            return Err(ExactError::DivisionByZero);
        }
        match self {
            FieldDescriptor::Prime(_) => {
                let d = self.from_integer(den);
                Ok(self.from_integer(num) * d.inv()?)
            }
            FieldDescriptor::Rationals => Ok(FieldElement::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
        }
    }

    /// Iterates over all field elements (finite fields only), in residue order.
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElement>, ExactError> {
        match self {
            FieldDescriptor::Prime(p) => {
                let p = *p;
                Ok((0..p).map(move |v| FieldElement::Fp { value: v, modulus: p }))
            }
            FieldDescriptor::Rationals => Err(ExactError::EnumerationUnsupported),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Prime(p) => write!(f, "F_{p}"),
            FieldDescriptor::Rationals => write!(f, "Q"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar in canonical form: a residue `0..p-1`, or a reduced
/// fraction with positive denominator (the `BigRational` invariant).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Fp { value: u64, modulus: u64 },
    Rational(BigRational),
}

impl FieldElement {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            FieldElement::Fp { modulus, .. } => FieldDescriptor::Prime(*modulus),
            FieldElement::Rational(_) => FieldDescriptor::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Fp { value, .. } => *value == 0,
            FieldElement::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Fp { value, .. } => *value == 1,
            FieldElement::Rational(r) => r.is_one(),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldElement, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        match self {
            FieldElement::Fp { value, modulus } => Ok(FieldElement::Fp {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            }),
            FieldElement::Rational(r) => Ok(FieldElement::Rational(r.recip())),
        }
    }

    /// Exact division; errors when `rhs` is zero.
    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement, ExactError> {
        Ok(self.clone() * rhs.inv()?)
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p; p is prime and a ≠ 0 mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Fp { value, .. } => write!(f, "{value}"),
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

macro_rules! check_same_field {
    ($a:expr, $b:expr) => {
        debug_assert_eq!($a.field(), $b.field(), "mixed-field arithmetic");
    };
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        check_same_field!(self, rhs);
        match (self, rhs) {
            (FieldElement::Fp { value: a, modulus }, FieldElement::Fp { value: b, .. }) => {
                FieldElement::Fp { value: (a + b) % modulus, modulus }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            _ => unreachable!("mixed-field arithmetic"),
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        check_same_field!(self, rhs);
        match (self, rhs) {
            (FieldElement::Fp { value: a, modulus }, FieldElement::Fp { value: b, .. }) => {
                FieldElement::Fp { value: (a + modulus - b) % modulus, modulus }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            _ => unreachable!("mixed-field arithmetic"),
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        check_same_field!(self, rhs);
        match (self, rhs) {
            (FieldElement::Fp { value: a, modulus }, FieldElement::Fp { value: b, .. }) => {
                FieldElement::Fp { value: a * b % modulus, modulus }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            _ => unreachable!("mixed-field arithmetic"),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Fp { value, modulus } => FieldElement::Fp {
                value: (modulus - value) % modulus,
                modulus,
            },
            FieldElement::Rational(r) => FieldElement::Rational(-r),
        }
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.clone() + rhs.clone()
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.clone() - rhs.clone()
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.clone() * rhs.clone()
    }
}
