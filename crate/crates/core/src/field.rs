//! Exact coefficient fields: prime fields `F_p` with `p < 2^31` and the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// A prime modulus, validated at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&p) {
            return Err(Error::usage(format!(
                "modulus {p} outside the supported range [2, 2^31)"
            )));
        }
        if !is_prime(p) {
            return Err(Error::usage(format!("modulus {p} is not prime")));
        }
        Ok(Modulus(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Prime(Modulus),
    Rationals,
}

impl Field {
    /// `F_p`; fails unless `p` is a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        Modulus::new(p).map(Field::Prime)
    }

    /// Parses `Q` or `F<p>`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = t.strip_prefix('F') {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::usage(format!("bad field {text:?}, expected Q or F<p>")))?;
            return Field::prime(p);
        }
        Err(Error::usage(format!(
            "bad field {text:?}, expected Q or F<p>"
        )))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime(m) => m.get(),
            Field::Rationals => 0,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            Field::Prime(m) => {
                let p = m.get() as i64;
                FieldElement(Repr::Residue {
                    value: n.rem_euclid(p) as u32,
                    modulus: m.get(),
                })
            }
            Field::Rationals => FieldElement(Repr::Rational(BigRational::from_integer(n.into()))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            Field::Prime(m) => {
                let p = BigInt::from(m.get());
                let r = ((n % &p) + &p) % &p;
                FieldElement(Repr::Residue {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: m.get(),
                })
            }
            Field::Rationals => FieldElement(Repr::Rational(BigRational::from_integer(n.clone()))),
        }
    }

    /// The element `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let d = self.from_bigint(den);
        let n = self.from_bigint(num);
        n.try_div(&d)
    }

    /// A uniformly random residue (prime fields) or a small random fraction (rationals).
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match self {
            Field::Prime(m) => FieldElement(Repr::Residue {
                value: rng.gen_range(0..m.get()),
                modulus: m.get(),
            }),
            Field::Rationals => {
                let num: i64 = rng.gen_range(-20..=20);
                let den: i64 = rng.gen_range(1..=9);
                FieldElement(Repr::Rational(BigRational::new(num.into(), den.into())))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(m) => write!(f, "F{}", m.get()),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Residue { value: u32, modulus: u32 },
    Rational(BigRational),
}

/// An element of a [`Field`]. Residues are reduced; rationals are in lowest
/// terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement(Repr);

impl FieldElement {
    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Residue { modulus, .. } => Field::Prime(Modulus(*modulus)),
            Repr::Rational(_) => Field::Rationals,
        }
    }

    pub fn residue(&self) -> Option<u32> {
        match &self.0 {
            Repr::Residue { value, .. } => Some(*value),
            Repr::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Residue { value, .. } => *value == 0,
            Repr::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Residue { value, .. } => *value == 1,
            Repr::Rational(q) => q.is_one(),
        }
    }

    /// Whether the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Residue { .. } => false,
            Repr::Rational(q) => q.is_negative(),
        }
    }

    pub fn abs(&self) -> FieldElement {
        match &self.0 {
            Repr::Residue { .. } => self.clone(),
            Repr::Rational(q) => FieldElement(Repr::Rational(q.abs())),
        }
    }

    fn mismatch(&self, other: &FieldElement) -> Error {
        Error::usage(format!(
            "mixed-field operands: {} and {}",
            self.field(),
            other.field()
        ))
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        match (&self.0, &other.0) {
            (
                Repr::Residue {
                    value: a,
                    modulus: p,
                },
                Repr::Residue {
                    value: b,
                    modulus: q,
                },
            ) if p == q => {
                let s = (*a as u64 + *b as u64) % *p as u64;
                Ok(FieldElement(Repr::Residue {
                    value: s as u32,
                    modulus: *p,
                }))
            }
            (Repr::Rational(a), Repr::Rational(b)) => Ok(FieldElement(Repr::Rational(a + b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        match (&self.0, &other.0) {
            (
                Repr::Residue {
                    value: a,
                    modulus: p,
                },
                Repr::Residue {
                    value: b,
                    modulus: q,
                },
            ) if p == q => {
                let s = (*a as u64 * *b as u64) % *p as u64;
                Ok(FieldElement(Repr::Residue {
                    value: s as u32,
                    modulus: *p,
                }))
            }
            (Repr::Rational(a), Repr::Rational(b)) => Ok(FieldElement(Repr::Rational(a * b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> FieldElement {
        match &self.0 {
            Repr::Residue { value, modulus } => FieldElement(Repr::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            }),
            Repr::Rational(q) => FieldElement(Repr::Rational(-q)),
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::Arithmetic("inversion of zero".into()));
        }
        match &self.0 {
            Repr::Residue { value, modulus } => {
                // extended Euclid on (value, modulus)
                let (mut r0, mut r1) = (*modulus as i64, *value as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                Ok(FieldElement(Repr::Residue {
                    value: t0.rem_euclid(*modulus as i64) as u32,
                    modulus: *modulus,
                }))
            }
            Repr::Rational(q) => Ok(FieldElement(Repr::Rational(q.recip()))),
        }
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.try_mul(&other.inv()?)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Residue { value, .. } => write!(f, "{value}"),
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

// Operator forms panic on mixed fields. Callers inside the kernel check ring
// compatibility before combining coefficients.

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.try_add(rhs).expect("operands from the same field")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.try_sub(rhs).expect("operands from the same field")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.try_mul(rhs).expect("operands from the same field")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}
