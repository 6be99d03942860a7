use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// An exact field usable as the scalar type of every matrix in the crate.
///
/// Implemented for [`BigRational`] (the default, characteristic zero) and for
/// [`PrimeField`], residues modulo a session-wide prime.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    /// 0 for the rationals.
    fn characteristic() -> u64;

    fn inverse(&self) -> Self {
        Self::one() / self.clone()
    }

    /// `self -= factor * other`, the inner step of every elimination.
    fn sub_mul_assign(&mut self, factor: &Self, other: &Self);

    /// `self *= factor`
    fn mul_assign_ref(&mut self, factor: &Self);
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn characteristic() -> u64 {
        0
    }

    fn inverse(&self) -> Self {
        self.recip()
    }

    fn sub_mul_assign(&mut self, factor: &Self, other: &Self) {
        *self -= factor * other;
    }

    fn mul_assign_ref(&mut self, factor: &Self) {
        *self *= factor;
    }
}

/// Default modulus for [`PrimeField`].
pub const DEFAULT_PRIME: u64 = 1_000_003;

static MODULUS: OnceLock<u64> = OnceLock::new();

/// Residue class modulo the session prime (see [`PrimeField::configure`]).
///
/// Values are kept canonical in `[0, p)`. The prime is fixed once per process;
/// the first arithmetic use freezes it at [`DEFAULT_PRIME`] unless
/// `configure` ran earlier.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField(u64);

impl PrimeField {
    pub fn modulus() -> u64 {
        *MODULUS.get_or_init(|| DEFAULT_PRIME)
    }

    /// Fix the session prime. Succeeds if `p` is already the active modulus.
    pub fn configure(p: u64) -> Result<(), Error> {
        if p <= 1_000_000 || p >= (1 << 32) || !is_prime(p) {
            return Err(Error::InvalidInput(format!(
                "prime modulus must be a prime in (10^6, 2^32), got {p}"
            )));
        }
        let active = *MODULUS.get_or_init(|| p);
        if active == p {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "prime modulus already fixed to {active} for this session"
            )))
        }
    }

    pub fn new(v: i64) -> Self {
        let p = Self::modulus() as i64;
        PrimeField(v.rem_euclid(p) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let p = Self::modulus();
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        PrimeField(acc)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Zero for PrimeField {
    fn zero() -> Self {
        PrimeField(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for PrimeField {
    fn one() -> Self {
        PrimeField(1)
    }
}

impl Add for PrimeField {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        PrimeField((self.0 + rhs.0) % Self::modulus())
    }
}

impl Sub for PrimeField {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let p = Self::modulus();
        PrimeField((self.0 + p - rhs.0) % p)
    }
}

impl Mul for PrimeField {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        PrimeField(self.0 * rhs.0 % Self::modulus())
    }
}

impl Div for PrimeField {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero in prime field");
        self * rhs.pow(Self::modulus() - 2)
    }
}

impl Neg for PrimeField {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            PrimeField(Self::modulus() - self.0)
        }
    }
}

impl Field for PrimeField {
    fn from_i64(v: i64) -> Self {
        PrimeField::new(v)
    }

    fn characteristic() -> u64 {
        Self::modulus()
    }

    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in prime field");
        self.pow(Self::modulus() - 2)
    }

    fn sub_mul_assign(&mut self, factor: &Self, other: &Self) {
        *self = *self - *factor * *other;
    }

    fn mul_assign_ref(&mut self, factor: &Self) {
        *self = *self * *factor;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let x = BigRational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(x.numer(), &BigInt::from(-2));
        assert_eq!(x.denom(), &BigInt::from(3));
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = PrimeField::new(-1);
        assert_eq!(a.value(), PrimeField::modulus() - 1);
        let b = PrimeField::new(7);
        assert_eq!((b * b.inverse()).value(), 1);
        assert_eq!((a + PrimeField::one()).value(), 0);
        assert_eq!(-PrimeField::zero(), PrimeField::zero());
    }

    #[test]
    fn configure_rejects_small_or_composite() {
        assert!(PrimeField::configure(101).is_err());
        assert!(PrimeField::configure(1_000_001).is_err());
        // the default is always accepted
        assert!(PrimeField::configure(DEFAULT_PRIME).is_ok());
    }
}
