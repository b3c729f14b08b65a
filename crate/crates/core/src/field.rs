//! Coefficient fields: exact rationals and prime fields.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Run-time choice of the base field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum FieldConfig {
    #[default]
    Rationals,
    Prime(u64),
}

impl FieldConfig {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("modulus {p} too large")));
        }
        Ok(FieldConfig::Prime(p))
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldConfig::Rationals => 0,
            FieldConfig::Prime(p) => *p,
        }
    }

    /// Whether the integer `v` maps to zero in the field.
    pub fn integer_is_zero(&self, v: i64) -> bool {
        match self {
            FieldConfig::Rationals => v == 0,
            FieldConfig::Prime(p) => v.rem_euclid(*p as i64) == 0,
        }
    }
}

impl FromStr for FieldConfig {
    type Err = Error;

    /// Accepts `q`, `f2`, or `fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" => Ok(FieldConfig::Rationals),
            "f2" | "F2" => Ok(FieldConfig::Prime(2)),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidField(format!("unrecognized field `{other}`")))?;
                FieldConfig::prime(p)
            }
        }
    }
}

impl std::fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldConfig::Rationals => write!(f, "q"),
            FieldConfig::Prime(2) => write!(f, "f2"),
            FieldConfig::Prime(p) => write!(f, "fp:{p}"),
        }
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

/// Field arithmetic carried by a context value so prime fields need no
/// per-element modulus.
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn config(&self) -> FieldConfig;
    fn render(&self, a: &Self::Elem) -> String;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Rationals
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.to_integer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", -a.numer(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p) && p <= u32::MAX as u64, "bad modulus {p}");
        PrimeField { p }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat
        let mut base = *a;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Prime(self.p)
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Runs `$body` with `$f` bound to the concrete field selected by `$cfg`.
#[macro_export]
macro_rules! with_field {
    ($cfg:expr, $f:ident => $body:expr) => {
        match $cfg {
            $crate::field::FieldConfig::Rationals => {
                let $f = $crate::field::Rationals;
                $body
            }
            $crate::field::FieldConfig::Prime(p) => {
                let $f = $crate::field::PrimeField::new(p);
                $body
            }
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_configs() {
        assert_eq!("q".parse::<FieldConfig>().unwrap(), FieldConfig::Rationals);
        assert_eq!("f2".parse::<FieldConfig>().unwrap(), FieldConfig::Prime(2));
        assert_eq!(
            "fp:7".parse::<FieldConfig>().unwrap(),
            FieldConfig::Prime(7)
        );
        assert!("fp:8".parse::<FieldConfig>().is_err());
        assert!("r".parse::<FieldConfig>().is_err());
        assert_eq!(FieldConfig::Prime(7).to_string(), "fp:7");
    }

    #[test]
    fn prime_inverse() {
        let f = PrimeField::new(101);
        for a in 1..101u64 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 100);
    }

    #[test]
    fn integer_zero_test() {
        assert!(FieldConfig::Prime(2).integer_is_zero(-4));
        assert!(!FieldConfig::Rationals.integer_is_zero(2));
    }
}
