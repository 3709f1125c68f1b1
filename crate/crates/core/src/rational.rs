//! Exact rationals and Cartan-subalgebra vectors.
//!
//! Every rational crossing a text boundary is written as `p/q` with
//! `gcd(p, q) = 1` and `q > 0`, including integers (`2/1`, `0/1`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational used throughout the crate.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// Canonical `p/q` form.
pub fn format_rational(q: &Rational) -> String {
    // BigRational is always kept reduced with a positive denominator.
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p`, `p/q`, with optional sign; whitespace around the token is ignored.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let t = token.trim();
    let bad = || Error::InvalidRational(token.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn serialize_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub(crate) fn deserialize_rational<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).map_err(serde::de::Error::custom)
}

pub(crate) fn serialize_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

pub(crate) mod opt_rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&format_rational(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_rational(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// An element of the real Cartan subalgebra in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanVector(pub Vec<Rational>);

impl CartanVector {
    pub fn zero(rank: usize) -> Self {
        CartanVector(vec![Rational::zero(); rank])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        CartanVector(coords.iter().map(|&c| integer(c)).collect())
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        CartanVector(coords.iter().map(|&(p, q)| rational(p, q)).collect())
    }

    /// Parses a comma-separated list such as `2/3,1/3`.
    pub fn parse(list: &str) -> Result<Self> {
        list.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(CartanVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        CartanVector(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn neg(&self) -> Self {
        CartanVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl fmt::Display for CartanVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl FromStr for CartanVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CartanVector::parse(s)
    }
}

impl Serialize for CartanVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_rationals(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for CartanVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(CartanVector)
            .map_err(serde::de::Error::custom)
    }
}

/// Solves `m x = b` exactly; `m` must be square and invertible.
pub(crate) fn solve_exact(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for entry in aug[col].iter_mut() {
            *entry *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &aug[col][c];
                    aug[r][c] -= delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap_or_else(Rational::one)).collect())
}

pub(crate) fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
