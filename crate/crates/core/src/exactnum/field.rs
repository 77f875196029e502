//! Scalar traits shared by every polynomial engine in the crate.
//!
//! The symmetric-function code, the eigenvector solvers and the linear
//! algebra are written once against [`Ring`] / [`Field`]. Concrete
//! coefficient domains are ℚ ([`Rat`]), ℚ[T] ([`UniPoly`](super::UniPoly))
//! and ℚ(T) ([`RatFunc`](super::RatFunc)).

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rat;

/// Commutative ring with unit containing ℚ.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rat(r: &Rat) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_rat(&Rat::from_integer(BigInt::from(v)))
    }

    /// Rough size of the element, used to pick cheap pivots during elimination.
    fn weight(&self) -> usize {
        0
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A [`Ring`] where every nonzero element is invertible.
///
/// `Div` panics on a zero divisor, like integer division.
pub trait Field: Ring + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self
    }
}

impl Ring for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Field for Rat {}

/// `p/q` constructor for small literals.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses `"p"` or `"p/q"`, with optional surrounding whitespace.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// Canonical `p` or `p/q` rendering.
pub fn render_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
