use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{render_rat, Field, Ring};
use super::{Rat, UniPoly};
use crate::error::{Error, Result};

/// Reduced quotient `num / den` of polynomials in one symbol.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic, so equal
/// functions have identical fields. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Builds the canonical form of `num / den`.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = UniPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        let lead = den.lead().unwrap().clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn symbol() -> Self {
        Self::from_poly(UniPoly::symbol())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_constant() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Value at `a` when the denominator does not vanish there.
    pub fn eval(&self, a: &Rat) -> Option<Rat> {
        let d = self.den.eval(a);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(a) / d)
        }
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<RatFunc> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul_impl(&o.recip_unchecked()))
    }

    fn recip_unchecked(&self) -> RatFunc {
        Self::reduce(self.den.clone(), self.num.clone())
    }

    /// Exponent `m` with `self = (T - a)^m · g`, `g(a)` finite and nonzero.
    pub fn multiplicity_at(&self, a: &Rat) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let up = self.num.root_multiplicity(a) as i64;
        let down = self.den.root_multiplicity(a) as i64;
        Ok(up - down)
    }

    /// `lim_{T→a}` of the function, after cancelling common `(T - a)` factors.
    ///
    /// The canonical form is already reduced, so at most one of numerator
    /// and denominator vanishes at `a`.
    pub fn limit_at(&self, a: &Rat) -> Result<Rat> {
        if self.is_zero() {
            return Ok(Rat::zero());
        }
        if self.multiplicity_at(a)? < 0 {
            return Err(Error::PoleAtPoint {
                point: render_rat(a),
            });
        }
        let d = self.den.eval(a);
        Ok(self.num.eval(a) / d)
    }

    fn add_impl(&self, o: &RatFunc, sign: bool) -> RatFunc {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign { o.clone() } else { -o.clone() };
        }
        let combine = |a: UniPoly, b: UniPoly| if sign { a + b } else { a - b };
        if self.den == o.den {
            return Self::reduce(combine(self.num.clone(), o.num.clone()), self.den.clone());
        }
        if self.den.is_constant() || o.den.is_constant() {
            let num = combine(&self.num * &o.den, &o.num * &self.den);
            let den = &self.den * &o.den;
            return Self::reduce(num, den);
        }
        let g = UniPoly::gcd(&self.den, &o.den);
        let a_cof = self.den.div_exact(&g).unwrap();
        let b_cof = o.den.div_exact(&g).unwrap();
        let num = combine(&self.num * &b_cof, &o.num * &a_cof);
        let den = &a_cof * &o.den;
        Self::reduce(num, den)
    }

    fn mul_impl(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g1 = UniPoly::gcd(&self.num, &o.den);
        let g2 = UniPoly::gcd(&o.num, &self.den);
        let (an, bd) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), o.den.div_exact(&g1).unwrap())
        };
        let (bn, ad) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        let num = an * &bn;
        let den = ad * &bd;
        let lead = den.lead().unwrap().clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $method(self, o: RatFunc) -> RatFunc {
                $body(&self, &o)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, o: &RatFunc) -> RatFunc {
                $body(&self, o)
            }
        }
        impl<'a, 'b> $tr<&'b RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $method(self, o: &RatFunc) -> RatFunc {
                $body(self, o)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFunc, b: &RatFunc| a.add_impl(b, true));
forward_binop!(Sub, sub, |a: &RatFunc, b: &RatFunc| a.add_impl(b, false));
forward_binop!(Mul, mul, |a: &RatFunc, b: &RatFunc| a.mul_impl(b));
forward_binop!(Div, div, |a: &RatFunc, b: &RatFunc| a
    .checked_div(b)
    .expect("division by the zero function"));

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Ring for RatFunc {
    fn from_rat(r: &Rat) -> Self {
        Self::constant(r.clone())
    }

    fn weight(&self) -> usize {
        self.num.coeffs().len() + self.den.coeffs().len()
    }
}

impl Field for RatFunc {}

impl From<UniPoly> for RatFunc {
    fn from(p: UniPoly) -> Self {
        Self::from_poly(p)
    }
}
