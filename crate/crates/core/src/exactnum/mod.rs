//! Exact scalars: big rationals, dense polynomials in one symbol and
//! reduced rational functions, plus their text form.

mod field;
mod ratfunc;
pub mod text;
mod unipoly;

pub use field::{parse_rat, rat, rat_int, render_rat, Field, Ring};
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;

/// Arbitrary-precision rational number in lowest terms.
pub type Rat = num_rational::BigRational;
