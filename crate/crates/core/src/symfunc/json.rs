//! JSON form of a [`SymPoly`]:
//!
//! ```json
//! {"schema": 1, "n": 4, "symbol": "theta",
//!  "terms": [{"partition": [2,0,0,0], "num": "2*theta", "den": "theta + 1"}]}
//! ```
//!
//! `num` and `den` use the text grammar of [`crate::exactnum::text`] in the
//! named symbol; for rational coefficients the symbol is `"none"` and both
//! are integers. Terms are listed in reverse-lexicographic partition order.

use serde_json::{json, Map, Value};

use super::SymPoly;
use crate::error::{Error, Result};
use crate::exactnum::text::{parse_poly, render_poly};
use crate::exactnum::{parse_rat, Rat, RatFunc, Ring};
use crate::partitions::Partition;

pub const SCHEMA_VERSION: u64 = 1;

/// Coefficients with a `num`/`den` string form.
pub trait JsonCoeff: Ring {
    fn to_num_den(&self, symbol: &str) -> (String, String);
    fn from_num_den(num: &str, den: &str, symbol: &str) -> Result<Self>;
}

impl JsonCoeff for Rat {
    fn to_num_den(&self, _symbol: &str) -> (String, String) {
        (self.numer().to_string(), self.denom().to_string())
    }

    fn from_num_den(num: &str, den: &str, _symbol: &str) -> Result<Self> {
        parse_rat(&format!("{num}/{den}")).ok_or_else(|| Error::Parse(format!("bad rational {num}/{den}")))
    }
}

impl JsonCoeff for RatFunc {
    fn to_num_den(&self, symbol: &str) -> (String, String) {
        (render_poly(self.num(), symbol), render_poly(self.den(), symbol))
    }

    fn from_num_den(num: &str, den: &str, symbol: &str) -> Result<Self> {
        RatFunc::new(parse_poly(num, symbol)?, parse_poly(den, symbol)?)
    }
}

/// Serializes `f`; `extra` fields (e.g. `"t0"`) are added to the object.
pub fn sympoly_to_json<F: JsonCoeff>(f: &SymPoly<F>, symbol: &str, extra: &[(&str, Value)]) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .rev()
        .map(|(l, c)| {
            let (num, den) = c.to_num_den(symbol);
            json!({"partition": l.parts(), "num": num, "den": den})
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("schema".into(), json!(SCHEMA_VERSION));
    obj.insert("n".into(), json!(f.n()));
    obj.insert("symbol".into(), json!(symbol));
    for (k, v) in extra {
        obj.insert((*k).into(), v.clone());
    }
    obj.insert("terms".into(), Value::Array(terms));
    Value::Object(obj)
}

pub fn sympoly_from_json<F: JsonCoeff>(v: &Value) -> Result<SymPoly<F>> {
    let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
    let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
    let symbol = v["symbol"].as_str().ok_or_else(|| bad("missing symbol"))?;
    let terms = v["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
    let mut out = SymPoly::zero(n);
    for t in terms {
        let parts: Vec<u32> = serde_json::from_value(t["partition"].clone()).map_err(|e| bad(&e.to_string()))?;
        let l = Partition::new(parts)?;
        if l.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: l.len(),
            });
        }
        let num = t["num"].as_str().ok_or_else(|| bad("missing num"))?;
        let den = t["den"].as_str().ok_or_else(|| bad("missing den"))?;
        out.add_term(l, F::from_num_den(num, den, symbol)?);
    }
    Ok(out)
}
