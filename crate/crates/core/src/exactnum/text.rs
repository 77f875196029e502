//! Text form of [`UniPoly`] and [`RatFunc`] in a caller-named symbol.
//!
//! ```text
//! poly    := "0" | ["-"] term { (" + " | " - ") term }
//! term    := coef | [coef "*"] symbol ["^" exponent]
//! coef    := digits ["/" digits]          (positive, reduced)
//! ratfunc := poly | "(" poly ") / (" poly ")"
//! ```
//!
//! Terms are rendered by descending exponent, a unit coefficient is
//! omitted in front of the symbol, `^1` is never written, and a
//! denominator of `1` is dropped. The parser accepts any whitespace and
//! unsorted or repeated terms; rendering is canonical, so
//! `render(parse(render(f))) == render(f)` byte for byte.

use num_traits::{One, Signed, Zero};

use super::field::{parse_rat, render_rat};
use super::{Rat, RatFunc, UniPoly};
use crate::error::{Error, Result};

pub fn render_poly(p: &UniPoly, symbol: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if k == 0 {
            out.push_str(&render_rat(&a));
            continue;
        }
        if !a.is_one() {
            out.push_str(&render_rat(&a));
            out.push('*');
        }
        out.push_str(symbol);
        if k > 1 {
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
    out
}

pub fn parse_poly(s: &str, symbol: &str) -> Result<UniPoly> {
    let err = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in compact.chars().enumerate() {
        if ch == '+' || ch == '-' {
            if i == 0 {
                neg = ch == '-';
                continue;
            }
            if cur.is_empty() {
                return Err(err("dangling sign"));
            }
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(err("dangling sign"));
    }
    terms.push((neg, cur));

    let mut acc = UniPoly::zero();
    for (neg, t) in terms {
        let (coef, exp) = parse_term(&t, symbol).ok_or_else(|| err("bad term"))?;
        let coef = if neg { -coef } else { coef };
        acc = acc + UniPoly::monomial(coef, exp);
    }
    Ok(acc)
}

fn parse_term(t: &str, symbol: &str) -> Option<(Rat, usize)> {
    let (coef_part, sym_part) = match t.find(symbol) {
        None => return parse_rat(t).map(|c| (c, 0)),
        Some(0) => ("", t),
        Some(pos) => {
            let head = &t[..pos];
            (head.strip_suffix('*')?, &t[pos..])
        }
    };
    let coef = if coef_part.is_empty() {
        Rat::one()
    } else {
        parse_rat(coef_part)?
    };
    let rest = &sym_part[symbol.len()..];
    let exp = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')?.parse().ok()?
    };
    Some((coef, exp))
}

pub fn render_ratfunc(f: &RatFunc, symbol: &str) -> String {
    if f.den().is_one() {
        render_poly(f.num(), symbol)
    } else {
        format!(
            "({}) / ({})",
            render_poly(f.num(), symbol),
            render_poly(f.den(), symbol)
        )
    }
}

pub fn parse_ratfunc(s: &str, symbol: &str) -> Result<RatFunc> {
    let t = s.trim();
    if let Some(inner) = t.strip_prefix('(') {
        let close = inner
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {s:?}")))?;
        let num = parse_poly(&inner[..close], symbol)?;
        let rest = inner[close + 1..].trim();
        let rest = rest
            .strip_prefix('/')
            .ok_or_else(|| Error::Parse(format!("expected '/' in {s:?}")))?
            .trim();
        let den_src = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected parenthesised denominator in {s:?}")))?;
        let den = parse_poly(den_src, symbol)?;
        return RatFunc::new(num, den);
    }
    Ok(RatFunc::from_poly(parse_poly(t, symbol)?))
}
