use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::Ring;

/// Sparse polynomial in a fixed number of variables, keyed by exponent
/// vector. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<F> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Ring> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    /// The variable `x_i`, 0-indexed.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, F::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, F> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Vec<u32>, F> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: F) {
        assert_eq!(e.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c))
                .collect(),
        }
    }

    pub fn map_coeffs<G: Ring>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Multiplies every coefficient by `f(exponent)`.
    pub fn map_terms(&self, f: impl Fn(&[u32], &F) -> F) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(e, c))))
    }

    /// `x_i ↦ x_i + c`.
    pub fn shift_var(&self, i: usize, c: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            let k = e[i];
            // (x_i + c)^k = Σ binom(k, r) c^(k-r) x_i^r
            let mut binom = F::one();
            let mut cpow: Vec<F> = Vec::with_capacity(k as usize + 1);
            cpow.push(F::one());
            for _ in 0..k {
                let last = cpow.last().unwrap().clone();
                cpow.push(last * c);
            }
            for r in (0..=k).rev() {
                let mut ne = e.clone();
                ne[i] = r;
                let coef = x.clone() * &binom * &cpow[(k - r) as usize];
                out.add_term(ne, coef);
                if r > 0 {
                    // binom(k, r-1) = binom(k, r) * r / (k - r + 1)
                    binom = binom * &F::from_int(r as i64);
                    binom = div_small(binom, (k - r + 1) as i64);
                }
            }
        }
        out
    }

    /// Exact quotient by `x_i - c·x_j`, by synthetic division in `x_i`.
    pub fn div_linear(&self, i: usize, j: usize, c: &F) -> Result<Self> {
        assert_ne!(i, j);
        // group terms by the exponent vector with x_i removed
        let mut rows: BTreeMap<Vec<u32>, BTreeMap<u32, F>> = BTreeMap::new();
        for (e, x) in &self.terms {
            let mut rest = e.clone();
            let k = rest[i];
            rest[i] = 0;
            rows.entry(rest).or_default().insert(k, x.clone());
        }
        // f = Σ_k f_k x_i^k with f_k ∈ F[others]; q_{k-1} = f_k + c x_j q_k
        let mut by_power: BTreeMap<u32, MultiPoly<F>> = BTreeMap::new();
        for (rest, ks) in rows {
            for (k, x) in ks {
                by_power
                    .entry(k)
                    .or_insert_with(|| Self::zero(self.nvars))
                    .add_term(rest.clone(), x);
            }
        }
        let Some(&top) = by_power.keys().next_back() else {
            return Ok(Self::zero(self.nvars));
        };
        let mut quotient = Self::zero(self.nvars);
        let mut carry = Self::zero(self.nvars);
        for k in (0..=top).rev() {
            let fk = by_power.remove(&k).unwrap_or_else(|| Self::zero(self.nvars));
            let cur = &fk + &carry;
            if k == 0 {
                if !cur.is_zero() {
                    return Err(Error::NonExactDivision);
                }
                break;
            }
            // cur is the coefficient q_{k-1}
            for (e, x) in cur.terms.iter() {
                let mut ne = e.clone();
                ne[i] = k - 1;
                quotient.add_term(ne, x.clone());
            }
            carry = cur.mul_var(j).scale(c);
        }
        Ok(quotient)
    }

    fn mul_var(&self, j: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    let mut ne = e.clone();
                    ne[j] += 1;
                    (ne, x.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars);
        let mut pows: Vec<Vec<F>> = point.iter().map(|p| vec![F::one(), p.clone()]).collect();
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in e.iter().enumerate() {
                while pows[v].len() <= k as usize {
                    let next = pows[v].last().unwrap().clone() * &point[v];
                    pows[v].push(next);
                }
                if k > 0 {
                    term = term * &pows[v][k as usize];
                }
            }
            acc = acc + &term;
        }
        acc
    }

    fn add_impl(&self, o: &Self, sign: bool) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), if sign { c.clone() } else { -c.clone() });
        }
        out
    }

    fn mul_impl(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb);
            }
        }
        out
    }
}

fn div_small<F: Ring>(x: F, d: i64) -> F {
    if d == 1 {
        return x;
    }
    x * &F::from_rat(&crate::exactnum::rat(1, d))
}

impl<'a, F: Ring> Add<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, o: &MultiPoly<F>) -> MultiPoly<F> {
        self.add_impl(o, true)
    }
}

impl<'a, F: Ring> Sub<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, o: &MultiPoly<F>) -> MultiPoly<F> {
        self.add_impl(o, false)
    }
}

impl<'a, F: Ring> Mul<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, o: &MultiPoly<F>) -> MultiPoly<F> {
        self.mul_impl(o)
    }
}

impl<F: Ring> Neg for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        self.scale(&-F::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int, Rat};

    fn x(i: usize) -> MultiPoly<Rat> {
        MultiPoly::var(3, i)
    }

    #[test]
    fn exact_division_by_linear_factor() {
        let t = rat_int(2);
        let factor = &x(0) - &x(1).scale(&t);
        let g = &(&x(0) + &x(2)) * &x(1);
        let f = &factor * &g;
        assert_eq!(f.div_linear(0, 1, &t).unwrap(), g);
        assert_eq!(x(0).div_linear(0, 1, &t), Err(Error::NonExactDivision));
    }

    #[test]
    fn shift_expands_binomially() {
        let f = x(0).pow(3);
        let g = f.shift_var(0, &rat(-1, 1));
        let expected = (&x(0) - &MultiPoly::one(3)).pow(3);
        assert_eq!(g, expected);
        assert_eq!(g.eval(&[rat_int(3), rat_int(0), rat_int(0)]), rat_int(8));
    }
}
