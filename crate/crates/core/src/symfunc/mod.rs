//! Symmetric polynomials in `n` variables in the monomial basis `{m_λ}`,
//! over any coefficient ring.

mod json;
mod multipoly;
mod pattern;

pub use json::{sympoly_from_json, sympoly_to_json, JsonCoeff};
pub use multipoly::MultiPoly;
pub use pattern::{substitute_pattern, Pattern};

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::{render_rat, Rat, RatFunc, Ring};
use crate::partitions::{distinct_permutations, Partition};

/// `Σ c_λ m_λ` in `n` variables. Keys all have length `n`; zero
/// coefficients are never stored. Terms of different weights may coexist.
#[derive(Clone, PartialEq, Debug)]
pub struct SymPoly<F> {
    n: usize,
    terms: BTreeMap<Partition, F>,
}

/// An e-monomial `e_{k_1} e_{k_2} ⋯`, indices in decreasing order.
pub type EMonomial = Vec<u32>;

impl<F: Ring> SymPoly<F> {
    pub fn zero(n: usize) -> Self {
        SymPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(Partition::zero(n))
    }

    pub fn constant(n: usize, c: F) -> Self {
        let mut s = Self::zero(n);
        s.add_term(Partition::zero(n), c);
        s
    }

    /// `m_λ`.
    pub fn monomial(lambda: Partition) -> Self {
        let mut s = Self::zero(lambda.len());
        s.add_term(lambda, F::one());
        s
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Partition, F)>) -> Self {
        let mut s = Self::zero(n);
        for (l, c) in terms {
            s.add_term(l, c);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, F> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> F {
        self.terms.get(lambda).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: F) {
        assert_eq!(lambda.len(), self.n, "partition length must equal n");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut w = self.terms.keys().map(Partition::weight);
        match w.next() {
            None => true,
            Some(first) => w.all(|x| x == first),
        }
    }

    /// Terms of weight exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Self {
        Self::from_terms(
            self.n,
            self.terms
                .iter()
                .filter(|(l, _)| l.weight() == d)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(l, x)| (l.clone(), x.clone() * c))
                .collect(),
        }
    }

    pub fn map_coeffs<G: Ring>(&self, f: impl Fn(&F) -> G) -> SymPoly<G> {
        SymPoly::from_terms(self.n, self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    pub fn try_map_coeffs<G: Ring>(
        &self,
        mut f: impl FnMut(&Partition, &F) -> Result<G>,
    ) -> Result<SymPoly<G>> {
        let mut out = SymPoly::zero(self.n);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(l, c)?);
        }
        Ok(out)
    }

    /// Sum over each `m_λ` of its distinct monomials.
    pub fn expand(&self) -> MultiPoly<F> {
        let mut out = MultiPoly::zero(self.n);
        for (l, c) in &self.terms {
            for e in distinct_permutations(l.parts()) {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Inverse of [`expand`](Self::expand); fails with
    /// [`Error::NotSymmetric`] when some transposition changes `g`.
    pub fn collect(g: &MultiPoly<F>) -> Result<Self> {
        let n = g.nvars();
        let mut out = Self::zero(n);
        let mut seen: BTreeMap<Partition, usize> = BTreeMap::new();
        for (e, c) in g.terms() {
            let l = Partition::from_unsorted(e.clone());
            if g.coeff(l.parts()) != *c {
                return Err(Error::NotSymmetric);
            }
            *seen.entry(l).or_default() += 1;
        }
        for (l, count) in seen {
            if count as u128 != orbit_size(&l) {
                return Err(Error::NotSymmetric);
            }
            let c = g.coeff(l.parts());
            out.add_term(l, c);
        }
        Ok(out)
    }

    /// Product in the m-basis: the coefficient of `m_ν` in `m_λ m_μ`
    /// counts pairs of rearrangements `α + β = ν`.
    pub fn multiply(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let mut out = Self::zero(self.n);
        let perms: BTreeMap<&Partition, Vec<Vec<u32>>> = o
            .terms
            .keys()
            .map(|l| (l, distinct_permutations(l.parts())))
            .collect();
        for (alpha, ca) in self.expand().terms() {
            for (mu, cb) in &o.terms {
                for beta in &perms[mu] {
                    let s: Vec<u32> = alpha.iter().zip(beta).map(|(a, b)| a + b).collect();
                    if s.windows(2).all(|w| w[0] >= w[1]) {
                        out.add_term(Partition::from_unsorted(s), ca.clone() * cb);
                    }
                }
            }
        }
        out
    }

    /// `e_k = m_{(1^k)}`.
    pub fn elementary(k: usize, n: usize) -> Self {
        assert!(k <= n, "e_{k} needs k <= n = {n}");
        let mut parts = vec![1; k];
        parts.resize(n, 0);
        Self::monomial(Partition::new(parts).unwrap())
    }

    /// `Π e_{k_i}`.
    pub fn e_product(ks: &[u32], n: usize) -> Self {
        ks.iter().fold(Self::one(n), |acc, &k| {
            acc.multiply(&Self::elementary(k as usize, n))
        })
    }

    /// Expansion in products of elementary polynomials. The leading term
    /// `m_λ` of largest weight, lexicographically largest, is peeled off
    /// with `e_{λ'}` until nothing remains.
    pub fn to_elementary_basis(&self) -> BTreeMap<EMonomial, F> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        let mut cache: BTreeMap<EMonomial, Self> = BTreeMap::new();
        while let Some(lead) = rest.leading_term() {
            let c = rest.coeff(&lead);
            let key: EMonomial = lead.conjugate();
            let e = cache
                .entry(key.clone())
                .or_insert_with(|| Self::e_product(&key, self.n));
            rest = &rest - &e.scale(&c);
            out.insert(key, c);
        }
        out
    }

    pub fn from_elementary(n: usize, expansion: &BTreeMap<EMonomial, F>) -> Self {
        let mut out = Self::zero(n);
        for (k, c) in expansion {
            out = &out + &Self::e_product(k, n).scale(c);
        }
        out
    }

    /// Largest-weight key, lexicographically largest among those.
    pub fn leading_term(&self) -> Option<Partition> {
        self.terms
            .keys()
            .max_by(|a, b| a.weight().cmp(&b.weight()).then(a.cmp(b)))
            .cloned()
    }

    pub fn evaluate(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.n, "point length");
        let pows = PowerTable::new(point);
        self.terms.iter().fold(F::zero(), |acc, (l, c)| {
            acc + &(c.clone() * &pows.m_value(l))
        })
    }

    /// `Σ_σ g(x_σ)` over all `n!` permutations, in the m-basis. A monomial
    /// `x^α` is fixed by `|Stab(α)|` permutations, so its orbit sum is
    /// `|Stab(α)| · m_{sort α}`.
    pub fn symmetrize(g: &MultiPoly<F>) -> Self {
        let n = g.nvars();
        let mut out = Self::zero(n);
        for (e, c) in g.terms() {
            let l = Partition::from_unsorted(e.clone());
            let stab = stabilizer_size(&l);
            out.add_term(l, c.clone() * &F::from_int(stab as i64));
        }
        out
    }

    fn add_impl(&self, o: &Self, sign: bool) -> Self {
        assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (l, c) in &o.terms {
            out.add_term(l.clone(), if sign { c.clone() } else { -c.clone() });
        }
        out
    }
}

impl SymPoly<RatFunc> {
    /// Coefficient-wise limit at `symbol = a`. A coefficient with a pole
    /// there is reported with its partition.
    pub fn specialize(&self, a: &Rat) -> Result<SymPoly<Rat>> {
        self.try_map_coeffs(|l, c| {
            c.limit_at(a).map_err(|_| Error::CoefficientPole {
                partition: l.clone(),
                point: render_rat(a),
            })
        })
    }

    /// Smallest order of vanishing at `symbol = a` over all coefficients;
    /// negative when some coefficient has a pole. `None` for zero.
    pub fn min_multiplicity_at(&self, a: &Rat) -> Option<i64> {
        self.terms
            .values()
            .map(|c| c.multiplicity_at(a).expect("stored coefficients are nonzero"))
            .min()
    }
}

/// Cached powers of the coordinates of one evaluation point.
pub struct PowerTable<R> {
    pows: Vec<Vec<R>>,
}

impl<R: Ring> PowerTable<R> {
    pub fn new(point: &[R]) -> Self {
        PowerTable {
            pows: point.iter().map(|p| vec![R::one(), p.clone()]).collect(),
        }
    }

    fn power(&self, v: usize, k: u32) -> R {
        let row = &self.pows[v];
        if (k as usize) < row.len() {
            return row[k as usize].clone();
        }
        row[1].pow(k)
    }

    /// `m_λ` at the point.
    pub fn m_value(&self, lambda: &Partition) -> R {
        let mut acc = R::zero();
        for e in distinct_permutations(lambda.parts()) {
            let mut term = R::one();
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term * &self.power(v, k);
                }
            }
            acc = acc + &term;
        }
        acc
    }
}

/// `m_λ` at a point, in any ring.
pub fn m_value<R: Ring>(lambda: &Partition, point: &[R]) -> R {
    PowerTable::new(point).m_value(lambda)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

fn stabilizer_size(l: &Partition) -> u128 {
    let mut mult: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in l.parts() {
        *mult.entry(p).or_default() += 1;
    }
    mult.values().map(|&m| factorial(m)).product()
}

/// Number of distinct rearrangements of `λ`.
pub fn orbit_size(l: &Partition) -> u128 {
    factorial(l.len()) / stabilizer_size(l)
}

impl<'a, F: Ring> Add<&'a SymPoly<F>> for &'a SymPoly<F> {
    type Output = SymPoly<F>;
    fn add(self, o: &SymPoly<F>) -> SymPoly<F> {
        self.add_impl(o, true)
    }
}

impl<'a, F: Ring> Sub<&'a SymPoly<F>> for &'a SymPoly<F> {
    type Output = SymPoly<F>;
    fn sub(self, o: &SymPoly<F>) -> SymPoly<F> {
        self.add_impl(o, false)
    }
}

impl<'a, F: Ring> Mul<&'a SymPoly<F>> for &'a SymPoly<F> {
    type Output = SymPoly<F>;
    fn mul(self, o: &SymPoly<F>) -> SymPoly<F> {
        self.multiply(o)
    }
}

impl<F: Ring> Neg for SymPoly<F> {
    type Output = SymPoly<F>;
    fn neg(self) -> SymPoly<F> {
        self.scale(&-F::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int, Rat};
    use crate::partitions::enumerate_partitions;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn m(v: &[u32]) -> SymPoly<Rat> {
        SymPoly::monomial(p(v))
    }

    #[test]
    fn expand_and_collect() {
        let e2 = m(&[1, 1, 0, 0]).expand();
        assert_eq!(e2.len(), 6);
        assert!(e2.terms().keys().all(|k| k.iter().sum::<u32>() == 2 && k.iter().all(|&x| x <= 1)));
        let sum = (0..4).fold(MultiPoly::zero(4), |acc, i| &acc + &MultiPoly::var(4, i));
        assert_eq!(SymPoly::collect(&sum).unwrap(), m(&[1, 0, 0, 0]));
        let diff = &MultiPoly::<Rat>::var(4, 0) - &MultiPoly::var(4, 1);
        assert_eq!(SymPoly::collect(&diff), Err(Error::NotSymmetric));
    }

    #[test]
    fn multiply_examples() {
        let p1 = m(&[1, 0, 0, 0]);
        let sq = p1.multiply(&p1);
        assert_eq!(sq, &m(&[2, 0, 0, 0]) + &m(&[1, 1, 0, 0]).scale(&rat_int(2)));
        assert_eq!(p1.multiply(&SymPoly::one(4)), p1);
        let e2 = SymPoly::<Rat>::elementary(2, 4);
        let via_expand = SymPoly::collect(&(&e2.expand() * &e2.expand())).unwrap();
        assert_eq!(e2.multiply(&e2), via_expand);
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(SymPoly::<Rat>::elementary(2, 4), m(&[1, 1, 0, 0]));
        let e = m(&[2, 0, 0, 0]).to_elementary_basis();
        let expected: BTreeMap<EMonomial, Rat> =
            [(vec![1, 1], rat_int(1)), (vec![2], rat_int(-2))].into_iter().collect();
        assert_eq!(e, expected);
    }

    #[test]
    fn symmetrize_examples() {
        let x1 = MultiPoly::<Rat>::var(4, 0);
        assert_eq!(SymPoly::symmetrize(&x1), m(&[1, 0, 0, 0]).scale(&rat_int(6)));
        let diff = &x1 - &MultiPoly::var(4, 1);
        assert!(SymPoly::symmetrize(&diff).is_zero());
    }

    /// Orbit formula against a literal sum over all permutations.
    #[test]
    fn symmetrize_matches_permutation_sum() {
        let x = |i| MultiPoly::<Rat>::var(4, i);
        let g = &(&(&x(0) - &x(3)) * &(&x(1) - &x(3))) * &(&(&x(2) - &x(3)) * &x(0));
        let mut total = MultiPoly::zero(4);
        let mut perm: Vec<u32> = vec![0, 1, 2, 3];
        loop {
            let permuted = MultiPoly::from_terms(
                4,
                g.terms().iter().map(|(e, c)| {
                    let mut ne = vec![0; 4];
                    for (i, &k) in e.iter().enumerate() {
                        ne[perm[i] as usize] = k;
                    }
                    (ne, c.clone())
                }),
            );
            total = &total + &permuted;
            if !crate::partitions::next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(SymPoly::collect(&total).unwrap(), SymPoly::symmetrize(&g));
    }

    #[test]
    fn evaluate_examples() {
        let e1 = SymPoly::<Rat>::elementary(1, 4);
        let pt: Vec<Rat> = [8, 4, 2, 1].iter().map(|&x| rat_int(x)).collect();
        assert_eq!(e1.evaluate(&pt), rat_int(15));
        assert_eq!(SymPoly::<Rat>::one(4).evaluate(&pt), rat_int(1));
    }

    fn arb_sympoly(n: usize, max_d: u32) -> impl Strategy<Value = SymPoly<Rat>> {
        let basis: Vec<Partition> = (0..=max_d).flat_map(|d| enumerate_partitions(n, d)).collect();
        let len = basis.len();
        prop::collection::vec((0..len, -5i64..6, 1i64..4), 0..6).prop_map(move |ts| {
            SymPoly::from_terms(n, ts.into_iter().map(|(i, a, b)| (basis[i].clone(), rat(a, b))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn expand_collect_round_trip(f in arb_sympoly(4, 6)) {
            prop_assert_eq!(SymPoly::collect(&f.expand()).unwrap(), f);
        }

        #[test]
        fn multiply_commutes_and_associates(f in arb_sympoly(3, 3), g in arb_sympoly(3, 3), h in arb_sympoly(3, 2)) {
            prop_assert_eq!(f.multiply(&g), g.multiply(&f));
            prop_assert_eq!(f.multiply(&g).multiply(&h), f.multiply(&g.multiply(&h)));
        }

        #[test]
        fn elementary_round_trip(f in arb_sympoly(4, 8)) {
            let e = f.to_elementary_basis();
            prop_assert_eq!(SymPoly::from_elementary(4, &e), f);
        }

        #[test]
        fn evaluation_is_multiplicative(f in arb_sympoly(3, 4), g in arb_sympoly(3, 4), pt in prop::collection::vec(-3i64..4, 3)) {
            let pt: Vec<Rat> = pt.into_iter().map(rat_int).collect();
            prop_assert_eq!(f.multiply(&g).evaluate(&pt), f.evaluate(&pt) * g.evaluate(&pt));
        }
    }
}
