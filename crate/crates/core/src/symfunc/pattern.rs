use super::{MultiPoly, SymPoly};
use crate::error::{Error, Result};
use crate::exactnum::{rat_int, render_rat, Rat, Ring};

/// A coincidence of variables. Each variable `x_i` is replaced by
/// `scale · y + shift` for one of the surviving free variables `y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Pattern {
    /// `x_1 = x_2 = u`, `x_3 = x_4 = v`.
    DoubleDiagonal,
    /// `x_1 = u`, `x_2 = t0·u`, `x_3 = v`, `x_4 = t0·v`.
    DoubleTDiagonal(Rat),
    /// `x_1 = u`, `x_2 = u + s`, `x_3 = v`, `x_4 = v + s`.
    DoubleShift(Rat),
    /// `x_1 = ⋯ = x_p = u`.
    PFold(usize),
}

/// Image of one variable: free variable index, scale, shift.
pub(crate) type Image = (usize, Rat, Rat);

impl Pattern {
    pub fn arity(&self) -> usize {
        match self {
            Pattern::PFold(p) => *p,
            _ => 4,
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.arity() > n {
            return Err(Error::BadPattern(format!("{self} needs at least {} variables, got {n}", self.arity())));
        }
        match self {
            Pattern::PFold(p) if *p < 2 => Err(Error::BadPattern(format!("{self} needs p >= 2"))),
            Pattern::DoubleTDiagonal(t)
                if *t == rat_int(0) || *t == rat_int(1) || *t == rat_int(-1) =>
            {
                Err(Error::BadPattern(format!("t0 = {} is degenerate", render_rat(t))))
            }
            _ => Ok(()),
        }
    }

    /// Number of variables that survive the substitution.
    pub fn free_vars(&self, n: usize) -> usize {
        match self {
            Pattern::PFold(p) => n - p + 1,
            _ => n - 2,
        }
    }

    pub(crate) fn images(&self, n: usize) -> Result<Vec<Image>> {
        self.check(n)?;
        let one = rat_int(1);
        let zero = rat_int(0);
        let mut out = Vec::with_capacity(n);
        match self {
            Pattern::PFold(p) => {
                out.extend((0..*p).map(|_| (0, one.clone(), zero.clone())));
                out.extend((*p..n).map(|i| (i - p + 1, one.clone(), zero.clone())));
            }
            _ => {
                let (scale, shift) = match self {
                    Pattern::DoubleDiagonal => (one.clone(), zero.clone()),
                    Pattern::DoubleTDiagonal(t) => (t.clone(), zero.clone()),
                    Pattern::DoubleShift(s) => (one.clone(), s.clone()),
                    Pattern::PFold(_) => unreachable!(),
                };
                out.push((0, one.clone(), zero.clone()));
                out.push((0, scale.clone(), shift.clone()));
                out.push((1, one.clone(), zero.clone()));
                out.push((1, scale, shift));
                out.extend((4..n).map(|i| (i - 2, one.clone(), zero.clone())));
            }
        }
        Ok(out)
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Pattern::DoubleShift(_))
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pattern::DoubleDiagonal => write!(f, "double-diagonal"),
            Pattern::DoubleTDiagonal(t) => write!(f, "double-t-diagonal(t0={})", render_rat(t)),
            Pattern::DoubleShift(s) => write!(f, "double-shift({})", render_rat(s)),
            Pattern::PFold(p) => write!(f, "{p}-fold"),
        }
    }
}

/// `f` restricted to the pattern, as a polynomial in the free variables
/// (`u, v, x_5, …` or `u, x_{p+1}, …`). `f` lies in the vanishing ideal of
/// the pattern iff the result is zero.
pub fn substitute_pattern<F: Ring>(f: &SymPoly<F>, pattern: &Pattern) -> Result<MultiPoly<F>> {
    let n = f.n();
    let images = pattern.images(n)?;
    let k = pattern.free_vars(n);
    let mut out = MultiPoly::zero(k);
    if pattern.is_homogeneous() {
        let scales: Vec<F> = images.iter().map(|(_, s, _)| F::from_rat(s)).collect();
        for (l, c) in f.terms() {
            for e in crate::partitions::distinct_permutations(l.parts()) {
                let mut ye = vec![0u32; k];
                let mut coef = c.clone();
                for (i, &ei) in e.iter().enumerate() {
                    if ei == 0 {
                        continue;
                    }
                    ye[images[i].0] += ei;
                    if images[i].1 != rat_int(1) {
                        coef = coef * &scales[i].pow(ei);
                    }
                }
                out.add_term(ye, coef);
            }
        }
        return Ok(out);
    }
    // general affine images: multiply cached powers of (scale·y + shift)
    let linear: Vec<MultiPoly<F>> = images
        .iter()
        .map(|(y, s, b)| {
            &MultiPoly::var(k, *y).scale(&F::from_rat(s)) + &MultiPoly::constant(k, F::from_rat(b))
        })
        .collect();
    let mut cache: std::collections::HashMap<(usize, u32), MultiPoly<F>> = Default::default();
    for (l, c) in f.terms() {
        for e in crate::partitions::distinct_permutations(l.parts()) {
            let mut term = MultiPoly::constant(k, c.clone());
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                let pw = cache.entry((i, ei)).or_insert_with(|| linear[i].pow(ei));
                term = &term * pw;
            }
            out = &out + &term;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::partitions::Partition;
    use proptest::prelude::*;

    fn m(v: &[u32]) -> SymPoly<Rat> {
        SymPoly::monomial(Partition::new(v.to_vec()).unwrap())
    }

    #[test]
    fn double_diagonal_of_power_sum() {
        let g = substitute_pattern(&m(&[1, 0, 0, 0]), &Pattern::DoubleDiagonal).unwrap();
        let u = MultiPoly::var(2, 0);
        let v = MultiPoly::var(2, 1);
        assert_eq!(g, (&u + &v).scale(&rat_int(2)));
    }

    #[test]
    fn t_diagonal_of_e1() {
        let e1 = SymPoly::<Rat>::elementary(1, 6);
        let g = substitute_pattern(&e1, &Pattern::DoubleTDiagonal(rat_int(2))).unwrap();
        let mut expected = MultiPoly::zero(4);
        expected.add_term(vec![1, 0, 0, 0], rat_int(3));
        expected.add_term(vec![0, 1, 0, 0], rat_int(3));
        expected.add_term(vec![0, 0, 1, 0], rat_int(1));
        expected.add_term(vec![0, 0, 0, 1], rat_int(1));
        assert_eq!(g, expected);
    }

    #[test]
    fn symmetrized_discriminant_vanishes_on_double_diagonal() {
        let x = |i| MultiPoly::<Rat>::var(4, i);
        let mut d = MultiPoly::one(4);
        for i in 0..4 {
            for j in i + 1..4 {
                let diff = &x(i) - &x(j);
                d = &d * &(&diff * &diff);
            }
        }
        let f = SymPoly::symmetrize(&d);
        assert_eq!(f, SymPoly::collect(&d).unwrap().scale(&rat_int(24)));
        assert!(substitute_pattern(&f, &Pattern::DoubleDiagonal).unwrap().is_zero());
        assert!(!substitute_pattern(&f, &Pattern::DoubleShift(rat(1, 2))).unwrap().is_zero());
    }

    #[test]
    fn bad_patterns() {
        assert!(matches!(substitute_pattern(&m(&[1, 0, 0]), &Pattern::DoubleDiagonal), Err(Error::BadPattern(_))));
        assert!(matches!(substitute_pattern(&m(&[1, 0, 0, 0]), &Pattern::PFold(5)), Err(Error::BadPattern(_))));
        assert!(substitute_pattern(&m(&[1, 0, 0, 0]), &Pattern::DoubleTDiagonal(rat_int(1))).is_err());
    }

    #[test]
    fn shift_pattern_matches_pointwise_evaluation() {
        let f = &m(&[2, 1, 0, 0]) + &m(&[1, 1, 1, 0]).scale(&rat(3, 2));
        let g = substitute_pattern(&f, &Pattern::DoubleShift(rat(1, 2))).unwrap();
        let (u, v) = (rat(2, 3), rat(-5, 1));
        let pt = [u.clone(), &u + &rat(1, 2), v.clone(), &v + &rat(1, 2)];
        assert_eq!(g.eval(&[u, v]), f.evaluate(&pt));
    }

    fn arb(n: usize) -> impl Strategy<Value = SymPoly<Rat>> {
        let basis: Vec<Partition> = (0..=4).flat_map(|d| crate::partitions::enumerate_partitions(n, d)).collect();
        let len = basis.len();
        prop::collection::vec((0..len, -4i64..5), 0..4)
            .prop_map(move |ts| SymPoly::from_terms(n, ts.into_iter().map(|(i, a)| (basis[i].clone(), rat_int(a)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn substitution_is_a_ring_homomorphism(f in arb(5), g in arb(5), which in 0usize..4) {
            let pat = [
                Pattern::DoubleDiagonal,
                Pattern::DoubleTDiagonal(rat(3, 2)),
                Pattern::DoubleShift(rat(1, 2)),
                Pattern::PFold(3),
            ][which].clone();
            let lhs = substitute_pattern(&f.multiply(&g), &pat).unwrap();
            let rhs = &substitute_pattern(&f, &pat).unwrap() * &substitute_pattern(&g, &pat).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
