//! Jack polynomials `P_λ(x; θ)` over ℚ(θ), their principal values, and the
//! modified combinations that stay finite at `θ = -1/2`.
//!
//! `P_λ` is the monic, dominance-triangular eigenvector of
//!
//! ```text
//! H = Σ_i (x_i ∂_i)² + θ Σ_{i<j} (x_i + x_j)/(x_i - x_j) · (x_i ∂_i - x_j ∂_j)
//! ```
//!
//! with eigenvalue `E_λ = Σ λ_i² + θ Σ (n + 1 - 2i) λ_i`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Result;
use crate::exactnum::{rat_int, Rat, RatFunc, Ring, UniPoly};
use crate::partitions::{
    box_stats, classify, distinct_permutations, dominated_by, enumerate_partitions, Case,
    Partition,
};
use crate::symfunc::{substitute_pattern, Pattern, SymPoly};

pub type ThetaSymPoly = SymPoly<RatFunc>;

#[derive(Clone, Debug)]
pub struct JackPoly {
    pub lambda: Partition,
    pub n: usize,
    pub expansion: ThetaSymPoly,
}

/// `E_μ(θ)` as a linear polynomial in θ.
pub fn cs_eigenvalue(mu: &Partition) -> UniPoly {
    let n = mu.len() as i64;
    let c0: i64 = mu.parts().iter().map(|&p| (p as i64) * (p as i64)).sum();
    let c1: i64 = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| (n - 1 - 2 * i as i64) * p as i64)
        .sum();
    UniPoly::from_coeffs(vec![rat_int(c0), rat_int(c1)])
}

/// Coefficients of `m_μ` in `H₁ m_ν`, where `H = H₀ + θ H₁` and `H₀` is
/// diagonal. Each pair `i < j` of a rearrangement `α` of `ν` with
/// `α_i > α_j`, together with its swap, contributes
/// `m (x_i x_j)^{α_j} [x_i^m + 2 Σ_{0<k<m} x_i^{m-k} x_j^k + x_j^m]`,
/// `m = α_i - α_j`, times the other variables.
pub fn cs_theta_column(nu: &Partition) -> BTreeMap<Partition, Rat> {
    let mut col: BTreeMap<Partition, i64> = BTreeMap::new();
    let n = nu.len();
    for alpha in distinct_permutations(nu.parts()) {
        for i in 0..n {
            for j in i + 1..n {
                if alpha[i] <= alpha[j] {
                    continue;
                }
                let (a, b) = (alpha[i], alpha[j]);
                let m = a - b;
                let mut e = alpha.clone();
                for k in 0..=m {
                    e[i] = b + m - k;
                    e[j] = b + k;
                    if !e.windows(2).all(|w| w[0] >= w[1]) {
                        continue;
                    }
                    let mult = if k == 0 || k == m { 1 } else { 2 };
                    *col.entry(Partition::new(e.clone()).unwrap()).or_default() += mult * m as i64;
                }
            }
        }
    }
    col.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(p, c)| (p, rat_int(c)))
        .collect()
}

/// Triangular eigenvector solve. Partitions dominated by `λ` are visited
/// in decreasing lexicographic order, so every `ν` feeding into `c_μ` is
/// already known.
pub fn jack(lambda: &Partition, n: usize) -> JackPoly {
    assert_eq!(lambda.len(), n, "partition length must equal n");
    let below: Vec<Partition> = enumerate_partitions(n, lambda.weight())
        .into_iter()
        .filter(|mu| dominated_by(mu, lambda))
        .collect();
    let e_lambda = cs_eigenvalue(lambda);
    // contributions[μ] accumulates Σ_ν H₁[μ][ν] c_ν as ν are solved
    let mut contributions: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    let mut coeffs: Vec<(Partition, RatFunc)> = Vec::new();
    let theta = RatFunc::symbol();
    for mu in &below {
        let c = if mu == lambda {
            RatFunc::from_rat(&rat_int(1))
        } else {
            let gap = &e_lambda - &cs_eigenvalue(mu);
            assert!(
                !gap.is_zero(),
                "eigenvalues of dominance-comparable {lambda} and {mu} coincide"
            );
            let Some(rhs) = contributions.remove(mu) else {
                continue;
            };
            &(&rhs * &theta) / &RatFunc::from_poly(gap)
        };
        for (target, h) in cs_theta_column(mu) {
            if &target == mu || !dominated_by(&target, lambda) {
                continue;
            }
            let add = &c * &RatFunc::from_rat(&h);
            let slot = contributions
                .entry(target)
                .or_insert_with(|| RatFunc::from_rat(&rat_int(0)));
            *slot = &*slot + &add;
        }
        coeffs.push((mu.clone(), c));
    }
    JackPoly {
        lambda: lambda.clone(),
        n,
        expansion: SymPoly::from_terms(n, coeffs),
    }
}

/// `u₀(P_λ) = Π_{boxes} ((n - l')θ + a') / ((l + 1)θ + a)`.
pub fn jack_u0(lambda: &Partition, n: usize) -> RatFunc {
    let mut num = UniPoly::from_coeffs(vec![rat_int(1)]);
    let mut den = num.clone();
    for b in box_stats(lambda).boxes {
        num = num * UniPoly::from_coeffs(vec![rat_int(b.coarm as i64), rat_int(n as i64 - b.coleg as i64)]);
        den = den * UniPoly::from_coeffs(vec![rat_int(b.arm as i64), rat_int(b.leg as i64 + 1)]);
    }
    RatFunc::new(num, den).expect("denominator factors are nonzero")
}

/// `P_λ - (u₀(P_λ)/u₀(P_ν)) P_ν` for Cases A and B, `P_λ` for Case C,
/// built from any family `p(λ)` with principal values `u0(λ)`.
pub(crate) fn bar_combination(
    lambda: &Partition,
    p: impl Fn(&Partition) -> SymPoly<RatFunc>,
    u0: impl Fn(&Partition) -> RatFunc,
) -> Result<SymPoly<RatFunc>> {
    let tag = classify(lambda)?;
    let p_lambda = p(lambda);
    match (tag.case, tag.companion) {
        (Case::C, _) | (_, None) => Ok(p_lambda),
        (_, Some(nu)) => {
            let ratio = &u0(lambda) / &u0(&nu);
            Ok(&p_lambda - &p(&nu).scale(&ratio))
        }
    }
}

/// Modified Jack polynomial `P̄_λ`.
pub fn modified_jack(lambda: &Partition, n: usize) -> Result<ThetaSymPoly> {
    bar_combination(lambda, |l| jack(l, n).expansion, |l| jack_u0(l, n))
}

pub fn specialize_theta(f: &ThetaSymPoly, theta0: &Rat) -> Result<SymPoly<Rat>> {
    f.specialize(theta0)
}

/// Whether `f(x, x, y, y, x_5, …, x_n) = 0` identically.
pub fn vanishes_on_double_diagonal(f: &SymPoly<Rat>) -> bool {
    f.is_zero()
        || substitute_pattern(f, &Pattern::DoubleDiagonal)
            .map(|g| g.is_zero())
            .unwrap_or(false)
}
