//! Interpolation Jack polynomials `P*_λ(x; θ)`, the Knop–Sahi operators
//! `E_k`, the dehomogenization map `Ψ_θ`, and the shifted vanishing and
//! Pieri checks at `θ = -1/2`.
//!
//! `P*_λ` is the symmetric polynomial of degree at most `|λ|` vanishing at
//! `μ + ρ` for every `|μ| ≤ |λ|`, `μ ≠ λ`, with
//! `P*_λ(λ + ρ) = Π_{boxes} (lθ + a + 1)` and `ρ = ((n-1)θ, …, θ, 0)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{rat, rat_int, Rat, RatFunc, UniPoly};
use crate::jack::{bar_combination, jack_u0, modified_jack, specialize_theta, ThetaSymPoly};
use crate::linalg::{solve, solve_consistent};
use crate::partitions::{
    box_stats, enumerate_partitions, enumerate_up_to, is_admissible, Partition,
};
use crate::symfunc::{EMonomial, MultiPoly, PowerTable, SymPoly};

#[derive(Clone, Debug)]
pub struct InterpPoly {
    pub lambda: Partition,
    pub n: usize,
    pub expansion: ThetaSymPoly,
}

/// `((n-1)θ, …, θ, 0)`.
pub fn rho(n: usize) -> Vec<UniPoly> {
    (0..n)
        .map(|i| UniPoly::symbol().scale(&rat_int((n - 1 - i) as i64)))
        .collect()
}

/// `μ + ρ`.
pub fn shifted_point(mu: &Partition) -> Vec<UniPoly> {
    rho(mu.len())
        .into_iter()
        .zip(mu.parts())
        .map(|(r, &m)| r + UniPoly::constant(rat_int(m as i64)))
        .collect()
}

/// `μ + ρ(θ₀)` with rational entries.
pub fn shifted_point_at(mu: &Partition, theta0: &Rat) -> Vec<Rat> {
    let n = mu.len();
    mu.parts()
        .iter()
        .enumerate()
        .map(|(i, &m)| rat_int(m as i64) + theta0 * rat_int((n - 1 - i) as i64))
        .collect()
}

/// `Π_{boxes} (l θ + a + 1)`.
pub fn normalization(lambda: &Partition) -> UniPoly {
    box_stats(lambda).boxes.iter().fold(UniPoly::one(), |acc, b| {
        acc * UniPoly::from_coeffs(vec![rat_int(b.arm as i64 + 1), rat_int(b.leg as i64)])
    })
}

#[derive(Default)]
struct Tables {
    polys: HashMap<Partition, Arc<InterpPoly>>,
    mvalues: HashMap<(Partition, Partition), UniPoly>,
    values: HashMap<(Partition, Partition), RatFunc>,
}

fn tables() -> &'static Mutex<Tables> {
    static T: OnceLock<Mutex<Tables>> = OnceLock::new();
    T.get_or_init(Default::default)
}

/// `m_κ(ν + ρ)`.
fn m_value_at(nu: &Partition, kappa: &Partition) -> UniPoly {
    let key = (nu.clone(), kappa.clone());
    if let Some(v) = tables().lock().unwrap().mvalues.get(&key) {
        return v.clone();
    }
    let v = crate::symfunc::m_value(kappa, &shifted_point(nu));
    tables().lock().unwrap().mvalues.insert(key, v.clone());
    v
}

/// `f(ν + ρ)`.
pub fn value_at(f: &ThetaSymPoly, nu: &Partition) -> RatFunc {
    f.terms().iter().fold(RatFunc::zero(), |acc, (k, c)| {
        acc + &(c.clone() * &RatFunc::from_poly(m_value_at(nu, k)))
    })
}

/// `P*_μ(ν + ρ)`, zero without computation when `|ν| ≤ |μ|` and `ν ≠ μ`.
fn interp_value(mu: &Partition, nu: &Partition) -> RatFunc {
    if nu.weight() <= mu.weight() {
        return if nu == mu {
            RatFunc::from_poly(normalization(mu))
        } else {
            RatFunc::zero()
        };
    }
    let key = (mu.clone(), nu.clone());
    if let Some(v) = tables().lock().unwrap().values.get(&key) {
        return v.clone();
    }
    let v = value_at(&interp_jack(mu, mu.len()).expansion, nu);
    tables().lock().unwrap().values.insert(key, v.clone());
    v
}

/// The interpolation Jack polynomial, solved degree by degree: each
/// top-degree monomial is corrected by lower `P*_μ` (Newton style) so that
/// it vanishes at all lower shifted points, then a square system in the
/// top-degree coefficients imposes the same-degree conditions.
pub fn interp_jack(lambda: &Partition, n: usize) -> Arc<InterpPoly> {
    assert_eq!(lambda.len(), n, "partition length must equal n");
    if let Some(p) = tables().lock().unwrap().polys.get(lambda) {
        return p.clone();
    }
    let d = lambda.weight();
    let lower: Vec<Partition> = if d == 0 { vec![] } else { enumerate_up_to(n, d - 1) };
    let top = enumerate_partitions(n, d);

    // corrections[κ][μ]: coefficient of P*_μ subtracted from m_κ
    let corrections: Vec<Vec<RatFunc>> = top
        .iter()
        .map(|kappa| {
            let mono = SymPoly::monomial(kappa.clone());
            let mut residual: Vec<RatFunc> = lower.iter().map(|nu| value_at(&mono, nu)).collect();
            let mut coeffs = vec![RatFunc::zero(); lower.len()];
            for (a, mu) in lower.iter().enumerate() {
                if residual[a].is_zero() {
                    continue;
                }
                let c = &residual[a] / &RatFunc::from_poly(normalization(mu));
                for (b, nu) in lower.iter().enumerate().skip(a + 1) {
                    if nu.weight() > mu.weight() {
                        let v = interp_value(mu, nu);
                        if !v.is_zero() {
                            residual[b] = &residual[b] - &(&c * &v);
                        }
                    }
                }
                coeffs[a] = c;
            }
            coeffs
        })
        .collect();

    let column = |k: usize, target: &Partition| -> RatFunc {
        let mono = SymPoly::monomial(top[k].clone());
        lower
            .iter()
            .zip(&corrections[k])
            .filter(|(_, c)| !c.is_zero())
            .fold(value_at(&mono, target), |acc, (mu, c)| {
                acc - &(c.clone() * &interp_value(mu, target))
            })
    };
    let matrix: Vec<Vec<RatFunc>> = top
        .iter()
        .map(|target| (0..top.len()).map(|k| column(k, target)).collect())
        .collect();
    let rhs: Vec<RatFunc> = top
        .iter()
        .map(|t| {
            if t == lambda {
                RatFunc::from_poly(normalization(lambda))
            } else {
                RatFunc::zero()
            }
        })
        .collect();
    let a = solve(matrix, rhs).expect("interpolation system is nonsingular");

    let mut expansion = SymPoly::from_terms(n, top.iter().cloned().zip(a.iter().cloned()));
    for (m, mu) in lower.iter().enumerate() {
        let c = a
            .iter()
            .zip(&corrections)
            .fold(RatFunc::zero(), |acc, (ak, ck)| acc + &(ak.clone() * &ck[m]));
        if !c.is_zero() {
            expansion = &expansion - &interp_jack(mu, n).expansion.scale(&c);
        }
    }
    let poly = Arc::new(InterpPoly {
        lambda: lambda.clone(),
        n,
        expansion,
    });
    tables().lock().unwrap().polys.insert(lambda.clone(), poly.clone());
    poly
}

/// The same polynomial from one square system in all `m_κ`, `|κ| ≤ |λ|`,
/// with the conditions taken in the order given by `order` (a permutation
/// of the condition indices, or the natural order when `None`).
pub fn interp_jack_direct(lambda: &Partition, n: usize, order: Option<&[usize]>) -> Result<ThetaSymPoly> {
    let basis = enumerate_up_to(n, lambda.weight());
    let natural: Vec<usize> = (0..basis.len()).collect();
    let order = order.unwrap_or(&natural);
    let mut matrix = Vec::with_capacity(basis.len());
    let mut rhs = Vec::with_capacity(basis.len());
    for &r in order {
        let mu = &basis[r];
        let table = PowerTable::new(&shifted_point(mu));
        matrix.push(basis.iter().map(|k| RatFunc::from_poly(table.m_value(k))).collect());
        rhs.push(if mu == lambda {
            RatFunc::from_poly(normalization(lambda))
        } else {
            RatFunc::zero()
        });
    }
    let a = solve(matrix, rhs)?;
    Ok(SymPoly::from_terms(n, basis.into_iter().zip(a)))
}

/// Whether the three defining conditions hold identically in θ.
pub fn check_defining_conditions(p: &InterpPoly) -> bool {
    let d = p.lambda.weight();
    p.expansion.degree().unwrap_or(0) <= d
        && enumerate_up_to(p.n, d).iter().all(|mu| {
            let v = value_at(&p.expansion, mu);
            if mu == &p.lambda {
                v == RatFunc::from_poly(normalization(mu))
            } else {
                v.is_zero()
            }
        })
}

fn knop_sahi_weights(n: usize, k: usize) -> Arc<Vec<(Vec<usize>, MultiPoly<UniPoly>)>> {
    type Cache = Mutex<HashMap<(usize, usize), Arc<Vec<(Vec<usize>, MultiPoly<UniPoly>)>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(w) = cache.lock().unwrap().get(&(n, k)) {
        return w.clone();
    }
    let theta = MultiPoly::constant(n, UniPoly::symbol());
    let mut out = Vec::new();
    for s in subsets(n, k) {
        let y: Vec<MultiPoly<UniPoly>> = (0..n)
            .map(|i| {
                let x = MultiPoly::var(n, i);
                if s.contains(&i) {
                    x
                } else {
                    &x + &theta
                }
            })
            .collect();
        let mut w = MultiPoly::one(n);
        for &i in &s {
            w = &w * &MultiPoly::var(n, i);
        }
        for i in 0..n {
            for j in i + 1..n {
                w = &w * &(&y[i] - &y[j]);
            }
        }
        out.push((s, w));
    }
    let out = Arc::new(out);
    cache.lock().unwrap().insert((n, k), out.clone());
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// `E_k f = Δ⁻¹ Σ_{|S|=k} Π_{i∈S} x_i · Π_{i<j} (y_i - y_j) · T_S f`,
/// where `y_i = x_i` for `i ∈ S`, `y_i = x_i + θ` otherwise, and `T_S`
/// shifts each `x_i`, `i ∈ S`, by `-1`. This is the `t^k` coefficient of
/// `Δ⁻¹ det[(x_i + θ)^{n-j} + t x_i^{n-j+1} T_i]`.
pub fn knop_sahi_apply(k: usize, f: &MultiPoly<UniPoly>) -> Result<MultiPoly<UniPoly>> {
    let n = f.nvars();
    if k == 0 {
        return Ok(f.clone());
    }
    let minus_one = UniPoly::constant(rat_int(-1));
    let mut numerator = MultiPoly::zero(n);
    for (s, w) in knop_sahi_weights(n, k).iter() {
        let shifted = s.iter().fold(f.clone(), |g, &i| g.shift_var(i, &minus_one));
        numerator = &numerator + &(w * &shifted);
    }
    let mut q = numerator;
    for i in 0..n {
        for j in i + 1..n {
            q = q.div_linear(i, j, &UniPoly::one())?;
        }
    }
    Ok(q)
}

/// `E_{k_1} ⋯ E_{k_m} (1)`.
fn operator_word(n: usize, word: &EMonomial) -> Result<MultiPoly<UniPoly>> {
    type Cache = Mutex<HashMap<(usize, EMonomial), MultiPoly<UniPoly>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut word: EMonomial = word.iter().copied().filter(|&k| k > 0).collect();
    word.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(p) = cache.lock().unwrap().get(&(n, word.clone())) {
        return Ok(p.clone());
    }
    let result = match word.split_first() {
        None => MultiPoly::one(n),
        Some((&k, rest)) => knop_sahi_apply(k as usize, &operator_word(n, &rest.to_vec())?)?,
    };
    cache.lock().unwrap().insert((n, word), result.clone());
    Ok(result)
}

/// `Ψ_θ(f)`: write `f` in products of `e_k`, replace each `e_k` by `E_k`
/// and apply to `1`.
pub fn dehomogenize(f: &ThetaSymPoly) -> Result<ThetaSymPoly> {
    let n = f.n();
    let mut out = SymPoly::zero(n);
    for (word, c) in f.to_elementary_basis() {
        let image = SymPoly::collect(&operator_word(n, &word)?)?;
        out = &out + &image.map_coeffs(|x| RatFunc::from_poly(x.clone())).scale(&c);
    }
    Ok(out)
}

/// `P̄*_λ`, using `u₀(P*_λ) := u₀(P_λ)`.
pub fn modified_interp_jack(lambda: &Partition, n: usize) -> Result<ThetaSymPoly> {
    bar_combination(lambda, |l| interp_jack(l, n).expansion.clone(), |l| jack_u0(l, n))
}

pub fn half() -> Rat {
    rat(-1, 2)
}

/// `P̄*_λ` at `θ = -1/2`.
pub fn modified_interp_at_half(lambda: &Partition, n: usize) -> Result<SymPoly<Rat>> {
    specialize_theta(&modified_interp_jack(lambda, n)?, &half())
}

/// Whether `f(μ + ρ(-1/2)) = 0`.
pub fn vanishes_shifted(f: &SymPoly<Rat>, mu: &Partition) -> bool {
    f.evaluate(&shifted_point_at(mu, &half())).is_zero()
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftedSweep {
    pub lambda: Partition,
    pub max_weight: u32,
    pub checked: usize,
    pub failures: Vec<Partition>,
}

/// Evaluates `P̄*_λ|_{θ=-1/2}` at `μ + ρ(-1/2)` for every non-admissible
/// `μ` with `|μ| ≤ |λ| + extra`.
pub fn shifted_sweep(lambda: &Partition, n: usize, extra: u32) -> Result<ShiftedSweep> {
    let f = modified_interp_at_half(lambda, n)?;
    let max_weight = lambda.weight() + extra;
    let mut checked = 0;
    let mut failures = Vec::new();
    for mu in enumerate_up_to(n, max_weight).into_iter().filter(|m| !is_admissible(m)) {
        checked += 1;
        if !vanishes_shifted(&f, &mu) {
            failures.push(mu);
        }
    }
    Ok(ShiftedSweep {
        lambda: lambda.clone(),
        max_weight,
        checked,
        failures,
    })
}

#[derive(Clone, Debug)]
pub struct PieriExpansion {
    pub lambda: Partition,
    /// `(τ, c_{λτ})` over admissible `τ` with `|τ| = |λ| + 1`.
    pub coefficients: Vec<(Partition, Rat)>,
}

/// Writes `target` in the span of `basis`, or [`Error::NoRepresentation`].
fn expand_in(target: &SymPoly<Rat>, basis: &[(Partition, SymPoly<Rat>)]) -> Result<Vec<(Partition, Rat)>> {
    let support: BTreeSet<&Partition> = basis
        .iter()
        .flat_map(|(_, b)| b.terms().keys())
        .chain(target.terms().keys())
        .collect();
    let rows: Vec<Vec<Rat>> = support
        .iter()
        .map(|k| basis.iter().map(|(_, b)| b.coeff(k)).collect())
        .collect();
    let b: Vec<Rat> = support.iter().map(|k| target.coeff(k)).collect();
    let x = solve_consistent(rows, b, basis.len())?;
    Ok(basis.iter().map(|(t, _)| t.clone()).zip(x).collect())
}

fn admissible_of_weight(n: usize, d: u32) -> Vec<Partition> {
    enumerate_partitions(n, d).into_iter().filter(is_admissible).collect()
}

/// `|ρ(θ₀)| = θ₀ n(n-1)/2`.
pub fn rho_weight(n: usize, theta0: &Rat) -> Rat {
    theta0 * rat_int((n * (n - 1) / 2) as i64)
}

/// `(Σ x_i - c) P̄*_λ = Σ_τ c_{λτ} P̄*_τ` at `θ = -1/2`, over admissible `τ`
/// with `|τ| = |λ| + 1`.
pub fn pieri_check_with_shift(lambda: &Partition, n: usize, c: &Rat) -> Result<PieriExpansion> {
    if !is_admissible(lambda) {
        return Err(Error::NotAdmissible(lambda.clone()));
    }
    let f = modified_interp_at_half(lambda, n)?;
    let shift = &SymPoly::monomial(Partition::padded(&[1], n)) - &SymPoly::one(n).scale(c);
    let target = &shift * &f;
    let basis = admissible_of_weight(n, lambda.weight() + 1)
        .into_iter()
        .map(|t| Ok((t.clone(), modified_interp_at_half(&t, n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PieriExpansion {
        lambda: lambda.clone(),
        coefficients: expand_in(&target, &basis)?,
    })
}

/// The Pieri variant with the shift `|λ| + |ρ(-1/2)|`, which is what
/// `Ψ_θ(e_1 f) = (e_1 - deg f - |ρ(θ)|) Ψ_θ(f)` gives for homogeneous `f`.
pub fn pieri_check(lambda: &Partition, n: usize) -> Result<PieriExpansion> {
    let c = rat_int(lambda.weight() as i64) + rho_weight(n, &half());
    pieri_check_with_shift(lambda, n, &c)
}

/// The top-degree shadow of [`pieri_check`]: `(Σ x_i) P̄_λ` in the span of
/// the modified Jack polynomials `P̄_τ`, all at `θ = -1/2`.
pub fn pieri_top_check(lambda: &Partition, n: usize) -> Result<Vec<(Partition, Rat)>> {
    let f = specialize_theta(&modified_jack(lambda, n)?, &half())?;
    let target = &SymPoly::monomial(Partition::padded(&[1], n)) * &f;
    let basis = admissible_of_weight(n, lambda.weight() + 1)
        .into_iter()
        .map(|t| Ok((t.clone(), specialize_theta(&modified_jack(&t, n)?, &half())?)))
        .collect::<Result<Vec<_>>>()?;
    expand_in(&target, &basis)
}

/// Multiplicity of `θ + 1/2` in `u₀(P_λ)`.
pub fn zeta_jack_u0(lambda: &Partition, n: usize) -> i64 {
    jack_u0(lambda, n)
        .multiplicity_at(&half())
        .expect("u0 is a nonzero rational function")
}

/// Multiplicity of `θ + 1/2` in `P*_λ(λ + ρ)`, read off the computed
/// polynomial rather than the product formula.
pub fn normalization_zeta(lambda: &Partition, n: usize) -> i64 {
    value_at(&interp_jack(lambda, n).expansion, lambda)
        .multiplicity_at(&half())
        .expect("normalization value is nonzero")
}

/// Coefficients of the inhomogeneous polynomial grouped by degree.
pub fn by_degree(f: &ThetaSymPoly) -> BTreeMap<u32, ThetaSymPoly> {
    let mut out: BTreeMap<u32, ThetaSymPoly> = BTreeMap::new();
    for (k, c) in f.terms() {
        out.entry(k.weight())
            .or_insert_with(|| SymPoly::zero(f.n()))
            .add_term(k.clone(), c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::jack;
    use crate::partitions::classify;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn th(c0: i64, c1: i64) -> RatFunc {
        RatFunc::from_poly(UniPoly::from_coeffs(vec![rat_int(c0), rat_int(c1)]))
    }

    #[test]
    fn small_examples() {
        assert_eq!(interp_jack(&p(&[0, 0, 0, 0]), 4).expansion, SymPoly::one(4));
        let e1 = SymPoly::monomial(p(&[1, 0, 0, 0]));
        let expected = &e1 - &SymPoly::constant(4, th(0, 6));
        assert_eq!(interp_jack(&p(&[1, 0, 0, 0]), 4).expansion, expected);
        let two = &SymPoly::monomial(p(&[1, 0])) - &SymPoly::constant(2, th(0, 1));
        assert_eq!(interp_jack(&p(&[1, 0]), 2).expansion, two);
        let l = p(&[1, 1, 0, 0]);
        assert_eq!(value_at(&interp_jack(&l, 4).expansion, &l), th(1, 1));
    }

    #[test]
    fn tower_matches_direct_solve() {
        for n in 2..=4 {
            for l in enumerate_up_to(n, 4) {
                let tower = interp_jack(&l, n);
                assert!(check_defining_conditions(&tower), "{l}");
                assert_eq!(tower.expansion, interp_jack_direct(&l, n, None).unwrap(), "{l}");
            }
        }
    }

    #[test]
    fn permuted_conditions_give_same_polynomial() {
        let l = p(&[2, 1, 0]);
        let size = enumerate_up_to(3, 3).len();
        let reversed: Vec<usize> = (0..size).rev().collect();
        let rotated: Vec<usize> = (0..size).map(|i| (i + 3) % size).collect();
        let base = interp_jack_direct(&l, 3, None).unwrap();
        assert_eq!(interp_jack_direct(&l, 3, Some(&reversed)).unwrap(), base);
        assert_eq!(interp_jack_direct(&l, 3, Some(&rotated)).unwrap(), base);
    }

    #[test]
    fn top_component_is_jack() {
        for n in 2..=4 {
            for l in enumerate_up_to(n, 4) {
                let top = interp_jack(&l, n).expansion.homogeneous_component(l.weight());
                assert_eq!(top, jack(&l, n).expansion, "{l}");
            }
        }
    }

    #[test]
    fn knop_sahi_two_variables() {
        let one = MultiPoly::one(2);
        let x = |i| MultiPoly::<UniPoly>::var(2, i);
        let expected = &(&x(0) + &x(1)) - &MultiPoly::constant(2, UniPoly::symbol());
        assert_eq!(knop_sahi_apply(1, &one).unwrap(), expected);
        // E_2 for n = 2 is x1 x2 T1 T2
        let f = &x(0) * &x(0);
        let shifted = f.shift_var(0, &UniPoly::constant(rat_int(-1)));
        assert_eq!(knop_sahi_apply(2, &f).unwrap(), &(&x(0) * &x(1)) * &shifted);
    }

    #[test]
    fn knop_sahi_operators_commute() {
        let x = |i| MultiPoly::<UniPoly>::var(3, i);
        let g = &(&(&x(0) * &x(0)) * &x(1)) + &(&x(2).pow(3) - &x(1));
        let f = SymPoly::symmetrize(&g).expand();
        let ab = knop_sahi_apply(1, &knop_sahi_apply(2, &f).unwrap()).unwrap();
        let ba = knop_sahi_apply(2, &knop_sahi_apply(1, &f).unwrap()).unwrap();
        assert_eq!(ab, ba);
    }

    #[test]
    fn dehomogenize_sends_jack_to_interpolation() {
        assert_eq!(dehomogenize(&SymPoly::one(3)).unwrap(), SymPoly::one(3));
        for n in 2..=4 {
            for l in enumerate_up_to(n, 4) {
                let image = dehomogenize(&jack(&l, n).expansion).unwrap();
                assert_eq!(image, interp_jack(&l, n).expansion, "{l}");
            }
        }
    }

    #[test]
    fn dehomogenize_shift_relation() {
        let n = 3;
        let e1 = SymPoly::monomial(Partition::padded(&[1], n));
        for l in [p(&[2, 0, 0]), p(&[1, 1, 0]), p(&[2, 1, 0])] {
            let f = &jack(&l, n).expansion + &SymPoly::monomial(l.clone()).scale(&th(2, -1));
            let lhs = dehomogenize(&(&e1 * &f)).unwrap();
            let c = UniPoly::from_coeffs(vec![rat_int(l.weight() as i64), rat_int((n * (n - 1) / 2) as i64)]);
            let shift = &e1 - &SymPoly::one(n).scale(&RatFunc::from_poly(c));
            assert_eq!(lhs, &shift * &dehomogenize(&f).unwrap(), "{l}");
        }
    }

    #[test]
    fn modified_examples() {
        let c = p(&[3, 0, 0, 0]);
        assert_eq!(modified_interp_jack(&c, 4).unwrap(), interp_jack(&c, 4).expansion);
        let a = p(&[2, 2, 2, 0]);
        assert!(modified_interp_at_half(&a, 4).is_ok());
        let f = modified_interp_at_half(&c, 4).unwrap();
        assert!(vanishes_shifted(&f, &p(&[1, 1, 1, 1])));
        assert!(!vanishes_shifted(&f, &c));
        assert!(vanishes_shifted(&SymPoly::zero(4), &c));
    }

    #[test]
    fn case_a_zeta_facts() {
        let a = p(&[2, 2, 2, 0]);
        let nu = classify(&a).unwrap().companion.unwrap();
        {
            let n = 4usize;
            assert_eq!(zeta_jack_u0(&a, n), n as i64 / 2 - 2);
            assert_eq!(zeta_jack_u0(&nu, n), n as i64 / 2 - 2);
        }
        // (3,1,1,1) has a box with (l, a) = (2, 0)
        assert!(normalization_zeta(&p(&[3, 1, 1, 1]), 4) > 0);
        assert_eq!(normalization_zeta(&p(&[3, 0, 0, 0]), 4), 0);
    }

    #[test]
    fn pieri_examples() {
        let c = pieri_check(&p(&[3, 0, 0, 0]), 4).unwrap();
        let taus: Vec<Partition> = c.coefficients.iter().map(|(t, _)| t.clone()).collect();
        assert_eq!(taus, vec![p(&[4, 0, 0, 0]), p(&[3, 1, 0, 0])]);
        pieri_check(&p(&[2, 2, 2, 0]), 4).unwrap();
        pieri_top_check(&p(&[3, 0, 0, 0]), 4).unwrap();
        assert!(matches!(pieri_check(&p(&[1, 1, 1, 1]), 4), Err(Error::NotAdmissible(_))));
        let literal = rat_int(3);
        assert_eq!(
            pieri_check_with_shift(&p(&[3, 0, 0, 0]), 4, &literal).map(|_| ()),
            Err(Error::NoRepresentation)
        );
    }
}
