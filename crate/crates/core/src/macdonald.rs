//! Macdonald polynomials `P_λ(x; q, t₀)` for a fixed rational `t₀` and
//! symbolic `q`, computed as monic triangular eigenvectors of the first
//! Macdonald operator
//!
//! ```text
//! D f = Δ⁻¹ Σ_i (T_{t,x_i} Δ)(T_{q,x_i} f),   Δ = Π_{i<j} (x_i - x_j),
//! ```
//!
//! whose eigenvalue on `P_λ` is `Σ_i t₀^{n-i} q^{λ_i}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Rat, RatFunc, UniPoly};
use crate::jack::bar_combination;
use crate::partitions::{box_stats, classify, dominated_by, enumerate_partitions, Case, Partition};
use crate::symfunc::{substitute_pattern, MultiPoly, Pattern, PowerTable, SymPoly};

pub type QSymPoly = SymPoly<RatFunc>;

#[derive(Clone, Debug)]
pub struct MacPoly {
    pub lambda: Partition,
    pub n: usize,
    pub t0: Rat,
    pub expansion: QSymPoly,
}

/// Coefficients of `D m_ν` in the m-basis, polynomials in `q`.
pub type OperatorColumn = BTreeMap<Partition, UniPoly>;

type ColumnCache = Mutex<HashMap<(Partition, Rat), Arc<OperatorColumn>>>;
type PolyCache = Mutex<HashMap<(Partition, Rat), Arc<MacPoly>>>;

fn column_cache() -> &'static ColumnCache {
    static CACHE: OnceLock<ColumnCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn poly_cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn vandermonde(n: usize, scaled: Option<(usize, &Rat)>) -> MultiPoly<UniPoly> {
    let var = |i: usize| {
        let x = MultiPoly::<UniPoly>::var(n, i);
        match scaled {
            Some((k, t)) if k == i => x.scale(&UniPoly::constant(t.clone())),
            _ => x,
        }
    };
    let mut d = MultiPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            d = &d * &(&var(i) - &var(j));
        }
    }
    d
}

/// `D m_ν`, computed by expanding the numerator and dividing exactly by
/// each `x_i - x_j`.
pub fn operator_column(nu: &Partition, t0: &Rat) -> Arc<OperatorColumn> {
    let key = (nu.clone(), t0.clone());
    if let Some(c) = column_cache().lock().unwrap().get(&key) {
        return c.clone();
    }
    let n = nu.len();
    let f = SymPoly::<UniPoly>::monomial(nu.clone()).expand();
    let mut numerator = MultiPoly::zero(n);
    for i in 0..n {
        let shifted = f.map_terms(|e, c| c.clone() * &UniPoly::monomial(rat_int(1), e[i] as usize));
        numerator = &numerator + &(&vandermonde(n, Some((i, t0))) * &shifted);
    }
    let mut quotient = numerator;
    for i in 0..n {
        for j in i + 1..n {
            quotient = quotient
                .div_linear(i, j, &UniPoly::one())
                .expect("the Macdonald numerator is divisible by the Vandermonde product");
        }
    }
    let col: OperatorColumn = SymPoly::collect(&quotient)
        .expect("the Macdonald operator preserves symmetry")
        .terms()
        .clone()
        .into_iter()
        .collect();
    let col = Arc::new(col);
    column_cache().lock().unwrap().insert(key, col.clone());
    col
}

/// `Σ_i t₀^{n-i} q^{μ_i}`.
pub fn mac_eigenvalue(mu: &Partition, t0: &Rat) -> UniPoly {
    let n = mu.len();
    mu.parts()
        .iter()
        .enumerate()
        .fold(UniPoly::zero(), |acc, (i, &p)| {
            acc + UniPoly::monomial(t0.pow((n - 1 - i) as i32), p as usize)
        })
}

/// The Macdonald polynomial, or [`Error::GenericityFailure`] when some
/// `μ < λ` shares the eigenvalue of `λ` at this `t₀`.
pub fn macdonald(lambda: &Partition, n: usize, t0: &Rat) -> Result<Arc<MacPoly>> {
    assert_eq!(lambda.len(), n, "partition length must equal n");
    let key = (lambda.clone(), t0.clone());
    if let Some(p) = poly_cache().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let below: Vec<Partition> = enumerate_partitions(n, lambda.weight())
        .into_iter()
        .filter(|mu| dominated_by(mu, lambda))
        .collect();
    let e_lambda = mac_eigenvalue(lambda, t0);
    for mu in below.iter().filter(|mu| *mu != lambda) {
        if mac_eigenvalue(mu, t0) == e_lambda {
            return Err(Error::GenericityFailure(lambda.clone(), mu.clone()));
        }
    }
    let mut contributions: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    let mut coeffs: Vec<(Partition, RatFunc)> = Vec::new();
    for mu in &below {
        let c = if mu == lambda {
            RatFunc::one()
        } else {
            let Some(rhs) = contributions.remove(mu) else {
                continue;
            };
            &rhs / &RatFunc::from_poly(&e_lambda - &mac_eigenvalue(mu, t0))
        };
        for (target, entry) in operator_column(mu, t0).iter() {
            if target == mu || !dominated_by(target, lambda) {
                continue;
            }
            let add = &c * &RatFunc::from_poly(entry.clone());
            let slot = contributions.entry(target.clone()).or_insert_with(RatFunc::zero);
            *slot = &*slot + &add;
        }
        coeffs.push((mu.clone(), c));
    }
    let poly = Arc::new(MacPoly {
        lambda: lambda.clone(),
        n,
        t0: t0.clone(),
        expansion: SymPoly::from_terms(n, coeffs),
    });
    poly_cache().lock().unwrap().insert(key, poly.clone());
    Ok(poly)
}

/// One factor `1 - t^{t_exp} q^{q_exp}` of the principal specialization.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SpecFactor {
    pub t_exp: u32,
    pub q_exp: u32,
}

/// `u₀(P_λ) = t^{n(λ)} Π num / Π den` as a formal product in `q` and `t`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SpecProduct {
    pub t_power: u64,
    pub num: Vec<SpecFactor>,
    pub den: Vec<SpecFactor>,
}

pub fn principal_product(lambda: &Partition, n: usize) -> SpecProduct {
    let stats = box_stats(lambda);
    SpecProduct {
        t_power: stats.n_lambda,
        num: stats
            .boxes
            .iter()
            .map(|b| SpecFactor {
                t_exp: n as u32 - b.coleg,
                q_exp: b.coarm,
            })
            .collect(),
        den: stats
            .boxes
            .iter()
            .map(|b| SpecFactor {
                t_exp: b.leg + 1,
                q_exp: b.arm,
            })
            .collect(),
    }
}

impl SpecProduct {
    /// Order of `1 - t²q` in the product. A factor `1 - t^a q^b` vanishes
    /// on `t²q = 1` exactly when `a = 2b`, and then to first order.
    pub fn zeta(&self) -> i64 {
        let hits = |fs: &[SpecFactor]| {
            fs.iter()
                .filter(|f| f.q_exp >= 1 && f.t_exp == 2 * f.q_exp)
                .count() as i64
        };
        hits(&self.num) - hits(&self.den)
    }

    /// The product with `t = t₀`, as a rational function of `q`.
    pub fn at_t(&self, t0: &Rat) -> RatFunc {
        let factor = |f: &SpecFactor| {
            UniPoly::one() - UniPoly::monomial(t0.pow(f.t_exp as i32), f.q_exp as usize)
        };
        let num = self
            .num
            .iter()
            .fold(UniPoly::constant(t0.pow(self.t_power as i32)), |acc, f| acc * factor(f));
        let den = self.den.iter().fold(UniPoly::one(), |acc, f| acc * factor(f));
        RatFunc::new(num, den).expect("t0 is not a root of unity")
    }
}

pub fn principal_specialization(lambda: &Partition, n: usize, t0: &Rat) -> RatFunc {
    principal_product(lambda, n).at_t(t0)
}

pub fn zeta_u0(lambda: &Partition, n: usize) -> i64 {
    principal_product(lambda, n).zeta()
}

/// The point `(t₀^{n-1} q^{μ_1}, …, q^{μ_n})`.
pub fn eval_point(mu: &Partition, t0: &Rat) -> Vec<UniPoly> {
    let n = mu.len();
    mu.parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| UniPoly::monomial(t0.pow((n - 1 - i) as i32), p as usize))
        .collect()
}

/// `f` at the point `u_μ`.
pub fn evaluate_at(f: &QSymPoly, mu: &Partition, t0: &Rat) -> RatFunc {
    let table = PowerTable::new(&eval_point(mu, t0));
    f.terms().iter().fold(RatFunc::zero(), |acc, (l, c)| {
        acc + &(c.clone() * &RatFunc::from_poly(table.m_value(l)))
    })
}

/// `u_μ(P_λ)/u₀(P_λ) = u_λ(P_μ)/u₀(P_μ)` as rational functions of `q`.
pub fn symmetry_check(lambda: &Partition, mu: &Partition, n: usize, t0: &Rat) -> Result<bool> {
    let pl = macdonald(lambda, n, t0)?;
    let pm = macdonald(mu, n, t0)?;
    let lhs = &evaluate_at(&pl.expansion, mu, t0) / &principal_specialization(lambda, n, t0);
    let rhs = &evaluate_at(&pm.expansion, lambda, t0) / &principal_specialization(mu, n, t0);
    Ok(lhs == rhs)
}

pub fn modified_macdonald(lambda: &Partition, n: usize, t0: &Rat) -> Result<QSymPoly> {
    let tag = classify(lambda)?;
    // every polynomial that can enter must exist before the combination is formed
    macdonald(lambda, n, t0)?;
    if let Some(nu) = &tag.companion {
        macdonald(nu, n, t0)?;
    }
    bar_combination(
        lambda,
        |l| macdonald(l, n, t0).unwrap().expansion.clone(),
        |l| principal_specialization(l, n, t0),
    )
}

/// `q₀ = t₀⁻²`.
pub fn special_q(t0: &Rat) -> Rat {
    (t0 * t0).recip()
}

pub fn specialize_q(f: &QSymPoly, q0: &Rat) -> Result<SymPoly<Rat>> {
    f.specialize(q0)
}

/// Whether `f(x, t₀x, y, t₀y, x_5, …) = 0` identically.
pub fn vanishes_on_t_diagonals(f: &SymPoly<Rat>, t0: &Rat) -> bool {
    f.is_zero()
        || substitute_pattern(f, &Pattern::DoubleTDiagonal(t0.clone()))
            .map(|g| g.is_zero())
            .unwrap_or(false)
}

/// `D f` with `q = q₀`.
pub fn apply_operator_at(f: &SymPoly<Rat>, t0: &Rat, q0: &Rat) -> SymPoly<Rat> {
    let mut out = SymPoly::zero(f.n());
    for (nu, c) in f.terms() {
        for (mu, entry) in operator_column(nu, t0).iter() {
            out.add_term(mu.clone(), c.clone() * entry.eval(q0));
        }
    }
    out
}

#[derive(Clone, PartialEq, Debug)]
pub enum OperatorStructure {
    Eigen { eigenvalue: Rat },
    JordanBlock { partner: Partition, eigenvalue: Rat, coupling: Rat },
}

/// How the first Macdonald operator at `q = t₀⁻²` acts on `P̄_λ`.
pub fn operator_structure(lambda: &Partition, n: usize, t0: &Rat) -> Result<OperatorStructure> {
    let tag = classify(lambda)?;
    let q0 = special_q(t0);
    let bar = specialize_q(&modified_macdonald(lambda, n, t0)?, &q0)?;
    let eigenvalue = mac_eigenvalue(lambda, t0).eval(&q0);
    let image = apply_operator_at(&bar, t0, &q0);
    let residual = &image - &bar.scale(&eigenvalue);
    if residual.is_zero() {
        return Ok(OperatorStructure::Eigen { eigenvalue });
    }
    if let (Case::B(_), Some(nu)) = (tag.case, tag.companion) {
        let partner = specialize_q(&modified_macdonald(&nu, n, t0)?, &q0)?;
        if let Some(coupling) = proportionality(&residual, &partner) {
            return Ok(OperatorStructure::JordanBlock {
                partner: nu,
                eigenvalue,
                coupling,
            });
        }
    }
    Err(Error::NeitherStructure)
}

/// `c` with `a = c·b`, if one exists and `b ≠ 0`.
pub fn proportionality(a: &SymPoly<Rat>, b: &SymPoly<Rat>) -> Option<Rat> {
    let (lead, bc) = b.terms().iter().next()?;
    let c = a.coeff(lead) / bc;
    (a == &b.scale(&c) || (c.is_zero() && a.is_zero())).then_some(c)
}

/// Whether `f` is divisible by `Π_{i<j} (x_i - t₀x_j)(t₀x_i - x_j)`.
pub fn divisible_by_t_product(f: &SymPoly<Rat>, t0: &Rat) -> bool {
    let n = f.n();
    let mut g = f.expand();
    let inv = t0.recip();
    for i in 0..n {
        for j in i + 1..n {
            for c in [t0, &inv] {
                match g.div_linear(i, j, c) {
                    Ok(q) => g = q,
                    Err(_) => return false,
                }
            }
        }
    }
    !f.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Ring};
    use crate::partitions::zeta_u0_combinatorial;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q() -> RatFunc {
        RatFunc::symbol()
    }

    fn c(r: Rat) -> RatFunc {
        RatFunc::from_rat(&r)
    }

    /// `(a; q)_m` with `a = t₀` or `a = q`.
    fn poch(a: &RatFunc, m: u32) -> RatFunc {
        let mut acc = RatFunc::one();
        let mut x = a.clone();
        for _ in 0..m {
            acc = acc * (RatFunc::one() - x.clone());
            x = x * q();
        }
        acc
    }

    /// One-row Macdonald polynomial from `Π (t x_i z; q)_∞ / (x_i z; q)_∞`.
    fn one_row_oracle(k: u32, n: usize, t0: &Rat) -> QSymPoly {
        let t = c(t0.clone());
        let g = SymPoly::from_terms(
            n,
            enumerate_partitions(n, k).into_iter().map(|mu| {
                let w = mu
                    .parts()
                    .iter()
                    .fold(RatFunc::one(), |acc, &m| acc * poch(&t, m) / poch(&q(), m));
                (mu, w)
            }),
        );
        g.scale(&(poch(&q(), k) / poch(&t, k)))
    }

    /// `D f` at a rational point and rational `q`, from
    /// `Σ_i Π_{j≠i} (t x_i - x_j)/(x_i - x_j) f(…, q x_i, …)`.
    fn operator_at_point(f: &SymPoly<Rat>, x: &[Rat], t0: &Rat, q0: &Rat) -> Rat {
        let n = x.len();
        let mut acc = rat_int(0);
        for i in 0..n {
            let mut coef = rat_int(1);
            for j in 0..n {
                if j != i {
                    coef = coef * (t0 * &x[i] - &x[j]) / (&x[i] - &x[j]);
                }
            }
            let mut y = x.to_vec();
            y[i] = q0 * &x[i];
            acc += coef * f.evaluate(&y);
        }
        acc
    }

    #[test]
    fn small_examples() {
        let t0 = rat_int(2);
        assert_eq!(macdonald(&p(&[1, 0, 0, 0]), 4, &t0).unwrap().expansion, SymPoly::monomial(p(&[1, 0, 0, 0])));
        for k in 0..=4 {
            let l = Partition::padded(&vec![1; k], 4);
            assert_eq!(macdonald(&l, 4, &t0).unwrap().expansion, SymPoly::elementary(k, 4));
        }
        let p2 = macdonald(&p(&[2, 0, 0, 0]), 4, &t0).unwrap();
        // (1 - t)(1 + q)/(1 - qt) at t = 2
        let expected = (q() + RatFunc::one()) / (c(rat_int(2)) * q() - RatFunc::one());
        assert_eq!(p2.expansion.coeff(&p(&[1, 1, 0, 0])), expected);
    }

    #[test]
    fn one_row_matches_generating_function() {
        for t0 in [rat_int(2), rat(3, 2)] {
            for (k, n) in [(2, 2), (3, 3), (4, 4), (5, 4)] {
                let l = Partition::padded(&[k], n);
                assert_eq!(macdonald(&l, n, &t0).unwrap().expansion, one_row_oracle(k, n, &t0), "k={k}");
            }
        }
    }

    #[test]
    fn operator_diagonal_is_eigenvalue() {
        let t0 = rat(5, 3);
        for l in enumerate_partitions(4, 5) {
            assert_eq!(operator_column(&l, &t0)[&l], mac_eigenvalue(&l, &t0));
        }
    }

    #[test]
    fn eigen_relation_at_rational_points() {
        let t0 = rat(3, 2);
        let q0 = rat(2, 7);
        let x: Vec<Rat> = [rat(1, 3), rat(5, 2), rat(-2, 1), rat(7, 5)].to_vec();
        for l in [p(&[2, 1, 0, 0]), p(&[3, 1, 1, 0]), p(&[2, 2, 2, 0])] {
            let pl = specialize_q(&macdonald(&l, 4, &t0).unwrap().expansion, &q0).unwrap();
            let lhs = operator_at_point(&pl, &x, &t0, &q0);
            let rhs = mac_eigenvalue(&l, &t0).eval(&q0) * pl.evaluate(&x);
            assert_eq!(lhs, rhs, "{l}");
        }
    }

    #[test]
    fn principal_value_examples() {
        let t0 = rat_int(2);
        let t = c(t0.clone());
        let one = RatFunc::one();
        let single = (one.clone() - t.pow(4)) / (one.clone() - t.clone());
        assert_eq!(principal_specialization(&p(&[1, 0, 0, 0]), 4, &t0), single);
        let two = t.clone() * (one.clone() - t.pow(4)) * (one.clone() - t.pow(3))
            / ((one.clone() - t.pow(2)) * (one - t));
        assert_eq!(principal_specialization(&p(&[1, 1, 0, 0]), 4, &t0), two);
    }

    #[test]
    fn principal_value_matches_evaluation() {
        for t0 in [rat_int(2), rat(3, 2)] {
            for d in 0..=5 {
                for l in enumerate_partitions(4, d) {
                    let pl = macdonald(&l, 4, &t0).unwrap();
                    let zero = Partition::zero(4);
                    assert_eq!(evaluate_at(&pl.expansion, &zero, &t0), principal_specialization(&l, 4, &t0), "{l}");
                }
            }
        }
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_u0(&p(&[6, 4, 2, 0]), 4), 2);
        assert_eq!(zeta_u0(&p(&[2, 2, 2, 0]), 4), 0);
        assert_eq!(zeta_u0(&p(&[9, 9, 5, 5]), 4), 0);
        for n in 4..=5 {
            for d in 0..=8 {
                for l in enumerate_partitions(n, d) {
                    assert_eq!(zeta_u0(&l, n), zeta_u0_combinatorial(&l));
                }
            }
        }
    }

    /// Route check for ζ: the order of `1 - t₀²q` in the specialized product
    /// equals the formal count when `t₀` is generic.
    #[test]
    fn zeta_matches_specialized_multiplicity() {
        let t0 = rat(5, 3);
        for l in enumerate_partitions(4, 7) {
            let u0 = principal_specialization(&l, 4, &t0);
            assert_eq!(u0.multiplicity_at(&special_q(&t0)).unwrap(), zeta_u0(&l, 4), "{l}");
        }
    }

    #[test]
    fn symmetry_examples() {
        let t0 = rat_int(2);
        assert!(symmetry_check(&p(&[2, 0, 0, 0]), &p(&[2, 0, 0, 0]), 4, &t0).unwrap());
        assert!(symmetry_check(&p(&[2, 0, 0, 0]), &p(&[1, 1, 0, 0]), 4, &t0).unwrap());
        assert!(symmetry_check(&p(&[3, 1, 0, 0]), &p(&[2, 0, 0, 0]), 4, &t0).unwrap());
    }

    #[test]
    fn pole_and_operator_structure() {
        let t0 = rat_int(2);
        let q0 = special_q(&t0);
        let b = p(&[4, 3, 2, 0]);
        let pb = macdonald(&b, 4, &t0).unwrap();
        assert_eq!(pb.expansion.min_multiplicity_at(&q0), Some(-1));
        let bar = modified_macdonald(&b, 4, &t0).unwrap();
        assert!(bar.min_multiplicity_at(&q0).unwrap() >= 0);
        assert!(vanishes_on_t_diagonals(&specialize_q(&bar, &q0).unwrap(), &t0));

        let a = p(&[2, 2, 2, 0]);
        for l in [a.clone(), p(&[3, 1, 1, 1])] {
            assert!(macdonald(&l, 4, &t0).unwrap().expansion.min_multiplicity_at(&q0).unwrap() >= 0);
        }
        let plain = specialize_q(&macdonald(&a, 4, &t0).unwrap().expansion, &q0).unwrap();
        assert!(!vanishes_on_t_diagonals(&plain, &t0));

        assert!(matches!(operator_structure(&a, 4, &t0).unwrap(), OperatorStructure::Eigen { .. }));
        assert!(matches!(operator_structure(&p(&[3, 0, 0, 0]), 4, &t0).unwrap(), OperatorStructure::Eigen { .. }));
        match operator_structure(&b, 4, &t0).unwrap() {
            OperatorStructure::JordanBlock { partner, coupling, .. } => {
                assert_eq!(partner, p(&[3, 3, 3, 0]));
                assert!(!coupling.is_zero());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn divisibility_for_sparse_partition() {
        let t0 = rat(3, 2);
        let q0 = special_q(&t0);
        let l = p(&[6, 4, 2, 0]);
        let f = specialize_q(&macdonald(&l, 4, &t0).unwrap().expansion, &q0).unwrap();
        assert!(divisible_by_t_product(&f, &t0));
        let g = specialize_q(&macdonald(&p(&[3, 0, 0, 0]), 4, &t0).unwrap().expansion, &q0).unwrap();
        assert!(!divisible_by_t_product(&g, &t0));
    }

    #[test]
    fn genericity_failure_is_detected() {
        // at t0 = -1 both (2,2,0,0) and (1,1,1,1) have eigenvalue 0
        let r = macdonald(&p(&[2, 2, 0, 0]), 4, &rat_int(-1));
        assert_eq!(r.map(|_| ()), Err(Error::GenericityFailure(p(&[2, 2, 0, 0]), p(&[1, 1, 1, 1]))));
        assert!(macdonald(&p(&[2, 2, 0, 0]), 4, &rat_int(2)).is_ok());
    }
}
