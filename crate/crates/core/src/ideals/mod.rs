//! Ideals of symmetric polynomials cut out by coincidence patterns,
//! computed degree by degree as kernels of the substitution map on the
//! m-basis: dimensions, characters, minimal generator degrees, the dual
//! ring bound and the filtration `F₂ ⊃ F ⊃ F₁`.

mod dual;
mod series;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{rat, rat_int, Rat};
use crate::jack::{modified_jack, specialize_theta};
use crate::linalg::{rank_checked, rank_mod_p, rref};
use crate::partitions::{enumerate_partitions, enumerate_up_to, Partition};
use crate::symfunc::{substitute_pattern, MultiPoly, Pattern, SymPoly};

pub use dual::{dual_ring_spanning, relation, DualRingReport};
pub use series::{
    case_series, hilbert_series_cases, hilbert_series_theorem, theorem_terms, SeriesTable,
};

/// Symmetric polynomials in `n` variables vanishing under every pattern.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSpec {
    pub n: usize,
    pub patterns: Vec<Pattern>,
}

impl IdealSpec {
    pub fn new(n: usize, patterns: Vec<Pattern>) -> Result<Self> {
        for p in &patterns {
            if p.arity() > n {
                return Err(Error::BadPattern(format!("{p} needs at least {} variables", p.arity())));
            }
            if let Pattern::PFold(k) = p {
                if *k < 2 {
                    return Err(Error::BadPattern(format!("{p}: p must be at least 2")));
                }
            }
        }
        Ok(Self { n, patterns })
    }

    /// `f(x, x, y, y, x_5, …) = 0`.
    pub fn double_diagonal(n: usize) -> Self {
        Self::new(n, vec![Pattern::DoubleDiagonal]).expect("n >= 4")
    }

    /// `f(x_1, …) = 0` whenever `p` of the variables coincide.
    pub fn p_fold(n: usize, p: usize) -> Self {
        Self::new(n, vec![Pattern::PFold(p)]).expect("2 <= p <= n")
    }

    /// The middle step of the filtration: double diagonal and triple point.
    pub fn double_and_triple(n: usize) -> Self {
        Self::new(n, vec![Pattern::DoubleDiagonal, Pattern::PFold(3)]).expect("n >= 4")
    }

    pub fn is_homogeneous(&self) -> bool {
        self.patterns.iter().all(Pattern::is_homogeneous)
    }

    /// Basis of the space the substitution map is restricted to: degree
    /// exactly `d`, or degree at most `d` for inhomogeneous patterns.
    pub fn domain(&self, d: u32) -> Vec<Partition> {
        if self.is_homogeneous() {
            enumerate_partitions(self.n, d)
        } else {
            enumerate_up_to(self.n, d)
        }
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        write!(f, "n={} [{}]", self.n, names.join(" and "))
    }
}

/// Rows: one per domain partition, the image coordinates concatenated
/// over all patterns.
fn image_rows(spec: &IdealSpec, domain: &[Partition]) -> Result<(Vec<Vec<Rat>>, usize)> {
    let images: Vec<Vec<MultiPoly<Rat>>> = domain
        .par_iter()
        .map(|k| {
            let m = SymPoly::monomial(k.clone());
            spec.patterns.iter().map(|p| substitute_pattern(&m, p)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut columns: BTreeMap<(usize, &Vec<u32>), usize> = BTreeMap::new();
    for img in &images {
        for (pi, g) in img.iter().enumerate() {
            for e in g.terms().keys() {
                let next = columns.len();
                columns.entry((pi, e)).or_insert(next);
            }
        }
    }
    let ncols = columns.len();
    let rows = images
        .iter()
        .map(|img| {
            let mut row = vec![rat_int(0); ncols];
            for (pi, g) in img.iter().enumerate() {
                for (e, c) in g.terms() {
                    row[columns[&(pi, e)]] = c.clone();
                }
            }
            row
        })
        .collect();
    Ok((rows, ncols))
}

/// `dim I_d`, the rank optionally screened modulo `prime`.
pub fn ideal_dimension(spec: &IdealSpec, d: u32, prime: Option<u64>) -> Result<usize> {
    let domain = spec.domain(d);
    let (rows, ncols) = image_rows(spec, &domain)?;
    Ok(domain.len() - rank_checked(rows, ncols, prime)?)
}

/// An exact basis of `I_d` in the m-basis.
pub fn ideal_basis(spec: &IdealSpec, d: u32) -> Result<Vec<SymPoly<Rat>>> {
    kernel_on(spec, &spec.domain(d))
}

/// How generator degrees are counted.
///
/// `Weight` treats `I` as an ideal of `Λ_n = ℚ[e_1, …, e_n]` graded by
/// degree in `x`. `BinaryForm` treats it as the ideal of binary forms
/// `a_0 X^n + a_1 X^{n-1} Y + … + a_n Y^n` in `ℚ[a_0, …, a_n]`, bigraded by
/// coefficient degree `k` and weight `w`; the piece of bidegree `(k, w)` is
/// the span of `m_λ` with `|λ| = w` and `λ_1 ≤ k`, multiplication by `a_0`
/// is inclusion and by `a_j` is multiplication by `e_j`. Degrees reported
/// are weights in both cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Grading {
    Weight,
    BinaryForm,
}

/// Dimension data behind [`generator_degrees`] for one (bi)degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorRow {
    pub degree: u32,
    /// Coefficient degree `k` under [`Grading::BinaryForm`].
    pub coefficient_degree: Option<u32>,
    pub dim: usize,
    pub products_rank: usize,
    pub new_generators: usize,
}

fn coordinates(f: &SymPoly<Rat>, index: &BTreeMap<Partition, usize>) -> Vec<Rat> {
    let mut row = vec![rat_int(0); index.len()];
    for (k, c) in f.terms() {
        row[index[k]] = c.clone();
    }
    row
}

fn kernel_on(spec: &IdealSpec, domain: &[Partition]) -> Result<Vec<SymPoly<Rat>>> {
    if domain.is_empty() {
        return Ok(vec![]);
    }
    let (rows, ncols) = image_rows(spec, domain)?;
    let transposed: Vec<Vec<Rat>> = (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect();
    Ok(rref(transposed, domain.len())
        .kernel()
        .into_iter()
        .map(|v| SymPoly::from_terms(spec.n, domain.iter().cloned().zip(v)))
        .collect())
}

fn weight_index(n: usize, w: u32) -> BTreeMap<Partition, usize> {
    enumerate_partitions(n, w)
        .into_iter()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect()
}

pub fn generator_table(
    spec: &IdealSpec,
    bound: u32,
    grading: Grading,
    prime: Option<u64>,
) -> Result<Vec<GeneratorRow>> {
    if !spec.is_homogeneous() {
        return Err(Error::BadPattern("generator degrees need a homogeneous ideal".into()));
    }
    let n = spec.n;
    let elementary: Vec<SymPoly<Rat>> = (0..=n).map(|k| SymPoly::elementary(k, n)).collect();
    match grading {
        Grading::Weight => {
            let bases: Vec<Vec<SymPoly<Rat>>> = (0..=bound)
                .into_par_iter()
                .map(|d| ideal_basis(spec, d))
                .collect::<Result<_>>()?;
            (0..=bound)
                .into_par_iter()
                .map(|d| {
                    let index = weight_index(n, d);
                    let mut rows = Vec::new();
                    for k in 1..=n.min(d as usize) {
                        for g in &bases[d as usize - k] {
                            rows.push(coordinates(&elementary[k].multiply(g), &index));
                        }
                    }
                    let dim = bases[d as usize].len();
                    let products_rank = rank_checked(rows, index.len(), prime)?;
                    Ok(GeneratorRow {
                        degree: d,
                        coefficient_degree: None,
                        dim,
                        products_rank,
                        new_generators: dim - products_rank,
                    })
                })
                .collect()
        }
        Grading::BinaryForm => {
            // bases[w][k] spans the bidegree (k, w) piece, k = 0..=w
            let bases: Vec<Vec<Vec<SymPoly<Rat>>>> = (0..=bound)
                .into_par_iter()
                .map(|w| {
                    let all = enumerate_partitions(n, w);
                    (0..=w)
                        .into_par_iter()
                        .map(|k| {
                            let domain: Vec<Partition> =
                                all.iter().filter(|l| l.part(1) <= k).cloned().collect();
                            kernel_on(spec, &domain)
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?;
            let cells: Vec<(u32, u32)> = (0..=bound).flat_map(|w| (1..=w).map(move |k| (w, k))).collect();
            let rows = cells
                .into_par_iter()
                .map(|(w, k)| {
                    let dim = bases[w as usize][k as usize].len();
                    if dim == 0 {
                        return Ok(None);
                    }
                    let index = weight_index(n, w);
                    let mut products: Vec<Vec<Rat>> = bases[w as usize][k as usize - 1]
                        .iter()
                        .map(|g| coordinates(g, &index))
                        .collect();
                    for j in 1..=n.min(w as usize) {
                        let lower = &bases[w as usize - j];
                        if let Some(b) = lower.get(k as usize - 1) {
                            for g in b {
                                products.push(coordinates(&elementary[j].multiply(g), &index));
                            }
                        }
                    }
                    let products_rank = rank_checked(products, index.len(), prime)?;
                    Ok(Some(GeneratorRow {
                        degree: w,
                        coefficient_degree: Some(k),
                        dim,
                        products_rank,
                        new_generators: dim - products_rank,
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(rows.into_iter().flatten().collect())
        }
    }
}

/// The multiset of minimal generator degrees (weights) up to `bound`,
/// ascending.
pub fn generator_degrees(spec: &IdealSpec, bound: u32, grading: Grading, prime: Option<u64>) -> Result<Vec<u32>> {
    let mut out: Vec<u32> = generator_table(spec, bound, grading, prime)?
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.degree, r.new_generators))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `M(n) = (n-1)(n-3)`.
pub fn min_degree(n: usize) -> u32 {
    assert!(n >= 4, "M(n) needs n >= 4");
    ((n - 1) * (n - 3)) as u32
}

/// `M(n,p) = s(s-1)(p-1) + 2sr` with `n = s(p-1) + r`.
pub fn min_degree_p(n: usize, p: usize) -> u32 {
    assert!(p >= 2 && p <= n, "M(n,p) needs 2 <= p <= n");
    let (s, r) = (n / (p - 1), n % (p - 1));
    (s * (s - 1) * (p - 1) + 2 * s * r) as u32
}

/// `(2n-5, 2n-7, …, 5, 3, 0, 0, 0)`.
pub fn lambda_min(n: usize) -> Partition {
    assert!(n >= 4, "λ_min needs n >= 4");
    let parts: Vec<u32> = (1..=n - 3).rev().map(|k| 2 * k as u32 + 1).collect();
    Partition::padded(&parts, n)
}

/// `Symm Π_{j≥4} (x_1 - x_j)(x_2 - x_j)(x_3 - x_j) Π_{4≤k<l} (x_k - x_l)²`.
pub fn q_polynomial(n: usize) -> SymPoly<Rat> {
    let x = |i| MultiPoly::<Rat>::var(n, i);
    let mut g = MultiPoly::one(n);
    for j in 3..n {
        for i in 0..3 {
            g = &g * &(&x(i) - &x(j));
        }
        for l in j + 1..n {
            let d = &x(j) - &x(l);
            g = &(&g * &d) * &d;
        }
    }
    SymPoly::symmetrize(&g)
}

#[derive(Clone, Debug)]
pub struct LambdaMinReport {
    pub lambda: Partition,
    pub q: SymPoly<Rat>,
    pub jack: SymPoly<Rat>,
    /// `Q = ratio · P̄_λ|_{θ=-1/2}`.
    pub ratio: Rat,
    pub in_ideal: bool,
}

pub fn lambda_min_generator(n: usize) -> Result<LambdaMinReport> {
    let lambda = lambda_min(n);
    let q = q_polynomial(n);
    let jack = specialize_theta(&modified_jack(&lambda, n)?, &rat(-1, 2))?;
    let lead = jack.leading_term().ok_or(Error::ProportionalityFailure)?;
    let ratio = q.coeff(&lead) / jack.coeff(&lead);
    if ratio == rat_int(0) || q != jack.scale(&ratio) {
        return Err(Error::ProportionalityFailure);
    }
    let in_ideal = substitute_pattern(&q, &Pattern::DoubleDiagonal)?.is_zero();
    Ok(LambdaMinReport {
        lambda,
        q,
        jack,
        ratio,
        in_ideal,
    })
}

/// Computed characters of `F₂/F`, `F/F₁`, `F₁` next to the three terms of
/// the closed form.
#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub n: usize,
    pub computed: [SeriesTable; 3],
    pub expected: [SeriesTable; 3],
}

impl FiltrationReport {
    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }
}

pub fn filtration_check(n: usize, bound: u32, prime: Option<u64>) -> Result<FiltrationReport> {
    let specs = [
        IdealSpec::double_diagonal(n),
        IdealSpec::double_and_triple(n),
        IdealSpec::p_fold(n, 2),
    ];
    let dims: Vec<[i64; 3]> = (0..=bound)
        .into_par_iter()
        .map(|d| {
            let mut out = [0i64; 3];
            for (k, s) in specs.iter().enumerate() {
                out[k] = ideal_dimension(s, d, prime)? as i64;
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let column = |f: &dyn Fn(&[i64; 3]) -> i64| SeriesTable::from_coeffs(dims.iter().map(f).collect());
    Ok(FiltrationReport {
        n,
        computed: [
            column(&|r| r[0] - r[1]),
            column(&|r| r[1] - r[2]),
            column(&|r| r[2]),
        ],
        expected: theorem_terms(n, bound as usize),
    })
}

/// Series of `dim I_d`, `d ≤ bound`.
pub fn dimension_series(spec: &IdealSpec, bound: u32, prime: Option<u64>) -> Result<SeriesTable> {
    let dims = (0..=bound)
        .into_par_iter()
        .map(|d| ideal_dimension(spec, d, prime).map(|x| x as i64))
        .collect::<Result<Vec<_>>>()?;
    Ok(SeriesTable::from_coeffs(dims))
}

/// Modular and rational ranks of the substitution map, for the screen
/// property check.
pub fn substitution_ranks(spec: &IdealSpec, d: u32, prime: u64) -> Result<(usize, Option<usize>)> {
    let (rows, ncols) = image_rows(spec, &spec.domain(d))?;
    let modular = rank_mod_p(&rows, prime);
    Ok((crate::linalg::rank(rows, ncols), modular))
}
