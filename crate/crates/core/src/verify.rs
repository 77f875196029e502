//! The acceptance suite: sixteen exact checks shared by the `verify`
//! subcommand and the `acceptance` test target.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exactnum::{rat, rat_int, render_rat, Rat, UniPoly};
use crate::ideals::{
    case_series, dimension_series, dual_ring_spanning, filtration_check, generator_degrees,
    hilbert_series_cases, hilbert_series_theorem, ideal_dimension, lambda_min_generator, min_degree,
    min_degree_p, Grading, IdealSpec,
};
use crate::interp::{
    dehomogenize, interp_jack, knop_sahi_apply, normalization_zeta, pieri_check, shifted_sweep,
    zeta_jack_u0,
};
use crate::jack::{jack, modified_jack, specialize_theta, vanishes_on_double_diagonal};
use crate::linalg::{rank, DEFAULT_PRIME};
use crate::macdonald::{
    divisible_by_t_product, macdonald, modified_macdonald, operator_structure, special_q,
    specialize_q, symmetry_check, vanishes_on_t_diagonals, zeta_u0, OperatorStructure,
};
use crate::partitions::{
    classify, companions_bruteforce, count_admissible_by_case, enumerate_partitions,
    enumerate_up_to, is_admissible, zeta_u0_combinatorial, Case, Partition,
};
use crate::symfunc::{Pattern, SymPoly};

/// Names of the criteria, indexed from 1.
pub const CRITERIA: [&str; 16] = [
    "hilbert-series",
    "case-characters",
    "jack-basis",
    "macdonald-basis",
    "zeta-agreement",
    "pole-structure",
    "operator-structure",
    "companion-patterns",
    "symmetry",
    "divisibility",
    "generator-degrees",
    "lambda-min",
    "interpolation",
    "dehomogenization",
    "dual-ring",
    "filtration",
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Restricts the criteria that range over several `n` to this one.
    pub n: Option<usize>,
    pub t0s: Vec<Rat>,
    pub seed: u64,
    pub prime: Option<u64>,
    /// Adds the full generator list for `n = 6`.
    pub extended: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n: None,
            t0s: default_t0s(),
            seed: 20240917,
            prime: Some(DEFAULT_PRIME),
            extended: false,
        }
    }
}

pub fn default_t0s() -> Vec<Rat> {
    vec![rat_int(2), rat(3, 2), rat(5, 3)]
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: usize,
    pub label: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("criterion {:>2} {:<20} {status}  {}", self.id, self.label, self.detail)
    }
}

#[derive(Default)]
struct Tally {
    notes: Vec<String>,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn scoped(cfg: &VerifyConfig, default: &[usize]) -> Vec<usize> {
    cfg.n.map_or_else(|| default.to_vec(), |n| vec![n])
}

pub fn run_criterion(id: usize, cfg: &VerifyConfig) -> CriterionResult {
    assert!((1..=16).contains(&id), "criteria are numbered 1 to 16");
    let mut t = Tally::default();
    let outcome = match id {
        1 => hilbert(cfg, &mut t),
        2 => cases(cfg, &mut t),
        3 => jack_basis(&mut t),
        4 => macdonald_basis(cfg, &mut t),
        5 => zeta_agreement(cfg, &mut t),
        6 => poles(cfg, &mut t),
        7 => operator(cfg, &mut t),
        8 => companions(cfg, &mut t),
        9 => symmetry(cfg, &mut t),
        10 => divisibility(cfg, &mut t),
        11 => generators(cfg, &mut t),
        12 => lambda_min(cfg, &mut t),
        13 => interpolation(&mut t),
        14 => dehomogenization(cfg, &mut t),
        15 => dual_ring(cfg, &mut t),
        _ => filtration(cfg, &mut t),
    };
    if let Err(e) = outcome {
        t.failures.push(format!("error: {e}"));
    }
    let passed = t.failures.is_empty();
    let detail = if passed { t.notes.join("; ") } else { t.failures.join("; ") };
    CriterionResult {
        id,
        label: CRITERIA[id - 1],
        passed,
        detail,
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionResult> {
    (1..=16).map(|id| run_criterion(id, cfg)).collect()
}

fn admissible_of_weight(n: usize, d: u32) -> Vec<Partition> {
    enumerate_partitions(n, d).into_iter().filter(is_admissible).collect()
}

fn family_rank(family: &[SymPoly<Rat>], n: usize, d: u32) -> usize {
    let index: BTreeMap<Partition, usize> =
        enumerate_partitions(n, d).into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    let rows = family
        .iter()
        .map(|f| {
            let mut row = vec![rat_int(0); index.len()];
            for (k, c) in f.terms() {
                row[index[k]] = c.clone();
            }
            row
        })
        .collect();
    rank(rows, index.len())
}

fn hilbert(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for n in scoped(cfg, &[4, 5]) {
        let bound = match n {
            4 => 14,
            5 => 16,
            _ => min_degree(n) + 2,
        };
        let spec = IdealSpec::double_diagonal(n);
        let series = hilbert_series_theorem(n, bound as usize);
        let dims = dimension_series(&spec, bound, cfg.prime)?;
        for d in 0..=bound {
            let admissible = admissible_of_weight(n, d).len() as i64;
            let (dim, coeff) = (dims.coeff(d as usize), series.coeff(d as usize));
            t.check(dim == coeff && coeff == admissible, || {
                format!("n={n} d={d}: dim {dim}, series {coeff}, admissible {admissible}")
            });
        }
        t.note(format!("n={n} d<={bound}"));
    }
    Ok(())
}

fn cases(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for n in scoped(cfg, &[4, 5, 6]) {
        t.check(hilbert_series_cases(n, 20) == hilbert_series_theorem(n, 20), || {
            format!("n={n}: case sum differs from the character")
        });
    }
    let count_n = cfg.n.unwrap_or(4);
    let per_case = case_series(count_n, 12);
    for d in 0..=12u32 {
        let counts = count_admissible_by_case(count_n, d);
        t.check(counts.unclassified.is_empty(), || format!("n={count_n} d={d}: unclassified partitions"));
        for (k, s) in per_case.iter().enumerate() {
            let got = counts.by_pattern[k] as i64;
            t.check(got == s.coeff(d as usize), || {
                format!("n={count_n} d={d} case {}: {got} vs {}", k + 1, s.coeff(d as usize))
            });
        }
    }
    t.note(format!("sums to degree 20, per-case counts n={count_n} d<=12"));
    Ok(())
}

fn jack_basis(t: &mut Tally) -> Result<()> {
    let n = 4;
    let spec = IdealSpec::double_diagonal(n);
    let half = rat(-1, 2);
    let mut total = 0;
    for d in 0..=8 {
        let mut family = Vec::new();
        for l in admissible_of_weight(n, d) {
            match specialize_theta(&modified_jack(&l, n)?, &half) {
                Ok(f) => {
                    t.check(vanishes_on_double_diagonal(&f), || format!("{l}: does not vanish"));
                    family.push(f);
                }
                Err(e) => t.failures.push(format!("{l}: {e}")),
            }
        }
        let dim = ideal_dimension(&spec, d, None)?;
        let r = family_rank(&family, n, d);
        t.check(r == family.len() && r == dim, || {
            format!("d={d}: {} polynomials of rank {r}, dim {dim}", family.len())
        });
        total += family.len();
    }
    t.note(format!("{total} polynomials, n=4 d<=8"));
    Ok(())
}

fn macdonald_basis(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let n = 4;
    let mut rejected = 0;
    for t0 in &cfg.t0s {
        let q0 = special_q(t0);
        let spec = IdealSpec::new(n, vec![Pattern::DoubleTDiagonal(t0.clone())])?;
        let t0s = render_rat(t0);
        for d in 0..=8 {
            let mut family = Vec::new();
            for l in admissible_of_weight(n, d) {
                match specialize_q(&modified_macdonald(&l, n, t0)?, &q0) {
                    Ok(f) => {
                        t.check(vanishes_on_t_diagonals(&f, t0), || format!("t0={t0s} {l}: does not vanish"));
                        family.push(f);
                    }
                    Err(e) => t.failures.push(format!("t0={t0s} {l}: {e}")),
                }
                if classify(&l)?.case != Case::C {
                    let plain = specialize_q(&macdonald(&l, n, t0)?.expansion, &q0);
                    let fails = plain.map_or(true, |f| !vanishes_on_t_diagonals(&f, t0));
                    t.check(fails, || format!("t0={t0s} {l}: unmodified polynomial passes"));
                    rejected += 1;
                }
            }
            let dim = ideal_dimension(&spec, d, None)?;
            let r = family_rank(&family, n, d);
            t.check(r == family.len() && r == dim, || {
                format!("t0={t0s} d={d}: {} polynomials of rank {r}, dim {dim}", family.len())
            });
        }
    }
    let t0s: Vec<String> = cfg.t0s.iter().map(render_rat).collect();
    t.note(format!("t0 in {{{}}}, n=4 d<=8, {rejected} unmodified Case A/B rejected", t0s.join(", ")));
    Ok(())
}

/// Every `η + d` with `0 <= d_i < width`.
fn shifted_box(eta: &[u32], width: u32) -> Vec<Vec<u32>> {
    eta.iter().fold(vec![vec![]], |acc, &e| {
        acc.iter()
            .flat_map(|v| {
                (0..width).map(move |d| {
                    let mut w = v.clone();
                    w.push(e + d);
                    w
                })
            })
            .collect()
    })
}

fn zeta_agreement(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    const WIDTH: u32 = 3;
    for n in scoped(cfg, &[4, 5]) {
        for l in enumerate_up_to(n, 8) {
            let (a, b) = (zeta_u0_combinatorial(&l), zeta_u0(&l, n));
            t.check(a == b, || format!("{l}: box scan {a}, product {b}"));
        }
        let half = (n / 2) as i64;
        let thick: Vec<u32> = (0..n).map(|i| 10 * (n - 1 - i) as u32).collect();
        for parts in shifted_box(&thick, WIDTH) {
            let mu = Partition::new(parts)?;
            let z = zeta_u0(&mu, n);
            t.check(z == half && zeta_u0_combinatorial(&mu) == z, || format!("thick {mu}: {z}"));
        }
        let eta: Vec<u32> = (0..n - 2).map(|i| 10 * (n - 2 - i) as u32).collect();
        for a in shifted_box(&eta, WIDTH) {
            let mut parts = vec![a[0], a[0], a[1], a[1]];
            parts.extend_from_slice(&a[2..]);
            let mu = Partition::new(parts)?;
            let z = zeta_u0(&mu, n);
            t.check(z == half - 2 && zeta_u0_combinatorial(&mu) == z, || format!("double {mu}: {z}"));
        }
        t.note(format!("n={n}"));
    }
    Ok(())
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partitions are sorted")
}

fn poles(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let n = 4;
    let b = p(&[4, 3, 2, 0]);
    for t0 in &cfg.t0s {
        let q0 = special_q(t0);
        let t0s = render_rat(t0);
        let plain = macdonald(&b, n, t0)?.expansion.min_multiplicity_at(&q0);
        t.check(plain == Some(-1), || format!("t0={t0s}: P_{b} multiplicity {plain:?}"));
        let bar = modified_macdonald(&b, n, t0)?.min_multiplicity_at(&q0);
        t.check(bar.is_some_and(|m| m >= 0), || format!("t0={t0s}: modified multiplicity {bar:?}"));
        for l in [p(&[2, 2, 2, 0]), p(&[3, 1, 1, 1])] {
            let m = macdonald(&l, n, t0)?.expansion.min_multiplicity_at(&q0);
            t.check(m.is_some_and(|m| m >= 0), || format!("t0={t0s}: P_{l} multiplicity {m:?}"));
        }
    }
    t.note(format!("simple pole of P_{b} cancelled, Case A pole-free"));
    Ok(())
}

fn operator(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let n = 4;
    for t0 in &cfg.t0s {
        let t0s = render_rat(t0);
        for l in [p(&[2, 2, 2, 0]), p(&[3, 0, 0, 0])] {
            let s = operator_structure(&l, n, t0)?;
            t.check(matches!(s, OperatorStructure::Eigen { .. }), || format!("t0={t0s} {l}: {s:?}"));
        }
        let s = operator_structure(&p(&[4, 3, 2, 0]), n, t0)?;
        let ok = matches!(&s, OperatorStructure::JordanBlock { partner, coupling, .. }
            if *partner == p(&[3, 3, 3, 0]) && *coupling != rat_int(0));
        t.check(ok, || format!("t0={t0s} (4,3,2,0): {s:?}"));
    }
    t.note("Eigen for (2,2,2,0), (3,0,0,0); JordanBlock (4,3,2,0) with (3,3,3,0)");
    Ok(())
}

/// The two companions predicted for a Case A pivot `i`.
fn predicted_companions(l: &Partition, i: usize) -> [Partition; 2] {
    let v = l.part(i);
    let with = |block: [u32; 4]| {
        let mut parts = l.parts().to_vec();
        parts[i - 1..i + 3].copy_from_slice(&block);
        Partition::new(parts).expect("Case A gaps keep the result sorted")
    };
    [with([v + 1, v - 1, v - 1, v - 1]), with([v + 1, v, v - 1, v - 2])]
}

fn companions(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut checked = 0;
    for n in scoped(cfg, &[4, 5, 6]) {
        for l in enumerate_up_to(n, 12).into_iter().filter(is_admissible) {
            let Case::A(i) = classify(&l)?.case else { continue };
            let mut found = companions_bruteforce(&l);
            found.sort();
            let mut expected = predicted_companions(&l, i).to_vec();
            expected.sort();
            t.check(found == expected, || format!("{l}: found {found:?}"));
            checked += 1;
        }
    }
    t.note(format!("{checked} Case A partitions"));
    Ok(())
}

fn symmetry(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let n = 4;
    let t0 = rat_int(2);
    let pool = enumerate_up_to(n, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..20 {
        let l = pool.choose(&mut rng).expect("pool is nonempty");
        let m = pool.choose(&mut rng).expect("pool is nonempty");
        t.check(symmetry_check(l, m, n, &t0)?, || format!("({l}, {m})"));
    }
    t.note(format!("20 pairs, seed {}", cfg.seed));
    Ok(())
}

fn divisibility(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let n = 4;
    let sparse: Vec<Partition> = enumerate_up_to(n, 12)
        .into_iter()
        .filter(|l| (1..n).all(|i| l.part(i) >= l.part(i + 1) + 2))
        .collect();
    for t0 in &cfg.t0s {
        for l in &sparse {
            let f = specialize_q(&macdonald(l, n, t0)?.expansion, &special_q(t0))?;
            t.check(divisible_by_t_product(&f, t0), || format!("t0={} {l}", render_rat(t0)));
        }
    }
    let names: Vec<String> = sparse.iter().map(|l| l.to_string()).collect();
    t.note(names.join(", ").to_string());
    Ok(())
}

fn expected_generators(n: usize, p3: bool) -> Option<Vec<u32>> {
    match (n, p3) {
        (4, false) => Some((3..=9).collect()),
        (5, false) => Some((8..=17).collect()),
        (6, false) => Some((15..=27).collect()),
        (4, true) => Some(vec![4, 6]),
        (5, true) => Some(vec![8, 9, 10, 10, 12]),
        _ => None,
    }
}

fn generator_bound(n: usize, p3: bool) -> u32 {
    match (n, p3) {
        (4, _) => 12,
        (5, false) => 18,
        (5, true) => 14,
        _ => 28,
    }
}

fn first_nonzero(spec: &IdealSpec, upto: u32, prime: Option<u64>) -> Result<Option<u32>> {
    for d in 0..=upto {
        if ideal_dimension(spec, d, prime)? > 0 {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn generators(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for n in scoped(cfg, &[4, 5, 6]) {
        for (spec, p3, m) in [
            (IdealSpec::double_diagonal(n), false, min_degree(n)),
            (IdealSpec::p_fold(n, 3), true, min_degree_p(n, 3)),
        ] {
            let name = if p3 { format!("I{n}(3)") } else { format!("I{n}") };
            let first = first_nonzero(&spec, m, cfg.prime)?;
            t.check(first == Some(m), || format!("{name}: first nonzero degree {first:?}, M = {m}"));
            let Some(expected) = expected_generators(n, p3) else { continue };
            if n >= 6 && !cfg.extended {
                continue;
            }
            let got = generator_degrees(&spec, generator_bound(n, p3), Grading::BinaryForm, cfg.prime)?;
            t.check(got.first() == Some(&m), || format!("{name}: lowest generator {:?}", got.first()));
            t.check(got == expected, || format!("{name}: computed {got:?}, expected {expected:?}"));
            t.note(format!("{name} {got:?}"));
        }
    }
    Ok(())
}

fn lambda_min(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for n in scoped(cfg, &[4, 5]) {
        let r = lambda_min_generator(n)?;
        let spec = IdealSpec::double_diagonal(n);
        let ok = !r.q.is_zero() && r.q.degree() == Some(min_degree(n)) && r.in_ideal && r.q.is_homogeneous();
        t.check(ok, || format!("n={n}: Q has degree {:?}, in ideal {}", r.q.degree(), r.in_ideal));
        t.check(vanishes_on_double_diagonal(&r.q), || format!("n={n}: Q does not vanish"));
        t.check(ideal_dimension(&spec, min_degree(n), None)? == 1, || format!("n={n}: dim I_M != 1"));
        t.note(format!("n={n} {} ratio {}", r.lambda, render_rat(&r.ratio)));
    }
    Ok(())
}

fn interpolation(t: &mut Tally) -> Result<()> {
    let n = 4;
    let mut swept = 0;
    for l in enumerate_up_to(n, 6).into_iter().filter(is_admissible) {
        let s = shifted_sweep(&l, n, 3)?;
        t.check(s.failures.is_empty(), || format!("{l}: nonzero at {:?}", s.failures));
        swept += s.checked;
        pieri_check(&l, n)?;
    }
    let (a, nu) = (p(&[2, 2, 2, 0]), p(&[3, 1, 1, 1]));
    let expect = (n / 2) as i64 - 2;
    let (za, zn) = (zeta_jack_u0(&a, n), zeta_jack_u0(&nu, n));
    t.check(za == expect && zn == expect, || format!("u0 multiplicities {za}, {zn}"));
    let z = normalization_zeta(&nu, n);
    t.check(z > 0, || format!("normalization multiplicity {z}"));
    t.note(format!("{swept} evaluations, Pieri residuals zero for |λ|<=6"));
    Ok(())
}

fn dehomogenization(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for n in 1..=4 {
        for l in enumerate_up_to(n, 4) {
            let image = dehomogenize(&jack(&l, n).expansion)?;
            t.check(image == interp_jack(&l, n).expansion, || format!("{l}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = 3;
    let pool = enumerate_up_to(n, 3);
    let samples = 5;
    for _ in 0..samples {
        let terms: Vec<(Partition, UniPoly)> = (0..3)
            .map(|_| {
                let c = UniPoly::from_coeffs(vec![rat_int(rng.gen_range(-4..=4)), rat_int(rng.gen_range(-4..=4))]);
                (pool.choose(&mut rng).expect("pool is nonempty").clone(), c)
            })
            .collect();
        let f = SymPoly::from_terms(n, terms).expand();
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            let ab = knop_sahi_apply(a, &knop_sahi_apply(b, &f)?)?;
            let ba = knop_sahi_apply(b, &knop_sahi_apply(a, &f)?)?;
            t.check(ab == ba, || format!("E{a}E{b} != E{b}E{a}"));
        }
    }
    t.note(format!("n<=4 |λ|<=4, {samples} commutator samples"));
    Ok(())
}

fn dual_ring(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for d in 0..=10 {
        let r = dual_ring_spanning(4, d, cfg.prime)?;
        t.check(r.quotient_dim == r.admissible_count, || {
            format!("d={d}: quotient {}, admissible {}", r.quotient_dim, r.admissible_count)
        });
    }
    t.note("n=4 d<=10");
    Ok(())
}

fn filtration(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let r = filtration_check(4, 14, cfg.prime)?;
    t.check(r.matches(), || format!("{r:?}"));
    t.note("n=4 d<=14");
    Ok(())
}
