use rootloci::exactnum::{rat, rat_int, Rat};
use rootloci::ideals::{
    generator_table, hilbert_series_theorem, ideal_basis, ideal_dimension, Grading, IdealSpec,
};
use rootloci::jack::{modified_jack, specialize_theta};
use rootloci::linalg::{rank, DEFAULT_PRIME};
use rootloci::partitions::{enumerate_partitions, is_admissible, Partition};
use rootloci::symfunc::{Pattern, SymPoly};

fn coordinates(family: &[SymPoly<Rat>], basis: &[Partition]) -> Vec<Vec<Rat>> {
    family.iter().map(|f| basis.iter().map(|k| f.coeff(k)).collect()).collect()
}

#[test]
fn dimension_series_and_admissible_counts_agree() {
    for n in [4usize, 5] {
        let bound = (n * (n - 1) + 2) as u32;
        let series = hilbert_series_theorem(n, bound as usize);
        let spec = IdealSpec::double_diagonal(n);
        for d in 0..=bound {
            let admissible = enumerate_partitions(n, d).into_iter().filter(is_admissible).count();
            let dim = ideal_dimension(&spec, d, Some(DEFAULT_PRIME)).unwrap();
            assert_eq!((dim as i64, admissible as i64), (series.coeff(d as usize), series.coeff(d as usize)), "n={n} d={d}");
        }
    }
}

#[test]
fn t_deformed_dimensions_match() {
    let i4 = IdealSpec::double_diagonal(4);
    for t0 in [rat_int(2), rat(3, 2), rat(5, 3)] {
        let j4 = IdealSpec::new(4, vec![Pattern::DoubleTDiagonal(t0)]).unwrap();
        for d in 0..=10 {
            assert_eq!(ideal_dimension(&j4, d, None).unwrap(), ideal_dimension(&i4, d, None).unwrap(), "d={d}");
        }
    }
}

#[test]
fn modular_screen_agrees_with_rational_rank() {
    for spec in [IdealSpec::double_diagonal(5), IdealSpec::p_fold(5, 3), IdealSpec::double_and_triple(5)] {
        for d in 0..=12 {
            assert_eq!(ideal_dimension(&spec, d, None).unwrap(), ideal_dimension(&spec, d, Some(DEFAULT_PRIME)).unwrap());
        }
    }
}

#[test]
fn no_quartic_generators_above_nine() {
    let rows = generator_table(&IdealSpec::double_diagonal(4), 14, Grading::BinaryForm, Some(DEFAULT_PRIME)).unwrap();
    assert!(rows.iter().filter(|r| r.degree >= 10).all(|r| r.new_generators == 0));
}

#[test]
fn kernel_is_spanned_by_modified_jack() {
    let spec = IdealSpec::double_diagonal(4);
    let half = rat(-1, 2);
    for d in 0..=8 {
        let basis = enumerate_partitions(4, d);
        let kernel = ideal_basis(&spec, d).unwrap();
        let jacks: Vec<SymPoly<Rat>> = basis
            .iter()
            .filter(|l| is_admissible(l))
            .map(|l| specialize_theta(&modified_jack(l, 4).unwrap(), &half).unwrap())
            .collect();
        let both: Vec<SymPoly<Rat>> = kernel.iter().chain(&jacks).cloned().collect();
        let r = |fam: &[SymPoly<Rat>]| rank(coordinates(fam, &basis), basis.len());
        assert_eq!(r(&kernel), kernel.len());
        assert_eq!((r(&jacks), r(&both)), (kernel.len(), kernel.len()), "d={d}");
    }
}
