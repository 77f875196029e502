use proptest::prelude::*;
use rootloci::partitions::{
    classify, diagonal_multiset, dominance, enumerate_up_to, gap_pattern, is_admissible,
    zeta_u0_combinatorial, Case, Dominance, Partition,
};

#[test]
fn companions_share_diagonals() {
    for n in 4..=6 {
        for l in enumerate_up_to(n, 12).into_iter().filter(is_admissible) {
            let tag = classify(&l).unwrap();
            assert_eq!(tag.companion.is_some(), tag.case != Case::C, "{l}");
            let Some(nu) = tag.companion else { continue };
            assert_eq!(diagonal_multiset(&nu), diagonal_multiset(&l), "{l}");
            match tag.case {
                Case::A(_) => assert_eq!(dominance(&l, &nu).unwrap(), Dominance::Incomparable, "{l}"),
                Case::B(_) => assert_eq!(classify(&nu).unwrap().case, Case::C, "{l} -> {nu}"),
                Case::C => unreachable!(),
            }
        }
    }
}

#[test]
fn gap_patterns_are_disjoint_and_exhaustive() {
    for n in 4..=6 {
        for l in enumerate_up_to(n, 14).into_iter().filter(is_admissible) {
            assert_eq!(gap_pattern(&l).len(), 1, "{l}");
        }
    }
}

proptest! {
    #[test]
    fn sparse_partitions_have_zeta_half_n(n in 4usize..=7, extra in prop::collection::vec(0u32..4, 7)) {
        let mut parts = vec![0u32; n];
        for i in (0..n - 1).rev() {
            parts[i] = parts[i + 1] + 2 + extra[i];
        }
        let l = Partition::new(parts).unwrap();
        prop_assert_eq!(zeta_u0_combinatorial(&l), (n / 2) as i64);
    }
}
