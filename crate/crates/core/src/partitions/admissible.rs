//! Admissibility of dual monomials and the classification of admissible
//! partitions.

use serde::Serialize;

use super::{diagonal_multiset, enumerate_partitions, Partition};
use crate::error::{Error, Result};

/// True iff the monomial `Π e_{λ_j}` contains no factor `m1·m2` with each
/// `m_k` of the form `e_i²` or `e_j e_{j+1}`, and no factor `e_i³ e_{i+2}`.
///
/// Every 4-letter sub-multiset of the monomial is tested against both
/// patterns; letters may be reused up to their multiplicity.
pub fn is_admissible(lambda: &Partition) -> bool {
    let a = lambda.exponents();
    let letters: Vec<usize> = (0..a.len()).filter(|&k| a[k] > 0).collect();
    let mut quad = [0usize; 4];
    !any_quadruple(&a, &letters, 0, 0, &mut quad, &mut |q| {
        matches_pair_product(q) || matches_cube_pattern(q)
    })
}

/// Enumerates sorted 4-sub-multisets of the letters with their multiplicities.
fn any_quadruple(
    counts: &[usize],
    letters: &[usize],
    start: usize,
    depth: usize,
    quad: &mut [usize; 4],
    pred: &mut impl FnMut(&[usize; 4]) -> bool,
) -> bool {
    if depth == 4 {
        return pred(quad);
    }
    for (li, &l) in letters.iter().enumerate().skip(start) {
        let used = quad[..depth].iter().filter(|&&x| x == l).count();
        if used >= counts[l] {
            continue;
        }
        quad[depth] = l;
        if any_quadruple(counts, letters, li, depth + 1, quad, pred) {
            return true;
        }
    }
    false
}

fn is_pair(a: usize, b: usize) -> bool {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    hi == lo || hi == lo + 1
}

fn matches_pair_product(q: &[usize; 4]) -> bool {
    (is_pair(q[0], q[1]) && is_pair(q[2], q[3]))
        || (is_pair(q[0], q[2]) && is_pair(q[1], q[3]))
        || (is_pair(q[0], q[3]) && is_pair(q[1], q[2]))
}

fn matches_cube_pattern(q: &[usize; 4]) -> bool {
    q[0] == q[1] && q[1] == q[2] && q[3] == q[0] + 2
}

/// The three families of admissible partitions.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "case", content = "pivot")]
pub enum Case {
    /// `λ_i = λ_{i+1} = λ_{i+2} = λ_{i+3} + 2` (1-indexed pivot).
    A(usize),
    /// `λ_i = λ_{i+1} + 1 = λ_{i+2} + 2` (1-indexed pivot).
    B(usize),
    C,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CaseTag {
    pub case: Case,
    pub companion: Option<Partition>,
}

fn gap(l: &Partition, j: usize) -> i64 {
    l.part(j) as i64 - l.part(j + 1) as i64
}

fn case_a_pivot(l: &Partition) -> Option<usize> {
    let n = l.len();
    (1..=n.saturating_sub(3)).find(|&i| {
        let v = l.part(i);
        let run = v == l.part(i + 1) && v == l.part(i + 2) && v == l.part(i + 3) + 2;
        run && (i < 2 || gap(l, i - 1) > 2)
            && (1..n)
                .filter(|&j| j + 2 <= i || j >= i + 3)
                .all(|j| gap(l, j) >= 2)
    })
}

fn case_b_pivot(l: &Partition) -> Option<usize> {
    let n = l.len();
    (1..=n.saturating_sub(2)).find(|&i| {
        let v = l.part(i);
        let run = v == l.part(i + 1) + 1 && v == l.part(i + 2) + 2;
        run && (1..n)
            .filter(|&j| j < i || j >= i + 2)
            .all(|j| gap(l, j) >= 2)
    })
}

/// Sorts an admissible partition into Case A, B or C, with the companion
/// `ν` that shares its diagonal multiset in Cases A and B.
pub fn classify(lambda: &Partition) -> Result<CaseTag> {
    if !is_admissible(lambda) {
        return Err(Error::NotAdmissible(lambda.clone()));
    }
    if let Some(i) = case_a_pivot(lambda) {
        let mut nu = lambda.parts().to_vec();
        nu[i - 1] += 1;
        nu[i] -= 1;
        nu[i + 1] -= 1;
        nu[i + 2] += 1;
        return Ok(CaseTag {
            case: Case::A(i),
            companion: Some(Partition::new(nu)?),
        });
    }
    if let Some(i) = case_b_pivot(lambda) {
        let mut nu = lambda.parts().to_vec();
        nu[i - 1] -= 1;
        nu[i + 1] += 1;
        return Ok(CaseTag {
            case: Case::B(i),
            companion: Some(Partition::new(nu)?),
        });
    }
    Ok(CaseTag {
        case: Case::C,
        companion: None,
    })
}

/// Every `μ ≠ λ` of the same length and weight with the same diagonal
/// multiset, by exhaustive search.
pub fn companions_bruteforce(lambda: &Partition) -> Vec<Partition> {
    let target = diagonal_multiset(lambda);
    enumerate_partitions(lambda.len(), lambda.weight())
        .into_iter()
        .filter(|mu| mu != lambda && diagonal_multiset(mu) == target)
        .collect()
}

/// Gap shapes used to count admissible partitions by generating function.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, PartialOrd, Ord)]
pub enum GapPattern {
    /// Every gap `λ_i - λ_{i+1}` is at least 2.
    Sparse,
    /// One run `λ_i = λ_{i+1} = λ_{i+2}` preceded by a gap of at least 3.
    Triple,
    /// One pair `λ_i = λ_{i+1}` preceded by a gap of at least 1.
    Pair,
    /// One gap equal to 1, preceded by anything.
    Step,
}

impl GapPattern {
    pub const ALL: [GapPattern; 4] = [
        GapPattern::Sparse,
        GapPattern::Triple,
        GapPattern::Pair,
        GapPattern::Step,
    ];
}

/// Every pattern whose gap conditions `λ` satisfies.
pub fn gap_pattern(lambda: &Partition) -> Vec<GapPattern> {
    let n = lambda.len();
    let g = |j: usize| gap(lambda, j);
    let others_ok = |skip: &dyn Fn(usize) -> bool| (1..n).filter(|&j| !skip(j)).all(|j| g(j) >= 2);
    let mut out = Vec::new();
    if (1..n).all(|j| g(j) >= 2) {
        out.push(GapPattern::Sparse);
    }
    if (1..=n.saturating_sub(2)).any(|i| {
        g(i) == 0
            && g(i + 1) == 0
            && (i < 2 || g(i - 1) >= 3)
            && others_ok(&|j| j + 1 >= i && j <= i + 1)
    }) {
        out.push(GapPattern::Triple);
    }
    if (1..n).any(|i| {
        g(i) == 0 && (i < 2 || g(i - 1) >= 1) && others_ok(&|j| j + 1 >= i && j <= i)
    }) {
        out.push(GapPattern::Pair);
    }
    if (1..n).any(|i| g(i) == 1 && others_ok(&|j| j + 1 >= i && j <= i)) {
        out.push(GapPattern::Step);
    }
    out
}

/// Admissible partitions of one degree, split by [`GapPattern`].
#[derive(Clone, Debug, Serialize)]
pub struct AdmissibleCounts {
    pub n: usize,
    pub degree: u32,
    pub admissible: Vec<Partition>,
    /// Count per pattern, in [`GapPattern::ALL`] order.
    pub by_pattern: [usize; 4],
    /// Admissible partitions matching no pattern or several.
    pub unclassified: Vec<Partition>,
}

impl AdmissibleCounts {
    pub fn total(&self) -> usize {
        self.admissible.len()
    }
}

pub fn count_admissible_by_case(n: usize, d: u32) -> AdmissibleCounts {
    let admissible: Vec<Partition> = enumerate_partitions(n, d)
        .into_iter()
        .filter(is_admissible)
        .collect();
    let mut by_pattern = [0; 4];
    let mut unclassified = Vec::new();
    for l in &admissible {
        match gap_pattern(l).as_slice() {
            [one] => by_pattern[GapPattern::ALL.iter().position(|g| g == one).unwrap()] += 1,
            _ => unclassified.push(l.clone()),
        }
    }
    AdmissibleCounts {
        n,
        degree: d,
        admissible,
        by_pattern,
        unclassified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{dominance, Dominance};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Independent admissibility oracle: tries every way of choosing four
    /// positions of λ and tests the sorted letters directly.
    fn admissible_by_positions(l: &Partition) -> bool {
        let v = l.parts();
        let n = v.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let mut q = [v[a], v[b], v[c], v[d]];
                        q.sort_unstable();
                        let pair = |x: u32, y: u32| x.abs_diff(y) <= 1;
                        let n1 = (pair(q[0], q[1]) && pair(q[2], q[3]))
                            || (pair(q[0], q[2]) && pair(q[1], q[3]))
                            || (pair(q[0], q[3]) && pair(q[1], q[2]));
                        let n2 = q[0] == q[2] && q[3] == q[0] + 2;
                        if n1 || n2 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn admissibility_examples() {
        assert!(!is_admissible(&p(&[0, 0, 0, 0])));
        assert!(!is_admissible(&p(&[3, 1, 1, 1])));
        assert!(is_admissible(&p(&[2, 2, 2, 0])));
        assert!(is_admissible(&p(&[4, 3, 2, 0])));
        assert!(!is_admissible(&p(&[3, 2, 1, 0])));
    }

    #[test]
    fn admissibility_agrees_with_position_oracle() {
        for n in 4..=6 {
            for d in 0..=14 {
                for l in enumerate_partitions(n, d) {
                    assert_eq!(is_admissible(&l), admissible_by_positions(&l), "{l}");
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let a = classify(&p(&[2, 2, 2, 0])).unwrap();
        assert_eq!(a.case, Case::A(1));
        assert_eq!(a.companion, Some(p(&[3, 1, 1, 1])));
        let b = classify(&p(&[4, 3, 2, 0])).unwrap();
        assert_eq!(b.case, Case::B(1));
        assert_eq!(b.companion, Some(p(&[3, 3, 3, 0])));
        assert_eq!(classify(&p(&[3, 3, 3, 0])).unwrap().case, Case::C);
        assert_eq!(classify(&p(&[3, 0, 0, 0])).unwrap().case, Case::C);
        assert!(matches!(classify(&p(&[3, 2, 1, 0])), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn companion_properties_hold_on_sweep() {
        for n in 4..=6 {
            for d in 0..=14 {
                for l in enumerate_partitions(n, d).into_iter().filter(is_admissible) {
                    let tag = classify(&l).unwrap();
                    match tag.case {
                        Case::A(_) => {
                            let nu = tag.companion.unwrap();
                            assert_eq!(diagonal_multiset(&nu), diagonal_multiset(&l));
                            assert_eq!(dominance(&l, &nu).unwrap(), Dominance::Incomparable);
                        }
                        Case::B(_) => {
                            let nu = tag.companion.unwrap();
                            assert_eq!(diagonal_multiset(&nu), diagonal_multiset(&l));
                            assert_eq!(classify(&nu).unwrap().case, Case::C, "{l} -> {nu}");
                        }
                        Case::C => assert!(tag.companion.is_none()),
                    }
                }
            }
        }
    }

    #[test]
    fn companions_examples() {
        let mut found = companions_bruteforce(&p(&[2, 2, 2, 0]));
        found.sort();
        assert_eq!(found, vec![p(&[3, 1, 1, 1]), p(&[3, 2, 1, 0])]);
        assert!(companions_bruteforce(&p(&[6, 4, 2, 0])).is_empty());
        // fixture from the brute-force oracle
        assert!(companions_bruteforce(&p(&[3, 0, 0, 0])).is_empty());
    }

    #[test]
    fn admissible_counts_examples() {
        let c3 = count_admissible_by_case(4, 3);
        assert_eq!(c3.admissible, vec![p(&[3, 0, 0, 0])]);
        let c5 = count_admissible_by_case(4, 5);
        assert_eq!(c5.admissible, vec![p(&[5, 0, 0, 0]), p(&[4, 1, 0, 0]), p(&[3, 1, 1, 0])]);
        let c6 = count_admissible_by_case(4, 6);
        assert_eq!(
            c6.admissible,
            vec![
                p(&[6, 0, 0, 0]),
                p(&[5, 1, 0, 0]),
                p(&[4, 2, 0, 0]),
                p(&[4, 1, 1, 0]),
                p(&[2, 2, 2, 0])
            ]
        );
    }

    #[test]
    fn gap_patterns_partition_the_admissible_set() {
        for n in 4..=6 {
            for d in 0..=16 {
                let c = count_admissible_by_case(n, d);
                assert!(c.unclassified.is_empty(), "n={n} d={d}: {:?}", c.unclassified);
                assert_eq!(c.by_pattern.iter().sum::<usize>(), c.total());
            }
        }
    }
}
