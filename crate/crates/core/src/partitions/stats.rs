use serde::Serialize;

use super::Partition;

/// Arm, leg, co-arm and co-leg of one box `(row, col)` of a diagram, 1-indexed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct BoxStat {
    pub row: usize,
    pub col: usize,
    pub arm: u32,
    pub leg: u32,
    pub coarm: u32,
    pub coleg: u32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BoxStats {
    /// Row by row, left to right.
    pub boxes: Vec<BoxStat>,
    pub n_lambda: u64,
}

pub fn box_stats(lambda: &Partition) -> BoxStats {
    let conj = lambda.conjugate();
    let mut boxes = Vec::with_capacity(lambda.weight() as usize);
    for (i0, &row_len) in lambda.parts().iter().enumerate() {
        for j0 in 0..row_len as usize {
            boxes.push(BoxStat {
                row: i0 + 1,
                col: j0 + 1,
                arm: row_len - j0 as u32 - 1,
                leg: conj[j0] - i0 as u32 - 1,
                coarm: j0 as u32,
                coleg: i0 as u32,
            });
        }
    }
    BoxStats {
        boxes,
        n_lambda: lambda.n_stat(),
    }
}

/// Order of vanishing of the principal specialization of `P_λ` at
/// `q = t^{-2}`, counted from the diagram with `n = λ.len()` variables:
/// boxes with `(l', a') = (n - 2k, k)` minus boxes with `(l, a) = (2k - 1, k)`,
/// `k ≥ 1`.
pub fn zeta_u0_combinatorial(lambda: &Partition) -> i64 {
    let n = lambda.len() as i64;
    let stats = box_stats(lambda);
    let zeros = stats
        .boxes
        .iter()
        .filter(|b| b.coarm >= 1 && b.coleg as i64 == n - 2 * b.coarm as i64)
        .count() as i64;
    let poles = stats
        .boxes
        .iter()
        .filter(|b| b.arm >= 1 && b.leg == 2 * b.arm - 1)
        .count() as i64;
    zeros - poles
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_u0_combinatorial(&p(&[6, 4, 2, 0])), 2);
        assert_eq!(zeta_u0_combinatorial(&p(&[2, 2, 2, 0])), 0);
        assert_eq!(zeta_u0_combinatorial(&p(&[4, 3, 2, 0])), 0);
        assert_eq!(zeta_u0_combinatorial(&p(&[9, 9, 5, 5])), 0);
    }

    #[test]
    fn box_stats_example() {
        let s = box_stats(&p(&[3, 1, 1, 1]));
        assert_eq!(s.boxes.len(), 6);
        assert_eq!(s.n_lambda, 6);
        let corner = s.boxes.iter().find(|b| b.row == 2 && b.col == 1).unwrap();
        assert_eq!((corner.arm, corner.leg, corner.coarm, corner.coleg), (0, 2, 0, 1));
        let first = s.boxes[0];
        assert_eq!((first.arm, first.leg), (2, 3));
    }

    #[test]
    fn hooks_sum_matches_n_stat() {
        // Σ leg = n(λ) and Σ coleg = n(λ)
        for l in crate::partitions::enumerate_partitions(4, 9) {
            let s = box_stats(&l);
            let legs: u64 = s.boxes.iter().map(|b| b.leg as u64).sum();
            let colegs: u64 = s.boxes.iter().map(|b| b.coleg as u64).sum();
            assert_eq!(legs, l.n_stat());
            assert_eq!(colegs, l.n_stat());
        }
    }
}
