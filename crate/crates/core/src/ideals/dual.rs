//! The dual ring `R = ℚ[e_0, e_1, …]` and the relations `r_{i,j}` read off
//! `e(x)² e(y)²`, `e(x) = Σ e_i x^i`. A monomial `e_{λ_1} ⋯ e_{λ_n}` of
//! weight `n` is stored as the partition `λ` (zeros allowed).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::exactnum::{rat_int, Rat};
use crate::linalg::rank_checked;
use crate::partitions::{enumerate_partitions, is_admissible, Partition};

/// `r_{i,j}` as a map from weight-4 monomials to integer coefficients.
pub fn relation(i: u32, j: u32) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    for a in 0..=i {
        for c in 0..=j {
            let m = Partition::from_unsorted(vec![a, i - a, c, j - c]);
            *out.entry(m).or_insert(0) += 1;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualRingReport {
    pub n: usize,
    pub degree: u32,
    pub monomials: usize,
    pub relation_rank: usize,
    pub quotient_dim: usize,
    pub admissible_count: usize,
}

/// `dim R_{n,d} - rank{e_μ r_{i,j}}` against the number of admissible
/// monomials of weight `n` and degree `d`.
pub fn dual_ring_spanning(n: usize, d: u32, prime: Option<u64>) -> Result<DualRingReport> {
    assert!(n >= 4, "relations have weight 4");
    let monomials = enumerate_partitions(n, d);
    let index: BTreeMap<&Partition, usize> = monomials.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for s in 0..=d {
        for i in 0..=s {
            let r = relation(i, s - i);
            for mu in enumerate_partitions(n - 4, d - s) {
                let mut row = vec![rat_int(0); monomials.len()];
                for (m, c) in &r {
                    let mut parts = mu.parts().to_vec();
                    parts.extend_from_slice(m.parts());
                    let key = Partition::from_unsorted(parts);
                    row[index[&key]] += rat_int(*c);
                }
                rows.push(row);
            }
        }
    }
    let relation_rank = rank_checked(rows, monomials.len(), prime)?;
    Ok(DualRingReport {
        n,
        degree: d,
        monomials: monomials.len(),
        relation_rank,
        quotient_dim: monomials.len() - relation_rank,
        admissible_count: monomials.iter().filter(|m| is_admissible(m)).count(),
    })
}
