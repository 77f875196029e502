//! Fixed-length integer partitions and the combinatorics built on them.

mod admissible;
mod stats;

pub use admissible::{
    classify, companions_bruteforce, count_admissible_by_case, gap_pattern, is_admissible,
    AdmissibleCounts, Case, CaseTag, GapPattern,
};
pub use stats::{box_stats, zeta_u0_combinatorial, BoxStat, BoxStats};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing vector of nonnegative parts with explicit trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` into decreasing order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// Length `n` partition, zero padded; panics if `parts` is longer than `n`
    /// or not decreasing.
    pub fn padded(parts: &[u32], n: usize) -> Self {
        assert!(parts.len() <= n, "{parts:?} longer than {n}");
        let mut v = parts.to_vec();
        v.resize(n, 0);
        Self::new(v).expect("parts must be weakly decreasing")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i`, 1-indexed; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            panic!("parts are 1-indexed");
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    /// Conjugate partition `λ'`, of length `λ_1`.
    pub fn conjugate(&self) -> Vec<u32> {
        let top = self.0.first().copied().unwrap_or(0);
        (1..=top)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect()
    }

    /// `n(λ) = Σ (i-1) λ_i`
    pub fn n_stat(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Exponents `a_k = #{j : λ_j = k}` of the dual monomial `Π e_{λ_j}`.
    pub fn exponents(&self) -> Vec<usize> {
        let top = self.0.first().copied().unwrap_or(0) as usize;
        let mut a = vec![0; top + 1];
        for &p in &self.0 {
            a[p as usize] += 1;
        }
        a
    }

    pub fn gaps(&self) -> Vec<u32> {
        self.0.windows(2).map(|w| w[0] - w[1]).collect()
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of comparing two partitions of equal weight in dominance order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
}

pub fn dominance(a: &Partition, b: &Partition) -> Result<Dominance> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch(a.weight(), b.weight()));
    }
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0u32, 0u32);
    let (mut ge, mut le) = (true, true);
    for i in 1..=len {
        sa += a.part(i);
        sb += b.part(i);
        match sa.cmp(&sb) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    })
}

/// `a ≤ b` in dominance order (weights must agree).
pub fn dominated_by(a: &Partition, b: &Partition) -> bool {
    matches!(dominance(a, b), Ok(Dominance::Less | Dominance::Equal))
}

/// All partitions of `d` into at most `n` parts, padded to length `n`, in
/// reverse-lexicographic order. `n = 0` yields the empty partition for `d = 0`.
pub fn enumerate_partitions(n: usize, d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fill(n, d, d, &mut cur, &mut out);
    out
}

fn fill(n: usize, remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let slots = n - cur.len();
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
        }
        return;
    }
    if remaining as u64 > max as u64 * slots as u64 {
        return;
    }
    let hi = remaining.min(max);
    for p in (0..=hi).rev() {
        cur.push(p);
        fill(n, remaining - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions of weight at most `d`, grouped by increasing weight.
pub fn enumerate_up_to(n: usize, d: u32) -> Vec<Partition> {
    (0..=d).flat_map(|k| enumerate_partitions(n, k)).collect()
}

/// The multiset `{ j + 2λ_j }`, sorted. Two partitions share the spectrum
/// of the first Macdonald operator at `q = t^{-2}` exactly when these agree.
pub fn diagonal_multiset(lambda: &Partition) -> Vec<u32> {
    let mut v: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &p)| j as u32 + 1 + 2 * p)
        .collect();
    v.sort_unstable();
    v
}

/// Distinct rearrangements of an exponent vector.
pub fn distinct_permutations(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut v = parts.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

/// Lexicographic successor; false once the sequence is the last arrangement.
pub(crate) fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
