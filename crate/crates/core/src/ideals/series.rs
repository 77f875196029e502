//! Truncated integer power series in `q` and the closed-form characters.

use serde::Serialize;

/// Coefficients of `q^0, …, q^D`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SeriesTable {
    pub coeffs: Vec<i64>,
}

impl SeriesTable {
    pub fn zero(bound: usize) -> Self {
        Self {
            coeffs: vec![0; bound + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Self { coeffs }
    }

    /// `q^k`, truncated.
    pub fn monomial(k: usize, bound: usize) -> Self {
        let mut s = Self::zero(bound);
        if k <= bound {
            s.coeffs[k] = 1;
        }
        s
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }

    fn zip(&self, o: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        let bound = self.bound().min(o.bound());
        Self {
            coeffs: (0..=bound).map(|d| f(self.coeffs[d], o.coeffs[d])).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let bound = self.bound().min(o.bound());
        let mut out = Self::zero(bound);
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, &b) in o.coeffs.iter().enumerate().take(bound + 1 - i.min(bound + 1)) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// `1/(q)_k = Π_{j=1}^{k} 1/(1 - q^j)`.
    pub fn inv_q_pochhammer(k: usize, bound: usize) -> Self {
        let mut s = Self::monomial(0, bound);
        for j in 1..=k {
            // multiply by 1/(1 - q^j)
            for d in j..=bound {
                s.coeffs[d] += s.coeffs[d - j];
            }
        }
        s
    }

    /// `1 - q^k`.
    pub fn one_minus(k: usize, bound: usize) -> Self {
        Self::monomial(0, bound).sub(&Self::monomial(k, bound))
    }
}

/// The three terms `q^{(n-1)(n-3)}/((q)_1 (q)_{n-3})`,
/// `q^{(n-2)(n-1)}/((q)_1 (q)_{n-2})` and `q^{n(n-1)}/(q)_n`.
pub fn theorem_terms(n: usize, bound: usize) -> [SeriesTable; 3] {
    assert!(n >= 4, "the character formula needs n >= 4");
    let inv = |k| SeriesTable::inv_q_pochhammer(k, bound);
    let mono = |k| SeriesTable::monomial(k, bound);
    [
        mono((n - 1) * (n - 3)).mul(&inv(1)).mul(&inv(n - 3)),
        mono((n - 2) * (n - 1)).mul(&inv(1)).mul(&inv(n - 2)),
        mono(n * (n - 1)).mul(&inv(n)),
    ]
}

pub fn hilbert_series_theorem(n: usize, bound: usize) -> SeriesTable {
    let [a, b, c] = theorem_terms(n, bound);
    a.add(&b).add(&c)
}

/// The four case characters, in the order: all gaps at least 2; one
/// triple; one pair; one gap equal to 1.
pub fn case_series(n: usize, bound: usize) -> [SeriesTable; 4] {
    assert!(n >= 4, "the case characters need n >= 4");
    let inv_n = SeriesTable::inv_q_pochhammer(n, bound);
    let mono = |k| SeriesTable::monomial(k, bound);
    let om = |k| SeriesTable::one_minus(k, bound);
    let case1 = mono(n * (n - 1)).mul(&inv_n);
    let sum2 = (0..=n - 3).fold(SeriesTable::zero(bound), |acc, i| {
        acc.add(&mono(3 * i).mul(&om(n - 2 - i)).mul(&om(n - 1 - i)))
    });
    let case2 = mono((n - 1) * (n - 3)).mul(&inv_n).mul(&sum2);
    let sum3 = (0..=n - 2).fold(SeriesTable::zero(bound), |acc, i| acc.add(&mono(3 * i).mul(&om(n - 1 - i))));
    let case3 = mono((n - 2) * (n - 2)).mul(&inv_n).mul(&sum3);
    let case4 = mono((n - 2) * (n - 2) + 1).mul(&inv_n).mul(&sum3);
    [case1, case2, case3, case4]
}

pub fn hilbert_series_cases(n: usize, bound: usize) -> SeriesTable {
    case_series(n, bound)
        .iter()
        .fold(SeriesTable::zero(bound), |acc, s| acc.add(s))
}
