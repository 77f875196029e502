//! Dense exact linear algebra over any [`Field`], plus a single-prime
//! modular rank for rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Rat};

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    /// Nonzero rows only, each with a unit at its pivot column.
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<F: Field> Echelon<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of `{v : A v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(); self.ncols];
                v[free] = F::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[free].is_zero() {
                        v[p] = -row[free].clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Gauss–Jordan elimination. Within each column the pivot is the nonzero
/// entry of smallest [`Ring::weight`](crate::exactnum::Ring::weight), which
/// keeps rational-function entries small.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Echelon<F> {
    for r in &rows {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(best) = (top..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].weight())
        else {
            continue;
        };
        rows.swap(top, best);
        let inv = rows[top][col].inv();
        for x in rows[top][col..].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * &inv;
            }
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    row[c] = row[c].clone() - factor.clone() * &pivot_row[c];
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    Echelon {
        rows,
        pivots,
        ncols,
    }
}

pub fn rank<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> usize {
    rref(rows, ncols).rank()
}

pub fn kernel<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    rref(rows, ncols).kernel()
}

/// Unique solution of the square system `A x = b`.
pub fn solve<F: Field>(a: Vec<Vec<F>>, b: Vec<F>) -> Result<Vec<F>> {
    let n = b.len();
    if a.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: a.len(),
        });
    }
    let ech = rref(augment(a, b), n + 1);
    if ech.pivots.len() != n || ech.pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(Error::SingularSystem);
    }
    Ok(ech.rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Some solution of `A x = b` (free variables set to zero), or
/// [`Error::NoRepresentation`] when the system is inconsistent.
pub fn solve_consistent<F: Field>(a: Vec<Vec<F>>, b: Vec<F>, ncols: usize) -> Result<Vec<F>> {
    let ech = rref(augment(a, b), ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return Err(Error::NoRepresentation);
    }
    let mut x = vec![F::zero(); ncols];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        x[p] = row[ncols].clone();
    }
    Ok(x)
}

fn augment<F: Field>(a: Vec<Vec<F>>, b: Vec<F>) -> Vec<Vec<F>> {
    a.into_iter()
        .zip(b)
        .map(|(mut row, bi)| {
            row.push(bi);
            row
        })
        .collect()
}

/// `A x` for a dense matrix.
pub fn mat_vec<F: Field>(a: &[Vec<F>], x: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .filter(|(r, v)| !r.is_zero() && !v.is_zero())
                .fold(F::zero(), |acc, (r, v)| acc + &(r.clone() * v))
        })
        .collect()
}

/// Default prime for the modular rank screen, `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Residue of a rational modulo `p`, or `None` when `p` divides the
/// denominator.
pub fn rat_mod_p(r: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = r.numer().mod_floor(&pb).to_u64().unwrap();
    let den = r.denom().mod_floor(&pb).to_u64().unwrap();
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, inv_mod(den, p), p))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Rank of a matrix reduced modulo the prime `p`. Never exceeds the
/// rational rank. `None` if some entry has a denominator divisible by `p`.
pub fn rank_mod_p(rows: &[Vec<Rat>], p: u64) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| rat_mod_p(x, p)).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][col], p);
        for x in m[rank][col..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for c in col..ncols {
                if pivot_row[c] != 0 {
                    row[c] = (row[c] + p - mul_mod(f, pivot_row[c], p)) % p;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Some(rank)
}

/// Rational rank, cross-checked against the rank modulo `prime` when one is
/// given. A disagreement is reported as [`Error::ModularMismatch`].
pub fn rank_checked(rows: Vec<Vec<Rat>>, ncols: usize, prime: Option<u64>) -> Result<usize> {
    let modular = prime.and_then(|p| rank_mod_p(&rows, p));
    let exact = rank(rows, ncols);
    match modular {
        Some(m) if m != exact => Err(Error::ModularMismatch {
            rational: exact,
            modular: m,
        }),
        _ => Ok(exact),
    }
}
