//! Exact linear algebra over the rationals.
//!
//! Rank computations clear denominators and run Bareiss elimination over the
//! integers; membership tests keep an incremental reduced echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Scales a rational row by the lcm of its denominators.
fn integral_row(row: &[Q]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Rank of a rational matrix by fraction-free (Bareiss) elimination.
pub fn fraction_free_rank(rows: &[Vec<Q>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integral_row(r)).collect();
    let nrows = m.len();
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Incrementally maintained reduced row echelon basis of a subspace of Q^n.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v` if it is independent of the current rows; returns whether it was added.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pivot].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let f = row[pivot].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((pivot, r));
        true
    }
}

/// Solves `a * x = b_k` for every right-hand side `b_k`; `a` must be square and nonsingular.
pub fn solve_many(a: &[Vec<Q>], rhs: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let k = rhs.len();
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(rhs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(
        (0..k)
            .map(|j| (0..n).map(|i| m[i][n + j].clone()).collect())
            .collect(),
    )
}

/// Leading principal minors of a square matrix, from elimination without pivoting.
///
/// Stops early (returning fewer minors) once a minor vanishes.
pub fn leading_minors(a: &[Vec<Q>]) -> Vec<Q> {
    let n = a.len();
    let mut m = a.to_vec();
    let mut minors = Vec::with_capacity(n);
    let mut det = Q::one();
    for col in 0..n {
        let pivot = m[col][col].clone();
        det *= &pivot;
        minors.push(det.clone());
        if pivot.is_zero() {
            break;
        }
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    minors
}

pub fn is_positive_definite(a: &[Vec<Q>]) -> bool {
    let minors = leading_minors(a);
    minors.len() == a.len() && minors.iter().all(Signed::is_positive)
}
