//! Exact dense linear algebra over Q: echelon forms, rank, null spaces.

use num_bigint::BigInt;

use crate::algebra::monomial::IntegerVector;
use crate::algebra::rational::{primitive_integer_vector, Rational};

/// Reduced row-echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Non-zero rows, each with a leading one at `pivots[i]`.
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis of `{x : row . x = 0 for every row}` as primitive integer vectors,
    /// one per free column, in increasing free-column order.
    pub fn null_space(&self) -> Vec<IntegerVector> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[f] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -&row[f];
                }
                IntegerVector::new(primitive_integer_vector(&v))
            })
            .collect()
    }

    /// Reduces `v` modulo the row space: zeroes every pivot coordinate.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &(&c * r);
                }
            }
        }
        out
    }

    /// Rows scaled to primitive integer vectors (leading entry stays positive).
    pub fn integer_rows(&self) -> Vec<IntegerVector> {
        self.rows
            .iter()
            .map(|r| IntegerVector::new(primitive_integer_vector(r)))
            .collect()
    }
}

pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> Rref {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Rref {
        rows: m,
        pivots,
        ncols,
    }
}

pub fn rref_integer(rows: &[IntegerVector], ncols: usize) -> Rref {
    let q: Vec<Vec<Rational>> = rows.iter().map(|v| v.to_rationals()).collect();
    rref(&q, ncols)
}

pub fn rank_integer(rows: &[IntegerVector], ncols: usize) -> usize {
    rref_integer(rows, ncols).rank()
}

pub fn rank_i64(rows: &[Vec<i64>], ncols: usize) -> usize {
    let q: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    rref(&q, ncols).rank()
}

/// `M^T z` for an integer matrix whose rows are `basis`; maps coordinates on
/// a subspace back to ambient space.
pub fn combine(basis: &[IntegerVector], z: &[Rational], n: usize) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); n];
    for (b, zi) in basis.iter().zip(z) {
        if zi.is_zero() {
            continue;
        }
        for (xi, bi) in x.iter_mut().zip(b.entries()) {
            if *bi != BigInt::from(0) {
                *xi += &(Rational::from(bi) * zi);
            }
        }
    }
    x
}
