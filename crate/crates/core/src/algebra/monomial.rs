use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::rational::Rational;

/// Exponent vector of a monomial `x_1^a_1 ... x_n^a_n`.
///
/// `Ord` is the graded-lexicographic order with `x_1 > x_2 > ... > x_n`; it is
/// the crate's canonical monomial order for sorting and serialization, not a
/// term order used for Gröbner computations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Signed difference `self - other` as machine integers.
    pub fn diff_i64(&self, other: &Self) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| *a as i64 - *b as i64)
            .collect()
    }

    pub fn diff(&self, other: &Self) -> IntegerVector {
        IntegerVector::from_i64(&self.diff_i64(other))
    }

    /// `<w, self>` for an integer weight.
    pub fn weight(&self, w: &[i64]) -> i128 {
        self.0
            .iter()
            .zip(w)
            .map(|(&e, &wi)| e as i128 * wi as i128)
            .sum()
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        // Variable i is sent to variable perm[i].
        let mut out = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[perm[i]] = e;
        }
        ExponentVector(out)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Vector of arbitrary-precision integers: facet normals, weights, differences.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerVector(Vec<BigInt>);

impl IntegerVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntegerVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntegerVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        IntegerVector(vec![BigInt::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Positive gcd of the entries; 1 for the zero vector.
    pub fn content(&self) -> BigInt {
        let g = self.0.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            BigInt::from(1)
        } else {
            g
        }
    }

    /// Entries divided by their positive gcd. Direction is preserved.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        IntegerVector(self.0.iter().map(|x| x / &g).collect())
    }

    /// Primitive vector with the first non-zero entry made positive.
    pub fn primitive_normalized(&self) -> Self {
        let p = self.primitive();
        match p.0.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => -&p,
            _ => p,
        }
    }

    pub fn dot(&self, other: &Self) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_rational(&self, x: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(x)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, b)| Rational::from(a) * b)
            .sum()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(Rational::from).collect()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| x.to_i64()).collect()
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        IntegerVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        IntegerVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// True if the two vectors span the same line (zero is parallel to nothing).
    pub fn is_parallel(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return false;
        }
        let n = self.0.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if &self.0[i] * &other.0[j] != &self.0[j] * &other.0[i] {
                    return false;
                }
            }
        }
        true
    }

    /// Permutes coordinates: entry i moves to position perm[i].
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = vec![BigInt::zero(); self.0.len()];
        for (i, x) in self.0.iter().enumerate() {
            out[perm[i]] = x.clone();
        }
        IntegerVector(out)
    }
}

impl std::ops::Neg for &IntegerVector {
    type Output = IntegerVector;
    fn neg(self) -> IntegerVector {
        IntegerVector(self.0.iter().map(|x| -x).collect())
    }
}

impl std::ops::Index<usize> for IntegerVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Debug for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
