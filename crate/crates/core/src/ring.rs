//! Minimal commutative-ring interface shared by the generic routines
//! (Newton recurrences, fraction-free determinants, Sylvester resultants).
//!
//! Constructors take `&self`; coefficient rings that carry context
//! (parameter lists, a radicand) build their own zero and one from it.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, n: &BigInt) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `Some(q)` with `q * divisor == self`, or `None` if the division is not exact.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;

    fn pow_u32(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn int_like(&self, n: &BigInt) -> Self {
        n.clone()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// division is exact; a failed division is reported as `None`.
pub fn det_bareiss<R: Ring>(mut m: Vec<Vec<R>>, unit: &R) -> Option<R> {
    let n = m.len();
    if n == 0 {
        return Some(unit.one_like());
    }
    let mut negate = false;
    let mut prev = unit.one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero_elem() {
            let pivot = (k + 1..n).find(|&i| !m[i][k].is_zero_elem());
            match pivot {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Some(unit.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = t.div_exact(&prev)?;
            }
            m[i][k] = unit.zero_like();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Some(if negate { d.neg_ref() } else { d })
}

/// Sylvester matrix of two coefficient vectors (ascending order), both with a
/// nonzero top coefficient.
pub fn sylvester_matrix<R: Ring>(f: &[R], g: &[R]) -> Vec<Vec<R>> {
    let n = f.len() - 1;
    let m = g.len() - 1;
    let size = n + m;
    let zero = f[0].zero_like();
    let mut rows = Vec::with_capacity(size);
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant `lc(f)^deg(g) * prod g(roots of f)` as the Sylvester determinant
/// over any exact ring. Coefficients are ascending; the top entry of each
/// slice must be nonzero.
pub fn sylvester_resultant<R: Ring>(f: &[R], g: &[R]) -> Option<R> {
    assert!(!f.is_empty() && !g.is_empty());
    let n = f.len() - 1;
    let m = g.len() - 1;
    if n == 0 {
        return Some(f[0].pow_u32(m as u32));
    }
    if m == 0 {
        return Some(g[0].pow_u32(n as u32));
    }
    det_bareiss(sylvester_matrix(f, g), &f[0])
}
