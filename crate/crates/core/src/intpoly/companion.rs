use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

type Matrix = Vec<Vec<BigInt>>;

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Companion matrix: ones on the subdiagonal, `-a_0 .. -a_{n-1}` in the last column.
fn companion(f: &IntPoly) -> Matrix {
    let n = f.degree().unwrap();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 1..n {
        m[i][i - 1] = BigInt::one();
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[n - 1] = -f.coeff(i);
    }
    m
}

/// Trace of the `m`-th power of the companion matrix of a monic `f`, which
/// is the `m`-th power sum of its roots counted with multiplicity.
pub fn trace_power(f: &IntPoly, m: u32) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut base = companion(f);
    let mut acc = identity(n);
    let mut e = m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    Ok((0..n).map(|i| acc[i][i].clone()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_examples() {
        let f = IntPoly::from_i64s(&[-1, -2, 1]);
        assert_eq!(trace_power(&f, 1).unwrap(), 2.into());
        assert_eq!(trace_power(&f, 2).unwrap(), 6.into());
        assert_eq!(trace_power(&f, 3).unwrap(), 14.into());
        for c in -4i64..=4 {
            for m in 1..6u32 {
                let f = IntPoly::linear_root(c.into());
                assert_eq!(trace_power(&f, m).unwrap(), BigInt::from(c).pow(m));
            }
        }
        assert_eq!(
            trace_power(&IntPoly::from_i64s(&[1, 2]), 2),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn trace_matches_numeric_roots_for_quadratic() {
        // roots 1 +- sqrt 2
        let r1 = 1.0 + 2f64.sqrt();
        let r2 = 1.0 - 2f64.sqrt();
        let f = IntPoly::from_i64s(&[-1, -2, 1]);
        for m in 1..=12 {
            let exact = trace_power(&f, m).unwrap().to_string().parse::<f64>().unwrap();
            let approx = r1.powi(m as i32) + r2.powi(m as i32);
            assert!((exact - approx).abs() <= 1e-9 * exact.abs().max(1.0));
        }
    }
}
