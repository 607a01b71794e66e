//! Newton–Girard conversions between power sums and elementary symmetric
//! functions, the parametric power-sum polynomials `Q_m`, and the
//! root-power transform.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::{IntPoly, MultiParamPoly, ParamXPoly};
use crate::ring::Ring;

/// Power sums `q_1 ..= q_M` of the `n` roots of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSums {
    #[serde(serialize_with = "crate::decimal::many")]
    values: Vec<BigInt>,
    n: usize,
}

impl PowerSums {
    pub fn new(values: Vec<BigInt>, n: usize) -> Result<Self> {
        if values.is_empty() || n == 0 {
            return Err(Error::InvalidArgument(
                "power sums need at least one value and one root".into(),
            ));
        }
        Ok(PowerSums { values, n })
    }

    /// `q_k`, 1-based.
    pub fn get(&self, k: usize) -> &BigInt {
        &self.values[k - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Elementary symmetric values `e_1 ..= e_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElemSym {
    #[serde(serialize_with = "crate::decimal::many")]
    values: Vec<BigInt>,
}

impl ElemSym {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `x^n - e_1 x^(n-1) + e_2 x^(n-2) - ...`, i.e. `a_(n-k) = (-1)^k e_k`.
    pub fn to_monic_poly(&self) -> IntPoly {
        let n = self.values.len();
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        for (i, e) in self.values.iter().enumerate() {
            let k = i + 1;
            c[n - k] = if k % 2 == 1 { -e } else { e.clone() };
        }
        IntPoly::new(c)
    }
}

/// Power sums from elementary symmetric values `s_1 ..= s_n` over any ring:
/// `q_k = (-1)^(k-1) k s_k + sum_(i<k) (-1)^(k+i-1) s_(k-i) q_i`, with
/// `s_j = 0` for `j > n`.
pub(crate) fn newton_power_sums<R: Ring>(s: &[R], m_max: usize) -> Vec<R> {
    let n = s.len();
    let unit = &s[0];
    let mut q: Vec<R> = Vec::with_capacity(m_max);
    for k in 1..=m_max {
        let mut acc = if k <= n {
            let t = s[k - 1].mul_ref(&unit.int_like(&BigInt::from(k)));
            if k % 2 == 1 {
                t
            } else {
                t.neg_ref()
            }
        } else {
            unit.zero_like()
        };
        for i in 1..k {
            let j = k - i;
            if j > n {
                continue;
            }
            let t = s[j - 1].mul_ref(&q[i - 1]);
            acc = if (k + i - 1) % 2 == 0 {
                acc.add_ref(&t)
            } else {
                acc.sub_ref(&t)
            };
        }
        q.push(acc);
    }
    q
}

fn signed_elementary(coeff: &BigInt, k: usize) -> BigInt {
    if k % 2 == 1 {
        -coeff
    } else {
        coeff.clone()
    }
}

/// `q_1 ..= q_(m_max)` for the roots of a monic integer polynomial.
pub fn power_sums_from_coeffs(f: &IntPoly, m_max: usize) -> Result<PowerSums> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if m_max == 0 {
        return Err(Error::InvalidArgument("m_max must be positive".into()));
    }
    let s: Vec<BigInt> = (1..=n).map(|k| signed_elementary(&f.coeff(n - k), k)).collect();
    PowerSums::new(newton_power_sums(&s, m_max), n)
}

/// Inverts the Newton recurrence: `k e_k = sum_(i=1..k) (-1)^(i-1) e_(k-i) q_i`.
/// Each division by `k` must be exact.
pub fn elem_from_power_sums(q: &PowerSums) -> Result<ElemSym> {
    let n = q.n();
    if q.len() < n {
        return Err(Error::InvalidArgument(format!(
            "need {n} power sums, got {}",
            q.len()
        )));
    }
    let mut e: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let t = &e[k - i] * q.get(i);
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        let ek = acc
            .div_exact(&BigInt::from(k))
            .ok_or_else(|| Error::NonIntegralDivision {
                k,
                numerator: acc.to_string(),
            })?;
        e.push(ek);
    }
    e.remove(0);
    Ok(ElemSym { values: e })
}

/// `Q_m(p_0, ..., p_(n-1))` as a polynomial in the family's parameters.
pub fn q_m_param(family: &ParamXPoly, m: usize) -> Result<MultiParamPoly> {
    Ok(q_param_upto(family, m)?.pop().unwrap())
}

/// `Q_1, ..., Q_m_max` as polynomials in the family's parameters.
pub fn q_param_upto(family: &ParamXPoly, m_max: usize) -> Result<Vec<MultiParamPoly>> {
    let n = family.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    if !family.is_monic() {
        return Err(Error::NotMonic);
    }
    if m_max == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let s: Vec<MultiParamPoly> = (1..=n)
        .map(|k| {
            let c = family.coeff(n - k);
            if k % 2 == 1 {
                -&c
            } else {
                c
            }
        })
        .collect();
    Ok(newton_power_sums(&s, m_max))
}

/// The monic polynomial whose roots are the `big_n`-th powers of the roots
/// of `f`, via the power sums `q_N, q_2N, ..., q_nN`.
pub fn root_power_transform(f: &IntPoly, big_n: usize) -> Result<IntPoly> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let all = power_sums_from_coeffs(f, n * big_n)?;
    let hat: Vec<BigInt> = (1..=n).map(|k| all.get(k * big_n).clone()).collect();
    let e = elem_from_power_sums(&PowerSums::new(hat, n)?).map_err(|err| match err {
        Error::NonIntegralDivision { k, numerator } => Error::InternalDivisibility(format!(
            "root-power transform: {k}*e_{k} = {numerator}"
        )),
        other => other,
    })?;
    Ok(e.to_monic_poly())
}

/// True when the polynomial depends on at least one parameter.
pub fn is_nonconstant(p: &MultiParamPoly) -> bool {
    !p.is_constant()
}
