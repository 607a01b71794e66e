//! Dense univariate polynomials over the integers, plus the sparse
//! multivariate coefficient ring used for parametrized families.
//!
//! Every value is kept in normal form: the top coefficient is nonzero and
//! the zero polynomial is the empty coefficient vector.

mod companion;
mod multi;
mod param;
mod resultant;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::Ring;

pub use companion::trace_power;
pub use multi::MultiParamPoly;
pub use param::{Assignment, ParamXPoly};
pub use resultant::{discriminant, resultant};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming zeros on top.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - c`
    pub fn linear_root(c: BigInt) -> Self {
        Self::new(vec![-c, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of `f(p/q)`, computed as the sign of `q^deg * f(p/q)` with `q > 0`.
    pub fn sign_at(&self, r: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let p = r.numer();
        let q = r.denom();
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * p + c * &qpow;
            if i > 0 {
                qpow = &qpow * q;
            }
        }
        acc.sign_ordering()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Content removed and sign normalized so the leading coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lcd = d.lc().unwrap().clone();
        let mut r = self.clone();
        let mut e = ds - dd + 1;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.lc().unwrap().clone();
            let shifted = Self::monomial(lr, dr - dd);
            r = &r.scale(&lcd) - &(&shifted * d);
            e -= 1;
        }
        r.scale(&num_traits::pow(lcd, e))
    }

    /// Exact quotient over the integers, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lcd = d.lc().unwrap();
        let mut r = self.clone();
        let Some(ds) = r.degree() else {
            return Some(Self::zero());
        };
        if ds < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (c, rem) = r.lc().unwrap().div_rem(lcd);
            if !rem.is_zero() {
                return None;
            }
            let t = Self::monomial(c.clone(), dr - dd);
            q[dr - dd] = c;
            r = &r - &(&t * d);
        }
        Some(Self::new(q))
    }

    /// Primitive gcd (positive leading coefficient) by a primitive
    /// pseudo-remainder sequence. The integer content is not included.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// `f / gcd(f, f')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Self::one());
        }
        let pp = self.primitive_part();
        let g = pp.gcd(&pp.derivative());
        let q = pp
            .div_exact(&g)
            .ok_or_else(|| Error::InternalDivisibility("f / gcd(f, f')".into()))?;
        Ok(q.primitive_part())
    }

    /// Yun's squarefree factorization of the primitive part:
    /// `pp(f) = prod g_i^i`, returned as `(g_i, i)` for nonconstant `g_i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(IntPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.primitive_part();
        let mut out = Vec::new();
        if f.is_constant() {
            return Ok(out);
        }
        let fd = f.derivative();
        let a0 = f.gcd(&fd);
        let div = |p: &IntPoly, d: &IntPoly| {
            p.div_exact(d)
                .ok_or_else(|| Error::InternalDivisibility("squarefree decomposition".into()))
        };
        let mut b = div(&f, &a0)?;
        let mut c = div(&fd, &a0)?;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = div(&b, &a)?;
            c = div(&d, &a)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// `f(x + k)` by repeated synthetic division.
    pub fn shift(&self, k: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * k;
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    /// `f(-x)`
    pub fn reflect(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Cauchy bound: every complex root has absolute value below the result.
    pub fn cauchy_bound(&self) -> Result<BigInt> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = self.lc().unwrap().abs();
        let m = self.coeffs[..d]
            .iter()
            .map(|c| c.abs().div_ceil(&lc))
            .max()
            .unwrap_or_default();
        Ok(m + 1)
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl Ring for IntPoly {
    fn zero_like(&self) -> Self {
        IntPoly::zero()
    }
    fn one_like(&self) -> Self {
        IntPoly::one()
    }
    fn int_like(&self, n: &BigInt) -> Self {
        IntPoly::constant(n.clone())
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
        IntPoly::div_exact(self, divisor)
    }
}

pub(crate) fn add_coeffs<R: Ring>(a: &[R], b: &[R], zero: &R) -> Vec<R> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add_ref(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => zero.clone(),
        })
        .collect()
}

pub(crate) fn mul_coeffs<R: Ring>(a: &[R], b: &[R], zero: &R) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![zero.clone(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero_elem() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    out
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, &BigInt::zero()))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(mul_coeffs(&self.coeffs, &rhs.coeffs, &BigInt::zero()))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Writes `c * v^k` terms from highest to lowest in the DSL expression syntax.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a BigInt, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else if c.is_negative() {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        first = false;
        match (mag.is_one(), mono.is_empty()) {
            (_, true) => write!(f, "{mag}")?,
            (true, false) => f.write_str(&mono)?,
            (false, false) => write!(f, "{mag}*{mono}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn power_string(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

impl IntPoly {
    /// Renders with a chosen variable name, in the family DSL syntax.
    pub fn display_in(&self, var: &str) -> String {
        struct D<'a>(&'a IntPoly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_terms(
                    f,
                    self.0
                        .coeffs
                        .iter()
                        .enumerate()
                        .rev()
                        .map(|(i, c)| (c, power_string(self.1, i))),
                )
            }
        }
        D(self, var).to_string()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IntPoly", 2)?;
        st.serialize_field("var", "x")?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[-1, -2, 1]) * &IntPoly::zero(), IntPoly::zero());
        assert_eq!(&p(&[-1, -2, 1]) * &IntPoly::one(), p(&[-1, -2, 1]));
        assert_eq!((&p(&[1, 1]) * &p(&[-1, 1])).degree(), Some(2));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-1, -2, 1]).eval(&BigInt::from(3)), BigInt::from(2));
        assert_eq!(IntPoly::zero().eval(&BigInt::from(17)), BigInt::zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, -2, 0, 1]).derivative(), p(&[-2, 0, 3]));
        assert_eq!(p(&[5]).derivative(), IntPoly::zero());
        assert_eq!(p(&[1, 4, -6, -4, 1]).derivative(), p(&[4, -12, -12, 4]));
    }

    #[test]
    fn normal_form_and_degree() {
        assert_eq!(p(&[0, 0, 0]), IntPoly::zero());
        assert!(IntPoly::zero().coeffs().is_empty());
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p(&[3, 0, 2, 0]).degree(), Some(2));
    }

    #[test]
    fn squarefree_examples() {
        let f = p(&[-2, 0, 1]);
        assert_eq!((&f * &f).squarefree_part().unwrap(), f);
        assert_eq!(p(&[-1, -2, 1]).squarefree_part().unwrap(), p(&[-1, -2, 1]));
        assert_eq!(p(&[0, 0, -1, 1]).squarefree_part().unwrap(), p(&[0, -1, 1]));
        assert_eq!(
            IntPoly::zero().squarefree_part(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn yun_decomposition() {
        // (x-1) (x+2)^2 x^3
        let a = p(&[-1, 1]);
        let b = p(&[2, 1]);
        let c = IntPoly::x();
        let f = &(&a * &b.pow(2)) * &c.pow(3);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(a, 1), (b, 2), (c, 3)]);
    }

    #[test]
    fn shift_and_reflect() {
        // (x+10)^2 - 10(x+10) = x^2 + 10x
        assert_eq!(p(&[0, -10, 1]).shift(&BigInt::from(10)), p(&[0, 10, 1]));
        assert_eq!(p(&[1, 2, 3, 4]).reflect(), p(&[1, -2, 3, -4]));
    }

    #[test]
    fn sign_at_rational() {
        let f = p(&[-2, 0, 1]);
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(f.sign_at(&r(3, 2)), Ordering::Greater);
        assert_eq!(f.sign_at(&r(7, 5)), Ordering::Less);
        assert_eq!(f.sign_at(&r(-3, 2)), Ordering::Greater);
        assert_eq!(p(&[-1, 2]).sign_at(&r(1, 2)), Ordering::Equal);
    }

    #[test]
    fn display_round_trips_shape() {
        assert_eq!(p(&[-1, -2, 1]).to_string(), "x^2 - 2*x - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn pseudo_remainder_and_exact_division() {
        let a = p(&[1, 0, 0, 1]);
        let b = p(&[1, 2]);
        // 8 (x^3 + 1) = (2x+1)(4x^2 - 2x + 1) + 7
        assert_eq!(a.pseudo_rem(&b), p(&[7]));
        assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[1, 2])), None);
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 0..=max_deg + 1).prop_map(|v| IntPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(5), g in arb_poly(5), h in arb_poly(5)) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn eval_is_homomorphism(f in arb_poly(6), g in arb_poly(6), x in -50i64..50) {
            let x = BigInt::from(x);
            prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
        }

        #[test]
        fn shift_matches_evaluation(f in arb_poly(6), k in -9i64..9, x in -9i64..9) {
            let k = BigInt::from(k);
            let x = BigInt::from(x);
            prop_assert_eq!(f.shift(&k).eval(&x), f.eval(&(&x + &k)));
        }

        #[test]
        fn gcd_divides_both(f in arb_poly(4), g in arb_poly(4), h in arb_poly(3)) {
            prop_assume!(!h.is_zero() && !f.is_zero() && !g.is_zero());
            let a = &f * &h;
            let b = &g * &h;
            let d = a.gcd(&b);
            prop_assert!(a.div_exact(&d).is_some());
            prop_assert!(b.div_exact(&d).is_some());
            prop_assert!(d.div_exact(&h.primitive_part()).is_some());
        }
    }
}
