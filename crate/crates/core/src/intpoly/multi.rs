use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use super::{power_string, write_terms, Assignment, IntPoly};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Sparse integer polynomial in an ordered list of named parameters.
///
/// Keys are exponent tuples (one entry per parameter); only nonzero
/// coefficients are stored. `BTreeMap` ordering on the tuples is the lex
/// monomial order with the first parameter most significant, which the exact
/// division below relies on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiParamPoly {
    params: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiParamPoly {
    pub fn zero(params: &[String]) -> Self {
        MultiParamPoly {
            params: params.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(params: &[String], c: BigInt) -> Self {
        let mut p = Self::zero(params);
        if !c.is_zero() {
            p.terms.insert(vec![0; params.len()], c);
        }
        p
    }

    /// The parameter at position `idx` as a polynomial.
    pub fn var(params: &[String], idx: usize) -> Self {
        assert!(idx < params.len(), "parameter index out of range");
        let mut e = vec![0; params.len()];
        e[idx] = 1;
        Self::from_terms(params, [(e, BigInt::one())])
    }

    /// Builds from `(exponents, coefficient)` pairs, summing repeats and
    /// dropping zeros.
    pub fn from_terms<I>(params: &[String], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(params);
        for (e, c) in terms {
            assert_eq!(e.len(), params.len(), "exponent arity mismatch");
            p.add_term(e, c);
        }
        p
    }

    /// Embeds a univariate polynomial in the parameter at `idx`.
    pub fn from_univariate(params: &[String], idx: usize, f: &IntPoly) -> Self {
        Self::from_terms(
            params,
            f.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; params.len()];
                e[idx] = k as u32;
                (e, c.clone())
            }),
        )
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// The value when the polynomial does not depend on any parameter.
    pub fn constant_value(&self) -> Option<BigInt> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_default())
    }

    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn check_params(&self, other: &Self) {
        assert_eq!(self.params, other.params, "parameter lists differ");
    }

    /// Substitutes values by position.
    pub fn eval_values(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.params.len());
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(values)
                    .fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
            })
            .sum()
    }

    /// Substitutes values by name.
    pub fn eval(&self, assignment: &Assignment) -> Result<BigInt> {
        let values = self
            .params
            .iter()
            .map(|p| {
                assignment
                    .get(p)
                    .cloned()
                    .ok_or_else(|| Error::MissingParameter(p.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.eval_values(&values))
    }

    /// Views a polynomial in one parameter as a univariate polynomial.
    pub fn to_univariate(&self) -> Option<IntPoly> {
        if self.params.len() != 1 {
            return None;
        }
        let d = self.degree_in(0).unwrap_or(0) as usize;
        let mut c = vec![BigInt::zero(); d + 1];
        for (e, v) in &self.terms {
            c[e[0] as usize] = v.clone();
        }
        Some(IntPoly::new(c))
    }

    /// Splits by powers of the parameter at `idx`: entry `k` is the
    /// coefficient of `param^k`, with that parameter's exponent zeroed.
    pub fn collect_in(&self, idx: usize) -> Vec<MultiParamPoly> {
        let d = self.degree_in(idx).map_or(0, |d| d as usize + 1);
        let mut out = vec![Self::zero(&self.params); d];
        for (e, c) in &self.terms {
            let k = e[idx] as usize;
            let mut e2 = e.clone();
            e2[idx] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    /// Drops the parameter at `idx`; the polynomial must not depend on it.
    pub fn remove_param(&self, idx: usize) -> Option<MultiParamPoly> {
        if self.degree_in(idx).unwrap_or(0) > 0 {
            return None;
        }
        let mut params = self.params.clone();
        params.remove(idx);
        Some(Self::from_terms(
            &params,
            self.terms.iter().map(|(e, c)| {
                let mut e = e.clone();
                e.remove(idx);
                (e, c.clone())
            }),
        ))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(
            &self.params,
            self.terms.iter().map(|(e, v)| (e.clone(), v * c)),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        self.pow_u32(e)
    }

    fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division in the lex order; `None` when the quotient is not an
    /// integer polynomial.
    pub fn div_exact_poly(&self, d: &MultiParamPoly) -> Option<MultiParamPoly> {
        self.check_params(d);
        let (de, dc) = d.leading()?;
        let mut r = self.clone();
        let mut q = Self::zero(&self.params);
        while let Some((re, rc)) = r.leading() {
            if re.iter().zip(de).any(|(a, b)| a < b) {
                return None;
            }
            let (c, rem) = rc.div_rem(dc);
            if !rem.is_zero() {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(de).map(|(a, b)| a - b).collect();
            let t = Self::from_terms(&self.params, [(e, c)]);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }
}

impl Ring for MultiParamPoly {
    fn zero_like(&self) -> Self {
        Self::zero(&self.params)
    }
    fn one_like(&self) -> Self {
        Self::constant(&self.params, BigInt::one())
    }
    fn int_like(&self, n: &BigInt) -> Self {
        Self::constant(&self.params, n.clone())
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
        self.div_exact_poly(divisor)
    }
}

impl Add for &MultiParamPoly {
    type Output = MultiParamPoly;
    fn add(self, rhs: &MultiParamPoly) -> MultiParamPoly {
        self.check_params(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiParamPoly {
    type Output = MultiParamPoly;
    fn sub(self, rhs: &MultiParamPoly) -> MultiParamPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiParamPoly {
    type Output = MultiParamPoly;
    fn neg(self) -> MultiParamPoly {
        MultiParamPoly {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiParamPoly {
    type Output = MultiParamPoly;
    fn mul(self, rhs: &MultiParamPoly) -> MultiParamPoly {
        self.check_params(rhs);
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        MultiParamPoly {
            params: self.params.clone(),
            terms: acc,
        }
    }
}

impl fmt::Display for MultiParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monos: Vec<(&BigInt, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let m: Vec<String> = e
                    .iter()
                    .zip(&self.params)
                    .filter(|(&k, _)| k > 0)
                    .map(|(&k, p)| power_string(p, k as usize))
                    .collect();
                (c, m.join("*"))
            })
            .collect();
        write_terms(f, monos.into_iter())
    }
}

struct Term<'a>(&'a [u32], &'a BigInt);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("exps", self.0)?;
        m.serialize_entry("coeff", &self.1.to_string())?;
        m.end()
    }
}

impl Serialize for MultiParamPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MultiParamPoly", 2)?;
        st.serialize_field("params", &self.params)?;
        let terms: Vec<Term<'_>> = self.terms.iter().map(|(e, c)| Term(e, c)).collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn arithmetic_and_display() {
        let ps = params(&["a", "b"]);
        let a = MultiParamPoly::var(&ps, 0);
        let b = MultiParamPoly::var(&ps, 1);
        let two = MultiParamPoly::constant(&ps, 2.into());
        let f = &(&a * &a).scale(&4.into()) + &two;
        assert_eq!(f.to_string(), "4*a^2 + 2");
        let g = &(&a + &b) * &(&a - &b);
        assert_eq!(g.to_string(), "a^2 - b^2");
        assert!(two.is_constant());
        assert!(!g.is_constant());
        assert_eq!(&g - &g, MultiParamPoly::zero(&ps));
    }

    #[test]
    fn exact_division() {
        let ps = params(&["a", "x"]);
        let a = MultiParamPoly::var(&ps, 0);
        let x = MultiParamPoly::var(&ps, 1);
        let one = MultiParamPoly::constant(&ps, 1.into());
        let p = &(&a + &x) * &(&(&x * &x) - &one);
        assert_eq!(p.div_exact_poly(&(&a + &x)), Some(&(&x * &x) - &one));
        assert_eq!(p.div_exact_poly(&(&a + &one)), None);
        assert_eq!(a.div_exact_poly(&a.scale(&2.into())), None);
    }

    #[test]
    fn evaluation_and_collection() {
        let ps = params(&["a", "b"]);
        let a = MultiParamPoly::var(&ps, 0);
        let b = MultiParamPoly::var(&ps, 1);
        let f = &(&a * &b) + &(&b * &b);
        let mut asg = Assignment::new();
        asg.insert("a".into(), 3.into());
        asg.insert("b".into(), 2.into());
        assert_eq!(f.eval(&asg).unwrap(), BigInt::from(10));
        asg.remove("b");
        assert_eq!(f.eval(&asg), Err(Error::MissingParameter("b".into())));
        let parts = f.collect_in(1);
        assert_eq!(parts.len(), 3);
        assert!(parts[0].is_zero());
        assert_eq!(parts[1], a);
        assert_eq!(parts[2], MultiParamPoly::constant(&ps, 1.into()));
    }
}
