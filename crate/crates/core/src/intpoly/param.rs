use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{add_coeffs, mul_coeffs, power_string, IntPoly, MultiParamPoly};
use crate::error::Result;

/// Integer values for named parameters.
pub type Assignment = BTreeMap<String, BigInt>;

/// A polynomial in `x` whose coefficients are integer polynomials in a shared
/// list of parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamXPoly {
    params: Vec<String>,
    coeffs: Vec<MultiParamPoly>,
}

impl ParamXPoly {
    pub fn new(params: &[String], mut coeffs: Vec<MultiParamPoly>) -> Self {
        for c in &coeffs {
            assert_eq!(c.params(), params, "coefficient parameter list differs");
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ParamXPoly {
            params: params.to_vec(),
            coeffs,
        }
    }

    pub fn zero(params: &[String]) -> Self {
        Self::new(params, Vec::new())
    }

    pub fn constant(c: MultiParamPoly) -> Self {
        let params = c.params().to_vec();
        Self::new(&params, vec![c])
    }

    pub fn x(params: &[String]) -> Self {
        Self::new(
            params,
            vec![
                MultiParamPoly::zero(params),
                MultiParamPoly::constant(params, BigInt::one()),
            ],
        )
    }

    pub fn from_int_poly(params: &[String], f: &IntPoly) -> Self {
        Self::new(
            params,
            f.coeffs()
                .iter()
                .map(|c| MultiParamPoly::constant(params, c.clone()))
                .collect(),
        )
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn coeffs(&self) -> &[MultiParamPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> MultiParamPoly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| MultiParamPoly::zero(&self.params))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient is the constant 1.
    pub fn is_monic(&self) -> bool {
        self.coeffs
            .last()
            .and_then(|c| c.constant_value())
            .is_some_and(|c| c.is_one())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_int_poly(&self.params, &IntPoly::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes the assignment into every coefficient.
    pub fn instantiate(&self, assignment: &Assignment) -> Result<IntPoly> {
        let values = self
            .params
            .iter()
            .map(|p| {
                assignment
                    .get(p)
                    .cloned()
                    .ok_or_else(|| crate::Error::MissingParameter(p.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.instantiate_values(&values))
    }

    /// Substitutes values given in parameter order.
    pub fn instantiate_values(&self, values: &[BigInt]) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c.eval_values(values)).collect())
    }
}

impl Add for &ParamXPoly {
    type Output = ParamXPoly;
    fn add(self, rhs: &ParamXPoly) -> ParamXPoly {
        let zero = MultiParamPoly::zero(&self.params);
        ParamXPoly::new(&self.params, add_coeffs(&self.coeffs, &rhs.coeffs, &zero))
    }
}

impl Sub for &ParamXPoly {
    type Output = ParamXPoly;
    fn sub(self, rhs: &ParamXPoly) -> ParamXPoly {
        self + &(-rhs)
    }
}

impl Neg for &ParamXPoly {
    type Output = ParamXPoly;
    fn neg(self) -> ParamXPoly {
        ParamXPoly::new(&self.params, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &ParamXPoly {
    type Output = ParamXPoly;
    fn mul(self, rhs: &ParamXPoly) -> ParamXPoly {
        let zero = MultiParamPoly::zero(&self.params);
        ParamXPoly::new(&self.params, mul_coeffs(&self.coeffs, &rhs.coeffs, &zero))
    }
}

impl fmt::Display for ParamXPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = power_string("x", i);
            let simple = c.terms().len() == 1;
            let body = c.to_string();
            let (neg, body) = match body.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                Some(_) => (true, (-c).to_string()),
                None => (false, body),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (mono.is_empty(), body.as_str()) {
                (true, _) => f.write_str(&body)?,
                (false, "1") => f.write_str(&mono)?,
                (false, _) if simple => write!(f, "{body}*{mono}")?,
                (false, _) => write!(f, "({body})*{mono}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for ParamXPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ParamXPoly", 2)?;
        st.serialize_field("var", "x")?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a_params() -> Vec<String> {
        vec!["a".to_string()]
    }

    /// x^2 - 2a x - 1
    fn mruv() -> ParamXPoly {
        let ps = a_params();
        let a = MultiParamPoly::var(&ps, 0);
        ParamXPoly::new(
            &ps,
            vec![
                MultiParamPoly::constant(&ps, (-1).into()),
                a.scale(&(-2).into()),
                MultiParamPoly::constant(&ps, 1.into()),
            ],
        )
    }

    fn at(a: i64) -> Assignment {
        let mut m = Assignment::new();
        m.insert("a".into(), a.into());
        m
    }

    #[test]
    fn instantiate_examples() {
        let f = mruv();
        assert_eq!(f.instantiate(&at(3)).unwrap(), IntPoly::from_i64s(&[-1, -6, 1]));
        assert!(f.is_monic());
        assert_eq!(
            f.instantiate(&Assignment::new()),
            Err(crate::Error::MissingParameter("a".into()))
        );
        assert_eq!(f.to_string(), "x^2 - 2*a*x - 1");
    }

    proptest! {
        #[test]
        fn instantiate_commutes_with_mul(a in -30i64..30, k in 0u32..3, c in -5i64..5) {
            let f = mruv();
            let ps = a_params();
            let g = &(&ParamXPoly::x(&ps) + &ParamXPoly::from_int_poly(&ps, &IntPoly::from_i64s(&[c])))
                .pow(k) + &f;
            let prod = &f * &g;
            let asg = at(a);
            prop_assert_eq!(
                prod.instantiate(&asg).unwrap(),
                &f.instantiate(&asg).unwrap() * &g.instantiate(&asg).unwrap()
            );
        }
    }
}
