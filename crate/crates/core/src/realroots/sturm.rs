use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

/// Open interval `(lo, hi)` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl OpenInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidArgument(format!(
                "interval ({lo}, {hi}) is empty"
            )));
        }
        Ok(OpenInterval { lo, hi })
    }

    pub fn from_ints(lo: i64, hi: i64) -> Result<Self> {
        Self::new(BigRational::from_integer(lo.into()), BigRational::from_integer(hi.into()))
    }
}

/// Signed remainder sequence of the squarefree part of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

/// Divides by the positive content, leaving the sign alone.
fn strip_content(f: &IntPoly) -> IntPoly {
    let c = f.content();
    if c.is_zero() {
        return f.clone();
    }
    IntPoly::new(f.coeffs().iter().map(|x| x / &c).collect())
}

/// Builds the chain `g, g', -rem, ...` from the squarefree part `g` of `f`,
/// using pseudo-remainders with the sign of the true remainder restored and
/// the positive content stripped at each step.
pub fn sturm_chain(f: &IntPoly) -> Result<SturmChain> {
    let g = f.squarefree_part()?;
    if g.is_constant() {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    let mut chain = vec![g.clone(), strip_content(&g.derivative())];
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.is_constant() {
            break;
        }
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let mut r = a.pseudo_rem(b);
        if b.lc().unwrap().is_negative() && (delta + 1) % 2 == 1 {
            r = -r;
        }
        if r.is_zero() {
            // g is squarefree, so gcd(g, g') is constant and this cannot happen.
            return Err(Error::InternalDivisibility("Sturm chain ended early".into()));
        }
        chain.push(strip_content(&-r));
    }
    Ok(SturmChain { chain })
}

fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn lc_sign(p: &IntPoly) -> Ordering {
    p.lc().map_or(Ordering::Equal, |c| c.cmp(&BigInt::zero()))
}

impl SturmChain {
    pub fn members(&self) -> &[IntPoly] {
        &self.chain
    }

    /// The squarefree polynomial the chain was built from.
    pub fn base(&self) -> &IntPoly {
        &self.chain[0]
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.chain.iter().map(lc_sign))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.chain.iter().map(|p| {
            let s = lc_sign(p);
            if p.degree().unwrap_or(0) % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }

    /// Distinct real roots in the open interval; endpoints must not be roots.
    pub fn count_in(&self, iv: &OpenInterval) -> Result<usize> {
        for e in [&iv.lo, &iv.hi] {
            if self.base().sign_at(e) == Ordering::Equal {
                return Err(Error::EndpointIsRoot(e.to_string()));
            }
        }
        Ok(self.variations_at(&iv.lo) - self.variations_at(&iv.hi))
    }
}

/// Number of distinct real roots of `f`, optionally restricted to an open interval.
pub fn count_real_roots(f: &IntPoly, interval: Option<&OpenInterval>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(0);
    }
    let chain = sturm_chain(f)?;
    match interval {
        None => Ok(chain.count_all()),
        Some(iv) => chain.count_in(iv),
    }
}

/// Every root of `f` is real.
pub fn is_totally_real(f: &IntPoly) -> Result<bool> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    let chain = sturm_chain(f)?;
    Ok(chain.count_all() == chain.base().degree().unwrap())
}

/// `f` is totally real and every root lies strictly inside `(lo, hi)`.
pub fn all_roots_in(f: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<bool> {
    let iv = OpenInterval::new(lo.clone(), hi.clone())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    let chain = sturm_chain(f)?;
    let inside = chain.count_in(&iv)?;
    Ok(inside == chain.base().degree().unwrap())
}

/// Members whose roots all lie in `(0, t)`, in input order.
pub fn filter_box(polys: &[IntPoly], t: &BigRational) -> Result<Vec<IntPoly>> {
    if !t.is_positive() {
        return Err(Error::InvalidArgument(format!("box bound {t} must be positive")));
    }
    let zero = BigRational::zero();
    let mut out = Vec::new();
    for p in polys {
        if all_roots_in(p, &zero, t)? {
            out.push(p.clone());
        }
    }
    Ok(out)
}
