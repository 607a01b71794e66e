//! Resultants by the subresultant pseudo-remainder sequence.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};
use crate::ring::Ring;

fn exact(a: &BigInt, b: &BigInt, what: &str) -> Result<BigInt> {
    a.div_exact(b)
        .ok_or_else(|| Error::InternalDivisibility(format!("subresultant step: {what}")))
}

fn poly_exact(a: &IntPoly, b: &BigInt) -> Result<IntPoly> {
    let c = a
        .coeffs()
        .iter()
        .map(|x| exact(x, b, "remainder scaling"))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(c))
}

/// `Res(f, g) = lc(f)^deg(g) * prod g(alpha)` over the roots `alpha` of `f`.
///
/// Follows the classical subresultant algorithm: contents are split off
/// first, and each pseudo-remainder is divided by `g * h^delta`, which is
/// exact and keeps coefficient growth linear in the degree.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if df == 0 {
        return Ok(num_traits::pow(f.coeff(0), dg));
    }
    if dg == 0 {
        return Ok(num_traits::pow(g.coeff(0), df));
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        if df % 2 == 1 && dg % 2 == 1 {
            negate = true;
        }
    }
    let ca = a.content();
    let cb = b.content();
    a = poly_exact(&a, &ca)?;
    b = poly_exact(&b, &cb)?;
    let t = num_traits::pow(ca, b.degree().unwrap()) * num_traits::pow(cb, a.degree().unwrap());

    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        let divisor = &gg * num_traits::pow(h.clone(), delta);
        b = poly_exact(&r, &divisor)?;
        gg = a.lc().unwrap().clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => exact(
                &num_traits::pow(gg.clone(), delta),
                &num_traits::pow(h.clone(), delta - 1),
                "h update",
            )?,
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let lb = b.lc().unwrap().clone();
            let hh = if da == 0 {
                h
            } else {
                exact(
                    &num_traits::pow(lb, da),
                    &num_traits::pow(h, da - 1),
                    "final scaling",
                )?
            };
            let res = t * hh;
            return Ok(if negate { -res } else { res });
        }
    }
}

/// `(-1)^(n(n-1)/2) * Res(f, f')` for monic `f` of degree `n >= 1`.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 1 {
        return Err(Error::DegreeTooSmall { found: n, min: 1 });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let r = resultant(f, &f.derivative())?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::sylvester_resultant;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn sylvester(f: &IntPoly, g: &IntPoly) -> BigInt {
        sylvester_resultant(f.coeffs(), g.coeffs()).unwrap()
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])).unwrap(), 3.into());
        assert_eq!(resultant(&p(&[-1, -2, 1]), &IntPoly::one()).unwrap(), 1.into());
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[-2, 0, 1])).unwrap(), 0.into());
        assert_eq!(
            resultant(&IntPoly::zero(), &p(&[1, 1])),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn discriminant_examples() {
        // Closed form for x^3 + p x^2 + q x + r:
        // 18pqr - 4p^3 r + p^2 q^2 - 4q^3 - 27r^2
        let cubic = |pp: i64, q: i64, r: i64| {
            18 * pp * q * r - 4 * pp.pow(3) * r + pp * pp * q * q - 4 * q.pow(3) - 27 * r * r
        };
        assert_eq!(discriminant(&p(&[1, 1, 1])).unwrap(), (-3).into());
        assert_eq!(cubic(1, -2, -1), 49);
        assert_eq!(discriminant(&p(&[-1, -2, 1, 1])).unwrap(), 49.into());
        assert_eq!(cubic(-1, -4, -1), 169);
        assert_eq!(discriminant(&p(&[-1, -4, -1, 1])).unwrap(), 169.into());
        assert_eq!(discriminant(&p(&[-1, 2])), Err(Error::NotMonic));
        assert_eq!(
            discriminant(&p(&[5])),
            Err(Error::DegreeTooSmall { found: 0, min: 1 })
        );
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-12i64..=12, 1..=max_deg + 1)
            .prop_map(|v| IntPoly::from_i64s(&v))
            .prop_filter("nonzero", |f| !f.is_zero())
    }

    fn arb_monic(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-6i64..=6, 0..=max_deg).prop_map(|mut v| {
            v.push(1);
            IntPoly::from_i64s(&v)
        })
    }

    proptest! {
        #[test]
        fn subresultant_matches_sylvester(f in arb_poly(6), g in arb_poly(6)) {
            prop_assert_eq!(resultant(&f, &g).unwrap(), sylvester(&f, &g));
        }

        #[test]
        fn resultant_is_multiplicative(f in arb_monic(4), g in arb_monic(4), h in arb_monic(4)) {
            let fg = &f * &g;
            prop_assert_eq!(
                resultant(&fg, &h).unwrap(),
                resultant(&f, &h).unwrap() * resultant(&g, &h).unwrap()
            );
        }
    }
}
