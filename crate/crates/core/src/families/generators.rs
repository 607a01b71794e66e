use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ParamFamily, ParamRange};
use crate::error::{Error, Result};
use crate::intpoly::{discriminant, mul_coeffs, IntPoly, MultiParamPoly, ParamXPoly};
use crate::realroots::is_totally_real;
use crate::ring::{sylvester_resultant, Ring};

/// `u + v*sqrt(d)` with integer `u`, `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct QuadInt {
    u: BigInt,
    v: BigInt,
    d: BigInt,
}

impl QuadInt {
    fn new(u: BigInt, v: BigInt, d: &BigInt) -> Self {
        QuadInt { u, v, d: d.clone() }
    }

    fn conj(&self) -> Self {
        QuadInt::new(self.u.clone(), -&self.v, &self.d)
    }
}

impl Ring for QuadInt {
    fn zero_like(&self) -> Self {
        self.int_like(&BigInt::zero())
    }
    fn one_like(&self) -> Self {
        self.int_like(&BigInt::one())
    }
    fn int_like(&self, n: &BigInt) -> Self {
        QuadInt::new(n.clone(), BigInt::zero(), &self.d)
    }
    fn is_zero_elem(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        QuadInt::new(&self.u + &o.u, &self.v + &o.v, &self.d)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        QuadInt::new(&self.u - &o.u, &self.v - &o.v, &self.d)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        QuadInt::new(
            &self.u * &o.u + &self.v * &o.v * &self.d,
            &self.u * &o.v + &self.v * &o.u,
            &self.d,
        )
    }
    fn neg_ref(&self) -> Self {
        QuadInt::new(-&self.u, -&self.v, &self.d)
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let norm = &divisor.u * &divisor.u - &divisor.v * &divisor.v * &self.d;
        if norm.is_zero() {
            return None;
        }
        let num = self.mul_ref(&divisor.conj());
        Some(QuadInt::new(
            num.u.div_exact(&norm)?,
            num.v.div_exact(&norm)?,
            &self.d,
        ))
    }
}

fn check_squarefree(d: &BigInt) -> Result<()> {
    if !d.is_positive() {
        return Err(Error::InvalidArgument(format!("d = {d} must be positive")));
    }
    let d64 = d
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument(format!("d = {d} is too large to factor")))?;
    let mut p = 2u64;
    while p * p <= d64 {
        if d64 % (p * p) == 0 {
            return Err(Error::NotSquarefree(format!("d = {d}")));
        }
        p += 1;
    }
    Ok(())
}

/// `(x^2 - 2 theta x - 1)(x^2 - 2 theta' x - 1)` for `theta = a + b sqrt(d)`
/// and its conjugate, expanded in `Z[sqrt(d)]`. The result is
/// `x^4 - 4a x^3 + (4(a^2 - b^2 d) - 2) x^2 + 4a x + 1`.
pub fn gen_quartic_2param(a: &BigInt, b: &BigInt, d: &BigInt) -> Result<IntPoly> {
    check_squarefree(d)?;
    let theta = QuadInt::new(a.clone(), b.clone(), d);
    let factor = |t: &QuadInt| {
        vec![
            t.int_like(&BigInt::from(-1)),
            t.mul_ref(&t.int_like(&BigInt::from(-2))),
            t.one_like(),
        ]
    };
    let prod = mul_coeffs(&factor(&theta), &factor(&theta.conj()), &theta.zero_like());
    let coeffs = prod
        .into_iter()
        .map(|c| {
            if c.v.is_zero() {
                Ok(c.u)
            } else {
                Err(Error::Postcondition(format!(
                    "irrational coefficient {} + {}*sqrt({d})",
                    c.u, c.v
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

/// The one-parameter family `f_a(x) = prod_i (x^2 - 2 h(a, alpha_i) x - 1)`
/// over the conjugates `alpha_i` of a totally real algebraic integer,
/// computed as `Res_y(alpha(y), x^2 - 2 h(a, y) x - 1)`.
///
/// `h` must be over the parameters `[t1, t2]`; `t1` becomes the family
/// parameter `a` and `t2` is replaced by `y`.
pub fn gen_unit_family(h: &MultiParamPoly, alpha_minpoly: &IntPoly) -> Result<ParamFamily> {
    if h.params().len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "h must be a polynomial in two parameters (t1, t2), got {:?}",
            h.params()
        )));
    }
    let n = alpha_minpoly.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    if !alpha_minpoly.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_totally_real(alpha_minpoly)? {
        return Err(Error::AlphaNotTotallyReal);
    }
    let d1 = h.degree_in(0).unwrap_or(0);
    if d1 == 0 {
        return Err(Error::DegreeConstraintViolated(format!(
            "deg_{}(h) = 0, must be positive",
            h.params()[0]
        )));
    }
    let d2 = h.degree_in(1).unwrap_or(0) as usize;
    if d2 != n - 1 {
        return Err(Error::DegreeConstraintViolated(format!(
            "deg_{}(h) = {d2}, must equal deg(alpha) - 1 = {}",
            h.params()[1],
            n - 1
        )));
    }

    let ring = vec!["a".to_string(), "x".to_string()];
    let lift = |p: &MultiParamPoly| {
        MultiParamPoly::from_terms(
            &ring,
            p.terms().iter().map(|(e, c)| (vec![e[0], 0], c.clone())),
        )
    };
    let x = MultiParamPoly::var(&ring, 1);
    let minus_two_x = x.scale(&BigInt::from(-2));
    let mut g: Vec<MultiParamPoly> = h.collect_in(1).iter().map(|hj| &lift(hj) * &minus_two_x).collect();
    g[0] = &(&g[0] + &x.pow(2)) - &MultiParamPoly::constant(&ring, BigInt::one());
    let f: Vec<MultiParamPoly> = alpha_minpoly
        .coeffs()
        .iter()
        .map(|c| MultiParamPoly::constant(&ring, c.clone()))
        .collect();
    let res = sylvester_resultant(&f, &g)
        .ok_or_else(|| Error::InternalDivisibility("Sylvester determinant".into()))?;

    let a_only = vec!["a".to_string()];
    let coeffs = res
        .collect_in(1)
        .into_iter()
        .map(|c| c.remove_param(1).expect("x collected out"))
        .collect();
    let mut poly = ParamXPoly::new(&a_only, coeffs);
    let lc = poly.coeff(poly.degree().unwrap_or(0)).constant_value();
    match lc {
        Some(c) if c.is_one() => {}
        Some(c) if (-&c).is_one() => poly = -&poly,
        _ => {
            return Err(Error::Postcondition(format!(
                "resultant leading coefficient {} is not +-1",
                poly.coeff(poly.degree().unwrap_or(0))
            )))
        }
    }
    if poly.degree() != Some(2 * n) {
        return Err(Error::Postcondition(format!(
            "resultant has degree {:?}, expected {}",
            poly.degree(),
            2 * n
        )));
    }
    if !poly.coeff(0).constant_value().is_some_and(|c| c.abs().is_one()) {
        return Err(Error::Postcondition(format!(
            "constant term {} is not +-1",
            poly.coeff(0)
        )));
    }
    let provenance = format!(
        "unit family from h = {h}, alpha = {}",
        alpha_minpoly.display_in("y")
    );
    ParamFamily::new(
        "unit_family",
        poly,
        vec![ParamRange::new("a", 1, 10)?],
        &provenance,
    )
}

/// True iff the monic cubic has a positive square discriminant. For
/// irreducible `f` this means the splitting field is a totally real cyclic cubic.
pub fn cyclic_cubic_check(f: &IntPoly) -> Result<bool> {
    let deg = f.degree().unwrap_or(0);
    if deg != 3 {
        return Err(Error::WrongDegree {
            expected: 3,
            found: deg,
        });
    }
    let disc = discriminant(f)?;
    if !disc.is_positive() {
        return Ok(false);
    }
    let r = disc.sqrt();
    Ok(&r * &r == disc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{find_family, parse_int_poly_in, parse_param_poly};
    use crate::realroots::approx_roots;
    use crate::intpoly::resultant;
    use proptest::prelude::*;

    fn t12() -> Vec<String> {
        vec!["t1".into(), "t2".into()]
    }

    fn closed_form(a: i64, b: i64, d: i64) -> IntPoly {
        IntPoly::from_i64s(&[1, 4 * a, 4 * (a * a - b * b * d) - 2, -4 * a, 1])
    }

    #[test]
    fn quartic_examples() {
        let q = |a: i64, b: i64, d: i64| gen_quartic_2param(&a.into(), &b.into(), &d.into());
        assert_eq!(q(1, 1, 2).unwrap(), IntPoly::from_i64s(&[1, 4, -6, -4, 1]));
        assert_eq!(q(1, 1, 2).unwrap(), find_family("gras_quartic").unwrap().at(4).unwrap());
        assert_eq!(q(0, 0, 2).unwrap(), IntPoly::from_i64s(&[1, 0, -2, 0, 1]));
        let m = IntPoly::from_i64s(&[-1, -6, 1]);
        assert_eq!(q(3, 0, 7).unwrap(), &m * &m);
        assert!(matches!(q(1, 1, 4), Err(Error::NotSquarefree(_))));
        assert!(matches!(q(1, 1, 12), Err(Error::NotSquarefree(_))));
        assert!(matches!(q(1, 1, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn quartic_grid_matches_closed_form() {
        for d in [2, 3, 5] {
            for a in 0..=10 {
                for b in 0..=10 {
                    let f = gen_quartic_2param(&a.into(), &b.into(), &d.into()).unwrap();
                    assert_eq!(f, closed_form(a, b, d));
                    assert!(is_totally_real(&f).unwrap());
                    assert!(f.coeff(0).is_one());
                }
            }
        }
    }

    proptest! {
        // f(x) = Res_y(y^2 - 2a y + a^2 - b^2 d, x^2 - 1 - 2x y) at integer x
        #[test]
        fn quartic_matches_resultant(a in -20i64..20, b in -20i64..20, d in prop::sample::select(vec![2i64, 3, 5, 6, 7, 10])) {
            let f = gen_quartic_2param(&a.into(), &b.into(), &d.into()).unwrap();
            let mp = IntPoly::from_i64s(&[a * a - b * b * d, -2 * a, 1]);
            for xv in -3i64..=3 {
                let g = IntPoly::from_i64s(&[xv * xv - 1, -2 * xv]);
                prop_assert_eq!(resultant(&mp, &g).unwrap(), f.eval(&xv.into()));
            }
        }
    }

    #[test]
    fn unit_family_examples() {
        let h = parse_param_poly("t1*t2", &t12()).unwrap();
        let alpha = parse_int_poly_in("y^2 - 2", "y").unwrap();
        let fam = gen_unit_family(&h, &alpha).unwrap();
        assert_eq!(fam.poly().to_string(), "x^4 - (8*a^2 + 2)*x^2 + 1");
        assert_eq!(fam.degree(), 4);

        let h = parse_param_poly("t1", &t12()).unwrap();
        let alpha = parse_int_poly_in("y - 1", "y").unwrap();
        let fam = gen_unit_family(&h, &alpha).unwrap();
        assert_eq!(fam.poly(), find_family("mruv").unwrap().poly());

        let h = parse_param_poly("t2", &t12()).unwrap();
        let alpha = parse_int_poly_in("y^2 - 2", "y").unwrap();
        assert!(matches!(gen_unit_family(&h, &alpha), Err(Error::DegreeConstraintViolated(_))));
        let h = parse_param_poly("t1*t2^2", &t12()).unwrap();
        assert!(matches!(gen_unit_family(&h, &alpha), Err(Error::DegreeConstraintViolated(_))));
        let h = parse_param_poly("t1*t2", &t12()).unwrap();
        let alpha = parse_int_poly_in("y^2 + 1", "y").unwrap();
        assert_eq!(gen_unit_family(&h, &alpha), Err(Error::AlphaNotTotallyReal));
    }

    #[test]
    fn unit_family_numeric_roots() {
        let cases = [
            ("t1*t2 + 1", "y^2 - 2"),
            ("t1 + t2", "y^2 - 5"),
            ("t1^2 + t2^2 - t2", "y^3 - 3*y + 1"),
            ("2*t1 - t2", "y^2 - y - 1"),
        ];
        for (hs, al) in cases {
            let h = parse_param_poly(hs, &t12()).unwrap();
            let alpha = parse_int_poly_in(al, "y").unwrap();
            let fam = gen_unit_family(&h, &alpha).unwrap();
            let alphas = approx_roots(&alpha, 1e-9).unwrap().real_roots();
            for a in [-3i64, 1, 4] {
                let f = fam.at(a).unwrap();
                assert!(is_totally_real(&f).unwrap());
                let mut expect: Vec<f64> = alphas
                    .iter()
                    .flat_map(|&al| {
                        let th = h.terms().iter().map(|(e, c)| {
                            c.to_f64().unwrap() * (a as f64).powi(e[0] as i32) * al.powi(e[1] as i32)
                        }).sum::<f64>();
                        let s = (th * th + 1.0).sqrt();
                        [th - s, th + s]
                    })
                    .collect();
                expect.sort_by(f64::total_cmp);
                let mut got: Vec<f64> = approx_roots(&f, 1e-9).unwrap().roots.iter()
                    .flat_map(|r| std::iter::repeat_n(r.re, r.multiplicity))
                    .collect();
                got.sort_by(f64::total_cmp);
                assert_eq!(got.len(), expect.len());
                for (g, e) in got.iter().zip(&expect) {
                    assert!((g - e).abs() <= 1e-6 * (1.0 + e.abs()), "{hs} / {al} at a={a}: {got:?} vs {expect:?}");
                }
            }
        }
    }

    #[test]
    fn cyclic_cubic_examples() {
        assert!(cyclic_cubic_check(&IntPoly::from_i64s(&[-1, -2, 1, 1])).unwrap());
        assert!(!cyclic_cubic_check(&IntPoly::from_i64s(&[-2, 0, 0, 1])).unwrap());
        assert!(cyclic_cubic_check(&IntPoly::from_i64s(&[-1, -4, -1, 1])).unwrap());
        assert_eq!(
            cyclic_cubic_check(&IntPoly::from_i64s(&[-1, 0, 1])),
            Err(Error::WrongDegree { expected: 3, found: 2 })
        );
        let shanks = find_family("shanks").unwrap();
        for a in -1..=50i64 {
            let f = shanks.at(a).unwrap();
            let s = a * a + 3 * a + 9;
            assert_eq!(discriminant(&f).unwrap(), BigInt::from(s * s));
            assert!(cyclic_cubic_check(&f).unwrap());
        }
        let kishi = find_family("kishi").unwrap();
        for n in -20..=20i64 {
            assert!(cyclic_cubic_check(&kishi.at(n).unwrap()).unwrap());
        }
    }
}
