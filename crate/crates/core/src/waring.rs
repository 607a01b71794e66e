//! Sums of values of polynomials: four-square decompositions, the
//! `+-f(x + k)` normalization, Kamke-style representations
//! `m = f(a_1) + ... + f(a_s1) + s2`, and the four-square definable set
//! `phi_W(x; a, b)` over the rational integers.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::realroots::sturm_chain;

const MAX_SCAN: u64 = 10_000_000;

/// Four nonnegative integers, largest first, whose squares sum to `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FourSquares {
    pub parts: [u64; 4],
}

impl FourSquares {
    pub fn sum_of_squares(&self) -> u128 {
        self.parts.iter().map(|&p| u128::from(p) * u128::from(p)).sum()
    }
}

fn isqrt(n: u64) -> u64 {
    n.sqrt()
}

fn sq(n: u64) -> u64 {
    n * n
}

/// The lexicographically largest `(x1, x2, x3, x4)` with
/// `x1 >= x2 >= x3 >= x4 >= 0` and `x1^2 + x2^2 + x3^2 + x4^2 = m`.
pub fn four_squares(m: u64) -> FourSquares {
    for a in (0..=isqrt(m)).rev() {
        let ra = m - sq(a);
        for b in (0..=isqrt(ra).min(a)).rev() {
            let rb = ra - sq(b);
            for c in (0..=isqrt(rb).min(b)).rev() {
                let rc = rb - sq(c);
                let d = isqrt(rc);
                if sq(d) == rc && d <= c {
                    return FourSquares {
                        parts: [a, b, c, d],
                    };
                }
                if sq(c) < rc {
                    break;
                }
            }
            if sq(b) * 2 < rb {
                break;
            }
        }
        if sq(a) * 3 < ra {
            break;
        }
    }
    unreachable!("every nonnegative integer is a sum of four squares")
}

/// `g(x) = +-f(x + shift)` with `g(n) >= 0` for every integer `n >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normalized {
    pub poly: IntPoly,
    #[serde(serialize_with = "crate::decimal::one")]
    pub shift: BigInt,
    pub negated: bool,
}

/// Smallest integer `r` such that `f` has no real root in `[r, oo)`.
fn root_ceiling(f: &IntPoly) -> Result<BigInt> {
    let chain = sturm_chain(f)?;
    let at_inf = chain.variations_at_pos_inf();
    let has_root_from = |t: &BigInt| {
        let q = BigRational::from_integer(t.clone());
        f.sign_at(&q) == Ordering::Equal || chain.variations_at(&q) > at_inf
    };
    let bound = f.cauchy_bound()?;
    let mut lo = -&bound;
    if !has_root_from(&lo) {
        return Ok(lo);
    }
    let mut hi = bound;
    // invariant: has_root_from(lo), !has_root_from(hi)
    while &hi - &lo > BigInt::from(1) {
        let mid: BigInt = (&lo + &hi) >> 1;
        if has_root_from(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// Replaces `f` by `+-f(x + k)` with the sign making the leading coefficient
/// positive and `k >= n0` minimal such that the result is nonnegative at
/// every nonnegative integer.
pub fn normalize_poly(f: &IntPoly, n0: u64) -> Result<Normalized> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::NotEventuallySigned);
    }
    let negated = f.lc().is_some_and(|c| c.is_negative());
    let g = if negated { -f } else { f.clone() };
    let n0 = BigInt::from(n0);
    let ceiling = root_ceiling(&g)?;
    let mut shift = n0.clone();
    let mut n = &ceiling - 1;
    let mut steps = 0u64;
    while n >= n0 {
        if g.eval(&n).is_negative() {
            shift = &n + 1;
            break;
        }
        n -= 1;
        steps += 1;
        if steps > MAX_SCAN {
            return Err(Error::InvalidArgument(format!(
                "more than {MAX_SCAN} integers below the largest real root to scan"
            )));
        }
    }
    Ok(Normalized {
        poly: g.shift(&shift),
        shift,
        negated,
    })
}

/// `m = f(terms[0]) + ... + f(terms[s1 - 1]) + s2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KamkeRepresentation {
    pub terms: Vec<u64>,
    pub s2: u64,
}

impl KamkeRepresentation {
    pub fn size(&self) -> usize {
        self.terms.len() + self.s2 as usize
    }

    /// Independently re-checks the sum identity and the budget.
    pub fn certifies(&self, f: &IntPoly, m: u64, r: usize) -> bool {
        let sum: BigInt = self
            .terms
            .iter()
            .map(|&a| f.eval(&BigInt::from(a)))
            .sum::<BigInt>()
            + BigInt::from(self.s2);
        sum == BigInt::from(m) && self.size() <= r
    }
}

/// Positive values `f(a) <= m`, deduplicated, largest value first, each with
/// the largest argument attaining it.
fn candidates(f: &IntPoly, m: u64) -> Result<Vec<(u64, u64)>> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::PreconditionViolated("f must be nonconstant".into()));
    }
    if f.lc().is_some_and(|c| c.is_negative()) {
        return Err(Error::PreconditionViolated(
            "f has negative leading coefficient".into(),
        ));
    }
    let fp = f.derivative();
    let increasing_from = if fp.is_constant() {
        BigInt::zero()
    } else {
        root_ceiling(&fp)?.max(BigInt::zero())
    };
    let mut out: Vec<(u64, u64)> = Vec::new();
    let big_m = BigInt::from(m);
    let mut a = 0u64;
    loop {
        let ab = BigInt::from(a);
        let v = f.eval(&ab);
        if v.is_negative() {
            return Err(Error::PreconditionViolated(format!("f({a}) = {v} is negative")));
        }
        if v > big_m {
            if ab >= increasing_from {
                break;
            }
        } else if !v.is_zero() {
            out.push((v.to_u64().expect("value at most m"), a));
        }
        a += 1;
        if a > MAX_SCAN {
            return Err(Error::InvalidArgument(format!(
                "more than {MAX_SCAN} arguments to enumerate"
            )));
        }
    }
    out.sort_by(|x, y| y.0.cmp(&x.0).then(y.1.cmp(&x.1)));
    out.dedup_by_key(|c| c.0);
    Ok(out)
}

struct Search<'a> {
    cands: &'a [(u64, u64)],
    failed: HashSet<(usize, u64, usize)>,
    terms: Vec<u64>,
}

impl Search<'_> {
    fn run(&mut self, from: usize, rest: u64, budget: usize) -> Option<u64> {
        if rest == 0 {
            return Some(0);
        }
        if budget == 0 || self.failed.contains(&(from, rest, budget)) {
            return None;
        }
        let vmax = self.cands.get(from).map_or(1, |c| c.0.max(1));
        if u128::from(rest) > u128::from(vmax) * budget as u128 {
            return None;
        }
        for i in from..self.cands.len() {
            let (v, a) = self.cands[i];
            if v > rest {
                continue;
            }
            if u128::from(rest) > u128::from(v.max(1)) * budget as u128 {
                break;
            }
            self.terms.push(a);
            if let Some(s2) = self.run(i, rest - v, budget - 1) {
                return Some(s2);
            }
            self.terms.pop();
        }
        if rest as u128 <= budget as u128 {
            return Some(rest);
        }
        self.failed.insert((from, rest, budget));
        None
    }
}

fn represent_with(
    f: &IntPoly,
    cands: &[(u64, u64)],
    m: u64,
    r: usize,
) -> Result<Option<KamkeRepresentation>> {
    let mut search = Search {
        cands,
        failed: HashSet::new(),
        terms: Vec::new(),
    };
    let Some(s2) = search.run(0, m, r) else {
        return Ok(None);
    };
    let rep = KamkeRepresentation {
        terms: search.terms,
        s2,
    };
    if !rep.certifies(f, m, r) {
        return Err(Error::Postcondition(format!(
            "representation {rep:?} of {m} does not verify"
        )));
    }
    Ok(Some(rep))
}

/// A representation of `m` with `s1 + s2 <= r`, found by depth-first search
/// over arguments in descending order of value, trying further terms before
/// closing with `s2`. `None` when no representation within budget exists.
pub fn kamke_represent(f: &IntPoly, m: u64, r: usize) -> Result<Option<KamkeRepresentation>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    represent_with(f, &candidates(f, m)?, m, r)
}

/// Minimal budget found for one `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KamkeRow {
    pub m: u64,
    pub min_r: Option<usize>,
    pub representation: Option<KamkeRepresentation>,
}

/// Per-`m` minimal budgets for `m = 1..=m_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KamkeScan {
    pub m_max: u64,
    pub r_max: usize,
    pub rows: Vec<KamkeRow>,
    pub gaps: Vec<u64>,
    pub max_r: Option<usize>,
    pub argmax: Option<u64>,
}

/// For each `m` in `1..=m_max`, the least `r <= r_max` admitting a
/// representation; `m` values with none are listed as gaps.
pub fn kamke_scan(f: &IntPoly, m_max: u64, r_max: usize) -> Result<KamkeScan> {
    if m_max == 0 || r_max == 0 {
        return Err(Error::InvalidArgument("m_max and r_max must be positive".into()));
    }
    let cands = candidates(f, m_max)?;
    let rows = (1..=m_max)
        .into_par_iter()
        .map(|m| {
            let local: Vec<(u64, u64)> = cands.iter().copied().filter(|c| c.0 <= m).collect();
            for r in 1..=r_max {
                if let Some(rep) = represent_with(f, &local, m, r)? {
                    return Ok(KamkeRow {
                        m,
                        min_r: Some(r),
                        representation: Some(rep),
                    });
                }
            }
            Ok(KamkeRow {
                m,
                min_r: None,
                representation: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let gaps = rows.iter().filter(|r| r.min_r.is_none()).map(|r| r.m).collect();
    let max_r = rows.iter().filter_map(|r| r.min_r).max();
    let argmax = max_r.and_then(|mx| rows.iter().find(|r| r.min_r == Some(mx)).map(|r| r.m));
    Ok(KamkeScan {
        m_max,
        r_max,
        rows,
        gaps,
        max_r,
        argmax,
    })
}

/// How the three sets of the containment chain compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Containment {
    Equal,
    Strict,
    Violated,
}

impl std::fmt::Display for Containment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Containment::Equal => "EQUAL",
            Containment::Strict => "STRICT",
            Containment::Violated => "VIOLATED",
        })
    }
}

/// A member of the `phi_W` set with its two four-square witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiWMember {
    pub x: i64,
    pub ax: FourSquares,
    pub b_minus_ax: FourSquares,
}

/// The set `{x : phi_W(x; a, b)}` over a window, with the chain
/// `{n in N : 0 < n < b/a} <= phi set <= {x in Z : 0 < x < b/a}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiWReport {
    pub a: u64,
    pub b: u64,
    pub x_max: u64,
    pub members: Vec<PhiWMember>,
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
    pub containment: Containment,
}

impl PhiWReport {
    pub fn set(&self) -> Vec<i64> {
        self.members.iter().map(|m| m.x).collect()
    }
}

/// Evaluates `ax != 0 && ax != b && exists x1..x8 in W:
/// ax = x1^2 + ... + x4^2 && b - ax = x5^2 + ... + x8^2` for `W` the
/// nonnegative integers and `x` in `[-x_max, x_max]`.
pub fn phi_w_set(a: u64, b: u64, x_max: u64) -> Result<PhiWReport> {
    if a == 0 || b == 0 || x_max == 0 {
        return Err(Error::InvalidArgument("a, b and x_max must be positive".into()));
    }
    let lim = i64::try_from(x_max)
        .ok()
        .filter(|&l| i128::from(l) * i128::from(a) <= i128::from(i64::MAX))
        .ok_or_else(|| Error::InvalidArgument("window too large".into()))?;
    let a_i = i128::from(a);
    let b_i = i128::from(b);
    let members: Vec<PhiWMember> = (-lim..=lim)
        .filter_map(|x| {
            let ax = a_i * i128::from(x);
            if ax == 0 || ax == b_i || ax < 0 || ax > b_i {
                return None;
            }
            Some(PhiWMember {
                x,
                ax: four_squares(ax as u64),
                b_minus_ax: four_squares((b_i - ax) as u64),
            })
        })
        .collect();
    let lower: Vec<i64> = (1..=lim).filter(|&n| a_i * i128::from(n) < b_i).collect();
    let upper: Vec<i64> = (-lim..=lim)
        .filter(|&x| x > 0 && a_i * i128::from(x) < b_i)
        .collect();
    let set: Vec<i64> = members.iter().map(|m| m.x).collect();
    let subset = |s: &[i64], t: &[i64]| s.iter().all(|v| t.contains(v));
    let containment = if !subset(&lower, &set) || !subset(&set, &upper) {
        Containment::Violated
    } else if lower == set && set == upper {
        Containment::Equal
    } else {
        Containment::Strict
    };
    Ok(PhiWReport {
        a,
        b,
        x_max,
        members,
        lower,
        upper,
        containment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(v: &[i64]) -> IntPoly {
        IntPoly::from_i64s(v)
    }

    /// Minimal `s1 + s2` for every `m <= m_max` by dynamic programming.
    fn dp_min_r(f: &IntPoly, m_max: u64) -> Vec<usize> {
        let vals: Vec<u64> = (0..=m_max)
            .map(|a| f.eval(&BigInt::from(a)))
            .filter(|v| v.is_positive() && *v <= BigInt::from(m_max))
            .map(|v| v.to_u64().unwrap())
            .collect();
        let mut c = vec![usize::MAX; m_max as usize + 1];
        c[0] = 0;
        for n in 1..=m_max as usize {
            for &v in &vals {
                if v as usize <= n && c[n - v as usize] != usize::MAX {
                    c[n] = c[n].min(c[n - v as usize] + 1);
                }
            }
        }
        (0..=m_max as usize)
            .map(|m| (0..=m).filter(|&s2| c[m - s2] != usize::MAX).map(|s2| c[m - s2] + s2).min().unwrap())
            .collect()
    }

    #[test]
    fn four_square_examples() {
        assert_eq!(four_squares(7).parts, [2, 1, 1, 1]);
        assert_eq!(four_squares(0).parts, [0, 0, 0, 0]);
        assert_eq!(four_squares(310).parts, [17, 4, 2, 1]);
        assert_eq!(four_squares(16).parts, [4, 0, 0, 0]);
    }

    #[test]
    fn four_squares_exhaustive_to_1e5() {
        for m in 0..=100_000u64 {
            let fs = four_squares(m);
            assert_eq!(fs.sum_of_squares(), u128::from(m));
            assert!(fs.parts.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn four_squares_is_lexicographically_largest() {
        for m in 0..=400u64 {
            let mut best = [0u64; 4];
            let r = isqrt(m);
            for a in 0..=r {
                for b in 0..=a {
                    for c in 0..=b {
                        for d in 0..=c {
                            if a * a + b * b + c * c + d * d == m && [a, b, c, d] > best {
                                best = [a, b, c, d];
                            }
                        }
                    }
                }
            }
            assert_eq!(four_squares(m).parts, best, "m = {m}");
        }
    }

    #[test]
    fn normalize_examples() {
        let n = normalize_poly(&ip(&[0, -10, 1]), 0).unwrap();
        assert_eq!((n.poly, n.shift, n.negated), (ip(&[0, 10, 1]), 10.into(), false));
        let n = normalize_poly(&ip(&[-1, 0, -1]), 0).unwrap();
        assert_eq!((n.poly, n.shift, n.negated), (ip(&[1, 0, 1]), 0.into(), true));
        let n = normalize_poly(&ip(&[2, 0, 4]), 0).unwrap();
        assert_eq!((n.poly, n.shift, n.negated), (ip(&[2, 0, 4]), 0.into(), false));
        let n = normalize_poly(&ip(&[2, 0, 4]), 7).unwrap();
        assert_eq!(n.shift, 7.into());
        assert_eq!(normalize_poly(&ip(&[5]), 0), Err(Error::NotEventuallySigned));
        // (x - 5)^2 (x - 20): negative below 20 except at 5
        let f = &ip(&[-5, 1]).pow(2) * &ip(&[-20, 1]);
        assert_eq!(normalize_poly(&f, 0).unwrap().shift, 20.into());
        // (x - 3)^2 (x + 1) is never negative on n >= 0
        let f = &ip(&[-3, 1]).pow(2) * &ip(&[1, 1]);
        assert_eq!(normalize_poly(&f, 0).unwrap().shift, 0.into());
    }

    proptest! {
        #[test]
        fn normalize_is_nonnegative_and_minimal(
            roots in prop::collection::vec(-30i64..30, 1..5),
            neg in any::<bool>(),
            n0 in 0u64..40,
        ) {
            let mut f = IntPoly::one();
            for r in &roots {
                f = &f * &ip(&[-r, 1]);
            }
            if neg {
                f = -&f;
            }
            let n = normalize_poly(&f, n0).unwrap();
            prop_assert!(n.poly.lc().unwrap().is_positive());
            prop_assert!(n.shift >= BigInt::from(n0));
            for k in 0..80i64 {
                prop_assert!(!n.poly.eval(&k.into()).is_negative());
            }
            let s = if n.negated { -&f } else { f.clone() };
            prop_assert_eq!(n.poly.clone(), s.shift(&n.shift));
            if n.shift > BigInt::from(n0) {
                prop_assert!(s.eval(&(&n.shift - 1)).is_negative());
            }
        }
    }

    #[test]
    fn kamke_examples() {
        let x2 = ip(&[0, 0, 1]);
        let x3 = ip(&[0, 0, 0, 1]);
        let rep = kamke_represent(&x2, 23, 4).unwrap().unwrap();
        assert_eq!((rep.terms, rep.s2), (vec![3, 3, 2, 1], 0));
        let rep = kamke_represent(&x3, 23, 9).unwrap().unwrap();
        assert_eq!((rep.terms, rep.s2), (vec![2, 2, 1, 1, 1, 1, 1, 1, 1], 0));
        assert_eq!(kamke_represent(&x3, 5, 3).unwrap(), None);
        let rep = kamke_represent(&ip(&[0, 2]), 5, 3).unwrap().unwrap();
        assert_eq!((rep.terms, rep.s2), (vec![2], 1));
        assert!(matches!(
            kamke_represent(&ip(&[-1, 0, 1]), 5, 3),
            Err(Error::PreconditionViolated(_))
        ));
        assert_eq!(kamke_represent(&x2, 0, 1).unwrap().unwrap().size(), 0);
    }

    #[test]
    fn kamke_scan_examples() {
        let s = kamke_scan(&ip(&[0, 0, 1]), 100, 6).unwrap();
        assert_eq!(s.max_r, Some(4));
        assert!(s.gaps.is_empty());
        let s = kamke_scan(&ip(&[0, 0, 0, 1]), 300, 9).unwrap();
        assert_eq!((s.max_r, s.argmax), (Some(9), Some(23)));
        assert!(s.gaps.is_empty());
        let s = kamke_scan(&ip(&[0, 2]), 10, 3).unwrap();
        let r: Vec<Option<usize>> = s.rows.iter().map(|r| r.min_r).collect();
        assert_eq!(r[4], Some(2));
        assert!(s.rows.iter().filter(|r| r.m % 2 == 1).all(|r| r.representation.as_ref().unwrap().s2 >= 1));
        let s = kamke_scan(&ip(&[0, 0, 0, 1]), 30, 3).unwrap();
        assert!(s.gaps.contains(&5) && s.gaps.contains(&23));
    }

    #[test]
    fn kamke_scan_matches_dynamic_programming() {
        for f in [ip(&[0, 0, 1]), ip(&[0, 0, 0, 1]), ip(&[2, 0, 4]), ip(&[0, 10, 1]), ip(&[1, 1, 1])] {
            let dp = dp_min_r(&f, 200);
            let s = kamke_scan(&f, 200, 12).unwrap();
            for row in &s.rows {
                let want = dp[row.m as usize];
                assert_eq!(row.min_r, (want <= 12).then_some(want), "{f} m={}", row.m);
                if let Some(rep) = &row.representation {
                    assert!(rep.certifies(&f, row.m, row.min_r.unwrap()));
                }
            }
        }
    }

    #[test]
    fn mruv_witness_is_kamke_finite() {
        let s = kamke_scan(&ip(&[2, 0, 4]), 500, 12).unwrap();
        assert!(s.gaps.is_empty());
        assert!(s.max_r.unwrap() <= 12);
    }

    #[test]
    fn phi_w_examples() {
        let r = phi_w_set(1, 5, 100).unwrap();
        assert_eq!(r.set(), [1, 2, 3, 4]);
        assert_eq!(r.containment, Containment::Equal);
        assert_eq!(phi_w_set(2, 5, 100).unwrap().set(), [1, 2]);
        assert!(phi_w_set(1, 1, 100).unwrap().set().is_empty());
        for m in &r.members {
            assert_eq!(m.ax.sum_of_squares(), m.x as u128);
            assert_eq!(m.b_minus_ax.sum_of_squares(), (5 - m.x) as u128);
        }
    }

    #[test]
    fn phi_w_equals_open_interval() {
        for a in 1..=30u64 {
            for b in 1..=30u64 {
                let r = phi_w_set(a, b, 40).unwrap();
                let want: Vec<i64> = (-40..=40).filter(|&x| 0 < a as i64 * x && (a as i64 * x) < b as i64).collect();
                assert_eq!(r.set(), want);
                assert_eq!(r.containment, Containment::Equal);
            }
        }
    }

    proptest! {
        #[test]
        fn kamke_certificates_verify(m in 0u64..400, r in 1usize..10, c in 0i64..5) {
            let f = ip(&[c, 1, 1]);
            if let Some(rep) = kamke_represent(&f, m, r).unwrap() {
                prop_assert!(rep.certifies(&f, m, r));
                prop_assert!(rep.terms.windows(2).all(|w| f.eval(&w[0].into()) >= f.eval(&w[1].into())));
            }
        }
    }
}
