use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

const MAX_ITERATIONS: usize = 2000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApproxRoot {
    pub re: f64,
    pub im: f64,
    /// Multiplicity of the root in the input polynomial.
    pub multiplicity: usize,
    /// `|g(z)|` for the squarefree factor `g` containing the root.
    pub residual: f64,
}

impl ApproxRoot {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Floating-point approximations to the distinct roots of a polynomial.
/// Test oracle only.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ApproxRoots {
    pub roots: Vec<ApproxRoot>,
}

impl ApproxRoots {
    /// Sum of `z^m` over all roots counted with multiplicity.
    pub fn power_sum(&self, m: u32) -> Complex64 {
        self.roots
            .iter()
            .map(|r| r.z().powu(m) * r.multiplicity as f64)
            .sum()
    }

    /// Sum of `|z|^m` with multiplicity; the natural scale for [`Self::power_sum`].
    pub fn power_sum_scale(&self, m: u32) -> f64 {
        self.roots
            .iter()
            .map(|r| r.z().norm().powi(m as i32) * r.multiplicity as f64)
            .sum()
    }

    /// Roots classified as real. A nonreal root sits at distance `2|Im z|`
    /// from its conjugate approximant, so `|Im z|` is at least half the
    /// nearest-neighbour distance; real approximants have `|Im z|` far below
    /// a quarter of it.
    pub fn real_roots(&self) -> Vec<f64> {
        let zs: Vec<Complex64> = self.roots.iter().map(|r| r.z()).collect();
        zs.iter()
            .enumerate()
            .filter(|(i, z)| {
                let sep = zs
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| j != i)
                    .map(|(_, w)| (*z - w).norm())
                    .fold(f64::INFINITY, f64::min);
                z.im.abs() < sep / 4.0
            })
            .map(|(_, z)| z.re)
            .collect()
    }
}

fn to_f64(f: &IntPoly) -> Vec<f64> {
    f.coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect()
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn magnitude(c: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, a| acc * r + a.abs())
}

/// Aberth–Ehrlich simultaneous iteration on a squarefree polynomial.
fn aberth(c: &[f64]) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    let lc = c[n];
    let monic: Vec<f64> = c.iter().map(|a| a / lc).collect();
    if n == 1 {
        return Ok(vec![Complex64::new(-monic[0], 0.0)]);
    }
    // Fujiwara-style radius for the starting circle.
    let radius = (0..n)
        .map(|i| monic[i].abs().powf(1.0 / (n - i) as f64))
        .fold(0.0, f64::max)
        .max(1e-3)
        * 2.0;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner(&monic, z[k]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if w.is_finite() {
                z[k] -= w;
                worst = worst.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if worst < 1e-15 {
            return Ok(z);
        }
    }
    Ok(z)
}

/// Approximates the distinct roots of `f` (the roots of its squarefree
/// part), recording multiplicities from a squarefree decomposition. Fails if
/// some residual exceeds `tol * (1 + sum |c_i| |z|^i)`.
pub fn approx_roots(f: &IntPoly, tol: f64) -> Result<ApproxRoots> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    let mut roots = Vec::new();
    for (g, mult) in f.squarefree_decomposition()? {
        let c = to_f64(&g);
        for z in aberth(&c)? {
            let (p, _) = horner(&c, z);
            let residual = p.norm();
            if residual.is_nan() || residual > tol * (1.0 + magnitude(&c, z)) {
                return Err(Error::NonConvergence(MAX_ITERATIONS));
            }
            roots.push(ApproxRoot {
                re: z.re,
                im: z.im,
                multiplicity: mult,
                residual,
            });
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(ApproxRoots { roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realroots::count_real_roots;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn approx_examples() {
        let r = approx_roots(&p(&[-2, 0, 1]), 1e-12).unwrap();
        let re: Vec<f64> = r.roots.iter().map(|x| x.re).collect();
        assert!((re[0] + 2f64.sqrt()).abs() < 1e-12 && (re[1] - 2f64.sqrt()).abs() < 1e-12);

        let r = approx_roots(&p(&[-1, -2, 1]), 1e-12).unwrap();
        assert!((r.roots[0].re - (1.0 - 2f64.sqrt())).abs() < 1e-12);
        assert!((r.roots[1].re - (1.0 + 2f64.sqrt())).abs() < 1e-12);

        let r = approx_roots(&p(&[-7, 1]), 1e-12).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert!((r.roots[0].re - 7.0).abs() < 1e-12);
    }

    #[test]
    fn multiplicities_are_recorded() {
        // x^2 (x - 1)^3 (x^2 + 1)
        let f = &(&p(&[0, 0, 1]) * &p(&[-1, 1]).pow(3)) * &p(&[1, 0, 1]);
        let r = approx_roots(&f, 1e-10).unwrap();
        assert_eq!(r.roots.len(), 4);
        let total: usize = r.roots.iter().map(|x| x.multiplicity).sum();
        assert_eq!(total, 7);
        assert_eq!(r.real_roots().len(), 2);
        // power sum with multiplicity: 2*0 + 3*1 + i^2 + (-i)^2 = 1
        assert!((r.power_sum(2).re - 1.0).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn sturm_agrees_with_oracle(v in prop::collection::vec(-10i64..=10, 2..=9)) {
            let f = IntPoly::from_i64s(&v);
            prop_assume!(!f.is_constant());
            let r = approx_roots(&f, 1e-9).unwrap();
            prop_assert_eq!(r.real_roots().len(), count_real_roots(&f, None).unwrap());
        }
    }
}
