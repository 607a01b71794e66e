use num_bigint::BigInt;
use serde::Serialize;

use super::ParamFamily;
use crate::error::{Error, Result};
use crate::intpoly::{trace_power, MultiParamPoly};
use crate::symfun::{is_nonconstant, q_param_upto};

/// A nonconstant power-sum polynomial `Q_exponent` for a family, with
/// spot checks against companion-matrix traces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub family: String,
    pub torsion_half_order: usize,
    pub k: usize,
    pub exponent: usize,
    pub witness: MultiParamPoly,
    pub nonconstant: bool,
    pub samples: Vec<WitnessSample>,
}

/// `Q_exponent` evaluated at one parameter value, with the trace it must equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSample {
    #[serde(serialize_with = "crate::decimal::one")]
    pub param: BigInt,
    #[serde(serialize_with = "crate::decimal::one")]
    pub value: BigInt,
    #[serde(serialize_with = "crate::decimal::one")]
    pub trace: BigInt,
}

fn single_param(family: &ParamFamily) -> Result<()> {
    if family.params().len() != 1 {
        return Err(Error::InvalidArgument(format!(
            "witness search needs a one-parameter family, `{}` has {}",
            family.name(),
            family.params().len()
        )));
    }
    Ok(())
}

fn smallest_k(family: &ParamFamily, big_n: usize) -> Result<(usize, MultiParamPoly)> {
    single_param(family)?;
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let n = family.degree();
    let q = q_param_upto(family.poly(), n * big_n)?;
    (1..=n)
        .map(|k| (k, &q[k * big_n - 1]))
        .find(|(_, p)| is_nonconstant(p))
        .map(|(k, p)| (k, p.clone()))
        .ok_or(Error::NoWitnessInRange { n })
}

/// Smallest `k` in `1..=n` with `Q_(kN)` nonconstant in the parameter.
pub fn find_witness_k(family: &ParamFamily, big_n: usize) -> Result<usize> {
    smallest_k(family, big_n).map(|(k, _)| k)
}

/// Finds the smallest `k` with `Q_(2Nk)` nonconstant and checks the
/// resulting polynomial at the low, middle and high end of the default range.
pub fn build_witness(family: &ParamFamily, torsion_half_order: usize) -> Result<WitnessReport> {
    let (k, witness) = smallest_k(family, 2 * torsion_half_order)?;
    let exponent = 2 * torsion_half_order * k;
    let r = &family.default_range()[0];
    let mid = r.lo + (r.hi - r.lo) / 2;
    let mut points = vec![r.lo, mid, r.hi];
    points.dedup();
    let samples = points
        .into_iter()
        .map(|t| {
            let param = BigInt::from(t);
            let value = witness.eval_values(std::slice::from_ref(&param));
            let trace = trace_power(&family.at(param.clone())?, exponent as u32)?;
            if value != trace {
                return Err(Error::Postcondition(format!(
                    "Q_{exponent}({t}) = {value} but the trace is {trace}"
                )));
            }
            Ok(WitnessSample { param, value, trace })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessReport {
        family: family.name().to_string(),
        torsion_half_order,
        k,
        exponent,
        nonconstant: true,
        witness,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{find_family, parse_family, registry};

    #[test]
    fn known_witnesses() {
        let w = build_witness(&find_family("mruv").unwrap(), 1).unwrap();
        assert_eq!((w.k, w.exponent), (1, 2));
        assert_eq!(w.witness.to_string(), "4*a^2 + 2");
        let w = build_witness(&find_family("shanks").unwrap(), 1).unwrap();
        assert_eq!(w.witness.to_string(), "a^2 + 2*a + 6");
        let w = build_witness(&find_family("lehmer").unwrap(), 1).unwrap();
        assert_eq!(w.witness.to_string(), "a^4 + 4*a^3 + 12*a^2 + 20*a + 20");
        assert_eq!(w.samples.len(), 3);
    }

    #[test]
    fn every_registry_family_has_a_witness() {
        for fam in registry() {
            for n in 1..=4 {
                let k = find_witness_k(&fam, n).unwrap();
                assert!((1..=fam.degree()).contains(&k));
                let w = build_witness(&fam, n).unwrap();
                assert!(w.nonconstant && !w.witness.is_constant());
            }
        }
    }

    #[test]
    fn first_power_sum_witness() {
        // Q_1 = -p_(n-1), so k = 1 whenever p_(n-1) depends on the parameter
        assert_eq!(find_witness_k(&find_family("shanks").unwrap(), 1).unwrap(), 1);
        // Gras quartic: Q_1 = t
        assert_eq!(find_witness_k(&find_family("gras_quartic").unwrap(), 1).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        let two = parse_family("name: g\nparams: a, b\npoly: x^2 - a*x - 1").unwrap();
        assert!(matches!(build_witness(&two, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            find_witness_k(&find_family("mruv").unwrap(), 0),
            Err(Error::InvalidArgument(_))
        ));
    }
}
