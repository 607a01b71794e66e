//! Parametrized families of monic unit-constant polynomials: a built-in
//! registry, a small definition language, per-instance verification,
//! nonconstancy witnesses and family generators.

mod dsl;
mod generators;
mod registry;
mod verify;
mod witness;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Hypothesis, Result};
use crate::intpoly::{Assignment, IntPoly, ParamXPoly};

pub use dsl::{parse_family, parse_int_poly, parse_int_poly_in, parse_param_poly, parse_param_x_poly};
pub use generators::{cyclic_cubic_check, gen_quartic_2param, gen_unit_family};
pub use registry::{find_family, registry};
pub use verify::{verify_instance, verify_range, FamilyReport, InstanceResult};
pub use witness::{build_witness, find_witness_k, WitnessReport, WitnessSample};

/// Inclusive integer range for one parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParamRange {
    pub name: String,
    pub lo: i64,
    pub hi: i64,
}

impl ParamRange {
    pub fn new(name: &str, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!(
                "empty range for `{name}`: {lo}..{hi}"
            )));
        }
        Ok(ParamRange {
            name: name.to_string(),
            lo,
            hi,
        })
    }

    /// Number of values in the range.
    pub fn count(&self) -> u64 {
        self.hi.abs_diff(self.lo) + 1
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + Clone {
        self.lo..=self.hi
    }
}

/// A monic polynomial in `x` with coefficients in `Z[params]`, a unit
/// constant term and at least one parameter-dependent middle coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamFamily {
    name: String,
    params: Vec<String>,
    degree: usize,
    poly: ParamXPoly,
    default_range: Vec<ParamRange>,
    provenance: String,
}

/// Checks the standing hypotheses on a family polynomial.
pub fn check_hypotheses(poly: &ParamXPoly) -> std::result::Result<(), Hypothesis> {
    let params = poly.params();
    if params.len() > 2 {
        return Err(Hypothesis::TooManyParameters(params.len()));
    }
    for (i, p) in params.iter().enumerate() {
        if p == "x" || !dsl::valid_identifier(p) || params[..i].contains(p) {
            return Err(Hypothesis::BadParameterName(p.clone()));
        }
    }
    let n = poly.degree().unwrap_or(0);
    if n < 2 {
        return Err(Hypothesis::DegreeBelowTwo(n));
    }
    if !poly.is_monic() {
        return Err(Hypothesis::NotMonic(poly.coeff(n).to_string()));
    }
    let p0 = poly.coeff(0);
    if !p0.constant_value().is_some_and(|c| c.abs().is_one()) {
        return Err(Hypothesis::ConstantTermNotUnit(p0.to_string()));
    }
    if (1..n).all(|j| poly.coeff(j).is_constant()) {
        return Err(Hypothesis::NoNonconstantMiddle);
    }
    Ok(())
}

impl ParamFamily {
    /// Validates the hypotheses and the default ranges.
    pub fn new(
        name: &str,
        poly: ParamXPoly,
        default_range: Vec<ParamRange>,
        provenance: &str,
    ) -> Result<Self> {
        check_hypotheses(&poly).map_err(Error::HypothesisViolation)?;
        let params = poly.params().to_vec();
        let names: Vec<&String> = default_range.iter().map(|r| &r.name).collect();
        if names != params.iter().collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(format!(
                "default ranges must cover parameters {params:?} in order"
            )));
        }
        Ok(ParamFamily {
            name: name.to_string(),
            degree: poly.degree().unwrap_or(0),
            params,
            poly,
            default_range,
            provenance: provenance.to_string(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn poly(&self) -> &ParamXPoly {
        &self.poly
    }

    pub fn default_range(&self) -> &[ParamRange] {
        &self.default_range
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn instantiate(&self, assignment: &Assignment) -> Result<IntPoly> {
        self.poly.instantiate(assignment)
    }

    /// Instantiates a single-parameter family at `value`.
    pub fn at(&self, value: impl Into<BigInt>) -> Result<IntPoly> {
        match self.params.as_slice() {
            [p] => {
                let mut asg = Assignment::new();
                asg.insert(p.clone(), value.into());
                self.instantiate(&asg)
            }
            _ => Err(Error::InvalidArgument(format!(
                "family `{}` has {} parameters, expected 1",
                self.name,
                self.params.len()
            ))),
        }
    }
}
