use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use super::{ParamFamily, ParamRange};
use crate::error::{Error, Result};
use crate::intpoly::Assignment;
use crate::realroots::is_totally_real;

const MAX_INSTANCES: u64 = 10_000_000;

/// Outcome of checking one instance of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    #[serde(serialize_with = "crate::decimal::assignment")]
    pub assignment: Assignment,
    pub totally_real: bool,
    pub unit_constant: bool,
    pub degree_ok: bool,
}

impl InstanceResult {
    pub fn passed(&self) -> bool {
        self.totally_real && self.unit_constant && self.degree_ok
    }
}

/// Summary of a range verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub ranges: Vec<ParamRange>,
    pub instances: u64,
    pub passed: u64,
    pub failures: Vec<InstanceResult>,
    pub tool_version: String,
    #[serde(skip)]
    pub elapsed_ms: u64,
}

/// Instantiates the family and checks total reality, the unit constant
/// term and the degree.
pub fn verify_instance(family: &ParamFamily, assignment: &Assignment) -> Result<InstanceResult> {
    let f = family.instantiate(assignment)?;
    let degree_ok = f.degree() == Some(family.degree());
    let unit_constant = f.coeff(0).abs().is_one();
    let totally_real = !f.is_constant() && is_totally_real(&f)?;
    Ok(InstanceResult {
        assignment: assignment.clone(),
        totally_real,
        unit_constant,
        degree_ok,
    })
}

fn assignments(params: &[String], ranges: &[ParamRange]) -> Vec<Assignment> {
    let mut out = vec![Assignment::new()];
    for (p, r) in params.iter().zip(ranges) {
        out = out
            .into_iter()
            .flat_map(|a| {
                r.values().map(move |v| {
                    let mut a = a.clone();
                    a.insert(p.clone(), BigInt::from(v));
                    a
                })
            })
            .collect();
    }
    out
}

/// Verifies every instance in the box given by `ranges` (or the family's
/// default ranges). Work runs on the current rayon pool; the report lists
/// instances in lexicographic parameter order regardless of scheduling.
pub fn verify_range(family: &ParamFamily, ranges: Option<&[ParamRange]>) -> Result<FamilyReport> {
    let start = Instant::now();
    let ranges = ranges.unwrap_or(family.default_range());
    let ordered: Vec<ParamRange> = family
        .params()
        .iter()
        .map(|p| {
            ranges
                .iter()
                .find(|r| &r.name == p)
                .cloned()
                .ok_or_else(|| Error::MissingParameter(p.clone()))
        })
        .collect::<Result<_>>()?;
    if let Some(r) = ranges.iter().find(|r| !family.params().contains(&r.name)) {
        return Err(Error::InvalidArgument(format!(
            "family `{}` has no parameter `{}`",
            family.name(),
            r.name
        )));
    }
    let total = ordered
        .iter()
        .try_fold(1u64, |acc, r| acc.checked_mul(r.count()))
        .filter(|&t| t <= MAX_INSTANCES)
        .ok_or_else(|| Error::InvalidArgument(format!("more than {MAX_INSTANCES} instances")))?;
    let results = assignments(family.params(), &ordered)
        .par_iter()
        .map(|a| verify_instance(family, a))
        .collect::<Result<Vec<_>>>()?;
    let passed = results.iter().filter(|r| r.passed()).count() as u64;
    Ok(FamilyReport {
        family: family.name().to_string(),
        ranges: ordered,
        instances: total,
        passed,
        failures: results.into_iter().filter(|r| !r.passed()).collect(),
        tool_version: crate::TOOL_VERSION.to_string(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{find_family, parse_family, registry};

    #[test]
    fn registry_defaults_all_pass() {
        for fam in registry() {
            let rep = verify_range(&fam, None).unwrap();
            assert_eq!(rep.passed, rep.instances, "{}: {:?}", fam.name(), rep.failures);
            assert!(rep.failures.is_empty());
        }
    }

    #[test]
    fn failures_are_reported() {
        // x^2 - a x + 1 has complex roots for |a| < 2
        let fam = parse_family("name: f\nparams: a\npoly: x^2 - a*x + 1").unwrap();
        let r = [ParamRange::new("a", -3, 3).unwrap()];
        let rep = verify_range(&fam, Some(&r)).unwrap();
        assert_eq!(rep.instances, 7);
        let bad: Vec<String> = rep.failures.iter().map(|f| f.assignment["a"].to_string()).collect();
        // a = +-2 gives a double root, still real
        assert_eq!(bad, ["-1", "0", "1"]);
    }

    #[test]
    fn two_parameter_order_is_lexicographic() {
        let fam = parse_family("name: g\nparams: a, b\npoly: x^3 - a*x^2 - b*x - 1").unwrap();
        let r = [ParamRange::new("a", 0, 2).unwrap(), ParamRange::new("b", 0, 2).unwrap()];
        let rep = verify_range(&fam, Some(&r)).unwrap();
        assert_eq!(rep.instances, 9);
        let keys: Vec<(String, String)> = rep
            .failures
            .iter()
            .map(|f| (f.assignment["a"].to_string(), f.assignment["b"].to_string()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_by_key(|(a, b)| (a.parse::<i64>().unwrap(), b.parse::<i64>().unwrap()));
        assert_eq!(keys, sorted);
    }

    #[test]
    fn range_errors() {
        let fam = find_family("mruv").unwrap();
        let r = [ParamRange::new("b", 0, 2).unwrap()];
        assert!(matches!(verify_range(&fam, Some(&r)), Err(Error::MissingParameter(_))));
    }
}
