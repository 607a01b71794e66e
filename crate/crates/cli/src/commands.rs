use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;
use trw_core::families::{
    build_witness, cyclic_cubic_check, find_family, gen_quartic_2param, gen_unit_family,
    parse_family, parse_int_poly, parse_int_poly_in, parse_param_poly, registry, verify_range,
    ParamFamily, ParamRange,
};
use trw_core::intpoly::{discriminant, IntPoly};
use trw_core::realroots::{count_real_roots, sturm_chain, OpenInterval};
use trw_core::symfun::{power_sums_from_coeffs, q_m_param, root_power_transform};
use trw_core::waring::{four_squares, kamke_represent, kamke_scan, normalize_poly, phi_w_set, Containment};

use crate::certificate::Outcome;
use crate::{Command, FamilySource, Jobs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] trw_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(trw_core::Error::Postcondition(_))
            | CliError::Core(trw_core::Error::InternalDivisibility(_)) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::ListFamilies => "list-families",
            Command::Verify { .. } => "verify",
            Command::Witness { .. } => "witness",
            Command::Powersum { .. } => "powersum",
            Command::Rootpower { .. } => "rootpower",
            Command::Sturm { .. } => "sturm",
            Command::CountRoots { .. } => "count-roots",
            Command::Discriminant { .. } => "discriminant",
            Command::CyclicCubic { .. } => "cyclic-cubic",
            Command::GenQuartic2 { .. } => "gen-quartic2",
            Command::GenUnitFamily { .. } => "gen-unit-family",
            Command::Foursquares { .. } => "foursquares",
            Command::Kamke { .. } => "kamke",
            Command::KamkeScan { .. } => "kamke-scan",
            Command::Phiw { .. } => "phiw",
            Command::Parse { .. } => "parse",
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn poly_arg(src: &str) -> Result<IntPoly> {
    Ok(parse_int_poly(src)?)
}

fn big_arg(name: &str, src: &str) -> Result<BigInt> {
    src.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("--{name}: `{src}` is not an integer")))
}

fn rational_arg(src: &str) -> Result<BigRational> {
    let bad = || CliError::Usage(format!("`{src}` is not an integer or p/q"));
    match src.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(src.trim().parse().map_err(|_| bad())?)),
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_family(family: Option<&str>, file: Option<&Path>) -> Result<ParamFamily> {
    match (family, file) {
        (Some(name), None) => Ok(find_family(name)?),
        (None, Some(path)) => Ok(parse_family(&read_file(path)?)?),
        _ => Err(CliError::Usage("give exactly one of --family or --file".into())),
    }
}

fn load_source(src: &FamilySource) -> Result<ParamFamily> {
    load_family(src.family.as_deref(), src.file.as_deref())
}

fn parse_range(src: &str) -> Result<ParamRange> {
    let bad = || CliError::Usage(format!("range `{src}` is not of the form name=lo..hi"));
    let (name, span) = src.split_once('=').ok_or_else(bad)?;
    let (lo, hi) = span.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    Ok(ParamRange::new(name.trim(), lo, hi)?)
}

fn with_jobs<T: Send>(jobs: Jobs, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", jobs.jobs)))?;
    Ok(pool.install(f))
}

fn family_json(fam: &ParamFamily) -> Value {
    json!({
        "name": fam.name(),
        "params": fam.params(),
        "degree": fam.degree(),
        "poly": to_json(fam.poly()),
        "display": fam.poly().to_string(),
        "default_range": to_json(&fam.default_range()),
        "provenance": fam.provenance(),
    })
}

fn range_text(ranges: &[ParamRange]) -> String {
    ranges
        .iter()
        .map(|r| format!("{}={}..{}", r.name, r.lo, r.hi))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn run(cmd: &Command) -> Result<Outcome> {
    let mut text = String::new();
    let mut failures = Vec::new();
    let (inputs, results) = match cmd {
        Command::ListFamilies => {
            let fams = registry();
            for f in &fams {
                writeln!(
                    text,
                    "{:<16} deg {}  {}  [{}]",
                    f.name(),
                    f.degree(),
                    f.poly(),
                    range_text(f.default_range())
                )
                .unwrap();
            }
            (json!({}), json!({ "families": fams.iter().map(family_json).collect::<Vec<_>>() }))
        }
        Command::Verify { source, ranges, jobs } => {
            let fam = load_source(source)?;
            let ranges = ranges.iter().map(|r| parse_range(r)).collect::<Result<Vec<_>>>()?;
            let given = (!ranges.is_empty()).then_some(ranges.as_slice());
            let report = with_jobs(*jobs, || verify_range(&fam, given))??;
            writeln!(
                text,
                "{}: {} instances verified over {}, {} passed, {} failed",
                report.family,
                report.instances,
                range_text(&report.ranges),
                report.passed,
                report.failures.len()
            )
            .unwrap();
            for f in &report.failures {
                writeln!(
                    text,
                    "  FAIL {:?}: totally_real={} unit_constant={} degree_ok={}",
                    f.assignment, f.totally_real, f.unit_constant, f.degree_ok
                )
                .unwrap();
            }
            failures.extend(report.failures.iter().map(to_json));
            (
                json!({ "family": family_json(&fam), "ranges": to_json(&report.ranges) }),
                json!({ "instances": report.instances, "passed": report.passed }),
            )
        }
        Command::Witness { source, torsion_half_order } => {
            let fam = load_source(source)?;
            let w = build_witness(&fam, *torsion_half_order)?;
            writeln!(text, "family {}: k = {}, exponent 2Nk = {}", w.family, w.k, w.exponent).unwrap();
            writeln!(text, "witness Q_{} = {}", w.exponent, w.witness).unwrap();
            for s in &w.samples {
                writeln!(text, "  at {} = {}: {} (trace {})", fam.params()[0], s.param, s.value, s.trace).unwrap();
            }
            (
                json!({ "family": family_json(&fam), "torsion_half_order": torsion_half_order }),
                json!({ "witness": to_json(&w), "display": w.witness.to_string() }),
            )
        }
        Command::Powersum { poly, family, file, m } => match poly {
            Some(p) => {
                let f = poly_arg(p)?;
                let q = power_sums_from_coeffs(&f, *m)?;
                for (k, v) in q.values().iter().enumerate() {
                    writeln!(text, "q_{} = {v}", k + 1).unwrap();
                }
                let strs: Vec<String> = q.values().iter().map(|v| v.to_string()).collect();
                (json!({ "poly": to_json(&f), "m": m }), json!({ "power_sums": strs }))
            }
            None => {
                let fam = load_family(family.as_deref(), file.as_deref())?;
                let q = q_m_param(fam.poly(), *m)?;
                writeln!(text, "Q_{m} = {q}").unwrap();
                (
                    json!({ "family": family_json(&fam), "m": m }),
                    json!({ "q_m": to_json(&q), "display": q.to_string() }),
                )
            }
        },
        Command::Rootpower { poly, n } => {
            let f = poly_arg(poly)?;
            let g = root_power_transform(&f, *n)?;
            writeln!(text, "{g}").unwrap();
            (json!({ "poly": to_json(&f), "n": n }), json!({ "transform": to_json(&g), "display": g.to_string() }))
        }
        Command::Sturm { poly } => {
            let f = poly_arg(poly)?;
            let chain = sturm_chain(&f)?;
            for (i, p) in chain.members().iter().enumerate() {
                writeln!(text, "S_{i} = {p}").unwrap();
            }
            writeln!(text, "distinct real roots: {}", chain.count_all()).unwrap();
            (
                json!({ "poly": to_json(&f) }),
                json!({ "chain": to_json(&chain.members()), "distinct_real_roots": chain.count_all() }),
            )
        }
        Command::CountRoots { poly, lo, hi } => {
            let f = poly_arg(poly)?;
            let iv = match (lo, hi) {
                (Some(lo), Some(hi)) => Some(OpenInterval::new(rational_arg(lo)?, rational_arg(hi)?)?),
                _ => None,
            };
            let n = count_real_roots(&f, iv.as_ref())?;
            match &iv {
                Some(iv) => writeln!(text, "{n} distinct real roots in ({}, {})", iv.lo, iv.hi).unwrap(),
                None => writeln!(text, "{n} distinct real roots").unwrap(),
            }
            let interval = iv.as_ref().map(|iv| json!([iv.lo.to_string(), iv.hi.to_string()]));
            (json!({ "poly": to_json(&f), "interval": interval }), json!({ "count": n }))
        }
        Command::Discriminant { poly } => {
            let f = poly_arg(poly)?;
            let d = discriminant(&f)?;
            writeln!(text, "{d}").unwrap();
            (json!({ "poly": to_json(&f) }), json!({ "discriminant": d.to_string() }))
        }
        Command::CyclicCubic { poly } => {
            let f = poly_arg(poly)?;
            let ok = cyclic_cubic_check(&f)?;
            let d = discriminant(&f)?;
            writeln!(text, "discriminant {d}: {}", if ok { "positive square" } else { "not a positive square" }).unwrap();
            if !ok {
                failures.push(json!({ "check": "square_discriminant", "discriminant": d.to_string() }));
            }
            (json!({ "poly": to_json(&f) }), json!({ "discriminant": d.to_string(), "square_discriminant": ok }))
        }
        Command::GenQuartic2 { a, b, d } => {
            let (a, b, d) = (big_arg("a", a)?, big_arg("b", b)?, big_arg("d", d)?);
            let f = gen_quartic_2param(&a, &b, &d)?;
            writeln!(text, "{f}").unwrap();
            (
                json!({ "a": a.to_string(), "b": b.to_string(), "d": d.to_string() }),
                json!({ "poly": to_json(&f), "display": f.to_string() }),
            )
        }
        Command::GenUnitFamily { h, alpha } => {
            let hp = parse_param_poly(h, &["t1".to_string(), "t2".to_string()])?;
            let al = parse_int_poly_in(alpha, "y")?;
            let fam = gen_unit_family(&hp, &al)?;
            writeln!(text, "{}", fam.poly()).unwrap();
            (
                json!({ "h": to_json(&hp), "alpha": to_json(&al) }),
                json!({ "family": family_json(&fam) }),
            )
        }
        Command::Foursquares { m } => {
            let fs = four_squares(*m);
            let [a, b, c, d] = fs.parts;
            writeln!(text, "{m} = {a}^2 + {b}^2 + {c}^2 + {d}^2").unwrap();
            (json!({ "m": m }), json!({ "parts": fs.parts }))
        }
        Command::Kamke { poly, m, r, normalize } => {
            let (f, norm) = kamke_poly(poly, *normalize, &mut text)?;
            let rep = kamke_represent(&f, *m, *r)?;
            match &rep {
                Some(rep) => writeln!(
                    text,
                    "{m} = {} + {} (s1 = {}, s2 = {})",
                    if rep.terms.is_empty() {
                        "0".to_string()
                    } else {
                        rep.terms.iter().map(|a| format!("f({a})")).collect::<Vec<_>>().join(" + ")
                    },
                    rep.s2,
                    rep.terms.len(),
                    rep.s2
                )
                .unwrap(),
                None => writeln!(text, "no representation of {m} with s1 + s2 <= {r}").unwrap(),
            }
            (
                json!({ "poly": poly_json(poly)?, "m": m, "r": r, "normalize": normalize }),
                json!({ "normalized": norm, "representation": to_json(&rep) }),
            )
        }
        Command::KamkeScan { poly, m_max, r_max, normalize, jobs } => {
            let (f, norm) = kamke_poly(poly, *normalize, &mut text)?;
            let scan = with_jobs(*jobs, || kamke_scan(&f, *m_max, *r_max))??;
            match (scan.max_r, scan.argmax) {
                (Some(mx), Some(at)) => writeln!(text, "overall maximum r = {mx}, first attained at m = {at}").unwrap(),
                _ => writeln!(text, "no m in range is representable").unwrap(),
            }
            writeln!(text, "gaps (no r <= {r_max}): {:?}", scan.gaps).unwrap();
            (
                json!({ "poly": poly_json(poly)?, "m_max": m_max, "r_max": r_max, "normalize": normalize }),
                json!({ "normalized": norm, "scan": to_json(&scan) }),
            )
        }
        Command::Phiw { a, b, x_max } => {
            let rep = phi_w_set(*a, *b, *x_max)?;
            let set = rep.set();
            writeln!(
                text,
                "{{{}}}",
                set.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            )
            .unwrap();
            writeln!(text, "containment chain: {}", rep.containment).unwrap();
            if rep.containment == Containment::Violated {
                failures.push(json!({ "check": "containment_chain", "lower": rep.lower, "upper": rep.upper }));
            }
            (json!({ "a": a, "b": b, "x_max": x_max }), json!({ "set": set, "report": to_json(&rep) }))
        }
        Command::Parse { file } => {
            let fam = parse_family(&read_file(file)?)?;
            writeln!(
                text,
                "{}: degree {} in x, parameters {:?}, ok\n{}",
                fam.name(),
                fam.degree(),
                fam.params(),
                fam.poly()
            )
            .unwrap();
            (json!({ "file": file.display().to_string() }), json!({ "family": family_json(&fam) }))
        }
    };
    Ok(Outcome {
        inputs,
        results,
        failures,
        text,
    })
}

fn poly_json(src: &str) -> Result<Value> {
    Ok(to_json(&poly_arg(src)?))
}

fn kamke_poly(src: &str, normalize: Option<u64>, text: &mut String) -> Result<(IntPoly, Value)> {
    let f = poly_arg(src)?;
    match normalize {
        None => Ok((f, Value::Null)),
        Some(n0) => {
            let n = normalize_poly(&f, n0)?;
            writeln!(
                text,
                "normalized: {}f(x + {}) = {}",
                if n.negated { "-" } else { "" },
                n.shift,
                n.poly
            )
            .unwrap();
            Ok((n.poly.clone(), to_json(&n)))
        }
    }
}
