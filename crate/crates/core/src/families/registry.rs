use super::{parse_family, ParamFamily};
use crate::error::{Error, Result};

struct Entry {
    source: &'static str,
    provenance: &'static str,
}

const ENTRIES: &[Entry] = &[
    Entry {
        source: "name: mruv_quadratic\nparams: a\npoly: x^2 - 2*a*x - 1\nrange a: -100..100",
        provenance: "real quadratic units a + sqrt(a^2 + 1)",
    },
    Entry {
        source: "name: shanks_cubic\nparams: a\npoly: x^3 - a*x^2 - (a + 3)*x - 1\nrange a: -1..50",
        provenance: "Shanks simplest cubic fields",
    },
    Entry {
        source: "name: kishi_cubic\nparams: n\n\
                 poly: x^3 - n*(n^2 + n + 3)*(n^2 + 2)*x^2 - (n^3 + 2*n^2 + 3*n + 3)*x - 1\n\
                 range n: -20..20",
        provenance: "Kishi cyclic cubic family",
    },
    Entry {
        source: "name: gras_quartic\nparams: t\npoly: x^4 - t*x^3 - 6*x^2 + t*x + 1\nrange t: 4..60",
        provenance: "Gras simplest quartic fields",
    },
    Entry {
        source: "name: lehmer_quintic\nparams: a\n\
                 poly: x^5 + a^2*x^4 - (2*a^3 + 6*a^2 + 10*a + 10)*x^3 \
                 + (a^4 + 5*a^3 + 11*a^2 + 15*a + 5)*x^2 + (a^3 + 4*a^2 + 10*a + 10)*x + 1\n\
                 range a: -20..20",
        provenance: "Emma Lehmer quintic family",
    },
    Entry {
        source: "name: gras_sextic\nparams: a\n\
                 poly: x^6 - 2*(a - 1)*x^5 - 5*(a + 2)*x^4 - 20*x^3 + 5*(a - 1)*x^2 + (2*a + 4)*x + 1\n\
                 range a: 7..60",
        provenance: "Gras simplest sextic fields",
    },
];

/// The built-in families, in a fixed order.
pub fn registry() -> Vec<ParamFamily> {
    ENTRIES
        .iter()
        .map(|e| {
            let fam = parse_family(e.source).expect("built-in family parses");
            ParamFamily::new(fam.name(), fam.poly().clone(), fam.default_range().to_vec(), e.provenance)
                .expect("built-in family satisfies the hypotheses")
        })
        .collect()
}

/// Looks a family up by its full name or by the unique prefix before `_`
/// (`mruv`, `shanks`, `kishi`, `lehmer`).
pub fn find_family(name: &str) -> Result<ParamFamily> {
    let all = registry();
    if let Some(f) = all.iter().find(|f| f.name() == name) {
        return Ok(f.clone());
    }
    let matches: Vec<&ParamFamily> = all
        .iter()
        .filter(|f| f.name().split('_').next() == Some(name))
        .collect();
    match matches.as_slice() {
        [f] => Ok((*f).clone()),
        _ => Err(Error::InvalidArgument(format!(
            "unknown family `{name}`; known: {}",
            all.iter().map(|f| f.name()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::IntPoly;
    use num_bigint::BigInt;

    fn ip(v: &[i64]) -> IntPoly {
        IntPoly::from_i64s(v)
    }

    #[test]
    fn registry_shape() {
        let r = registry();
        let names: Vec<&str> = r.iter().map(|f| f.name()).collect();
        assert_eq!(
            names,
            ["mruv_quadratic", "shanks_cubic", "kishi_cubic", "gras_quartic", "lehmer_quintic", "gras_sextic"]
        );
        let degrees: Vec<usize> = r.iter().map(|f| f.degree()).collect();
        assert_eq!(degrees, [2, 3, 3, 4, 5, 6]);
        assert_eq!(find_family("shanks").unwrap().name(), "shanks_cubic");
        assert_eq!(find_family("gras_sextic").unwrap().degree(), 6);
        assert!(find_family("gras").is_err());
    }

    #[test]
    fn instances_match_hand_expansion() {
        assert_eq!(find_family("mruv").unwrap().at(3).unwrap(), ip(&[-1, -6, 1]));
        assert_eq!(find_family("shanks").unwrap().at(1).unwrap(), ip(&[-1, -4, -1, 1]));
        // n = 1: n(n^2+n+3)(n^2+2) = 15, n^3+2n^2+3n+3 = 9
        assert_eq!(find_family("kishi").unwrap().at(1).unwrap(), ip(&[-1, -9, -15, 1]));
        assert_eq!(find_family("gras_quartic").unwrap().at(5).unwrap(), ip(&[1, 5, -6, -5, 1]));
        // a = 1: a^2 = 1, 2+6+10+10 = 28, 1+5+11+15+5 = 37, 1+4+10+10 = 25
        assert_eq!(
            find_family("lehmer").unwrap().at(1).unwrap(),
            ip(&[1, 25, 37, -28, 1, 1])
        );
        // a = 7: -2*6 = -12, -5*9 = -45, 5*6 = 30, 18
        assert_eq!(
            find_family("gras_sextic").unwrap().at(7).unwrap(),
            ip(&[1, 18, 30, -20, -45, -12, 1])
        );
        assert_eq!(
            find_family("lehmer").unwrap().at(BigInt::from(0)).unwrap(),
            ip(&[1, 10, 5, -10, 0, 1])
        );
    }
}
