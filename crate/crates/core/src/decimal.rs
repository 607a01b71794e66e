//! Serde helpers writing arbitrary-precision integers as decimal strings.

use num_bigint::BigInt;
use serde::Serializer;

pub fn one<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn many<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn assignment<S: Serializer>(
    v: &std::collections::BTreeMap<String, BigInt>,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_map(v.iter().map(|(k, x)| (k, x.to_string())))
}
