//! Serde helpers for the wire formats: rationals as `"p/q"` strings,
//! large integers as decimal strings.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Rational;

/// Version tag written under the top-level `"schema"` key.
pub const SCHEMA: &str = "hurwitz-family/1";

pub fn u128_as_string<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
    v.to_string().serialize(s)
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        r.to_string().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        crate::algebra::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| crate::algebra::parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod opt_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        r.as_ref().map(ToString::to_string).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| crate::algebra::parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}
