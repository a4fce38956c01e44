//! JSON encodings shared by the CLI and certificate files.
//!
//! Families: `{"n": 5, "sets": [[1], [1, 2]]}` or the compact
//! `{"n": 5, "hex": ["1", "3"]}`. Output always uses `sets`.

use num_bigint::BigInt;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::{SetFamily, SubsetMask};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sets: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hex: Option<Vec<String>>,
}

impl TryFrom<FamilyJson> for SetFamily {
    type Error = Error;

    fn try_from(j: FamilyJson) -> Result<Self> {
        match (j.sets, j.hex) {
            (Some(sets), None) => SetFamily::from_sets(j.n, &sets),
            (None, Some(hex)) => {
                let masks = hex
                    .iter()
                    .map(|h| SubsetMask::from_hex(j.n, h))
                    .collect::<Result<Vec<_>>>()?;
                SetFamily::new(j.n, masks)
            }
            (None, None) => Err(Error::Parse("family needs \"sets\" or \"hex\"".into())),
            (Some(_), Some(_)) => Err(Error::Parse(
                "family must not carry both \"sets\" and \"hex\"".into(),
            )),
        }
    }
}

impl From<SetFamily> for FamilyJson {
    fn from(f: SetFamily) -> Self {
        let sets = f
            .to_sets()
            .into_iter()
            .map(|s| s.into_iter().map(|x| x as i64).collect())
            .collect();
        FamilyJson { n: f.n(), sets: Some(sets), hex: None }
    }
}

impl SetFamily {
    /// Compact hex encoding of the same family.
    pub fn to_hex_json(&self) -> FamilyJson {
        FamilyJson {
            n: self.n(),
            sets: None,
            hex: Some(self.iter().map(|m| m.to_hex()).collect()),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("family serialization cannot fail")
    }
}

/// Serde adapter: integers written as decimal strings, read from either
/// strings or JSON numbers.
pub mod decimal {
    use super::*;
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            S(String),
            I(i64),
            U(u64),
        }
        let text = match Raw::deserialize(d)? {
            Raw::S(s) => s,
            Raw::I(i) => i.to_string(),
            Raw::U(u) => u.to_string(),
        };
        text.trim().parse::<T>().map_err(de::Error::custom)
    }
}

/// Like [`decimal`] but for `BTreeMap<String, i64>` parameter maps.
pub mod decimal_map {
    use super::*;
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(m: &BTreeMap<String, i64>, s: S) -> Result<S::Ok, S::Error> {
        let as_text: BTreeMap<&str, String> =
            m.iter().map(|(k, v)| (k.as_str(), v.to_string())).collect();
        as_text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, i64>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super::decimal")] i64);
        let raw: BTreeMap<String, Wrap> = BTreeMap::deserialize(d)?;
        Ok(raw.into_iter().map(|(k, Wrap(v))| (k, v)).collect())
    }
}

/// A single set is written as its sorted 1-based elements.
impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.elements())
    }
}

impl<'de> Deserialize<'de> for SubsetMask {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let elems: Vec<i64> = Vec::deserialize(d)?;
        SubsetMask::try_from_elements(64, &elems).map_err(de::Error::custom)
    }
}

pub fn bigint_string(v: &BigInt) -> String {
    v.to_str_radix(10)
}
