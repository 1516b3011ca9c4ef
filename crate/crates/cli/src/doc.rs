//! Input and report document schemas.
//!
//! Input documents are JSON: complex vector entries are `[re, im]` pairs,
//! planes are two-element arrays of real spanning vectors. Reports serialize
//! with a fixed field order and sorted maps so identical inputs produce
//! byte-identical output; floats render in their shortest round-trip form.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// Map deserializer that rejects duplicate names instead of silently
/// keeping the last occurrence.
fn unique_name_map<'de, D, V>(deserializer: D) -> Result<BTreeMap<String, V>, D::Error>
where
    D: Deserializer<'de>,
    V: Deserialize<'de>,
{
    struct UniqueVisitor<V>(PhantomData<V>);

    impl<'de, V: Deserialize<'de>> Visitor<'de> for UniqueVisitor<V> {
        type Value = BTreeMap<String, V>;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a map with unique names")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
            let mut out = BTreeMap::new();
            while let Some((name, value)) = access.next_entry::<String, V>()? {
                if out.insert(name.clone(), value).is_some() {
                    return Err(serde::de::Error::custom(format!("duplicate name '{name}'")));
                }
            }
            Ok(out)
        }
    }

    deserializer.deserialize_map(UniqueVisitor(PhantomData))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleUnit {
    Radians,
    Degrees,
}

impl AngleUnit {
    pub fn as_str(self) -> &'static str {
        match self {
            AngleUnit::Radians => "radians",
            AngleUnit::Degrees => "degrees",
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputOptions {
    pub tolerance: Option<f64>,
    #[serde(rename = "angle-unit")]
    pub angle_unit: Option<AngleUnit>,
}

/// Parsed input document: named complex vectors, optional named planes, and
/// default options that command-line flags override.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, deserialize_with = "unique_name_map")]
    pub vectors: BTreeMap<String, Vec<[f64; 2]>>,
    #[serde(default, deserialize_with = "unique_name_map")]
    pub planes: BTreeMap<String, [Vec<f64>; 2]>,
    #[serde(default)]
    pub options: InputOptions,
}

/// An angle that may be undefined; the null marker always travels with a
/// reason string so singular mathematics is distinguishable from missing
/// data.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MaybeAngle {
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
}

impl MaybeAngle {
    pub fn defined(value: f64) -> Self {
        Self {
            value: Some(value),
            reason: None,
        }
    }

    pub fn undefined(reason: &'static str) -> Self {
        Self {
            value: None,
            reason: Some(reason),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlaneClassDoc {
    pub tag: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kahler_angle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
}

/// Report for `hermangle angles`.
#[derive(Debug, Serialize)]
pub struct AnglesDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub pair: [String; 2],
    pub unit: &'static str,
    pub tolerance: f64,
    pub unoriented: bool,
    pub euclidean: f64,
    pub complex_cosine: ComplexValue,
    pub rho: f64,
    pub hermitian: f64,
    pub pseudo: MaybeAngle,
    pub kahler: MaybeAngle,
    pub plane_class: PlaneClassDoc,
    pub residuals: BTreeMap<&'static str, f64>,
}

/// Report for the `hermangle subspace` subcommands. Fields irrelevant to a
/// subcommand are omitted.
#[derive(Debug, Serialize)]
pub struct SubspaceDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub subcommand: &'static str,
    pub planes: Vec<String>,
    pub unit: &'static str,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_span_u: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_span_v: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kahler_angle: Option<f64>,
    pub alpha_min: f64,
    pub alpha_max: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isoclinic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub angle: Option<MaybeAngle>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CheckDoc {
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Report for `hermangle selftest`.
#[derive(Debug, Serialize)]
pub struct SelftestDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub samples: u64,
    pub seed: u64,
    pub checks: BTreeMap<&'static str, CheckDoc>,
    pub pass: bool,
}
