//! Ring presentations and their JSON form.
//!
//! ```json
//! {"kind": "zmod", "n": 16}
//! {"kind": "gf", "p": 2, "k": 2}
//! {"kind": "product", "factors": [{"kind": "zmod", "n": 2}, {"kind": "zmod", "n": 3}]}
//! {"kind": "quotient", "base": 4, "variables": ["x"], "relations": ["2x", "x^2"], "order": 8}
//! ```
//!
//! Every form accepts an optional `"name"`; `"order"` on a quotient is the
//! expected element count and is checked when the ring is built.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RingSpec {
    Zmod {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Gf {
        p: usize,
        k: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Product {
        factors: Vec<RingSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Quotient {
        base: usize,
        variables: Vec<String>,
        relations: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        order: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
}

impl RingSpec {
    pub fn zmod(n: usize) -> RingSpec {
        RingSpec::Zmod { n, name: None }
    }

    pub fn gf(p: usize, k: u32) -> RingSpec {
        RingSpec::Gf { p, k, name: None }
    }

    pub fn product(factors: Vec<RingSpec>) -> RingSpec {
        RingSpec::Product {
            factors,
            name: None,
        }
    }

    pub fn quotient(base: usize, variables: &[&str], relations: &[&str]) -> RingSpec {
        RingSpec::Quotient {
            base,
            variables: variables.iter().map(|s| s.to_string()).collect(),
            relations: relations.iter().map(|s| s.to_string()).collect(),
            order: None,
            name: None,
        }
    }

    /// Attaches an expected order to a quotient presentation.
    pub fn expecting(mut self, expected: usize) -> RingSpec {
        if let RingSpec::Quotient { order, .. } = &mut self {
            *order = Some(expected);
        }
        self
    }

    pub fn named(mut self, new_name: impl Into<String>) -> RingSpec {
        let slot = match &mut self {
            RingSpec::Zmod { name, .. }
            | RingSpec::Gf { name, .. }
            | RingSpec::Product { name, .. }
            | RingSpec::Quotient { name, .. } => name,
        };
        *slot = Some(new_name.into());
        self
    }

    /// Display name: the explicit name if one was given, otherwise one
    /// derived from the presentation.
    pub fn display_name(&self) -> String {
        match self {
            RingSpec::Zmod { name: Some(n), .. }
            | RingSpec::Gf { name: Some(n), .. }
            | RingSpec::Product { name: Some(n), .. }
            | RingSpec::Quotient { name: Some(n), .. } => n.clone(),
            RingSpec::Zmod { n, .. } => format!("Z_{n}"),
            RingSpec::Gf { p, k, .. } => {
                if *k == 1 {
                    format!("Z_{p}")
                } else {
                    format!("F_{}", p.pow(*k))
                }
            }
            RingSpec::Product { factors, .. } => factors
                .iter()
                .map(RingSpec::display_name)
                .collect::<Vec<_>>()
                .join("×"),
            RingSpec::Quotient {
                base,
                variables,
                relations,
                ..
            } => format!(
                "Z_{base}[{}]/({})",
                variables.join(","),
                relations.join(",")
            ),
        }
    }

    pub fn from_json(text: &str) -> Result<RingSpec> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring specs always serialize")
    }
}
