//! Named ring presentations used throughout the classification checks.
//!
//! Three lists of small rings are transcribed with their relations verbatim
//! (redundant generators included); the expected order stored with each entry
//! guards against transcription slips. `F_q` coefficient rings are written as
//! `Z_p[a]/(f(a))` with the moduli from [`build`](super::build). The list is
//! completed by `Z_n` for `2 <= n <= 32`, a handful of finite fields and the
//! four-fold Boolean product.

use std::sync::OnceLock;

use serde::Serialize;

use super::build::FIELD_MODULI;
use super::RingSpec;
use crate::error::{Error, Result};

/// Which list an entry comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CatalogSource {
    /// Local rings whose zero-divisor graph is planar (29 presentations).
    PlanarLocal,
    /// Local rings whose zero-divisor graph has genus one (18 presentations).
    GenusOneLocal,
    /// Rings with two maximal ideals and planar zero-divisor graph
    /// (15 presentations, two of them families over `F_q`).
    PlanarNonLocal,
    Cyclic,
    Extra,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: RingSpec,
    pub order: usize,
    pub source: CatalogSource,
}

/// Values of `q` used to instantiate the `Z_2×F_q` and `Z_3×F_q` families.
pub const FAMILY_Q: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

fn field_spec(q: usize) -> RingSpec {
    FIELD_MODULI
        .iter()
        .find(|(p, k, _)| p.pow(*k) == q)
        .map(|(p, k, _)| RingSpec::gf(*p, *k))
        .unwrap_or_else(|| RingSpec::zmod(q))
}

fn field_name(q: usize) -> String {
    if FIELD_MODULI.iter().any(|(p, k, _)| p.pow(*k) == q) {
        format!("F_{q}")
    } else {
        format!("Z_{q}")
    }
}

/// `(name, base, variables, relations, order)` for the polynomial quotients.
type QuotientRow = (
    &'static str,
    usize,
    &'static [&'static str],
    &'static [&'static str],
    usize,
);

const PLANAR_LOCAL_QUOTIENTS: &[QuotientRow] = &[
    ("Z_2[x]/(x^2)", 2, &["x"], &["x^2"], 4),
    ("Z_2[x]/(x^3)", 2, &["x"], &["x^3"], 8),
    ("Z_2[x]/(x^4)", 2, &["x"], &["x^4"], 16),
    (
        "Z_2[x,y]/(x^2,xy,y^2)",
        2,
        &["x", "y"],
        &["x^2", "xy", "y^2"],
        8,
    ),
    ("Z_2[x,y]/(x^2,y^2)", 2, &["x", "y"], &["x^2", "y^2"], 16),
    (
        "Z_2[x,y]/(x^3,xy,y^2-x^2)",
        2,
        &["x", "y"],
        &["x^3", "xy", "y^2-x^2"],
        16,
    ),
    ("F_4[x]/(x^2)", 2, &["a", "x"], &["a^2+a+1", "x^2"], 16),
    ("Z_3[x]/(x^2)", 3, &["x"], &["x^2"], 9),
    ("Z_3[x]/(x^3)", 3, &["x"], &["x^3"], 27),
    ("Z_4[x]/(x^2)", 4, &["x"], &["x^2"], 16),
    ("Z_4[x]/(x^2+x+1)", 4, &["x"], &["x^2+x+1"], 16),
    ("Z_4[x]/(2x,x^2)", 4, &["x"], &["2x", "x^2"], 8),
    ("Z_4[x]/(x^2-2,x^4)", 4, &["x"], &["x^2-2", "x^4"], 16),
    ("Z_4[x]/(x^3-2,x^4)", 4, &["x"], &["x^3-2", "x^4"], 16),
    ("Z_4[x]/(x^2-2,x^3)", 4, &["x"], &["x^2-2", "x^3"], 8),
    ("Z_4[x]/(x^3,x^2-2x)", 4, &["x"], &["x^3", "x^2-2x"], 16),
    (
        "Z_4[x]/(x^3+x^2-2,x^4)",
        4,
        &["x"],
        &["x^3+x^2-2", "x^4"],
        16,
    ),
    (
        "Z_4[x,y]/(x^2,y^2,xy-2)",
        4,
        &["x", "y"],
        &["x^2", "y^2", "xy-2"],
        16,
    ),
    (
        "Z_4[x,y]/(x^3,x^2-2,xy,y^2-2)",
        4,
        &["x", "y"],
        &["x^3", "x^2-2", "xy", "y^2-2"],
        16,
    ),
    ("Z_5[x]/(x^2)", 5, &["x"], &["x^2"], 25),
    ("Z_8[x]/(x^2-4,2x)", 8, &["x"], &["x^2-4", "2x"], 16),
    ("Z_9[x]/(x^2-3,x^3)", 9, &["x"], &["x^2-3", "x^3"], 27),
    ("Z_9[x]/(x^2+3,x^3)", 9, &["x"], &["x^2+3", "x^3"], 27),
];

const GENUS_ONE_LOCAL_QUOTIENTS: &[QuotientRow] = &[
    ("Z_2[x]/(x^5)", 2, &["x"], &["x^5"], 32),
    ("F_8[x]/(x^2)", 2, &["a", "x"], &["a^3+a+1", "x^2"], 64),
    (
        "Z_2[x,y]/(x^3,xy,y^2)",
        2,
        &["x", "y"],
        &["x^3", "xy", "y^2"],
        16,
    ),
    (
        "Z_2[x,y,z]/(x,y,z)^2",
        2,
        &["x", "y", "z"],
        &["x^2", "y^2", "z^2", "xy", "xz", "yz"],
        16,
    ),
    ("Z_4[x]/(x^3+x+1)", 4, &["x"], &["x^3+x+1"], 64),
    ("Z_4[x]/(x^3-x+1)", 4, &["x"], &["x^3-x+1"], 64),
    ("Z_4[x]/(x^3-2,x^5)", 4, &["x"], &["x^3-2", "x^5"], 32),
    ("Z_4[x]/(x^4-2,x^5)", 4, &["x"], &["x^4-2", "x^5"], 32),
    (
        "Z_4[x]/(x^4+x^3-2,x^5)",
        4,
        &["x"],
        &["x^4+x^3-2", "x^5"],
        32,
    ),
    ("Z_4[x]/(x^3,2x)", 4, &["x"], &["x^3", "2x"], 16),
    (
        "Z_4[x,y]/(x^3,x^2-2,xy,y^2)",
        4,
        &["x", "y"],
        &["x^3", "x^2-2", "xy", "y^2"],
        16,
    ),
    (
        "Z_4[x,y]/(2x,2y,x^2,xy,y^2)",
        4,
        &["x", "y"],
        &["2x", "2y", "x^2", "xy", "y^2"],
        16,
    ),
    ("Z_7[x]/(x^2)", 7, &["x"], &["x^2"], 49),
    ("Z_8[x]/(x^2,2x)", 8, &["x"], &["x^2", "2x"], 16),
    ("Z_8[x]/(x^2-2,x^5)", 8, &["x"], &["x^2-2", "x^5"], 32),
    ("Z_8[x]/(3x^2-2,x^5)", 8, &["x"], &["3x^2-2", "x^5"], 32),
];

fn quotient_entry(row: &QuotientRow, source: CatalogSource) -> CatalogEntry {
    let (name, base, vars, rels, order) = *row;
    CatalogEntry {
        name: name.to_string(),
        spec: RingSpec::quotient(base, vars, rels)
            .expecting(order)
            .named(name),
        order,
        source,
    }
}

fn simple(name: &str, spec: RingSpec, order: usize, source: CatalogSource) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        spec: spec.named(name),
        order,
        source,
    }
}

fn zmod_entry(n: usize, source: CatalogSource) -> CatalogEntry {
    simple(&format!("Z_{n}"), RingSpec::zmod(n), n, source)
}

fn product_entry(parts: &[&CatalogEntry], source: CatalogSource) -> CatalogEntry {
    let name = parts
        .iter()
        .map(|p| p.name.as_str())
        .collect::<Vec<_>>()
        .join("×");
    let order = parts.iter().map(|p| p.order).product();
    let spec = RingSpec::product(parts.iter().map(|p| p.spec.clone()).collect());
    simple(&name, spec, order, source)
}

fn build_catalog() -> Vec<CatalogEntry> {
    use CatalogSource::*;
    let mut out: Vec<CatalogEntry> = Vec::new();

    for n in [4, 8, 9, 16, 25, 27] {
        out.push(zmod_entry(n, PlanarLocal));
    }
    out.extend(
        PLANAR_LOCAL_QUOTIENTS
            .iter()
            .map(|r| quotient_entry(r, PlanarLocal)),
    );

    for n in [32, 49] {
        out.push(zmod_entry(n, GenusOneLocal));
    }
    out.extend(
        GENUS_ONE_LOCAL_QUOTIENTS
            .iter()
            .map(|r| quotient_entry(r, GenusOneLocal)),
    );

    let find = |out: &[CatalogEntry], name: &str| {
        out.iter()
            .find(|e| e.name == name)
            .cloned()
            .unwrap_or_else(|| panic!("catalog is missing {name}"))
    };
    let z = |n: usize| zmod_entry(n, Cyclic);
    let field = |q: usize| simple(&field_name(q), field_spec(q), q, Extra);
    let mut non_local = Vec::new();
    for small in [2, 3] {
        for q in FAMILY_Q {
            non_local.push(product_entry(&[&z(small), &field(q)], PlanarNonLocal));
        }
    }
    for (a, b) in [
        ("Z_2", "Z_9"),
        ("Z_2", "Z_3[x]/(x^2)"),
        ("Z_2", "Z_4"),
        ("Z_2", "Z_2[x]/(x^2)"),
        ("Z_2", "Z_2[x]/(x^3)"),
        ("Z_2", "Z_4[x]/(x^2-2,x^3)"),
        ("Z_2", "Z_8"),
        ("Z_3", "Z_9"),
        ("Z_3", "Z_3[x]/(x^2)"),
        ("Z_3", "Z_4"),
        ("Z_3", "Z_2[x]/(x^2)"),
    ] {
        let left = z(a[2..].parse().unwrap());
        let right = find(&out, b);
        non_local.push(product_entry(&[&left, &right], PlanarNonLocal));
    }
    non_local.push(product_entry(&[&z(2), &z(2), &z(2)], PlanarNonLocal));
    non_local.push(product_entry(&[&z(2), &z(2), &z(3)], PlanarNonLocal));
    out.extend(non_local);

    for n in 2..=32 {
        out.push(z(n));
    }
    for q in [4, 8, 9, 16, 25, 27, 32, 49, 64] {
        out.push(field(q));
    }
    out.push(product_entry(&[&z(2), &z(2), &z(2), &z(2)], Extra));

    let mut seen = std::collections::HashSet::new();
    out.retain(|e| seen.insert(e.name.clone()));
    out
}

/// All named presentations, deduplicated by name, in a fixed order.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Normalises a ring name for lookup: superscript digits become `^k`, `×`,
/// `*` and ` x ` all denote products, whitespace is ignored.
pub fn normalize_name(name: &str) -> String {
    let mut s = String::new();
    for c in name.chars() {
        match c {
            '²' => s.push_str("^2"),
            '³' => s.push_str("^3"),
            '⁴' => s.push_str("^4"),
            '⁵' => s.push_str("^5"),
            '×' | '*' => s.push('×'),
            '−' => s.push('-'),
            c if c.is_whitespace() => {}
            c => s.push(c),
        }
    }
    // `Z_2xZ_2` style products: an `x` directly followed by a ring symbol.
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::new();
    for (i, &c) in chars.iter().enumerate() {
        let next_is_ring =
            matches!(chars.get(i + 1), Some('Z') | Some('F')) && chars.get(i + 2) == Some(&'_');
        if c == 'x' && i > 0 && next_is_ring {
            out.push('×');
        } else {
            out.push(c);
        }
    }
    out
}

/// Finds a catalog entry by (normalised) name.
pub fn lookup(name: &str) -> Result<&'static CatalogEntry> {
    let key = normalize_name(name);
    catalog()
        .iter()
        .find(|e| normalize_name(&e.name) == key)
        .ok_or_else(|| Error::UnknownRing(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build_ring;

    #[test]
    fn list_sizes() {
        let count = |s: CatalogSource| catalog().iter().filter(|e| e.source == s).count();
        assert_eq!(count(CatalogSource::PlanarLocal), 29);
        assert_eq!(count(CatalogSource::GenusOneLocal), 18);
        // 13 listed presentations with the two families expanded over FAMILY_Q
        assert_eq!(
            count(CatalogSource::PlanarNonLocal),
            13 + 2 * FAMILY_Q.len()
        );
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = catalog().iter().map(|e| e.name.as_str()).collect();
        names.sort();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len());
    }

    #[test]
    fn lookups() {
        assert_eq!(
            lookup("Z_16").unwrap().spec,
            RingSpec::zmod(16).named("Z_16")
        );
        assert!(matches!(
            lookup("Z_4[x]/(x²+x+1)").unwrap().spec,
            RingSpec::Quotient { .. }
        ));
        assert!(matches!(
            lookup("Z_2×Z_2×Z_2").unwrap().spec,
            RingSpec::Product { .. }
        ));
        assert_eq!(lookup("Z_2xZ_2xZ_2").unwrap().name, "Z_2×Z_2×Z_2");
        assert_eq!(lookup("Z_2 * F_4").unwrap().order, 8);
        assert!(lookup("Z_100").is_err());
    }

    #[test]
    fn every_entry_builds_with_expected_order() {
        for e in catalog() {
            let t = build_ring(&e.spec).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(t.order(), e.order, "{}", e.name);
            assert_eq!(t.name(), e.name);
        }
    }
}
