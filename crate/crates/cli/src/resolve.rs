//! Turning command-line words into rings and ideals.

use std::path::Path;

use idealgraph::ideal::{enumerate_ideals, generated_ideal, IdealSet};
use idealgraph::ring::{build_ring, catalog::normalize_name, lookup, RingSpec, RingTable};
use idealgraph::{Error, Result};

/// A ring spec JSON file, a catalog name, or a `×`-separated product of
/// catalog names (`Z_2xZ_4`, `Z_9*Z_3`).
pub fn ring(arg: &str) -> Result<RingTable> {
    let path = Path::new(arg);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        return build_ring(&RingSpec::from_json(&text)?);
    }
    if let Ok(entry) = lookup(arg) {
        return Ok(build_ring(&entry.spec)?.with_name(entry.name.clone()));
    }
    let key = normalize_name(arg);
    let parts: Vec<&str> = key.split('×').collect();
    if parts.len() < 2 {
        return Err(Error::UnknownRing(arg.to_string()));
    }
    let specs = parts
        .iter()
        .map(|p| lookup(p).map(|e| e.spec.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(build_ring(&RingSpec::product(specs))?.with_name(parts.join("×")))
}

/// `#k` picks the k-th ideal of the canonical enumeration, `gen:a,b` the
/// ideal generated by labelled elements, `factor:k` the k-th factor
/// `0 × … × R_k × … × 0` of a product ring (1-based).
pub fn ideal(t: &RingTable, selector: &str) -> Result<IdealSet> {
    if let Some(k) = selector.strip_prefix('#') {
        let k: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad ideal index `{k}`")))?;
        let all = enumerate_ideals(t);
        let count = all.len();
        return all.into_iter().nth(k).ok_or_else(|| {
            Error::Parse(format!(
                "ideal #{k} out of range: the ring has {count} ideals"
            ))
        });
    }
    if let Some(gens) = selector.strip_prefix("gen:") {
        let elems = gens
            .split(',')
            .map(|g| {
                let g = g.trim();
                t.elem_by_label(g)
                    .ok_or_else(|| Error::Parse(format!("no element labelled `{g}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(generated_ideal(t, &elems));
    }
    if let Some(k) = selector.strip_prefix("factor:") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad factor index `{k}`")))?;
        return factor_ideal(t, k);
    }
    Err(Error::Parse(format!(
        "ideal selector `{selector}` is not #k, gen:a,b or factor:k"
    )))
}

/// Labels of a product ring look like `(a,b,c)`; the k-th factor ideal
/// holds the elements whose other coordinates are all `0`.
fn factor_ideal(t: &RingTable, k: usize) -> Result<IdealSet> {
    let coords = |label: &str| -> Option<Vec<String>> {
        let inner = label.strip_prefix('(')?.strip_suffix(')')?;
        Some(split_top(inner))
    };
    let zero = coords(t.label(t.zero()))
        .ok_or_else(|| Error::Parse(format!("{} is not a product", t.name())))?;
    if k == 0 || k > zero.len() {
        return Err(Error::Parse(format!(
            "factor:{k} out of range: {} factors",
            zero.len()
        )));
    }
    let members = t
        .elements()
        .filter(|&a| {
            coords(t.label(a)).is_some_and(|c| {
                c.iter()
                    .zip(&zero)
                    .enumerate()
                    .all(|(i, (x, z))| i + 1 == k || x == z)
            })
        })
        .collect();
    IdealSet::new(t, members)
}

/// Splits on commas that are not inside parentheses.
fn split_top(s: &str) -> Vec<String> {
    let mut parts = vec![String::new()];
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(String::new());
                continue;
            }
            _ => {}
        }
        parts.last_mut().unwrap().push(c);
    }
    parts
}
