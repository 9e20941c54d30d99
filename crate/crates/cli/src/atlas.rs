//! Atlas CSV: one row per catalog ring and proper nonzero ideal.
//!
//! Columns, fixed for format version 1:
//!
//! | column | meaning |
//! |---|---|
//! | `ring` | catalog name |
//! | `order` | `|R|` |
//! | `ideal` | position in the canonical ideal enumeration (`#k`) |
//! | `members` | element labels of `I`, space separated |
//! | `size` | `|I|` |
//! | `prime`, `radical` | ideal flags |
//! | `quotient` | catalog name of a ring isomorphic to `R/I`, or `other` |
//! | `vertices`, `edges` | size of `Γ_I(R)` |
//! | `diameter`, `girth` | empty when infinite |
//! | `clique` | `ω(Γ_I(R))` |
//! | `genus_lower`, `genus_upper` | proven bounds; upper empty when unknown |

use idealgraph::classify::{catalog_name, catalog_rings};
use idealgraph::genus::exact_genus;
use idealgraph::graph::{clique_number, diameter, girth, ideal_zero_divisor_graph};
use idealgraph::ideal::{enumerate_ideals, is_prime, is_radical, quotient};
use idealgraph::Result;
use rayon::prelude::*;

use crate::{Ctx, Format, Outcome};

pub const HEADER: &str = "# idealgraph atlas, format version 1\n\
ring,order,ideal,members,size,prime,radical,quotient,vertices,edges,diameter,girth,clique,genus_lower,genus_upper\n";

pub fn run(ctx: &Ctx, max_order: usize, filter: Option<&str>) -> Result<Outcome> {
    if let Some(f) = ctx.format.filter(|&f| f != Format::Csv) {
        return Err(idealgraph::Error::Parse(
            format!("`atlas` writes CSV only, not {f:?}").to_lowercase(),
        ));
    }
    let cells: Vec<(usize, usize)> = catalog_rings()
        .iter()
        .enumerate()
        .filter(|(_, r)| r.order() <= max_order && filter.is_none_or(|f| r.name().contains(f)))
        .flat_map(|(ri, r)| {
            enumerate_ideals(r)
                .into_iter()
                .enumerate()
                .filter(|(_, i)| !i.is_zero() && !i.is_whole(r))
                .map(move |(k, _)| (ri, k))
        })
        .collect();
    let rows: Vec<String> = cells
        .par_iter()
        .map(|&(ri, k)| row(ri, k, ctx.budget))
        .collect();
    let mut text = String::from(HEADER);
    for r in rows {
        text.push_str(&r);
    }
    ctx.emit(&text)?;
    Ok(Outcome::Success)
}

fn row(ri: usize, k: usize, budget: u64) -> String {
    let r = &catalog_rings()[ri];
    let i = &enumerate_ideals(r)[k];
    let g = ideal_zero_divisor_graph(r, i).expect("proper ideal");
    let q = quotient(r, i).expect("proper ideal");
    let b = exact_genus(&g, budget);
    let opt = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
    format!(
        "{},{},#{k},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        csv(r.name()),
        r.order(),
        csv(&i.labels(r).join(" ")),
        i.len(),
        is_prime(r, i),
        is_radical(r, i),
        csv(catalog_name(&q.table).unwrap_or("other")),
        g.order(),
        g.edge_count(),
        opt(diameter(&g)),
        opt(girth(&g)),
        opt(clique_number(&g).ok()),
        b.lower,
        opt(b.upper),
    )
}

fn csv(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
