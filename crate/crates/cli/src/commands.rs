use std::path::Path;

use idealgraph::classify::{
    all_pass, format_table, verify as run_verify, TheoremId, VerifyOptions,
};
use idealgraph::genus::{exact_genus, GenusBounds};
use idealgraph::graph::{
    clique_number, diameter, export_dot, export_json, girth, ideal_zero_divisor_graph, parse_json,
    SimpleGraph,
};
use idealgraph::ideal::{enumerate_ideals, is_local, is_maximal, is_prime, is_radical, IdealSet};
use idealgraph::ring::RingTable;
use idealgraph::{Error, Result};
use serde_json::json;

use crate::{resolve, write_file, Ctx, Format, Outcome};

fn unsupported(cmd: &str, f: Format) -> Error {
    Error::Parse(format!("`{cmd}` does not support --format {f:?}").to_lowercase())
}

pub fn ring(ctx: &Ctx, arg: &str) -> Result<Outcome> {
    let t = resolve::ring(arg)?;
    let (local, maximal) = is_local(&t);
    let units = t.units().len();
    let zd = t.zero_divisors().len() + 1;
    let text = match ctx.format.unwrap_or(Format::Table) {
        Format::Table => {
            let mut s = format!("ring: {}\norder: {}\n", t.name(), t.order());
            s += &format!("units: {units}\nzero-divisors: {zd}\n");
            s += &format!(
                "local: {}\nmaximal ideals: {}\n",
                yes_no(local),
                maximal.len()
            );
            s += &format!("field: {}\n", yes_no(t.is_field()));
            s += &format!("labels: {}\n", t.labels().join(" "));
            s
        }
        Format::Json => {
            json!({
                "ring": t.name(),
                "order": t.order(),
                "units": units,
                "zero_divisors": zd,
                "local": local,
                "maximal_ideals": maximal.len(),
                "field": t.is_field(),
                "labels": t.labels(),
            })
            .to_string()
                + "\n"
        }
        f => return Err(unsupported("ring", f)),
    };
    ctx.emit(&text)?;
    Ok(Outcome::Success)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn ideals(ctx: &Ctx, arg: &str) -> Result<Outcome> {
    let t = resolve::ring(arg)?;
    let rows: Vec<(usize, IdealSet)> = enumerate_ideals(&t).into_iter().enumerate().collect();
    let flags = |i: &IdealSet| {
        let proper = !i.is_whole(&t);
        (
            proper && is_prime(&t, i),
            proper && is_radical(&t, i),
            proper && is_maximal(&t, i),
        )
    };
    let text = match ctx.format.unwrap_or(Format::Table) {
        Format::Table => {
            let mut s = format!(
                "{:<4} {:>4} {:<6} {:<8} {:<8} members\n",
                "#", "size", "prime", "radical", "maximal"
            );
            for (k, i) in &rows {
                let (p, r, m) = flags(i);
                s += &format!(
                    "{:<4} {:>4} {:<6} {:<8} {:<8} {}\n",
                    format!("#{k}"),
                    i.len(),
                    yes_no(p),
                    yes_no(r),
                    yes_no(m),
                    i.labels(&t).join(" ")
                );
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("index,size,prime,radical,maximal,members\n");
            for (k, i) in &rows {
                let (p, r, m) = flags(i);
                s += &format!(
                    "{k},{},{p},{r},{m},\"{}\"\n",
                    i.len(),
                    i.labels(&t).join(" ")
                );
            }
            s
        }
        Format::Json => {
            let mut s = String::new();
            for (k, i) in &rows {
                let (p, r, m) = flags(i);
                s += &json!({"index": k, "size": i.len(), "prime": p, "radical": r, "maximal": m, "members": i.labels(&t)})
                    .to_string();
                s.push('\n');
            }
            s
        }
        f => return Err(unsupported("ideals", f)),
    };
    ctx.emit(&text)?;
    Ok(Outcome::Success)
}

fn ring_and_graph(ring: &str, ideal: Option<&str>) -> Result<(RingTable, IdealSet, SimpleGraph)> {
    let t = resolve::ring(ring)?;
    let i = match ideal {
        Some(sel) => resolve::ideal(&t, sel)?,
        None => IdealSet::zero(&t),
    };
    let g = ideal_zero_divisor_graph(&t, &i)?;
    if !i.is_zero() && is_prime(&t, &i) {
        eprintln!("warning: the ideal is prime, so Γ_I(R) has no vertices");
    }
    Ok((t, i, g))
}

fn summary(g: &SimpleGraph) -> serde_json::Value {
    json!({
        "vertices": g.order(),
        "edges": g.edge_count(),
        "diameter": diameter(g),
        "girth": girth(g),
        "clique": clique_number(g).ok(),
    })
}

fn show(x: Option<usize>) -> String {
    x.map_or("∞".to_string(), |v| v.to_string())
}

pub fn graph(ctx: &Ctx, ring: &str, ideal: Option<&str>) -> Result<Outcome> {
    let (t, i, g) = ring_and_graph(ring, ideal)?;
    let clique = clique_number(&g).map_or("?".to_string(), |w| w.to_string());
    let header = format!(
        "ring {}, |I| = {}: {} vertices, {} edges, diameter {}, girth {}, clique {}",
        t.name(),
        i.len(),
        g.order(),
        g.edge_count(),
        show(diameter(&g)),
        show(girth(&g)),
        clique
    );
    let text = match ctx.format.unwrap_or(Format::Dot) {
        Format::Dot => format!("// {header}\n{}", export_dot(&g)),
        Format::Json => {
            let graph: serde_json::Value =
                serde_json::from_str(&export_json(&g)).expect("valid JSON");
            json!({"ring": t.name(), "ideal": i.labels(&t), "graph": graph, "summary": summary(&g)})
                .to_string()
                + "\n"
        }
        Format::Table => header + "\n",
        f => return Err(unsupported("graph", f)),
    };
    ctx.emit(&text)?;
    Ok(Outcome::Success)
}

pub fn genus(
    ctx: &Ctx,
    ring: Option<&str>,
    ideal: Option<&str>,
    file: Option<&Path>,
) -> Result<Outcome> {
    let (name, g) = match (ring, file) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            (path.display().to_string(), parse_json(&text)?)
        }
        (Some(r), None) => {
            let (t, i, g) = ring_and_graph(r, ideal)?;
            (format!("{}, |I| = {}", t.name(), i.len()), g)
        }
        (None, None) => return Err(Error::Parse("give a ring or --graph".into())),
    };
    let b = exact_genus(&g, ctx.budget);
    let text = match ctx.format.unwrap_or(Format::Table) {
        Format::Table => format_bounds(&name, &g, &b),
        Format::Json => {
            json!({
                "graph": name,
                "vertices": g.order(),
                "edges": g.edge_count(),
                "lower": b.lower,
                "upper": b.upper,
                "exact": b.exact(),
                "provenance": b.lower_provenance,
                "nodes": b.nodes,
            })
            .to_string()
                + "\n"
        }
        f => return Err(unsupported("genus", f)),
    };
    print!("{text}");
    if let (Some(path), Some(_), Some(cert)) = (&ctx.output, b.exact(), &b.certificate) {
        write_file(
            path,
            &(serde_json::to_string_pretty(cert).expect("certificates serialize") + "\n"),
        )?;
    }
    Ok(if b.exact().is_some() {
        Outcome::Success
    } else {
        Outcome::Inconclusive
    })
}

fn format_bounds(name: &str, g: &SimpleGraph, b: &GenusBounds) -> String {
    let mut s = format!(
        "graph: {name} ({} vertices, {} edges)\n",
        g.order(),
        g.edge_count()
    );
    match b.exact() {
        Some(v) => s += &format!("genus: {v}\n"),
        None => {
            s += &format!(
                "genus: {} ≤ γ ≤ {}\n",
                b.lower,
                b.upper.map_or("?".into(), |u| u.to_string())
            )
        }
    }
    if !b.lower_provenance.is_empty() {
        s += &format!("lower bound: {}\n", b.lower_provenance.join("; "));
    }
    if let Some(c) = &b.certificate {
        s += &format!(
            "embedding: {} faces on the surface of genus {}\n",
            c.faces, c.genus
        );
    }
    s += &format!("search nodes: {}\n", b.nodes);
    s
}

pub fn verify(ctx: &Ctx, arg: &str) -> Result<Outcome> {
    let ids: Vec<TheoremId> = if arg.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![arg.parse()?]
    };
    let opts = VerifyOptions { budget: ctx.budget };
    let reports: Vec<_> = ids.iter().flat_map(|&id| run_verify(id, opts)).collect();
    let text = match ctx.format.unwrap_or(Format::Table) {
        Format::Table => {
            let failed = reports
                .iter()
                .filter(|r| !r.inconclusive() && !r.agrees)
                .count();
            let open = reports.iter().filter(|r| r.inconclusive()).count();
            format!(
                "{}\n{} instances, {} disagreements, {} inconclusive\n",
                format_table(&reports),
                reports.len(),
                failed,
                open
            )
        }
        Format::Json => reports.iter().map(|r| r.to_json_line() + "\n").collect(),
        f => return Err(unsupported("verify", f)),
    };
    ctx.emit(&text)?;
    Ok(if all_pass(&reports) {
        Outcome::Success
    } else if reports.iter().any(|r| !r.inconclusive() && !r.agrees) {
        Outcome::Failed
    } else {
        Outcome::Inconclusive
    })
}
