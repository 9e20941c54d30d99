//! The rings, ideals and quotient targets the checks run over, built once.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::genus::{exact_genus_with, GenusBounds, GenusOptions};
use crate::graph::{
    blowup_graph, clique_number, diameter, girth, ideal_zero_divisor_graph, zero_divisor_graph,
    SimpleGraph,
};
use crate::ideal::{enumerate_ideals, quotient, IdealSet, QuotientRing};
use crate::ring::{build_ring, catalog, iso_check, RingTable};

use super::{GenusSummary, GraphFacts};

/// A proper ideal of a catalog ring with its quotient.
pub struct Pair {
    pub ring: &'static RingTable,
    /// Position in the canonical ideal enumeration.
    pub index: usize,
    pub ideal: IdealSet,
    pub quotient: QuotientRing,
    /// Index into [`quotient_targets`] of the ring isomorphic to the quotient.
    pub target: usize,
}

/// A ring that occurs as `R/I`, named after the first catalog entry (or
/// quotient) it is isomorphic to.
pub struct Target {
    pub name: String,
    pub in_catalog: bool,
    pub table: RingTable,
    pub omega: usize,
}

pub fn catalog_rings() -> &'static [RingTable] {
    static RINGS: OnceLock<Vec<RingTable>> = OnceLock::new();
    RINGS.get_or_init(|| {
        catalog()
            .par_iter()
            .map(|e| {
                build_ring(&e.spec)
                    .expect("catalog entries build")
                    .with_name(e.name.clone())
            })
            .collect()
    })
}

struct Sweep {
    targets: Vec<Target>,
    pairs: Vec<Pair>,
}

fn omega_of(t: &RingTable) -> usize {
    clique_number(&zero_divisor_graph(t)).expect("rings of order 64 are within the clique guard")
}

fn find_or_insert(
    targets: &mut Vec<Target>,
    table: &RingTable,
    name: impl FnOnce() -> String,
    in_catalog: bool,
) -> usize {
    if let Some(i) = targets
        .iter()
        .position(|t| t.table.order() == table.order() && iso_check(&t.table, table).is_some())
    {
        return i;
    }
    let name = name();
    targets.push(Target {
        table: table.clone().with_name(name.clone()),
        name,
        in_catalog,
        omega: omega_of(table),
    });
    targets.len() - 1
}

fn sweep() -> &'static Sweep {
    static SWEEP: OnceLock<Sweep> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let rings = catalog_rings();
        let mut targets = Vec::new();
        for r in rings {
            find_or_insert(&mut targets, r, || r.name().to_string(), true);
        }
        let raw: Vec<Vec<(usize, IdealSet, QuotientRing)>> = rings
            .par_iter()
            .map(|r| {
                enumerate_ideals(r)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, i)| !i.is_whole(r))
                    .map(|(k, i)| {
                        let q = quotient(r, &i).expect("proper ideal");
                        (k, i, q)
                    })
                    .collect()
            })
            .collect();
        let mut pairs = Vec::new();
        for (r, list) in rings.iter().zip(raw) {
            for (index, ideal, q) in list {
                let target = find_or_insert(
                    &mut targets,
                    &q.table,
                    || format!("{}/({})", r.name(), ideal.labels(r).join(",")),
                    false,
                );
                pairs.push(Pair {
                    ring: r,
                    index,
                    ideal,
                    quotient: q,
                    target,
                });
            }
        }
        Sweep { targets, pairs }
    })
}

/// Every catalog ring and every quotient of one, up to isomorphism.
pub fn quotient_targets() -> &'static [Target] {
    &sweep().targets
}

/// Every proper ideal (the zero ideal included) of every catalog ring.
pub fn catalog_pairs() -> &'static [Pair] {
    &sweep().pairs
}

/// Name of the catalog ring isomorphic to `t`, if any.
pub fn catalog_name(t: &RingTable) -> Option<&'static str> {
    catalog_rings()
        .iter()
        .find(|c| c.order() == t.order() && iso_check(c, t).is_some())
        .map(|c| c.name())
}

impl Pair {
    pub fn graph(&self) -> SimpleGraph {
        ideal_zero_divisor_graph(self.ring, &self.ideal).expect("proper ideal")
    }

    pub fn target(&self) -> &'static Target {
        &quotient_targets()[self.target]
    }

    pub fn ideal_labels(&self) -> Vec<String> {
        self.ideal.labels(self.ring)
    }
}

/// `Γ_{0×Z_t}(T × Z_t)`, which by the quotient description of the graph
/// stands for every `Γ_I(R)` with `R/I ≅ T` and `|I| = t`.
pub fn synthesized(t: &RingTable, size: usize) -> SimpleGraph {
    blowup_graph(t, size).expect("synthesized graphs stay within the vertex limit")
}

/// Member labels of `0 × Z_t` inside `T × Z_t`.
pub fn synthesized_ideal(t: &RingTable, size: usize) -> Vec<String> {
    (0..size)
        .map(|a| format!("({},{a})", t.label(t.zero())))
        .collect()
}

pub fn graph_facts(g: &SimpleGraph) -> GraphFacts {
    GraphFacts {
        vertices: g.order(),
        edges: g.edge_count(),
        diameter: diameter(g),
        girth: girth(g),
        clique: clique_number(g).unwrap_or(0),
        genus: None,
    }
}

pub fn summary(b: &GenusBounds) -> GenusSummary {
    GenusSummary {
        lower: b.lower,
        upper: b.upper,
        provenance: b.lower_provenance.clone(),
        certified: b.certificate.is_some(),
    }
}

/// Bounds good enough to decide `γ ≥ goal`: the search stops as soon as
/// the lower bound reaches `goal`.
pub fn bounds_to(g: &SimpleGraph, goal: usize, budget: u64) -> GenusBounds {
    exact_genus_with(
        g,
        GenusOptions {
            budget,
            goal: Some(goal),
            ..GenusOptions::default()
        },
    )
}

/// `Some(γ ≥ k)` when the bounds decide it.
pub fn at_least(b: &GenusBounds, k: usize) -> Option<bool> {
    if b.lower >= k {
        Some(true)
    } else if b.upper.is_some_and(|u| u < k) {
        Some(false)
    } else {
        None
    }
}

/// `Some(γ = 1)` when the bounds decide it. A positive answer needs a
/// verified certificate of genus 1 and a proof of non-planarity.
pub fn exactly_one(g: &SimpleGraph, b: &GenusBounds) -> Option<bool> {
    if b.lower >= 2 || b.upper == Some(0) {
        return Some(false);
    }
    let certified = b
        .certificate
        .as_ref()
        .is_some_and(|c| c.genus == 1 && c.verify(g));
    (b.lower == 1 && certified).then_some(true)
}
