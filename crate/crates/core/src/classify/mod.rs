//! Classification predicates and mechanical checks of the planarity and
//! genus results over the ring catalog.
//!
//! Where a statement quantifies over abstract pairs `(R, I)`, the graph is
//! synthesized as `Γ_{0×Z_t}(T × Z_t)` from the quotient target `T` and the
//! ideal size `t`; the graph depends only on those two.

mod instances;
mod theorems;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::genus::DEFAULT_BUDGET;
use crate::graph::{clique_number, girth, zero_divisor_graph};
use crate::ring::{build_ring, iso_check, lookup, RingSpec, RingTable};

pub use instances::{catalog_name, catalog_pairs, catalog_rings, quotient_targets, Pair, Target};

/// The results that can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    /// Planarity of `Γ_I(R)` for non-prime `I`.
    RedmondPlanar,
    /// `γ ≤ 1` classification when `ω(Γ(R/I)) ≤ 2`.
    GenusOneCliqueLe2,
    /// `γ = 1` classification when `ω(Γ(R/I)) = 3`.
    GenusOneClique3,
    /// `ω(Γ(R/I)) ≥ 4` or `γ(Γ(R/I)) ≥ 1` forces `γ ≥ 2`.
    GenusGe2,
    /// Genus of the expansions of `K_2`, `K_5`, `K_{1,3}` and `K_{2,3}`.
    ExpansionGenus,
    /// Vertex count, expansion subgraph and dependence on `R/I` and `|I|`.
    QuotientStructure,
    /// Connectivity and diameter at most 3.
    Diameter3,
    /// Girth at most 4 when finite.
    Girth4,
    /// Clique number equals the number of minimal primes of a radical ideal.
    CliqueMinimalPrimes,
    /// Local rings have prime-power order `|R/m|^n`.
    LocalOrderPower,
    /// Local, `m² ≠ 0`, `|R/m| ≥ 3` gives `γ(Γ(R)^(2)) ≥ 2`.
    NonReducedResidueField,
    /// Local, `m² ≠ 0` and `Γ(R)` acyclic gives `|R/m| = 2`.
    AcyclicLocal,
    /// Zero-divisor graphs of `Z_2 × S` with `S` local.
    BooleanFactorLocal,
    /// The local rings with `Γ(R) = K_3`.
    TriangleLocal,
    /// Products of at least three local rings.
    ManyFactors,
    /// Rings with `γ(Γ_I(R)) = 1`: `Z_2³`, `Z_16` at `|I| = 2`, and the
    /// path-quotient and `K_6` cases at `|I| = 3`.
    GenusOneExamples,
    /// The `K_4` attachment bound on the graph built from the listed edges.
    AttachmentBound,
    /// The seven local quotients of order 16 with `γ(Γ_I(R)) ≥ 2`.
    GenusTwoExamples,
    /// `γ(Γ(R/I)) ≥ 2` gives `γ(Γ_I(R)) ≥ 2`.
    QuotientGenusTwo,
    /// Local quotient, residue field `Z_2`, `γ(Γ(R/I)) = 1` gives `γ ≥ 2`.
    ResidueTwoGenusOne,
}

impl TheoremId {
    pub const ALL: [TheoremId; 20] = [
        TheoremId::RedmondPlanar,
        TheoremId::GenusOneCliqueLe2,
        TheoremId::GenusOneClique3,
        TheoremId::GenusGe2,
        TheoremId::ExpansionGenus,
        TheoremId::QuotientStructure,
        TheoremId::Diameter3,
        TheoremId::Girth4,
        TheoremId::CliqueMinimalPrimes,
        TheoremId::LocalOrderPower,
        TheoremId::NonReducedResidueField,
        TheoremId::AcyclicLocal,
        TheoremId::BooleanFactorLocal,
        TheoremId::TriangleLocal,
        TheoremId::ManyFactors,
        TheoremId::GenusOneExamples,
        TheoremId::AttachmentBound,
        TheoremId::GenusTwoExamples,
        TheoremId::QuotientGenusTwo,
        TheoremId::ResidueTwoGenusOne,
    ];
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown theorem id `{s}`")))
    }
}

/// Genus interval of a graph, as reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusSummary {
    pub lower: usize,
    pub upper: Option<usize>,
    pub provenance: Vec<String>,
    /// Whether an embedding realising `upper` was found.
    pub certified: bool,
}

/// Invariants of the graph under test. `None` for diameter or girth means
/// infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphFacts {
    pub vertices: usize,
    pub edges: usize,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub clique: usize,
    pub genus: Option<GenusSummary>,
}

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub theorem: TheoremId,
    pub ring: String,
    /// Member labels of the ideal, sorted.
    pub ideal: Vec<String>,
    pub ideal_size: usize,
    /// Catalog name of the ring isomorphic to `R/I`, or `"other"`.
    pub quotient: String,
    pub graph: Option<GraphFacts>,
    /// What was checked.
    pub claim: String,
    /// What the statement predicts.
    pub verdict: bool,
    /// What was computed; `None` when the budget ran out first.
    pub computed: Option<bool>,
    pub agrees: bool,
    pub note: String,
}

impl ClassificationReport {
    pub fn inconclusive(&self) -> bool {
        self.computed.is_none()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Node budget for each genus search.
    pub budget: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Checks every instance of `theorem`; reports come in a fixed order.
pub fn verify(theorem: TheoremId, opts: VerifyOptions) -> Vec<ClassificationReport> {
    let jobs = theorems::jobs(theorem, opts);
    jobs.par_iter().map(|job| job()).collect()
}

/// Whether every report agrees and none is inconclusive.
pub fn all_pass(reports: &[ClassificationReport]) -> bool {
    reports.iter().all(|r| r.agrees && !r.inconclusive())
}

/// Fixed-width table, one row per report.
pub fn format_table(reports: &[ClassificationReport]) -> String {
    let mut rows = vec![[
        "theorem", "ring", "|I|", "R/I", "V", "E", "diam", "girth", "ω", "genus", "verdict",
        "computed", "ok",
    ]
    .map(String::from)
    .to_vec()];
    let inf = |x: Option<usize>| x.map_or("∞".to_string(), |v| v.to_string());
    for r in reports {
        let (v, e, d, g, w, genus) = match &r.graph {
            Some(f) => (
                f.vertices.to_string(),
                f.edges.to_string(),
                inf(f.diameter),
                inf(f.girth),
                f.clique.to_string(),
                f.genus.as_ref().map_or("-".to_string(), |s| match s.upper {
                    Some(u) if u == s.lower => u.to_string(),
                    Some(u) => format!("{}..{u}", s.lower),
                    None => format!("≥{}", s.lower),
                }),
            ),
            None => Default::default(),
        };
        rows.push(vec![
            r.theorem.to_string(),
            r.ring.clone(),
            r.ideal_size.to_string(),
            r.quotient.clone(),
            v,
            e,
            d,
            g,
            w,
            genus,
            r.verdict.to_string(),
            r.computed.map_or("?".to_string(), |c| c.to_string()),
            if r.inconclusive() {
                "INCONCLUSIVE".to_string()
            } else if r.agrees {
                "ok".to_string()
            } else {
                "FAIL".to_string()
            },
        ]);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| {
            rows.iter()
                .map(|row| row[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn reference(names: &[&str]) -> Vec<RingTable> {
    names
        .iter()
        .map(|n| {
            build_ring(&lookup(n).expect("reference rings are in the catalog").spec)
                .expect("catalog entries build")
        })
        .collect()
}

fn matches_any(t: &RingTable, refs: &[RingTable]) -> bool {
    refs.iter()
        .any(|r| r.order() == t.order() && iso_check(r, t).is_some())
}

fn is_prime_power(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q)
        .find(|p| q.is_multiple_of(*p))
        .expect("q ≥ 2 has a prime factor");
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

/// `(rings, cap on |I|)` for each case of the `ω ≤ 2` classification.
fn clique_le2_cases() -> &'static [(Vec<RingTable>, usize)] {
    static CASES: OnceLock<Vec<(Vec<RingTable>, usize)>> = OnceLock::new();
    CASES.get_or_init(|| {
        vec![
            (reference(&["Z_3×Z_3"]), 2),
            (reference(&["Z_2×Z_2"]), 4),
            (reference(&["Z_2×Z_3"]), 3),
            (reference(&["Z_2×Z_4", "Z_2×Z_2[x]/(x^2)"]), 2),
            (reference(&["Z_4", "Z_2[x]/(x^2)"]), 7),
            (reference(&["Z_9", "Z_3[x]/(x^2)"]), 3),
            (reference(&["Z_8", "Z_2[x]/(x^3)", "Z_4[x]/(x^2-2,x^3)"]), 3),
        ]
    })
}

/// `Z_2 × F_q` with `q ≥ 4`, recognised by order and structure.
fn is_z2_times_big_field(t: &RingTable) -> bool {
    let q = t.order() / 2;
    if !t.order().is_multiple_of(2) || q < 4 || !is_prime_power(q) {
        return false;
    }
    let (p, k) = {
        let p = (2..=q).find(|p| q.is_multiple_of(*p)).unwrap();
        (p, (q as f64).log(p as f64).round() as u32)
    };
    let field = if k == 1 {
        RingSpec::zmod(p)
    } else {
        RingSpec::gf(p, k)
    };
    let Ok(r) = build_ring(&RingSpec::product(vec![RingSpec::zmod(2), field])) else {
        return false;
    };
    iso_check(&r, t).is_some()
}

/// Largest `|I|` with `γ(Γ_I(R)) ≤ 1` for `R/I ≅ t`, when `t` is one of the
/// listed quotients of the `ω ≤ 2` classification.
pub fn clique_le2_cap(t: &RingTable) -> Option<usize> {
    if is_z2_times_big_field(t) {
        return Some(2);
    }
    clique_le2_cases()
        .iter()
        .find(|(refs, _)| matches_any(t, refs))
        .map(|&(_, cap)| cap)
}

fn clique_of_quotient(q: &RingTable) -> usize {
    clique_number(&zero_divisor_graph(q)).expect("rings of order 64 are within the clique guard")
}

/// Planarity criterion for a non-prime proper nonzero ideal: `Γ(R/I)` has
/// no cycle and either `|I| = 2`, or `|Γ(R/I)| = 1` and `|I| ≤ 4`.
pub fn redmond_planar_predicate(quotient: &RingTable, ideal_size: usize) -> bool {
    let g = zero_divisor_graph(quotient);
    girth(&g).is_none() && (ideal_size == 2 || (g.order() == 1 && ideal_size <= 4))
}

/// `γ(Γ_I(R)) ≤ 1` for a non-prime ideal with `ω(Γ(R/I)) ≤ 2`.
pub fn genus_one_clique_le2_predicate(quotient: &RingTable, ideal_size: usize) -> Result<bool> {
    let w = clique_of_quotient(quotient);
    if w > 2 {
        return Err(Error::CliqueHypothesisViolated(w));
    }
    Ok(clique_le2_cap(quotient).is_some_and(|cap| ideal_size <= cap))
}

fn clique3_targets() -> &'static [RingTable] {
    static REFS: OnceLock<Vec<RingTable>> = OnceLock::new();
    REFS.get_or_init(|| {
        reference(&[
            "Z_2×Z_2×Z_2",
            "Z_16",
            "Z_2[x,y]/(x^2,xy,y^2)",
            "Z_4[x]/(2x,x^2)",
            "F_4[x]/(x^2)",
            "Z_4[x]/(x^2+x+1)",
        ])
    })
}

/// `γ(Γ_I(R)) = 1` when `ω(Γ(R/I)) = 3`.
pub fn genus_one_clique3_predicate(quotient: &RingTable, ideal_size: usize) -> Result<bool> {
    let w = clique_of_quotient(quotient);
    if w != 3 {
        return Err(Error::CliqueHypothesisViolated(w));
    }
    Ok(ideal_size == 2 && matches_any(quotient, clique3_targets()))
}

/// Hypothesis that forces `γ(Γ_I(R)) ≥ 2`: `ω(Γ(R/I)) ≥ 4` or `Γ(R/I)` is
/// not planar.
pub fn genus_ge2_predicate(quotient: &RingTable) -> bool {
    let g = zero_divisor_graph(quotient);
    clique_of_quotient(quotient) >= 4 || !crate::genus::is_planar(&g)
}
