//! One job per checked instance, for each theorem.

use std::sync::Arc;

use super::instances::{
    at_least, bounds_to, catalog_pairs, catalog_rings, exactly_one, graph_facts, quotient_targets,
    summary, synthesized, synthesized_ideal, Pair, Target,
};
use super::*;
use crate::genus::{
    embeds_within, exact_genus, genus_lower_bound, is_planar, k4_attachment_bound,
    subgraph_lower_bound,
};
use crate::graph::{
    diameter, expand, find_biclique, find_complete_subgraph, girth, graph_isomorphism,
    zero_divisor_graph, SimpleGraph,
};
use crate::ideal::{is_local, is_prime, is_radical, minimal_primes_over};

pub(super) type Job = Box<dyn Fn() -> ClassificationReport + Send + Sync>;

/// Where an instance comes from.
#[derive(Clone)]
struct Subject {
    theorem: TheoremId,
    ring: String,
    ideal: Vec<String>,
    ideal_size: usize,
    quotient: String,
}

impl Subject {
    fn of_pair(theorem: TheoremId, p: &Pair) -> Subject {
        Subject {
            theorem,
            ring: p.ring.name().to_string(),
            ideal: p.ideal_labels(),
            ideal_size: p.ideal.len(),
            quotient: quotient_name(p.target()),
        }
    }

    fn synthesized(theorem: TheoremId, t: &Target, size: usize) -> Subject {
        Subject {
            theorem,
            ring: format!("{}×Z_{size}", t.name),
            ideal: synthesized_ideal(&t.table, size),
            ideal_size: size,
            quotient: quotient_name(t),
        }
    }

    fn ring(theorem: TheoremId, name: &str) -> Subject {
        Subject {
            theorem,
            ring: name.to_string(),
            ideal: Vec::new(),
            ideal_size: 0,
            quotient: name.to_string(),
        }
    }

    fn report(
        &self,
        graph: Option<GraphFacts>,
        claim: impl Into<String>,
        verdict: bool,
        computed: Option<bool>,
        note: impl Into<String>,
    ) -> ClassificationReport {
        ClassificationReport {
            theorem: self.theorem,
            ring: self.ring.clone(),
            ideal: self.ideal.clone(),
            ideal_size: self.ideal_size,
            quotient: self.quotient.clone(),
            graph,
            claim: claim.into(),
            verdict,
            computed,
            agrees: computed == Some(verdict),
            note: note.into(),
        }
    }
}

fn quotient_name(t: &Target) -> String {
    if t.in_catalog {
        t.name.clone()
    } else {
        "other".to_string()
    }
}

fn job(f: impl Fn() -> ClassificationReport + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn non_field_targets() -> impl Iterator<Item = (usize, &'static Target)> {
    quotient_targets()
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.table.is_field())
}

fn proper_nonzero_pairs() -> impl Iterator<Item = (usize, &'static Pair)> {
    catalog_pairs()
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.ideal.is_zero())
}

fn non_prime(p: &Pair) -> bool {
    !is_prime(p.ring, &p.ideal)
}

fn target(i: usize) -> &'static Target {
    &quotient_targets()[i]
}

fn pair(i: usize) -> &'static Pair {
    &catalog_pairs()[i]
}

/// Graph of a catalog pair or of a synthesized `T × Z_t`.
#[derive(Clone, Copy)]
enum Source {
    Pair(usize),
    Synth(usize, usize),
}

impl Source {
    fn subject(self, theorem: TheoremId) -> Subject {
        match self {
            Source::Pair(i) => Subject::of_pair(theorem, pair(i)),
            Source::Synth(t, size) => Subject::synthesized(theorem, target(t), size),
        }
    }

    fn graph(self) -> SimpleGraph {
        match self {
            Source::Pair(i) => pair(i).graph(),
            Source::Synth(t, size) => synthesized(&target(t).table, size),
        }
    }

    fn quotient(self) -> &'static Target {
        match self {
            Source::Pair(i) => pair(i).target(),
            Source::Synth(t, _) => target(t),
        }
    }

    fn ideal_size(self) -> usize {
        match self {
            Source::Pair(i) => pair(i).ideal.len(),
            Source::Synth(_, size) => size,
        }
    }
}

/// Catalog pairs with a nonzero non-prime ideal whose quotient passes
/// `keep`, then synthesized instances for the kept targets.
fn sources(keep: impl Fn(&Target) -> bool, sizes: impl Fn(&Target) -> Vec<usize>) -> Vec<Source> {
    let mut out: Vec<Source> = proper_nonzero_pairs()
        .filter(|(_, p)| non_prime(p) && keep(p.target()))
        .map(|(i, _)| Source::Pair(i))
        .collect();
    for (i, t) in non_field_targets() {
        if keep(t) {
            out.extend(sizes(t).into_iter().map(|s| Source::Synth(i, s)));
        }
    }
    out
}

pub(super) fn jobs(theorem: TheoremId, opts: VerifyOptions) -> Vec<Job> {
    use TheoremId::*;
    match theorem {
        RedmondPlanar => redmond(),
        GenusOneCliqueLe2 => clique_le2(opts),
        GenusOneClique3 => clique3(opts),
        GenusGe2 => genus_ge2(opts),
        ExpansionGenus => expansions(opts),
        QuotientStructure => quotient_structure(),
        Diameter3 => diameter3(),
        Girth4 => girth4(),
        CliqueMinimalPrimes => clique_primes(),
        LocalOrderPower => local_order_power(),
        NonReducedResidueField => non_reduced_residue(opts),
        AcyclicLocal => acyclic_local(),
        BooleanFactorLocal => boolean_factor(),
        TriangleLocal => triangle_local(),
        ManyFactors => many_factors(opts),
        GenusOneExamples => genus_one_examples(opts),
        AttachmentBound => attachment(opts),
        GenusTwoExamples => genus_two_examples(opts),
        QuotientGenusTwo => quotient_genus_two(opts),
        ResidueTwoGenusOne => residue_two_genus_one(opts),
    }
}

fn redmond() -> Vec<Job> {
    sources(|_| true, |_| (2..=5).collect())
        .into_iter()
        .map(|s| {
            job(move || {
                let g = s.graph();
                let verdict = redmond_planar_predicate(&s.quotient().table, s.ideal_size());
                s.subject(TheoremId::RedmondPlanar).report(
                    Some(graph_facts(&g)),
                    "planar",
                    verdict,
                    Some(is_planar(&g)),
                    "",
                )
            })
        })
        .collect()
}

fn clique_le2(opts: VerifyOptions) -> Vec<Job> {
    let sizes = |t: &Target| (2..=clique_le2_cap(&t.table).unwrap_or(1) + 1).collect();
    sources(|t| t.omega <= 2, sizes)
        .into_iter()
        .map(|s| {
            job(move || {
                let g = s.graph();
                let verdict = genus_one_clique_le2_predicate(&s.quotient().table, s.ideal_size())
                    .expect("sources keep ω ≤ 2");
                let b = bounds_to(&g, 2, opts.budget);
                let mut facts = graph_facts(&g);
                facts.genus = Some(summary(&b));
                let computed = at_least(&b, 2).map(|ge2| !ge2);
                s.subject(TheoremId::GenusOneCliqueLe2).report(
                    Some(facts),
                    "genus ≤ 1",
                    verdict,
                    computed,
                    "",
                )
            })
        })
        .collect()
}

fn clique3(opts: VerifyOptions) -> Vec<Job> {
    sources(|t| t.omega == 3, |_| vec![2, 3])
        .into_iter()
        .map(|s| {
            job(move || {
                let g = s.graph();
                let verdict = genus_one_clique3_predicate(&s.quotient().table, s.ideal_size())
                    .expect("sources keep ω = 3");
                let b = bounds_to(&g, 2, opts.budget);
                let mut facts = graph_facts(&g);
                facts.genus = Some(summary(&b));
                let computed = exactly_one(&g, &b);
                let note = if computed == Some(verdict) {
                    String::new()
                } else {
                    same_graph_as_z16(&g, s.ideal_size())
                };
                s.subject(TheoremId::GenusOneClique3).report(
                    Some(facts),
                    "genus = 1",
                    verdict,
                    computed,
                    note,
                )
            })
        })
        .collect()
}

/// Explains a disagreement caused by a quotient with the same `Γ_I` as the
/// listed `Z_16` case.
fn same_graph_as_z16(g: &SimpleGraph, size: usize) -> String {
    let z16 = &target(catalog_target("Z_16")).table;
    if graph_isomorphism(g, &synthesized(z16, size)).is_some() {
        format!("Γ_I(R) is isomorphic to the graph of Z_16 with |I| = {size}")
    } else {
        String::new()
    }
}

fn ge2_job(theorem: TheoremId, s: Source, budget: u64, note: &'static str) -> Job {
    job(move || {
        let g = s.graph();
        let b = bounds_to(&g, 2, budget);
        let mut facts = graph_facts(&g);
        facts.genus = Some(summary(&b));
        s.subject(theorem)
            .report(Some(facts), "genus ≥ 2", true, at_least(&b, 2), note)
    })
}

fn genus_ge2(opts: VerifyOptions) -> Vec<Job> {
    sources(|t| genus_ge2_predicate(&t.table), |_| vec![2])
        .into_iter()
        .map(|s| ge2_job(TheoremId::GenusGe2, s, opts.budget, ""))
        .collect()
}

fn expansions(opts: VerifyOptions) -> Vec<Job> {
    let cases: Vec<(&'static str, SimpleGraph, usize, SimpleGraph)> = vec![
        (
            "K_2",
            SimpleGraph::complete(2),
            5,
            SimpleGraph::complete_bipartite(5, 5),
        ),
        (
            "K_5",
            SimpleGraph::complete(5),
            2,
            SimpleGraph::complete_multipartite(&[2; 5]),
        ),
        (
            "K_{1,3}",
            SimpleGraph::complete_bipartite(1, 3),
            3,
            SimpleGraph::complete_bipartite(3, 9),
        ),
        (
            "K_{2,3}",
            SimpleGraph::complete_bipartite(2, 3),
            2,
            SimpleGraph::complete_bipartite(4, 6),
        ),
    ];
    cases
        .into_iter()
        .map(|(name, base, t, expected)| {
            let base = Arc::new(base);
            job(move || {
                let g = expand(&base, t).expect("small expansion");
                let shape = graph_isomorphism(&g, &expected).is_some();
                let (sub, why) = subgraph_lower_bound(&g);
                let mut facts = graph_facts(&g);
                let mut computed = Some(shape && sub >= 2);
                let mut note = format!("subgraph bound {sub} from {why}");
                if g.edge_count() <= crate::genus::EXHAUSTIVE_EDGE_LIMIT {
                    let b = exact_genus(&g, opts.budget);
                    facts.genus = Some(summary(&b));
                    note.push_str(&format!("; search gives {}..{:?}", b.lower, b.upper));
                    computed = computed.map(|c| c && b.lower >= 2);
                }
                let mut subject = Subject::ring(TheoremId::ExpansionGenus, name);
                subject.ideal_size = t;
                subject.report(
                    Some(facts),
                    format!("genus of {name}^({t}) ≥ 2"),
                    true,
                    computed,
                    note,
                )
            })
        })
        .collect()
}

fn quotient_structure() -> Vec<Job> {
    proper_nonzero_pairs()
        .map(|(i, _)| {
            job(move || {
                let p = pair(i);
                let g = p.graph();
                let q = &p.quotient.table;
                let t = p.ideal.len();
                let base = zero_divisor_graph(q);
                let mut failures = Vec::new();
                if g.order() != t * base.order() {
                    failures.push("vertex count");
                }
                let e = expand(&base, t).expect("within the vertex limit");
                if !e.is_subgraph_of(&g) {
                    failures.push("expansion is not a subgraph");
                }
                if (e.edges() == g.edges()) != is_radical(p.ring, &p.ideal) {
                    failures.push("expansion equality differs from radicality");
                }
                let synth = synthesized(q, t);
                if graph_isomorphism(&g, &synth).is_none() {
                    failures.push("graph differs from the synthesized one");
                }
                Subject::of_pair(TheoremId::QuotientStructure, p).report(
                    Some(graph_facts(&g)),
                    "|Γ_I| = |I|·|Γ(R/I)|, expansion ⊆ Γ_I with equality iff radical, Γ_I ≅ Γ_{0×Z_t}(R/I×Z_t)",
                    true,
                    Some(failures.is_empty()),
                    failures.join("; "),
                )
            })
        })
        .collect()
}

fn diameter3() -> Vec<Job> {
    proper_nonzero_pairs()
        .map(|(i, _)| {
            job(move || {
                let p = pair(i);
                let g = p.graph();
                let (claim, ok) = if non_prime(p) {
                    (
                        "connected with diameter ≤ 3",
                        g.is_connected() && diameter(&g).is_some_and(|d| d <= 3),
                    )
                } else {
                    ("empty (prime ideal)", g.order() == 0)
                };
                Subject::of_pair(TheoremId::Diameter3, p).report(
                    Some(graph_facts(&g)),
                    claim,
                    true,
                    Some(ok),
                    "",
                )
            })
        })
        .collect()
}

fn girth4() -> Vec<Job> {
    proper_nonzero_pairs()
        .map(|(i, _)| {
            job(move || {
                let p = pair(i);
                let g = p.graph();
                let facts = graph_facts(&g);
                let ok = facts.girth.is_none_or(|c| c <= 4);
                Subject::of_pair(TheoremId::Girth4, p).report(
                    Some(facts),
                    "girth ≤ 4 or infinite",
                    true,
                    Some(ok),
                    "",
                )
            })
        })
        .collect()
}

fn clique_primes() -> Vec<Job> {
    catalog_pairs()
        .iter()
        .enumerate()
        .filter(|(_, p)| is_radical(p.ring, &p.ideal))
        .filter_map(|(i, p)| {
            let primes = minimal_primes_over(p.ring, &p.ideal)
                .expect("radical")
                .len();
            (primes >= 2).then(|| {
                job(move || {
                    let p = pair(i);
                    let g = p.graph();
                    let facts = graph_facts(&g);
                    let ok = facts.clique == primes;
                    Subject::of_pair(TheoremId::CliqueMinimalPrimes, p).report(
                        Some(facts),
                        format!("ω = {primes} minimal primes"),
                        true,
                        Some(ok),
                        "",
                    )
                })
            })
        })
        .collect()
}

/// Catalog rings that are local, with `|R/m|` and whether `m² ≠ 0`.
fn local_rings() -> Vec<(usize, usize, bool)> {
    catalog_rings()
        .iter()
        .enumerate()
        .filter_map(|(i, r)| {
            let (local, maximal) = is_local(r);
            if !local {
                return None;
            }
            let m = maximal[0].members();
            let square_nonzero = m.iter().any(|a| m.iter().any(|b| !r.is_zero(r.mul(a, b))));
            Some((i, r.order() / m.len(), square_nonzero))
        })
        .collect()
}

fn local_order_power() -> Vec<Job> {
    local_rings()
        .into_iter()
        .map(|(i, residue, _)| {
            job(move || {
                let r = &catalog_rings()[i];
                let mut power = residue;
                while power < r.order() {
                    power *= residue;
                }
                Subject::ring(TheoremId::LocalOrderPower, r.name()).report(
                    None,
                    format!("|R| = {} is a power of |R/m| = {residue}", r.order()),
                    true,
                    Some(power == r.order()),
                    "",
                )
            })
        })
        .collect()
}

fn non_reduced_residue(opts: VerifyOptions) -> Vec<Job> {
    local_rings()
        .into_iter()
        .filter(|&(_, residue, sq)| sq && residue >= 3)
        .map(|(i, _, _)| {
            job(move || {
                let r = &catalog_rings()[i];
                let g = expand(&zero_divisor_graph(r), 2).expect("within the vertex limit");
                let b = bounds_to(&g, 2, opts.budget);
                let mut facts = graph_facts(&g);
                facts.genus = Some(summary(&b));
                Subject::ring(TheoremId::NonReducedResidueField, r.name()).report(
                    Some(facts),
                    "genus of Γ(R)^(2) ≥ 2",
                    true,
                    at_least(&b, 2),
                    "",
                )
            })
        })
        .collect()
}

fn acyclic_local() -> Vec<Job> {
    local_rings()
        .into_iter()
        .filter(|&(_, _, sq)| sq)
        .filter(|&(i, _, _)| girth(&zero_divisor_graph(&catalog_rings()[i])).is_none())
        .map(|(i, residue, _)| {
            job(move || {
                let r = &catalog_rings()[i];
                Subject::ring(TheoremId::AcyclicLocal, r.name()).report(
                    Some(graph_facts(&zero_divisor_graph(r))),
                    "|R/m| = 2",
                    true,
                    Some(residue == 2),
                    "",
                )
            })
        })
        .collect()
}

fn boolean_factor() -> Vec<Job> {
    local_rings()
        .into_iter()
        .filter(|&(i, _, _)| 2 * catalog_rings()[i].order() <= crate::ring::MAX_ORDER)
        .map(|(i, _, _)| {
            job(move || {
                let entry = &crate::ring::catalog()[i];
                let s = &catalog_rings()[i];
                let name = format!("Z_2×{}", entry.name);
                let r = build_ring(&RingSpec::product(vec![
                    RingSpec::zmod(2),
                    entry.spec.clone(),
                ]))
                .expect("products of catalog rings build");
                let g = zero_divisor_graph(&r);
                let small = zero_divisor_graph(s).order() <= 1;
                let (claim, ok) = if small {
                    (
                        "|Γ(S)| ≤ 1: planar without cycles",
                        is_planar(&g) && girth(&g).is_none(),
                    )
                } else {
                    let k3 = find_complete_subgraph(&g, 3).expect("guarded").is_some();
                    let k23 = find_biclique(&g, 2, 3).expect("m = 2").is_some();
                    ("|Γ(S)| ≥ 2: contains K_3 and K_{2,3}", k3 && k23)
                };
                Subject::ring(TheoremId::BooleanFactorLocal, &name).report(
                    Some(graph_facts(&g)),
                    claim,
                    true,
                    Some(ok),
                    "",
                )
            })
        })
        .collect()
}

fn triangle_local() -> Vec<Job> {
    local_rings()
        .into_iter()
        .filter(|&(i, _, _)| !catalog_rings()[i].is_field())
        .map(|(i, _, sq)| {
            job(move || {
                let r = &catalog_rings()[i];
                let g = zero_divisor_graph(r);
                let k3 = graph_isomorphism(&g, &SimpleGraph::complete(3)).is_some();
                let listed = matches_any(r, &clique3_targets()[2..]);
                let note = if k3 {
                    format!("m² = 0: {}", !sq)
                } else {
                    String::new()
                };
                Subject::ring(TheoremId::TriangleLocal, r.name()).report(
                    Some(graph_facts(&g)),
                    "Γ(R) = K_3 (and then m² = 0)",
                    listed,
                    Some(k3 && !sq),
                    note,
                )
            })
        })
        .collect()
}

const FACTOR_POOL: [&str; 6] = ["Z_2", "Z_3", "Z_4", "Z_2[x]/(x^2)", "F_4", "Z_5"];
const MANY_FACTORS_MAX_ORDER: usize = 48;

fn factor_products() -> Vec<Vec<usize>> {
    let order = |f: &[usize]| -> usize {
        f.iter()
            .map(|&i| {
                lookup(FACTOR_POOL[i])
                    .expect("pool entries are in the catalog")
                    .order
            })
            .product()
    };
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..FACTOR_POOL.len()).map(|i| vec![i]).collect();
    while let Some(f) = stack.pop() {
        if f.len() >= 3 {
            out.push(f.clone());
        }
        let last = *f.last().unwrap();
        for j in last..FACTOR_POOL.len() {
            let mut g = f.clone();
            g.push(j);
            if order(&g) <= MANY_FACTORS_MAX_ORDER {
                stack.push(g);
            }
        }
    }
    out.sort_by_key(|f| (f.len(), f.clone()));
    out
}

fn many_factors(opts: VerifyOptions) -> Vec<Job> {
    factor_products()
        .into_iter()
        .map(|factors| {
            job(move || {
                let names: Vec<&str> = factors.iter().map(|&i| FACTOR_POOL[i]).collect();
                let spec = RingSpec::product(
                    names
                        .iter()
                        .map(|n| lookup(n).unwrap().spec.clone())
                        .collect(),
                );
                let r = build_ring(&spec).expect("small products build");
                let g = expand(&zero_divisor_graph(&r), 2).expect("within the vertex limit");
                let b = bounds_to(&g, 2, opts.budget);
                let mut facts = graph_facts(&g);
                facts.genus = Some(summary(&b));
                let allowed = names.len() == 3 && names.iter().all(|n| *n == "Z_2");
                Subject::ring(TheoremId::ManyFactors, &names.join("×")).report(
                    Some(facts),
                    "genus of Γ(R)^(2) ≤ 1",
                    allowed,
                    at_least(&b, 2).map(|ge2| !ge2),
                    "",
                )
            })
        })
        .collect()
}

fn catalog_target(name: &str) -> usize {
    let table = build_ring(&lookup(name).expect("named in the catalog").spec)
        .expect("catalog entries build");
    quotient_targets()
        .iter()
        .position(|t| t.table.order() == table.order() && iso_check(&t.table, &table).is_some())
        .expect("every catalog ring is a target")
}

fn genus_one_examples(opts: VerifyOptions) -> Vec<Job> {
    let cases = [
        ("Z_2×Z_2×Z_2", 2),
        ("Z_16", 2),
        ("Z_8", 3),
        ("Z_2[x]/(x^3)", 3),
        ("Z_4[x]/(x^2-2,x^3)", 3),
        ("Z_9", 3),
        ("Z_3[x]/(x^2)", 3),
    ];
    cases
        .into_iter()
        .map(|(name, size)| {
            job(move || {
                let s = Source::Synth(catalog_target(name), size);
                let g = s.graph();
                let b = bounds_to(&g, 2, opts.budget);
                let mut facts = graph_facts(&g);
                facts.genus = Some(summary(&b));
                let k6 = graph_isomorphism(&g, &SimpleGraph::complete(6)).is_some();
                s.subject(TheoremId::GenusOneExamples).report(
                    Some(facts),
                    "genus = 1",
                    true,
                    exactly_one(&g, &b),
                    format!("Γ_I(R) ≅ K_6: {k6}"),
                )
            })
        })
        .collect()
}

/// The graph built from the edge list of the attachment lemma: `u = 0`,
/// `u' = 1`, `v_i = 1 + i`, `v_i' = 7 + i`.
pub fn attachment_graph() -> SimpleGraph {
    let v = |i: usize| 1 + i;
    let vp = |i: usize| 7 + i;
    let mut g = SimpleGraph::new(14).expect("small graph");
    g.add_edge(0, 1);
    for i in 1..=6 {
        for a in [0, 1] {
            g.add_edge(a, v(i));
            g.add_edge(a, vp(i));
        }
    }
    for (a, b) in [
        (v(5), vp(5)),
        (v(5), v(6)),
        (v(5), vp(6)),
        (vp(5), v(6)),
        (vp(5), vp(6)),
        (v(6), vp(6)),
    ] {
        g.add_edge(a, b);
    }
    for i in [1, 3] {
        for a in [v(i), vp(i)] {
            for b in [v(i + 1), vp(i + 1)] {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// The seven local quotients of order 16 with `γ(Γ_I(R)) ≥ 2`, with the
/// nilpotent elements `u, v_5, v_6` named for each.
pub const GENUS_TWO_QUOTIENTS: [(&str, [&str; 3]); 7] = [
    ("Z_4[x,y]/(x^2,y^2,xy-2)", ["2", "x+y", "2+x+y"]),
    ("Z_2[x,y]/(x^2,y^2)", ["xy", "x+y", "x+y+xy"]),
    ("Z_4[x]/(x^2)", ["2x", "2+x", "2+3x"]),
    ("Z_2[x,y]/(x^3,xy,y^2-x^2)", ["x^2", "x+y", "x+y+x^2"]),
    ("Z_4[x]/(x^3,x^2-2x)", ["2x", "2", "2+2x"]),
    ("Z_4[x,y]/(x^3,x^2-2,xy,y^2-2)", ["2", "x+y", "2+x+y"]),
    ("Z_8[x]/(x^2-4,2x)", ["4", "2+x", "6+x"]),
];

fn attachment(opts: VerifyOptions) -> Vec<Job> {
    let mut out: Vec<Job> = vec![job(move || {
        let h = attachment_graph();
        let k4 = [6, 12, 7, 13];
        let bound = k4_attachment_bound(&h, &k4);
        let rest: Vec<usize> = (0..14).filter(|v| !k4.contains(v)).collect();
        let h1 = h.induced(&rest);
        let search = embeds_within(&h, 1, opts.budget);
        let computed = match (&bound, &search) {
            (_, Err(_)) => None,
            (Ok(b), Ok(None)) => {
                Some(*b >= 2 && h1.order() == 10 && h1.edge_count() == 25 && !is_planar(&h1))
            }
            _ => Some(false),
        };
        let note = format!(
            "attachment bound {bound:?}; H_1 has {} vertices, {} edges; genus-1 search: {}",
            h1.order(),
            h1.edge_count(),
            match search {
                Ok(None) => "refuted".to_string(),
                Ok(Some(_)) => "embedding found".to_string(),
                Err(n) => format!("out of budget after {n} nodes"),
            }
        );
        let mut facts = graph_facts(&h);
        facts.genus = Some(summary(&genus_lower_bound(&h)));
        Subject::ring(TheoremId::AttachmentBound, "H").report(
            Some(facts),
            "genus ≥ 2",
            true,
            computed,
            note,
        )
    })];
    for (name, elems) in GENUS_TWO_QUOTIENTS {
        out.push(job(move || {
            let t = catalog_target(name);
            let table = &target(t).table;
            let g = synthesized(table, 2);
            let find = |x: &str, a: usize| {
                let label = format!("({x},{a})");
                g.labels().iter().position(|l| *l == label)
            };
            let nil2 = elems.iter().all(|e| {
                table
                    .elem_by_label(e)
                    .is_some_and(|x| table.nilpotency_index(x) == Some(2))
            });
            let k4: Option<Vec<usize>> =
                [(elems[1], 0), (elems[1], 1), (elems[2], 0), (elems[2], 1)]
                    .iter()
                    .map(|&(e, a)| find(e, a))
                    .collect();
            let bound = k4.as_ref().map(|k| k4_attachment_bound(&g, k));
            let ok = nil2 && matches!(bound, Some(Ok(b)) if b >= 2);
            Source::Synth(t, 2)
                .subject(TheoremId::AttachmentBound)
                .report(
                Some(graph_facts(&g)),
                "u, v_5, v_6 square to zero and the K_4 on v_5, v_5', v_6, v_6' gives genus ≥ 2",
                true,
                Some(ok),
                format!("nilpotency 2: {nil2}; bound {bound:?}"),
            )
        }));
    }
    out
}

fn genus_two_examples(opts: VerifyOptions) -> Vec<Job> {
    GENUS_TWO_QUOTIENTS
        .iter()
        .map(|&(name, _)| {
            job(move || {
                let s = Source::Synth(catalog_target(name), 2);
                let g = s.graph();
                let base = zero_divisor_graph(&s.quotient().table).order();
                let b = bounds_to(&g, 2, opts.budget);
                let mut facts = graph_facts(&g);
                facts.genus = Some(summary(&b));
                let computed = at_least(&b, 2).map(|ge2| ge2 && base == 7);
                s.subject(TheoremId::GenusTwoExamples).report(
                    Some(facts),
                    "|Γ(R/I)| = 7 and genus ≥ 2",
                    true,
                    computed,
                    "",
                )
            })
        })
        .collect()
}

fn quotient_genus_two(opts: VerifyOptions) -> Vec<Job> {
    non_field_targets()
        .filter(|(_, t)| genus_lower_bound(&zero_divisor_graph(&t.table)).lower >= 2)
        .map(|(i, _)| {
            ge2_job(
                TheoremId::QuotientGenusTwo,
                Source::Synth(i, 2),
                opts.budget,
                "γ(Γ(R/I)) ≥ 2",
            )
        })
        .collect()
}

fn residue_two_genus_one(opts: VerifyOptions) -> Vec<Job> {
    non_field_targets()
        .filter(|(_, t)| {
            let (local, maximal) = is_local(&t.table);
            local
                && t.table.order() == 2 * maximal[0].len()
                && !is_planar(&zero_divisor_graph(&t.table))
        })
        .map(|(i, _)| {
            job(move || {
                let s = Source::Synth(i, 2);
                let g = s.graph();
                let b = bounds_to(&g, 2, opts.budget);
                let mut facts = graph_facts(&g);
                facts.genus = Some(summary(&b));
                let subject = s.subject(TheoremId::ResidueTwoGenusOne);
                let claim = "γ(Γ(R/I)) = 1 implies genus ≥ 2";
                if at_least(&b, 2) == Some(true) {
                    return subject.report(
                        Some(facts),
                        claim,
                        true,
                        Some(true),
                        "conclusion holds",
                    );
                }
                let base = zero_divisor_graph(&target(i).table);
                let hyp = crate::genus::exact_genus_with(
                    &base,
                    crate::genus::GenusOptions {
                        budget: opts.budget,
                        edge_limit: usize::MAX,
                        goal: Some(2),
                    },
                );
                let (computed, note) = match exactly_one(&base, &hyp) {
                    Some(true) => (at_least(&b, 2), "γ(Γ(R/I)) = 1".to_string()),
                    Some(false) => (
                        Some(true),
                        format!("hypothesis fails: γ(Γ(R/I)) ≥ {}", hyp.lower),
                    ),
                    None => (None, "γ(Γ(R/I)) undecided".to_string()),
                };
                subject.report(Some(facts), claim, true, computed, note)
            })
        })
        .collect()
}
