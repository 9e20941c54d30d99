//! Orientable genus: closed formulas, planarity, lower bounds and exact
//! computation by embedding search.

mod planar;
mod rotation;
mod search;

pub use planar::is_planar;
pub use rotation::{face_trace, EmbeddingCertificate, RotationSystem};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{clique_number, max_biclique, SimpleGraph, CLIQUE_GUARD};
use search::{embed_at_most, Outcome};

/// Default node budget for [`exact_genus`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Graphs with more edges than this get bounds only.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 40;

fn ceil_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// `γ(K_n) = ⌈(n−3)(n−4)/12⌉`, and 0 for `n ≤ 4`.
pub fn genus_complete(n: usize) -> usize {
    if n <= 4 {
        return 0;
    }
    let n = n as i64;
    ceil_div((n - 3) * (n - 4), 12) as usize
}

/// `γ(K_{m,n}) = ⌈(m−2)(n−2)/4⌉`, and 0 when a side has at most 2 vertices.
pub fn genus_biclique(m: usize, n: usize) -> usize {
    if m <= 2 || n <= 2 {
        return 0;
    }
    ceil_div((m as i64 - 2) * (n as i64 - 2), 4) as usize
}

/// Euler-formula bound for a connected graph: `⌈(E − 3V + 6)/6⌉`, and
/// `⌈(E − 2V + 4)/4⌉` when there is no triangle. 0 for graphs with fewer
/// than three vertices or more than one component.
pub fn euler_lower_bound(g: &SimpleGraph) -> usize {
    let (v, e) = (g.order() as i64, g.edge_count() as i64);
    if v < 3 || !g.is_connected() {
        return 0;
    }
    let mut b = ceil_div(e - 3 * v + 6, 6);
    if !g.has_triangle() {
        b = b.max(ceil_div(e - 2 * v + 4, 4));
    }
    b.max(0) as usize
}

/// Best of `γ(K_ω)` and `γ(K_{m,n})` over the largest `K_{m,n}` found for
/// `m ∈ {3, 4, 5}`, with the subgraph that gives it.
pub fn subgraph_lower_bound(g: &SimpleGraph) -> (usize, String) {
    let mut best = (0, String::from("none"));
    if g.order() <= CLIQUE_GUARD {
        let w = clique_number(g).expect("guarded by CLIQUE_GUARD");
        if genus_complete(w) > 0 {
            best = (genus_complete(w), format!("K_{w}"));
        }
    }
    for m in 3..=5 {
        if let Some((_, b)) = max_biclique(g, m).expect("m within the biclique guard") {
            let n = b.len();
            let val = genus_biclique(m, n);
            if val > best.0 {
                best = (val, format!("K_{{{m},{n}}}"));
            }
        }
    }
    best
}

/// A proven interval for the genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusBounds {
    pub lower: usize,
    pub upper: Option<usize>,
    /// Names of the arguments behind `lower`.
    pub lower_provenance: Vec<String>,
    /// Embedding realising `upper`, when one was found.
    pub certificate: Option<EmbeddingCertificate>,
    /// Search nodes spent.
    pub nodes: u64,
}

impl GenusBounds {
    pub fn exact(&self) -> Option<usize> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }

    fn raise(&mut self, value: usize, why: impl Into<String>) {
        if value > self.lower {
            self.lower = value;
            self.lower_provenance = vec![why.into()];
        } else if value == self.lower && value > 0 {
            self.lower_provenance.push(why.into());
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GenusOptions {
    pub budget: u64,
    pub edge_limit: usize,
    /// Stop deepening a component once its lower bound reaches this value.
    pub goal: Option<usize>,
}

impl Default for GenusOptions {
    fn default() -> Self {
        GenusOptions {
            budget: DEFAULT_BUDGET,
            edge_limit: EXHAUSTIVE_EDGE_LIMIT,
            goal: None,
        }
    }
}

/// Lower bound from Euler, forced subgraphs and planarity, without search.
pub fn genus_lower_bound(g: &SimpleGraph) -> GenusBounds {
    let comps = g.components();
    let mut total = GenusBounds {
        lower: 0,
        upper: None,
        lower_provenance: Vec::new(),
        certificate: None,
        nodes: 0,
    };
    for comp in &comps {
        let c = g.induced(comp);
        let b = component_lower_bound(&c);
        total.lower += b.lower;
        for p in b.lower_provenance {
            if !total.lower_provenance.contains(&p) {
                total.lower_provenance.push(p);
            }
        }
    }
    total
}

fn component_lower_bound(g: &SimpleGraph) -> GenusBounds {
    let mut b = basic_lower_bound(g);
    if b.lower == 1 {
        if let Some((value, k4)) = attachment_lower_bound(g).filter(|&(v, _)| v > 1) {
            b.raise(value, format!("K_4 attachment at {k4:?}"));
        }
    }
    b
}

fn basic_lower_bound(g: &SimpleGraph) -> GenusBounds {
    let mut b = GenusBounds {
        lower: 0,
        upper: None,
        lower_provenance: Vec::new(),
        certificate: None,
        nodes: 0,
    };
    if !is_planar(g) {
        b.raise(1, "non-planar");
    }
    b.raise(euler_lower_bound(g), "euler");
    let (s, why) = subgraph_lower_bound(g);
    b.raise(s, format!("{why} subgraph"));
    b
}

/// Genus of `g` with the default budget and edge limit.
pub fn exact_genus(g: &SimpleGraph, budget: u64) -> GenusBounds {
    exact_genus_with(
        g,
        GenusOptions {
            budget,
            ..GenusOptions::default()
        },
    )
}

/// Genus of `g`: per component, iterative deepening from the best lower
/// bound. The genus of a disconnected graph is the sum over components.
pub fn exact_genus_with(g: &SimpleGraph, opts: GenusOptions) -> GenusBounds {
    let mut budget = opts.budget;
    let mut total = GenusBounds {
        lower: 0,
        upper: Some(0),
        lower_provenance: Vec::new(),
        certificate: None,
        nodes: 0,
    };
    let mut rotation = vec![Vec::new(); g.order()];
    let mut have_all = true;
    for comp in g.components() {
        let c = g.induced(&comp);
        let start = budget;
        let b = component_genus(&c, opts, &mut budget);
        total.nodes += start - budget;
        total.lower += b.lower;
        total.upper = total.upper.zip(b.upper).map(|(x, y)| x + y);
        for p in b.lower_provenance {
            if !total.lower_provenance.contains(&p) {
                total.lower_provenance.push(p);
            }
        }
        match b.certificate {
            Some(cert) => {
                for (i, rot) in cert.rotation.0.into_iter().enumerate() {
                    rotation[comp[i]] = rot.into_iter().map(|w| comp[w]).collect();
                }
            }
            None => have_all = false,
        }
    }
    if have_all {
        let cert = face_trace(g, &RotationSystem(rotation)).expect("merged rotation is valid");
        debug_assert_eq!(Some(cert.genus), total.upper);
        total.certificate = Some(cert);
    }
    total
}

fn component_genus(g: &SimpleGraph, opts: GenusOptions, budget: &mut u64) -> GenusBounds {
    if g.order() < 3 {
        let cert = face_trace(g, &RotationSystem::sorted(g)).expect("sorted rotation is valid");
        return GenusBounds {
            lower: 0,
            upper: Some(0),
            lower_provenance: Vec::new(),
            certificate: Some(cert),
            nodes: 0,
        };
    }
    let mut b = component_lower_bound(g);
    if g.edge_count() > opts.edge_limit {
        if b.lower == 0 {
            b.upper = Some(0);
            if let Outcome::Found(rot) = embed_at_most(g, 0, budget) {
                b.certificate = Some(face_trace(g, &rot).expect("search returns valid rotations"));
            }
        }
        return b;
    }
    let mut t = b.lower;
    loop {
        if opts.goal.is_some_and(|goal| b.lower >= goal) {
            return b;
        }
        match embed_at_most(g, t, budget) {
            Outcome::Found(rot) => {
                let cert = face_trace(g, &rot).expect("search returns valid rotations");
                debug_assert!(cert.genus <= t);
                b.upper = Some(cert.genus);
                b.certificate = Some(cert);
                return b;
            }
            Outcome::Refuted => {
                t += 1;
                b.raise(t, format!("no genus-{} embedding (exhaustive)", t - 1));
            }
            Outcome::OutOfBudget => return b,
        }
    }
}

/// Runs the embedding search alone on a connected graph: `Some(rotation)`
/// if `g` embeds with genus at most `genus`, `Ok(None)` if the exhaustive
/// search refutes it, and `Err(nodes)` when the budget runs out.
pub fn embeds_within(
    g: &SimpleGraph,
    genus: usize,
    budget: u64,
) -> std::result::Result<Option<EmbeddingCertificate>, u64> {
    if g.order() < 3 {
        return Ok(Some(
            face_trace(g, &RotationSystem::sorted(g)).expect("sorted rotation is valid"),
        ));
    }
    let mut left = budget;
    match embed_at_most(g, genus, &mut left) {
        Outcome::Found(rot) => Ok(Some(
            face_trace(g, &rot).expect("search returns valid rotations"),
        )),
        Outcome::Refuted => Ok(None),
        Outcome::OutOfBudget => Err(budget - left),
    }
}

/// Lower bound on `γ(G)` from a `K_4` attached to the rest of the graph.
///
/// If `g` is connected, `k4` induces `K_4`, every vertex of `k4` has a
/// neighbour outside it and the rest `G₂ = G − k4` is nonempty and
/// connected, then `γ(G) > γ(G₂)`; the result is `1 +` a lower bound for
/// `γ(G₂)` from planarity, Euler and forced subgraphs. A disconnected `G₂`
/// can sit in several faces (`K_4` plus one vertex in the outer face joined
/// to three corners and one inside a triangle joined to the fourth is
/// planar), so it is rejected.
pub fn k4_attachment_bound(g: &SimpleGraph, k4: &[usize]) -> Result<usize> {
    let fail = |why: &str| Err(Error::HypothesisNotMet(why.to_string()));
    if !g.is_connected() {
        return fail("graph is not connected");
    }
    let mut set = k4.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() != 4 || set.iter().any(|&v| v >= g.order()) {
        return fail("need four distinct vertices");
    }
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if !g.has_edge(u, v) {
                return fail("the four vertices do not induce K_4");
            }
        }
    }
    let rest: Vec<usize> = (0..g.order()).filter(|v| !set.contains(v)).collect();
    if rest.is_empty() {
        return fail("nothing outside the K_4");
    }
    if set.iter().any(|&u| rest.iter().all(|&w| !g.has_edge(u, w))) {
        return fail("a K_4 vertex has no edge to the rest");
    }
    let g2 = g.induced(&rest);
    if !g2.is_connected() {
        return fail("the rest of the graph is not connected");
    }
    Ok(1 + basic_lower_bound(&g2).lower)
}

/// Cap on the `K_4`s tried by [`attachment_lower_bound`].
const ATTACHMENT_TRIES: usize = 5000;

/// Best [`k4_attachment_bound`] over the `K_4`s of a connected graph, in
/// lexicographic order, with the `K_4` that gives it.
pub fn attachment_lower_bound(g: &SimpleGraph) -> Option<(usize, [usize; 4])> {
    if !g.is_connected() {
        return None;
    }
    let mut best: Option<(usize, [usize; 4])> = None;
    let mut tries = 0;
    'outer: for a in 0..g.order() {
        let na = g.neighbors(a).above(a);
        for b in na.iter() {
            let nb = na.and(g.neighbors(b)).above(b);
            for c in nb.iter() {
                let nc = nb.and(g.neighbors(c)).above(c);
                for d in nc.iter() {
                    tries += 1;
                    if tries > ATTACHMENT_TRIES {
                        break 'outer;
                    }
                    if let Ok(v) = k4_attachment_bound(g, &[a, b, c, d]) {
                        if best.is_none_or(|(w, _)| v > w) {
                            best = Some((v, [a, b, c, d]));
                        }
                    }
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        let kn: Vec<usize> = (1..=9).map(genus_complete).collect();
        assert_eq!(kn, [0, 0, 0, 0, 1, 1, 1, 2, 3]);
        assert_eq!(genus_biclique(4, 4), 1);
        for n in 3..=6 {
            assert_eq!(genus_biclique(3, n), 1);
        }
        assert_eq!(genus_biclique(2, 100), 0);
        assert_eq!(genus_biclique(4, 6), 2);
        assert_eq!(genus_biclique(5, 5), 3);
    }

    #[test]
    fn euler_bounds() {
        assert_eq!(euler_lower_bound(&SimpleGraph::complete(5)), 1);
        assert_eq!(euler_lower_bound(&SimpleGraph::complete_bipartite(3, 3)), 1);
        assert_eq!(euler_lower_bound(&SimpleGraph::path(7)), 0);
    }

    #[test]
    fn subgraph_bounds() {
        let (b, why) = subgraph_lower_bound(&SimpleGraph::complete_bipartite(5, 5));
        assert_eq!((b, why.as_str()), (3, "K_{5,5}"));
        assert_eq!(subgraph_lower_bound(&SimpleGraph::path(3)).0, 0);
    }

    #[test]
    fn small_exact() {
        for n in 3..=7 {
            let b = exact_genus(&SimpleGraph::complete(n), DEFAULT_BUDGET);
            assert_eq!(b.exact(), Some(genus_complete(n)), "K_{n}");
            assert!(b.certificate.unwrap().verify(&SimpleGraph::complete(n)));
        }
        let b = exact_genus(&SimpleGraph::complete_bipartite(2, 4), DEFAULT_BUDGET);
        assert_eq!(b.exact(), Some(0));
    }

    #[test]
    fn disconnected_sums() {
        let mut g = SimpleGraph::new(10).unwrap();
        for (u, v) in SimpleGraph::complete(5).edges() {
            g.add_edge(u, v);
            g.add_edge(u + 5, v + 5);
        }
        let b = exact_genus(&g, DEFAULT_BUDGET);
        assert_eq!(b.exact(), Some(2));
        assert!(b.certificate.unwrap().verify(&g));
    }

    #[test]
    fn attachment() {
        let k5 = SimpleGraph::complete(5);
        assert_eq!(k4_attachment_bound(&k5, &[0, 1, 2, 3]).unwrap(), 1);
        let path = SimpleGraph::path(5);
        assert!(matches!(
            k4_attachment_bound(&path, &[0, 1, 2, 3]),
            Err(Error::HypothesisNotMet(_))
        ));
        // K_4 on 0..4, vertex 4 joined to 0,1,2 and vertex 5 joined to 3: planar
        let g = SimpleGraph::complete(4);
        let mut h = SimpleGraph::new(6).unwrap();
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(4, 0);
        h.add_edge(4, 1);
        h.add_edge(4, 2);
        h.add_edge(5, 3);
        assert!(is_planar(&h));
        assert!(k4_attachment_bound(&h, &[0, 1, 2, 3]).is_err());
    }
}
