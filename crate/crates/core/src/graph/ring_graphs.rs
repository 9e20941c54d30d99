use super::SimpleGraph;
use crate::error::{Error, Result};
use crate::ideal::{quotient, IdealSet};
use crate::ring::{RingElem, RingTable};

/// `Γ(R)`: nonzero zero-divisors, adjacent when their product is zero.
/// Vertices are in element order.
pub fn zero_divisor_graph(t: &RingTable) -> SimpleGraph {
    let verts: Vec<RingElem> = t
        .zero_divisors()
        .iter()
        .filter(|&a| !t.is_zero(a))
        .collect();
    let mut g = SimpleGraph::with_labels(verts.iter().map(|&a| t.label(a).to_string()).collect())
        .expect("rings have at most 64 elements");
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if t.is_zero(t.mul(a, b)) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// `Γ_I(R)`: elements `x ∉ I` with `xy ∈ I` for some `y ∉ I`, adjacent when
/// `xy ∈ I`. Vertices are ordered by (coset index of `x + I`, element index),
/// so the `k`-th element of the `j`-th vertex coset has index `j·|I| + k`.
pub fn ideal_zero_divisor_graph(t: &RingTable, i: &IdealSet) -> Result<SimpleGraph> {
    if i.is_whole(t) {
        return Err(Error::WholeRingIdeal);
    }
    let q = quotient(t, i)?;
    let outside = t.all().difference(i.members());
    let mut verts: Vec<RingElem> = outside
        .iter()
        .filter(|&x| outside.iter().any(|y| i.contains(t.mul(x, y))))
        .collect();
    verts.sort_by_key(|&x| (q.project(x), x));
    let mut g = SimpleGraph::with_labels(verts.iter().map(|&a| t.label(a).to_string()).collect())?;
    for (a, &x) in verts.iter().enumerate() {
        for (b, &y) in verts.iter().enumerate().skip(a + 1) {
            if i.contains(t.mul(x, y)) {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// `G^(t)`: vertex `w_{ij}` (copy `i` of vertex `j`) has index `j·t + i`;
/// `w_{ij} ~ w_{kl}` iff `j ~ l` in `g`.
pub fn expand(g: &SimpleGraph, t: usize) -> Result<SimpleGraph> {
    assert!(t >= 1, "expansion factor must be positive");
    let n = g.order();
    let labels = (0..n * t)
        .map(|v| format!("{}.{}", g.label(v / t), v % t))
        .collect();
    let mut out = SimpleGraph::with_labels(labels)?;
    for (j, l) in g.edges() {
        for i in 0..t {
            for k in 0..t {
                out.add_edge(j * t + i, l * t + k);
            }
        }
    }
    Ok(out)
}

/// `Γ_{0×A}(Q × A)` for any ring `A` of order `t`, built from `Q` alone.
///
/// `(x, a)(y, b) ∈ 0 × A` iff `xy = 0`, so the graph is `Γ(Q)^(t)` plus
/// every edge inside the fibre of each `x` with `x² = 0`. Vertex order
/// matches [`ideal_zero_divisor_graph`] on an actual product `Q × A`.
pub fn blowup_graph(q: &RingTable, t: usize) -> Result<SimpleGraph> {
    let base = zero_divisor_graph(q);
    let verts: Vec<RingElem> = q
        .zero_divisors()
        .iter()
        .filter(|&a| !q.is_zero(a))
        .collect();
    let mut g = expand(&base, t)?;
    g.set_labels(
        (0..base.order() * t)
            .map(|v| format!("({},{})", base.label(v / t), v % t))
            .collect(),
    );
    for (j, &x) in verts.iter().enumerate() {
        if q.is_zero(q.mul(x, x)) {
            for a in 0..t {
                for b in a + 1..t {
                    g.add_edge(j * t + a, j * t + b);
                }
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_isomorphism;
    use crate::ideal::{enumerate_ideals, generated_ideal};
    use crate::ring::{build_ring, RingSpec};

    fn ring(spec: RingSpec) -> RingTable {
        build_ring(&spec).unwrap()
    }

    #[test]
    fn gamma_z6_is_p3() {
        let g = zero_divisor_graph(&ring(RingSpec::zmod(6)));
        assert_eq!(g.labels(), ["2", "3", "4"]);
        assert_eq!(g.edges(), [(0, 1), (1, 2)]);
        assert_eq!(zero_divisor_graph(&ring(RingSpec::zmod(4))).order(), 1);
        assert_eq!(zero_divisor_graph(&ring(RingSpec::gf(2, 3))).order(), 0);
    }

    #[test]
    fn gamma_i_of_z6_z2() {
        let r = ring(RingSpec::product(vec![
            RingSpec::zmod(6),
            RingSpec::zmod(2),
        ]));
        let i = generated_ideal(&r, &[r.elem_by_label("(0,1)").unwrap()]);
        let g = ideal_zero_divisor_graph(&r, &i).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 8);
        assert!(graph_isomorphism(&g, &SimpleGraph::complete_bipartite(2, 4)).is_some());
        let z = crate::ideal::IdealSet::zero(&r);
        assert_eq!(
            ideal_zero_divisor_graph(&r, &z).unwrap(),
            zero_divisor_graph(&r)
        );
        let whole = crate::ideal::IdealSet::whole(&r);
        assert!(matches!(
            ideal_zero_divisor_graph(&r, &whole),
            Err(Error::WholeRingIdeal)
        ));
    }

    #[test]
    fn z9_with_ideal_of_size_3_is_k6() {
        let r = ring(RingSpec::product(vec![
            RingSpec::zmod(9),
            RingSpec::zmod(3),
        ]));
        let i = generated_ideal(&r, &[r.elem_by_label("(0,1)").unwrap()]);
        let g = ideal_zero_divisor_graph(&r, &i).unwrap();
        assert_eq!(g, {
            let mut k = SimpleGraph::complete(6);
            k.set_labels(g.labels().to_vec());
            k
        });
    }

    #[test]
    fn expansions() {
        let k23 = SimpleGraph::complete_bipartite(2, 3);
        let e = expand(&k23, 2).unwrap();
        assert!(graph_isomorphism(&e, &SimpleGraph::complete_bipartite(4, 6)).is_some());
        let e = expand(&SimpleGraph::complete(5), 2).unwrap();
        assert!(graph_isomorphism(&e, &SimpleGraph::complete_multipartite(&[2; 5])).is_some());
        let p = SimpleGraph::path(3);
        assert_eq!(expand(&p, 1).unwrap().edges(), p.edges());
    }

    #[test]
    fn blowup_matches_real_products() {
        for (q, a) in [
            (RingSpec::zmod(8), RingSpec::zmod(2)),
            (RingSpec::zmod(4), RingSpec::zmod(3)),
            (RingSpec::quotient(2, &["x"], &["x^3"]), RingSpec::zmod(3)),
            (RingSpec::zmod(16), RingSpec::gf(2, 2)),
        ] {
            let qt = ring(q.clone());
            let at = ring(a.clone());
            let r = ring(RingSpec::product(vec![q, a]));
            let gens: Vec<RingElem> = r
                .elements()
                .filter(|&x| r.label(x).starts_with("(0,"))
                .collect();
            let i = generated_ideal(&r, &gens);
            assert_eq!(i.len(), at.order());
            let real = ideal_zero_divisor_graph(&r, &i).unwrap();
            let synth = blowup_graph(&qt, at.order()).unwrap();
            assert_eq!(real.edges(), synth.edges(), "{}", r.name());
        }
    }

    #[test]
    fn every_ideal_of_z12() {
        let r = ring(RingSpec::zmod(12));
        for i in enumerate_ideals(&r).iter().filter(|i| !i.is_whole(&r)) {
            let g = ideal_zero_divisor_graph(&r, i).unwrap();
            let base = zero_divisor_graph(&quotient(&r, i).unwrap().table);
            assert_eq!(g.order(), i.len() * base.order());
        }
    }
}
