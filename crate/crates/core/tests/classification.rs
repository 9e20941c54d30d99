use idealgraph::classify::{
    catalog_pairs, genus_one_clique3_predicate, verify, TheoremId, VerifyOptions,
};
use idealgraph::genus::{exact_genus, is_planar, DEFAULT_BUDGET};
use idealgraph::graph::{
    blowup_graph, clique_number, graph_isomorphism, zero_divisor_graph, SimpleGraph,
};
use idealgraph::ring::{build_ring, iso_check, lookup, RingSpec, RingTable};

fn ring(name: &str) -> RingTable {
    build_ring(&lookup(name).unwrap().spec).unwrap()
}

#[test]
fn counts_of_the_sweep() {
    let pairs = catalog_pairs();
    let nonzero = pairs.iter().filter(|p| !p.ideal.is_zero()).count();
    assert_eq!(nonzero, 317);
    assert_eq!(
        verify(TheoremId::Diameter3, VerifyOptions::default()).len(),
        317
    );
}

/// Order-16 chain rings whose zero-divisor graph, with the same vertices
/// squaring to zero, matches that of `Z_16`.
const Z16_LOOKALIKES: [&str; 4] = [
    "Z_2[x]/(x^4)",
    "Z_4[x]/(x^2-2,x^4)",
    "Z_4[x]/(x^3-2,x^4)",
    "Z_4[x]/(x^3+x^2-2,x^4)",
];

#[test]
fn quotients_sharing_the_graph_of_z16_have_genus_one() {
    let z16 = ring("Z_16");
    let reference = blowup_graph(&z16, 2).unwrap();
    for name in Z16_LOOKALIKES {
        let q = ring(name);
        assert!(iso_check(&q, &z16).is_none(), "{name}");
        assert_eq!(clique_number(&zero_divisor_graph(&q)).unwrap(), 3);
        let g = blowup_graph(&q, 2).unwrap();
        assert!(graph_isomorphism(&g, &reference).is_some(), "{name}");
        let b = exact_genus(&g, DEFAULT_BUDGET);
        assert_eq!(b.exact(), Some(1), "{name}");
        assert!(b.certificate.unwrap().verify(&g));
        // The stated list leaves these out.
        assert!(!genus_one_clique3_predicate(&q, 2).unwrap());
    }
}

#[test]
fn clique3_sweep_disagrees_only_on_lookalikes() {
    let reports = verify(TheoremId::GenusOneClique3, VerifyOptions::default());
    let bad: Vec<_> = reports.iter().filter(|r| !r.agrees).collect();
    assert_eq!(bad.len(), 10);
    for r in bad {
        assert_eq!(r.ideal_size, 2);
        assert_eq!(r.computed, Some(true));
        assert!(
            Z16_LOOKALIKES.contains(&r.quotient.as_str()),
            "{}",
            r.quotient
        );
        assert!(r.note.contains("Z_16"));
    }
    assert!(reports.iter().all(|r| !r.inconclusive()));
}

#[test]
fn k6_instances_of_the_genus_one_examples() {
    // Both rings with `Γ = K_2` on square-zero vertices give `K_6` at |I| = 3.
    for name in ["Z_9", "Z_3[x]/(x^2)"] {
        let g = blowup_graph(&ring(name), 3).unwrap();
        assert!(
            graph_isomorphism(&g, &SimpleGraph::complete(6)).is_some(),
            "{name}"
        );
    }
    // `Z_2[x]/(x^3)` has `Γ = P_3`, so its graph at |I| = 3 has 9 vertices.
    let g = blowup_graph(&ring("Z_2[x]/(x^3)"), 3).unwrap();
    assert_eq!(g.order(), 9);
    assert_eq!(exact_genus(&g, DEFAULT_BUDGET).exact(), Some(1));
}

#[test]
fn two_by_two_quotient_gives_a_biclique() {
    let q = build_ring(&RingSpec::product(vec![
        RingSpec::zmod(2),
        RingSpec::zmod(2),
    ]))
    .unwrap();
    for t in 2..=5 {
        let g = blowup_graph(&q, t).unwrap();
        assert!(graph_isomorphism(&g, &SimpleGraph::complete_bipartite(t, t)).is_some());
        assert!(graph_isomorphism(&g, &SimpleGraph::complete(2 * t)).is_none());
    }
    let g = blowup_graph(&q, 5).unwrap();
    assert!(!is_planar(&g));
    assert_eq!(exact_genus(&g, DEFAULT_BUDGET).lower, 3);
}

#[test]
fn named_nilpotents_of_the_genus_two_quotients() {
    let cases = [
        ("Z_4[x,y]/(x^2,y^2,xy-2)", ["2", "x+y", "2+x+y"]),
        ("Z_2[x,y]/(x^2,y^2)", ["xy", "x+y", "x+y+xy"]),
        ("Z_4[x]/(x^2)", ["2x", "2+x", "2+3x"]),
        ("Z_2[x,y]/(x^3,xy,y^2-x^2)", ["x^2", "x+y", "x+y+x^2"]),
        ("Z_4[x]/(x^3,x^2-2x)", ["2x", "2", "2+2x"]),
        ("Z_4[x,y]/(x^3,x^2-2,xy,y^2-2)", ["2", "x+y", "2+x+y"]),
        ("Z_8[x]/(x^2-4,2x)", ["4", "2+x", "6+x"]),
    ];
    for (name, labels) in cases {
        let t = ring(name);
        assert_eq!(zero_divisor_graph(&t).order(), 7, "{name}");
        let e: Vec<_> = labels.iter().map(|l| t.elem_by_label(l).unwrap()).collect();
        for &a in &e {
            assert!(t.is_zero(t.mul(a, a)), "{name}: {} squared", t.label(a));
        }
        // u annihilates both, and v_5 · v_6 = 0 closes the K_4.
        assert!(
            t.is_zero(t.mul(e[0], e[1])) && t.is_zero(t.mul(e[0], e[2])),
            "{name}"
        );
        assert!(t.is_zero(t.mul(e[1], e[2])), "{name}");
    }
}
