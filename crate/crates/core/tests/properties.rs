use idealgraph::classify::catalog_rings;
use idealgraph::genus::{exact_genus, face_trace, genus_lower_bound, is_planar, RotationSystem};
use idealgraph::graph::{
    clique_number, export_json, girth, graph_isomorphism, ideal_zero_divisor_graph, parse_json,
    zero_divisor_graph, SimpleGraph,
};
use idealgraph::ideal::{enumerate_ideals, quotient};
use idealgraph::ring::iso_check;
use proptest::prelude::*;
use proptest::sample::SizeRange;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), SizeRange::from(len..=len)).prop_map(move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(e, _)| *e)
                .collect();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn permuted(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    SimpleGraph::from_edges(g.order(), &edges).unwrap()
}

fn brute_clique(g: &SimpleGraph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&mask| {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            vs.iter()
                .enumerate()
                .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn pair_index() -> impl Strategy<Value = (usize, usize)> {
    (0..catalog_rings().len(), any::<prop::sample::Index>()).prop_map(|(r, i)| {
        let ideals = enumerate_ideals(&catalog_rings()[r]);
        (r, i.index(ideals.len() - 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rotations_satisfy_euler((g, seed) in (graph(9), any::<u64>())) {
        let mut rot = RotationSystem::sorted(&g);
        let mut rng = StdRng::seed_from_u64(seed);
        for list in &mut rot.0 {
            list.shuffle(&mut rng);
        }
        let cert = face_trace(&g, &rot).unwrap();
        let c = g.components().len() as i64;
        let chi = g.order() as i64 - g.edge_count() as i64 + cert.faces as i64;
        prop_assert_eq!(2 * c - chi, 2 * cert.genus as i64);
        prop_assert!(cert.verify(&g));
    }

    #[test]
    fn isomorphism_finds_relabelings((g, perm) in with_permutation(10)) {
        let h = permuted(&g, &perm);
        let map = graph_isomorphism(&g, &h).expect("relabeled graphs are isomorphic");
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn clique_number_matches_brute_force(g in graph(10)) {
        prop_assert_eq!(clique_number(&g).unwrap(), brute_clique(&g));
    }

    #[test]
    fn json_round_trip(g in graph(12)) {
        let back = parse_json(&export_json(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn genus_bounds_are_consistent(g in graph(7)) {
        let b = exact_genus(&g, 1_000_000);
        let genus = b.exact().expect("small graphs are decided");
        prop_assert!(genus_lower_bound(&g).lower <= genus);
        let cycle_rank = g.edge_count() + g.components().len() - g.order();
        prop_assert!(genus <= cycle_rank / 2);
        prop_assert_eq!(b.exact() == Some(0), is_planar(&g));
        let cert = b.certificate.expect("small graphs are decided");
        prop_assert!(cert.verify(&g));
    }

    #[test]
    fn ideal_graph_structure((r, k) in pair_index()) {
        let ring = &catalog_rings()[r];
        let ideal = &enumerate_ideals(ring)[k];
        prop_assume!(!ideal.is_whole(ring) && !ideal.is_zero());
        let g = ideal_zero_divisor_graph(ring, ideal).unwrap();
        let q = quotient(ring, ideal).unwrap();
        prop_assert_eq!(g.order(), ideal.len() * zero_divisor_graph(&q.table).order());
        if let Some(c) = girth(&g) {
            prop_assert!(c <= 4);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_relabeling_is_detected((r, seed) in (0..catalog_rings().len(), any::<u64>())) {
        let ring = &catalog_rings()[r];
        let mut perm: Vec<usize> = (0..ring.order()).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        let other = ring.relabel(&perm);
        let iso = iso_check(ring, &other).expect("relabeling is an isomorphism");
        prop_assert!(iso.verify(ring, &other));
        let (g, h) = (zero_divisor_graph(ring), zero_divisor_graph(&other));
        prop_assert!(graph_isomorphism(&g, &h).is_some());
    }
}
