mod common;

use common::*;
use hyperhopf_core::complexes::{
    euler_char_complex, independence_complex, intersection_graph, is_eulerian_complex,
    is_eulerian_complex_via_mobius, is_flag, minimal_nonfaces, nerve, nonface_hypergraph,
    partition_polynomial, Graph, SimplicialComplex,
};
use hyperhopf_core::euler::is_eulerian;
use hyperhopf_core::hopf::euler_character;
use hyperhopf_core::setfam::VertexSet;
use hyperhopf_core::symfun::chromatic_polynomial;
use proptest::prelude::*;

fn arb_complex(min_n: usize, max_n: usize, max_faces: usize) -> impl Strategy<Value = SimplicialComplex> {
    (min_n..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..1u32 << n, 0..=max_faces).prop_map(move |faces| {
            SimplicialComplex::new(n, faces.into_iter().map(VertexSet::from_bits)).unwrap()
        })
    })
}

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push(vec![u, v]);
            }
            k += 1;
        }
    }
    Graph::from_lists(n, edges).unwrap()
}

/// Faces of `K` listed by brute force: subsets of some maximal face.
fn faces(k: &SimplicialComplex) -> Vec<u32> {
    let maximal = k.maximal_faces();
    (0u32..1 << k.vertex_count())
        .filter(|&m| maximal.iter().any(|f| VertexSet::from_bits(m).is_subset(*f)))
        .collect()
}

fn check_chordality(g: &Graph) {
    let verdict = g.is_chordal();
    let brute = !has_long_induced_cycle(g);
    assert_eq!(verdict.holds(), brute, "{g:?}");
    if let Some(cycle) = verdict.witness {
        assert!(is_chordless_cycle(g, &cycle), "{g:?} {cycle:?}");
    } else {
        let mut order = g.maximum_cardinality_order();
        order.reverse();
        assert!(g.is_perfect_elimination_order(&order));
    }
}

#[test]
fn chordality_matches_induced_cycle_search_on_all_small_graphs() {
    for n in 0usize..=6 {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0u32..1 << pairs {
            let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
            check_chordality(&graph_from_bits(n, &bits));
        }
    }
}

#[test]
fn boundary_complexes_are_eulerian_exactly_for_odd_sizes() {
    for n in 2..=7 {
        let k = SimplicialComplex::simplex_boundary(n).unwrap();
        assert_eq!(is_eulerian_complex(&k).unwrap().holds(), n % 2 == 1, "n = {n}");
        assert_eq!(is_eulerian_complex_via_mobius(&k).unwrap().holds(), n % 2 == 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chordality_matches_oracle_on_larger_graphs(g in arb_graph(7, 10)) {
        check_chordality(&g);
    }

    #[test]
    fn nonfaces_and_independence_complex_are_inverse(c in arb_clutter(0, 7, 7)) {
        let k = independence_complex(&c).unwrap();
        prop_assert_eq!(minimal_nonfaces(&k).unwrap(), c.clone());
        for m in 0u32..1 << c.vertex_count() {
            let s = VertexSet::from_bits(m);
            prop_assert_eq!(k.is_face(s), independent(&c, s));
        }
    }

    #[test]
    fn complexes_round_trip_through_nonfaces(k in arb_complex(0, 7, 6)) {
        let c = minimal_nonfaces(&k).unwrap();
        prop_assert_eq!(independence_complex(&c).unwrap(), k.clone());
        for &e in c.edges() {
            prop_assert!(!k.is_face(e));
            for v in e.iter() {
                prop_assert!(k.is_face(e.difference(VertexSet::singleton(v))));
            }
        }
        let listed = faces(&k);
        for m in 0u32..1 << k.vertex_count() {
            prop_assert_eq!(k.is_face(VertexSet::from_bits(m)), listed.contains(&m));
        }
    }

    #[test]
    fn independence_commutes_with_restriction(
        (c, mask) in arb_clutter(1, 7, 7).prop_flat_map(|c| {
            let top = 1u32 << c.vertex_count();
            (Just(c), 0..top)
        })
    ) {
        let s = VertexSet::from_bits(mask);
        prop_assert_eq!(
            independence_complex(&c).unwrap().restrict(s).unwrap(),
            independence_complex(&c.restrict(s).unwrap()).unwrap()
        );
    }

    #[test]
    fn independence_turns_sums_into_joins(a in arb_clutter(0, 4, 4), b in arb_clutter(0, 4, 4)) {
        let sum = a.disjoint_sum(&b).unwrap();
        prop_assert_eq!(
            independence_complex(&sum).unwrap(),
            independence_complex(&a).unwrap().join(&independence_complex(&b).unwrap()).unwrap()
        );
    }

    #[test]
    fn partition_polynomial_counts_face_partitions(k in arb_complex(0, 6, 5)) {
        let poly = partition_polynomial(&k).unwrap();
        prop_assert_eq!(&poly, &chromatic_polynomial(&nonface_hypergraph(&k).unwrap()).unwrap());
        for m in 0..=4 {
            prop_assert_eq!(poly.eval(m).unwrap(), count_partition_functions(&k, m as usize));
        }
    }

    #[test]
    fn complex_euler_characteristic_matches_clutter(c in arb_clutter(0, 8, 8)) {
        let k = independence_complex(&c).unwrap();
        prop_assert_eq!(euler_char_complex(&k).unwrap(), euler_character(&c).unwrap());
    }

    #[test]
    fn eulerian_tests_agree(k in arb_complex(0, 7, 6)) {
        let direct = is_eulerian_complex(&k).unwrap();
        let mobius = is_eulerian_complex_via_mobius(&k).unwrap();
        let clutter = is_eulerian(&minimal_nonfaces(&k).unwrap()).unwrap();
        prop_assert_eq!(direct.holds(), mobius.holds());
        prop_assert_eq!(direct.holds(), clutter.holds());
        if direct.holds() {
            let g = k.one_skeleton();
            let n = k.vertex_count();
            prop_assert_eq!(g.edge_count(), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn flag_means_clique_complex_of_skeleton(k in arb_complex(0, 6, 6)) {
        let clique = k.one_skeleton().clique_complex().unwrap();
        let verdict = is_flag(&k).unwrap();
        prop_assert_eq!(verdict.holds(), clique == k);
        if let Some(w) = verdict.witness {
            prop_assert!(!k.is_face(w) && w.len() >= 3);
            for u in w.iter() {
                for v in w.iter().filter(|&v| v > u) {
                    prop_assert!(k.is_face(VertexSet::singleton(u).union(VertexSet::singleton(v))));
                }
            }
        }
    }

    #[test]
    fn nerve_faces_are_intersecting_subfamilies(c in arb_clutter(1, 6, 6)) {
        let k = nerve(&c).unwrap();
        let edges = c.edges();
        prop_assert_eq!(k.vertex_count(), edges.len());
        for m in 1u32..1 << edges.len() {
            let common = VertexSet::from_bits(m)
                .iter()
                .fold(VertexSet::full(c.vertex_count()), |a, i| a.intersection(edges[i]));
            prop_assert_eq!(k.is_face(VertexSet::from_bits(m)), !common.is_empty());
        }
        let g = intersection_graph(&c);
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                prop_assert_eq!(g.adjacent(i, j), edges[i].intersects(edges[j]));
            }
        }
    }
}
