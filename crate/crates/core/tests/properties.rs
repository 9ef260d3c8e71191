//! Randomised invariants checked against independent brute-force computations.

use proptest::prelude::*;

use prismatic::graph::{parse_graph6, write_graph6};
use prismatic::morphisms::{
    automorphisms, compute_core, find_homomorphism, is_isomorphic, lex_auto_conditions, verify_retraction,
    wreath_aut_order, Permutation,
};
use prismatic::prism::{
    brute_prism_aut, classify_core_case, not_lex_product_by_enumeration, not_lex_product_check, prism_predicates,
    structured_prism_aut,
};
use prismatic::spectral::numeric_spectrum;
use prismatic::structural::{
    chromatic, chromatic_by_enumeration, cheeger_brute_force, cheeger_closed_form, clique_number_by_subsets,
    connectivity_by_subsets, hamiltonian_path, invariants, is_hamiltonian_path, max_clique, vertex_connectivity,
};
use prismatic::{Budget, Graph, SearchResult};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut k = 0;
            let mut edges = Vec::new();
            for j in 0..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Whether some vertex ordering is a Hamiltonian path, by scanning permutations.
fn has_hamiltonian_path_by_permutations(g: &Graph) -> bool {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if perm.windows(2).all(|w| g.adjacent(w[0], w[1])) {
            return true;
        }
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn prism_shape(g in graph(9)) {
        let n = g.n();
        let p = g.complementary_prism();
        prop_assert_eq!(p.n(), 2 * n);
        prop_assert_eq!(p.edge_count(), n * (n + 1) / 2);
        for v in 0..n {
            prop_assert_eq!(p.degree(v) + p.degree(n + v), n + 1);
        }
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert!(is_isomorphic(&p, &g.complement().complementary_prism()));
    }

    #[test]
    fn structured_group_is_the_automorphism_group(g in graph(6)) {
        let s = structured_prism_aut(&g).unwrap();
        prop_assert_eq!(s.elements, brute_prism_aut(&g));
    }

    #[test]
    fn cheeger_closed_form_matches_scan(g in graph(7)) {
        let p = g.complementary_prism();
        let closed = cheeger_closed_form(&g);
        prop_assert!(closed.witness_holds(&p));
        prop_assert_eq!(closed.value, cheeger_brute_force(&p).unwrap().value);
    }

    #[test]
    fn homomorphisms_respect_clique_and_chromatic_numbers(a in graph(6), b in graph(5)) {
        if let SearchResult::Found(m) = find_homomorphism(&a, &b, &[], &mut Budget::unlimited()).unwrap() {
            prop_assert!(m.is_homomorphism(&a, &b));
            prop_assert!(max_clique(&a).len() <= max_clique(&b).len());
            let (ca, cb) = (chromatic(&a, &mut Budget::unlimited()), chromatic(&b, &mut Budget::unlimited()));
            prop_assert!(ca.upper <= cb.upper);
        }
    }

    #[test]
    fn invariants_agree_with_scans(g in graph(7)) {
        let r = invariants(&g, &mut Budget::unlimited());
        prop_assert!(r.witnesses_hold(&g));
        prop_assert_eq!(r.omega.value(), Some(clique_number_by_subsets(&g)));
        prop_assert_eq!(r.alpha.value(), Some(clique_number_by_subsets(&g.complement())));
        prop_assert_eq!(r.chi.value(), Some(chromatic_by_enumeration(&g)));
        prop_assert_eq!(vertex_connectivity(&g).unwrap().kappa, connectivity_by_subsets(&g));
    }

    #[test]
    fn connectivity_of_prisms_matches_scan(g in graph(6)) {
        let p = g.complementary_prism();
        prop_assert_eq!(vertex_connectivity(&p).unwrap().kappa, connectivity_by_subsets(&p));
    }

    #[test]
    fn hamiltonian_search_is_exact(g in graph(7)) {
        match hamiltonian_path(&g, &mut Budget::unlimited()) {
            SearchResult::Found(p) => prop_assert!(is_hamiltonian_path(&g, &p)),
            SearchResult::NotFound => prop_assert!(!has_hamiltonian_path_by_permutations(&g)),
            SearchResult::Unknown(_) => prop_assert!(false, "unlimited budget"),
        }
    }

    #[test]
    fn cores_retract_and_are_cores(g in graph(7)) {
        let r = compute_core(&g, &mut Budget::unlimited()).core().unwrap();
        prop_assert!(verify_retraction(&g, &r.retraction, &r.core_vertices));
        let c = g.induced(&r.core_vertices);
        prop_assert!(compute_core(&c, &mut Budget::unlimited()).core().unwrap().is_core_itself);
    }

    #[test]
    fn prism_cores_fit_a_case(g in graph(5)) {
        prop_assume!(g.n() != 2);
        let r = compute_core(&g.complementary_prism(), &mut Budget::unlimited()).core().unwrap();
        prop_assert!(classify_core_case(&g, &r).is_ok());
    }

    #[test]
    fn wreath_count_matches_when_conditions_hold(a in graph(4), b in graph(3)) {
        prop_assume!(b.n() >= 2);
        let brute = automorphisms(&a.lexicographic_product(&b)).len() as u128;
        let base = automorphisms(&a).len() as u128 * (automorphisms(&b).len() as u128).pow(a.n() as u32);
        if lex_auto_conditions(&a, &b).hold() {
            prop_assert_eq!(wreath_aut_order(&a, &b), Some(brute));
        } else {
            prop_assert!(brute > base);
        }
    }

    #[test]
    fn spectrum_traces(g in graph(10)) {
        let s = numeric_spectrum(&g).unwrap();
        prop_assert!(s.eigenvalues.iter().sum::<f64>().abs() < 1e-9);
        let sq: f64 = s.eigenvalues.iter().map(|x| x * x).sum();
        prop_assert!((sq - 2.0 * g.edge_count() as f64).abs() < 1e-8);
        prop_assert_eq!(s.grouped.iter().map(|&(_, m)| m).sum::<usize>(), g.n());
    }

    #[test]
    fn lex_factor_search_matches_enumeration(g in graph(8)) {
        prop_assert_eq!(not_lex_product_check(&g), Some(not_lex_product_by_enumeration(&g)));
    }

    #[test]
    fn lex_products_are_recognised(a in graph(4), b in graph(4)) {
        prop_assume!(a.n() >= 2 && b.n() >= 2);
        let p = a.lexicographic_product(&b);
        let shuffled: Vec<usize> = (0..p.n()).map(|v| (v * 5 + 3) % p.n()).collect();
        let q = if Permutation::new(shuffled.clone()).is_ok() { p.relabel(&shuffled) } else { p };
        prop_assert_eq!(not_lex_product_check(&q), Some(false));
    }

    #[test]
    fn prism_predicates_agree(g in graph(6)) {
        let p = prism_predicates(&g).unwrap();
        prop_assert!(p.consistent());
        prop_assert!(p.diameter <= 3);
    }
}
