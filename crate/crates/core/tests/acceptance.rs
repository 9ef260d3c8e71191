//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;

use prismatic::graph::named;
use prismatic::morphisms::{
    automorphisms, compute_core, find_antimorphisms, find_regular_subgroup, is_core, is_isomorphic,
    verify_retraction, wreath_aut_order, CoreReport, Limit, VertexMap,
};
use prismatic::prism::{
    brute_prism_aut, classify_core_case, dichotomy_holds, not_lex_product_check, prism_predicates, ratio_class,
    structured_prism_aut, CoreCaseKind,
};
use prismatic::spectral::{
    numeric_spectrum, prism_spectrum_closed_form, srg_params, theta_bounds, srg_eigenvalue_inequality_fails,
    walk_regularity, COMPARISON_TOLERANCE,
};
use prismatic::structural::{
    cheeger_brute_force, cheeger_closed_form, hamiltonian_connected, hamiltonian_cycle, hamiltonian_path, invariants,
    is_hamiltonian_path, kneser_facts, prism_cycle_construction, separates,
};
use prismatic::{Budget, Graph, SearchResult};

/// Every labelled graph on `n` vertices.
fn labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            Graph::from_edges(n, pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e)).unwrap()
        })
        .collect()
}

fn labelled_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(labelled_graphs).collect()
}

fn check(ok: bool, what: &str, failures: &mut Vec<String>) {
    if !ok {
        failures.push(what.to_string());
    }
}

fn petersen_identity(f: &mut Vec<String>) {
    let c5 = named::cycle(5);
    check(is_isomorphic(&c5.complementary_prism(), &named::petersen()), "prism(C5) is Petersen", f);
    check(brute_prism_aut(&c5).len() == 120, "brute-force order 120", f);
    check(automorphisms(&named::petersen()).len() == 120, "Petersen order 120", f);
    let s = structured_prism_aut(&c5).unwrap();
    check(s.order == 120 && s.elements == brute_prism_aut(&c5), "structured group is the brute-force group", f);
    check(ratio_class(&c5).value == 12, "ratio 12", f);
}

fn ratio_sweep(f: &mut Vec<String>) {
    let bad: Vec<String> = labelled_graphs_up_to(5)
        .par_iter()
        .filter_map(|g| {
            let brute = brute_prism_aut(g);
            let s = structured_prism_aut(g).ok()?;
            let r = ratio_class(g).value;
            let base = automorphisms(g).len() as u64;
            let ok = s.elements == brute
                && [1, 2, 4, 12].contains(&r)
                && s.order as u64 == base * r
                && dichotomy_holds(g).unwrap_or(true);
            (!ok).then(|| prismatic::graph::write_graph6(g))
        })
        .collect();
    check(bad.is_empty(), &format!("structured = brute, ratio, dichotomy; failures {bad:?}"), f);
}

fn cheeger(f: &mut Vec<String>) {
    let bad: Vec<String> = labelled_graphs_up_to(5)
        .par_iter()
        .filter_map(|g| {
            let closed = cheeger_closed_form(g);
            let prism = g.complementary_prism();
            let brute = cheeger_brute_force(&prism).ok()?;
            let ok = closed.value == brute.value && closed.witness_holds(&prism) && brute.witness_holds(&prism);
            (!ok).then(|| prismatic::graph::write_graph6(g))
        })
        .collect();
    check(bad.is_empty(), &format!("closed form = brute force; failures {bad:?}"), f);
    check(cheeger_brute_force(&named::petersen()).unwrap().value == Ratio::from_integer(1), "h(Petersen) = 1", f);
    let star = named::star(4);
    check(cheeger_brute_force(&star.complementary_prism()).unwrap().value == Ratio::new(3, 4), "h(prism K1,3) = 3/4 brute", f);
    check(cheeger_closed_form(&star).value == Ratio::new(3, 4), "h(prism K1,3) = 3/4 closed", f);
}

fn spectrum(f: &mut Vec<String>) {
    let mut corpus = vec![named::cycle(5), named::paley(9).unwrap(), named::paley(13).unwrap()];
    corpus.extend((1..=4).map(|i| named::self_complementary_nine(i).unwrap()));
    for g in &corpus {
        let closed = prism_spectrum_closed_form(g).unwrap();
        let numeric = numeric_spectrum(&g.complementary_prism()).unwrap();
        check(
            closed.max_difference(&numeric) < COMPARISON_TOLERANCE,
            &format!("closed vs numeric for {}", g.name().unwrap_or("?")),
            f,
        );
    }
    let c5 = prism_spectrum_closed_form(&named::cycle(5)).unwrap();
    let groups: Vec<(f64, usize)> = c5.grouped.clone();
    let expect = [(3.0, 1), (1.0, 5), (-2.0, 4)];
    check(
        groups.len() == 3 && groups.iter().zip(expect).all(|(&(v, m), (w, k))| (v - w).abs() < 1e-9 && m == k),
        "prism(C5) spectrum {3, 1x5, -2x4}",
        f,
    );
}

fn cores(f: &mut Vec<String>) {
    let mut budget = Budget::new(2_000_000_000);
    check(is_core(&named::petersen(), &mut budget) == SearchResult::Found(true), "Petersen is a core", f);

    let e = named::exa1();
    let prism = e.complementary_prism();
    let psi = VertexMap::new(named::exa1_retraction(), prism.n()).unwrap();
    let core = psi.image_set();
    check(verify_retraction(&prism, &psi, &core), "exa1 retraction verifies", f);
    check(is_isomorphic(&prism.induced(&core), &named::complete(5)), "exa1 prism core is K5", f);
    let report = CoreReport {
        core_vertices: core,
        retraction: psi,
        is_core_itself: false,
    };
    check(
        classify_core_case(&e, &report).map(|c| c.kind) == Ok(CoreCaseKind::InFirstSide),
        "exa1 core lies in the first side",
        f,
    );

    let tp = named::triangle_pentagon();
    match compute_core(&tp.complementary_prism(), &mut Budget::unlimited()).core() {
        Some(r) => {
            let case = classify_core_case(&tp, &r);
            let ok = matches!(&case, Ok(c) if c.kind == CoreCaseKind::SecondSideHeavy
                && c.partition.as_ref().is_some_and(|p| p.v2.len() == 3 && p.v3.is_empty()));
            check(ok, &format!("triangle + pentagon core is second-side heavy: {case:?}"), f);
        }
        None => check(false, "triangle + pentagon core computed", f),
    }
}

fn fixture505(f: &mut Vec<String>) {
    let g = named::mysterious505();
    check(g.n() == 505 && g.regular_degree() == Some(194), "505 vertices, 194-regular", f);
    check(g.is_connected() && g.complement().is_connected(), "graph and complement connected", f);
    let prism = g.complementary_prism();
    let psi = VertexMap::new(named::mysterious505_retraction(), prism.n()).unwrap();
    let fixed = named::mysterious505_fixed_set();
    check(psi.image_set() == fixed && verify_retraction(&prism, &psi, &fixed), "retraction verifies", f);
    let k = kneser_facts();
    check(k.omega_kneser == 2, "omega(K(10,4)) = 2", f);
    check(k.star_size == 84 && k.star_is_clique_in_complement && k.star_is_clique_after_deletion, "EKR clique 84", f);
    check(k.min_rule_proper_with_edge && k.min_rule_colours == 4, "min-rule 4-colouring proper", f);
    check((k.hoffman_upper_bound - 84.0).abs() < 1e-6, "Hoffman bound 84", f);
}

fn self_complementary(f: &mut Vec<String>) {
    let mut corpus = vec![named::path(4)];
    corpus.extend([5, 9, 13].map(|q| named::paley(q).unwrap()));
    corpus.extend((1..=4).map(|i| named::self_complementary_nine(i).unwrap()));
    for g in &corpus {
        let anti = find_antimorphisms(g, Limit::All);
        let name = g.name().unwrap_or("?").to_string();
        check(!anti.is_empty(), &format!("{name} has antimorphisms"), f);
        check(anti.iter().all(|s| s.order() % 4 == 0), &format!("{name} antimorphism orders divisible by 4"), f);
        if g.regular_degree().is_some() {
            check(anti.iter().all(|s| s.fixed_points().len() == 1), &format!("{name} antimorphisms fix one vertex"), f);
        }
    }
}

fn transitivity(f: &mut Vec<String>) {
    let mut corpus = vec![named::cycle(5), named::path(4), named::paley(9).unwrap(), named::paley(13).unwrap()];
    corpus.extend((2..=4).map(|i| named::self_complementary_nine(i).unwrap()));
    for g in &corpus {
        let p = prism_predicates(g).unwrap();
        let name = g.name().unwrap_or("?").to_string();
        let expected = ["C5", "Paley(9)", "Paley(13)"].contains(&name.as_str());
        check(p.vertex_transitive == expected && p.vertex_transitive_by_orbits == expected, &format!("{name} prism vertex-transitive = {expected}"), f);
    }
    for g in [named::cycle(5), named::path(4)] {
        let auts = brute_prism_aut(&g);
        check(find_regular_subgroup(&auts, 2 * g.n()).unwrap().is_none(), "no regular subgroup", f);
    }
}

fn hamiltonicity(f: &mut Vec<String>) {
    let mut corpus = vec![named::paley(9).unwrap(), named::paley(13).unwrap()];
    corpus.extend((1..=4).map(|i| named::self_complementary_nine(i).unwrap()));
    for g in &corpus {
        let ok = match prism_cycle_construction(g, &mut Budget::unlimited()) {
            SearchResult::Found(p) => is_hamiltonian_path(&g.complementary_prism(), &p),
            _ => false,
        };
        check(ok, &format!("cycle construction on {}", g.name().unwrap_or("?")), f);
    }
    let p9 = named::paley(9).unwrap().complementary_prism();
    let ok = match hamiltonian_connected(&p9, &mut Budget::unlimited()) {
        SearchResult::Found(all) => all.len() == 153 && all.iter().all(|(u, v, p)| is_hamiltonian_path(&p9, p) && p[0] == *u && p[17] == *v),
        _ => false,
    };
    check(ok, "prism(Paley(9)) Hamiltonian-connected over 153 pairs", f);
    let pet = named::petersen();
    check(hamiltonian_path(&pet, &mut Budget::unlimited()).is_found(), "Petersen path", f);
    check(hamiltonian_cycle(&pet, &mut Budget::unlimited()).is_not_found(), "Petersen no cycle", f);
}

fn regularity(f: &mut Vec<String>) {
    let f1 = named::self_complementary_nine(1).unwrap();
    check(srg_params(&f1).map(|p| (p.n, p.k, p.lambda, p.mu)) == Some((9, 4, 1, 2)), "F9_1 is SRG(9,4,1,2)", f);
    for (i, power) in [(2, 4), (3, 3), (4, 3)] {
        let g = named::self_complementary_nine(i).unwrap();
        let w = walk_regularity(&g, 9);
        let ok = !w.one_walk_regular
            && w.diagonal_witness.as_ref().is_some_and(|d| d.power == power && d.first == (0, 0) && d.second == (1, 1));
        check(ok, &format!("F9_{i} diagonal walk witness at power {power}: {:?}", w.diagonal_witness), f);
    }
    let f3 = named::self_complementary_nine(3).unwrap();
    let inv = invariants(&f3, &mut Budget::unlimited());
    check(inv.alpha.value() == Some(3) && inv.kappa.value() == Some(3), "F9_3 alpha = kappa = 3", f);
    check(separates(&f3, &[0, 5, 6]), "F9_3 split by {1,6,7}", f);
    for i in [2, 4] {
        let inv = invariants(&named::self_complementary_nine(i).unwrap(), &mut Budget::unlimited());
        check(inv.alpha.value() == Some(3) && inv.kappa.value() == Some(4), &format!("F9_{i} alpha 3, kappa 4"), f);
    }
}

fn theta(f: &mut Vec<String>) {
    check((theta_bounds(&named::cycle(5)).unwrap().upper - 5f64.sqrt()).abs() < 1e-9, "theta bound of C5 is sqrt 5", f);
    for n in [5u64, 9, 13, 17, 25, 1_000_001] {
        check(srg_eigenvalue_inequality_fails(n) == Ok(true), &format!("inequality fails for n = {n}"), f);
    }
}

fn lexicographic(f: &mut Vec<String>) {
    let c5 = named::cycle(5);
    let k2 = named::complete(2);
    let brute = automorphisms(&c5.lexicographic_product(&k2)).len() as u128;
    check(brute == 320 && wreath_aut_order(&c5, &k2) == Some(320), "|Aut(C5[K2])| = 320", f);
    let bad: Vec<String> = labelled_graphs_up_to(4)
        .par_iter()
        .filter(|g| not_lex_product_check(&g.complementary_prism()) != Some(true))
        .map(prismatic::graph::write_graph6)
        .collect();
    check(bad.is_empty(), &format!("prisms are not lexicographic products; failures {bad:?}"), f);
}

type Criterion = (&'static str, fn(&mut Vec<String>));

fn main() {
    let criteria: [Criterion; 12] = [
        ("Petersen identity and group order", petersen_identity),
        ("ratio sweep over graphs on at most 5 vertices", ratio_sweep),
        ("Cheeger closed form against brute force", cheeger),
        ("closed-form prism spectra", spectrum),
        ("core computations and case classification", cores),
        ("505-vertex fixture and Kneser facts", fixture505),
        ("self-complementarity suite", self_complementary),
        ("vertex-transitivity and Cayley status", transitivity),
        ("Hamiltonicity", hamiltonicity),
        ("strong and walk regularity", regularity),
        ("theta bound and inequality", theta),
        ("lexicographic products", lexicographic),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut failures = Vec::new();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut failures)));
        if let Err(e) = outcome {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            failures.push(format!("panicked: {msg}"));
        }
        let secs = start.elapsed().as_secs_f64();
        if failures.is_empty() {
            println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", i + 1);
        } else {
            failed += 1;
            println!("criterion {:>2}: FAIL  {name} ({secs:.2}s)", i + 1);
            for m in failures {
                println!("    - {m}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
