//! Cross-oracle battery over every graph up to isomorphism on a few vertices.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use prismatic::graph::write_graph6;
use prismatic::morphisms::graphs_up_to_isomorphism;
use prismatic::prism::{brute_prism_aut, dichotomy_holds, structured_prism_aut};
use prismatic::structural::{cheeger_brute_force, cheeger_closed_form, BRUTE_FORCE_LIMIT};
use prismatic::Graph;

#[derive(Debug, Default, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: Vec<String>,
}

#[derive(Debug, Default)]
struct GraphOutcome {
    aut: Option<bool>,
    cheeger: Option<bool>,
    dichotomy: Option<bool>,
}

fn check(g: &Graph) -> GraphOutcome {
    let aut = Some(structured_prism_aut(g).map(|s| s.elements == brute_prism_aut(g)).unwrap_or(false));
    let p = g.complementary_prism();
    let cheeger = (p.n() >= 2 && p.n() <= BRUTE_FORCE_LIMIT)
        .then(|| cheeger_brute_force(&p).map(|b| b.value == cheeger_closed_form(g).value).unwrap_or(false));
    GraphOutcome { aut, cheeger, dichotomy: dichotomy_holds(g) }
}

fn record(t: &mut Tally, outcome: Option<bool>, g6: &str) {
    if let Some(ok) = outcome {
        t.checked += 1;
        if !ok {
            t.failed.push(g6.to_string());
        }
    }
}

/// Structured vs brute automorphism groups, closed-form vs brute Cheeger numbers and the
/// side-preservation dichotomy for non-family graphs, on all graphs with `1..=max_n` vertices.
pub fn sweep(max_n: usize) -> Value {
    let graphs: Vec<Graph> = (1..=max_n).flat_map(graphs_up_to_isomorphism).collect();
    let outcomes: Vec<GraphOutcome> = graphs.par_iter().map(check).collect();
    let (mut aut, mut cheeger, mut dichotomy) = (Tally::default(), Tally::default(), Tally::default());
    for (g, o) in graphs.iter().zip(&outcomes) {
        let g6 = write_graph6(g);
        record(&mut aut, o.aut, &g6);
        record(&mut cheeger, o.cheeger, &g6);
        record(&mut dichotomy, o.dichotomy, &g6);
    }
    let all_pass = aut.failed.is_empty() && cheeger.failed.is_empty() && dichotomy.failed.is_empty();
    json!({
        "max_n": max_n,
        "graphs": graphs.len(),
        "structured_automorphisms": aut,
        "cheeger_closed_form": cheeger,
        "dichotomy": dichotomy,
        "all_pass": all_pass,
    })
}
