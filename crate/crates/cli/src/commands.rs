//! One function per subcommand, each producing JSON results and witnesses.

use serde_json::{json, Value};

use prismatic::graph::named;
use prismatic::morphisms::{
    automorphisms, compute_core, find_antimorphisms, is_self_complementary, orbits, verify_retraction, CoreOutcome,
    CoreReport, Limit,
};
use prismatic::prism::{
    classify_core_case, detect_family, governing_family, lift_antimorphism, not_lex_product_check, prism_predicates,
    ratio_class, structured_prism_aut,
};
use prismatic::spectral::{
    eigenvalue_bound_checks, numeric_spectrum, prism_spectrum_closed_form, srg_analysis, srg_eigenvalue_inequality_fails,
    srg_params, theta_bounds,
};
use prismatic::structural::{
    bound_checks, cheeger_brute_force, cheeger_closed_form, hamiltonian, kneser_facts, prism_cycle_construction,
    witness_holds, CheegerReport, HamMode, BRUTE_FORCE_LIMIT,
};
use prismatic::{Budget, Graph, Permutation, SearchResult, VertexMap};

use crate::input::prism_base;

/// Largest group whose elements are listed in full as witnesses.
const WITNESS_GROUP_LIMIT: usize = 1000;

pub struct Ctx {
    pub budget: Budget,
    pub tolerance: f64,
    /// Analyse the complementary prism of the input rather than the input itself.
    pub prism: bool,
}

#[derive(Default)]
pub struct Outcome {
    pub results: Value,
    pub witnesses: Value,
    /// Graph written as graph6 in text mode.
    pub graph: Option<Graph>,
}

impl Outcome {
    fn new(results: Value, witnesses: Value) -> Self {
        Outcome { results, witnesses, graph: None }
    }
}

fn in_band<T: serde::Serialize>(r: prismatic::Result<T>) -> Value {
    match r {
        Ok(v) => json!(v),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn search_status<T>(r: &SearchResult<T>) -> &'static str {
    match r {
        SearchResult::Found(_) => "found",
        SearchResult::NotFound => "not_found",
        SearchResult::Unknown(_) => "unknown",
    }
}

/// The graph under analysis and, when it is a prism, its base graph.
fn target(g: &Graph, ctx: &Ctx) -> (Graph, Option<Graph>) {
    if ctx.prism {
        (g.complementary_prism(), Some(g.clone()))
    } else {
        (g.clone(), prism_base(g))
    }
}

fn summary(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "min_degree": if g.n() > 0 { Some(g.min_degree()) } else { None },
        "max_degree": if g.n() > 0 { Some(g.max_degree()) } else { None },
        "regular_degree": g.regular_degree(),
        "connected": g.is_connected(),
    })
}

pub fn construct(g: &Graph, ctx: &Ctx) -> Outcome {
    let (t, _) = target(g, ctx);
    Outcome { results: summary(&t), witnesses: Value::Null, graph: Some(t) }
}

pub fn prism(g: &Graph) -> Outcome {
    let p = g.complementary_prism();
    let mut results = summary(&p);
    results["base_n"] = json!(g.n());
    Outcome { results, witnesses: Value::Null, graph: Some(p) }
}

pub fn aut(g: &Graph, ctx: &Ctx) -> Outcome {
    let (t, base) = target(g, ctx);
    let elements = automorphisms(&t);
    let mut results = json!({
        "order": elements.len(),
        "orbits": orbits(t.n(), &elements),
    });
    let mut witnesses = json!({});
    if let Some(b) = base {
        let ratio = ratio_class(&b);
        let structured = structured_prism_aut(&b);
        let family = governing_family(&b).map(|d| json!({ "kind": d.kind, "lambda": d.lambda }));
        results["prism"] = json!({
            "base_n": b.n(),
            "base_order": automorphisms(&b).len(),
            "ratio": ratio.value,
            "ratio_reason": ratio.reason,
            "family": family,
            "structured": match &structured {
                Ok(s) => json!({
                    "order": s.order,
                    "label": s.structure_label,
                    "matches_direct_search": s.elements == elements,
                }),
                Err(e) => json!({ "error": e.to_string() }),
            },
        });
        if let Ok(s) = structured {
            if s.order <= WITNESS_GROUP_LIMIT {
                witnesses["structured_elements"] = json!(s.elements);
            }
        }
    }
    if elements.len() <= WITNESS_GROUP_LIMIT {
        witnesses["elements"] = json!(elements);
    }
    Outcome::new(results, witnesses)
}

pub fn antimorph(g: &Graph, all: bool) -> Outcome {
    let limit = if all { Limit::All } else { Limit::AtMost(1) };
    let found = find_antimorphisms(g, limit);
    let first = found.first();
    let lifted = first.map(lift_antimorphism);
    let results = json!({
        "self_complementary": !found.is_empty(),
        "count": if all { Some(found.len()) } else { None },
        "fixed_points": first.map(|s| s.fixed_points()),
        "cycle_lengths": first.map(|s| s.cycles().iter().map(Vec::len).collect::<Vec<_>>()),
        "verified": first.map(|s| s.is_antimorphism_of(g)),
        "prism_lift_is_automorphism": lifted.as_ref().map(|p| p.is_automorphism_of(&g.complementary_prism())),
    });
    let witnesses = json!({ "antimorphisms": found, "prism_lift": lifted });
    Outcome::new(results, witnesses)
}

fn core_case_json(base: &Graph, report: &CoreReport) -> Value {
    in_band(classify_core_case(base, report))
}

pub fn core(g: &Graph, ctx: &mut Ctx) -> Outcome {
    let (t, base) = target(g, ctx);
    let outcome = compute_core(&t, &mut ctx.budget);
    let (status, report) = match &outcome {
        CoreOutcome::Core(r) => ("core", r),
        CoreOutcome::Unknown { partial, .. } => ("unknown", partial),
    };
    let c = t.induced(&report.core_vertices);
    let mut results = json!({
        "status": status,
        "core_size": report.core_vertices.len(),
        "core_is_complete": c.is_complete(),
        "core_graph6": prismatic::graph::write_graph6(&c),
        "is_core_itself": report.is_core_itself,
        "retraction_verified": verify_retraction(&t, &report.retraction, &report.core_vertices),
    });
    if let (Some(b), CoreOutcome::Core(r)) = (&base, &outcome) {
        results["case"] = core_case_json(b, r);
    }
    let witnesses = json!({ "core_vertices": report.core_vertices, "retraction": report.retraction });
    Outcome::new(results, witnesses)
}

pub fn classify(g: &Graph) -> Outcome {
    let ratio = ratio_class(g);
    let families: Vec<Value> =
        detect_family(g).into_iter().map(|d| json!({ "kind": d.kind, "lambda": d.lambda })).collect();
    let results = json!({
        "graph": summary(g),
        "self_complementary": is_self_complementary(g),
        "families": families,
        "ratio": ratio.value,
        "ratio_reason": ratio.reason,
        "strongly_regular": srg_params(g),
        "prism_predicates": in_band(prism_predicates(g)),
        "not_lex_product": not_lex_product_check(&g.complementary_prism()),
    });
    Outcome::new(results, Value::Null)
}

fn cheeger_json(r: &CheegerReport) -> Value {
    json!({
        "value": format!("{}/{}", r.value.numer(), r.value.denom()),
        "numerator": r.value.numer(),
        "denominator": r.value.denom(),
        "method": r.method,
    })
}

pub fn cheeger(g: &Graph, ctx: &Ctx) -> Outcome {
    if ctx.prism {
        let p = g.complementary_prism();
        let closed = cheeger_closed_form(g);
        let brute = (p.n() <= BRUTE_FORCE_LIMIT).then(|| cheeger_brute_force(&p));
        let mut results = cheeger_json(&closed);
        results["witness_verified"] = json!(closed.witness_holds(&p));
        results["matches_brute_force"] = match &brute {
            Some(Ok(b)) => json!(b.value == closed.value),
            _ => Value::Null,
        };
        Outcome::new(results, json!({ "s": closed.s, "t": closed.t }))
    } else {
        match cheeger_brute_force(g) {
            Ok(r) => {
                let mut results = cheeger_json(&r);
                results["witness_verified"] = json!(r.witness_holds(g));
                Outcome::new(results, json!({ "s": r.s, "t": r.t }))
            }
            Err(e) => Outcome::new(json!({ "error": e.to_string() }), Value::Null),
        }
    }
}

pub fn spectrum(g: &Graph, ctx: &Ctx) -> Outcome {
    let (t, _) = target(g, ctx);
    let numeric = match numeric_spectrum(&t) {
        Ok(s) => s,
        Err(e) => return Outcome::new(json!({ "error": e.to_string() }), Value::Null),
    };
    let mut results = json!({
        "grouped": numeric.grouped,
        "largest": numeric.largest(),
        "smallest": numeric.smallest(),
        "hoffman_bound": prismatic::spectral::hoffman_bound(&t),
    });
    if ctx.prism {
        results["closed_form"] = match prism_spectrum_closed_form(g) {
            Ok(c) => {
                let diff = c.max_difference(&numeric);
                json!({ "grouped": c.grouped, "max_difference": diff, "agrees": diff <= ctx.tolerance })
            }
            Err(e) => json!({ "error": e.to_string() }),
        };
    }
    Outcome::new(results, json!({ "eigenvalues": numeric.eigenvalues }))
}

pub fn srg(g: &Graph, ctx: &Ctx, max_power: usize) -> Outcome {
    let (t, _) = target(g, ctx);
    Outcome::new(json!(srg_analysis(&t, max_power)), Value::Null)
}

pub fn theta(g: &Graph, ctx: &mut Ctx) -> Outcome {
    let n = g.n() as u64;
    let results = json!({
        "theta": in_band(theta_bounds(g)),
        "eigenvalue_bounds": in_band(eigenvalue_bound_checks(g, &mut ctx.budget)),
        "strongly_regular_inequality_fails": if n > 1 && n % 4 == 1 {
            in_band(srg_eigenvalue_inequality_fails(n))
        } else {
            Value::Null
        },
    });
    Outcome::new(results, Value::Null)
}

pub fn hamilton(g: &Graph, ctx: &mut Ctx, mode: HamMode) -> Outcome {
    let (t, base) = target(g, ctx);
    let r = hamiltonian(&t, mode, &mut ctx.budget);
    let mut results = json!({
        "mode": mode,
        "status": search_status(&r),
        "verified": match &r {
            SearchResult::Found(w) => Some(witness_holds(&t, w)),
            _ => None,
        },
    });
    let mut witnesses = json!({ "search": r });
    if let (Some(b), HamMode::Cycle) = (base, mode) {
        let c = prism_cycle_construction(&b, &mut ctx.budget);
        results["construction_status"] = json!(search_status(&c));
        witnesses["construction"] = json!(c);
    }
    Outcome::new(results, witnesses)
}

pub fn invariants(g: &Graph, ctx: &mut Ctx) -> Outcome {
    let (t, _) = target(g, ctx);
    let b = bound_checks(&t, &mut ctx.budget);
    let inv = &b.invariants;
    let results = json!({
        "n": inv.n,
        "alpha": inv.alpha,
        "omega": inv.omega,
        "chi": inv.chi,
        "kappa": inv.kappa,
        "witnesses_verified": inv.witnesses_hold(&t),
        "bounds": {
            "connectivity_sum": b.connectivity_sum,
            "hamilton_from_connectivity": b.hamilton_from_connectivity,
            "clique_coclique": b.clique_coclique,
            "preimage": b.preimage,
        },
    });
    let witnesses = json!({
        "independent_set": inv.independent_set,
        "clique": inv.clique,
        "coloring": inv.coloring,
        "vertex_cut": inv.vertex_cut,
    });
    Outcome::new(results, witnesses)
}

/// Names accepted by `verify-fixture`.
pub const FIXTURES: [&str; 5] = ["exa1", "spindle_nine", "self_complementary_nine", "mysterious505", "kneser"];

pub fn verify_fixture(name: &str, ctx: &mut Ctx) -> Result<Outcome, String> {
    let results = match name {
        "exa1" => {
            let g = named::exa1();
            let p = g.complementary_prism();
            let sigma = Permutation::new(named::exa1_antimorphism()).map_err(|e| e.to_string())?;
            let psi = VertexMap::new(named::exa1_retraction(), p.n()).map_err(|e| e.to_string())?;
            let image = psi.image_set();
            let given = CoreReport { core_vertices: image.clone(), retraction: psi.clone(), is_core_itself: false };
            let computed = compute_core(&p, &mut ctx.budget).core();
            json!({
                "antimorphism": sigma.is_antimorphism_of(&g),
                "retraction": verify_retraction(&p, &psi, &image),
                "core_is_k5": image.len() == 5 && p.induced(&image).is_complete(),
                "computed_core_size": computed.map(|r| r.core_vertices.len()),
                "case": core_case_json(&g, &given),
            })
        }
        "spindle_nine" => {
            let g = named::spindle_nine();
            let psi = VertexMap::new(named::spindle_nine_retraction(), g.n()).map_err(|e| e.to_string())?;
            let image = psi.image_set();
            json!({
                "regular_degree": g.regular_degree(),
                "retraction": verify_retraction(&g, &psi, &image),
                "core_regular": g.induced(&image).regular_degree().is_some(),
            })
        }
        "self_complementary_nine" => {
            let rows: Vec<Value> = (1..=4)
                .map(|i| {
                    let g = named::self_complementary_nine(i).expect("index in range");
                    json!({
                        "index": i,
                        "regular_degree": g.regular_degree(),
                        "self_complementary": is_self_complementary(&g),
                        "strongly_regular": srg_params(&g).is_some(),
                    })
                })
                .collect();
            json!({ "graphs": rows })
        }
        "mysterious505" => {
            let g = named::mysterious505();
            let p = g.complementary_prism();
            let psi = VertexMap::new(named::mysterious505_retraction(), p.n()).map_err(|e| e.to_string())?;
            json!({
                "n": g.n(),
                "regular_degree": g.regular_degree(),
                "connected": g.is_connected(),
                "complement_connected": g.complement().is_connected(),
                "retraction": verify_retraction(&p, &psi, &named::mysterious505_fixed_set()),
            })
        }
        "kneser" => {
            let f = kneser_facts();
            json!({ "all_hold": f.all_hold(), "facts": f })
        }
        other => return Err(format!("unknown fixture {other}; expected one of {}", FIXTURES.join(", "))),
    };
    Ok(Outcome::new(results, Value::Null))
}
