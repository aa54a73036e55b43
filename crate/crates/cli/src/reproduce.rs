//! Regression checks for the worked examples: each check rebuilds an
//! instance and compares computed values against the expected ones.

use std::collections::BTreeSet;
use std::fmt::Debug;

use pairgraph_core::graph::group_matrix_rows;
use pairgraph_core::search::{random_candidate, search_ramanujan};
use pairgraph_core::spectral::{compute_spectrum_with_tolerance, is_ramanujan_with_tolerance, ramanujan_bound_check, trivial_eigenvalues};
use pairgraph_core::structure::{component_count_formula, components_bfs, is_bipartite, is_connected, sign_homomorphism_exists};
use pairgraph_core::{Elem, FiniteGroup, GroupRef, PairGraph, Result, SearchConfig, Spectrum, Subgroup};
use serde::Serialize;

/// Clusters are compared to expected values at this distance.
const VALUE_TOLERANCE: f64 = 1e-6;
const GL3_SEED: u64 = 2024;

#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub what: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

fn same<T: Debug + PartialEq>(what: &str, expected: T, actual: T) -> Comparison {
    Comparison { what: what.into(), ok: expected == actual, expected: format!("{expected:?}"), actual: format!("{actual:?}") }
}

fn near(what: &str, expected: f64, actual: f64) -> Comparison {
    Comparison {
        what: what.into(),
        ok: (expected - actual).abs() <= VALUE_TOLERANCE,
        expected: format!("{expected:.9}"),
        actual: format!("{actual:.9}"),
    }
}

fn show_clusters(c: &[(f64, usize)]) -> String {
    let parts: Vec<String> = c.iter().map(|(v, m)| format!("{v:.6}x{m}")).collect();
    format!("[{}]", parts.join(", "))
}

fn clusters_match(what: &str, expected: &[(f64, usize)], spectrum: &Spectrum) -> Comparison {
    let actual: Vec<(f64, usize)> = spectrum.clusters().iter().map(|c| (c.value, c.multiplicity)).collect();
    let ok = expected.len() == actual.len()
        && expected.iter().zip(&actual).all(|(e, a)| e.1 == a.1 && (e.0 - a.0).abs() <= VALUE_TOLERANCE);
    Comparison { what: what.into(), expected: show_clusters(expected), actual: show_clusters(&actual), ok }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub id: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub comparisons: Vec<Comparison>,
}

pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    run: fn(f64) -> Result<Vec<Comparison>>,
}

impl Check {
    pub fn run(&self, tau: f64) -> Result<Verdict> {
        let comparisons = (self.run)(tau)?;
        Ok(Verdict { id: self.id, description: self.description, passed: comparisons.iter().all(|c| c.ok), comparisons })
    }
}

pub const CHECKS: &[Check] = &[
    Check { id: "z12-pair-graph", description: "Z/12, H = {0,3,6,9}, S = {2,4,5,7,8}: degrees, components, group-matrix rows", run: z12_pair_graph },
    Check { id: "f49-norm-preimage", description: "F49 over F7 with S the norm preimage of {5,6}: degrees 2, 4, 16", run: f49_norm_preimage },
    Check { id: "gl5-seven-set", description: "GL2(F5)/SL2(F5) with a seeded 7-set: 480 vertices, degrees 2, 3, 7, connected", run: gl5_seven_set },
    Check { id: "s3-group-matrix", description: "S3 Cayley graph of {(1,2),(1,2,3),(1,3,2)} in the listed element order", run: s3_group_matrix },
    Check { id: "z12-components", description: "Z/12 component counts 6 and 2 with formula terms", run: z12_components },
    Check { id: "trivial-f49", description: "trivial eigenvalues ±4√3 for the F49 graph", run: trivial_f49 },
    Check { id: "trivial-gl5", description: "trivial eigenvalues ±√17 for the GL2(F5) graph", run: trivial_gl5 },
    Check { id: "trivial-a4", description: "A4 over the Klein group: trivial eigenvalues 4, -2; bipartite without a sign homomorphism", run: trivial_a4 },
    Check { id: "z20-spectra", description: "Z/20 spectra of S = {3,5,7} and S = {1,3,5,13,15,17,19}", run: z20_spectra },
    Check { id: "s4-ramanujan", description: "S4/A4 8-regular Ramanujan graph and its 3-component complement", run: s4_ramanujan },
    Check { id: "gl3-random-17", description: "GL2(F3)/SL2(F3): 20 seeded 17-sets, every connected one Ramanujan", run: gl3_random_17 },
    Check { id: "gl3-complement-7", description: "GL2(F3)/SL2(F3): a 7-set complement that is Ramanujan below the size bound", run: gl3_complement_7 },
];

pub fn find(id: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.id == id)
}

fn z12(set: &[Elem]) -> Result<PairGraph> {
    let g = FiniteGroup::cyclic(12)?;
    let h = Subgroup::from_elements(&g, &[0, 3, 6, 9])?;
    PairGraph::build(&h, set)
}

fn degree_set(pg: &PairGraph) -> BTreeSet<usize> {
    pg.degrees().into_iter().collect()
}

fn z12_pair_graph(_tau: f64) -> Result<Vec<Comparison>> {
    let pg = z12(&[2, 4, 5, 7, 8])?;
    let profile: Vec<usize> = pg.degree_profile().iter().map(|c| c.degree).collect();
    let rows = group_matrix_rows(pg.subgroup(), pg.generating_set().elements())?;
    let expected_rows: Vec<Vec<u8>> = vec![
        vec![0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
        vec![0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1],
        vec![0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1],
    ];
    let h_rows: Vec<Vec<u8>> = pg.subgroup().elements().iter().map(|&x| pg.adjacency().row(x as usize)).collect();
    Ok(vec![
        same("degree profile", vec![5, 2, 3], profile),
        same("components (bfs)", 1, components_bfs(&pg).count),
        same("components (formula)", 1, component_count_formula(pg.subgroup(), pg.generating_set()).count),
        same("group-matrix rows", expected_rows.clone(), rows),
        same("adjacency rows of H", expected_rows, h_rows),
    ])
}

fn f49() -> Result<PairGraph> {
    let g = FiniteGroup::field_additive(7, 2)?;
    let h = Subgroup::generated(&g, &[1])?;
    let field = g.field().expect("additive field group");
    let set = field.norm_preimage(&[5, 6])?;
    PairGraph::build(&h, &set)
}

fn f49_norm_preimage(_tau: f64) -> Result<Vec<Comparison>> {
    let pg = f49()?;
    Ok(vec![
        same("|S|", 16, pg.generating_set().len()),
        same("vertex degrees", BTreeSet::from([2, 4, 16]), degree_set(&pg)),
    ])
}

/// First seeded 7-subset of `G - H` that meets the nontrivial cosets
/// 2, 2 and 3 times and gives a connected graph.
fn gl5_graph() -> Result<(u64, PairGraph)> {
    let g: GroupRef = FiniteGroup::gl2(5)?;
    let h = Subgroup::builtin(&g, "sl2_in_gl2")?;
    let outer = h.complement();
    for seed in 0u64.. {
        let set = random_candidate(&outer, 7, seed, 0);
        let pg = PairGraph::build(&h, &set)?;
        let mut pattern = pg.generating_set().outer_coset_counts().to_vec();
        pattern.sort_unstable();
        if pattern == [2, 2, 3] && is_connected(&h, pg.generating_set()).connected {
            return Ok((seed, pg));
        }
    }
    unreachable!("seed space exhausted")
}

fn gl5_seven_set(_tau: f64) -> Result<Vec<Comparison>> {
    let (seed, pg) = gl5_graph()?;
    Ok(vec![
        same("vertices", 480, pg.vertex_count()),
        same(&format!("vertex degrees (set seed {seed})"), BTreeSet::from([2, 3, 7]), degree_set(&pg)),
        same("components", 1, components_bfs(&pg).count),
    ])
}

fn s3_group_matrix(_tau: f64) -> Result<Vec<Comparison>> {
    let g = FiniteGroup::symmetric(3)?;
    let order: Vec<Elem> = ["e", "(2,3)", "(1,2)", "(1,2,3)", "(1,3,2)", "(1,3)"]
        .iter()
        .map(|s| g.parse_element(s))
        .collect::<Result<_>>()?;
    let set: Vec<Elem> = ["(1,2)", "(1,2,3)", "(1,3,2)"].iter().map(|s| g.parse_element(s)).collect::<Result<_>>()?;
    let pg = PairGraph::build(&Subgroup::whole(&g), &set)?;
    let actual: Vec<Vec<u8>> =
        order.iter().map(|&a| order.iter().map(|&b| pg.adjacency().get(a as usize, b as usize) as u8).collect()).collect();
    let expected: Vec<Vec<u8>> = vec![
        vec![0, 0, 1, 1, 1, 0],
        vec![0, 0, 1, 1, 0, 1],
        vec![1, 1, 0, 0, 0, 1],
        vec![1, 1, 0, 0, 1, 0],
        vec![1, 0, 0, 1, 0, 1],
        vec![0, 1, 1, 0, 1, 0],
    ];
    Ok(vec![same("adjacency in listed order", expected, actual)])
}

fn z12_components(_tau: f64) -> Result<Vec<Comparison>> {
    let mut out = Vec::new();
    for (set, count, terms) in [(&[1, 7][..], 6, (2, 8, 4)), (&[4, 5, 6, 10, 11][..], 2, (2, 8, 8))] {
        let pg = z12(set)?;
        let f = component_count_formula(pg.subgroup(), pg.generating_set());
        out.push(same(&format!("components of {set:?} (bfs)"), count, components_bfs(&pg).count));
        out.push(same(&format!("components of {set:?} (formula)"), count, f.count));
        out.push(same(&format!("formula terms of {set:?}"), terms, (f.subgroup_index, f.outer_vertices, f.covered_outer)));
    }
    Ok(out)
}

fn trivial_checks(pg: &PairGraph, plus: f64, minus: f64, tau: f64) -> Result<Vec<Comparison>> {
    let t = trivial_eigenvalues(pg.generating_set())?;
    let spectrum = compute_spectrum_with_tolerance(pg, tau)?;
    let nearest = |x: f64| {
        spectrum.eigenvalues().iter().copied().min_by(|a, b| (a - x).abs().total_cmp(&(b - x).abs())).unwrap_or(f64::NAN)
    };
    Ok(vec![
        near("mu+ (formula)", plus, t.mu_plus),
        near("mu- (formula)", minus, t.mu_minus.unwrap_or(f64::NAN)),
        near("mu+ in spectrum", plus, nearest(plus)),
        near("mu- in spectrum", minus, nearest(minus)),
    ])
}

fn trivial_f49(tau: f64) -> Result<Vec<Comparison>> {
    let r = 4.0 * 3f64.sqrt();
    trivial_checks(&f49()?, r, -r, tau)
}

fn trivial_gl5(tau: f64) -> Result<Vec<Comparison>> {
    let r = 17f64.sqrt();
    trivial_checks(&gl5_graph()?.1, r, -r, tau)
}

fn trivial_a4(tau: f64) -> Result<Vec<Comparison>> {
    let g = FiniteGroup::alternating(4)?;
    let h = Subgroup::builtin(&g, "klein_in_a4")?;
    let set: Vec<Elem> = ["(1,2)(3,4)", "(1,4)(2,3)", "(1,2,3)", "(1,4,3)", "(2,3,4)", "(2,4,3)"]
        .iter()
        .map(|s| g.parse_element(s))
        .collect::<Result<_>>()?;
    let pg = PairGraph::build(&h, &set)?;
    let mut out = trivial_checks(&pg, 4.0, -2.0, tau)?;
    out.push(same("bipartite", true, is_bipartite(&pg)));
    out.push(same("sign homomorphism", false, sign_homomorphism_exists(&g, &set)));
    Ok(out)
}

fn z20_expected(top: f64) -> Vec<(f64, usize)> {
    let r5 = 5f64.sqrt();
    let positive = [(top, 1), ((3.0 + r5) / 2.0, 2), ((1.0 + r5) / 2.0, 2), (1.0, 1), ((r5 - 1.0) / 2.0, 2), ((3.0 - r5) / 2.0, 2)];
    positive.iter().copied().chain(positive.iter().rev().map(|&(v, m)| (-v, m))).collect()
}

fn z20_spectra(tau: f64) -> Result<Vec<Comparison>> {
    let g = FiniteGroup::cyclic(20)?;
    let h = Subgroup::builtin(&g, "evens")?;
    let s1 = compute_spectrum_with_tolerance(&PairGraph::build(&h, &[3, 5, 7])?, tau)?;
    let s2 = compute_spectrum_with_tolerance(&PairGraph::build(&h, &[1, 3, 5, 13, 15, 17, 19])?, tau)?;
    Ok(vec![
        clusters_match("clusters of {3,5,7}", &z20_expected(3.0), &s1),
        clusters_match("clusters of {1,3,5,13,15,17,19}", &z20_expected(7.0), &s2),
    ])
}

fn s4_ramanujan(tau: f64) -> Result<Vec<Comparison>> {
    let g = FiniteGroup::symmetric(4)?;
    let h = Subgroup::builtin(&g, "alternating_in_symmetric")?;
    let parse = |v: &[&str]| v.iter().map(|s| g.parse_element(s)).collect::<Result<Vec<Elem>>>();
    let set = parse(&["(1,2)", "(1,3)", "(2,4)", "(3,4)", "(1,2,3,4)", "(1,3,2,4)", "(1,4,2,3)", "(1,4,3,2)"])?;
    let pg = PairGraph::build(&h, &set)?;
    let spectrum = compute_spectrum_with_tolerance(&pg, tau)?;
    let report = is_ramanujan_with_tolerance(&pg, tau)?;
    let complement = PairGraph::build(&h, &parse(&["(1,2)", "(3,4)", "(1,3,2,4)", "(1,4,2,3)"])?)?;
    Ok(vec![
        clusters_match("clusters", &[(8.0, 1), (4.0, 2), (0.0, 18), (-4.0, 2), (-8.0, 1)], &spectrum),
        same("ramanujan", true, report.ramanujan),
        same("components of the 4-regular complement", 3, components_bfs(&complement).count),
    ])
}

fn gl3() -> Result<Subgroup> {
    let g = FiniteGroup::gl2(3)?;
    Subgroup::builtin(&g, "sl2_in_gl2")
}

fn gl3_random_17(tau: f64) -> Result<Vec<Comparison>> {
    let h = gl3()?;
    let config = SearchConfig { tolerance: tau, ..SearchConfig::random(17, 20, GL3_SEED) };
    let outcome = search_ramanujan(&h, &config)?;
    let failing: Vec<usize> =
        outcome.results.iter().filter(|r| r.connected && r.ramanujan != Some(true)).map(|r| r.trial).collect();
    Ok(vec![
        same("size bound met", true, outcome.size_bound.satisfied),
        same("connected trials that are not Ramanujan", Vec::<usize>::new(), failing),
        same("bound violations", Vec::<usize>::new(), outcome.bound_violations),
    ])
}

fn gl3_complement_7(tau: f64) -> Result<Vec<Comparison>> {
    let h = gl3()?;
    let outer = h.complement();
    let mut found = None;
    for trial in 0..20 {
        let chosen = random_candidate(&outer, 17, GL3_SEED, trial);
        let rest: Vec<Elem> = outer.iter().copied().filter(|x| !chosen.contains(x)).collect();
        let pg = PairGraph::build(&h, &rest)?;
        if !is_connected(&h, pg.generating_set()).connected {
            continue;
        }
        let bound = ramanujan_bound_check(&h, pg.generating_set())?;
        let report = is_ramanujan_with_tolerance(&pg, tau)?;
        if report.ramanujan && !bound.satisfied {
            found = Some(trial);
            break;
        }
    }
    Ok(vec![same("some complement is Ramanujan below the bound", true, found.is_some())])
}
