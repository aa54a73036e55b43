//! Acceptance criteria, one check per criterion. Each prints a PASS/FAIL
//! line; the test fails if any criterion fails.

mod common;

use std::time::Instant;

use common::{close, random_index_two, random_instance, random_split, rng};
use pairgraph_core::actions::{apply_automorphism_to_set, automorphism_group, right_translate_set};
use pairgraph_core::graph::group_matrix_rows;
use pairgraph_core::spectral::{
    compute_spectrum, is_ramanujan, largest_eigenvalue_multiplicity, ramanujan_bound_check, trivial_eigenvalues,
    verify_spectral_symmetry, zero_multiplicity_lower_bound, DEFAULT_TOLERANCE,
};
use pairgraph_core::structure::{component_count_formula, components_bfs};
use pairgraph_core::{Elem, FiniteGroup, PairGraph, SearchConfig, Subgroup};
use rand::seq::IndexedRandom;
use rand::Rng;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn z12_with(elems: &[Elem]) -> PairGraph {
    let g = FiniteGroup::cyclic(12).unwrap();
    let h = Subgroup::from_elements(&g, &[0, 3, 6, 9]).unwrap();
    PairGraph::build(&h, elems).unwrap()
}

fn spectrum_contains(pg: &PairGraph, value: f64, tol: f64) -> Result<bool, String> {
    let sp = compute_spectrum(pg).map_err(|e| e.to_string())?;
    Ok(sp.eigenvalues().iter().any(|&x| close(x, value, tol)))
}

fn sorted_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

fn z12_degree_profile() -> Outcome {
    let pg = z12_with(&[2, 4, 5, 7, 8]);
    let profile: Vec<(usize, usize)> = pg.degree_profile().iter().map(|c| (c.coset, c.degree)).collect();
    ensure!(profile == vec![(0, 5), (1, 2), (2, 3)], "degree profile {profile:?}");
    let bfs = components_bfs(&pg).count;
    let formula = component_count_formula(pg.subgroup(), pg.generating_set()).count;
    ensure!(bfs == 1 && formula == 1, "components bfs {bfs}, formula {formula}");
    Ok("profile (5,2,3), 1 component by BFS and formula".into())
}

fn z12_component_terms() -> Outcome {
    let mut detail = Vec::new();
    for (set, want, terms) in [(&[1, 7][..], 6, (2, 8, 4)), (&[4, 5, 6, 10, 11][..], 2, (2, 8, 8))] {
        let pg = z12_with(set);
        let f = component_count_formula(pg.subgroup(), pg.generating_set());
        let bfs = components_bfs(&pg).count;
        let got = (f.subgroup_index, f.outer_vertices, f.covered_outer);
        ensure!(f.count == want && bfs == want, "S = {set:?}: formula {}, bfs {bfs}, want {want}", f.count);
        ensure!(got == terms, "S = {set:?}: terms {got:?}, want {terms:?}");
        detail.push(format!("{set:?} -> {want} {got:?}"));
    }
    Ok(detail.join("; "))
}

/// A 7-subset of `GL2(F5) - SL2(F5)` meeting the nontrivial cosets 2, 2 and 3 times.
fn gl5_pattern_set(h: &Subgroup) -> Vec<Elem> {
    let mut set = Vec::new();
    for (coset, take) in [(1, 2), (2, 2), (3, 3)] {
        set.extend(h.coset(coset).into_iter().take(take));
    }
    set.sort_unstable();
    set
}

fn trivial_eigenvalue_examples() -> Outcome {
    let mut detail = Vec::new();

    let f49 = FiniteGroup::field_additive(7, 2).unwrap();
    let f7 = Subgroup::generated(&f49, &[1]).unwrap();
    let set = f49.field().unwrap().norm_preimage(&[5, 6]).unwrap();
    ensure!(set.len() == 16, "norm preimage has {} elements", set.len());
    let pg = PairGraph::build(&f7, &set).unwrap();
    let t = trivial_eigenvalues(pg.generating_set()).unwrap();
    let want = 4.0 * 3f64.sqrt();
    ensure!(t.outer_square_sum() == 48 && t.inner_size == 0, "F49: sum of squares {}", t.outer_square_sum());
    ensure!(close(t.mu_plus, want, 1e-12) && close(t.mu_minus.unwrap(), -want, 1e-12), "F49 formula {t:?}");
    ensure!(spectrum_contains(&pg, want, 1e-6)? && spectrum_contains(&pg, -want, 1e-6)?, "F49 spectrum lacks ±4√3");
    detail.push("F49 ±4√3".to_string());

    let gl = FiniteGroup::gl2(5).unwrap();
    let sl = Subgroup::builtin(&gl, "sl2_in_gl2").unwrap();
    let set = gl5_pattern_set(&sl);
    let pg = PairGraph::build(&sl, &set).unwrap();
    let mut pattern = pg.generating_set().outer_coset_counts().to_vec();
    pattern.retain(|&c| c > 0);
    pattern.sort_unstable();
    ensure!(pattern == vec![2, 2, 3], "GL2(F5) pattern {pattern:?}");
    let t = trivial_eigenvalues(pg.generating_set()).unwrap();
    let want = 17f64.sqrt();
    ensure!(close(t.mu_plus, want, 1e-12) && close(t.mu_minus.unwrap(), -want, 1e-12), "GL2(F5) formula {t:?}");
    ensure!(
        spectrum_contains(&pg, want, 1e-6)? && spectrum_contains(&pg, -want, 1e-6)?,
        "GL2(F5) spectrum lacks ±√17"
    );
    detail.push(format!("GL2(F5) ±√17 on {} vertices", pg.vertex_count()));

    let a4 = FiniteGroup::alternating(4).unwrap();
    let klein = Subgroup::builtin(&a4, "klein_in_a4").unwrap();
    let set: Vec<Elem> = ["(1,2)(3,4)", "(1,4)(2,3)", "(1,2,3)", "(1,4,3)", "(2,3,4)", "(2,4,3)"]
        .iter()
        .map(|s| a4.parse_element(s).unwrap())
        .collect();
    let pg = PairGraph::build(&klein, &set).unwrap();
    let t = trivial_eigenvalues(pg.generating_set()).unwrap();
    ensure!(t.mu_plus == 4.0 && t.mu_minus == Some(-2.0), "A4 formula {t:?}");
    ensure!(spectrum_contains(&pg, 4.0, 1e-6)? && spectrum_contains(&pg, -2.0, 1e-6)?, "A4 spectrum lacks 4, -2");
    detail.push("A4/Klein (4, -2)".to_string());
    Ok(detail.join("; "))
}

fn cyclic20_table() -> Outcome {
    let g = FiniteGroup::cyclic(20).unwrap();
    let h = Subgroup::builtin(&g, "evens").unwrap();
    let s5 = 5f64.sqrt();
    let mut positive = vec![3.0, (3.0 + s5) / 2.0, (3.0 + s5) / 2.0, (1.0 + s5) / 2.0, (1.0 + s5) / 2.0, 1.0];
    positive.extend([(s5 - 1.0) / 2.0, (s5 - 1.0) / 2.0, (3.0 - s5) / 2.0, (3.0 - s5) / 2.0]);
    let mut want: Vec<f64> = positive.iter().copied().chain(positive.iter().map(|x| -x)).collect();
    want.sort_by(|a, b| b.total_cmp(a));

    let sp1 = compute_spectrum(&PairGraph::build(&h, &[3, 5, 7]).unwrap()).map_err(|e| e.to_string())?;
    let gap1 = sorted_gap(sp1.eigenvalues(), &want);
    ensure!(sp1.len() == 20 && gap1 <= 1e-6, "S1 spectrum off by {gap1:e}");

    let sp2 = compute_spectrum(&PairGraph::build(&h, &[1, 3, 5, 13, 15, 17, 19]).unwrap()).map_err(|e| e.to_string())?;
    let mut want2 = want.clone();
    want2[0] = 7.0;
    want2[19] = -7.0;
    let gap2 = sorted_gap(sp2.eigenvalues(), &want2);
    ensure!(gap2 <= 1e-6, "S2 spectrum off by {gap2:e}");
    Ok(format!("max deviation {:.1e} / {:.1e}", gap1, gap2))
}

fn complementary_pairs() -> Outcome {
    let mut r = rng(0x5EED_0005);
    let families = ["cyclic", "s4", "gl3"];
    let mut worst = 0.0f64;
    let mut counts = [0usize; 3];
    for pair in 0..120 {
        let family = families[pair % 3];
        let h = random_index_two(&mut r, &[family]);
        let (s1, s2) = random_split(&mut r, &h);
        let rep = verify_spectral_symmetry(&h, &s1, &s2, DEFAULT_TOLERANCE).map_err(|e| e.to_string())?;
        ensure!(
            rep.max_interior_gap <= 1e-6 && rep.agrees,
            "pair {pair} in {}: gap {:e}, report {rep:?}",
            h.parent().name(),
            rep.max_interior_gap
        );
        worst = worst.max(rep.max_interior_gap);
        counts[pair % 3] += 1;
    }
    Ok(format!("{} pairs (cyclic {}, S4 {}, GL2(F3) {}), worst gap {worst:.1e}", counts.iter().sum::<usize>(), counts[0], counts[1], counts[2]))
}

fn s4_example() -> Outcome {
    let s4 = FiniteGroup::symmetric(4).unwrap();
    let a4 = Subgroup::builtin(&s4, "alternating_in_symmetric").unwrap();
    let parse = |v: &[&str]| -> Vec<Elem> { v.iter().map(|s| s4.parse_element(s).unwrap()).collect() };
    let set = parse(&["(1,2)", "(1,3)", "(2,4)", "(3,4)", "(1,2,3,4)", "(1,3,2,4)", "(1,4,2,3)", "(1,4,3,2)"]);
    let pg = PairGraph::build(&a4, &set).unwrap();
    let sp = compute_spectrum(&pg).map_err(|e| e.to_string())?;
    let got: Vec<(f64, usize)> = sp.clusters().iter().map(|c| (c.value, c.multiplicity)).collect();
    let want = [(8.0, 1), (4.0, 2), (0.0, 18), (-4.0, 2), (-8.0, 1)];
    ensure!(
        got.len() == want.len() && got.iter().zip(&want).all(|(a, b)| a.1 == b.1 && close(a.0, b.0, 1e-6)),
        "clusters {got:?}"
    );
    let r = is_ramanujan(&pg).map_err(|e| e.to_string())?;
    ensure!(r.ramanujan, "Ramanujan verdict false: {r:?}");
    let prime = parse(&["(1,2)", "(3,4)", "(1,3,2,4)", "(1,4,2,3)"]);
    let comps = components_bfs(&PairGraph::build(&a4, &prime).unwrap()).count;
    ensure!(comps == 3, "S' gives {comps} components");
    Ok("clusters (±8,1) (±4,2) (0,18), Ramanujan, S' has 3 components".into())
}

fn gl3_search() -> Outcome {
    let gl = FiniteGroup::gl2(3).unwrap();
    let sl = Subgroup::builtin(&gl, "sl2_in_gl2").unwrap();
    let outcome = pairgraph_core::search::search_ramanujan(&sl, &SearchConfig::random(17, 20, 2024))
        .map_err(|e| e.to_string())?;
    ensure!(outcome.results.len() == 20, "{} trials", outcome.results.len());
    ensure!(outcome.bound_violations.is_empty(), "violations {:?}", outcome.bound_violations);
    for t in &outcome.results {
        ensure!(!t.connected || t.ramanujan == Some(true), "trial {} connected but not Ramanujan", t.trial);
    }
    let mut witnesses = 0;
    for t in &outcome.results {
        let comp: Vec<Elem> = sl.complement().into_iter().filter(|x| !t.set.contains(x)).collect();
        let pg = PairGraph::build(&sl, &comp).unwrap();
        let bound = ramanujan_bound_check(&sl, pg.generating_set()).map_err(|e| e.to_string())?;
        if components_bfs(&pg).count == 1 && !bound.satisfied && is_ramanujan(&pg).map_err(|e| e.to_string())?.ramanujan {
            witnesses += 1;
        }
    }
    ensure!(witnesses >= 1, "no 7-set complement is Ramanujan below the bound");
    Ok(format!(
        "{} connected of 20, 0 violations; {witnesses} complements Ramanujan below the bound",
        outcome.connected
    ))
}

fn oracle_corpus() -> Outcome {
    let mut with_outer = 0;
    for seed in 0..500u64 {
        let inst = random_instance(seed);
        let pg = PairGraph::build(&inst.h, &inst.set).map_err(|e| format!("{}: {e}", inst.name))?;
        let rows = group_matrix_rows(&inst.h, &inst.set).map_err(|e| e.to_string())?;
        // H-rows are the group-matrix rows; the rest of A is their transpose.
        let adj = pg.adjacency();
        let mut expected = vec![vec![0u8; adj.size()]; adj.size()];
        for (row, &hi) in rows.iter().zip(inst.h.elements()) {
            for (j, &bit) in row.iter().enumerate() {
                expected[hi as usize][j] |= bit;
                expected[j][hi as usize] |= bit;
            }
        }
        for (v, want) in expected.iter().enumerate() {
            ensure!(*want == adj.row(v), "{}: row {v} differs", inst.name);
        }
        let bfs = components_bfs(&pg).count;
        let formula = component_count_formula(&inst.h, pg.generating_set()).count;
        ensure!(bfs == formula, "{}: bfs {bfs} vs formula {formula}", inst.name);

        let gen = pg.generating_set();
        let sp = compute_spectrum(&pg).map_err(|e| e.to_string())?;
        if !gen.outer().is_empty() {
            with_outer += 1;
            let mu = trivial_eigenvalues(gen).unwrap().mu_plus;
            let max = sp.max().unwrap();
            ensure!(close(mu, max, 1e-6), "{}: mu+ {mu} vs max {max}", inst.name);
            let want = largest_eigenvalue_multiplicity(&inst.h, gen).unwrap();
            let got = sp.clusters()[0].multiplicity;
            ensure!(got == want, "{}: top multiplicity {got}, predicted {want}", inst.name);
        }
        let bound = zero_multiplicity_lower_bound(&inst.h, gen);
        ensure!(sp.zero_multiplicity() >= bound, "{}: zero multiplicity {} < {bound}", inst.name, sp.zero_multiplicity());
    }
    Ok(format!("500 instances ({with_outer} with S_O nonempty)"))
}

fn invariance() -> Outcome {
    let mut r = rng(0x5EED_0009);
    let families = ["cyclic", "s4", "gl3", "dihedral"];
    let mut worst = 0.0f64;
    for pair in 0..50 {
        let h = random_index_two(&mut r, &families);
        let (set, _) = random_split(&mut r, &h);
        let x = *h.elements().choose(&mut r).unwrap();
        let moved = right_translate_set(&h, &set, x).map_err(|e| e.to_string())?;
        let a = compute_spectrum(&PairGraph::build(&h, &set).unwrap()).map_err(|e| e.to_string())?;
        let b = compute_spectrum(&PairGraph::build(&h, &moved).unwrap()).map_err(|e| e.to_string())?;
        let gap = sorted_gap(a.eigenvalues(), b.eigenvalues());
        ensure!(gap <= 1e-6, "translation pair {pair}: gap {gap:e}");
        worst = worst.max(gap);
    }

    let mut automorphism_pairs = 0;
    let mut seed = 10_000u64;
    while automorphism_pairs < 50 {
        seed += 1;
        let inst = random_instance(seed);
        let g = inst.h.parent();
        let Ok(autos) = automorphism_group(g) else { continue };
        let fixing: Vec<_> = autos.iter().filter(|a| a.preserves(&inst.h)).collect();
        let psi = if fixing.len() > 1 { fixing[r.random_range(1..fixing.len())] } else { fixing[0] };
        let moved = apply_automorphism_to_set(&inst.h, psi, &inst.set).map_err(|e| e.to_string())?;
        let a = compute_spectrum(&PairGraph::build(&inst.h, &inst.set).unwrap()).map_err(|e| e.to_string())?;
        let b = compute_spectrum(&PairGraph::build(&inst.h, &moved).unwrap()).map_err(|e| e.to_string())?;
        let gap = sorted_gap(a.eigenvalues(), b.eigenvalues());
        ensure!(gap <= 1e-6, "{}: automorphism gap {gap:e}", inst.name);
        worst = worst.max(gap);
        automorphism_pairs += 1;
    }

    let mut checked = 0;
    for seed in 0..500u64 {
        let inst = random_instance(seed);
        if inst.h.parent().order() > 48 {
            continue;
        }
        let pg = PairGraph::build(&inst.h, &inst.set).unwrap();
        for &x in inst.h.elements() {
            ensure!(pg.left_translation_commutes(x).unwrap(), "{}: P_h A != A P_h for h = {x}", inst.name);
        }
        checked += 1;
    }
    Ok(format!("50 translation + 50 automorphism pairs, worst gap {worst:.1e}; P_h A = A P_h on {checked} instances"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("z12 degree profile and connectivity", z12_degree_profile),
        ("z12 component counts and formula terms", z12_component_terms),
        ("trivial eigenvalues: F49/F7, GL2(F5)/SL2(F5), A4/Klein", trivial_eigenvalue_examples),
        ("Z/20 spectra of {3,5,7} and its companion", cyclic20_table),
        ("index-2 complementary spectra agree (>= 100 pairs)", complementary_pairs),
        ("S4/A4 Ramanujan example", s4_example),
        ("GL2(F3) random 17-sets and 7-set complements", gl3_search),
        ("oracle equivalences on 500 random instances", oracle_corpus),
        ("translation and automorphism invariance", invariance),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL [{}] {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}

