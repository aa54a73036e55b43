//! Seeded random instances shared by the integration tests.
#![allow(dead_code)]

use pairgraph_core::{Elem, FiniteGroup, GroupRef, Subgroup};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub struct Instance {
    pub name: String,
    pub h: Subgroup,
    pub set: Vec<Elem>,
}

/// A group of order at most 48 from one of several families.
pub fn random_group(rng: &mut ChaCha8Rng) -> GroupRef {
    match rng.random_range(0..11) {
        0 | 1 => FiniteGroup::cyclic(rng.random_range(2..=36)).unwrap(),
        2 => FiniteGroup::dihedral(rng.random_range(2..=12)).unwrap(),
        3 => FiniteGroup::symmetric(rng.random_range(3..=4)).unwrap(),
        4 => FiniteGroup::alternating(4).unwrap(),
        5 => FiniteGroup::gl2(3).unwrap(),
        6 => FiniteGroup::sl2(3).unwrap(),
        7 => FiniteGroup::field_additive(2, rng.random_range(2..=5)).unwrap(),
        8 => FiniteGroup::field_additive([3, 5][rng.random_range(0..2)], 2).unwrap(),
        9 => {
            let c2 = FiniteGroup::cyclic(2).unwrap();
            FiniteGroup::direct_product(&c2, &FiniteGroup::symmetric(3).unwrap()).unwrap()
        }
        _ => {
            let c3 = FiniteGroup::cyclic(3).unwrap();
            FiniteGroup::direct_product(&c3, &FiniteGroup::cyclic(rng.random_range(2..=6)).unwrap()).unwrap()
        }
    }
}

/// Subgroup generated by zero to two random elements.
pub fn random_subgroup(rng: &mut ChaCha8Rng, g: &GroupRef) -> Subgroup {
    let count = rng.random_range(0..=2);
    let gens: Vec<Elem> = (0..count).map(|_| rng.random_range(0..g.order() as Elem)).collect();
    Subgroup::generated(g, &gens).unwrap()
}

/// A valid generating set: outer elements kept with probability `p`,
/// inner elements added together with their inverses.
pub fn random_set(rng: &mut ChaCha8Rng, h: &Subgroup) -> Vec<Elem> {
    let g = h.parent();
    let p: f64 = rng.random_range(0.0..0.7);
    let mut member = vec![false; g.order()];
    for x in g.elements().filter(|&x| x != g.identity()) {
        if rng.random_bool(p) {
            member[x as usize] = true;
            if h.contains(x) {
                member[g.inv(x) as usize] = true;
            }
        }
    }
    g.elements().filter(|&x| member[x as usize]).collect()
}

pub fn random_instance(seed: u64) -> Instance {
    let mut r = rng(seed);
    let g = random_group(&mut r);
    let h = random_subgroup(&mut r, &g);
    let set = random_set(&mut r, &h);
    Instance { name: format!("{} / |H|={} seed {seed}", g.name(), h.order()), h, set }
}

/// An index-2 subgroup from the families `Z/2m`, `S4/A4`, `GL2(F3)/SL2(F3)`
/// and dihedral rotations.
pub fn random_index_two(rng: &mut ChaCha8Rng, families: &[&str]) -> Subgroup {
    match *families.choose(rng).unwrap() {
        "cyclic" => {
            let g = FiniteGroup::cyclic(2 * rng.random_range(2..=15)).unwrap();
            Subgroup::builtin(&g, "evens").unwrap()
        }
        "s4" => {
            let g = FiniteGroup::symmetric(4).unwrap();
            Subgroup::builtin(&g, "alternating_in_symmetric").unwrap()
        }
        "gl3" => {
            let g = FiniteGroup::gl2(3).unwrap();
            Subgroup::builtin(&g, "sl2_in_gl2").unwrap()
        }
        "dihedral" => {
            let n = rng.random_range(3..=10);
            let g = FiniteGroup::dihedral(n).unwrap();
            Subgroup::generated(&g, &[1]).unwrap()
        }
        other => panic!("unknown family {other}"),
    }
}

/// A uniformly random split of `G - H` into two nonempty parts.
pub fn random_split(rng: &mut ChaCha8Rng, h: &Subgroup) -> (Vec<Elem>, Vec<Elem>) {
    let mut outer = h.complement();
    outer.shuffle(rng);
    let k = rng.random_range(1..outer.len());
    let mut a = outer[..k].to_vec();
    let mut b = outer[k..].to_vec();
    a.sort_unstable();
    b.sort_unstable();
    (a, b)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
