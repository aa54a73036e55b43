//! Transformations of generating sets that keep the pair graph's
//! isomorphism class, and orbit / isomorphism utilities built on them.
//!
//! Both actions work in the regime `S ⊆ G - H`: right translation
//! `S ↦ S h'` for `h' ∈ H` and `S ↦ ψ(S)` for an automorphism `ψ` with
//! `ψ(H) = H`.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::PairGraph;
use crate::group::{Elem, FiniteGroup, Subgroup};

/// Largest group for which [`automorphism_group`] runs.
pub const AUTOMORPHISM_ORDER_CAP: usize = 120;
/// Largest automorphism group [`automorphism_group`] will list.
pub const AUTOMORPHISM_COUNT_CAP: usize = 100_000;
/// Largest orbit [`orbit_of_set`] will enumerate.
pub const ORBIT_CAP: usize = 100_000;
/// Largest vertex count accepted by [`find_isomorphism`].
pub const ISOMORPHISM_CAP: usize = 64;

const EXHAUSTIVE_HOM_CAP: usize = 64;
const SAMPLED_PAIRS: usize = 10_000;

/// A bijection of `G` given by its image table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism(Vec<Elem>);

impl Automorphism {
    pub fn identity(g: &FiniteGroup) -> Self {
        Automorphism(g.elements().collect())
    }

    /// Checks that `images` is a bijection respecting multiplication:
    /// exhaustively for `|G| ≤ 64`, on 10^4 seeded random pairs above.
    pub fn new(g: &FiniteGroup, images: Vec<Elem>) -> Result<Self> {
        let m = g.order();
        if images.len() != m {
            return Err(Error::NotAutomorphism(format!("{} images for a group of order {m}", images.len())));
        }
        let mut seen = vec![false; m];
        for &y in &images {
            g.check_element(y as usize)?;
            if std::mem::replace(&mut seen[y as usize], true) {
                return Err(Error::NotAutomorphism(format!("{} is hit twice", g.label(y))));
            }
        }
        let hom = |a: Elem, b: Elem| images[g.mul(a, b) as usize] == g.mul(images[a as usize], images[b as usize]);
        let bad = if m <= EXHAUSTIVE_HOM_CAP {
            g.elements().flat_map(|a| g.elements().map(move |b| (a, b))).find(|&(a, b)| !hom(a, b))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(m as u64);
            (0..SAMPLED_PAIRS)
                .map(|_| (rng.random_range(0..m as Elem), rng.random_range(0..m as Elem)))
                .find(|&(a, b)| !hom(a, b))
        };
        if let Some((a, b)) = bad {
            return Err(Error::NotAutomorphism(format!(
                "psi({} * {}) != psi({}) * psi({})",
                g.label(a),
                g.label(b),
                g.label(a),
                g.label(b)
            )));
        }
        Ok(Automorphism(images))
    }

    /// `x ↦ x^u` on a cyclic group `Z/n`; `u` must be a unit mod `n`.
    pub fn cyclic_power(g: &FiniteGroup, u: usize) -> Result<Self> {
        let n = g
            .cyclic_modulus()
            .ok_or_else(|| Error::InvalidParameter(format!("{} is not cyclic", g.name())))?;
        Self::new(g, (0..n).map(|x| ((x * u) % n) as Elem).collect())
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.0[x as usize]
    }

    pub fn images(&self) -> &[Elem] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    /// Whether `ψ(H) = H`.
    pub fn preserves(&self, h: &Subgroup) -> bool {
        h.elements().iter().all(|&x| h.contains(self.apply(x)))
    }
}

fn require_outer(h: &Subgroup, set: &[Elem]) -> Result<()> {
    let g = h.parent();
    for &s in set {
        g.check_element(s as usize)?;
        if h.contains(s) {
            return Err(Error::Precondition(format!("{} lies in H; expected S ⊆ G - H", g.label(s))));
        }
    }
    Ok(())
}

fn sorted(mut v: Vec<Elem>) -> Vec<Elem> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `S x = {s x : s ∈ S}` for `x ∈ H`, sorted.
pub fn right_translate_set(h: &Subgroup, set: &[Elem], x: Elem) -> Result<Vec<Elem>> {
    if !h.contains(x) {
        return Err(Error::NotInSubgroup(x));
    }
    require_outer(h, set)?;
    let g = h.parent();
    Ok(sorted(set.iter().map(|&s| g.mul(s, x)).collect()))
}

/// The vertex bijection carrying `G(G,H,S)` onto `G(G,H,S x)`: identity on
/// `H`, right multiplication by `x` on `G - H`.
pub fn right_translation_isomorphism(h: &Subgroup, x: Elem) -> Result<Vec<Elem>> {
    if !h.contains(x) {
        return Err(Error::NotInSubgroup(x));
    }
    let g = h.parent();
    Ok(g.elements().map(|v| if h.contains(v) { v } else { g.mul(v, x) }).collect())
}

/// `ψ(S)`, sorted. Requires `ψ(H) = H`.
pub fn apply_automorphism_to_set(h: &Subgroup, psi: &Automorphism, set: &[Elem]) -> Result<Vec<Elem>> {
    let g = h.parent();
    if psi.images().len() != g.order() {
        return Err(Error::NotAutomorphism("image table does not match the group order".into()));
    }
    if !psi.preserves(h) {
        return Err(Error::Precondition("automorphism does not map H onto itself".into()));
    }
    for &s in set {
        g.check_element(s as usize)?;
    }
    Ok(sorted(set.iter().map(|&s| psi.apply(s)).collect()))
}

/// All automorphisms of `g` (`|G| ≤ 120`), sorted by image table; the
/// identity comes first.
///
/// Images are assigned to a greedy generating set one generator at a time;
/// each partial assignment is extended along right multiplication and
/// rejected on the first inconsistency or collision.
pub fn automorphism_group(g: &FiniteGroup) -> Result<Vec<Automorphism>> {
    let m = g.order();
    if m > AUTOMORPHISM_ORDER_CAP {
        return Err(Error::SizeCap { what: "group order for automorphism search", size: m, cap: AUTOMORPHISM_ORDER_CAP });
    }
    let gens = g.generators();
    let orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| g.elements().filter(|&y| orders[y as usize] == orders[s as usize]).collect())
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    extend_assignment(g, &gens, &candidates, &mut images, &mut out)?;
    out.sort();
    Ok(out)
}

fn extend_assignment(
    g: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
    out: &mut Vec<Automorphism>,
) -> Result<()> {
    let depth = images.len();
    let Some(map) = partial_homomorphism(g, &gens[..depth], images) else {
        return Ok(());
    };
    if depth == gens.len() {
        if out.len() >= AUTOMORPHISM_COUNT_CAP {
            return Err(Error::SizeCap { what: "automorphism count", size: out.len() + 1, cap: AUTOMORPHISM_COUNT_CAP });
        }
        out.push(Automorphism(map.into_iter().map(|y| y.expect("generators span G")).collect()));
        return Ok(());
    }
    for &y in &candidates[depth] {
        if map[gens[depth] as usize].is_some_and(|z| z != y) {
            continue;
        }
        images.push(y);
        extend_assignment(g, gens, candidates, images, out)?;
        images.pop();
    }
    Ok(())
}

/// Extends `gens[i] ↦ images[i]` to the subgroup they generate, or `None`
/// when the assignment is not an injective homomorphism there.
fn partial_homomorphism(g: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> Option<Vec<Option<Elem>>> {
    let m = g.order();
    let mut map: Vec<Option<Elem>> = vec![None; m];
    let mut used = vec![false; m];
    let e = g.identity();
    map[e as usize] = Some(e);
    used[e as usize] = true;
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x as usize].unwrap();
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, t);
            match map[y as usize] {
                Some(prev) if prev != fy => return None,
                Some(_) => {}
                None => {
                    if std::mem::replace(&mut used[fy as usize], true) {
                        return None;
                    }
                    map[y as usize] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}

/// Closure of `{S}` under right translations by `H` and the automorphisms
/// in `autos` that preserve `H` (others are skipped). Requires `[G:H] = 2`
/// and `S ⊆ G - H`. Members are sorted sets, listed in sorted order.
pub fn orbit_under(h: &Subgroup, set: &[Elem], autos: &[Automorphism]) -> Result<Vec<Vec<Elem>>> {
    if h.index() != 2 {
        return Err(Error::Precondition(format!("orbits need [G:H] = 2, got {}", h.index())));
    }
    require_outer(h, set)?;
    let g = h.parent();
    let autos: Vec<&Automorphism> = autos.iter().filter(|a| a.preserves(h)).collect();
    let start = sorted(set.to_vec());
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let translates = h
            .elements()
            .iter()
            .map(|&x| sorted(cur.iter().map(|&s| g.mul(s, x)).collect()));
        let images = autos.iter().map(|a| sorted(cur.iter().map(|&s| a.apply(s)).collect()));
        for next in translates.chain(images) {
            if seen.insert(next.clone()) {
                if seen.len() > ORBIT_CAP {
                    return Err(Error::SizeCap { what: "orbit size", size: seen.len(), cap: ORBIT_CAP });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// [`orbit_under`] with the full automorphism group of `G`.
pub fn orbit_of_set(h: &Subgroup, set: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    let autos = automorphism_group(h.parent())?;
    orbit_under(h, set, &autos)
}

/// Whether `map` is a graph isomorphism from `a` onto `b`.
pub fn is_isomorphism(a: &PairGraph, b: &PairGraph, map: &[Elem]) -> bool {
    let n = a.vertex_count();
    if b.vertex_count() != n || map.len() != n || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut seen = vec![false; n];
    if map.iter().any(|&y| (y as usize) >= n || std::mem::replace(&mut seen[y as usize], true)) {
        return false;
    }
    a.edges()
        .iter()
        .all(|&(u, v)| b.adjacency().get(map[u as usize] as usize, map[v as usize] as usize))
}

/// A vertex bijection `a → b` preserving adjacency, by backtracking with
/// degree and neighbour-degree pruning. Limited to 64 vertices.
pub fn find_isomorphism(a: &PairGraph, b: &PairGraph) -> Result<Option<Vec<Elem>>> {
    let n = a.vertex_count();
    if n > ISOMORPHISM_CAP {
        return Err(Error::SizeCap { what: "vertices for isomorphism search", size: n, cap: ISOMORPHISM_CAP });
    }
    if b.vertex_count() != n || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let signature = |pg: &PairGraph, v: Elem| {
        let mut nd: Vec<usize> = pg.neighbors(v).iter().map(|&w| pg.degree(w)).collect();
        nd.sort_unstable();
        (pg.degree(v), nd)
    };
    let sig_a: Vec<_> = (0..n as Elem).map(|v| signature(a, v)).collect();
    let sig_b: Vec<_> = (0..n as Elem).map(|v| signature(b, v)).collect();
    let mut ms_a = sig_a.clone();
    let mut ms_b = sig_b.clone();
    ms_a.sort();
    ms_b.sort();
    if ms_a != ms_b {
        return Ok(None);
    }
    // Visit vertices of `a` in BFS order so most have a mapped neighbour.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for start in 0..n {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        let mut queue = VecDeque::from([start as Elem]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in a.neighbors(v) {
                if !std::mem::replace(&mut placed[w as usize], true) {
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![Elem::MAX; n];
    let mut used = vec![false; n];
    let ok = backtrack(a, b, &order, &sig_a, &sig_b, &mut map, &mut used, 0);
    Ok(ok.then_some(map))
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &PairGraph,
    b: &PairGraph,
    order: &[Elem],
    sig_a: &[(usize, Vec<usize>)],
    sig_b: &[(usize, Vec<usize>)],
    map: &mut [Elem],
    used: &mut [bool],
    depth: usize,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    // Candidates: neighbours of an already mapped neighbour's image, or all.
    let anchor = a.neighbors(v).iter().find(|&&w| map[w as usize] != Elem::MAX);
    let pool: Vec<Elem> = match anchor {
        Some(&w) => b.neighbors(map[w as usize]).to_vec(),
        None => (0..b.vertex_count() as Elem).collect(),
    };
    for y in pool {
        if used[y as usize] || sig_a[v as usize] != sig_b[y as usize] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            a.adjacency().get(u as usize, v as usize) == b.adjacency().get(map[u as usize] as usize, y as usize)
        });
        if !consistent {
            continue;
        }
        map[v as usize] = y;
        used[y as usize] = true;
        if backtrack(a, b, order, sig_a, sig_b, map, used, depth + 1) {
            return true;
        }
        map[v as usize] = Elem::MAX;
        used[y as usize] = false;
    }
    false
}
