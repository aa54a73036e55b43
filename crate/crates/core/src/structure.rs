//! Connectivity, components and bipartiteness of pair graphs.
//!
//! Every question is answered twice where possible: once by plain graph
//! search over the built graph and once from group data alone, through the
//! subgroup `U = ⟨H ∩ (S_H ∪ S_O S_O^-1)⟩`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::PairGraph;
use crate::group::{Elem, FiniteGroup, GeneratingSet, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Component id per vertex; ids are ordered by smallest vertex.
    pub component_of: Vec<usize>,
    pub count: usize,
    pub sizes: Vec<usize>,
    /// Sorted vertex set of the component containing the identity.
    pub identity_component: Vec<Elem>,
}

impl ComponentDecomposition {
    pub fn members(&self, id: usize) -> Vec<Elem> {
        (0..self.component_of.len())
            .filter(|&v| self.component_of[v] == id)
            .map(|v| v as Elem)
            .collect()
    }
}

pub fn components_bfs(pg: &PairGraph) -> ComponentDecomposition {
    let n = pg.vertex_count();
    let mut component_of = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        component_of[start] = id;
        queue.push_back(start as Elem);
        let mut size = 0;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &w in pg.neighbors(v) {
                if component_of[w as usize] == usize::MAX {
                    component_of[w as usize] = id;
                    queue.push_back(w);
                }
            }
        }
        sizes.push(size);
    }
    let e_id = component_of[pg.group().identity() as usize];
    let identity_component =
        (0..n).filter(|&v| component_of[v] == e_id).map(|v| v as Elem).collect();
    ComponentDecomposition { component_of, count: sizes.len(), sizes, identity_component }
}

/// `U = ⟨H ∩ (S_H ∪ S_O S_O^-1)⟩`.
pub fn connecting_subgroup(h: &Subgroup, gen: &GeneratingSet) -> Subgroup {
    let g = h.parent();
    let mut gens: Vec<Elem> = gen.inner().to_vec();
    gens.extend(
        g.difference_set(gen.outer(), gen.outer())
            .into_iter()
            .filter(|&x| h.contains(x)),
    );
    Subgroup::generated(g, &gens).expect("generators are valid elements")
}

/// Number of vertices in `∪_{s ∈ S_O} H s`.
pub fn covered_outer_vertices(h: &Subgroup, gen: &GeneratingSet) -> usize {
    gen.outer_coset_counts().iter().filter(|&&c| c > 0).count() * h.order()
}

/// The three terms of the closed component count
/// `[H : U] + |G - H| - |∪_{s ∈ S_O} H s|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentFormula {
    pub subgroup_index: usize,
    pub outer_vertices: usize,
    pub covered_outer: usize,
    pub count: usize,
}

pub fn component_count_formula(h: &Subgroup, gen: &GeneratingSet) -> ComponentFormula {
    let u = connecting_subgroup(h, gen);
    let subgroup_index = h.order() / u.order();
    let outer_vertices = h.parent().order() - h.order();
    let covered_outer = covered_outer_vertices(h, gen);
    ComponentFormula {
        subgroup_index,
        outer_vertices,
        covered_outer,
        count: subgroup_index + outer_vertices - covered_outer,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    /// `U` when it is a proper subgroup of `H`.
    pub proper_subgroup: Option<Vec<Elem>>,
    /// Nontrivial cosets with no element of `S`.
    pub uncovered_cosets: Vec<usize>,
}

/// Connected iff `U = H` and `S_O` meets every nontrivial coset.
pub fn is_connected(h: &Subgroup, gen: &GeneratingSet) -> ConnectivityReport {
    let u = connecting_subgroup(h, gen);
    let proper_subgroup = (u.order() < h.order()).then(|| u.elements().to_vec());
    let uncovered_cosets: Vec<usize> = gen
        .coset_counts()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &c)| c == 0)
        .map(|(i, _)| i)
        .collect();
    ConnectivityReport {
        connected: proper_subgroup.is_none() && uncovered_cosets.is_empty(),
        proper_subgroup,
        uncovered_cosets,
    }
}

/// `U ∪ ⋃_{s ∈ S_O} U s`, sorted.
pub fn identity_component_formula(h: &Subgroup, gen: &GeneratingSet) -> Vec<Elem> {
    let g = h.parent();
    let u = connecting_subgroup(h, gen);
    let mut member = vec![false; g.order()];
    for &x in u.elements() {
        member[x as usize] = true;
        for &s in gen.outer() {
            member[g.mul(x, s) as usize] = true;
        }
    }
    g.elements().filter(|&x| member[x as usize]).collect()
}

/// Left translate `x · comp` for `x ∈ H`, sorted.
pub fn translate_component(h: &Subgroup, x: Elem, comp: &[Elem]) -> Result<Vec<Elem>> {
    if !h.contains(x) {
        return Err(Error::NotInSubgroup(x));
    }
    let g = h.parent();
    let mut out: Vec<Elem> = comp.iter().map(|&v| g.mul(x, v)).collect();
    out.sort_unstable();
    Ok(out)
}

/// BFS 2-coloring; `Some(colors)` when the graph is bipartite.
pub fn two_coloring(pg: &PairGraph) -> Option<Vec<u8>> {
    let n = pg.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        queue.push_back(start as Elem);
        while let Some(v) = queue.pop_front() {
            let c = color[v as usize];
            for &w in pg.neighbors(v) {
                match color[w as usize] {
                    u8::MAX => {
                        color[w as usize] = 1 - c;
                        queue.push_back(w);
                    }
                    cw if cw == c => return None,
                    _ => {}
                }
            }
        }
    }
    Some(color)
}

pub fn is_bipartite(pg: &PairGraph) -> bool {
    two_coloring(pg).is_some()
}

/// Coordinates of `G / Q` for `Q = ⟨g² : g ∈ G⟩`, an elementary abelian
/// 2-group: each element gets a bit vector, and index-2 subgroups are the
/// kernels of nonzero linear functionals on these vectors.
struct SquareQuotient {
    coords: Vec<u32>,
    rank: u32,
}

impl SquareQuotient {
    fn new(g: &FiniteGroup) -> Self {
        let squares: Vec<Elem> = g.elements().map(|x| g.mul(x, x)).collect();
        let q = g.generated_elements(&squares);
        let mut coords = vec![u32::MAX; g.order()];
        let mut current = q.clone();
        for &x in &q {
            coords[x as usize] = 0;
        }
        let mut rank = 0;
        while current.len() < g.order() {
            let b = g.elements().find(|&x| coords[x as usize] == u32::MAX).unwrap();
            let snapshot = current.len();
            for i in 0..snapshot {
                let x = current[i];
                let y = g.mul(x, b);
                coords[y as usize] = coords[x as usize] | (1 << rank);
                current.push(y);
            }
            rank += 1;
        }
        SquareQuotient { coords, rank }
    }

    fn sign(&self, functional: u32, x: Elem) -> bool {
        (functional & self.coords[x as usize]).count_ones() % 2 == 1
    }
}

/// All index-2 subgroups of `g`, each as a sorted element list.
pub fn index_two_subgroups(g: &FiniteGroup) -> Vec<Vec<Elem>> {
    let sq = SquareQuotient::new(g);
    (1..1u32 << sq.rank)
        .map(|f| g.elements().filter(|&x| !sq.sign(f, x)).collect())
        .collect()
}

/// Kernel of a homomorphism `χ: G → {±1}` with `χ(S) = {-1}`, if one
/// exists. For `S = ∅` the trivial homomorphism qualifies and the kernel is
/// all of `G`.
pub fn sign_homomorphism(g: &FiniteGroup, set: &[Elem]) -> Option<Vec<Elem>> {
    if set.is_empty() {
        return Some(g.elements().collect());
    }
    let sq = SquareQuotient::new(g);
    (1..1u32 << sq.rank)
        .find(|&f| set.iter().all(|&s| sq.sign(f, s)))
        .map(|f| g.elements().filter(|&x| !sq.sign(f, x)).collect())
}

pub fn sign_homomorphism_exists(g: &FiniteGroup, set: &[Elem]) -> bool {
    sign_homomorphism(g, set).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, GroupRef};

    fn z12() -> (GroupRef, Subgroup) {
        let g = FiniteGroup::cyclic(12).unwrap();
        let h = Subgroup::from_elements(&g, &[0, 3, 6, 9]).unwrap();
        (g, h)
    }

    #[test]
    fn example_component_counts() {
        let (_, h) = z12();
        for (set, count, terms) in [
            (vec![2, 4, 5, 7, 8], 1, (1, 8, 8)),
            (vec![1, 7], 6, (2, 8, 4)),
            (vec![4, 5, 6, 10, 11], 2, (2, 8, 8)),
        ] {
            let pg = PairGraph::build(&h, &set).unwrap();
            assert_eq!(components_bfs(&pg).count, count, "{set:?}");
            let f = component_count_formula(&h, pg.generating_set());
            assert_eq!((f.subgroup_index, f.outer_vertices, f.covered_outer), terms);
            assert_eq!(f.count, count);
        }
    }

    #[test]
    fn empty_set_formula() {
        let (g, h) = z12();
        let gen = GeneratingSet::new(&h, &[]).unwrap();
        assert_eq!(component_count_formula(&h, &gen).count, g.order());
        assert_eq!(identity_component_formula(&h, &gen), vec![0]);
    }

    #[test]
    fn connectivity_witness() {
        let (_, h) = z12();
        let ok = is_connected(&h, &GeneratingSet::new(&h, &[2, 4, 5, 7, 8]).unwrap());
        assert!(ok.connected);
        let bad = is_connected(&h, &GeneratingSet::new(&h, &[1, 7]).unwrap());
        assert!(!bad.connected);
        assert_eq!(bad.proper_subgroup, Some(vec![0, 6]));
        assert_eq!(bad.uncovered_cosets, vec![2]);
    }

    #[test]
    fn identity_component_and_translation() {
        let (_, h) = z12();
        let pg = PairGraph::build(&h, &[1, 7]).unwrap();
        let comps = components_bfs(&pg);
        let formula = identity_component_formula(&h, pg.generating_set());
        assert_eq!(formula, vec![0, 1, 6, 7]);
        assert_eq!(comps.identity_component, formula);
        let moved = translate_component(&h, 3, &formula).unwrap();
        assert_eq!(moved, vec![3, 4, 9, 10]);
        assert_eq!(comps.members(comps.component_of[3]), moved);
        assert_eq!(translate_component(&h, 0, &formula).unwrap(), formula);
        assert!(translate_component(&h, 1, &formula).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let a4 = FiniteGroup::alternating(4).unwrap();
        let v = Subgroup::builtin(&a4, "klein_in_a4").unwrap();
        let set: Vec<Elem> = ["(1,2)(3,4)", "(1,4)(2,3)", "(1,2,3)", "(1,4,3)", "(2,3,4)", "(2,4,3)"]
            .iter()
            .map(|t| a4.parse_element(t).unwrap())
            .collect();
        let pg = PairGraph::build(&v, &set).unwrap();
        assert!(is_bipartite(&pg));
        assert!(!sign_homomorphism_exists(&a4, &set));
        assert!(index_two_subgroups(&a4).is_empty());

        // S ∩ H = ∅ gives the bipartition H, G - H
        let (_, h) = z12();
        let pg = PairGraph::build(&h, &[1, 2, 4]).unwrap();
        let colors = two_coloring(&pg).unwrap();
        for &x in h.elements() {
            for y in 0..12u32 {
                if !h.contains(y) && pg.degree(y) > 0 {
                    assert_ne!(colors[x as usize], colors[y as usize]);
                }
            }
        }

        let z3 = FiniteGroup::cyclic(3).unwrap();
        let triangle = PairGraph::build(&Subgroup::whole(&z3), &[1, 2]).unwrap();
        assert!(!is_bipartite(&triangle));
    }

    #[test]
    fn sign_homomorphisms() {
        let z20 = FiniteGroup::cyclic(20).unwrap();
        assert!(sign_homomorphism_exists(&z20, &[3, 5, 7]));
        assert_eq!(sign_homomorphism(&z20, &[1]).unwrap(), (0..20).step_by(2).collect::<Vec<_>>());
        assert!(!sign_homomorphism_exists(&z20, &[2]));
        let a4 = FiniteGroup::alternating(4).unwrap();
        assert!(!sign_homomorphism_exists(&a4, &[1]));
        assert!(sign_homomorphism_exists(&a4, &[]));
    }

    #[test]
    fn index_two_subgroup_counts() {
        // Z/2 x Z/2 x Z/3 has three index-2 subgroups; S_4 and D_4 have 1 and 3.
        let v = FiniteGroup::direct_product(
            &FiniteGroup::direct_product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(2).unwrap())
                .unwrap(),
            &FiniteGroup::cyclic(3).unwrap(),
        )
        .unwrap();
        assert_eq!(index_two_subgroups(&v).len(), 3);
        assert_eq!(index_two_subgroups(&FiniteGroup::symmetric(4).unwrap()).len(), 1);
        assert_eq!(index_two_subgroups(&FiniteGroup::dihedral(4).unwrap()).len(), 3);
        assert_eq!(index_two_subgroups(&FiniteGroup::cyclic(9).unwrap()).len(), 0);
        for g in [FiniteGroup::gl2(3).unwrap(), FiniteGroup::dihedral(6).unwrap()] {
            for n in index_two_subgroups(&g) {
                let sub = Subgroup::from_elements(&g, &n).unwrap();
                assert_eq!(sub.index(), 2);
            }
        }
    }
}
