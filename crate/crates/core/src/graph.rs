//! Group-subgroup pair graphs.
//!
//! For `H ≤ G` and `S ⊆ G` with `S ∩ H` symmetric, the pair graph has
//! vertex set `G` and an undirected edge `{h, h s}` for every `h ∈ H` and
//! `s ∈ S`. Vertices outside `H` are only ever adjacent to vertices of `H`.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GeneratingSet, GroupRef, Subgroup};

/// Dense symmetric 0/1 matrix stored as packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix { n, words, bits: vec![0; n * words] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn row(&self, i: usize) -> Vec<u8> {
        (0..self.n).map(|j| self.get(i, j) as u8).collect()
    }

    /// Row-major `f64` copy.
    pub fn to_dense(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    out[i * self.n + j] = 1.0;
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Degree of one right coset of `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosetDegree {
    pub coset: usize,
    pub degree: usize,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub regular: bool,
    pub degree: Option<usize>,
    /// What the index criterion predicts: a nontrivial pair graph is regular
    /// iff `[G:H] = 1`, or `[G:H] = 2` and `S_H = ∅`.
    pub predicted: bool,
    pub reason: String,
}

impl RegularityReport {
    pub fn agrees(&self) -> bool {
        self.regular == self.predicted
    }
}

#[derive(Debug, Clone)]
pub struct PairGraph {
    subgroup: Subgroup,
    gen: GeneratingSet,
    adjacency: BitMatrix,
    neighbors: Vec<Vec<Elem>>,
}

impl PairGraph {
    /// Validates `set` against `h` and builds the graph.
    pub fn build(h: &Subgroup, set: &[Elem]) -> Result<Self> {
        let gen = GeneratingSet::new(h, set)?;
        Ok(Self::from_generating_set(h, gen))
    }

    pub fn from_generating_set(h: &Subgroup, gen: GeneratingSet) -> Self {
        let g = h.parent();
        let n = g.order();
        let mut adjacency = BitMatrix::new(n);
        let mut neighbors = vec![Vec::new(); n];
        for &x in h.elements() {
            for &s in gen.elements() {
                let y = g.mul(x, s);
                let (xi, yi) = (x as usize, y as usize);
                if !adjacency.get(xi, yi) {
                    adjacency.set(xi, yi);
                    adjacency.set(yi, xi);
                    neighbors[xi].push(y);
                    neighbors[yi].push(x);
                }
            }
        }
        neighbors.iter_mut().for_each(|l| l.sort_unstable());
        PairGraph { subgroup: h.clone(), gen, adjacency, neighbors }
    }

    pub fn group(&self) -> &GroupRef {
        self.subgroup.parent()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn generating_set(&self) -> &GeneratingSet {
        &self.gen
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adjacency
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn neighbors(&self, v: Elem) -> &[Elem] {
        &self.neighbors[v as usize]
    }

    pub fn degree(&self, v: Elem) -> usize {
        self.neighbors[v as usize].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.neighbors.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v as usize > u).map(|&v| (u as Elem, v)));
        }
        out
    }

    /// One entry per coset, in coset-id order; entry 0 is `(0, |S|, |H|)`.
    pub fn degree_profile(&self) -> Vec<CosetDegree> {
        let h = &self.subgroup;
        h.coset_reps()
            .iter()
            .enumerate()
            .map(|(coset, &rep)| CosetDegree { coset, degree: self.degree(rep), size: h.order() })
            .collect()
    }

    pub fn isolated_vertices(&self) -> Vec<Elem> {
        self.group().elements().filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn regularity(&self) -> RegularityReport {
        let degrees = self.degrees();
        let first = degrees[0];
        let regular = degrees.iter().all(|&d| d == first);
        let index = self.subgroup.index();
        let (predicted, reason) = if self.gen.is_empty() {
            (true, "trivial graph (S = ∅): every vertex has degree 0".to_string())
        } else if index == 1 {
            (true, "[G:H] = 1: Cayley graph".to_string())
        } else if index == 2 && self.gen.inner().is_empty() {
            (true, "[G:H] = 2 and S_H = ∅".to_string())
        } else if index == 2 {
            (false, format!("[G:H] = 2 but |S_H| = {}", self.gen.inner().len()))
        } else {
            (false, format!("[G:H] = {index} >= 3"))
        };
        RegularityReport { regular, degree: regular.then_some(first), predicted, reason }
    }

    /// For `[G:H] = 2` and `S ⊆ G - H`: whether `S` is symmetric and the
    /// graph coincides with the Cayley graph of `(G, S)`.
    pub fn is_cayley_reduction(&self) -> Result<bool> {
        if self.subgroup.index() != 2 {
            return Err(Error::Precondition(format!(
                "Cayley reduction needs [G:H] = 2, got {}",
                self.subgroup.index()
            )));
        }
        if !self.gen.inner().is_empty() {
            return Err(Error::Precondition("Cayley reduction needs S ⊆ G - H".into()));
        }
        if !self.gen.is_symmetric(&self.subgroup) {
            return Ok(false);
        }
        Ok(cayley_adjacency(self.group(), self.gen.elements()) == self.adjacency)
    }

    /// Whether left translation by `h` commutes with the adjacency matrix:
    /// `A[h x][h y] = A[x][y]` for every pair of vertices.
    pub fn left_translation_commutes(&self, h: Elem) -> Result<bool> {
        if !self.subgroup.contains(h) {
            return Err(Error::NotInSubgroup(h));
        }
        let g = self.group();
        let n = self.vertex_count();
        let image: Vec<usize> = (0..n as Elem).map(|x| g.mul(h, x) as usize).collect();
        Ok((0..n).all(|x| (0..n).all(|y| self.adjacency.get(x, y) == self.adjacency.get(image[x], image[y]))))
    }
}

/// Rows of the group-subgroup matrix `(x_{h_i^-1 g_j})` evaluated at the
/// indicator of `S`: row `i` belongs to the `i`-th element of `H` in
/// increasing order, column `j` to element `j` of `G`.
pub fn group_matrix_rows(h: &Subgroup, set: &[Elem]) -> Result<Vec<Vec<u8>>> {
    let gen = GeneratingSet::new(h, set)?;
    let g = h.parent();
    Ok(h.elements()
        .iter()
        .map(|&hi| {
            let hinv = g.inv(hi);
            g.elements().map(|gj| gen.contains(g.mul(hinv, gj)) as u8).collect()
        })
        .collect())
}

/// Adjacency of the Cayley graph `{g, g s}` over all of `G`.
pub fn cayley_adjacency(g: &FiniteGroup, set: &[Elem]) -> BitMatrix {
    let mut a = BitMatrix::new(g.order());
    for x in g.elements() {
        for &s in set {
            let y = g.mul(x, s);
            a.set(x as usize, y as usize);
            a.set(y as usize, x as usize);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn z12_example(set: &[Elem]) -> PairGraph {
        let g = FiniteGroup::cyclic(12).unwrap();
        let h = Subgroup::from_elements(&g, &[0, 3, 6, 9]).unwrap();
        PairGraph::build(&h, set).unwrap()
    }

    #[test]
    fn example_degrees() {
        let pg = z12_example(&[2, 4, 5, 7, 8]);
        let profile: Vec<(usize, usize)> =
            pg.degree_profile().iter().map(|c| (c.coset, c.degree)).collect();
        assert_eq!(profile, vec![(0, 5), (1, 2), (2, 3)]);
        assert!(!pg.regularity().regular);
        assert!(pg.regularity().agrees());
        assert!(pg.adjacency().is_symmetric());
    }

    #[test]
    fn empty_set_is_edgeless() {
        let pg = z12_example(&[]);
        assert_eq!(pg.edge_count(), 0);
        assert_eq!(pg.isolated_vertices().len(), 12);
        assert!(pg.degree_profile().iter().all(|c| c.degree == 0));
        assert!(group_matrix_rows(pg.subgroup(), &[]).unwrap().iter().flatten().all(|&b| b == 0));
    }

    #[test]
    fn printed_group_matrix_rows() {
        let expected: Vec<Vec<u8>> = [
            "001011011000",
            "000001011011",
            "011000001011",
            "011011000001",
        ]
        .iter()
        .map(|r| r.bytes().map(|b| b - b'0').collect())
        .collect();
        let pg = z12_example(&[2, 4, 5, 7, 8]);
        let rows = group_matrix_rows(pg.subgroup(), &[2, 4, 5, 7, 8]).unwrap();
        assert_eq!(rows, expected);
        for (i, &h) in pg.subgroup().elements().iter().enumerate() {
            assert_eq!(pg.adjacency().row(h as usize), expected[i]);
        }
    }

    #[test]
    fn s3_cayley_matrix() {
        // ordering e, (2,3), (1,2), (1,2,3), (1,3,2), (1,3)
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let order: Vec<Elem> = ["()", "(2,3)", "(1,2)", "(1,2,3)", "(1,3,2)", "(1,3)"]
            .iter()
            .map(|t| s3.parse_element(t).unwrap())
            .collect();
        let set: Vec<Elem> = ["(1,2)", "(1,2,3)", "(1,3,2)"]
            .iter()
            .map(|t| s3.parse_element(t).unwrap())
            .collect();
        let expected = [
            [0, 0, 1, 1, 1, 0],
            [0, 0, 1, 1, 0, 1],
            [1, 1, 0, 0, 0, 1],
            [1, 1, 0, 0, 1, 0],
            [1, 0, 0, 1, 0, 1],
            [0, 1, 1, 0, 1, 0],
        ];
        let whole = Subgroup::whole(&s3);
        let pg = PairGraph::build(&whole, &set).unwrap();
        let rows = group_matrix_rows(&whole, &set).unwrap();
        for (i, &gi) in order.iter().enumerate() {
            for (j, &gj) in order.iter().enumerate() {
                assert_eq!(pg.adjacency().get(gi as usize, gj as usize) as u8, expected[i][j]);
                assert_eq!(rows[gi as usize][gj as usize], expected[i][j]);
            }
        }
        assert_eq!(pg.adjacency(), &cayley_adjacency(&s3, &set));
        assert_eq!(pg.regularity().degree, Some(3));
    }

    #[test]
    fn isolated_vertices_examples() {
        assert_eq!(z12_example(&[1, 7]).isolated_vertices(), vec![2, 5, 8, 11]);
        // star graph: H = {e}, S = G - H
        let g = FiniteGroup::cyclic(6).unwrap();
        let h = Subgroup::from_elements(&g, &[0]).unwrap();
        let star = PairGraph::build(&h, &[1, 2, 3, 4, 5]).unwrap();
        assert!(star.isolated_vertices().is_empty());
        assert_eq!(star.degree(0), 5);
        assert_eq!(star.edge_count(), 5);
    }

    #[test]
    fn regular_index_two() {
        let g = FiniteGroup::cyclic(20).unwrap();
        let h = Subgroup::builtin(&g, "evens").unwrap();
        let pg = PairGraph::build(&h, &[3, 5, 7]).unwrap();
        let r = pg.regularity();
        assert!(r.regular && r.agrees());
        assert_eq!(r.degree, Some(3));
        assert!(!pg.is_cayley_reduction().unwrap());

        let cycle = PairGraph::build(&h, &[1, 19]).unwrap();
        assert!(cycle.is_cayley_reduction().unwrap());
        // 20-cycle: every vertex adjacent to its two neighbours
        for v in 0..20u32 {
            assert_eq!(cycle.neighbors(v), {
                let mut n = vec![(v + 1) % 20, (v + 19) % 20];
                n.sort_unstable();
                n
            });
        }
        // a set of involutions outside H is symmetric: reflections of D6
        let d = FiniteGroup::dihedral(6).unwrap();
        let rot = Subgroup::from_elements(&d, &(0..6).collect::<Vec<_>>()).unwrap();
        let refl: Vec<Elem> = (6..12).step_by(2).collect();
        assert!(PairGraph::build(&rot, &refl).unwrap().is_cayley_reduction().unwrap());
    }

    #[test]
    fn cayley_reduction_preconditions() {
        assert!(z12_example(&[1, 2]).is_cayley_reduction().is_err());
        let g = FiniteGroup::cyclic(20).unwrap();
        let h = Subgroup::builtin(&g, "evens").unwrap();
        assert!(PairGraph::build(&h, &[2, 18, 3]).unwrap().is_cayley_reduction().is_err());
    }

    #[test]
    fn validation_happens_before_build() {
        let g = FiniteGroup::cyclic(12).unwrap();
        let h = Subgroup::from_elements(&g, &[0, 3, 6, 9]).unwrap();
        assert!(matches!(PairGraph::build(&h, &[3]), Err(Error::SymmetryViolation { .. })));
        assert_eq!(PairGraph::build(&h, &[0]).unwrap_err(), Error::IdentityInS);
        assert!(group_matrix_rows(&h, &[3]).is_err());
    }

    #[test]
    fn left_translation_commutes() {
        let pg = z12_example(&[2, 4, 5, 7, 8]);
        for &h in pg.subgroup().elements() {
            assert!(pg.left_translation_commutes(h).unwrap());
        }
        assert!(pg.left_translation_commutes(1).is_err());
    }
}
