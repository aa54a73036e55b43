//! Fixed instances shared by the benchmarks.

use pairgraph_core::{FiniteGroup, PairGraph, Subgroup};

/// `GL2(F_p) ⊃ SL2(F_p)`.
pub fn gl2_pair(p: u32) -> Subgroup {
    let g = FiniteGroup::gl2(p).expect("p is a small prime");
    Subgroup::builtin(&g, "sl2_in_gl2").expect("SL2 is a subgroup of GL2")
}

/// `Z/2m` with its even residues.
pub fn cyclic_pair(m: usize) -> Subgroup {
    let g = FiniteGroup::cyclic(2 * m).expect("positive order");
    Subgroup::builtin(&g, "evens").expect("even order")
}

/// The first `k` elements of `G - H`.
pub fn first_outer(h: &Subgroup, k: usize) -> Vec<pairgraph_core::Elem> {
    h.complement().into_iter().take(k).collect()
}

pub fn gl2_graph(p: u32, k: usize) -> PairGraph {
    let h = gl2_pair(p);
    let set = first_outer(&h, k);
    PairGraph::build(&h, &set).expect("outer elements form a valid set")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(gl2_graph(3, 17).vertex_count(), 48);
        assert_eq!(cyclic_pair(10).index(), 2);
    }
}
