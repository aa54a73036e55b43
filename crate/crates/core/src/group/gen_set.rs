use super::{Elem, Subgroup};
use crate::error::{Error, Result};

/// A validated subset `S ⊆ G` split against a subgroup `H`:
/// `S_H = S ∩ H` (symmetric) and `S_O = S - H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    elements: Vec<Elem>,
    inner: Vec<Elem>,
    outer: Vec<Elem>,
    /// `coset_counts[i] = |S ∩ H x_i|`; entry 0 is `|S_H|`.
    coset_counts: Vec<usize>,
    member: Vec<bool>,
}

impl GeneratingSet {
    /// Validates `elems` against `h`. Duplicates are collapsed. Fails when
    /// the identity is present or `S ∩ H` is not closed under inverses.
    pub fn new(h: &Subgroup, elems: &[Elem]) -> Result<Self> {
        let g = h.parent();
        let mut member = vec![false; g.order()];
        for &x in elems {
            g.check_element(x as usize)?;
            member[x as usize] = true;
        }
        if member[g.identity() as usize] {
            return Err(Error::IdentityInS);
        }
        let elements: Vec<Elem> = g.elements().filter(|&x| member[x as usize]).collect();
        let (inner, outer): (Vec<Elem>, Vec<Elem>) =
            elements.iter().partition(|&&x| h.contains(x));
        if let Some(&bad) = inner.iter().find(|&&s| !member[g.inv(s) as usize]) {
            return Err(Error::SymmetryViolation { elem: bad, label: g.label(bad).to_string() });
        }
        let mut coset_counts = vec![0; h.index()];
        for &s in &elements {
            coset_counts[h.coset_of(s)] += 1;
        }
        Ok(GeneratingSet { elements, inner, outer, coset_counts, member })
    }

    /// The whole set `S`, sorted.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    /// `S_H = S ∩ H`.
    pub fn inner(&self) -> &[Elem] {
        &self.inner
    }

    /// `S_O = S - H`.
    pub fn outer(&self) -> &[Elem] {
        &self.outer
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.member[x as usize]
    }

    /// Per-coset counts indexed by coset id (entry 0 is `|S_H|`).
    pub fn coset_counts(&self) -> &[usize] {
        &self.coset_counts
    }

    /// `|S_i|` for the nontrivial cosets `i = 1..=k`.
    pub fn outer_coset_counts(&self) -> &[usize] {
        &self.coset_counts[1..]
    }

    /// Whether `S^-1 = S`.
    pub fn is_symmetric(&self, h: &Subgroup) -> bool {
        let g = h.parent();
        self.elements.iter().all(|&s| self.contains(g.inv(s)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn split_and_counts() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        let h = Subgroup::from_elements(&z12, &[0, 3, 6, 9]).unwrap();
        let s = GeneratingSet::new(&h, &[2, 4, 5, 7, 8]).unwrap();
        assert!(s.inner().is_empty());
        assert_eq!(s.outer(), &[2, 4, 5, 7, 8]);
        assert_eq!(s.outer_coset_counts(), &[2, 3]);
        assert_eq!(
            s.len(),
            s.inner().len() + s.outer_coset_counts().iter().sum::<usize>()
        );

        let s2 = GeneratingSet::new(&h, &[4, 5, 6, 10, 11]).unwrap();
        assert_eq!(s2.inner(), &[6]);
        assert_eq!(s2.coset_counts(), &[1, 2, 2]);
    }

    #[test]
    fn validation_errors() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        let h = Subgroup::from_elements(&z12, &[0, 3, 6, 9]).unwrap();
        assert_eq!(GeneratingSet::new(&h, &[0, 1]).unwrap_err(), Error::IdentityInS);
        assert!(matches!(
            GeneratingSet::new(&h, &[3, 1]),
            Err(Error::SymmetryViolation { elem: 3, .. })
        ));
        assert!(GeneratingSet::new(&h, &[3, 9, 1]).is_ok());
        // S ∩ H = ∅ is vacuously symmetric
        assert!(GeneratingSet::new(&h, &[1, 2]).is_ok());
        assert!(GeneratingSet::new(&h, &[13]).is_err());
    }

    #[test]
    fn duplicates_collapse() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        let h = Subgroup::from_elements(&z12, &[0, 6]).unwrap();
        let s = GeneratingSet::new(&h, &[5, 1, 5, 1]).unwrap();
        assert_eq!(s.elements(), &[1, 5]);
    }
}
