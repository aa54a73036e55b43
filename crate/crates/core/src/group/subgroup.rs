use std::sync::Arc;

use super::{matrix, parse_cycles, Elem, GroupRef, Structure};
use crate::error::{Error, Result};

/// A subgroup `H ≤ G` together with its right-coset decomposition.
///
/// Coset `0` is `H` itself; the remaining cosets are numbered by their
/// smallest element, which is also the stored representative.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: GroupRef,
    elements: Vec<Elem>,
    member: Vec<bool>,
    coset_of: Vec<u32>,
    coset_reps: Vec<Elem>,
}

impl Subgroup {
    /// Validates closure of `elems` and computes the coset decomposition.
    pub fn from_elements(parent: &GroupRef, elems: &[Elem]) -> Result<Self> {
        let m = parent.order();
        let mut member = vec![false; m];
        for &x in elems {
            parent.check_element(x as usize)?;
            member[x as usize] = true;
        }
        if !member[parent.identity() as usize] {
            return Err(Error::IdentityMissing);
        }
        let elements: Vec<Elem> = parent.elements().filter(|&x| member[x as usize]).collect();
        for &a in &elements {
            if !member[parent.inv(a) as usize] {
                return Err(Error::NotClosed(format!(
                    "inverse of {} is missing",
                    parent.label(a)
                )));
            }
            for &b in &elements {
                let c = parent.mul(a, b);
                if !member[c as usize] {
                    return Err(Error::NotClosed(format!(
                        "{} * {} = {} is missing",
                        parent.label(a),
                        parent.label(b),
                        parent.label(c)
                    )));
                }
            }
        }
        Ok(Self::trusted(parent, elements, member))
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated(parent: &GroupRef, gens: &[Elem]) -> Result<Self> {
        for &g in gens {
            parent.check_element(g as usize)?;
        }
        let elements = parent.generated_elements(gens);
        let mut member = vec![false; parent.order()];
        for &x in &elements {
            member[x as usize] = true;
        }
        Ok(Self::trusted(parent, elements, member))
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(parent: &GroupRef) -> Self {
        let elements: Vec<Elem> = parent.elements().collect();
        Self::trusted(parent, elements, vec![true; parent.order()])
    }

    /// Builtin subgroups by name: `sl2_in_gl2`, `alternating_in_symmetric`,
    /// `evens` (in an even-order cyclic group) and `klein_in_a4`
    /// (`{e, (1,2)(3,4), (1,3)(2,4), (1,4)(2,3)}` in `A_4` or `S_4`).
    pub fn builtin(parent: &GroupRef, name: &str) -> Result<Self> {
        let wrong = |what: &str| {
            Error::InvalidParameter(format!("builtin {name} needs {what}, got {}", parent.name()))
        };
        let elems: Vec<Elem> = match (name, &parent.structure) {
            ("sl2_in_gl2", Structure::Matrix2 { p, mats, .. }) => {
                if mats.len() != ((p * p - 1) * (p * p - p)) as usize {
                    return Err(wrong("GL_2(F_p)"));
                }
                parent.elements().filter(|&x| matrix::det(&mats[x as usize], *p) == 1).collect()
            }
            ("sl2_in_gl2", _) => return Err(wrong("GL_2(F_p)")),
            ("alternating_in_symmetric", Structure::Perm { degree, perms, .. }) => {
                let full: usize = (1..=*degree).product();
                if perms.len() != full {
                    return Err(wrong("a symmetric group"));
                }
                parent.elements().filter(|&x| perms[x as usize].is_even()).collect()
            }
            ("alternating_in_symmetric", _) => return Err(wrong("a symmetric group")),
            ("evens", Structure::Cyclic { n }) if n % 2 == 0 => {
                parent.elements().filter(|x| x % 2 == 0).collect()
            }
            ("evens", _) => return Err(wrong("a cyclic group of even order")),
            ("klein_in_a4", Structure::Perm { degree: 4, lookup, .. }) => {
                let mut out = vec![parent.identity()];
                for text in ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"] {
                    let p = parse_cycles(text, 4)?;
                    out.push(*lookup.get(&p).ok_or_else(|| wrong("A_4 or S_4"))?);
                }
                out
            }
            ("klein_in_a4", _) => return Err(wrong("A_4 or S_4")),
            _ => return Err(Error::InvalidParameter(format!("unknown builtin subgroup {name:?}"))),
        };
        Self::from_elements(parent, &elems)
    }

    fn trusted(parent: &GroupRef, elements: Vec<Elem>, member: Vec<bool>) -> Self {
        let m = parent.order();
        let mut coset_of = vec![u32::MAX; m];
        let mut coset_reps = vec![parent.identity()];
        for &h in &elements {
            coset_of[h as usize] = 0;
        }
        for x in parent.elements() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let id = coset_reps.len() as u32;
            coset_reps.push(x);
            for &h in &elements {
                coset_of[parent.mul(h, x) as usize] = id;
            }
        }
        Subgroup { parent: Arc::clone(parent), elements, member, coset_of, coset_reps }
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `[G : H]`.
    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.member[x as usize]
    }

    #[inline]
    pub fn coset_of(&self, x: Elem) -> usize {
        self.coset_of[x as usize] as usize
    }

    pub fn coset_reps(&self) -> &[Elem] {
        &self.coset_reps
    }

    /// Elements of coset `id`, sorted.
    pub fn coset(&self, id: usize) -> Vec<Elem> {
        self.parent.elements().filter(|&x| self.coset_of(x) == id).collect()
    }

    /// Elements of `G - H`, sorted.
    pub fn complement(&self) -> Vec<Elem> {
        self.parent.elements().filter(|&x| !self.contains(x)).collect()
    }

    /// Whether every element of `elems` lies in the subgroup.
    pub fn contains_all(&self, elems: &[Elem]) -> bool {
        elems.iter().all(|&x| self.contains(x))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.elements == other.elements
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn from_elements_examples() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        let h = Subgroup::from_elements(&z12, &[0, 3, 6, 9]).unwrap();
        assert_eq!(h.index(), 3);
        assert_eq!(h.coset_reps(), &[0, 1, 2]);
        assert_eq!(h.coset(2), vec![2, 5, 8, 11]);

        let trivial = Subgroup::from_elements(&z12, &[0]).unwrap();
        assert_eq!(trivial.index(), 12);

        let z20 = FiniteGroup::cyclic(20).unwrap();
        let evens: Vec<Elem> = (0..20).step_by(2).collect();
        assert_eq!(Subgroup::from_elements(&z20, &evens).unwrap().index(), 2);
    }

    #[test]
    fn from_elements_errors() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(Subgroup::from_elements(&z12, &[3, 6, 9]).unwrap_err(), Error::IdentityMissing);
        assert!(matches!(Subgroup::from_elements(&z12, &[0, 3]), Err(Error::NotClosed(_))));
        assert!(matches!(
            Subgroup::from_elements(&z12, &[0, 12]),
            Err(Error::ElementOutOfRange(12, 12))
        ));
    }

    #[test]
    fn cosets_partition_the_group() {
        let g = FiniteGroup::gl2(3).unwrap();
        for h in [
            Subgroup::builtin(&g, "sl2_in_gl2").unwrap(),
            Subgroup::generated(&g, &[5]).unwrap(),
            Subgroup::whole(&g),
        ] {
            let sizes: Vec<usize> = (0..h.index()).map(|i| h.coset(i).len()).collect();
            assert!(sizes.iter().all(|&s| s == h.order()));
            assert_eq!(sizes.iter().sum::<usize>(), g.order());
            assert_eq!(g.order() % h.order(), 0);
            assert_eq!(h.coset(0), h.elements());
            // Hx = Hy iff x y^-1 ∈ H
            for x in g.elements().step_by(5) {
                for y in g.elements().step_by(7) {
                    assert_eq!(
                        h.coset_of(x) == h.coset_of(y),
                        h.contains(g.mul(x, g.inv(y)))
                    );
                }
            }
        }
    }

    #[test]
    fn builtins() {
        let gl = FiniteGroup::gl2(5).unwrap();
        let sl = Subgroup::builtin(&gl, "sl2_in_gl2").unwrap();
        assert_eq!(sl.order(), 120);
        assert_eq!(sl.index(), 4);
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(Subgroup::builtin(&s4, "alternating_in_symmetric").unwrap().order(), 12);
        let a4 = FiniteGroup::alternating(4).unwrap();
        let v = Subgroup::builtin(&a4, "klein_in_a4").unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(v.index(), 3);
        let z20 = FiniteGroup::cyclic(20).unwrap();
        assert_eq!(Subgroup::builtin(&z20, "evens").unwrap().order(), 10);
        assert!(Subgroup::builtin(&z20, "klein_in_a4").is_err());
        assert!(Subgroup::builtin(&FiniteGroup::cyclic(7).unwrap(), "evens").is_err());
        assert!(Subgroup::builtin(&a4, "alternating_in_symmetric").is_err());
        assert!(Subgroup::builtin(&a4, "nope").is_err());
    }

    #[test]
    fn generated_is_idempotent() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        for gens in [vec![1u32], vec![3, 7], vec![5, 11, 17]] {
            let h = Subgroup::generated(&s4, &gens).unwrap();
            let again = Subgroup::generated(&s4, h.elements()).unwrap();
            assert_eq!(h, again);
        }
        assert_eq!(Subgroup::generated(&s4, &[]).unwrap().elements(), &[0]);
    }
}
