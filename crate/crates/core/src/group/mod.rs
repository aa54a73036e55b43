//! Finite groups with dense element indices.
//!
//! Every group is stored as elements `0..order` with the identity at index
//! `0`. The concrete realization (residues, permutations, matrices, field
//! elements) is only used by the constructors, the labels and a handful of
//! builtin subgroups. Multiplication goes through a full table up to
//! [`TABLE_CAP`] elements and is computed from the realization above it.

mod field;
mod gen_set;
mod matrix;
mod perm;
mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub use field::GaloisField;
pub use gen_set::GeneratingSet;
pub use perm::{parse_cycles, Permutation};
pub use subgroup::Subgroup;

/// Dense element index.
pub type Elem = u32;

/// Shared handle to a group; subgroups and graphs keep one of these.
pub type GroupRef = Arc<FiniteGroup>;

/// Largest order for which the multiplication table is materialized.
pub const TABLE_CAP: usize = 4096;
/// Hard cap on group order.
pub const ORDER_CAP: usize = 20_000;

/// Exhaustive axiom checks run up to this order, sampled above.
const EXHAUSTIVE_AXIOM_CAP: usize = 64;
const SAMPLED_TRIPLES: usize = 10_000;

/// Concrete realization behind the element indices.
#[derive(Debug, Clone)]
pub(crate) enum Structure {
    Cyclic {
        n: u32,
    },
    /// `r^i s^j` stored at index `i + n * j`.
    Dihedral {
        n: u32,
    },
    Perm {
        degree: usize,
        perms: Vec<Permutation>,
        lookup: HashMap<Permutation, Elem>,
    },
    Matrix2 {
        p: u32,
        /// Row-major `[a, b, c, d]`.
        mats: Vec<[u32; 4]>,
        /// Indexed by `a + p b + p^2 c + p^3 d`; `Elem::MAX` when absent.
        lookup: Vec<Elem>,
    },
    Field {
        field: GaloisField,
    },
    Product {
        left: GroupRef,
        right: GroupRef,
    },
}

impl Structure {
    fn compose(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Structure::Cyclic { n } => ((a as u64 + b as u64) % *n as u64) as Elem,
            Structure::Dihedral { n } => {
                let (ra, sa) = (a % n, a / n);
                let (rb, sb) = (b % n, b / n);
                let r = if sa == 0 { (ra + rb) % n } else { (ra + n - rb) % n };
                r + n * ((sa + sb) % 2)
            }
            Structure::Perm { perms, lookup, .. } => {
                // a·b applies a first
                let c = perms[b as usize].compose(&perms[a as usize]);
                lookup[&c]
            }
            Structure::Matrix2 { p, mats, lookup } => {
                let c = matrix::mat_mul(&mats[a as usize], &mats[b as usize], *p);
                lookup[matrix::code(&c, *p)]
            }
            Structure::Field { field } => field.add(a, b),
            Structure::Product { left, right } => {
                let m2 = right.order() as Elem;
                let (a1, a2) = (a / m2, a % m2);
                let (b1, b2) = (b / m2, b % m2);
                left.mul(a1, b1) * m2 + right.mul(a2, b2)
            }
        }
    }

    fn inverse(&self, a: Elem) -> Elem {
        match self {
            Structure::Cyclic { n } => (n - a) % n,
            Structure::Dihedral { n } => {
                if a < *n {
                    (n - a) % n
                } else {
                    a
                }
            }
            Structure::Perm { perms, lookup, .. } => lookup[&perms[a as usize].inverse()],
            Structure::Matrix2 { p, mats, lookup } => {
                let inv = matrix::mat_inv(&mats[a as usize], *p);
                lookup[matrix::code(&inv, *p)]
            }
            Structure::Field { field } => field.neg(a),
            Structure::Product { left, right } => {
                let m2 = right.order() as Elem;
                left.inv(a / m2) * m2 + right.inv(a % m2)
            }
        }
    }
}

/// A finite group on dense element indices `0..order`.
pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: Elem,
    inverses: Vec<Elem>,
    table: Option<Vec<Elem>>,
    labels: Vec<String>,
    label_index: HashMap<String, Elem>,
    pub(crate) structure: Structure,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    fn assemble(name: String, labels: Vec<String>, structure: Structure) -> Result<GroupRef> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::InvalidParameter("group must have at least one element".into()));
        }
        if order > ORDER_CAP {
            return Err(Error::SizeCap { what: "group order", size: order, cap: ORDER_CAP });
        }
        let inverses = (0..order as Elem).map(|a| structure.inverse(a)).collect();
        let table = (order <= TABLE_CAP).then(|| {
            let mut t = Vec::with_capacity(order * order);
            for a in 0..order as Elem {
                for b in 0..order as Elem {
                    t.push(structure.compose(a, b));
                }
            }
            t
        });
        let label_index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as Elem))
            .collect();
        Ok(Arc::new(FiniteGroup {
            name,
            order,
            identity: 0,
            inverses,
            table,
            labels,
            label_index,
            structure,
        }))
    }

    /// `Z/nZ` under addition.
    pub fn cyclic(n: usize) -> Result<GroupRef> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group needs n >= 1".into()));
        }
        if n > ORDER_CAP {
            return Err(Error::SizeCap { what: "group order", size: n, cap: ORDER_CAP });
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::assemble(format!("Z/{n}"), labels, Structure::Cyclic { n: n as u32 })
    }

    /// Symmetries of the regular `n`-gon, order `2n`.
    pub fn dihedral(n: usize) -> Result<GroupRef> {
        if n == 0 {
            return Err(Error::InvalidParameter("dihedral group needs n >= 1".into()));
        }
        if 2 * n > ORDER_CAP {
            return Err(Error::SizeCap { what: "group order", size: 2 * n, cap: ORDER_CAP });
        }
        let mut labels = Vec::with_capacity(2 * n);
        for j in 0..2 {
            for i in 0..n {
                let r = match i {
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{i}"),
                };
                labels.push(match (r.is_empty(), j) {
                    (true, 0) => "e".to_string(),
                    (true, _) => "s".to_string(),
                    (false, 0) => r,
                    (false, _) => format!("{r}s"),
                });
            }
        }
        Self::assemble(format!("D{n}"), labels, Structure::Dihedral { n: n as u32 })
    }

    /// The symmetric group `S_n`, permutations in lexicographic order.
    ///
    /// Products are read left to right: `a·b` applies `a` first, then `b`.
    pub fn symmetric(n: usize) -> Result<GroupRef> {
        Self::permutation_group(n, false)
    }

    /// The alternating group `A_n` (even permutations of `S_n`).
    pub fn alternating(n: usize) -> Result<GroupRef> {
        Self::permutation_group(n, true)
    }

    fn permutation_group(n: usize, even_only: bool) -> Result<GroupRef> {
        if n == 0 || n > 8 {
            return Err(Error::InvalidParameter(format!("permutation degree must be in 1..=8, got {n}")));
        }
        let full: usize = (1..=n).product();
        let order = if even_only && n > 1 { full / 2 } else { full };
        if order > ORDER_CAP {
            return Err(Error::SizeCap { what: "group order", size: order, cap: ORDER_CAP });
        }
        let perms: Vec<Permutation> = Permutation::all(n)
            .into_iter()
            .filter(|p| !even_only || p.is_even())
            .collect();
        let labels = perms.iter().map(|p| p.cycle_notation()).collect();
        let lookup = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as Elem)).collect();
        let name = if even_only { format!("A{n}") } else { format!("S{n}") };
        Self::assemble(name, labels, Structure::Perm { degree: n, perms, lookup })
    }

    /// `GL_2(F_p)`.
    pub fn gl2(p: u32) -> Result<GroupRef> {
        Self::matrix_group(p, false)
    }

    /// `SL_2(F_p)`.
    pub fn sl2(p: u32) -> Result<GroupRef> {
        Self::matrix_group(p, true)
    }

    fn matrix_group(p: u32, special: bool) -> Result<GroupRef> {
        check_small_prime(p)?;
        let pu = p as usize;
        let order = if special { pu * (pu * pu - 1) } else { (pu * pu - 1) * (pu * pu - pu) };
        if order > ORDER_CAP {
            return Err(Error::SizeCap { what: "group order", size: order, cap: ORDER_CAP });
        }
        let mats = matrix::enumerate(p, special);
        debug_assert_eq!(mats.len(), order);
        let mut lookup = vec![Elem::MAX; pu.pow(4)];
        for (i, m) in mats.iter().enumerate() {
            lookup[matrix::code(m, p)] = i as Elem;
        }
        let labels = mats.iter().map(matrix::label).collect();
        let name = if special { format!("SL2(F{p})") } else { format!("GL2(F{p})") };
        Self::assemble(name, labels, Structure::Matrix2 { p, mats, lookup })
    }

    /// Additive group of `F_{p^k}`. Elements are indexed by their
    /// coefficient vector in base `p` (constant term least significant), so
    /// the prime field occupies indices `0..p`.
    pub fn field_additive(p: u32, k: u32) -> Result<GroupRef> {
        let field = GaloisField::new(p, k)?;
        let labels = (0..field.order() as Elem).map(|x| field.label(x)).collect();
        Self::assemble(format!("F{}^{}", p, k), labels, Structure::Field { field })
    }

    /// Direct product `G1 × G2`; `(a, b)` lives at index `a * |G2| + b`.
    pub fn direct_product(left: &GroupRef, right: &GroupRef) -> Result<GroupRef> {
        let order = left.order() * right.order();
        if order > ORDER_CAP {
            return Err(Error::SizeCap { what: "group order", size: order, cap: ORDER_CAP });
        }
        let mut labels = Vec::with_capacity(order);
        for a in left.labels() {
            for b in right.labels() {
                labels.push(format!("({a}, {b})"));
            }
        }
        let name = format!("{} x {}", left.name(), right.name());
        Self::assemble(
            name,
            labels,
            Structure::Product { left: Arc::clone(left), right: Arc::clone(right) },
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => t[a as usize * self.order + b as usize],
            None => self.structure.compose(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a as usize]
    }

    /// Whether the multiplication table is materialized.
    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.order
    }

    pub fn check_element(&self, a: usize) -> Result<Elem> {
        if self.contains(a) {
            Ok(a as Elem)
        } else {
            Err(Error::ElementOutOfRange(a, self.order))
        }
    }

    /// Order of `a` as a group element.
    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Resolves an element from its label, a bare index, or (for permutation
    /// and matrix groups) any equivalent notation such as `(2,1)(3 4)` or
    /// `[[1, 2], [0, 1]]`.
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let text = text.trim();
        if let Some(&e) = self.label_index.get(text) {
            return Ok(e);
        }
        match &self.structure {
            Structure::Perm { degree, lookup, .. } if text.starts_with('(') || text == "e" => {
                let p = parse_cycles(text, *degree)?;
                return lookup
                    .get(&p)
                    .copied()
                    .ok_or_else(|| Error::Parse(format!("{text} is not an element of {}", self.name)));
            }
            Structure::Matrix2 { p, lookup, .. } if text.starts_with('[') => {
                let m = matrix::parse(text, *p)?;
                let e = lookup[matrix::code(&m, *p)];
                if e == Elem::MAX {
                    return Err(Error::Parse(format!("{text} is not an element of {}", self.name)));
                }
                return Ok(e);
            }
            _ => {}
        }
        let idx: usize = text
            .parse()
            .map_err(|_| Error::Parse(format!("unknown element {text:?} in {}", self.name)))?;
        self.check_element(idx)
    }

    /// Underlying permutation, for permutation groups.
    pub fn permutation(&self, a: Elem) -> Option<&Permutation> {
        match &self.structure {
            Structure::Perm { perms, .. } => perms.get(a as usize),
            _ => None,
        }
    }

    /// Degree of the permutation representation, for permutation groups.
    pub fn permutation_degree(&self) -> Option<usize> {
        match &self.structure {
            Structure::Perm { degree, .. } => Some(*degree),
            _ => None,
        }
    }

    /// Row-major matrix entries, for matrix groups.
    pub fn matrix(&self, a: Elem) -> Option<([u32; 4], u32)> {
        match &self.structure {
            Structure::Matrix2 { p, mats, .. } => mats.get(a as usize).map(|m| (*m, *p)),
            _ => None,
        }
    }

    /// The field, for additive groups of finite fields.
    pub fn field(&self) -> Option<&GaloisField> {
        match &self.structure {
            Structure::Field { field } => Some(field),
            _ => None,
        }
    }

    /// Modulus of a cyclic group.
    pub fn cyclic_modulus(&self) -> Option<usize> {
        match &self.structure {
            Structure::Cyclic { n } => Some(*n as usize),
            _ => None,
        }
    }

    /// Checks identity, inverse, involution and associativity laws.
    /// Associativity is exhaustive up to order 64 and sampled on 10^4
    /// seeded random triples above.
    pub fn check_axioms(&self) -> Result<()> {
        let e = self.identity;
        for a in self.elements() {
            if self.mul(e, a) != a || self.mul(a, e) != a {
                return Err(Error::NotClosed(format!("identity law fails at {}", self.label(a))));
            }
            if self.mul(a, self.inv(a)) != e || self.mul(self.inv(a), a) != e {
                return Err(Error::NotClosed(format!("inverse law fails at {}", self.label(a))));
            }
            if self.inv(self.inv(a)) != a {
                return Err(Error::NotClosed(format!("inverse is not an involution at {}", self.label(a))));
            }
        }
        let assoc = |a: Elem, b: Elem, c: Elem| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if self.order <= EXHAUSTIVE_AXIOM_CAP {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        if !assoc(a, b, c) {
                            return Err(Error::NotClosed(format!("associativity fails at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.order as u64);
            let m = self.order as Elem;
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.random_range(0..m), rng.random_range(0..m), rng.random_range(0..m));
                if !assoc(a, b, c) {
                    return Err(Error::NotClosed(format!("associativity fails at ({a}, {b}, {c})")));
                }
            }
        }
        Ok(())
    }

    /// `{a b^-1 : a ∈ A, b ∈ B}`, sorted and deduplicated.
    pub fn difference_set(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for &x in a {
            for &y in b {
                let d = self.mul(x, self.inv(y));
                if !seen[d as usize] {
                    seen[d as usize] = true;
                    out.push(d);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    ///
    /// Extends the current subgroup one new generator at a time, closing
    /// under right multiplication by the accepted generators. In a finite
    /// group this closure already contains all inverses.
    pub fn generated_elements(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.order];
        member[self.identity as usize] = true;
        let mut elems = vec![self.identity];
        let mut accepted: Vec<Elem> = Vec::new();
        for &g in gens {
            if member[g as usize] {
                continue;
            }
            accepted.push(g);
            let mut cursor = 0;
            while cursor < elems.len() {
                let x = elems[cursor];
                cursor += 1;
                for &s in &accepted {
                    let y = self.mul(x, s);
                    if !member[y as usize] {
                        member[y as usize] = true;
                        elems.push(y);
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Finds a small generating set greedily: repeatedly adds the element of
    /// largest order not yet generated.
    pub fn generators(&self) -> Vec<Elem> {
        let mut by_order: Vec<(usize, Elem)> =
            self.elements().map(|a| (self.element_order(a), a)).collect();
        by_order.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        let mut gens = Vec::new();
        let mut current = vec![self.identity];
        let mut member = vec![false; self.order];
        member[self.identity as usize] = true;
        for (_, a) in by_order {
            if current.len() == self.order {
                break;
            }
            if member[a as usize] {
                continue;
            }
            gens.push(a);
            current = self.generated_elements(&gens);
            member.iter_mut().for_each(|m| *m = false);
            for &x in &current {
                member[x as usize] = true;
            }
        }
        gens
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn check_small_prime(p: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if p > 13 {
        return Err(Error::SizeCap { what: "prime", size: p as usize, cap: 13 });
    }
    Ok(())
}
