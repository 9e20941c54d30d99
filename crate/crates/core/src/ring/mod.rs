//! Finite commutative rings with identity, stored as explicit element tables.
//!
//! Every ring handled by this crate has at most [`MAX_ORDER`] elements, so a
//! subset of a ring fits in a single `u64` ([`ElemSet`]).

mod build;
pub mod catalog;
mod iso;
mod poly;
mod spec;

pub use build::build_ring;
pub use catalog::{catalog, lookup, CatalogEntry};
pub use iso::{iso_check, RingIso};
pub use poly::Poly;
pub use spec::RingSpec;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest ring order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 64;

/// Index of an element in its owning [`RingTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RingElem(pub u8);

impl RingElem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of ring elements as a bitmask over element indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    /// All elements of a ring of the given order.
    pub fn full(order: usize) -> ElemSet {
        if order >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << order) - 1)
        }
    }

    pub fn singleton(a: RingElem) -> ElemSet {
        ElemSet(1u64 << a.0)
    }

    #[inline]
    pub fn contains(self, a: RingElem) -> bool {
        self.0 >> a.0 & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: RingElem) {
        self.0 |= 1u64 << a.0;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = RingElem> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros();
            bits &= bits - 1;
            Some(RingElem(i as u8))
        })
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

impl FromIterator<RingElem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = RingElem>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

/// A finite commutative ring given by its addition and multiplication tables.
///
/// Tables built through [`build_ring`] or [`RingTable::new`] have passed the
/// full axiom check; [`RingTable::new_unchecked`] exists so that broken tables
/// can be handed to [`validate_table`].
#[derive(Clone, PartialEq, Eq)]
pub struct RingTable {
    name: String,
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    zero: u8,
    one: u8,
    labels: Vec<String>,
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl RingTable {
    /// Builds a table and rejects it unless every ring axiom holds.
    pub fn new(
        name: impl Into<String>,
        add: Vec<u8>,
        mul: Vec<u8>,
        zero: u8,
        one: u8,
        labels: Vec<String>,
    ) -> Result<RingTable> {
        let t = RingTable::new_unchecked(name, add, mul, zero, one, labels)?;
        let report = validate_table(&t);
        if !report.is_empty() {
            return Err(Error::InvalidSpec(format!(
                "table for `{}` violates ring axioms: {}",
                t.name, report
            )));
        }
        Ok(t)
    }

    /// Builds a table checking only shapes and index ranges.
    pub fn new_unchecked(
        name: impl Into<String>,
        add: Vec<u8>,
        mul: Vec<u8>,
        zero: u8,
        one: u8,
        labels: Vec<String>,
    ) -> Result<RingTable> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::InvalidSpec("empty ring table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::InvalidSpec(format!(
                "tables must be {order}x{order}"
            )));
        }
        if add.iter().chain(mul.iter()).any(|&x| x as usize >= order)
            || zero as usize >= order
            || one as usize >= order
        {
            return Err(Error::InvalidSpec("table entry out of range".into()));
        }
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] == zero)
                    .unwrap_or(zero as usize) as u8
            })
            .collect();
        Ok(RingTable {
            name: name.into(),
            order,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> RingTable {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> RingElem {
        RingElem(self.zero)
    }

    pub fn one(&self) -> RingElem {
        RingElem(self.one)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: RingElem) -> &str {
        &self.labels[a.index()]
    }

    /// Finds an element by its display label.
    pub fn elem_by_label(&self, label: &str) -> Option<RingElem> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels
            .iter()
            .position(|l| *l == wanted)
            .map(|i| RingElem(i as u8))
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElem> {
        (0..self.order as u8).map(RingElem)
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    #[inline]
    pub fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        RingElem(self.add[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        RingElem(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: RingElem) -> RingElem {
        RingElem(self.neg[a.index()])
    }

    pub fn sub(&self, a: RingElem, b: RingElem) -> RingElem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: RingElem, k: u32) -> RingElem {
        (0..k).fold(self.one(), |acc, _| self.mul(acc, a))
    }

    pub fn is_zero(&self, a: RingElem) -> bool {
        a.0 == self.zero
    }

    /// Smallest `k >= 1` with `k·a = 0`.
    pub fn additive_order(&self, a: RingElem) -> usize {
        let mut x = a;
        let mut k = 1;
        while !self.is_zero(x) {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    /// Smallest `k >= 1` with `a^k = 0`, or `None` when `a` is not nilpotent.
    pub fn nilpotency_index(&self, a: RingElem) -> Option<u32> {
        let mut x = a;
        for k in 1..=self.order as u32 {
            if self.is_zero(x) {
                return Some(k);
            }
            x = self.mul(x, a);
        }
        None
    }

    /// The annihilator `{b : a·b = 0}`.
    pub fn annihilator(&self, a: RingElem) -> ElemSet {
        self.elements()
            .filter(|&b| self.is_zero(self.mul(a, b)))
            .collect()
    }

    /// Whether `a·b = 0` for some nonzero `b` (zero itself counts).
    pub fn is_zero_divisor(&self, a: RingElem) -> bool {
        self.annihilator(a).len() > 1
    }

    /// Elements with a multiplicative inverse.
    pub fn units(&self) -> ElemSet {
        self.elements()
            .filter(|&u| self.elements().any(|v| self.mul(u, v) == self.one()))
            .collect()
    }

    /// Nonzero zero-divisors.
    pub fn zero_divisors(&self) -> ElemSet {
        self.elements()
            .filter(|&a| !self.is_zero(a) && self.is_zero_divisor(a))
            .collect()
    }

    pub fn nilpotents(&self) -> ElemSet {
        self.elements()
            .filter(|&a| self.nilpotency_index(a).is_some())
            .collect()
    }

    pub fn is_field(&self) -> bool {
        self.units().len() == self.order - 1
    }

    /// Sum of a set of elements (zero for the empty set).
    pub fn sum(&self, set: ElemSet) -> RingElem {
        set.iter().fold(self.zero(), |acc, x| self.add(acc, x))
    }

    /// The same ring with elements renumbered: old element `i` becomes
    /// element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> RingTable {
        assert_eq!(perm.len(), self.order, "permutation length");
        let n = self.order;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let mut labels = vec![String::new(); n];
        for a in 0..n {
            labels[perm[a]] = self.labels[a].clone();
            for b in 0..n {
                add[perm[a] * n + perm[b]] = perm[self.add[a * n + b] as usize] as u8;
                mul[perm[a] * n + perm[b]] = perm[self.mul[a * n + b] as usize] as u8;
            }
        }
        let mut neg = vec![0u8; n];
        for a in 0..n {
            neg[perm[a]] = perm[self.neg[a] as usize] as u8;
        }
        RingTable {
            name: self.name.clone(),
            order: n,
            add,
            mul,
            neg,
            zero: perm[self.zero as usize] as u8,
            one: perm[self.one as usize] as u8,
            labels,
        }
    }
}

/// One failed ring axiom together with the elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveIdentity,
    AdditiveInverse,
    MultiplicativeCommutativity,
    MultiplicativeAssociativity,
    MultiplicativeIdentity,
    Distributivity,
    ZeroIsNotOne,
}

/// Outcome of [`validate_table`]; empty exactly when the table is a
/// commutative ring with identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("{:?} at {:?}", v.axiom, v.witness))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Exhaustively checks the commutative-ring axioms, recording the first
/// witness found for each violated axiom.
pub fn validate_table(t: &RingTable) -> ValidationReport {
    let n = t.order;
    let add = |a: usize, b: usize| t.add[a * n + b] as usize;
    let mul = |a: usize, b: usize| t.mul[a * n + b] as usize;
    let (zero, one) = (t.zero as usize, t.one as usize);
    let mut report = ValidationReport::default();
    let mut flag = |axiom: Axiom, witness: &[usize]| {
        if !report.violates(axiom) {
            report.violations.push(Violation {
                axiom,
                witness: witness.iter().map(|&x| x as u8).collect(),
            });
        }
    };

    if zero == one {
        flag(Axiom::ZeroIsNotOne, &[zero]);
    }
    for a in 0..n {
        if add(a, zero) != a || add(zero, a) != a {
            flag(Axiom::AdditiveIdentity, &[a]);
        }
        if mul(a, one) != a || mul(one, a) != a {
            flag(Axiom::MultiplicativeIdentity, &[a]);
        }
        if !(0..n).any(|b| add(a, b) == zero) {
            flag(Axiom::AdditiveInverse, &[a]);
        }
        for b in 0..n {
            if add(a, b) != add(b, a) {
                flag(Axiom::AdditiveCommutativity, &[a, b]);
            }
            if mul(a, b) != mul(b, a) {
                flag(Axiom::MultiplicativeCommutativity, &[a, b]);
            }
            for c in 0..n {
                if add(add(a, b), c) != add(a, add(b, c)) {
                    flag(Axiom::AdditiveAssociativity, &[a, b, c]);
                }
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    flag(Axiom::MultiplicativeAssociativity, &[a, b, c]);
                }
                if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) {
                    flag(Axiom::Distributivity, &[a, b, c]);
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(n: usize) -> RingTable {
        build_ring(&RingSpec::zmod(n)).unwrap()
    }

    #[test]
    fn z6_basics() {
        let t = zmod(6);
        assert_eq!(t.order(), 6);
        assert_eq!(t.mul(RingElem(2), RingElem(3)), RingElem(0));
        assert!(validate_table(&t).is_empty());
        let units: Vec<u8> = t.units().iter().map(|e| e.0).collect();
        assert_eq!(units, vec![1, 5]);
    }

    #[test]
    fn z4_units_and_nilpotents() {
        let t = zmod(4);
        let units: Vec<u8> = t.units().iter().map(|e| e.0).collect();
        assert_eq!(units, vec![1, 3]);
        assert_eq!(t.nilpotency_index(RingElem(2)), Some(2));
        assert_eq!(t.nilpotency_index(RingElem(0)), Some(1));
        assert_eq!(zmod(6).nilpotency_index(RingElem(1)), None);
    }

    #[test]
    fn validation_names_the_broken_axiom() {
        let t = zmod(3);
        let mut mul = t.mul.clone();
        // make 1·2 != 2·1
        mul[3 + 2] = 0;
        let bad =
            RingTable::new_unchecked("bad", t.add.clone(), mul, 0, 1, t.labels.clone()).unwrap();
        let report = validate_table(&bad);
        assert!(report.violates(Axiom::MultiplicativeCommutativity));
        let v = report
            .violations
            .iter()
            .find(|v| v.axiom == Axiom::MultiplicativeCommutativity)
            .unwrap();
        assert_eq!(v.witness, vec![1, 2]);
        assert!(RingTable::new(
            "bad",
            t.add.clone(),
            bad.mul.clone(),
            0,
            1,
            t.labels.clone()
        )
        .is_err());
    }

    #[test]
    fn zero_equal_one_is_reported() {
        let t =
            RingTable::new_unchecked("trivial", vec![0], vec![0], 0, 0, vec!["0".into()]).unwrap();
        assert!(validate_table(&t).violates(Axiom::ZeroIsNotOne));
    }

    #[test]
    fn elemset_iteration_is_sorted() {
        let s: ElemSet = [5u8, 1, 63, 0].iter().map(|&i| RingElem(i)).collect();
        let v: Vec<u8> = s.iter().map(|e| e.0).collect();
        assert_eq!(v, vec![0, 1, 5, 63]);
        assert_eq!(s.len(), 4);
        assert_eq!(ElemSet::full(64).len(), 64);
    }

    #[test]
    fn relabel_preserves_structure() {
        let t = zmod(5);
        let perm = vec![4, 2, 0, 1, 3];
        let r = t.relabel(&perm);
        assert!(validate_table(&r).is_empty());
        assert_eq!(r.zero(), RingElem(4));
        assert_eq!(r.one(), RingElem(2));
        assert_eq!(r.label(RingElem(2)), "1");
    }
}
