//! Ideals of a ring table, quotients, and prime/radical tests.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ring::{validate_table, ElemSet, RingElem, RingTable};

/// An ideal, stored as a bitset over the element indices of its ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IdealSet {
    members: ElemSet,
}

impl IdealSet {
    /// Wraps `members` after checking the ideal axioms exhaustively.
    pub fn new(t: &RingTable, members: ElemSet) -> Result<IdealSet> {
        if is_ideal(t, members) {
            Ok(IdealSet { members })
        } else {
            Err(Error::InvalidSpec(format!("{members:?} is not an ideal")))
        }
    }

    pub fn zero(t: &RingTable) -> IdealSet {
        IdealSet {
            members: ElemSet::singleton(t.zero()),
        }
    }

    pub fn whole(t: &RingTable) -> IdealSet {
        IdealSet { members: t.all() }
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: RingElem) -> bool {
        self.members.contains(a)
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self, t: &RingTable) -> bool {
        self.members == t.all()
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.members.is_subset(other.members)
    }

    pub fn labels(&self, t: &RingTable) -> Vec<String> {
        self.members
            .iter()
            .map(|a| t.label(a).to_string())
            .collect()
    }

    /// Sort key used for the canonical enumeration order.
    fn key(&self) -> (usize, Vec<u8>) {
        (self.len(), self.members.iter().map(|a| a.0).collect())
    }
}

/// Exhaustive check of the ideal axioms for a subset.
pub fn is_ideal(t: &RingTable, set: ElemSet) -> bool {
    set.contains(t.zero())
        && set.iter().all(|a| {
            set.contains(t.neg(a))
                && set.iter().all(|b| set.contains(t.add(a, b)))
                && t.elements().all(|r| set.contains(t.mul(r, a)))
        })
}

fn additive_closure(t: &RingTable, seed: ElemSet) -> ElemSet {
    let mut set = seed.union(ElemSet::singleton(t.zero()));
    loop {
        let mut next = set;
        for a in set.iter() {
            for b in seed.iter() {
                next.insert(t.add(a, b));
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

/// The principal ideal `Ra`.
pub fn cyclic_ideal(t: &RingTable, a: RingElem) -> IdealSet {
    let multiples: ElemSet = t.elements().map(|r| t.mul(r, a)).collect();
    IdealSet {
        members: additive_closure(t, multiples),
    }
}

/// `I + J`.
pub fn ideal_sum(t: &RingTable, i: &IdealSet, j: &IdealSet) -> IdealSet {
    IdealSet {
        members: additive_closure(t, i.members.union(j.members)),
    }
}

/// The ideal generated by a list of elements.
pub fn generated_ideal(t: &RingTable, gens: &[RingElem]) -> IdealSet {
    gens.iter().fold(IdealSet::zero(t), |acc, &g| {
        ideal_sum(t, &acc, &cyclic_ideal(t, g))
    })
}

/// Every ideal of `t`, including `{0}` and `t`, sorted by size and then by
/// the sorted list of member indices.
pub fn enumerate_ideals(t: &RingTable) -> Vec<IdealSet> {
    let cyclic: BTreeSet<u64> = t.elements().map(|a| cyclic_ideal(t, a).members.0).collect();
    let mut all = cyclic.clone();
    let mut frontier: Vec<u64> = cyclic.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &f in &frontier {
            for &c in &cyclic {
                let s = ideal_sum(
                    t,
                    &IdealSet {
                        members: ElemSet(f),
                    },
                    &IdealSet {
                        members: ElemSet(c),
                    },
                );
                if all.insert(s.members.0) {
                    next.push(s.members.0);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<IdealSet> = all
        .into_iter()
        .map(|m| IdealSet {
            members: ElemSet(m),
        })
        .collect();
    out.sort_by_key(IdealSet::key);
    out
}

/// `R/I` as a ring table over cosets.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub table: RingTable,
    /// Coset index of each parent element.
    pub projection: Vec<u8>,
    /// Least parent element of each coset.
    pub coset_reps: Vec<RingElem>,
}

impl QuotientRing {
    pub fn project(&self, a: RingElem) -> RingElem {
        RingElem(self.projection[a.index()])
    }
}

/// The quotient ring `t / i`; coset `k` is represented by its least element.
pub fn quotient(t: &RingTable, i: &IdealSet) -> Result<QuotientRing> {
    if i.is_whole(t) {
        return Err(Error::WholeRingIdeal);
    }
    let n = t.order();
    let mut projection = vec![u8::MAX; n];
    let mut reps = Vec::new();
    for a in t.elements() {
        if projection[a.index()] != u8::MAX {
            continue;
        }
        let k = reps.len() as u8;
        reps.push(a);
        for m in i.members.iter() {
            projection[t.add(a, m).index()] = k;
        }
    }
    let q = reps.len();
    let mut add = vec![0u8; q * q];
    let mut mul = vec![0u8; q * q];
    for (x, &rx) in reps.iter().enumerate() {
        for (y, &ry) in reps.iter().enumerate() {
            add[x * q + y] = projection[t.add(rx, ry).index()];
            mul[x * q + y] = projection[t.mul(rx, ry).index()];
        }
    }
    let labels = reps
        .iter()
        .map(|&r| {
            if i.is_zero() {
                t.label(r).to_string()
            } else {
                format!("[{}]", t.label(r))
            }
        })
        .collect();
    let table = RingTable::new_unchecked(
        format!("{}/I", t.name()),
        add,
        mul,
        projection[t.zero().index()],
        projection[t.one().index()],
        labels,
    )?;
    debug_assert!(validate_table(&table).is_empty());
    Ok(QuotientRing {
        table,
        projection,
        coset_reps: reps,
    })
}

/// `I` is prime iff `ab ∈ I` forces `a ∈ I` or `b ∈ I`.
pub fn is_prime(t: &RingTable, i: &IdealSet) -> bool {
    if i.is_whole(t) {
        return false;
    }
    let outside = t.all().difference(i.members);
    outside
        .iter()
        .all(|a| outside.iter().all(|b| !i.contains(t.mul(a, b))))
}

/// `I` is radical iff `a^k ∈ I` forces `a ∈ I`.
pub fn is_radical(t: &RingTable, i: &IdealSet) -> bool {
    let outside = t.all().difference(i.members);
    outside.iter().all(|a| {
        let mut p = a;
        for _ in 0..t.order() {
            p = t.mul(p, a);
            if i.contains(p) {
                return false;
            }
        }
        true
    })
}

pub fn is_maximal(t: &RingTable, i: &IdealSet) -> bool {
    !i.is_whole(t)
        && enumerate_ideals(t)
            .iter()
            .all(|j| !(i.is_subset(j) && *j != *i && !j.is_whole(t)))
}

/// Maximal ideals in canonical enumeration order.
pub fn maximal_ideals(t: &RingTable) -> Vec<IdealSet> {
    let ideals = enumerate_ideals(t);
    let proper: Vec<&IdealSet> = ideals.iter().filter(|i| !i.is_whole(t)).collect();
    proper
        .iter()
        .filter(|i| !proper.iter().any(|j| *j != **i && i.is_subset(j)))
        .map(|i| **i)
        .collect()
}

/// Whether `t` has exactly one maximal ideal, together with all of them.
pub fn is_local(t: &RingTable) -> (bool, Vec<IdealSet>) {
    let max = maximal_ideals(t);
    (max.len() == 1, max)
}

/// Prime ideals containing a radical ideal `i` that are minimal among such.
pub fn minimal_primes_over(t: &RingTable, i: &IdealSet) -> Result<Vec<IdealSet>> {
    if i.is_whole(t) {
        return Err(Error::WholeRingIdeal);
    }
    if !is_radical(t, i) {
        return Err(Error::NotRadical);
    }
    let primes: Vec<IdealSet> = enumerate_ideals(t)
        .into_iter()
        .filter(|p| i.is_subset(p) && is_prime(t, p))
        .collect();
    let minimal: Vec<IdealSet> = primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .copied()
        .collect();
    let meet = minimal
        .iter()
        .fold(t.all(), |acc, p| acc.intersection(p.members));
    assert_eq!(
        meet, i.members,
        "radical ideal is the meet of its minimal primes"
    );
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, iso_check, RingSpec};

    fn ring(spec: RingSpec) -> RingTable {
        build_ring(&spec).unwrap()
    }

    fn brute_force_ideals(t: &RingTable) -> Vec<u64> {
        let n = t.order();
        let mut out: Vec<u64> = (0..1u64 << n)
            .filter(|&m| is_ideal(t, ElemSet(m)))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn cyclic() {
        let z6 = ring(RingSpec::zmod(6));
        assert_eq!(cyclic_ideal(&z6, RingElem(2)).labels(&z6), ["0", "2", "4"]);
        assert!(cyclic_ideal(&z6, RingElem(0)).is_zero());
        assert!(cyclic_ideal(&z6, RingElem(1)).is_whole(&z6));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for spec in [
            RingSpec::zmod(6),
            RingSpec::zmod(12),
            RingSpec::gf(2, 2),
            RingSpec::product(vec![
                RingSpec::zmod(2),
                RingSpec::zmod(2),
                RingSpec::zmod(2),
            ]),
            RingSpec::quotient(4, &["x"], &["2x", "x^2"]),
        ] {
            let t = ring(spec);
            let mut ours: Vec<u64> = enumerate_ideals(&t).iter().map(|i| i.members().0).collect();
            ours.sort();
            assert_eq!(ours, brute_force_ideals(&t), "{}", t.name());
        }
    }

    #[test]
    fn counts_and_order() {
        assert_eq!(enumerate_ideals(&ring(RingSpec::zmod(6))).len(), 4);
        assert_eq!(enumerate_ideals(&ring(RingSpec::gf(2, 2))).len(), 2);
        let z16 = ring(RingSpec::zmod(16));
        let sizes: Vec<usize> = enumerate_ideals(&z16).iter().map(|i| i.len()).collect();
        assert_eq!(sizes, [1, 2, 4, 8, 16]);
        let z2_3 = ring(RingSpec::product(vec![RingSpec::zmod(2); 3]));
        assert_eq!(enumerate_ideals(&z2_3).len(), 8);
    }

    #[test]
    fn quotients() {
        let z16 = ring(RingSpec::zmod(16));
        let i8 = cyclic_ideal(&z16, RingElem(8));
        let q = quotient(&z16, &i8).unwrap();
        assert_eq!(q.table.order(), 8);
        assert!(iso_check(&q.table, &ring(RingSpec::zmod(8))).is_some());

        let r = ring(RingSpec::product(vec![
            RingSpec::zmod(6),
            RingSpec::zmod(2),
        ]));
        let i = generated_ideal(&r, &[r.elem_by_label("(0,1)").unwrap()]);
        let q = quotient(&r, &i).unwrap();
        assert_eq!(q.table.order(), 6);
        assert!(iso_check(&q.table, &ring(RingSpec::zmod(6))).is_some());

        assert!(matches!(
            quotient(&r, &IdealSet::whole(&r)),
            Err(Error::WholeRingIdeal)
        ));
    }

    #[test]
    fn prime_and_radical() {
        let z6 = ring(RingSpec::zmod(6));
        assert!(is_prime(&z6, &cyclic_ideal(&z6, RingElem(3))));
        assert!(is_radical(&z6, &cyclic_ideal(&z6, RingElem(2))));
        let z16 = ring(RingSpec::zmod(16));
        assert!(!is_prime(&z16, &cyclic_ideal(&z16, RingElem(4))));
        let z4 = ring(RingSpec::zmod(4));
        assert!(!is_radical(&z4, &IdealSet::zero(&z4)));
        let f = ring(RingSpec::gf(3, 2));
        assert!(is_prime(&f, &IdealSet::zero(&f)));
    }

    #[test]
    fn minimal_primes() {
        let z6 = ring(RingSpec::zmod(6));
        let mp = minimal_primes_over(&z6, &IdealSet::zero(&z6)).unwrap();
        assert_eq!(mp.len(), 2);
        let z2_3 = ring(RingSpec::product(vec![RingSpec::zmod(2); 3]));
        assert_eq!(
            minimal_primes_over(&z2_3, &IdealSet::zero(&z2_3))
                .unwrap()
                .len(),
            3
        );
        let f = ring(RingSpec::gf(2, 2));
        assert_eq!(
            minimal_primes_over(&f, &IdealSet::zero(&f)).unwrap(),
            [IdealSet::zero(&f)]
        );
        let z4 = ring(RingSpec::zmod(4));
        assert!(matches!(
            minimal_primes_over(&z4, &IdealSet::zero(&z4)),
            Err(Error::NotRadical)
        ));
    }

    #[test]
    fn locality() {
        let (local, max) = is_local(&ring(RingSpec::zmod(8)));
        assert!(local);
        assert_eq!(max[0].len(), 4);
        let (local, max) = is_local(&ring(RingSpec::zmod(6)));
        assert!(!local);
        assert_eq!(max.len(), 2);
        let f = ring(RingSpec::gf(2, 2));
        assert_eq!(is_local(&f), (true, vec![IdealSet::zero(&f)]));
    }
}
