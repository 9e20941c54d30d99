//! Ring isomorphism by generator backtracking.
//!
//! The map is seeded with `0 -> 0` and `1 -> 1` and closed under sums and
//! products. When closure stalls, the least unmapped element is branched on
//! over all targets with the same invariant signature.

use serde::Serialize;

use super::{RingElem, RingTable};

/// A unity-preserving bijection `a -> b` that respects both tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingIso {
    pub map: Vec<u8>,
}

impl RingIso {
    pub fn apply(&self, x: RingElem) -> RingElem {
        RingElem(self.map[x.index()])
    }

    /// Checks that the map is a bijective ring homomorphism `a -> b`.
    pub fn verify(&self, a: &RingTable, b: &RingTable) -> bool {
        if a.order() != b.order() || self.map.len() != a.order() {
            return false;
        }
        let mut seen = vec![false; b.order()];
        for &m in &self.map {
            if m as usize >= b.order() || std::mem::replace(&mut seen[m as usize], true) {
                return false;
            }
        }
        if self.apply(a.one()) != b.one() {
            return false;
        }
        a.elements().all(|x| {
            a.elements().all(|y| {
                self.apply(a.add(x, y)) == b.add(self.apply(x), self.apply(y))
                    && self.apply(a.mul(x, y)) == b.mul(self.apply(x), self.apply(y))
            })
        })
    }
}

type Signature = (usize, Option<u32>, bool, usize, bool);

fn signature(t: &RingTable, x: RingElem) -> Signature {
    (
        t.additive_order(x),
        t.nilpotency_index(x),
        t.units().contains(x),
        t.annihilator(x).len(),
        t.mul(x, x) == x,
    )
}

struct Search<'a> {
    a: &'a RingTable,
    b: &'a RingTable,
    sig_a: Vec<Signature>,
    sig_b: Vec<Signature>,
}

#[derive(Clone)]
struct State {
    map: Vec<Option<u8>>,
    used: u64,
}

impl Search<'_> {
    fn assign(&self, st: &mut State, x: usize, y: usize) -> bool {
        match st.map[x] {
            Some(m) => m as usize == y,
            None => {
                if st.used >> y & 1 == 1 || self.sig_a[x] != self.sig_b[y] {
                    return false;
                }
                st.map[x] = Some(y as u8);
                st.used |= 1 << y;
                true
            }
        }
    }

    fn close(&self, st: &mut State) -> bool {
        loop {
            let mapped: Vec<(usize, usize)> = st
                .map
                .iter()
                .enumerate()
                .filter_map(|(i, m)| m.map(|m| (i, m as usize)))
                .collect();
            let before = mapped.len();
            for (i, &(x, fx)) in mapped.iter().enumerate() {
                for &(y, fy) in &mapped[i..] {
                    let (xe, ye) = (RingElem(x as u8), RingElem(y as u8));
                    let (fxe, fye) = (RingElem(fx as u8), RingElem(fy as u8));
                    let s = self.a.add(xe, ye).index();
                    if !self.assign(st, s, self.b.add(fxe, fye).index()) {
                        return false;
                    }
                    let p = self.a.mul(xe, ye).index();
                    if !self.assign(st, p, self.b.mul(fxe, fye).index()) {
                        return false;
                    }
                }
            }
            let after = st.map.iter().filter(|m| m.is_some()).count();
            if after == before {
                return true;
            }
        }
    }

    fn run(&self, st: State) -> Option<Vec<u8>> {
        let Some(g) = st.map.iter().position(Option::is_none) else {
            return Some(st.map.iter().map(|m| m.unwrap()).collect());
        };
        for c in 0..self.b.order() {
            let mut next = st.clone();
            if self.assign(&mut next, g, c) && self.close(&mut next) {
                if let Some(found) = self.run(next) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Searches for an isomorphism `a -> b`; returns the first one found in
/// element order, or `None` if the rings are not isomorphic.
pub fn iso_check(a: &RingTable, b: &RingTable) -> Option<RingIso> {
    if a.order() != b.order() {
        return None;
    }
    let sig_a: Vec<Signature> = a.elements().map(|x| signature(a, x)).collect();
    let sig_b: Vec<Signature> = b.elements().map(|x| signature(b, x)).collect();
    let (mut sa, mut sb) = (sig_a.clone(), sig_b.clone());
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let search = Search { a, b, sig_a, sig_b };
    let mut st = State {
        map: vec![None; a.order()],
        used: 0,
    };
    if !search.assign(&mut st, a.zero().index(), b.zero().index())
        || !search.assign(&mut st, a.one().index(), b.one().index())
        || !search.close(&mut st)
    {
        return None;
    }
    let map = search.run(st)?;
    let iso = RingIso { map };
    debug_assert!(iso.verify(a, b));
    Some(iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, RingSpec};

    fn ring(spec: RingSpec) -> RingTable {
        build_ring(&spec).unwrap()
    }

    #[test]
    fn crt() {
        let z6 = ring(RingSpec::zmod(6));
        let p = ring(RingSpec::product(vec![
            RingSpec::zmod(2),
            RingSpec::zmod(3),
        ]));
        let iso = iso_check(&z6, &p).expect("Z_6 and Z_2×Z_3 are isomorphic");
        assert!(iso.verify(&z6, &p));
        // 1 -> (1,1) forces 3 -> (1,0) and 2 -> (0,2)
        assert_eq!(p.label(iso.apply(RingElem(3))), "(1,0)");
        assert_eq!(p.label(iso.apply(RingElem(2))), "(0,2)");
    }

    #[test]
    fn additive_order_separates() {
        let z4 = ring(RingSpec::zmod(4));
        let d = ring(RingSpec::quotient(2, &["x"], &["x^2"]));
        assert!(iso_check(&z4, &d).is_none());
    }

    #[test]
    fn self_iso_is_identity() {
        let t = ring(RingSpec::quotient(2, &["x", "y"], &["x^2", "y^2"]));
        let iso = iso_check(&t, &t).unwrap();
        assert_eq!(iso.map, (0..16).collect::<Vec<u8>>());
    }

    #[test]
    fn relabelled_copy() {
        let t = ring(RingSpec::quotient(4, &["x"], &["x^2+x+1"]));
        let perm: Vec<usize> = (0..16).map(|i| (i * 5 + 3) % 16).collect();
        let r = t.relabel(&perm);
        let iso = iso_check(&t, &r).unwrap();
        assert!(iso.verify(&t, &r));
    }

    #[test]
    fn same_order_non_isomorphic() {
        let a = ring(RingSpec::quotient(4, &["x"], &["x^2"]));
        let b = ring(RingSpec::quotient(4, &["x"], &["x^2+x+1"]));
        let c = ring(RingSpec::zmod(16));
        assert!(iso_check(&a, &b).is_none());
        assert!(iso_check(&a, &c).is_none());
        let f4 = ring(RingSpec::gf(2, 2));
        let z2z2 = ring(RingSpec::product(vec![
            RingSpec::zmod(2),
            RingSpec::zmod(2),
        ]));
        assert!(iso_check(&f4, &z2z2).is_none());
    }
}
