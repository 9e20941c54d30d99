use std::collections::BTreeMap;

use super::{SimpleGraph, VSet};

/// Colour refinement run on both graphs at once so colours are comparable.
fn refine(g: &SimpleGraph, h: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    loop {
        let sig = |graph: &SimpleGraph, col: &[usize], v: usize| {
            let mut n: Vec<usize> = graph.neighbors(v).iter().map(|w| col[w]).collect();
            n.sort_unstable();
            (col[v], n)
        };
        let sg: Vec<_> = (0..g.order()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.order()).map(|v| sig(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|s| ids[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| ids[s]).collect();
        let classes_before = {
            let mut c: Vec<usize> = cg.iter().chain(&ch).copied().collect();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        cg = ng;
        ch = nh;
        if ids.len() == classes_before {
            return (cg, ch);
        }
    }
}

struct Matcher<'a> {
    g: &'a SimpleGraph,
    h: &'a SimpleGraph,
    cg: Vec<usize>,
    ch: Vec<usize>,
    order: Vec<usize>,
}

impl Matcher<'_> {
    fn rec(&self, k: usize, map: &mut Vec<usize>, used: &mut VSet) -> bool {
        if k == self.order.len() {
            return true;
        }
        let v = self.order[k];
        for w in 0..self.h.order() {
            if used.contains(w) || self.cg[v] != self.ch[w] {
                continue;
            }
            let consistent = self.order[..k]
                .iter()
                .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used.insert(w);
            if self.rec(k + 1, map, used) {
                return true;
            }
            used.remove(w);
        }
        false
    }
}

/// A bijection `map` with `uv ∈ E(g) ⇔ map[u]map[v] ∈ E(h)`, if one exists.
///
/// Colour refinement fixes the candidate classes; vertices are then matched
/// in breadth-first order with backtracking.
pub fn graph_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = refine(g, h);
    let (mut a, mut b) = (cg.clone(), ch.clone());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let mut order = Vec::with_capacity(g.order());
    for comp in g.components() {
        let mut seen = VSet::EMPTY;
        let mut queue = std::collections::VecDeque::from([comp[0]]);
        seen.insert(comp[0]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in g.neighbors(u).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
    }
    let m = Matcher {
        g,
        h,
        cg,
        ch,
        order,
    };
    let mut map = vec![usize::MAX; g.order()];
    let mut used = VSet::EMPTY;
    m.rec(0, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iso_and_not() {
        let c6 = SimpleGraph::cycle(6);
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        assert!(graph_isomorphism(&c6, &c6).is_some());
        assert!(graph_isomorphism(&c6, &k33).is_none());
        // two triangles vs C_6: same degree sequence, not isomorphic
        let tt =
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(graph_isomorphism(&c6, &tt).is_none());
        let relabelled =
            SimpleGraph::from_edges(6, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)]).unwrap();
        let map = graph_isomorphism(&c6, &relabelled).unwrap();
        for (u, v) in c6.edges() {
            assert!(relabelled.has_edge(map[u], map[v]));
        }
    }
}
