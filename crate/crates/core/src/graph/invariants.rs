use super::{SimpleGraph, VSet};
use crate::error::{Error, Result};

/// Largest graph accepted by [`clique_number`].
pub const CLIQUE_GUARD: usize = 200;
/// Largest side `m` accepted by [`find_biclique`] and [`max_biclique`].
pub const MAX_BICLIQUE_M: usize = 5;

fn bfs_distances(g: &SimpleGraph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[s] = Some(0);
    let mut seen = VSet::EMPTY;
    seen.insert(s);
    let mut frontier = seen;
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = VSet::EMPTY;
        for v in frontier.iter() {
            next = next.or(g.neighbors(v));
        }
        frontier = next.minus(&seen);
        for v in frontier.iter() {
            dist[v] = Some(d);
        }
        seen = seen.or(&frontier);
    }
    dist
}

/// Largest shortest-path distance; `None` means infinite (disconnected).
/// The empty graph and a single vertex both have diameter 0.
pub fn diameter(g: &SimpleGraph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.order() {
        for d in bfs_distances(g, s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// Length of a shortest cycle; `None` means infinite (a forest).
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Greedy colouring of `cand`; vertices come back sorted by colour number.
fn colour_sort(g: &SimpleGraph, cand: &VSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut colours = Vec::with_capacity(cand.len());
    let mut uncoloured = *cand;
    let mut k = 0;
    while !uncoloured.is_empty() {
        k += 1;
        let mut q = uncoloured;
        while let Some(v) = q.first() {
            q.remove(v);
            q = q.minus(g.neighbors(v));
            uncoloured.remove(v);
            order.push(v);
            colours.push(k);
        }
    }
    (order, colours)
}

fn max_clique_rec(g: &SimpleGraph, mut cand: VSet, size: usize, best: &mut usize) {
    let (order, colours) = colour_sort(g, &cand);
    for idx in (0..order.len()).rev() {
        if size + colours[idx] <= *best {
            return;
        }
        let v = order[idx];
        let next = cand.and(g.neighbors(v));
        if next.is_empty() {
            *best = (*best).max(size + 1);
        } else {
            max_clique_rec(g, next, size + 1, best);
        }
        cand.remove(v);
    }
}

/// `ω(g)` by colour-bounded branch and bound; 0 for the empty graph.
pub fn clique_number(g: &SimpleGraph) -> Result<usize> {
    if g.order() > CLIQUE_GUARD {
        return Err(Error::TooLarge(g.order()));
    }
    let mut best = 0;
    max_clique_rec(g, g.vertices(), 0, &mut best);
    Ok(best)
}

fn least_clique(g: &SimpleGraph, r: usize, chosen: &mut Vec<usize>, cand: VSet) -> bool {
    if chosen.len() == r {
        return true;
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if chosen.len() + rest.len() < r {
            return false;
        }
        rest.remove(v);
        chosen.push(v);
        if least_clique(g, r, chosen, rest.and(g.neighbors(v))) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// The lexicographically least `r`-clique, if any.
pub fn find_complete_subgraph(g: &SimpleGraph, r: usize) -> Result<Option<Vec<usize>>> {
    if r == 0 {
        return Ok(Some(Vec::new()));
    }
    if clique_number(g)? < r {
        return Ok(None);
    }
    let mut chosen = Vec::new();
    let found = least_clique(g, r, &mut chosen, g.vertices());
    debug_assert!(found);
    Ok(Some(chosen))
}

/// Enumerates `m`-subsets `A` in lexicographic order with the running common
/// neighbourhood, stopping early when `visit` returns `true`.
fn for_each_m_set(
    g: &SimpleGraph,
    m: usize,
    need: &mut dyn FnMut() -> usize,
    visit: &mut dyn FnMut(&[usize], &VSet) -> bool,
) {
    fn rec(
        g: &SimpleGraph,
        m: usize,
        start: usize,
        a: &mut Vec<usize>,
        common: VSet,
        need: &mut dyn FnMut() -> usize,
        visit: &mut dyn FnMut(&[usize], &VSet) -> bool,
    ) -> bool {
        if a.len() == m {
            return visit(a, &common);
        }
        for v in start..g.order() {
            if g.order() - v < m - a.len() {
                break;
            }
            let next = common.and(g.neighbors(v));
            if next.len() < need() {
                continue;
            }
            a.push(v);
            if rec(g, m, v + 1, a, next, need, visit) {
                return true;
            }
            a.pop();
        }
        false
    }
    let mut a = Vec::with_capacity(m);
    rec(g, m, 0, &mut a, g.vertices(), need, visit);
}

fn check_m(m: usize) -> Result<()> {
    if m > MAX_BICLIQUE_M {
        Err(Error::MTooLarge(m))
    } else if m == 0 {
        Err(Error::InvalidSpec("biclique sides must be positive".into()))
    } else {
        Ok(())
    }
}

/// Disjoint `A`, `|A| = m`, and `B`, `|B| = n`, with every `A`–`B` edge
/// present: the lexicographically least `A`, then the least `n` vertices of
/// its common neighbourhood.
pub fn find_biclique(
    g: &SimpleGraph,
    m: usize,
    n: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    check_m(m)?;
    let mut found = None;
    for_each_m_set(g, m, &mut || n.max(1), &mut |a, common| {
        found = Some((a.to_vec(), common.iter().take(n).collect()));
        true
    });
    Ok(found)
}

/// The `K_{m,n}` with largest `n` (lexicographically least `A` among those).
pub fn max_biclique(g: &SimpleGraph, m: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    check_m(m)?;
    let best = std::cell::Cell::new(0usize);
    let mut found = None;
    for_each_m_set(g, m, &mut || best.get() + 1, &mut |a, common| {
        best.set(common.len());
        found = Some((a.to_vec(), common.iter().collect()));
        false
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distances() {
        assert_eq!(diameter(&SimpleGraph::path(3)), Some(2));
        assert_eq!(diameter(&SimpleGraph::complete(6)), Some(1));
        assert_eq!(diameter(&SimpleGraph::new(0).unwrap()), Some(0));
        assert_eq!(diameter(&SimpleGraph::new(1).unwrap()), Some(0));
        assert_eq!(diameter(&SimpleGraph::new(2).unwrap()), None);
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&SimpleGraph::complete_bipartite(2, 4)), Some(4));
        assert_eq!(girth(&SimpleGraph::complete(6)), Some(3));
        assert_eq!(girth(&SimpleGraph::path(3)), None);
        assert_eq!(girth(&SimpleGraph::cycle(7)), Some(7));
        // Petersen graph
        let mut p = SimpleGraph::new(10).unwrap();
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5);
            p.add_edge(i, i + 5);
            p.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        assert_eq!(girth(&p), Some(5));
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&SimpleGraph::path(3)).unwrap(), 2);
        assert_eq!(
            clique_number(&SimpleGraph::complete_bipartite(3, 3)).unwrap(),
            2
        );
        assert_eq!(
            clique_number(&SimpleGraph::complete_multipartite(&[2; 5])).unwrap(),
            5
        );
        assert_eq!(clique_number(&SimpleGraph::new(0).unwrap()), Ok(0));
        assert!(matches!(
            clique_number(&SimpleGraph::new(201).unwrap()),
            Err(Error::TooLarge(201))
        ));
        assert_eq!(
            find_complete_subgraph(&SimpleGraph::complete(6), 5).unwrap(),
            Some(vec![0, 1, 2, 3, 4])
        );
        assert_eq!(
            find_complete_subgraph(&SimpleGraph::path(3), 3).unwrap(),
            None
        );
    }

    #[test]
    fn bicliques() {
        let k24 = SimpleGraph::complete_bipartite(2, 4);
        assert_eq!(
            find_biclique(&k24, 2, 4).unwrap(),
            Some((vec![0, 1], vec![2, 3, 4, 5]))
        );
        assert_eq!(find_biclique(&SimpleGraph::path(3), 2, 2).unwrap(), None);
        assert!(matches!(
            find_biclique(&k24, 6, 1),
            Err(Error::MTooLarge(6))
        ));
        let (a, b) = max_biclique(&SimpleGraph::complete_bipartite(3, 7), 3)
            .unwrap()
            .unwrap();
        assert_eq!((a.len(), b.len()), (3, 7));
    }
}
