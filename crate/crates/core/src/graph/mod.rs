//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, the
//! zero-divisor graphs built from rings, and their invariants.

mod export;
mod invariants;
mod iso;
mod ring_graphs;

pub use export::{export_dot, export_json, parse_json, GraphJson};
pub use invariants::{
    clique_number, diameter, find_biclique, find_complete_subgraph, girth, max_biclique,
    CLIQUE_GUARD, MAX_BICLIQUE_M,
};
pub use iso::graph_isomorphism;
pub use ring_graphs::{blowup_graph, expand, ideal_zero_divisor_graph, zero_divisor_graph};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 256;

const WORDS: usize = MAX_VERTICES / 64;

/// A vertex set as a fixed-width bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VSet(pub [u64; WORDS]);

impl VSet {
    pub const EMPTY: VSet = VSet([0; WORDS]);

    pub fn range(n: usize) -> VSet {
        let mut s = VSet::EMPTY;
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1 << (v & 63));
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn and(&self, o: &VSet) -> VSet {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0) {
            *a &= b;
        }
        r
    }

    #[inline]
    pub fn or(&self, o: &VSet) -> VSet {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0) {
            *a |= b;
        }
        r
    }

    #[inline]
    pub fn minus(&self, o: &VSet) -> VSet {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0) {
            *a &= !b;
        }
        r
    }

    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    /// Members greater than `v`.
    pub fn above(&self, v: usize) -> VSet {
        let mut r = *self;
        for i in 0..WORDS {
            let lo = i * 64;
            if v + 1 >= lo + 64 {
                r.0[i] = 0;
            } else if v + 1 > lo {
                r.0[i] &= !0u64 << (v + 1 - lo);
            }
        }
        r
    }
}

impl FromIterator<usize> for VSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VSet {
        let mut s = VSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph on vertices `0..n` with display labels.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<VSet>,
    labels: Vec<String>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Result<SimpleGraph> {
        SimpleGraph::with_labels((0..n).map(|v| v.to_string()).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Result<SimpleGraph> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::GraphTooLarge(labels.len()));
        }
        Ok(SimpleGraph {
            adj: vec![VSet::EMPTY; labels.len()],
            labels,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n).expect("complete graph within size limit");
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{m,n}` with the `m` side first.
    pub fn complete_bipartite(m: usize, n: usize) -> SimpleGraph {
        SimpleGraph::complete_multipartite(&[m, n])
    }

    pub fn complete_multipartite(parts: &[usize]) -> SimpleGraph {
        let n: usize = parts.iter().sum();
        let part: Vec<usize> = parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| std::iter::repeat_n(i, p))
            .collect();
        let mut g = SimpleGraph::new(n).expect("multipartite graph within size limit");
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn path(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        SimpleGraph::from_edges(n, &edges).expect("path within size limit")
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Adds `uv`; loops are ignored so the graph stays simple.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.order());
        self.labels = labels;
    }

    pub fn vertices(&self) -> VSet {
        VSet::range(self.order())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| {
                self.adj[u]
                    .above(u)
                    .iter()
                    .map(move |v| (u, v))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.order() == other.order()
            && self
                .adj
                .iter()
                .zip(&other.adj)
                .all(|(a, b)| a.minus(b).is_empty())
    }

    /// Subgraph induced on `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut g =
            SimpleGraph::with_labels(keep.iter().map(|&v| self.labels[v].clone()).collect())
                .expect("induced subgraph is no larger than its parent");
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = VSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VSet::EMPTY;
            comp.insert(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VSet::EMPTY;
                for v in frontier.iter() {
                    next = next.or(&self.adj[v]);
                }
                frontier = next.minus(&comp);
                comp = comp.or(&frontier);
            }
            seen = seen.or(&comp);
            out.push(comp.iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .iter()
            .any(|&(u, v)| !self.adj[u].and(&self.adj[v]).is_empty())
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimpleGraph(n={}, edges={:?})",
            self.order(),
            self.edges()
        )
    }
}
