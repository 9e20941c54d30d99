//! Exhaustive search for an orientable embedding with at least a given
//! number of faces, by growing faces one at a time.
//!
//! Each dart `u→v` has a rotation successor `σ(u→v)` (the next dart around
//! `u`); the face after `u→v` continues with `σ(v→u)`. Faces are traced
//! from a start dart and a branch happens only when the face reaches a dart
//! whose rotation successor is still free. Partial rotations are kept as
//! chains so that no vertex closes its cycle before every dart is placed.

use crate::graph::SimpleGraph;

use super::rotation::RotationSystem;

const NONE: u32 = u32::MAX;

pub(crate) enum Outcome {
    Found(RotationSystem),
    Refuted,
    OutOfBudget,
}

struct Undo {
    a: u32,
    b: u32,
    chain: Option<(u32, u32, u32, u32, u32, u32)>,
}

struct Search {
    rev: Vec<u32>,
    origin: Vec<u32>,
    target: Vec<u32>,
    out: Vec<Vec<u32>>,
    succ: Vec<u32>,
    pred: Vec<u32>,
    // For a chain of partial rotation `h → … → t`: head_of[t] = h,
    // tail_of[h] = t, and len at both ends.
    head_of: Vec<u32>,
    tail_of: Vec<u32>,
    len: Vec<u32>,
    used: Vec<bool>,
    used_count: usize,
    closed: usize,
    f_target: usize,
    min_face: usize,
    /// Graph distances, row-major.
    dist: Vec<u8>,
    n: usize,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
    solution: Option<Vec<u32>>,
}

impl Search {
    fn new(g: &SimpleGraph, f_target: usize, budget: u64) -> Search {
        let n = g.order();
        // Vertices by decreasing degree, ties by index.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut dart_of = vec![vec![NONE; n]; n];
        let mut origin = Vec::new();
        let mut target = Vec::new();
        let mut out = vec![Vec::new(); n];
        for &v in &order {
            for w in g.neighbors(v).iter() {
                let d = origin.len() as u32;
                dart_of[v][w] = d;
                origin.push(v as u32);
                target.push(w as u32);
                out[v].push(d);
            }
        }
        let nd = origin.len();
        let rev = (0..nd)
            .map(|d| dart_of[target[d] as usize][origin[d] as usize])
            .collect();
        let mut s = Search {
            rev,
            origin,
            target,
            out,
            succ: vec![NONE; nd],
            pred: vec![NONE; nd],
            head_of: (0..nd as u32).collect(),
            tail_of: (0..nd as u32).collect(),
            len: vec![1; nd],
            used: vec![false; nd],
            used_count: 0,
            closed: 0,
            f_target,
            min_face: if g.has_triangle() { 3 } else { 4 },
            dist: distances(g),
            n,
            nodes: 0,
            budget,
            out_of_budget: false,
            solution: None,
        };
        for v in 0..n {
            let o = s.out[v].clone();
            match o.len() {
                1 => {
                    s.link(o[0], o[0]);
                }
                2 => {
                    s.link(o[0], o[1]);
                    s.link(o[1], o[0]);
                }
                _ => {}
            }
        }
        s
    }

    fn degree(&self, d: u32) -> usize {
        self.out[self.origin[d as usize] as usize].len()
    }

    fn can_link(&self, a: u32, b: u32) -> bool {
        let (a, b) = (a as usize, b as usize);
        if self.succ[a] != NONE || self.pred[b] != NONE {
            return false;
        }
        if self.head_of[a] as usize == b {
            self.len[b] as usize == self.degree(b as u32)
        } else {
            true
        }
    }

    fn link(&mut self, a: u32, b: u32) -> Undo {
        debug_assert!(self.can_link(a, b));
        let (ai, bi) = (a as usize, b as usize);
        self.succ[ai] = b;
        self.pred[bi] = a;
        let h = self.head_of[ai];
        let chain = if h == b {
            None
        } else {
            let t = self.tail_of[bi];
            let saved = (
                h,
                self.tail_of[h as usize],
                t,
                self.head_of[t as usize],
                self.len[h as usize],
                self.len[t as usize],
            );
            let total = self.len[h as usize] + self.len[bi];
            self.tail_of[h as usize] = t;
            self.head_of[t as usize] = h;
            self.len[h as usize] = total;
            self.len[t as usize] = total;
            Some(saved)
        };
        Undo { a, b, chain }
    }

    fn unlink(&mut self, u: Undo) {
        self.succ[u.a as usize] = NONE;
        self.pred[u.b as usize] = NONE;
        if let Some((h, th, t, ht, lh, lt)) = u.chain {
            self.tail_of[h as usize] = th;
            self.head_of[t as usize] = ht;
            self.len[h as usize] = lh;
            self.len[t as usize] = lt;
        }
    }

    fn mark(&mut self, d: u32) {
        self.used[d as usize] = true;
        self.used_count += 1;
    }

    fn unmark(&mut self, d: u32) {
        self.used[d as usize] = false;
        self.used_count -= 1;
    }

    /// Upper bound on the final face count when the open face starting at
    /// `start` has `l` darts, the last one being `cur`. The face still has
    /// to get back to the origin of `start`.
    fn max_faces(&self, start: u32, cur: u32, l: usize) -> Option<usize> {
        let free = self.rev.len() - self.used_count;
        let back = self.dist
            [self.target[cur as usize] as usize * self.n + self.origin[start as usize] as usize];
        let need = self.min_face.max(l + back as usize) - l;
        let rest = free.checked_sub(need)?;
        Some(self.closed + 1 + rest / self.min_face)
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.out_of_budget = true;
        }
        !self.out_of_budget
    }

    fn next_face(&mut self) -> bool {
        if self.used_count == self.rev.len() {
            if self.closed >= self.f_target {
                self.solution = Some(self.succ.clone());
                return true;
            }
            return false;
        }
        let free = self.rev.len() - self.used_count;
        if self.closed + free / self.min_face < self.f_target {
            return false;
        }
        let start = self.pick_start();
        self.mark(start);
        let found = self.step(start, start, 1);
        self.unmark(start);
        found
    }

    /// An unused dart whose face is most constrained: one whose next dart
    /// is already fixed, else one ending at a vertex with fewest free darts.
    fn pick_start(&self) -> u32 {
        let mut best = (usize::MAX, NONE);
        for d in 0..self.rev.len() {
            if self.used[d] {
                continue;
            }
            let r = self.rev[d] as usize;
            if self.succ[r] != NONE {
                return d as u32;
            }
            let v = self.target[d] as usize;
            let free = self.out[v]
                .iter()
                .filter(|&&b| self.pred[b as usize] == NONE)
                .count();
            if free < best.0 {
                best = (free, d as u32);
            }
        }
        best.1
    }

    fn close_face(&mut self) -> bool {
        self.closed += 1;
        let found = self.next_face();
        self.closed -= 1;
        found
    }

    /// The open face began at `start` and its last dart so far is `cur`.
    fn step(&mut self, start: u32, cur: u32, l: usize) -> bool {
        if !self.tick() {
            return false;
        }
        if self
            .max_faces(start, cur, l)
            .is_none_or(|m| m < self.f_target)
        {
            return false;
        }
        let r = self.rev[cur as usize];
        let nxt = self.succ[r as usize];
        if nxt != NONE {
            if nxt == start {
                return self.close_face();
            }
            debug_assert!(!self.used[nxt as usize]);
            self.mark(nxt);
            let found = self.step(start, nxt, l + 1);
            self.unmark(nxt);
            return found;
        }
        let v = self.target[cur as usize] as usize;
        let starts_here = self.origin[start as usize] as usize == v;
        let candidates: Vec<u32> = starts_here
            .then_some(start)
            .into_iter()
            .chain(self.out[v].iter().copied().filter(|&b| b != start))
            .collect();
        for b in candidates {
            if !self.can_link(r, b) {
                continue;
            }
            let undo = self.link(r, b);
            let found = if b == start {
                self.close_face()
            } else {
                self.mark(b);
                let f = self.step(start, b, l + 1);
                self.unmark(b);
                f
            };
            self.unlink(undo);
            if found || self.out_of_budget {
                return found;
            }
        }
        false
    }

    fn rotation(&self, n: usize) -> RotationSystem {
        let succ = self.solution.as_ref().expect("a solution was recorded");
        RotationSystem(
            (0..n)
                .map(|v| {
                    let Some(&first) = self.out[v].first() else {
                        return Vec::new();
                    };
                    let mut rot = Vec::with_capacity(self.out[v].len());
                    let mut d = first;
                    loop {
                        rot.push(self.target[d as usize] as usize);
                        d = succ[d as usize];
                        if d == first {
                            break;
                        }
                    }
                    rot
                })
                .collect(),
        )
    }
}

fn distances(g: &SimpleGraph) -> Vec<u8> {
    let n = g.order();
    let mut d = vec![u8::MAX; n * n];
    for s in 0..n {
        d[s * n + s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).iter() {
                if d[s * n + w] == u8::MAX {
                    d[s * n + w] = d[s * n + u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    d
}

/// Looks for an embedding of the connected graph `g` (at least three
/// vertices) with genus at most `genus`. `budget` is decremented by the
/// number of search nodes visited.
pub(crate) fn embed_at_most(g: &SimpleGraph, genus: usize, budget: &mut u64) -> Outcome {
    let (v, e) = (g.order() as i64, g.edge_count() as i64);
    let f_target = e - v + 2 - 2 * genus as i64;
    if f_target <= 1 {
        // Every rotation system has at least one face.
        return Outcome::Found(RotationSystem::sorted(g));
    }
    let mut s = Search::new(g, f_target as usize, *budget);
    let found = s.next_face();
    *budget = budget.saturating_sub(s.nodes);
    if found {
        Outcome::Found(s.rotation(g.order()))
    } else if s.out_of_budget {
        Outcome::OutOfBudget
    } else {
        Outcome::Refuted
    }
}
