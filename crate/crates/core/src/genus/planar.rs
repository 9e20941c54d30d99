//! Planarity by the Demoucron–Malgrange–Pertuiset face-insertion algorithm,
//! run separately on each biconnected block.

use crate::graph::{SimpleGraph, VSet};

/// Edge lists of the biconnected blocks (bridges included as one-edge blocks).
fn blocks(g: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
    struct St<'a> {
        g: &'a SimpleGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut St, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for v in s.g.neighbors(u).iter() {
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = g.order();
    let mut s = St {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.out
}

/// A cycle through the block: an edge `uv` plus a shortest `v`–`u` path
/// avoiding it.
fn find_cycle(adj: &[VSet], u: usize) -> Vec<usize> {
    let v = adj[u].first().expect("block vertices have neighbours");
    let mut prev = vec![usize::MAX; adj.len()];
    prev[v] = v;
    let mut queue = std::collections::VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for y in adj[x].iter() {
            if (x == v && y == u) || prev[y] != usize::MAX {
                continue;
            }
            prev[y] = x;
            if y == u {
                let mut cyc = vec![u];
                let mut z = u;
                while z != v {
                    z = prev[z];
                    cyc.push(z);
                }
                return cyc;
            }
            queue.push_back(y);
        }
    }
    unreachable!("a biconnected block with three or more vertices has a cycle")
}

struct Fragment {
    attachments: VSet,
    /// A path between two distinct attachments, endpoints included.
    path: Vec<usize>,
}

fn is_block_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![VSet::EMPTY; n];
    for &(u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let block_vertices: VSet = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let nv = block_vertices.len();
    if nv <= 4 {
        return true;
    }
    if edges.len() > 3 * nv - 6 {
        return false;
    }
    let cycle = find_cycle(&adj, block_vertices.first().unwrap());
    let mut in_h: VSet = cycle.iter().copied().collect();
    let mut h_adj = vec![VSet::EMPTY; n];
    let add_h_path = |h_adj: &mut Vec<VSet>, path: &[usize]| {
        for w in path.windows(2) {
            h_adj[w[0]].insert(w[1]);
            h_adj[w[1]].insert(w[0]);
        }
    };
    let mut closed = cycle.clone();
    closed.push(cycle[0]);
    add_h_path(&mut h_adj, &closed);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    loop {
        let fragments = fragments(&adj, &h_adj, &in_h, &block_vertices);
        if fragments.is_empty() {
            return true;
        }
        let face_sets: Vec<VSet> = faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = face_sets
                .iter()
                .enumerate()
                .filter(|(_, fs)| frag.attachments.minus(fs).is_empty())
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.unwrap();
        let path = &fragments[fi].path;
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let seg = |from: usize, to: usize| {
            let mut s = Vec::new();
            let mut i = from;
            loop {
                s.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % len;
            }
            s
        };
        let inner = &path[1..path.len() - 1];
        // face1: a .. b along the face, then back along the path
        let mut f1 = seg(ia, ib);
        f1.extend(inner.iter().rev());
        // face2: b .. a along the face, then forward along the path
        let mut f2 = seg(ib, ia);
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
        for &v in path {
            in_h.insert(v);
        }
        add_h_path(&mut h_adj, path);
    }
}

fn fragments(adj: &[VSet], h_adj: &[VSet], in_h: &VSet, block: &VSet) -> Vec<Fragment> {
    let mut out = Vec::new();
    // Chords between embedded vertices.
    for u in in_h.iter() {
        for v in adj[u].minus(&h_adj[u]).and(in_h).above(u).iter() {
            let mut attachments = VSet::EMPTY;
            attachments.insert(u);
            attachments.insert(v);
            out.push(Fragment {
                attachments,
                path: vec![u, v],
            });
        }
    }
    // Components of the block outside H, with their attachments.
    let outside = block.minus(in_h);
    let mut seen = VSet::EMPTY;
    for s in outside.iter() {
        if seen.contains(s) {
            continue;
        }
        let mut comp = VSet::EMPTY;
        comp.insert(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VSet::EMPTY;
            for v in frontier.iter() {
                next = next.or(&adj[v].and(&outside));
            }
            frontier = next.minus(&comp);
            comp = comp.or(&frontier);
        }
        seen = seen.or(&comp);
        let mut attachments = VSet::EMPTY;
        for v in comp.iter() {
            attachments = attachments.or(&adj[v].and(in_h));
        }
        // BFS inside the component from one attachment to another.
        let a = attachments.first().expect("block fragments attach to H");
        let mut prev = vec![usize::MAX; adj.len()];
        let mut queue = std::collections::VecDeque::new();
        for c in adj[a].and(&comp).iter() {
            prev[c] = a;
            queue.push_back(c);
        }
        let mut path = None;
        while let Some(c) = queue.pop_front() {
            let other = adj[c].and(&attachments);
            if let Some(b) = other.iter().find(|&b| b != a) {
                let mut p = vec![b, c];
                let mut x = c;
                while prev[x] != a {
                    x = prev[x];
                    p.push(x);
                }
                p.push(a);
                p.reverse();
                path = Some(p);
                break;
            }
            for d in adj[c].and(&comp).iter() {
                if prev[d] == usize::MAX {
                    prev[d] = c;
                    queue.push_back(d);
                }
            }
        }
        out.push(Fragment {
            attachments,
            path: path.expect("block fragments have two attachments"),
        });
    }
    out
}

/// Exact planarity test.
pub fn is_planar(g: &SimpleGraph) -> bool {
    let n = g.order();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    blocks(g).iter().all(|b| is_block_planar(n, b))
}
