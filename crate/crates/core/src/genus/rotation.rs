use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// For each vertex, the cyclic order of its neighbours (each neighbour
/// standing for the edge to it).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RotationSystem(pub Vec<Vec<usize>>);

impl RotationSystem {
    /// Every vertex lists its neighbours in increasing order.
    pub fn sorted(g: &SimpleGraph) -> RotationSystem {
        RotationSystem(
            (0..g.order())
                .map(|v| g.neighbors(v).iter().collect())
                .collect(),
        )
    }

    /// Checks that each list is a permutation of the vertex's neighbours.
    pub fn check(&self, g: &SimpleGraph) -> Result<()> {
        if self.0.len() != g.order() {
            return Err(Error::InvalidSpec(format!(
                "rotation has {} vertices, graph has {}",
                self.0.len(),
                g.order()
            )));
        }
        for (v, rot) in self.0.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v).iter().collect::<Vec<_>>() {
                return Err(Error::InvalidSpec(format!(
                    "rotation at vertex {v} is not a permutation of its neighbours"
                )));
            }
        }
        Ok(())
    }

    /// The neighbour following `u` around `v`.
    fn successor(&self, v: usize, u: usize) -> usize {
        let rot = &self.0[v];
        let i = rot
            .iter()
            .position(|&w| w == u)
            .expect("u is a neighbour of v");
        rot[(i + 1) % rot.len()]
    }
}

/// A rotation system with its face count and the genus it realises.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingCertificate {
    pub rotation: RotationSystem,
    pub faces: usize,
    pub genus: usize,
}

impl EmbeddingCertificate {
    /// Re-traces the faces and checks the recorded counts.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        face_trace(g, &self.rotation).is_ok_and(|c| c == *self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates always serialize")
    }

    pub fn from_json(text: &str) -> Result<EmbeddingCertificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Faces of the embedding given by `rot`, found as orbits of directed edges
/// under `(u→v) ↦ (v→succ_v(u))`.
///
/// Each isolated vertex counts as one face. With `c` components the genus
/// is `(2c − V + E − F) / 2`, the sum of the component genera.
pub fn face_trace(g: &SimpleGraph, rot: &RotationSystem) -> Result<EmbeddingCertificate> {
    rot.check(g)?;
    let n = g.order();
    let mut seen: Vec<Vec<bool>> = (0..n).map(|v| vec![false; rot.0[v].len()]).collect();
    let mut faces = 0;
    for v in 0..n {
        if rot.0[v].is_empty() {
            faces += 1;
        }
        for i in 0..rot.0[v].len() {
            if seen[v][i] {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (v, rot.0[v][i]);
            loop {
                let idx = rot.0[a].iter().position(|&w| w == b).unwrap();
                if seen[a][idx] {
                    break;
                }
                seen[a][idx] = true;
                let c = rot.successor(b, a);
                a = b;
                b = c;
            }
        }
    }
    let c = g.components().len() as i64;
    let twice = 2 * c - n as i64 + g.edge_count() as i64 - faces as i64;
    debug_assert!(twice >= 0 && twice % 2 == 0);
    Ok(EmbeddingCertificate {
        rotation: rot.clone(),
        faces,
        genus: (twice / 2) as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_has_one_face() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let c = face_trace(&g, &RotationSystem::sorted(&g)).unwrap();
        assert_eq!((c.faces, c.genus), (1, 0));
    }

    #[test]
    fn planar_k4() {
        // vertex 3 in the middle of triangle 0,1,2, all rotations clockwise
        let g = SimpleGraph::complete(4);
        let rot = RotationSystem(vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
        ]);
        let c = face_trace(&g, &rot).unwrap();
        assert_eq!((c.faces, c.genus), (4, 0));
        assert!(c.verify(&g));
        let back = EmbeddingCertificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn bad_rotation_is_rejected() {
        let g = SimpleGraph::complete(3);
        assert!(face_trace(&g, &RotationSystem(vec![vec![1, 2], vec![0], vec![0, 1]])).is_err());
    }

    #[test]
    fn disconnected_genus_is_additive() {
        let mut g = SimpleGraph::new(9).unwrap();
        for (u, v) in SimpleGraph::complete(5).edges() {
            g.add_edge(u, v);
        }
        g.add_edge(5, 6);
        let c = face_trace(&g, &RotationSystem::sorted(&g)).unwrap();
        // components: K_5, an edge, two isolated vertices
        let k5 = face_trace(
            &SimpleGraph::complete(5),
            &RotationSystem::sorted(&SimpleGraph::complete(5)),
        )
        .unwrap();
        assert_eq!(c.genus, k5.genus);
        assert_eq!(c.faces, k5.faces + 1 + 2);
    }
}
