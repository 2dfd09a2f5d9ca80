use std::collections::BTreeMap;

use super::{complement, join_graphs, Graph, VertexSet};
use crate::error::{Error, Result};

/// Named graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// `St_{r,s}`: vertices `u_0..u_r` then `v_0..v_s`.
    DoubleStar(usize, usize),
    /// Hub (vertex 0) joined to `C_n` on vertices `1..=n`.
    Wheel(usize),
    /// The cycle `v, w_1..w_r, u, w_{r+1}..w_{r+k}` plus the chord `uv`,
    /// labeled in that cyclic order starting at `v = 0`, so `u = r + 1`.
    CycleWithChord(usize, usize),
    Petersen,
    /// Complement of the 1-skeleton of the barycentric subdivision of the
    /// six-vertex projective plane (31 vertices).
    Rp2BarycentricComplement,
    EdgeList(usize, Vec<(usize, usize)>),
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => {
            need(*n >= 1, "path needs n >= 1")?;
            Graph::new(*n, &(1..*n).map(|i| (i - 1, i)).collect::<Vec<_>>())
        }
        FamilySpec::Cycle(n) => {
            need(*n >= 3, "cycle needs n >= 3")?;
            Graph::new(*n, &(0..*n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
        }
        FamilySpec::Complete(n) => {
            need(*n >= 1, "complete graph needs n >= 1")?;
            let edges: Vec<_> = (0..*n)
                .flat_map(|u| (u + 1..*n).map(move |v| (u, v)))
                .collect();
            Graph::new(*n, &edges)
        }
        FamilySpec::CompleteMultipartite(parts) => {
            need(!parts.is_empty(), "multipartite graph needs at least one part")?;
            need(parts.iter().all(|&p| p >= 1), "every part needs size >= 1")?;
            let mut owner = Vec::new();
            for (i, &p) in parts.iter().enumerate() {
                owner.extend(std::iter::repeat_n(i, p));
            }
            let n = owner.len();
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| owner[u] != owner[v])
                .collect();
            Graph::new(n, &edges)
        }
        FamilySpec::DoubleStar(r, s) => {
            need(*r >= 1 && *s >= 1, "double star needs r, s >= 1")?;
            let v0 = r + 1;
            let mut edges: Vec<_> = (1..=*r).map(|i| (0, i)).collect();
            edges.extend((1..=*s).map(|i| (v0, v0 + i)));
            edges.push((0, v0));
            Graph::new(r + s + 2, &edges)
        }
        FamilySpec::Wheel(n) => {
            need(*n >= 3, "wheel needs a rim of n >= 3")?;
            Ok(join_graphs(
                &Graph::empty(1),
                &generate(&FamilySpec::Cycle(*n))?,
            ))
        }
        FamilySpec::CycleWithChord(r, k) => {
            need(*r >= 1 && *k >= 1, "chorded cycle needs r, k >= 1")?;
            let n = r + k + 2;
            let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.push((0, r + 1));
            Graph::new(n, &edges)
        }
        FamilySpec::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((i + 5, (i + 2) % 5 + 5));
            }
            Graph::new(10, &edges)
        }
        FamilySpec::Rp2BarycentricComplement => {
            Ok(complement(&barycentric_skeleton(&rp2_triangulation())))
        }
        FamilySpec::EdgeList(n, edges) => Graph::new(*n, edges),
    }
}

fn need(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::input(msg))
    }
}

/// Triangles of the six-vertex triangulation of the real projective plane.
pub fn rp2_triangulation() -> Vec<[usize; 3]> {
    vec![
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [2, 4, 5],
        [1, 3, 5],
    ]
}

/// 1-skeleton of the barycentric subdivision of a pure 2-complex: one vertex
/// per face (vertices first, then edges, then triangles, each in sorted
/// order), adjacent when one face contains the other.
fn barycentric_skeleton(triangles: &[[usize; 3]]) -> Graph {
    let mut faces: BTreeMap<(usize, VertexSet), ()> = BTreeMap::new();
    for t in triangles {
        let full: VertexSet = t.iter().copied().collect();
        for mask in 1u32..8 {
            let f: VertexSet = (0..3).filter(|i| mask & (1 << i) != 0).map(|i| t[i]).collect();
            faces.insert((f.len(), f), ());
        }
        faces.insert((3, full), ());
    }
    let faces: Vec<VertexSet> = faces.into_keys().map(|(_, f)| f).collect();
    let mut edges = Vec::new();
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            if faces[i].is_subset(&faces[j]) || faces[j].is_subset(&faces[i]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(faces.len(), &edges).expect("barycentric skeleton is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::girth;

    #[test]
    fn double_star_shape() {
        let g = generate(&FamilySpec::DoubleStar(2, 2)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 5));
        assert_eq!(g.degrees().iter().filter(|&&d| d == 3).count(), 2);
    }

    #[test]
    fn chord_one_one_is_k4_minus_edge() {
        let g = generate(&FamilySpec::CycleWithChord(1, 1)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 5));
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn path_and_cycle_sizes() {
        let p = generate(&FamilySpec::Path(6)).unwrap();
        assert_eq!((p.n(), p.edge_count()), (6, 5));
        let c = generate(&FamilySpec::Cycle(7)).unwrap();
        assert_eq!((c.n(), c.edge_count()), (7, 7));
        assert_eq!(girth(&c), crate::graph::Girth::Finite(7));
    }

    #[test]
    fn wheel_is_hub_plus_rim() {
        let w = generate(&FamilySpec::Wheel(5)).unwrap();
        assert_eq!((w.n(), w.edge_count()), (6, 10));
        assert_eq!(w.degree(0), 5);
    }

    #[test]
    fn rp2_is_a_closed_surface() {
        // Every edge of K_6 lies in exactly two triangles.
        let mut count = BTreeMap::new();
        for t in rp2_triangulation() {
            for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                *count.entry((a, b)).or_insert(0) += 1;
            }
        }
        assert_eq!(count.len(), 15);
        assert!(count.values().all(|&c| c == 2));
    }

    #[test]
    fn rp2_complement_size() {
        let h = generate(&FamilySpec::Rp2BarycentricComplement).unwrap();
        assert_eq!(h.n(), 31);
        // skeleton has 90 edges
        assert_eq!(h.edge_count(), 31 * 30 / 2 - 90);
    }

    #[test]
    fn family_minimums() {
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(generate(&FamilySpec::CycleWithChord(0, 3)).is_err());
        assert!(generate(&FamilySpec::CompleteMultipartite(vec![2, 0])).is_err());
        assert!(generate(&FamilySpec::Path(0)).is_err());
    }
}
