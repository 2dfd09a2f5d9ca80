//! Simple undirected graphs on dense vertex ids `0..n`.

mod bitset;
mod blocks;
mod cactus;
mod families;
mod ops;
mod structure;

pub use bitset::{Iter as VertexSetIter, VertexSet};
pub use blocks::{block_decomposition, BlockDecomposition};
pub use cactus::{random_cactus, random_graph, CACTUS_RNG};
pub use families::{generate, rp2_triangulation, FamilySpec};
pub use ops::{
    cartesian_product, categorical_product, complement, delete_edge, delete_vertex,
    disjoint_union, induced_subgraph, join_graphs,
};
pub use structure::{components, girth, induced_forest_check, Girth};

use crate::error::{Error, Result};

/// A simple graph stored as one neighborhood bitset per vertex.
///
/// Immutable once built; symmetry and loop-freeness are checked on
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { adj })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(); n],
        }
    }

    /// Trusted constructor for internal operations that already produce a
    /// symmetric loop-free adjacency.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let g = Self { adj };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.contains(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, a) in self.adj.iter().enumerate() {
            out.extend(a.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Number of edges of `G[s]`.
    pub fn induced_edge_count(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection_len(s)).sum::<usize>() / 2
    }

    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(i, a)| {
            !a.contains(i) && a.is_within(n) && a.iter().all(|j| self.adj[j].contains(i))
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn path_degree_sequence() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(Error::Input(_))));
    }
}
