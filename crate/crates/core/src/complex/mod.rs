//! Simplicial complexes stored by facets, and the forest complexes `F_d(G)`.

mod bound;
mod faces;
mod forest;

pub use bound::DegreeBound;
pub use faces::{Budget, FaceSlices};
pub use forest::{faces_of_dim, forest_complex, forest_complex_with, forest_faces, t_d, ForestFaces};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use faces::{faces_from_facets, maximal_sets, minimal_sets};

/// Anything that can list its faces dimension by dimension.
pub trait FaceSource: Sync {
    fn ground(&self) -> usize;

    /// Faces with dimensions in `lo..=hi`.
    fn faces_in_dims(&self, lo: i32, hi: i32, budget: &Budget) -> Result<FaceSlices>;
}

/// A finite abstract simplicial complex on vertices `0..ground`, stored as a
/// sorted antichain of facets.
///
/// No facets at all is the void complex; the single facet `∅` is the empty
/// complex (the (−1)-sphere). Ground vertices that lie in no facet are kept:
/// duality depends on the ground count, not on the support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from generating sets; non-maximal and repeated sets
    /// are dropped.
    pub fn new(ground: usize, generators: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let sets: Vec<VertexSet> = generators.into_iter().collect();
        if let Some(bad) = sets.iter().find(|s| !s.is_within(ground)) {
            return Err(Error::input(format!(
                "face {bad:?} uses a vertex outside 0..{ground}"
            )));
        }
        Ok(Self {
            ground,
            facets: maximal_sets(sets),
        })
    }

    pub(crate) fn from_sorted_antichain(ground: usize, facets: Vec<VertexSet>) -> Result<Self> {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(facets.iter().all(|f| f.is_within(ground)));
        Ok(Self { ground, facets })
    }

    pub fn void(ground: usize) -> Self {
        Self {
            ground,
            facets: Vec::new(),
        }
    }

    pub fn empty(ground: usize) -> Self {
        Self {
            ground,
            facets: vec![VertexSet::new()],
        }
    }

    /// The full simplex on `0..n`.
    pub fn simplex(n: usize) -> Self {
        Self {
            ground: n,
            facets: vec![VertexSet::full(n)],
        }
    }

    /// `∂Δ^{n-1}`: all proper subsets of `0..n`, a sphere of dimension `n-2`.
    pub fn simplex_boundary(n: usize) -> Self {
        let full = VertexSet::full(n);
        let mut facets: Vec<VertexSet> = (0..n).map(|v| full.without(v)).collect();
        facets.sort();
        Self { ground: n, facets }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex whose only face is `∅`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.len() as i32 - 1).max()
    }

    pub fn contains_face(&self, s: &VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// Vertices lying in some facet.
    pub fn support(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::new(), |acc, f| acc.union(f))
    }

    pub fn faces_of_dim(&self, q: i32) -> Vec<VertexSet> {
        faces_from_facets(self.ground, &self.facets, q, q, &Budget::unlimited())
            .map(|f| f.dim(q).to_vec())
            .unwrap_or_default()
    }

    pub fn f_vector(&self) -> FVector {
        let Some(top) = self.dim() else {
            return FVector(Vec::new());
        };
        let slices = faces_from_facets(self.ground, &self.facets, -1, top, &Budget::unlimited())
            .expect("unlimited budget");
        FVector((-1..=top).map(|q| slices.dim(q).len() as u64).collect())
    }

    /// Reduced Euler characteristic `Σ_{q ≥ -1} (-1)^q f_q`; zero when void.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().reduced_euler()
    }

    /// Faces of dimension at most `q`. The (−1)-skeleton of a non-void
    /// complex is the empty complex.
    pub fn skeleton(&self, q: i32) -> Result<Self> {
        if q < -1 {
            return Err(Error::input("skeleton dimension must be at least -1"));
        }
        if self.is_void() {
            return Ok(self.clone());
        }
        let mut facets = self.faces_of_dim(q);
        facets.extend(
            self.facets
                .iter()
                .filter(|f| (f.len() as i32) < q + 1)
                .cloned(),
        );
        facets.sort();
        Self::from_sorted_antichain(self.ground, facets)
    }

    /// `lk(σ)`; void when `σ` is not a face.
    pub fn link(&self, sigma: &VertexSet) -> Self {
        let mut facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(f))
            .map(|f| f.difference(sigma))
            .collect();
        facets.sort();
        Self {
            ground: self.ground,
            facets,
        }
    }

    /// `st(σ)`; void when `σ` is not a face.
    pub fn star(&self, sigma: &VertexSet) -> Self {
        Self {
            ground: self.ground,
            facets: self
                .facets
                .iter()
                .filter(|f| sigma.is_subset(f))
                .cloned()
                .collect(),
        }
    }

    /// `K * L` with `L` relabeled to `ground(K)..`.
    pub fn join(&self, other: &Self) -> Self {
        let shift = self.ground;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for h in &other.facets {
                facets.push(f.union(&h.shifted(shift)));
            }
        }
        facets.sort();
        Self {
            ground: self.ground + other.ground,
            facets,
        }
    }

    /// Cone with apex `ground(K)`.
    pub fn cone(&self) -> Self {
        self.join(&Self::simplex(1))
    }

    /// Suspension with poles `ground(K)` and `ground(K) + 1`.
    pub fn suspension(&self) -> Self {
        self.join(&Self::simplex_boundary(2))
    }

    /// `K ∪ C(L)` for a subcomplex `L` on the same ground, with the apex at
    /// vertex `ground(K)`.
    pub fn add_cone_over_subcomplex(&self, sub: &Self) -> Result<Self> {
        if sub.ground > self.ground {
            return Err(Error::input("subcomplex has a larger ground set"));
        }
        if let Some(bad) = sub.facets.iter().find(|f| !self.contains_face(f)) {
            return Err(Error::input(format!("{bad:?} is not a face of the complex")));
        }
        let apex = self.ground;
        let mut sets = self.facets.clone();
        sets.extend(sub.facets.iter().map(|f| f.with(apex)));
        Self::new(self.ground + 1, sets)
    }

    /// `X* = {σ : V − σ ∉ X}` over the ground set `V`.
    ///
    /// The facets of `X*` are the complements of the minimal non-faces of
    /// `X`, which are the minimal transversals of the facet complements.
    pub fn alexander_dual(&self) -> Self {
        let full = VertexSet::full(self.ground);
        let mut transversals = vec![VertexSet::new()];
        for f in &self.facets {
            let edge = full.difference(f);
            let mut next = Vec::with_capacity(transversals.len());
            for t in transversals {
                if !t.is_disjoint(&edge) {
                    next.push(t);
                } else {
                    next.extend(edge.iter().map(|v| t.with(v)));
                }
            }
            transversals = minimal_sets(next);
        }
        let mut facets: Vec<VertexSet> = transversals.iter().map(|t| full.difference(t)).collect();
        facets.sort();
        Self {
            ground: self.ground,
            facets,
        }
    }

    /// Renames vertex `v` to `map[v]` on a new ground set.
    pub fn relabel(&self, ground: usize, map: &[usize]) -> Result<Self> {
        if map.len() < self.ground || map.iter().any(|&v| v >= ground) {
            return Err(Error::input("relabeling map does not fit the ground sets"));
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| map[v]).collect())
            .collect::<Vec<VertexSet>>();
        Self::new(ground, facets)
    }

    pub fn is_antichain(&self) -> bool {
        self.facets.windows(2).all(|w| w[0] < w[1])
            && self.facets.iter().enumerate().all(|(i, f)| {
                self.facets
                    .iter()
                    .enumerate()
                    .all(|(j, h)| i == j || !f.is_subset(h))
            })
    }
}

impl FaceSource for SimplicialComplex {
    fn ground(&self) -> usize {
        self.ground
    }

    fn faces_in_dims(&self, lo: i32, hi: i32, budget: &Budget) -> Result<FaceSlices> {
        faces_from_facets(self.ground, &self.facets, lo, hi, budget)
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Complex(ground={}, facets={:?})", self.ground, self.facets)
    }
}

/// Face counts `f_{-1}, f_0, f_1, ...`; empty for the void complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_q`, zero outside the stored range.
    pub fn get(&self, q: i32) -> u64 {
        usize::try_from(q + 1)
            .ok()
            .and_then(|i| self.0.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn reduced_euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}
