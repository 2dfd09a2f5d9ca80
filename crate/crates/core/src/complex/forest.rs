use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::faces::{FaceCounter, FaceSlices};
use super::{Budget, DegreeBound, FaceSource, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Incremental state of an induced forest under construction: per-vertex
/// degree inside the set and a component label.
#[derive(Clone)]
struct Growth {
    set: VertexSet,
    degree: Vec<u32>,
    component: Vec<u32>,
}

impl Growth {
    fn new(n: usize) -> Self {
        Self {
            set: VertexSet::new(),
            degree: vec![0; n],
            component: (0..n as u32).collect(),
        }
    }

    /// Whether adding `v` keeps the set an induced forest within `cap`.
    fn admits(&self, g: &Graph, cap: DegreeBound, v: usize) -> bool {
        let touching = g.neighbors(v).intersection(&self.set);
        let k = touching.len();
        if !cap.allows(k) {
            return false;
        }
        if touching.iter().any(|u| !cap.allows(self.degree[u] as usize + 1)) {
            return false;
        }
        // Two neighbours in one component would close a cycle.
        let mut seen: Vec<u32> = Vec::with_capacity(k);
        for u in touching.iter() {
            let c = self.component[u];
            if seen.contains(&c) {
                return false;
            }
            seen.push(c);
        }
        true
    }

    fn extended(&self, g: &Graph, v: usize) -> Self {
        let mut next = self.clone();
        let touching = g.neighbors(v).intersection(&self.set);
        let merged: Vec<u32> = touching.iter().map(|u| self.component[u]).collect();
        for u in touching.iter() {
            next.degree[u] += 1;
        }
        next.degree[v] = touching.len() as u32;
        let label = v as u32;
        next.component[v] = label;
        if !merged.is_empty() {
            for w in self.set.iter() {
                if merged.contains(&self.component[w]) {
                    next.component[w] = label;
                }
            }
        }
        next.set.insert(v);
        next
    }
}

/// The faces of `F_d(G)` enumerated straight from the graph.
#[derive(Clone, Copy, Debug)]
pub struct ForestFaces<'a> {
    pub graph: &'a Graph,
    pub bound: DegreeBound,
}

impl<'a> ForestFaces<'a> {
    pub fn new(graph: &'a Graph, bound: DegreeBound) -> Self {
        Self { graph, bound }
    }
}

impl FaceSource for ForestFaces<'_> {
    fn ground(&self) -> usize {
        self.graph.n()
    }

    fn faces_in_dims(&self, lo: i32, hi: i32, budget: &Budget) -> Result<FaceSlices> {
        forest_faces(self.graph, self.bound, lo, hi, budget)
    }
}

/// Faces of `F_d(G)` with dimensions in `lo..=hi`, in lexicographic order.
///
/// Subtrees rooted at each least vertex are searched in parallel and merged
/// in vertex order.
pub fn forest_faces(
    g: &Graph,
    d: DegreeBound,
    lo: i32,
    hi: i32,
    budget: &Budget,
) -> Result<FaceSlices> {
    let mut out = FaceSlices::new(lo, hi);
    if hi < -1 {
        return Ok(out);
    }
    let n = g.n();
    let max_size = ((hi + 1) as usize).min(n);
    let counter = FaceCounter::new(max_size, budget.faces_per_dim);
    let root = Growth::new(n);
    out.record(&root.set, &counter)?;
    if max_size == 0 {
        return Ok(out);
    }
    let parts: Vec<Result<FaceSlices>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut part = FaceSlices::new(lo, hi);
            let start = root.extended(g, v);
            grow(g, d, &start, v + 1, max_size, &mut part, &counter)?;
            Ok(part)
        })
        .collect();
    for part in parts {
        out.append(part?);
    }
    Ok(out)
}

fn grow(
    g: &Graph,
    d: DegreeBound,
    state: &Growth,
    start: usize,
    max_size: usize,
    out: &mut FaceSlices,
    counter: &FaceCounter,
) -> Result<()> {
    out.record(&state.set, counter)?;
    if state.set.len() == max_size {
        return Ok(());
    }
    for v in start..g.n() {
        if state.admits(g, d, v) {
            grow(g, d, &state.extended(g, v), v + 1, max_size, out, counter)?;
        }
    }
    Ok(())
}

/// All faces of `F_d(G)` of dimension `q`, in lexicographic order.
pub fn faces_of_dim(g: &Graph, d: DegreeBound, q: i32) -> Vec<VertexSet> {
    forest_faces(g, d, q, q, &Budget::unlimited())
        .map(|f| f.dim(q).to_vec())
        .unwrap_or_default()
}

/// `F_d(G)` as an explicit complex under the default budget.
pub fn forest_complex(g: &Graph, d: DegreeBound) -> Result<SimplicialComplex> {
    forest_complex_with(g, d, &Budget::default())
}

/// `F_d(G)` with facets found as the induced forests admitting no further
/// vertex. The graph on zero vertices gives the complex `{∅}`.
pub fn forest_complex_with(g: &Graph, d: DegreeBound, budget: &Budget) -> Result<SimplicialComplex> {
    let n = g.n();
    let visited = AtomicUsize::new(0);
    let root = Growth::new(n);
    if n == 0 {
        return Ok(SimplicialComplex::empty(0));
    }
    let parts: Vec<Result<Vec<VertexSet>>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut facets = Vec::new();
            maximal(g, d, &root.extended(g, v), v + 1, &mut facets, &visited, budget)?;
            Ok(facets)
        })
        .collect();
    let mut facets = Vec::new();
    for part in parts {
        facets.extend(part?);
        if facets.len() > budget.faces_per_dim {
            return Err(Error::Capacity {
                what: "facets",
                count: facets.len(),
                limit: budget.faces_per_dim,
            });
        }
    }
    SimplicialComplex::from_sorted_antichain(n, facets)
}

fn maximal(
    g: &Graph,
    d: DegreeBound,
    state: &Growth,
    start: usize,
    facets: &mut Vec<VertexSet>,
    visited: &AtomicUsize,
    budget: &Budget,
) -> Result<()> {
    let count = visited.fetch_add(1, Ordering::Relaxed) + 1;
    if count > budget.facet_search {
        return Err(Error::Capacity {
            what: "sets visited in facet search",
            count,
            limit: budget.facet_search,
        });
    }
    let mut extendable = false;
    for v in 0..g.n() {
        if state.set.contains(v) || !state.admits(g, d, v) {
            continue;
        }
        extendable = true;
        if v >= start {
            maximal(g, d, &state.extended(g, v), v + 1, facets, visited, budget)?;
        }
    }
    if !extendable {
        facets.push(state.set.clone());
    }
    Ok(())
}

/// `t_d(G)`: the order of a largest induced forest with maximum degree at
/// most `d`.
pub fn t_d(g: &Graph, d: DegreeBound) -> Result<usize> {
    Ok(forest_complex(g, d)?
        .facets()
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, induced_forest_check, FamilySpec};
    use proptest::prelude::*;

    fn fam(s: FamilySpec) -> Graph {
        generate(&s).unwrap()
    }

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    const INF: DegreeBound = DegreeBound::Unbounded;

    #[test]
    fn four_cycle_is_boundary_of_tetrahedron() {
        let k = forest_complex(&fam(FamilySpec::Cycle(4)), INF).unwrap();
        assert_eq!(
            k.facets(),
            &[vs(&[0, 1, 2]), vs(&[0, 1, 3]), vs(&[0, 2, 3]), vs(&[1, 2, 3])]
        );
    }

    #[test]
    fn complete_graph_at_one_is_its_edges() {
        let k = forest_complex(&fam(FamilySpec::Complete(4)), DegreeBound::Finite(1)).unwrap();
        assert_eq!(k.facets().len(), 6);
        assert!(k.facets().iter().all(|f| f.len() == 2));
    }

    #[test]
    fn independence_complex_of_path() {
        let k = forest_complex(&fam(FamilySpec::Path(3)), DegreeBound::Finite(0)).unwrap();
        assert_eq!(k.facets(), &[vs(&[0, 2]), vs(&[1])]);
    }

    #[test]
    fn empty_graph_gives_empty_complex() {
        let k = forest_complex(&Graph::empty(0), INF).unwrap();
        assert!(k.is_empty_complex());
    }

    #[test]
    fn direct_face_slices() {
        assert!(faces_of_dim(&fam(FamilySpec::Cycle(5)), INF, 4).is_empty());
        assert_eq!(faces_of_dim(&fam(FamilySpec::Complete(3)), DegreeBound::Finite(1), 1).len(), 3);
        assert_eq!(faces_of_dim(&fam(FamilySpec::Cycle(5)), INF, -1), vec![VertexSet::new()]);
    }

    #[test]
    fn petersen_face_counts_match_subset_scan() {
        let g = fam(FamilySpec::Petersen);
        for d in [DegreeBound::Finite(1), DegreeBound::Finite(2), INF] {
            let brute = (0u64..1 << 10)
                .filter(|&m| induced_forest_check(&g, &VertexSet::from_mask(m), d))
                .count();
            let total: usize = (-1..10).map(|q| faces_of_dim(&g, d, q).len()).sum();
            assert_eq!(total, brute, "d={d}");
            let best = (0u64..1 << 10)
                .filter(|&m| induced_forest_check(&g, &VertexSet::from_mask(m), d))
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap();
            assert_eq!(t_d(&g, d).unwrap(), best);
        }
    }

    #[test]
    fn small_td_values() {
        assert_eq!(t_d(&fam(FamilySpec::Cycle(7)), INF).unwrap(), 6);
        for n in 2..7 {
            assert_eq!(t_d(&fam(FamilySpec::Complete(n)), DegreeBound::Finite(1)).unwrap(), 2);
        }
    }

    #[test]
    fn facet_budget() {
        let g = Graph::empty(12);
        let tight = Budget {
            faces_per_dim: 10,
            facet_search: 5,
        };
        assert!(forest_complex_with(&g, INF, &tight).unwrap_err().is_capacity());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    fn arb_bound() -> impl Strategy<Value = DegreeBound> {
        prop_oneof![(0usize..4).prop_map(DegreeBound::Finite), Just(INF)]
    }

    proptest! {
        #[test]
        fn faces_agree_with_facets(g in arb_graph(8), d in arb_bound()) {
            let k = forest_complex(&g, d).unwrap();
            for q in -1..g.n() as i32 {
                prop_assert_eq!(faces_of_dim(&g, d, q), k.faces_of_dim(q));
            }
        }

        #[test]
        fn filtration_is_monotone(g in arb_graph(9), d in 0usize..4) {
            let small = DegreeBound::Finite(d);
            let big = DegreeBound::Finite(d + 1);
            for q in 0..g.n() as i32 {
                let upper = faces_of_dim(&g, big, q);
                for f in faces_of_dim(&g, small, q) {
                    prop_assert!(upper.binary_search(&f).is_ok());
                }
                let top = faces_of_dim(&g, INF, q);
                prop_assert!(upper.iter().all(|f| top.binary_search(f).is_ok()));
            }
        }

        #[test]
        fn faces_pass_forest_check(g in arb_graph(9), d in arb_bound()) {
            for q in 0..g.n() as i32 {
                for f in faces_of_dim(&g, d, q) {
                    prop_assert!(induced_forest_check(&g, &f, d));
                }
            }
        }
    }
}
