//! Structural invariants checked against brute-force oracles on random inputs.

use forestcx::complex::{forest_complex, Budget, DegreeBound, SimplicialComplex};
use forestcx::graph::{
    block_decomposition, components, delete_edge, girth, induced_forest_check, Girth, Graph,
    VertexSet,
};
use forestcx::homology::{full_homology, HomologyProfile};
use forestcx::verify::{run_property, PropertyId};
use proptest::prelude::*;

use DegreeBound::{Finite, Unbounded};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn arb_bound() -> impl Strategy<Value = DegreeBound> {
    prop_oneof![(0usize..4).prop_map(Finite), Just(Unbounded)]
}

fn arb_complex(max_ground: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_ground).prop_flat_map(|n| {
        proptest::collection::vec(0u64..1 << n, 0..6).prop_map(move |masks| {
            SimplicialComplex::new(n, masks.into_iter().map(VertexSet::from_mask)).unwrap()
        })
    })
}

fn find(parent: &mut [usize], x: usize) -> usize {
    if parent[x] != x {
        let root = find(parent, parent[x]);
        parent[x] = root;
    }
    parent[x]
}

/// Union-find cycle detection plus a degree scan, on the induced subgraph.
fn is_capped_forest(g: &Graph, s: &[usize], d: DegreeBound) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    for (i, &u) in s.iter().enumerate() {
        let deg = s.iter().filter(|&&v| g.has_edge(u, v)).count();
        if let Finite(cap) = d {
            if deg > cap {
                return false;
            }
        }
        for &v in &s[i + 1..] {
            if g.has_edge(u, v) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return false;
                }
                parent[a] = b;
            }
        }
    }
    true
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn brute_girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    (1u64..1 << n)
        .filter(|&m| {
            let s = members(m);
            s.len() >= 3
                && s.iter().all(|&u| s.iter().filter(|&&v| g.has_edge(u, v)).count() == 2)
                && components(&relabeled_induced(g, &s)).len() == 1
        })
        .map(|m| m.count_ones() as usize)
        .min()
}

fn relabeled_induced(g: &Graph, s: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for (i, &u) in s.iter().enumerate() {
        for (j, &v) in s.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(s.len(), &edges).unwrap()
}

fn independence_number(g: &Graph, s: &[usize]) -> usize {
    (0u64..1 << s.len())
        .filter(|&m| {
            let t: Vec<usize> = members(m).into_iter().map(|i| s[i]).collect();
            t.iter().enumerate().all(|(i, &u)| t[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let base = components(g).len();
    g.edges()
        .into_iter()
        .filter(|&e| components(&delete_edge(g, e).unwrap()).len() > base)
        .collect()
}

/// Reduced Betti numbers of a join from those of its factors.
fn join_betti(k: &HomologyProfile, l: &HomologyProfile, r: i32) -> u64 {
    k.dims()
        .map(|(p, a)| a.betti * l.betti(r - 1 - p))
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn induced_forest_check_matches_union_find(g in arb_graph(10), d in arb_bound(), mask in any::<u64>()) {
        let mask = mask & ((1u64 << g.n()) - 1);
        let s = VertexSet::from_mask(mask);
        prop_assert_eq!(induced_forest_check(&g, &s, d), is_capped_forest(&g, &members(mask), d));
    }

    #[test]
    fn girth_matches_induced_cycles(g in arb_graph(8)) {
        let want = match brute_girth(&g) {
            Some(k) => Girth::Finite(k),
            None => Girth::Infinite,
        };
        prop_assert_eq!(girth(&g), want);
    }

    #[test]
    fn block_sizes_sum_to_spanning_tree(g in arb_graph(9)) {
        let bd = block_decomposition(&g);
        let total: usize = bd.blocks.iter().map(|b| b.len() - 1).sum();
        prop_assert_eq!(total, g.n() - components(&g).len());
        prop_assert_eq!(bd.bridges.clone(), bridges(&g));
    }

    #[test]
    fn stabilization_from_neighbourhood_independence(g in arb_graph(8)) {
        let stable = (0..g.n())
            .map(|v| independence_number(&g, &g.neighbors(v).to_vec()))
            .max()
            .unwrap_or(0);
        let top = forest_complex(&g, Unbounded).unwrap();
        for l in stable..stable + 2 {
            prop_assert_eq!(&forest_complex(&g, Finite(l)).unwrap(), &top);
        }
        if stable > 0 {
            prop_assert_ne!(&forest_complex(&g, Finite(stable - 1)).unwrap(), &top);
        }
    }

    #[test]
    fn bridges_do_not_change_the_top_stage(g in arb_graph(9)) {
        let top = forest_complex(&g, Unbounded).unwrap();
        for e in bridges(&g) {
            prop_assert_eq!(&forest_complex(&delete_edge(&g, e).unwrap(), Unbounded).unwrap(), &top);
        }
    }

    #[test]
    fn stage_one_is_determined_by_triples(g in arb_graph(8)) {
        let k = forest_complex(&g, Finite(1)).unwrap();
        for mask in 0u64..1 << g.n() {
            let s = members(mask);
            let triples_ok = s.len() < 3 || (0..s.len()).all(|i| (i + 1..s.len()).all(|j| (j + 1..s.len()).all(|l| {
                is_capped_forest(&g, &[s[i], s[j], s[l]], Finite(1))
            })));
            if triples_ok && s.len() >= 3 {
                prop_assert!(k.contains_face(&VertexSet::from_mask(mask)), "{:?}", s);
            }
        }
    }

    #[test]
    fn double_dual_is_identity(k in arb_complex(6)) {
        let dual = k.alexander_dual();
        prop_assume!(!k.is_void() && !dual.is_void());
        prop_assert_eq!(dual.alexander_dual(), k);
    }

    #[test]
    fn join_homology_is_torsion_free_product(k in arb_complex(4), l in arb_complex(4)) {
        let (hk, hl) = (full_homology(&k).unwrap(), full_homology(&l).unwrap());
        prop_assume!(!hk.has_torsion() && !hl.has_torsion());
        let joined = full_homology(&k.join(&l)).unwrap();
        for r in -1..=(k.ground() + l.ground()) as i32 {
            prop_assert_eq!(joined.betti(r), join_betti(&hk, &hl, r), "dim {}", r);
        }
    }

    #[test]
    fn graph_properties_hold(g in arb_graph(8), d in arb_bound(), seed in 0u64..1000) {
        for prop in [
            PropertyId::AlexanderDuality,
            PropertyId::GirthVanishing,
            PropertyId::ForestCount,
            PropertyId::Degree2Suspension,
            PropertyId::DisjointJoin,
            PropertyId::PairConnectivity,
            PropertyId::SkeletonAgree,
        ] {
            let r = run_property(prop, &g, d, seed, &Budget::default()).unwrap();
            prop_assert!(r.verdict.is_pass(), "{}: {}", r.id, r.verdict);
        }
    }
}

#[test]
fn isomorphic_catalog_graphs_agree() {
    use forestcx::formats::parse_family;
    use forestcx::homology::full_forest_homology;
    let product = parse_family("knxkm:2,3", None).unwrap();
    let cycle = parse_family("cycle:6", None).unwrap();
    for d in [Finite(0), Finite(1), Finite(2), Unbounded] {
        assert_eq!(
            full_forest_homology(&product, d).unwrap(),
            full_forest_homology(&cycle, d).unwrap()
        );
    }
}
