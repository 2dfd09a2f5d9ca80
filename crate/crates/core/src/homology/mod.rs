//! Exact reduced (co)homology over `Z`.
//!
//! Homology in dimensions `lo..=hi` only needs the faces in dimensions
//! `lo-1..=hi+1`, so large complexes can be evaluated in a window.

mod matrix;
mod profile;
mod snf;

pub use matrix::BoundaryMatrix;
pub use profile::{profile_as_wedge, Group, HomologyProfile, WedgeDescriptor, WedgeRejection};
pub use snf::{rank_mod_p, smith_normal_form, smith_normal_form_dense, SnfResult, RANK_PRIME};

use std::path::Path;

use rayon::prelude::*;

use crate::complex::{Budget, DegreeBound, FaceSlices, FaceSource, ForestFaces, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An inclusive range of homological dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimRange {
    pub lo: i32,
    pub hi: i32,
}

impl DimRange {
    pub fn new(lo: i32, hi: i32) -> Result<Self> {
        if lo < -1 || hi < lo {
            return Err(Error::input(format!("bad dimension range {lo}..{hi}")));
        }
        Ok(Self { lo, hi })
    }

    /// Every dimension a complex on `n` vertices can have.
    pub fn full(n: usize) -> Self {
        Self {
            lo: -1,
            hi: n as i32 - 1,
        }
    }
}

impl std::str::FromStr for DimRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("dimension range must look like lo..hi, got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<i32>()
                .map_err(|_| Error::Parse(format!("bad dimension {t:?}")))
        };
        Self::new(parse(a)?, parse(b)?)
    }
}

/// Chain groups of a complex (or of a pair) in a window, plus the boundary
/// maps between consecutive dimensions.
struct ChainWindow {
    lo: i32,
    faces: FaceSlices,
}

impl ChainWindow {
    fn load(source: &dyn FaceSource, dims: DimRange, budget: &Budget) -> Result<Self> {
        Ok(Self {
            lo: dims.lo,
            faces: source.faces_in_dims(dims.lo - 1, dims.hi + 1, budget)?,
        })
    }

    /// Chains of `big` not in `small`.
    fn load_relative(
        small: &dyn FaceSource,
        big: &dyn FaceSource,
        dims: DimRange,
        budget: &Budget,
    ) -> Result<Self> {
        let (lo, hi) = (dims.lo - 1, dims.hi + 1);
        let b = big.faces_in_dims(lo, hi, budget)?;
        let s = small.faces_in_dims(lo, hi, budget)?;
        let mut faces = FaceSlices::new(lo, hi);
        for q in lo..=hi {
            let keep = s.dim(q);
            let slot = faces.slot((q + 1) as usize).expect("window slot");
            slot.extend(b.dim(q).iter().filter(|f| keep.binary_search(f).is_err()).cloned());
        }
        Ok(Self { lo: dims.lo, faces })
    }

    fn boundary(&self, q: i32) -> BoundaryMatrix {
        BoundaryMatrix::from_faces(self.faces.dim(q - 1), self.faces.dim(q))
    }

    fn rank(&self, q: i32) -> usize {
        self.faces.dim(q).len()
    }
}

fn to_u64(f: &num_bigint::BigUint) -> Result<u64> {
    u64::try_from(f).map_err(|_| Error::Capacity {
        what: "torsion coefficient bits",
        count: f.bits() as usize,
        limit: 64,
    })
}

fn factors(r: &SnfResult) -> Result<Vec<u64>> {
    r.invariant_factors.iter().map(to_u64).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Variance {
    Homology,
    Cohomology,
}

fn evaluate(window: &ChainWindow, dims: DimRange, variance: Variance) -> Result<HomologyProfile> {
    // ∂_q for q in lo..=hi+1; cohomology reduces the transposes.
    let snfs: Vec<SnfResult> = (window.lo..=dims.hi + 1)
        .into_par_iter()
        .map(|q| {
            let d = window.boundary(q);
            match variance {
                Variance::Homology => smith_normal_form(&d),
                Variance::Cohomology => smith_normal_form(&d.transpose()),
            }
        })
        .collect();
    let at = |q: i32| &snfs[(q - window.lo) as usize];
    let mut profile = HomologyProfile::new();
    for q in dims.lo..=dims.hi {
        let chains = window.rank(q);
        if chains == 0 {
            continue;
        }
        let betti = chains - at(q).rank - at(q + 1).rank;
        let torsion = match variance {
            Variance::Homology => factors(at(q + 1))?,
            Variance::Cohomology => factors(at(q))?,
        };
        profile.set(q, betti as u64, torsion);
    }
    Ok(profile)
}

/// Reduced homology of any face source in a dimension window.
pub fn reduced_homology_of(
    source: &dyn FaceSource,
    dims: DimRange,
    budget: &Budget,
) -> Result<HomologyProfile> {
    evaluate(&ChainWindow::load(source, dims, budget)?, dims, Variance::Homology)
}

/// `H̃_q(F_d(G))` for `q` in `dims`.
pub fn reduced_homology(
    g: &Graph,
    d: DegreeBound,
    dims: DimRange,
    budget: &Budget,
) -> Result<HomologyProfile> {
    reduced_homology_of(&ForestFaces::new(g, d), dims, budget)
}

pub fn reduced_homology_of_complex(
    k: &SimplicialComplex,
    dims: DimRange,
    budget: &Budget,
) -> Result<HomologyProfile> {
    reduced_homology_of(k, dims, budget)
}

/// Reduced cohomology, with torsion read off the transposed coboundaries.
pub fn reduced_cohomology_of_complex(
    k: &SimplicialComplex,
    dims: DimRange,
    budget: &Budget,
) -> Result<HomologyProfile> {
    evaluate(&ChainWindow::load(k, dims, budget)?, dims, Variance::Cohomology)
}

/// Homology of any pair `small ⊆ big` of face sources.
pub fn relative_homology_of(
    small: &dyn FaceSource,
    big: &dyn FaceSource,
    dims: DimRange,
    budget: &Budget,
) -> Result<HomologyProfile> {
    evaluate(
        &ChainWindow::load_relative(small, big, dims, budget)?,
        dims,
        Variance::Homology,
    )
}

/// `H_q(F_{d_big}(G), F_{d_small}(G))` for `q` in `dims`.
pub fn relative_homology(
    g: &Graph,
    d_small: DegreeBound,
    d_big: DegreeBound,
    dims: DimRange,
    budget: &Budget,
) -> Result<HomologyProfile> {
    if d_small > d_big {
        return Err(Error::input("relative homology needs d_small <= d_big"));
    }
    relative_homology_of(
        &ForestFaces::new(g, d_small),
        &ForestFaces::new(g, d_big),
        dims,
        budget,
    )
}

/// The boundary matrix `∂_q` of `F_d(G)`.
pub fn boundary_matrix(g: &Graph, d: DegreeBound, q: i32) -> BoundaryMatrix {
    let source = ForestFaces::new(g, d);
    let faces = source
        .faces_in_dims(q - 1, q, &Budget::unlimited())
        .expect("unlimited budget");
    BoundaryMatrix::from_faces(faces.dim(q - 1), faces.dim(q))
}

/// Writes `∂_q` for every `q` in `dims` as `d<q>.txt` triplet files.
pub fn export_boundaries(
    source: &dyn FaceSource,
    dims: DimRange,
    budget: &Budget,
    dir: &Path,
) -> Result<Vec<std::path::PathBuf>> {
    let window = ChainWindow::load(source, dims, budget)?;
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for q in dims.lo.max(0)..=dims.hi + 1 {
        let path = dir.join(format!("d{q}.txt"));
        let file = std::io::BufWriter::new(std::fs::File::create(&path)?);
        window.boundary(q).write_triplets(file)?;
        written.push(path);
    }
    Ok(written)
}

/// The full profile of an explicit complex.
pub fn full_homology(k: &SimplicialComplex) -> Result<HomologyProfile> {
    reduced_homology_of_complex(k, DimRange::full(k.ground().max(1)), &Budget::default())
}

/// The full profile of `F_d(G)`.
pub fn full_forest_homology(g: &Graph, d: DegreeBound) -> Result<HomologyProfile> {
    reduced_homology(g, d, DimRange::full(g.n().max(1)), &Budget::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::forest_complex;
    use crate::graph::{
        categorical_product, generate, rp2_triangulation, FamilySpec,
    };
    use proptest::prelude::*;

    const INF: DegreeBound = DegreeBound::Unbounded;

    fn fam(s: FamilySpec) -> Graph {
        generate(&s).unwrap()
    }

    fn range(lo: i32, hi: i32) -> DimRange {
        DimRange::new(lo, hi).unwrap()
    }

    fn rp2() -> SimplicialComplex {
        SimplicialComplex::new(
            6,
            rp2_triangulation().iter().map(|t| t.iter().copied().collect()),
        )
        .unwrap()
    }

    fn bettis(p: &HomologyProfile, lo: i32, hi: i32) -> Vec<u64> {
        (lo..=hi).map(|q| p.betti(q)).collect()
    }

    #[test]
    fn small_boundary_matrices() {
        let k3 = fam(FamilySpec::Complete(3));
        let d = boundary_matrix(&k3, DegreeBound::Finite(1), 1);
        assert_eq!((d.rows(), d.cols()), (3, 3));
        assert_eq!(smith_normal_form(&d).rank, 2);
        let c4 = fam(FamilySpec::Cycle(4));
        let d2 = boundary_matrix(&c4, INF, 2);
        assert_eq!((d2.rows(), d2.cols()), (6, 4));
        assert_eq!(smith_normal_form(&d2).rank, 3);
        for q in 1..4 {
            assert!(boundary_matrix(&c4, INF, q - 1).composes_to_zero(&boundary_matrix(&c4, INF, q)));
        }
    }

    #[test]
    fn cycles_and_paths_at_one() {
        let p = reduced_homology(&fam(FamilySpec::Cycle(8)), DegreeBound::Finite(1), range(0, 4), &Budget::default()).unwrap();
        assert_eq!(bettis(&p, 0, 4), vec![0, 0, 0, 3, 0]);
        let p = reduced_homology(&fam(FamilySpec::Path(7)), DegreeBound::Finite(1), range(0, 4), &Budget::default()).unwrap();
        assert_eq!(bettis(&p, 0, 4), vec![0, 0, 0, 1, 0]);
    }

    #[test]
    fn k2_times_k4() {
        let g = categorical_product(&fam(FamilySpec::Complete(2)), &fam(FamilySpec::Complete(4)));
        let p = reduced_homology(&g, DegreeBound::Finite(2), range(0, 5), &Budget::default()).unwrap();
        assert_eq!(p, WedgeDescriptor::new().with(4, 4).with(3, 1).to_profile());
    }

    #[test]
    fn empty_and_void() {
        let e = full_homology(&SimplicialComplex::empty(3)).unwrap();
        assert_eq!(e, WedgeDescriptor::sphere(-1).to_profile());
        assert!(full_homology(&SimplicialComplex::void(3)).unwrap().is_trivial());
        assert_eq!(full_forest_homology(&Graph::empty(0), INF).unwrap(), e);
    }

    #[test]
    fn spheres_and_suspensions() {
        for n in 2..7 {
            let s = SimplicialComplex::simplex_boundary(n);
            let p = full_homology(&s).unwrap();
            assert_eq!(p, WedgeDescriptor::sphere(n as i32 - 2).to_profile());
            assert_eq!(full_homology(&s.suspension()).unwrap(), p.shifted(1));
            assert!(full_homology(&s.cone()).unwrap().is_trivial());
        }
        let tet = full_homology(&SimplicialComplex::simplex_boundary(4)).unwrap();
        assert_eq!(tet.betti(2), 1);
        let co = reduced_cohomology_of_complex(&SimplicialComplex::simplex_boundary(4), range(-1, 3), &Budget::default()).unwrap();
        assert_eq!(co.betti(2), 1);
        assert_eq!(full_homology(&rp2().suspension()).unwrap(), full_homology(&rp2()).unwrap().shifted(1));
    }

    #[test]
    fn projective_plane() {
        let h = full_homology(&rp2()).unwrap();
        assert_eq!((h.betti(1), h.torsion(1), h.betti(2)), (0, &[2u64][..], 0));
        let co = reduced_cohomology_of_complex(&rp2(), range(-1, 2), &Budget::default()).unwrap();
        assert_eq!((co.betti(1), co.betti(2), co.torsion(2)), (0, 0, &[2u64][..]));
        assert!(co.torsion(1).is_empty());
        assert_eq!(co.euler(), h.euler());
        assert_eq!(h.euler(), rp2().euler_characteristic());
    }

    #[test]
    fn dual_of_ladder_is_acyclic() {
        let p2 = fam(FamilySpec::Path(2));
        let p4 = fam(FamilySpec::Path(4));
        let g = crate::graph::cartesian_product(&p2, &p4);
        let k = forest_complex(&g, INF).unwrap();
        assert!(full_homology(&k.alexander_dual()).unwrap().is_trivial());
        assert!(full_homology(&k).unwrap().is_trivial());
    }

    #[test]
    fn relative_examples() {
        let b = Budget::default();
        let c5 = fam(FamilySpec::Cycle(5));
        let r = relative_homology(&c5, DegreeBound::Finite(1), DegreeBound::Finite(2), range(0, 1), &b).unwrap();
        assert!(r.is_trivial());
        let pet = fam(FamilySpec::Petersen);
        for d in [DegreeBound::Finite(0), DegreeBound::Finite(2), INF] {
            assert!(relative_homology(&pet, d, d, range(-1, 9), &b).unwrap().is_trivial());
        }
        let claw = fam(FamilySpec::CompleteMultipartite(vec![1, 3]));
        let r = relative_homology(&claw, DegreeBound::Finite(1), DegreeBound::Finite(2), range(-1, 3), &b).unwrap();
        assert!(r.restricted(-1, 1).is_trivial());
        // Euler characteristics are additive along the pair.
        let small = full_forest_homology(&claw, DegreeBound::Finite(1)).unwrap();
        let big = full_forest_homology(&claw, DegreeBound::Finite(2)).unwrap();
        assert_eq!(big.euler() - small.euler(), r.euler());
        assert!(relative_homology(&claw, INF, DegreeBound::Finite(1), range(0, 1), &b).is_err());
    }

    #[test]
    fn window_matches_full_range() {
        let g = fam(FamilySpec::Petersen);
        let full = full_forest_homology(&g, INF).unwrap();
        let win = reduced_homology(&g, INF, range(2, 4), &Budget::default()).unwrap();
        assert_eq!(win, full.restricted(2, 4));
    }

    #[test]
    fn budget_gives_capacity_error() {
        let g = Graph::empty(16);
        let err = reduced_homology(&g, INF, range(3, 5), &Budget::with_faces(1000)).unwrap_err();
        assert!(err.is_capacity());
    }

    #[test]
    fn independence_complex_of_rp2_complement() {
        let h = fam(FamilySpec::Rp2BarycentricComplement);
        let p = reduced_homology(&h, DegreeBound::Finite(0), range(-1, 3), &Budget::default()).unwrap();
        assert_eq!((p.betti(1), p.torsion(1), p.betti(2)), (0, &[2u64][..], 0));
        assert!(p.restricted(-1, 0).is_trivial());
        let flag = forest_complex(&h, DegreeBound::Finite(0)).unwrap();
        assert_eq!(flag.f_vector().0, vec![1, 31, 90, 60]);
    }

    #[test]
    fn dims_parse() {
        assert_eq!("0..4".parse::<DimRange>().unwrap(), range(0, 4));
        assert_eq!("-1..2".parse::<DimRange>().unwrap(), range(-1, 2));
        assert!("3..1".parse::<DimRange>().is_err());
        assert!("-2..1".parse::<DimRange>().is_err());
        assert!("5".parse::<DimRange>().is_err());
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
        prop_oneof![(0usize..3).prop_map(DegreeBound::Finite), Just(INF)]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn euler_matches_f_vector(g in arb_graph(8), d in arb_bound()) {
            let k = forest_complex(&g, d).unwrap();
            let p = full_homology(&k).unwrap();
            prop_assert_eq!(p.euler(), k.euler_characteristic());
            prop_assert_eq!(&p, &full_forest_homology(&g, d).unwrap());
        }

        #[test]
        fn chain_condition(g in arb_graph(8), d in arb_bound()) {
            for q in 1..g.n() as i32 {
                prop_assert!(boundary_matrix(&g, d, q - 1).composes_to_zero(&boundary_matrix(&g, d, q)));
            }
        }

        #[test]
        fn cohomology_shifts_torsion(g in arb_graph(7), d in arb_bound()) {
            let k = forest_complex(&g, d).unwrap().suspension();
            let dims = DimRange::full(k.ground());
            let h = reduced_homology_of_complex(&k, dims, &Budget::default()).unwrap();
            let c = reduced_cohomology_of_complex(&k, dims, &Budget::default()).unwrap();
            for q in dims.lo..=dims.hi {
                prop_assert_eq!(h.betti(q), c.betti(q));
                prop_assert_eq!(h.torsion(q - 1), c.torsion(q));
            }
        }

        #[test]
        fn exact_rank_bounds_mod_p(g in arb_graph(8), d in arb_bound(), q in 0i32..5) {
            let m = boundary_matrix(&g, d, q);
            let exact = smith_normal_form(&m).rank;
            prop_assert_eq!(rank_mod_p(&m, RANK_PRIME), exact);
            prop_assert!(rank_mod_p(&m, 2) <= exact);
        }
    }
}
