use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::report::{CaseReport, Verdict};
use crate::complex::{faces_of_dim, forest_complex_with, Budget, DegreeBound, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{
    block_decomposition, components, delete_edge, disjoint_union, girth, induced_forest_check,
    induced_subgraph, join_graphs, random_graph, Girth, Graph, VertexSet,
};
use crate::homology::{
    reduced_cohomology_of_complex, reduced_homology, reduced_homology_of_complex,
    relative_homology, DimRange, HomologyProfile,
};

/// Structural statements checked on individual graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyId {
    SkeletonAgree,
    PairConnectivity,
    F1Flagness,
    SmallOrderClass,
    BridgeInvariance,
    NoCycleVertex,
    MinDegreeOne,
    Degree2Suspension,
    ForestCount,
    GirthVanishing,
    DisjointJoin,
    ConeLemma,
    JoinLemmaHomology,
    AlexanderDuality,
    ConnDisjoint,
}

impl PropertyId {
    pub const ALL: [PropertyId; 15] = [
        PropertyId::SkeletonAgree,
        PropertyId::PairConnectivity,
        PropertyId::F1Flagness,
        PropertyId::SmallOrderClass,
        PropertyId::BridgeInvariance,
        PropertyId::NoCycleVertex,
        PropertyId::MinDegreeOne,
        PropertyId::Degree2Suspension,
        PropertyId::ForestCount,
        PropertyId::GirthVanishing,
        PropertyId::DisjointJoin,
        PropertyId::ConeLemma,
        PropertyId::JoinLemmaHomology,
        PropertyId::AlexanderDuality,
        PropertyId::ConnDisjoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::SkeletonAgree => "SKELETON_AGREE",
            PropertyId::PairConnectivity => "PAIR_CONNECTIVITY",
            PropertyId::F1Flagness => "F1_FLAGNESS",
            PropertyId::SmallOrderClass => "SMALL_ORDER_CLASS",
            PropertyId::BridgeInvariance => "BRIDGE_INVARIANCE",
            PropertyId::NoCycleVertex => "NO_CYCLE_VERTEX",
            PropertyId::MinDegreeOne => "MIN_DEGREE_ONE",
            PropertyId::Degree2Suspension => "DEGREE2_SUSPENSION",
            PropertyId::ForestCount => "FOREST_COUNT",
            PropertyId::GirthVanishing => "GIRTH_VANISHING",
            PropertyId::DisjointJoin => "DISJOINT_JOIN",
            PropertyId::ConeLemma => "CONE_LEMMA",
            PropertyId::JoinLemmaHomology => "JOIN_LEMMA_HOMOLOGY",
            PropertyId::AlexanderDuality => "ALEXANDER_DUALITY",
            PropertyId::ConnDisjoint => "CONN_DISJOINT",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        PropertyId::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown property {s:?}")))
    }
}

/// Largest order scanned by `F1_FLAGNESS`, which visits every subset.
pub const FLAGNESS_MAX_ORDER: usize = 14;

/// A companion graph for the two-graph properties, fixed by `seed`.
pub fn companion_graph(seed: u64) -> Graph {
    random_graph(seed ^ 0x5eed, 3 + (seed % 3) as usize, 0.5)
}

/// Runs one property on `g` at stage `d`.
///
/// `seed` fixes the companion graph used by the properties that need a
/// second graph. Vacuous instances pass with a note; exhausted budgets
/// give a skipped report.
pub fn run_property(
    prop: PropertyId,
    g: &Graph,
    d: DegreeBound,
    seed: u64,
    budget: &Budget,
) -> Result<CaseReport> {
    let start = Instant::now();
    let id = format!("{prop}:n{}m{}:d{d}", g.n(), g.edge_count());
    let checker = Checker { g, d, seed, budget };
    let outcome = match prop {
        PropertyId::SkeletonAgree => checker.skeleton_agree(),
        PropertyId::PairConnectivity => checker.pair_connectivity(),
        PropertyId::F1Flagness => checker.f1_flagness(),
        PropertyId::SmallOrderClass => checker.small_order_class(),
        PropertyId::BridgeInvariance => checker.bridge_invariance(),
        PropertyId::NoCycleVertex => checker.no_cycle_vertex(),
        PropertyId::MinDegreeOne => checker.min_degree_one(),
        PropertyId::Degree2Suspension => checker.degree2_suspension(),
        PropertyId::ForestCount => checker.forest_count(),
        PropertyId::GirthVanishing => checker.girth_vanishing(),
        PropertyId::DisjointJoin => checker.disjoint_join(),
        PropertyId::ConeLemma => checker.cone_lemma(),
        PropertyId::JoinLemmaHomology => checker.join_lemma(),
        PropertyId::AlexanderDuality => checker.alexander_duality(),
        PropertyId::ConnDisjoint => checker.conn_disjoint(),
    };
    let mut report = match outcome {
        Ok(Outcome { verdict, note }) => {
            let mut r = CaseReport::new(id, verdict);
            r.notes.extend(note);
            r
        }
        Err(e) if e.is_capacity() => CaseReport::new(id, Verdict::Skipped { reason: e.to_string() }),
        Err(e) => return Err(e),
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

struct Outcome {
    verdict: Verdict,
    note: Option<String>,
}

impl Outcome {
    fn pass() -> Self {
        Self {
            verdict: Verdict::Pass,
            note: None,
        }
    }

    fn vacuous(why: impl Into<String>) -> Self {
        Self {
            verdict: Verdict::Pass,
            note: Some(format!("vacuous: {}", why.into())),
        }
    }

    fn fail(dim: i32, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        Self {
            verdict: Verdict::fail(dim, expected, got),
            note: None,
        }
    }

    fn noted(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// First dimension where two profiles disagree, as a failing outcome.
fn compare(want: &HomologyProfile, got: &HomologyProfile) -> Outcome {
    match want.first_difference(got) {
        None => Outcome::pass(),
        Some((q, a, b)) => Outcome::fail(q, a, b),
    }
}

fn set_str(s: &VertexSet) -> String {
    format!("{:?}", s.to_vec())
}

/// Independence number of `G[cand]`.
fn independence_number(g: &Graph, cand: &VertexSet) -> usize {
    let Some(v) = cand.first() else { return 0 };
    let without = independence_number(g, &cand.without(v));
    let with = 1 + independence_number(g, &cand.without(v).difference(g.neighbors(v)));
    without.max(with)
}

/// Homological connectivity: one less than the lowest nonzero dimension,
/// `None` for an acyclic profile.
fn homological_connectivity(p: &HomologyProfile) -> Option<i32> {
    p.support().first().map(|q| q - 1)
}

struct Checker<'a> {
    g: &'a Graph,
    d: DegreeBound,
    seed: u64,
    budget: &'a Budget,
}

impl Checker<'_> {
    fn full(&self, g: &Graph, d: DegreeBound) -> Result<HomologyProfile> {
        reduced_homology(g, d, DimRange::full(g.n().max(1)), self.budget)
    }

    fn full_complex(&self, k: &SimplicialComplex) -> Result<HomologyProfile> {
        reduced_homology_of_complex(k, DimRange::full(k.ground().max(1)), self.budget)
    }

    fn complex(&self, g: &Graph, d: DegreeBound) -> Result<SimplicialComplex> {
        forest_complex_with(g, d, self.budget)
    }

    fn skeleton_agree(&self) -> Result<Outcome> {
        let g = self.g;
        match self.d {
            DegreeBound::Finite(k) => {
                let top = (k as i32).min(g.n() as i32 - 1);
                for i in -1..=top {
                    let a = faces_of_dim(g, self.d, i);
                    let b = faces_of_dim(g, self.d.succ(), i);
                    if a != b {
                        return Ok(Outcome::fail(
                            i,
                            format!("{} faces", b.len()),
                            format!("{} faces", a.len()),
                        ));
                    }
                }
                Ok(Outcome::pass())
            }
            DegreeBound::Unbounded => {
                // every induced forest has degree at most this
                let stable = (0..g.n())
                    .map(|v| independence_number(g, g.neighbors(v)))
                    .max()
                    .unwrap_or(0);
                let top = self.complex(g, DegreeBound::Unbounded)?;
                for l in [stable, stable + 1] {
                    if self.complex(g, DegreeBound::Finite(l))? != top {
                        return Ok(Outcome::fail(-1, format!("F_{l} = F_inf"), "different facets"));
                    }
                }
                if stable > 0 && self.complex(g, DegreeBound::Finite(stable - 1))? == top {
                    return Ok(Outcome::fail(
                        -1,
                        format!("F_{} != F_inf", stable - 1),
                        "equal facets",
                    ));
                }
                Ok(Outcome::pass().noted(format!("stabilizes at d={stable}")))
            }
        }
    }

    fn pair_connectivity(&self) -> Result<Outcome> {
        let DegreeBound::Finite(k) = self.d else {
            return Ok(Outcome::vacuous("unbounded stage has no successor"));
        };
        let dims = DimRange::new(-1, k as i32)?;
        let rel = relative_homology(self.g, self.d, self.d.succ(), dims, self.budget)?;
        Ok(compare(&HomologyProfile::new(), &rel))
    }

    fn f1_flagness(&self) -> Result<Outcome> {
        let g = self.g;
        let n = g.n();
        if n > FLAGNESS_MAX_ORDER {
            return Err(Error::Capacity {
                what: "vertices in the flagness scan",
                count: n,
                limit: FLAGNESS_MAX_ORDER,
            });
        }
        let f1 = DegreeBound::Finite(1);
        let triple_ok: std::collections::HashSet<u64> = faces_of_dim(g, f1, 2)
            .iter()
            .filter_map(VertexSet::as_mask)
            .collect();
        for mask in 0u64..(1u64 << n) {
            if mask.count_ones() < 4 {
                continue;
            }
            let s = VertexSet::from_mask(mask);
            if induced_forest_check(g, &s, f1) {
                continue;
            }
            let v = s.to_vec();
            let mut all = true;
            'outer: for a in 0..v.len() {
                for b in a + 1..v.len() {
                    for c in b + 1..v.len() {
                        let t = (1u64 << v[a]) | (1u64 << v[b]) | (1u64 << v[c]);
                        if !triple_ok.contains(&t) {
                            all = false;
                            break 'outer;
                        }
                    }
                }
            }
            if all {
                return Ok(Outcome::fail(
                    s.len() as i32 - 1,
                    "a face of F_1",
                    format!("non-face {} with every 3-subset a face", set_str(&s)),
                ));
            }
        }
        Ok(Outcome::pass())
    }

    fn small_order_class(&self) -> Result<Outcome> {
        let g = self.g;
        let n = g.n();
        if n < 3 {
            return Ok(Outcome::vacuous("order must be q + 2 with q >= 1"));
        }
        let q = n as i32 - 2;
        let window = DimRange::new(q, q)?;
        let star = is_star(g);
        let cycle = is_cycle(g);
        let at_q = reduced_homology(g, DegreeBound::Finite(q as usize), window, self.budget)?;
        let at_inf = reduced_homology(g, DegreeBound::Unbounded, window, self.budget)?;
        let nz_q = !at_q.group(q).is_zero();
        let nz_inf = !at_inf.group(q).is_zero();
        if nz_q != (star || cycle) {
            return Ok(Outcome::fail(
                q,
                format!("H_q(F_q) nonzero iff star or cycle (star={star}, cycle={cycle})"),
                at_q.group(q),
            ));
        }
        if nz_inf != cycle {
            return Ok(Outcome::fail(
                q,
                format!("H_q(F_inf) nonzero iff cycle (cycle={cycle})"),
                at_inf.group(q),
            ));
        }
        Ok(Outcome::pass())
    }

    fn bridge_invariance(&self) -> Result<Outcome> {
        let bridges = block_decomposition(self.g).bridges;
        if bridges.is_empty() {
            return Ok(Outcome::vacuous("no bridge"));
        }
        let base = self.complex(self.g, DegreeBound::Unbounded)?;
        for &e in &bridges {
            let cut = self.complex(&delete_edge(self.g, e)?, DegreeBound::Unbounded)?;
            if cut != base {
                return Ok(Outcome::fail(
                    -1,
                    format!("same F_inf after deleting bridge {e:?}"),
                    "different facets",
                ));
            }
        }
        Ok(Outcome::pass().noted(format!("{} bridges", bridges.len())))
    }

    fn no_cycle_vertex(&self) -> Result<Outcome> {
        let bd = block_decomposition(self.g);
        let on_cycle = bd
            .blocks
            .iter()
            .filter(|b| b.len() >= 3)
            .fold(VertexSet::new(), |acc, b| acc.union(b));
        let Some(v) = self.g.vertices().difference(&on_cycle).first() else {
            return Ok(Outcome::vacuous("every vertex lies on a cycle"));
        };
        let p = self.full(self.g, DegreeBound::Unbounded)?;
        Ok(compare(&HomologyProfile::new(), &p).noted(format!("vertex {v} lies on no cycle")))
    }

    fn min_degree_one(&self) -> Result<Outcome> {
        if self.g.n() == 0 || self.g.min_degree() > 1 {
            return Ok(Outcome::vacuous("minimum degree above 1"));
        }
        let p = self.full(self.g, DegreeBound::Unbounded)?;
        Ok(compare(&HomologyProfile::new(), &p))
    }

    fn degree2_suspension(&self) -> Result<Outcome> {
        let g = self.g;
        let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 2) else {
            return Ok(Outcome::vacuous("no vertex of degree 2"));
        };
        let k = self.complex(g, DegreeBound::Unbounded)?;
        let p = self.full_complex(&k)?;
        for w in g.neighbors(v).iter() {
            let link = k.link(&VertexSet::singleton(w));
            let shifted = self.full_complex(&link)?.shifted(1);
            let out = compare(&shifted, &p);
            if out.verdict.is_fail() {
                return Ok(out.noted(format!("link of neighbor {w} of vertex {v}")));
            }
        }
        Ok(Outcome::pass().noted(format!("degree-2 vertex {v}")))
    }

    fn forest_count(&self) -> Result<Outcome> {
        let p = self.full(self.g, self.d)?;
        for q in p.support() {
            let count = faces_of_dim(self.g, self.d, q).len();
            if count < q as usize + 2 {
                return Ok(Outcome::fail(
                    q,
                    format!("at least {} induced forests of order {}", q + 2, q + 1),
                    count,
                ));
            }
        }
        Ok(Outcome::pass())
    }

    fn girth_vanishing(&self) -> Result<Outcome> {
        let Girth::Finite(gg) = girth(self.g) else {
            return Ok(Outcome::vacuous("forest"));
        };
        let hi = gg as i32 - 3;
        if hi < -1 {
            return Ok(Outcome::vacuous("girth bound is empty"));
        }
        let p = reduced_homology(self.g, DegreeBound::Unbounded, DimRange::new(-1, hi)?, self.budget)?;
        Ok(compare(&HomologyProfile::new(), &p).noted(format!("girth {gg}")))
    }

    fn disjoint_join(&self) -> Result<Outcome> {
        let h = companion_graph(self.seed);
        let whole = self.complex(&disjoint_union(self.g, &h), self.d)?;
        let joined = self.complex(self.g, self.d)?.join(&self.complex(&h, self.d)?);
        if whole == joined {
            Ok(Outcome::pass())
        } else {
            Ok(Outcome::fail(-1, "F_d(G + H) = F_d(G) * F_d(H)", "different facets"))
        }
    }

    fn cone_lemma(&self) -> Result<Outcome> {
        let g = self.g;
        let n = g.n();
        let coned = self.complex(&join_graphs(&Graph::empty(1), g), self.d)?;
        let independence = self.complex(g, DegreeBound::Finite(0))?;
        let sub = match self.d {
            DegreeBound::Finite(k) => independence.skeleton(k as i32 - 1)?,
            DegreeBound::Unbounded => independence,
        };
        let built = self.complex(g, self.d)?.add_cone_over_subcomplex(&sub)?;
        // built has its apex at n; the join puts it at 0
        let map: Vec<usize> = (1..=n).chain([0]).collect();
        let built = built.relabel(n + 1, &map)?;
        if built != coned {
            return Ok(Outcome::fail(-1, "F_d(K_1 * G) = F_d(G) + cone", "different facets"));
        }
        Ok(compare(&self.full_complex(&built)?, &self.full_complex(&coned)?))
    }

    fn join_lemma(&self) -> Result<Outcome> {
        let g = self.g;
        let h = companion_graph(self.seed);
        let (n1, n2) = (g.n() as u64, h.n() as u64);
        if n1 == 0 {
            return Ok(Outcome::vacuous("empty graph"));
        }
        let whole = self.full(&join_graphs(g, &h), self.d)?;
        let mut want = HomologyProfile::new();
        match self.d {
            DegreeBound::Finite(0) => return Ok(Outcome::vacuous("the lemma starts at d = 1")),
            DegreeBound::Finite(1) => {
                want = want
                    .direct_sum(&self.full(g, self.d)?)
                    .direct_sum(&self.full(&h, self.d)?);
                want.add_betti(1, n1 * n2 - 1);
            }
            _ => {
                let f0g = self.complex(g, DegreeBound::Finite(0))?;
                let f0h = self.complex(&h, DegreeBound::Finite(0))?;
                for f0 in [&f0g, &f0h] {
                    let p = self.full_complex(f0)?;
                    if !p.group(-1).is_zero() || !p.group(0).is_zero() {
                        return Ok(Outcome::vacuous("an independence complex is disconnected"));
                    }
                }
                let sk = |k: &SimplicialComplex| match self.d {
                    DegreeBound::Finite(d) => k.skeleton(d as i32 - 1),
                    DegreeBound::Unbounded => Ok(k.clone()),
                };
                let (skg, skh) = (sk(&f0g)?, sk(&f0h)?);
                let sus_g = self.full_complex(&skg)?.shifted(1);
                let sus_h = self.full_complex(&skh)?.shifted(1);
                for _ in 1..n2 {
                    want = want.direct_sum(&sus_g);
                }
                for _ in 1..n1 {
                    want = want.direct_sum(&sus_h);
                }
                want.add_betti(2, (n1 - 1) * (n2 - 1));
                let a = self.complex(g, self.d)?.add_cone_over_subcomplex(&skg)?;
                let b = self.complex(&h, self.d)?.add_cone_over_subcomplex(&skh)?;
                want = want
                    .direct_sum(&self.full_complex(&a)?)
                    .direct_sum(&self.full_complex(&b)?);
            }
        }
        Ok(compare(&want, &whole).noted(format!("companion graph on {n2} vertices")))
    }

    fn alexander_duality(&self) -> Result<Outcome> {
        let n = self.g.n() as i32;
        if n == 0 {
            return Ok(Outcome::vacuous("empty ground set"));
        }
        let x = self.complex(self.g, self.d)?;
        let hom = self.full_complex(&x)?;
        let dual = x.alexander_dual();
        let coh = reduced_cohomology_of_complex(&dual, DimRange::full(n as usize), self.budget)?;
        for i in -1..n {
            let j = n - i - 3;
            let dual_group = if j >= -1 { coh.group(j) } else { Default::default() };
            if hom.group(i) != dual_group {
                return Ok(Outcome::fail(
                    i,
                    format!("H^{j} of the dual = {dual_group}"),
                    hom.group(i),
                ));
            }
        }
        Ok(Outcome::pass())
    }

    fn conn_disjoint(&self) -> Result<Outcome> {
        let comps = components(self.g);
        let parts: Vec<Graph> = if comps.len() >= 2 {
            comps
                .iter()
                .map(|c| induced_subgraph(self.g, c))
                .collect::<Result<_>>()?
        } else {
            vec![self.g.clone(), companion_graph(self.seed)]
        };
        let whole_graph = parts[1..]
            .iter()
            .fold(parts[0].clone(), |acc, p| disjoint_union(&acc, p));
        let whole = homological_connectivity(&self.full(&whole_graph, self.d)?);
        let mut bound = Some(2 * parts.len() as i32 - 2);
        for p in &parts {
            bound = match (bound, homological_connectivity(&self.full(p, self.d)?)) {
                (Some(b), Some(c)) => Some(b + c),
                _ => None,
            };
        }
        let ok = match (whole, bound) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(w), Some(b)) => w >= b,
        };
        let show = |c: Option<i32>| c.map_or("inf".to_string(), |c| c.to_string());
        if ok {
            Ok(Outcome::pass().noted(format!(
                "{} parts, conn {} >= {}",
                parts.len(),
                show(whole),
                show(bound)
            )))
        } else {
            Ok(Outcome::fail(
                whole.unwrap_or(-2) + 1,
                format!("connectivity >= {}", show(bound)),
                show(whole),
            ))
        }
    }
}

/// `K_{1,n-1}`.
pub fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 2
        && g.edge_count() == n - 1
        && (0..n).any(|v| g.degree(v) == n - 1)
        && (0..n).filter(|&v| g.degree(v) == 1).count() >= n - 1
}

/// `C_n`.
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2) && components(g).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn fam(s: FamilySpec) -> Graph {
        generate(&s).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for p in PropertyId::ALL {
            assert_eq!(p.name().parse::<PropertyId>().unwrap(), p);
        }
        assert_eq!("girth-vanishing".parse::<PropertyId>().unwrap(), PropertyId::GirthVanishing);
        assert!("nope".parse::<PropertyId>().is_err());
    }

    #[test]
    fn every_property_passes_on_small_families() {
        let graphs = [
            fam(FamilySpec::Petersen),
            fam(FamilySpec::Cycle(6)),
            fam(FamilySpec::DoubleStar(2, 3)),
            fam(FamilySpec::CompleteMultipartite(vec![2, 3])),
            fam(FamilySpec::CycleWithChord(2, 1)),
            disjoint_union(&fam(FamilySpec::Cycle(3)), &fam(FamilySpec::Path(3))),
        ];
        let budget = Budget::default();
        for g in &graphs {
            for d in [DegreeBound::Finite(0), DegreeBound::Finite(1), DegreeBound::Finite(2), DegreeBound::Unbounded] {
                for p in PropertyId::ALL {
                    let r = run_property(p, g, d, 3, &budget).unwrap();
                    assert!(r.verdict.is_pass(), "{}: {} {:?}", r.id, r.verdict, r.notes);
                }
            }
        }
    }

    #[test]
    fn girth_vanishing_on_petersen() {
        let r = run_property(
            PropertyId::GirthVanishing,
            &fam(FamilySpec::Petersen),
            DegreeBound::Unbounded,
            0,
            &Budget::default(),
        )
        .unwrap();
        assert!(r.verdict.is_pass());
        assert_eq!(r.notes, vec!["girth 5".to_string()]);
    }

    #[test]
    fn star_and_cycle_shapes() {
        assert!(is_star(&fam(FamilySpec::CompleteMultipartite(vec![1, 3]))));
        assert!(!is_star(&fam(FamilySpec::Path(4))));
        assert!(is_star(&fam(FamilySpec::Path(3))));
        assert!(is_cycle(&fam(FamilySpec::Cycle(5))));
        assert!(!is_cycle(&disjoint_union(&fam(FamilySpec::Cycle(3)), &fam(FamilySpec::Cycle(3)))));
    }

    #[test]
    fn stabilization_index() {
        let g = fam(FamilySpec::CompleteMultipartite(vec![1, 4]));
        assert_eq!(independence_number(&g, g.neighbors(0)), 4);
        let r = run_property(PropertyId::SkeletonAgree, &g, DegreeBound::Unbounded, 0, &Budget::default()).unwrap();
        assert_eq!(r.notes, vec!["stabilizes at d=4".to_string()]);
    }
}
