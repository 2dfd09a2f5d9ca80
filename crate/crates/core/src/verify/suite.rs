use rayon::prelude::*;

use super::catalog::{expected_profile, run_case, CactusInput, Claim, TheoremCase};
use super::oracles::classify_order;
use super::properties::{run_property, PropertyId};
use super::report::CaseReport;
use crate::complex::{Budget, DegreeBound};
use crate::error::{Error, Result};
use crate::graph::{
    block_decomposition, cartesian_product, categorical_product, disjoint_union, generate,
    random_graph, FamilySpec, Graph,
};
use crate::homology::DimRange;

const INF: DegreeBound = DegreeBound::Unbounded;

fn fin(d: usize) -> DegreeBound {
    DegreeBound::Finite(d)
}

/// Random cactus inputs of the catalog sweep.
fn suite_cacti(max_r: usize) -> Vec<CactusInput> {
    (1..=10 * max_r as u64)
        .map(|seed| CactusInput::Random {
            seed,
            blocks: 1 + (seed % 3) as usize,
            max_cycle: 5,
        })
        .collect()
}

/// Every catalog claim swept over parameters scaled by `max_r`.
pub fn catalog_suite(max_r: usize) -> Vec<TheoremCase> {
    let r = max_r.max(1);
    let mut cases = Vec::new();
    let mut add = |claim: Claim, ds: &[DegreeBound]| {
        for &d in ds {
            cases.push(TheoremCase::new(claim.clone(), d));
        }
    };
    for n in 1..=r + 4 {
        add(Claim::Complete(n), &[fin(1), fin(2), fin(3), INF]);
    }
    for n in 3..=2 * r + 3 {
        add(Claim::CycleSphere(n), &[fin(2), fin(3), INF]);
    }
    for n in 3..=3 * r + 2 {
        add(Claim::CycleIndependence(n), &[fin(0)]);
    }
    for k in 1..=3 * r + 2 {
        add(Claim::PathIndependence(k), &[fin(0)]);
    }
    for n in 1..=(4 * r + 3).min(19) {
        add(Claim::PathF1(n), &[fin(1)]);
    }
    for n in 3..=(4 * r + 3).min(19) {
        add(Claim::CycleF1(n), &[fin(1)]);
    }
    for a in 1..=r + 1 {
        for b in 1..=r + 1 {
            add(Claim::ChordedCycle(a, b), &[INF]);
        }
    }
    for a in 1..=r + 1 {
        for b in 1..=r + 1 {
            add(Claim::DoubleStar(a, b), &[fin(1), fin(2), fin(3)]);
        }
    }
    add(Claim::Cactus(CactusInput::Bowtie), &[INF]);
    add(Claim::CactusDual(CactusInput::Bowtie), &[INF]);
    for c in suite_cacti(r) {
        let g = c.graph().expect("suite cactus parameters are valid");
        let bd = block_decomposition(&g);
        if bd.all_cycle_blocks() && bd.sb() == 0 {
            add(Claim::CactusDual(c.clone()), &[INF]);
        }
        add(Claim::Cactus(c), &[INF]);
    }
    for n in 1..=r + 1 {
        for m in n..=r + 1 {
            add(Claim::Bipartite(n, m), &[fin(0), fin(1), fin(2), fin(3), INF]);
        }
    }
    for parts in [vec![1, 1, 1], vec![2, 2, 2], vec![1, 2, 3], vec![1, 1, 1, 1], vec![2, 2, 1, 1]] {
        add(Claim::Multipartite(parts), &[fin(1), fin(2), INF]);
    }
    for n in 3..=r + 5 {
        let mut ds = vec![fin(1), fin(n / 2), INF];
        ds.dedup();
        add(Claim::Wheel(n), &ds);
    }
    for k in 1..=2 * r + 2 {
        add(Claim::Ladder(k), &[INF]);
    }
    for n in 2..=(r + 1).min(4) {
        for m in n..=(r + 1).min(4) {
            add(Claim::RookProduct(n, m), &[fin(0), fin(1), fin(2), fin(3)]);
        }
    }
    for n in 2..=r.clamp(2, 4) {
        add(Claim::DoubleEdgeProduct(n), &[fin(1), fin(2)]);
    }
    add(Claim::TorsionWitness, &[fin(3)]);
    cases
}

/// Cases whose id contains any of the filters; all cases when empty.
pub fn filter_cases(cases: Vec<TheoremCase>, filters: &[String]) -> Vec<TheoremCase> {
    if filters.is_empty() {
        return cases;
    }
    cases
        .into_iter()
        .filter(|c| {
            let id = c.id();
            filters.iter().any(|f| id.contains(f.as_str()))
        })
        .collect()
}

/// Reads a manifest: one case per line as `claim params d [lo..hi]`, with
/// `#` comments. Claims are keys such as `double-star` or catalog letters.
pub fn parse_manifest(text: &str) -> Result<Vec<TheoremCase>> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse(format!("manifest line {}: {msg}", no + 1));
        let toks: Vec<&str> = line.split_whitespace().collect();
        let (claim, params, d, window) = match toks.as_slice() {
            [c, p, d] => (*c, *p, *d, None),
            [c, p, d, w] => (*c, *p, *d, Some(*w)),
            _ => return Err(err("expected `claim params d [lo..hi]`".to_string())),
        };
        let claim = Claim::parse(claim, params).map_err(|e| err(e.to_string()))?;
        let d: DegreeBound = d
            .trim_start_matches('d')
            .parse()
            .map_err(|e: Error| err(e.to_string()))?;
        let mut case = TheoremCase::new(claim, d);
        if let Some(w) = window {
            case = case.windowed(w.parse::<DimRange>().map_err(|e| err(e.to_string()))?);
        }
        expected_profile(&case).map_err(|e| err(e.to_string()))?;
        out.push(case);
    }
    Ok(out)
}

/// The manifest text that [`parse_manifest`] reads back to `cases`.
pub fn format_manifest(cases: &[TheoremCase]) -> String {
    cases
        .iter()
        .map(|c| {
            let mut line = format!("{} {} {}", c.claim.key(), c.claim.params(), c.d);
            if let Some(w) = c.window {
                line.push_str(&format!(" {}..{}", w.lo, w.hi));
            }
            line + "\n"
        })
        .collect()
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::input(format!("cannot start {jobs} workers: {e}")))
}

fn sorted(mut reports: Vec<CaseReport>) -> Vec<CaseReport> {
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

/// Runs cases on `jobs` workers; reports come back sorted by id.
pub fn run_cases(cases: &[TheoremCase], budget: &Budget, jobs: usize) -> Result<Vec<CaseReport>> {
    let reports = pool(jobs)?.install(|| {
        cases
            .par_iter()
            .map(|c| run_case(c, budget))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(sorted(reports))
}

/// One property on one labeled graph.
#[derive(Clone, Debug)]
pub struct PropertyJob {
    pub prop: PropertyId,
    pub label: String,
    pub graph: Graph,
    pub d: DegreeBound,
    pub seed: u64,
}

impl PropertyJob {
    pub fn id(&self) -> String {
        format!("{}:{}:d{}", self.prop, self.label, self.d)
    }
}

/// The named family instances the property suites also run on.
pub fn named_instances() -> Vec<(String, Graph)> {
    let fam = |s: FamilySpec| generate(&s).expect("named family parameters are valid");
    let k = |n| fam(FamilySpec::Complete(n));
    vec![
        ("petersen".into(), fam(FamilySpec::Petersen)),
        ("path-7".into(), fam(FamilySpec::Path(7))),
        ("cycle-5".into(), fam(FamilySpec::Cycle(5))),
        ("cycle-8".into(), fam(FamilySpec::Cycle(8))),
        ("complete-5".into(), k(5)),
        ("cyclechord-2-2".into(), fam(FamilySpec::CycleWithChord(2, 2))),
        ("doublestar-3-3".into(), fam(FamilySpec::DoubleStar(3, 3))),
        ("bowtie".into(), CactusInput::Bowtie.graph().expect("bowtie")),
        ("bipartite-3-3".into(), fam(FamilySpec::CompleteMultipartite(vec![3, 3]))),
        ("multipartite-2-2-2".into(), fam(FamilySpec::CompleteMultipartite(vec![2, 2, 2]))),
        ("wheel-5".into(), fam(FamilySpec::Wheel(5))),
        ("ladder-3".into(), cartesian_product(&fam(FamilySpec::Path(2)), &fam(FamilySpec::Path(3)))),
        ("knxkm-3-3".into(), categorical_product(&k(3), &k(3))),
        ("knxkm-2-4".into(), categorical_product(&k(2), &k(4))),
        ("triangle+path-3".into(), disjoint_union(&k(3), &fam(FamilySpec::Path(3)))),
    ]
}

/// Seeded `G(n, p)` samples with `4 <= n <= 9`.
pub fn random_instances(seed: u64, samples: usize) -> Vec<(String, Graph)> {
    (0..samples as u64)
        .map(|i| {
            let s = seed.wrapping_mul(1_000_003).wrapping_add(i);
            let n = 4 + (i % 6) as usize;
            let p = [0.25, 0.4, 0.55][(i / 6 % 3) as usize];
            (format!("gnp-{seed}-{i}"), random_graph(s, n, p))
        })
        .collect()
}

/// Each property on each graph, at stages cycling through 0, 1, 2, 3, ∞
/// for random graphs and at 0, 1, 2, ∞ for named instances.
pub fn property_jobs(props: &[PropertyId], seed: u64, samples: usize) -> Vec<PropertyJob> {
    let mut jobs = Vec::new();
    let stages = [fin(0), fin(1), fin(2), fin(3), INF];
    for (i, (label, g)) in random_instances(seed, samples).into_iter().enumerate() {
        for &prop in props {
            jobs.push(PropertyJob {
                prop,
                label: label.clone(),
                graph: g.clone(),
                d: stages[i % stages.len()],
                seed: seed.wrapping_add(i as u64),
            });
        }
    }
    for (label, g) in named_instances() {
        for &prop in props {
            for d in [fin(0), fin(1), fin(2), INF] {
                jobs.push(PropertyJob {
                    prop,
                    label: label.clone(),
                    graph: g.clone(),
                    d,
                    seed,
                });
            }
        }
    }
    jobs
}

pub fn run_property_jobs(jobs: &[PropertyJob], budget: &Budget, workers: usize) -> Result<Vec<CaseReport>> {
    let reports = pool(workers)?.install(|| {
        jobs.par_iter()
            .map(|j| {
                run_property(j.prop, &j.graph, j.d, j.seed, budget).map(|mut r| {
                    r.id = j.id();
                    r
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(sorted(reports))
}

/// The exhaustive small-order classification over the given orders.
pub fn run_classification(orders: &[usize], budget: &Budget, workers: usize) -> Result<Vec<CaseReport>> {
    let reports = pool(workers)?.install(|| {
        orders
            .iter()
            .map(|&o| classify_order(o, budget))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(sorted(reports))
}
