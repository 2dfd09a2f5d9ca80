//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification case failed, 2 usage or input
//! error, 3 a case was skipped under `--strict` or a budget was exceeded.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::complex::{forest_complex_with, Budget, DegreeBound, FaceSource, ForestFaces};
use crate::error::{Error, Result};
use crate::formats::{
    complex_to_json, complex_to_json_with_stats, graph_to_edge_list, graph_to_json, parse_family,
    read_complex, read_graph, to_stable_json, FAMILY_HELP,
};
use crate::graph::Graph;
use crate::homology::{export_boundaries, reduced_cohomology_of_complex, reduced_homology_of, DimRange};
use crate::verify::{
    filter_cases, catalog_suite, parse_manifest, property_jobs, run_case,
    run_cases, run_classification, run_property_jobs, summary_table, CaseReport, PropertyId,
    PropertyJob, Summary, TheoremCase,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SKIP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "forestcx", version, about = "Homology of bounded-degree forest complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a graph from a named family.
    Gen(GenArgs),
    /// Write the facets of F_d(G).
    Complex(ComplexArgs),
    /// Reduced homology of F_d(G) or of a complex file.
    Hom(HomArgs),
    /// Run catalog cases, property suites or the small-order scan.
    Verify(VerifyArgs),
    /// Time catalog cases.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GraphSource {
    /// Family such as `doublestar:3,3`; see `gen --help`.
    #[arg(long, conflicts_with = "graph")]
    pub family: Option<String>,
    /// Graph file (JSON or edge list).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Seed for randomized families and property suites.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl GraphSource {
    fn is_given(&self) -> bool {
        self.family.is_some() || self.graph.is_some()
    }

    fn load(&self) -> Result<Graph> {
        match (&self.family, &self.graph) {
            (Some(f), _) => parse_family(f, self.seed),
            (None, Some(p)) => read_graph(p),
            (None, None) => Err(Error::input("a graph is required: pass --family or --graph")),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Edges,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Paper,
    Properties,
    Classify,
}

#[derive(Args, Debug)]
#[command(after_help = FAMILY_HELP)]
pub struct GenArgs {
    #[command(flatten)]
    pub input: GraphSource,
    #[arg(long, value_enum, default_value = "json")]
    pub format: GraphFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ComplexArgs {
    #[command(flatten)]
    pub input: GraphSource,
    /// Degree cap: a nonnegative integer or `inf`.
    #[arg(long)]
    pub d: DegreeBound,
    /// Omit dimension, Euler characteristic and f-vector.
    #[arg(long)]
    pub facets_only: bool,
    #[arg(long)]
    pub budget_faces: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct HomArgs {
    #[command(flatten)]
    pub input: GraphSource,
    /// Complex file written by `complex`.
    #[arg(long, conflicts_with_all = ["family", "graph", "d"])]
    pub complex: Option<PathBuf>,
    #[arg(long)]
    pub d: Option<DegreeBound>,
    /// Dimension window `lo..hi`; defaults to every dimension.
    #[arg(long)]
    pub dims: Option<DimRange>,
    /// Reduced cohomology instead of homology.
    #[arg(long)]
    pub cohomology: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[arg(long)]
    pub budget_faces: Option<usize>,
    /// Directory for boundary matrices as `d<q>.txt` triplets.
    #[arg(long)]
    pub export_matrices: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Option<SuiteName>,
    /// Catalog case such as `knxkm:3,3:d2` or `ladder:5:d2@5..7`.
    #[arg(long = "case")]
    pub cases: Vec<String>,
    /// File with one `claim params d [lo..hi]` per line.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Keep only cases whose id contains one of these substrings.
    #[arg(long = "filter")]
    pub filters: Vec<String>,
    /// Parameter bound for the catalog sweep (`--suite paper`).
    #[arg(long, default_value_t = 4)]
    pub max_r: usize,
    /// Property name(s); implies the properties suite.
    #[arg(long = "property")]
    pub properties: Vec<PropertyId>,
    /// Graph for properties; with none, seeded random and named graphs are used.
    #[command(flatten)]
    pub input: GraphSource,
    /// Degree cap for properties on an explicit graph.
    #[arg(long)]
    pub d: Option<DegreeBound>,
    /// Random graphs per property.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Orders for the classification scan.
    #[arg(long, value_delimiter = ',', default_value = "4,5,6")]
    pub orders: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub budget_faces: Option<usize>,
    /// Exit 3 when any case is skipped.
    #[arg(long)]
    pub strict: bool,
    /// Include wall-clock times in the table and the JSON report.
    #[arg(long)]
    pub timings: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
    /// JSON report file; the table still goes to standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long = "case", required = true)]
    pub cases: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    /// Worker threads available to each case.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub budget_faces: Option<usize>,
}

fn budget(faces: Option<usize>) -> Budget {
    faces.map_or_else(Budget::default, Budget::with_faces)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Parses `argv` (program name first) and runs it, returning the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_capacity() {
                EXIT_SKIP
            } else {
                EXIT_USAGE
            }
        }
    }
}

pub fn execute(cmd: &Command) -> Result<i32> {
    match cmd {
        Command::Gen(a) => gen(a),
        Command::Complex(a) => complex(a),
        Command::Hom(a) => hom(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench(a),
    }
}

fn gen(a: &GenArgs) -> Result<i32> {
    let g = a.input.load()?;
    let text = match a.format {
        GraphFormat::Json => graph_to_json(&g)?,
        GraphFormat::Edges => graph_to_edge_list(&g),
    };
    emit(a.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn complex(a: &ComplexArgs) -> Result<i32> {
    let g = a.input.load()?;
    let k = forest_complex_with(&g, a.d, &budget(a.budget_faces))?;
    let text = if a.facets_only {
        complex_to_json(&k)?
    } else {
        complex_to_json_with_stats(&k)?
    };
    emit(a.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn hom(a: &HomArgs) -> Result<i32> {
    let budget = budget(a.budget_faces);
    let stored = a.complex.as_deref().map(read_complex).transpose()?;
    let graph = match stored {
        Some(_) => None,
        None => Some(a.input.load()?),
    };
    let d = match (&graph, a.d) {
        (Some(_), None) => return Err(Error::input("--d is required with --family or --graph")),
        (_, d) => d.unwrap_or(DegreeBound::Unbounded),
    };
    let forest = graph.as_ref().map(|g| ForestFaces::new(g, d));
    let (source, n): (&dyn FaceSource, usize) = match (&stored, &forest) {
        (Some(k), _) => (k, k.ground()),
        (None, Some(f)) => (f, graph.as_ref().map_or(0, Graph::n)),
        (None, None) => unreachable!("one input is loaded"),
    };
    let dims = a.dims.unwrap_or_else(|| DimRange::full(n.max(1)));
    let profile = if a.cohomology {
        match (&stored, &graph) {
            (Some(k), _) => reduced_cohomology_of_complex(k, dims, &budget)?,
            (None, Some(g)) => {
                reduced_cohomology_of_complex(&forest_complex_with(g, d, &budget)?, dims, &budget)?
            }
            (None, None) => unreachable!("one input is loaded"),
        }
    } else {
        reduced_homology_of(source, dims, &budget)?
    };
    if let Some(dir) = &a.export_matrices {
        for p in export_boundaries(source, dims, &budget, dir)? {
            eprintln!("wrote {}", p.display());
        }
    }
    let text = match a.format {
        OutputFormat::Json => to_stable_json(&profile)?,
        OutputFormat::Table => {
            let mut out = format!("{:>4}  {:>8}  torsion\n", "q", "betti");
            for q in dims.lo..=dims.hi {
                let t = profile.torsion(q);
                let torsion = if t.is_empty() {
                    "-".to_string()
                } else {
                    t.iter().map(|c| format!("Z/{c}")).collect::<Vec<_>>().join(" + ")
                };
                out.push_str(&format!("{q:>4}  {:>8}  {torsion}\n", profile.betti(q)));
            }
            out
        }
    };
    emit(a.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn property_selection(a: &VerifyArgs) -> Result<Vec<PropertyJob>> {
    let seed = a
        .input
        .seed
        .ok_or_else(|| Error::input("property suites are randomized and need an explicit --seed"))?;
    let props: Vec<PropertyId> = if a.properties.is_empty() {
        PropertyId::ALL.to_vec()
    } else {
        a.properties.clone()
    };
    if !a.input.is_given() {
        return Ok(property_jobs(&props, seed, a.samples));
    }
    let g = a.input.load()?;
    let label = a
        .input
        .family
        .clone()
        .unwrap_or_else(|| "graph".to_string());
    let ds = match a.d {
        Some(d) => vec![d],
        None => [0, 1, 2]
            .map(DegreeBound::Finite)
            .into_iter()
            .chain([DegreeBound::Unbounded])
            .collect(),
    };
    let mut jobs = Vec::new();
    for &prop in &props {
        for &d in &ds {
            jobs.push(PropertyJob {
                prop,
                label: label.clone(),
                graph: g.clone(),
                d,
                seed,
            });
        }
    }
    Ok(jobs)
}

fn verify(a: &VerifyArgs) -> Result<i32> {
    let budget = budget(a.budget_faces);
    let keep = |id: &str| a.filters.is_empty() || a.filters.iter().any(|f| id.contains(f.as_str()));
    let mut reports: Vec<CaseReport> = if !a.cases.is_empty() || a.manifest.is_some() {
        let mut cases = a
            .cases
            .iter()
            .map(|c| c.parse::<TheoremCase>())
            .collect::<Result<Vec<_>>>()?;
        if let Some(m) = &a.manifest {
            cases.extend(parse_manifest(&std::fs::read_to_string(m)?)?);
        }
        run_cases(&filter_cases(cases, &a.filters), &budget, a.jobs)?
    } else {
        let suite = match (a.suite, a.properties.is_empty()) {
            (Some(s), _) => s,
            (None, false) => SuiteName::Properties,
            (None, true) => SuiteName::Paper,
        };
        match suite {
            SuiteName::Paper => run_cases(&filter_cases(catalog_suite(a.max_r), &a.filters), &budget, a.jobs)?,
            SuiteName::Properties => {
                let jobs: Vec<PropertyJob> = property_selection(a)?
                    .into_iter()
                    .filter(|j| keep(&j.id()))
                    .collect();
                run_property_jobs(&jobs, &budget, a.jobs)?
            }
            SuiteName::Classify => run_classification(&a.orders, &budget, a.jobs)?
                .into_iter()
                .filter(|r| keep(&r.id))
                .collect(),
        }
    };
    if a.timings {
        reports = reports.into_iter().map(CaseReport::with_timing).collect();
    }
    let json = to_stable_json(&reports)?;
    if let Some(p) = &a.out {
        std::fs::write(p, &json)?;
    }
    if a.format == OutputFormat::Json && a.out.is_none() {
        print!("{json}");
    } else {
        print!("{}", summary_table(&reports, a.timings));
    }
    let s = Summary::of(&reports);
    Ok(if s.fail > 0 {
        EXIT_FAIL
    } else if a.strict && s.skipped > 0 {
        EXIT_SKIP
    } else {
        EXIT_OK
    })
}

fn bench(a: &BenchArgs) -> Result<i32> {
    let budget = budget(a.budget_faces);
    let cases = a
        .cases
        .iter()
        .map(|c| c.parse::<TheoremCase>())
        .collect::<Result<Vec<_>>>()?;
    let reps = a.reps.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| Error::input(format!("cannot start {} workers: {e}", a.jobs)))?;
    let width = cases.iter().map(|c| c.id().len()).max().unwrap_or(4).max(4);
    println!("{:<width$}  {:>4}  {:>10}  {:>10}  {:>10}  verdict", "case", "reps", "min ms", "median ms", "max ms");
    let mut failed = false;
    for case in &cases {
        let mut times = Vec::with_capacity(reps);
        let mut last = None;
        for _ in 0..reps {
            let start = Instant::now();
            let r = pool.install(|| run_case(case, &budget))?;
            times.push(start.elapsed().as_secs_f64() * 1e3);
            last = Some(r);
        }
        times.sort_by(f64::total_cmp);
        let r = last.expect("at least one repetition");
        failed |= r.verdict.is_fail();
        println!(
            "{:<width$}  {reps:>4}  {:>10.2}  {:>10.2}  {:>10.2}  {}",
            case.id(),
            times[0],
            times[reps / 2],
            times[reps - 1],
            r.verdict
        );
    }
    Ok(if failed { EXIT_FAIL } else { EXIT_OK })
}
