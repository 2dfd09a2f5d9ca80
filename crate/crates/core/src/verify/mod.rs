//! Closed-form catalog, structural property suites and brute-force oracles.
//!
//! Expected profiles are evaluated from closed forms at run time, so a sweep
//! over parameters is data. Cases that run out of budget are reported as
//! skipped, never as failures.

mod catalog;
mod oracles;
mod properties;
mod report;
mod suite;

pub use catalog::{
    expected_profile, expected_with_notes, judge, run_case, CactusInput, Claim, Expected,
    TheoremCase,
};
pub use oracles::{brute_force_t_d, classify_order, graph_from_mask, torsion_witness, BRUTE_FORCE_MAX_ORDER};
pub use properties::{companion_graph, is_cycle, is_star, run_property, PropertyId, FLAGNESS_MAX_ORDER};
pub use report::{summary_table, CaseReport, Summary, Verdict};
pub use suite::{
    filter_cases, format_manifest, named_instances, catalog_suite, parse_manifest, property_jobs,
    random_instances, run_cases, run_classification, run_property_jobs, PropertyJob,
};
