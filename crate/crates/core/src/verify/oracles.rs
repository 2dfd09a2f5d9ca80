use std::time::Instant;

use rayon::prelude::*;

use super::catalog::{run_case, Claim, TheoremCase};
use super::properties::{is_cycle, is_star};
use super::report::{CaseReport, Verdict};
use crate::complex::{Budget, DegreeBound, ForestFaces};
use crate::error::{Error, Result};
use crate::graph::{induced_forest_check, Graph, VertexSet};
use crate::homology::{reduced_homology, reduced_homology_of, DimRange};

pub const BRUTE_FORCE_MAX_ORDER: usize = 24;

/// `t_d(G)` by scanning all `2^n` vertex subsets.
pub fn brute_force_t_d(g: &Graph, d: DegreeBound) -> Result<usize> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::input(format!(
            "brute-force t_d needs n <= {BRUTE_FORCE_MAX_ORDER}, got {n}"
        )));
    }
    Ok((0u64..1u64 << n)
        .into_par_iter()
        .filter(|&m| induced_forest_check(g, &VertexSet::from_mask(m), d))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Torsion search on `P_4 * H` at stage `d` in dimensions 1..3.
///
/// For `d >= 3` this is the catalog case and asserts a factor 2. Below that
/// the claim says nothing, so the report only records what was found.
pub fn torsion_witness(d: usize, budget: &Budget) -> Result<CaseReport> {
    let case = TheoremCase::new(Claim::TorsionWitness, DegreeBound::Finite(d));
    if d >= 3 {
        return run_case(&case, budget);
    }
    let start = Instant::now();
    let g = case.claim.graph()?;
    let dims = DimRange { lo: 1, hi: 3 };
    let mut report = match reduced_homology_of(&ForestFaces::new(&g, case.d), dims, budget) {
        Ok(p) => {
            let torsion: Vec<String> = (1..=3)
                .filter(|&q| !p.torsion(q).is_empty())
                .map(|q| format!("dim {q}: {:?}", p.torsion(q)))
                .collect();
            CaseReport::new(case.id(), Verdict::Pass)
                .with_profile(p)
                .note("informational: d < 3 is outside the claim")
                .note(if torsion.is_empty() {
                    "no torsion in the window".to_string()
                } else {
                    format!("torsion {}", torsion.join("; "))
                })
        }
        Err(e) if e.is_capacity() => CaseReport::new(case.id(), Verdict::Skipped { reason: e.to_string() }),
        Err(e) => return Err(e),
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The labeled graph on `order` vertices whose edge set is `mask`, pairs
/// `(u, v)` with `u < v` numbered lexicographically.
pub fn graph_from_mask(order: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..order {
        for v in u + 1..order {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(order, &edges).expect("pairs are simple")
}

/// Exhaustive scan over every labeled graph of the given order `q + 2`:
/// `H̃_q(F_q)` is nonzero exactly for `K_{1,q+1}` and `C_{q+2}`, and
/// `H̃_q(F_∞)` exactly for `C_{q+2}`.
pub fn classify_order(order: usize, budget: &Budget) -> Result<CaseReport> {
    if !(3..=8).contains(&order) {
        return Err(Error::input("classification scans orders 3..=8"));
    }
    let start = Instant::now();
    let q = order as i32 - 2;
    let pairs = order * (order - 1) / 2;
    let window = DimRange::new(q, q)?;
    let rows: Vec<Result<(u64, bool, bool, bool, bool)>> = (0u64..1u64 << pairs)
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(order, mask);
            let at_q = reduced_homology(&g, DegreeBound::Finite(q as usize), window, budget)?;
            let at_inf = reduced_homology(&g, DegreeBound::Unbounded, window, budget)?;
            Ok((
                mask,
                !at_q.group(q).is_zero(),
                !at_inf.group(q).is_zero(),
                is_star(&g),
                is_cycle(&g),
            ))
        })
        .collect();
    let id = format!("SMALL_ORDER_CLASS:order{order}");
    let (mut nz_q, mut nz_inf, mut stars, mut cycles) = (0, 0, 0, 0);
    let mut verdict = Verdict::Pass;
    for row in rows {
        let (mask, hq, hinf, star, cycle) = match row {
            Ok(r) => r,
            Err(e) if e.is_capacity() => {
                verdict = Verdict::Skipped { reason: e.to_string() };
                break;
            }
            Err(e) => return Err(e),
        };
        nz_q += hq as usize;
        nz_inf += hinf as usize;
        stars += star as usize;
        cycles += cycle as usize;
        if verdict.is_pass() {
            if hq != (star || cycle) {
                verdict = Verdict::fail(q, format!("H_q(F_q) nonzero iff star or cycle, edge mask {mask:#x}"), hq);
            } else if hinf != cycle {
                verdict = Verdict::fail(q, format!("H_q(F_inf) nonzero iff cycle, edge mask {mask:#x}"), hinf);
            }
        }
    }
    let mut report = CaseReport::new(id, verdict).note(format!(
        "{} graphs; H_q(F_q) nonzero for {nz_q}, H_q(F_inf) nonzero for {nz_inf}; {stars} stars, {cycles} cycles",
        1u64 << pairs
    ));
    report.elapsed = start.elapsed();
    Ok(report)
}
