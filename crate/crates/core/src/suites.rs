//! Theorem-verification sweeps over enumerated graph families. Each
//! suite runs one structural claim against every graph in its budget and
//! reports counterexamples; reports are deterministic for fixed
//! parameters and independent of the worker count.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{clique_intervals, enumerate_graphs, GraphFilter, LabeledGraph};
use crate::groebner::{
    buchberger, graded_dim_ideal, ideal_equal, ideal_member, initial_ideal, is_groebner, saturate,
    Ideal,
};
use crate::hilbert::{hilbert_numerator, krull_dim_monomial, reduced_series, regularity_cm, IntPoly};
use crate::monomial_ideal::MonomialIdeal;
use crate::oracle::{graded_dim_by_rank, quotient_hf_by_rank};
use crate::report::{graph_label, Counterexample, SuiteParams, TheoremReport, REPORT_SCHEMA_VERSION};
use crate::ring::{Monomial, MonomialOrder, PolyRing};
use crate::scroll::{
    linear_resolution_test, predicted_initial_ideal, predicted_radical, radical_check,
    saturation_certificate, scroll_edge_ideal, scroll_full_ideal, stci_witness,
};
use crate::variety::variety_union_equal;

const REV: MonomialOrder = MonomialOrder::GradedRevLex;

/// Hard budget caps; requests beyond these are refused, not truncated.
pub const MAX_N_ALL_GRAPHS: usize = 6;
pub const MAX_N_CLOSED: usize = 8;

/// Everything a suite needs to run.
#[derive(Debug, Clone)]
pub struct SuiteRequest {
    pub max_n: Option<usize>,
    pub field_primes: Vec<u64>,
    pub workers: usize,
}

impl Default for SuiteRequest {
    fn default() -> Self {
        SuiteRequest {
            max_n: None,
            field_primes: vec![3, 5],
            workers: 1,
        }
    }
}

pub const SUITE_NAMES: [&str; 10] = [
    "figure-dims",
    "gb-closed",
    "initial-dim",
    "saturation",
    "minimal-primes",
    "radical",
    "stci",
    "regularity-bound",
    "linear-resolution",
    "self-checks",
];

/// Dispatch a suite by name.
pub fn run_suite(name: &str, req: &SuiteRequest) -> Result<TheoremReport> {
    match name {
        "figure-dims" => figure_dims(req),
        "gb-closed" => gb_closed(req),
        "initial-dim" => initial_dim(req),
        "saturation" => saturation_suite(req),
        "minimal-primes" => minimal_primes(req),
        "radical" => radical_suite(req),
        "stci" => stci_suite(req),
        "regularity-bound" => regularity_bound(req),
        "linear-resolution" => linear_resolution(req),
        "self-checks" => self_checks(req),
        other => Err(Error::InvalidInput(format!(
            "unknown suite {other:?}; available: {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

struct SuiteRun {
    suite: &'static str,
    claim: &'static str,
    evidence: &'static str,
    params: SuiteParams,
    started: Instant,
    cases_run: u64,
    counterexamples: Vec<Counterexample>,
}

impl SuiteRun {
    fn new(suite: &'static str, claim: &'static str, evidence: &'static str, params: SuiteParams) -> Self {
        SuiteRun {
            suite,
            claim,
            evidence,
            params,
            started: Instant::now(),
            cases_run: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, outcomes: Vec<Option<Counterexample>>) {
        self.cases_run += outcomes.len() as u64;
        self.counterexamples.extend(outcomes.into_iter().flatten());
    }

    fn finish(self) -> TheoremReport {
        let failed = self.counterexamples.len() as u64;
        TheoremReport {
            schema_version: REPORT_SCHEMA_VERSION.to_string(),
            suite: self.suite.to_string(),
            claim: self.claim.to_string(),
            evidence: self.evidence.to_string(),
            params: self.params,
            cases_run: self.cases_run,
            cases_passed: self.cases_run - failed,
            counterexamples: self.counterexamples,
            wall_time_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn params(max_n: usize, filter: &str, req: &SuiteRequest) -> SuiteParams {
    SuiteParams {
        max_n,
        filter: filter.to_string(),
        field_primes: Vec::new(),
        sample: None,
        workers: req.workers,
    }
}

fn cap(requested: Option<usize>, default: usize, hard: usize, what: &'static str) -> Result<usize> {
    let n = requested.unwrap_or(default);
    if n > hard {
        return Err(Error::Budget(format!(
            "{what}: max_n {n} exceeds the hard cap {hard}"
        )));
    }
    Ok(n)
}

/// The quotient dimension pipeline: Buchberger, initial ideal, Krull
/// dimension (both dimension routes cross-checked internally).
pub fn quotient_dim(g: &LabeledGraph) -> Result<usize> {
    let init = initial_ideal(&buchberger(&scroll_edge_ideal(g), REV));
    krull_dim_monomial(&init)
}

/// The two labelings of the two-star graph from the motivating example:
/// the ideal pipeline must give quotient dimensions 3 and 4.
fn figure_dims(req: &SuiteRequest) -> Result<TheoremReport> {
    let mut run = SuiteRun::new(
        "figure-dims",
        "the two displayed labelings of the two-star tree give quotient dimensions 3 and 4",
        "exact",
        params(6, "fixed pair of labelings", req),
    );
    let labeling_a =
        LabeledGraph::from_edges(6, &[(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)]).unwrap();
    let labeling_b =
        LabeledGraph::from_edges(6, &[(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
    let cases = vec![(labeling_a, 3usize), (labeling_b, 4usize)];
    let outcomes = cases
        .into_iter()
        .map(|(g, expected)| {
            let dim = quotient_dim(&g)?;
            Ok(if dim == expected {
                None
            } else {
                Some(Counterexample {
                    graph: graph_label(&g),
                    expected: format!("dim {expected}"),
                    actual: format!("dim {dim}"),
                })
            })
        })
        .collect::<Result<Vec<_>>>()?;
    run.record(outcomes);
    Ok(run.finish())
}

/// Deterministic evenly spaced sample of `k` masks out of `total`.
fn sample_masks(total: u64, k: u64) -> Vec<u64> {
    (0..k).map(|i| i * total / k).collect()
}

const GB_CLOSED_SAMPLE_AT_SIX: u64 = 5000;

/// Groebner property of the generators versus closedness of the
/// labeling, over every labeled graph up to the budget (full sweep
/// through n = 5, a deterministic 5000-graph sample at n = 6).
fn gb_closed(req: &SuiteRequest) -> Result<TheoremReport> {
    let max_n = cap(req.max_n, 6, MAX_N_ALL_GRAPHS, "gb-closed")?;
    let mut p = params(max_n, "all labeled graphs", req);
    if max_n >= 6 {
        p.sample = Some(GB_CLOSED_SAMPLE_AT_SIX as usize);
    }
    let mut run = SuiteRun::new(
        "gb-closed",
        "the edge minors form a Groebner basis under graded revlex exactly when the labeling is closed",
        "exact",
        p,
    );
    for n in 1..=max_n {
        let graphs: Vec<LabeledGraph> = if n <= 5 {
            enumerate_graphs(n, GraphFilter::All)?
        } else {
            let bits = n * (n - 1) / 2;
            sample_masks(1 << bits, GB_CLOSED_SAMPLE_AT_SIX)
                .into_iter()
                .map(|m| LabeledGraph::from_mask(n, m))
                .collect()
        };
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let closed = g.is_closed_labeling();
                let groebner = is_groebner(&scroll_edge_ideal(g), REV);
                if closed == groebner {
                    None
                } else {
                    Some(Counterexample {
                        graph: graph_label(g),
                        expected: format!("is_groebner = {closed} (labeling closed: {closed})"),
                        actual: format!("is_groebner = {groebner}"),
                    })
                }
            })
            .collect();
        run.record(outcomes);
    }
    Ok(run.finish())
}

/// Initial ideal shape and quotient dimension: for connected closed
/// labelings the computed initial ideal is the predicted sum of interval
/// squares, primary, with quotient dimension 2; for every closed
/// labeling the dimension is one more than the component count.
fn initial_dim(req: &SuiteRequest) -> Result<TheoremReport> {
    let max_n = cap(req.max_n, 8, MAX_N_CLOSED, "initial-dim")?;
    let all_closed_max = max_n.saturating_sub(1).min(7);
    let mut run = SuiteRun::new(
        "initial-dim",
        "initial ideals of connected closed labelings are the predicted interval squares (primary, dim 2); every closed labeling has dim = 1 + components",
        "exact",
        params(max_n, "closed labeled graphs", req),
    );
    for n in 1..=max_n {
        let graphs = enumerate_graphs(n, GraphFilter::ConnectedClosed)?;
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| check_connected_initial(g, n))
            .collect::<Result<Vec<_>>>()?;
        run.record(outcomes);
    }
    for n in 1..=all_closed_max {
        let graphs = enumerate_graphs(n, GraphFilter::Closed)?;
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let c = g.connected_components().len();
                let dim = quotient_dim(g).expect("pipeline");
                if dim == 1 + c {
                    None
                } else {
                    Some(Counterexample {
                        graph: graph_label(g),
                        expected: format!("dim {} (1 + {c} components)", 1 + c),
                        actual: format!("dim {dim}"),
                    })
                }
            })
            .collect();
        run.record(outcomes);
    }
    Ok(run.finish())
}

fn check_connected_initial(g: &LabeledGraph, n: usize) -> Result<Option<Counterexample>> {
    let computed = initial_ideal(&buchberger(&scroll_edge_ideal(g), REV));
    let predicted = predicted_initial_ideal(&clique_intervals(g)?, n);
    if computed != predicted {
        return Ok(Some(Counterexample {
            graph: graph_label(g),
            expected: format!("initial ideal {:?}", predicted.min_gens()),
            actual: format!("initial ideal {:?}", computed.min_gens()),
        }));
    }
    let dim = krull_dim_monomial(&computed)?;
    if dim != 2 {
        return Ok(Some(Counterexample {
            graph: graph_label(g),
            expected: "quotient dimension 2".to_string(),
            actual: format!("quotient dimension {dim}"),
        }));
    }
    if !computed.is_primary_support_prime() {
        return Ok(Some(Counterexample {
            graph: graph_label(g),
            expected: "primary initial ideal".to_string(),
            actual: "radical is not the support prime".to_string(),
        }));
    }
    Ok(None)
}

/// Saturation: multiplier certificates expand exactly for every pair in
/// every connected graph; saturating the edge ideal by the product of
/// all variables recovers the full minor ideal on connected closed
/// graphs.
fn saturation_suite(req: &SuiteRequest) -> Result<TheoremReport> {
    let max_n = cap(req.max_n, 6, MAX_N_ALL_GRAPHS, "saturation")?;
    let closed_max = max_n.saturating_sub(1).min(5);
    let mut run = SuiteRun::new(
        "saturation",
        "path-recursion certificates express a variable multiple of every minor over the edge generators; saturation by the variable product recovers the full minor ideal",
        "exact",
        params(max_n, "connected labeled graphs", req),
    );
    for n in 2..=max_n {
        let graphs = enumerate_graphs(n, GraphFilter::Connected)?;
        let ring = PolyRing::for_vertices(n);
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        let cert = saturation_certificate(g, i, j).expect("connected");
                        if !cert.verify(&ring).expect("same ring") {
                            return Some(Counterexample {
                                graph: graph_label(g),
                                expected: format!("certificate for ({i},{j}) expands exactly"),
                                actual: "expansion mismatch".to_string(),
                            });
                        }
                    }
                }
                None
            })
            .collect();
        run.record(outcomes);
    }
    for n in 2..=closed_max {
        let graphs = enumerate_graphs(n, GraphFilter::ConnectedClosed)?;
        let ring = PolyRing::for_vertices(n);
        let product = (0..=n).fold(ring.one(), |acc, i| {
            acc.mul(&ring.var(i)).expect("same ring")
        });
        let full = scroll_full_ideal(n)?;
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let sat = saturate(&scroll_edge_ideal(g), &product).expect("nonzero");
                if ideal_equal(&sat, &full, REV).expect("same ring") {
                    None
                } else {
                    Some(Counterexample {
                        graph: graph_label(g),
                        expected: "saturation equals the full minor ideal".to_string(),
                        actual: "saturation differs".to_string(),
                    })
                }
            })
            .collect();
        run.record(outcomes);
    }
    Ok(run.finish())
}

/// Minimal primes at the variety level: over each prime field the points
/// of the edge ideal are exactly the union over the two predicted
/// primes, and every generator lies in both.
fn minimal_primes(req: &SuiteRequest) -> Result<TheoremReport> {
    let max_n = cap(req.max_n, 6, MAX_N_ALL_GRAPHS, "minimal-primes")?;
    let mut p = params(max_n, "connected closed non-complete", req);
    p.field_primes = req.field_primes.clone();
    let mut run = SuiteRun::new(
        "minimal-primes",
        "the vanishing locus of the edge ideal is the union of the full minor locus and the middle-coordinate plane; all generators lie in both predicted primes",
        "finite-field evidence",
        p,
    );
    for n in 2..=max_n {
        let graphs: Vec<LabeledGraph> = enumerate_graphs(n, GraphFilter::ConnectedClosed)?
            .into_iter()
            .filter(|g| !g.is_complete())
            .collect();
        if graphs.is_empty() {
            continue;
        }
        let full = scroll_full_ideal(n)?;
        let full_gb = buchberger(&full, REV);
        let middle = crate::scroll::middle_variable_ideal(n);
        let middle_gb = buchberger(&middle, REV);
        let qs = req.field_primes.clone();
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let ideal = scroll_edge_ideal(g);
                for gen in ideal.generators() {
                    if !ideal_member(gen, &full_gb).expect("same ring")
                        || !ideal_member(gen, &middle_gb).expect("same ring")
                    {
                        return Some(Counterexample {
                            graph: graph_label(g),
                            expected: "every generator lies in both predicted primes".into(),
                            actual: "a generator escapes a predicted prime".into(),
                        });
                    }
                }
                for &q in &qs {
                    match variety_union_equal(&ideal, &[full.clone(), middle.clone()], q) {
                        Ok((true, _)) => {}
                        Ok((false, witness)) => {
                            return Some(Counterexample {
                                graph: graph_label(g),
                                expected: format!("variety equality over F_{q}"),
                                actual: format!("mismatch at point {:?}", witness.map(|w| w.coordinates)),
                            })
                        }
                        Err(e) => {
                            return Some(Counterexample {
                                graph: graph_label(g),
                                expected: format!("variety equality over F_{q}"),
                                actual: format!("oracle refused: {e}"),
                            })
                        }
                    }
                }
                None
            })
            .collect();
        run.record(outcomes);
    }
    Ok(run.finish())
}

/// Radicality of the edge ideal versus its combinatorial prediction.
fn radical_suite(req: &SuiteRequest) -> Result<TheoremReport> {
    let max_n = cap(req.max_n, 6, MAX_N_ALL_GRAPHS, "radical")?;
    let mut run = SuiteRun::new(
        "radical",
        "the edge ideal of a connected closed labeling is radical exactly for the complete graph or the two-interval clique complex [1,n-1],[2,n]",
        "exact",
        params(max_n, "connected closed", req),
    );
    for n in 2..=max_n {
        let graphs = enumerate_graphs(n, GraphFilter::ConnectedClosed)?;
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let predicted = predicted_radical(g).expect("connected closed");
                let actual = radical_check(g).expect("connected closed");
                if predicted == actual {
                    None
                } else {
                    Some(Counterexample {
                        graph: graph_label(g),
                        expected: format!("radical = {predicted}"),
                        actual: format!("radical = {actual}"),
                    })
                }
            })
            .collect();
        run.record(outcomes);
    }
    Ok(run.finish())
}

/// Set-theoretic complete intersection: mutual radical membership of the
/// edge-ideal and path-ideal generators, plus the height count n - 1.
fn stci_suite(req: &SuiteRequest) -> Result<TheoremReport> {
    let max_n = cap(req.max_n, 6, MAX_N_ALL_GRAPHS, "stci")?;
    let mut run = SuiteRun::new(
        "stci",
        "every connected closed edge ideal has the same radical as the path ideal, which has height-many generators (n - 1)",
        "exact",
        params(max_n, "connected closed", req),
    );
    for n in 2..=max_n {
        let graphs = enumerate_graphs(n, GraphFilter::ConnectedClosed)?;
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let report = stci_witness(g).expect("connected closed");
                if report.ok() {
                    None
                } else {
                    Some(Counterexample {
                        graph: graph_label(g),
                        expected: format!(
                            "mutual radical membership; height {}",
                            report.expected_height
                        ),
                        actual: format!(
                            "minors outside the path radical: {:?}; path minors outside: {:?}; height {}",
                            report.failing_forward, report.failing_backward, report.height
                        ),
                    })
                }
            })
            .collect();
        run.record(outcomes);
    }
    Ok(run.finish())
}

/// Regularity bound: certified regularity at most the clique count for
/// every closed labeling; the consecutive-clique family is sharp with
/// the predicted numerator; the three-clique example on [6] is strict;
/// two-clique labelings give exactly 2.
fn regularity_bound(req: &SuiteRequest) -> Result<TheoremReport> {
    let max_n = cap(req.max_n, 7, MAX_N_CLOSED, "regularity-bound")?;
    let remark_max = (max_n + 1).min(MAX_N_CLOSED);
    let mut run = SuiteRun::new(
        "regularity-bound",
        "certified regularity of closed labelings is bounded by the maximal clique count; consecutive-clique families attain it with numerator prod(1 + gap*t); overlapping cliques can be strict; two-clique labelings give 2",
        "exact",
        params(max_n, "closed labeled graphs", req),
    );
    // (a) the bound over every closed labeling
    for n in 1..=max_n.min(7) {
        let graphs = enumerate_graphs(n, GraphFilter::Closed)?;
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let r = g.maximal_cliques().expect("small graph").len();
                match regularity_cm(g) {
                    Ok(reg) if reg <= r => None,
                    Ok(reg) => Some(Counterexample {
                        graph: graph_label(g),
                        expected: format!("regularity <= {r}"),
                        actual: format!("regularity {reg}"),
                    }),
                    Err(e) => Some(Counterexample {
                        graph: graph_label(g),
                        expected: format!("certified regularity <= {r}"),
                        actual: format!("{e}"),
                    }),
                }
            })
            .collect();
        run.record(outcomes);
    }
    // (b) sharp family: consecutive cliques [a_i, a_{i+1}]
    for n in 2..=remark_max {
        let families = consecutive_clique_families(n);
        let outcomes: Vec<Option<Counterexample>> = families
            .par_iter()
            .map(|cuts| check_remark_family(n, cuts))
            .collect::<Result<Vec<_>>>()?;
        run.record(outcomes);
    }
    // (c) strictness example on [6]
    {
        let g = LabeledGraph::from_cliques(6, &[(1, 4), (3, 5), (4, 6)]).unwrap();
        let reg = regularity_cm(&g)?;
        run.cases_run += 1;
        if reg != 2 {
            run.counterexamples.push(Counterexample {
                graph: graph_label(&g),
                expected: "regularity 2 (strictly below 3 cliques)".into(),
                actual: format!("regularity {reg}"),
            });
        }
    }
    // (d) every two-clique closed labeling has regularity exactly 2
    for n in 2..=remark_max {
        let graphs: Vec<LabeledGraph> = enumerate_graphs(n, GraphFilter::Closed)?
            .into_iter()
            .filter(|g| {
                g.maximal_cliques()
                    .map(|c| c.len() == 2)
                    .unwrap_or(false)
            })
            .collect();
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| match regularity_cm(g) {
                Ok(2) => None,
                Ok(reg) => Some(Counterexample {
                    graph: graph_label(g),
                    expected: "regularity 2 for two maximal cliques".into(),
                    actual: format!("regularity {reg}"),
                }),
                Err(e) => Some(Counterexample {
                    graph: graph_label(g),
                    expected: "certified regularity 2 for two maximal cliques".into(),
                    actual: format!("{e}"),
                }),
            })
            .collect();
        run.record(outcomes);
    }
    Ok(run.finish())
}

/// All strictly increasing cut sequences 1 = a_1 < ... < a_{r+1} = n.
fn consecutive_clique_families(n: usize) -> Vec<Vec<usize>> {
    let interior: Vec<usize> = (2..n).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << interior.len()) {
        let mut cuts = vec![1];
        for (b, &v) in interior.iter().enumerate() {
            if mask & (1 << b) != 0 {
                cuts.push(v);
            }
        }
        cuts.push(n);
        out.push(cuts);
    }
    out.sort();
    out
}

fn check_remark_family(n: usize, cuts: &[usize]) -> Result<Option<Counterexample>> {
    let cliques: Vec<(usize, usize)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();
    let g = LabeledGraph::from_cliques(n, &cliques).expect("intervals are valid");
    let r = cliques.len();
    let init = initial_ideal(&buchberger(&scroll_edge_ideal(&g), REV));
    let series = reduced_series(&init)?;
    let expected = cuts.windows(2).fold(IntPoly::one(), |acc, w| {
        acc.mul(&IntPoly::from_coeffs(vec![1, (w[1] - w[0]) as i128]))
    });
    if series.numerator != expected {
        return Ok(Some(Counterexample {
            graph: graph_label(&g),
            expected: format!("numerator {}", expected.to_display()),
            actual: format!("numerator {}", series.numerator.to_display()),
        }));
    }
    let reg = regularity_cm(&g)?;
    if reg != r {
        return Ok(Some(Counterexample {
            graph: graph_label(&g),
            expected: format!("regularity exactly {r}"),
            actual: format!("regularity {reg}"),
        }));
    }
    Ok(None)
}

/// Degree-2 linear resolution: the binomial count test holds exactly for
/// complete graphs among closed labelings; the degree-2 graded dimension
/// always equals the edge count by the rank oracle.
fn linear_resolution(req: &SuiteRequest) -> Result<TheoremReport> {
    let max_n = cap(req.max_n, 6, MAX_N_ALL_GRAPHS, "linear-resolution")?;
    let rank_max = max_n.saturating_sub(1).min(5);
    let mut run = SuiteRun::new(
        "linear-resolution",
        "the degree-2 dimension count certifies a linear resolution exactly for complete graphs among closed labelings; dim (I)_2 = |E| by the rank oracle",
        "exact",
        params(max_n, "closed labeled graphs", req),
    );
    for n in 1..=max_n {
        let graphs = enumerate_graphs(n, GraphFilter::Closed)?;
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let test = linear_resolution_test(g).expect("closed");
                let complete = g.is_complete();
                if test == complete {
                    None
                } else {
                    Some(Counterexample {
                        graph: graph_label(g),
                        expected: format!("linear-resolution test = {complete} (complete: {complete})"),
                        actual: format!("linear-resolution test = {test}"),
                    })
                }
            })
            .collect();
        run.record(outcomes);
    }
    for n in 1..=rank_max {
        let graphs = enumerate_graphs(n, GraphFilter::All)?;
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let rank = graded_dim_by_rank(&scroll_edge_ideal(g), 2);
                if rank == g.num_edges() as u64 {
                    None
                } else {
                    Some(Counterexample {
                        graph: graph_label(g),
                        expected: format!("dim (I)_2 = {}", g.num_edges()),
                        actual: format!("rank oracle {rank}"),
                    })
                }
            })
            .collect();
        run.record(outcomes);
    }
    Ok(run.finish())
}

/// Engine self-checks: Hilbert coefficients against direct standard
/// monomial counts, Macaulay agreement between an ideal and its initial
/// ideal, reduced-basis idempotence, and the double dimension route.
fn self_checks(req: &SuiteRequest) -> Result<TheoremReport> {
    let max_n = cap(req.max_n, 5, MAX_N_ALL_GRAPHS, "self-checks")?;
    let mut run = SuiteRun::new(
        "self-checks",
        "Hilbert series coefficients match standard-monomial counts (d <= 6); Hilbert functions of an edge ideal and its initial ideal agree (d <= 4); reduced bases are idempotent; both Krull dimension routes agree",
        "exact",
        params(max_n, "closed graphs and a deterministic sample", req),
    );

    // (a) + (c) + (d): over every closed graph in budget
    for n in 1..=max_n {
        let graphs = enumerate_graphs(n, GraphFilter::Closed)?;
        let outcomes: Vec<Option<Counterexample>> = graphs
            .par_iter()
            .map(|g| {
                let gb = buchberger(&scroll_edge_ideal(g), REV);
                let init = initial_ideal(&gb);
                // Hilbert coefficients vs standard monomials
                let series = hilbert_numerator(&init).series_coeffs(init.num_vars(), 6);
                for d in 0..=6u32 {
                    if series[d as usize] != init.standard_monomials_of_degree(d) as i128 {
                        return Some(Counterexample {
                            graph: graph_label(g),
                            expected: format!(
                                "series coefficient {} in degree {d}",
                                init.standard_monomials_of_degree(d)
                            ),
                            actual: format!("{}", series[d as usize]),
                        });
                    }
                }
                // reduced-basis idempotence
                let again = buchberger(&Ideal::new(gb.num_vars(), gb.elements().to_vec()), REV);
                if again.elements() != gb.elements() {
                    return Some(Counterexample {
                        graph: graph_label(g),
                        expected: "idempotent reduced basis".into(),
                        actual: "second reduction changed the basis".into(),
                    });
                }
                // both dimension routes agree (hard failure surfaces here)
                if let Err(e) = krull_dim_monomial(&init) {
                    return Some(Counterexample {
                        graph: graph_label(g),
                        expected: "consistent dimension routes".into(),
                        actual: format!("{e}"),
                    });
                }
                None
            })
            .collect();
        run.record(outcomes);
    }

    // (b) Macaulay agreement on all graphs up to n = 4 plus a
    // deterministic sample at n = 5
    let mut macaulay: Vec<LabeledGraph> = Vec::new();
    for n in 1..=4.min(max_n) {
        macaulay.extend(enumerate_graphs(n, GraphFilter::All)?);
    }
    if max_n >= 5 {
        macaulay.extend(
            sample_masks(1 << 10, 64)
                .into_iter()
                .map(|m| LabeledGraph::from_mask(5, m)),
        );
    }
    let outcomes: Vec<Option<Counterexample>> = macaulay
        .par_iter()
        .map(|g| {
            let ideal = scroll_edge_ideal(g);
            for d in 0..=4u32 {
                let by_rank = quotient_hf_by_rank(&ideal, d);
                let by_initial = graded_dim_ideal(&ideal, d, REV);
                let total = crate::monomial_ideal::count_monomials_of_degree(ideal.num_vars(), d);
                if by_rank != total - by_initial {
                    return Some(Counterexample {
                        graph: graph_label(g),
                        expected: format!("Hilbert function {} in degree {d}", by_rank),
                        actual: format!("{}", total - by_initial),
                    });
                }
            }
            None
        })
        .collect();
    run.record(outcomes);
    Ok(run.finish())
}

/// Initial-ideal route used by per-graph reporting.
pub fn initial_of(g: &LabeledGraph) -> MonomialIdeal {
    initial_ideal(&buchberger(&scroll_edge_ideal(g), REV))
}

/// Leading monomial rendering helper for reports.
pub fn monomial_strings(ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| m.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_dims_passes() {
        let report = run_suite("figure-dims", &SuiteRequest::default()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.cases_run, 2);
    }

    #[test]
    fn gb_closed_small_sweep_counts() {
        let req = SuiteRequest {
            max_n: Some(3),
            ..Default::default()
        };
        let report = run_suite("gb-closed", &req).unwrap();
        assert_eq!(report.cases_run, 1 + 2 + 8);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("no-such-suite", &SuiteRequest::default()).is_err());
    }

    #[test]
    fn budget_refusal() {
        let req = SuiteRequest {
            max_n: Some(9),
            ..Default::default()
        };
        assert!(matches!(
            run_suite("regularity-bound", &req),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn radical_sweep_small() {
        let req = SuiteRequest {
            max_n: Some(4),
            ..Default::default()
        };
        let report = run_suite("radical", &req).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        // connected closed graphs on 2..4 vertices: 1 + 2 + 5
        assert_eq!(report.cases_run, 8);
    }

    #[test]
    fn reports_are_deterministic_across_workers() {
        let mut a = run_suite(
            "initial-dim",
            &SuiteRequest {
                max_n: Some(5),
                ..Default::default()
            },
        )
        .unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let mut b = pool
            .install(|| {
                run_suite(
                    "initial-dim",
                    &SuiteRequest {
                        max_n: Some(5),
                        workers: 1,
                        ..Default::default()
                    },
                )
            })
            .unwrap();
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        assert_eq!(a, b);
        assert_eq!(a.render_json(), b.render_json());
    }
}
