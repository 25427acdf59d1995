//! `scrollbei`: construct the scroll binomial edge ideal of a labeled
//! graph, inspect its Groebner data, and run theorem-verification sweeps
//! over enumerated graph families.
//!
//! Exit codes: 0 success / suite passed, 1 suite found counterexamples,
//! 2 usage or input error.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use scrollbei_core::graph::{parse_clique_list, parse_graph};
use scrollbei_core::hilbert::{reduced_series, CmCertificate};
use scrollbei_core::report::graph_label;
use scrollbei_core::ring::render;
use scrollbei_core::suites::{self, run_suite, SuiteRequest};
use scrollbei_core::*;

#[derive(Parser)]
#[command(
    name = "scrollbei",
    about = "Scroll binomial edge ideals of labeled graphs: Groebner bases, Hilbert series, regularity, and exhaustive verification sweeps",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite over an enumerated graph family.
    Verify {
        /// Suite name. One of: figure-dims, gb-closed, initial-dim,
        /// saturation, minimal-primes, radical, stci, regularity-bound,
        /// linear-resolution, self-checks.
        suite: String,
        /// Largest vertex count to sweep (suite-specific default; hard
        /// caps: 6 for all-graph sweeps, 8 for closed-graph sweeps).
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        /// Field primes for variety evidence (repeatable).
        #[arg(long = "q")]
        q: Vec<u64>,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Compute and print objects attached to a single graph.
    Show {
        #[arg(value_enum)]
        command: ShowCommand,
        /// Read the graph from a file in the `n/e/cliques` text format.
        #[arg(long, conflicts_with = "cliques")]
        file: Option<String>,
        /// Inline clique intervals, e.g. "[1,4] [3,5] [4,6]".
        #[arg(long)]
        cliques: Option<String>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum ShowCommand {
    /// Reduced Groebner basis of the edge ideal under graded revlex.
    Groebner,
    /// Minimal generators of the initial ideal.
    Initial,
    /// Krull dimension of the quotient.
    Dim,
    /// Reduced Hilbert series numerator P(t) over (1-t)^dim.
    Hilbert,
    /// Certified Castelnuovo-Mumford regularity of the quotient.
    Regularity,
    /// Predicted minimal primes (connected closed graphs).
    Primes,
    /// Saturation certificates for every vertex pair, plus the
    /// Cohen-Macaulay certificate when the labeling is closed.
    Certificates,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            suite,
            max_n,
            q,
            workers,
            json,
        } => {
            if workers > 0 {
                // ignore failure: the global pool can only be built once
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build_global();
            }
            let req = SuiteRequest {
                max_n,
                field_primes: if q.is_empty() { vec![3, 5] } else { q },
                workers,
            };
            let report = run_suite(&suite, &req)?;
            if json {
                println!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Show {
            command,
            file,
            cliques,
            json,
        } => {
            let graph = load_graph(file.as_deref(), cliques.as_deref())?;
            show(command, &graph, json)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_graph(file: Option<&str>, cliques: Option<&str>) -> Result<LabeledGraph> {
    match (file, cliques) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
            parse_graph(&text)
        }
        (None, Some(spec)) => {
            let cliques = parse_clique_list(spec).map_err(Error::InvalidInput)?;
            let n = cliques.iter().map(|&(_, b)| b).max().unwrap_or(1);
            LabeledGraph::from_cliques(n, &cliques)
        }
        _ => Err(Error::InvalidInput(
            "provide exactly one of --file or --cliques".into(),
        )),
    }
}

fn show(command: ShowCommand, g: &LabeledGraph, as_json: bool) -> Result<()> {
    let n = g.num_vertices();
    let ring = PolyRing::for_vertices(n);
    let rev = MonomialOrder::GradedRevLex;
    match command {
        ShowCommand::Groebner => {
            let gb = buchberger(&scroll_edge_ideal(g), rev);
            let elements: Vec<String> = gb
                .elements()
                .iter()
                .map(|p| render(p, &ring, rev))
                .collect();
            if as_json {
                emit(json!({
                    "command": "groebner",
                    "graph": graph_label(g),
                    "generator_count": g.num_edges(),
                    "basis": elements,
                    "is_generating_set_groebner": is_groebner(&scroll_edge_ideal(g), rev),
                }));
            } else {
                println!("reduced Groebner basis ({} elements):", elements.len());
                for e in &elements {
                    println!("  {e}");
                }
            }
        }
        ShowCommand::Initial => {
            let init = suites::initial_of(g);
            let gens = suites::monomial_strings(init.min_gens());
            if as_json {
                emit(json!({
                    "command": "initial",
                    "graph": graph_label(g),
                    "min_gens": gens,
                    "primary_support_prime": init.is_primary_support_prime(),
                }));
            } else {
                println!("initial ideal minimal generators: {}", gens.join(", "));
            }
        }
        ShowCommand::Dim => {
            let dim = suites::quotient_dim(g)?;
            let c = g.connected_components().len();
            if as_json {
                emit(json!({
                    "command": "dim",
                    "graph": graph_label(g),
                    "dim": dim,
                    "components": c,
                }));
            } else {
                println!("dim = {dim} (components: {c})");
            }
        }
        ShowCommand::Hilbert => {
            let series = reduced_series(&suites::initial_of(g))?;
            let coeffs: Vec<i128> = series.numerator.coeffs().to_vec();
            if as_json {
                emit(json!({
                    "command": "hilbert",
                    "graph": graph_label(g),
                    "numerator": series.numerator.to_display(),
                    "numerator_coeffs": coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>(),
                    "denominator_exponent": series.denominator_exponent,
                }));
            } else {
                println!(
                    "P(t) = {} over (1 - t)^{}",
                    series.numerator.to_display(),
                    series.denominator_exponent
                );
            }
        }
        ShowCommand::Regularity => {
            let reg = regularity_cm(g)?;
            let r = g.maximal_cliques()?.len();
            if as_json {
                emit(json!({
                    "command": "regularity",
                    "graph": graph_label(g),
                    "regularity": reg,
                    "maximal_cliques": r,
                }));
            } else {
                println!("regularity = {reg} (maximal cliques: {r})");
            }
        }
        ShowCommand::Primes => {
            let primes = predicted_minimal_primes(g)?;
            let rendered: Vec<Vec<String>> = primes
                .iter()
                .map(|p| {
                    p.generators()
                        .iter()
                        .map(|f| render(f, &ring, rev))
                        .collect()
                })
                .collect();
            if as_json {
                emit(json!({
                    "command": "primes",
                    "graph": graph_label(g),
                    "minimal_primes": rendered,
                    "evidence": "predicted; variety-level evidence via the minimal-primes suite",
                }));
            } else {
                println!("predicted minimal primes ({}):", rendered.len());
                for p in &rendered {
                    println!("  ({})", p.join(", "));
                }
            }
        }
        ShowCommand::Certificates => {
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
            let mut certs = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let cert = saturation_certificate(g, i, j)?;
                    let verified = cert.verify(&ring)?;
                    certs.push((i, j, cert, verified));
                }
            }
            let cm = if g.is_closed_labeling() {
                Some(certify_cm(g)?)
            } else {
                None
            };
            if as_json {
                let cert_json: Vec<_> = certs
                    .iter()
                    .map(|(i, j, cert, ok)| {
                        json!({
                            "pair": [i, j],
                            "path": cert.path,
                            "multiplier": cert.multiplier.to_string(),
                            "verified": ok,
                        })
                    })
                    .collect();
                let cm_json = match &cm {
                    Some(CmCertificate::Certified { regular_vars }) => json!({
                        "certified": true,
                        "regular_sequence": regular_vars.iter().map(|v| format!("x{}", v + 1)).collect::<Vec<_>>(),
                    }),
                    Some(CmCertificate::Unavailable { reason }) => json!({
                        "certified": false,
                        "reason": reason,
                    }),
                    None => json!(null),
                };
                emit(json!({
                    "command": "certificates",
                    "graph": graph_label(g),
                    "saturation_certificates": cert_json,
                    "cm_certificate": cm_json,
                }));
            } else {
                for (i, j, cert, ok) in &certs {
                    println!(
                        "pair ({i},{j}): path {:?}, multiplier {}, verified {ok}",
                        cert.path,
                        cert.multiplier
                    );
                }
                match &cm {
                    Some(CmCertificate::Certified { regular_vars }) => println!(
                        "CM certificate: regular sequence {}",
                        regular_vars
                            .iter()
                            .map(|v| format!("x{}", v + 1))
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                    Some(CmCertificate::Unavailable { reason }) => {
                        println!("CM certificate unavailable: {reason}")
                    }
                    None => println!("CM certificate: labeling not closed"),
                }
            }
        }
    }
    Ok(())
}

fn emit(value: serde_json::Value) {
    let mut body = serde_json::Map::new();
    body.insert(
        "schema_version".to_string(),
        serde_json::Value::String(scrollbei_core::report::REPORT_SCHEMA_VERSION.to_string()),
    );
    if let serde_json::Value::Object(map) = value {
        body.extend(map);
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::Value::Object(body)).expect("valid json")
    );
}
