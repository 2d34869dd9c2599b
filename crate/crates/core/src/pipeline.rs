//! End-to-end runs: build a large-girth regular bipartite graph whose edge
//! count rules out a `(2k − 1)`-coloring, re-verify it from its serialized
//! bytes, and record the result; plus sweeps of the last-color usage
//! experiment.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bounds::{lemma1_certificate, Lemma1Certificate};
use crate::dimacs::{parse_dimacs, serialize_bipartite, GraphFile};
use crate::error::{Error, Result};
use crate::generator::{choose_n, generate_with, min_n, GenerateOptions};
use crate::graph::{Girth, Graph};
use crate::solver::{greedy_color, min_last_color_usage, Budget, OrderPolicy, UsageStatus};

/// Machine-readable result of building or certifying one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub k: usize,
    pub g: usize,
    pub n: usize,
    pub seed: Option<u64>,
    pub graph_path: Option<String>,
    pub graph_sha256: String,
    pub vertices: usize,
    pub m: usize,
    /// `None` for a forest.
    pub girth_measured: Option<usize>,
    pub bipartite: bool,
    pub regular: bool,
    pub certificate: Lemma1Certificate,
    /// `2k − 1`: the bound the instance is compared against (5 for cubic graphs).
    pub conjectured_bound: usize,
    pub exceeds_conjectured_bound: bool,
    /// Colors used by a greedy strong coloring, if requested.
    pub solver_upper_bound: Option<usize>,
    pub conclusion: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Results of the independent checks.
#[derive(Clone, Copy, Debug)]
struct Checked {
    girth: Girth,
    certificate: Lemma1Certificate,
}

/// Recomputes every property from the graph alone. Each failing check is
/// reported by name.
fn check_instance(
    graph: &Graph,
    bipartition: Option<(usize, usize)>,
    k: usize,
    g: usize,
) -> Result<Checked> {
    match bipartition {
        Some((left, _)) => {
            if let Some((_, (u, v))) = graph.edges().find(|&(_, (u, v))| (u < left) == (v < left)) {
                return Err(Error::check(
                    "bipartite",
                    format!("edge {{{}, {}}} stays inside one side", u + 1, v + 1),
                ));
            }
        }
        None => {
            if graph.two_coloring().is_none() {
                return Err(Error::check("bipartite", "graph contains an odd cycle"));
            }
        }
    }
    if let Err(Error::NotRegular { vertex, degree, .. }) = graph.check_regular(k) {
        return Err(Error::check(
            "regular",
            format!("vertex {} has degree {degree}, expected {k}", vertex + 1),
        ));
    }
    let girth = graph.girth();
    if !girth.at_least(g) {
        return Err(Error::check("girth", format!("measured {girth} < {g}")));
    }
    let certificate =
        lemma1_certificate(graph, k).map_err(|e| Error::check("certificate", e.to_string()))?;
    if certificate.divisible {
        return Err(Error::check(
            "divisibility",
            format!("{} divides m = {}", certificate.window, certificate.m),
        ));
    }
    if !certificate.is_consistent() || certificate.chi_s_lower != 2 * k {
        return Err(Error::check(
            "certificate",
            "certificate arithmetic is inconsistent",
        ));
    }
    Ok(Checked { girth, certificate })
}

fn conclusion(k: usize, g: usize, cert: &Lemma1Certificate) -> String {
    let base = format!(
        "{k}-regular bipartite, girth >= {g}, m = {} not divisible by {}: every color class has at most {} edges, so chi'_s >= {}",
        cert.m, cert.window, cert.max_class_size, cert.chi_s_lower
    );
    if k == 3 {
        format!("{base} > 5; a subcubic bipartite graph of girth >= {g} needing more than 5 colors")
    } else {
        format!("{base} > {}", cert.window)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CounterexampleOptions {
    /// Also record a greedy strong-coloring upper bound.
    pub solver_upper_bound: bool,
}

/// A generated instance and its record. `dimacs` holds the exact bytes the
/// record's hash refers to.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub record: CounterexampleRecord,
    pub dimacs: String,
}

/// Generates with `n = choose_n(k, g)`, then re-parses the serialized graph
/// and checks it from scratch.
pub fn build_counterexample(
    g: usize,
    k: usize,
    seed: u64,
    options: CounterexampleOptions,
) -> Result<Counterexample> {
    let n = choose_n(k, g)?;
    let (graph, _trace) = generate_with(k, g, n, seed, GenerateOptions::default())?;
    let dimacs = serialize_bipartite(&graph);
    drop(graph);

    let file = parse_dimacs(&dimacs)?;
    let mut record = certify_file(&file, dimacs.as_bytes(), k, Some(g), options)?;
    if record.vertices != 2 * n {
        return Err(Error::check(
            "order",
            format!("{} vertices, expected {}", record.vertices, 2 * n),
        ));
    }
    record.seed = Some(seed);
    Ok(Counterexample { record, dimacs })
}

/// Re-verifies a DIMACS file given as text. `g` defaults to the measured girth.
pub fn certify_graph(text: &str, k: usize, g: Option<usize>) -> Result<CounterexampleRecord> {
    let file = parse_dimacs(text)?;
    certify_file(
        &file,
        text.as_bytes(),
        k,
        g,
        CounterexampleOptions::default(),
    )
}

fn certify_file(
    file: &GraphFile,
    bytes: &[u8],
    k: usize,
    g: Option<usize>,
    options: CounterexampleOptions,
) -> Result<CounterexampleRecord> {
    if k < 2 {
        return Err(Error::invalid(format!("k must be at least 2, got {k}")));
    }
    let graph = &file.graph;
    let measured = graph.girth();
    let g = g.or(measured.finite()).unwrap_or(0);
    let checked = check_instance(graph, file.bipartition, k, g)?;
    let cert = checked.certificate;
    let solver_upper_bound = options
        .solver_upper_bound
        .then(|| greedy_color(&graph.conflict_graph(), OrderPolicy::Saturation, 0).color_count());
    Ok(CounterexampleRecord {
        k,
        g,
        n: graph.vertex_count() / 2,
        seed: None,
        graph_path: None,
        graph_sha256: sha256_hex(bytes),
        vertices: graph.vertex_count(),
        m: graph.edge_count(),
        girth_measured: checked.girth.finite(),
        bipartite: true,
        regular: true,
        certificate: cert,
        conjectured_bound: 2 * k - 1,
        exceeds_conjectured_bound: cert.chi_s_lower > 2 * k - 1,
        solver_upper_bound,
        conclusion: conclusion(k, g, &cert),
    })
}

/// One instance of the last-color usage experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvidenceRow {
    pub source: String,
    pub k: usize,
    pub g: Option<usize>,
    pub n: usize,
    pub seed: Option<u64>,
    pub m: usize,
    /// `m − (2k − 1)⌊m/(2k − 1)⌋`.
    pub cap: usize,
    pub usage: Option<usize>,
    pub status: String,
    pub flagged: bool,
    /// Full coloring for flagged rows, in the graph's edge order.
    pub coloring: Option<Vec<u32>>,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conjecture2Evidence {
    pub k: usize,
    pub rows: Vec<EvidenceRow>,
    pub flagged: usize,
}

impl Conjecture2Evidence {
    fn from_rows(k: usize, rows: Vec<EvidenceRow>) -> Self {
        let flagged = rows.iter().filter(|r| r.flagged).count();
        Conjecture2Evidence { k, rows, flagged }
    }

    /// Plain-text table.
    pub fn to_table(&self) -> String {
        let mut out = String::from("source\tk\tg\tn\tseed\tm\tcap\tusage\tstatus\tflagged\n");
        for r in &self.rows {
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.source,
                r.k,
                opt(r.g.map(|v| v.to_string())),
                r.n,
                opt(r.seed.map(|v| v.to_string())),
                r.m,
                r.cap,
                opt(r.usage.map(|v| v.to_string())),
                r.status,
                if r.flagged { "FLAG" } else { "" }
            ));
        }
        out
    }
}

fn status_name(status: UsageStatus) -> &'static str {
    match status {
        UsageStatus::Exact => "exact",
        UsageStatus::BestFound => "best-found",
        UsageStatus::Infeasible => "infeasible",
        UsageStatus::Timeout => "timeout",
    }
}

/// Runs the usage minimization on one graph.
///
/// A row is flagged when the exact usage exceeds the cap, or when no
/// `2k`-coloring exists at all.
pub fn usage_row(graph: &Graph, k: usize, budget: Budget, source: String) -> Result<EvidenceRow> {
    let cg = graph.conflict_graph();
    let out = min_last_color_usage(&cg, k, budget)?;
    let flagged = out.exceeds_cap() || out.status == UsageStatus::Infeasible;
    Ok(EvidenceRow {
        source,
        k,
        g: graph.girth().finite(),
        n: graph.vertex_count() / 2,
        seed: None,
        m: out.m,
        cap: out.cap,
        usage: out.usage,
        status: status_name(out.status).to_string(),
        flagged,
        coloring: if flagged {
            out.coloring.as_ref().map(|c| c.colors().to_vec())
        } else {
            None
        },
        nodes: out.nodes,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub k: usize,
    pub g: usize,
    pub count: usize,
    pub seed: u64,
    /// Side size of the first instance; defaults to `min_n(k, g)`. Instance
    /// `i` uses `n + i` and `seed + i`.
    pub n: Option<usize>,
    pub force: bool,
    pub budget: Budget,
}

/// Generates `count` instances and runs the usage minimization on each, in
/// parallel. Row order follows the instance index.
pub fn conjecture2_sweep(config: SweepConfig) -> Result<Conjecture2Evidence> {
    let base_n = match config.n {
        Some(n) => n,
        None => min_n(config.k, config.g)?,
    };
    let rows = (0..config.count)
        .into_par_iter()
        .map(|i| {
            let n = base_n + i;
            let seed = config.seed.wrapping_add(i as u64);
            let options = GenerateOptions {
                force: config.force,
            };
            let row = match generate_with(config.k, config.g, n, seed, options) {
                Ok((graph, _)) => usage_row(
                    graph.as_graph(),
                    config.k,
                    config.budget,
                    "generated".into(),
                )?,
                Err(Error::ConstructionFailed(msg)) => EvidenceRow {
                    source: format!("generated: {msg}"),
                    k: config.k,
                    g: None,
                    n,
                    seed: None,
                    m: config.k * n,
                    cap: (config.k * n) % (2 * config.k - 1),
                    usage: None,
                    status: "construction-failed".into(),
                    flagged: false,
                    coloring: None,
                    nodes: 0,
                },
                Err(err) => return Err(err),
            };
            Ok(EvidenceRow {
                seed: Some(seed),
                n,
                ..row
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Conjecture2Evidence::from_rows(config.k, rows))
}

/// Runs the usage minimization on externally supplied graphs.
pub fn conjecture2_on_files(
    files: &[(String, String)],
    k: usize,
    budget: Budget,
) -> Result<Conjecture2Evidence> {
    let rows = files
        .par_iter()
        .map(|(name, text)| {
            let file = parse_dimacs(text)?;
            usage_row(&file.graph, k, budget, name.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Conjecture2Evidence::from_rows(k, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_degree_two_counterexample() {
        let out = build_counterexample(6, 2, 0, CounterexampleOptions::default()).unwrap();
        let r = &out.record;
        assert_eq!((r.n, r.m, r.vertices), (7, 14, 14));
        assert_eq!(r.girth_measured, Some(14));
        assert_eq!(r.certificate.chi_s_lower, 4);
        assert!(r.exceeds_conjectured_bound);
        assert_eq!(r.graph_sha256, sha256_hex(out.dimacs.as_bytes()));
    }

    #[test]
    fn certify_rejects_divisible_and_irregular() {
        // C6: 2-regular, m = 6 divisible by 3
        let c6 = "c bipartition 3 3\np edge 6 6\ne 1 4\ne 2 4\ne 2 5\ne 3 5\ne 3 6\ne 1 6\n";
        let err = certify_graph(c6, 2, None).unwrap_err();
        assert!(matches!(
            err,
            Error::VerificationFailed {
                check: "divisibility",
                ..
            }
        ));
        let err = certify_graph(c6, 3, None).unwrap_err();
        assert!(matches!(
            err,
            Error::VerificationFailed {
                check: "regular",
                ..
            }
        ));
        let err = certify_graph(c6, 2, Some(8)).unwrap_err();
        assert!(matches!(
            err,
            Error::VerificationFailed { check: "girth", .. }
        ));
    }

    #[test]
    fn certify_detects_odd_cycles() {
        let c5 = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";
        let err = certify_graph(c5, 2, None).unwrap_err();
        assert!(matches!(
            err,
            Error::VerificationFailed {
                check: "bipartite",
                ..
            }
        ));
    }

    #[test]
    fn cycle_sweep_rows() {
        let ev = conjecture2_sweep(SweepConfig {
            k: 2,
            g: 6,
            count: 5,
            seed: 1,
            n: None,
            force: false,
            budget: Budget::unlimited(),
        })
        .unwrap();
        assert_eq!(ev.rows.len(), 5);
        for (i, row) in ev.rows.iter().enumerate() {
            assert_eq!(row.n, 6 + i);
            assert_eq!(row.m, 2 * row.n);
            assert_eq!(row.cap, row.m % 3);
            assert_eq!(row.status, "exact");
            assert!(row.usage.unwrap() <= row.cap || row.flagged);
        }
    }
}
