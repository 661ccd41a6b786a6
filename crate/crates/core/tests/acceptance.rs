//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

mod common;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use pathshare::bounds::{bound_chen, bound_gutierrez, bound_main};
use pathshare::cli::{run_sweep, InputSource, OutputFormat, SweepConfig};
use pathshare::generators::{gnp, random_k_connected_with, tightness_witness};
use pathshare::longest::{
    enumerate_longest_paths, longest_path_length_bnb, longest_path_length_dp, DEFAULT_BUDGET,
};
use pathshare::machinery::{canonical_sigma, outside_edge_scan, fan_paths, lemma1_witness, Permutation, SigmaClass};
use pathshare::{check_graph, parse_graph6, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use common::{brute_connectivity, ceil_div, witness_certificate_ok, naive_longest};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

/// One swept graph with the tool's row and the oracle's values alongside.
struct SweepRecord {
    graph: Graph,
    row: Value,
    kappa: usize,
    length: usize,
    min_shared: usize,
    sets: Vec<u32>,
}

fn data_file() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/connected_le8.g6")
}

fn sweep_le8() -> (Vec<SweepRecord>, Duration, String) {
    let config = SweepConfig {
        input: InputSource::File(data_file()),
        budget: DEFAULT_BUDGET,
        workers: 4,
        format: OutputFormat::Jsonl,
        only_fails: false,
    };
    let start = Instant::now();
    let mut out = Vec::new();
    let summary = run_sweep(&config, &mut out).expect("sweep runs");
    let elapsed = start.elapsed();

    let lines: Vec<String> = std::fs::read_to_string(data_file())
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect();
    let rows: Vec<Value> = String::from_utf8(out)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), lines.len(), "one row per input graph");
    let records = lines
        .par_iter()
        .zip(rows)
        .map(|(line, row)| {
            assert_eq!(row["graph"], line.as_str(), "rows keep input order");
            let graph = parse_graph6(line).unwrap();
            let naive = naive_longest(&graph);
            SweepRecord {
                kappa: brute_connectivity(&graph),
                length: naive.length,
                min_shared: naive.min_shared(),
                sets: naive.sets,
                graph,
                row,
            }
        })
        .collect();
    (records, elapsed, summary.to_string())
}

fn as_usize(v: &Value) -> Option<usize> {
    v.as_u64().map(|x| x as usize)
}

fn criterion_1(records: &[SweepRecord], elapsed: Duration) -> Outcome {
    let mut failures = Vec::new();
    for r in records {
        let n = r.graph.n() as i64;
        let k = r.kappa as i64;
        let l = r.min_shared as i64;
        let mut bad = Vec::new();
        if as_usize(&r.row["kappa"]) != Some(r.kappa) {
            bad.push(format!("kappa {} vs oracle {}", r.row["kappa"], r.kappa));
        }
        if as_usize(&r.row["min_shared"]) != Some(r.min_shared) {
            bad.push(format!("L {} vs oracle {}", r.row["min_shared"], r.min_shared));
        }
        if (1..=5).contains(&k) && l < k {
            bad.push(format!("L={l} < k={k}"));
        }
        if k >= 1 && l < k.min(ceil_div(8 * k - n - 4, 3)) {
            bad.push(format!("L={l} below the general bound"));
        }
        for name in ["hippchen", "main", "gutierrez", "submain"] {
            let v = r.row[format!("verdict_{name}")].as_str().unwrap_or("missing");
            if matches!(v, "fail" | "conjectural-fail" | "error" | "incomplete" | "missing") {
                bad.push(format!("{name} verdict {v}"));
            }
        }
        if !bad.is_empty() {
            failures.push(format!("{}: {}", r.row["graph"], bad.join(", ")));
        }
    }
    let mut by_n = [0usize; 9];
    for r in records {
        by_n[r.graph.n()] += 1;
    }
    let counts_ok = by_n[1..] == [1, 1, 2, 6, 21, 112, 853, 11117];
    let fast = elapsed < Duration::from_secs(600);
    let pass = failures.is_empty() && counts_ok && fast;
    Outcome::new(
        pass,
        format!(
            "{} graphs (per n {:?}), {} failures, {:.1}s with 4 workers{}",
            records.len(),
            &by_n[1..],
            failures.len(),
            elapsed.as_secs_f64(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for k in 1..=3 {
        let start = Instant::now();
        let report = check_graph(&tightness_witness(k).unwrap(), DEFAULT_BUDGET);
        let elapsed = start.elapsed();
        let ok = report.min_shared == Some(k) && report.complete && elapsed < Duration::from_secs(120);
        pass &= ok;
        parts.push(format!(
            "k={k}: L={:?} paths={} {:.2}s",
            report.min_shared,
            report.path_count,
            elapsed.as_secs_f64()
        ));
        if k == 3 {
            pass &= report.path_count == 5040;
        }
    }
    Outcome::new(pass, parts.join("; "))
}

fn criterion_3(records: &[SweepRecord]) -> Outcome {
    let mut checked = 0;
    let mut failures = 0;
    for r in records.iter().filter(|r| r.kappa >= 3) {
        checked += 1;
        let (k, l) = (r.kappa as i64, r.length as i64);
        let bound = (4 * k - l - 3).min(k);
        let row_ok = r.row["verdict_submain"] != "fail";
        if (r.min_shared as i64) < bound || !row_ok {
            failures += 1;
        }
    }
    Outcome::new(failures == 0 && checked > 0, format!("{checked} graphs with kappa >= 3, {failures} failures"))
}

fn criterion_4(records: &[SweepRecord]) -> Outcome {
    let targets: Vec<&SweepRecord> = records.iter().filter(|r| r.kappa >= 3).collect();
    let results: Vec<(usize, usize, usize, bool)> = targets
        .par_iter()
        .map(|r| {
            let adj = common::adjacency(&r.graph);
            let all = (1u32 << r.graph.n()) - 1;
            let (mut instances, mut violations) = (0, 0);
            for &set in &r.sets {
                let outside = all & !set;
                for q in 0..r.graph.n() {
                    if outside >> q & 1 == 0 {
                        continue;
                    }
                    for q2 in q + 1..r.graph.n() {
                        if outside >> q2 & 1 == 1 && adj[q] >> q2 & 1 == 1 {
                            instances += 1;
                            let touched = ((adj[q] | adj[q2]) & set).count_ones() as i64;
                            if (r.length as i64) < 4 * r.kappa as i64 - 3 - touched {
                                violations += 1;
                            }
                        }
                    }
                }
            }
            let longest = enumerate_longest_paths(&r.graph).unwrap();
            let scan = outside_edge_scan(&r.graph, r.kappa, &longest).unwrap();
            let agree = scan.instances == instances && scan.violations.len() == violations;
            (instances, violations, scan.violations.len(), agree)
        })
        .collect();
    let instances: usize = results.iter().map(|r| r.0).sum();
    let violations: usize = results.iter().map(|r| r.1 + r.2).sum();
    let disagreements = results.iter().filter(|r| !r.3).count();
    Outcome::new(
        violations == 0 && disagreements == 0,
        format!(
            "{} graphs, {instances} (path, outside edge) instances, {violations} violations, {disagreements} oracle disagreements",
            targets.len()
        ),
    )
}

fn criterion_5() -> Outcome {
    let (mut certified, mut vacuous, mut failures) = (0, 0, Vec::new());
    for case in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1e44a1);
        rng.set_stream(case);
        let k = 2 + (case % 2) as usize;
        let n = rng.gen_range(8..=12);
        let p = if k == 2 { 0.4 } else { 0.55 };
        let g = random_k_connected_with(n, p, k, &mut rng, 10_000).unwrap();
        let longest = enumerate_longest_paths(&g).unwrap();
        let sets = longest.distinct_vertex_sets();
        let pair = sets.iter().enumerate().find_map(|(a, &(sa, pa))| {
            sets[a + 1..]
                .iter()
                .find(|(sb, _)| sa.intersection(*sb).len() < k)
                .map(|&(_, pb)| (pa, pb))
        });
        let Some((pa, pb)) = pair else {
            vacuous += 1;
            continue;
        };
        let (p, q) = (&longest.paths[pa], &longest.paths[pb]);
        match lemma1_witness(&g, p, q, k) {
            Ok(w) => match witness_certificate_ok(&g, p, q, &w.path, w.index) {
                Ok(()) => certified += 1,
                Err(e) => failures.push(format!("case {case}: {e}")),
            },
            Err(e) => failures.push(format!("case {case}: {e}")),
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!(
            "200 cases: {certified} certificates validated, {vacuous} vacuous (no longest pair sharing < k vertices), {} failures{}",
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut per_k = [0usize; 6];
    for case in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xfa4);
        rng.set_stream(case);
        let k = 1 + (case % 5) as usize;
        let n = rng.gen_range(k + 2..=12);
        let p = (0.35 + 0.1 * k as f64).min(0.95);
        let g = random_k_connected_with(n, p, k, &mut rng, 100_000).unwrap();
        let x = rng.gen_range(0..n);
        let others: Vec<usize> = (0..n).filter(|&v| v != x).collect();
        let size = rng.gen_range(k..=others.len());
        let targets: VertexSet = rand::seq::index::sample(&mut rng, others.len(), size)
            .into_iter()
            .map(|i| others[i])
            .collect();
        per_k[k] += 1;
        let fan = match fan_paths(&g, x, targets, k) {
            Ok(fan) => fan,
            Err(e) => {
                failures.push(format!("case {case}: {e}"));
                continue;
            }
        };
        let mut problems = Vec::new();
        if fan.paths.len() != k {
            problems.push(format!("{} paths", fan.paths.len()));
        }
        for path in &fan.paths {
            let seq = path.vertices();
            if seq[0] != x || !targets.contains(*seq.last().unwrap()) {
                problems.push(format!("{path} does not run from x into Y"));
            }
            if seq.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                problems.push(format!("{path} uses a non-edge"));
            }
            if seq[1..seq.len() - 1].iter().any(|&v| targets.contains(v) || v == x) {
                problems.push(format!("{path} passes through Y"));
            }
        }
        let mut ends: Vec<usize> = fan.paths.iter().map(|p| *p.vertices().last().unwrap()).collect();
        ends.sort_unstable();
        ends.dedup();
        if ends.len() != fan.paths.len() {
            problems.push("terminals repeat".into());
        }
        for (a, pa) in fan.paths.iter().enumerate() {
            for pb in &fan.paths[a + 1..] {
                let common: Vec<&usize> = pa.vertices().iter().filter(|v| pb.vertices().contains(v)).collect();
                if common != [&x] {
                    problems.push(format!("{pa} and {pb} share {common:?}"));
                }
            }
        }
        if !problems.is_empty() {
            failures.push(format!("case {case}: {}", problems.join(", ")));
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!(
            "200 cases (k=1..5: {:?}), {} failures{}",
            &per_k[1..],
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn criterion_7() -> Outcome {
    let expected = [
        "(1), (14)(23)",
        "(14), (23)",
        "(13), (24), (1234), (1432)",
        "(12), (34), (1324), (1423)",
        "(123), (124), (132), (134), (142), (143), (234), (243)",
        "(12)(34), (13)(24)",
        "(1243), (1342)",
    ];
    let mut buckets: Vec<Vec<String>> = vec![Vec::new(); 7];
    for sigma in Permutation::all() {
        buckets[usize::from(canonical_sigma(sigma).index) - 1].push(sigma.to_string());
    }
    let mut mismatches = Vec::new();
    for (class, want) in SigmaClass::all().iter().zip(expected) {
        let mut got = buckets[usize::from(class.index) - 1].clone();
        got.sort_by_key(|s| (s.len(), s.clone()));
        let listed: Vec<String> = class.members().iter().map(ToString::to_string).collect();
        if got.join(", ") != want || listed.join(", ") != want {
            mismatches.push(format!("sigma{} got {{{}}}", class.index, got.join(", ")));
        }
    }
    let sizes: Vec<usize> = buckets.iter().map(Vec::len).collect();
    Outcome::new(
        mismatches.is_empty() && sizes == [2, 2, 4, 4, 8, 2, 2],
        format!("orbit sizes {sizes:?}{}", mismatches.first().map(|m| format!("; {m}")).unwrap_or_default()),
    )
}

fn criterion_8() -> Outcome {
    let mut mismatches = 0;
    let mut saturated = 0;
    for k in 1..=10i64 {
        for n in 1..=60i64 {
            let main = Ratio::new(8 * k - n - 4, 3).ceil().to_integer().min(k);
            let gutierrez = Ratio::new(8 * k - n + 2, 5).ceil().to_integer();
            let (k_u, n_u) = (k as usize, n as usize);
            if bound_main(k_u, n_u) != main || bound_gutierrez(k_u, n_u) != gutierrez {
                mismatches += 1;
            }
            if Ratio::from_integer(k) >= Ratio::new(n + 2, 5) {
                saturated += 1;
                if bound_main(k_u, n_u) != k {
                    mismatches += 1;
                }
            }
        }
    }
    let chen = bound_chen(1);
    let chen_ok = (chen - 0.2615).abs() < 1e-3;
    Outcome::new(
        mismatches == 0 && chen_ok,
        format!("600 grid points, {saturated} with k >= (n+2)/5, {mismatches} mismatches; chen(1) = {chen:.6}"),
    )
}

fn criterion_9() -> Outcome {
    let mut disagreements = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dac1e);
    for case in 0..500 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.15..0.9);
        let g = loop {
            let g = gnp(n, p, &mut rng).unwrap();
            if g.is_connected() {
                break g;
            }
        };
        let dp = longest_path_length_dp(&g).unwrap();
        let bnb = longest_path_length_bnb(&g).unwrap();
        let naive = naive_longest(&g).length;
        if dp != bnb || bnb != naive {
            disagreements.push(format!("case {case} {}: dp={dp} bnb={bnb} naive={naive}", pathshare::encode_graph6(&g)));
        }
    }
    Outcome::new(
        disagreements.is_empty(),
        format!(
            "500 graphs, {} disagreements{}",
            disagreements.len(),
            disagreements.first().map(|d| format!("; first: {d}")).unwrap_or_default()
        ),
    )
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let (records, elapsed, summary) = sweep_le8();
    println!("sweep {summary}");
    let outcomes = [
        ("exhaustive sweep n <= 8", criterion_1(&records, elapsed)),
        ("tightness witnesses", criterion_2()),
        ("min{4k-l-3, k} bound on sweep", criterion_3(&records)),
        ("outside-edge inequality on sweep", criterion_4(&records)),
        ("rotation witness suite", criterion_5()),
        ("fan suite", criterion_6()),
        ("sigma canonicalization", criterion_7()),
        ("bound formula grid", criterion_8()),
        ("longest-path oracle equivalence", criterion_9()),
    ];
    let mut all = true;
    for (i, (name, outcome)) in outcomes.iter().enumerate() {
        all &= outcome.pass;
        println!(
            "criterion {} [{name}]: {} ({})",
            i + 1,
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
