//! Per-graph verdicts: every bound evaluated against L(G).

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bounds::{bound_gutierrez, bound_hippchen, bound_main, bound_submain};
use crate::connectivity::vertex_connectivity;
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::longest::enumerate_longest_paths_with_budget;
use crate::path::PathPair;

/// Largest connectivity for which the conjectured bound is a theorem.
pub const PROVEN_HIPPCHEN_MAX_K: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    /// The bound is at most zero, so any graph meets it.
    VacuousPass,
    /// A hypothesis of the bound (connectivity) does not hold.
    Vacuous,
    /// Unproven range: the conjecture holds on this graph.
    Conjectural,
    /// Unproven range: the conjecture fails on this graph.
    ConjecturalFail,
    Fail,
    /// Enumeration hit its budget, so L(G) is unknown.
    Incomplete,
    Error,
}

impl Verdict {
    pub const ALL: [Verdict; 8] = [
        Verdict::Pass,
        Verdict::VacuousPass,
        Verdict::Vacuous,
        Verdict::Conjectural,
        Verdict::ConjecturalFail,
        Verdict::Fail,
        Verdict::Incomplete,
        Verdict::Error,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::VacuousPass => "vacuous-pass",
            Verdict::Vacuous => "vacuous",
            Verdict::Conjectural => "conjectural",
            Verdict::ConjecturalFail => "conjectural-fail",
            Verdict::Fail => "fail",
            Verdict::Incomplete => "incomplete",
            Verdict::Error => "error",
        }
    }

    /// A counterexample to a theorem or to the conjecture.
    pub fn is_failure(self) -> bool {
        matches!(self, Verdict::Fail | Verdict::ConjecturalFail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub hippchen: Verdict,
    pub main: Verdict,
    pub gutierrez: Verdict,
    pub submain: Verdict,
}

impl Verdicts {
    pub const NAMES: [&'static str; 4] = ["hippchen", "main", "gutierrez", "submain"];

    fn all(v: Verdict) -> Self {
        Verdicts { hippchen: v, main: v, gutierrez: v, submain: v }
    }

    pub fn iter(&self) -> [(&'static str, Verdict); 4] {
        [
            ("hippchen", self.hippchen),
            ("main", self.main),
            ("gutierrez", self.gutierrez),
            ("submain", self.submain),
        ]
    }

    pub fn any_failure(&self) -> bool {
        self.iter().iter().any(|(_, v)| v.is_failure())
    }
}

/// Everything computed for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    /// graph6 encoding.
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    /// Longest path length in edges; `None` for the empty graph.
    pub longest: Option<usize>,
    /// Longest paths found (a lower bound when incomplete).
    pub path_count: usize,
    pub complete: bool,
    /// L(G), when enumeration completed.
    pub min_shared: Option<usize>,
    pub bound_hippchen: i64,
    pub bound_main: i64,
    /// `min{κ, ⌈(8κ − n + 2)/5⌉}`. Uncapped, the formula exceeds `n` on
    /// near-complete graphs such as `K_4`.
    pub bound_gutierrez: i64,
    /// Only defined for κ ≥ 3.
    pub bound_submain: Option<i64>,
    pub verdicts: Verdicts,
    /// Set on rows where some verdict is a failure.
    pub witness: Option<PathPair>,
}

impl CheckReport {
    /// L(G) − bound for each bound that was checked (pass or fail).
    pub fn slacks(&self) -> [(&'static str, Option<i64>); 4] {
        let l = self.min_shared.map(|l| l as i64);
        let slack = |bound: Option<i64>, verdict: Verdict| match verdict {
            Verdict::Pass | Verdict::Fail | Verdict::Conjectural | Verdict::ConjecturalFail => {
                Some(l? - bound?)
            }
            _ => None,
        };
        [
            ("hippchen", slack(Some(self.bound_hippchen), self.verdicts.hippchen)),
            ("main", slack(Some(self.bound_main), self.verdicts.main)),
            ("gutierrez", slack(Some(self.bound_gutierrez), self.verdicts.gutierrez)),
            ("submain", slack(self.bound_submain, self.verdicts.submain)),
        ]
    }

    /// L(G) equals κ.
    pub fn hippchen_tight(&self) -> Option<bool> {
        self.min_shared.map(|l| self.kappa > 0 && l == self.kappa)
    }
}

fn judge(bound: i64, min_shared: usize) -> Verdict {
    if bound <= 0 {
        Verdict::VacuousPass
    } else if min_shared as i64 >= bound {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Runs the full pipeline on `g`: connectivity, longest-path enumeration
/// (bounded by `budget`), L(G), every bound and its verdict. Never fails;
/// problems become verdict values.
pub fn check_graph(g: &Graph, budget: usize) -> CheckReport {
    let (n, kappa) = (g.n(), vertex_connectivity(g));
    let mut report = CheckReport {
        graph: encode_graph6(g),
        n,
        m: g.m(),
        kappa,
        longest: None,
        path_count: 0,
        complete: true,
        min_shared: None,
        bound_hippchen: bound_hippchen(kappa),
        bound_main: bound_main(kappa, n),
        bound_gutierrez: bound_gutierrez(kappa, n).min(kappa as i64),
        bound_submain: None,
        verdicts: Verdicts::all(Verdict::Vacuous),
        witness: None,
    };
    let Ok(longest) = enumerate_longest_paths_with_budget(g, budget) else {
        return report; // empty graph
    };
    report.longest = Some(longest.length);
    report.path_count = longest.paths.len();
    report.complete = longest.complete;
    report.bound_submain = bound_submain(kappa, longest.length).ok();
    if !longest.complete {
        report.verdicts = Verdicts::all(Verdict::Incomplete);
        if kappa == 0 {
            report.verdicts = Verdicts::all(Verdict::Vacuous);
        }
        return report;
    }
    let intersection = longest
        .min_pairwise_intersection()
        .expect("complete enumeration of a non-empty graph");
    let l = intersection.min_shared;
    report.min_shared = Some(l);
    if kappa == 0 {
        return report;
    }
    report.verdicts = Verdicts {
        hippchen: match judge(report.bound_hippchen, l) {
            v if kappa <= PROVEN_HIPPCHEN_MAX_K => v,
            Verdict::Fail => Verdict::ConjecturalFail,
            _ => Verdict::Conjectural,
        },
        main: judge(report.bound_main, l),
        gutierrez: judge(report.bound_gutierrez, l),
        submain: report.bound_submain.map_or(Verdict::Vacuous, |b| judge(b, l)),
    };
    if report.verdicts.any_failure() {
        report.witness = Some(intersection.witness);
    }
    report
}

/// Flat record shared by the JSONL and CSV writers, in CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub graph: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub kappa: Option<usize>,
    pub longest: Option<usize>,
    pub path_count: Option<usize>,
    pub min_shared: Option<usize>,
    pub bound_hippchen: Option<i64>,
    pub bound_main: Option<i64>,
    pub bound_gutierrez: Option<i64>,
    pub bound_submain: Option<i64>,
    pub verdict_hippchen: Verdict,
    pub verdict_main: Verdict,
    pub verdict_gutierrez: Verdict,
    pub verdict_submain: Verdict,
    pub hippchen_tight: Option<bool>,
    pub witness_p: Option<String>,
    pub witness_q: Option<String>,
    pub error: Option<String>,
}

impl ReportRow {
    /// Header of the CSV output.
    pub const COLUMNS: [&'static str; 19] = [
        "graph",
        "n",
        "m",
        "kappa",
        "longest",
        "path_count",
        "min_shared",
        "bound_hippchen",
        "bound_main",
        "bound_gutierrez",
        "bound_submain",
        "verdict_hippchen",
        "verdict_main",
        "verdict_gutierrez",
        "verdict_submain",
        "hippchen_tight",
        "witness_p",
        "witness_q",
        "error",
    ];

    /// A row for an input that could not be checked.
    pub fn error(graph: impl Into<String>, message: impl Into<String>) -> Self {
        ReportRow {
            graph: graph.into(),
            n: None,
            m: None,
            kappa: None,
            longest: None,
            path_count: None,
            min_shared: None,
            bound_hippchen: None,
            bound_main: None,
            bound_gutierrez: None,
            bound_submain: None,
            verdict_hippchen: Verdict::Error,
            verdict_main: Verdict::Error,
            verdict_gutierrez: Verdict::Error,
            verdict_submain: Verdict::Error,
            hippchen_tight: None,
            witness_p: None,
            witness_q: None,
            error: Some(message.into()),
        }
    }

    pub fn verdicts(&self) -> [(&'static str, Verdict); 4] {
        [
            ("hippchen", self.verdict_hippchen),
            ("main", self.verdict_main),
            ("gutierrez", self.verdict_gutierrez),
            ("submain", self.verdict_submain),
        ]
    }

    pub fn is_failure(&self) -> bool {
        self.verdicts().iter().any(|(_, v)| v.is_failure())
    }

    pub fn is_error(&self) -> bool {
        self.error.is_some()
    }
}

impl From<&CheckReport> for ReportRow {
    fn from(r: &CheckReport) -> Self {
        ReportRow {
            graph: r.graph.clone(),
            n: Some(r.n),
            m: Some(r.m),
            kappa: Some(r.kappa),
            longest: r.longest,
            path_count: Some(r.path_count),
            min_shared: r.min_shared,
            bound_hippchen: Some(r.bound_hippchen),
            bound_main: Some(r.bound_main),
            bound_gutierrez: Some(r.bound_gutierrez),
            bound_submain: r.bound_submain,
            verdict_hippchen: r.verdicts.hippchen,
            verdict_main: r.verdicts.main,
            verdict_gutierrez: r.verdicts.gutierrez,
            verdict_submain: r.verdicts.submain,
            hippchen_tight: r.hippchen_tight(),
            witness_p: r.witness.as_ref().map(|w| w.p.to_string()),
            witness_q: r.witness.as_ref().map(|w| w.q.to_string()),
            error: None,
        }
    }
}
