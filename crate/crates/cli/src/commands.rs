//! One function per subcommand. Each returns the text for standard output
//! and whether a check failed; `Err` is an input or usage problem.

use std::path::Path;

use serde::Serialize;
use tricut_core::counts::{check_bigsum_identity, check_cauchy_schwarz, config_counts, f_total};
use tricut_core::cut::{
    derandomized_cut_traced, exact_expectation, exhaustive_distribution, random_cut, CutResult, DerandLevel, RunTrace,
};
use tricut_core::extremal::{
    check_local_conditions, clebsch, is_cjoin_of_cbb, is_join_of_cbb, make_cjoin_trigraph, make_join, JoinSpec,
    LocalConditions,
};
use tricut_core::graph6::write_graph6;
use tricut_core::oracles::{alpha1, tau1, tau2, tau_b, Witness};
use tricut_core::rational::{format_ratio, int, quarter_square, ratio, Rational};
use tricut_core::sweep::{ctau_scan, sweep_theorem_with, sweep_trigraph, SweepCounts, SweepOptions, SweepViolation};
use tricut_core::trigraph::parse_trigraph_json;
use tricut_core::{Graph, Trigraph, TrigraphCandidate, Violation};

use crate::input::{graph_to_trigraph, parse_input, read_graph, read_input, read_text, read_trigraph, Input, Split};
use crate::{CutMode, Format, OracleKind, Outcome};

type Run = Result<Outcome, String>;

/// Smallest `tau_2 / tau_1` that does not count as a finding.
const CTAU_EXPECTED_MIN: (i64, i64) = (5, 3);

fn json<T: Serialize>(value: &T, failed: bool) -> Run {
    let mut stdout = serde_json::to_string(value).map_err(|e| e.to_string())?;
    stdout.push('\n');
    Ok(Outcome { stdout, failed })
}

fn csv_rows<T: Serialize>(rows: impl IntoIterator<Item = T>, failed: bool) -> Run {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).map_err(|e| e.to_string())?;
    }
    let bytes = writer.into_inner().map_err(|e| e.to_string())?;
    Ok(Outcome {
        stdout: String::from_utf8(bytes).map_err(|e| e.to_string())?,
        failed,
    })
}

fn emit<T: Serialize>(value: &T, format: Format, failed: bool) -> Run {
    match format {
        Format::Json => json(value, failed),
        Format::Csv => csv_rows([value], failed),
    }
}

fn json_only(format: Format, command: &str) -> Result<(), String> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(format!("{command} has no CSV form; use --format json")),
    }
}

fn ratio_string(r: &Rational) -> String {
    format_ratio(r)
}

#[derive(Serialize)]
struct ValidateOut {
    valid: bool,
    n: usize,
    violations: Vec<Violation>,
}

pub fn validate(path: Option<&Path>, split: Split, format: Format) -> Run {
    json_only(format, "validate")?;
    let text = read_text(path)?;
    let candidate = if text.trim_start().starts_with('{') {
        parse_trigraph_json(&text).map_err(|e| e.to_string())?
    } else {
        let Input::Graph(g) = parse_input(&text)? else {
            unreachable!("non-JSON input parses as a graph")
        };
        match split {
            Split::All => TrigraphCandidate::from_edges(g.n(), &[], &g.edges()).map_err(|e| e.to_string())?,
            Split::Alpha1 => graph_to_trigraph(&g, split)?.to_candidate(),
        }
    };
    let violations = candidate.validate();
    json(
        &ValidateOut {
            valid: violations.is_empty(),
            n: candidate.n(),
            violations: violations.clone(),
        },
        !violations.is_empty(),
    )
}

#[derive(Serialize)]
struct CountsOut {
    n: usize,
    #[serde(rename = "C")]
    c: usize,
    #[serde(rename = "S")]
    s: usize,
    #[serde(rename = "P4")]
    p4: u64,
    #[serde(rename = "C4")]
    c4: u64,
    #[serde(rename = "K13")]
    k13: u64,
    #[serde(rename = "D")]
    d: u64,
    #[serde(rename = "R")]
    r: u64,
    cs_s_slack: i64,
    cs_n_slack: i64,
    bigsum_lhs: String,
    bigsum_rhs: String,
    bigsum_equal: bool,
    #[serde(rename = "F")]
    f: String,
    f_bound: u64,
    f_ok: bool,
}

pub fn counts(path: Option<&Path>, split: Split, format: Format) -> Run {
    let t = read_trigraph(path, split)?;
    let k = config_counts(&t);
    let cs = check_cauchy_schwarz(&t);
    let big = check_bigsum_identity(&t);
    let ft = f_total(&t);
    let failed = !(cs.holds() && big.equal && ft.ok);
    let out = CountsOut {
        n: t.n(),
        c: t.c_count(),
        s: t.s_count(),
        p4: k.p4,
        c4: k.c4,
        k13: k.k13,
        d: k.d,
        r: k.r,
        cs_s_slack: cs.cs_s_slack,
        cs_n_slack: cs.cs_n_slack,
        bigsum_lhs: ratio_string(&big.lhs),
        bigsum_rhs: ratio_string(&big.rhs),
        bigsum_equal: big.equal,
        f: ratio_string(&ft.f),
        f_bound: ft.bound,
        f_ok: ft.ok,
    };
    emit(&out, format, failed)
}

#[derive(Serialize)]
struct RandomOut {
    seed: u64,
    #[serde(flatten)]
    cut: CutResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<RunTrace>,
}

#[derive(Serialize)]
struct DerandOut {
    #[serde(flatten)]
    cut: CutResult,
    levels_within_bound: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    levels: Option<Vec<DerandLevel>>,
}

#[derive(Serialize)]
struct ExactOut {
    expected_bar_e: String,
    #[serde(rename = "S")]
    s: usize,
    bound: String,
    ok: bool,
}

#[derive(Serialize)]
struct DistributionOut {
    distribution: tricut_core::cut::Distribution,
}

#[derive(Serialize)]
struct DistributionRow {
    bar_e: usize,
    probability: String,
}

pub fn cut(path: Option<&Path>, split: Split, mode: CutMode, seed: u64, trace: bool, format: Format) -> Run {
    let t = read_trigraph(path, split)?;
    match mode {
        CutMode::Random => {
            json_only(format, "cut --mode random")?;
            let (cut, run) = random_cut(&t, seed);
            json(
                &RandomOut {
                    seed,
                    cut,
                    trace: trace.then_some(run),
                },
                false,
            )
        }
        CutMode::Derandomized => {
            json_only(format, "cut --mode derandomized")?;
            let (cut, levels) = derandomized_cut_traced(&t);
            let within = levels.levels.iter().all(DerandLevel::within_bound);
            let failed = !(cut.certified && within);
            json(
                &DerandOut {
                    cut,
                    levels_within_bound: within,
                    levels: trace.then_some(levels.levels),
                },
                failed,
            )
        }
        CutMode::ExactE => {
            let e = exact_expectation(&t).map_err(|e| e.to_string())?;
            let bound = quarter_square(t.n());
            let ok = &e + int(t.s_count() as i64) <= bound;
            let out = ExactOut {
                expected_bar_e: format_ratio(&e),
                s: t.s_count(),
                bound: format_ratio(&bound),
                ok,
            };
            emit(&out, format, !ok)
        }
        CutMode::Distribution => {
            let d = exhaustive_distribution(&t).map_err(|e| e.to_string())?;
            match format {
                Format::Json => json(&DistributionOut { distribution: d }, false),
                Format::Csv => csv_rows(
                    d.iter().map(|(bar_e, p)| DistributionRow {
                        bar_e,
                        probability: format_ratio(p),
                    }),
                    false,
                ),
            }
        }
    }
}

#[derive(Serialize)]
struct OracleOut {
    what: &'static str,
    n: usize,
    edges: usize,
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    via_identity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
}

pub fn oracle(path: Option<&Path>, what: OracleKind, format: Format) -> Run {
    let g = read_graph(path)?;
    let err = |e: tricut_core::Error| e.to_string();
    let (name, result, identity) = match what {
        OracleKind::Alpha1 => ("alpha1", alpha1(&g).map_err(err)?, None),
        OracleKind::Taub => ("tau_b", tau_b(&g).map_err(err)?, None),
        OracleKind::Tau1 => ("tau1", tau1(&g).map_err(err)?, None),
        OracleKind::Tau2 => {
            let r = tau2(&g).map_err(err)?;
            ("tau2", r.direct, Some((r.via_identity, r.agree)))
        }
    };
    let failed = identity.is_some_and(|(_, agree)| !agree);
    let out = OracleOut {
        what: name,
        n: g.n(),
        edges: g.edge_count(),
        value: result.value,
        via_identity: identity.map(|(v, _)| v),
        agree: identity.map(|(_, a)| a),
        // The witness does not fit a CSV row.
        witness: (format == Format::Json).then_some(result.witness),
    };
    emit(&out, format, failed)
}

#[derive(Serialize)]
struct SweepOut<'a> {
    #[serde(flatten)]
    counts: SweepCounts,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    witnesses: &'a [SweepViolation],
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    local_condition_mismatches: &'a [String],
}

pub fn sweep(n: usize, trigraphs: bool, canonical: bool, long: bool, format: Format) -> Run {
    let err = |e: tricut_core::Error| e.to_string();
    if trigraphs {
        if canonical {
            return Err("--canonical applies to graph sweeps only".into());
        }
        let report = sweep_trigraph(n).map_err(err)?;
        let failed = !report.ok();
        return match format {
            Format::Csv => Ok(Outcome {
                stdout: report.to_csv(),
                failed,
            }),
            Format::Json => json(
                &SweepOut {
                    counts: report.counts,
                    witnesses: &report.violations,
                    local_condition_mismatches: &report.local_condition_mismatches,
                },
                failed,
            ),
        };
    }
    let options = SweepOptions {
        canonical_only: canonical,
        allow_long: long,
    };
    let report = sweep_theorem_with(n, options).map_err(err)?;
    let failed = !report.ok();
    match format {
        Format::Csv => Ok(Outcome {
            stdout: report.to_csv(),
            failed,
        }),
        Format::Json => json(
            &SweepOut {
                counts: report.counts,
                witnesses: &report.violations,
                local_condition_mismatches: &[],
            },
            failed,
        ),
    }
}

#[derive(Serialize)]
struct CtauOut {
    n_max: usize,
    classes: usize,
    min_ratio: Option<String>,
    argmin: Option<String>,
    expected_at_least: String,
    ok: bool,
}

pub fn scan_ctau(n: usize, format: Format) -> Run {
    let scan = ctau_scan(n).map_err(|e| e.to_string())?;
    let expected = ratio(CTAU_EXPECTED_MIN.0, CTAU_EXPECTED_MIN.1);
    let ok = scan.min_ratio.as_ref().is_none_or(|m| *m >= expected);
    match format {
        Format::Csv => Ok(Outcome {
            stdout: scan.to_csv(),
            failed: !ok,
        }),
        Format::Json => json(
            &CtauOut {
                n_max: n,
                classes: scan.rows.len(),
                min_ratio: scan.min_ratio.as_ref().map(format_ratio),
                argmin: scan.argmin.clone(),
                expected_at_least: format_ratio(&expected),
                ok,
            },
            !ok,
        ),
    }
}

fn parse_spec(text: &str) -> Result<JoinSpec, String> {
    text.parse().map_err(|e: tricut_core::Error| e.to_string())
}

pub fn generate(join: Option<&str>, cjoin: Option<&str>, clebsch_graph: bool, out: Option<&Path>) -> Run {
    let graph6 = |g: &Graph| write_graph6(g).map(|s| s + "\n").map_err(|e| e.to_string());
    let text = match (join, cjoin, clebsch_graph) {
        (Some(spec), _, _) => graph6(&make_join(&parse_spec(spec)?))?,
        (_, Some(spec), _) => make_cjoin_trigraph(&parse_spec(spec)?).to_json() + "\n",
        _ => graph6(&clebsch())?,
    };
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok(Outcome {
                stdout: String::new(),
                failed: false,
            })
        }
        None => Ok(Outcome {
            stdout: text,
            failed: false,
        }),
    }
}

#[derive(Serialize)]
struct GraphExtremalOut {
    kind: &'static str,
    n: usize,
    alpha1: usize,
    tau_b: usize,
    slack: String,
    extremal: bool,
    join: Option<JoinSpec>,
}

#[derive(Serialize)]
struct TrigraphExtremalOut {
    kind: &'static str,
    n: usize,
    #[serde(rename = "S")]
    s: usize,
    expected_bar_e: String,
    slack: String,
    extremal: bool,
    local_conditions: LocalConditions,
    cjoin: Option<JoinSpec>,
}

pub fn check_extremal(path: Option<&Path>, format: Format) -> Run {
    json_only(format, "check-extremal")?;
    let err = |e: tricut_core::Error| e.to_string();
    match read_input(path)? {
        Input::Graph(g) => {
            let a = alpha1(&g).map_err(err)?.value;
            let b = tau_b(&g).map_err(err)?.value;
            let slack = quarter_square(g.n()) - int((a + b) as i64);
            let extremal = slack == int(0);
            let join = is_join_of_cbb(&g);
            let failed = slack < int(0) || extremal != join.is_some();
            json(
                &GraphExtremalOut {
                    kind: "graph",
                    n: g.n(),
                    alpha1: a,
                    tau_b: b,
                    slack: format_ratio(&slack),
                    extremal,
                    join,
                },
                failed,
            )
        }
        Input::Trigraph(t) => trigraph_extremal(&t),
    }
}

fn trigraph_extremal(t: &Trigraph) -> Run {
    let e = exact_expectation(t).map_err(|e| e.to_string())?;
    let slack = quarter_square(t.n()) - &e - int(t.s_count() as i64);
    let extremal = slack == int(0);
    let local = check_local_conditions(t);
    let cjoin = is_cjoin_of_cbb(t);
    let failed = slack < int(0) || (extremal && !(local.all && cjoin.is_some())) || local.all != cjoin.is_some();
    json(
        &TrigraphExtremalOut {
            kind: "trigraph",
            n: t.n(),
            s: t.s_count(),
            expected_bar_e: format_ratio(&e),
            slack: format_ratio(&slack),
            extremal,
            local_conditions: local,
            cjoin,
        },
        failed,
    )
}
