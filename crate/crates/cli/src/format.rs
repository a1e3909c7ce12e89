//! CSV and JSON rendering. Floats carry 10 significant digits in both.

use serde::Serialize;
use tricent::analysis::{TriangleEntry, TriangleRanking};
use tricent::centrality::CentralityReport;

use crate::error::CliResult;

/// Rounds to 10 significant digits.
pub fn round10(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.9e}").parse().unwrap_or(v)
}

pub fn fmt_float(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let r = round10(v);
    if !r.is_finite() || (1e-5..1e15).contains(&r.abs()) {
        r.to_string()
    } else {
        format!("{r:e}")
    }
}

/// Everything a report needs besides the scores themselves.
pub struct Context<'a> {
    pub dataset_hash: &'a str,
}

#[derive(Serialize)]
struct ReportMeta<'a> {
    measure: String,
    alpha: Option<f64>,
    tolerance: Option<f64>,
    iterations: Option<usize>,
    residual: Option<f64>,
    eigenvalue: Option<f64>,
    normalization: tricent::centrality::Normalization,
    dataset_hash: &'a str,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    warnings: &'a [String],
}

#[derive(Serialize)]
struct ReportRow<'a> {
    label: &'a str,
    score: f64,
    rank: usize,
    tie_group: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    unit_score: Option<f64>,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    meta: ReportMeta<'a>,
    rows: Vec<ReportRow<'a>>,
}

fn report_rows(report: &CentralityReport) -> Vec<ReportRow<'_>> {
    report
        .ranking
        .iter()
        .map(|e| ReportRow {
            label: &report.labels[e.vertex],
            score: round10(report.scores[e.vertex]),
            rank: e.rank,
            tie_group: e.tie_group,
            unit_score: report.unit_scores.as_ref().map(|u| round10(u[e.vertex])),
        })
        .collect()
}

fn report_doc<'a>(report: &'a CentralityReport, ctx: &Context<'a>) -> ReportDoc<'a> {
    let diag = report.diagnostics;
    ReportDoc {
        meta: ReportMeta {
            measure: report.measure.id(),
            alpha: report.measure.alpha(),
            tolerance: diag.map(|d| d.tolerance),
            iterations: diag.map(|d| d.iterations),
            residual: diag.map(|d| round10(d.residual)),
            eigenvalue: diag.map(|d| round10(d.eigenvalue)),
            normalization: report.normalization,
            dataset_hash: ctx.dataset_hash,
            warnings: &report.warnings,
        },
        rows: report_rows(report),
    }
}

pub fn report_csv(report: &CentralityReport) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["label", "score", "rank", "tie_group"];
    if report.unit_scores.is_some() {
        header.push("unit_score");
    }
    w.write_record(&header)?;
    for row in report_rows(report) {
        let mut record = vec![
            row.label.to_string(),
            fmt_float(row.score),
            row.rank.to_string(),
            row.tie_group.to_string(),
        ];
        if let Some(u) = row.unit_score {
            record.push(fmt_float(u));
        }
        w.write_record(&record)?;
    }
    finish(w)
}

pub fn report_json(report: &CentralityReport, ctx: &Context<'_>) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(&report_doc(report, ctx))? + "\n")
}

/// Several reports as one JSON array.
pub fn reports_json(reports: &[CentralityReport], ctx: &Context<'_>) -> CliResult<String> {
    let docs: Vec<ReportDoc> = reports.iter().map(|r| report_doc(r, ctx)).collect();
    Ok(serde_json::to_string_pretty(&docs)? + "\n")
}

#[derive(Serialize)]
struct TriangleRow<'a> {
    v1: &'a str,
    v2: &'a str,
    v3: &'a str,
    score: f64,
    rank: usize,
}

impl<'a> From<&'a TriangleEntry> for TriangleRow<'a> {
    fn from(e: &'a TriangleEntry) -> Self {
        TriangleRow {
            v1: &e.labels[0],
            v2: &e.labels[1],
            v3: &e.labels[2],
            score: round10(e.score),
            rank: e.rank,
        }
    }
}

#[derive(Serialize)]
struct TriangleMeta<'a> {
    index: &'static str,
    alpha: f64,
    tolerance: f64,
    triangles: usize,
    dataset_hash: &'a str,
}

#[derive(Serialize)]
struct TriangleDoc<'a> {
    meta: TriangleMeta<'a>,
    rows: Vec<TriangleRow<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_index: Option<Vec<TriangleRow<'a>>>,
}

fn take(ranking: &TriangleRanking, top: Option<usize>) -> &[TriangleEntry] {
    let k = top
        .unwrap_or(ranking.entries.len())
        .min(ranking.entries.len());
    &ranking.entries[..k]
}

/// `v1,v2,v3,score,rank`, followed by `cycle_`-prefixed columns when a
/// cycle-index ranking is given. Row `i` holds position `i` of each ranking.
pub fn triangles_csv(
    importance: &TriangleRanking,
    cycle: Option<&TriangleRanking>,
    top: Option<usize>,
) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let base = ["v1", "v2", "v3", "score", "rank"];
    let mut header: Vec<String> = base.iter().map(|s| s.to_string()).collect();
    if cycle.is_some() {
        header.extend(base.iter().map(|s| format!("cycle_{s}")));
    }
    w.write_record(&header)?;
    let left = take(importance, top);
    let right = cycle.map(|c| take(c, top));
    for (i, e) in left.iter().enumerate() {
        let mut record = triangle_record(e);
        if let Some(r) = right {
            record.extend(triangle_record(&r[i]));
        }
        w.write_record(&record)?;
    }
    finish(w)
}

fn triangle_record(e: &TriangleEntry) -> Vec<String> {
    vec![
        e.labels[0].clone(),
        e.labels[1].clone(),
        e.labels[2].clone(),
        fmt_float(e.score),
        e.rank.to_string(),
    ]
}

pub fn triangles_json(
    importance: &TriangleRanking,
    cycle: Option<&TriangleRanking>,
    top: Option<usize>,
    alpha: f64,
    tolerance: f64,
    ctx: &Context<'_>,
) -> CliResult<String> {
    let doc = TriangleDoc {
        meta: TriangleMeta {
            index: "importance",
            alpha,
            tolerance,
            triangles: importance.len(),
            dataset_hash: ctx.dataset_hash,
        },
        rows: take(importance, top)
            .iter()
            .map(TriangleRow::from)
            .collect(),
        cycle_index: cycle.map(|c| take(c, top).iter().map(TriangleRow::from).collect()),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

/// Writes arbitrary rows with a header.
pub fn table_csv(header: &[String], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| crate::error::CliError::Data(format!("writing CSV: {e}")))?;
    Ok(String::from_utf8(bytes).expect("CSV built from UTF-8 strings"))
}
