use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};
use tricent::analysis::{
    cycle_index_fiedler, rank_correlation, removal_experiment, triangle_importance,
};
use tricent::centrality::{
    atec, atec_per_component, betweenness_centrality, degree_centrality, eigenvector_centrality,
    subgraph_centrality, triangle_centrality, CentralityReport, MeasureKind,
};
use tricent::graph::{compare_labels, load_edge_list};
use tricent::{vertex_stats, Graph, LoadOptions, SolverOptions, TriangleSet};

use crate::args::{
    CentralityArgs, CompareArgs, ConnectivityArgs, Format, SolverArgs, StatsArgs, SweepArgs,
    TrianglesArgs,
};
use crate::error::{CliError, CliResult};
use crate::format::{self, fmt_float, Context};
use crate::svg;

pub struct Dataset {
    pub graph: Graph,
    pub hash: String,
}

pub fn load(path: &Path) -> CliResult<Dataset> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    let loaded = load_edge_list(&bytes[..], LoadOptions::default())
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    if loaded.duplicates > 0 {
        eprintln!("warning: ignored {} duplicate edge(s)", loaded.duplicates);
    }
    Ok(Dataset {
        graph: loaded.graph,
        hash: hex::encode(Sha256::digest(&bytes)),
    })
}

fn solver_options(solver: &SolverArgs) -> SolverOptions {
    SolverOptions {
        tol: solver.tol,
        max_iter: solver.max_iter,
        ..SolverOptions::default()
    }
}

fn compute(
    graph: &Graph,
    triangles: &TriangleSet,
    kind: MeasureKind,
    alpha: Option<f64>,
    solver: &SolverArgs,
    per_component: bool,
) -> CliResult<CentralityReport> {
    let report = match kind {
        MeasureKind::Atec => {
            let alpha =
                alpha.ok_or_else(|| CliError::Usage("--alpha is required for atec".into()))?;
            let opts = solver_options(solver);
            if per_component {
                atec_per_component(graph, alpha, &opts)?
            } else {
                atec(graph, triangles, alpha, &opts)?
            }
        }
        MeasureKind::Degree => degree_centrality(graph),
        MeasureKind::Eigenvector => eigenvector_centrality(graph, solver.tol)?,
        MeasureKind::Triangle => triangle_centrality(graph, triangles),
        MeasureKind::Betweenness => betweenness_centrality(graph),
        MeasureKind::Subgraph => subgraph_centrality(graph)?,
    };
    for w in &report.warnings {
        eprintln!("warning: {}: {w}", report.measure.id());
    }
    Ok(report)
}

fn require_connected(graph: &Graph, per_component: bool) -> CliResult<()> {
    if per_component {
        return Ok(());
    }
    graph.ensure_connected().map_err(|e| {
        CliError::Data(format!(
            "{e} (pass --per-component to score components separately)"
        ))
    })
}

fn emit(output: Option<&Path>, content: &str) -> CliResult<()> {
    match output {
        Some(path) => fs::write(path, content).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Data(format!("stdout: {e}")))
        }
    }
}

fn sorted_ids(graph: &Graph) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..graph.n()).collect();
    ids.sort_by(|&a, &b| compare_labels(graph.label(a), graph.label(b)));
    ids
}

pub fn centrality(args: &CentralityArgs) -> CliResult<()> {
    let data = load(&args.input.input)?;
    let graph = &data.graph;
    require_connected(graph, args.per_component)?;
    let triangles = TriangleSet::enumerate(graph);
    let reports = args
        .measure
        .iter()
        .map(|&kind| {
            compute(
                graph,
                &triangles,
                kind,
                args.alpha,
                &args.solver,
                args.per_component,
            )
        })
        .collect::<CliResult<Vec<_>>>()?;

    let ctx = Context {
        dataset_hash: &data.hash,
    };
    let format = args.output.format;
    let render = |r: &CentralityReport| match format {
        Format::Csv => format::report_csv(r),
        Format::Json => format::report_json(r, &ctx),
    };
    match (&args.output.output, reports.as_slice()) {
        (out, [single]) => emit(out.as_deref(), &render(single)?),
        (Some(dir), many) => {
            fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
            for r in many {
                let path = dir.join(format!("{}.{}", r.measure.id(), format.extension()));
                emit(Some(&path), &render(r)?)?;
            }
            Ok(())
        }
        (None, many) => {
            let text = match format {
                Format::Json => format::reports_json(many, &ctx)?,
                Format::Csv => many
                    .iter()
                    .map(render)
                    .collect::<CliResult<Vec<_>>>()?
                    .join("\n"),
            };
            emit(None, &text)
        }
    }
}

pub fn sweep(args: &SweepArgs) -> CliResult<()> {
    if args.alphas.len() < 2 {
        return Err(CliError::Usage("sweep needs at least two alphas".into()));
    }
    let data = load(&args.input.input)?;
    let graph = &data.graph;
    require_connected(graph, args.per_component)?;
    let triangles = TriangleSet::enumerate(graph);

    let reports: Vec<CliResult<CentralityReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = args
            .alphas
            .iter()
            .map(|&alpha| {
                let triangles = &triangles;
                scope.spawn(move || {
                    compute(
                        graph,
                        triangles,
                        MeasureKind::Atec,
                        Some(alpha),
                        &args.solver,
                        args.per_component,
                    )
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let reports = reports.into_iter().collect::<CliResult<Vec<_>>>()?;

    let mut header = vec![if args.top.is_some() { "rank" } else { "label" }.to_string()];
    header.extend(reports.iter().map(|r| r.measure.id()));
    let rows: Vec<Vec<String>> = match args.top {
        Some(k) => {
            let tops: Vec<Vec<&str>> = reports.iter().map(|r| r.top(k)).collect();
            (0..k.min(graph.n()))
                .map(|i| {
                    let mut row = vec![(i + 1).to_string()];
                    row.extend(tops.iter().map(|t| t[i].to_string()));
                    row
                })
                .collect()
        }
        None => sorted_ids(graph)
            .into_iter()
            .map(|v| {
                let mut row = vec![graph.label(v).to_string()];
                row.extend(reports.iter().map(|r| fmt_float(r.scores[v])));
                row
            })
            .collect(),
    };
    emit(args.output.as_deref(), &format::table_csv(&header, &rows)?)?;

    if let Some(path) = &args.svg {
        let series: Vec<(String, Vec<f64>)> = sorted_ids(graph)
            .into_iter()
            .map(|v| {
                (
                    graph.label(v).to_string(),
                    reports.iter().map(|r| r.scores[v]).collect(),
                )
            })
            .collect();
        emit(Some(path), &svg::sweep_plot(&args.alphas, &series))?;
    }
    Ok(())
}

pub fn triangles(args: &TrianglesArgs) -> CliResult<()> {
    let data = load(&args.input.input)?;
    let graph = &data.graph;
    require_connected(graph, false)?;
    let triangles = TriangleSet::enumerate(graph);
    let x = atec(graph, &triangles, args.alpha, &solver_options(&args.solver))?;
    let importance = triangle_importance(graph, &triangles, &x.scores, args.alpha)?;
    let cycle = if args.cycle_index {
        Some(cycle_index_fiedler(graph, &triangles, args.solver.tol)?)
    } else {
        None
    };
    for w in importance
        .warnings
        .iter()
        .chain(cycle.iter().flat_map(|c| &c.warnings))
    {
        eprintln!("warning: {w}");
    }
    let ctx = Context {
        dataset_hash: &data.hash,
    };
    let text = match args.output.format {
        Format::Csv => format::triangles_csv(&importance, cycle.as_ref(), args.top)?,
        Format::Json => format::triangles_json(
            &importance,
            cycle.as_ref(),
            args.top,
            args.alpha,
            args.solver.tol,
            &ctx,
        )?,
    };
    emit(args.output.output.as_deref(), &text)
}

pub fn connectivity(args: &ConnectivityArgs) -> CliResult<()> {
    let data = load(&args.input.input)?;
    let outcome = removal_experiment(&data.graph, &args.remove, args.mode.into())?;
    let text = if args.json {
        serde_json::to_string_pretty(&outcome)? + "\n"
    } else {
        let sizes: Vec<String> = outcome.sizes_after.iter().map(|s| s.to_string()).collect();
        format!(
            "removed: {}\nvertices: {} → {}\ncomponents: {} → {}\nsizes: {}\n",
            outcome.removed.join(" "),
            outcome.n_before,
            outcome.n_after,
            outcome.components_before,
            outcome.components_after,
            sizes.join(" ")
        )
    };
    emit(None, &text)
}

#[derive(Debug, Serialize)]
struct Summary {
    min: usize,
    median: f64,
    max: usize,
}

fn summarize(mut values: Vec<usize>) -> Summary {
    values.sort_unstable();
    let n = values.len();
    let median = if n % 2 == 1 {
        values[n / 2] as f64
    } else {
        (values[n / 2 - 1] + values[n / 2]) as f64 / 2.0
    };
    Summary {
        min: values[0],
        median,
        max: values[n - 1],
    }
}

pub fn stats(args: &StatsArgs) -> CliResult<()> {
    let data = load(&args.input.input)?;
    let graph = &data.graph;
    let stats = vertex_stats(graph, &TriangleSet::enumerate(graph));
    let summary = [
        (
            "degree",
            summarize(stats.iter().map(|s| s.degree).collect()),
        ),
        (
            "triangles",
            summarize(stats.iter().map(|s| s.triangles).collect()),
        ),
        (
            "neighbor_triangles",
            summarize(stats.iter().map(|s| s.neighbor_triangles).collect()),
        ),
    ];
    let ids = sorted_ids(graph);
    let text = match args.output.format {
        Format::Csv => {
            for (name, s) in &summary {
                eprintln!("{name}: min {}, median {}, max {}", s.min, s.median, s.max);
            }
            let header: Vec<String> = ["label", "degree", "triangles", "neighbor_triangles"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rows: Vec<Vec<String>> = ids
                .iter()
                .map(|&v| {
                    let s = &stats[v];
                    vec![
                        graph.label(v).to_string(),
                        s.degree.to_string(),
                        s.triangles.to_string(),
                        s.neighbor_triangles.to_string(),
                    ]
                })
                .collect();
            format::table_csv(&header, &rows)?
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                label: &'a str,
                #[serde(flatten)]
                stats: &'a tricent::VertexStats,
            }
            let rows: Vec<Row> = ids
                .iter()
                .map(|&v| Row {
                    label: graph.label(v),
                    stats: &stats[v],
                })
                .collect();
            let doc = serde_json::json!({
                "meta": { "dataset_hash": data.hash, "summary": {
                    "degree": summary[0].1,
                    "triangles": summary[1].1,
                    "neighbor_triangles": summary[2].1,
                } },
                "rows": rows,
            });
            serde_json::to_string_pretty(&doc)? + "\n"
        }
    };
    emit(args.output.output.as_deref(), &text)
}

pub fn compare(args: &CompareArgs) -> CliResult<()> {
    if args.measure.len() < 2 {
        return Err(CliError::Usage(
            "compare needs at least two measures".into(),
        ));
    }
    let data = load(&args.input.input)?;
    let graph = &data.graph;
    require_connected(graph, false)?;
    let triangles = TriangleSet::enumerate(graph);
    let reports = args
        .measure
        .iter()
        .map(|&kind| compute(graph, &triangles, kind, args.alpha, &args.solver, false))
        .collect::<CliResult<Vec<_>>>()?;

    let names: Vec<String> = reports.iter().map(|r| r.measure.id()).collect();
    let mut header = vec!["measure".to_string()];
    header.extend(names.iter().cloned());
    let mut rows = Vec::with_capacity(reports.len());
    for (a, name) in reports.iter().zip(&names) {
        let mut row = vec![name.clone()];
        for b in &reports {
            row.push(fmt_float(rank_correlation(a, b, args.method.into())?));
        }
        rows.push(row);
    }
    emit(args.output.as_deref(), &format::table_csv(&header, &rows)?)?;

    if let Some(path) = &args.svg {
        let columns: Vec<Vec<f64>> = reports
            .iter()
            .map(|r| r.unit_scores.clone().unwrap_or_else(|| r.scores.clone()))
            .collect();
        emit(Some(path), &svg::scatter_matrix(&names, &columns))?;
    }
    Ok(())
}
