use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{compare_labels, Graph};

/// Scores closer than this share a tie group.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Measure {
    Atec { alpha: f64 },
    Degree,
    Eigenvector,
    Triangle,
    Betweenness,
    Subgraph,
}

/// Measure kinds as named on the command line; alpha is supplied separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MeasureKind {
    Atec,
    Degree,
    Eigenvector,
    Triangle,
    Betweenness,
    Subgraph,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 6] = [
        MeasureKind::Atec,
        MeasureKind::Degree,
        MeasureKind::Eigenvector,
        MeasureKind::Triangle,
        MeasureKind::Betweenness,
        MeasureKind::Subgraph,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            MeasureKind::Atec => "atec",
            MeasureKind::Degree => "dc",
            MeasureKind::Eigenvector => "ec",
            MeasureKind::Triangle => "tc",
            MeasureKind::Betweenness => "bc",
            MeasureKind::Subgraph => "sc",
        }
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "atec" => Ok(MeasureKind::Atec),
            "dc" | "degree" => Ok(MeasureKind::Degree),
            "ec" | "eigenvector" => Ok(MeasureKind::Eigenvector),
            "tc" | "triangle" => Ok(MeasureKind::Triangle),
            "bc" | "betweenness" => Ok(MeasureKind::Betweenness),
            "sc" | "subgraph" => Ok(MeasureKind::Subgraph),
            other => Err(Error::InvalidArgument(format!("unknown measure {other:?}"))),
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl Measure {
    pub fn kind(&self) -> MeasureKind {
        match self {
            Measure::Atec { .. } => MeasureKind::Atec,
            Measure::Degree => MeasureKind::Degree,
            Measure::Eigenvector => MeasureKind::Eigenvector,
            Measure::Triangle => MeasureKind::Triangle,
            Measure::Betweenness => MeasureKind::Betweenness,
            Measure::Subgraph => MeasureKind::Subgraph,
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match self {
            Measure::Atec { alpha } => Some(*alpha),
            _ => None,
        }
    }

    /// Identifier such as `atec-a0.6` or `bc`.
    pub fn id(&self) -> String {
        match self {
            Measure::Atec { alpha } => format!("atec-a{alpha}"),
            other => other.kind().short_name().to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    UnitEuclidean,
    Raw,
    /// Unit Euclidean norm within each connected component.
    PerComponentUnit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankEntry {
    pub vertex: usize,
    /// 1-based position in the ranking.
    pub rank: usize,
    /// 1-based tie group; equal scores share a group.
    pub tie_group: usize,
}

/// Solver diagnostics carried by iterative measures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Diagnostics {
    pub eigenvalue: f64,
    pub tolerance: f64,
    pub iterations: usize,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentralityReport {
    pub measure: Measure,
    pub labels: Vec<String>,
    /// Scores indexed by internal vertex id.
    pub scores: Vec<f64>,
    pub normalization: Normalization,
    /// Unit-Euclidean rescaling of raw scores, for measures reported both ways.
    pub unit_scores: Option<Vec<f64>>,
    pub ranking: Vec<RankEntry>,
    pub diagnostics: Option<Diagnostics>,
    pub warnings: Vec<String>,
}

impl CentralityReport {
    pub fn new(
        graph: &Graph,
        measure: Measure,
        scores: Vec<f64>,
        normalization: Normalization,
    ) -> Self {
        let ranking = rank_scores(&scores, graph.labels(), TIE_TOLERANCE);
        Self {
            measure,
            labels: graph.labels().to_vec(),
            scores,
            normalization,
            unit_scores: None,
            ranking,
            diagnostics: None,
            warnings: Vec::new(),
        }
    }

    pub fn with_unit_column(mut self) -> Self {
        self.unit_scores = Some(unit_normalize(&self.scores));
        self
    }

    pub fn score_of(&self, label: &str) -> Option<f64> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.scores[i])
    }

    pub fn unit_score_of(&self, label: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l == label)?;
        self.unit_scores.as_ref().map(|u| u[i])
    }

    /// Labels of the first `k` ranked vertices.
    pub fn top(&self, k: usize) -> Vec<&str> {
        self.ranking
            .iter()
            .take(k)
            .map(|e| self.labels[e.vertex].as_str())
            .collect()
    }

    /// Position (1-based) of each vertex, indexed by id.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.scores.len()];
        for e in &self.ranking {
            pos[e.vertex] = e.rank;
        }
        pos
    }
}

/// Orders vertices by descending score. Scores within `tol` of a group's
/// leading score join that group; inside a group vertices are ordered by
/// label (numeric labels numerically).
pub fn rank_scores(scores: &[f64], labels: &[String], tol: f64) -> Vec<RankEntry> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));

    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut leader = f64::NAN;
    for v in order {
        match groups.last_mut() {
            Some(group) if leader - scores[v] <= tol => group.push(v),
            _ => {
                leader = scores[v];
                groups.push(vec![v]);
            }
        }
    }

    let mut ranking = Vec::with_capacity(scores.len());
    for (g, mut group) in groups.into_iter().enumerate() {
        group.sort_by(|&a, &b| match compare_labels(&labels[a], &labels[b]) {
            Ordering::Equal => a.cmp(&b),
            other => other,
        });
        for v in group {
            ranking.push(RankEntry {
                vertex: v,
                rank: ranking.len() + 1,
                tie_group: g + 1,
            });
        }
    }
    ranking
}

/// Rescales to unit Euclidean norm; an all-zero vector is returned unchanged.
pub fn unit_normalize(values: &[f64]) -> Vec<f64> {
    let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        values.to_vec()
    } else {
        values.iter().map(|v| v / norm).collect()
    }
}
