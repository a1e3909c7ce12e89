use std::collections::HashMap;
use std::str::FromStr;

use serde::Serialize;

use crate::centrality::{CentralityReport, TIE_TOLERANCE};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrelationMethod {
    Pearson,
    Spearman,
    /// Kendall's tau-b.
    Kendall,
}

impl FromStr for CorrelationMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pearson" => Ok(Self::Pearson),
            "spearman" => Ok(Self::Spearman),
            "kendall" => Ok(Self::Kendall),
            other => Err(Error::InvalidArgument(format!(
                "unknown correlation method {other:?}"
            ))),
        }
    }
}

/// Correlation between two reports over the same vertex set, matched by label.
pub fn rank_correlation(
    a: &CentralityReport,
    b: &CentralityReport,
    method: CorrelationMethod,
) -> Result<f64> {
    if a.labels.len() != b.labels.len() {
        return Err(Error::DimensionMismatch {
            expected: a.labels.len(),
            actual: b.labels.len(),
        });
    }
    let position: HashMap<&str, usize> = b
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let aligned = a
        .labels
        .iter()
        .map(|l| {
            position
                .get(l.as_str())
                .map(|&i| b.scores[i])
                .ok_or_else(|| Error::UnknownLabel(l.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    correlation(&a.scores, &aligned, method)
}

pub fn correlation(x: &[f64], y: &[f64], method: CorrelationMethod) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            actual: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(Error::UndefinedCorrelation(
            "fewer than two observations".into(),
        ));
    }
    match method {
        CorrelationMethod::Pearson => pearson(x, y),
        CorrelationMethod::Spearman => pearson(&average_ranks(x), &average_ranks(y)),
        CorrelationMethod::Kendall => kendall_tau_b(x, y),
    }
}

fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation("constant score vector".into()));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Fractional ranks (1-based); values within the tie tolerance of a run's
/// first value share the run's mean rank.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] - values[order[start]] <= TIE_TOLERANCE {
            end += 1;
        }
        let mean = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = mean;
        }
        start = end;
    }
    ranks
}

fn sign_with_ties(d: f64) -> i64 {
    if d.abs() <= TIE_TOLERANCE {
        0
    } else if d > 0.0 {
        1
    } else {
        -1
    }
}

fn kendall_tau_b(x: &[f64], y: &[f64]) -> Result<f64> {
    let n = x.len();
    let (mut concordant, mut discordant, mut ties_x, mut ties_y) = (0i64, 0i64, 0i64, 0i64);
    for i in 0..n {
        for j in i + 1..n {
            let sx = sign_with_ties(x[i] - x[j]);
            let sy = sign_with_ties(y[i] - y[j]);
            match (sx, sy) {
                (0, 0) => {}
                (0, _) => ties_x += 1,
                (_, 0) => ties_y += 1,
                _ if sx == sy => concordant += 1,
                _ => discordant += 1,
            }
        }
    }
    let nx = (concordant + discordant + ties_y) as f64;
    let ny = (concordant + discordant + ties_x) as f64;
    if nx == 0.0 || ny == 0.0 {
        return Err(Error::UndefinedCorrelation("constant score vector".into()));
    }
    Ok(((concordant - discordant) as f64 / (nx * ny).sqrt()).clamp(-1.0, 1.0))
}
