//! Static SVG plots: axes, polylines and scatter points only.

use std::fmt::Write;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN: f64 = 50.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    if !lo.is_finite() {
        (0.0, 1.0)
    } else if hi - lo < 1e-12 {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

fn scale(v: f64, (lo, hi): (f64, f64), start: f64, end: f64) -> f64 {
    start + (v - lo) / (hi - lo) * (end - start)
}

fn header(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
}

/// One polyline per series: score against alpha.
pub fn sweep_plot(alphas: &[f64], series: &[(String, Vec<f64>)]) -> String {
    let mut out = String::new();
    header(&mut out, WIDTH, HEIGHT);
    let xr = range(alphas.iter().copied());
    let yr = range(series.iter().flat_map(|(_, s)| s.iter().copied()));
    let (x0, x1, y0, y1) = (MARGIN, WIDTH - MARGIN, HEIGHT - MARGIN, MARGIN);
    let _ = writeln!(
        out,
        r#"<path d="M{x0} {y1} L{x0} {y0} L{x1} {y0}" stroke="black" fill="none"/>"#
    );
    for (v, anchor, x) in [(xr.0, "start", x0), (xr.1, "end", x1)] {
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{}" text-anchor="{anchor}">{v}</text>"#,
            y0 + 16.0
        );
    }
    for (v, y) in [(yr.0, y0), (yr.1, y1)] {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{y:.2}" text-anchor="end">{v:.4}</text>"#,
            x0 - 4.0
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">alpha</text>"#,
        WIDTH / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        out,
        r#"<text x="14" y="{}" transform="rotate(-90 14 {})" text-anchor="middle">score</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    for (i, (label, values)) in series.iter().enumerate() {
        let points: Vec<String> = alphas
            .iter()
            .zip(values)
            .map(|(&a, &s)| format!("{:.2},{:.2}", scale(a, xr, x0, x1), scale(s, yr, y0, y1)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" stroke="{}" fill="none"><title>{}</title></polyline>"#,
            points.join(" "),
            PALETTE[i % PALETTE.len()],
            escape(label)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Pairwise scatter plots; measure names on the diagonal.
pub fn scatter_matrix(names: &[String], columns: &[Vec<f64>]) -> String {
    let k = names.len();
    let cell = 140.0;
    let pad = 8.0;
    let size = cell * k as f64;
    let mut out = String::new();
    header(&mut out, size, size);
    let ranges: Vec<(f64, f64)> = columns.iter().map(|c| range(c.iter().copied())).collect();
    for row in 0..k {
        for col in 0..k {
            let (ox, oy) = (col as f64 * cell, row as f64 * cell);
            let _ = writeln!(
                out,
                r#"<rect x="{ox}" y="{oy}" width="{cell}" height="{cell}" fill="none" stroke="black"/>"#
            );
            if row == col {
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">{}</text>"#,
                    ox + cell / 2.0,
                    oy + cell / 2.0,
                    escape(&names[row])
                );
                continue;
            }
            for (x, y) in columns[col].iter().zip(&columns[row]) {
                let px = scale(*x, ranges[col], ox + pad, ox + cell - pad);
                let py = scale(*y, ranges[row], oy + cell - pad, oy + pad);
                let _ = writeln!(
                    out,
                    r##"<circle cx="{px:.2}" cy="{py:.2}" r="1.8" fill="#1f77b4"/>"##
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_plot_has_one_polyline_per_series() {
        let svg = sweep_plot(
            &[1.0, 0.5],
            &[("a".into(), vec![0.1, 0.2]), ("b<".into(), vec![0.3, 0.3])],
        );
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("b&lt;"));
    }

    #[test]
    fn scatter_matrix_grid() {
        let svg = scatter_matrix(
            &["x".into(), "y".into()],
            &[vec![1.0, 2.0, 3.0], vec![3.0, 1.0, 2.0]],
        );
        assert_eq!(svg.matches("<rect").count(), 5);
        assert_eq!(svg.matches("<circle").count(), 6);
    }
}
